//! Min-plus scalars and matrices, tropical determinants and rank, and
//! stable intersections of tropical hyperplanes and lines.

use crate::{parse_q, Error, Result, Q};
use num::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

/// An element of `ℚ ∪ {∞}`. The derived order puts `Inf` above every finite value.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TropScalar {
    Fin(Q),
    Inf,
}

use TropScalar::{Fin, Inf};

impl TropScalar {
    pub fn zero() -> Self {
        Fin(Q::zero())
    }

    pub fn int(n: i64) -> Self {
        Fin(crate::q(n))
    }

    pub fn is_inf(&self) -> bool {
        matches!(self, Inf)
    }

    pub fn fin(&self) -> Option<&Q> {
        match self {
            Fin(x) => Some(x),
            Inf => None,
        }
    }

    /// Classical sum, ∞ absorbing.
    pub fn plus(&self, other: &TropScalar) -> TropScalar {
        trop_add(self, other)
    }

    /// `k·self` for a nonnegative integer `k`, with `0·∞ = 0`.
    pub fn scale(&self, k: i64) -> TropScalar {
        match self {
            _ if k == 0 => TropScalar::zero(),
            Fin(x) => Fin(x * crate::q(k)),
            Inf if k > 0 => Inf,
            Inf => panic!("negative multiple of ∞"),
        }
    }

    /// `self − c` for finite `c`.
    pub fn minus_q(&self, c: &Q) -> TropScalar {
        match self {
            Fin(x) => Fin(x - c),
            Inf => Inf,
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "∞" | "Infinity" => Ok(Inf),
            t => parse_q(t).map(Fin),
        }
    }
}

impl fmt::Display for TropScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fin(x) => write!(f, "{x}"),
            Inf => write!(f, "inf"),
        }
    }
}

impl From<Q> for TropScalar {
    fn from(x: Q) -> Self {
        Fin(x)
    }
}

/// Tropical addition.
pub fn trop_min(a: &TropScalar, b: &TropScalar) -> TropScalar {
    if a <= b {
        a.clone()
    } else {
        b.clone()
    }
}

/// Tropical multiplication.
pub fn trop_add(a: &TropScalar, b: &TropScalar) -> TropScalar {
    match (a, b) {
        (Fin(x), Fin(y)) => Fin(x + y),
        _ => Inf,
    }
}

/// True iff the minimum occurs at least twice, or every entry is ∞.
pub fn min_attained_twice(v: &[TropScalar]) -> bool {
    let Some(m) = v.iter().min() else { return true };
    if m.is_inf() {
        return true;
    }
    v.iter().filter(|x| *x == m).count() >= 2
}

/// Shift so the first finite coordinate is 0.
pub fn normalize_projective(v: &[TropScalar]) -> Vec<TropScalar> {
    match v.iter().find_map(|x| x.fin().cloned()) {
        Some(c) => v.iter().map(|x| x.minus_q(&c)).collect(),
        None => v.to_vec(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<TropScalar>,
}

impl TropMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<TropScalar>) -> Result<Self> {
        if rows == 0 || cols == 0 || data.len() != rows * cols {
            return Err(Error::Dimension(format!("{rows}x{cols} matrix with {} entries", data.len())));
        }
        Ok(TropMatrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<TropScalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        TropMatrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let v = rows.iter().map(|r| r.iter().map(|&x| TropScalar::int(x)).collect()).collect();
        TropMatrix::from_rows(v).expect("rectangular")
    }

    pub fn get(&self, i: usize, j: usize) -> &TropScalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: TropScalar) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[TropScalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<TropScalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[TropScalar] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<TropScalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> TropMatrix {
        let data = rows.iter().flat_map(|&i| cols.iter().map(move |&j| self.get(i, j).clone())).collect();
        TropMatrix { rows: rows.len(), cols: cols.len(), data }
    }

    pub fn transpose(&self) -> TropMatrix {
        let data = (0..self.cols).flat_map(|j| (0..self.rows).map(move |i| self.get(i, j).clone())).collect();
        TropMatrix { rows: self.cols, cols: self.rows, data }
    }
}

/// Min-plus matrix product.
pub fn trop_mat_mul(a: &TropMatrix, b: &TropMatrix) -> Result<TropMatrix> {
    if a.cols != b.rows {
        return Err(Error::Dimension(format!("{}x{} times {}x{}", a.rows, a.cols, b.rows, b.cols)));
    }
    let mut data = Vec::with_capacity(a.rows * b.cols);
    for i in 0..a.rows {
        for k in 0..b.cols {
            let v = (0..a.cols).map(|j| trop_add(a.get(i, j), b.get(j, k))).min().unwrap();
            data.push(v);
        }
    }
    TropMatrix::new(a.rows, b.cols, data)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropDetResult {
    pub value: TropScalar,
    pub attaining_count: u64,
    pub singular: bool,
}

/// Largest size handled by the permutation brute force.
pub const DET_CAP: usize = 8;

/// Tropical determinant by enumerating all permutations.
pub fn trop_det(m: &TropMatrix) -> Result<TropDetResult> {
    if m.rows != m.cols {
        return Err(Error::Dimension(format!("determinant of {}x{} matrix", m.rows, m.cols)));
    }
    let n = m.rows;
    if n > DET_CAP {
        return Err(Error::Precondition(format!("size {n} exceeds brute-force cap {DET_CAP}")));
    }
    let mut best = Inf;
    let mut count = 0u64;
    let mut perm: Vec<usize> = (0..n).collect();
    let mut visit = |p: &[usize]| {
        let mut s = Q::zero();
        for (i, &j) in p.iter().enumerate() {
            match m.get(i, j) {
                Fin(x) => s += x,
                Inf => return,
            }
        }
        let s = Fin(s);
        match s.cmp(&best) {
            Ordering::Less => {
                best = s;
                count = 1;
            }
            Ordering::Equal => count += 1,
            Ordering::Greater => {}
        }
    };
    // Heap's algorithm
    let mut c = vec![0usize; n];
    visit(&perm);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            visit(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(TropDetResult { singular: count != 1, value: best, attaining_count: count })
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Largest size of a tropically nonsingular square submatrix.
pub fn tropical_rank(m: &TropMatrix) -> Result<usize> {
    if m.rows > DET_CAP || m.cols > DET_CAP {
        return Err(Error::Precondition("matrix exceeds brute-force cap".into()));
    }
    for k in (1..=m.rows.min(m.cols)).rev() {
        for rs in k_subsets(m.rows, k) {
            for cs in k_subsets(m.cols, k) {
                if !trop_det(&m.submatrix(&rs, &cs))?.singular {
                    return Ok(k);
                }
            }
        }
    }
    Ok(0)
}

/// Index of the unordered pair `{i, j}` (0-based, `i ≠ j`) in the
/// lexicographic list `01, 02, …, 0(m-1), 12, …`.
pub fn pair_index(m: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    debug_assert!(j < m && i != j);
    i * (2 * m - i - 1) / 2 + (j - i - 1)
}

/// All pairs `(i, j)`, `i < j < m`, in `pair_index` order.
pub fn pairs(m: usize) -> Vec<(usize, usize)> {
    (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).collect()
}

// ─── stable intersection ────────────────────────────────────────────────

/// Raw tropical Cramer point: coordinate `k` is the tropical determinant of
/// `C` with row `k` deleted. No genericity check.
pub fn hyperplane_cramer(c: &TropMatrix) -> Result<Vec<TropScalar>> {
    if c.rows < 2 || c.cols + 1 != c.rows {
        return Err(Error::Dimension(format!("need m x (m-1) coefficients, got {}x{}", c.rows, c.cols)));
    }
    let cols: Vec<usize> = (0..c.cols).collect();
    (0..c.rows)
        .map(|k| {
            let rows: Vec<usize> = (0..c.rows).filter(|&i| i != k).collect();
            trop_det(&c.submatrix(&rows, &cols)).map(|d| d.value)
        })
        .collect()
}

/// Whether every maximal minor of the `m × (m-1)` coefficient matrix is
/// tropically nonsingular, i.e. the hyperplanes meet in a single point.
pub fn hyperplanes_generic(c: &TropMatrix) -> Result<bool> {
    let cols: Vec<usize> = (0..c.cols).collect();
    for k in 0..c.rows {
        let rows: Vec<usize> = (0..c.rows).filter(|&i| i != k).collect();
        if trop_det(&c.submatrix(&rows, &cols))?.singular {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The intersection point of the `m-1` hyperplanes `min_k(c_kj + x_k)`
/// (attained twice) whose coefficient vectors are the columns of `c`,
/// normalised so the first coordinate is 0. Computed by tropical Cramer and
/// checked against the perturbation oracle.
pub fn stable_intersection_hyperplanes(c: &TropMatrix) -> Result<Vec<TropScalar>> {
    if c.rows < 2 || c.cols + 1 != c.rows {
        return Err(Error::Dimension(format!("need m x (m-1) coefficients, got {}x{}", c.rows, c.cols)));
    }
    if c.entries().iter().any(|x| x.is_inf()) {
        return Err(Error::Degenerate("infinite hyperplane coefficient".into()));
    }
    if !hyperplanes_generic(c)? {
        return Err(Error::Degenerate("hyperplanes do not meet in a single point".into()));
    }
    let x = normalize_projective(&hyperplane_cramer(c)?);
    let o = perturb::hyperplanes(c, ORACLE_SEED)?;
    if x != o {
        return Err(Error::Oracle(format!("cramer {x:?} vs perturbation {o:?}")));
    }
    Ok(x)
}

/// Support of a pair-indexed vector: indices with some finite pair.
pub fn pair_support(m: usize, xi: &[TropScalar]) -> Vec<usize> {
    (0..m).filter(|&i| (0..m).any(|j| j != i && !xi[pair_index(m, i, j)].is_inf())).collect()
}

/// `τ` with `τ_k = min_{j ∈ J, j ≠ k} ξ_jk` on the support `J` and ∞ off it,
/// checked against the perturbation oracle (projectively).
pub fn stable_intersection_line_h(m: usize, xi: &[TropScalar]) -> Result<Vec<TropScalar>> {
    if xi.len() != m * (m - 1) / 2 {
        return Err(Error::Dimension(format!("{} pair values for m = {m}", xi.len())));
    }
    let tau = line_h_formula(m, xi)?;
    let o = perturb::line_h(m, xi, ORACLE_SEED)?;
    if normalize_projective(&tau) != o {
        return Err(Error::Oracle(format!("formula {tau:?} vs perturbation {o:?}")));
    }
    Ok(tau)
}

/// The closed formula alone, without the oracle check.
pub fn line_h_formula(m: usize, xi: &[TropScalar]) -> Result<Vec<TropScalar>> {
    let support = pair_support(m, xi);
    if support.len() < 2 {
        return Err(Error::Precondition(format!("support {support:?} has fewer than two indices")));
    }
    Ok((0..m)
        .map(|k| {
            if !support.contains(&k) {
                return Inf;
            }
            support.iter().filter(|&&j| j != k).map(|&j| xi[pair_index(m, j, k)].clone()).min().unwrap()
        })
        .collect())
}

const ORACLE_SEED: u64 = 0x5eed_7a0c;

/// Perturbation oracles: entries become `e + u·ε` for random integers `u`
/// and an infinitesimal `ε`; the now transverse intersection is found by
/// enumerating candidate cells and the `ε → 0` limit is returned.
pub mod perturb {
    use super::*;

    /// `re + eps·ε`, ordered lexicographically.
    #[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
    pub struct Lex {
        pub re: Q,
        pub eps: Q,
    }

    impl Lex {
        fn new(re: Q, eps: i64) -> Self {
            Lex { re, eps: crate::q(eps) }
        }
        fn add(&self, o: &Lex) -> Lex {
            Lex { re: &self.re + &o.re, eps: &self.eps + &o.eps }
        }
        fn sub(&self, o: &Lex) -> Lex {
            Lex { re: &self.re - &o.re, eps: &self.eps - &o.eps }
        }
    }

    /// `None` is ∞.
    type LexInf = Option<Lex>;

    fn ladd(a: &LexInf, b: &LexInf) -> LexInf {
        Some(a.as_ref()?.add(b.as_ref()?))
    }

    fn lmin_twice(v: &[LexInf]) -> bool {
        let fin: Vec<&Lex> = v.iter().flatten().collect();
        let Some(m) = fin.iter().min() else { return true };
        fin.iter().filter(|x| *x == m).count() >= 2
    }

    const ATTEMPTS: u64 = 12;
    const SPREAD: i64 = 1 << 20;

    /// Stable intersection of the hyperplanes given by the columns of `c`.
    pub fn hyperplanes(c: &TropMatrix, seed: u64) -> Result<Vec<TropScalar>> {
        let m = c.rows;
        if m < 2 || c.cols + 1 != m {
            return Err(Error::Dimension("need m x (m-1) coefficients".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..ATTEMPTS {
            let mut p: Vec<Vec<Lex>> = Vec::with_capacity(m);
            for i in 0..m {
                let mut row = Vec::with_capacity(m - 1);
                for j in 0..m - 1 {
                    let Fin(x) = c.get(i, j) else {
                        return Err(Error::Degenerate("infinite hyperplane coefficient".into()));
                    };
                    row.push(Lex::new(x.clone(), rng.gen_range(-SPREAD..=SPREAD)));
                }
                p.push(row);
            }
            let mut found: BTreeSet<Vec<Lex>> = BTreeSet::new();
            let mut edges = Vec::with_capacity(m - 1);
            search_trees(&p, m, &mut edges, &mut found);
            if found.len() == 1 {
                let x = found.into_iter().next().unwrap();
                return Ok(normalize_projective(&x.into_iter().map(|l| Fin(l.re)).collect::<Vec<_>>()));
            }
        }
        Err(Error::Degenerate("perturbed hyperplanes never met in a unique point".into()))
    }

    fn component(edges: &[(usize, usize)], m: usize) -> Vec<usize> {
        let mut comp: Vec<usize> = (0..m).collect();
        fn find(c: &mut Vec<usize>, x: usize) -> usize {
            let mut r = x;
            while c[r] != r {
                r = c[r];
            }
            c[x] = r;
            r
        }
        for &(a, b) in edges {
            let (ra, rb) = (find(&mut comp, a), find(&mut comp, b));
            comp[ra] = rb;
        }
        (0..m).map(|x| find(&mut comp, x)).collect()
    }

    // Hyperplane j is tight at the pair edges[j]; the pairs must form a
    // spanning tree for the tight equations to pin down a projective point.
    fn search_trees(p: &[Vec<Lex>], m: usize, edges: &mut Vec<(usize, usize)>, found: &mut BTreeSet<Vec<Lex>>) {
        let j = edges.len();
        if j == m - 1 {
            if let Some(x) = solve_tree(p, m, edges) {
                if (0..m - 1).all(|h| {
                    let vals: Vec<LexInf> = (0..m).map(|k| Some(p[k][h].add(&x[k]))).collect();
                    lmin_twice(&vals)
                }) {
                    found.insert(x);
                }
            }
            return;
        }
        let comp = component(edges, m);
        for a in 0..m {
            for b in a + 1..m {
                if comp[a] != comp[b] {
                    edges.push((a, b));
                    search_trees(p, m, edges, found);
                    edges.pop();
                }
            }
        }
    }

    fn solve_tree(p: &[Vec<Lex>], m: usize, edges: &[(usize, usize)]) -> Option<Vec<Lex>> {
        let mut x: Vec<Option<Lex>> = vec![None; m];
        x[0] = Some(Lex { re: Q::zero(), eps: Q::zero() });
        let mut changed = true;
        while changed {
            changed = false;
            for (h, &(a, b)) in edges.iter().enumerate() {
                // p[a][h] + x_a = p[b][h] + x_b
                match (&x[a], &x[b]) {
                    (Some(xa), None) => {
                        x[b] = Some(p[a][h].add(xa).sub(&p[b][h]));
                        changed = true;
                    }
                    (None, Some(xb)) => {
                        x[a] = Some(p[b][h].add(xb).sub(&p[a][h]));
                        changed = true;
                    }
                    _ => {}
                }
            }
        }
        x.into_iter().collect()
    }

    /// Stable intersection of the tropical line with pair coordinates `xi`
    /// and the hyperplane `min_k ζ_k`, computed by translating the
    /// hyperplane generically.
    pub fn line_h(m: usize, xi: &[TropScalar], seed: u64) -> Result<Vec<TropScalar>> {
        let support = pair_support(m, xi);
        if support.len() < 2 {
            return Err(Error::Precondition("support has fewer than two indices".into()));
        }
        let x = |i: usize, j: usize| -> LexInf {
            xi[pair_index(m, i, j)].fin().map(|v| Lex { re: v.clone(), eps: Q::zero() })
        };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..ATTEMPTS {
            let h: Vec<Lex> = (0..m).map(|_| Lex::new(Q::zero(), rng.gen_range(-SPREAD..=SPREAD))).collect();
            let mut found: BTreeSet<Vec<LexInf>> = BTreeSet::new();
            for (ai, &a) in support.iter().enumerate() {
                for &b in &support[ai + 1..] {
                    let Some(xab) = x(a, b) else { continue };
                    let mut z: Vec<LexInf> = vec![None; m];
                    z[a] = Some(Lex { re: Q::zero(), eps: Q::zero() }.sub(&h[a]));
                    z[b] = Some(Lex { re: Q::zero(), eps: Q::zero() }.sub(&h[b]));
                    let mut ok = true;
                    for &k in &support {
                        if k == a || k == b {
                            continue;
                        }
                        let t1 = ladd(&x(a, k), &z[b]);
                        let t2 = ladd(&x(b, k), &z[a]);
                        match t1.min_by_inf(t2) {
                            Some(t) => z[k] = Some(t.sub(&xab)),
                            None => {
                                ok = false;
                                break;
                            }
                        }
                    }
                    if !ok || !on_line(m, &support, &x, &z) {
                        continue;
                    }
                    let hv: Vec<LexInf> = support.iter().map(|&k| ladd(&Some(h[k].clone()), &z[k])).collect();
                    if lmin_twice(&hv) {
                        let base = z[support[0]].clone().unwrap();
                        let zn: Vec<LexInf> = z.iter().map(|v| v.as_ref().map(|v| v.sub(&base))).collect();
                        found.insert(zn);
                    }
                }
            }
            if found.len() == 1 {
                let z = found.into_iter().next().unwrap();
                let out: Vec<TropScalar> = z.into_iter().map(|v| v.map_or(Inf, |l| Fin(l.re))).collect();
                return Ok(normalize_projective(&out));
            }
        }
        Err(Error::Degenerate("perturbed hyperplane never met the line in a unique point".into()))
    }

    trait MinInf {
        fn min_by_inf(self, o: Self) -> Self;
    }
    impl MinInf for LexInf {
        fn min_by_inf(self, o: Self) -> Self {
            match (self, o) {
                (None, b) => b,
                (a, None) => a,
                (Some(a), Some(b)) => Some(a.min(b)),
            }
        }
    }

    fn on_line(m: usize, support: &[usize], x: &dyn Fn(usize, usize) -> LexInf, z: &[LexInf]) -> bool {
        let _ = m;
        for (p, &i) in support.iter().enumerate() {
            for (q, &j) in support.iter().enumerate().skip(p + 1) {
                for &k in &support[q + 1..] {
                    let v = [ladd(&x(i, j), &z[k]), ladd(&x(i, k), &z[j]), ladd(&x(j, k), &z[i])];
                    if !lmin_twice(&v) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Outcome of comparing a closed formula with the perturbation oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleCase {
    Agree(Vec<TropScalar>),
    /// The formula refused the input.
    Degenerate,
    Disagree { formula: Vec<TropScalar>, oracle: Option<Vec<TropScalar>> },
}

/// Tropical Cramer point against the perturbed intersection, projectively.
pub fn oracle_compare_hyperplanes(c: &TropMatrix, seed: u64) -> OracleCase {
    match stable_intersection_hyperplanes(c) {
        Err(_) => OracleCase::Degenerate,
        Ok(f) => match perturb::hyperplanes(c, seed) {
            Ok(o) if normalize_projective(&o) == normalize_projective(&f) => OracleCase::Agree(f),
            o => OracleCase::Disagree { formula: f, oracle: o.ok() },
        },
    }
}

/// Line-meets-`H` formula against the perturbed intersection, projectively.
/// A formula value is only accepted once the oracle finds a unique point.
pub fn oracle_compare_line_h(m: usize, xi: &[TropScalar], seed: u64) -> OracleCase {
    match (line_h_formula(m, xi), perturb::line_h(m, xi, seed)) {
        (Err(_), _) | (_, Err(Error::Degenerate(_))) => OracleCase::Degenerate,
        (Ok(f), Ok(o)) if normalize_projective(&f) == normalize_projective(&o) => OracleCase::Agree(f),
        (Ok(f), o) => OracleCase::Disagree { formula: f, oracle: o.ok() },
    }
}

/// `rows × cols` with integer entries in `lo..=hi`.
pub fn random_matrix<R: Rng>(rows: usize, cols: usize, lo: i64, hi: i64, rng: &mut R) -> TropMatrix {
    TropMatrix::new(rows, cols, (0..rows * cols).map(|_| TropScalar::int(rng.gen_range(lo..=hi))).collect()).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{q, qq};

    fn t(n: i64) -> TropScalar {
        TropScalar::int(n)
    }

    #[test]
    fn scalar_ops() {
        assert_eq!(trop_min(&t(3), &t(5)), t(3));
        assert_eq!(trop_min(&Inf, &t(2)), t(2));
        assert_eq!(trop_min(&Inf, &Inf), Inf);
        assert_eq!(trop_add(&t(3), &t(5)), t(8));
        assert_eq!(trop_add(&Inf, &t(2)), Inf);
        assert_eq!(trop_add(&Fin(qq(1, 2)), &Fin(qq(1, 3))), Fin(qq(5, 6)));
    }

    #[test]
    fn min_twice() {
        assert!(min_attained_twice(&[t(0), t(1), t(0)]));
        assert!(!min_attained_twice(&[t(0), t(1), t(2)]));
        assert!(min_attained_twice(&[Inf, Inf]));
    }

    #[test]
    fn mat_mul_examples() {
        let a = TropMatrix::from_ints(&[&[3, 1], &[4, 2], &[0, 5]]);
        let z = TropMatrix::from_ints(&[&[0], &[0]]);
        assert_eq!(trop_mat_mul(&a, &z).unwrap().col(0), vec![t(1), t(2), t(0)]);
        let c = TropMatrix::from_ints(&[&[7]]);
        assert_eq!(trop_mat_mul(&c, &TropMatrix::from_ints(&[&[0]])).unwrap(), c);
        let r = TropMatrix::from_rows(vec![vec![Inf, t(2)]]).unwrap();
        assert_eq!(trop_mat_mul(&r, &z).unwrap().col(0), vec![t(2)]);
        assert!(trop_mat_mul(&a, &a).is_err());
    }

    #[test]
    fn det_examples() {
        let d = trop_det(&TropMatrix::from_ints(&[&[0, 0], &[0, 0]])).unwrap();
        assert_eq!((d.value, d.attaining_count, d.singular), (t(0), 2, true));
        let d = trop_det(&TropMatrix::from_ints(&[&[0, 1], &[1, 0]])).unwrap();
        assert_eq!((d.value, d.attaining_count, d.singular), (t(0), 1, false));
        let r = TropMatrix::from_ints(&[&[0, 0, 0, 0], &[0, 0, 1, 1], &[0, 0, 2, 2], &[0, 0, 3, 3]]);
        assert_eq!(trop_det(&r).unwrap().value, t(1));
        let inf = TropMatrix::from_rows(vec![vec![Inf, Inf], vec![Inf, Inf]]).unwrap();
        let d = trop_det(&inf).unwrap();
        assert_eq!((d.value, d.attaining_count, d.singular), (Inf, 0, true));
        assert!(trop_det(&TropMatrix::from_ints(&[&[0, 1]])).is_err());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(tropical_rank(&TropMatrix::from_ints(&[&[0, 0], &[0, 0]])).unwrap(), 1);
        assert_eq!(tropical_rank(&TropMatrix::from_ints(&[&[0, 1], &[1, 0]])).unwrap(), 2);
        let r = TropMatrix::from_ints(&[&[0, 0, 0, 0], &[0, 0, 1, 1], &[0, 0, 2, 2], &[0, 0, 3, 3]]);
        assert_eq!(tropical_rank(&r).unwrap(), 2);
        let inf = TropMatrix::from_rows(vec![vec![Inf, Inf]]).unwrap();
        assert_eq!(tropical_rank(&inf).unwrap(), 0);
    }

    #[test]
    fn pair_indexing() {
        let ps = pairs(5);
        for (k, &(i, j)) in ps.iter().enumerate() {
            assert_eq!(pair_index(5, i, j), k);
            assert_eq!(pair_index(5, j, i), k);
        }
    }

    #[test]
    fn hyperplanes_two_points() {
        let c = TropMatrix::from_ints(&[&[0], &[0]]);
        assert_eq!(stable_intersection_hyperplanes(&c).unwrap(), vec![t(0), t(0)]);
    }

    #[test]
    fn hyperplanes_cramer_matches_oracle_on_generic() {
        let c = TropMatrix::from_ints(&[&[0, 0], &[0, 2], &[1, 5]]);
        let x = stable_intersection_hyperplanes(&c).unwrap();
        for j in 0..2 {
            let v: Vec<TropScalar> = (0..3).map(|k| trop_add(c.get(k, j), &x[k])).collect();
            assert!(min_attained_twice(&v));
        }
    }

    #[test]
    fn hyperplanes_shared_ray_is_degenerate_but_stable_point_exists() {
        // columns [0,0,0] and [0,1,1] share a ray; the stable point is (1,0,0)
        let c = TropMatrix::from_ints(&[&[0, 0], &[0, 1], &[0, 1]]);
        assert!(matches!(stable_intersection_hyperplanes(&c), Err(Error::Degenerate(_))));
        assert_eq!(hyperplane_cramer(&c).unwrap(), vec![t(1), t(0), t(0)]);
        assert_eq!(perturb::hyperplanes(&c, 1).unwrap(), vec![t(0), t(-1), t(-1)]);
    }

    #[test]
    fn hyperplanes_column_shift_invariant() {
        let c = TropMatrix::from_ints(&[&[0, 0], &[0, 2], &[1, 5]]);
        let mut d = c.clone();
        for i in 0..3 {
            d.set(i, 1, trop_add(c.get(i, 1), &t(7)));
        }
        assert_eq!(stable_intersection_hyperplanes(&c).unwrap(), stable_intersection_hyperplanes(&d).unwrap());
    }

    fn xi(v: &[i64]) -> Vec<TropScalar> {
        v.iter().map(|&x| if x < 0 { Inf } else { t(x) }).collect()
    }

    #[test]
    fn line_h_examples() {
        assert_eq!(stable_intersection_line_h(4, &xi(&[0; 6])).unwrap(), xi(&[0; 4]));
        assert_eq!(stable_intersection_line_h(4, &xi(&[3, 1, 1, 3, 2, 0])).unwrap(), xi(&[1, 2, 0, 0]));
        assert_eq!(
            stable_intersection_line_h(4, &xi(&[5, -1, -1, -1, -1, -1])).unwrap(),
            vec![t(5), t(5), Inf, Inf]
        );
        assert!(stable_intersection_line_h(4, &xi(&[-1; 6])).is_err());
    }

    #[test]
    fn normalisation() {
        assert_eq!(normalize_projective(&[Inf, Fin(q(3)), t(5)]), vec![Inf, t(0), t(2)]);
    }
}
