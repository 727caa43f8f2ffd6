//! Sections for matrices of rank at most two, and for corank-one square
//! (or wide) matrices over the open set where the first `m − 1` columns are
//! tropically generic. Also the two-point demo showing that the recipe for
//! `τ` jumps on the boundary of that set.

use crate::linsection::{eval_lin_section, LinSectionPoint};
use crate::matroids::{pair_label, Matroid, Verdict};
use crate::tropcore::{self, k_subsets, min_attained_twice, perturb, trop_det, TropMatrix, TropScalar};
use crate::valfield::{Polynomial, WeightAssignment};
use crate::{Error, Result, Q};
use num::Zero;
use rand::Rng;

pub fn matrix_vars(m: usize, p: usize) -> Vec<String> {
    let big = m.max(p);
    (0..m).flat_map(|i| (0..p).map(move |j| pair_label(i, j, big))).collect()
}

/// Tropical determinant of the `k × k` submatrix, as a polynomial.
pub fn minor_polynomial(m: usize, p: usize, rows: &[usize], cols: &[usize]) -> Polynomial {
    let v = matrix_vars(m, p);
    let k = rows.len();
    let mut perm: Vec<usize> = (0..k).collect();
    let mut out = Polynomial::zero(&v);
    permutations(&mut perm, 0, &mut |s| {
        let sign = if inversions(s) % 2 == 0 { 1 } else { -1 };
        let mut t = Polynomial::constant(&v, crate::valfield::ValuedScalar::constant(crate::q(sign)));
        for (a, &b) in s.iter().enumerate() {
            t = t.mul(&Polynomial::var(&v, rows[a] * p + cols[b]));
        }
        out = out.add(&t);
    });
    out
}

fn permutations(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permutations(v, k + 1, f);
        v.swap(k, i);
    }
}

fn inversions(s: &[usize]) -> usize {
    (0..s.len()).map(|i| (i + 1..s.len()).filter(|&j| s[i] > s[j]).count()).sum()
}

// ─── rank ≤ 2 ───────────────────────────────────────────────────────────

/// Every 3×3 submatrix tropically singular; witness `[r1, r2, r3, c1, c2, c3]`.
pub fn membership_rank2(xi: &TropMatrix) -> Verdict {
    for r in k_subsets(xi.rows, 3) {
        for c in k_subsets(xi.cols, 3) {
            if !trop_det(&xi.submatrix(&r, &c)).expect("3x3").singular {
                return Verdict::no(r.into_iter().chain(c).collect());
            }
        }
    }
    Verdict::yes()
}

/// Every 2×2 submatrix of `η` on `rows × cols` has its minimum twice.
pub fn membership_y_bipartite(eta: &TropMatrix, rows: &[usize], cols: &[usize]) -> bool {
    k_subsets(rows.len(), 2).into_iter().all(|r| {
        k_subsets(cols.len(), 2).into_iter().all(|c| {
            let (a, b) = (rows[r[0]], rows[r[1]]);
            let (x, y) = (cols[c[0]], cols[c[1]]);
            min_attained_twice(&[eta.get(a, x).clone(), eta.get(a, y).clone(), eta.get(b, x).clone(), eta.get(b, y).clone()])
        })
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rank2Decomposition {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub tau: Vec<TropScalar>,
    pub rho: Vec<TropScalar>,
    pub eta: TropMatrix,
}

/// Row minima, then column minima of what is left.
pub fn decompose_rank2(xi: &TropMatrix) -> Result<Rank2Decomposition> {
    let v = membership_rank2(xi);
    if !v.member {
        return Err(Error::NotMember(format!("3x3 submatrix {:?} is tropically nonsingular", v.witness.unwrap())));
    }
    let (m, p) = (xi.rows, xi.cols);
    let tau: Vec<TropScalar> = (0..m).map(|i| xi.row(i).iter().min().unwrap().clone()).collect();
    let shifted: Vec<Vec<TropScalar>> = (0..m).map(|i| (0..p).map(|j| sub(xi.get(i, j), &tau[i])).collect()).collect();
    let rho: Vec<TropScalar> = (0..p).map(|j| (0..m).map(|i| shifted[i][j].clone()).min().unwrap()).collect();
    let data = (0..m).flat_map(|i| (0..p).map(|j| sub(&shifted[i][j], &rho[j])).collect::<Vec<_>>()).collect();
    let eta = TropMatrix::new(m, p, data)?;
    let rows: Vec<usize> = (0..m).filter(|&i| !tau[i].is_inf()).collect();
    let cols: Vec<usize> = (0..p).filter(|&j| !rho[j].is_inf()).collect();
    if !membership_y_bipartite(&eta, &rows, &cols) {
        return Err(Error::Oracle("normalised matrix fails the 2x2 test".into()));
    }
    Ok(Rank2Decomposition { rows, cols, tau, rho, eta })
}

/// `a − b`, ∞ when either side is.
fn sub(a: &TropScalar, b: &TropScalar) -> TropScalar {
    match (a, b) {
        (TropScalar::Fin(x), TropScalar::Fin(y)) => TropScalar::Fin(x - y),
        _ => TropScalar::Inf,
    }
}

/// `ξ_ij = τ_i + ρ_j + η_ij`.
pub fn compose_rank2(tau: &[TropScalar], rho: &[TropScalar], eta: &TropMatrix) -> TropMatrix {
    let data = (0..tau.len())
        .flat_map(|i| (0..rho.len()).map(move |j| (i, j)))
        .map(|(i, j)| tau[i].plus(&rho[j]).plus(eta.get(i, j)))
        .collect();
    TropMatrix::new(tau.len(), rho.len(), data).unwrap()
}

#[derive(Clone, Debug)]
pub struct Rank2SectionPoint {
    pub xi: TropMatrix,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub tau: Vec<TropScalar>,
    pub rho: Vec<TropScalar>,
    pub eta: TropMatrix,
    /// Spanning tree of `K_{I,J}` as flat indices `i·p + j`.
    pub tree: Vec<usize>,
    pub inner: Option<LinSectionPoint>,
}

fn bipartite_graph(m: usize, p: usize, rows: &[usize], cols: &[usize]) -> (Matroid, Vec<usize>) {
    let inner: Vec<usize> = rows.iter().flat_map(|&i| cols.iter().map(move |&j| i * p + j)).collect();
    let edges = inner.iter().map(|&k| (k / p, m + k % p)).collect();
    let labels = inner.iter().map(|&k| pair_label(k / p, k % p, m.max(p))).collect();
    (Matroid::graphic(m + p, edges, labels), inner)
}

pub fn build_rank2_section(xi: &TropMatrix) -> Result<Rank2SectionPoint> {
    let d = decompose_rank2(xi)?;
    if d.rows.is_empty() {
        return Ok(Rank2SectionPoint {
            xi: xi.clone(),
            rows: Vec::new(),
            cols: Vec::new(),
            tau: d.tau,
            rho: d.rho,
            eta: d.eta,
            tree: Vec::new(),
            inner: None,
        });
    }
    let (g, inner) = bipartite_graph(xi.rows, xi.cols, &d.rows, &d.cols);
    let w: Vec<TropScalar> = inner.iter().map(|&k| d.eta.entries()[k].clone()).collect();
    let tree = g.greedy_compatible_basis(&w).into_iter().map(|e| inner[e]).collect();
    build_rank2_from_parts(d.tau, d.rho, d.eta, tree)
}

/// Every spanning tree of `K_{I,J}` of maximal `η`-weight.
pub fn compatible_bipartite_trees(sp: &Rank2SectionPoint) -> Vec<Vec<usize>> {
    let (g, inner) = bipartite_graph(sp.xi.rows, sp.xi.cols, &sp.rows, &sp.cols);
    let w: Vec<TropScalar> = inner.iter().map(|&k| sp.eta.entries()[k].clone()).collect();
    g.max_weight_bases(&w).into_iter().map(|b| b.into_iter().map(|e| inner[e]).collect()).collect()
}

pub fn build_rank2_from_parts(tau: Vec<TropScalar>, rho: Vec<TropScalar>, eta: TropMatrix, tree: Vec<usize>) -> Result<Rank2SectionPoint> {
    let (m, p) = (tau.len(), rho.len());
    let rows: Vec<usize> = (0..m).filter(|&i| !tau[i].is_inf()).collect();
    let cols: Vec<usize> = (0..p).filter(|&j| !rho[j].is_inf()).collect();
    let xi = compose_rank2(&tau, &rho, &eta);
    let e = eta.entries();
    let basis: Vec<usize> = tree.iter().copied().filter(|&k| !e[k].is_inf()).collect();
    let s: Vec<usize> = (0..m * p).filter(|&k| e[k].is_inf()).collect();
    let mut rewrite = vec![vec![Q::zero(); basis.len()]; m * p];
    for k in 0..m * p {
        if e[k].is_inf() {
            continue;
        }
        let path = bipartite_path(m, p, &tree, k / p, m + k % p)
            .ok_or_else(|| Error::Precondition("tree does not span the support".into()))?;
        for (edge, sign) in path {
            if let Some(pos) = basis.iter().position(|&x| x == edge) {
                rewrite[k][pos] += crate::q(sign);
            }
        }
    }
    let inner = LinSectionPoint { eta: e.to_vec(), s, basis, rewrite, vars: matrix_vars(m, p) };
    if !inner.check_invariants() {
        return Err(Error::Precondition("tree is not compatible with η".into()));
    }
    Ok(Rank2SectionPoint { xi, rows, cols, tau, rho, eta, tree, inner: Some(inner) })
}

/// Tree path between two vertices (rows `0..m`, columns `m..m+p`); a step
/// row → column contributes `+x_e = y − z`, the reverse `−x_e`.
fn bipartite_path(m: usize, p: usize, tree: &[usize], from: usize, to: usize) -> Option<Vec<(usize, i64)>> {
    let n = m + p;
    let ends = |k: usize| (k / p, m + k % p);
    let mut prev: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut seen = vec![false; n];
    seen[from] = true;
    let mut stack = vec![from];
    while let Some(u) = stack.pop() {
        for &k in tree {
            let (r, c) = ends(k);
            let w = if r == u { c } else if c == u { r } else { continue };
            if !seen[w] {
                seen[w] = true;
                prev[w] = Some((u, k));
                stack.push(w);
            }
        }
    }
    if !seen[to] {
        return None;
    }
    let mut out = Vec::new();
    let mut w = to;
    while let Some((u, k)) = prev[w] {
        out.push((k, if u < m { 1 } else { -1 }));
        w = u;
    }
    Some(out)
}

/// `x_ij ↦ (e_i ; e_j)`.
pub fn rank2_weights(m: usize, p: usize) -> WeightAssignment {
    WeightAssignment {
        weights: (0..m * p)
            .map(|k| {
                let mut w = vec![0; m + p];
                w[k / p] = 1;
                w[m + k % p] = 1;
                w
            })
            .collect(),
    }
}

pub fn eval_rank2_section(sp: &Rank2SectionPoint, f: &Polynomial) -> Result<TropScalar> {
    let (m, p) = (sp.xi.rows, sp.xi.cols);
    let f = f.reindex(&matrix_vars(m, p))?;
    let shift: Vec<TropScalar> = sp.tau.iter().chain(&sp.rho).cloned().collect();
    let mut best = TropScalar::Inf;
    for (beta, fb) in f.weight_decompose(&rank2_weights(m, p)) {
        if (0..m + p).any(|k| beta[k] > 0 && shift[k].is_inf()) {
            continue;
        }
        let mut v = match &sp.inner {
            Some(lin) => eval_lin_section(lin, &fb)?,
            None => constant_term(&fb),
        };
        for (k, &b) in beta.iter().enumerate() {
            if b > 0 {
                v = v.plus(&shift[k].scale(b));
            }
        }
        best = best.min(v);
    }
    Ok(best)
}

fn constant_term(f: &Polynomial) -> TropScalar {
    f.terms().find(|(m, _)| m.degree() == 0).map_or(TropScalar::Inf, |(_, c)| c.valuation())
}

/// `τ, ρ` random on random supports, `η` extended from a random spanning
/// tree of `K_{I,J}`; independent of [`decompose_rank2`].
pub fn random_rank2_member<R: Rng>(m: usize, p: usize, allow_inf: bool, rng: &mut R) -> TropMatrix {
    let rows: Vec<usize> = (0..m).filter(|_| !allow_inf || rng.gen_bool(0.85)).collect();
    let cols: Vec<usize> = (0..p).filter(|_| !allow_inf || rng.gen_bool(0.85)).collect();
    let mut tau = vec![TropScalar::Inf; m];
    let mut rho = vec![TropScalar::Inf; p];
    for &i in &rows {
        tau[i] = TropScalar::int(rng.gen_range(-3..=3));
    }
    for &j in &cols {
        rho[j] = TropScalar::int(rng.gen_range(-3..=3));
    }
    let mut eta = vec![TropScalar::Inf; m * p];
    if !rows.is_empty() && !cols.is_empty() {
        let (g, inner) = bipartite_graph(m, p, &rows, &cols);
        // random spanning tree: shuffled vertices, each attached to an earlier one of the other side
        let mut verts: Vec<usize> = rows.iter().copied().chain(cols.iter().map(|&j| m + j)).collect();
        for k in (1..verts.len()).rev() {
            verts.swap(k, rng.gen_range(0..=k));
        }
        // start from a row so every later vertex has a neighbour class
        let first = verts.iter().position(|&v| v < m).unwrap();
        verts.swap(0, first);
        let mut tree = Vec::new();
        let mut placed = vec![verts[0]];
        let mut pending: Vec<usize> = verts[1..].to_vec();
        while !pending.is_empty() {
            let pos = pending.iter().position(|&v| placed.iter().any(|&u| (u < m) != (v < m))).unwrap();
            let v = pending.remove(pos);
            let cands: Vec<usize> = placed.iter().copied().filter(|&u| (u < m) != (v < m)).collect();
            let u = cands[rng.gen_range(0..cands.len())];
            let (r, c) = if u < m { (u, v - m) } else { (v, u - m) };
            tree.push(inner.iter().position(|&x| x == r * p + c).unwrap());
            placed.push(v);
        }
        let w: Vec<TropScalar> = tree
            .iter()
            .map(|_| if allow_inf && rng.gen_bool(0.1) { TropScalar::Inf } else { TropScalar::int(rng.gen_range(-2..=3)) })
            .collect();
        let ext = g.extend_weights_from_basis(&tree, &w).expect("spanning tree");
        for (e, &k) in inner.iter().enumerate() {
            eta[k] = ext[e].clone();
        }
    }
    compose_rank2(&tau, &rho, &TropMatrix::new(m, p, eta).unwrap())
}

// ─── corank one ─────────────────────────────────────────────────────────

/// All `m × m` minors singular, `ξ` finite, and the first `m − 1` columns
/// in tropically general position. Witness: the offending columns.
pub fn membership_corank1_u(xi: &TropMatrix) -> Result<Verdict> {
    let (m, p) = (xi.rows, xi.cols);
    if m > p || m < 2 {
        return Err(Error::Dimension(format!("need 2 <= m <= p, got {m}x{p}")));
    }
    if xi.entries().iter().any(|x| x.is_inf()) {
        return Ok(Verdict::no(Vec::new()));
    }
    let rows: Vec<usize> = (0..m).collect();
    for c in k_subsets(p, m) {
        if !trop_det(&xi.submatrix(&rows, &c))?.singular {
            return Ok(Verdict::no(c));
        }
    }
    let first: Vec<usize> = (0..m - 1).collect();
    if !tropcore::hyperplanes_generic(&xi.submatrix(&rows, &first))? {
        return Ok(Verdict::no(first));
    }
    Ok(Verdict::yes())
}

#[derive(Clone, Debug)]
pub struct Corank1SectionPoint {
    pub xi: TropMatrix,
    /// Row scaling, normalised so `τ₁ = ξ₁₁`.
    pub tau: Vec<Q>,
    pub eta: TropMatrix,
    pub inner: LinSectionPoint,
}

/// `−τ` is the stable intersection of the hyperplanes of the first `m − 1`
/// columns; `η = ξ − Aτ` then has every column minimum attained twice.
pub fn decompose_corank1(xi: &TropMatrix) -> Result<(Vec<Q>, TropMatrix)> {
    let v = membership_corank1_u(xi)?;
    if !v.member {
        return Err(Error::NotMember(format!("outside U or not corank one, witness columns {:?}", v.witness.unwrap())));
    }
    let (m, p) = (xi.rows, xi.cols);
    let rows: Vec<usize> = (0..m).collect();
    let first: Vec<usize> = (0..m - 1).collect();
    let x = tropcore::stable_intersection_hyperplanes(&xi.submatrix(&rows, &first))?;
    let x: Vec<Q> = x.iter().map(|t| t.fin().unwrap().clone()).collect();
    let xi11 = xi.get(0, 0).fin().unwrap().clone();
    let tau: Vec<Q> = x.iter().map(|xk| &xi11 + &x[0] - xk).collect();
    let data = (0..m)
        .flat_map(|i| (0..p).map(move |j| (i, j)))
        .map(|(i, j)| TropScalar::Fin(xi.get(i, j).fin().unwrap() - &tau[i]))
        .collect();
    let eta = TropMatrix::new(m, p, data)?;
    for j in 0..p {
        if !min_attained_twice(&eta.col(j)) {
            return Err(Error::Oracle(format!("column {} of η has a unique minimum", j + 1)));
        }
    }
    Ok((tau, eta))
}

/// Per column, the greedy basis of `1ᵀx = 0` drops the last minimal row.
pub fn corank1_section(xi: &TropMatrix) -> Result<Corank1SectionPoint> {
    let (tau, eta) = decompose_corank1(xi)?;
    let inner = columnwise_hyperplane_section(&eta);
    Ok(Corank1SectionPoint { xi: xi.clone(), tau, eta, inner })
}

fn columnwise_hyperplane_section(eta: &TropMatrix) -> LinSectionPoint {
    let (m, p) = (eta.rows, eta.cols);
    let mut basis = Vec::new();
    let mut dropped = Vec::new();
    for j in 0..p {
        let col = eta.col(j);
        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by(|&a, &b| col[b].cmp(&col[a]).then(a.cmp(&b)));
        dropped.push(order[m - 1]);
        basis.extend(order[..m - 1].iter().map(|&i| i * p + j));
    }
    let mut rewrite = vec![vec![Q::zero(); basis.len()]; m * p];
    for (k, row) in rewrite.iter_mut().enumerate() {
        let (i, j) = (k / p, k % p);
        if let Some(pos) = basis.iter().position(|&b| b == k) {
            row[pos] = crate::q(1);
        } else {
            debug_assert_eq!(dropped[j], i);
            for (pos, &b) in basis.iter().enumerate() {
                if b % p == j {
                    row[pos] = crate::q(-1);
                }
            }
        }
    }
    LinSectionPoint { eta: eta.entries().to_vec(), s: Vec::new(), basis, rewrite, vars: matrix_vars(m, p) }
}

/// `x_ij ↦ e_i`.
pub fn row_weights(m: usize, p: usize) -> WeightAssignment {
    WeightAssignment {
        weights: (0..m * p)
            .map(|k| {
                let mut w = vec![0; m];
                w[k / p] = 1;
                w
            })
            .collect(),
    }
}

pub fn eval_corank1_section(sp: &Corank1SectionPoint, f: &Polynomial) -> Result<TropScalar> {
    let (m, p) = (sp.xi.rows, sp.xi.cols);
    let f = f.reindex(&matrix_vars(m, p))?;
    let mut best = TropScalar::Inf;
    for (beta, fb) in f.weight_decompose(&row_weights(m, p)) {
        let lift: Q = beta.iter().zip(&sp.tau).map(|(&b, t)| crate::q(b) * t).sum();
        best = best.min(eval_lin_section(&sp.inner, &fb)?.plus(&TropScalar::Fin(lift)));
    }
    Ok(best)
}

/// `Aτ + η` with `η` columnwise on the tropical hyperplane `min twice`.
pub fn random_corank1_member<R: Rng>(m: usize, p: usize, rng: &mut R) -> TropMatrix {
    let tau: Vec<i64> = (0..m).map(|_| rng.gen_range(-20..=20)).collect();
    let mut data = vec![TropScalar::zero(); m * p];
    for j in 0..p {
        let mut col: Vec<i64> = (0..m).map(|_| rng.gen_range(0..=40)).collect();
        let lo = *col.iter().min().unwrap();
        let a = col.iter().position(|&x| x == lo).unwrap();
        let mut b = rng.gen_range(0..m - 1);
        if b >= a {
            b += 1;
        }
        col[b] = lo;
        for i in 0..m {
            data[i * p + j] = TropScalar::int(col[i] + tau[i]);
        }
    }
    TropMatrix::new(m, p, data).unwrap()
}

// ─── the jump ───────────────────────────────────────────────────────────

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Remark43 {
    pub p: Vec<TropScalar>,
    pub q: Vec<TropScalar>,
    pub distinct: bool,
}

/// Stable intersections of `H_a, H_a, H_b` and of `H_a, H_b, H_b` in `ℝ⁴/ℝ1`,
/// both by perturbation.
pub fn remark43_demo(a: &[TropScalar], b: &[TropScalar]) -> Result<Remark43> {
    if a.len() != 4 || b.len() != 4 {
        return Err(Error::Dimension("a and b must have four entries".into()));
    }
    let ab = TropMatrix::from_rows((0..4).map(|i| vec![a[i].clone(), b[i].clone()]).collect())?;
    if ab.entries().iter().any(|x| x.is_inf()) {
        return Err(Error::Degenerate("infinite coefficient".into()));
    }
    for r in k_subsets(4, 2) {
        if trop_det(&ab.submatrix(&r, &[0, 1]))?.singular {
            return Err(Error::Degenerate(format!("rows {},{} of (a|b) give a singular 2x2 minor", r[0] + 1, r[1] + 1)));
        }
    }
    let cols = |c: [&[TropScalar]; 3]| TropMatrix::from_rows((0..4).map(|i| c.iter().map(|v| v[i].clone()).collect()).collect());
    let p = perturb::hyperplanes(&cols([a, a, b])?, 0xa11a)?;
    let q = perturb::hyperplanes(&cols([a, b, b])?, 0xa11a)?;
    let distinct = p != q;
    Ok(Remark43 { p, q, distinct })
}
