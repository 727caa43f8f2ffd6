//! Graphic and ℚ-linear matroids: circuits, greedy compatible bases,
//! weight extension from a basis, basis exchange.

use crate::linalg;
use crate::tropcore::{k_subsets, min_attained_twice, TropScalar};
use crate::{Error, Result, Q};
use std::collections::VecDeque;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatroidKind {
    /// Edges on `vertices` nodes; `(u, u)` is a loop.
    Graphic { vertices: usize, edges: Vec<(usize, usize)> },
    /// Column vectors, one per ground element.
    Linear { vectors: Vec<Vec<Q>> },
}

/// Which circuit shortcut applies to a graphic matroid.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    Complete(usize),
    Bipartite(usize, usize),
    General,
}

#[derive(Clone, Debug)]
pub struct Matroid {
    pub kind: MatroidKind,
    pub labels: Vec<String>,
    pub shape: Shape,
}

/// Membership verdict with an optional witness (circuit, quadruple, submatrix …).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub member: bool,
    pub witness: Option<Vec<usize>>,
}

impl Verdict {
    pub fn yes() -> Self {
        Verdict { member: true, witness: None }
    }
    pub fn no(w: Vec<usize>) -> Self {
        Verdict { member: false, witness: Some(w) }
    }
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let nx = self.0[y];
            self.0[y] = r;
            y = nx;
        }
        r
    }
    /// False if already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra] = rb;
        true
    }
}

impl Matroid {
    /// Graphic matroid of `K_m`; ground set `12, 13, …` in pair order.
    pub fn complete_graph(m: usize) -> Self {
        let edges = crate::tropcore::pairs(m);
        let labels = edges.iter().map(|&(i, j)| pair_label(i, j, m)).collect();
        Matroid { kind: MatroidKind::Graphic { vertices: m, edges }, labels, shape: Shape::Complete(m) }
    }

    /// Graphic matroid of `K_{m,p}`; ground set `11, 12, …` row-major, row
    /// vertex `i`, column vertex `m + j`.
    pub fn complete_bipartite(m: usize, p: usize) -> Self {
        let mut edges = Vec::new();
        let mut labels = Vec::new();
        for i in 0..m {
            for j in 0..p {
                edges.push((i, m + j));
                labels.push(pair_label(i, j, m.max(p)));
            }
        }
        Matroid { kind: MatroidKind::Graphic { vertices: m + p, edges }, labels, shape: Shape::Bipartite(m, p) }
    }

    pub fn graphic(vertices: usize, edges: Vec<(usize, usize)>, labels: Vec<String>) -> Self {
        Matroid { kind: MatroidKind::Graphic { vertices, edges }, labels, shape: Shape::General }
    }

    pub fn linear(vectors: Vec<Vec<Q>>) -> Self {
        let labels = (1..=vectors.len()).map(|i| i.to_string()).collect();
        Matroid { kind: MatroidKind::Linear { vectors }, labels, shape: Shape::General }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn rank_of(&self, set: &[usize]) -> usize {
        match &self.kind {
            MatroidKind::Graphic { vertices, edges } => {
                let mut d = Dsu::new(*vertices);
                set.iter().filter(|&&e| d.union(edges[e].0, edges[e].1)).count()
            }
            MatroidKind::Linear { vectors } => {
                let rows: Vec<Vec<Q>> = set.iter().map(|&e| vectors[e].clone()).collect();
                linalg::rank_of_rows(&rows)
            }
        }
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        self.rank_of(set) == set.len()
    }

    pub fn rank(&self) -> usize {
        self.rank_of(&(0..self.n()).collect::<Vec<_>>())
    }

    pub fn closure(&self, set: &[usize]) -> Vec<usize> {
        let r = self.rank_of(set);
        (0..self.n())
            .filter(|e| {
                set.contains(e) || {
                    let mut s = set.to_vec();
                    s.push(*e);
                    self.rank_of(&s) == r
                }
            })
            .collect()
    }

    /// All circuits, each sorted. Graphic kinds enumerate simple cycles,
    /// linear kinds minimal dependent subsets by increasing size.
    pub fn circuits(&self) -> Vec<Vec<usize>> {
        match &self.kind {
            MatroidKind::Graphic { vertices, edges } => graph_cycles(*vertices, edges),
            MatroidKind::Linear { .. } => self.circuits_by_subsets(),
        }
    }

    pub fn circuits_by_subsets(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        assert!(n <= 64, "ground set too large for circuit enumeration");
        let mut found: Vec<u64> = Vec::new();
        let mut out = Vec::new();
        for k in 1..=(self.rank() + 1).min(n) {
            for s in k_subsets(n, k) {
                let mask = s.iter().fold(0u64, |a, &e| a | (1 << e));
                if found.iter().any(|&c| c & mask == c) {
                    continue;
                }
                if !self.is_independent(&s) {
                    found.push(mask);
                    out.push(s);
                }
            }
        }
        out
    }

    /// The unique circuit in `J ∪ {e}`.
    pub fn fundamental_circuit(&self, basis: &[usize], e: usize) -> Result<Vec<usize>> {
        if basis.contains(&e) {
            return Err(Error::Precondition(format!("element {} already in the basis", self.labels[e])));
        }
        let mut all = basis.to_vec();
        all.push(e);
        if self.is_independent(&all) {
            return Err(Error::Precondition("basis plus element is independent".into()));
        }
        let mut c: Vec<usize> = basis
            .iter()
            .copied()
            .filter(|&j| {
                let rest: Vec<usize> = all.iter().copied().filter(|&x| x != j).collect();
                self.is_independent(&rest)
            })
            .collect();
        c.push(e);
        c.sort();
        Ok(c)
    }

    /// Scan in non-increasing `η` order (∞ largest, ties by ground order),
    /// keeping each element that stays independent.
    pub fn greedy_compatible_basis(&self, eta: &[TropScalar]) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.n()).collect();
        order.sort_by(|&a, &b| eta[b].cmp(&eta[a]).then(a.cmp(&b)));
        let mut basis = Vec::new();
        for e in order {
            basis.push(e);
            if !self.is_independent(&basis) {
                basis.pop();
            }
        }
        basis
    }

    /// Weights on the full ground set from weights on a basis: each other
    /// element gets the minimum over its fundamental circuit.
    pub fn extend_weights_from_basis(&self, basis: &[usize], partial: &[TropScalar]) -> Result<Vec<TropScalar>> {
        if basis.len() != partial.len() {
            return Err(Error::Dimension("one weight per basis element".into()));
        }
        let mut eta = vec![TropScalar::Inf; self.n()];
        for (&j, w) in basis.iter().zip(partial) {
            eta[j] = w.clone();
        }
        for i in 0..self.n() {
            if basis.contains(&i) {
                continue;
            }
            let c = self.fundamental_circuit(basis, i)?;
            eta[i] = c.iter().filter(|&&j| j != i).map(|&j| eta[j].clone()).min().unwrap_or(TropScalar::Inf);
        }
        Ok(eta)
    }

    /// Minimum attained twice on every circuit; graphic complete and
    /// bipartite shapes only test triangles, respectively 4-cycles.
    pub fn is_in_trop_matroid(&self, eta: &[TropScalar]) -> Verdict {
        match self.shape {
            Shape::Complete(m) => {
                for t in k_subsets(m, 3) {
                    let c = vec![
                        crate::tropcore::pair_index(m, t[0], t[1]),
                        crate::tropcore::pair_index(m, t[0], t[2]),
                        crate::tropcore::pair_index(m, t[1], t[2]),
                    ];
                    if !min_attained_twice(&c.iter().map(|&e| eta[e].clone()).collect::<Vec<_>>()) {
                        return Verdict::no(c);
                    }
                }
                Verdict::yes()
            }
            Shape::Bipartite(m, p) => {
                for r in k_subsets(m, 2) {
                    for s in k_subsets(p, 2) {
                        let c = vec![r[0] * p + s[0], r[0] * p + s[1], r[1] * p + s[0], r[1] * p + s[1]];
                        if !min_attained_twice(&c.iter().map(|&e| eta[e].clone()).collect::<Vec<_>>()) {
                            return Verdict::no(c);
                        }
                    }
                }
                Verdict::yes()
            }
            Shape::General => self.is_in_trop_matroid_all_circuits(eta),
        }
    }

    pub fn is_in_trop_matroid_all_circuits(&self, eta: &[TropScalar]) -> Verdict {
        check_circuits(&self.circuits(), eta)
    }

    pub fn bases(&self) -> Vec<Vec<usize>> {
        k_subsets(self.n(), self.rank()).into_iter().filter(|s| self.is_independent(s)).collect()
    }

    /// Every basis whose sorted weight multiset matches the greedy optimum.
    pub fn max_weight_bases(&self, eta: &[TropScalar]) -> Vec<Vec<usize>> {
        let key = |b: &[usize]| {
            let mut w: Vec<TropScalar> = b.iter().map(|&e| eta[e].clone()).collect();
            w.sort_by(|a, b| b.cmp(a));
            w
        };
        let best = key(&self.greedy_compatible_basis(eta));
        self.bases().into_iter().filter(|b| key(b) == best).collect()
    }

    /// Exchange edges of a compatible spanning tree until it induces a
    /// spanning tree on the vertex subset `verts`.
    pub fn basis_exchange_to_contain(&self, eta: &[TropScalar], gamma: &[usize], verts: &[usize]) -> Result<Vec<usize>> {
        let MatroidKind::Graphic { vertices, edges } = &self.kind else {
            return Err(Error::Precondition("basis exchange needs a graphic matroid".into()));
        };
        let edge_of = |u: usize, v: usize| edges.iter().position(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u));
        let mut tree = gamma.to_vec();
        let inside = |e: usize| verts.contains(&edges[e].0) && verts.contains(&edges[e].1);
        loop {
            let mut d = Dsu::new(*vertices);
            for &e in tree.iter().filter(|&&e| inside(e)) {
                d.union(edges[e].0, edges[e].1);
            }
            let mut crossing = Vec::new();
            for (k, &u) in verts.iter().enumerate() {
                for &v in &verts[k + 1..] {
                    if d.find(u) != d.find(v) {
                        if let Some(uv) = edge_of(u, v) {
                            crossing.push((u, v, uv));
                        }
                    }
                }
            }
            if crossing.is_empty() {
                break;
            }
            // Swap in the first crossing edge whose tree path has an edge
            // outside the induced forest of the same weight.
            let mut swap = None;
            for &(u, v, uv) in &crossing {
                let path = tree_path(*vertices, edges, &tree, u, v)
                    .ok_or_else(|| Error::Precondition("basis is not spanning".into()))?;
                if let Some(&drop) = path.iter().filter(|&&e| !inside(e)).min_by(|&&a, &&b| eta[a].cmp(&eta[b])) {
                    if eta[drop] == eta[uv] {
                        swap = Some((drop, uv));
                        break;
                    }
                }
            }
            let Some((drop, uv)) = swap else {
                let (_, _, uv) = crossing[0];
                return Err(Error::Precondition(format!(
                    "no weight-preserving exchange brings edge {} into the basis",
                    self.labels[uv]
                )));
            };
            tree.retain(|&e| e != drop);
            tree.push(uv);
        }
        Ok(tree)
    }
}

/// Minimum attained twice on each listed circuit.
pub fn check_circuits(circuits: &[Vec<usize>], eta: &[TropScalar]) -> Verdict {
    for c in circuits {
        if !min_attained_twice(&c.iter().map(|&e| eta[e].clone()).collect::<Vec<_>>()) {
            return Verdict::no(c.clone());
        }
    }
    Verdict::yes()
}

/// Simple cycles as sorted edge-index sets; loops and parallel edges included.
fn graph_cycles(vertices: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); vertices];
    let mut out = std::collections::BTreeSet::new();
    for (e, &(a, b)) in edges.iter().enumerate() {
        if a == b {
            out.insert(vec![e]);
        } else {
            adj[a].push((b, e));
            adj[b].push((a, e));
        }
    }
    // each cycle is rooted at its smallest vertex and walked both ways
    fn walk(
        adj: &[Vec<(usize, usize)>],
        root: usize,
        x: usize,
        on: &mut Vec<bool>,
        path: &mut Vec<usize>,
        out: &mut std::collections::BTreeSet<Vec<usize>>,
    ) {
        for &(y, e) in &adj[x] {
            if y < root || path.contains(&e) {
                continue;
            }
            if y == root {
                let mut c = path.clone();
                c.push(e);
                c.sort();
                out.insert(c);
            } else if !on[y] {
                on[y] = true;
                path.push(e);
                walk(adj, root, y, on, path, out);
                path.pop();
                on[y] = false;
            }
        }
    }
    for root in 0..vertices {
        let mut on = vec![false; vertices];
        on[root] = true;
        walk(&adj, root, root, &mut on, &mut Vec::new(), &mut out);
    }
    let mut v: Vec<Vec<usize>> = out.into_iter().collect();
    v.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    v
}

/// Edge indices of the path from `u` to `v` inside the forest `tree`.
fn tree_path(vertices: usize, edges: &[(usize, usize)], tree: &[usize], u: usize, v: usize) -> Option<Vec<usize>> {
    let mut prev: Vec<Option<(usize, usize)>> = vec![None; vertices];
    let mut seen = vec![false; vertices];
    seen[u] = true;
    let mut q = VecDeque::from([u]);
    while let Some(x) = q.pop_front() {
        if x == v {
            break;
        }
        for &e in tree {
            let (a, b) = edges[e];
            let y = if a == x { b } else if b == x { a } else { continue };
            if !seen[y] {
                seen[y] = true;
                prev[y] = Some((x, e));
                q.push_back(y);
            }
        }
    }
    if !seen[v] {
        return None;
    }
    let mut path = Vec::new();
    let mut x = v;
    while let Some((p, e)) = prev[x] {
        path.push(e);
        x = p;
    }
    path.reverse();
    Some(path)
}

/// `ij` with 1-based indices, separated by `_` when any index has two digits.
pub fn pair_label(i: usize, j: usize, m: usize) -> String {
    if m <= 9 {
        format!("{}{}", i + 1, j + 1)
    } else {
        format!("{}_{}", i + 1, j + 1)
    }
}
