//! Exact rational cones and LP feasibility.
//!
//! The LP solver is a dense two-phase simplex with Bland's rule. Strict
//! inequalities get a shared gap variable `δ ∈ [0, 1]` which is maximised.
//! Fourier–Motzkin elimination is kept as an independent oracle.

use crate::linalg::{self, dot, primitive, Mat};
use crate::Q;
use num::{One, Signed, Zero};
use rayon::prelude::*;
use std::collections::BTreeSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rel {
    Le,
    Lt,
    Ge,
    Gt,
    Eq,
}

/// `a·x REL b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub a: Vec<Q>,
    pub rel: Rel,
    pub b: Q,
}

impl Constraint {
    pub fn new(a: Vec<Q>, rel: Rel, b: Q) -> Self {
        Constraint { a, rel, b }
    }

    pub fn holds(&self, x: &[Q]) -> bool {
        let v = dot(&self.a, x);
        match self.rel {
            Rel::Le => v <= self.b,
            Rel::Lt => v < self.b,
            Rel::Ge => v >= self.b,
            Rel::Gt => v > self.b,
            Rel::Eq => v == self.b,
        }
    }

    /// As `a·x ≤ b` / `a·x < b` / `a·x = b`, with the strictness flag.
    fn normalized(&self) -> (Vec<Q>, Q, Norm) {
        match self.rel {
            Rel::Le => (self.a.clone(), self.b.clone(), Norm::Le),
            Rel::Lt => (self.a.clone(), self.b.clone(), Norm::Lt),
            Rel::Ge => (neg(&self.a), -self.b.clone(), Norm::Le),
            Rel::Gt => (neg(&self.a), -self.b.clone(), Norm::Lt),
            Rel::Eq => (self.a.clone(), self.b.clone(), Norm::Eq),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Norm {
    Le,
    Lt,
    Eq,
}

/// Free variables `x ∈ ℚⁿ`; `objective` is maximised by [`lp_maximize`].
#[derive(Clone, Debug, Default)]
pub struct LinearProgram {
    pub nvars: usize,
    pub constraints: Vec<Constraint>,
    pub objective: Option<Vec<Q>>,
}

impl LinearProgram {
    pub fn new(nvars: usize) -> Self {
        LinearProgram { nvars, constraints: Vec::new(), objective: None }
    }

    pub fn push(&mut self, a: Vec<Q>, rel: Rel, b: Q) -> &mut Self {
        assert_eq!(a.len(), self.nvars, "constraint width");
        self.constraints.push(Constraint::new(a, rel, b));
        self
    }

    pub fn satisfied_by(&self, x: &[Q]) -> bool {
        self.constraints.iter().all(|c| c.holds(x))
    }

    fn has_strict(&self) -> bool {
        self.constraints.iter().any(|c| matches!(c.rel, Rel::Lt | Rel::Gt))
    }
}

/// Farkas multipliers, one per constraint, for the constraints rewritten as
/// `a·x ≤ b` or `a·x < b` (`≥`/`>` rows negated) and `a·x = b`. Inequality
/// multipliers are nonnegative, equality multipliers free. The combination
/// has zero left-hand side and either a negative right-hand side, or a zero
/// one with positive weight on some strict row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub multipliers: Vec<Q>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Feasible(Vec<Q>),
    Infeasible(Certificate),
}

impl LpOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, LpOutcome::Feasible(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOptimum {
    Optimal { x: Vec<Q>, value: Q },
    Unbounded,
    Infeasible(Certificate),
}

fn neg(v: &[Q]) -> Vec<Q> {
    v.iter().map(|x| -x.clone()).collect()
}

// ─── simplex core ───────────────────────────────────────────────────────

enum Core {
    Optimal(Vec<Q>),
    Unbounded,
    Infeasible,
}

struct Tableau {
    t: Mat,
    basis: Vec<usize>,
    ncols: usize,
}

impl Tableau {
    fn rhs(&self, r: usize) -> &Q {
        &self.t[r][self.ncols]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = Q::one() / &self.t[r][c];
        for x in self.t[r].iter_mut() {
            *x *= &inv;
        }
        let prow = self.t[r].clone();
        for (i, row) in self.t.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Maximise `cost·z` over the active columns `0..active`. Bland's rule.
    fn run(&mut self, cost: &[Q], active: usize) -> bool {
        loop {
            let mut enter = None;
            for j in 0..active {
                if self.basis.contains(&j) {
                    continue;
                }
                let mut rc = cost[j].clone();
                for (r, &b) in self.basis.iter().enumerate() {
                    if !cost[b].is_zero() && !self.t[r][j].is_zero() {
                        rc -= &cost[b] * &self.t[r][j];
                    }
                }
                if rc.is_positive() {
                    enter = Some(j);
                    break;
                }
            }
            let Some(j) = enter else { return true };
            let mut leave: Option<(usize, Q)> = None;
            for r in 0..self.t.len() {
                if !self.t[r][j].is_positive() {
                    continue;
                }
                let ratio = self.rhs(r) / &self.t[r][j];
                let better = match &leave {
                    None => true,
                    Some((lr, lq)) => ratio < *lq || (ratio == *lq && self.basis[r] < self.basis[*lr]),
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
            let Some((r, _)) = leave else { return false };
            self.pivot(r, j);
        }
    }
}

/// Maximise `cost·z` subject to `a·z = b`, `z ≥ 0`.
fn simplex(a: &Mat, b: &[Q], nz: usize, cost: &[Q]) -> Core {
    let m = a.len();
    let ncols = nz + m;
    let mut t: Mat = Vec::with_capacity(m);
    for (r, (row, br)) in a.iter().zip(b).enumerate() {
        let flip = br.is_negative();
        let mut v: Vec<Q> = row.iter().map(|x| if flip { -x.clone() } else { x.clone() }).collect();
        v.resize(ncols + 1, Q::zero());
        v[nz + r] = Q::one();
        v[ncols] = if flip { -br.clone() } else { br.clone() };
        t.push(v);
    }
    let mut tab = Tableau { t, basis: (nz..nz + m).collect(), ncols };
    let mut c1 = vec![Q::zero(); ncols];
    for c in c1.iter_mut().skip(nz) {
        *c = -Q::one();
    }
    tab.run(&c1, ncols);
    let infeas: Q = (0..m).filter(|&r| tab.basis[r] >= nz).map(|r| tab.rhs(r).clone()).sum();
    if infeas.is_positive() {
        return Core::Infeasible;
    }
    // drive zero-level artificials out; drop rows that are redundant
    let mut r = 0;
    while r < tab.t.len() {
        if tab.basis[r] >= nz {
            match (0..nz).find(|&j| !tab.t[r][j].is_zero()) {
                Some(j) => tab.pivot(r, j),
                None => {
                    tab.t.remove(r);
                    tab.basis.remove(r);
                    continue;
                }
            }
        }
        r += 1;
    }
    for row in tab.t.iter_mut() {
        for c in row.iter_mut().take(ncols).skip(nz) {
            *c = Q::zero();
        }
    }
    let mut c2 = cost.to_vec();
    c2.resize(ncols, Q::zero());
    if !tab.run(&c2, nz) {
        return Core::Unbounded;
    }
    let mut z = vec![Q::zero(); nz];
    for (r, &bcol) in tab.basis.iter().enumerate() {
        z[bcol] = tab.rhs(r).clone();
    }
    Core::Optimal(z)
}

/// Standard-form encoding of an LP: `x = x⁺ − x⁻`, one slack per
/// inequality, and the gap `δ` (with `δ ≤ 1`) when `gap` is set.
fn encode(lp: &LinearProgram, gap: bool) -> (Mat, Vec<Q>, usize) {
    let n = lp.nvars;
    let rows: Vec<(Vec<Q>, Q, Norm)> = lp.constraints.iter().map(|c| c.normalized()).collect();
    let nslack = rows.iter().filter(|r| r.2 != Norm::Eq).count() + gap as usize;
    let nz = 2 * n + gap as usize + nslack;
    let dcol = 2 * n;
    let mut a = Vec::new();
    let mut b = Vec::new();
    let mut s = 2 * n + gap as usize;
    for (coef, rhs, kind) in &rows {
        let mut row = vec![Q::zero(); nz];
        for k in 0..n {
            row[k] = coef[k].clone();
            row[n + k] = -coef[k].clone();
        }
        if *kind == Norm::Lt && gap {
            row[dcol] = Q::one();
        }
        if *kind != Norm::Eq {
            row[s] = Q::one();
            s += 1;
        }
        a.push(row);
        b.push(rhs.clone());
    }
    if gap {
        let mut row = vec![Q::zero(); nz];
        row[dcol] = Q::one();
        row[s] = Q::one();
        a.push(row);
        b.push(Q::one());
    }
    (a, b, nz)
}

fn decode(z: &[Q], n: usize) -> Vec<Q> {
    (0..n).map(|k| &z[k] - &z[n + k]).collect()
}

/// Exact feasibility with a witness or a Farkas certificate.
pub fn lp_feasible(lp: &LinearProgram) -> LpOutcome {
    let gap = lp.has_strict();
    let (a, b, nz) = encode(lp, gap);
    let mut cost = vec![Q::zero(); nz];
    if gap {
        cost[2 * lp.nvars] = Q::one();
    }
    match simplex(&a, &b, nz, &cost) {
        Core::Optimal(z) if !gap || z[2 * lp.nvars].is_positive() => {
            let x = decode(&z, lp.nvars);
            assert!(lp.satisfied_by(&x), "simplex witness fails verification");
            LpOutcome::Feasible(x)
        }
        Core::Unbounded => unreachable!("gap variable is bounded"),
        _ => {
            let cert = farkas(lp).expect("infeasible system without a Farkas certificate");
            assert!(verify_certificate(lp, &cert));
            LpOutcome::Infeasible(cert)
        }
    }
}

/// Maximise the objective. Strict constraints are not supported here.
pub fn lp_maximize(lp: &LinearProgram) -> LpOptimum {
    assert!(!lp.has_strict(), "lp_maximize takes non-strict constraints only");
    let c = lp.objective.clone().unwrap_or_else(|| vec![Q::zero(); lp.nvars]);
    let (a, b, nz) = encode(lp, false);
    let mut cost = vec![Q::zero(); nz];
    for k in 0..lp.nvars {
        cost[k] = c[k].clone();
        cost[lp.nvars + k] = -c[k].clone();
    }
    match simplex(&a, &b, nz, &cost) {
        Core::Optimal(z) => {
            let x = decode(&z, lp.nvars);
            let value = dot(&c, &x);
            LpOptimum::Optimal { x, value }
        }
        Core::Unbounded => LpOptimum::Unbounded,
        Core::Infeasible => LpOptimum::Infeasible(farkas(lp).expect("infeasible system without a Farkas certificate")),
    }
}

/// Search for multipliers `y` with `yᵀA = 0` and either `yᵀb = −1`, or
/// `yᵀb ≤ 0` with unit weight on the strict rows.
fn farkas(lp: &LinearProgram) -> Option<Certificate> {
    let rows: Vec<(Vec<Q>, Q, Norm)> = lp.constraints.iter().map(|c| c.normalized()).collect();
    let m = rows.len();
    // y = y⁺ − y⁻ for equalities, y ≥ 0 otherwise; one extra slack
    let nz = 2 * m + 1;
    let build = |variant: u8| -> (Mat, Vec<Q>) {
        let mut a = Vec::new();
        let mut b = Vec::new();
        for k in 0..lp.nvars {
            let mut row = vec![Q::zero(); nz];
            for (i, (coef, _, _)) in rows.iter().enumerate() {
                row[i] = coef[k].clone();
                row[m + i] = -coef[k].clone();
            }
            a.push(row);
            b.push(Q::zero());
        }
        let mut row = vec![Q::zero(); nz];
        for (i, (_, rhs, _)) in rows.iter().enumerate() {
            row[i] = rhs.clone();
            row[m + i] = -rhs.clone();
        }
        if variant == 0 {
            a.push(row);
            b.push(-Q::one());
        } else {
            row[2 * m] = Q::one();
            a.push(row);
            b.push(Q::zero());
            let mut s = vec![Q::zero(); nz];
            for (i, r) in rows.iter().enumerate() {
                if r.2 == Norm::Lt {
                    s[i] = Q::one();
                }
            }
            a.push(s);
            b.push(Q::one());
        }
        // y⁻ only exists for equalities
        for (i, r) in rows.iter().enumerate() {
            if r.2 != Norm::Eq {
                let mut fix = vec![Q::zero(); nz];
                fix[m + i] = Q::one();
                a.push(fix);
                b.push(Q::zero());
            }
        }
        (a, b)
    };
    for variant in [0u8, 1] {
        let (a, b) = build(variant);
        if let Core::Optimal(z) = simplex(&a, &b, nz, &vec![Q::zero(); nz]) {
            return Some(Certificate { multipliers: (0..m).map(|i| &z[i] - &z[m + i]).collect() });
        }
    }
    None
}

pub fn verify_certificate(lp: &LinearProgram, cert: &Certificate) -> bool {
    if cert.multipliers.len() != lp.constraints.len() {
        return false;
    }
    let mut lhs = vec![Q::zero(); lp.nvars];
    let mut rhs = Q::zero();
    let mut strict_weight = false;
    for (c, y) in lp.constraints.iter().zip(&cert.multipliers) {
        let (coef, b, kind) = c.normalized();
        if kind != Norm::Eq && y.is_negative() {
            return false;
        }
        if kind == Norm::Lt && y.is_positive() {
            strict_weight = true;
        }
        for (l, a) in lhs.iter_mut().zip(&coef) {
            *l += y * a;
        }
        rhs += y * &b;
    }
    linalg::is_zero_vec(&lhs) && (rhs.is_negative() || (rhs.is_zero() && strict_weight))
}

// ─── Fourier–Motzkin oracle ─────────────────────────────────────────────

/// Feasibility by eliminating variables one at a time. Rows remember the
/// original constraints they were combined from; after `k` eliminations a row
/// with more than `k + 1` ancestors is redundant and dropped.
pub fn fm_feasible(lp: &LinearProgram) -> bool {
    type Row = ((Vec<Q>, Q, bool), BTreeSet<usize>);
    let mut sys: Vec<Row> = Vec::new();
    for (i, c) in lp.constraints.iter().enumerate() {
        let (a, b, kind) = c.normalized();
        let anc: BTreeSet<usize> = [i].into();
        match kind {
            Norm::Le => sys.push((scale_row(a, b, false), anc)),
            Norm::Lt => sys.push((scale_row(a, b, true), anc)),
            Norm::Eq => {
                sys.push((scale_row(a.clone(), b.clone(), false), anc.clone()));
                sys.push((scale_row(neg(&a), -b, false), anc));
            }
        }
    }
    for k in 0..lp.nvars {
        let (mut pos, mut negs, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for r in sys {
            if r.0 .0[k].is_positive() {
                pos.push(r);
            } else if r.0 .0[k].is_negative() {
                negs.push(r);
            } else {
                rest.push(r);
            }
        }
        for (p, pa) in &pos {
            for (n, na) in &negs {
                let anc: BTreeSet<usize> = pa.union(na).copied().collect();
                if anc.len() > k + 2 {
                    continue;
                }
                let (fp, fn_) = (-n.0[k].clone(), p.0[k].clone());
                let a: Vec<Q> = p.0.iter().zip(&n.0).map(|(x, y)| x * &fp + y * &fn_).collect();
                let b = &p.1 * &fp + &n.1 * &fn_;
                rest.push((scale_row(a, b, p.2 || n.2), anc));
            }
        }
        let mut seen = BTreeSet::new();
        rest.retain(|(r, _)| seen.insert(r.clone()));
        sys = rest;
    }
    sys.iter().all(|((_, b, strict), _)| if *strict { b.is_positive() } else { !b.is_negative() })
}

/// Divide by the largest absolute coefficient so duplicates collapse.
fn scale_row(a: Vec<Q>, b: Q, strict: bool) -> (Vec<Q>, Q, bool) {
    let Some(m) = a.iter().map(|x| x.abs()).filter(|x| !x.is_zero()).max() else {
        return (a, b, strict);
    };
    (a.iter().map(|x| x / &m).collect(), b / m, strict)
}

// ─── cones ──────────────────────────────────────────────────────────────

/// `cone(rays) + span(lineality) = {x : ineqs·x ≥ 0, eqs·x = 0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalCone {
    pub dim: usize,
    pub rays: Vec<Vec<Q>>,
    pub lineality: Vec<Vec<Q>>,
    pub ineqs: Vec<Vec<Q>>,
    pub eqs: Vec<Vec<Q>>,
}

impl RationalCone {
    pub fn from_generators(dim: usize, rays: Vec<Vec<Q>>, lineality: Vec<Vec<Q>>) -> Self {
        let (ineqs, eqs) = double_description(dim, &rays, &lineality);
        // minimal generators from the facet description
        let (rays, lineality) = double_description(dim, &ineqs, &eqs);
        let c = RationalCone { dim, rays, lineality, ineqs, eqs };
        debug_assert!(c.verify());
        c
    }

    pub fn from_inequalities(dim: usize, ineqs: Vec<Vec<Q>>, eqs: Vec<Vec<Q>>) -> Self {
        let (rays, lineality) = double_description(dim, &ineqs, &eqs);
        Self::from_generators(dim, rays, lineality)
    }

    pub fn zero(dim: usize) -> Self {
        Self::from_generators(dim, Vec::new(), Vec::new())
    }

    pub fn space(dim: usize) -> Self {
        Self::from_generators(dim, Vec::new(), linalg::identity(dim))
    }

    pub fn dimension(&self) -> usize {
        let all: Vec<Vec<Q>> = self.rays.iter().chain(&self.lineality).cloned().collect();
        linalg::rank_of_rows(&all)
    }

    pub fn lineality_dim(&self) -> usize {
        self.lineality.len()
    }

    /// Membership through the H-description.
    pub fn contains(&self, x: &[Q]) -> bool {
        self.ineqs.iter().all(|g| !dot(g, x).is_negative()) && self.eqs.iter().all(|e| dot(e, x).is_zero())
    }

    /// Membership through the V-description, as an LP.
    pub fn contains_lp(&self, x: &[Q]) -> bool {
        let (nr, nl) = (self.rays.len(), self.lineality.len());
        let mut lp = LinearProgram::new(nr + nl);
        for k in 0..self.dim {
            let a: Vec<Q> = self.rays.iter().chain(&self.lineality).map(|g| g[k].clone()).collect();
            lp.push(a, Rel::Eq, x[k].clone());
        }
        for i in 0..nr {
            let mut a = vec![Q::zero(); nr + nl];
            a[i] = Q::one();
            lp.push(a, Rel::Ge, Q::zero());
        }
        lp_feasible(&lp).is_feasible()
    }

    /// Sum of the rays: a relative interior point.
    pub fn interior_point(&self) -> Vec<Q> {
        let mut p = vec![Q::zero(); self.dim];
        for r in &self.rays {
            for (x, y) in p.iter_mut().zip(r) {
                *x += y;
            }
        }
        p
    }

    pub fn intersect(&self, other: &RationalCone) -> RationalCone {
        let ineqs = self.ineqs.iter().chain(&other.ineqs).cloned().collect();
        let eqs = self.eqs.iter().chain(&other.eqs).cloned().collect();
        RationalCone::from_inequalities(self.dim, ineqs, eqs)
    }

    /// Both descriptions agree: every generator satisfies the inequalities,
    /// and every generator recomputed from the inequalities lies in the
    /// V-cone by LP.
    pub fn verify(&self) -> bool {
        let v_in_h = self.rays.iter().all(|r| self.contains(r))
            && self.lineality.iter().all(|l| self.contains(l) && self.contains(&neg(l)));
        if !v_in_h {
            return false;
        }
        let (rays, lin) = double_description(self.dim, &self.ineqs, &self.eqs);
        rays.iter().all(|r| self.contains_lp(r)) && lin.iter().all(|l| self.contains_lp(l) && self.contains_lp(&neg(l)))
    }
}

/// Generators `(rays, lineality basis)` of `{x : G x ≥ 0, E x = 0}`. Applied
/// to generators instead, it returns facet normals and equations of the dual
/// description.
pub fn double_description(dim: usize, ineqs: &[Vec<Q>], eqs: &[Vec<Q>]) -> (Vec<Vec<Q>>, Vec<Vec<Q>>) {
    let mut lin = linalg::identity(dim);
    let mut rays: Vec<(Vec<Q>, BTreeSet<usize>)> = Vec::new();
    let cons: Vec<(&Vec<Q>, bool)> = eqs.iter().map(|e| (e, true)).chain(ineqs.iter().map(|g| (g, false))).collect();
    for (c, &(g, is_eq)) in cons.iter().enumerate() {
        if let Some(k) = lin.iter().position(|l| !dot(g, l).is_zero()) {
            let mut l0 = lin.remove(k);
            let mut gl0 = dot(g, &l0);
            if gl0.is_negative() {
                l0 = neg(&l0);
                gl0 = -gl0;
            }
            for l in lin.iter_mut() {
                let f = dot(g, l) / &gl0;
                for (x, y) in l.iter_mut().zip(&l0) {
                    *x -= &f * y;
                }
            }
            for (r, tight) in rays.iter_mut() {
                let f = dot(g, r) / &gl0;
                for (x, y) in r.iter_mut().zip(&l0) {
                    *x -= &f * y;
                }
                *r = primitive(r);
                tight.insert(c);
            }
            if !is_eq {
                rays.push((primitive(&l0), (0..c).collect()));
            }
            continue;
        }
        let vals: Vec<Q> = rays.iter().map(|(r, _)| dot(g, r)).collect();
        let mut next: Vec<(Vec<Q>, BTreeSet<usize>)> = Vec::new();
        for (i, (r, t)) in rays.iter().enumerate() {
            if vals[i].is_zero() {
                let mut t = t.clone();
                t.insert(c);
                next.push((r.clone(), t));
            } else if vals[i].is_positive() && !is_eq {
                next.push((r.clone(), t.clone()));
            }
        }
        for p in (0..rays.len()).filter(|&i| vals[i].is_positive()) {
            for n in (0..rays.len()).filter(|&i| vals[i].is_negative()) {
                let common: BTreeSet<usize> = rays[p].1.intersection(&rays[n].1).copied().collect();
                let adjacent = !rays
                    .iter()
                    .enumerate()
                    .any(|(i, (_, t))| i != p && i != n && common.is_subset(t));
                if !adjacent {
                    continue;
                }
                let (sp, sn) = (&vals[p], -vals[n].clone());
                let v: Vec<Q> = rays[p].0.iter().zip(&rays[n].0).map(|(x, y)| y * sp + x * &sn).collect();
                let mut t = common;
                t.insert(c);
                next.push((primitive(&v), t));
            }
        }
        rays = next;
    }
    let mut seen = BTreeSet::new();
    let rays: Vec<Vec<Q>> = rays.into_iter().map(|(r, _)| r).filter(|r| !linalg::is_zero_vec(r) && seen.insert(r.clone())).collect();
    (rays, lin.iter().map(|l| primitive(l)).collect())
}

/// `A·ℝᵐ + C`, where the columns of `a` (an `n × m` matrix) become lineality.
pub fn cone_hull_sum(a: &Mat, c: &RationalCone) -> RationalCone {
    let m = a.first().map_or(0, |r| r.len());
    let mut lin = c.lineality.clone();
    lin.extend(linalg::transpose(a, m));
    RationalCone::from_generators(c.dim, c.rays.clone(), lin)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoverCheck {
    Equal,
    /// A point of `(A + C) ∩ (A + C′)` outside `A + (C ∩ C′)`.
    Counterexample(Vec<Q>),
}

/// One probe of [`cover_equality_lps`]: is some point of the left-hand
/// side strictly outside the facet `probe ≥ 0` of the right-hand side?
#[derive(Clone, Debug)]
pub struct CoverLp {
    pub probe: Vec<Q>,
    pub lp: LinearProgram,
    pub outcome: LpOutcome,
}

/// Compare `(Aℝᵐ + C) ∩ (Aℝᵐ + C′)` with `Aℝᵐ + (C ∩ C′)`: one strict LP
/// per facet (and per equation, both signs) of the right-hand side. Equality
/// holds iff every LP is infeasible.
pub fn cover_equality_lps(a: &Mat, c: &RationalCone, c2: &RationalCone) -> Vec<CoverLp> {
    let lhs1 = cone_hull_sum(a, c);
    let lhs2 = cone_hull_sum(a, c2);
    let rhs = cone_hull_sum(a, &c.intersect(c2));
    let dim = c.dim;
    let mut probes: Vec<Vec<Q>> = rhs.ineqs.clone();
    for e in &rhs.eqs {
        probes.push(e.clone());
        probes.push(neg(e));
    }
    probes
        .into_par_iter()
        .map(|g| {
            let mut lp = LinearProgram::new(dim);
            for h in lhs1.ineqs.iter().chain(&lhs2.ineqs) {
                lp.push(h.clone(), Rel::Ge, Q::zero());
            }
            for e in lhs1.eqs.iter().chain(&lhs2.eqs) {
                lp.push(e.clone(), Rel::Eq, Q::zero());
            }
            lp.push(g.clone(), Rel::Lt, Q::zero());
            let outcome = lp_feasible(&lp);
            CoverLp { probe: g, lp, outcome }
        })
        .collect()
}

pub fn cover_equality_check(a: &Mat, c: &RationalCone, c2: &RationalCone) -> CoverCheck {
    match cover_equality_lps(a, c, c2).into_iter().find_map(|r| match r.outcome {
        LpOutcome::Feasible(x) => Some(x),
        LpOutcome::Infeasible(_) => None,
    }) {
        Some(x) => CoverCheck::Counterexample(x),
        None => CoverCheck::Equal,
    }
}
