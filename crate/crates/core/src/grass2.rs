//! The stratified, `ℝᵐ`-equivariant section for the cone over the
//! Grassmannian of planes in Plücker coordinates `x_ij`, `i < j`.

use crate::linsection::{eval_lin_section, LinSectionPoint};
use crate::matroids::{pair_label, Matroid, Verdict};
use crate::tropcore::{self, k_subsets, min_attained_twice, pair_index, pairs, TropScalar};
use crate::valfield::{Monomial, Polynomial, ValuedScalar, WeightAssignment};
use crate::{Error, Result, Q};
use num::Zero;
use rand::Rng;

/// One tropical coordinate per pair, in `pair_index` order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlueckerPoint {
    pub m: usize,
    pub xi: Vec<TropScalar>,
}

impl PlueckerPoint {
    pub fn new(m: usize, xi: Vec<TropScalar>) -> Result<Self> {
        if m < 2 || xi.len() != m * (m - 1) / 2 {
            return Err(Error::Dimension(format!("{} pair values for m = {m}", xi.len())));
        }
        Ok(PlueckerPoint { m, xi })
    }

    /// Symmetric access, `ξ_ji = ξ_ij`.
    pub fn get(&self, i: usize, j: usize) -> &TropScalar {
        &self.xi[pair_index(self.m, i, j)]
    }
}

pub fn grass_vars(m: usize) -> Vec<String> {
    pairs(m).into_iter().map(|(i, j)| pair_label(i, j, m)).collect()
}

/// `x_ij ↦ e_i + e_j`.
pub fn grass_weights(m: usize) -> WeightAssignment {
    WeightAssignment {
        weights: pairs(m)
            .into_iter()
            .map(|(i, j)| {
                let mut w = vec![0; m];
                w[i] = 1;
                w[j] = 1;
                w
            })
            .collect(),
    }
}

/// `x_ij x_kl − x_ik x_jl + x_il x_jk`.
pub fn pluecker_quadric(m: usize, i: usize, j: usize, k: usize, l: usize) -> Polynomial {
    let v = grass_vars(m);
    let x = |a, b| Polynomial::var(&v, pair_index(m, a, b));
    x(i, j).mul(&x(k, l)).sub(&x(i, k).mul(&x(j, l))).add(&x(i, l).mul(&x(j, k)))
}

/// `{i : ξ_ij ≠ ∞ for some j}`.
pub fn support(p: &PlueckerPoint) -> Result<Vec<usize>> {
    let j = tropcore::pair_support(p.m, &p.xi);
    if j.len() == 1 {
        return Err(Error::Dimension("support of size one".into()));
    }
    Ok(j)
}

/// Three-term relations on every quadruple; the witness is `[i, j, k, l]`.
pub fn membership_trop_gr2(p: &PlueckerPoint) -> Verdict {
    for q in k_subsets(p.m, 4) {
        let (i, j, k, l) = (q[0], q[1], q[2], q[3]);
        let terms = [
            p.get(i, j).plus(p.get(k, l)),
            p.get(i, k).plus(p.get(j, l)),
            p.get(i, l).plus(p.get(j, k)),
        ];
        if !min_attained_twice(&terms) {
            return Verdict::no(q);
        }
    }
    Verdict::yes()
}

/// Pairs inside `support` as a graphic matroid on the `m` vertices.
fn support_graph(m: usize, support: &[usize]) -> (Matroid, Vec<usize>) {
    let inner: Vec<usize> = pairs(m)
        .into_iter()
        .enumerate()
        .filter(|(_, (i, j))| support.contains(i) && support.contains(j))
        .map(|(k, _)| k)
        .collect();
    let ps = pairs(m);
    let edges = inner.iter().map(|&k| ps[k]).collect();
    let labels = inner.iter().map(|&k| pair_label(ps[k].0, ps[k].1, m)).collect();
    (Matroid::graphic(m, edges, labels), inner)
}

/// Every triangle of `K_J` has its minimum twice, `J` the support of `η`.
pub fn line_through_zero_check(m: usize, eta: &[TropScalar]) -> bool {
    let j = tropcore::pair_support(m, eta);
    k_subsets(j.len(), 3).into_iter().all(|t| {
        let (a, b, c) = (j[t[0]], j[t[1]], j[t[2]]);
        min_attained_twice(&[eta[pair_index(m, a, b)].clone(), eta[pair_index(m, a, c)].clone(), eta[pair_index(m, b, c)].clone()])
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub support: Vec<usize>,
    pub tau: Vec<TropScalar>,
    pub eta: Vec<TropScalar>,
}

/// `ξ = Aτ + η` with `τ` from the line through `ξ` meeting `H`, checked
/// against the perturbation oracle, and `η` a line through 0.
pub fn decompose(p: &PlueckerPoint) -> Result<Decomposition> {
    let sup = support(p)?;
    if sup.is_empty() {
        return Err(Error::Precondition("ξ is all ∞".into()));
    }
    let tau = tropcore::line_h_formula(p.m, &p.xi)?;
    let eta = subtract_tau(p, &tau);
    if !line_through_zero_check(p.m, &eta) {
        return Err(Error::NotMember("ξ − Aτ is not a line through 0".into()));
    }
    let checked = tropcore::stable_intersection_line_h(p.m, &p.xi)?;
    debug_assert_eq!(checked, tau);
    Ok(Decomposition { support: sup, tau, eta })
}

fn subtract_tau(p: &PlueckerPoint, tau: &[TropScalar]) -> Vec<TropScalar> {
    pairs(p.m)
        .into_iter()
        .map(|(i, j)| match (p.get(i, j), &tau[i], &tau[j]) {
            (TropScalar::Fin(x), TropScalar::Fin(a), TropScalar::Fin(b)) => TropScalar::Fin(x - a - b),
            _ => TropScalar::Inf,
        })
        .collect()
}

/// `Aτ + η`.
pub fn compose(m: usize, tau: &[TropScalar], eta: &[TropScalar]) -> PlueckerPoint {
    let xi = pairs(m).into_iter().map(|(i, j)| tau[i].plus(&tau[j]).plus(&eta[pair_index(m, i, j)])).collect();
    PlueckerPoint { m, xi }
}

#[derive(Clone, Debug)]
pub struct GrassSectionPoint {
    pub m: usize,
    pub xi: Vec<TropScalar>,
    pub support: Vec<usize>,
    pub tau: Vec<TropScalar>,
    pub eta: Vec<TropScalar>,
    /// Spanning tree of `K_J` (pair indices); pairs with `η = ∞` come first.
    pub tree: Vec<usize>,
    /// Section of `Y_J` at `η`; `None` on the stratum `J = ∅`.
    pub inner: Option<LinSectionPoint>,
}

pub fn build_grass_section(p: &PlueckerPoint) -> Result<GrassSectionPoint> {
    if p.xi.iter().all(|x| x.is_inf()) {
        return Ok(GrassSectionPoint {
            m: p.m,
            xi: p.xi.clone(),
            support: Vec::new(),
            tau: vec![TropScalar::Inf; p.m],
            eta: p.xi.clone(),
            tree: Vec::new(),
            inner: None,
        });
    }
    let d = decompose(p)?;
    let (g, inner) = support_graph(p.m, &d.support);
    let w: Vec<TropScalar> = inner.iter().map(|&k| d.eta[k].clone()).collect();
    let tree: Vec<usize> = g.greedy_compatible_basis(&w).into_iter().map(|e| inner[e]).collect();
    build_from_parts(p.m, d.tau, d.eta, tree)
}

/// All spanning trees of `K_J` of maximal `η`-weight.
pub fn compatible_trees(sp: &GrassSectionPoint) -> Vec<Vec<usize>> {
    let (g, inner) = support_graph(sp.m, &sp.support);
    let w: Vec<TropScalar> = inner.iter().map(|&k| sp.eta[k].clone()).collect();
    g.max_weight_bases(&w).into_iter().map(|b| b.into_iter().map(|e| inner[e]).collect()).collect()
}

/// Section from a decomposition and a spanning tree of `K_J`, without
/// re-deriving `τ`. Used for gauge and tree independence checks.
pub fn build_from_parts(m: usize, tau: Vec<TropScalar>, eta: Vec<TropScalar>, tree: Vec<usize>) -> Result<GrassSectionPoint> {
    let support: Vec<usize> = (0..m).filter(|&i| !tau[i].is_inf()).collect();
    if support.len() < 2 {
        return Err(Error::Precondition("τ must be finite on at least two indices".into()));
    }
    let xi = compose(m, &tau, &eta).xi;
    let ps = pairs(m);
    // the tree, with its ∞ edges contracted, gives coordinates on Y′
    let basis: Vec<usize> = tree.iter().copied().filter(|&k| !eta[k].is_inf()).collect();
    let s: Vec<usize> = (0..ps.len()).filter(|&k| eta[k].is_inf()).collect();
    let mut rewrite = vec![vec![Q::zero(); basis.len()]; ps.len()];
    for (k, &(a, b)) in ps.iter().enumerate() {
        if eta[k].is_inf() {
            continue;
        }
        let path = tree_path_signed(m, &ps, &tree, a, b)
            .ok_or_else(|| Error::Precondition(format!("tree does not connect {} and {}", a + 1, b + 1)))?;
        for (e, sign) in path {
            if let Some(pos) = basis.iter().position(|&x| x == e) {
                rewrite[k][pos] += crate::q(sign);
            }
        }
    }
    let inner = LinSectionPoint { eta: eta.clone(), s, basis, rewrite, vars: grass_vars(m) };
    if !inner.check_invariants() {
        return Err(Error::Precondition("tree is not compatible with η".into()));
    }
    Ok(GrassSectionPoint { m, xi, support, tau, eta, tree, inner: Some(inner) })
}

/// Edges on the tree path from `a` to `b` with the sign of `x_e` in
/// `y_a − y_b` (`x_uv = y_u − y_v` for `u < v`).
fn tree_path_signed(m: usize, ps: &[(usize, usize)], tree: &[usize], a: usize, b: usize) -> Option<Vec<(usize, i64)>> {
    let mut prev: Vec<Option<(usize, usize)>> = vec![None; m];
    let mut seen = vec![false; m];
    seen[a] = true;
    let mut stack = vec![a];
    while let Some(u) = stack.pop() {
        for &e in tree {
            let (p, q) = ps[e];
            let w = if p == u { q } else if q == u { p } else { continue };
            if !seen[w] {
                seen[w] = true;
                prev[w] = Some((u, e));
                stack.push(w);
            }
        }
    }
    if !seen[b] {
        return None;
    }
    let mut out = Vec::new();
    let mut w = b;
    while let Some((u, e)) = prev[w] {
        // step u → w contributes y_u − y_w
        out.push((e, if u < w { 1 } else { -1 }));
        w = u;
    }
    Some(out)
}

/// `μ(τ, σ_{Y_J}(η))(f) = min_β σ_{Y_J}(η)(f_β) + β·τ`; components with
/// weight outside `J` are ∞, and on `J = ∅` only the constant term counts.
pub fn eval_grass_section(sp: &GrassSectionPoint, f: &Polynomial) -> Result<TropScalar> {
    let f = f.reindex(&grass_vars(sp.m))?;
    let mut best = TropScalar::Inf;
    for (beta, fb) in f.weight_decompose(&grass_weights(sp.m)) {
        if (0..sp.m).any(|i| beta[i] > 0 && !sp.support.contains(&i)) {
            continue;
        }
        let inner = match &sp.inner {
            Some(lin) => eval_lin_section(lin, &fb)?,
            None => fb.terms().find(|(m, _)| m.degree() == 0).map_or(TropScalar::Inf, |(_, c)| c.valuation()),
        };
        let mut v = inner;
        for (i, &b) in beta.iter().enumerate() {
            if b > 0 {
                v = v.plus(&sp.tau[i].scale(b));
            }
        }
        best = best.min(v);
    }
    Ok(best)
}

/// `Aτ + η` for random `τ` on `J` and `η` extended from random weights on
/// a random spanning tree of `K_J`; independent of [`decompose`].
pub fn random_member<R: Rng>(m: usize, support: &[usize], allow_inf: bool, rng: &mut R) -> PlueckerPoint {
    let mut tau = vec![TropScalar::Inf; m];
    for &i in support {
        tau[i] = TropScalar::int(rng.gen_range(-3..=3));
    }
    let (g, inner) = support_graph(m, support);
    let mut eta = vec![TropScalar::Inf; m * (m - 1) / 2];
    if support.len() >= 2 {
        // random tree: attach each vertex to an earlier one
        let mut order = support.to_vec();
        for k in (1..order.len()).rev() {
            order.swap(k, rng.gen_range(0..=k));
        }
        let tree: Vec<usize> = (1..order.len())
            .map(|k| {
                let u = order[rng.gen_range(0..k)];
                let pi = pair_index(m, u, order[k]);
                inner.iter().position(|&x| x == pi).unwrap()
            })
            .collect();
        let w: Vec<TropScalar> = tree
            .iter()
            .map(|_| if allow_inf && rng.gen_bool(0.15) { TropScalar::Inf } else { TropScalar::int(rng.gen_range(-2..=3)) })
            .collect();
        let ext = g.extend_weights_from_basis(&tree, &w).expect("spanning tree");
        for (e, &k) in inner.iter().enumerate() {
            eta[k] = ext[e].clone();
        }
    }
    compose(m, &tau, &eta)
}

/// A monomial in the Plücker variables with a valued coefficient.
pub fn monomial(m: usize, exps: &[(usize, usize, u32)], coeff: ValuedScalar) -> Polynomial {
    let mut e = vec![0; m * (m - 1) / 2];
    for &(i, j, k) in exps {
        e[pair_index(m, i, j)] += k;
    }
    Polynomial::from_terms(&grass_vars(m), [(Monomial(e), coeff)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linsection::{build_lin_section, LinearSpaceParam};
    use crate::tropcore::TropScalar::{Fin, Inf};
    use crate::{q, qq};
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    fn xi(m: usize, v: &[i64]) -> PlueckerPoint {
        PlueckerPoint::new(m, v.iter().map(|&x| if x == i64::MAX { Inf } else { Fin(q(x)) }).collect()).unwrap()
    }

    const I: i64 = i64::MAX;

    #[test]
    fn support_examples() {
        assert!(support(&xi(4, &[I; 6])).unwrap().is_empty());
        assert_eq!(support(&xi(4, &[5, I, I, I, I, I])).unwrap(), vec![0, 1]);
        assert_eq!(support(&xi(4, &[0; 6])).unwrap(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn membership_examples() {
        assert!(membership_trop_gr2(&xi(4, &[3, 1, 1, 3, 2, 0])).member);
        assert!(membership_trop_gr2(&xi(4, &[0, 0, 0, 0, 0, 1])).member);
        assert_eq!(membership_trop_gr2(&xi(4, &[0, 0, 0, 0, 1, 2])), Verdict::no(vec![0, 1, 2, 3]));
    }

    #[test]
    fn line_through_zero_examples() {
        assert!(line_through_zero_check(4, &vec![TropScalar::zero(); 6]));
        let ext = Matroid::complete_graph(4).extend_weights_from_basis(&[0, 3, 5], &[Fin(q(0)), Fin(q(1)), Fin(q(0))]).unwrap();
        assert!(line_through_zero_check(4, &ext));
        assert!(!line_through_zero_check(3, &[Fin(q(0)), Fin(q(1)), Fin(q(1))]));
    }

    #[test]
    fn decompose_examples() {
        let d = decompose(&xi(4, &[3, 1, 1, 3, 2, 0])).unwrap();
        assert_eq!(d.tau, vec![Fin(q(1)), Fin(q(2)), Fin(q(0)), Fin(q(0))]);
        assert_eq!(d.eta, xi(4, &[0, 0, 0, 1, 0, 0]).xi);
        let ext = Matroid::complete_graph(4).extend_weights_from_basis(&[0, 3, 5], &[Fin(q(0)), Fin(q(1)), Fin(q(0))]).unwrap();
        assert_eq!(d.eta, ext);
        let d = decompose(&xi(4, &[5, I, I, I, I, I])).unwrap();
        assert_eq!(d.tau, vec![Fin(q(5)), Fin(q(5)), Inf, Inf]);
        assert_eq!(d.eta[0], Fin(q(-5)));
        let d = decompose(&xi(4, &[0; 6])).unwrap();
        assert_eq!(d.tau, vec![TropScalar::zero(); 4]);
        assert_eq!(d.eta, vec![TropScalar::zero(); 6]);
        assert!(matches!(decompose(&xi(4, &[0, 0, 0, 0, 1, 2])), Err(Error::NotMember(_))));
    }

    #[test]
    fn eval_examples() {
        let p = xi(4, &[3, 1, 1, 3, 2, 0]);
        let sp = build_grass_section(&p).unwrap();
        let v = grass_vars(4);
        assert_eq!(eval_grass_section(&sp, &Polynomial::var(&v, 0)).unwrap(), Fin(q(3)));
        assert_eq!(eval_grass_section(&sp, &pluecker_quadric(4, 0, 1, 2, 3)).unwrap(), Inf);
        let f = Polynomial::var(&v, 0).mul(&Polynomial::var(&v, 5));
        assert_eq!(eval_grass_section(&sp, &f).unwrap(), Fin(q(3)));
    }

    #[test]
    fn all_infinite_point_keeps_constant_term() {
        let sp = build_grass_section(&xi(4, &[I; 6])).unwrap();
        let v = grass_vars(4);
        let c = Polynomial::constant(&v, ValuedScalar::term(q(2), qq(3, 2)));
        let f = c.add(&Polynomial::var(&v, 1));
        assert_eq!(eval_grass_section(&sp, &f).unwrap(), Fin(qq(3, 2)));
        assert_eq!(eval_grass_section(&sp, &Polynomial::var(&v, 1)).unwrap(), Inf);
    }

    fn corpus(m: usize, seed: u64) -> Vec<Polynomial> {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let v = grass_vars(m);
        let n = v.len();
        let mut out = Vec::new();
        if m >= 4 {
            out.push(pluecker_quadric(m, 0, 1, 2, m - 1));
        }
        for _ in 0..4 {
            let terms: Vec<(Monomial, ValuedScalar)> = (0..rng.gen_range(1..4))
                .map(|_| {
                    let e: Vec<u32> = (0..n).map(|_| if rng.gen_bool(0.25) { rng.gen_range(1..3) } else { 0 }).collect();
                    (Monomial(e), ValuedScalar::term(q(rng.gen_range(-2..=2)).max(q(1)), q(rng.gen_range(0..3))))
                })
                .collect();
            out.push(Polynomial::from_terms(&v, terms));
        }
        let x = |a, b| Polynomial::var(&v, pair_index(m, a, b));
        out.push(x(0, 1).mul(&x(m - 2, m - 1).pow(2)).sub(&x(0, 2).mul(&x(1, 2)).mul(&x(0, m - 1))));
        out.push(x(0, 1).add(&x(1, 2)).add(&x(0, 2)));
        out
    }

    fn random_support<R: Rng>(m: usize, rng: &mut R) -> Vec<usize> {
        loop {
            let s: Vec<usize> = (0..m).filter(|_| rng.gen_bool(0.8)).collect();
            if s.len() != 1 {
                return s;
            }
        }
    }

    /// `Y_J` as a generic linear space, evaluated without trees.
    fn generic_eval(sp: &GrassSectionPoint, f: &Polynomial) -> TropScalar {
        let m = sp.m;
        let j = &sp.support;
        let d = j.len() - 1;
        let forms: Vec<Vec<Q>> = pairs(m)
            .into_iter()
            .map(|(a, b)| {
                let mut row = vec![Q::zero(); d];
                if j.contains(&a) && j.contains(&b) {
                    // y_{last} = 0 fixes the translation
                    let pa = j.iter().position(|&x| x == a).unwrap();
                    let pb = j.iter().position(|&x| x == b).unwrap();
                    if pa < d {
                        row[pa] += q(1);
                    }
                    if pb < d {
                        row[pb] -= q(1);
                    }
                }
                row
            })
            .collect();
        let y = LinearSpaceParam::new_flagged(forms, grass_vars(m)).unwrap();
        let lin = build_lin_section(&y, &sp.eta).unwrap();
        let mut best = Inf;
        for (beta, fb) in f.weight_decompose(&grass_weights(m)) {
            if (0..m).any(|i| beta[i] > 0 && !j.contains(&i)) {
                continue;
            }
            let mut v = eval_lin_section(&lin, &fb).unwrap();
            for (i, &b) in beta.iter().enumerate() {
                if b > 0 {
                    v = v.plus(&sp.tau[i].scale(b));
                }
            }
            best = best.min(v);
        }
        best
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn round_trip_on_coordinates(m in 3usize..=6, seed in any::<u64>()) {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let sup = random_support(m, &mut rng);
            let p = random_member(m, &sup, true, &mut rng);
            prop_assert!(membership_trop_gr2(&p).member);
            let sp = build_grass_section(&p).unwrap();
            for k in 0..p.xi.len() {
                prop_assert_eq!(eval_grass_section(&sp, &Polynomial::var(&grass_vars(m), k)).unwrap(), p.xi[k].clone());
            }
            let comp = compose(m, &sp.tau, &sp.eta);
            prop_assert_eq!(comp.xi, p.xi.clone());
        }

        #[test]
        fn tree_independence_and_generic_agreement(m in 3usize..=5, seed in any::<u64>()) {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let sup = random_support(m, &mut rng);
            let p = random_member(m, &sup, true, &mut rng);
            let sp = build_grass_section(&p).unwrap();
            prop_assume!(sp.inner.is_some());
            let fs = corpus(m, seed);
            let base: Vec<TropScalar> = fs.iter().map(|f| eval_grass_section(&sp, f).unwrap()).collect();
            for (f, b) in fs.iter().zip(&base) {
                prop_assert_eq!(&generic_eval(&sp, f), b);
            }
            for tree in compatible_trees(&sp) {
                let other = build_from_parts(m, sp.tau.clone(), sp.eta.clone(), tree).unwrap();
                for (f, b) in fs.iter().zip(&base) {
                    prop_assert_eq!(&eval_grass_section(&other, f).unwrap(), b);
                }
            }
        }

        #[test]
        fn equivariance(m in 3usize..=5, seed in any::<u64>()) {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let sup = random_support(m, &mut rng);
            let p = random_member(m, &sup, true, &mut rng);
            let shift: Vec<TropScalar> = (0..m).map(|_| Fin(qq(rng.gen_range(-20..=20), rng.gen_range(1..=4)))).collect();
            let moved = compose(m, &shift, &p.xi);
            let (a, b) = (build_grass_section(&p).unwrap(), build_grass_section(&moved).unwrap());
            for f in corpus(m, seed) {
                for (beta, fb) in f.weight_decompose(&grass_weights(m)) {
                    let lift = (0..m).fold(TropScalar::zero(), |acc, i| acc.plus(&shift[i].scale(beta[i])));
                    prop_assert_eq!(eval_grass_section(&b, &fb).unwrap(), eval_grass_section(&a, &fb).unwrap().plus(&lift));
                }
            }
        }

        #[test]
        fn gauge_invariance(m in 3usize..=5, seed in any::<u64>(), c in -6i64..=6) {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let sup = random_support(m, &mut rng);
            let p = random_member(m, &sup, true, &mut rng);
            let sp = build_grass_section(&p).unwrap();
            prop_assume!(sp.inner.is_some());
            let c = Fin(qq(c, 2));
            let tau: Vec<TropScalar> = sp.tau.iter().map(|t| t.plus(&c)).collect();
            let eta: Vec<TropScalar> = sp.eta.iter().map(|e| match (e, &c) {
                (Fin(x), Fin(y)) => Fin(x - y - y),
                _ => Inf,
            }).collect();
            let other = build_from_parts(m, tau, eta, sp.tree.clone()).unwrap();
            for f in corpus(m, seed) {
                prop_assert_eq!(eval_grass_section(&other, &f).unwrap(), eval_grass_section(&sp, &f).unwrap());
            }
        }

        #[test]
        fn valuation_axioms(m in 3usize..=5, seed in any::<u64>()) {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let sup = random_support(m, &mut rng);
            let p = random_member(m, &sup, true, &mut rng);
            let sp = build_grass_section(&p).unwrap();
            let fs = corpus(m, seed);
            for f in &fs {
                for g in &fs {
                    let (ef, eg) = (eval_grass_section(&sp, f).unwrap(), eval_grass_section(&sp, g).unwrap());
                    prop_assert!(eval_grass_section(&sp, &f.add(g)).unwrap() >= ef.clone().min(eg.clone()));
                    for (_, fb) in f.weight_decompose(&grass_weights(m)) {
                        for (_, gb) in g.weight_decompose(&grass_weights(m)) {
                            let (a, b) = (eval_grass_section(&sp, &fb).unwrap(), eval_grass_section(&sp, &gb).unwrap());
                            prop_assert_eq!(eval_grass_section(&sp, &fb.mul(&gb)).unwrap(), a.plus(&b));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn decomposition_iff_membership() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for m in 3..=6 {
            let mut seen = [0usize; 2];
            for _ in 0..400 {
                let sup = random_support(m, &mut rng);
                let mut p = random_member(m, &sup, true, &mut rng);
                // knock one or two coordinates off the variety
                for _ in 0..rng.gen_range(0..3) {
                    let k = rng.gen_range(0..p.xi.len());
                    p.xi[k] = match rng.gen_range(0..4) {
                        0 => Inf,
                        d => p.xi[k].plus(&Fin(q(d - 2))).min(Fin(q(rng.gen_range(-3..4)))),
                    };
                }
                if support(&p).map_or(true, |s| s.is_empty()) {
                    continue;
                }
                let member = membership_trop_gr2(&p).member;
                seen[member as usize] += 1;
                assert_eq!(decompose(&p).is_ok(), member, "{p:?}");
            }
            assert!(seen[1] > 0);
            assert!(m == 3 || seen[0] > 0);
        }
    }

    #[test]
    fn stratum_boundary_continuity() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for m in 3..=5 {
            for _ in 0..10 {
                let full = random_member(m, &(0..m).collect::<Vec<_>>(), false, &mut rng);
                let d = decompose(&full).unwrap();
                let j: Vec<usize> = (0..m - 1).collect();
                let limit_tau: Vec<TropScalar> = (0..m).map(|i| if j.contains(&i) { d.tau[i].clone() } else { Inf }).collect();
                let limit = compose(m, &limit_tau, &d.eta);
                let sl = build_grass_section(&limit).unwrap();
                for f in corpus(m, 1) {
                    let target = eval_grass_section(&sl, &f).unwrap();
                    let vals: Vec<TropScalar> = [40, 80, 160]
                        .iter()
                        .map(|&p| {
                            let mut tau = d.tau.clone();
                            tau[m - 1] = Fin(q(p));
                            eval_grass_section(&build_grass_section(&compose(m, &tau, &d.eta)).unwrap(), &f).unwrap()
                        })
                        .collect();
                    if target.is_inf() {
                        let diverging = vals[0] < vals[1] && vals[1] < vals[2];
                        assert!(diverging || vals.iter().all(|v| v.is_inf()), "{f}: {vals:?}");
                    } else {
                        assert!(vals.iter().all(|v| *v == target), "{f}: {vals:?} vs {target}");
                    }
                }
            }
        }
    }
}
