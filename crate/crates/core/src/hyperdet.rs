//! The 2×2×2 hyperdeterminant: its torus, the linear space `Y = (im A)^⊥`,
//! the Bergman fan of `Y` up to cube symmetry, the LP verification that the
//! covering cones glue, and the section built from them.
//!
//! Coordinates are indexed by `v = 4i + 2j + k` for `x_ijk`.

use crate::linalg::{self, Mat};
use crate::linsection::{build_lin_section, eval_lin_section, LinSectionPoint, LinearSpaceParam};
use crate::matroids::Matroid;
use crate::polyhedra::{cone_hull_sum, cover_equality_lps, verify_certificate, LpOutcome, RationalCone};
use crate::tropcore::TropScalar;
use crate::valfield::{Monomial, Polynomial, ValuedScalar, WeightAssignment};
use crate::{fmt_q, q, Error, Result, Q};
use num::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};
use std::collections::{BTreeMap, HashMap};

pub const N: usize = 8;

pub fn cube_vars() -> Vec<String> {
    (0..N).map(|v| format!("x{}{}{}", v >> 2, (v >> 1) & 1, v & 1)).collect()
}

fn bits(v: usize) -> [usize; 3] {
    [v >> 2, (v >> 1) & 1, v & 1]
}

#[derive(Clone, Debug)]
pub struct HyperdetContext {
    pub delta: Polynomial,
    /// 8×6, row `v` is `e_i + e_{2+j} + e_{4+k}`.
    pub a: Mat,
    pub y_basis: Vec<Vec<Q>>,
    pub y: LinearSpaceParam,
    pub cube_matroid: Matroid,
    /// `g[v]` is the image of vertex `v`.
    pub symmetry_group: Vec<[usize; N]>,
}

fn delta_polynomial() -> Polynomial {
    let v = cube_vars();
    let idx = |s: &str| v.iter().position(|x| &x[1..] == s).unwrap();
    let terms: [(i64, [&str; 4]); 12] = [
        (1, ["000", "000", "111", "111"]),
        (1, ["001", "001", "110", "110"]),
        (1, ["010", "010", "101", "101"]),
        (1, ["100", "100", "011", "011"]),
        (-2, ["000", "001", "110", "111"]),
        (-2, ["000", "010", "101", "111"]),
        (-2, ["000", "011", "100", "111"]),
        (-2, ["001", "010", "101", "110"]),
        (-2, ["001", "011", "110", "100"]),
        (-2, ["010", "011", "101", "100"]),
        (4, ["000", "011", "101", "110"]),
        (4, ["001", "010", "100", "111"]),
    ];
    Polynomial::from_terms(
        &v,
        terms.iter().map(|(c, xs)| {
            let mut e = vec![0u32; N];
            for x in xs {
                e[idx(x)] += 1;
            }
            (Monomial(e), ValuedScalar::constant(q(*c)))
        }),
    )
}

fn torus_matrix() -> Mat {
    (0..N)
        .map(|v| {
            let [i, j, k] = bits(v);
            let mut row = vec![Q::zero(); 6];
            row[i] = q(1);
            row[2 + j] = q(1);
            row[4 + k] = q(1);
            row
        })
        .collect()
}

fn symmetry_group() -> Vec<[usize; N]> {
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut out = Vec::new();
    for p in perms {
        for flip in 0..8usize {
            let mut g = [0; N];
            for (v, gv) in g.iter_mut().enumerate() {
                let b = bits(v);
                let mut w = [0; 3];
                for a in 0..3 {
                    w[p[a]] = b[a] ^ ((flip >> p[a]) & 1);
                }
                *gv = 4 * w[0] + 2 * w[1] + w[2];
            }
            out.push(g);
        }
    }
    out
}

pub fn four_subsets() -> Vec<Vec<usize>> {
    crate::tropcore::k_subsets(N, 4)
}

/// Builds everything and checks every structural invariant.
pub fn build_context() -> Result<HyperdetContext> {
    let delta = delta_polynomial();
    let mut coeffs: Vec<Q> = delta.terms().map(|(_, c)| c.residue()).collect();
    coeffs.sort();
    let expect: Vec<Q> = [-2, -2, -2, -2, -2, -2, 1, 1, 1, 1, 4, 4].iter().map(|&c| q(c)).collect();
    if delta.num_terms() != 12 || coeffs != expect {
        return Err(Error::Oracle(format!("hyperdeterminant has {} terms", delta.num_terms())));
    }
    let a = torus_matrix();
    let ker = linalg::nullspace(&a, 6);
    let ker_ok = ker.len() == 2
        && ker.iter().all(|k| k[0] == k[1] && k[2] == k[3] && k[4] == k[5] && (&k[0] + &k[2] + &k[4]).is_zero());
    if !ker_ok {
        return Err(Error::Oracle(format!("ker A has dimension {}", ker.len())));
    }
    if linalg::rank(&a, 6) != 4 {
        return Err(Error::Oracle("im A is not 4-dimensional".into()));
    }
    let y_basis = linalg::nullspace(&linalg::transpose(&a, 6), N);
    if y_basis.len() != 4 {
        return Err(Error::Oracle(format!("Y has dimension {}", y_basis.len())));
    }
    let y = LinearSpaceParam::new(linalg::transpose(&y_basis, N), cube_vars())?;
    let cube_matroid = Matroid::linear(
        (0..N)
            .map(|v| {
                let b = bits(v);
                vec![q(1), q(b[0] as i64), q(b[1] as i64), q(b[2] as i64)]
            })
            .collect(),
    );
    for s in four_subsets() {
        let comp: Vec<usize> = (0..N).filter(|v| !s.contains(v)).collect();
        let ind = cube_matroid.is_independent(&s);
        if ind != cube_matroid.is_independent(&comp) {
            return Err(Error::Oracle(format!("cube matroid not self-dual at {s:?}")));
        }
        if ind != y.matroid.is_independent(&s) {
            return Err(Error::Oracle(format!("matroid of Y differs from the cube matroid at {s:?}")));
        }
    }
    let symmetry_group = symmetry_group();
    let mut distinct = symmetry_group.clone();
    distinct.sort();
    distinct.dedup();
    if distinct.len() != 48 {
        return Err(Error::Oracle(format!("symmetry group has {} elements", distinct.len())));
    }
    for g in &symmetry_group {
        let moved = delta.substitute(&(0..N).map(|v| Polynomial::var(&cube_vars(), g[v])).collect::<Vec<_>>(), &cube_vars());
        if moved != delta {
            return Err(Error::Oracle(format!("{g:?} does not fix the hyperdeterminant")));
        }
    }
    Ok(HyperdetContext { delta, a, y_basis, y, cube_matroid, symmetry_group })
}

// ─── Bergman fan ────────────────────────────────────────────────────────

/// Flats as bitmasks over the eight vertices.
type Flat = u8;

fn indicator(f: Flat) -> Vec<Q> {
    (0..N).map(|v| if f >> v & 1 == 1 { q(1) } else { q(0) }).collect()
}

fn members(f: Flat) -> Vec<usize> {
    (0..N).filter(|&v| f >> v & 1 == 1).collect()
}

fn act(g: &[usize; N], f: Flat) -> Flat {
    members(f).iter().fold(0, |m, &v| m | 1 << g[v])
}

#[derive(Clone, Debug)]
pub struct CoarseCone {
    /// Indices into [`BergmanFan::flags`].
    pub flags: Vec<usize>,
    pub cone: RationalCone,
    /// `Aℝ⁶ + C`.
    pub hull: RationalCone,
    pub orbit: usize,
}

#[derive(Clone, Debug)]
pub struct ConeOrbit {
    pub label: String,
    pub members: Vec<usize>,
    pub representative: Vec<Q>,
    pub dimension: usize,
    pub fine_cones: usize,
    pub rays: usize,
    pub stabiliser: usize,
    /// `dim(span C ∩ im A)`.
    pub span_meet_im_a: usize,
    pub covering: bool,
}

#[derive(Clone, Debug)]
pub struct BergmanFan {
    /// Flats of rank 1, 2, 3.
    pub flats: [Vec<Flat>; 3],
    /// Complete flags `F₁ ⊂ F₂ ⊂ F₃`: the fine cones `cone(e_F₁, e_F₂, e_F₃) + ℝ1`.
    pub flags: Vec<[Flat; 3]>,
    pub cone_of_flag: Vec<usize>,
    pub cones: Vec<CoarseCone>,
    pub orbits: Vec<ConeOrbit>,
    pub dimension: usize,
    pub lineality_dim: usize,
}

impl BergmanFan {
    pub fn covering_cones(&self) -> Vec<usize> {
        (0..self.cones.len()).filter(|&c| self.orbits[self.cones[c].orbit].covering).collect()
    }

    pub fn covering_orbits(&self) -> Vec<usize> {
        (0..self.orbits.len()).filter(|&o| self.orbits[o].covering).collect()
    }
}

fn flag_generators(flag: &[Flat; 3]) -> Vec<Vec<Q>> {
    let mut g: Vec<Vec<Q>> = flag.iter().map(|&f| indicator(f)).collect();
    g.push(vec![q(1); N]);
    g
}

/// Fine flag cones, merged across shared facets whenever both sides span the
/// same linear space, then grouped into orbits under the cube symmetries.
pub fn bergman_orbits(ctx: &HyperdetContext) -> BergmanFan {
    let m = &ctx.y.matroid;
    let mut flats: [Vec<Flat>; 3] = Default::default();
    for s in 1u16..255 {
        let set = members(s as Flat);
        let cl = m.closure(&set);
        if cl == set {
            let r = m.rank_of(&set);
            if (1..=3).contains(&r) {
                flats[r - 1].push(s as Flat);
            }
        }
    }
    let mut flags = Vec::new();
    for &f1 in &flats[0] {
        for &f2 in flats[1].iter().filter(|&&f| f & f1 == f1) {
            for &f3 in flats[2].iter().filter(|&&f| f & f2 == f2) {
                flags.push([f1, f2, f3]);
            }
        }
    }
    let index: HashMap<[Flat; 3], usize> = flags.iter().enumerate().map(|(i, f)| (*f, i)).collect();

    // union-find over fine cones
    let mut parent: Vec<usize> = (0..flags.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let mut by_facet: BTreeMap<(usize, [Flat; 3]), Vec<usize>> = BTreeMap::new();
    for (i, f) in flags.iter().enumerate() {
        for slot in 0..3 {
            let mut key = *f;
            key[slot] = 0;
            by_facet.entry((slot, key)).or_default().push(i);
        }
    }
    for group in by_facet.values() {
        for (x, &a) in group.iter().enumerate() {
            for &b in &group[x + 1..] {
                let mut gens = flag_generators(&flags[a]);
                gens.extend(flag_generators(&flags[b]));
                if linalg::rank_of_rows(&gens) == 4 {
                    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                    parent[ra] = rb;
                }
            }
        }
    }
    let mut comp: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..flags.len() {
        let r = find(&mut parent, i);
        comp.entry(r).or_default().push(i);
    }
    let groups: Vec<Vec<usize>> = comp.into_values().collect();
    let mut cone_of_flag = vec![0; flags.len()];
    for (c, g) in groups.iter().enumerate() {
        for &f in g {
            cone_of_flag[f] = c;
        }
    }
    let mut cones: Vec<CoarseCone> = groups
        .par_iter()
        .map(|g| {
            let mut rays: Vec<Vec<Q>> = g.iter().flat_map(|&f| flags[f].iter().map(|&x| indicator(x))).collect();
            rays.sort();
            rays.dedup();
            let cone = RationalCone::from_generators(N, rays, vec![vec![q(1); N]]);
            let hull = cone_hull_sum(&ctx.a, &cone);
            CoarseCone { flags: g.clone(), cone, hull, orbit: usize::MAX }
        })
        .collect();

    // orbits
    let mut raw: Vec<Vec<usize>> = Vec::new();
    for c in 0..cones.len() {
        if cones[c].orbit != usize::MAX {
            continue;
        }
        let f0 = flags[cones[c].flags[0]];
        let mut orbit: Vec<usize> = ctx
            .symmetry_group
            .iter()
            .map(|g| cone_of_flag[index[&[act(g, f0[0]), act(g, f0[1]), act(g, f0[2])]]])
            .collect();
        orbit.sort();
        orbit.dedup();
        for &o in &orbit {
            cones[o].orbit = raw.len();
        }
        raw.push(orbit);
    }
    let im_a = linalg::transpose(&ctx.a, 6);
    let mut orbits: Vec<ConeOrbit> = raw
        .iter()
        .map(|members| {
            let c = &cones[members[0]];
            let mut span: Vec<Vec<Q>> = c.cone.rays.iter().chain(&c.cone.lineality).cloned().collect();
            let dim = linalg::rank_of_rows(&span);
            span.extend(im_a.iter().cloned());
            let meet = dim + 4 - linalg::rank_of_rows(&span);
            ConeOrbit {
                label: String::new(),
                members: members.clone(),
                representative: c.cone.interior_point(),
                dimension: dim,
                fine_cones: c.flags.len(),
                rays: c.cone.rays.len(),
                stabiliser: 48 / members.len(),
                span_meet_im_a: meet,
                covering: meet == 1,
            }
        })
        .collect();
    // labels by invariants: covering first, then by fine-cone count and stabiliser
    let mut order: Vec<usize> = (0..orbits.len()).collect();
    order.sort_by_key(|&o| (!orbits[o].covering, orbits[o].fine_cones, orbits[o].rays, orbits[o].stabiliser));
    let mut relabel = vec![0; orbits.len()];
    let (mut nc, mut na) = (0, 0);
    for (new, &old) in order.iter().enumerate() {
        relabel[old] = new;
        orbits[old].label = if orbits[old].covering {
            nc += 1;
            format!("covering-{nc}")
        } else {
            na += 1;
            format!("absorbed-{na}")
        };
    }
    let mut sorted: Vec<Option<ConeOrbit>> = vec![None; orbits.len()];
    for (old, o) in orbits.into_iter().enumerate() {
        sorted[relabel[old]] = Some(o);
    }
    let orbits: Vec<ConeOrbit> = sorted.into_iter().map(|o| o.unwrap()).collect();
    for c in cones.iter_mut() {
        c.orbit = relabel[c.orbit];
    }
    let dimension = cones.iter().map(|c| c.cone.dimension()).max().unwrap_or(0);
    let lineality_dim = cones.iter().map(|c| c.cone.lineality_dim()).min().unwrap_or(0);
    BergmanFan { flats, flags, cone_of_flag, cones, orbits, dimension, lineality_dim }
}

/// A random point of the cone: nonnegative rational ray weights, some zero,
/// plus a multiple of the all-one array.
pub fn sample_in_cone<R: Rng>(c: &RationalCone, rng: &mut R) -> Vec<Q> {
    let mut x = vec![Q::zero(); c.dim];
    for r in &c.rays {
        if rng.gen_bool(0.2) {
            continue;
        }
        let w = Q::new(rng.gen_range(0..=12).into(), rng.gen_range(1..=4).into());
        for (xi, ri) in x.iter_mut().zip(r) {
            *xi += &w * ri;
        }
    }
    for l in &c.lineality {
        let w = Q::new(rng.gen_range(-12..=12).into(), rng.gen_range(1..=4).into());
        for (xi, li) in x.iter_mut().zip(l) {
            *xi += &w * li;
        }
    }
    x
}

// ─── verification ───────────────────────────────────────────────────────

#[derive(Clone, Debug)]
pub struct AbsorptionOrbit {
    pub label: String,
    pub samples: usize,
    /// Samples whose covering cone was confirmed by the V-description LP.
    pub confirmed: usize,
    pub failures: Vec<Vec<Q>>,
}

#[derive(Clone, Debug)]
pub struct AbsorptionReport {
    pub orbits: Vec<AbsorptionOrbit>,
}

impl AbsorptionReport {
    pub fn clean(&self) -> bool {
        self.orbits.iter().all(|o| o.failures.is_empty() && o.confirmed == o.samples)
    }
}

/// Index of a covering cone `C` with `ξ ∈ Aℝ⁶ + C`, by H-description.
pub fn covering_cone_of(fan: &BergmanFan, xi: &[Q]) -> Option<usize> {
    fan.covering_cones().into_iter().find(|&c| fan.cones[c].hull.contains(xi))
}

/// Dense sampling of every absorbed orbit; each sample must lie in
/// `Aℝ⁶ + C` for a covering `C`, confirmed by an LP on the generators.
pub fn verify_absorption(fan: &BergmanFan, samples: usize, seed: u64) -> AbsorptionReport {
    let covering = fan.covering_cones();
    let orbits = (0..fan.orbits.len())
        .filter(|&o| !fan.orbits[o].covering)
        .map(|o| {
            let orbit = &fan.orbits[o];
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (o as u64) << 32);
            let pts: Vec<Vec<Q>> = (0..samples)
                .map(|s| sample_in_cone(&fan.cones[orbit.members[s % orbit.members.len()]].cone, &mut rng))
                .collect();
            let verdicts: Vec<bool> = pts
                .par_iter()
                .map(|x| match covering_cone_of(fan, x) {
                    Some(c) => fan.cones[c].hull.contains_lp(x),
                    None => covering.iter().any(|&c| fan.cones[c].hull.contains_lp(x)),
                })
                .collect();
            let failures: Vec<Vec<Q>> = pts.iter().zip(&verdicts).filter(|(_, &ok)| !ok).map(|(x, _)| x.clone()).collect();
            AbsorptionOrbit { label: orbit.label.clone(), samples, confirmed: samples - failures.len(), failures }
        })
        .collect();
    AbsorptionReport { orbits }
}

#[derive(Clone, Debug)]
pub struct LpRecord {
    pub probe: Vec<Q>,
    /// Farkas multipliers when infeasible.
    pub certificate: Option<Vec<Q>>,
    pub certificate_ok: bool,
    /// A point of the left-hand side outside the right-hand side.
    pub witness: Option<Vec<Q>>,
}

#[derive(Clone, Debug)]
pub struct PairRecord {
    pub c: usize,
    pub c2: usize,
    pub lps: Vec<LpRecord>,
}

impl PairRecord {
    pub fn equal(&self) -> bool {
        self.lps.iter().all(|r| r.certificate_ok && r.witness.is_none())
    }
}

#[derive(Clone, Debug)]
pub struct CoverReport {
    pub pairs: Vec<PairRecord>,
}

impl CoverReport {
    pub fn total_lps(&self) -> usize {
        self.pairs.iter().map(|p| p.lps.len()).sum()
    }

    pub fn all_infeasible(&self) -> bool {
        self.pairs.iter().all(|p| p.equal())
    }
}

/// Every covering cone `C` against one representative `C′` of each covering
/// orbit.
pub fn verify_cover_lps(ctx: &HyperdetContext, fan: &BergmanFan) -> CoverReport {
    let reps: Vec<usize> = fan.covering_orbits().iter().map(|&o| fan.orbits[o].members[0]).collect();
    let jobs: Vec<(usize, usize)> = fan.covering_cones().into_iter().flat_map(|c| reps.iter().map(move |&r| (c, r))).collect();
    let pairs = jobs
        .par_iter()
        .map(|&(c, c2)| {
            let lps = cover_equality_lps(&ctx.a, &fan.cones[c].cone, &fan.cones[c2].cone)
                .into_iter()
                .map(|r| match r.outcome {
                    LpOutcome::Infeasible(cert) => LpRecord {
                        certificate_ok: verify_certificate(&r.lp, &cert),
                        probe: r.probe,
                        certificate: Some(cert.multipliers),
                        witness: None,
                    },
                    LpOutcome::Feasible(x) => LpRecord { probe: r.probe, certificate: None, certificate_ok: false, witness: Some(x) },
                })
                .collect();
            PairRecord { c, c2, lps }
        })
        .collect();
    CoverReport { pairs }
}

// ─── section ────────────────────────────────────────────────────────────

/// `x_ijk ↦ e_i^ρ + e_j^δ + e_k^ν`.
pub fn hyperdet_weights() -> WeightAssignment {
    WeightAssignment {
        weights: (0..N)
            .map(|v| {
                let [i, j, k] = bits(v);
                let mut w = vec![0; 6];
                w[i] = 1;
                w[2 + j] = 1;
                w[4 + k] = 1;
                w
            })
            .collect(),
    }
}

#[derive(Clone, Debug)]
pub struct HyperdetSectionPoint {
    pub xi: Vec<Q>,
    pub cone: usize,
    /// `(ρ, δ, ν)` with `Σρ = Σδ = 0`.
    pub tau: Vec<Q>,
    /// `ξ − Aτ`, with coordinate sum 0.
    pub eta: Vec<Q>,
    pub inner: LinSectionPoint,
}

/// Shift along the all-one gauge: `τ − (c1, c1, c1)`, `η + 3c·1`.
pub fn gauge_shift(sp: &HyperdetSectionPoint, c: &Q) -> (Vec<Q>, Vec<Q>) {
    let tau = sp.tau.iter().map(|t| t - c).collect();
    let eta = sp.eta.iter().map(|e| e + q(3) * c).collect();
    (tau, eta)
}

pub fn hyperdet_section(ctx: &HyperdetContext, fan: &BergmanFan, xi: &[Q]) -> Result<HyperdetSectionPoint> {
    let c = covering_cone_of(fan, xi).ok_or_else(|| Error::NotMember("ξ is outside Aℝ⁶ + (covering cones)".into()))?;
    hyperdet_section_in_cone(ctx, fan, xi, c)
}

/// Decompose `ξ = Aτ + η` with `η` in the given covering cone.
pub fn hyperdet_section_in_cone(ctx: &HyperdetContext, fan: &BergmanFan, xi: &[Q], cone: usize) -> Result<HyperdetSectionPoint> {
    if xi.len() != N {
        return Err(Error::Dimension(format!("expected 8 coordinates, got {}", xi.len())));
    }
    let cc = &fan.cones[cone];
    if !fan.orbits[cc.orbit].covering {
        return Err(Error::Precondition(format!("cone {cone} is not a covering cone")));
    }
    if !cc.hull.contains(xi) {
        return Err(Error::NotMember(format!("ξ is outside Aℝ⁶ + C for cone {cone}")));
    }
    let gens: Vec<Vec<Q>> = cc.cone.rays.iter().chain(&cc.cone.lineality).cloned().collect();
    let span: Vec<Vec<Q>> = linalg::independent_rows(&gens).into_iter().map(|i| gens[i].clone()).collect();
    let nu = 6 + span.len();
    let mut sys: Mat = (0..N)
        .map(|v| ctx.a[v].iter().cloned().chain(span.iter().map(|s| s[v].clone())).collect())
        .collect();
    let mut rhs = xi.to_vec();
    let gauge = |cols: &[usize]| {
        let mut row = vec![Q::zero(); nu];
        for &c in cols {
            row[c] = q(1);
        }
        row
    };
    sys.push(gauge(&[0, 1]));
    sys.push(gauge(&[2, 3]));
    let mut total = vec![Q::zero(); nu];
    for (k, s) in span.iter().enumerate() {
        total[6 + k] = s.iter().sum();
    }
    sys.push(total);
    rhs.extend([Q::zero(), Q::zero(), Q::zero()]);
    if linalg::rank(&sys, nu) != nu {
        return Err(Error::Oracle("decomposition is not unique modulo the gauge".into()));
    }
    let sol = linalg::solve(&sys, &rhs, nu).ok_or_else(|| Error::Oracle("decomposition system inconsistent".into()))?;
    let tau = sol[..6].to_vec();
    let eta: Vec<Q> = (0..N).map(|v| &xi[v] - linalg::dot(&ctx.a[v], &tau)).collect();
    if !cc.cone.contains(&eta) {
        return Err(Error::Oracle("η left the cone".into()));
    }
    let inner = build_lin_section(&ctx.y, &eta.iter().cloned().map(TropScalar::Fin).collect::<Vec<_>>())?;
    Ok(HyperdetSectionPoint { xi: xi.to_vec(), cone, tau, eta, inner })
}

/// `min_β σ_Y(η)(f_β) + β·τ`.
pub fn eval_hyperdet_section(sp: &HyperdetSectionPoint, f: &Polynomial) -> Result<TropScalar> {
    eval_with(&sp.inner, &sp.tau, f)
}

/// The same recipe for an arbitrary `(τ, σ_Y(η))`.
pub fn eval_with(inner: &LinSectionPoint, tau: &[Q], f: &Polynomial) -> Result<TropScalar> {
    let f = f.reindex(&cube_vars())?;
    let mut best = TropScalar::Inf;
    for (beta, fb) in f.weight_decompose(&hyperdet_weights()) {
        let lift: Q = beta.iter().zip(tau).map(|(&b, t)| q(b) * t).sum();
        best = best.min(eval_lin_section(inner, &fb)?.plus(&TropScalar::Fin(lift)));
    }
    Ok(best)
}

/// Minimum of `Δ` at `ξ` attained at least twice.
pub fn membership_hyperdet(ctx: &HyperdetContext, xi: &[TropScalar]) -> bool {
    ctx.delta.hypersurface_membership(xi)
}

/// Some maximal cone `C` of the fan with `ξ ∈ Aℝ⁶ + C`.
pub fn decomposable(fan: &BergmanFan, xi: &[Q]) -> Option<usize> {
    (0..fan.cones.len()).find(|&c| fan.cones[c].hull.contains(xi))
}

/// `Aτ + η` with `η` sampled in a random covering cone.
pub fn random_covered_point<R: Rng>(ctx: &HyperdetContext, fan: &BergmanFan, rng: &mut R) -> Vec<Q> {
    let cov = fan.covering_cones();
    let c = cov[rng.gen_range(0..cov.len())];
    let eta = sample_in_cone(&fan.cones[c].cone, rng);
    let tau: Vec<Q> = (0..6).map(|_| Q::new(rng.gen_range(-20..=20).into(), rng.gen_range(1..=3).into())).collect();
    (0..N).map(|v| &eta[v] + linalg::dot(&ctx.a[v], &tau)).collect()
}

// ─── report ─────────────────────────────────────────────────────────────

fn qv(v: &[Q]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(fmt_q(x))).collect())
}

pub fn context_json(ctx: &HyperdetContext) -> Value {
    json!({
        "delta_terms": ctx.delta.num_terms(),
        "kernel_dim": linalg::nullspace(&ctx.a, 6).len(),
        "image_dim": linalg::rank(&ctx.a, 6),
        "y_dim": ctx.y_basis.len(),
        "self_dual_subsets_checked": four_subsets().len(),
        "symmetry_group_order": ctx.symmetry_group.len(),
    })
}

pub fn fan_json(ctx: &HyperdetContext, fan: &BergmanFan) -> Value {
    let one: Vec<TropScalar> = vec![TropScalar::int(1); N];
    let minus: Vec<TropScalar> = vec![TropScalar::int(-1); N];
    let im_span: Vec<Vec<Q>> = linalg::transpose(&ctx.a, 6);
    let x_dim = fan
        .cones
        .iter()
        .map(|c| {
            let mut g: Vec<Vec<Q>> = c.cone.rays.iter().chain(&c.cone.lineality).cloned().collect();
            g.extend(im_span.iter().cloned());
            linalg::rank_of_rows(&g)
        })
        .max()
        .unwrap_or(0);
    json!({
        "flats_by_rank": fan.flats.iter().map(|f| f.len()).collect::<Vec<_>>(),
        "fine_cones": fan.flags.len(),
        "maximal_cones": fan.cones.len(),
        "orbit_count": fan.orbits.len(),
        "trop_y_dimension": fan.dimension,
        "trop_y_lineality_dimension": fan.lineality_dim,
        "trop_x_dimension": x_dim,
        "all_one_in_trop_y": ctx.y.matroid.is_in_trop_matroid_all_circuits(&one).member
            && ctx.y.matroid.is_in_trop_matroid_all_circuits(&minus).member,
        "orbits": fan.orbits.iter().map(|o| json!({
            "label": o.label,
            "size": o.members.len(),
            "stabiliser": o.stabiliser,
            "dimension": o.dimension,
            "fine_cones": o.fine_cones,
            "rays": o.rays,
            "span_meet_im_a": o.span_meet_im_a,
            "covering": o.covering,
            "representative": qv(&o.representative),
        })).collect::<Vec<_>>(),
    })
}

pub fn absorption_json(r: &AbsorptionReport) -> Value {
    json!({
        "clean": r.clean(),
        "orbits": r.orbits.iter().map(|o| json!({
            "label": o.label,
            "samples": o.samples,
            "confirmed": o.confirmed,
            "failures": o.failures.iter().map(|x| qv(x)).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}

pub fn cover_json(fan: &BergmanFan, r: &CoverReport) -> Value {
    json!({
        "pairs_checked": r.pairs.len(),
        "lps_solved": r.total_lps(),
        "all_infeasible": r.all_infeasible(),
        "pairs": r.pairs.iter().map(|p| json!({
            "c": p.c,
            "c_orbit": fan.orbits[fan.cones[p.c].orbit].label,
            "c_prime": p.c2,
            "c_prime_orbit": fan.orbits[fan.cones[p.c2].orbit].label,
            "equal": p.equal(),
            "lps": p.lps.iter().map(|l| json!({
                "probe": qv(&l.probe),
                "status": if l.witness.is_some() { "feasible" } else { "infeasible" },
                "certificate": l.certificate.as_ref().map(|c| qv(c)),
                "certificate_ok": l.certificate_ok,
                "witness": l.witness.as_ref().map(|w| qv(w)),
            })).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}

/// Gap between `ξ` and its section value on the coordinates, for reports.
pub fn coordinate_defect(sp: &HyperdetSectionPoint) -> Result<Q> {
    let v = cube_vars();
    let mut worst = Q::zero();
    for k in 0..N {
        match eval_hyperdet_section(sp, &Polynomial::var(&v, k))? {
            TropScalar::Fin(x) => worst = worst.max((x - &sp.xi[k]).abs()),
            TropScalar::Inf => return Err(Error::Oracle(format!("coordinate {} evaluates to inf", v[k]))),
        }
    }
    Ok(worst)
}
