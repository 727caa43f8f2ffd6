//! The continuous section for constant-coefficient linear spaces.
//!
//! A point `η ∈ Trop(Y)` with infinite coordinates `S` is sent to the Gauss
//! valuation on `Y′ = Y ∩ {x_S = 0}` in the coordinates `x_J` of a compatible
//! basis `J`.

use crate::linalg::{self, Mat};
use crate::matroids::{Matroid, Verdict};
use crate::tropcore::TropScalar;
use crate::valfield::{Polynomial, ValuedScalar};
use crate::{Error, Result, Q};
use num::{One, Zero};
use rand::Rng;

/// `Y ⊆ 𝔸ⁿ` as the image of `y ↦ (forms[i]·y)_i`, `y ∈ 𝔸ᵈ`.
#[derive(Clone, Debug)]
pub struct LinearSpaceParam {
    pub n: usize,
    pub d: usize,
    pub forms: Mat,
    pub vars: Vec<String>,
    pub matroid: Matroid,
}

impl LinearSpaceParam {
    /// Forms must have full column rank. Zero forms (Y inside a coordinate
    /// hyperplane) need [`LinearSpaceParam::new_flagged`].
    pub fn new(forms: Mat, vars: Vec<String>) -> Result<Self> {
        if let Some(i) = forms.iter().position(|f| linalg::is_zero_vec(f)) {
            return Err(Error::Precondition(format!("Y lies in the coordinate hyperplane {} = 0", vars[i])));
        }
        Self::new_flagged(forms, vars)
    }

    pub fn new_flagged(forms: Mat, vars: Vec<String>) -> Result<Self> {
        let n = forms.len();
        if vars.len() != n {
            return Err(Error::Dimension(format!("{} forms for {} variables", n, vars.len())));
        }
        let d = forms.first().map_or(0, |f| f.len());
        if forms.iter().any(|f| f.len() != d) {
            return Err(Error::Dimension("forms of unequal width".into()));
        }
        if linalg::rank(&forms, d) != d {
            return Err(Error::Precondition("forms do not span the parameter space".into()));
        }
        let mut matroid = Matroid::linear(forms.clone());
        matroid.labels = vars.clone();
        Ok(LinearSpaceParam { n, d, forms, vars, matroid })
    }

    /// `Y = {x : E x = 0}`.
    pub fn from_equations(eqs: &Mat, vars: Vec<String>) -> Result<Self> {
        let n = vars.len();
        let basis = linalg::nullspace(eqs, n);
        let forms = linalg::transpose(&basis, n);
        let forms = if basis.is_empty() { vec![Vec::new(); n] } else { forms };
        Self::new_flagged(forms, vars)
    }

    /// `Y′ = {y ∈ Y : x_i(y) = 0 for i ∈ s}`, reparameterised.
    pub fn restrict(&self, s: &[usize]) -> LinearSpaceParam {
        let rows: Mat = s.iter().map(|&i| self.forms[i].clone()).collect();
        let kernel = if rows.is_empty() { linalg::identity(self.d) } else { linalg::nullspace(&rows, self.d) };
        // forms′_i = forms_i · N, with the kernel basis as the columns of N
        let forms: Mat = self.forms.iter().map(|f| kernel.iter().map(|k| linalg::dot(f, k)).collect()).collect();
        let d = kernel.len();
        let mut matroid = Matroid::linear(forms.clone());
        matroid.labels = self.vars.clone();
        LinearSpaceParam { n: self.n, d, forms, vars: self.vars.clone(), matroid }
    }

    /// Whether the coordinates satisfy every linear relation of `Y`.
    pub fn contains(&self, x: &[Q]) -> bool {
        let mut aug = self.forms.clone();
        if self.d == 0 {
            return linalg::is_zero_vec(x);
        }
        let r = linalg::rank(&aug, self.d);
        for (row, xi) in aug.iter_mut().zip(x) {
            row.push(xi.clone());
        }
        linalg::rank(&aug, self.d + 1) == r
    }
}

/// `σ(η)` in a concrete basis.
#[derive(Clone, Debug)]
pub struct LinSectionPoint {
    pub eta: Vec<TropScalar>,
    /// `{i : η_i = ∞}`.
    pub s: Vec<usize>,
    /// Compatible basis, in the order chosen.
    pub basis: Vec<usize>,
    /// `x_i = Σ_k rewrite[i][k]·x_{basis[k]}` on `Y′`.
    pub rewrite: Mat,
    pub vars: Vec<String>,
}

impl LinSectionPoint {
    pub fn basis_vars(&self) -> Vec<String> {
        self.basis.iter().map(|&j| self.vars[j].clone()).collect()
    }

    pub fn eta_basis(&self) -> Vec<TropScalar> {
        self.basis.iter().map(|&j| self.eta[j].clone()).collect()
    }

    /// `J ∩ S = ∅` and, for `i ∉ J ∪ S`, the relation `x_i − Σ c_j x_j`
    /// attains its minimum `η_i` on the basis side too.
    pub fn check_invariants(&self) -> bool {
        if self.basis.iter().any(|j| self.s.contains(j)) {
            return false;
        }
        (0..self.eta.len()).filter(|i| !self.basis.contains(i) && !self.s.contains(i)).all(|i| {
            let m = self
                .rewrite[i]
                .iter()
                .zip(&self.basis)
                .filter(|(c, _)| !c.is_zero())
                .map(|(_, &j)| self.eta[j].clone())
                .min()
                .unwrap_or(TropScalar::Inf);
            m == self.eta[i]
        })
    }
}

fn infinite_set(eta: &[TropScalar]) -> Vec<usize> {
    (0..eta.len()).filter(|&i| eta[i].is_inf()).collect()
}

/// Circuits of `Y′` on the full ground set; `S` are loops there.
pub fn trop_membership_linear(y: &LinearSpaceParam, eta: &[TropScalar]) -> Result<Verdict> {
    if eta.len() != y.n {
        return Err(Error::Dimension(format!("{} coordinates for n = {}", eta.len(), y.n)));
    }
    let yp = y.restrict(&infinite_set(eta));
    Ok(yp.matroid.is_in_trop_matroid_all_circuits(eta))
}

/// Every basis of `Y′` of maximal `η`-weight.
pub fn compatible_bases(y: &LinearSpaceParam, eta: &[TropScalar]) -> Vec<Vec<usize>> {
    y.restrict(&infinite_set(eta)).matroid.max_weight_bases(eta)
}

pub fn build_lin_section(y: &LinearSpaceParam, eta: &[TropScalar]) -> Result<LinSectionPoint> {
    let v = trop_membership_linear(y, eta)?;
    if !v.member {
        let w = v.witness.unwrap_or_default();
        let labels: Vec<&str> = w.iter().map(|&i| y.vars[i].as_str()).collect();
        return Err(Error::NotMember(format!("minimum attained once on circuit {{{}}}", labels.join(","))));
    }
    let s = infinite_set(eta);
    let yp = y.restrict(&s);
    let basis = yp.matroid.greedy_compatible_basis(eta);
    Ok(section_in_basis(&yp, eta, s, basis))
}

/// Same as [`build_lin_section`] with a caller-chosen compatible basis.
pub fn build_lin_section_with_basis(y: &LinearSpaceParam, eta: &[TropScalar], basis: &[usize]) -> Result<LinSectionPoint> {
    if !trop_membership_linear(y, eta)?.member {
        return Err(Error::NotMember("η is not in Trop(Y)".into()));
    }
    if !compatible_bases(y, eta).iter().any(|b| {
        let mut a = b.clone();
        let mut c = basis.to_vec();
        a.sort();
        c.sort();
        a == c
    }) {
        return Err(Error::Precondition(format!("{basis:?} is not a compatible basis")));
    }
    let s = infinite_set(eta);
    let yp = y.restrict(&s);
    Ok(section_in_basis(&yp, eta, s, basis.to_vec()))
}

fn section_in_basis(yp: &LinearSpaceParam, eta: &[TropScalar], s: Vec<usize>, basis: Vec<usize>) -> LinSectionPoint {
    // columns are the basis forms; solve forms′_i = Σ c_k forms′_{j_k}
    let cols: Mat = (0..yp.d).map(|r| basis.iter().map(|&j| yp.forms[j][r].clone()).collect()).collect();
    let rewrite: Mat = (0..yp.n)
        .map(|i| {
            if s.contains(&i) {
                return vec![Q::zero(); basis.len()];
            }
            if yp.d == 0 {
                return Vec::new();
            }
            linalg::solve(&cols, &yp.forms[i], basis.len()).expect("basis spans Y′")
        })
        .collect();
    LinSectionPoint { eta: eta.to_vec(), s, basis, rewrite, vars: yp.vars.clone() }
}

/// `f` restricted to `Y′`, written in the basis variables.
pub fn restrict_to_basis(sp: &LinSectionPoint, f: &Polynomial) -> Result<Polynomial> {
    let f = f.reindex(&sp.vars)?;
    Ok(f.substitute_linear(&sp.rewrite, &sp.basis_vars()))
}

/// `σ(η)(f) = min_α v(c_α) + α·η_J` over `f|_{Y′}` in the basis variables.
pub fn eval_lin_section(sp: &LinSectionPoint, f: &Polynomial) -> Result<TropScalar> {
    let g = restrict_to_basis(sp, f)?;
    Ok(g.trop_eval_min(&sp.eta_basis()).0)
}

/// Valuations `v(f(y))` at random lifts `y ∈ Y′(K)` with `v(x_j) = η_j` on `J`.
pub fn shilov_sample_oracle<R: Rng>(sp: &LinSectionPoint, f: &Polynomial, trials: usize, rng: &mut R) -> Result<Vec<TropScalar>> {
    let f = f.reindex(&sp.vars)?;
    if sp.eta_basis().iter().any(|e| e.is_inf()) {
        return Err(Error::Precondition("η infinite on the basis".into()));
    }
    let mut out = Vec::with_capacity(trials);
    for _ in 0..trials {
        let xj: Vec<ValuedScalar> = sp
            .basis
            .iter()
            .map(|&j| {
                let e = sp.eta[j].fin().unwrap().clone();
                let mut c = 0i64;
                while c == 0 {
                    c = rng.gen_range(-9..=9);
                }
                let mut x = ValuedScalar::term(crate::q(c), e.clone());
                for _ in 0..rng.gen_range(0..3) {
                    let r = rng.gen_range(-5..=5);
                    let q = crate::qq(rng.gen_range(1..=64), 8);
                    x = x.add(&ValuedScalar::term(crate::q(r), &e + q));
                }
                x
            })
            .collect();
        let point: Vec<ValuedScalar> = sp
            .rewrite
            .iter()
            .map(|row| {
                row.iter().zip(&xj).fold(ValuedScalar::zero(), |acc, (c, x)| {
                    if c.is_zero() {
                        acc
                    } else {
                        acc.add(&x.scale(c))
                    }
                })
            })
            .collect();
        out.push(f.eval(&point).valuation());
    }
    Ok(out)
}

/// A point of `Y′(K)` for the `S` given, with coordinates of the form
/// `c·t^e`, and its tropicalisation; used to generate members.
pub fn random_member<R: Rng>(y: &LinearSpaceParam, s: &[usize], rng: &mut R) -> Option<(Vec<ValuedScalar>, Vec<TropScalar>)> {
    let yp = y.restrict(s);
    if yp.d == 0 {
        return Some((vec![ValuedScalar::zero(); y.n], vec![TropScalar::Inf; y.n]));
    }
    let params: Vec<ValuedScalar> = (0..yp.d)
        .map(|_| {
            let mut c = 0i64;
            while c == 0 {
                c = rng.gen_range(-3..=3);
            }
            ValuedScalar::term(crate::q(c), crate::q(rng.gen_range(0..4)))
        })
        .collect();
    let x: Vec<ValuedScalar> = yp
        .forms
        .iter()
        .map(|f| f.iter().zip(&params).fold(ValuedScalar::zero(), |a, (c, p)| if c.is_zero() { a } else { a.add(&p.scale(c)) }))
        .collect();
    let eta = x.iter().map(|v| v.valuation()).collect();
    Some((x, eta))
}

/// `1 ⊗ Y` for the standard `1ᵀx = 0` hyperplane in `𝔸ᵐ`.
pub fn sum_zero_hyperplane(m: usize) -> LinearSpaceParam {
    let eqs = vec![vec![Q::one(); m]];
    LinearSpaceParam::from_equations(&eqs, crate::valfield::names("x", m)).expect("hyperplane")
}
