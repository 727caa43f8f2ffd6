//! The valued coefficient field and polynomials over it.
//!
//! A [`ValuedScalar`] is a finite sum `Σ c_q t^q` with rational `q` and `c_q`;
//! its valuation is the least exponent present.

use crate::tropcore::TropScalar;
use crate::{fmt_q, parse_q, Error, Result, Q};
use num::{One, Signed, Zero};
use serde_json::{json, Value};
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ValuedScalar {
    terms: BTreeMap<Q, Q>,
}

impl ValuedScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        Self::term(c, Q::zero())
    }

    /// `c·t^e`.
    pub fn term(c: Q, e: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        ValuedScalar { terms }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Q, Q)>) -> Self {
        let mut s = Self::zero();
        for (e, c) in pairs {
            s.add_term(e, c);
        }
        s
    }

    fn add_term(&mut self, e: Q, c: Q) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e.clone()).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Least exponent, or ∞ for zero.
    pub fn valuation(&self) -> TropScalar {
        match self.terms.keys().next() {
            Some(e) => TropScalar::Fin(e.clone()),
            None => TropScalar::Inf,
        }
    }

    /// Coefficient of the lowest power of `t` (the residue of `c·t^{-v(c)}`).
    pub fn residue(&self) -> Q {
        self.terms.values().next().cloned().unwrap_or_else(Q::zero)
    }

    /// `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn pairs(&self) -> impl Iterator<Item = (&Q, &Q)> {
        self.terms.iter()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c.clone());
        }
        r
    }

    pub fn neg(&self) -> Self {
        ValuedScalar { terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                r.add_term(e1 + e2, c1 * c2);
            }
        }
        r
    }

    pub fn scale(&self, k: &Q) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        ValuedScalar { terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect() }
    }

    /// Multiply by `t^e`.
    pub fn shift(&self, e: &Q) -> Self {
        ValuedScalar { terms: self.terms.iter().map(|(x, c)| (x + e, c.clone())).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut r = Self::one();
        for _ in 0..k {
            r = r.mul(self);
        }
        r
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.terms.iter().map(|(e, c)| json!([fmt_q(e), fmt_q(c)])).collect())
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let arr = v.as_array().ok_or_else(|| Error::Parse("coefficient must be a list of [exp, coeff]".into()))?;
        let mut s = Self::zero();
        for p in arr {
            let pair = p.as_array().filter(|a| a.len() == 2).ok_or_else(|| Error::Parse("bad [exp, coeff] pair".into()))?;
            s.add_term(json_q(&pair[0])?, json_q(&pair[1])?);
        }
        Ok(s)
    }
}

fn json_q(v: &Value) -> Result<Q> {
    match v {
        Value::String(s) => parse_q(s),
        Value::Number(n) if n.is_i64() => Ok(crate::q(n.as_i64().unwrap())),
        _ => Err(Error::Parse(format!("expected rational string, got {v}"))),
    }
}

impl fmt::Display for ValuedScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| if e.is_zero() { format!("{c}") } else { format!("{c}*t^({e})") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Exponent vector over the ring's variable table. Ordered graded
/// lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Per-variable weight vectors for a torus action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightAssignment {
    pub weights: Vec<Vec<i64>>,
}

impl WeightAssignment {
    pub fn dim(&self) -> usize {
        self.weights.first().map_or(0, |w| w.len())
    }

    pub fn of(&self, m: &Monomial) -> Vec<i64> {
        let mut b = vec![0i64; self.dim()];
        for (w, &e) in self.weights.iter().zip(&m.0) {
            for (bi, wi) in b.iter_mut().zip(w) {
                *bi += wi * e as i64;
            }
        }
        b
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, ValuedScalar>,
}

impl Polynomial {
    pub fn zero(vars: &[String]) -> Self {
        Polynomial { vars: vars.to_vec(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &[String], c: ValuedScalar) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(Monomial::one(vars.len()), c);
        p
    }

    pub fn var(vars: &[String], i: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        let mut p = Self::zero(vars);
        p.add_term(Monomial(e), ValuedScalar::one());
        p
    }

    pub fn var_named(vars: &[String], name: &str) -> Result<Self> {
        let i = vars.iter().position(|v| v == name).ok_or_else(|| Error::Parse(format!("unknown variable {name}")))?;
        Ok(Self::var(vars, i))
    }

    /// `Σ coeffs[i]·x_i` with rational coefficients.
    pub fn linear(vars: &[String], coeffs: &[Q]) -> Self {
        let mut p = Self::zero(vars);
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut e = vec![0; vars.len()];
                e[i] = 1;
                p.add_term(Monomial(e), ValuedScalar::constant(c.clone()));
            }
        }
        p
    }

    pub fn from_terms(vars: &[String], terms: impl IntoIterator<Item = (Monomial, ValuedScalar)>) -> Self {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            assert_eq!(m.0.len(), vars.len(), "monomial length");
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: ValuedScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(slot) => {
                *slot = slot.add(&c);
                if slot.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Terms in decreasing grlex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &ValuedScalar)> {
        self.terms.iter().rev()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    fn check_ring(&self, o: &Self) {
        assert_eq!(self.vars, o.vars, "polynomials over different variable tables");
    }

    pub fn add(&self, o: &Self) -> Self {
        self.check_ring(o);
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }

    pub fn neg(&self) -> Self {
        Polynomial { vars: self.vars.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.check_ring(o);
        let mut r = Self::zero(&self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                r.add_term(m1.mul(m2), c1.mul(c2));
            }
        }
        r
    }

    pub fn scale(&self, c: &ValuedScalar) -> Self {
        let mut r = Self::zero(&self.vars);
        for (m, d) in &self.terms {
            r.add_term(m.clone(), d.mul(c));
        }
        r
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut r = Self::constant(&self.vars, ValuedScalar::one());
        for _ in 0..k {
            r = r.mul(self);
        }
        r
    }

    /// Substitute `x_i ↦ images[i]`, all images living over `target` variables.
    pub fn substitute(&self, images: &[Polynomial], target: &[String]) -> Self {
        assert_eq!(images.len(), self.vars.len(), "one image per variable");
        let mut powers: HashMap<(usize, u32), Polynomial> = HashMap::new();
        let mut r = Self::zero(target);
        for (m, c) in &self.terms {
            let mut t = Self::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = powers.entry((i, e)).or_insert_with(|| images[i].pow(e));
                t = t.mul(p);
                if t.is_zero() {
                    break;
                }
            }
            r = r.add(&t);
        }
        r
    }

    /// Substitute the ℚ-linear forms `x_i ↦ Σ_j forms[i][j]·y_j`.
    pub fn substitute_linear(&self, forms: &[Vec<Q>], target: &[String]) -> Self {
        let images: Vec<Polynomial> = forms.iter().map(|f| Polynomial::linear(target, f)).collect();
        self.substitute(&images, target)
    }

    /// Move to another variable table, matching by name.
    pub fn reindex(&self, target: &[String]) -> Result<Self> {
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| target.iter().position(|t| t == v).ok_or_else(|| Error::Parse(format!("variable {v} not in target ring"))))
            .collect::<Result<_>>()?;
        let mut r = Self::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0; target.len()];
            for (i, &k) in m.0.iter().enumerate() {
                e[map[i]] += k;
            }
            r.add_term(Monomial(e), c.clone());
        }
        Ok(r)
    }

    /// Evaluate at a point of `K^n`.
    pub fn eval(&self, point: &[ValuedScalar]) -> ValuedScalar {
        assert_eq!(point.len(), self.vars.len());
        let mut acc = ValuedScalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&point[i].pow(e));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Split into torus-weight components `f_β`.
    pub fn weight_decompose(&self, w: &WeightAssignment) -> BTreeMap<Vec<i64>, Polynomial> {
        assert_eq!(w.weights.len(), self.vars.len(), "one weight per variable");
        let mut out: BTreeMap<Vec<i64>, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(w.of(m)).or_insert_with(|| Self::zero(&self.vars)).add_term(m.clone(), c.clone());
        }
        out
    }

    /// `v(c_α) + α·ξ` for one term, with `0·∞ = 0`.
    pub fn term_value(m: &Monomial, c: &ValuedScalar, xi: &[TropScalar]) -> TropScalar {
        let mut v = c.valuation();
        for (e, x) in m.0.iter().zip(xi) {
            if *e > 0 {
                v = v.plus(&x.scale(*e as i64));
            }
        }
        v
    }

    /// Minimum of `v(c_α) + α·ξ` over the terms and the number of terms
    /// attaining it (0 when the minimum is ∞).
    pub fn trop_eval_min(&self, xi: &[TropScalar]) -> (TropScalar, usize) {
        assert_eq!(xi.len(), self.vars.len(), "one coordinate per variable");
        let mut best = TropScalar::Inf;
        let mut count = 0;
        for (m, c) in &self.terms {
            let v = Self::term_value(m, c, xi);
            match v.cmp(&best) {
                Ordering::Less => {
                    best = v;
                    count = 1;
                }
                Ordering::Equal => count += 1,
                Ordering::Greater => {}
            }
        }
        if best.is_inf() {
            count = 0;
        }
        (best, count)
    }

    /// Sum of the minimising terms with coefficients reduced to the residue field.
    pub fn initial_form(&self, xi: &[TropScalar]) -> Polynomial {
        let (best, _) = self.trop_eval_min(xi);
        let mut r = Self::zero(&self.vars);
        if best.is_inf() {
            return r;
        }
        for (m, c) in &self.terms {
            if Self::term_value(m, c, xi) == best {
                r.add_term(m.clone(), ValuedScalar::constant(c.residue()));
            }
        }
        r
    }

    /// Whether `ξ` lies on the tropical hypersurface of `self`: the minimum is
    /// attained at least twice, or `self` vanishes on the coordinate face of `ξ`.
    pub fn hypersurface_membership(&self, xi: &[TropScalar]) -> bool {
        let (v, count) = self.trop_eval_min(xi);
        v.is_inf() || count >= 2
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms()
            .map(|(m, c)| {
                let exp: serde_json::Map<String, Value> = m
                    .0
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| (self.vars[i].clone(), json!(e)))
                    .collect();
                json!({"coeff": c.to_json(), "exp": exp})
            })
            .collect();
        json!({"vars": self.vars, "terms": terms})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let vars: Vec<String> = v
            .get("vars")
            .and_then(|x| x.as_array())
            .ok_or_else(|| Error::Parse("polynomial needs a \"vars\" list".into()))?
            .iter()
            .map(|s| s.as_str().map(String::from).ok_or_else(|| Error::Parse("variable names must be strings".into())))
            .collect::<Result<_>>()?;
        let terms = v
            .get("terms")
            .and_then(|x| x.as_array())
            .ok_or_else(|| Error::Parse("polynomial needs a \"terms\" list".into()))?;
        let mut p = Self::zero(&vars);
        for t in terms {
            let c = ValuedScalar::from_json(t.get("coeff").ok_or_else(|| Error::Parse("term without coeff".into()))?)?;
            let mut e = vec![0u32; vars.len()];
            if let Some(exp) = t.get("exp") {
                let exp = exp.as_object().ok_or_else(|| Error::Parse("\"exp\" must be an object".into()))?;
                for (name, k) in exp {
                    let i = vars.iter().position(|v| v == name).ok_or_else(|| Error::Parse(format!("unknown variable {name}")))?;
                    let k = k.as_u64().filter(|&k| k > 0).ok_or_else(|| Error::Parse("exponents must be positive integers".into()))?;
                    e[i] += k as u32;
                }
            }
            p.add_term(Monomial(e), c);
        }
        Ok(p)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms() {
            let mono: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { self.vars[i].clone() } else { format!("{}^{e}", self.vars[i]) })
                .collect();
            let simple = c.pairs().count() == 1 && c.pairs().next().unwrap().0.is_zero();
            let (neg, coeff) = if simple {
                let k = c.residue();
                (k.is_negative(), format!("{}", k.abs()))
            } else {
                (false, format!("({c})"))
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let unit = simple && coeff == "1";
            match (mono.is_empty(), unit) {
                (true, _) => write!(f, "{coeff}")?,
                (false, true) => write!(f, "{}", mono.join("*"))?,
                (false, false) => write!(f, "{coeff}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

/// Variable names `x1 … xn`.
pub fn names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tropcore::TropScalar::{Fin, Inf};
    use crate::{q, qq};
    use proptest::prelude::*;

    fn xy() -> Vec<String> {
        vec!["x".into(), "y".into()]
    }

    #[test]
    fn valuation_examples() {
        let s = ValuedScalar::from_pairs([(qq(1, 2), q(1)), (q(2), q(3))]);
        assert_eq!(s.valuation(), Fin(qq(1, 2)));
        assert_eq!(ValuedScalar::zero().valuation(), Inf);
        assert_eq!(ValuedScalar::constant(q(5)).valuation(), Fin(q(0)));
    }

    #[test]
    fn substitution_cancels() {
        let v = xy();
        let f = Polynomial::var(&v, 0).sub(&Polynomial::var(&v, 1));
        let y = vec!["y".to_string()];
        let g = f.substitute_linear(&[vec![q(1)], vec![q(1)]], &y);
        assert!(g.is_zero());
        let s = Polynomial::var(&v, 0).add(&Polynomial::var(&v, 1)).pow(2);
        assert_eq!(s.to_string(), "x^2 + 2*x*y + y^2");
    }

    #[test]
    fn pluecker_quadric_vanishes_on_differences() {
        let v = names("x", 6); // x12 x13 x14 x23 x24 x34
        let p = |i| Polynomial::var(&v, i);
        let quad = p(0).mul(&p(5)).sub(&p(1).mul(&p(4))).add(&p(2).mul(&p(3)));
        let y = names("y", 4);
        let mut forms = Vec::new();
        for (i, j) in crate::tropcore::pairs(4) {
            let mut f = vec![q(0); 4];
            f[i] = q(1);
            f[j] = q(-1);
            forms.push(f);
        }
        assert!(quad.substitute_linear(&forms, &y).is_zero());
    }

    #[test]
    fn weight_decomposition_examples() {
        let v = names("x", 6);
        let w = WeightAssignment {
            weights: crate::tropcore::pairs(4)
                .into_iter()
                .map(|(i, j)| {
                    let mut b = vec![0; 4];
                    b[i] = 1;
                    b[j] = 1;
                    b
                })
                .collect(),
        };
        let p = |i| Polynomial::var(&v, i);
        let d = p(0).weight_decompose(&w);
        assert_eq!(d.keys().cloned().collect::<Vec<_>>(), vec![vec![1, 1, 0, 0]]);
        let d = p(0).mul(&p(5)).add(&p(1).mul(&p(4))).weight_decompose(&w);
        assert_eq!(d.keys().cloned().collect::<Vec<_>>(), vec![vec![1, 1, 1, 1]]);
        let f = p(0).add(&p(0).mul(&p(5)));
        let d = f.weight_decompose(&w);
        assert_eq!(d.len(), 2);
        assert!(d.contains_key(&vec![1, 1, 0, 0]) && d.contains_key(&vec![1, 1, 1, 1]));
        let total = d.values().fold(Polynomial::zero(&v), |a, b| a.add(b));
        assert_eq!(total, f);
    }

    #[test]
    fn eval_min_examples() {
        let v = xy();
        let f = Polynomial::var(&v, 0).sub(&Polynomial::var(&v, 1));
        assert_eq!(f.trop_eval_min(&[Fin(q(0)), Fin(q(0))]), (Fin(q(0)), 2));
        let x = vec!["x".to_string()];
        let g = Polynomial::var(&x, 0).pow(2).scale(&ValuedScalar::term(q(1), q(1)));
        assert_eq!(g.trop_eval_min(&[Fin(qq(1, 2))]), (Fin(q(2)), 1));
    }

    #[test]
    fn initial_form_examples() {
        let v = xy();
        let f = Polynomial::var(&v, 0).sub(&Polynomial::var(&v, 1));
        assert_eq!(f.initial_form(&[Fin(q(0)), Fin(q(0))]), f);
        let inf = f.initial_form(&[Fin(q(0)), Fin(q(1))]);
        assert_eq!(inf, Polynomial::var(&v, 0));
        assert!(!f.hypersurface_membership(&[Fin(q(0)), Fin(q(1))]));
        assert!(f.hypersurface_membership(&[Fin(q(3)), Fin(q(3))]));
    }

    #[test]
    fn json_round_trip() {
        let v = xy();
        let f = Polynomial::var(&v, 0)
            .pow(2)
            .scale(&ValuedScalar::from_pairs([(qq(1, 2), q(1)), (q(2), qq(-3, 7))]))
            .sub(&Polynomial::constant(&v, ValuedScalar::constant(q(4))));
        let back = Polynomial::from_json(&f.to_json()).unwrap();
        assert_eq!(back, f);
        let src = r#"{"vars":["x12"],"terms":[{"coeff":[["0","1"]],"exp":{"x12":2}}]}"#;
        let p = Polynomial::from_json(&serde_json::from_str(src).unwrap()).unwrap();
        assert_eq!(p.to_string(), "x12^2");
    }

    fn scalar() -> impl Strategy<Value = ValuedScalar> {
        prop::collection::vec((-6i64..6, 1i64..4, -5i64..5), 0..4).prop_map(|v| {
            ValuedScalar::from_pairs(v.into_iter().map(|(n, d, c)| (qq(n, d), q(c))))
        })
    }

    fn poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((0u32..3, 0u32..3, -3i64..4), 1..5).prop_map(|v| {
            Polynomial::from_terms(&xy(), v.into_iter().map(|(a, b, c)| (Monomial(vec![a, b]), ValuedScalar::constant(q(c)))))
        })
    }

    proptest! {
        #[test]
        fn valuation_axioms(a in scalar(), b in scalar()) {
            prop_assert_eq!(a.mul(&b).valuation(), a.valuation().plus(&b.valuation()));
            let s = a.add(&b).valuation();
            prop_assert!(s >= a.valuation().min(b.valuation()));
        }

        #[test]
        fn eval_min_of_product(f in poly(), g in poly(), x in -20i64..20, y in -20i64..20) {
            // irrational-looking generic point: distinct denominators
            let xi = [Fin(qq(x, 7)), Fin(qq(y, 11))];
            let (a, _) = f.trop_eval_min(&xi);
            let (b, _) = g.trop_eval_min(&xi);
            let (c, _) = f.mul(&g).trop_eval_min(&xi);
            prop_assert!(c >= a.plus(&b));
            if !f.is_zero() && !g.is_zero() {
                // constant coefficients at a generic point: initial forms are monomials
                prop_assert_eq!(c, a.plus(&b));
            }
        }

        #[test]
        fn initial_form_monomial_iff_not_member(f in poly(), x in -3i64..3, y in -3i64..3) {
            let xi = [Fin(q(x)), Fin(q(y))];
            prop_assume!(!f.is_zero());
            prop_assert_eq!(f.initial_form(&xi).is_monomial(), !f.hypersurface_membership(&xi));
        }

        #[test]
        fn weight_components_homogeneous(f in poly()) {
            let w = WeightAssignment { weights: vec![vec![1, 0], vec![1, 1]] };
            let d = f.weight_decompose(&w);
            let mut total = Polynomial::zero(&xy());
            for (b, p) in &d {
                for (m, _) in p.terms() {
                    prop_assert_eq!(&w.of(m), b);
                }
                total = total.add(p);
            }
            prop_assert_eq!(total, f);
        }
    }
}
