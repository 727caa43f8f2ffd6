//! Exact sections of the tropicalisation map.
//!
//! Everything is computed over exact rationals. Tropical values live in
//! `ℚ ∪ {∞}` with the min-plus conventions, coefficient-field elements are
//! finite sums of rational powers of a uniformiser `t`.

pub mod grass2;
pub mod hyperdet;
pub mod linalg;
pub mod linsection;
pub mod matrixvar;
pub mod matroids;
pub mod polyhedra;
pub mod tropcore;
pub mod valfield;

pub use num::BigRational as Q;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("not a member: {0}")]
    NotMember(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("oracle disagreement: {0}")]
    Oracle(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Integer as a rational.
pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// `n/d` as a rational. Panics on `d == 0`.
pub fn qq(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

/// Parse `"p/q"` or `"p"`.
pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: num::BigInt = n.parse().map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    let d: num::BigInt = d.parse().map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    if d == num::BigInt::from(0) {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Q::new(n, d))
}

/// Canonical text form: `"p/q"`, or `"p"` for integers.
pub fn fmt_q(x: &Q) -> String {
    x.to_string()
}
