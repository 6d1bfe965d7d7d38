//! Exact combinatorics of Borel (strongly stable) monomial ideals.
//!
//! Terms live in `K[x0, ..., xn]` with `x0 < x1 < ... < xn`. The crate covers
//! term orders and the Borel order, admissible Hilbert polynomials, Borel
//! ideals and their saturations, segment-type classification, enumeration of
//! saturated Borel ideals with a given Hilbert polynomial, and Groebner
//! strata with their embedding dimension.

pub mod enumerate;
pub mod error;
pub mod ideals;
pub mod monomials;
pub mod polynomials;
pub mod segments;
pub mod strata;

pub use error::{Error, Result};
pub use ideals::{BorelIdeal, MonomialIdeal};
pub use monomials::{Move, Term, TermOrder};
pub use polynomials::{AdmissiblePolynomial, NotAdmissible, Polynomial};

/// Integer binomial coefficient `C(m, k)`, zero when `k < 0` or `m < k`.
pub fn binomial(m: i64, k: i64) -> i128 {
    if k < 0 || m < k {
        return 0;
    }
    let k = k.min(m - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (m - i) as i128 / (i + 1) as i128;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::binomial;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(-2, 1), 0);
        assert_eq!(binomial(4, -1), 0);
        assert_eq!(binomial(60, 30), 118264581564861424);
    }
}
