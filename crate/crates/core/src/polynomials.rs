//! Univariate polynomials with exact rational coefficients, and admissible
//! Hilbert polynomials with their Gotzmann and Macaulay decompositions.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::binomial;
use crate::error::{Error, Result};

/// Hard cap on the number of Gotzmann peeling steps.
const MAX_PEEL_STEPS: usize = 1_000_000;

/// A polynomial in `z`; `coeffs[k]` is the coefficient of `z^k`.
/// Trailing zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn factorial(k: u32) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: i64) -> Self {
        Polynomial::new(vec![rat(c)])
    }

    /// `a*z + b`.
    pub fn linear(a: i64, b: i64) -> Self {
        Polynomial::new(vec![rat(b), rat(a)])
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    /// The symbolic binomial `C(z + a, k) = (z+a)(z+a-1)...(z+a-k+1) / k!`.
    pub fn binomial_shift(a: i64, k: u32) -> Polynomial {
        let mut p = Polynomial::constant(1);
        for i in 0..k as i64 {
            p = &p * &Polynomial::linear(1, a - i);
        }
        let f = BigRational::from_integer(factorial(k));
        Polynomial::new(p.coeffs.into_iter().map(|c| c / &f).collect())
    }

    pub fn eval(&self, z: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * z + c)
    }

    pub fn eval_at(&self, t: i64) -> BigRational {
        self.eval(&rat(t))
    }

    /// Value at an integer point, which must be an integer.
    pub fn eval_int(&self, t: i64) -> Option<BigInt> {
        let v = self.eval_at(t);
        v.is_integer().then(|| v.to_integer())
    }

    /// `p(z) - p(z-1)`.
    pub fn delta(&self) -> Polynomial {
        self - &self.shift(-1)
    }

    /// `p(z + s)`.
    pub fn shift(&self, s: i64) -> Polynomial {
        let lin = Polynomial::linear(1, s);
        let mut out = Polynomial::zero();
        for c in self.coeffs.iter().rev() {
            out = &(&out * &lin) + &Polynomial::new(vec![c.clone()]);
        }
        out
    }

    /// Integer-valued at every integer: checked at `deg + 1` consecutive points.
    pub fn is_integer_valued(&self) -> bool {
        let d = self.degree().unwrap_or(0) as i64;
        (0..=d).all(|t| self.eval_at(t).is_integer())
    }

    /// Exact interpolation through `(x_i, y_i)` by Newton divided differences.
    pub fn interpolate(points: &[(i64, BigInt)]) -> Polynomial {
        let xs: Vec<i64> = points.iter().map(|p| p.0).collect();
        let mut dd: Vec<BigRational> = points
            .iter()
            .map(|p| BigRational::from_integer(p.1.clone()))
            .collect();
        let m = dd.len();
        for level in 1..m {
            for i in (level..m).rev() {
                let den = rat(xs[i] - xs[i - level]);
                dd[i] = (&dd[i] - &dd[i - 1]) / den;
            }
        }
        let mut out = Polynomial::zero();
        for i in (0..m).rev() {
            out = &(&out * &Polynomial::linear(1, -xs[i])) + &Polynomial::new(vec![dd[i].clone()]);
        }
        out
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, o: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = BigRational::zero();
        Polynomial::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + o.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, o: &Polynomial) -> Polynomial {
        self + &(-o)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, o: &Polynomial) -> Polynomial {
        if self.is_zero() || o.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, o: Polynomial) -> Polynomial {
        &self + &o
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, o: Polynomial) -> Polynomial {
        &self - &o
    }
}

fn fmt_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if neg {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            if k == 0 || !a.is_one() {
                f.write_str(&fmt_rational(&a))?;
            }
            match k {
                0 => {}
                1 => f.write_str("z")?,
                _ => write!(f, "z^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

struct Cursor {
    chars: Vec<(usize, char)>,
    i: usize,
    end: usize,
}

impl Cursor {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.i).map(|c| c.1)
    }
    fn pos(&self) -> usize {
        self.chars.get(self.i).map_or(self.end, |c| c.0)
    }
    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos(),
            msg: msg.into(),
        }
    }
    fn digits(&mut self) -> Option<BigInt> {
        let start = self.i;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.i += 1;
        }
        if start == self.i {
            return None;
        }
        let s: String = self.chars[start..self.i].iter().map(|c| c.1).collect();
        s.parse().ok()
    }
}

/// Parse `term (('+'|'-') term)*` with `term = [rational][z['^'exp]]`.
pub fn parse_polynomial(text: &str) -> Result<Polynomial> {
    let mut cur = Cursor {
        chars: text
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect(),
        i: 0,
        end: text.len(),
    };
    if cur.chars.is_empty() {
        return Err(cur.err("empty polynomial"));
    }
    let mut coeffs: Vec<BigRational> = Vec::new();
    let mut first = true;
    loop {
        let mut sign = BigRational::one();
        match cur.peek() {
            Some('+') if !first => cur.i += 1,
            Some('-') => {
                sign = -sign;
                cur.i += 1;
            }
            _ if !first => return Err(cur.err("expected `+` or `-`")),
            _ => {}
        }
        first = false;
        let coef = match cur.digits() {
            Some(num) => {
                let mut c = BigRational::from_integer(num);
                if cur.peek() == Some('/') {
                    cur.i += 1;
                    let den = cur.digits().ok_or_else(|| cur.err("expected a denominator"))?;
                    if den.is_zero() {
                        return Err(cur.err("zero denominator"));
                    }
                    c /= BigRational::from_integer(den);
                }
                if cur.peek() == Some('*') {
                    cur.i += 1;
                    if cur.peek() != Some('z') {
                        return Err(cur.err("expected `z` after `*`"));
                    }
                }
                Some(c)
            }
            None => None,
        };
        let mut k = 0usize;
        if cur.peek() == Some('z') {
            cur.i += 1;
            k = 1;
            if cur.peek() == Some('^') {
                cur.i += 1;
                let e = cur.digits().ok_or_else(|| cur.err("expected an exponent"))?;
                k = e.to_usize().ok_or_else(|| cur.err("exponent too large"))?;
                if k > 64 {
                    return Err(cur.err("exponent too large"));
                }
            }
        } else if coef.is_none() {
            return Err(cur.err("expected a number or `z`"));
        }
        let c = sign * coef.unwrap_or_else(BigRational::one);
        if coeffs.len() <= k {
            coeffs.resize(k + 1, BigRational::zero());
        }
        coeffs[k] += c;
        if cur.peek().is_none() {
            break;
        }
    }
    Ok(Polynomial::new(coeffs))
}

impl FromStr for Polynomial {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_polynomial(s)
    }
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    coeffs: Vec<String>,
}

impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson {
            coeffs: self.coeffs.iter().map(fmt_rational).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = PolyJson::deserialize(d)?;
        let coeffs = j
            .coeffs
            .iter()
            .map(|s| s.trim().parse::<BigRational>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        Ok(Polynomial::new(coeffs))
    }
}

/// Failure of the Gotzmann or Macaulay decomposition.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("polynomial {poly} is not admissible (decomposition failed at step {step}: {reason})")]
pub struct NotAdmissible {
    pub poly: String,
    pub step: usize,
    pub reason: String,
}

/// Gotzmann coefficients `a_1 >= ... >= a_r` with
/// `p(z) = sum_i C(z + a_i - (i-1), a_i)`.
pub fn gotzmann_decomposition(p: &Polynomial) -> std::result::Result<Vec<u32>, NotAdmissible> {
    let fail = |step: usize, reason: &str| NotAdmissible {
        poly: p.to_string(),
        step,
        reason: reason.into(),
    };
    let mut rest = p.clone();
    let mut out: Vec<u32> = Vec::new();
    while let Some(a) = rest.degree() {
        let step = out.len() + 1;
        if step > MAX_PEEL_STEPS {
            return Err(fail(step, "step limit exceeded"));
        }
        if !rest.leading_coefficient().is_positive() {
            return Err(fail(step, "negative leading coefficient"));
        }
        let a = a as u32;
        rest = &rest - &Polynomial::binomial_shift(a as i64 - (step as i64 - 1), a);
        out.push(a);
    }
    debug_assert!(out.windows(2).all(|w| w[0] >= w[1]));
    Ok(out)
}

/// Gotzmann number `r`, the length of the Gotzmann decomposition.
pub fn gotzmann_number(p: &Polynomial) -> std::result::Result<usize, NotAdmissible> {
    gotzmann_decomposition(p).map(|a| a.len())
}

/// `C(d,2) + 1 - g`, the Gotzmann number of `dz + 1 - g`.
pub fn gotzmann_number_linear(d: i64, g: i64) -> i64 {
    binomial(d, 2) as i64 + 1 - g
}

/// Macaulay coefficients `m_0 >= ... >= m_l` with
/// `p(z) = sum_i [C(z+i, i+1) - C(z+i-m_i, i+1)]`.
pub fn macaulay_form(p: &Polynomial) -> std::result::Result<Vec<u64>, NotAdmissible> {
    let Some(l) = p.degree() else {
        return Ok(Vec::new());
    };
    let mut m = vec![0u64; l + 1];
    let mut rest = p.clone();
    for i in (0..=l).rev() {
        let step = l - i + 1;
        let fail = |reason: &str| NotAdmissible {
            poly: p.to_string(),
            step,
            reason: reason.into(),
        };
        let lc = if rest.degree() == Some(i) {
            rest.leading_coefficient()
        } else if rest.degree().is_none_or(|d| d < i) {
            BigRational::zero()
        } else {
            return Err(fail("degree did not drop"));
        };
        let mi = lc * BigRational::from_integer(factorial(i as u32));
        if !mi.is_integer() || mi.is_negative() {
            return Err(fail("coefficient is not a nonnegative integer"));
        }
        let mi = mi
            .to_integer()
            .to_u64()
            .ok_or_else(|| fail("coefficient too large"))?;
        if i < l && mi < m[i + 1] {
            return Err(fail("coefficients are not non-increasing"));
        }
        m[i] = mi;
        let block = &Polynomial::binomial_shift(i as i64, i as u32 + 1)
            - &Polynomial::binomial_shift(i as i64 - mi as i64, i as u32 + 1);
        rest = &rest - &block;
    }
    if !rest.is_zero() {
        return Err(NotAdmissible {
            poly: p.to_string(),
            step: l + 1,
            reason: "nonzero remainder".into(),
        });
    }
    Ok(m)
}

/// Rebuild `sum_i C(z + a_i - (i-1), a_i)`.
pub fn from_gotzmann(a: &[u32]) -> Polynomial {
    a.iter().enumerate().fold(Polynomial::zero(), |acc, (i, &ai)| {
        &acc + &Polynomial::binomial_shift(ai as i64 - i as i64, ai)
    })
}

/// Rebuild `sum_i [C(z+i, i+1) - C(z+i-m_i, i+1)]`.
pub fn from_macaulay(m: &[u64]) -> Polynomial {
    m.iter().enumerate().fold(Polynomial::zero(), |acc, (i, &mi)| {
        let b = &Polynomial::binomial_shift(i as i64, i as u32 + 1)
            - &Polynomial::binomial_shift(i as i64 - mi as i64, i as u32 + 1);
        &acc + &b
    })
}

/// An admissible Hilbert polynomial together with both decompositions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AdmissiblePolynomial {
    poly: Polynomial,
    gotzmann: Vec<u32>,
    macaulay: Vec<u64>,
}

impl AdmissiblePolynomial {
    pub fn new(poly: Polynomial) -> std::result::Result<Self, NotAdmissible> {
        if !poly.is_integer_valued() {
            return Err(NotAdmissible {
                poly: poly.to_string(),
                step: 0,
                reason: "not integer-valued".into(),
            });
        }
        let gotzmann = gotzmann_decomposition(&poly)?;
        let macaulay = macaulay_form(&poly)?;
        Ok(AdmissiblePolynomial {
            poly,
            gotzmann,
            macaulay,
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        Ok(Self::new(parse_polynomial(text)?)?)
    }

    pub fn constant(d: i64) -> Result<Self> {
        Ok(Self::new(Polynomial::constant(d))?)
    }

    pub fn zero() -> Self {
        AdmissiblePolynomial {
            poly: Polynomial::zero(),
            gotzmann: Vec::new(),
            macaulay: Vec::new(),
        }
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    pub fn gotzmann(&self) -> &[u32] {
        &self.gotzmann
    }

    pub fn macaulay(&self) -> &[u64] {
        &self.macaulay
    }

    /// The Gotzmann number `r`.
    pub fn gotzmann_number(&self) -> usize {
        self.gotzmann.len()
    }

    pub fn degree(&self) -> Option<usize> {
        self.poly.degree()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// `p(t)`, always an integer for admissible polynomials.
    pub fn value(&self, t: i64) -> BigInt {
        self.poly
            .eval_int(t)
            .expect("admissible polynomials are integer-valued")
    }

    /// `p(t)` as `i128`, for comparisons with term counts.
    pub fn value_i128(&self, t: i64) -> i128 {
        self.value(t).to_i128().expect("value fits in i128")
    }

    /// `p(t)` as `u64`; negative values are an error.
    pub fn value_u64(&self, t: i64) -> Result<u64> {
        self.value(t)
            .to_u64()
            .ok_or_else(|| Error::domain(format!("p({t}) is not a nonnegative machine integer")))
    }

    /// `delta(p)`, admissible whenever `p` is.
    pub fn delta(&self) -> Result<AdmissiblePolynomial> {
        Ok(Self::new(self.poly.delta())?)
    }

    /// The minimal polynomial of `p + Z` of the same degree.
    pub fn minimal(&self) -> Result<AdmissiblePolynomial> {
        minimal_polynomial(self)
    }

    /// `p + c`.
    pub fn add_constant(&self, c: i64) -> Result<AdmissiblePolynomial> {
        Ok(Self::new(&self.poly + &Polynomial::constant(c))?)
    }
}

impl fmt::Display for AdmissiblePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

impl fmt::Debug for AdmissiblePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (a = {:?})", self.poly, self.gotzmann)
    }
}

impl FromStr for AdmissiblePolynomial {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// `p^` from the Gotzmann coefficients `b_i` of `delta(p)`, raised to `b_i + 1`.
pub fn minimal_polynomial(p: &AdmissiblePolynomial) -> Result<AdmissiblePolynomial> {
    if p.degree().is_none_or(|d| d == 0) {
        return Err(Error::domain("the minimal polynomial needs a nonconstant polynomial"));
    }
    let b = gotzmann_decomposition(&p.poly.delta())?;
    let a: Vec<u32> = b.iter().map(|x| x + 1).collect();
    Ok(AdmissiblePolynomial::new(from_gotzmann(&a))?)
}

/// `q' = C(nvars - 1 + r, r - 1) - p(r - 1)`.
pub fn q_prime(r: u32, nvars: u32, p: &AdmissiblePolynomial) -> BigInt {
    BigInt::from(binomial(nvars as i64 - 1 + r as i64, r as i64 - 1)) - p.value(r as i64 - 1)
}
