//! Monomial ideals and Borel ideals.

use std::collections::HashSet;
use std::fmt;
use std::ops::Deref;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::binomial;
use crate::error::{Error, Result};
use crate::monomials::{all_terms, parse_factors, Term};
use crate::polynomials::{AdmissiblePolynomial, Polynomial};

/// A monomial ideal of `K[x0, ..., xn]` given by its minimal generators,
/// kept in canonical order (degree ascending, then revlex descending).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Term>,
}

/// Sort, deduplicate and drop generators divisible by another one.
pub fn minimalize(mut gens: Vec<Term>) -> Vec<Term> {
    gens.sort();
    gens.dedup();
    let mut out: Vec<Term> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

impl MonomialIdeal {
    pub fn new(n: usize, gens: Vec<Term>) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.n() != n) {
            return Err(Error::Dimension {
                expected: n + 1,
                found: g.n() + 1,
            });
        }
        Ok(MonomialIdeal {
            n,
            gens: minimalize(gens),
        })
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: vec![Term::one(n)],
        }
    }

    /// Parse a comma-separated list of terms, optionally wrapped in parentheses.
    /// `n = None` takes the largest variable index mentioned.
    pub fn parse(text: &str, n: Option<usize>) -> Result<Self> {
        let trimmed = text.trim();
        let mut body = trimmed;
        let mut offset = text.len() - text.trim_start().len();
        if let Some(inner) = body.strip_prefix('(') {
            body = inner
                .strip_suffix(')')
                .ok_or_else(|| Error::Parse {
                    pos: text.len(),
                    msg: "missing `)`".into(),
                })?;
            offset += 1;
        }
        let mut parsed = Vec::new();
        if !body.trim().is_empty() && body.trim() != "0" {
            for piece in body.split(',') {
                parsed.push(parse_factors(piece, offset)?);
                offset += piece.len() + 1;
            }
        }
        let top = parsed
            .iter()
            .flatten()
            .map(|f| f.1)
            .max()
            .unwrap_or(0);
        let n = match n {
            Some(n) => {
                if let Some(&(pos, idx, _)) = parsed.iter().flatten().find(|f| f.1 > n) {
                    return Err(Error::Parse {
                        pos,
                        msg: format!("variable x{idx} outside x0..x{n}"),
                    });
                }
                n
            }
            None => top,
        };
        let gens = parsed
            .into_iter()
            .map(|fs| {
                let mut e = vec![0u32; n + 1];
                for (_, i, k) in fs {
                    e[i] += k;
                }
                Term::new(e)
            })
            .collect();
        MonomialIdeal::new(n, gens)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Term] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first().is_some_and(|g| g.is_one())
    }

    pub fn contains(&self, t: &Term) -> bool {
        self.gens.iter().any(|g| g.divides(t))
    }

    /// Generators of a given degree.
    pub fn gens_of_degree(&self, d: u32) -> Vec<Term> {
        self.gens.iter().filter(|g| g.degree() == d).cloned().collect()
    }

    pub fn max_generator_degree(&self) -> Option<u32> {
        self.gens.iter().map(Term::degree).max()
    }

    pub fn min_generator_degree(&self) -> Option<u32> {
        self.gens.iter().map(Term::degree).min()
    }

    /// First generator-wise failure of Borel closure: `(g, j)` with
    /// `x_j | g`, `j < n` and `e_j^+(g)` outside the ideal.
    pub fn borel_witness(&self) -> Option<(Term, usize)> {
        for g in &self.gens {
            for j in 0..self.n {
                if let Some(u) = g.move_up(j) {
                    if !self.contains(&u) {
                        return Some((g.clone(), j));
                    }
                }
            }
        }
        None
    }

    pub fn is_borel(&self) -> bool {
        self.borel_witness().is_none()
    }

    /// `I_t`, in canonical order.
    pub fn degree_slice(&self, t: u32) -> Vec<Term> {
        let mut v: Vec<Term> = all_terms(self.n, t)
            .into_iter()
            .filter(|u| self.contains(u))
            .collect();
        v.sort();
        v
    }

    /// `N(I)_t`, the degree `t` terms outside `I`, in canonical order.
    pub fn sous_escalier(&self, t: u32) -> Vec<Term> {
        let gens: Vec<&[u32]> = self.gens.iter().map(|g| g.exps()).collect();
        let mut v = Vec::new();
        let mut exps = vec![0; self.n + 1];
        collect_outside(&gens, self.n, t, &mut exps, &mut v);
        v.sort();
        v
    }

    /// `H_{S/I}(t) = |N(I)_t|`.
    pub fn hilbert_function(&self, t: u32) -> u128 {
        let gens: Vec<&[u32]> = self.gens.iter().map(|g| g.exps()).collect();
        count_outside(&gens, self.n, t)
    }

    /// `I_{>=m}`.
    pub fn truncate(&self, m: u32) -> MonomialIdeal {
        let mut gens = Vec::new();
        for g in &self.gens {
            let d = g.degree();
            if d >= m {
                gens.push(g.clone());
            } else {
                gens.extend(all_terms(self.n, m - d).into_iter().map(|u| u.mul(g)));
            }
        }
        MonomialIdeal {
            n: self.n,
            gens: minimalize(gens),
        }
    }

    /// Substitute `x_0 = ... = x_{k-1} = 1` in the generators.
    pub fn dehomogenize(&self, k: usize) -> MonomialIdeal {
        MonomialIdeal {
            n: self.n,
            gens: minimalize(self.gens.iter().map(|g| g.dehomogenize(k)).collect()),
        }
    }

    /// Saturation. Only Borel ideals are supported, where it amounts to `x0 = 1`.
    pub fn saturate(&self, borel: bool) -> Result<MonomialIdeal> {
        if !borel {
            return Err(Error::domain(
                "saturation is implemented for Borel ideals only",
            ));
        }
        if let Some((g, j)) = self.borel_witness() {
            return Err(Error::not_borel(&g, j));
        }
        Ok(self.dehomogenize(1))
    }

    /// The same ideal in one more variable, prepended as the new smallest variable.
    pub fn shift_up(&self) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut e = Vec::with_capacity(g.exps().len() + 1);
                e.push(0);
                e.extend_from_slice(g.exps());
                Term::new(e)
            })
            .collect();
        MonomialIdeal {
            n: self.n + 1,
            gens,
        }
    }

    /// The same generators in `K[x0, ..., x_m]`, `m >= n`.
    pub fn embed(&self, m: usize) -> MonomialIdeal {
        MonomialIdeal {
            n: m,
            gens: minimalize(self.gens.iter().map(|g| g.embed(m)).collect()),
        }
    }
}

/// Number of degree `t` terms in `x_0..x_var` not divisible by any of `gens`
/// (exponent vectors read up to index `var`).
///
/// Splits on the exponent `e` of `x_var`: the remaining factor must avoid
/// the generators whose `x_var`-exponent is at most `e`.
fn count_outside(gens: &[&[u32]], var: usize, t: u32) -> u128 {
    if gens.iter().any(|g| g[..=var].iter().all(|&e| e == 0)) {
        return 0;
    }
    if gens.is_empty() {
        return binomial(var as i64 + t as i64, var as i64) as u128;
    }
    if var == 0 {
        let m = gens.iter().map(|g| g[0]).min().unwrap();
        return u128::from(t < m);
    }
    let mut total = 0;
    let mut sub: Vec<&[u32]> = Vec::with_capacity(gens.len());
    for e in 0..=t {
        sub.clear();
        sub.extend(gens.iter().copied().filter(|g| g[var] <= e));
        total += count_outside(&sub, var - 1, t - e);
    }
    total
}

/// Same recursion as `count_outside`, materializing the terms.
fn collect_outside(gens: &[&[u32]], var: usize, t: u32, exps: &mut Vec<u32>, out: &mut Vec<Term>) {
    if gens.iter().any(|g| g[..=var].iter().all(|&e| e == 0)) {
        return;
    }
    if var == 0 {
        if gens.iter().all(|g| g[0] > t) {
            exps[0] = t;
            out.push(Term::new(exps.clone()));
        }
        return;
    }
    let mut sub: Vec<&[u32]> = Vec::with_capacity(gens.len());
    for e in 0..=t {
        sub.clear();
        sub.extend(gens.iter().copied().filter(|g| g[var] <= e));
        exps[var] = e;
        collect_outside(&sub, var - 1, t - e, exps, out);
    }
    exps[var] = 0;
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize, Deserialize)]
struct IdealJson {
    n: usize,
    generators: Vec<Vec<u32>>,
}

impl Serialize for MonomialIdeal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        IdealJson {
            n: self.n,
            generators: self.gens.iter().map(|g| g.exps().to_vec()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MonomialIdeal {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = IdealJson::deserialize(d)?;
        let gens = j
            .generators
            .into_iter()
            .map(|e| {
                if e.len() != j.n + 1 {
                    Err(serde::de::Error::custom(format!(
                        "generator has {} exponents, expected {}",
                        e.len(),
                        j.n + 1
                    )))
                } else {
                    Ok(Term::new(e))
                }
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        MonomialIdeal::new(j.n, gens).map_err(serde::de::Error::custom)
    }
}

/// A monomial ideal validated to be Borel (strongly stable).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct BorelIdeal(MonomialIdeal);

impl<'de> Deserialize<'de> for BorelIdeal {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        BorelIdeal::new(MonomialIdeal::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

impl Deref for BorelIdeal {
    type Target = MonomialIdeal;
    fn deref(&self) -> &MonomialIdeal {
        &self.0
    }
}

impl fmt::Display for BorelIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for BorelIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl BorelIdeal {
    pub fn new(ideal: MonomialIdeal) -> Result<Self> {
        match ideal.borel_witness() {
            Some((g, j)) => Err(Error::not_borel(&g, j)),
            None => Ok(BorelIdeal(ideal)),
        }
    }

    pub fn parse(text: &str, n: Option<usize>) -> Result<Self> {
        Self::new(MonomialIdeal::parse(text, n)?)
    }

    /// The ideal generated by a Borel subset of `T_t`.
    pub fn from_terms(n: usize, terms: Vec<Term>) -> Result<Self> {
        Self::new(MonomialIdeal::new(n, terms)?)
    }

    pub(crate) fn new_unchecked(ideal: MonomialIdeal) -> Self {
        debug_assert!(ideal.is_borel());
        BorelIdeal(ideal)
    }

    pub fn as_monomial(&self) -> &MonomialIdeal {
        &self.0
    }

    pub fn into_monomial(self) -> MonomialIdeal {
        self.0
    }

    /// Castelnuovo-Mumford regularity, the largest generator degree.
    pub fn regularity(&self) -> Result<u32> {
        self.max_generator_degree()
            .ok_or_else(|| Error::domain("the zero ideal has no regularity"))
    }

    /// Krull dimension of `S/J`: the least `max_index` over the generators.
    pub fn krull_dimension(&self) -> Result<usize> {
        if self.is_unit() {
            return Err(Error::domain("the unit ideal has no Krull dimension"));
        }
        Ok(self
            .gens()
            .iter()
            .filter_map(Term::max_index)
            .min()
            .unwrap_or(self.n() + 1))
    }

    /// Hilbert polynomial by interpolation of the Hilbert function past the regularity.
    pub fn hilbert_polynomial(&self) -> Result<AdmissiblePolynomial> {
        if self.is_unit() {
            return Ok(AdmissiblePolynomial::zero());
        }
        let reg = self.max_generator_degree().unwrap_or(0) as i64;
        let n = self.n() as i64;
        let points: Vec<(i64, BigInt)> = (reg..=reg + n)
            .map(|t| (t, BigInt::from(self.hilbert_function(t as u32))))
            .collect();
        let p = Polynomial::interpolate(&points);
        for t in reg + n + 1..=reg + n + 3 {
            if p.eval_int(t) != Some(BigInt::from(self.hilbert_function(t as u32))) {
                return Err(Error::Internal(format!(
                    "Hilbert function of {self} leaves {p} at t = {t}"
                )));
            }
        }
        Ok(AdmissiblePolynomial::new(p)?)
    }

    pub fn is_saturated(&self) -> bool {
        self.gens().iter().all(|g| g.exponent(0) == 0)
    }

    /// `J^sat`, obtained by setting `x0 = 1`.
    pub fn saturate(&self) -> BorelIdeal {
        BorelIdeal(self.dehomogenize(1))
    }

    /// The `x1`-saturation (set `x0 = x1 = 1`) and `q`, the sum of the
    /// `x1`-exponents of the generators of `J^sat`.
    pub fn x1_saturate(&self) -> (BorelIdeal, u64) {
        let sat = self.saturate();
        let q = if self.n() >= 1 {
            sat.gens().iter().map(|g| g.exponent(1) as u64).sum()
        } else {
            0
        };
        (BorelIdeal(self.dehomogenize(2.min(self.n() + 1))), q)
    }

    /// Minimal generators of degree `t + 1` as `N((J_t))_{t+1} \ N(J)_{t+1}`.
    pub fn new_generators_at(&self, t: u32) -> Vec<Term> {
        let below = self.sous_escalier(t);
        let expanded = if below.len() as u128
            == binomial(self.n() as i64 + t as i64, t as i64) as u128
        {
            all_terms(self.n(), t + 1)
        } else {
            expand_unchecked(&below, self.n())
        };
        let upper: HashSet<Term> = self.sous_escalier(t + 1).into_iter().collect();
        let mut out: Vec<Term> = expanded.into_iter().filter(|u| !upper.contains(u)).collect();
        out.sort();
        out
    }

    pub fn shift_up(&self) -> BorelIdeal {
        BorelIdeal(self.0.shift_up())
    }

    pub fn truncate(&self, m: u32) -> BorelIdeal {
        BorelIdeal(self.0.truncate(m))
    }

    /// `(J, x_{m+1}, ..., x_n)` for `J` over `x0..x_m`.
    pub fn extend_by_variables(&self, n: usize) -> Result<BorelIdeal> {
        if n < self.n() {
            return Err(Error::Dimension {
                expected: self.n() + 1,
                found: n + 1,
            });
        }
        let mut gens: Vec<Term> = self.gens().iter().map(|g| g.embed(n)).collect();
        gens.extend((self.n() + 1..=n).map(|i| Term::var(n, i)));
        BorelIdeal::new(MonomialIdeal::new(n, gens)?)
    }
}

/// `lambda_{i,t}(N)`: elements of `N` whose smallest variable has index at least `i`.
/// The constant term counts for every `i`.
pub fn lambda(terms: &[Term], i: usize) -> usize {
    terms
        .iter()
        .filter(|u| u.min_index().is_none_or(|m| m >= i))
        .count()
}

/// Check that `terms` is closed under `e_j^-` moves, i.e. its complement in
/// `T_t` is a Borel set.
fn check_order_ideal(terms: &[Term]) -> Result<()> {
    let set: HashSet<&Term> = terms.iter().collect();
    for u in terms {
        for (j, v) in (1..=u.n()).filter_map(|j| u.move_down(j).map(|v| (j, v))) {
            if !set.contains(&v) {
                return Err(Error::NotBorel {
                    generator: v.to_string(),
                    j: j - 1,
                });
            }
        }
    }
    Ok(())
}

/// `N(J)_{t+1}` of the ideal generated by a Borel slice with complement `N` in `T_t`:
/// the disjoint union over `i` of `x_i * {u in N : min(u) >= i}`.
pub fn expand_sous_escalier(terms: &[Term], n: usize) -> Result<Vec<Term>> {
    check_order_ideal(terms)?;
    if let Some(u) = terms.iter().find(|u| u.n() != n) {
        return Err(Error::Dimension {
            expected: n + 1,
            found: u.n() + 1,
        });
    }
    Ok(expand_unchecked(terms, n))
}

fn expand_unchecked(terms: &[Term], n: usize) -> Vec<Term> {
    let mut out = Vec::new();
    for i in 0..=n {
        out.extend(
            terms
                .iter()
                .filter(|u| u.min_index().is_none_or(|m| m >= i))
                .map(|u| u.mul_var(i)),
        );
    }
    out.sort();
    out
}

/// Check that `b` is closed under `e_j^+` moves.
fn check_borel_set(b: &HashSet<&Term>) -> Result<()> {
    for u in b {
        for j in 0..u.n() {
            if let Some(v) = u.move_up(j) {
                if !b.contains(&v) {
                    return Err(Error::not_borel(u, j));
                }
            }
        }
    }
    Ok(())
}

/// `<_B`-minimal elements of a Borel set `B` of degree-`t` terms, in canonical order.
pub fn minimal_elements(b: &[Term]) -> Result<Vec<Term>> {
    let set: HashSet<&Term> = b.iter().collect();
    check_borel_set(&set)?;
    let mut out: Vec<Term> = b
        .iter()
        .filter(|u| u.down_moves().all(|v| !set.contains(&v)))
        .cloned()
        .collect();
    out.sort();
    Ok(out)
}

/// Terms of `T_t \ B` all of whose `e_j^+` moves land in `B`, in canonical order.
pub fn maximal_outside(b: &[Term], n: usize, t: u32) -> Result<Vec<Term>> {
    let set: HashSet<&Term> = b.iter().collect();
    check_borel_set(&set)?;
    let mut out: Vec<Term> = all_terms(n, t)
        .into_iter()
        .filter(|v| !set.contains(v) && v.up_moves().all(|w| set.contains(&w)))
        .collect();
    out.sort();
    Ok(out)
}
