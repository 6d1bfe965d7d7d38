//! Segment ideals and their weaker variants, the order-independent
//! non-segment criterion, and constructions of segment-type ideals.

use std::collections::HashSet;

use serde::{Serialize, Serializer};

use crate::binomial;
use crate::error::{Error, Result};
use crate::ideals::{lambda, minimalize, BorelIdeal, MonomialIdeal};
use crate::monomials::{all_terms, revlex_tail, terms_of_degree, Term, TermOrder};
use crate::polynomials::AdmissiblePolynomial;

/// A failure of the upper-set property in degree `degree`: `inside` lies in
/// the ideal, `outside` does not, and `inside` is smaller than `outside`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SegmentWitness {
    pub degree: u32,
    #[serde(serialize_with = "as_string")]
    pub inside: Term,
    #[serde(serialize_with = "as_string")]
    pub outside: Term,
}

fn as_string<T: std::fmt::Display, S: Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SegmentReport {
    #[serde(serialize_with = "as_string")]
    pub order: TermOrder,
    #[serde(rename = "segment")]
    pub is_segment: bool,
    #[serde(rename = "hilb")]
    pub is_hilb_segment: bool,
    #[serde(rename = "reg")]
    pub is_reg_segment: bool,
    #[serde(rename = "gen")]
    pub is_gen_segment: bool,
    pub gotzmann: usize,
    pub regularity: u32,
    pub witness: Option<SegmentWitness>,
}

/// Whether `J_t` is an upper set of `(T_t, ord)`. On failure returns the
/// first gap in descending order together with the largest member below it.
pub fn is_segment_at(j: &MonomialIdeal, t: u32, ord: &TermOrder) -> std::result::Result<(), SegmentWitness> {
    if segment_holds(j, t, ord) {
        return Ok(());
    }
    let terms = terms_of_degree(j.n(), t, ord);
    let Some(gap) = terms.iter().position(|u| !j.contains(u)) else {
        return Ok(());
    };
    match terms[gap + 1..].iter().find(|u| j.contains(u)) {
        None => Ok(()),
        Some(inside) => Err(SegmentWitness {
            degree: t,
            inside: inside.clone(),
            outside: terms[gap].clone(),
        }),
    }
}

/// Compares the largest term outside with the smallest term inside; the
/// latter is `g * x0^(t - deg g)` for some generator `g`.
fn segment_holds(j: &MonomialIdeal, t: u32, ord: &TermOrder) -> bool {
    let Some(max_out) = j.sous_escalier(t).into_iter().max_by(|a, b| ord.cmp_terms(a, b)) else {
        return true;
    };
    let min_in = j
        .gens()
        .iter()
        .filter(|g| g.degree() <= t)
        .map(|g| g.mul(&Term::var_power(j.n(), 0, t - g.degree())))
        .min_by(|a, b| ord.cmp_terms(a, b));
    min_in.is_none_or(|m| ord.cmp_terms(&m, &max_out).is_gt())
}

fn check_saturated_proper(j: &BorelIdeal) -> Result<AdmissiblePolynomial> {
    if !j.is_saturated() {
        return Err(Error::NotSaturated);
    }
    if j.is_zero() || j.is_unit() {
        return Err(Error::domain("classification needs a proper nonzero ideal"));
    }
    j.hilbert_polynomial()
}

/// Whether every minimal generator degree `s` takes the ord-greatest terms
/// of `T_s` outside the ideal generated in lower degrees.
pub fn is_gen_segment(j: &MonomialIdeal, ord: &TermOrder) -> bool {
    let mut degrees: Vec<u32> = j.gens().iter().map(Term::degree).collect();
    degrees.dedup();
    degrees.into_iter().all(|s| {
        let g: Vec<Term> = j.gens_of_degree(s);
        let lower: Vec<&Term> = j.gens().iter().filter(|x| x.degree() < s).collect();
        let free: Vec<Term> = terms_of_degree(j.n(), s, ord)
            .into_iter()
            .filter(|u| !lower.iter().any(|h| h.divides(u)))
            .collect();
        let top: HashSet<&Term> = free.iter().take(g.len()).collect();
        g.iter().all(|x| top.contains(x))
    })
}

/// Segment, hilb-segment, reg-segment and gen-segment flags of a saturated
/// Borel ideal.
pub fn classify(j: &BorelIdeal, ord: &TermOrder) -> Result<SegmentReport> {
    ord.check_ambient(j.n())?;
    let p = check_saturated_proper(j)?;
    let r = p.gotzmann_number();
    let reg = j.regularity()?;
    let top = (r as u32).max(reg) + 1;
    let witness = (0..=top).find_map(|t| is_segment_at(j, t, ord).err());
    Ok(SegmentReport {
        order: ord.clone(),
        is_segment: witness.is_none(),
        is_hilb_segment: segment_holds(j, r as u32, ord),
        is_reg_segment: segment_holds(j, reg, ord),
        is_gen_segment: is_gen_segment(j, ord),
        gotzmann: r,
        regularity: reg,
        witness,
    })
}

/// Terms `alpha, beta` outside and `gamma, delta` inside `J_t` with
/// `alpha * beta = gamma * delta`. Within each pair the canonically later
/// (revlex smaller) term comes first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionWitness {
    pub t: u32,
    #[serde(serialize_with = "as_string")]
    pub alpha: Term,
    #[serde(serialize_with = "as_string")]
    pub beta: Term,
    #[serde(serialize_with = "as_string")]
    pub gamma: Term,
    #[serde(serialize_with = "as_string")]
    pub delta: Term,
}

/// The default degree window `[initial degree, Gotzmann number]`.
pub fn default_witness_range(j: &BorelIdeal) -> Result<(u32, u32)> {
    let p = j.hilbert_polynomial()?;
    let lo = j.min_generator_degree().unwrap_or(0);
    Ok((lo, (p.gotzmann_number() as u32).max(lo)))
}

/// Search for a witness that `J` is not a segment ideal for any term order.
///
/// Scans degrees ascending, then pairs `(gamma, delta)` of `J_t` in canonical
/// order, then `alpha` in `N(J)_t`, and returns the first hit.
pub fn no_order_witness(j: &MonomialIdeal, t_range: (u32, u32)) -> Option<CriterionWitness> {
    for t in t_range.0..=t_range.1 {
        let inside = j.degree_slice(t);
        let outside = j.sous_escalier(t);
        for (a, delta) in inside.iter().enumerate() {
            for gamma in &inside[a..] {
                let s = gamma.mul(delta);
                for alpha in &outside {
                    let Some(beta) = s.div(alpha) else { continue };
                    if j.contains(&beta) {
                        continue;
                    }
                    let (alpha, beta) = if *alpha >= beta {
                        (alpha.clone(), beta)
                    } else {
                        (beta, alpha.clone())
                    };
                    return Some(CriterionWitness {
                        t,
                        alpha,
                        beta,
                        gamma: gamma.clone(),
                        delta: delta.clone(),
                    });
                }
            }
        }
    }
    None
}

fn check_degree_below(p: &AdmissiblePolynomial, n: usize) -> Result<()> {
    if p.degree().is_some_and(|d| d >= n) {
        return Err(Error::domain(format!(
            "polynomial {p} has degree >= {n}, no proper ideal in {} variables",
            n + 1
        )));
    }
    Ok(())
}

/// Size of the degree `r` slice of an ideal with Hilbert polynomial `p`.
fn slice_size(p: &AdmissiblePolynomial, n: usize, r: usize) -> Result<usize> {
    let total = binomial(n as i64 + r as i64, n as i64);
    let k = total - p.value_i128(r as i64);
    usize::try_from(k).map_err(|_| Error::domain(format!("p({r}) exceeds the number of terms")))
}

/// The saturated lex segment ideal `L(p)`.
pub fn lex_segment_ideal(p: &AdmissiblePolynomial, n: usize) -> Result<BorelIdeal> {
    check_degree_below(p, n)?;
    let r = p.gotzmann_number();
    let k = slice_size(p, n, r)?;
    let top: Vec<Term> = terms_of_degree(n, r as u32, &TermOrder::Lex).into_iter().take(k).collect();
    Ok(BorelIdeal::from_terms(n, top)?.saturate())
}

/// The saturated revlex segment ideal with constant Hilbert polynomial `d`:
/// generated by all but the `d` revlex-least terms of degree `d`.
pub fn revlex_segment_constant(d: u32, n: usize) -> Result<BorelIdeal> {
    if d == 0 || n == 0 {
        return Err(Error::domain("need d >= 1 and n >= 1"));
    }
    let tail: HashSet<Term> = revlex_tail(n, d, d as u64)?.into_iter().collect();
    let gens: Vec<Term> = all_terms(n, d).into_iter().filter(|u| !tail.contains(u)).collect();
    Ok(BorelIdeal::from_terms(n, gens)?.saturate())
}

/// The hilb-segment ideal for `p` under `ord`, if one exists.
///
/// Takes the ord-greatest `C(n+r, n) - p(r)` terms of degree `r`; when they
/// form a Borel set, the saturation of the ideal they generate is checked to
/// have that slice and polynomial `p`.
pub fn hilb_segment_for(p: &AdmissiblePolynomial, n: usize, ord: &TermOrder) -> Result<Option<BorelIdeal>> {
    check_degree_below(p, n)?;
    ord.check_ambient(n)?;
    let r = p.gotzmann_number();
    let k = slice_size(p, n, r)?;
    let top: Vec<Term> = terms_of_degree(n, r as u32, ord).into_iter().take(k).collect();
    let gen = MonomialIdeal::new(n, top.clone())?;
    if !gen.is_borel() {
        return Ok(None);
    }
    let sat = BorelIdeal::new(gen)?.saturate();
    let mut slice = sat.degree_slice(r as u32);
    let mut want = top;
    slice.sort();
    want.sort();
    if slice != want || &sat.hilbert_polynomial()? != p {
        return Ok(None);
    }
    Ok(Some(sat))
}

fn linear_parts(p: &AdmissiblePolynomial) -> Result<i128> {
    if p.degree() != Some(1) {
        return Err(Error::domain(format!("{p} is not linear")));
    }
    Ok(p.value_i128(1) - p.value_i128(0))
}

/// The least `j` with `C(j-1+n, n) <= p(j-1)` and `p(j+h) < C(j+h+n, n)` for
/// `h = 0..=r+n`, searched in `1..=r`. `j = 1` is only admitted for `n = 2`;
/// for larger `n` it would merely reproduce an extension of a smaller case.
pub fn find_jn(p: &AdmissiblePolynomial, n: usize) -> Result<Option<u32>> {
    linear_parts(p)?;
    if n < 2 {
        return Err(Error::domain("need n >= 2"));
    }
    let r = p.gotzmann_number() as i64;
    let n64 = n as i64;
    for j in 1..=r {
        if j == 1 && n != 2 {
            continue;
        }
        if binomial(j - 1 + n64, n64) > p.value_i128(j - 1) {
            continue;
        }
        if (0..=r + n64).all(|h| p.value_i128(j + h) < binomial(j + h + n64, n64)) {
            return Ok(Some(j as u32));
        }
    }
    Ok(None)
}

fn complement(n: usize, t: u32, keep: &[Term]) -> Vec<Term> {
    let set: HashSet<&Term> = keep.iter().collect();
    all_terms(n, t).into_iter().filter(|u| !set.contains(u)).collect()
}

/// `d` revlex-least terms of `terms` whose smallest variable is `x1` or larger.
fn least_eligible(terms: &[Term], d: usize) -> Option<Vec<Term>> {
    let mut eligible: Vec<Term> = terms
        .iter()
        .filter(|u| u.min_index().is_none_or(|m| m >= 1))
        .cloned()
        .collect();
    eligible.sort_by(|a, b| b.cmp(a));
    (eligible.len() >= d).then(|| eligible.into_iter().take(d).collect())
}

fn times_x0(terms: &[Term]) -> Vec<Term> {
    terms.iter().map(|u| u.mul_var(0)).collect()
}

/// The revlex gen-segment ideal `I(n)` built from `j(n)`.
pub fn gen_segment_revlex_jn(p: &AdmissiblePolynomial, n: usize) -> Result<BorelIdeal> {
    let d = linear_parts(p)? as usize;
    let j = find_jn(p, n)?.ok_or_else(|| Error::domain(format!("no j({n}) for {p}")))?;
    let pj = p.value_u64(j as i64)?;
    let nj = revlex_tail(n, j, pj)?;
    let tau = least_eligible(&nj, d)
        .ok_or_else(|| Error::Internal(format!("fewer than {d} eligible terms at j = {j}")))?;
    let mut next = times_x0(&nj);
    next.extend(tau.iter().map(|u| u.mul_var(1)));
    let mut gens = complement(n, j, &nj);
    gens.extend(complement(n, j + 1, &next));
    BorelIdeal::new(MonomialIdeal::new(n, minimalize(gens))?)
}

/// The revlex gen-segment ideal `J(n)` built from `l(n)`, when `l(n)` exists.
///
/// Requires `p(t) < C(t+n, n)` for `t = 1..=r+n`.
pub fn gen_segment_revlex_ln(p: &AdmissiblePolynomial, n: usize) -> Result<Option<BorelIdeal>> {
    let d = linear_parts(p)? as usize;
    if n < 2 {
        return Err(Error::domain("need n >= 2"));
    }
    let r = p.gotzmann_number() as i64;
    let n64 = n as i64;
    if let Some(t) = (1..=r + n64).find(|&t| p.value_i128(t) >= binomial(t + n64, n64)) {
        return Err(Error::domain(format!(
            "p({t}) >= C({t}+{n}, {n}); use the j(n) construction instead"
        )));
    }
    for l in 1..=r {
        let pl = p.value_i128(l);
        if pl < 1 {
            continue;
        }
        let lam = revlex_tail(n, l as u32, pl as u64)?;
        let count: usize = (1..n).map(|i| lambda(&lam, i)).sum();
        if count < d {
            continue;
        }
        let l = l as u32;
        let mut expansion = Vec::new();
        for i in 1..=n {
            expansion.extend(
                lam.iter()
                    .filter(|u| u.min_index().is_none_or(|m| m >= i))
                    .map(|u| u.mul_var(i)),
            );
        }
        let tau = least_eligible(&expansion, d)
            .ok_or_else(|| Error::Internal(format!("fewer than {d} eligible terms at l = {l}")))?;
        let mut m1 = times_x0(&lam);
        m1.extend(tau.iter().cloned());
        let mut m2 = times_x0(&m1);
        m2.extend(tau.iter().map(|u| u.mul_var(1)));
        let mut gens = complement(n, l, &lam);
        gens.extend(complement(n, l + 1, &m1));
        gens.extend(complement(n, l + 2, &m2));
        return Ok(Some(BorelIdeal::new(MonomialIdeal::new(n, minimalize(gens))?)?));
    }
    Ok(None)
}

/// `(I, x_{m+1}, ..., x_n)` for `I` over `x0..x_m`.
pub fn extend_by_variables(i: &BorelIdeal, n: usize) -> Result<BorelIdeal> {
    i.extend_by_variables(n)
}
