//! Enumeration of all saturated Borel ideals with a given Hilbert polynomial,
//! by recursion on the number of variables.
//!
//! Ideals for `delta(p)` in one variable fewer are lifted by prepending a new
//! smallest variable; the lifted ideal has polynomial `p - q` for a constant
//! `q >= 0`, and `q` removals of `x0`-divisible Borel-minimal terms from the
//! degree `r` slice restore `p`.

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::binomial;
use crate::error::{Error, Result};
use crate::ideals::{BorelIdeal, MonomialIdeal};
use crate::monomials::{all_terms, Term};
use crate::polynomials::{q_prime, AdmissiblePolynomial};

/// Largest `C(n+r, r)` accepted by the brute-force oracle.
pub const BRUTE_FORCE_LIMIT: i128 = 300;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationResult {
    pub polynomial: AdmissiblePolynomial,
    pub n: usize,
    pub gotzmann: usize,
    pub ideals: Vec<BorelIdeal>,
}

impl Serialize for EnumerationResult {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out<'a> {
            polynomial: String,
            n: usize,
            gotzmann: usize,
            count: usize,
            ideals: &'a [BorelIdeal],
        }
        Out {
            polynomial: self.polynomial.to_string(),
            n: self.n,
            gotzmann: self.gotzmann,
            count: self.ideals.len(),
            ideals: &self.ideals,
        }
        .serialize(s)
    }
}

/// One lift performed during the recursion, kept for diagnostics and tests.
#[derive(Debug, Clone)]
pub struct LiftRecord {
    /// `n - k`: the lifted ideal lives in `K[x_k, ..., x_n]`, `n - k + 1` variables.
    pub nvars: usize,
    /// Polynomial targeted at this level.
    pub polynomial: AdmissiblePolynomial,
    pub lifted: BorelIdeal,
    pub q_bar: i128,
    pub q_prime: i128,
}

/// Lift `J` (saturated, polynomial `delta(p)`) by one new smallest variable
/// and return the gap `q = p(r) - |N(I)_r|`.
pub fn lift_and_gap(j: &BorelIdeal, r: usize, p: &AdmissiblePolynomial) -> (BorelIdeal, i128) {
    let lifted = j.saturate().shift_up();
    let q = p.value_i128(r as i64) - lifted.hilbert_function(r as u32) as i128;
    (lifted, q)
}

/// Borel-minimal terms of `T_r \ N` divisible by `x0`, where `N` is closed
/// under `e_j^-` moves. Returned in descending canonical order.
fn eligible(n: usize, r: u32, outside: &HashSet<Term>) -> Vec<Term> {
    let mut cands: BTreeSet<Term> = BTreeSet::new();
    let bottom = Term::var_power(n, 0, r);
    if !outside.contains(&bottom) {
        cands.insert(bottom);
    }
    for v in outside {
        for u in v.up_moves() {
            if u.exponent(0) > 0
                && !outside.contains(&u)
                && u.down_moves().all(|w| outside.contains(&w))
            {
                cands.insert(u);
            }
        }
    }
    cands.into_iter().rev().collect()
}

/// The `x0`-divisible Borel-minimal terms of `I_r`, the removal candidates.
pub fn removal_candidates(i: &MonomialIdeal, r: u32) -> Vec<Term> {
    let outside: HashSet<Term> = i.sous_escalier(r).into_iter().collect();
    eligible(i.n(), r, &outside)
}

/// Saturation of the ideal generated by `T_r \ N`.
fn saturate_complement(n: usize, r: u32, outside: &BTreeSet<Term>) -> BorelIdeal {
    let gens: Vec<Term> = all_terms(n, r)
        .into_iter()
        .filter(|u| !outside.contains(u))
        .map(|u| u.dehomogenize(1))
        .collect();
    BorelIdeal::new_unchecked(MonomialIdeal::new(n, gens).expect("matching ambient"))
}

/// All saturated ideals reachable from `I` by `q` successive removals of an
/// `x0`-divisible Borel-minimal term of the degree `r` slice.
pub fn remove(i: &BorelIdeal, q: usize, r: usize) -> Vec<BorelIdeal> {
    let n = i.n();
    let r = r as u32;
    let start: BTreeSet<Term> = i.sous_escalier(r).into_iter().collect();
    let mut level: BTreeSet<BTreeSet<Term>> = BTreeSet::from([start]);
    for _ in 0..q {
        let mut next = BTreeSet::new();
        for outside in &level {
            let set: HashSet<Term> = outside.iter().cloned().collect();
            for u in eligible(n, r, &set) {
                let mut grown = outside.clone();
                grown.insert(u);
                next.insert(grown);
            }
        }
        level = next;
        if level.is_empty() {
            break;
        }
    }
    let found: BTreeSet<BorelIdeal> = level.iter().map(|o| saturate_complement(n, r, o)).collect();
    found.into_iter().collect()
}

fn check_input(n: usize, p: &AdmissiblePolynomial) -> Result<()> {
    if p.degree().is_some_and(|d| d >= n) {
        return Err(Error::domain(format!(
            "polynomial {p} has degree >= {n}: no saturated proper Borel ideal in {} variables",
            n + 1
        )));
    }
    Ok(())
}

fn generate(
    m: usize,
    p: &AdmissiblePolynomial,
    r: usize,
    trace: bool,
) -> Result<(Vec<BorelIdeal>, Vec<LiftRecord>)> {
    if p.is_zero() {
        return Ok((vec![BorelIdeal::new_unchecked(MonomialIdeal::unit(m))], Vec::new()));
    }
    check_input(m, p)?;
    let dp = p.delta()?;
    let (lower, mut records) = generate(m - 1, &dp, r, trace)?;
    let per_lift: Vec<(Vec<BorelIdeal>, Option<LiftRecord>)> = lower
        .par_iter()
        .map(|j| {
            let (lifted, q) = lift_and_gap(j, r, p);
            let rec = trace.then(|| LiftRecord {
                nvars: m,
                polynomial: p.clone(),
                lifted: lifted.clone(),
                q_bar: q,
                q_prime: i128::try_from(q_prime(r as u32, m as u32, p)).unwrap_or(i128::MAX),
            });
            let found = if q < 0 { Vec::new() } else { remove(&lifted, q as usize, r) };
            (found, rec)
        })
        .collect();
    let mut all = BTreeSet::new();
    for (found, rec) in per_lift {
        all.extend(found);
        records.extend(rec);
    }
    Ok((all.into_iter().collect(), records))
}

/// All saturated Borel ideals of `K[x0, ..., xn]` with Hilbert polynomial `p`,
/// deduplicated and in canonical order.
pub fn borel_generator(n: usize, p: &AdmissiblePolynomial) -> Result<EnumerationResult> {
    let r = p.gotzmann_number();
    let (ideals, _) = generate(n, p, r, false)?;
    Ok(EnumerationResult {
        polynomial: p.clone(),
        n,
        gotzmann: r,
        ideals,
    })
}

/// Like [`borel_generator`], also returning every lift made on the way.
pub fn borel_generator_traced(n: usize, p: &AdmissiblePolynomial) -> Result<(EnumerationResult, Vec<LiftRecord>)> {
    let r = p.gotzmann_number();
    let (ideals, records) = generate(n, p, r, true)?;
    Ok((
        EnumerationResult {
            polynomial: p.clone(),
            n,
            gotzmann: r,
            ideals,
        },
        records,
    ))
}

/// [`borel_generator`] on a dedicated pool of `jobs` worker threads.
pub fn borel_generator_with_jobs(n: usize, p: &AdmissiblePolynomial, jobs: usize) -> Result<EnumerationResult> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Internal(e.to_string()))?;
    pool.install(|| borel_generator(n, p))
}

/// Test oracle: every subset `N` of `T_r` of size `p(r)` closed under `e_j^-`
/// moves, kept when the ideal generated by its complement has polynomial `p`.
pub fn brute_force_enumeration(n: usize, p: &AdmissiblePolynomial) -> Result<Vec<BorelIdeal>> {
    check_input(n, p)?;
    if p.is_zero() {
        return Ok(vec![BorelIdeal::new_unchecked(MonomialIdeal::unit(n))]);
    }
    let r = p.gotzmann_number();
    let total = binomial(n as i64 + r as i64, r as i64);
    if total > BRUTE_FORCE_LIMIT {
        return Err(Error::SizeGuard(format!(
            "brute force over C({}, {r}) = {total} terms exceeds {BRUTE_FORCE_LIMIT}",
            n + r
        )));
    }
    let target = p.value_u64(r as i64)? as usize;
    // ascending revlex refines the Borel order, so down-moves come first
    let mut terms = all_terms(n, r as u32);
    terms.sort_by(|a, b| b.cmp(a));
    let index = |t: &Term| terms.iter().position(|u| u == t).unwrap();
    let downs: Vec<Vec<usize>> = terms.iter().map(|t| t.down_moves().map(|d| index(&d)).collect()).collect();

    fn search(
        i: usize,
        chosen: &mut Vec<bool>,
        count: usize,
        target: usize,
        downs: &[Vec<usize>],
        out: &mut Vec<Vec<bool>>,
    ) {
        if count == target {
            out.push(chosen.clone());
            return;
        }
        if i == downs.len() || downs.len() - i < target - count {
            return;
        }
        if downs[i].iter().all(|&d| chosen[d]) {
            chosen[i] = true;
            search(i + 1, chosen, count + 1, target, downs, out);
            chosen[i] = false;
        }
        search(i + 1, chosen, count, target, downs, out);
    }

    let mut sets = Vec::new();
    search(0, &mut vec![false; terms.len()], 0, target, &downs, &mut sets);
    let mut found = BTreeSet::new();
    for chosen in sets {
        let gens: Vec<Term> = terms
            .iter()
            .zip(&chosen)
            .filter(|(_, &c)| !c)
            .map(|(t, _)| t.clone())
            .collect();
        let j = BorelIdeal::from_terms(n, gens)?;
        if &j.hilbert_polynomial()? == p {
            found.insert(j.saturate());
        }
    }
    Ok(found.into_iter().collect())
}
