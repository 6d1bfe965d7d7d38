//! Groebner strata of monomial ideals, their embedding dimension at the
//! origin, and the singularity tests for points of Hilbert schemes.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideals::{BorelIdeal, MonomialIdeal};
use crate::monomials::{all_terms, Term, TermOrder};

pub const MAX_VARS: usize = 2000;
pub const MAX_PAIRS: usize = 100_000;

/// The coefficient `c_{alpha beta}` of `x^beta` in `F_alpha`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CoeffVar {
    #[serde(serialize_with = "as_string")]
    pub alpha: Term,
    #[serde(serialize_with = "as_string")]
    pub beta: Term,
}

fn as_string<T: std::fmt::Display, S: serde::Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// A polynomial in the coefficient variables with integer coefficients.
/// Monomials are sorted lists of variable indices (with repetition).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CPoly {
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl CPoly {
    pub fn var(i: u32) -> Self {
        CPoly {
            terms: BTreeMap::from([(vec![i], BigInt::one())]),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.terms
    }

    pub fn constant_term(&self) -> BigInt {
        self.terms.get(&Vec::new()).cloned().unwrap_or_default()
    }

    /// Degree-one part as `(variable, coefficient)` pairs.
    pub fn linear_part(&self) -> Vec<(u32, BigInt)> {
        self.terms
            .iter()
            .filter(|(m, _)| m.len() == 1)
            .map(|(m, c)| (m[0], c.clone()))
            .collect()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    fn add_scaled(&mut self, other: &CPoly, sign: i32, times_var: Option<u32>, max_deg: Option<usize>) {
        for (m, c) in &other.terms {
            let mut key = m.clone();
            if let Some(v) = times_var {
                let pos = key.partition_point(|&x| x <= v);
                key.insert(pos, v);
            }
            if max_deg.is_some_and(|d| key.len() > d) {
                continue;
            }
            let entry = self.terms.entry(key.clone()).or_default();
            if sign > 0 {
                *entry += c;
            } else {
                *entry -= c;
            }
            if entry.is_zero() {
                self.terms.remove(&key);
            }
        }
    }
}

impl std::fmt::Display for CPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if c.is_negative() {
                f.write_str(if i == 0 { "-" } else { " - " })?;
            } else if i > 0 {
                f.write_str(" + ")?;
            }
            let a = c.abs();
            let vars: Vec<String> = m.iter().map(|v| format!("c{v}")).collect();
            if m.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                f.write_str(&vars.join("*"))?;
            } else {
                write!(f, "{a}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Reduction strategy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Pairs ascending by `(lcm degree, pair index)`, reduce the ord-largest
    /// reducible monomial by the first dividing generator.
    #[default]
    Normal,
    /// Pairs in the opposite order, reduce the ord-smallest reducible
    /// monomial by the last dividing generator.
    Reverse,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct StratumConfig {
    /// Allow tails of degree below `deg(alpha)` (the non-homogeneous stratum).
    pub non_homogeneous: bool,
    /// Drop every coefficient monomial of degree above one during reduction.
    /// The linear part, and hence the embedding dimension, is unaffected.
    pub linear_only: bool,
    pub strategy: Strategy,
}

#[derive(Debug, Clone)]
pub struct Stratum {
    pub ideal: MonomialIdeal,
    pub order: TermOrder,
    pub vars: Vec<CoeffVar>,
    pub relations: Vec<CPoly>,
    pub linear_rank: usize,
    pub embedding_dimension: usize,
}

impl Stratum {
    /// Rows of the linear parts of the relations (zero rows dropped).
    pub fn linear_matrix(&self) -> Vec<Vec<BigInt>> {
        linear_matrix(&self.relations, self.vars.len())
    }
}

fn linear_matrix(relations: &[CPoly], ncols: usize) -> Vec<Vec<BigInt>> {
    relations
        .iter()
        .map(|r| {
            let mut row = vec![BigInt::zero(); ncols];
            for (v, c) in r.linear_part() {
                row[v as usize] = c;
            }
            row
        })
        .filter(|row| row.iter().any(|c| !c.is_zero()))
        .collect()
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
pub fn bareiss_rank(matrix: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = matrix.to_vec();
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let (top, rest) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = pivot_row[col].clone();
        for row in rest.iter_mut() {
            let factor = row[col].clone();
            for j in col + 1..cols {
                let v = &pivot * &row[j] - &factor * &pivot_row[j];
                let (q, r) = v.div_rem(&prev);
                debug_assert!(r.is_zero());
                row[j] = q;
            }
            row[col] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

type XPoly = BTreeMap<Term, CPoly>;

struct Engine<'a> {
    ideal: &'a MonomialIdeal,
    order: &'a TermOrder,
    tails: Vec<Vec<(Term, u32)>>,
    config: StratumConfig,
}

impl Engine<'_> {
    fn reducible(&self, x: &Term) -> bool {
        self.ideal.contains(x)
    }

    fn reduce(&self, mut s: XPoly) -> XPoly {
        let max_deg = self.config.linear_only.then_some(1);
        loop {
            let pick = s
                .keys()
                .filter(|m| self.reducible(m))
                .max_by(|a, b| match self.config.strategy {
                    Strategy::Normal => self.order.cmp_terms(a, b),
                    Strategy::Reverse => self.order.cmp_terms(b, a),
                })
                .cloned();
            let Some(m) = pick else { return s };
            let coef = s.remove(&m).expect("picked from keys");
            let gens = self.ideal.gens();
            let gi = match self.config.strategy {
                Strategy::Normal => gens.iter().position(|g| g.divides(&m)),
                Strategy::Reverse => gens.iter().rposition(|g| g.divides(&m)),
            }
            .expect("reducible monomial has a dividing generator");
            let quot = m.div(&gens[gi]).expect("divides");
            for (beta, var) in &self.tails[gi] {
                let target = quot.mul(beta);
                let entry = s.entry(target.clone()).or_default();
                entry.add_scaled(&coef, -1, Some(*var), max_deg);
                if entry.is_zero() {
                    s.remove(&target);
                }
            }
        }
    }

    fn s_poly(&self, a: usize, b: usize) -> XPoly {
        let gens = self.ideal.gens();
        let l = gens[a].lcm(&gens[b]);
        let qa = l.div(&gens[a]).expect("lcm");
        let qb = l.div(&gens[b]).expect("lcm");
        let mut s = XPoly::new();
        for (beta, var) in &self.tails[a] {
            s.entry(qa.mul(beta)).or_default().add_scaled(&CPoly::var(*var), 1, None, None);
        }
        for (beta, var) in &self.tails[b] {
            s.entry(qb.mul(beta)).or_default().add_scaled(&CPoly::var(*var), -1, None, None);
        }
        s.retain(|_, c| !c.is_zero());
        s
    }
}

/// Tail terms of `F_alpha`: terms outside `J` smaller than `alpha`, of the
/// same degree (or of degree at most `deg(alpha)` when non-homogeneous).
fn tails_of(j: &MonomialIdeal, ord: &TermOrder, alpha: &Term, non_homogeneous: bool) -> Vec<Term> {
    let d = alpha.degree();
    let lo = if non_homogeneous { 0 } else { d };
    let mut out: Vec<Term> = (lo..=d)
        .flat_map(|e| all_terms(j.n(), e))
        .filter(|b| !j.contains(b) && ord.cmp_terms(b, alpha).is_lt())
        .collect();
    out.sort_by(|a, b| ord.cmp_terms(b, a));
    out
}

/// Build the stratum of `J` under `ord`.
pub fn build_stratum(j: &MonomialIdeal, ord: &TermOrder, config: StratumConfig) -> Result<Stratum> {
    ord.check_ambient(j.n())?;
    if j.is_unit() {
        return Err(Error::domain("the unit ideal has no stratum"));
    }
    let gens = j.gens();
    let pairs = gens.len() * gens.len().saturating_sub(1) / 2;
    if pairs > MAX_PAIRS {
        return Err(Error::SizeGuard(format!(
            "{pairs} S-pairs exceed {MAX_PAIRS}; compute on a truncation (see truncation_hint)"
        )));
    }
    let mut vars = Vec::new();
    let mut tails = Vec::new();
    for g in gens {
        let mut t = Vec::new();
        for beta in tails_of(j, ord, g, config.non_homogeneous) {
            t.push((beta.clone(), vars.len() as u32));
            vars.push(CoeffVar { alpha: g.clone(), beta });
            if vars.len() > MAX_VARS {
                return Err(Error::SizeGuard(format!(
                    "more than {MAX_VARS} coefficient variables; compute on a truncation (see truncation_hint)"
                )));
            }
        }
        tails.push(t);
    }
    let engine = Engine {
        ideal: j,
        order: ord,
        tails,
        config,
    };
    let mut order: Vec<(u32, usize, usize)> = Vec::with_capacity(pairs);
    for a in 0..gens.len() {
        for b in a + 1..gens.len() {
            order.push((gens[a].lcm(&gens[b]).degree(), a, b));
        }
    }
    order.sort();
    if config.strategy == Strategy::Reverse {
        order.reverse();
    }
    let mut relations = Vec::new();
    for (_, a, b) in order {
        let rem = engine.reduce(engine.s_poly(a, b));
        relations.extend(rem.into_values().filter(|c| !c.is_zero()));
    }
    let rank = bareiss_rank(&linear_matrix(&relations, vars.len()));
    Ok(Stratum {
        ideal: j.clone(),
        order: ord.clone(),
        embedding_dimension: vars.len() - rank,
        vars,
        relations,
        linear_rank: rank,
    })
}

/// The homogeneous stratum with the default strategy.
pub fn build_homogeneous_stratum(j: &MonomialIdeal, ord: &TermOrder) -> Result<Stratum> {
    build_stratum(j, ord, StratumConfig::default())
}

pub fn embedding_dimension(st: &Stratum) -> usize {
    st.vars.len() - bareiss_rank(&st.linear_matrix())
}

/// `s`: the largest degree of a generator involving `x1` (0 when none).
pub fn truncation_hint(j: &BorelIdeal) -> u32 {
    j.gens()
        .iter()
        .filter(|g| g.n() >= 1 && g.exponent(1) > 0)
        .map(Term::degree)
        .max()
        .unwrap_or(0)
}

/// The truncation degree used for strata: `max(s, initial degree)`.
pub fn truncation_degree(j: &BorelIdeal) -> u32 {
    truncation_hint(j).max(j.min_generator_degree().unwrap_or(0))
}

fn constant_polynomial(j: &BorelIdeal) -> Result<u64> {
    let p = j.hilbert_polynomial()?;
    if p.degree().is_some_and(|d| d > 0) {
        return Err(Error::domain(format!("{j} has non-constant Hilbert polynomial {p}")));
    }
    p.value_u64(0)
}

/// `{ beta in N(J)_d : x1 * beta in J }` for `J` with Hilbert polynomial `d`.
pub fn script_b(j: &BorelIdeal) -> Result<Vec<Term>> {
    let d = constant_polynomial(j)?;
    if j.n() < 1 {
        return Ok(Vec::new());
    }
    Ok(j.sous_escalier(d as u32)
        .into_iter()
        .filter(|b| j.contains(&b.mul_var(1)))
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Certificate {
    Singular,
    Inconclusive,
}

/// Singular when `|G(J)| * |B| > n d`.
pub fn singularity_certificate(j: &BorelIdeal, n: usize, d: u64) -> Result<Certificate> {
    let product = j.gens().len() * script_b(j)?.len();
    Ok(if product as u64 > n as u64 * d {
        Certificate::Singular
    } else {
        Certificate::Inconclusive
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SingularityReport {
    pub generators: usize,
    pub script_b: usize,
    pub product: usize,
    pub nd: u64,
    pub certificate: Certificate,
    /// Embedding dimension, computed only when the certificate is inconclusive.
    pub embedding_dimension: Option<usize>,
    pub truncation: Option<u32>,
    /// `true`: singular; `false`: the embedding dimension equals `nd`.
    pub singular: bool,
}

/// The certificate, falling back to the embedding dimension of the stratum
/// of the truncation when inconclusive.
pub fn singularity_check(j: &BorelIdeal, ord: &TermOrder) -> Result<SingularityReport> {
    let d = constant_polynomial(j)?;
    let n = j.n();
    let b = script_b(j)?.len();
    let g = j.gens().len();
    let nd = n as u64 * d;
    let certificate = singularity_certificate(j, n, d)?;
    let mut report = SingularityReport {
        generators: g,
        script_b: b,
        product: g * b,
        nd,
        certificate,
        embedding_dimension: None,
        truncation: None,
        singular: certificate == Certificate::Singular,
    };
    if certificate == Certificate::Inconclusive {
        let m = truncation_degree(j);
        let config = StratumConfig {
            linear_only: true,
            ..Default::default()
        };
        let st = build_stratum(&j.truncate(m), ord, config)?;
        report.embedding_dimension = Some(st.embedding_dimension);
        report.truncation = Some(m);
        report.singular = st.embedding_dimension as u64 > nd;
    }
    Ok(report)
}
