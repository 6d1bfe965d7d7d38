//! Terms of `K[x0, ..., xn]`, elementary moves, the Borel partial order and
//! term orders.
//!
//! Variables are indexed `0..=n` with `x0` the smallest one, so every term
//! order considered here satisfies `x0 < x1 < ... < xn`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::binomial;
use crate::error::{Error, Result};

/// A power product `x0^a0 * x1^a1 * ... * xn^an`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Term {
    exps: Vec<u32>,
}

/// Direction of an elementary move.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Move {
    /// `e_j^+`: one unit of exponent goes from `x_j` to `x_{j+1}`.
    Up,
    /// `e_j^-`: one unit of exponent goes from `x_j` to `x_{j-1}`.
    Down,
}

impl Term {
    pub fn new(exps: Vec<u32>) -> Self {
        assert!(!exps.is_empty(), "a term needs at least one variable");
        Term { exps }
    }

    /// The constant term `1` in `n + 1` variables.
    pub fn one(n: usize) -> Self {
        Term {
            exps: vec![0; n + 1],
        }
    }

    /// `x_i^e` in `n + 1` variables.
    pub fn var_power(n: usize, i: usize, e: u32) -> Self {
        let mut exps = vec![0; n + 1];
        exps[i] = e;
        Term { exps }
    }

    pub fn var(n: usize, i: usize) -> Self {
        Self::var_power(n, i, 1)
    }

    /// Index of the largest variable of the ambient ring.
    pub fn n(&self) -> usize {
        self.exps.len() - 1
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Smallest index of a variable dividing the term; `None` for the constant term.
    pub fn min_index(&self) -> Option<usize> {
        self.exps.iter().position(|&e| e > 0)
    }

    /// Largest index of a variable dividing the term; `None` for the constant term.
    pub fn max_index(&self) -> Option<usize> {
        self.exps.iter().rposition(|&e| e > 0)
    }

    pub fn divides(&self, other: &Term) -> bool {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Term) -> Term {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Term {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    /// Multiply by a single variable.
    pub fn mul_var(&self, i: usize) -> Term {
        let mut exps = self.exps.clone();
        exps[i] += 1;
        Term { exps }
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Term) -> Option<Term> {
        if !other.divides(self) {
            return None;
        }
        Some(Term {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn lcm(&self, other: &Term) -> Term {
        Term {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    /// Exponent-vector sum; the product of the two terms.
    pub fn sum(&self, other: &Term) -> Term {
        self.mul(other)
    }

    /// Substitute `x_0 = ... = x_{k-1} = 1`.
    pub fn dehomogenize(&self, k: usize) -> Term {
        let mut exps = self.exps.clone();
        for e in exps.iter_mut().take(k) {
            *e = 0;
        }
        Term { exps }
    }

    /// The same term seen in `K[x0, ..., x_n]` for a larger `n`.
    pub fn embed(&self, n: usize) -> Term {
        assert!(n >= self.n());
        let mut exps = self.exps.clone();
        exps.resize(n + 1, 0);
        Term { exps }
    }

    /// `e_j^+` (shift to `x_{j+1}`), if applicable.
    pub fn move_up(&self, j: usize) -> Option<Term> {
        if j >= self.n() || self.exps[j] == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[j] -= 1;
        exps[j + 1] += 1;
        Some(Term { exps })
    }

    /// `e_j^-` (shift to `x_{j-1}`), if applicable.
    pub fn move_down(&self, j: usize) -> Option<Term> {
        if j == 0 || j > self.n() || self.exps[j] == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[j] -= 1;
        exps[j - 1] += 1;
        Some(Term { exps })
    }

    /// All terms reachable by a single `e_j^-` move.
    pub fn down_moves(&self) -> impl Iterator<Item = Term> + '_ {
        (1..=self.n()).filter_map(move |j| self.move_down(j))
    }

    /// All terms reachable by a single `e_j^+` move.
    pub fn up_moves(&self) -> impl Iterator<Item = Term> + '_ {
        (0..self.n()).filter_map(move |j| self.move_up(j))
    }

    /// Parse the textual form `x1^3*x2` (or `1`) as a term of `K[x0, ..., xn]`.
    pub fn parse(text: &str, n: usize) -> Result<Term> {
        let factors = parse_factors(text, 0)?;
        let mut exps = vec![0u32; n + 1];
        for (pos, idx, e) in factors {
            if idx > n {
                return Err(Error::Parse {
                    pos,
                    msg: format!("variable x{idx} outside x0..x{n}"),
                });
            }
            exps[idx] += e;
        }
        Ok(Term { exps })
    }
}

/// Parse `x<i>[^e]*...` or `1`, returning `(position, index, exponent)` per factor.
/// `offset` is added to reported positions.
pub(crate) fn parse_factors(text: &str, offset: usize) -> Result<Vec<(usize, usize, u32)>> {
    let chars: Vec<(usize, char)> = text
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .map(|(p, c)| (p + offset, c))
        .collect();
    let end = offset + text.len();
    if chars.is_empty() {
        return Err(Error::Parse {
            pos: end,
            msg: "empty term".into(),
        });
    }
    if chars.len() == 1 && chars[0].1 == '1' {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut i = 0;
    let number = |i: &mut usize| -> Option<(usize, u64)> {
        let start = *i;
        let mut v: u64 = 0;
        while *i < chars.len() && chars[*i].1.is_ascii_digit() {
            v = v.checked_mul(10)?.checked_add(chars[*i].1 as u64 - '0' as u64)?;
            *i += 1;
        }
        (*i > start).then_some((chars[start].0, v))
    };
    loop {
        let pos = chars.get(i).map_or(end, |c| c.0);
        if chars.get(i).map(|c| c.1) != Some('x') {
            return Err(Error::Parse {
                pos,
                msg: "expected a variable `x<index>`".into(),
            });
        }
        i += 1;
        let (ipos, idx) = number(&mut i).ok_or_else(|| Error::Parse {
            pos: chars.get(i).map_or(end, |c| c.0),
            msg: "expected a variable index".into(),
        })?;
        let idx = usize::try_from(idx).map_err(|_| Error::Parse {
            pos: ipos,
            msg: "variable index too large".into(),
        })?;
        let mut e = 1u32;
        if chars.get(i).map(|c| c.1) == Some('^') {
            i += 1;
            let (epos, v) = number(&mut i).ok_or_else(|| Error::Parse {
                pos: chars.get(i).map_or(end, |c| c.0),
                msg: "expected an exponent".into(),
            })?;
            if v == 0 || v > u32::MAX as u64 {
                return Err(Error::Parse {
                    pos: epos,
                    msg: "exponent must be a positive integer".into(),
                });
            }
            e = v as u32;
        }
        out.push((pos, idx, e));
        match chars.get(i) {
            None => return Ok(out),
            Some((_, '*')) => i += 1,
            Some(&(p, c)) => {
                return Err(Error::Parse {
                    pos: p,
                    msg: format!("unexpected character `{c}`"),
                })
            }
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Canonical order: ambient size, then degree ascending, then revlex descending.
///
/// This is the order in which generators and term sets are listed everywhere.
impl Ord for Term {
    fn cmp(&self, other: &Self) -> Ordering {
        self.exps
            .len()
            .cmp(&other.exps.len())
            .then_with(|| self.degree().cmp(&other.degree()))
            .then_with(|| revlex_same_degree(other, self))
    }
}

impl PartialOrd for Term {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn lex_same_degree(a: &Term, b: &Term) -> Ordering {
    for (x, y) in a.exps.iter().zip(&b.exps).rev() {
        if x != y {
            return x.cmp(y);
        }
    }
    Ordering::Equal
}

fn revlex_same_degree(a: &Term, b: &Term) -> Ordering {
    for (x, y) in a.exps.iter().zip(&b.exps) {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

/// A term order on `K[x0, ..., xn]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TermOrder {
    /// Graded lexicographic order.
    Lex,
    /// Graded reverse lexicographic order.
    RevLex,
    /// Weight first, ties broken by graded lex. `weights[i]` is the weight of `x_i`.
    Weighted(Vec<u32>),
}

impl TermOrder {
    /// A weighted order from weights listed from the largest variable `x_n`
    /// down to `x_0`, the orientation used by the textual form `w:4,2,1`.
    pub fn weighted_from_top(weights: &[u32]) -> Result<TermOrder> {
        let mut w: Vec<u32> = weights.to_vec();
        w.reverse();
        TermOrder::weighted(w)
    }

    /// A weighted order with `weights[i]` attached to `x_i`.
    ///
    /// Weights must be positive and non-decreasing in the variable index so
    /// that `x0 < x1 < ... < xn` still holds.
    pub fn weighted(weights: Vec<u32>) -> Result<TermOrder> {
        if weights.is_empty() || weights.contains(&0) {
            return Err(Error::InvalidOrder("weights must be positive".into()));
        }
        if weights.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidOrder(
                "weights must not decrease from x0 to xn".into(),
            ));
        }
        Ok(TermOrder::Weighted(weights))
    }

    fn weight(w: &[u32], t: &Term) -> u64 {
        w.iter()
            .zip(t.exps())
            .map(|(&a, &b)| a as u64 * b as u64)
            .sum()
    }

    /// Compare two terms of the same ambient ring.
    pub fn compare(&self, a: &Term, b: &Term) -> Result<Ordering> {
        if a.n() != b.n() {
            return Err(Error::Dimension {
                expected: a.n() + 1,
                found: b.n() + 1,
            });
        }
        if let TermOrder::Weighted(w) = self {
            if w.len() != a.n() + 1 {
                return Err(Error::Dimension {
                    expected: w.len(),
                    found: a.n() + 1,
                });
            }
        }
        Ok(self.cmp_terms(a, b))
    }

    /// Unchecked comparison; callers guarantee matching ambient rings.
    pub fn cmp_terms(&self, a: &Term, b: &Term) -> Ordering {
        match self {
            TermOrder::Lex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| lex_same_degree(a, b)),
            TermOrder::RevLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| revlex_same_degree(a, b)),
            TermOrder::Weighted(w) => Self::weight(w, a)
                .cmp(&Self::weight(w, b))
                .then_with(|| a.degree().cmp(&b.degree()))
                .then_with(|| lex_same_degree(a, b)),
        }
    }

    /// Sort descending (greatest first).
    pub fn sort_desc(&self, terms: &mut [Term]) {
        terms.sort_by(|a, b| self.cmp_terms(b, a));
    }

    /// Check that the order is usable in `K[x0, ..., xn]`.
    pub fn check_ambient(&self, n: usize) -> Result<()> {
        match self {
            TermOrder::Weighted(w) if w.len() != n + 1 => Err(Error::Dimension {
                expected: n + 1,
                found: w.len(),
            }),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermOrder::Lex => f.write_str("lex"),
            TermOrder::RevLex => f.write_str("revlex"),
            TermOrder::Weighted(w) => {
                let parts: Vec<String> = w.iter().rev().map(|x| x.to_string()).collect();
                write!(f, "w:{}", parts.join(","))
            }
        }
    }
}

impl FromStr for TermOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "lex" => Ok(TermOrder::Lex),
            "revlex" => Ok(TermOrder::RevLex),
            _ => {
                let body = s
                    .strip_prefix("w:")
                    .ok_or_else(|| Error::InvalidOrder(format!("unknown order `{s}`")))?;
                let body = body.trim().trim_start_matches('(').trim_end_matches(')');
                let weights = body
                    .split(',')
                    .map(|x| x.trim().parse::<u32>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|e| Error::InvalidOrder(format!("bad weight list `{body}`: {e}")))?;
                TermOrder::weighted_from_top(&weights)
            }
        }
    }
}

/// Apply `e_j^+` or `e_j^-` to `t`.
pub fn elementary_move(t: &Term, j: usize, dir: Move) -> Result<Term> {
    let (res, sign) = match dir {
        Move::Up => (t.move_up(j), '+'),
        Move::Down => (t.move_down(j), '-'),
    };
    res.ok_or_else(|| Error::Move {
        term: t.to_string(),
        j,
        sign,
    })
}

/// `a <=_B b`: `a` is reachable from `b` by `e_j^-` moves.
///
/// Uses the suffix-sum test `sum_{j>=i} a_j <= sum_{j>=i} b_j` for all `i`.
pub fn borel_leq(a: &Term, b: &Term) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::Dimension {
            expected: a.n() + 1,
            found: b.n() + 1,
        });
    }
    if a.degree() != b.degree() {
        return Err(Error::Incomparable {
            a: a.to_string(),
            b: b.to_string(),
        });
    }
    let (mut sa, mut sb) = (0u32, 0u32);
    for i in (0..=a.n()).rev() {
        sa += a.exps[i];
        sb += b.exps[i];
        if sa > sb {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All terms of degree `t` in `K[x0, ..., xn]`, in no particular order.
pub fn all_terms(n: usize, t: u32) -> Vec<Term> {
    fn rec(i: usize, n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Term>) {
        if i == n {
            cur[n] = left;
            out.push(Term { exps: cur.clone() });
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(i + 1, n, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::with_capacity(binomial(n as i64 + t as i64, t as i64) as usize);
    let mut cur = vec![0; n + 1];
    rec(0, n, t, &mut cur, &mut out);
    out
}

/// All `C(n+t, t)` terms of degree `t`, sorted descending under `ord`.
pub fn terms_of_degree(n: usize, t: u32, ord: &TermOrder) -> Vec<Term> {
    let mut v = all_terms(n, t);
    ord.sort_desc(&mut v);
    v
}

/// The `omega` revlex-smallest terms of degree `j`, listed in ascending revlex order.
///
/// Built blockwise from the decomposition of `T_j` by minimal variable: the
/// terms with `min = i` form the block `x_i * {tau in T_{j-1} : min(tau) >= i}`
/// of size `C(j-1+n-i, j-1)`, and blocks increase with `i`. Full blocks are
/// taken while they fit; the last one is filled recursively.
pub fn revlex_tail(n: usize, j: u32, omega: u64) -> Result<Vec<Term>> {
    let total = binomial(n as i64 + j as i64, j as i64) as u64;
    if omega < 1 || omega + 1 > total {
        return Err(Error::Range {
            value: omega,
            min: 1,
            max: total.saturating_sub(1),
        });
    }
    Ok(revlex_smallest(n, 0, j, omega))
}

/// `count` revlex-smallest terms of degree `deg` in the variables `x_start..x_n`.
fn revlex_smallest(n: usize, start: usize, deg: u32, count: u64) -> Vec<Term> {
    if count == 0 {
        return Vec::new();
    }
    if deg == 0 || start == n {
        debug_assert_eq!(count, 1);
        return vec![Term::var_power(n, start, deg)];
    }
    let mut out = Vec::with_capacity(count as usize);
    let mut remaining = count;
    for i in start..=n {
        let block = binomial((deg - 1) as i64 + (n - i) as i64, (deg - 1) as i64) as u64;
        let take = remaining.min(block);
        out.extend(
            revlex_smallest(n, i, deg - 1, take)
                .into_iter()
                .map(|t| t.mul_var(i)),
        );
        remaining -= take;
        if remaining == 0 {
            break;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{HashSet, VecDeque};

    fn t(s: &str, n: usize) -> Term {
        Term::parse(s, n).unwrap()
    }

    /// Reachability over `e_j^-` moves by breadth-first search.
    fn bfs_leq(a: &Term, b: &Term) -> bool {
        let mut seen = HashSet::new();
        let mut queue = VecDeque::from([b.clone()]);
        while let Some(u) = queue.pop_front() {
            if &u == a {
                return true;
            }
            for v in u.down_moves() {
                if seen.insert(v.clone()) {
                    queue.push_back(v);
                }
            }
        }
        false
    }

    #[test]
    fn parse_and_display() {
        let x = t("x1^3*x2", 2);
        assert_eq!(x.exps(), &[0, 3, 1]);
        assert_eq!(x.to_string(), "x1^3*x2");
        assert_eq!(t(" x2 * x1 ^ 3 ", 2), x);
        assert_eq!(t("1", 3), Term::one(3));
        assert_eq!(Term::one(3).to_string(), "1");
        assert!(matches!(Term::parse("x3", 2), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(Term::parse("x1^0", 2), Err(Error::Parse { pos: 3, .. })));
        assert!(matches!(Term::parse("x1+x2", 2), Err(Error::Parse { pos: 2, .. })));
        assert!(Term::parse("", 2).is_err());
    }

    #[test]
    fn constant_term_has_no_extreme_index() {
        let one = Term::one(2);
        assert_eq!(one.degree(), 0);
        assert_eq!(one.min_index(), None);
        assert_eq!(one.max_index(), None);
        let x = t("x0*x2^2", 2);
        assert_eq!(x.min_index(), Some(0));
        assert_eq!(x.max_index(), Some(2));
    }

    #[test]
    fn compare_examples() {
        let a = t("x0*x1*x2", 2);
        let b = t("x1^3", 2);
        assert_eq!(TermOrder::RevLex.compare(&a, &b).unwrap(), Ordering::Less);
        for ord in [TermOrder::Lex, TermOrder::RevLex] {
            assert_eq!(ord.compare(&a, &a).unwrap(), Ordering::Equal);
        }
        let c = t("x1^2", 2);
        let d = t("x0*x2", 2);
        assert_eq!(TermOrder::Lex.compare(&c, &d).unwrap(), Ordering::Less);
        assert!(matches!(
            TermOrder::Lex.compare(&c, &Term::one(3)),
            Err(Error::Dimension { .. })
        ));
        // graded: lower degree is smaller
        assert_eq!(
            TermOrder::RevLex.compare(&t("x2^3", 2), &t("x0^4", 2)).unwrap(),
            Ordering::Less
        );
    }

    #[test]
    fn weighted_order_parsing_orientation() {
        let w: TermOrder = "w:4,2,1".parse().unwrap();
        assert_eq!(w, TermOrder::Weighted(vec![1, 2, 4]));
        assert_eq!(w.to_string(), "w:4,2,1");
        assert_eq!("w:(5,2,1)".parse::<TermOrder>().unwrap(), TermOrder::Weighted(vec![1, 2, 5]));
        assert!("w:1,2,4".parse::<TermOrder>().is_err());
        assert!("w:4,0,1".parse::<TermOrder>().is_err());
        assert!("grevlex".parse::<TermOrder>().is_err());
        // x1^2 (weight 4) vs x0*x2 (weight 5)
        assert_eq!(
            w.compare(&t("x1^2", 2), &t("x0*x2", 2)).unwrap(),
            Ordering::Less
        );
        assert!(w.compare(&Term::one(3), &Term::one(3)).is_err());
    }

    #[test]
    fn elementary_moves() {
        assert_eq!(elementary_move(&t("x1*x2", 2), 1, Move::Down).unwrap(), t("x0*x2", 2));
        assert_eq!(elementary_move(&t("x0^2", 2), 0, Move::Up).unwrap(), t("x0*x1", 2));
        assert_eq!(elementary_move(&t("x2^3", 2), 2, Move::Down).unwrap(), t("x1*x2^2", 2));
        assert!(matches!(
            elementary_move(&t("x2^3", 2), 2, Move::Up),
            Err(Error::Move { j: 2, sign: '+', .. })
        ));
        assert!(elementary_move(&t("x1", 2), 0, Move::Down).is_err());
        assert!(elementary_move(&t("x1", 2), 2, Move::Down).is_err());
    }

    #[test]
    fn borel_leq_examples() {
        assert!(borel_leq(&t("x0*x2", 2), &t("x1*x2", 2)).unwrap());
        let x = t("x0*x1*x2", 2);
        assert!(borel_leq(&x, &x).unwrap());
        let y = t("x1^3", 2);
        assert!(!borel_leq(&x, &y).unwrap());
        assert!(!borel_leq(&y, &x).unwrap());
        assert!(!bfs_leq(&x, &y) && !bfs_leq(&y, &x));
        assert!(matches!(
            borel_leq(&t("x1", 2), &t("x1^2", 2)),
            Err(Error::Incomparable { .. })
        ));
    }

    #[test]
    fn borel_leq_agrees_with_bfs() {
        for n in 0..=3 {
            for d in 0..=5 {
                let ts = all_terms(n, d);
                for a in &ts {
                    for b in &ts {
                        assert_eq!(borel_leq(a, b).unwrap(), bfs_leq(a, b), "{a} vs {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn orders_refine_borel_order() {
        for n in 0..=3usize {
            let mut orders = vec![TermOrder::Lex, TermOrder::RevLex];
            orders.push(TermOrder::weighted((1..=n as u32 + 1).collect()).unwrap());
            orders.push(TermOrder::weighted((0..=n as u32).map(|i| 1 << i).collect()).unwrap());
            for d in 0..=6 {
                let ts = all_terms(n, d);
                for ord in &orders {
                    for a in &ts {
                        for b in &ts {
                            if a != b && borel_leq(a, b).unwrap() {
                                assert_eq!(ord.cmp_terms(a, b), Ordering::Less, "{ord}: {a} {b}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn terms_of_degree_examples() {
        let v = terms_of_degree(1, 2, &TermOrder::Lex);
        let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        assert_eq!(s, ["x1^2", "x0*x1", "x0^2"]);
        assert_eq!(terms_of_degree(2, 0, &TermOrder::RevLex), vec![Term::one(2)]);
        assert_eq!(terms_of_degree(2, 3, &TermOrder::RevLex).len(), 10);
    }

    #[test]
    fn revlex_tail_examples() {
        assert_eq!(revlex_tail(2, 1, 1).unwrap(), vec![t("x0", 2)]);
        let got: HashSet<Term> = revlex_tail(2, 2, 4).unwrap().into_iter().collect();
        let want: HashSet<Term> = ["x0^2", "x0*x1", "x1^2", "x0*x2"]
            .iter()
            .map(|s| t(s, 2))
            .collect();
        assert_eq!(got, want);
        let all = revlex_tail(3, 3, 19).unwrap();
        assert!(!all.contains(&t("x3^3", 3)));
        assert!(matches!(revlex_tail(2, 2, 6), Err(Error::Range { .. })));
        assert!(matches!(revlex_tail(2, 2, 0), Err(Error::Range { .. })));
    }

    #[test]
    fn revlex_tail_agrees_with_sorting() {
        for n in 0..=3 {
            for j in 1..=5 {
                let mut asc = terms_of_degree(n, j, &TermOrder::RevLex);
                asc.reverse();
                for omega in 1..asc.len() as u64 {
                    assert_eq!(revlex_tail(n, j, omega).unwrap(), asc[..omega as usize]);
                }
            }
        }
    }

    #[test]
    fn degree_decompositions() {
        for n in 1..=3usize {
            for j in 1..=5u32 {
                // lex: T_j = disjoint union of T(n)_{j-i} * x_n^i, increasing in i
                let mut lex_asc = terms_of_degree(n, j, &TermOrder::Lex);
                lex_asc.reverse();
                let mut concat = Vec::new();
                for i in 0..=j {
                    let mut lower = terms_of_degree(n - 1, j - i, &TermOrder::Lex);
                    lower.reverse();
                    concat.extend(lower.into_iter().map(|x| x.embed(n).mul(&Term::var_power(n, n, i))));
                }
                assert_eq!(lex_asc, concat);

                // revlex: T_j = disjoint union of x_i * {tau in T_{j-1} : min(tau) >= i}
                let mut rl_asc = terms_of_degree(n, j, &TermOrder::RevLex);
                rl_asc.reverse();
                let mut prev = terms_of_degree(n, j - 1, &TermOrder::RevLex);
                prev.reverse();
                let mut concat = Vec::new();
                for i in 0..=n {
                    concat.extend(
                        prev.iter()
                            .filter(|x| x.min_index().is_none_or(|m| m >= i))
                            .map(|x| x.mul_var(i)),
                    );
                }
                assert_eq!(rl_asc, concat);
            }
        }
    }

    #[test]
    fn canonical_order_is_degree_then_revlex_desc() {
        let mut v = [t("x1^2", 2), t("x2", 2), t("x1*x2", 2), t("x2^2", 2)];
        v.sort();
        let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        assert_eq!(s, ["x2", "x2^2", "x1*x2", "x1^2"]);
    }
}
