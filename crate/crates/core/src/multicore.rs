//! Multipartitions, multipartition data, contents, the weight function,
//! and the core tests.
//!
//! A datum `(s | c_1, ..., c_l)` assigns the node `(a, b, k)` the residue
//! `b - a + c_k (mod s)` (a plain integer when `s = 0`). A multipartition
//! is an `(s|c)`-core when no other multipartition shares its residue
//! content; for `s = 1` the convention is that the empty multipartition is
//! the only core. Membership reduces to one beta-set sandwich per
//! component pair, which is what `is_core` computes; `is_core_bruteforce`
//! is the content-uniqueness definition kept as an independent oracle, and
//! the weight function vanishes exactly on cores.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::beta::{BetaSpec, ShiftedBetaSet};
use crate::error::{Error, Result};
use crate::partitions::{partitions_of, Content, Partition, ResidueClass};

/// An l-tuple of partitions, l >= 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Multipartition {
    components: Vec<Partition>,
}

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::Precondition(
                "multipartition needs at least one component".into(),
            ));
        }
        Ok(Multipartition { components })
    }

    pub fn empty(level: usize) -> Self {
        Multipartition {
            components: vec![Partition::empty(); level.max(1)],
        }
    }

    pub fn level(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn component(&self, k: usize) -> &Partition {
        &self.components[k]
    }

    pub fn size(&self) -> u64 {
        self.components.iter().map(Partition::size).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.components.iter().all(Partition::is_empty)
    }
}

impl Ord for Multipartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.components.cmp(&other.components))
    }
}

impl PartialOrd for Multipartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Multipartition {
    type Err = Error;

    /// Parses components joined by `|`, e.g. `[2]|[4,1,1]|[1,1]`.
    fn from_str(s: &str) -> Result<Self> {
        let components = s
            .split('|')
            .map(|tok| tok.parse::<Partition>())
            .collect::<Result<Vec<_>>>()?;
        Multipartition::new(components)
    }
}

/// A multipartition datum: a modulus `s >= 0` and a charge vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Datum {
    modulus: u64,
    charges: Vec<i64>,
}

impl Datum {
    pub fn new(modulus: u64, charges: Vec<i64>) -> Result<Self> {
        if charges.is_empty() {
            return Err(Error::Precondition("datum needs at least one charge".into()));
        }
        Ok(Datum { modulus, charges })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn charges(&self) -> &[i64] {
        &self.charges
    }

    pub fn charge(&self, k: usize) -> i64 {
        self.charges[k]
    }

    pub fn level(&self) -> usize {
        self.charges.len()
    }
}

impl fmt::Display for Datum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.modulus)?;
        for (i, c) in self.charges.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for Datum {
    type Err = Error;

    /// Parses `s:c1,c2,...`, e.g. `4:0,2,1`; negative charges such as
    /// `0:-1,2` are allowed.
    fn from_str(s: &str) -> Result<Self> {
        let (modulus, charges) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("datum must look like s:c1,c2,...: {s:?}")))?;
        let modulus = modulus
            .trim()
            .parse::<u64>()
            .map_err(|_| Error::Parse(format!("bad modulus in {s:?}")))?;
        let charges = charges
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad charge {tok:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Datum::new(modulus, charges)
    }
}

/// A finite set of data, all of the same level. The empty set is allowed
/// and denotes the intersection over nothing (every multipartition).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct DatumSet {
    data: Vec<Datum>,
}

impl DatumSet {
    pub fn new(data: Vec<Datum>) -> Result<Self> {
        if let Some(first) = data.first() {
            for d in &data {
                if d.level() != first.level() {
                    return Err(Error::LevelMismatch(first.level(), d.level()));
                }
            }
        }
        Ok(DatumSet { data })
    }

    pub fn data(&self) -> &[Datum] {
        &self.data
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn level(&self) -> Result<usize> {
        self.data
            .first()
            .map(Datum::level)
            .ok_or(Error::EmptyDatumSet)
    }
}

impl fmt::Display for DatumSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.data.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl FromStr for DatumSet {
    type Err = Error;

    /// Parses data joined by `;`; the empty string is the empty set.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() {
            return Ok(DatumSet::default());
        }
        let data = t
            .split(';')
            .map(|tok| tok.trim().parse::<Datum>())
            .collect::<Result<Vec<_>>>()?;
        DatumSet::new(data)
    }
}

fn check_levels(m: &Multipartition, d: &Datum) -> Result<()> {
    if m.level() != d.level() {
        return Err(Error::LevelMismatch(m.level(), d.level()));
    }
    Ok(())
}

/// The `(s|c)`-content: multiplicity of class `r` is the number of nodes
/// `(a, b, k)` with `b - a + c_k` in class `r`.
pub fn mp_content(m: &Multipartition, d: &Datum) -> Result<Content> {
    check_levels(m, d)?;
    let mut content = Content::new();
    for (k, la) in m.components().iter().enumerate() {
        for (row0, &part) in la.parts().iter().enumerate() {
            let a = row0 as i64 + 1;
            for b in 1..=part as i64 {
                content.add(ResidueClass::new(d.modulus(), b - a + d.charge(k)));
            }
        }
    }
    Ok(content)
}

/// The weight of a multipartition: with `n_i` the multiplicity of class
/// `i` in the content, this is
/// `sum_k n_{c_k} - (1/2) sum_i (n_i - n_{i+1})^2`,
/// the class sum running over Z/sZ when `s > 0` and over the occupied
/// integer window (plus its boundary) when `s = 0`. Non-negative, and zero
/// exactly on cores.
pub fn weight(m: &Multipartition, d: &Datum) -> Result<u64> {
    check_levels(m, d)?;
    let content = mp_content(m, d)?;
    let s = d.modulus();
    let value: i128 = if s > 0 {
        let n: Vec<i128> = (0..s as i64)
            .map(|i| content.multiplicity(&ResidueClass::new(s, i)) as i128)
            .collect();
        let hits: i128 = d
            .charges()
            .iter()
            .map(|&c| n[c.rem_euclid(s as i64) as usize])
            .sum();
        let squares: i128 = (0..s as usize)
            .map(|i| {
                let diff = n[i] - n[(i + 1) % s as usize];
                diff * diff
            })
            .sum();
        hits - squares / 2
    } else {
        let counts: BTreeMap<i64, i128> = content
            .iter()
            .map(|(class, &mult)| (class.value(), mult as i128))
            .collect();
        let get = |i: i64| counts.get(&i).copied().unwrap_or(0);
        let hits: i128 = d.charges().iter().map(|&c| get(c)).sum();
        let squares: i128 = match (counts.keys().next(), counts.keys().next_back()) {
            (Some(&lo), Some(&hi)) => (lo - 1..=hi)
                .map(|i| {
                    let diff = get(i) - get(i + 1);
                    diff * diff
                })
                .sum(),
            _ => 0,
        };
        hits - squares / 2
    };
    debug_assert!(value >= 0, "weight is non-negative");
    Ok(value as u64)
}

/// Whether `(p, q)` is an `(s | c, d)`-core bipartition, by the beta-set
/// sandwich criterion: for `s = 0` this is containment between the
/// c- and d-shifted beta-sets (in the direction of the larger charge);
/// for `s >= 2`, with `e = (c - d) mod s`,
/// `beta_e(p) >= beta_0(q) >= beta_{e-s}(p)`.
/// For `s = 1` the convention forces `p = q = empty`.
pub fn is_core_bipartition(p: &Partition, q: &Partition, s: u64, c: i64, d: i64) -> bool {
    match s {
        0 => {
            let bp = ShiftedBetaSet::new(p, c);
            let bq = ShiftedBetaSet::new(q, d);
            if c <= d {
                bq.is_superset_of(&bp)
            } else {
                bp.is_superset_of(&bq)
            }
        }
        1 => p.is_empty() && q.is_empty(),
        _ => {
            let e = (c - d).rem_euclid(s as i64);
            let upper = ShiftedBetaSet::new(p, e);
            let lower = ShiftedBetaSet::new(p, e - s as i64);
            let mid = ShiftedBetaSet::new(q, 0);
            upper.is_superset_of(&mid) && mid.is_superset_of(&lower)
        }
    }
}

/// Whether `m` is an `(s|c)`-core: every component must be an s-core, and
/// every component pair must be a core bipartition for its charge pair.
/// The component test runs first; it is both necessary and cheap.
pub fn is_core(m: &Multipartition, d: &Datum) -> Result<bool> {
    check_levels(m, d)?;
    let s = d.modulus();
    if !m.components().iter().all(|la| la.is_s_core(s)) {
        return Ok(false);
    }
    let l = m.level();
    for j in 0..l {
        for k in j + 1..l {
            if !is_core_bipartition(
                m.component(j),
                m.component(k),
                s,
                d.charge(j),
                d.charge(k),
            ) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Guard for the exponential brute-force oracle.
#[derive(Clone, Copy, Debug)]
pub struct BruteForceGuard {
    pub max_size: u64,
    pub max_level: usize,
}

impl Default for BruteForceGuard {
    fn default() -> Self {
        BruteForceGuard {
            max_size: 10,
            max_level: 3,
        }
    }
}

/// The definitional core test: `m` is a core when no other multipartition
/// of the same size has the same content. Exponential; exists as an
/// independent oracle for `is_core` and is guarded accordingly. For
/// `s = 1` this returns the convention (`m` empty) directly.
pub fn is_core_bruteforce(m: &Multipartition, d: &Datum, guard: BruteForceGuard) -> Result<bool> {
    check_levels(m, d)?;
    if m.size() > guard.max_size || m.level() > guard.max_level {
        return Err(Error::GuardExceeded(format!(
            "size {} level {} exceeds guard ({}, {})",
            m.size(),
            m.level(),
            guard.max_size,
            guard.max_level
        )));
    }
    if d.modulus() == 1 {
        return Ok(m.is_empty());
    }
    let content = mp_content(m, d)?;
    for other in multipartitions_of(m.level(), m.size()) {
        if &other != m && mp_content(&other, d)? == content {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All level-`l` multipartitions of size exactly `n`.
pub fn multipartitions_of(l: usize, n: u64) -> Vec<Multipartition> {
    fn rec(l: usize, n: u64, acc: &mut Vec<Partition>, out: &mut Vec<Multipartition>) {
        if l == 1 {
            for la in partitions_of(n) {
                acc.push(la);
                out.push(Multipartition::new(acc.clone()).unwrap());
                acc.pop();
            }
            return;
        }
        for first in 0..=n {
            for la in partitions_of(first) {
                acc.push(la);
                rec(l - 1, n - first, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(l.max(1), n, &mut Vec::new(), &mut out);
    out
}

/// All level-`l` multipartitions of size at most `n`, sorted.
pub fn multipartitions_up_to(l: usize, n: u64) -> Vec<Multipartition> {
    let mut out: Vec<Multipartition> = (0..=n).flat_map(|k| multipartitions_of(l, k)).collect();
    out.sort();
    out
}

/// All `q` with `(p, q)` an `(s | c, d)`-core, for an s-core `p` and
/// `s >= 1`. With `e = (c - d) mod s`, the beta-set of `q` must sit
/// between `beta_{e-s}(p)` and `beta_e(p)`, whose difference has exactly
/// `s` elements; charge zero forces choosing `s - e` of them. The list has
/// `binom(s, e)` entries, sorted.
pub fn sandwich_partners(p: &Partition, s: u64, c: i64, d: i64) -> Result<Vec<Partition>> {
    if s == 0 {
        return Err(Error::Precondition(
            "sandwich enumeration needs a positive modulus".into(),
        ));
    }
    if !p.is_s_core(s) {
        return Err(Error::Precondition(format!("{p} is not a {s}-core")));
    }
    let e = (c - d).rem_euclid(s as i64);
    let upper = ShiftedBetaSet::new(p, e);
    let lower = ShiftedBetaSet::new(p, e - s as i64);
    let window = lower.tail_start().min(upper.tail_start());
    let diff: Vec<i64> = upper
        .members_down_to(window)
        .into_iter()
        .filter(|&n| !lower.contains(n))
        .collect();
    debug_assert_eq!(diff.len() as u64, s);
    let pick = (s as i64 - e) as usize;
    let base = BetaSpec::from_beta_set(&lower);
    let mut partners: Vec<Partition> = diff
        .into_iter()
        .combinations(pick)
        .map(|extra| {
            let mut spec = base.clone();
            for n in extra {
                spec.insert(n);
            }
            let (q, shift) = spec.normalize();
            debug_assert_eq!(shift, 0);
            q
        })
        .collect();
    partners.sort();
    partners.dedup();
    Ok(partners)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(text: &str) -> Multipartition {
        text.parse().unwrap()
    }

    fn datum(text: &str) -> Datum {
        text.parse().unwrap()
    }

    #[test]
    fn content_example() {
        let m = mp("[2]|[4,1,1]|[1,1]");
        let d = datum("4:0,2,1");
        let c = mp_content(&m, &d).unwrap();
        assert_eq!(c.multiplicity(&ResidueClass::new(4, 0)), 4);
        assert_eq!(c.multiplicity(&ResidueClass::new(4, 1)), 4);
        assert_eq!(c.multiplicity(&ResidueClass::new(4, 2)), 1);
        assert_eq!(c.multiplicity(&ResidueClass::new(4, 3)), 1);

        assert!(mp_content(&mp("[]|[]"), &datum("3:0,1")).unwrap().is_empty());

        let c = mp_content(&mp("[1]|[1]"), &datum("3:0,0")).unwrap();
        assert_eq!(c.multiplicity(&ResidueClass::new(3, 0)), 2);
        assert_eq!(c.total(), 2);

        assert!(mp_content(&mp("[1]"), &datum("3:0,0")).is_err());
    }

    #[test]
    fn weight_examples() {
        assert_eq!(weight(&mp("[]|[]|[]"), &datum("4:0,2,1")).unwrap(), 0);
        assert_eq!(weight(&mp("[1]|[1]"), &datum("3:0,0")).unwrap(), 0);
        assert_eq!(weight(&mp("[2]|[4,1,1]|[1,1]"), &datum("4:0,2,1")).unwrap(), 0);
        // a content collision by component swap has positive weight
        assert!(weight(&mp("[1]|[]|[]"), &datum("0:0,0,0")).unwrap() > 0);
        assert_eq!(weight(&mp("[2]|[]"), &datum("2:0,0")).unwrap(), 2);
    }

    #[test]
    fn bipartition_examples() {
        assert!(is_core_bipartition(
            &"[1]".parse().unwrap(),
            &"[3,1]".parse().unwrap(),
            3,
            0,
            1
        ));
        assert!(is_core_bipartition(
            &Partition::empty(),
            &Partition::empty(),
            5,
            2,
            -1
        ));
        assert!(!is_core_bipartition(
            &"[1]".parse().unwrap(),
            &"[1]".parse().unwrap(),
            0,
            0,
            1
        ));
    }

    #[test]
    fn is_core_examples() {
        assert!(is_core(&mp("[2]|[4,1,1]|[1,1]"), &datum("4:0,2,1")).unwrap());
        assert!(is_core(&mp("[]|[]"), &datum("3:0,1")).unwrap());
        assert!(is_core(&mp("[1,1,1]|[3,3,1,1,1]|[2,2]"), &datum("0:1,3,0")).unwrap());
        assert!(is_core(&mp("[1,1,1]|[3,3,1,1,1]|[2,2]"), &datum("0:3,0,1")).unwrap());
    }

    #[test]
    fn bruteforce_examples() {
        let guard = BruteForceGuard::default();
        assert!(is_core_bruteforce(&mp("[1]|[1]"), &datum("3:0,0"), guard).unwrap());
        assert!(is_core_bruteforce(&mp("[]|[]"), &datum("7:3,-2"), guard).unwrap());
        // swapping equal-charge components collides, so neither is a core
        assert!(!is_core_bruteforce(&mp("[1]|[]|[]"), &datum("0:0,0,0"), guard).unwrap());
        assert!(!is_core_bruteforce(&mp("[]|[1]|[]"), &datum("0:0,0,0"), guard).unwrap());
        let big = mp("[11]|[]");
        assert!(is_core_bruteforce(&big, &datum("2:0,0"), guard).is_err());
    }

    #[test]
    fn sandwich_examples() {
        let partners = sandwich_partners(&Partition::empty(), 3, 0, 1).unwrap();
        assert_eq!(
            partners,
            vec![
                Partition::empty(),
                "[1]".parse().unwrap(),
                "[2]".parse().unwrap()
            ]
        );

        let partners = sandwich_partners(&"[1]".parse().unwrap(), 3, 0, 1).unwrap();
        assert_eq!(
            partners,
            vec![
                Partition::empty(),
                "[1,1]".parse().unwrap(),
                "[3,1]".parse().unwrap()
            ]
        );

        // e = 0 forces taking the whole difference set, so q = p
        for s in 1..=5 {
            let partners = sandwich_partners(&Partition::empty(), s, 2, 2).unwrap();
            assert_eq!(partners, vec![Partition::empty()]);
        }
        let core: Partition = "[3,1]".parse().unwrap();
        assert_eq!(sandwich_partners(&core, 3, 1, 1).unwrap(), vec![core.clone()]);

        assert!(sandwich_partners(&core, 0, 0, 1).is_err());
        assert!(sandwich_partners(&"[2]".parse().unwrap(), 2, 0, 1).is_err());
    }

    #[test]
    fn sandwich_counts_are_binomial() {
        fn binom(n: u64, k: u64) -> u64 {
            if k > n {
                return 0;
            }
            (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
        }
        for s in 1..=6u64 {
            for n in 0..=8u64 {
                for p in partitions_of(n).iter().filter(|p| p.is_s_core(s)) {
                    for c in -2..=2i64 {
                        for d in -2..=2i64 {
                            let e = (c - d).rem_euclid(s as i64) as u64;
                            let partners = sandwich_partners(p, s, c, d).unwrap();
                            assert_eq!(partners.len() as u64, binom(s, e), "{p} s={s} c={c} d={d}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn partners_match_pair_test() {
        // sandwich_partners returns exactly the q passing is_core_bipartition
        for s in 1..=4u64 {
            for n in 0..=6u64 {
                for p in partitions_of(n).iter().filter(|p| p.is_s_core(s)) {
                    for (c, d) in [(0, 1), (2, 0), (-1, 1)] {
                        let partners = sandwich_partners(p, s, c, d).unwrap();
                        for q in multipartitions_up_to(1, 8) {
                            let q = q.component(0);
                            let member = partners.contains(q);
                            assert_eq!(
                                is_core_bipartition(p, q, s, c, d),
                                member,
                                "p={p} q={q} s={s} c={c} d={d}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn datum_parsing() {
        let d = datum("0:-1,2");
        assert_eq!(d.modulus(), 0);
        assert_eq!(d.charges(), &[-1, 2]);
        assert_eq!(d.to_string(), "0:-1,2");

        let ts: DatumSet = "0:1,3,0;0:3,0,1".parse().unwrap();
        assert_eq!(ts.data().len(), 2);
        assert_eq!(ts.to_string(), "0:1,3,0;0:3,0,1");
        assert!("2:0,1;3:0".parse::<DatumSet>().is_err());
        assert!("".parse::<DatumSet>().unwrap().is_empty());
    }

    #[test]
    fn multipartition_parsing() {
        let m = mp("[2]|[4,1,1]|[1,1]");
        assert_eq!(m.level(), 3);
        assert_eq!(m.size(), 10);
        assert_eq!(m.to_string(), "[2]|[4,1,1]|[1,1]");
        assert_eq!(mp("[]").level(), 1);
    }
}
