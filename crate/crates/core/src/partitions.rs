//! Partitions, hooks, residues and contents.
//!
//! A partition is a weakly decreasing sequence of positive integers; its
//! Young diagram is the set of nodes `(a, b)` with `1 <= b <= parts[a]`
//! (rows indexed from 1, English convention). The s-residue of a node is
//! `b - a` modulo `s`, and the s-content is the multiset of residues of
//! all nodes. For `s >= 2` a partition is an s-core exactly when no other
//! partition shares its s-content, which is equivalent to having no hook
//! of length `s`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A partition: weakly decreasing positive parts, trailing zeros dropped.
///
/// Values are immutable. The ordering is `(size, lexicographic parts)`,
/// which fixes the enumeration order used everywhere downstream.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros. Rejects increasing part
    /// lists and parts too large to carry exact beta-number arithmetic.
    pub fn new(mut parts: Vec<u64>) -> Result<Self> {
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::Parse(format!(
                "parts must be weakly decreasing: {parts:?}"
            )));
        }
        if parts.iter().any(|&p| p > (1 << 62)) {
            return Err(Error::Parse("part exceeds supported range".into()));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// The part `lambda_a`, 1-indexed; zero beyond the length.
    pub fn part(&self, a: usize) -> u64 {
        if a == 0 {
            u64::MAX // sentinel row 0, used by addable-node scans
        } else {
            self.parts.get(a - 1).copied().unwrap_or(0)
        }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// The conjugate (transposed diagram) partition.
    pub fn conjugate(&self) -> Partition {
        let mut parts = Vec::new();
        let mut col = 1;
        loop {
            let height = self.parts.iter().take_while(|&&p| p >= col).count() as u64;
            if height == 0 {
                break;
            }
            parts.push(height);
            col += 1;
        }
        Partition { parts }
    }

    /// The beta-number `lambda_a - a` for a 1-indexed row.
    pub fn beta_value(&self, a: usize) -> i64 {
        self.part(a) as i64 - a as i64
    }

    /// Membership in the charge-0 beta-set `{lambda_a - a : a >= 1}`.
    ///
    /// Everything below `-len` belongs to the cofinite tail; the values
    /// `lambda_a - a` for `a <= len` are strictly decreasing, so the
    /// finite window is searched by binary search.
    pub fn beta_contains(&self, n: i64) -> bool {
        if n < -(self.len() as i64) {
            return true;
        }
        let mut lo = 1usize;
        let mut hi = self.len();
        while lo <= hi {
            let mid = lo + (hi - lo) / 2;
            match self.beta_value(mid).cmp(&n) {
                Ordering::Equal => return true,
                Ordering::Greater => lo = mid + 1,
                Ordering::Less => {
                    if mid == 1 {
                        return false;
                    }
                    hi = mid - 1;
                }
            }
        }
        false
    }

    /// The number of hooks of length exactly `a` (Robinson: the number of
    /// `b` in the beta-set with `b - a` outside it).
    pub fn hook_count(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::Precondition("hook length must be positive".into()));
        }
        let mut count = 0;
        for row in 1..=self.len() {
            let b = self.beta_value(row);
            if !self.beta_contains(b - a as i64) {
                count += 1;
            }
        }
        Ok(count)
    }

    /// Whether this partition is an s-core. Every partition is a 0-core;
    /// the only 1-core is the empty partition; for `s >= 2` this is the
    /// no-s-hook test.
    pub fn is_s_core(&self, s: u64) -> bool {
        match s {
            0 => true,
            1 => self.is_empty(),
            _ => self.hook_count(s).expect("s > 0") == 0,
        }
    }

    /// The s-content shifted by `shift`: the multiset of classes
    /// `b - a + shift (mod s)` over nodes `(a, b)`.
    pub fn content(&self, s: u64, shift: i64) -> Content {
        let mut content = Content::new();
        for (row0, &part) in self.parts.iter().enumerate() {
            let a = row0 as i64 + 1;
            for b in 1..=part as i64 {
                content.add(ResidueClass::new(s, b - a + shift));
            }
        }
        content
    }

    /// Number of removable nodes, i.e. the number of distinct part values.
    pub fn removable_count(&self) -> u64 {
        let mut count = 0;
        for a in 1..=self.len() {
            if self.part(a) > self.part(a + 1) {
                count += 1;
            }
        }
        count
    }

    /// Rows `a` whose last node `(a, lambda_a)` is removable, with the
    /// residue offset `lambda_a - a` of that node.
    pub fn removable_nodes(&self) -> Vec<(usize, i64)> {
        (1..=self.len())
            .filter(|&a| self.part(a) > self.part(a + 1))
            .map(|a| (a, self.part(a) as i64 - a as i64))
            .collect()
    }

    /// Rows `a` where `(a, lambda_a + 1)` is addable, with that node's
    /// residue offset `lambda_a + 1 - a`.
    pub fn addable_nodes(&self) -> Vec<(usize, i64)> {
        (1..=self.len() + 1)
            .filter(|&a| self.part(a - 1) > self.part(a))
            .map(|a| (a, self.part(a) as i64 + 1 - a as i64))
            .collect()
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the text form `[6,4,2,1,1]`; `[]` is the empty partition.
    /// Spaces are tolerated around brackets, commas and entries.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("partition must be bracketed: {s:?}")))?;
        let inner = inner.trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::Parse(format!("bad part {tok:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// A residue class: an integer modulo `s`, or a plain integer when `s = 0`
/// (congruence mod 0 is equality).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ResidueClass {
    modulus: u64,
    value: i64,
}

impl ResidueClass {
    pub fn new(modulus: u64, value: i64) -> Self {
        let value = if modulus == 0 {
            value
        } else {
            value.rem_euclid(modulus as i64)
        };
        ResidueClass { modulus, value }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn value(&self) -> i64 {
        self.value
    }
}

impl fmt::Display for ResidueClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.modulus == 0 {
            write!(f, "{}", self.value)
        } else {
            write!(f, "{} (mod {})", self.value, self.modulus)
        }
    }
}

/// A content: a finite multiset of residue classes with multiplicities.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Content {
    counts: BTreeMap<ResidueClass, u64>,
}

impl Content {
    pub fn new() -> Self {
        Content::default()
    }

    pub fn add(&mut self, class: ResidueClass) {
        *self.counts.entry(class).or_insert(0) += 1;
    }

    pub fn multiplicity(&self, class: &ResidueClass) -> u64 {
        self.counts.get(class).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ResidueClass, &u64)> {
        self.counts.iter()
    }
}

/// All partitions of `n`, in decreasing lexicographic order of parts.
pub fn partitions_of(n: u64) -> Vec<Partition> {
    fn rec(remaining: u64, max: u64, acc: &mut Vec<u64>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: acc.clone(),
            });
            return;
        }
        let mut k = max.min(remaining);
        while k >= 1 {
            acc.push(k);
            rec(remaining - k, k, acc, out);
            acc.pop();
            k -= 1;
        }
    }
    let mut out = Vec::new();
    rec(n, n.max(1), &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Independent oracle: hook lengths read off the Young diagram,
    /// `h(a,b) = lambda_a - b + lambda'_b - a + 1`.
    fn hook_count_diagram(la: &Partition, s: u64) -> u64 {
        let conj = la.conjugate();
        let mut count = 0;
        for a in 1..=la.len() {
            for b in 1..=la.part(a) {
                let h = la.part(a) - b + conj.part(b as usize) - a as u64 + 1;
                if h == s {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn hook_counts_match_diagram_oracle() {
        for n in 0..=12u64 {
            for la in partitions_of(n) {
                for a in 1..=12u64 {
                    assert_eq!(
                        la.hook_count(a).unwrap(),
                        hook_count_diagram(&la, a),
                        "partition {la}, hook {a}"
                    );
                }
            }
        }
    }

    #[test]
    fn hook_count_examples() {
        assert!(p(&[6, 4, 2, 1, 1]).hook_count(5).unwrap() >= 1);
        assert_eq!(p(&[6, 4, 2, 1, 1]).hook_count(3).unwrap(), 0);
        for a in 1..=6 {
            assert_eq!(Partition::empty().hook_count(a).unwrap(), 0);
        }
        assert!(Partition::empty().hook_count(0).is_err());
    }

    #[test]
    fn s_core_examples() {
        assert!(p(&[6, 4, 2, 1, 1]).is_s_core(3));
        assert!(!p(&[6, 4, 2, 1, 1]).is_s_core(5));
        assert!(!p(&[1]).is_s_core(1));
        assert!(Partition::empty().is_s_core(1));
        for k in 0..5 {
            assert!(Partition::new(vec![k + 1]).unwrap().is_s_core(0));
        }
    }

    #[test]
    fn content_examples() {
        let c = p(&[6, 4, 2, 1, 1]).content(3, 0);
        assert_eq!(c.multiplicity(&ResidueClass::new(3, 0)), 4);
        assert_eq!(c.multiplicity(&ResidueClass::new(3, 1)), 4);
        assert_eq!(c.multiplicity(&ResidueClass::new(3, 2)), 6);
        assert_eq!(c.total(), 14);

        assert!(Partition::empty().content(4, 2).is_empty());

        let c = p(&[2]).content(4, 0);
        assert_eq!(c.multiplicity(&ResidueClass::new(4, 0)), 1);
        assert_eq!(c.multiplicity(&ResidueClass::new(4, 1)), 1);
        assert_eq!(c.total(), 2);
    }

    #[test]
    fn littlewood_content_uniqueness() {
        // s-core iff no other partition of the same size has the same
        // s-content, for s >= 2 (brute force over all partitions of |p|).
        for n in 0..=8u64 {
            let all = partitions_of(n);
            for s in 2..=6u64 {
                for la in &all {
                    let content = la.content(s, 0);
                    let unique = all
                        .iter()
                        .filter(|mu| *mu != la && mu.content(s, 0) == content)
                        .count()
                        == 0;
                    assert_eq!(la.is_s_core(s), unique, "{la} s={s}");
                }
            }
        }
    }

    #[test]
    fn parse_and_display_roundtrip() {
        for text in ["[6,4,2,1,1]", "[]", "[3,1]"] {
            let la: Partition = text.parse().unwrap();
            assert_eq!(la.to_string(), text);
        }
        assert_eq!(" [ 6, 4 , 2,1,1 ] ".parse::<Partition>().unwrap(), p(&[6, 4, 2, 1, 1]));
        assert_eq!("[3,1,0,0]".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("3,1".parse::<Partition>().is_err());
    }

    #[test]
    fn conjugate_involution() {
        for n in 0..=10u64 {
            for la in partitions_of(n) {
                assert_eq!(la.conjugate().conjugate(), la);
                assert_eq!(la.conjugate().size(), la.size());
            }
        }
    }

    #[test]
    fn ordering_is_by_size_then_lex() {
        let mut v = vec![p(&[2]), p(&[1, 1]), p(&[1]), Partition::empty(), p(&[3])];
        v.sort();
        assert_eq!(
            v,
            vec![Partition::empty(), p(&[1]), p(&[1, 1]), p(&[2]), p(&[3])]
        );
    }

    #[test]
    fn partitions_of_counts() {
        let expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77];
        for (n, &count) in expected.iter().enumerate() {
            assert_eq!(partitions_of(n as u64).len(), count);
        }
    }
}
