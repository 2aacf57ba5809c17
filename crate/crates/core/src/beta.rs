//! Shifted beta-sets, canonical finite beta-specs, and s-sets.
//!
//! The beta-set of a partition is `{lambda_a - a : a >= 1}`, a set of
//! integers bounded above whose complement is bounded below. Shifting it
//! by a charge `c` gives the c-shifted beta-set; the charge can be read
//! back off the set as (number of non-negative members) minus (number of
//! negative non-members). All core tests in this crate reduce to finite
//! containment checks between such sets.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// A shifted beta-set `{lambda_a - a + shift : a >= 1}`, stored
/// intensionally as a partition plus a charge.
#[derive(Clone, Copy, Debug)]
pub struct ShiftedBetaSet<'a> {
    partition: &'a Partition,
    shift: i64,
}

impl<'a> ShiftedBetaSet<'a> {
    pub fn new(partition: &'a Partition, shift: i64) -> Self {
        ShiftedBetaSet { partition, shift }
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn partition(&self) -> &Partition {
        self.partition
    }

    pub fn contains(&self, n: i64) -> bool {
        self.partition.beta_contains(n - self.shift)
    }

    /// Everything strictly below this bound is a member.
    pub fn tail_start(&self) -> i64 {
        self.shift - self.partition.len() as i64
    }

    /// The largest member, `lambda_1 - 1 + shift`.
    pub fn max_member(&self) -> i64 {
        self.partition.part(1) as i64 - 1 + self.shift
    }

    /// The smallest non-member, `shift - len`.
    pub fn min_excluded(&self) -> i64 {
        self.tail_start()
    }

    /// Members `>= lo`, in decreasing order.
    pub fn members_down_to(&self, lo: i64) -> Vec<i64> {
        let mut out = Vec::new();
        for a in 1..=self.partition.len() {
            let v = self.partition.beta_value(a) + self.shift;
            if v >= lo {
                out.push(v);
            }
        }
        let mut n = self.tail_start() - 1;
        while n >= lo {
            out.push(n);
            n -= 1;
        }
        out
    }

    /// The charge computed from the definition: non-negative members minus
    /// negative non-members. Always equals `shift`.
    pub fn charge_by_definition(&self) -> i64 {
        let nonneg = self.members_down_to(0).len() as i64;
        let lo = self.tail_start().min(0);
        let window = (lo..0).count() as i64;
        let neg_members = self.members_down_to(lo).len() as i64 - nonneg;
        nonneg - (window - neg_members)
    }

    /// Containment `self >= other`; false immediately when the charges
    /// forbid it, otherwise checked over the finite disagreement window.
    pub fn is_superset_of(&self, other: &ShiftedBetaSet) -> bool {
        if self.shift < other.shift {
            return false;
        }
        let lo = self.tail_start().min(other.tail_start());
        other
            .members_down_to(lo)
            .iter()
            .all(|&n| self.contains(n))
    }

    /// `|self \ other|`, computed over the finite window where the two
    /// sets can disagree.
    pub fn difference_size(&self, other: &ShiftedBetaSet) -> u64 {
        let lo = self.tail_start().min(other.tail_start());
        self.members_down_to(lo)
            .iter()
            .filter(|&&n| !other.contains(n))
            .count() as u64
    }
}

impl fmt::Display for ShiftedBetaSet<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "beta_{}({})", self.shift, self.partition)
    }
}

/// A finite description of a beta-set: everything below `threshold`, plus
/// finitely many exceptional members at or above it. This is the only
/// constructor for surgically modified beta-sets; `normalize` recovers the
/// unique `(partition, charge)` pair denoting the same set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaSpec {
    threshold: i64,
    exceptional: BTreeSet<i64>,
}

impl BetaSpec {
    /// Exceptional members below the threshold are already implied and are
    /// dropped.
    pub fn new(threshold: i64, exceptional: impl IntoIterator<Item = i64>) -> Self {
        let exceptional = exceptional
            .into_iter()
            .filter(|&n| n >= threshold)
            .collect();
        BetaSpec {
            threshold,
            exceptional,
        }
    }

    pub fn from_beta_set(b: &ShiftedBetaSet) -> Self {
        let threshold = b.tail_start();
        BetaSpec::new(threshold, b.members_down_to(threshold))
    }

    pub fn insert(&mut self, n: i64) {
        if n >= self.threshold {
            self.exceptional.insert(n);
        }
    }

    pub fn contains(&self, n: i64) -> bool {
        n < self.threshold || self.exceptional.contains(&n)
    }

    /// The unique `(partition, charge)` with that shifted beta-set.
    pub fn normalize(&self) -> (Partition, i64) {
        let shift = self.threshold + self.exceptional.len() as i64;
        let mut parts = Vec::new();
        for (idx, &b) in self.exceptional.iter().rev().enumerate() {
            let a = idx as i64 + 1;
            let part = b - shift + a;
            debug_assert!(part >= 0);
            if part > 0 {
                parts.push(part as u64);
            }
        }
        let partition = Partition::new(parts).expect("beta members decrease strictly");
        (partition, shift)
    }
}

/// The s-set of an s-core: for each residue class mod `s`, the smallest
/// integer in that class missing from the beta-set. Representatives are
/// indexed by class and sum to `s(s-1)/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SSet {
    modulus: u64,
    reps: Vec<i64>,
}

impl SSet {
    /// Builds from class-indexed representatives (`reps[i]` in class `i`).
    pub fn new(modulus: u64, reps: Vec<i64>) -> Result<Self> {
        if modulus == 0 || reps.len() != modulus as usize {
            return Err(Error::Precondition(format!(
                "s-set needs one representative per class mod {modulus}"
            )));
        }
        for (i, &r) in reps.iter().enumerate() {
            if r.rem_euclid(modulus as i64) != i as i64 {
                return Err(Error::Precondition(format!(
                    "representative {r} is not in class {i} mod {modulus}"
                )));
            }
        }
        let sum: i64 = reps.iter().sum();
        let expected = (modulus as i64) * (modulus as i64 - 1) / 2;
        if sum != expected {
            return Err(Error::Precondition(format!(
                "s-set representatives sum to {sum}, expected {expected}"
            )));
        }
        Ok(SSet { modulus, reps })
    }

    /// Builds from an unordered list of pairwise incongruent values.
    pub fn from_values(modulus: u64, values: &[i64]) -> Result<Self> {
        if modulus == 0 || values.len() != modulus as usize {
            return Err(Error::Precondition(format!(
                "expected {modulus} values, got {}",
                values.len()
            )));
        }
        let mut reps = vec![None; modulus as usize];
        for &v in values {
            let class = v.rem_euclid(modulus as i64) as usize;
            if reps[class].replace(v).is_some() {
                return Err(Error::Precondition(format!(
                    "values not pairwise incongruent mod {modulus}"
                )));
            }
        }
        SSet::new(modulus, reps.into_iter().map(Option::unwrap).collect())
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// The representative of the class of `i`.
    pub fn rep(&self, i: i64) -> i64 {
        self.reps[i.rem_euclid(self.modulus as i64) as usize]
    }

    /// Class-indexed representatives.
    pub fn reps(&self) -> &[i64] {
        &self.reps
    }

    /// The s-core whose beta-set has these least missing values: the union
    /// of the downward progressions below each representative.
    pub fn to_core(&self) -> Partition {
        let s = self.modulus as i64;
        let threshold = self.reps.iter().min().unwrap() - s + 1;
        let mut spec = BetaSpec::new(threshold, std::iter::empty());
        for &r in &self.reps {
            let mut n = r - s;
            while n >= threshold {
                spec.insert(n);
                n -= s;
            }
        }
        let (partition, shift) = spec.normalize();
        debug_assert_eq!(shift, 0, "s-set sum fixes the charge at zero");
        partition
    }

    /// The s-set of the same g-core viewed mod `s`, for `g | s`:
    /// `{rep_i + k g : 0 <= k < s/g}`.
    pub fn expanded(&self, s: u64) -> Result<SSet> {
        if s == 0 || !s.is_multiple_of(self.modulus) {
            return Err(Error::Precondition(format!(
                "{} does not divide {s}",
                self.modulus
            )));
        }
        let g = self.modulus as i64;
        let mut values = Vec::new();
        for &r in &self.reps {
            for k in 0..(s as i64 / g) {
                values.push(r + k * g);
            }
        }
        SSet::from_values(s, &values)
    }
}

impl Partition {
    /// The s-set of an s-core: least missing beta-value in each class.
    pub fn s_set(&self, s: u64) -> Result<SSet> {
        if s == 0 {
            return Err(Error::Precondition("s-set needs a positive modulus".into()));
        }
        if !self.is_s_core(s) {
            return Err(Error::Precondition(format!("{self} is not a {s}-core")));
        }
        let base = -(self.len() as i64);
        let reps = (0..s as i64)
            .map(|i| {
                let mut n = base + (i - base).rem_euclid(s as i64);
                while self.beta_contains(n) {
                    n += s as i64;
                }
                n
            })
            .collect();
        SSet::new(s, reps)
    }
}
