//! Closed-form counts, constructive bijections and average sizes for
//! simultaneous core bipartitions of the form
//! `C_{(s|0,a)} \cap C_{(t|0,b)}`.
//!
//! Three families are covered exactly:
//! - `ss`: `s` divides `t` (via bounded tuples and a g-set bijection);
//! - `t0`: positive `s` against modulus 0, the stabilised limit of `ss`;
//! - `aa`: coprime `s, t` with equal charge `a`, via cyclic boundary
//!   words on the (s,t)-lattice (the `a = 0` case is the classical
//!   rational Catalan count of (s,t)-cores).
//!
//! All counts use exact big integers and all averages exact rationals.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::beta::{BetaSpec, SSet, ShiftedBetaSet};
use crate::error::{Error, Result};
use crate::multicore::{is_core_bipartition, Multipartition};
use crate::partitions::Partition;

/// `binom(n, k)` with the convention that it vanishes for `n < 0`,
/// `k < 0` or `n < k`.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || n < k {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for i in 0..k as u64 {
        acc = acc * BigUint::from(n as u64 - i) / BigUint::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// A Z/gZ-tuple of non-negative integers, the image of the sigma/tau maps.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct UTuple {
    entries: Vec<u64>,
}

impl UTuple {
    pub fn new(entries: Vec<u64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Precondition("tuple needs positive length".into()));
        }
        Ok(UTuple { entries })
    }

    pub fn g(&self) -> u64 {
        self.entries.len() as u64
    }

    pub fn entry(&self, i: i64) -> u64 {
        self.entries[i.rem_euclid(self.entries.len() as i64) as usize]
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn sum(&self) -> u64 {
        self.entries.iter().sum()
    }

    /// The shifted tuple `u(+c)` with `u(+c)_i = u_{i+c}`.
    pub fn shifted(&self, c: i64) -> UTuple {
        let g = self.entries.len() as i64;
        UTuple {
            entries: (0..g).map(|i| self.entry(i + c)).collect(),
        }
    }

    /// Membership in `U_g^{s,a}`: entries at most `s/g` summing to `a`.
    pub fn is_in_u(&self, s: u64, a: u64) -> bool {
        s.is_multiple_of(self.g())
            && self.sum() == a
            && self.entries.iter().all(|&e| e <= s / self.g())
    }
}

impl fmt::Display for UTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// All tuples in `U_g^{s,a}`, lexicographic.
pub fn all_u_tuples(g: u64, s: u64, a: u64) -> Result<Vec<UTuple>> {
    if g == 0 || !s.is_multiple_of(g) {
        return Err(Error::Precondition(format!("{g} does not divide {s}")));
    }
    let cap = s / g;
    let mut out = Vec::new();
    let mut acc = Vec::with_capacity(g as usize);
    fn rec(left: u64, slots: u64, cap: u64, acc: &mut Vec<u64>, out: &mut Vec<UTuple>) {
        if slots == 0 {
            if left == 0 {
                out.push(UTuple {
                    entries: acc.clone(),
                });
            }
            return;
        }
        let hi = cap.min(left);
        for e in 0..=hi {
            if left - e > cap * (slots - 1) {
                continue;
            }
            acc.push(e);
            rec(left - e, slots - 1, cap, acc, out);
            acc.pop();
        }
    }
    rec(a, g, cap, &mut acc, &mut out);
    Ok(out)
}

/// `|U_g^{s,a}|` by inclusion-exclusion:
/// `sum_d (-1)^d binom(g,d) binom(a+g-1-d(1+s/g), g-1)`.
pub fn count_u(g: u64, s: u64, a: u64) -> Result<BigUint> {
    if g == 0 || !s.is_multiple_of(g) {
        return Err(Error::Precondition(format!("{g} does not divide {s}")));
    }
    let mut acc = BigInt::zero();
    for d in 0..=g {
        let upper = a as i64 + g as i64 - 1 - d as i64 * (1 + (s / g) as i64);
        let term = BigInt::from(binomial(g as i64, d as i64))
            * BigInt::from(binomial(upper, g as i64 - 1));
        if d % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    debug_assert!(!acc.is_negative());
    Ok(acc.to_biguint().unwrap_or_default())
}

fn check_charge(name: &str, charge: u64, modulus: u64) -> Result<()> {
    if charge >= modulus {
        return Err(Error::Precondition(format!(
            "{name} must satisfy 0 <= {name} < modulus, got {charge} vs {modulus}"
        )));
    }
    Ok(())
}

fn check_coprime(label: &str, x: u64, y: i64) -> Result<()> {
    let g = (x as i64).gcd(&y);
    if g != 1 {
        return Err(Error::Precondition(format!(
            "{label} must be coprime (gcd {g})"
        )));
    }
    Ok(())
}

/// `|C_{(s|0,a)} \cap C_{(t|0,b)} \cap (g-cores)^2|` for `g = gcd(s,t)`
/// coprime to `a - b`; this is `(1/g) |U_g^{s,a}| |U_g^{t,b}|`. When `s`
/// divides `t` the g-core restriction is automatic, so the value counts
/// the full intersection.
pub fn count_ss(s: u64, t: u64, a: u64, b: u64) -> Result<BigUint> {
    if s == 0 || t == 0 {
        return Err(Error::Precondition("moduli must be positive".into()));
    }
    check_charge("a", a, s)?;
    check_charge("b", b, t)?;
    let g = s.gcd(&t);
    check_coprime("g and a-b", g, a as i64 - b as i64)?;
    let product = count_u(g, s, a)? * count_u(g, t, b)?;
    let (q, r) = product.div_rem(&BigUint::from(g));
    debug_assert!(r.is_zero());
    Ok(q)
}

/// `|C_{(s|0,a)} \cap C_{(0|0,b)}| = (1/s) binom(s,a) binom(b+s-1, s-1)`.
pub fn count_t0(s: u64, a: u64, b: u64) -> Result<BigUint> {
    if s == 0 {
        return Err(Error::Precondition("modulus must be positive".into()));
    }
    check_charge("a", a, s)?;
    check_coprime("s and a-b", s, a as i64 - b as i64)?;
    let product = binomial(s as i64, a as i64)
        * binomial(b as i64 + s as i64 - 1, s as i64 - 1);
    let (q, r) = product.div_rem(&BigUint::from(s));
    debug_assert!(r.is_zero());
    Ok(q)
}

/// `|C_{(s|0,a)} \cap C_{(t|0,a)}| = (s+t-a-1)! / (a!(s-a)!(t-a)!)` for
/// coprime `s <= t` and `0 <= a < s`.
pub fn count_aa(s: u64, t: u64, a: u64) -> Result<BigUint> {
    if s == 0 || s > t {
        return Err(Error::Precondition("need 0 < s <= t".into()));
    }
    check_charge("a", a, s)?;
    check_coprime("s and t", s, t as i64)?;
    let numerator = factorial(s + t - a - 1);
    let denominator = factorial(a) * factorial(s - a) * factorial(t - a);
    let (q, r) = numerator.div_rem(&denominator);
    debug_assert!(r.is_zero());
    Ok(q)
}

/// The rational Catalan number `(1/(s+t)) binom(s+t, s)`, the number of
/// (s,t)-cores for coprime `s, t`.
pub fn rational_catalan(s: u64, t: u64) -> Result<BigUint> {
    check_coprime("s and t", s, t as i64)?;
    let (q, r) = binomial(s as i64 + t as i64, s as i64).div_rem(&BigUint::from(s + t));
    debug_assert!(r.is_zero());
    Ok(q)
}

/// The tuple recording how the g-set of `q`, shifted by `a`, sits against
/// the g-set of `p`: `u_i = (diamond_i(q) + a - diamond_{i+a}(p)) / g`.
/// Defined for `(p, q)` in `C_{(s|0,a)}` with both components g-cores,
/// `g | s`.
pub fn sigma_tau(p: &Partition, q: &Partition, s: u64, a: u64, g: u64) -> Result<UTuple> {
    if g == 0 || !s.is_multiple_of(g) {
        return Err(Error::Precondition(format!("{g} does not divide {s}")));
    }
    check_charge("a", a, s)?;
    if !p.is_s_core(g) || !q.is_s_core(g) {
        return Err(Error::Precondition(format!(
            "({p}, {q}) must both be {g}-cores"
        )));
    }
    if !is_core_bipartition(p, q, s, 0, a as i64) {
        return Err(Error::Precondition(format!(
            "({p}, {q}) is not an ({s}|0,{a})-core bipartition"
        )));
    }
    let dp = p.s_set(g)?;
    let dq = q.s_set(g)?;
    let mut entries = Vec::with_capacity(g as usize);
    for i in 0..g as i64 {
        let raw = dq.rep(i) + a as i64 - dp.rep(i + a as i64);
        if raw < 0 || raw % g as i64 != 0 || raw / g as i64 > (s / g) as i64 {
            return Err(Error::Precondition(format!(
                "({p}, {q}) does not define a tuple entry at class {i}"
            )));
        }
        entries.push((raw / g as i64) as u64);
    }
    let u = UTuple::new(entries)?;
    debug_assert_eq!(u.sum(), a);
    Ok(u)
}

/// Reconstructs the unique bipartition (plus the simultaneous cyclic
/// shift) whose sigma and tau tuples are `u(+c)` and `v(+c)`: integers
/// `x_i, y_i` over Z/gZ are built to satisfy
/// `y_i = x_{i+a} - a + g u_i = x_{i+b} - b + g v_i`,
/// then translated so the `x_i` sum to `binom(g,2)`, making them the
/// g-sets of the two components. Requires `gcd(g, a-b) = 1`.
///
/// Sweeping all `(u, v)` pairs and deduplicating enumerates
/// `C_{(s|0,a)} \cap C_{(t|0,b)} \cap (g-cores)^2` without repetition.
pub fn from_tuples(
    u: &UTuple,
    v: &UTuple,
    s: u64,
    t: u64,
    a: u64,
    b: u64,
) -> Result<(Partition, Partition, u64)> {
    let g = s.gcd(&t);
    if u.g() != g || v.g() != g {
        return Err(Error::Precondition(format!(
            "tuples must have length gcd(s,t) = {g}"
        )));
    }
    check_coprime("g and a-b", g, a as i64 - b as i64)?;
    if !u.is_in_u(s, a) || !v.is_in_u(t, b) {
        return Err(Error::Precondition(
            "tuples must lie in the bounded-sum sets".into(),
        ));
    }
    let gi = g as i64;
    let (ai, bi) = (a as i64, b as i64);
    let mut x = vec![0i64; g as usize];
    let mut y = vec![0i64; g as usize];
    let mut w: i64 = 0;
    for step in 0..g {
        let i = (w - ai).rem_euclid(gi);
        y[i as usize] = x[w.rem_euclid(gi) as usize] - ai + gi * u.entry(i) as i64;
        let w2 = (i + bi).rem_euclid(gi);
        let next = y[i as usize] + bi - gi * v.entry(i) as i64;
        if step + 1 < g {
            x[w2 as usize] = next;
        } else {
            debug_assert_eq!(w2, 0);
            debug_assert_eq!(next, x[0], "tuple sums close the cycle");
        }
        w = w2;
    }
    let target = gi * (gi - 1) / 2;
    let sum: i64 = x.iter().sum();
    debug_assert_eq!((target - sum).rem_euclid(gi), 0);
    let delta = (target - sum) / gi;
    for value in x.iter_mut().chain(y.iter_mut()) {
        *value += delta;
    }
    let la = SSet::from_values(g, &x)?.to_core();
    let mu = SSet::from_values(g, &y)?.to_core();

    let sigma = sigma_tau(&la, &mu, s, a, g)?;
    let tau = sigma_tau(&la, &mu, t, b, g)?;
    let c = (0..g as i64)
        .find(|&c| sigma == u.shifted(c) && tau == v.shifted(c))
        .ok_or_else(|| {
            Error::Precondition("reconstructed pair does not match the tuples".into())
        })?;
    Ok((la, mu, c as u64))
}

/// The full sweep of `from_tuples` over `U_g^{s,a} x U_g^{t,b}`,
/// deduplicated: `C_{(s|0,a)} \cap C_{(t|0,b)} \cap (g-cores)^2`, sorted.
pub fn ss_sweep(s: u64, t: u64, a: u64, b: u64) -> Result<Vec<(Partition, Partition)>> {
    let g = s.gcd(&t);
    let us = all_u_tuples(g, s, a)?;
    let vs = all_u_tuples(g, t, b)?;
    let mut set = BTreeSet::new();
    for u in &us {
        for v in &vs {
            let (la, mu, _) = from_tuples(u, v, s, t, a, b)?;
            set.insert((la, mu));
        }
    }
    Ok(set.into_iter().collect())
}

/// Members of `C_{(s|0,a)} \cap C_{(t|0,b)}` when `s` divides `t`.
pub fn ss_members(s: u64, t: u64, a: u64, b: u64) -> Result<Vec<(Partition, Partition)>> {
    if s == 0 || !t.is_multiple_of(s) {
        return Err(Error::Precondition(format!("{s} must divide {t}")));
    }
    check_charge("a", a, s)?;
    check_charge("b", b, t)?;
    ss_sweep(s, t, a, b)
}

/// Members of `C_{(s|0,a)} \cap C_{(0|0,b)}`: the modulus-0 constraint is
/// the stabilised limit of `(ns|0,b)` for `n >= b`, so `n = b + 1` keeps
/// `b < ns` valid for every `s >= 1`.
pub fn t0_members(s: u64, a: u64, b: u64) -> Result<Vec<(Partition, Partition)>> {
    if s == 0 {
        return Err(Error::Precondition("modulus must be positive".into()));
    }
    check_charge("a", a, s)?;
    check_coprime("s and a-b", s, a as i64 - b as i64)?;
    let t = s * (b + 1);
    ss_sweep(s, t, a, b)
}

/// One letter of a boundary-path word: `B` marks a second-component box,
/// `D` a downward lattice step, `R` a rightward one.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Letter {
    B,
    D,
    R,
}

impl Letter {
    fn as_char(self) -> char {
        match self {
            Letter::B => 'B',
            Letter::D => 'D',
            Letter::R => 'R',
        }
    }
}

/// A cyclic word over `{B, D, R}`, stored as its lexicographically least
/// rotation (alphabet order B < D < R).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CyclicWord {
    letters: Vec<Letter>,
}

impl CyclicWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        let letters = Self::least_rotation(letters);
        CyclicWord { letters }
    }

    fn least_rotation(letters: Vec<Letter>) -> Vec<Letter> {
        if letters.is_empty() {
            return letters;
        }
        let n = letters.len();
        let mut best = 0usize;
        for cand in 1..n {
            for k in 0..n {
                let a = letters[(cand + k) % n];
                let b = letters[(best + k) % n];
                if a < b {
                    best = cand;
                    break;
                }
                if a > b {
                    break;
                }
            }
        }
        (0..n).map(|k| letters[(best + k) % n]).collect()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Multiplicities `(B, D, R)`.
    pub fn counts(&self) -> (u64, u64, u64) {
        let mut counts = (0, 0, 0);
        for l in &self.letters {
            match l {
                Letter::B => counts.0 += 1,
                Letter::D => counts.1 += 1,
                Letter::R => counts.2 += 1,
            }
        }
        counts
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for CyclicWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .trim()
            .chars()
            .map(|ch| match ch {
                'B' | 'b' => Ok(Letter::B),
                'D' | 'd' => Ok(Letter::D),
                'R' | 'r' => Ok(Letter::R),
                other => Err(Error::Parse(format!("bad letter {other:?} in word"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CyclicWord::new(letters))
    }
}

/// All cyclic words (necklaces) with the given letter multiplicities,
/// sorted.
pub fn necklaces(b: u64, d: u64, r: u64) -> Vec<CyclicWord> {
    let mut out = Vec::new();
    let mut acc: Vec<Letter> = Vec::with_capacity((b + d + r) as usize);
    fn rec(left: (u64, u64, u64), acc: &mut Vec<Letter>, out: &mut Vec<CyclicWord>) {
        if left == (0, 0, 0) {
            let word = CyclicWord::new(acc.clone());
            if word.letters() == acc.as_slice() {
                out.push(word);
            }
            return;
        }
        if left.0 > 0 {
            acc.push(Letter::B);
            rec((left.0 - 1, left.1, left.2), acc, out);
            acc.pop();
        }
        if left.1 > 0 {
            acc.push(Letter::D);
            rec((left.0, left.1 - 1, left.2), acc, out);
            acc.pop();
        }
        if left.2 > 0 {
            acc.push(Letter::R);
            rec((left.0, left.1, left.2 - 1), acc, out);
            acc.pop();
        }
    }
    rec((b, d, r), &mut acc, &mut out);
    out.sort();
    out
}

fn walk_checks(s: u64, t: u64) -> Result<()> {
    if s == 0 || t == 0 {
        return Err(Error::Precondition("lattice needs positive moduli".into()));
    }
    check_coprime("s and t", s, t as i64)?;
    Ok(())
}

/// Decodes a cyclic word with `s` D's and `t` R's into the (s,t)-core
/// whose abacus boundary path it draws. One period is anchored at lattice
/// label 0; a right step raises the running label by `s`, a down step
/// lowers it by `t`, and each down step records the least missing
/// beta-value of one residue class. The collected values are translated
/// to charge 0 and rebuilt through the s-set.
pub fn st_decode(word: &CyclicWord, s: u64, t: u64) -> Result<Partition> {
    walk_checks(s, t)?;
    if word.counts() != (0, s, t) {
        return Err(Error::Precondition(format!(
            "word needs exactly {s} D's and {t} R's"
        )));
    }
    let mut base = 0i64;
    let mut gaps = Vec::with_capacity(s as usize);
    for &letter in word.letters() {
        match letter {
            Letter::D => {
                gaps.push(base - t as i64);
                base -= t as i64;
            }
            Letter::R => base += s as i64,
            Letter::B => unreachable!(),
        }
    }
    debug_assert_eq!(base, 0);
    let target = (s as i64) * (s as i64 - 1) / 2;
    let sum: i64 = gaps.iter().sum();
    let delta = (target - sum) / s as i64;
    debug_assert_eq!((target - sum).rem_euclid(s as i64), 0);
    for gap in &mut gaps {
        *gap += delta;
    }
    Ok(SSet::from_values(s, &gaps)?.to_core())
}

/// Encodes an (s,t)-core as its boundary word, canonical up to rotation.
pub fn st_encode(p: &Partition, s: u64, t: u64) -> Result<CyclicWord> {
    walk_checks(s, t)?;
    if !p.is_s_core(s) || !p.is_s_core(t) {
        return Err(Error::Precondition(format!("{p} is not an ({s},{t})-core")));
    }
    let start = p.s_set(s)?.rep(0);
    let mut base = start;
    let mut letters = Vec::with_capacity((s + t) as usize);
    for _ in 0..s + t {
        if p.beta_contains(base - t as i64) {
            letters.push(Letter::R);
            base += s as i64;
        } else {
            letters.push(Letter::D);
            base -= t as i64;
        }
    }
    debug_assert_eq!(base, start, "boundary walk closes after one period");
    Ok(CyclicWord::new(letters))
}

/// All (s,t)-cores for coprime `s, t`, decoded from every binary
/// necklace; there are `(1/(s+t)) binom(s+t, s)` of them.
pub fn st_cores(s: u64, t: u64) -> Result<Vec<Partition>> {
    walk_checks(s, t)?;
    let mut cores: Vec<Partition> = necklaces(0, s, t)
        .iter()
        .map(|w| st_decode(w, s, t))
        .collect::<Result<_>>()?;
    cores.sort();
    cores.dedup();
    Ok(cores)
}

/// Decodes a word with `a` B's, `s-a` D's and `t-a` R's into a bipartition
/// of `C_{(s|0,a)} \cap C_{(t|0,a)}`. A `B` stands for a down-then-right
/// corner whose box is added to the first component's beta-set to form
/// the a-shifted beta-set of the second component.
pub fn aa_decode(word: &CyclicWord, s: u64, t: u64, a: u64) -> Result<(Partition, Partition)> {
    walk_checks(s, t)?;
    if a >= s || s > t {
        return Err(Error::Precondition("need 0 <= a < s <= t".into()));
    }
    if word.counts() != (a, s - a, t - a) {
        return Err(Error::Precondition(format!(
            "word needs {a} B's, {} D's and {} R's",
            s - a,
            t - a
        )));
    }
    let (si, ti) = (s as i64, t as i64);
    let mut base = 0i64;
    let mut gaps = Vec::with_capacity(s as usize);
    let mut boxes = Vec::with_capacity(a as usize);
    for &letter in word.letters() {
        match letter {
            Letter::D => {
                gaps.push(base - ti);
                base -= ti;
            }
            Letter::R => base += si,
            Letter::B => {
                let x = base - ti;
                gaps.push(x);
                boxes.push(x);
                base = x + si;
            }
        }
    }
    debug_assert_eq!(base, 0);
    let target = si * (si - 1) / 2;
    let sum: i64 = gaps.iter().sum();
    let delta = (target - sum) / si;
    debug_assert_eq!((target - sum).rem_euclid(si), 0);
    for value in gaps.iter_mut().chain(boxes.iter_mut()) {
        *value += delta;
    }
    let la = SSet::from_values(s, &gaps)?.to_core();
    let mut spec = BetaSpec::from_beta_set(&ShiftedBetaSet::new(&la, 0));
    for &x in &boxes {
        spec.insert(x);
    }
    let (mu, shift) = spec.normalize();
    debug_assert_eq!(shift, a as i64);
    debug_assert!(is_core_bipartition(&la, &mu, s, 0, a as i64));
    debug_assert!(is_core_bipartition(&la, &mu, t, 0, a as i64));
    Ok((la, mu))
}

/// Encodes a bipartition of `C_{(s|0,a)} \cap C_{(t|0,a)}` as its cyclic
/// word.
pub fn aa_encode(p: &Partition, q: &Partition, s: u64, t: u64, a: u64) -> Result<CyclicWord> {
    walk_checks(s, t)?;
    if a >= s || s > t {
        return Err(Error::Precondition("need 0 <= a < s <= t".into()));
    }
    if !is_core_bipartition(p, q, s, 0, a as i64) || !is_core_bipartition(p, q, t, 0, a as i64) {
        return Err(Error::Precondition(format!(
            "({p}, {q}) does not lie in the ({s},{t})-charge-{a} set"
        )));
    }
    let (si, ti) = (s as i64, t as i64);
    let shifted_q = ShiftedBetaSet::new(q, a as i64);
    let window = shifted_q.tail_start().min(-(p.len() as i64));
    let boxes: BTreeSet<i64> = shifted_q
        .members_down_to(window)
        .into_iter()
        .filter(|&n| !p.beta_contains(n))
        .collect();
    debug_assert_eq!(boxes.len() as u64, a);
    let sset = p.s_set(s)?;
    let start = *sset
        .reps()
        .iter()
        .find(|r| !boxes.contains(r))
        .expect("a < s leaves a box-free class");
    let mut base = start;
    let mut letters = Vec::new();
    let mut lattice_steps = 0;
    while lattice_steps < s + t {
        if p.beta_contains(base - ti) {
            letters.push(Letter::R);
            base += si;
            lattice_steps += 1;
        } else {
            let x = base - ti;
            if boxes.contains(&x) {
                letters.push(Letter::B);
                base = x + si;
                lattice_steps += 2;
            } else {
                letters.push(Letter::D);
                base = x;
                lattice_steps += 1;
            }
        }
    }
    debug_assert_eq!(base, start);
    Ok(CyclicWord::new(letters))
}

/// Members of `C_{(s|0,a)} \cap C_{(t|0,a)}`, decoded from every
/// necklace, sorted.
pub fn aa_members(s: u64, t: u64, a: u64) -> Result<Vec<(Partition, Partition)>> {
    if s > t || a >= s {
        return Err(Error::Precondition("need 0 <= a < s <= t".into()));
    }
    let mut out: Vec<(Partition, Partition)> = necklaces(a, s - a, t - a)
        .iter()
        .map(|w| aa_decode(w, s, t, a))
        .collect::<Result<_>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

/// The exact mean size of a non-empty list of multipartitions.
pub fn average_size(members: &[Multipartition]) -> Result<BigRational> {
    if members.is_empty() {
        return Err(Error::Precondition("average of an empty list".into()));
    }
    let total: BigInt = members.iter().map(|m| BigInt::from(m.size())).sum();
    Ok(BigRational::new(total, BigInt::from(members.len())))
}

fn ratio(numerator: i128) -> BigRational {
    BigRational::new(BigInt::from(numerator), BigInt::from(12))
}

/// Conjectured average size in `C_{(s|0,a)} \cap C_{(s|0,b)}`:
/// `(s+1)(a(s-a) + b(s-b) + 1 - s)/12`.
pub fn ss_conjecture(s: u64, a: u64, b: u64) -> Result<BigRational> {
    check_charge("a", a, s)?;
    check_charge("b", b, s)?;
    check_coprime("s and a-b", s, a as i64 - b as i64)?;
    let (s, a, b) = (s as i128, a as i128, b as i128);
    Ok(ratio((s + 1) * (a * (s - a) + b * (s - b) + 1 - s)))
}

/// Conjectured average size in `C_{(s|0,a)} \cap C_{(0|0,b)}`:
/// `((s+1)a(s-a) + (s-1)(b-1)(b+s+1))/12`.
pub fn t0_conjecture(s: u64, a: u64, b: u64) -> Result<BigRational> {
    check_charge("a", a, s)?;
    check_coprime("s and a-b", s, a as i64 - b as i64)?;
    let (s, a, b) = (s as i128, a as i128, b as i128);
    Ok(ratio((s + 1) * a * (s - a) + (s - 1) * (b - 1) * (b + s + 1)))
}

/// Conjectured average size in `C_{(s|0,a)} \cap C_{(t|0,a)}`:
/// `((s-1)(t-1)(s+t-2a+1) - 2a^2 + 2a)/12`.
pub fn aa_conjecture(s: u64, t: u64, a: u64) -> Result<BigRational> {
    if s > t {
        return Err(Error::Precondition("need s <= t".into()));
    }
    check_charge("a", a, s)?;
    check_coprime("s and t", s, t as i64)?;
    let (s, t, a) = (s as i128, t as i128, a as i128);
    Ok(ratio((s - 1) * (t - 1) * (s + t - 2 * a + 1) - 2 * a * a + 2 * a))
}

/// Formats a rational for display: integer when exact, `p/q` otherwise.
pub fn rational_to_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses counting parameters `s,t,a[,b]` style lists.
pub fn parse_params(text: &str) -> Result<Vec<u64>> {
    text.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad parameter {tok:?}")))
        })
        .collect()
}
