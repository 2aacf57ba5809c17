//! The affine symmetric group action on multipartitions.
//!
//! For a datum with modulus `s >= 2`, the generator indexed by a class
//! `i` of Z/sZ acts by simultaneously adding every addable node of
//! residue `i` and removing every removable node of residue `i`; each
//! generator is an involution. For `s = 0` the finitary symmetric group
//! acts, with one generator per integer. The set of `(s|c)`-cores is a
//! single orbit of the empty multipartition (there is no action for
//! `s = 1`), so orbit search below generates exactly the cores.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::multicore::{Datum, Multipartition};
use crate::partitions::Partition;

/// Applies the generator of residue class `i` (take `i` mod `s` when
/// `s > 0`; an arbitrary integer when `s = 0`).
pub fn act_generator(m: &Multipartition, d: &Datum, i: i64) -> Result<Multipartition> {
    if m.level() != d.level() {
        return Err(Error::LevelMismatch(m.level(), d.level()));
    }
    let s = d.modulus();
    if s == 1 {
        return Err(Error::Precondition(
            "no generator action is defined for modulus 1".into(),
        ));
    }
    let matches = |offset: i64, charge: i64| -> bool {
        let residue = offset + charge;
        if s == 0 {
            residue == i
        } else {
            residue.rem_euclid(s as i64) == i.rem_euclid(s as i64)
        }
    };
    let mut components = Vec::with_capacity(m.level());
    for (k, la) in m.components().iter().enumerate() {
        let charge = d.charge(k);
        let mut parts: Vec<u64> = la.parts().to_vec();
        parts.push(0); // room for the addable node in row len+1
        for (row, offset) in la.addable_nodes() {
            if matches(offset, charge) {
                parts[row - 1] += 1;
            }
        }
        for (row, offset) in la.removable_nodes() {
            if matches(offset, charge) {
                parts[row - 1] -= 1;
            }
        }
        components.push(Partition::new(parts)?);
    }
    Multipartition::new(components)
}

/// All `(s|c)`-cores of size at most `max_size`, generated as the orbit
/// closure of the empty multipartition and truncated by size.
///
/// Frontier states are expanded while their size stays within a buffer
/// above the ceiling (`s` extra nodes for `s >= 2`, `2l` for `s = 0`),
/// since one generator step can add several nodes at once. For `s = 0`
/// only generators indexed within `[min c - max_size - 1, max c +
/// max_size + 1]` can act on states below the ceiling.
pub fn orbit_members(d: &Datum, max_size: u64) -> Result<Vec<Multipartition>> {
    let s = d.modulus();
    if s == 1 {
        return Err(Error::Precondition(
            "modulus 1 has no orbit generation; the only core is empty".into(),
        ));
    }
    let generators: Vec<i64> = if s == 0 {
        let min_c = *d.charges().iter().min().unwrap();
        let max_c = *d.charges().iter().max().unwrap();
        (min_c - max_size as i64 - 1..=max_c + max_size as i64 + 1).collect()
    } else {
        (0..s as i64).collect()
    };
    let buffer = if s == 0 {
        2 * d.level().max(1) as u64
    } else {
        s
    };
    let limit = max_size + buffer;

    let start = Multipartition::empty(d.level());
    let mut visited: HashSet<Multipartition> = HashSet::new();
    visited.insert(start.clone());
    let mut queue = VecDeque::from([start]);
    while let Some(m) = queue.pop_front() {
        for &i in &generators {
            let next = act_generator(&m, d, i)?;
            if next.size() <= limit && !visited.contains(&next) {
                visited.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    let mut members: Vec<Multipartition> = visited
        .into_iter()
        .filter(|m| m.size() <= max_size)
        .collect();
    members.sort();
    Ok(members)
}
