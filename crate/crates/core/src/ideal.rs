//! Ad-nilpotent ideals of the fixed Borel subalgebra.
//!
//! A `B`-submodule of `nil(b)` is a sum of positive root spaces, and under
//! the generic bracket pattern it is `b`-stable exactly when its root set is
//! closed under adding simple roots. Closure under simple steps already gives
//! closure under adding any positive root: if `β + γ` is a root with `γ` of
//! height above one, write `γ = γ' + α_i`; one of `β + α_i`, `β + γ'` is a
//! root by the Jacobi identity, and induction on height finishes.
//!
//! Normalizers are read off combinatorially. A standard parabolic `P_J`
//! contains `B`, so it normalizes an ideal `n` iff each negative simple root
//! space `g_{-α_i}`, `i ∈ J`, does. `[g_{-α_i}, g_β]` is nonzero iff
//! `β - α_i` is a root or `β = α_i` (landing in the torus). When `β ≠ α_i`,
//! `β - α_i` cannot have mixed signs, so it is either positive or not a
//! root at all. Hence `α_i ∈ J` iff `α_i ∉ n` and `β - α_i ∈ n` whenever
//! `β ∈ n` and `β - α_i` is a positive root.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::root_system::{RootSystem, RootSystemSpec};
use crate::sets::{write_braced, RootSet};

/// An upper-closed set of positive roots. The empty set is the zero ideal.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ideal {
    roots: RootSet,
    system: RootSystemSpec,
}

impl Ideal {
    /// Validates upper closure.
    pub fn new(rs: &RootSystem, roots: RootSet) -> Result<Self> {
        if let Some(index) = roots.max().filter(|&m| m >= rs.len()) {
            return Err(Error::RootIndexOutOfRange { index, len: rs.len() });
        }
        if !is_upper_closed(rs, roots) {
            return Err(Error::NotAnIdeal(roots.to_string()));
        }
        Ok(Ideal {
            roots,
            system: rs.spec(),
        })
    }

    pub fn from_indices(rs: &RootSystem, indices: &[usize]) -> Result<Self> {
        if let Some(&index) = indices.iter().find(|&&i| i >= rs.len()) {
            return Err(Error::RootIndexOutOfRange { index, len: rs.len() });
        }
        Ideal::new(rs, indices.iter().copied().collect())
    }

    pub(crate) fn new_unchecked(rs: &RootSystem, roots: RootSet) -> Self {
        debug_assert!(is_upper_closed(rs, roots), "{roots} is not upper-closed");
        Ideal {
            roots,
            system: rs.spec(),
        }
    }

    /// The zero ideal.
    pub fn zero(rs: &RootSystem) -> Self {
        Ideal {
            roots: RootSet::EMPTY,
            system: rs.spec(),
        }
    }

    /// `nil(b)` itself.
    pub fn nilradical(rs: &RootSystem) -> Self {
        Ideal {
            roots: RootSet::full(rs.len()),
            system: rs.spec(),
        }
    }

    pub fn roots(&self) -> RootSet {
        self.roots
    }

    pub fn system(&self) -> RootSystemSpec {
        self.system
    }

    pub fn is_zero(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.roots.len()
    }

    pub fn indices(&self) -> Vec<usize> {
        self.roots.iter().collect()
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.roots.is_subset(other.roots)
    }

    pub fn is_proper_subset(&self, other: &Ideal) -> bool {
        self.roots != other.roots && self.is_subset(other)
    }

    /// No two members (possibly equal) sum to a root.
    pub fn is_abelian(&self, rs: &RootSystem) -> bool {
        self.check_system(rs);
        self.roots
            .iter()
            .all(|b| rs.sum_partners(b).intersection(self.roots).is_empty())
    }

    /// Root set of `[n, n]`: all `β + γ ∈ Φ⁺` with `β, γ ∈ n`.
    pub fn derived(&self, rs: &RootSystem) -> Ideal {
        self.check_system(rs);
        let mut out = RootSet::EMPTY;
        for b in self.roots.iter() {
            for c in rs.sum_partners(b).intersection(self.roots).iter() {
                if let Some(s) = rs.add_unchecked(b, c) {
                    out.insert(s);
                }
            }
        }
        Ideal::new_unchecked(rs, out)
    }

    /// `a + b`, the union of the root sets.
    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if self.system != other.system {
            return Err(Error::MismatchedSystems {
                left: self.system.to_string(),
                right: other.system.to_string(),
            });
        }
        Ok(Ideal {
            roots: self.roots.union(other.roots),
            system: self.system,
        })
    }

    /// The type `J` with `N_G(n) = P_J`.
    pub fn normalizer_type(&self, rs: &RootSystem) -> ParabolicType {
        self.check_system(rs);
        let mut mask = 0u16;
        for i in 0..rs.rank() {
            if self.roots.contains(i) {
                continue;
            }
            let stable = self.roots.iter().all(|b| match rs.step_down_unchecked(b, i) {
                Some(lower) => self.roots.contains(lower),
                None => true,
            });
            if stable {
                mask |= 1 << i;
            }
        }
        ParabolicType(mask)
    }

    /// Whether `n = nil(Lie N_G(n))`. True for the zero ideal.
    pub fn is_radical_member(&self, rs: &RootSystem) -> bool {
        self.normalizer_type(rs).nilradical(rs).roots == self.roots
    }

    pub fn expanded(&self, rs: &RootSystem) -> String {
        let parts: Vec<String> = self.roots.iter().map(|i| rs.roots()[i].to_string()).collect();
        format!("{{{}}}", parts.join(", "))
    }

    #[inline]
    fn check_system(&self, rs: &RootSystem) {
        debug_assert_eq!(self.system, rs.spec(), "ideal used with a foreign root system");
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.system, self.roots)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.roots, f)
    }
}

/// Closure under `β ↦ β + α_i`.
pub fn is_upper_closed(rs: &RootSystem, roots: RootSet) -> bool {
    roots.iter().all(|b| {
        (0..rs.rank()).all(|i| match rs.step_up_unchecked(b, i) {
            Some(up) => roots.contains(up),
            None => true,
        })
    })
}

/// All ideals in canonical order (by dimension, then lexicographically on
/// the sorted root indices).
///
/// Roots are decided from the top of the canonical order down; a root may
/// join only once every `β + α_i` has, so each branch of the search ends in
/// a distinct ideal and no branch is wasted.
pub fn enumerate_ideals(rs: &RootSystem) -> Vec<Ideal> {
    fn descend(rs: &RootSystem, next: usize, current: RootSet, out: &mut Vec<RootSet>) {
        if next == 0 {
            out.push(current);
            return;
        }
        let b = next - 1;
        descend(rs, b, current, out);
        let covered = (0..rs.rank()).all(|i| match rs.step_up_unchecked(b, i) {
            Some(up) => current.contains(up),
            None => true,
        });
        if covered {
            let mut with = current;
            with.insert(b);
            descend(rs, b, with, out);
        }
    }

    let mut sets = Vec::new();
    descend(rs, rs.len(), RootSet::EMPTY, &mut sets);
    sets.sort_by(|a, b| a.canonical_cmp(*b));
    sets.into_iter().map(|s| Ideal::new_unchecked(rs, s)).collect()
}

/// A subset `J` of the simple roots, naming the standard parabolic `P_J`.
///
/// Stored 0-based; displayed with the 1-based simple-root labels.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ParabolicType(u16);

impl ParabolicType {
    /// The Borel subgroup.
    pub const BOREL: ParabolicType = ParabolicType(0);

    pub fn from_mask(mask: u16) -> Self {
        ParabolicType(mask)
    }

    /// From 0-based simple indices.
    pub fn from_indices(rank: usize, indices: &[usize]) -> Result<Self> {
        let mut mask = 0u16;
        for &i in indices {
            if i >= rank {
                return Err(Error::SimpleIndexOutOfRange { index: i, rank });
            }
            mask |= 1 << i;
        }
        Ok(ParabolicType(mask))
    }

    /// All of `S`, naming `G` itself.
    pub fn full(rank: usize) -> Self {
        ParabolicType(((1u32 << rank) - 1) as u16)
    }

    pub fn mask(self) -> u16 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        (self.0 >> i) & 1 == 1
    }

    pub fn is_subset(self, other: ParabolicType) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersection(self, other: ParabolicType) -> ParabolicType {
        ParabolicType(self.0 & other.0)
    }

    /// 0-based simple indices.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mask = self.0;
        (0..16).filter(move |i| (mask >> i) & 1 == 1)
    }

    /// 1-based simple-root labels, as used in all external output.
    pub fn labels(self) -> Vec<usize> {
        self.indices().map(|i| i + 1).collect()
    }

    /// `|S \ J|`.
    pub fn corank(self, rank: usize) -> usize {
        rank - (self.0 & ParabolicType::full(rank).0).count_ones() as usize
    }

    /// Root set of `nil(Lie P_J)`: positive roots whose support is not
    /// contained in `J`.
    pub fn nilradical(self, rs: &RootSystem) -> Ideal {
        let roots = (0..rs.len()).filter(|&b| rs.support_mask(b) & !self.0 != 0).collect();
        Ideal::new_unchecked(rs, roots)
    }

    /// All subsets of `S` for the given rank, in canonical order.
    pub fn all(rank: usize) -> Vec<ParabolicType> {
        let mut v: Vec<ParabolicType> = (0..1u32 << rank).map(|m| ParabolicType(m as u16)).collect();
        v.sort();
        v
    }
}

impl Ord for ParabolicType {
    /// By size, then lexicographically on the sorted indices.
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.indices().cmp(other.indices()))
    }
}

impl PartialOrd for ParabolicType {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ParabolicType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ParabolicType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_braced(f, self.labels().into_iter())
    }
}

/// `nilradical_of_parabolic` as a free function.
pub fn nilradical_of_parabolic(rs: &RootSystem, j: ParabolicType) -> Ideal {
    j.nilradical(rs)
}

/// Every ideal of a root system with the per-ideal data chain enumeration
/// needs.
#[derive(Clone, Debug)]
pub struct IdealTable {
    ideals: Vec<Ideal>,
    abelian: Vec<bool>,
    radical: Vec<bool>,
    normalizer: Vec<ParabolicType>,
}

impl IdealTable {
    pub fn new(rs: &RootSystem) -> Self {
        let ideals = enumerate_ideals(rs);
        let abelian = ideals.iter().map(|n| n.is_abelian(rs)).collect();
        let radical = ideals.iter().map(|n| n.is_radical_member(rs)).collect();
        let normalizer = ideals.iter().map(|n| n.normalizer_type(rs)).collect();
        IdealTable {
            ideals,
            abelian,
            radical,
            normalizer,
        }
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn ideal(&self, k: usize) -> &Ideal {
        &self.ideals[k]
    }

    pub fn is_abelian(&self, k: usize) -> bool {
        self.abelian[k]
    }

    pub fn is_radical(&self, k: usize) -> bool {
        self.radical[k]
    }

    pub fn normalizer_type(&self, k: usize) -> ParabolicType {
        self.normalizer[k]
    }

    pub fn position(&self, ideal: &Ideal) -> Option<usize> {
        self.ideals
            .binary_search_by(|probe| probe.roots().canonical_cmp(ideal.roots()))
            .ok()
    }
}
