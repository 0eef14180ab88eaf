//! Chains of ideals and of standard parabolics, and their enumeration.
//!
//! A chain never stores the zero ideal: `n_1 ⊂ .. ⊂ n_k` stands for
//! `{0} ⊂ n_1 ⊂ .. ⊂ n_k` and has length `k`. Dually a parabolic chain
//! `I_1 ⊂ .. ⊂ I_k` consists of proper subsets of `S`, with `G = P_S` as the
//! implicit top. The empty chain has length zero in both species.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{Ideal, IdealTable, ParabolicType};
use crate::root_system::RootSystem;
use crate::sums::SumVector;

/// The complexes that can be enumerated at a fixed Borel.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ComplexKind {
    /// Chains of ideals of `b` inside `nil(b)`.
    CI,
    /// Chains of abelian ideals.
    CA,
    /// Chains of parabolic nilradicals.
    CR,
    /// Chains of proper standard parabolics.
    CP,
}

impl ComplexKind {
    pub const ALL: [ComplexKind; 4] = [ComplexKind::CI, ComplexKind::CA, ComplexKind::CR, ComplexKind::CP];

    pub fn name(self) -> &'static str {
        match self {
            ComplexKind::CI => "CI",
            ComplexKind::CA => "CA",
            ComplexKind::CR => "CR",
            ComplexKind::CP => "CP",
        }
    }

    pub fn parse(s: &str) -> Option<ComplexKind> {
        match s.to_ascii_lowercase().as_str() {
            "ci" => Some(ComplexKind::CI),
            "ca" => Some(ComplexKind::CA),
            "cr" => Some(ComplexKind::CR),
            "cp" => Some(ComplexKind::CP),
            _ => None,
        }
    }
}

impl fmt::Display for ComplexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A strictly increasing sequence of nonzero ideals.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Chain {
    members: Vec<Ideal>,
}

impl Chain {
    pub fn new(members: Vec<Ideal>) -> Result<Self> {
        for (k, m) in members.iter().enumerate() {
            if m.is_zero() {
                return Err(Error::InvalidChain(format!("member {} is the zero ideal", k + 1)));
            }
            if m.system() != members[0].system() {
                return Err(Error::MismatchedSystems {
                    left: members[0].system().to_string(),
                    right: m.system().to_string(),
                });
            }
        }
        for (k, w) in members.windows(2).enumerate() {
            if !w[0].is_proper_subset(&w[1]) {
                return Err(Error::InvalidChain(format!(
                    "member {} = {} is not properly contained in member {} = {}",
                    k + 1,
                    w[0],
                    k + 2,
                    w[1]
                )));
            }
        }
        Ok(Chain { members })
    }

    pub(crate) fn new_unchecked(members: Vec<Ideal>) -> Self {
        debug_assert!(Chain::new(members.clone()).is_ok(), "invalid chain {members:?}");
        Chain { members }
    }

    pub fn empty() -> Self {
        Chain::default()
    }

    pub fn members(&self) -> &[Ideal] {
        &self.members
    }

    pub fn into_members(self) -> Vec<Ideal> {
        self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// The largest member.
    pub fn top(&self) -> Option<&Ideal> {
        self.members.last()
    }

    /// `(-1)^{|C|}`.
    pub fn sign(&self) -> i64 {
        if self.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn to_index_lists(&self) -> Vec<Vec<usize>> {
        self.members.iter().map(Ideal::indices).collect()
    }

    pub fn from_index_lists(rs: &RootSystem, lists: &[Vec<usize>]) -> Result<Self> {
        let members = lists
            .iter()
            .map(|l| Ideal::from_indices(rs, l))
            .collect::<Result<Vec<_>>>()?;
        Chain::new(members)
    }
}

impl fmt::Debug for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, m) in self.members.iter().enumerate() {
            if k > 0 {
                f.write_str(" < ")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str("]")
    }
}

/// A strictly increasing sequence of proper subsets of `S`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ParabolicChain {
    rank: usize,
    members: Vec<ParabolicType>,
}

impl ParabolicChain {
    pub fn new(rank: usize, members: Vec<ParabolicType>) -> Result<Self> {
        let full = ParabolicType::full(rank);
        for (k, j) in members.iter().enumerate() {
            if !j.is_subset(full) {
                return Err(Error::InvalidChain(format!(
                    "member {} = {j} is not a subset of the simple roots",
                    k + 1
                )));
            }
            if *j == full {
                return Err(Error::InvalidChain(format!(
                    "member {} is all of S; only proper parabolics are chain members",
                    k + 1
                )));
            }
        }
        for (k, w) in members.windows(2).enumerate() {
            if w[0] == w[1] || !w[0].is_subset(w[1]) {
                return Err(Error::InvalidChain(format!(
                    "member {} = {} is not properly contained in member {} = {}",
                    k + 1,
                    w[0],
                    k + 2,
                    w[1]
                )));
            }
        }
        Ok(ParabolicChain { rank, members })
    }

    pub fn empty(rank: usize) -> Self {
        ParabolicChain {
            rank,
            members: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn members(&self) -> &[ParabolicType] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// The smallest member, or `S` for the empty chain.
    pub fn stabilizer_type(&self) -> ParabolicType {
        self.members
            .first()
            .copied()
            .unwrap_or_else(|| ParabolicType::full(self.rank))
    }

    /// 1-based simple labels per member.
    pub fn to_label_lists(&self) -> Vec<Vec<usize>> {
        self.members.iter().map(|j| j.labels()).collect()
    }
}

impl fmt::Debug for ParabolicChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ParabolicChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, m) in self.members.iter().enumerate() {
            if k > 0 {
                f.write_str(" < ")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str("]")
    }
}

/// Whether an ideal chain lies in the complex `kind`.
pub fn membership(rs: &RootSystem, kind: ComplexKind, chain: &Chain) -> Result<bool> {
    match kind {
        ComplexKind::CI => Ok(true),
        ComplexKind::CA => Ok(chain.members().iter().all(|n| n.is_abelian(rs))),
        ComplexKind::CR => Ok(chain.members().iter().all(|n| n.is_radical_member(rs))),
        ComplexKind::CP => Err(Error::WrongChainSpecies(
            "CP holds chains of parabolics, not chains of ideals".into(),
        )),
    }
}

/// Type of `G_C`, the intersection of the members' normalizers (`S` for the
/// empty chain).
pub fn chain_stabilizer_type(rs: &RootSystem, chain: &Chain) -> ParabolicType {
    chain.members().iter().fold(ParabolicType::full(rs.rank()), |acc, n| {
        acc.intersection(n.normalizer_type(rs))
    })
}

/// Replaces each member of a chain of parabolic nilradicals by its
/// normalizer, reversing the order.
pub fn cr_to_cp(rs: &RootSystem, chain: &Chain) -> Result<ParabolicChain> {
    if let Some(k) = chain.members().iter().position(|n| !n.is_radical_member(rs)) {
        return Err(Error::Domain(format!(
            "member {} = {} is not the nilradical of its normalizer, so the chain is not in CR",
            k + 1,
            chain.members()[k]
        )));
    }
    let members = chain.members().iter().rev().map(|n| n.normalizer_type(rs)).collect();
    ParabolicChain::new(rs.rank(), members)
}

/// Replaces each parabolic by its nilradical, reversing the order.
pub fn cp_to_cr(rs: &RootSystem, chain: &ParabolicChain) -> Chain {
    Chain::new_unchecked(chain.members().iter().rev().map(|j| j.nilradical(rs)).collect())
}

/// `|S \ J|`.
pub fn corank(j: ParabolicType, rs: &RootSystem) -> usize {
    j.corank(rs.rank())
}

/// Caps the number of chains an enumeration may visit. Shared between
/// worker threads.
#[derive(Debug)]
pub struct Budget {
    limit: Option<u64>,
    used: AtomicU64,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget {
            limit: None,
            used: AtomicU64::new(0),
        }
    }

    pub fn limited(limit: u64) -> Self {
        Budget {
            limit: Some(limit),
            used: AtomicU64::new(0),
        }
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }

    fn charge(&self, n: u64) -> Result<()> {
        if n == 0 {
            return Ok(());
        }
        let before = self.used.fetch_add(n, Ordering::Relaxed);
        match self.limit {
            Some(limit) if before.saturating_add(n) > limit => Err(Error::ChainLimitExceeded(limit)),
            _ => Ok(()),
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::unlimited()
    }
}

/// Chain counts per length and the signed sum of stabilizer types.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainTally {
    rank: usize,
    total: u64,
    by_length: Vec<u64>,
    /// Indexed by stabilizer mask.
    signed: Vec<i64>,
}

impl ChainTally {
    pub fn new(rank: usize) -> Self {
        ChainTally {
            rank,
            total: 0,
            by_length: Vec::new(),
            signed: vec![0; 1 << rank],
        }
    }

    pub fn record(&mut self, len: usize, stabilizer: ParabolicType) -> Result<()> {
        if self.by_length.len() <= len {
            self.by_length.resize(len + 1, 0);
        }
        self.total = self.total.checked_add(1).ok_or(Error::Overflow("chain count"))?;
        let slot = &mut self.by_length[len];
        *slot = slot.checked_add(1).ok_or(Error::Overflow("chain count"))?;
        let entry = &mut self.signed[stabilizer.mask() as usize];
        *entry = if len.is_multiple_of(2) {
            entry.checked_add(1)
        } else {
            entry.checked_sub(1)
        }
        .ok_or(Error::Overflow("alternating sum"))?;
        Ok(())
    }

    pub fn merge(mut self, other: ChainTally) -> Result<ChainTally> {
        debug_assert_eq!(self.rank, other.rank);
        self.total = self
            .total
            .checked_add(other.total)
            .ok_or(Error::Overflow("chain count"))?;
        if self.by_length.len() < other.by_length.len() {
            self.by_length.resize(other.by_length.len(), 0);
        }
        for (a, b) in self.by_length.iter_mut().zip(&other.by_length) {
            *a = a.checked_add(*b).ok_or(Error::Overflow("chain count"))?;
        }
        for (a, b) in self.signed.iter_mut().zip(&other.signed) {
            *a = a.checked_add(*b).ok_or(Error::Overflow("alternating sum"))?;
        }
        Ok(self)
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    /// `by_length()[k]` chains have length `k`.
    pub fn by_length(&self) -> &[u64] {
        &self.by_length
    }

    pub fn sum_vector(&self) -> SumVector {
        SumVector::from_entries(
            self.signed
                .iter()
                .enumerate()
                .map(|(mask, &c)| (ParabolicType::from_mask(mask as u16), c)),
        )
    }
}

/// A chain as seen during enumeration.
pub struct ChainView<'a> {
    complex: &'a ChainComplex,
    path: &'a [u32],
    stabilizer: ParabolicType,
}

impl ChainView<'_> {
    pub fn len(&self) -> usize {
        self.path.len()
    }

    pub fn is_empty(&self) -> bool {
        self.path.is_empty()
    }

    /// Positions of the members in the complex's element list.
    pub fn path(&self) -> &[u32] {
        self.path
    }

    pub fn stabilizer_type(&self) -> ParabolicType {
        self.stabilizer
    }

    /// The chain of ideals; `None` for parabolic chains.
    pub fn to_chain(&self) -> Option<Chain> {
        self.complex
            .ideals
            .as_ref()
            .map(|ideals| Chain::new_unchecked(self.path.iter().map(|&k| ideals[k as usize]).collect()))
    }

    /// The chain of parabolics; `None` for ideal chains.
    pub fn to_parabolic_chain(&self) -> Option<ParabolicChain> {
        if self.complex.kind != ComplexKind::CP {
            return None;
        }
        Some(ParabolicChain {
            rank: self.complex.rank,
            members: self
                .path
                .iter()
                .map(|&k| ParabolicType::from_mask(self.complex.masks[k as usize]))
                .collect(),
        })
    }
}

/// One complex of chains over the fixed Borel, prepared for depth-first
/// enumeration of its inclusion DAG.
///
/// Chains come out in lexicographic order of their member positions, with
/// the empty chain first and every chain before its extensions.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    kind: ComplexKind,
    rank: usize,
    /// `Some` for ideal complexes.
    ideals: Option<Vec<Ideal>>,
    /// Normalizer type of each ideal, or the subset itself for CP.
    masks: Vec<u16>,
    successors: Vec<Vec<u32>>,
}

impl ChainComplex {
    pub fn new(rs: &RootSystem, kind: ComplexKind) -> Self {
        ChainComplex::from_table(rs, &IdealTable::new(rs), kind)
    }

    pub fn from_table(rs: &RootSystem, table: &IdealTable, kind: ComplexKind) -> Self {
        let rank = rs.rank();
        match kind {
            ComplexKind::CP => {
                let full = ParabolicType::full(rank);
                let subsets: Vec<ParabolicType> = ParabolicType::all(rank).into_iter().filter(|&j| j != full).collect();
                let successors = successors_by(&subsets, |a, b| a != b && a.is_subset(*b));
                ChainComplex {
                    kind,
                    rank,
                    ideals: None,
                    masks: subsets.iter().map(|j| j.mask()).collect(),
                    successors,
                }
            }
            _ => {
                let keep: Vec<usize> = (0..table.len())
                    .filter(|&k| !table.ideal(k).is_zero())
                    .filter(|&k| match kind {
                        ComplexKind::CA => table.is_abelian(k),
                        ComplexKind::CR => table.is_radical(k),
                        _ => true,
                    })
                    .collect();
                let ideals: Vec<Ideal> = keep.iter().map(|&k| *table.ideal(k)).collect();
                let masks = keep.iter().map(|&k| table.normalizer_type(k).mask()).collect();
                let successors = successors_by(&ideals, |a, b| a.is_proper_subset(b));
                ChainComplex {
                    kind,
                    rank,
                    ideals: Some(ideals),
                    masks,
                    successors,
                }
            }
        }
    }

    pub fn kind(&self) -> ComplexKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of vertices (possible chain members).
    pub fn vertex_count(&self) -> usize {
        self.masks.len()
    }

    /// Visits every chain in order. Returns the number visited.
    pub fn for_each<E, F>(&self, budget: &Budget, mut visit: F) -> Result<u64, E>
    where
        E: From<Error>,
        F: FnMut(&ChainView<'_>) -> Result<(), E>,
    {
        let full = ParabolicType::full(self.rank).mask();
        let mut walker = Walker {
            complex: self,
            budget,
            batch: 1,
            pending: 0,
            visited: 0,
        };
        let mut path = Vec::new();
        walker.emit(&path, full, &mut visit)?;
        for root in 0..self.vertex_count() as u32 {
            path.push(root);
            let stab = full & self.masks[root as usize];
            walker.emit(&path, stab, &mut visit)?;
            walker.walk(&mut path, stab, &mut visit)?;
            path.pop();
        }
        walker.flush().map_err(E::from)?;
        Ok(walker.visited)
    }

    /// Folds over every chain. With `parallel`, top-level branches run on the
    /// current rayon pool and their accumulators are merged; the result must
    /// not depend on merge order.
    pub fn fold<T, I, V, M>(&self, budget: &Budget, parallel: bool, init: I, visit: V, merge: M) -> Result<T>
    where
        T: Send,
        I: Fn() -> T + Sync,
        V: Fn(&mut T, &ChainView<'_>) -> Result<()> + Sync,
        M: Fn(T, T) -> Result<T> + Sync + Send,
    {
        if !parallel {
            let mut acc = init();
            self.for_each::<Error, _>(budget, |view| visit(&mut acc, view))?;
            return Ok(acc);
        }
        let full = ParabolicType::full(self.rank).mask();
        let mut head = init();
        visit(
            &mut head,
            &ChainView {
                complex: self,
                path: &[],
                stabilizer: ParabolicType::from_mask(full),
            },
        )?;
        budget.charge(1)?;
        let branches = (0..self.vertex_count() as u32)
            .into_par_iter()
            .map(|root| {
                let mut acc = init();
                let mut walker = Walker {
                    complex: self,
                    budget,
                    batch: 1024,
                    pending: 0,
                    visited: 0,
                };
                let mut path = vec![root];
                let stab = full & self.masks[root as usize];
                let mut f = |view: &ChainView<'_>| visit(&mut acc, view);
                walker.emit::<Error, _>(&path, stab, &mut f)?;
                walker.walk::<Error, _>(&mut path, stab, &mut f)?;
                walker.flush()?;
                Ok(acc)
            })
            .collect::<Result<Vec<T>>>()?;
        branches.into_iter().try_fold(head, &merge)
    }

    /// Counts and signed stabilizer sums over the whole complex.
    pub fn tally(&self, budget: &Budget, parallel: bool) -> Result<ChainTally> {
        let rank = self.rank;
        self.fold(
            budget,
            parallel,
            || ChainTally::new(rank),
            |t, view| t.record(view.len(), view.stabilizer_type()),
            ChainTally::merge,
        )
    }

    /// Every chain of ideals, materialized. Intended for small systems.
    pub fn collect_chains(&self) -> Result<Vec<Chain>> {
        let mut out = Vec::new();
        self.for_each::<Error, _>(&Budget::unlimited(), |v| {
            if let Some(c) = v.to_chain() {
                out.push(c);
            }
            Ok(())
        })?;
        Ok(out)
    }

    /// Every parabolic chain, materialized. Empty unless the kind is CP.
    pub fn collect_parabolic_chains(&self) -> Result<Vec<ParabolicChain>> {
        let mut out = Vec::new();
        self.for_each::<Error, _>(&Budget::unlimited(), |v| {
            if let Some(c) = v.to_parabolic_chain() {
                out.push(c);
            }
            Ok(())
        })?;
        Ok(out)
    }
}

fn successors_by<T>(elements: &[T], below: impl Fn(&T, &T) -> bool) -> Vec<Vec<u32>> {
    (0..elements.len())
        .map(|a| {
            (0..elements.len())
                .filter(|&b| below(&elements[a], &elements[b]))
                .map(|b| b as u32)
                .collect()
        })
        .collect()
}

struct Walker<'a> {
    complex: &'a ChainComplex,
    budget: &'a Budget,
    batch: u64,
    pending: u64,
    visited: u64,
}

impl Walker<'_> {
    fn emit<E, F>(&mut self, path: &[u32], stab: u16, visit: &mut F) -> Result<(), E>
    where
        E: From<Error>,
        F: FnMut(&ChainView<'_>) -> Result<(), E>,
    {
        self.pending += 1;
        self.visited += 1;
        if self.pending >= self.batch {
            self.flush().map_err(E::from)?;
        }
        visit(&ChainView {
            complex: self.complex,
            path,
            stabilizer: ParabolicType::from_mask(stab),
        })
    }

    fn walk<E, F>(&mut self, path: &mut Vec<u32>, stab: u16, visit: &mut F) -> Result<(), E>
    where
        E: From<Error>,
        F: FnMut(&ChainView<'_>) -> Result<(), E>,
    {
        let complex = self.complex;
        let last = *path.last().expect("walk starts below a member") as usize;
        for &next in &complex.successors[last] {
            path.push(next);
            let s = stab & complex.masks[next as usize];
            self.emit(path, s, visit)?;
            self.walk(path, s, visit)?;
            path.pop();
        }
        Ok(())
    }

    fn flush(&mut self) -> Result<()> {
        let n = std::mem::take(&mut self.pending);
        self.budget.charge(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> RootSystem {
        RootSystem::of("A", 2).unwrap()
    }

    fn chain(rs: &RootSystem, lists: &[&[usize]]) -> Chain {
        let lists: Vec<Vec<usize>> = lists.iter().map(|l| l.to_vec()).collect();
        Chain::from_index_lists(rs, &lists).unwrap()
    }

    fn ptype(idx: &[usize]) -> ParabolicType {
        ParabolicType::from_indices(16, idx).unwrap()
    }

    fn count(rs: &RootSystem, kind: ComplexKind) -> u64 {
        ChainComplex::new(rs, kind)
            .for_each::<Error, _>(&Budget::unlimited(), |_| Ok(()))
            .unwrap()
    }

    #[test]
    fn chain_validation() {
        let rs = a2();
        let z = Ideal::zero(&rs);
        let top = Ideal::nilradical(&rs);
        assert!(matches!(Chain::new(vec![z]), Err(Error::InvalidChain(_))));
        assert!(matches!(Chain::new(vec![top, top]), Err(Error::InvalidChain(_))));
        let a = Ideal::from_indices(&rs, &[0, 2]).unwrap();
        let b = Ideal::from_indices(&rs, &[1, 2]).unwrap();
        assert!(Chain::new(vec![a, b]).is_err());
        assert!(Chain::new(vec![a, top]).is_ok());
    }

    #[test]
    fn membership_examples() {
        let rs = a2();
        let c = chain(&rs, &[&[2], &[0, 1, 2]]);
        assert!(!membership(&rs, ComplexKind::CA, &c).unwrap());
        for kind in [ComplexKind::CI, ComplexKind::CA, ComplexKind::CR] {
            assert!(membership(&rs, kind, &Chain::empty()).unwrap());
        }
        let r = chain(&rs, &[&[1, 2], &[0, 1, 2]]);
        assert!(membership(&rs, ComplexKind::CR, &r).unwrap());
        assert!(matches!(
            membership(&rs, ComplexKind::CP, &r),
            Err(Error::WrongChainSpecies(_))
        ));
    }

    #[test]
    fn chain_counts() {
        let a1 = RootSystem::of("A", 1).unwrap();
        assert_eq!(count(&a1, ComplexKind::CI), 2);
        let rs = a2();
        assert_eq!(count(&rs, ComplexKind::CI), 12);
        assert_eq!(count(&rs, ComplexKind::CA), 6);
        assert_eq!(count(&rs, ComplexKind::CR), 6);
        assert_eq!(count(&rs, ComplexKind::CP), 6);
    }

    #[test]
    fn enumeration_order_is_lexicographic() {
        let rs = a2();
        let shown: Vec<String> = ChainComplex::new(&rs, ComplexKind::CI)
            .collect_chains()
            .unwrap()
            .iter()
            .map(|c| c.to_string())
            .collect();
        assert_eq!(
            shown,
            [
                "[]",
                "[{2}]",
                "[{2} < {0,2}]",
                "[{2} < {0,2} < {0,1,2}]",
                "[{2} < {1,2}]",
                "[{2} < {1,2} < {0,1,2}]",
                "[{2} < {0,1,2}]",
                "[{0,2}]",
                "[{0,2} < {0,1,2}]",
                "[{1,2}]",
                "[{1,2} < {0,1,2}]",
                "[{0,1,2}]",
            ]
        );
    }

    #[test]
    fn stabilizer_examples() {
        let rs = a2();
        assert_eq!(chain_stabilizer_type(&rs, &Chain::empty()), ParabolicType::full(2));
        assert_eq!(chain_stabilizer_type(&rs, &chain(&rs, &[&[1, 2]])), ptype(&[0]));
        assert_eq!(
            chain_stabilizer_type(&rs, &chain(&rs, &[&[2], &[1, 2]])),
            ParabolicType::BOREL
        );
        assert_eq!(ParabolicChain::empty(2).stabilizer_type(), ParabolicType::full(2));
    }

    #[test]
    fn radical_parabolic_correspondence() {
        let rs = a2();
        let c = chain(&rs, &[&[1, 2], &[0, 1, 2]]);
        let d = cr_to_cp(&rs, &c).unwrap();
        assert_eq!(d.members(), &[ParabolicType::BOREL, ptype(&[0])]);
        assert_eq!(cp_to_cr(&rs, &d), c);
        assert_eq!(cr_to_cp(&rs, &Chain::empty()).unwrap(), ParabolicChain::empty(2));
        assert!(cp_to_cr(&rs, &ParabolicChain::empty(2)).is_empty());

        let crs = ChainComplex::new(&rs, ComplexKind::CR).collect_chains().unwrap();
        assert_eq!(crs.len(), 6);
        for c in &crs {
            assert_eq!(&cp_to_cr(&rs, &cr_to_cp(&rs, c).unwrap()), c);
        }
        let bad = chain(&rs, &[&[2]]);
        assert!(matches!(cr_to_cp(&rs, &bad), Err(Error::Domain(_))));
    }

    #[test]
    fn corank_examples() {
        let a3 = RootSystem::of("A", 3).unwrap();
        assert_eq!(corank(ParabolicType::full(3), &a3), 0);
        assert_eq!(corank(ParabolicType::BOREL, &a3), 3);
        assert_eq!(corank(ptype(&[0]), &a2()), 1);
    }

    #[test]
    fn parabolic_chain_validation() {
        assert!(ParabolicChain::new(2, vec![ParabolicType::full(2)]).is_err());
        assert!(ParabolicChain::new(2, vec![ptype(&[0]), ptype(&[1])]).is_err());
        assert!(ParabolicChain::new(2, vec![ptype(&[2])]).is_err());
        assert!(ParabolicChain::new(3, vec![ptype(&[]), ptype(&[0]), ptype(&[0, 2])]).is_ok());
    }

    #[test]
    fn budget_aborts() {
        let rs = RootSystem::of("A", 3).unwrap();
        let cx = ChainComplex::new(&rs, ComplexKind::CI);
        let err = cx.for_each::<Error, _>(&Budget::limited(10), |_| Ok(())).unwrap_err();
        assert_eq!(err, Error::ChainLimitExceeded(10));
        let err = cx.tally(&Budget::limited(10), true).unwrap_err();
        assert_eq!(err, Error::ChainLimitExceeded(10));
        let total = cx.for_each::<Error, _>(&Budget::unlimited(), |_| Ok(())).unwrap();
        assert!(cx.for_each::<Error, _>(&Budget::limited(total), |_| Ok(())).is_ok());
    }

    #[test]
    fn parallel_tally_matches_sequential() {
        let rs = RootSystem::of("B", 3).unwrap();
        for kind in ComplexKind::ALL {
            let cx = ChainComplex::new(&rs, kind);
            let seq = cx.tally(&Budget::unlimited(), false).unwrap();
            let par = cx.tally(&Budget::unlimited(), true).unwrap();
            assert_eq!(seq, par, "{kind}");
        }
    }

    #[test]
    fn tally_overflow_is_reported() {
        let mut t = ChainTally::new(1);
        t.total = u64::MAX;
        assert_eq!(t.record(0, ParabolicType::BOREL), Err(Error::Overflow("chain count")));
    }
}
