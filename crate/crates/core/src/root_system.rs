//! Positive root systems generated from Cartan matrices.
//!
//! Conventions:
//!
//! * Simple roots are numbered `1..=rank` in Bourbaki order and stored
//!   0-based internally.
//! * The Cartan matrix has entries `A[i][j] = <α_j, α_i^∨>`, so the pairing
//!   of a root `β = Σ c_j α_j` with `α_i^∨` is `Σ_j c_j A[i][j]`.
//! * `B_n` has its short simple root last, `C_n` its long simple root last,
//!   `F_4` has `α_1, α_2` long, and `G_2` has `α_1` short.
//! * Positive roots are listed by height, and within a height by coefficient
//!   vector in descending lexicographic order. This puts the simple root
//!   `α_i` at index `i - 1`.
//!
//! Roots are generated by height using root strings: for a positive root
//! `β ≠ α_i`, the `α_i`-string through `β` is `β - pα_i, .., β + qα_i` with
//! `p - q = <β, α_i^∨>`. Every `β - kα_i` with `k ≤ p` is positive (a root
//! other than `±α_i` has coefficients of one sign), so `p` is read off the
//! roots already found and `β + α_i` is a root iff `q ≥ 1`.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::sets::{RootSet, MAX_ROOTS};

/// Positive-root budget for systems built without the large-system override.
pub const DEFAULT_ROOT_LIMIT: usize = 64;

/// Widest rank a parabolic-type mask can hold.
pub const MAX_RANK: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            "E" | "e" => Ok(Family::E),
            "F" | "f" => Ok(Family::F),
            "G" | "g" => Ok(Family::G),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A validated Cartan type `X_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RootSystemSpec {
    family: Family,
    rank: u8,
}

impl RootSystemSpec {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            let expected = match family {
                Family::A => "rank >= 1",
                Family::B => "rank >= 2",
                Family::C => "rank >= 3",
                Family::D => "rank >= 4",
                Family::E => "rank 6, 7 or 8",
                Family::F => "rank 4",
                Family::G => "rank 2",
            };
            return Err(Error::InvalidSpec {
                family: family.letter(),
                rank,
                reason: format!("family {family} requires {expected}"),
            });
        }
        if rank > MAX_RANK {
            return Err(Error::InvalidSpec {
                family: family.letter(),
                rank,
                reason: format!("rank exceeds the supported maximum of {MAX_RANK}"),
            });
        }
        Ok(RootSystemSpec {
            family,
            rank: rank as u8,
        })
    }

    /// Parses a family letter and rank, e.g. `("B", 3)`.
    pub fn parse(family: &str, rank: usize) -> Result<Self> {
        RootSystemSpec::new(family.parse()?, rank)
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank as usize
    }

    /// Number of positive roots by the classical formulas.
    pub fn positive_root_count(self) -> usize {
        let n = self.rank();
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }

    /// Whether the system is only available with the large-system override.
    pub fn is_large(self) -> bool {
        self.positive_root_count() > DEFAULT_ROOT_LIMIT || (self.family == Family::E && self.rank() >= 7)
    }

    /// Cartan matrix with `A[i][j] = <α_j, α_i^∨>`.
    pub fn cartan_matrix(self) -> Vec<Vec<i32>> {
        let n = self.rank();
        let mut a = vec![vec![0i32; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.family {
            Family::A | Family::B | Family::C | Family::F | Family::G => {
                for i in 0..n.saturating_sub(1) {
                    link(i, i + 1);
                }
            }
            Family::D => {
                for i in 0..n - 2 {
                    link(i, i + 1);
                }
                link(n - 3, n - 1);
            }
            Family::E => {
                let edges = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)];
                for &(i, j) in edges.iter().filter(|&&(i, j)| i < n && j < n) {
                    link(i, j);
                }
            }
        }
        // Off-diagonal -2/-3 entries sit in the row of the short root.
        match self.family {
            Family::B => a[n - 1][n - 2] = -2,
            Family::C => a[n - 2][n - 1] = -2,
            Family::F => a[2][1] = -2,
            Family::G => a[0][1] = -3,
            _ => {}
        }
        a
    }
}

impl fmt::Display for RootSystemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// A positive root as a coefficient vector over the simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Root {
    coeffs: Vec<i32>,
    height: i32,
}

impl Root {
    pub fn new(coeffs: Vec<i32>) -> Self {
        let height = coeffs.iter().sum();
        Root { coeffs, height }
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut coeffs = vec![0; rank];
        coeffs[i] = 1;
        Root { coeffs, height: 1 }
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.coeffs
    }

    pub fn height(&self) -> i32 {
        self.height
    }

    /// Simple indices with nonzero coefficient, as a bitmask.
    pub fn support_mask(&self) -> u16 {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .fold(0u16, |m, (i, _)| m | (1 << i))
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// The positive roots of a fixed type with constant-time arithmetic lookups.
///
/// Immutable after construction.
#[derive(Clone, Debug)]
pub struct RootSystem {
    spec: RootSystemSpec,
    cartan: Vec<Vec<i32>>,
    roots: Vec<Root>,
    index: HashMap<Vec<i32>, usize>,
    /// `addition[a * n + b]` = index of `root(a) + root(b)`.
    addition: Vec<Option<u8>>,
    /// `step_up[a * rank + i]` = index of `root(a) + α_i`.
    step_up: Vec<Option<u8>>,
    /// `step_down[a * rank + i]` = index of `root(a) - α_i`.
    step_down: Vec<Option<u8>>,
    support: Vec<u16>,
    /// `partners[a]` = roots `b` with `root(a) + root(b)` a root.
    partners: Vec<RootSet>,
}

impl RootSystem {
    /// Builds the positive system, refusing types beyond the default size gate
    /// (more than 64 positive roots, or `E_7`/`E_8`).
    pub fn build(spec: RootSystemSpec) -> Result<Self> {
        if spec.is_large() {
            return Err(Error::InvalidSpec {
                family: spec.family.letter(),
                rank: spec.rank(),
                reason: format!(
                    "{} positive roots exceeds the default limit; pass the large-system override",
                    spec.positive_root_count()
                ),
            });
        }
        RootSystem::build_unrestricted(spec)
    }

    /// Builds any type whose positive roots fit a [`crate::RootSet`].
    pub fn build_unrestricted(spec: RootSystemSpec) -> Result<Self> {
        if spec.positive_root_count() > MAX_ROOTS {
            return Err(Error::InvalidSpec {
                family: spec.family.letter(),
                rank: spec.rank(),
                reason: format!(
                    "{} positive roots exceeds the hard limit of {MAX_ROOTS}",
                    spec.positive_root_count()
                ),
            });
        }
        Ok(RootSystem::generate(spec))
    }

    /// Convenience for `build(RootSystemSpec::parse(family, rank)?)`.
    pub fn of(family: &str, rank: usize) -> Result<Self> {
        RootSystem::build(RootSystemSpec::parse(family, rank)?)
    }

    fn generate(spec: RootSystemSpec) -> Self {
        let rank = spec.rank();
        let cartan = spec.cartan_matrix();
        let pairing = |coeffs: &[i32], i: usize| -> i32 { coeffs.iter().zip(&cartan[i]).map(|(c, a)| c * a).sum() };

        let mut found: HashSet<Vec<i32>> = HashSet::new();
        let mut all: Vec<Vec<i32>> = Vec::new();
        let mut layer: Vec<Vec<i32>> = (0..rank).map(|i| Root::simple(rank, i).coeffs).collect();
        for r in &layer {
            found.insert(r.clone());
        }
        while !layer.is_empty() {
            let mut next = Vec::new();
            for beta in &layer {
                for i in 0..rank {
                    if beta.iter().enumerate().all(|(j, &c)| c == i32::from(j == i)) {
                        continue;
                    }
                    let mut p = 0;
                    let mut probe = beta.clone();
                    loop {
                        probe[i] -= 1;
                        if probe[i] < 0 || !found.contains(&probe) {
                            break;
                        }
                        p += 1;
                    }
                    let q = p - pairing(beta, i);
                    if q >= 1 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if found.insert(up.clone()) {
                            next.push(up);
                        }
                    }
                }
            }
            all.append(&mut layer);
            layer = next;
        }

        let mut roots: Vec<Root> = all.into_iter().map(Root::new).collect();
        roots.sort_by(|a, b| a.height.cmp(&b.height).then_with(|| b.coeffs.cmp(&a.coeffs)));
        debug_assert_eq!(roots.len(), spec.positive_root_count());

        let index: HashMap<Vec<i32>, usize> = roots.iter().enumerate().map(|(k, r)| (r.coeffs.clone(), k)).collect();
        let n = roots.len();
        let mut addition = vec![None; n * n];
        for a in 0..n {
            for b in 0..n {
                let sum: Vec<i32> = roots[a]
                    .coeffs
                    .iter()
                    .zip(&roots[b].coeffs)
                    .map(|(x, y)| x + y)
                    .collect();
                addition[a * n + b] = index.get(&sum).map(|&k| k as u8);
            }
        }
        let mut step_up = vec![None; n * rank];
        let mut step_down = vec![None; n * rank];
        for a in 0..n {
            for i in 0..rank {
                let mut c = roots[a].coeffs.clone();
                c[i] += 1;
                step_up[a * rank + i] = index.get(&c).map(|&k| k as u8);
                c[i] -= 2;
                step_down[a * rank + i] = index.get(&c).map(|&k| k as u8);
            }
        }
        let support = roots.iter().map(Root::support_mask).collect();
        let partners = (0..n)
            .map(|a| (0..n).filter(|&b| addition[a * n + b].is_some()).collect())
            .collect();

        RootSystem {
            spec,
            cartan,
            roots,
            index,
            addition,
            step_up,
            step_down,
            support,
            partners,
        }
    }

    pub fn spec(&self) -> RootSystemSpec {
        self.spec
    }

    pub fn rank(&self) -> usize {
        self.spec.rank()
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, index: usize) -> Result<&Root> {
        self.roots.get(index).ok_or(Error::RootIndexOutOfRange {
            index,
            len: self.roots.len(),
        })
    }

    pub fn index_of(&self, coeffs: &[i32]) -> Option<usize> {
        self.index.get(coeffs).copied()
    }

    pub fn highest_root(&self) -> &Root {
        self.roots.last().expect("root systems are nonempty")
    }

    /// Index of `root(a) + root(b)` if that is a positive root.
    pub fn add_roots(&self, a: usize, b: usize) -> Result<Option<usize>> {
        self.check_root(a)?;
        self.check_root(b)?;
        Ok(self.add_unchecked(a, b))
    }

    /// Index of `root(b) - α_i` if that is a positive root.
    pub fn subtract_simple(&self, b: usize, i: usize) -> Result<Option<usize>> {
        self.check_root(b)?;
        self.check_simple(i)?;
        Ok(self.step_down_unchecked(b, i))
    }

    /// Index of `root(b) + α_i` if that is a positive root.
    pub fn add_simple(&self, b: usize, i: usize) -> Result<Option<usize>> {
        self.check_root(b)?;
        self.check_simple(i)?;
        Ok(self.step_up_unchecked(b, i))
    }

    #[inline]
    pub(crate) fn add_unchecked(&self, a: usize, b: usize) -> Option<usize> {
        self.addition[a * self.roots.len() + b].map(usize::from)
    }

    #[inline]
    pub(crate) fn step_up_unchecked(&self, b: usize, i: usize) -> Option<usize> {
        self.step_up[b * self.rank() + i].map(usize::from)
    }

    #[inline]
    pub(crate) fn step_down_unchecked(&self, b: usize, i: usize) -> Option<usize> {
        self.step_down[b * self.rank() + i].map(usize::from)
    }

    /// Roots whose sum with `root(a)` is again a root.
    #[inline]
    pub fn sum_partners(&self, a: usize) -> RootSet {
        self.partners[a]
    }

    /// Support of `root(index)` as a mask over simple indices.
    #[inline]
    pub fn support_mask(&self, index: usize) -> u16 {
        self.support[index]
    }

    /// Mask with one bit per simple root.
    pub fn simple_mask(&self) -> u16 {
        ((1u32 << self.rank()) - 1) as u16
    }

    fn check_root(&self, index: usize) -> Result<()> {
        if index < self.roots.len() {
            Ok(())
        } else {
            Err(Error::RootIndexOutOfRange {
                index,
                len: self.roots.len(),
            })
        }
    }

    fn check_simple(&self, index: usize) -> Result<()> {
        if index < self.rank() {
            Ok(())
        } else {
            Err(Error::SimpleIndexOutOfRange {
                index,
                rank: self.rank(),
            })
        }
    }
}
