//! Alternating sums over the chain complexes and the identities between them.
//!
//! Sums are taken with the universal coefficient function `J ↦ e_J`, valued
//! in the free abelian group on parabolic types. Any function of the
//! stabilizer into any abelian group factors through it, so equal
//! [`SumVector`]s give equal sums for every such function.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::chain::{chain_stabilizer_type, cp_to_cr, cr_to_cp, Budget, ChainComplex, ChainTally, ComplexKind};
use crate::error::{Error, Result};
use crate::ideal::{IdealTable, ParabolicType};
use crate::pairing::Pairing;
use crate::root_system::RootSystem;

/// Finitely supported integer combination of parabolic types. Zero entries
/// are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SumVector {
    entries: BTreeMap<ParabolicType, i64>,
}

impl SumVector {
    pub fn new() -> Self {
        SumVector::default()
    }

    /// Builds from `(type, coefficient)` pairs, adding repeated types.
    ///
    /// # Panics
    /// On `i64` overflow; use [`SumVector::checked_add_entry`] for untrusted
    /// input.
    pub fn from_entries(entries: impl IntoIterator<Item = (ParabolicType, i64)>) -> Self {
        let mut v = SumVector::new();
        for (j, c) in entries {
            v.checked_add_entry(j, c).expect("sum vector entry overflow");
        }
        v
    }

    pub fn checked_add_entry(&mut self, j: ParabolicType, c: i64) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        let slot = self.entries.entry(j).or_insert(0);
        *slot = slot.checked_add(c).ok_or(Error::Overflow("sum vector"))?;
        if *slot == 0 {
            self.entries.remove(&j);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &SumVector) -> Result<SumVector> {
        let mut out = self.clone();
        for (&j, &c) in &other.entries {
            out.checked_add_entry(j, c)?;
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &SumVector) -> Result<SumVector> {
        let mut out = self.clone();
        for (&j, &c) in &other.entries {
            out.checked_add_entry(j, c.checked_neg().ok_or(Error::Overflow("sum vector"))?)?;
        }
        Ok(out)
    }

    pub fn get(&self, j: ParabolicType) -> i64 {
        self.entries.get(&j).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (ParabolicType, i64)> + '_ {
        self.entries.iter().map(|(&j, &c)| (j, c))
    }

    /// Evaluates `Σ c_J f(J)`.
    pub fn specialize(&self, f: impl Fn(ParabolicType) -> i64) -> Result<i64> {
        self.iter().try_fold(0i64, |acc, (j, c)| {
            c.checked_mul(f(j))
                .and_then(|t| acc.checked_add(t))
                .ok_or(Error::Overflow("specialization"))
        })
    }
}

impl std::fmt::Display for SumVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("{ ")?;
        for (k, (j, c)) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{j}: {c:+}")?;
        }
        f.write_str(" }")
    }
}

impl Serialize for SumVector {
    /// Array of `[labels, coefficient]` pairs in canonical type order.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.entries.len()))?;
        for (j, c) in self.iter() {
            seq.serialize_element(&(j.labels(), c))?;
        }
        seq.end()
    }
}

/// `Σ_C (-1)^{|C|} e_{type(G_C)}` over the chains of one complex.
pub fn alternating_sum(rs: &RootSystem, kind: ComplexKind) -> Result<SumVector> {
    Ok(ChainComplex::new(rs, kind)
        .tally(&Budget::unlimited(), false)?
        .sum_vector())
}

/// `Σ_{I ⊆ S} (-1)^{|S \ I|} e_I`.
pub fn closed_form_sum(rs: &RootSystem) -> SumVector {
    closed_form_for_rank(rs.rank())
}

fn closed_form_for_rank(rank: usize) -> SumVector {
    SumVector::from_entries(
        ParabolicType::all(rank)
            .into_iter()
            .map(|i| (i, if i.corank(rank) % 2 == 0 { 1 } else { -1 })),
    )
}

/// For every proper `I ⊊ S`, the parabolic chains starting at `I` have
/// signed count `(-1)^{|S \ I|}`, and the empty chain contributes `+e_S`.
pub fn boolean_interval_check(rs: &RootSystem) -> Result<bool> {
    let tally = ChainComplex::new(rs, ComplexKind::CP).tally(&Budget::unlimited(), false)?;
    Ok(boolean_interval_holds(rs.rank(), &tally))
}

fn boolean_interval_holds(rank: usize, cp: &ChainTally) -> bool {
    let sums = cp.sum_vector();
    ParabolicType::all(rank).into_iter().all(|i| {
        let expected = if i.corank(rank) % 2 == 0 { 1 } else { -1 };
        sums.get(i) == expected
    })
}

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    /// Fold top-level branches on the current rayon pool.
    pub parallel: bool,
    /// Per-enumeration cap on visited chains.
    pub max_chains: Option<u64>,
}

impl VerifyOptions {
    fn budget(&self) -> Budget {
        match self.max_chains {
            Some(n) => Budget::limited(n),
            None => Budget::unlimited(),
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ChainCounts {
    pub total: u64,
    pub by_length: Vec<u64>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ComplexReport {
    pub complex: ComplexKind,
    /// Number of possible chain members.
    pub vertices: usize,
    pub chain_counts: ChainCounts,
    pub sum: SumVector,
}

/// Results of running one pairing over its whole domain.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct InvolutionSummary {
    pub domain: &'static str,
    pub chains_checked: u64,
    pub failures: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
    /// Signed stabilizer sum over the domain alone; zero when pairs cancel.
    pub domain_sum: SumVector,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Verdicts {
    pub ci_equals_ca: bool,
    pub ci_equals_cr: bool,
    pub cr_equals_cp: bool,
    pub cp_equals_closed_form: bool,
    pub five_way_identity: bool,
    pub nonabelian_involution: bool,
    pub nonradical_involution: bool,
    pub nonabelian_cancellation: bool,
    pub nonradical_cancellation: bool,
    pub radical_parabolic_bijection: bool,
    pub boolean_interval: bool,
}

impl Verdicts {
    pub fn all(&self) -> bool {
        self.iter().all(|(_, ok)| ok)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&'static str, bool)> {
        [
            ("ci_equals_ca", self.ci_equals_ca),
            ("ci_equals_cr", self.ci_equals_cr),
            ("cr_equals_cp", self.cr_equals_cp),
            ("cp_equals_closed_form", self.cp_equals_closed_form),
            ("five_way_identity", self.five_way_identity),
            ("nonabelian_involution", self.nonabelian_involution),
            ("nonradical_involution", self.nonradical_involution),
            ("nonabelian_cancellation", self.nonabelian_cancellation),
            ("nonradical_cancellation", self.nonradical_cancellation),
            ("radical_parabolic_bijection", self.radical_parabolic_bijection),
            ("boolean_interval", self.boolean_interval),
        ]
        .into_iter()
    }
}

/// Failures found while checking the radical/parabolic correspondence.
#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct BijectionSummary {
    pub radical_chains_checked: u64,
    pub parabolic_chains_checked: u64,
    pub failures: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    #[serde(rename = "type")]
    pub family: String,
    pub rank: usize,
    pub complexes: Vec<ComplexReport>,
    pub closed_form: SumVector,
    pub involutions: Vec<InvolutionSummary>,
    pub bijection: BijectionSummary,
    pub verdicts: Verdicts,
    pub notes: Vec<String>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn complex(&self, kind: ComplexKind) -> &ComplexReport {
        self.complexes
            .iter()
            .find(|c| c.complex == kind)
            .expect("every complex is reported")
    }

    pub fn verified(&self) -> bool {
        self.verdicts.all()
    }
}

pub const CLASS_LEVEL_NOTE: &str = "CI and CA sums are taken over chains at a fixed Borel \
subalgebra, not over G-conjugacy classes of chains: deciding conjugacy of ideals is not \
implemented. The pairings are G-equivariant, so the cancellation they exhibit is the \
chain-level form of the class-level identity. CR and CP chains at the fixed Borel are the \
unique standard representatives of their classes, so those sums are class-level sums.";

/// Runs every identity and law for one root system.
pub fn verify(rs: &RootSystem, opts: &VerifyOptions) -> Result<VerificationReport> {
    let start = Instant::now();
    let table = IdealTable::new(rs);
    let rank = rs.rank();

    let mut complexes = Vec::new();
    let mut tallies = Vec::new();
    for kind in ComplexKind::ALL {
        let cx = ChainComplex::from_table(rs, &table, kind);
        let tally = cx.tally(&opts.budget(), opts.parallel)?;
        complexes.push(ComplexReport {
            complex: kind,
            vertices: cx.vertex_count(),
            chain_counts: ChainCounts {
                total: tally.total(),
                by_length: tally.by_length().to_vec(),
            },
            sum: tally.sum_vector(),
        });
        tallies.push(tally);
    }
    let closed_form = closed_form_sum(rs);
    let sum_of = |k: ComplexKind| &complexes[k as usize].sum;

    let involutions = involution_suite(rs, &table, opts)?;
    let bijection = bijection_suite(rs, &table, opts)?;

    let ci_equals_ca = sum_of(ComplexKind::CI) == sum_of(ComplexKind::CA);
    let ci_equals_cr = sum_of(ComplexKind::CI) == sum_of(ComplexKind::CR);
    let cr_equals_cp = sum_of(ComplexKind::CR) == sum_of(ComplexKind::CP);
    let cp_equals_closed_form = *sum_of(ComplexKind::CP) == closed_form;
    let cancels = |p: usize, sub: ComplexKind| -> Result<bool> {
        let s = &involutions[p];
        let diff = sum_of(ComplexKind::CI).checked_sub(sum_of(sub))?;
        Ok(s.domain_sum.is_zero() && diff == s.domain_sum)
    };
    let verdicts = Verdicts {
        ci_equals_ca,
        ci_equals_cr,
        cr_equals_cp,
        cp_equals_closed_form,
        five_way_identity: ci_equals_ca && ci_equals_cr && cr_equals_cp && cp_equals_closed_form,
        nonabelian_involution: involutions[0].failures == 0,
        nonradical_involution: involutions[1].failures == 0,
        nonabelian_cancellation: cancels(0, ComplexKind::CA)?,
        nonradical_cancellation: cancels(1, ComplexKind::CR)?,
        radical_parabolic_bijection: bijection.failures == 0
            && tallies[ComplexKind::CR as usize].total() == tallies[ComplexKind::CP as usize].total(),
        boolean_interval: boolean_interval_holds(rank, &tallies[ComplexKind::CP as usize]),
    };

    Ok(VerificationReport {
        family: rs.spec().family().to_string(),
        rank,
        complexes,
        closed_form,
        involutions,
        bijection,
        verdicts,
        notes: vec![CLASS_LEVEL_NOTE.to_string()],
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

#[derive(Clone)]
struct LawAcc {
    checked: u64,
    failures: u64,
    first_failure: Option<String>,
    tally: ChainTally,
}

impl LawAcc {
    fn new(rank: usize) -> Self {
        LawAcc {
            checked: 0,
            failures: 0,
            first_failure: None,
            tally: ChainTally::new(rank),
        }
    }

    fn fail(&mut self, what: String) {
        self.failures += 1;
        if self.first_failure.is_none() {
            self.first_failure = Some(what);
        }
    }

    fn merge(self, other: LawAcc) -> Result<LawAcc> {
        Ok(LawAcc {
            checked: self.checked + other.checked,
            failures: self.failures + other.failures,
            first_failure: self.first_failure.or(other.first_failure),
            tally: self.tally.merge(other.tally)?,
        })
    }
}

/// Checks both pairings on every CI chain in their domains.
fn involution_suite(rs: &RootSystem, table: &IdealTable, opts: &VerifyOptions) -> Result<Vec<InvolutionSummary>> {
    let rank = rs.rank();
    let cx = ChainComplex::from_table(rs, table, ComplexKind::CI);
    let [na, nr] = cx.fold(
        &opts.budget(),
        opts.parallel,
        || [LawAcc::new(rank), LawAcc::new(rank)],
        |accs, view| {
            let chain = view.to_chain().expect("CI holds ideal chains");
            for (acc, pairing) in accs.iter_mut().zip(Pairing::BOTH) {
                if !pairing.in_domain(rs, &chain) {
                    continue;
                }
                acc.checked += 1;
                acc.tally.record(view.len(), view.stabilizer_type())?;
                match pairing.check_laws(rs, &chain) {
                    Ok(report) if report.all_hold() => {}
                    Ok(report) => acc.fail(format!("{chain} -> {}", report.paired)),
                    Err(e) => acc.fail(format!("{chain}: {e}")),
                }
            }
            Ok(())
        },
        |[a0, a1], [b0, b1]| Ok([a0.merge(b0)?, a1.merge(b1)?]),
    )?;
    Ok([na, nr]
        .into_iter()
        .zip(Pairing::BOTH)
        .map(|(acc, p)| InvolutionSummary {
            domain: p.domain_name(),
            chains_checked: acc.checked,
            failures: acc.failures,
            first_failure: acc.first_failure,
            domain_sum: acc.tally.sum_vector(),
        })
        .collect())
}

/// Round trips, lengths, stabilizers and order reversal between CR and CP.
fn bijection_suite(rs: &RootSystem, table: &IdealTable, opts: &VerifyOptions) -> Result<BijectionSummary> {
    let rank = rs.rank();
    let merge = |a: LawAcc, b: LawAcc| a.merge(b);

    let cr = ChainComplex::from_table(rs, table, ComplexKind::CR);
    let radical = cr.fold(
        &opts.budget(),
        opts.parallel,
        || LawAcc::new(rank),
        |acc, view| {
            acc.checked += 1;
            let c = view.to_chain().expect("CR holds ideal chains");
            let d = match cr_to_cp(rs, &c) {
                Ok(d) => d,
                Err(e) => {
                    acc.fail(format!("{c}: {e}"));
                    return Ok(());
                }
            };
            let stab = chain_stabilizer_type(rs, &c);
            let top_normalizer = c.top().map_or(ParabolicType::full(rank), |n| n.normalizer_type(rs));
            let reversed = c
                .members()
                .iter()
                .rev()
                .zip(d.members())
                .all(|(n, j)| n.normalizer_type(rs) == *j)
                && d.members().windows(2).all(|w| w[0] != w[1] && w[0].is_subset(w[1]));
            let ok = cp_to_cr(rs, &d) == c
                && d.len() == c.len()
                && d.stabilizer_type() == stab
                && stab == top_normalizer
                && stab == view.stabilizer_type()
                && reversed;
            if !ok {
                acc.fail(format!("{c} -> {d}"));
            }
            Ok(())
        },
        merge,
    )?;

    let cp = ChainComplex::from_table(rs, table, ComplexKind::CP);
    let parabolic = cp.fold(
        &opts.budget(),
        opts.parallel,
        || LawAcc::new(rank),
        |acc, view| {
            acc.checked += 1;
            let d = view.to_parabolic_chain().expect("CP holds parabolic chains");
            let c = cp_to_cr(rs, &d);
            let ok = match cr_to_cp(rs, &c) {
                Ok(back) => back == d && chain_stabilizer_type(rs, &c) == d.stabilizer_type(),
                Err(_) => false,
            };
            if !ok {
                acc.fail(format!("{d} -> {c}"));
            }
            Ok(())
        },
        merge,
    )?;

    Ok(BijectionSummary {
        radical_chains_checked: radical.checked,
        parabolic_chains_checked: parabolic.checked,
        failures: radical.failures + parabolic.failures,
        first_failure: radical.first_failure.or(parabolic.first_failure),
    })
}
