//! The two sign-reversing involutions on chains of ideals.
//!
//! Both act on chains `n_1 ⊂ .. ⊂ n_k` with the zero ideal `n_0` implicit,
//! change the length by one, and keep the chain stabilizer, so chains outside
//! the abelian (resp. radical) subcomplex cancel in pairs in any alternating
//! sum of a function of the stabilizer.

use std::fmt;

use crate::chain::{chain_stabilizer_type, Chain};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::root_system::RootSystem;

/// Which involution to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pairing {
    /// Acts on chains with a nonabelian member.
    NonAbelian,
    /// Acts on chains with a member that is not a parabolic nilradical.
    NonRadical,
}

impl Pairing {
    pub const BOTH: [Pairing; 2] = [Pairing::NonAbelian, Pairing::NonRadical];

    /// Name of the domain, as used on the command line.
    pub fn domain_name(self) -> &'static str {
        match self {
            Pairing::NonAbelian => "ci-minus-ca",
            Pairing::NonRadical => "ci-minus-cr",
        }
    }

    pub fn parse(s: &str) -> Option<Pairing> {
        match s.to_ascii_lowercase().as_str() {
            "ci-minus-ca" => Some(Pairing::NonAbelian),
            "ci-minus-cr" => Some(Pairing::NonRadical),
            _ => None,
        }
    }

    pub fn in_domain(self, rs: &RootSystem, chain: &Chain) -> bool {
        match self {
            Pairing::NonAbelian => chain.members().iter().any(|n| !n.is_abelian(rs)),
            Pairing::NonRadical => chain.members().iter().any(|n| !n.is_radical_member(rs)),
        }
    }

    pub fn apply(self, rs: &RootSystem, chain: &Chain) -> Result<Chain> {
        match self {
            Pairing::NonAbelian => pair_nonabelian(rs, chain),
            Pairing::NonRadical => pair_nonradical(rs, chain),
        }
    }

    /// Applies the pairing and evaluates each of its laws on this chain.
    pub fn check_laws(self, rs: &RootSystem, chain: &Chain) -> Result<LawReport> {
        let paired = self.apply(rs, chain)?;
        let involution = match self.apply(rs, &paired) {
            Ok(back) => back == *chain,
            Err(_) => false,
        };
        let length_step = paired.len() + 1 == chain.len() || chain.len() + 1 == paired.len();
        let stabilizer = chain_stabilizer_type(rs, &paired) == chain_stabilizer_type(rs, chain);
        let domain = self.in_domain(rs, &paired);
        let extra = match self {
            Pairing::NonAbelian => paired.top() == chain.top(),
            Pairing::NonRadical => {
                let (_, n, hull) = first_nonradical(rs, chain).expect("chain is in the domain");
                n.normalizer_type(rs) == hull.normalizer_type(rs) && n.is_subset(&hull)
            }
        };
        Ok(LawReport {
            pairing: self,
            paired,
            involution,
            length_step,
            stabilizer,
            domain,
            extra,
        })
    }
}

/// Outcome of [`Pairing::check_laws`] on one chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawReport {
    pub pairing: Pairing,
    pub paired: Chain,
    /// Applying the pairing twice returns the input.
    pub involution: bool,
    /// Lengths differ by exactly one.
    pub length_step: bool,
    /// Stabilizer types agree.
    pub stabilizer: bool,
    /// The partner lies in the same complement set.
    pub domain: bool,
    /// Non-abelian pairing: the top member is kept. Non-radical pairing: the
    /// first non-radical member has the same normalizer as its hull and lies
    /// inside it.
    pub extra: bool,
}

impl LawReport {
    pub fn all_hold(&self) -> bool {
        self.involution && self.length_step && self.stabilizer && self.domain && self.extra
    }

    pub fn laws(&self) -> [(&'static str, bool); 5] {
        let extra = match self.pairing {
            Pairing::NonAbelian => "top member preserved",
            Pairing::NonRadical => "normalizer of member equals normalizer of its hull",
        };
        [
            ("pairing twice is the identity", self.involution),
            ("length changes by one", self.length_step),
            ("stabilizer type preserved", self.stabilizer),
            ("partner stays in the domain", self.domain),
            (extra, self.extra),
        ]
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, ok) in self.laws() {
            writeln!(f, "  {:<52} {}", name, if ok { "ok" } else { "FAILED" })?;
        }
        Ok(())
    }
}

/// Pairs a chain whose top member is nonabelian.
///
/// With `d = [n_k, n_k]` and `j` minimal with `d ⊆ n_j`, the candidate
/// `n_{j-1} + d` is inserted below `n_j`, or `n_j` is removed when the two
/// coincide.
pub fn pair_nonabelian(rs: &RootSystem, chain: &Chain) -> Result<Chain> {
    let top = chain
        .top()
        .ok_or_else(|| Error::Domain("the empty chain has no nonabelian member".into()))?;
    let derived = top.derived(rs);
    if derived.is_zero() {
        return Err(Error::Domain(format!(
            "every member is abelian (top member {top} has zero derived ideal)"
        )));
    }
    let members = chain.members();
    // 0-based position of n_j; n_{j-1} is the member before it or zero.
    let j = members
        .iter()
        .position(|n| derived.is_subset(n))
        .expect("the derived ideal lies in the top member");
    let below = if j == 0 { Ideal::zero(rs) } else { members[j - 1] };
    let candidate = below.sum(&derived)?;

    let mut out = members.to_vec();
    if candidate == members[j] {
        out.remove(j);
    } else {
        out.insert(j, candidate);
    }
    Ok(Chain::new_unchecked(out))
}

/// Pairs a chain with a member that is not the nilradical of its normalizer.
///
/// With `i` minimal such that the hull `h = nil(Lie N_G(n_i))` differs from
/// `n_i`, and `j ≥ i` maximal with `h ⊄ n_j`, the member `n_{j+1}` is removed
/// when it equals `h + n_j`; otherwise `h + n_j` is inserted above `n_j`.
pub fn pair_nonradical(rs: &RootSystem, chain: &Chain) -> Result<Chain> {
    let (i, _, hull) = first_nonradical(rs, chain)
        .ok_or_else(|| Error::Domain("every member is the nilradical of its normalizer".into()))?;
    let members = chain.members();
    let j = (i..members.len())
        .rev()
        .find(|&j| !hull.is_subset(&members[j]))
        .expect("the hull is not contained in n_i");
    let candidate = hull.sum(&members[j])?;

    let mut out = members.to_vec();
    if j + 1 < members.len() && candidate == members[j + 1] {
        out.remove(j + 1);
    } else {
        out.insert(j + 1, candidate);
    }
    Ok(Chain::new_unchecked(out))
}

/// First member `n_i` that differs from its hull, with the hull.
fn first_nonradical(rs: &RootSystem, chain: &Chain) -> Option<(usize, Ideal, Ideal)> {
    chain.members().iter().enumerate().find_map(|(i, n)| {
        let hull = n.normalizer_type(rs).nilradical(rs);
        (hull != *n).then_some((i, *n, hull))
    })
}
