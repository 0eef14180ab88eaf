//! Chains of ad-nilpotent ideals of a fixed Borel subalgebra.
//!
//! The crate builds positive root systems from Cartan data, enumerates the
//! B-stable ideals of the nilradical as upper-closed root sets, walks the
//! simplicial complexes of chains of such ideals (all ideals, abelian ideals,
//! parabolic nilradicals) together with chains of standard parabolics, and
//! checks that the alternating sums of the universal stabilizer-valued
//! function agree across all of them and with the closed form
//! `sum_{I ⊆ S} (-1)^{|S \ I|} e_I`.
//!
//! Everything is combinatorial: a Lie bracket `[g_β, g_γ]` is taken to be
//! nonzero exactly when `β + γ` is a root (the characteristic-zero
//! structure-constant pattern).

pub mod chain;
pub mod cli;
pub mod error;
pub mod ideal;
pub mod literal;
pub mod pairing;
pub mod root_system;
pub mod sets;
pub mod sums;

pub use chain::{
    chain_stabilizer_type, corank, cp_to_cr, cr_to_cp, membership, Budget, Chain, ChainComplex, ChainTally, ChainView,
    ComplexKind, ParabolicChain,
};
pub use error::{Error, Result};
pub use ideal::{Ideal, IdealTable, ParabolicType};
pub use pairing::{pair_nonabelian, pair_nonradical, Pairing};
pub use root_system::{Family, Root, RootSystem, RootSystemSpec};
pub use sets::RootSet;
pub use sums::{
    alternating_sum, boolean_interval_check, closed_form_sum, verify, SumVector, VerificationReport, VerifyOptions,
};
