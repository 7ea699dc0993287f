//! Exact highest-weight combinatorics for affine W-algebras.
//!
//! Blocks of category O for an affine W-algebra at a noncritical level are
//! controlled by double cosets of an *integral* affine Weyl group: the block
//! containing a highest weight is parametrized by `W_{f,λ} \ W_λ / W°_λ`,
//! Verma-to-Verma homs are detected by the Bruhat order on minimal-length
//! coset representatives, and a level flip `k ↦ -k - 2h∨`, `λ ↦ -λ - 2ρ`
//! matches negative-level posets with positive-level ones. This crate makes
//! all of that executable with exact rational arithmetic — no floats
//! anywhere.
//!
//! The pieces:
//!
//! - [`rootdata`]: validated Cartan/root tables for the simple types up to
//!   rank 8, finite Weyl actions on weights in fundamental coordinates.
//! - [`affine`]: levels, the affine Weyl group as `W_f ⋉ Λ`, affine real
//!   coroots, dot actions, and the level flip.
//! - [`integral`]: integrality progressions, simple integral coroots, the
//!   (anti)dominance tests and normalization.
//! - [`blocks`]: block enumeration as a poset of minimal double-coset
//!   representatives under Bruhat order.
//! - [`verma`]: hom-dimension oracles for Verma, co-Verma and Kac–Moody
//!   Verma modules, and the duality map between flipped posets.
//! - [`virasoro`]: closed-form central charges and conformal dimensions,
//!   with the `c ↦ 26 - c`, `Δ ↦ 1 - Δ` duality.
//! - [`cli`]: the `wlinkage` binary's subcommands and JSON/DOT reports.
//!
//! Start with the runnable examples in `examples/` — each demonstrates one
//! capability end to end.

pub mod affine;
pub mod blocks;
pub mod cli;
pub mod integral;
pub mod rootdata;
pub mod verma;
pub mod virasoro;

pub use affine::{
    affine_pairing, ff_flip, negate_naive, reflection_of, AffineCoroot, AffineWeylElement, Level,
    PairingValue,
};
pub use blocks::{
    antidominant_count, block_of, ds_survives, enumerate_block, enumerate_km_cosets,
    weight_class_normal_form, zhu_involution, BlockPoset, CosetKind, CosetRep,
};
pub use integral::{
    antidominantize, certified_search_bound, integral_progressions, integral_simple_system,
    is_antidominant, is_dominant, DegreeSet, IntegralSystem,
};
pub use rootdata::{build_root_datum, FiniteWeyl, LieType, Rational, RootDatum, Weight};
pub use verma::{
    coverma_hom_dim, ff_dual_verma, ff_poset_map, hom_dim, km_hom_dim, DualVermaDatum, HomAnswer,
    HomDirection,
};
pub use virasoro::{
    central_charge_general, central_charge_sl2, conformal_dim_minus, conformal_dim_plus,
    ff_dual_virasoro, VirasoroVerma,
};

/// Errors shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// The requested Lie type/rank pair is outside the supported tables.
    #[error("unsupported type/rank: {0}")]
    Unsupported(String),

    /// Vector lengths disagree with the rank of the root datum.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// The critical level k = -h∨ admits no linkage theory here.
    #[error("critical level k = -h_vee is rejected")]
    CriticalLevel,

    /// An operation needed a weight already normalized for the level sign.
    #[error("weight is not normalized ({0})")]
    NotNormalized(String),

    /// A translation part cannot act through a generic (irrational) level.
    #[error("generic level cannot evaluate a translation part exactly")]
    GenericTranslation,

    /// A certified answer is not possible within the given bounds.
    #[error("inconclusive: {0}")]
    Inconclusive(String),

    /// Two structures that must match (posets, truncations, systems) do not.
    #[error("mismatch: {0}")]
    Mismatch(String),

    /// Malformed caller input (bad coroot, unparsable level, bad index...).
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
