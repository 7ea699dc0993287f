//! Hom spaces between Verma-type modules over the W-algebra and the
//! affine Lie algebra, read off the Bruhat order of a block poset, and the
//! level-flip duality `k ↦ -k - 2h∨`, `λ ↦ -λ - 2ρ` that matches
//! negative-level posets with positive-level ones.
//!
//! Every hom space here is 0- or 1-dimensional. At negative level a
//! nonzero map M_v → M_w exists iff v ≤ w; at positive level iff v ≥ w;
//! co-Verma homs mirror both. The maps themselves (singular vectors) are
//! not constructed.

use crate::affine::{ff_flip, Level};
use crate::blocks::{weight_class_normal_form, BlockPoset, CosetKind};
use crate::rootdata::{RootDatum, Weight};
use crate::{Error, Result};

/// What a nonzero hom is, in the case at hand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomDirection {
    /// Verma → Verma maps are injective.
    Embedding,
    /// Co-Verma → co-Verma maps are surjective.
    Surjection,
}

/// Dimension of a hom space (always 0 or 1) and the kind of map a nonzero
/// element is.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HomAnswer {
    pub dim: u8,
    pub direction: HomDirection,
}

/// The Verma dual to M_k(λ) under the level flip: a Verma at the flipped
/// level, up to a homological shift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualVermaDatum {
    /// The flipped level -k - 2h∨.
    pub level: Level,
    /// The flipped highest weight -λ - 2ρ, as given.
    pub weight_lift: Weight,
    /// Its weight class, in normal form.
    pub weight: Weight,
    /// Homological shift (= number of positive roots); recorded, never
    /// applied.
    pub shift: usize,
}

fn same_datum(a: &BlockPoset, b: &BlockPoset) -> bool {
    a.system.datum.lie_type == b.system.datum.lie_type && a.system.datum.rank == b.system.datum.rank
}

fn check_rep_indices(a: &BlockPoset, v: usize, b: &BlockPoset, w: usize) -> Result<()> {
    if v >= a.reps.len() || w >= b.reps.len() {
        return Err(Error::InvalidInput(format!(
            "rep index out of range: {v} of {}, {w} of {}",
            a.reps.len(),
            b.reps.len()
        )));
    }
    Ok(())
}

/// Common preamble for the two-sided hom oracles. Returns None when the
/// reps live in distinct blocks (hom is 0), and the level sign otherwise.
fn two_sided_setting(
    v_poset: &BlockPoset,
    v: usize,
    w_poset: &BlockPoset,
    w: usize,
) -> Result<Option<bool>> {
    check_rep_indices(v_poset, v, w_poset, w)?;
    if v_poset.kind != CosetKind::TwoSided || w_poset.kind != CosetKind::TwoSided {
        return Err(Error::Mismatch(
            "hom oracle needs two-sided coset posets".into(),
        ));
    }
    if !same_datum(v_poset, w_poset) || v_poset.system.level != w_poset.system.level {
        return Err(Error::Mismatch(
            "reps live over different root data or levels".into(),
        ));
    }
    let negative = v_poset.system.level.is_negative(&v_poset.system.datum)?;
    if v_poset.system.base_weight != w_poset.system.base_weight {
        // Distinct blocks: no homs in either direction.
        return Ok(None);
    }
    if v_poset.truncation_length != w_poset.truncation_length {
        return Err(Error::Mismatch(
            "same block at different truncation lengths".into(),
        ));
    }
    Ok(Some(negative))
}

/// dim Hom(M(v), M(w)) for W-algebra Vermas labeled by two-sided coset
/// representatives. Nonzero iff v ≤ w at negative level, v ≥ w at
/// positive; reps from distinct blocks give 0.
pub fn hom_dim(
    v_poset: &BlockPoset,
    v: usize,
    w_poset: &BlockPoset,
    w: usize,
) -> Result<HomAnswer> {
    let dim = match two_sided_setting(v_poset, v, w_poset, w)? {
        None => 0,
        Some(negative) => {
            let le = if negative {
                v_poset.leq[v][w]
            } else {
                v_poset.leq[w][v]
            };
            le as u8
        }
    };
    Ok(HomAnswer {
        dim,
        direction: HomDirection::Embedding,
    })
}

/// dim Hom(A(v), A(w)) for co-Vermas: the mirror of [`hom_dim`], nonzero
/// iff v ≥ w at negative level, v ≤ w at positive.
pub fn coverma_hom_dim(
    v_poset: &BlockPoset,
    v: usize,
    w_poset: &BlockPoset,
    w: usize,
) -> Result<HomAnswer> {
    let dim = match two_sided_setting(v_poset, v, w_poset, w)? {
        None => 0,
        Some(negative) => {
            let le = if negative {
                v_poset.leq[w][v]
            } else {
                v_poset.leq[v][w]
            };
            le as u8
        }
    };
    Ok(HomAnswer {
        dim,
        direction: HomDirection::Surjection,
    })
}

/// dim Hom(M(y), M(w)) for affine (Kac–Moody) Vermas labeled by one-sided
/// coset representatives, at negative level only: nonzero iff y ≤ w.
pub fn km_hom_dim(poset: &BlockPoset, y: usize, w: usize) -> Result<HomAnswer> {
    check_rep_indices(poset, y, poset, w)?;
    if poset.kind != CosetKind::OneSided {
        return Err(Error::Mismatch(
            "affine hom oracle needs a one-sided coset poset".into(),
        ));
    }
    if !poset.system.level.is_negative(&poset.system.datum)? {
        return Err(Error::Unsupported(
            "positive-level affine homs are reached through the level flip".into(),
        ));
    }
    Ok(HomAnswer {
        dim: poset.leq[y][w] as u8,
        direction: HomDirection::Embedding,
    })
}

/// The dual of the Verma of highest weight `lift` at the given level: the
/// flipped level, the flipped weight (raw and as a class), and the
/// homological shift.
pub fn ff_dual_verma(datum: &RootDatum, level: &Level, lift: &Weight) -> Result<DualVermaDatum> {
    if level.is_critical(datum) {
        return Err(Error::CriticalLevel);
    }
    let weight_lift = ff_flip(datum, lift);
    let weight = weight_class_normal_form(datum, &weight_lift)?;
    Ok(DualVermaDatum {
        level: level.flip(datum),
        weight_lift,
        weight,
        shift: datum.dim_n,
    })
}

/// Match the representatives of a negative-level block poset with those of
/// its flipped positive-level partner: `map[i] = j` when the reps share a
/// reduced word. The two coset spaces are literally equal, so this checks
/// word-by-word equality and weight compatibility rather than computing
/// anything new; any failure signals an upstream bug.
pub fn ff_poset_map(neg: &BlockPoset, pos: &BlockPoset) -> Result<Vec<usize>> {
    let datum = &*neg.system.datum;
    if !same_datum(neg, pos) {
        return Err(Error::Mismatch("posets over different root data".into()));
    }
    if neg.kind != pos.kind {
        return Err(Error::Mismatch("posets of different coset kinds".into()));
    }
    if !neg.system.level.is_negative(datum)? || pos.system.level.is_negative(datum)? {
        return Err(Error::Mismatch(
            "expected a negative-level poset then a positive-level poset".into(),
        ));
    }
    if pos.system.level != neg.system.level.flip(datum) {
        return Err(Error::Mismatch(
            "positive level is not the flip of the negative level".into(),
        ));
    }
    if ff_flip(datum, &neg.system.base_weight) != pos.system.base_weight {
        return Err(Error::Mismatch(
            "positive base weight is not the flip of the negative base".into(),
        ));
    }
    if neg.truncation_length != pos.truncation_length {
        return Err(Error::Mismatch(format!(
            "truncation lengths differ: {} vs {}",
            neg.truncation_length, pos.truncation_length
        )));
    }
    if neg.system.simple_coroots != pos.system.simple_coroots {
        return Err(Error::Mismatch(
            "simple integral systems differ across the flip".into(),
        ));
    }

    let mut map = Vec::with_capacity(neg.reps.len());
    for rep in &neg.reps {
        let j = pos
            .reps
            .iter()
            .position(|r| r.word == rep.word)
            .ok_or_else(|| {
                Error::Mismatch(format!(
                    "no flipped partner for the rep with word {:?}",
                    rep.word
                ))
            })?;
        let flipped_class = weight_class_normal_form(datum, &ff_flip(datum, &rep.weight))?;
        if neg.kind == CosetKind::TwoSided && flipped_class != pos.reps[j].weight {
            return Err(Error::Mismatch(format!(
                "weights of matched reps do not flip onto each other: {} vs {}",
                rep.weight, pos.reps[j].weight
            )));
        }
        map.push(j);
    }
    if map.len() != pos.reps.len() {
        return Err(Error::Mismatch(format!(
            "poset sizes differ: {} vs {}",
            neg.reps.len(),
            pos.reps.len()
        )));
    }
    Ok(map)
}
