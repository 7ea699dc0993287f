//! The level flip k ↦ -k - 2h∨, λ ↦ -λ - 2ρ: how it intertwines dot
//! actions, what it does to a Verma datum, and how it matches a
//! negative-level block poset with its positive-level partner.
//!
//! Run: `cargo run --example feigin_fuchs_flip`

use std::sync::Arc;
use wlinkage::rootdata::build_root_datum;
use wlinkage::{
    block_of, ff_dual_verma, ff_flip, ff_poset_map, hom_dim, reflection_of, AffineCoroot, Level,
    LieType, Weight,
};

fn main() -> wlinkage::Result<()> {
    let datum = Arc::new(build_root_datum(LieType::A, 2)?);
    let level = Level::from_int(-4);
    let flipped_level = level.flip(&datum);
    println!(
        "level {level} flips to {flipped_level} (h∨ = {})",
        datum.h_vee
    );

    // The flip intertwines the dot actions: flipping, then acting at the
    // flipped level, equals acting first and flipping after.
    let lam = Weight::from_ints(&[1, -3]);
    let s = reflection_of(&datum, &AffineCoroot::new(&datum, vec![1, 1], 1)?)?;
    let left = s.act_dot(&datum, &flipped_level, &ff_flip(&datum, &lam))?;
    let right = ff_flip(&datum, &s.act_dot(&datum, &level, &lam)?);
    assert_eq!(left, right);
    println!("dot-action intertwining checked for one affine reflection on {lam}.");

    // The dual Verma datum: flipped level, flipped weight, shift dim N.
    let dual = ff_dual_verma(&datum, &level, &lam)?;
    println!(
        "M({level}, {lam})  ↦  M({}, {}) with homological shift {}",
        dual.level, dual.weight_lift, dual.shift
    );

    // Blocks match rep-by-rep across the flip, and hom matrices transpose.
    let neg = block_of(&datum, &level, &Weight::zero(2), 5)?;
    let pos = block_of(
        &datum,
        &flipped_level,
        &ff_flip(&datum, &Weight::zero(2)),
        5,
    )?;
    let map = ff_poset_map(&neg, &pos)?;
    println!(
        "matched {} representatives between the level {level} and level {} blocks",
        map.len(),
        flipped_level
    );
    for v in 0..neg.reps.len() {
        for w in 0..neg.reps.len() {
            let forward = hom_dim(&neg, v, &neg, w)?.dim;
            let mirrored = hom_dim(&pos, map[w], &pos, map[v])?.dim;
            assert_eq!(forward, mirrored);
        }
    }
    println!("hom matrices transpose under the matching.");
    Ok(())
}
