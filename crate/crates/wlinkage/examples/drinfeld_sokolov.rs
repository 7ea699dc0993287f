//! Weight-class bookkeeping around quantized Drinfeld–Sokolov reduction:
//! which classes survive, the normal form π, the Zhu-algebra involution,
//! counting antidominant class members, and how affine (one-sided) coset
//! embeddings descend to W-algebra (two-sided) ones.
//!
//! Run: `cargo run --example drinfeld_sokolov`

use std::sync::Arc;
use wlinkage::rootdata::{build_root_datum, ratio};
use wlinkage::{
    antidominant_count, block_of, ds_survives, enumerate_km_cosets, hom_dim, km_hom_dim,
    weight_class_normal_form, zhu_involution, IntegralSystem, Level, LieType, Weight,
};

fn main() -> wlinkage::Result<()> {
    let a2 = Arc::new(build_root_datum(LieType::A, 2)?);

    println!("survival under reduction (no λ_i + 1 may be a positive integer):");
    for lam in [
        Weight::from_ints(&[-1, -1]),
        Weight::zero(2),
        Weight(vec![ratio(1, 2), ratio(-3, 1)]),
    ] {
        println!(
            "  λ = {:<12} survives: {}",
            lam.to_string(),
            ds_survives(&a2, &lam)
        );
    }

    println!("normal form π and the Zhu involution π(-w°(λ)):");
    for lam in [Weight::zero(2), Weight::from_ints(&[-1, -2])] {
        println!(
            "  λ = {:<12} π(λ) = {:<12} zhu(λ) = {}",
            lam.to_string(),
            weight_class_normal_form(&a2, &lam)?.to_string(),
            zhu_involution(&a2, &lam)?
        );
    }

    println!("antidominant members of a finite dot-orbit (|W_f| / |W_f,λ|):");
    for lam in [
        Weight::zero(2),
        Weight(vec![ratio(0, 1), ratio(1, 2)]),
        Weight(vec![ratio(1, 5), ratio(1, 2)]),
    ] {
        println!(
            "  λ = {:<12} count {}",
            lam.to_string(),
            antidominant_count(&a2, &lam)?
        );
    }

    // Affine embeddings descend to the W-algebra: whenever the one-sided
    // (Kac–Moody) oracle reports an embedding, the two-sided oracle does
    // too, on the weight classes.
    let sl2 = Arc::new(build_root_datum(LieType::A, 1)?);
    let level = Level::from_int(-3);
    let base = Weight::from_ints(&[-2]);
    let two_sided = block_of(&sl2, &level, &base, 6)?;
    let km = enumerate_km_cosets(IntegralSystem::build(sl2.clone(), level, base, None)?, 6)?;
    let mut checked = 0;
    for y in 0..km.reps.len() {
        for w in 0..km.reps.len() {
            if km_hom_dim(&km, y, w)?.dim == 1 {
                let cy = two_sided
                    .rep_of_class(&weight_class_normal_form(&sl2, &km.reps[y].weight)?)
                    .expect("class inside truncation");
                let cw = two_sided
                    .rep_of_class(&weight_class_normal_form(&sl2, &km.reps[w].weight)?)
                    .expect("class inside truncation");
                assert_eq!(hom_dim(&two_sided, cy, &two_sided, cw)?.dim, 1);
                checked += 1;
            }
        }
    }
    println!("all {checked} affine embeddings in the sl2 chain descend to W-algebra embeddings.");
    Ok(())
}
