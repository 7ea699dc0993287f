//! Compute simple integral coroot systems Π for a few (level, weight)
//! pairs: integer level (affine Cartan), fractional level (strided
//! degrees), and generic level (finite part only), with the parabolic
//! index sets used for double cosets.
//!
//! Run: `cargo run --example integral_system`

use std::sync::Arc;
use wlinkage::rootdata::{build_root_datum, ratio};
use wlinkage::{antidominantize, IntegralSystem, Level, LieType, Weight};

fn describe(system: &IntegralSystem) {
    println!(
        "  level {:<12} base {:<12} Π size {}",
        system.level.to_string(),
        system.base_weight.to_string(),
        system.rank()
    );
    for (i, c) in system.simple_coroots.iter().enumerate() {
        let tags = [
            system.j_finite.contains(&i).then_some("finite"),
            system.j_stab.contains(&i).then_some("stabilizes base"),
        ]
        .into_iter()
        .flatten()
        .collect::<Vec<_>>()
        .join(", ");
        println!("    χ{i} = {c}   {tags}");
    }
    println!("    integral Cartan rows: {:?}", system.cartan_integral);
}

fn main() -> wlinkage::Result<()> {
    let sl2 = Arc::new(build_root_datum(LieType::A, 1)?);
    let a2 = Arc::new(build_root_datum(LieType::A, 2)?);

    println!("sl2, integer level -3, weight -α:");
    let sys = IntegralSystem::build(
        sl2.clone(),
        Level::from_int(-3),
        Weight::from_ints(&[-2]),
        None,
    )?;
    describe(&sys);

    println!("sl2, fractional level -5/2 (degree stride 2 on each side):");
    let (base, mover) = antidominantize(
        &sl2,
        &Level::Rational(ratio(-5, 2)),
        &Weight(vec![ratio(-1, 2)]),
        1000,
    )?;
    println!(
        "  normalized -ρ/2 to {base} (mover is identity: {})",
        mover.is_identity()
    );
    let sys = IntegralSystem::build(sl2, Level::Rational(ratio(-5, 2)), base, None)?;
    describe(&sys);

    println!("A2, integer level -4, weight -ρ (full affine simple system):");
    let sys = IntegralSystem::build(
        a2.clone(),
        Level::from_int(-4),
        Weight::from_ints(&[-1, -1]),
        None,
    )?;
    describe(&sys);

    println!("A2, generic negative level, weight -ρ (finite part only):");
    let sys = IntegralSystem::build(
        a2,
        Level::GenericNegative,
        Weight::from_ints(&[-1, -1]),
        None,
    )?;
    describe(&sys);

    Ok(())
}
