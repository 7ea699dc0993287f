//! Central charges of W-algebras across the simple types: the general
//! formula, its agreement with the sl2 closed form, and the constant
//! c(k) + c(-k-2h∨) = 2·rk + 48⟨ρ,ρ̌⟩ of each type.
//!
//! Run: `cargo run --example central_charges`

use wlinkage::rootdata::{build_root_datum, rat, ratio, Rational};
use wlinkage::{central_charge_general, central_charge_sl2, LieType};

fn main() -> wlinkage::Result<()> {
    let types = [
        (LieType::A, 1),
        (LieType::A, 2),
        (LieType::B, 2),
        (LieType::G, 2),
        (LieType::D, 4),
    ];

    println!(
        "{:<6} {:>4} {:>6} {:>14} {:>16}",
        "type", "h∨", "dim", "c(-h∨-1)", "c(k)+c(-k-2h∨)"
    );
    for (ty, rank) in types {
        let d = build_root_datum(ty, rank)?;
        let sample = rat(-d.h_vee - 1);
        let c = central_charge_general(&d, &sample)?;
        let k = ratio(-17, 5);
        let constant = central_charge_general(&d, &k)?
            + central_charge_general(&d, &(rat(-2 * d.h_vee) - &k))?;
        println!(
            "{:<6} {:>4} {:>6} {:>14} {:>16}",
            format!("{ty:?}{rank}"),
            d.h_vee,
            d.dim_g,
            c.to_string(),
            constant.to_string()
        );
    }

    // In type A1 the general formula collapses to 1 - 6(k+1)²/(k+2).
    let sl2 = build_root_datum(LieType::A, 1)?;
    for k in [rat(-3), rat(-1), ratio(-7, 3), ratio(1, 2)] {
        let general = central_charge_general(&sl2, &k)?;
        let closed: Rational = central_charge_sl2(&k)?;
        assert_eq!(general, closed);
        println!("sl2 at k = {k}: c = {general}");
    }
    Ok(())
}
