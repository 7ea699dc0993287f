//! Exact Virasoro central charges and conformal dimensions for sl2
//! levels, and the duality (c, Δ) ↦ (26 - c, 1 - Δ) induced by the level
//! flip k ↦ -k - 4.
//!
//! Run: `cargo run --example virasoro_duality`

use wlinkage::rootdata::{rat, ratio, Rational};
use wlinkage::{conformal_dim_plus, ff_dual_virasoro, VirasoroVerma};

fn main() -> wlinkage::Result<()> {
    let samples: Vec<(Rational, Rational)> = vec![
        (rat(-3), rat(0)),
        (rat(-1), rat(-2)),
        (ratio(-5, 2), ratio(1, 3)),
        (rat(1), rat(1)),
    ];

    println!(
        "{:>8} {:>8} {:>10} {:>10} {:>10} {:>10}",
        "k", "v", "c", "Δ", "dual c", "dual Δ"
    );
    for (k, v) in &samples {
        let m = VirasoroVerma::from_sl2(k, v)?;
        let dual = ff_dual_virasoro(&m);
        println!(
            "{:>8} {:>8} {:>10} {:>10} {:>10} {:>10}",
            k.to_string(),
            v.to_string(),
            m.c.to_string(),
            m.delta.to_string(),
            dual.c.to_string(),
            dual.delta.to_string()
        );

        // The dual pair is itself a Virasoro Verma at the flipped level:
        // (c(-k-4), Δ(-k-4, -v-2)) = (26 - c, 1 - Δ).
        let flipped = VirasoroVerma::from_sl2(&(rat(-4) - k), &(rat(-2) - v))?;
        assert_eq!(flipped, dual);
    }
    println!("each dual row equals the Verma at the flipped level and weight.");

    // The opposite reduction Δ' matches Δ at the reflected weight.
    let k = ratio(-7, 3);
    let v = ratio(5, 2);
    assert_eq!(
        conformal_dim_plus(&k, &v)?,
        wlinkage::conformal_dim_minus(&k, &(&k - &v))?
    );
    println!("Δ'(k, v) = Δ(k, k - v) spot check passed at k = {k}, v = {v}.");
    Ok(())
}
