//! Enumerate the block of the sl2 vacuum-ish weight at level k = -3 and
//! print its chain of minimal double-coset representatives with the
//! Bruhat covers.
//!
//! Run: `cargo run --example sl2_block_chain`

use std::sync::Arc;
use wlinkage::rootdata::build_root_datum;
use wlinkage::{block_of, Level, LieType, Weight};

fn main() -> wlinkage::Result<()> {
    let datum = Arc::new(build_root_datum(LieType::A, 1)?);
    let level = Level::from_int(-3);
    let lift = Weight::zero(1);

    let poset = block_of(&datum, &level, &lift, 9)?;
    println!(
        "block of weight {lift} at level {level}: {} representatives up to length {}",
        poset.reps.len(),
        poset.truncation_length
    );
    println!(
        "base weight {} over Π = {:?}",
        poset.system.base_weight,
        poset
            .system
            .simple_coroots
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
    );

    for (i, rep) in poset.reps.iter().enumerate() {
        let word = if rep.word.is_empty() {
            "e".to_string()
        } else {
            rep.word
                .iter()
                .map(|s| format!("s{s}"))
                .collect::<Vec<_>>()
                .join("·")
        };
        println!(
            "  [{i}] length {}  word {word}  class {}",
            rep.length, rep.weight
        );
    }

    println!("covers:");
    for &(a, b) in &poset.hasse_edges {
        println!("  {a} -> {b}");
    }

    // The chain is totally ordered.
    for i in 0..poset.reps.len() {
        for j in 0..poset.reps.len() {
            assert_eq!(poset.bruhat_leq(i, j)?, i <= j);
        }
    }
    println!("Bruhat order on this block is a total order (a chain).");
    Ok(())
}
