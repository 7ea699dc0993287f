//! Print Verma hom matrices of an A2 block at a negative integer level
//! and at its flipped positive level, showing the order reversal, plus
//! the co-Verma mirror.
//!
//! Run: `cargo run --example hom_matrix`

use std::sync::Arc;
use wlinkage::rootdata::build_root_datum;
use wlinkage::{block_of, coverma_hom_dim, hom_dim, BlockPoset, Level, LieType, Weight};

fn print_matrix(title: &str, m: &[Vec<u8>]) {
    println!("{title}");
    for row in m {
        let cells: Vec<String> = row.iter().map(|d| d.to_string()).collect();
        println!("  {}", cells.join(" "));
    }
}

fn verma_matrix(poset: &BlockPoset) -> wlinkage::Result<Vec<Vec<u8>>> {
    let n = poset.reps.len();
    let mut m = vec![vec![0u8; n]; n];
    for v in 0..n {
        for w in 0..n {
            m[v][w] = hom_dim(poset, v, poset, w)?.dim;
        }
    }
    Ok(m)
}

fn main() -> wlinkage::Result<()> {
    let datum = Arc::new(build_root_datum(LieType::A, 2)?);
    let max_len = 4;

    let neg = block_of(&datum, &Level::from_int(-4), &Weight::zero(2), max_len)?;
    println!(
        "A2 level -4, {} representatives (lengths {:?})",
        neg.reps.len(),
        neg.reps.iter().map(|r| r.length).collect::<Vec<_>>()
    );
    let m_neg = verma_matrix(&neg)?;
    print_matrix(
        "hom matrix at the negative level (upper triangular):",
        &m_neg,
    );

    let pos = block_of(
        &datum,
        &Level::from_int(-2),
        &Weight::from_ints(&[-2, -2]),
        max_len,
    )?;
    let m_pos = verma_matrix(&pos)?;
    print_matrix(
        "hom matrix at the flipped positive level (transposed):",
        &m_pos,
    );

    // Co-Verma homs mirror the Verma ones.
    for v in 0..neg.reps.len() {
        for w in 0..neg.reps.len() {
            assert_eq!(
                coverma_hom_dim(&neg, v, &neg, w)?.dim,
                hom_dim(&neg, w, &neg, v)?.dim
            );
        }
    }
    println!("co-Verma hom matrix is the transpose of the Verma one, at either level.");
    Ok(())
}
