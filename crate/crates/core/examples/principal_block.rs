//! The unipotent characters in the principal Φ₂ₙ-block, and which ℓ give the
//! large-ℓ regime.

use unipotent_bc::block::{principal_block_members, regime_of};

fn main() -> unipotent_bc::Result<()> {
    for n in 2..=6 {
        let m = principal_block_members(n)?;
        let by_series = |t| m.iter().filter(|l| l.t == t).count();
        println!(
            "n={n}: {} characters ({} principal series, {} B2, {} B6)",
            m.len(),
            by_series(0),
            by_series(1),
            by_series(2)
        );
    }

    println!("\nn=2 in canonical order:");
    for l in principal_block_members(2)? {
        println!("  {l}");
    }

    // q = 3 has order 4 mod 5 and mod 41, so both give Φ₄-blocks of Sp₈(3).
    for ell in [5, 41] {
        println!("\nq=3, ell={ell}: {:?}", regime_of(3, ell, 2)?.regime);
    }
    Ok(())
}
