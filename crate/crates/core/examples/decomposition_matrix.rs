//! The decomposition matrix of the principal Φ₂ₙ-block in both regimes.

use unipotent_bc::decomp::decomposition_matrix;
use unipotent_bc::{BlockContext, Regime};

fn main() -> unipotent_bc::Result<()> {
    let generic = decomposition_matrix(&BlockContext::new(3, Regime::Generic))?;
    print!("{}", generic.to_ascii());
    for (r, c, p) in generic.params() {
        println!(
            "{} at row {}, column {}",
            p.name, generic.order[r], generic.order[c]
        );
    }

    let large = decomposition_matrix(&BlockContext::new(3, Regime::LargeEll))?;
    large.check_unitriangular()?;
    println!("\nlarge ell, CSV:\n{}", large.to_csv());
    Ok(())
}
