//! Families, Fourier matrices and almost characters cut to the block.

use unipotent_bc::dl::{almost_character, cut_to_principal_block, family_of};
use unipotent_bc::UnipCharLabel;

fn main() -> unipotent_bc::Result<()> {
    let n = 4;
    let label: UnipCharLabel = "4,2,1,1.-".parse()?;
    let fam = family_of(&label);
    println!(
        "family of [{label}] ({} members, special first):",
        fam.len()
    );
    for m in &fam.members {
        println!("  {m}");
    }
    let fb = fam.fourier_block();
    println!(
        "Fourier block symmetric: {}, involution: {}",
        fb.is_symmetric(),
        fb.is_involution()
    );

    for s in ["1,1,1,1,1,1,1,1.-", "-.8", "3,2,2,1.-"] {
        let v = cut_to_principal_block(&almost_character(&s.parse()?), n)?;
        println!("\nR[{s}] on the block: {v}");
    }
    Ok(())
}
