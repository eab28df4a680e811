//! Harish-Chandra induction, its i-refinement and the combinations Uₖ.

use unipotent_bc::cuspidal::u_combination;
use unipotent_bc::decomp::{hc_induce, i_induce};
use unipotent_bc::fock::Residue;
use unipotent_bc::VirtualCharacter;

fn main() -> unipotent_bc::Result<()> {
    let v = VirtualCharacter::from_label("1:1,1.-".parse()?);
    println!("R({v}) = {}", hc_induce(&v));
    for i in 0..4 {
        let w = i_induce(Residue::new(i, 4), &v);
        if !w.is_zero() {
            println!("  f{i}: {w}");
        }
    }

    let n = 4;
    for k in 1..=10 {
        println!("U{k} = {}", u_combination(k, n)?);
    }
    Ok(())
}
