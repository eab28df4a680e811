//! Deligne–Lusztig characters of cuspidal Weyl group elements on the principal
//! Φ₂ₙ-block.

use unipotent_bc::dl::{dl_character, Element};

fn main() -> unipotent_bc::Result<()> {
    let n = 4;
    for e in [Element::C, Element::C2, Element::Vn, Element::Wn] {
        let w = e.cycle_type(n);
        let v = dl_character(&w, n)?;
        println!("{e:?} (class {w}):\n  {v}\n");
    }
    Ok(())
}
