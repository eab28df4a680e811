//! Character values of W(B_m) by the Murnaghan–Nakayama rule, checked against the
//! group-algebra model for m = 3.

use unipotent_bc::dl::{brute_force_char_value, mn_value, Element, SignedCycleType, SignedPerm};
use unipotent_bc::partition::bipartitions_of;

fn main() -> unipotent_bc::Result<()> {
    let n = 3;
    let vn = Element::Vn.cycle_type(n);
    let wn = Element::Wn.cycle_type(n);
    println!("v{n} has class {vn}, w{n} has class {wn}");
    for s in ["6.-", "1.1,1,1,1,1", "2,1,1,1,1.-"] {
        let bp = s.parse()?;
        println!(
            "  chi_{s}: v = {:>2}, w = {:>2}",
            mn_value(&bp, &vn),
            mn_value(&bp, &wn)
        );
    }

    let mut agree = 0;
    let elements = SignedPerm::all(3);
    for bp in bipartitions_of(3) {
        for g in &elements {
            assert_eq!(
                brute_force_char_value(&bp, g)?,
                mn_value(&bp, &g.cycle_type())
            );
            agree += 1;
        }
    }
    println!("\n{agree} values agree with the oracle on W(B3)");

    let w = SignedCycleType::parse("1", "2")?;
    println!("chi_[1.1,1]({w}) = {}", mn_value(&"1.1,1".parse()?, &w));
    Ok(())
}
