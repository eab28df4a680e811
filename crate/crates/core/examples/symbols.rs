//! β-sets, charged symbols, co-hooks and families.

use unipotent_bc::symbol::{compare_keys, ChargedSymbol};
use unipotent_bc::{Bipartition, Partition};

fn main() -> unipotent_bc::Result<()> {
    let p = Partition::new(vec![4, 2, 1])?;
    println!("{p} has β-set {:?} at charge 3", p.beta_set(3, 5)?);
    println!("transpose {}", p.transpose());

    let bp: Bipartition = "3,1,1.2".parse()?;
    let sym = ChargedSymbol::of(bp.clone(), 0);
    println!(
        "\nsymbol of [{bp}], defect {}:\n{}",
        sym.defect(),
        sym.render()
    );

    // Removing 3-co-hooks until none is left gives the 3-co-core.
    for h in sym.d_cohooks(3) {
        println!("remove a 3-co-hook -> [{}]", h.bp);
    }
    println!(
        "3-co-core [{}], weight {}",
        sym.d_cocore(3).bp,
        sym.cohook_weight(3)
    );

    let a = ChargedSymbol::of("2,1.-".parse()?, 0);
    let b = ChargedSymbol::of("-.1,1,1".parse()?, 0);
    println!(
        "\n[2,1.-] vs [-.1,1,1]: {:?}",
        compare_keys(&a.family_key(), &b.family_key())
    );
    Ok(())
}
