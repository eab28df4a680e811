//! The zero lemma instances that bound the cuspidal columns.

use unipotent_bc::decomp::{b6_chain, zero_lemma_cases};

fn main() -> unipotent_bc::Result<()> {
    let n = 4;
    for case in zero_lemma_cases(n) {
        let rep = case.run(n);
        let got: Vec<String> = rep.survivors.iter().map(|s| s.bp.to_string()).collect();
        let want: Vec<String> = case.expected.iter().map(|l| l.bp.to_string()).collect();
        println!("{} (i = {:?})", case.name, case.iseq);
        println!("  survivors {got:?}");
        println!("  published {want:?}");
    }
    let last: Vec<String> = b6_chain(n)?.iter().map(|l| l.to_string()).collect();
    println!("\nchained B6 passes end at {last:?}");
    Ok(())
}
