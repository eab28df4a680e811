//! Kashiwara operators on bipartitions and on symbols, and a small crystal graph.

use unipotent_bc::fock::{
    branching_graph, crystal_source, i_word, kashiwara_e, kashiwara_f, kashiwara_on_symbol,
    series_charge, Direction, Residue,
};
use unipotent_bc::symbol::ChargedSymbol;
use unipotent_bc::{Bipartition, Charge};

fn main() -> unipotent_bc::Result<()> {
    let bp: Bipartition = "4,2,1,1,1,1.4,4,3,2,2,1,1,1".parse()?;
    let s = Charge::new(1, 0);
    let i = Residue::new(0, 4);
    println!("0-word of [{bp}]: {}", i_word(&bp, s, i).signs());
    println!("f0 -> {:?}", kashiwara_f(&bp, s, i).map(|b| b.to_string()));
    println!("e0 -> {:?}", kashiwara_e(&bp, s, i).map(|b| b.to_string()));

    let sym = ChargedSymbol::of("3,1,1.2".parse()?, 0);
    let up = kashiwara_on_symbol(&sym, Residue::new(3, 6), Direction::Up).expect("f3 acts");
    println!("\nf3 on the symbol of [3,1,1.2] at d=6:\n{}", up.render());

    let d = 4;
    let (src, path) = crystal_source(&"1,1.1".parse()?, series_charge(0, d), d);
    let path: Vec<String> = path.iter().map(|r| r.to_string()).collect();
    println!(
        "\nsource of [1,1.1] at d={d}: [{src}] via e_{}",
        path.join(", e_")
    );

    let g = branching_graph(d, &[0], 3);
    println!(
        "\nd={d}, ranks up to 3: {} vertices, {} edges",
        g.nodes.len(),
        g.edges.len()
    );
    print!("{}", branching_graph(d, &[0], 1).to_dot());
    Ok(())
}
