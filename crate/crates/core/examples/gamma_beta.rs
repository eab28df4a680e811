//! Bounds on the two unknown entries, re-derived from Deligne–Lusztig characters.

use unipotent_bc::cuspidal::gamma_beta_report;
use unipotent_bc::Regime;

fn main() -> unipotent_bc::Result<()> {
    for regime in [Regime::Generic, Regime::LargeEll] {
        let r = gamma_beta_report(5, regime)?;
        println!("{regime:?}: γ = {}, β = {}", r.gamma, r.beta);
        for line in &r.log {
            println!("  {line}");
        }
    }
    Ok(())
}
