use std::io::Write;
use std::process::ExitCode;

// Writes to stdout, ignoring a closed pipe.
macro_rules! out {
    ($($t:tt)*) => {{
        let _ = writeln!(std::io::stdout(), $($t)*);
    }};
}

macro_rules! out_raw {
    ($($t:tt)*) => {{
        let _ = write!(std::io::stdout(), $($t)*);
    }};
}

use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use serde_json::json;

use unipotent_bc::block::principal_block_members;
use unipotent_bc::decomp::decomposition_matrix;
use unipotent_bc::dl::{
    almost_character, cut_to_principal_block, dl_character, family_of, mn_value, Element,
    SignedCycleType,
};
use unipotent_bc::fock::{branching_graph, kashiwara_e, kashiwara_f, series_charge, Residue};
use unipotent_bc::symbol::sigma;
use unipotent_bc::verify::{render_table, run_suite, Suite};
use unipotent_bc::{Bipartition, BlockContext, Error, Regime, UnipCharLabel};

#[derive(Parser)]
#[command(
    name = "unipotent",
    version,
    about = "Unipotent characters of type B/C and the principal Φ₂ₙ-block"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the unipotent characters of the principal Φ₂ₙ-block.
    Block {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = TextFormat::Ascii)]
        format: TextFormat,
    },
    /// Print the decomposition matrix of the principal Φ₂ₙ-block.
    Matrix {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum)]
        regime: RegimeArg,
        #[arg(long, value_enum, default_value_t = MatrixFormat::Ascii)]
        format: MatrixFormat,
    },
    /// Crystal graph of one Harish-Chandra series, or one crystal operator.
    Crystal(CrystalArgs),
    /// Deligne–Lusztig character of a Weyl group element, cut to the block.
    Dl {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum)]
        element: ElementArg,
        #[arg(long, value_enum, default_value_t = TextFormat::Ascii)]
        format: TextFormat,
    },
    /// Value of an irreducible character of W(B_m) on a signed cycle type.
    Mn {
        #[arg(long, allow_hyphen_values = true)]
        bp: Bipartition,
        #[arg(long, default_value = "")]
        neg: String,
        #[arg(long, default_value = "")]
        pos: String,
    },
    /// Family of a unipotent character and the almost character of its bipartition.
    Family {
        #[arg(long)]
        n: u32,
        /// `t:λ¹.λ²`, or `λ¹.λ²` for the principal series.
        #[arg(long, allow_hyphen_values = true)]
        bp: UnipCharLabel,
    },
    /// Run the acceptance checks.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long)]
        n_max: Option<u32>,
    },
}

#[derive(Args)]
#[command(args_conflicts_with_subcommands = true, subcommand_negates_reqs = true)]
struct CrystalArgs {
    #[command(subcommand)]
    apply: Option<CrystalCmd>,
    #[arg(long, required = true)]
    d: Option<u32>,
    #[arg(long, required = true)]
    t: Option<u32>,
    #[arg(long, required = true)]
    max_rank: Option<u32>,
    #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
    format: GraphFormat,
}

#[derive(Subcommand)]
enum CrystalCmd {
    /// Apply f̃ᵢ or ẽᵢ to one bipartition.
    Apply {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        t: u32,
        #[arg(long, value_enum)]
        op: Op,
        #[arg(long, allow_negative_numbers = true)]
        i: i64,
        #[arg(long, allow_hyphen_values = true)]
        bp: Bipartition,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TextFormat {
    Json,
    Ascii,
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixFormat {
    Ascii,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum RegimeArg {
    LargeEll,
    Generic,
}

#[derive(Clone, Copy, ValueEnum)]
enum ElementArg {
    C,
    C2,
    Vn,
    Wn,
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    F,
    E,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Crystal,
    Mn,
    Tables,
    Matrix,
}

enum Failure {
    Usage(Error),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::InvalidPartition(_)
            | Error::InvalidArgument(_)
            | Error::TruncationLosesParts { .. }
            | Error::NotSigmaCharge(..)
            | Error::NotPrincipalConfiguration(_) => Failure::Usage(e),
            other => Failure::Internal(other.to_string()),
        }
    }
}

fn charge_for(t: u32, d: u32) -> unipotent_bc::Charge {
    // Odd d has no half-shift; the σ-charge alone is used.
    if d.is_multiple_of(2) {
        series_charge(t, d)
    } else {
        sigma(t)
    }
}

fn run(cmd: Cmd) -> Result<(), Failure> {
    match cmd {
        Cmd::Block { n, format } => {
            let members = principal_block_members(n)?;
            match format {
                TextFormat::Ascii => {
                    out!(
                        "{:<4} {:<32} {:<6} {:>6}  symbol",
                        "#",
                        "label",
                        "series",
                        "defect"
                    );
                    for (k, l) in members.iter().enumerate() {
                        let sym = l.symbol();
                        let rows = sym.render().replace('\n', " / ");
                        out!(
                            "{:<4} {:<32} {:<6} {:>6}  {rows}",
                            k + 1,
                            l.to_string(),
                            l.series_name(),
                            sym.defect()
                        );
                    }
                }
                TextFormat::Json => {
                    let items: Vec<_> = members
                        .iter()
                        .map(|l| {
                            let sym = l.symbol();
                            let floor = sym.family_key().base;
                            json!({
                                "t": l.t,
                                "bp": l.bp,
                                "label": l.to_string(),
                                "series": l.series_name(),
                                "defect": sym.defect(),
                                "top": sym.top_row(floor),
                                "bottom": sym.bottom_row(floor),
                            })
                        })
                        .collect();
                    let out = json!({"n": n, "d": 2 * n, "count": members.len(), "members": items});
                    out!("{}", serde_json::to_string_pretty(&out).expect("json"));
                }
            }
        }
        Cmd::Matrix { n, regime, format } => {
            let regime = match regime {
                RegimeArg::LargeEll => Regime::LargeEll,
                RegimeArg::Generic => Regime::Generic,
            };
            let m = decomposition_matrix(&BlockContext::new(n, regime))?;
            match format {
                MatrixFormat::Ascii => out_raw!("{}", m.to_ascii()),
                MatrixFormat::Csv => out_raw!("{}", m.to_csv()),
                MatrixFormat::Json => out!(
                    "{}",
                    serde_json::to_string_pretty(&m.to_json()).expect("json")
                ),
            }
        }
        Cmd::Crystal(args) => match args.apply {
            Some(CrystalCmd::Apply { d, t, op, i, bp }) => {
                if d == 0 {
                    return Err(Error::InvalidArgument("d must be positive".into()).into());
                }
                let s = charge_for(t, d);
                let r = Residue::new(i, d);
                let out = match op {
                    Op::F => kashiwara_f(&bp, s, r),
                    Op::E => kashiwara_e(&bp, s, r),
                };
                match out {
                    Some(b) => out!("{b}"),
                    None => out!("0"),
                }
            }
            None => {
                let (d, t, max_rank) = (
                    args.d.unwrap_or(2),
                    args.t.unwrap_or(0),
                    args.max_rank.unwrap_or(0),
                );
                if d == 0 {
                    return Err(Error::InvalidArgument("d must be positive".into()).into());
                }
                let g = branching_graph(d, &[t], max_rank);
                match args.format {
                    GraphFormat::Dot => out_raw!("{}", g.to_dot()),
                    GraphFormat::Json => out!(
                        "{}",
                        serde_json::to_string_pretty(&g.to_json()).expect("json")
                    ),
                }
            }
        },
        Cmd::Dl { n, element, format } => {
            if n < 2 {
                return Err(Error::InvalidArgument(format!("n = {n} must be at least 2")).into());
            }
            let e = match element {
                ElementArg::C => Element::C,
                ElementArg::C2 => Element::C2,
                ElementArg::Vn => Element::Vn,
                ElementArg::Wn => Element::Wn,
            };
            let v = dl_character(&e.cycle_type(n), n)?;
            match format {
                TextFormat::Ascii => {
                    for (l, c) in v.terms() {
                        out!("{c:>4}  [{l}]");
                    }
                }
                TextFormat::Json => out!(
                    "{}",
                    serde_json::to_string_pretty(&v.to_json()).expect("json")
                ),
            }
        }
        Cmd::Mn { bp, neg, pos } => {
            let w = SignedCycleType::parse(&pos, &neg)?;
            if w.rank() != bp.size() {
                return Err(Error::InvalidArgument(format!(
                    "{bp} has size {}, the class has rank {}",
                    bp.size(),
                    w.rank()
                ))
                .into());
            }
            out!("{}", mn_value(&bp, &w));
        }
        Cmd::Family { n, bp } => {
            let block: std::collections::HashSet<_> =
                principal_block_members(n)?.into_iter().collect();
            let fam = family_of(&bp);
            out!("family of [{bp}]: {} members, a = {}", fam.len(), fam.a);
            let i = fam.index_of(&bp).expect("label lies in its family");
            for (j, m) in fam.members.iter().enumerate() {
                let special = if j == 0 { "special" } else { "" };
                let inside = if block.contains(m) { "in block" } else { "" };
                out!(
                    "  {:<32} {:>7} {:<8} {:>6}",
                    m.to_string(),
                    special,
                    inside,
                    fam.fourier(i, j).to_string()
                );
            }
            if bp.t == 0 && bp.bp.size() == 2 * n {
                let r = cut_to_principal_block(&almost_character(&bp.bp), n)?;
                out!("almost character cut to the block: {r}");
            }
        }
        Cmd::Verify { suite, n_max } => {
            let suite = match suite {
                SuiteArg::All => Suite::All,
                SuiteArg::Crystal => Suite::Crystal,
                SuiteArg::Mn => Suite::Mn,
                SuiteArg::Tables => Suite::Tables,
                SuiteArg::Matrix => Suite::Matrix,
            };
            let results = run_suite(suite, n_max);
            out_raw!("{}", render_table(&results));
            let failed: Vec<_> = results.iter().filter(|r| !r.passed).collect();
            if !failed.is_empty() {
                let ids: Vec<String> = failed.iter().map(|r| r.id.to_string()).collect();
                return Err(Failure::Internal(format!(
                    "failing criteria: {}",
                    ids.join(", ")
                )));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e}\n\n{}", Cli::command().render_usage());
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
