use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use jumploci::cli::{run, Command, RunConfig};
use jumploci::polyalg::{Budget, MonomialOrder};

#[derive(Parser)]
#[command(name = "jumploci", version, about = "Jumping loci of finitely presented groups and the obstructions they carry")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand)]
enum Sub {
    /// Resonance varieties R_k from a cup structure
    Resonance(Opts),
    /// Characteristic varieties V_k from a presentation
    Charvar(Opts),
    /// Tangent cones of V_k at the trivial character
    TangentCone(Opts),
    /// Compare TC_1(V_k) with R_k
    Formality(Opts),
    /// Position and resonance obstructions for quasi-Kähler groups
    Qkahler(Opts),
    /// Right-angled Artin group from a graph
    Raag(Opts),
    /// Artin group from a labelled graph (odd contraction)
    Artin(Opts),
    /// List or run the bundled fixtures
    Corpus(Opts),
}

#[derive(Args)]
struct Opts {
    /// Bundled fixture name
    #[arg(long)]
    corpus: Option<String>,
    /// Presentation file
    #[arg(long)]
    presentation: Option<PathBuf>,
    /// Cup structure file
    #[arg(long)]
    cup: Option<PathBuf>,
    /// Graph file or bundled graph name
    #[arg(long)]
    graph: Option<String>,
    /// Component file
    #[arg(long)]
    components: Option<PathBuf>,
    /// Character for the point test, e.g. `2,-1/3`
    #[arg(long, allow_hyphen_values = true)]
    point: Option<String>,
    /// Depth k (clamped to [0, b1])
    #[arg(long)]
    k: Option<usize>,
    /// Monomial order for reported Gröbner bases
    #[arg(long, default_value = "grevlex", value_parser = ["grevlex", "lex"])]
    order: String,
    /// Cap on polynomial terms held during Gröbner computations
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    budget_terms: Option<u64>,
    /// Print the JSON report instead of the summary
    #[arg(long)]
    json: bool,
    /// Also write the JSON report here
    #[arg(long)]
    output: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, o) = match cli.command {
        Sub::Resonance(o) => (Command::Resonance, o),
        Sub::Charvar(o) => (Command::Charvar, o),
        Sub::TangentCone(o) => (Command::TangentCone, o),
        Sub::Formality(o) => (Command::Formality, o),
        Sub::Qkahler(o) => (Command::Qkahler, o),
        Sub::Raag(o) => (Command::Raag, o),
        Sub::Artin(o) => (Command::Artin, o),
        Sub::Corpus(o) => (Command::Corpus, o),
    };
    let cfg = RunConfig {
        command,
        corpus: o.corpus,
        presentation: o.presentation,
        cup: o.cup,
        graph: o.graph,
        components: o.components,
        point: o.point,
        k: o.k,
        order: o.order.parse::<MonomialOrder>().expect("checked by clap"),
        budget: match o.budget_terms {
            Some(n) => Budget::with_terms(n as usize),
            None => Budget::default(),
        },
    };
    let outcome = run(&cfg);
    print!("{}", outcome.render(o.json));
    if let Some(path) = o.output {
        if let Err(e) = std::fs::write(&path, outcome.render(true)) {
            eprintln!("cannot write {}: {e}", path.display());
            return ExitCode::from(1);
        }
    }
    ExitCode::from(outcome.exit_code as u8)
}
