use clap::{Args, Parser, Subcommand};
use hopfnf::{Options, OutputFormat};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "hopfnf", version, about = "Exact simplest normal forms of Hopf-zero singularities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full pipeline: first level, second level, simplest normal form
    Normalize(Flags),
    /// Case of the second-level normal form
    Classify(Flags),
    /// Run a property suite (structure, integrals, cases, examples, all)
    Verify(Flags),
    /// Planar reduction and Bogdanov-Takens pushforward of the F/E part
    BtReduce(Flags),
    /// Print a built-in example as an input document
    Example(Flags),
}

#[derive(Args)]
struct Flags {
    #[arg(long, value_name = "PATH")]
    input: Option<PathBuf>,
    #[arg(long, value_name = "rossler|ks")]
    example: Option<String>,
    /// Rössler parameter, a rational such as 1 or -1/5
    #[arg(long, value_name = "RATIONAL", allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(long, value_name = "N")]
    degree: Option<u32>,
    #[arg(long, value_name = "I|II")]
    style: Option<String>,
    #[arg(long, value_name = "basis|cylindrical|json", default_value = "basis")]
    output: String,
    #[arg(long, value_name = "NAME")]
    suite: Option<String>,
}

type Handler = fn(&Options) -> Result<hopfnf::Outcome, hopfnf::CliError>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let (flags, cmd): (Flags, Handler) = match cli.command {
        Command::Normalize(f) => (f, hopfnf::normalize),
        Command::Classify(f) => (f, hopfnf::classify_cmd),
        Command::Verify(f) => (f, hopfnf::verify),
        Command::BtReduce(f) => (f, hopfnf::bt_reduce),
        Command::Example(f) => (f, hopfnf::example),
    };
    let out = hopfnf::run(|| {
        let opts = Options {
            input: flags.input,
            example: flags.example,
            a: flags.a,
            degree: flags.degree,
            style: flags.style,
            output: flags.output.parse::<OutputFormat>()?,
            suite: flags.suite,
        };
        cmd(&opts)
    });
    // verify reports go to stdout even when a check fails
    if out.code == 0 || (out.code == 3 && !out.text.starts_with("error:")) {
        print!("{}", out.text);
    } else {
        eprint!("{}", out.text);
    }
    ExitCode::from(out.code as u8)
}
