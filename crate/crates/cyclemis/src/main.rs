use clap::{Parser, Subcommand, ValueEnum};
use cyclemis::group::Action;
use cyclemis::report::{self, Flavor, Format};
use cyclemis::verify;

#[derive(Parser)]
#[command(
    name = "cyclemis",
    version,
    about = "Maximal independent sets of cycle graphs: counting sequences, \
             orbits under the cycle's symmetries, compositions and chords"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Csv,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ActionArg {
    Dihedral,
    Rotation,
}

impl From<ActionArg> for Action {
    fn from(a: ActionArg) -> Action {
        match a {
            ActionArg::Dihedral => Action::Dihedral,
            ActionArg::Rotation => Action::Rotation,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FlavorArg {
    Linear,
    Cyclic,
    Bracelet,
    Palindromic,
}

impl From<FlavorArg> for Flavor {
    fn from(f: FlavorArg) -> Flavor {
        match f {
            FlavorArg::Linear => Flavor::Linear,
            FlavorArg::Cyclic => Flavor::Cyclic,
            FlavorArg::Bracelet => Flavor::Bracelet,
            FlavorArg::Palindromic => Flavor::Palindromic,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the main counting sequences for n = 1..max
    Table {
        /// Largest n to tabulate
        #[arg(long, default_value_t = 40, value_parser = clap::value_parser!(u64).range(1..))]
        max: u64,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Cross-check the closed-form counts against the brute-force census
    Verify {
        /// Largest n to check
        #[arg(long, default_value_t = 24, value_parser = clap::value_parser!(u64).range(1..))]
        max: u64,
        /// Cap on the brute-force side; requests beyond it are cut down
        #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(u64).range(1..))]
        limit_bruteforce: u64,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// List the MIS orbits of C_n
    Orbits {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_enum, default_value_t = ActionArg::Dihedral)]
        action: ActionArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// List the compositions of n into parts 2 and 3
    Compositions {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        n: u64,
        #[arg(long, value_enum)]
        flavor: FlavorArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Name the chord sets built on thirds and fourths over k octaves
    /// (the MIS orbits of C_7k). Notes: first octave C..B, second octave
    /// c..b, third and higher get a numeral suffix (c2, d2, ...).
    Chords {
        /// Number of octaves k
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        octaves: u64,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
}

fn main() {
    match Cli::parse().command {
        Command::Table { max, format } => {
            print!("{}", ensure_newline(report::table_report(max, format.into())));
        }
        Command::Verify {
            max,
            limit_bruteforce,
            inject_fault,
        } => {
            let outcome = verify::run(max as usize, limit_bruteforce as usize, inject_fault);
            if let Some(limit) = outcome.capped_at {
                eprintln!("warning: brute-force checks capped at n = {limit} (raise with --limit-bruteforce)");
            }
            for line in &outcome.lines {
                println!("{line}");
            }
            match outcome.failure {
                None => println!("all checks passed"),
                Some(diff) => {
                    println!("verification failed: {diff}");
                    std::process::exit(1);
                }
            }
        }
        Command::Orbits { n, action, format } => {
            print!(
                "{}",
                ensure_newline(report::orbits_report(n as usize, action.into(), format.into()))
            );
        }
        Command::Compositions { n, flavor, format } => {
            print!(
                "{}",
                ensure_newline(report::compositions_report(
                    n as usize,
                    flavor.into(),
                    format.into()
                ))
            );
        }
        Command::Chords { octaves, format } => {
            print!(
                "{}",
                ensure_newline(report::chords_report(octaves as usize, format.into()))
            );
        }
    }
}

/// Reports come with trailing newlines except the single-line JSON ones.
fn ensure_newline(mut s: String) -> String {
    if !s.is_empty() && !s.ends_with('\n') {
        s.push('\n');
    }
    s
}
