//! Command-line surface: every check and table as a machine-readable
//! report.
//!
//! Exit codes: 0 = success, 1 = usage/parameter error, 2 = verification
//! failure.  Identical invocations print byte-identical JSON.

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use minrep::classify::{AParam, RealFormSpec};
use minrep::rat::parse_rat;
use minrep::report::{
    cmd_annihilator, cmd_casimir, cmd_classify, cmd_decompose_s2, cmd_gvm_check, cmd_ktypes,
    cmd_lemma62, cmd_sl3_kernel, cmd_table1, cmd_verify_all, Report,
};
use minrep::Error;

#[derive(Parser)]
#[command(
    name = "minrep",
    version,
    about = "Exact computations around the quadratic ideals J_a in U(sl(n)): \
             symmetric-square decomposition, annihilator criteria, minimal-representation \
             classification, K-types, and the sl(3,R) kernel ladder."
)]
struct Cli {
    /// Emit the report as JSON (default).
    #[arg(long, global = true)]
    json: bool,
    /// Emit the report as plain text instead of JSON.
    #[arg(long, global = true, conflicts_with = "json")]
    text: bool,
    #[command(subcommand)]
    command: Command,
}

/// Real-form selector shared by classify/table1/ktypes: either
/// `--p/--q` for su(p,q) or `--n` for sl(n,R).
#[derive(Args)]
struct FormArgs {
    /// First block size p of su(p,q).
    #[arg(long, requires = "q", conflicts_with = "n")]
    p: Option<usize>,
    /// Second block size q of su(p,q).
    #[arg(long, requires = "p")]
    q: Option<usize>,
    /// Rank n of sl(n,R).
    #[arg(long)]
    n: Option<usize>,
    /// Deformation parameter: a rational like "5/2" or "-7/3", or "nonreal".
    #[arg(long, allow_hyphen_values = true)]
    a: String,
}

impl FormArgs {
    fn form(&self) -> minrep::Result<RealFormSpec> {
        match (self.p, self.q, self.n) {
            (Some(p), Some(q), None) => RealFormSpec::su(p, q),
            (None, None, Some(n)) => RealFormSpec::sl_r(n),
            _ => Err(Error::Invalid(
                "select a real form with either --p and --q (su) or --n (sl(n,R))".into(),
            )),
        }
    }

    fn a(&self) -> minrep::Result<AParam> {
        if self.a == "nonreal" {
            Ok(AParam::NonReal)
        } else {
            Ok(AParam::Rational(parse_rat(&self.a)?))
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decompose S²(sl(n)) into irreducibles and verify the dimensions.
    DecomposeS2 {
        /// Rank (2..=8).
        #[arg(long)]
        n: usize,
    },
    /// Solve for the highest weights annihilated by the quadratic family.
    Annihilator {
        #[arg(long)]
        n: usize,
        /// Rational parameter, e.g. "-7/3".
        #[arg(long, allow_hyphen_values = true)]
        a: String,
    },
    /// Casimir scalar on L(λ(i,a)), two ways, against the closed form.
    Casimir {
        #[arg(long)]
        n: usize,
        /// Weight label index (1..=n).
        #[arg(long)]
        i: usize,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
    },
    /// Annihilator check on both scalar generalized Verma modules.
    GvmCheck {
        /// Rank (3..=6).
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
    },
    /// List the representations with annihilator J_a for one real form.
    Classify(FormArgs),
    /// Count those representations (one summary-table cell).
    Table1(FormArgs),
    /// Enumerate K-types for each classified representation.
    Ktypes {
        #[command(flatten)]
        form: FormArgs,
        /// How many K-types per representation.
        #[arg(long, default_value_t = 8)]
        count: usize,
    },
    /// Scan odd degrees for kernels of the sl(3,R)-side operator 4X.
    Sl3Kernel {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        /// Largest degree to scan (odd degrees up to this, <= 201).
        #[arg(long, default_value_t = 41)]
        m_max: usize,
    },
    /// Highest-weight forcing check for the symmetrized lowest vector
    /// at n = 3: coefficients vanish exactly at λ(2,-a).
    Lemma62 {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
    },
    /// Run the whole verification battery.
    VerifyAll {
        /// Largest rank used by the rank-dependent criteria (3..=6).
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        /// Flip one structure-constant sign (mutation testing; the run
        /// must then fail with exit code 2).
        #[arg(long, hide = true)]
        inject_bracket_defect: bool,
    },
}

fn build_report(command: Command) -> minrep::Result<Report> {
    match command {
        Command::DecomposeS2 { n } => cmd_decompose_s2(n),
        Command::Annihilator { n, a } => cmd_annihilator(n, &parse_rat(&a)?),
        Command::Casimir { n, i, a } => cmd_casimir(n, i, &parse_rat(&a)?),
        Command::GvmCheck { n, a } => cmd_gvm_check(n, &parse_rat(&a)?),
        Command::Classify(args) => cmd_classify(&args.form()?, &args.a()?),
        Command::Table1(args) => cmd_table1(&args.form()?, &args.a()?),
        Command::Ktypes { form, count } => cmd_ktypes(&form.form()?, &form.a()?, count),
        Command::Sl3Kernel { a, m_max } => cmd_sl3_kernel(&parse_rat(&a)?, m_max),
        Command::Lemma62 { a } => cmd_lemma62(&parse_rat(&a)?),
        Command::VerifyAll {
            max_n,
            inject_bracket_defect,
        } => cmd_verify_all(max_n, inject_bracket_defect),
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                print!("{e}");
                std::process::exit(0);
            }
            _ => {
                eprint!("{e}");
                std::process::exit(1);
            }
        },
    };
    let as_text = cli.text;
    match build_report(cli.command) {
        Ok(report) => {
            // Tolerate a closed pipe (e.g. `minrep ... | head`).
            use std::io::Write;
            let mut out = std::io::stdout();
            let _ = if as_text {
                out.write_all(report.to_text().as_bytes())
            } else {
                writeln!(out, "{}", report.to_json())
            };
            let _ = out.flush();
            std::process::exit(report.exit_code());
        }
        Err(err) => {
            eprintln!("error: {err}");
            let code = match err {
                Error::Verify(_) => 2,
                Error::Invalid(_) | Error::Parse(_) | Error::Resource(_) => 1,
            };
            std::process::exit(code);
        }
    }
}
