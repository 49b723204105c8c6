use std::path::PathBuf;
use std::process::exit;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use tph_inverse::assembly::Method;
use tph_inverse::cli;
use tph_inverse::problem::Sign;

#[derive(Parser)]
#[command(
    name = "tph",
    about = "Exact generalized inverses of block Toeplitz-plus-Hankel matrices",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum SignArg {
    Plus,
    Minus,
}

impl From<SignArg> for Sign {
    fn from(v: SignArg) -> Sign {
        match v {
            SignArg::Plus => Sign::Plus,
            SignArg::Minus => Sign::Minus,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Direct,
    Blockwise,
}

impl From<MethodArg> for Method {
    fn from(v: MethodArg) -> Method {
        match v {
            MethodArg::Direct => Method::Direct,
            MethodArg::Blockwise => Method::Blockwise,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Report the kernel-dimension staircase, defects and indices of a problem file
    Analyze {
        path: PathBuf,
        /// Write the JSON report here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute the exact generalized inverse of T+H or T-H
    Pinv {
        path: PathBuf,
        /// Which combination to invert
        #[arg(long, value_enum)]
        sign: SignArg,
        /// Assembly route; both produce identical output
        #[arg(long, value_enum, default_value = "direct")]
        method: MethodArg,
        /// Verify the inverse identities on the result (exit 4 on failure)
        #[arg(long)]
        check: bool,
        /// On a positive right defect, solve the transposed problem instead
        #[arg(long)]
        allow_transpose_fallback: bool,
        /// Write the JSON result here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check A X A = A for two dense matrix files
    Verify { matrix: PathBuf, candidate: PathBuf },
    /// Dense one-inverse of a matrix file via full-rank factorization
    Oracle {
        path: PathBuf,
        /// Write the JSON matrix here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() {
    let parsed = Cli::try_parse().unwrap_or_else(|e| {
        let code = match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => cli::EXIT_OK,
            _ => cli::EXIT_USAGE,
        };
        let _ = e.print();
        exit(code);
    });
    let code = match parsed.cmd {
        Cmd::Analyze { path, out } => cli::cmd_analyze(&path, out.as_deref()),
        Cmd::Pinv {
            path,
            sign,
            method,
            check,
            allow_transpose_fallback,
            out,
        } => cli::cmd_pinv(
            &path,
            sign.into(),
            method.into(),
            check,
            allow_transpose_fallback,
            out.as_deref(),
        ),
        Cmd::Verify { matrix, candidate } => cli::cmd_verify(&matrix, &candidate),
        Cmd::Oracle { path, out } => cli::cmd_oracle(&path, out.as_deref()),
    };
    exit(code);
}
