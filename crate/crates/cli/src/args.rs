use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use totdil_core::TolerancePolicy;

use crate::failure::{CmdResult, Failure};

/// Build and check total and monotone dilations of matrices.
///
/// Exit codes: 0 success, 1 unreadable input, 2 hypothesis of a construction
/// violated, 3 verification failed.
#[derive(Debug, Parser)]
#[command(name = "totdil", version)]
pub struct Cli {
    #[command(flatten)]
    pub tolerances: ToleranceArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct ToleranceArgs {
    /// Relative threshold for matrix equality checks.
    #[arg(long, global = true, env = "TOTDIL_REL_EQ")]
    pub rel_eq: Option<f64>,
    /// Relative threshold for eigenvalue clustering and eigen residuals.
    #[arg(long, global = true, env = "TOTDIL_EIG_RESIDUAL")]
    pub eig_residual: Option<f64>,
    /// Slack allowed on positivity and spectral bounds.
    #[arg(long, global = true, env = "TOTDIL_PSD_SLACK")]
    pub psd_slack: Option<f64>,
}

impl ToleranceArgs {
    pub fn policy(&self) -> CmdResult<TolerancePolicy> {
        let d = TolerancePolicy::default();
        TolerancePolicy::new(
            self.rel_eq.unwrap_or(d.rel_eq),
            self.eig_residual.unwrap_or(d.eig_residual),
            self.psd_slack.unwrap_or(d.psd_slack),
        )
        .map_err(|e| Failure::Parse(e.to_string()))
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Construct a dilation from matrix files and write it with its report.
    Dilate(DilateArgs),
    /// Check matrix files against a property and print the report.
    Verify(VerifyArgs),
    /// Write seeded random test matrices.
    Gen(GenArgs),
    /// Run every construction once at small size and print a report bundle.
    Demo(DemoArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Construction {
    /// Unitary conjugation giving equal diagonal half-blocks (one input, even size).
    Halving,
    /// [[A, A*], [A*, A]].
    Normal,
    /// Unitary on k copies of H (contraction input; needs --k).
    Unitary,
    /// Commuting block circulants (any number of inputs).
    Circulant,
    /// Mutually annihilating family on 2^n copies of H.
    Orthogonal,
    /// Unitary making every diagonal entry equal the normalized trace.
    EqualDiagonal,
    /// Real orthogonal canonical form of a real antisymmetric matrix.
    Antisymmetric,
    /// Projection splitting X into halves with equal singular values.
    EqualSingular,
    /// Positive monotone pair (A[k], B⟨k⟩); needs --k.
    Pair,
    /// Positive monotone family; needs --ks k1,k2,….
    Family,
    /// Monotone hermitian family on 2^n copies of H.
    HermitianFamily,
    /// Monotone pair of strictly positive operators on 6 copies of H.
    NumrangePair,
    /// Monotone hermitian family on a space of dimension 2(n+1)·dim H − 1.
    Economical,
}

#[derive(Debug, Args)]
pub struct DilateArgs {
    pub construction: Construction,
    /// Input matrix files, in family order.
    #[arg(required = true)]
    pub inputs: Vec<PathBuf>,
    /// Block count for unitary and pair.
    #[arg(long)]
    pub k: Option<usize>,
    /// Block multipliers k_1,…,k_n for family.
    #[arg(long, value_delimiter = ',')]
    pub ks: Vec<usize>,
    /// Output directory.
    #[arg(long, short, default_value = ".")]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(subcommand)]
    pub check: Check,
}

#[derive(Debug, Subcommand)]
pub enum Check {
    /// Every diagonal block of DILATION equals BASE.
    Total {
        #[arg(long)]
        k: usize,
        base: PathBuf,
        dilation: PathBuf,
    },
    /// The hermitian family is monotone.
    Monotone {
        #[arg(required = true)]
        family: Vec<PathBuf>,
    },
    /// (A, B) is antimonotone.
    Antimonotone { a: PathBuf, b: PathBuf },
    /// The matrix belongs to an operator class.
    Class {
        #[arg(long)]
        kind: String,
        matrix: PathBuf,
    },
    /// Compression inequalities for a positive monotone pair on the range of an isometry.
    Inequalities {
        a: PathBuf,
        b: PathBuf,
        isometry: PathBuf,
        /// Check the reversed determinant inequality for an antimonotone pair on a hyperplane.
        #[arg(long)]
        reversed: bool,
    },
    /// Distinct members multiply to zero.
    Annihilation {
        #[arg(required = true)]
        family: Vec<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Ensemble {
    Complex,
    Hermitian,
    Positive,
    Normal,
    Contraction,
    AntisymmetricReal,
    MonotonePair,
    AntimonotonePair,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    pub ensemble: Ensemble,
    #[arg(long)]
    pub dim: usize,
    /// Condition number of a positive matrix (spectrum pinned to [1, cond]).
    #[arg(long)]
    pub cond: Option<f64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, short, default_value = ".")]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct DemoArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Also write the bundle to this file.
    #[arg(long)]
    pub out: Option<PathBuf>,
}
