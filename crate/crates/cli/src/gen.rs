use std::path::PathBuf;

use totdil_core::ensembles::Ensemble as Rng;
use totdil_core::{Matrix, TolerancePolicy};

use crate::args::{Ensemble, GenArgs};
use crate::failure::{CmdResult, Failure};
use crate::io::{ensure_dir, write_matrix};

/// Writes `A.json` (and `B.json` for pairs) and returns the paths.
pub fn run(args: &GenArgs, _tol: &TolerancePolicy) -> CmdResult<Vec<PathBuf>> {
    if args.dim == 0 {
        return Err(Failure::Parse("--dim must be at least 1".into()));
    }
    if args.cond.is_some() && args.ensemble != Ensemble::Positive {
        return Err(Failure::Parse(
            "--cond only applies to the positive ensemble".into(),
        ));
    }
    let n = args.dim;
    let mut rng = Rng::new(args.seed);
    let mats: Vec<(Matrix, &str)> = match args.ensemble {
        Ensemble::Complex => vec![(rng.complex(n), "")],
        Ensemble::Hermitian => vec![(rng.hermitian(n).into_matrix(), "hermitian")],
        Ensemble::Positive => match args.cond {
            Some(c) if !(c.is_finite() && c >= 1.0) => {
                return Err(Failure::Parse(format!(
                    "--cond must be a finite number ≥ 1, got {c}"
                )));
            }
            Some(c) => vec![(rng.positive_with_cond(n, c).into_matrix(), "positive")],
            None => vec![(rng.positive(n).into_matrix(), "positive")],
        },
        Ensemble::Normal => vec![(rng.normal(n), "normal")],
        Ensemble::Contraction => vec![(rng.contraction(n), "contraction")],
        Ensemble::AntisymmetricReal => {
            if !n.is_multiple_of(2) {
                eprintln!("note: odd dimension {n}; the canonical form needs an even one");
            }
            vec![(rng.antisymmetric_real(n), "antisymmetric-real")]
        }
        Ensemble::MonotonePair => {
            let (a, b) = rng.monotone_pair(n);
            vec![(a.into_matrix(), "positive"), (b.into_matrix(), "positive")]
        }
        Ensemble::AntimonotonePair => {
            let (a, b) = rng.antimonotone_pair(n);
            vec![(a.into_matrix(), "positive"), (b.into_matrix(), "positive")]
        }
    };
    ensure_dir(&args.out)?;
    let mut written = Vec::new();
    for ((m, kind), name) in mats.iter().zip(["A", "B"]) {
        let path = args.out.join(format!("{name}.json"));
        write_matrix(&path, m, (!kind.is_empty()).then_some(*kind))?;
        written.push(path);
    }
    Ok(written)
}
