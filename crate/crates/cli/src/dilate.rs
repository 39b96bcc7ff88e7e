use std::path::Path;

use totdil_core::monotone::{
    economical_monotone_family, hermitian_monotone_family, monotone_family, monotone_pair,
    numerical_range_pair, ConditionSpec, MonotoneFamilyResult,
};
use totdil_core::numerics::{normalized_trace, singular_values};
use totdil_core::totals::{
    antisymmetric_canonical, circulant_family_dilation, equal_diagonal_unitary,
    equal_singular_halving, halving_total_dilation, normal_total_dilation,
    orthogonal_total_dilation, unitary_total_dilation, TotalDilationResult,
};
use totdil_core::verify::{check_class, check_mutual_annihilation, OperatorClass};
use totdil_core::{HermitianMatrix, Matrix, TolerancePolicy, VerificationReport};

use crate::args::{Construction, DilateArgs};
use crate::failure::{CmdResult, Failure};
use crate::io::{ensure_dir, read_all, write_json, write_matrix};

/// Named output matrices plus the report that certifies them.
pub struct Outcome {
    pub files: Vec<(String, Matrix, Option<&'static str>)>,
    pub report: VerificationReport,
}

fn expect_inputs(inputs: &[Matrix], n: usize, what: &str) -> CmdResult {
    if inputs.len() != n {
        return Err(Failure::Parse(format!(
            "{what} takes {n} input file(s), got {}",
            inputs.len()
        )));
    }
    Ok(())
}

fn require_k(k: Option<usize>, what: &str) -> CmdResult<usize> {
    k.ok_or_else(|| Failure::Parse(format!("{what} needs --k")))
}

fn hermitian(inputs: &[Matrix], tol: &TolerancePolicy) -> CmdResult<Vec<HermitianMatrix>> {
    inputs
        .iter()
        .enumerate()
        .map(|(j, m)| {
            HermitianMatrix::new(m.clone(), tol)
                .map_err(|e| Failure::from(e).context(&format!("input {j}")))
        })
        .collect()
}

fn totals(
    results: &[TotalDilationResult],
    tol: &TolerancePolicy,
    kind: Option<&'static str>,
) -> CmdResult<Outcome> {
    let mut report = VerificationReport::new();
    let mut files = Vec::new();
    for (j, r) in results.iter().enumerate() {
        report.merge(&format!("member[{j}]."), r.verify(tol)?);
        files.push((format!("dilation_{j}"), r.dilation.clone(), kind));
    }
    if let Some(r) = results.first() {
        files.push((
            "embedding".into(),
            r.embeddings[0].as_matrix().clone(),
            Some("isometry"),
        ));
    }
    Ok(Outcome { files, report })
}

fn monotone(
    r: MonotoneFamilyResult,
    inputs: &[Matrix],
    tol: &TolerancePolicy,
) -> CmdResult<Outcome> {
    let report = r.verify(inputs, tol)?;
    let mut files: Vec<_> = r
        .dilations
        .iter()
        .enumerate()
        .map(|(j, b)| {
            (
                format!("dilation_{j}"),
                b.as_matrix().clone(),
                Some("hermitian"),
            )
        })
        .collect();
    files.push((
        "embedding".into(),
        r.embedding.as_matrix().clone(),
        Some("isometry"),
    ));
    Ok(Outcome { files, report })
}

fn commutators(
    results: &[TotalDilationResult],
    tol: &TolerancePolicy,
    report: &mut VerificationReport,
) -> CmdResult {
    for (i, x) in results.iter().enumerate() {
        for (j, y) in results.iter().enumerate().skip(i + 1) {
            let c = x.dilation.commutator(&y.dilation)?.frobenius_norm();
            let scale = x.dilation.frobenius_norm() * y.dilation.frobenius_norm();
            report.push(format!("commutator[{i},{j}]"), c, tol.eq_threshold(scale));
        }
    }
    Ok(())
}

/// Runs one construction on already-loaded inputs.
pub fn build(
    construction: Construction,
    inputs: &[Matrix],
    k: Option<usize>,
    ks: &[usize],
    tol: &TolerancePolicy,
) -> CmdResult<Outcome> {
    use Construction as C;
    match construction {
        C::Halving => {
            expect_inputs(inputs, 1, "halving")?;
            let h = halving_total_dilation(&inputs[0], tol)?;
            Ok(Outcome {
                report: h.verify(&inputs[0], tol)?,
                files: vec![
                    (
                        "conjugator".into(),
                        h.conjugator.as_matrix().clone(),
                        Some("unitary"),
                    ),
                    ("block".into(), h.common_block, None),
                ],
            })
        }
        C::Normal => {
            expect_inputs(inputs, 1, "normal")?;
            let r = normal_total_dilation(&inputs[0])?;
            let mut out = totals(std::slice::from_ref(&r), tol, Some("normal"))?;
            out.report
                .merge("", check_class(&r.dilation, OperatorClass::Normal, tol));
            Ok(out)
        }
        C::Unitary => {
            expect_inputs(inputs, 1, "unitary")?;
            let r = unitary_total_dilation(&inputs[0], require_k(k, "unitary")?, tol)?;
            let mut out = totals(std::slice::from_ref(&r), tol, Some("unitary"))?;
            out.report
                .merge("", check_class(&r.dilation, OperatorClass::Unitary, tol));
            Ok(out)
        }
        C::Circulant => {
            let rs = circulant_family_dilation(inputs)?;
            let mut out = totals(&rs, tol, None)?;
            commutators(&rs, tol, &mut out.report)?;
            Ok(out)
        }
        C::Orthogonal => {
            let rs = orthogonal_total_dilation(inputs)?;
            let mut out = totals(&rs, tol, None)?;
            let bs: Vec<Matrix> = rs.iter().map(|r| r.dilation.clone()).collect();
            out.report.merge("", check_mutual_annihilation(&bs, tol)?);
            Ok(out)
        }
        C::EqualDiagonal => {
            expect_inputs(inputs, 1, "equal-diagonal")?;
            let a = &inputs[0];
            let u = equal_diagonal_unitary(a, tol)?;
            let c = &(&u.adjoint() * a) * u.as_matrix();
            let tau = normalized_trace(a)?;
            let worst = c
                .diagonal()
                .iter()
                .map(|z| (z - tau).norm())
                .fold(0.0, f64::max);
            let mut report = check_class(&u, OperatorClass::Unitary, tol);
            report.push("diagonal", worst, tol.eq_threshold(a.frobenius_norm()));
            Ok(Outcome {
                files: vec![("unitary".into(), u.into_matrix(), Some("unitary"))],
                report,
            })
        }
        C::Antisymmetric => {
            expect_inputs(inputs, 1, "antisymmetric")?;
            let a = &inputs[0];
            let c = antisymmetric_canonical(a, tol)?;
            let q = &c.orthogonal;
            let mut report = check_class(q, OperatorClass::Unitary, tol);
            let residual = (&(&q.transpose() * a) * q).distance(&c.canonical_form())?;
            report.push(
                "canonical form",
                residual,
                tol.eq_threshold(a.frobenius_norm()),
            );
            report.push("real", q.max_imag(), tol.rel_eq);
            Ok(Outcome {
                files: vec![
                    ("orthogonal".into(), c.orthogonal.clone(), Some("unitary")),
                    ("block".into(), c.b.clone(), Some("hermitian")),
                ],
                report,
            })
        }
        C::EqualSingular => {
            expect_inputs(inputs, 1, "equal-singular")?;
            let x = &inputs[0];
            let e = equal_singular_halving(x, tol)?;
            let n = e.rows() / 2;
            let perp = &Matrix::identity(2 * n) - &e;
            let mut report = check_class(&e, OperatorClass::Hermitian, tol);
            report.push("idempotent", (&e * &e).distance(&e)?, tol.eq_threshold(1.0));
            report.push(
                "rank",
                (e.trace().re - n as f64).abs(),
                tol.eq_threshold(1.0),
            );
            let s1 = singular_values(&(x * &e))?;
            let s2 = singular_values(&(x * &perp))?;
            let gap = s1
                .iter()
                .zip(&s2)
                .take(n)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max);
            report.push("singular values", gap, tol.eq_threshold(x.frobenius_norm()));
            Ok(Outcome {
                files: vec![("projection".into(), e, Some("positive"))],
                report,
            })
        }
        C::Pair => {
            expect_inputs(inputs, 2, "pair")?;
            let h = hermitian(inputs, tol)?;
            let r = monotone_pair(&h[0], &h[1], require_k(k, "pair")?, tol)?;
            monotone(r, inputs, tol)
        }
        C::Family => {
            if ks.is_empty() {
                return Err(Failure::Parse("family needs --ks k1,k2,…".into()));
            }
            expect_inputs(inputs, ks.len() + 1, "family with this --ks")?;
            let spec = ConditionSpec::new(ks.to_vec())?;
            let r = monotone_family(&hermitian(inputs, tol)?, &spec, tol)?;
            monotone(r, inputs, tol)
        }
        C::HermitianFamily => {
            let r = hermitian_monotone_family(&hermitian(inputs, tol)?, tol)?;
            monotone(r, inputs, tol)
        }
        C::NumrangePair => {
            expect_inputs(inputs, 2, "numrange-pair")?;
            let h = hermitian(inputs, tol)?;
            let r = numerical_range_pair(&h[0], &h[1], tol)?;
            monotone(r, inputs, tol)
        }
        C::Economical => {
            let r = economical_monotone_family(&hermitian(inputs, tol)?, tol)?;
            monotone(r, inputs, tol)
        }
    }
}

/// Writes each outcome matrix as `<name>.json` and the report as `report.json`.
pub fn write_outcome(dir: &Path, outcome: &Outcome) -> CmdResult {
    ensure_dir(dir)?;
    for (name, m, kind) in &outcome.files {
        write_matrix(&dir.join(format!("{name}.json")), m, *kind)?;
    }
    write_json(&dir.join("report.json"), &outcome.report)
}

pub fn run(args: &DilateArgs, tol: &TolerancePolicy) -> CmdResult<VerificationReport> {
    let inputs = read_all(&args.inputs, tol)?;
    let outcome = build(args.construction, &inputs, args.k, &args.ks, tol)?;
    write_outcome(&args.out, &outcome)?;
    Ok(outcome.report)
}
