use clap::ValueEnum;
use serde_json::{json, Map, Value};
use totdil_core::ensembles::Ensemble;
use totdil_core::monotone::{economical_monotone_family, monotone_pair, numerical_range_pair};
use totdil_core::verify::{
    check_antimonotone_det_reversal, check_compression_inequalities, is_monotone_family,
};
use totdil_core::{HermitianMatrix, Isometry, Matrix, TolerancePolicy, VerificationReport};

use crate::args::{Construction, DemoArgs};
use crate::dilate::build;
use crate::failure::{CmdResult, Failure};
use crate::io::write_json;

type Step = CmdResult<VerificationReport>;

fn name(c: Construction) -> String {
    c.to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_owned()
}

type Case = (Construction, Vec<Matrix>, Option<usize>, Vec<usize>);

fn constructions(ens: &mut Ensemble, tol: &TolerancePolicy) -> Vec<(String, Step)> {
    use Construction as C;
    let h = |m: HermitianMatrix| m.into_matrix();
    let cases: Vec<Case> = vec![
        (C::Halving, vec![ens.complex(4)], None, vec![]),
        (C::Normal, vec![ens.complex(3)], None, vec![]),
        (C::EqualDiagonal, vec![ens.complex(4)], None, vec![]),
        (C::Unitary, vec![ens.contraction(3)], Some(3), vec![]),
        (
            C::Circulant,
            (0..3).map(|_| ens.complex(2)).collect(),
            None,
            vec![],
        ),
        (
            C::Orthogonal,
            (0..3).map(|_| h(ens.positive(2))).collect(),
            None,
            vec![],
        ),
        (
            C::Antisymmetric,
            vec![ens.antisymmetric_real(4)],
            None,
            vec![],
        ),
        (C::EqualSingular, vec![ens.complex(4)], None, vec![]),
        (
            C::Pair,
            vec![h(ens.positive(2)), h(ens.with_spectrum(&[1.0, 0.6]))],
            Some(2),
            vec![],
        ),
        (
            C::Family,
            vec![
                h(ens.positive(2)),
                h(ens.positive_with_cond(2, 2.0)),
                h(ens.positive_with_cond(2, 3.0)),
            ],
            None,
            vec![2, 3],
        ),
        (
            C::HermitianFamily,
            (0..3).map(|_| h(ens.hermitian(2))).collect(),
            None,
            vec![],
        ),
        (
            C::NumrangePair,
            vec![
                h(ens.positive_with_cond(2, 3.0)),
                h(ens.positive_with_cond(2, 3.0)),
            ],
            None,
            vec![],
        ),
        (
            C::Economical,
            (0..3).map(|_| h(ens.hermitian(2))).collect(),
            None,
            vec![],
        ),
    ];
    cases
        .into_iter()
        .map(|(c, inputs, k, ks)| (name(c), build(c, &inputs, k, &ks, tol).map(|o| o.report)))
        .collect()
}

fn inequalities(ens: &mut Ensemble, tol: &TolerancePolicy) -> Vec<(String, Step)> {
    let (a, b) = ens.monotone_pair(3);
    let plane = Isometry::new(ens.frame(3, 2), tol);
    let forward = plane
        .clone()
        .and_then(|v| check_compression_inequalities(&a, &b, &v, tol))
        .map_err(Failure::from);
    let (c, d) = ens.antimonotone_pair(3);
    let reversed = plane
        .and_then(|v| check_antimonotone_det_reversal(&c, &d, &v, tol))
        .map_err(Failure::from);
    vec![
        ("compression-inequalities".into(), forward),
        ("antimonotone-determinant".into(), reversed),
    ]
}

/// The disjoint projections diag(1,0), diag(0,1): not monotone, and every
/// positive monotone constructor must refuse them.
fn rejection(tol: &TolerancePolicy) -> (String, Step) {
    let p = HermitianMatrix::diag(&[1.0, 0.0]);
    let q = HermitianMatrix::diag(&[0.0, 1.0]);
    let mut report = VerificationReport::new();
    report.push_flag(
        "not monotone",
        is_monotone_family(&[p.clone(), q.clone()], tol).is_err(),
    );
    let refused =
        |r: totdil_core::Result<_>| matches!(r, Err(e) if totdil_core::Error::is_precondition(&e));
    report.push_flag("pair refuses", refused(monotone_pair(&p, &q, 2, tol)));
    report.push_flag(
        "numrange-pair refuses",
        refused(numerical_range_pair(&p, &q, tol)),
    );
    // hermitian constructors accept the pair, but their output cannot be positive
    let econ = economical_monotone_family(&[p, q], tol);
    report.push_flag("economical output is monotone", econ.is_ok());
    ("disjoint-projections".into(), Ok(report))
}

pub fn run(args: &DemoArgs, tol: &TolerancePolicy) -> CmdResult<Value> {
    let mut ens = Ensemble::new(args.seed);
    let mut steps = constructions(&mut ens, tol);
    steps.extend(inequalities(&mut ens, tol));
    steps.push(rejection(tol));

    let mut bundle = Map::new();
    let mut failed = Vec::new();
    for (name, step) in steps {
        let entry = match step {
            Ok(report) => {
                if !report.passed {
                    failed.push(name.clone());
                }
                json!({ "passed": report.passed, "report": report })
            }
            Err(e) => {
                failed.push(name.clone());
                json!({ "passed": false, "error": e.to_string() })
            }
        };
        bundle.insert(name, entry);
    }
    let bundle = Value::Object(bundle);
    println!(
        "{}",
        serde_json::to_string_pretty(&bundle).expect("serializable")
    );
    if let Some(path) = &args.out {
        write_json(path, &bundle)?;
    }
    if !failed.is_empty() {
        return Err(Failure::Verification(format!(
            "demo steps failed: {}",
            failed.join(", ")
        )));
    }
    Ok(bundle)
}
