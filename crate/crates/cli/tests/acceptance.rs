//! One PASS/FAIL line per acceptance criterion, run in a fixed order with
//! pinned seeds and tolerances. Runs without the test harness so the lines
//! always reach stdout; any failure makes the process exit non-zero.

use std::fs;
use std::path::Path;
use std::process::Command;

use serde_json::json;
use tempfile::TempDir;
use totdil_core::ensembles::Ensemble;
use totdil_core::monotone::{
    dilate_bridge, dilate_diag, dilate_ones, economical_monotone_family, hermitian_monotone_family,
    monotone_family, monotone_pair, numerical_range_pair, positive_commuting_lift, ConditionSpec,
};
use totdil_core::numerics::{compress, min_eigenvalue};
use totdil_core::totals::{
    antisymmetric_canonical, circulant_family_dilation, equal_diagonal_unitary,
    halving_total_dilation, normal_total_dilation, orthogonal_total_dilation,
    unitary_total_dilation,
};
use totdil_core::verify::{
    check_antimonotone_det_reversal, check_class, check_compression_inequalities,
    is_monotone_family, is_total_dilation, MonotoneFailure, OperatorClass,
};
use totdil_core::{HermitianMatrix, Isometry, Matrix, MonotoneFamilyResult, TolerancePolicy};

const SEED: u64 = 20_241_016;
const HALVING_TOL: f64 = 1e-8;
const BLOCK_TOL: f64 = 1e-9;
const ANNIHILATION_TOL: f64 = 1e-10;
const ENTRYWISE_TOL: f64 = 1e-12;
const COMPRESSION_TOL: f64 = 1e-8;
const COMMUTATOR_TOL: f64 = 1e-10;
const INEQUALITY_SLACK: f64 = 1e-9;
const EXAMPLE_TOL: f64 = 1e-9;
const NORMALITY_TOL: f64 = 1e-10;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn tol() -> TolerancePolicy {
    TolerancePolicy::default()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn scale(a: &Matrix) -> f64 {
    a.frobenius_norm().max(1.0)
}

fn unitarity_defect(u: &Matrix) -> f64 {
    (&u.adjoint() * u)
        .distance(&Matrix::identity(u.rows()))
        .unwrap()
}

/// Worst `‖V* B_j V − A_j‖ / max(1, ‖A_j‖)` over the family.
fn worst_compression(r: &MonotoneFamilyResult, family: &[HermitianMatrix]) -> f64 {
    r.dilations
        .iter()
        .zip(family)
        .map(|(b, a)| compress(b, &r.embedding).unwrap().distance(a).unwrap() / scale(a))
        .fold(0.0, f64::max)
}

fn certificate_ok(r: &MonotoneFamilyResult) -> bool {
    r.certificate.validate(&r.dilations, &tol()).passed
}

fn halving() -> Outcome {
    let mut ens = Ensemble::new(SEED);
    let mut worst = 0.0f64;
    for i in 0..1000 {
        let n = 2 * (1 + i % 6);
        let a = ens.complex(n);
        let h = halving_total_dilation(&a, &tol()).map_err(|e| format!("case {i}: {e}"))?;
        let c = h.conjugated(&a);
        let m = n / 2;
        let residual = unitarity_defect(h.conjugator.as_matrix())
            .max(c.block(0, 0, m, m).distance(&h.common_block).unwrap())
            .max(c.block(m, m, m, m).distance(&h.common_block).unwrap());
        worst = worst.max(residual / scale(&a));
    }
    ensure(worst <= HALVING_TOL, || {
        format!("worst scaled residual {worst:.2e}")
    })?;
    Ok(format!(
        "1000 matrices, dims 2..12, worst scaled residual {worst:.2e}"
    ))
}

fn orthogonal_family() -> Outcome {
    let mut ens = Ensemble::new(SEED + 2);
    let mut worst_block = 0.0f64;
    let mut worst_product = 0.0f64;
    let mut cases = 0;
    for n in 1..=3usize {
        for (kind, class) in [
            ("positive", OperatorClass::Positive),
            ("hermitian", OperatorClass::Hermitian),
            ("normal", OperatorClass::Normal),
        ] {
            for _ in 0..20 {
                let d = ens.int(1, 3);
                let family: Vec<Matrix> = (0..=n)
                    .map(|_| match kind {
                        "positive" => ens.positive(d).into_matrix(),
                        "hermitian" => ens.hermitian(d).into_matrix(),
                        _ => ens.normal(d),
                    })
                    .collect();
                let out = orthogonal_total_dilation(&family).map_err(|e| e.to_string())?;
                for (r, a) in out.iter().zip(&family) {
                    ensure(r.k == 1 << n && r.dilation.rows() == (1 << n) * d, || {
                        format!(
                            "n = {n}: {} blocks of size {d} in a {}-dim space",
                            r.k,
                            r.dilation.rows()
                        )
                    })?;
                    for s in 0..r.k {
                        let block = r.dilation.block(s * d, s * d, d, d);
                        worst_block = worst_block.max(block.distance(a).unwrap() / scale(a));
                    }
                    ensure(check_class(&r.dilation, class, &tol()).passed, || {
                        format!("{kind} member lost its class")
                    })?;
                }
                for i in 0..out.len() {
                    for j in 0..out.len() {
                        if i != j {
                            let (bi, bj) = (&out[i].dilation, &out[j].dilation);
                            let p = (bi * bj).frobenius_norm();
                            let bound =
                                ANNIHILATION_TOL * bi.frobenius_norm() * bj.frobenius_norm();
                            ensure(p <= bound, || format!("‖B{i}B{j}‖ = {p:.2e} > {bound:.2e}"))?;
                            worst_product = worst_product.max(p);
                        }
                    }
                }
                cases += 1;
            }
        }
    }
    ensure(worst_block <= BLOCK_TOL, || {
        format!("worst block {worst_block:.2e}")
    })?;
    Ok(format!(
        "{cases} families, worst block {worst_block:.2e}, worst ‖B_iB_j‖ {worst_product:.2e}"
    ))
}

fn bridge_algebra() -> Outcome {
    let mut ens = Ensemble::new(SEED + 3);
    let mut worst = 0.0f64;
    let mut non_commuting = 0;
    for _ in 0..1000 {
        let n = ens.int(1, 4);
        let k = ens.int(2, 5);
        let (a, b) = (ens.complex(n), ens.complex(n));
        if a.commutator(&b).unwrap().frobenius_norm() > 1e-6 {
            non_commuting += 1;
        }
        let i = Matrix::identity(n);
        let kf = k as f64;
        let p = (&i - &a).scale_real(1.0 / (kf - 1.0));
        let q = (&a.scale_real(kf) - &i).scale_real(1.0 / (kf - 1.0));
        let decomposed = &dilate_ones(&p, k).unwrap() + &dilate_diag(&q, k).unwrap();
        let bridge_a = dilate_bridge(&a, k).unwrap();
        let ones_a = dilate_ones(&a, k).unwrap();
        let bridge_b = dilate_bridge(&b, k).unwrap();
        for residual in [
            &bridge_a - &decomposed,
            &(&ones_a * &bridge_b) - &ones_a,
            &(&bridge_b * &ones_a) - &ones_a,
        ] {
            worst = worst.max(residual.max_abs());
        }
    }
    ensure(worst <= ENTRYWISE_TOL, || {
        format!("worst entry {worst:.2e}")
    })?;
    Ok(format!(
        "1000 cases ({non_commuting} non-commuting), worst entry {worst:.2e}"
    ))
}

fn positive_family() -> Outcome {
    let mut ens = Ensemble::new(SEED + 4);
    let mut worst = 0.0f64;
    let mut cases = 0;
    for n in 1..=3usize {
        for _ in 0..25 {
            let d = ens.int(1, 3);
            let ks: Vec<usize> = (0..n).map(|_| ens.int(2, 3)).collect();
            let mut family = vec![ens.positive(d)];
            family.extend(ks.iter().map(|&k| ens.positive_with_cond(d, k as f64)));
            let spec = ConditionSpec::new(ks.clone()).map_err(|e| e.to_string())?;
            let r =
                monotone_family(&family, &spec, &tol()).map_err(|e| format!("ks {ks:?}: {e}"))?;
            let blowup: usize = ks.iter().product();
            ensure(
                r.blowup == blowup && r.dilations[0].dim() == blowup * d,
                || {
                    format!(
                        "ks {ks:?}: blowup {} in dimension {}",
                        r.blowup,
                        r.dilations[0].dim()
                    )
                },
            )?;
            for (b, a) in r.dilations.iter().zip(&family) {
                let report = is_total_dilation(b, a, blowup, &tol()).map_err(|e| e.to_string())?;
                ensure(report.passed, || {
                    format!("ks {ks:?}: not total ({:?})", report.worst)
                })?;
            }
            ensure(
                is_monotone_family(&r.dilations, &tol()).is_ok() && certificate_ok(&r),
                || format!("ks {ks:?}: certificate invalid"),
            )?;
            worst = worst.max(worst_compression(&r, &family));
            cases += 1;
        }
    }
    ensure(worst <= COMPRESSION_TOL, || {
        format!("worst compression {worst:.2e}")
    })?;
    for _ in 0..25 {
        let d = ens.int(1, 4);
        let k = ens.int(2, 3);
        let a = ens.positive(d);
        let spectrum = ens.spectrum_in(d, 1.0 / k as f64, 1.0);
        let b = ens.with_spectrum(&spectrum);
        let pair = monotone_pair(&a, &b, k, &tol()).map_err(|e| e.to_string())?;
        let spec = ConditionSpec::new(vec![k]).map_err(|e| e.to_string())?;
        let fam = monotone_family(&[a, b], &spec, &tol()).map_err(|e| e.to_string())?;
        ensure(
            pair.dilations == fam.dilations && pair.embedding == fam.embedding,
            || format!("n = 1, k = {k}: family differs from pair"),
        )?;
    }
    Ok(format!(
        "{cases} families, blowup Πk_j, all total and certified, worst compression {worst:.2e}; n = 1 bit-identical to the pair in 25 cases"
    ))
}

fn hermitian_family() -> Outcome {
    let mut ens = Ensemble::new(SEED + 5);
    let mut worst = 0.0f64;
    let mut cases = 0;
    for n in 0..=3usize {
        for t in 0..25 {
            let d = ens.int(1, 3);
            let mut family: Vec<HermitianMatrix> = (0..=n).map(|_| ens.hermitian(d)).collect();
            if t == 0 {
                family[n / 2] = HermitianMatrix::diag(&vec![0.0; d]);
            }
            let r = hermitian_monotone_family(&family, &tol()).map_err(|e| e.to_string())?;
            ensure(
                r.blowup == 1 << n && r.dilations[0].dim() == (1 << n) * d,
                || {
                    format!(
                        "n = {n}: blowup {} in dimension {}",
                        r.blowup,
                        r.dilations[0].dim()
                    )
                },
            )?;
            ensure(certificate_ok(&r), || {
                format!("n = {n}: certificate invalid")
            })?;
            worst = worst.max(worst_compression(&r, &family));
            cases += 1;
        }
    }
    ensure(worst <= COMPRESSION_TOL, || {
        format!("worst compression {worst:.2e}")
    })?;
    Ok(format!(
        "{cases} families (4 with a zero member), blowup 2^n, worst compression {worst:.2e}"
    ))
}

fn numerical_range() -> Outcome {
    let mut ens = Ensemble::new(SEED + 6);
    let mut worst_comm = 0.0f64;
    let mut worst = 0.0f64;
    for i in 0..200 {
        let d = 1 + i % 4;
        let (lo_a, lo_b) = (ens.uniform(0.01, 0.5), ens.uniform(0.01, 0.5));
        let sa = ens.spectrum_in(d, lo_a, 2.0);
        let sb = ens.spectrum_in(d, lo_b, 2.0);
        let (a, b) = (ens.with_spectrum(&sa), ens.with_spectrum(&sb));
        let (s, t, _) = positive_commuting_lift(&a, &b, &tol()).map_err(|e| e.to_string())?;
        let comm = s.commutator(&t).unwrap().frobenius_norm();
        worst_comm = worst_comm.max(comm);
        let r = numerical_range_pair(&a, &b, &tol()).map_err(|e| format!("case {i}: {e}"))?;
        ensure(r.dilations[0].dim() == 6 * d, || {
            format!("dimension {} for d = {d}", r.dilations[0].dim())
        })?;
        ensure(certificate_ok(&r), || {
            format!("case {i}: certificate invalid")
        })?;
        worst = worst.max(worst_compression(&r, &[a, b]));
    }
    ensure(worst_comm <= COMMUTATOR_TOL, || {
        format!("‖ST − TS‖ = {worst_comm:.2e}")
    })?;
    ensure(worst <= COMPRESSION_TOL, || {
        format!("worst compression {worst:.2e}")
    })?;
    Ok(format!(
        "200 pairs, dims 1..4, worst ‖ST − TS‖ {worst_comm:.2e}, worst compression {worst:.2e}, no triangle misses"
    ))
}

fn economical() -> Outcome {
    let mut ens = Ensemble::new(SEED + 7);
    let mut worst = 0.0f64;
    let mut cases = 0;
    for n in 0..=3usize {
        for d in 1..=3usize {
            for _ in 0..8 {
                let family: Vec<HermitianMatrix> = (0..=n).map(|_| ens.hermitian(d)).collect();
                let r = economical_monotone_family(&family, &tol()).map_err(|e| e.to_string())?;
                let want = 2 * (n + 1) * d - 1;
                ensure(r.dilations[0].dim() == want, || {
                    format!(
                        "n = {n}, d = {d}: dimension {} instead of {want}",
                        r.dilations[0].dim()
                    )
                })?;
                ensure(certificate_ok(&r), || {
                    format!("n = {n}, d = {d}: certificate invalid")
                })?;
                worst = worst.max(worst_compression(&r, &family));
                cases += 1;
            }
        }
    }
    ensure(worst <= COMPRESSION_TOL, || {
        format!("worst compression {worst:.2e}")
    })?;

    let r = economical_monotone_family(
        &[HermitianMatrix::diag(&[2.0]), HermitianMatrix::diag(&[5.0])],
        &tol(),
    )
    .map_err(|e| e.to_string())?;
    let b0 = Matrix::diag_real(&[4.0, -21.0, 21.0]);
    let b1 = Matrix::diag_real(&[0.0, -11.0, 31.0]);
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let v = Matrix::from_real(3, 1, &[h, 0.5, 0.5]);
    let err = r.dilations[0]
        .distance(&b0)
        .unwrap()
        .max(r.dilations[1].distance(&b1).unwrap())
        .max(r.embedding.distance(&v).unwrap());
    ensure(err <= 1e-12, || format!("worked example off by {err:.2e}"))?;
    Ok(format!(
        "{cases} families, dimension 2(n+1)d − 1, worst compression {worst:.2e}; [2], [5] example exact"
    ))
}

fn inequalities() -> Outcome {
    let tol = TolerancePolicy::new(INEQUALITY_SLACK, 1e-10, 1e-10).unwrap();
    let mut ens = Ensemble::new(SEED + 8);
    let mut subspaces = 0;
    for i in 0..1000 {
        let n = 2 + i % 3;
        let (a, b) = ens.monotone_pair(n);
        for m in 1..=n {
            let v = ens.frame(n, m);
            let iso = Isometry::new(v, &tol).unwrap();
            let report =
                check_compression_inequalities(&a, &b, &iso, &tol).map_err(|e| e.to_string())?;
            ensure(report.passed, || {
                format!("pair {i}, subspace dim {m}: {:?}", report.worst)
            })?;
            subspaces += 1;
        }
    }
    for i in 0..1000 {
        let n = 2 + i % 3;
        let (a, b) = ens.antimonotone_pair(n);
        let iso = Isometry::new(ens.frame(n, n - 1), &tol).unwrap();
        let report =
            check_antimonotone_det_reversal(&a, &b, &iso, &tol).map_err(|e| e.to_string())?;
        ensure(report.passed, || {
            format!("antimonotone pair {i}: {:?}", report.worst)
        })?;
    }
    Ok(format!(
        "1000 monotone pairs over {subspaces} subspaces of every codimension; 1000 antimonotone hyperplane reversals"
    ))
}

fn write_diag(dir: &Path, name: &str, values: &[f64]) -> String {
    let n = values.len();
    let data: Vec<[f64; 2]> = (0..n * n)
        .map(|i| [if i % (n + 1) == 0 { values[i / n] } else { 0.0 }, 0.0])
        .collect();
    let path = dir.join(name);
    fs::write(
        &path,
        json!({"rows": n, "cols": n, "data": data}).to_string(),
    )
    .unwrap();
    path.to_str().unwrap().to_owned()
}

fn disjoint_projections() -> Outcome {
    let dir = TempDir::new().unwrap();
    let p = write_diag(dir.path(), "P.json", &[1.0, 0.0]);
    let q = write_diag(dir.path(), "Q.json", &[0.0, 1.0]);
    let out = dir.path().join("out");
    let out = out.to_str().unwrap();
    for args in [
        vec!["pair", "--k", "2"],
        vec!["family", "--ks", "2"],
        vec!["numrange-pair"],
    ] {
        let mut full = vec!["dilate"];
        full.extend(&args);
        full.extend([p.as_str(), q.as_str(), "--out", out]);
        let status = Command::new(env!("CARGO_BIN_EXE_totdil"))
            .args(&full)
            .output()
            .unwrap()
            .status;
        ensure(status.code() == Some(2), || {
            format!("dilate {} exited {status}", args[0])
        })?;
    }

    let (pm, qm) = (
        HermitianMatrix::diag(&[1.0, 0.0]),
        HermitianMatrix::diag(&[0.0, 1.0]),
    );
    let family = [pm, qm];
    ensure(
        matches!(
            is_monotone_family(&family, &tol()),
            Err(MonotoneFailure::Incomparable { .. })
        ),
        || "pair was not rejected as incomparable".into(),
    )?;
    // The hermitian constructors must accept any hermitian family; what they
    // cannot do here is stay positive.
    for (name, r) in [
        (
            "hermitian-family",
            hermitian_monotone_family(&family, &tol()),
        ),
        ("economical", economical_monotone_family(&family, &tol())),
    ] {
        let r = r.map_err(|e| format!("{name}: {e}"))?;
        let lowest = r
            .dilations
            .iter()
            .map(|b| min_eigenvalue(b).unwrap())
            .fold(f64::INFINITY, f64::min);
        ensure(certificate_ok(&r) && lowest < -1e-6, || {
            format!("{name}: lowest eigenvalue {lowest:.2e}")
        })?;
    }
    Ok(
        "pair, family and numrange-pair exit 2; verifier reports incomparable tuples; \
        hermitian-family and economical outputs are monotone but not positive"
            .into(),
    )
}

fn examples() -> Outcome {
    let mut ens = Ensemble::new(SEED + 10);
    let mut worst = [0.0f64; 5];
    for _ in 0..50 {
        let n = ens.int(1, 6);
        let even = 2 * ens.int(1, 3);
        let a = ens.antisymmetric_real(even);
        let c = antisymmetric_canonical(&a, &tol()).map_err(|e| e.to_string())?;
        let q = &c.orthogonal;
        let form = &(&q.transpose() * &a) * q;
        worst[0] = worst[0].max(form.distance(&c.canonical_form()).unwrap() / scale(&a));

        let a = ens.complex(n);
        let m = normal_total_dilation(&a)
            .map_err(|e| e.to_string())?
            .dilation;
        let normality = (&m * &m.adjoint()).distance(&(&m.adjoint() * &m)).unwrap();
        worst[1] = worst[1].max(normality / scale(&a).powi(2));

        let a = ens.complex(7);
        let u = equal_diagonal_unitary(&a, &tol()).map_err(|e| e.to_string())?;
        let tau = a.trace() / 7.0;
        let conj = &(&u.adjoint() * &a) * u.as_matrix();
        let off = conj
            .diagonal()
            .iter()
            .map(|z| (z - tau).norm())
            .fold(0.0, f64::max);
        worst[2] = worst[2].max(off / scale(&a));

        for k in [2, 3] {
            let a = ens.contraction(n);
            let r = unitary_total_dilation(&a, k, &tol()).map_err(|e| e.to_string())?;
            let blocks = (0..k)
                .map(|s| r.dilation.block(s * n, s * n, n, n).distance(&a).unwrap())
                .fold(0.0, f64::max);
            worst[3] = worst[3].max(unitarity_defect(&r.dilation).max(blocks));
        }

        let family: Vec<Matrix> = (0..3).map(|_| ens.complex(n.max(2))).collect();
        let out = circulant_family_dilation(&family).map_err(|e| e.to_string())?;
        for i in 0..3 {
            for j in 0..i {
                let (bi, bj) = (&out[i].dilation, &out[j].dilation);
                let c = bi.commutator(bj).unwrap().frobenius_norm();
                worst[4] = worst[4].max(c / (bi.frobenius_norm() * bj.frobenius_norm()).max(1.0));
            }
            ensure(out[i].verify(&tol()).unwrap().passed, || {
                "circulant not total".into()
            })?;
        }
    }
    let limits = [
        EXAMPLE_TOL,
        NORMALITY_TOL,
        EXAMPLE_TOL,
        EXAMPLE_TOL,
        NORMALITY_TOL,
    ];
    let names = [
        "antisymmetric",
        "normal",
        "equal-diagonal 7×7",
        "unitary k∈{2,3}",
        "circulant",
    ];
    for ((w, l), name) in worst.iter().zip(limits).zip(names) {
        ensure(w <= &l, || format!("{name}: {w:.2e} > {l:.0e}"))?;
    }
    Ok(format!(
        "50 rounds; worst residuals: {}",
        names
            .iter()
            .zip(worst)
            .map(|(n, w)| format!("{n} {w:.1e}"))
            .collect::<Vec<_>>()
            .join(", ")
    ))
}

/// Some ordering of the coordinates along which every member is non-increasing.
fn brute_force_chain(spectra: &[Vec<f64>]) -> bool {
    let d = spectra[0].len();
    let mut perm: Vec<usize> = (0..d).collect();
    permutations(&mut perm, 0, &mut |p| {
        spectra
            .iter()
            .all(|s| p.windows(2).all(|w| s[w[0]] >= s[w[1]]))
    })
}

fn permutations(p: &mut [usize], start: usize, test: &mut impl FnMut(&[usize]) -> bool) -> bool {
    if start == p.len() {
        return test(p);
    }
    for i in start..p.len() {
        p.swap(start, i);
        let found = permutations(p, start + 1, test);
        p.swap(start, i);
        if found {
            return true;
        }
    }
    false
}

fn chain_oracle() -> Outcome {
    let mut checked = 0usize;
    let mut chains = 0usize;
    for members in 1..=3usize {
        for d in 1..=3usize {
            let cells = members * d;
            for code in 0..4usize.pow(cells as u32) {
                let spectra: Vec<Vec<f64>> = (0..members)
                    .map(|m| {
                        (0..d)
                            .map(|i| ((code / 4usize.pow((m * d + i) as u32)) % 4) as f64)
                            .collect()
                    })
                    .collect();
                let family: Vec<HermitianMatrix> =
                    spectra.iter().map(|s| HermitianMatrix::diag(s)).collect();
                let brute = brute_force_chain(&spectra);
                let verdict = is_monotone_family(&family, &tol());
                ensure(verdict.is_ok() == brute, || {
                    format!("disagree on {spectra:?}")
                })?;
                if let Ok(cert) = verdict {
                    ensure(cert.validate(&family, &tol()).passed, || {
                        format!("invalid certificate for {spectra:?}")
                    })?;
                    chains += 1;
                }
                checked += 1;
            }
        }
    }
    Ok(format!(
        "{checked} diagonal families with 1..3 members, dim 1..3: {chains} chains, all agree"
    ))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("halving gives equal half-blocks", halving),
        ("mutually annihilating total dilations", orthogonal_family),
        ("Kronecker bridge algebra", bridge_algebra),
        ("positive monotone family", positive_family),
        ("hermitian monotone family", hermitian_family),
        ("numerical-range monotone pair", numerical_range),
        ("economical monotone family", economical),
        ("compression inequality suite", inequalities),
        ("disjoint projections are refused", disjoint_projections),
        ("total dilation examples", examples),
        ("chain check against brute force", chain_oracle),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail}", i + 1),
            Err(why) => {
                println!("FAIL criterion {}: {name}: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
