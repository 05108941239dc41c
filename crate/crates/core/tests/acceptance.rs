//! End-to-end acceptance checks for the toolkit: every numbered check prints
//! one `[PASS]`/`[FAIL]` line with the measured quantities, then asserts.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use quatcurve::{
    anti_salkowski, binormal_duality_check, circular_helix, corollary_suite, frame_field,
    salkowski, salkowski_frame_closed_form, salkowski_torsion_law, similar_check,
    slant_helix_check, slant_helix_of_anti_salkowski, tangent_ode_residual, Criterion, Quaternion,
    Rotation, SalkowskiParams, SimilarityOptions, Spatial,
};

fn uniform(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
        .collect()
}

fn report(name: &str, ok: bool, detail: &str) {
    println!("[{}] {name}: {detail}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "{name}: {detail}");
}

const MS: [f64; 3] = [0.5, 1.0, 2.0];

#[test]
fn a1_salkowski_intrinsics_and_arc_length() {
    let mut worst_k = 0.0f64;
    let mut worst_r = 0.0f64;
    let mut worst_s = 0.0f64;
    let mut slowest = 0.0f64;
    for m in MS {
        let start = Instant::now();
        let c = salkowski(m, 0.05).unwrap();
        let p = SalkowskiParams::new(m, 0.05).unwrap();
        let (lo, hi) = c.domain();
        let ff = frame_field(&c, &uniform(lo, hi, 2001), None).unwrap();
        let s_mid = ff.samples()[1000].s;
        for samp in ff.samples() {
            worst_k = worst_k.max((samp.curvature - 1.0).abs());
            worst_r = worst_r.max((samp.torsion - (p.n * samp.t).tan()).abs());
            worst_s = worst_s.max(((samp.s - s_mid) - (p.n * samp.t).sin() / m).abs());
        }
        slowest = slowest.max(start.elapsed().as_secs_f64());
    }
    let ok = worst_k < 1e-5 && worst_r < 1e-4 && worst_s < 1e-8 && slowest < 2.0;
    report(
        "salkowski intrinsics on 2001-point grids, m in {0.5, 1, 2}",
        ok,
        &format!(
            "max|k-1|={worst_k:.2e} max|torsion-tan(nt)|={worst_r:.2e} \
             max arc-length error={worst_s:.2e} slowest m took {slowest:.2}s"
        ),
    );
}

#[test]
fn a2_closed_form_frame_matches_frenet_construction() {
    let c = salkowski(1.0, 0.05).unwrap();
    let (lo, hi) = c.domain();
    let ff = frame_field(&c, &uniform(lo, hi, 101), None).unwrap();
    let mut err_keep = 0.0f64;
    let mut err_flip = 0.0f64;
    for samp in ff.samples() {
        let (t, n1, n2) = salkowski_frame_closed_form(1.0, samp.t).unwrap();
        let dt = (samp.tangent - t).norm();
        err_keep = err_keep
            .max(dt)
            .max((samp.normal1 - n1).norm())
            .max((samp.normal2 - n2).norm());
        err_flip = err_flip
            .max(dt)
            .max((samp.normal1 + n1).norm())
            .max((samp.normal2 + n2).norm());
    }
    let err = err_keep.min(err_flip);
    report(
        "closed-form salkowski frame vs frenet construction at 101 points",
        err < 1e-6,
        &format!("max frame error (up to a joint normal sign)={err:.2e}"),
    );
}

#[test]
fn a3_slant_helix_axis_recovery() {
    let mut worst_drift = 0.0f64;
    let mut worst_dev = 0.0f64;
    let mut worst_cos = 0.0f64;
    let mut axis_err = 0.0f64;
    let mut all_verdicts = true;
    for m in MS {
        let c = salkowski(m, 0.05).unwrap();
        let (lo, hi) = c.domain();
        let ff = frame_field(&c, &uniform(lo, hi, 2001), None).unwrap();
        let rep = slant_helix_check(&ff, 1e-4).unwrap();
        worst_drift = worst_drift.max(rep.max_axis_drift);
        worst_dev = worst_dev.max(rep.max_angle_deviation);
        worst_cos = worst_cos.max((rep.cos_angle.abs() - m / (1.0 + m * m).sqrt()).abs());
        all_verdicts &= rep.verdict;
        if m == 1.0 {
            let want = Spatial::new(0.0, 0.0, -1.0);
            axis_err = (rep.axis - want).norm().min((rep.axis + want).norm());
        }
    }
    let ok = worst_drift < 1e-4
        && worst_dev < 1e-5
        && worst_cos < 1e-4
        && axis_err < 1e-4
        && all_verdicts;
    report(
        "slant helix axis recovery on salkowski, m in {0.5, 1, 2}",
        ok,
        &format!(
            "max axis drift={worst_drift:.2e} max angle deviation={worst_dev:.2e} \
             max |cos| error={worst_cos:.2e} m=1 axis error (up to sign)={axis_err:.2e}"
        ),
    );
}

#[test]
fn a4_torsion_law_recovers_shape_parameter() {
    let mut worst_b = 0.0f64;
    let mut worst_res = 0.0f64;
    let mut all_ok = true;
    for m in MS {
        let c = salkowski(m, 0.05).unwrap();
        let (lo, hi) = c.domain();
        let ff = frame_field(&c, &uniform(lo, hi, 2001), None).unwrap();
        let rep = salkowski_torsion_law(&ff, 1e-3).unwrap();
        worst_b = worst_b.max((rep.b - m).abs());
        worst_res = worst_res.max(rep.max_residual);
        all_ok &= rep.verdict && !rep.degenerate_plane;
    }
    let ok = worst_b < 1e-4 && worst_res < 1e-3 && all_ok;
    report(
        "torsion linear law on salkowski, m in {0.5, 1, 2}",
        ok,
        &format!("max |b - m|={worst_b:.2e} sup residual={worst_res:.2e}"),
    );
}

#[test]
fn a5_binormal_duality_holds_and_converges() {
    // the negative-torsion lobe, where all five dual relations hold
    let mut worst = 0.0f64;
    let mut all_verdicts = true;
    for m in MS {
        let c = salkowski(m, 0.05).unwrap();
        let p = SalkowskiParams::new(m, 0.05).unwrap();
        let rep = binormal_duality_check(&c, &uniform(p.t_lo, p.t_lo / 19.0, 2001), 1e-3).unwrap();
        worst = worst
            .max(rep.curvature_residual)
            .max(rep.torsion_residual)
            .max(rep.tangent_residual)
            .max(rep.normal_residual)
            .max(rep.binormal_residual);
        all_verdicts &= rep.verdict;
    }
    // second-order convergence: doubling the node count shrinks the sup
    // residual by about four
    let c = salkowski(1.0, 0.05).unwrap();
    let p = SalkowskiParams::new(1.0, 0.05).unwrap();
    let max_residual = |nodes: usize| -> f64 {
        let rep = binormal_duality_check(&c, &uniform(p.t_lo, p.t_lo / 19.0, nodes), 1e-3).unwrap();
        rep.curvature_residual
            .max(rep.torsion_residual)
            .max(rep.tangent_residual)
            .max(rep.normal_residual)
            .max(rep.binormal_residual)
    };
    let coarse = max_residual(2001);
    let fine = max_residual(4001);
    let ratio = coarse / fine;
    let ok = worst < 1e-3 && all_verdicts && (2.0..8.0).contains(&ratio);
    report(
        "binormal duality, five relations on 2001-node grids",
        ok,
        &format!("sup residual={worst:.2e} refinement ratio 2001->4001={ratio:.2}"),
    );
}

#[test]
fn a6_anti_salkowski_intrinsics_and_shared_axis() {
    let c = anti_salkowski(1.0, 0.05).unwrap();
    let p = SalkowskiParams::new(1.0, 0.05).unwrap();
    let ff = frame_field(&c, &uniform(0.05 * p.t_hi, p.t_hi, 2001), None).unwrap();
    let mut worst_r = 0.0f64;
    let mut worst_k = 0.0f64;
    for samp in ff.samples() {
        worst_r = worst_r.max((samp.torsion - 1.0).abs());
        worst_k = worst_k.max((samp.curvature - (p.n * samp.t).tan().abs()).abs());
    }
    let anti_rep = slant_helix_of_anti_salkowski(1.0, 2001, 1e-3).unwrap();
    let sal = salkowski(1.0, 0.05).unwrap();
    let (lo, hi) = sal.domain();
    let sal_ff = frame_field(&sal, &uniform(lo, hi, 2001), None).unwrap();
    let sal_rep = slant_helix_check(&sal_ff, 1e-4).unwrap();
    let axis_err = (anti_rep.axis - sal_rep.axis)
        .norm()
        .min((anti_rep.axis + sal_rep.axis).norm());
    let ok = worst_r < 1e-4 && worst_k < 1e-4 && anti_rep.verdict && axis_err < 1e-3;
    report(
        "anti-salkowski intrinsics and axis shared with salkowski",
        ok,
        &format!(
            "max|torsion-1|={worst_r:.2e} max|k-|tan(nt)||={worst_k:.2e} \
             axis gap (up to sign)={axis_err:.2e}"
        ),
    );
}

#[test]
fn a7_tangent_ode_residual_converges() {
    let c = salkowski(1.0, 0.05).unwrap();
    let (_, hi) = c.domain();
    // one torsion lobe, clear of both the zero-torsion point (the equation
    // divides by the torsion-to-curvature ratio) and the blow-up end
    let res = |n: usize| -> f64 {
        let ff = frame_field(&c, &uniform(0.15 * hi, 0.9 * hi, n), None).unwrap();
        tangent_ode_residual(&ff).unwrap()
    };
    let r501 = res(501);
    let r1001 = res(1001);
    let r2001 = res(2001);
    let r4001 = res(4001);
    let ratio_a = r501 / r1001;
    let ratio_b = r1001 / r2001;
    // constant torsion-to-curvature ratio: the circular helix satisfies the
    // same equation with the derivative terms of the ratio dropping out
    let helix = circular_helix(1.0, 1.0).unwrap();
    let hff = frame_field(&helix, &uniform(0.2, 6.0, 2001), None).unwrap();
    let hres = tangent_ode_residual(&hff).unwrap();
    let ok = r4001 < 1e-3
        && (2.0..8.0).contains(&ratio_a)
        && (2.0..8.0).contains(&ratio_b)
        && hres < 1e-4;
    report(
        "tangent equation residual on salkowski(1)",
        ok,
        &format!(
            "residual at 4001 points={r4001:.2e} refinement ratios \
             501->1001={ratio_a:.2} 1001->2001={ratio_b:.2} helix residual={hres:.2e}"
        ),
    );
}

#[test]
fn a8_similarity_corollaries_and_fixtures() {
    let cases = corollary_suite(1e-4).unwrap();
    let all_cases = cases.iter().all(|c| c.verdict);
    let rigid = cases
        .iter()
        .find(|c| c.name == "unit-curvature-rigid")
        .expect("rigid unit-curvature case present");

    // unit-curvature vs unit-torsion representatives are far from similar
    let sal = salkowski(1.0, 0.05).unwrap();
    let p = SalkowskiParams::new(1.0, 0.05).unwrap();
    let sal_grid = uniform(p.t_hi / 19.0, p.t_hi, 1001);
    let anti = anti_salkowski(1.0, 0.05).unwrap();
    let anti_grid = uniform(0.15 * p.t_hi, 0.9 * p.t_hi, 1001);
    // the ratio criterion separates them cleanly: tan(nt) against cot(nt)
    let opts = SimilarityOptions {
        criterion: Criterion::Ratio,
        ..SimilarityOptions::default()
    };
    let cross = similar_check(&sal, &sal_grid, &anti, &anti_grid, &opts).unwrap();

    // the four criteria reach the same verdict on every regular fixture pair
    let helix_a = circular_helix(1.0, 1.0).unwrap();
    let helix_b = circular_helix(2.0, 2.0).unwrap();
    let helix_grid = uniform(0.1, 6.1, 1001);
    let rot = Rotation::from_axis_angle(Spatial::new(0.2, -1.0, 0.7), 0.9).unwrap();
    let shift = Spatial::new(-1.0, 0.5, 2.0);
    let sal_moved = sal.transformed(rot, shift);
    let anti_moved = anti.transformed(rot, shift);
    let pairs: [(&quatcurve::Curve, &[f64], &quatcurve::Curve, &[f64]); 4] = [
        (&helix_a, &helix_grid, &helix_b, &helix_grid),
        (&sal, &sal_grid, &sal_moved, &sal_grid),
        (&anti, &anti_grid, &anti_moved, &anti_grid),
        (&sal, &sal_grid, &anti, &anti_grid),
    ];
    let mut agree = true;
    for (a, ga, b, gb) in pairs {
        let mut verdicts = Vec::new();
        for criterion in [
            Criterion::Tangent,
            Criterion::Normal,
            Criterion::Binormal,
            Criterion::Ratio,
        ] {
            let o = SimilarityOptions {
                criterion,
                ..SimilarityOptions::default()
            };
            verdicts.push(similar_check(a, ga, b, gb, &o).unwrap().verdict);
        }
        agree &= verdicts.iter().all(|v| *v == verdicts[0]);
    }

    let ok = all_cases
        && rigid.max_discrepancy < 1e-6
        && cross.max_discrepancy > 0.1
        && !cross.verdict
        && agree;
    report(
        "similarity corollaries and fixture cross-checks",
        ok,
        &format!(
            "all six corollary cases pass={all_cases} rigid-copy discrepancy={:.2e} \
             salkowski-vs-anti discrepancy={:.2e} criteria agree on fixtures={agree}",
            rigid.max_discrepancy, cross.max_discrepancy
        ),
    );
}

#[test]
fn a9_quaternion_algebra_randomized() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x51ab);
    let draw = |rng: &mut ChaCha8Rng| loop {
        let q = Quaternion::new(
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
        );
        if q.norm() > 0.1 {
            return q;
        }
    };
    let start = Instant::now();
    let mut worst_assoc = 0.0f64;
    let mut worst_norm = 0.0f64;
    let mut worst_inv = 0.0f64;
    for _ in 0..10_000 {
        let a = draw(&mut rng);
        let b = draw(&mut rng);
        let c = draw(&mut rng);
        let scale = 1.0 + a.norm() * b.norm() * c.norm();
        worst_assoc = worst_assoc.max(((a * b) * c - a * (b * c)).norm() / scale);
        worst_norm = worst_norm
            .max(((a * b).norm() - a.norm() * b.norm()).abs() / (1.0 + a.norm() * b.norm()));
        let inv = a.inverse().unwrap();
        worst_inv = worst_inv
            .max((a * inv - Quaternion::E4).norm())
            .max((inv * a - Quaternion::E4).norm());
    }
    let elapsed = start.elapsed().as_secs_f64();
    let ok = worst_assoc <= 1e-12 && worst_norm <= 1e-12 && worst_inv <= 1e-12 && elapsed < 1.0;
    report(
        "quaternion algebra, 10000 randomized triples",
        ok,
        &format!(
            "max associativity defect={worst_assoc:.2e} max norm defect={worst_norm:.2e} \
             max inverse defect={worst_inv:.2e} elapsed={elapsed:.3}s"
        ),
    );
}
