//! Acceptance run: one line per criterion, exit status 1 if any fails.
//!
//! Tolerances and ranges are fixed here, not taken from library defaults.

use std::process::Command;
use std::time::Instant;

use dsmaxwell::algebra::{
    cartesian_taus, cyclic_transform, mo_alphas, so3c_generators, BasisTag, Exact, Matrix3C,
    Matrix4C,
};
use dsmaxwell::modes::{
    dkp_to_mo, electric_potentials_landau, gradient_solution, mo_to_dkp, spectrum, ModeIndex,
    Parity, RadialSolution,
};
use dsmaxwell::verify::{
    applicable_suites, residual_conformal_kfg, residual_dkp, residual_full_maxwell,
    residual_gauge_sources, residual_gradient, residual_lorentz, residual_mo_reduced,
    residual_radial_ode, run_suite, GridSpec, ModeSampler, Perturbation, ProfileId,
    SecondDerivative, VerifyOptions,
};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const RADIAL_REL_TOL: f64 = 1e-9;
const REDUCED_TOL: f64 = 1e-8;
const MAXWELL_TOL: f64 = 1e-6;
const MAXWELL_STEP: f64 = 1e-4;
const MAXWELL_POINTS: usize = 50;
const ROUND_TRIP_TOL: f64 = 1e-14;
const GAUGE_TOL: f64 = 1e-7;
const LANDAU_LORENTZ_FLOOR: f64 = 1e-4;
const PERTURBATION: f64 = 1e-3;
const DETECTION_FACTOR: f64 = 10.0;
const ORDER_RATIO: [f64; 2] = [2.5, 6.0];
const SEED: u64 = 0x5eed_0001;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

/// `(j, n)` box shared by the field-level criteria, both parities.
fn mode_box() -> Vec<ModeIndex> {
    let mut v = Vec::new();
    for j in 1..=4 {
        for n in 0..=3 {
            for parity in [Parity::Magnetic, Parity::Electric] {
                v.push(ModeIndex::new(j, 0, n, parity).unwrap());
            }
        }
    }
    v
}

fn tr_grid() -> GridSpec {
    GridSpec::default()
}

fn criterion_01_exact_algebra() -> Outcome {
    let mut failures = Vec::new();
    for basis in [BasisTag::Cartesian, BasisTag::Cyclic] {
        let g = so3c_generators(basis);
        for (a, b, c) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
            if g.s[a].commutator(&g.s[b]) != g.s[c] {
                failures.push(format!("{basis:?} [S,S]"));
            }
            if g.n[a].commutator(&g.n[b]) != -g.s[c] {
                failures.push(format!("{basis:?} [N,N]"));
            }
            if g.s[a].commutator(&g.n[b]) != g.n[c] {
                failures.push(format!("{basis:?} [S,N]"));
            }
        }
        for k in 0..3 {
            if g.n[k] != g.s[k].scale(Exact::i()) {
                failures.push(format!("{basis:?} N = iS"));
            }
        }
    }
    let t = cyclic_transform();
    if t.u * t.u_inv != Matrix3C::identity() || t.u4 * t.u4_inv != Matrix4C::identity() {
        failures.push("U U^-1".into());
    }
    let expected = [
        Matrix3C::gaussian_over_sqrt2([
            [(0, 0), (0, -1), (0, 0)],
            [(0, -1), (0, 0), (0, -1)],
            [(0, 0), (0, -1), (0, 0)],
        ]),
        Matrix3C::gaussian_over_sqrt2([
            [(0, 0), (-1, 0), (0, 0)],
            [(1, 0), (0, 0), (-1, 0)],
            [(0, 0), (1, 0), (0, 0)],
        ]),
        Matrix3C::gaussian([
            [(0, -1), (0, 0), (0, 0)],
            [(0, 0), (0, 0), (0, 0)],
            [(0, 0), (0, 0), (0, 1)],
        ]),
    ];
    for (k, tau) in cartesian_taus().iter().enumerate() {
        if t.conjugate3(tau) != expected[k] {
            failures.push(format!("U tau_{} U^-1", k + 1));
        }
    }
    let cart = mo_alphas(BasisTag::Cartesian);
    let cyc = mo_alphas(BasisTag::Cyclic);
    for k in 0..4 {
        if t.conjugate(&cart[k]) != cyc[k] {
            failures.push(format!("U4 alpha_{k} U4^-1"));
        }
    }
    outcome(
        failures.is_empty(),
        if failures.is_empty() {
            "all identities exact".to_string()
        } else {
            format!("broken: {}", failures.join(", "))
        },
    )
}

fn criterion_02_quantization() -> Outcome {
    let mut bad = Vec::new();
    for j in 1..=10i64 {
        for n in 0..=10i64 {
            let w = spectrum(j, n).ok();
            let from_mode = ModeIndex::new(j, 0, n, Parity::Magnetic).map(|m| i64::from(m.omega())).ok();
            if w != Some(n + 1 + j) || from_mode != Some(n + 1 + j) {
                bad.push(format!("({j},{n})"));
            }
        }
    }
    outcome(bad.is_empty(), format!("121 pairs, {} mismatches {}", bad.len(), bad.join(" ")))
}

fn criterion_03_radial_ode() -> Outcome {
    let mut worst = (0.0f64, 0, 0);
    let mut all = true;
    for j in 1..=5u32 {
        for n in 0..=5u32 {
            let rad = RadialSolution::with_frequency(j, n + 1 + j).unwrap();
            let rep = residual_radial_ode(&rad, 200, SecondDerivative::default(), RADIAL_REL_TOL).unwrap();
            all &= rep.pass && rep.n_points == 200;
            let rel = rep.max_abs / (rep.tolerance / RADIAL_REL_TOL);
            if rel > worst.0 {
                worst = (rel, j, n);
            }
        }
    }
    outcome(
        all,
        format!(
            "36 modes, worst relative residual {:.2e} at j={} n={}",
            worst.0, worst.1, worst.2
        ),
    )
}

fn worst_of(reports: &[dsmaxwell::verify::ResidualReport]) -> (f64, String) {
    reports
        .iter()
        .map(|r| (r.max_abs, r.equation_id.clone()))
        .fold((0.0, String::new()), |a, b| if b.0 > a.0 { b } else { a })
}

fn criterion_04_reduced_system() -> Outcome {
    let grid = tr_grid();
    let mut all = true;
    let mut worst = (0.0, String::new(), String::new());
    for mode in mode_box() {
        let s = ModeSampler::new(&mode).unwrap();
        let reps = residual_mo_reduced(&s, &grid, REDUCED_TOL).unwrap();
        all &= reps.len() == 4 && reps.iter().all(|r| r.pass && r.n_points == 1600);
        let (m, id) = worst_of(&reps);
        if m > worst.0 {
            worst = (m, id, mode.to_string());
        }
    }
    outcome(
        all,
        format!("32 modes on 40x40, worst {:.2e} ({} for {})", worst.0, worst.1, worst.2),
    )
}

fn criterion_05_full_maxwell() -> Outcome {
    let modes = [
        (1, 0, 0, Parity::Magnetic),
        (2, 1, 1, Parity::Electric),
        (1, -1, 3, Parity::Electric),
        (2, -2, 2, Parity::Magnetic),
        (3, 2, 0, Parity::Electric),
        (3, 0, 3, Parity::Magnetic),
        (4, 0, 0, Parity::Magnetic),
        (4, -3, 3, Parity::Electric),
    ];
    let grid = GridSpec {
        fd_step: MAXWELL_STEP,
        fd_accuracy: 2,
        ..GridSpec::default()
    };
    let points = grid.random_points(MAXWELL_POINTS, SEED).unwrap();
    let mut parts = Vec::new();
    let mut all = true;
    for (j, m, n, parity) in modes {
        let mode = ModeIndex::new(j, m, n, parity).unwrap();
        let s = ModeSampler::new(&mode).unwrap();
        let rep = residual_full_maxwell(|p| s.psi(p), &points, MAXWELL_STEP, 2, MAXWELL_TOL).unwrap();
        all &= rep.pass;
        parts.push(format!(
            "({j},{m},{n},{}) {:.2e}{}",
            &parity.name()[..1],
            rep.max_abs,
            if rep.pass { "" } else { " FAIL" }
        ));
    }
    outcome(all, parts.join("; "))
}

fn criterion_06_dkp_equivalence() -> Outcome {
    let grid = tr_grid();
    let mut all = true;
    let mut worst = (0.0, String::new());
    for mode in mode_box() {
        let s = ModeSampler::new(&mode).unwrap();
        let reps = residual_dkp(&s, &grid, REDUCED_TOL).unwrap();
        let expected = if mode.parity == Parity::Magnetic { 4 } else { 6 };
        all &= reps.len() == expected && reps.iter().all(|r| r.pass);
        let (m, id) = worst_of(&reps);
        if m > worst.0 {
            worst = (m, format!("{id} for {mode}"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut trip = 0.0f64;
    for _ in 0..1000 {
        let phi: [Complex64; 3] = std::array::from_fn(|_| Complex64::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0)));
        for parity in [Parity::Magnetic, Parity::Electric] {
            let back = dkp_to_mo(parity, &mo_to_dkp(parity, phi));
            for k in 0..3 {
                trip = trip.max((back[k] - phi[k]).norm() / phi[k].norm().max(1.0));
            }
        }
    }
    all &= trip <= ROUND_TRIP_TOL;
    outcome(
        all,
        format!("worst DKP residual {:.2e} ({}); round trip {:.1e}", worst.0, worst.1, trip),
    )
}

fn electric_box() -> Vec<ModeIndex> {
    mode_box().into_iter().filter(|m| m.parity == Parity::Electric).collect()
}

fn criterion_07a_gradient_and_sources() -> Outcome {
    let grid = tr_grid();
    let mut all = true;
    let mut worst = (0.0, String::new());
    for mode in electric_box() {
        for omega_g in [mode.omega(), mode.omega() + 2] {
            let s = ModeSampler::new(&mode)
                .unwrap()
                .with_gauge(gradient_solution(&mode, omega_g).unwrap())
                .unwrap();
            let mut reps = residual_gradient(&s, &grid, GAUGE_TOL).unwrap();
            reps.push(residual_lorentz(&s, &grid, GAUGE_TOL).unwrap());
            reps.push(
                residual_conformal_kfg(|t, r| s.potentials(t, r).map(|g| g[0]), mode.j, &grid, GAUGE_TOL)
                    .unwrap(),
            );
            all &= reps.len() == 5 && reps.iter().all(|r| r.pass);
            let (m, id) = worst_of(&reps);
            if m > worst.0 {
                worst = (m, format!("{id} for {mode}, omega_g={omega_g}"));
            }
        }
        let landau = ModeSampler::new(&mode).unwrap();
        let reps = residual_gauge_sources(&landau, &grid, GAUGE_TOL).unwrap();
        all &= reps.iter().all(|r| r.pass);
        let (m, id) = worst_of(&reps);
        if m > worst.0 {
            worst = (m, format!("{id} for {mode} (Landau)"));
        }
    }
    outcome(all, format!("worst {:.2e} ({})", worst.0, worst.1))
}

fn criterion_07b_landau_violates_lorentz() -> Outcome {
    let grid = tr_grid();
    let mut smallest = f64::INFINITY;
    let mut largest = 0.0f64;
    for mode in electric_box() {
        let landau = ModeSampler::new(&mode)
            .unwrap()
            .with_gauge(electric_potentials_landau(&mode).unwrap())
            .unwrap();
        let rep = residual_lorentz(&landau, &grid, LANDAU_LORENTZ_FLOOR).unwrap();
        smallest = smallest.min(rep.max_abs);
        largest = largest.max(rep.max_abs);
    }
    outcome(
        smallest > LANDAU_LORENTZ_FLOOR,
        format!(
            "Lorentz residual of Landau potentials spans [{smallest:.2e}, {largest:.2e}], needs > {LANDAU_LORENTZ_FLOOR:.0e}"
        ),
    )
}

fn criterion_08_detector_sensitivity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let opts = VerifyOptions {
        maxwell_points: 10,
        ..VerifyOptions::default()
    };
    let mut parts = Vec::new();
    let mut all = true;
    for _ in 0..5 {
        let j = rng.gen_range(1..=4i64);
        let n = rng.gen_range(0..=3i64);
        let m = rng.gen_range(-j..=j);
        let parity = if rng.gen_bool(0.5) { Parity::Magnetic } else { Parity::Electric };
        let mode = ModeIndex::new(j, m, n, parity).unwrap();
        let profiles: &[ProfileId] = match parity {
            Parity::Magnetic => &ProfileId::ALL[..3],
            Parity::Electric => &ProfileId::ALL,
        };
        let profile = profiles[rng.gen_range(0..profiles.len())];
        let perturbed = VerifyOptions {
            perturbation: Some(Perturbation {
                profile,
                relative: PERTURBATION,
            }),
            ..opts.clone()
        };
        let mut best = (0.0f64, String::new());
        for suite in applicable_suites(&mode) {
            let res = run_suite(suite, &mode, &perturbed).unwrap();
            for r in &res.reports {
                let ratio = r.max_abs / r.tolerance;
                if ratio > best.0 {
                    best = (ratio, r.equation_id.clone());
                }
            }
        }
        let hit = best.0 > DETECTION_FACTOR;
        all &= hit;
        parts.push(format!("{mode} {profile:?}: {:.1e}x tol ({})", best.0, best.1));
    }
    outcome(all, parts.join("; "))
}

fn criterion_09_fd_order() -> Outcome {
    let mode = ModeIndex::new(1, 0, 0, Parity::Magnetic).unwrap();
    let s = ModeSampler::new(&mode).unwrap();
    let points = GridSpec {
        fd_step: MAXWELL_STEP,
        fd_accuracy: 2,
        ..GridSpec::default()
    }
    .random_points(MAXWELL_POINTS, SEED)
    .unwrap();
    let coarse = residual_full_maxwell(|p| s.psi(p), &points, MAXWELL_STEP, 2, MAXWELL_TOL).unwrap();
    let fine = residual_full_maxwell(|p| s.psi(p), &points, MAXWELL_STEP / 2.0, 2, MAXWELL_TOL).unwrap();
    let ratio = coarse.max_abs / fine.max_abs;
    outcome(
        (ORDER_RATIO[0]..=ORDER_RATIO[1]).contains(&ratio),
        format!("{:.3e} -> {:.3e}, ratio {ratio:.3}", coarse.max_abs, fine.max_abs),
    )
}

fn cli(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_dsmaxwell"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
    )
}

fn criterion_10_cli() -> Outcome {
    let golden = include_str!("golden/field_j1_m0_n0_magnetic.json");
    let (code, out) = cli(&[
        "field", "--j", "1", "--m", "0", "--n", "0", "--parity", "magnetic", "--n-t", "3", "--n-r", "3",
        "--format", "json",
    ]);
    let golden_ok = code == 0 && out == golden;
    let cases: [(&[&str], i32); 4] = [
        (&["spectrum", "--j", "1..2", "--n", "0..1"], 0),
        (&["verify", "--suite", "mo", "--tol", "1e-15", "--j", "1", "--n", "0", "--parity", "magnetic"], 1),
        (&["verify", "--suite", "gauge", "--parity", "magnetic"], 2),
        (&["field", "--j", "1", "--r-range", "0,1"], 3),
    ];
    let mut codes = Vec::new();
    let mut all = golden_ok;
    for (args, expected) in cases {
        let (got, _) = cli(args);
        all &= got == expected;
        codes.push(format!("{expected}->{got}"));
    }
    outcome(
        all,
        format!(
            "golden {}; exit codes {}",
            if golden_ok { "equal" } else { "DIFFERS" },
            codes.join(" ")
        ),
    )
}

type Criterion = (&'static str, fn() -> Outcome, Option<f64>);

fn main() {
    let criteria: [Criterion; 11] = [
        ("criterion_01_exact_algebra", criterion_01_exact_algebra, Some(1.0)),
        ("criterion_02_quantization", criterion_02_quantization, Some(1.0)),
        ("criterion_03_radial_ode", criterion_03_radial_ode, Some(10.0)),
        ("criterion_04_reduced_system", criterion_04_reduced_system, Some(60.0)),
        ("criterion_05_full_maxwell", criterion_05_full_maxwell, Some(60.0)),
        ("criterion_06_dkp_equivalence", criterion_06_dkp_equivalence, None),
        ("criterion_07a_gradient_and_sources", criterion_07a_gradient_and_sources, None),
        ("criterion_07b_landau_violates_lorentz", criterion_07b_landau_violates_lorentz, None),
        ("criterion_08_detector_sensitivity", criterion_08_detector_sensitivity, None),
        ("criterion_09_fd_order", criterion_09_fd_order, None),
        ("criterion_10_cli", criterion_10_cli, None),
    ];
    let mut failed = Vec::new();
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let out = run();
        let secs = start.elapsed().as_secs_f64();
        let in_time = limit.is_none_or(|l| secs < l);
        let pass = out.pass && in_time;
        let budget = limit.map_or(String::new(), |l| format!(" / {l:.0} s"));
        println!(
            "{} {name:<40} {:>7.3} s{budget}  {}",
            if pass { "PASS" } else { "FAIL" },
            secs,
            out.detail
        );
        if !pass {
            failed.push(name);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all criteria pass");
    } else {
        println!("acceptance: {} failing: {}", failed.len(), failed.join(", "));
        std::process::exit(1);
    }
}
