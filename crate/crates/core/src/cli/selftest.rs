use rand::Rng;

use crate::families::{chi3, ghz, w};
use crate::measures::{bipartitions, sgm, sgm_from_spectrum, sgm_via_bures, Measure};
use crate::random::{local_unitary_dressing, random_simplex, random_state, seeded};
use crate::registers::io::parse_state;
use crate::spectra::{schmidt, SchmidtSpectrum};
use crate::teleport::{beta_r, teleport_once, InputState};
use crate::{Bipartition, Error, PureState, SubsystemDims};

/// Outcome of one randomized property check.
#[derive(Debug, Clone, PartialEq)]
pub struct PropertyResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn result(name: &'static str, worst: f64, tol: f64, trials: usize) -> PropertyResult {
    PropertyResult {
        name,
        passed: worst <= tol,
        detail: format!("{trials} trials, worst deviation {worst:.3e} (tolerance {tol:.0e})"),
    }
}

/// Runs the invariant suite. Deterministic for a given seed.
pub fn run_selftest(seed: u64) -> Vec<PropertyResult> {
    vec![
        metric_routes_agree(seed),
        schur_concavity(seed.wrapping_add(1)),
        schmidt_symmetry(seed.wrapping_add(2)),
        local_unitary_invariance(seed.wrapping_add(3)),
        probability_sums(),
        parse_error_path(),
    ]
}

fn metric_routes_agree(seed: u64) -> PropertyResult {
    let mut rng = seeded(seed);
    let shapes: [&[usize]; 4] = [&[2, 2], &[2, 3], &[3, 3], &[2, 4]];
    let mut worst: f64 = 0.0;
    let trials = 200;
    for k in 0..trials {
        let dims = SubsystemDims::new(shapes[k % shapes.len()].to_vec()).expect("valid dims");
        let s = random_state(&dims, &mut rng);
        let bp = Bipartition::new(2, &[0]).expect("valid cut");
        let d = match (sgm(&s, &bp), sgm_via_bures(&s, &bp)) {
            (Ok(a), Ok(b)) => (a - b).abs(),
            _ => f64::INFINITY,
        };
        worst = worst.max(d);
    }
    result("closed form matches metric route", worst, 1e-12, trials)
}

fn schur_concavity(seed: u64) -> PropertyResult {
    let mut rng = seeded(seed);
    let trials = 1000;
    let mut worst: f64 = 0.0;
    for _ in 0..trials {
        let n = rng.random_range(2..=5);
        let mut lambdas = random_simplex(n, &mut rng);
        let i = rng.random_range(0..n);
        let j = (i + rng.random_range(1..n)) % n;
        let (rich, poor) = if lambdas[i] >= lambdas[j] { (i, j) } else { (j, i) };
        let before = SchmidtSpectrum::new(lambdas.clone(), n).and_then(|s| sgm_from_spectrum(&s));
        let t = rng.random_range(0.0..=0.5) * (lambdas[rich] - lambdas[poor]);
        lambdas[rich] -= t;
        lambdas[poor] += t;
        let after = SchmidtSpectrum::new(lambdas, n).and_then(|s| sgm_from_spectrum(&s));
        let drop = match (before, after) {
            (Ok(b), Ok(a)) => (b - a).max(0.0),
            _ => f64::INFINITY,
        };
        worst = worst.max(drop);
    }
    result("transfers toward uniform never lower sgm", worst, 1e-12, trials)
}

fn schmidt_symmetry(seed: u64) -> PropertyResult {
    let mut rng = seeded(seed);
    let trials = 100;
    let mut worst: f64 = 0.0;
    for k in 0..trials {
        let dims = SubsystemDims::new(vec![2 + k % 3, 2, 2]).expect("valid dims");
        let s = random_state(&dims, &mut rng);
        let d = (|| -> crate::Result<f64> {
            let a = s.partial_trace(&[0])?;
            let b = s.partial_trace(&[1, 2])?;
            let ea = crate::spectra::hermitian_eigensystem(a.matrix())?.values;
            let eb = crate::spectra::hermitian_eigensystem(b.matrix())?.values;
            let mut dev: f64 = eb[ea.len()..].iter().fold(0.0, |m, v| m.max(v.abs()));
            for (x, y) in ea.iter().zip(&eb) {
                dev = dev.max((x - y).abs());
            }
            let bp = Bipartition::new(3, &[0])?;
            let rec = schmidt(&s, &bp)?.reconstruct();
            Ok(dev.max((rec - s.amplitudes()).camax()))
        })()
        .unwrap_or(f64::INFINITY);
        worst = worst.max(d);
    }
    result("complementary reduced spectra agree", worst, 1e-10, trials)
}

fn local_unitary_invariance(seed: u64) -> PropertyResult {
    let mut rng = seeded(seed);
    let states: Vec<PureState> = [ghz(3), w(3), beta_r(0.2).map(|c| c.state().clone()), chi3(0.6)]
        .into_iter()
        .collect::<crate::Result<_>>()
        .expect("fixed family parameters are valid");
    let dressings = 10;
    let mut worst: f64 = 0.0;
    for s in &states {
        let measures: Vec<Measure> = Measure::ALL
            .into_iter()
            .filter(|m| *m != Measure::Fill || s.dims().as_slice() == [2, 2, 2])
            .collect();
        let cuts = bipartitions(s.num_subsystems()).expect("at least two subsystems");
        for _ in 0..dressings {
            let d = local_unitary_dressing(s, &mut rng).expect("dims match");
            for m in &measures {
                for bp in &cuts {
                    let cut = m.is_bipartite().then_some(bp);
                    let dev = match (m.value(s, cut), m.value(&d, cut)) {
                        (Ok(a), Ok(b)) => (a - b).abs(),
                        _ => f64::INFINITY,
                    };
                    worst = worst.max(dev);
                }
            }
        }
    }
    result("measures are local-unitary invariant", worst, 1e-10, states.len() * dressings)
}

fn probability_sums() -> PropertyResult {
    let mut worst: f64 = 0.0;
    let grid = |k: usize, hi: f64| hi * k as f64 / 4.0;
    let mut trials = 0;
    for ir in 0..5 {
        let channel = beta_r(grid(ir, 0.5)).expect("r in range");
        for ia in 0..5 {
            for it in 0..5 {
                let input = InputState::new(grid(ia, 1.0), grid(it, std::f64::consts::TAU)).expect("in range");
                let total = teleport_once(&input, &channel)
                    .map(|run| run.outcomes.iter().map(|o| o.probability).sum::<f64>())
                    .unwrap_or(f64::INFINITY);
                worst = worst.max((total - 1.0).abs());
                trials += 1;
            }
        }
    }
    result("teleportation branch probabilities sum to one", worst, 1e-10, trials)
}

fn parse_error_path() -> PropertyResult {
    let corrupted = "2 2\n0.7071 0\n0.0 zero\n0 0\n0.7071 0\n";
    let passed = matches!(parse_state(corrupted), Err(Error::Parse { line: 3, .. }));
    PropertyResult {
        name: "corrupted state text is rejected with its line",
        passed,
        detail: if passed { "parse error on line 3".into() } else { "corruption not reported".into() },
    }
}
