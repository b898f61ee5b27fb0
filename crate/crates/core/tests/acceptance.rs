//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero on any failure.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};
use std::time::Instant;

use rand::Rng;
use sharpgm::families::{chi3, crossings, cusp_scan, ghz, linspace, max_eig_curves, sweep, w, Family};
use sharpgm::measures::{
    bipartition_count, bipartitions, concurrence_fill, ggm, gmc, gms, sgm, sgm_from_spectrum, sgm_via_bures, Measure,
};
use sharpgm::random::{local_unitary_dressing, random_simplex, random_state, random_unitary, seeded};
use sharpgm::spectra::SchmidtSpectrum;
use sharpgm::teleport::{beta_r, fidelity, fidelity_avg, teleport_once, ChannelState, InputState};
use sharpgm::{Bipartition, PureState, SubsystemDims, C64};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn basis(dims: &[usize], digits: &[usize]) -> PureState {
    PureState::basis(SubsystemDims::new(dims.to_vec()).unwrap(), digits).unwrap()
}

fn maximally_entangled(da: usize, db: usize) -> PureState {
    let n = da.min(db);
    let mut amps = vec![C64::new(0.0, 0.0); da * db];
    for i in 0..n {
        amps[i * db + i] = C64::new(1.0 / (n as f64).sqrt(), 0.0);
    }
    PureState::new(SubsystemDims::new(vec![da, db]).unwrap(), amps).unwrap()
}

fn random_local(d: usize, rng: &mut impl Rng) -> PureState {
    random_state(&SubsystemDims::new(vec![d]).unwrap(), rng)
}

fn sgm_endpoints() -> Outcome {
    let mut rng = seeded(11);
    let cut = Bipartition::new(2, &[0]).unwrap();
    let mut worst: f64 = 0.0;
    for (da, db) in [(2, 2), (3, 3), (2, 3)] {
        let mut products = vec![basis(&[da, db], &[0, 0]), basis(&[da, db], &[da - 1, 1])];
        for _ in 0..20 {
            products.push(random_local(da, &mut rng).tensor(&random_local(db, &mut rng)));
        }
        for p in &products {
            worst = worst.max(sgm(p, &cut).unwrap().abs());
        }
        let me = maximally_entangled(da, db);
        worst = worst.max((sgm(&me, &cut).unwrap() - 1.0).abs());
        for _ in 0..20 {
            let u = random_unitary(da, &mut rng);
            let v = random_unitary(db, &mut rng);
            let dressed = me.apply_local(0, &u).unwrap().apply_local(1, &v).unwrap();
            worst = worst.max((sgm(&dressed, &cut).unwrap() - 1.0).abs());
        }
    }
    check(worst <= 1e-12, format!("worst endpoint deviation {worst:.2e}"))
}

fn metric_routes() -> Outcome {
    let mut rng = seeded(12);
    let shapes: [&[usize]; 6] = [&[2, 2], &[2, 3], &[3, 3], &[2, 4], &[3, 4], &[2, 2, 2]];
    let mut worst: f64 = 0.0;
    for k in 0..1000 {
        let shape = shapes[k % shapes.len()];
        let s = random_state(&SubsystemDims::new(shape.to_vec()).unwrap(), &mut rng);
        let cuts = bipartitions(shape.len()).unwrap();
        let bp = &cuts[k % cuts.len()];
        worst = worst.max((sgm(&s, bp).unwrap() - sgm_via_bures(&s, bp).unwrap()).abs());
    }
    check(worst <= 1e-12, format!("1000 states, worst |sgm - sgm_via_bures| = {worst:.2e}"))
}

fn gm_flat_sgm_varies() -> Outcome {
    let grid: Vec<f64> = (0..=10).map(|k| 0.05 * k as f64).collect();
    let c = sweep(Family::Beta, &grid, &[Measure::Sgm, Measure::Gm]).unwrap();
    let spread = |v: &[f64]| {
        v.iter().cloned().fold(f64::NEG_INFINITY, f64::max) - v.iter().cloned().fold(f64::INFINITY, f64::min)
    };
    let gm_spread = spread(c.get("gm").unwrap());
    let sgm_spread = spread(c.get("sgm").unwrap());
    check(
        gm_spread <= 1e-12 && sgm_spread > 0.01,
        format!("gm spread {gm_spread:.2e}, sgm spread {sgm_spread:.4}"),
    )
}

fn teleportation() -> Outcome {
    let ideal = ChannelState::ideal();
    let mut worst_point: f64 = 0.0;
    for i in 0..21 {
        for j in 0..21 {
            let input = InputState::new(i as f64 / 20.0, std::f64::consts::TAU * j as f64 / 20.0).unwrap();
            worst_point = worst_point.max((fidelity(&input, &ideal).unwrap() - 1.0).abs());
        }
    }
    let ideal_avg = fidelity_avg(&ideal, 21, 21).unwrap();

    // full sweep: 51 values of r on a 101×101 input grid
    let n = 101;
    let mut worst_prob: f64 = 0.0;
    let mut max_avg: f64 = 0.0;
    let mut min_avg: f64 = 1.0;
    for k in 0..51 {
        let channel = beta_r(0.5 * k as f64 / 50.0).unwrap();
        for (i, j) in [(0, 0), (25, 13), (50, 50), (77, 91), (100, 100)] {
            let input = InputState::new(i as f64 / 100.0, std::f64::consts::TAU * j as f64 / 100.0).unwrap();
            let total: f64 = teleport_once(&input, &channel).unwrap().outcomes.iter().map(|o| o.probability).sum();
            worst_prob = worst_prob.max((total - 1.0).abs());
        }
        let f = fidelity_avg(&channel, n, n).unwrap();
        max_avg = max_avg.max(f);
        min_avg = min_avg.min(f);
    }
    check(
        worst_point <= 1e-10 && (ideal_avg - 1.0).abs() <= 1e-10 && worst_prob <= 1e-10 && max_avg <= 1.0,
        format!(
            "ideal: worst |F-1| {worst_point:.2e}, |F_av-1| {:.2e}; sweep: worst |sum p - 1| {worst_prob:.2e}, F_av in [{min_avg:.5}, {max_avg:.5}]",
            (ideal_avg - 1.0).abs()
        ),
    )
}

fn gms_ranking() -> Outcome {
    let g = gms(&ghz(3).unwrap()).unwrap().value;
    let wv = gms(&w(3).unwrap()).unwrap().value;
    // each W cut has Schmidt spectrum (2/3, 1/3) on two levels
    let n1 = (1.0 - 1.0 / 2f64.sqrt()).sqrt();
    let w_oracle = 1.0 - (1.0 - ((2.0f64 / 3.0).sqrt() + (1.0f64 / 3.0).sqrt()) / 2f64.sqrt()).sqrt() / n1;
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let biseparable = [
        basis(&[2, 2, 2], &[0, 0, 0]),
        PureState::from_real(&[2, 2, 2], &[h, 0.0, 0.0, h, 0.0, 0.0, 0.0, 0.0]).unwrap(),
        chi3(0.0).unwrap(),
        chi3(FRAC_PI_2).unwrap(),
        PureState::from_real(&[2, 2, 2, 2], &{
            let mut a = vec![0.0; 16];
            a[0] = 0.5;
            a[3] = 0.5;
            a[12] = 0.5;
            a[15] = 0.5;
            a
        })
        .unwrap(),
    ];
    let bisep_max = biseparable.iter().map(|s| gms(s).unwrap().value).fold(0.0, f64::max);
    let bisep_exact = biseparable.iter().all(|s| gms(s).unwrap().value == 0.0);
    check(
        (g - 1.0).abs() <= 1e-12 && g > wv && bisep_exact && (wv - w_oracle).abs() <= 1e-12,
        format!("GMS(GHZ) = {g:.15}, GMS(W) = {wv:.6} (oracle {w_oracle:.6}), max GMS(biseparable) = {bisep_max:e}"),
    )
}

fn bipartition_counts() -> Outcome {
    let mut detail = Vec::new();
    let mut ok = true;
    for (n, want) in [(2, 1), (3, 3), (4, 7), (5, 15)] {
        // every nonempty proper subset, identified with its complement
        let full = (1u32 << n) - 1;
        let splits: std::collections::BTreeSet<u32> = (1..full).map(|s| s.min(full ^ s)).collect();
        let enumerated = splits.len();
        let listed = bipartitions(n).unwrap().len();
        ok &= enumerated == want && listed == want && bipartition_count(n) == want;
        detail.push(format!("m({n})={listed}"));
    }
    check(ok, detail.join(", "))
}

fn schur_concavity() -> Outcome {
    let mut rng = seeded(17);
    let mut worst: f64 = 0.0;
    for _ in 0..10_000 {
        let n = rng.random_range(2..=6);
        let mut l = random_simplex(n, &mut rng);
        if rng.random_bool(0.25) {
            let z = rng.random_range(0..n);
            l[z] = 0.0;
            let s: f64 = l.iter().sum();
            l.iter_mut().for_each(|x| *x /= s);
        }
        let i = rng.random_range(0..n);
        let j = (i + rng.random_range(1..n)) % n;
        let (rich, poor) = if l[i] >= l[j] { (i, j) } else { (j, i) };
        let before = sgm_from_spectrum(&SchmidtSpectrum::new(l.clone(), n).unwrap()).unwrap();
        let t = rng.random_range(0.0..=1.0) * (l[rich] - l[poor]);
        l[rich] -= t;
        l[poor] += t;
        let after = sgm_from_spectrum(&SchmidtSpectrum::new(l, n).unwrap()).unwrap();
        worst = worst.max(before - after);
    }
    check(worst <= 1e-12, format!("10000 transfers, largest decrease {worst:.2e}"))
}

fn chi1_chi2_footing() -> Outcome {
    let grid = linspace(0.0, FRAC_PI_2, 201);
    let measures = [Measure::Ggm, Measure::Gmc, Measure::Gms, Measure::Fill];
    let a = sweep(Family::Chi1, &grid, &measures).unwrap();
    let b = sweep(Family::Chi2, &grid, &measures).unwrap();
    let diff = |name: &str, interior: bool| {
        let (x, y) = (a.get(name).unwrap(), b.get(name).unwrap());
        let range = if interior { 1..x.len() - 1 } else { 0..x.len() };
        range.map(|k| (x[k] - y[k]).abs()).fold(0.0, f64::max)
    };
    let (ggm_d, gmc_d) = (diff("ggm", false), diff("gmc", false));
    let (gms_d, fill_d) = (diff("gms", true), diff("fill", true));
    check(
        ggm_d <= 1e-10 && gmc_d <= 1e-10 && gms_d > 0.01 && fill_d > 0.01,
        format!("max diff ggm {ggm_d:.1e}, gmc {gmc_d:.1e}, gms {gms_d:.4}, fill {fill_d:.4}"),
    )
}

fn chi3_cusps_and_crossover() -> Outcome {
    let grid = linspace(0.0, FRAC_PI_2, 201);
    let nearest = (0..grid.len())
        .min_by(|&p, &q| (grid[p] - FRAC_PI_4).abs().total_cmp(&(grid[q] - FRAC_PI_4).abs()))
        .unwrap();
    let c = sweep(Family::Chi3, &grid, &[Measure::Ggm, Measure::Gmc, Measure::Gms, Measure::Gbc]).unwrap();
    let flags = |name: &str| cusp_scan(c.get(name).unwrap(), &grid).unwrap();
    let (fg, fc, fs, fb) = (flags("ggm"), flags("gmc"), flags("gms"), flags("gbc"));
    let cusps_ok = fg == vec![nearest] && fc == vec![nearest] && fs.is_empty() && fb.is_empty();

    // with qubits labelled right to left, subsystem 1 is B and subsystem 0 is C
    let e = max_eig_curves(&grid).unwrap();
    let x = crossings(e.get("lmax_q1").unwrap(), e.get("lmax_q0").unwrap(), &grid);
    let step = grid[1] - grid[0];
    let cross_ok = x.len() == 1 && (x[0] - FRAC_PI_4).abs() <= step;
    check(
        cusps_ok && cross_ok,
        format!("cusps ggm {fg:?}, gmc {fc:?}, gms {fs:?}, gbc {fb:?} (pi/4 at {nearest}); crossing at {x:?}"),
    )
}

fn comparison_anchors() -> Outcome {
    let g = ghz(3).unwrap();
    let wst = w(3).unwrap();
    let fill_g = concurrence_fill(&g).unwrap();
    let fill_w = concurrence_fill(&wst).unwrap();
    let gmc_w = gmc(&wst).unwrap().value;
    let ggm_g = ggm(&g).unwrap().value;
    let devs = [
        (fill_g - 1.0).abs(),
        (fill_w - 8.0 / 9.0).abs(),
        (gmc_w - (8.0f64 / 9.0).sqrt()).abs(),
        (ggm_g - 0.5).abs(),
    ];
    let worst = devs.iter().cloned().fold(0.0, f64::max);
    check(
        worst <= 1e-12,
        format!("fill(GHZ) {fill_g:.15}, fill(W) {fill_w:.15}, GMC(W) {gmc_w:.15}, GGM(GHZ) {ggm_g:.15}"),
    )
}

fn lu_invariance() -> Outcome {
    let mut rng = seeded(19);
    let states = [
        ("GHZ", ghz(3).unwrap()),
        ("W", w(3).unwrap()),
        ("beta(0.2)", beta_r(0.2).unwrap().state().clone()),
        ("chi3(0.6)", chi3(0.6).unwrap()),
    ];
    let mut worst: f64 = 0.0;
    let mut worst_at = String::new();
    for (label, s) in &states {
        let cuts = bipartitions(s.num_subsystems()).unwrap();
        let measures: Vec<Measure> = Measure::ALL
            .into_iter()
            .filter(|m| *m != Measure::Fill || s.dims().as_slice() == [2, 2, 2])
            .collect();
        let reference: Vec<Vec<f64>> = measures
            .iter()
            .map(|m| cuts.iter().map(|bp| m.value(s, m.is_bipartite().then_some(bp)).unwrap()).collect())
            .collect();
        for _ in 0..100 {
            let d = local_unitary_dressing(s, &mut rng).unwrap();
            for (m, refs) in measures.iter().zip(&reference) {
                for (bp, r) in cuts.iter().zip(refs) {
                    let dev = (m.value(&d, m.is_bipartite().then_some(bp)).unwrap() - r).abs();
                    if dev > worst {
                        worst = dev;
                        worst_at = format!(" ({m} on {label}, cut {bp})");
                    }
                }
            }
        }
    }
    check(worst <= 1e-10, format!("400 dressings, worst deviation {worst:.2e}{worst_at}"))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("sgm endpoints on (2,2), (3,3), (2,3)", sgm_endpoints),
        ("closed form matches the metric route", metric_routes),
        ("gm flat and sgm varying along beta(r)", gm_flat_sgm_varies),
        ("teleportation anchor and sweep normalization", teleportation),
        ("gms ranks GHZ above W and vanishes on biseparable states", gms_ranking),
        ("bipartition count", bipartition_counts),
        ("transfers toward uniform never lower sgm", schur_concavity),
        ("ggm and gmc tie chi1 and chi2 while gms and fill separate them", chi1_chi2_footing),
        ("chi3 cusps and eigenvalue crossover at pi/4", chi3_cusps_and_crossover),
        ("comparison measure anchors", comparison_anchors),
        ("local-unitary invariance of every measure", lu_invariance),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{secs:.2}s]", k + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail} [{secs:.2}s]", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
