use selberg_closed_forms::{laguerre_rhs, morris_rhs};
use selberg_ensembles::*;
use selberg_numeric::tanh_sinh::{refine, Pt};
use selberg_numeric::{quad_integrate, DensitySpec};

fn mean_and_se(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, (var / n).sqrt())
}

fn assert_within(values: &[f64], want: f64, sigmas: f64, what: &str) {
    let (mean, se) = mean_and_se(values);
    assert!((mean - want).abs() < sigmas * se, "{what}: {mean} vs {want} (se {se})");
}

fn row<'a>(rows: &'a [MomentRow], name: &str) -> &'a MomentRow {
    rows.iter().find(|r| r.moment == name).unwrap()
}

#[test]
fn dirichlet_means() {
    for (shapes, seed) in [(vec![1.0, 1.0], 1), (vec![2.0, 2.0, 2.0], 2), (vec![1.0, 3.0], 3)] {
        let draws = draw_many(Exec::Parallel, 20_000, seed, |s| dirichlet_sample(&shapes, s)).unwrap();
        let total: f64 = shapes.iter().sum();
        for w in &draws {
            assert!(w.iter().all(|&x| x >= 0.0));
            assert!((w.iter().sum::<f64>() - 1.0).abs() < 1e-15);
        }
        for (i, s) in shapes.iter().enumerate() {
            let col: Vec<f64> = draws.iter().map(|w| w[i]).collect();
            assert_within(&col, s / total, 3.0, &format!("D{shapes:?} mean {i}"));
        }
    }
}

#[test]
fn dirichlet_rejects_bad_shapes() {
    assert!(matches!(dirichlet_sample(&[1.0, 0.0], 1), Err(EnsembleError::Domain(_))));
    assert!(matches!(dirichlet_sample(&[], 1), Err(EnsembleError::Domain(_))));
}

#[test]
fn single_root_solves_linear_equation() {
    for (a1, a2, w1, w2) in [(1.0, 0.0, 0.3, 0.7), (5.0, -2.0, 0.9, 0.1), (0.1, 0.05, 0.5, 0.5)] {
        let s = rational_roots(&[a1, a2], &[w1, w2], RationalShape::Compact).unwrap();
        let x = s.points[0];
        assert!((x - (w1 * a2 + w2 * a1) / (w1 + w2)).abs() < 1e-12);
        assert!((w1 / (a1 - x) + w2 / (a2 - x)).abs() < 1e-12);
        assert!(a2 < x && x < a1);
    }
}

#[test]
fn rational_roots_reject_bad_nodes() {
    assert!(rational_roots(&[0.0, 1.0], &[0.5, 0.5], RationalShape::Compact).is_err());
    assert!(rational_roots(&[1.0, 0.0], &[0.5, -0.5], RationalShape::Compact).is_err());
    assert!(rational_roots(&[1.0, 0.0], &[0.5], RationalShape::Compact).is_err());
}

#[test]
fn dixon_anderson_root_moments() {
    let a = [1.0, 0.4, -0.5];
    let s = [1.0, 1.0, 1.0];
    let samples = draw_many(Exec::Parallel, 100_000, 21, |seed| {
        rational_roots(&a, &dirichlet_sample(&s, seed)?, RationalShape::Compact)
    })
    .unwrap();
    let bounds = |k: usize, _: &[Pt]| Some((a[k + 1], a[k]));
    let integrate = |g: &(dyn Fn(f64, f64) -> f64 + Sync)| {
        // t[0] is the upper root
        let f = |t: &[Pt]| (t[0].x - t[1].x) * g(t[0].x, t[1].x);
        refine(Exec::Parallel, 2, 0.0, 1e-12, &bounds, &f).unwrap().value
    };
    let norm = quad_integrate(&DensitySpec::DixonAnderson { a: a.to_vec(), s: s.to_vec() }, 1e-10).unwrap().value;
    assert!((integrate(&|_, _| 1.0) - norm).abs() < 1e-9 * norm);
    let e1 = integrate(&|x, y| x + y) / norm;
    let e2 = integrate(&|x, y| x * y) / norm;
    let sums: Vec<f64> = samples.iter().map(|s| s.points.iter().sum()).collect();
    let prods: Vec<f64> = samples.iter().map(|s| s.points.iter().product()).collect();
    assert_within(&sums, e1, 3.0, "E[t1 + t2]");
    assert_within(&prods, e2, 3.0, "E[t1 t2]");
}

#[test]
fn gaussian_rational_roots_interlace() {
    let nodes = [2.0, 0.5, -1.0];
    let s = rational_roots(&nodes, &[0.4, 1.3, 0.2], RationalShape::Gaussian { mu0: 0.7 }).unwrap();
    assert_eq!(s.points.len(), 4);
    assert!(s.points[0] < nodes[2] && s.points[3] > nodes[0]);
    assert!(nodes[2] < s.points[1] && s.points[1] < nodes[1]);
    assert!(nodes[1] < s.points[2] && s.points[2] < nodes[0]);
    for &x in &s.points {
        let r = x - 0.7 + 0.4 / (2.0 - x) + 1.3 / (0.5 - x) + 0.2 / (-1.0 - x);
        assert!(r.abs() < 1e-10, "{r}");
    }
}

#[test]
fn crystallized_recurrence_hits_jacobi_zeros() {
    for (alpha, beta) in [(1.0, 1.0), (2.0, 3.0), (0.5, 1.5), (0.3, 0.7)] {
        let got = crystallized_roots(3, alpha, beta).unwrap();
        let want = jacobi_zeros(3, alpha, beta).unwrap();
        for (g, w) in got.iter().zip(&want) {
            assert!((g - w).abs() < 1e-8, "({alpha}, {beta}): {got:?} vs {want:?}");
        }
    }
}

#[test]
fn jacobi_zeros_of_legendre() {
    // P_2 on (0,1) vanishes at 1/2 +- 1/(2 sqrt 3)
    let z = jacobi_zeros(2, 1.0, 1.0).unwrap();
    let d = 0.5 / 3f64.sqrt();
    assert!((z[0] - (0.5 - d)).abs() < 1e-14 && (z[1] - (0.5 + d)).abs() < 1e-14);
}

#[test]
fn selberg_recurrence_single_variable_is_beta() {
    let (alpha, beta) = (2.0, 3.0);
    let samples = draw_many(Exec::Parallel, 20_000, 31, |s| selberg_density_sample(1, alpha, beta, 0.8, s)).unwrap();
    let t: Vec<f64> = samples.iter().map(|s| s.points[0]).collect();
    assert!(t.iter().all(|&x| x > 0.0 && x < 1.0));
    assert_within(&t, alpha / (alpha + beta), 3.0, "Beta mean");
}

#[test]
fn selberg_recurrence_two_variables() {
    let family = Family::Selberg { n: 2, alpha: 1.0, beta: 1.0, gamma: 1.0 };
    let samples = draw_many(Exec::Parallel, 40_000, 32, |s| selberg_density_sample(2, 1.0, 1.0, 1.0, s)).unwrap();
    let rows = moment_report(&samples, &family).unwrap();
    let e1 = row(&rows, "e1");
    assert!((e1.closed_form - 1.0).abs() < 1e-12);
    assert!(e1.z_score.abs() < 3.0, "{e1:?}");
    assert!(row(&rows, "e2").z_score.abs() < 3.0, "{rows:?}");
}

#[test]
fn selberg_recurrence_matches_kadell_moments() {
    let family = Family::Selberg { n: 4, alpha: 0.7, beta: 1.6, gamma: 0.45 };
    let samples = draw_many(Exec::Parallel, 40_000, 33, |s| selberg_density_sample(4, 0.7, 1.6, 0.45, s)).unwrap();
    for s in &samples {
        assert!(s.points.windows(2).all(|p| p[0] < p[1]));
        assert!(s.points[0] > 0.0 && s.points[3] < 1.0);
    }
    for r in moment_report(&samples, &family).unwrap() {
        assert!(r.z_score.abs() < 4.0, "{r:?}");
    }
}

#[test]
fn hermite_trace_square() {
    for (n, gamma) in [(2, 1.0), (3, 0.7), (5, 1.5)] {
        let want = n as f64 + gamma * (n * (n - 1)) as f64;
        for method in [HermiteMethod::Recurrence, HermiteMethod::Tridiagonal] {
            let samples =
                draw_many(Exec::Parallel, 20_000, 41, |s| hermite_beta_sample(n, gamma, method, s)).unwrap();
            let rows = moment_report(&samples, &Family::Hermite { n, gamma }).unwrap();
            let p2 = row(&rows, "p2");
            assert_eq!(p2.closed_form, want);
            assert!(p2.z_score.abs() < 3.0, "{method:?} n={n}: {p2:?}");
        }
    }
}

#[test]
fn hermite_single_point_is_standard_normal() {
    for method in [HermiteMethod::Recurrence, HermiteMethod::Tridiagonal] {
        let x: Vec<f64> = draw_many(Exec::Parallel, 20_000, 42, |s| hermite_beta_sample(1, 0.5, method, s))
            .unwrap()
            .iter()
            .map(|s| s.points[0])
            .collect();
        assert_within(&x, 0.0, 3.0, "mean");
        let sq: Vec<f64> = x.iter().map(|v| v * v).collect();
        assert_within(&sq, 1.0, 3.0, "second moment");
    }
    let a = hermite_beta_sample(1, 0.5, HermiteMethod::Recurrence, 9).unwrap();
    let b = hermite_beta_sample(1, 0.5, HermiteMethod::Tridiagonal, 9).unwrap();
    assert_eq!(a.points, b.points);
}

#[test]
fn hermite_methods_agree_on_trace_moments() {
    let (n, gamma) = (4, 0.8);
    let trace = |method| -> Vec<f64> {
        draw_many(Exec::Parallel, 100_000, 43, |s| hermite_beta_sample(n, gamma, method, s))
            .unwrap()
            .iter()
            .map(|s| s.points.iter().sum())
            .collect()
    };
    let a = trace(HermiteMethod::Recurrence);
    let b = trace(HermiteMethod::Tridiagonal);
    for k in 1..=4 {
        let pa: Vec<f64> = a.iter().map(|x| x.powi(k)).collect();
        let pb: Vec<f64> = b.iter().map(|x| x.powi(k)).collect();
        let ((ma, sa), (mb, sb)) = (mean_and_se(&pa), mean_and_se(&pb));
        let se = (sa * sa + sb * sb).sqrt();
        assert!((ma - mb).abs() < 4.0 * se, "moment {k}: {ma} vs {mb} (se {se})");
    }
}

#[test]
fn metropolis_circular_char_poly_moment() {
    let target = TargetDensity::Circular { n: 2, beta: 2.0 };
    let config = MetropolisConfig { n_steps: 4_000, burn_in: 1_000, thinning: 4, seed: 51, chains: 16 };
    let run = metropolis_sample(target, config).unwrap();
    assert!(run.warning.is_none(), "{:?}", run.warning);
    let want = morris_rhs(2, 1.0, 1.0, 1.0).unwrap().value() / morris_rhs(2, 0.0, 0.0, 1.0).unwrap().value();
    let rows = moment_report(&run.samples, &target.family()).unwrap();
    let r = row(&rows, "abs_char_poly_at_minus_one^2");
    assert!((r.closed_form - want).abs() < 1e-12);
    assert!(r.z_score.abs() < 4.0, "{r:?}");
}

#[test]
fn metropolis_laguerre_single_variable_mean() {
    let (m, gamma) = (2.0, 1.5);
    let target = TargetDensity::Laguerre { n: 1, m, gamma };
    let config = MetropolisConfig { n_steps: 4_000, burn_in: 1_000, thinning: 4, seed: 52, chains: 16 };
    let run = metropolis_sample(target, config).unwrap();
    assert!(run.warning.is_none());
    let rows = moment_report(&run.samples, &target.family()).unwrap();
    let e1 = row(&rows, "e1");
    assert_eq!(e1.closed_form, m * gamma);
    assert!(e1.z_score.abs() < 3.0, "{e1:?}");
}

#[test]
fn metropolis_selberg_pair_product() {
    let target = TargetDensity::Selberg { n: 2, alpha: 1.0, beta: 1.0, gamma: 1.0 };
    let config = MetropolisConfig { n_steps: 4_000, burn_in: 1_000, thinning: 4, seed: 53, chains: 16 };
    let run = metropolis_sample(target, config).unwrap();
    assert!(run.warning.is_none());
    let rows = moment_report(&run.samples, &target.family()).unwrap();
    let e2 = row(&rows, "e2");
    // Kadell at lambda = (1,1), n = 2, alpha = beta = gamma = 1
    assert!((e2.closed_form - 1.0 / 6.0).abs() < 1e-12, "{e2:?}");
    assert!(e2.z_score.abs() < 4.0, "{e2:?}");
}

#[test]
fn metropolis_laguerre_two_variables_normalization() {
    let (m, gamma) = (3.0, 1.0);
    let shape = (m - 1.0) * gamma;
    let target = TargetDensity::Laguerre { n: 2, m, gamma };
    let config = MetropolisConfig { n_steps: 8_000, burn_in: 1_000, thinning: 4, seed: 54, chains: 16 };
    let run = metropolis_sample(target, config).unwrap();
    // <t1 t2> is the ratio of normalizations at shape+1 and shape
    let want = laguerre_rhs(2, shape + 1.0, gamma).unwrap().value() / laguerre_rhs(2, shape, gamma).unwrap().value();
    let rows = moment_report(&run.samples, &target.family()).unwrap();
    let e2 = row(&rows, "e2");
    assert!((e2.closed_form - want).abs() < 1e-10 * want, "{} vs {want}", e2.closed_form);
    for r in &rows {
        assert!(r.z_score.abs() < 4.0, "{r:?}");
    }
}

#[test]
fn metropolis_flat_target_warns() {
    let target = TargetDensity::Circular { n: 3, beta: 0.0 };
    let config = MetropolisConfig { n_steps: 200, burn_in: 100, thinning: 1, seed: 55, chains: 2 };
    let run = metropolis_sample(target, config).unwrap();
    let w = run.warning.expect("every move is accepted on a flat target");
    assert!(w.acceptance > ACCEPTANCE_RANGE.1);
}

#[test]
fn metropolis_rejects_bad_parameters() {
    let config = MetropolisConfig { n_steps: 10, burn_in: 10, thinning: 1, seed: 1, chains: 1 };
    assert!(metropolis_sample(TargetDensity::Laguerre { n: 3, m: 1.0, gamma: 1.0 }, config).is_err());
    assert!(metropolis_sample(TargetDensity::Selberg { n: 2, alpha: 0.0, beta: 1.0, gamma: 1.0 }, config).is_err());
    let no_thin = MetropolisConfig { thinning: 0, ..config };
    assert!(metropolis_sample(TargetDensity::Circular { n: 2, beta: 2.0 }, no_thin).is_err());
}

#[test]
fn report_closed_forms() {
    let circ = Family::Circular { n: 1, beta: 2.0 };
    let samples = draw_many(Exec::Parallel, 10_000, 61, |s| {
        let u: f64 = dirichlet_sample(&[1.0, 1.0], s)?[0];
        let theta = -std::f64::consts::PI + 2.0 * std::f64::consts::PI * u;
        Ok(EnsembleSample { points: vec![theta], meta: SampleMeta { family: circ.clone(), seed: s } })
    })
    .unwrap();
    let rows = moment_report(&samples, &circ).unwrap();
    let r = row(&rows, "abs_char_poly_at_minus_one^2");
    assert!((r.closed_form - 2.0).abs() < 1e-14);
    assert!(r.z_score.abs() < 3.0, "{r:?}");

    let mehta = Family::Hermite { n: 2, gamma: 1.0 };
    let samples = draw_many(Exec::Parallel, 1_000, 62, |s| hermite_beta_sample(2, 1.0, HermiteMethod::Tridiagonal, s))
        .unwrap();
    assert_eq!(row(&moment_report(&samples, &mehta).unwrap(), "p2").closed_form, 4.0);
}

#[test]
fn report_errors() {
    let few = draw_many(Exec::Parallel, 10, 1, |s| selberg_density_sample(2, 1.0, 1.0, 1.0, s)).unwrap();
    let fam = Family::Selberg { n: 2, alpha: 1.0, beta: 1.0, gamma: 1.0 };
    assert!(matches!(moment_report(&few, &fam), Err(EnsembleError::TooFewSamples { .. })));
    let many = draw_many(Exec::Parallel, 1000, 2, |s| {
        rational_roots(&[1.0, 0.0], &dirichlet_sample(&[1.0, 1.0], s)?, RationalShape::Compact)
    })
    .unwrap();
    let fam = many[0].meta.family.clone();
    assert!(matches!(moment_report(&many, &fam), Err(EnsembleError::Unsupported(_))));
}

#[test]
fn csv_has_one_sorted_row_per_sample() {
    let samples = draw_many(Exec::Parallel, 5, 71, |s| selberg_density_sample(3, 1.0, 2.0, 0.5, s)).unwrap();
    let mut buf = Vec::new();
    write_csv(&samples, &mut buf).unwrap();
    let mut reader = csv::Reader::from_reader(buf.as_slice());
    assert_eq!(reader.headers().unwrap().iter().collect::<Vec<_>>(), ["family", "seed", "p0", "p1", "p2"]);
    let rows: Vec<csv::StringRecord> = reader.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 5);
    for (r, s) in rows.iter().zip(&samples) {
        assert_eq!(&r[0], "selberg(n=3,alpha=1,beta=2,gamma=0.5)");
        assert_eq!(r[1].parse::<u64>().unwrap(), s.meta.seed);
        let pts: Vec<f64> = (2..5).map(|i| r[i].parse().unwrap()).collect();
        assert_eq!(pts, s.points);
        assert!(pts.windows(2).all(|p| p[0] <= p[1]));
    }
}
