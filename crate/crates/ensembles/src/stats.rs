use std::f64::consts::PI;
use std::io;

use selberg_closed_forms::{kadell_rhs, morris_rhs, selberg_rhs, EvalParams};
use selberg_par::{batch_seed, map_indexed, Exec};

use crate::error::{EnsembleError, Result};
use crate::sample::{EnsembleSample, Family};

/// Fewest samples [`moment_report`] accepts.
pub const MIN_REPORT_SAMPLES: usize = 1000;
/// Batches used for the batch-means standard error.
pub const REPORT_BATCHES: usize = 32;

/// `count` independent draws; draw `i` gets `batch_seed(seed, i)`, so the result
/// does not depend on the executor.
pub fn draw_many<T, F>(exec: Exec, count: usize, seed: u64, draw: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(u64) -> Result<T> + Sync + Send,
{
    map_indexed(exec, count, |i| draw(batch_seed(seed, i as u64))).into_iter().collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct MomentRow {
    pub moment: String,
    pub empirical: f64,
    pub closed_form: f64,
    /// Batch-means standard error of `empirical`.
    pub std_err: f64,
    pub z_score: f64,
}

fn binomial(n: usize, r: usize) -> f64 {
    (0..r).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Elementary symmetric functions `e_0..e_n`.
fn elementary(points: &[f64]) -> Vec<f64> {
    let mut e = vec![0.0; points.len() + 1];
    e[0] = 1.0;
    for (k, &x) in points.iter().enumerate() {
        for r in (1..=k + 1).rev() {
            e[r] += x * e[r - 1];
        }
    }
    e
}

type Statistic = Box<dyn Fn(&[f64]) -> f64>;

fn table(family: &Family) -> Result<Vec<(String, Statistic, f64)>> {
    let mut rows: Vec<(String, Statistic, f64)> = Vec::new();
    match *family {
        Family::Selberg { n, alpha, beta, gamma } => {
            let norm = selberg_rhs(&EvalParams::new(n, alpha, beta, gamma))?;
            for r in 1..=n {
                let want = kadell_rhs(n, alpha, beta, gamma, &vec![1; r])?.div(norm).value();
                rows.push((format!("e{r}"), Box::new(move |p: &[f64]| elementary(p)[r]), want));
            }
        }
        Family::Laguerre { n, m, gamma } => {
            let top = (m - n as f64 + 1.0) * gamma + (n as f64 - 1.0) * gamma;
            for r in 1..=n {
                let want = binomial(n, r) * (0..r).map(|i| top - i as f64 * gamma).product::<f64>();
                rows.push((format!("e{r}"), Box::new(move |p: &[f64]| elementary(p)[r]), want));
            }
        }
        Family::Circular { n, beta } => {
            let base = morris_rhs(n, 0.0, 0.0, beta / 2.0)?;
            for k in 1..=2 {
                let kf = f64::from(k);
                let want = morris_rhs(n, kf, kf, beta / 2.0)?.div(base).value();
                let stat = move |p: &[f64]| p.iter().map(|t| (2.0 + 2.0 * t.cos()).powi(k)).product::<f64>();
                rows.push((format!("abs_char_poly_at_minus_one^{}", 2 * k), Box::new(stat), want));
            }
        }
        Family::Hermite { n, gamma } => {
            let nf = n as f64;
            rows.push(("p1".into(), Box::new(|p: &[f64]| p.iter().sum()), 0.0));
            rows.push(("p2".into(), Box::new(|p: &[f64]| p.iter().map(|x| x * x).sum()), nf + gamma * nf * (nf - 1.0)));
        }
        Family::RationalCompact { .. } | Family::RationalGaussian { .. } => {
            return Err(EnsembleError::Unsupported(family.to_string()));
        }
    }
    Ok(rows)
}

/// Sample mean and batch-means standard error; contiguous batches absorb the
/// autocorrelation of Metropolis output.
fn mean_and_error(values: &[f64]) -> (f64, f64) {
    let n = values.len();
    let mean = values.iter().sum::<f64>() / n as f64;
    let size = n / REPORT_BATCHES;
    let means: Vec<f64> =
        (0..REPORT_BATCHES).map(|b| values[b * size..(b + 1) * size].iter().sum::<f64>() / size as f64).collect();
    let grand = means.iter().sum::<f64>() / REPORT_BATCHES as f64;
    let var = means.iter().map(|m| (m - grand).powi(2)).sum::<f64>() / (REPORT_BATCHES - 1) as f64;
    (mean, (var / REPORT_BATCHES as f64).sqrt())
}

/// Compares empirical moments with closed forms: `e_r` for Selberg and Laguerre samples,
/// `|prod (1 + e^{i theta})|^{2k}` for circular ones, power sums for Gaussian ones.
pub fn moment_report(samples: &[EnsembleSample], family: &Family) -> Result<Vec<MomentRow>> {
    if samples.len() < MIN_REPORT_SAMPLES {
        return Err(EnsembleError::TooFewSamples { need: MIN_REPORT_SAMPLES, got: samples.len() });
    }
    let n = family.n();
    if let Some(bad) = samples.iter().find(|s| s.points.len() != n) {
        return Err(EnsembleError::Domain(format!("sample with {} points, family has {n}", bad.points.len())));
    }
    let rows = table(family)?;
    Ok(rows
        .into_iter()
        .map(|(moment, stat, closed_form)| {
            let values: Vec<f64> = samples.iter().map(|s| stat(&s.points)).collect();
            let (empirical, std_err) = mean_and_error(&values);
            let z_score = (empirical - closed_form) / std_err;
            MomentRow { moment, empirical, closed_form, std_err, z_score }
        })
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KsResult {
    pub statistic: f64,
    /// Asymptotic Kolmogorov tail probability.
    pub p_value: f64,
}

fn kolmogorov_tail(lambda: f64) -> f64 {
    if lambda < 0.2 {
        return 1.0;
    }
    let mut sum = 0.0;
    for k in 1..=100 {
        let kf = f64::from(k);
        let term = (-2.0 * kf * kf * lambda * lambda).exp();
        sum += if k % 2 == 1 { term } else { -term };
        if term < 1e-16 {
            break;
        }
    }
    (2.0 * sum).clamp(0.0, 1.0)
}

/// Two-sample Kolmogorov-Smirnov test.
pub fn ks_two_sample(a: &[f64], b: &[f64]) -> Result<KsResult> {
    if a.is_empty() || b.is_empty() || a.iter().chain(b).any(|x| x.is_nan()) {
        return Err(EnsembleError::Domain("KS needs two nonempty samples without NaN".into()));
    }
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    x.sort_by(f64::total_cmp);
    y.sort_by(f64::total_cmp);
    let (n, m) = (x.len(), y.len());
    let (mut i, mut j, mut d) = (0, 0, 0.0f64);
    while i < n && j < m {
        let v = x[i].min(y[j]);
        while i < n && x[i] <= v {
            i += 1;
        }
        while j < m && y[j] <= v {
            j += 1;
        }
        d = d.max((i as f64 / n as f64 - j as f64 / m as f64).abs());
    }
    let ne = (n * m) as f64 / (n + m) as f64;
    let root = ne.sqrt();
    let p_value = kolmogorov_tail((root + 0.12 + 0.11 / root) * d);
    Ok(KsResult { statistic: d, p_value })
}

/// Counter-clockwise angular distance from `angles[from]` to the point `hop` places
/// further round the circle; `angles` sorted.
pub fn circular_gap(angles: &[f64], from: usize, hop: usize) -> f64 {
    let n = angles.len();
    let to = (from + hop) % n;
    let laps = ((from + hop) / n) as f64;
    angles[to] - angles[from] + 2.0 * PI * laps
}

/// One row per sample: family tag, seed, then the sorted points.
pub fn write_csv<W: io::Write>(samples: &[EnsembleSample], out: W) -> Result<()> {
    let width = samples.iter().map(|s| s.points.len()).max().unwrap_or(0);
    let mut w = csv::WriterBuilder::new().flexible(true).from_writer(out);
    let mut header = vec!["family".to_string(), "seed".to_string()];
    header.extend((0..width).map(|i| format!("p{i}")));
    w.write_record(&header)?;
    for s in samples {
        let mut row = vec![s.meta.family.to_string(), s.meta.seed.to_string()];
        row.extend(s.points.iter().map(|x| x.to_string()));
        w.write_record(&row)?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}
