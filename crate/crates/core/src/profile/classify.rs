//! Least-squares growth trend of a finite `Δ` table.
//!
//! Three models are fitted over the rows with `n >= 4`: a constant,
//! `Q·log₂ n + R` and `s·n + b`. The verdict is the model with the smallest
//! residual sum of squares (ties go to the simpler model) that also clears
//! its margin; if none does the verdict is `inconclusive`.
//!
//! Margins: `bounded` needs the last three values equal. Both growth
//! verdicts need `Δ(N) > Δ(⌈N/2⌉)` for the largest computed `N` (a step
//! followed by a plateau fits a log curve well but shows no growth), and
//! `linear-trend` additionally needs slope `>= 1/12`. Any verdict from
//! finitely many values is a heuristic and is labelled as one.

use serde::{Deserialize, Serialize};

use super::DeltaProfile;
use crate::error::{Error, Result};

/// Rows with `n` below this are ignored by the fits.
pub const FIT_MIN_N: usize = 4;
const TIE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Bounded,
    LogarithmicTrend,
    LinearTrend,
    Inconclusive,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Bounded => "bounded",
            Verdict::LogarithmicTrend => "logarithmic-trend",
            Verdict::LinearTrend => "linear-trend",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Thresholds {
    /// Trailing values that must agree for `bounded`.
    pub bounded_tail: usize,
    /// Least slope accepted for `linear-trend`.
    pub min_linear_slope: f64,
    /// Least log coefficient accepted for `logarithmic-trend`.
    pub min_log_coefficient: f64,
}

impl Default for Thresholds {
    fn default() -> Self {
        Self { bounded_tail: 3, min_linear_slope: 1.0 / 12.0, min_log_coefficient: 0.25 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LineFit {
    pub coefficient: f64,
    pub intercept: f64,
    pub residual: f64,
}

impl LineFit {
    pub fn at(&self, x: f64) -> f64 {
        self.coefficient * x + self.intercept
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Fits {
    pub constant: LineFit,
    /// Fitted against `log₂ n`.
    pub logarithmic: LineFit,
    pub linear: LineFit,
    /// Offsets `P <= R` with `Q·log₂ n + P <= Δ(n) <= Q·log₂ n + R` on the
    /// fitted rows, `Q` being the logarithmic coefficient.
    pub log_lower_intercept: f64,
    pub log_upper_intercept: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GrowthClassification {
    pub verdict: Verdict,
    pub heuristic: bool,
    pub spec: String,
    pub rows_used: usize,
    pub fits: Fits,
    pub thresholds: Thresholds,
}

/// Ordinary least squares `y = a·x + b`; a flat line when `x` is constant.
fn fit_line(xs: &[f64], ys: &[f64]) -> LineFit {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let a = if sxx > 0.0 { sxy / sxx } else { 0.0 };
    let b = my - a * mx;
    let residual = xs.iter().zip(ys).map(|(x, y)| (y - (a * x + b)).powi(2)).sum();
    LineFit { coefficient: a, intercept: b, residual }
}

/// Fits all three models to `(n, Δ)` points; needs at least one point.
pub fn fit_models(points: &[(usize, u32)]) -> Result<Fits> {
    if points.is_empty() {
        return Err(Error::input("no rows to fit"));
    }
    let ns: Vec<f64> = points.iter().map(|p| p.0 as f64).collect();
    let logs: Vec<f64> = ns.iter().map(|n| n.log2()).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.1 as f64).collect();
    let zeros = vec![0.0; ys.len()];
    let logarithmic = fit_line(&logs, &ys);
    let offsets = logs.iter().zip(&ys).map(|(x, y)| y - logarithmic.coefficient * x);
    let (lo, hi) = offsets.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), o| (lo.min(o), hi.max(o)));
    Ok(Fits {
        constant: fit_line(&zeros, &ys),
        logarithmic,
        linear: fit_line(&ns, &ys),
        log_lower_intercept: lo,
        log_upper_intercept: hi,
    })
}

fn fit_points(profile: &DeltaProfile) -> Vec<(usize, u32)> {
    profile.rows.iter().filter(|r| r.n >= FIT_MIN_N).map(|r| (r.n, r.delta)).collect()
}

/// `Δ(N) > Δ(m)` where `N` is the last row and `m` the first row with
/// `2m >= N`.
fn grows_over_last_doubling(profile: &DeltaProfile) -> bool {
    let Some(last) = profile.rows.last() else { return false };
    profile.rows.iter().find(|r| 2 * r.n >= last.n).is_some_and(|half| last.delta > half.delta)
}

pub fn classify_growth(profile: &DeltaProfile) -> Result<GrowthClassification> {
    classify_growth_with(profile, &Thresholds::default())
}

pub fn classify_growth_with(profile: &DeltaProfile, thresholds: &Thresholds) -> Result<GrowthClassification> {
    if profile.incomplete {
        return Err(Error::input("refusing to classify an incomplete profile"));
    }
    let points = fit_points(profile);
    if points.len() < 4 {
        return Err(Error::input(format!(
            "classification needs at least 4 rows with n >= {FIT_MIN_N}, got {}",
            points.len()
        )));
    }
    let fits = fit_models(&points)?;
    let tail = &points[points.len().saturating_sub(thresholds.bounded_tail)..];
    let flat_tail = tail.iter().all(|p| p.1 == tail[0].1);
    let grows = grows_over_last_doubling(profile);
    let mut candidates = [
        (fits.constant.residual, Verdict::Bounded, flat_tail),
        (
            fits.logarithmic.residual,
            Verdict::LogarithmicTrend,
            grows && fits.logarithmic.coefficient >= thresholds.min_log_coefficient,
        ),
        (fits.linear.residual, Verdict::LinearTrend, grows && fits.linear.coefficient >= thresholds.min_linear_slope),
    ];
    // Stable sort keeps the simpler model first among near-equal residuals.
    candidates.sort_by(|a, b| {
        if (a.0 - b.0).abs() <= TIE {
            std::cmp::Ordering::Equal
        } else {
            a.0.total_cmp(&b.0)
        }
    });
    let verdict = candidates.iter().find(|c| c.2).map(|c| c.1).unwrap_or(Verdict::Inconclusive);
    Ok(GrowthClassification {
        verdict,
        heuristic: true,
        spec: profile.spec.clone(),
        rows_used: points.len(),
        fits,
        thresholds: thresholds.clone(),
    })
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::profile::DeltaRow;

    pub(crate) fn planted(values: impl IntoIterator<Item = (usize, u32)>) -> DeltaProfile {
        let rows: Vec<DeltaRow> = values
            .into_iter()
            .map(|(n, delta)| DeltaRow { n, delta, witness: String::new(), cycles_enumerated: 0 })
            .collect();
        let max_n = rows.last().map_or(0, |r| r.n);
        DeltaProfile {
            spec: "planted".into(),
            group_key: "planted".into(),
            generators: vec![],
            rows,
            max_n,
            requested_max_n: max_n,
            incomplete: false,
            seed: 0,
        }
    }

    #[test]
    fn zeros_are_bounded() {
        let p = planted((1..=12).map(|n| (n, 0)));
        assert_eq!(classify_growth(&p).unwrap().verdict, Verdict::Bounded);
    }

    #[test]
    fn ceil_log_is_logarithmic() {
        let p = planted((1..=64).map(|n| (n, (n as f64).log2().ceil() as u32)));
        let c = classify_growth(&p).unwrap();
        assert_eq!(c.verdict, Verdict::LogarithmicTrend, "{c:?}");
        assert!(c.fits.log_lower_intercept <= c.fits.log_upper_intercept);
    }

    #[test]
    fn thirds_are_linear() {
        let p = planted((1..=30usize).map(|n| (n, n.div_ceil(3) as u32)));
        assert_eq!(classify_growth(&p).unwrap().verdict, Verdict::LinearTrend);
    }

    #[test]
    fn step_then_plateau_is_bounded() {
        let p = planted((1..=12).map(|n| (n, u32::from(n >= 6))));
        let c = classify_growth(&p).unwrap();
        assert!(c.fits.logarithmic.residual < c.fits.constant.residual);
        assert_eq!(c.verdict, Verdict::Bounded);
    }

    #[test]
    fn growth_without_flat_tail_or_slope() {
        let p = planted((1..=12).map(|n| (n, u32::from(n >= 11))));
        let strict = Thresholds { min_log_coefficient: 5.0, min_linear_slope: 1.0, ..Default::default() };
        let c = classify_growth_with(&p, &strict).unwrap();
        assert_eq!(c.verdict, Verdict::Inconclusive, "{c:?}");
    }

    #[test]
    fn line_fit_exact() {
        let f = fit_line(&[1.0, 2.0, 3.0], &[3.0, 5.0, 7.0]);
        assert!((f.coefficient - 2.0).abs() < 1e-12 && (f.intercept - 1.0).abs() < 1e-12 && f.residual < 1e-12);
    }

    #[test]
    fn too_few_rows_or_incomplete() {
        assert!(classify_growth(&planted((1..=6).map(|n| (n, 0)))).is_err());
        let mut p = planted((1..=12).map(|n| (n, 0)));
        p.incomplete = true;
        assert!(classify_growth(&p).is_err());
    }
}
