//! Whitespace-separated columns for plotting a profile with its fitted
//! models overlaid.

use super::classify::{fit_models, FIT_MIN_N};
use super::DeltaProfile;
use crate::error::{Error, Result};

/// One line per row: `n delta constant logarithmic linear`, with the model
/// values printed to six decimals (`nan` when there is nothing to fit). A
/// leading `#` line names the columns.
pub fn emit_plot_data(profile: &DeltaProfile) -> Result<String> {
    if profile.rows.is_empty() {
        return Err(Error::input("profile has no rows to plot"));
    }
    let points: Vec<(usize, u32)> =
        profile.rows.iter().filter(|r| r.n >= FIT_MIN_N).map(|r| (r.n, r.delta)).collect();
    let fits = fit_models(&points).ok();
    let mut out = String::from("# n delta constant logarithmic linear\n");
    for r in &profile.rows {
        let n = r.n as f64;
        let cols = match &fits {
            Some(f) => [f.constant.at(0.0), f.logarithmic.at(n.log2()), f.linear.at(n)],
            None => [f64::NAN; 3],
        };
        out.push_str(&format!("{} {}", r.n, r.delta));
        for c in cols {
            // avoid printing -0.000000
            let c = if c.abs() < 5e-7 { 0.0 } else { c };
            out.push_str(&format!(" {c:.6}"));
        }
        out.push('\n');
    }
    Ok(out)
}
