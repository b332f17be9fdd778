//! Chord-length profiles `Δ(n)` and the checks built on them.

mod classify;
mod compare;
mod delta;
mod embed;
mod enumerate;
mod plot;

pub use classify::{
    classify_growth, classify_growth_with, fit_models, Fits, GrowthClassification, LineFit, Thresholds, Verdict,
    FIT_MIN_N,
};
pub use compare::{compare_generating_sets, ComparisonReport, ComparisonRow};
pub use delta::{
    cycle_min_max, delta_profile, delta_profile_for, delta_profile_in_ball, witness_word, DeltaOptions, DeltaProfile,
    DeltaRow, DEFAULT_CYCLE_BUDGET,
};
pub use embed::{embedding_check, EmbeddingMismatch, EmbeddingReport};
pub use enumerate::{canonical_form, enumerate_identity_cycles, identity_cycles, is_canonical, EnumerateOptions};
pub use plot::emit_plot_data;
