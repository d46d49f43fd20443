//! Modes, medians, means and analytic bounds for the generalized hyperbolic
//! (GH), variance-gamma (VG), McKay Type I and gamma distributions.
//!
//! The crate evaluates modified Bessel functions and their ratios, the named
//! two-sided ratio inequalities, the mode bounds they imply for the GH/VG/McKay
//! families, closed-form modes where they exist, bracketed numerical mode and
//! median solvers, gamma-median bound chains, and a numerical-evidence harness
//! for the conjectured median monotonicity properties, including reproduction
//! of the two published median tables.
//!
//! Everything is pure: no globals, no interior mutability. All solvers report
//! the residual and bracket actually achieved alongside the estimate.

pub mod bessel;
pub mod cli;
pub mod conjectures;
pub mod distributions;
pub mod median;
pub mod mode;
pub mod quad;
pub mod roots;

mod gammafn;

pub use bessel::{
    bessel_i, bessel_k, half_integer_k, ratio_i, ratio_i_bounds, ratio_k, ratio_k_bounds,
    BesselError, Interval, RatioBound, RatioBoundFamily,
};
pub use distributions::{
    convert_vg_to_vg2, convert_vg2_to_vg, gh_mean, mckay_as_gamma_sum, mckay_mean,
    sample_gamma_combo, vg_as_gamma_difference, vg_mean, Dist, DomainError, GHParams, GammaParams,
    McKayParams, VG2Params, VGParams,
};
pub use median::{
    asym_laplace_median, cdf, conjectured_median_bounds, gamma_median_bounds, median,
    GammaMedianBounds, MedianError, MedianReport,
};
pub use mode::{
    brute_force_mode, gh_mode, gh_mode_asymptote, gh_mode_bounds, gh_mode_numeric,
    mckay_mode, mckay_mode_bounds, mckay_mode_numeric, mean_mode_gap_bounds,
    product_mean_mode_bounds, vg_mode, vg_mode_bounds, vg_mode_numeric, AsymptoticRegime,
    BoundEntry, BoundKind, GapBoundTarget, ModeError, ModeMethod, ModeReport,
};
pub use conjectures::{
    monte_carlo_median, reproduce_table, schur_cdf_check, sweep_c5_lower_bound,
    sweep_monotonicity, z_alpha_median, ConjectureId, SchurComparison, SchurRegime, SchurReport,
    SweepGrid, SweepPoint, SweepResult, SweepVerdict, TableId, TableReport,
};
