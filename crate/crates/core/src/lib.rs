//! Exact computation on binary voting games: power indices over arbitrary-precision
//! rationals, shortening (rounding) operators with certified approximation bounds,
//! a parametric three-type family with closed-form index values, and inverse-problem
//! machinery (exhaustive search, LP-file emission, bisection).
//!
//! Voters are numbered 1..=n and coalitions are bitmasks with voter i on bit i-1.
//! Everything is exact; no floating point appears in any public result.

pub mod bounds;
pub mod enclose;
pub mod game;
pub mod indices;
pub mod parametric;
pub mod rat;
pub mod shortening;
pub mod simplex;

mod error;

pub use bounds::{
    approximation_lower_bound, empirical_bound_sweep, epsilon_of, lambda_min, local_bounds_hold,
    main_theorem_bounds, pk_conjecture_probe, quality, shortening_probe, ProbeReport,
    QualityFunctions, SigmaTarget, SweepReport, SweepRow, TheoremBounds,
};
pub use enclose::{certify_ge, certify_le, exp_enclosure, sqrt_enclosure, Enclosure};
pub use error::Error;
pub use game::{Coalition, Game, GameClass, GameFlags, ReducedGame, WeightedRepr};
pub use indices::{
    check_property, counting_value, equal_division_transform, normalize, power_index,
    ssi_weights, update_on_mwc_removal, IndexId, IndexKind, IndexProperty, PowerVector,
    PropertyCheck,
};
pub use parametric::{
    build_game as parametric_game, johnston_closed_form, johnston_negative_check,
    pbinomial_negative_witness, psi_p_closed_form, rounding_case, ssi_closed_form,
    tail_lemmas_check, type_deltas, weighted_repr as parametric_weighted_repr, BoundCheck,
    JohnstonNegativeReport, PBinomialWitnessReport, PBinomialWitnessRow, ParametricParams,
    TailLemmaReport, TypeDeltas, TypedPowerTriple, Which,
};
pub use shortening::{
    check_preservation, k_rounding, k_rounding_with, k_up_rounding, pk_rounding,
    PreservationReport, ShorteningId, TieRule,
};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
