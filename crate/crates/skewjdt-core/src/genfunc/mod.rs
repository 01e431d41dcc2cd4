//! Generating-function verification: truncated q-series, exhaustive
//! enumeration, and the drivers that compare the two.

mod enumerate;
mod series;
mod verify;

pub use enumerate::{
    enumerate_bounded_reverse, enumerate_reverse_ssyt, enumerate_ssyt, enumerate_tabloids_by_weight,
};
pub use series::QSeries;
pub use verify::{
    matchup, verify_bijection_exhaustive, verify_identity, BijectionFailure, BijectionReport,
    Discrepancy, IdentityReport, MatchupRow, NormCount,
};
