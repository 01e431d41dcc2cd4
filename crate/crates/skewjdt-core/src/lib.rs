//! Jeu de taquin bijections on skew tableaux, with exhaustive and
//! generating-function verification.
//!
//! The library models skew diagrams and their fillings ([`shapes`],
//! [`tabloids`]), the four sliding procedures ([`slides`]), the evacuation
//! and splitting bijections built on them ([`bijections`]), enumeration and
//! q-series drivers that verify the norm-counting identity behind the
//! bijections ([`genfunc`]), trace validation ([`checks`]), and the text
//! and JSON interchange formats ([`io`]).

pub mod bijections;
pub mod checks;
pub mod error;
pub mod genfunc;
pub mod io;
pub mod shapes;
pub mod slides;
pub mod tabloids;

pub use bijections::{
    evacuate, map_full, split, unevacuate, unmap_full, unsplit, BijectionTrace, MapTrace,
    TraceKind, TraceStep, UnmapTrace,
};
pub use checks::{check_trace, Violation};
pub use error::Error;
pub use genfunc::{
    enumerate_bounded_reverse, enumerate_reverse_ssyt, enumerate_ssyt,
    enumerate_tabloids_by_weight, matchup, verify_bijection_exhaustive, verify_identity,
    BijectionReport, IdentityReport, MatchupRow, QSeries,
};
pub use shapes::{Cell, Partition, SkewShape};
pub use slides::{
    is_bottom_right_corner, jdt_backward_slide, jdt_forward_slide, mjdt_backward_slide,
    mjdt_forward_slide, SlidePath,
};
pub use tabloids::{PartialFilling, Tabloid, TabloidPair};
