//! Evacuation-style and splitting bijections built from the slides.
//!
//! [`evacuate`] empties a semistandard tableau `P` by repeatedly sliding its
//! smallest entry down-right out of the diagram; the entries settle at
//! bottom-right corners and assemble a reverse semistandard tableau `Q` of
//! the same norm. [`split`] pushes a reverse tableau under its row bounds by
//! repeated modified forward slides, producing a bounded reverse tableau `R`
//! and a tabloid `T` counting the slide stops; the norm satisfies
//! `n(Q) = n(R) + w(T)` where `w` weighs each cell by `a + content`.
//! [`unevacuate`] and [`unsplit`] are the exact inverses and replay the same
//! slide paths in reverse. [`map_full`] and [`unmap_full`] compose the two.
//!
//! Every pass records a [`BijectionTrace`]: the selected cell and entry of
//! each step, the slide path, and the full state of both fillings after the
//! step. The passes also verify their own structural invariants as they go
//! (norm accounting, order preservation, stop placement) and report any
//! breach as [`Error::Internal`].

use crate::error::Error;
use crate::shapes::{Cell, SkewShape};
use crate::slides::{
    jdt_backward_slide, jdt_forward_slide, mjdt_backward_slide, mjdt_forward_slide, SlidePath,
};
use crate::tabloids::{PartialFilling, Tabloid, TabloidPair};

/// Which pass produced a trace. Determines the labels of the two fillings
/// captured in each snapshot.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TraceKind {
    Evacuate,
    Unevacuate,
    Split,
    Unsplit,
}

impl TraceKind {
    /// Labels of the two fillings in snapshot order.
    pub fn labels(&self) -> [&'static str; 2] {
        match self {
            TraceKind::Evacuate => ["P", "Q"],
            TraceKind::Unevacuate => ["Q", "P"],
            TraceKind::Split => ["R", "T"],
            TraceKind::Unsplit => ["Q", "T"],
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            TraceKind::Evacuate => "evacuate",
            TraceKind::Unevacuate => "unevacuate",
            TraceKind::Split => "split",
            TraceKind::Unsplit => "unsplit",
        }
    }
}

/// One outer step: which entry was selected where, the slide path it took,
/// and both fillings after the step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub selected: Cell,
    pub entry: u64,
    pub path: SlidePath,
    pub after: [PartialFilling; 2],
}

/// Complete record of one pass, snapshot by snapshot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BijectionTrace {
    pub kind: TraceKind,
    pub shape: SkewShape,
    pub a: Option<i64>,
    pub initial: [PartialFilling; 2],
    pub steps: Vec<TraceStep>,
}

/// Traces of the two stages of [`map_full`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapTrace {
    pub evacuation: BijectionTrace,
    pub splitting: BijectionTrace,
}

/// Traces of the two stages of [`unmap_full`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnmapTrace {
    pub unsplitting: BijectionTrace,
    pub unevacuation: BijectionTrace,
}

fn snapshot(a: &PartialFilling, b: &PartialFilling) -> [PartialFilling; 2] {
    [a.clone(), b.clone()]
}

fn total_snapshot(a: &Tabloid, b: &Tabloid) -> [PartialFilling; 2] {
    [PartialFilling::from(a), PartialFilling::from(b)]
}

/// Empties the semistandard tableau `p` into a reverse semistandard tableau
/// of the same shape and norm.
///
/// Each step removes the smallest remaining entry (right-most among equals),
/// forward-slides it to a bottom-right corner of the filled region, and
/// records it there in the output. The partly built output is reverse
/// semistandard at every stage.
pub fn evacuate(p: &Tabloid) -> Result<(Tabloid, BijectionTrace), Error> {
    if !p.is_ssyt() {
        return Err(Error::NotSsyt);
    }
    let shape = p.shape().clone();
    let mut work = PartialFilling::from(p);
    let mut out = PartialFilling::empty(shape.clone());
    let mut trace = BijectionTrace {
        kind: TraceKind::Evacuate,
        shape: shape.clone(),
        a: None,
        initial: snapshot(&work, &out),
        steps: Vec::with_capacity(shape.cell_count()),
    };
    let total = work.norm();
    let mut prev_entry: Option<u64> = None;
    let mut prev_stop: Option<Cell> = None;
    while work.filled_count() > 0 {
        let (cell, entry) = shape
            .cells()
            .filter_map(|c| work.get(c).map(|v| (c, v)))
            .min_by_key(|&(c, v)| (v, std::cmp::Reverse(c.col)))
            .unwrap();
        let path = jdt_forward_slide(&mut work, cell)?;
        let stop = path.stop();
        if work.get(stop.right()).is_some() || work.get(stop.below()).is_some() {
            return Err(Error::internal(format!(
                "slide stop {stop} is not a corner of the filled region"
            )));
        }
        work.clear(stop)?;
        if out.get(stop).is_some() {
            return Err(Error::internal(format!("output cell {stop} filled twice")));
        }
        out.set(stop, entry)?;
        if !out.filled_is_reverse_ssyt() {
            return Err(Error::internal(format!(
                "output not reverse semistandard after filling {stop}"
            )));
        }
        if work.norm() + out.norm() != total {
            return Err(Error::internal(
                "norm not conserved across a step".to_string(),
            ));
        }
        if prev_entry.is_some_and(|prev| entry < prev) {
            return Err(Error::internal(
                "selected entries not weakly increasing".to_string(),
            ));
        }
        if prev_entry == Some(entry) {
            let prev = prev_stop.unwrap();
            if stop.col >= prev.col {
                return Err(Error::internal(format!(
                    "equal entries must settle right to left: {prev} then {stop}"
                )));
            }
        }
        prev_entry = Some(entry);
        prev_stop = Some(stop);
        trace.steps.push(TraceStep {
            selected: cell,
            entry,
            path,
            after: snapshot(&work, &out),
        });
    }
    Ok((out.into_tabloid()?, trace))
}

/// Rebuilds the semistandard tableau that [`evacuate`] empties into `q`,
/// replaying the same slide paths in reverse.
///
/// Each step removes the largest remaining entry of `q` (left-most among
/// equals), re-inserts it at its cell, and backward-slides it into place.
pub fn unevacuate(q: &Tabloid) -> Result<(Tabloid, BijectionTrace), Error> {
    if !q.is_reverse_ssyt() {
        return Err(Error::NotReverseSsyt);
    }
    let shape = q.shape().clone();
    let mut work = PartialFilling::from(q);
    let mut out = PartialFilling::empty(shape.clone());
    let mut trace = BijectionTrace {
        kind: TraceKind::Unevacuate,
        shape: shape.clone(),
        a: None,
        initial: snapshot(&work, &out),
        steps: Vec::with_capacity(shape.cell_count()),
    };
    let total = work.norm();
    let mut prev_entry: Option<u64> = None;
    while work.filled_count() > 0 {
        let (cell, entry) = shape
            .cells()
            .filter_map(|c| work.get(c).map(|v| (c, v)))
            .max_by_key(|&(c, v)| (v, std::cmp::Reverse(c.col)))
            .unwrap();
        work.clear(cell)?;
        if out.get(cell).is_some() {
            return Err(Error::internal(format!(
                "insertion cell {cell} already filled"
            )));
        }
        out.set(cell, entry)?;
        let path = jdt_backward_slide(&mut out, cell)?;
        if !out.filled_is_ssyt() {
            return Err(Error::internal(format!(
                "output not semistandard after inserting at {cell}"
            )));
        }
        if work.norm() + out.norm() != total {
            return Err(Error::internal(
                "norm not conserved across a step".to_string(),
            ));
        }
        if prev_entry.is_some_and(|prev| entry > prev) {
            return Err(Error::internal(
                "selected entries not weakly decreasing".to_string(),
            ));
        }
        prev_entry = Some(entry);
        trace.steps.push(TraceStep {
            selected: cell,
            entry,
            path,
            after: snapshot(&work, &out),
        });
    }
    Ok((out.into_tabloid()?, trace))
}

/// Splits the reverse semistandard tableau `q` into a bounded reverse
/// tableau `R` and a stop-count tabloid `T` with `n(q) = n(R) + w(T)`.
///
/// While some entry of `R` exceeds its row bound `a + mu_i - i`, the cell
/// with the largest excess over `a + content` (bottom-most, then right-most
/// among equals) is modified-forward-slid, and the stop cell's count in `T`
/// goes up by one. Each slide lowers the norm of `R` by exactly the weight
/// `a + content(stop)` that the new `T` entry carries, keeping
/// `n(R) + w(T)` constant.
pub fn split(q: &Tabloid, a: i64) -> Result<(TabloidPair, BijectionTrace), Error> {
    let shape = q.shape().clone();
    shape.require_valid_a(a)?;
    if !q.is_reverse_ssyt() {
        return Err(Error::NotReverseSsyt);
    }
    let mut r = q.clone();
    let mut t = Tabloid::zero(shape.clone());
    let mut trace = BijectionTrace {
        kind: TraceKind::Split,
        shape: shape.clone(),
        a: Some(a),
        initial: total_snapshot(&r, &t),
        steps: Vec::new(),
    };
    let mut prev_entry: Option<u64> = None;
    let mut prev_stop: Option<Cell> = None;
    let mut budget = q.norm() + 1;
    while r.first_bound_violation(a).is_some() {
        budget = budget.checked_sub(1).ok_or_else(|| {
            Error::internal("splitting did not terminate within its norm budget".to_string())
        })?;
        let (cell, margin) = shape
            .cells()
            .map(|c| (c, r.get(c).unwrap() as i64 - (a + c.content())))
            .max_by_key(|&(c, m)| (m, c.row, c.col))
            .unwrap();
        if margin < 0 {
            return Err(Error::internal(
                "bound violation with no sliding candidate".to_string(),
            ));
        }
        let entry = margin as u64;
        let before = r.norm();
        let path = mjdt_forward_slide(&mut r, cell, a)?;
        let stop = path.stop();
        if !r.is_reverse_ssyt() {
            return Err(Error::internal(format!(
                "not reverse semistandard after sliding from {cell}"
            )));
        }
        if before as i64 - r.norm() as i64 != a + stop.content() {
            return Err(Error::internal(format!(
                "norm drop at {stop} is not a + content"
            )));
        }
        t.set(stop, t.get(stop)? + 1)?;
        if r.get(cell)? as i64 - (a + cell.content()) >= margin {
            return Err(Error::internal(format!(
                "excess at {cell} did not decrease"
            )));
        }
        if prev_entry.is_some_and(|prev| entry > prev) {
            return Err(Error::internal(
                "selected excesses not weakly decreasing".to_string(),
            ));
        }
        if prev_entry == Some(entry) {
            let prev = prev_stop.unwrap();
            if !(prev == stop || prev.col < stop.col) {
                return Err(Error::internal(format!(
                    "equal excesses must stop left to right: {prev} then {stop}"
                )));
            }
        }
        prev_entry = Some(entry);
        prev_stop = Some(stop);
        trace.steps.push(TraceStep {
            selected: cell,
            entry,
            path,
            after: total_snapshot(&r, &t),
        });
    }
    Ok((TabloidPair::new(r, t)?, trace))
}

/// Rebuilds the reverse semistandard tableau that [`split`] maps to the
/// pair, replaying the same slide paths in reverse.
///
/// While `T` is nonzero somewhere, the marked cell with the smallest entry
/// of `Q` (right-most among equals) gives up one count and is
/// modified-backward-slid.
pub fn unsplit(pair: &TabloidPair, a: i64) -> Result<(Tabloid, BijectionTrace), Error> {
    let shape = pair.shape().clone();
    shape.require_valid_a(a)?;
    if !pair.r().is_reverse_ssyt() {
        return Err(Error::NotReverseSsyt);
    }
    if let Some(cell) = pair.r().first_bound_violation(a) {
        return Err(Error::RowBoundExceeded {
            cell,
            entry: pair.r().get(cell)?,
            bound: shape.row_bound(a, cell.row)?,
        });
    }
    let mut q = pair.r().clone();
    let mut t = pair.t().clone();
    let mut trace = BijectionTrace {
        kind: TraceKind::Unsplit,
        shape: shape.clone(),
        a: Some(a),
        initial: total_snapshot(&q, &t),
        steps: Vec::new(),
    };
    let mut prev_entry: Option<u64> = None;
    loop {
        let Some((cell, entry)) = shape
            .cells()
            .filter(|&c| t.get(c).unwrap() > 0)
            .map(|c| (c, q.get(c).unwrap()))
            .min_by_key(|&(c, v)| (v, std::cmp::Reverse(c.col)))
        else {
            break;
        };
        t.set(cell, t.get(cell)? - 1)?;
        let before = q.norm();
        let path = mjdt_backward_slide(&mut q, cell, a)?;
        if !q.is_reverse_ssyt() {
            return Err(Error::internal(format!(
                "not reverse semistandard after sliding from {cell}"
            )));
        }
        if q.norm() as i64 - before as i64 != a + cell.content() {
            return Err(Error::internal(format!(
                "norm gain at {cell} is not a + content"
            )));
        }
        if prev_entry.is_some_and(|prev| entry < prev) {
            return Err(Error::internal(
                "selected entries not weakly increasing".to_string(),
            ));
        }
        prev_entry = Some(entry);
        trace.steps.push(TraceStep {
            selected: cell,
            entry,
            path,
            after: total_snapshot(&q, &t),
        });
    }
    Ok((q, trace))
}

/// [`evacuate`] followed by [`split`]: maps a semistandard tableau `P` to a
/// pair `(R, T)` with `n(P) = n(R) + w(T)`.
pub fn map_full(p: &Tabloid, a: i64) -> Result<(TabloidPair, MapTrace), Error> {
    let (q, evacuation) = evacuate(p)?;
    let (pair, splitting) = split(&q, a)?;
    let weight = pair.t().content_weight(a)?;
    if p.norm() != pair.r().norm() + weight {
        return Err(Error::internal(
            "norm accounting broke across the composed map".to_string(),
        ));
    }
    Ok((
        pair,
        MapTrace {
            evacuation,
            splitting,
        },
    ))
}

/// [`unsplit`] followed by [`unevacuate`]: the inverse of [`map_full`].
pub fn unmap_full(pair: &TabloidPair, a: i64) -> Result<(Tabloid, UnmapTrace), Error> {
    let (q, unsplitting) = unsplit(pair, a)?;
    let (p, unevacuation) = unevacuate(&q)?;
    Ok((
        p,
        UnmapTrace {
            unsplitting,
            unevacuation,
        },
    ))
}
