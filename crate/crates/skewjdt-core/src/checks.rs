//! Post-hoc validation of recorded traces.
//!
//! [`check_trace`] re-derives a pass from its initial snapshot: it
//! recomputes each step's selection from scratch, replays the slide,
//! and compares path and both snapshots against what the trace recorded,
//! alongside the structural invariants of the pass (norm accounting, order
//! preservation, stop placement, monotone selections). A trace that passes
//! is a complete machine-checked derivation of output from input.

use crate::bijections::{BijectionTrace, TraceKind, TraceStep};
use crate::shapes::Cell;
use crate::slides::{
    jdt_backward_slide, jdt_forward_slide, mjdt_backward_slide, mjdt_forward_slide,
};
use crate::tabloids::{PartialFilling, Tabloid};

/// A broken invariant, pointing at the 1-based step that exhibits it
/// (step 0 refers to the initial snapshot).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub step: usize,
    pub what: String,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "step {}: {}", self.step, self.what)
    }
}

impl std::error::Error for Violation {}

fn violation(step: usize, what: impl Into<String>) -> Violation {
    Violation {
        step,
        what: what.into(),
    }
}

/// Checks a trace of any kind against its initial snapshot.
pub fn check_trace(trace: &BijectionTrace) -> Result<(), Violation> {
    match trace.kind {
        TraceKind::Evacuate => check_evacuate(trace),
        TraceKind::Unevacuate => check_unevacuate(trace),
        TraceKind::Split => check_split(trace),
        TraceKind::Unsplit => check_unsplit(trace),
    }
}

fn expect_eq<T: PartialEq>(step: usize, got: &T, want: &T, what: &str) -> Result<(), Violation> {
    if got != want {
        return Err(violation(
            step,
            format!("{what} diverges from the recorded trace"),
        ));
    }
    Ok(())
}

fn step_path_is_chain(step: usize, s: &TraceStep, forward: bool) -> Result<(), Violation> {
    for pair in s.path.cells().windows(2) {
        let (from, to) = (pair[0], pair[1]);
        let ok = if forward {
            to == from.right() || to == from.below()
        } else {
            Some(to) == from.left() || Some(to) == from.above()
        };
        if !ok {
            return Err(violation(step, format!("path jumps from {from} to {to}")));
        }
    }
    if s.path.start() != s.selected {
        return Err(violation(
            step,
            "path does not start at the selected cell".to_string(),
        ));
    }
    Ok(())
}

fn check_evacuate(trace: &BijectionTrace) -> Result<(), Violation> {
    let mut work = trace.initial[0].clone();
    let mut out = trace.initial[1].clone();
    if !work.is_total() || !work.clone().into_tabloid().unwrap().is_ssyt() {
        return Err(violation(
            0,
            "initial filling is not a total semistandard tableau".to_string(),
        ));
    }
    if out.filled_count() != 0 {
        return Err(violation(0, "initial output is not empty".to_string()));
    }
    let total = work.norm();
    let mut prev: Option<(u64, Cell)> = None;
    for (k, step) in trace.steps.iter().enumerate() {
        let k = k + 1;
        let (cell, entry) = trace
            .shape
            .cells()
            .filter_map(|c| work.get(c).map(|v| (c, v)))
            .min_by_key(|&(c, v)| (v, std::cmp::Reverse(c.col)))
            .ok_or_else(|| violation(k, "step recorded after the filling emptied".to_string()))?;
        expect_eq(k, &step.selected, &cell, "selected cell")?;
        expect_eq(k, &step.entry, &entry, "selected entry")?;
        let path = jdt_forward_slide(&mut work, cell)
            .map_err(|e| violation(k, format!("slide replay failed: {e}")))?;
        expect_eq(k, &step.path, &path, "slide path")?;
        step_path_is_chain(k, step, true)?;
        let stop = path.stop();
        if work.get(stop.right()).is_some() || work.get(stop.below()).is_some() {
            return Err(violation(
                k,
                format!("stop {stop} is not a corner of the filled region"),
            ));
        }
        work.clear(stop).map_err(|e| violation(k, e.to_string()))?;
        if out.get(stop).is_some() {
            return Err(violation(k, format!("output cell {stop} written twice")));
        }
        out.set(stop, entry)
            .map_err(|e| violation(k, e.to_string()))?;
        expect_eq(k, &step.after[0], &work, "first snapshot")?;
        expect_eq(k, &step.after[1], &out, "second snapshot")?;
        if !work.filled_is_ssyt() {
            return Err(violation(
                k,
                "remaining entries are not semistandard".to_string(),
            ));
        }
        if !out.filled_is_reverse_ssyt() {
            return Err(violation(
                k,
                "partial output is not reverse semistandard".to_string(),
            ));
        }
        if work.norm() + out.norm() != total {
            return Err(violation(k, "norm not conserved".to_string()));
        }
        if let Some((pe, pstop)) = prev {
            if entry < pe {
                return Err(violation(k, "selected entries decreased".to_string()));
            }
            if entry == pe && stop.col >= pstop.col {
                return Err(violation(
                    k,
                    format!("equal entries settled {pstop} then {stop}"),
                ));
            }
        }
        prev = Some((entry, stop));
    }
    if work.filled_count() != 0 {
        return Err(violation(
            trace.steps.len(),
            "trace ended before the filling emptied".to_string(),
        ));
    }
    if !out.is_total() {
        return Err(violation(
            trace.steps.len(),
            "output still has holes".to_string(),
        ));
    }
    Ok(())
}

fn check_unevacuate(trace: &BijectionTrace) -> Result<(), Violation> {
    let mut work = trace.initial[0].clone();
    let mut out = trace.initial[1].clone();
    if !work.is_total() || !work.clone().into_tabloid().unwrap().is_reverse_ssyt() {
        return Err(violation(
            0,
            "initial filling is not a total reverse semistandard tableau".to_string(),
        ));
    }
    if out.filled_count() != 0 {
        return Err(violation(0, "initial output is not empty".to_string()));
    }
    let total = work.norm();
    let mut prev: Option<u64> = None;
    for (k, step) in trace.steps.iter().enumerate() {
        let k = k + 1;
        let (cell, entry) = trace
            .shape
            .cells()
            .filter_map(|c| work.get(c).map(|v| (c, v)))
            .max_by_key(|&(c, v)| (v, std::cmp::Reverse(c.col)))
            .ok_or_else(|| violation(k, "step recorded after the filling emptied".to_string()))?;
        expect_eq(k, &step.selected, &cell, "selected cell")?;
        expect_eq(k, &step.entry, &entry, "selected entry")?;
        work.clear(cell).map_err(|e| violation(k, e.to_string()))?;
        if out.get(cell).is_some() {
            return Err(violation(
                k,
                format!("insertion cell {cell} already filled"),
            ));
        }
        out.set(cell, entry)
            .map_err(|e| violation(k, e.to_string()))?;
        let path = jdt_backward_slide(&mut out, cell)
            .map_err(|e| violation(k, format!("slide replay failed: {e}")))?;
        expect_eq(k, &step.path, &path, "slide path")?;
        step_path_is_chain(k, step, false)?;
        expect_eq(k, &step.after[0], &work, "first snapshot")?;
        expect_eq(k, &step.after[1], &out, "second snapshot")?;
        if !out.filled_is_ssyt() {
            return Err(violation(
                k,
                "partial output is not semistandard".to_string(),
            ));
        }
        if work.norm() + out.norm() != total {
            return Err(violation(k, "norm not conserved".to_string()));
        }
        if prev.is_some_and(|pe| entry > pe) {
            return Err(violation(k, "selected entries increased".to_string()));
        }
        prev = Some(entry);
    }
    if work.filled_count() != 0 {
        return Err(violation(
            trace.steps.len(),
            "trace ended before the filling emptied".to_string(),
        ));
    }
    if !out.is_total() {
        return Err(violation(
            trace.steps.len(),
            "output still has holes".to_string(),
        ));
    }
    Ok(())
}

fn totals(step: usize, snap: &[PartialFilling; 2]) -> Result<(Tabloid, Tabloid), Violation> {
    let a = snap[0]
        .clone()
        .into_tabloid()
        .map_err(|e| violation(step, e.to_string()))?;
    let b = snap[1]
        .clone()
        .into_tabloid()
        .map_err(|e| violation(step, e.to_string()))?;
    Ok((a, b))
}

fn check_split(trace: &BijectionTrace) -> Result<(), Violation> {
    let a = trace
        .a
        .ok_or_else(|| violation(0, "trace carries no offset".to_string()))?;
    let (mut r, mut t) = totals(0, &trace.initial)?;
    if !r.is_reverse_ssyt() {
        return Err(violation(
            0,
            "initial filling is not reverse semistandard".to_string(),
        ));
    }
    if t.norm() != 0 {
        return Err(violation(0, "initial stop counts are not zero".to_string()));
    }
    if trace.shape.require_valid_a(a).is_err() {
        return Err(violation(0, format!("offset {a} is invalid for the shape")));
    }
    let mut prev: Option<(u64, Cell)> = None;
    for (k, step) in trace.steps.iter().enumerate() {
        let k = k + 1;
        if r.respects_row_bounds(a)
            .map_err(|e| violation(k, e.to_string()))?
        {
            return Err(violation(
                k,
                "step recorded with no bound violation left".to_string(),
            ));
        }
        let (cell, margin) = trace
            .shape
            .cells()
            .map(|c| (c, r.get(c).unwrap() as i64 - (a + c.content())))
            .max_by_key(|&(c, m)| (m, c.row, c.col))
            .ok_or_else(|| violation(k, "no cells to select from".to_string()))?;
        if margin < 0 {
            return Err(violation(k, "selected excess is negative".to_string()));
        }
        expect_eq(k, &step.selected, &cell, "selected cell")?;
        expect_eq(k, &step.entry, &(margin as u64), "selected excess")?;
        let before = r.norm();
        let path = mjdt_forward_slide(&mut r, cell, a)
            .map_err(|e| violation(k, format!("slide replay failed: {e}")))?;
        expect_eq(k, &step.path, &path, "slide path")?;
        step_path_is_chain(k, step, true)?;
        let stop = path.stop();
        t.set(stop, t.get(stop).unwrap() + 1)
            .map_err(|e| violation(k, e.to_string()))?;
        let (want_r, want_t) = totals(k, &step.after)?;
        expect_eq(k, &want_r, &r, "first snapshot")?;
        expect_eq(k, &want_t, &t, "second snapshot")?;
        if !r.is_reverse_ssyt() {
            return Err(violation(
                k,
                "result is not reverse semistandard".to_string(),
            ));
        }
        if before as i64 - r.norm() as i64 != a + stop.content() {
            return Err(violation(
                k,
                format!("norm drop at {stop} is not a + content"),
            ));
        }
        if r.get(cell).unwrap() as i64 - (a + cell.content()) >= margin {
            return Err(violation(k, format!("excess at {cell} did not decrease")));
        }
        if let Some((pe, pstop)) = prev {
            if (margin as u64) > pe {
                return Err(violation(k, "selected excesses increased".to_string()));
            }
            if margin as u64 == pe && !(pstop == stop || pstop.col < stop.col) {
                return Err(violation(
                    k,
                    format!("equal excesses stopped {pstop} then {stop}"),
                ));
            }
        }
        prev = Some((margin as u64, stop));
    }
    if !r
        .respects_row_bounds(a)
        .map_err(|e| violation(trace.steps.len(), e.to_string()))?
    {
        return Err(violation(
            trace.steps.len(),
            "trace ended with bound violations left".to_string(),
        ));
    }
    Ok(())
}

fn check_unsplit(trace: &BijectionTrace) -> Result<(), Violation> {
    let a = trace
        .a
        .ok_or_else(|| violation(0, "trace carries no offset".to_string()))?;
    let (mut q, mut t) = totals(0, &trace.initial)?;
    if !q.is_reverse_ssyt() {
        return Err(violation(
            0,
            "initial filling is not reverse semistandard".to_string(),
        ));
    }
    if trace.shape.require_valid_a(a).is_err() {
        return Err(violation(0, format!("offset {a} is invalid for the shape")));
    }
    if !q
        .respects_row_bounds(a)
        .map_err(|e| violation(0, e.to_string()))?
    {
        return Err(violation(
            0,
            "initial filling exceeds its row bounds".to_string(),
        ));
    }
    let mut prev: Option<u64> = None;
    for (k, step) in trace.steps.iter().enumerate() {
        let k = k + 1;
        let (cell, entry) = trace
            .shape
            .cells()
            .filter(|&c| t.get(c).unwrap() > 0)
            .map(|c| (c, q.get(c).unwrap()))
            .min_by_key(|&(c, v)| (v, std::cmp::Reverse(c.col)))
            .ok_or_else(|| violation(k, "step recorded with all counts spent".to_string()))?;
        expect_eq(k, &step.selected, &cell, "selected cell")?;
        expect_eq(k, &step.entry, &entry, "selected entry")?;
        t.set(cell, t.get(cell).unwrap() - 1)
            .map_err(|e| violation(k, e.to_string()))?;
        let before = q.norm();
        let path = mjdt_backward_slide(&mut q, cell, a)
            .map_err(|e| violation(k, format!("slide replay failed: {e}")))?;
        expect_eq(k, &step.path, &path, "slide path")?;
        step_path_is_chain(k, step, false)?;
        let (want_q, want_t) = totals(k, &step.after)?;
        expect_eq(k, &want_q, &q, "first snapshot")?;
        expect_eq(k, &want_t, &t, "second snapshot")?;
        if !q.is_reverse_ssyt() {
            return Err(violation(
                k,
                "result is not reverse semistandard".to_string(),
            ));
        }
        if q.norm() as i64 - before as i64 != a + cell.content() {
            return Err(violation(
                k,
                format!("norm gain at {cell} is not a + content"),
            ));
        }
        if prev.is_some_and(|pe| entry < pe) {
            return Err(violation(k, "selected entries decreased".to_string()));
        }
        prev = Some(entry);
    }
    if t.norm() != 0 {
        return Err(violation(
            trace.steps.len(),
            "trace ended with counts left to spend".to_string(),
        ));
    }
    Ok(())
}
