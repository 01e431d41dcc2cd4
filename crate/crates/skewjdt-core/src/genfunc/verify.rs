//! Verification drivers: the coefficient identity and the exhaustive
//! bijection check.
//!
//! The identity states that the norm generating function of bounded reverse
//! tableaux times the product of `1 / (1 - q^(a+c))` over all cells equals
//! the norm generating function of semistandard tableaux. Both drivers
//! enumerate their objects outright and compare exact coefficients; a
//! mismatch lands in the report rather than an error, so a failed
//! verification is an ordinary result that a caller can render.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::bijections::{map_full, unmap_full};
use crate::checks::check_trace;
use crate::error::Error;
use crate::genfunc::enumerate::{
    enumerate_bounded_reverse, enumerate_ssyt, enumerate_tabloids_by_weight,
};
use crate::genfunc::series::QSeries;
use crate::io::{compact, format_shape};
use crate::shapes::SkewShape;
use crate::tabloids::Tabloid;

/// The lowest-degree coefficient disagreement found, with the route that
/// exposed it: `product` compares the semistandard series against
/// bounded-series times geometric factors, `complement` compares the
/// bounded series against semistandard-series times `1 - q^(a+c)` factors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub route: String,
    pub exponent: usize,
    pub lhs: i64,
    pub rhs: i64,
}

/// Outcome of [`verify_identity`]: every series involved, coefficient by
/// coefficient, plus the verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub kind: String,
    pub shape: String,
    pub a: i64,
    pub max_degree: usize,
    /// `a + content` for every cell, row-major.
    pub factors: Vec<i64>,
    /// Coefficients of the semistandard norm series `S`.
    pub ssyt_series: Vec<i64>,
    /// Coefficients of the bounded reverse norm series `B`.
    pub bounded_series: Vec<i64>,
    /// Coefficients of the product of `1 / (1 - q^(a+c))`.
    pub geometric_series: Vec<i64>,
    /// Coefficients of `B` times the geometric product; must match `S`.
    pub product_route: Vec<i64>,
    /// Coefficients of `S` times the product of `1 - q^(a+c)`; must match `B`.
    pub complement_route: Vec<i64>,
    pub identity_holds: bool,
    pub first_discrepancy: Option<Discrepancy>,
}

/// Compares the two sides of the coefficient identity through `max_degree`,
/// along both multiplication routes.
pub fn verify_identity(
    shape: &SkewShape,
    a: i64,
    max_degree: usize,
) -> Result<IdentityReport, Error> {
    shape.require_valid_a(a)?;
    let factors: Vec<i64> = shape.cells().map(|c| a + c.content()).collect();
    let ssyt = QSeries::from_exponents(
        max_degree,
        enumerate_ssyt(shape, max_degree as u64)
            .iter()
            .map(Tabloid::norm),
    );
    let bounded = QSeries::from_exponents(
        max_degree,
        enumerate_bounded_reverse(shape, a)?
            .iter()
            .map(Tabloid::norm),
    );
    let geometric = QSeries::product_of_geometrics(&factors, max_degree)?;
    let product_route = bounded.mul(&geometric);
    let complement_route = ssyt.mul(&QSeries::product_of_complements(&factors, max_degree)?);

    let first_discrepancy = ssyt
        .first_difference(&product_route)
        .map(|exponent| Discrepancy {
            route: "product".to_string(),
            exponent,
            lhs: ssyt.coeff(exponent).unwrap(),
            rhs: product_route.coeff(exponent).unwrap(),
        })
        .or_else(|| {
            bounded
                .first_difference(&complement_route)
                .map(|exponent| Discrepancy {
                    route: "complement".to_string(),
                    exponent,
                    lhs: bounded.coeff(exponent).unwrap(),
                    rhs: complement_route.coeff(exponent).unwrap(),
                })
        });
    Ok(IdentityReport {
        kind: "identity-report".to_string(),
        shape: format_shape(shape),
        a,
        max_degree,
        factors,
        ssyt_series: ssyt.coeffs().to_vec(),
        bounded_series: bounded.coeffs().to_vec(),
        geometric_series: geometric.coeffs().to_vec(),
        product_route: product_route.coeffs().to_vec(),
        complement_route: complement_route.coeffs().to_vec(),
        identity_holds: first_discrepancy.is_none(),
        first_discrepancy,
    })
}

/// One failed instance in an exhaustive bijection check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BijectionFailure {
    /// Compact rendering of the instance that failed.
    pub instance: String,
    pub what: String,
}

/// Tableau and pair counts at one norm; the bijection forces them equal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NormCount {
    pub norm: u64,
    pub ssyt: u64,
    pub pairs: u64,
}

/// Outcome of [`verify_bijection_exhaustive`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BijectionReport {
    pub kind: String,
    pub shape: String,
    pub a: i64,
    pub max_norm: u64,
    /// Semistandard tableaux checked (norm at most `max_norm`).
    pub checked: u64,
    pub per_norm: Vec<NormCount>,
    pub failures: Vec<BijectionFailure>,
    pub ok: bool,
}

fn pair_key(r: &Tabloid, t: &Tabloid) -> String {
    format!("{}|{}", compact(r), compact(t))
}

/// Runs the full map over every semistandard tableau of norm at most
/// `max_norm` and checks: the output pair is valid, norms account exactly,
/// the inverse returns the input, all four traces check out, and the pairs
/// produced are exactly the valid pairs of total norm at most `max_norm`,
/// each hit once.
pub fn verify_bijection_exhaustive(
    shape: &SkewShape,
    a: i64,
    max_norm: u64,
) -> Result<BijectionReport, Error> {
    shape.require_valid_a(a)?;
    let mut failures = Vec::new();
    let mut per_norm_ssyt = vec![0u64; max_norm as usize + 1];
    let mut per_norm_pairs = vec![0u64; max_norm as usize + 1];
    let mut image: BTreeMap<String, bool> = BTreeMap::new();

    let tableaux = enumerate_ssyt(shape, max_norm);
    let checked = tableaux.len() as u64;
    for p in &tableaux {
        per_norm_ssyt[p.norm() as usize] += 1;
        let instance = compact(p);
        let mut fail = |what: String| {
            failures.push(BijectionFailure {
                instance: instance.clone(),
                what,
            });
        };
        let (pair, map_trace) = match map_full(p, a) {
            Ok(done) => done,
            Err(e) => {
                fail(format!("map failed: {e}"));
                continue;
            }
        };
        if !pair.r().is_reverse_ssyt() {
            fail("output is not reverse semistandard".to_string());
        }
        match pair.r().respects_row_bounds(a) {
            Ok(true) => {}
            Ok(false) => fail("output exceeds its row bounds".to_string()),
            Err(e) => fail(e.to_string()),
        }
        match pair.t().content_weight(a) {
            Ok(w) if pair.r().norm() + w == p.norm() => {}
            Ok(w) => fail(format!(
                "norms do not account: {} + {w} != {}",
                pair.r().norm(),
                p.norm()
            )),
            Err(e) => fail(e.to_string()),
        }
        if let Err(v) = check_trace(&map_trace.evacuation) {
            fail(format!("evacuation trace: {v}"));
        }
        if let Err(v) = check_trace(&map_trace.splitting) {
            fail(format!("splitting trace: {v}"));
        }
        match unmap_full(&pair, a) {
            Ok((back, unmap_trace)) => {
                if &back != p {
                    fail("inverse does not return the input".to_string());
                }
                if let Err(v) = check_trace(&unmap_trace.unsplitting) {
                    fail(format!("unsplitting trace: {v}"));
                }
                if let Err(v) = check_trace(&unmap_trace.unevacuation) {
                    fail(format!("unevacuation trace: {v}"));
                }
            }
            Err(e) => fail(format!("inverse failed: {e}")),
        }
        if image.insert(pair_key(pair.r(), pair.t()), false).is_some() {
            fail("two tableaux mapped to the same pair".to_string());
        }
    }

    for r in enumerate_bounded_reverse(shape, a)? {
        if r.norm() > max_norm {
            continue;
        }
        for t in enumerate_tabloids_by_weight(shape, a, max_norm - r.norm())? {
            let total = r.norm() + t.content_weight(a)?;
            per_norm_pairs[total as usize] += 1;
            let key = pair_key(&r, &t);
            match image.get_mut(&key) {
                Some(seen) => *seen = true,
                None => failures.push(BijectionFailure {
                    instance: key,
                    what: "valid pair never produced by the map".to_string(),
                }),
            }
        }
    }
    for (key, seen) in &image {
        if !seen {
            failures.push(BijectionFailure {
                instance: key.clone(),
                what: "mapped pair missing from the pair enumeration".to_string(),
            });
        }
    }
    let per_norm: Vec<NormCount> = (0..=max_norm)
        .map(|n| NormCount {
            norm: n,
            ssyt: per_norm_ssyt[n as usize],
            pairs: per_norm_pairs[n as usize],
        })
        .collect();
    for counts in &per_norm {
        if counts.ssyt != counts.pairs {
            failures.push(BijectionFailure {
                instance: format!("norm {}", counts.norm),
                what: format!("{} tableaux but {} pairs", counts.ssyt, counts.pairs),
            });
        }
    }
    let ok = failures.is_empty();
    Ok(BijectionReport {
        kind: "bijection-report".to_string(),
        shape: format_shape(shape),
        a,
        max_norm,
        checked,
        per_norm,
        failures,
        ok,
    })
}

/// One line of a matchup table: a tableau with its evacuation image and
/// split pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchupRow {
    pub p: Tabloid,
    pub q: Tabloid,
    pub r: Tabloid,
    pub t: Tabloid,
}

/// Runs the full map over every semistandard tableau of norm exactly
/// `norm`, in enumeration order.
pub fn matchup(shape: &SkewShape, a: i64, norm: u64) -> Result<Vec<MatchupRow>, Error> {
    shape.require_valid_a(a)?;
    let mut rows = Vec::new();
    for p in enumerate_ssyt(shape, norm) {
        if p.norm() != norm {
            continue;
        }
        let (q, _) = crate::bijections::evacuate(&p)?;
        let (pair, _) = crate::bijections::split(&q, a)?;
        let (r, t) = pair.into_parts();
        rows.push(MatchupRow { p, q, r, t });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::Partition;

    fn shape(outer: &[usize], inner: &[usize]) -> SkewShape {
        SkewShape::new(
            Partition::new(outer.to_vec()).unwrap(),
            Partition::new(inner.to_vec()).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn identity_for_four_cell_shape() {
        let s = shape(&[3, 2], &[1]);
        let report = verify_identity(&s, 2, 8).unwrap();
        assert!(report.identity_holds);
        assert_eq!(report.factors, [3, 4, 1, 2]);
        assert_eq!(report.ssyt_series[5], 14);
        assert_eq!(report.product_route[5], 14);
        assert_eq!(report.bounded_series[..5], [0, 1, 2, 1, 1]);
        assert!(report.first_discrepancy.is_none());
    }

    #[test]
    fn identity_for_empty_shape() {
        let s = shape(&[2, 2], &[2, 2]);
        let report = verify_identity(&s, 0, 6).unwrap();
        assert!(report.identity_holds);
        assert_eq!(report.ssyt_series, [1, 0, 0, 0, 0, 0, 0]);
        assert_eq!(report.bounded_series, [1, 0, 0, 0, 0, 0, 0]);
        assert_eq!(report.geometric_series, [1, 0, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn identity_rejects_invalid_offset() {
        let s = shape(&[3, 2], &[1]);
        assert!(matches!(
            verify_identity(&s, 1, 5),
            Err(Error::InvalidA { a: 1, .. })
        ));
    }

    #[test]
    fn bijection_check_passes_on_four_cell_shape() {
        let s = shape(&[3, 2], &[1]);
        let report = verify_bijection_exhaustive(&s, 2, 6).unwrap();
        assert!(report.ok, "failures: {:?}", report.failures);
        assert_eq!(report.per_norm[5].ssyt, 14);
        assert_eq!(report.per_norm[5].pairs, 14);
        for counts in &report.per_norm {
            assert_eq!(counts.ssyt, counts.pairs);
        }
    }

    #[test]
    fn matchup_rows_are_consistent() {
        let s = shape(&[3, 2], &[1]);
        let rows = matchup(&s, 2, 5).unwrap();
        assert_eq!(rows.len(), 14);
        for row in &rows {
            assert_eq!(row.p.norm(), 5);
            assert_eq!(row.q.norm(), 5);
            assert_eq!(row.r.norm() + row.t.content_weight(2).unwrap(), 5);
        }
    }
}
