//! Truncated power series in `q` with exact integer coefficients.
//!
//! A [`QSeries`] stores coefficients for exponents `0..=trunc`. Arithmetic
//! truncates to the smaller of the operands' degrees, so a result never
//! claims precision it does not have. Coefficients are checked `i64`: at
//! the problem sizes this crate verifies, counting coefficients stay far
//! below the overflow threshold, and the workspace enables overflow checks
//! in every profile so a surprise would abort rather than wrap.

use crate::error::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSeries {
    coeffs: Vec<i64>,
}

impl QSeries {
    /// The zero series truncated at degree `trunc`.
    pub fn zero(trunc: usize) -> QSeries {
        QSeries {
            coeffs: vec![0; trunc + 1],
        }
    }

    /// The constant one truncated at degree `trunc`.
    pub fn one(trunc: usize) -> QSeries {
        let mut s = QSeries::zero(trunc);
        s.coeffs[0] = 1;
        s
    }

    /// `1 - q^k` truncated at degree `trunc`.
    pub fn one_minus_power(k: i64, trunc: usize) -> Result<QSeries, Error> {
        if k <= 0 {
            return Err(Error::GeometricFactor { k });
        }
        let mut s = QSeries::one(trunc);
        if (k as usize) <= trunc {
            s.coeffs[k as usize] = -1;
        }
        Ok(s)
    }

    /// `1 / (1 - q^k) = 1 + q^k + q^{2k} + ...` truncated at degree `trunc`.
    pub fn geometric(k: i64, trunc: usize) -> Result<QSeries, Error> {
        if k <= 0 {
            return Err(Error::GeometricFactor { k });
        }
        let mut s = QSeries::zero(trunc);
        let mut exp = 0usize;
        while exp <= trunc {
            s.coeffs[exp] = 1;
            exp += k as usize;
        }
        Ok(s)
    }

    /// Builds a series from a stream of exponents, counting multiplicity.
    /// Exponents beyond `trunc` are dropped.
    pub fn from_exponents(trunc: usize, exponents: impl IntoIterator<Item = u64>) -> QSeries {
        let mut s = QSeries::zero(trunc);
        for exp in exponents {
            if exp <= trunc as u64 {
                s.coeffs[exp as usize] += 1;
            }
        }
        s
    }

    /// Largest exponent with a stored coefficient.
    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `q^exp`; `None` beyond the truncation degree.
    pub fn coeff(&self, exp: usize) -> Option<i64> {
        self.coeffs.get(exp).copied()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Sum, truncated to the smaller operand degree.
    pub fn add(&self, other: &QSeries) -> QSeries {
        let trunc = self.truncation().min(other.truncation());
        let coeffs = (0..=trunc)
            .map(|i| self.coeffs[i] + other.coeffs[i])
            .collect();
        QSeries { coeffs }
    }

    /// Product, truncated to the smaller operand degree.
    pub fn mul(&self, other: &QSeries) -> QSeries {
        let trunc = self.truncation().min(other.truncation());
        let mut coeffs = vec![0i64; trunc + 1];
        for (i, &ci) in self.coeffs.iter().take(trunc + 1).enumerate() {
            if ci == 0 {
                continue;
            }
            for (j, &cj) in other.coeffs.iter().take(trunc + 1 - i).enumerate() {
                coeffs[i + j] += ci * cj;
            }
        }
        QSeries { coeffs }
    }

    /// Product of `1 / (1 - q^k)` over the given `k`, truncated at `trunc`.
    pub fn product_of_geometrics(ks: &[i64], trunc: usize) -> Result<QSeries, Error> {
        let mut acc = QSeries::one(trunc);
        for &k in ks {
            acc = acc.mul(&QSeries::geometric(k, trunc)?);
        }
        Ok(acc)
    }

    /// Product of `1 - q^k` over the given `k`, truncated at `trunc`.
    pub fn product_of_complements(ks: &[i64], trunc: usize) -> Result<QSeries, Error> {
        let mut acc = QSeries::one(trunc);
        for &k in ks {
            acc = acc.mul(&QSeries::one_minus_power(k, trunc)?);
        }
        Ok(acc)
    }

    /// First exponent (up to the common truncation) where the two series
    /// differ.
    pub fn first_difference(&self, other: &QSeries) -> Option<usize> {
        let trunc = self.truncation().min(other.truncation());
        (0..=trunc).find(|&i| self.coeffs[i] != other.coeffs[i])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_is_all_ones_for_k_one() {
        let s = QSeries::geometric(1, 5).unwrap();
        assert_eq!(s.coeffs(), [1, 1, 1, 1, 1, 1]);
        let s = QSeries::geometric(3, 7).unwrap();
        assert_eq!(s.coeffs(), [1, 0, 0, 1, 0, 0, 1, 0]);
    }

    #[test]
    fn geometric_rejects_non_positive_exponent() {
        assert_eq!(
            QSeries::geometric(0, 5),
            Err(Error::GeometricFactor { k: 0 })
        );
        assert_eq!(
            QSeries::one_minus_power(-2, 5),
            Err(Error::GeometricFactor { k: -2 })
        );
    }

    #[test]
    fn complement_cancels_geometric() {
        for k in 1..=4 {
            let product = QSeries::geometric(k, 9)
                .unwrap()
                .mul(&QSeries::one_minus_power(k, 9).unwrap());
            assert_eq!(product, QSeries::one(9), "k={k}");
        }
    }

    #[test]
    fn mul_truncates_to_smaller_degree() {
        let a = QSeries::geometric(1, 10).unwrap();
        let b = QSeries::geometric(1, 4).unwrap();
        let p = a.mul(&b);
        assert_eq!(p.truncation(), 4);
        assert_eq!(p.coeffs(), [1, 2, 3, 4, 5]);
        assert_eq!(a.add(&b).truncation(), 4);
    }

    #[test]
    fn product_of_geometrics_counts_partitions_with_bounded_parts() {
        // Independent count of partitions of n into parts from {1,2,3,4}.
        fn count(n: i64, max_part: i64) -> i64 {
            if n == 0 {
                return 1;
            }
            if n < 0 || max_part == 0 {
                return 0;
            }
            count(n - max_part, max_part) + count(n, max_part - 1)
        }
        let h = QSeries::product_of_geometrics(&[1, 2, 3, 4], 8).unwrap();
        for n in 0..=8 {
            assert_eq!(h.coeff(n).unwrap(), count(n as i64, 4), "n={n}");
        }
        assert_eq!(h.coeff(5).unwrap(), 6);
    }

    #[test]
    fn from_exponents_counts_and_drops_overflowing_terms() {
        let s = QSeries::from_exponents(4, [0, 2, 2, 7, 4]);
        assert_eq!(s.coeffs(), [1, 0, 2, 0, 1]);
    }

    #[test]
    fn first_difference_finds_lowest_mismatch() {
        let a = QSeries::geometric(1, 6).unwrap();
        let b = QSeries::geometric(2, 6).unwrap();
        assert_eq!(a.first_difference(&b), Some(1));
        assert_eq!(a.first_difference(&a), None);
    }
}
