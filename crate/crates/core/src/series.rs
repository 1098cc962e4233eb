//! Hilbert-Poincare series `Q(z) / (1 - z)^r` with integer numerators, and
//! the finite Hilbert-function windows they are recovered from.

use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::degree::Degree;
use crate::error::{Error, Result};

/// Number of consecutive degrees that must fit the candidate Hilbert
/// polynomial before a window counts as stabilized.
pub const STABILIZATION_GUARD: usize = 4;

/// Largest window [`HilbertData::stabilize`] will grow to.
pub const STABILIZATION_CAP: usize = 1 << 14;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HilbertSeries {
    numerator: Vec<BigInt>,
    dim: u32,
}

impl HilbertSeries {
    /// Builds a series and normalizes it.
    pub fn new(numerator: Vec<BigInt>, dim: u32) -> Self {
        HilbertSeries { numerator, dim }.normalize()
    }

    pub fn from_i64(numerator: &[i64], dim: u32) -> Self {
        Self::new(numerator.iter().map(|&c| BigInt::from(c)).collect(), dim)
    }

    /// Builds without normalizing. Only useful for exercising [`normalize`](Self::normalize).
    pub fn raw(numerator: &[i64], dim: u32) -> Self {
        let numerator = if numerator.is_empty() {
            vec![BigInt::zero()]
        } else {
            numerator.iter().map(|&c| BigInt::from(c)).collect()
        };
        HilbertSeries { numerator, dim }
    }

    pub fn numerator(&self) -> &[BigInt] {
        &self.numerator
    }

    pub fn numerator_i64(&self) -> Result<Vec<i64>> {
        self.numerator
            .iter()
            .map(|c| c.to_i64().ok_or(Error::Overflow("series numerator")))
            .collect()
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.iter().all(Zero::is_zero)
    }

    /// Cancels every common factor `(1 - z)` and strips trailing zero
    /// coefficients. The zero series normalizes to numerator `[0]`, dim 0.
    pub fn normalize(&self) -> HilbertSeries {
        let mut q = self.numerator.clone();
        trim(&mut q);
        if q.iter().all(Zero::is_zero) {
            return HilbertSeries { numerator: vec![BigInt::zero()], dim: 0 };
        }
        let mut dim = self.dim;
        while dim > 0 && q.iter().sum::<BigInt>().is_zero() {
            // Q = (1 - z) P with P_k = Q_0 + ... + Q_k.
            let mut acc = BigInt::zero();
            let mut p = Vec::with_capacity(q.len() - 1);
            for c in &q[..q.len() - 1] {
                acc += c;
                p.push(acc.clone());
            }
            q = p;
            trim(&mut q);
            dim -= 1;
        }
        HilbertSeries { numerator: q, dim }
    }

    /// Coefficient of `z^t` in the power-series expansion.
    pub fn expand(&self, t: i64) -> BigInt {
        if t < 0 {
            return BigInt::zero();
        }
        let t = t as usize;
        if self.dim == 0 {
            return self.numerator.get(t).cloned().unwrap_or_default();
        }
        let r = self.dim as usize;
        self.numerator
            .iter()
            .enumerate()
            .take(t + 1)
            .map(|(i, q)| q * binomial(BigInt::from(t - i + r - 1), BigInt::from(r - 1)))
            .sum()
    }

    /// `[e_0, ..., e_{count-1}]` with `e_i = Q^{(i)}(1) / i!`.
    pub fn hilbert_coefficients(&self, count: usize) -> Vec<BigInt> {
        (0..count)
            .map(|i| {
                self.numerator
                    .iter()
                    .enumerate()
                    .skip(i)
                    .map(|(j, q)| q * binomial(BigInt::from(j), BigInt::from(i)))
                    .sum()
            })
            .collect()
    }

    /// `deg Q - r`, or `-inf` for the zero series.
    pub fn postulation(&self) -> Degree {
        if self.is_zero() {
            return Degree::NegInfinity;
        }
        Degree::Finite(self.degree() as i64 - self.dim as i64)
    }

    /// Degree of the numerator (0 for the zero series).
    pub fn degree(&self) -> usize {
        self.numerator.len() - 1
    }

    /// Series of the Hilbert-Samuel function `n -> l(M / I^{n+1} M)` given
    /// the series of `G_I(M)`.
    pub fn samuel(&self) -> HilbertSeries {
        if self.is_zero() {
            return self.clone();
        }
        HilbertSeries {
            numerator: self.numerator.clone(),
            dim: self.dim + 1,
        }
    }

    /// Recovers the series from a stabilized window of its Hilbert function.
    pub fn from_data(data: &HilbertData, dim: u32) -> Result<HilbertSeries> {
        if !data.stabilized {
            return Err(Error::NotStabilized("window not marked stabilized".into()));
        }
        let values = &data.values;
        let guard = STABILIZATION_GUARD.max(dim as usize + 1);
        if values.len() < guard || !region_fits(&values[values.len() - guard..], dim) {
            return Err(Error::NotStabilized(format!(
                "last {guard} values do not fit a polynomial of degree {}",
                dim as i64 - 1
            )));
        }
        // Q = (1 - z)^r * sum h(t) z^t, exact on the recorded window.
        let signs: Vec<BigInt> = (0..=dim as usize)
            .map(|j| {
                let c = binomial(BigInt::from(dim), BigInt::from(j));
                if j % 2 == 0 { c } else { -c }
            })
            .collect();
        let numerator = (0..values.len())
            .map(|k| {
                signs
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j <= k)
                    .map(|(j, s)| s * BigInt::from(values[k - j]))
                    .sum()
            })
            .collect();
        Ok(HilbertSeries::new(numerator, dim))
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = String::new();
        for (i, c) in self.numerator.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if terms.is_empty() {
                if c.is_negative() {
                    terms.push('-');
                }
            } else {
                terms.push_str(&format!(" {sign} "));
            }
            let abs = c.abs();
            match (i, abs.is_one()) {
                (0, _) => terms.push_str(&abs.to_string()),
                (_, true) => {}
                (_, false) => terms.push_str(&abs.to_string()),
            }
            match i {
                0 => {}
                1 => terms.push('z'),
                _ => terms.push_str(&format!("z^{i}")),
            }
        }
        if terms.is_empty() {
            terms.push('0');
        }
        match self.dim {
            0 => write!(f, "{terms}"),
            1 => write!(f, "({terms})/(1-z)"),
            r => write!(f, "({terms})/(1-z)^{r}"),
        }
    }
}

fn trim(q: &mut Vec<BigInt>) {
    while q.len() > 1 && q.last().is_some_and(Zero::is_zero) {
        q.pop();
    }
    if q.is_empty() {
        q.push(BigInt::zero());
    }
}

/// True when the `dim`-th finite differences of `values` all vanish, i.e. the
/// values agree with one polynomial of degree `< dim`.
pub fn region_fits(values: &[u64], dim: u32) -> bool {
    let mut diffs: Vec<BigInt> = values.iter().map(|&v| BigInt::from(v)).collect();
    for _ in 0..dim {
        if diffs.len() < 2 {
            return false;
        }
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    !diffs.is_empty() && diffs.iter().all(Zero::is_zero)
}

/// A finite window `h(0..N)` of a Hilbert function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    pub values: Vec<u64>,
    pub stabilized: bool,
}

impl HilbertData {
    pub fn new(values: Vec<u64>, stabilized: bool) -> Self {
        HilbertData { values, stabilized }
    }

    /// Samples `h` until its tail fits a polynomial of degree `dim - 1`: a
    /// guard of [`STABILIZATION_GUARD`] consecutive degrees must fit, then the
    /// window is doubled and the whole extension re-checked.
    pub fn stabilize(
        dim: u32,
        min_len: usize,
        mut h: impl FnMut(usize) -> Result<u64>,
    ) -> Result<HilbertData> {
        let guard = STABILIZATION_GUARD.max(dim as usize + 1);
        let mut values: Vec<u64> = Vec::new();
        let mut len = min_len.max(guard);
        let mut fill = |values: &mut Vec<u64>, len: usize| -> Result<()> {
            while values.len() < len {
                values.push(h(values.len())?);
            }
            Ok(())
        };
        loop {
            if len > STABILIZATION_CAP {
                return Err(Error::NotStabilized(format!(
                    "no polynomial tail within {STABILIZATION_CAP} degrees"
                )));
            }
            fill(&mut values, len)?;
            if region_fits(&values[len - guard..len], dim) {
                let doubled = 2 * len;
                fill(&mut values, doubled)?;
                if region_fits(&values[len - guard..doubled], dim) {
                    values.truncate(doubled);
                    return Ok(HilbertData::new(values, true));
                }
                len = doubled;
            } else {
                len += 1;
            }
        }
    }

    /// Appends `h(t)` for `t` up to `len - 1`.
    pub fn extend_to(&mut self, len: usize, mut h: impl FnMut(usize) -> Result<u64>) -> Result<()> {
        while self.values.len() < len {
            let t = self.values.len();
            self.values.push(h(t)?);
        }
        Ok(())
    }

    pub fn get(&self, t: i64) -> u64 {
        if t < 0 {
            0
        } else {
            self.values.get(t as usize).copied().unwrap_or(0)
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    fn data(v: &[u64]) -> HilbertData {
        HilbertData::new(v.to_vec(), true)
    }

    #[test]
    fn normalize_cancels_one_minus_z() {
        let s = HilbertSeries::raw(&[1, -1], 1).normalize();
        assert_eq!((s.numerator(), s.dim()), (&big(&[1])[..], 0));

        let s = HilbertSeries::raw(&[2, 0, 1], 1).normalize();
        assert_eq!((s.numerator(), s.dim()), (&big(&[2, 0, 1])[..], 1));

        let s = HilbertSeries::raw(&[1, 0, -1], 2).normalize();
        assert_eq!((s.numerator(), s.dim()), (&big(&[1, 1])[..], 1));
    }

    #[test]
    fn zero_series_normalizes_to_dim_zero() {
        let s = HilbertSeries::raw(&[0, 0], 3).normalize();
        assert!(s.is_zero());
        assert_eq!(s.dim(), 0);
        assert_eq!(s.postulation(), Degree::NegInfinity);
    }

    #[test]
    fn expand_examples() {
        let s = HilbertSeries::from_i64(&[2, 0, 1], 1);
        assert_eq!(s.expand(0), BigInt::from(2));
        assert_eq!(s.expand(5), BigInt::from(3));
        assert_eq!(s.expand(-1), BigInt::zero());
        let s = HilbertSeries::from_i64(&[1], 2);
        assert_eq!(s.expand(4), BigInt::from(5));
    }

    #[test]
    fn from_data_examples() {
        let s = HilbertSeries::from_data(&data(&[2, 2, 3, 3, 3, 3, 3]), 1).unwrap();
        assert_eq!(s, HilbertSeries::from_i64(&[2, 0, 1], 1));
        let s = HilbertSeries::from_data(&data(&[1, 1, 1, 1, 1]), 1).unwrap();
        assert_eq!(s, HilbertSeries::from_i64(&[1], 1));
        let s = HilbertSeries::from_data(&data(&[1, 2, 1, 1, 1, 1]), 1).unwrap();
        assert_eq!(s, HilbertSeries::from_i64(&[1, 1, -1], 1));
    }

    #[test]
    fn from_data_rejects_unstable_tails() {
        assert!(matches!(
            HilbertSeries::from_data(&data(&[1, 2, 3, 4, 5]), 1),
            Err(Error::NotStabilized(_))
        ));
        assert!(matches!(
            HilbertSeries::from_data(&HilbertData::new(vec![1; 8], false), 1),
            Err(Error::NotStabilized(_))
        ));
    }

    #[test]
    fn coefficient_examples() {
        let e = |q: &[i64]| HilbertSeries::from_i64(q, 1).hilbert_coefficients(2);
        assert_eq!(e(&[2, 0, 1]), big(&[3, 2]));
        assert_eq!(e(&[1]), big(&[1, 0]));
        assert_eq!(e(&[1, 1, -1]), big(&[1, -1]));
    }

    #[test]
    fn postulation_examples() {
        let p = |q: &[i64]| HilbertSeries::from_i64(q, 1).postulation();
        assert_eq!(p(&[2, 0, 1]), 1);
        assert_eq!(p(&[1]), -1);
        assert_eq!(p(&[1, 1, -1]), 1);
    }

    #[test]
    fn samuel_examples() {
        let window = |s: &HilbertSeries| (0..4).map(|t| s.expand(t)).collect::<Vec<_>>();
        assert_eq!(window(&HilbertSeries::from_i64(&[2, 0, 1], 1).samuel()), big(&[2, 4, 7, 10]));
        assert_eq!(window(&HilbertSeries::from_i64(&[1], 1).samuel()), big(&[1, 2, 3, 4]));
        assert_eq!(window(&HilbertSeries::from_i64(&[1, 1], 1).samuel()), big(&[1, 3, 5, 7]));
    }

    #[test]
    fn stabilize_doubles_the_window() {
        // Plateau of 4 ones before the true tail: the doubled re-check sees it.
        let h = [1u64, 1, 1, 1, 1, 2, 2];
        let d = HilbertData::stabilize(1, 0, |t| Ok(*h.get(t).unwrap_or(&2))).unwrap();
        assert!(d.len() >= 12);
        let s = HilbertSeries::from_data(&d, 1).unwrap();
        assert_eq!(s, HilbertSeries::from_i64(&[1, 0, 0, 0, 0, 1], 1));
    }

    #[test]
    fn display() {
        assert_eq!(HilbertSeries::from_i64(&[2, 0, 1], 1).to_string(), "(2 + z^2)/(1-z)");
        assert_eq!(HilbertSeries::from_i64(&[1, 1, -1], 1).to_string(), "(1 + z - z^2)/(1-z)");
    }
}
