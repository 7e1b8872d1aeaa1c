//! Compensated (Neumaier) summation.
//!
//! The mode sums of this crate accumulate up to ~10^7 terms spanning many
//! orders of magnitude; plain `f64` accumulation loses several digits there.
//! Neumaier's variant of Kahan summation keeps the running error of the sum
//! itself at the level of one rounding of the result, independent of term
//! ordering.

/// Running compensated sum.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    compensation: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds one term. Neumaier's branch also handles terms larger than the
    /// current sum, which plain Kahan does not.
    #[inline]
    pub fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.compensation += (self.sum - t) + value;
        } else {
            self.compensation += (value - t) + self.sum;
        }
        self.sum = t;
    }

    /// Current value of the sum including the compensation term.
    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

impl std::iter::FromIterator<f64> for KahanSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = KahanSum::new();
        for v in iter {
            acc.add(v);
        }
        acc
    }
}
