//! Compensated (Neumaier) accumulation.

use crate::evaluation::EPS;

/// Running sum with a Neumaier correction term.
///
/// Besides the compensated value the accumulator tracks the sum of
/// magnitudes, which bounds the rounding error of the whole sum.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    comp: f64,
    magnitude: f64,
    count: usize,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
        self.magnitude += x.abs();
        self.count += 1;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }

    /// Sum of the absolute values of everything added so far.
    pub fn magnitude(&self) -> f64 {
        self.magnitude
    }

    pub fn count(&self) -> usize {
        self.count
    }

    /// Bound on the accumulated rounding error: 2ε|S| + 2nε²Σ|x|.
    pub fn rounding_bound(&self) -> f64 {
        2.0 * EPS * self.value().abs() + 2.0 * self.count as f64 * EPS * EPS * self.magnitude
    }
}

impl Extend<f64> for CompensatedSum {
    fn extend<I: IntoIterator<Item = f64>>(&mut self, iter: I) {
        for x in iter {
            self.add(x);
        }
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut s = Self::new();
        s.extend(iter);
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_cancelled_small_terms() {
        let s: CompensatedSum = [1.0, 1e100, 1.0, -1e100].into_iter().collect();
        assert_eq!(s.value(), 2.0);
        assert_eq!(s.count(), 4);
    }

    #[test]
    fn harmonic_partial_sum_matches_reverse_order() {
        let fwd: CompensatedSum = (1..=100_000).map(|k| 1.0 / k as f64).collect();
        let rev: CompensatedSum = (1..=100_000).rev().map(|k| 1.0 / k as f64).collect();
        assert!((fwd.value() - rev.value()).abs() <= fwd.rounding_bound());
    }
}
