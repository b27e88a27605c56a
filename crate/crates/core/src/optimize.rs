//! One-dimensional derivative-free search.

use thiserror::Error;

/// `1/φ`
const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Bisection on a monotone predicate with `!pred(lo)` and `pred(hi)`.
///
/// Returns the `true` end of the final bracket. Stops when the bracket is
/// narrower than `tolerance` or after `max_iterations` halvings.
pub fn bisect(mut pred: impl FnMut(f64) -> bool, mut lo: f64, mut hi: f64, tolerance: f64, max_iterations: usize) -> f64 {
    for _ in 0..max_iterations {
        if hi - lo <= tolerance {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if pred(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

#[derive(Clone, Copy, Debug, Error, PartialEq)]
pub enum OptimizeError {
    #[error("evaluation budget of {budget} exhausted")]
    Budget { budget: usize },
    #[error("golden-section did not settle: bracket values differ by {spread:e}")]
    Oscillation { spread: f64 },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Maximum {
    pub x: f64,
    pub value: f64,
    pub evaluations: usize,
}

/// Golden-section maximisation on an interval, preceded by a uniform scan
/// that picks the bracket around the best sample. The scan makes the search
/// tolerate functions that are only unimodal near their maximum.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GoldenSection {
    pub tolerance: f64,
    pub scan_points: usize,
    /// Largest tolerated spread of the objective over the final bracket.
    pub max_spread: f64,
}

impl Default for GoldenSection {
    fn default() -> Self {
        Self { tolerance: 1e-7, scan_points: 9, max_spread: 1e-6 }
    }
}

impl GoldenSection {
    pub fn maximize(&self, mut f: impl FnMut(f64) -> f64, lo: f64, hi: f64) -> Result<Maximum, OptimizeError> {
        let mut evaluations = 0;
        let mut eval = |x: f64| {
            evaluations += 1;
            f(x)
        };

        let n = self.scan_points.max(3);
        let step = (hi - lo) / (n - 1) as f64;
        let mut best = (0, f64::NEG_INFINITY);
        for i in 0..n {
            let v = eval(lo + step * i as f64);
            if v > best.1 {
                best = (i, v);
            }
        }
        let mut a = lo + step * best.0.saturating_sub(1) as f64;
        let mut b = (lo + step * (best.0 + 1) as f64).min(hi);

        let mut x1 = b - INV_PHI * (b - a);
        let mut x2 = a + INV_PHI * (b - a);
        let (mut f1, mut f2) = (eval(x1), eval(x2));
        while b - a > self.tolerance {
            if f1 < f2 {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + INV_PHI * (b - a);
                f2 = eval(x2);
            } else {
                b = x2;
                x2 = x1;
                f2 = f1;
                x1 = b - INV_PHI * (b - a);
                f1 = eval(x1);
            }
        }
        let spread = (f1 - f2).abs();
        let (x, value) = if f1 >= f2 { (x1, f1) } else { (x2, f2) };
        // the scan may have found something better than the refined bracket
        let (x, value) = if best.1 > value { (lo + step * best.0 as f64, best.1) } else { (x, value) };
        if spread > self.max_spread {
            return Err(OptimizeError::Oscillation { spread });
        }
        Ok(Maximum { x, value, evaluations })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bisect_finds_threshold() {
        let t = bisect(|x| x * x > 2.0, 0.0, 2.0, 1e-12, 200);
        assert!((t - core::f64::consts::SQRT_2).abs() < 1e-11);
        assert!(t * t > 2.0);
    }

    #[test]
    fn golden_finds_smooth_peak() {
        let m = GoldenSection::default().maximize(|x| -(x - 0.3) * (x - 0.3), 0.0, 1.0).unwrap();
        assert!((m.x - 0.3).abs() < 1e-6);
        assert!(m.evaluations < 60);
    }

    #[test]
    fn golden_finds_kink() {
        let m = GoldenSection::default().maximize(|x: f64| 1.0 - (x - 0.7).abs(), 0.0, 1.0).unwrap();
        assert!((m.x - 0.7).abs() < 1e-7);
    }

    #[test]
    fn scan_picks_the_taller_of_two_peaks() {
        let f = |x: f64| (-(x - 0.15).powi(2) * 400.0).exp() * 0.5 + (-(x - 0.8).powi(2) * 400.0).exp();
        let m = GoldenSection { scan_points: 21, ..Default::default() }.maximize(f, 0.0, 1.0).unwrap();
        assert!((m.x - 0.8).abs() < 1e-5);
    }

    #[test]
    fn oscillation_is_reported() {
        let rough = |x: f64| libm::sin(1e9 * x);
        let r = GoldenSection::default().maximize(rough, 0.0, 1.0);
        assert!(matches!(r, Err(OptimizeError::Oscillation { .. })));
    }
}
