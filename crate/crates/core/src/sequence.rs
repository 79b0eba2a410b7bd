//! Additive-recurrence (Kronecker) low-discrepancy points in `[0, 1)^d`,
//! using powers of the inverse generalized golden ratio.

#[derive(Debug, Clone)]
pub struct Kronecker {
    steps: Vec<f64>,
}

impl Kronecker {
    pub fn new(dim: usize) -> Self {
        // Unique positive root of x^{d+1} = x + 1.
        let mut phi: f64 = 2.0;
        for _ in 0..64 {
            phi = (1.0 + phi).powf(1.0 / (dim as f64 + 1.0));
        }
        let steps = (1..=dim).map(|j| phi.powi(-(j as i32)).fract()).collect();
        Kronecker { steps }
    }

    pub fn point(&self, i: usize) -> Vec<f64> {
        self.steps.iter().map(|a| (0.5 + a * i as f64).fract()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn points_are_in_unit_cube_and_spread() {
        let k = Kronecker::new(3);
        let pts: Vec<Vec<f64>> = (0..1000).map(|i| k.point(i)).collect();
        assert!(pts.iter().flatten().all(|&u| (0.0..1.0).contains(&u)));
        // Every octant is hit.
        let mut seen = [false; 8];
        for p in &pts {
            let idx = p.iter().enumerate().map(|(j, &u)| ((u >= 0.5) as usize) << j).sum::<usize>();
            seen[idx] = true;
        }
        assert!(seen.iter().all(|&s| s));
        // One-dimensional golden-ratio step.
        let one = Kronecker::new(1);
        assert!((one.steps[0] - 0.618_033_988_749_895).abs() < 1e-12);
    }
}
