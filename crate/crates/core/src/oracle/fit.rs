//! Numeric limit extraction from colength sequences.
//!
//! Colengths of the filtrations handled here are exactly quadratic in `m` up
//! to bounded periodic terms from coefficient ceilings, so a plain quadratic
//! least-squares fit over the upper half-window recovers the leading
//! coefficient to high accuracy. This is the only floating-point corner of
//! the crate.

use crate::multiplicity::degree_two_exponents;
use crate::oracle::filtration::{filtration_ideal, OracleFiltrationSpec};
use crate::oracle::OracleError;

/// Minimum number of sample lengths a fit needs.
pub const MIN_FIT_POINTS: usize = 8;

/// Result of a quadratic fit: the multiplicity normalization
/// `estimate = 2 c2 ~ lim 2 l_m / m^2` and a relative RMS residual.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LimitFit {
    pub estimate: f64,
    pub residual: f64,
}

/// Fits `l_m = c2 m^2 + c1 m + c0` over `m` in `(M/2, M]` and returns `2 c2`.
///
/// `lengths[m - 1]` must hold `l_m` for `m = 1..=M`. Deterministic.
pub fn limit_fit(lengths: &[u64]) -> Result<LimitFit, OracleError> {
    let m_max = lengths.len();
    if m_max < MIN_FIT_POINTS {
        return Err(OracleError::TooFewPoints {
            got: m_max,
            needed: MIN_FIT_POINTS,
        });
    }
    let lo = m_max / 2 + 1;
    let scale = m_max as f64;

    // Normal equations for a degree-2 fit in t = m / M.
    let mut ata = [[0.0f64; 3]; 3];
    let mut atb = [0.0f64; 3];
    for m in lo..=m_max {
        let t = m as f64 / scale;
        let row = [t * t, t, 1.0];
        let y = lengths[m - 1] as f64;
        for i in 0..3 {
            for j in 0..3 {
                ata[i][j] += row[i] * row[j];
            }
            atb[i] += row[i] * y;
        }
    }
    let coeffs = solve3(ata, atb);

    let count = (m_max - lo + 1) as f64;
    let mut sq_err = 0.0;
    let mut mean_abs = 0.0;
    for m in lo..=m_max {
        let t = m as f64 / scale;
        let fitted = coeffs[0] * t * t + coeffs[1] * t + coeffs[2];
        let y = lengths[m - 1] as f64;
        sq_err += (y - fitted) * (y - fitted);
        mean_abs += y.abs();
    }
    mean_abs /= count;
    let rms = (sq_err / count).sqrt();
    let residual = rms / mean_abs.max(1.0);

    Ok(LimitFit {
        estimate: 2.0 * coeffs[0] / (scale * scale),
        residual,
    })
}

fn solve3(mut a: [[f64; 3]; 3], mut b: [f64; 3]) -> [f64; 3] {
    for col in 0..3 {
        let pivot = (col..3)
            .max_by(|&r, &s| a[r][col].abs().total_cmp(&a[s][col].abs()))
            .expect("nonempty range");
        a.swap(col, pivot);
        b.swap(col, pivot);
        let p = a[col][col];
        assert!(p.abs() > 1e-30, "degenerate fit system");
        for r in 0..3 {
            if r == col {
                continue;
            }
            let f = a[r][col] / p;
            for c in col..3 {
                a[r][c] -= f * a[col][c];
            }
            b[r] -= f * b[col];
        }
    }
    [b[0] / a[0][0], b[1] / a[1][1], b[2] / a[2][2]]
}

/// The fitted value of `G` at one grid point.
#[derive(Debug, Clone, PartialEq)]
pub struct GridEstimate {
    pub point: Vec<u64>,
    /// `G(point) ~ lim l_m / m^2` (half the fit's multiplicity estimate).
    pub g_estimate: f64,
    pub fit_residual: f64,
}

/// Estimated coefficient table of the homogeneous degree-2 polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct MixedPolyEstimate {
    pub grid: Vec<GridEstimate>,
    /// Coefficients in the order of
    /// [`degree_two_exponents`](crate::multiplicity::degree_two_exponents).
    pub coefficients: Vec<(Vec<u32>, f64)>,
    /// RMS residual of the coefficient solve over the grid.
    pub solve_residual: f64,
}

/// Estimates the multiplicity polynomial of a tuple of filtrations by lattice
/// counting: for each grid point fits `l_m = colength(prod_k I(k)_{m n_k})`,
/// then solves least squares for the homogeneous coefficients.
pub fn mixed_poly_oracle(
    specs: &[OracleFiltrationSpec],
    grid: &[Vec<u64>],
    m_max: u64,
) -> Result<MixedPolyEstimate, OracleError> {
    let r = specs.len();
    let exponents = degree_two_exponents(r);
    if grid.len() < exponents.len() {
        return Err(OracleError::TooFewPoints {
            got: grid.len(),
            needed: exponents.len(),
        });
    }

    let mut grid_estimates = Vec::with_capacity(grid.len());
    for point in grid {
        assert_eq!(point.len(), r, "grid point arity must match the filtration count");
        let mut lengths = Vec::with_capacity(m_max as usize);
        for m in 1..=m_max {
            let mut prod = filtration_ideal(&specs[0], m * point[0]);
            for (spec, &nk) in specs[1..].iter().zip(&point[1..]) {
                prod = prod.product(&filtration_ideal(spec, m * nk));
            }
            lengths.push(prod.colength()?);
        }
        let fit = limit_fit(&lengths)?;
        grid_estimates.push(GridEstimate {
            point: point.clone(),
            g_estimate: fit.estimate / 2.0,
            fit_residual: fit.residual,
        });
    }

    // Least squares for G(n) = sum_k b_k n^k over the degree-2 monomials.
    let k = exponents.len();
    let rows: Vec<Vec<f64>> = grid
        .iter()
        .map(|point| {
            exponents
                .iter()
                .map(|e| {
                    e.iter()
                        .zip(point)
                        .map(|(&k, &n)| (n as f64).powi(k as i32))
                        .product()
                })
                .collect()
        })
        .collect();
    let ys: Vec<f64> = grid_estimates.iter().map(|g| g.g_estimate).collect();

    let mut ata = vec![vec![0.0f64; k]; k];
    let mut atb = vec![0.0f64; k];
    for (row, &y) in rows.iter().zip(&ys) {
        for i in 0..k {
            for j in 0..k {
                ata[i][j] += row[i] * row[j];
            }
            atb[i] += row[i] * y;
        }
    }
    let solved = solve_dense(&mut ata, &mut atb);

    let mut sq = 0.0;
    for (row, &y) in rows.iter().zip(&ys) {
        let fitted: f64 = row.iter().zip(&solved).map(|(a, b)| a * b).sum();
        sq += (y - fitted) * (y - fitted);
    }
    let solve_residual = (sq / rows.len() as f64).sqrt();

    Ok(MixedPolyEstimate {
        grid: grid_estimates,
        coefficients: exponents.into_iter().zip(solved).collect(),
        solve_residual,
    })
}

fn solve_dense(a: &mut [Vec<f64>], b: &mut [f64]) -> Vec<f64> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&r, &s| a[r][col].abs().total_cmp(&a[s][col].abs()))
            .expect("nonempty range");
        a.swap(col, pivot);
        b.swap(col, pivot);
        let p = a[col][col];
        assert!(p.abs() > 1e-30, "degenerate coefficient system");
        for r in 0..n {
            if r == col {
                continue;
            }
            let f = a[r][col] / p;
            for c in col..n {
                let v = a[col][c];
                a[r][c] -= f * v;
            }
            b[r] -= f * b[col];
        }
    }
    (0..n).map(|i| b[i] / a[i][i]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::monomial::{val_ideal, MonomialValuation};

    fn v(a: u64, b: u64) -> MonomialValuation {
        MonomialValuation::new(a, b).unwrap()
    }

    fn lengths_of(va: u64, vb: u64, m_max: u64) -> Vec<u64> {
        let val = v(va, vb);
        (1..=m_max)
            .map(|m| val_ideal(&val, m).colength().unwrap())
            .collect()
    }

    #[test]
    fn exact_quadratic_counts_fit_exactly() {
        // l_m = m(m+1)/2 for the maximal ideal powers: estimate 1.
        let fit = limit_fit(&lengths_of(1, 1, 200)).unwrap();
        assert!((fit.estimate - 1.0).abs() < 0.01, "estimate {}", fit.estimate);
    }

    #[test]
    fn half_multiplicity_within_tolerance() {
        let fit = limit_fit(&lengths_of(1, 2, 200)).unwrap();
        assert!(
            (fit.estimate - 0.5).abs() < 0.02 * 0.5,
            "estimate {}",
            fit.estimate
        );
    }

    #[test]
    fn constant_sequence_has_no_quadratic_growth() {
        let fit = limit_fit(&vec![7u64; 50]).unwrap();
        assert!(fit.estimate.abs() < 1e-9);
        assert!(fit.residual < 1e-12);
    }

    #[test]
    fn too_few_points() {
        assert!(matches!(
            limit_fit(&[1, 2, 3]),
            Err(OracleError::TooFewPoints { .. })
        ));
    }

    #[test]
    fn single_spec_polynomial_is_half_square() {
        let spec = OracleFiltrationSpec::single(v(1, 1));
        let est = mixed_poly_oracle(&[spec], &[vec![1], vec![2]], 80).unwrap();
        let (k, b) = &est.coefficients[0];
        assert_eq!(k.as_slice(), &[2]);
        assert!((b - 0.5).abs() < 0.02, "coefficient {b}");
    }

    #[test]
    fn identical_specs_are_symmetric() {
        let spec = OracleFiltrationSpec::single(v(1, 1));
        let grid = vec![vec![1, 0], vec![0, 1], vec![1, 1]];
        let est = mixed_poly_oracle(&[spec.clone(), spec], &grid, 60).unwrap();
        let b20 = est.coefficients[0].1;
        let b11 = est.coefficients[1].1;
        let b02 = est.coefficients[2].1;
        // e0 = e1 = e2: b20 = b02 = e/2 and b11 = e.
        assert!((b20 - b02).abs() < 0.02);
        assert!((b11 - 2.0 * b20).abs() < 0.05);
    }

    #[test]
    fn grid_must_determine_the_coefficients() {
        let spec = OracleFiltrationSpec::single(v(1, 1));
        assert!(matches!(
            mixed_poly_oracle(&[spec.clone(), spec], &[vec![1, 1]], 40),
            Err(OracleError::TooFewPoints { .. })
        ));
    }
}
