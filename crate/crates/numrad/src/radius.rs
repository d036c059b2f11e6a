//! Numerical radius computation.
//!
//! `w(A) = sup{ |⟨Ax, x⟩| : ‖x‖ = 1 }` is evaluated as the maximum over
//! rotation angles of the extreme eigenvalues of the Hermitian parts
//! `H(θ) = (e^{iθ}A + e^{-iθ}A*)/2`: a coarse grid over `[0, π)` followed by
//! golden-section refinement around the leading grid candidates. Entrywise
//! nonnegative matrices get a one-shot fast path through a single
//! eigendecomposition.

use num_complex::Complex64;

use crate::eig::{herm_eig_values, DEFAULT_EIG_TOL};
use crate::error::{NumradError, Result};
use crate::fg::FgPair;
use crate::linalg::singular_system;
use crate::matrix::{inner_product, vector_norm, ComplexMatrix};

/// Default absolute tolerance for [`numerical_radius`].
pub const DEFAULT_RADIUS_TOL: f64 = 1e-8;

/// Coarse-grid resolution over `[0, π)`.
pub const RADIUS_GRID_POINTS: usize = 720;

/// Golden-section refinement stops once the bracketing θ-window is this small.
const THETA_WINDOW: f64 = 1e-9;

const GOLDEN_RATIO_CONJ: f64 = 0.618_033_988_749_894_9;

/// Outcome of a numerical radius evaluation.
///
/// `argmax_theta` is reported in `[0, 2π)` with the convention that the
/// maximizing Hermitian part is `Re(e^{-iθ}A)`, i.e.
/// `value ≈ λ_max(rotated_hermitian_part(A, -argmax_theta))`.
#[derive(Debug, Clone, Copy)]
pub struct RadiusResult {
    pub value: f64,
    pub argmax_theta: f64,
    pub grid_points: usize,
    pub refined_tol: f64,
}

/// Result of a mixed Cauchy–Schwarz check `|⟨Ax,y⟩| ≤ ‖f(|A|)x‖·‖g(|A*|)y‖`.
#[derive(Debug, Clone, Copy)]
pub struct MixedSchwarzCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

/// Rotated Hermitian part `H(θ) = (e^{iθ}A + e^{-iθ}A*)/2`.
pub fn rotated_hermitian_part(a: &ComplexMatrix, theta: f64) -> Result<ComplexMatrix> {
    a.check_square("rotated_hermitian_part")?;
    let phase = Complex64::from_polar(1.0, theta);
    let rotated = a.scale(phase);
    let back = a.adjoint().scale(phase.conj());
    Ok(rotated.add(&back)?.scale(Complex64::new(0.5, 0.0)))
}

/// Numerical radius by rotation-angle maximization.
///
/// Searches `θ ∈ [0, π)`; the score `g(θ) = max(λ_max(H(θ)), -λ_min(H(θ)))`
/// absorbs the sign symmetry `H(θ+π) = -H(θ)`, so the half period covers the
/// full circle. Golden-section refinement runs around the best three
/// non-adjacent grid points to guard against multiple local maxima.
pub fn numerical_radius(a: &ComplexMatrix, tol: f64) -> Result<RadiusResult> {
    a.check_square("numerical_radius")?;
    let scorer = AngleScorer::new(a);
    let step = std::f64::consts::PI / RADIUS_GRID_POINTS as f64;

    let mut grid = Vec::with_capacity(RADIUS_GRID_POINTS);
    for k in 0..RADIUS_GRID_POINTS {
        grid.push(scorer.score(k as f64 * step)?);
    }
    let candidates = top_non_adjacent(&grid, 3);

    let mut best_theta = candidates[0] as f64 * step;
    let mut best = grid[candidates[0]].clone();
    for &idx in &candidates {
        let center = idx as f64 * step;
        let (theta, scored) = golden_section_max(&scorer, center - step, center + step)?;
        if scored.value > best.value {
            best = scored;
            best_theta = theta;
        }
    }

    // Map the internal search angle to the reporting convention
    // value = λ_max(Re(e^{-i·argmax}·A)).
    let two_pi = 2.0 * std::f64::consts::PI;
    let argmax = if best.from_max_branch {
        (two_pi - best_theta).rem_euclid(two_pi)
    } else {
        (std::f64::consts::PI - best_theta).rem_euclid(two_pi)
    };
    Ok(RadiusResult {
        value: best.value,
        argmax_theta: argmax,
        grid_points: RADIUS_GRID_POINTS,
        refined_tol: tol,
    })
}

/// Fast path for entrywise nonnegative matrices:
/// `w(A) = λ_max((A + Aᵀ)/2)` in a single eigendecomposition.
pub fn numerical_radius_nonneg(a: &ComplexMatrix) -> Result<f64> {
    a.check_square("numerical_radius_nonneg")?;
    if !a.is_nonnegative(1e-12) {
        return Err(NumradError::NotNonnegative(
            "entries must be real with nonnegative real part (tolerance 1e-12)".into(),
        ));
    }
    let sym = a.hermitian_part()?;
    let evs = herm_eig_values(&sym, DEFAULT_EIG_TOL)?;
    Ok(evs.last().copied().unwrap_or(0.0).max(0.0))
}

/// Evaluates both sides of the mixed Cauchy–Schwarz inequality
/// `|⟨Ax,y⟩| ≤ ‖f(|A|)x‖ · ‖g(|A*|)y‖` for a validated `(f, g)` pair.
pub fn check_mixed_schwarz(
    a: &ComplexMatrix,
    x: &ComplexMatrix,
    y: &ComplexMatrix,
    fg: &FgPair,
) -> Result<MixedSchwarzCheck> {
    if x.cols() != 1 || y.cols() != 1 || x.rows() != a.cols() || y.rows() != a.rows() {
        return Err(NumradError::DimensionMismatch(format!(
            "A is {}x{}, need x of length {} and y of length {}",
            a.rows(),
            a.cols(),
            a.cols(),
            a.rows()
        )));
    }
    let lhs = inner_product(&a.mul(x)?, y)?.norm();

    // f(|A|)x in the right-singular basis of A, g(|A*|)y in the left one.
    let (s_right, v_right) = singular_system(a)?;
    let fx = apply_diagonal_function(&v_right, &s_right, x, |l| fg.f(l))?;
    let (s_left, v_left) = singular_system(&a.adjoint())?;
    let gy = apply_diagonal_function(&v_left, &s_left, y, |l| fg.g(l))?;

    let rhs = vector_norm(&fx) * vector_norm(&gy);
    Ok(MixedSchwarzCheck {
        lhs,
        rhs,
        holds: lhs <= rhs + 1e-9 * (1.0 + rhs),
    })
}

/// `V·diag(phi(s))·V* x` without forming the matrix.
fn apply_diagonal_function(
    v: &ComplexMatrix,
    spectrum: &[f64],
    x: &ComplexMatrix,
    phi: impl Fn(f64) -> Result<f64>,
) -> Result<ComplexMatrix> {
    let coeffs = v.adjoint().mul(x)?;
    let mut scaled = coeffs;
    for (i, &s) in spectrum.iter().enumerate() {
        scaled.set(i, 0, scaled.get(i, 0) * phi(s)?);
    }
    v.mul(&scaled)
}

/// Score of a single rotation angle, remembering which eigenvalue branch won.
#[derive(Debug, Clone)]
struct AngleScore {
    value: f64,
    from_max_branch: bool,
}

/// Evaluates `g(θ)` reusing the decomposition `H(θ) = cosθ·Hr + sinθ·Hi`.
struct AngleScorer {
    real_part: ComplexMatrix,
    imag_part: ComplexMatrix,
}

impl AngleScorer {
    fn new(a: &ComplexMatrix) -> Self {
        let adj = a.adjoint();
        let real_part = a
            .add(&adj)
            .expect("square")
            .scale(Complex64::new(0.5, 0.0));
        let imag_part = a
            .sub(&adj)
            .expect("square")
            .scale(Complex64::new(0.0, 0.5));
        Self { real_part, imag_part }
    }

    fn score(&self, theta: f64) -> Result<AngleScore> {
        let h = self
            .real_part
            .scale(Complex64::new(theta.cos(), 0.0))
            .add(&self.imag_part.scale(Complex64::new(theta.sin(), 0.0)))?;
        let evs = herm_eig_values(&h, DEFAULT_EIG_TOL)?;
        let top = *evs.last().expect("nonempty spectrum");
        let bottom = evs[0];
        if top >= -bottom {
            Ok(AngleScore {
                value: top,
                from_max_branch: true,
            })
        } else {
            Ok(AngleScore {
                value: -bottom,
                from_max_branch: false,
            })
        }
    }
}

/// Indices of the `k` best grid values that are pairwise non-adjacent on the
/// circular grid.
fn top_non_adjacent(grid: &[AngleScore], k: usize) -> Vec<usize> {
    let n = grid.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| grid[b].value.total_cmp(&grid[a].value));
    let mut picked: Vec<usize> = Vec::with_capacity(k);
    for idx in order {
        if picked.len() == k {
            break;
        }
        let adjacent = picked.iter().any(|&p| {
            let d = (p as i64 - idx as i64).unsigned_abs() as usize;
            d <= 1 || d >= n - 1
        });
        if !adjacent {
            picked.push(idx);
        }
    }
    if picked.is_empty() {
        picked.push(0);
    }
    picked
}

/// Golden-section maximization of the angle score over `[lo, hi]`.
fn golden_section_max(
    scorer: &AngleScorer,
    mut lo: f64,
    mut hi: f64,
) -> Result<(f64, AngleScore)> {
    let mut a = hi - GOLDEN_RATIO_CONJ * (hi - lo);
    let mut b = lo + GOLDEN_RATIO_CONJ * (hi - lo);
    let mut fa = scorer.score(a)?;
    let mut fb = scorer.score(b)?;
    while hi - lo > THETA_WINDOW {
        if fa.value >= fb.value {
            hi = b;
            b = a;
            fb = fa;
            a = hi - GOLDEN_RATIO_CONJ * (hi - lo);
            fa = scorer.score(a)?;
        } else {
            lo = a;
            a = b;
            fa = fb;
            b = lo + GOLDEN_RATIO_CONJ * (hi - lo);
            fb = scorer.score(b)?;
        }
    }
    if fa.value >= fb.value {
        Ok((a, fa))
    } else {
        Ok((b, fb))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::op_norm;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_matrix(dim: usize, seed: u64) -> ComplexMatrix {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let entries: Vec<Complex64> = (0..dim * dim)
            .map(|_| Complex64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5))
            .collect();
        ComplexMatrix::new(dim, dim, entries).unwrap()
    }

    #[test]
    fn rotation_at_zero_gives_hermitian_part() {
        let a = ComplexMatrix::from_real_rows(&[vec![0.0, 2.0], vec![0.0, 0.0]]).unwrap();
        let h = rotated_hermitian_part(&a, 0.0).unwrap();
        let expected = ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        assert!(h.sub(&expected).unwrap().frobenius_norm() < 1e-14);
    }

    #[test]
    fn rotation_unwinds_phase() {
        // A = iI at θ = -π/2 gives I
        let i = Complex64::new(0.0, 1.0);
        let a = ComplexMatrix::identity(2).scale(i);
        let h = rotated_hermitian_part(&a, -std::f64::consts::FRAC_PI_2).unwrap();
        assert!(h.sub(&ComplexMatrix::identity(2)).unwrap().frobenius_norm() < 1e-14);
    }

    #[test]
    fn rotation_half_turn_flips_sign() {
        let a = random_matrix(4, 5);
        let h0 = rotated_hermitian_part(&a, 0.7).unwrap();
        let h1 = rotated_hermitian_part(&a, 0.7 + std::f64::consts::PI).unwrap();
        let flip = h1.add(&h0).unwrap().frobenius_norm();
        assert!(flip < 1e-12, "H(θ+π) must equal -H(θ), defect {flip:e}");
    }

    #[test]
    fn identity_has_radius_one() {
        let r = numerical_radius(&ComplexMatrix::identity(4), 1e-8).unwrap();
        assert!((r.value - 1.0).abs() < 1e-9);
    }

    #[test]
    fn nilpotent_shift_has_radius_half() {
        // w = ‖A‖/2 when A² = 0
        let a = ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap();
        let r = numerical_radius(&a, 1e-8).unwrap();
        assert!((r.value - 0.5).abs() < 1e-9, "got {}", r.value);
    }

    #[test]
    fn positive_offdiagonal_blocks_hit_half_norm_sum() {
        // [[0,2],[1,0]] has w = (2+1)/2
        let a = ComplexMatrix::from_real_rows(&[vec![0.0, 2.0], vec![1.0, 0.0]]).unwrap();
        let r = numerical_radius(&a, 1e-8).unwrap();
        assert!((r.value - 1.5).abs() < 1e-9, "got {}", r.value);
    }

    #[test]
    fn argmax_theta_certifies_reported_value() {
        for seed in 0..6 {
            let a = random_matrix(4, 60 + seed);
            let r = numerical_radius(&a, 1e-8).unwrap();
            assert!((0.0..2.0 * std::f64::consts::PI).contains(&r.argmax_theta));
            let h = rotated_hermitian_part(&a, -r.argmax_theta).unwrap();
            let evs = herm_eig_values(&h, DEFAULT_EIG_TOL).unwrap();
            let achieved = *evs.last().unwrap();
            assert!(
                r.value >= achieved - r.refined_tol && (r.value - achieved).abs() <= 1e-7,
                "value {} vs achieved {achieved}",
                r.value
            );
        }
    }

    #[test]
    fn sandwich_against_operator_norm() {
        for seed in 0..6 {
            let a = random_matrix(5, 80 + seed);
            let w = numerical_radius(&a, 1e-8).unwrap().value;
            let norm = op_norm(&a);
            assert!(0.5 * norm <= w + 1e-8);
            assert!(w <= norm + 1e-8);
        }
    }

    #[test]
    fn nonneg_fast_path_matches_general_path() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        let entries: Vec<Complex64> = (0..25)
            .map(|_| Complex64::new(rng.gen::<f64>(), 0.0))
            .collect();
        let a = ComplexMatrix::new(5, 5, entries).unwrap();
        let fast = numerical_radius_nonneg(&a).unwrap();
        let slow = numerical_radius(&a, 1e-8).unwrap().value;
        assert!((fast - slow).abs() <= 1e-6, "fast {fast} vs slow {slow}");
    }

    #[test]
    fn nonneg_fast_path_examples() {
        let sym = ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        assert!((numerical_radius_nonneg(&sym).unwrap() - 1.0).abs() < 1e-12);
        let shift = ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap();
        assert!((numerical_radius_nonneg(&shift).unwrap() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn nonneg_fast_path_rejects_signed_entries() {
        let a = ComplexMatrix::from_real_rows(&[vec![0.0, -1.0], vec![0.0, 0.0]]).unwrap();
        assert!(matches!(
            numerical_radius_nonneg(&a),
            Err(NumradError::NotNonnegative(_))
        ));
    }

    #[test]
    fn mixed_schwarz_identity_case() {
        let fg = FgPair::power(0.5).unwrap();
        let e1 = ComplexMatrix::new(2, 1, vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)])
            .unwrap();
        let chk = check_mixed_schwarz(&ComplexMatrix::identity(2), &e1, &e1, &fg).unwrap();
        assert!((chk.lhs - 1.0).abs() < 1e-12);
        assert!((chk.rhs - 1.0).abs() < 1e-12);
        assert!(chk.holds);
    }

    #[test]
    fn mixed_schwarz_zero_operator() {
        let fg = FgPair::power(0.5).unwrap();
        let x = ComplexMatrix::new(2, 1, vec![Complex64::new(0.3, 0.1), Complex64::new(0.0, 1.0)])
            .unwrap();
        let chk = check_mixed_schwarz(&ComplexMatrix::zeros(2, 2), &x, &x, &fg).unwrap();
        assert_eq!(chk.lhs, 0.0);
        assert!(chk.rhs.abs() < 1e-12);
        assert!(chk.holds);
    }

    #[test]
    fn power_inequality_small_sample() {
        for seed in 0..4 {
            let a = random_matrix(4, 200 + seed);
            let w1 = numerical_radius(&a, 1e-8).unwrap().value;
            let w2 = numerical_radius(&a.mul(&a).unwrap(), 1e-8).unwrap().value;
            let w3 = numerical_radius(&a.mul(&a).unwrap().mul(&a).unwrap(), 1e-8)
                .unwrap()
                .value;
            assert!(w2 <= w1 * w1 + 1e-6);
            assert!(w3 <= w1 * w1 * w1 + 1e-6);
        }
    }
}
