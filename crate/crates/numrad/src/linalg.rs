//! Spectral kernels built on the Hermitian eigensolver: operator norm,
//! matrix absolute value, PSD functional calculus, and the spectral radius
//! via Gelfand's formula.

use num_complex::Complex64;

use crate::eig::{herm_eig, herm_eig_values, HermEigDecomposition, DEFAULT_EIG_TOL};
use crate::error::{NumradError, Result};
use crate::matrix::ComplexMatrix;

/// Relative clipping floor for roundoff negatives in PSD spectra.
pub const PSD_CLIP_REL: f64 = 1e-12;

/// Default absolute tolerance for [`spectral_radius`].
pub const DEFAULT_SPECTRAL_TOL: f64 = 1e-10;

const MAX_SQUARINGS: usize = 40;

/// Operator norm `‖A‖ = sqrt(λ_max(A*A))`.
///
/// Backed by the same Jacobi kernel as everything else so there is a single
/// numerical codepath to validate. `A*A` is Hermitian PSD, for which the
/// sweep budget is never exhausted at supported dimensions.
pub fn op_norm(a: &ComplexMatrix) -> f64 {
    let gram = a.adjoint().mul(a).expect("A*A is always conformant");
    let evs = herm_eig_values(&gram, DEFAULT_EIG_TOL)
        .expect("Jacobi on a Hermitian Gram matrix converges");
    evs.last().copied().unwrap_or(0.0).max(0.0).sqrt()
}

/// Singular system of `A`: ascending singular values together with the
/// right-singular basis `V` (eigenvectors of `A*A`), so that
/// `phi(|A|) = V · diag(phi(s)) · V*` for any scalar `phi`.
///
/// Roundoff negatives in the spectrum of `A*A` are clipped per the PSD
/// clipping rule; anything below the floor is an error.
pub fn singular_system(a: &ComplexMatrix) -> Result<(Vec<f64>, ComplexMatrix)> {
    let gram = a.adjoint().mul(a)?;
    let decomp = herm_eig(&gram, DEFAULT_EIG_TOL)?;
    let clipped = clip_psd_spectrum(&decomp.eigenvalues)?;
    let singular: Vec<f64> = clipped.into_iter().map(f64::sqrt).collect();
    Ok((singular, decomp.vectors))
}

/// Matrix absolute value `|A| = (A*A)^{1/2}`; defined for any rectangular
/// `A`, result is `cols × cols` and PSD.
pub fn abs_op(a: &ComplexMatrix) -> Result<ComplexMatrix> {
    let (s, v) = singular_system(a)?;
    Ok(recompose_hermitian(&v, &s))
}

/// Functional calculus on a Hermitian PSD matrix: `phi(P) = V·diag(phi(λ))·V*`.
///
/// Eigenvalues in `[-1e-12·(1+λ_max), 0)` are treated as roundoff and clipped
/// to zero before `phi` is applied; anything below that floor is rejected.
/// `phi` must be finite on the clipped spectrum.
pub fn psd_apply<F>(p: &ComplexMatrix, phi: F) -> Result<ComplexMatrix>
where
    F: Fn(f64) -> f64,
{
    let decomp: HermEigDecomposition = herm_eig(p, DEFAULT_EIG_TOL)?;
    let clipped = clip_psd_spectrum(&decomp.eigenvalues)?;
    let mapped: Vec<f64> = clipped
        .iter()
        .map(|&lambda| {
            let y = phi(lambda);
            if y.is_finite() {
                Ok(y)
            } else {
                Err(NumradError::PhiDomain(lambda))
            }
        })
        .collect::<Result<_>>()?;
    Ok(recompose_hermitian(&decomp.vectors, &mapped))
}

/// Spectral radius via Gelfand's formula with repeated squaring.
///
/// The iterate is renormalized each step so only the accumulated log-scale
/// grows: `r(A) = lim_k ‖A^{2^k}‖_F^{1/2^k}`. Stops once two successive
/// estimates agree to `tol·(1+ρ)`; the squaring budget is 40.
pub fn spectral_radius(a: &ComplexMatrix, tol: f64) -> Result<f64> {
    a.check_square("spectral_radius")?;
    let scale = a.frobenius_norm().max(1.0);
    let mut current = a.scale(Complex64::new(1.0 / scale, 0.0));
    // A^(2^k) = exp(log_scale) · current, with ‖current‖_F kept at 1.
    let mut log_scale = scale.ln() + current.frobenius_norm().ln();
    if !log_scale.is_finite() {
        return Ok(0.0); // zero matrix
    }
    let norm0 = current.frobenius_norm();
    current = current.scale(Complex64::new(1.0 / norm0, 0.0));
    let mut estimate = log_scale.exp();

    for k in 1..=MAX_SQUARINGS {
        let squared = current.mul(&current)?;
        let norm = squared.frobenius_norm();
        if norm == 0.0 {
            return Ok(0.0); // an exact power vanished: A is nilpotent
        }
        log_scale = 2.0 * log_scale + norm.ln();
        current = squared.scale(Complex64::new(1.0 / norm, 0.0));
        let next = (log_scale / (1u64 << k) as f64).exp();
        if (next - estimate).abs() <= tol * (1.0 + next) {
            return Ok(next);
        }
        estimate = next;
    }
    Err(NumradError::NoConvergence(format!(
        "spectral radius estimates still moving after {MAX_SQUARINGS} squarings (last {estimate:.6e})"
    )))
}

/// Operator norm of a Hermitian matrix straight from its spectrum.
pub(crate) fn hermitian_op_norm(h: &ComplexMatrix) -> Result<f64> {
    let evs = herm_eig_values(h, DEFAULT_EIG_TOL)?;
    Ok(evs[0].abs().max(evs[evs.len() - 1].abs()))
}

/// Clips tiny roundoff negatives to zero; errors on genuine negatives.
fn clip_psd_spectrum(eigenvalues: &[f64]) -> Result<Vec<f64>> {
    let lambda_max = eigenvalues.iter().copied().fold(0.0f64, f64::max);
    let floor = -PSD_CLIP_REL * (1.0 + lambda_max);
    eigenvalues
        .iter()
        .map(|&lambda| {
            if lambda >= 0.0 {
                Ok(lambda)
            } else if lambda >= floor {
                Ok(0.0)
            } else {
                Err(NumradError::NegativeEigenvalue {
                    value: lambda,
                    floor,
                })
            }
        })
        .collect()
}

/// `V · diag(d) · V*`, projected back to exact Hermitian form to keep
/// roundoff from breaking symmetry downstream.
pub(crate) fn recompose_hermitian(v: &ComplexMatrix, diag: &[f64]) -> ComplexMatrix {
    let n = v.rows();
    let mut scaled = v.clone();
    for j in 0..diag.len() {
        for i in 0..n {
            scaled.set(i, j, scaled.get(i, j) * diag[j]);
        }
    }
    let raw = scaled.mul(&v.adjoint()).expect("conformant by construction");
    raw.hermitian_part().expect("square by construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_matrix(rows: usize, cols: usize, seed: u64) -> ComplexMatrix {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let entries: Vec<Complex64> = (0..rows * cols)
            .map(|_| Complex64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5))
            .collect();
        ComplexMatrix::new(rows, cols, entries).unwrap()
    }

    #[test]
    fn op_norm_of_diagonal() {
        assert!((op_norm(&ComplexMatrix::diag(&[3.0, 4.0])) - 4.0).abs() < 1e-12);
    }

    #[test]
    fn op_norm_of_single_entry() {
        let a = ComplexMatrix::from_real_rows(&[vec![0.0, 2.0], vec![0.0, 0.0]]).unwrap();
        assert!((op_norm(&a) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn op_norm_equals_adjoint_norm() {
        let a = random_matrix(6, 6, 17);
        assert!((op_norm(&a) - op_norm(&a.adjoint())).abs() <= 1e-10);
    }

    #[test]
    fn abs_op_of_shift() {
        let a = ComplexMatrix::from_real_rows(&[vec![0.0, 2.0], vec![0.0, 0.0]]).unwrap();
        let m = abs_op(&a).unwrap();
        let expected = ComplexMatrix::diag(&[0.0, 2.0]);
        assert!(m.sub(&expected).unwrap().frobenius_norm() < 1e-12);
    }

    #[test]
    fn abs_op_of_zero_is_zero() {
        let z = ComplexMatrix::zeros(3, 3);
        assert!(abs_op(&z).unwrap().frobenius_norm() < 1e-14);
    }

    #[test]
    fn abs_op_of_unitary_is_identity() {
        // rotation ⊕ phased rotation is unitary
        let (c, s) = (0.6, 0.8);
        let i = Complex64::new(0.0, 1.0);
        let u = ComplexMatrix::from_rows(&[
            vec![c.into(), (-s).into(), 0.0.into(), 0.0.into()],
            vec![s.into(), c.into(), 0.0.into(), 0.0.into()],
            vec![0.0.into(), 0.0.into(), c * i, Complex64::from(-s)],
            vec![0.0.into(), 0.0.into(), s.into(), c * (-i)],
        ])
        .unwrap();
        let gram = u.adjoint().mul(&u).unwrap();
        assert!(
            gram.sub(&ComplexMatrix::identity(4)).unwrap().frobenius_norm() < 1e-12,
            "test matrix must be unitary"
        );
        let m = abs_op(&u).unwrap();
        assert!(m.sub(&ComplexMatrix::identity(4)).unwrap().frobenius_norm() <= 1e-10);
    }

    #[test]
    fn abs_op_square_reconstructs_gram() {
        let a = random_matrix(5, 5, 23);
        let m = abs_op(&a).unwrap();
        let gram = a.adjoint().mul(&a).unwrap();
        let resid = m.mul(&m).unwrap().sub(&gram).unwrap().frobenius_norm();
        assert!(resid <= 1e-9 * (1.0 + gram.frobenius_norm()), "residual {resid:e}");
    }

    #[test]
    fn psd_apply_sqrt_on_diagonal() {
        let p = ComplexMatrix::diag(&[4.0, 9.0]);
        let r = psd_apply(&p, f64::sqrt).unwrap();
        assert!(r.sub(&ComplexMatrix::diag(&[2.0, 3.0])).unwrap().frobenius_norm() < 1e-12);
    }

    #[test]
    fn psd_apply_power_zero_is_identity() {
        // λ^0 = 1 for every λ ≥ 0 including λ = 0
        let p = ComplexMatrix::diag(&[4.0, 0.0]);
        let r = psd_apply(&p, |l| l.powf(0.0)).unwrap();
        assert!(r.sub(&ComplexMatrix::identity(2)).unwrap().frobenius_norm() < 1e-12);
    }

    #[test]
    fn psd_apply_identity_function_returns_input() {
        let g = random_matrix(5, 5, 31);
        let p = g.adjoint().mul(&g).unwrap();
        let r = psd_apply(&p, |l| l).unwrap();
        let rel = r.sub(&p).unwrap().frobenius_norm() / p.frobenius_norm();
        assert!(rel <= 1e-10, "relative error {rel:e}");
    }

    #[test]
    fn psd_apply_fractional_powers_multiply_back() {
        let g = random_matrix(5, 5, 37);
        let p = g.adjoint().mul(&g).unwrap();
        let a = psd_apply(&p, |l| l.powf(0.3)).unwrap();
        let b = psd_apply(&p, |l| l.powf(0.7)).unwrap();
        let ab = a.mul(&b).unwrap();
        let ba = b.mul(&a).unwrap();
        assert!(ab.sub(&ba).unwrap().frobenius_norm() <= 1e-8 * (1.0 + p.frobenius_norm()));
        let resid = ab.sub(&p).unwrap().frobenius_norm();
        assert!(resid <= 1e-8 * (1.0 + p.frobenius_norm()), "residual {resid:e}");
    }

    #[test]
    fn psd_apply_rejects_negative_spectrum() {
        let p = ComplexMatrix::diag(&[1.0, -1.0]);
        assert!(matches!(
            psd_apply(&p, |l| l),
            Err(NumradError::NegativeEigenvalue { .. })
        ));
    }

    #[test]
    fn psd_apply_rejects_nan_producing_phi() {
        let p = ComplexMatrix::diag(&[1.0, 2.0]);
        assert!(matches!(
            psd_apply(&p, |l| (l - 5.0).sqrt()),
            Err(NumradError::PhiDomain(_))
        ));
    }

    #[test]
    fn spectral_radius_of_nilpotent_is_zero() {
        let a = ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap();
        assert_eq!(spectral_radius(&a, 1e-8).unwrap(), 0.0);
    }

    #[test]
    fn spectral_radius_of_diagonal() {
        let a = ComplexMatrix::diag(&[2.0, 1.0]);
        assert!((spectral_radius(&a, 1e-10).unwrap() - 2.0).abs() < 1e-9);
    }

    #[test]
    fn spectral_radius_commutes_through_products() {
        // r(AB) = r(BA)
        let a = random_matrix(5, 5, 41);
        let b = random_matrix(5, 5, 43);
        let rab = spectral_radius(&a.mul(&b).unwrap(), 1e-9).unwrap();
        let rba = spectral_radius(&b.mul(&a).unwrap(), 1e-9).unwrap();
        assert!((rab - rba).abs() <= 1e-6 * (1.0 + rab));
    }

    #[test]
    fn spectral_radius_below_op_norm() {
        for seed in 0..5 {
            let a = random_matrix(6, 6, 100 + seed);
            let r = spectral_radius(&a, 1e-9).unwrap();
            assert!(r <= op_norm(&a) + 1e-8);
        }
    }

    #[test]
    fn spectral_radius_matches_hermitian_extreme_eigenvalue() {
        let g = random_matrix(6, 6, 51);
        let h = g.add(&g.adjoint()).unwrap();
        let evs = herm_eig_values(&h, DEFAULT_EIG_TOL).unwrap();
        let expected = evs[0].abs().max(evs[evs.len() - 1].abs());
        let r = spectral_radius(&h, 1e-9).unwrap();
        assert!((r - expected).abs() <= 1e-8 * (1.0 + expected), "r={r}, expected={expected}");
    }
}
