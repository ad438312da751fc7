//! Finite-difference Schwarzian derivative along radial stencils.

use num_complex::Complex;

use crate::scalar::Real;

use super::OdeError;

/// Compute the Schwarzian derivative `f'''/f' - 3/2 (f''/f')²` of a map at
/// `z` from seven samples along the radial direction through `z`.
///
/// Fourth-order centered stencils with spacing `h` are used for the first
/// three radial derivatives and converted to `z`-derivatives by the chain
/// rule (a factor `e^{-i n ψ}` per order, where `ψ` is the argument of
/// `z`). The stencil must not reach the origin, and the first derivative
/// must not vanish on it.
pub fn schwarzian_fd<R, F>(f: &mut F, z: Complex<R>, h: R) -> Result<Complex<R>, OdeError>
where
    R: Real,
    F: FnMut(Complex<R>) -> Result<Complex<R>, OdeError>,
{
    if !(h > R::zero()) || !h.is_finite() {
        return Err(OdeError::ConfigurationInvalid(
            "stencil spacing must be positive and finite".into(),
        ));
    }
    let r = z.norm();
    let three = R::from_f64_lossy(3.0);
    if r <= three * h {
        return Err(OdeError::ConfigurationInvalid(
            "stencil reaches the origin; decrease the spacing or move outward".into(),
        ));
    }
    let dir = z.unscale(r);
    let mut samples = [Complex::new(R::zero(), R::zero()); 7];
    for (idx, j) in (-3i32..=3).enumerate() {
        let s = r + h * R::from_f64_lossy(f64::from(j));
        samples[idx] = f(dir * s)?;
    }
    let [fm3, fm2, fm1, f0, fp1, fp2, fp3] = samples;

    let c = |x: f64| R::from_f64_lossy(x);
    let twelve_h = h * c(12.0);
    let d1 = (fm2 - fm1 * c(8.0) + fp1 * c(8.0) - fp2) / twelve_h;
    let d2 = (-fm2 + fm1 * c(16.0) - f0 * c(30.0) + fp1 * c(16.0) - fp2) / (twelve_h * h);
    let d3 = (fm3 * c(0.125) - fm2 + fm1 * c(1.625) - fp1 * c(1.625) + fp2 - fp3 * c(0.125))
        / (h * h * h);

    let magnitude = samples
        .iter()
        .map(|v| v.norm())
        .fold(R::zero(), R::max)
        .max(R::one());
    if d1.norm() < magnitude * R::epsilon().sqrt() {
        return Err(OdeError::CriticalPointOnStencil);
    }

    let radial = d3 / d1 - (d2 / d1) * (d2 / d1) * c(1.5);
    // z = s · dir with |dir| = 1, so d/dz picks up dir⁻¹ = conj(dir).
    let phase = dir.conj() * dir.conj();
    Ok(radial * phase)
}
