//! Adaptive Dormand–Prince 5(4) integration of complex linear systems along
//! straight or circular paths, with shared logarithmic rescaling so that
//! exponentially growing solution frames stay representable.

use num_complex::Complex;

use crate::scalar::Real;

use super::OdeError;

/// An integration path in the complex plane, parametrized over `[0, 1]`.
#[derive(Debug, Clone, Copy)]
pub(crate) enum Path<R: Real> {
    /// Straight segment from `from` to `to`.
    Line {
        from: Complex<R>,
        to: Complex<R>,
    },
    /// Circular arc centered at the origin.
    Arc {
        radius: R,
        from_angle: R,
        to_angle: R,
    },
}

impl<R: Real> Path<R> {
    fn point(&self, t: R) -> Complex<R> {
        match *self {
            Path::Line { from, to } => from + (to - from) * t,
            Path::Arc {
                radius,
                from_angle,
                to_angle,
            } => {
                let angle = from_angle + (to_angle - from_angle) * t;
                Complex::from_polar(radius, angle)
            }
        }
    }

    fn velocity(&self, t: R) -> Complex<R> {
        match *self {
            Path::Line { from, to } => to - from,
            Path::Arc {
                from_angle,
                to_angle,
                ..
            } => Complex::new(R::zero(), to_angle - from_angle) * self.point(t),
        }
    }

    fn length_scale(&self) -> R {
        match *self {
            Path::Line { from, to } => (to - from).norm(),
            Path::Arc {
                radius,
                from_angle,
                to_angle,
            } => radius * (to_angle - from_angle).abs(),
        }
    }
}

/// Result of transporting a state along a path.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Transported<R: Real, const N: usize> {
    /// Rescaled state at the end of the path.
    pub state: [Complex<R>; N],
    /// Accumulated natural log of the common factor divided out.
    pub log_scale: R,
    /// Accepted plus rejected steps taken.
    #[allow(dead_code)]
    pub steps: usize,
}

const MAX_STEPS: usize = 500_000;

fn ratio<R: Real>(n: f64, d: f64) -> R {
    R::from_f64_lossy(n) / R::from_f64_lossy(d)
}

fn max_norm<R: Real, const N: usize>(y: &[Complex<R>; N]) -> R {
    y.iter().map(|c| c.norm()).fold(R::zero(), R::max)
}

/// Combine `base + h * Σ coef_j * k_j` componentwise.
fn stage<R: Real, const N: usize>(
    base: &[Complex<R>; N],
    h: R,
    terms: &[(R, &[Complex<R>; N])],
) -> [Complex<R>; N] {
    std::array::from_fn(|i| {
        let mut acc = Complex::new(R::zero(), R::zero());
        for (c, k) in terms {
            acc = acc + k[i] * *c;
        }
        base[i] + acc * h
    })
}

/// Integrate `dy/dz = rhs(z, y)` along `path`, carrying a shared log scale.
///
/// Whenever the state's max norm exceeds `1e50` the whole state is divided
/// by it and the logarithm accumulated, so ratios and homogeneous
/// coordinates of the state remain meaningful across huge growth.
pub(crate) fn integrate<R: Real, const N: usize, F>(
    rhs: &F,
    path: &Path<R>,
    start: [Complex<R>; N],
    start_log_scale: R,
    atol: R,
    rtol: R,
) -> Result<Transported<R, N>, OdeError>
where
    F: Fn(Complex<R>, &[Complex<R>; N]) -> [Complex<R>; N],
{
    let one = R::one();
    if path.length_scale() < R::epsilon() {
        return Ok(Transported {
            state: start,
            log_scale: start_log_scale,
            steps: 0,
        });
    }
    let deriv = |t: R, y: &[Complex<R>; N]| -> [Complex<R>; N] {
        let z = path.point(t);
        let v = path.velocity(t);
        let f = rhs(z, y);
        std::array::from_fn(|i| f[i] * v)
    };

    // Dormand–Prince 5(4) tableau.
    let c2: R = ratio(1.0, 5.0);
    let c3: R = ratio(3.0, 10.0);
    let c4: R = ratio(4.0, 5.0);
    let c5: R = ratio(8.0, 9.0);
    let a21: R = ratio(1.0, 5.0);
    let a31: R = ratio(3.0, 40.0);
    let a32: R = ratio(9.0, 40.0);
    let a41: R = ratio(44.0, 45.0);
    let a42: R = ratio(-56.0, 15.0);
    let a43: R = ratio(32.0, 9.0);
    let a51: R = ratio(19372.0, 6561.0);
    let a52: R = ratio(-25360.0, 2187.0);
    let a53: R = ratio(64448.0, 6561.0);
    let a54: R = ratio(-212.0, 729.0);
    let a61: R = ratio(9017.0, 3168.0);
    let a62: R = ratio(-355.0, 33.0);
    let a63: R = ratio(46732.0, 5247.0);
    let a64: R = ratio(49.0, 176.0);
    let a65: R = ratio(-5103.0, 18656.0);
    let a71: R = ratio(35.0, 384.0);
    let a73: R = ratio(500.0, 1113.0);
    let a74: R = ratio(125.0, 192.0);
    let a75: R = ratio(-2187.0, 6784.0);
    let a76: R = ratio(11.0, 84.0);
    let e1: R = ratio(71.0, 57600.0);
    let e3: R = ratio(-71.0, 16695.0);
    let e4: R = ratio(71.0, 1920.0);
    let e5: R = ratio(-17253.0, 339200.0);
    let e6: R = ratio(22.0, 525.0);
    let e7: R = ratio(-1.0, 40.0);

    let rescale_threshold = R::from_f64_lossy(1e50);
    let h_min = R::from_f64_lossy(1e-14);
    let safety: R = ratio(9.0, 10.0);
    let shrink_cap: R = ratio(1.0, 5.0);
    let grow_cap: R = R::from_f64_lossy(5.0);
    let exponent: R = ratio(-1.0, 5.0);

    let mut t = R::zero();
    let mut y = start;
    let mut kappa = start_log_scale;
    let mut h = ratio(1.0, 100.0);
    let mut steps = 0usize;

    while t < one {
        if steps >= MAX_STEPS {
            return Err(OdeError::StepBudgetExceeded);
        }
        steps += 1;
        if t + h > one {
            h = one - t;
        }
        let k1 = deriv(t, &y);
        let k2 = deriv(t + c2 * h, &stage(&y, h, &[(a21, &k1)]));
        let k3 = deriv(t + c3 * h, &stage(&y, h, &[(a31, &k1), (a32, &k2)]));
        let k4 = deriv(
            t + c4 * h,
            &stage(&y, h, &[(a41, &k1), (a42, &k2), (a43, &k3)]),
        );
        let k5 = deriv(
            t + c5 * h,
            &stage(&y, h, &[(a51, &k1), (a52, &k2), (a53, &k3), (a54, &k4)]),
        );
        let k6 = deriv(
            t + h,
            &stage(
                &y,
                h,
                &[(a61, &k1), (a62, &k2), (a63, &k3), (a64, &k4), (a65, &k5)],
            ),
        );
        let y_new = stage(
            &y,
            h,
            &[(a71, &k1), (a73, &k3), (a74, &k4), (a75, &k5), (a76, &k6)],
        );
        let k7 = deriv(t + h, &y_new);
        let zero_state = [Complex::new(R::zero(), R::zero()); N];
        let err_vec = stage(
            &zero_state,
            h,
            &[
                (e1, &k1),
                (e3, &k3),
                (e4, &k4),
                (e5, &k5),
                (e6, &k6),
                (e7, &k7),
            ],
        );
        let mut err = R::zero();
        for i in 0..N {
            let scale = atol + rtol * y[i].norm().max(y_new[i].norm());
            err = err.max(err_vec[i].norm() / scale);
        }
        if err.is_finite() && err <= one {
            t = t + h;
            y = y_new;
            let m = max_norm(&y);
            if m > rescale_threshold {
                y = std::array::from_fn(|i| y[i].unscale(m));
                kappa = kappa + m.ln();
            }
            if t >= one {
                break;
            }
        }
        let factor = if err.is_finite() {
            if err < R::from_f64_lossy(1e-30) {
                grow_cap
            } else {
                (safety * err.powf(exponent)).max(shrink_cap).min(grow_cap)
            }
        } else {
            shrink_cap
        };
        h = (h * factor).min(one);
        if h < h_min && t < one {
            return Err(OdeError::StepSizeUnderflow);
        }
    }

    Ok(Transported {
        state: y,
        log_scale: kappa,
        steps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponential_along_a_line_reaches_e() {
        let rhs = |_z: Complex<f64>, y: &[Complex<f64>; 1]| [y[0]];
        let path = Path::Line {
            from: Complex::new(0.0, 0.0),
            to: Complex::new(1.0, 0.0),
        };
        let out = integrate(&rhs, &path, [Complex::new(1.0, 0.0)], 0.0, 1e-12, 1e-12).unwrap();
        assert!((out.state[0].re - 1.0f64.exp()).abs() < 1e-10);
        assert!(out.state[0].im.abs() < 1e-10);
        assert_eq!(out.log_scale, 0.0);
    }

    #[test]
    fn exponential_along_an_arc_depends_only_on_endpoints() {
        // y' = y integrated along the half circle from 1 to -1 gives
        // exp(-1 - 1) relative to the start.
        let rhs = |_z: Complex<f64>, y: &[Complex<f64>; 1]| [y[0]];
        let path = Path::Arc {
            radius: 1.0,
            from_angle: 0.0,
            to_angle: std::f64::consts::PI,
        };
        let out = integrate(&rhs, &path, [Complex::new(1.0, 0.0)], 0.0, 1e-12, 1e-12).unwrap();
        let expected = Complex::new(-2.0f64, 0.0).exp();
        assert!((out.state[0] - expected).norm() < 1e-10);
    }

    #[test]
    fn huge_growth_triggers_shared_rescaling() {
        // y' = 200 y over [0, 1]: |y| = e^200 ≈ 7e86 forces a rescale.
        let rhs = |_z: Complex<f64>, y: &[Complex<f64>; 2]| {
            [y[0] * 200.0, y[1] * 200.0]
        };
        let path = Path::Line {
            from: Complex::new(0.0, 0.0),
            to: Complex::new(1.0, 0.0),
        };
        let start = [Complex::new(1.0, 0.0), Complex::new(0.5, 0.0)];
        let out = integrate(&rhs, &path, start, 0.0, 1e-12, 1e-12).unwrap();
        assert!(out.log_scale > 0.0);
        // The total log magnitude is 200 and the ratio of components is kept.
        let total = out.state[0].norm().ln() + out.log_scale;
        assert!((total - 200.0).abs() < 1e-6);
        let ratio = out.state[1] / out.state[0];
        assert!((ratio.re - 0.5).abs() < 1e-9);
    }

    #[test]
    fn zero_length_path_is_a_no_op() {
        let rhs = |_z: Complex<f64>, y: &[Complex<f64>; 1]| [y[0]];
        let path = Path::Line {
            from: Complex::new(2.0, 1.0),
            to: Complex::new(2.0, 1.0),
        };
        let out = integrate(&rhs, &path, [Complex::new(3.0, 0.0)], 0.25, 1e-10, 1e-10).unwrap();
        assert_eq!(out.state[0], Complex::new(3.0, 0.0));
        assert_eq!(out.log_scale, 0.25);
        assert_eq!(out.steps, 0);
    }
}
