//! Numerical engine for the second-order linear equation attached to a
//! monic centered polynomial, its developing map, asymptotic tip values,
//! and finite-difference Schwarzian checks.
//!
//! The polynomial `q` determines the equation `u'' + q u / 2 = 0`. The
//! developing map is the ratio of the fundamental system normalized at the
//! origin; along each of the `d + 2` directions between consecutive
//! distinguished rays the map converges to an asymptotic *tip* value, one
//! per sector, and the tip configuration inherits the polynomial's
//! rotational symmetry.

mod dopri;
mod schwarzian;

pub use schwarzian::schwarzian_fd;

use num_complex::Complex;
use num_integer::Integer;
use num_rational::Ratio;
use thiserror::Error;

use crate::grafting::{GraftError, TipConfiguration};
use crate::moebius::{map_from_triples, MoebiusError, MoebiusMap, SpherePoint, Tolerance};
use crate::scalar::Real;

use dopri::{integrate, Path, Transported};

/// Errors from the numerical engine.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum OdeError {
    /// Invalid polynomial, configuration, or request.
    #[error("invalid configuration: {0}")]
    ConfigurationInvalid(String),
    /// The seed point is too close in; the polynomial is not yet dominated
    /// by its leading term there.
    #[error("seed radius {radius} is too small for a reliable asymptotic seed")]
    SeedRadiusTooSmall {
        /// The rejected radius.
        radius: f64,
    },
    /// Tip sampling did not converge within the sample budget.
    #[error("tip samples did not converge in sector {0}")]
    NoConvergence(usize),
    /// The adaptive integrator could not take a step.
    #[error("adaptive step size underflow")]
    StepSizeUnderflow,
    /// The adaptive integrator exceeded its step budget.
    #[error("integration step budget exceeded")]
    StepBudgetExceeded,
    /// The transported solution frame lost its Wronskian beyond the gate.
    #[error("Wronskian drift {drift} exceeds the configured gate")]
    ExcessiveWronskianDrift {
        /// Measured drift.
        drift: f64,
    },
    /// The first derivative vanishes on a finite-difference stencil.
    #[error("derivative vanishes on the stencil")]
    CriticalPointOnStencil,
    /// The map takes the value infinity at a sample point.
    #[error("map takes the value infinity at a sample point")]
    PoleOnSample,
}

/// A monic centered polynomial `z^d + c_{d-2} z^{d-2} + ... + c_1 z + c_0`
/// of degree `d >= 2` (no `z^{d-1}` term).
#[derive(Debug, Clone, PartialEq)]
pub struct PolynomialQD<R: Real> {
    coeffs: Vec<Complex<R>>,
}

impl<R: Real> PolynomialQD<R> {
    /// Build from the low coefficients `[c_0, ..., c_{d-2}]`; the degree is
    /// `coeffs.len() + 1`.
    pub fn new(low_coeffs: Vec<Complex<R>>) -> Result<Self, OdeError> {
        if low_coeffs.is_empty() {
            return Err(OdeError::ConfigurationInvalid(
                "need at least one low coefficient (degree >= 2)".into(),
            ));
        }
        if low_coeffs.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(OdeError::ConfigurationInvalid(
                "coefficients must be finite".into(),
            ));
        }
        Ok(Self { coeffs: low_coeffs })
    }

    /// The pure power `z^d`.
    pub fn pure(degree: usize) -> Result<Self, OdeError> {
        if degree < 2 {
            return Err(OdeError::ConfigurationInvalid(
                "degree must be at least 2".into(),
            ));
        }
        Ok(Self {
            coeffs: vec![Complex::new(R::zero(), R::zero()); degree - 1],
        })
    }

    /// Degree `d`.
    pub fn degree(&self) -> usize {
        self.coeffs.len() + 1
    }

    /// Low coefficients `c_0 .. c_{d-2}`.
    pub fn coefficients(&self) -> &[Complex<R>] {
        &self.coeffs
    }

    /// Evaluate `q(z)`.
    pub fn eval(&self, z: Complex<R>) -> Complex<R> {
        // Horner over [c_0, ..., c_{d-2}, 0, 1].
        let mut acc = Complex::new(R::one(), R::zero());
        acc = acc * z; // the zero coefficient of z^{d-1}
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Evaluate `q'(z)`.
    pub fn derivative_eval(&self, z: Complex<R>) -> Complex<R> {
        let d = self.degree();
        // q' has coefficients (j+1) c_{j+1} for z^j, leading d z^{d-1}.
        let mut acc = Complex::new(R::from_f64_lossy(d as f64), R::zero());
        // z^{d-2} coefficient of q' is (d-1) * 0 = 0.
        acc = acc * z;
        for j in (1..=d.saturating_sub(2)).rev() {
            let factor = R::from_f64_lossy(j as f64);
            acc = acc * z + self.coeffs[j] * factor;
        }
        acc
    }
}

/// Exact direction data for the sector structure at infinity: all angles
/// are rational multiples of pi, normalized into `[0, 2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StokesGeometry {
    degree: usize,
    rays: Vec<Ratio<i64>>,
    bounds: Vec<(Ratio<i64>, Ratio<i64>)>,
    bisectors: Vec<Ratio<i64>>,
}

/// Compute the exact sector geometry for a monic polynomial of the given
/// degree: `d + 2` distinguished rays at `2k/(d+2)` (in units of pi),
/// sectors around them bounded by `(2k -/+ 1)/(d+2)`, and the reading
/// directions `(2k+1)/(d+2)` between consecutive rays.
pub fn stokes_geometry(degree: usize) -> Result<StokesGeometry, OdeError> {
    if degree == 0 {
        return Err(OdeError::ConfigurationInvalid(
            "degree must be at least 1".into(),
        ));
    }
    let n = i64::try_from(degree).map_err(|_| {
        OdeError::ConfigurationInvalid("degree too large".into())
    })? + 2;
    let wrap = |units: i64| -> Ratio<i64> {
        // `units` counts multiples of pi/n; normalize into [0, 2 pi).
        Ratio::new(units.mod_floor(&(2 * n)), n)
    };
    let mut rays = Vec::new();
    let mut bounds = Vec::new();
    let mut bisectors = Vec::new();
    for k in 0..n {
        rays.push(wrap(2 * k));
        bounds.push((wrap(2 * k - 1), wrap(2 * k + 1)));
        bisectors.push(wrap(2 * k + 1));
    }
    Ok(StokesGeometry {
        degree,
        rays,
        bounds,
        bisectors,
    })
}

impl StokesGeometry {
    /// The polynomial degree this geometry belongs to.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Number of sectors (and of distinguished rays): `d + 2`.
    pub fn sector_count(&self) -> usize {
        self.degree + 2
    }

    /// Distinguished ray directions, in units of pi, in `[0, 2)`.
    pub fn rays(&self) -> &[Ratio<i64>] {
        &self.rays
    }

    /// Sector bounds around each distinguished ray, in units of pi.
    pub fn sector_bounds(&self) -> &[(Ratio<i64>, Ratio<i64>)] {
        &self.bounds
    }

    /// Reading directions between consecutive distinguished rays, in units
    /// of pi: the `k`-th tip is read along `bisectors()[k]`.
    pub fn bisectors(&self) -> &[Ratio<i64>] {
        &self.bisectors
    }

    /// The `k`-th reading direction as a floating angle in radians.
    pub fn bisector_angle<R: Real>(&self, k: usize) -> R {
        ratio_angle(self.bisectors[k])
    }
}

/// Convert an exact multiple of pi to a floating angle in radians.
pub fn ratio_angle<R: Real>(units_of_pi: Ratio<i64>) -> R {
    R::PI() * R::from_f64_lossy(*units_of_pi.numer() as f64)
        / R::from_f64_lossy(*units_of_pi.denom() as f64)
}

/// Tuning knobs for the developing-map engine.
#[derive(Debug, Clone, Copy)]
pub struct EngineConfig<R: Real> {
    /// Absolute integration tolerance.
    pub atol: R,
    /// Relative integration tolerance.
    pub rtol: R,
    /// Radius of the first tip sample on each reading ray.
    pub first_radius: R,
    /// Geometric factor between consecutive sample radii (> 1).
    pub radius_factor: R,
    /// Minimum number of samples per ray before convergence is declared.
    pub min_samples: usize,
    /// Maximum number of samples per ray.
    pub max_samples: usize,
    /// Chordal increment below which the tip is accepted.
    pub tip_tol: R,
    /// Seed radius for asymptotic (subdominant) seeding.
    pub seed_radius: R,
    /// Maximum tolerated Wronskian drift on the calibration segment.
    pub wronskian_gate: R,
}

impl<R: Real> Default for EngineConfig<R> {
    fn default() -> Self {
        let c = R::from_f64_lossy;
        Self {
            atol: c(1e-12),
            rtol: c(1e-12),
            first_radius: c(4.0),
            radius_factor: c(1.5),
            min_samples: 4,
            max_samples: 60,
            tip_tol: c(1e-10),
            seed_radius: c(8.0),
            wronskian_gate: c(1e-6),
        }
    }
}

/// The asymptotic tips of a developing map, with reported errors.
#[derive(Debug, Clone)]
pub struct TipsOutcome<R: Real> {
    /// One tip per sector, ordered by reading direction.
    pub tips: Vec<SpherePoint<R>>,
    /// Reported error per tip: the last chordal increment, floored at the
    /// transport-accuracy scale (a small multiple of the integration
    /// tolerance plus machine epsilon), since a tip can never be more
    /// accurate than the frame transport that produced it.
    pub errors: Vec<R>,
    /// Radius at which each ray converged.
    pub final_radii: Vec<R>,
    /// Worst Wronskian drift measured on the calibration segments.
    pub wronskian_drift: R,
}

impl<R: Real> TipsOutcome<R> {
    /// Largest reported tip error.
    pub fn max_error(&self) -> R {
        self.errors.iter().copied().fold(R::zero(), R::max)
    }

    /// Package the tips for the grafting inverse.
    pub fn tip_configuration(&self) -> Result<TipConfiguration<R>, GraftError> {
        TipConfiguration::new(self.tips.clone())
    }
}

/// A subdominant solution transported to the origin, up to the recorded
/// logarithmic scale.
#[derive(Debug, Clone, Copy)]
pub struct SubdominantSolution<R: Real> {
    /// Rescaled value at the origin.
    pub value: Complex<R>,
    /// Rescaled derivative at the origin.
    pub derivative: Complex<R>,
    /// Natural log of the factor divided out; the true solution is
    /// `e^{log_scale}` times the stored values.
    pub log_scale: R,
    /// The sector it is subdominant in.
    pub sector: usize,
}

/// The developing map of `u'' + q u / 2 = 0`, normalized at the origin.
///
/// The fundamental frame is `u0(0) = 1, u0'(0) = 0, u1(0) = 0, u1'(0) = 1`
/// and the map is `f = u1 / u0`, so `f(0) = 0` and `f'(0) = 1`.
#[derive(Debug, Clone)]
pub struct DevelopingMap<R: Real> {
    q: PolynomialQD<R>,
    config: EngineConfig<R>,
    geometry: StokesGeometry,
}

fn frame_wronskian<R: Real>(y: &[Complex<R>; 4]) -> Complex<R> {
    y[0] * y[3] - y[2] * y[1]
}

/// `|log(W e^{2 kappa})|` against the exact value 1, computed in log space
/// so huge scales cannot overflow.
fn wronskian_log_drift<R: Real>(w: Complex<R>, kappa: R) -> R {
    let mag = w.norm().ln() + kappa + kappa;
    let arg = w.arg();
    (mag * mag + arg * arg).sqrt()
}

/// Radius at which Wronskian drift is measured: keeps the solution growth
/// mild enough (about e^8) that the Wronskian is still numerically visible.
fn wronskian_radius<R: Real>(degree: usize) -> R {
    let d = degree as f64;
    let r = (8.0 * (d + 2.0) / std::f64::consts::SQRT_2).powf(2.0 / (d + 2.0));
    R::from_f64_lossy(r)
}

impl<R: Real> DevelopingMap<R> {
    /// Create an engine for the given polynomial.
    pub fn new(q: PolynomialQD<R>, config: EngineConfig<R>) -> Result<Self, OdeError> {
        let invalid = |msg: &str| OdeError::ConfigurationInvalid(msg.into());
        if !(config.atol > R::zero()) || !(config.rtol > R::zero()) {
            return Err(invalid("tolerances must be positive"));
        }
        if !(config.first_radius > R::zero()) {
            return Err(invalid("first radius must be positive"));
        }
        if !(config.radius_factor > R::one()) {
            return Err(invalid("radius factor must exceed 1"));
        }
        if config.min_samples < 2 || config.max_samples < config.min_samples {
            return Err(invalid("need at least two samples and max >= min"));
        }
        if !(config.tip_tol > R::zero()) || !(config.seed_radius > R::zero()) {
            return Err(invalid("tip tolerance and seed radius must be positive"));
        }
        if !(config.wronskian_gate > R::zero()) {
            return Err(invalid("wronskian gate must be positive"));
        }
        let geometry = stokes_geometry(q.degree())?;
        Ok(Self {
            q,
            config,
            geometry,
        })
    }

    /// The underlying polynomial.
    pub fn polynomial(&self) -> &PolynomialQD<R> {
        &self.q
    }

    /// The exact sector geometry.
    pub fn geometry(&self) -> &StokesGeometry {
        &self.geometry
    }

    /// The engine configuration.
    pub fn config(&self) -> &EngineConfig<R> {
        &self.config
    }

    fn frame_rhs(&self) -> impl Fn(Complex<R>, &[Complex<R>; 4]) -> [Complex<R>; 4] + '_ {
        let half = R::from_f64_lossy(0.5);
        move |z, y| {
            let p = self.q.eval(z) * half;
            [y[1], -(p * y[0]), y[3], -(p * y[2])]
        }
    }

    fn pair_rhs(&self) -> impl Fn(Complex<R>, &[Complex<R>; 2]) -> [Complex<R>; 2] + '_ {
        let half = R::from_f64_lossy(0.5);
        move |z, y| {
            let p = self.q.eval(z) * half;
            [y[1], -(p * y[0])]
        }
    }

    fn identity_frame() -> [Complex<R>; 4] {
        let zero = Complex::new(R::zero(), R::zero());
        let one = Complex::new(R::one(), R::zero());
        [one, zero, zero, one]
    }

    fn frame_value(state: &[Complex<R>; 4]) -> Result<SpherePoint<R>, OdeError> {
        SpherePoint::from_homogeneous(state[2], state[0]).map_err(|_| {
            OdeError::ConfigurationInvalid("solution frame degenerated".into())
        })
    }

    /// Evaluate the developing map at `z` by transporting the frame from
    /// the origin along a straight segment.
    pub fn evaluate(&self, z: Complex<R>) -> Result<SpherePoint<R>, OdeError> {
        let res = integrate(
            &self.frame_rhs(),
            &Path::Line {
                from: Complex::new(R::zero(), R::zero()),
                to: z,
            },
            Self::identity_frame(),
            R::zero(),
            self.config.atol,
            self.config.rtol,
        )?;
        Self::frame_value(&res.state)
    }

    /// Evaluate the developing map at `z`, requiring a finite value.
    pub fn evaluate_finite(&self, z: Complex<R>) -> Result<Complex<R>, OdeError> {
        self.evaluate(z)?.to_complex().ok_or(OdeError::PoleOnSample)
    }

    /// Sample the developing map at increasing radii along a ray.
    pub fn ray_samples(
        &self,
        angle: R,
        radii: &[R],
    ) -> Result<Vec<SpherePoint<R>>, OdeError> {
        if radii.is_empty() {
            return Ok(Vec::new());
        }
        if radii.windows(2).any(|w| w[1] <= w[0]) || radii[0] <= R::zero() {
            return Err(OdeError::ConfigurationInvalid(
                "radii must be positive and strictly increasing".into(),
            ));
        }
        let dir = Complex::from_polar(R::one(), angle);
        let rhs = self.frame_rhs();
        let mut out = Vec::with_capacity(radii.len());
        let mut state = Self::identity_frame();
        let mut kappa = R::zero();
        let mut prev = R::zero();
        for &r in radii {
            let res: Transported<R, 4> = integrate(
                &rhs,
                &Path::Line {
                    from: dir * prev,
                    to: dir * r,
                },
                state,
                kappa,
                self.config.atol,
                self.config.rtol,
            )?;
            state = res.state;
            kappa = res.log_scale;
            prev = r;
            out.push(Self::frame_value(&state)?);
        }
        Ok(out)
    }

    /// Compute all `d + 2` tips by outward transport along the reading
    /// directions, with Cauchy-style convergence control.
    ///
    /// The Wronskian of the frame is checked on an initial calibration
    /// segment of each ray (where the solutions have not yet grown so much
    /// that the Wronskian drowns in cancellation); drift beyond the
    /// configured gate is an error.
    pub fn tips(&self) -> Result<TipsOutcome<R>, OdeError> {
        let n = self.geometry.sector_count();
        let rhs = self.frame_rhs();
        let r_meas = wronskian_radius::<R>(self.q.degree()).min(self.config.first_radius);
        let error_floor = R::epsilon() * R::from_f64_lossy(64.0)
            + self.config.atol.max(self.config.rtol) * R::from_f64_lossy(50.0);
        let mut tips = Vec::with_capacity(n);
        let mut errors = Vec::with_capacity(n);
        let mut final_radii = Vec::with_capacity(n);
        let mut worst_drift = R::zero();
        for k in 0..n {
            let angle: R = self.geometry.bisector_angle(k);
            let dir = Complex::from_polar(R::one(), angle);
            // Calibration segment with Wronskian check.
            let mut res: Transported<R, 4> = integrate(
                &rhs,
                &Path::Line {
                    from: Complex::new(R::zero(), R::zero()),
                    to: dir * r_meas,
                },
                Self::identity_frame(),
                R::zero(),
                self.config.atol,
                self.config.rtol,
            )?;
            let drift = wronskian_log_drift(frame_wronskian(&res.state), res.log_scale);
            worst_drift = worst_drift.max(drift);
            if !(drift <= self.config.wronskian_gate) {
                return Err(OdeError::ExcessiveWronskianDrift {
                    drift: drift.to_f64().unwrap_or(f64::NAN),
                });
            }
            let mut r = r_meas;
            if self.config.first_radius > r_meas {
                res = integrate(
                    &rhs,
                    &Path::Line {
                        from: dir * r_meas,
                        to: dir * self.config.first_radius,
                    },
                    res.state,
                    res.log_scale,
                    self.config.atol,
                    self.config.rtol,
                )?;
                r = self.config.first_radius;
            }
            let mut samples = vec![Self::frame_value(&res.state)?];
            let mut converged = false;
            for _ in 1..self.config.max_samples {
                let r_next = r * self.config.radius_factor;
                res = integrate(
                    &rhs,
                    &Path::Line {
                        from: dir * r,
                        to: dir * r_next,
                    },
                    res.state,
                    res.log_scale,
                    self.config.atol,
                    self.config.rtol,
                )?;
                r = r_next;
                samples.push(Self::frame_value(&res.state)?);
                if samples.len() >= self.config.min_samples {
                    let m = samples.len();
                    let increment = samples[m - 1].chordal_distance(&samples[m - 2]);
                    if increment <= self.config.tip_tol {
                        tips.push(samples[m - 1]);
                        errors.push(increment.max(error_floor));
                        final_radii.push(r);
                        converged = true;
                        break;
                    }
                }
            }
            if !converged {
                return Err(OdeError::NoConvergence(k));
            }
        }
        Ok(TipsOutcome {
            tips,
            errors,
            final_radii,
            wronskian_drift: worst_drift,
        })
    }

    /// Seed the subdominant solution of sector `k` asymptotically at
    /// `seed_radius` on the reading direction and transport it to the
    /// origin.
    ///
    /// Inward transport is numerically benign for the subdominant branch:
    /// contamination by the dominant branch is suppressed by the ratio of
    /// their sizes at the seed point.
    pub fn subdominant_at_base(
        &self,
        k: usize,
        seed_radius: R,
    ) -> Result<SubdominantSolution<R>, OdeError> {
        let n = self.geometry.sector_count();
        if k >= n {
            return Err(OdeError::ConfigurationInvalid(format!(
                "sector index {k} out of range (have {n})"
            )));
        }
        if !(seed_radius > R::zero()) {
            return Err(OdeError::ConfigurationInvalid(
                "seed radius must be positive".into(),
            ));
        }
        let d = self.q.degree();
        let angle: R = self.geometry.bisector_angle(k);
        let z0 = Complex::from_polar(seed_radius, angle);
        let zd = z0.powu(d as u32);
        let ratio = self.q.eval(z0) / zd;
        let half = R::from_f64_lossy(0.5);
        if (ratio - Complex::new(R::one(), R::zero())).norm() > half {
            return Err(OdeError::SeedRadiusTooSmall {
                radius: seed_radius.to_f64().unwrap_or(f64::NAN),
            });
        }
        // sqrt(q/2) on the branch that makes the seeded solution decay
        // outward along this reading direction.
        let d_real = R::from_f64_lossy(d as f64);
        let half_power = Complex::from_polar(
            seed_radius.powf(d_real * half),
            angle * d_real * half,
        );
        let sign = if k.is_multiple_of(2) { -R::one() } else { R::one() };
        let i_over_sqrt2 = Complex::new(R::zero(), sign / R::from_f64_lossy(2.0).sqrt());
        let sqrt_q_half = i_over_sqrt2 * half_power * ratio.sqrt();
        let q0 = self.q.eval(z0);
        let correction = self.q.derivative_eval(z0) / (q0 * R::from_f64_lossy(4.0));
        let u = Complex::new(R::one(), R::zero());
        let du = -sqrt_q_half - correction;
        let res: Transported<R, 2> = integrate(
            &self.pair_rhs(),
            &Path::Line {
                from: z0,
                to: Complex::new(R::zero(), R::zero()),
            },
            [u, du],
            R::zero(),
            self.config.atol,
            self.config.rtol,
        )?;
        Ok(SubdominantSolution {
            value: res.state[0],
            derivative: res.state[1],
            log_scale: res.log_scale,
            sector: k,
        })
    }

    /// Independent route to the `k`-th tip: pair the base frame with the
    /// inwardly transported subdominant solution through the Wronskian.
    ///
    /// With the frame normalized at the origin the tip is the point with
    /// homogeneous coordinates `(-s(0), s'(0))` where `s` is the
    /// subdominant solution of sector `k`. Agreement with [`Self::tips`]
    /// cross-checks outward sampling against inward seeding.
    pub fn tip_from_subdominant(
        &self,
        k: usize,
        seed_radius: R,
    ) -> Result<SpherePoint<R>, OdeError> {
        let s = self.subdominant_at_base(k, seed_radius)?;
        SpherePoint::from_homogeneous(-s.value, s.derivative).map_err(|_| {
            OdeError::ConfigurationInvalid("subdominant solution vanished".into())
        })
    }

    /// Transport the frame once around a full circle of the given radius;
    /// the result should be the identity frame again (all solutions are
    /// entire), so the distance from the identity measures global
    /// integration fidelity.
    pub fn circle_monodromy_defect(&self, radius: R) -> Result<R, OdeError> {
        if !(radius > R::zero()) {
            return Err(OdeError::ConfigurationInvalid(
                "radius must be positive".into(),
            ));
        }
        let start = Complex::new(radius, R::zero());
        let res: Transported<R, 4> = integrate(
            &self.frame_rhs(),
            &Path::Line {
                from: Complex::new(R::zero(), R::zero()),
                to: start,
            },
            Self::identity_frame(),
            R::zero(),
            self.config.atol,
            self.config.rtol,
        )?;
        let around: Transported<R, 4> = integrate(
            &self.frame_rhs(),
            &Path::Arc {
                radius,
                from_angle: R::zero(),
                to_angle: R::PI() + R::PI(),
            },
            res.state,
            res.log_scale,
            self.config.atol,
            self.config.rtol,
        )?;
        let scale = (around.log_scale - res.log_scale).exp();
        let mut defect = R::zero();
        for i in 0..4 {
            defect = defect.max((around.state[i] * scale - res.state[i]).norm());
        }
        Ok(defect)
    }
}

/// Fit the rotational symmetry of a tip configuration: the map sending each
/// tip to the next (cyclically). Returns the fitted map and the worst
/// chordal residual over all consecutive pairs.
pub fn rotation_symmetry_fit<R: Real>(
    tips: &[SpherePoint<R>],
    tol: &Tolerance<R>,
) -> Result<(MoebiusMap<R>, R), MoebiusError> {
    if tips.len() < 4 {
        return Err(MoebiusError::DegenerateTriple);
    }
    let src = [tips[0], tips[1], tips[2]];
    let dst = [tips[1], tips[2], tips[3]];
    let map = map_from_triples(&src, &dst, tol)?;
    let mut residual = R::zero();
    for (k, tip) in tips.iter().enumerate() {
        let next = &tips[(k + 1) % tips.len()];
        residual = residual.max(map.apply(tip).chordal_distance(next));
    }
    Ok((map, residual))
}
