//! Constrained equilibrium measures on [−1, 1] and on the unit circle.
//!
//! Problem I: minimize the logarithmic energy over probability measures on
//! [−1, 1] subject to μ([β, 1]) = q. The minimizer has density
//!
//! ```text
//!     dμ(x) = sqrt|x − α| / (π sqrt|(x+1)(x−β)(x−1)|) dx
//! ```
//!
//! supported on [−1, α] ∪ [β, 1] when q exceeds the arcsine mass arccos(β)/π
//! (case I, α ≤ β), and on [−1, β] ∪ [α, 1] in the opposite case (case II,
//! α ≥ β); at equality the constraint is inactive and μ is the arcsine
//! measure. The free boundary α is fixed by the mass equation
//! ∫_{−1}^{α} dμ = 1 − q (case I) or ∫_{−1}^{β} dμ = 1 − q (case II).
//!
//! Problem II pins the mass q on the symmetric arc A_θ of the unit circle.
//! Its solution is the same root problem at β = cos(θ/2): the circle density
//! is sqrt|cos ψ − α| / (2π sqrt|cos ψ − cos(θ/2)|), and pushing the circle
//! measure forward under cos recovers the interval measure.

mod potential;

pub use potential::FrostmanReport;

use crate::numerics::{self, convergent_singular};
use crate::{Error, Result};
use serde::Serialize;
use std::f64::consts::{FRAC_PI_2, PI};

/// Tie tolerance on |q − arccos(β)/π| for the degenerate (arcsine) case.
pub const DEGENERATE_TOL: f64 = 1e-14;
/// Mass checks on solved measures must hold to this tolerance.
pub const MASS_TOL: f64 = 1e-8;
/// The α bracket is inset by this much from its singular endpoints.
const BRACKET_INSET: f64 = 1e-13;

/// Mass constraint μ([β, 1]) = q on the interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntervalConstraint {
    pub beta: f64,
    pub q: f64,
}

impl IntervalConstraint {
    pub fn new(beta: f64, q: f64) -> Result<Self> {
        if !(-1.0 < beta && beta < 1.0) {
            return Err(Error::Domain(format!("beta = {beta} not in (-1, 1)")));
        }
        if !(0.0 < q && q < 1.0) {
            return Err(Error::Domain(format!("q = {q} not in (0, 1)")));
        }
        Ok(IntervalConstraint { beta, q })
    }
}

/// Mass constraint ν(A_θ) = q on the circle, A_θ = {−θ/2 ≤ arg z ≤ θ/2}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleConstraint {
    pub theta: f64,
    pub q: f64,
}

impl CircleConstraint {
    pub fn new(theta: f64, q: f64) -> Result<Self> {
        if !(0.0 < theta && theta < 2.0 * PI) {
            return Err(Error::Domain(format!("theta = {theta} not in (0, 2*pi)")));
        }
        if !(0.0 < q && q < 1.0) {
            return Err(Error::Domain(format!("q = {q} not in (0, 1)")));
        }
        Ok(CircleConstraint { theta, q })
    }

    /// The equivalent interval constraint at β = cos(θ/2).
    pub fn pushforward(&self) -> IntervalConstraint {
        IntervalConstraint {
            beta: (self.theta / 2.0).cos(),
            q: self.q,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseTag {
    CaseI,
    CaseII,
    Degenerate,
}

/// One support interval (in x for interval measures, in the angle ψ for
/// circle measures) with the algebraic exponent at each endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SupportComponent {
    pub left: f64,
    pub right: f64,
    pub exponent_left: f64,
    pub exponent_right: f64,
}

#[derive(Debug, Clone)]
pub enum Domain {
    Interval(IntervalConstraint),
    Circle {
        constraint: CircleConstraint,
        /// The interval measure obtained by pushing forward under cos.
        pushforward: Box<EquilibriumMeasure>,
    },
}

/// A solved constrained minimizer.
#[derive(Debug, Clone)]
pub struct EquilibriumMeasure {
    domain: Domain,
    case: CaseTag,
    alpha: f64,
    support: Vec<SupportComponent>,
    component_masses: Vec<f64>,
}

/// Case I iff q > arccos(β)/π, case II iff q < arccos(β)/π, degenerate at
/// equality within [`DEGENERATE_TOL`].
pub fn classify_case(c: &IntervalConstraint) -> CaseTag {
    let threshold = c.beta.acos() / PI;
    if (c.q - threshold).abs() <= DEGENERATE_TOL {
        CaseTag::Degenerate
    } else if c.q > threshold {
        CaseTag::CaseI
    } else {
        CaseTag::CaseII
    }
}

/// Mass of [−1, α] under the case-I density, as a function of α.
fn mass_left_case_i(alpha: f64, beta: f64) -> Result<f64> {
    let f = move |x: f64| 1.0 / (PI * ((beta - x) * (1.0 - x)).sqrt());
    convergent_singular(f, -1.0, alpha, -0.5, 0.5, 1e-12, 16)
}

/// Mass of [−1, β] under the case-II density, as a function of α.
fn mass_left_case_ii(alpha: f64, beta: f64) -> Result<f64> {
    let f = move |x: f64| (alpha - x).max(0.0).sqrt() / (PI * (1.0 - x).sqrt());
    convergent_singular(f, -1.0, beta, -0.5, -0.5, 1e-12, 16)
}

/// Left-hand mass of the α-equation minus its target 1 − q.
///
/// Continuous and strictly increasing in α on the case-appropriate bracket:
/// (−1, β) in case I, (β, 1) in case II.
pub fn mass_deficit(alpha: f64, c: &IntervalConstraint) -> Result<f64> {
    let target = 1.0 - c.q;
    match classify_case(c) {
        CaseTag::CaseI => {
            if !(-1.0 < alpha && alpha < c.beta) {
                return Err(Error::Domain(format!(
                    "case I needs alpha in (-1, beta), got {alpha}"
                )));
            }
            Ok(mass_left_case_i(alpha, c.beta)? - target)
        }
        CaseTag::CaseII => {
            if !(c.beta < alpha && alpha < 1.0) {
                return Err(Error::Domain(format!(
                    "case II needs alpha in (beta, 1), got {alpha}"
                )));
            }
            Ok(mass_left_case_ii(alpha, c.beta)? - target)
        }
        CaseTag::Degenerate => {
            // The arcsine case has no free boundary; the left mass is the
            // closed-form arcsine mass of [-1, alpha].
            Ok((alpha.asin() + FRAC_PI_2) / PI - target)
        }
    }
}

/// Solves the α-equation; returns β in the degenerate case.
///
/// Next to α = β the mass integrand develops a boundary layer of width
/// β − α that no fixed quadrature resolves, but the deficit limit there is
/// known in closed form (the arcsine mass puts q − arccos(β)/π on the
/// constrained side), so the bracket endpoints use the analytic limit.
pub fn solve_alpha_interval(c: &IntervalConstraint) -> Result<f64> {
    let threshold = c.beta.acos() / PI;
    let at_beta = c.q - threshold;
    match classify_case(c) {
        CaseTag::Degenerate => Ok(c.beta),
        CaseTag::CaseI => {
            let lo = -1.0 + BRACKET_INSET;
            let hi = c.beta - BRACKET_INSET;
            let layer = c.beta - 1e-5;
            numerics::find_root_monotone(
                |a| {
                    if a >= layer {
                        at_beta
                    } else {
                        mass_deficit(a, c).expect("bracket stays inside the case-I domain")
                    }
                },
                lo,
                hi,
                numerics::ROOT_TOL,
            )
        }
        CaseTag::CaseII => {
            let lo = c.beta + BRACKET_INSET;
            let hi = 1.0 - BRACKET_INSET;
            let layer = c.beta + 1e-5;
            numerics::find_root_monotone(
                |a| {
                    if a <= layer {
                        at_beta
                    } else {
                        mass_deficit(a, c).expect("bracket stays inside the case-II domain")
                    }
                },
                lo,
                hi,
                numerics::ROOT_TOL,
            )
        }
    }
}

impl EquilibriumMeasure {
    /// Solves Problem I for the given constraint.
    pub fn interval(c: IntervalConstraint) -> Result<Self> {
        IntervalConstraint::new(c.beta, c.q)?;
        let case = classify_case(&c);
        let alpha = solve_alpha_interval(&c)?;
        let support = match case {
            CaseTag::Degenerate => vec![SupportComponent {
                left: -1.0,
                right: 1.0,
                exponent_left: -0.5,
                exponent_right: -0.5,
            }],
            CaseTag::CaseI => vec![
                SupportComponent {
                    left: -1.0,
                    right: alpha,
                    exponent_left: -0.5,
                    exponent_right: 0.5,
                },
                SupportComponent {
                    left: c.beta,
                    right: 1.0,
                    exponent_left: -0.5,
                    exponent_right: -0.5,
                },
            ],
            CaseTag::CaseII => vec![
                SupportComponent {
                    left: -1.0,
                    right: c.beta,
                    exponent_left: -0.5,
                    exponent_right: -0.5,
                },
                SupportComponent {
                    left: alpha,
                    right: 1.0,
                    exponent_left: 0.5,
                    exponent_right: -0.5,
                },
            ],
        };
        let mut mu = EquilibriumMeasure {
            domain: Domain::Interval(c),
            case,
            alpha,
            support,
            component_masses: Vec::new(),
        };
        mu.component_masses = mu
            .support
            .iter()
            .enumerate()
            .map(|(i, comp)| mu.component_mass(i, comp))
            .collect::<Result<Vec<f64>>>()?;
        mu.verify_masses(c.q)?;
        Ok(mu)
    }

    /// Solves Problem II; the circle measure shares α with the interval
    /// problem at β = cos(θ/2).
    pub fn circle(c: CircleConstraint) -> Result<Self> {
        CircleConstraint::new(c.theta, c.q)?;
        let inner = EquilibriumMeasure::interval(c.pushforward())?;
        let alpha = inner.alpha;
        let case = inner.case;
        let half = c.theta / 2.0;
        let support = match case {
            CaseTag::Degenerate => vec![SupportComponent {
                left: -PI,
                right: PI,
                exponent_left: 0.0,
                exponent_right: 0.0,
            }],
            CaseTag::CaseI => {
                let psi1 = alpha.acos();
                vec![
                    SupportComponent {
                        left: -half,
                        right: half,
                        exponent_left: -0.5,
                        exponent_right: -0.5,
                    },
                    SupportComponent {
                        left: psi1,
                        right: PI,
                        exponent_left: 0.5,
                        exponent_right: 0.0,
                    },
                    SupportComponent {
                        left: -PI,
                        right: -psi1,
                        exponent_left: 0.0,
                        exponent_right: 0.5,
                    },
                ]
            }
            CaseTag::CaseII => {
                let psi1 = alpha.acos();
                vec![
                    SupportComponent {
                        left: -psi1,
                        right: psi1,
                        exponent_left: 0.5,
                        exponent_right: 0.5,
                    },
                    SupportComponent {
                        left: half,
                        right: PI,
                        exponent_left: -0.5,
                        exponent_right: 0.0,
                    },
                    SupportComponent {
                        left: -PI,
                        right: -half,
                        exponent_left: 0.0,
                        exponent_right: -0.5,
                    },
                ]
            }
        };
        let mut nu = EquilibriumMeasure {
            domain: Domain::Circle {
                constraint: c,
                pushforward: Box::new(inner),
            },
            case,
            alpha,
            support,
            component_masses: Vec::new(),
        };
        nu.component_masses = nu
            .support
            .iter()
            .enumerate()
            .map(|(i, comp)| nu.component_mass(i, comp))
            .collect::<Result<Vec<f64>>>()?;
        nu.verify_masses(c.q)?;
        Ok(nu)
    }

    pub fn case(&self) -> CaseTag {
        self.case
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn support(&self) -> &[SupportComponent] {
        &self.support
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn is_circle(&self) -> bool {
        matches!(self.domain, Domain::Circle { .. })
    }

    /// The interval measure underlying a circle measure (pushforward under cos).
    pub fn pushforward(&self) -> Option<&EquilibriumMeasure> {
        match &self.domain {
            Domain::Circle { pushforward, .. } => Some(pushforward),
            Domain::Interval(_) => None,
        }
    }

    pub fn component_masses(&self) -> &[f64] {
        &self.component_masses
    }

    pub fn total_mass(&self) -> f64 {
        self.component_masses.iter().sum()
    }

    /// Mass of the constrained set: [β, 1] or the arc A_θ.
    pub fn constrained_mass(&self) -> f64 {
        match (&self.domain, self.case) {
            (Domain::Interval(c), CaseTag::Degenerate) => c.beta.acos() / PI,
            (Domain::Interval(_), CaseTag::CaseI) => self.component_masses[1],
            (Domain::Interval(_), CaseTag::CaseII) => self.component_masses[1],
            (Domain::Circle { constraint, .. }, CaseTag::Degenerate) => {
                constraint.theta / (2.0 * PI)
            }
            (Domain::Circle { .. }, CaseTag::CaseI) => self.component_masses[0],
            (Domain::Circle { .. }, CaseTag::CaseII) => self.component_masses[0],
        }
    }

    fn verify_masses(&self, q: f64) -> Result<()> {
        let total = self.total_mass();
        let constrained = self.constrained_mass();
        if (total - 1.0).abs() > MASS_TOL || (constrained - q).abs() > MASS_TOL {
            return Err(Error::Unconverged {
                q,
                detail: format!(
                    "mass check failed: total = {total:.12}, constrained = {constrained:.12}"
                ),
            });
        }
        Ok(())
    }

    /// Density dμ/dx (interval) or dν/dψ (circle); exactly 0 off support.
    pub fn density(&self, coord: f64) -> f64 {
        let x = self.canonical_coord(coord);
        let Some(idx) = self.component_index(x) else {
            return 0.0;
        };
        match &self.domain {
            Domain::Interval(c) => interval_density(x, self.alpha, c.beta, self.case),
            Domain::Circle { constraint, .. } => {
                let _ = idx;
                circle_density(x, self.alpha, constraint.theta, self.case)
            }
        }
    }

    /// Logarithmic potential U(z) = ∫ log(1/|z−ζ|) dμ(ζ).
    ///
    /// For interval measures `coord` is a point of the real line; for circle
    /// measures it is the angle of a point on the circle.
    pub fn potential(&self, coord: f64) -> Result<f64> {
        match &self.domain {
            Domain::Interval(_) => potential::interval_potential(self, coord),
            Domain::Circle { pushforward, .. } => {
                // Pairing ψ with −ψ gives |e^{iψ0}−e^{iψ}||e^{iψ0}−e^{−iψ}| =
                // 2|cos ψ0 − cos ψ|, so the circle potential is an exact
                // transform of the interval one.
                let x0 = self.canonical_coord(coord).cos();
                Ok((potential::interval_potential(pushforward, x0)? - std::f64::consts::LN_2)
                    / 2.0)
            }
        }
    }

    /// Potential at a point of the plane (interval measures only).
    pub fn potential_plane(&self, re: f64, im: f64) -> Result<f64> {
        match &self.domain {
            Domain::Interval(_) => potential::interval_potential_plane(self, re, im),
            Domain::Circle { .. } => Err(Error::Domain(
                "plane potential is defined for interval measures; circle measures take an angle"
                    .into(),
            )),
        }
    }

    /// Per-component potential constancy, gap slack, and the Frostman
    /// constants (F₁, F₂).
    pub fn frostman_residuals(&self, samples_per_component: usize) -> Result<FrostmanReport> {
        potential::frostman_residuals(self, samples_per_component)
    }

    /// Cumulative distribution from the left end of the domain
    /// (−1 on the interval, angle −π on the circle).
    pub fn cdf(&self, coord: f64) -> Result<f64> {
        // The circle CDF is anchored at the branch point: angles are taken
        // literally in [−π, π], not wrapped.
        let x = match self.domain {
            Domain::Interval(_) => coord,
            Domain::Circle { .. } => {
                if coord <= -PI {
                    return Ok(0.0);
                }
                if coord >= PI {
                    return Ok(self.total_mass());
                }
                coord
            }
        };
        let mut acc = 0.0;
        for (i, comp) in self.support.iter().enumerate() {
            if x >= comp.right {
                acc += self.component_masses[i];
            } else if x > comp.left {
                acc += self.partial_component_mass(i, comp, x)?;
            }
        }
        Ok(acc)
    }

    /// Wraps circle angles into [−π, π); identity for interval measures.
    fn canonical_coord(&self, coord: f64) -> f64 {
        match self.domain {
            Domain::Interval(_) => coord,
            Domain::Circle { .. } => {
                let two_pi = 2.0 * PI;
                let mut p = coord.rem_euclid(two_pi);
                if p >= PI {
                    p -= two_pi;
                }
                p
            }
        }
    }

    fn component_index(&self, x: f64) -> Option<usize> {
        self.support
            .iter()
            .position(|c| x >= c.left && x <= c.right)
    }

    /// The density with the tagged endpoint factors divided out; smooth and
    /// strictly positive on the closed component.
    pub(crate) fn smooth_part(&self, comp: usize, x: f64) -> f64 {
        match &self.domain {
            Domain::Interval(c) => {
                interval_smooth_part(comp, x, self.alpha, c.beta, self.case)
            }
            Domain::Circle { constraint, .. } => {
                circle_smooth_part(comp, x, self.alpha, constraint.theta, self.case)
            }
        }
    }

    fn component_mass(&self, idx: usize, comp: &SupportComponent) -> Result<f64> {
        convergent_singular(
            |x| self.smooth_part(idx, x),
            comp.left,
            comp.right,
            comp.exponent_left,
            comp.exponent_right,
            1e-12,
            16,
        )
    }

    fn partial_component_mass(&self, idx: usize, comp: &SupportComponent, upto: f64) -> Result<f64> {
        // The cut at `upto` is interior, so the right factor is smooth there.
        let eb = comp.exponent_right;
        let right = comp.right;
        convergent_singular(
            |x| self.smooth_part(idx, x) * (right - x).powf(eb),
            comp.left,
            upto,
            comp.exponent_left,
            0.0,
            1e-11,
            32,
        )
    }
}

fn interval_density(x: f64, alpha: f64, beta: f64, case: CaseTag) -> f64 {
    if case == CaseTag::Degenerate {
        return 1.0 / (PI * (1.0 - x * x).sqrt());
    }
    let num = (x - alpha).abs().sqrt();
    let den = PI * ((x + 1.0).abs() * (x - beta).abs() * (x - 1.0).abs()).sqrt();
    num / den
}

fn circle_density(psi: f64, alpha: f64, theta: f64, case: CaseTag) -> f64 {
    if case == CaseTag::Degenerate {
        return 1.0 / (2.0 * PI);
    }
    let c = psi.cos();
    let beta = (theta / 2.0).cos();
    (c - alpha).abs().sqrt() / (2.0 * PI * (c - beta).abs().sqrt())
}

fn interval_smooth_part(comp: usize, x: f64, alpha: f64, beta: f64, case: CaseTag) -> f64 {
    match (case, comp) {
        (CaseTag::Degenerate, _) => 1.0 / PI,
        // [-1, alpha]: (x+1)^{-1/2} (alpha-x)^{+1/2} left in the rule
        (CaseTag::CaseI, 0) => 1.0 / (PI * ((beta - x) * (1.0 - x)).sqrt()),
        // [beta, 1]: both endpoints -1/2
        (CaseTag::CaseI, 1) => (x - alpha).max(0.0).sqrt() / (PI * (x + 1.0).sqrt()),
        // [-1, beta]: both endpoints -1/2
        (CaseTag::CaseII, 0) => (alpha - x).max(0.0).sqrt() / (PI * (1.0 - x).sqrt()),
        // [alpha, 1]: (x-alpha)^{+1/2} (1-x)^{-1/2}
        (CaseTag::CaseII, 1) => 1.0 / (PI * ((x + 1.0) * (x - beta)).sqrt()),
        _ => unreachable!("interval measures have at most two components"),
    }
}

/// |2 sin(u/2)/u| extended by 1 at u = 0.
fn sinc_half(u: f64) -> f64 {
    if u.abs() < 1e-8 {
        1.0 - u * u / 24.0
    } else {
        (2.0 * (u / 2.0).sin() / u).abs()
    }
}

/// |cos ψ − cos φ| = |ψ−φ|·|ψ+φ|·sinc_half(ψ−φ)·sinc_half(ψ+φ)/2 lets the
/// angle-space smooth parts divide out their endpoint roots exactly.
fn circle_smooth_part(comp: usize, psi: f64, alpha: f64, theta: f64, case: CaseTag) -> f64 {
    let half = theta / 2.0;
    let beta = half.cos();
    let two_pi_inv = 1.0 / (2.0 * PI);
    match (case, comp) {
        (CaseTag::Degenerate, _) => two_pi_inv,
        // Arc [-θ/2, θ/2]: hard edges at ±θ/2.
        (CaseTag::CaseI, 0) => {
            let num = (psi.cos() - alpha).abs().sqrt();
            let den = (0.5 * sinc_half(psi - half) * sinc_half(psi + half)).sqrt();
            two_pi_inv * num / den
        }
        // Far arcs [ψ1, π] and [-π, -ψ1]: soft edge at ±ψ1.
        (CaseTag::CaseI, 1) | (CaseTag::CaseI, 2) => {
            let a = psi.abs();
            let psi1 = alpha.acos();
            let num =
                ((a + psi1) * sinc_half(a - psi1) * sinc_half(a + psi1) * 0.5).sqrt();
            let den = (beta - psi.cos()).sqrt();
            two_pi_inv * num / den
        }
        // Central arc [-ψ1, ψ1]: soft edges at ±ψ1.
        (CaseTag::CaseII, 0) => {
            let psi1 = alpha.acos();
            let num = (0.5 * sinc_half(psi - psi1) * sinc_half(psi + psi1)).sqrt();
            let den = (psi.cos() - beta).sqrt();
            two_pi_inv * num / den
        }
        // Complement arcs [θ/2, π] and [-π, -θ/2]: hard edge at ±θ/2.
        (CaseTag::CaseII, 1) | (CaseTag::CaseII, 2) => {
            let a = psi.abs();
            let num = (alpha - psi.cos()).abs().sqrt();
            let den = ((a + half) * sinc_half(a - half) * sinc_half(a + half) * 0.5).sqrt();
            two_pi_inv * num / den
        }
        _ => unreachable!("circle measures have at most three components"),
    }
}
