//! Classical phase-space observables and the data describing an oscillator
//! and its driving force.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64 as C64;

use crate::error::{PmechError, Result};
use crate::poly::Poly;

pub const DEFAULT_MAX_DEGREE: u32 = 8;

/// A polynomial observable `F(q, p)` with complex coefficients.
///
/// Variable 0 is `q`, variable 1 is `p`.
#[derive(Debug, Clone)]
pub struct SymbolPoly {
    poly: Poly<2>,
    max_degree: u32,
}

impl PartialEq for SymbolPoly {
    fn eq(&self, other: &Self) -> bool {
        self.poly == other.poly
    }
}

impl SymbolPoly {
    pub fn from_poly(poly: Poly<2>) -> Result<Self> {
        Self::with_max_degree(poly, DEFAULT_MAX_DEGREE)
    }

    pub fn with_max_degree(poly: Poly<2>, max_degree: u32) -> Result<Self> {
        let degree = poly.degree();
        if degree > max_degree {
            return Err(PmechError::DegreeLimit { degree, max: max_degree });
        }
        Ok(Self { poly, max_degree })
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), C64)>) -> Result<Self> {
        Self::from_poly(Poly::from_terms(terms.into_iter().map(|((i, j), c)| ([i, j], c))))
    }

    pub fn from_real_terms(terms: &[((u32, u32), f64)]) -> Result<Self> {
        Self::from_terms(terms.iter().map(|&(e, c)| (e, C64::new(c, 0.0))))
    }

    pub fn zero() -> Self {
        Self { poly: Poly::zero(), max_degree: DEFAULT_MAX_DEGREE }
    }

    pub fn constant(c: f64) -> Self {
        Self { poly: Poly::constant(C64::new(c, 0.0)), max_degree: DEFAULT_MAX_DEGREE }
    }

    pub fn q() -> Self {
        Self { poly: Poly::var(0), max_degree: DEFAULT_MAX_DEGREE }
    }

    pub fn p() -> Self {
        Self { poly: Poly::var(1), max_degree: DEFAULT_MAX_DEGREE }
    }

    /// `(m w^2 q^2 + p^2 / m) / 2`.
    pub fn oscillator_hamiltonian(params: &OscillatorParams) -> Self {
        let m = params.mass;
        let w = params.omega;
        Self::from_real_terms(&[((2, 0), 0.5 * m * w * w), ((0, 2), 0.5 / m)])
            .expect("degree 2 is always within the cap")
    }

    pub fn poly(&self) -> &Poly<2> {
        &self.poly
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn degree(&self) -> u32 {
        self.poly.degree()
    }

    pub fn coeff(&self, i: u32, j: u32) -> C64 {
        self.poly.coeff([i, j])
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), C64)> + '_ {
        self.poly.terms().map(|(e, c)| ((e[0], e[1]), *c))
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn scale(&self, s: C64) -> Self {
        Self { poly: self.poly.scale(s), max_degree: self.max_degree }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self { poly: &self.poly + &other.poly, max_degree: self.max_degree.max(other.max_degree) }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self { poly: &self.poly - &other.poly, max_degree: self.max_degree.max(other.max_degree) }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Self::with_max_degree(&self.poly * &other.poly, self.max_degree.max(other.max_degree))
    }

    pub fn d_dq(&self) -> Self {
        Self { poly: self.poly.derivative(0), max_degree: self.max_degree }
    }

    pub fn d_dp(&self) -> Self {
        Self { poly: self.poly.derivative(1), max_degree: self.max_degree }
    }
}

impl fmt::Display for SymbolPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((i, j), c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.im == 0.0 {
                write!(f, "{}", c.re)?;
            } else {
                write!(f, "({}{:+}i)", c.re, c.im)?;
            }
            match i {
                0 => {}
                1 => write!(f, "*q")?,
                _ => write!(f, "*q^{i}")?,
            }
            match j {
                0 => {}
                1 => write!(f, "*p")?,
                _ => write!(f, "*p^{j}")?,
            }
        }
        Ok(())
    }
}

/// Parses real polynomials such as `q^2 + p^2`, `0.5*q*p - 2`, `q2` or `1`.
impl FromStr for SymbolPoly {
    type Err = PmechError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| PmechError::InvalidParameter(format!("cannot parse observable {s:?}: {msg}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty"));
        }
        let mut terms = Vec::new();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'+' => (1.0, &rest[1..]),
                b'-' => (-1.0, &rest[1..]),
                _ => (1.0, rest),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let term = &body[..end];
            rest = &body[end..];
            if term.is_empty() {
                return Err(bad("dangling sign"));
            }
            let mut coeff = sign;
            let (mut i, mut j) = (0u32, 0u32);
            for factor in term.split('*') {
                let (base, exp) = match factor.split_once('^') {
                    Some((b, e)) => (b, e.parse::<u32>().map_err(|_| bad("bad exponent"))?),
                    None if factor.len() > 1 && (factor.starts_with('q') || factor.starts_with('p')) => {
                        (&factor[..1], factor[1..].parse::<u32>().map_err(|_| bad("bad exponent"))?)
                    }
                    None => (factor, 1),
                };
                match base {
                    "q" => i += exp,
                    "p" => j += exp,
                    num => {
                        let v: f64 = num.parse().map_err(|_| bad("bad coefficient"))?;
                        coeff *= v.powi(exp as i32);
                    }
                }
            }
            terms.push(((i, j), coeff));
        }
        Self::from_real_terms(&terms)
    }
}

/// `{F, G} = dF/dq dG/dp - dF/dp dG/dq`, exact.
pub fn poisson_bracket(f: &SymbolPoly, g: &SymbolPoly) -> Result<SymbolPoly> {
    let max = f.max_degree.max(g.max_degree);
    let a = &f.poly.derivative(0) * &g.poly.derivative(1);
    let b = &f.poly.derivative(1) * &g.poly.derivative(0);
    SymbolPoly::with_max_degree(&a - &b, max)
}

pub fn evaluate(f: &SymbolPoly, pt: PhasePoint) -> C64 {
    f.poly.eval(&[C64::new(pt.q, 0.0), C64::new(pt.p, 0.0)])
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhasePoint {
    pub q: f64,
    pub p: f64,
}

impl PhasePoint {
    pub fn new(q: f64, p: f64) -> Self {
        Self { q, p }
    }

    pub fn dist(&self, other: &PhasePoint) -> f64 {
        (self.q - other.q).hypot(self.p - other.p)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatorParams {
    pub omega: f64,
    pub mass: f64,
}

impl OscillatorParams {
    pub fn new(omega: f64, mass: f64) -> Result<Self> {
        if !(omega.is_finite() && omega > 0.0) {
            return Err(PmechError::InvalidParameter(format!("omega must be > 0, got {omega}")));
        }
        if !(mass.is_finite() && mass > 0.0) {
            return Err(PmechError::InvalidParameter(format!("mass must be > 0, got {mass}")));
        }
        Ok(Self { omega, mass })
    }

    pub fn unit() -> Self {
        Self { omega: 1.0, mass: 1.0 }
    }

    /// The product `w m` that sets the Gaussian widths.
    pub fn omega_m(&self) -> f64 {
        self.omega * self.mass
    }
}

/// A compactly supported force sampled on a uniform grid over `[t0, t1]`.
///
/// Between samples the force is the linear interpolant; outside the support
/// it vanishes.
#[derive(Debug, Clone, PartialEq)]
pub struct Pulse {
    t0: f64,
    t1: f64,
    samples: Vec<f64>,
}

impl Pulse {
    pub fn new(t0: f64, t1: f64, samples: Vec<f64>) -> Result<Self> {
        if !(t0.is_finite() && t1.is_finite() && t0 < t1) {
            return Err(PmechError::InvalidParameter(format!("pulse support needs t0 < t1, got [{t0}, {t1}]")));
        }
        if samples.len() < 2 {
            return Err(PmechError::InvalidParameter("pulse needs at least two samples".into()));
        }
        if samples.iter().any(|s| !s.is_finite()) {
            return Err(PmechError::InvalidParameter("pulse samples must be finite".into()));
        }
        Ok(Self { t0, t1, samples })
    }

    /// `amplitude * sin^2(pi (t - t0) / (t1 - t0))` sampled at `n` points.
    pub fn bump(t0: f64, t1: f64, amplitude: f64, n: usize) -> Result<Self> {
        let n = n.max(2);
        let samples = (0..n)
            .map(|k| {
                let u = k as f64 / (n - 1) as f64;
                amplitude * (std::f64::consts::PI * u).sin().powi(2)
            })
            .collect();
        Self::new(t0, t1, samples)
    }

    pub fn t0(&self) -> f64 {
        self.t0
    }

    pub fn t1(&self) -> f64 {
        self.t1
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn spacing(&self) -> f64 {
        (self.t1 - self.t0) / (self.samples.len() - 1) as f64
    }

    pub fn sample_time(&self, k: usize) -> f64 {
        if k + 1 == self.samples.len() {
            self.t1
        } else {
            self.t0 + k as f64 * self.spacing()
        }
    }

    pub fn value(&self, t: f64) -> f64 {
        if t < self.t0 || t > self.t1 {
            return 0.0;
        }
        let n = self.samples.len();
        let x = (t - self.t0) / self.spacing();
        let k = (x.floor() as usize).min(n - 2);
        let frac = x - k as f64;
        self.samples[k] * (1.0 - frac) + self.samples[k + 1] * frac
    }

    /// Interior kinks of the interpolant and the support ends.
    pub fn breakpoints(&self) -> Vec<f64> {
        (0..self.samples.len()).map(|k| self.sample_time(k)).collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ForceProfile {
    Zero,
    /// `z0 cos(omega t)`.
    Cosine { z0: f64, omega: f64 },
    Pulse(Pulse),
}

impl ForceProfile {
    pub fn cosine(z0: f64, omega: f64) -> Result<Self> {
        if !(z0.is_finite() && omega.is_finite() && omega > 0.0) {
            return Err(PmechError::InvalidParameter(format!(
                "cosine force needs finite Z0 and Omega > 0, got Z0={z0}, Omega={omega}"
            )));
        }
        Ok(Self::Cosine { z0, omega })
    }

    pub fn value(&self, t: f64) -> f64 {
        match self {
            Self::Zero => 0.0,
            Self::Cosine { z0, omega } => z0 * (omega * t).cos(),
            Self::Pulse(p) => p.value(t),
        }
    }

    /// Finite support, if any. `Zero` has empty support.
    pub fn support(&self) -> Option<(f64, f64)> {
        match self {
            Self::Zero => Some((0.0, 0.0)),
            Self::Cosine { .. } => None,
            Self::Pulse(p) => Some((p.t0, p.t1)),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Self::Zero => true,
            Self::Cosine { z0, .. } => *z0 == 0.0,
            Self::Pulse(p) => p.samples.iter().all(|s| *s == 0.0),
        }
    }
}
