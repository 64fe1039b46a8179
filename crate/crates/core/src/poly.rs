//! Sparse multivariate polynomials with complex coefficients.
//!
//! `Poly<N>` is the polynomial factor of every Gaussian-polynomial function and
//! the storage behind classical symbols. Exponent vectors are the keys; zero
//! coefficients are never stored.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64 as C64;

#[derive(Debug, Clone, PartialEq)]
pub struct Poly<const N: usize> {
    terms: BTreeMap<[u32; N], C64>,
}

impl<const N: usize> Default for Poly<N> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<const N: usize> Poly<N> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn constant(c: C64) -> Self {
        Self::monomial([0; N], c)
    }

    pub fn one() -> Self {
        Self::constant(C64::new(1.0, 0.0))
    }

    /// The coordinate function `x_i`.
    pub fn var(i: usize) -> Self {
        let mut e = [0; N];
        e[i] = 1;
        Self::monomial(e, C64::new(1.0, 0.0))
    }

    pub fn monomial(exps: [u32; N], c: C64) -> Self {
        let mut p = Self::zero();
        p.add_term(exps, c);
        p
    }

    /// Affine polynomial `c0 + sum_i c[i] x_i`.
    pub fn linear(c0: C64, c: [C64; N]) -> Self {
        let mut p = Self::constant(c0);
        for (i, ci) in c.into_iter().enumerate() {
            let mut e = [0; N];
            e[i] = 1;
            p.add_term(e, ci);
        }
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ([u32; N], C64)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exps: [u32; N], c: C64) {
        if c == C64::new(0.0, 0.0) {
            return;
        }
        let entry = self.terms.entry(exps).or_insert(C64::new(0.0, 0.0));
        *entry += c;
        if *entry == C64::new(0.0, 0.0) {
            self.terms.remove(&exps);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; N], &C64)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: [u32; N]) -> C64 {
        self.terms.get(&exps).copied().unwrap_or_default()
    }

    /// Total degree; the zero polynomial has degree 0.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn scale(&self, s: C64) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (*e, c * s)))
    }

    pub fn map_coeffs(&self, f: impl Fn(C64) -> C64) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (*e, f(*c))))
    }

    pub fn conj(&self) -> Self {
        self.map_coeffs(|c| c.conj())
    }

    pub fn derivative(&self, var: usize) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut d = *e;
            d[var] -= 1;
            out.add_term(d, c * e[var] as f64);
        }
        out
    }

    pub fn eval(&self, x: &[C64; N]) -> C64 {
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(x)
                    .fold(*c, |acc, (k, xi)| acc * xi.powu(*k))
            })
            .sum()
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Substitute `x_i -> subs[i]`, producing a polynomial in `M` variables.
    pub fn compose<const M: usize>(&self, subs: &[Poly<M>; N]) -> Poly<M> {
        let max_deg: Vec<u32> = (0..N)
            .map(|i| self.terms.keys().map(|e| e[i]).max().unwrap_or(0))
            .collect();
        let powers: Vec<Vec<Poly<M>>> = subs
            .iter()
            .zip(&max_deg)
            .map(|(s, &d)| {
                let mut pw = vec![Poly::<M>::one()];
                for k in 1..=d as usize {
                    let next = &pw[k - 1] * s;
                    pw.push(next);
                }
                pw
            })
            .collect();
        let mut out = Poly::<M>::zero();
        for (e, c) in &self.terms {
            let mut term = Poly::<M>::constant(*c);
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    term = &term * &powers[i][k as usize];
                }
            }
            out = &out + &term;
        }
        out
    }

    /// Largest coefficient modulus, 0 for the zero polynomial.
    pub fn max_abs_coeff(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Drop coefficients with modulus at or below `tol`.
    pub fn pruned(&self, tol: f64) -> Self {
        Self::from_terms(self.terms.iter().filter(|(_, c)| c.norm() > tol).map(|(e, c)| (*e, *c)))
    }

    /// Maximum coefficient distance between two polynomials.
    pub fn max_coeff_diff(&self, other: &Self) -> f64 {
        (self - other).max_abs_coeff()
    }
}

impl<const N: usize> Add for &Poly<N> {
    type Output = Poly<N>;
    fn add(self, rhs: &Poly<N>) -> Poly<N> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, *c);
        }
        out
    }
}

impl<const N: usize> Sub for &Poly<N> {
    type Output = Poly<N>;
    fn sub(self, rhs: &Poly<N>) -> Poly<N> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl<const N: usize> Neg for &Poly<N> {
    type Output = Poly<N>;
    fn neg(self) -> Poly<N> {
        self.scale(C64::new(-1.0, 0.0))
    }
}

impl<const N: usize> Mul for &Poly<N> {
    type Output = Poly<N>;
    fn mul(self, rhs: &Poly<N>) -> Poly<N> {
        let mut out = Poly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let mut e = [0; N];
                for i in 0..N {
                    e[i] = ea[i] + eb[i];
                }
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}
