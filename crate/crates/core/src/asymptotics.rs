//! Stirling and Gaussian approximations of the balanced-word counts and the
//! closed-form minimum redundancies derived from them.
//!
//! Counts are handled as natural logarithms; `q^n` is never formed. Each
//! approximate redundancy has the shape `g(q) log_q n + h(q)`, and
//! [`redundancy_terms`] exposes the pair `(g, h)` directly.

use std::f64::consts::PI;

use num_rational::Ratio;

use crate::alphabet::{Alphabet, BalanceKind, PhiMode};
use crate::error::{Error, Result};

/// `ln(sqrt(2 pi n) (n/e)^n)`, with `n = 0` mapped to `ln 0! = 0`.
pub fn stirling_ln_factorial(n: u64) -> f64 {
    if n == 0 {
        return 0.0;
    }
    let n = n as f64;
    0.5 * (2.0 * PI * n).ln() + n * n.ln() - n
}

/// Mean and variance of `sum_i phi(x_i)` for `n` uniform symbols.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianSpec {
    pub n: usize,
    pub q: u32,
    pub mean: f64,
    pub variance: f64,
}

impl GaussianSpec {
    /// Moments for an arbitrary symbol weight `phi`.
    pub fn from_weight(n: usize, q: u32, phi: impl Fn(i32) -> f64) -> Result<Self> {
        let alphabet = Alphabet::new(q)?;
        let values: Vec<f64> = alphabet.symbols().into_iter().map(phi).collect();
        let mean_one = values.iter().sum::<f64>() / q as f64;
        let second = values.iter().map(|v| v * v).sum::<f64>() / q as f64;
        Ok(GaussianSpec {
            n,
            q,
            mean: n as f64 * mean_one,
            variance: n as f64 * (second - mean_one * mean_one),
        })
    }

    /// Weight `x/2`: mean 0, variance `n(q^2 - 1)/12`.
    pub fn charge(n: usize, q: u32) -> Result<Self> {
        Self::from_weight(n, q, |x| x as f64 / 2.0)
    }

    pub fn polarity(n: usize, q: u32, mode: PhiMode) -> Result<Self> {
        Self::from_weight(n, q, |x| {
            let p = crate::alphabet::phi(x, mode);
            *p.numer() as f64 / *p.denom() as f64
        })
    }

    pub fn std_dev(&self) -> f64 {
        self.variance.sqrt()
    }
}

/// Log of `q^n / (sigma sqrt(2 pi)) exp(-((s - mu)/sigma)^2 / 2)`.
pub fn ln_gaussian_count(spec: &GaussianSpec, s: f64) -> f64 {
    let sigma = spec.std_dev();
    let z = (s - spec.mean) / sigma;
    spec.n as f64 * (spec.q as f64).ln() - (sigma * (2.0 * PI).sqrt()).ln() - 0.5 * z * z
}

pub fn gaussian_count(spec: &GaussianSpec, s: f64) -> f64 {
    ln_gaussian_count(spec, s).exp()
}

/// Parameters of the joint (charge, polarity) normal approximation, for
/// `q >= 4`. The charge coordinate is `sum x_i / 2`; the polarity
/// coordinate uses `+-1/2` weights for even `q` and the unit sign for odd `q`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BivariateSpec {
    pub n: usize,
    pub q: u32,
    pub mean1: f64,
    pub sigma1: f64,
    pub mean2: f64,
    pub sigma2: f64,
    pub rho: f64,
}

pub fn bivariate_spec(n: usize, q: u32) -> Result<BivariateSpec> {
    Alphabet::new(q)?;
    if q <= 3 {
        return Err(Error::DegenerateCorrelation(q));
    }
    let nf = n as f64;
    let qf = q as f64;
    let sigma1 = (nf * (qf * qf - 1.0) / 12.0).sqrt();
    let (sigma2, rho) = if q % 2 == 0 {
        (
            (nf / 4.0).sqrt(),
            (3.0 * qf * qf / (4.0 * (qf * qf - 1.0))).sqrt(),
        )
    } else {
        (
            (nf * (qf - 1.0) / qf).sqrt(),
            (3.0 * (qf + 1.0) / (4.0 * qf)).sqrt(),
        )
    };
    Ok(BivariateSpec {
        n,
        q,
        mean1: 0.0,
        sigma1,
        mean2: 0.0,
        sigma2,
        rho,
    })
}

pub fn ln_joint_gaussian_count(spec: &BivariateSpec, s1: f64, s2: f64) -> f64 {
    let z1 = (s1 - spec.mean1) / spec.sigma1;
    let z2 = (s2 - spec.mean2) / spec.sigma2;
    let one_minus = 1.0 - spec.rho * spec.rho;
    let quad = z1 * z1 + z2 * z2 - 2.0 * spec.rho * z1 * z2;
    spec.n as f64 * (spec.q as f64).ln()
        - (2.0 * PI * spec.sigma1 * spec.sigma2 * one_minus.sqrt()).ln()
        - quad / (2.0 * one_minus)
}

pub fn joint_gaussian_count(spec: &BivariateSpec, s1: f64, s2: f64) -> f64 {
    ln_joint_gaussian_count(spec, s1, s2).exp()
}

fn check_feasible(kind: BalanceKind, n: usize, q: u32) -> Result<()> {
    Alphabet::new(q)?;
    if n == 0 || !kind.admits_length(n, q) {
        return Err(Error::InfeasibleLength { kind, n, q });
    }
    Ok(())
}

/// Natural log of the closed-form approximate count.
pub fn ln_approx_count(kind: BalanceKind, n: usize, q: u32) -> Result<f64> {
    check_feasible(kind, n, q)?;
    let nf = n as f64;
    let qf = q as f64;
    let base = nf * qf.ln();
    let correction = match kind {
        BalanceKind::Sb => (qf - 1.0) / 2.0 * (1.0 / (2.0 * PI * nf)).ln() + qf / 2.0 * qf.ln(),
        BalanceKind::Cb => 0.5 * (6.0 / (PI * nf * (qf * qf - 1.0))).ln(),
        BalanceKind::Pb if q % 2 == 0 => 0.5 * (2.0 / (PI * nf)).ln(),
        BalanceKind::Pb => 0.5 * (qf / (2.0 * PI * nf * (qf - 1.0))).ln(),
        BalanceKind::Cpb if q <= 3 => return ln_approx_count(BalanceKind::Cb, n, q),
        BalanceKind::Cpb if q % 2 == 0 => {
            -(PI * nf).ln() + 0.5 * (48.0 / (qf * qf - 4.0)).ln()
        }
        BalanceKind::Cpb => {
            -(PI * nf).ln()
                + 0.5 * (12.0 * qf * qf / ((qf * qf - 1.0) * (qf - 1.0) * (qf - 3.0))).ln()
        }
    };
    Ok(base + correction)
}

/// Closed-form approximate count. Overflows to infinity for large `n`; use
/// [`ln_approx_count`] there.
pub fn approx_count(kind: BalanceKind, n: usize, q: u32) -> Result<f64> {
    ln_approx_count(kind, n, q).map(f64::exp)
}

/// `(g, h)` such that the approximate minimum redundancy is
/// `g log_q n + h`.
pub fn redundancy_terms(kind: BalanceKind, q: u32) -> Result<(f64, f64)> {
    Alphabet::new(q)?;
    let qf = q as f64;
    let log_q = |x: f64| x.ln() / qf.ln();
    let terms = match kind {
        BalanceKind::Sb => ((qf - 1.0) / 2.0, (qf - 1.0) / 2.0 * log_q(2.0 * PI) - qf / 2.0),
        BalanceKind::Cb => (0.5, 0.5 * log_q(PI * (qf * qf - 1.0) / 6.0)),
        BalanceKind::Pb if q % 2 == 0 => (0.5, 0.5 * log_q(PI / 2.0)),
        BalanceKind::Pb => (0.5, 0.5 * log_q(2.0 * PI * (qf - 1.0) / qf)),
        BalanceKind::Cpb if q <= 3 => return redundancy_terms(BalanceKind::Cb, q),
        BalanceKind::Cpb if q % 2 == 0 => (1.0, log_q(PI * ((qf * qf - 4.0) / 48.0).sqrt())),
        BalanceKind::Cpb => (
            1.0,
            log_q(PI * ((qf * qf - 1.0) * (qf - 1.0) * (qf - 3.0) / (12.0 * qf * qf)).sqrt()),
        ),
    };
    Ok(terms)
}

pub fn approx_redundancy(kind: BalanceKind, n: usize, q: u32) -> Result<f64> {
    check_feasible(kind, n, q)?;
    let (g, h) = redundancy_terms(kind, q)?;
    Ok(g * (n as f64).ln() / (q as f64).ln() + h)
}

/// Asymptotic normalized redundancy: the limit of `r / log_q n`.
pub fn anr(kind: BalanceKind, q: u32) -> Ratio<u32> {
    match kind {
        BalanceKind::Sb => Ratio::new(q - 1, 2),
        BalanceKind::Cb | BalanceKind::Pb => Ratio::new(1, 2),
        BalanceKind::Cpb if q <= 3 => Ratio::new(1, 2),
        BalanceKind::Cpb => Ratio::from_integer(1),
    }
}
