//! Floating-point evaluation and Monte-Carlo estimates of the Gaussian-weighted
//! pairing, for spot checks at non-integer κ.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::Vec3;
use crate::polyalg::{MultiPoly, MAX_ARITY};

/// A polynomial with `f64` coefficients, obtained by specializing κ and ω.
#[derive(Clone, Debug, PartialEq)]
pub struct FloatPoly {
    arity: usize,
    terms: Vec<([u8; MAX_ARITY], f64)>,
}

impl FloatPoly {
    /// Each coefficient is evaluated once at `(κ₀, ω₀)`.
    pub fn from_poly(p: &MultiPoly, kappa: f64, omega: f64) -> Result<Self> {
        let mut terms = Vec::with_capacity(p.len());
        for (m, c) in p.terms() {
            let v = c.to_f64(kappa, omega);
            if !v.is_finite() {
                return Err(Error::DenominatorVanishes { kappa: kappa.to_string(), omega: omega.to_string() });
            }
            terms.push((m.exps, v));
        }
        Ok(FloatPoly { arity: p.arity(), terms })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn max_exps(&self) -> [usize; MAX_ARITY] {
        let mut m = [0usize; MAX_ARITY];
        for (e, _) in &self.terms {
            for i in 0..MAX_ARITY {
                m[i] = m[i].max(e[i] as usize);
            }
        }
        m
    }

    /// Evaluate at a point with one entry per variable, using per-variable
    /// power tables.
    pub fn eval(&self, x: &[f64]) -> f64 {
        let maxe = self.max_exps();
        let mut pows: [Vec<f64>; MAX_ARITY] = Default::default();
        for i in 0..MAX_ARITY {
            let xi = x.get(i).copied().unwrap_or(0.0);
            let mut v = Vec::with_capacity(maxe[i] + 1);
            let mut acc = 1.0;
            for _ in 0..=maxe[i] {
                v.push(acc);
                acc *= xi;
            }
            pows[i] = v;
        }
        let mut s = 0.0;
        for (e, c) in &self.terms {
            let mut t = *c;
            for i in 0..MAX_ARITY {
                if e[i] > 0 {
                    t *= pows[i][e[i] as usize];
                }
            }
            s += t;
        }
        s
    }
}

/// `p(x)` at `(κ₀, ω₀)` in floating point.
pub fn float_eval(p: &MultiPoly, x: &[f64; 3], kappa: f64, omega: f64) -> Result<f64> {
    Ok(FloatPoly::from_poly(p, kappa, omega)?.eval(x))
}

pub fn vec_to_f64(v: &Vec3) -> [f64; 3] {
    [v[0].to_f64(), v[1].to_f64(), v[2].to_f64()]
}

/// Gaussian proposal `N(0, 1/(2ω₀))` per coordinate, weighted by
/// `h_{κ₀}² = Π_{v∈R₊} |⟨x,v⟩|^{2κ₀}`.
///
/// The radius is integrated exactly: `h²` is homogeneous of degree `30κ₀`, so a
/// degree-d monomial contributes `Γ((d+30κ₀+3)/2)/Γ((30κ₀+3)/2) ω₀^{−d/2}`
/// times its mean over directions `u = x/|x|`. The direction law is symmetric
/// under `u ↦ −u`, so odd degrees integrate to zero and are dropped.
#[derive(Clone, Debug)]
pub struct WeightSampler {
    pub omega: f64,
    pub kappa: f64,
    pub roots: Vec<[f64; 3]>,
    pub seed: u64,
}

/// Samples per independent substream.
pub const CHUNK: usize = 1 << 16;

#[derive(Clone, Copy, Debug, Default)]
struct Sums {
    w: f64,
    wf: f64,
    w2: f64,
    w2f: f64,
    w2f2: f64,
}

impl WeightSampler {
    pub fn new(roots: &[Vec3], kappa: f64, omega: f64, seed: u64) -> Result<Self> {
        if !(omega > 0.0) || !(kappa >= 0.0) {
            return Err(Error::InvalidArgument(format!("need ω₀ > 0 and κ₀ ≥ 0, got ω₀={} κ₀={}", omega, kappa)));
        }
        Ok(WeightSampler { omega, kappa, roots: roots.iter().map(vec_to_f64).collect(), seed })
    }

    pub fn weight(&self, x: &[f64; 3]) -> f64 {
        if self.kappa == 0.0 {
            return 1.0;
        }
        let mut h = 1.0;
        for v in &self.roots {
            h *= (x[0] * v[0] + x[1] * v[1] + x[2] * v[2]).abs();
        }
        h.powf(2.0 * self.kappa)
    }

    /// `n` points of substream `chunk`.
    pub fn points(&self, chunk: u64, n: usize) -> Vec<[f64; 3]> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(chunk);
        let normal = Normal::new(0.0, (0.5 / self.omega).sqrt()).expect("positive variance");
        (0..n).map(|_| [normal.sample(&mut rng), normal.sample(&mut rng), normal.sample(&mut rng)]).collect()
    }

    /// `f` with odd-degree terms dropped and each even degree-d term scaled by
    /// its radial moment ratio.
    pub fn radial_reduce(&self, f: &FloatPoly) -> FloatPoly {
        let a = 1.5 + 15.0 * self.kappa;
        let mut terms = Vec::with_capacity(f.terms.len());
        for (e, c) in &f.terms {
            let d: u32 = e.iter().map(|&k| k as u32).sum();
            if d % 2 == 1 {
                continue;
            }
            let mut r = 1.0;
            for j in 0..d / 2 {
                r *= (a + j as f64) / self.omega;
            }
            terms.push((*e, c * r));
        }
        FloatPoly { arity: f.arity, terms }
    }

    fn chunk_sums(&self, chunk: u64, n: usize, f: &FloatPoly) -> Sums {
        let mut s = Sums::default();
        for x in self.points(chunk, n) {
            let r = (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]).sqrt();
            let u = [x[0] / r, x[1] / r, x[2] / r];
            let w = self.weight(&u);
            let v = f.eval(&u);
            s.w += w;
            s.wf += w * v;
            s.w2 += w * w;
            s.w2f += w * w * v;
            s.w2f2 += w * w * v * v;
        }
        s
    }

    /// Self-normalized estimate of `∫f h² e^{−ω|x|²} / ∫h² e^{−ω|x|²}` and
    /// its delta-method standard error.
    pub fn estimate(&self, f: &FloatPoly, samples: usize) -> McEstimate {
        let f = &self.radial_reduce(f);
        let chunks = samples.div_ceil(CHUNK);
        let parts: Vec<Sums> = (0..chunks)
            .into_par_iter()
            .map(|c| {
                let n = CHUNK.min(samples - c * CHUNK);
                self.chunk_sums(c as u64, n, f)
            })
            .collect();
        let mut t = Sums::default();
        for p in parts {
            t.w += p.w;
            t.wf += p.wf;
            t.w2 += p.w2;
            t.w2f += p.w2f;
            t.w2f2 += p.w2f2;
        }
        let m = t.wf / t.w;
        let var = (t.w2f2 - 2.0 * m * t.w2f + m * m * t.w2).max(0.0);
        McEstimate { estimate: m, std_error: var.sqrt() / t.w, samples }
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct McEstimate {
    pub estimate: f64,
    pub std_error: f64,
    pub samples: usize,
}

impl McEstimate {
    /// `|estimate − exact| ≤ k·SE`.
    pub fn within(&self, exact: f64, k: f64) -> bool {
        (self.estimate - exact).abs() <= k * self.std_error
    }
}

pub const MIN_SAMPLES: usize = 10_000;

/// `⟨p,q⟩₂` at `(κ₀, ω₀)` by importance sampling.
pub fn mc_pairing(
    roots: &[Vec3],
    p: &MultiPoly,
    q: &MultiPoly,
    kappa: f64,
    omega: f64,
    samples: usize,
    seed: u64,
) -> Result<McEstimate> {
    if samples < MIN_SAMPLES {
        return Err(Error::InvalidArgument(format!("need at least {} samples, got {}", MIN_SAMPLES, samples)));
    }
    let f = FloatPoly::from_poly(&p.mul(q), kappa, omega)?;
    Ok(WeightSampler::new(roots, kappa, omega, seed)?.estimate(&f, samples))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_simple() {
        let p = MultiPoly::parse("2*x1^2*x2 - k*x3 + w").unwrap();
        let v = float_eval(&p, &[1.0, 2.0, 3.0], 0.5, 2.0).unwrap();
        assert!((v - (4.0 - 1.5 + 2.0)).abs() < 1e-12);
    }

    #[test]
    fn denominator_vanishes() {
        let p = MultiPoly::parse("x1/(2*k - 1)").unwrap();
        assert!(float_eval(&p, &[1.0, 0.0, 0.0], 0.5, 1.0).is_err());
    }
}
