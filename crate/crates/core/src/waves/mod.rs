//! Icosahedral generating-function polynomials `q_n`, wavefunction polynomials
//! `w_n`, harmonic `φ_n`, their G-invariant sums and the coefficient sequences
//! that appear in their norms.

mod checks;

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::group::Vec3;
use crate::polyalg::{Monomial, MultiPoly, TruncatedSeries};
use crate::scalars::{factorial, pochhammer, GoldenNumber, ParamScalar, Rational};

pub use checks::*;

/// Environment variable overriding the default degree cap.
pub const DEGREE_CAP_ENV: &str = "H3DUNKL_DEGREE_CAP";
pub const DEFAULT_DEGREE_CAP: usize = 16;

pub fn degree_cap() -> usize {
    std::env::var(DEGREE_CAP_ENV).ok().and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_DEGREE_CAP)
}

fn int(n: i64) -> ParamScalar {
    ParamScalar::from_int(n)
}

fn frac(n: i64, d: i64) -> ParamScalar {
    ParamScalar::from_frac(n, d)
}

fn kappa_lin(a: i64, b: ParamScalar) -> ParamScalar {
    ParamScalar::kappa().scale_golden(&GoldenNumber::from_int(a)).add_ref(&b)
}

fn inv_fact(n: u32) -> ParamScalar {
    ParamScalar::from_rational(Rational::new(BigInt::from(1), factorial(n)))
}

/// `τ + 2 = ⟨y,y⟩` for y ∈ I.
pub fn tau_plus_2() -> ParamScalar {
    ParamScalar::from_golden(GoldenNumber::ints(2, 1))
}

/// The fixed vertex pair used for two-point checks: `y₀ = (0,τ,1)`,
/// `y₁ = (τ,1,0)`, `⟨y₀,y₁⟩ = τ`.
pub fn vertex_pair() -> (Vec3, Vec3) {
    let t = GoldenNumber::tau();
    let o = GoldenNumber::from_int(1);
    let z = GoldenNumber::from_int(0);
    ([z.clone(), t.clone(), o.clone()], [t, o, z])
}

/// `ν(n) = 2ⁿ (6κ+1)_s (5κ+1/2)_t`, `s = ⌊n/2⌋`, `t = ⌊(n+1)/2⌋`.
pub struct NuSequence;

impl NuSequence {
    pub fn nu(n: u32) -> ParamScalar {
        let s = n / 2;
        let t = n.div_ceil(2);
        int(2)
            .pow(n)
            .mul_ref(&pochhammer(&kappa_lin(6, int(1)), s))
            .mul_ref(&pochhammer(&kappa_lin(5, frac(1, 2)), t))
    }

    /// `ν(n)/ν(n−2j)` by division of the two values.
    pub fn ratio(n: u32, j: u32) -> ParamScalar {
        NuSequence::nu(n).div_ref(&NuSequence::nu(n - 2 * j)).expect("ν has no ω and is nonzero")
    }

    /// `ν(n)/ν(n−1)`: `10κ+n` for n odd, `12κ+n` for n even.
    pub fn step(n: u32) -> ParamScalar {
        let a = if n % 2 == 1 { 10 } else { 12 };
        kappa_lin(a, int(n as i64))
    }
}

/// `Y_n^{(0)}, Y_n^{(1)}, Y_n^{(2)}`.
pub struct YSequence;

impl YSequence {
    fn sum(n: u32, a: &ParamScalar, b: &ParamScalar) -> ParamScalar {
        let mut acc = ParamScalar::zero();
        for j in 0..=n {
            let t = pochhammer(a, j)
                .mul_ref(&pochhammer(b, n - j))
                .mul_ref(&inv_fact(j))
                .mul_ref(&inv_fact(n - j))
                .mul_ref(&int(5i64.pow(j)));
            acc = acc.add_ref(&t);
        }
        acc
    }

    /// `Σⱼ (κ+1)ⱼ(5κ)_{n−j}/(j!(n−j)!) 5ʲ`.
    pub fn y0(n: u32) -> ParamScalar {
        Self::sum(n, &kappa_lin(1, int(1)), &kappa_lin(5, int(0)))
    }

    /// `Σⱼ (κ)ⱼ(5κ+1)_{n−j}/(j!(n−j)!) 5ʲ`.
    pub fn y1(n: u32) -> ParamScalar {
        Self::sum(n, &kappa_lin(1, int(0)), &kappa_lin(5, int(1)))
    }

    /// `(6 + n/κ) Σⱼ (κ)ⱼ(5κ)_{n−j}/(j!(n−j)!) 5ʲ`.
    pub fn y2(n: u32) -> ParamScalar {
        let pre = int(6).add_ref(&int(n as i64).div_ref(&ParamScalar::kappa()).unwrap());
        pre.mul_ref(&Self::sum(n, &kappa_lin(1, int(0)), &kappa_lin(5, int(0))))
    }

    pub fn triple(n: u32) -> (ParamScalar, ParamScalar, ParamScalar) {
        (Self::y0(n), Self::y1(n), Self::y2(n))
    }
}

fn series_tree(mut v: Vec<TruncatedSeries>) -> TruncatedSeries {
    while v.len() > 1 {
        let mut next = Vec::with_capacity(v.len().div_ceil(2));
        let mut it = v.into_iter();
        while let Some(a) = it.next() {
            match it.next() {
                Some(b) => next.push(a.product(&b)),
                None => next.push(a),
            }
        }
        v = next;
    }
    v.pop().unwrap()
}

/// `F₀ = Π_{y∈I₊}(1 − r²⟨x,y⟩²)^{−κ} = Σ p_{2j} r^{2j}`, truncated at `r^order`.
/// Six series multiplied as a balanced tree.
pub fn f0_series(i_plus: &[Vec3], order: usize) -> TruncatedSeries {
    let parts = i_plus
        .iter()
        .map(|y| {
            let l = MultiPoly::linear_form(3, y);
            TruncatedSeries::binomial(&l.mul(&l), &ParamScalar::kappa(), 2, order)
        })
        .collect();
    series_tree(parts)
}

fn p_cache() -> &'static Mutex<HashMap<usize, Arc<Vec<MultiPoly>>>> {
    static C: OnceLock<Mutex<HashMap<usize, Arc<Vec<MultiPoly>>>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `[p₀, p₂, p₄, …]` up to degree `order`, memoized per order.
pub fn p_even(i_plus: &[Vec3], order: usize) -> Arc<Vec<MultiPoly>> {
    let mut c = p_cache().lock().unwrap();
    if let Some(v) = c.iter().find(|(k, _)| **k >= order).map(|(_, v)| v.clone()) {
        return v;
    }
    let s = f0_series(i_plus, order);
    let v: Arc<Vec<MultiPoly>> = Arc::new((0..=order / 2).map(|j| s.coeff(2 * j).clone()).collect());
    c.insert(order, v.clone());
    v
}

/// `q_n(x;y₀)`, `w_n(x;y₀)` and `φ_n(x;y₀)` for one vertex.
#[derive(Clone)]
pub struct QFamily {
    y0: Vec3,
    cap: usize,
    p: Arc<Vec<MultiPoly>>,
    q: Vec<MultiPoly>,
}

impl QFamily {
    pub fn new(i_plus: &[Vec3], y0: Vec3, cap: usize) -> Self {
        let p = p_even(i_plus, cap);
        let l = MultiPoly::linear_form(3, &y0);
        let mut lpow = vec![MultiPoly::one(3)];
        for _ in 0..cap {
            let next = lpow.last().unwrap().mul(&l);
            lpow.push(next);
        }
        let q = (0..=cap)
            .map(|n| {
                let mut acc = MultiPoly::zero(3);
                for j in 0..=n / 2 {
                    acc = acc.add(&lpow[n - 2 * j].mul(&p[j]));
                }
                acc
            })
            .collect();
        QFamily { y0, cap, p, q }
    }

    pub fn vertex(&self) -> &Vec3 {
        &self.y0
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// `p_{2j}`.
    pub fn p(&self, j: usize) -> &MultiPoly {
        &self.p[j]
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.cap {
            return Err(Error::DegreeCapExceeded { n, cap: self.cap });
        }
        Ok(())
    }

    /// `q_n(x;y₀) = Σⱼ ⟨x,y₀⟩^{n−2j} p_{2j}`.
    pub fn q(&self, n: usize) -> Result<MultiPoly> {
        self.check(n)?;
        Ok(self.q[n].clone())
    }

    /// `w_n = Σⱼ (−1)ʲ(τ+2)ʲ/((4ω)ʲ j!) ν(n)/ν(n−2j) q_{n−2j}`.
    pub fn w(&self, n: usize) -> Result<MultiPoly> {
        self.check(n)?;
        Ok(w_combination(n as u32, |k| self.q[k].clone()))
    }

    /// `φ_n = Σⱼ (τ+2)ʲ|x|^{2j}/(4ʲ j! (−15κ−n+1/2)ⱼ) ν(n)/ν(n−2j) q_{n−2j}`.
    pub fn phi(&self, n: usize) -> Result<MultiPoly> {
        self.check(n)?;
        Ok(phi_combination(n as u32, |k| self.q[k].clone()))
    }
}

pub(crate) fn w_combination(n: u32, q: impl Fn(usize) -> MultiPoly) -> MultiPoly {
    let mut out = MultiPoly::zero(3);
    let four_w = ParamScalar::omega().scale_golden(&GoldenNumber::from_int(4));
    for j in 0..=n / 2 {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let c = tau_plus_2()
            .pow(j)
            .mul_ref(&int(sign))
            .div_ref(&four_w.pow(j))
            .unwrap()
            .mul_ref(&inv_fact(j))
            .mul_ref(&NuSequence::ratio(n, j));
        out = out.add(&q((n - 2 * j) as usize).scale(&c));
    }
    out
}

pub(crate) fn phi_combination(n: u32, q: impl Fn(usize) -> MultiPoly) -> MultiPoly {
    let mut out = MultiPoly::zero(3);
    let base = kappa_lin(-15, frac(1, 2).sub_ref(&int(n as i64)));
    let mut xpow = MultiPoly::one(3);
    for j in 0..=n / 2 {
        let c = tau_plus_2()
            .pow(j)
            .div_ref(&int(4i64.pow(j)).mul_ref(&pochhammer(&base, j)))
            .unwrap()
            .mul_ref(&inv_fact(j))
            .mul_ref(&NuSequence::ratio(n, j));
        out = out.add(&xpow.mul(&q((n - 2 * j) as usize)).scale(&c));
        xpow = xpow.mul(&MultiPoly::norm_sq(3));
    }
    out
}

/// Which vertex pair to evaluate `q_n` at.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexCase {
    /// `q_n(y₀;y₀)`
    Same,
    /// `q_n(y₀;y₁)` with `⟨y₀,y₁⟩ = τ`
    Tau,
}

/// Closed forms for `q_n` at a vertex pair.
pub fn q_at_vertex(n: u32, case: VertexCase) -> ParamScalar {
    let m = n / 2;
    let t = ParamScalar::tau();
    match (case, n % 2) {
        (VertexCase::Same, 0) => t.pow(2 * m).mul_ref(&YSequence::y0(m)),
        (VertexCase::Same, _) => t.pow(2 * m).mul_ref(&tau_plus_2()).mul_ref(&YSequence::y0(m)),
        (VertexCase::Tau, 0) => t.pow(2 * m).mul_ref(&YSequence::y1(m)),
        (VertexCase::Tau, _) => t.pow(2 * m + 1).mul_ref(&YSequence::y1(m)),
    }
}

/// `s_{2m}(x) = Σ_{y∈I₊} ⟨x,y⟩^{2m}` summed directly.
pub fn power_sum_direct(i_plus: &[Vec3], m: u32) -> MultiPoly {
    let mut out = MultiPoly::zero(3);
    for y in i_plus {
        out = out.add(&MultiPoly::linear_form(3, y).pow(2 * m));
    }
    out
}

/// `s_{2m}` from the coordinate closed form
/// `2(τ^{2m}+1)Σxᵢ^{2m} + 2Σ_{j=1}^{m−1} C(2m,2j) τ^{2j}(x₁^{2j}x₂^{2m−2j} + x₂^{2j}x₃^{2m−2j} + x₃^{2j}x₁^{2m−2j})`.
pub fn power_sum_closed(m: u32) -> MultiPoly {
    let t = GoldenNumber::tau();
    let mm = (2 * m) as u8;
    let mut out = MultiPoly::zero(3);
    let c0 = t.pow(2 * m) + GoldenNumber::from_int(1);
    let c0 = ParamScalar::from_golden(c0.scale(&Rational::from_integer(2.into())));
    for i in 0..3 {
        let mut e = [0u8; 3];
        e[i] = mm;
        out.add_term(Monomial::x(e[0], e[1], e[2]), c0.clone());
    }
    for j in 1..m {
        let binom = factorial(2 * m) / (factorial(2 * j) * factorial(2 * m - 2 * j));
        let c = ParamScalar::from_golden(t.pow(2 * j).scale(&Rational::from_integer(binom * 2)));
        let (a, b) = ((2 * j) as u8, (2 * m - 2 * j) as u8);
        for (i, k) in [(0, 1), (1, 2), (2, 0)] {
            let mut e = [0u8; 3];
            e[i] = a;
            e[k] = b;
            out.add_term(Monomial::x(e[0], e[1], e[2]), c.clone());
        }
    }
    out
}

/// Product of `⟨x,y⟩` over a vertex list.
pub fn vertex_product(vs: &[Vec3]) -> MultiPoly {
    vs.iter().fold(MultiPoly::one(3), |acc, y| acc.mul(&MultiPoly::linear_form(3, y)))
}

/// The six vertex families of `I₊` plus the G-invariant sums.
pub struct InvariantFamilies {
    pub families: Vec<QFamily>,
    i_plus: Vec<Vec3>,
    cap: usize,
}

impl InvariantFamilies {
    pub fn new(i_plus: &[Vec3], cap: usize) -> Self {
        let families = i_plus.iter().map(|y| QFamily::new(i_plus, y.clone(), cap)).collect();
        InvariantFamilies { families, i_plus: i_plus.to_vec(), cap }
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.cap {
            return Err(Error::DegreeCapExceeded { n, cap: self.cap });
        }
        if n % 2 == 1 {
            return Err(Error::InvalidArgument(format!("invariant families need even degree, got {}", n)));
        }
        Ok(())
    }

    /// `q^G_n = Σ_{y∈I₊} q_n(x;y)`.
    pub fn q(&self, n: usize) -> Result<MultiPoly> {
        self.check(n)?;
        let mut out = MultiPoly::zero(3);
        for f in &self.families {
            out = out.add(&f.q(n)?);
        }
        Ok(out)
    }

    /// `q^G_n = Σⱼ s_{n−2j} p_{2j}` using power sums.
    pub fn q_via_power_sums(&self, n: usize) -> Result<MultiPoly> {
        self.check(n)?;
        let p = p_even(&self.i_plus, self.cap);
        let mut out = MultiPoly::zero(3);
        for j in 0..=n / 2 {
            let s = if n == 2 * j {
                MultiPoly::constant(3, int(self.i_plus.len() as i64))
            } else {
                power_sum_direct(&self.i_plus, (n / 2 - j) as u32)
            };
            out = out.add(&s.mul(&p[j]));
        }
        Ok(out)
    }

    pub fn w(&self, n: usize) -> Result<MultiPoly> {
        self.check(n)?;
        let qs: Vec<MultiPoly> = (0..=n).map(|k| if k % 2 == 0 { self.q(k).unwrap() } else { MultiPoly::zero(3) }).collect();
        Ok(w_combination(n as u32, |k| qs[k].clone()))
    }

    /// `φ^G_n` from the `q^G` formula.
    pub fn phi(&self, n: usize) -> Result<MultiPoly> {
        self.check(n)?;
        let qs: Vec<MultiPoly> = (0..=n).map(|k| if k % 2 == 0 { self.q(k).unwrap() } else { MultiPoly::zero(3) }).collect();
        Ok(phi_combination(n as u32, |k| qs[k].clone()))
    }

    /// `Σ_{y∈I₊} φ_n(x;y)`.
    pub fn phi_vertex_sum(&self, n: usize) -> Result<MultiPoly> {
        self.check(n)?;
        let mut out = MultiPoly::zero(3);
        for f in &self.families {
            out = out.add(&f.phi(n)?);
        }
        Ok(out)
    }
}

/// Closed-form sum for `‖φ^G_{2n}‖₂²`:
/// `6τ^{2n}ν(2n)/(2ω)^{2n} Σⱼ 5ʲ(−6κ−n)ⱼ(−5κ−n+1/2)ⱼ/(j!(−15κ−2n+1/2)ⱼ) Y^{(2)}_{n−j}`.
pub fn norm_invariant_phi(n: u32) -> ParamScalar {
    let mut sum = ParamScalar::zero();
    let a = kappa_lin(-6, int(-(n as i64)));
    let b = kappa_lin(-5, frac(1, 2).sub_ref(&int(n as i64)));
    let c = kappa_lin(-15, frac(1, 2).sub_ref(&int(2 * n as i64)));
    for j in 0..=n {
        let t = int(5i64.pow(j))
            .mul_ref(&pochhammer(&a, j))
            .mul_ref(&pochhammer(&b, j))
            .mul_ref(&inv_fact(j))
            .div_ref(&pochhammer(&c, j))
            .unwrap()
            .mul_ref(&YSequence::y2(n - j));
        sum = sum.add_ref(&t);
    }
    let two_w = ParamScalar::omega().scale_golden(&GoldenNumber::from_int(2));
    int(6)
        .mul_ref(&ParamScalar::tau().pow(2 * n))
        .mul_ref(&NuSequence::nu(2 * n))
        .div_ref(&two_w.pow(2 * n))
        .unwrap()
        .mul_ref(&sum)
}

/// `‖w_{2n}(·;y₀)‖₂² = (2ω)^{−2n}ν(2n)τ^{2n}Y_n^{(0)}`; with `VertexCase::Tau` the
/// cross term `⟨w_{2n}(·;y₀),w_{2n}(·;y₁)⟩₂` with `Y_n^{(1)}`.
pub fn w_even_inner_closed(n: u32, case: VertexCase) -> ParamScalar {
    let y = match case {
        VertexCase::Same => YSequence::y0(n),
        VertexCase::Tau => YSequence::y1(n),
    };
    let two_w = ParamScalar::omega().scale_golden(&GoldenNumber::from_int(2));
    NuSequence::nu(2 * n).mul_ref(&ParamScalar::tau().pow(2 * n)).mul_ref(&y).div_ref(&two_w.pow(2 * n)).unwrap()
}

/// `‖w^G_{2n}‖₂² = 6(2ω)^{−2n}ν(2n)τ^{2n}(Y_n^{(0)} + 5Y_n^{(1)})`.
pub fn norm_invariant_w(n: u32) -> ParamScalar {
    let two_w = ParamScalar::omega().scale_golden(&GoldenNumber::from_int(2));
    let y = YSequence::y0(n).add_ref(&YSequence::y1(n).mul_ref(&int(5)));
    int(6).mul_ref(&NuSequence::nu(2 * n)).mul_ref(&ParamScalar::tau().pow(2 * n)).mul_ref(&y).div_ref(&two_w.pow(2 * n)).unwrap()
}

/// `⟨w_n(·;y₀),w_n(·;y₁)⟩₂ = (2ω)^{−n}ν(n)q_n(y₁;y₀)` with `q_n(y₁;y₀)` taken
/// from the given value.
pub fn w_inner_from_q(n: u32, q_value: &ParamScalar) -> ParamScalar {
    let two_w = ParamScalar::omega().scale_golden(&GoldenNumber::from_int(2));
    NuSequence::nu(n).mul_ref(q_value).div_ref(&two_w.pow(n)).unwrap()
}

/// `⟨φ_n(·;y₀),φ_n(·;y₁)⟩₂ = Σⱼ (2ω)^{−n}(τ+2)^{2j}/(4ʲj!(−15κ−n+1/2)ⱼ) ν(n)²/ν(n−2j) q_{n−2j}(y₀;y₁)`,
/// with the vertex values supplied by `q_at(k)`.
pub fn phi_inner_closed(n: u32, q_at: impl Fn(u32) -> ParamScalar) -> ParamScalar {
    let base = kappa_lin(-15, frac(1, 2).sub_ref(&int(n as i64)));
    let two_w = ParamScalar::omega().scale_golden(&GoldenNumber::from_int(2));
    let mut acc = ParamScalar::zero();
    for j in 0..=n / 2 {
        let c = tau_plus_2()
            .pow(2 * j)
            .div_ref(&int(4i64.pow(j)).mul_ref(&pochhammer(&base, j)))
            .unwrap()
            .mul_ref(&inv_fact(j))
            .mul_ref(&NuSequence::nu(n))
            .mul_ref(&NuSequence::ratio(n, j))
            .mul_ref(&q_at(n - 2 * j));
        acc = acc.add_ref(&c);
    }
    acc.div_ref(&two_w.pow(n)).unwrap()
}

/// Dimension of degree-n G-invariants that are harmonic: coefficient of tⁿ in
/// `[(1−t⁶)(1−t¹⁰)]^{−1}`.
pub fn invariant_harmonic_dimension(n: u32) -> u32 {
    let mut c = 0;
    let mut a = 0;
    while 6 * a <= n {
        if (n - 6 * a) % 10 == 0 {
            c += 1;
        }
        a += 1;
    }
    c
}

/// The displayed closed forms of `‖φ^G_{2n}‖₂²` for `2n ∈ {6,10,12,16}`.
pub fn norm_invariant_phi_display(two_n: u32) -> Option<ParamScalar> {
    let k = |a: i64, b: ParamScalar| kappa_lin(a, b);
    let p = |a: i64, b: ParamScalar, m: u32| pochhammer(&kappa_lin(a, b), m);
    let half = frac(1, 2);
    let t_over_w = ParamScalar::tau().div_ref(&ParamScalar::omega()).ok()?.pow(two_n);
    let common = |s: u32| {
        p(6, int(1), s).mul_ref(&p(5, half.clone(), s)).mul_ref(&t_over_w)
    };
    let v = match two_n {
        6 => int(64 * 15)
            .mul_ref(&common(3))
            .mul_ref(&k(5, int(1)))
            .mul_ref(&k(2, int(1)))
            .div_ref(&k(30, int(7)))
            .ok()?,
        10 => int(512 * 3)
            .mul_ref(&common(5))
            .mul_ref(&p(5, int(1), 2))
            .mul_ref(&k(6, int(5)))
            .div_ref(&k(30, int(11)).mul_ref(&k(30, int(17))))
            .ok()?,
        12 => int(2048 * 15)
            .mul_ref(&common(6))
            .mul_ref(&p(5, int(1), 3))
            .mul_ref(&k(1, int(1)))
            .mul_ref(&k(10, int(9)))
            .div_ref(&k(30, int(13)).mul_ref(&k(30, int(19))).mul_ref(&k(30, int(23))))
            .ok()?,
        16 => int(65536 * 15)
            .mul_ref(&common(8))
            .mul_ref(&p(5, int(1), 4))
            .mul_ref(&k(1, int(1)))
            .mul_ref(&k(3, int(4)))
            .div_ref(&k(30, int(17)).mul_ref(&k(30, int(23))).mul_ref(&k(30, int(27))).mul_ref(&k(30, int(29))))
            .ok()?,
        _ => return None,
    };
    Some(v)
}

/// `6ν(2n)/(2ω)^{2n} · φ^G_{2n}(y)` for a vertex `y`.
pub fn norm_invariant_phi_from_value(n: u32, phi_at_vertex: &ParamScalar) -> ParamScalar {
    let two_w = ParamScalar::omega().scale_golden(&GoldenNumber::from_int(2));
    int(6).mul_ref(&NuSequence::nu(2 * n)).mul_ref(phi_at_vertex).div_ref(&two_w.pow(2 * n)).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nu_steps() {
        for n in 1..10 {
            assert_eq!(NuSequence::nu(n), NuSequence::nu(n - 1).mul_ref(&NuSequence::step(n)));
        }
    }

    #[test]
    fn y_identity() {
        for n in 0..8 {
            let (a, b, c) = YSequence::triple(n);
            assert_eq!(c, a.add_ref(&b.mul_ref(&int(5))));
            assert!(c.is_polynomial());
        }
        assert_eq!(YSequence::y0(1), ParamScalar::parse("10*k + 5").unwrap());
    }

    #[test]
    fn poincare() {
        let nz: Vec<u32> = (1..=16).filter(|&n| invariant_harmonic_dimension(n) > 0).collect();
        assert_eq!(nz, vec![6, 10, 12, 16]);
        assert_eq!(invariant_harmonic_dimension(30), 2);
    }
}
