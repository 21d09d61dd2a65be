use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rational;

/// Floating-point value of the golden ratio, used only for numeric cross-checks.
pub const TAU_F64: f64 = 1.618_033_988_749_895;

/// An element `a + b·τ` of the golden field Q(τ), where τ² = τ + 1.
///
/// The pair `(a, b)` is unique for every field element, so derived equality and
/// hashing are exact.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GoldenNumber {
    pub a: Rational,
    pub b: Rational,
}

impl GoldenNumber {
    pub fn new(a: Rational, b: Rational) -> Self {
        GoldenNumber { a, b }
    }

    pub fn from_rational(a: Rational) -> Self {
        GoldenNumber { a, b: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_frac(n: i64, d: i64) -> Self {
        Self::from_rational(Rational::new(BigInt::from(n), BigInt::from(d)))
    }

    /// `a + b·τ` with small integer parts.
    pub fn ints(a: i64, b: i64) -> Self {
        GoldenNumber {
            a: Rational::from_integer(BigInt::from(a)),
            b: Rational::from_integer(BigInt::from(b)),
        }
    }

    pub fn tau() -> Self {
        Self::ints(0, 1)
    }

    /// τ⁻¹ = τ − 1.
    pub fn tau_inv() -> Self {
        Self::ints(-1, 1)
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate, τ ↦ 1 − τ.
    pub fn conjugate(&self) -> Self {
        GoldenNumber { a: &self.a + &self.b, b: -&self.b }
    }

    /// Field norm `a² + ab − b²`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a + &self.a * &self.b - &self.b * &self.b
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        let c = self.conjugate();
        Some(GoldenNumber { a: c.a / &n, b: c.b / &n })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn scale(&self, r: &Rational) -> Self {
        GoldenNumber { a: &self.a * r, b: &self.b * r }
    }

    /// Exact sign of `a + bτ` as a real number.
    pub fn signum(&self) -> i32 {
        // 2(a + bτ) = (2a + b) + b√5
        let two = Rational::from_integer(BigInt::from(2));
        let p = &two * &self.a + &self.b;
        let q = &self.b;
        let sp = sign_of(&p);
        let sq = sign_of(q);
        if sq == 0 {
            return sp;
        }
        if sp == 0 {
            return sq;
        }
        if sp == sq {
            return sp;
        }
        // opposite signs: compare p² with 5q²
        let lhs = &p * &p;
        let rhs = Rational::from_integer(BigInt::from(5)) * q * q;
        match lhs.cmp(&rhs) {
            Ordering::Greater => sp,
            Ordering::Less => sq,
            Ordering::Equal => 0,
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.a.to_f64().unwrap_or(f64::NAN) + self.b.to_f64().unwrap_or(f64::NAN) * TAU_F64
    }

    pub fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
}

fn sign_of(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl Zero for GoldenNumber {
    fn zero() -> Self {
        GoldenNumber { a: Rational::zero(), b: Rational::zero() }
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for GoldenNumber {
    fn one() -> Self {
        GoldenNumber { a: Rational::one(), b: Rational::zero() }
    }
    fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }
}

impl PartialOrd for GoldenNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Numeric order on the real embedding with τ > 0.
impl Ord for GoldenNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum().cmp(&0)
    }
}

impl<'a> Add<&'a GoldenNumber> for &'a GoldenNumber {
    type Output = GoldenNumber;
    fn add(self, o: &GoldenNumber) -> GoldenNumber {
        GoldenNumber { a: &self.a + &o.a, b: &self.b + &o.b }
    }
}

impl Add for GoldenNumber {
    type Output = GoldenNumber;
    fn add(self, o: GoldenNumber) -> GoldenNumber {
        GoldenNumber { a: self.a + o.a, b: self.b + o.b }
    }
}

impl AddAssign<&GoldenNumber> for GoldenNumber {
    fn add_assign(&mut self, o: &GoldenNumber) {
        self.a += &o.a;
        self.b += &o.b;
    }
}

impl SubAssign<&GoldenNumber> for GoldenNumber {
    fn sub_assign(&mut self, o: &GoldenNumber) {
        self.a -= &o.a;
        self.b -= &o.b;
    }
}

impl<'a> Sub<&'a GoldenNumber> for &'a GoldenNumber {
    type Output = GoldenNumber;
    fn sub(self, o: &GoldenNumber) -> GoldenNumber {
        GoldenNumber { a: &self.a - &o.a, b: &self.b - &o.b }
    }
}

impl Sub for GoldenNumber {
    type Output = GoldenNumber;
    fn sub(self, o: GoldenNumber) -> GoldenNumber {
        GoldenNumber { a: self.a - o.a, b: self.b - o.b }
    }
}

impl Neg for GoldenNumber {
    type Output = GoldenNumber;
    fn neg(self) -> GoldenNumber {
        GoldenNumber { a: -self.a, b: -self.b }
    }
}

impl Neg for &GoldenNumber {
    type Output = GoldenNumber;
    fn neg(self) -> GoldenNumber {
        GoldenNumber { a: -&self.a, b: -&self.b }
    }
}

/// (a₁+b₁τ)(a₂+b₂τ) = (a₁a₂+b₁b₂) + (a₁b₂+a₂b₁+b₁b₂)τ
impl<'a> Mul<&'a GoldenNumber> for &'a GoldenNumber {
    type Output = GoldenNumber;
    fn mul(self, o: &GoldenNumber) -> GoldenNumber {
        if self.b.is_zero() {
            if o.b.is_zero() {
                return GoldenNumber { a: &self.a * &o.a, b: Rational::zero() };
            }
            return GoldenNumber { a: &self.a * &o.a, b: &self.a * &o.b };
        }
        if o.b.is_zero() {
            return GoldenNumber { a: &self.a * &o.a, b: &self.b * &o.a };
        }
        let bb = &self.b * &o.b;
        GoldenNumber {
            a: &self.a * &o.a + &bb,
            b: &self.a * &o.b + &o.a * &self.b + bb,
        }
    }
}

impl Mul for GoldenNumber {
    type Output = GoldenNumber;
    fn mul(self, o: GoldenNumber) -> GoldenNumber {
        &self * &o
    }
}

impl fmt::Display for GoldenNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => {
                if self.b.is_one() {
                    write!(f, "tau")
                } else if (-&self.b).is_one() {
                    write!(f, "-tau")
                } else {
                    write!(f, "{}*tau", self.b)
                }
            }
            (false, false) => {
                if self.b.is_negative() {
                    let nb = -&self.b;
                    if nb.is_one() {
                        write!(f, "{} - tau", self.a)
                    } else {
                        write!(f, "{} - {}*tau", self.a, nb)
                    }
                } else if self.b.is_one() {
                    write!(f, "{} + tau", self.a)
                } else {
                    write!(f, "{} + {}*tau", self.a, self.b)
                }
            }
        }
    }
}

impl fmt::Debug for GoldenNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Multiply two golden numbers; named entry point for the field product.
pub fn golden_mul(x: &GoldenNumber, y: &GoldenNumber) -> GoldenNumber {
    x * y
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tau_squared_is_tau_plus_one() {
        let t = GoldenNumber::tau();
        assert_eq!(golden_mul(&t, &t), GoldenNumber::ints(1, 1));
    }

    #[test]
    fn tau_plus_two_squared_is_five_tau_squared() {
        let t2 = GoldenNumber::ints(2, 1);
        assert_eq!(golden_mul(&t2, &t2), GoldenNumber::ints(5, 5));
        let t = GoldenNumber::tau();
        assert_eq!(golden_mul(&t2, &t2), GoldenNumber::from_int(5) * (&t * &t));
    }

    #[test]
    fn tau_times_tau_minus_one_is_one() {
        let t = GoldenNumber::tau();
        assert_eq!(golden_mul(&t, &GoldenNumber::tau_inv()), GoldenNumber::one());
        assert_eq!(t.inv().unwrap(), GoldenNumber::tau_inv());
    }

    #[test]
    fn signs() {
        assert_eq!(GoldenNumber::ints(-1, 1).signum(), 1);
        assert_eq!(GoldenNumber::ints(2, -1).signum(), 1);
        assert_eq!(GoldenNumber::ints(1, -1).signum(), -1);
        assert_eq!(GoldenNumber::ints(-2, 1).signum(), -1);
        assert_eq!(GoldenNumber::zero().signum(), 0);
        assert!(GoldenNumber::tau() > GoldenNumber::one());
    }

    #[test]
    fn display() {
        assert_eq!(GoldenNumber::ints(1, 1).to_string(), "1 + tau");
        assert_eq!(GoldenNumber::ints(-1, 1).to_string(), "-1 + tau");
        assert_eq!(GoldenNumber::ints(2, -3).to_string(), "2 - 3*tau");
        assert_eq!(GoldenNumber::from_frac(1, 2).to_string(), "1/2");
    }
}
