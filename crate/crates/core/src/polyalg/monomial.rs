use std::cmp::Ordering;
use std::fmt;

/// Maximum number of variables: x₁..x₃ and y₁..y₃.
pub const MAX_ARITY: usize = 6;

/// Exponent vector. Unused trailing slots stay zero, so x-only monomials embed
/// unchanged into joint (x, y) polynomials.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    pub exps: [u8; MAX_ARITY],
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exps: [0; MAX_ARITY] };

    pub fn new(exps: &[u8]) -> Self {
        assert!(exps.len() <= MAX_ARITY, "too many exponents");
        let mut e = [0u8; MAX_ARITY];
        e[..exps.len()].copy_from_slice(exps);
        Monomial { exps: e }
    }

    pub fn x(a: u8, b: u8, c: u8) -> Self {
        Monomial { exps: [a, b, c, 0, 0, 0] }
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0u8; MAX_ARITY];
        e[i] = 1;
        Monomial { exps: e }
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn x_degree(&self) -> u32 {
        self.exps[..3].iter().map(|&e| e as u32).sum()
    }

    pub fn x_part(&self) -> [u8; 3] {
        [self.exps[0], self.exps[1], self.exps[2]]
    }

    pub fn y_part(&self) -> Monomial {
        Monomial { exps: [0, 0, 0, self.exps[3], self.exps[4], self.exps[5]] }
    }

    pub fn with_x(&self, x: [u8; 3]) -> Monomial {
        let mut e = self.exps;
        e[..3].copy_from_slice(&x);
        Monomial { exps: e }
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut e = self.exps;
        for (a, b) in e.iter_mut().zip(o.exps.iter()) {
            *a += *b;
        }
        Monomial { exps: e }
    }

    /// `self / o` if every exponent of `o` is at most the matching one here.
    pub fn div(&self, o: &Monomial) -> Option<Monomial> {
        let mut e = self.exps;
        for (a, b) in e.iter_mut().zip(o.exps.iter()) {
            *a = a.checked_sub(*b)?;
        }
        Some(Monomial { exps: e })
    }

    /// Smallest arity that can hold this monomial.
    pub fn used_arity(&self) -> usize {
        self.exps.iter().rposition(|&e| e > 0).map_or(0, |i| i + 1)
    }
}

/// Graded lexicographic: total degree first, then exponents from x₁ on.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub(crate) const VAR_NAMES: [&str; MAX_ARITY] = ["x1", "x2", "x3", "y1", "y2", "y3"];

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", VAR_NAMES[i])?;
            } else {
                write!(f, "{}^{}", VAR_NAMES[i], e)?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// All exponent triples of total degree `n`, in ascending monomial order.
pub fn monomials_of_degree(n: u8) -> Vec<Monomial> {
    let mut out = Vec::new();
    for a in 0..=n {
        for b in 0..=(n - a) {
            out.push(Monomial::x(a, b, n - a - b));
        }
    }
    out.sort();
    out
}
