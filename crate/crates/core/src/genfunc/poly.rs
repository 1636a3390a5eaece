//! Dense polynomials in t over arbitrary-precision rationals, with the exact
//! division needed by fraction-free elimination, and rational series
//! expansion.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Polynomial with trimmed coefficient vector, ascending powers of t. The
/// zero polynomial has no coefficients and its degree is None.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<BigRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// c * t^e with an integer coefficient.
    pub fn term_int(c: i64, e: usize) -> Self {
        Poly::term(BigRational::from_integer(BigInt::from(c)), e)
    }

    /// c * t^e.
    pub fn term(c: BigRational, e: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); e + 1];
        coeffs[e] = c;
        Poly { coeffs }
    }

    /// t^e.
    pub fn t_power(e: usize) -> Self {
        Poly::term_int(1, e)
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, e: usize) -> BigRational {
        self.coeffs
            .get(e)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Multiplication by t^e.
    pub fn shift_up(&self, e: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); e];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Exact polynomial division; None when the divisor is zero or the
    /// remainder is nonzero.
    pub fn exact_div(&self, den: &Poly) -> Option<Poly> {
        let dd = den.degree()?;
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let nd = self.degree().unwrap();
        if nd < dd {
            return None;
        }
        let lead = &den.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let c = &rem[i + dd] / lead;
            if !c.is_zero() {
                for (j, dc) in den.coeffs.iter().enumerate() {
                    let prod = &c * dc;
                    rem[i + j] -= prod;
                }
            }
            quot[i] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Poly::from_coeffs(quot))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let prod = a * b;
                coeffs[i + j] += prod;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(mut self) -> Poly {
        for c in &mut self.coeffs {
            *c = -c.clone();
        }
        self
    }
}

/// Canonical sparse text form: terms in ascending exponent joined with
/// signs, unit coefficients elided, e.g. `1 - 2*t^2` or `t^3`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if e == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if e == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// Truncated expansion of a rational function num/den with den(0) != 0; the
/// coefficient cache extends lazily and satisfies den * series = num to
/// every computed order.
#[derive(Clone, Debug)]
pub struct RationalSeries {
    num: Poly,
    den: Poly,
    cache: Vec<BigRational>,
}

impl RationalSeries {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(
            !den.coeff(0).is_zero(),
            "series denominator must have a nonzero constant term"
        );
        RationalSeries {
            num,
            den,
            cache: Vec::new(),
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn coefficient(&mut self, i: usize) -> BigRational {
        self.extend(i);
        self.cache[i].clone()
    }

    /// Coefficients of t^0..t^n.
    pub fn coefficients(&mut self, n: usize) -> Vec<BigRational> {
        self.extend(n);
        self.cache[..=n].to_vec()
    }

    fn extend(&mut self, upto: usize) {
        let d0 = self.den.coeff(0);
        let dd = self.den.degree().unwrap_or(0);
        for i in self.cache.len()..=upto {
            let mut c = self.num.coeff(i);
            for j in 1..=dd.min(i) {
                let prod = self.den.coeff(j) * &self.cache[i - j];
                c -= prod;
            }
            self.cache.push(c / &d0);
        }
    }
}
