//! Exact numbers of the form `(p + q√2) + i(p' + q'√2)` with rational `p, q`.
//!
//! Every constant matrix of the vector representation has entries in this
//! field, so commutators and basis changes can be compared with `==`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::{One, ToPrimitive, Zero};

/// `rat + irr·√2`
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Surd {
    pub rat: Rational64,
    pub irr: Rational64,
}

impl Surd {
    pub const fn new(rat: Rational64, irr: Rational64) -> Self {
        Self { rat, irr }
    }

    pub fn integer(n: i64) -> Self {
        Self::new(Rational64::from_integer(n), Rational64::zero())
    }

    /// `n/√2 = (n/2)·√2`
    pub fn over_sqrt2(n: i64) -> Self {
        Self::new(Rational64::zero(), Rational64::new(n, 2))
    }

    pub fn zero() -> Self {
        Self::integer(0)
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.irr.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        let rat = self.rat.to_f64().unwrap_or(f64::NAN);
        let irr = self.irr.to_f64().unwrap_or(f64::NAN);
        rat + irr * std::f64::consts::SQRT_2
    }
}

impl Add for Surd {
    type Output = Surd;
    fn add(self, o: Surd) -> Surd {
        Surd::new(self.rat + o.rat, self.irr + o.irr)
    }
}

impl Sub for Surd {
    type Output = Surd;
    fn sub(self, o: Surd) -> Surd {
        Surd::new(self.rat - o.rat, self.irr - o.irr)
    }
}

impl Neg for Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        Surd::new(-self.rat, -self.irr)
    }
}

impl Mul for Surd {
    type Output = Surd;
    fn mul(self, o: Surd) -> Surd {
        let two = Rational64::from_integer(2);
        Surd::new(
            self.rat * o.rat + two * self.irr * o.irr,
            self.rat * o.irr + self.irr * o.rat,
        )
    }
}

/// A complex number whose real and imaginary parts are [`Surd`]s.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Exact {
    pub re: Surd,
    pub im: Surd,
}

impl Exact {
    pub const fn new(re: Surd, im: Surd) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self::new(Surd::zero(), Surd::zero())
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    pub fn i() -> Self {
        Self::new(Surd::zero(), Surd::integer(1))
    }

    /// Gaussian integer `re + i·im`.
    pub fn gaussian(re: i64, im: i64) -> Self {
        Self::new(Surd::integer(re), Surd::integer(im))
    }

    pub fn int(n: i64) -> Self {
        Self::gaussian(n, 0)
    }

    /// `(re + i·im)/√2`
    pub fn gaussian_over_sqrt2(re: i64, im: i64) -> Self {
        Self::new(Surd::over_sqrt2(re), Surd::over_sqrt2(im))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }
}

impl Zero for Exact {
    fn zero() -> Self {
        Exact::zero()
    }
    fn is_zero(&self) -> bool {
        Exact::is_zero(self)
    }
}

impl One for Exact {
    fn one() -> Self {
        Exact::one()
    }
}

impl Add for Exact {
    type Output = Exact;
    fn add(self, o: Exact) -> Exact {
        Exact::new(self.re + o.re, self.im + o.im)
    }
}

impl AddAssign for Exact {
    fn add_assign(&mut self, o: Exact) {
        *self = *self + o;
    }
}

impl Sub for Exact {
    type Output = Exact;
    fn sub(self, o: Exact) -> Exact {
        Exact::new(self.re - o.re, self.im - o.im)
    }
}

impl Neg for Exact {
    type Output = Exact;
    fn neg(self) -> Exact {
        Exact::new(-self.re, -self.im)
    }
}

impl Mul for Exact {
    type Output = Exact;
    fn mul(self, o: Exact) -> Exact {
        Exact::new(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rat.is_zero(), self.irr.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.rat),
            (true, false) => write!(f, "{}√2", self.irr),
            (false, false) => write!(f, "({} + {}√2)", self.rat, self.irr),
        }
    }
}

impl fmt::Display for Exact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) => write!(f, "{} + {}i", self.re, self.im),
        }
    }
}
