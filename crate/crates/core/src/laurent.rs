//! Exact Laurent polynomials in the bracket variable `A`, and the quarter-integer
//! exponent polynomials in `t` that hold Jones polynomials.
//!
//! Coefficients are `i64`. Every arithmetic path is checked: the `checked_*`
//! methods report [`Error::Overflow`], and the operator impls panic on
//! overflow instead of wrapping.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::iter::{Product, Sum};
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Integer Laurent polynomial in `A`. The zero polynomial is the empty map.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `coeff * A^exp`.
    pub fn monomial(coeff: i64, exp: i32) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(exp, coeff);
        }
        Self { terms }
    }

    /// The variable `A`.
    pub fn a() -> Self {
        Self::monomial(1, 1)
    }

    /// `δ = -A^2 - A^-2`, the value of a disjoint unknot.
    pub fn delta() -> Self {
        Self::from_terms([(2, -1), (-2, -1)])
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing repeats.
    ///
    /// Panics if the coefficients overflow.
    pub fn from_terms<I: IntoIterator<Item = (i32, i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c).expect("coefficient overflow");
        }
        p
    }

    fn add_term(&mut self, exp: i32, coeff: i64) -> Result<()> {
        if coeff == 0 {
            return Ok(());
        }
        let entry = self.terms.entry(exp).or_insert(0);
        *entry = entry.checked_add(coeff).ok_or(Error::Overflow)?;
        if *entry == 0 {
            self.terms.remove(&exp);
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0) == Some(&1)
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(exponent, coefficient)` pairs in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn max_exponent(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_exponent(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c)?;
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let mut out = Self::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                let c = c1.checked_mul(c2).ok_or(Error::Overflow)?;
                let e = e1.checked_add(e2).ok_or(Error::Overflow)?;
                out.add_term(e, c)?;
            }
        }
        Ok(out)
    }

    /// Multiplies by `coeff * A^exp`.
    pub fn checked_mul_monomial(&self, coeff: i64, exp: i32) -> Result<Self> {
        let mut terms = BTreeMap::new();
        if coeff == 0 {
            return Ok(Self { terms });
        }
        for (e, c) in self.terms() {
            let c = c.checked_mul(coeff).ok_or(Error::Overflow)?;
            let e = e.checked_add(exp).ok_or(Error::Overflow)?;
            terms.insert(e, c);
        }
        Ok(Self { terms })
    }

    pub fn checked_pow(&self, k: u32) -> Result<Self> {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.checked_mul(self)?;
        }
        Ok(acc)
    }

    pub fn pow(&self, k: u32) -> Self {
        self.checked_pow(k).expect("coefficient overflow")
    }

    /// The substitution `A -> A^-1`.
    pub fn mirror(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, &c)| (-e, c)).collect(),
        }
    }

    /// Coefficients from the highest exponent down to the lowest, read on the
    /// support lattice: the stride is the gcd of the gaps between consecutive
    /// exponents, and interior zeros are kept.
    pub fn coefficient_string(&self) -> Result<Vec<i64>> {
        let exps: Vec<i32> = self.terms.keys().rev().copied().collect();
        let (&top, &bottom) = match (exps.first(), exps.last()) {
            (Some(t), Some(b)) => (t, b),
            _ => return Err(Error::EmptyPolynomial),
        };
        let stride = exps
            .windows(2)
            .map(|w| (w[0] - w[1]) as u32)
            .fold(0, gcd)
            .max(1) as i32;
        let mut out = Vec::new();
        let mut e = top;
        while e >= bottom {
            out.push(self.coeff(e));
            e -= stride;
        }
        Ok(out)
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `δ^k`.
pub fn delta_power(k: u32) -> LaurentPoly {
    LaurentPoly::delta().pow(k)
}

/// `V(t) = (-A^-3)^writhe <L>` with `A = t^(-1/4)`.
pub fn jones_normalize(bracket: &LaurentPoly, writhe: i32) -> QuarterPoly {
    let sign = if writhe.rem_euclid(2) == 0 { 1 } else { -1 };
    let shifted = bracket
        .checked_mul_monomial(sign, -3 * writhe)
        .expect("coefficient overflow");
    QuarterPoly {
        terms: shifted.terms().map(|(e, c)| (-e, c)).collect(),
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// Renders as `-A^5 - A^-3 + A^-7`, highest exponent first.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().rev().map(|(&e, &c)| (c, e)), |f, e| match e {
            0 => Ok(false),
            1 => f.write_str("A").map(|_| true),
            _ => write!(f, "A^{e}").map(|_| true),
        })
    }
}

fn write_terms<I, F>(f: &mut fmt::Formatter<'_>, terms: I, mut var: F) -> fmt::Result
where
    I: Iterator<Item = (i64, i32)>,
    F: FnMut(&mut fmt::Formatter<'_>, i32) -> core::result::Result<bool, fmt::Error>,
{
    let mut first = true;
    for (c, e) in terms {
        if first {
            if c < 0 {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if c < 0 { " - " } else { " + " })?;
        }
        first = false;
        let abs = c.unsigned_abs();
        if abs != 1 || e == 0 {
            write!(f, "{abs}")?;
        }
        var(f, e)?;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_add(rhs).expect("coefficient overflow")
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in rhs.terms() {
            self.add_term(e, c).expect("coefficient overflow");
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.checked_mul_monomial(-1, 0).expect("coefficient overflow")
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs).expect("coefficient overflow")
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, p| &acc * &p)
    }
}

/// Integer polynomial in `t` whose exponents are multiples of `1/4`.
///
/// Exponents are stored as numerators over the fixed denominator 4.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QuarterPoly {
    terms: BTreeMap<i32, i64>,
}

impl QuarterPoly {
    pub fn one() -> Self {
        Self {
            terms: [(0, 1)].into_iter().collect(),
        }
    }

    /// Builds from `(numerator over 4, coefficient)` pairs.
    pub fn from_quarter_terms<I: IntoIterator<Item = (i32, i64)>>(terms: I) -> Self {
        let p = LaurentPoly::from_terms(terms);
        Self { terms: p.terms }
    }

    /// Builds from integer `t` exponents.
    pub fn from_integer_terms<I: IntoIterator<Item = (i32, i64)>>(terms: I) -> Self {
        Self::from_quarter_terms(terms.into_iter().map(|(e, c)| (4 * e, c)))
    }

    /// `(numerator over 4, coefficient)` pairs in ascending order.
    pub fn quarter_terms(&self) -> impl DoubleEndedIterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn is_integral(&self) -> bool {
        self.terms.keys().all(|e| e % 4 == 0)
    }

    /// `(exponent, coefficient)` pairs when every exponent is an integer.
    pub fn integer_terms(&self) -> Option<Vec<(i32, i64)>> {
        self.is_integral()
            .then(|| self.quarter_terms().map(|(e, c)| (e / 4, c)).collect())
    }
}

impl fmt::Debug for QuarterPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuarterPoly({self})")
    }
}

/// Renders as `t + t^3 - t^4`, lowest exponent first; fractional exponents
/// print as `t^(-1/2)`.
impl fmt::Display for QuarterPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().map(|(&e, &c)| (c, e)), |f, e| {
            if e == 0 {
                return Ok(false);
            }
            if e % 4 == 0 {
                let n = e / 4;
                if n == 1 {
                    f.write_str("t")?;
                } else {
                    write!(f, "t^{n}")?;
                }
            } else {
                let g = gcd(e.unsigned_abs(), 4) as i32;
                write!(f, "t^({}/{})", e / g, 4 / g)?;
            }
            Ok(true)
        })
    }
}
