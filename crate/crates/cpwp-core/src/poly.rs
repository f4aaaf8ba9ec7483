//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are stored by ascending power with no trailing zeros, so
//! the zero polynomial has exactly one encoding (an empty vector) and
//! `degree` is `None` for it. All arithmetic is exact; values are
//! immutable once built and cheap to share across threads.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::rat::{self, Rat};
use crate::zpoly::{self, ZPoly};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl core::fmt::Debug for Poly {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Poly {
    /// Build from coefficients by ascending power; trailing zeros are
    /// stripped so every value is normalized.
    pub fn from_rat_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Poly::from_rat_coeffs(coeffs.iter().map(|&c| rat::rat_int(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Poly::from_rat_coeffs(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Poly::from_int_coeffs(&[0, 1])
    }

    /// The polynomial `x - c`.
    pub fn x_minus(c: &Rat) -> Self {
        Poly::from_rat_coeffs(vec![-c.clone(), Rat::one()])
    }

    pub fn monomial(c: Rat, n: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); n + 1];
        coeffs[n] = c;
        Poly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().map_or(false, One::is_one)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, k: &Rat) -> Poly {
        if k.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Same polynomial divided by its leading coefficient. Panics on zero.
    pub fn monic(&self) -> Poly {
        let lc = self.leading_coeff().expect("monic of zero polynomial");
        if lc.is_one() {
            self.clone()
        } else {
            self.scale(&lc.recip())
        }
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact composition `self(inner(x))`.
    pub fn compose(&self, inner: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Poly::constant(c.clone());
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::from_rat_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat::rat_int(i as i64))
                .collect(),
        )
    }

    pub fn pow(&self, mut n: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division: returns `(q, r)` with `self = q*rhs + r` and
    /// `deg(r) < deg(rhs)`. Panics when `rhs` is zero.
    pub fn divmod(&self, rhs: &Poly) -> (Poly, Poly) {
        let dd = rhs.degree().expect("polynomial division by zero");
        if self.is_zero() {
            return (Poly::zero(), Poly::zero());
        }
        let sd = self.degree().unwrap();
        if sd < dd {
            return (Poly::zero(), self.clone());
        }
        let lc_inv = rhs.leading_coeff().unwrap().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); sd - dd + 1];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + dd] * &lc_inv;
            if !q.is_zero() {
                for (i, c) in rhs.coeffs.iter().enumerate() {
                    let t = c * &q;
                    rem[k + i] -= t;
                }
            }
            quot[k] = q;
        }
        (Poly::from_rat_coeffs(quot), Poly::from_rat_coeffs(rem))
    }

    /// Quotient when `rhs` divides `self` exactly, `None` otherwise.
    pub fn div_exact(&self, rhs: &Poly) -> Option<Poly> {
        let (q, r) = self.divmod(rhs);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    pub fn rem(&self, rhs: &Poly) -> Poly {
        self.divmod(rhs).1
    }

    /// Monic greatest common divisor. Computed fraction-free over the
    /// integers (primitive remainder sequence) to keep coefficients
    /// small. Panics when both arguments are zero.
    pub fn gcd(&self, other: &Poly) -> Poly {
        assert!(
            !(self.is_zero() && other.is_zero()),
            "gcd of two zero polynomials"
        );
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let (za, _) = ZPoly::from_poly(self);
        let (zb, _) = ZPoly::from_poly(other);
        zpoly::gcd_primitive(&za, &zb).to_poly().monic()
    }

    /// Monic squarefree polynomial with the same roots as `self`
    /// (`self / gcd(self, self')`, made monic). Panics on zero.
    pub fn squarefree_part(&self) -> Poly {
        assert!(!self.is_zero(), "squarefree part of zero polynomial");
        if self.degree() == Some(0) {
            return Poly::one();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.monic();
        }
        self.div_exact(&g)
            .expect("gcd divides its argument")
            .monic()
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        Poly::from_rat_coeffs(out)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        Poly::from_rat_coeffs(out)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = a * b;
                out[i + j] += t;
            }
        }
        Poly::from_rat_coeffs(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn p(coeffs: &[i64]) -> Poly {
        Poly::from_int_coeffs(coeffs)
    }

    #[test]
    fn normalization() {
        assert!(Poly::from_int_coeffs(&[0, 0, 0]).is_zero());
        assert_eq!(Poly::from_int_coeffs(&[5, 1, 0]).degree(), Some(1));
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(Poly::monomial(Rat::zero(), 4), Poly::zero());
    }

    #[test]
    fn product_of_linear_and_quadratic() {
        // (x-1)(x^2-2) = x^3 - x^2 - 2x + 2
        assert_eq!(&p(&[-1, 1]) * &p(&[-2, 0, 1]), p(&[2, -2, -1, 1]));
    }

    #[test]
    fn additive_identity() {
        let q = p(&[3, 0, -7, 2]);
        assert_eq!(&q + &Poly::zero(), q);
    }

    #[test]
    fn subtraction_of_pieces() {
        // (x^6 + 1) - (x^4 - 1/2 x^3 - 7/2 x^2 - x + 6)
        let a = p(&[1, 0, 0, 0, 0, 0, 1]);
        let b = Poly::from_rat_coeffs(vec![
            rat(6, 1),
            rat(-1, 1),
            rat(-7, 2),
            rat(-1, 2),
            rat(1, 1),
        ]);
        let expect = Poly::from_rat_coeffs(vec![
            rat(-5, 1),
            rat(1, 1),
            rat(7, 2),
            rat(1, 2),
            rat(-1, 1),
            rat(0, 1),
            rat(1, 1),
        ]);
        assert_eq!(&a - &b, expect);
    }

    #[test]
    fn evaluation() {
        assert_eq!(p(&[1, -3, 0, 1]).eval(&rat(0, 1)), rat(1, 1));
        assert_eq!(p(&[9, 4, 4]).eval(&rat(0, 1)), rat(9, 1));
        assert_eq!(p(&[-2, 0, 1]).eval(&rat(3, 2)), rat(1, 4));
    }

    #[test]
    fn composition() {
        // (x^2 - 2) o (2x^3 + x^2 - 6x - 3)
        let outer = p(&[-2, 0, 1]);
        let inner = p(&[-3, -6, 1, 2]);
        assert_eq!(outer.compose(&inner), p(&[7, 36, 30, -24, -23, 4, 4]));
        // identity composition
        let q = p(&[5, -1, 0, 3]);
        assert_eq!(q.compose(&Poly::x()), q);
        // (x^2 - 2) o (x^4 + 4x^3 - 2x^2)
        let inner2 = p(&[0, 0, -2, 4, 1]);
        assert_eq!(
            outer.compose(&inner2),
            p(&[-2, 0, 0, 0, 4, -16, 12, 8, 1])
        );
    }

    #[test]
    fn derivatives() {
        assert_eq!(p(&[1, -3, 0, 1]).derivative(), p(&[-3, 0, 3]));
        assert_eq!(p(&[9]).derivative(), Poly::zero());
        assert_eq!(p(&[-2, 0, 1]).derivative(), p(&[0, 2]));
    }

    #[test]
    fn division_with_zero_remainder() {
        // -x^6 + x^4 - 1/2 x^3 - 7/2 x^2 - x + 5 = -(x-1)(x^5 + x^4 + 1/2 x^2 + 4x + 5)
        let a = Poly::from_rat_coeffs(vec![
            rat(5, 1),
            rat(-1, 1),
            rat(-7, 2),
            rat(-1, 2),
            rat(1, 1),
            rat(0, 1),
            rat(-1, 1),
        ]);
        let (q, r) = a.divmod(&p(&[-1, 1]));
        let quintic = Poly::from_rat_coeffs(vec![
            rat(5, 1),
            rat(4, 1),
            rat(1, 2),
            rat(0, 1),
            rat(1, 1),
            rat(1, 1),
        ]);
        assert_eq!(q, -&quintic);
        assert!(r.is_zero());
    }

    #[test]
    fn division_basics() {
        let q = p(&[3, -1, 2, 5]);
        assert_eq!(q.divmod(&q), (Poly::one(), Poly::zero()));
        assert_eq!(
            p(&[-2, 0, 1]).divmod(&p(&[-1, 1])),
            (p(&[1, 1]), p(&[-1]))
        );
        assert_eq!(p(&[-2, 0, 1]).div_exact(&p(&[-1, 1])), None);
    }

    #[test]
    #[should_panic(expected = "division by zero")]
    fn division_by_zero_panics() {
        let _ = p(&[1, 1]).divmod(&Poly::zero());
    }

    #[test]
    fn gcds() {
        let q = p(&[2, -6, 0, 2]);
        assert_eq!(q.gcd(&Poly::zero()), p(&[1, -3, 0, 1]));
        // (x-1)^2 vs (x-1)(x+1)
        assert_eq!(p(&[1, -2, 1]).gcd(&p(&[-1, 0, 1])), p(&[-1, 1]));
        // squarefree cubic vs its derivative
        assert_eq!(p(&[1, -3, 0, 1]).gcd(&p(&[-3, 0, 3])), Poly::one());
    }

    #[test]
    fn squarefree_parts() {
        // (x-1)^2 (x+2) -> (x-1)(x+2)
        let q = &p(&[1, -2, 1]) * &p(&[2, 1]);
        assert_eq!(q.squarefree_part(), p(&[-2, 1, 1]));
        // already squarefree, non-monic: comes back monic
        assert_eq!(p(&[-4, 0, 2]).squarefree_part(), p(&[-2, 0, 1]));
        assert_eq!(p(&[1, -3, 0, 1]).squarefree_part(), p(&[1, -3, 0, 1]));
    }
}
