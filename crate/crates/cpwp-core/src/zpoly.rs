//! Integer-coefficient polynomials, internal to the crate.
//!
//! The rational layer delegates here whenever fraction-free arithmetic
//! matters: the primitive remainder sequence behind `Poly::gcd`, sign
//! evaluation inside Sturm chains, and the factoring machinery.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::Poly;
use crate::rat::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct ZPoly {
    /// Coefficients by ascending power, no trailing zeros.
    pub coeffs: Vec<BigInt>,
}

impl ZPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        ZPoly { coeffs }
    }

    pub fn zero() -> Self {
        ZPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        ZPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> &BigInt {
        self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    pub fn is_monic(&self) -> bool {
        !self.is_zero() && self.lc().is_one()
    }

    /// Split a rational polynomial as `p = scale * prim` with `prim`
    /// primitive over the integers, `scale > 0`, and the sign of the
    /// leading coefficient preserved in `prim`.
    pub fn from_poly(p: &Poly) -> (ZPoly, Rat) {
        if p.is_zero() {
            return (ZPoly::zero(), Rat::one());
        }
        let mut lcm = BigInt::one();
        for c in p.coeffs() {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = p
            .coeffs()
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let g = ZPoly::new(ints);
        let content = g.content();
        let prim = g.div_scalar_exact(&content);
        (prim, Rat::new(content, lcm))
    }

    pub fn to_poly(&self) -> Poly {
        Poly::from_rat_coeffs(
            self.coeffs
                .iter()
                .map(|c| Rat::from_integer(c.clone()))
                .collect(),
        )
    }

    /// Positive gcd of all coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn primitive_part(&self) -> ZPoly {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let c = self.content();
        self.div_scalar_exact(&c)
    }

    pub fn neg(&self) -> ZPoly {
        ZPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &ZPoly) -> ZPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
            let b = other.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
            out.push(a - b);
        }
        ZPoly::new(out)
    }

    pub fn mul(&self, other: &ZPoly) -> ZPoly {
        if self.is_zero() || other.is_zero() {
            return ZPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ZPoly::new(out)
    }

    pub fn mul_scalar(&self, k: &BigInt) -> ZPoly {
        ZPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn div_scalar_exact(&self, k: &BigInt) -> ZPoly {
        ZPoly {
            coeffs: self.coeffs.iter().map(|c| c / k).collect(),
        }
    }

    /// Pseudo-remainder: `lc(d)^(deg(self) - deg(d) + 1) * self  mod  d`,
    /// exact over the integers. Requires `deg(self) >= deg(d)`, `d` nonzero.
    pub fn pseudo_rem(&self, d: &ZPoly) -> ZPoly {
        let dd = d.degree().expect("pseudo_rem by zero");
        let mut r = self.clone();
        let mut steps = 0usize;
        let e = self.degree().expect("pseudo_rem of zero") - dd + 1;
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let shift = rd - dd;
            let lead = r.lc().clone();
            // r = lc(d)*r - lead*x^shift*d
            let mut out = vec![BigInt::zero(); rd + 1];
            for (i, c) in r.coeffs.iter().enumerate() {
                out[i] = c * d.lc();
            }
            for (i, c) in d.coeffs.iter().enumerate() {
                out[i + shift] -= c * &lead;
            }
            r = ZPoly::new(out);
            steps += 1;
        }
        // Top up to the exact pseudo-remainder power.
        for _ in steps..e {
            r = r.mul_scalar(d.lc());
        }
        r
    }

    /// Quotient of an exact division by a monic polynomial, or `None`
    /// when the remainder is nonzero.
    pub fn div_exact_monic(&self, g: &ZPoly) -> Option<ZPoly> {
        debug_assert!(g.is_monic());
        let gd = g.degree().expect("division by zero");
        if self.is_zero() {
            return Some(ZPoly::zero());
        }
        let sd = self.degree().unwrap();
        if sd < gd {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); sd - gd + 1];
        for k in (0..quot.len()).rev() {
            let q = rem[k + gd].clone();
            if !q.is_zero() {
                for (i, c) in g.coeffs.iter().enumerate() {
                    rem[k + i] -= c * &q;
                }
            }
            quot[k] = q;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(ZPoly::new(quot))
        } else {
            None
        }
    }

    /// Sign of the value at the rational `num/den` (`den > 0`), without
    /// building rationals: Horner on `den^deg * value`.
    pub fn sign_at(&self, num: &BigInt, den: &BigInt) -> i8 {
        debug_assert!(den.is_positive());
        if self.is_zero() {
            return 0;
        }
        let mut acc = self.lc().clone();
        let mut dpow = BigInt::one();
        for c in self.coeffs.iter().rev().skip(1) {
            dpow *= den;
            acc = acc * num + c * &dpow;
        }
        sign_big(&acc)
    }

    pub fn sign_at_neg_inf(&self) -> i8 {
        if self.is_zero() {
            return 0;
        }
        let s = sign_big(self.lc());
        if self.degree().unwrap() % 2 == 0 {
            s
        } else {
            -s
        }
    }

    pub fn sign_at_pos_inf(&self) -> i8 {
        if self.is_zero() {
            return 0;
        }
        sign_big(self.lc())
    }
}

pub(crate) fn sign_big(x: &BigInt) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Primitive gcd with positive leading coefficient, by the primitive
/// remainder sequence (contents stripped every step, so coefficients do
/// not blow up).
pub(crate) fn gcd_primitive(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_zero() {
        return positive_lc(b.primitive_part());
    }
    if b.is_zero() {
        return positive_lc(a.primitive_part());
    }
    let (mut r0, mut r1) = if a.degree() >= b.degree() {
        (a.primitive_part(), b.primitive_part())
    } else {
        (b.primitive_part(), a.primitive_part())
    };
    while !r1.is_zero() {
        let r2 = r0.pseudo_rem(&r1).primitive_part();
        r0 = r1;
        r1 = r2;
    }
    positive_lc(r0)
}

fn positive_lc(p: ZPoly) -> ZPoly {
    if !p.is_zero() && p.lc().is_negative() {
        p.neg()
    } else {
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(coeffs: &[i64]) -> ZPoly {
        ZPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn content_and_primitive() {
        let p = z(&[6, -9, 12]);
        assert_eq!(p.content(), BigInt::from(3));
        assert_eq!(p.primitive_part(), z(&[2, -3, 4]));
        let n = z(&[-6, -9]);
        assert_eq!(n.primitive_part(), z(&[-2, -3]));
    }

    #[test]
    fn pseudo_rem_matches_scaled_division() {
        // prem(x^2 - 2, 2x) = 4 * (x^2 - 2) mod 2x = -8
        let r = z(&[-2, 0, 1]).pseudo_rem(&z(&[0, 2]));
        assert_eq!(r, z(&[-8]));
    }

    #[test]
    fn gcd_of_common_factor() {
        // (x-1)^2 and (x-1)(x+1)
        let a = z(&[1, -2, 1]);
        let b = z(&[-1, 0, 1]);
        assert_eq!(gcd_primitive(&a, &b), z(&[-1, 1]));
    }

    #[test]
    fn monic_division() {
        let f = z(&[-2, 0, 1]).mul(&z(&[3, 1]));
        assert_eq!(f.div_exact_monic(&z(&[3, 1])), Some(z(&[-2, 0, 1])));
        assert_eq!(z(&[1, 1]).div_exact_monic(&z(&[0, 0, 1])), None);
        assert_eq!(z(&[-2, 0, 1]).div_exact_monic(&z(&[1, 1])), None);
    }

    #[test]
    fn sign_evaluation() {
        let p = z(&[1, -3, 0, 1]); // x^3 - 3x + 1
        assert_eq!(p.sign_at(&BigInt::from(0), &BigInt::from(1)), 1);
        assert_eq!(p.sign_at(&BigInt::from(1), &BigInt::from(2)), -1);
        assert_eq!(p.sign_at_neg_inf(), -1);
        assert_eq!(p.sign_at_pos_inf(), 1);
    }
}
