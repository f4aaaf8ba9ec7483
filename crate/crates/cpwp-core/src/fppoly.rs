//! Polynomials over a small prime field, internal to the factoring code.
//!
//! Primes stay well below 2^20, so coefficients fit in `u64` with `u128`
//! intermediates.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::zpoly::ZPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct FpPoly {
    pub coeffs: Vec<u64>,
    pub p: u64,
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = (acc as u128 * base as u128 % p as u128) as u64;
        }
        base = (base as u128 * base as u128 % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

fn mod_inv(a: u64, p: u64) -> u64 {
    mod_pow(a, p - 2, p)
}

impl FpPoly {
    pub fn new(mut coeffs: Vec<u64>, p: u64) -> Self {
        for c in &mut coeffs {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { coeffs, p }
    }

    pub fn zero(p: u64) -> Self {
        FpPoly { coeffs: Vec::new(), p }
    }

    pub fn constant(c: u64, p: u64) -> Self {
        FpPoly::new(vec![c], p)
    }

    pub fn from_zpoly(z: &ZPoly, p: u64) -> Self {
        let pb = BigInt::from(p);
        FpPoly::new(
            z.coeffs
                .iter()
                .map(|c| {
                    let mut r = c % &pb;
                    if r.is_negative() {
                        r += &pb;
                    }
                    r.to_u64().unwrap()
                })
                .collect(),
            p,
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> u64 {
        *self.coeffs.last().unwrap_or(&0)
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    #[cfg(test)]
    pub fn add(&self, other: &FpPoly) -> FpPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push((self.coeff(i) + other.coeff(i)) % self.p);
        }
        FpPoly::new(out, self.p)
    }

    pub fn sub(&self, other: &FpPoly) -> FpPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push((self.p + self.coeff(i) - other.coeff(i)) % self.p);
        }
        FpPoly::new(out, self.p)
    }

    pub fn sub_const(&self, a: u64) -> FpPoly {
        self.sub(&FpPoly::constant(a, self.p))
    }

    pub fn scale(&self, k: u64) -> FpPoly {
        FpPoly::new(
            self.coeffs
                .iter()
                .map(|c| (*c as u128 * k as u128 % self.p as u128) as u64)
                .collect(),
            self.p,
        )
    }

    pub fn mul(&self, other: &FpPoly) -> FpPoly {
        if self.is_zero() || other.is_zero() {
            return FpPoly::zero(self.p);
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = ((out[i + j] as u128 + a as u128 * b as u128)
                    % self.p as u128) as u64;
            }
        }
        FpPoly::new(out, self.p)
    }

    pub fn monic(&self) -> FpPoly {
        if self.is_zero() || self.lc() == 1 {
            return self.clone();
        }
        self.scale(mod_inv(self.lc(), self.p))
    }

    pub fn derivative(&self) -> FpPoly {
        if self.coeffs.len() <= 1 {
            return FpPoly::zero(self.p);
        }
        FpPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| (c as u128 * (i as u64 % self.p) as u128 % self.p as u128) as u64)
                .collect(),
            self.p,
        )
    }

    pub fn div_rem(&self, divisor: &FpPoly) -> (FpPoly, FpPoly) {
        let dd = divisor.degree().expect("mod-p division by zero");
        let inv = mod_inv(divisor.lc(), self.p);
        let mut rem = self.clone();
        let mut quot = vec![0u64; self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let q = (rem.lc() as u128 * inv as u128 % self.p as u128) as u64;
            let shift = rd - dd;
            quot[shift] = q;
            let mut t = vec![0u64; shift + dd + 1];
            for (i, &c) in divisor.coeffs.iter().enumerate() {
                t[i + shift] = (c as u128 * q as u128 % self.p as u128) as u64;
            }
            rem = rem.sub(&FpPoly::new(t, self.p));
        }
        (FpPoly::new(quot, self.p), rem)
    }

    pub fn div_exact(&self, divisor: &FpPoly) -> FpPoly {
        let (q, r) = self.div_rem(divisor);
        debug_assert!(r.is_zero());
        q
    }

    pub fn gcd(&self, other: &FpPoly) -> FpPoly {
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        while !r1.is_zero() {
            let (_, r) = r0.div_rem(&r1);
            r0 = r1;
            r1 = r;
        }
        r0.monic()
    }

    /// Bezout pair for coprime `a`, `b`: returns `(s, t)` with
    /// `s*a + t*b = 1`.
    pub fn bezout_coprime(a: &FpPoly, b: &FpPoly) -> (FpPoly, FpPoly) {
        let p = a.p;
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (FpPoly::constant(1, p), FpPoly::zero(p));
        let (mut t0, mut t1) = (FpPoly::zero(p), FpPoly::constant(1, p));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        debug_assert_eq!(r0.degree(), Some(0));
        let inv = mod_inv(r0.lc(), p);
        (s0.scale(inv), t0.scale(inv))
    }

    /// `self^exp mod modulus`.
    pub fn pow_mod(&self, mut exp: u64, modulus: &FpPoly) -> FpPoly {
        let mut base = self.div_rem(modulus).1;
        let mut acc = FpPoly::constant(1, self.p);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base).div_rem(modulus).1;
            }
            base = base.mul(&base).div_rem(modulus).1;
            exp >>= 1;
        }
        acc
    }
}

/// Full factorization of a monic squarefree polynomial mod p into monic
/// irreducible factors (Berlekamp).
pub(crate) fn berlekamp_factor(f: &FpPoly) -> Vec<FpPoly> {
    let n = match f.degree() {
        None | Some(0) => return Vec::new(),
        Some(1) => return vec![f.monic()],
        Some(n) => n,
    };
    let p = f.p;
    let f = f.monic();

    // Columns of the Frobenius matrix: x^(jp) mod f for j = 0..n.
    let x = FpPoly::new(vec![0, 1], p);
    let xp = x.pow_mod(p, &f);
    let mut cols = Vec::with_capacity(n);
    let mut cur = FpPoly::constant(1, p);
    for _ in 0..n {
        cols.push(cur.clone());
        cur = cur.mul(&xp).div_rem(&f).1;
    }

    let mut matrix = vec![vec![0u64; n]; n];
    for (j, col) in cols.iter().enumerate() {
        for i in 0..n {
            matrix[i][j] = col.coeff(i);
        }
    }
    for i in 0..n {
        matrix[i][i] = (matrix[i][i] + p - 1) % p;
    }

    let basis = nullspace(matrix, p);
    let r = basis.len();
    if r <= 1 {
        return vec![f];
    }

    let mut factors = vec![f];
    for vecco in &basis {
        if factors.len() == r {
            break;
        }
        let v = FpPoly::new(vecco.clone(), p);
        if v.degree().map_or(true, |d| d == 0) {
            continue;
        }
        let mut next = Vec::with_capacity(factors.len());
        for g in factors {
            if g.degree() == Some(1) {
                next.push(g);
                continue;
            }
            let mut rem = g;
            for a in 0..p {
                if rem.degree().map_or(true, |d| d == 0) {
                    break;
                }
                let d = rem.gcd(&v.sub_const(a));
                if let Some(dd) = d.degree() {
                    if dd > 0 && Some(dd) < rem.degree() {
                        rem = rem.div_exact(&d);
                        next.push(d);
                    }
                }
            }
            if rem.degree().map_or(false, |d| d > 0) {
                next.push(rem);
            }
        }
        factors = next;
    }
    factors.sort_by_key(|g| g.coeffs.clone());
    factors
}

/// Basis of the nullspace of `matrix` over F_p (matrix is square, row
/// major). Returns one coefficient vector per basis element.
fn nullspace(mut matrix: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let n = matrix.len();
    let mut pivot_of_col = vec![usize::MAX; n];
    let mut row = 0usize;
    for col in 0..n {
        let mut pivot = None;
        for r in row..n {
            if matrix[r][col] != 0 {
                pivot = Some(r);
                break;
            }
        }
        let Some(pr) = pivot else { continue };
        matrix.swap(row, pr);
        let inv = mod_inv(matrix[row][col], p);
        for c in 0..n {
            matrix[row][c] = (matrix[row][c] as u128 * inv as u128 % p as u128) as u64;
        }
        for r in 0..n {
            if r != row && matrix[r][col] != 0 {
                let k = matrix[r][col];
                for c in 0..n {
                    let sub = (k as u128 * matrix[row][c] as u128 % p as u128) as u64;
                    matrix[r][c] = (matrix[r][c] + p - sub) % p;
                }
            }
        }
        pivot_of_col[col] = row;
        row += 1;
        if row == n {
            break;
        }
    }

    let mut basis = Vec::new();
    for free in 0..n {
        if pivot_of_col[free] != usize::MAX {
            continue;
        }
        let mut v = vec![0u64; n];
        v[free] = 1;
        for col in 0..n {
            let pr = pivot_of_col[col];
            if pr != usize::MAX {
                let val = matrix[pr][free];
                if val != 0 {
                    v[col] = p - val;
                }
            }
        }
        basis.push(v);
    }
    basis
}
