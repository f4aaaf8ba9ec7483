//! Factorization of rational polynomials into a rational unit times monic
//! irreducible factors with multiplicities.
//!
//! Pipeline: Yun's squarefree decomposition, a rational-root fast path
//! for linear factors, then for each squarefree part a classical
//! integer-side factorization — reduce mod a small prime, Berlekamp,
//! Hensel lift to a coefficient bound, subset recombination. Non-monic
//! integer inputs are made monic by the substitution `y = a*x` first,
//! which keeps the lifting code single-case.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::fppoly::{berlekamp_factor, FpPoly};
use crate::poly::Poly;
use crate::rat::Rat;
use crate::zpoly::ZPoly;

/// A complete factorization `unit * prod(base_i ^ mult_i)` with pairwise
/// distinct monic irreducible bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Rat,
    pub factors: Vec<(Poly, u32)>,
}

impl Factorization {
    /// Multiply the factorization back out.
    pub fn reconstruct(&self) -> Poly {
        let mut acc = Poly::constant(self.unit.clone());
        for (base, mult) in &self.factors {
            acc = &acc * &base.pow(*mult);
        }
        acc
    }
}

/// Yun's squarefree decomposition: pairwise-coprime squarefree monic
/// parts, emitted by ascending multiplicity. The rational unit (the
/// leading coefficient of `p`) is the caller's business. Panics on zero.
pub fn yun_squarefree(p: &Poly) -> Vec<(Poly, u32)> {
    assert!(!p.is_zero(), "squarefree decomposition of zero");
    let f = p.monic();
    if f.degree() == Some(0) {
        return Vec::new();
    }
    let df = f.derivative();
    let g = f.gcd(&df);
    if g.degree() == Some(0) {
        return vec![(f, 1)];
    }
    let mut out = Vec::new();
    let mut w = f.div_exact(&g).expect("gcd divides");
    let mut z = &df.div_exact(&g).expect("gcd divides") - &w.derivative();
    let mut mult = 1u32;
    while w.degree().map_or(false, |d| d > 0) {
        let h = w.gcd(&z);
        if h.degree().map_or(false, |d| d > 0) {
            out.push((h.clone(), mult));
        }
        w = w.div_exact(&h).expect("gcd divides");
        z = &z.div_exact(&h).expect("gcd divides") - &w.derivative();
        mult += 1;
    }
    out
}

/// Complete irreducible factorization over the rationals. Factors are
/// sorted by degree, then by coefficients from the highest power down,
/// so equal inputs produce structurally equal outputs. Panics on zero.
pub fn factor_rationals(p: &Poly) -> Factorization {
    assert!(!p.is_zero(), "factorization of zero");
    let unit = p.leading_coeff().unwrap().clone();
    let mut factors: Vec<(Poly, u32)> = Vec::new();
    for (part, mult) in yun_squarefree(p) {
        for base in factor_squarefree_monic(&part) {
            factors.push((base, mult));
        }
    }
    factors.sort_by(|(a, _), (b, _)| {
        a.degree().cmp(&b.degree()).then_with(|| {
            let da = a.degree().unwrap_or(0);
            for i in (0..=da).rev() {
                match a.coeff(i).cmp(&b.coeff(i)) {
                    core::cmp::Ordering::Equal => continue,
                    other => return other,
                }
            }
            core::cmp::Ordering::Equal
        })
    });
    Factorization { unit, factors }
}

/// Irreducible monic factors of a squarefree monic rational polynomial.
fn factor_squarefree_monic(f: &Poly) -> Vec<Poly> {
    let mut out = Vec::new();
    let mut rest = f.clone();

    // Linear factors first: the common case for breakpoint polynomials.
    for root in rational_roots(&rest) {
        let lin = Poly::x_minus(&root);
        rest = rest.div_exact(&lin).expect("verified root");
        out.push(lin);
    }
    match rest.degree() {
        None | Some(0) => return out,
        Some(1) => {
            out.push(rest.monic());
            return out;
        }
        Some(2) => {
            // No rational roots left, so irreducible.
            out.push(rest.monic());
            return out;
        }
        _ => {}
    }

    let (z, _) = ZPoly::from_poly(&rest);
    for g in factor_squarefree_primitive_z(&z) {
        out.push(g.to_poly().monic());
    }
    out
}

/// All rational roots of a squarefree monic polynomial. Complete for
/// degrees one and two; for higher degrees a capped divisor enumeration
/// is used and misses are caught by the full factorization afterwards.
fn rational_roots(f: &Poly) -> Vec<Rat> {
    let mut roots = Vec::new();
    match f.degree() {
        None | Some(0) => return roots,
        Some(1) => {
            roots.push(-f.coeff(0) / f.coeff(1));
            return roots;
        }
        Some(2) => {
            // Exact discriminant test on a*x^2 + b*x + c.
            let (a, b, c) = (f.coeff(2), f.coeff(1), f.coeff(0));
            let disc = &b * &b - Rat::from_integer(BigInt::from(4)) * &a * &c;
            if disc.is_negative() {
                return roots;
            }
            if let Some(sq) = rat_sqrt(&disc) {
                let two_a = Rat::from_integer(BigInt::from(2)) * &a;
                let r1 = (-&b + &sq) / &two_a;
                let r2 = (-&b - &sq) / &two_a;
                if r1 == r2 {
                    roots.push(r1);
                } else {
                    roots.push(r1.clone().min(r2.clone()));
                    roots.push(r1.max(r2));
                }
            }
            return roots;
        }
        _ => {}
    }

    let (z, _) = ZPoly::from_poly(f);
    let mut rest = z;
    if rest.coeffs.first().map_or(false, Zero::is_zero) {
        roots.push(Rat::zero());
        rest = ZPoly::new(rest.coeffs[1..].to_vec());
    }
    if rest.is_zero() || rest.degree() == Some(0) {
        return roots;
    }
    let (Some(nums), Some(dens)) = (
        bounded_divisors(&rest.coeffs[0]),
        bounded_divisors(rest.lc()),
    ) else {
        return roots;
    };
    for d in &dens {
        for n in &nums {
            if !n.gcd(d).is_one() {
                continue;
            }
            for cand_num in [n.clone(), -n] {
                if rest.sign_at(&cand_num, d) == 0 {
                    roots.push(Rat::new(cand_num, d.clone()));
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

/// Exact square root of a nonnegative rational, when it is rational.
fn rat_sqrt(q: &Rat) -> Option<Rat> {
    let ns = q.numer().sqrt();
    let ds = q.denom().sqrt();
    if &(&ns * &ns) == q.numer() && &(&ds * &ds) == q.denom() {
        Some(Rat::new(ns, ds))
    } else {
        None
    }
}

/// Positive divisors of `n`, or `None` when `n` is too composite to
/// enumerate cheaply (trial division up to 10^4; a surviving cofactor is
/// treated as one atom, which only makes the list incomplete, never
/// wrong).
fn bounded_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    const MAX_DIVISORS: usize = 4096;
    let mut n = n.abs();
    if n.is_zero() {
        return None;
    }
    let mut atoms: Vec<(BigInt, u32)> = Vec::new();
    let mut d = BigInt::from(2);
    while &(&d * &d) <= &n && d < BigInt::from(10_000) {
        if (&n % &d).is_zero() {
            let mut e = 0u32;
            while (&n % &d).is_zero() {
                n /= &d;
                e += 1;
            }
            atoms.push((d.clone(), e));
        }
        d += 1;
    }
    if !n.is_one() {
        atoms.push((n, 1));
    }
    let mut divisors = vec![BigInt::one()];
    for (prime, e) in atoms {
        let mut next = Vec::with_capacity(divisors.len() * (e as usize + 1));
        for dv in &divisors {
            let mut pw = BigInt::one();
            for _ in 0..=e {
                next.push(dv * &pw);
                pw *= &prime;
            }
        }
        if next.len() > MAX_DIVISORS {
            return None;
        }
        divisors = next;
    }
    Some(divisors)
}

/// Factor a squarefree primitive integer polynomial of degree >= 3 into
/// irreducible primitive integer polynomials.
fn factor_squarefree_primitive_z(f: &ZPoly) -> Vec<ZPoly> {
    if f.is_monic() {
        return factor_squarefree_monic_z(f);
    }
    // Substitute y = a*x to get a monic polynomial, factor, map back.
    let a = f.lc().clone();
    let n = f.degree().unwrap();
    let mut coeffs = Vec::with_capacity(n + 1);
    for (i, c) in f.coeffs.iter().enumerate() {
        if i == n {
            coeffs.push(BigInt::one());
        } else {
            coeffs.push(c * a.pow((n - 1 - i) as u32));
        }
    }
    let monic = ZPoly::new(coeffs);
    factor_squarefree_monic_z(&monic)
        .into_iter()
        .map(|g| {
            // g(a*x), made primitive again.
            let mapped = ZPoly::new(
                g.coeffs
                    .iter()
                    .enumerate()
                    .map(|(i, c)| c * a.pow(i as u32))
                    .collect(),
            );
            mapped.primitive_part()
        })
        .collect()
}

fn factor_squarefree_monic_z(f: &ZPoly) -> Vec<ZPoly> {
    let n = f.degree().expect("factoring zero");
    if n <= 1 {
        return vec![f.clone()];
    }

    let (p, modular) = {
        let mut p = 2u64;
        loop {
            p = next_prime(p);
            let fp = FpPoly::from_zpoly(f, p);
            if fp.degree() != f.degree() {
                continue;
            }
            if fp.gcd(&fp.derivative()).degree() == Some(0) {
                break (p, fp);
            }
        }
    };

    let mod_factors = berlekamp_factor(&modular);
    if mod_factors.len() == 1 {
        return vec![f.clone()];
    }

    // Lift to p^k beyond twice the factor coefficient bound.
    let bound = factor_coeff_bound(f);
    let mut modulus = BigInt::from(p);
    let target = BigInt::from(2) * &bound + 1;
    while modulus < target {
        modulus *= p;
    }
    let lifted = hensel_lift_all(f, &mod_factors, p, &modulus);
    recombine(f, lifted, &modulus)
}

/// Bound on the absolute value of any coefficient of any monic factor of
/// the monic integer polynomial `f` (Mignotte-style, deliberately loose).
fn factor_coeff_bound(f: &ZPoly) -> BigInt {
    let sum_sq: BigInt = f.coeffs.iter().map(|c| c * c).sum();
    let norm = sum_sq.sqrt() + 1;
    let n = f.degree().unwrap();
    norm << (n + 1)
}

fn next_prime(after: u64) -> u64 {
    let mut c = after + 1;
    loop {
        if is_prime(c) {
            return c;
        }
        c += 1;
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Lift the mod-p factorization of monic `f` to the given modulus
/// (a power of p). Returned factors are monic, coefficients centered.
fn hensel_lift_all(f: &ZPoly, factors: &[FpPoly], p: u64, modulus: &BigInt) -> Vec<ZPoly> {
    if factors.len() == 1 {
        return vec![centered(f, modulus)];
    }
    let g_mod = factors[0].clone();
    let mut h_mod = FpPoly::constant(1, p);
    for other in &factors[1..] {
        h_mod = h_mod.mul(other);
    }
    let (g, h) = hensel_lift_pair(f, &g_mod, &h_mod, p, modulus);
    let mut out = vec![g];
    out.extend(hensel_lift_all(&h, &factors[1..], p, modulus));
    out
}

/// Linear Hensel lifting of a coprime monic pair `f = g*h (mod p)` up to
/// at least `target` (a power of p).
fn hensel_lift_pair(
    f: &ZPoly,
    g0: &FpPoly,
    h0: &FpPoly,
    p: u64,
    target: &BigInt,
) -> (ZPoly, ZPoly) {
    // s*g0 + t*h0 = 1 once and for all; the correction at each level is
    // u = t*d mod g0 and v = (d - u*h0)/g0, both mod p.
    let (_s, t) = FpPoly::bezout_coprime(g0, h0);
    let mut g = lift_fp(g0);
    let mut h = lift_fp(h0);
    let mut m = BigInt::from(p);
    while &m < target {
        let next = &m * p;
        let e = f.sub(&g.mul(&h));
        let d = FpPoly::from_zpoly(&e.div_scalar_exact(&m), p);
        if !d.is_zero() {
            let (_, u) = t.mul(&d).div_rem(g0);
            let v = d.sub(&u.mul(h0)).div_exact(g0);
            g = g.sub(&lift_fp(&u).mul_scalar(&m).neg());
            h = h.sub(&lift_fp(&v).mul_scalar(&m).neg());
            g = centered(&g, &next);
            h = centered(&h, &next);
        }
        m = next;
    }
    (centered(&g, &m), centered(&h, &m))
}

fn lift_fp(f: &FpPoly) -> ZPoly {
    let p = BigInt::from(f.p);
    let half = &p / 2;
    ZPoly::new(
        f.coeffs
            .iter()
            .map(|&c| {
                let c = BigInt::from(c);
                if c > half {
                    c - &p
                } else {
                    c
                }
            })
            .collect(),
    )
}

fn centered(f: &ZPoly, modulus: &BigInt) -> ZPoly {
    let half = modulus / 2;
    ZPoly::new(
        f.coeffs
            .iter()
            .map(|c| {
                let mut r = c.mod_floor(modulus);
                if r > half {
                    r -= modulus;
                }
                r
            })
            .collect(),
    )
}

/// Zassenhaus recombination: find the subsets of lifted factors whose
/// centered products divide `f` over the integers.
fn recombine(f: &ZPoly, lifted: Vec<ZPoly>, modulus: &BigInt) -> Vec<ZPoly> {
    let mut remaining = f.clone();
    let mut avail = lifted;
    let mut out = Vec::new();
    let mut size = 1usize;
    while 2 * size <= avail.len() {
        let mut advanced = false;
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let deg_sum: usize = combo
                .iter()
                .map(|&i| avail[i].degree().unwrap())
                .sum();
            if remaining.degree().map_or(false, |d| deg_sum * 2 <= d) {
                let mut prod = ZPoly::one();
                for &i in &combo {
                    prod = centered(&prod.mul(&avail[i]), modulus);
                }
                if let Some(q) = remaining.div_exact_monic(&prod) {
                    out.push(prod);
                    remaining = q;
                    let mut kept = Vec::new();
                    for (i, g) in avail.into_iter().enumerate() {
                        if !combo.contains(&i) {
                            kept.push(g);
                        }
                    }
                    avail = kept;
                    advanced = true;
                    break;
                }
            }
            if !next_combination(&mut combo, avail.len()) {
                break;
            }
        }
        if !advanced {
            size += 1;
        }
    }
    if remaining.degree().map_or(false, |d| d > 0) {
        out.push(remaining);
    }
    out
}

/// Advance `combo` to the next lexicographic k-subset of `0..n`.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < n - (k - i) {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn p(coeffs: &[i64]) -> Poly {
        Poly::from_int_coeffs(coeffs)
    }

    #[test]
    fn yun_on_square_times_quadratic() {
        // (x-1)^2 (x^2-2)
        let input = &p(&[1, -2, 1]) * &p(&[-2, 0, 1]);
        assert_eq!(
            yun_squarefree(&input),
            vec![(p(&[-2, 0, 1]), 1), (p(&[-1, 1]), 2)]
        );
    }

    #[test]
    fn yun_on_squarefree() {
        let q = p(&[1, -3, 0, 1]);
        assert_eq!(yun_squarefree(&q), vec![(q.clone(), 1)]);
        // 3/2 (x-1)(x^2-2): unit is the caller's business
        let scaled = (&p(&[-1, 1]) * &p(&[-2, 0, 1])).scale(&rat(3, 2));
        assert_eq!(yun_squarefree(&scaled), vec![(p(&[2, -2, -1, 1]), 1)]);
    }

    #[test]
    fn factor_sextic_with_linear_and_quintic_parts() {
        // -x^6 + x^4 - 1/2 x^3 - 7/2 x^2 - x + 5 = -(x-1)(x^5+x^4+1/2x^2+4x+5)
        let input = Poly::from_rat_coeffs(vec![
            rat(5, 1),
            rat(-1, 1),
            rat(-7, 2),
            rat(-1, 2),
            rat(1, 1),
            rat(0, 1),
            rat(-1, 1),
        ]);
        let f = factor_rationals(&input);
        assert_eq!(f.unit, rat(-1, 1));
        let quintic = Poly::from_rat_coeffs(vec![
            rat(5, 1),
            rat(4, 1),
            rat(1, 2),
            rat(0, 1),
            rat(1, 1),
            rat(1, 1),
        ]);
        assert_eq!(f.factors, vec![(p(&[-1, 1]), 1), (quintic, 1)]);
        assert_eq!(f.reconstruct(), input);
    }

    #[test]
    fn factor_quartic_into_linears_and_quadratic() {
        // -x^4 + x^3 + 3x^2 - 3x = -x(x-1)(x^2-3)
        let input = p(&[0, -3, 3, 1, -1]);
        let f = factor_rationals(&input);
        assert_eq!(f.unit, rat(-1, 1));
        assert_eq!(
            f.factors,
            vec![(p(&[-1, 1]), 1), (p(&[0, 1]), 1), (p(&[-3, 0, 1]), 1)]
        );
        assert_eq!(f.reconstruct(), input);
    }

    #[test]
    fn factor_monic_irreducible_passthrough() {
        let q = p(&[1, 1, 0, 1]); // x^3 + x + 1
        let f = factor_rationals(&q);
        assert_eq!(f.unit, rat(1, 1));
        assert_eq!(f.factors, vec![(q, 1)]);
    }

    #[test]
    fn octic_composition_is_irreducible() {
        // (x^2-2) o (x^4+4x^3-2x^2)
        let s0 = p(&[-2, 0, 0, 0, 4, -16, 12, 8, 1]);
        let f = factor_rationals(&s0);
        assert_eq!(f.factors.len(), 1);
        assert_eq!(f.factors[0], (s0, 1));
    }

    #[test]
    fn sextic_composition_is_irreducible_with_unit_4() {
        // (x^2-2) o (2x^3+x^2-6x-3) = 4x^6 + ... + 7
        let s2 = p(&[7, 36, 30, -24, -23, 4, 4]);
        let f = factor_rationals(&s2);
        assert_eq!(f.unit, rat(4, 1));
        assert_eq!(f.factors.len(), 1);
        assert_eq!(f.factors[0].0, s2.monic());
        assert_eq!(f.reconstruct(), s2);
    }

    #[test]
    fn deep_multiplicities_reconstruct() {
        // 5 (x-1)^3 (x^2+x+1)^2 x
        let input = &(&(&Poly::constant(rat(5, 1)) * &p(&[-1, 1]).pow(3))
            * &p(&[1, 1, 1]).pow(2))
            * &p(&[0, 1]);
        let f = factor_rationals(&input);
        assert_eq!(f.reconstruct(), input);
        assert_eq!(f.unit, rat(5, 1));
        assert_eq!(f.factors.len(), 3);
    }

    #[test]
    fn rational_root_fast_path_with_fractions() {
        // (x - 1/2)(x + 2/3)(x^2 + 1), scaled by 6
        let input = (&(&Poly::from_rat_coeffs(vec![rat(-1, 2), rat(1, 1)])
            * &Poly::from_rat_coeffs(vec![rat(2, 3), rat(1, 1)]))
            * &p(&[1, 0, 1]))
            .scale(&rat(6, 1));
        let f = factor_rationals(&input);
        assert_eq!(f.unit, rat(6, 1));
        assert_eq!(f.factors.len(), 3);
        assert_eq!(f.reconstruct(), input);
    }
}
