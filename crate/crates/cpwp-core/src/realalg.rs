//! Real root counting and isolation, and exact arithmetic on real
//! algebraic numbers.
//!
//! A real algebraic number is stored as its monic irreducible minimal
//! polynomial, a 1-based index among that polynomial's ascending real
//! roots, and a rational isolating interval. Rational numbers carry a
//! degenerate (point) interval and a linear minimal polynomial. All
//! comparisons and sign queries are exact: intervals are refined by
//! bisection with rational sign tests until the answer is certain.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::factor::factor_rationals;
use crate::poly::Poly;
use crate::rat::{self, Rat};
use crate::zpoly::ZPoly;

/// An endpoint for root-counting ranges.
#[derive(Clone, Debug, PartialEq)]
pub enum Bound {
    NegInf,
    Finite(Rat),
    PosInf,
}

/// A rational interval `[lo, hi]` guaranteed to contain exactly one root
/// of its target polynomial. A point interval (`lo == hi`) marks a
/// rational root; otherwise the endpoints are not roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IsolatingInterval {
    lo: Rat,
    hi: Rat,
}

impl IsolatingInterval {
    pub fn new(lo: Rat, hi: Rat) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        IsolatingInterval { lo, hi }
    }

    pub fn point(at: Rat) -> Self {
        IsolatingInterval {
            lo: at.clone(),
            hi: at,
        }
    }

    pub fn lo(&self) -> &Rat {
        &self.lo
    }

    pub fn hi(&self) -> &Rat {
        &self.hi
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, q: &Rat) -> bool {
        &self.lo <= q && q <= &self.hi
    }
}

/// A real algebraic number.
///
/// Equality and ordering are value semantics: two numbers are equal
/// exactly when they have the same minimal polynomial and root index
/// (the interval is a refinable witness, not part of the identity).
#[derive(Clone, Debug)]
pub struct AlgebraicNumber {
    minpoly: Poly,
    index: u32,
    interval: IsolatingInterval,
}

impl PartialEq for AlgebraicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.index == other.index && self.minpoly == other.minpoly
    }
}

impl Eq for AlgebraicNumber {}

impl core::hash::Hash for AlgebraicNumber {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.minpoly.hash(state);
        self.index.hash(state);
    }
}

impl PartialOrd for AlgebraicNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AlgebraicNumber {
    /// Exact order on the real line. Equal minimal polynomials order by
    /// index; otherwise the numbers are distinct and both intervals are
    /// bisected until they separate.
    fn cmp(&self, other: &Self) -> Ordering {
        if self.minpoly == other.minpoly {
            return self.index.cmp(&other.index);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        loop {
            if let Some(ord) = interval_order(&a, &b) {
                return ord;
            }
            a = a.refine_step();
            b = b.refine_step();
        }
    }
}

/// Decide the order of two distinct numbers from their intervals, if the
/// intervals already separate them.
fn interval_order(a: &AlgebraicNumber, b: &AlgebraicNumber) -> Option<Ordering> {
    if a.interval.is_point() && b.interval.is_point() {
        return Some(a.interval.lo.cmp(&b.interval.lo));
    }
    // Non-point endpoints are never roots, so touching intervals still
    // separate the two values.
    if a.interval.hi <= b.interval.lo {
        Some(Ordering::Less)
    } else if b.interval.hi <= a.interval.lo {
        Some(Ordering::Greater)
    } else {
        None
    }
}

impl AlgebraicNumber {
    /// Wrap an already-verified representation. `minpoly` must be monic
    /// irreducible and `interval` must isolate its `index`-th real root;
    /// the interval and index are checked with exact sign tests,
    /// irreducibility is the caller's contract. Linear minimal
    /// polynomials normalize to a point interval.
    pub fn new(minpoly: Poly, index: u32, interval: IsolatingInterval) -> Self {
        assert!(minpoly.is_monic(), "minimal polynomial must be monic");
        assert!(index >= 1, "root index is 1-based");
        if minpoly.degree() == Some(1) {
            let root = -minpoly.coeff(0);
            assert!(
                interval.contains(&root),
                "interval does not contain the rational root"
            );
            return AlgebraicNumber {
                minpoly,
                index: 1,
                interval: IsolatingInterval::point(root),
            };
        }
        assert!(
            !interval.is_point(),
            "point interval for an irrational root"
        );
        let chain = SturmChain::new(&minpoly);
        let b_lo = Bound::Finite(interval.lo.clone());
        let b_hi = Bound::Finite(interval.hi.clone());
        assert!(
            chain.count(&b_lo, &b_hi) == 1,
            "interval does not isolate a single root"
        );
        assert!(
            chain.count(&Bound::NegInf, &b_hi) == index as usize,
            "interval does not isolate the claimed root index"
        );
        AlgebraicNumber {
            minpoly,
            index,
            interval,
        }
    }

    pub fn from_rational(q: &Rat) -> Self {
        AlgebraicNumber {
            minpoly: Poly::x_minus(q),
            index: 1,
            interval: IsolatingInterval::point(q.clone()),
        }
    }

    pub fn minpoly(&self) -> &Poly {
        &self.minpoly
    }

    pub fn index(&self) -> u32 {
        self.index
    }

    pub fn interval(&self) -> &IsolatingInterval {
        &self.interval
    }

    pub fn is_rational(&self) -> bool {
        self.interval.is_point()
    }

    pub fn rational_value(&self) -> Option<&Rat> {
        if self.interval.is_point() {
            Some(&self.interval.lo)
        } else {
            None
        }
    }

    /// Same number with an interval of width at most `max_width`,
    /// obtained by bisection.
    pub fn refine(&self, max_width: &Rat) -> Self {
        assert!(
            rat::sign(max_width) > 0,
            "refinement width must be positive"
        );
        let mut out = self.clone();
        let zp = ZPoly::from_poly(&self.minpoly).0;
        while &out.interval.width() > max_width {
            out = out.bisect_with(&zp);
        }
        out
    }

    pub(crate) fn refine_step(&self) -> Self {
        if self.interval.is_point() {
            return self.clone();
        }
        self.bisect_with(&ZPoly::from_poly(&self.minpoly).0)
    }

    fn bisect_with(&self, zp: &ZPoly) -> Self {
        if self.interval.is_point() {
            return self.clone();
        }
        let mid = (&self.interval.lo + &self.interval.hi) / rat::rat_int(2);
        let s_mid = zp.sign_at(mid.numer(), mid.denom());
        if s_mid == 0 {
            // Only possible for a rational root; snap to a point.
            return AlgebraicNumber {
                minpoly: self.minpoly.clone(),
                index: self.index,
                interval: IsolatingInterval::point(mid),
            };
        }
        let s_lo = zp.sign_at(self.interval.lo.numer(), self.interval.lo.denom());
        let interval = if s_lo != s_mid {
            IsolatingInterval::new(self.interval.lo.clone(), mid)
        } else {
            IsolatingInterval::new(mid, self.interval.hi.clone())
        };
        AlgebraicNumber {
            minpoly: self.minpoly.clone(),
            index: self.index,
            interval,
        }
    }

    /// Exact comparison against a rational: a single sign test on the
    /// minimal polynomial decides which side of `q` the root lies on.
    pub fn cmp_rat(&self, q: &Rat) -> Ordering {
        if let Some(r) = self.rational_value() {
            return r.cmp(q);
        }
        if q <= &self.interval.lo {
            return Ordering::Greater;
        }
        if q >= &self.interval.hi {
            return Ordering::Less;
        }
        let zp = ZPoly::from_poly(&self.minpoly).0;
        let s_q = zp.sign_at(q.numer(), q.denom());
        debug_assert!(
            s_q != 0,
            "irreducible minpoly of degree >= 2 has no rational roots"
        );
        let s_lo = zp.sign_at(self.interval.lo.numer(), self.interval.lo.denom());
        if s_q == s_lo {
            // No sign change on [lo, q]: the root is right of q.
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

/// Textbook Sturm chain of the squarefree part of `p`: the squarefree
/// part, its derivative, then negated remainders down to a constant.
pub fn sturm_sequence(p: &Poly) -> Vec<Poly> {
    assert!(!p.is_zero(), "Sturm chain of the zero polynomial");
    let s0 = p.squarefree_part();
    let mut chain = vec![s0.clone()];
    let s1 = s0.derivative();
    if s1.is_zero() {
        return chain;
    }
    chain.push(s1);
    loop {
        let r = chain[chain.len() - 2].rem(&chain[chain.len() - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(-&r);
    }
    chain
}

/// A Sturm chain normalized to primitive integer polynomials (a positive
/// rescaling of each member, which leaves sign variations untouched).
pub(crate) struct SturmChain {
    elems: Vec<ZPoly>,
}

impl SturmChain {
    pub fn new(p: &Poly) -> Self {
        SturmChain {
            elems: sturm_sequence(p)
                .iter()
                .map(|q| ZPoly::from_poly(q).0)
                .collect(),
        }
    }

    fn variations_at(&self, at: &Bound) -> usize {
        let mut count = 0usize;
        let mut last: i8 = 0;
        for z in &self.elems {
            let s = match at {
                Bound::NegInf => z.sign_at_neg_inf(),
                Bound::PosInf => z.sign_at_pos_inf(),
                Bound::Finite(q) => z.sign_at(q.numer(), q.denom()),
            };
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Number of distinct roots in `(lo, hi]`.
    pub fn count(&self, lo: &Bound, hi: &Bound) -> usize {
        let va = self.variations_at(lo);
        let vb = self.variations_at(hi);
        debug_assert!(va >= vb);
        va - vb
    }
}

/// Number of distinct real roots of `p` in `(lo, hi]`. Finite endpoints
/// must not be roots of `p`.
pub fn count_real_roots(p: &Poly, lo: &Bound, hi: &Bound) -> usize {
    assert!(!p.is_zero(), "root count of the zero polynomial");
    for b in [lo, hi] {
        if let Bound::Finite(q) = b {
            assert!(!p.eval(q).is_zero(), "endpoint is a root of the polynomial");
        }
    }
    SturmChain::new(p).count(lo, hi)
}

/// All distinct real roots of `p`, ascending, as algebraic numbers whose
/// minimal polynomials come from the irreducible factorization of `p`.
/// The returned isolating intervals are pairwise strictly separated.
pub fn real_roots(p: &Poly) -> Vec<AlgebraicNumber> {
    assert!(!p.is_zero(), "roots of the zero polynomial");
    if p.degree() == Some(0) {
        return Vec::new();
    }
    let mut roots: Vec<AlgebraicNumber> = Vec::new();
    for (base, _) in factor_rationals(p).factors {
        if base.degree() == Some(1) {
            let r = -base.coeff(0);
            roots.push(AlgebraicNumber::from_rational(&r));
        } else {
            for (k, interval) in isolate_irreducible(&base).into_iter().enumerate() {
                roots.push(AlgebraicNumber {
                    minpoly: base.clone(),
                    index: (k + 1) as u32,
                    interval,
                });
            }
        }
    }
    roots.sort();
    separate_strictly(&mut roots);
    roots
}

/// One isolating interval per distinct real root of `p`, ascending and
/// pairwise strictly separated; rational roots come back as points.
pub fn isolate_real_roots(p: &Poly) -> Vec<IsolatingInterval> {
    real_roots(p).into_iter().map(|a| a.interval).collect()
}

/// Refine the stored intervals of an ascending run of distinct numbers
/// until consecutive intervals are strictly disjoint.
pub(crate) fn separate_strictly(roots: &mut [AlgebraicNumber]) {
    for i in 1..roots.len() {
        loop {
            let separated = if roots[i - 1].interval.is_point() && roots[i].interval.is_point() {
                true
            } else {
                roots[i - 1].interval.hi < roots[i].interval.lo
            };
            if separated {
                break;
            }
            roots[i - 1] = roots[i - 1].refine_step();
            roots[i] = roots[i].refine_step();
        }
    }
}

/// Isolate all real roots of a monic irreducible polynomial of degree at
/// least 2 by Sturm bisection from the Cauchy bound. Midpoints are never
/// roots (there are no rational ones), so every produced interval has
/// non-root endpoints.
fn isolate_irreducible(base: &Poly) -> Vec<IsolatingInterval> {
    let chain = SturmChain::new(base);
    let bound = cauchy_root_bound(base);
    let lo = -&bound;
    let v_lo = chain.variations_at(&Bound::Finite(lo.clone()));
    let v_hi = chain.variations_at(&Bound::Finite(bound.clone()));
    let mut out = Vec::new();
    subdivide(&chain, (lo, v_lo), (bound, v_hi), &mut out);
    out
}

fn subdivide(
    chain: &SturmChain,
    lo: (Rat, usize),
    hi: (Rat, usize),
    out: &mut Vec<IsolatingInterval>,
) {
    let roots = lo.1 - hi.1;
    if roots == 0 {
        return;
    }
    if roots == 1 {
        out.push(IsolatingInterval::new(lo.0, hi.0));
        return;
    }
    let mid = (&lo.0 + &hi.0) / rat::rat_int(2);
    let v_mid = chain.variations_at(&Bound::Finite(mid.clone()));
    subdivide(chain, lo, (mid.clone(), v_mid), out);
    subdivide(chain, (mid, v_mid), hi, out);
}

/// `1 + max |c_i| / |c_n|`: every real root of `p` lies strictly inside
/// `(-bound, bound)`.
fn cauchy_root_bound(p: &Poly) -> Rat {
    let lc = p.leading_coeff().expect("bound of zero polynomial").clone();
    let mut max = Rat::zero();
    let n = p.degree().unwrap();
    for i in 0..n {
        let q = (p.coeff(i) / &lc).abs();
        if q > max {
            max = q;
        }
    }
    max + rat::rat_int(1)
}

/// Sign of `q` at the algebraic number `a`: zero exactly when the
/// minimal polynomial of `a` divides `q`; otherwise decided by refining
/// the interval until `q` has no root inside it.
pub fn sign_at(q: &Poly, a: &AlgebraicNumber) -> i8 {
    if q.is_zero() {
        return 0;
    }
    if q.rem(&a.minpoly).is_zero() {
        return 0;
    }
    if let Some(r) = a.rational_value() {
        return rat::sign(&q.eval(r));
    }
    let zq = ZPoly::from_poly(q).0;
    let chain = SturmChain::new(q);
    let mut local = a.clone();
    loop {
        let lo = &local.interval.lo;
        let hi = &local.interval.hi;
        let s_lo = zq.sign_at(lo.numer(), lo.denom());
        let s_hi = zq.sign_at(hi.numer(), hi.denom());
        if s_lo != 0
            && s_hi != 0
            && chain.count(&Bound::Finite(lo.clone()), &Bound::Finite(hi.clone())) == 0
        {
            return s_lo;
        }
        local = local.refine_step();
    }
}

/// Position (1-based) of `a` among the ascending distinct real roots of
/// `q`. Fails with [`Error::NotARoot`] when `a` is not a root of `q`.
pub fn root_index_in(a: &AlgebraicNumber, q: &Poly) -> Result<u32, Error> {
    assert!(!q.is_zero(), "root index in the zero polynomial");
    let sf = q.squarefree_part();
    if !sf.rem(&a.minpoly).is_zero() {
        return Err(Error::NotARoot);
    }
    if let Some(r) = a.rational_value() {
        // Roots strictly below r are exactly the roots of the deflated
        // cofactor up to r, and r is not a root of the cofactor.
        let cofactor = sf.div_exact(&a.minpoly).expect("divisibility checked");
        if cofactor.degree() == Some(0) {
            return Ok(1);
        }
        let below = count_real_roots(&cofactor, &Bound::NegInf, &Bound::Finite(r.clone()));
        return Ok(below as u32 + 1);
    }
    let zq = ZPoly::from_poly(&sf).0;
    let chain = SturmChain::new(&sf);
    let mut local = a.clone();
    loop {
        let lo = &local.interval.lo;
        let hi = &local.interval.hi;
        let s_lo = zq.sign_at(lo.numer(), lo.denom());
        let s_hi = zq.sign_at(hi.numer(), hi.denom());
        if s_lo != 0 && s_hi != 0 {
            let b_lo = Bound::Finite(lo.clone());
            let b_hi = Bound::Finite(hi.clone());
            if chain.count(&b_lo, &b_hi) == 1 {
                return Ok(chain.count(&Bound::NegInf, &b_hi) as u32);
            }
        }
        local = local.refine_step();
    }
}

/// Given a root `g` of `r(f(x))`, decide which real root of `r` the
/// value `f(g)` is: returns `k` such that `f(g)` equals the `k`-th real
/// root of `r`. `r` must be squarefree and `r(f(x))` must vanish at `g`.
pub fn image_root_index(g: &AlgebraicNumber, f: &Poly, r: &Poly) -> Result<u32, Error> {
    assert!(!r.is_zero(), "image index in the zero polynomial");
    let rf = r.compose(f);
    if !rf.is_zero() && !rf.rem(&g.minpoly).is_zero() {
        return Err(Error::NotARoot);
    }
    let targets = real_roots(r);
    if targets.is_empty() {
        return Err(Error::NotARoot);
    }
    // Disjoint windows around the target roots: gaps between isolating
    // intervals split at their midpoints, outer ends padded by 1. The
    // image interval of f shrinks onto f(g), which is interior to
    // exactly one window.
    let two = rat::rat_int(2);
    let mut windows: Vec<(Rat, Rat)> = Vec::with_capacity(targets.len());
    for (k, t) in targets.iter().enumerate() {
        let left = if k == 0 {
            t.interval.lo() - rat::rat_int(1)
        } else {
            (targets[k - 1].interval.hi() + t.interval.lo()) / &two
        };
        let right = if k + 1 == targets.len() {
            t.interval.hi() + rat::rat_int(1)
        } else {
            (t.interval.hi() + targets[k + 1].interval.lo()) / &two
        };
        windows.push((left, right));
    }
    let mut local = g.clone();
    loop {
        let (img_lo, img_hi) = interval_image(f, &local.interval.lo, &local.interval.hi);
        let mut hit = None;
        for (k, (wl, wr)) in windows.iter().enumerate() {
            if wl <= &img_lo && &img_hi <= wr {
                hit = Some(k);
                break;
            }
        }
        if let Some(k) = hit {
            return Ok((k + 1) as u32);
        }
        local = local.refine_step();
    }
}

/// Naive interval image of `f` over `[lo, hi]` by interval Horner with
/// exact rational endpoints; correct (inclusion-monotone), not tight.
fn interval_image(f: &Poly, lo: &Rat, hi: &Rat) -> (Rat, Rat) {
    let mut acc_lo = Rat::zero();
    let mut acc_hi = Rat::zero();
    for c in f.coeffs().iter().rev() {
        let cands = [&acc_lo * lo, &acc_lo * hi, &acc_hi * lo, &acc_hi * hi];
        let mut new_lo = cands[0].clone();
        let mut new_hi = cands[0].clone();
        for cand in &cands[1..] {
            if cand < &new_lo {
                new_lo = cand.clone();
            }
            if cand > &new_hi {
                new_hi = cand.clone();
            }
        }
        acc_lo = new_lo + c;
        acc_hi = new_hi + c;
    }
    (acc_lo, acc_hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn p(coeffs: &[i64]) -> Poly {
        Poly::from_int_coeffs(coeffs)
    }

    fn finite(n: i64, d: i64) -> Bound {
        Bound::Finite(rat(n, d))
    }

    #[test]
    fn sturm_chain_of_quadratic() {
        // x^2 - 2 -> [x^2 - 2, 2x, 2]
        assert_eq!(
            sturm_sequence(&p(&[-2, 0, 1])),
            vec![p(&[-2, 0, 1]), p(&[0, 2]), p(&[2])]
        );
    }

    #[test]
    fn sturm_chain_of_linear() {
        assert_eq!(sturm_sequence(&p(&[-1, 1])), vec![p(&[-1, 1]), p(&[1])]);
    }

    #[test]
    fn sturm_counts() {
        let q = p(&[1, -3, 0, 1]); // x^3 - 3x + 1
        assert_eq!(count_real_roots(&q, &Bound::NegInf, &Bound::PosInf), 3);
        assert_eq!(
            count_real_roots(&p(&[1, 0, 1]), &Bound::NegInf, &Bound::PosInf),
            0
        );
        assert_eq!(count_real_roots(&q, &finite(0, 1), &finite(1, 2)), 1);
    }

    #[test]
    #[should_panic(expected = "endpoint is a root")]
    fn count_rejects_root_endpoint() {
        count_real_roots(&p(&[-1, 1]), &finite(1, 1), &Bound::PosInf);
    }

    #[test]
    fn isolation_of_cubic() {
        let q = p(&[1, -3, 0, 1]);
        let iso = isolate_real_roots(&q);
        assert_eq!(iso.len(), 3);
        // each root refinable into its window: (-2,-1), (0,1/2), (1,2)
        let windows = [
            (rat(-2, 1), rat(-1, 1)),
            (rat(0, 1), rat(1, 2)),
            (rat(1, 1), rat(2, 1)),
        ];
        for (a, (wl, wr)) in real_roots(&q).iter().zip(windows.iter()) {
            let fine = a.refine(&rat(1, 64));
            assert!(fine.interval().lo() > wl && fine.interval().hi() < wr);
        }
        // strict separation
        assert!(iso[0].hi() < iso[1].lo());
        assert!(iso[1].hi() < iso[2].lo());
    }

    #[test]
    fn isolation_of_rational_and_mixed_roots() {
        assert_eq!(
            isolate_real_roots(&p(&[-1, 1])),
            vec![IsolatingInterval::point(rat(1, 1))]
        );
        let iso = isolate_real_roots(&p(&[-3, 0, 1]));
        assert_eq!(iso.len(), 2);
        assert!(!iso[0].is_point() && !iso[1].is_point());
        // mixed: (x-1)(x^2-2) has a point interval between two irrational ones
        let q = &p(&[-1, 1]) * &p(&[-2, 0, 1]);
        let roots = real_roots(&q);
        assert_eq!(roots.len(), 3);
        assert_eq!(roots[1].rational_value(), Some(&rat(1, 1)));
        assert!(!roots[0].is_rational() && !roots[2].is_rational());
    }

    #[test]
    fn refinement_shrinks_and_preserves() {
        let sqrt2 = AlgebraicNumber::new(
            p(&[-2, 0, 1]),
            2,
            IsolatingInterval::new(rat(1, 1), rat(2, 1)),
        );
        let fine = sqrt2.refine(&rat(1, 4));
        assert!(fine.interval().width() <= rat(1, 4));
        // sign change across the refined interval certifies containment
        let f = |q: &Rat| rat::sign(&p(&[-2, 0, 1]).eval(q));
        assert_eq!(f(fine.interval().lo()), -1);
        assert_eq!(f(fine.interval().hi()), 1);
        // refining a point interval is a no-op
        let one = AlgebraicNumber::from_rational(&rat(1, 1));
        assert_eq!(one.refine(&rat(1, 1000)), one);
        assert!(one.refine(&rat(1, 1000)).interval().is_point());
    }

    #[test]
    fn comparison_cases() {
        let alpha = real_roots(&p(&[1, 1, 0, 1]))[0].clone(); // root of x^3+x+1
        let one = AlgebraicNumber::from_rational(&rat(1, 1));
        assert_eq!(alpha.cmp(&one), Ordering::Less);
        assert_eq!(alpha.cmp(&alpha), Ordering::Equal);
        let sqrt3 = real_roots(&p(&[-3, 0, 1]))[1].clone();
        let sqrt2 = real_roots(&p(&[-2, 0, 1]))[1].clone();
        assert_eq!(sqrt3.cmp(&sqrt2), Ordering::Greater);
        assert_eq!(sqrt2.cmp(&sqrt3), Ordering::Less);
    }

    #[test]
    fn comparison_against_rationals() {
        let sqrt2 = real_roots(&p(&[-2, 0, 1]))[1].clone();
        assert_eq!(sqrt2.cmp_rat(&rat(1, 1)), Ordering::Greater);
        assert_eq!(sqrt2.cmp_rat(&rat(3, 2)), Ordering::Less);
        assert_eq!(sqrt2.cmp_rat(&rat(141421, 100000)), Ordering::Greater);
        let half = AlgebraicNumber::from_rational(&rat(1, 2));
        assert_eq!(half.cmp_rat(&rat(1, 2)), Ordering::Equal);
    }

    #[test]
    fn sign_queries() {
        let one = AlgebraicNumber::from_rational(&rat(1, 1));
        assert_eq!(sign_at(&p(&[-2, 0, 1]), &one), -1);
        let sqrt2 = real_roots(&p(&[-2, 0, 1]))[1].clone();
        assert_eq!(sign_at(&p(&[-2, 0, 1]), &sqrt2), 0);
        // multiples of the minimal polynomial are zero too
        assert_eq!(sign_at(&(&p(&[-2, 0, 1]) * &p(&[5, 3])), &sqrt2), 0);
        let alpha = real_roots(&p(&[1, 1, 0, 1]))[0].clone();
        assert_eq!(sign_at(&p(&[-1, 1]), &alpha), -1);
        assert_eq!(sign_at(&Poly::zero(), &sqrt2), 0);
    }

    #[test]
    fn root_positions() {
        // sqrt(3) inside -x(x-1)(x^2-3)
        let d2 = p(&[0, -3, 3, 1, -1]);
        let sqrt3 = real_roots(&p(&[-3, 0, 1]))[1].clone();
        assert_eq!(root_index_in(&sqrt3, &d2), Ok(4));
        // sqrt(2) inside 3/2 (x-1)(x^2-2)
        let d1 = (&p(&[-1, 1]) * &p(&[-2, 0, 1])).scale(&rat(3, 2));
        let sqrt2 = real_roots(&p(&[-2, 0, 1]))[1].clone();
        assert_eq!(root_index_in(&sqrt2, &d1), Ok(3));
        let one = AlgebraicNumber::from_rational(&rat(1, 1));
        assert_eq!(root_index_in(&one, &p(&[-1, 1])), Ok(1));
        assert_eq!(root_index_in(&one, &d1), Ok(2));
        assert_eq!(root_index_in(&sqrt3, &d1), Err(Error::NotARoot));
    }

    #[test]
    fn image_indices_through_composition() {
        // s0 = (x^2-2) o (x^4+4x^3-2x^2): its first root maps to sqrt(2),
        // its second to -sqrt(2).
        let f = p(&[0, 0, -2, 4, 1]);
        let r = p(&[-2, 0, 1]);
        let s0 = r.compose(&f);
        let roots = real_roots(&s0);
        assert_eq!(image_root_index(&roots[0], &f, &r), Ok(2));
        assert_eq!(image_root_index(&roots[1], &f, &r), Ok(1));
        let c = AlgebraicNumber::from_rational(&rat(3, 2));
        assert_eq!(
            image_root_index(&c, &Poly::x(), &Poly::x_minus(&rat(3, 2))),
            Ok(1)
        );
        assert_eq!(image_root_index(&c, &Poly::x(), &r), Err(Error::NotARoot));
    }

    #[test]
    fn image_index_with_rational_target_among_irrational() {
        // r = x(x^2-2): roots -sqrt2 < 0 < sqrt2; f = x^2-2 at g = sqrt2
        // gives f(g) = 0, the second root.
        let r = &Poly::x() * &p(&[-2, 0, 1]);
        let f = p(&[-2, 0, 1]);
        let g = real_roots(&f)[1].clone();
        assert_eq!(image_root_index(&g, &f, &r), Ok(2));
    }

    #[test]
    fn ordering_sorts_mixed_roots() {
        // all roots of (x^2-3)(x-1)x(x^2-2), sorted:
        // -sqrt3 < -sqrt2 < 0 < 1 < sqrt2 < sqrt3
        let q = &(&p(&[-3, 0, 1]) * &p(&[-1, 1])) * &(&Poly::x() * &p(&[-2, 0, 1]));
        let roots = real_roots(&q);
        assert_eq!(roots.len(), 6);
        for w in roots.windows(2) {
            assert_eq!(w[0].cmp(&w[1]), Ordering::Less);
        }
        assert_eq!(roots[2].rational_value(), Some(&rat(0, 1)));
        assert_eq!(roots[3].rational_value(), Some(&rat(1, 1)));
        assert_eq!(roots[0].minpoly(), &p(&[-3, 0, 1]));
        assert_eq!(roots[1].minpoly(), &p(&[-2, 0, 1]));
        assert_eq!(roots[5].index(), 2);
    }
}
