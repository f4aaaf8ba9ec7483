//! Exact evaluation of canonical forms: a direct interval/sign scheme,
//! and a closed form built from polynomials and the absolute value.
//!
//! The closed form rewrites each step term `C[i](P)` as a combination of
//! clipped parts `[P]+ = (P + |P|)/2`, `[P]- = (P - |P|)/2` and rational
//! ramps, so a whole function evaluates with field operations and `|.|`
//! alone, with no algebraic numbers at run time.

use alloc::boxed::Box;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::canonical::CanonicalForm;
use crate::poly::Poly;
use crate::rat::{self, Rat};
use crate::realalg::{real_roots, Bound, IsolatingInterval, SturmChain};

/// Expression tree over polynomial leaves, closed under sums, products,
/// rational scaling and absolute value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SemiPolyExpr {
    Poly(Poly),
    Sum(Box<SemiPolyExpr>, Box<SemiPolyExpr>),
    Product(Box<SemiPolyExpr>, Box<SemiPolyExpr>),
    Scale(Rat, Box<SemiPolyExpr>),
    Abs(Box<SemiPolyExpr>),
}

impl SemiPolyExpr {
    pub fn poly(p: Poly) -> Self {
        SemiPolyExpr::Poly(p)
    }

    pub fn zero() -> Self {
        SemiPolyExpr::Poly(Poly::zero())
    }

    pub fn sum(a: Self, b: Self) -> Self {
        SemiPolyExpr::Sum(Box::new(a), Box::new(b))
    }

    pub fn product(a: Self, b: Self) -> Self {
        SemiPolyExpr::Product(Box::new(a), Box::new(b))
    }

    pub fn scale(k: Rat, e: Self) -> Self {
        SemiPolyExpr::Scale(k, Box::new(e))
    }

    pub fn abs(e: Self) -> Self {
        SemiPolyExpr::Abs(Box::new(e))
    }

    /// Exact recursive evaluation; absolute values stay rational.
    pub fn eval(&self, x: &Rat) -> Rat {
        match self {
            SemiPolyExpr::Poly(p) => p.eval(x),
            SemiPolyExpr::Sum(a, b) => a.eval(x) + b.eval(x),
            SemiPolyExpr::Product(a, b) => a.eval(x) * b.eval(x),
            SemiPolyExpr::Scale(k, e) => k * e.eval(x),
            SemiPolyExpr::Abs(e) => e.eval(x).abs(),
        }
    }
}

/// `sup(e, 0)` as `(e + |e|)/2`.
fn pos_part(e: SemiPolyExpr) -> SemiPolyExpr {
    SemiPolyExpr::scale(
        rat::rat(1, 2),
        SemiPolyExpr::sum(e.clone(), SemiPolyExpr::abs(e)),
    )
}

/// `inf(e, 0)` as `(e - |e|)/2`.
fn neg_part(e: SemiPolyExpr) -> SemiPolyExpr {
    SemiPolyExpr::scale(
        rat::rat(1, 2),
        SemiPolyExpr::sum(
            e.clone(),
            SemiPolyExpr::scale(rat::rat_int(-1), SemiPolyExpr::abs(e)),
        ),
    )
}

fn clipped(q: &Poly, side: i8) -> SemiPolyExpr {
    let leaf = SemiPolyExpr::poly(q.clone());
    if side > 0 {
        pos_part(leaf)
    } else {
        neg_part(leaf)
    }
}

/// `max(x - c, 0)`, the unit ramp at `c`, as `((x-c) + |x-c|)/2`.
fn ramp(c: &Rat) -> SemiPolyExpr {
    pos_part(SemiPolyExpr::poly(Poly::x_minus(c)))
}

/// `ramp(at_one) - ramp(at_zero)` scaled to a 0-to-1 transition.
fn transition(from: &Rat, to: &Rat) -> SemiPolyExpr {
    SemiPolyExpr::scale(
        (to - from).recip(),
        SemiPolyExpr::sum(
            ramp(from),
            SemiPolyExpr::scale(rat::rat_int(-1), ramp(to)),
        ),
    )
}

/// Exact evaluation of a canonical form at a rational point by interval
/// and sign tests: each term contributes 0 left of its isolating
/// interval, `coeff * P` right of it, and inside the interval the sign
/// of `P(x)` against the known sign just right of the root decides.
/// That sign is `(-1)^(index + deg P)`: `P` is monic with only simple
/// real roots, so it is positive far right and flips at each crossing.
pub fn eval_sign_method(c: &CanonicalForm, x: &Rat) -> Rat {
    let mut acc = c.base().eval(x);
    for t in c.terms() {
        let root = t.root();
        let iv = root.interval();
        if x < iv.lo() {
            continue;
        }
        let p = root.minpoly();
        if x > iv.hi() {
            acc += t.coeff().eval(x) * p.eval(x);
            continue;
        }
        let px = p.eval(x);
        if px.is_zero() {
            continue;
        }
        let expected = right_side_sign(root.index(), p.degree().unwrap());
        if rat::sign(&px) == expected {
            acc += t.coeff().eval(x) * px;
        }
    }
    acc
}

/// Sign of a monic squarefree polynomial of the given degree just right
/// of its `index`-th real root.
fn right_side_sign(index: u32, degree: usize) -> i8 {
    if (index as usize + degree) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Closed form of `C[i](p)` over polynomials and absolute values.
///
/// Repeated factors split off as a plain polynomial multiplier
/// (`C[i](p) = gcd(p, p') * C[i](p~)`), index 0 is `p` itself, an index
/// beyond the real-root count is 0, and a rational root `a` gives
/// `max(x-a, 0) * (p~/(x-a))`. The general (irrational root) case is a
/// sign-selected combination of clipped parts and two rational ramp
/// transitions built from the root's isolating interval and its
/// neighbors.
pub fn from_c_term(p: &Poly, i: u32) -> SemiPolyExpr {
    from_c_term_impl(p, i, None)
}

/// Same as [`from_c_term`], but with caller-supplied isolating
/// intervals, one per real root of the squarefree part of `p`,
/// ascending. Intervals are checked: each must isolate its root, have
/// non-root endpoints (or be the point of a rational root), and be
/// strictly separated from its neighbors.
pub fn from_c_term_with_intervals(
    p: &Poly,
    i: u32,
    intervals: &[IsolatingInterval],
) -> SemiPolyExpr {
    from_c_term_impl(p, i, Some(intervals))
}

fn from_c_term_impl(p: &Poly, i: u32, intervals: Option<&[IsolatingInterval]>) -> SemiPolyExpr {
    if p.is_zero() {
        return SemiPolyExpr::zero();
    }
    if i == 0 {
        return SemiPolyExpr::poly(p.clone());
    }
    if p.degree() == Some(0) {
        return SemiPolyExpr::zero();
    }
    let g = p.gcd(&p.derivative());
    let (multiplier, reduced) = if g.degree().map_or(false, |d| d > 0) {
        (Some(g.clone()), p.div_exact(&g).expect("gcd divides"))
    } else {
        (None, p.clone())
    };
    let inner = squarefree_c_term(&reduced, i, intervals);
    match multiplier {
        None => inner,
        Some(_) if inner == SemiPolyExpr::zero() => SemiPolyExpr::zero(),
        Some(m) => SemiPolyExpr::product(SemiPolyExpr::poly(m), inner),
    }
}

fn squarefree_c_term(
    q: &Poly,
    i: u32,
    intervals: Option<&[IsolatingInterval]>,
) -> SemiPolyExpr {
    let owned: Vec<IsolatingInterval>;
    let ivs: &[IsolatingInterval] = match intervals {
        Some(given) => {
            validate_intervals(q, given);
            given
        }
        None => {
            owned = real_roots(q).iter().map(|a| a.interval().clone()).collect();
            &owned
        }
    };
    let r = ivs.len();
    if i as usize > r {
        return SemiPolyExpr::zero();
    }
    let j = i as usize - 1;
    if ivs[j].is_point() {
        let root = ivs[j].lo().clone();
        let lin = Poly::x_minus(&root);
        let cofactor = q.div_exact(&lin).expect("rational root divides");
        return SemiPolyExpr::product(
            pos_part(SemiPolyExpr::poly(lin)),
            SemiPolyExpr::poly(cofactor),
        );
    }

    let a_inner = ivs[j].lo().clone();
    let b_inner = ivs[j].hi().clone();
    let a_outer = if j == 0 {
        &a_inner - rat::rat_int(1)
    } else if ivs[j - 1].is_point() {
        (ivs[j - 1].hi() + &a_inner) / rat::rat_int(2)
    } else {
        ivs[j - 1].hi().clone()
    };
    let b_outer = if j + 1 == r {
        &b_inner + rat::rat_int(1)
    } else if ivs[j + 1].is_point() {
        (&b_inner + ivs[j + 1].lo()) / rat::rat_int(2)
    } else {
        ivs[j + 1].lo().clone()
    };

    let sign_left = rat::sign(&q.eval(&a_outer));
    let sign_right = rat::sign(&q.eval(&b_outer));
    debug_assert!(sign_left != 0 && sign_right != 0);

    SemiPolyExpr::sum(
        SemiPolyExpr::product(clipped(q, sign_left), transition(&b_inner, &b_outer)),
        SemiPolyExpr::product(clipped(q, sign_right), transition(&a_outer, &a_inner)),
    )
}

fn validate_intervals(q: &Poly, ivs: &[IsolatingInterval]) {
    let chain = SturmChain::new(q);
    assert_eq!(
        chain.count(&Bound::NegInf, &Bound::PosInf),
        ivs.len(),
        "one interval per real root required"
    );
    for w in ivs.windows(2) {
        assert!(
            w[0].hi() < w[1].lo(),
            "intervals must be strictly separated"
        );
    }
    for (k, iv) in ivs.iter().enumerate() {
        if iv.is_point() {
            assert!(
                q.eval(iv.lo()).is_zero(),
                "point interval must sit on a rational root"
            );
            continue;
        }
        assert!(
            !q.eval(iv.lo()).is_zero() && !q.eval(iv.hi()).is_zero(),
            "interval endpoints must not be roots"
        );
        let b_lo = Bound::Finite(iv.lo().clone());
        let b_hi = Bound::Finite(iv.hi().clone());
        assert_eq!(chain.count(&b_lo, &b_hi), 1, "interval must isolate one root");
        assert_eq!(
            chain.count(&Bound::NegInf, &b_hi),
            k + 1,
            "interval isolates the wrong root"
        );
    }
}

/// Closed form of a whole canonical form: the base as a leaf plus, per
/// term, the coefficient leaf times the term's closed form.
pub fn from_canonical(c: &CanonicalForm) -> SemiPolyExpr {
    let mut acc = SemiPolyExpr::poly(c.base().clone());
    for t in c.terms() {
        acc = SemiPolyExpr::sum(
            acc,
            SemiPolyExpr::product(
                SemiPolyExpr::poly(t.coeff().clone()),
                from_c_term(t.root().minpoly(), t.root().index()),
            ),
        );
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn p(coeffs: &[i64]) -> Poly {
        Poly::from_int_coeffs(coeffs)
    }

    fn iv(lo: (i64, i64), hi: (i64, i64)) -> IsolatingInterval {
        IsolatingInterval::new(rat(lo.0, lo.1), rat(hi.0, hi.1))
    }

    fn step(target: &[i64], index: u32) -> CanonicalForm {
        CanonicalForm::normalize(
            Poly::zero(),
            alloc::vec![(Poly::one(), p(target), index)],
        )
    }

    #[test]
    fn sign_method_basics() {
        // C1(x-1) at 3 -> 2; at 0 -> 0; at 1 -> 0
        let c = step(&[-1, 1], 1);
        assert_eq!(eval_sign_method(&c, &rat(3, 1)), rat(2, 1));
        assert_eq!(eval_sign_method(&c, &rat(0, 1)), rat(0, 1));
        assert_eq!(eval_sign_method(&c, &rat(1, 1)), rat(0, 1));
        // C2(x^2-2) at 3/2 -> 1/4 (just right of sqrt 2)
        let c = step(&[-2, 0, 1], 2);
        assert_eq!(eval_sign_method(&c, &rat(3, 2)), rat(1, 4));
        assert_eq!(eval_sign_method(&c, &rat(1, 1)), rat(0, 1));
        assert_eq!(eval_sign_method(&c, &rat(-5, 1)), rat(0, 1));
    }

    #[test]
    fn sign_method_matches_piece_evaluation() {
        // the three-piece sextic example at 0: leftmost piece gives 1
        let quintic_neg = Poly::from_rat_coeffs(alloc::vec![
            rat(-5, 1),
            rat(-4, 1),
            rat(-1, 2),
            rat(0, 1),
            rat(-1, 1),
            rat(-1, 1),
        ]);
        let psi = CanonicalForm::normalize(
            p(&[1, 0, 0, 0, 0, 0, 1]),
            alloc::vec![
                (quintic_neg, p(&[-1, 1]), 1),
                (
                    Poly::from_rat_coeffs(alloc::vec![rat(-3, 2), rat(3, 2)]),
                    p(&[-2, 0, 1]),
                    2
                ),
            ],
        );
        assert_eq!(eval_sign_method(&psi, &rat(0, 1)), rat(1, 1));
        // cross-check against the active standard piece on a small grid
        let std = psi.to_standard();
        let mut q = rat(-3, 1);
        while q <= rat(3, 1) {
            assert_eq!(eval_sign_method(&psi, &q), std.eval_at(&q));
            q += rat(1, 8);
        }
    }

    #[test]
    fn closed_form_degenerate_cases() {
        assert_eq!(from_c_term(&Poly::zero(), 5), SemiPolyExpr::zero());
        let q = p(&[1, -3, 0, 1]);
        assert_eq!(from_c_term(&q, 0), SemiPolyExpr::poly(q.clone()));
        assert_eq!(from_c_term(&q, 4), SemiPolyExpr::zero());
        assert_eq!(from_c_term(&p(&[5]), 1), SemiPolyExpr::zero());
    }

    #[test]
    fn closed_form_rational_root() {
        // C1(x-1): ramp at 1
        let e = from_c_term(&p(&[-1, 1]), 1);
        assert_eq!(e.eval(&rat(3, 1)), rat(2, 1));
        assert_eq!(e.eval(&rat(1, 1)), rat(0, 1));
        assert_eq!(e.eval(&rat(-2, 1)), rat(0, 1));
        // mixed roots: C2(x(x^2-2)) steps at 0
        let q = &Poly::x() * &p(&[-2, 0, 1]);
        let e = from_c_term(&q, 2);
        let c = step(&[0, -2, 0, 1], 2);
        for n in -12..=12 {
            let x = rat(n, 4);
            assert_eq!(e.eval(&x), eval_sign_method(&c, &x));
        }
    }

    #[test]
    fn closed_form_irrational_root() {
        // C2(x^2-2) evaluates to P right of sqrt(2), 0 left of it
        let e = from_c_term(&p(&[-2, 0, 1]), 2);
        assert_eq!(e.eval(&rat(2, 1)), rat(2, 1));
        assert_eq!(e.eval(&rat(3, 2)), rat(1, 4));
        assert_eq!(e.eval(&rat(0, 1)), rat(0, 1));
        assert_eq!(e.eval(&rat(-17, 1)), rat(0, 1));
        // with explicit intervals (including across a point neighbor)
        let e2 = from_c_term_with_intervals(
            &p(&[-2, 0, 1]),
            2,
            &[iv((-2, 1), (-1, 1)), iv((1, 1), (2, 1))],
        );
        assert_eq!(e2.eval(&rat(2, 1)), rat(2, 1));
        assert_eq!(e2.eval(&rat(0, 1)), rat(0, 1));
    }

    #[test]
    fn closed_form_with_repeated_factors() {
        // C1((x-1)^2 (x^2-2)) = (x-1) * C1((x-1)(x^2-2))
        let sq = &p(&[1, -2, 1]) * &p(&[-2, 0, 1]);
        let e = from_c_term(&sq, 1);
        let c = CanonicalForm::normalize(Poly::zero(), alloc::vec![(Poly::one(), sq, 1)]);
        for n in -10..=10 {
            let x = rat(n, 3);
            assert_eq!(e.eval(&x), eval_sign_method(&c, &x));
        }
    }

    #[test]
    fn closed_form_of_whole_functions() {
        // base-only form is a single leaf
        let base_only = CanonicalForm::from_poly(p(&[2, 0, 5]));
        assert_eq!(
            from_canonical(&base_only),
            SemiPolyExpr::poly(p(&[2, 0, 5]))
        );
        // 3 C2(x^2-2): 0 at 1, 3*P at 2
        let c = CanonicalForm::normalize(
            Poly::zero(),
            alloc::vec![(p(&[3]), p(&[-2, 0, 1]), 2)],
        );
        let e = from_canonical(&c);
        assert_eq!(e.eval(&rat(1, 1)), rat(0, 1));
        assert_eq!(e.eval(&rat(2, 1)), rat(6, 1));
    }

    #[test]
    fn parity_of_right_side_signs() {
        // x^3 - 3x + 1: signs just right of the three roots alternate
        // up to +1 at the last root
        let q = p(&[1, -3, 0, 1]);
        let roots = real_roots(&q);
        let samples = [rat(-1, 1), rat(1, 2), rat(2, 1)];
        for (k, s) in samples.iter().enumerate() {
            assert_eq!(
                rat::sign(&q.eval(s)),
                right_side_sign((k + 1) as u32, 3),
            );
        }
        assert_eq!(roots.len(), 3);
    }

    #[test]
    fn clipped_parts_sum_to_polynomial() {
        let q = p(&[1, -3, 0, 1]);
        let plus = clipped(&q, 1);
        let minus = clipped(&q, -1);
        for n in -8..=8 {
            let x = rat(n, 2);
            assert_eq!(plus.eval(&x) + minus.eval(&x), q.eval(&x));
            assert!(plus.eval(&x) >= rat(0, 1));
            assert!(minus.eval(&x) <= rat(0, 1));
        }
    }

    #[test]
    fn transition_hits_zero_ramp_one() {
        let t = transition(&rat(1, 1), &rat(3, 1));
        assert_eq!(t.eval(&rat(0, 1)), rat(0, 1));
        assert_eq!(t.eval(&rat(1, 1)), rat(0, 1));
        assert_eq!(t.eval(&rat(2, 1)), rat(1, 2));
        assert_eq!(t.eval(&rat(3, 1)), rat(1, 1));
        assert_eq!(t.eval(&rat(10, 1)), rat(1, 1));
    }
}
