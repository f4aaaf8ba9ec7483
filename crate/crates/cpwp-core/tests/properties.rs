//! Property tests for the algebraic invariants of the kernel.

use proptest::prelude::*;

use cpwp_core::canonical::{CanonicalForm, StandardPiecewise};
use cpwp_core::factor::{factor_rationals, yun_squarefree};
use cpwp_core::rat::{rat, rat_int, Rat};
use cpwp_core::realalg::{
    count_real_roots, isolate_real_roots, real_roots, root_index_in, sign_at, Bound,
};
use cpwp_core::semipoly::{eval_sign_method, from_canonical};
use cpwp_core::Poly;

fn small_rat() -> impl Strategy<Value = Rat> {
    (-40i64..=40, 1i64..=8).prop_map(|(n, d)| rat(n, d))
}

fn poly(max_len: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(small_rat(), 0..=max_len).prop_map(Poly::from_rat_coeffs)
}

fn nonzero_poly(max_len: usize) -> impl Strategy<Value = Poly> {
    poly(max_len).prop_filter("nonzero", |p| !p.is_zero())
}

/// Monic irreducible polynomials with a known number of real roots.
fn pool() -> Vec<(Poly, u32)> {
    let p = Poly::from_int_coeffs;
    vec![
        (p(&[0, 1]), 1),
        (p(&[-1, 1]), 1),
        (p(&[2, 1]), 1),
        (p(&[-2, 0, 1]), 2),
        (p(&[-3, 0, 1]), 2),
        (p(&[-1, 1, 1]), 2),
        (p(&[1, 1, 0, 1]), 1),
        (p(&[-2, -2, 0, 1]), 1),
        (p(&[-2, 0, 0, 0, 1]), 2),
    ]
}

/// Random canonical form drawn from the pool: raw step terms are fed
/// through the normalizing constructor, so duplicates merge and zero
/// coefficients drop.
fn form() -> impl Strategy<Value = CanonicalForm> {
    let raw_term = (0..pool().len(), 1u32..=2u32, nonzero_poly(3));
    (poly(4), prop::collection::vec(raw_term, 0..=3)).prop_map(|(base, raws)| {
        let pool = pool();
        let raws = raws
            .into_iter()
            .map(|(i, u, coeff)| {
                let (target, count) = &pool[i];
                (coeff, target.clone(), 1 + (u - 1) % count)
            })
            .collect();
        CanonicalForm::normalize(base, raws)
    })
}

proptest! {
    #[test]
    fn product_degree_adds(a in nonzero_poly(6), b in nonzero_poly(6)) {
        let prod = &a * &b;
        prop_assert_eq!(
            prod.degree(),
            Some(a.degree().unwrap() + b.degree().unwrap())
        );
    }

    #[test]
    fn divmod_round_trips(a in poly(8), b in nonzero_poly(5)) {
        let (q, r) = a.divmod(&b);
        prop_assert_eq!(&(&q * &b) + &r, a);
        if !r.is_zero() {
            prop_assert!(r.degree() < b.degree());
        }
    }

    #[test]
    fn gcd_divides_both(a in nonzero_poly(5), b in nonzero_poly(5)) {
        let g = a.gcd(&b);
        prop_assert!(a.div_exact(&g).is_some());
        prop_assert!(b.div_exact(&g).is_some());
        prop_assert!(g.is_monic());
    }

    #[test]
    fn squarefree_part_is_coprime_with_derivative(p in nonzero_poly(6)) {
        prop_assume!(p.degree().unwrap() >= 1);
        let sf = p.squarefree_part();
        if sf.degree().unwrap() >= 1 {
            prop_assert_eq!(sf.gcd(&sf.derivative()), Poly::one());
        }
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(a in poly(5), b in poly(5), q in small_rat()) {
        prop_assert_eq!((&a + &b).eval(&q), a.eval(&q) + b.eval(&q));
        prop_assert_eq!((&a * &b).eval(&q), a.eval(&q) * b.eval(&q));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn factorization_reconstructs(
        unit in (-6i64..=6).prop_filter("nonzero", |u| *u != 0),
        picks in prop::collection::vec((0..pool().len(), 1u32..=3u32), 1..=3),
    ) {
        let pool = pool();
        let mut input = Poly::constant(rat_int(unit));
        for (i, mult) in &picks {
            input = &input * &pool[*i].0.pow(*mult);
        }
        let f = factor_rationals(&input);
        prop_assert_eq!(f.reconstruct(), input.clone());
        for (base, _) in &f.factors {
            prop_assert!(base.is_monic());
        }
        // deterministic output
        prop_assert_eq!(f, factor_rationals(&input));
        // Yun parts multiply back up to the leading unit
        let mut sf = Poly::one();
        for (part, mult) in yun_squarefree(&input) {
            sf = &sf * &part.pow(mult);
        }
        prop_assert_eq!(sf, input.monic());
    }

    #[test]
    fn isolation_agrees_with_counting(
        picks in prop::collection::vec(0..pool().len(), 1..=3),
    ) {
        let pool = pool();
        let mut input = Poly::one();
        for i in &picks {
            input = &input * &pool[*i].0;
        }
        let intervals = isolate_real_roots(&input);
        prop_assert_eq!(
            intervals.len(),
            count_real_roots(&input, &Bound::NegInf, &Bound::PosInf)
        );
        for w in intervals.windows(2) {
            prop_assert!(w[0].hi() <= w[1].lo());
        }
    }

    #[test]
    fn root_indices_follow_the_order(
        picks in prop::collection::vec(0..pool().len(), 1..=3),
    ) {
        let pool = pool();
        let mut input = Poly::one();
        for i in &picks {
            input = &input * &pool[*i].0;
        }
        let roots = real_roots(&input);
        for (k, a) in roots.iter().enumerate() {
            prop_assert_eq!(root_index_in(a, &input), Ok(k as u32 + 1));
        }
        // total order consistent with midpoints of well-refined intervals
        let width = rat(1, 1_000_000);
        let mids: Vec<Rat> = roots
            .iter()
            .map(|a| {
                let f = a.refine(&width);
                (f.interval().lo() + f.interval().hi()) / rat_int(2)
            })
            .collect();
        for w in mids.windows(2) {
            prop_assert!(w[0] < w[1]);
        }
    }

    #[test]
    fn sign_at_is_zero_exactly_on_multiples(
        pick in 0..pool().len(),
        q in nonzero_poly(4),
    ) {
        let (target, _) = &pool()[pick];
        for a in real_roots(target) {
            let multiple = &q * target;
            prop_assert_eq!(sign_at(&multiple, &a), 0);
            let s = sign_at(&q, &a);
            prop_assert_eq!(s == 0, q.rem(target).is_zero());
        }
    }

    #[test]
    fn canonical_round_trip(c in form()) {
        let std = c.to_standard();
        prop_assert_eq!(CanonicalForm::from_standard(&std), c.clone());
        // the conversion output satisfies the validated invariants
        let revalidated =
            StandardPiecewise::new(std.breakpoints().to_vec(), std.pieces().to_vec());
        prop_assert!(revalidated.is_ok());
    }

    #[test]
    fn ring_operations_commute_with_evaluation(
        a in form(),
        b in form(),
        q in small_rat(),
    ) {
        let sum = a.add(&b);
        prop_assert_eq!(
            eval_sign_method(&sum, &q),
            eval_sign_method(&a, &q) + eval_sign_method(&b, &q)
        );
        let prod = a.mul(&b);
        prop_assert_eq!(
            eval_sign_method(&prod, &q),
            eval_sign_method(&a, &q) * eval_sign_method(&b, &q)
        );
    }

    #[test]
    fn closed_form_matches_sign_method(c in form(), q in small_rat()) {
        let e = from_canonical(&c);
        prop_assert_eq!(e.eval(&q), eval_sign_method(&c, &q));
    }

    #[test]
    fn sign_method_matches_active_piece(c in form(), q in small_rat()) {
        let std = c.to_standard();
        prop_assert_eq!(eval_sign_method(&c, &q), std.eval_at(&q));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn composition_matches_pointwise(
        outer in form(),
        inner_base in poly(2),
        q in small_rat(),
    ) {
        // small inner keeps the composed degrees reasonable
        let inner = CanonicalForm::normalize(
            inner_base,
            vec![(Poly::one(), Poly::from_int_coeffs(&[-1, 1]), 1)],
        );
        let composed = outer.compose(&inner);
        let inner_at_q = eval_sign_method(&inner, &q);
        prop_assert_eq!(
            eval_sign_method(&composed, &q),
            eval_sign_method(&outer, &inner_at_q)
        );
    }

    #[test]
    fn derivative_matches_piecewise_rule(base in poly(3), picks in prop::collection::vec((0..pool().len(), 1u32..=2u32, poly(2)), 1..=2), q in small_rat()) {
        // force every coefficient divisible by its step polynomial
        let pool = pool();
        let raws: Vec<(Poly, Poly, u32)> = picks
            .into_iter()
            .map(|(i, u, g)| {
                let (target, count) = &pool[i];
                let coeff = &(&g + &Poly::one()) * target;
                (coeff, target.clone(), 1 + (u - 1) % count)
            })
            .collect();
        let c = CanonicalForm::normalize(base, raws);
        let d = c.derivative().expect("divisible by construction");
        let std = c.to_standard();
        // skip sample points that sit on a breakpoint
        let on_breakpoint = std
            .breakpoints()
            .iter()
            .any(|b| b.cmp_rat(&q) == core::cmp::Ordering::Equal);
        prop_assume!(!on_breakpoint);
        prop_assert_eq!(
            eval_sign_method(&d, &q),
            std.piece_at(&q).derivative().eval(&q)
        );
    }
}
