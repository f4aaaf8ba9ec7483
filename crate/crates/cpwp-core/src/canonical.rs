//! The canonical form of a continuous piecewise polynomial function and
//! its ring operations.
//!
//! A function is stored as a base polynomial plus a sum of terms
//! `coeff * C[u](P)`, where `C[u](P)` vanishes left of the `u`-th real
//! root of the monic irreducible `P` and equals `P` right of it. Term
//! roots are strictly ascending and coefficients nonzero, which makes
//! the representation unique: structural equality decides whether two
//! forms are the same function.
//!
//! [`StandardPiecewise`] is the plain interval listing (ascending
//! breakpoints, one polynomial per interval, continuity enforced at
//! construction); the two representations convert losslessly in both
//! directions.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::Zero;

use crate::error::Error;
use crate::poly::Poly;
use crate::rat::{self, Rat};
use crate::realalg::{image_root_index, real_roots, separate_strictly, AlgebraicNumber};

/// One summand `coeff * C[index](minpoly)` of a canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    coeff: Poly,
    root: AlgebraicNumber,
}

impl Term {
    pub fn coeff(&self) -> &Poly {
        &self.coeff
    }

    /// The step location: its minimal polynomial is the `P` of the term,
    /// its index the `u`.
    pub fn root(&self) -> &AlgebraicNumber {
        &self.root
    }
}

/// Canonical form `base + sum of terms`, terms strictly ascending by
/// root. Equality is structural and decides pointwise equality of the
/// underlying functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    base: Poly,
    terms: Vec<Term>,
}

/// A continuous piecewise polynomial in interval form: `pieces[i]` is
/// active on `[breakpoints[i-1], breakpoints[i]]` (unbounded at the
/// ends). Adjacent pieces are distinct and agree at their breakpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardPiecewise {
    breakpoints: Vec<AlgebraicNumber>,
    pieces: Vec<Poly>,
}

impl StandardPiecewise {
    /// Validate and build. The number of pieces must exceed the number
    /// of breakpoints by one; breakpoints must be strictly ascending,
    /// adjacent pieces distinct, and each breakpoint's minimal
    /// polynomial must divide the difference of its two pieces (the
    /// exact form of continuity for rational pieces).
    pub fn new(breakpoints: Vec<AlgebraicNumber>, pieces: Vec<Poly>) -> Result<Self, Error> {
        assert_eq!(
            pieces.len(),
            breakpoints.len() + 1,
            "piece/breakpoint arity mismatch"
        );
        for w in breakpoints.windows(2) {
            if w[0].cmp(&w[1]) != Ordering::Less {
                return Err(Error::UnorderedBreakpoints);
            }
        }
        for (i, bp) in breakpoints.iter().enumerate() {
            let delta = &pieces[i + 1] - &pieces[i];
            if delta.is_zero() {
                return Err(Error::EqualAdjacentPieces { index: i });
            }
            if !delta.rem(bp.minpoly()).is_zero() {
                return Err(Error::Discontinuous { at: bp.clone() });
            }
        }
        Ok(StandardPiecewise {
            breakpoints,
            pieces,
        })
    }

    fn new_unchecked(breakpoints: Vec<AlgebraicNumber>, pieces: Vec<Poly>) -> Self {
        debug_assert_eq!(pieces.len(), breakpoints.len() + 1);
        StandardPiecewise {
            breakpoints,
            pieces,
        }
    }

    pub fn breakpoints(&self) -> &[AlgebraicNumber] {
        &self.breakpoints
    }

    pub fn pieces(&self) -> &[Poly] {
        &self.pieces
    }

    /// The piece active at the rational point `q`. On a rational
    /// breakpoint both neighbors agree there; the left one is returned.
    pub fn piece_at(&self, q: &Rat) -> &Poly {
        let idx = self
            .breakpoints
            .iter()
            .take_while(|b| b.cmp_rat(q) == Ordering::Less)
            .count();
        &self.pieces[idx]
    }

    /// Exact value at a rational point.
    pub fn eval_at(&self, q: &Rat) -> Rat {
        self.piece_at(q).eval(q)
    }
}

impl CanonicalForm {
    /// A plain polynomial as a canonical form.
    pub fn from_poly(base: Poly) -> Self {
        CanonicalForm {
            base,
            terms: Vec::new(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn base(&self) -> &Poly {
        &self.base
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.is_empty()
    }

    /// Merge pre-canonical parts (monic irreducible step polynomials
    /// with valid indices): sum like roots, drop zeros, sort ascending.
    fn build(base: Poly, parts: Vec<(Poly, AlgebraicNumber)>) -> Self {
        let mut map: BTreeMap<AlgebraicNumber, Poly> = BTreeMap::new();
        for (coeff, root) in parts {
            if coeff.is_zero() {
                continue;
            }
            match map.entry(root) {
                alloc::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(coeff);
                }
                alloc::collections::btree_map::Entry::Occupied(mut e) => {
                    let sum = e.get() + &coeff;
                    *e.get_mut() = sum;
                }
            }
        }
        let terms = map
            .into_iter()
            .filter(|(_, coeff)| !coeff.is_zero())
            .map(|(root, coeff)| Term { coeff, root })
            .collect();
        CanonicalForm { base, terms }
    }

    /// Rewrite raw summands `coeff * C[index](target)` with arbitrary
    /// nonzero `target` into canonical shape: index 0 folds the product
    /// into the base, an index beyond the real-root count contributes
    /// nothing, and otherwise the term becomes
    /// `coeff * (target / M) * C[k](M)` for the monic irreducible `M`
    /// owning the chosen root (with `k` the root's index within `M`).
    pub fn normalize(base: Poly, raw_terms: Vec<(Poly, Poly, u32)>) -> Self {
        let mut base_acc = base;
        let mut parts = Vec::new();
        for (coeff, target, index) in raw_terms {
            assert!(!target.is_zero(), "zero polynomial inside a step term");
            if coeff.is_zero() {
                continue;
            }
            if index == 0 {
                base_acc = &base_acc + &(&coeff * &target);
                continue;
            }
            let roots = real_roots(&target);
            let Some(root) = roots.into_iter().nth(index as usize - 1) else {
                continue;
            };
            let cofactor = target
                .div_exact(root.minpoly())
                .expect("minimal polynomial divides its multiple");
            parts.push((&coeff * &cofactor, root));
        }
        Self::build(base_acc, parts)
    }

    /// Convert from interval form: the base is the leftmost piece and
    /// each breakpoint contributes `(delta / minpoly) * C[index](minpoly)`
    /// for `delta` the difference across it.
    pub fn from_standard(s: &StandardPiecewise) -> Self {
        let mut parts = Vec::with_capacity(s.breakpoints.len());
        for (i, bp) in s.breakpoints.iter().enumerate() {
            let delta = &s.pieces[i + 1] - &s.pieces[i];
            let coeff = delta
                .div_exact(bp.minpoly())
                .expect("continuity validated at construction");
            parts.push((coeff, bp.clone()));
        }
        Self::build(s.pieces[0].clone(), parts)
    }

    /// Convert to interval form by prefix-summing the terms left to
    /// right. Adjacent pieces differ automatically because term
    /// coefficients are nonzero.
    pub fn to_standard(&self) -> StandardPiecewise {
        let mut pieces = Vec::with_capacity(self.terms.len() + 1);
        let mut breakpoints = Vec::with_capacity(self.terms.len());
        let mut acc = self.base.clone();
        pieces.push(acc.clone());
        for t in &self.terms {
            acc = &acc + &(&t.coeff * t.root.minpoly());
            pieces.push(acc.clone());
            breakpoints.push(t.root.clone());
        }
        StandardPiecewise::new_unchecked(breakpoints, pieces)
    }

    /// Sum: bases add, like terms merge, zero sums drop.
    pub fn add(&self, other: &Self) -> Self {
        let mut parts = Vec::with_capacity(self.terms.len() + other.terms.len());
        for t in self.terms.iter().chain(other.terms.iter()) {
            parts.push((t.coeff.clone(), t.root.clone()));
        }
        Self::build(&self.base + &other.base, parts)
    }

    pub fn neg(&self) -> Self {
        CanonicalForm {
            base: -&self.base,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: -&t.coeff,
                    root: t.root.clone(),
                })
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Product. Cross terms with step functions at two distinct roots
    /// reduce to the later root's step: left of both the product is 0,
    /// and right of the later root the earlier step already equals its
    /// polynomial. Equal roots square the step: `C[u](P)^2 = P*C[u](P)`.
    pub fn mul(&self, other: &Self) -> Self {
        let base = &self.base * &other.base;
        let mut parts = Vec::new();
        if !other.base.is_zero() {
            for t in &self.terms {
                parts.push((&t.coeff * &other.base, t.root.clone()));
            }
        }
        if !self.base.is_zero() {
            for t in &other.terms {
                parts.push((&t.coeff * &self.base, t.root.clone()));
            }
        }
        for ta in &self.terms {
            for tb in &other.terms {
                let fg = &ta.coeff * &tb.coeff;
                let (survivor, absorbed) = match ta.root.cmp(&tb.root) {
                    Ordering::Less => (tb, ta),
                    _ => (ta, tb),
                };
                parts.push((&fg * absorbed.root.minpoly(), survivor.root.clone()));
            }
        }
        Self::build(base, parts)
    }

    /// Composition `self(inner(x))`.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = compose_poly(&self.base, inner);
        for t in &self.terms {
            let g = compose_poly(&t.coeff, inner);
            let c = compose_step(&t.root, inner);
            acc = acc.add(&g.mul(&c));
        }
        acc
    }

    /// Derivative. Exists as a continuous piecewise polynomial exactly
    /// when every `P_i` divides its coefficient `F_i`; then the term
    /// rule is `(F' + (F/P) P') * C[u](P)`. Otherwise every offending
    /// breakpoint is reported.
    pub fn derivative(&self) -> Result<Self, Error> {
        let offenders: Vec<AlgebraicNumber> = self
            .terms
            .iter()
            .filter(|t| !t.coeff.rem(t.root.minpoly()).is_zero())
            .map(|t| t.root.clone())
            .collect();
        if !offenders.is_empty() {
            return Err(Error::NotDifferentiable { at: offenders });
        }
        let parts = self
            .terms
            .iter()
            .map(|t| {
                let quotient = t.coeff.div_exact(t.root.minpoly()).expect("checked above");
                let coeff =
                    &t.coeff.derivative() + &(&quotient * &t.root.minpoly().derivative());
                (coeff, t.root.clone())
            })
            .collect();
        Ok(Self::build(self.base.derivative(), parts))
    }
}

/// Compose a plain polynomial with a piecewise function: compose piece
/// by piece, merge pieces that became equal, convert back.
fn compose_poly(q: &Poly, inner: &CanonicalForm) -> CanonicalForm {
    if q.is_constant() || inner.is_polynomial() {
        return CanonicalForm::from_poly(q.compose(&inner.base));
    }
    let std = inner.to_standard();
    let pieces = std.pieces.iter().map(|p| q.compose(p)).collect();
    assemble_merged(std.breakpoints, pieces)
}

/// Drop breakpoints whose two sides became equal, then convert to
/// canonical form. Continuity is inherited from the ingredients: both
/// sides of a surviving breakpoint agree there, so the divisibility
/// check cannot fail.
fn assemble_merged(breakpoints: Vec<AlgebraicNumber>, pieces: Vec<Poly>) -> CanonicalForm {
    debug_assert_eq!(pieces.len(), breakpoints.len() + 1);
    let mut bps = Vec::new();
    let mut ps: Vec<Poly> = vec![pieces[0].clone()];
    for (i, bp) in breakpoints.into_iter().enumerate() {
        let next = &pieces[i + 1];
        if next != ps.last().unwrap() {
            bps.push(bp);
            ps.push(next.clone());
        }
    }
    if bps.is_empty() {
        let only = ps.pop().unwrap();
        return CanonicalForm::from_poly(only);
    }
    let std = StandardPiecewise::new(bps, ps).expect("merged pieces stay continuous");
    CanonicalForm::from_standard(&std)
}

/// Canonical form of `C[v](R)` composed with `inner`: zero where
/// `inner <= alpha` (the `v`-th root of `R`) and `R(inner)` elsewhere.
///
/// The boundary points are the roots `gamma` of `R(piece)` lying in
/// their piece's domain whose image `piece(gamma)` is exactly `alpha`.
/// Between consecutive boundary points (further subdivided by `inner`'s
/// own breakpoints) the sign of `inner - alpha` is constant, so one
/// exact sample per region decides it. Regions where a piece of `inner`
/// is identically `alpha` evaluate as equal and therefore to zero, and
/// touch-without-crossing points disappear when equal neighbors merge.
fn compose_step(root: &AlgebraicNumber, inner: &CanonicalForm) -> CanonicalForm {
    let r = root.minpoly();
    let v = root.index();
    let std = inner.to_standard();

    let mut combined: Vec<AlgebraicNumber> = Vec::new();
    for (i, piece) in std.pieces.iter().enumerate() {
        let rf = r.compose(piece);
        if rf.is_zero() {
            // Constant piece sitting exactly at the root.
            continue;
        }
        for gamma in real_roots(&rf) {
            if i > 0 && gamma.cmp(&std.breakpoints[i - 1]) == Ordering::Less {
                continue;
            }
            if i < std.breakpoints.len() && gamma.cmp(&std.breakpoints[i]) == Ordering::Greater {
                continue;
            }
            if image_root_index(&gamma, piece, r).expect("gamma is a root of r o piece") == v {
                combined.push(gamma);
            }
        }
    }
    combined.extend(std.breakpoints.iter().cloned());
    combined.sort();
    combined.dedup();
    separate_strictly(&mut combined);

    let n = combined.len();
    let mut pieces_out = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let sample = if n == 0 {
            Rat::zero()
        } else if k == 0 {
            combined[0].interval().lo() - rat::rat_int(1)
        } else if k == n {
            combined[n - 1].interval().hi() + rat::rat_int(1)
        } else {
            (combined[k - 1].interval().hi() + combined[k].interval().lo()) / rat::rat_int(2)
        };
        let piece = std.piece_at(&sample);
        let value = piece.eval(&sample);
        // inner(sample) > alpha picks the polynomial branch.
        let out = if root.cmp_rat(&value) == Ordering::Less {
            r.compose(piece)
        } else {
            Poly::zero()
        };
        pieces_out.push(out);
    }
    assemble_merged(combined, pieces_out)
}
