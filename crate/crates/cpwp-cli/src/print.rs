//! Deterministic rendering of kernel values back into the input
//! grammar. Printing then parsing always reproduces an equal value, and
//! printing is idempotent across that round trip.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use cpwp_core::canonical::CanonicalForm;
use cpwp_core::realalg::AlgebraicNumber;
use cpwp_core::{Poly, Rat, SemiPolyExpr};

/// `p` or `p/q`, denominator omitted when 1.
pub fn format_rat(q: &Rat) -> String {
    if q.denom().is_one() {
        format!("{}", q.numer())
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Descending powers, explicit `*` between coefficient and variable:
/// `x^4 + 4*x^3 - 2*x^2`, `-1/2*x + 3`, `0`.
pub fn format_poly(p: &Poly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    let mut first = true;
    for i in (0..p.coeffs().len()).rev() {
        let c = p.coeff(i);
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if first {
            if neg {
                out.push('-');
            }
            first = false;
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&monomial_body(&mag, i));
    }
    out
}

fn monomial_body(mag: &Rat, power: usize) -> String {
    match power {
        0 => format_rat(mag),
        _ => {
            let var = if power == 1 {
                "x".to_string()
            } else {
                format!("x^{power}")
            };
            if mag.is_one() {
                var
            } else {
                format!("{}*{}", format_rat(mag), var)
            }
        }
    }
}

/// Breakpoints print as their rational value or as `root(P, k)`.
pub fn format_breakpoint(a: &AlgebraicNumber) -> String {
    match a.rational_value() {
        Some(q) => format_rat(q),
        None => format!("root({}, {})", format_poly(a.minpoly()), a.index()),
    }
}

/// Base first, then terms by ascending root; coefficients are pulled in
/// front of `C[k](P)` with their sign on the separator, parenthesized
/// unless they are a single monomial.
pub fn format_canonical(c: &CanonicalForm) -> String {
    let mut out = String::new();
    if !c.base().is_zero() || c.terms().is_empty() {
        out.push_str(&format_poly(c.base()));
    }
    for t in c.terms() {
        let neg = t
            .coeff()
            .leading_coeff()
            .map_or(false, |lc| lc.is_negative());
        let mag = if neg { -t.coeff() } else { t.coeff().clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let step = format!(
            "C[{}]({})",
            t.root().index(),
            format_poly(t.root().minpoly())
        );
        if mag.is_one() {
            out.push_str(&step);
        } else if mag.coeffs().iter().filter(|c| !c.is_zero()).count() == 1 {
            out.push_str(&format!("{}*{}", format_poly(&mag), step));
        } else {
            out.push_str(&format!("({})*{}", format_poly(&mag), step));
        }
    }
    out
}

/// Closed-form expressions print with `abs(...)` for the absolute
/// value; sums, products and rational scalings appear verbatim.
pub fn format_semipoly(e: &SemiPolyExpr) -> String {
    fmt_expr(e, 0)
}

// precedence: 0 bare, 1 inside a sum, 2 inside a product
fn fmt_expr(e: &SemiPolyExpr, prec: u8) -> String {
    match e {
        SemiPolyExpr::Poly(p) => {
            let s = format_poly(p);
            let compound = p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1
                || p.leading_coeff().map_or(false, |lc| lc.is_negative());
            if compound && prec >= 1 {
                format!("({s})")
            } else {
                s
            }
        }
        SemiPolyExpr::Sum(a, b) => {
            let body = match &**b {
                SemiPolyExpr::Scale(k, inner) if *k == -Rat::from_integer(BigInt::one()) => {
                    format!("{} - {}", fmt_expr(a, 1), fmt_expr(inner, 2))
                }
                _ => format!("{} + {}", fmt_expr(a, 1), fmt_expr(b, 1)),
            };
            if prec >= 2 {
                format!("({body})")
            } else {
                body
            }
        }
        SemiPolyExpr::Product(a, b) => format!("{}*{}", fmt_expr(a, 2), fmt_expr(b, 2)),
        SemiPolyExpr::Scale(k, inner) => {
            let ks = if k.is_negative() {
                format!("({})", format_rat(k))
            } else {
                format_rat(k)
            };
            format!("{}*{}", ks, fmt_expr(inner, 2))
        }
        SemiPolyExpr::Abs(inner) => format!("abs({})", fmt_expr(inner, 0)),
    }
}

/// Decimal rendering of an exact rational with the given number of
/// significant digits, rounded half to even. Plain notation close to
/// one, scientific otherwise.
pub fn format_decimal(q: &Rat, sig_digits: usize) -> String {
    assert!(sig_digits >= 1);
    if q.is_zero() {
        return "0".into();
    }
    let neg = q.is_negative();
    let n = q.numer().abs();
    let d = q.denom().clone();
    let ten = BigInt::from(10);

    // exponent: 10^e <= n/d < 10^(e+1)
    let mut e: i64 = 0;
    if n >= d {
        while n >= &d * ten.pow((e + 1) as u32) {
            e += 1;
        }
    } else {
        loop {
            e -= 1;
            if &n * ten.pow((-e) as u32) >= d {
                break;
            }
        }
    }

    // scaled = round_half_even(n/d * 10^(sig-1-e)) with sig digits
    let shift = sig_digits as i64 - 1 - e;
    let (num, den) = if shift >= 0 {
        (&n * ten.pow(shift as u32), d)
    } else {
        (n, &d * ten.pow((-shift) as u32))
    };
    let (mut scaled, rem) = (&num / &den, &num % &den);
    let twice = &rem * 2;
    if twice > den || (twice == den && (&scaled % 2u8) == BigInt::one()) {
        scaled += 1;
    }
    let mut digits = scaled.to_string();
    if digits.len() > sig_digits {
        // rounding carried over (e.g. 999.96 -> 1000): drop the extra 0
        digits.truncate(sig_digits);
        e += 1;
    }

    let body = if e >= -4 && (e as i128) < sig_digits as i128 {
        if e >= 0 {
            let point = (e + 1) as usize;
            if point >= digits.len() {
                digits
            } else {
                format!("{}.{}", &digits[..point], &digits[point..])
            }
        } else {
            let zeros = "0".repeat((-e - 1) as usize);
            format!("0.{zeros}{digits}")
        }
    } else {
        let head = &digits[..1];
        let tail = &digits[1..];
        if tail.is_empty() {
            format!("{head}e{e}")
        } else {
            format!("{head}.{tail}e{e}")
        }
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}
