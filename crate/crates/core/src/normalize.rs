//! Normalization regimes and the reduction of a PP to a normalized PP (nPP).
//!
//! Every regime makes the polynomial monic with zero constant term. The
//! third constraint depends on how the degree relates to the characteristic:
//!
//! - `C` when `p ∤ d`: `a_{d-1} = 0`.
//! - `M` when `p` divides `d` and `p > 2`: `a_{d-1} = 0` or `a_{d-2} = 0`.
//! - `B` when `p = 2`, `d` even and `2^i ≤ d ≤ 2^{i+1}-3`: `a_r = 0` or `a_{r-1} = 0` with `r = 2^i-1`.
//! - `BException` when `p = 2` and `d = 2^i - 2`: nothing further.

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::poly::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NormRegime {
    C,
    M,
    B { i: u32, r: usize },
    BException { i: u32 },
}

impl NormRegime {
    pub fn name(&self) -> &'static str {
        match self {
            NormRegime::C => "c",
            NormRegime::M => "m",
            NormRegime::B { .. } => "b",
            NormRegime::BException { .. } => "b-exception",
        }
    }

    /// Positions carrying the regime's extra constraint, upper first.
    /// `C` has one (always zero); `M` and `B` have two (at least one is zero).
    pub fn constrained_positions(&self, d: usize) -> Vec<usize> {
        match *self {
            NormRegime::C => vec![d - 1],
            NormRegime::M => vec![d - 1, d - 2],
            NormRegime::B { r, .. } => vec![r, r - 1],
            NormRegime::BException { .. } => vec![],
        }
    }

    /// Whether the shift `P(x+b) - P(b)` stays inside the nPP set (`p | d`).
    pub fn shift_closed(&self) -> bool {
        !matches!(self, NormRegime::C)
    }
}

pub fn regime(p: u32, d: usize) -> NormRegime {
    if !d.is_multiple_of(p as usize) {
        return NormRegime::C;
    }
    if p > 2 {
        return NormRegime::M;
    }
    // d even: locate i with 2^i <= d < 2^{i+1}
    let i = usize::BITS - 1 - d.leading_zeros();
    if d == (1usize << (i + 1)) - 2 {
        NormRegime::BException { i: i + 1 }
    } else {
        NormRegime::B { i, r: (1usize << i) - 1 }
    }
}

/// `C(n, k) mod p` as a product of binomials of base-`p` digits.
pub fn lucas_binom(mut n: u64, mut k: u64, p: u32) -> u32 {
    let p = p as u64;
    if k > n {
        return 0;
    }
    let mut acc = 1u64;
    while k > 0 || n > 0 {
        let (ni, ki) = (n % p, k % p);
        if ki > ni {
            return 0;
        }
        acc = acc * small_binom(ni, ki) % p;
        n /= p;
        k /= p;
    }
    acc as u32
}

fn small_binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, j| acc * (n - j) / (j + 1))
}

/// True iff `(x+b)^d` has no `x^e` term for `e ∈ {2^i-2, 2^i-1}` in characteristic 2.
pub fn has_gap(d: usize, i: u32) -> bool {
    let hi = (1u64 << i) - 1;
    [hi - 1, hi]
        .iter()
        .all(|&e| e > d as u64 || lucas_binom(d as u64, d as u64 - e, 2) == 0)
}

/// A normalized polynomial with the triple that produced it: `poly = a·P(x+b) + c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalized {
    pub poly: Poly,
    pub a: Elem,
    pub b: Elem,
    pub c: Elem,
}

/// Apply `a = a_d^{-1}`, the given shift, and the constant that zeroes `a_0`.
fn finish(field: &Field, p: &Poly, b: Elem) -> Normalized {
    let a = field.inv(p.coeff(p.degree())).expect("leading coefficient is nonzero");
    let shifted = p.shift(field, b);
    let c = field.neg(field.mul(a, shifted.coeff(0)));
    let poly = shifted.transform(field, a, Elem::ONE, Elem::ZERO, c).expect("a is nonzero");
    Normalized { poly, a, b, c }
}

fn mismatch(d: usize, expected: &'static str) -> Error {
    Error::RegimeMismatch { d, expected }
}

/// The unique `(a, b, c)` with `a·P(x+b) + c` monic, `a_{d-1} = 0` and `a_0 = 0`.
pub fn c_normalize(field: &Field, p: &Poly) -> Result<Normalized> {
    let d = p.degree();
    if regime(field.p(), d) != NormRegime::C {
        return Err(mismatch(d, "c"));
    }
    // coefficient of x^{d-1} in P(x+b) is a_{d-1} + d·b·a_d
    let denom = field.mul(field.from_int(d as u64), p.coeff(d));
    let b = field.neg(field.div(p.coeff(d - 1), denom)?);
    Ok(finish(field, p, b))
}

/// Monic, zero constant, and `a_{d-1} = 0` or `a_{d-2} = 0`, for `p | d`, `p > 2`.
pub fn m_normalize(field: &Field, p: &Poly) -> Result<Normalized> {
    let d = p.degree();
    if regime(field.p(), d) != NormRegime::M {
        return Err(mismatch(d, "m"));
    }
    let (hi, lo) = (p.coeff(d - 1), p.coeff(d - 2));
    // The shift leaves a_{d-1} alone; a_{d-2} moves to a_{d-2} + (d-1)·a_{d-1}·b since C(d,2) ≡ 0.
    let b = if hi.is_zero() || lo.is_zero() {
        Elem::ZERO
    } else {
        let denom = field.mul(field.from_int(d as u64 - 1), hi);
        field.neg(field.div(lo, denom)?)
    };
    Ok(finish(field, p, b))
}

/// Monic, zero constant, and `a_r = 0` or `a_{r-1} = 0`, for `p = 2 | d` outside the exception.
pub fn b_normalize(field: &Field, p: &Poly) -> Result<Normalized> {
    let d = p.degree();
    let r = match regime(field.p(), d) {
        NormRegime::B { r, .. } => r,
        NormRegime::BException { .. } => return Err(Error::BException(d)),
        _ => return Err(mismatch(d, "b")),
    };
    let (hi, lo) = (p.coeff(r), p.coeff(r - 1));
    // Inside the gap only a_r (x+b)^r reaches x^{r-1}, adding a_r·b since r is odd.
    let b = if hi.is_zero() || lo.is_zero() { Elem::ZERO } else { field.div(lo, hi)? };
    Ok(finish(field, p, b))
}

/// Normalize in whatever regime `(p, d)` falls in. The exception regime only
/// gets the monic and zero-constant steps.
pub fn normalize(field: &Field, p: &Poly) -> Result<Normalized> {
    match regime(field.p(), p.degree()) {
        NormRegime::C => c_normalize(field, p),
        NormRegime::M => m_normalize(field, p),
        NormRegime::B { .. } => b_normalize(field, p),
        NormRegime::BException { .. } => Ok(finish(field, p, Elem::ZERO)),
    }
}

/// Whether `p` satisfies the constraints of its regime. Permutation is not checked.
pub fn is_npp(field: &Field, p: &Poly) -> bool {
    let d = p.degree();
    if !p.is_monic() || (d > 0 && !p.coeff(0).is_zero()) {
        return false;
    }
    let pos = regime(field.p(), d).constrained_positions(d);
    pos.is_empty() || pos.iter().any(|&k| p.coeff(k).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::poly::pascal_mod;

    fn gf(p: u32, m: u32, prim: &[u32]) -> Field {
        Field::new(FieldSpec::new(p, m, prim.to_vec())).unwrap()
    }

    fn poly(text: &str) -> Poly {
        text.parse().unwrap()
    }

    #[test]
    fn regimes() {
        assert_eq!(regime(5, 9), NormRegime::C);
        assert_eq!(regime(3, 6), NormRegime::M);
        assert_eq!(regime(2, 10), NormRegime::B { i: 3, r: 7 });
        assert_eq!(regime(2, 6), NormRegime::BException { i: 3 });
        assert_eq!(regime(2, 2), NormRegime::BException { i: 2 });
        assert_eq!(regime(2, 14), NormRegime::BException { i: 4 });
        assert_eq!(regime(2, 4), NormRegime::B { i: 2, r: 3 });
        assert_eq!(regime(2, 8), NormRegime::B { i: 3, r: 7 });
        assert_eq!(regime(2, 7), NormRegime::C);
    }

    #[test]
    fn lucas_examples() {
        assert_eq!(lucas_binom(8, 2, 2), 0);
        assert_eq!(lucas_binom(13, 5, 2), 1);
        assert_eq!(lucas_binom(7, 0, 3), 1);
        assert_eq!(lucas_binom(3, 5, 3), 0);
    }

    #[test]
    fn lucas_agrees_with_pascal() {
        for p in [2u32, 3, 5, 7] {
            let rows = pascal_mod(64, p);
            for n in 0..=64usize {
                for k in 0..=n {
                    assert_eq!(lucas_binom(n as u64, k as u64, p), rows[n][k], "C({n},{k}) mod {p}");
                }
            }
        }
    }

    #[test]
    fn gap_intervals() {
        for d in 8..=13 {
            assert!(has_gap(d, 3));
        }
        for i in 2..=5u32 {
            for d in (1usize << i)..=(1usize << (i + 1)) - 3 {
                assert!(has_gap(d, i), "d = {d}, i = {i}");
            }
            let d = (1usize << i) - 2;
            assert!(!has_gap(d, i));
        }
    }

    #[test]
    fn published_examples_are_normalized() {
        let gf25 = gf(5, 2, &[1, 3, 3]);
        let c = poly("1,0,2,0,3,0,0,0,0,0");
        assert!(is_npp(&gf25, &c));
        assert_eq!(c_normalize(&gf25, &c).unwrap(), Normalized { poly: c.clone(), a: Elem::ONE, b: Elem::ZERO, c: Elem::ZERO });

        let gf9 = gf(3, 2, &[1, 1, 2]);
        let m = poly("1,1,0,1,5,5,0");
        assert!(is_npp(&gf9, &m));
        assert_eq!(m_normalize(&gf9, &m).unwrap().poly, m);

        let gf32 = gf(2, 5, &[1, 0, 1, 1, 1, 1]);
        let b = poly("1,1,0,1,0,26,30,0,21,31,0");
        assert!(is_npp(&gf32, &b));
        assert_eq!(b_normalize(&gf32, &b).unwrap().poly, b);
    }

    #[test]
    fn is_npp_rejects_constant() {
        let gf5 = gf(5, 1, &[1, 2]);
        assert!(!is_npp(&gf5, &poly("1,0,0,1")));
        assert!(is_npp(&gf5, &Poly::monomial(3)));
    }

    #[test]
    fn c_normalize_recovers_cube() {
        let f = gf(5, 1, &[1, 2]);
        let p = Poly::monomial(3).transform(&f, f.from_int(2), Elem::ONE, Elem::ONE, f.from_int(3)).unwrap();
        let n = c_normalize(&f, &p).unwrap();
        assert_eq!(n.poly, Poly::monomial(3));
        assert_eq!(p.transform(&f, n.a, Elem::ONE, n.b, n.c).unwrap(), n.poly);
        assert_eq!(n.a, f.from_int(3));
        assert_eq!(n.b, f.from_int(4));
        assert!(c_normalize(&gf(3, 2, &[1, 1, 2]), &Poly::monomial(6)).is_err());
    }

    #[test]
    fn b_exception_refuses() {
        let f = gf(2, 4, &[1, 0, 0, 1, 1]);
        assert_eq!(b_normalize(&f, &Poly::monomial(6)), Err(Error::BException(6)));
        assert!(normalize(&f, &Poly::monomial(6)).is_ok());
    }

    #[test]
    fn m_normalize_after_shift() {
        let f = gf(3, 2, &[1, 1, 2]);
        let m = poly("1,1,0,1,5,5,0");
        for b in f.elements() {
            for a in f.nonzero_elements() {
                let v = m.transform(&f, a, Elem::ONE, b, Elem(3)).unwrap();
                let n = m_normalize(&f, &v).unwrap();
                assert!(is_npp(&f, &n.poly));
                assert!(n.poly.is_permutation(&f));
            }
        }
    }

    #[test]
    fn b_normalize_zeroes_a_constrained_term() {
        let f = gf(2, 5, &[1, 0, 1, 1, 1, 1]);
        let base = poly("1,1,0,1,0,26,30,0,21,31,0");
        for b in f.elements() {
            let v = base.transform(&f, Elem(5), Elem::ONE, b, Elem(9)).unwrap();
            let n = b_normalize(&f, &v).unwrap();
            assert!(is_npp(&f, &n.poly));
            assert_eq!(v.transform(&f, n.a, Elem::ONE, n.b, n.c).unwrap(), n.poly);
        }
    }
}
