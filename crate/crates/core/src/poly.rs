//! Polynomials over a [`Field`] and the normalization transform `aP(sx+b)+c`.
//!
//! A `Poly` stores element indices only; every operation takes the field it
//! lives in. The canonical text form lists coefficients from degree `d`
//! down to 0, comma separated.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::{Elem, Field};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    /// a_0, a_1, ..., a_d
    coeffs: Vec<Elem>,
}

impl Poly {
    /// Build from coefficients listed lowest degree first.
    pub fn new(coeffs: Vec<Elem>) -> Result<Poly> {
        match coeffs.last() {
            Some(c) if !c.is_zero() => Ok(Poly { coeffs }),
            _ => Err(Error::ZeroLeading),
        }
    }

    /// Build from coefficient indices listed from degree `d` down to 0.
    pub fn from_descending(indices: &[u16]) -> Result<Poly> {
        Poly::new(indices.iter().rev().map(|&i| Elem(i)).collect())
    }

    /// Parse the canonical text form and check every index against the field.
    pub fn parse(field: &Field, text: &str) -> Result<Poly> {
        let poly: Poly = text.parse()?;
        if let Some(c) = poly.coeffs.iter().find(|c| c.0 as u32 >= field.q()) {
            return Err(Error::ElementOutOfRange { index: c.0 as u32, q: field.q() });
        }
        Ok(poly)
    }

    /// `x^d`.
    pub fn monomial(d: usize) -> Poly {
        let mut coeffs = vec![Elem::ZERO; d + 1];
        coeffs[d] = Elem::ONE;
        Poly { coeffs }
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    #[inline]
    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    /// Coefficients lowest degree first.
    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn descending(&self) -> Vec<Elem> {
        self.coeffs.iter().rev().copied().collect()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs[self.degree()] == Elem::ONE
    }

    /// Replace the coefficient vector wholesale; used by maps that provably keep the leading term.
    pub(crate) fn from_raw(coeffs: Vec<Elem>) -> Poly {
        debug_assert!(coeffs.last().is_some_and(|c| !c.is_zero()));
        Poly { coeffs }
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }

    /// Readable algebraic form such as `x^9+2x^7+3x^5`.
    pub fn to_expr(&self) -> String {
        let mut out = String::new();
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !out.is_empty() {
                out.push('+');
            }
            let coef = if *c == Elem::ONE && deg > 0 { String::new() } else { c.to_string() };
            match deg {
                0 => out.push_str(&c.to_string()),
                1 => out.push_str(&format!("{coef}x")),
                _ => out.push_str(&format!("{coef}x^{deg}")),
            }
        }
        out
    }

    /// Horner evaluation.
    pub fn eval(&self, field: &Field, x: Elem) -> Elem {
        self.coeffs.iter().rev().fold(Elem::ZERO, |acc, &c| field.add(field.mul(acc, x), c))
    }

    /// Value vector `(P(0), P(1), ..., P(q-1))` in index order.
    pub fn values(&self, field: &Field) -> Vec<Elem> {
        field.elements().map(|x| self.eval(field, x)).collect()
    }

    pub fn is_permutation(&self, field: &Field) -> bool {
        let mut seen = vec![false; field.q() as usize];
        field.elements().all(|x| !std::mem::replace(&mut seen[self.eval(field, x).index()], true))
    }

    /// True iff both `P(x)` and `P(x) + x` permute the field.
    pub fn is_complete(&self, field: &Field) -> bool {
        if !self.is_permutation(field) {
            return false;
        }
        let mut seen = vec![false; field.q() as usize];
        field
            .elements()
            .all(|x| !std::mem::replace(&mut seen[field.add(self.eval(field, x), x).index()], true))
    }

    /// `P(x + b)`, by binomial expansion with coefficients reduced mod p.
    pub fn shift(&self, field: &Field, b: Elem) -> Poly {
        if b.is_zero() {
            return self.clone();
        }
        let d = self.degree();
        let binom = pascal_mod(d, field.p());
        let b_pow: Vec<Elem> = (0..=d).map(|e| field.pow(b, e as i64)).collect();
        let mut out = vec![Elem::ZERO; d + 1];
        for (j, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            // a (x+b)^j = sum_i C(j,i) a b^(j-i) x^i
            for (i, slot) in out.iter_mut().enumerate().take(j + 1) {
                let c = binom[j][i];
                if c == 0 {
                    continue;
                }
                let term = field.mul(field.mul(a, b_pow[j - i]), field.from_int(c as u64));
                *slot = field.add(*slot, term);
            }
        }
        Poly::from_raw(out)
    }

    /// `P(s x)`.
    pub fn scale_argument(&self, field: &Field, s: Elem) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| field.mul(c, field.pow(s, i as i64)))
            .collect();
        Poly::from_raw(coeffs)
    }

    /// `a P(s x + b) + c`.
    pub fn transform(&self, field: &Field, a: Elem, s: Elem, b: Elem, c: Elem) -> Result<Poly> {
        if a.is_zero() || s.is_zero() {
            return Err(Error::ZeroScale);
        }
        // P(sx + b) = Q(sx) with Q(y) = P(y + b)
        let shifted = self.shift(field, b).scale_argument(field, s);
        let mut coeffs: Vec<Elem> = shifted.coeffs.iter().map(|&x| field.mul(a, x)).collect();
        coeffs[0] = field.add(coeffs[0], c);
        Ok(Poly::from_raw(coeffs))
    }

    /// `P(x + b) - P(b)`: the argument shift with the constant term zeroed again.
    pub fn shift_rezeroed(&self, field: &Field, b: Elem) -> Poly {
        let mut s = self.shift(field, b);
        s.coeffs[0] = Elem::ZERO;
        s
    }

    /// Number of points where the two polynomials agree.
    pub fn agreements(&self, field: &Field, other: &Poly) -> usize {
        field.elements().filter(|&x| self.eval(field, x) == other.eval(field, x)).count()
    }
}

/// Rows `0..=n` of Pascal's triangle reduced mod `p`.
pub fn pascal_mod(n: usize, p: u32) -> Vec<Vec<u32>> {
    let mut rows: Vec<Vec<u32>> = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let mut row = vec![1u32; j + 1];
        for i in 1..j {
            row[i] = (rows[j - 1][i - 1] + rows[j - 1][i]) % p;
        }
        rows.push(row);
    }
    rows
}

impl Ord for Poly {
    /// Degree first, then coefficients from the top degree down.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, c) in self.coeffs.iter().rev().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{self}]")
    }
}

impl FromStr for Poly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Poly> {
        let indices = s
            .split(',')
            .map(|t| t.trim().parse::<u16>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::PolyParse(s.to_string()))?;
        Poly::from_descending(&indices).map_err(|_| Error::PolyParse(s.to_string()))
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Poly, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    fn gf(p: u32, m: u32, prim: &[u32]) -> Field {
        Field::new(FieldSpec::new(p, m, prim.to_vec())).unwrap()
    }

    #[test]
    fn text_form_round_trips() {
        let p: Poly = "1,0,2,0,12,0,4,0,17,0".parse().unwrap();
        assert_eq!(p.degree(), 9);
        assert_eq!(p.coeff(7), Elem(2));
        assert_eq!(p.to_text(), "1,0,2,0,12,0,4,0,17,0");
        assert_eq!(p.to_expr(), "x^9+2x^7+12x^5+4x^3+17x");
        assert!("0,1".parse::<Poly>().is_err());
        assert!("1,a".parse::<Poly>().is_err());
    }

    #[test]
    fn parse_checks_field_range() {
        let f = gf(5, 1, &[1, 2]);
        assert!(Poly::parse(&f, "1,0,7").is_err());
        assert!(Poly::parse(&f, "1,0,4").is_ok());
    }

    #[test]
    fn monomial_eval() {
        let f = gf(5, 2, &[1, 3, 3]);
        let p = Poly::monomial(7);
        assert_eq!(p.eval(&f, Elem::ZERO), Elem::ZERO);
        assert_eq!(p.eval(&f, Elem::ONE), Elem::ONE);
    }

    #[test]
    fn x7_permutes_gf11() {
        let f = gf(11, 1, &[1, 4]);
        let mut v: Vec<u16> = Poly::monomial(7).values(&f).iter().map(|e| e.0).collect();
        v.sort();
        assert_eq!(v, (0..11).collect::<Vec<_>>());
    }

    /// Roots of `x^9 + x` other than zero; the additive map permutes iff there are none.
    fn kernel_of_x9_plus_x(f: &Field) -> usize {
        f.nonzero_elements().filter(|&x| f.add(f.pow(x, 9), x).is_zero()).count()
    }

    fn x9_plus_x() -> Poly {
        let mut c = vec![Elem::ZERO; 10];
        c[9] = Elem::ONE;
        c[1] = Elem::ONE;
        Poly::new(c).unwrap()
    }

    #[test]
    fn permutation_examples() {
        let gf27 = gf(3, 3, &[1, 0, 2, 1]);
        assert!(Poly::monomial(9).is_permutation(&gf27));
        assert!(x9_plus_x().is_permutation(&gf27));
        let gf5 = gf(5, 1, &[1, 2]);
        assert!(!Poly::monomial(2).is_permutation(&gf5));
        // over GF(81), x^8 = -1 = t^40 is solvable, so x^9 + x has nonzero roots
        let gf81 = gf(3, 4, &[1, 2, 0, 0, 2]);
        assert!(Poly::monomial(9).is_permutation(&gf81));
        assert_eq!(kernel_of_x9_plus_x(&gf81), 8);
        assert!(!x9_plus_x().is_permutation(&gf81));
    }

    #[test]
    fn complete_examples() {
        let gf27 = gf(3, 3, &[1, 0, 2, 1]);
        assert_eq!(kernel_of_x9_plus_x(&gf27), 0);
        assert!(Poly::monomial(9).is_complete(&gf27));
        let gf81 = gf(3, 4, &[1, 2, 0, 0, 2]);
        assert!(!Poly::monomial(9).is_complete(&gf81));
        let gf4 = gf(2, 2, &[1, 1, 1]);
        assert!(!Poly::monomial(1).is_complete(&gf4));
        let gf5 = gf(5, 1, &[1, 2]);
        assert!(Poly::monomial(1).is_complete(&gf5));
    }

    #[test]
    fn shift_in_characteristic_two() {
        let f = gf(2, 4, &[1, 0, 0, 1, 1]);
        for b in f.elements() {
            let s8 = Poly::monomial(8).shift(&f, b);
            let mut expect = [Elem::ZERO; 9];
            expect[8] = Elem::ONE;
            expect[0] = f.pow(b, 8);
            assert_eq!(s8.coeffs(), &expect[..]);

            let s12 = Poly::monomial(12).shift(&f, b);
            let mut expect = [Elem::ZERO; 13];
            expect[12] = Elem::ONE;
            expect[8] = f.pow(b, 4);
            expect[4] = f.pow(b, 8);
            expect[0] = f.pow(b, 12);
            assert_eq!(s12.coeffs(), &expect[..]);
        }
        assert_eq!(Poly::monomial(8).shift(&f, Elem::ZERO), Poly::monomial(8));
    }

    #[test]
    fn transform_of_cube_over_gf5() {
        // 2(x+1)^3 + 3 = 2x^3 + 6x^2 + 6x + 5 = 2x^3 + x^2 + x over GF(5)
        let f = gf(5, 1, &[1, 2]);
        let two = f.from_int(2);
        let three = f.from_int(3);
        let t = Poly::monomial(3).transform(&f, two, Elem::ONE, Elem::ONE, three).unwrap();
        let expect = Poly::new(vec![Elem::ZERO, f.from_int(1), f.from_int(1), f.from_int(2)]).unwrap();
        assert_eq!(t, expect);
        assert!(t.is_permutation(&f));
        assert_eq!(
            Poly::monomial(3).transform(&f, Elem::ZERO, Elem::ONE, Elem::ONE, three),
            Err(Error::ZeroScale)
        );
    }

    #[test]
    fn identity_transform() {
        let f = gf(5, 2, &[1, 3, 3]);
        let p: Poly = "1,0,2,0,3,0,0,0,0,0".parse().unwrap();
        assert_eq!(p.transform(&f, Elem::ONE, Elem::ONE, Elem::ZERO, Elem::ZERO).unwrap(), p);
        let a = Elem(7);
        let ax9 = Poly::monomial(9).transform(&f, a, Elem::ONE, Elem::ZERO, Elem::ZERO).unwrap();
        assert_eq!(ax9.coeff(9), a);
        assert_eq!(ax9.coeffs()[..9].iter().filter(|c| !c.is_zero()).count(), 0);
    }

    #[test]
    fn agreements_examples() {
        let f = gf(11, 1, &[1, 4]);
        let p = Poly::monomial(7);
        let mut c = p.coeffs().to_vec();
        c[1] = Elem::ONE;
        let q = Poly::new(c).unwrap();
        assert_eq!(p.agreements(&f, &p), 11);
        assert_eq!(p.agreements(&f, &q), 1);
    }

    #[test]
    fn ordering_is_descending_lexicographic() {
        let a: Poly = "1,0,1,0".parse().unwrap();
        let b: Poly = "1,0,0,5".parse().unwrap();
        let c: Poly = "1,0".parse().unwrap();
        assert!(b < a);
        assert!(c < b);
    }
}
