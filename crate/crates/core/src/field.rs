//! GF(p^m) in generator-index notation.
//!
//! Every element is a single integer: `0` is the field zero and `i >= 1`
//! stands for `t^(i-1)`, where `t` is a root of the primitive polynomial.
//! Multiplication, inversion and the Frobenius map are pure index
//! arithmetic modulo `q - 1`; addition goes through a dense `q x q` table
//! for `q <= 256` and through Zech logarithms above that.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest field order the library accepts.
pub const MAX_ORDER: u64 = 1 << 16;

/// Above this order the dense addition table is skipped in favour of Zech logarithms.
pub const DENSE_ADD_LIMIT: u32 = 256;

/// A field element by index: 0 is zero, `i >= 1` is `t^(i-1)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Elem(pub u16);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Characteristic, extension degree and primitive polynomial of a field.
///
/// `prim_poly` lists the `m + 1` coefficients from degree `m` down to degree 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub m: u32,
    pub prim_poly: Vec<u32>,
}

impl FieldSpec {
    pub fn new(p: u32, m: u32, prim_poly: Vec<u32>) -> Self {
        FieldSpec { p, m, prim_poly }
    }

    pub fn order(&self) -> u64 {
        (self.p as u64).saturating_pow(self.m)
    }

    /// Human-readable form such as `x^2+3x+3`.
    pub fn poly_string(&self) -> String {
        let m = self.prim_poly.len().saturating_sub(1);
        let mut out = String::new();
        for (i, &c) in self.prim_poly.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let deg = m - i;
            if !out.is_empty() {
                out.push('+');
            }
            match (c, deg) {
                (_, 0) => out.push_str(&c.to_string()),
                (1, 1) => out.push('x'),
                (_, 1) => out.push_str(&format!("{c}x")),
                (1, _) => out.push_str(&format!("x^{deg}")),
                _ => out.push_str(&format!("{c}x^{deg}")),
            }
        }
        out
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut i = 2u32;
    while (i as u64) * (i as u64) <= n as u64 {
        if n.is_multiple_of(i) {
            return false;
        }
        i += 1;
    }
    true
}

/// An immutable finite field with precomputed arithmetic tables.
#[derive(Clone)]
pub struct Field {
    spec: FieldSpec,
    q: u32,
    /// index -> polynomial-basis vector packed as a base-p integer
    packed: Vec<u32>,
    /// packed vector -> index
    index_of: Vec<u16>,
    /// zech[e] = index of 1 + t^e
    zech: Vec<u16>,
    neg: Vec<u16>,
    frob: Vec<u16>,
    add_table: Option<Vec<u16>>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("q", &self.q)
            .field("p", &self.spec.p)
            .field("m", &self.spec.m)
            .field("prim_poly", &self.spec.prim_poly)
            .finish()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec
    }
}

impl Eq for Field {}

impl Field {
    /// Build GF(p^m) from a primitive polynomial, verifying primitivity by powering.
    pub fn new(spec: FieldSpec) -> Result<Field> {
        let FieldSpec { p, m, ref prim_poly } = spec;
        if !is_prime(p) {
            return Err(Error::NonPrimeP(p));
        }
        if m == 0 {
            return Err(Error::ZeroExtensionDegree);
        }
        let order = spec.order();
        if order > MAX_ORDER || (p as u64).checked_pow(m).is_none() {
            return Err(Error::FieldTooLarge(order));
        }
        if prim_poly.len() != m as usize + 1 || prim_poly[0] != 1 {
            return Err(Error::NonMonic { expected: m, got: prim_poly.clone() });
        }
        if let Some(&c) = prim_poly.iter().find(|&&c| c >= p) {
            return Err(Error::CoefficientOutOfRange { coeff: c, p });
        }
        let q = order as u32;
        let mu = m as usize;

        // x^m = -(c_{m-1} x^{m-1} + ... + c_0)
        let reduction: Vec<u32> = (0..mu).map(|j| (p - prim_poly[mu - j]) % p).collect();

        let mut packed = vec![0u32; q as usize];
        let mut index_of = vec![u16::MAX; q as usize];
        index_of[0] = 0;
        let mut digits = vec![0u32; mu];
        digits[0] = 1;
        for e in 0..(q - 1) {
            let code = pack(&digits, p);
            if code == 0 || index_of[code as usize] != u16::MAX {
                return Err(Error::NonPrimitivePoly(prim_poly.clone()));
            }
            let idx = (e + 1) as u16;
            index_of[code as usize] = idx;
            packed[idx as usize] = code;
            // multiply by x
            let top = digits[mu - 1];
            for j in (1..mu).rev() {
                digits[j] = digits[j - 1];
            }
            digits[0] = 0;
            for j in 0..mu {
                digits[j] = (digits[j] + top * reduction[j]) % p;
            }
        }
        // t^(q-1) must return to 1 (only fails for degenerate m = 1 inputs such as x over GF(2))
        if pack(&digits, p) != 1 {
            return Err(Error::NonPrimitivePoly(prim_poly.clone()));
        }

        let add_packed = |a: u32, b: u32| -> u32 {
            let (mut a, mut b) = (a, b);
            let mut out = 0u32;
            let mut w = 1u32;
            for _ in 0..mu {
                out += ((a % p + b % p) % p) * w;
                a /= p;
                b /= p;
                w *= p;
            }
            out
        };
        let neg_packed = |a: u32| -> u32 {
            let mut a = a;
            let mut out = 0u32;
            let mut w = 1u32;
            for _ in 0..mu {
                out += ((p - a % p) % p) * w;
                a /= p;
                w *= p;
            }
            out
        };

        let neg: Vec<u16> = (0..q as usize).map(|i| index_of[neg_packed(packed[i]) as usize]).collect();
        let zech: Vec<u16> = (0..(q - 1) as usize)
            .map(|e| index_of[add_packed(1, packed[e + 1]) as usize])
            .collect();
        let frob: Vec<u16> = (0..q as usize)
            .map(|i| {
                if i == 0 {
                    0
                } else {
                    (((i as u64 - 1) * p as u64) % (q as u64 - 1) + 1) as u16
                }
            })
            .collect();
        let add_table = if q <= DENSE_ADD_LIMIT {
            let n = q as usize;
            let mut t = vec![0u16; n * n];
            for i in 0..n {
                for j in 0..n {
                    t[i * n + j] = index_of[add_packed(packed[i], packed[j]) as usize];
                }
            }
            Some(t)
        } else {
            None
        };

        Ok(Field { spec, q, packed, index_of, zech, neg, frob, add_table })
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.q
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.spec.p
    }

    #[inline]
    pub fn m(&self) -> u32 {
        self.spec.m
    }

    /// Order of the multiplicative group, `q - 1`.
    #[inline]
    pub fn group_order(&self) -> u32 {
        self.q - 1
    }

    /// The primitive element `t` (index 2), or 1 in GF(2).
    pub fn generator(&self) -> Elem {
        if self.q == 2 {
            Elem::ONE
        } else {
            Elem(2)
        }
    }

    pub fn elem(&self, index: u32) -> Result<Elem> {
        if index < self.q {
            Ok(Elem(index as u16))
        } else {
            Err(Error::ElementOutOfRange { index, q: self.q })
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.q).map(|i| Elem(i as u16))
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Elem> {
        (1..self.q).map(|i| Elem(i as u16))
    }

    /// Exponent `e` with `x = t^e`, or `None` for zero.
    #[inline]
    pub fn exponent(&self, x: Elem) -> Option<u32> {
        if x.is_zero() {
            None
        } else {
            Some(x.0 as u32 - 1)
        }
    }

    /// `t^e`, with `e` reduced modulo `q - 1` (negative exponents allowed).
    #[inline]
    pub fn from_exponent(&self, e: i64) -> Elem {
        let n = (self.q - 1) as i64;
        Elem((e.rem_euclid(n) + 1) as u16)
    }

    /// The image of the integer `n` under `Z -> GF(p) -> GF(q)`.
    pub fn from_int(&self, n: u64) -> Elem {
        let r = (n % self.spec.p as u64) as usize;
        Elem(self.index_of[r])
    }

    /// Coefficients of the polynomial-basis representative, lowest degree first.
    pub fn poly_basis(&self, x: Elem) -> Vec<u32> {
        let p = self.spec.p;
        let mut code = self.packed[x.index()];
        (0..self.spec.m)
            .map(|_| {
                let d = code % p;
                code /= p;
                d
            })
            .collect()
    }

    #[inline]
    pub fn add(&self, x: Elem, y: Elem) -> Elem {
        match &self.add_table {
            Some(t) => Elem(t[x.index() * self.q as usize + y.index()]),
            None => self.add_by_zech(x, y),
        }
    }

    /// Addition through the Zech logarithm table; agrees with [`Field::add`] everywhere.
    pub fn add_by_zech(&self, x: Elem, y: Elem) -> Elem {
        if x.is_zero() {
            return y;
        }
        if y.is_zero() {
            return x;
        }
        let n = self.q - 1;
        let a = x.0 as u32 - 1;
        let b = y.0 as u32 - 1;
        let z = self.zech[((b + n - a) % n) as usize];
        if z == 0 {
            Elem::ZERO
        } else {
            Elem(((a + z as u32 - 1) % n + 1) as u16)
        }
    }

    /// Dense addition table, row-major, when one was built.
    pub fn add_table(&self) -> Option<&[u16]> {
        self.add_table.as_deref()
    }

    #[inline]
    pub fn neg(&self, x: Elem) -> Elem {
        Elem(self.neg[x.index()])
    }

    #[inline]
    pub fn sub(&self, x: Elem, y: Elem) -> Elem {
        self.add(x, self.neg(y))
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        if x.is_zero() || y.is_zero() {
            return Elem::ZERO;
        }
        let n = self.q - 1;
        Elem(((x.0 as u32 - 1 + y.0 as u32 - 1) % n + 1) as u16)
    }

    pub fn inv(&self, x: Elem) -> Result<Elem> {
        match self.exponent(x) {
            None => Err(Error::DivisionByZero),
            Some(e) => Ok(self.from_exponent(-(e as i64))),
        }
    }

    pub fn div(&self, x: Elem, y: Elem) -> Result<Elem> {
        Ok(self.mul(x, self.inv(y)?))
    }

    /// `x^n`; negative `n` is allowed for nonzero `x`. `0^0 = 1`.
    pub fn pow(&self, x: Elem, n: i64) -> Elem {
        match self.exponent(x) {
            None if n == 0 => Elem::ONE,
            None => Elem::ZERO,
            Some(e) => {
                let k = (self.q - 1) as i64;
                self.from_exponent(((e as i64) * n.rem_euclid(k)).rem_euclid(k))
            }
        }
    }

    /// `x^p`.
    #[inline]
    pub fn frobenius(&self, x: Elem) -> Elem {
        Elem(self.frob[x.index()])
    }

    /// `x^(p^j)`.
    pub fn frobenius_pow(&self, x: Elem, j: u32) -> Elem {
        (0..j).fold(x, |acc, _| self.frobenius(acc))
    }

    /// Length of the Frobenius orbit of `x` (a divisor of `m`).
    pub fn frobenius_orbit_len(&self, x: Elem) -> u32 {
        let mut y = self.frobenius(x);
        let mut len = 1;
        while y != x {
            y = self.frobenius(y);
            len += 1;
        }
        len
    }
}

fn pack(digits: &[u32], p: u32) -> u32 {
    digits.iter().rev().fold(0, |acc, &d| acc * p + d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32, m: u32, prim: &[u32]) -> Field {
        Field::new(FieldSpec::new(p, m, prim.to_vec())).unwrap()
    }

    #[test]
    fn rejects_composite_p() {
        let err = Field::new(FieldSpec::new(4, 1, vec![1, 1])).unwrap_err();
        assert_eq!(err, Error::NonPrimeP(4));
    }

    #[test]
    fn rejects_non_monic_and_imprimitive() {
        assert!(matches!(
            Field::new(FieldSpec::new(5, 2, vec![2, 3, 3])),
            Err(Error::NonMonic { .. })
        ));
        // x^2 + 1 over GF(3) is irreducible, but its root has order 4, not 8
        assert!(matches!(
            Field::new(FieldSpec::new(3, 2, vec![1, 0, 1])),
            Err(Error::NonPrimitivePoly(_))
        ));
        // x + 1 over GF(11) gives t = -1, of order 2
        assert!(matches!(
            Field::new(FieldSpec::new(11, 1, vec![1, 1])),
            Err(Error::NonPrimitivePoly(_))
        ));
    }

    #[test]
    fn prime_field_generator_is_minus_constant() {
        let f = gf(11, 1, &[1, 4]);
        // t = -4 = 7 mod 11; its integer image must be 7
        assert_eq!(f.generator(), f.from_int(7));
        // order of 7 mod 11 is 10, checked by direct powering
        let mut v = 1u32;
        let mut order = 0;
        loop {
            v = v * 7 % 11;
            order += 1;
            if v == 1 {
                break;
            }
        }
        assert_eq!(order, 10);
    }

    #[test]
    fn gf25_sum_of_t_and_one() {
        // t^2 = 2t + 2 over GF(5); walking a + bt through the powers, 1 + t first appears at t^8
        let f = gf(5, 2, &[1, 3, 3]);
        assert_eq!(f.add(Elem(2), Elem(1)), Elem(9));
        assert_eq!(f.poly_basis(Elem(9)), vec![1, 1]);
    }

    #[test]
    fn gf16_squaring_from_the_g_cycle_example() {
        let f = gf(2, 4, &[1, 0, 0, 1, 1]);
        // (t^7)^2 = t^14 is index 15
        assert_eq!(f.mul(Elem(8), Elem(8)), Elem(15));
        assert_eq!(f.frobenius(Elem(8)), Elem(15));
        let mut orbit = vec![Elem(8)];
        let mut y = f.frobenius(Elem(8));
        while y != Elem(8) {
            orbit.push(y);
            y = f.frobenius(y);
        }
        orbit.sort();
        assert_eq!(orbit, vec![Elem(8), Elem(12), Elem(14), Elem(15)]);
    }

    #[test]
    fn zech_matches_dense_table() {
        for (p, m, prim) in [(2u32, 4u32, vec![1, 0, 0, 1, 1]), (5, 2, vec![1, 3, 3]), (3, 3, vec![1, 0, 2, 1])] {
            let f = gf(p, m, &prim);
            for x in f.elements() {
                for y in f.elements() {
                    assert_eq!(f.add(x, y), f.add_by_zech(x, y));
                }
            }
        }
    }

    #[test]
    fn large_field_uses_zech() {
        // x^2 + x + 3 is primitive over GF(17)? verify by construction; fall back to search otherwise
        let f = crate::registry::find_primitive(17, 2).unwrap();
        assert!(f.add_table().is_none());
        let a = f.from_exponent(5);
        assert_eq!(f.add(a, f.neg(a)), Elem::ZERO);
        assert_eq!(f.sub(f.add(a, Elem(9)), Elem(9)), a);
    }

    #[test]
    fn inverse_of_zero_errors() {
        let f = gf(5, 2, &[1, 3, 3]);
        assert_eq!(f.inv(Elem::ZERO), Err(Error::DivisionByZero));
        for x in f.nonzero_elements() {
            assert_eq!(f.mul(x, f.inv(x).unwrap()), Elem::ONE);
        }
    }

    #[test]
    fn frobenius_order_divides_m() {
        let f = gf(3, 3, &[1, 0, 2, 1]);
        for x in f.elements() {
            assert_eq!(f.frobenius_pow(x, 3), x);
            assert_eq!(3 % f.frobenius_orbit_len(x), 0);
        }
        assert_eq!(f.frobenius(Elem::ZERO), Elem::ZERO);
        assert_eq!(f.frobenius(Elem::ONE), Elem::ONE);
    }

    #[test]
    fn poly_string_renders_descending() {
        assert_eq!(FieldSpec::new(5, 2, vec![1, 3, 3]).poly_string(), "x^2+3x+3");
        assert_eq!(FieldSpec::new(2, 5, vec![1, 0, 1, 1, 1, 1]).poly_string(), "x^5+x^3+x^2+x+1");
    }
}
