//! F-map, G-map and the equivalence classes they generate.
//!
//! `F` multiplies the coefficient of degree `d-k` by `t^k`, which is the same
//! as `t^d·P(x/t)`. `G` raises every coefficient to the `p`-th power. Both map
//! nPPs to nPPs. When `p | d` the nPP set is also closed under
//! `P(x) ↦ P(x+b) - P(b)`, and classes absorb that action as well.

use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::field::{Elem, Field};
use crate::poly::Poly;

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `F^i(P)`: the coefficient of degree `d-k` gains the factor `t^{ik}`.
pub fn f_map_pow(field: &Field, p: &Poly, i: i64) -> Poly {
    let d = p.degree();
    let coeffs = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(deg, &c)| match field.exponent(c) {
            None => Elem::ZERO,
            Some(e) => field.from_exponent(e as i64 + i * (d - deg) as i64),
        })
        .collect();
    Poly::from_raw(coeffs)
}

pub fn f_map(field: &Field, p: &Poly) -> Poly {
    f_map_pow(field, p, 1)
}

pub fn g_map(field: &Field, p: &Poly) -> Poly {
    Poly::from_raw(p.coeffs().iter().map(|&c| field.frobenius(c)).collect())
}

/// Length of the F-cycle through `P`.
///
/// `F^s(P) = P` iff `s·k ≡ 0 (mod q-1)` for every `k` with `a_{d-k} ≠ 0`, so
/// the length is `(q-1)/gcd(q-1, k_1, k_2, ...)`.
pub fn f_cycle_len(field: &Field, p: &Poly) -> u32 {
    let n = field.group_order() as u64;
    let d = p.degree();
    let g = (0..d)
        .filter(|&deg| !p.coeff(deg).is_zero())
        .fold(n, |g, deg| gcd(g, (d - deg) as u64));
    (n / g) as u32
}

/// Length of the G-cycle through `P`, by direct iteration (at most `m` steps).
pub fn g_cycle_len(field: &Field, p: &Poly) -> u32 {
    let mut cur = g_map(field, p);
    let mut len = 1;
    while &cur != p {
        cur = g_map(field, &cur);
        len += 1;
    }
    len
}

/// Length of the `F_k`-cycle of a single nonzero coefficient: `(q-1)/gcd(k, q-1)`.
pub fn coeff_f_cycle_len(field: &Field, k: usize) -> u32 {
    let n = field.group_order() as u64;
    (n / gcd(n, k as u64)) as u32
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleInfo {
    pub f_len: u32,
    pub g_len: u32,
    /// `(degree, F_k-cycle length, G-cycle length)` for each nonzero non-leading coefficient.
    pub coefficients: Vec<(usize, u32, u32)>,
}

pub fn cycle_info(field: &Field, p: &Poly) -> CycleInfo {
    let d = p.degree();
    let coefficients = (0..d)
        .rev()
        .filter(|&deg| !p.coeff(deg).is_zero())
        .map(|deg| (deg, coeff_f_cycle_len(field, d - deg), field.frobenius_orbit_len(p.coeff(deg))))
        .collect();
    CycleInfo { f_len: f_cycle_len(field, p), g_len: g_cycle_len(field, p), coefficients }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivClass {
    pub representative: Poly,
    /// Sorted ascending; the first entry is the representative.
    pub members: Vec<Poly>,
    pub size: usize,
    pub f_len: u32,
    pub g_len: u32,
}

impl EquivClass {
    pub fn contains(&self, p: &Poly) -> bool {
        self.members.binary_search(p).is_ok()
    }
}

/// Additive generators `1, t, ..., t^{m-1}` of the field; shifts by these generate all shifts.
pub fn shift_generators(field: &Field) -> Vec<Elem> {
    (0..field.m() as i64).map(|e| field.from_exponent(e)).take(field.q() as usize - 1).collect()
}

/// Every polynomial reachable from `seed` by the class generators, unsorted.
pub fn closure(field: &Field, seed: &Poly, include_shift: bool) -> HashSet<Poly> {
    let shifts = if include_shift { shift_generators(field) } else { Vec::new() };
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(seed.clone());
    queue.push_back(seed.clone());
    while let Some(p) = queue.pop_front() {
        let mut push = |next: Poly| {
            if !seen.contains(&next) {
                seen.insert(next.clone());
                queue.push_back(next);
            }
        };
        push(f_map(field, &p));
        push(g_map(field, &p));
        for &b in &shifts {
            push(p.shift_rezeroed(field, b));
        }
    }
    seen
}

/// The class of `seed` under F, G and, when `include_shift`, the re-zeroed shifts.
pub fn equiv_class(field: &Field, seed: &Poly, include_shift: bool) -> EquivClass {
    let mut members: Vec<Poly> = closure(field, seed, include_shift).into_iter().collect();
    members.sort_unstable();
    let representative = members[0].clone();
    EquivClass {
        f_len: f_cycle_len(field, &representative),
        g_len: g_cycle_len(field, &representative),
        size: members.len(),
        representative,
        members,
    }
}
