//! Mask-driven exhaustive search for every nPP of a given degree.
//!
//! Coefficient positions are split by masks into "fixed zero" and "free,
//! nonzero". Within a mask one free position is pinned to a small set of
//! orbit representatives, since F and G preserve zero patterns and move that
//! coefficient around its orbit. Every permutation hit is then expanded to
//! its full class and merged into the nPP set.
//!
//! Masks are independent and run on a rayon pool. Hits are merged after all
//! masks finish, in sorted order, so the report never depends on scheduling.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::path::{Path, PathBuf};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::normalize::{regime, NormRegime};
use crate::orbits::{closure, equiv_class, EquivClass};
use crate::poly::Poly;

pub const DEFAULT_BRUTE_BUDGET: u128 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mask {
    /// `free[k]` is true when `a_k` ranges over nonzero values; indexed by degree.
    free: Vec<bool>,
}

impl Mask {
    fn from_free(d: usize, positions: &[usize]) -> Mask {
        let mut free = vec![false; d + 1];
        for &k in positions {
            free[k] = true;
        }
        Mask { free }
    }

    pub fn degree(&self) -> usize {
        self.free.len() - 1
    }

    pub fn is_free(&self, k: usize) -> bool {
        self.free[k]
    }

    /// Free positions in ascending degree.
    pub fn free_positions(&self) -> Vec<usize> {
        (0..self.free.len()).filter(|&k| self.free[k]).collect()
    }

    /// Positions other than `a_d` held at zero.
    pub fn zero_count(&self) -> usize {
        self.free[..self.degree()].iter().filter(|f| !**f).count()
    }

    /// Flags from degree `d` down to 0, with 1 for free.
    pub fn pattern(&self) -> Vec<u8> {
        self.free.iter().rev().map(|&f| f as u8).collect()
    }
}

impl fmt::Display for Mask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let flags: Vec<String> = self.pattern().iter().map(|b| b.to_string()).collect();
        write!(f, "[{}]", flags.join(","))
    }
}

/// Every free/zero pattern over `1..d-1` compatible with the regime of `(p, d)`,
/// ordered by descending number of zero positions.
pub fn gen_masks(p: u32, d: usize) -> Vec<Mask> {
    let reg = regime(p, d);
    let mut masks = Vec::new();
    let mut subsets = |open: &[usize], forced: &[usize]| {
        for bits in 0u64..(1 << open.len()) {
            let mut pos: Vec<usize> = forced.to_vec();
            pos.extend(open.iter().enumerate().filter(|(j, _)| bits >> j & 1 == 1).map(|(_, &k)| k));
            masks.push(Mask::from_free(d, &pos));
        }
    };
    let inner = |skip: &[usize]| -> Vec<usize> { (1..d).filter(|k| !skip.contains(k)).collect() };
    match reg {
        NormRegime::C => subsets(&inner(&[d - 1]), &[]),
        NormRegime::M | NormRegime::B { .. } => {
            let pos = reg.constrained_positions(d);
            let (hi, lo) = (pos[0], pos[1]);
            subsets(&inner(&[hi]), &[]);
            subsets(&inner(&[hi, lo]), &[hi]);
        }
        NormRegime::BException { .. } => subsets(&inner(&[]), &[]),
    }
    masks.sort_by_key(|m| std::cmp::Reverse(m.zero_count()));
    masks
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Orbit representatives of the nonzero elements under `x ↦ t^k x` and `x ↦ x^p`.
///
/// In exponent form the first map adds `k` mod `q-1`, leaving only the residue
/// mod `g = gcd(k, q-1)`; the second multiplies that residue by `p`. Each orbit
/// is named by its largest residue, as an element index in `1..=g`.
pub fn orbit_representatives(field: &Field, k: usize) -> Vec<Elem> {
    let n = field.group_order() as u64;
    let g = gcd(k as u64, n);
    let p = field.p() as u64 % g.max(1);
    let mut seen = vec![false; g as usize];
    let mut reps = Vec::new();
    for start in (0..g).rev() {
        if seen[start as usize] {
            continue;
        }
        let mut r = start;
        while !seen[r as usize] {
            seen[r as usize] = true;
            r = r * p % g;
        }
        reps.push(Elem(start as u16 + 1));
    }
    reps.sort();
    reps
}

/// The free position whose orbit representatives are fewest (ties go to the
/// higher degree), with those representatives.
pub fn choose_fixed(field: &Field, mask: &Mask) -> Result<(usize, Vec<Elem>)> {
    let d = mask.degree();
    (1..d)
        .rev()
        .filter(|&k| mask.is_free(k))
        .map(|pos| (pos, orbit_representatives(field, d - pos)))
        .min_by_key(|(_, v)| v.len())
        .ok_or(Error::NoFreePosition)
}

/// Number of PPs of degree `d` represented by `npps` normalized ones.
pub fn total_pp_count(npps: u64, field: &Field, d: usize) -> u64 {
    let q = field.q() as u64;
    if d == 1 || d.is_multiple_of(field.p() as usize) {
        npps * q * (q - 1)
    } else {
        npps * q * q * (q - 1)
    }
}

fn check_degree(field: &Field, d: usize) -> Result<()> {
    let max = (field.q() as usize).saturating_sub(2).max(1);
    if d == 0 || d > max {
        return Err(Error::DegreeOutOfRange { d, q: field.q(), max });
    }
    Ok(())
}

/// Occupancy marks reused across candidates; bumping `stamp` clears them.
struct Seen {
    marks: Vec<u32>,
    stamp: u32,
}

impl Seen {
    #[inline]
    fn all_distinct(&mut self, values: impl Iterator<Item = Elem>) -> bool {
        self.stamp = self.stamp.wrapping_add(1);
        if self.stamp == 0 {
            self.marks.fill(0);
            self.stamp = 1;
        }
        for v in values {
            let m = &mut self.marks[v.index()];
            if *m == self.stamp {
                return false;
            }
            *m = self.stamp;
        }
        true
    }
}

/// Enumerate one mask, returning every permutation polynomial it contains
/// (with the pinned position restricted to `fixed`).
fn scan_mask(field: &Field, mask: &Mask, fixed: Option<&(usize, Vec<Elem>)>) -> Vec<Poly> {
    let q = field.q() as usize;
    let d = mask.degree();
    let positions = mask.free_positions();
    let values: Vec<Vec<Elem>> = positions
        .iter()
        .map(|&k| match fixed {
            Some((pos, v)) if *pos == k => v.clone(),
            _ => field.nonzero_elements().collect(),
        })
        .collect();
    // term[j][v*q + x] = values[j][v] * x^positions[j]
    let terms: Vec<Vec<Elem>> = positions
        .iter()
        .zip(&values)
        .map(|(&k, vals)| {
            let powers: Vec<Elem> = field.elements().map(|x| field.pow(x, k as i64)).collect();
            vals.iter().flat_map(|&c| powers.iter().map(move |&xp| (c, xp))).map(|(c, xp)| field.mul(c, xp)).collect()
        })
        .collect();
    let lead: Vec<Elem> = field.elements().map(|x| field.pow(x, d as i64)).collect();

    let build = |idx: &[usize]| -> Poly {
        let mut coeffs = vec![Elem::ZERO; d + 1];
        coeffs[d] = Elem::ONE;
        for (j, &k) in positions.iter().enumerate() {
            coeffs[k] = values[j][idx[j]];
        }
        Poly::from_raw(coeffs)
    };

    let mut seen = Seen { marks: vec![0; q], stamp: 0 };
    let dense = field.add_table();
    let mut hits = Vec::new();
    let npos = positions.len();
    if npos == 0 {
        if seen.all_distinct(lead.iter().copied()) {
            hits.push(build(&[]));
        }
        return hits;
    }

    // sums[j] = lead + terms of positions j.. at their current values; sums[npos] = lead
    let mut idx = vec![0usize; npos];
    let mut sums: Vec<Vec<Elem>> = vec![lead.clone(); npos + 1];
    let refresh = |sums: &mut Vec<Vec<Elem>>, idx: &[usize], from: usize| {
        for j in (1..=from).rev() {
            let (lo, hi) = sums.split_at_mut(j + 1);
            let src = &hi[0];
            let off = idx[j] * q;
            for (x, dst) in lo[j].iter_mut().enumerate() {
                *dst = field.add(src[x], terms[j][off + x]);
            }
        }
    };
    refresh(&mut sums, &idx, npos - 1);

    loop {
        let base = &sums[1];
        for v0 in 0..values[0].len() {
            let t0 = &terms[0][v0 * q..(v0 + 1) * q];
            let found = match dense {
                Some(tab) => seen.all_distinct(base.iter().zip(t0).map(|(b, t)| Elem(tab[b.index() * q + t.index()]))),
                None => seen.all_distinct(base.iter().zip(t0).map(|(&b, &t)| field.add(b, t))),
            };
            if found {
                idx[0] = v0;
                hits.push(build(&idx));
            }
        }
        // advance positions 1.. as an odometer, lowest degree fastest
        let mut j = 1;
        loop {
            if j == npos {
                return hits;
            }
            idx[j] += 1;
            if idx[j] < values[j].len() {
                break;
            }
            idx[j] = 0;
            j += 1;
        }
        refresh(&mut sums, &idx, j);
    }
}

#[derive(Clone, Debug, Default)]
pub struct SearchOptions {
    /// Worker threads; `None` uses rayon's default.
    pub workers: Option<usize>,
    /// Resumable progress file, rewritten whole after every mask.
    pub checkpoint: Option<PathBuf>,
    /// Keep every class member in the report.
    pub keep_members: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecord {
    pub representative: Poly,
    pub size: usize,
    pub f_len: u32,
    pub g_len: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub members: Option<Vec<Poly>>,
}

impl ClassRecord {
    fn from_class(c: EquivClass, keep_members: bool) -> ClassRecord {
        ClassRecord {
            representative: c.representative,
            size: c.size,
            f_len: c.f_len,
            g_len: c.g_len,
            members: keep_members.then_some(c.members),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchReport {
    pub q: u32,
    pub p: u32,
    pub m: u32,
    pub prim_poly: Vec<u32>,
    pub d: usize,
    pub npps: u64,
    pub total: u64,
    /// Sorted by representative.
    pub classes: Vec<ClassRecord>,
    /// Candidates tested across all masks.
    pub candidates: u64,
    pub elapsed: Duration,
}

#[derive(Serialize, Deserialize)]
struct JsonMeta {
    q: u32,
    p: u32,
    m: u32,
    prim_poly: Vec<u32>,
    degree: usize,
    tool_version: String,
}

#[derive(Serialize, Deserialize)]
struct JsonResult {
    npps: u64,
    classes: usize,
    total: u64,
}

#[derive(Serialize, Deserialize)]
struct JsonReport {
    meta: JsonMeta,
    result: JsonResult,
    classes: Vec<ClassRecord>,
}

impl SearchReport {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Class sizes in ascending order.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.classes.iter().map(|c| c.size).collect();
        s.sort();
        s
    }

    /// `q d npps classes total`
    pub fn summary_line(&self) -> String {
        format!("{} {} {} {} {}", self.q, self.d, self.npps, self.class_count(), self.total)
    }

    pub fn to_json(&self) -> String {
        let doc = JsonReport {
            meta: JsonMeta {
                q: self.q,
                p: self.p,
                m: self.m,
                prim_poly: self.prim_poly.clone(),
                degree: self.d,
                tool_version: env!("CARGO_PKG_VERSION").to_string(),
            },
            result: JsonResult { npps: self.npps, classes: self.class_count(), total: self.total },
            classes: self.classes.clone(),
        };
        serde_json::to_string_pretty(&doc).expect("report serializes") + "\n"
    }

    pub fn from_json(text: &str) -> Result<SearchReport> {
        let doc: JsonReport = serde_json::from_str(text)?;
        Ok(SearchReport {
            q: doc.meta.q,
            p: doc.meta.p,
            m: doc.meta.m,
            prim_poly: doc.meta.prim_poly,
            d: doc.meta.degree,
            npps: doc.result.npps,
            total: doc.result.total,
            classes: doc.classes,
            candidates: 0,
            elapsed: Duration::ZERO,
        })
    }

    /// Every nPP, when the report kept its members.
    pub fn npp_set(&self) -> Option<Vec<Poly>> {
        let mut all = Vec::with_capacity(self.npps as usize);
        for c in &self.classes {
            all.extend(c.members.as_ref()?.iter().cloned());
        }
        all.sort();
        Some(all)
    }
}

#[derive(Serialize, Deserialize)]
struct Checkpoint {
    q: u32,
    d: usize,
    prim_poly: Vec<u32>,
    completed: BTreeMap<usize, Vec<Poly>>,
}

impl Checkpoint {
    fn load(path: &Path, field: &Field, d: usize) -> Result<Checkpoint> {
        let fresh = Checkpoint { q: field.q(), d, prim_poly: field.spec().prim_poly.clone(), completed: BTreeMap::new() };
        if !path.exists() {
            return Ok(fresh);
        }
        let ck: Checkpoint = serde_json::from_str(&std::fs::read_to_string(path)?)?;
        if ck.q != fresh.q || ck.d != d || ck.prim_poly != fresh.prim_poly {
            return Err(Error::CheckpointMismatch(format!(
                "file is for q={} d={} prim={:?}",
                ck.q, ck.d, ck.prim_poly
            )));
        }
        Ok(ck)
    }

    fn save(&self, path: &Path) -> Result<()> {
        let tmp = path.with_extension("tmp");
        std::fs::write(&tmp, serde_json::to_string(self)?)?;
        std::fs::rename(&tmp, path)?;
        Ok(())
    }
}

/// All nPPs of degree `d` over `field`, grouped into classes.
pub fn search(field: &Field, d: usize, opts: &SearchOptions) -> Result<SearchReport> {
    check_degree(field, d)?;
    let start = Instant::now();
    let masks = gen_masks(field.p(), d);
    let include_shift = regime(field.p(), d).shift_closed();

    let ck = match &opts.checkpoint {
        Some(path) => Some(Mutex::new(Checkpoint::load(path, field, d)?)),
        None => None,
    };
    let done: BTreeMap<usize, Vec<Poly>> = ck.as_ref().map(|c| c.lock().unwrap().completed.clone()).unwrap_or_default();

    let run = |i: usize, mask: &Mask| -> Result<(Vec<Poly>, u64)> {
        if let Some(h) = done.get(&i) {
            return Ok((h.clone(), 0));
        }
        let fixed = choose_fixed(field, mask).ok();
        let hits = scan_mask(field, mask, fixed.as_ref());
        let cands = mask
            .free_positions()
            .iter()
            .map(|&k| match &fixed {
                Some((pos, v)) if *pos == k => v.len() as u64,
                _ => field.group_order() as u64,
            })
            .product::<u64>();
        if let (Some(ck), Some(path)) = (&ck, &opts.checkpoint) {
            let mut state = ck.lock().unwrap();
            state.completed.insert(i, hits.clone());
            state.save(path)?;
        }
        Ok((hits, cands))
    };

    let work = || masks.par_iter().enumerate().map(|(i, m)| run(i, m)).collect::<Result<Vec<_>>>();
    let per_mask = match opts.workers {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| Error::Io(e.to_string()))?
            .install(work)?,
        None => work()?,
    };

    let candidates = per_mask.iter().map(|(_, c)| c).sum();
    let mut hits: Vec<Poly> = per_mask.into_iter().flat_map(|(h, _)| h).collect();
    hits.sort_unstable();
    hits.dedup();

    let mut s: HashSet<Poly> = HashSet::new();
    let mut classes = Vec::new();
    for hit in &hits {
        if s.contains(hit) {
            continue;
        }
        let class = equiv_class(field, hit, include_shift);
        s.extend(class.members.iter().cloned());
        classes.push(ClassRecord::from_class(class, opts.keep_members));
    }
    classes.sort_by(|a, b| a.representative.cmp(&b.representative));

    let npps = s.len() as u64;
    Ok(SearchReport {
        q: field.q(),
        p: field.p(),
        m: field.m(),
        prim_poly: field.spec().prim_poly.clone(),
        d,
        npps,
        total: total_pp_count(npps, field, d),
        classes,
        candidates,
        elapsed: start.elapsed(),
    })
}

/// Partition a closed nPP set into classes, sorted by representative.
pub fn class_reps(field: &Field, npps: &[Poly]) -> Result<Vec<EquivClass>> {
    let Some(d) = npps.first().map(Poly::degree) else {
        return Ok(Vec::new());
    };
    let include_shift = regime(field.p(), d).shift_closed();
    let all: HashSet<&Poly> = npps.iter().collect();
    let mut assigned: HashSet<Poly> = HashSet::new();
    let mut sorted: Vec<&Poly> = all.iter().copied().collect();
    sorted.sort();
    let mut classes = Vec::new();
    for p in sorted {
        if assigned.contains(p) {
            continue;
        }
        let members = closure(field, p, include_shift);
        if let Some(out) = members.iter().find(|m| !all.contains(m)) {
            return Err(Error::NotClosed(out.to_text()));
        }
        assigned.extend(members);
        classes.push(equiv_class(field, p, include_shift));
    }
    Ok(classes)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruteForce {
    /// Number of degree-`d` permutation polynomials.
    pub count: u64,
    pub candidates: u128,
    /// The monic PPs with zero constant term, when requested.
    pub monic_zero_constant: Option<Vec<Poly>>,
}

/// Count degree-`d` PPs by evaluating every coefficient vector with `a_d ≠ 0`.
/// Uses only field addition and multiplication.
pub fn brute_force(field: &Field, d: usize, budget: u128, collect: bool) -> Result<BruteForce> {
    check_degree(field, d)?;
    let q = field.q() as usize;
    let needed = (q as u128).checked_pow(d as u32 + 1).unwrap_or(u128::MAX);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let elems: Vec<Elem> = field.elements().collect();
    // coefficient digits a_0..a_d; a_d starts at 1
    let mut digits = vec![0usize; d + 1];
    digits[d] = 1;
    let mut seen = vec![false; q];
    let mut count = 0u64;
    let mut kept = Vec::new();
    let mut candidates = 0u128;
    loop {
        candidates += 1;
        seen.iter_mut().for_each(|s| *s = false);
        let mut ok = true;
        for &x in &elems {
            let mut acc = Elem::ZERO;
            for &c in digits.iter().rev() {
                acc = field.add(field.mul(acc, x), elems[c]);
            }
            if std::mem::replace(&mut seen[acc.index()], true) {
                ok = false;
                break;
            }
        }
        if ok {
            count += 1;
            if collect && digits[d] == 1 && digits[0] == 0 {
                kept.push(Poly::from_raw(digits.iter().map(|&c| elems[c]).collect()));
            }
        }
        let mut j = 0;
        loop {
            digits[j] += 1;
            if digits[j] < q {
                break;
            }
            if j == d {
                return Ok(BruteForce {
                    count,
                    candidates,
                    monic_zero_constant: collect.then(|| {
                        kept.sort();
                        kept
                    }),
                });
            }
            digits[j] = 0;
            j += 1;
        }
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
    fn gf25_degree5_masks() {
        let masks = gen_masks(5, 5);
        assert_eq!(masks.len(), 12);
        let text: Vec<String> = masks.iter().map(|m| m.to_string()).collect();
        for expect in ["[0,0,0,0,0,0]", "[0,0,1,1,1,0]", "[0,1,0,0,0,0]", "[0,1,0,1,1,0]"] {
            assert!(text.contains(&expect.to_string()), "{expect}");
        }
        assert!(!text.contains(&"[0,1,1,0,0,0]".to_string()));
        for w in masks.windows(2) {
            assert!(w[0].zero_count() >= w[1].zero_count());
        }
    }

    #[test]
    fn mask_counts() {
        assert_eq!(gen_masks(11, 2).len(), 1);
        assert_eq!(gen_masks(2, 6).len(), 32);
        assert_eq!(gen_masks(11, 7).len(), 32);
        assert_eq!(gen_masks(2, 10).len(), 256 + 128);
        assert_eq!(gen_masks(3, 3).len(), 3);
    }

    #[test]
    fn choose_fixed_gf25() {
        let f = gf(5, 2, &[1, 3, 3]);
        let mask = Mask::from_free(5, &[4, 2]);
        assert_eq!(mask.to_string(), "[0,1,0,1,0,0]");
        assert_eq!(choose_fixed(&f, &mask).unwrap(), (4, vec![Elem(1)]));
        assert_eq!(orbit_representatives(&f, 3), vec![Elem(1), Elem(3)]);
        let only_a2 = Mask::from_free(5, &[2]);
        assert_eq!(choose_fixed(&f, &only_a2).unwrap(), (2, vec![Elem(1), Elem(3)]));
        assert_eq!(choose_fixed(&f, &Mask::from_free(5, &[])), Err(Error::NoFreePosition));
    }

    #[test]
    fn coprime_gap_pins_to_one() {
        let f = gf(11, 1, &[1, 4]);
        for k in [1usize, 3, 7, 9] {
            assert_eq!(orbit_representatives(&f, k), vec![Elem(1)]);
        }
        // prime field: G is trivial, so gcd(k, 10) orbits remain
        assert_eq!(orbit_representatives(&f, 2).len(), 2);
        assert_eq!(orbit_representatives(&f, 5).len(), 5);
    }

    #[test]
    fn orbit_representatives_cover_every_orbit() {
        let f = gf(2, 4, &[1, 0, 0, 1, 1]);
        for k in 1..15usize {
            let reps = orbit_representatives(&f, k);
            let mut covered = HashSet::new();
            for &r in &reps {
                let mut frontier = vec![r];
                while let Some(x) = frontier.pop() {
                    if covered.insert(x) {
                        frontier.push(f.mul(x, f.from_exponent(k as i64)));
                        frontier.push(f.frobenius(x));
                    }
                }
            }
            assert_eq!(covered.len(), 15, "k = {k}");
        }
    }

    #[test]
    fn total_counts() {
        let f11 = gf(11, 1, &[1, 4]);
        assert_eq!(total_pp_count(24, &f11, 6), 29_040);
        assert_eq!(total_pp_count(0, &f11, 6), 0);
        assert_eq!(total_pp_count(1, &f11, 1), 110);
        let f27 = gf(3, 3, &[1, 0, 2, 1]);
        assert_eq!(total_pp_count(29_550, &f27, 9), 20_744_100);
    }

    #[test]
    fn small_searches() {
        let f11 = gf(11, 1, &[1, 4]);
        let r = search(&f11, 7, &SearchOptions::default()).unwrap();
        assert_eq!((r.npps, r.class_count(), r.total), (225, 28, 272_250));
        let r = search(&f11, 5, &SearchOptions::default()).unwrap();
        assert_eq!((r.npps, r.class_count(), r.total), (0, 0, 0));
        let r = search(&f11, 1, &SearchOptions::default()).unwrap();
        assert_eq!(r.total, 110);
        assert!(search(&f11, 10, &SearchOptions::default()).is_err());
    }

    #[test]
    fn gf16_exception_degree() {
        let f = gf(2, 4, &[1, 0, 0, 1, 1]);
        let r = search(&f, 6, &SearchOptions::default()).unwrap();
        assert_eq!((r.npps, r.class_count(), r.total), (840, 3, 201_600));
    }

    #[test]
    fn search_matches_brute_force_gf7() {
        let f = gf(7, 1, &[1, 2]);
        for d in 1..=5 {
            let r = search(&f, d, &SearchOptions { keep_members: true, ..Default::default() }).unwrap();
            let b = brute_force(&f, d, DEFAULT_BRUTE_BUDGET, false).unwrap();
            assert_eq!(r.total, b.count, "d = {d}");
        }
    }

    #[test]
    fn p_divides_d_set_is_all_monic_zero_constant() {
        let f = gf(3, 2, &[1, 1, 2]);
        let r = search(&f, 6, &SearchOptions { keep_members: true, ..Default::default() }).unwrap();
        let b = brute_force(&f, 6, DEFAULT_BRUTE_BUDGET, true).unwrap();
        assert_eq!(r.npp_set().unwrap(), b.monic_zero_constant.unwrap());
    }

    #[test]
    fn budget_guard() {
        let f = gf(11, 1, &[1, 4]);
        assert!(matches!(brute_force(&f, 8, DEFAULT_BRUTE_BUDGET, false), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn class_reps_partitions_search_output() {
        let f = gf(5, 2, &[1, 3, 3]);
        let r = search(&f, 7, &SearchOptions { keep_members: true, ..Default::default() }).unwrap();
        let set = r.npp_set().unwrap();
        let classes = class_reps(&f, &set).unwrap();
        let mut sizes: Vec<usize> = classes.iter().map(|c| c.size).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 8, 12, 12, 12]);
        // x^7 is a singleton class, so drop the largest member instead
        assert!(matches!(class_reps(&f, &set[..set.len() - 1]), Err(Error::NotClosed(_))));
        let single = class_reps(&f, &[Poly::monomial(7)]).unwrap();
        assert_eq!(single.len(), 1);
    }

    #[test]
    fn json_round_trip() {
        let f = gf(11, 1, &[1, 4]);
        let r = search(&f, 6, &SearchOptions::default()).unwrap();
        let back = SearchReport::from_json(&r.to_json()).unwrap();
        assert_eq!(back.to_json(), r.to_json());
        assert_eq!(back.summary_line(), "11 6 24 4 29040");
    }

    #[test]
    fn checkpoint_resume() {
        let dir = std::env::temp_dir().join(format!("ppsearch-ck-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("ck.json");
        let _ = std::fs::remove_file(&path);
        let f = gf(13, 1, &[1, 2]);
        let opts = SearchOptions { checkpoint: Some(path.clone()), ..Default::default() };
        let first = search(&f, 7, &opts).unwrap();
        assert!(path.exists());
        let resumed = search(&f, 7, &opts).unwrap();
        assert_eq!(resumed.candidates, 0);
        assert_eq!(first.to_json(), resumed.to_json());
        let other = gf(13, 1, &[1, 6]);
        assert!(matches!(search(&other, 7, &opts), Err(Error::CheckpointMismatch(_))));
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
