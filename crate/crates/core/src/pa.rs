//! Permutation arrays built from PP value vectors, and `M(n, D)` lower bounds.
//!
//! Two distinct PPs of degree at most `d` agree in at most `d` points, so all
//! PPs of degree `≤ d` over GF(q) form a permutation array on `q` symbols
//! with minimum distance `q - d`. That gives `M(q, q-d) ≥ Σ_{k≤d} N_k(q)`.

use std::collections::BTreeMap;
use std::io::{Read, Write};
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Poly;

/// Value vector `(P(0), ..., P(q-1))` as element indices.
pub fn perm_of(field: &Field, p: &Poly) -> Result<Vec<u16>> {
    let v: Vec<u16> = p.values(field).iter().map(|e| e.0).collect();
    if is_permutation(&v) {
        Ok(v)
    } else {
        Err(Error::NotAPermutation)
    }
}

fn is_permutation(row: &[u16]) -> bool {
    let mut seen = vec![false; row.len()];
    row.iter().all(|&x| (x as usize) < row.len() && !std::mem::replace(&mut seen[x as usize], true))
}

pub fn hamming(a: &[u16], b: &[u16]) -> Result<usize> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    Ok(a.iter().zip(b).filter(|(x, y)| x != y).count())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermArray {
    pub n: usize,
    pub perms: Vec<Vec<u16>>,
    /// Minimum pairwise distance, filled in by [`PermArray::verify`].
    pub min_hd: Option<usize>,
}

impl PermArray {
    pub fn new(n: usize, perms: Vec<Vec<u16>>) -> Result<PermArray> {
        for row in &perms {
            if row.len() != n {
                return Err(Error::LengthMismatch(n, row.len()));
            }
            if !is_permutation(row) {
                return Err(Error::NotAPermutation);
            }
        }
        Ok(PermArray { n, perms, min_hd: None })
    }

    /// The value vectors of `polys`, all of which must permute the field.
    pub fn from_polys(field: &Field, polys: &[Poly]) -> Result<PermArray> {
        let perms = polys.iter().map(|p| perm_of(field, p)).collect::<Result<Vec<_>>>()?;
        PermArray::new(field.q() as usize, perms)
    }

    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perms.is_empty()
    }

    /// Minimum distance over all pairs; `n` for arrays with fewer than two rows.
    pub fn min_distance(&self) -> usize {
        (0..self.perms.len())
            .into_par_iter()
            .map(|i| {
                self.perms[i + 1..]
                    .iter()
                    .map(|other| hamming(&self.perms[i], other).expect("rows share length"))
                    .min()
                    .unwrap_or(self.n)
            })
            .min()
            .unwrap_or(self.n)
    }

    /// True iff every pair of rows differs in at least `d` positions.
    pub fn verify(&mut self, d: usize) -> bool {
        let hd = self.min_distance();
        self.min_hd = Some(hd);
        hd >= d
    }

    /// One permutation per line, space separated.
    pub fn write_to(&self, mut out: impl Write) -> Result<()> {
        for row in &self.perms {
            let line: Vec<String> = row.iter().map(u16::to_string).collect();
            writeln!(out, "{}", line.join(" "))?;
        }
        Ok(())
    }

    pub fn read_from(mut input: impl Read) -> Result<PermArray> {
        let mut text = String::new();
        input.read_to_string(&mut text)?;
        let perms = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                l.split_whitespace()
                    .map(|t| t.parse::<u16>().map_err(|_| Error::Parse(format!("bad symbol {t:?}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let n = perms.first().map_or(0, Vec::len);
        PermArray::new(n, perms)
    }
}

/// Row of a counts file: `N_d(q) = total`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRow {
    pub q: u32,
    pub d: usize,
    pub total: u64,
    pub provenance: String,
}

/// Known values of `N_d(q)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CountTable {
    rows: BTreeMap<(u32, usize), CountRow>,
}

impl CountTable {
    pub fn insert(&mut self, q: u32, d: usize, total: u64, provenance: &str) {
        self.rows.insert((q, d), CountRow { q, d, total, provenance: provenance.to_string() });
    }

    pub fn get(&self, q: u32, d: usize) -> Option<u64> {
        self.rows.get(&(q, d)).map(|r| r.total)
    }

    pub fn rows(&self) -> impl Iterator<Item = &CountRow> {
        self.rows.values()
    }

    pub fn read_csv(input: impl Read) -> Result<CountTable> {
        let mut table = CountTable::default();
        for row in csv::Reader::from_reader(input).deserialize::<CountRow>() {
            let row = row.map_err(|e| Error::Parse(e.to_string()))?;
            table.rows.insert((row.q, row.d), row);
        }
        Ok(table)
    }

    pub fn load(path: &Path) -> Result<CountTable> {
        CountTable::read_csv(std::fs::File::open(path)?)
    }

    pub fn write_csv(&self, out: impl Write) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        for row in self.rows.values() {
            w.serialize(row).map_err(|e| Error::Io(e.to_string()))?;
        }
        w.flush()?;
        Ok(())
    }
}

/// `N_1(16) .. N_11(16)`: degrees 6 and up as published, the rest computed here.
pub const Q16_COUNTS_CSV: &str = include_str!("../data/n16_counts.csv");

pub fn q16_counts() -> CountTable {
    CountTable::read_csv(Q16_COUNTS_CSV.as_bytes()).expect("bundled counts are well formed")
}

/// `M(q, q-d) ≥ N_1(q) + ... + N_d(q)`.
pub fn m_lower_bound(q: u32, d: usize, counts: &CountTable) -> Result<u64> {
    (1..=d).map(|k| counts.get(q, k).ok_or(Error::MissingCount { q, k })).sum()
}

/// `M(n, D-1) ≥ ⌈M(n, D) / n⌉`, from an array at distance `D`.
pub fn derived_bound(n: usize, bound: u64) -> u64 {
    bound.div_ceil(n as u64)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundRow {
    pub n: usize,
    #[serde(rename = "D")]
    pub distance: usize,
    pub bound: u64,
    pub provenance: String,
}

/// One bound per degree `1..=d`: `M(q, q-k) ≥ Σ_{j≤k} N_j(q)`, stopping at the first gap.
pub fn bound_rows(q: u32, d: usize, counts: &CountTable) -> Vec<BoundRow> {
    (1..=d)
        .map_while(|k| {
            let bound = m_lower_bound(q, k, counts).ok()?;
            Some(BoundRow {
                n: q as usize,
                distance: q as usize - k,
                bound,
                provenance: format!("sum N_1..N_{k}({q})"),
            })
        })
        .collect()
}

pub fn write_bounds_csv(rows: &[BoundRow], out: impl Write) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r).map_err(|e| Error::Io(e.to_string()))?;
    }
    w.flush()?;
    Ok(())
}
