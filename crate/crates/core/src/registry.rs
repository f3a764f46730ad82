//! Default primitive polynomials, keyed by field order.
//!
//! The bundled table lives in `data/registry.txt`. Setting
//! `PPSEARCH_REGISTRY` to a file path replaces it with a user document in the
//! same `q=.. p=.. m=.. prim=..` line format.

use std::collections::BTreeMap;
use std::path::Path;

use crate::error::{Error, Result};
use crate::field::{is_prime, Field, FieldSpec};

pub const REGISTRY_ENV: &str = "PPSEARCH_REGISTRY";

const BUNDLED: &str = include_str!("../data/registry.txt");

#[derive(Clone, Debug, Default)]
pub struct Registry {
    entries: BTreeMap<u32, FieldSpec>,
}

impl Registry {
    pub fn bundled() -> Registry {
        Registry::parse(BUNDLED).expect("bundled registry is well formed")
    }

    /// The bundled registry, or the file named by `PPSEARCH_REGISTRY` when set.
    pub fn from_env() -> Result<Registry> {
        match std::env::var_os(REGISTRY_ENV) {
            Some(path) => Registry::load(Path::new(&path)),
            None => Ok(Registry::bundled()),
        }
    }

    pub fn load(path: &Path) -> Result<Registry> {
        Registry::parse(&std::fs::read_to_string(path)?)
    }

    pub fn parse(text: &str) -> Result<Registry> {
        let mut entries = BTreeMap::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |msg: String| Error::Registry { line: n + 1, msg };
            let mut q = None;
            let mut p = None;
            let mut m = None;
            let mut prim = None;
            for kv in line.split_whitespace() {
                let (k, v) = kv.split_once('=').ok_or_else(|| bad(format!("expected key=value, got {kv:?}")))?;
                let num = |s: &str| s.trim().parse::<u32>().map_err(|_| bad(format!("bad number {s:?}")));
                match k {
                    "q" => q = Some(num(v)?),
                    "p" => p = Some(num(v)?),
                    "m" => m = Some(num(v)?),
                    "prim" => prim = Some(v.split(',').map(num).collect::<Result<Vec<_>>>()?),
                    other => return Err(bad(format!("unknown key {other:?}"))),
                }
            }
            let (q, p, m, prim) = match (q, p, m, prim) {
                (Some(q), Some(p), Some(m), Some(prim)) => (q, p, m, prim),
                _ => return Err(bad("entry needs q, p, m and prim".into())),
            };
            let spec = FieldSpec::new(p, m, prim);
            if spec.order() != q as u64 {
                return Err(bad(format!("p^m = {} does not equal q = {q}", spec.order())));
            }
            entries.insert(q, spec);
        }
        Ok(Registry { entries })
    }

    pub fn get(&self, q: u32) -> Option<&FieldSpec> {
        self.entries.get(&q)
    }

    pub fn orders(&self) -> impl Iterator<Item = u32> + '_ {
        self.entries.keys().copied()
    }

    pub fn field(&self, q: u32) -> Result<Field> {
        let spec = self.get(q).cloned().ok_or(Error::UnknownField(q))?;
        Field::new(spec)
    }
}

/// Split a prime power into `(p, m)`.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut m = 0;
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
        m += 1;
    }
    (r == 1 && is_prime(p)).then_some((p, m))
}

/// First primitive polynomial of degree `m` over GF(p), scanning the lower
/// coefficients in lexicographic order.
pub fn find_primitive(p: u32, m: u32) -> Result<Field> {
    if !is_prime(p) {
        return Err(Error::NonPrimeP(p));
    }
    let mut tail = vec![0u32; m as usize];
    loop {
        let mut poly = vec![1];
        poly.extend_from_slice(&tail);
        match Field::new(FieldSpec::new(p, m, poly)) {
            Ok(f) => return Ok(f),
            Err(Error::NonPrimitivePoly(_)) => {}
            Err(e) => return Err(e),
        }
        // odometer, last coefficient fastest
        let mut i = tail.len();
        loop {
            if i == 0 {
                return Err(Error::Registry { line: 0, msg: format!("no primitive polynomial of degree {m} over GF({p})") });
            }
            i -= 1;
            tail[i] += 1;
            if tail[i] < p {
                break;
            }
            tail[i] = 0;
        }
    }
}

/// Field for `q` from the active registry, falling back to a primitive-polynomial search.
pub fn default_field(q: u32) -> Result<Field> {
    let reg = Registry::from_env()?;
    if let Some(spec) = reg.get(q) {
        return Field::new(spec.clone());
    }
    let (p, m) = prime_power(q).ok_or(Error::UnknownField(q))?;
    find_primitive(p, m)
}
