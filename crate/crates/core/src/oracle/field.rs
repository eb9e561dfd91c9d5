//! Matrix rank over prime fields and over the rationals.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficient field for homology computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldChoice {
    Prime(u32),
    Rational,
}

impl Default for FieldChoice {
    fn default() -> Self {
        FieldChoice::Prime(2)
    }
}

impl FieldChoice {
    pub fn prime(p: u32) -> Result<Self> {
        let is_prime = p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
        if !is_prime || p >= 1 << 31 {
            return Err(Error::InvalidArgument(format!("{p} is not a prime below 2^31")));
        }
        Ok(FieldChoice::Prime(p))
    }
}

impl fmt::Display for FieldChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldChoice::Prime(p) => write!(f, "{p}"),
            FieldChoice::Rational => f.write_str("q"),
        }
    }
}

impl FromStr for FieldChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "q" | "Q" | "0" => Ok(FieldChoice::Rational),
            other => {
                let p: u32 = other
                    .parse()
                    .map_err(|_| Error::InvalidArgument(format!("unknown field `{other}`")))?;
                FieldChoice::prime(p)
            }
        }
    }
}

/// A matrix given by its columns, each a sparse list of `(row, value)`.
#[derive(Debug, Clone, Default)]
pub struct SparseColumns {
    pub n_rows: usize,
    pub columns: Vec<Vec<(usize, i64)>>,
}

impl SparseColumns {
    pub fn new(n_rows: usize) -> Self {
        SparseColumns {
            n_rows,
            columns: Vec::new(),
        }
    }

    pub fn push(&mut self, column: Vec<(usize, i64)>) {
        self.columns.push(column);
    }

    pub fn rank(&self, field: FieldChoice) -> usize {
        if self.n_rows == 0 || self.columns.is_empty() {
            return 0;
        }
        match field {
            FieldChoice::Prime(2) => rank_f2(self),
            FieldChoice::Prime(p) => rank_fp(self, u64::from(p)),
            FieldChoice::Rational => rank_rational(self),
        }
    }
}

fn rank_f2(m: &SparseColumns) -> usize {
    let words = m.n_rows.div_ceil(64);
    let mut basis: HashMap<usize, Vec<u64>> = HashMap::new();
    for col in &m.columns {
        let mut v = vec![0u64; words];
        for &(r, x) in col {
            if x.rem_euclid(2) == 1 {
                v[r / 64] ^= 1 << (r % 64);
            }
        }
        loop {
            let Some(lead) = lowest_bit(&v) else { break };
            match basis.get(&lead) {
                Some(b) => v.iter_mut().zip(b).for_each(|(a, b)| *a ^= b),
                None => {
                    basis.insert(lead, v);
                    break;
                }
            }
        }
    }
    basis.len()
}

fn lowest_bit(v: &[u64]) -> Option<usize> {
    v.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

fn inverse_mod(a: u64, p: u64) -> u64 {
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

fn rank_fp(m: &SparseColumns, p: u64) -> usize {
    let mut basis: HashMap<usize, Vec<u64>> = HashMap::new();
    for col in &m.columns {
        let mut v = vec![0u64; m.n_rows];
        for &(r, x) in col {
            v[r] = (v[r] + x.rem_euclid(p as i64) as u64) % p;
        }
        loop {
            let Some(lead) = v.iter().position(|&x| x != 0) else { break };
            match basis.get(&lead) {
                Some(b) => {
                    let factor = v[lead];
                    for (a, &bb) in v.iter_mut().zip(b) {
                        *a = (*a + p - factor * bb % p) % p;
                    }
                }
                None => {
                    let inv = inverse_mod(v[lead], p);
                    v.iter_mut().for_each(|a| *a = *a * inv % p);
                    basis.insert(lead, v);
                    break;
                }
            }
        }
    }
    basis.len()
}

/// Fraction-free elimination: `v ← b_lead·v − v_lead·b`, then divide out the
/// content so entries stay small.
fn rank_rational(m: &SparseColumns) -> usize {
    let mut basis: HashMap<usize, Vec<BigInt>> = HashMap::new();
    for col in &m.columns {
        let mut v = vec![BigInt::zero(); m.n_rows];
        for &(r, x) in col {
            v[r] += BigInt::from(x);
        }
        loop {
            let Some(lead) = v.iter().position(|x| !x.is_zero()) else { break };
            match basis.get(&lead) {
                Some(b) => {
                    let vl = v[lead].clone();
                    let bl = b[lead].clone();
                    for (a, bb) in v.iter_mut().zip(b) {
                        *a = &bl * &*a - &vl * bb;
                    }
                    normalize_content(&mut v);
                }
                None => {
                    basis.insert(lead, v);
                    break;
                }
            }
        }
    }
    basis.len()
}

fn normalize_content(v: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in v.iter() {
        if !x.is_zero() {
            g = num_integer::Integer::gcd(&g, x);
        }
    }
    if g.is_zero() || g == BigInt::from(1) {
        return;
    }
    let g = g.abs();
    for x in v.iter_mut() {
        *x = &*x / &g;
    }
}
