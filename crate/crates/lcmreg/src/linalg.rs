//! Exact sparse rank computation.
//!
//! Columns are reduced against previously claimed pivot rows, eliminating
//! from the largest row index down. Over a prime field this is in-place
//! modular elimination; over the rationals the updates are fraction-free
//! integer combinations with gcd normalization to bound growth. Floating
//! point never appears.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use std::collections::HashMap;

use crate::field::FieldSpec;

/// A sparse integer matrix given column-wise; entries carry row index and a
/// small signed coefficient (boundary maps only ever produce +-1).
#[derive(Clone, Debug, Default)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: Vec<Vec<(u32, i8)>>,
}

impl SparseMatrix {
    pub fn new(rows: usize) -> SparseMatrix {
        SparseMatrix {
            rows,
            cols: Vec::new(),
        }
    }

    /// Adds a column; entries must be sorted by row and free of duplicates.
    pub fn push_col(&mut self, col: Vec<(u32, i8)>) {
        debug_assert!(col.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(col.iter().all(|&(r, v)| (r as usize) < self.rows && v != 0));
        self.cols.push(col);
    }

    pub fn rank(&self, field: FieldSpec) -> usize {
        match field {
            FieldSpec::Prime(p) => rank_mod_p(self, p as u64),
            FieldSpec::Rationals => rank_rational(self),
        }
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Rank over F_p by column reduction with pivot = largest remaining row.
fn rank_mod_p(m: &SparseMatrix, p: u64) -> usize {
    // pivot row -> index into `reduced`
    let mut pivot_of_row: HashMap<u32, usize> = HashMap::new();
    let mut reduced: Vec<Vec<(u32, u64)>> = Vec::new();
    let mut rank = 0;

    for col in &m.cols {
        let mut c: Vec<(u32, u64)> = col
            .iter()
            .map(|&(r, v)| (r, (v as i64).rem_euclid(p as i64) as u64))
            .filter(|&(_, v)| v != 0)
            .collect();
        while let Some(&(r, v)) = c.last() {
            match pivot_of_row.get(&r) {
                None => {
                    pivot_of_row.insert(r, reduced.len());
                    reduced.push(c);
                    rank += 1;
                    break;
                }
                Some(&idx) => {
                    let piv = &reduced[idx];
                    let w = piv.last().unwrap().1;
                    // c -= (v / w) * piv
                    let factor = v * mod_inverse(w, p) % p;
                    c = axpy_mod_p(&c, piv, p - factor, p);
                }
            }
        }
    }
    rank
}

/// c + factor * piv (mod p), merging sorted entry lists.
fn axpy_mod_p(c: &[(u32, u64)], piv: &[(u32, u64)], factor: u64, p: u64) -> Vec<(u32, u64)> {
    let mut out = Vec::with_capacity(c.len() + piv.len());
    let (mut i, mut j) = (0, 0);
    while i < c.len() || j < piv.len() {
        let take_c = j >= piv.len() || (i < c.len() && c[i].0 < piv[j].0);
        let take_p = i >= c.len() || (j < piv.len() && piv[j].0 < c[i].0);
        if take_c {
            out.push(c[i]);
            i += 1;
        } else if take_p {
            let v = piv[j].1 * factor % p;
            if v != 0 {
                out.push((piv[j].0, v));
            }
            j += 1;
        } else {
            let v = (c[i].1 + piv[j].1 * factor % p) % p;
            if v != 0 {
                out.push((c[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rank over the rationals via fraction-free integer elimination: columns
/// stay integral, each update is a cross-multiplied combination followed by
/// division by the content gcd.
fn rank_rational(m: &SparseMatrix) -> usize {
    let mut pivot_of_row: HashMap<u32, usize> = HashMap::new();
    let mut reduced: Vec<Vec<(u32, BigInt)>> = Vec::new();
    let mut rank = 0;

    for col in &m.cols {
        let mut c: Vec<(u32, BigInt)> = col
            .iter()
            .map(|&(r, v)| (r, BigInt::from(v)))
            .collect();
        while let Some((r, v)) = c.last().cloned() {
            match pivot_of_row.get(&r) {
                None => {
                    normalize_content(&mut c);
                    pivot_of_row.insert(r, reduced.len());
                    reduced.push(c);
                    rank += 1;
                    break;
                }
                Some(&idx) => {
                    let piv = &reduced[idx];
                    let w = piv.last().unwrap().1.clone();
                    // c := w*c - v*piv eliminates row r without division.
                    c = cross_combine(&c, &w, piv, &v);
                    normalize_content(&mut c);
                }
            }
        }
    }
    rank
}

/// w*c - v*piv with sorted-merge of the entry lists.
fn cross_combine(
    c: &[(u32, BigInt)],
    w: &BigInt,
    piv: &[(u32, BigInt)],
    v: &BigInt,
) -> Vec<(u32, BigInt)> {
    let mut out = Vec::with_capacity(c.len() + piv.len());
    let (mut i, mut j) = (0, 0);
    while i < c.len() || j < piv.len() {
        let take_c = j >= piv.len() || (i < c.len() && c[i].0 < piv[j].0);
        let take_p = i >= c.len() || (j < piv.len() && piv[j].0 < c[i].0);
        if take_c {
            out.push((c[i].0, w * &c[i].1));
            i += 1;
        } else if take_p {
            out.push((piv[j].0, -(v * &piv[j].1)));
            j += 1;
        } else {
            let x = w * &c[i].1 - v * &piv[j].1;
            if !x.is_zero() {
                out.push((c[i].0, x));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn normalize_content(c: &mut [(u32, BigInt)]) {
    let mut g = BigInt::zero();
    for (_, v) in c.iter() {
        g = g.gcd(v);
    }
    if g > BigInt::from(1) {
        for (_, v) in c.iter_mut() {
            *v = &*v / &g;
        }
    }
    // Keep the pivot entry positive so reductions stay tidy.
    if let Some((_, v)) = c.last() {
        if v.is_negative() {
            for (_, x) in c.iter_mut() {
                *x = -&*x;
            }
        }
    }
}
