//! Monomials as packed exponent vectors and monomial ideals as minimal
//! generating sets.
//!
//! Exponents are stored 8 bits per variable in a single `u128`, so a monomial
//! is `Copy`, hashes cheaply, and divisibility is a couple of word operations.
//! Lattice closure deduplicates millions of lcm results through these keys.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Hard cap on the number of variables (matches the 16-vertex graph cap).
pub const MAX_VARS: usize = 16;

/// Largest representable exponent. Keeping the per-byte high bit clear makes
/// the borrow trick in [`Monomial::divides`] valid.
pub const MAX_EXP: u8 = 0x7f;

const GUARD: u128 = 0x8080_8080_8080_8080_8080_8080_8080_8080;

/// A monomial in up to 16 variables, stored as a packed exponent vector.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    n: u8,
    packed: u128,
}

impl Monomial {
    /// The unit monomial 1 (all exponents zero), the lattice minimum.
    pub fn unit(n: usize) -> Monomial {
        assert!((1..=MAX_VARS).contains(&n), "variable count out of range");
        Monomial {
            n: n as u8,
            packed: 0,
        }
    }

    /// The single variable x_v.
    pub fn variable(n: usize, v: usize) -> Monomial {
        assert!(v < n);
        let mut m = Monomial::unit(n);
        m.packed = 1u128 << (8 * v as u32);
        m
    }

    /// Builds a monomial from an explicit exponent vector.
    pub fn from_exps(exps: &[u8]) -> Result<Monomial> {
        if exps.is_empty() || exps.len() > MAX_VARS {
            return Err(Error::BadVertexCount(exps.len()));
        }
        let mut packed = 0u128;
        for (v, &e) in exps.iter().enumerate() {
            if e > MAX_EXP {
                return Err(Error::ExponentOverflow(MAX_EXP));
            }
            packed |= (e as u128) << (8 * v as u32);
        }
        Ok(Monomial {
            n: exps.len() as u8,
            packed,
        })
    }

    /// The squarefree monomial x_W for a vertex set given as a bit mask.
    pub fn from_support(n: usize, mask: u16) -> Monomial {
        let mut m = Monomial::unit(n);
        for v in 0..n {
            if mask & (1 << v) != 0 {
                m.packed |= 1u128 << (8 * v as u32);
            }
        }
        m
    }

    pub fn num_vars(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn exp(&self, v: usize) -> u8 {
        debug_assert!(v < self.n as usize);
        (self.packed >> (8 * v as u32)) as u8
    }

    pub fn exps(&self) -> Vec<u8> {
        (0..self.num_vars()).map(|v| self.exp(v)).collect()
    }

    /// Total degree: the sum of exponents.
    #[inline]
    pub fn degree(&self) -> u32 {
        let b = self.packed.to_le_bytes();
        b.iter().map(|&x| x as u32).sum()
    }

    /// supp(m) as a bit mask: variables with a positive exponent.
    #[inline]
    pub fn support(&self) -> u16 {
        let b = self.packed.to_le_bytes();
        let mut mask = 0u16;
        for (v, &e) in b.iter().enumerate().take(self.num_vars()) {
            if e != 0 {
                mask |= 1 << v;
            }
        }
        mask
    }

    pub fn support_size(&self) -> u32 {
        self.support().count_ones()
    }

    #[inline]
    pub fn is_unit(&self) -> bool {
        self.packed == 0
    }

    /// True iff every exponent is at most 1.
    #[inline]
    pub fn is_squarefree(&self) -> bool {
        const LOW: u128 = 0x0101_0101_0101_0101_0101_0101_0101_0101;
        self.packed & !LOW == 0
    }

    /// Componentwise maximum of exponents.
    #[inline]
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.n, other.n, "variable counts differ");
        let a = self.packed.to_le_bytes();
        let b = other.packed.to_le_bytes();
        let mut out = [0u8; 16];
        for i in 0..16 {
            out[i] = a[i].max(b[i]);
        }
        Monomial {
            n: self.n,
            packed: u128::from_le_bytes(out),
        }
    }

    /// True iff self divides other (every exponent <=).
    ///
    /// Byte-parallel: with all exponents <= 0x7f, `(b | 0x80) - a` keeps the
    /// per-byte guard bit set exactly when `a <= b` in that byte.
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.n, other.n, "variable counts differ");
        ((other.packed | GUARD).wrapping_sub(self.packed)) & GUARD == GUARD
    }

    #[inline]
    pub fn strictly_divides(&self, other: &Monomial) -> bool {
        self.packed != other.packed && self.divides(other)
    }

    /// Product, failing on exponent overflow.
    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        assert_eq!(self.n, other.n, "variable counts differ");
        let a = self.packed.to_le_bytes();
        let b = other.packed.to_le_bytes();
        let mut out = [0u8; 16];
        for i in 0..16 {
            let s = a[i] as u16 + b[i] as u16;
            if s > MAX_EXP as u16 {
                return Err(Error::ExponentOverflow(MAX_EXP));
            }
            out[i] = s as u8;
        }
        Ok(Monomial {
            n: self.n,
            packed: u128::from_le_bytes(out),
        })
    }

    /// m / x_v, decrementing the exponent of v by one.
    pub fn quotient_by_variable(&self, v: usize) -> Result<Monomial> {
        if v >= self.num_vars() || self.exp(v) == 0 {
            return Err(Error::VariableNotInSupport(v));
        }
        Ok(Monomial {
            n: self.n,
            packed: self.packed - (1u128 << (8 * v as u32)),
        })
    }

    /// Report rendering: `x0^2*x1`, exponent 1 omitted; the unit renders as `1`.
    pub fn render(&self) -> String {
        if self.is_unit() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for v in 0..self.num_vars() {
            match self.exp(v) {
                0 => {}
                1 => parts.push(format!("x{v}")),
                e => parts.push(format!("x{v}^{e}")),
            }
        }
        parts.join("*")
    }

    /// Sort key placing elements in (degree, exponent vector) order.
    #[inline]
    pub fn degree_key(&self) -> (u32, u128) {
        (self.degree(), self.packed)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// A monomial ideal given by its minimal generating set G(I).
///
/// Invariants: no generator divides another, and no generator is the unit.
#[derive(Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds an ideal from arbitrary generators, deduplicating and pruning
    /// non-minimal ones.
    pub fn from_gens(n: usize, gens: Vec<Monomial>) -> Result<MonomialIdeal> {
        if gens.is_empty() {
            return Err(Error::EmptyIdeal);
        }
        let mut gens = gens;
        for g in &gens {
            assert_eq!(g.num_vars(), n, "variable counts differ");
            if g.is_unit() {
                return Err(Error::UnitMonomial);
            }
        }
        gens.sort_by_key(Monomial::degree_key);
        gens.dedup();
        // Divisibility pruning: a sorted scan suffices since a strict divisor
        // has strictly smaller degree.
        let mut minimal: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            if !minimal.iter().any(|m| m.divides(&g)) {
                minimal.push(g);
            }
        }
        Ok(MonomialIdeal { n, gens: minimal })
    }

    /// The edge ideal I(G) = (x_i x_j : {i,j} in E(G)).
    pub fn edge_ideal(g: &Graph) -> Result<MonomialIdeal> {
        let n = g.vertex_count();
        let gens: Vec<Monomial> = g
            .edges()
            .iter()
            .map(|&(u, v)| {
                Monomial::variable(n, u as usize)
                    .checked_mul(&Monomial::variable(n, v as usize))
                    .expect("degree-2 monomial cannot overflow")
            })
            .collect();
        if gens.is_empty() {
            return Err(Error::EmptyIdeal);
        }
        MonomialIdeal::from_gens(n, gens)
    }

    /// The k-th power: products of k generators, reduced to a minimal set.
    pub fn power(&self, k: u32) -> Result<MonomialIdeal> {
        if k < 1 {
            return Err(Error::BadPower);
        }
        if k == 1 {
            return Ok(self.clone());
        }
        let mut products: Vec<Monomial> = vec![Monomial::unit(self.n)];
        for _ in 0..k {
            let mut next = std::collections::HashSet::new();
            for p in &products {
                for g in &self.gens {
                    next.insert(p.checked_mul(g)?);
                }
            }
            products = next.into_iter().collect();
        }
        MonomialIdeal::from_gens(self.n, products)
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    /// The common generator degree when the ideal is equigenerated.
    pub fn equigenerated_degree(&self) -> Option<u32> {
        let d = self.gens[0].degree();
        self.gens.iter().all(|g| g.degree() == d).then_some(d)
    }

    /// lcm of all generators: the lattice maximum m_I.
    pub fn top_monomial(&self) -> Monomial {
        let mut m = self.gens[0];
        for g in &self.gens[1..] {
            m = m.lcm(g);
        }
        m
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.gens
                .iter()
                .map(Monomial::render)
                .collect::<Vec<_>>()
                .join(", ")
        )
    }
}
