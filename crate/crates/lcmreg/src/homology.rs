//! Exact reduced simplicial homology and poset homology.
//!
//! `reduced_betti` works over the augmented chain complex, so the empty
//! complex has Betti number 1 in dimension -1 and a nonempty complex has 0
//! there. Boundary matrices are assembled sparse, column per face, with the
//! sign convention d[v_0<..<v_d] = sum_j (-1)^j [.. v_j-hat ..].
//!
//! Order complexes of lcm-lattice intervals grow far faster than their
//! homology. `poset_betti` therefore first shrinks the poset by three
//! homology-preserving moves and only then enumerates chains:
//!
//! - if some element is comparable to every other, the order complex is a
//!   cone and all reduced Betti numbers vanish;
//! - the monotone idempotent maps x -> meet of the maximal elements above x
//!   and x -> join of the minimal elements below x restrict the poset to
//!   their images (order homotopy);
//! - an element whose strict down-set has a maximum or whose strict up-set
//!   has a minimum (unique cover) has a contractible link and can be deleted.
//!
//! Each move preserves reduced homology over every field, and the test suite
//! cross-checks the reduced path against the plain order-complex path.

use crate::complex::{order_complex, SimplicialComplex};
use crate::error::{Budgets, Result};
use crate::field::FieldSpec;
use crate::lattice::Poset;
use crate::linalg::SparseMatrix;

/// Per-dimension reduced Betti numbers, indexed from -1 upward.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiVector {
    // v[0] is dimension -1; trailing zeros trimmed so equality is
    // padding-independent.
    v: Vec<u64>,
}

impl BettiVector {
    pub fn zero() -> BettiVector {
        BettiVector { v: Vec::new() }
    }

    /// The vector of the empty complex: a single 1 in dimension -1.
    pub fn of_empty_complex() -> BettiVector {
        BettiVector { v: vec![1] }
    }

    pub fn from_entries(entries: &[(i32, u64)]) -> BettiVector {
        let mut b = BettiVector::zero();
        for &(d, r) in entries {
            b.set(d, r);
        }
        b
    }

    pub fn get(&self, d: i32) -> u64 {
        if d < -1 {
            return 0;
        }
        self.v.get((d + 1) as usize).copied().unwrap_or(0)
    }

    pub fn set(&mut self, d: i32, value: u64) {
        assert!(d >= -1);
        let idx = (d + 1) as usize;
        if idx >= self.v.len() {
            if value == 0 {
                return;
            }
            self.v.resize(idx + 1, 0);
        }
        self.v[idx] = value;
        while self.v.last() == Some(&0) {
            self.v.pop();
        }
    }

    pub fn is_acyclic(&self) -> bool {
        self.v.iter().all(|&x| x == 0)
    }

    /// Nonzero entries as (dimension, rank), ascending.
    pub fn entries(&self) -> Vec<(i32, u64)> {
        self.v
            .iter()
            .enumerate()
            .filter(|&(_, &r)| r > 0)
            .map(|(i, &r)| (i as i32 - 1, r))
            .collect()
    }

    pub fn lowest_nonzero(&self) -> Option<i32> {
        self.v.iter().position(|&r| r > 0).map(|i| i as i32 - 1)
    }

    /// Reduced Euler characteristic sum over d of (-1)^d beta_d.
    pub fn reduced_euler(&self) -> i64 {
        self.v
            .iter()
            .enumerate()
            .map(|(i, &r)| {
                // index i is dimension i-1, so even i carries sign -1
                if i % 2 == 0 {
                    -(r as i64)
                } else {
                    r as i64
                }
            })
            .sum()
    }

    /// alpha = dim - (lowest dimension with nonzero homology), 0 if acyclic.
    pub fn alpha_with_dim(&self, dim: i32) -> u32 {
        match self.lowest_nonzero() {
            None => 0,
            Some(d) => {
                debug_assert!(d <= dim);
                (dim - d) as u32
            }
        }
    }
}

/// Exact reduced Betti numbers of a complex over the given field.
pub fn reduced_betti(c: &SimplicialComplex, field: FieldSpec) -> BettiVector {
    let dim = c.dim();
    if dim < 0 {
        return BettiVector::of_empty_complex();
    }
    let top = dim as usize;
    // ranks[d] = rank of boundary_d for 0 <= d <= dim.
    let ranks: Vec<usize> = (0..=top)
        .map(|d| boundary_matrix(c, d).rank(field))
        .collect();

    let mut betti = BettiVector::zero();
    betti.set(-1, 1 - ranks[0] as u64);
    for d in 0..=top {
        let f_d = c.face_count(d) as u64;
        let next = if d < top { ranks[d + 1] as u64 } else { 0 };
        betti.set(d as i32, f_d - ranks[d] as u64 - next);
    }

    // Euler consistency: face counts and Betti numbers are accumulated by
    // independent code paths.
    let chi_faces = c.euler_characteristic() - 1; // include the empty face
    assert_eq!(
        chi_faces,
        betti.reduced_euler(),
        "Euler characteristic mismatch"
    );
    betti
}

/// The matrix of boundary_d : C_d -> C_{d-1} (C_{-1} is spanned by the empty
/// face).
fn boundary_matrix(c: &SimplicialComplex, d: usize) -> SparseMatrix {
    if d == 0 {
        let mut m = SparseMatrix::new(1);
        for _ in 0..c.face_count(0) {
            m.push_col(vec![(0, 1)]);
        }
        return m;
    }
    let rows = c.face_count(d - 1);
    let lower = c.level(d - 1).expect("dimension checked by caller");
    let mut m = SparseMatrix::new(rows);
    let Some(level) = c.level(d) else { return m };
    let mut facet = Vec::with_capacity(d);
    for face in level.iter() {
        let mut col: Vec<(u32, i8)> = Vec::with_capacity(d + 1);
        for j in 0..=d {
            facet.clear();
            facet.extend(face[..j].iter().copied());
            facet.extend(face[j + 1..].iter().copied());
            let row = lower
                .index_of(&facet)
                .expect("facet of a face must be a face") as u32;
            let sign = if j % 2 == 0 { 1 } else { -1 };
            col.push((row, sign));
        }
        col.sort_unstable_by_key(|&(r, _)| r);
        m.push_col(col);
    }
    m
}

/// alpha of a complex: dim minus the lowest dimension carrying homology, 0
/// when acyclic.
pub fn alpha(c: &SimplicialComplex, field: FieldSpec) -> u32 {
    reduced_betti(c, field).alpha_with_dim(c.dim())
}

// ---------------------------------------------------------------------------
// Cohen-Macaulayness (Reisner criterion)
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct CmReport {
    pub cm: bool,
    pub witness: Option<CmWitness>,
}

#[derive(Clone, Debug)]
pub enum CmWitness {
    NotPure {
        small_facet: Vec<u16>,
        large_facet: Vec<u16>,
    },
    /// A face whose link has homology below its permitted dimension.
    Homology { face: Vec<u16>, dim: i32 },
}

/// Reisner criterion: every link (including the whole complex as the link of
/// the empty face) may carry reduced homology only in its top dimension
/// dim(c) - |F| - 1. Non-pure complexes fail with a purity witness.
pub fn is_cohen_macaulay(c: &SimplicialComplex, field: FieldSpec) -> Result<CmReport> {
    if let Some((small, large)) = c.purity_witness() {
        return Ok(CmReport {
            cm: false,
            witness: Some(CmWitness::NotPure {
                small_facet: small,
                large_facet: large,
            }),
        });
    }
    let dim = c.dim();
    let empty: &[u16] = &[];
    for face in std::iter::once(empty).chain(c.faces()) {
        let bound = dim - face.len() as i32;
        if bound <= -1 {
            continue;
        }
        let link = c.link(face)?;
        let betti = reduced_betti(&link, field);
        for i in -1..bound {
            if betti.get(i) != 0 {
                return Ok(CmReport {
                    cm: false,
                    witness: Some(CmWitness::Homology {
                        face: face.to_vec(),
                        dim: i,
                    }),
                });
            }
        }
    }
    Ok(CmReport {
        cm: true,
        witness: None,
    })
}

// ---------------------------------------------------------------------------
// Poset homology with reduction
// ---------------------------------------------------------------------------

/// Reduced Betti numbers of the order complex of a poset.
///
/// With `reduce` set the poset is first shrunk by the homology-preserving
/// moves described in the module docs; the answer is identical either way,
/// only the enumerated complex differs.
pub fn poset_betti(
    p: &Poset,
    field: FieldSpec,
    reduce: bool,
    budgets: &Budgets,
) -> Result<BettiVector> {
    if p.is_empty() {
        return Ok(BettiVector::of_empty_complex());
    }
    if !reduce {
        return Ok(reduced_betti(&order_complex(p, budgets)?, field));
    }
    match reduce_poset(p) {
        Reduction::Cone => Ok(BettiVector::zero()),
        Reduction::Kept(q) => Ok(reduced_betti(&order_complex(&q, budgets)?, field)),
    }
}

/// alpha((1,m)) style invariant of a poset: alpha of its order complex. The
/// dimension is taken from the original (unreduced) chain structure.
pub fn poset_alpha(p: &Poset, field: FieldSpec, budgets: &Budgets) -> Result<u32> {
    let dim = p.height() as i32 - 1;
    Ok(poset_betti(p, field, true, budgets)?.alpha_with_dim(dim))
}

enum Reduction {
    /// Some element is comparable to all others: the complex is a cone.
    Cone,
    Kept(Poset),
}

fn reduce_poset(p: &Poset) -> Reduction {
    let n = p.len();
    let elems = p.elems();
    let mut down: Vec<Bits> = vec![Bits::new(n); n];
    let mut up: Vec<Bits> = vec![Bits::new(n); n];
    for i in 0..n {
        for j in (i + 1)..n {
            if elems[i].strictly_divides(&elems[j]) {
                up[i].set(j);
                down[j].set(i);
            }
        }
    }
    let mut alive = Bits::full(n);
    loop {
        if find_apex(&alive, &down, &up).is_some() {
            return Reduction::Cone;
        }
        let before = alive.count();
        closure_to_meets_of_maximal(&mut alive, &down, &up);
        closure_to_joins_of_minimal(&mut alive, &down, &up);
        if alive.count() < before {
            continue;
        }
        remove_unique_cover_elements(&mut alive, &down, &up);
        if alive.count() == before {
            break;
        }
    }
    Reduction::Kept(Poset::from_monomials(
        alive.iter_ones().map(|i| elems[i]).collect(),
    ))
}

/// An element comparable to every other alive element, if any.
fn find_apex(alive: &Bits, down: &[Bits], up: &[Bits]) -> Option<usize> {
    alive.iter_ones().find(|&i| {
        let mut cmp = down[i].clone();
        cmp.or_assign(&up[i]);
        cmp.set(i);
        alive.is_subset(&cmp)
    })
}

/// Restricts to the image of x -> meet of the maximal elements above x,
/// when that map is total (each meet exists). Leaves `alive` unchanged
/// otherwise.
fn closure_to_meets_of_maximal(alive: &mut Bits, down: &[Bits], up: &[Bits]) {
    let n = down.len();
    let mut maximal = Bits::new(n);
    for i in alive.iter_ones() {
        if up[i].intersection_is_empty(alive) {
            maximal.set(i);
        }
    }
    let mut image = Bits::new(n);
    for x in alive.iter_ones() {
        let mut coatoms = up[x].clone();
        coatoms.and_assign(alive);
        coatoms.and_assign(&maximal);
        if maximal.get(x) {
            coatoms.set(x);
        }
        // s = alive elements below every maximal element above x
        let mut s = alive.clone();
        for c in coatoms.iter_ones() {
            let mut below = down[c].clone();
            below.set(c);
            s.and_assign(&below);
        }
        // The meet is the unique maximal element of s; the highest index is
        // maximal (indices extend the order), so it must dominate all of s.
        let Some(h) = s.highest() else { return };
        let mut dominated = down[h].clone();
        dominated.set(h);
        if !s.is_subset(&dominated) {
            return; // no meet: closure not applicable to this poset
        }
        image.set(h);
    }
    *alive = image;
}

/// Dual closure: restricts to the image of x -> join of the minimal elements
/// below x, when total.
fn closure_to_joins_of_minimal(alive: &mut Bits, down: &[Bits], up: &[Bits]) {
    let n = down.len();
    let mut minimal = Bits::new(n);
    for i in alive.iter_ones() {
        if down[i].intersection_is_empty(alive) {
            minimal.set(i);
        }
    }
    let mut image = Bits::new(n);
    for x in alive.iter_ones() {
        let mut atoms = down[x].clone();
        atoms.and_assign(alive);
        atoms.and_assign(&minimal);
        if minimal.get(x) {
            atoms.set(x);
        }
        let mut s = alive.clone();
        for a in atoms.iter_ones() {
            let mut above = up[a].clone();
            above.set(a);
            s.and_assign(&above);
        }
        let Some(l) = s.lowest() else { return };
        let mut dominating = up[l].clone();
        dominating.set(l);
        if !s.is_subset(&dominating) {
            return;
        }
        image.set(l);
    }
    *alive = image;
}

/// Deletes elements whose strict down-set has a unique maximal element or
/// whose strict up-set has a unique minimal element: their links are cones.
fn remove_unique_cover_elements(alive: &mut Bits, down: &[Bits], up: &[Bits]) {
    let n = down.len();
    loop {
        let mut removed = false;
        for i in 0..n {
            if !alive.get(i) {
                continue;
            }
            let lower_covers = count_extremes(&down[i], alive, up, 2);
            if lower_covers == 1 {
                alive.clear(i);
                removed = true;
                continue;
            }
            let upper_covers = count_extremes(&up[i], alive, down, 2);
            if upper_covers == 1 {
                alive.clear(i);
                removed = true;
            }
        }
        if !removed {
            return;
        }
    }
}

/// Counts elements of `set & alive` with no other member of `set & alive`
/// strictly beyond them in `beyond`, stopping at `cap`.
fn count_extremes(set: &Bits, alive: &Bits, beyond: &[Bits], cap: usize) -> usize {
    let mut members = set.clone();
    members.and_assign(alive);
    let mut count = 0;
    for j in members.iter_ones() {
        if beyond[j].intersection_is_empty(&members) {
            count += 1;
            if count >= cap {
                return count;
            }
        }
    }
    count
}

// ---------------------------------------------------------------------------
// Fixed-capacity bitset
// ---------------------------------------------------------------------------

#[derive(Clone, PartialEq, Eq)]
struct Bits {
    n: usize,
    w: Vec<u64>,
}

impl Bits {
    fn new(n: usize) -> Bits {
        Bits {
            n,
            w: vec![0; n.div_ceil(64)],
        }
    }

    fn full(n: usize) -> Bits {
        let mut b = Bits::new(n);
        for i in 0..n {
            b.set(i);
        }
        b
    }

    #[inline]
    fn set(&mut self, i: usize) {
        self.w[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    fn clear(&mut self, i: usize) {
        self.w[i / 64] &= !(1 << (i % 64));
    }

    #[inline]
    fn get(&self, i: usize) -> bool {
        self.w[i / 64] & (1 << (i % 64)) != 0
    }

    fn count(&self) -> usize {
        self.w.iter().map(|x| x.count_ones() as usize).sum()
    }

    fn and_assign(&mut self, other: &Bits) {
        for (a, b) in self.w.iter_mut().zip(&other.w) {
            *a &= b;
        }
    }

    fn or_assign(&mut self, other: &Bits) {
        for (a, b) in self.w.iter_mut().zip(&other.w) {
            *a |= b;
        }
    }

    fn is_subset(&self, other: &Bits) -> bool {
        self.w.iter().zip(&other.w).all(|(a, b)| a & !b == 0)
    }

    fn intersection_is_empty(&self, other: &Bits) -> bool {
        self.w.iter().zip(&other.w).all(|(a, b)| a & b == 0)
    }

    fn highest(&self) -> Option<usize> {
        for (block, &word) in self.w.iter().enumerate().rev() {
            if word != 0 {
                return Some(block * 64 + 63 - word.leading_zeros() as usize);
            }
        }
        None
    }

    fn lowest(&self) -> Option<usize> {
        for (block, &word) in self.w.iter().enumerate() {
            if word != 0 {
                return Some(block * 64 + word.trailing_zeros() as usize);
            }
        }
        None
    }

    fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.w.iter().enumerate().flat_map(|(block, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(block * 64 + i)
            })
        })
    }
}

impl std::fmt::Debug for Bits {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter_ones()).finish()
    }
}
