//! Simplicial complexes with explicit face lists: order complexes of posets
//! and clique complexes of graphs.
//!
//! Every complex contains the empty face. Faces of each dimension are stored
//! flat and sorted lexicographically by their sorted vertex lists, so
//! boundary matrices come out deterministic.

use crate::error::{Budgets, Error, Result};
use crate::graph::Graph;
use crate::lattice::Poset;

/// All faces of one dimension, each a sorted `arity`-tuple of vertex ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceLevel {
    arity: usize,
    data: Vec<u16>,
}

impl FaceLevel {
    fn new(arity: usize) -> FaceLevel {
        FaceLevel {
            arity,
            data: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.data.len().checked_div(self.arity).unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn face(&self, i: usize) -> &[u16] {
        &self.data[i * self.arity..(i + 1) * self.arity]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[u16]> {
        self.data.chunks_exact(self.arity.max(1))
    }

    fn push(&mut self, face: &[u16]) {
        debug_assert_eq!(face.len(), self.arity);
        self.data.extend_from_slice(face);
    }

    /// Binary search among the lexicographically sorted faces.
    pub fn index_of(&self, face: &[u16]) -> Option<usize> {
        if face.len() != self.arity {
            return None;
        }
        let n = self.len();
        let (mut lo, mut hi) = (0usize, n);
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.face(mid).cmp(face) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    fn sort(&mut self) {
        if self.arity == 0 || self.data.is_empty() {
            return;
        }
        let mut faces: Vec<&[u16]> = self.data.chunks_exact(self.arity).collect();
        faces.sort_unstable();
        faces.dedup();
        let mut data = Vec::with_capacity(faces.len() * self.arity);
        for f in faces {
            data.extend_from_slice(f);
        }
        self.data = data;
    }
}

/// A finite simplicial complex on vertices 0..vertex_count-1.
///
/// `levels[d]` holds the d-dimensional faces; the empty face is implicit.
/// The empty complex (only the empty face) has dimension -1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    levels: Vec<FaceLevel>,
}

impl SimplicialComplex {
    /// The complex containing only the empty face.
    pub fn empty() -> SimplicialComplex {
        SimplicialComplex {
            vertex_count: 0,
            levels: Vec::new(),
        }
    }

    /// Builds the downward closure of the given faces.
    pub fn from_faces<I, F>(vertex_count: usize, faces: I) -> SimplicialComplex
    where
        I: IntoIterator<Item = F>,
        F: AsRef<[u16]>,
    {
        use std::collections::HashSet;
        let mut by_dim: Vec<HashSet<Vec<u16>>> = Vec::new();
        let mut stack: Vec<Vec<u16>> = Vec::new();
        for f in faces {
            let mut v = f.as_ref().to_vec();
            v.sort_unstable();
            v.dedup();
            stack.push(v);
        }
        while let Some(f) = stack.pop() {
            if f.is_empty() {
                continue;
            }
            let d = f.len() - 1;
            if by_dim.len() <= d {
                by_dim.resize_with(d + 1, HashSet::new);
            }
            if by_dim[d].insert(f.clone()) && d > 0 {
                for i in 0..f.len() {
                    let mut sub = f.clone();
                    sub.remove(i);
                    stack.push(sub);
                }
            }
        }
        let mut levels = Vec::with_capacity(by_dim.len());
        for (d, set) in by_dim.into_iter().enumerate() {
            let mut level = FaceLevel::new(d + 1);
            for f in set {
                level.push(&f);
            }
            level.sort();
            levels.push(level);
        }
        SimplicialComplex {
            vertex_count,
            levels,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Dimension: largest face cardinality minus one; -1 for the empty
    /// complex.
    pub fn dim(&self) -> i32 {
        self.levels.len() as i32 - 1
    }

    /// f_d for d >= 0.
    pub fn face_count(&self, d: usize) -> usize {
        self.levels.get(d).map_or(0, FaceLevel::len)
    }

    /// Total number of faces including the empty face.
    pub fn total_faces(&self) -> u64 {
        1 + self
            .levels
            .iter()
            .map(|l| l.len() as u64)
            .sum::<u64>()
    }

    pub fn level(&self, d: usize) -> Option<&FaceLevel> {
        self.levels.get(d)
    }

    pub fn contains_face(&self, face: &[u16]) -> bool {
        if face.is_empty() {
            return true;
        }
        self.levels
            .get(face.len() - 1)
            .and_then(|l| l.index_of(face))
            .is_some()
    }

    /// All faces, the empty face excluded, smallest dimension first.
    pub fn faces(&self) -> impl Iterator<Item = &[u16]> {
        self.levels.iter().flat_map(|l| l.iter())
    }

    /// Faces of `self` contained in the given vertex set.
    pub fn induced_subcomplex(&self, verts: &[u16]) -> SimplicialComplex {
        let keep: std::collections::HashSet<u16> = verts.iter().copied().collect();
        let mut levels = Vec::new();
        for level in &self.levels {
            let mut out = FaceLevel::new(level.arity);
            for f in level.iter() {
                if f.iter().all(|v| keep.contains(v)) {
                    out.push(f);
                }
            }
            if out.is_empty() {
                break;
            }
            levels.push(out);
        }
        SimplicialComplex {
            vertex_count: self.vertex_count,
            levels,
        }
    }

    /// lk(f) = { g : g and f disjoint, g union f a face }.
    pub fn link(&self, face: &[u16]) -> Result<SimplicialComplex> {
        let mut f = face.to_vec();
        f.sort_unstable();
        if !self.contains_face(&f) {
            return Err(Error::NotAFace(f));
        }
        if f.is_empty() {
            return Ok(self.clone());
        }
        let mut levels = Vec::new();
        for level in self.levels.iter().skip(f.len()) {
            let mut out = FaceLevel::new(level.arity - f.len());
            for g in level.iter() {
                if let Some(rest) = strip_subset(g, &f) {
                    out.push(&rest);
                }
            }
            if out.is_empty() {
                break;
            }
            out.sort();
            levels.push(out);
        }
        Ok(SimplicialComplex {
            vertex_count: self.vertex_count,
            levels,
        })
    }

    /// True iff all maximal faces have the same dimension. Returns the
    /// offending pair of facets when not pure.
    pub fn purity_witness(&self) -> Option<(Vec<u16>, Vec<u16>)> {
        let facets = self.facets();
        if facets.is_empty() {
            return None;
        }
        let top_dim = facets.iter().map(|f| f.len()).max().unwrap();
        let small = facets.iter().find(|f| f.len() < top_dim)?;
        let large = facets.iter().find(|f| f.len() == top_dim).unwrap();
        Some((small.clone(), large.clone()))
    }

    /// Maximal faces.
    pub fn facets(&self) -> Vec<Vec<u16>> {
        let mut out = Vec::new();
        for (d, level) in self.levels.iter().enumerate() {
            let upper = self.levels.get(d + 1);
            for f in level.iter() {
                let covered = upper.is_some_and(|u| {
                    // f is non-maximal iff some extension is a face
                    (0..self.vertex_count as u16).any(|v| {
                        if f.contains(&v) {
                            return false;
                        }
                        let mut g = f.to_vec();
                        g.push(v);
                        g.sort_unstable();
                        u.index_of(&g).is_some()
                    })
                });
                if !covered {
                    out.push(f.to_vec());
                }
            }
        }
        out
    }

    /// Euler characteristic from face counts (the empty face excluded), i.e.
    /// sum over d >= 0 of (-1)^d f_d.
    pub fn euler_characteristic(&self) -> i64 {
        self.levels
            .iter()
            .enumerate()
            .map(|(d, l)| {
                let f = l.len() as i64;
                if d % 2 == 0 {
                    f
                } else {
                    -f
                }
            })
            .sum()
    }
}

fn strip_subset(face: &[u16], sub: &[u16]) -> Option<Vec<u16>> {
    let mut rest = Vec::with_capacity(face.len() - sub.len());
    let mut j = 0;
    for &v in face {
        if j < sub.len() && sub[j] == v {
            j += 1;
        } else {
            rest.push(v);
        }
    }
    (j == sub.len()).then_some(rest)
}

/// The order complex of a poset: vertices are the poset elements (numbered
/// by the poset's sorted order), faces are the chains, including the empty
/// chain. The empty poset yields the empty complex.
pub fn order_complex(p: &Poset, budgets: &Budgets) -> Result<SimplicialComplex> {
    let n = p.len();
    if n == 0 {
        return Ok(SimplicialComplex::empty());
    }
    // Strict up-neighbors of each element, ascending. The element order is a
    // linear extension, so chains are ascending index sequences.
    let elems = p.elems();
    let mut above: Vec<Vec<u16>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in (i + 1)..n {
            if elems[i].strictly_divides(&elems[j]) {
                above[i].push(j as u16);
            }
        }
    }

    let mut total: u64 = 1 + n as u64;
    if total > budgets.max_faces {
        return Err(Error::FaceBudgetExceeded {
            budget: budgets.max_faces,
        });
    }
    let mut levels: Vec<FaceLevel> = Vec::new();
    let mut level0 = FaceLevel::new(1);
    for v in 0..n as u16 {
        level0.push(&[v]);
    }
    levels.push(level0);

    loop {
        let prev = levels.last().unwrap();
        let arity = prev.arity + 1;
        let mut next = FaceLevel::new(arity);
        for chain in prev.iter() {
            let last = *chain.last().unwrap() as usize;
            for &ext in &above[last] {
                total += 1;
                if total > budgets.max_faces {
                    return Err(Error::FaceBudgetExceeded {
                        budget: budgets.max_faces,
                    });
                }
                next.data.extend_from_slice(chain);
                next.data.push(ext);
            }
        }
        if next.is_empty() {
            break;
        }
        // Extending lexicographically sorted chains by ascending successors
        // preserves lexicographic order.
        debug_assert!({
            let mut sorted = next.clone();
            sorted.sort();
            sorted == next
        });
        levels.push(next);
    }
    Ok(SimplicialComplex {
        vertex_count: n,
        levels,
    })
}

/// The clique complex of a graph: faces are all cliques, including the empty
/// set and the vertices.
pub fn clique_complex(g: &Graph) -> SimplicialComplex {
    let n = g.vertex_count();
    let mut levels: Vec<FaceLevel> = Vec::new();
    let mut level0 = FaceLevel::new(1);
    for v in 0..n as u16 {
        level0.push(&[v]);
    }
    // Track the vertex mask of each clique in parallel with the face list.
    let mut masks: Vec<u16> = (0..n).map(|v| 1u16 << v).collect();
    levels.push(level0);
    loop {
        let prev = levels.last().unwrap();
        let mut next = FaceLevel::new(prev.arity + 1);
        let mut next_masks = Vec::new();
        for (i, clique) in prev.iter().enumerate() {
            let mask = masks[i];
            let last = *clique.last().unwrap() as usize;
            for v in (last + 1)..n {
                if mask & !g.neighbors(v) == 0 {
                    next.data.extend_from_slice(clique);
                    next.data.push(v as u16);
                    next_masks.push(mask | (1 << v));
                }
            }
        }
        if next.is_empty() {
            break;
        }
        masks = next_masks;
        levels.push(next);
    }
    SimplicialComplex {
        vertex_count: n,
        levels,
    }
}
