//! Simple undirected graphs on up to 16 labeled vertices.
//!
//! Vertex sets and adjacency rows are `u16` bit masks, so every induced
//! subgraph predicate below reduces to mask arithmetic.

use crate::error::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const MAX_VERTICES: usize = 16;

/// A simple undirected graph on labeled vertices 0..n-1.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: u8,
    adj: [u16; MAX_VERTICES],
}

impl Graph {
    /// The edgeless graph on n vertices.
    pub fn new(n: usize) -> Result<Graph> {
        if !(1..=MAX_VERTICES).contains(&n) {
            return Err(Error::BadVertexCount(n));
        }
        Ok(Graph {
            n: n as u8,
            adj: [0; MAX_VERTICES],
        })
    }

    pub fn from_edges(n: usize, edges: &[(u8, u8)]) -> Result<Graph> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u as usize, v as usize)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.vertex_count();
        if u >= n || v >= n || u == v {
            return Err(Error::InvalidInput(format!(
                "bad edge ({u}, {v}) for {n} vertices"
            )));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n as usize
    }

    /// Mask with one bit per vertex.
    #[inline]
    pub fn vertex_mask(&self) -> u16 {
        if self.n as usize == 16 {
            u16::MAX
        } else {
            (1u16 << self.n) - 1
        }
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & (1 << v) != 0
    }

    /// Neighbor set of v as a bit mask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u16 {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> u32 {
        self.adj[v].count_ones()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.vertex_count())
            .map(|v| self.degree(v) as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges as (u, v) pairs with u < v, sorted.
    pub fn edges(&self) -> Vec<(u8, u8)> {
        let mut out = Vec::new();
        for u in 0..self.vertex_count() {
            for v in (u + 1)..self.vertex_count() {
                if self.has_edge(u, v) {
                    out.push((u as u8, v as u8));
                }
            }
        }
        out
    }

    /// G^c: edge {i,j} present iff i != j and absent in G.
    pub fn complement(&self) -> Graph {
        let mask = self.vertex_mask();
        let mut g = Graph {
            n: self.n,
            adj: [0; MAX_VERTICES],
        };
        for v in 0..self.vertex_count() {
            g.adj[v] = mask & !self.adj[v] & !(1 << v);
        }
        g
    }

    /// The induced subgraph on the vertices of `mask`, relabeled to
    /// 0..|mask|-1 in increasing label order.
    pub fn induced_subgraph(&self, mask: u16) -> Result<Graph> {
        let mask = mask & self.vertex_mask();
        if mask == 0 {
            return Err(Error::EmptyVertexSet);
        }
        let verts: Vec<usize> = (0..self.vertex_count())
            .filter(|&v| mask & (1 << v) != 0)
            .collect();
        let mut g = Graph::new(verts.len())?;
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i] |= 1 << j;
                    g.adj[j] |= 1 << i;
                }
            }
        }
        Ok(g)
    }

    pub fn is_connected(&self) -> bool {
        let mask = self.vertex_mask();
        let mut seen = 1u16;
        loop {
            let mut next = seen;
            let mut bits = seen;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                next |= self.adj[v];
            }
            if next == seen {
                break;
            }
            seen = next;
        }
        seen == mask
    }

    pub fn has_isolated_vertex(&self) -> bool {
        (0..self.vertex_count()).any(|v| self.adj[v] == 0)
    }

    /// Maximum cardinality search: returns an ordering that is a perfect
    /// elimination ordering iff the graph is chordal.
    pub fn mcs_order(&self) -> Vec<u8> {
        let n = self.vertex_count();
        let mut weight = vec![0u32; n];
        let mut remaining = self.vertex_mask();
        // Vertices are selected last-to-first, so the selection order reversed
        // is the candidate PEO.
        let mut selection = Vec::with_capacity(n);
        for _ in 0..n {
            let mut best = usize::MAX;
            let mut bits = remaining;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if best == usize::MAX || weight[v] > weight[best] {
                    best = v;
                }
            }
            selection.push(best as u8);
            remaining &= !(1 << best);
            let mut nb = self.adj[best] & remaining;
            while nb != 0 {
                let v = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                weight[v] += 1;
            }
        }
        selection.reverse();
        selection
    }

    /// Checks whether `order` is a perfect elimination ordering: the later
    /// neighbors of each vertex must form a clique.
    pub fn is_perfect_elimination_order(&self, order: &[u8]) -> bool {
        let mut later = self.vertex_mask();
        for &ov in order {
            let v = ov as usize;
            later &= !(1 << v);
            let nb = self.adj[v] & later;
            let mut bits = nb;
            while bits != 0 {
                let u = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if nb & !(self.adj[u] | (1 << u)) != 0 {
                    return false;
                }
            }
        }
        true
    }

    /// True iff the graph has no induced cycle of length > 3.
    ///
    /// Maximum cardinality search produces a perfect elimination ordering
    /// exactly on chordal graphs; the explicit PEO check is the postcondition.
    pub fn is_chordal(&self) -> bool {
        if self.vertex_count() <= 3 {
            return true;
        }
        let order = self.mcs_order();
        self.is_perfect_elimination_order(&order)
    }

    /// True iff some 4 vertices induce a 4-cycle.
    pub fn has_induced_c4(&self) -> bool {
        let n = self.vertex_count();
        for a in 0..n {
            for b in (a + 1)..n {
                for c in (b + 1)..n {
                    for d in (c + 1)..n {
                        let vs = [a, b, c, d];
                        let mask = (1u16 << a) | (1 << b) | (1 << c) | (1 << d);
                        let mut edges = 0;
                        let mut degs_ok = true;
                        for &v in &vs {
                            let deg = (self.adj[v] & mask).count_ones();
                            if deg != 2 {
                                degs_ok = false;
                                break;
                            }
                            edges += deg;
                        }
                        // 4 vertices, 4 edges, all degrees 2: a 4-cycle.
                        if degs_ok && edges == 8 {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    /// True iff no 4 vertices induce the star K_{1,3}.
    pub fn is_claw_free(&self) -> bool {
        let n = self.vertex_count();
        for center in 0..n {
            let nb = self.adj[center];
            if nb.count_ones() < 3 {
                continue;
            }
            // Look for 3 pairwise non-adjacent neighbors.
            let mut xs = nb;
            while xs != 0 {
                let x = xs.trailing_zeros() as usize;
                xs &= xs - 1;
                let mut ys = nb & !self.adj[x] & (u16::MAX << (x + 1));
                while ys != 0 {
                    let y = ys.trailing_zeros() as usize;
                    ys &= ys - 1;
                    let zs = nb & !self.adj[x] & !self.adj[y] & (u16::MAX << (y + 1));
                    if zs != 0 {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Membership in the family of claw-free graphs with no induced 4-cycle
    /// in the complement.
    pub fn in_cf_family(&self) -> bool {
        self.is_claw_free() && !self.complement().has_induced_c4()
    }

    /// A Dirac order on V(G): a total order such that every edge {i,j} below
    /// k has i or j adjacent to k. Exists iff G^c is chordal.
    pub fn dirac_order(&self) -> Result<VertexOrder> {
        let h = self.complement();
        let peo = h.mcs_order();
        if !h.is_perfect_elimination_order(&peo) {
            return Err(Error::NoDiracOrder);
        }
        let mut order: Vec<u8> = peo;
        order.reverse();
        let vo = VertexOrder { order };
        assert!(
            vo.satisfies_dirac_condition(self),
            "reversed PEO of the complement failed the Dirac check"
        );
        Ok(vo)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// A permutation of the vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexOrder {
    pub order: Vec<u8>,
}

impl VertexOrder {
    pub fn is_permutation(&self, n: usize) -> bool {
        if self.order.len() != n {
            return false;
        }
        let mut seen = 0u16;
        for &v in &self.order {
            if v as usize >= n || seen & (1 << v) != 0 {
                return false;
            }
            seen |= 1 << v;
        }
        true
    }

    /// Direct check of the Dirac condition on g.
    pub fn satisfies_dirac_condition(&self, g: &Graph) -> bool {
        let n = g.vertex_count();
        if !self.is_permutation(n) {
            return false;
        }
        for k in 0..n {
            let vk = self.order[k] as usize;
            for i in 0..k {
                let vi = self.order[i] as usize;
                for j in (i + 1)..k {
                    let vj = self.order[j] as usize;
                    if g.has_edge(vi, vj) && !g.has_edge(vi, vk) && !g.has_edge(vj, vk) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

// ---------------------------------------------------------------------------
// Named families
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedFamily {
    Cycle,
    Path,
    Complete,
    ComplementOfCycle,
}

impl NamedFamily {
    pub fn parse(s: &str) -> Result<NamedFamily> {
        match s {
            "cycle" => Ok(NamedFamily::Cycle),
            "path" => Ok(NamedFamily::Path),
            "complete" => Ok(NamedFamily::Complete),
            "cycle-complement" | "complement-of-cycle" => Ok(NamedFamily::ComplementOfCycle),
            _ => Err(Error::InvalidInput(format!("unknown graph family {s:?}"))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            NamedFamily::Cycle => "cycle",
            NamedFamily::Path => "path",
            NamedFamily::Complete => "complete",
            NamedFamily::ComplementOfCycle => "cycle-complement",
        }
    }

    /// The standard labeled representative.
    pub fn build(&self, n: usize) -> Result<Graph> {
        let err = || Error::BadFamilySize {
            family: self.name().to_string(),
            n,
        };
        match self {
            NamedFamily::Cycle | NamedFamily::ComplementOfCycle => {
                if !(3..=MAX_VERTICES).contains(&n) {
                    return Err(err());
                }
                let mut g = Graph::new(n)?;
                for v in 0..n {
                    g.add_edge(v, (v + 1) % n)?;
                }
                if *self == NamedFamily::ComplementOfCycle {
                    g = g.complement();
                }
                Ok(g)
            }
            NamedFamily::Path => {
                if !(1..=MAX_VERTICES).contains(&n) {
                    return Err(err());
                }
                let mut g = Graph::new(n)?;
                for v in 0..n.saturating_sub(1) {
                    g.add_edge(v, v + 1)?;
                }
                Ok(g)
            }
            NamedFamily::Complete => {
                if !(1..=MAX_VERTICES).contains(&n) {
                    return Err(err());
                }
                let mut g = Graph::new(n)?;
                for u in 0..n {
                    for v in (u + 1)..n {
                        g.add_edge(u, v)?;
                    }
                }
                Ok(g)
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

/// Parses the graph text format: first line `n <vertex-count>`, then one
/// `u v` edge per non-empty line with 0 <= u < v < n; duplicates rejected.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate();
    let (mut g, _) = loop {
        match lines.next() {
            None => {
                return Err(Error::GraphParse {
                    line: 1,
                    msg: "empty input, expected `n <vertex-count>`".into(),
                })
            }
            Some((i, raw)) => {
                let line = raw.trim();
                if line.is_empty() {
                    continue;
                }
                let mut it = line.split_whitespace();
                if it.next() != Some("n") {
                    return Err(Error::GraphParse {
                        line: i + 1,
                        msg: format!("expected `n <vertex-count>`, got {line:?}"),
                    });
                }
                let count: usize = it
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| Error::GraphParse {
                        line: i + 1,
                        msg: "missing or invalid vertex count".into(),
                    })?;
                if it.next().is_some() {
                    return Err(Error::GraphParse {
                        line: i + 1,
                        msg: "trailing tokens after vertex count".into(),
                    });
                }
                let g = Graph::new(count).map_err(|e| Error::GraphParse {
                    line: i + 1,
                    msg: e.to_string(),
                })?;
                break (g, count);
            }
        }
    };
    for (i, raw) in lines {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let parse_err = |msg: String| Error::GraphParse { line: i + 1, msg };
        if toks.len() != 2 {
            return Err(parse_err(format!("expected `u v`, got {line:?}")));
        }
        let u: usize = toks[0]
            .parse()
            .map_err(|_| parse_err(format!("invalid vertex {:?}", toks[0])))?;
        let v: usize = toks[1]
            .parse()
            .map_err(|_| parse_err(format!("invalid vertex {:?}", toks[1])))?;
        if !(u < v && v < g.vertex_count()) {
            return Err(parse_err(format!(
                "edge ({u}, {v}) violates 0 <= u < v < {}",
                g.vertex_count()
            )));
        }
        if g.has_edge(u, v) {
            return Err(parse_err(format!("duplicate edge ({u}, {v})")));
        }
        g.add_edge(u, v)
            .map_err(|e| parse_err(e.to_string()))?;
    }
    Ok(g)
}

/// Renders a graph in the text format accepted by [`parse_graph`].
pub fn render_graph(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.vertex_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

/// Vertex pairs (u, v) with u < v in the fixed edge-bit order used by the
/// enumerators.
pub fn vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            pairs.push((u, v));
        }
    }
    pairs
}

/// Graph for a given edge subset mask (bits in `vertex_pairs` order).
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::new(n).expect("validated by caller");
    for (bit, (u, v)) in vertex_pairs(n).into_iter().enumerate() {
        if mask & (1 << bit) != 0 {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

/// Number of labeled graphs on n vertices.
pub fn graph_count(n: usize) -> u64 {
    1u64 << (n * (n - 1) / 2)
}

/// All labeled graphs on n vertices (requires n <= 7).
pub fn all_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if !(1..=MAX_VERTICES).contains(&n) {
        return Err(Error::BadVertexCount(n));
    }
    if n > 7 {
        return Err(Error::ExhaustiveTooLarge(n));
    }
    Ok((0..graph_count(n)).map(move |mask| graph_from_mask(n, mask)))
}

/// A seeded uniform sample of labeled graphs on n vertices. Deterministic
/// given the seed.
pub fn sample_graphs(n: usize, count: usize, seed: u64) -> Result<impl Iterator<Item = Graph>> {
    if !(1..=MAX_VERTICES).contains(&n) {
        return Err(Error::BadVertexCount(n));
    }
    let bits = n * (n - 1) / 2;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..count).map(move |_| {
        let mask: u64 = rng.random::<u64>() & ((1u64 << bits) - 1);
        graph_from_mask(n, mask)
    }))
}

/// Families exposed by the `enumerate` CLI command.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFamily {
    Cf,
    ChordalComplement,
    CycleComplement,
    All,
}

impl GraphFamily {
    pub fn parse(s: &str) -> Result<GraphFamily> {
        match s {
            "cf" => Ok(GraphFamily::Cf),
            "chordal-complement" => Ok(GraphFamily::ChordalComplement),
            "cycle-complement" => Ok(GraphFamily::CycleComplement),
            "all" => Ok(GraphFamily::All),
            _ => Err(Error::InvalidInput(format!("unknown family {s:?}"))),
        }
    }

    /// Enumerates the family members on n vertices.
    pub fn members(&self, n: usize) -> Result<Vec<Graph>> {
        match self {
            GraphFamily::CycleComplement => {
                Ok(vec![NamedFamily::ComplementOfCycle.build(n)?])
            }
            GraphFamily::All => Ok(all_graphs(n)?.collect()),
            GraphFamily::Cf => Ok(all_graphs(n)?.filter(|g| g.in_cf_family()).collect()),
            GraphFamily::ChordalComplement => {
                Ok(all_graphs(n)?.filter(|g| g.complement().is_chordal()).collect())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Brute-force chordality oracle: searches for an induced cycle of
    /// length > 3 over all vertex subsets.
    fn chordal_by_brute_force(g: &Graph) -> bool {
        let n = g.vertex_count();
        for mask in 0u16..(1 << n) {
            if mask.count_ones() < 4 {
                continue;
            }
            let h = g.induced_subgraph(mask).unwrap();
            let k = h.vertex_count();
            let cycle = h.edge_count() == k
                && (0..k).all(|v| h.degree(v) == 2)
                && h.is_connected();
            if cycle {
                return false;
            }
        }
        true
    }

    #[test]
    fn complement_examples() {
        let k3 = NamedFamily::Complete.build(3).unwrap();
        assert_eq!(k3.complement().edge_count(), 0);

        let c4 = NamedFamily::Cycle.build(4).unwrap();
        let c = c4.complement();
        assert_eq!(c.edges(), vec![(0, 2), (1, 3)]);
    }

    #[test]
    fn induced_subgraph_examples() {
        let c5 = NamedFamily::Cycle.build(5).unwrap();
        let p = c5.induced_subgraph(0b00111).unwrap();
        assert_eq!(p.edges(), vec![(0, 1), (1, 2)]);

        let g = NamedFamily::Path.build(4).unwrap();
        assert_eq!(g.induced_subgraph(g.vertex_mask()).unwrap(), g);

        let p5 = NamedFamily::Path.build(5).unwrap();
        let h = p5.induced_subgraph(0b11011).unwrap();
        assert_eq!(h.edges(), vec![(0, 1), (2, 3)]);

        assert!(matches!(
            p5.induced_subgraph(0),
            Err(Error::EmptyVertexSet)
        ));
    }

    #[test]
    fn chordal_examples() {
        let tree = NamedFamily::Path.build(6).unwrap();
        assert!(tree.is_chordal());
        assert!(!NamedFamily::Cycle.build(5).unwrap().is_chordal());
        // C_4 plus a chord
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]).unwrap();
        assert!(g.is_chordal());
        assert!(chordal_by_brute_force(&g));
    }

    #[test]
    fn chordal_matches_brute_force_exhaustively() {
        for n in 1..=5 {
            for g in all_graphs(n).unwrap() {
                assert_eq!(
                    g.is_chordal(),
                    chordal_by_brute_force(&g),
                    "mismatch on {g:?}"
                );
            }
        }
    }

    #[test]
    fn induced_c4_examples() {
        assert!(NamedFamily::Cycle.build(4).unwrap().has_induced_c4());
        assert!(!NamedFamily::Complete.build(5).unwrap().has_induced_c4());
        let p5c = NamedFamily::Path.build(5).unwrap().complement();
        assert!(p5c.has_induced_c4());
    }

    #[test]
    fn claw_free_examples() {
        let claw = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!claw.is_claw_free());
        for n in [5, 6, 7] {
            assert!(NamedFamily::Cycle.build(n).unwrap().is_claw_free());
        }
        // max degree <= 2 can host no star center
        let p7 = NamedFamily::Path.build(7).unwrap();
        assert!(p7.is_claw_free());
    }

    #[test]
    fn cf_family_examples() {
        let c5c = NamedFamily::ComplementOfCycle.build(5).unwrap();
        assert!(c5c.in_cf_family());
        assert!(!NamedFamily::Path.build(5).unwrap().in_cf_family());
        assert!(NamedFamily::Complete.build(4).unwrap().in_cf_family());
    }

    #[test]
    fn dirac_order_examples() {
        let k4 = NamedFamily::Complete.build(4).unwrap();
        assert!(k4.dirac_order().is_ok());

        let g = NamedFamily::Path.build(4).unwrap().complement();
        let ord = g.dirac_order().unwrap();
        assert!(ord.satisfies_dirac_condition(&g));

        let c5c = NamedFamily::ComplementOfCycle.build(5).unwrap();
        assert!(matches!(c5c.dirac_order(), Err(Error::NoDiracOrder)));
    }

    #[test]
    fn dirac_order_exhaustive_small() {
        // Every graph with chordal complement admits a valid Dirac order;
        // cross-check against exhaustive search over all orders at n = 4.
        for g in all_graphs(4).unwrap() {
            let chordal_c = g.complement().is_chordal();
            match g.dirac_order() {
                Ok(ord) => {
                    assert!(chordal_c);
                    assert!(ord.satisfies_dirac_condition(&g));
                }
                Err(_) => {
                    assert!(!chordal_c);
                    // No order can work either.
                    let perms = [
                        [0u8, 1, 2, 3], [0, 1, 3, 2], [0, 2, 1, 3], [0, 2, 3, 1],
                        [0, 3, 1, 2], [0, 3, 2, 1], [1, 0, 2, 3], [1, 0, 3, 2],
                        [1, 2, 0, 3], [1, 2, 3, 0], [1, 3, 0, 2], [1, 3, 2, 0],
                        [2, 0, 1, 3], [2, 0, 3, 1], [2, 1, 0, 3], [2, 1, 3, 0],
                        [2, 3, 0, 1], [2, 3, 1, 0], [3, 0, 1, 2], [3, 0, 2, 1],
                        [3, 1, 0, 2], [3, 1, 2, 0], [3, 2, 0, 1], [3, 2, 1, 0],
                    ];
                    // Dirac orders exist iff G^c is chordal (Dirac), so for
                    // non-chordal complements every order must fail.
                    for p in perms {
                        let vo = VertexOrder { order: p.to_vec() };
                        assert!(!vo.satisfies_dirac_condition(&g), "{g:?} order {p:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(all_graphs(3).unwrap().count(), 8);
        // Connected graphs on 4 vertices whose complement has an induced C4:
        // the only 4-vertex graphs with induced 2K_2 are the three perfect
        // matchings, none connected.
        let count = all_graphs(4)
            .unwrap()
            .filter(|g| g.is_connected() && g.complement().has_induced_c4())
            .count();
        assert_eq!(count, 0);

        let cf5: Vec<Graph> = all_graphs(5)
            .unwrap()
            .filter(|g| g.in_cf_family() && g.edge_count() > 0)
            .collect();
        assert!(!cf5.is_empty());
        let c5c = NamedFamily::ComplementOfCycle.build(5).unwrap();
        assert!(cf5.contains(&c5c));

        assert!(all_graphs(8).is_err());
    }

    #[test]
    fn sampling_is_deterministic() {
        let a: Vec<Graph> = sample_graphs(6, 20, 42).unwrap().collect();
        let b: Vec<Graph> = sample_graphs(6, 20, 42).unwrap().collect();
        assert_eq!(a, b);
        let c: Vec<Graph> = sample_graphs(6, 20, 43).unwrap().collect();
        assert_ne!(a, c);
    }

    #[test]
    fn named_graphs() {
        assert_eq!(
            NamedFamily::Cycle.build(3).unwrap(),
            NamedFamily::Complete.build(3).unwrap()
        );
        let g = NamedFamily::ComplementOfCycle.build(4).unwrap();
        assert_eq!(g.edges(), vec![(0, 2), (1, 3)]);
        assert_eq!(NamedFamily::Path.build(2).unwrap().edges(), vec![(0, 1)]);
        assert!(NamedFamily::Cycle.build(2).is_err());
    }

    #[test]
    fn parse_and_render() {
        let g = parse_graph("n 4\n0 1\n2 3\n").unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (2, 3)]);
        assert_eq!(render_graph(&g), "n 4\n0 1\n2 3\n");

        // duplicate edge
        let err = parse_graph("n 3\n0 1\n0 1\n").unwrap_err();
        assert!(err.to_string().contains("line 3"));
        // u >= v
        assert!(parse_graph("n 3\n1 0\n").is_err());
        // vertex out of range
        assert!(parse_graph("n 3\n0 3\n").is_err());
        // bad header
        assert!(parse_graph("graph 3\n").is_err());
    }

    proptest! {
        #[test]
        fn complement_is_involution(mask in 0u64..32768, n in 2usize..7) {
            let g = graph_from_mask(n, mask & (graph_count(n) - 1));
            prop_assert_eq!(g.complement().complement(), g);
        }

        #[test]
        fn chordal_matches_oracle_on_random_6(mask in 0u64..32768) {
            let g = graph_from_mask(6, mask);
            prop_assert_eq!(g.is_chordal(), chordal_by_brute_force(&g));
        }

        #[test]
        fn dirac_postcondition_random_6(mask in 0u64..32768) {
            let g = graph_from_mask(6, mask);
            if g.complement().is_chordal() {
                let ord = g.dirac_order().unwrap();
                prop_assert!(ord.satisfies_dirac_condition(&g));
            } else {
                prop_assert!(g.dirac_order().is_err());
            }
        }

        #[test]
        fn cf_membership_consistency(mask in 0u64..32768) {
            let g = graph_from_mask(6, mask);
            if g.in_cf_family() {
                prop_assert!(!g.complement().has_induced_c4());
            }
        }
    }
}
