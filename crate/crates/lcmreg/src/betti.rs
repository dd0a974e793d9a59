//! Multigraded Betti numbers via the lcm-lattice and via Hochster's formula,
//! regularity, and the alpha invariant.
//!
//! The lattice route: beta_{i,m} is the reduced homology of the order
//! complex of the open interval (1, m) in dimension i-1, and beta_{i,m} = 0
//! for m outside the lattice. Regularity is the largest deg(m) - i over
//! nonzero entries. The Hochster route computes the same table from induced
//! subcomplexes of the clique complex of the complement graph; the two are
//! compared entry-by-entry in the test suites.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::clique_complex;
use crate::error::{Budgets, Error, Result};
use crate::field::FieldSpec;
use crate::graph::Graph;
use crate::homology::{poset_betti, reduced_betti, BettiVector};
use crate::lattice::{LcmLattice, Poset};
use crate::monomial::{Monomial, MonomialIdeal};

/// Multigraded Betti table: (homological degree, multidegree) -> rank,
/// zero entries omitted.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BettiTable {
    entries: BTreeMap<(u32, Monomial), u64>,
}

impl BettiTable {
    pub fn new() -> BettiTable {
        BettiTable::default()
    }

    pub fn add(&mut self, i: u32, m: Monomial, rank: u64) {
        if rank > 0 {
            *self.entries.entry((i, m)).or_insert(0) += rank;
        }
    }

    pub fn get(&self, i: u32, m: &Monomial) -> u64 {
        self.entries.get(&(i, *m)).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &Monomial, u64)> {
        self.entries.iter().map(|(&(i, ref m), &r)| (i, m, r))
    }

    /// Graded Betti number beta_{i,d}: sum over multidegrees of degree d.
    pub fn graded(&self, i: u32, d: u32) -> u64 {
        self.entries
            .iter()
            .filter(|(&(j, ref m), _)| j == i && m.degree() == d)
            .map(|(_, &r)| r)
            .sum()
    }

    /// max over entries of deg(m) - i.
    pub fn regularity(&self) -> u32 {
        self.entries
            .keys()
            .map(|&(i, ref m)| m.degree() - i)
            .max()
            .expect("a nonempty ideal has beta_{0,m} entries")
    }

    /// Entries sorted by (total degree, homological degree, multidegree).
    pub fn sorted_entries(&self) -> Vec<BettiEntry> {
        let mut out: Vec<BettiEntry> = self
            .entries
            .iter()
            .map(|(&(i, ref m), &r)| BettiEntry {
                i,
                multidegree: m.exps(),
                rank: r,
            })
            .collect();
        out.sort_by(|a, b| {
            let da: u32 = a.multidegree.iter().map(|&e| e as u32).sum();
            let db: u32 = b.multidegree.iter().map(|&e| e as u32).sum();
            (da, a.i, &a.multidegree).cmp(&(db, b.i, &b.multidegree))
        });
        out
    }
}

/// One Betti table entry as rendered in reports.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct BettiEntry {
    pub i: u32,
    pub multidegree: Vec<u8>,
    pub rank: u64,
}

/// Betti numbers from lattice homology: for every m in L(I) above the unit,
/// entry (i, m) is the homology of the open interval (1, m) in dimension
/// i - 1.
pub fn betti_gpw(ideal: &MonomialIdeal, field: FieldSpec, budgets: &Budgets) -> Result<BettiTable> {
    let lat = LcmLattice::build(ideal, budgets)?;
    betti_gpw_from_lattice(&lat, field, budgets)
}

pub fn betti_gpw_from_lattice(
    lat: &LcmLattice,
    field: FieldSpec,
    budgets: &Budgets,
) -> Result<BettiTable> {
    let poset = lat.as_poset();
    let unit = lat.unit();
    let per_m: Vec<(Monomial, BettiVector)> = lat
        .elements()
        .par_iter()
        .filter(|m| !m.is_unit())
        .map(|&m| -> Result<(Monomial, BettiVector)> {
            let interval = poset.strictly_between(&unit, &m);
            let betti = poset_betti(&interval, field, true, budgets)
                .map_err(|e| annotate_budget_error(e, &m))?;
            Ok((m, betti))
        })
        .collect::<Result<_>>()?;

    let mut table = BettiTable::new();
    for (m, betti) in per_m {
        for (d, rank) in betti.entries() {
            // homological degree i = d + 1 >= 0
            table.add((d + 1) as u32, m, rank);
        }
    }
    Ok(table)
}

fn annotate_budget_error(e: Error, m: &Monomial) -> Error {
    match e {
        Error::FaceBudgetExceeded { budget } => Error::FaceBudgetExceededOnInterval {
            budget,
            multidegree: m.render(),
        },
        other => other,
    }
}

/// Betti numbers of I(G) from Hochster's formula applied to the clique
/// complex of the complement: the W-graded part in homological degree i is
/// the homology of the induced subcomplex on W in dimension |W| - i - 2.
pub fn betti_hochster(g: &Graph, field: FieldSpec) -> Result<BettiTable> {
    let n = g.vertex_count();
    if g.edge_count() == 0 {
        return Err(Error::EmptyIdeal);
    }
    let complex = clique_complex(&g.complement());
    let subsets: Vec<u16> = (1..(1u32 << n)).map(|w| w as u16).collect();
    let parts: Vec<(u16, BettiVector)> = subsets
        .par_iter()
        .map(|&w| {
            let verts: Vec<u16> = (0..n as u16).filter(|&v| w & (1 << v) != 0).collect();
            let sub = complex.induced_subcomplex(&verts);
            (w, reduced_betti(&sub, field))
        })
        .collect();

    let mut table = BettiTable::new();
    for (w, betti) in parts {
        let size = w.count_ones() as i32;
        let multidegree = Monomial::from_support(n, w);
        for (d, rank) in betti.entries() {
            let i = size - d - 2;
            if i >= 0 {
                table.add(i as u32, multidegree, rank);
            }
        }
    }
    Ok(table)
}

/// Castelnuovo-Mumford regularity of the ideal over the given field.
pub fn regularity(ideal: &MonomialIdeal, field: FieldSpec, budgets: &Budgets) -> Result<u32> {
    Ok(betti_gpw(ideal, field, budgets)?.regularity())
}

/// alpha of a restricted poset: alpha of its order complex.
pub fn alpha_poset(p: &Poset, field: FieldSpec, budgets: &Budgets) -> Result<u32> {
    crate::homology::poset_alpha(p, field, budgets)
}

/// alpha(M) = max over nonunit lattice elements of alpha((1, m)), for an
/// ideal equigenerated in degree r. Cross-checked against reg(M) = r +
/// alpha(M), which holds for ideals generated in a single degree.
pub fn alpha_ideal(ideal: &MonomialIdeal, field: FieldSpec, budgets: &Budgets) -> Result<u32> {
    let r = ideal
        .equigenerated_degree()
        .ok_or(Error::NotEquigenerated)?;
    let lat = LcmLattice::build(ideal, budgets)?;
    let poset = lat.as_poset();
    let unit = lat.unit();

    let per_m: Vec<(u32, u32)> = lat
        .elements()
        .par_iter()
        .filter(|m| !m.is_unit())
        .map(|&m| -> Result<(u32, u32)> {
            let interval = poset.strictly_between(&unit, &m);
            let dim = interval.height() as i32 - 1;
            let betti = poset_betti(&interval, field, true, budgets)?;
            let alpha = betti.alpha_with_dim(dim);
            let reg_contrib = betti
                .entries()
                .iter()
                .map(|&(d, _)| m.degree() - (d + 1) as u32)
                .max()
                .unwrap_or(0);
            Ok((alpha, reg_contrib))
        })
        .collect::<Result<_>>()?;

    let alpha = per_m.iter().map(|&(a, _)| a).max().unwrap_or(0);
    let reg = per_m.iter().map(|&(_, r)| r).max().unwrap_or(0);
    assert_eq!(
        r + alpha,
        reg,
        "reg(M) = r + alpha(M) must hold for equigenerated ideals"
    );
    Ok(alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{all_graphs, NamedFamily};

    fn b() -> Budgets {
        Budgets::default()
    }

    fn m(exps: &[u8]) -> Monomial {
        Monomial::from_exps(exps).unwrap()
    }

    fn edge_ideal(g: &Graph) -> MonomialIdeal {
        MonomialIdeal::edge_ideal(g).unwrap()
    }

    #[test]
    fn gpw_single_generator() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let t = betti_gpw(&edge_ideal(&g), FieldSpec::F2, &b()).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t.get(0, &m(&[1, 1])), 1);
    }

    #[test]
    fn gpw_two_disjoint_edges() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let t = betti_gpw(&edge_ideal(&g), FieldSpec::Rationals, &b()).unwrap();
        assert_eq!(t.get(0, &m(&[1, 1, 0, 0])), 1);
        assert_eq!(t.get(0, &m(&[0, 0, 1, 1])), 1);
        assert_eq!(t.get(1, &m(&[1, 1, 1, 1])), 1);
        assert_eq!(t.len(), 3);
    }

    #[test]
    fn gpw_triangle() {
        let g = NamedFamily::Complete.build(3).unwrap();
        let t = betti_gpw(&edge_ideal(&g), FieldSpec::F2, &b()).unwrap();
        assert_eq!(t.get(0, &m(&[1, 1, 0])), 1);
        assert_eq!(t.get(0, &m(&[1, 0, 1])), 1);
        assert_eq!(t.get(0, &m(&[0, 1, 1])), 1);
        assert_eq!(t.get(1, &m(&[1, 1, 1])), 2);
        assert_eq!(t.len(), 4);
    }

    #[test]
    fn hochster_examples() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let t = betti_hochster(&g, FieldSpec::F2).unwrap();
        assert_eq!(t.get(0, &m(&[1, 1])), 1);
        assert_eq!(t.len(), 1);

        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let t = betti_hochster(&g, FieldSpec::F2).unwrap();
        assert_eq!(t.get(1, &m(&[1, 1, 1, 1])), 1);
        assert_eq!(t.graded(1, 4), 1);

        let g = NamedFamily::Complete.build(3).unwrap();
        let t = betti_hochster(&g, FieldSpec::Rationals).unwrap();
        assert_eq!(t.graded(1, 3), 2);

        let edgeless = Graph::new(3).unwrap();
        assert!(betti_hochster(&edgeless, FieldSpec::F2).is_err());
    }

    #[test]
    fn gpw_equals_hochster_small() {
        for n in 2..=4 {
            for g in all_graphs(n).unwrap() {
                if g.edge_count() == 0 {
                    continue;
                }
                let ideal = edge_ideal(&g);
                for field in [FieldSpec::Rationals, FieldSpec::F2] {
                    let lhs = betti_gpw(&ideal, field, &b()).unwrap();
                    let rhs = betti_hochster(&g, field).unwrap();
                    assert_eq!(lhs, rhs, "graph {g:?} field {field:?}");
                }
            }
        }
    }

    #[test]
    fn regularity_examples() {
        // chordal complement: any tree complement, K_4, ... reg = 2
        let k4 = NamedFamily::Complete.build(4).unwrap();
        assert_eq!(regularity(&edge_ideal(&k4), FieldSpec::F2, &b()).unwrap(), 2);

        let c5c = NamedFamily::ComplementOfCycle.build(5).unwrap();
        let ideal = edge_ideal(&c5c);
        assert_eq!(regularity(&ideal, FieldSpec::F2, &b()).unwrap(), 3);
        assert_eq!(
            regularity(&ideal.power(2).unwrap(), FieldSpec::F2, &b()).unwrap(),
            4
        );

        // 2K_2: reg 3
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(regularity(&edge_ideal(&g), FieldSpec::F2, &b()).unwrap(), 3);
    }

    #[test]
    fn alpha_ideal_examples() {
        let k3 = NamedFamily::Complete.build(3).unwrap();
        assert_eq!(alpha_ideal(&edge_ideal(&k3), FieldSpec::F2, &b()).unwrap(), 0);

        let c5c = NamedFamily::ComplementOfCycle.build(5).unwrap();
        let ideal = edge_ideal(&c5c);
        assert_eq!(alpha_ideal(&ideal, FieldSpec::F2, &b()).unwrap(), 1);
        assert_eq!(
            alpha_ideal(&ideal.power(2).unwrap(), FieldSpec::F2, &b()).unwrap(),
            0
        );

        // non-equigenerated
        let mixed =
            MonomialIdeal::from_gens(3, vec![m(&[1, 1, 0]), m(&[0, 0, 3])]).unwrap();
        assert!(matches!(
            alpha_ideal(&mixed, FieldSpec::F2, &b()),
            Err(Error::NotEquigenerated)
        ));
    }

    #[test]
    fn alpha_poset_examples() {
        assert_eq!(alpha_poset(&Poset::empty(), FieldSpec::F2, &b()).unwrap(), 0);

        let c5c = NamedFamily::ComplementOfCycle.build(5).unwrap();
        let lat = LcmLattice::build(&edge_ideal(&c5c), &b()).unwrap();
        let interval = lat.open_interval(&lat.unit(), &lat.top()).unwrap();
        assert_eq!(alpha_poset(&interval, FieldSpec::F2, &b()).unwrap(), 1);

        // (1, m_G) restricted to degree >= 3
        let l3 = lat.restrict_degree_at_least(3);
        let restricted = l3.strictly_between(&lat.unit(), &lat.top());
        assert_eq!(alpha_poset(&restricted, FieldSpec::F2, &b()).unwrap(), 0);
    }

    #[test]
    fn regularity_monotone_under_induced_subgraphs() {
        let g = NamedFamily::ComplementOfCycle.build(6).unwrap();
        let reg_g = regularity(&edge_ideal(&g), FieldSpec::F2, &b()).unwrap();
        for mask in [0b011111u16, 0b111110, 0b101111] {
            let h = g.induced_subgraph(mask).unwrap();
            if h.edge_count() == 0 {
                continue;
            }
            let reg_h = regularity(&edge_ideal(&h), FieldSpec::F2, &b()).unwrap();
            assert!(reg_h <= reg_g);
        }
    }

    #[test]
    fn sorted_entries_are_deterministic() {
        let g = NamedFamily::Complete.build(3).unwrap();
        let t = betti_gpw(&edge_ideal(&g), FieldSpec::F2, &b()).unwrap();
        let e = t.sorted_entries();
        assert_eq!(e.len(), 4);
        assert_eq!(e[0].i, 0);
        assert_eq!(e[3].i, 1);
        assert_eq!(e[3].multidegree, vec![1, 1, 1]);
        assert_eq!(e[3].rank, 2);
    }
}
