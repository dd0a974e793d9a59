//! lcm-lattices, their intervals, purity checks and restricted subposets.
//!
//! The element set of `L(I)` is the unit together with the lcm of every
//! nonempty subset of `G(I)`, computed here as the fixed point of pairwise
//! lcm closure. Restrictions and intervals are carried around as plain
//! monomial posets ordered by divisibility; monomials are 17-byte `Copy`
//! values so copying carriers is cheaper than sharing them.

use std::collections::{HashMap, HashSet};

use crate::error::{Budgets, Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};

/// The lcm-lattice of a monomial ideal.
///
/// Elements are sorted by (degree, packed exponents); index 0 is the unit
/// and the last index is the maximum m_I.
#[derive(Clone, Debug)]
pub struct LcmLattice {
    n_vars: usize,
    elements: Vec<Monomial>,
    index: HashMap<Monomial, u32>,
    atoms: Vec<u32>,
}

impl LcmLattice {
    /// Builds `L(ideal)` by pairwise-lcm closure of the generators.
    pub fn build(ideal: &MonomialIdeal, budgets: &Budgets) -> Result<LcmLattice> {
        let mut elems: Vec<Monomial> = ideal.gens().to_vec();
        let mut seen: HashSet<Monomial> = elems.iter().copied().collect();
        let mut i = 0;
        while i < elems.len() {
            for j in 0..i {
                let z = elems[i].lcm(&elems[j]);
                if seen.insert(z) {
                    elems.push(z);
                    if elems.len() >= budgets.max_lattice_elements {
                        return Err(Error::LatticeTooLarge {
                            budget: budgets.max_lattice_elements,
                        });
                    }
                }
            }
            i += 1;
        }
        elems.push(Monomial::unit(ideal.num_vars()));
        elems.sort_by_key(Monomial::degree_key);
        let index: HashMap<Monomial, u32> = elems
            .iter()
            .enumerate()
            .map(|(i, &m)| (m, i as u32))
            .collect();
        let atoms: Vec<u32> = ideal.gens().iter().map(|g| index[g]).collect();
        let lat = LcmLattice {
            n_vars: ideal.num_vars(),
            elements: elems,
            index,
            atoms,
        };
        debug_assert!(lat.atoms_are_minimal_elements());
        Ok(lat)
    }

    fn atoms_are_minimal_elements(&self) -> bool {
        // The atoms (covers of the unit) must be exactly the minimal
        // generators: nothing nonunit strictly divides a generator.
        self.atoms.iter().all(|&a| {
            let m = self.elements[a as usize];
            !self
                .elements
                .iter()
                .any(|x| !x.is_unit() && x.strictly_divides(&m))
        })
    }

    pub fn num_vars(&self) -> usize {
        self.n_vars
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> &[Monomial] {
        &self.elements
    }

    /// The minimum 1.
    pub fn unit(&self) -> Monomial {
        self.elements[0]
    }

    /// The maximum m_I = lcm of all generators.
    pub fn top(&self) -> Monomial {
        *self.elements.last().unwrap()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.index.contains_key(m)
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).map(|&i| i as usize)
    }

    /// Atoms of the lattice: the minimal generators.
    pub fn atoms(&self) -> Vec<Monomial> {
        self.atoms
            .iter()
            .map(|&i| self.elements[i as usize])
            .collect()
    }

    fn require_element(&self, m: &Monomial) -> Result<()> {
        if self.contains(m) {
            Ok(())
        } else {
            Err(Error::NotInLattice(m.render()))
        }
    }

    /// The whole lattice as a poset.
    pub fn as_poset(&self) -> Poset {
        Poset {
            elems: self.elements.clone(),
        }
    }

    /// Open interval (lo, hi): elements strictly between lo and hi.
    pub fn open_interval(&self, lo: &Monomial, hi: &Monomial) -> Result<Poset> {
        self.require_element(lo)?;
        self.require_element(hi)?;
        self.as_poset().open_interval(lo, hi)
    }

    /// Half-open interval (lo, hi].
    pub fn half_open_interval(&self, lo: &Monomial, hi: &Monomial) -> Result<Poset> {
        self.require_element(lo)?;
        self.require_element(hi)?;
        self.as_poset().half_open_interval(lo, hi)
    }

    /// Closed interval [lo, hi].
    pub fn closed_interval(&self, lo: &Monomial, hi: &Monomial) -> Result<Poset> {
        self.require_element(lo)?;
        self.require_element(hi)?;
        self.as_poset().closed_interval(lo, hi)
    }

    /// L_i: the restriction to monomials of degree at least i. The unit drops
    /// out automatically once i >= 1.
    pub fn restrict_degree_at_least(&self, i: u32) -> Poset {
        Poset {
            elems: self
                .elements
                .iter()
                .copied()
                .filter(|m| m.degree() >= i)
                .collect(),
        }
    }

    /// L_{not 2}: the restriction to joins of atoms that are not squares of
    /// edge monomials, i.e. not of the form (x_a x_b)^2. The unit is kept as
    /// the minimum; with no non-square atoms the carrier is just {1}.
    ///
    /// Requires a lattice built from the square of an edge ideal (all atoms
    /// of degree 4).
    pub fn restrict_non_square(&self) -> Result<Poset> {
        let atoms = self.atoms();
        if atoms.iter().any(|a| a.degree() != 4) {
            return Err(Error::BadAtomDegree { expected: 4 });
        }
        let non_square: Vec<Monomial> =
            atoms.into_iter().filter(|a| !is_square_atom(a)).collect();
        let mut elems: Vec<Monomial> = vec![Monomial::unit(self.n_vars)];
        if !non_square.is_empty() {
            let mut closure = non_square;
            let mut seen: HashSet<Monomial> = closure.iter().copied().collect();
            let mut i = 0;
            while i < closure.len() {
                for j in 0..i {
                    let z = closure[i].lcm(&closure[j]);
                    if seen.insert(z) {
                        closure.push(z);
                    }
                }
                i += 1;
            }
            elems.extend(closure);
        }
        let mut p = Poset { elems };
        p.normalize();
        debug_assert!(p.elems.iter().all(|m| self.contains(m)));
        Ok(p)
    }

    /// m_sf: the join of the squarefree atoms in (1, m], absent when no
    /// squarefree atom divides m.
    pub fn squarefree_join(&self, m: &Monomial) -> Result<Option<Monomial>> {
        self.join_of_atoms_below(m, |a| a.is_squarefree())
    }

    /// m_ns: the join of the non-square atoms dividing m, absent when none
    /// exists.
    pub fn non_square_join(&self, m: &Monomial) -> Result<Option<Monomial>> {
        self.join_of_atoms_below(m, |a| !is_square_atom(a))
    }

    fn join_of_atoms_below(
        &self,
        m: &Monomial,
        keep: impl Fn(&Monomial) -> bool,
    ) -> Result<Option<Monomial>> {
        self.require_element(m)?;
        if m.is_unit() {
            return Err(Error::UnitMonomial);
        }
        let mut join: Option<Monomial> = None;
        for a in self.atoms() {
            if keep(&a) && a.divides(m) {
                join = Some(match join {
                    None => a,
                    Some(j) => j.lcm(&a),
                });
            }
        }
        Ok(join)
    }

    /// Upper covers of every element, via a degree-ordered minimality scan.
    pub fn covers(&self) -> Vec<Vec<u32>> {
        let n = self.len();
        let mut covers = vec![Vec::new(); n];
        for (i, x) in self.elements.iter().enumerate() {
            let mut found: Vec<u32> = Vec::new();
            // Elements are degree-sorted, so candidates above x appear in
            // non-decreasing degree; y is a cover iff no earlier-found cover
            // divides it.
            for (j, y) in self.elements.iter().enumerate().skip(i + 1) {
                if x.strictly_divides(y)
                    && !found
                        .iter()
                        .any(|&c| self.elements[c as usize].strictly_divides(y))
                {
                    found.push(j as u32);
                }
            }
            covers[i] = found;
        }
        covers
    }
}

/// True for atoms of the form (x_a x_b)^2.
pub fn is_square_atom(m: &Monomial) -> bool {
    let mut twos = 0;
    for v in 0..m.num_vars() {
        match m.exp(v) {
            0 => {}
            2 => twos += 1,
            _ => return false,
        }
    }
    twos == 2
}

// ---------------------------------------------------------------------------
// Posets of monomials
// ---------------------------------------------------------------------------

/// A finite poset of monomials ordered by divisibility: an lcm-lattice, one
/// of its intervals, or a restriction such as L_i or L_{not 2}.
///
/// Elements are distinct and sorted by (degree, packed exponents), which is a
/// linear extension of divisibility.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    elems: Vec<Monomial>,
}

impl Poset {
    pub fn from_monomials(elems: Vec<Monomial>) -> Poset {
        let mut p = Poset { elems };
        p.normalize();
        p
    }

    pub fn empty() -> Poset {
        Poset { elems: Vec::new() }
    }

    fn normalize(&mut self) {
        self.elems.sort_by_key(Monomial::degree_key);
        self.elems.dedup();
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elems(&self) -> &[Monomial] {
        &self.elems
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.elems
            .binary_search_by_key(&m.degree_key(), Monomial::degree_key)
            .is_ok()
    }

    /// Restriction to a predicate on elements.
    pub fn restrict(&self, keep: impl Fn(&Monomial) -> bool) -> Poset {
        Poset {
            elems: self.elems.iter().copied().filter(|m| keep(m)).collect(),
        }
    }

    /// Elements strictly between lo and hi, with the precondition that both
    /// bounds are carrier members and lo strictly divides hi.
    pub fn open_interval(&self, lo: &Monomial, hi: &Monomial) -> Result<Poset> {
        if !self.contains(lo) {
            return Err(Error::NotInLattice(lo.render()));
        }
        if !self.contains(hi) {
            return Err(Error::NotInLattice(hi.render()));
        }
        if !lo.strictly_divides(hi) {
            return Err(Error::NotStrictDivisor {
                lo: lo.render(),
                hi: hi.render(),
            });
        }
        Ok(self.strictly_between(lo, hi))
    }

    /// (lo, hi]: like `open_interval` but keeping hi.
    pub fn half_open_interval(&self, lo: &Monomial, hi: &Monomial) -> Result<Poset> {
        let mut p = self.open_interval(lo, hi)?;
        p.elems.push(*hi);
        p.normalize();
        Ok(p)
    }

    /// [lo, hi]: closed interval.
    pub fn closed_interval(&self, lo: &Monomial, hi: &Monomial) -> Result<Poset> {
        let mut p = self.open_interval(lo, hi)?;
        p.elems.push(*lo);
        p.elems.push(*hi);
        p.normalize();
        Ok(p)
    }

    /// Carrier elements z with lo < z < hi, without membership preconditions
    /// on the bounds. Used for restricted intervals like (x/a, m) in a
    /// restriction that need not contain x/a.
    pub fn strictly_between(&self, lo: &Monomial, hi: &Monomial) -> Poset {
        self.restrict(|z| lo.strictly_divides(z) && z.strictly_divides(hi))
    }

    /// Longest chain size (number of elements in a maximum chain).
    pub fn height(&self) -> usize {
        let n = self.len();
        let mut best = vec![1usize; n];
        let mut overall = 0;
        for i in 0..n {
            for j in 0..i {
                if self.elems[j].strictly_divides(&self.elems[i]) && best[j] + 1 > best[i] {
                    best[i] = best[j] + 1;
                }
            }
            overall = overall.max(best[i]);
        }
        overall
    }
}

// ---------------------------------------------------------------------------
// Graded rank check
// ---------------------------------------------------------------------------

/// Outcome of the purity / rank-formula check on an lcm-lattice.
#[derive(Clone, Debug)]
pub struct GradedRankReport {
    /// All maximal chains of [1, m_I] have equal length.
    pub pure: bool,
    /// Atoms all have degree 2k and every cover above the unit raises the
    /// degree by exactly one; on a join-closed set this is the rank formula
    /// rank(m) = deg(m) - 2k + 1.
    pub rank_formula_holds: bool,
    pub witness: Option<PurityWitness>,
}

#[derive(Clone, Debug)]
pub enum PurityWitness {
    /// An atom of the wrong degree.
    BadAtom { atom: Monomial, expected_degree: u32 },
    /// A cover that skips a degree.
    BadCover { lower: Monomial, upper: Monomial },
    /// Two maximal chains of different lengths.
    UnequalChains {
        short: Vec<Monomial>,
        long: Vec<Monomial>,
    },
}

/// Checks purity of [1, m_I] and the rank formula for a lattice built from
/// the k-th power of an edge ideal (atom degree 2k).
pub fn check_graded_rank(lat: &LcmLattice, k: u32) -> GradedRankReport {
    check_graded(lat, 2 * k)
}

/// The same check with an arbitrary expected atom degree (the power of an
/// edge ideal has s = 2k; a general equigenerated ideal has s = deg of its
/// generators).
pub fn check_graded(lat: &LcmLattice, atom_degree: u32) -> GradedRankReport {
    let covers = lat.covers();
    let elements = lat.elements();
    let n = elements.len();

    let mut rank_formula_holds = true;
    let mut formula_witness: Option<PurityWitness> = None;

    for a in lat.atoms() {
        if a.degree() != atom_degree {
            rank_formula_holds = false;
            formula_witness = Some(PurityWitness::BadAtom {
                atom: a,
                expected_degree: atom_degree,
            });
            break;
        }
    }
    if rank_formula_holds {
        'outer: for i in 1..n {
            for &j in &covers[i] {
                let (x, y) = (elements[i], elements[j as usize]);
                if y.degree() != x.degree() + 1 {
                    rank_formula_holds = false;
                    formula_witness = Some(PurityWitness::BadCover { lower: x, upper: y });
                    break 'outer;
                }
            }
        }
    }

    // Purity by explicit chain-length comparison: maximal chains of [1, m_I]
    // are exactly the cover paths from the unit to the top.
    let top = n - 1;
    let mut longest = vec![0usize; n];
    let mut shortest = vec![usize::MAX; n];
    let mut long_parent = vec![usize::MAX; n];
    let mut short_parent = vec![usize::MAX; n];
    shortest[0] = 0;
    for i in 0..n {
        if shortest[i] == usize::MAX {
            continue;
        }
        for &j in &covers[i] {
            let j = j as usize;
            if longest[i] + 1 > longest[j] {
                longest[j] = longest[i] + 1;
                long_parent[j] = i;
            }
            if shortest[i] + 1 < shortest[j] {
                shortest[j] = shortest[i] + 1;
                short_parent[j] = i;
            }
        }
    }
    let pure = longest[top] == shortest[top];
    debug_assert!(!rank_formula_holds || pure, "rank formula must imply purity");

    // An impure lattice is witnessed by the two chains; a pure but ungraded
    // one by its offending atom or cover.
    let witness = if !pure {
        let chain_from = |parents: &[usize]| {
            let mut chain = vec![elements[top]];
            let mut cur = top;
            while parents[cur] != usize::MAX {
                cur = parents[cur];
                chain.push(elements[cur]);
            }
            chain.reverse();
            chain
        };
        Some(PurityWitness::UnequalChains {
            short: chain_from(&short_parent),
            long: chain_from(&long_parent),
        })
    } else {
        formula_witness
    };

    GradedRankReport {
        pure,
        rank_formula_holds,
        witness,
    }
}

// ---------------------------------------------------------------------------
// Syzygy ideal
// ---------------------------------------------------------------------------

/// The ideal Q generated by the degree-(s+1) elements of L(ideal): the
/// multidegrees of the first minimal syzygies of an equigenerated ideal
/// whose lattice is graded with rank(m) = deg(m) - s + 1.
pub fn syzygy_ideal(ideal: &MonomialIdeal, budgets: &Budgets) -> Result<MonomialIdeal> {
    let s = ideal
        .equigenerated_degree()
        .ok_or(Error::NotEquigenerated)?;
    let lat = LcmLattice::build(ideal, budgets)?;
    let gens: Vec<Monomial> = lat
        .elements()
        .iter()
        .copied()
        .filter(|m| m.degree() == s + 1)
        .collect();
    if gens.is_empty() {
        return Err(Error::NoSyzygyElements(s + 1));
    }
    let report = check_graded(&lat, s);
    if !report.rank_formula_holds {
        return Err(Error::NotGraded);
    }
    MonomialIdeal::from_gens(ideal.num_vars(), gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{all_graphs, Graph, NamedFamily};

    fn edge_ideal(g: &Graph) -> MonomialIdeal {
        MonomialIdeal::edge_ideal(g).unwrap()
    }

    fn build(ideal: &MonomialIdeal) -> LcmLattice {
        LcmLattice::build(ideal, &Budgets::default()).unwrap()
    }

    fn m(exps: &[u8]) -> Monomial {
        Monomial::from_exps(exps).unwrap()
    }

    /// Subset-lcm brute force: the oracle for lattice closure.
    fn brute_force_elements(ideal: &MonomialIdeal) -> Vec<Monomial> {
        let gens = ideal.gens();
        let mut set: HashSet<Monomial> = HashSet::new();
        set.insert(Monomial::unit(ideal.num_vars()));
        for mask in 1u32..(1 << gens.len()) {
            let mut join: Option<Monomial> = None;
            for (i, g) in gens.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    join = Some(match join {
                        None => *g,
                        Some(j) => j.lcm(g),
                    });
                }
            }
            set.insert(join.unwrap());
        }
        let mut v: Vec<Monomial> = set.into_iter().collect();
        v.sort_by_key(Monomial::degree_key);
        v
    }

    #[test]
    fn small_lattices() {
        let single = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let lat = build(&edge_ideal(&single));
        assert_eq!(lat.elements(), &[Monomial::unit(2), m(&[1, 1])]);

        let k3 = NamedFamily::Complete.build(3).unwrap();
        let lat = build(&edge_ideal(&k3));
        assert_eq!(lat.len(), 5);
        assert_eq!(lat.top(), m(&[1, 1, 1]));

        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let lat = build(&edge_ideal(&two_k2));
        assert_eq!(
            lat.elements(),
            &[
                Monomial::unit(4),
                m(&[1, 1, 0, 0]),
                m(&[0, 0, 1, 1]),
                m(&[1, 1, 1, 1])
            ]
        );
    }

    #[test]
    fn closure_matches_brute_force() {
        for n in 2..=5 {
            for g in all_graphs(n).unwrap() {
                if g.edge_count() == 0 {
                    continue;
                }
                let ideal = edge_ideal(&g);
                let lat = build(&ideal);
                assert_eq!(lat.elements(), &brute_force_elements(&ideal)[..]);
                assert!(lat.len() <= (1 << ideal.num_gens()) + 1);
            }
        }
    }

    #[test]
    fn closure_is_closed_under_lcm() {
        let g = NamedFamily::ComplementOfCycle.build(6).unwrap();
        let lat = build(&edge_ideal(&g).power(2).unwrap());
        for a in lat.elements() {
            for b in lat.elements() {
                assert!(lat.contains(&a.lcm(b)));
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let g = NamedFamily::Complete.build(6).unwrap();
        let tiny = Budgets {
            max_lattice_elements: 10,
            ..Budgets::default()
        };
        assert!(matches!(
            LcmLattice::build(&edge_ideal(&g), &tiny),
            Err(Error::LatticeTooLarge { .. })
        ));
    }

    #[test]
    fn open_interval_examples() {
        let k3 = NamedFamily::Complete.build(3).unwrap();
        let lat = build(&edge_ideal(&k3));
        let iv = lat
            .open_interval(&Monomial::unit(3), &m(&[1, 1, 1]))
            .unwrap();
        assert_eq!(iv.elems(), &[m(&[1, 1, 0]), m(&[1, 0, 1]), m(&[0, 1, 1])]);

        // (1, atom) is empty
        let iv = lat.open_interval(&Monomial::unit(3), &m(&[1, 1, 0])).unwrap();
        assert!(iv.is_empty());

        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let lat = build(&edge_ideal(&two_k2));
        let iv = lat
            .open_interval(&Monomial::unit(4), &m(&[1, 1, 1, 1]))
            .unwrap();
        assert_eq!(iv.len(), 2);

        assert!(lat
            .open_interval(&m(&[1, 1, 1, 1]), &Monomial::unit(4))
            .is_err());
        assert!(lat
            .open_interval(&m(&[1, 0, 0, 0]), &m(&[1, 1, 1, 1]))
            .is_err());
    }

    #[test]
    fn graded_rank_examples() {
        // G^c = C_5 (so G = complement of C_5): pure, formula holds
        let g = NamedFamily::ComplementOfCycle.build(5).unwrap();
        let rep = check_graded_rank(&build(&edge_ideal(&g)), 1);
        assert!(rep.pure && rep.rank_formula_holds);

        // P_5 is connected with an induced C4 in the complement: not pure
        let p5 = NamedFamily::Path.build(5).unwrap();
        let rep = check_graded_rank(&build(&edge_ideal(&p5)), 1);
        assert!(!rep.pure);
        assert!(!rep.rank_formula_holds);
        match rep.witness {
            Some(PurityWitness::BadCover { .. }) | Some(PurityWitness::UnequalChains { .. }) => {}
            w => panic!("unexpected witness {w:?}"),
        }

        // single edge: one maximal chain
        let single = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let rep = check_graded_rank(&build(&edge_ideal(&single)), 1);
        assert!(rep.pure && rep.rank_formula_holds);
    }

    #[test]
    fn p5_square_is_not_pure() {
        let p5 = NamedFamily::Path.build(5).unwrap();
        let rep = check_graded_rank(&build(&edge_ideal(&p5).power(2).unwrap()), 2);
        assert!(!rep.pure);
    }

    #[test]
    fn purity_witnesses_are_valid() {
        // Impure: the witness is a pair of genuine maximal chains of
        // different lengths.
        let p5 = NamedFamily::Path.build(5).unwrap();
        let lat = build(&edge_ideal(&p5));
        let covers = lat.covers();
        let rep = check_graded_rank(&lat, 1);
        assert!(!rep.pure);
        let Some(PurityWitness::UnequalChains { short, long }) = rep.witness else {
            panic!("expected a chain witness, got {:?}", rep.witness);
        };
        assert_ne!(short.len(), long.len());
        for chain in [&short, &long] {
            assert_eq!(chain.first(), Some(&lat.unit()));
            assert_eq!(chain.last(), Some(&lat.top()));
            for w in chain.windows(2) {
                let i = lat.index_of(&w[0]).unwrap();
                assert!(
                    covers[i].iter().any(|&j| lat.elements()[j as usize] == w[1]),
                    "{} is not covered by {}",
                    w[0],
                    w[1]
                );
            }
        }

        // Pure but checked against the wrong atom degree: BadAtom witness.
        let k3 = NamedFamily::Complete.build(3).unwrap();
        let rep = check_graded_rank(&build(&edge_ideal(&k3)), 2);
        assert!(rep.pure && !rep.rank_formula_holds);
        assert!(matches!(rep.witness, Some(PurityWitness::BadAtom { .. })));
    }

    #[test]
    fn restrict_degree_examples() {
        let k3 = NamedFamily::Complete.build(3).unwrap();
        let lat = build(&edge_ideal(&k3));
        assert_eq!(lat.restrict_degree_at_least(0).len(), lat.len());
        assert_eq!(lat.restrict_degree_at_least(3).elems(), &[m(&[1, 1, 1])]);

        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let lat = build(&edge_ideal(&two_k2));
        assert_eq!(
            lat.restrict_degree_at_least(4).elems(),
            &[m(&[1, 1, 1, 1])]
        );
    }

    #[test]
    fn restrict_non_square_examples() {
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let lat = build(&edge_ideal(&two_k2).power(2).unwrap());
        let p = lat.restrict_non_square().unwrap();
        assert_eq!(p.elems(), &[Monomial::unit(4), m(&[1, 1, 1, 1])]);

        let k3 = NamedFamily::Complete.build(3).unwrap();
        let lat = build(&edge_ideal(&k3).power(2).unwrap());
        let p = lat.restrict_non_square().unwrap();
        // {1} + 3 mixed atoms + their pairwise joins + the full join
        assert_eq!(p.len(), 8);
        assert!(p.contains(&m(&[2, 1, 1])));
        assert!(p.contains(&m(&[2, 2, 2])));
        assert!(!p.contains(&m(&[2, 2, 0])));

        let single = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let lat = build(&edge_ideal(&single).power(2).unwrap());
        let p = lat.restrict_non_square().unwrap();
        assert_eq!(p.elems(), &[Monomial::unit(2)]);

        // atoms of degree 2, not a square of an edge ideal
        let lat = build(&edge_ideal(&single));
        assert!(lat.restrict_non_square().is_err());
    }

    #[test]
    fn join_helpers() {
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let lat = build(&edge_ideal(&two_k2).power(2).unwrap());
        let sf = lat.squarefree_join(&m(&[1, 1, 1, 1])).unwrap();
        assert_eq!(sf, Some(m(&[1, 1, 1, 1])));

        let single = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let lat = build(&edge_ideal(&single).power(2).unwrap());
        assert_eq!(lat.squarefree_join(&m(&[2, 2])).unwrap(), None);
        assert_eq!(lat.non_square_join(&m(&[2, 2])).unwrap(), None);

        let k3 = NamedFamily::Complete.build(3).unwrap();
        let lat = build(&edge_ideal(&k3).power(2).unwrap());
        assert_eq!(
            lat.non_square_join(&m(&[2, 2, 2])).unwrap(),
            Some(m(&[2, 2, 2]))
        );
        assert!(lat.squarefree_join(&Monomial::unit(3)).is_err());
        assert!(lat.squarefree_join(&m(&[1, 0, 0])).is_err());
    }

    #[test]
    fn syzygy_ideal_examples() {
        let budgets = Budgets::default();
        let k3 = NamedFamily::Complete.build(3).unwrap();
        let q = syzygy_ideal(&edge_ideal(&k3), &budgets).unwrap();
        assert_eq!(q.gens(), &[m(&[1, 1, 1])]);

        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            syzygy_ideal(&edge_ideal(&two_k2), &budgets),
            Err(Error::NoSyzygyElements(3))
        ));

        let p3 = NamedFamily::Path.build(3).unwrap();
        let q = syzygy_ideal(&edge_ideal(&p3), &budgets).unwrap();
        assert_eq!(q.gens(), &[m(&[1, 1, 1])]);

        // P_5 has a non-graded lattice
        let p5 = NamedFamily::Path.build(5).unwrap();
        assert!(matches!(
            syzygy_ideal(&edge_ideal(&p5), &budgets),
            Err(Error::NotGraded)
        ));

        // non-equigenerated input
        let mixed =
            MonomialIdeal::from_gens(3, vec![m(&[1, 1, 0]), m(&[0, 0, 2]), m(&[0, 3, 0])])
                .unwrap();
        assert!(matches!(
            syzygy_ideal(&mixed, &budgets),
            Err(Error::NotEquigenerated)
        ));
    }

    #[test]
    fn poset_views() {
        let k3 = NamedFamily::Complete.build(3).unwrap();
        let lat = build(&edge_ideal(&k3));
        let p = lat.as_poset();
        assert_eq!(p.height(), 3); // 1 < edge < top

        let half = p
            .half_open_interval(&Monomial::unit(3), &m(&[1, 1, 1]))
            .unwrap();
        assert_eq!(half.len(), 4);
        let closed = p
            .closed_interval(&Monomial::unit(3), &m(&[1, 1, 1]))
            .unwrap();
        assert_eq!(closed.len(), 5);
    }

    #[test]
    fn poset_order_is_transitive_and_antisymmetric() {
        let g = NamedFamily::ComplementOfCycle.build(6).unwrap();
        let lat = build(&edge_ideal(&g));
        let p = lat.as_poset();
        let e = p.elems();
        for a in e {
            for b in e {
                if a.strictly_divides(b) {
                    assert!(!b.strictly_divides(a));
                }
                for c in e {
                    if a.strictly_divides(b) && b.strictly_divides(c) {
                        assert!(a.strictly_divides(c));
                    }
                }
            }
        }
    }
}
