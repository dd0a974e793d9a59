//! Theorem-level verification harness.
//!
//! Each check runs a claim over a graph family, re-deriving the family
//! filter from the graph predicates (the hypotheses are part of the check),
//! and produces a structured report with witnesses for any failure. The
//! checked statements are theorems, so a failure is a bug in the
//! implementation, never in the family.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::betti::betti_gpw_from_lattice;
use crate::complex::{clique_complex, order_complex};
use crate::error::{Budgets, Error, Result};
use crate::field::FieldSpec;
use crate::graph::{
    graph_count, graph_from_mask, sample_graphs, Graph, NamedFamily,
};
use crate::homology::{is_cohen_macaulay, poset_alpha, poset_betti, reduced_betti, CmWitness};
use crate::lattice::{check_graded, check_graded_rank, LcmLattice, PurityWitness};
use crate::monomial::{Monomial, MonomialIdeal};

pub const CHECK_IDS: &[&str] = &[
    "purity",
    "chordal",
    "froberg",
    "cycle-sphere",
    "lcm-hochster",
    "cf-reg",
    "square-power",
    "genphan",
    "li-bound",
    "cf-lemmas",
];

/// Parameters shared by all checks; each check reads the parts it uses and
/// echoes them into its report.
#[derive(Clone, Debug)]
pub struct CheckConfig {
    /// Sizes to run. Most checks use the maximum as n_max; cycle-sphere runs
    /// one instance per listed n.
    pub n_list: Vec<u32>,
    /// When set, enumeration is exhaustive through n = 5 and switches to
    /// this many seeded samples for n >= 6.
    pub samples: Option<u32>,
    pub seed: u64,
    /// Power of the edge ideal for the purity check.
    pub k: u32,
    /// Largest degree restriction for the li-bound check.
    pub i_max: u32,
    /// Overrides the per-check field defaults.
    pub fields: Option<Vec<FieldSpec>>,
    /// Extra named instances (square-power) beyond the exhaustive family.
    pub extras: Vec<(NamedFamily, u32)>,
    pub budgets: Budgets,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            n_list: vec![5],
            samples: None,
            seed: 0,
            k: 1,
            i_max: 4,
            fields: None,
            extras: Vec::new(),
            budgets: Budgets::default(),
        }
    }
}

impl CheckConfig {
    fn n_max(&self) -> u32 {
        self.n_list.iter().copied().max().unwrap_or(0)
    }

    fn fields_or(&self, default: &[FieldSpec]) -> Vec<FieldSpec> {
        self.fields.clone().unwrap_or_else(|| default.to_vec())
    }

    fn params_echo(&self) -> serde_json::Value {
        json!({
            "n": self.n_list,
            "samples": self.samples,
            "seed": self.seed,
            "k": self.k,
            "i_max": self.i_max,
            "extras": self.extras.iter()
                .map(|(f, n)| format!("{}:{n}", f.name()))
                .collect::<Vec<_>>(),
            "element_budget": self.budgets.max_lattice_elements,
            "face_budget": self.budgets.max_faces,
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub graph: Vec<(u8, u8)>,
    pub parameters: serde_json::Value,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Skipped {
    pub graph: Vec<(u8, u8)>,
    pub reason: String,
}

/// Structured outcome of one verification check.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub check_id: String,
    pub params: serde_json::Value,
    pub fields: Vec<String>,
    pub instances_run: u64,
    pub vacuous_count: u64,
    pub skipped: Vec<Skipped>,
    pub failures: Vec<Failure>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Per-instance outcome, merged deterministically in enumeration order.
#[derive(Default)]
struct Instance {
    ran: u64,
    vacuous: u64,
    skipped: Vec<Skipped>,
    failures: Vec<Failure>,
}

impl Instance {
    fn not_in_family() -> Instance {
        Instance::default()
    }

    fn skip(g: &Graph, reason: impl Into<String>) -> Instance {
        Instance {
            ran: 0,
            vacuous: 0,
            skipped: vec![Skipped {
                graph: g.edges(),
                reason: reason.into(),
            }],
            failures: Vec::new(),
        }
    }
}

struct ReportBuilder {
    check_id: &'static str,
    params: serde_json::Value,
    fields: Vec<FieldSpec>,
    instances_run: u64,
    vacuous_count: u64,
    skipped: Vec<Skipped>,
    failures: Vec<Failure>,
    started: Instant,
}

impl ReportBuilder {
    fn new(check_id: &'static str, cfg: &CheckConfig, fields: Vec<FieldSpec>) -> ReportBuilder {
        ReportBuilder {
            check_id,
            params: cfg.params_echo(),
            fields,
            instances_run: 0,
            vacuous_count: 0,
            skipped: Vec::new(),
            failures: Vec::new(),
            started: Instant::now(),
        }
    }

    fn absorb(&mut self, inst: Instance) {
        self.instances_run += inst.ran;
        self.vacuous_count += inst.vacuous;
        self.skipped.extend(inst.skipped);
        self.failures.extend(inst.failures);
    }

    fn finish(self) -> VerificationReport {
        VerificationReport {
            check_id: self.check_id.to_string(),
            params: self.params,
            fields: self.fields.iter().map(FieldSpec::name).collect(),
            instances_run: self.instances_run,
            vacuous_count: self.vacuous_count,
            skipped: self.skipped,
            failures: self.failures,
            elapsed_ms: self.started.elapsed().as_millis() as u64,
        }
    }
}

/// Runs `check` over every graph of the configured family sizes: exhaustive
/// enumeration, switching to seeded samples at n >= 6 when configured.
/// Results are merged in enumeration order regardless of thread count.
fn run_over_graphs(
    cfg: &CheckConfig,
    n_max: u32,
    builder: &mut ReportBuilder,
    check: impl Fn(&Graph) -> Result<Instance> + Sync,
) -> Result<()> {
    for n in 1..=n_max as usize {
        let sampled = cfg.samples.filter(|_| n >= 6);
        let results: Vec<Result<Instance>> = match sampled {
            None => {
                if n > 7 {
                    return Err(Error::ExhaustiveTooLarge(n));
                }
                (0..graph_count(n))
                    .into_par_iter()
                    .map(|mask| check(&graph_from_mask(n, mask)))
                    .collect()
            }
            Some(count) => {
                let graphs: Vec<Graph> = sample_graphs(n, count as usize, cfg.seed)?.collect();
                graphs.par_iter().map(&check).collect()
            }
        };
        for r in results {
            builder.absorb(r?);
        }
    }
    Ok(())
}

fn require_n_max(cfg: &CheckConfig, cap: u32) -> Result<u32> {
    let n_max = cfg.n_max();
    if n_max > cap && cfg.samples.is_none() {
        return Err(Error::InvalidInput(format!(
            "n_max {n_max} exceeds the exhaustive cap {cap} for this check"
        )));
    }
    Ok(n_max)
}

// ---------------------------------------------------------------------------
// purity
// ---------------------------------------------------------------------------

/// Graphs without an induced C4 in the complement pass the graded-rank
/// check on L(I(G)^k); connected graphs with one are not pure.
pub fn verify_purity(cfg: &CheckConfig) -> Result<VerificationReport> {
    let n_max = require_n_max(cfg, 6)?;
    if !(1..=2).contains(&cfg.k) {
        return Err(Error::InvalidInput("purity requires k in {1, 2}".into()));
    }
    let mut rb = ReportBuilder::new("purity", cfg, Vec::new());
    run_over_graphs(cfg, n_max, &mut rb, |g| {
        if g.edge_count() == 0 {
            return Ok(Instance::not_in_family());
        }
        let ideal = MonomialIdeal::edge_ideal(g)?.power(cfg.k)?;
        let lat = LcmLattice::build(&ideal, &cfg.budgets)?;
        let report = check_graded_rank(&lat, cfg.k);
        let mut inst = Instance {
            ran: 1,
            ..Default::default()
        };
        if !g.complement().has_induced_c4() {
            if !(report.pure && report.rank_formula_holds) {
                inst.failures.push(Failure {
                    graph: g.edges(),
                    parameters: json!({ "k": cfg.k }),
                    expected: "pure lattice with rank(m) = deg(m) - 2k + 1".into(),
                    actual: describe_purity_witness(&report.witness),
                });
            }
        } else if g.is_connected() {
            if report.pure {
                inst.failures.push(Failure {
                    graph: g.edges(),
                    parameters: json!({ "k": cfg.k }),
                    expected: "not pure (connected, induced C4 in complement)".into(),
                    actual: "pure".into(),
                });
            }
        } else {
            // no claim for disconnected graphs with an induced C4 complement
            inst.ran = 0;
            inst.vacuous = 1;
        }
        Ok(inst)
    })?;
    Ok(rb.finish())
}

fn describe_purity_witness(w: &Option<PurityWitness>) -> String {
    match w {
        None => "check passed".into(),
        Some(PurityWitness::BadAtom {
            atom,
            expected_degree,
        }) => format!("atom {atom} has degree != {expected_degree}"),
        Some(PurityWitness::BadCover { lower, upper }) => {
            format!("cover {lower} < {upper} skips a degree")
        }
        Some(PurityWitness::UnequalChains { short, long }) => format!(
            "maximal chains of lengths {} and {}",
            short.len() - 1,
            long.len() - 1
        ),
    }
}

// ---------------------------------------------------------------------------
// chordal
// ---------------------------------------------------------------------------

/// For G with chordal complement: the order complex of (1, m_G) is
/// Cohen-Macaulay and reg(I(G)) = 2.
pub fn verify_chordal(cfg: &CheckConfig) -> Result<VerificationReport> {
    let n_max = require_n_max(cfg, 6)?;
    let fields = cfg.fields_or(&[FieldSpec::Rationals, FieldSpec::F2]);
    let mut rb = ReportBuilder::new("chordal", cfg, fields.clone());
    run_over_graphs(cfg, n_max, &mut rb, |g| {
        if g.edge_count() == 0 || !g.complement().is_chordal() {
            return Ok(Instance::not_in_family());
        }
        let ideal = MonomialIdeal::edge_ideal(g)?;
        let lat = LcmLattice::build(&ideal, &cfg.budgets)?;
        let interval = lat.open_interval(&lat.unit(), &lat.top())?;
        let complex = order_complex(&interval, &cfg.budgets)?;
        let mut inst = Instance {
            ran: 1,
            ..Default::default()
        };
        for &field in &fields {
            let cm = is_cohen_macaulay(&complex, field)?;
            if !cm.cm {
                inst.failures.push(Failure {
                    graph: g.edges(),
                    parameters: json!({ "field": field.name() }),
                    expected: "Cohen-Macaulay order complex of (1, m_G)".into(),
                    actual: describe_cm_witness(&cm.witness),
                });
            }
            let reg = betti_gpw_from_lattice(&lat, field, &cfg.budgets)?.regularity();
            if reg != 2 {
                inst.failures.push(Failure {
                    graph: g.edges(),
                    parameters: json!({ "field": field.name() }),
                    expected: "reg(I(G)) = 2".into(),
                    actual: format!("reg = {reg}"),
                });
            }
        }
        Ok(inst)
    })?;
    Ok(rb.finish())
}

fn describe_cm_witness(w: &Option<CmWitness>) -> String {
    match w {
        None => "check passed".into(),
        Some(CmWitness::NotPure { small_facet, large_facet }) => format!(
            "not pure: facets of sizes {} and {}",
            small_facet.len(),
            large_facet.len()
        ),
        Some(CmWitness::Homology { face, dim }) => {
            format!("link of {face:?} has homology in dimension {dim}")
        }
    }
}

// ---------------------------------------------------------------------------
// froberg
// ---------------------------------------------------------------------------

/// reg(I(G)) = 2 if and only if G^c is chordal, over every graph with edges.
pub fn verify_froberg(cfg: &CheckConfig) -> Result<VerificationReport> {
    let n_max = require_n_max(cfg, 6)?;
    let fields = cfg.fields_or(&[FieldSpec::F2]);
    let mut rb = ReportBuilder::new("froberg", cfg, fields.clone());
    run_over_graphs(cfg, n_max, &mut rb, |g| {
        if g.edge_count() == 0 {
            return Ok(Instance::not_in_family());
        }
        let chordal_c = g.complement().is_chordal();
        let ideal = MonomialIdeal::edge_ideal(g)?;
        let lat = LcmLattice::build(&ideal, &cfg.budgets)?;
        let mut inst = Instance {
            ran: 1,
            ..Default::default()
        };
        for &field in &fields {
            let reg = betti_gpw_from_lattice(&lat, field, &cfg.budgets)?.regularity();
            if (reg == 2) != chordal_c {
                inst.failures.push(Failure {
                    graph: g.edges(),
                    parameters: json!({ "field": field.name(), "chordal_complement": chordal_c }),
                    expected: "reg(I(G)) = 2 iff G^c chordal".into(),
                    actual: format!("reg = {reg}"),
                });
            }
        }
        Ok(inst)
    })?;
    Ok(rb.finish())
}

// ---------------------------------------------------------------------------
// cycle-sphere
// ---------------------------------------------------------------------------

/// For G the complement of an n-cycle, the order complex of (1, m_G) has the
/// homology of the (n-4)-sphere.
pub fn verify_cycle_sphere(cfg: &CheckConfig) -> Result<VerificationReport> {
    let fields = cfg.fields_or(&[
        FieldSpec::Rationals,
        FieldSpec::F2,
        FieldSpec::F3,
        FieldSpec::F5,
    ]);
    let mut rb = ReportBuilder::new("cycle-sphere", cfg, fields.clone());
    for &n in &cfg.n_list {
        if n < 4 {
            return Err(Error::BadFamilySize {
                family: "cycle-sphere".into(),
                n: n as usize,
            });
        }
        let g = NamedFamily::ComplementOfCycle.build(n as usize)?;
        let outcome = (|| -> Result<Instance> {
            let ideal = MonomialIdeal::edge_ideal(&g)?;
            let lat = LcmLattice::build(&ideal, &cfg.budgets)?;
            let interval = lat.open_interval(&lat.unit(), &lat.top())?;
            let mut inst = Instance {
                ran: 1,
                ..Default::default()
            };
            for &field in &fields {
                let betti = poset_betti(&interval, field, true, &cfg.budgets)?;
                let expected_dim = n as i32 - 4;
                let ok = betti.entries() == vec![(expected_dim, 1)];
                if !ok {
                    inst.failures.push(Failure {
                        graph: g.edges(),
                        parameters: json!({ "n": n, "field": field.name() }),
                        expected: format!("betti of S^{}", n - 4),
                        actual: format!("{:?}", betti.entries()),
                    });
                }
            }
            Ok(inst)
        })();
        match outcome {
            Ok(inst) => rb.absorb(inst),
            Err(e) if e.is_budget() => rb.absorb(Instance::skip(&g, e.to_string())),
            Err(e) => return Err(e),
        }
    }
    Ok(rb.finish())
}

// ---------------------------------------------------------------------------
// lcm-hochster
// ---------------------------------------------------------------------------

/// The clique complex of G^c and the order complex of (1, m_G) have the same
/// homology up to the dimension flip i -> n - 3 - i.
pub fn verify_lcm_hochster_duality(cfg: &CheckConfig) -> Result<VerificationReport> {
    let n_max = require_n_max(cfg, 7)?;
    let fields = cfg.fields_or(&[FieldSpec::Rationals, FieldSpec::F2]);
    let mut rb = ReportBuilder::new("lcm-hochster", cfg, fields.clone());
    run_over_graphs(cfg, n_max, &mut rb, |g| {
        if g.edge_count() == 0 || g.has_isolated_vertex() {
            return Ok(Instance::not_in_family());
        }
        let n = g.vertex_count() as i32;
        let ideal = MonomialIdeal::edge_ideal(g)?;
        let lat = LcmLattice::build(&ideal, &cfg.budgets)?;
        let interval = lat.open_interval(&lat.unit(), &lat.top())?;
        let clique = clique_complex(&g.complement());
        let mut inst = Instance {
            ran: 1,
            ..Default::default()
        };
        for &field in &fields {
            let lhs = reduced_betti(&clique, field);
            let rhs = poset_betti(&interval, field, true, &cfg.budgets)?;
            for i in -1..=(n - 2) {
                if lhs.get(i) != rhs.get(n - 3 - i) {
                    inst.failures.push(Failure {
                        graph: g.edges(),
                        parameters: json!({ "field": field.name(), "i": i }),
                        expected: format!(
                            "dim H~_{i}(clique(G^c)) = dim H~_{}(order((1,m_G)))",
                            n - 3 - i
                        ),
                        actual: format!("{} vs {}", lhs.get(i), rhs.get(n - 3 - i)),
                    });
                }
            }
        }
        Ok(inst)
    })?;
    Ok(rb.finish())
}

// ---------------------------------------------------------------------------
// cf-reg
// ---------------------------------------------------------------------------

/// For claw-free G without induced C4 in the complement: reg(I(G)) <= 3, and
/// reg = 3 exactly when G^c is not chordal. Regularity must also agree
/// across the configured fields.
pub fn verify_cf_regularity(cfg: &CheckConfig) -> Result<VerificationReport> {
    let n_max = require_n_max(cfg, 7)?;
    let fields = cfg.fields_or(&[FieldSpec::F2]);
    let mut rb = ReportBuilder::new("cf-reg", cfg, fields.clone());
    run_over_graphs(cfg, n_max, &mut rb, |g| {
        if g.edge_count() == 0 || !g.in_cf_family() {
            return Ok(Instance::not_in_family());
        }
        let ideal = MonomialIdeal::edge_ideal(g)?;
        let lat = LcmLattice::build(&ideal, &cfg.budgets)?;
        let regs: Vec<u32> = fields
            .iter()
            .map(|&f| Ok(betti_gpw_from_lattice(&lat, f, &cfg.budgets)?.regularity()))
            .collect::<Result<_>>()?;
        let mut inst = Instance {
            ran: 1,
            ..Default::default()
        };
        let fail = |expected: &str, actual: String| Failure {
            graph: g.edges(),
            parameters: json!({ "fields": fields.iter().map(FieldSpec::name).collect::<Vec<_>>() }),
            expected: expected.into(),
            actual,
        };
        if regs.windows(2).any(|w| w[0] != w[1]) {
            inst.failures
                .push(fail("regularity independent of the field", format!("{regs:?}")));
            return Ok(inst);
        }
        let reg = regs[0];
        let chordal_c = g.complement().is_chordal();
        if reg > 3 {
            inst.failures.push(fail("reg(I(G)) <= 3", format!("reg = {reg}")));
        }
        if (reg == 3) != !chordal_c || (reg == 2) != chordal_c {
            inst.failures.push(fail(
                "reg = 3 iff G^c not chordal; reg = 2 iff chordal",
                format!("reg = {reg}, chordal(G^c) = {chordal_c}"),
            ));
        }
        Ok(inst)
    })?;
    Ok(rb.finish())
}

// ---------------------------------------------------------------------------
// square-power
// ---------------------------------------------------------------------------

/// reg(I(G)^2) = 4 for G in the claw-free / no-C4-in-complement family.
/// Budget-exceeded instances are listed as skipped, not failed. The report
/// covers exactly the configured range; the underlying claim is for the
/// whole family.
pub fn verify_square_power(cfg: &CheckConfig) -> Result<VerificationReport> {
    let n_max = require_n_max(cfg, 6)?;
    let fields = cfg.fields_or(&[FieldSpec::F2]);
    let mut rb = ReportBuilder::new("square-power", cfg, fields.clone());
    let check = |g: &Graph| -> Result<Instance> {
        if g.edge_count() == 0 || !g.in_cf_family() {
            return Ok(Instance::not_in_family());
        }
        let run = |g: &Graph| -> Result<Instance> {
            let ideal = MonomialIdeal::edge_ideal(g)?.power(2)?;
            let lat = LcmLattice::build(&ideal, &cfg.budgets)?;
            let mut inst = Instance {
                ran: 1,
                ..Default::default()
            };
            for &field in &fields {
                let reg = betti_gpw_from_lattice(&lat, field, &cfg.budgets)?.regularity();
                if reg != 4 {
                    inst.failures.push(Failure {
                        graph: g.edges(),
                        parameters: json!({ "field": field.name() }),
                        expected: "reg(I(G)^2) = 4".into(),
                        actual: format!("reg = {reg}"),
                    });
                }
            }
            Ok(inst)
        };
        match run(g) {
            Err(e) if e.is_budget() => Ok(Instance::skip(g, e.to_string())),
            other => other,
        }
    };
    run_over_graphs(cfg, n_max, &mut rb, check)?;
    for &(family, n) in &cfg.extras {
        let g = family.build(n as usize)?;
        let inst = check(&g)?;
        if inst.ran == 0 && inst.skipped.is_empty() {
            rb.absorb(Instance::skip(&g, "extra instance not in the CF family"));
        } else {
            rb.absorb(inst);
        }
    }
    Ok(rb.finish())
}

// ---------------------------------------------------------------------------
// genphan
// ---------------------------------------------------------------------------

/// For M = I(G) with graded lattice and Q the ideal of its first-syzygy
/// multidegrees: reg(Q) <= max(3, reg(M)) and, per lattice element m of
/// L(Q), alpha((1,m) in L(Q)) <= max(0, alpha((1,m) in L(M)) - 1).
pub fn verify_genphan(cfg: &CheckConfig) -> Result<VerificationReport> {
    let n_max = require_n_max(cfg, 7)?;
    let fields = cfg.fields_or(&[FieldSpec::F2]);
    let mut rb = ReportBuilder::new("genphan", cfg, fields.clone());
    run_over_graphs(cfg, n_max, &mut rb, |g| {
        if g.edge_count() == 0 || g.complement().has_induced_c4() {
            return Ok(Instance::not_in_family());
        }
        let ideal = MonomialIdeal::edge_ideal(g)?;
        let lat_m = LcmLattice::build(&ideal, &cfg.budgets)?;
        let syzygy_degrees: Vec<Monomial> = lat_m
            .elements()
            .iter()
            .copied()
            .filter(|m| m.degree() == 3)
            .collect();
        if syzygy_degrees.is_empty() {
            return Ok(Instance::skip(g, "Q is empty: no degree-3 lattice elements"));
        }
        if !check_graded(&lat_m, 2).rank_formula_holds {
            return Ok(Instance::skip(g, "lattice of I(G) is not graded"));
        }
        let q = MonomialIdeal::from_gens(ideal.num_vars(), syzygy_degrees)?;
        let lat_q = LcmLattice::build(&q, &cfg.budgets)?;
        let poset_m = lat_m.as_poset();
        let poset_q = lat_q.as_poset();
        let unit = lat_m.unit();

        let mut inst = Instance {
            ran: 1,
            ..Default::default()
        };
        for &field in &fields {
            let reg_m = betti_gpw_from_lattice(&lat_m, field, &cfg.budgets)?.regularity();
            let reg_q = betti_gpw_from_lattice(&lat_q, field, &cfg.budgets)?.regularity();
            if reg_q > 3.max(reg_m) {
                inst.failures.push(Failure {
                    graph: g.edges(),
                    parameters: json!({ "field": field.name(), "reg_m": reg_m }),
                    expected: "reg(Q) <= max(s + 1, reg(M)) with s = 2".into(),
                    actual: format!("reg(Q) = {reg_q}"),
                });
            }
            for &m in lat_q.elements().iter().filter(|m| !m.is_unit()) {
                debug_assert!(lat_m.contains(&m));
                let alpha_q =
                    poset_alpha(&poset_q.strictly_between(&unit, &m), field, &cfg.budgets)?;
                let alpha_m =
                    poset_alpha(&poset_m.strictly_between(&unit, &m), field, &cfg.budgets)?;
                let bound = alpha_m.saturating_sub(1);
                if alpha_q > bound {
                    inst.failures.push(Failure {
                        graph: g.edges(),
                        parameters: json!({
                            "field": field.name(),
                            "m": m.render(),
                            "alpha_in_LM": alpha_m,
                        }),
                        expected: "alpha((1,m)_{L(Q)}) <= max(0, alpha((1,m)_{L(M)}) - 1)".into(),
                        actual: format!("alpha((1,m)_{{L(Q)}}) = {alpha_q}"),
                    });
                }
            }
        }
        Ok(inst)
    })?;
    Ok(rb.finish())
}

// ---------------------------------------------------------------------------
// li-bound
// ---------------------------------------------------------------------------

/// alpha of (1,m) restricted to degrees >= i is bounded by
/// max(0, alpha((1,m)) - i + 2) when G^c has no induced C4.
pub fn verify_li_bound(cfg: &CheckConfig) -> Result<VerificationReport> {
    let n_max = require_n_max(cfg, 7)?;
    if cfg.i_max < 2 {
        return Err(Error::InvalidInput("li-bound requires i_max >= 2".into()));
    }
    let fields = cfg.fields_or(&[FieldSpec::F2, FieldSpec::Rationals]);
    let mut rb = ReportBuilder::new("li-bound", cfg, fields.clone());
    run_over_graphs(cfg, n_max, &mut rb, |g| {
        if g.edge_count() == 0 || g.complement().has_induced_c4() {
            return Ok(Instance::not_in_family());
        }
        let ideal = MonomialIdeal::edge_ideal(g)?;
        let lat = LcmLattice::build(&ideal, &cfg.budgets)?;
        let poset = lat.as_poset();
        let unit = lat.unit();
        let mut inst = Instance {
            ran: 1,
            ..Default::default()
        };
        for &field in &fields {
            for &m in lat.elements().iter().filter(|m| !m.is_unit()) {
                let interval = poset.strictly_between(&unit, &m);
                let alpha_l = poset_alpha(&interval, field, &cfg.budgets)?;
                for i in 2..=cfg.i_max {
                    let restricted = interval.restrict(|z| z.degree() >= i);
                    let alpha_i = poset_alpha(&restricted, field, &cfg.budgets)?;
                    let bound = (alpha_l as i64 - i as i64 + 2).max(0) as u32;
                    if alpha_i > bound {
                        inst.failures.push(Failure {
                            graph: g.edges(),
                            parameters: json!({
                                "field": field.name(),
                                "m": m.render(),
                                "i": i,
                                "alpha_L": alpha_l,
                            }),
                            expected: "alpha((1,m)_{L_i}) <= max(0, alpha((1,m)_L) - i + 2)"
                                .into(),
                            actual: format!("alpha = {alpha_i}"),
                        });
                    }
                }
            }
        }
        Ok(inst)
    })?;
    Ok(rb.finish())
}

// ---------------------------------------------------------------------------
// cf-lemmas
// ---------------------------------------------------------------------------

/// Three structural lemmas about L(I(G)^2) for G in the CF family:
/// (a) for squarefree m, (1,m] in L^2 equals (1,m] in the degree->=4
///     restriction of L(I(G));
/// (b) alpha((1,m)) <= alpha((1,m) restricted to non-square-atom joins);
/// (c) for x of shape a^2b^2c or a^2b^2c^2 in (1,m)_{not2} and y in
///     (x,m)_{not2}: y/a lies in (x/a, m)_{not2}.
///
/// The family hypothesis G in CF is applied throughout, matching the
/// enclosing assumptions of the source statements.
pub fn verify_cf_lemmas(cfg: &CheckConfig) -> Result<VerificationReport> {
    let n_max = require_n_max(cfg, 6)?;
    let fields = cfg.fields_or(&[FieldSpec::F2, FieldSpec::Rationals]);
    let mut rb = ReportBuilder::new("cf-lemmas", cfg, fields.clone());
    run_over_graphs(cfg, n_max, &mut rb, |g| {
        if g.edge_count() == 0 || !g.in_cf_family() {
            return Ok(Instance::not_in_family());
        }
        let ideal = MonomialIdeal::edge_ideal(g)?;
        let square = ideal.power(2)?;
        let lat_l = LcmLattice::build(&ideal, &cfg.budgets)?;
        let lat_l2 = LcmLattice::build(&square, &cfg.budgets)?;
        let non_square = lat_l2.restrict_non_square()?;
        let poset_l2 = lat_l2.as_poset();
        let unit = lat_l2.unit();

        let mut inst = Instance {
            ran: 1,
            ..Default::default()
        };

        // (a) squarefree-part reduction
        for &m in lat_l2.elements().iter() {
            if m.is_unit() || !m.is_squarefree() {
                continue;
            }
            let in_l2: Vec<Monomial> = lat_l2
                .elements()
                .iter()
                .copied()
                .filter(|z| !z.is_unit() && z.divides(&m))
                .collect();
            let in_l4: Vec<Monomial> = lat_l
                .elements()
                .iter()
                .copied()
                .filter(|z| z.degree() >= 4 && z.divides(&m))
                .collect();
            if in_l2 != in_l4 {
                inst.failures.push(Failure {
                    graph: g.edges(),
                    parameters: json!({ "m": m.render(), "lemma": "sf-part" }),
                    expected: "(1,m] in L^2 equals (1,m] in L_4".into(),
                    actual: format!(
                        "L^2 side has {} elements, L_4 side has {}",
                        in_l2.len(),
                        in_l4.len()
                    ),
                });
            }
        }

        // (b) alpha((1,m)) <= alpha((1,m)_{not 2})
        for &m in lat_l2.elements().iter().filter(|m| !m.is_unit()) {
            let full = poset_l2.strictly_between(&unit, &m);
            let restricted = non_square.strictly_between(&unit, &m);
            for &field in &fields {
                let a_full = poset_alpha(&full, field, &cfg.budgets)?;
                let a_neg = poset_alpha(&restricted, field, &cfg.budgets)?;
                if a_full > a_neg {
                    inst.failures.push(Failure {
                        graph: g.edges(),
                        parameters: json!({
                            "m": m.render(),
                            "field": field.name(),
                            "lemma": "no-pure-square",
                        }),
                        expected: "alpha((1,m)) <= alpha((1,m)_{not2})".into(),
                        actual: format!("{a_full} > {a_neg}"),
                    });
                }
            }
        }

        // (c) prism lemma
        let mut prism_instances = 0u64;
        for &m in lat_l2.elements().iter().filter(|m| !m.is_unit()) {
            let interval_neg = non_square.strictly_between(&unit, &m);
            for &x in interval_neg.elems() {
                if !has_prism_shape(&x) {
                    continue;
                }
                for a in 0..x.num_vars() {
                    if x.exp(a) != 2 {
                        continue;
                    }
                    let x_over_a = x.quotient_by_variable(a)?;
                    for &y in interval_neg.elems() {
                        if !x.strictly_divides(&y) {
                            continue;
                        }
                        prism_instances += 1;
                        let y_over_a = y.quotient_by_variable(a)?;
                        let ok = non_square.contains(&y_over_a)
                            && x_over_a.strictly_divides(&y_over_a)
                            && y_over_a.strictly_divides(&m);
                        if !ok {
                            inst.failures.push(Failure {
                                graph: g.edges(),
                                parameters: json!({
                                    "m": m.render(),
                                    "x": x.render(),
                                    "a": a,
                                    "y": y.render(),
                                    "lemma": "prism",
                                }),
                                expected: "y/a in (x/a, m)_{not2}".into(),
                                actual: format!("y/a = {}", y_over_a.render()),
                            });
                        }
                    }
                }
            }
        }
        if prism_instances == 0 {
            inst.vacuous = 1;
        }
        Ok(inst)
    })?;
    Ok(rb.finish())
}

/// x = a^2 b^2 c or a^2 b^2 c^2 for distinct variables.
fn has_prism_shape(x: &Monomial) -> bool {
    let mut ones = 0;
    let mut twos = 0;
    for v in 0..x.num_vars() {
        match x.exp(v) {
            0 => {}
            1 => ones += 1,
            2 => twos += 1,
            _ => return false,
        }
    }
    (twos == 2 && ones == 1) || (twos == 3 && ones == 0)
}

// ---------------------------------------------------------------------------
// dispatch
// ---------------------------------------------------------------------------

pub fn run_check(check_id: &str, cfg: &CheckConfig) -> Result<VerificationReport> {
    match check_id {
        "purity" => verify_purity(cfg),
        "chordal" => verify_chordal(cfg),
        "froberg" => verify_froberg(cfg),
        "cycle-sphere" => verify_cycle_sphere(cfg),
        "lcm-hochster" => verify_lcm_hochster_duality(cfg),
        "cf-reg" => verify_cf_regularity(cfg),
        "square-power" => verify_square_power(cfg),
        "genphan" => verify_genphan(cfg),
        "li-bound" => verify_li_bound(cfg),
        "cf-lemmas" => verify_cf_lemmas(cfg),
        other => Err(Error::UnknownCheck(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(n: u32) -> CheckConfig {
        CheckConfig {
            n_list: vec![n],
            ..CheckConfig::default()
        }
    }

    #[test]
    fn purity_small() {
        let report = verify_purity(&cfg(4)).unwrap();
        assert!(report.passed(), "{:?}", report.failures.first());
        assert!(report.instances_run > 0);
        // The three perfect matchings on 4 vertices are the vacuous cases.
        assert_eq!(report.vacuous_count, 3);
    }

    #[test]
    fn purity_includes_p5_failure_branch() {
        let report = verify_purity(&cfg(5)).unwrap();
        assert!(report.passed(), "{:?}", report.failures.first());
        let report = verify_purity(&CheckConfig {
            n_list: vec![5],
            k: 2,
            ..CheckConfig::default()
        })
        .unwrap();
        assert!(report.passed(), "{:?}", report.failures.first());
    }

    #[test]
    fn chordal_small() {
        let report = verify_chordal(&cfg(4)).unwrap();
        assert!(report.passed(), "{:?}", report.failures.first());
        assert!(report.instances_run > 0);
    }

    #[test]
    fn froberg_small() {
        let report = verify_froberg(&cfg(5)).unwrap();
        assert!(report.passed(), "{:?}", report.failures.first());
        assert_eq!(report.instances_run, 1 + 7 + 63 + 1023);
    }

    #[test]
    fn cycle_sphere_small() {
        let report = verify_cycle_sphere(&CheckConfig {
            n_list: vec![4, 5, 6],
            ..CheckConfig::default()
        })
        .unwrap();
        assert!(report.passed(), "{:?}", report.failures.first());
        assert_eq!(report.instances_run, 3);
        assert!(verify_cycle_sphere(&cfg(3)).is_err());
    }

    #[test]
    fn lcm_hochster_small() {
        let report = verify_lcm_hochster_duality(&cfg(5)).unwrap();
        assert!(report.passed(), "{:?}", report.failures.first());
    }

    #[test]
    fn cf_reg_small() {
        let report = verify_cf_regularity(&cfg(5)).unwrap();
        assert!(report.passed(), "{:?}", report.failures.first());
    }

    #[test]
    fn square_power_small_with_extras() {
        let report = verify_square_power(&CheckConfig {
            n_list: vec![4],
            extras: vec![(NamedFamily::ComplementOfCycle, 5)],
            ..CheckConfig::default()
        })
        .unwrap();
        assert!(report.passed(), "{:?}", report.failures.first());
    }

    #[test]
    fn genphan_small() {
        let report = verify_genphan(&cfg(4)).unwrap();
        assert!(report.passed(), "{:?}", report.failures.first());
        // 2K_2-like graphs are skipped with empty Q only when they qualify;
        // the skip list may be empty at n = 4, so just check determinism.
        assert!(report.instances_run > 0);
    }

    #[test]
    fn li_bound_small() {
        let report = verify_li_bound(&CheckConfig {
            n_list: vec![4],
            i_max: 4,
            ..CheckConfig::default()
        })
        .unwrap();
        assert!(report.passed(), "{:?}", report.failures.first());
    }

    #[test]
    fn cf_lemmas_small() {
        let report = verify_cf_lemmas(&cfg(4)).unwrap();
        assert!(report.passed(), "{:?}", report.failures.first());
        assert!(report.instances_run > 0);
        // Single-edge graphs have only a square atom, so the prism lemma is
        // vacuous there and must be flagged as such.
        assert!(report.vacuous_count > 0);
        assert!(report.vacuous_count < report.instances_run);
    }

    #[test]
    fn unknown_check_rejected() {
        assert!(matches!(
            run_check("nope", &CheckConfig::default()),
            Err(Error::UnknownCheck(_))
        ));
    }

    #[test]
    fn reports_are_deterministic() {
        let c = CheckConfig {
            n_list: vec![6],
            samples: Some(20),
            seed: 7,
            ..CheckConfig::default()
        };
        let a = verify_froberg(&c).unwrap();
        let b = verify_froberg(&c).unwrap();
        assert_eq!(a.instances_run, b.instances_run);
        assert_eq!(
            serde_json::to_value(&a.failures).unwrap(),
            serde_json::to_value(&b.failures).unwrap()
        );
    }
}
