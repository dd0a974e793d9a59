//! The `compute` report shared by the CLI and the Python bindings.

use serde::Serialize;

use crate::betti::{betti_gpw_from_lattice, BettiEntry};
use crate::error::{Budgets, Result};
use crate::field::FieldSpec;
use crate::graph::Graph;
use crate::lattice::{check_graded_rank, LcmLattice};
use crate::monomial::MonomialIdeal;

#[derive(Clone, Debug, Serialize)]
pub struct ComputeReport {
    pub graph: GraphEcho,
    pub power: u32,
    pub budgets: BudgetsEcho,
    pub lattice: LatticeSummary,
    pub per_field: Vec<FieldReport>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BudgetsEcho {
    pub element_budget: usize,
    pub face_budget: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphEcho {
    pub n: usize,
    pub edges: Vec<(u8, u8)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LatticeSummary {
    pub elements: usize,
    pub pure: bool,
    pub rank_formula: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FieldReport {
    pub field: String,
    pub betti: Vec<BettiEntry>,
    pub regularity: u32,
}

/// Betti table, regularity and lattice shape of I(G)^power over each field.
pub fn compute_report(
    g: &Graph,
    power: u32,
    fields: &[FieldSpec],
    budgets: &Budgets,
) -> Result<ComputeReport> {
    let ideal = MonomialIdeal::edge_ideal(g)?.power(power)?;
    let lat = LcmLattice::build(&ideal, budgets)?;
    let graded = check_graded_rank(&lat, power);
    let mut per_field = Vec::with_capacity(fields.len());
    for &field in fields {
        let table = betti_gpw_from_lattice(&lat, field, budgets)?;
        per_field.push(FieldReport {
            field: field.name(),
            regularity: table.regularity(),
            betti: table.sorted_entries(),
        });
    }
    Ok(ComputeReport {
        graph: GraphEcho {
            n: g.vertex_count(),
            edges: g.edges(),
        },
        power,
        budgets: BudgetsEcho {
            element_budget: budgets.max_lattice_elements,
            face_budget: budgets.max_faces,
        },
        lattice: LatticeSummary {
            elements: lat.len(),
            pure: graded.pure,
            rank_formula: graded.rank_formula_holds,
        },
        per_field,
    })
}

/// Debug dump of the lcm-lattice: element exponent vectors with degrees, in
/// the lattice's (degree, exponent) order.
#[derive(Clone, Debug, Serialize)]
pub struct LatticeDump {
    pub power: u32,
    pub elements: Vec<LatticeElement>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LatticeElement {
    pub exps: Vec<u8>,
    pub degree: u32,
}

pub fn lattice_dump(g: &Graph, power: u32, budgets: &Budgets) -> Result<LatticeDump> {
    let ideal = MonomialIdeal::edge_ideal(g)?.power(power)?;
    let lat = LcmLattice::build(&ideal, budgets)?;
    Ok(LatticeDump {
        power,
        elements: lat
            .elements()
            .iter()
            .map(|m| LatticeElement {
                exps: m.exps(),
                degree: m.degree(),
            })
            .collect(),
    })
}

/// Flat CSV projection of the Betti tables: one row per table entry.
pub fn compute_report_csv(report: &ComputeReport) -> String {
    let mut out = String::from("field,i,degree,multidegree,rank\n");
    for fr in &report.per_field {
        for e in &fr.betti {
            let degree: u32 = e.multidegree.iter().map(|&x| x as u32).sum();
            let rendered = crate::monomial::Monomial::from_exps(&e.multidegree)
                .expect("multidegree came from a monomial")
                .render();
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                fr.field, e.i, degree, rendered, e.rank
            ));
        }
    }
    out
}
