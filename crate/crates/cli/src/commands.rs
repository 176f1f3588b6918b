//! One function per subcommand. Each returns a [`Record`]; solver budget
//! exhaustion is reported in-band through field statuses.

use anyhow::{bail, Result};
use stabctx_core::bell::{
    alternate_chsh_scenario, chsh_scenario, chsh_strategy_alpha, kcbs_scenario, peres_mermin,
    regularity_conjecture_check, ContextualityScenario,
};
use stabctx_core::budget::Budget;
use stabctx_core::clifford::{traceless_set, CliffordGroup};
use stabctx_core::graph::{cayley_graph, Graph};
use stabctx_core::invariants::{
    compute_report, count_induced_cycles, fractional_packing, independence_number, induced_odd_cycles, is_induced_cycle, lovasz_theta,
    CliqueOptions, CliqueResult, ColoringResult, Computed, CoverOptions, CoverResult, CycleSearch, InvariantReport,
    OddCycleOptions, OddCycleReport, PackingResult, ReportOptions, Status, ThetaOptions, ThetaResult,
};
use stabctx_core::iso::find_isomorphism;
use stabctx_core::linalg::{hermitian_eigen, DenseMatrix};
use stabctx_core::stabilizer::{
    enumerate_single, enumerate_two_qudit, partition_by_subspace, zero_weyl_phase_states, StateFamily,
};
use stabctx_core::{Error, PrimeDim};

use crate::build::orthogonality_graph_parallel;
use crate::config::{Family, GraphSource, RunConfig};
use crate::deadline::Deadline;
use crate::dimacs::write_dimacs;
use crate::output::{Field, Num, Record};

/// Largest `|family| * D^2` for which the projector sum is diagonalised.
const SIGMA_WORK_CAP: usize = 20_000_000;

fn deadline(cfg: &RunConfig) -> Deadline {
    Deadline::seconds(cfg.budget_seconds as f64)
}

fn base_record(command: &str, cfg: &RunConfig) -> Record {
    Record::new(command)
        .param("dimension", cfg.d())
        .param("budget_seconds", cfg.budget_seconds as i64)
        .param("tolerance", cfg.tolerance)
        .param("seed", cfg.seed as i64)
}

fn theta_options(cfg: &RunConfig) -> ThetaOptions {
    ThetaOptions {
        tol: cfg.tolerance,
        ..Default::default()
    }
}

pub fn clique_field(name: &str, r: &CliqueResult) -> Field {
    match r.status {
        Status::Exact => Field::exact(name, r.size),
        s => Field::new(name, r.size, s).bracket(r.size, r.upper),
    }
}

pub fn colouring_field(name: &str, r: &ColoringResult) -> Field {
    match r.status {
        Status::Exact => Field::exact(name, r.upper),
        s => Field::new(name, Num::Null, s).bracket(r.lower, r.upper),
    }
}

pub fn cover_field(name: &str, r: &CoverResult) -> Field {
    match r.status {
        Status::Exact => Field::exact(name, r.upper),
        s => Field::new(name, Num::Null, s).bracket(r.lower, r.upper),
    }
}

pub fn theta_field(name: &str, t: &Computed<ThetaResult>) -> Field {
    match t {
        Computed::Done(t) => Field::new(name, t.value, t.status).bracket(t.lower, t.upper),
        Computed::Bracket { lower, upper } => Field::new(name, Num::Null, Status::Bounded).bracket(*lower, *upper),
        Computed::Skipped(why) => Field::skipped(name, why.clone()),
    }
}

pub fn packing_field(name: &str, p: &Computed<PackingResult>) -> Field {
    match p {
        Computed::Done(p) => Field::exact(name, p.as_f64()).note(format!("= {}", p.value)),
        Computed::Bracket { lower, upper } => Field::new(name, Num::Null, Status::Bounded).bracket(*lower, *upper),
        Computed::Skipped(why) => Field::skipped(name, why.clone()),
    }
}

fn decided(name: &str, v: Option<bool>) -> Field {
    match v {
        Some(b) => Field::exact(name, b),
        None => Field::skipped(name, "undecided within budget"),
    }
}

fn theta_of(g: &Graph, cfg: &RunConfig) -> Result<Computed<ThetaResult>> {
    Ok(match lovasz_theta(g, &theta_options(cfg), &mut deadline(cfg)) {
        Ok(t) => Computed::Done(t),
        Err(Error::NoConvergence { lower, upper }) => Computed::Bracket { lower, upper },
        Err(Error::BudgetExceeded(why)) => Computed::Skipped(why),
        Err(e) => return Err(e.into()),
    })
}

pub fn enumerate_family(d: PrimeDim, family: Family) -> Result<StateFamily> {
    Ok(match family {
        Family::Single => enumerate_single(d),
        f => enumerate_two_qudit(d, f.kind())?,
    })
}

/// Enumerated family sizes against the closed forms.
pub fn cmd_counts(cfg: &RunConfig) -> Result<Record> {
    let mut rec = base_record("counts", cfg);
    for family in [Family::Sep, Family::Ent, Family::Tot] {
        let kind = family.kind();
        let expected = kind.expected_count(cfg.dimension);
        let name = kind.name();
        match enumerate_family(cfg.dimension, family) {
            Ok(f) => {
                rec.push(Field::exact(name, f.len()));
                rec.push(Field::exact(&format!("{name}_matches_formula"), f.len() == expected));
            }
            Err(e) => match e.downcast_ref::<Error>() {
                Some(Error::BudgetExceeded(why)) => {
                    rec.push(Field::skipped(name, why.clone()));
                }
                _ => return Err(e),
            },
        }
        rec.push(Field::exact(&format!("{name}_formula"), expected));
    }
    Ok(rec)
}

/// Verifies that the traceless set is closed under conjugation and that its
/// Cayley graph is edge-identical to `g`.
pub fn normal_cayley_holds(d: PrimeDim, g: &Graph) -> Result<bool> {
    let group = CliffordGroup::new(d);
    if group.len() != g.n() {
        return Ok(false);
    }
    let t = traceless_set(&group)?;
    let mut member = vec![false; group.len()];
    for &x in &t {
        member[x] = true;
    }
    let closed = (0..group.len()).all(|h| t.iter().all(|&x| member[group.conjugate(h, x)]));
    if !closed {
        return Ok(false);
    }
    Ok(cayley_graph(&group, &t)?.same_edges(g))
}

fn sigma_lambda_max(family: &StateFamily) -> Result<Option<f64>> {
    let dim = family.hilbert_dim();
    if family.len() * dim * dim > SIGMA_WORK_CAP {
        return Ok(None);
    }
    let mut sigma = DenseMatrix::zeros(dim);
    for s in &family.states {
        sigma.add_assign(&s.projector()?);
    }
    Ok(Some(hermitian_eigen(&sigma)?.max()))
}

fn report_fields(rec: &mut Record, g: &Graph, r: &InvariantReport, tol: f64) {
    rec.push(Field::exact("vertices", r.vertices));
    rec.push(Field::exact("edges", r.edges));
    rec.push(Field::exact("regular_degree", g.regular_degree()));
    rec.push(clique_field("alpha", &r.alpha));
    rec.push(clique_field("omega", &r.omega));
    let chi = colouring_field("chi", &r.chi);
    rec.push(if r.chi_by_theorem { chi.note("normal Cayley graph with alpha * omega = n") } else { chi });
    rec.push(cover_field("clique_cover", &r.clique_cover));
    rec.push(packing_field("alpha_star", &r.alpha_star));
    rec.push(theta_field("theta", &r.theta));
    let violations = r.sandwich_violations(tol);
    let sandwich = Field::exact("sandwich_holds", violations.is_empty());
    rec.push(if violations.is_empty() { sandwich } else { sandwich.note(violations.join("; ")) });
}

/// Every invariant of one family's orthogonality graph.
pub fn cmd_invariants(cfg: &RunConfig) -> Result<Record> {
    let d = cfg.dimension;
    let family = enumerate_family(d, cfg.family)?;
    let g = orthogonality_graph_parallel(&family, cfg.jobs)?;
    let dim = family.hilbert_dim();

    let mut opts = ReportOptions {
        hilbert_dim: Some(dim),
        theta: Some(theta_options(cfg)),
        cover: CoverOptions {
            hint: Some(partition_by_subspace(&family)),
            ..Default::default()
        },
        ..Default::default()
    };
    if !d.is_qubit() {
        opts.alpha.initial = Some(zero_weyl_phase_states(&family)?);
    }
    let normal = cfg.family == Family::Ent && !d.is_qubit() && normal_cayley_holds(d, &g)?;
    opts.normal_cayley = normal;

    let mut budgets = || Box::new(deadline(cfg)) as Box<dyn Budget>;
    let mut report = compute_report(&g, &opts, &mut budgets)?;
    report.lambda_max = sigma_lambda_max(&family)?;

    let mut rec = base_record("invariants", cfg).param("family", family.kind.name());
    report_fields(&mut rec, &g, &report, cfg.tolerance);
    rec.push(Field::exact("hilbert_dim", dim));
    rec.push(match report.lambda_max {
        Some(l) => Field::new("lambda_max", l, Status::Tolerance),
        None => Field::skipped("lambda_max", "projector sum too large to diagonalise"),
    });
    rec.push(Field::exact("normal_cayley_verified", normal));
    rec.push(decided("sic_alpha_below_cover", report.sic_alpha_below_cover()));
    rec.push(decided("sic_chi_exceeds_dim", report.sic_chi_exceeds_dim()));
    Ok(rec)
}

/// Invariants of a graph read from a DIMACS file.
pub fn cmd_graph(cfg: &RunConfig, g: &Graph, name: &str) -> Result<Record> {
    let opts = ReportOptions {
        theta: Some(theta_options(cfg)),
        ..Default::default()
    };
    let mut budgets = || Box::new(deadline(cfg)) as Box<dyn Budget>;
    let report = compute_report(g, &opts, &mut budgets)?;
    let mut rec = Record::new("graph")
        .param("input", name)
        .param("budget_seconds", cfg.budget_seconds as i64)
        .param("tolerance", cfg.tolerance);
    report_fields(&mut rec, g, &report, cfg.tolerance);
    Ok(rec)
}

fn cycle_fields(rec: &mut Record, g: &Graph, r: &OddCycleReport) {
    let comp = g.complement();
    let witnesses_ok = r.entries.iter().all(|e| {
        let hole = !matches!(&e.hole, CycleSearch::Found(c) if !is_induced_cycle(g, c));
        let anti = !matches!(&e.antihole, CycleSearch::Found(c) if !is_induced_cycle(&comp, c));
        hole && anti
    });
    let holes: Vec<i64> = r.entries.iter().filter(|e| e.hole.is_found()).map(|e| e.k as i64).collect();
    let anti: Vec<i64> = r.entries.iter().filter(|e| e.antihole.is_found()).map(|e| e.k as i64).collect();
    let status = if r.all_decided() { Status::Exact } else { Status::Bounded };
    let summary: Vec<String> = r
        .entries
        .iter()
        .map(|e| format!("k={}:{}/{}", e.k, e.hole.name(), e.antihole.name()))
        .collect();
    rec.push(Field::new("odd_hole_k", Num::List(holes), status).note(summary.join(" ")));
    rec.push(Field::new("odd_antihole_k", Num::List(anti), status));
    let ks = r.found_ks();
    let range = match (ks.first(), ks.last()) {
        (Some(a), Some(b)) => format!("{a}..{b}"),
        _ => "none".to_string(),
    };
    rec.push(Field::new("odd_cycle_k_range", range, status));
    rec.push(Field::exact("cycle_witnesses_verified", witnesses_ok));
}

/// Properties of the CHSH orthogonality graph at one dimension.
pub fn cmd_chsh(cfg: &RunConfig) -> Result<Record> {
    let d = cfg.dimension;
    let s = chsh_scenario(d)?;
    let g = &s.scenario.graph;
    let dd = d.get() as usize;
    let mut rec = base_record("chsh", cfg);
    rec.push(Field::exact("vertices", g.n()));
    rec.push(Field::exact("edges", g.edge_count()));
    rec.push(Field::exact("regular_degree", g.regular_degree()));
    rec.push(Field::exact("degree_formula", (2 * dd - 1) * (dd - 1)));
    rec.push(Field::exact("regularity_conjecture", regularity_conjecture_check(&s)));
    rec.push(Field::new("decomposition_deviation", s.decomposition_deviation(), Status::Tolerance));
    rec.push(Field::exact("local_structure", s.local_structure_holds()));

    let oracle = chsh_strategy_alpha(&s.operator);
    let opts = CliqueOptions {
        initial: Some(s.strategy_vertices(&oracle.f, &oracle.g)),
        ..Default::default()
    };
    let alpha = independence_number(g, &opts, &mut deadline(cfg))?;
    rec.push(clique_field("alpha", &alpha));
    rec.push(Field::exact("alpha_strategy", oracle.value).note("best deterministic local strategy"));
    rec.push(Field::exact("classical_bound", s.operator.classical_bound));
    match alpha.value() {
        Some(a) => {
            let bell = dd * a - dd * dd;
            rec.push(Field::exact("bell_bound_identity", bell == s.operator.classical_bound as usize))
        }
        None => rec.push(Field::skipped("bell_bound_identity", "alpha not exact")),
    }
    rec.push(Field::new("lambda_max", s.scenario.qm_value, Status::Tolerance));
    rec.push(Field::new("quantum_bell_value", s.operator.bell_value(s.scenario.qm_value), Status::Tolerance));
    rec.push(theta_field("theta", &theta_of(g, cfg)?));

    let c5 = count_induced_cycles(g, 5, &mut deadline(cfg));
    rec.push(match c5 {
        Some(c) => Field::exact("induced_c5", c as usize),
        None => Field::skipped("induced_c5", "count not finished within budget"),
    });
    let opts = OddCycleOptions {
        seed: cfg.seed,
        ..Default::default()
    };
    let cycles = induced_odd_cycles(g, &opts, &mut deadline(cfg));
    cycle_fields(&mut rec, g, &cycles);
    Ok(rec)
}

fn scenario_fields(rec: &mut Record, s: &ContextualityScenario, cfg: &RunConfig) -> Result<()> {
    let g = &s.graph;
    rec.push(Field::exact("vertices", g.n()));
    rec.push(Field::exact("edges", g.edge_count()));
    rec.push(Field::exact("hilbert_dim", s.hilbert_dim()));
    rec.push(Field::new("projector_defect", s.projector_defect(), Status::Tolerance));
    let alpha = independence_number(g, &CliqueOptions::default(), &mut deadline(cfg))?;
    rec.push(clique_field("alpha", &alpha));
    rec.push(theta_field("theta", &theta_of(g, cfg)?));
    let packing = match fractional_packing(g, &mut deadline(cfg)) {
        Ok(p) => Computed::Done(p),
        Err(Error::BudgetExceeded(why)) => Computed::Skipped(why),
        Err(e) => return Err(e.into()),
    };
    rec.push(packing_field("alpha_star", &packing));
    rec.push(Field::new("lambda_max", s.qm_value, Status::Tolerance));
    Ok(())
}

pub fn cmd_pm(cfg: &RunConfig) -> Result<Record> {
    let r = peres_mermin()?;
    let mut rec = Record::new("pm");
    rec.push(Field::exact("contexts_commute", r.contexts_commute));
    rec.push(Field::new("row_deviation", r.row_deviation, Status::Tolerance));
    rec.push(Field::new("column_deviation", r.column_deviation, Status::Tolerance));
    rec.push(Field::exact("consistent_assignments", r.consistent_assignments).note("out of 512"));
    rec.push(Field::exact("contradiction_verified", r.contradiction_verified()));
    rec.push(Field::exact("projectors", r.states.len()));
    rec.push(Field::exact("regular_degree", r.graph.regular_degree()));
    rec.push(Field::exact("bijection_to_ent", r.bijection.is_some()));
    rec.push(Field::exact("bijection_is_isomorphism", r.bijection_is_isomorphism));
    rec.push(Field::exact("isomorphic_by_search", r.searched_isomorphism.is_some()));
    let alpha = independence_number(&r.graph, &CliqueOptions::default(), &mut deadline(cfg))?;
    rec.push(clique_field("alpha", &alpha));
    Ok(rec)
}

pub fn cmd_kcbs(cfg: &RunConfig) -> Result<Record> {
    let s = kcbs_scenario()?;
    let mut rec = Record::new("kcbs").param("tolerance", cfg.tolerance);
    rec.push(Field::exact("is_pentagon", s.graph.same_edges(&Graph::cycle(5))));
    scenario_fields(&mut rec, &s, cfg)?;
    Ok(rec)
}

pub fn cmd_alt_chsh(cfg: &RunConfig) -> Result<Record> {
    let s = alternate_chsh_scenario()?;
    let mut rec = Record::new("alt-chsh").param("tolerance", cfg.tolerance);
    let dev = stabctx_core::bell::alternate::identity_deviation(&s.sigma)?;
    rec.push(Field::new("identity_deviation", dev, Status::Tolerance).note("max |4 Sigma - 6 I - B|"));
    rec.push(Field::exact(
        "isomorphic_to_pan_complement",
        find_isomorphism(&s.graph, &Graph::pan(5).complement()).is_some(),
    ));
    scenario_fields(&mut rec, &s, cfg)?;
    Ok(rec)
}

/// The graph selected by `source`, with a title for file headers.
pub fn source_graph(cfg: &RunConfig, source: GraphSource) -> Result<(Graph, String)> {
    Ok(match source {
        GraphSource::Family => {
            let family = enumerate_family(cfg.dimension, cfg.family)?;
            let g = orthogonality_graph_parallel(&family, cfg.jobs)?;
            (g, format!("orthogonality graph {} d={}", family.kind.name(), cfg.d()))
        }
        GraphSource::Chsh => {
            let s = chsh_scenario(cfg.dimension)?;
            (s.scenario.graph, format!("CHSH orthogonality graph d={}", cfg.d()))
        }
        GraphSource::Pm => (peres_mermin()?.graph, "Peres-Mermin projectors".to_string()),
        GraphSource::Kcbs => (kcbs_scenario()?.graph, "KCBS pentagon".to_string()),
        GraphSource::AltChsh => (alternate_chsh_scenario()?.graph, "six-projector CHSH".to_string()),
    })
}

#[derive(serde::Serialize)]
struct GraphJson<'a> {
    schema_version: u32,
    title: &'a str,
    vertices: usize,
    edges: Vec<[usize; 2]>,
    labels: &'a [String],
}

pub fn graph_to_json(g: &Graph, title: &str) -> String {
    let doc = GraphJson {
        schema_version: crate::output::SCHEMA_VERSION,
        title,
        vertices: g.n(),
        edges: g.edges().into_iter().map(|(a, b)| [a, b]).collect(),
        labels: g.labels(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("graph serialises");
    s.push('\n');
    s
}

pub fn cmd_export(cfg: &RunConfig, source: GraphSource) -> Result<String> {
    let (g, title) = source_graph(cfg, source)?;
    Ok(match cfg.format {
        crate::Format::Dimacs | crate::Format::Table => write_dimacs(&g, &[title]),
        crate::Format::Json => graph_to_json(&g, &title),
        crate::Format::Csv => bail!("export writes dimacs or json"),
    })
}
