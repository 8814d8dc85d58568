//! Input documents, report model and command implementations for the
//! `raagcoh` binary. Reports exist in a machine form (JSON, round-trip
//! stable) from which the human rendering is derived.

// reports are built once per process; their size is not worth boxing
#![allow(clippy::result_large_err)]

use raagcoh::cert::{
    classify, corestriction_table, exactness_ledger, h2_exactness, symplectic_basis, CertError,
    CorTable, DemushkinForm, ExactnessLedger, LedgerRow, SubsetPolicy, Verdict,
};
use raagcoh::fp::{FpMatrix, Prime};
use raagcoh::graph::SimplicialGraph;
use raagcoh::massey::{
    build_raag_witness, exhaustive_witness_search, MasseyError, Presentation, SearchOutcome,
    DEFAULT_SEARCH_BUDGET,
};
use raagcoh::sr::{Cochain, SRAlgebra};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub mod exit_code {
    pub const OK: i32 = 0;
    pub const INTERNAL: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const BAD_PRIME: i32 = 3;
    pub const UNSUPPORTED_CLASS: i32 = 4;
    pub const LEDGER_FAILURE: i32 = 5;
    pub const MASSEY_OBSTRUCTION: i32 = 6;
    pub const DEGENERATE_FORM: i32 = 7;
}

/// On-disk graph format: labels, index pairs, optional default prime.
/// Edges are deduplicated on load; loops and out-of-range indices are
/// rejected.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphDocument {
    pub vertices: Vec<String>,
    pub edges: Vec<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u32>,
}

impl GraphDocument {
    pub fn parse(text: &str) -> Result<Self, String> {
        serde_json::from_str(text).map_err(|e| format!("invalid graph document: {e}"))
    }

    pub fn to_graph(&self) -> Result<SimplicialGraph, String> {
        let pairs: Vec<(usize, usize)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        SimplicialGraph::with_labels(self.vertices.clone(), &pairs).map_err(|e| e.to_string())
    }
}

/// Character tuples for the massey/oracle commands: a list of coefficient
/// vectors over the vertex basis.
pub type CharsDocument = Vec<Vec<i64>>;

pub fn parse_chars(text: &str) -> Result<CharsDocument, String> {
    serde_json::from_str(text).map_err(|e| format!("invalid characters document: {e}"))
}

/// A bilinear form file is a plain 2D integer array.
pub fn parse_form(text: &str) -> Result<Vec<Vec<i64>>, String> {
    serde_json::from_str(text).map_err(|e| format!("invalid form document: {e}"))
}

// ---------------------------------------------------------------------------
// report model
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub input: BTreeMap<String, String>,
    pub warnings: Vec<String>,
    pub exit_code: i32,
    pub body: ReportBody,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum ReportBody {
    Classify {
        vertices: usize,
        edges: usize,
        verdict: Verdict,
    },
    Certify {
        class: String,
        edge_count: usize,
        sampled: bool,
        rows: usize,
        passed: usize,
        summary: String,
        ledger: Vec<LedgerRow>,
    },
    Massey {
        n: usize,
        p: u32,
        witness: Option<WitnessReport>,
        obstruction: Option<[usize; 2]>,
        oracle: Option<String>,
        oracle_agrees: Option<bool>,
    },
    Demushkin {
        p: u32,
        dim: usize,
        symplectic_basis: Vec<Vec<u32>>,
        basis_verified: bool,
        h2_exact: bool,
        cor: CorReport,
    },
    Oracle {
        n: usize,
        p: u32,
        outcome: String,
    },
    Error {
        message: String,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WitnessReport {
    /// one full (n+1)x(n+1) matrix per generator, row-major
    pub images: Vec<Vec<Vec<u32>>>,
    pub verified: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CorReport {
    pub generator_names: Vec<String>,
    /// rows indexed by group generators, columns by the dual basis
    pub values: Vec<Vec<u32>>,
    pub subgroup_generator_count: usize,
    pub image_rank: usize,
    pub image_equals_cup_kernel: bool,
}

impl Report {
    fn error(command: &str, input: BTreeMap<String, String>, code: i32, message: String) -> Self {
        Report {
            command: command.into(),
            input,
            warnings: Vec::new(),
            exit_code: code,
            body: ReportBody::Error { message },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self, String> {
        serde_json::from_str(text).map_err(|e| e.to_string())
    }

    /// Human rendering, derived from the machine form.
    pub fn human(&self) -> String {
        let mut out = String::new();
        let mut line = |s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        line(format!("command: {}", self.command));
        match &self.body {
            ReportBody::Classify { vertices, edges, verdict } => {
                line(format!("graph: {vertices} vertices, {edges} edges"));
                line(format!("verdict: {}", verdict.status_name()));
                line(format!("realizability: {}", verdict.realizability));
                line(format!("certificate: {:?}", verdict.certificate));
            }
            ReportBody::Certify { class, summary, ledger, sampled, .. } => {
                line(format!("class: {class}"));
                if *sampled {
                    line("subset enumeration: sampled".into());
                }
                line(summary.clone());
                for row in ledger.iter().filter(|r| !r.pass) {
                    line(format!(
                        "FAILED support {:?}: cup {}/{} + {} + {} + {} = {} (want {})",
                        row.support,
                        row.dim_cup_formula,
                        row.dim_cup_rank,
                        row.subgraph_term,
                        row.outside_edge_term,
                        row.chain_term,
                        row.total,
                        row.target
                    ));
                }
            }
            ReportBody::Massey { n, p, witness, obstruction, oracle, oracle_agrees } => {
                line(format!("n = {n}, p = {p}"));
                match witness {
                    Some(w) => {
                        line(format!("witness found; verified = {}", w.verified));
                        for (i, m) in w.images.iter().enumerate() {
                            line(format!("generator {}: {:?}", i + 1, m));
                        }
                    }
                    None => {
                        if let Some([a, b]) = obstruction {
                            line(format!("cup obstruction at pair ({a}, {b})"));
                        }
                    }
                }
                if let Some(o) = oracle {
                    line(format!(
                        "oracle outcome: {o} (agrees with construction: {})",
                        oracle_agrees.unwrap_or(false)
                    ));
                }
            }
            ReportBody::Demushkin { p, dim, symplectic_basis, basis_verified, h2_exact, cor } => {
                line(format!("p = {p}, dim = {dim}"));
                line(format!("symplectic basis: {symplectic_basis:?}"));
                line(format!("P^T B P standard: {basis_verified}"));
                line(format!("H2 exactness (all nonzero alpha): {h2_exact}"));
                line(format!("subgroup generators |Y| = {}", cor.subgroup_generator_count));
                for (name, col) in cor.generator_names.iter().zip(transpose(&cor.values)) {
                    line(format!("cor({name}) = {col:?}"));
                }
                line(format!(
                    "image rank {} equals dim Ker(cup-by-alpha1): {}",
                    cor.image_rank, cor.image_equals_cup_kernel
                ));
            }
            ReportBody::Oracle { n, p, outcome } => {
                line(format!("n = {n}, p = {p}"));
                line(format!("outcome: {outcome}"));
            }
            ReportBody::Error { message } => line(format!("error: {message}")),
        }
        for w in &self.warnings {
            line(format!("warning: {w}"));
        }
        out
    }
}

fn transpose(rows: &[Vec<u32>]) -> Vec<Vec<u32>> {
    if rows.is_empty() {
        return Vec::new();
    }
    (0..rows[0].len())
        .map(|c| rows.iter().map(|r| r[c]).collect())
        .collect()
}

// ---------------------------------------------------------------------------
// command implementations
// ---------------------------------------------------------------------------

fn resolve_prime(
    command: &str,
    input: &BTreeMap<String, String>,
    flag: Option<u32>,
    doc: Option<u32>,
) -> Result<Prime, Report> {
    let value = flag.or(doc).unwrap_or(2);
    Prime::new(value).map_err(|e| {
        Report::error(command, input.clone(), exit_code::BAD_PRIME, e.to_string())
    })
}

fn load_graph(
    command: &str,
    input: &BTreeMap<String, String>,
    text: &str,
) -> Result<(GraphDocument, SimplicialGraph), Report> {
    let doc = GraphDocument::parse(text)
        .map_err(|e| Report::error(command, input.clone(), exit_code::PARSE, e))?;
    let graph = doc
        .to_graph()
        .map_err(|e| Report::error(command, input.clone(), exit_code::PARSE, e))?;
    Ok((doc, graph))
}

pub fn cmd_classify(graph_text: &str, p_flag: Option<u32>, echo: BTreeMap<String, String>) -> Report {
    let (doc, graph) = match load_graph("classify", &echo, graph_text) {
        Ok(x) => x,
        Err(r) => return r,
    };
    if let Err(r) = resolve_prime("classify", &echo, p_flag, doc.p) {
        return r;
    }
    let verdict = classify(&graph);
    Report {
        command: "classify".into(),
        input: echo,
        warnings: Vec::new(),
        exit_code: exit_code::OK,
        body: ReportBody::Classify {
            vertices: graph.vertex_count(),
            edges: graph.edge_count(),
            verdict,
        },
    }
}

pub fn cmd_certify(
    graph_text: &str,
    p_flag: Option<u32>,
    policy: SubsetPolicy,
    echo: BTreeMap<String, String>,
) -> Report {
    let (doc, graph) = match load_graph("certify", &echo, graph_text) {
        Ok(x) => x,
        Err(r) => return r,
    };
    let p = match resolve_prime("certify", &echo, p_flag, doc.p) {
        Ok(p) => p,
        Err(r) => return r,
    };
    let ledger: ExactnessLedger = match exactness_ledger(&graph, p, policy, true) {
        Ok(l) => l,
        Err(CertError::UnsupportedGraphClass) => {
            return Report::error(
                "certify",
                echo,
                exit_code::UNSUPPORTED_CLASS,
                CertError::UnsupportedGraphClass.to_string(),
            )
        }
        Err(e) => return Report::error("certify", echo, exit_code::INTERNAL, e.to_string()),
    };
    let rows = ledger.rows.len();
    let passed = ledger.passed();
    let summary = format!("rows={rows} passed={passed} |E|={}", ledger.edge_count);
    let mut warnings = Vec::new();
    if ledger.sampled {
        warnings.push("subset enumeration sampled, not exhaustive".into());
    }
    let exit = if passed == rows { exit_code::OK } else { exit_code::LEDGER_FAILURE };
    Report {
        command: "certify".into(),
        input: echo,
        warnings,
        exit_code: exit,
        body: ReportBody::Certify {
            class: format!("{:?}", ledger.class),
            edge_count: ledger.edge_count,
            sampled: ledger.sampled,
            rows,
            passed,
            summary,
            ledger: ledger.rows,
        },
    }
}

pub fn cmd_massey(
    graph_text: &str,
    chars_text: &str,
    p_flag: Option<u32>,
    n_flag: Option<usize>,
    run_oracle: bool,
    echo: BTreeMap<String, String>,
) -> Report {
    let (doc, graph) = match load_graph("massey", &echo, graph_text) {
        Ok(x) => x,
        Err(r) => return r,
    };
    let p = match resolve_prime("massey", &echo, p_flag, doc.p) {
        Ok(p) => p,
        Err(r) => return r,
    };
    let chars = match parse_chars(chars_text) {
        Ok(c) => c,
        Err(e) => return Report::error("massey", echo, exit_code::PARSE, e),
    };
    let n = n_flag.unwrap_or(chars.len());
    if n != chars.len() || n < 2 {
        return Report::error(
            "massey",
            echo,
            exit_code::PARSE,
            format!("need n >= 2 character vectors, got {} (n = {n})", chars.len()),
        );
    }
    let d = graph.vertex_count();
    if chars.iter().any(|c| c.len() != d) {
        return Report::error(
            "massey",
            echo,
            exit_code::PARSE,
            format!("character vectors must have length {d}"),
        );
    }
    let alg = SRAlgebra::new(graph.clone(), p);
    let cochains: Vec<Cochain> = chars.iter().map(|c| alg.character_from(c)).collect();
    let built = build_raag_witness(&alg, &cochains);
    let (witness, obstruction, exit) = match &built {
        Ok(rep) => (
            Some(WitnessReport {
                images: rep.images.iter().map(|m| m.dense()).collect(),
                verified: rep.verify(),
            }),
            None,
            exit_code::OK,
        ),
        Err(MasseyError::CupObstruction(a, b)) => {
            (None, Some([*a, *b]), exit_code::MASSEY_OBSTRUCTION)
        }
        Err(e) => return Report::error("massey", echo, exit_code::INTERNAL, e.to_string()),
    };
    let mut warnings = Vec::new();
    let (oracle, oracle_agrees, exit) = if run_oracle {
        let tuple: Vec<Vec<u32>> =
            cochains.iter().map(|c| c.coeffs.clone()).collect();
        let pres = Presentation::raag(&graph);
        match exhaustive_witness_search(&pres, p, n, &tuple, DEFAULT_SEARCH_BUDGET) {
            Ok(outcome) => {
                let agrees = match built {
                    Ok(_) => outcome == SearchOutcome::Vanishes,
                    Err(_) => outcome == SearchOutcome::Undefined,
                };
                let exit = if agrees { exit } else { exit_code::INTERNAL };
                if !agrees {
                    warnings.push("search oracle disagrees with the constructive path".into());
                }
                (Some(format!("{outcome:?}")), Some(agrees), exit)
            }
            Err(e) => {
                warnings.push(format!("oracle skipped: {e}"));
                (None, None, exit)
            }
        }
    } else {
        (None, None, exit)
    };
    Report {
        command: "massey".into(),
        input: echo,
        warnings,
        exit_code: exit,
        body: ReportBody::Massey {
            n,
            p: p.get(),
            witness,
            obstruction,
            oracle,
            oracle_agrees,
        },
    }
}

pub fn cmd_oracle(
    graph_text: &str,
    chars_text: &str,
    p_flag: Option<u32>,
    n_flag: Option<usize>,
    echo: BTreeMap<String, String>,
) -> Report {
    let (doc, graph) = match load_graph("oracle", &echo, graph_text) {
        Ok(x) => x,
        Err(r) => return r,
    };
    let p = match resolve_prime("oracle", &echo, p_flag, doc.p) {
        Ok(p) => p,
        Err(r) => return r,
    };
    let chars = match parse_chars(chars_text) {
        Ok(c) => c,
        Err(e) => return Report::error("oracle", echo, exit_code::PARSE, e),
    };
    let n = n_flag.unwrap_or(chars.len());
    if n != chars.len() || n < 2 || chars.iter().any(|c| c.len() != graph.vertex_count()) {
        return Report::error(
            "oracle",
            echo,
            exit_code::PARSE,
            "characters must be n >= 2 vectors over the vertex set".into(),
        );
    }
    let alg = SRAlgebra::new(graph.clone(), p);
    let tuple: Vec<Vec<u32>> = chars
        .iter()
        .map(|c| alg.character_from(c).coeffs)
        .collect();
    let pres = Presentation::raag(&graph);
    match exhaustive_witness_search(&pres, p, n, &tuple, DEFAULT_SEARCH_BUDGET) {
        Ok(outcome) => Report {
            command: "oracle".into(),
            input: echo,
            warnings: Vec::new(),
            exit_code: exit_code::OK,
            body: ReportBody::Oracle { n, p: p.get(), outcome: format!("{outcome:?}") },
        },
        Err(e) => Report::error("oracle", echo, exit_code::INTERNAL, e.to_string()),
    }
}

pub fn cmd_demushkin(
    p_flag: Option<u32>,
    d: usize,
    form_text: Option<&str>,
    echo: BTreeMap<String, String>,
) -> Report {
    let p = match resolve_prime("demushkin", &echo, p_flag, None) {
        Ok(p) => p,
        Err(r) => return r,
    };
    if d == 0 || !d.is_multiple_of(2) {
        return Report::error(
            "demushkin",
            echo,
            exit_code::DEGENERATE_FORM,
            format!("dimension must be even and positive, got {d}"),
        );
    }
    let form = match form_text {
        None => DemushkinForm::standard(p, d),
        Some(text) => {
            let rows = match parse_form(text) {
                Ok(r) => r,
                Err(e) => return Report::error("demushkin", echo, exit_code::PARSE, e),
            };
            if rows.len() != d || rows.iter().any(|r| r.len() != d) {
                return Report::error(
                    "demushkin",
                    echo,
                    exit_code::PARSE,
                    format!("form must be a {d}x{d} integer matrix"),
                );
            }
            let m = FpMatrix::from_rows(p, &rows);
            match DemushkinForm::new(m) {
                Ok(f) => f,
                Err(e) => {
                    return Report::error(
                        "demushkin",
                        echo,
                        exit_code::DEGENERATE_FORM,
                        e.to_string(),
                    )
                }
            }
        }
    };
    let basis = match symplectic_basis(&form) {
        Ok(b) => b,
        Err(e) => {
            return Report::error("demushkin", echo, exit_code::DEGENERATE_FORM, e.to_string())
        }
    };
    let check = basis.transpose().matmul(form.matrix()).matmul(&basis);
    let basis_verified = &check == DemushkinForm::standard(p, d).matrix();
    let h2 = h2_exactness(&form);
    let cor: CorTable = match corestriction_table(p, d) {
        Ok(t) => t,
        Err(e) => return Report::error("demushkin", echo, exit_code::INTERNAL, e.to_string()),
    };
    let mut warnings = Vec::new();
    if cor.dim_discrepancy() {
        warnings.push(format!(
            "source reports dim H1(N) = 2+p(d-1) = {}; the constructed minimal generating set has 2+p(d-2) = {} elements; using the latter",
            cor.reported_subgroup_dim, cor.subgroup_generator_count
        ));
    }
    let values: Vec<Vec<u32>> =
        (0..d).map(|r| cor.matrix.row(r).to_vec()).collect();
    Report {
        command: "demushkin".into(),
        input: echo,
        warnings,
        exit_code: exit_code::OK,
        body: ReportBody::Demushkin {
            p: p.get(),
            dim: d,
            symplectic_basis: (0..d).map(|r| basis.row(r).to_vec()).collect(),
            basis_verified,
            h2_exact: h2.exact,
            cor: CorReport {
                generator_names: cor.generator_names.clone(),
                values,
                subgroup_generator_count: cor.subgroup_generator_count,
                image_rank: cor.image_rank,
                image_equals_cup_kernel: cor.image_equals_cup_kernel,
            },
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn echo() -> BTreeMap<String, String> {
        BTreeMap::new()
    }

    const TRIANGLE: &str = r#"{"vertices":["a","b","c"],"edges":[[0,1],[1,2],[0,2]]}"#;

    #[test]
    fn report_round_trip() {
        let r = cmd_classify(TRIANGLE, Some(3), echo());
        assert_eq!(r.exit_code, 0);
        let json = r.to_json();
        let back = Report::from_json(&json).unwrap();
        assert_eq!(r, back);

        let r = cmd_demushkin(Some(3), 4, None, echo());
        let back = Report::from_json(&r.to_json()).unwrap();
        assert_eq!(r, back);

        let graph = r#"{"vertices":["a","b"],"edges":[]}"#;
        let chars = "[[1,0],[0,1],[1,0]]";
        let r = cmd_massey(graph, chars, Some(2), None, true, echo());
        assert_eq!(r.exit_code, 0);
        let back = Report::from_json(&r.to_json()).unwrap();
        assert_eq!(r, back);
    }

    #[test]
    fn loop_and_range_rejected() {
        let r = cmd_classify(r#"{"vertices":["a"],"edges":[[0,0]]}"#, None, echo());
        assert_eq!(r.exit_code, exit_code::PARSE);
        let r = cmd_classify(r#"{"vertices":["a"],"edges":[[0,5]]}"#, None, echo());
        assert_eq!(r.exit_code, exit_code::PARSE);
        // duplicate edges are deduplicated silently
        let r = cmd_classify(
            r#"{"vertices":["a","b"],"edges":[[0,1],[1,0],[0,1]]}"#,
            None,
            echo(),
        );
        assert_eq!(r.exit_code, 0);
        match r.body {
            ReportBody::Classify { edges, .. } => assert_eq!(edges, 1),
            _ => panic!(),
        }
    }

    #[test]
    fn bad_prime_code() {
        let r = cmd_classify(TRIANGLE, Some(6), echo());
        assert_eq!(r.exit_code, exit_code::BAD_PRIME);
        // document-level prime is honored
        let doc = r#"{"vertices":["a"],"edges":[],"p":9}"#;
        let r = cmd_classify(doc, None, echo());
        assert_eq!(r.exit_code, exit_code::BAD_PRIME);
    }

    #[test]
    fn certify_outcomes() {
        let r = cmd_certify(TRIANGLE, Some(3), SubsetPolicy::AllSubsets, echo());
        assert_eq!(r.exit_code, 0);
        match &r.body {
            ReportBody::Certify { summary, rows, passed, .. } => {
                assert_eq!(rows, passed);
                assert_eq!(summary, &format!("rows={rows} passed={passed} |E|=3"));
            }
            _ => panic!(),
        }
        let c5 = r#"{"vertices":["1","2","3","4","5"],
                     "edges":[[0,1],[1,2],[2,3],[3,4],[4,0]]}"#;
        let r = cmd_certify(c5, Some(2), SubsetPolicy::Auto, echo());
        assert_eq!(r.exit_code, exit_code::UNSUPPORTED_CLASS);

        // oversized samples are capped at the number of nonempty subsets
        let r = cmd_certify(TRIANGLE, Some(3), SubsetPolicy::Sample(1000), echo());
        assert_eq!(r.exit_code, 0);
        match r.body {
            ReportBody::Certify { rows, .. } => assert_eq!(rows, 7),
            _ => panic!(),
        }
    }

    #[test]
    fn massey_obstruction_exit() {
        let graph = r#"{"vertices":["a","b"],"edges":[[0,1]]}"#;
        let chars = "[[1,0],[0,1],[1,0]]";
        let r = cmd_massey(graph, chars, Some(2), Some(3), false, echo());
        assert_eq!(r.exit_code, exit_code::MASSEY_OBSTRUCTION);
        match r.body {
            ReportBody::Massey { obstruction, .. } => assert_eq!(obstruction, Some([1, 2])),
            _ => panic!(),
        }
    }

    #[test]
    fn demushkin_outcomes() {
        let r = cmd_demushkin(Some(3), 4, None, echo());
        assert_eq!(r.exit_code, 0);
        assert!(r.warnings.iter().any(|w| w.contains("2+p(d-2)")));
        match &r.body {
            ReportBody::Demushkin { basis_verified, h2_exact, cor, .. } => {
                assert!(*basis_verified && *h2_exact);
                assert!(cor.image_equals_cup_kernel);
                // cor(psi_2) = 0
                let col: Vec<u32> = cor.values.iter().map(|row| row[1]).collect();
                assert!(col.iter().all(|&x| x == 0));
            }
            _ => panic!(),
        }
        let degenerate = "[[0,0],[0,0]]";
        let r = cmd_demushkin(Some(3), 2, Some(degenerate), echo());
        assert_eq!(r.exit_code, exit_code::DEGENERATE_FORM);
    }

    #[test]
    fn oracle_command() {
        let graph = r#"{"vertices":["a","b"],"edges":[]}"#;
        let chars = "[[1,0],[0,1],[1,0]]";
        let r = cmd_oracle(graph, chars, Some(2), None, echo());
        assert_eq!(r.exit_code, 0);
        match r.body {
            ReportBody::Oracle { ref outcome, .. } => assert_eq!(outcome, "Vanishes"),
            _ => panic!(),
        }
    }
}
