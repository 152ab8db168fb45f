//! Serialized shapes of every document the CLI emits.
//!
//! Integers are JSON numbers; exact rationals are strings `"n/d"`; floats are
//! never emitted. Every document carries `schema_version`.

use floer_core::invariants::{self, InvariantReport};
use floer_core::torusknot::{self, TorusKnotReport};
use floer_core::{FloerBetti, PlumbingGraph, Rational, SeifertData};
use serde::Serialize;

pub const SCHEMA_VERSION: &str = "1.0";

/// `"n/d"`, also for integers.
pub fn ratio(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

#[derive(Debug, Serialize)]
pub struct SeifertEcho {
    pub multiplicities: Vec<u64>,
    pub product: String,
    pub residues: Vec<u64>,
    pub offset: u64,
    pub simplex_threshold: String,
}

impl SeifertEcho {
    pub fn new(data: &SeifertData) -> Self {
        SeifertEcho {
            multiplicities: data.multiplicities().to_vec(),
            product: data.product().to_string(),
            residues: data.residues().to_vec(),
            offset: data.offset(),
            simplex_threshold: ratio(&floer_core::lattice::simplex_threshold(data)),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct MuBarRoutesDoc {
    pub plumbing: i64,
    pub dedekind: i64,
    pub dedekind_exact: String,
    pub trig: Option<i64>,
}

#[derive(Debug, Serialize)]
pub struct B37Doc {
    pub lattice_a: u64,
    pub alternating_b: u64,
}

#[derive(Debug, Serialize)]
pub struct PlumbingDoc {
    pub vertices: usize,
    pub signature: i64,
    pub determinant: String,
    pub wu_square: i64,
}

#[derive(Debug, Serialize)]
pub struct TauDoc {
    pub tau1: u64,
    pub tau2: u64,
    pub tau3: u64,
}

#[derive(Debug, Serialize)]
pub struct SplitDoc {
    pub j: usize,
    pub left: Vec<u64>,
    pub right: Vec<u64>,
    pub left_betti: [u64; 4],
    pub right_betti: [u64; 4],
    pub additive: bool,
}

/// Route behind each reported value.
#[derive(Debug, Serialize)]
pub struct Provenance {
    pub casson: &'static str,
    pub mu_bar: &'static str,
    pub betti: &'static str,
    pub sw_count: &'static str,
    pub chi_half_canonical: &'static str,
}

#[derive(Debug, Serialize)]
pub struct InvariantsDoc {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub input: Vec<u64>,
    pub seifert: SeifertEcho,
    pub casson: i64,
    pub mu_bar: i64,
    pub mu_bar_method: &'static str,
    pub mu_bar_routes: MuBarRoutesDoc,
    /// `[b₁, b₃, b₅, b₇]`.
    pub betti: [u64; 4],
    /// `[b₀, …, b₇]`; even degrees vanish.
    pub graded_betti: [u64; 8],
    pub sw_count: u64,
    pub chi_half_canonical: u64,
    pub b3_plus_b7_routes: B37Doc,
    pub lambda_sw_consistent: bool,
    pub plumbing: PlumbingDoc,
    pub tau: Option<TauDoc>,
    pub milnor_signature: Option<i64>,
    pub spectrum_sw_count: Option<u64>,
    pub provenance: Provenance,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub additivity: Option<Vec<SplitDoc>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

pub fn betti_array(b: &FloerBetti) -> [u64; 4] {
    [b.b1, b.b3, b.b5, b.b7]
}

impl InvariantsDoc {
    pub fn new(input: &[u64], r: &InvariantReport) -> floer_core::Result<Self> {
        let three = r.data.len() == 3;
        Ok(InvariantsDoc {
            schema_version: SCHEMA_VERSION,
            command: "invariants",
            input: input.to_vec(),
            seifert: SeifertEcho::new(&r.data),
            casson: r.casson,
            mu_bar: r.mu_bar,
            mu_bar_method: r.method.name(),
            mu_bar_routes: MuBarRoutesDoc {
                plumbing: r.mu_bar_routes.plumbing,
                dedekind: r.mu_bar_routes.dedekind,
                dedekind_exact: ratio(&invariants::mu_bar_dedekind_exact(&r.data)?),
                trig: r.mu_bar_routes.trig,
            },
            betti: betti_array(&r.betti),
            graded_betti: r.betti.graded(),
            sw_count: r.sw_count,
            chi_half_canonical: r.chi_half_canonical,
            b3_plus_b7_routes: B37Doc {
                lattice_a: r.b3_plus_b7_routes.lattice_a,
                alternating_b: r.b3_plus_b7_routes.alternating_b,
            },
            lambda_sw_consistent: r.casson == r.mu_bar_routes.dedekind - r.sw_count as i64,
            plumbing: PlumbingDoc {
                vertices: r.plumbing.vertices,
                signature: r.plumbing.signature,
                determinant: r.plumbing.determinant.to_string(),
                wu_square: r.plumbing.wu_square,
            },
            tau: r.tau.map(|t| TauDoc {
                tau1: t.tau1,
                tau2: t.tau2,
                tau3: t.tau3,
            }),
            milnor_signature: r.milnor_signature,
            spectrum_sw_count: r.spectrum_sw_count,
            provenance: Provenance {
                casson: if three {
                    "mu_bar - (b3+b7), equal to milnor_signature/8"
                } else {
                    "mu_bar - (b3+b7)"
                },
                mu_bar: r.method.name(),
                betti: "b1 = b5 = (-mu_bar - casson)/2, b3 = b7 = (mu_bar - casson)/2",
                sw_count: "2 * sum (e+1)|A_e|",
                chi_half_canonical: "equal to b3+b7",
            },
            additivity: None,
            timing_ms: None,
        })
    }

    pub const CSV_HEADER: [&'static str; 14] = [
        "multiplicities",
        "casson",
        "mu_bar",
        "mu_bar_method",
        "mu_bar_plumbing",
        "mu_bar_dedekind",
        "mu_bar_trig",
        "b1",
        "b3",
        "b5",
        "b7",
        "sw_count",
        "chi_half_canonical",
        "alternating_b",
    ];

    pub fn csv_row(&self) -> Vec<String> {
        let join = self
            .seifert
            .multiplicities
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(" ");
        vec![
            join,
            self.casson.to_string(),
            self.mu_bar.to_string(),
            self.mu_bar_method.to_string(),
            self.mu_bar_routes.plumbing.to_string(),
            self.mu_bar_routes.dedekind.to_string(),
            self.mu_bar_routes.trig.map_or_else(String::new, |t| t.to_string()),
            self.betti[0].to_string(),
            self.betti[1].to_string(),
            self.betti[2].to_string(),
            self.betti[3].to_string(),
            self.sw_count.to_string(),
            self.chi_half_canonical.to_string(),
            self.b3_plus_b7_routes.alternating_b.to_string(),
        ]
    }
}

#[derive(Debug, Serialize)]
pub struct DRoutesDoc {
    pub semigroup: i64,
    pub spectrum: i64,
    pub h0: i64,
    pub alexander: i64,
}

#[derive(Debug, Serialize)]
pub struct DinvDoc {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub input: Vec<u64>,
    pub p: u64,
    pub q: u64,
    pub genus: u64,
    pub gaps: Vec<u64>,
    pub d: i64,
    pub d_routes: DRoutesDoc,
    pub routes_agree: bool,
    /// `[a₀, a₁, …, a_g]`.
    pub alexander: Vec<i64>,
    pub alexander_at_one: i64,
    pub half_second_derivative_at_one: i64,
    pub spectrum_bound: String,
    pub arf_consistent: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl DinvDoc {
    pub fn new(input: &[u64], r: &TorusKnotReport) -> Self {
        DinvDoc {
            schema_version: SCHEMA_VERSION,
            command: "dinv",
            input: input.to_vec(),
            p: r.p,
            q: r.q,
            genus: r.genus,
            gaps: r.gaps.clone(),
            d: r.d,
            d_routes: DRoutesDoc {
                semigroup: r.routes.semigroup,
                spectrum: r.routes.spectrum,
                h0: r.routes.h0,
                alexander: r.routes.alexander,
            },
            routes_agree: r.routes.agree(),
            alexander_at_one: torusknot::alexander_at_one(&r.alexander),
            half_second_derivative_at_one: torusknot::half_second_derivative_at_one(&r.alexander),
            alexander: r.alexander.clone(),
            spectrum_bound: ratio(&torusknot::spectrum_bound(r.p, r.q)),
            arf_consistent: r.arf_consistent,
            timing_ms: None,
        }
    }

    pub const CSV_HEADER: [&'static str; 10] = [
        "p",
        "q",
        "genus",
        "d",
        "d_semigroup",
        "d_spectrum",
        "d_h0",
        "d_alexander",
        "routes_agree",
        "arf_consistent",
    ];

    pub fn csv_row(&self) -> Vec<String> {
        vec![
            self.p.to_string(),
            self.q.to_string(),
            self.genus.to_string(),
            self.d.to_string(),
            self.d_routes.semigroup.to_string(),
            self.d_routes.spectrum.to_string(),
            self.d_routes.h0.to_string(),
            self.d_routes.alexander.to_string(),
            self.routes_agree.to_string(),
            self.arf_consistent.to_string(),
        ]
    }
}

/// One `table` row.
#[derive(Debug, Serialize)]
pub struct TableRow {
    pub schema_version: &'static str,
    pub tuple: Vec<u64>,
    pub casson: i64,
    pub mu_bar: i64,
    pub b1: u64,
    pub b3: u64,
    pub sw_count: u64,
}

impl TableRow {
    pub fn new(r: &InvariantReport) -> Self {
        TableRow {
            schema_version: SCHEMA_VERSION,
            tuple: r.data.multiplicities().to_vec(),
            casson: r.casson,
            mu_bar: r.mu_bar,
            b1: r.betti.b1,
            b3: r.betti.b3,
            sw_count: r.sw_count,
        }
    }

    pub fn csv_header(n: usize) -> Vec<String> {
        (1..=n)
            .map(|i| format!("a{i}"))
            .chain(["casson", "mu_bar", "b1", "b3", "sw_count"].map(String::from))
            .collect()
    }

    pub fn csv_row(&self) -> Vec<String> {
        self.tuple
            .iter()
            .map(u64::to_string)
            .chain([
                self.casson.to_string(),
                self.mu_bar.to_string(),
                self.b1.to_string(),
                self.b3.to_string(),
                self.sw_count.to_string(),
            ])
            .collect()
    }
}

#[derive(Debug, Serialize)]
pub struct VerifyDoc {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub suite: &'static str,
    pub limit: u64,
    pub seed: u64,
    pub checks: u64,
    pub passed: u64,
    pub failed: u64,
    /// First few failures, in check order.
    pub failures: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

#[derive(Debug, Serialize)]
pub struct ErrorBody {
    pub kind: String,
    pub message: String,
}

#[derive(Debug, Serialize)]
pub struct ErrorDoc {
    pub schema_version: &'static str,
    pub error: ErrorBody,
}

impl ErrorDoc {
    pub fn new(kind: &str, message: String) -> Self {
        ErrorDoc {
            schema_version: SCHEMA_VERSION,
            error: ErrorBody {
                kind: kind.to_string(),
                message,
            },
        }
    }
}

/// Plain-text plumbing graph:
///
/// ```text
/// # floer-calc plumbing graph 1.0
/// # seifert 2 3 7
/// vertices 4
/// weight 0 -1
/// ...
/// edges 3
/// edge 0 1
/// ...
/// ```
///
/// Vertex 0 is the central vertex; each arm follows in input order.
pub fn plumbing_text(data: &SeifertData, graph: &PlumbingGraph) -> String {
    let mut s = format!("# floer-calc plumbing graph {SCHEMA_VERSION}\n# seifert");
    for a in data.multiplicities() {
        s += &format!(" {a}");
    }
    s += &format!("\nvertices {}\n", graph.len());
    for (i, w) in graph.weights().iter().enumerate() {
        s += &format!("weight {i} {w}\n");
    }
    s += &format!("edges {}\n", graph.edges().len());
    for (u, v) in graph.edges() {
        s += &format!("edge {u} {v}\n");
    }
    s
}

/// Inverse of [`plumbing_text`].
pub fn parse_plumbing_text(text: &str) -> Result<PlumbingGraph, String> {
    let mut weights = Vec::new();
    let mut edges = Vec::new();
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let num = |i: usize| -> Result<i64, String> {
            fields
                .get(i)
                .ok_or_else(|| format!("missing field in `{line}`"))?
                .parse()
                .map_err(|e| format!("`{line}`: {e}"))
        };
        match fields[0] {
            "vertices" | "edges" => {}
            "weight" => {
                if num(1)? as usize != weights.len() {
                    return Err(format!("out-of-order vertex in `{line}`"));
                }
                weights.push(num(2)?);
            }
            "edge" => edges.push((num(1)? as usize, num(2)? as usize)),
            other => return Err(format!("unknown record `{other}`")),
        }
    }
    PlumbingGraph::new(weights, edges).map_err(|e| e.to_string())
}
