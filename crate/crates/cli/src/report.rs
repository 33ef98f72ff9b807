//! JSON shapes for `analyze --json`.

use delsarte::DelsarteAnalysis;
use serde::Serialize;

#[derive(Serialize)]
pub struct OrbitJson {
    pub representative: [u32; 4],
    pub size: usize,
}

#[derive(Serialize)]
pub struct AnalysisJson {
    pub polynomial: String,
    pub degree: u32,
    pub m: u64,
    #[serde(rename = "B")]
    pub b: [[i64; 4]; 4],
    pub g_order: u64,
    pub g_invariants: Vec<u64>,
    pub lambda: u32,
    pub h20: usize,
    pub picard: Option<u32>,
    pub orbits: Vec<OrbitJson>,
}

impl AnalysisJson {
    pub fn new(a: &DelsarteAnalysis) -> Self {
        Self {
            polynomial: a.surface.to_ast().to_string(),
            degree: a.surface.degree(),
            m: a.covering.m,
            b: a.covering.b,
            g_order: a.covering.g_order,
            g_invariants: a.covering.g_invariants.clone(),
            lambda: a.lambda,
            h20: a.h20,
            picard: a.picard,
            orbits: a
                .transcendental_orbits
                .iter()
                .map(|o| OrbitJson { representative: o.representative.entries(), size: o.size() })
                .collect(),
        }
    }
}

pub fn format_b(b: &[[i64; 4]; 4]) -> String {
    let rows: Vec<String> =
        b.iter().map(|r| r.iter().map(i64::to_string).collect::<Vec<_>>().join(" ")).collect();
    format!("[{}]", rows.join("; "))
}
