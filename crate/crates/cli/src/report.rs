//! JSON report trees. Field order follows struct order; every rational is a
//! `"p/q"` string.

use arrgm::arrangement::{Edge, Principal};
use arrgm::ring::format_rational;
use arrgm::{CombType, Error, IndexSet, Matrix, Rational};
use serde::Serialize;

pub const SCHEMA: &str = "arrgm-report/1";

#[derive(Serialize)]
pub struct Envelope<T: Serialize> {
    pub schema: &'static str,
    pub command: &'static str,
    #[serde(flatten)]
    pub body: T,
}

#[derive(Serialize)]
pub struct ErrorBody {
    pub error: ErrorReport,
}

#[derive(Serialize)]
pub struct ErrorReport {
    pub code: &'static str,
    pub class: &'static str,
    pub message: String,
}

impl ErrorReport {
    pub fn from_error(e: &Error) -> Self {
        let class = match e.class() {
            arrgm::ErrorClass::Parse => "parse",
            arrgm::ErrorClass::Contract => "contract",
            arrgm::ErrorClass::Spectral => "spectral",
        };
        ErrorReport {
            code: e.code(),
            class,
            message: e.to_string(),
        }
    }
}

#[derive(Serialize)]
pub struct SetEntry {
    pub set: String,
    pub multiplicity: usize,
}

pub fn dep_entries(t: &CombType) -> Vec<SetEntry> {
    t.dep_star()
        .map(|(s, m)| SetEntry {
            set: s.label(),
            multiplicity: m,
        })
        .collect()
}

#[derive(Serialize)]
pub struct EdgeEntry {
    pub hyperplanes: String,
    pub rank: usize,
}

impl From<&Edge> for EdgeEntry {
    fn from(e: &Edge) -> Self {
        EdgeEntry {
            hyperplanes: e.hyperplanes.label(),
            rank: e.rank,
        }
    }
}

#[derive(Serialize)]
pub struct Nonresonance {
    pub weights: Vec<String>,
    pub nonresonant: bool,
    pub witnesses: Vec<EdgeEntry>,
}

#[derive(Serialize)]
pub struct Analysis {
    pub n: usize,
    pub ell: usize,
    pub dep_star: Vec<SetEntry>,
    pub dense_edges: Vec<EdgeEntry>,
    pub os_dimensions: Vec<usize>,
    pub bnbc_count: usize,
    pub bnbc_frames: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nonresonance: Option<Nonresonance>,
}

#[derive(Serialize)]
pub struct Candidate {
    pub set: String,
    pub r: usize,
}

#[derive(Serialize)]
pub struct PrincipalReport {
    pub set: String,
    pub r: usize,
}

impl From<&Principal> for PrincipalReport {
    fn from(p: &Principal) -> Self {
        PrincipalReport {
            set: p.s.label(),
            r: p.r,
        }
    }
}

#[derive(Serialize)]
pub struct PrincipalAnalysis {
    pub difference: Vec<SetEntry>,
    pub candidates: Vec<Candidate>,
    pub principal: PrincipalReport,
}

pub fn candidates(p: &Principal) -> Vec<Candidate> {
    p.candidates
        .iter()
        .map(|(s, r)| Candidate { set: s.label(), r: *r })
        .collect()
}

#[derive(Serialize)]
pub struct Monodromy {
    pub eigenvalue: String,
    pub multiplicity: usize,
}

#[derive(Serialize)]
pub struct Bases {
    pub omega: Vec<Vec<String>>,
    pub zero: Vec<Vec<String>>,
    pub lambda_s: Vec<Vec<String>>,
}

#[derive(Serialize)]
pub struct SpectrumAnalysis {
    pub weights: Vec<String>,
    pub principal: PrincipalReport,
    pub lambda_s: String,
    pub dimension: usize,
    pub frames: Vec<String>,
    pub multiplicity_zero: usize,
    pub multiplicity_lambda_s: usize,
    pub diagonalizable: bool,
    pub monodromy: Vec<Monodromy>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bases: Option<Bases>,
}

#[derive(Serialize)]
pub struct CriterionEntry {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

#[derive(Serialize)]
pub struct Selftest {
    pub scale: &'static str,
    pub passed: bool,
    pub criteria: Vec<CriterionEntry>,
}

pub fn rationals(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

pub fn matrix_rows(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| rationals(m.row(i))).collect()
}

pub fn labels(sets: &[IndexSet]) -> Vec<String> {
    sets.iter().map(|s| s.label()).collect()
}
