//! Certification of the root `-n/d` for indecomposable central arrangements,
//! and the sweep over dense edges that certifies an affine arrangement.
//!
//! Three sufficient conditions are tried on each arrangement:
//! the origin is a good dense edge; the arrangement is reduced of rank at
//! most three (settled by an Aomoto certificate); or it is reduced with
//! `gcd(n, d) = 1` and some hyperplane is generic relative to the others.
//! Absence of a certificate is reported as unknown, never as a refutation.

use num_bigint::BigInt;
use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::aomoto::{certify_root, RootCertificate};
use crate::arrangement::{self, Arrangement, Edge};
use crate::error::{Error, Result};
use crate::linalg::Q;
use crate::rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Case {
    /// The origin is a good dense edge.
    GoodCenter,
    /// Reduced of rank at most three.
    ReducedRankThree,
    /// Reduced, `gcd(n, d) = 1`, and some hyperplane generic relative to the rest.
    GenericLast,
}

impl Case {
    pub const ALL: [Case; 3] = [Case::GoodCenter, Case::ReducedRankThree, Case::GenericLast];

    pub fn name(self) -> &'static str {
        match self {
            Case::GoodCenter => "good-center",
            Case::ReducedRankThree => "reduced-rank-three",
            Case::GenericLast => "generic-last",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Certified,
    /// The hypothesis of the case does not hold.
    NotApplicable,
    /// The hypothesis holds but no witness was found.
    Failed,
}

impl Outcome {
    pub fn name(self) -> &'static str {
        match self {
            Outcome::Certified => "certified",
            Outcome::NotApplicable => "not-applicable",
            Outcome::Failed => "failed",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseResult {
    pub case: Case,
    pub outcome: Outcome,
    /// Aomoto certificate, for the reduced rank-three case in rank three.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<RootCertificate>,
    /// Index of the generic hyperplane, for the generic-last case.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generic_hyperplane: Option<usize>,
}

impl CaseResult {
    fn simple(case: Case, outcome: Outcome) -> Self {
        CaseResult {
            case,
            outcome,
            certificate: None,
            generic_hyperplane: None,
        }
    }
}

/// Result of certifying `-n/d` for one central essential indecomposable arrangement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseReport {
    #[serde(with = "rational")]
    pub root: Q,
    pub rank: usize,
    pub degree: u64,
    pub reduced: bool,
    /// Every case, in order, each evaluated independently.
    pub cases: Vec<CaseResult>,
    /// First case that certified.
    pub certified_by: Option<Case>,
}

impl CaseReport {
    pub fn outcome(&self) -> Outcome {
        if self.certified_by.is_some() {
            Outcome::Certified
        } else if self.cases.iter().any(|c| c.outcome == Outcome::Failed) {
            Outcome::Failed
        } else {
            Outcome::NotApplicable
        }
    }

    pub fn case(&self, case: Case) -> &CaseResult {
        self.cases.iter().find(|c| c.case == case).expect("every case is evaluated")
    }
}

fn good_center(a: &Arrangement) -> CaseResult {
    let lattice = a.lattice();
    let good = lattice.center().and_then(|c| lattice.is_good_dense_edge(c)) == Some(true);
    CaseResult::simple(Case::GoodCenter, if good { Outcome::Certified } else { Outcome::NotApplicable })
}

fn reduced_rank_three(a: &Arrangement) -> Result<CaseResult> {
    let rank = a.rank();
    if !a.is_reduced() || rank > 3 {
        return Ok(CaseResult::simple(Case::ReducedRankThree, Outcome::NotApplicable));
    }
    if rank < 3 {
        // A reduced indecomposable arrangement of rank at most two has a
        // good center, so the claim is already settled combinatorially.
        return Ok(CaseResult::simple(Case::ReducedRankThree, Outcome::Certified));
    }
    let certificate = certify_root(a)?;
    Ok(CaseResult {
        case: Case::ReducedRankThree,
        outcome: if certificate.is_some() { Outcome::Certified } else { Outcome::Failed },
        certificate,
        generic_hyperplane: None,
    })
}

fn generic_last(a: &Arrangement) -> Result<CaseResult> {
    let n = a.dim() as u64;
    if !a.is_reduced() || n.gcd(&a.degree()) != 1 {
        return Ok(CaseResult::simple(Case::GenericLast, Outcome::NotApplicable));
    }
    for i in 0..a.len() {
        if arrangement::is_relatively_generic_last(&a.with_last(i)?)? {
            return Ok(CaseResult {
                case: Case::GenericLast,
                outcome: Outcome::Certified,
                certificate: None,
                generic_hyperplane: Some(i),
            });
        }
    }
    Ok(CaseResult::simple(Case::GenericLast, Outcome::NotApplicable))
}

/// Tries all three cases on a central, essential, indecomposable arrangement.
pub fn certify_indecomposable(a: &Arrangement) -> Result<CaseReport> {
    if !a.is_central() {
        return Err(Error::NotCentral);
    }
    if !a.is_essential() {
        return Err(Error::NotEssential);
    }
    if !arrangement::is_indecomposable(a)? {
        return Err(Error::Decomposable);
    }
    let cases = vec![good_center(a), reduced_rank_three(a)?, generic_last(a)?];
    let certified_by = cases.iter().find(|c| c.outcome == Outcome::Certified).map(|c| c.case);
    let rank = a.rank();
    let degree = a.degree();
    Ok(CaseReport {
        root: -Q::new(BigInt::from(rank as u64), BigInt::from(degree)),
        rank,
        degree,
        reduced: a.is_reduced(),
        cases,
        certified_by,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Certified,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeReport {
    pub indices: Vec<usize>,
    pub codim: usize,
    pub mult: u64,
    #[serde(with = "rational::vec")]
    pub point: Vec<Q>,
    /// Whether the edge is good among the dense edges containing it.
    pub good: bool,
    pub quotient: CaseReport,
    pub outcome: Outcome,
}

/// All dense edges with their certification outcomes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub dim: usize,
    pub degree: u64,
    pub edges: Vec<EdgeReport>,
    /// All dense edges are good, which settles the claim on its own.
    pub moderate_type: bool,
    pub verdict: Verdict,
}

impl ConjectureReport {
    pub fn edge(&self, indices: &[usize]) -> Option<&EdgeReport> {
        self.edges.iter().find(|e| e.indices == indices)
    }
}

fn edge_report(a: &Arrangement, edge: &Edge, good: bool) -> Result<EdgeReport> {
    let q = arrangement::quotient(a, edge)?;
    let quotient = certify_indecomposable(&q.arrangement)?;
    Ok(EdgeReport {
        indices: edge.indices.clone(),
        codim: edge.codim,
        mult: edge.mult,
        point: edge.point.clone(),
        good,
        outcome: quotient.outcome(),
        quotient,
    })
}

/// Certifies every dense edge of a central or affine arrangement through
/// its quotient. Edges are handled in parallel; the order of the report is
/// the lattice order.
pub fn certify_dense_edges(a: &Arrangement) -> Result<ConjectureReport> {
    let lattice = a.lattice();
    let dense: Vec<(usize, &Edge)> = lattice.edges().iter().enumerate().filter(|(_, e)| e.dense).collect();
    let edges = dense
        .par_iter()
        .map(|&(i, e)| edge_report(a, e, lattice.is_good_dense_edge(i) == Some(true)))
        .collect::<Result<Vec<_>>>()?;
    let verdict = if edges.iter().all(|e| e.outcome == Outcome::Certified) {
        Verdict::Certified
    } else {
        Verdict::Unknown
    };
    Ok(ConjectureReport {
        dim: a.dim(),
        degree: a.degree(),
        moderate_type: lattice.is_moderate_type(),
        edges,
        verdict,
    })
}
