//! The projectivization of a rank-3 central arrangement: a configuration of
//! lines in `P^2`, with its intersection points.

use serde::Serialize;

use super::Arrangement;
use crate::error::{Error, Result};
use crate::linalg;

/// An intersection point of at least two lines.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlanePoint {
    /// Lines through the point, ascending.
    pub lines: Vec<usize>,
    /// Projective coordinates, primitive integers with first nonzero entry positive.
    pub coords: Vec<String>,
    /// `m'_p`: number of distinct lines through the point.
    pub reduced_multiplicity: usize,
    /// `m_p = Σ_{i ∋ p} m_i`.
    pub multiplicity: u64,
}

impl PlanePoint {
    pub fn contains(&self, line: usize) -> bool {
        self.lines.binary_search(&line).is_ok()
    }

    pub fn label(&self) -> String {
        format!("({})", self.coords.join(":"))
    }
}

#[derive(Clone, Debug)]
pub struct LineArrangement {
    multiplicities: Vec<u32>,
    points: Vec<PlanePoint>,
    /// `pair[i][j]` is the point where lines `i` and `j` meet.
    pair: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EulerReport {
    /// `χ(P^2 ∖ Z) = 3 - 2e' + Σ_p (m'_p - 1)`.
    pub complement: i64,
    /// `χ(Z ∖ Z^sing) = 2e' - Σ_p m'_p`.
    pub smooth_part: i64,
    pub census: Vec<PlanePoint>,
}

impl LineArrangement {
    /// Requires a central arrangement of rank 3; non-essential input is
    /// essentialized first.
    pub fn new(a: &Arrangement) -> Result<Self> {
        if !a.is_central() {
            return Err(Error::NotCentral);
        }
        let rank = a.rank();
        if rank != 3 {
            return Err(Error::WrongRank { expected: 3, found: rank });
        }
        let ess = a.essentialize()?;
        let normals = ess.normals();
        let e = normals.len();
        let lattice = ess.lattice();
        let mut points = Vec::new();
        let mut pair = vec![vec![usize::MAX; e]; e];
        for edge in lattice.edges().iter().filter(|x| x.codim == 2) {
            let dir = &edge.directions[0];
            let coords = linalg::primitive_integer_vector(dir)
                .iter()
                .map(|c| c.to_string())
                .collect();
            let idx = points.len();
            for &i in &edge.indices {
                for &j in &edge.indices {
                    pair[i][j] = idx;
                }
            }
            points.push(PlanePoint {
                lines: edge.indices.clone(),
                coords,
                reduced_multiplicity: edge.indices.len(),
                multiplicity: edge.mult,
            });
        }
        Ok(LineArrangement {
            multiplicities: ess.multiplicities(),
            points,
            pair,
        })
    }

    pub fn num_lines(&self) -> usize {
        self.multiplicities.len()
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.multiplicities
    }

    pub fn multiplicity(&self, line: usize) -> u32 {
        self.multiplicities[line]
    }

    pub fn degree(&self) -> u64 {
        self.multiplicities.iter().map(|&m| u64::from(m)).sum()
    }

    pub fn is_reduced(&self) -> bool {
        self.multiplicities.iter().all(|&m| m == 1)
    }

    pub fn points(&self) -> &[PlanePoint] {
        &self.points
    }

    pub fn point(&self, index: usize) -> &PlanePoint {
        &self.points[index]
    }

    /// Index of the point where two distinct lines meet.
    pub fn meet(&self, i: usize, j: usize) -> usize {
        assert_ne!(i, j, "a line does not meet itself in a point");
        self.pair[i][j]
    }

    pub fn find_point(&self, lines: &[usize]) -> Option<usize> {
        self.points.iter().position(|p| p.lines == lines)
    }

    pub fn points_on(&self, line: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.points.len()).filter(move |&p| self.points[p].contains(line))
    }

    /// `χ(Z_i°)` for the line minus all its singular points.
    pub fn line_euler(&self, line: usize) -> i64 {
        2 - self.points_on(line).count() as i64
    }

    pub fn euler_complement(&self) -> i64 {
        3 - 2 * self.num_lines() as i64
            + self.points.iter().map(|p| p.reduced_multiplicity as i64 - 1).sum::<i64>()
    }

    pub fn euler_smooth_part(&self) -> i64 {
        2 * self.num_lines() as i64 - self.points.iter().map(|p| p.reduced_multiplicity as i64).sum::<i64>()
    }

    /// Points of `Z^nnc`: three or more lines, or a line of multiplicity ≥ 2
    /// through the point. Optionally drops points on line `excluding`.
    pub fn nnc_points(&self, excluding: Option<usize>) -> Vec<usize> {
        (0..self.points.len())
            .filter(|&p| {
                let pt = &self.points[p];
                let nnc = pt.reduced_multiplicity >= 3
                    || pt.lines.iter().any(|&i| self.multiplicities[i] >= 2);
                nnc && excluding.is_none_or(|e| !pt.contains(e))
            })
            .collect()
    }

    pub fn euler_report(&self) -> EulerReport {
        EulerReport {
            complement: self.euler_complement(),
            smooth_part: self.euler_smooth_part(),
            census: self.points.clone(),
        }
    }
}

/// `χ(P^2 ∖ Z)`, `χ(Z ∖ Z^sing)` and the point census of a rank-3 central arrangement.
pub fn euler_char_proj_complement(a: &Arrangement) -> Result<EulerReport> {
    Ok(LineArrangement::new(a)?.euler_report())
}
