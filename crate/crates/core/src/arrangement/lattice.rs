use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use super::{matroid, Arrangement};
use crate::linalg::{Q, RowEchelon};
use crate::rational;

/// A nonempty intersection of hyperplanes (a flat).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Edge {
    /// Every hyperplane containing the flat, ascending.
    pub indices: Vec<usize>,
    /// `n(L)`.
    pub codim: usize,
    /// `d(L) = Σ_{D_i ⊃ L} m_i`.
    pub mult: u64,
    /// A point on the flat.
    #[serde(with = "rational::vec")]
    pub point: Vec<Q>,
    /// Basis of the direction space.
    #[serde(skip)]
    pub directions: Vec<Vec<Q>>,
    /// `D/L` is indecomposable. The ambient space is never dense.
    pub dense: bool,
}

impl Edge {
    pub fn dim(&self) -> usize {
        self.directions.len()
    }

    /// `n(L)/d(L)`.
    pub fn ratio(&self) -> Q {
        Q::new((self.codim as i64).into(), (self.mult as i64).into())
    }

    pub fn contains_hyperplane(&self, index: usize) -> bool {
        self.indices.binary_search(&index).is_ok()
    }

    /// `self ⊆ other` as subspaces.
    pub fn is_inside(&self, other: &Edge) -> bool {
        other.indices.iter().all(|i| self.contains_hyperplane(*i))
    }
}

/// All flats of an arrangement, ambient space first, sorted by
/// `(codim, indices)`, with Möbius values `μ(X̂, L)`.
#[derive(Clone, Debug)]
pub struct IntersectionLattice {
    dim: usize,
    hyperplanes: usize,
    edges: Vec<Edge>,
    mobius: Vec<i64>,
}

impl IntersectionLattice {
    pub fn build(a: &Arrangement) -> Self {
        let n = a.dim();
        let rows: Vec<Vec<Q>> = a.hyperplanes().iter().map(|h| h.augmented_row()).collect();

        // Saturated index set -> echelon form of its augmented system.
        let mut found: BTreeMap<Vec<usize>, RowEchelon> = BTreeMap::new();
        let mut frontier = vec![(Vec::<usize>::new(), RowEchelon::new(n + 1))];
        found.insert(Vec::new(), RowEchelon::new(n + 1));
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for (indices, echelon) in &frontier {
                for (h, row) in rows.iter().enumerate() {
                    if indices.binary_search(&h).is_ok() {
                        continue;
                    }
                    let mut e = echelon.clone();
                    e.insert(row);
                    if e.pivots().contains(&n) {
                        // inconsistent: empty intersection
                        continue;
                    }
                    let saturated: Vec<usize> = (0..rows.len()).filter(|&j| e.contains(&rows[j])).collect();
                    if !found.contains_key(&saturated) {
                        found.insert(saturated.clone(), e.clone());
                        next.push((saturated, e));
                    }
                }
            }
            frontier = next;
        }

        let mut edges: Vec<Edge> = found
            .into_iter()
            .map(|(indices, echelon)| {
                let codim = echelon.rank();
                let mut point = vec![Q::zero(); n];
                for (row, &p) in echelon.rows().iter().zip(echelon.pivots()) {
                    point[p] = -row[n].clone();
                }
                let linear = RowEchelon::from_rows(
                    n,
                    indices.iter().map(|&i| a.hyperplanes()[i].normal()).collect::<Vec<_>>().iter().map(Vec::as_slice),
                );
                let directions = linear.kernel();
                let dense = !indices.is_empty()
                    && matroid::normals_connected(
                        &indices.iter().map(|&i| a.hyperplanes()[i].normal()).collect::<Vec<_>>(),
                    );
                Edge {
                    mult: super::multiplicity_of(a, &indices),
                    indices,
                    codim,
                    point,
                    directions,
                    dense,
                }
            })
            .collect();
        edges.sort_by(|x, y| (x.codim, &x.indices).cmp(&(y.codim, &y.indices)));

        let mut mobius = vec![0i64; edges.len()];
        for j in 0..edges.len() {
            if j == 0 {
                mobius[0] = 1;
                continue;
            }
            let below: i64 = (0..j)
                .filter(|&i| edges[i].codim < edges[j].codim && edges[j].is_inside(&edges[i]))
                .map(|i| mobius[i])
                .sum();
            mobius[j] = -below;
        }
        IntersectionLattice {
            dim: n,
            hyperplanes: a.len(),
            edges,
            mobius,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn mobius(&self) -> &[i64] {
        &self.mobius
    }

    pub fn find(&self, indices: &[usize]) -> Option<usize> {
        self.edges.iter().position(|e| e.indices == indices)
    }

    /// Edges other than the ambient space.
    pub fn proper_edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter().skip(1)
    }

    pub fn dense_edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(|e| e.dense)
    }

    /// `L ≤ M` in the lattice order, i.e. `M ⊆ L`.
    pub fn is_below(&self, lower: usize, upper: usize) -> bool {
        self.edges[upper].is_inside(&self.edges[lower])
    }

    /// For a dense edge `L`: `n(L)/d(L) ≤ n(L')/d(L')` for every dense `L' ⊇ L`.
    /// Returns `None` if `L` is not dense.
    pub fn is_good_dense_edge(&self, index: usize) -> Option<bool> {
        let edge = &self.edges[index];
        if !edge.dense {
            return None;
        }
        let r = edge.ratio();
        Some(
            self.dense_edges()
                .filter(|other| edge.is_inside(other))
                .all(|other| r <= other.ratio()),
        )
    }

    pub fn is_moderate_type(&self) -> bool {
        (0..self.edges.len()).all(|i| self.is_good_dense_edge(i) != Some(false))
    }

    /// The intersection of all hyperplanes, when it is nonempty.
    pub fn center(&self) -> Option<usize> {
        self.edges.iter().position(|e| e.indices.len() == self.hyperplanes)
    }

    /// Coefficients of `π(M, t) = Σ_L μ(L)(-t)^{codim L}`, ascending.
    pub fn poincare_polynomial(&self) -> Vec<i64> {
        let top = self.edges.iter().map(|e| e.codim).max().unwrap_or(0);
        let mut coeffs = vec![0i64; top + 1];
        for (e, mu) in self.edges.iter().zip(&self.mobius) {
            let sign = if e.codim % 2 == 0 { 1 } else { -1 };
            coeffs[e.codim] += sign * mu;
        }
        coeffs
    }

    /// `χ(P^{n-1} ∖ Z)` for a central arrangement: `π(M, t) = (1 + t) π(U, t)`,
    /// evaluated at `t = -1`.
    pub fn projective_euler_characteristic(&self) -> i64 {
        let p = self.poincare_polynomial();
        // synthetic division by (1 + t), highest degree first
        let mut quotient = vec![0i64; p.len().saturating_sub(1)];
        let mut carry = 0i64;
        for k in (1..p.len()).rev() {
            let c = p[k] - carry;
            quotient[k - 1] = c;
            carry = c;
        }
        debug_assert_eq!(p[0] - carry, 0, "central arrangement Poincaré polynomial divisible by 1+t");
        quotient
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 0 { *c } else { -*c })
            .sum()
    }
}
