//! Rational hyperplane arrangements and their lattice combinatorics.
//!
//! A hyperplane is stored as `{x : a·x + c = 0}` with `(a, c)` scaled to a
//! primitive integer vector whose first nonzero normal entry is positive, so
//! equal hyperplanes have equal representations.

mod lattice;
mod matroid;
mod plane;

pub use lattice::{Edge, IntersectionLattice};
pub use matroid::{normals_connected, normal_components};
pub use plane::{euler_char_proj_complement, EulerReport, LineArrangement, PlanePoint};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, Q, RowEchelon};
use crate::rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hyperplane {
    coeffs: Vec<BigInt>,
    constant: BigInt,
    multiplicity: u32,
}

impl Hyperplane {
    pub fn new(coeffs: &[Q], constant: &Q, multiplicity: u32) -> Result<Self> {
        if coeffs.iter().all(Zero::is_zero) {
            return Err(Error::InvalidInput("hyperplane with zero normal".into()));
        }
        if multiplicity == 0 {
            return Err(Error::InvalidInput("multiplicity must be positive".into()));
        }
        let mut row = coeffs.to_vec();
        row.push(constant.clone());
        let mut ints = linalg::primitive_integer_vector(&row);
        let constant = ints.pop().unwrap();
        Ok(Hyperplane {
            coeffs: ints,
            constant,
            multiplicity,
        })
    }

    /// Linear hyperplane `a·x = 0` with integer normal.
    pub fn linear(coeffs: &[i64], multiplicity: u32) -> Result<Self> {
        Self::affine(coeffs, 0, multiplicity)
    }

    /// Affine hyperplane `a·x + c = 0` with integer data.
    pub fn affine(coeffs: &[i64], constant: i64, multiplicity: u32) -> Result<Self> {
        let a: Vec<Q> = coeffs.iter().map(|&x| linalg::q(x)).collect();
        Self::new(&a, &linalg::q(constant), multiplicity)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn constant(&self) -> &BigInt {
        &self.constant
    }

    pub fn multiplicity(&self) -> u32 {
        self.multiplicity
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_linear(&self) -> bool {
        self.constant.is_zero()
    }

    pub fn normal(&self) -> Vec<Q> {
        self.coeffs.iter().cloned().map(Q::from_integer).collect()
    }

    /// `(a, c)` as a single augmented row.
    pub fn augmented_row(&self) -> Vec<Q> {
        let mut r = self.normal();
        r.push(Q::from_integer(self.constant.clone()));
        r
    }

    pub fn with_multiplicity(&self, multiplicity: u32) -> Self {
        Hyperplane {
            multiplicity,
            ..self.clone()
        }
    }

    fn same_locus(&self, other: &Hyperplane) -> bool {
        self.coeffs == other.coeffs && self.constant == other.constant
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub central: bool,
    pub essential: bool,
    pub reduced: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    dim: usize,
    hyperplanes: Vec<Hyperplane>,
}

impl Arrangement {
    pub fn new(dim: usize, hyperplanes: Vec<Hyperplane>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidInput("ambient dimension must be positive".into()));
        }
        if hyperplanes.is_empty() {
            return Err(Error::InvalidInput("arrangement has no hyperplanes".into()));
        }
        for h in &hyperplanes {
            if h.dim() != dim {
                return Err(Error::InvalidInput(format!(
                    "hyperplane has {} coefficients, ambient dimension is {dim}",
                    h.dim()
                )));
            }
        }
        for i in 0..hyperplanes.len() {
            for j in 0..i {
                if hyperplanes[i].same_locus(&hyperplanes[j]) {
                    return Err(Error::DuplicateHyperplane(j, i));
                }
            }
        }
        Ok(Arrangement { dim, hyperplanes })
    }

    /// Central arrangement from integer normals and multiplicities.
    pub fn central(dim: usize, rows: &[(&[i64], u32)]) -> Result<Self> {
        let hs = rows
            .iter()
            .map(|(c, m)| Hyperplane::linear(c, *m))
            .collect::<Result<Vec<_>>>()?;
        Self::new(dim, hs)
    }

    /// Reduced central arrangement from integer normals.
    pub fn reduced_central(dim: usize, rows: &[&[i64]]) -> Result<Self> {
        let hs = rows
            .iter()
            .map(|c| Hyperplane::linear(c, 1))
            .collect::<Result<Vec<_>>>()?;
        Self::new(dim, hs)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    pub fn multiplicities(&self) -> Vec<u32> {
        self.hyperplanes.iter().map(Hyperplane::multiplicity).collect()
    }

    /// `d = Σ m_i`.
    pub fn degree(&self) -> u64 {
        self.hyperplanes.iter().map(|h| u64::from(h.multiplicity)).sum()
    }

    pub fn normals(&self) -> Vec<Vec<Q>> {
        self.hyperplanes.iter().map(Hyperplane::normal).collect()
    }

    /// Rank of the span of the normals.
    pub fn rank(&self) -> usize {
        linalg::rank(&self.normals())
    }

    pub fn is_central(&self) -> bool {
        self.hyperplanes.iter().all(Hyperplane::is_linear)
    }

    pub fn is_essential(&self) -> bool {
        self.rank() == self.dim
    }

    pub fn is_reduced(&self) -> bool {
        self.hyperplanes.iter().all(|h| h.multiplicity == 1)
    }

    pub fn classify(&self) -> Classification {
        Classification {
            central: self.is_central(),
            essential: self.is_essential(),
            reduced: self.is_reduced(),
        }
    }

    pub fn reduced(&self) -> Arrangement {
        Arrangement {
            dim: self.dim,
            hyperplanes: self.hyperplanes.iter().map(|h| h.with_multiplicity(1)).collect(),
        }
    }

    /// The hyperplanes at `indices`, in that order, in the same ambient space.
    pub fn subarrangement(&self, indices: &[usize]) -> Result<Arrangement> {
        let hs = indices
            .iter()
            .map(|&i| {
                self.hyperplanes
                    .get(i)
                    .cloned()
                    .ok_or(Error::IndexOutOfRange { index: i, len: self.len() })
            })
            .collect::<Result<Vec<_>>>()?;
        Arrangement::new(self.dim, hs)
    }

    /// Moves hyperplane `index` to the last position, keeping the others in order.
    pub fn with_last(&self, index: usize) -> Result<Arrangement> {
        if index >= self.len() {
            return Err(Error::IndexOutOfRange { index, len: self.len() });
        }
        let mut order: Vec<usize> = (0..self.len()).filter(|&i| i != index).collect();
        order.push(index);
        self.subarrangement(&order)
    }

    pub fn lattice(&self) -> IntersectionLattice {
        IntersectionLattice::build(self)
    }

    /// For a central arrangement, the quotient by its center: an essential
    /// arrangement of dimension `rank()` with the same hyperplane order.
    pub fn essentialize(&self) -> Result<Arrangement> {
        if !self.is_central() {
            return Err(Error::NotCentral);
        }
        if self.is_essential() {
            return Ok(self.clone());
        }
        let all: Vec<usize> = (0..self.len()).collect();
        Ok(quotient_by_indices(self, &all)?.arrangement)
    }

    pub fn to_file(&self) -> ArrangementFile {
        ArrangementFile {
            n: self.dim,
            hyperplanes: self
                .hyperplanes
                .iter()
                .map(|h| HyperplaneRecord {
                    coeffs: h.normal(),
                    constant: Q::from_integer(h.constant.clone()),
                    mult: h.multiplicity,
                })
                .collect(),
        }
    }

    pub fn from_json(text: &str) -> Result<Arrangement> {
        let file: ArrangementFile = serde_json::from_str(text)
            .map_err(|e| Error::InvalidInput(format!("arrangement file: {e}")))?;
        file.into_arrangement()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("arrangement serializes")
    }
}

/// On-disk form: `{"n": 3, "hyperplanes": [{"coeffs": ["1","0","-1"], "constant": "0", "mult": 4}]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ArrangementFile {
    pub n: usize,
    pub hyperplanes: Vec<HyperplaneRecord>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HyperplaneRecord {
    #[serde(with = "rational::vec")]
    pub coeffs: Vec<Q>,
    #[serde(with = "rational", default = "Q::zero")]
    pub constant: Q,
    #[serde(default = "one_u32")]
    pub mult: u32,
}

fn one_u32() -> u32 {
    1
}

impl ArrangementFile {
    pub fn into_arrangement(self) -> Result<Arrangement> {
        let hs = self
            .hyperplanes
            .iter()
            .map(|h| Hyperplane::new(&h.coeffs, &h.constant, h.mult))
            .collect::<Result<Vec<_>>>()?;
        Arrangement::new(self.n, hs)
    }
}

/// The localization `D/L`, with the map from its hyperplanes back to the
/// parent's indices.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub arrangement: Arrangement,
    pub parent_indices: Vec<usize>,
}

/// `D/L`: the hyperplanes containing `L`, same multiplicities, as a central
/// essential arrangement in `K^n / L`.
pub fn quotient(a: &Arrangement, edge: &Edge) -> Result<Quotient> {
    if edge.indices.is_empty() {
        return Err(Error::InvalidInput("quotient by the ambient space".into()));
    }
    quotient_by_indices(a, &edge.indices)
}

fn quotient_by_indices(a: &Arrangement, indices: &[usize]) -> Result<Quotient> {
    let normals: Vec<Vec<Q>> = indices.iter().map(|&i| a.hyperplanes[i].normal()).collect();
    let mut echelon = RowEchelon::new(a.dim);
    let mut basis = Vec::new();
    for v in &normals {
        if echelon.insert(v) {
            basis.push(v.clone());
        }
    }
    let hs = normals
        .iter()
        .zip(indices)
        .map(|(v, &i)| {
            let c = linalg::coordinates(&basis, v).expect("normal lies in the span of the basis");
            Hyperplane::new(&c, &Q::zero(), a.hyperplanes[i].multiplicity)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Quotient {
        arrangement: Arrangement::new(basis.len(), hs)?,
        parent_indices: indices.to_vec(),
    })
}

/// Matroid-connectivity test on the normals (multiplicities ignored).
pub fn is_indecomposable_by_partition(a: &Arrangement) -> Result<bool> {
    if !a.is_central() {
        return Err(Error::NotCentral);
    }
    Ok(normals_connected(&a.normals()))
}

/// `χ(U) ≠ 0` for the projective complement, via Möbius values.
pub fn is_indecomposable_by_euler(a: &Arrangement) -> Result<bool> {
    Ok(euler_characteristic(a)? != 0)
}

/// Runs the partition test; the Euler test is its independent twin and must agree.
pub fn is_indecomposable(a: &Arrangement) -> Result<bool> {
    is_indecomposable_by_partition(a)
}

/// `χ(P^{n-1} ∖ P(D))` from the characteristic polynomial.
pub fn euler_characteristic(a: &Arrangement) -> Result<i64> {
    if !a.is_central() {
        return Err(Error::NotCentral);
    }
    Ok(a.lattice().projective_euler_characteristic())
}

pub fn dense_edges(a: &Arrangement) -> Vec<Edge> {
    a.lattice().dense_edges().cloned().collect()
}

pub fn is_moderate_type(a: &Arrangement) -> bool {
    a.lattice().is_moderate_type()
}

/// The last hyperplane `D_d` is generic relative to the others: no nonzero
/// edge of `{D_j : j ≠ d}` lies inside `D_d`.
pub fn is_relatively_generic_last(a: &Arrangement) -> Result<bool> {
    if !a.is_central() {
        return Err(Error::NotCentral);
    }
    if !a.is_reduced() {
        return Err(Error::NotReduced);
    }
    let last = a.hyperplanes.last().expect("nonempty").normal();
    if a.len() == 1 {
        return Ok(true);
    }
    let rest: Vec<usize> = (0..a.len() - 1).collect();
    let sub = a.subarrangement(&rest)?;
    let lattice = sub.lattice();
    for edge in lattice.edges().iter().skip(1) {
        if edge.codim == a.dim {
            continue;
        }
        let span = RowEchelon::from_rows(
            a.dim,
            edge.indices.iter().map(|&i| sub.hyperplanes[i].normal()).collect::<Vec<_>>().iter().map(Vec::as_slice),
        );
        if span.contains(&last) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `Σ_{i ∈ indices} m_i`.
pub(crate) fn multiplicity_of(a: &Arrangement, indices: &[usize]) -> u64 {
    indices.iter().map(|&i| u64::from(a.hyperplanes[i].multiplicity)).sum()
}
