//! Weight systems, the nonresonance and incidence conditions, and the
//! Aomoto complex of a rank-3 central arrangement, leading to certificates
//! that `-k/d` is a root of the Bernstein–Sato polynomial.
//!
//! Indices are hyperplane positions in the input arrangement (0-based).
//! The line `e` (the "infinity" index) is removed to form the affine chart
//! `P^2 ∖ Z_e`.

mod certify;
mod complex;

pub use certify::{
    certify_root, certify_root_with, verify, CertifyOptions, PointRef, RootCertificate, Route, Verification,
};
pub use complex::{AomotoComplex, Block, Cohomology};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arrangement::{Arrangement, LineArrangement};
use crate::error::{Error, Result};
use crate::linalg::{self, Q};

/// Which hyperplanes get the `+1` shift in the weights.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Convention {
    /// `|I| = k - 1`, shift on `I ∪ {e}`.
    #[default]
    Standard,
    /// `|I| = k`, shift on `I` only.
    InfinityExcluded,
}

impl Convention {
    pub fn subset_size(self, k: u32) -> usize {
        match self {
            Convention::Standard => k as usize - 1,
            Convention::InfinityExcluded => k as usize,
        }
    }
}

/// An essential rank-3 central arrangement with the data the conditions
/// need: its projective lines and nonzero dense edges.
#[derive(Clone, Debug)]
pub struct RankThree {
    arrangement: Arrangement,
    lines: LineArrangement,
    /// Nonzero dense edges, as hyperplane index sets.
    dense: Vec<Vec<usize>>,
}

impl RankThree {
    pub fn new(a: &Arrangement) -> Result<RankThree> {
        if !a.is_central() {
            return Err(Error::NotCentral);
        }
        let rank = a.rank();
        if rank != 3 {
            return Err(Error::WrongRank { expected: 3, found: rank });
        }
        if !a.is_essential() {
            return Err(Error::NotEssential);
        }
        let lattice = a.lattice();
        let dense = lattice
            .dense_edges()
            .filter(|e| e.codim < 3)
            .map(|e| e.indices.clone())
            .collect();
        Ok(RankThree {
            arrangement: a.clone(),
            lines: LineArrangement::new(a)?,
            dense,
        })
    }

    pub fn arrangement(&self) -> &Arrangement {
        &self.arrangement
    }

    pub fn lines(&self) -> &LineArrangement {
        &self.lines
    }

    pub fn degree(&self) -> u64 {
        self.lines.degree()
    }

    pub fn num_lines(&self) -> usize {
        self.lines.num_lines()
    }

    /// Point index of the point with projective coordinates `coords`.
    pub fn point_by_coords(&self, coords: &[Q]) -> Option<usize> {
        let prim: Vec<String> = linalg::primitive_integer_vector(coords)
            .iter()
            .map(|c| c.to_string())
            .collect();
        self.lines.points().iter().position(|p| p.coords == prim)
    }

    pub fn weight_system(&self, infinity: usize, subset: &[usize], k: u32, convention: Convention) -> Result<WeightSystem> {
        WeightSystem::new(self, infinity, subset, k, convention)
    }

    fn on_infinity(&self, ws: &WeightSystem, p: usize) -> bool {
        self.lines.point(p).contains(ws.infinity)
    }

    /// `α_L ∉ Z_{>0}` for every nonzero dense edge.
    pub fn stv_condition(&self, ws: &WeightSystem) -> bool {
        self.dense.iter().all(|l| !is_positive_integer(&ws.alpha_sum(l)))
    }

    /// `α_p ∉ Z_{>0}` for every point of `Z^nnc`.
    pub fn condition_a(&self, ws: &WeightSystem) -> bool {
        self.lines
            .nnc_points(None)
            .into_iter()
            .all(|p| !is_positive_integer(&ws.alpha_sum(&self.lines.point(p).lines)))
    }

    /// `Σ^I`: points of `Z^nnc ∖ Z_e` with `α_p = 0`.
    pub fn sigma_set(&self, ws: &WeightSystem) -> Vec<usize> {
        self.lines
            .nnc_points(Some(ws.infinity))
            .into_iter()
            .filter(|&p| ws.alpha_sum(&self.lines.point(p).lines).is_zero())
            .collect()
    }

    /// Singular points of `∪_{i∈I} Z_i` off `Z_e`, i.e. points where at
    /// least two lines of `I` meet.
    pub fn condition_b_points(&self, ws: &WeightSystem) -> Vec<usize> {
        (0..self.lines.points().len())
            .filter(|&p| {
                let pt = self.lines.point(p);
                !pt.contains(ws.infinity) && ws.subset.iter().filter(|&&i| pt.contains(i)).count() >= 2
            })
            .collect()
    }

    /// The first point witnessing condition (b), if any.
    pub fn condition_b(&self, ws: &WeightSystem) -> Option<usize> {
        self.condition_b_points(ws).into_iter().next()
    }

    /// `Z ∖ (Z_e ∪ Σ^I ∪ {p0})` is connected: the lines other than `e` form
    /// a connected graph, two lines being adjacent when they share a point
    /// outside the removed set.
    pub fn condition_c(&self, ws: &WeightSystem, p0: usize) -> bool {
        let sigma = self.sigma_set(ws);
        let chart: Vec<usize> = (0..self.num_lines()).filter(|&i| i != ws.infinity).collect();
        let mut seen = vec![false; self.num_lines()];
        let mut stack = vec![chart[0]];
        seen[chart[0]] = true;
        while let Some(i) = stack.pop() {
            for &j in &chart {
                if seen[j] || j == i {
                    continue;
                }
                let p = self.lines.meet(i, j);
                if p == p0 || sigma.contains(&p) || self.on_infinity(ws, p) {
                    continue;
                }
                seen[j] = true;
                stack.push(j);
            }
        }
        chart.iter().all(|&i| seen[i])
    }

    pub fn complex(&self, ws: &WeightSystem) -> AomotoComplex {
        AomotoComplex::new(self, ws)
    }

    /// Some `e_J` with `J ⊂ I`, `|J| = 2`, is not in the image of
    /// `ω_I ∧ : A¹ → A²`.
    pub fn v_image_nonzero(&self, ws: &WeightSystem) -> bool {
        let cx = self.complex(ws);
        pairs(&ws.subset).any(|(i, j)| !cx.in_image(&cx.wedge(self, i, j)))
    }

    /// Lines through `p0` usable in the dominant-point argument with line
    /// `e` at infinity. Reducedness is not checked here.
    pub fn dominant_point_witnesses(&self, infinity: usize, forced_p0: Option<usize>) -> Vec<DominantWitness> {
        let d = self.degree();
        let l = &self.lines;
        let mut out = Vec::new();
        for (p0, pt) in l.points().iter().enumerate() {
            if forced_p0.is_some_and(|f| f != p0) || pt.contains(infinity) || 3 * pt.multiplicity <= 2 * d {
                continue;
            }
            for (i, j) in pairs(&pt.lines) {
                if let Some(auxiliary) = self.dominant_auxiliary(infinity, p0, i, j) {
                    out.push(DominantWitness {
                        p0,
                        subset: vec![i, j],
                        auxiliary,
                    });
                }
            }
        }
        out
    }

    fn infinity_meet_ok(&self, infinity: usize, i: usize) -> bool {
        let q = self.lines.meet(i, infinity);
        3 * self.lines.point(q).multiplicity != self.degree()
    }

    fn dominant_auxiliary(&self, infinity: usize, p0: usize, i: usize, j: usize) -> Option<usize> {
        let l = &self.lines;
        if !self.infinity_meet_ok(infinity, i) || !self.infinity_meet_ok(infinity, j) {
            return None;
        }
        (0..self.num_lines()).find(|&x| {
            x != infinity
                && !l.point(p0).contains(x)
                && l.point(l.meet(i, x)).reduced_multiplicity == 2
                && l.point(l.meet(j, x)).reduced_multiplicity == 2
        })
    }

    /// Checks the hypotheses of the dominant-point argument for `ws` and
    /// `p0`, then decides `e_I ∉ im(ω_I ∧)` by an exact solve.
    pub fn check_dominant_route(&self, ws: &WeightSystem, p0: usize) -> std::result::Result<(bool, usize), RouteViolation> {
        if ws.k != 3 || ws.convention != Convention::Standard || ws.subset.len() != 2 {
            return Err(RouteViolation::Setting);
        }
        if !self.lines.is_reduced() {
            return Err(RouteViolation::NotReduced);
        }
        let pt = self.lines.point(p0);
        if pt.contains(ws.infinity) {
            return Err(RouteViolation::PointAtInfinity);
        }
        if 3 * pt.multiplicity <= 2 * self.degree() {
            return Err(RouteViolation::PointNotDominant);
        }
        let (i, j) = (ws.subset[0], ws.subset[1]);
        if !pt.contains(i) || !pt.contains(j) {
            return Err(RouteViolation::LineMissesPoint);
        }
        if !self.infinity_meet_ok(ws.infinity, i) || !self.infinity_meet_ok(ws.infinity, j) {
            return Err(RouteViolation::InfinityMultiplicity);
        }
        let Some(aux) = self.dominant_auxiliary(ws.infinity, p0, i, j) else {
            return Err(RouteViolation::NoAuxiliaryLine);
        };
        if !self.stv_condition(ws) {
            return Err(RouteViolation::Resonant);
        }
        let cx = self.complex(ws);
        Ok((!cx.in_image(&cx.wedge(self, i, j)), aux))
    }
}

/// A choice of `p0`, two lines through it and an auxiliary line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DominantWitness {
    pub p0: usize,
    pub subset: Vec<usize>,
    pub auxiliary: usize,
}

/// Why the dominant-point argument does not apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RouteViolation {
    /// Needs `k = 3`, the standard convention and `|I| = 2`.
    Setting,
    NotReduced,
    PointAtInfinity,
    PointNotDominant,
    LineMissesPoint,
    InfinityMultiplicity,
    NoAuxiliaryLine,
    Resonant,
}

impl std::fmt::Display for RouteViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = serde_json::to_value(self).expect("unit variant");
        f.write_str(s.as_str().unwrap_or("violation"))
    }
}

/// `α^I` for a choice of infinity line, subset and `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSystem {
    pub infinity: usize,
    pub subset: Vec<usize>,
    pub k: u32,
    pub convention: Convention,
    pub degree: u64,
    pub alpha: Vec<Q>,
}

impl WeightSystem {
    pub fn new(rt: &RankThree, infinity: usize, subset: &[usize], k: u32, convention: Convention) -> Result<WeightSystem> {
        let n = rt.num_lines();
        let d = rt.degree();
        if infinity >= n {
            return Err(Error::IndexOutOfRange { index: infinity, len: n });
        }
        if k == 0 || u64::from(k) >= d {
            return Err(Error::InvalidInput(format!("k = {k} must satisfy 0 < k < d = {d}")));
        }
        let mut subset = subset.to_vec();
        subset.sort_unstable();
        subset.dedup();
        if let Some(&bad) = subset.iter().find(|&&i| i >= n) {
            return Err(Error::IndexOutOfRange { index: bad, len: n });
        }
        if subset.contains(&infinity) {
            return Err(Error::InvalidInput("the infinity index may not lie in the subset".into()));
        }
        let expected = convention.subset_size(k);
        if subset.len() != expected {
            return Err(Error::SizeMismatch {
                expected,
                found: subset.len(),
            });
        }
        let kd = Q::new(k.into(), d.into());
        let alpha: Vec<Q> = (0..n)
            .map(|i| {
                let base = -(&kd * Q::from_integer(rt.lines.multiplicity(i).into()));
                let shifted = subset.contains(&i) || (convention == Convention::Standard && i == infinity);
                if shifted {
                    base + Q::one()
                } else {
                    base
                }
            })
            .collect();
        let ws = WeightSystem {
            infinity,
            subset,
            k,
            convention,
            degree: d,
            alpha,
        };
        assert!(ws.sum_is_zero(), "weights must sum to zero");
        Ok(ws)
    }

    pub fn sum_is_zero(&self) -> bool {
        self.alpha.iter().fold(Q::zero(), |acc, a| acc + a).is_zero()
    }

    /// `α_L = Σ_{i ∈ L} α_i`.
    pub fn alpha_sum(&self, lines: &[usize]) -> Q {
        lines.iter().fold(Q::zero(), |acc, &i| acc + &self.alpha[i])
    }

    /// `-k/d`.
    pub fn root(&self) -> Q {
        -Q::new(self.k.into(), self.degree.into())
    }
}

fn is_positive_integer(x: &Q) -> bool {
    x.is_integer() && x.is_positive()
}

fn pairs(v: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    v.iter()
        .enumerate()
        .flat_map(move |(a, &i)| v[a + 1..].iter().map(move |&j| (i, j)))
}

/// All `r`-element subsets of `items`, lexicographic.
pub(crate) fn subsets(items: &[usize], r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(r);
    fn rec(items: &[usize], r: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < r - cur.len() {
                break;
            }
            cur.push(items[i]);
            rec(items, r, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, r, 0, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests;
