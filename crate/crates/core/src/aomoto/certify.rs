//! Search for root certificates and replay them.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{subsets, Cohomology, Convention, RankThree, WeightSystem};
use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::linalg::Q;
use crate::rational;

/// How a certificate was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    /// Nonresonance plus `V(I) ≠ 0` checked in the Aomoto complex.
    AomotoDirect,
    /// Conditions (a), (b), (c) on weights and incidences.
    IncidenceConditions,
    /// A point of multiplicity `> 2d/3` with an auxiliary line.
    DominantPoint,
}

impl Route {
    pub const ALL: [Route; 3] = [Route::AomotoDirect, Route::IncidenceConditions, Route::DominantPoint];

    pub fn name(self) -> &'static str {
        match self {
            Route::AomotoDirect => "aomoto-direct",
            Route::IncidenceConditions => "incidence-conditions",
            Route::DominantPoint => "dominant-point",
        }
    }

    pub fn from_name(s: &str) -> Option<Route> {
        Route::ALL.into_iter().find(|r| r.name() == s)
    }

    fn checks(self) -> &'static [&'static str] {
        match self {
            Route::AomotoDirect => &["sum-zero", "stv", "v-image-nonzero"],
            Route::IncidenceConditions => &["sum-zero", "condition-a", "condition-b", "condition-c"],
            Route::DominantPoint => &[
                "sum-zero",
                "reduced",
                "dominant-point",
                "infinity-multiplicity",
                "auxiliary-double-points",
                "stv",
                "v-image-nonzero",
            ],
        }
    }
}

/// A point of the line arrangement, by its lines and coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointRef {
    pub lines: Vec<usize>,
    pub coords: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootCertificate {
    #[serde(with = "rational")]
    pub root: Q,
    pub k: u32,
    pub route: Route,
    pub convention: Convention,
    pub infinity: usize,
    pub subset: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p0: Option<PointRef>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub auxiliary: Option<usize>,
    /// `(h0, h1, h2)` of the Aomoto complex, for routes that build it.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cohomology: Option<[usize; 3]>,
    pub checks: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifyOptions {
    pub k: u32,
    pub convention: Convention,
    pub routes: Vec<Route>,
    pub infinity: Option<usize>,
    /// Lines through a forced `p0`.
    pub p0: Option<Vec<usize>>,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            k: 3,
            convention: Convention::Standard,
            routes: Route::ALL.to_vec(),
            infinity: None,
            p0: None,
        }
    }
}

impl CertifyOptions {
    /// `k` from a root `-k/d`.
    pub fn with_root(mut self, root: &Q, d: u64) -> Result<Self> {
        let k = -(root * Q::from_integer(BigInt::from(d)));
        let bad = || Error::InvalidInput(format!("root {root} is not of the form -k/{d} with 0 < k < {d}"));
        if !k.is_integer() {
            return Err(bad());
        }
        let k = u32::try_from(k.to_integer()).map_err(|_| bad())?;
        if k == 0 || u64::from(k) >= d {
            return Err(bad());
        }
        self.k = k;
        Ok(self)
    }
}

fn point_ref(rt: &RankThree, p: usize) -> PointRef {
    let pt = rt.lines().point(p);
    PointRef {
        lines: pt.lines.clone(),
        coords: pt.coords.clone(),
    }
}

fn cohomology_triple(c: Cohomology) -> [usize; 3] {
    [c.h0, c.h1, c.h2]
}

fn owned(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

fn try_route(rt: &RankThree, ws: &WeightSystem, route: Route, forced_p0: Option<usize>) -> Option<RootCertificate> {
    let base = |p0: Option<usize>, auxiliary, cohomology| RootCertificate {
        root: ws.root(),
        k: ws.k,
        route,
        convention: ws.convention,
        infinity: ws.infinity,
        subset: ws.subset.clone(),
        p0: p0.map(|p| point_ref(rt, p)),
        auxiliary,
        cohomology,
        checks: owned(route.checks()),
    };
    match route {
        Route::AomotoDirect => {
            if forced_p0.is_some() || !rt.stv_condition(ws) || !rt.v_image_nonzero(ws) {
                return None;
            }
            let h = rt.complex(ws).cohomology();
            Some(base(None, None, Some(cohomology_triple(h))))
        }
        Route::IncidenceConditions => {
            if ws.k != 3 || ws.convention != Convention::Standard {
                return None;
            }
            let p0 = rt.condition_b(ws)?;
            if forced_p0.is_some_and(|f| f != p0) {
                return None;
            }
            if !rt.condition_a(ws) || !rt.condition_c(ws, p0) {
                return None;
            }
            Some(base(Some(p0), None, None))
        }
        Route::DominantPoint => {
            if ws.subset.len() != 2 {
                return None;
            }
            let p0 = rt.lines().meet(ws.subset[0], ws.subset[1]);
            if forced_p0.is_some_and(|f| f != p0) {
                return None;
            }
            match rt.check_dominant_route(ws, p0) {
                Ok((true, aux)) => {
                    let h = rt.complex(ws).cohomology();
                    Some(base(Some(p0), Some(aux), Some(cohomology_triple(h))))
                }
                _ => None,
            }
        }
    }
}

pub fn certify_root(a: &Arrangement) -> Result<Option<RootCertificate>> {
    certify_root_with(a, &CertifyOptions::default())
}

/// Tries every `(e, I)` with `e` ascending and `I` lexicographic, and for
/// each the requested routes in order. The first success wins; the search
/// runs in parallel but the answer does not depend on scheduling.
pub fn certify_root_with(a: &Arrangement, opts: &CertifyOptions) -> Result<Option<RootCertificate>> {
    let rt = RankThree::new(a)?;
    certify_in(&rt, opts)
}

pub(crate) fn certify_in(rt: &RankThree, opts: &CertifyOptions) -> Result<Option<RootCertificate>> {
    let n = rt.num_lines();
    let d = rt.degree();
    if opts.k == 0 || u64::from(opts.k) >= d {
        return Err(Error::InvalidInput(format!("k = {} must satisfy 0 < k < d = {d}", opts.k)));
    }
    if let Some(e) = opts.infinity {
        if e >= n {
            return Err(Error::IndexOutOfRange { index: e, len: n });
        }
    }
    let forced_p0 = match &opts.p0 {
        None => None,
        Some(lines) => {
            let mut l = lines.clone();
            l.sort_unstable();
            Some(
                rt.lines()
                    .find_point(&l)
                    .ok_or_else(|| Error::InvalidInput(format!("no intersection point with lines {lines:?}")))?,
            )
        }
    };
    let size = opts.convention.subset_size(opts.k);
    let mut candidates = Vec::new();
    for e in 0..n {
        if opts.infinity.is_some_and(|f| f != e) {
            continue;
        }
        let rest: Vec<usize> = (0..n).filter(|&i| i != e).collect();
        for sub in subsets(&rest, size) {
            candidates.push((e, sub));
        }
    }
    let found = candidates.par_iter().find_map_first(|(e, sub)| {
        let ws = rt.weight_system(*e, sub, opts.k, opts.convention).ok()?;
        opts.routes.iter().find_map(|&r| try_route(rt, &ws, r, forced_p0))
    });
    Ok(found)
}

/// Outcome of replaying a certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub ok: bool,
    pub failed: Vec<String>,
}

/// Recomputes every check listed for the certificate's route from the
/// witness alone.
pub fn verify(a: &Arrangement, cert: &RootCertificate) -> Result<Verification> {
    let rt = RankThree::new(a)?;
    let ws = rt.weight_system(cert.infinity, &cert.subset, cert.k, cert.convention)?;
    let mut failed = Vec::new();
    let mut fail = |name: &str| failed.push(name.to_string());

    if ws.root() != cert.root {
        fail("root");
    }
    if cert.checks != owned(cert.route.checks()) {
        fail("check-list");
    }
    let p0 = match &cert.p0 {
        Some(p) => match rt.lines().find_point(&p.lines) {
            Some(idx) if rt.lines().point(idx).coords == p.coords => Some(idx),
            _ => {
                fail("p0");
                None
            }
        },
        None => None,
    };
    let cohomology = || cohomology_triple(rt.complex(&ws).cohomology());

    for check in cert.route.checks() {
        let ok = match *check {
            "sum-zero" => ws.sum_is_zero(),
            "stv" => rt.stv_condition(&ws),
            "v-image-nonzero" => rt.v_image_nonzero(&ws),
            "condition-a" => rt.condition_a(&ws),
            "condition-b" => p0.is_some_and(|p| rt.condition_b_points(&ws).contains(&p)),
            "condition-c" => p0.is_some_and(|p| rt.condition_c(&ws, p)),
            "reduced" => rt.lines().is_reduced(),
            "dominant-point" => p0.is_some_and(|p| {
                let pt = rt.lines().point(p);
                3 * pt.multiplicity > 2 * rt.degree()
                    && !pt.contains(ws.infinity)
                    && ws.subset.iter().all(|&i| pt.contains(i))
            }),
            "infinity-multiplicity" => ws.subset.iter().all(|&i| rt.infinity_meet_ok(ws.infinity, i)),
            "auxiliary-double-points" => match (p0, cert.auxiliary) {
                (Some(p), Some(x)) => {
                    let l = rt.lines();
                    x < rt.num_lines()
                        && x != ws.infinity
                        && !l.point(p).contains(x)
                        && ws.subset.iter().all(|&i| l.point(l.meet(i, x)).reduced_multiplicity == 2)
                }
                _ => false,
            },
            _ => false,
        };
        if !ok {
            fail(check);
        }
    }
    if cert.route != Route::IncidenceConditions && cert.p0.is_none() != (cert.route == Route::AomotoDirect) {
        fail("p0");
    }
    if let Some(h) = cert.cohomology {
        if h != cohomology() {
            fail("cohomology");
        }
    }
    Ok(Verification {
        ok: failed.is_empty(),
        failed,
    })
}
