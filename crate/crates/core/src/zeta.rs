//! Topological local zeta functions at the origin for central arrangements
//! of rank at most three, candidate poles at any rank, and pole reports.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

use crate::arrangement::{self, Arrangement, LineArrangement};
use crate::error::{Error, Result};
use crate::linalg::Q;
use crate::rational;
use crate::ratfunc::RationalFunction;

/// A candidate pole `-n(L)/d(L)` with the first dense edge producing it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CandidatePole {
    #[serde(with = "rational")]
    pub value: Q,
    pub witness: Vec<usize>,
    pub codim: usize,
    pub mult: u64,
}

/// Real part `-n/d` and divisor multiplicity `m = d` of a p-adic candidate
/// family `-n/m + 2πi k/(m log q)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PadicCandidate {
    #[serde(with = "rational")]
    pub real_part: Q,
    pub m: u64,
    pub witness: Vec<usize>,
}

/// `{-n(L)/d(L) : L dense}`, deduplicated by value in lattice order. Every
/// hyperplane is a dense edge, so `-1/m_i` is always included.
pub fn candidate_poles(a: &Arrangement) -> Vec<CandidatePole> {
    let mut out: Vec<CandidatePole> = Vec::new();
    for e in a.lattice().dense_edges() {
        let value = -e.ratio();
        if out.iter().all(|c| c.value != value) {
            out.push(CandidatePole {
                value,
                witness: e.indices.clone(),
                codim: e.codim,
                mult: e.mult,
            });
        }
    }
    out
}

pub fn padic_candidates(a: &Arrangement) -> Vec<PadicCandidate> {
    let mut out: Vec<PadicCandidate> = Vec::new();
    for e in a.lattice().dense_edges() {
        let real_part = -e.ratio();
        if out.iter().all(|c| c.real_part != real_part || c.m != e.mult) {
            out.push(PadicCandidate {
                real_part,
                m: e.mult,
                witness: e.indices.clone(),
            });
        }
    }
    out
}

fn inv(a: u64, b: i64) -> RationalFunction {
    RationalFunction::inv_linear(a as i64, b).expect("positive slope")
}

fn int(n: i64) -> RationalFunction {
    RationalFunction::integer(n)
}

/// `1/(m s + 1)`.
pub fn zeta_rank1(m: u32) -> RationalFunction {
    inv(u64::from(m), 1)
}

/// `1/(d s + 2) · (2 - e + Σ 1/(m_i s + 1))` for a pencil of `e` lines.
pub fn rank2_closed_form(mults: &[u32]) -> RationalFunction {
    let d: u64 = mults.iter().map(|&m| u64::from(m)).sum();
    let inner = mults
        .iter()
        .fold(int(2 - mults.len() as i64), |acc, &m| &acc + &zeta_rank1(m));
    &inv(d, 2) * &inner
}

/// `2 - e + Σ d/(d - 2m_i)`, or `None` when some `2 m_i = d`.
pub fn rank2_coefficient(mults: &[u32]) -> Option<Q> {
    let d: i64 = mults.iter().map(|&m| i64::from(m)).sum();
    let mut c = Q::from_integer((2 - mults.len() as i64).into());
    for &m in mults {
        let den = d - 2 * i64::from(m);
        if den == 0 {
            return None;
        }
        c += Q::new(d.into(), den.into());
    }
    Some(c)
}

/// How the plane-curve singular points are resolved. Both give the same
/// zeta function.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Resolution {
    /// Blow up every singular point of the projective line arrangement.
    AllSingularPoints,
    /// Leave ordinary double points alone; they contribute `1/((m_i s+1)(m_j s+1))`.
    SkipDoublePoints,
}

fn rank3_pencils(a: &Arrangement) -> Result<LineArrangement> {
    if !a.is_central() {
        return Err(Error::NotCentral);
    }
    LineArrangement::new(a)
}

/// Zeta function of a rank-3 central arrangement, any multiplicities.
pub fn zeta_rank3(a: &Arrangement) -> Result<RationalFunction> {
    zeta_rank3_with(a, Resolution::AllSingularPoints)
}

pub fn zeta_rank3_with(a: &Arrangement, resolution: Resolution) -> Result<RationalFunction> {
    let l = rank3_pencils(a)?;
    Ok(zeta_of_lines(&l, resolution))
}

fn zeta_of_lines(l: &LineArrangement, resolution: Resolution) -> RationalFunction {
    let d = l.degree();
    let m = |i: usize| zeta_rank1(l.multiplicity(i));
    let mut inner = int(l.euler_complement());
    for i in 0..l.num_lines() {
        inner = &inner + &m(i).scale(&Q::from_integer(l.line_euler(i).into()));
    }
    for p in l.points() {
        if resolution == Resolution::SkipDoublePoints && p.reduced_multiplicity == 2 {
            inner = &inner + &(&m(p.lines[0]) * &m(p.lines[1]));
            continue;
        }
        let term = p
            .lines
            .iter()
            .fold(int(2 - p.reduced_multiplicity as i64), |acc, &i| &acc + &m(i));
        inner = &inner + &(&term * &inv(p.multiplicity, 2));
    }
    &inv(d, 3) * &inner
}

/// The closed form for reduced rank-3 arrangements, built from `χ(P²∖Z)`,
/// `χ(Z∖Z^sing)` and the census `ν_m`.
pub fn reduced_rank3_closed_form(a: &Arrangement) -> Result<RationalFunction> {
    if !a.is_reduced() {
        return Err(Error::NotReduced);
    }
    let l = rank3_pencils(a)?;
    let d = l.degree();
    let s1 = inv(1, 1);
    let mut inner = &int(l.euler_complement()) + &s1.scale(&Q::from_integer(l.euler_smooth_part().into()));
    for (mult, nu) in census(&l) {
        let m = mult as i64;
        let term = &int(2 - m) + &s1.scale(&Q::from_integer(m.into()));
        inner = &inner + &(&term * &inv(mult, 2)).scale(&Q::from_integer(nu.into()));
    }
    Ok(&inv(d, 3) * &inner)
}

/// `ν_m`: number of points with `m` lines through them.
fn census(l: &LineArrangement) -> BTreeMap<u64, i64> {
    let mut nu = BTreeMap::new();
    for p in l.points() {
        *nu.entry(p.reduced_multiplicity as u64).or_insert(0) += 1;
    }
    nu
}

/// `d/3 ∈ Z` and `ν_{2d/3} ≠ 0`, for reduced rank-3 input with `d > 3`.
pub fn reduced_rank3_order_two(a: &Arrangement) -> Result<Option<bool>> {
    if !a.is_reduced() {
        return Err(Error::NotReduced);
    }
    let l = rank3_pencils(a)?;
    let d = l.degree();
    if d <= 3 {
        return Ok(None);
    }
    Ok(Some(d % 3 == 0 && census(&l).get(&(2 * d / 3)).is_some_and(|&n| n > 0)))
}

/// `9/(d-3) · (d - 1 + Σ_{m ≠ 2d/3} m(m-1)/(2d-3m) ν_m)`, defined for
/// reduced rank-3 input with `d > 3` and no double pole.
pub fn reduced_rank3_coefficient(a: &Arrangement) -> Result<Option<Q>> {
    if reduced_rank3_order_two(a)? != Some(false) {
        return Ok(None);
    }
    let l = rank3_pencils(a)?;
    let d = l.degree() as i64;
    let mut sum = Q::from_integer((d - 1).into());
    for (mult, nu) in census(&l) {
        let m = mult as i64;
        sum += Q::new((m * (m - 1) * nu).into(), (2 * d - 3 * m).into());
    }
    Ok(Some(sum * Q::new(9.into(), (d - 3).into())))
}

/// The zeta function at the origin of a central arrangement of rank ≤ 3,
/// computed on its essentialization.
pub fn zeta(a: &Arrangement) -> Result<RationalFunction> {
    let ess = a.essentialize()?;
    match ess.rank() {
        1 => Ok(zeta_rank1(ess.hyperplanes()[0].multiplicity())),
        2 => Ok(rank2_closed_form(&ess.multiplicities())),
        3 => zeta_rank3(&ess),
        r => Err(Error::Unsupported(format!("zeta function for rank {r}; only rank ≤ 3 is implemented"))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ActualPole {
    #[serde(with = "rational")]
    pub value: Q,
    pub order: u32,
    /// `(a, b)` of the factor `a s + b` the coefficient refers to.
    pub factor: (String, String),
    #[serde(with = "rational::option")]
    pub coefficient: Option<Q>,
}

/// Coefficient of `1/(d(L) s + n(L))` for a candidate, read off the literal
/// factor even when the pole cancels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CandidateCoefficient {
    #[serde(with = "rational")]
    pub value: Q,
    pub factor: (String, String),
    pub order: u32,
    #[serde(with = "rational::option")]
    pub coefficient: Option<Q>,
}

/// The pole `-n/d` attached to the origin.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TopPole {
    #[serde(with = "rational")]
    pub value: Q,
    pub factor: (String, String),
    pub order: u32,
    /// Closed-form prediction of a double pole, where one is available.
    pub order_two_criterion: Option<bool>,
    #[serde(with = "rational::option")]
    pub coefficient: Option<Q>,
    #[serde(with = "rational::option")]
    pub closed_form_coefficient: Option<Q>,
    /// Sign of the coefficient when the pole is at most simple.
    pub sign: Option<i8>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZetaReport {
    pub rank: usize,
    pub degree: u64,
    pub zeta: RationalFunction,
    pub candidate_poles: Vec<CandidatePole>,
    pub actual_poles: Vec<ActualPole>,
    pub candidate_coefficients: Vec<CandidateCoefficient>,
    pub top_pole: TopPole,
    pub indecomposable: bool,
    /// `None` when the origin is not a dense edge.
    pub good_center: Option<bool>,
    pub reduced: bool,
    /// For indecomposable input that is reduced or of rank at most two, with a
    /// simple pole at `-n/d`: whether `C > 0` exactly when the origin is a good
    /// dense edge.
    pub sign_dichotomy: Option<bool>,
}

fn coefficient_at(z: &RationalFunction, a: u64, b: u64) -> Option<Q> {
    z.pole_coefficient(&BigInt::from(a), &BigInt::from(b)).ok()
}

fn sign_of(x: &Q) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

pub fn pole_report(a: &Arrangement) -> Result<ZetaReport> {
    if !a.is_central() {
        return Err(Error::NotCentral);
    }
    let ess = a.essentialize()?;
    let z = zeta(&ess)?;
    let rank = ess.rank();
    let d = ess.degree();
    let candidates = candidate_poles(&ess);
    let lattice = ess.lattice();

    let actual_poles = z
        .poles()
        .into_iter()
        .map(|(value, order)| {
            let (fa, fb) = match candidates.iter().find(|c| c.value == value) {
                Some(c) => (c.mult, c.codim as u64),
                None => {
                    let f = crate::ratfunc::LinearFactor::from_root(&value);
                    (
                        u64::try_from(f.a().clone()).unwrap_or(1),
                        u64::try_from(f.b().clone()).unwrap_or(0),
                    )
                }
            };
            ActualPole {
                coefficient: if order == 1 { coefficient_at(&z, fa, fb) } else { None },
                factor: (fa.to_string(), fb.to_string()),
                value,
                order,
            }
        })
        .collect();

    let candidate_coefficients = candidates
        .iter()
        .map(|c| {
            let order = z.pole_order(&c.value);
            CandidateCoefficient {
                value: c.value.clone(),
                factor: (c.mult.to_string(), c.codim.to_string()),
                order,
                coefficient: if order <= 1 { coefficient_at(&z, c.mult, c.codim as u64) } else { None },
            }
        })
        .collect();

    let value = Q::new(BigInt::from(rank as u64), BigInt::from(d));
    let value = -value;
    let order = z.pole_order(&value);
    let coefficient = if order <= 1 { coefficient_at(&z, d, rank as u64) } else { None };
    let reduced = ess.is_reduced();
    let (order_two_criterion, closed_form_coefficient) = match rank {
        2 => {
            let m = ess.multiplicities();
            (Some(m.iter().any(|&mi| 2 * u64::from(mi) == d)), rank2_coefficient(&m))
        }
        3 if reduced => (reduced_rank3_order_two(&ess)?, reduced_rank3_coefficient(&ess)?),
        _ => (None, None),
    };
    let indecomposable = arrangement::is_indecomposable(&ess)?;
    let good_center = lattice.center().and_then(|c| lattice.is_good_dense_edge(c));
    let sign = coefficient.as_ref().map(sign_of);
    let sign_dichotomy = match ((reduced || rank <= 2) && indecomposable && order == 1, sign, good_center) {
        (true, Some(s), Some(good)) => Some((s > 0) == good && s != 0),
        _ => None,
    };
    Ok(ZetaReport {
        rank,
        degree: d,
        zeta: z,
        candidate_poles: candidates,
        actual_poles,
        candidate_coefficients,
        top_pole: TopPole {
            value,
            factor: (d.to_string(), rank.to_string()),
            order,
            order_two_criterion,
            coefficient,
            closed_form_coefficient,
            sign,
        },
        indecomposable,
        good_center,
        reduced,
        sign_dichotomy,
    })
}

impl ZetaReport {
    /// Every actual pole appears among the candidates.
    pub fn poles_are_candidates(&self) -> bool {
        self.actual_poles
            .iter()
            .all(|p| self.candidate_poles.iter().any(|c| c.value == p.value))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{q, q_frac};
    use crate::ratfunc::parse_expression;

    fn cancelling() -> Arrangement {
        Arrangement::central(
            3,
            &[(&[1, 0, 0], 1), (&[0, 1, 0], 1), (&[1, -1, 0], 1), (&[0, 0, 1], 2), (&[1, 0, -1], 4)],
        )
        .unwrap()
    }

    fn braid() -> Arrangement {
        Arrangement::reduced_central(
            3,
            &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, -1, 0], &[1, 0, -1], &[0, 1, -1]],
        )
        .unwrap()
    }

    #[test]
    fn candidates() {
        let v: Vec<Q> = candidate_poles(&cancelling()).into_iter().map(|c| c.value).collect();
        assert_eq!(v, vec![q(-1), q_frac(-1, 2), q_frac(-1, 4), q_frac(-2, 3), q_frac(-2, 7), q_frac(-1, 3)]);
        let v: Vec<Q> = candidate_poles(&braid()).into_iter().map(|c| c.value).collect();
        assert_eq!(v, vec![q(-1), q_frac(-2, 3), q_frac(-1, 2)]);
        let xyz = Arrangement::reduced_central(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        assert_eq!(candidate_poles(&xyz).len(), 1);
    }

    #[test]
    fn rank_one_and_two() {
        assert_eq!(zeta_rank1(4).to_string(), "1/(4s + 1)");
        assert_eq!(rank2_closed_form(&[1, 1, 1]).to_string(), "(-s + 2)/((s + 1)·(3s + 2))");
        assert_eq!(rank2_coefficient(&[1, 1, 1]), Some(q(8)));
        assert_eq!(rank2_closed_form(&[1, 1]).to_string(), "1/(s + 1)^2");
        let z = rank2_closed_form(&[2, 1, 1]);
        assert_eq!(z.pole_order(&q_frac(-1, 2)), 2);
        assert_eq!(rank2_coefficient(&[2, 1, 1]), None);
    }

    #[test]
    fn cancelling_matches_display() {
        let display = "1/(9s+3)*(1 - 2/(s+1) - 1/(2s+1) - 1/(4s+1) + (-1 + 3/(s+1))*1/(3s+2) \
            + (-1 + 1/(s+1) + 1/(2s+1) + 1/(4s+1))*1/(7s+2) + 2/(s+1)*(1/(2s+1) + 1/(4s+1)))";
        let z = zeta_rank3(&cancelling()).unwrap();
        assert_eq!(z, parse_expression(display).unwrap());
        assert_eq!(z.pole_coefficient_i64(9, 3).unwrap(), q(0));
        assert_eq!(z.pole_order(&q_frac(-1, 3)), 0);
        let skip = zeta_rank3_with(&cancelling(), Resolution::SkipDoublePoints).unwrap();
        assert_eq!(skip, z);
    }

    #[test]
    fn braid_report() {
        let r = pole_report(&braid()).unwrap();
        assert_eq!(r.top_pole.value, q_frac(-1, 2));
        assert_eq!(r.top_pole.order, 1);
        assert_eq!(r.top_pole.coefficient, Some(q(42)));
        assert_eq!(r.top_pole.closed_form_coefficient, Some(q(42)));
        assert_eq!(r.top_pole.order_two_criterion, Some(false));
        assert_eq!(r.good_center, Some(true));
        assert_eq!(r.sign_dichotomy, Some(true));
        assert!(r.poles_are_candidates());
        assert_eq!(zeta(&braid()).unwrap(), reduced_rank3_closed_form(&braid()).unwrap());
    }

    #[test]
    fn coordinate_triangle() {
        let xyz = Arrangement::reduced_central(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        assert_eq!(zeta(&xyz).unwrap().to_string(), "1/(s + 1)^3");
        let r = pole_report(&xyz).unwrap();
        assert_eq!(r.top_pole.order, 3);
        assert_eq!(r.good_center, None);
        assert_eq!(r.top_pole.order_two_criterion, None);
    }

    #[test]
    fn bad_center_has_negative_coefficient() {
        // five concurrent lines and two generic ones, d = 7
        let a = Arrangement::reduced_central(
            3,
            &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[1, 2, 0], &[1, 3, 0], &[0, 0, 1], &[1, 5, 7]],
        )
        .unwrap();
        let r = pole_report(&a).unwrap();
        assert_eq!(r.good_center, Some(false));
        assert_eq!(r.top_pole.sign, Some(-1));
        assert_eq!(r.top_pole.coefficient, r.top_pole.closed_form_coefficient);
        assert_eq!(r.sign_dichotomy, Some(true));
    }

    #[test]
    fn rank_four_unsupported_and_affine_rejected() {
        let a = Arrangement::reduced_central(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]).unwrap();
        assert!(matches!(pole_report(&a), Err(Error::Unsupported(_))));
        assert_eq!(candidate_poles(&a).len(), 1);
        let aff = Arrangement::new(2, vec![crate::arrangement::Hyperplane::affine(&[1, 0], 1, 1).unwrap()]).unwrap();
        assert_eq!(pole_report(&aff).unwrap_err(), Error::NotCentral);
    }

    #[test]
    fn non_essential_input_is_essentialized() {
        let a = Arrangement::reduced_central(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0]]).unwrap();
        let r = pole_report(&a).unwrap();
        assert_eq!(r.rank, 2);
        assert_eq!(r.top_pole.coefficient, Some(q(8)));
    }
}
