use super::*;
use crate::linalg::{q, q_frac};

fn generic4() -> Arrangement {
    Arrangement::reduced_central(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]).unwrap()
}

fn braid() -> Arrangement {
    Arrangement::reduced_central(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, -1, 0], &[1, 0, -1], &[0, 1, -1]])
        .unwrap()
}

fn cancelling() -> Arrangement {
    Arrangement::central(
        3,
        &[(&[1, 0, 0], 1), (&[0, 1, 0], 1), (&[1, -1, 0], 1), (&[0, 0, 1], 2), (&[1, 0, -1], 4)],
    )
    .unwrap()
}

fn pencil_plus_line() -> Arrangement {
    Arrangement::reduced_central(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[0, 0, 1]]).unwrap()
}

fn five_concurrent_two_generic() -> Arrangement {
    Arrangement::reduced_central(
        3,
        &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[1, 2, 0], &[1, 3, 0], &[0, 0, 1], &[1, 5, 7]],
    )
    .unwrap()
}

/// `(xy(x-y))^{a-2}(x+y-z)(x+y-2z)(x+2y-2z)(2x+y-2z)z^2` with `a = 7`.
fn triple_point_fixture() -> Arrangement {
    Arrangement::central(
        3,
        &[
            (&[1, 0, 0], 5),
            (&[0, 1, 0], 5),
            (&[1, -1, 0], 5),
            (&[1, 1, -1], 1),
            (&[1, 1, -2], 1),
            (&[1, 2, -2], 1),
            (&[2, 1, -2], 1),
            (&[0, 0, 1], 2),
        ],
    )
    .unwrap()
}

#[test]
fn weights_generic4() {
    let rt = RankThree::new(&generic4()).unwrap();
    let ws = rt.weight_system(3, &[0, 1], 3, Convention::Standard).unwrap();
    assert_eq!(ws.alpha, vec![q_frac(1, 4), q_frac(1, 4), q_frac(-3, 4), q_frac(1, 4)]);
    assert!(ws.sum_is_zero());
    assert_eq!(ws.root(), q_frac(-3, 4));
}

#[test]
fn weights_cancelling() {
    let rt = RankThree::new(&cancelling()).unwrap();
    let ws = rt.weight_system(4, &[0, 3], 3, Convention::Standard).unwrap();
    assert_eq!(
        ws.alpha,
        vec![q_frac(2, 3), q_frac(-1, 3), q_frac(-1, 3), q_frac(1, 3), q_frac(-1, 3)]
    );
    let alt = rt.weight_system(4, &[0, 1, 3], 3, Convention::InfinityExcluded).unwrap();
    assert!(alt.sum_is_zero());
    assert_eq!(alt.alpha[4], q_frac(-4, 3));
}

#[test]
fn weight_errors() {
    let rt = RankThree::new(&generic4()).unwrap();
    assert_eq!(
        rt.weight_system(3, &[0], 3, Convention::Standard).unwrap_err(),
        Error::SizeMismatch { expected: 2, found: 1 }
    );
    assert!(rt.weight_system(3, &[0, 3], 3, Convention::Standard).is_err());
    assert!(rt.weight_system(7, &[0, 1], 3, Convention::Standard).is_err());
    assert!(rt.weight_system(3, &[0, 1, 2], 4, Convention::Standard).is_err());
}

#[test]
fn generic4_conditions_and_cohomology() {
    let rt = RankThree::new(&generic4()).unwrap();
    let ws = rt.weight_system(3, &[0, 1], 3, Convention::Standard).unwrap();
    assert!(rt.stv_condition(&ws));
    assert!(rt.condition_a(&ws));
    assert!(rt.sigma_set(&ws).is_empty());
    let p0 = rt.condition_b(&ws).unwrap();
    assert_eq!(rt.lines().point(p0).label(), "(0:0:1)");
    assert!(rt.condition_c(&ws, p0));
    let cx = rt.complex(&ws);
    assert_eq!(cx.dims(), [1, 3, 3]);
    assert!(cx.is_complex());
    assert_eq!(cx.cohomology(), Cohomology { h0: 0, h1: 0, h2: 1 });
    assert!(rt.v_image_nonzero(&ws));
}

#[test]
fn pencil_plus_line_has_e_i_in_image() {
    let rt = RankThree::new(&pencil_plus_line()).unwrap();
    let ws = rt.weight_system(3, &[0, 1], 3, Convention::Standard).unwrap();
    let cx = rt.complex(&ws);
    assert_eq!(cx.euler(), 0);
    assert_eq!(cx.euler(), rt.lines().euler_complement());
    let h = cx.cohomology();
    assert_eq!(h.h1, h.h2);
    assert!(rt.stv_condition(&ws));
    assert!(!rt.v_image_nonzero(&ws));
}

#[test]
fn braid_euler_and_relations() {
    let rt = RankThree::new(&braid()).unwrap();
    let ws = rt.weight_system(5, &[0, 1], 3, Convention::Standard).unwrap();
    let cx = rt.complex(&ws);
    assert_eq!(cx.euler(), 2);
    for p in rt.lines().points() {
        if p.contains(5) || p.lines.len() < 3 {
            continue;
        }
        let (i, j, k) = (p.lines[0], p.lines[1], p.lines[2]);
        let lhs = cx.wedge(&rt, i, j);
        let r1 = cx.wedge(&rt, i, k);
        let r2 = cx.wedge(&rt, j, k);
        let rhs: Vec<Q> = r1.iter().zip(&r2).map(|(a, b)| a - b).collect();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn braid_condition_b_meets_off_infinity() {
    let rt = RankThree::new(&braid()).unwrap();
    // lines x and y meet at (0:0:1), which is not on y - z
    let ws = rt.weight_system(5, &[0, 1], 3, Convention::Standard).unwrap();
    let p0 = rt.condition_b(&ws).unwrap();
    assert_eq!(rt.lines().point(p0).lines, vec![0, 1, 3]);
    // y and z meet on y - z
    let ws = rt.weight_system(5, &[1, 2], 3, Convention::Standard).unwrap();
    assert_eq!(rt.condition_b(&ws), None);
}

#[test]
fn cancelling_witness() {
    let rt = RankThree::new(&cancelling()).unwrap();
    // y at infinity, I = the lines of multiplicity 2 and 4
    let ws = rt.weight_system(1, &[3, 4], 3, Convention::Standard).unwrap();
    assert_eq!(
        ws.alpha,
        vec![q_frac(-1, 3), q_frac(2, 3), q_frac(-1, 3), q_frac(1, 3), q_frac(-1, 3)]
    );
    assert!(rt.stv_condition(&ws));
    assert_eq!(rt.complex(&ws).euler(), 1);
    // ω∧e_x = 1/3 e_z∧e_{x-z}, so e_I is exact in this convention
    let cx = rt.complex(&ws);
    let col = cx.chart().iter().position(|&i| i == 0).unwrap();
    let image: Vec<Q> = cx.d1().iter().map(|r| r[col].clone()).collect();
    let target = cx.wedge(&rt, 3, 4);
    assert_eq!(image, target.iter().map(|t| t * q_frac(1, 3)).collect::<Vec<_>>());
    assert!(!rt.v_image_nonzero(&ws));
    // with the shift on I only, the three lines through (0:1:0) work
    let alt = rt.weight_system(1, &[0, 3, 4], 3, Convention::InfinityExcluded).unwrap();
    assert!(rt.stv_condition(&alt));
    assert!(rt.v_image_nonzero(&alt));
    let std_search = certify_root(&cancelling()).unwrap();
    assert_eq!(std_search, None);
    let opts = CertifyOptions {
        convention: Convention::InfinityExcluded,
        ..CertifyOptions::default()
    };
    let cert = certify_root_with(&cancelling(), &opts).unwrap().unwrap();
    assert_eq!(cert.root, q_frac(-1, 3));
    assert!(verify(&cancelling(), &cert).unwrap().ok);
}

#[test]
fn reduced_stv_equals_condition_a() {
    for a in [generic4(), braid(), five_concurrent_two_generic()] {
        let rt = RankThree::new(&a).unwrap();
        for e in 0..rt.num_lines() {
            let rest: Vec<usize> = (0..rt.num_lines()).filter(|&i| i != e).collect();
            for sub in subsets(&rest, 2) {
                let ws = rt.weight_system(e, &sub, 3, Convention::Standard).unwrap();
                assert_eq!(rt.stv_condition(&ws), rt.condition_a(&ws));
            }
        }
    }
}

#[test]
fn certify_generic4_direct() {
    let cert = certify_root(&generic4()).unwrap().unwrap();
    assert_eq!(cert.route, Route::AomotoDirect);
    assert_eq!(cert.root, q_frac(-3, 4));
    assert_eq!((cert.infinity, cert.subset.clone()), (0, vec![1, 2]));
    assert_eq!(cert.cohomology, Some([0, 0, 1]));
    assert!(verify(&generic4(), &cert).unwrap().ok);
}

#[test]
fn certify_braid() {
    let cert = certify_root(&braid()).unwrap().unwrap();
    assert_eq!(cert.root, q_frac(-1, 2));
    assert!(verify(&braid(), &cert).unwrap().ok);
}

#[test]
fn tampered_certificate_fails() {
    let mut cert = certify_root(&generic4()).unwrap().unwrap();
    cert.cohomology = Some([0, 0, 2]);
    let v = verify(&generic4(), &cert).unwrap();
    assert_eq!(v.failed, vec!["cohomology".to_string()]);
    let mut cert = certify_root(&pencil_plus_line()).unwrap_or(None).unwrap_or_else(|| {
        let mut c = certify_root(&generic4()).unwrap().unwrap();
        c.infinity = 3;
        c.subset = vec![0, 1];
        c
    });
    cert.root = q(-1);
    assert!(!verify(&pencil_plus_line(), &cert).unwrap().ok);
}

#[test]
fn dominant_point_route() {
    let a = five_concurrent_two_generic();
    let rt = RankThree::new(&a).unwrap();
    let ws = rt.weight_system(5, &[0, 1], 3, Convention::Standard).unwrap();
    let p0 = rt.lines().find_point(&[0, 1, 2, 3, 4]).unwrap();
    assert_eq!(rt.check_dominant_route(&ws, p0), Ok((true, 6)));
    let opts = CertifyOptions {
        routes: vec![Route::DominantPoint],
        ..CertifyOptions::default()
    };
    let cert = certify_root_with(&a, &opts).unwrap().unwrap();
    assert_eq!(cert.route, Route::DominantPoint);
    assert_eq!(cert.root, q_frac(-3, 7));
    assert!(verify(&a, &cert).unwrap().ok);
}

#[test]
fn dominant_point_not_applicable() {
    let rt = RankThree::new(&braid()).unwrap();
    let ws = rt.weight_system(5, &[0, 1], 3, Convention::Standard).unwrap();
    let p0 = rt.condition_b(&ws).unwrap();
    assert_eq!(rt.check_dominant_route(&ws, p0), Err(RouteViolation::PointNotDominant));
    for e in 0..6 {
        assert!(rt.dominant_point_witnesses(e, None).is_empty());
    }
    let rt = RankThree::new(&generic4()).unwrap();
    assert!(rt.dominant_point_witnesses(3, None).is_empty());
}

#[test]
fn triple_point_fixture_structure() {
    let rt = RankThree::new(&triple_point_fixture()).unwrap();
    assert_eq!(rt.degree(), 21);
    let p0 = rt.point_by_coords(&[q(0), q(0), q(1)]).unwrap();
    assert_eq!(rt.lines().point(p0).lines, vec![0, 1, 2]);
    assert!(rt.dominant_point_witnesses(7, Some(p0)).is_empty());
    let opts = CertifyOptions {
        routes: vec![Route::DominantPoint],
        infinity: Some(7),
        p0: Some(vec![0, 1, 2]),
        ..CertifyOptions::default()
    };
    assert_eq!(certify_root_with(&triple_point_fixture(), &opts).unwrap(), None);
}

#[test]
fn triple_point_fixture_needs_z_at_infinity() {
    // with p0 = (0:0:1) as the witness of (b), (a) fails unless e is z
    let rt = RankThree::new(&triple_point_fixture()).unwrap();
    let p0 = rt.point_by_coords(&[q(0), q(0), q(1)]).unwrap();
    let mut with_b = 0;
    for e in 0..7 {
        let rest: Vec<usize> = (0..8).filter(|&i| i != e).collect();
        for sub in subsets(&rest, 2) {
            let ws = rt.weight_system(e, &sub, 3, Convention::Standard).unwrap();
            if rt.condition_b_points(&ws).contains(&p0) {
                with_b += 1;
                assert!(!rt.condition_a(&ws), "e={e} I={sub:?}");
            }
        }
    }
    assert_eq!(with_b, 4 * 3);
    let ws = rt.weight_system(7, &[0, 1], 3, Convention::Standard).unwrap();
    assert_eq!(rt.condition_b(&ws), Some(p0));
}

#[test]
fn subsets_lexicographic() {
    assert_eq!(subsets(&[0, 2, 3], 2), vec![vec![0, 2], vec![0, 3], vec![2, 3]]);
    assert_eq!(subsets(&[1, 2], 0), vec![Vec::<usize>::new()]);
    assert!(subsets(&[1], 2).is_empty());
}
