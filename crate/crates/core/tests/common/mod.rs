//! Shared corpora and independent oracles. The oracles work on plain
//! integer line data and evaluate zeta functions pointwise, so they share
//! no code with the library's lattice, resolution or rational-function
//! machinery.

#![allow(dead_code)]

use std::collections::BTreeMap;

use arrzeta::arrangement::Arrangement;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Sample points `s > 0`, where no factor `a s + b` with `a, b > 0` vanishes.
pub fn sample_points() -> Vec<Q> {
    (1..=100).map(|k| q(k, 7)).collect()
}

fn primitive(v: &[i64]) -> Vec<i64> {
    let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
    let mut w: Vec<i64> = v.iter().map(|&x| x / g).collect();
    if w.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
        w.iter_mut().for_each(|x| *x = -*x);
    }
    w
}

fn cross(a: &[i64; 3], b: &[i64; 3]) -> [i64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

/// A central arrangement of planes in `K^3`, as integer rows with multiplicities.
#[derive(Clone, Debug)]
pub struct Lines {
    pub rows: Vec<[i64; 3]>,
    pub mults: Vec<u32>,
}

impl Lines {
    pub fn reduced(rows: &[[i64; 3]]) -> Lines {
        Lines {
            rows: rows.to_vec(),
            mults: vec![1; rows.len()],
        }
    }

    pub fn new(rows: &[[i64; 3]], mults: &[u32]) -> Lines {
        Lines {
            rows: rows.to_vec(),
            mults: mults.to_vec(),
        }
    }

    pub fn arrangement(&self) -> Arrangement {
        let rows: Vec<(&[i64], u32)> = self.rows.iter().zip(&self.mults).map(|(r, &m)| (&r[..], m)).collect();
        Arrangement::central(3, &rows).expect("valid corpus arrangement")
    }

    pub fn degree(&self) -> i64 {
        self.mults.iter().map(|&m| i64::from(m)).sum()
    }

    /// Intersection points of the projective lines, each as the sorted set of
    /// lines through it.
    pub fn points(&self) -> Vec<Vec<usize>> {
        let mut by_point: BTreeMap<Vec<i64>, Vec<usize>> = BTreeMap::new();
        for i in 0..self.rows.len() {
            for j in i + 1..self.rows.len() {
                let p = primitive(&cross(&self.rows[i], &self.rows[j]));
                let e = by_point.entry(p).or_default();
                for k in [i, j] {
                    if !e.contains(&k) {
                        e.push(k);
                    }
                }
            }
        }
        by_point
            .into_values()
            .map(|mut v| {
                v.sort_unstable();
                v
            })
            .collect()
    }

    /// `χ(P^2 ∖ Z)` by additivity: `3 = χ(U) + Σ_i χ(Z_i°) + #points`.
    pub fn euler_complement(&self) -> i64 {
        let pts = self.points();
        let on_line: Vec<i64> = (0..self.rows.len()).map(|i| pts.iter().filter(|p| p.contains(&i)).count() as i64).collect();
        3 - on_line.iter().map(|k| 2 - k).sum::<i64>() - pts.len() as i64
    }

    fn point_mult(&self, p: &[usize]) -> i64 {
        p.iter().map(|&i| i64::from(self.mults[i])).sum()
    }

    /// The zeta function at `s` from the resolution that blows up the origin
    /// and then every singular point of the projectivized curve.
    pub fn zeta_at(&self, s: &Q) -> Q {
        let d = self.degree();
        let pts = self.points();
        let line = |i: usize| Q::one() / (qi(i64::from(self.mults[i])) * s + Q::one());
        let mut total = qi(self.euler_complement());
        for i in 0..self.rows.len() {
            let k = pts.iter().filter(|p| p.contains(&i)).count() as i64;
            total += qi(2 - k) * line(i);
        }
        for p in &pts {
            let mut inner = qi(2 - p.len() as i64);
            for &i in p {
                inner += line(i);
            }
            total += inner / (qi(self.point_mult(p)) * s + qi(2));
        }
        total / (qi(d) * s + qi(3))
    }

    /// Coefficient of `1/(ds + 3)` when `-3/d` is a simple pole and no other
    /// factor vanishes there.
    pub fn top_coefficient(&self) -> Option<Q> {
        let d = self.degree();
        let s = q(-3, d);
        let pts = self.points();
        if self.mults.iter().any(|&m| 3 * i64::from(m) == d) || pts.iter().any(|p| 3 * self.point_mult(p) == 2 * d) {
            return None;
        }
        let line = |i: usize| Q::one() / (qi(i64::from(self.mults[i])) * &s + Q::one());
        let mut total = qi(self.euler_complement());
        for i in 0..self.rows.len() {
            let k = pts.iter().filter(|p| p.contains(&i)).count() as i64;
            total += qi(2 - k) * line(i);
        }
        for p in &pts {
            let mut inner = qi(2 - p.len() as i64);
            for &i in p {
                inner += line(i);
            }
            total += inner / (qi(self.point_mult(p)) * &s + qi(2));
        }
        Some(total)
    }

    /// Number of points through which exactly `m` lines pass.
    pub fn census(&self) -> BTreeMap<usize, usize> {
        let mut c = BTreeMap::new();
        for p in self.points() {
            *c.entry(p.len()).or_insert(0) += 1;
        }
        c
    }
}

/// The one-blow-up formula for a central line arrangement in `K^2`.
pub fn rank2_zeta_at(mults: &[u32], s: &Q) -> Q {
    let d: i64 = mults.iter().map(|&m| i64::from(m)).sum();
    let mut total = qi(2 - mults.len() as i64);
    for &m in mults {
        total += Q::one() / (qi(i64::from(m)) * s + Q::one());
    }
    total / (qi(d) * s + qi(2))
}

pub fn rank2_coefficient(mults: &[u32]) -> Option<Q> {
    let d: i64 = mults.iter().map(|&m| i64::from(m)).sum();
    if mults.iter().any(|&m| 2 * i64::from(m) == d) {
        return None;
    }
    let mut c = qi(2 - mults.len() as i64);
    for &m in mults {
        c += q(d, d - 2 * i64::from(m));
    }
    Some(c)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random central arrangements of `2..=max_lines` distinct lines in `K^2`.
pub fn rank2_corpus(seed: u64, count: usize, max_lines: usize, max_mult: u32) -> Vec<(Vec<[i64; 2]>, Vec<u32>)> {
    let mut r = rng(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let n = r.gen_range(2..=max_lines);
        let mut rows: Vec<[i64; 2]> = Vec::new();
        while rows.len() < n {
            let v = [r.gen_range(-4..=4), r.gen_range(-4..=4)];
            if v == [0, 0] {
                continue;
            }
            let p = primitive(&v);
            let p = [p[0], p[1]];
            if !rows.contains(&p) {
                rows.push(p);
            }
        }
        let mults = (0..n).map(|_| r.gen_range(1..=max_mult)).collect();
        out.push((rows, mults));
    }
    out
}

pub fn rank2_arrangement(rows: &[[i64; 2]], mults: &[u32]) -> Arrangement {
    let rs: Vec<(&[i64], u32)> = rows.iter().zip(mults).map(|(r, &m)| (&r[..], m)).collect();
    Arrangement::central(2, &rs).expect("distinct lines")
}

fn random_rows(r: &mut ChaCha8Rng, n: usize, range: i64) -> Option<Vec<[i64; 3]>> {
    let mut rows: Vec<[i64; 3]> = Vec::new();
    let mut tries = 0;
    while rows.len() < n {
        tries += 1;
        if tries > 1000 {
            return None;
        }
        let v = [r.gen_range(-range..=range), r.gen_range(-range..=range), r.gen_range(-range..=range)];
        if v == [0, 0, 0] {
            continue;
        }
        let p = primitive(&v);
        let p = [p[0], p[1], p[2]];
        if !rows.contains(&p) {
            rows.push(p);
        }
    }
    Some(rows)
}

fn rank3(rows: &[[i64; 3]]) -> bool {
    (0..rows.len()).any(|i| {
        (i + 1..rows.len()).any(|j| {
            let c = cross(&rows[i], &rows[j]);
            rows.iter().any(|k| c[0] * k[0] + c[1] * k[1] + c[2] * k[2] != 0)
        })
    })
}

/// Random essential central line arrangements in `P^2` with
/// `min_lines..=max_lines` lines and multiplicities up to `max_mult`.
pub fn rank3_corpus(seed: u64, count: usize, min_lines: usize, max_lines: usize, max_mult: u32) -> Vec<Lines> {
    let mut r = rng(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let n = r.gen_range(min_lines..=max_lines);
        // small coefficients make concurrences likely
        let range = if r.gen_bool(0.5) { 1 } else { 2 };
        let Some(rows) = random_rows(&mut r, n, range) else { continue };
        if !rank3(&rows) {
            continue;
        }
        let mults = (0..n).map(|_| r.gen_range(1..=max_mult)).collect();
        out.push(Lines { rows, mults });
    }
    out
}

/// Random reduced rank-3 arrangements of degree at most nine.
pub fn reduced_rank3_corpus(seed: u64, count: usize) -> Vec<Lines> {
    rank3_corpus(seed, count, 3, 9, 1)
}

/// Random central arrangements of rank at most four, mixing products of
/// independent blocks with unstructured ones.
pub fn decomposability_corpus(seed: u64, count: usize) -> Vec<Arrangement> {
    let mut r = rng(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let dim = r.gen_range(2..=4usize);
        let n = r.gen_range(2..=7usize);
        let product = r.gen_bool(0.4) && dim >= 2;
        let split = r.gen_range(1..dim);
        let mut rows: Vec<Vec<i64>> = Vec::new();
        let mut tries = 0;
        while rows.len() < n && tries < 500 {
            tries += 1;
            let mut v: Vec<i64> = (0..dim).map(|_| r.gen_range(-2..=2)).collect();
            if product {
                if r.gen_bool(0.5) {
                    v[split..].iter_mut().for_each(|x| *x = 0);
                } else {
                    v[..split].iter_mut().for_each(|x| *x = 0);
                }
            }
            if v.iter().all(|&x| x == 0) {
                continue;
            }
            let p = primitive(&v);
            if !rows.contains(&p) {
                rows.push(p);
            }
        }
        let rs: Vec<(&[i64], u32)> = rows.iter().map(|v| (&v[..], r.gen_range(1..=3u32))).collect();
        let a = Arrangement::central(dim, &rs).expect("distinct rows");
        out.push(a);
    }
    out
}

/// Lines `(1, t, t^2)`, no three concurrent.
pub fn generic_rows(d: usize) -> Vec<[i64; 3]> {
    (0..d as i64).map(|t| [1, t, t * t]).collect()
}

/// `m` lines through `(0:0:1)` plus two lines in general position.
pub fn pencil_plus_two(m: usize) -> Vec<[i64; 3]> {
    let mut rows: Vec<[i64; 3]> = vec![[1, 0, 0], [0, 1, 0]];
    rows.extend((1..m as i64 - 1).map(|t| [1, t, 0]));
    rows.push([0, 0, 1]);
    rows.push([1, 7, 11]);
    rows
}

/// Reduced, central, essential, indecomposable line arrangements of degree
/// at most nine.
pub fn curated_rank3() -> Vec<(String, Vec<[i64; 3]>)> {
    let mut out: Vec<(String, Vec<[i64; 3]>)> = Vec::new();
    for d in 4..=9 {
        out.push((format!("generic-{d}"), generic_rows(d)));
    }
    for m in 3..=7 {
        out.push((format!("pencil-{m}-plus-two"), pencil_plus_two(m)));
    }
    let braid = vec![[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, -1, 0], [1, 0, -1], [0, 1, -1]];
    let mut braid_plus = braid.clone();
    braid_plus.push([1, 2, 5]);
    out.push(("braid".into(), braid));
    out.push(("braid-plus-generic".into(), braid_plus));
    out.push((
        "b3".into(),
        vec![[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [1, -1, 0], [1, 0, 1], [1, 0, -1], [0, 1, 1], [0, 1, -1]],
    ));
    out.push((
        "non-fano".into(),
        vec![[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [1, 0, 1], [0, 1, 1], [1, 1, 1]],
    ));
    out.push(("two-triple-points".into(), vec![[1, 0, 0], [0, 1, 0], [1, -1, 0], [0, 0, 1], [1, 0, -1]]));
    out.push(("triangle-two-cevians".into(), vec![[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, -1, 0], [0, 1, -1]]));
    out.push((
        "triple-point-plus-three".into(),
        vec![[1, 0, 0], [0, 1, 0], [1, 1, 0], [0, 0, 1], [1, 2, 3], [3, 1, 2]],
    ));
    out
}

/// Lexicographic `r`-subsets of `items`.
pub fn subsets(items: &[usize], r: usize) -> Vec<Vec<usize>> {
    fn go(items: &[usize], r: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            go(items, r, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, r, 0, &mut Vec::new(), &mut out);
    out
}

pub fn is_zero(x: &Q) -> bool {
    x.is_zero()
}
