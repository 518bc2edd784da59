//! Connected components of the linear matroid on a list of normals.
//!
//! Two elements lie in the same component iff they share a circuit. For a
//! basis `B`, merging the fundamental circuits `C(x, B)` of every non-basis
//! element gives exactly these components.

use num_traits::Zero;

use crate::linalg::{self, Q, RowEchelon};

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// Component label for each vector (the smallest index in its component).
pub fn normal_components(vectors: &[Vec<Q>]) -> Vec<usize> {
    let Some(first) = vectors.first() else {
        return Vec::new();
    };
    let mut echelon = RowEchelon::new(first.len());
    let mut basis = Vec::new();
    let mut basis_idx = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        if echelon.insert(v) {
            basis.push(v.clone());
            basis_idx.push(i);
        }
    }
    let mut parent: Vec<usize> = (0..vectors.len()).collect();
    for (i, v) in vectors.iter().enumerate() {
        if basis_idx.contains(&i) {
            continue;
        }
        let coords = linalg::coordinates(&basis, v).expect("spanned by the basis");
        for (c, &b) in coords.iter().zip(&basis_idx) {
            if !c.is_zero() {
                let (ri, rb) = (find(&mut parent, i), find(&mut parent, b));
                if ri != rb {
                    parent[ri.max(rb)] = ri.min(rb);
                }
            }
        }
    }
    (0..vectors.len()).map(|i| find(&mut parent, i)).collect()
}

/// The matroid is connected: no bipartition into nonempty parts whose spans
/// form a direct sum. A single vector is connected.
pub fn normals_connected(vectors: &[Vec<Q>]) -> bool {
    let labels = normal_components(vectors);
    !labels.is_empty() && labels.iter().all(|&l| l == 0)
}
