//! The Aomoto complex `A⁰ → A¹ → A²` on the affine chart `P^2 ∖ Z_e`.
//!
//! `A¹` has basis `e_i` for the lines `i ≠ e`. `A²` splits into one block
//! per affine point `p`, with basis `e_i ∧ e_a` for `i ∋ p`, `i ≠ a`, where
//! the anchor `a` is the largest line through `p`. Any other wedge is
//! rewritten with `e_i∧e_j = e_i∧e_a − e_j∧e_a`; lines meeting on `Z_e` are
//! parallel in the chart and their wedge vanishes.

use num_traits::{One, Zero};
use serde::Serialize;

use super::{RankThree, WeightSystem};
use crate::linalg::{self, Q};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    pub point: usize,
    /// Ascending, so the anchor comes last.
    pub lines: Vec<usize>,
    pub anchor: usize,
    pub offset: usize,
}

impl Block {
    pub fn size(&self) -> usize {
        self.lines.len() - 1
    }

    fn position(&self, line: usize) -> Option<usize> {
        if line == self.anchor {
            return None;
        }
        let k = self.lines.iter().position(|&i| i == line).expect("line through the block point");
        Some(self.offset + k)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Cohomology {
    pub h0: usize,
    pub h1: usize,
    pub h2: usize,
}

#[derive(Clone, Debug)]
pub struct AomotoComplex {
    chart: Vec<usize>,
    blocks: Vec<Block>,
    /// Block index for each point, `None` on `Z_e`.
    block_of: Vec<Option<usize>>,
    dim2: usize,
    /// `d0` as an `n1 × 1` matrix.
    d0: Vec<Vec<Q>>,
    /// `d1` as an `n2 × n1` matrix.
    d1: Vec<Vec<Q>>,
}

impl AomotoComplex {
    pub fn new(rt: &RankThree, ws: &WeightSystem) -> AomotoComplex {
        let l = rt.lines();
        let chart: Vec<usize> = (0..l.num_lines()).filter(|&i| i != ws.infinity).collect();
        let mut blocks = Vec::new();
        let mut block_of = vec![None; l.points().len()];
        let mut offset = 0;
        for (p, pt) in l.points().iter().enumerate() {
            if pt.contains(ws.infinity) {
                continue;
            }
            let anchor = *pt.lines.iter().max().expect("at least two lines");
            block_of[p] = Some(blocks.len());
            blocks.push(Block {
                point: p,
                lines: pt.lines.clone(),
                anchor,
                offset,
            });
            offset += pt.lines.len() - 1;
        }
        let mut cx = AomotoComplex {
            chart,
            blocks,
            block_of,
            dim2: offset,
            d0: Vec::new(),
            d1: Vec::new(),
        };
        cx.d0 = cx.chart.iter().map(|&i| vec![ws.alpha[i].clone()]).collect();
        let mut d1 = vec![vec![Q::zero(); cx.chart.len()]; cx.dim2];
        for (col, &j) in cx.chart.iter().enumerate() {
            for &i in &cx.chart {
                if i == j || ws.alpha[i].is_zero() {
                    continue;
                }
                let w = cx.wedge(rt, i, j);
                for (r, v) in w.iter().enumerate() {
                    if !v.is_zero() {
                        d1[r][col] += &ws.alpha[i] * v;
                    }
                }
            }
        }
        cx.d1 = d1;
        cx
    }

    pub fn chart(&self) -> &[usize] {
        &self.chart
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// `(dim A⁰, dim A¹, dim A²)`.
    pub fn dims(&self) -> [usize; 3] {
        [1, self.chart.len(), self.dim2]
    }

    pub fn d0(&self) -> &[Vec<Q>] {
        &self.d0
    }

    pub fn d1(&self) -> &[Vec<Q>] {
        &self.d1
    }

    /// `dim A⁰ − dim A¹ + dim A²`.
    pub fn euler(&self) -> i64 {
        1 - self.chart.len() as i64 + self.dim2 as i64
    }

    /// `e_i ∧ e_j` in the block basis of `A²`.
    pub fn wedge(&self, rt: &RankThree, i: usize, j: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim2];
        if i == j {
            return v;
        }
        let Some(b) = self.block_of[rt.lines().meet(i, j)] else {
            return v;
        };
        let block = &self.blocks[b];
        if let Some(k) = block.position(i) {
            v[k] += Q::one();
        }
        if let Some(k) = block.position(j) {
            v[k] -= Q::one();
        }
        v
    }

    pub fn in_image(&self, v: &[Q]) -> bool {
        linalg::in_column_space(&self.d1, self.chart.len(), v)
    }

    /// `d1 ∘ d0 = ω ∧ ω = 0`.
    pub fn is_complex(&self) -> bool {
        self.d1
            .iter()
            .all(|row| linalg::dot(row, &self.d0.iter().map(|r| r[0].clone()).collect::<Vec<_>>()).is_zero())
    }

    pub fn cohomology(&self) -> Cohomology {
        let r0 = linalg::rank(&self.d0);
        let r1 = linalg::rank(&self.d1);
        Cohomology {
            h0: 1 - r0,
            h1: self.chart.len() - r1 - r0,
            h2: self.dim2 - r1,
        }
    }
}
