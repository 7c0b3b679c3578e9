use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// The eighteen decomposition-matrix shapes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Figure {
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,
    F7,
    F8,
    F9,
    F10,
    F11,
    F12,
    F13,
    F14,
    F15,
    F16,
    F17,
    F18,
}

/// (height-0 rows, the repeated height-1 row, height-(n−2) rows).
type Shape = (&'static [&'static [u32]], &'static [u32], &'static [&'static [u32]]);

const TWO_A: &[&[u32]] = &[&[1, 0], &[1, 0], &[1, 1], &[1, 1]];
const TWO_B_LACY: &[&[u32]] = &[&[1, 0], &[1, 0], &[0, 1], &[0, 1]];
const THREE_A: &[&[u32]] = &[&[1, 0, 0], &[1, 1, 1], &[1, 0, 1], &[1, 1, 0]];
const THREE_B: &[&[u32]] = &[&[1, 0, 0], &[1, 1, 0], &[1, 0, 1], &[1, 1, 1]];
const THREE_B2: &[&[u32]] = &[&[1, 0, 0], &[1, 1, 0], &[1, 1, 1], &[1, 0, 1]];
const THREE_K: &[&[u32]] = &[&[1, 0, 0], &[1, 1, 1], &[0, 1, 0], &[0, 0, 1]];

impl Figure {
    fn shape(self) -> Shape {
        use Figure::*;
        match self {
            F1 => (TWO_A, &[2, 1], &[]),
            F2 => (TWO_A, &[2, 1], &[&[0, 1]]),
            F3 => (TWO_A, &[0, 1], &[]),
            F4 => (TWO_A, &[0, 1], &[&[2, 1]]),
            F5 => (TWO_B_LACY, &[1, 1], &[]),
            F6 => (THREE_A, &[2, 1, 1], &[]),
            F7 => (THREE_A, &[2, 1, 1], &[&[0, 0, 1]]),
            F8 => (THREE_A, &[2, 1, 1], &[&[0, 1, 0], &[0, 0, 1]]),
            F9 => (THREE_B, &[0, 1, 0], &[]),
            F10 => (THREE_B, &[0, 1, 0], &[&[0, 0, 1]]),
            F11 => (THREE_B2, &[0, 1, 0], &[&[2, 1, 1]]),
            F12 => (THREE_B2, &[0, 1, 0], &[&[0, 0, 1], &[2, 1, 1]]),
            F13 => (&[&[0, 1, 0], &[1, 1, 0], &[1, 0, 1], &[0, 0, 1]], &[1, 0, 0], &[&[1, 1, 1]]),
            F14 => (&[&[0, 1, 0], &[1, 0, 1], &[1, 1, 0], &[0, 0, 1]], &[1, 1, 1], &[&[1, 0, 0]]),
            F15 => (THREE_K, &[0, 1, 1], &[&[1, 1, 0]]),
            F16 => (&[&[1, 0, 0], &[0, 1, 0], &[1, 1, 1], &[0, 0, 1]], &[1, 1, 0], &[&[0, 1, 1]]),
            F17 => (THREE_K, &[0, 1, 1], &[]),
            F18 => (THREE_K, &[0, 1, 1], &[&[1, 0, 1], &[1, 1, 0]]),
        }
    }

    pub fn number(self) -> u32 {
        self as u32 + 1
    }

    pub fn simple_count(self) -> usize {
        self.shape().1.len()
    }

    /// The repeated height-1 row: the composition-factor multiset of a maximally ordinary module.
    pub fn height_one_row(self) -> Vec<u32> {
        self.shape().1.to_vec()
    }

    pub fn top_height_rows(self) -> usize {
        self.shape().2.len()
    }

    pub fn matrix(self, n: u32) -> DecompMatrix {
        let (h0, h1, htop) = self.shape();
        let mut rows = Vec::new();
        let mut heights = Vec::new();
        let mut labels = Vec::new();
        for (i, r) in h0.iter().enumerate() {
            rows.push(r.to_vec());
            heights.push(0);
            labels.push(format!("χ{}", i + 1));
        }
        let reps = (1u64 << (n - 2)) - 1;
        for i in 1..=reps {
            rows.push(h1.to_vec());
            heights.push(1);
            labels.push(format!("χ5,{i}"));
        }
        for (i, r) in htop.iter().enumerate() {
            rows.push(r.to_vec());
            heights.push(n - 2);
            labels.push(format!("χ{}", 6 + i));
        }
        DecompMatrix { n, rows, heights, labels }
    }
}

/// Ordinary characters against Brauer characters φ₀, φ₁[, φ₂].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompMatrix {
    pub n: u32,
    pub rows: Vec<Vec<u32>>,
    pub heights: Vec<u32>,
    pub labels: Vec<String>,
}

impl DecompMatrix {
    pub fn cols(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len())
    }

    /// C = DᵀD.
    pub fn cartan(&self) -> Vec<Vec<u64>> {
        let m = self.cols();
        let mut c = vec![vec![0u64; m]; m];
        for r in &self.rows {
            for i in 0..m {
                for j in 0..m {
                    c[i][j] += (r[i] * r[j]) as u64;
                }
            }
        }
        c
    }

    pub fn cartan_sum(&self) -> u64 {
        self.cartan().iter().flatten().sum()
    }

    pub fn rows_of_height(&self, h: u32) -> Vec<&Vec<u32>> {
        self.rows.iter().zip(&self.heights).filter(|(_, &x)| x == h).map(|(r, _)| r).collect()
    }

    /// Rows labelled χ5,i.
    pub fn height_one_family(&self) -> Vec<&Vec<u32>> {
        self.rows.iter().zip(&self.labels).filter(|(_, l)| l.starts_with("χ5,")).map(|(r, _)| r).collect()
    }
}

/// Exact determinant of a small integer matrix (fraction-free elimination).
pub fn integer_det(m: &[Vec<u64>]) -> Result<i128> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::Domain("determinant of a non-square matrix".into()));
    }
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(p) => {
                    a.swap(k, p);
                    sign = -sign;
                }
                None => return Ok(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    Ok(sign * if n == 0 { 1 } else { a[n - 1][n - 1] })
}
