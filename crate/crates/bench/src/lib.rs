//! Fixed inputs for the benchmarks.

use homlie::catalog::{split_example, SplitExample};
use homlie::homalg::{HomAlgebra, StructureTensor};
use homlie::{int, Matrix};

pub fn example() -> SplitExample {
    split_example(int(1), int(2), int(3))
}

/// A dense product with entries in `-2..=2` and a dense twist, deterministic in `n`.
pub fn dense_algebra(n: usize) -> HomAlgebra {
    let mut entries = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                entries.push((i, j, k, ((7 * i + 3 * j + k) % 5) as i64 - 2));
            }
        }
    }
    let twist = Matrix::from_fn(n, n, |r, c| int(((r + 2 * c) % 5) as i64 - 2));
    HomAlgebra::new(StructureTensor::from_i64(n, &entries).expect("in range"), twist).expect("square twist")
}

/// An invertible integer matrix: identity plus a strictly upper triangle.
pub fn unipotent(n: usize) -> Matrix {
    Matrix::from_fn(n, n, |r, c| {
        if r == c {
            int(1)
        } else if c > r {
            int(((r * 3 + c) % 5) as i64 - 2)
        } else {
            int(0)
        }
    })
}
