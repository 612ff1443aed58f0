use super::orders::{residue, CyclicOrders};
use crate::{Error, Result};

/// Integer matrix of an endomorphism of H, stored column by column.
///
/// Column `j` holds the exponent vector of the image of generator `x_j`.
/// Entries are raw signed integers; they are reduced to canonical residues
/// when a group is built from the matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ActionMatrix {
    columns: Vec<Vec<i64>>,
}

impl ActionMatrix {
    pub fn from_columns(columns: Vec<Vec<i64>>) -> Self {
        ActionMatrix { columns }
    }

    pub fn identity(dim: usize) -> Self {
        let columns = (0..dim)
            .map(|j| (0..dim).map(|i| i64::from(i == j)).collect())
            .collect();
        ActionMatrix { columns }
    }

    pub fn columns(&self) -> &[Vec<i64>] {
        &self.columns
    }

    pub fn column(&self, j: usize) -> &[i64] {
        &self.columns[j]
    }

    /// Entry in row `i`, column `j`.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.columns[j][i]
    }

    pub(crate) fn check_shape(&self, dim: usize) -> Result<()> {
        let cols = self.columns.len();
        let rows = self.columns.first().map_or(0, Vec::len);
        if cols != dim || self.columns.iter().any(|c| c.len() != dim) {
            return Err(Error::ShapeMismatch { rows, cols, dim });
        }
        Ok(())
    }

    /// `entries[i][j] * orders[j] ≡ 0 (mod orders[i])` for all `i, j`.
    pub(crate) fn check_well_defined(&self, orders: &CyclicOrders) -> Result<()> {
        let o = orders.as_slice();
        for (col, column) in self.columns.iter().enumerate() {
            for (row, &entry) in column.iter().enumerate() {
                if (entry as i128 * o[col] as i128).rem_euclid(o[row] as i128) != 0 {
                    return Err(Error::NotWellDefined {
                        row,
                        col,
                        row_order: o[row],
                        col_order: o[col],
                    });
                }
            }
        }
        Ok(())
    }
}

/// Action matrix reduced row-wise modulo the factor orders, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct ReducedMatrix {
    dim: usize,
    data: Vec<u64>,
}

impl ReducedMatrix {
    pub(crate) fn identity(orders: &[u64]) -> Self {
        let dim = orders.len();
        let mut data = vec![0; dim * dim];
        for (i, &o) in orders.iter().enumerate() {
            data[i * dim + i] = 1 % o;
        }
        ReducedMatrix { dim, data }
    }

    pub(crate) fn reduce(action: &ActionMatrix, orders: &[u64]) -> Self {
        let dim = orders.len();
        let mut data = vec![0; dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                data[i * dim + j] = residue(action.entry(i, j) as i128, orders[i]);
            }
        }
        ReducedMatrix { dim, data }
    }

    #[inline]
    pub(crate) fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.dim + j]
    }

    /// Product `self · other`, row `i` reduced modulo `orders[i]`.
    ///
    /// Only meaningful for well-defined matrices, where the result does not
    /// depend on the representatives chosen for the entries.
    pub(crate) fn mul(&self, other: &ReducedMatrix, orders: &[u64]) -> ReducedMatrix {
        let dim = self.dim;
        let mut data = vec![0; dim * dim];
        for i in 0..dim {
            let o = orders[i] as u128;
            for j in 0..dim {
                let mut acc: u128 = 0;
                for k in 0..dim {
                    acc = (acc + self.get(i, k) as u128 * other.get(k, j) as u128) % o;
                }
                data[i * dim + j] = acc as u64;
            }
        }
        ReducedMatrix { dim, data }
    }

    pub(crate) fn pow(&self, mut exponent: u64, orders: &[u64]) -> ReducedMatrix {
        let mut base = self.clone();
        let mut acc = ReducedMatrix::identity(orders);
        while exponent > 0 {
            if exponent & 1 == 1 {
                acc = acc.mul(&base, orders);
            }
            exponent >>= 1;
            if exponent > 0 {
                base = base.mul(&base, orders);
            }
        }
        acc
    }

    /// Writes `self · v` into `out`, reduced modulo the orders.
    #[inline]
    pub(crate) fn apply_into(&self, v: &[u64], orders: &[u64], out: &mut [u64]) {
        for (i, slot) in out.iter_mut().enumerate() {
            let o = orders[i] as u128;
            let row = &self.data[i * self.dim..(i + 1) * self.dim];
            let mut acc: u128 = 0;
            for (&a, &e) in row.iter().zip(v) {
                acc += a as u128 * e as u128;
            }
            *slot = (acc % o) as u64;
        }
    }

    pub(crate) fn is_identity(&self, orders: &[u64]) -> bool {
        *self == ReducedMatrix::identity(orders)
    }

    /// Invertibility of the induced map on the Frattini quotient `H/H^p`.
    ///
    /// For a finite abelian p-group an endomorphism is an automorphism iff
    /// it is invertible modulo `H^p`. Rows and columns of trivial factors are
    /// dropped; entries mapping a smaller factor into a larger one are
    /// multiples of `p` by well-definedness and vanish here.
    pub(crate) fn invertible_mod_prime(&self, orders: &[u64], prime: Option<u64>) -> bool {
        let Some(p) = prime else {
            return true;
        };
        let live: Vec<usize> = (0..self.dim).filter(|&i| orders[i] > 1).collect();
        let n = live.len();
        let mut m: Vec<Vec<u64>> = live
            .iter()
            .map(|&i| live.iter().map(|&j| self.get(i, j) % p).collect())
            .collect();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| m[r][col] != 0) else {
                return false;
            };
            m.swap(col, pivot);
            let inv = mod_inverse(m[col][col], p);
            for r in 0..n {
                if r != col && m[r][col] != 0 {
                    let factor = m[r][col] * inv % p;
                    let pivot_row = m[col].clone();
                    for (x, &y) in m[r].iter_mut().zip(&pivot_row).skip(col) {
                        *x = (*x + p - factor * y % p) % p;
                    }
                }
            }
        }
        true
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // p is prime, so a^(p-2) is the inverse of a nonzero a
    let (mut base, mut exp, mut acc) = (a as u128 % p as u128, p - 2, 1u128);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p as u128;
        }
        base = base * base % p as u128;
        exp >>= 1;
    }
    acc as u64
}
