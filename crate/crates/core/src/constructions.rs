//! The witness groups: `K(p, r)`, its subgroup `⟨y, x_1, …, x_{p-1}⟩`, and
//! dihedral 2-groups.
//!
//! `K(p, r) = H ⋊ ⟨y⟩` with `H = C_{p^r} × C_{p^r} × C_{p^{r-1}}^{p-2}` on
//! generators `x_0, …, x_{p-1}`, `y` of order `p`, and
//!
//! ```text
//! y^-1 x_i y     = x_i x_{i+1}                                   (0 <= i <= p-2)
//! y^-1 x_{p-1} y = x_1^-C(p,1) x_2^-C(p,2) ⋯ x_{p-2}^-C(p,p-2) x_{p-1}^(1-C(p,p-1))
//! ```
//!
//! For `r = 1` the factors `x_2, …, x_{p-1}` have order `p^0 = 1` and are
//! kept as trivial coordinates.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive};

use crate::group::{is_prime, make_group, ActionMatrix, Construction, CyclicOrders, SplitGroup};
use crate::{Error, Result};

/// Parameters `(p, r)` of an Easterfield-style group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EasterfieldSpec {
    p: u64,
    r: u32,
}

impl EasterfieldSpec {
    pub fn new(p: u64, r: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if r == 0 {
            return Err(Error::InvalidR);
        }
        Ok(EasterfieldSpec { p, r })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// `log_p |K| = 1 + 2r + (r-1)(p-2)`.
    pub fn order_exponent(&self) -> u64 {
        1 + 2 * self.r as u64 + (self.r as u64 - 1) * (self.p - 2)
    }

    /// `2 + (r-1)(p-1)`, the class of `K(p, r)`.
    pub fn expected_class(&self) -> u64 {
        2 + (self.r as u64 - 1) * (self.p - 1)
    }

    /// Orders of `x_0, …, x_{p-1}`.
    pub fn factor_orders(&self) -> Result<Vec<u64>> {
        let big = self.p.checked_pow(self.r).ok_or(Error::OrderOverflow)?;
        let small = big / self.p;
        let mut orders = vec![big, big];
        orders.extend(std::iter::repeat_n(small, self.p as usize - 2));
        Ok(orders)
    }

    /// Raw exponents of `y^-1 x_{p-1} y`: `-C(p, k)` on `x_k` for
    /// `1 <= k <= p-2`, `1 - C(p, p-1)` on `x_{p-1}`, zero elsewhere.
    pub fn twisted_column(&self) -> Vec<BigInt> {
        let p = self.p as usize;
        let mut column = vec![BigInt::from(0); p];
        for (k, slot) in column.iter_mut().enumerate().take(p - 1).skip(1) {
            *slot = -BigInt::from(binomial(self.p, k as u64));
        }
        column[p - 1] += BigInt::one() - BigInt::from(binomial(self.p, self.p - 1));
        column
    }
}

/// `C(n, k)` by the multiplicative formula; each running quotient is exact.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn canonical(value: &BigInt, order: u64) -> i64 {
    let modulus = BigInt::from(order);
    let r = ((value % &modulus) + &modulus) % &modulus;
    r.to_i64()
        .expect("residue is below a u64 order that fits the group")
}

/// Columns of the action on `x_0, …, x_{p-1}`, reduced to residues.
fn action_columns(spec: &EasterfieldSpec, orders: &[u64]) -> Vec<Vec<i64>> {
    let p = spec.p as usize;
    let mut columns = Vec::with_capacity(p);
    for i in 0..p - 1 {
        let mut column = vec![0i64; p];
        column[i] = 1 % orders[i] as i64;
        column[i + 1] = 1 % orders[i + 1] as i64;
        columns.push(column);
    }
    let twisted = spec.twisted_column();
    columns.push(
        twisted
            .iter()
            .zip(orders)
            .map(|(value, &order)| canonical(value, order))
            .collect(),
    );
    columns
}

/// Builds `K(p, r)`.
pub fn easterfield(spec: EasterfieldSpec) -> Result<SplitGroup> {
    let orders = spec.factor_orders()?;
    let columns = action_columns(&spec, &orders);
    let group = make_group(
        spec.p,
        CyclicOrders::new(orders)?,
        ActionMatrix::from_columns(columns),
    )
    .map_err(|e| e.context(format!("easterfield({}, {})", spec.p, spec.r)))?;
    Ok(group.with_construction(Construction::Easterfield {
        p: spec.p,
        r: spec.r,
    }))
}

/// The subgroup `⟨y, x_1, …, x_{p-1}⟩` of `K(p, r)` as a group in its own
/// right: the `x_0` factor is dropped and the action restricted.
pub fn easterfield_subgroup(spec: EasterfieldSpec) -> Result<SplitGroup> {
    let orders = spec.factor_orders()?;
    let columns = action_columns(&spec, &orders);
    let restricted: Vec<Vec<i64>> = columns[1..].iter().map(|c| c[1..].to_vec()).collect();
    let labels = std::iter::once("y".to_string())
        .chain((1..spec.p).map(|i| format!("x{i}")))
        .collect();
    let group = make_group(
        spec.p,
        CyclicOrders::new(orders[1..].to_vec())?,
        ActionMatrix::from_columns(restricted),
    )
    .map_err(|e| e.context(format!("easterfield_subgroup({}, {})", spec.p, spec.r)))?;
    Ok(group
        .with_labels(labels)
        .with_construction(Construction::EasterfieldSubgroup {
            p: spec.p,
            r: spec.r,
        }))
}

/// The dihedral group `C_2 ⋉ C_n` of order `2n`, `y` inverting `x0`.
pub fn dihedral(n: u64) -> Result<SplitGroup> {
    if n < 4 || !n.is_power_of_two() {
        return Err(Error::InvalidDihedral(n));
    }
    let group = make_group(
        2,
        CyclicOrders::new(vec![n])?,
        ActionMatrix::from_columns(vec![vec![n as i64 - 1]]),
    )?;
    Ok(group.with_construction(Construction::Dihedral { n }))
}
