use std::fmt;

use crate::{Error, Result};

/// Deterministic trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn smallest_prime_factor(n: u64) -> u64 {
    debug_assert!(n >= 2);
    if n.is_multiple_of(2) {
        return 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return d;
        }
        d += 2;
    }
    n
}

/// If `n = p^k` for some prime `p` and `k >= 1`, returns `(p, k)`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let p = smallest_prime_factor(n);
    log_exact(n, p).map(|k| (p, k))
}

/// `k` such that `n = base^k`, if there is one.
pub fn log_exact(mut n: u64, base: u64) -> Option<u32> {
    if base < 2 || n == 0 {
        return None;
    }
    let mut k = 0;
    while n.is_multiple_of(base) {
        n /= base;
        k += 1;
    }
    (n == 1).then_some(k)
}

/// Orders of the cyclic factors of the abelian group H.
///
/// Every order is a power of one common prime; order 1 marks a trivial
/// factor, which is kept so that coordinates stay aligned with generator
/// labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclicOrders {
    orders: Vec<u64>,
    prime: Option<u64>,
}

impl CyclicOrders {
    pub fn new(orders: Vec<u64>) -> Result<Self> {
        if orders.is_empty() {
            return Err(Error::EmptyOrders);
        }
        let mut prime = None;
        for &order in &orders {
            if order == 0 {
                return Err(Error::ZeroOrder);
            }
            if order == 1 {
                continue;
            }
            let p = *prime.get_or_insert_with(|| smallest_prime_factor(order));
            if log_exact(order, p).is_none() {
                return Err(Error::MixedPrimes { order, prime: p });
            }
        }
        Ok(CyclicOrders { orders, prime })
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.orders
    }

    pub fn len(&self) -> usize {
        self.orders.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orders.is_empty()
    }

    /// The common prime, or `None` when every factor is trivial.
    pub fn prime(&self) -> Option<u64> {
        self.prime
    }

    /// `|H|`, the product of all factor orders.
    pub fn product(&self) -> Option<u64> {
        self.orders
            .iter()
            .try_fold(1u64, |acc, &o| acc.checked_mul(o))
    }

    /// Reduces arbitrary signed exponents to canonical residues.
    pub fn reduce(&self, exponents: &[i64]) -> Result<ExponentVector> {
        if exponents.len() != self.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                found: exponents.len(),
            });
        }
        Ok(ExponentVector(
            exponents
                .iter()
                .zip(&self.orders)
                .map(|(&e, &o)| residue(e as i128, o))
                .collect(),
        ))
    }

    /// Checks that `v` is already in canonical form for these orders.
    pub fn check(&self, v: &ExponentVector) -> Result<()> {
        if v.len() != self.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                found: v.len(),
            });
        }
        for (coordinate, (&value, &order)) in v.0.iter().zip(&self.orders).enumerate() {
            if value >= order {
                return Err(Error::NotNormalForm {
                    coordinate,
                    value,
                    order,
                });
            }
        }
        Ok(())
    }
}

pub(crate) fn residue(value: i128, modulus: u64) -> u64 {
    value.rem_euclid(modulus as i128) as u64
}

/// An element of H as canonical exponents `e_i` in `[0, orders[i])`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(pub(crate) Vec<u64>);

impl ExponentVector {
    pub fn zero(dim: usize) -> Self {
        ExponentVector(vec![0; dim])
    }

    /// The `i`-th standard basis vector, i.e. the generator `x_i`.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = vec![0; dim];
        v[i] = 1;
        ExponentVector(v)
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        let small: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(!is_prime(4));
        assert!(is_prime(7919));
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_power(729), Some((3, 6)));
        assert_eq!(prime_power(12), None);
        assert_eq!(log_exact(390_625, 5), Some(8));
        assert_eq!(log_exact(10, 5), None);
    }

    #[test]
    fn orders_validation() {
        assert_eq!(CyclicOrders::new(vec![]), Err(Error::EmptyOrders));
        assert_eq!(CyclicOrders::new(vec![9, 0]), Err(Error::ZeroOrder));
        assert_eq!(
            CyclicOrders::new(vec![9, 4]),
            Err(Error::MixedPrimes { order: 4, prime: 3 })
        );
        assert_eq!(
            CyclicOrders::new(vec![6]),
            Err(Error::MixedPrimes { order: 6, prime: 2 })
        );
        let orders = CyclicOrders::new(vec![9, 9, 3, 1]).unwrap();
        assert_eq!(orders.prime(), Some(3));
        assert_eq!(orders.product(), Some(243));
        assert_eq!(CyclicOrders::new(vec![1, 1]).unwrap().prime(), None);
    }

    #[test]
    fn reduce_to_residues() {
        let orders = CyclicOrders::new(vec![9, 3, 1]).unwrap();
        let v = orders.reduce(&[-3, -2, 5]).unwrap();
        assert_eq!(v.as_slice(), &[6, 1, 0]);
        assert!(orders.check(&v).is_ok());
        assert!(matches!(
            orders.check(&ExponentVector(vec![9, 0, 0])),
            Err(Error::NotNormalForm { coordinate: 0, .. })
        ));
        assert!(matches!(
            orders.reduce(&[1, 2]),
            Err(Error::DimensionMismatch {
                expected: 3,
                found: 2
            })
        ));
    }
}
