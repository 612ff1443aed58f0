use std::fmt;

use num_integer::Integer;

use super::action::{ActionMatrix, ReducedMatrix};
use super::orders::{prime_power, residue, CyclicOrders, ExponentVector};
use crate::{Error, Result};

/// Largest group that subgroup and series computations will enumerate.
pub const DEFAULT_ENUMERATION_CAP: u64 = 5_000_000;

/// Element `y^t · h` of a split group, with `t` in `[0, m)` and `h` in H.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    t: u64,
    v: ExponentVector,
}

impl GroupElement {
    pub fn new(t: u64, v: ExponentVector) -> Self {
        GroupElement { t, v }
    }

    /// Exponent of the top generator.
    pub fn top(&self) -> u64 {
        self.t
    }

    pub fn exponents(&self) -> &ExponentVector {
        &self.v
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y^{} {}", self.t, self.v)
    }
}

/// Which family a group was built from; drives what a witness check predicts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Construction {
    Easterfield { p: u64, r: u32 },
    EasterfieldSubgroup { p: u64, r: u32 },
    Dihedral { n: u64 },
    Custom,
}

/// The finite group `H ⋊ ⟨y⟩` where H is a product of cyclic p-groups and
/// `y` of order `m` acts by `y^{-1} h y = α(h)`.
///
/// Immutable once validated. Powers of α are precomputed up to the order of
/// α, so each product costs one matrix-vector multiplication.
#[derive(Debug, Clone)]
pub struct SplitGroup {
    m: u64,
    orders: CyclicOrders,
    action: ActionMatrix,
    labels: Vec<String>,
    powers: Vec<ReducedMatrix>,
    order: u64,
    cap: u64,
    construction: Construction,
}

/// Validates `(m, orders, action)` and builds the group.
pub fn make_group(m: u64, orders: CyclicOrders, action: ActionMatrix) -> Result<SplitGroup> {
    SplitGroup::new(m, orders, action)
}

impl SplitGroup {
    pub fn new(m: u64, orders: CyclicOrders, action: ActionMatrix) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroTopOrder);
        }
        let dim = orders.len();
        action.check_shape(dim)?;
        action.check_well_defined(&orders)?;
        let o = orders.as_slice();
        let alpha = ReducedMatrix::reduce(&action, o);
        if !alpha.invertible_mod_prime(o, orders.prime()) {
            return Err(Error::NotInvertible);
        }
        if !alpha.pow(m, o).is_identity(o) {
            return Err(Error::ActionOrderMismatch { m });
        }
        let mut powers = vec![ReducedMatrix::identity(o)];
        loop {
            let next = powers.last().unwrap().mul(&alpha, o);
            if next.is_identity(o) {
                break;
            }
            powers.push(next);
        }
        let order = orders
            .product()
            .and_then(|h| h.checked_mul(m))
            .ok_or(Error::OrderOverflow)?;
        let labels = std::iter::once("y".to_string())
            .chain((0..dim).map(|i| format!("x{i}")))
            .collect();
        Ok(SplitGroup {
            m,
            orders,
            action,
            labels,
            powers,
            order,
            cap: DEFAULT_ENUMERATION_CAP,
            construction: Construction::Custom,
        })
    }

    pub fn with_enumeration_cap(mut self, cap: u64) -> Self {
        self.cap = cap;
        self
    }

    /// Labels for the top generator followed by the H generators.
    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim() + 1, "one label per generator");
        self.labels = labels;
        self
    }

    pub(crate) fn with_construction(mut self, construction: Construction) -> Self {
        self.construction = construction;
        self
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn orders(&self) -> &CyclicOrders {
        &self.orders
    }

    pub fn action(&self) -> &ActionMatrix {
        &self.action
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Number of cyclic factors of H.
    pub fn dim(&self) -> usize {
        self.orders.len()
    }

    /// `|G| = m · |H|`.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn enumeration_cap(&self) -> u64 {
        self.cap
    }

    pub fn construction(&self) -> Construction {
        self.construction
    }

    /// Order of the automorphism α.
    pub fn action_order(&self) -> u64 {
        self.powers.len() as u64
    }

    /// `(p, k)` with `|G| = p^k`, or `None` if the order is not a prime power.
    pub fn prime_power(&self) -> Option<(u64, u32)> {
        prime_power(self.order)
    }

    pub(crate) fn ensure_enumerable(&self) -> Result<usize> {
        if self.order > self.cap {
            return Err(Error::CapExceeded {
                order: self.order,
                cap: self.cap,
            });
        }
        Ok(self.order as usize)
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::new(0, ExponentVector::zero(self.dim()))
    }

    /// The top generator `y`.
    pub fn top_generator(&self) -> GroupElement {
        GroupElement::new(1 % self.m, ExponentVector::zero(self.dim()))
    }

    /// The generator `x_i` of the `i`-th cyclic factor of H.
    pub fn h_generator(&self, i: usize) -> GroupElement {
        let mut v = ExponentVector::unit(self.dim(), i);
        v.0[i] %= self.orders.as_slice()[i];
        GroupElement::new(0, v)
    }

    /// `y` and the `x_i`, skipping any that are trivial.
    pub fn generators(&self) -> Vec<GroupElement> {
        let mut gens = Vec::with_capacity(self.dim() + 1);
        if self.m > 1 {
            gens.push(self.top_generator());
        }
        gens.extend(
            (0..self.dim())
                .filter(|&i| self.orders.as_slice()[i] > 1)
                .map(|i| self.h_generator(i)),
        );
        gens
    }

    /// `y^t · x_0^{e_0} ⋯` from arbitrary signed exponents.
    pub fn element(&self, t: i64, exponents: &[i64]) -> Result<GroupElement> {
        let v = self.orders.reduce(exponents)?;
        Ok(GroupElement::new(residue(t as i128, self.m), v))
    }

    /// Checks that `g` is a normal form for this group.
    pub fn check(&self, g: &GroupElement) -> Result<()> {
        self.orders.check(&g.v)?;
        if g.t >= self.m {
            return Err(Error::NotNormalForm {
                coordinate: usize::MAX,
                value: g.t,
                order: self.m,
            });
        }
        Ok(())
    }

    pub fn mul(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul_nf(a, b))
    }

    pub fn inv(&self, g: &GroupElement) -> Result<GroupElement> {
        self.check(g)?;
        Ok(self.inv_nf(g))
    }

    /// `g^k` for any integer `k`.
    pub fn pow(&self, g: &GroupElement, k: i64) -> Result<GroupElement> {
        self.check(g)?;
        Ok(self.pow_nf(g, k))
    }

    /// `[a, b] = a^{-1} b^{-1} a b`.
    pub fn comm(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.comm_nf(a, b))
    }

    /// `g^{-1} h g`.
    pub fn conj(&self, h: &GroupElement, g: &GroupElement) -> Result<GroupElement> {
        self.check(h)?;
        self.check(g)?;
        Ok(self.conj_nf(h, g))
    }

    /// Smallest `k >= 1` with `g^k = e`.
    pub fn element_order(&self, g: &GroupElement) -> Result<u64> {
        self.check(g)?;
        Ok(self.order_nf(g))
    }

    /// `(y^t h)(y^s h') = y^{t+s} · α^s(h) h'`.
    pub(crate) fn mul_nf(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let o = self.orders.as_slice();
        let alpha = &self.powers[(b.t % self.action_order()) as usize];
        let mut v = vec![0; o.len()];
        alpha.apply_into(&a.v.0, o, &mut v);
        for ((x, &y), &order) in v.iter_mut().zip(&b.v.0).zip(o) {
            *x = ((*x as u128 + y as u128) % order as u128) as u64;
        }
        GroupElement::new((a.t + b.t) % self.m, ExponentVector(v))
    }

    /// `(y^t h)^{-1} = y^{-t} · α^{-t}(h^{-1})`.
    pub(crate) fn inv_nf(&self, g: &GroupElement) -> GroupElement {
        let o = self.orders.as_slice();
        let d = self.action_order();
        let s = (d - g.t % d) % d;
        let neg: Vec<u64> =
            g.v.0
                .iter()
                .zip(o)
                .map(|(&e, &order)| (order - e) % order)
                .collect();
        let mut v = vec![0; o.len()];
        self.powers[s as usize].apply_into(&neg, o, &mut v);
        GroupElement::new((self.m - g.t) % self.m, ExponentVector(v))
    }

    pub(crate) fn pow_nf(&self, g: &GroupElement, k: i64) -> GroupElement {
        let mut base = if k < 0 { self.inv_nf(g) } else { g.clone() };
        let mut exp = k.unsigned_abs();
        let mut acc = self.identity();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul_nf(&acc, &base);
            }
            exp >>= 1;
            if exp > 0 {
                base = self.mul_nf(&base, &base);
            }
        }
        acc
    }

    pub(crate) fn comm_nf(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let ab = self.mul_nf(a, b);
        let ba = self.mul_nf(b, a);
        self.mul_nf(&self.inv_nf(&ba), &ab)
    }

    pub(crate) fn conj_nf(&self, h: &GroupElement, g: &GroupElement) -> GroupElement {
        self.mul_nf(&self.mul_nf(&self.inv_nf(g), h), g)
    }

    /// The image of `g` in `C_m` has order `m' = m / gcd(t, m)`, and
    /// `g^{m'}` lies in H, where orders are read off coordinate-wise.
    pub(crate) fn order_nf(&self, g: &GroupElement) -> u64 {
        let top = self.m / g.t.gcd(&self.m);
        let h = self.pow_nf(g, top as i64);
        let h_order =
            h.v.0
                .iter()
                .zip(self.orders.as_slice())
                .fold(1u64, |acc, (&e, &o)| acc.lcm(&(o / e.gcd(&o))));
        top * h_order
    }

    pub(crate) fn is_identity(&self, g: &GroupElement) -> bool {
        g.t == 0 && g.v.is_zero()
    }

    /// Mixed-radix index of a normal form, `t` being the fastest digit.
    pub(crate) fn encode(&self, g: &GroupElement) -> usize {
        let mut index = g.t;
        let mut stride = self.m;
        for (&e, &o) in g.v.0.iter().zip(self.orders.as_slice()) {
            index += e * stride;
            stride *= o;
        }
        index as usize
    }

    pub(crate) fn decode(&self, index: usize) -> GroupElement {
        let mut rest = index as u64;
        let t = rest % self.m;
        rest /= self.m;
        let v = self
            .orders
            .as_slice()
            .iter()
            .map(|&o| {
                let e = rest % o;
                rest /= o;
                e
            })
            .collect();
        GroupElement::new(t, ExponentVector(v))
    }

    /// All `|G|` normal forms, each exactly once.
    pub fn enumerate(&self) -> Result<Vec<GroupElement>> {
        let n = self.ensure_enumerable()?;
        Ok((0..n).map(|i| self.decode(i)).collect())
    }
}
