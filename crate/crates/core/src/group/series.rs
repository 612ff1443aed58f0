use super::orders::log_exact;
use super::split::{GroupElement, SplitGroup};
use super::subgroup::{Closure, Subgroup};
use crate::{Error, Result};

impl SplitGroup {
    /// `[G_1, …, G_{c+1}]` with `G_1 = G`, `G_{n+1} = [G_n, G]` and
    /// `G_{c+1} = {e}`.
    ///
    /// Each term is the normal closure of `[s, g]` over generators `s` of the
    /// previous term and generators `g` of the group.
    pub fn lower_central_series(&self) -> Result<Vec<Subgroup>> {
        let gens = self.generators();
        let mut series = vec![Subgroup::whole(self)?];
        loop {
            let prev = series.last().unwrap();
            if prev.is_trivial() {
                return Ok(series);
            }
            let commutators: Vec<GroupElement> = prev
                .generators()
                .iter()
                .flat_map(|s| gens.iter().map(move |g| (s, g)))
                .map(|(s, g)| self.comm_nf(s, g))
                .filter(|c| !self.is_identity(c))
                .collect();
            let next = self.normal_closure(&commutators)?;
            if next.order() == prev.order() {
                return Err(Error::NotNilpotent {
                    order: next.order(),
                });
            }
            series.push(next);
        }
    }

    /// Length of the lower central series minus one, read from the computed
    /// series.
    pub fn nilpotency_class(&self) -> Result<usize> {
        Ok(self.lower_central_series()?.len() - 1)
    }

    /// `[G, G]`, the normal closure of commutators of generators.
    pub fn derived_subgroup(&self) -> Result<Subgroup> {
        let gens = self.generators();
        let mut commutators = Vec::new();
        for (i, a) in gens.iter().enumerate() {
            for b in &gens[i + 1..] {
                commutators.push(self.comm_nf(a, b));
            }
        }
        self.normal_closure(&commutators)
    }

    /// Elements commuting with every generator, found by a full scan.
    pub fn center(&self) -> Result<Subgroup> {
        let gens = self.generators();
        let mut closure = Closure::new(self)?;
        for x in self.enumerate()? {
            if gens.iter().all(|s| self.is_identity(&self.comm_nf(&x, s))) {
                closure.add(x);
            }
        }
        Ok(closure.finish())
    }

    /// Order of `gS` in `G/S`: the smallest `k >= 1` with `g^k` in `S`.
    pub fn order_mod_subgroup(&self, g: &GroupElement, s: &Subgroup) -> Result<u64> {
        self.check(g)?;
        if !s.is_normal(self) {
            return Err(Error::NotNormal);
        }
        let mut k = 1;
        let mut acc = g.clone();
        while !s.contains(self, &acc) {
            acc = self.mul_nf(&acc, g);
            k += 1;
        }
        Ok(k)
    }

    /// Size of every minimal generating set, `log_p |G / Φ(G)|`.
    pub fn frattini_rank(&self) -> Result<u32> {
        self.quotient_frattini_rank(&Subgroup::trivial(self)?)
    }

    /// Frattini rank of `G/N`, computed in `G` with `Φ(G/N)` pulled back to
    /// `G^p [G, G] N`.
    pub fn quotient_frattini_rank(&self, normal: &Subgroup) -> Result<u32> {
        if !normal.is_normal(self) {
            return Err(Error::NotNormal);
        }
        if self.order() == 1 {
            return Ok(0);
        }
        let (p, _) = self
            .prime_power()
            .ok_or(Error::NotPrimePowerOrder(self.order()))?;
        let derived = self.derived_subgroup()?;
        let mut closure = Closure::new(self)?;
        for g in normal.generators().iter().chain(derived.generators()) {
            closure.add(g.clone());
        }
        for x in self.enumerate()? {
            closure.add(self.pow_nf(&x, p as i64));
        }
        let frattini = closure.finish();
        let index = self.order() / frattini.order() as u64;
        Ok(log_exact(index, p).expect("index of a subgroup of a p-group is a power of p"))
    }
}

#[cfg(test)]
mod tests {
    use crate::group::{make_group, ActionMatrix, CyclicOrders, SplitGroup};
    use crate::Error;

    fn ef32() -> SplitGroup {
        make_group(
            3,
            CyclicOrders::new(vec![9, 9, 3]).unwrap(),
            ActionMatrix::from_columns(vec![vec![1, 1, 0], vec![0, 1, 1], vec![0, -3, -2]]),
        )
        .unwrap()
    }

    fn abelian(orders: &[u64]) -> SplitGroup {
        make_group(
            1,
            CyclicOrders::new(orders.to_vec()).unwrap(),
            ActionMatrix::identity(orders.len()),
        )
        .unwrap()
    }

    #[test]
    fn abelian_group_has_class_one() {
        let g = abelian(&[4, 2]);
        assert_eq!(g.nilpotency_class().unwrap(), 1);
        assert_eq!(g.center().unwrap().order(), 8);
        assert_eq!(g.frattini_rank().unwrap(), 2);
        assert_eq!(abelian(&[5]).frattini_rank().unwrap(), 1);
    }

    #[test]
    fn trivial_group_series() {
        let g = abelian(&[1]);
        assert_eq!(g.nilpotency_class().unwrap(), 0);
        assert_eq!(g.frattini_rank().unwrap(), 0);
    }

    #[test]
    fn ef32_series_and_center() {
        let g = ef32();
        let series = g.lower_central_series().unwrap();
        let orders: Vec<usize> = series.iter().map(|s| s.order()).collect();
        // K_2 = ⟨x1, x2⟩, K_3 = ⟨x1^3, x2⟩, K_4 = ⟨x1^3⟩
        assert_eq!(orders, vec![729, 27, 9, 3, 1]);
        let x1_cubed = g.element(0, &[0, 3, 0]).unwrap();
        assert!(series[3].contains(&g, &x1_cubed));
        for w in series.windows(2) {
            assert!(w[1].is_subgroup_of(&w[0]));
            assert!(w[1].is_normal(&g));
        }
        let z = g.center().unwrap();
        assert!(z.contains(&g, &x1_cubed));
        assert_eq!(g.order_mod_subgroup(&g.h_generator(0), &z).unwrap(), 9);
        assert_eq!(g.order_mod_subgroup(&g.top_generator(), &z).unwrap(), 3);
        assert_eq!(g.quotient_frattini_rank(&z).unwrap(), 2);
        assert_eq!(g.frattini_rank().unwrap(), 2);
    }

    #[test]
    fn order_mod_subgroup_edge_cases() {
        let g = ef32();
        let trivial = g.subgroup_closure(&[]).unwrap();
        let whole = g.subgroup_closure(&g.generators()).unwrap();
        for x in g.enumerate().unwrap().iter().step_by(17) {
            assert_eq!(g.order_mod_subgroup(x, &whole).unwrap(), 1);
            assert_eq!(
                g.order_mod_subgroup(x, &trivial).unwrap(),
                g.element_order(x).unwrap()
            );
        }
        let top = g.subgroup_closure(&[g.top_generator()]).unwrap();
        assert_eq!(
            g.order_mod_subgroup(&g.h_generator(0), &top).unwrap_err(),
            Error::NotNormal
        );
    }

    #[test]
    fn frattini_rank_needs_prime_power_order() {
        // C_2 ⋉ C_9 with inversion: order 18
        let g = make_group(
            2,
            CyclicOrders::new(vec![9]).unwrap(),
            ActionMatrix::from_columns(vec![vec![-1]]),
        )
        .unwrap();
        assert_eq!(
            g.frattini_rank().unwrap_err(),
            Error::NotPrimePowerOrder(18)
        );
    }

    #[test]
    fn non_nilpotent_group_is_reported() {
        // S3 = C_2 ⋉ C_3: [C3, G] = C3 forever
        let g = make_group(
            2,
            CyclicOrders::new(vec![3]).unwrap(),
            ActionMatrix::from_columns(vec![vec![-1]]),
        )
        .unwrap();
        assert_eq!(
            g.lower_central_series().unwrap_err(),
            Error::NotNilpotent { order: 3 }
        );
    }
}
