use fixedbitset::FixedBitSet;

use super::split::{GroupElement, SplitGroup};
use crate::Result;

/// A subgroup held as an explicit element set, with generators as witnesses.
///
/// Members are stored by their normal-form index in the parent group, so
/// element-level access needs the group that produced the subgroup.
#[derive(Debug, Clone)]
pub struct Subgroup {
    members: FixedBitSet,
    list: Vec<usize>,
    generators: Vec<GroupElement>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    /// The whole group, generated by its distinguished generators.
    pub fn whole(group: &SplitGroup) -> Result<Self> {
        let n = group.ensure_enumerable()?;
        let mut members = FixedBitSet::with_capacity(n);
        members.insert_range(..);
        Ok(Subgroup {
            members,
            list: (0..n).collect(),
            generators: group.generators(),
        })
    }

    pub fn trivial(group: &SplitGroup) -> Result<Self> {
        Ok(Closure::new(group)?.finish())
    }

    pub fn order(&self) -> usize {
        self.list.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    pub fn contains(&self, group: &SplitGroup, g: &GroupElement) -> bool {
        group.check(g).is_ok() && self.members.contains(group.encode(g))
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn elements<'a>(
        &'a self,
        group: &'a SplitGroup,
    ) -> impl Iterator<Item = GroupElement> + 'a {
        self.list.iter().map(move |&i| group.decode(i))
    }

    /// Stable under conjugation by every generator of `group`.
    pub fn is_normal(&self, group: &SplitGroup) -> bool {
        let gens = group.generators();
        self.generators.iter().all(|s| {
            gens.iter()
                .all(|g| self.members.contains(group.encode(&group.conj_nf(s, g))))
        })
    }
}

/// Incremental breadth-first closure under right multiplication by
/// generators.
///
/// Invariant between calls: every member times every generator is a member,
/// which for a finite group means the member set is the generated subgroup.
pub(crate) struct Closure<'g> {
    group: &'g SplitGroup,
    members: FixedBitSet,
    list: Vec<usize>,
    generators: Vec<GroupElement>,
}

impl<'g> Closure<'g> {
    pub(crate) fn new(group: &'g SplitGroup) -> Result<Self> {
        let n = group.ensure_enumerable()?;
        let mut members = FixedBitSet::with_capacity(n);
        let e = group.encode(&group.identity());
        members.insert(e);
        Ok(Closure {
            group,
            members,
            list: vec![e],
            generators: Vec::new(),
        })
    }

    pub(crate) fn contains(&self, g: &GroupElement) -> bool {
        self.members.contains(self.group.encode(g))
    }

    pub(crate) fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    fn insert(&mut self, g: &GroupElement) {
        let i = self.group.encode(g);
        if !self.members.put(i) {
            self.list.push(i);
        }
    }

    /// Extends the subgroup by `g`. Returns false if `g` was already a member.
    pub(crate) fn add(&mut self, g: GroupElement) -> bool {
        if self.contains(&g) {
            return false;
        }
        let group = self.group;
        let old_len = self.list.len();
        // old members are already closed under the old generators
        for k in 0..old_len {
            let x = group.decode(self.list[k]);
            self.insert(&group.mul_nf(&x, &g));
        }
        self.generators.push(g);
        let mut cursor = old_len;
        while cursor < self.list.len() {
            let x = group.decode(self.list[cursor]);
            for s in 0..self.generators.len() {
                let y = group.mul_nf(&x, &self.generators[s]);
                self.insert(&y);
            }
            cursor += 1;
        }
        true
    }

    pub(crate) fn finish(self) -> Subgroup {
        Subgroup {
            members: self.members,
            list: self.list,
            generators: self.generators,
        }
    }
}

impl SplitGroup {
    /// Smallest subgroup containing `gens`.
    pub fn subgroup_closure(&self, gens: &[GroupElement]) -> Result<Subgroup> {
        for g in gens {
            self.check(g)?;
        }
        let mut closure = Closure::new(self)?;
        for g in gens {
            closure.add(g.clone());
        }
        Ok(closure.finish())
    }

    /// Smallest normal subgroup containing `gens`.
    ///
    /// Conjugates each subgroup generator by each group generator and
    /// extends until nothing new appears. Conjugation by the inverse of a
    /// generator needs no separate check in a finite group.
    pub fn normal_closure(&self, gens: &[GroupElement]) -> Result<Subgroup> {
        for g in gens {
            self.check(g)?;
        }
        let group_gens = self.generators();
        let mut closure = Closure::new(self)?;
        for g in gens {
            closure.add(g.clone());
        }
        let mut next = 0;
        while next < closure.generators().len() {
            let s = closure.generators()[next].clone();
            for g in &group_gens {
                closure.add(self.conj_nf(&s, g));
            }
            next += 1;
        }
        Ok(closure.finish())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{make_group, ActionMatrix, CyclicOrders};

    fn ef32() -> SplitGroup {
        make_group(
            3,
            CyclicOrders::new(vec![9, 9, 3]).unwrap(),
            ActionMatrix::from_columns(vec![vec![1, 1, 0], vec![0, 1, 1], vec![0, -3, -2]]),
        )
        .unwrap()
    }

    /// Naive closure: keep multiplying every pair of members.
    fn brute_closure(
        g: &SplitGroup,
        gens: &[GroupElement],
    ) -> std::collections::HashSet<GroupElement> {
        let mut set: std::collections::HashSet<_> = gens.iter().cloned().collect();
        set.insert(g.identity());
        loop {
            let snapshot: Vec<_> = set.iter().cloned().collect();
            let before = set.len();
            for a in &snapshot {
                for b in &snapshot {
                    set.insert(g.mul_nf(a, b));
                }
            }
            if set.len() == before {
                return set;
            }
        }
    }

    #[test]
    fn closure_of_nothing_is_trivial() {
        let g = ef32();
        let s = g.subgroup_closure(&[]).unwrap();
        assert!(s.is_trivial());
        assert!(s.contains(&g, &g.identity()));
    }

    #[test]
    fn closure_of_x1_is_cyclic_of_order_9() {
        let g = ef32();
        let s = g.subgroup_closure(&[g.h_generator(1)]).unwrap();
        assert_eq!(s.order(), 9);
    }

    #[test]
    fn closure_agrees_with_brute_force() {
        let g = ef32();
        let cases = vec![
            vec![g.top_generator()],
            vec![g.h_generator(1), g.h_generator(2)],
            vec![g.top_generator(), g.h_generator(1)],
            vec![
                g.element(1, &[3, 0, 1]).unwrap(),
                g.element(0, &[0, 3, 0]).unwrap(),
            ],
        ];
        for gens in cases {
            let fast = g.subgroup_closure(&gens).unwrap();
            let slow = brute_closure(&g, &gens);
            assert_eq!(fast.order(), slow.len());
            assert!(fast.elements(&g).all(|x| slow.contains(&x)));
            assert_eq!(729 % fast.order(), 0);
        }
    }

    #[test]
    fn normal_closure_examples() {
        let g = ef32();
        assert!(g.normal_closure(&[g.identity()]).unwrap().is_trivial());
        let n = g.normal_closure(&[g.h_generator(1)]).unwrap();
        let expected = g
            .subgroup_closure(&[g.h_generator(1), g.h_generator(2)])
            .unwrap();
        assert_eq!(n, expected);
        assert!(n.is_normal(&g));
        // ⟨y⟩ is not normal
        let top = g.subgroup_closure(&[g.top_generator()]).unwrap();
        assert!(!top.is_normal(&g));
    }

    #[test]
    fn whole_group() {
        let g = ef32();
        let all = Subgroup::whole(&g).unwrap();
        assert_eq!(all.order(), 729);
        assert_eq!(all, g.subgroup_closure(&g.generators()).unwrap());
        assert!(all.is_normal(&g));
    }
}
