use easterfield::constructions::{dihedral, easterfield, easterfield_subgroup, EasterfieldSpec};
use easterfield::{GroupElement, SplitGroup};
use proptest::prelude::*;

fn groups() -> Vec<SplitGroup> {
    let mut out = Vec::new();
    for (p, r) in [
        (2, 1),
        (2, 3),
        (3, 1),
        (3, 2),
        (3, 3),
        (5, 1),
        (5, 2),
        (7, 1),
    ] {
        let spec = EasterfieldSpec::new(p, r).unwrap();
        out.push(easterfield(spec).unwrap());
        out.push(easterfield_subgroup(spec).unwrap());
    }
    out.push(dihedral(32).unwrap());
    out
}

fn element(g: &SplitGroup, seed: &[u64]) -> GroupElement {
    let t = (seed[0] % g.m()) as i64;
    let v: Vec<i64> = g
        .orders()
        .as_slice()
        .iter()
        .zip(&seed[1..])
        .map(|(&o, &s)| (s % o) as i64)
        .collect();
    g.element(t, &v).unwrap()
}

fn seeds() -> impl Strategy<Value = Vec<u64>> {
    proptest::collection::vec(any::<u64>(), 9)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn group_axioms(which in 0usize..17, a in seeds(), b in seeds(), c in seeds()) {
        let gs = groups();
        let g = &gs[which];
        let (a, b, c) = (element(g, &a), element(g, &b), element(g, &c));
        let e = g.identity();
        prop_assert_eq!(g.mul(&g.mul(&a, &b)?, &c)?, g.mul(&a, &g.mul(&b, &c)?)?);
        prop_assert_eq!(g.mul(&a, &e)?, a.clone());
        prop_assert_eq!(g.mul(&e, &a)?, a.clone());
        prop_assert_eq!(g.mul(&a, &g.inv(&a)?)?, e.clone());
        prop_assert_eq!(g.inv(&g.mul(&a, &b)?)?, g.mul(&g.inv(&b)?, &g.inv(&a)?)?);
        let ab = g.mul(&a, &b)?;
        let ba = g.mul(&b, &a)?;
        prop_assert_eq!(g.mul(&ba, &g.comm(&a, &b)?)?, ab);
    }

    #[test]
    fn powers_and_orders(which in 0usize..17, a in seeds(), k in -50i64..50, l in -50i64..50) {
        let gs = groups();
        let g = &gs[which];
        let a = element(g, &a);
        prop_assert_eq!(g.mul(&g.pow(&a, k)?, &g.pow(&a, l)?)?, g.pow(&a, k + l)?);
        let n = g.element_order(&a)?;
        prop_assert_eq!(g.order() % n, 0);
        prop_assert_eq!(g.pow(&a, n as i64)?, g.identity());
        let trivial = g.subgroup_closure(&[])?;
        prop_assert_eq!(g.order_mod_subgroup(&a, &trivial)?, n);
    }

    #[test]
    fn conjugation_by_y_matches_action_columns(which in 0usize..17) {
        let gs = groups();
        let g = &gs[which];
        let y = g.top_generator();
        for j in 0..g.dim() {
            let image = g.conj(&g.h_generator(j), &y)?;
            prop_assert_eq!(image, g.element(0, g.action().column(j))?);
        }
    }

    #[test]
    fn closures_obey_lagrange(which in 0usize..17, a in seeds(), b in seeds()) {
        let gs = groups();
        let g = &gs[which];
        let gens = [element(g, &a), element(g, &b)];
        let s = g.subgroup_closure(&gens)?;
        prop_assert_eq!(g.order() % s.order() as u64, 0);
        let n = g.normal_closure(&gens)?;
        prop_assert!(s.is_subgroup_of(&n));
        prop_assert!(n.is_normal(g));
        prop_assert_eq!(g.order() % n.order() as u64, 0);
    }
}

#[test]
fn series_is_nested_and_normal() {
    for g in groups() {
        let series = g.lower_central_series().unwrap();
        for pair in series.windows(2) {
            assert!(pair[1].is_subgroup_of(&pair[0]));
            assert!(pair[1].is_normal(&g));
        }
        let z = g.center().unwrap();
        assert_eq!(g.order() % z.order() as u64, 0);
        // G_c is central
        assert!(series[series.len() - 2].is_subgroup_of(&z));
    }
}

#[test]
fn derived_subgroup_equals_closure_of_all_commutators() {
    for (p, r) in [(2, 2), (3, 1), (3, 2), (5, 1)] {
        let g = easterfield(EasterfieldSpec::new(p, r).unwrap()).unwrap();
        let elements = g.enumerate().unwrap();
        let mut all = Vec::new();
        for a in elements.iter().step_by(1) {
            for b in g.generators().iter().chain(elements.iter().step_by(5)) {
                all.push(g.comm(a, b).unwrap());
            }
        }
        all.sort();
        all.dedup();
        let oracle = g.subgroup_closure(&all).unwrap();
        assert_eq!(g.derived_subgroup().unwrap(), oracle, "({p},{r})");
        assert_eq!(g.lower_central_series().unwrap()[1], oracle);
    }
}
