use std::sync::Arc;

use patchtop::enumerate::{
    random_generating_supports, random_point_map, random_poset, random_retractable_tower, random_subset,
};
use patchtop::lattice::realize_in_ambient;
use patchtop::{
    FinPoset, LevelSet, MapFamily, ObjectTerm, ProDensity, ProPoint, ProSpace, Probe,
    Sections, SetLattice, SpectralMap, Subset, SupportDatum,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn poset(seed: u64, n: usize) -> FinPoset {
    random_poset(&mut ChaCha8Rng::seed_from_u64(seed), n, 0.4)
}

fn random_lattice(rng: &mut ChaCha8Rng, carrier: usize, gens: usize) -> SetLattice {
    let gens: Vec<Subset> = (0..gens).map(|_| random_subset(rng, carrier)).collect();
    SetLattice::generate((0..carrier).map(|i| format!("p{i}")).collect(), &gens).unwrap()
}

fn term(labels: Vec<String>) -> impl Strategy<Value = ObjectTerm> {
    let constant = prop_oneof![Just(ObjectTerm::Zero), Just(ObjectTerm::One)];
    let leaf = if labels.is_empty() {
        constant.boxed()
    } else {
        prop_oneof![constant, proptest::sample::select(labels).prop_map(ObjectTerm::Gen)].boxed()
    };
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(ObjectTerm::susp),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| ObjectTerm::tensor(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| ObjectTerm::sum(a, b)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dual_is_an_involution(seed in any::<u64>(), n in 0usize..7) {
        let x = poset(seed, n);
        prop_assert_eq!(x.hochster_dual().hochster_dual(), x);
    }

    #[test]
    fn thomason_sets_are_dual_opens(seed in any::<u64>(), n in 1usize..7) {
        let x = poset(seed, n);
        let dual = x.hochster_dual();
        let s = random_subset(&mut ChaCha8Rng::seed_from_u64(seed ^ 1), n);
        prop_assert_eq!(x.is_thomason(&s).unwrap(), dual.is_open(&s));
    }

    #[test]
    fn closure_is_a_closure_operator(seed in any::<u64>(), n in 1usize..7) {
        let x = poset(seed, n);
        let s = random_subset(&mut ChaCha8Rng::seed_from_u64(seed ^ 2), n);
        let c = x.closure(&s).unwrap();
        prop_assert!(s.is_subset(&c));
        prop_assert!(x.is_closed(&c));
        prop_assert_eq!(x.closure(&c).unwrap(), c);
    }

    #[test]
    fn density_lemma_conditions_agree(seed in any::<u64>(), n in 1usize..8, m in 0usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_poset(&mut rng, n, 0.4);
        let i = random_point_map(&mut rng, &x, m);
        let r = x.lemma_dense_epi(&i).unwrap();
        prop_assert!(r.agree(), "{:?}", r);
    }

    #[test]
    fn finite_points_are_weakly_visible(seed in any::<u64>(), n in 0usize..7) {
        let x = poset(seed, n);
        prop_assert_eq!(x.weakly_visible_points(), x.full());
        prop_assert_eq!(x.locally_closed_points(), x.full());
    }

    #[test]
    fn closure_algorithms_agree(seed in any::<u64>(), n in 1usize..7, g in 0usize..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let l = random_lattice(&mut rng, n, g);
        let a = l.spectral_closure();
        let b = l.closure_via_evaluation();
        prop_assert!(a.canonical_iso(&b).is_ok());
        prop_assert!(a.unit_star_is_bijection(&l));
        prop_assert!(b.unit_star_is_bijection(&l));
        prop_assert_eq!(a.unit_is_injective(), l.separates_points());
    }

    #[test]
    fn closure_factors_lattice_maps(seed in any::<u64>(), n in 1usize..6, g in 0usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let l = random_lattice(&mut rng, n, g);
        let c = l.spectral_closure();
        // The unit itself factors through the identity.
        let f = c.factor(&l, &c.space, &c.unit).unwrap();
        let id = SpectralMap::identity(&c.space);
        prop_assert_eq!(f.assignment(), id.assignment());
    }

    #[test]
    fn realization_in_ambient(seed in any::<u64>(), n in 1usize..7, m in 0usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_poset(&mut rng, n, 0.4);
        let i = random_point_map(&mut rng, &x, m);
        prop_assert!(realize_in_ambient(&i, &x).is_ok());
    }

    #[test]
    fn level_set_equality_is_a_congruence(n in 0usize..6, a in 0usize..6, b in 0usize..6, mask in any::<u64>()) {
        let x = ProSpace::chromatic(12);
        let c = LevelSet::new(n, Subset::from_mask(n + 1, mask & ((1 << (n + 1)) - 1)));
        let (m1, m2) = (n + a, n + b);
        let l1 = x.lift(&c, m1).unwrap();
        let l2 = x.lift(&c, m2).unwrap();
        prop_assert!(x.same_set(&l1, &l2).unwrap());
        prop_assert!(x.same_set(&c, &l1).unwrap());
        let top = m1.max(m2);
        prop_assert_eq!(x.lift(&l1, top).unwrap(), x.lift(&l2, top).unwrap());
    }

    #[test]
    fn membership_survives_lifting(k in 1usize..10, n in 0usize..6, extra in 0usize..6, mask in any::<u64>()) {
        let x = ProSpace::chromatic(12);
        let c = LevelSet::new(n, Subset::from_mask(n + 1, mask & ((1 << (n + 1)) - 1)));
        for p in [ProPoint::chromatic(k), ProPoint::chromatic_infinity()] {
            let here = x.member(&p, &c).unwrap();
            prop_assert_eq!(here, x.member(&p, &x.lift(&c, n + extra).unwrap()).unwrap());
        }
    }

    #[test]
    fn retractable_limits_are_proven_dense(seed in any::<u64>(), levels in 1usize..5, base in 1usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (x, s) = random_retractable_tower(&mut rng, levels, base);
        let fam = x.retractable_limit(s).unwrap();
        let depth = x.max_level();
        prop_assert_eq!(x.patch_dense_pro(&fam, depth).unwrap(), ProDensity::DenseProven { depth });
    }

    #[test]
    fn dropping_a_finite_point_is_refuted(n in 1usize..12) {
        let x = ProSpace::chromatic(12);
        let points = (1..=13).filter(|&k| k != n).map(ProPoint::chromatic).collect();
        let fam = patchtop::DenseFamily::from_points(points);
        match x.patch_dense_pro(&fam, 12).unwrap() {
            ProDensity::NotDense { witness, .. } => {
                let expected = x.level_set(n, &[format!("C{n}")]).unwrap();
                prop_assert!(x.same_set(&witness, &expected).unwrap());
            }
            other => prop_assert!(false, "unexpected {:?}", other),
        }
    }
}

fn datum_strategy() -> impl Strategy<Value = (SupportDatum, Vec<String>)> {
    (any::<u64>(), 1usize..6).prop_map(|(seed, n)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_poset(&mut rng, n, 0.4);
        let gens = random_generating_supports(&mut rng, &x);
        let labels = gens.iter().map(|(l, _)| l.clone()).collect();
        (SupportDatum::finite(x, gens).unwrap(), labels)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn supp_is_a_homomorphism(
        (d, a, b) in datum_strategy().prop_flat_map(|(d, labels)| {
            (Just(d), term(labels.clone()), term(labels))
        })
    ) {
        let (sa, sb) = (d.supp(&a).unwrap(), d.supp(&b).unwrap());
        prop_assert_eq!(d.supp(&ObjectTerm::tensor(a.clone(), b.clone())).unwrap(), sa.intersection(&sb));
        prop_assert_eq!(d.supp(&ObjectTerm::sum(a.clone(), b)).unwrap(), sa.union(&sb));
        prop_assert_eq!(d.supp(&ObjectTerm::susp(a)).unwrap(), sa.clone());
        prop_assert!(d.working_poset().is_thomason(&sa).unwrap());
    }

    #[test]
    fn characterizations_agree((d, _) in datum_strategy(), seed in any::<u64>()) {
        let x = d.working_poset().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let dense = random_subset(&mut rng, x.len());
        let inclusion = SpectralMap::new(
            x.subposet(&dense).0,
            x.clone(),
            dense.iter().collect(),
        ).unwrap();
        let r = d.distinguishes_supports(&MapFamily::Finite(vec![inclusion]), 24).unwrap();
        prop_assert!(r.catalog_complete && r.generating);
        prop_assert!(r.agree(), "{:?}", r);
        let inj = d.dense_injectivity_check(&Probe::Subset(dense), 24).unwrap();
        prop_assert!(inj.agrees_with_density(), "{:?}", inj);
    }

    #[test]
    fn ideal_shadows_embed_in_thomason_sets((d, _) in datum_strategy()) {
        let ideals = d.ideal_shadows(24);
        for i in &ideals {
            prop_assert!(i.round_trip_exact());
            for j in &ideals {
                prop_assert_eq!(i.is_subideal(j), i.thomason().is_subset(j.thomason()));
            }
        }
    }

    #[test]
    fn reconstruction_round_trip((d, _) in datum_strategy()) {
        let x = d.working_poset().clone();
        let r = d.reconstruct_from_dense(&Probe::Subset(x.full()), 24, 0).unwrap();
        let level = &r.levels[0];
        prop_assert_eq!(&level.target, &x);
        prop_assert_eq!(level.iso.len(), x.len());
    }
}

#[test]
fn chromatic_reconstruction_matches_levels() {
    let x = Arc::new(ProSpace::chromatic(16));
    let d = SupportDatum::chromatic(x.clone(), 16).unwrap();
    let fam = x.retractable_limit(Sections::NextPoint).unwrap();
    let r = d.reconstruct_from_dense(&Probe::Family(fam), 40, 16).unwrap();
    for (n, lvl) in r.levels.iter().enumerate() {
        assert_eq!(lvl.level, n);
        assert_eq!(&lvl.target, x.level(n).unwrap());
    }
}
