mod common;

use leglab::front::StabilizationSign;
use leglab::skein::SkeinConfig;
use leglab::*;
use proptest::prelude::*;

fn front(seed: u64, size: usize) -> OrientedFront {
    common::random_front(&mut common::rng(seed), size)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn classical_invariants_behave(seed in any::<u64>()) {
        let f = front(seed, 16);
        let inv = f.invariants();
        prop_assert!(inv.parity_ok());
        prop_assert_eq!(inv.left_cusps, inv.right_cusps);
        let rev = f.reversed().invariants();
        prop_assert_eq!((rev.tb, rev.r), (inv.tb, -inv.r));
        let s = stabilize(&f, StabilizationSign::Negative).invariants();
        prop_assert_eq!((s.tb, s.r), (inv.tb - 1, inv.r - 1));
    }

    #[test]
    fn pd_round_trips_and_keeps_writhe(seed in any::<u64>()) {
        let f = front(seed, 16);
        let pd = front_to_pd(&f);
        prop_assert_eq!(pd.writhe(), f.invariants().writhe);
        let again: PDCode = pd.to_string().parse().unwrap();
        prop_assert_eq!(&again, &pd);
        prop_assert_eq!(mirror(&mirror(&pd)), pd);
    }

    #[test]
    fn mirror_negates_signature(seed in any::<u64>()) {
        let pd = front_to_pd(&front(seed, 14));
        prop_assert_eq!(signature(&mirror(&pd)), -signature(&pd));
        prop_assert_eq!(determinant(&mirror(&pd)), determinant(&pd));
        prop_assert_eq!(determinant(&pd) % 2, 1);
    }

    #[test]
    fn bennequin_inequality_holds(seed in any::<u64>()) {
        let f = front(seed, 14);
        let inv = f.invariants();
        let g = seifert_genus_upper(&front_to_pd(&f));
        prop_assert!(inv.tb_plus_abs_r() < 2 * g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn polynomial_bounds_hold_and_mirror(seed in any::<u64>()) {
        let f = front(seed, 12);
        let inv = f.invariants();
        let pd = front_to_pd(&f);
        let cfg = SkeinConfig::default();
        let h = homfly(&pd).unwrap();
        let k = kauffman(&pd).unwrap();
        prop_assert!(inv.tb_plus_abs_r() <= homfly_bound(&h).unwrap());
        prop_assert!(inv.tb <= kauffman_bound(&k).unwrap());
        let hm = homfly(&mirror(&pd)).unwrap();
        prop_assert_eq!(hm, h.substitute(-1, 1, |_, z| if z % 2 == 0 { 1 } else { -1 }));
        let off = leglab::skein::homfly_with(&pd, &SkeinConfig { memo: false, ..cfg }).unwrap();
        prop_assert_eq!(off.poly, h);
    }
}

#[test]
fn generator_covers_nontrivial_fronts() {
    let mut rng = common::rng(7);
    let crossings: Vec<usize> =
        (0..300).map(|_| common::random_front(&mut rng, 16).diagram().crossing_count()).collect();
    let big = crossings.iter().filter(|&&c| c >= 4).count();
    let knotted = (0..300).filter(|&s| leglab::determinant(&front_to_pd(&front(s, 16))) > 1).count();
    assert!(big > 30, "only {big} fronts with 4+ crossings");
    assert!(knotted > 5, "only {knotted} visibly knotted fronts");
}
