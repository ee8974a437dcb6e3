//! Randomized engine invariants.  Each property draws small instances
//! from a seeded generator, so failures replay deterministically.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use centrex::engine::algebras::AlgVariety;
use centrex::engine::groups::GroupsOverAb;
use centrex::engine::pxm::PxmVariety;
use centrex::engine::{
    centralise, classify, product_extension, pullback_extension, relative_commutator, Extension,
    Variety,
};
use centrex::homology::{ce_h2, loday_hl2};
use centrex::samples::{groups, random};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 16, ..ProptestConfig::default() })]

    /// Central extensions are stable under pullback along any map into
    /// the base, here along the identity, a product projection, and the
    /// extension itself (the kernel pair).
    #[test]
    fn central_group_extensions_pull_back_to_central_ones(seed in any::<u64>()) {
        let v = GroupsOverAb;
        let f = random::group_surjection(&mut rng(seed));
        let ext = Extension::new(&v, f).expect("generated map is surjective");
        let central = centralise(&v, &ext).expect("centralisable").extension;
        let a = central.codomain(&v);
        let b = central.domain(&v);

        let mut pulls = vec![
            v.identity(&a),
            product_extension(&v, &a, &groups::cyclic(2)).expect("product").map,
        ];
        if b.order() * central.kernel.order() <= 100 {
            pulls.push(central.map.clone());
        }
        for g in pulls {
            let (pb, _) = pullback_extension(&v, &central, &g).expect("pullback");
            let rc = relative_commutator(&v, &pb).expect("commutator");
            prop_assert!(
                v.is_zero_sub(&pb.domain(&v), &rc),
                "pullback to a group of order {} lost centrality",
                pb.domain(&v).order()
            );
        }
    }

    /// Centralising yields a central extension; doing it again divides
    /// out nothing.
    #[test]
    fn centralising_groups_is_idempotent(seed in any::<u64>()) {
        let v = GroupsOverAb;
        let f = random::group_surjection(&mut rng(seed));
        let ext = Extension::new(&v, f).expect("surjective");
        let once = centralise(&v, &ext).expect("centralisable");
        prop_assert!(once.verified_central);
        let again = centralise(&v, &once.extension).expect("centralisable");
        prop_assert!(v.is_zero_sub(&once.extension.domain(&v), &again.divided));
    }

    #[test]
    fn centralising_leibniz_algebras_is_idempotent(seed in any::<u64>()) {
        for v in [AlgVariety::leib_lie(), AlgVariety::leib_vect()] {
            let f = random::leibniz_surjection(&mut rng(seed));
            let ext = Extension::new(&v, f).expect("surjective");
            let once = centralise(&v, &ext).expect("centralisable");
            prop_assert!(once.verified_central, "not central over {}", v.name());
            let again = centralise(&v, &once.extension).expect("centralisable");
            prop_assert!(v.is_zero_sub(&once.extension.domain(&v), &again.divided));
        }
    }

    /// Reflecting into the subcategory is idempotent: the unit of an
    /// already reflected object is an isomorphism.
    #[test]
    fn reflection_is_idempotent(seed in any::<u64>()) {
        let gv = GroupsOverAb;
        let f = random::group_surjection(&mut rng(seed));
        let (rb, _) = gv.reflect(&gv.domain(&f)).expect("reflect");
        let (_, eta2) = gv.reflect(&rb).expect("reflect");
        prop_assert!(gv.is_iso(&eta2));

        let f = random::leibniz_surjection(&mut rng(seed));
        for v in [AlgVariety::leib_lie(), AlgVariety::leib_vect()] {
            let (rb, _) = v.reflect(f.source()).expect("reflect");
            let (_, eta2) = v.reflect(&rb).expect("reflect");
            prop_assert!(v.is_iso(&eta2), "unit not iso over {}", v.name());
        }

        let f = random::pxm_surjection(&mut rng(seed));
        for v in [PxmVariety::over_xmod(), PxmVariety::over_ab()] {
            let (rb, _) = v.reflect(f.source()).expect("reflect");
            let (_, eta2) = v.reflect(&rb).expect("reflect");
            prop_assert!(v.is_iso(&eta2), "unit not iso over {}", v.name());
        }
        // The crossed variety needs a crossed input.
        let (crossed, _) = f.source().peiffication().expect("peiffication");
        let v = PxmVariety::crossed_over_ab();
        let (rb, _) = v.reflect(&crossed).expect("reflect");
        let (_, eta2) = v.reflect(&rb).expect("reflect");
        prop_assert!(v.is_iso(&eta2), "unit not iso over {}", v.name());
    }

    /// Both chain complexes really are complexes on random input.
    #[test]
    fn chain_complexes_square_to_zero(seed in any::<u64>()) {
        let f = random::lie_surjection(&mut rng(seed));
        for g in [f.source(), f.target()] {
            prop_assert!(ce_h2(g).expect("lie input").chain.is_complex());
            prop_assert!(loday_hl2(g).expect("leibniz input").chain.is_complex());
        }
        let f = random::leibniz_surjection(&mut rng(seed));
        prop_assert!(loday_hl2(f.source()).expect("leibniz input").chain.is_complex());
    }

    /// The central and normal verdicts coincide on every classified
    /// extension, whatever the variety.
    #[test]
    fn central_and_normal_verdicts_coincide(seed in any::<u64>()) {
        let f = random::leibniz_surjection(&mut rng(seed));
        for v in [AlgVariety::leib_lie(), AlgVariety::leib_vect()] {
            let ext = Extension::new(&v, f.clone()).expect("surjective");
            let cls = classify(&v, &ext, 0).expect("classifiable");
            prop_assert_eq!(cls.central, cls.normal, "split over {}", v.name());
        }

        let f = random::pxm_surjection(&mut rng(seed));
        for v in [PxmVariety::over_xmod(), PxmVariety::over_ab()] {
            let ext = Extension::new(&v, f.clone()).expect("surjective");
            let cls = classify(&v, &ext, 100_000).expect("classifiable");
            prop_assert_eq!(cls.central, cls.normal, "split over {}", v.name());
        }
    }
}
