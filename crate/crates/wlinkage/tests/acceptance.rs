//! Acceptance suite: one test per criterion, each printing a single
//! `criterion N (<name>): PASS` / `FAIL` line. Every check is exact
//! rational arithmetic — no tolerances anywhere.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use wlinkage::rootdata::{build_root_datum, rat, ratio, LieType, Rational, RootDatum, Weight};
use wlinkage::{
    affine_pairing, block_of, central_charge_general, central_charge_sl2, conformal_dim_minus,
    ff_flip, ff_poset_map, hom_dim, integral_simple_system, is_antidominant, is_dominant,
    reflection_of, AffineCoroot, AffineWeylElement, BlockPoset, IntegralSystem, Level,
    PairingValue,
};

fn criterion(n: usize, name: &str, body: impl FnOnce()) {
    let result = catch_unwind(AssertUnwindSafe(body));
    match result {
        Ok(()) => println!("criterion {n} ({name}): PASS"),
        Err(e) => {
            println!("criterion {n} ({name}): FAIL");
            std::panic::resume_unwind(e);
        }
    }
}

fn random_rational(rng: &mut StdRng, span: i64, max_den: i64) -> Rational {
    ratio(rng.gen_range(-span..=span), rng.gen_range(1..=max_den))
}

fn random_noncritical(rng: &mut StdRng, h_vee: i64) -> Rational {
    loop {
        let k = random_rational(rng, 24, 6);
        if k != rat(-h_vee) {
            return k;
        }
    }
}

fn random_weight(rng: &mut StdRng, rank: usize) -> Weight {
    Weight((0..rank).map(|_| random_rational(rng, 6, 4)).collect())
}

/// A random affine Weyl element as a word of length ≤ max_len over the
/// finite simple reflections and the affine reflection s_{(-θ̌, 1)}.
fn random_affine_element(rng: &mut StdRng, datum: &RootDatum, max_len: usize) -> AffineWeylElement {
    let mut gens: Vec<AffineWeylElement> = (0..datum.rank)
        .map(|i| {
            let mut coroot = vec![0i64; datum.rank];
            coroot[i] = 1;
            reflection_of(datum, &AffineCoroot::new(datum, coroot, 0).unwrap()).unwrap()
        })
        .collect();
    let neg_theta: Vec<i64> = datum.theta_check.iter().map(|c| -c).collect();
    gens.push(reflection_of(datum, &AffineCoroot::new(datum, neg_theta, 1).unwrap()).unwrap());

    let len = rng.gen_range(0..=max_len);
    let mut w = AffineWeylElement::identity(datum.rank);
    for _ in 0..len {
        let g = &gens[rng.gen_range(0..gens.len())];
        w = g.mul(&w);
    }
    w
}

#[test]
fn acceptance_1_virasoro_duality() {
    criterion(1, "virasoro duality", || {
        let mut rng = StdRng::seed_from_u64(101);
        for _ in 0..50 {
            let k = loop {
                let k = random_rational(&mut rng, 24, 6);
                if k != rat(-2) {
                    break k;
                }
            };
            let v = random_rational(&mut rng, 24, 6);
            let kf = rat(-4) - &k;
            let vf = rat(-2) - &v;
            assert_eq!(
                central_charge_sl2(&kf).unwrap(),
                rat(26) - central_charge_sl2(&k).unwrap()
            );
            assert_eq!(
                conformal_dim_minus(&kf, &vf).unwrap(),
                rat(1) - conformal_dim_minus(&k, &v).unwrap()
            );
        }
    });
}

#[test]
fn acceptance_2_central_charge_complementarity() {
    criterion(2, "central charge complementarity", || {
        for (ty, rank) in [
            (LieType::A, 1),
            (LieType::A, 2),
            (LieType::B, 2),
            (LieType::G, 2),
            (LieType::D, 4),
        ] {
            let d = build_root_datum(ty, rank).unwrap();
            let rho_pair: Rational = d.rho_check.iter().sum();
            let expected = rat(2 * d.rk_g as i64) + rat(48) * rho_pair;
            let mut rng = StdRng::seed_from_u64(211);
            for _ in 0..50 {
                let k = random_noncritical(&mut rng, d.h_vee);
                let kf = rat(-2 * d.h_vee) - &k;
                assert_eq!(
                    central_charge_general(&d, &k).unwrap()
                        + central_charge_general(&d, &kf).unwrap(),
                    expected,
                    "complementarity in {ty:?}{rank}"
                );
            }
        }
        // The sl3 constant is exactly 100.
        let sl3 = build_root_datum(LieType::A, 2).unwrap();
        let constant = central_charge_general(&sl3, &rat(-4)).unwrap()
            + central_charge_general(&sl3, &rat(-2)).unwrap();
        assert_eq!(constant, rat(100));
    });
}

#[test]
fn acceptance_3_flip_equivariance() {
    criterion(3, "flip equivariance", || {
        let data = [
            build_root_datum(LieType::A, 1).unwrap(),
            build_root_datum(LieType::A, 2).unwrap(),
            build_root_datum(LieType::B, 2).unwrap(),
        ];
        let mut rng = StdRng::seed_from_u64(307);
        for _ in 0..500 {
            let d = &data[rng.gen_range(0..data.len())];
            let w = random_affine_element(&mut rng, d, 6);
            let k = random_noncritical(&mut rng, d.h_vee);
            let lam = random_weight(&mut rng, d.rank);
            let level = Level::Rational(k);
            let flipped = level.flip(d);
            let acted_then_flipped = ff_flip(d, &w.act_dot(d, &level, &lam).unwrap());
            let flipped_then_acted = w.act_dot(d, &flipped, &ff_flip(d, &lam)).unwrap();
            assert_eq!(acted_then_flipped, flipped_then_acted);
        }
    });
}

#[test]
fn acceptance_4_integral_data_flip_suite() {
    criterion(4, "integral data flips", || {
        for (ty, rank) in [(LieType::A, 1), (LieType::A, 2)] {
            let d = build_root_datum(ty, rank).unwrap();
            let mut rng = StdRng::seed_from_u64(401);
            for _ in 0..100 {
                let k = random_noncritical(&mut rng, d.h_vee);
                let lam = random_weight(&mut rng, d.rank);
                let level = Level::Rational(k);
                let flipped_level = level.flip(&d);
                let flipped_lam = ff_flip(&d, &lam);

                let pi = integral_simple_system(&d, &level, &lam, None).unwrap();
                let pi_flipped =
                    integral_simple_system(&d, &flipped_level, &flipped_lam, None).unwrap();
                assert_eq!(pi, pi_flipped, "Π must be flip-invariant");

                let j_finite: Vec<usize> = (0..pi.len()).filter(|&i| pi[i].degree == 0).collect();
                let j_finite_flipped: Vec<usize> = (0..pi_flipped.len())
                    .filter(|&i| pi_flipped[i].degree == 0)
                    .collect();
                assert_eq!(j_finite, j_finite_flipped);

                let stab = |level: &Level, lam: &Weight, pi: &[AffineCoroot]| -> Vec<usize> {
                    (0..pi.len())
                        .filter(|&i| {
                            matches!(
                                affine_pairing(&d, level, lam, &pi[i]).unwrap(),
                                PairingValue::Rational(r) if r == rat(0)
                            )
                        })
                        .collect()
                };
                assert_eq!(
                    stab(&level, &lam, &pi),
                    stab(&flipped_level, &flipped_lam, &pi_flipped)
                );

                assert_eq!(
                    is_antidominant(&d, &level, &lam).unwrap(),
                    is_dominant(&d, &flipped_level, &flipped_lam).unwrap()
                );
                assert_eq!(
                    is_dominant(&d, &level, &lam).unwrap(),
                    is_antidominant(&d, &flipped_level, &flipped_lam).unwrap()
                );
            }
        }
    });
}

fn subword_oracle(poset: &BlockPoset) {
    let datum = &*poset.system.datum;
    let gens: Vec<AffineWeylElement> = poset
        .system
        .simple_coroots
        .iter()
        .map(|c| reflection_of(datum, c).unwrap())
        .collect();
    for (vi, v) in poset.reps.iter().enumerate() {
        for (wi, w) in poset.reps.iter().enumerate() {
            let mut found = false;
            for mask in 0u64..(1 << w.word.len()) {
                let mut prod = AffineWeylElement::identity(datum.rank);
                for (pos, &letter) in w.word.iter().enumerate() {
                    if mask & (1 << pos) != 0 {
                        prod = gens[letter].mul(&prod);
                    }
                }
                if prod == v.element {
                    found = true;
                    break;
                }
            }
            assert_eq!(
                poset.bruhat_leq(vi, wi).unwrap(),
                found,
                "Bruhat vs subword at ({vi}, {wi})"
            );
        }
    }
}

#[test]
fn acceptance_5_bruhat_subword_oracle() {
    criterion(5, "Bruhat order vs subword oracle", || {
        let sl2 = Arc::new(build_root_datum(LieType::A, 1).unwrap());
        let poset = block_of(&sl2, &Level::from_int(-3), &Weight::zero(1), 6).unwrap();
        subword_oracle(&poset);

        let a2 = Arc::new(build_root_datum(LieType::A, 2).unwrap());
        let poset = block_of(&a2, &Level::from_int(-4), &Weight::zero(2), 6).unwrap();
        assert!(poset.reps.len() > 3, "A2 block must not be trivial");
        subword_oracle(&poset);
    });
}

#[test]
fn acceptance_6_hom_poset_opposition() {
    criterion(6, "hom poset opposition under the flip", || {
        for (d, kneg, lift) in [
            (
                Arc::new(build_root_datum(LieType::A, 1).unwrap()),
                Level::from_int(-3),
                Weight::from_ints(&[-2]),
            ),
            (
                Arc::new(build_root_datum(LieType::A, 2).unwrap()),
                Level::from_int(-4),
                Weight::zero(2),
            ),
        ] {
            let truncation = 8;
            let neg = block_of(&d, &kneg, &lift, truncation).unwrap();
            let pos = block_of(&d, &kneg.flip(&d), &ff_flip(&d, &lift), truncation).unwrap();
            let map = ff_poset_map(&neg, &pos).unwrap();
            assert_eq!(neg.reps.len(), pos.reps.len());
            for v in 0..neg.reps.len() {
                for w in 0..neg.reps.len() {
                    assert_eq!(
                        hom_dim(&neg, v, &neg, w).unwrap().dim,
                        hom_dim(&pos, map[w], &pos, map[v]).unwrap().dim
                    );
                }
            }
        }
    });
}

#[test]
fn acceptance_7_linkage_well_definedness() {
    criterion(7, "linkage class independent of the lift", || {
        let cases: [(Arc<RootDatum>, Level, Weight); 2] = [
            (
                Arc::new(build_root_datum(LieType::A, 2).unwrap()),
                Level::from_int(-4),
                Weight::zero(2),
            ),
            (
                Arc::new(build_root_datum(LieType::A, 1).unwrap()),
                Level::Rational(ratio(-5, 2)),
                Weight(vec![ratio(-1, 2)]),
            ),
        ];
        for (d, level, lift) in cases {
            let reference = block_of(&d, &level, &lift, 4).unwrap();
            let mut rng = StdRng::seed_from_u64(701);
            for _ in 0..50 {
                // A random W_f-dot-translate of the lift.
                let len = rng.gen_range(0..=6);
                let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..d.rank)).collect();
                let translate = d.finite_dot_act(&word, &lift).unwrap();
                let poset = block_of(&d, &level, &translate, 4).unwrap();
                assert!(
                    poset == reference,
                    "translate {translate} gave a different poset"
                );
            }
        }
    });
}

#[test]
fn acceptance_8_finite_intersection_is_parabolic() {
    criterion(8, "finite part of W_λ is the j_finite parabolic", || {
        for (d, level, base) in [
            (
                Arc::new(build_root_datum(LieType::A, 1).unwrap()),
                Level::from_int(-3),
                Weight::from_ints(&[-2]),
            ),
            (
                Arc::new(build_root_datum(LieType::A, 2).unwrap()),
                Level::from_int(-4),
                Weight::from_ints(&[-1, -1]),
            ),
        ] {
            let sys = IntegralSystem::build(d.clone(), level, base, None).unwrap();
            let refl = sys.simple_reflections().to_vec();

            // Ball of radius 6 in W_λ, by breadth-first search.
            let mut ball = vec![AffineWeylElement::identity(d.rank)];
            let mut queue = std::collections::VecDeque::from([(0usize, 0usize)]);
            while let Some((idx, len)) = queue.pop_front() {
                if len == 6 {
                    continue;
                }
                for s in &refl {
                    let next = s.mul(&ball[idx]);
                    if !ball.contains(&next) {
                        ball.push(next.clone());
                        queue.push_back((ball.len() - 1, len + 1));
                    }
                }
            }
            let mut finite_part: Vec<AffineWeylElement> =
                ball.iter().filter(|w| w.is_finite()).cloned().collect();

            // Subgroup generated by the j_finite reflections.
            let mut parabolic = vec![AffineWeylElement::identity(d.rank)];
            let mut grew = true;
            while grew {
                grew = false;
                let snapshot = parabolic.clone();
                for w in snapshot {
                    for &s in &sys.j_finite {
                        let next = refl[s].mul(&w);
                        if !parabolic.contains(&next) {
                            parabolic.push(next);
                            grew = true;
                        }
                    }
                }
            }

            let key = |w: &AffineWeylElement| format!("{w:?}");
            finite_part.sort_by_key(key);
            parabolic.sort_by_key(key);
            assert_eq!(finite_part, parabolic);
        }
    });
}
