//! Central charges and conformal dimensions of Virasoro Verma modules
//! attached to sl2 at level k, the general central-charge formula for any
//! simple type, and the duality `(c, Δ) ↦ (26 - c, 1 - Δ)` realizing the
//! level flip on the Virasoro side. Everything is an exact rational.

use num_traits::Zero;

use crate::rootdata::{rat, Rational, RootDatum};
use crate::{Error, Result};

/// A Virasoro Verma module, by its central charge and conformal dimension.
/// Build these through [`VirasoroVerma::from_sl2`] or
/// [`ff_dual_virasoro`] — the fields carry exactly what those formulas
/// produce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VirasoroVerma {
    pub c: Rational,
    pub delta: Rational,
}

impl VirasoroVerma {
    /// The Virasoro Verma obtained from the sl2 Verma of highest weight vρ
    /// at level k by quantized Drinfeld–Sokolov reduction.
    pub fn from_sl2(k: &Rational, v: &Rational) -> Result<VirasoroVerma> {
        Ok(VirasoroVerma {
            c: central_charge_sl2(k)?,
            delta: conformal_dim_minus(k, v)?,
        })
    }
}

fn sl2_denominator(k: &Rational) -> Result<Rational> {
    let d = k + rat(2);
    if d.is_zero() {
        Err(Error::CriticalLevel)
    } else {
        Ok(d)
    }
}

/// Central charge of the Virasoro algebra at sl2 level k ≠ -2:
/// `c(k) = 1 - 6(k+1)²/(k+2)`.
pub fn central_charge_sl2(k: &Rational) -> Result<Rational> {
    let d = sl2_denominator(k)?;
    let kp1 = k + rat(1);
    Ok(rat(1) - rat(6) * &kp1 * &kp1 / d)
}

/// Conformal dimension of the reduction of the sl2 Verma of highest
/// weight vρ: `Δ(k, v) = (k-v)(k+2-v)/(4(k+2)) - (k-v)/2`.
pub fn conformal_dim_minus(k: &Rational, v: &Rational) -> Result<Rational> {
    let d = sl2_denominator(k)?;
    let kmv = k - v;
    Ok(&kmv * (&d - v) / (rat(4) * d) - kmv / rat(2))
}

/// Conformal dimension through the opposite reduction:
/// `Δ'(k, v) = v(v+2)/(4(k+2)) - v/2`.
pub fn conformal_dim_plus(k: &Rational, v: &Rational) -> Result<Rational> {
    let d = sl2_denominator(k)?;
    Ok(v * (v + rat(2)) / (rat(4) * d) - v / rat(2))
}

/// The dual Verma under the level flip: `(c, Δ) ↦ (26 - c, 1 - Δ)`.
/// An involution.
pub fn ff_dual_virasoro(m: &VirasoroVerma) -> VirasoroVerma {
    VirasoroVerma {
        c: rat(26) - &m.c,
        delta: rat(1) - &m.delta,
    }
}

/// Central charge of the W-algebra of `datum` at level k ≠ -h∨:
/// `c(k) = dim·k/(k+h∨) - dim + rk + 24⟨ρ,ρ̌⟩ - 12(k+h∨)·κ_b(ρ̌,ρ̌)`,
/// with both pairings computed from the root datum. Specializes to
/// [`central_charge_sl2`] in type A1.
pub fn central_charge_general(datum: &RootDatum, k: &Rational) -> Result<Rational> {
    let dil = k + rat(datum.h_vee);
    if dil.is_zero() {
        return Err(Error::CriticalLevel);
    }
    let dim = rat(datum.dim_g as i64);
    let rk = rat(datum.rk_g as i64);
    // ⟨ρ, ρ̌⟩ = Σ_i ρ̌_i since ⟨ρ, α̌_i⟩ = 1.
    let rho_pair: Rational = datum.rho_check.iter().sum();
    // κ_b(ρ̌, ρ̌) = Σ_i ρ̌_i r_i: the form identifies α̌_i with r_i α_i,
    // and ⟨α_i, ρ̌⟩ = 1.
    let kb: Rational = datum
        .rho_check
        .iter()
        .zip(&datum.lacing)
        .map(|(c, &r)| c * rat(r))
        .sum();
    Ok(&dim * k / &dil - dim + rk + rat(24) * rho_pair - rat(12) * dil * kb)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{build_root_datum, ratio, LieType};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn random_noncritical(rng: &mut StdRng, critical: i64) -> Rational {
        loop {
            let k = ratio(rng.gen_range(-40..=40), rng.gen_range(1..=9));
            if k != rat(critical) {
                return k;
            }
        }
    }

    #[test]
    fn frozen_central_charges_and_dimensions() {
        assert_eq!(central_charge_sl2(&rat(-3)).unwrap(), rat(25));
        assert_eq!(central_charge_sl2(&rat(-1)).unwrap(), rat(1));
        assert_eq!(central_charge_sl2(&rat(0)).unwrap(), rat(-2));

        assert_eq!(conformal_dim_minus(&rat(-3), &rat(0)).unwrap(), ratio(3, 4));
        assert_eq!(
            conformal_dim_minus(&rat(-1), &rat(-2)).unwrap(),
            ratio(1, 4)
        );
        assert_eq!(conformal_dim_plus(&rat(-3), &rat(-2)).unwrap(), rat(1));

        let m = VirasoroVerma::from_sl2(&rat(-3), &rat(0)).unwrap();
        assert_eq!(m.c, rat(25));
        assert_eq!(m.delta, ratio(3, 4));
    }

    #[test]
    fn critical_sl2_level_is_rejected() {
        assert!(matches!(
            central_charge_sl2(&rat(-2)),
            Err(Error::CriticalLevel)
        ));
        assert!(matches!(
            conformal_dim_minus(&rat(-2), &rat(1)),
            Err(Error::CriticalLevel)
        ));
        assert!(matches!(
            conformal_dim_plus(&rat(-2), &rat(1)),
            Err(Error::CriticalLevel)
        ));
        assert!(matches!(
            VirasoroVerma::from_sl2(&rat(-2), &rat(0)),
            Err(Error::CriticalLevel)
        ));
        let d = build_root_datum(LieType::G, 2).unwrap();
        assert!(matches!(
            central_charge_general(&d, &rat(-(d.h_vee))),
            Err(Error::CriticalLevel)
        ));
    }

    #[test]
    fn highest_weight_at_the_level_itself_has_dimension_zero() {
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..30 {
            let k = random_noncritical(&mut rng, -2);
            assert_eq!(conformal_dim_minus(&k, &k).unwrap(), rat(0));
            assert_eq!(conformal_dim_plus(&k, &rat(0)).unwrap(), rat(0));
        }
    }

    #[test]
    fn plus_reduction_is_minus_at_the_reflected_weight() {
        // Empirical scan: Δ'(k, v) = Δ(k, k - v) over 100 rational pairs.
        let mut rng = StdRng::seed_from_u64(23);
        for _ in 0..100 {
            let k = random_noncritical(&mut rng, -2);
            let v = ratio(rng.gen_range(-30..=30), rng.gen_range(1..=7));
            assert_eq!(
                conformal_dim_plus(&k, &v).unwrap(),
                conformal_dim_minus(&k, &(&k - &v)).unwrap()
            );
        }
    }

    #[test]
    fn duality_examples_and_involutivity() {
        let m = VirasoroVerma {
            c: rat(25),
            delta: ratio(3, 4),
        };
        let dual = ff_dual_virasoro(&m);
        assert_eq!(dual.c, rat(1));
        assert_eq!(dual.delta, ratio(1, 4));

        let fixed = VirasoroVerma {
            c: rat(13),
            delta: ratio(1, 2),
        };
        assert_eq!(ff_dual_virasoro(&fixed), fixed);

        let mut rng = StdRng::seed_from_u64(37);
        for _ in 0..50 {
            let m = VirasoroVerma {
                c: ratio(rng.gen_range(-50..=50), rng.gen_range(1..=9)),
                delta: ratio(rng.gen_range(-50..=50), rng.gen_range(1..=9)),
            };
            assert_eq!(ff_dual_virasoro(&ff_dual_virasoro(&m)), m);
        }
    }

    #[test]
    fn flip_sends_verma_data_to_dual_verma_data() {
        // (c(-k-4), Δ(-k-4, -v-2)) = (26 - c(k), 1 - Δ(k, v)).
        let mut rng = StdRng::seed_from_u64(41);
        for _ in 0..50 {
            let k = random_noncritical(&mut rng, -2);
            let v = ratio(rng.gen_range(-30..=30), rng.gen_range(1..=7));
            let m = VirasoroVerma::from_sl2(&k, &v).unwrap();
            let flipped = VirasoroVerma::from_sl2(&(rat(-4) - &k), &(rat(-2) - &v)).unwrap();
            assert_eq!(flipped, ff_dual_virasoro(&m));
        }
    }

    #[test]
    fn general_formula_specializes_to_sl2() {
        let d = build_root_datum(LieType::A, 1).unwrap();
        let mut rng = StdRng::seed_from_u64(53);
        for _ in 0..50 {
            let k = random_noncritical(&mut rng, -2);
            assert_eq!(
                central_charge_general(&d, &k).unwrap(),
                central_charge_sl2(&k).unwrap()
            );
        }
    }

    #[test]
    fn central_charge_complementarity_and_tate_constants() {
        // c(k) + c(-k-2h∨) = 2·rk + 48⟨ρ,ρ̌⟩, a constant of the type.
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
            let mut rng = StdRng::seed_from_u64(67);
            for _ in 0..50 {
                let k = random_noncritical(&mut rng, -d.h_vee);
                let kf = rat(-2 * d.h_vee) - &k;
                let total = central_charge_general(&d, &k).unwrap()
                    + central_charge_general(&d, &kf).unwrap();
                assert_eq!(total, expected);
            }
        }

        // The constant is 26 for sl2 and 100 for sl3.
        let sl2 = build_root_datum(LieType::A, 1).unwrap();
        let sum2 = central_charge_general(&sl2, &rat(-3)).unwrap()
            + central_charge_general(&sl2, &rat(-1)).unwrap();
        assert_eq!(sum2, rat(26));
        let sl3 = build_root_datum(LieType::A, 2).unwrap();
        let sum3 = central_charge_general(&sl3, &rat(-4)).unwrap()
            + central_charge_general(&sl3, &rat(-2)).unwrap();
        assert_eq!(sum3, rat(100));
    }
}
