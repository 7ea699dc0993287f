//! Integral coroots of a weight at a level, the integral simple system
//! Π_λ, and normalization of weights inside their linkage class.
//!
//! For a fixed finite coroot line ±α̌ the degrees n making `(±α̌, n)`
//! integral on λ form an arithmetic progression (possibly empty) whose
//! stride divides the denominator q of k + h∨. Any integral positive
//! coroot of degree ≥ offset + q differs from a lower one by the integral
//! imaginary layer of degree q, so simple coroots live below offset + q on
//! each line; witnesses against simplicity move degrees by at most a
//! factor of 3 under one reflection. Both bounds are computed exactly, so
//! the search is certified complete whenever the caller's bound (if any)
//! is at least the certified one.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::affine::{
    affine_pairing, reflection_of, AffineCoroot, AffineWeylElement, Level, PairingValue,
};
use crate::rootdata::{rat, Rational, RootDatum, Weight};
use crate::{Error, Result};

/// Degrees n for which `(±α̌, n)` pairs integrally with a weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DegreeSet {
    Empty,
    /// Exactly one degree (generic level with an integral finite pairing).
    Only(i64),
    /// The full progression `offset + stride·Z`, offset the least
    /// nonnegative member.
    Arithmetic {
        offset: i64,
        stride: i64,
    },
}

fn stride_and_offset(
    finite_pairing: &Rational,
    root_lacing: i64,
    dilation: &Rational,
) -> Result<Option<(i64, i64)>> {
    let q = dilation.denom().clone();
    let p = dilation.numer().clone();
    let q_small = q
        .to_i64()
        .filter(|&q| q <= 1_000_000)
        .ok_or_else(|| Error::InvalidInput("level denominator too large".into()))?;
    let g = (BigInt::from(root_lacing) * &p).abs().gcd(&q);
    let stride = (&q / g).to_i64().unwrap();
    debug_assert!(stride >= 1 && q_small % stride == 0);
    let step = rat(root_lacing) * dilation;
    for n in 0..stride {
        if (finite_pairing + rat(n) * &step).is_integer() {
            return Ok(Some((n, stride)));
        }
    }
    Ok(None)
}

/// For each positive finite coroot of the datum (in its stored order), the
/// set of degrees n making `(α̌, n)` integral on λ.
pub fn integral_progressions(
    datum: &RootDatum,
    level: &Level,
    lam: &Weight,
) -> Result<Vec<DegreeSet>> {
    let shifted = lam.add(&datum.rho());
    let dilation = level.dilation(datum)?;
    let mut out = Vec::with_capacity(datum.positive_coroots.len());
    for (idx, coroot) in datum.positive_coroots.iter().enumerate() {
        let c = datum.pair(&shifted, coroot)?;
        out.push(match &dilation {
            None => {
                if c.is_integer() {
                    DegreeSet::Only(0)
                } else {
                    DegreeSet::Empty
                }
            }
            Some(dil) => match stride_and_offset(&c, datum.root_lacing[idx], dil)? {
                None => DegreeSet::Empty,
                Some((offset, stride)) => DegreeSet::Arithmetic { offset, stride },
            },
        });
    }
    Ok(out)
}

/// One signed coroot line with a nonempty integral progression.
struct Line {
    coroot: Vec<i64>,
    lacing: i64,
    /// Least valid degree subject to positivity of the affine coroot.
    first: i64,
    stride: i64,
    /// Largest degree a simple coroot on this line can have.
    cand_max: i64,
}

fn integral_lines(datum: &RootDatum, level: &Level, lam: &Weight) -> Result<Vec<Line>> {
    let shifted = lam.add(&datum.rho());
    let dilation = level.dilation(datum)?;
    let q = match &dilation {
        Some(d) => d.denom().to_i64().unwrap_or(i64::MAX),
        None => 1,
    };
    let mut lines = Vec::new();
    for sign in [1i64, -1] {
        for (idx, coroot) in datum.positive_coroots.iter().enumerate() {
            let signed: Vec<i64> = coroot.iter().map(|c| sign * c).collect();
            let c = datum.pair(&shifted, &signed)?;
            let lacing = datum.root_lacing[idx];
            // Positivity: degree ≥ 0 on positive lines, ≥ 1 on negative.
            let lower = if sign > 0 { 0 } else { 1 };
            let (offset, stride) = match &dilation {
                None => {
                    if c.is_integer() && sign > 0 {
                        (0, 1)
                    } else {
                        continue;
                    }
                }
                Some(dil) => match stride_and_offset(&c, lacing, dil)? {
                    Some(pair) => pair,
                    None => continue,
                },
            };
            let first = if offset >= lower {
                offset
            } else {
                offset + stride
            };
            let window = if dilation.is_some() { q } else { 1 };
            // Largest progression member within [first, first + window).
            let cand_max = first + stride * ((window - 1) / stride);
            lines.push(Line {
                coroot: signed,
                lacing,
                first,
                stride,
                cand_max,
            });
        }
    }
    Ok(lines)
}

/// The degree bound that makes `integral_simple_system` provably complete
/// for this weight and level: the largest degree any simple integral
/// coroot can have.
pub fn certified_search_bound(datum: &RootDatum, level: &Level, lam: &Weight) -> Result<i64> {
    let lines = integral_lines(datum, level, lam)?;
    Ok(lines.iter().map(|l| l.cand_max).max().unwrap_or(0))
}

/// All positive integral real coroots of λ with degree ≤ max_degree,
/// sorted by (degree, coroot).
pub fn integral_positive_window(
    datum: &RootDatum,
    level: &Level,
    lam: &Weight,
    max_degree: i64,
) -> Result<Vec<AffineCoroot>> {
    let lines = integral_lines(datum, level, lam)?;
    let mut out = Vec::new();
    for line in &lines {
        let mut n = line.first;
        while n <= max_degree {
            out.push(AffineCoroot {
                coroot: line.coroot.clone(),
                degree: n,
                lacing: line.lacing,
            });
            n += line.stride;
        }
    }
    out.sort();
    Ok(out)
}

/// The simple system Π_λ of the positive integral real coroots of λ,
/// sorted by (degree, coroot). `search_bound` limits candidate degrees;
/// pass `None` to use the certified bound. A caller bound smaller than the
/// certified one is refused as `Inconclusive` rather than risking a
/// silently truncated answer.
pub fn integral_simple_system(
    datum: &RootDatum,
    level: &Level,
    lam: &Weight,
    search_bound: Option<i64>,
) -> Result<Vec<AffineCoroot>> {
    let lines = integral_lines(datum, level, lam)?;
    let required = lines.iter().map(|l| l.cand_max).max().unwrap_or(0);
    if let Some(bound) = search_bound {
        if bound < required {
            return Err(Error::Inconclusive(format!(
                "search bound {bound} cannot certify the simple system; need at least {required}"
            )));
        }
    }

    let mut candidates = Vec::new();
    for line in &lines {
        let mut n = line.first;
        while n <= line.cand_max {
            candidates.push(AffineCoroot {
                coroot: line.coroot.clone(),
                degree: n,
                lacing: line.lacing,
            });
            n += line.stride;
        }
    }
    if candidates.is_empty() {
        return Ok(Vec::new());
    }

    // One reflection moves degrees by at most 3× the reflecting degree, so
    // every witness against simplicity is visible below this cutoff.
    let max_cand_degree = candidates.iter().map(|c| c.degree).max().unwrap().max(0);
    let window = integral_positive_window(datum, level, lam, 3 * max_cand_degree)?;

    let mut simples = Vec::new();
    'next: for cand in &candidates {
        let s = reflection_of(datum, cand)?;
        for psi in &window {
            if psi == cand {
                continue;
            }
            if !s.act_coroot(datum, psi).is_positive() {
                continue 'next;
            }
        }
        simples.push(cand.clone());
    }
    simples.sort();
    // Each orthogonal component contributes its finite rank plus at most
    // one affine node, so |Π| ≤ 2·rank. (rank + 1 would be wrong: at B2
    // with q even, the two orthogonal short-coroot directions each carry a
    // full affine-A1 system, giving 4 simples at rank 2.)
    assert!(
        simples.len() <= 2 * datum.rank,
        "simple integral system larger than twice the rank"
    );
    Ok(simples)
}

fn integral_pairing(
    datum: &RootDatum,
    level: &Level,
    lam: &Weight,
    c: &AffineCoroot,
) -> Result<BigInt> {
    match affine_pairing(datum, level, lam, c)? {
        PairingValue::Rational(r) if r.is_integer() => Ok(r.to_integer()),
        other => Err(Error::Mismatch(format!(
            "coroot {c} is not integral on {lam} (pairing {other:?})"
        ))),
    }
}

/// λ is antidominant when no simple integral coroot pairs to a positive
/// integer: ⟨λ+ρ̂, χ⟩ ≤ 0 for all χ ∈ Π_λ.
pub fn is_antidominant(datum: &RootDatum, level: &Level, lam: &Weight) -> Result<bool> {
    for c in integral_simple_system(datum, level, lam, None)? {
        if integral_pairing(datum, level, lam, &c)?.is_positive() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// λ is dominant when ⟨λ+ρ̂, χ⟩ ≥ 0 for all χ ∈ Π_λ.
pub fn is_dominant(datum: &RootDatum, level: &Level, lam: &Weight) -> Result<bool> {
    for c in integral_simple_system(datum, level, lam, None)? {
        if integral_pairing(datum, level, lam, &c)?.is_negative() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Drive λ to the normalized member of its integral orbit — antidominant
/// at negative level, dominant at positive — by reflecting in wrong-sign
/// simple integral coroots. Returns the normalized weight together with
/// the element moving λ onto it. The integral system is constant along
/// the orbit, so Π is computed once.
pub fn antidominantize(
    datum: &RootDatum,
    level: &Level,
    lam: &Weight,
    step_bound: usize,
) -> Result<(Weight, AffineWeylElement)> {
    let target_antidominant = level.is_negative(datum)?;
    let simples = integral_simple_system(datum, level, lam, None)?;
    let reflections: Vec<AffineWeylElement> = simples
        .iter()
        .map(|c| reflection_of(datum, c))
        .collect::<Result<_>>()?;

    let mut cur = lam.clone();
    let mut mover = AffineWeylElement::identity(datum.rank);
    for _ in 0..=step_bound {
        let mut moved = false;
        for (c, s) in simples.iter().zip(&reflections) {
            let p = integral_pairing(datum, level, &cur, c)?;
            let wrong = if target_antidominant {
                p.is_positive()
            } else {
                p.is_negative()
            };
            if wrong {
                cur = s.act_dot(datum, level, &cur)?;
                mover = s.mul(&mover);
                moved = true;
                break;
            }
        }
        if !moved {
            debug_assert_eq!(mover.act_dot(datum, level, lam)?, cur);
            return Ok((cur, mover));
        }
    }
    Err(Error::Inconclusive(format!(
        "normalization did not terminate within {step_bound} reflections"
    )))
}

/// A weight's integral Weyl data at a level: the simple integral coroots,
/// their Cartan pairings, and the finite / stabilizing parabolic index
/// sets. The base weight must already be normalized for the level's sign.
#[derive(Debug, Clone)]
pub struct IntegralSystem {
    pub datum: Arc<RootDatum>,
    pub level: Level,
    pub base_weight: Weight,
    /// Π, sorted by (degree, coroot).
    pub simple_coroots: Vec<AffineCoroot>,
    /// `cartan_integral[i][j] = ⟨a_j, χ̌_i⟩` over Π's roots and coroots.
    pub cartan_integral: Vec<Vec<i64>>,
    /// Indices of Π with degree 0 (the finite simples).
    pub j_finite: Vec<usize>,
    /// Indices of Π pairing to zero against the base weight.
    pub j_stab: Vec<usize>,
    reflections: Vec<AffineWeylElement>,
}

impl IntegralSystem {
    pub fn build(
        datum: Arc<RootDatum>,
        level: Level,
        base_weight: Weight,
        search_bound: Option<i64>,
    ) -> Result<IntegralSystem> {
        if base_weight.rank() != datum.rank {
            return Err(Error::DimensionMismatch("base weight rank".into()));
        }
        let negative = level.is_negative(&datum)?;
        let normalized = if negative {
            is_antidominant(&datum, &level, &base_weight)?
        } else {
            is_dominant(&datum, &level, &base_weight)?
        };
        if !normalized {
            return Err(Error::NotNormalized(format!(
                "base weight {base_weight} is not {} at level {level}",
                if negative { "antidominant" } else { "dominant" }
            )));
        }

        let simple_coroots = integral_simple_system(&datum, &level, &base_weight, search_bound)?;
        let m = simple_coroots.len();

        let mut cartan_integral = vec![vec![0i64; m]; m];
        for (j, cj) in simple_coroots.iter().enumerate() {
            let root_j = datum.root_fund(&datum.root_of_coroot(&cj.coroot)?);
            for (i, ci) in simple_coroots.iter().enumerate() {
                let entry: i64 = root_j.iter().zip(&ci.coroot).map(|(a, b)| a * b).sum();
                cartan_integral[i][j] = entry;
            }
        }
        for i in 0..m {
            assert_eq!(cartan_integral[i][i], 2, "diagonal of integral Cartan");
            for j in 0..m {
                if i != j {
                    assert!(
                        cartan_integral[i][j] <= 0,
                        "off-diagonal of integral Cartan must be ≤ 0"
                    );
                    assert_eq!(
                        cartan_integral[i][j] == 0,
                        cartan_integral[j][i] == 0,
                        "zero pattern of integral Cartan must be symmetric"
                    );
                }
            }
        }

        let j_finite = (0..m).filter(|&i| simple_coroots[i].degree == 0).collect();
        let mut j_stab = Vec::new();
        for (i, c) in simple_coroots.iter().enumerate() {
            if integral_pairing(&datum, &level, &base_weight, c)?.is_zero() {
                j_stab.push(i);
            }
        }

        let reflections = simple_coroots
            .iter()
            .map(|c| reflection_of(&datum, c))
            .collect::<Result<_>>()?;

        Ok(IntegralSystem {
            datum,
            level,
            base_weight,
            simple_coroots,
            cartan_integral,
            j_finite,
            j_stab,
            reflections,
        })
    }

    pub fn rank(&self) -> usize {
        self.simple_coroots.len()
    }

    /// Reflections in the simple integral coroots, indexed like Π.
    pub fn simple_reflections(&self) -> &[AffineWeylElement] {
        &self.reflections
    }

    /// The generator index sets (finite simples, base stabilizer).
    pub fn parabolic_subsets(&self) -> (&[usize], &[usize]) {
        (&self.j_finite, &self.j_stab)
    }
}
