//! Levels, the affine Weyl group `W_f ⋉ Λ`, affine real coroots, and the
//! level flip.
//!
//! At level k the group acts on finite weights: a translation `t_μ` (μ in
//! the lattice Λ spanned by `r_i α_i`) moves λ to `λ + kμ`, and the dot
//! action conjugates by the ρ-shift with dilation `k + h∨`. Elements are
//! stored canonically as (finite part, translation part) — never as words —
//! so equality, hashing and the group law are exact.
//!
//! A real affine coroot is written `(α̌, n)` with `α̌` a finite coroot and
//! `n` the degree; the actual Cartan element is `α̌ + n·r(α)·c`, which is
//! why the lacing number of the underlying root tags along.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::rootdata::{rat, FiniteWeyl, Rational, RootDatum, Weight};
use crate::{Error, Result};

/// A level for the affine algebra. `Rational(k)` is exact; the generic
/// variants model an irrational level of known sign (of k + h∨), where no
/// nonzero multiple of k + h∨ is ever an integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Level {
    Rational(Rational),
    GenericNegative,
    GenericPositive,
}

impl Level {
    pub fn rational(k: Rational) -> Level {
        Level::Rational(k)
    }

    pub fn from_int(k: i64) -> Level {
        Level::Rational(rat(k))
    }

    pub fn is_critical(&self, datum: &RootDatum) -> bool {
        match self {
            Level::Rational(k) => *k == rat(-datum.h_vee),
            _ => false,
        }
    }

    /// The dilation k + h∨ when it is an exact rational; `None` when generic.
    /// Rejects the critical level.
    pub fn dilation(&self, datum: &RootDatum) -> Result<Option<Rational>> {
        match self {
            Level::Rational(k) => {
                let d = k + rat(datum.h_vee);
                if d.is_zero() {
                    Err(Error::CriticalLevel)
                } else {
                    Ok(Some(d))
                }
            }
            _ => Ok(None),
        }
    }

    /// True when k + h∨ < 0 (or generic of negative sign).
    pub fn is_negative(&self, datum: &RootDatum) -> Result<bool> {
        match self {
            Level::Rational(_) => Ok(self.dilation(datum)?.unwrap().is_negative()),
            Level::GenericNegative => Ok(true),
            Level::GenericPositive => Ok(false),
        }
    }

    /// The flip k ↦ -k - 2h∨, which negates k + h∨.
    pub fn flip(&self, datum: &RootDatum) -> Level {
        match self {
            Level::Rational(k) => Level::Rational(rat(-2 * datum.h_vee) - k),
            Level::GenericNegative => Level::GenericPositive,
            Level::GenericPositive => Level::GenericNegative,
        }
    }

    pub fn parse(s: &str) -> Result<Level> {
        match s {
            "generic-neg" | "generic-negative" => Ok(Level::GenericNegative),
            "generic-pos" | "generic-positive" => Ok(Level::GenericPositive),
            other => other
                .parse::<Rational>()
                .map(Level::Rational)
                .map_err(|e| Error::InvalidInput(format!("level {other:?}: {e}"))),
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Level::Rational(k) => write!(f, "{k}"),
            Level::GenericNegative => write!(f, "generic-neg"),
            Level::GenericPositive => write!(f, "generic-pos"),
        }
    }
}

/// A real affine coroot `(α̌, n)`, Cartan element `α̌ + n·r·c`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineCoroot {
    /// Degree first so the derived order sorts by (degree, coroot).
    pub degree: i64,
    /// Finite coroot over the simple coroots (either sign).
    pub coroot: Vec<i64>,
    /// Lacing number r(α) of the underlying finite root.
    pub lacing: i64,
}

impl AffineCoroot {
    pub fn new(datum: &RootDatum, coroot: Vec<i64>, degree: i64) -> Result<Self> {
        let lacing = datum.lacing_of_coroot(&coroot)?;
        Ok(AffineCoroot {
            coroot,
            degree,
            lacing,
        })
    }

    /// Positive means degree > 0, or degree 0 with a positive finite part.
    pub fn is_positive(&self) -> bool {
        match self.degree {
            d if d > 0 => true,
            0 => self.coroot.iter().all(|&c| c >= 0) && self.coroot.iter().any(|&c| c > 0),
            _ => false,
        }
    }

    pub fn negated(&self) -> AffineCoroot {
        AffineCoroot {
            coroot: self.coroot.iter().map(|c| -c).collect(),
            degree: -self.degree,
            lacing: self.lacing,
        }
    }
}

impl fmt::Display for AffineCoroot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {})", self.coroot, self.degree)
    }
}

/// Value of an affine pairing: exact rational, or provably not an integer
/// (a nonzero degree paired through a generic level).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairingValue {
    Rational(Rational),
    NonIntegral,
}

impl PairingValue {
    /// The integer value, when the pairing is an integer.
    pub fn integer(&self) -> Option<BigInt> {
        match self {
            PairingValue::Rational(r) if r.is_integer() => Some(r.to_integer()),
            _ => None,
        }
    }

    pub fn is_integral(&self) -> bool {
        self.integer().is_some()
    }

    pub fn is_positive_integer(&self) -> bool {
        self.integer().map(|z| z.is_positive()).unwrap_or(false)
    }

    pub fn is_negative_integer(&self) -> bool {
        self.integer().map(|z| z.is_negative()).unwrap_or(false)
    }
}

/// `⟨λ + ρ̂, α̌ + n·r·c⟩ = ⟨λ + ρ, α̌⟩ + n·r·(k + h∨)`: the level-k pairing
/// of a weight against a real affine coroot.
pub fn affine_pairing(
    datum: &RootDatum,
    level: &Level,
    lam: &Weight,
    c: &AffineCoroot,
) -> Result<PairingValue> {
    let finite = datum.pair(&lam.add(&datum.rho()), &c.coroot)?;
    match level.dilation(datum)? {
        Some(dil) => Ok(PairingValue::Rational(
            finite + rat(c.degree * c.lacing) * dil,
        )),
        None => {
            if c.degree == 0 {
                Ok(PairingValue::Rational(finite))
            } else {
                Ok(PairingValue::NonIntegral)
            }
        }
    }
}

/// An affine Weyl group element `t_μ y`, with y in the finite Weyl group
/// and μ ∈ Λ in fundamental coordinates. This is the canonical form used
/// for equality and hashing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineWeylElement {
    y: FiniteWeyl,
    mu: Vec<i64>,
}

impl AffineWeylElement {
    pub fn identity(rank: usize) -> Self {
        AffineWeylElement {
            y: FiniteWeyl::identity(rank),
            mu: vec![0; rank],
        }
    }

    pub fn from_finite(y: FiniteWeyl, rank: usize) -> Self {
        AffineWeylElement {
            y,
            mu: vec![0; rank],
        }
    }

    /// `t_μ` for μ given in fundamental coordinates; checks μ ∈ Λ.
    pub fn translation(datum: &RootDatum, mu: Vec<i64>) -> Result<Self> {
        if mu.len() != datum.rank {
            return Err(Error::DimensionMismatch("translation weight rank".into()));
        }
        let coords = datum.root_coords_of_fund(&mu);
        for (j, x) in coords.iter().enumerate() {
            let scaled = x / rat(datum.lacing[j]);
            if !scaled.is_integer() {
                return Err(Error::InvalidInput(format!(
                    "translation part {mu:?} is not in the lattice spanned by r_i·α_i"
                )));
            }
        }
        Ok(AffineWeylElement {
            y: FiniteWeyl::identity(datum.rank),
            mu,
        })
    }

    pub fn finite_part(&self) -> &FiniteWeyl {
        &self.y
    }

    pub fn translation_part(&self) -> &[i64] {
        &self.mu
    }

    pub fn is_identity(&self) -> bool {
        self.y.is_identity() && self.mu.iter().all(|&m| m == 0)
    }

    /// True when the element lies in the finite Weyl group (μ = 0).
    pub fn is_finite(&self) -> bool {
        self.mu.iter().all(|&m| m == 0)
    }

    /// Group law: `(t_μ y)(t_ν x) = t_{μ + y(ν)} (yx)`; `other` acts first.
    pub fn mul(&self, other: &AffineWeylElement) -> AffineWeylElement {
        let moved = self.y.act_ints(&other.mu);
        AffineWeylElement {
            y: self.y.mul(&other.y),
            mu: self.mu.iter().zip(&moved).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn inverse(&self) -> AffineWeylElement {
        let yinv = self.y.inverse();
        let mu = yinv.act_ints(&self.mu).iter().map(|m| -m).collect();
        AffineWeylElement { y: yinv, mu }
    }

    /// Naive level-k action: `(t_μ y)(λ) = y(λ) + k μ`.
    pub fn act_naive(&self, k: &Rational, lam: &Weight) -> Weight {
        let mut out = self.y.act(lam);
        for (entry, &m) in out.0.iter_mut().zip(&self.mu) {
            *entry += k * rat(m);
        }
        out
    }

    /// Dot action: `w ·_k λ = y(λ+ρ) + (k + h∨)μ - ρ`. A genuinely
    /// translating element needs an exact dilation, so a generic level is
    /// only accepted when μ = 0.
    pub fn act_dot(&self, datum: &RootDatum, level: &Level, lam: &Weight) -> Result<Weight> {
        let dil = level.dilation(datum)?;
        let mut out = self.y.act(&lam.add(&datum.rho()));
        if !self.is_finite() {
            let Some(dil) = dil else {
                return Err(Error::GenericTranslation);
            };
            for (entry, &m) in out.0.iter_mut().zip(&self.mu) {
                *entry += &dil * rat(m);
            }
        }
        Ok(out.sub(&datum.rho()))
    }

    /// Transport of a real affine coroot:
    /// `t_μ y : (β̌, m) ↦ (y(β̌), m - ⟨μ, y(β̌)⟩ / r_β)`.
    pub fn act_coroot(&self, datum: &RootDatum, c: &AffineCoroot) -> AffineCoroot {
        debug_assert_eq!(datum.lacing_of_coroot(&c.coroot).ok(), Some(c.lacing));
        let moved = self.y.act_coroot(&c.coroot);
        let pairing: i64 = moved.iter().zip(&self.mu).map(|(a, b)| a * b).sum();
        assert_eq!(
            pairing % c.lacing,
            0,
            "coroot transport must keep integral degrees"
        );
        AffineCoroot {
            coroot: moved,
            degree: c.degree - pairing / c.lacing,
            lacing: c.lacing,
        }
    }
}

/// The reflection in a real affine coroot `(α̌, n)`: as a group element this
/// is `t_{-n·r·α} s_α`; its dot action is
/// `λ ↦ λ - (⟨λ+ρ, α̌⟩ + n·r·(k+h∨)) α`.
pub fn reflection_of(datum: &RootDatum, c: &AffineCoroot) -> Result<AffineWeylElement> {
    if c.coroot.iter().all(|&x| x == 0) {
        return Err(Error::InvalidInput("zero coroot has no reflection".into()));
    }
    let y = FiniteWeyl::coroot_reflection(datum, &c.coroot)?;
    let root_fund = datum.root_fund(&datum.root_of_coroot(&c.coroot)?);
    let mu: Vec<i64> = root_fund
        .iter()
        .map(|&a| -c.degree * c.lacing * a)
        .collect();
    Ok(AffineWeylElement { y, mu })
}

/// The level flip on weights: λ ↦ -λ - 2ρ. Matched with k ↦ -k - 2h∨ it
/// intertwines the dot actions at the two levels.
pub fn ff_flip(datum: &RootDatum, lam: &Weight) -> Weight {
    lam.neg().sub(&datum.rho().scale(&rat(2)))
}

/// Plain negation: intertwines the naive actions at levels k and -k.
pub fn negate_naive(lam: &Weight) -> Weight {
    lam.neg()
}
