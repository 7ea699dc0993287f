//! Validated root-system tables and the finite Weyl action.
//!
//! Everything downstream works in *fundamental-weight coordinates*: a weight
//! λ is the vector of pairings `λ_i = ⟨λ, α̌_i⟩`, roots are integer vectors
//! over the simple roots, coroots integer vectors over the simple coroots.
//! The invariant bilinear form is normalized so the highest root θ satisfies
//! (θ, θ) = 2, equivalently κ(θ̌, θ̌) = 2; the per-node lacing number
//! `r_i = 2/(α_i, α_i)` is 1 on long roots and 2 or 3 on short ones.
//!
//! Only the Cartan matrix and lacing vector of each type are written down;
//! positive roots, coroots, θ, h∨, the longest element and the diagram
//! involution are all derived and cross-checked at construction time, so a
//! table typo cannot survive `build_root_datum`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Exact scalar type used everywhere; no floats in this crate.
pub type Rational = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational from numerator and denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// A weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<Rational>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![Rational::zero(); rank])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight(coords.iter().map(|&c| rat(c)).collect())
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, c: &Rational) -> Weight {
        Weight(self.0.iter().map(|a| a * c).collect())
    }

    /// Add `c` times an integer vector (e.g. a root in fundamental coords).
    pub fn add_scaled_ints(&self, coords: &[i64], c: &Rational) -> Weight {
        Weight(
            self.0
                .iter()
                .zip(coords)
                .map(|(a, &b)| a + c * rat(b))
                .collect(),
        )
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// The simple Lie types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LieType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LieType::A => "A",
            LieType::B => "B",
            LieType::C => "C",
            LieType::D => "D",
            LieType::E => "E",
            LieType::F => "F",
            LieType::G => "G",
        };
        write!(f, "{s}")
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(LieType::A),
            "B" | "b" => Ok(LieType::B),
            "C" | "c" => Ok(LieType::C),
            "D" | "d" => Ok(LieType::D),
            "E" | "e" => Ok(LieType::E),
            "F" | "f" => Ok(LieType::F),
            "G" | "g" => Ok(LieType::G),
            other => Err(Error::Unsupported(format!("unknown Lie type {other:?}"))),
        }
    }
}

/// Root-system data for one simple type, fully derived and validated.
#[derive(Debug, Clone)]
pub struct RootDatum {
    pub lie_type: LieType,
    pub rank: usize,
    /// Cartan matrix, `cartan[i][j] = ⟨α_j, α̌_i⟩`.
    pub cartan: Vec<Vec<i64>>,
    /// `lacing[i] = 2/(α_i, α_i)` ∈ {1, 2, 3}.
    pub lacing: Vec<i64>,
    /// Positive roots as coefficient vectors over the simple roots,
    /// ordered by height and lexicographically within a height.
    pub positive_roots: Vec<Vec<i64>>,
    /// Coroot of `positive_roots[t]`, over the simple coroots.
    pub positive_coroots: Vec<Vec<i64>>,
    /// `root_lacing[t] = 2/(α, α)` for `positive_roots[t]`.
    pub root_lacing: Vec<i64>,
    /// Highest root, over the simple roots.
    pub theta: Vec<i64>,
    /// Coroot of the highest root, over the simple coroots.
    pub theta_check: Vec<i64>,
    /// Dual Coxeter number.
    pub h_vee: i64,
    pub dim_g: usize,
    pub rk_g: usize,
    /// dim of the nilpotent radical = number of positive roots.
    pub dim_n: usize,
    /// Reduced word for the longest element (letters in application order).
    pub w_circ: Vec<usize>,
    /// Diagram involution τ with `w_circ(α_i) = -α_{τ(i)}`.
    pub tau: Vec<usize>,
    /// Order of the finite Weyl group.
    pub weyl_order: u128,
    /// ρ̌ over the simple coroots (half the sum of positive coroots).
    pub rho_check: Vec<Rational>,
    cartan_inv: Vec<Vec<Rational>>,
}

/// Build the Cartan matrix and lacing vector of a supported (type, rank).
fn cartan_table(lie_type: LieType, rank: usize) -> Result<(Vec<Vec<i64>>, Vec<i64>)> {
    let unsupported = || {
        Err(Error::Unsupported(format!(
            "{lie_type}{rank} (supported: A1-A8, B2-B8, C3-C8, D4-D8, E6-E8, F4, G2)"
        )))
    };
    if rank == 0 || rank > 8 {
        return unsupported();
    }
    let mut a = vec![vec![0i64; rank]; rank];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    // Helper: a plain single edge between nodes i and j.
    let single = |a: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    let lacing;
    match (lie_type, rank) {
        (LieType::A, _) => {
            for i in 0..rank - 1 {
                single(&mut a, i, i + 1);
            }
            lacing = vec![1; rank];
        }
        (LieType::B, n) if n >= 2 => {
            for i in 0..n - 1 {
                single(&mut a, i, i + 1);
            }
            // α_{n-1} is short: ⟨α_{n-2}, α̌_{n-1}⟩ = -2.
            a[n - 1][n - 2] = -2;
            lacing = {
                let mut l = vec![1; n];
                l[n - 1] = 2;
                l
            };
        }
        (LieType::C, n) if n >= 3 => {
            for i in 0..n - 1 {
                single(&mut a, i, i + 1);
            }
            // α_{n-1} is long: ⟨α_{n-1}, α̌_{n-2}⟩ = -2.
            a[n - 2][n - 1] = -2;
            lacing = {
                let mut l = vec![2; n];
                l[n - 1] = 1;
                l
            };
        }
        (LieType::D, n) if n >= 4 => {
            for i in 0..n - 3 {
                single(&mut a, i, i + 1);
            }
            single(&mut a, n - 3, n - 2);
            single(&mut a, n - 3, n - 1);
            lacing = vec![1; n];
        }
        (LieType::E, n) if (6..=8).contains(&n) => {
            single(&mut a, 0, 2);
            single(&mut a, 1, 3);
            for i in 2..n - 1 {
                single(&mut a, i, i + 1);
            }
            lacing = vec![1; n];
        }
        (LieType::F, 4) => {
            single(&mut a, 0, 1);
            single(&mut a, 2, 3);
            // α_2 short, α_1 long: ⟨α_1, α̌_2⟩ = -2.
            a[1][2] = -1;
            a[2][1] = -2;
            lacing = vec![1, 1, 2, 2];
        }
        (LieType::G, 2) => {
            // α_0 short (lacing 3), α_1 long.
            a[0][1] = -3;
            a[1][0] = -1;
            lacing = vec![3, 1];
        }
        _ => return unsupported(),
    }
    Ok((a, lacing))
}

/// Enumerate the positive roots of a finite-type Cartan matrix by height,
/// using root strings. Deterministic: heights ascend, ties sorted lex.
pub(crate) fn positive_roots_of(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut known: HashSet<Vec<i64>> = HashSet::new();
    let mut out: Vec<Vec<i64>> = Vec::new();
    let mut layer: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut e = vec![0i64; n];
            e[i] = 1;
            e
        })
        .collect();
    for height in 1.. {
        assert!(
            height < 100,
            "root enumeration did not terminate: not finite type"
        );
        layer.sort();
        for r in &layer {
            known.insert(r.clone());
        }
        out.extend(layer.iter().cloned());
        let mut next: Vec<Vec<i64>> = Vec::new();
        for m in &layer {
            for i in 0..n {
                // Length of the downward α_i-string through m.
                let mut p = 0i64;
                let mut down = m.clone();
                loop {
                    down[i] -= 1;
                    if down[i] < 0 || !known.contains(&down) {
                        break;
                    }
                    p += 1;
                }
                let pairing: i64 = (0..n).map(|j| cartan[i][j] * m[j]).sum();
                if p - pairing > 0 {
                    let mut up = m.clone();
                    up[i] += 1;
                    if !next.contains(&up) {
                        next.push(up);
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        layer = next;
    }
    out
}

/// Order of the finite Weyl group of a finite-type Cartan matrix, by
/// splitting into irreducible components and classifying each through the
/// invariants (rank, |det|, number of positive roots).
pub(crate) fn weyl_order_of_cartan(cartan: &[Vec<i64>]) -> u128 {
    let n = cartan.len();
    if n == 0 {
        return 1;
    }
    // Connected components of the diagram.
    let mut seen = vec![false; n];
    let mut order: u128 = 1;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for v in 0..n {
                if !seen[v] && cartan[u][v] != 0 {
                    seen[v] = true;
                    comp.push(v);
                    stack.push(v);
                }
            }
        }
        comp.sort_unstable();
        let sub: Vec<Vec<i64>> = comp
            .iter()
            .map(|&i| comp.iter().map(|&j| cartan[i][j]).collect())
            .collect();
        order *= irreducible_weyl_order(&sub);
    }
    order
}

fn factorial(n: u128) -> u128 {
    (1..=n).product()
}

fn irreducible_weyl_order(cartan: &[Vec<i64>]) -> u128 {
    let n = cartan.len() as u128;
    let det = int_determinant(cartan).unsigned_abs();
    let npos = positive_roots_of(cartan).len() as u128;
    // (rank, det, #positive roots) separates the irreducible finite types;
    // B_n and C_n share all three and share their group order.
    if det == n + 1 && npos == n * (n + 1) / 2 {
        return factorial(n + 1); // A_n
    }
    if det == 2 && npos == n * n {
        return (1 << n) * factorial(n); // B_n / C_n
    }
    if det == 4 && npos == n * (n - 1) {
        return (1 << (n - 1)) * factorial(n); // D_n
    }
    match (n, det, npos) {
        (2, 1, 6) => 12,          // G_2
        (4, 1, 24) => 1152,       // F_4
        (6, 3, 36) => 51840,      // E_6
        (7, 2, 63) => 2903040,    // E_7
        (8, 1, 120) => 696729600, // E_8
        other => panic!("not a finite-type Cartan matrix: invariants {other:?}"),
    }
}

fn int_determinant(mat: &[Vec<i64>]) -> i128 {
    let det = rational_inverse(mat).1;
    assert!(det.is_integer(), "integer matrix has integer determinant");
    let d: BigInt = det.to_integer();
    i128::from_str(&d.to_string()).expect("determinant fits in i128")
}

/// Exact inverse and determinant by Gauss-Jordan over the rationals.
fn rational_inverse(mat: &[Vec<i64>]) -> (Vec<Vec<Rational>>, Rational) {
    let n = mat.len();
    let mut m: Vec<Vec<Rational>> = mat
        .iter()
        .map(|row| row.iter().map(|&x| rat(x)).collect())
        .collect();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect();
    let mut det = Rational::one();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .expect("matrix is invertible");
        if pivot != col {
            m.swap(pivot, col);
            inv.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for j in 0..n {
            m[col][j] /= &p;
            inv[col][j] /= &p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for j in 0..n {
                    let a = &m[col][j] * &f;
                    m[r][j] -= a;
                    let b = &inv[col][j] * &f;
                    inv[r][j] -= b;
                }
            }
        }
    }
    (inv, det)
}

/// Build and validate the root datum for a supported (type, rank).
pub fn build_root_datum(lie_type: LieType, rank: usize) -> Result<RootDatum> {
    let (cartan, lacing) = cartan_table(lie_type, rank)?;
    // Symmetrizability: a_ij / r_i = (α_i, α_j) is symmetric, i.e.
    // a_ij r_j = a_ji r_i.
    for i in 0..rank {
        for j in 0..rank {
            assert_eq!(
                cartan[i][j] * lacing[j],
                cartan[j][i] * lacing[i],
                "lacing must symmetrize the Cartan matrix"
            );
        }
    }

    let positive_roots = positive_roots_of(&cartan);
    let npos = positive_roots.len();
    let expected_npos = match (lie_type, rank) {
        (LieType::A, n) => n * (n + 1) / 2,
        (LieType::B, n) | (LieType::C, n) => n * n,
        (LieType::D, n) => n * (n - 1),
        (LieType::E, 6) => 36,
        (LieType::E, 7) => 63,
        (LieType::E, 8) => 120,
        (LieType::F, 4) => 24,
        (LieType::G, 2) => 6,
        _ => unreachable!(),
    };
    assert_eq!(
        npos, expected_npos,
        "positive root count for {lie_type}{rank}"
    );

    // Norms, lacings and coroots of every positive root.
    let mut positive_coroots = Vec::with_capacity(npos);
    let mut root_lacing = Vec::with_capacity(npos);
    for m in &positive_roots {
        // (α, α) = Σ_i m_i ⟨α, α̌_i⟩ / r_i.
        let mut norm = Rational::zero();
        for i in 0..rank {
            let pairing: i64 = (0..rank).map(|j| cartan[i][j] * m[j]).sum();
            norm += ratio(m[i] * pairing, lacing[i]);
        }
        let r = rat(2) / norm;
        assert!(r.is_integer(), "2/(α,α) must be integral");
        let r: i64 = i64::try_from(r.to_integer()).expect("small lacing");
        assert!((1..=3).contains(&r), "root lacing in 1..=3");
        let coroot: Vec<i64> = (0..rank)
            .map(|i| {
                let c = ratio(m[i] * r, lacing[i]);
                assert!(c.is_integer(), "coroot coefficients must be integral");
                i64::try_from(c.to_integer()).expect("small coroot coefficient")
            })
            .collect();
        positive_coroots.push(coroot);
        root_lacing.push(r);
    }

    // Highest root = unique root of maximal height.
    let max_height: i64 = positive_roots
        .iter()
        .map(|m| m.iter().sum())
        .max()
        .expect("nonempty");
    let tallest: Vec<usize> = (0..npos)
        .filter(|&t| positive_roots[t].iter().sum::<i64>() == max_height)
        .collect();
    assert_eq!(tallest.len(), 1, "highest root is unique");
    let theta = positive_roots[tallest[0]].clone();
    let theta_check = positive_coroots[tallest[0]].clone();
    // Normalization check: θ is long, i.e. κ(θ̌, θ̌) = 2.
    assert_eq!(root_lacing[tallest[0]], 1, "highest root must be long");

    // h∨ = ⟨ρ, θ̌⟩ + 1 and ρ̌ = half-sum of positive coroots.
    let h_vee: i64 = theta_check.iter().sum::<i64>() + 1;
    let mut rho_check = vec![Rational::zero(); rank];
    for c in &positive_coroots {
        for i in 0..rank {
            rho_check[i] += ratio(c[i], 2);
        }
    }
    // ⟨α_j, ρ̌⟩ = 1 for every simple root.
    for j in 0..rank {
        let mut p = Rational::zero();
        for i in 0..rank {
            p += &rho_check[i] * rat(cartan[i][j]);
        }
        assert!(p.is_one(), "ρ̌ pairs to 1 with every simple root");
    }

    // Longest element: drive ρ to the antidominant chamber greedily.
    let mut w_circ = Vec::new();
    let mut lam: Vec<Rational> = vec![Rational::one(); rank];
    loop {
        let Some(i) = (0..rank).find(|&i| lam[i].is_positive()) else {
            break;
        };
        // s_i: λ ↦ λ - λ_i α_i, with α_i = i-th column of the Cartan matrix.
        let c = lam[i].clone();
        for (m, entry) in lam.iter_mut().enumerate() {
            *entry -= &c * rat(cartan[m][i]);
        }
        w_circ.push(i);
        assert!(w_circ.len() <= npos, "longest-element search overran ℓ(w°)");
    }
    assert_eq!(w_circ.len(), npos, "ℓ(w°) = number of positive roots");

    let (cartan_inv, _) = rational_inverse(&cartan);
    let weyl_order = weyl_order_of_cartan(&cartan);

    let mut datum = RootDatum {
        lie_type,
        rank,
        cartan,
        lacing,
        positive_roots,
        positive_coroots,
        root_lacing,
        theta,
        theta_check,
        h_vee,
        dim_g: rank + 2 * npos,
        rk_g: rank,
        dim_n: npos,
        w_circ,
        tau: Vec::new(),
        weyl_order,
        rho_check,
        cartan_inv,
    };

    // τ from w°(α_i) = -α_{τ(i)}; also checks w° is an involution.
    let w0 = FiniteWeyl::from_word(&datum, &datum.w_circ)?;
    assert!(w0.mul(&w0).is_identity(), "w° is an involution");
    let mut tau = vec![usize::MAX; rank];
    for i in 0..rank {
        let image = w0.act_ints(&datum.root_fund(&unit_vec(rank, i)));
        let j = (0..rank)
            .find(|&j| {
                let neg: Vec<i64> = datum
                    .root_fund(&unit_vec(rank, j))
                    .iter()
                    .map(|x| -x)
                    .collect();
                image == neg
            })
            .expect("w° permutes the negated simple roots");
        tau[i] = j;
        assert_eq!(datum.lacing[i], datum.lacing[j], "τ preserves lacing");
    }
    for i in 0..rank {
        assert_eq!(tau[tau[i]], i, "τ is an involution");
    }
    datum.tau = tau;
    Ok(datum)
}

fn unit_vec(rank: usize, i: usize) -> Vec<i64> {
    let mut e = vec![0i64; rank];
    e[i] = 1;
    e
}

impl RootDatum {
    /// ρ: all fundamental coordinates equal to 1.
    pub fn rho(&self) -> Weight {
        Weight(vec![Rational::one(); self.rank])
    }

    /// ⟨λ, α̌⟩ for a coroot given over the simple coroots.
    pub fn pair(&self, lam: &Weight, coroot: &[i64]) -> Result<Rational> {
        if lam.rank() != self.rank || coroot.len() != self.rank {
            return Err(Error::DimensionMismatch(format!(
                "pair: rank {} vs weight {} / coroot {}",
                self.rank,
                lam.rank(),
                coroot.len()
            )));
        }
        let mut p = Rational::zero();
        for (c, l) in coroot.iter().zip(&lam.0) {
            p += l * rat(*c);
        }
        Ok(p)
    }

    /// Fundamental coordinates of a root given over the simple roots:
    /// column combination of the Cartan matrix.
    pub fn root_fund(&self, root: &[i64]) -> Vec<i64> {
        (0..self.rank)
            .map(|m| (0..self.rank).map(|j| self.cartan[m][j] * root[j]).sum())
            .collect()
    }

    /// Locate a (possibly negated) coroot among the positive coroots.
    /// Returns (index, sign).
    pub fn coroot_index(&self, coroot: &[i64]) -> Option<(usize, i64)> {
        if let Some(t) = self.positive_coroots.iter().position(|c| c == coroot) {
            return Some((t, 1));
        }
        let neg: Vec<i64> = coroot.iter().map(|x| -x).collect();
        self.positive_coroots
            .iter()
            .position(|c| c == &neg)
            .map(|t| (t, -1))
    }

    /// Lacing number r(α) of the root underlying a coroot.
    pub fn lacing_of_coroot(&self, coroot: &[i64]) -> Result<i64> {
        let (t, _) = self
            .coroot_index(coroot)
            .ok_or_else(|| Error::InvalidInput(format!("not a coroot: {coroot:?}")))?;
        Ok(self.root_lacing[t])
    }

    /// Coefficients over the simple roots of the root underlying a coroot
    /// (sign carried along).
    pub fn root_of_coroot(&self, coroot: &[i64]) -> Result<Vec<i64>> {
        let (t, sign) = self
            .coroot_index(coroot)
            .ok_or_else(|| Error::InvalidInput(format!("not a coroot: {coroot:?}")))?;
        Ok(self.positive_roots[t].iter().map(|m| sign * m).collect())
    }

    /// Apply the word (letters in application order) to a weight.
    pub fn finite_act(&self, word: &[usize], lam: &Weight) -> Result<Weight> {
        if lam.rank() != self.rank {
            return Err(Error::DimensionMismatch("finite_act weight rank".into()));
        }
        let mut out = lam.clone();
        for &i in word {
            if i >= self.rank {
                return Err(Error::InvalidInput(format!("letter {i} out of range")));
            }
            let c = out.0[i].clone();
            for (m, entry) in out.0.iter_mut().enumerate() {
                *entry -= &c * rat(self.cartan[m][i]);
            }
        }
        Ok(out)
    }

    /// ρ-shifted (dot) action of a word: w·λ = w(λ+ρ) - ρ.
    pub fn finite_dot_act(&self, word: &[usize], lam: &Weight) -> Result<Weight> {
        Ok(self
            .finite_act(word, &lam.add(&self.rho()))?
            .sub(&self.rho()))
    }

    /// Solve μ = Σ x_j α_j for a weight with integer fundamental coords.
    pub(crate) fn root_coords_of_fund(&self, fund: &[i64]) -> Vec<Rational> {
        (0..self.rank)
            .map(|j| {
                let mut x = Rational::zero();
                for m in 0..self.rank {
                    x += &self.cartan_inv[j][m] * rat(fund[m]);
                }
                x
            })
            .collect()
    }
}

/// An element of the finite Weyl group, stored as its exact matrix on
/// fundamental-weight coordinates (plus the inverse, kept in lockstep so
/// coroots can be transported without rational inversion).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteWeyl {
    rank: usize,
    /// Row-major rank×rank matrix acting on fundamental coordinates.
    mat: Vec<i64>,
    inv: Vec<i64>,
}

impl FiniteWeyl {
    pub fn identity(rank: usize) -> Self {
        let mut mat = vec![0i64; rank * rank];
        for i in 0..rank {
            mat[i * rank + i] = 1;
        }
        FiniteWeyl {
            rank,
            inv: mat.clone(),
            mat,
        }
    }

    /// The simple reflection s_i.
    pub fn simple(datum: &RootDatum, i: usize) -> Result<Self> {
        if i >= datum.rank {
            return Err(Error::InvalidInput(format!(
                "simple reflection {i} out of range"
            )));
        }
        let n = datum.rank;
        let mut mat = FiniteWeyl::identity(n).mat;
        for m in 0..n {
            mat[m * n + i] -= datum.cartan[m][i];
        }
        Ok(FiniteWeyl {
            rank: n,
            inv: mat.clone(),
            mat,
        })
    }

    /// Product of simple reflections; letters in application order.
    pub fn from_word(datum: &RootDatum, word: &[usize]) -> Result<Self> {
        let mut out = FiniteWeyl::identity(datum.rank);
        for &i in word {
            out = FiniteWeyl::simple(datum, i)?.mul(&out);
        }
        Ok(out)
    }

    /// Reflection in an arbitrary finite real coroot.
    pub fn coroot_reflection(datum: &RootDatum, coroot: &[i64]) -> Result<Self> {
        let root_fund = datum.root_fund(&datum.root_of_coroot(coroot)?);
        let n = datum.rank;
        let mut mat = FiniteWeyl::identity(n).mat;
        for m in 0..n {
            for j in 0..n {
                mat[m * n + j] -= coroot[j] * root_fund[m];
            }
        }
        let refl = FiniteWeyl {
            rank: n,
            inv: mat.clone(),
            mat,
        };
        debug_assert!(refl.mul(&refl).is_identity());
        Ok(refl)
    }

    pub fn is_identity(&self) -> bool {
        *self == FiniteWeyl::identity(self.rank)
    }

    /// Function composition: (self ∘ other), i.e. other acts first.
    pub fn mul(&self, other: &FiniteWeyl) -> FiniteWeyl {
        let n = self.rank;
        assert_eq!(n, other.rank, "rank mismatch");
        let mut mat = vec![0i64; n * n];
        let mut inv = vec![0i64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.mat[i * n + k];
                let b = other.inv[i * n + k];
                if a == 0 && b == 0 {
                    continue;
                }
                for j in 0..n {
                    mat[i * n + j] += a * other.mat[k * n + j];
                    inv[i * n + j] += b * self.inv[k * n + j];
                }
            }
        }
        FiniteWeyl { rank: n, mat, inv }
    }

    pub fn inverse(&self) -> FiniteWeyl {
        FiniteWeyl {
            rank: self.rank,
            mat: self.inv.clone(),
            inv: self.mat.clone(),
        }
    }

    pub fn act(&self, lam: &Weight) -> Weight {
        let n = self.rank;
        assert_eq!(lam.rank(), n, "rank mismatch");
        Weight(
            (0..n)
                .map(|m| {
                    let mut x = Rational::zero();
                    for j in 0..n {
                        if self.mat[m * n + j] != 0 {
                            x += rat(self.mat[m * n + j]) * &lam.0[j];
                        }
                    }
                    x
                })
                .collect(),
        )
    }

    /// Action on an integer vector of fundamental coordinates.
    pub fn act_ints(&self, fund: &[i64]) -> Vec<i64> {
        let n = self.rank;
        (0..n)
            .map(|m| (0..n).map(|j| self.mat[m * n + j] * fund[j]).sum())
            .collect()
    }

    /// Contragredient action on a coroot coefficient vector, so that
    /// ⟨w(λ), w(α̌)⟩ = ⟨λ, α̌⟩.
    pub fn act_coroot(&self, coroot: &[i64]) -> Vec<i64> {
        let n = self.rank;
        (0..n)
            .map(|i| (0..n).map(|j| self.inv[j * n + i] * coroot[j]).sum())
            .collect()
    }
}
