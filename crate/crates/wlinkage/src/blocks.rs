//! Blocks as posets of minimal double-coset representatives
//! `W_{f,λ} \ W_λ / W°_λ`, with the Bruhat order, plus the weight-class
//! normal form π and its small utilities.
//!
//! Enumeration is a breadth-first search over the dot-orbit of the
//! normalized base weight: orbit points are exactly the one-sided cosets
//! `w·W°_λ`, first arrival gives the minimal-length, lexicographically
//! minimal word, and grouping points by their finite normal form π merges
//! one-sided cosets into double cosets. Everything is exact — elements are
//! kept in canonical (finite part, translation) form, never as words.

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use num_traits::Signed;

use crate::affine::{AffineWeylElement, Level};
use crate::integral::{antidominantize, IntegralSystem};
use crate::rootdata::{weyl_order_of_cartan, FiniteWeyl, RootDatum, Weight};
use crate::{Error, Result};

/// Which quotient a poset's representatives were taken in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CosetKind {
    /// Double cosets `W_{f,λ} \ W_λ / W°_λ` — the block of the W-algebra.
    TwoSided,
    /// One-sided cosets `W_λ / W°_λ` — the Kac–Moody linkage class.
    OneSided,
}

/// A minimal-length coset representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetRep {
    /// Reduced word over Π-indices, in application order (`word[0]` acts
    /// first); the lexicographically least among minimal words.
    pub word: Vec<usize>,
    pub length: usize,
    /// The class π(w·λ) this representative labels, as its normal form.
    pub weight: Weight,
    /// The group element itself (canonical form).
    pub element: AffineWeylElement,
}

/// A truncated block: representatives up to `truncation_length` with the
/// Bruhat order restricted to them.
#[derive(Debug, Clone)]
pub struct BlockPoset {
    pub system: IntegralSystem,
    pub kind: CosetKind,
    /// Sorted by (length, word lex) — the BFS discovery order.
    pub reps: Vec<CosetRep>,
    /// `leq[i][j]` ⟺ reps[i] ≤ reps[j] in Bruhat order.
    pub leq: Vec<Vec<bool>>,
    /// Covering pairs (i, j): i < j with nothing in between.
    pub hasse_edges: Vec<(usize, usize)>,
    pub truncation_length: usize,
}

impl PartialEq for BlockPoset {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
            && self.truncation_length == other.truncation_length
            && self.system.level == other.system.level
            && self.system.base_weight == other.system.base_weight
            && self.system.simple_coroots == other.system.simple_coroots
            && self.reps == other.reps
            && self.leq == other.leq
            && self.hasse_edges == other.hasse_edges
    }
}

impl BlockPoset {
    /// Bruhat comparison of two representatives by index.
    pub fn bruhat_leq(&self, v: usize, w: usize) -> Result<bool> {
        if v >= self.reps.len() || w >= self.reps.len() {
            return Err(Error::InvalidInput(format!(
                "rep index out of range: {v}, {w} with {} reps",
                self.reps.len()
            )));
        }
        Ok(self.leq[v][w])
    }

    /// Index of the representative labeling the class of `weight`, if the
    /// class appears within the truncation.
    pub fn rep_of_class(&self, class: &Weight) -> Option<usize> {
        self.reps.iter().position(|r| &r.weight == class)
    }
}

struct Node {
    weight: Weight,
    word: Vec<usize>,
    element: AffineWeylElement,
}

/// Breadth-first search of the dot-orbit of the base weight under the
/// simple integral reflections. FIFO order with ascending generator index
/// makes each node's word the lex-least geodesic; nodes are discovered in
/// (length, word) order.
fn orbit_nodes(system: &IntegralSystem, max_len: usize) -> Result<Vec<Node>> {
    let datum = &*system.datum;
    let refl = system.simple_reflections().to_vec();
    let mut nodes = vec![Node {
        weight: system.base_weight.clone(),
        word: Vec::new(),
        element: AffineWeylElement::identity(datum.rank),
    }];
    let mut seen: HashMap<Weight, usize> = HashMap::new();
    seen.insert(system.base_weight.clone(), 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(cur) = queue.pop_front() {
        if nodes[cur].word.len() == max_len {
            continue;
        }
        for (i, s) in refl.iter().enumerate() {
            let next = s.act_dot(datum, &system.level, &nodes[cur].weight)?;
            if seen.contains_key(&next) {
                continue;
            }
            let mut word = nodes[cur].word.clone();
            word.push(i);
            let element = s.mul(&nodes[cur].element);
            debug_assert_eq!(
                element.act_dot(datum, &system.level, &system.base_weight)?,
                next
            );
            seen.insert(next.clone(), nodes.len());
            queue.push_back(nodes.len());
            nodes.push(Node {
                weight: next,
                word,
                element,
            });
        }
    }
    Ok(nodes)
}

/// `v ≤ w` in Bruhat order, by the descent recursion: pick a right descent
/// s of w; then v ≤ w iff min(v, vs) ≤ ws.
fn bruhat_leq_elements(
    system: &IntegralSystem,
    v: &AffineWeylElement,
    w: &AffineWeylElement,
) -> bool {
    if v.is_identity() {
        return true;
    }
    if w.is_identity() {
        return false;
    }
    let datum = &*system.datum;
    let refl = system.simple_reflections();
    let s = (0..system.rank())
        .find(|&i| !w.act_coroot(datum, &system.simple_coroots[i]).is_positive())
        .expect("a non-identity element has a right descent");
    let ws = w.mul(&refl[s]);
    let vs = v.mul(&refl[s]);
    let v_smaller = !v.act_coroot(datum, &system.simple_coroots[s]).is_positive();
    if v_smaller {
        bruhat_leq_elements(system, &vs, &ws)
    } else {
        bruhat_leq_elements(system, v, &ws)
    }
}

fn poset_from_reps(
    system: IntegralSystem,
    kind: CosetKind,
    reps: Vec<CosetRep>,
    truncation_length: usize,
) -> BlockPoset {
    let n = reps.len();
    let mut leq = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            leq[i][j] = if i == j {
                true
            } else if reps[i].length >= reps[j].length {
                false
            } else {
                bruhat_leq_elements(&system, &reps[i].element, &reps[j].element)
            };
        }
    }
    let mut hasse_edges = Vec::new();
    for i in 0..n {
        'pair: for j in 0..n {
            if i == j || !leq[i][j] {
                continue;
            }
            for k in 0..n {
                if k != i && k != j && leq[i][k] && leq[k][j] {
                    continue 'pair;
                }
            }
            hasse_edges.push((i, j));
        }
    }
    hasse_edges.sort();
    BlockPoset {
        system,
        kind,
        reps,
        leq,
        hasse_edges,
        truncation_length,
    }
}

fn check_minimality(system: &IntegralSystem, rep: &CosetRep, kind: CosetKind) {
    let datum = &*system.datum;
    if kind == CosetKind::TwoSided {
        let winv = rep.element.inverse();
        for &s in &system.j_finite {
            assert!(
                winv.act_coroot(datum, &system.simple_coroots[s])
                    .is_positive(),
                "double-coset representative has a left descent in j_finite"
            );
        }
    }
    for &s in &system.j_stab {
        assert!(
            rep.element
                .act_coroot(datum, &system.simple_coroots[s])
                .is_positive(),
            "coset representative has a right descent in j_stab"
        );
    }
}

/// Enumerate the block of the system's base class: all double cosets of
/// `W_{f,λ} \ W_λ / W°_λ` whose minimal representative has length
/// ≤ max_len, as a Bruhat poset.
pub fn enumerate_block(system: IntegralSystem, max_len: usize) -> Result<BlockPoset> {
    let nodes = orbit_nodes(&system, max_len)?;
    let datum = &*system.datum;

    let mut nf_cache: HashMap<Weight, Weight> = HashMap::new();
    let mut reps: Vec<CosetRep> = Vec::new();
    let mut rep_len_of_class: HashMap<Weight, usize> = HashMap::new();
    for node in nodes {
        let class = match nf_cache.get(&node.weight) {
            Some(c) => c.clone(),
            None => {
                let c = weight_class_normal_form(datum, &node.weight)?;
                nf_cache.insert(node.weight.clone(), c.clone());
                c
            }
        };
        match rep_len_of_class.get(&class) {
            Some(&len) => {
                // The minimal element of a double coset is unique, so a
                // repeat visit of the class must be strictly longer.
                assert!(
                    node.word.len() > len,
                    "two minimal-length representatives in one double coset"
                );
            }
            None => {
                rep_len_of_class.insert(class.clone(), node.word.len());
                let rep = CosetRep {
                    length: node.word.len(),
                    word: node.word,
                    weight: class,
                    element: node.element,
                };
                check_minimality(&system, &rep, CosetKind::TwoSided);
                reps.push(rep);
            }
        }
    }
    Ok(poset_from_reps(system, CosetKind::TwoSided, reps, max_len))
}

/// Enumerate one-sided cosets `W_λ / W°_λ` up to length max_len — the
/// Kac–Moody linkage class of the base weight, one representative per
/// orbit point. Here `weight` is the orbit point itself (lift, not class).
pub fn enumerate_km_cosets(system: IntegralSystem, max_len: usize) -> Result<BlockPoset> {
    let nodes = orbit_nodes(&system, max_len)?;
    let reps: Vec<CosetRep> = nodes
        .into_iter()
        .map(|node| {
            let rep = CosetRep {
                length: node.word.len(),
                word: node.word,
                weight: node.weight,
                element: node.element,
            };
            check_minimality(&system, &rep, CosetKind::OneSided);
            rep
        })
        .collect();
    Ok(poset_from_reps(system, CosetKind::OneSided, reps, max_len))
}

/// Default reflection budget for normalizing a lift inside its integral
/// orbit.
pub const DEFAULT_STEP_BOUND: usize = 10_000;

/// The block containing the weight class of `lift`: canonicalize the lift
/// across W_f (so any lift of the class gives the identical poset),
/// normalize inside W_λ, build the integral system, enumerate.
pub fn block_of(
    datum: &Arc<RootDatum>,
    level: &Level,
    lift: &Weight,
    max_len: usize,
) -> Result<BlockPoset> {
    block_of_with(datum, level, lift, max_len, None, DEFAULT_STEP_BOUND)
}

/// `block_of` with explicit search/step budgets (for callers that need the
/// inconclusive paths surfaced).
pub fn block_of_with(
    datum: &Arc<RootDatum>,
    level: &Level,
    lift: &Weight,
    max_len: usize,
    search_bound: Option<i64>,
    step_bound: usize,
) -> Result<BlockPoset> {
    let class_rep = weight_class_normal_form(datum, lift)?;
    let (base, _) = antidominantize(datum, level, &class_rep, step_bound)?;
    let system = IntegralSystem::build(datum.clone(), level.clone(), base, search_bound)?;
    enumerate_block(system, max_len)
}

fn is_wf_antidominant(datum: &RootDatum, lam: &Weight) -> Result<bool> {
    let shifted = lam.add(&datum.rho());
    for c in &datum.positive_coroots {
        let p = datum.pair(&shifted, c)?;
        if p.is_integer() && p.is_positive() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Cap on the finite dot-orbit search in `weight_class_normal_form` for
/// weights with no integral shortcut.
const ORBIT_CAP: usize = 200_000;

/// The normal form π(λ) of a weight class in `W_f \ h*` (dot action): the
/// W_f-antidominant orbit member with lexicographically least coordinates.
/// Fully integral weights take a shortcut (their antidominant member is
/// unique); otherwise the finite orbit is searched directly.
pub fn weight_class_normal_form(datum: &RootDatum, lam: &Weight) -> Result<Weight> {
    if lam.rank() != datum.rank {
        return Err(Error::DimensionMismatch("weight rank".into()));
    }
    if lam.0.iter().all(|x| x.is_integer()) {
        let mut cur = lam.clone();
        for _ in 0..1_000_000 {
            match (0..datum.rank).find(|&i| !cur.0[i].is_negative()) {
                Some(i) => cur = datum.finite_dot_act(&[i], &cur)?,
                None => return Ok(cur),
            }
        }
        unreachable!("finite dot-orbit descent did not terminate");
    }

    let mut orbit: Vec<Weight> = vec![lam.clone()];
    let mut seen: HashMap<Weight, ()> = HashMap::new();
    seen.insert(lam.clone(), ());
    let mut queue = VecDeque::from([lam.clone()]);
    while let Some(cur) = queue.pop_front() {
        for i in 0..datum.rank {
            let next = datum.finite_dot_act(&[i], &cur)?;
            if !seen.contains_key(&next) {
                if orbit.len() >= ORBIT_CAP {
                    return Err(Error::Inconclusive(format!(
                        "finite orbit exceeded {ORBIT_CAP} points"
                    )));
                }
                seen.insert(next.clone(), ());
                orbit.push(next.clone());
                queue.push_back(next);
            }
        }
    }
    let mut best: Option<Weight> = None;
    for w in orbit {
        if is_wf_antidominant(datum, &w)? {
            best = match best {
                None => Some(w),
                Some(b) => Some(if w < b { w } else { b }),
            };
        }
    }
    Ok(best.expect("every finite dot-orbit contains an antidominant weight"))
}

/// The involution of weight classes λ̄ ↦ π(-w°(λ)) induced by the Zhu
/// algebra's anti-involution.
pub fn zhu_involution(datum: &RootDatum, lam: &Weight) -> Result<Weight> {
    let w0 = FiniteWeyl::from_word(datum, &datum.w_circ)?;
    weight_class_normal_form(datum, &w0.act(lam).neg())
}

/// Whether the simple module of highest weight λ survives quantized
/// Drinfeld–Sokolov reduction: no finite simple coroot may pair with λ+ρ
/// to a positive integer.
pub fn ds_survives(datum: &RootDatum, lam: &Weight) -> bool {
    assert_eq!(lam.rank(), datum.rank, "weight rank");
    lam.0.iter().all(|x| !(x.is_integer() && !x.is_negative()))
}

/// Number of W_f-antidominant weights in the finite dot-orbit of λ:
/// `|W_f| / |W_{f,λ}|`, where W_{f,λ} is the integral finite Weyl group of
/// λ. Cross-checked against direct orbit enumeration at small rank.
pub fn antidominant_count(datum: &RootDatum, lam: &Weight) -> Result<u128> {
    let shifted = lam.add(&datum.rho());
    let mut integral: Vec<Vec<i64>> = Vec::new();
    for c in &datum.positive_coroots {
        if datum.pair(&shifted, c)?.is_integer() {
            integral.push(c.clone());
        }
    }
    // Simple coroots of the finite integral subsystem = members that do
    // not decompose as a sum of two members.
    let simples: Vec<&Vec<i64>> = integral
        .iter()
        .filter(|s| {
            !integral.iter().any(|a| {
                let b: Vec<i64> = s.iter().zip(a.iter()).map(|(x, y)| x - y).collect();
                b != vec![0; datum.rank] && integral.contains(&b)
            })
        })
        .collect();
    let order = if simples.is_empty() {
        1
    } else {
        let mut cartan_sub = vec![vec![0i64; simples.len()]; simples.len()];
        for (j, sj) in simples.iter().enumerate() {
            let root_j = datum.root_fund(&datum.root_of_coroot(sj)?);
            for (i, si) in simples.iter().enumerate() {
                cartan_sub[i][j] = root_j.iter().zip(si.iter()).map(|(a, b)| a * b).sum();
            }
        }
        weyl_order_of_cartan(&cartan_sub)
    };
    assert_eq!(
        datum.weyl_order % order,
        0,
        "stabilizer order must divide |W_f|"
    );
    let count = datum.weyl_order / order;

    if datum.rank <= 3 {
        // Direct enumeration of the finite dot-orbit.
        let mut seen: HashMap<Weight, ()> = HashMap::new();
        seen.insert(lam.clone(), ());
        let mut queue = VecDeque::from([lam.clone()]);
        while let Some(cur) = queue.pop_front() {
            for i in 0..datum.rank {
                let next = datum.finite_dot_act(&[i], &cur)?;
                if !seen.contains_key(&next) {
                    seen.insert(next.clone(), ());
                    queue.push_back(next);
                }
            }
        }
        let mut direct: u128 = 0;
        for w in seen.keys() {
            if is_wf_antidominant(datum, w)? {
                direct += 1;
            }
        }
        assert_eq!(direct, count, "orbit count disagrees with index formula");
    }
    Ok(count)
}
