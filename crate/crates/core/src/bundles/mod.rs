//! Equivariant bundles as expression trees, and their splitting types on
//! invariant curves.
//!
//! Every invariant curve is a `ℙ¹`, so a bundle restricted to it splits as
//! `⊕ O(a_i)`. The [`SplittingType`] is the multiset `{a_i}`. Leaves are
//! evaluated directly:
//!
//! * `Line(λ)`: the degree `⟨w·λ, α∨⟩`, with `w` the representative of the
//!   lower endpoint of the curve and `α` its label.
//! * `TautQuot` on `Gr(d, n)`: `{1, 0^(n-d-1)}` on every curve.
//! * `TautSub` on `Gr(d, n)`: `{0^(d-1), -1}`. `S|_C` sits inside the trivial
//!   bundle, so every `a_i ≤ 0`, and `deg S|_C = -deg Q|_C = -1`.
//! * `Tangent` on `Gr(d, n)`: `Hom(S, Q) = S^∨ ⊗ Q`.
//!
//! Every other constructor acts on the multiset functorially.

pub mod dsl;

use itertools::Itertools;
use rayon::prelude::*;
use serde::ser::{Serialize, SerializeMap, Serializer};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::flag::{GkmGraph, InvariantCurve};
use crate::rootsys::Weight;

/// Largest `k` accepted by `Sym(k, _)` and `Wedge(k, _)`.
pub const MAX_POWER: usize = 20;
/// Largest rank of the argument of `Sym` or `Wedge`.
pub const MAX_POWER_ARG_RANK: usize = 64;
/// Largest rank of any subexpression.
pub const MAX_RANK: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BundleExpr {
    Line(Weight),
    TautSub,
    TautQuot,
    Tangent,
    Trivial(usize),
    Dual(Box<BundleExpr>),
    Sum(Box<BundleExpr>, Box<BundleExpr>),
    Tensor(Box<BundleExpr>, Box<BundleExpr>),
    Sym(usize, Box<BundleExpr>),
    Wedge(usize, Box<BundleExpr>),
    Det(Box<BundleExpr>),
}

impl BundleExpr {
    pub fn line(lambda: Weight) -> Self {
        BundleExpr::Line(lambda)
    }

    pub fn trivial(r: usize) -> Self {
        BundleExpr::Trivial(r)
    }

    pub fn dual(self) -> Self {
        BundleExpr::Dual(Box::new(self))
    }

    pub fn det(self) -> Self {
        BundleExpr::Det(Box::new(self))
    }

    pub fn sum(self, other: BundleExpr) -> Self {
        BundleExpr::Sum(Box::new(self), Box::new(other))
    }

    pub fn tensor(self, other: BundleExpr) -> Self {
        BundleExpr::Tensor(Box::new(self), Box::new(other))
    }

    pub fn sym(self, k: usize) -> Self {
        BundleExpr::Sym(k, Box::new(self))
    }

    pub fn wedge(self, k: usize) -> Self {
        BundleExpr::Wedge(k, Box::new(self))
    }
}

/// Splitting exponents `a_1 ≥ … ≥ a_r` of a bundle on a `ℙ¹`.
#[derive(
    Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize,
)]
#[serde(transparent)]
pub struct SplittingType(Vec<i64>);

impl SplittingType {
    pub fn new(mut entries: Vec<i64>) -> Self {
        entries.sort_unstable_by(|a, b| b.cmp(a));
        SplittingType(entries)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn min_entry(&self) -> Option<i64> {
        self.0.last().copied()
    }
}

fn binomial(n: usize, k: usize) -> Option<usize> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > usize::MAX as u128 {
            return None;
        }
    }
    Some(acc as usize)
}

fn grassmannian(g: &GkmGraph, leaf: &str) -> Result<(usize, usize)> {
    g.grassmannian_data().ok_or_else(|| {
        Error::InvalidBundle(format!(
            "{leaf} needs a Grassmannian (type A with exactly one omitted node), not {} with omitted {:?}",
            g.root_system().cartan_type(),
            g.parabolic().omitted_nodes().iter().map(|i| i + 1).collect::<Vec<_>>()
        ))
    })
}

fn capped(r: Option<usize>, what: &str) -> Result<usize> {
    match r {
        Some(r) if r <= MAX_RANK => Ok(r),
        _ => Err(Error::InvalidBundle(format!(
            "{what} would have rank above {MAX_RANK}"
        ))),
    }
}

/// Rank of `e`, validating it against the flag variety of `g`.
pub fn rank(e: &BundleExpr, g: &GkmGraph) -> Result<usize> {
    use BundleExpr::*;
    match e {
        Line(lambda) => {
            let rs = g.root_system();
            if lambda.rank() != rs.rank() {
                return Err(Error::InvalidBundle(format!(
                    "L{:?} has {} coefficients but {} has rank {}",
                    lambda.coeffs(),
                    lambda.rank(),
                    rs.cartan_type(),
                    rs.rank()
                )));
            }
            if !g.parabolic().admits(lambda) {
                return Err(Error::InvalidBundle(format!(
                    "L{:?} is not a character of P: coefficients on the Levi nodes {:?} must vanish",
                    lambda.coeffs(),
                    g.parabolic().levi_nodes().iter().map(|i| i + 1).collect::<Vec<_>>()
                )));
            }
            Ok(1)
        }
        Trivial(0) => Err(Error::InvalidBundle("triv(r) needs r >= 1".into())),
        Trivial(r) => capped(Some(*r), "triv"),
        TautSub => grassmannian(g, "S").map(|(d, _)| d),
        TautQuot => grassmannian(g, "Q").map(|(d, n)| n - d),
        Tangent => grassmannian(g, "T").map(|(d, n)| d * (n - d)),
        Dual(a) | Det(a) => {
            let r = rank(a, g)?;
            Ok(if matches!(e, Det(_)) { 1 } else { r })
        }
        Sum(a, b) => capped(rank(a, g)?.checked_add(rank(b, g)?), "sum"),
        Tensor(a, b) => capped(rank(a, g)?.checked_mul(rank(b, g)?), "tensor product"),
        Sym(k, a) | Wedge(k, a) => {
            let r = rank(a, g)?;
            let is_sym = matches!(e, Sym(..));
            let name = if is_sym { "sym" } else { "wedge" };
            if *k > MAX_POWER {
                return Err(Error::InvalidBundle(format!(
                    "{name}({k}, _): power above the limit {MAX_POWER}"
                )));
            }
            if r > MAX_POWER_ARG_RANK {
                return Err(Error::InvalidBundle(format!(
                    "{name}({k}, _): argument rank {r} above the limit {MAX_POWER_ARG_RANK}"
                )));
            }
            if is_sym {
                capped(binomial(r + k - 1, *k), name)
            } else if *k > r {
                Err(Error::InvalidBundle(format!(
                    "wedge({k}, _) of a rank-{r} bundle: need 0 <= k <= rank"
                )))
            } else {
                capped(binomial(r, *k), name)
            }
        }
    }
}

/// `⟨w·λ, α∨⟩` where `w` represents endpoint `which` (0 = lower, 1 = upper)
/// of `c` and `α` is its label. The two endpoints give opposite values.
pub fn endpoint_pairing(
    g: &GkmGraph,
    lambda: &Weight,
    c: &InvariantCurve,
    which: usize,
) -> Result<i64> {
    let rs = g.root_system();
    let x = g.fixed_point(c.endpoints()[which])?;
    let moved = rs.weyl_act(x.rep(), lambda)?;
    Ok(rs.pair_index(moved.coeffs(), c.root_index()))
}

/// Degree of the line bundle `L(λ)` on the curve `c`.
///
/// Read off at the lower endpoint `x`, where `rep(x)⁻¹·α` is a positive root
/// `β` and the degree is `⟨λ, β∨⟩`. This is signed: `L(-ω)` on `ℙ¹` has
/// degree −1.
pub fn line_degree(g: &GkmGraph, lambda: &Weight, c: &InvariantCurve) -> Result<i64> {
    rank(&BundleExpr::Line(lambda.clone()), g)?;
    endpoint_pairing(g, lambda, c, 0)
}

fn eval(
    e: &BundleExpr,
    g: &GkmGraph,
    c: &InvariantCurve,
    grass: Option<(usize, usize)>,
) -> Vec<i64> {
    use BundleExpr::*;
    match e {
        Line(lambda) => {
            let rs = g.root_system();
            let x = &g.fixed_points()[c.endpoints()[0]];
            let moved = rs.act_unchecked(x.rep().word(), lambda);
            vec![rs.pair_index(moved.coeffs(), c.root_index())]
        }
        Trivial(r) => vec![0; *r],
        TautQuot => {
            let (d, n) = grass.expect("validated");
            let mut v = vec![0; n - d];
            v[0] = 1;
            v
        }
        TautSub => {
            let (d, _) = grass.expect("validated");
            let mut v = vec![0; d];
            v[d - 1] = -1;
            v
        }
        Tangent => {
            let (d, n) = grass.expect("validated");
            // S^∨ = {1, 0^(d-1)}, Q = {1, 0^(n-d-1)}
            let mut dual_sub = vec![0; d];
            dual_sub[0] = 1;
            let mut quot = vec![0; n - d];
            quot[0] = 1;
            pairwise_sums(&dual_sub, &quot)
        }
        Dual(a) => eval(a, g, c, grass).into_iter().map(|x| -x).collect(),
        Sum(a, b) => {
            let mut v = eval(a, g, c, grass);
            v.extend(eval(b, g, c, grass));
            v
        }
        Tensor(a, b) => pairwise_sums(&eval(a, g, c, grass), &eval(b, g, c, grass)),
        Sym(k, a) => {
            let v = eval(a, g, c, grass);
            if *k == 0 {
                return vec![0];
            }
            (0..v.len())
                .combinations_with_replacement(*k)
                .map(|ix| ix.iter().map(|&i| v[i]).sum())
                .collect()
        }
        Wedge(k, a) => {
            let v = eval(a, g, c, grass);
            if *k == 0 {
                return vec![0];
            }
            (0..v.len())
                .combinations(*k)
                .map(|ix| ix.iter().map(|&i| v[i]).sum())
                .collect()
        }
        Det(a) => vec![eval(a, g, c, grass).iter().sum()],
    }
}

fn pairwise_sums(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter()
        .flat_map(|x| b.iter().map(move |y| x + y))
        .collect()
}

fn uses_grassmannian_leaf(e: &BundleExpr) -> bool {
    use BundleExpr::*;
    match e {
        TautSub | TautQuot | Tangent => true,
        Line(_) | Trivial(_) => false,
        Dual(a) | Det(a) | Sym(_, a) | Wedge(_, a) => uses_grassmannian_leaf(a),
        Sum(a, b) | Tensor(a, b) => uses_grassmannian_leaf(a) || uses_grassmannian_leaf(b),
    }
}

/// Splitting type of `e|_C`.
pub fn restrict(e: &BundleExpr, g: &GkmGraph, c: &InvariantCurve) -> Result<SplittingType> {
    rank(e, g)?;
    g.curve(c.id())?;
    let grass = g.grassmannian_data();
    Ok(SplittingType::new(eval(e, g, c, grass)))
}

/// Splitting types over every curve, indexed by curve id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictionTable {
    entries: Vec<SplittingType>,
}

impl RestrictionTable {
    pub fn get(&self, curve: usize) -> Option<&SplittingType> {
        self.entries.get(curve)
    }

    pub fn entries(&self) -> &[SplittingType] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// SHA-256 over the table (entry count, then each entry), as hex.
    pub fn digest(&self) -> String {
        let mut h = Sha256::new();
        h.update((self.entries.len() as u64).to_le_bytes());
        for s in &self.entries {
            h.update((s.rank() as u64).to_le_bytes());
            for a in s.entries() {
                h.update(a.to_le_bytes());
            }
        }
        h.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// Serialises as `{"<curve id>": [a_1, …, a_r], …}` in id order.
impl Serialize for RestrictionTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.entries.len()))?;
        for (id, st) in self.entries.iter().enumerate() {
            m.serialize_entry(&id.to_string(), st)?;
        }
        m.end()
    }
}

pub fn restriction_table(e: &BundleExpr, g: &GkmGraph) -> Result<RestrictionTable> {
    rank(e, g)?;
    let grass = g.grassmannian_data();
    debug_assert!(grass.is_some() || !uses_grassmannian_leaf(e));
    Ok(RestrictionTable {
        entries: g
            .curves()
            .iter()
            .map(|c| SplittingType::new(eval(e, g, c, grass)))
            .collect(),
    })
}

/// Same as [`restriction_table`], evaluating curves on the rayon pool.
pub fn restriction_table_par(e: &BundleExpr, g: &GkmGraph) -> Result<RestrictionTable> {
    rank(e, g)?;
    let grass = g.grassmannian_data();
    Ok(RestrictionTable {
        entries: g
            .curves()
            .par_iter()
            .map(|c| SplittingType::new(eval(e, g, c, grass)))
            .collect(),
    })
}
