//! Combinatorial model of `G/P`: torus-fixed points and invariant curves.
//!
//! Fixed points are the cosets `wW_P`, represented by their minimal-length
//! elements. A coset is identified with the orbit point `w·λ_P`, where
//! `λ_P` is the sum of the fundamental weights of the omitted nodes: its
//! stabiliser in `W` is exactly `W_P`. The invariant curve joining `wP` and
//! `s_α wP` is labelled by the positive root `α`.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{
    generate_positive_roots, weyl_order_from_roots, Root, RootSystem, Weight, WeylElement,
};

/// Default refusal threshold for `|W/W_P|`.
pub const DEFAULT_MAX_COSETS: u128 = 10_000_000;

/// A proper parabolic subgroup `P ⊇ B`, given by the simple roots of its Levi.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Parabolic {
    levi: Vec<bool>,
}

impl Parabolic {
    /// Parabolic whose Levi contains the simple roots with the given
    /// 0-based indices.
    pub fn with_levi(rank: usize, levi: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut mask = vec![false; rank];
        for i in levi {
            if i >= rank {
                return Err(Error::Usage(format!(
                    "Levi node index {i} out of range for rank {rank}"
                )));
            }
            mask[i] = true;
        }
        if mask.iter().all(|&b| b) {
            return Err(Error::Usage(
                "P = G: at least one node must be omitted (G/G is a point)".into(),
            ));
        }
        Ok(Parabolic { levi: mask })
    }

    /// Parabolic obtained by omitting the given nodes, in Bourbaki's
    /// 1-based numbering. Omitting node `d` of `A_{n-1}` gives `Gr(d, n)`.
    pub fn omitting(rank: usize, nodes: &[usize]) -> Result<Self> {
        if let Some(&bad) = nodes.iter().find(|&&d| d == 0 || d > rank) {
            return Err(Error::Usage(format!(
                "omitted node {bad} out of range 1..={rank}"
            )));
        }
        Parabolic::with_levi(rank, (0..rank).filter(|i| !nodes.contains(&(i + 1))))
    }

    /// The Borel subgroup (every node omitted).
    pub fn borel(rank: usize) -> Self {
        Parabolic {
            levi: vec![false; rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.levi.len()
    }

    pub fn in_levi(&self, i: usize) -> bool {
        self.levi[i]
    }

    pub fn levi_nodes(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&i| self.levi[i]).collect()
    }

    /// 0-based indices of the omitted nodes.
    pub fn omitted_nodes(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&i| !self.levi[i]).collect()
    }

    pub fn is_borel(&self) -> bool {
        self.levi.iter().all(|&b| !b)
    }

    /// `λ_P`: the sum of fundamental weights over the omitted nodes.
    pub fn dominant_weight(&self) -> Weight {
        Weight::new(self.levi.iter().map(|&b| i64::from(!b)).collect())
    }

    /// Whether `λ` is a character of `P`, i.e. orthogonal to every Levi coroot.
    pub fn admits(&self, lambda: &Weight) -> bool {
        lambda.rank() == self.rank()
            && lambda
                .coeffs()
                .iter()
                .zip(&self.levi)
                .all(|(&c, &l)| !l || c == 0)
    }

    fn check(&self, rs: &RootSystem) -> Result<()> {
        if self.rank() != rs.rank() {
            return Err(Error::Usage(format!(
                "parabolic of rank {} used with {}",
                self.rank(),
                rs.cartan_type()
            )));
        }
        Ok(())
    }
}

/// `|W/W_P|`, from the orders of `W` and of the Levi's Weyl group.
pub fn coset_count(rs: &RootSystem, p: &Parabolic) -> u128 {
    let levi = p.levi_nodes();
    let sub: Vec<Vec<i64>> = levi
        .iter()
        .map(|&i| levi.iter().map(|&j| rs.cartan_matrix()[i][j]).collect())
        .collect();
    rs.weyl_order() / weyl_order_from_roots(&generate_positive_roots(&sub))
}

/// The minimal-length representative of `wW_P`.
pub fn coset_min_rep(rs: &RootSystem, w: &WeylElement, p: &Parabolic) -> Result<WeylElement> {
    p.check(rs)?;
    let mu = rs.weyl_act(w, &p.dominant_weight())?;
    Ok(min_rep_of_orbit_point(rs, &mu))
}

fn min_rep_of_orbit_point(rs: &RootSystem, mu: &Weight) -> WeylElement {
    let (word, _) = rs.reduce_to_dominant(mu);
    let rho = rs.act_unchecked(&word, &Weight::rho(rs.rank()));
    WeylElement::from_parts(word, rho)
}

/// A torus-fixed point `wP` of `G/P`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPoint {
    id: usize,
    rep: WeylElement,
    weight: Weight,
}

impl FixedPoint {
    pub fn id(&self) -> usize {
        self.id
    }

    /// Minimal-length coset representative.
    pub fn rep(&self) -> &WeylElement {
        &self.rep
    }

    /// `rep·λ_P`, which identifies the coset.
    pub fn orbit_weight(&self) -> &Weight {
        &self.weight
    }

    pub fn length(&self) -> usize {
        self.rep.length()
    }
}

/// A torus-invariant curve `≅ ℙ¹`, stored with its lower endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct InvariantCurve {
    id: usize,
    endpoints: [usize; 2],
    root: usize,
}

impl InvariantCurve {
    pub fn id(&self) -> usize {
        self.id
    }

    pub fn endpoints(&self) -> [usize; 2] {
        self.endpoints
    }

    /// Index of the positive root label in [`RootSystem::positive_roots`].
    pub fn root_index(&self) -> usize {
        self.root
    }

    pub fn other_endpoint(&self, x: usize) -> Option<usize> {
        match self.endpoints {
            [a, b] if a == x => Some(b),
            [a, b] if b == x => Some(a),
            _ => None,
        }
    }
}

/// Fixed points of `G/P`, ordered by (length, canonical word).
pub fn fixed_points(rs: &RootSystem, p: &Parabolic, max_cosets: u128) -> Result<Vec<FixedPoint>> {
    p.check(rs)?;
    let order = coset_count(rs, p);
    if order > max_cosets {
        return Err(Error::CapExceeded {
            order,
            cap: max_cosets,
        });
    }
    let rank = rs.rank();
    let top = p.dominant_weight();
    let mut points = vec![FixedPoint {
        id: 0,
        rep: rs.identity(),
        weight: top.clone(),
    }];
    let mut index: HashMap<Weight, usize> = HashMap::from([(top, 0)]);
    let mut level = 0..1;
    while !level.is_empty() {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for id in level.clone() {
            let mu = &points[id].weight;
            for i in 0..rank {
                if mu.coeffs()[i] <= 0 {
                    continue;
                }
                let mut nu = mu.clone();
                rs.simple_reflect_in_place(nu.coeffs_mut(), i);
                if seen.insert(nu.clone()) {
                    next.push(nu);
                }
            }
        }
        let mut born: Vec<(Vec<usize>, Weight, Weight)> = next
            .into_iter()
            .map(|nu| {
                // leading letter of the lex-least reduced word
                let i = nu
                    .coeffs()
                    .iter()
                    .position(|&c| c < 0)
                    .expect("not dominant");
                let mut parent = nu.clone();
                rs.simple_reflect_in_place(parent.coeffs_mut(), i);
                let parent = &points[index[&parent]];
                let mut word = Vec::with_capacity(parent.rep.length() + 1);
                word.push(i);
                word.extend_from_slice(parent.rep.word());
                let mut rho = parent.rep.rho_image().clone();
                rs.simple_reflect_in_place(rho.coeffs_mut(), i);
                (word, rho, nu)
            })
            .collect();
        born.sort_by(|a, b| a.0.cmp(&b.0));
        let start = points.len();
        for (word, rho, nu) in born {
            let id = points.len();
            index.insert(nu.clone(), id);
            points.push(FixedPoint {
                id,
                rep: WeylElement::from_parts(word, rho),
                weight: nu,
            });
        }
        level = start..points.len();
    }
    debug_assert_eq!(points.len() as u128, order);
    Ok(points)
}

/// The GKM graph of `G/P`: fixed points and invariant curves.
#[derive(Debug, Clone)]
pub struct GkmGraph {
    system: RootSystem,
    parabolic: Parabolic,
    points: Vec<FixedPoint>,
    curves: Vec<InvariantCurve>,
    adjacency: Vec<Vec<usize>>,
    index: HashMap<Weight, usize>,
}

/// Enumerates every invariant curve of `G/P`.
pub fn invariant_curves(rs: &RootSystem, p: &Parabolic, max_cosets: u128) -> Result<GkmGraph> {
    let points = fixed_points(rs, p, max_cosets)?;
    let index: HashMap<Weight, usize> = points.iter().map(|x| (x.weight.clone(), x.id)).collect();
    let mut curves = Vec::new();
    let mut adjacency = vec![Vec::new(); points.len()];
    for x in &points {
        let mu = x.weight.coeffs();
        for k in 0..rs.num_positive_roots() {
            let pairing = rs.pair_index(mu, k);
            if pairing == 0 {
                continue;
            }
            let nu = Weight::new(
                mu.iter()
                    .zip(rs.root_weight(k).coeffs())
                    .map(|(m, a)| m - pairing * a)
                    .collect(),
            );
            let y = index[&nu];
            if y > x.id {
                let id = curves.len();
                curves.push(InvariantCurve {
                    id,
                    endpoints: [x.id, y],
                    root: k,
                });
                adjacency[x.id].push(id);
                adjacency[y].push(id);
            }
        }
    }
    for adj in &mut adjacency {
        adj.sort_unstable();
    }
    Ok(GkmGraph {
        system: rs.clone(),
        parabolic: p.clone(),
        points,
        curves,
        adjacency,
        index,
    })
}

impl GkmGraph {
    /// Enumerates the graph with the default cap.
    pub fn new(rs: &RootSystem, p: &Parabolic) -> Result<Self> {
        invariant_curves(rs, p, DEFAULT_MAX_COSETS)
    }

    /// `Gr(d, n)`, i.e. `A_{n-1}` with node `d` omitted.
    pub fn grassmannian(d: usize, n: usize) -> Result<Self> {
        if !(0 < d && d < n) {
            return Err(Error::Usage(format!("Gr({d},{n}) needs 0 < d < n")));
        }
        let rs = RootSystem::new(crate::rootsys::CartanType::new(
            crate::rootsys::Family::A,
            n - 1,
        )?);
        let p = Parabolic::omitting(n - 1, &[d])?;
        GkmGraph::new(&rs, &p)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.system
    }

    pub fn parabolic(&self) -> &Parabolic {
        &self.parabolic
    }

    pub fn fixed_points(&self) -> &[FixedPoint] {
        &self.points
    }

    pub fn curves(&self) -> &[InvariantCurve] {
        &self.curves
    }

    pub fn num_fixed_points(&self) -> usize {
        self.points.len()
    }

    pub fn num_curves(&self) -> usize {
        self.curves.len()
    }

    /// `dim G/P`, the number of curves through any fixed point.
    pub fn dimension(&self) -> usize {
        self.adjacency.first().map_or(0, Vec::len)
    }

    pub fn fixed_point(&self, id: usize) -> Result<&FixedPoint> {
        self.points.get(id).ok_or_else(|| {
            Error::Usage(format!(
                "unknown fixed point {id} (there are {})",
                self.points.len()
            ))
        })
    }

    pub fn curve(&self, id: usize) -> Result<&InvariantCurve> {
        self.curves.get(id).ok_or_else(|| {
            Error::Usage(format!(
                "unknown curve {id} (there are {})",
                self.curves.len()
            ))
        })
    }

    pub fn curve_root(&self, c: &InvariantCurve) -> &Root {
        &self.system.positive_roots()[c.root]
    }

    /// Curves having `x` as an endpoint, in id order.
    pub fn curves_through(&self, x: usize) -> Result<Vec<&InvariantCurve>> {
        self.fixed_point(x)?;
        Ok(self.adjacency[x].iter().map(|&c| &self.curves[c]).collect())
    }

    /// The fixed point `wP`.
    pub fn fixed_point_of(&self, w: &WeylElement) -> Result<&FixedPoint> {
        let mu = self.system.weyl_act(w, &self.parabolic.dominant_weight())?;
        Ok(&self.points[self.index[&mu]])
    }

    /// `(d, n)` when this is the Grassmannian `Gr(d, n)`.
    pub fn grassmannian_data(&self) -> Option<(usize, usize)> {
        use crate::rootsys::Family;
        let ct = self.system.cartan_type();
        let omitted = self.parabolic.omitted_nodes();
        (ct.family() == Family::A && omitted.len() == 1).then(|| (omitted[0] + 1, ct.rank() + 1))
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.points.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for &c in &self.adjacency[x] {
                let y = self.curves[c].other_endpoint(x).expect("incident");
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen.into_iter().all(|b| b)
    }

    pub fn export(&self) -> GkmExport {
        GkmExport {
            cartan_type: self.system.cartan_type().to_string(),
            omitted: self
                .parabolic
                .omitted_nodes()
                .iter()
                .map(|i| i + 1)
                .collect(),
            nodes: self
                .points
                .iter()
                .map(|x| NodeRecord {
                    id: x.id,
                    word: x.rep.word().iter().map(|i| i + 1).collect(),
                    length: x.length(),
                })
                .collect(),
            edges: self
                .curves
                .iter()
                .map(|c| EdgeRecord {
                    id: c.id,
                    source: c.endpoints[0],
                    target: c.endpoints[1],
                    root: self.curve_root(c).coeffs().to_vec(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.export()).expect("serialisable")
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "graph gkm {{\n  label=\"{} / P, omitted {:?}\";",
            self.system.cartan_type(),
            self.parabolic
                .omitted_nodes()
                .iter()
                .map(|i| i + 1)
                .collect::<Vec<_>>()
        );
        for x in &self.points {
            let word = if x.rep.is_identity() {
                "e".to_string()
            } else {
                x.rep
                    .word()
                    .iter()
                    .map(|i| format!("s{}", i + 1))
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            let _ = writeln!(out, "  {} [label=\"{}: {}\"];", x.id, x.id, word);
        }
        for c in &self.curves {
            let _ = writeln!(
                out,
                "  {} -- {} [label=\"{:?}\"];",
                c.endpoints[0],
                c.endpoints[1],
                self.curve_root(c).coeffs()
            );
        }
        out.push_str("}\n");
        out
    }
}

/// JSON form of a GKM graph. Words use 1-based node labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GkmExport {
    pub cartan_type: String,
    pub omitted: Vec<usize>,
    pub nodes: Vec<NodeRecord>,
    pub edges: Vec<EdgeRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeRecord {
    pub id: usize,
    pub word: Vec<usize>,
    pub length: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub id: usize,
    pub source: usize,
    pub target: usize,
    pub root: Vec<i64>,
}
