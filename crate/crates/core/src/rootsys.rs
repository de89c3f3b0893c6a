//! Simple root systems, weight arithmetic and Weyl group actions.
//!
//! Everything is indexed with Bourbaki's numbering of simple roots. Inside
//! the library node indices are 0-based (`0..rank`); the CLI and the JSON
//! exports print them 1-based.
//!
//! Conventions:
//! * `cartan_matrix[i][j] = ⟨α_i∨, α_j⟩`, so column `j` is the simple root
//!   `α_j` written in the fundamental-weight basis.
//! * A [`Root`] is written in the simple-root basis, a [`Weight`] in the
//!   fundamental-weight basis, so `⟨λ, α_i∨⟩` is just the `i`-th
//!   coordinate of `λ`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Dynkin family of a simple root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// A validated Cartan type such as `A3`, `D4` or `E6`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            let constraint = match family {
                Family::A => "A requires rank >= 1",
                Family::B => "B requires rank >= 2",
                Family::C => "C requires rank >= 2",
                Family::D => "D requires rank >= 4",
                Family::E => "E requires rank 6, 7 or 8",
                Family::F => "F requires rank 4",
                Family::G => "G requires rank 2",
            };
            return Err(Error::Config(format!(
                "{}{rank}: {constraint}",
                family.letter()
            )));
        }
        Ok(CartanType { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.contains(['x', 'X', '×', '+']) {
            return Err(Error::Config(format!(
                "{s}: only simple types are supported, not semisimple products"
            )));
        }
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => {
                return Err(Error::Config(format!(
                    "{s:?}: unknown family (expected one of A, B, C, D, E, F, G)"
                )))
            }
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Config(format!("{s:?}: rank must be a positive integer")))?;
        CartanType::new(family, rank)
    }
}

/// A root in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(Vec<i64>);

impl Root {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Root(coeffs)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }
}

impl Neg for &Root {
    type Output = Root;
    fn neg(self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }
}

/// An integral weight in the fundamental-weight basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Weight(coeffs)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The fundamental weight `ω_{i+1}` (0-based index `i`).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Weight(v)
    }

    /// `ρ`, the sum of the fundamental weights.
    pub fn rho(rank: usize) -> Self {
        Weight(vec![1; rank])
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|c| c * k).collect())
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub(crate) fn coeffs_mut(&mut self) -> &mut [i64] {
        &mut self.0
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        self.scale(-1)
    }
}

/// A Weyl group element.
///
/// The group element is determined by `rho_image = w·ρ`; the stored word is
/// the lexicographically least reduced word, read left to right as
/// `w = s_{word[0]} s_{word[1]} ⋯`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    word: Vec<usize>,
    rho_image: Weight,
}

impl WeylElement {
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn rho_image(&self) -> &Weight {
        &self.rho_image
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub(crate) fn from_parts(word: Vec<usize>, rho_image: Weight) -> Self {
        WeylElement { word, rho_image }
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan: CartanType,
    cartan_matrix: Vec<Vec<i64>>,
    /// `(α_i, α_i)` up to a common factor; the shortest simple root gets 1.
    symmetrizer: Vec<i64>,
    positive_roots: Vec<Root>,
    /// Row `k` holds the coefficients of the coroot of `positive_roots[k]`
    /// on the simple coroots, i.e. `⟨ω_i, β_k∨⟩`.
    coroots: Vec<Vec<i64>>,
    /// Row `k` is `positive_roots[k]` in the fundamental-weight basis.
    roots_as_weights: Vec<Weight>,
    index: HashMap<Vec<i64>, usize>,
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.cartan == other.cartan
    }
}

impl Eq for RootSystem {}

fn cartan_data(ct: CartanType) -> (Vec<Vec<i64>>, Vec<i64>) {
    let n = ct.rank;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match ct.family {
        Family::A | Family::B | Family::C | Family::F | Family::G => {
            for i in 0..n - 1 {
                link(i, i + 1);
            }
        }
        Family::D => {
            for i in 0..n - 2 {
                link(i, i + 1);
            }
            link(n - 3, n - 1);
        }
        Family::E => {
            link(0, 2);
            link(1, 3);
            for i in 2..n - 1 {
                link(i, i + 1);
            }
        }
    }
    let mut sym = vec![1i64; n];
    match ct.family {
        Family::B => {
            a[n - 1][n - 2] = -2;
            sym = vec![2; n];
            sym[n - 1] = 1;
        }
        Family::C => {
            a[n - 2][n - 1] = -2;
            sym[n - 1] = 2;
        }
        Family::F => {
            a[2][1] = -2;
            sym = vec![2, 2, 1, 1];
        }
        Family::G => {
            a[0][1] = -3;
            sym = vec![1, 3];
        }
        _ => {}
    }
    (a, sym)
}

/// `⟨β, α_i∨⟩` for `β` in the simple-root basis.
fn root_pair_simple(cartan: &[Vec<i64>], beta: &[i64], i: usize) -> i64 {
    beta.iter().zip(&cartan[i]).map(|(c, a)| c * a).sum()
}

/// Positive roots of the system with the given Cartan matrix, generated
/// height by height via root strings, ordered by height then
/// lexicographically. Works for reducible matrices too.
pub(crate) fn generate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    use std::collections::{BTreeSet, HashSet};
    let n = cartan.len();
    let mut known: HashSet<Vec<i64>> = HashSet::new();
    let mut all = Vec::new();
    let mut level: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    while !level.is_empty() {
        known.extend(level.iter().cloned());
        let mut next = BTreeSet::new();
        for beta in &level {
            for i in 0..n {
                // α_i-string through β: β - pα_i, ..., β + qα_i with p - q = ⟨β, α_i∨⟩.
                let is_simple_i = beta[i] == 1 && beta.iter().sum::<i64>() == 1;
                if is_simple_i {
                    continue;
                }
                let mut p = 0;
                let mut probe = beta.clone();
                loop {
                    probe[i] -= 1;
                    if known.contains(&probe) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let q = p - root_pair_simple(cartan, beta, i);
                if q > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    next.insert(up);
                }
            }
        }
        let mut sorted = level;
        // descending lex keeps α_i at index i among the height-1 roots
        sorted.sort_by(|a, b| b.cmp(a));
        all.extend(sorted);
        level = next.into_iter().collect();
    }
    all
}

/// `|W|` from the height distribution of the positive roots, via the
/// factorisation `Σ_w t^{ℓ(w)} = Π_{α>0} (1 - t^{ht α + 1}) / (1 - t^{ht α})`
/// evaluated at `t = 1`.
pub(crate) fn weyl_order_from_roots(positive_roots: &[Vec<i64>]) -> u128 {
    let max_height = positive_roots
        .iter()
        .map(|r| r.iter().sum::<i64>() as usize)
        .max()
        .unwrap_or(0);
    let mut count = vec![0i64; max_height + 2];
    for r in positive_roots {
        count[r.iter().sum::<i64>() as usize] += 1;
    }
    // Π_h ((h+1)/h)^{m_h} = Π_k k^{m_{k-1} - m_k}
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for k in 2..=max_height + 1 {
        let e = count[k - 1] - count[k];
        let kk = k as u128;
        for _ in 0..e.abs() {
            if e > 0 {
                num *= kk;
            } else {
                den *= kk;
            }
            let g = gcd(num, den);
            num /= g;
            den /= g;
        }
    }
    debug_assert_eq!(den, 1);
    num / den
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl RootSystem {
    pub fn new(cartan: CartanType) -> Self {
        let (cartan_matrix, symmetrizer) = cartan_data(cartan);
        let n = cartan.rank;
        let positive_roots: Vec<Root> = generate_positive_roots(&cartan_matrix)
            .into_iter()
            .map(Root)
            .collect();
        let coroots = positive_roots
            .iter()
            .map(|r| {
                let c = r.coeffs();
                // (β,β)/2 in the symmetrizer's units
                let norm: i64 = (0..n)
                    .flat_map(|i| (0..n).map(move |j| (i, j)))
                    .map(|(i, j)| c[i] * c[j] * symmetrizer[i] * cartan_matrix[i][j])
                    .sum::<i64>()
                    / 2;
                (0..n)
                    .map(|j| {
                        let v = c[j] * symmetrizer[j];
                        debug_assert_eq!(v % norm, 0);
                        v / norm
                    })
                    .collect()
            })
            .collect();
        let roots_as_weights = positive_roots
            .iter()
            .map(|r| {
                Weight(
                    (0..n)
                        .map(|i| root_pair_simple(&cartan_matrix, r.coeffs(), i))
                        .collect(),
                )
            })
            .collect();
        let index = positive_roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.0.clone(), k))
            .collect();
        RootSystem {
            cartan,
            cartan_matrix,
            symmetrizer,
            positive_roots,
            coroots,
            roots_as_weights,
            index,
        }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan_matrix
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// All roots: the positive roots in order, followed by their negatives
    /// in the same order.
    pub fn roots(&self) -> Vec<Root> {
        self.positive_roots
            .iter()
            .cloned()
            .chain(self.positive_roots.iter().map(|r| -r))
            .collect()
    }

    pub fn simple_root(&self, i: usize) -> Root {
        self.positive_roots[i].clone()
    }

    pub fn highest_root(&self) -> &Root {
        self.positive_roots.last().expect("nonempty")
    }

    /// Coroot of `positive_roots[k]` on the simple coroots.
    pub fn coroot(&self, k: usize) -> &[i64] {
        &self.coroots[k]
    }

    /// `positive_roots[k]` expressed in the fundamental-weight basis.
    pub fn root_weight(&self, k: usize) -> &Weight {
        &self.roots_as_weights[k]
    }

    /// Index of a positive root in [`Self::positive_roots`].
    pub fn positive_root_index(&self, root: &Root) -> Option<usize> {
        self.index.get(root.coeffs()).copied()
    }

    /// Locates a root: `(positive index, is_negative)`.
    fn locate(&self, root: &Root) -> Result<(usize, bool)> {
        if root.coeffs().len() != self.rank() {
            return Err(Error::Usage(format!(
                "root of length {} used with {} (rank {})",
                root.coeffs().len(),
                self.cartan,
                self.rank()
            )));
        }
        if let Some(k) = self.positive_root_index(root) {
            return Ok((k, false));
        }
        if let Some(k) = self.positive_root_index(&-root) {
            return Ok((k, true));
        }
        Err(Error::Usage(format!(
            "{:?} is not a root of {}",
            root.coeffs(),
            self.cartan
        )))
    }

    fn check_weight(&self, lambda: &Weight) -> Result<()> {
        if lambda.rank() != self.rank() {
            return Err(Error::Usage(format!(
                "weight of length {} used with {} (rank {})",
                lambda.rank(),
                self.cartan,
                self.rank()
            )));
        }
        Ok(())
    }

    /// `⟨λ, β_k∨⟩` for the positive root with index `k`; no validation.
    #[inline]
    pub fn pair_index(&self, lambda: &[i64], k: usize) -> i64 {
        lambda
            .iter()
            .zip(&self.coroots[k])
            .map(|(a, b)| a * b)
            .sum()
    }

    /// `⟨λ, α∨⟩`.
    pub fn pair(&self, lambda: &Weight, alpha: &Root) -> Result<i64> {
        self.check_weight(lambda)?;
        let (k, neg) = self.locate(alpha)?;
        let v = self.pair_index(lambda.coeffs(), k);
        Ok(if neg { -v } else { v })
    }

    /// `s_α(λ) = λ - ⟨λ, α∨⟩ α`.
    pub fn reflect(&self, lambda: &Weight, alpha: &Root) -> Result<Weight> {
        self.check_weight(lambda)?;
        let (k, _) = self.locate(alpha)?;
        Ok(self.reflect_index(lambda, k))
    }

    /// Reflection in the positive root with index `k`; no validation.
    pub fn reflect_index(&self, lambda: &Weight, k: usize) -> Weight {
        let p = self.pair_index(lambda.coeffs(), k);
        if p == 0 {
            return lambda.clone();
        }
        Weight(
            lambda
                .0
                .iter()
                .zip(&self.roots_as_weights[k].0)
                .map(|(l, a)| l - p * a)
                .collect(),
        )
    }

    /// In-place simple reflection `s_i` on weight coordinates.
    #[inline]
    pub(crate) fn simple_reflect_in_place(&self, lambda: &mut [i64], i: usize) {
        let li = lambda[i];
        if li != 0 {
            for (k, l) in lambda.iter_mut().enumerate() {
                *l -= li * self.cartan_matrix[k][i];
            }
        }
    }

    pub fn simple_reflect_root(&self, beta: &Root, i: usize) -> Root {
        let p = root_pair_simple(&self.cartan_matrix, beta.coeffs(), i);
        let mut c = beta.0.clone();
        c[i] -= p;
        Root(c)
    }

    fn check_word(&self, word: &[usize]) -> Result<()> {
        if let Some(&bad) = word.iter().find(|&&i| i >= self.rank()) {
            return Err(Error::Usage(format!(
                "simple reflection index {bad} out of range for {}",
                self.cartan
            )));
        }
        Ok(())
    }

    /// Greedy reduction of a weight to the dominant chamber, always
    /// reflecting in the smallest index with a negative coordinate. Returns
    /// the letters used and the dominant weight reached.
    pub(crate) fn reduce_to_dominant(&self, lambda: &Weight) -> (Vec<usize>, Weight) {
        let mut mu = lambda.clone();
        let mut word = Vec::new();
        while let Some(i) = mu.0.iter().position(|&c| c < 0) {
            self.simple_reflect_in_place(&mut mu.0, i);
            word.push(i);
        }
        (word, mu)
    }

    /// The element with the given `w·ρ`, or `None` if the weight is not in
    /// the orbit of `ρ`.
    pub fn element_from_rho_image(&self, rho_image: Weight) -> Option<WeylElement> {
        if rho_image.rank() != self.rank() {
            return None;
        }
        let (word, dominant) = self.reduce_to_dominant(&rho_image);
        (dominant == Weight::rho(self.rank())).then_some(WeylElement { word, rho_image })
    }

    /// Element represented by an arbitrary (not necessarily reduced) word.
    pub fn element(&self, word: &[usize]) -> Result<WeylElement> {
        self.check_word(word)?;
        let mut rho = Weight::rho(self.rank());
        for &i in word.iter().rev() {
            self.simple_reflect_in_place(&mut rho.0, i);
        }
        Ok(self.element_from_rho_image(rho).expect("orbit of rho"))
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement {
            word: Vec::new(),
            rho_image: Weight::rho(self.rank()),
        }
    }

    pub fn simple_reflection(&self, i: usize) -> Result<WeylElement> {
        self.element(&[i])
    }

    pub fn longest_element(&self) -> WeylElement {
        self.element_from_rho_image(-&Weight::rho(self.rank()))
            .expect("-rho is in the orbit of rho")
    }

    pub fn compose(&self, u: &WeylElement, v: &WeylElement) -> WeylElement {
        let mut rho = v.rho_image.clone();
        for &i in u.word.iter().rev() {
            self.simple_reflect_in_place(&mut rho.0, i);
        }
        self.element_from_rho_image(rho).expect("orbit of rho")
    }

    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        let rev: Vec<usize> = w.word.iter().rev().copied().collect();
        self.element(&rev).expect("valid word")
    }

    /// `w·λ`.
    pub fn weyl_act(&self, w: &WeylElement, lambda: &Weight) -> Result<Weight> {
        self.check_weight(lambda)?;
        self.check_word(&w.word)?;
        Ok(self.act_unchecked(&w.word, lambda))
    }

    pub(crate) fn act_unchecked(&self, word: &[usize], lambda: &Weight) -> Weight {
        let mut mu = lambda.clone();
        for &i in word.iter().rev() {
            self.simple_reflect_in_place(&mut mu.0, i);
        }
        mu
    }

    /// `w·β` for a root.
    pub fn weyl_act_root(&self, w: &WeylElement, beta: &Root) -> Result<Root> {
        self.locate(beta)?;
        self.check_word(&w.word)?;
        let mut b = beta.clone();
        for &i in w.word.iter().rev() {
            b = self.simple_reflect_root(&b, i);
        }
        Ok(b)
    }

    /// Signed permutation induced on [`Self::roots`]: entry `r` is the index
    /// of `w·roots[r]`, where indices `>= num_positive_roots()` are the
    /// negative roots.
    pub fn root_permutation(&self, w: &WeylElement) -> Vec<usize> {
        let n = self.num_positive_roots();
        self.roots()
            .iter()
            .map(|r| {
                let img = self.weyl_act_root(w, r).expect("root of this system");
                let (k, neg) = self.locate(&img).expect("image is a root");
                if neg {
                    k + n
                } else {
                    k
                }
            })
            .collect()
    }

    /// Number of positive roots sent to negative roots by `w`.
    pub fn inversion_count(&self, w: &WeylElement) -> usize {
        // β > 0 and w⁻¹β < 0  ⟺  ⟨wρ, β∨⟩ < 0; the count equals ℓ(w⁻¹) = ℓ(w).
        (0..self.num_positive_roots())
            .filter(|&k| self.pair_index(w.rho_image.coeffs(), k) < 0)
            .count()
    }

    /// Order of the Weyl group.
    pub fn weyl_order(&self) -> u128 {
        let roots: Vec<Vec<i64>> = self.positive_roots.iter().map(|r| r.0.clone()).collect();
        weyl_order_from_roots(&roots)
    }
}
