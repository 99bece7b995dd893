//! Root systems of the classical series, weights in fundamental-weight
//! coordinates, and Weyl group elements with their linear and affine actions.
//!
//! Conventions: simple roots and fundamental weights use Bourbaki numbering,
//! and every index visible through the public API is 1-based. Row `i` of the
//! Cartan matrix holds the simple root `α_i` in fundamental-weight
//! coordinates, i.e. `cartan[i][j] = <α_i, α_j^∨>`.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::linalg;
use crate::{Error, Rational, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
        };
        write!(f, "{c}")
    }
}

/// A classical Cartan type such as `C3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LieType {
    series: Series,
    rank: usize,
}

impl LieType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let min = match series {
            Series::A => 1,
            Series::B | Series::C => 2,
            Series::D => 3,
        };
        if rank < min {
            return Err(Error::input(format!(
                "{series}{rank}: rank must be at least {min} for series {series}"
            )));
        }
        Ok(LieType { series, rank })
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Order of the Weyl group.
    pub fn weyl_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |m: u128| (1..=m).product::<u128>();
        match self.series {
            Series::A => fact(n + 1),
            Series::B | Series::C => (1u128 << n) * fact(n),
            Series::D => (1u128 << (n - 1)) * fact(n),
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series, self.rank)
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let series = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Series::A,
            Some('B') => Series::B,
            Some('C') => Series::C,
            Some('D') => Series::D,
            _ => return Err(Error::input(format!("unknown algebra '{s}'"))),
        };
        let rank = chars
            .as_str()
            .parse::<usize>()
            .map_err(|_| Error::input(format!("cannot read a rank from '{s}'")))?;
        LieType::new(series, rank)
    }
}

/// A root written in the basis of simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(Vec<i64>);

impl Root {
    pub fn new(coeffs: Vec<i64>) -> Result<Self> {
        let pos = coeffs.iter().all(|&c| c >= 0);
        let neg = coeffs.iter().all(|&c| c <= 0);
        if coeffs.iter().all(|&c| c == 0) || !(pos || neg) {
            return Err(Error::input(format!("{coeffs:?} is not a signed root vector")));
        }
        Ok(Root(coeffs))
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A weight in fundamental-weight coordinates with exact rational entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(Vec<Rational>);

impl Weight {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        Weight(coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Weight(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![Rational::zero(); rank])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(Rational::is_integer)
    }

    /// All coefficients are non-negative integers.
    pub fn is_dominant_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer() && !c.is_negative())
    }

    /// Integer coordinates, when every coefficient is an integer that fits.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.0
            .iter()
            .map(|c| if c.is_integer() { c.to_integer().to_i64() } else { None })
            .collect()
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, by: &Rational) -> Weight {
        Weight(self.0.iter().map(|a| a * by).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(Rational::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A Weyl group element. Equality and hashing go through the action matrix;
/// the stored word is the lexicographically least reduced word.
#[derive(Debug, Clone)]
pub struct WeylElement {
    word: Vec<usize>,
    action: Vec<Vec<i64>>,
    inversions: Vec<Root>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.action == other.action
    }
}

impl Eq for WeylElement {}

impl std::hash::Hash for WeylElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.action.hash(state);
    }
}

impl WeylElement {
    /// Reduced word, 1-based, read left to right as a composition
    /// (`[1, 2]` is `σ_1 ∘ σ_2`).
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Linear action on fundamental-weight coordinates (column vectors).
    pub fn action(&self) -> &[Vec<i64>] {
        &self.action
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    /// Positive roots `α` with `w⁻¹(α)` negative, in root-system order.
    pub fn inversion_set(&self) -> &[Root] {
        &self.inversions
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// Linear action `λ ↦ w(λ)`.
    pub fn apply(&self, weight: &Weight) -> Weight {
        Weight(
            self.action
                .iter()
                .map(|row| {
                    row.iter()
                        .zip(weight.coeffs())
                        .filter(|(m, _)| **m != 0)
                        .fold(Rational::zero(), |acc, (m, x)| {
                            acc + x * Rational::from_integer((*m).into())
                        })
                })
                .collect(),
        )
    }
}

/// The root datum of a classical simple Lie algebra.
#[derive(Debug, Clone)]
pub struct RootSystem {
    lie_type: LieType,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    // Gram matrix (α_i, α_j) of the simple roots.
    gram: Vec<Vec<i64>>,
    positive_roots: Vec<Root>,
    root_index: HashMap<Vec<i64>, usize>,
    rho: Weight,
    // (Aᵀ)⁻¹ = tinv / tinv_den, mapping ω-coordinates to α-coordinates.
    tinv: Vec<Vec<i64>>,
    tinv_den: i64,
    // (ω_i, ω_j)
    omega_gram: Vec<Vec<Rational>>,
}

fn simple_gram(t: LieType) -> Vec<Vec<i64>> {
    let n = t.rank();
    let mut g = vec![vec![0i64; n]; n];
    for i in 0..n {
        g[i][i] = 2;
    }
    let link = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
        g[i][j] = v;
        g[j][i] = v;
    };
    match t.series() {
        Series::A => {
            for i in 0..n - 1 {
                link(&mut g, i, i + 1, -1);
            }
        }
        Series::B => {
            for i in 0..n - 1 {
                link(&mut g, i, i + 1, -1);
            }
            g[n - 1][n - 1] = 1;
        }
        Series::C => {
            for i in 0..n - 2 {
                link(&mut g, i, i + 1, -1);
            }
            link(&mut g, n - 2, n - 1, -2);
            g[n - 1][n - 1] = 4;
        }
        Series::D => {
            for i in 0..n - 2 {
                link(&mut g, i, i + 1, -1);
            }
            link(&mut g, n - 3, n - 1, -1);
        }
    }
    g
}

impl RootSystem {
    /// Builds the root system of the given type.
    pub fn new(lie_type: LieType) -> Self {
        let n = lie_type.rank();
        let gram = simple_gram(lie_type);
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| 2 * gram[i][j] / gram[j][j]).collect())
            .collect();
        let lcm = gram.iter().enumerate().fold(1i64, |acc, (i, r)| acc.lcm(&r[i]));
        let symmetrizer = (0..n).map(|i| lcm / gram[i][i]).collect();

        let at: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| cartan[j][i]).collect()).collect();
        let inv = linalg::inverse(&linalg::from_ints(&at)).expect("Cartan matrices are invertible");
        let den = inv
            .iter()
            .flatten()
            .fold(1i64, |acc, x| acc.lcm(&x.denom().to_i64().expect("small")));
        let tinv: Vec<Vec<i64>> = inv
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| (x * Rational::from_integer(den.into())).to_integer().to_i64().expect("small"))
                    .collect()
            })
            .collect();
        let omega_gram = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| &inv[j][i] * Rational::new(gram[j][j].into(), 2.into()))
                    .collect()
            })
            .collect();

        let mut rs = RootSystem {
            lie_type,
            cartan,
            symmetrizer,
            gram,
            positive_roots: Vec::new(),
            root_index: HashMap::new(),
            rho: Weight::from_ints(&vec![1; n]),
            tinv,
            tinv_den: den,
            omega_gram,
        };
        rs.positive_roots = rs.generate_positive_roots();
        rs.root_index = rs
            .positive_roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.0.clone(), k))
            .collect();
        rs
    }

    fn generate_positive_roots(&self) -> Vec<Root> {
        let n = self.rank();
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = 1;
                e
            })
            .collect();
        while let Some(r) = queue.pop() {
            if !seen.insert(r.clone()) {
                continue;
            }
            for i in 0..n {
                let s = self.reflect_root_coords(i, &r);
                if s.iter().all(|&c| c >= 0) && !seen.contains(&s) {
                    queue.push(s);
                }
            }
        }
        let mut roots: Vec<Vec<i64>> = seen.into_iter().collect();
        // height, then lexicographically descending so α_1 precedes α_2
        roots.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        roots.into_iter().map(Root).collect()
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// Position of a positive root in [`Self::positive_roots`].
    pub fn root_position(&self, root: &Root) -> Option<usize> {
        self.root_index.get(&root.0).copied()
    }

    /// `⟨β, α_i^∨⟩` for a root-coordinate vector `c` and 0-based `i`.
    fn coroot_pairing_coords(&self, i: usize, c: &[i64]) -> i64 {
        c.iter().zip(&self.cartan).map(|(cj, row)| cj * row[i]).sum()
    }

    /// Simple reflection `s_i` (0-based) on root coordinates.
    pub(crate) fn reflect_root_coords(&self, i: usize, c: &[i64]) -> Vec<i64> {
        let p = self.coroot_pairing_coords(i, c);
        let mut out = c.to_vec();
        out[i] -= p;
        out
    }

    /// Root coordinates to fundamental-weight coordinates.
    pub fn root_to_weight_coords(&self, c: &[i64]) -> Vec<i64> {
        let n = self.rank();
        (0..n)
            .map(|i| (0..n).map(|j| c[j] * self.cartan[j][i]).sum())
            .collect()
    }

    pub fn root_to_weight(&self, root: &Root) -> Weight {
        Weight::from_ints(&self.root_to_weight_coords(&root.0))
    }

    /// Integer ω-coordinates to α-coordinates, when the result is integral.
    pub(crate) fn int_weight_to_root_coords(&self, x: &[i64]) -> Option<Vec<i64>> {
        self.tinv
            .iter()
            .map(|row| {
                let s: i64 = row.iter().zip(x).map(|(a, b)| a * b).sum();
                (s % self.tinv_den == 0).then(|| s / self.tinv_den)
            })
            .collect()
    }

    /// Coordinates `c` with `λ = Σ c_i α_i`.
    pub fn weight_to_root_basis(&self, weight: &Weight) -> Result<Vec<Rational>> {
        self.check_rank(weight)?;
        let den = Rational::from_integer(self.tinv_den.into());
        Ok(self
            .tinv
            .iter()
            .map(|row| {
                row.iter()
                    .zip(weight.coeffs())
                    .fold(Rational::zero(), |acc, (a, x)| acc + x * Rational::from_integer((*a).into()))
                    / &den
            })
            .collect())
    }

    pub(crate) fn check_rank(&self, weight: &Weight) -> Result<()> {
        if weight.rank() != self.rank() {
            return Err(Error::input(format!(
                "weight {weight} has {} coordinates, expected {}",
                weight.rank(),
                self.rank()
            )));
        }
        Ok(())
    }

    /// The invariant form, normalised so that short roots of C have squared
    /// length 2 and long roots of B have squared length 2.
    pub fn inner_product(&self, x: &Weight, y: &Weight) -> Result<Rational> {
        self.check_rank(x)?;
        self.check_rank(y)?;
        let mut acc = Rational::zero();
        for (i, xi) in x.coeffs().iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.coeffs().iter().enumerate() {
                if !yj.is_zero() {
                    acc += xi * yj * &self.omega_gram[i][j];
                }
            }
        }
        Ok(acc)
    }

    /// Squared length of a root under [`Self::inner_product`].
    pub fn root_norm(&self, root: &Root) -> i64 {
        let c = root.coeffs();
        (0..self.rank())
            .map(|i| (0..self.rank()).map(|j| c[i] * self.gram[i][j] * c[j]).sum::<i64>())
            .sum()
    }

    /// `⟨λ, β^∨⟩ = 2(λ, β)/(β, β)`.
    pub fn coroot_pairing(&self, weight: &Weight, root: &Root) -> Rational {
        // (λ, β) = Σ_k c_k(β) λ_k (α_k, α_k)/2
        let num = root
            .coeffs()
            .iter()
            .zip(weight.coeffs())
            .enumerate()
            .fold(Rational::zero(), |acc, (k, (c, x))| {
                acc + x * Rational::from_integer((c * self.gram[k][k]).into())
            });
        num / Rational::from_integer(self.root_norm(root).into())
    }

    pub(crate) fn check_node(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank() {
            return Err(Error::input(format!(
                "node {i} out of range 1..={} for {}",
                self.rank(),
                self.lie_type
            )));
        }
        Ok(())
    }

    pub fn identity(&self) -> WeylElement {
        let n = self.rank();
        WeylElement {
            word: Vec::new(),
            action: (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect(),
            inversions: Vec::new(),
        }
    }

    /// Composes simple reflections `σ_{w[0]} ∘ σ_{w[1]} ∘ …` (1-based).
    pub fn element_from_word(&self, word: &[usize]) -> Result<WeylElement> {
        for &i in word {
            self.check_node(i)?;
        }
        let n = self.rank();
        let mut action = self.identity().action;
        for &i in word {
            // M ← M·s_i, only column i changes: col_i -= M·α_i
            let alpha = &self.cartan[i - 1];
            let m_alpha: Vec<i64> = action
                .iter()
                .map(|row| row.iter().zip(alpha).map(|(a, b)| a * b).sum())
                .collect();
            for k in 0..n {
                action[k][i - 1] -= m_alpha[k];
            }
        }
        // inversion set: β > 0 with w⁻¹β < 0
        let mut inv: Vec<usize> = Vec::new();
        for (k, root) in self.positive_roots.iter().enumerate() {
            let mut c = root.0.clone();
            for &i in word {
                c = self.reflect_root_coords(i - 1, &c);
            }
            if c.iter().any(|&x| x < 0) {
                inv.push(k);
            }
        }
        let inversions: Vec<Root> = inv.iter().map(|&k| self.positive_roots[k].clone()).collect();
        let reduced = self.least_reduced_word(&inversions);
        Ok(WeylElement {
            word: reduced,
            action,
            inversions,
        })
    }

    /// Greedy left-descent peeling; yields the lexicographically least
    /// reduced word.
    fn least_reduced_word(&self, inversions: &[Root]) -> Vec<usize> {
        let n = self.rank();
        let mut cur: Vec<Vec<i64>> = inversions.iter().map(|r| r.0.clone()).collect();
        let mut word = Vec::with_capacity(cur.len());
        while !cur.is_empty() {
            let i = (0..n)
                .find(|&i| cur.iter().any(|c| c.iter().enumerate().all(|(j, &x)| x == i64::from(i == j))))
                .expect("a non-empty inversion set contains a simple root");
            word.push(i + 1);
            cur = cur
                .iter()
                .filter(|c| !(c[i] == 1 && c.iter().sum::<i64>() == 1))
                .map(|c| self.reflect_root_coords(i, c))
                .collect();
        }
        word
    }

    /// Recovers an element from its action matrix by peeling right descents.
    pub(crate) fn element_from_action(&self, action: &[Vec<i64>]) -> Result<WeylElement> {
        let n = self.rank();
        let mut cur = action.to_vec();
        let mut peeled = Vec::new();
        let id = self.identity().action;
        while cur != id {
            if peeled.len() > self.positive_roots.len() {
                return Err(Error::input("matrix is not a Weyl group element"));
            }
            let descent = (0..n).find(|&i| {
                let w_alpha: Vec<i64> = cur
                    .iter()
                    .map(|row| row.iter().zip(&self.cartan[i]).map(|(a, b)| a * b).sum())
                    .collect();
                self.int_weight_to_root_coords(&w_alpha)
                    .is_some_and(|c| c.iter().any(|&x| x < 0))
            });
            let Some(i) = descent else {
                return Err(Error::input("matrix is not a Weyl group element"));
            };
            let alpha = &self.cartan[i];
            let m_alpha: Vec<i64> = cur
                .iter()
                .map(|row| row.iter().zip(alpha).map(|(a, b)| a * b).sum())
                .collect();
            for k in 0..n {
                cur[k][i] -= m_alpha[k];
            }
            peeled.push(i + 1);
        }
        peeled.reverse();
        let w = self.element_from_word(&peeled)?;
        debug_assert_eq!(w.action, action);
        Ok(w)
    }

    /// `w1 ∘ w2`.
    pub fn compose(&self, w1: &WeylElement, w2: &WeylElement) -> WeylElement {
        let word: Vec<usize> = w1.word.iter().chain(&w2.word).copied().collect();
        self.element_from_word(&word).expect("words of valid elements are valid")
    }

    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        let word: Vec<usize> = w.word.iter().rev().copied().collect();
        self.element_from_word(&word).expect("words of valid elements are valid")
    }

    /// `s_β ∘ w` for a positive root `β`.
    pub fn left_reflect(&self, beta: &Root, w: &WeylElement) -> WeylElement {
        let n = self.rank();
        let beta_w = self.root_to_weight_coords(&beta.0);
        let norm = self.root_norm(beta);
        // ⟨ω_l, β^∨⟩ = c_l (α_l, α_l) / (β, β)
        let p: Vec<i64> = (0..n).map(|l| beta.0[l] * self.gram[l][l] / norm).collect();
        let action: Vec<Vec<i64>> = (0..n)
            .map(|k| {
                (0..n)
                    .map(|j| {
                        let pm: i64 = (0..n).map(|l| p[l] * w.action[l][j]).sum();
                        w.action[k][j] - beta_w[k] * pm
                    })
                    .collect()
            })
            .collect();
        self.element_from_action(&action).expect("reflections stay in the Weyl group")
    }

    /// Image of a root under `w`.
    pub fn act_on_root(&self, w: &WeylElement, root: &Root) -> Root {
        let mut c = root.0.clone();
        for &i in w.word.iter().rev() {
            c = self.reflect_root_coords(i - 1, &c);
        }
        Root(c)
    }

    /// The affine action `w·λ = w(λ + ρ) − ρ`.
    pub fn affine_act(&self, w: &WeylElement, weight: &Weight) -> Result<Weight> {
        self.check_rank(weight)?;
        Ok(w.apply(&weight.add(&self.rho)).sub(&self.rho))
    }

    /// Every element of the Weyl group, found as the orbit of ρ.
    pub fn weyl_group(&self, limit: u128) -> Result<Vec<WeylElement>> {
        let order = self.lie_type.weyl_order();
        if order > limit {
            return Err(Error::resource(format!(
                "|W({})| = {order} exceeds the enumeration limit {limit}",
                self.lie_type
            )));
        }
        let n = self.rank();
        let rho: Vec<i64> = vec![1; n];
        let mut seen: HashMap<Vec<i64>, Vec<usize>> = HashMap::new();
        seen.insert(rho.clone(), Vec::new());
        let mut frontier = vec![rho];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for x in &frontier {
                let word = seen[x].clone();
                for i in 0..n {
                    let mut y = x.clone();
                    let xi = x[i];
                    for (k, a) in self.cartan[i].iter().enumerate() {
                        y[k] -= xi * a;
                    }
                    if !seen.contains_key(&y) {
                        let mut w = vec![i + 1];
                        w.extend(&word);
                        seen.insert(y.clone(), w);
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
        let mut words: Vec<Vec<usize>> = seen.into_values().collect();
        words.sort();
        words.iter().map(|w| self.element_from_word(w)).collect()
    }
}

/// Positive rationals and integers from text such as `3`, `-2` or `1/2`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parsed = match s.split_once('/') {
        Some((p, q)) => {
            let p: num_bigint::BigInt = p.trim().parse().map_err(|_| Error::input(format!("bad rational '{s}'")))?;
            let q: num_bigint::BigInt = q.trim().parse().map_err(|_| Error::input(format!("bad rational '{s}'")))?;
            if q.is_zero() {
                return Err(Error::input(format!("zero denominator in '{s}'")));
            }
            Rational::new(p, q)
        }
        None => Rational::from_integer(s.parse().map_err(|_| Error::input(format!("bad rational '{s}'")))?),
    };
    Ok(parsed)
}
