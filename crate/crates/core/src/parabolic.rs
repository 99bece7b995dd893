//! Parabolic subalgebras given by crossed Dynkin nodes, their gradings, and
//! the Hasse diagrams `W^p` and `W^q_p`.
//!
//! Membership in `W^p` is `inversion_set(w) ⊆ Δ(p_+)`. Edges are Bruhat
//! covers written as left multiplication, `to = s_β ∘ from`.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::Arc;

use crate::lattice::{Root, RootSystem, Weight, WeylElement};
use crate::{Error, Rational, Result};

/// Upper bound on `|W|` accepted by the brute-force enumerations.
pub const BRUTE_FORCE_LIMIT: u128 = 1_000_000;

#[derive(Debug, Clone)]
pub struct Parabolic {
    rs: Arc<RootSystem>,
    crossed: BTreeSet<usize>,
    p_plus: Vec<bool>,
    levi_simples: Vec<usize>,
}

impl Parabolic {
    /// Builds the parabolic with the given crossed nodes (1-based).
    pub fn new(rs: Arc<RootSystem>, crossed: &[usize]) -> Result<Self> {
        if crossed.is_empty() {
            return Err(Error::input("at least one node must be crossed"));
        }
        for &i in crossed {
            rs.check_node(i)?;
        }
        let crossed: BTreeSet<usize> = crossed.iter().copied().collect();
        let p_plus = rs
            .positive_roots()
            .iter()
            .map(|r| crossed.iter().any(|&i| r.coeffs()[i - 1] > 0))
            .collect();
        let levi_simples = (1..=rs.rank()).filter(|i| !crossed.contains(i)).collect();
        Ok(Parabolic {
            rs,
            crossed,
            p_plus,
            levi_simples,
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn root_system_arc(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn crossed(&self) -> &BTreeSet<usize> {
        &self.crossed
    }

    pub fn levi_simples(&self) -> &[usize] {
        &self.levi_simples
    }

    /// Positive roots of the nilradical, in root-system order.
    pub fn p_plus_roots(&self) -> Vec<Root> {
        self.rs
            .positive_roots()
            .iter()
            .zip(&self.p_plus)
            .filter(|(_, &inside)| inside)
            .map(|(r, _)| r.clone())
            .collect()
    }

    pub fn contains_in_p_plus(&self, root: &Root) -> bool {
        self.rs.root_position(root).is_some_and(|k| self.p_plus[k])
    }

    /// Positive roots of the Levi factor.
    pub fn levi_positive_roots(&self) -> Vec<Root> {
        self.rs
            .positive_roots()
            .iter()
            .zip(&self.p_plus)
            .filter(|(_, &inside)| !inside)
            .map(|(r, _)| r.clone())
            .collect()
    }

    /// Value of the grading element on a root.
    pub fn grading(&self, root: &Root) -> i64 {
        self.crossed.iter().map(|&i| root.coeffs()[i - 1]).sum()
    }

    /// Value of the grading element on a weight, through its root-basis
    /// coordinates.
    pub fn grading_of_weight(&self, weight: &Weight) -> Result<Rational> {
        let c = self.rs.weight_to_root_basis(weight)?;
        Ok(self.crossed.iter().map(|&i| c[i - 1].clone()).sum())
    }

    /// True for a contact grading: depth two with a one-dimensional top piece.
    pub fn is_contact_grading(&self) -> bool {
        let grades: Vec<i64> = self.rs.positive_roots().iter().map(|r| self.grading(r)).collect();
        grades.iter().max() == Some(&2) && grades.iter().filter(|&&g| g == 2).count() == 1
    }

    /// Whether the inversion set of `w` lies in `Δ(p_+)`.
    pub fn admits(&self, w: &WeylElement) -> bool {
        w.inversion_set().iter().all(|r| self.contains_in_p_plus(r))
    }

    /// Elements of the Weyl group of the Levi factor.
    pub fn levi_weyl_group(&self) -> Vec<WeylElement> {
        subgroup(&self.rs, &self.levi_simples)
    }

    fn same_algebra(&self, other: &Parabolic) -> bool {
        self.rs.lie_type() == other.rs.lie_type()
    }
}

/// One cover relation of a Hasse diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HasseEdge {
    pub from: usize,
    pub to: usize,
    pub root: Root,
}

/// A graded set of coset representatives with its cover edges. Elements
/// are sorted by length and then by reduced word.
#[derive(Debug, Clone)]
pub struct HasseDiagram {
    elements: Vec<WeylElement>,
    edges: Vec<HasseEdge>,
}

impl HasseDiagram {
    fn from_parts(elements: Vec<WeylElement>, edges: Vec<(WeylElement, WeylElement, Root)>) -> Self {
        let mut elements = elements;
        elements.sort_by(|a, b| a.length().cmp(&b.length()).then_with(|| a.word().cmp(b.word())));
        let index: HashMap<&WeylElement, usize> = elements.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let mut edges: Vec<HasseEdge> = edges
            .into_iter()
            .map(|(f, t, root)| HasseEdge {
                from: index[&f],
                to: index[&t],
                root,
            })
            .collect();
        edges.sort();
        edges.dedup();
        HasseDiagram { elements, edges }
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn edges(&self) -> &[HasseEdge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn max_length(&self) -> usize {
        self.elements.last().map_or(0, WeylElement::length)
    }

    /// Number of elements of each length `0..=max_length`.
    pub fn length_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.max_length() + 1];
        for w in &self.elements {
            counts[w.length()] += 1;
        }
        counts
    }

    /// One element per length and consecutive lengths joined by one edge.
    pub fn is_chain(&self) -> bool {
        self.length_counts().iter().all(|&c| c == 1)
            && self.edges.len() + 1 == self.elements.len()
            && self.edges.iter().all(|e| e.to == e.from + 1)
    }

    pub fn position(&self, w: &WeylElement) -> Option<usize> {
        self.elements.iter().position(|x| x == w)
    }

    pub fn action_set(&self) -> HashSet<Vec<Vec<i64>>> {
        self.elements.iter().map(|w| w.action().to_vec()).collect()
    }
}

/// The subgroup generated by the simple reflections at `nodes`.
fn subgroup(rs: &RootSystem, nodes: &[usize]) -> Vec<WeylElement> {
    let mut seen: HashSet<WeylElement> = HashSet::new();
    let mut frontier = vec![rs.identity()];
    seen.insert(rs.identity());
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in &frontier {
            for &i in nodes {
                let mut word = vec![i];
                word.extend_from_slice(w.word());
                let x = rs.element_from_word(&word).expect("valid nodes");
                if seen.insert(x.clone()) {
                    next.push(x);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<WeylElement> = seen.into_iter().collect();
    out.sort_by(|a, b| a.length().cmp(&b.length()).then_with(|| a.word().cmp(b.word())));
    out
}

/// Breadth-first search over covers `w ↦ s_β ∘ w` with `β` drawn from
/// `reflections`, keeping elements accepted by `admits`.
fn cover_search(rs: &RootSystem, reflections: &[Root], admits: impl Fn(&WeylElement) -> bool) -> HasseDiagram {
    let mut elements = vec![rs.identity()];
    let mut seen: HashSet<WeylElement> = elements.iter().cloned().collect();
    let mut edges = Vec::new();
    let mut layer = elements.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for w in &layer {
            for beta in reflections {
                let x = rs.left_reflect(beta, w);
                if x.length() != w.length() + 1 || !admits(&x) {
                    continue;
                }
                edges.push((w.clone(), x.clone(), beta.clone()));
                if seen.insert(x.clone()) {
                    next.push(x);
                }
            }
        }
        elements.extend(next.iter().cloned());
        layer = next;
    }
    HasseDiagram::from_parts(elements, edges)
}

/// The Hasse diagram `W^p`.
pub fn hasse_diagram(p: &Parabolic) -> HasseDiagram {
    cover_search(&p.rs, p.rs.positive_roots(), |w| p.admits(w))
}

/// Identifies `u` as a reflection `s_β` from its action matrix alone:
/// `u ≠ 1`, `u² = 1` and `1 − u` of rank one with image spanned by a root.
fn reflection_root(rs: &RootSystem, u: &WeylElement) -> Option<Root> {
    let n = rs.rank();
    let m = u.action();
    let sq: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| m[i][k] * m[k][j]).sum()).collect())
        .collect();
    if u.is_identity() || sq != rs.identity().action() {
        return None;
    }
    let diff: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j) - m[i][j]).collect())
        .collect();
    let rank = crate::linalg::rank(&crate::linalg::from_ints(&diff));
    if rank != 1 {
        return None;
    }
    let col: Vec<i64> = (0..n)
        .map(|j| (0..n).map(|i| diff[i][j]).collect::<Vec<i64>>())
        .find(|c| c.iter().any(|&x| x != 0))?;
    // the column is a nonzero multiple of β
    let k = col.iter().position(|&x| x != 0)?;
    rs.positive_roots()
        .iter()
        .find(|r| {
            let x = rs.root_to_weight_coords(r.coeffs());
            (0..n).all(|i| x[i] * col[k] == col[i] * x[k])
        })
        .cloned()
}

fn brute_force_from(rs: &RootSystem, candidates: Vec<WeylElement>) -> HasseDiagram {
    let mut edges = Vec::new();
    for from in &candidates {
        let from_inv = rs.inverse(from);
        for to in candidates.iter().filter(|t| t.length() == from.length() + 1) {
            let u = rs.compose(to, &from_inv);
            if let Some(beta) = reflection_root(rs, &u) {
                edges.push((from.clone(), to.clone(), beta));
            }
        }
    }
    HasseDiagram::from_parts(candidates, edges)
}

/// `W^p` obtained by filtering the whole Weyl group.
pub fn brute_force_hasse(p: &Parabolic) -> Result<HasseDiagram> {
    let group = p.rs.weyl_group(BRUTE_FORCE_LIMIT)?;
    let candidates = group.into_iter().filter(|w| p.admits(w)).collect();
    Ok(brute_force_from(&p.rs, candidates))
}

fn check_nested(p: &Parabolic, q: &Parabolic) -> Result<()> {
    if !p.same_algebra(q) {
        return Err(Error::input(format!(
            "parabolics live in different algebras ({} vs {})",
            p.rs.lie_type(),
            q.rs.lie_type()
        )));
    }
    if !(p.crossed.is_subset(&q.crossed) && p.crossed.len() < q.crossed.len()) {
        return Err(Error::input(format!(
            "crossed nodes {:?} must be a proper subset of {:?}",
            p.crossed, q.crossed
        )));
    }
    Ok(())
}

/// The relative Hasse diagram `W^q_p` for `p.crossed ⊊ q.crossed`,
/// realised inside the Weyl group of the Levi factor of `p`.
pub fn relative_hasse(p: &Parabolic, q: &Parabolic) -> Result<HasseDiagram> {
    check_nested(p, q)?;
    let reflections = p.levi_positive_roots();
    Ok(cover_search(&p.rs, &reflections, |w| q.admits(w)))
}

/// `W^q_p` obtained by filtering the Levi Weyl group of `p`.
pub fn brute_force_relative_hasse(p: &Parabolic, q: &Parabolic) -> Result<HasseDiagram> {
    check_nested(p, q)?;
    let candidates = p.levi_weyl_group().into_iter().filter(|w| q.admits(w)).collect();
    Ok(brute_force_from(&p.rs, candidates))
}
