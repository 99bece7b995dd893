//! Kostant's theorem: the Levi-module structure of `H_*(p_+, V)` and of the
//! relative groups `H_*(q_+/p_+, V)`, read off from the affine Weyl action.
//!
//! Weights are reported as the affine-action images `w·λ` themselves. When
//! bundles are labelled by negatives of lowest weights this is the same
//! data under a different name.

use num_traits::Signed;

use crate::lattice::Weight;
use crate::parabolic::{hasse_diagram, relative_hasse, HasseDiagram, Parabolic};
use crate::repinfo::levi_dim;
use crate::{Error, Result};

/// One irreducible component of a homology group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyEntry {
    pub weight: Weight,
    pub word: Vec<usize>,
    pub dim: u64,
}

/// Components of the homology, grouped by degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyTable {
    degrees: Vec<Vec<HomologyEntry>>,
}

impl HomologyTable {
    /// Entries in degree `k`, empty if `k` is out of range.
    pub fn degree(&self, k: usize) -> &[HomologyEntry] {
        self.degrees.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn degrees(&self) -> &[Vec<HomologyEntry>] {
        &self.degrees
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, &HomologyEntry)> {
        self.degrees
            .iter()
            .enumerate()
            .flat_map(|(k, es)| es.iter().map(move |e| (k, e)))
    }

    /// `Σ_k (-1)^k dim H_k`.
    pub fn euler_characteristic(&self) -> i128 {
        self.entries()
            .map(|(k, e)| if k % 2 == 0 { e.dim as i128 } else { -(e.dim as i128) })
            .sum()
    }
}

/// Builds a table from a diagram, in the diagram's element order.
pub(crate) fn table_from_hasse(dim_over: &Parabolic, hasse: &HasseDiagram, weight: &Weight) -> Result<HomologyTable> {
    let rs = dim_over.root_system();
    let mut degrees: Vec<Vec<HomologyEntry>> = vec![Vec::new(); hasse.max_length() + 1];
    for w in hasse.elements() {
        let image = rs.affine_act(w, weight)?;
        let dim = levi_dim(dim_over, &image)?;
        degrees[w.length()].push(HomologyEntry {
            weight: image,
            word: w.word().to_vec(),
            dim,
        });
    }
    Ok(HomologyTable { degrees })
}

/// `H_*(p_+, V(λ))` for a dominant integral `λ`.
pub fn homology_weights(p: &Parabolic, weight: &Weight) -> Result<HomologyTable> {
    p.root_system().check_rank(weight)?;
    if !weight.is_dominant_integral() {
        return Err(Error::input(format!("{weight} is not dominant integral")));
    }
    table_from_hasse(p, &hasse_diagram(p), weight)
}

pub(crate) fn check_relative_weight(p: &Parabolic, weight: &Weight) -> Result<()> {
    p.root_system().check_rank(weight)?;
    for (i, c) in weight.coeffs().iter().enumerate() {
        if !p.crossed().contains(&(i + 1)) && (!c.is_integer() || c.is_negative()) {
            return Err(Error::input(format!(
                "coefficient {c} at uncrossed node {} must be a non-negative integer",
                i + 1
            )));
        }
    }
    Ok(())
}

/// `H_*(q_+/p_+, V(λ))`; `λ` may be rational at the crossed nodes of `p`.
pub fn relative_homology_weights(p: &Parabolic, q: &Parabolic, weight: &Weight) -> Result<HomologyTable> {
    let hasse = relative_hasse(p, q)?;
    check_relative_weight(p, weight)?;
    table_from_hasse(q, &hasse, weight)
}
