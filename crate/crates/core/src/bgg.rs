//! Assembly of absolute and relative BGG diagrams: one node per irreducible
//! homology component, one edge per Hasse cover, labelled by the weighted
//! order of the corresponding operator.

use std::str::FromStr;
use std::sync::Arc;

use num_traits::{Signed, ToPrimitive};

use crate::kostant::{check_relative_weight, table_from_hasse, HomologyTable};
use crate::lattice::{parse_rational, LieType, Root, RootSystem, Series, Weight, WeylElement};
use crate::parabolic::{hasse_diagram, relative_hasse, HasseDiagram, Parabolic};
use crate::repinfo::{center_character, CenterCharacter, GroupTag};
use crate::{Error, Rational, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BggNode {
    pub degree: usize,
    pub weight: Weight,
    pub dim: u64,
    pub word: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BggEdge {
    pub from: usize,
    pub to: usize,
    pub order: u64,
    pub root: Root,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BggDiagram {
    pub algebra: LieType,
    /// Crossed nodes of the parabolic (of `q` for a relative diagram).
    pub crossed: Vec<usize>,
    /// Crossed nodes of the intermediate parabolic `p`, relative diagrams only.
    pub crossed_inner: Option<Vec<usize>>,
    pub highest_weight: Weight,
    pub nodes: Vec<BggNode>,
    pub edges: Vec<BggEdge>,
    pub integrability: Option<CenterCharacter>,
    pub relative: bool,
    pub contact: bool,
}

impl BggDiagram {
    /// `Σ (-1)^degree · dim` over all nodes.
    pub fn euler_characteristic(&self) -> i128 {
        self.nodes
            .iter()
            .map(|n| if n.degree % 2 == 0 { n.dim as i128 } else { -(n.dim as i128) })
            .sum()
    }

    pub fn nodes_in_degree(&self, k: usize) -> impl Iterator<Item = &BggNode> {
        self.nodes.iter().filter(move |n| n.degree == k)
    }

    pub fn max_degree(&self) -> usize {
        self.nodes.iter().map(|n| n.degree).max().unwrap_or(0)
    }
}

/// Weighted order of the operator along the cover `from → to`: the value of
/// the grading element on `from·λ − to·λ`.
pub fn operator_order(p: &Parabolic, weight: &Weight, from: &WeylElement, to: &WeylElement) -> Result<u64> {
    let rs = p.root_system();
    let covers = to.length() == from.length() + 1
        && rs.positive_roots().iter().any(|b| &rs.left_reflect(b, from) == to);
    if !covers {
        return Err(Error::input(format!(
            "{:?} is not a cover of {:?}",
            to.word(),
            from.word()
        )));
    }
    homogeneity_drop(p, weight, from, to)
}

fn homogeneity_drop(p: &Parabolic, weight: &Weight, from: &WeylElement, to: &WeylElement) -> Result<u64> {
    let rs = p.root_system();
    let drop = rs.affine_act(from, weight)?.sub(&rs.affine_act(to, weight)?);
    let order = p.grading_of_weight(&drop)?;
    if !order.is_integer() || !order.is_positive() {
        return Err(Error::input(format!("homogeneity drop {order} is not a positive integer")));
    }
    order
        .to_integer()
        .to_u64()
        .ok_or_else(|| Error::resource("operator order does not fit in 64 bits"))
}

fn assemble(
    graded_by: &Parabolic,
    hasse: &HasseDiagram,
    table: &HomologyTable,
    weight: &Weight,
) -> Result<(Vec<BggNode>, Vec<BggEdge>)> {
    let mut nodes = Vec::with_capacity(hasse.len());
    let mut cursor = vec![0usize; table.degrees().len()];
    for w in hasse.elements() {
        let k = w.length();
        let entry = &table.degree(k)[cursor[k]];
        cursor[k] += 1;
        nodes.push(BggNode {
            degree: k,
            weight: entry.weight.clone(),
            dim: entry.dim,
            word: entry.word.clone(),
        });
    }
    let mut edges = Vec::with_capacity(hasse.edges().len());
    for e in hasse.edges() {
        let order = homogeneity_drop(graded_by, weight, &hasse.elements()[e.from], &hasse.elements()[e.to])?;
        edges.push(BggEdge {
            from: e.from,
            to: e.to,
            order,
            root: e.root.clone(),
        });
    }
    Ok((nodes, edges))
}

/// The BGG diagram of `V(λ)` over the parabolic `p`.
pub fn build_bgg(p: &Parabolic, weight: &Weight, group: Option<GroupTag>) -> Result<BggDiagram> {
    let rs = p.root_system();
    rs.check_rank(weight)?;
    if !weight.is_dominant_integral() {
        return Err(Error::input(format!("{weight} is not dominant integral")));
    }
    let integrability = group.map(|g| center_character(rs, weight, g)).transpose()?;
    let hasse = hasse_diagram(p);
    let table = table_from_hasse(p, &hasse, weight)?;
    let (nodes, edges) = assemble(p, &hasse, &table, weight)?;
    Ok(BggDiagram {
        algebra: rs.lie_type(),
        crossed: p.crossed().iter().copied().collect(),
        crossed_inner: None,
        highest_weight: weight.clone(),
        nodes,
        edges,
        integrability,
        relative: false,
        contact: p.is_contact_grading(),
    })
}

/// The relative BGG diagram for `p ⊋ q`, with orders measured by the
/// grading of `q`.
pub fn build_relative_bgg(p: &Parabolic, q: &Parabolic, weight: &Weight) -> Result<BggDiagram> {
    let hasse = relative_hasse(p, q)?;
    check_relative_weight(p, weight)?;
    let table = table_from_hasse(q, &hasse, weight)?;
    let (nodes, edges) = assemble(q, &hasse, &table, weight)?;
    Ok(BggDiagram {
        algebra: q.root_system().lie_type(),
        crossed: q.crossed().iter().copied().collect(),
        crossed_inner: Some(p.crossed().iter().copied().collect()),
        highest_weight: weight.clone(),
        nodes,
        edges,
        integrability: None,
        relative: true,
        contact: q.is_contact_grading(),
    })
}

/// The three families of sequences with ready-made inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Preset {
    /// Conformally Fedosov manifolds of dimension `2n`: `C_{n+1}` with node 1
    /// crossed and `λ = kω_1 + Σ a_i ω_i`.
    RicciType { n: usize, k: i64, levi: Vec<i64> },
    /// PCS-structures of para-Kähler type, `dim M = 2n ≥ 6`: `A_{n+1}` with
    /// nodes 1 and n+1 crossed and `λ = kω_1 + a_2ω_2 + … + a_nω_n + ℓω_{n+1}`.
    Bilagrangean { n: usize, k: i64, l: i64, levi: Vec<i64> },
    /// The relative sequence for `A_{n+1}` between the parabolics with node 1
    /// and nodes 1, n+1 crossed; `λ = a_1ω_1 + a_2ω_2 + … + a_nω_n + kω_{n+1}`.
    RelativeParakahler { n: usize, k: i64, a1: Rational, levi: Vec<i64> },
}

/// Inputs assembled from a preset.
#[derive(Debug, Clone)]
pub enum PresetInput {
    Absolute {
        parabolic: Parabolic,
        weight: Weight,
        group: Option<GroupTag>,
    },
    Relative {
        p: Parabolic,
        q: Parabolic,
        weight: Weight,
    },
}

impl PresetInput {
    pub fn build(&self) -> Result<BggDiagram> {
        match self {
            PresetInput::Absolute { parabolic, weight, group } => build_bgg(parabolic, weight, *group),
            PresetInput::Relative { p, q, weight } => build_relative_bgg(p, q, weight),
        }
    }
}

fn padded(levi: &[i64], len: usize) -> Result<Vec<i64>> {
    if levi.len() > len {
        return Err(Error::input(format!(
            "{} Levi coefficients given, at most {len} expected",
            levi.len()
        )));
    }
    if let Some(c) = levi.iter().find(|c| **c < 0) {
        return Err(Error::input(format!("Levi coefficient {c} is negative")));
    }
    let mut out = levi.to_vec();
    out.resize(len, 0);
    Ok(out)
}

fn non_negative(name: &str, v: i64) -> Result<()> {
    if v < 0 {
        return Err(Error::input(format!("{name} = {v} must be non-negative")));
    }
    Ok(())
}

fn algebra(series: Series, rank: usize) -> Result<Arc<RootSystem>> {
    Ok(Arc::new(RootSystem::new(LieType::new(series, rank)?)))
}

impl Preset {
    pub fn inputs(&self) -> Result<PresetInput> {
        match self {
            Preset::RicciType { n, k, levi } => {
                let n = *n;
                if n < 2 {
                    return Err(Error::input("ricci-type needs n >= 2"));
                }
                non_negative("k", *k)?;
                let mut coeffs = vec![*k];
                coeffs.extend(padded(levi, n)?);
                Ok(PresetInput::Absolute {
                    parabolic: Parabolic::new(algebra(Series::C, n + 1)?, &[1])?,
                    weight: Weight::from_ints(&coeffs),
                    group: Some(GroupTag::AdjointC),
                })
            }
            Preset::Bilagrangean { n, k, l, levi } => {
                let n = *n;
                if n < 3 {
                    return Err(Error::input("bilagrangean needs n >= 3 (dimension 2n >= 6)"));
                }
                non_negative("k", *k)?;
                non_negative("l", *l)?;
                let mut coeffs = vec![*k];
                coeffs.extend(padded(levi, n - 1)?);
                coeffs.push(*l);
                // for odd n, PGL(n+2) ≅ SL(n+2) and nothing has to be checked
                let group = (n % 2 == 0).then_some(GroupTag::AdjointAEven);
                Ok(PresetInput::Absolute {
                    parabolic: Parabolic::new(algebra(Series::A, n + 1)?, &[1, n + 1])?,
                    weight: Weight::from_ints(&coeffs),
                    group,
                })
            }
            Preset::RelativeParakahler { n, k, a1, levi } => {
                let n = *n;
                if n < 2 {
                    return Err(Error::input("relative-parakahler needs n >= 2"));
                }
                non_negative("k", *k)?;
                let rs = algebra(Series::A, n + 1)?;
                let mut coeffs = vec![a1.clone()];
                coeffs.extend(padded(levi, n - 1)?.into_iter().map(|c| Rational::from_integer(c.into())));
                coeffs.push(Rational::from_integer((*k).into()));
                Ok(PresetInput::Relative {
                    p: Parabolic::new(rs.clone(), &[1])?,
                    q: Parabolic::new(rs, &[1, n + 1])?,
                    weight: Weight::new(coeffs),
                })
            }
        }
    }
}

impl FromStr for Preset {
    type Err = Error;

    /// `ricci-type:n,k[,a_2,…]`, `bilagrangean:n,k,l[,a_2,…]` or
    /// `relative-parakahler:n,k,a_1[,a_2,…]` (`a_1` may be rational).
    fn from_str(s: &str) -> Result<Self> {
        let (name, params) = s
            .split_once(':')
            .ok_or_else(|| Error::input(format!("preset '{s}' needs parameters after ':'")))?;
        let fields: Vec<&str> = params.split(',').map(str::trim).filter(|f| !f.is_empty()).collect();
        let int = |i: usize| -> Result<i64> {
            let f = fields
                .get(i)
                .ok_or_else(|| Error::input(format!("preset '{s}' is missing parameter {}", i + 1)))?;
            f.parse().map_err(|_| Error::input(format!("'{f}' is not an integer")))
        };
        let ints_from = |i: usize| -> Result<Vec<i64>> { (i..fields.len()).map(int).collect() };
        let size = |v: i64| -> Result<usize> {
            usize::try_from(v).map_err(|_| Error::input(format!("n = {v} must be positive")))
        };
        match name.trim() {
            "ricci-type" => Ok(Preset::RicciType {
                n: size(int(0)?)?,
                k: int(1)?,
                levi: ints_from(2)?,
            }),
            "bilagrangean" => Ok(Preset::Bilagrangean {
                n: size(int(0)?)?,
                k: int(1)?,
                l: int(2)?,
                levi: ints_from(3)?,
            }),
            "relative-parakahler" => {
                let a1 = fields
                    .get(2)
                    .ok_or_else(|| Error::input(format!("preset '{s}' is missing a_1")))?;
                Ok(Preset::RelativeParakahler {
                    n: size(int(0)?)?,
                    k: int(1)?,
                    a1: parse_rational(a1)?,
                    levi: ints_from(3)?,
                })
            }
            other => Err(Error::input(format!("unknown preset '{other}'"))),
        }
    }
}
