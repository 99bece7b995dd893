//! Dimensions, weight multiplicities, center characters and kernels of
//! Cartan elements for irreducible representations.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, ToPrimitive, Zero};

use crate::lattice::{RootSystem, Series, Weight};
use crate::parabolic::Parabolic;
use crate::{Error, Rational, Result};

/// Largest representation the multiplicity computation will expand.
pub const FREUDENTHAL_LIMIT: u64 = 100_000;

fn to_dim(x: Rational, what: &str) -> Result<u64> {
    if !x.is_integer() {
        return Err(Error::input(format!("{what} produced the non-integer {x}")));
    }
    x.to_integer()
        .to_u64()
        .ok_or_else(|| Error::resource(format!("{what} {x} does not fit in 64 bits")))
}

/// Weyl dimension formula.
pub fn weyl_dim(rs: &RootSystem, weight: &Weight) -> Result<u64> {
    rs.check_rank(weight)?;
    if !weight.is_dominant_integral() {
        return Err(Error::input(format!("{weight} is not dominant integral")));
    }
    let shifted = weight.add(rs.rho());
    let prod = rs
        .positive_roots()
        .iter()
        .fold(Rational::one(), |acc, a| acc * rs.coroot_pairing(&shifted, a) / rs.coroot_pairing(rs.rho(), a));
    to_dim(prod, "Weyl dimension")
}

/// Dimension of the irreducible Levi representation with highest weight
/// `weight`; coefficients at crossed nodes do not enter.
pub fn levi_dim(p: &Parabolic, weight: &Weight) -> Result<u64> {
    let rs = p.root_system();
    rs.check_rank(weight)?;
    for &i in p.levi_simples() {
        let c = &weight.coeffs()[i - 1];
        if !c.is_integer() || c < &Rational::zero() {
            return Err(Error::input(format!(
                "{weight} is not dominant integral for the Levi factor (node {i})"
            )));
        }
    }
    let shifted = weight.add(rs.rho());
    let prod = p
        .levi_positive_roots()
        .iter()
        .fold(Rational::one(), |acc, a| acc * rs.coroot_pairing(&shifted, a) / rs.coroot_pairing(rs.rho(), a));
    to_dim(prod, "Levi dimension")
}

/// All weights of an irreducible representation with their multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityTable {
    weight_to_mult: BTreeMap<Weight, u64>,
}

impl MultiplicityTable {
    pub fn get(&self, weight: &Weight) -> u64 {
        self.weight_to_mult.get(weight).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &u64)> {
        self.weight_to_mult.iter()
    }

    /// Number of distinct weights.
    pub fn len(&self) -> usize {
        self.weight_to_mult.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weight_to_mult.is_empty()
    }

    /// Sum of all multiplicities, i.e. the dimension.
    pub fn total(&self) -> u64 {
        self.weight_to_mult.values().sum()
    }
}

fn reflect(rs: &RootSystem, i: usize, x: &[i64]) -> Vec<i64> {
    let xi = x[i];
    x.iter().zip(&rs.cartan()[i]).map(|(a, b)| a - xi * b).collect()
}

fn to_dominant(rs: &RootSystem, x: &[i64]) -> Vec<i64> {
    let mut y = x.to_vec();
    while let Some(i) = y.iter().position(|&c| c < 0) {
        y = reflect(rs, i, &y);
    }
    y
}

fn orbit(rs: &RootSystem, x: &[i64]) -> Vec<Vec<i64>> {
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    seen.insert(x.to_vec());
    let mut frontier = vec![x.to_vec()];
    while let Some(y) = frontier.pop() {
        for i in 0..rs.rank() {
            let z = reflect(rs, i, &y);
            if seen.insert(z.clone()) {
                frontier.push(z);
            }
        }
    }
    seen.into_iter().collect()
}

/// Freudenthal's recursion with the invariant form multiplied by `scale`.
pub fn freudenthal_scaled(rs: &RootSystem, weight: &Weight, scale: &Rational) -> Result<MultiplicityTable> {
    let dim = weyl_dim(rs, weight)?;
    if dim > FREUDENTHAL_LIMIT {
        return Err(Error::resource(format!(
            "representation of dimension {dim} exceeds the limit {FREUDENTHAL_LIMIT}"
        )));
    }
    let top = weight.to_ints().expect("dominant integral");
    let roots: Vec<Vec<i64>> = rs
        .positive_roots()
        .iter()
        .map(|r| rs.root_to_weight_coords(r.coeffs()))
        .collect();
    let form = |x: &[i64], y: &[i64]| -> Rational {
        rs.inner_product(&Weight::from_ints(x), &Weight::from_ints(y)).expect("ranks agree") * scale
    };

    // dominant weights below the highest weight
    let mut dominant: HashSet<Vec<i64>> = HashSet::new();
    dominant.insert(top.clone());
    let mut stack = vec![top.clone()];
    while let Some(x) = stack.pop() {
        for a in &roots {
            let y: Vec<i64> = x.iter().zip(a).map(|(p, q)| p - q).collect();
            if y.iter().all(|&c| c >= 0) && dominant.insert(y.clone()) {
                stack.push(y);
            }
        }
    }
    let depth = |x: &[i64]| -> i64 {
        let d: Vec<i64> = top.iter().zip(x).map(|(p, q)| p - q).collect();
        rs.int_weight_to_root_coords(&d).expect("root lattice").iter().sum()
    };
    let mut order: Vec<Vec<i64>> = dominant.into_iter().collect();
    order.sort_by(|a, b| depth(a).cmp(&depth(b)).then_with(|| b.cmp(a)));

    let rho = vec![1i64; rs.rank()];
    let shift = |x: &[i64]| -> Vec<i64> { x.iter().zip(&rho).map(|(p, q)| p + q).collect() };
    let top_norm = {
        let s = shift(&top);
        form(&s, &s)
    };
    let mut mults: HashMap<Vec<i64>, u64> = HashMap::new();
    mults.insert(top.clone(), 1);
    for mu in order.iter().skip(1) {
        let mut sum = Rational::zero();
        for a in &roots {
            let mut j = 1;
            loop {
                let nu: Vec<i64> = mu.iter().zip(a).map(|(p, q)| p + j * q).collect();
                let m = mults.get(&to_dominant(rs, &nu)).copied().unwrap_or(0);
                if m == 0 {
                    break;
                }
                sum += form(&nu, a) * Rational::from_integer(m.into());
                j += 1;
            }
        }
        let s = shift(mu);
        let den = &top_norm - form(&s, &s);
        let m = to_dim(Rational::from_integer(2.into()) * sum / den, "Freudenthal multiplicity")?;
        mults.insert(mu.clone(), m);
    }

    let mut weight_to_mult = BTreeMap::new();
    for (mu, m) in &mults {
        if *m == 0 {
            continue;
        }
        for x in orbit(rs, mu) {
            weight_to_mult.insert(Weight::from_ints(&x), *m);
        }
    }
    Ok(MultiplicityTable { weight_to_mult })
}

/// Weight multiplicities of the irreducible representation of highest
/// weight `weight`.
pub fn freudenthal(rs: &RootSystem, weight: &Weight) -> Result<MultiplicityTable> {
    freudenthal_scaled(rs, weight, &Rational::one())
}

/// A Cartan element, given by its values on the fundamental weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanElement {
    pairing: Vec<Rational>,
}

impl CartanElement {
    pub fn new(pairing: Vec<Rational>) -> Self {
        CartanElement { pairing }
    }

    pub fn pairing(&self) -> &[Rational] {
        &self.pairing
    }

    pub fn value(&self, weight: &Weight) -> Rational {
        self.pairing.iter().zip(weight.coeffs()).map(|(a, b)| a * b).sum()
    }
}

/// Dimension of `{v : X·v = 0}`.
pub fn kernel_dim(rs: &RootSystem, weight: &Weight, x: &CartanElement) -> Result<u64> {
    if x.pairing.len() != rs.rank() {
        return Err(Error::input(format!(
            "Cartan element has {} coordinates, expected {}",
            x.pairing.len(),
            rs.rank()
        )));
    }
    let table = freudenthal(rs, weight)?;
    Ok(table.iter().filter(|(mu, _)| x.value(mu).is_zero()).map(|(_, m)| m).sum())
}

/// Which central quotient a representation has to descend to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupTag {
    /// `PSp(2n+2)`: the center `±1` must act trivially.
    AdjointC,
    /// `PGL(n+2) ≅ PSL(n+2)` for even `n`.
    AdjointAEven,
    /// The center `Z_m` of `SU(p+1, q+1)`, `m = p+q+2`.
    SuCenter(u64),
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupTag::AdjointC => write!(f, "adjoint-C"),
            GroupTag::AdjointAEven => write!(f, "adjoint-A-even"),
            GroupTag::SuCenter(m) => write!(f, "su-center:{m}"),
        }
    }
}

impl FromStr for GroupTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "adjoint-C" => Ok(GroupTag::AdjointC),
            "adjoint-A-even" => Ok(GroupTag::AdjointAEven),
            other => {
                let m = other
                    .strip_prefix("su-center:")
                    .or_else(|| other.strip_prefix("su-center(").and_then(|r| r.strip_suffix(')')))
                    .and_then(|m| m.parse::<u64>().ok())
                    .ok_or_else(|| Error::input(format!("unknown group '{s}'")))?;
                Ok(GroupTag::SuCenter(m))
            }
        }
    }
}

/// Residue of the central character and whether it is trivial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CenterCharacter {
    pub group: GroupTag,
    pub residue: u64,
    pub integrable: bool,
}

/// Action of the center on the representation of highest weight `weight`.
pub fn center_character(rs: &RootSystem, weight: &Weight, group: GroupTag) -> Result<CenterCharacter> {
    rs.check_rank(weight)?;
    let a = weight
        .to_ints()
        .ok_or_else(|| Error::input(format!("{weight} is not integral")))?;
    let t = rs.lie_type();
    let odd_sum = || a.iter().step_by(2).sum::<i64>().rem_euclid(2) as u64;
    let residue = match group {
        GroupTag::AdjointC => {
            if t.series() != Series::C {
                return Err(Error::input(format!("adjoint-C does not apply to {t}")));
            }
            odd_sum()
        }
        GroupTag::AdjointAEven => {
            if t.series() != Series::A || t.rank() % 2 == 0 {
                return Err(Error::input(format!(
                    "adjoint-A-even needs A_(n+1) with n even, got {t}"
                )));
            }
            odd_sum()
        }
        GroupTag::SuCenter(m) => {
            if t.series() != Series::A || m != t.rank() as u64 + 1 {
                return Err(Error::input(format!("su-center:{m} does not apply to {t}")));
            }
            let s: i64 = a.iter().enumerate().map(|(i, c)| (i as i64 + 1) * c).sum();
            s.rem_euclid(m as i64) as u64
        }
    };
    Ok(CenterCharacter {
        group,
        residue,
        integrable: residue == 0,
    })
}

/// Highest weight of the Cartan product.
pub fn cartan_product(lambda: &Weight, mu: &Weight) -> Result<Weight> {
    if lambda.rank() != mu.rank() {
        return Err(Error::input("Cartan product of weights of different rank"));
    }
    Ok(lambda.add(mu))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    fn rs(t: &str) -> RootSystem {
        RootSystem::new(t.parse().unwrap())
    }

    fn w(x: &[i64]) -> Weight {
        Weight::from_ints(x)
    }

    #[test]
    fn weyl_dim_examples() {
        assert_eq!(weyl_dim(&rs("A1"), &w(&[4])).unwrap(), 5);
        assert_eq!(weyl_dim(&rs("A2"), &w(&[1, 1])).unwrap(), 8);
        assert_eq!(weyl_dim(&rs("C3"), &w(&[1, 0, 0])).unwrap(), 6);
        assert_eq!(weyl_dim(&rs("B3"), &w(&[0, 0, 1])).unwrap(), 8);
        assert_eq!(weyl_dim(&rs("D4"), &w(&[0, 1, 0, 0])).unwrap(), 28);
        assert!(weyl_dim(&rs("A2"), &w(&[-1, 0])).is_err());
    }

    #[test]
    fn levi_dim_examples() {
        let p = Parabolic::new(Arc::new(rs("A3")), &[1, 3]).unwrap();
        assert_eq!(levi_dim(&p, &w(&[0, 0, 0])).unwrap(), 1);
        assert_eq!(levi_dim(&p, &w(&[0, 4, 0])).unwrap(), 5);
        assert_eq!(levi_dim(&p, &w(&[-7, 4, 3])).unwrap(), 5);
        assert!(levi_dim(&p, &w(&[0, -1, 0])).is_err());
    }

    #[test]
    fn freudenthal_examples() {
        let t = freudenthal(&rs("A2"), &w(&[1, 1])).unwrap();
        assert_eq!(t.get(&w(&[0, 0])), 2);
        assert_eq!(t.total(), 8);
        let t = freudenthal(&rs("A1"), &w(&[2])).unwrap();
        let got: Vec<(Weight, u64)> = t.iter().map(|(k, v)| (k.clone(), *v)).collect();
        assert_eq!(got, vec![(w(&[-2]), 1), (w(&[0]), 1), (w(&[2]), 1)]);
        let t = freudenthal(&rs("C2"), &w(&[0, 1])).unwrap();
        assert_eq!(t.total(), 5);
        assert_eq!(t.get(&w(&[0, 0])), 1);
    }

    #[test]
    fn freudenthal_guard() {
        assert!(matches!(freudenthal(&rs("A3"), &w(&[20, 20, 20])), Err(Error::Resource(_))));
    }

    #[test]
    fn kernel_examples() {
        let zero = CartanElement::new(vec![Rational::zero(); 2]);
        assert_eq!(kernel_dim(&rs("A2"), &w(&[2, 1]), &zero).unwrap(), 15);
        let x = CartanElement::new(vec![Rational::one()]);
        assert_eq!(kernel_dim(&rs("A1"), &w(&[2]), &x).unwrap(), 1);
        // The eight adjoint weights of A2 in ω-coordinates are ±(2,-1),
        // ±(-1,2), ±(1,1) and (0,0) twice; X(μ) = μ_1 - μ_2 vanishes on
        // ±(1,1) and on the zero weight.
        let x = CartanElement::new(vec![Rational::one(), -Rational::one()]);
        assert_eq!(kernel_dim(&rs("A2"), &w(&[1, 1]), &x).unwrap(), 4);
    }

    #[test]
    fn center_characters() {
        let c3 = rs("C3");
        let r = center_character(&c3, &w(&[2, 1, 0]), GroupTag::AdjointC).unwrap();
        assert_eq!((r.residue, r.integrable), (0, true));
        let r = center_character(&c3, &w(&[1, 0, 0]), GroupTag::AdjointC).unwrap();
        assert_eq!((r.residue, r.integrable), (1, false));
        assert!(center_character(&c3, &w(&[1, 0, 0]), GroupTag::AdjointAEven).is_err());
        let a3 = rs("A3");
        assert!(center_character(&a3, &w(&[0, 0, 0]), GroupTag::AdjointAEven).unwrap().integrable);
        assert!(center_character(&rs("A4"), &w(&[0; 4]), GroupTag::AdjointAEven).is_err());
        let r = center_character(&a3, &w(&[1, 0, 1]), GroupTag::SuCenter(4)).unwrap();
        assert_eq!(r.residue, 0);
        let r = center_character(&a3, &w(&[1, 0, 0]), GroupTag::SuCenter(4)).unwrap();
        assert_eq!(r.residue, 1);
        assert!(center_character(&a3, &w(&[1, 0, 0]), GroupTag::SuCenter(5)).is_err());
    }

    #[test]
    fn group_tag_parsing() {
        assert_eq!("adjoint-C".parse::<GroupTag>().unwrap(), GroupTag::AdjointC);
        assert_eq!("su-center:5".parse::<GroupTag>().unwrap(), GroupTag::SuCenter(5));
        assert_eq!("su-center(5)".parse::<GroupTag>().unwrap(), GroupTag::SuCenter(5));
        assert!("adjoint-B".parse::<GroupTag>().is_err());
    }

    #[test]
    fn cartan_product_adds() {
        let l = w(&[1, 2, 3]);
        assert_eq!(cartan_product(&l, &w(&[0, 0, 0])).unwrap(), l);
        assert_eq!(cartan_product(&l, &w(&[1, 0, 1])).unwrap(), cartan_product(&w(&[1, 0, 1]), &l).unwrap());
        assert!(cartan_product(&l, &w(&[1])).is_err());
    }
}
