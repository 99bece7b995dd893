//! Cohomology of descended BGG complexes from the long exact sequence
//!
//! ```text
//! … → H^k(K) → H^k(A) → H^{k-1}(C) → H^{k+1}(K) → …
//! ```
//!
//! with `H^k(K) ≅ H^k(C) ≅ H^k(M) ⊗ W_1` and the connecting map given by
//! cup product with `[ω]`. Only dimensions enter: Betti numbers, the ranks
//! of `∪[ω]` and `dim W_1`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::linalg::{self, Matrix};
use crate::{Error, Rational, Result};

/// Topological input for the descended-cohomology computation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyProfile {
    pub dim_m: usize,
    pub betti: Vec<u64>,
    pub lefschetz_ranks: Vec<u64>,
    pub w1: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct ProfileDocument {
    #[serde(rename = "dim_M")]
    dim_m: usize,
    betti: Vec<u64>,
    #[serde(default)]
    lefschetz_ranks: Vec<u64>,
    w1: u64,
}

impl CohomologyProfile {
    pub fn new(dim_m: usize, betti: Vec<u64>, lefschetz_ranks: Vec<u64>, w1: u64) -> Result<Self> {
        if dim_m == 0 || dim_m % 2 != 0 {
            return Err(Error::input(format!("dim_M = {dim_m} must be even and positive")));
        }
        if betti.len() > dim_m + 1 {
            return Err(Error::input(format!(
                "{} Betti numbers given for a manifold of dimension {dim_m}",
                betti.len()
            )));
        }
        if lefschetz_ranks.len() > dim_m - 1 {
            return Err(Error::input(format!(
                "{} Lefschetz ranks given, at most {} allowed",
                lefschetz_ranks.len(),
                dim_m - 1
            )));
        }
        let profile = CohomologyProfile {
            dim_m,
            betti,
            lefschetz_ranks,
            w1,
        };
        for (j, &r) in profile.lefschetz_ranks.iter().enumerate() {
            let bound = profile.betti_at(j as i64).min(profile.betti_at(j as i64 + 2));
            if r > bound {
                return Err(Error::input(format!(
                    "rank r_{j} = {r} exceeds min(b_{j}, b_{}) = {bound}",
                    j + 2
                )));
            }
        }
        Ok(profile)
    }

    /// Parses `{"dim_M": 2n, "betti": [...], "lefschetz_ranks": [...], "w1": d}`;
    /// missing ranks default to zero.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: ProfileDocument =
            serde_json::from_str(text).map_err(|e| Error::input(format!("bad profile document: {e}")))?;
        CohomologyProfile::new(doc.dim_m, doc.betti, doc.lefschetz_ranks, doc.w1)
    }

    /// `n` with `dim M = 2n`.
    pub fn half_dim(&self) -> usize {
        self.dim_m / 2
    }

    pub fn betti_at(&self, k: i64) -> u64 {
        usize::try_from(k).ok().and_then(|k| self.betti.get(k)).copied().unwrap_or(0)
    }

    pub fn rank_at(&self, j: i64) -> u64 {
        usize::try_from(j)
            .ok()
            .and_then(|j| self.lefschetz_ranks.get(j))
            .copied()
            .unwrap_or(0)
    }
}

/// Dimensions of `H^k` of the descended complex for `k = 0..=2n+1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyResult {
    pub dims: Vec<u64>,
}

impl CohomologyResult {
    pub fn euler_characteristic(&self) -> i128 {
        self.dims
            .iter()
            .enumerate()
            .map(|(k, &d)| if k % 2 == 0 { d as i128 } else { -(d as i128) })
            .sum()
    }
}

/// `dim H^k = dim coker(δ: H^{k-2}(C) → H^k(K)) + dim ker(δ: H^{k-1}(C) → H^{k+1}(K))`.
pub fn descended_cohomology(profile: &CohomologyProfile) -> CohomologyResult {
    let w = profile.w1;
    let dims = (0..=profile.dim_m as i64 + 1)
        .map(|k| {
            let coker = profile.betti_at(k) * w - profile.rank_at(k - 2) * w;
            let ker = profile.betti_at(k - 1) * w - profile.rank_at(k - 1) * w;
            coker + ker
        })
        .collect();
    CohomologyResult { dims }
}

/// Betti numbers and full Lefschetz ranks of `CP^n`.
pub fn cpn_profile(n: usize, w1: u64) -> Result<CohomologyProfile> {
    if n < 2 {
        return Err(Error::input(format!("CP^n needs n >= 2, got {n}")));
    }
    let betti = (0..=2 * n).map(|k| u64::from(k % 2 == 0)).collect();
    let ranks = (0..=2 * n - 2).map(|j| u64::from(j % 2 == 0)).collect();
    CohomologyProfile::new(2 * n, betti, ranks, w1)
}

fn zeros(rows: usize, cols: usize) -> Matrix {
    vec![vec![Rational::from_integer(0.into()); cols]; rows]
}

fn random_unimodular(n: usize, rng: &mut ChaCha8Rng) -> Matrix {
    let mut m = linalg::identity(n);
    if n < 2 {
        return m;
    }
    for _ in 0..3 * n {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        if i == j {
            continue;
        }
        if rng.gen_bool(0.2) {
            m.swap(i, j);
        } else {
            let f = Rational::from_integer(rng.gen_range(-3i64..=3).into());
            for c in 0..n {
                let t = &m[j][c] * &f;
                m[i][c] += t;
            }
        }
    }
    m
}

/// A random `rows × cols` matrix of exactly the given rank.
fn random_of_rank(rows: usize, cols: usize, rank: usize, rng: &mut ChaCha8Rng) -> Matrix {
    let mut core = zeros(rows, cols);
    for (i, row) in core.iter_mut().enumerate().take(rank) {
        row[i] = Rational::from_integer(1.into());
    }
    let left = random_unimodular(rows, rng);
    let right = random_unimodular(cols, rng);
    linalg::mul(&linalg::mul(&left, &core), &right)
}

fn kron_identity(m: &Matrix, rows: usize, cols: usize, w: usize) -> Matrix {
    let mut out = zeros(rows * w, cols * w);
    for i in 0..rows {
        for j in 0..cols {
            for t in 0..w {
                out[i * w + t][j * w + t] = m[i][j].clone();
            }
        }
    }
    out
}

/// Whether `a·b` vanishes, for `a: m×inner` and `b: inner×n`; products
/// with an empty factor vanish trivially.
fn product_vanishes(a: &Matrix, b: &Matrix, inner: usize) -> bool {
    if a.is_empty() || inner == 0 || b.first().is_none_or(Vec::is_empty) {
        return true;
    }
    linalg::mul(a, b).iter().flatten().all(|x| x == &Rational::from_integer(0.into()))
}

/// Quotient map `K → K / im(δ)` as a matrix, for `δ: C → K` with `dim K = rows`.
fn quotient_map(delta: &Matrix, rows: usize) -> Matrix {
    let mut basis: Vec<Vec<Rational>> = Vec::new();
    if rows > 0 && !delta.first().is_some_and(Vec::is_empty) {
        let mut work = delta.clone();
        for c in linalg::row_reduce(&mut work) {
            basis.push(delta.iter().map(|r| r[c].clone()).collect());
        }
    }
    let image_rank = basis.len();
    for i in 0..rows {
        let mut e = vec![Rational::from_integer(0.into()); rows];
        e[i] = Rational::from_integer(1.into());
        let mut trial = basis.clone();
        trial.push(e.clone());
        if linalg::rank(&trial) == trial.len() {
            basis = trial;
        }
    }
    // columns of `change` are the basis vectors
    let change = linalg::transpose(&basis);
    let inv = linalg::inverse(&change).unwrap_or_default();
    inv[image_rank..].to_vec()
}

/// Builds the long exact sequence from explicit random matrices of the
/// prescribed ranks, checks exactness at every position, and reads off the
/// dimensions of `H^k(A)` by row reduction.
pub fn les_oracle(profile: &CohomologyProfile, seed: u64) -> Result<CohomologyResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let w = profile.w1 as usize;
    let top = profile.dim_m as i64;
    let b = |k: i64| profile.betti_at(k) as usize;

    // δ_j : H^j(C) → H^{j+2}(K), for j = -2..=top
    let deltas: Vec<Matrix> = (-2..=top)
        .map(|j| {
            let base = random_of_rank(b(j + 2), b(j), profile.rank_at(j) as usize, &mut rng);
            kron_identity(&base, b(j + 2), b(j), w)
        })
        .collect();
    let delta = |j: i64| &deltas[(j + 2) as usize];

    let mut dims = Vec::new();
    for k in 0..=top + 1 {
        let k_dim = b(k) * w;
        let c_dim = b(k - 1) * w;
        let incoming = delta(k - 2);
        let outgoing = delta(k - 1);

        let in_rank = linalg::rank(incoming);
        let j_map = quotient_map(incoming, k_dim);
        let coker = j_map.len();
        let kernel = linalg::kernel_basis(outgoing, c_dim);
        let a_dim = coker + kernel.len();

        // j: K → A = coker ⊕ ker, π: A → C
        let mut j_full = zeros(a_dim, k_dim);
        for (r, row) in j_map.iter().enumerate() {
            j_full[r] = row.clone();
        }
        let mut pi = zeros(c_dim, a_dim);
        for (col, v) in kernel.iter().enumerate() {
            for (r, x) in v.iter().enumerate() {
                pi[r][coker + col] = x.clone();
            }
        }

        let rank_j = linalg::rank(&j_full);
        let rank_pi = linalg::rank(&pi);
        let exact_at_k = coker + in_rank == k_dim && product_vanishes(&j_full, incoming, k_dim);
        let exact_at_a = rank_j + rank_pi == a_dim && product_vanishes(&pi, &j_full, a_dim);
        let exact_at_c = rank_pi == kernel.len() && product_vanishes(outgoing, &pi, c_dim);
        if !(exact_at_k && exact_at_a && exact_at_c) {
            return Err(Error::input(format!("sequence failed to be exact in degree {k}")));
        }
        dims.push(a_dim as u64);
    }
    Ok(CohomologyResult { dims })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cpn_examples() {
        let p = cpn_profile(2, 1).unwrap();
        assert_eq!(p.betti, vec![1, 0, 1, 0, 1]);
        assert_eq!(p.lefschetz_ranks, vec![1, 0, 1]);
        assert_eq!(cpn_profile(3, 1).unwrap().betti.len(), 7);
        assert!(cpn_profile(1, 1).is_err());
    }

    #[test]
    fn cpn_cohomology() {
        for n in 2..=5 {
            for w1 in [0, 1, 3, 7] {
                let r = descended_cohomology(&cpn_profile(n, w1).unwrap());
                let mut expected = vec![0; 2 * n + 2];
                expected[0] = w1;
                expected[2 * n + 1] = w1;
                assert_eq!(r.dims, expected);
            }
        }
    }

    #[test]
    fn contractible() {
        let p = CohomologyProfile::new(6, vec![1], vec![], 4).unwrap();
        assert_eq!(descended_cohomology(&p).dims, vec![4, 4, 0, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn invalid_profiles() {
        assert!(CohomologyProfile::new(3, vec![1], vec![], 1).is_err());
        assert!(CohomologyProfile::new(0, vec![], vec![], 1).is_err());
        assert!(CohomologyProfile::new(2, vec![1, 0, 1, 1], vec![], 1).is_err());
        assert!(CohomologyProfile::new(4, vec![1, 0, 1], vec![2], 1).is_err());
        assert!(CohomologyProfile::new(4, vec![1, 0, 1], vec![1, 0, 0, 0], 1).is_err());
    }

    #[test]
    fn json_profile() {
        let p = CohomologyProfile::from_json(r#"{"dim_M": 4, "betti": [1, 0, 1, 0, 1], "w1": 2}"#).unwrap();
        assert_eq!(p.lefschetz_ranks, Vec::<u64>::new());
        // zero ranks: dims[k] = w1 (b_k + b_{k-1})
        assert_eq!(descended_cohomology(&p).dims, vec![2; 6]);
        assert!(CohomologyProfile::from_json(r#"{"betti": []}"#).is_err());
    }

    #[test]
    fn oracle_examples() {
        let p = cpn_profile(2, 3).unwrap();
        for seed in 0..3 {
            assert_eq!(les_oracle(&p, seed).unwrap().dims, vec![3, 0, 0, 0, 0, 3]);
        }
        let torus = CohomologyProfile::new(2, vec![1, 2, 1], vec![0], 2).unwrap();
        assert_eq!(les_oracle(&torus, 7).unwrap(), descended_cohomology(&torus));
        let full = CohomologyProfile::new(6, vec![1, 2, 3, 1, 2, 0, 1], vec![1, 1, 2, 0, 0], 1).unwrap();
        assert_eq!(les_oracle(&full, 11).unwrap(), descended_cohomology(&full));
    }

    #[test]
    fn random_matrices_have_prescribed_rank() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for (r, c, k) in [(3, 4, 2), (5, 5, 5), (4, 2, 0), (1, 6, 1)] {
            assert_eq!(linalg::rank(&random_of_rank(r, c, k, &mut rng)), k);
        }
    }
}
