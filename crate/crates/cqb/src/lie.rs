//! Matrix-realized classical simple Lie algebras with Chevalley root data.
//!
//! Families A, B, C, D in their defining representations:
//! `sl(r+1)`, `so(2r+1)`, `sp(2r)`, `so(2r)`. Every structure constant is
//! obtained from an explicit matrix bracket over exact rational arithmetic;
//! the closed-form tables known for type A serve only as test oracles.
//!
//! The bilinear form is the defining-representation trace form
//! `B(X, Y) = tr(XY)` for every family. For B, C, D it is proportional to
//! the Killing form; the proportionality rescales metrics and curvature by a
//! global constant and never affects a sign verdict.
//!
//! Conventions. Root vectors satisfy `E_{-a} = E_a^T` (entries are real), so
//! the compact-form conjugation `X -> -X^H` sends `E_a` to `-E_{-a}`. The
//! value `z_a = B(E_a, E_{-a})` is computed from the realization, never
//! assumed; `[E_a, E_{-a}] = z_a H_a` with `H_a` the B-dual of `a` is
//! verified entrywise at construction.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_traits::Zero;

use crate::error::{CqbError, Result};
use crate::rat::{as_i64, rat_i, solve_exact, Rat, RatMat};

/// The four classical families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    pub fn min_rank(self) -> usize {
        match self {
            Family::A => 1,
            Family::B => 2,
            Family::C => 3,
            Family::D => 4,
        }
    }

    pub fn matrix_dim(self, rank: usize) -> usize {
        match self {
            Family::A => rank + 1,
            Family::B => 2 * rank + 1,
            Family::C | Family::D => 2 * rank,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = CqbError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            other => Err(CqbError::Invalid(format!(
                "unknown family {other:?}, expected one of A, B, C, D"
            ))),
        }
    }
}

/// A root, identified by its integer coefficient vector over the fundamental
/// roots. `eps` holds the coordinates in the weight basis of the defining
/// representation; for type A the `(i, k)` pair of `e_i - e_k` is kept
/// alongside (1-based, `i < k` exactly for positive roots).
///
/// The derived ordering is the lexicographic order on `coeffs`, which for
/// distinct roots agrees with "first differing coefficient decides".
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    coeffs: Vec<i32>,
    eps: Vec<i32>,
    pair: Option<(usize, usize)>,
}

impl Root {
    pub fn coeffs(&self) -> &[i32] {
        &self.coeffs
    }

    pub fn eps(&self) -> &[i32] {
        &self.eps
    }

    /// Type A only: the pair `(i, k)` with the root equal to `e_i - e_k`.
    pub fn pair(&self) -> Option<(usize, usize)> {
        self.pair
    }

    pub fn is_positive(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0) && self.coeffs.iter().any(|&c| c > 0)
    }

    pub fn negated(&self) -> Root {
        Root {
            coeffs: self.coeffs.iter().map(|&c| -c).collect(),
            eps: self.eps.iter().map(|&c| -c).collect(),
            pair: self.pair.map(|(i, k)| (k, i)),
        }
    }

    /// Coefficient vector of the formal sum `self + other`.
    pub fn sum_coeffs(&self, other: &Root) -> Vec<i32> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect()
    }

    /// Coefficient vector of the formal difference `self - other`.
    pub fn diff_coeffs(&self, other: &Root) -> Vec<i32> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect()
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.eps.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{}", if c < 0 { "-" } else { "+" })?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "e{}", i + 1)?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Structure constants of the algebra, indexed by positions in the root list.
#[derive(Debug, Clone)]
pub struct ChevalleyData {
    n_table: HashMap<(usize, usize), i64>,
    z: Vec<Rat>,
    h_dual: Vec<RatMat>,
    h_gram: Vec<Vec<Rat>>,
}

impl ChevalleyData {
    /// `N_{a,b}` by root indices; zero when the sum is not a root.
    pub fn n_by_index(&self, a: usize, b: usize) -> i64 {
        self.n_table.get(&(a, b)).copied().unwrap_or(0)
    }

    pub fn z_by_index(&self, a: usize) -> &Rat {
        &self.z[a]
    }

    pub fn gram_by_index(&self, a: usize, b: usize) -> &Rat {
        &self.h_gram[a][b]
    }

    pub fn h_dual_by_index(&self, a: usize) -> &RatMat {
        &self.h_dual[a]
    }
}

/// A classical simple Lie algebra in its defining matrix representation,
/// immutable after construction.
#[derive(Debug)]
pub struct LieAlgebra {
    family: Family,
    rank: usize,
    matrix_dim: usize,
    cartan_basis: Vec<RatMat>,
    /// Positive roots in ascending order, followed by their negatives in the
    /// same relative order.
    roots: Vec<Root>,
    root_vectors: Vec<RatMat>,
    index: HashMap<Vec<i32>, usize>,
    chevalley: ChevalleyData,
    eps_positions: Vec<usize>,
}

impl LieAlgebra {
    /// Build the algebra, enumerate roots, realize root vectors, and compute
    /// all Chevalley constants by explicit brackets. Rejects inadmissible
    /// `(family, rank)` pairs.
    pub fn new(family: Family, rank: usize) -> Result<Arc<Self>> {
        if rank < family.min_rank() {
            return Err(CqbError::Invalid(format!(
                "rank {rank} below the bound for family {family} (requires rank >= {})",
                family.min_rank()
            )));
        }
        let d = family.matrix_dim(rank);
        let eps_positions: Vec<usize> = match family {
            Family::A => (0..=rank).collect(),
            Family::B => (1..=rank).collect(),
            Family::C | Family::D => (0..rank).collect(),
        };
        let eps_len = eps_positions.len();

        let fundamentals = fundamental_eps(family, rank, eps_len);
        let raw = enumerate_positive(family, rank, d, eps_len);

        // Coefficient vectors over the fundamental roots, solved exactly.
        let fund_matrix: Vec<Vec<Rat>> = (0..eps_len)
            .map(|e| (0..rank).map(|k| rat_i(fundamentals[k][e] as i64)).collect())
            .collect();
        let mut positive: Vec<(Root, RatMat)> = Vec::with_capacity(raw.len());
        for (eps, mat, pair) in raw {
            let rhs: Vec<Rat> = eps.iter().map(|&x| rat_i(x as i64)).collect();
            let sol = solve_exact(&fund_matrix, &rhs).ok_or_else(|| {
                CqbError::Inconsistent(format!(
                    "root {eps:?} is not an integer combination of fundamental roots"
                ))
            })?;
            let mut coeffs = Vec::with_capacity(rank);
            for s in &sol {
                let v = as_i64(s).ok_or_else(|| {
                    CqbError::Inconsistent(format!("non-integer root coefficient for {eps:?}"))
                })?;
                if v < 0 {
                    return Err(CqbError::Inconsistent(format!(
                        "negative coefficient in positive root {eps:?}"
                    )));
                }
                coeffs.push(v as i32);
            }
            positive.push((Root { coeffs, eps, pair }, mat));
        }
        positive.sort_by(|(a, _), (b, _)| a.cmp(b));

        let npos = positive.len();
        let mut roots = Vec::with_capacity(2 * npos);
        let mut root_vectors = Vec::with_capacity(2 * npos);
        for (r, m) in &positive {
            roots.push(r.clone());
            root_vectors.push(m.clone());
        }
        for (r, m) in &positive {
            roots.push(r.negated());
            root_vectors.push(m.transpose());
        }
        let index: HashMap<Vec<i32>, usize> = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.coeffs.clone(), i))
            .collect();
        if index.len() != roots.len() {
            return Err(CqbError::Inconsistent("duplicate roots enumerated".into()));
        }

        let cartan_basis = cartan(family, rank, d);

        let mut alg = LieAlgebra {
            family,
            rank,
            matrix_dim: d,
            cartan_basis,
            roots,
            root_vectors,
            index,
            chevalley: ChevalleyData {
                n_table: HashMap::new(),
                z: Vec::new(),
                h_dual: Vec::new(),
                h_gram: Vec::new(),
            },
            eps_positions,
        };
        alg.verify_cartan_action()?;
        alg.compute_chevalley()?;
        Ok(Arc::new(alg))
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn matrix_dim(&self) -> usize {
        self.matrix_dim
    }

    pub fn cartan_basis(&self) -> &[RatMat] {
        &self.cartan_basis
    }

    /// Positive roots sorted ascending in the coefficient-vector order.
    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.roots.len() / 2]
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, idx: usize) -> &Root {
        &self.roots[idx]
    }

    pub fn root_vector_by_index(&self, idx: usize) -> &RatMat {
        &self.root_vectors[idx]
    }

    pub fn root_vector(&self, r: &Root) -> Option<&RatMat> {
        self.root_index(r.coeffs()).map(|i| &self.root_vectors[i])
    }

    pub fn root_index(&self, coeffs: &[i32]) -> Option<usize> {
        self.index.get(coeffs).copied()
    }

    pub fn neg_index(&self, idx: usize) -> usize {
        let npos = self.roots.len() / 2;
        if idx < npos {
            idx + npos
        } else {
            idx - npos
        }
    }

    pub fn chevalley(&self) -> &ChevalleyData {
        &self.chevalley
    }

    /// `N_{a,b}` with `[E_a, E_b] = N_{a,b} E_{a+b}`; zero when `a+b` is not
    /// a root.
    pub fn n_const(&self, a: &Root, b: &Root) -> i64 {
        match (self.root_index(a.coeffs()), self.root_index(b.coeffs())) {
            (Some(i), Some(j)) => self.chevalley.n_by_index(i, j),
            _ => 0,
        }
    }

    /// `z_a = B(E_a, E_{-a})`.
    pub fn z(&self, a: &Root) -> Option<&Rat> {
        self.root_index(a.coeffs())
            .map(|i| self.chevalley.z_by_index(i))
    }

    /// `B(H_a, H_b)` for the B-dual Cartan elements.
    pub fn h_gram(&self, a: &Root, b: &Root) -> Option<&Rat> {
        match (self.root_index(a.coeffs()), self.root_index(b.coeffs())) {
            (Some(i), Some(j)) => Some(self.chevalley.gram_by_index(i, j)),
            _ => None,
        }
    }

    /// Trace form `B(X, Y) = tr(XY)`.
    pub fn bilinear(&self, x: &RatMat, y: &RatMat) -> Rat {
        x.mul_trace(y)
    }

    fn eps_value(&self, root_idx: usize, h: &RatMat) -> Rat {
        let mut v = Rat::zero();
        for (t, &pos) in self.eps_positions.iter().enumerate() {
            let c = self.roots[root_idx].eps[t];
            if c != 0 {
                v += h.get(pos, pos) * rat_i(c as i64);
            }
        }
        v
    }

    fn verify_cartan_action(&self) -> Result<()> {
        for h in &self.cartan_basis {
            for (idx, e) in self.root_vectors.iter().enumerate() {
                let lhs = h.bracket(e);
                let rhs = e.scale(&self.eps_value(idx, h));
                if lhs != rhs {
                    return Err(CqbError::Inconsistent(format!(
                        "[H, E] != a(H) E for root {} of {}{}",
                        self.roots[idx], self.family, self.rank
                    )));
                }
            }
        }
        Ok(())
    }

    fn compute_chevalley(&mut self) -> Result<()> {
        let total = self.roots.len();
        let r = self.cartan_basis.len();

        // z_a = B(E_a, E_{-a})
        let mut z = Vec::with_capacity(total);
        for idx in 0..total {
            let zn = self.root_vectors[idx].mul_trace(&self.root_vectors[self.neg_index(idx)]);
            if zn <= Rat::zero() {
                return Err(CqbError::Inconsistent(format!(
                    "z <= 0 for root {}",
                    self.roots[idx]
                )));
            }
            z.push(zn);
        }
        for idx in 0..total {
            if z[idx] != z[self.neg_index(idx)] {
                return Err(CqbError::Inconsistent("z(a) != z(-a)".into()));
            }
        }

        // B-dual Cartan elements, solved from the Gram system.
        let gram: Vec<Vec<Rat>> = (0..r)
            .map(|m| {
                (0..r)
                    .map(|k| self.cartan_basis[m].mul_trace(&self.cartan_basis[k]))
                    .collect()
            })
            .collect();
        let mut h_dual = Vec::with_capacity(total);
        for idx in 0..total {
            let rhs: Vec<Rat> = (0..r)
                .map(|k| self.eps_value(idx, &self.cartan_basis[k]))
                .collect();
            let coords = solve_exact(&gram, &rhs).ok_or_else(|| {
                CqbError::Inconsistent("degenerate Cartan Gram matrix".into())
            })?;
            let mut h = RatMat::zeros(self.matrix_dim);
            for (k, c) in coords.iter().enumerate() {
                h = h.add(&self.cartan_basis[k].scale(c));
            }
            h_dual.push(h);
        }

        // [E_a, E_{-a}] = z_a H_a, entrywise.
        for idx in 0..total {
            let lhs = self.root_vectors[idx].bracket(&self.root_vectors[self.neg_index(idx)]);
            let rhs = h_dual[idx].scale(&z[idx]);
            if lhs != rhs {
                return Err(CqbError::Inconsistent(format!(
                    "[E, E^-] != z H for root {}",
                    self.roots[idx]
                )));
            }
        }

        // N-table from brackets.
        let mut n_table = HashMap::new();
        for a in 0..total {
            for b in 0..total {
                if a == b || self.neg_index(a) == b {
                    continue;
                }
                let sum = self.roots[a].sum_coeffs(&self.roots[b]);
                let br = self.root_vectors[a].bracket(&self.root_vectors[b]);
                match self.index.get(&sum) {
                    Some(&c) => {
                        let t = br.ratio_to(&self.root_vectors[c]).ok_or_else(|| {
                            CqbError::Inconsistent(format!(
                                "bracket of {} and {} not proportional to the root vector of the sum",
                                self.roots[a], self.roots[b]
                            ))
                        })?;
                        let n = as_i64(&t).ok_or_else(|| {
                            CqbError::Inconsistent(format!(
                                "non-integer N for roots {} and {}",
                                self.roots[a], self.roots[b]
                            ))
                        })?;
                        if n == 0 {
                            return Err(CqbError::Inconsistent(format!(
                                "N = 0 although {} + {} is a root",
                                self.roots[a], self.roots[b]
                            )));
                        }
                        n_table.insert((a, b), n);
                    }
                    None => {
                        if !br.is_zero() {
                            return Err(CqbError::Inconsistent(format!(
                                "nonzero bracket of {} and {} although the sum is not a root",
                                self.roots[a], self.roots[b]
                            )));
                        }
                    }
                }
            }
        }
        // antisymmetry and the conjugation rule
        for (&(a, b), &n) in &n_table {
            if n_table.get(&(b, a)).copied().unwrap_or(0) != -n {
                return Err(CqbError::Inconsistent("N(b,a) != -N(a,b)".into()));
            }
            let (na, nb) = (self.neg_index(a), self.neg_index(b));
            if n_table.get(&(na, nb)).copied().unwrap_or(0) != -n {
                return Err(CqbError::Inconsistent("N(-a,-b) != -N(a,b)".into()));
            }
        }

        let h_gram: Vec<Vec<Rat>> = (0..total)
            .map(|i| (0..total).map(|j| h_dual[i].mul_trace(&h_dual[j])).collect())
            .collect();
        for i in 0..total {
            for j in 0..total {
                if h_gram[i][j] != h_gram[j][i] {
                    return Err(CqbError::Inconsistent("h_gram not symmetric".into()));
                }
            }
        }

        self.chevalley = ChevalleyData {
            n_table,
            z,
            h_dual,
            h_gram,
        };
        Ok(())
    }
}

fn fundamental_eps(family: Family, rank: usize, eps_len: usize) -> Vec<Vec<i32>> {
    let mut out = Vec::with_capacity(rank);
    for i in 1..=rank {
        let mut v = vec![0i32; eps_len];
        match family {
            Family::A => {
                v[i - 1] = 1;
                v[i] = -1;
            }
            Family::B => {
                if i < rank {
                    v[i - 1] = 1;
                    v[i] = -1;
                } else {
                    v[rank - 1] = 1;
                }
            }
            Family::C => {
                if i < rank {
                    v[i - 1] = 1;
                    v[i] = -1;
                } else {
                    v[rank - 1] = 2;
                }
            }
            Family::D => {
                if i < rank {
                    v[i - 1] = 1;
                    v[i] = -1;
                } else {
                    v[rank - 2] = 1;
                    v[rank - 1] = 1;
                }
            }
        }
        out.push(v);
    }
    out
}

fn cartan(family: Family, rank: usize, d: usize) -> Vec<RatMat> {
    let mut out = Vec::with_capacity(rank);
    for k in 0..rank {
        let mut h = RatMat::zeros(d);
        match family {
            Family::A => {
                h.set(k, k, rat_i(1));
                h.set(k + 1, k + 1, rat_i(-1));
            }
            Family::B => {
                h.set(k + 1, k + 1, rat_i(1));
                h.set(rank + k + 1, rank + k + 1, rat_i(-1));
            }
            Family::C | Family::D => {
                h.set(k, k, rat_i(1));
                h.set(rank + k, rank + k, rat_i(-1));
            }
        }
        out.push(h);
    }
    out
}

type RawRoot = (Vec<i32>, RatMat, Option<(usize, usize)>);

fn enumerate_positive(family: Family, rank: usize, d: usize, eps_len: usize) -> Vec<RawRoot> {
    let one = || rat_i(1);
    let mut out: Vec<RawRoot> = Vec::new();
    let eps = |entries: &[(usize, i32)]| {
        let mut v = vec![0i32; eps_len];
        for &(i, c) in entries {
            v[i - 1] += c;
        }
        v
    };
    match family {
        Family::A => {
            for i in 1..=rank {
                for k in (i + 1)..=(rank + 1) {
                    let m = RatMat::unit(d, i - 1, k - 1, one());
                    out.push((eps(&[(i, 1), (k, -1)]), m, Some((i, k))));
                }
            }
        }
        Family::B => {
            // matrix coordinates: 0 extra, 1..=r plus block, r+1..=2r minus block
            for i in 1..=rank {
                for j in (i + 1)..=rank {
                    let mut m = RatMat::unit(d, i, j, one());
                    m.set(rank + j, rank + i, rat_i(-1));
                    out.push((eps(&[(i, 1), (j, -1)]), m, None));

                    let mut p = RatMat::unit(d, i, rank + j, one());
                    p.set(j, rank + i, rat_i(-1));
                    out.push((eps(&[(i, 1), (j, 1)]), p, None));
                }
                let mut s = RatMat::unit(d, i, 0, one());
                s.set(0, rank + i, rat_i(-1));
                out.push((eps(&[(i, 1)]), s, None));
            }
        }
        Family::C => {
            for i in 1..=rank {
                for j in (i + 1)..=rank {
                    let mut m = RatMat::unit(d, i - 1, j - 1, one());
                    m.set(rank + j - 1, rank + i - 1, rat_i(-1));
                    out.push((eps(&[(i, 1), (j, -1)]), m, None));

                    let mut p = RatMat::unit(d, i - 1, rank + j - 1, one());
                    p.set(j - 1, rank + i - 1, rat_i(1));
                    out.push((eps(&[(i, 1), (j, 1)]), p, None));
                }
                let l = RatMat::unit(d, i - 1, rank + i - 1, one());
                out.push((eps(&[(i, 2)]), l, None));
            }
        }
        Family::D => {
            for i in 1..=rank {
                for j in (i + 1)..=rank {
                    let mut m = RatMat::unit(d, i - 1, j - 1, one());
                    m.set(rank + j - 1, rank + i - 1, rat_i(-1));
                    out.push((eps(&[(i, 1), (j, -1)]), m, None));

                    let mut p = RatMat::unit(d, i - 1, rank + j - 1, one());
                    p.set(j - 1, rank + i - 1, rat_i(-1));
                    out.push((eps(&[(i, 1), (j, 1)]), p, None));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pos_root<'a>(alg: &'a LieAlgebra, pair: (usize, usize)) -> &'a Root {
        alg.positive_roots()
            .iter()
            .find(|r| r.pair() == Some(pair))
            .unwrap()
    }

    #[test]
    fn a2_counts_and_order() {
        let alg = LieAlgebra::new(Family::A, 2).unwrap();
        assert_eq!(alg.positive_roots().len(), 3);
        assert_eq!(alg.matrix_dim(), 3);
        let pairs: Vec<_> = alg
            .positive_roots()
            .iter()
            .map(|r| r.pair().unwrap())
            .collect();
        // ascending: a_{23} < a_{12} < a_{13}
        assert_eq!(pairs, vec![(2, 3), (1, 2), (1, 3)]);
    }

    #[test]
    fn a1_single_root() {
        let alg = LieAlgebra::new(Family::A, 1).unwrap();
        assert_eq!(alg.positive_roots().len(), 1);
        assert_eq!(alg.positive_roots()[0].coeffs(), &[1]);
    }

    #[test]
    fn a3_max_root() {
        let alg = LieAlgebra::new(Family::A, 3).unwrap();
        assert_eq!(alg.positive_roots().len(), 6);
        let max = alg.positive_roots().last().unwrap();
        assert_eq!(max.pair(), Some((1, 4)));
        assert_eq!(max.coeffs(), &[1, 1, 1]);
    }

    #[test]
    fn a5_counts() {
        let alg = LieAlgebra::new(Family::A, 5).unwrap();
        assert_eq!(alg.positive_roots().len(), 15);
        assert_eq!(alg.matrix_dim(), 6);
    }

    #[test]
    fn inadmissible_ranks_rejected() {
        assert!(LieAlgebra::new(Family::C, 2).is_err());
        assert!(LieAlgebra::new(Family::B, 1).is_err());
        assert!(LieAlgebra::new(Family::D, 3).is_err());
        assert!(LieAlgebra::new(Family::A, 0).is_err());
    }

    #[test]
    fn a2_structure_constants() {
        let alg = LieAlgebra::new(Family::A, 2).unwrap();
        let a23 = pos_root(&alg, (2, 3)).clone();
        let a12 = pos_root(&alg, (1, 2)).clone();
        // [E23, E12] = -E13
        assert_eq!(alg.n_const(&a23, &a12), -1);
        assert_eq!(alg.n_const(&a12, &a23), 1);
        // B(H_a, H_a) = 2 on simple roots
        assert_eq!(*alg.h_gram(&a12, &a12).unwrap(), rat_i(2));
        assert_eq!(*alg.h_gram(&a23, &a23).unwrap(), rat_i(2));
    }

    #[test]
    fn type_a_z_is_one() {
        for r in [2usize, 3, 4, 5] {
            let alg = LieAlgebra::new(Family::A, r).unwrap();
            for root in alg.roots() {
                assert_eq!(*alg.z(root).unwrap(), rat_i(1));
            }
        }
    }

    /// Independent oracle for type A: B(H_{ik}, H_{jl}) from the delta
    /// formula of the trace form, compared against the brackets-and-traces
    /// computation.
    #[test]
    fn type_a_gram_matches_delta_oracle() {
        for r in [2usize, 3, 4, 5] {
            let alg = LieAlgebra::new(Family::A, r).unwrap();
            for a in alg.roots() {
                for b in alg.roots() {
                    let (i, k) = a.pair().unwrap();
                    let (j, l) = b.pair().unwrap();
                    let delta = |x: usize, y: usize| i64::from(x == y);
                    let expect = delta(i, j) + delta(k, l) - delta(i, l) - delta(k, j);
                    assert_eq!(*alg.h_gram(a, b).unwrap(), rat_i(expect));
                }
            }
        }
    }

    /// Independent oracle for type A: N_{a,c} = -1 exactly when c = e_i-e_j,
    /// a = e_j-e_k for some i<j<k (with a < c), else 0.
    #[test]
    fn type_a_n_matches_pattern_oracle() {
        for r in [2usize, 3, 4] {
            let alg = LieAlgebra::new(Family::A, r).unwrap();
            let pos = alg.positive_roots();
            for a in pos {
                for c in pos {
                    if a >= c {
                        continue;
                    }
                    let (ai, ak) = a.pair().unwrap();
                    let (ci, ck) = c.pair().unwrap();
                    let expect = if ck == ai && ci < ck && ai < ak { -1 } else { 0 };
                    assert_eq!(
                        alg.n_const(a, c),
                        expect,
                        "N mismatch at a={a}, c={c} in A{r}"
                    );
                }
            }
        }
    }

    #[test]
    fn bcd_positive_root_counts() {
        assert_eq!(
            LieAlgebra::new(Family::B, 2).unwrap().positive_roots().len(),
            4
        );
        assert_eq!(
            LieAlgebra::new(Family::B, 3).unwrap().positive_roots().len(),
            9
        );
        assert_eq!(
            LieAlgebra::new(Family::C, 3).unwrap().positive_roots().len(),
            9
        );
        assert_eq!(
            LieAlgebra::new(Family::D, 4).unwrap().positive_roots().len(),
            12
        );
    }

    #[test]
    fn antisymmetry_and_conjugation_on_b3() {
        let alg = LieAlgebra::new(Family::B, 3).unwrap();
        let total = alg.roots().len();
        let ch = alg.chevalley();
        let mut seen_nonzero = false;
        for a in 0..total {
            for b in 0..total {
                let n = ch.n_by_index(a, b);
                assert_eq!(ch.n_by_index(b, a), -n);
                assert_eq!(
                    ch.n_by_index(alg.neg_index(a), alg.neg_index(b)),
                    -n
                );
                seen_nonzero |= n != 0;
            }
        }
        assert!(seen_nonzero);
    }

    #[test]
    fn c3_long_roots_have_z_one_short_z_two() {
        let alg = LieAlgebra::new(Family::C, 3).unwrap();
        for root in alg.positive_roots() {
            let long = root.eps().iter().any(|&c| c.abs() == 2);
            let expect = if long { rat_i(1) } else { rat_i(2) };
            assert_eq!(*alg.z(root).unwrap(), expect, "z mismatch at {root}");
        }
    }
}
