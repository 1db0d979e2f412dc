//! Exact rational arithmetic helpers: scalars, dense square matrices, and a
//! small Gaussian-elimination solver. Everything in `lie` and `cspace` runs
//! on these; floating point enters only when curvature components are
//! normalized by square roots.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

pub type Rat = num_rational::BigRational;

pub fn rat_i(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn to_f64(x: &Rat) -> f64 {
    x.to_f64().expect("rational out of f64 range")
}

/// Exact integer extraction; `None` when the value is not an integer or does
/// not fit an `i64`.
pub fn as_i64(x: &Rat) -> Option<i64> {
    if x.is_integer() {
        x.numer().to_i64()
    } else {
        None
    }
}

/// Dense square matrix over `Rat`, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMat {
    n: usize,
    a: Vec<Rat>,
}

impl RatMat {
    pub fn zeros(n: usize) -> Self {
        RatMat {
            n,
            a: vec![Rat::zero(); n * n],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.a[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.a[i * self.n + j] = v;
    }

    /// Matrix with a single nonzero entry `v` at `(i, j)`.
    pub fn unit(n: usize, i: usize, j: usize, v: Rat) -> Self {
        let mut m = RatMat::zeros(n);
        m.set(i, j, v);
        m
    }

    pub fn add(&self, rhs: &RatMat) -> RatMat {
        assert_eq!(self.n, rhs.n);
        let a = self
            .a
            .iter()
            .zip(&rhs.a)
            .map(|(x, y)| x + y)
            .collect();
        RatMat { n: self.n, a }
    }

    pub fn sub(&self, rhs: &RatMat) -> RatMat {
        assert_eq!(self.n, rhs.n);
        let a = self
            .a
            .iter()
            .zip(&rhs.a)
            .map(|(x, y)| x - y)
            .collect();
        RatMat { n: self.n, a }
    }

    pub fn scale(&self, t: &Rat) -> RatMat {
        RatMat {
            n: self.n,
            a: self.a.iter().map(|x| x * t).collect(),
        }
    }

    pub fn mul(&self, rhs: &RatMat) -> RatMat {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = RatMat::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let aik = self.get(i, k);
                if aik.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + aik * b;
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn bracket(&self, rhs: &RatMat) -> RatMat {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    pub fn transpose(&self) -> RatMat {
        let n = self.n;
        let mut out = RatMat::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn trace(&self) -> Rat {
        (0..self.n).map(|i| self.get(i, i).clone()).sum()
    }

    /// tr(self * rhs) without forming the product.
    pub fn mul_trace(&self, rhs: &RatMat) -> Rat {
        let n = self.n;
        let mut t = Rat::zero();
        for i in 0..n {
            for k in 0..n {
                let x = self.get(i, k);
                if !x.is_zero() {
                    t += x * rhs.get(k, i);
                }
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|x| x.is_zero())
    }

    /// If `self == t * rhs` entrywise for some scalar `t` (with `rhs != 0`),
    /// return `t`.
    pub fn ratio_to(&self, rhs: &RatMat) -> Option<Rat> {
        assert_eq!(self.n, rhs.n);
        let k = rhs.a.iter().position(|x| !x.is_zero())?;
        let t = &self.a[k] / &rhs.a[k];
        for (x, y) in self.a.iter().zip(&rhs.a) {
            if *x != y * &t {
                return None;
            }
        }
        Some(t)
    }
}

/// Solve the consistent linear system `A x = b` exactly, where `A` is
/// `m x n` with `m >= n` and full column rank. Returns `None` when the
/// system is inconsistent or rank-deficient.
pub fn solve_exact(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let m = a.len();
    if m == 0 || m != b.len() {
        return None;
    }
    let n = a[0].len();
    let mut aug: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();

    let mut pivot_rows = Vec::with_capacity(n);
    let mut row = 0usize;
    for col in 0..n {
        let p = (row..m).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(row, p);
        let inv = aug[row][col].clone();
        for x in aug[row][col..].iter_mut() {
            *x = &*x / &inv;
        }
        for r in 0..m {
            if r != row && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for c in col..=n {
                    let v = &aug[r][c] - &f * &aug[row][c];
                    aug[r][c] = v;
                }
            }
        }
        pivot_rows.push(row);
        row += 1;
    }
    // remaining rows must be zero = zero for consistency
    for r in row..m {
        if !aug[r][n].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rat::zero(); n];
    for (col, &pr) in pivot_rows.iter().enumerate() {
        x[col] = aug[pr][n].clone();
    }
    Some(x)
}

/// Greatest common rational factor detection: if `xs == t * ys` entrywise
/// for a single scalar `t`, return it.
pub fn common_ratio(xs: &[Rat], ys: &[Rat]) -> Option<Rat> {
    if xs.len() != ys.len() || xs.is_empty() {
        return None;
    }
    let k = ys.iter().position(|y| !y.is_zero())?;
    let t = &xs[k] / &ys[k];
    for (x, y) in xs.iter().zip(ys) {
        if *x != y * &t {
            return None;
        }
    }
    Some(t)
}

/// Parse a rational written as `p`, `p/q`, or a plain decimal like `1.5`.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let num: BigInt = p.trim().parse().ok()?;
        let den: BigInt = q.trim().parse().ok()?;
        if den.is_zero() {
            return None;
        }
        return Some(Rat::new(num, den));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let neg = int.trim_start().starts_with('-');
        let int_part: BigInt = if int.is_empty() || int == "-" {
            BigInt::zero()
        } else {
            int.parse().ok()?
        };
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let num: BigInt = frac.parse().ok()?;
        let den = BigInt::from(10u32).pow(frac.len() as u32);
        let frac_rat = Rat::new(num, den);
        let int_rat = Rat::from_integer(int_part);
        return Some(if neg { int_rat - frac_rat } else { int_rat + frac_rat });
    }
    let n: BigInt = s.parse().ok()?;
    Some(Rat::from_integer(n))
}

/// Render as `p` or `p/q`.
pub fn rat_string(x: &Rat) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solve_overdetermined_consistent() {
        // columns (1,1,0) and (0,1,1); rhs = col1 + 2*col2
        let a = vec![
            vec![rat_i(1), rat_i(0)],
            vec![rat_i(1), rat_i(1)],
            vec![rat_i(0), rat_i(1)],
        ];
        let b = vec![rat_i(1), rat_i(3), rat_i(2)];
        let x = solve_exact(&a, &b).unwrap();
        assert_eq!(x, vec![rat_i(1), rat_i(2)]);
    }

    #[test]
    fn solve_inconsistent_rejected() {
        let a = vec![vec![rat_i(1)], vec![rat_i(1)]];
        let b = vec![rat_i(1), rat_i(2)];
        assert!(solve_exact(&a, &b).is_none());
    }

    #[test]
    fn bracket_of_elementary_matrices() {
        // [E12, E23] = E13 in 3x3
        let e12 = RatMat::unit(3, 0, 1, rat_i(1));
        let e23 = RatMat::unit(3, 1, 2, rat_i(1));
        let e13 = RatMat::unit(3, 0, 2, rat_i(1));
        assert_eq!(e12.bracket(&e23), e13);
    }

    #[test]
    fn parse_rat_forms() {
        assert_eq!(parse_rat("3").unwrap(), rat_i(3));
        assert_eq!(parse_rat("-2/4").unwrap(), rat(-1, 2));
        assert_eq!(parse_rat("1.5").unwrap(), rat(3, 2));
        assert_eq!(parse_rat("-0.25").unwrap(), rat(-1, 4));
        assert!(parse_rat("1/0").is_none());
        assert_eq!(rat_string(&rat(7, 2)), "7/2");
        assert_eq!(rat_string(&rat_i(-3)), "-3");
    }
}
