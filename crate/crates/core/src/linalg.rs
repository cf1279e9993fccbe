//! Exact linear algebra over ℚ.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalars::Rational;

/// Inverse of a square rational matrix, or `None` if singular.
pub fn invert(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, p);
        let inv = Rational::one() / a[col][col];
        for x in a[col].iter_mut() {
            *x *= inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                let pivot = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(pivot.iter()) {
                    *x -= f * *y;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn to_big(r: &Rational) -> BigRational {
    BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

pub fn from_big(r: &BigRational) -> Result<Rational> {
    let n: i64 = r.numer().try_into().map_err(|_| Error::Overflow)?;
    let d: i64 = r.denom().try_into().map_err(|_| Error::Overflow)?;
    Ok(Rational::new(n, d))
}

/// Incremental sparse Gaussian elimination with a unique-solution contract.
#[derive(Default)]
pub struct SparseSolver {
    nvars: usize,
    pivots: HashMap<usize, (BTreeMap<usize, BigRational>, BigRational)>,
    equations: usize,
}

impl SparseSolver {
    pub fn new(nvars: usize) -> Self {
        SparseSolver { nvars, pivots: HashMap::new(), equations: 0 }
    }

    /// Adds the equation Σ c_k x_k = rhs.
    pub fn add_equation(&mut self, coeffs: impl IntoIterator<Item = (usize, BigRational)>, mut rhs: BigRational) -> Result<()> {
        self.equations += 1;
        let mut row: BTreeMap<usize, BigRational> = BTreeMap::new();
        for (k, c) in coeffs {
            if c.is_zero() {
                continue;
            }
            let e = row.entry(k).or_insert_with(BigRational::zero);
            *e += c;
            if e.is_zero() {
                row.remove(&k);
            }
        }
        let mut cursor = 0;
        loop {
            let Some((&v, _)) = row.range(cursor..).next() else {
                if !rhs.is_zero() {
                    return Err(Error::Inconsistent(format!("equation {} reduces to 0 = {}", self.equations, rhs)));
                }
                return Ok(());
            };
            match self.pivots.get(&v) {
                Some((prow, prhs)) => {
                    let c = row.remove(&v).unwrap();
                    for (u, x) in prow {
                        let e = row.entry(*u).or_insert_with(BigRational::zero);
                        *e -= &c * x;
                        if e.is_zero() {
                            row.remove(u);
                        }
                    }
                    rhs -= &c * prhs;
                    cursor = v + 1;
                }
                None => {
                    let c = row.remove(&v).unwrap();
                    let inv = BigRational::one() / c;
                    for x in row.values_mut() {
                        *x *= &inv;
                    }
                    rhs *= &inv;
                    self.pivots.insert(v, (row, rhs));
                    return Ok(());
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn solve(self) -> Result<Vec<BigRational>> {
        if self.pivots.len() < self.nvars {
            return Err(Error::Underdetermined(self.nvars - self.pivots.len()));
        }
        let mut x = vec![BigRational::zero(); self.nvars];
        let mut order: Vec<usize> = self.pivots.keys().copied().collect();
        order.sort_unstable_by(|a, b| b.cmp(a));
        for v in order {
            let (row, rhs) = &self.pivots[&v];
            let mut s = rhs.clone();
            for (u, c) in row {
                s -= c * &x[*u];
            }
            x[v] = s;
        }
        Ok(x)
    }
}

/// The Mersenne prime 2⁶¹ − 1.
pub const MOD_P: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % MOD_P as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

fn invmod(a: u64) -> u64 {
    powmod(a, MOD_P - 2)
}

/// Image of a rational in ℤ/p, or `None` if p divides the denominator.
pub fn to_mod(r: &BigRational) -> Option<u64> {
    let p = BigInt::from(MOD_P);
    let n = ((r.numer() % &p) + &p) % &p;
    let d = ((r.denom() % &p) + &p) % &p;
    let n: u64 = n.try_into().ok()?;
    let d: u64 = d.try_into().ok()?;
    (d != 0).then(|| mulmod(n, invmod(d)))
}

/// Rational reconstruction: the unique n/d with |n|, d < √(p/2) congruent to `a`.
pub fn reconstruct(a: u64) -> Option<Rational> {
    let bound: i128 = 1 << 30;
    let (mut r0, mut r1) = (MOD_P as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 >= bound {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if t1 == 0 || t1.abs() >= bound {
        return None;
    }
    let (n, d) = if t1 < 0 { (-r1, -t1) } else { (r1, t1) };
    Some(Rational::new(n as i64, d as i64))
}

/// Sparse elimination over ℤ/p with the same contract as [`SparseSolver`].
#[derive(Default)]
pub struct ModSolver {
    nvars: usize,
    pivots: HashMap<usize, (Vec<(usize, u64)>, u64)>,
}

impl ModSolver {
    pub fn new(nvars: usize) -> Self {
        ModSolver { nvars, pivots: HashMap::new() }
    }

    pub fn add_equation(&mut self, coeffs: impl IntoIterator<Item = (usize, u64)>, mut rhs: u64) -> Result<()> {
        let mut row: BTreeMap<usize, u64> = BTreeMap::new();
        for (k, c) in coeffs {
            let e = row.entry(k).or_insert(0);
            *e = (*e + c) % MOD_P;
        }
        row.retain(|_, c| *c != 0);
        loop {
            let Some((&v, &c)) = row.iter().next() else {
                if rhs != 0 {
                    return Err(Error::Inconsistent("equation reduces to 0 = c (mod p)".into()));
                }
                return Ok(());
            };
            row.remove(&v);
            match self.pivots.get(&v) {
                Some((prow, prhs)) => {
                    for &(u, x) in prow {
                        let e = row.entry(u).or_insert(0);
                        *e = (*e + MOD_P - mulmod(c, x)) % MOD_P;
                        if *e == 0 {
                            row.remove(&u);
                        }
                    }
                    rhs = (rhs + MOD_P - mulmod(c, *prhs)) % MOD_P;
                }
                None => {
                    let inv = invmod(c);
                    let prow = row.into_iter().map(|(u, x)| (u, mulmod(x, inv))).collect();
                    self.pivots.insert(v, (prow, mulmod(rhs, inv)));
                    return Ok(());
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn solve(self) -> Result<Vec<u64>> {
        if self.pivots.len() < self.nvars {
            return Err(Error::Underdetermined(self.nvars - self.pivots.len()));
        }
        let mut x = vec![0u64; self.nvars];
        let mut order: Vec<usize> = self.pivots.keys().copied().collect();
        order.sort_unstable_by(|a, b| b.cmp(a));
        for v in order {
            let (row, rhs) = &self.pivots[&v];
            let mut s = *rhs;
            for &(u, c) in row {
                s = (s + MOD_P - mulmod(c, x[u])) % MOD_P;
            }
            x[v] = s;
        }
        Ok(x)
    }
}
