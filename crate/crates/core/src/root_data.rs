//! Finite root systems built from Cartan matrices.
//!
//! Convention: `a[i][j] = ⟨α_j, α_i∨⟩`, Bourbaki numbering. Node indices are
//! 1-based in every public method.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lattice::{AffineRoot, Coweight, Root, Weight, MAX_RANK};
use crate::linalg::invert;
use crate::scalars::Rational;

const MAX_POSITIVE_ROOTS: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CartanType {
    pub series: Series,
    pub rank: usize,
}

impl CartanType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 3,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        } && rank <= MAX_RANK;
        if ok {
            Ok(CartanType { series, rank })
        } else {
            Err(Error::InvalidCartanType(format!("{series:?}{rank}")))
        }
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<i32>> {
        let n = self.rank;
        let mut a = vec![vec![0; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize, aij: i32, aji: i32| {
            a[i - 1][j - 1] = aij;
            a[j - 1][i - 1] = aji;
        };
        match self.series {
            Series::A => {
                for i in 1..n {
                    link(i, i + 1, -1, -1);
                }
            }
            Series::B | Series::C => {
                for i in 1..n - 1 {
                    link(i, i + 1, -1, -1);
                }
                if self.series == Series::B {
                    link(n - 1, n, -1, -2);
                } else {
                    link(n - 1, n, -2, -1);
                }
            }
            Series::D => {
                for i in 1..n - 1 {
                    link(i, i + 1, -1, -1);
                }
                link(n - 2, n, -1, -1);
            }
            Series::E => {
                link(1, 3, -1, -1);
                link(3, 4, -1, -1);
                link(2, 4, -1, -1);
                for i in 4..n {
                    link(i, i + 1, -1, -1);
                }
            }
            Series::F => {
                link(1, 2, -1, -1);
                link(2, 3, -1, -2);
                link(3, 4, -1, -1);
            }
            Series::G => link(1, 2, -3, -1),
        }
        a
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::InvalidCartanType(s.to_string());
        let mut chars = t.chars();
        let series = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Series::A,
            Some('B') => Series::B,
            Some('C') => Series::C,
            Some('D') => Series::D,
            Some('E') => Series::E,
            Some('F') => Series::F,
            Some('G') => Series::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        CartanType::new(series, rank).map_err(|_| bad())
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.series, self.rank)
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    rank: usize,
    cartan_type: Option<CartanType>,
    cartan: Vec<Vec<i32>>,
    positive_roots: Vec<Root>,
    positive_coroots: Vec<Coweight>,
    root_index: HashMap<Root, usize>,
    highest_root: Root,
    highest_coroot: Coweight,
    minuscule: Vec<usize>,
    cartan_inverse: Vec<Vec<Rational>>,
}

impl RootSystem {
    pub fn from_type(t: CartanType) -> Result<Self> {
        let mut rs = Self::from_cartan_matrix(t.cartan_matrix())?;
        rs.cartan_type = Some(t);
        Ok(rs)
    }

    pub fn from_cartan_matrix(a: Vec<Vec<i32>>) -> Result<Self> {
        let n = a.len();
        let bad = |m: &str| Err(Error::InvalidCartanMatrix(m.to_string()));
        if n == 0 || n > MAX_RANK {
            return bad("rank must be between 1 and 8");
        }
        if a.iter().any(|row| row.len() != n) {
            return bad("matrix is not square");
        }
        for i in 0..n {
            if a[i][i] != 2 {
                return bad("diagonal entries must be 2");
            }
            for j in 0..n {
                if i != j && a[i][j] > 0 {
                    return bad("off-diagonal entries must be nonpositive");
                }
                if (a[i][j] == 0) != (a[j][i] == 0) {
                    return bad("a[i][j] = 0 must imply a[j][i] = 0");
                }
            }
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if a[i][j] != 0 && !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return bad("Dynkin diagram is not connected");
        }

        let (positive_roots, positive_coroots) = reflection_closure(&a)?;
        let mut root_index = HashMap::new();
        for (k, r) in positive_roots.iter().enumerate() {
            root_index.insert(*r, k);
        }
        let np = positive_roots.len();
        for (k, r) in positive_roots.iter().enumerate() {
            root_index.insert(-*r, np + k);
        }

        let top = positive_roots.iter().map(|r| r.height()).max().unwrap();
        let tops: Vec<_> = positive_roots.iter().filter(|r| r.height() == top).collect();
        if tops.len() != 1 {
            return bad("no unique highest root");
        }
        let highest_root = *tops[0];
        if positive_roots
            .iter()
            .any(|r| (highest_root - *r).coords().iter().any(|&c| c < 0))
        {
            return bad("highest root is not maximal in dominance order");
        }
        let highest_coroot = positive_coroots[root_index[&highest_root]];

        // i is minuscule iff ⟨ϖ_i∨, α⟩ ∈ {0, 1} for every positive root α.
        let minuscule = (1..=n)
            .filter(|&i| positive_roots.iter().all(|r| r.get(i) <= 1))
            .collect();

        let ratm: Vec<Vec<Rational>> = a
            .iter()
            .map(|row| row.iter().map(|&x| Rational::from_integer(x as i64)).collect())
            .collect();
        let cartan_inverse = invert(&ratm)
            .ok_or_else(|| Error::InvalidCartanMatrix("matrix is singular".into()))?;

        Ok(RootSystem {
            rank: n,
            cartan_type: None,
            cartan: a,
            positive_roots,
            positive_coroots,
            root_index,
            highest_root,
            highest_coroot,
            minuscule,
            cartan_inverse,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan_type(&self) -> Option<CartanType> {
        self.cartan_type
    }

    pub fn cartan_matrix(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    /// `⟨α_j, α_i∨⟩` for 1-based nodes.
    pub fn a(&self, i: usize, j: usize) -> i32 {
        self.cartan[i - 1][j - 1]
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn positive_coroots(&self) -> &[Coweight] {
        &self.positive_coroots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// Index of a root in the list of all roots: positives first, then their negatives.
    pub fn root_index(&self, r: &Root) -> Option<usize> {
        self.root_index.get(r).copied()
    }

    /// Root with the given index in the list of all roots.
    pub fn root(&self, k: usize) -> Root {
        let np = self.positive_roots.len();
        if k < np {
            self.positive_roots[k]
        } else {
            -self.positive_roots[k - np]
        }
    }

    pub fn is_root(&self, r: &Root) -> bool {
        self.root_index.contains_key(r)
    }

    /// Coroot of any (positive or negative) root.
    pub fn coroot(&self, r: &Root) -> Option<Coweight> {
        let k = self.root_index(r)?;
        let np = self.positive_roots.len();
        Some(if k < np { self.positive_coroots[k] } else { -self.positive_coroots[k - np] })
    }

    pub fn highest_root(&self) -> Root {
        self.highest_root
    }

    pub fn highest_coroot(&self) -> Coweight {
        self.highest_coroot
    }

    pub fn minuscule_nodes(&self) -> &[usize] {
        &self.minuscule
    }

    pub fn is_minuscule(&self, i: usize) -> bool {
        self.minuscule.contains(&i)
    }

    pub fn check_node(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank {
            Err(Error::NodeOutOfRange { node: i, rank: self.rank })
        } else {
            Ok(())
        }
    }

    pub fn simple_root(&self, i: usize) -> Root {
        Root::unit(self.rank, i)
    }

    /// α_i∨ in fundamental-coweight coordinates: row i of the Cartan matrix.
    pub fn simple_coroot(&self, i: usize) -> Coweight {
        Coweight::new(&self.cartan[i - 1])
    }

    pub fn fundamental_coweight(&self, i: usize) -> Coweight {
        Coweight::unit(self.rank, i)
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        Weight::unit(self.rank, i)
    }

    /// Simple affine roots α_0 = −Θ + ε and α_i = (α_i, 0).
    pub fn affine_simple_root(&self, i: usize) -> AffineRoot {
        if i == 0 {
            AffineRoot::new(-self.highest_root, 1)
        } else {
            AffineRoot::new(self.simple_root(i), 0)
        }
    }

    /// ⟨β, α_i∨⟩ for the affine coroots, i = 0 included.
    pub fn affine_pairing_simple(&self, beta: &AffineRoot, i: usize) -> i32 {
        if i == 0 {
            -beta.finite.pair(&self.highest_coroot)
        } else {
            beta.finite.pair(&self.simple_coroot(i))
        }
    }

    /// ⟨α, α_i∨⟩ for a root in simple-root coordinates.
    pub fn pair_root_simple_coroot(&self, r: &Root, i: usize) -> i32 {
        r.pair(&self.simple_coroot(i))
    }

    pub fn root_to_weight(&self, r: &Root) -> Weight {
        let mut w = Weight::zero(self.rank);
        for i in 0..self.rank {
            w.coords_mut()[i] = r.dot(&self.cartan[i]);
        }
        w
    }

    /// The canonical pairing ⟨λ, μ∨⟩ of a weight with a coweight.
    pub fn pairing(&self, l: &Weight, m: &Coweight) -> Result<Rational> {
        if l.rank() != self.rank || m.rank() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                got: if l.rank() != self.rank { l.rank() } else { m.rank() },
            });
        }
        // ⟨ϖ_i, ϖ_j∨⟩ = (A⁻¹)_{ji}
        let mut s = Rational::zero();
        for i in 0..self.rank {
            for j in 0..self.rank {
                let (li, mj) = (l.coords()[i], m.coords()[j]);
                if li != 0 && mj != 0 {
                    s += self.cartan_inverse[j][i] * Rational::from_integer((li * mj) as i64);
                }
            }
        }
        Ok(s)
    }

    /// Coordinates of λ∨ in the simple coroot basis, when λ∨ ∈ Q∨.
    pub fn coroot_coordinates(&self, l: &Coweight) -> Option<Vec<i32>> {
        // λ = Aᵀc, so c = (Aᵀ)⁻¹λ, i.e. c_j = Σ_k (A⁻¹)_{kj} λ_k.
        let mut out = Vec::with_capacity(self.rank);
        for j in 0..self.rank {
            let mut s = Rational::zero();
            for k in 0..self.rank {
                s += self.cartan_inverse[k][j] * Rational::from_integer(l.coords()[k] as i64);
            }
            if !s.is_integer() {
                return None;
            }
            out.push(s.to_integer() as i32);
        }
        Some(out)
    }

    pub fn in_coroot_lattice(&self, l: &Coweight) -> bool {
        self.coroot_coordinates(l).is_some()
    }

    pub fn coweight_from_coroot_coordinates(&self, c: &[i32]) -> Coweight {
        let mut l = Coweight::zero(self.rank);
        for (j, &cj) in c.iter().enumerate() {
            if cj != 0 {
                l = l + self.simple_coroot(j + 1).scale(cj);
            }
        }
        l
    }

    /// Fundamental weight ϖ_i in rational simple-root coordinates.
    pub fn fundamental_weight_in_roots(&self, i: usize) -> Vec<Rational> {
        // α_j = Σ_i a[i][j] ϖ_i, so ϖ_i = Σ_j (A⁻¹)_{ji} α_j.
        (0..self.rank).map(|j| self.cartan_inverse[j][i - 1]).collect()
    }

    pub fn cartan_inverse(&self) -> &[Vec<Rational>] {
        &self.cartan_inverse
    }

    pub fn reflect_root(&self, i: usize, r: &Root) -> Root {
        let k = self.pair_root_simple_coroot(r, i);
        let mut out = *r;
        out.coords_mut()[i - 1] -= k;
        out
    }

    /// s_i on a coweight: μ ↦ μ − ⟨α_i, μ⟩ α_i∨.
    pub fn reflect_coweight(&self, i: usize, m: &Coweight) -> Coweight {
        let k = m.get(i);
        if k == 0 {
            return *m;
        }
        *m - self.simple_coroot(i).scale(k)
    }

    pub fn is_dominant(&self, l: &Coweight) -> bool {
        l.coords().iter().all(|&x| x >= 0)
    }

    pub fn is_antidominant(&self, l: &Coweight) -> bool {
        l.coords().iter().all(|&x| x <= 0)
    }

    /// Positive roots lying in the span of the simple roots indexed by `nodes`.
    pub fn parabolic_positive_roots(&self, nodes: &[usize]) -> Vec<usize> {
        (0..self.positive_roots.len())
            .filter(|&k| {
                let r = &self.positive_roots[k];
                (1..=self.rank).all(|i| r.get(i) == 0 || nodes.contains(&i))
            })
            .collect()
    }
}

/// Positive roots and coroots generated by reflecting the simple ones.
fn reflection_closure(a: &[Vec<i32>]) -> Result<(Vec<Root>, Vec<Coweight>)> {
    let n = a.len();
    let mut roots: Vec<Root> = (1..=n).map(|i| Root::unit(n, i)).collect();
    let mut coroots: Vec<Coweight> = (0..n).map(|i| Coweight::new(&a[i])).collect();
    let mut index: HashMap<Root, usize> = roots.iter().enumerate().map(|(k, r)| (*r, k)).collect();
    let mut k = 0;
    while k < roots.len() {
        let (r, c) = (roots[k], coroots[k]);
        for i in 0..n {
            let p = r.dot(&a[i]);
            if p == 0 {
                continue;
            }
            let mut r2 = r;
            r2.coords_mut()[i] -= p;
            if !r2.is_positive() {
                if r2.is_negative() {
                    continue;
                }
                return Err(Error::InvalidCartanMatrix("root of mixed sign".into()));
            }
            if index.contains_key(&r2) {
                continue;
            }
            let q = c.get(i + 1);
            let c2 = c - Coweight::new(&a[i]).scale(q);
            index.insert(r2, roots.len());
            roots.push(r2);
            coroots.push(c2);
            if roots.len() > MAX_POSITIVE_ROOTS {
                return Err(Error::InvalidCartanMatrix("not of finite type".into()));
            }
        }
        k += 1;
    }
    let mut order: Vec<usize> = (0..roots.len()).collect();
    order.sort_by_key(|&k| (roots[k].height(), std::cmp::Reverse(roots[k].coords().to_vec())));
    Ok((order.iter().map(|&k| roots[k]).collect(), order.iter().map(|&k| coroots[k]).collect()))
}
