#![allow(clippy::needless_range_loop)]
//! Test-side oracle: elements of the extended affine Weyl group as affine maps
//! p ↦ Mp + b of the coweight space, and the δ-basis algebra over Frac(S) on them.
#![allow(dead_code)]

use std::collections::HashMap;

use affsym::{Context, Coweight, ExtendedAffineElement, NilHeckeElement, Root, RationalFunction, WeylElement};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Aff {
    /// Coweight matrix in ϖ∨ coordinates, row-major.
    pub m: Vec<i32>,
    /// Column j is the image of α_j in simple-root coordinates.
    pub roots: Vec<i32>,
    pub b: Vec<i32>,
}

pub struct Oracle<'a> {
    pub c: &'a Context,
    pub r: usize,
    pub h: i32,
    a_cache: HashMap<ExtendedAffineElement, Delta>,
}

pub type Delta = HashMap<Aff, RationalFunction>;

fn matmul(a: &[i32], b: &[i32], r: usize) -> Vec<i32> {
    let mut out = vec![0; r * r];
    for i in 0..r {
        for k in 0..r {
            let x = a[i * r + k];
            if x != 0 {
                for j in 0..r {
                    out[i * r + j] += x * b[k * r + j];
                }
            }
        }
    }
    out
}

impl<'a> Oracle<'a> {
    pub fn new(c: &'a Context) -> Self {
        let r = c.rank();
        let h = c.rs.highest_root().height() + 1;
        Oracle { c, r, h, a_cache: HashMap::new() }
    }

    pub fn identity(&self) -> Aff {
        let r = self.r;
        let mut m = vec![0; r * r];
        for i in 0..r {
            m[i * r + i] = 1;
        }
        Aff { m: m.clone(), roots: m, b: vec![0; r] }
    }

    pub fn compose(&self, x: &Aff, y: &Aff) -> Aff {
        let r = self.r;
        let mut b = x.b.clone();
        for i in 0..r {
            for k in 0..r {
                b[i] += x.m[i * r + k] * y.b[k];
            }
        }
        Aff { m: matmul(&x.m, &y.m, r), roots: matmul(&x.roots, &y.roots, r), b }
    }

    pub fn translation(&self, l: &[i32]) -> Aff {
        Aff { b: l.to_vec(), ..self.identity() }
    }

    /// Reflection in the affine hyperplane ⟨γ, p⟩ + k = 0.
    pub fn reflection(&self, g: &[i32], k: i32) -> Aff {
        let r = self.r;
        let gv = self.c.rs.coroot(&Root::new(g)).expect("a root");
        let gv = gv.coords();
        let mut x = self.identity();
        for i in 0..r {
            for j in 0..r {
                x.m[i * r + j] -= gv[i] * g[j];
                x.roots[i * r + j] -= g[i] * gv[j];
            }
            x.b[i] = -k * gv[i];
        }
        x
    }

    pub fn gen(&self, g: usize) -> Aff {
        if g == 0 {
            let t = self.c.rs.highest_root();
            let neg: Vec<i32> = t.coords().iter().map(|x| -x).collect();
            self.reflection(&neg, 1)
        } else {
            let mut e = vec![0; self.r];
            e[g - 1] = 1;
            self.reflection(&e, 0)
        }
    }

    pub fn weyl(&self, u: WeylElement) -> Aff {
        self.c.w.word(u).iter().fold(self.identity(), |acc, &g| self.compose(&acc, &self.gen(g as usize)))
    }

    pub fn of(&self, x: &ExtendedAffineElement) -> Aff {
        self.compose(&self.weyl(x.u), &self.translation(x.t.coords()))
    }

    pub fn finite_is_identity(&self, x: &Aff) -> bool {
        x.m == self.identity().m
    }

    /// Number of affine root hyperplanes separating the fundamental alcove from its image.
    pub fn length(&self, x: &Aff) -> usize {
        let r = self.r;
        // h · x(ρ∨/h)
        let mut p = vec![0i32; r];
        for i in 0..r {
            p[i] = (0..r).map(|k| x.m[i * r + k]).sum::<i32>() + self.h * x.b[i];
        }
        let mut n = 0;
        for a in self.c.rs.positive_roots() {
            let v: i32 = a.coords().iter().zip(&p).map(|(g, q)| g * q).sum();
            // γ = a with k ≥ 0, γ = −a with k ≥ 1
            let mut k = 0;
            while v + k * self.h < 0 {
                n += 1;
                k += 1;
            }
            let mut k = 1;
            while -v + k * self.h < 0 {
                n += 1;
                k += 1;
            }
        }
        n
    }

    pub fn in_waffm(&self, x: &Aff) -> bool {
        let l = self.length(x);
        (1..=self.r).all(|i| self.length(&self.compose(x, &self.gen(i))) > l)
    }

    pub fn act(&self, x: &Aff, f: &RationalFunction) -> RationalFunction {
        let r = self.r;
        let images: Vec<Root> = (0..r).map(|j| Root::new(&(0..r).map(|i| x.roots[i * r + j]).collect::<Vec<_>>())).collect();
        f.substitute(&images)
    }

    pub fn mul(&self, a: &Delta, b: &Delta) -> Delta {
        let mut out: Delta = HashMap::new();
        for (x, f) in a {
            for (y, g) in b {
                let z = self.compose(x, y);
                let v = f.mul(&self.act(x, g));
                add_to(&mut out, z, &v);
            }
        }
        out
    }

    pub fn delta(&self, x: Aff) -> Delta {
        HashMap::from([(x, RationalFunction::one())])
    }

    pub fn scalar(&self, f: RationalFunction) -> Delta {
        HashMap::from([(self.identity(), f)])
    }

    /// (1/γ)(δ_e − δ_{s_{γ+kε}}).
    pub fn a_root(&self, g: &[i32], k: i32) -> Delta {
        let inv = RationalFunction::one().div_linear(g).unwrap();
        let mut d = HashMap::new();
        d.insert(self.identity(), inv.clone());
        add_to(&mut d, self.reflection(g, k), &inv.neg());
        d
    }

    pub fn a_gen(&self, g: usize) -> Delta {
        if g == 0 {
            let neg: Vec<i32> = self.c.rs.highest_root().coords().iter().map(|x| -x).collect();
            self.a_root(&neg, 1)
        } else {
            let mut e = vec![0; self.r];
            e[g - 1] = 1;
            self.a_root(&e, 0)
        }
    }

    /// A_x = δ_τ A_{g1}⋯A_{gk} for x = τ·s_{g1}⋯s_{gk} reduced.
    pub fn a_basis(&mut self, x: &ExtendedAffineElement) -> Delta {
        if let Some(d) = self.a_cache.get(x) {
            return d.clone();
        }
        let (k, word) = self.c.reduced_word(x);
        let tau = self.of(&self.c.z_elements()[k].elem);
        let whole = word.iter().fold(tau.clone(), |acc, &g| self.compose(&acc, &self.gen(g)));
        assert_eq!(whole, self.of(x), "reduced word does not multiply to x");
        assert_eq!(self.length(&whole), word.len(), "word is not reduced");
        let d = word.iter().fold(self.delta(tau), |acc, &g| self.mul(&acc, &self.a_gen(g)));
        self.a_cache.insert(*x, d.clone());
        d
    }

    pub fn expand(&mut self, a: &NilHeckeElement) -> Delta {
        let mut out = HashMap::new();
        for (x, p) in a.terms() {
            let p = RationalFunction::from_poly(p.clone());
            for (y, f) in self.a_basis(x) {
                add_to(&mut out, y, &f.mul(&p));
            }
        }
        out
    }
}

pub fn add_to(d: &mut Delta, x: Aff, f: &RationalFunction) {
    let e = d.entry(x.clone()).or_insert_with(RationalFunction::zero);
    *e = e.add(f);
    if e.is_zero() {
        d.remove(&x);
    }
}

pub fn sub(a: &Delta, b: &Delta) -> Delta {
    let mut out = a.clone();
    for (x, f) in b {
        add_to(&mut out, x.clone(), &f.neg());
    }
    out
}

pub fn add(a: &Delta, b: &Delta) -> Delta {
    let mut out = a.clone();
    for (x, f) in b {
        add_to(&mut out, x.clone(), f);
    }
    out
}

pub fn scale(a: &Delta, f: &RationalFunction) -> Delta {
    a.iter().map(|(x, g)| (x.clone(), f.mul(g))).filter(|(_, g)| !g.is_zero()).collect()
}

/// Antidominant coweights −Σ n_i ϖ_i∨ with n_i ≤ bound.
pub fn antidominant_box(r: usize, bound: i32) -> Vec<Coweight> {
    let mut out = vec![vec![]];
    for _ in 0..r {
        out = out.into_iter().flat_map(|v: Vec<i32>| (0..=bound).map(move |n| [v.clone(), vec![-n]].concat())).collect();
    }
    out.into_iter().map(|v| Coweight::new(&v)).collect()
}

/// Elements given by generator digit strings, e.g. "2103".
pub fn digits(c: &Context, w: &str) -> ExtendedAffineElement {
    let gens: Vec<usize> = w.chars().map(|d| d.to_digit(10).unwrap() as usize).collect();
    c.mul_word(&gens)
}
