//! The extended affine Weyl group W̃ = W ⋉ P∨ and its coset machinery.

use std::collections::{HashMap, HashSet};

use crate::context::Context;
use crate::error::{Error, Result};
use crate::lattice::{AffineRoot, Coweight, Root};
use crate::scalars::Polynomial;
use crate::weyl::WeylElement;

/// x = u·t_λ with u ∈ W and λ ∈ P∨ (fundamental-coweight coordinates).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ExtendedAffineElement {
    pub u: WeylElement,
    pub t: Coweight,
}

/// A length zero element with its affine Dynkin automorphism.
#[derive(Clone, Debug)]
pub struct ZElement {
    pub elem: ExtendedAffineElement,
    /// Minuscule node i for τ_i, `None` for the identity.
    pub node: Option<usize>,
    /// f with τ·α_g = α_{f(g)}, g = 0..=r.
    pub perm: Vec<usize>,
}

impl Context {
    pub fn identity(&self) -> ExtendedAffineElement {
        ExtendedAffineElement { u: self.w.identity(), t: Coweight::zero(self.rank()) }
    }

    pub fn weyl(&self, u: WeylElement) -> ExtendedAffineElement {
        ExtendedAffineElement { u, t: Coweight::zero(self.rank()) }
    }

    pub fn translation(&self, l: Coweight) -> ExtendedAffineElement {
        ExtendedAffineElement { u: self.w.identity(), t: l }
    }

    /// Coxeter generator s_g, g = 0..=r, with s₀ = s_Θ·t_{−Θ∨} = t_{Θ∨}·s_Θ.
    pub fn gen(&self, g: usize) -> ExtendedAffineElement {
        if g == 0 {
            ExtendedAffineElement { u: self.s_theta, t: -self.rs.highest_coroot() }
        } else {
            self.weyl(self.w.gen(g))
        }
    }

    /// (u t_λ)(v t_μ) = uv·t_{v⁻¹(λ)+μ}.
    pub fn mul(&self, x: &ExtendedAffineElement, y: &ExtendedAffineElement) -> ExtendedAffineElement {
        let vi = self.w.inverse(y.u);
        ExtendedAffineElement { u: self.w.mul(x.u, y.u), t: self.w.act_coweight(vi, &x.t) + y.t }
    }

    pub fn inverse(&self, x: &ExtendedAffineElement) -> ExtendedAffineElement {
        ExtendedAffineElement { u: self.w.inverse(x.u), t: -self.w.act_coweight(x.u, &x.t) }
    }

    pub fn mul_word(&self, word: &[usize]) -> ExtendedAffineElement {
        word.iter().fold(self.identity(), |x, &g| self.mul(&x, &self.gen(g)))
    }

    /// ℓ(u t_λ) = Σ_{α>0} |⟨λ, α⟩ + χ(u(α) < 0)|.
    pub fn length(&self, x: &ExtendedAffineElement) -> usize {
        let mut l = 0usize;
        for (k, a) in self.rs.positive_roots().iter().enumerate() {
            let p = a.pair(&x.t) + self.w.is_inversion(x.u, k) as i32;
            l += p.unsigned_abs() as usize;
        }
        l
    }

    pub fn lengths_add(&self, x: &ExtendedAffineElement, y: &ExtendedAffineElement) -> bool {
        self.length(&self.mul(x, y)) == self.length(x) + self.length(y)
    }

    /// u t_λ·(μ + nε) = u(μ) + (n − ⟨μ, λ⟩)ε.
    pub fn act_affine_root(&self, x: &ExtendedAffineElement, b: &AffineRoot) -> AffineRoot {
        AffineRoot::new(self.w.act_root(x.u, &b.finite), b.level - b.finite.pair(&x.t))
    }

    /// Action on P∨ where translations act trivially.
    pub fn act_coweight_finite(&self, x: &ExtendedAffineElement, m: &Coweight) -> Coweight {
        self.w.act_coweight(x.u, m)
    }

    /// Level zero action on S: only the finite part acts.
    pub fn act_poly(&self, x: &ExtendedAffineElement, p: &Polynomial) -> Polynomial {
        self.w.act_poly(x.u, p)
    }

    /// Reflection in a real affine root: s_{γ+kε} = s_γ·t_{kγ∨}.
    pub fn affine_reflection(&self, b: &AffineRoot) -> Result<ExtendedAffineElement> {
        if !b.is_real() {
            return Err(Error::ImaginaryRoot(b.to_string()));
        }
        let g = &b.finite;
        let u = self.reflection(g).ok_or_else(|| Error::Precondition(format!("{g} is not a root")))?;
        let c = self.rs.coroot(g).unwrap();
        Ok(ExtendedAffineElement { u, t: c.scale(b.level) })
    }

    /// ℓ(s_g x) < ℓ(x) iff x⁻¹(α_g) < 0.
    pub fn has_left_descent(&self, g: usize, x: &ExtendedAffineElement) -> bool {
        !self.act_affine_root(&self.inverse(x), &self.rs.affine_simple_root(g)).is_positive()
    }

    pub fn has_right_descent(&self, x: &ExtendedAffineElement, g: usize) -> bool {
        !self.act_affine_root(x, &self.rs.affine_simple_root(g)).is_positive()
    }

    pub(crate) fn build_z(&self) -> Result<Vec<ZElement>> {
        let mut elems = vec![(self.identity(), None)];
        for &i in self.rs.minuscule_nodes() {
            let v = self.v_of_node(i)?;
            elems.push((ExtendedAffineElement { u: v, t: -self.rs.fundamental_coweight(i) }, Some(i)));
        }
        // Closure under products; P∨/Q∨ is generated by the τ_i.
        let mut k = 0;
        while k < elems.len() {
            for j in 0..elems.len() {
                let p = self.mul(&elems[k].0, &elems[j].0);
                if !elems.iter().any(|(e, _)| *e == p) {
                    elems.push((p, None));
                }
            }
            k += 1;
        }
        elems
            .into_iter()
            .map(|(elem, node)| {
                if self.length(&elem) != 0 {
                    return Err(Error::NotLengthZero(format!("{elem:?}")));
                }
                Ok(ZElement { perm: self.dynkin_perm(&elem)?, elem, node })
            })
            .collect()
    }

    fn dynkin_perm(&self, x: &ExtendedAffineElement) -> Result<Vec<usize>> {
        let r = self.rank();
        let simples: Vec<AffineRoot> = (0..=r).map(|g| self.rs.affine_simple_root(g)).collect();
        simples
            .iter()
            .map(|a| {
                let img = self.act_affine_root(x, a);
                simples.iter().position(|s| *s == img).ok_or_else(|| Error::NotLengthZero(format!("{x:?}")))
            })
            .collect()
    }

    pub fn z_elements(&self) -> &[ZElement] {
        &self.z
    }

    pub fn tau(&self, i: usize) -> Result<&ZElement> {
        self.rs.check_node(i)?;
        self.z.iter().find(|z| z.node == Some(i)).ok_or(Error::NotMinuscule(i))
    }

    /// Index into `z_elements` of the class of λ in P∨/Q∨.
    pub fn z_index_of_class(&self, l: &Coweight) -> usize {
        self.z
            .iter()
            .position(|z| self.rs.in_coroot_lattice(&(*l - z.elem.t)))
            .expect("Z meets every class of P∨/Q∨")
    }

    /// f_τ for a length zero element.
    pub fn dynkin_auto(&self, tau: &ExtendedAffineElement) -> Result<Vec<usize>> {
        if self.length(tau) != 0 {
            return Err(Error::NotLengthZero(self.format_elem(tau)));
        }
        self.dynkin_perm(tau)
    }

    /// x = τ·x̂ with τ ∈ Z and x̂ ∈ W_aff.
    pub fn decompose_z(&self, x: &ExtendedAffineElement) -> (usize, ExtendedAffineElement) {
        let k = self.z_index_of_class(&x.t);
        let tau = &self.z[k].elem;
        (k, self.mul(&self.inverse(tau), x))
    }

    pub fn z_component(&self, x: &ExtendedAffineElement) -> usize {
        self.z_index_of_class(&x.t)
    }

    pub fn in_affine_weyl(&self, x: &ExtendedAffineElement) -> bool {
        self.rs.in_coroot_lattice(&x.t)
    }

    /// Shortlex-minimal reduced word of x̂ in s₀..s_r, with x = τ·x̂.
    pub fn reduced_word(&self, x: &ExtendedAffineElement) -> (usize, Vec<usize>) {
        let (k, mut y) = self.decompose_z(x);
        let r = self.rank();
        let mut word = Vec::new();
        while let Some(g) = (0..=r).find(|&g| self.has_left_descent(g, &y)) {
            word.push(g);
            y = self.mul(&self.gen(g), &y);
        }
        debug_assert_eq!(y, self.identity());
        (k, word)
    }

    /// Conjugation by τ on a W_aff word: τ s_g τ⁻¹ = s_{f(g)}.
    pub fn conjugate_word(&self, z: usize, word: &[usize]) -> Vec<usize> {
        word.iter().map(|&g| self.z[z].perm[g]).collect()
    }

    /// Bruhat order within a Z-component; false across components.
    pub fn bruhat_leq(&self, x: &ExtendedAffineElement, y: &ExtendedAffineElement) -> bool {
        let (kx, xh) = self.decompose_z(x);
        let (ky, yh) = self.decompose_z(y);
        kx == ky && self.bruhat_leq_hat(xh, yh)
    }

    fn bruhat_leq_hat(&self, x: ExtendedAffineElement, y: ExtendedAffineElement) -> bool {
        let (lx, ly) = (self.length(&x), self.length(&y));
        if lx > ly {
            return false;
        }
        if lx == ly {
            return x == y;
        }
        let g = (0..=self.rank()).find(|&g| self.has_left_descent(g, &y)).unwrap();
        let sy = self.mul(&self.gen(g), &y);
        if self.has_left_descent(g, &x) {
            self.bruhat_leq_hat(self.mul(&self.gen(g), &x), sy)
        } else {
            self.bruhat_leq_hat(x, sy)
        }
    }

    /// Positive real affine roots β with x·β < 0.
    pub fn inversions(&self, x: &ExtendedAffineElement) -> Vec<AffineRoot> {
        let mut out = Vec::new();
        for (k, a) in self.rs.positive_roots().iter().enumerate() {
            let p = a.pair(&x.t);
            let neg = self.w.is_inversion(x.u, k);
            for n in 0..p.max(0) {
                out.push(AffineRoot::new(*a, n));
            }
            if neg && p >= 0 {
                out.push(AffineRoot::new(*a, p));
            }
            for n in 1..(-p) {
                out.push(AffineRoot::new(-*a, n));
            }
            if !neg && p <= -1 {
                out.push(AffineRoot::new(-*a, -p));
            }
        }
        out
    }

    /// Pairs (β, x·s_β) with x·s_β ⋖ x.
    pub fn lower_covers(&self, x: &ExtendedAffineElement) -> Vec<(AffineRoot, ExtendedAffineElement)> {
        let l = self.length(x);
        self.inversions(x)
            .into_iter()
            .filter_map(|b| {
                let y = self.mul(x, &self.affine_reflection(&b).unwrap());
                (self.length(&y) + 1 == l).then_some((b, y))
            })
            .collect()
    }

    /// Membership in W̃⁻: λ antidominant and ⟨λ, α_i⟩ = 0 ⇒ u(α_i) > 0.
    pub fn is_in_waffm(&self, x: &ExtendedAffineElement) -> bool {
        (1..=self.rank()).all(|i| {
            let p = x.t.get(i);
            p < 0 || (p == 0 && self.w.act_root(x.u, &self.rs.simple_root(i)).is_positive())
        })
    }

    /// Membership in (W̃^P)_aff.
    pub fn is_in_wpaff(&self, x: &ExtendedAffineElement, nodes: &[usize]) -> bool {
        self.rs.parabolic_positive_roots(nodes).into_iter().all(|k| {
            let g = self.rs.positive_roots()[k];
            let want = if self.w.is_inversion(x.u, k) { -1 } else { 0 };
            g.pair(&x.t) == want
        })
    }

    /// The factor w₁ ∈ (W̃^P)_aff of x = w₁w₂ with w₂ ∈ (W_P)_aff,
    /// solved directly for the Q∨_P translation per element of W_P.
    /// w₁ is the unique element of x(W_P)_aff sending R_P⁺ + Zε positive roots
    /// to positive roots; it has minimal length in the coset.
    pub fn pi_p(&self, x: &ExtendedAffineElement, nodes: &[usize]) -> Result<ExtendedAffineElement> {
        if nodes.is_empty() {
            return Ok(*x);
        }
        let np = nodes.len();
        let sub: Vec<Vec<crate::scalars::Rational>> = nodes
            .iter()
            .map(|&i| nodes.iter().map(|&j| crate::scalars::Rational::from_integer(self.rs.a(j, i) as i64)).collect())
            .collect();
        // ⟨Σ c_j α_j∨, α_i⟩ = Σ_j c_j a[j][i]; `inv` solves for c.
        let inv = crate::linalg::invert(&sub).expect("parabolic Cartan matrix is invertible");
        let mut found = Vec::new();
        for v in self.w.parabolic_subgroup(nodes) {
            let u1 = self.w.mul(x.u, self.w.inverse(v));
            let vl = self.w.act_coweight(v, &x.t);
            let target: Vec<crate::scalars::Rational> = nodes
                .iter()
                .map(|&i| {
                    let neg = !self.w.act_root(u1, &self.rs.simple_root(i)).is_positive();
                    crate::scalars::Rational::from_integer((vl.get(i) + neg as i32) as i64)
                })
                .collect();
            let c: Vec<_> = (0..np).map(|a| (0..np).map(|b| inv[a][b] * target[b]).sum::<crate::scalars::Rational>()).collect();
            if c.iter().any(|q| !q.is_integer()) {
                continue;
            }
            let mut kappa = Coweight::zero(self.rank());
            for (a, &j) in nodes.iter().enumerate() {
                kappa = kappa + self.rs.simple_coroot(j).scale(c[a].to_integer() as i32);
            }
            let w1 = ExtendedAffineElement { u: u1, t: vl - kappa };
            if self.is_in_wpaff(&w1, nodes) {
                found.push(w1);
            }
        }
        match found.len() {
            1 => Ok(found[0]),
            n => Err(Error::Precondition(format!("{n} factorizations found for {}", self.format_elem(x)))),
        }
    }

    /// Length of v t_μ inside (W_P)_aff, as the affine Weyl group of the Levi.
    pub fn parabolic_length(&self, x: &ExtendedAffineElement, nodes: &[usize]) -> usize {
        self.rs
            .parabolic_positive_roots(nodes)
            .into_iter()
            .map(|k| (self.rs.positive_roots()[k].pair(&x.t) + self.w.is_inversion(x.u, k) as i32).unsigned_abs() as usize)
            .sum()
    }

    /// Translations λ∨ ∈ Q∨_P for the parabolic `nodes`.
    pub fn in_parabolic_coroot_lattice(&self, l: &Coweight, nodes: &[usize]) -> bool {
        match self.rs.coroot_coordinates(l) {
            Some(c) => c.iter().enumerate().all(|(j, &x)| x == 0 || nodes.contains(&(j + 1))),
            None => false,
        }
    }

    /// All elements of W̃ with ℓ ≤ max_len, grouped by increasing length.
    pub fn elements_up_to_length(&self, max_len: usize) -> Vec<ExtendedAffineElement> {
        let starts: Vec<_> = self.z.iter().map(|z| z.elem).collect();
        self.bfs(&starts, max_len, |_| true)
    }

    /// Elements of W̃⁻ with ℓ ≤ max_len, optionally restricted to one Z-component.
    pub fn waffm_up_to_length(&self, max_len: usize, component: Option<usize>) -> Vec<ExtendedAffineElement> {
        let starts: Vec<_> = self
            .z
            .iter()
            .enumerate()
            .filter(|(k, _)| component.is_none_or(|c| c == *k))
            .map(|(_, z)| z.elem)
            .collect();
        self.bfs(&starts, max_len, |x| self.is_in_waffm(x))
    }

    fn bfs(&self, starts: &[ExtendedAffineElement], max_len: usize, keep: impl Fn(&ExtendedAffineElement) -> bool) -> Vec<ExtendedAffineElement> {
        let mut out: Vec<ExtendedAffineElement> = starts.to_vec();
        let mut layer = starts.to_vec();
        for _ in 0..max_len {
            let mut next = Vec::new();
            let mut seen = HashSet::new();
            for x in &layer {
                for g in 0..=self.rank() {
                    if self.has_left_descent(g, x) {
                        continue;
                    }
                    let y = self.mul(&self.gen(g), x);
                    if keep(&y) && seen.insert(y) {
                        next.push(y);
                    }
                }
            }
            next.sort_by_cached_key(|y| self.sort_key(y));
            out.extend_from_slice(&next);
            layer = next;
        }
        out
    }

    /// Deterministic ordering: length, Z-component, shortlex word.
    pub fn sort_key(&self, x: &ExtendedAffineElement) -> (usize, usize, Vec<usize>) {
        let (k, w) = self.reduced_word(x);
        (w.len(), k, w)
    }

    pub fn format_elem(&self, x: &ExtendedAffineElement) -> String {
        let (k, word) = self.reduced_word(x);
        let mut parts = Vec::new();
        if k != 0 {
            parts.push(match self.z[k].node {
                Some(i) => format!("tau{i}"),
                None => format!("z{k}"),
            });
        }
        parts.extend(word.iter().map(|g| format!("s{g}")));
        if parts.is_empty() {
            "e".into()
        } else {
            parts.join(" ")
        }
    }

    /// Parses a product of tokens `e`, `s0..sr`, `t[c1,..,cr]`, `tau<i>`.
    pub fn parse_elem(&self, s: &str) -> Result<ExtendedAffineElement> {
        let bytes = s.as_bytes();
        let mut pos = 0;
        let mut x = self.identity();
        let err = |pos: usize, msg: String| Error::Parse { pos, msg };
        let number = |pos: &mut usize| -> Option<i64> {
            let start = *pos;
            if *pos < bytes.len() && bytes[*pos] == b'-' {
                *pos += 1;
            }
            while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
                *pos += 1;
            }
            s[start..*pos].parse().ok()
        };
        let mut any = false;
        loop {
            while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
                pos += 1;
            }
            if pos >= bytes.len() {
                break;
            }
            let at = pos;
            any = true;
            let tok = if s[pos..].starts_with("tau") {
                pos += 3;
                let i = number(&mut pos).ok_or_else(|| err(pos, "expected node index after `tau`".into()))?;
                if i <= 0 || i as usize > self.rank() {
                    return Err(err(at, format!("undefined generator tau{i}")));
                }
                self.tau(i as usize).map_err(|_| err(at, format!("node {i} is not minuscule")))?.elem
            } else if bytes[pos] == b's' {
                pos += 1;
                let g = number(&mut pos).ok_or_else(|| err(pos, "expected generator index after `s`".into()))?;
                if g < 0 || g as usize > self.rank() {
                    return Err(err(at, format!("undefined generator s{g}")));
                }
                self.gen(g as usize)
            } else if bytes[pos] == b't' {
                pos += 1;
                if pos >= bytes.len() || bytes[pos] != b'[' {
                    return Err(err(pos, "expected `[` after `t`".into()));
                }
                pos += 1;
                let mut c = Vec::new();
                loop {
                    while pos < bytes.len() && bytes[pos] == b' ' {
                        pos += 1;
                    }
                    let v = number(&mut pos).ok_or_else(|| err(pos, "expected integer".into()))?;
                    c.push(v as i32);
                    while pos < bytes.len() && bytes[pos] == b' ' {
                        pos += 1;
                    }
                    match bytes.get(pos) {
                        Some(b',') => pos += 1,
                        Some(b']') => {
                            pos += 1;
                            break;
                        }
                        _ => return Err(err(pos, "expected `,` or `]`".into())),
                    }
                }
                if c.len() != self.rank() {
                    return Err(err(at, format!("translation has {} coordinates, rank is {}", c.len(), self.rank())));
                }
                self.translation(Coweight::new(&c))
            } else if bytes[pos] == b'e' && (pos + 1 == bytes.len() || bytes[pos + 1].is_ascii_whitespace()) {
                pos += 1;
                self.identity()
            } else {
                return Err(err(at, "unknown token".into()));
            };
            x = self.mul(&x, &tok);
        }
        if !any {
            return Err(err(0, "empty element".into()));
        }
        Ok(x)
    }

    /// Orbit {w(μ)} with minimal coset representatives, for the translation j-map.
    pub fn coweight_orbit(&self, m: &Coweight) -> Vec<(WeylElement, Coweight)> {
        self.w.stabilizer_cosets(m).into_iter().map(|w| (w, self.w.act_coweight(w, m))).collect()
    }

    pub fn root_from_coords(&self, c: &[i32]) -> Root {
        Root::new(c)
    }

    /// Lookup map from element to position, for tests and tables.
    pub fn index_map(elems: &[ExtendedAffineElement]) -> HashMap<ExtendedAffineElement, usize> {
        elems.iter().enumerate().map(|(k, x)| (*x, k)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basics_a1() {
        let c = Context::new("A1").unwrap();
        let s0 = c.gen(0);
        let s1 = c.gen(1);
        let a = c.rs.simple_coroot(1);
        assert_eq!(c.mul(&s0, &s1), c.translation(a));
        assert_eq!(c.length(&c.translation(a)), 2);
        assert_eq!(c.format_elem(&c.translation(a)), "s0 s1");
        let t = c.translation(a);
        let img = c.act_affine_root(&t, &AffineRoot::new(c.rs.simple_root(1), 0));
        assert_eq!(img, AffineRoot::new(c.rs.simple_root(1), -2));
        assert_eq!(c.act_affine_root(&s0, &c.rs.affine_simple_root(0)), -c.rs.affine_simple_root(0));
        assert_eq!(c.z_elements().len(), 2);
        let tau = c.tau(1).unwrap();
        assert_eq!(c.length(&tau.elem), 0);
        assert_eq!(tau.perm, vec![1, 0]);
    }

    #[test]
    fn a3_tau() {
        let c = Context::new("A3").unwrap();
        let tau = c.tau(1).unwrap();
        assert_eq!(c.w.format(tau.elem.u), "s3 s2 s1");
        assert_eq!(tau.elem.t.coords(), &[-1, 0, 0]);
        assert_eq!(tau.perm, vec![3, 0, 1, 2]);
        let (k, h) = c.decompose_z(&tau.elem);
        assert_eq!((k, h), (1, c.identity()));
        let x = c.parse_elem("s2 s1 s0").unwrap();
        assert_eq!(c.format_elem(&x), "s2 s1 s0");
        assert!(c.is_in_waffm(&x));
        let y = c.parse_elem("tau1 t[-1,0,0]").unwrap();
        assert_eq!(y, c.mul(&tau.elem, &c.translation(Coweight::new(&[-1, 0, 0]))));
        assert_eq!(c.parse_elem(&c.format_elem(&y)).unwrap(), y);
        assert!(c.parse_elem("s4").is_err());
        assert!(matches!(c.parse_elem("s1 q"), Err(Error::Parse { pos: 3, .. })));
        assert!(c.parse_elem("tau2").is_ok());
    }

    #[test]
    fn bruhat_components() {
        let c = Context::new("A1").unwrap();
        let s0 = c.gen(0);
        let t = c.mul(&s0, &c.gen(1));
        assert!(c.bruhat_leq(&s0, &t));
        assert!(c.bruhat_leq(&c.identity(), &t));
        assert!(!c.bruhat_leq(&c.tau(1).unwrap().elem, &t));
    }

    #[test]
    fn covers_match_length() {
        let c = Context::new("A2").unwrap();
        for x in c.elements_up_to_length(4) {
            assert_eq!(c.inversions(&x).len(), c.length(&x));
            for (_, y) in c.lower_covers(&x) {
                assert!(c.bruhat_leq(&y, &x));
            }
        }
    }

    #[test]
    fn grassmannian_membership() {
        for t in ["A2", "A3", "B2", "C3", "D4"] {
            let c = Context::new(t).unwrap();
            assert!(c.is_in_waffm(&c.identity()));
            assert!(!c.is_in_waffm(&c.gen(1)));
            for z in c.z_elements() {
                assert!(c.is_in_waffm(&z.elem), "{t}");
            }
        }
    }

    #[test]
    fn pi_p_finite() {
        let c = Context::new("A2").unwrap();
        for w in c.w.min_coset_reps(&[2]) {
            assert_eq!(c.pi_p(&c.weyl(w), &[2]).unwrap(), c.weyl(w));
        }
        let x = c.translation(Coweight::new(&[-2, -1]));
        let p = c.pi_p(&x, &[2]).unwrap();
        assert!(c.is_in_wpaff(&p, &[2]));
    }
}
