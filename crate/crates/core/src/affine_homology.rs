//! H_*^T(ΩK^ad) as the module M̃ with basis ξ̃_w, w ∈ W̃⁻.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::Zero;

use crate::affine_weyl::ExtendedAffineElement;
use crate::context::Context;
use crate::error::{Error, Result};
use crate::lattice::Coweight;
use crate::linalg::{from_big, reconstruct, to_big, to_mod, ModSolver, SparseSolver};
use crate::nilhecke::NilHeckeElement;
use crate::scalars::{Monomial, Polynomial};
use crate::weyl::WeylElement;

/// Σ p_w ξ̃_w with every w in W̃⁻.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HomologyElement {
    terms: HashMap<ExtendedAffineElement, Polynomial>,
}

impl HomologyElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, x: &ExtendedAffineElement) -> Polynomial {
        self.terms.get(x).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExtendedAffineElement, &Polynomial)> {
        self.terms.iter()
    }

    fn add_term_unchecked(&mut self, x: ExtendedAffineElement, p: &Polynomial) {
        if p.is_zero() {
            return;
        }
        let e = self.terms.entry(x).or_default();
        *e += p;
        if e.is_zero() {
            self.terms.remove(&x);
        }
    }

    pub fn add(&self, o: &HomologyElement) -> Self {
        let mut r = self.clone();
        for (x, p) in &o.terms {
            r.add_term_unchecked(*x, p);
        }
        r
    }

    pub fn sub(&self, o: &HomologyElement) -> Self {
        self.add(&o.scale(&Polynomial::integer(-1)))
    }

    pub fn scale(&self, c: &Polynomial) -> Self {
        let mut r = Self::zero();
        for (x, p) in &self.terms {
            r.add_term_unchecked(*x, &(c * p));
        }
        r
    }

    /// Sets every equivariant parameter to zero.
    pub fn specialize_zero(&self) -> Self {
        let mut r = Self::zero();
        for (x, p) in &self.terms {
            r.add_term_unchecked(*x, &p.specialize_zero());
        }
        r
    }
}

/// The two presentations of a class: Σ h_λ ⊗ m_λ and Σ τ ⊗ m_τ with m in M.
#[derive(Clone, Debug)]
pub struct ClassViews {
    pub translation_form: Vec<(Coweight, HomologyElement)>,
    pub z_form: Vec<(usize, HomologyElement)>,
}

impl Context {
    pub fn xi(&self, w: &ExtendedAffineElement) -> Result<HomologyElement> {
        self.xi_scaled(w, Polynomial::one())
    }

    pub fn xi_scaled(&self, w: &ExtendedAffineElement, p: Polynomial) -> Result<HomologyElement> {
        if !self.is_in_waffm(w) {
            return Err(Error::NotGrassmannian(self.format_elem(w)));
        }
        let mut m = HomologyElement::zero();
        m.add_term_unchecked(*w, &p);
        Ok(m)
    }

    /// ψ̃_{t_μ} = δ_{t_μ}·ξ̃_e.
    pub fn translation_class(&self, m: &Coweight) -> HomologyElement {
        self.module_action(&self.delta_to_a(&self.translation(*m)), &self.unit_class())
    }

    pub fn unit_class(&self) -> HomologyElement {
        self.xi(&self.identity()).unwrap()
    }

    pub fn module_action(&self, a: &NilHeckeElement, m: &HomologyElement) -> HomologyElement {
        let mut r = HomologyElement::zero();
        for (x, p) in a.terms() {
            for (u, q) in m.terms() {
                let moved = self.basis_times_poly(x, q);
                for (z, c) in moved.terms() {
                    let zu = self.mul(z, u);
                    if self.length(&zu) == self.length(z) + self.length(u) && self.is_in_waffm(&zu) {
                        r.add_term_unchecked(zu, &(p * c));
                    }
                }
            }
        }
        r
    }

    /// Σ_{w ∈ W/W_μ} Ã_{t_{w(μ)}} for antidominant μ.
    pub fn j_ad_translation(&self, m: &Coweight) -> Result<NilHeckeElement> {
        self.check_coweight(m)?;
        if !self.rs.is_antidominant(m) {
            return Err(Error::NotAntidominant(m.to_string()));
        }
        let mut r = NilHeckeElement::zero();
        for (_, wm) in self.coweight_orbit(m) {
            r.add_term(self.translation(wm), &Polynomial::one());
        }
        Ok(r)
    }

    /// τ_i(w) = τ_i w τ_i⁻¹.
    fn conjugate_by(&self, tau: &ExtendedAffineElement, x: &ExtendedAffineElement) -> ExtendedAffineElement {
        self.mul(&self.mul(tau, x), &self.inverse(tau))
    }

    /// j(ξ_{τ_i(v_i)}) by the closed double sum.
    pub fn j_pieri(&self, i: usize) -> Result<NilHeckeElement> {
        let vi = self.v_of_node(i)?;
        let expansion = self.delta_to_a(&self.weyl(self.w.inverse(vi)));
        self.j_pieri_with_expansion(i, &expansion)
    }

    /// The double sum with a supplied A-expansion of δ_{v_i⁻¹}.
    pub fn j_pieri_with_expansion(&self, i: usize, expansion: &NilHeckeElement) -> Result<NilHeckeElement> {
        let tau = self.tau(i)?.elem;
        let vi = self.v_of_node(i)?;
        let mut r = NilHeckeElement::zero();
        for w in self.w.elements().filter(|&w| self.w.weak_left_leq(w, vi)) {
            let tw = self.conjugate_by(&tau, &self.weyl(w));
            let lead = self.mul(&tw, &self.weyl(self.w.mul(vi, self.w.inverse(w))));
            for (v, c) in expansion.terms() {
                if let Some(y) = self.basis_product(&lead, v) {
                    r.add_term(y, &self.act_poly(&tau, c));
                }
            }
        }
        Ok(r)
    }

    /// The unique centralizing element Ã_w + Σ c_{x,v} Ã_x A_v (v ≠ e).
    pub fn solve_j_general(&self, w: &ExtendedAffineElement) -> Result<NilHeckeElement> {
        if !self.is_in_waffm(w) {
            return Err(Error::NotGrassmannian(self.format_elem(w)));
        }
        if let Some(j) = self.j_cache.read().unwrap().get(w) {
            return Ok((**j).clone());
        }
        let lw = self.length(w);
        if lw > self.j_length_bound {
            return Err(Error::BoundExceeded { len: lw, max: self.j_length_bound });
        }
        let r = self.rank();
        let xs = self.waffm_up_to_length(lw, Some(self.z_component(w)));
        let mut unknowns: Vec<(ExtendedAffineElement, Monomial)> = Vec::new();
        for x in &xs {
            for v in self.w.elements().skip(1) {
                let d = self.length(x) + self.w.length(v);
                if d < lw {
                    continue;
                }
                let y = self.mul(x, &self.weyl(v));
                for m in Monomial::all_of_degree(r, (d - lw) as u32) {
                    unknowns.push((y, m));
                }
            }
        }
        // equations: for each α_i, the coefficient of (Ã_z, monomial) in [J, α_i]
        type Key = (usize, ExtendedAffineElement, Monomial);
        let mut rows: HashMap<Key, Vec<(usize, BigRational)>> = HashMap::new();
        let mut rhs: HashMap<Key, BigRational> = HashMap::new();
        for i in 1..=r {
            let a = self.simple_root_poly(i);
            let comm = |y: &ExtendedAffineElement| self.basis_times_poly(y, &a).sub(&NilHeckeElement::term(*y, a.clone()));
            for (z, p) in comm(w).terms() {
                for (m, c) in p.terms() {
                    *rhs.entry((i, *z, *m)).or_insert_with(BigRational::zero) -= to_big(c);
                    rows.entry((i, *z, *m)).or_default();
                }
            }
            let mut last: Option<(ExtendedAffineElement, NilHeckeElement)> = None;
            for (k, (y, mono)) in unknowns.iter().enumerate() {
                if last.as_ref().is_none_or(|(ly, _)| ly != y) {
                    last = Some((*y, comm(y)));
                }
                let cy = &last.as_ref().unwrap().1;
                for (z, p) in cy.terms() {
                    for (m, c) in p.terms() {
                        rows.entry((i, *z, m.mul(mono))).or_default().push((k, to_big(c)));
                    }
                }
            }
        }
        let mut keys: Vec<&Key> = rows.keys().collect();
        keys.sort();
        let n = unknowns.len();
        // longest unknowns get the smallest indices, so they are pivoted first
        let equations: Vec<(Vec<(usize, BigRational)>, BigRational)> = keys
            .into_iter()
            .map(|key| {
                let b = rhs.get(key).cloned().unwrap_or_else(BigRational::zero);
                (rows[key].iter().map(|(k, c)| (n - 1 - k, c.clone())).collect(), b)
            })
            .collect();
        let assemble = |vals: &[crate::scalars::Rational]| {
            let mut j = NilHeckeElement::basis(*w);
            for ((y, m), val) in unknowns.iter().zip(vals.iter().rev()) {
                j.add_term(*y, &Polynomial::monomial(*m, *val));
            }
            j
        };
        let j = match solve_modular(n, &equations).map(|v| assemble(&v)) {
            Some(j) if self.centralizes(&j) => j,
            _ => {
                let mut solver = SparseSolver::new(n);
                for (row, b) in equations {
                    solver.add_equation(row, b)?;
                }
                let vals = solver.solve()?.iter().map(from_big).collect::<Result<Vec<_>>>()?;
                let j = assemble(&vals);
                if !self.centralizes(&j) {
                    return Err(Error::Inconsistent(format!("solution for {} is not central", self.format_elem(w))));
                }
                j
            }
        };
        self.j_cache.write().unwrap().insert(*w, Arc::new(j.clone()));
        Ok(j)
    }

}

/// Solves mod p and lifts by rational reconstruction; `None` if any step fails.
fn solve_modular(n: usize, equations: &[(Vec<(usize, BigRational)>, BigRational)]) -> Option<Vec<crate::scalars::Rational>> {
    let mut solver = ModSolver::new(n);
    for (row, b) in equations {
        let row: Option<Vec<(usize, u64)>> = row.iter().map(|(k, c)| to_mod(c).map(|m| (*k, m))).collect();
        solver.add_equation(row?, to_mod(b)?).ok()?;
    }
    solver.solve().ok()?.into_iter().map(reconstruct).collect()
}

impl Context {
    /// a·α_i = α_i·a for every i, hence a ∈ Z(S).
    pub fn centralizes(&self, a: &NilHeckeElement) -> bool {
        (1..=self.rank()).all(|i| {
            let p = self.simple_root_poly(i);
            self.nh_mul_scalar(a, &p) == a.scale(&p)
        })
    }

    /// j^ad(ξ̃_w), by closed form where one applies and by the solver otherwise.
    pub fn j_basis(&self, w: &ExtendedAffineElement) -> Result<NilHeckeElement> {
        if !self.is_in_waffm(w) {
            return Err(Error::NotGrassmannian(self.format_elem(w)));
        }
        if w.u == self.w.identity() {
            return self.j_ad_translation(&w.t);
        }
        self.solve_j_general(w)
    }

    pub fn j(&self, m: &HomologyElement) -> Result<NilHeckeElement> {
        let mut r = NilHeckeElement::zero();
        for (w, p) in m.terms() {
            r.add_scaled(&self.j_basis(w)?, p);
        }
        Ok(r)
    }

    /// m1 × m2 = j(m1)·m2.
    pub fn pontryagin_product(&self, m1: &HomologyElement, m2: &HomologyElement) -> Result<HomologyElement> {
        Ok(self.module_action(&self.j(m1)?, m2))
    }

    pub fn pushforward(&self, u: WeylElement, m: &HomologyElement) -> HomologyElement {
        self.module_action(&self.delta_to_a(&self.weyl(u)), m)
    }

    /// (σ·m1) × (τ·m2) = στ·(ψ_{σ,τ} × v⁻¹_* m1 × u⁻¹_* m2) for σ = u t_λ, τ = v t_μ.
    pub fn product_extended(&self, sigma: usize, m1: &HomologyElement, tau: usize, m2: &HomologyElement) -> Result<HomologyElement> {
        let zs = self.z_elements();
        let (s, t) = match (zs.get(sigma), zs.get(tau)) {
            (Some(s), Some(t)) => (s.elem, t.elem),
            _ => return Err(Error::Precondition("index is not an element of Z".into())),
        };
        for m in [m1, m2] {
            if m.terms().any(|(x, _)| !self.in_affine_weyl(x)) {
                return Err(Error::Precondition("factors must lie in the Q∨ component".into()));
            }
        }
        let (u, l) = (s.u, s.t);
        let (v, mu) = (t.u, t.t);
        let psi = self.w.act_coweight(self.w.inverse(u), &mu) - mu;
        let other = self.w.act_coweight(self.w.inverse(v), &l) - l;
        if psi != other {
            return Err(Error::Inconsistent(format!("ψ_{{σ,τ}} is ill-defined: {psi} vs {other}")));
        }
        let p = self.pontryagin_product(&self.pushforward(self.w.inverse(v), m1), &self.pushforward(self.w.inverse(u), m2))?;
        let shifted = self.module_action(&self.delta_to_a(&self.translation(psi)), &p);
        Ok(self.module_action(&NilHeckeElement::basis(self.mul(&s, &t)), &shifted))
    }

    /// Drops the classes outside (W̃^P)_aff.
    pub fn reduce_mod_jp(&self, m: &HomologyElement, nodes: &[usize]) -> HomologyElement {
        let mut r = HomologyElement::zero();
        for (x, p) in m.terms() {
            if self.is_in_wpaff(x, nodes) {
                r.add_term_unchecked(*x, p);
            }
        }
        r
    }

    /// The single Schubert class of ξ_{τ_i(v_i)}·ξ_x in non-equivariant homology.
    pub fn nonequiv_pieri(&self, i: usize, x: &ExtendedAffineElement) -> Result<ExtendedAffineElement> {
        let tau = self.tau(i)?.elem;
        let vi = self.v_of_node(i)?;
        let target = self.w.length(vi) + self.length(x);
        let found: Vec<ExtendedAffineElement> = self
            .w
            .elements()
            .filter(|&w| self.w.weak_left_leq(w, vi))
            .map(|w| {
                let tw = self.conjugate_by(&tau, &self.weyl(w));
                let y = self.mul(&tw, &self.weyl(self.w.mul(vi, self.w.inverse(w))));
                self.mul(&y, x)
            })
            .filter(|y| self.length(y) == target && self.is_in_waffm(y))
            .collect();
        match found.as_slice() {
            [y] => Ok(*y),
            _ => Err(Error::Inconsistent(format!("{} Pieri candidates for {}", found.len(), self.format_elem(x)))),
        }
    }

    pub fn decompose_class(&self, m: &HomologyElement) -> ClassViews {
        let mut by_tr: HashMap<usize, HomologyElement> = HashMap::new();
        let mut by_z: HashMap<usize, HomologyElement> = HashMap::new();
        for (x, p) in m.terms() {
            let (k, xh) = self.decompose_z(x);
            let lam = self.z[k].elem.t;
            let single = {
                let mut s = HomologyElement::zero();
                s.add_term_unchecked(*x, p);
                s
            };
            let back = self.module_action(&self.delta_to_a(&self.translation(-lam)), &single);
            let e = by_tr.entry(k).or_default();
            *e = e.add(&back);
            // A_τ·(c ξ_x̂) = τ(c) ξ_{τx̂}
            let untwisted = self.act_poly(&self.inverse(&self.z[k].elem), p);
            by_z.entry(k).or_default().add_term_unchecked(xh, &untwisted);
        }
        let mut translation_form: Vec<(Coweight, HomologyElement)> = by_tr.into_iter().map(|(k, m)| (self.z[k].elem.t, m)).collect();
        translation_form.sort_by_key(|(l, _)| *l);
        let mut z_form: Vec<(usize, HomologyElement)> = by_z.into_iter().collect();
        z_form.sort_by_key(|(k, _)| *k);
        ClassViews { translation_form, z_form }
    }

    pub fn recompose_translation_form(&self, parts: &[(Coweight, HomologyElement)]) -> HomologyElement {
        parts.iter().fold(HomologyElement::zero(), |acc, (l, m)| acc.add(&self.module_action(&self.delta_to_a(&self.translation(*l)), m)))
    }

    pub fn recompose_z_form(&self, parts: &[(usize, HomologyElement)]) -> HomologyElement {
        parts
            .iter()
            .fold(HomologyElement::zero(), |acc, (k, m)| acc.add(&self.module_action(&NilHeckeElement::basis(self.z[*k].elem), m)))
    }

    /// Terms sorted by (length, component, word), for display.
    pub fn sorted_terms<'a>(&self, m: &'a HomologyElement) -> Vec<(&'a ExtendedAffineElement, &'a Polynomial)> {
        let mut t: Vec<_> = m.terms().collect();
        t.sort_by_cached_key(|(x, _)| self.sort_key(x));
        t
    }

    pub fn sorted_nh_terms<'a>(&self, a: &'a NilHeckeElement) -> Vec<(&'a ExtendedAffineElement, &'a Polynomial)> {
        let mut t: Vec<_> = a.terms().collect();
        t.sort_by_cached_key(|(x, _)| self.sort_key(x));
        t
    }

    /// `coeff*[elem] + ...` with `sym` as the basis symbol.
    pub fn format_combination(&self, terms: &[(&ExtendedAffineElement, &Polynomial)], sym: &str) -> String {
        if terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (x, p)) in terms.iter().enumerate() {
            let c = self.format_poly(p);
            let body = if p.is_one() {
                format!("{sym}[{}]", self.format_elem(x))
            } else if p.num_terms() == 1 {
                format!("{c}*{sym}[{}]", self.format_elem(x))
            } else {
                format!("({c})*{sym}[{}]", self.format_elem(x))
            };
            if k > 0 {
                if let Some(rest) = body.strip_prefix('-') {
                    out.push_str(" - ");
                    out.push_str(rest);
                    continue;
                }
                out.push_str(" + ");
            }
            out.push_str(&body);
        }
        out
    }

    pub fn format_homology(&self, m: &HomologyElement) -> String {
        self.format_combination(&self.sorted_terms(m), "xi")
    }

    pub fn format_nh(&self, a: &NilHeckeElement) -> String {
        self.format_combination(&self.sorted_nh_terms(a), "A")
    }
}

impl fmt::Display for ClassViews {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} translation parts, {} Z parts", self.translation_form.len(), self.z_form.len())
    }
}
