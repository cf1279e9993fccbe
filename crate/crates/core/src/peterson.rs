//! Peterson's map to QH*_T(G/P), the Weyl •-action and the cominuscule product.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::affine_homology::HomologyElement;
use crate::affine_weyl::ExtendedAffineElement;
use crate::context::Context;
use crate::error::{Error, Result};
use crate::lattice::Coweight;
use crate::scalars::Polynomial;
use crate::weyl::WeylElement;

/// Σ c·q_ν σ^P(w); ν is stored in η_P coordinates (one per node outside I_P).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantumClass {
    nodes: Vec<usize>,
    terms: BTreeMap<(Vec<i32>, WeylElement), Polynomial>,
}

impl QuantumClass {
    pub fn zero(nodes: &[usize]) -> Self {
        let mut nodes = nodes.to_vec();
        nodes.sort_unstable();
        QuantumClass { nodes, terms: BTreeMap::new() }
    }

    pub fn term(nodes: &[usize], q: Vec<i32>, w: WeylElement, c: Polynomial) -> Self {
        let mut r = Self::zero(nodes);
        r.add_term(q, w, &c);
        r
    }

    pub fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &WeylElement, &Polynomial)> {
        self.terms.iter().map(|((q, w), c)| (q, w, c))
    }

    pub fn coeff(&self, q: &[i32], w: WeylElement) -> Polynomial {
        self.terms.get(&(q.to_vec(), w)).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, q: Vec<i32>, w: WeylElement, c: &Polynomial) {
        if c.is_zero() {
            return;
        }
        let key = (q, w);
        let e = self.terms.entry(key.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, o: &QuantumClass) -> Self {
        let mut r = self.clone();
        for ((q, w), c) in &o.terms {
            r.add_term(q.clone(), *w, c);
        }
        r
    }

    pub fn sub(&self, o: &QuantumClass) -> Self {
        self.add(&o.scale(&Polynomial::integer(-1)))
    }

    pub fn scale(&self, c: &Polynomial) -> Self {
        let mut r = Self::zero(&self.nodes);
        for ((q, w), p) in &self.terms {
            r.add_term(q.clone(), *w, &(c * p));
        }
        r
    }

    /// Multiplication by q_ν.
    pub fn shift(&self, nu: &[i32]) -> Self {
        let mut r = Self::zero(&self.nodes);
        for ((q, w), p) in &self.terms {
            let q2 = q.iter().zip(nu).map(|(a, b)| a + b).collect();
            r.add_term(q2, *w, p);
        }
        r
    }

    pub fn specialize_zero(&self) -> Self {
        let mut r = Self::zero(&self.nodes);
        for ((q, w), p) in &self.terms {
            r.add_term(q.clone(), *w, &p.specialize_zero());
        }
        r
    }
}

impl Context {
    /// η_P(λ): coroot coordinates with the I_P entries removed.
    pub fn eta_p(&self, l: &Coweight, nodes: &[usize]) -> Result<Vec<i32>> {
        let c = self.rs.coroot_coordinates(l).ok_or_else(|| Error::NotInCorootLattice(l.to_string()))?;
        Ok(c.iter().enumerate().filter(|(j, _)| !nodes.contains(&(j + 1))).map(|(_, &x)| x).collect())
    }

    /// The coroot Σ c_j α_j∨ over the nodes outside I_P.
    pub fn eta_p_lift(&self, q: &[i32], nodes: &[usize]) -> Coweight {
        let outside: Vec<usize> = (1..=self.rank()).filter(|j| !nodes.contains(j)).collect();
        outside.iter().zip(q).fold(Coweight::zero(self.rank()), |acc, (&j, &c)| acc + self.rs.simple_coroot(j).scale(c))
    }

    /// deg q_ν = Σ_{α ∈ R⁺∖R_P⁺} ⟨ν, α⟩.
    pub fn quantum_degree(&self, q: &[i32], nodes: &[usize]) -> i64 {
        let nu = self.eta_p_lift(q, nodes);
        let inside = self.rs.parabolic_positive_roots(nodes);
        self.rs
            .positive_roots()
            .iter()
            .enumerate()
            .filter(|(k, _)| !inside.contains(k))
            .map(|(_, a)| a.pair(&nu) as i64)
            .sum()
    }

    /// ξ_x ↦ q_{η_P(μ)} σ^P(w) for x = u t_μ = w·π_P(t_λ).
    pub fn peterson_basis(&self, x: &ExtendedAffineElement, nodes: &[usize]) -> Result<(Vec<i32>, WeylElement)> {
        self.check_nodes(nodes)?;
        let name = || self.format_elem(x);
        if !self.is_in_waffm(x) || !self.is_in_wpaff(x, nodes) {
            return Err(Error::Precondition(format!("{} is not in W⁻ ∩ (W^P)_aff", name())));
        }
        let q = self.eta_p(&x.t, nodes)?;
        let w = self.w.min_coset_rep(x.u, nodes);
        let v = self.w.mul(self.w.inverse(w), x.u);
        if self.find_antidominant_lift(x, v, nodes).is_none() {
            return Err(Error::Precondition(format!("{} is not of the form w·π_P(t_λ)", name())));
        }
        let lhs = self.quantum_degree(&q, nodes) + self.w.length(w) as i64;
        if lhs != -(self.length(x) as i64) {
            return Err(Error::Inconsistent(format!("grading fails for {}", name())));
        }
        Ok((q, w))
    }

    /// Antidominant λ = v(μ) + κ, κ ∈ Q∨_P, with π_P(t_λ) = v t_μ.
    fn find_antidominant_lift(&self, x: &ExtendedAffineElement, v: WeylElement, nodes: &[usize]) -> Option<Coweight> {
        let target = ExtendedAffineElement { u: v, t: x.t };
        let base = self.w.act_coweight(v, &x.t);
        let bound = 2 * self.length(x) as i32 + 2;
        let mut kappa = vec![-bound; nodes.len()];
        loop {
            let l = nodes.iter().zip(&kappa).fold(base, |acc, (&j, &c)| acc + self.rs.simple_coroot(j).scale(c));
            if self.rs.is_antidominant(&l) && self.pi_p(&self.translation(l), nodes).ok() == Some(target) {
                return Some(l);
            }
            let mut k = 0;
            loop {
                if k == kappa.len() {
                    return None;
                }
                kappa[k] += 1;
                if kappa[k] <= bound {
                    break;
                }
                kappa[k] = -bound;
                k += 1;
            }
        }
    }

    pub fn peterson_map(&self, m: &HomologyElement, nodes: &[usize]) -> Result<QuantumClass> {
        let mut r = QuantumClass::zero(nodes);
        for (x, p) in m.terms() {
            let (q, w) = self.peterson_basis(x, nodes)?;
            r.add_term(q, w, p);
        }
        Ok(r)
    }

    /// s_i•: σ(w) ↦ σ(w) − α_i σ(s_i w) when s_i w < w, semilinear in S.
    fn star_simple(&self, i: usize, c: &QuantumClass) -> QuantumClass {
        let si = self.gen(i);
        let a = self.simple_root_poly(i);
        let mut r = QuantumClass::zero(c.nodes());
        for (q, w, p) in c.terms() {
            let sp = self.act_poly(&si, p);
            r.add_term(q.clone(), *w, &sp);
            let sw = self.w.left_mul_gen(i, *w);
            if self.w.length(sw) < self.w.length(*w) {
                r.add_term(q.clone(), sw, &(-&(&a * &sp)));
            }
        }
        r
    }

    pub fn weyl_star_action(&self, u: WeylElement, c: &QuantumClass) -> QuantumClass {
        let word: Vec<usize> = self.w.word(u).iter().map(|&g| g as usize).collect();
        word.iter().rev().fold(c.clone(), |acc, &i| self.star_simple(i, &acc))
    }

    fn check_grassmannian(&self, w: WeylElement, nodes: &[usize]) -> Result<()> {
        if !self.w.is_min_coset_rep(w, nodes) {
            return Err(Error::NotGrassmannian(self.w.format(w)));
        }
        Ok(())
    }

    /// q_{η_P(ϖ_i∨ − w⁻¹ϖ_i∨)} σ^P(v_i w), the right side of σ^P(v_i) × v_i•σ^P(w).
    pub fn quantum_cominuscule_product(&self, i: usize, w: WeylElement, nodes: &[usize]) -> Result<QuantumClass> {
        self.check_nodes(nodes)?;
        self.tau(i)?;
        self.check_grassmannian(w, nodes)?;
        let om = self.rs.fundamental_coweight(i);
        let nu = om - self.w.act_coweight(self.w.inverse(w), &om);
        let q = self.eta_p(&nu, nodes)?;
        let vw = self.w.min_coset_rep(self.w.mul(self.v_of_node(i)?, w), nodes);
        Ok(QuantumClass::term(nodes, q, vw, Polynomial::one()))
    }

    /// σ^P(v_i) × v_i•σ^P(w) as the left side, for the homology route.
    pub fn cominuscule_lhs(&self, i: usize, w: WeylElement, nodes: &[usize]) -> Result<QuantumClass> {
        let vi = self.v_of_node(i)?;
        let a = QuantumClass::term(nodes, vec![0; self.rank() - nodes.len()], self.w.min_coset_rep(vi, nodes), Polynomial::one());
        let b = self.weyl_star_action(vi, &QuantumClass::term(nodes, vec![0; self.rank() - nodes.len()], w, Polynomial::one()));
        self.quantum_product_homology(&a, &b)
    }

    /// The first λ = −N Σϖ∨ ∈ Q∨ with w·π_P(t_λ) ∈ W⁻ ∩ (W^P)_aff for all w ∈ W^P.
    pub fn homology_route_lambda(&self, nodes: &[usize]) -> Result<Coweight> {
        let rho = (1..=self.rank()).fold(Coweight::zero(self.rank()), |a, j| a + self.rs.fundamental_coweight(j));
        for n in 1..=12 {
            let l = rho.scale(-n);
            if !self.in_affine_weyl(&self.translation(l)) {
                continue;
            }
            let p = self.pi_p(&self.translation(l), nodes)?;
            let ok = self.w.min_coset_reps(nodes).into_iter().all(|w| {
                let x = self.mul(&self.weyl(w), &p);
                self.is_in_waffm(&x) && self.is_in_wpaff(&x, nodes)
            });
            if ok {
                return Ok(l);
            }
        }
        Err(Error::Precondition("no dominant enough translation found".into()))
    }

    /// Products in QH*_T(G/P) computed as ψ_P(ξ_{aπ(t_λ)} × ξ_{bπ(t_λ)} mod J_P) q_{−2η(λ)}.
    pub fn quantum_product_homology(&self, a: &QuantumClass, b: &QuantumClass) -> Result<QuantumClass> {
        let nodes = a.nodes().to_vec();
        if b.nodes() != nodes.as_slice() {
            return Err(Error::Precondition("parabolics differ".into()));
        }
        let l = self.homology_route_lambda(&nodes)?;
        let p = self.pi_p(&self.translation(l), &nodes)?;
        let eta = self.eta_p(&l, &nodes)?;
        let back: Vec<i32> = eta.iter().map(|x| -2 * x).collect();
        let mut out = QuantumClass::zero(&nodes);
        for (q1, w1, c1) in a.terms() {
            for (q2, w2, c2) in b.terms() {
                let x1 = self.mul(&self.weyl(*w1), &p);
                let x2 = self.mul(&self.weyl(*w2), &p);
                // j of the shorter factor
                let (s, t) = if self.length(&x1) <= self.length(&x2) { (x1, x2) } else { (x2, x1) };
                let prod = self.pontryagin_product(&self.xi(&s)?, &self.xi(&t)?)?;
                let image = self.peterson_map(&self.reduce_mod_jp(&prod, &nodes), &nodes)?;
                let shift: Vec<i32> = back.iter().zip(q1).zip(q2).map(|((a, b), c)| a + b + c).collect();
                out = out.add(&image.shift(&shift).scale(&(c1 * c2)));
            }
        }
        Ok(out)
    }

    pub fn format_quantum(&self, c: &QuantumClass) -> String {
        if c.is_zero() {
            return "0".into();
        }
        let mut terms: Vec<_> = c.terms().collect();
        terms.sort_by_key(|(q, w, _)| (self.w.length(**w), self.w.word(**w).to_vec(), (*q).clone()));
        let mut out = String::new();
        for (k, (q, w, p)) in terms.into_iter().enumerate() {
            let mut factors = Vec::new();
            if !p.is_one() {
                let s = self.format_poly(p);
                factors.push(if p.num_terms() > 1 { format!("({s})") } else { s });
            }
            if q.iter().any(|&x| x != 0) {
                let mut s = String::from("q[");
                for (j, x) in q.iter().enumerate() {
                    if j > 0 {
                        s.push(',');
                    }
                    let _ = write!(s, "{x}");
                }
                s.push(']');
                factors.push(s);
            }
            if *w != self.w.identity() || factors.is_empty() {
                factors.push(format!("S[{}]", self.w.format(*w)));
            }
            let body = factors.join("*");
            if k > 0 {
                match body.strip_prefix('-') {
                    Some(rest) => {
                        out.push_str(" - ");
                        out.push_str(rest);
                    }
                    None => {
                        out.push_str(" + ");
                        out.push_str(&body);
                    }
                }
            } else {
                out.push_str(&body);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees() {
        let c = Context::new("A2").unwrap();
        assert_eq!(c.quantum_degree(&[1], &[2]), 3);
        assert_eq!(c.eta_p(&c.rs.simple_coroot(2), &[2]).unwrap(), vec![0]);
        let c1 = Context::new("A1").unwrap();
        assert_eq!(c1.quantum_degree(&[-1], &[]), -2);
    }

    #[test]
    fn a1_peterson() {
        let c = Context::new("A1").unwrap();
        let (q, w) = c.peterson_basis(&c.gen(0), &[]).unwrap();
        assert_eq!((q, w), (vec![-1], c.w.gen(1)));
        let lhs = c.cominuscule_lhs(1, c.w.gen(1), &[]).unwrap();
        assert_eq!(lhs, c.quantum_cominuscule_product(1, c.w.gen(1), &[]).unwrap());
    }

    #[test]
    fn star_action() {
        let c = Context::new("A1").unwrap();
        let s = c.w.gen(1);
        let got = c.weyl_star_action(s, &QuantumClass::term(&[], vec![0], s, Polynomial::one()));
        let mut expect = QuantumClass::term(&[], vec![0], s, Polynomial::one());
        expect.add_term(vec![0], c.w.identity(), &-&Polynomial::var(1));
        assert_eq!(got, expect);
    }
}
