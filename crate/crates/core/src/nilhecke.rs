//! The extended nil-Hecke ring in the Ã-basis and the δ-basis oracle.

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::affine_weyl::ExtendedAffineElement;
use crate::context::Context;
use crate::error::{Error, Result};
use crate::lattice::{AffineRoot, Root};
use crate::scalars::{Monomial, Polynomial, Rational, RationalFunction};
use crate::weyl::WeylElement;

/// Σ p_x Ã_x with coefficients in S, written on the left.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NilHeckeElement {
    terms: HashMap<ExtendedAffineElement, Polynomial>,
}

impl NilHeckeElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(x: ExtendedAffineElement) -> Self {
        Self::term(x, Polynomial::one())
    }

    pub fn term(x: ExtendedAffineElement, p: Polynomial) -> Self {
        let mut a = Self::zero();
        a.add_term(x, &p);
        a
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

    pub fn add_term(&mut self, x: ExtendedAffineElement, p: &Polynomial) {
        if p.is_zero() {
            return;
        }
        let e = self.terms.entry(x).or_default();
        *e += p;
        if e.is_zero() {
            self.terms.remove(&x);
        }
    }

    pub fn add_assign(&mut self, o: &NilHeckeElement) {
        for (x, p) in &o.terms {
            self.add_term(*x, p);
        }
    }

    pub fn add_scaled(&mut self, o: &NilHeckeElement, c: &Polynomial) {
        for (x, p) in &o.terms {
            self.add_term(*x, &(c * p));
        }
    }

    pub fn add(&self, o: &NilHeckeElement) -> Self {
        let mut r = self.clone();
        r.add_assign(o);
        r
    }

    pub fn sub(&self, o: &NilHeckeElement) -> Self {
        let mut r = self.clone();
        r.add_scaled(o, &Polynomial::integer(-1));
        r
    }

    /// Left multiplication by a scalar.
    pub fn scale(&self, c: &Polynomial) -> Self {
        let mut r = Self::zero();
        r.add_scaled(self, c);
        r
    }

    pub fn map_coeffs(&self, f: impl Fn(&Polynomial) -> Polynomial) -> Self {
        let mut r = Self::zero();
        for (x, p) in &self.terms {
            r.add_term(*x, &f(p));
        }
        r
    }
}

/// Σ f_w δ_w over Frac(S): the oracle presentation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DeltaElement {
    terms: HashMap<ExtendedAffineElement, RationalFunction>,
}

impl DeltaElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn delta(x: ExtendedAffineElement) -> Self {
        Self::term(x, RationalFunction::one())
    }

    pub fn term(x: ExtendedAffineElement, f: RationalFunction) -> Self {
        let mut d = Self::zero();
        d.add_term(x, &f);
        d
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, x: &ExtendedAffineElement) -> RationalFunction {
        self.terms.get(x).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExtendedAffineElement, &RationalFunction)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, x: ExtendedAffineElement, f: &RationalFunction) {
        if f.is_zero() {
            return;
        }
        let e = self.terms.entry(x).or_default();
        *e = e.add(f);
        if e.is_zero() {
            self.terms.remove(&x);
        }
    }

    pub fn add(&self, o: &DeltaElement) -> Self {
        let mut r = self.clone();
        for (x, f) in &o.terms {
            r.add_term(*x, f);
        }
        r
    }

    pub fn sub(&self, o: &DeltaElement) -> Self {
        self.add(&o.scale(&RationalFunction::one().neg()))
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        let mut r = Self::zero();
        for (x, f) in &self.terms {
            r.add_term(*x, &c.mul(f));
        }
        r
    }
}

impl Context {
    /// Ã_e = 1·Ã_e scaled by p.
    pub fn nh_scalar(&self, p: Polynomial) -> NilHeckeElement {
        NilHeckeElement::term(self.identity(), p)
    }

    /// Ã_x Ã_y: Ã_{xy} when lengths add, otherwise zero.
    pub fn basis_product(&self, x: &ExtendedAffineElement, y: &ExtendedAffineElement) -> Option<ExtendedAffineElement> {
        let xy = self.mul(x, y);
        (self.length(&xy) == self.length(x) + self.length(y)).then_some(xy)
    }

    /// δ_τ·a for a length zero element: coefficients twisted by τ.
    fn twist(&self, tau: &ExtendedAffineElement, a: &NilHeckeElement) -> NilHeckeElement {
        let mut r = NilHeckeElement::zero();
        for (v, c) in a.terms() {
            r.add_term(self.mul(tau, v), &self.act_poly(tau, c));
        }
        r
    }

    /// α_g as an element of S (level zero, so α₀ = −Θ).
    pub fn simple_root_poly(&self, g: usize) -> Polynomial {
        Polynomial::linear(self.rs.affine_simple_root(g).finite.coords())
    }

    fn divided_difference(&self, g: usize, c: &Polynomial) -> Polynomial {
        let s = self.act_poly(&self.gen(g), c);
        let num = c - &s;
        num.div_linear(self.rs.affine_simple_root(g).finite.coords()).expect("divided differences are exact")
    }

    /// A_g·a via A_g c = s_g(c) A_g + ∂_g(c).
    pub fn left_mul_generator(&self, g: usize, a: &NilHeckeElement) -> NilHeckeElement {
        let sg = self.gen(g);
        let mut r = NilHeckeElement::zero();
        for (v, c) in a.terms() {
            if !self.has_left_descent(g, v) {
                r.add_term(self.mul(&sg, v), &self.act_poly(&sg, c));
            }
            r.add_term(*v, &self.divided_difference(g, c));
        }
        r
    }

    /// Ã_x·m rewritten with scalars on the left.
    pub fn basis_times_monomial(&self, x: &ExtendedAffineElement, m: &Monomial) -> Arc<NilHeckeElement> {
        if let Some(r) = self.scalar_cache.read().unwrap().get(&(*x, *m)) {
            return r.clone();
        }
        if *m == Monomial::one() {
            return Arc::new(NilHeckeElement::basis(*x));
        }
        let (k, xh) = self.decompose_z(x);
        let out = if k != 0 {
            let inner = self.basis_times_monomial(&xh, m);
            self.twist(&self.z[k].elem, &inner)
        } else if xh == self.identity() {
            NilHeckeElement::term(xh, Polynomial::monomial(*m, Rational::one()))
        } else {
            let g = (0..=self.rank()).find(|&g| self.has_left_descent(g, &xh)).unwrap();
            let y = self.mul(&self.gen(g), &xh);
            let inner = self.basis_times_monomial(&y, m);
            self.left_mul_generator(g, &inner)
        };
        let out = Arc::new(out);
        self.scalar_cache.write().unwrap().insert((*x, *m), out.clone());
        out
    }

    pub fn basis_times_poly(&self, x: &ExtendedAffineElement, p: &Polynomial) -> NilHeckeElement {
        let mut r = NilHeckeElement::zero();
        for (m, c) in p.terms() {
            let part = self.basis_times_monomial(x, m);
            r.add_scaled(&part, &Polynomial::constant(*c));
        }
        r
    }

    /// a·q for a scalar q on the right.
    pub fn nh_mul_scalar(&self, a: &NilHeckeElement, q: &Polynomial) -> NilHeckeElement {
        let mut r = NilHeckeElement::zero();
        for (x, p) in a.terms() {
            r.add_scaled(&self.basis_times_poly(x, q), p);
        }
        r
    }

    pub fn nh_mul(&self, a: &NilHeckeElement, b: &NilHeckeElement) -> NilHeckeElement {
        let mut r = NilHeckeElement::zero();
        for (x, p) in a.terms() {
            for (y, q) in b.terms() {
                let moved = self.basis_times_poly(x, q);
                for (z, c) in moved.terms() {
                    if let Some(zy) = self.basis_product(z, y) {
                        r.add_term(zy, &(p * c));
                    }
                }
            }
        }
        r
    }

    /// Ã_x λ = x(λ)Ã_x + Σ_{xs_β ⋖ x} ⟨λ, β∨⟩ Ã_{xs_β} for linear λ.
    pub fn commute_scalar(&self, x: &ExtendedAffineElement, l: &Polynomial) -> Result<NilHeckeElement> {
        let c = l
            .linear_coeffs(self.rank())
            .filter(|_| l.is_homogeneous())
            .ok_or_else(|| Error::NotLinear(l.to_string()))?;
        let mut r = NilHeckeElement::term(*x, self.act_poly(x, l));
        for (b, y) in self.lower_covers(x) {
            let cv = self.rs.coroot(&b.finite).unwrap();
            let pairing: Rational = c.iter().zip(cv.coords()).map(|(a, &k)| *a * Rational::from_integer(k as i64)).sum();
            r.add_term(y, &Polynomial::constant(pairing));
        }
        Ok(r)
    }

    /// A-basis expansion of δ_x: δ_τ Π (1 − α_g A_g) along a reduced word.
    pub fn delta_to_a(&self, x: &ExtendedAffineElement) -> NilHeckeElement {
        let (k, word) = self.reduced_word(x);
        let mut e = NilHeckeElement::basis(self.identity());
        for &g in word.iter().rev() {
            let moved = self.left_mul_generator(g, &e);
            e.add_scaled(&moved, &(-&self.simple_root_poly(g)));
        }
        if k != 0 {
            e = self.twist(&self.z[k].elem, &e);
        }
        e
    }

    /// ξ^w(v): the coefficient of Ã_w in δ_v.
    pub fn xi_value(&self, w: &ExtendedAffineElement, v: &ExtendedAffineElement) -> Polynomial {
        self.delta_to_a(v).coeff(w)
    }

    /// Positive localization formula: Σ over reduced subwords for w of the
    /// reduced word of v of Π β_j, β_j = s_{b_1}⋯s_{b_{j−1}}(α_{b_j}).
    /// Equals (−1)^{ℓ(w)} ξ^w(v).
    pub fn xi_billey(&self, w: WeylElement, v: WeylElement) -> Polynomial {
        let word: Vec<usize> = self.w.word(v).iter().map(|&g| g as usize).collect();
        let betas: Vec<Polynomial> = (0..word.len())
            .map(|j| {
                let pre = self.w.from_word(&word[..j]).unwrap();
                Polynomial::linear(self.w.act_root(pre, &self.rs.simple_root(word[j])).coords())
            })
            .collect();
        let lw = self.w.length(w);
        let mut total = Polynomial::zero();
        for mask in 0u32..(1 << word.len()) {
            if mask.count_ones() as usize != lw {
                continue;
            }
            let sub: Vec<usize> = (0..word.len()).filter(|j| mask >> j & 1 == 1).map(|j| word[j]).collect();
            if self.w.from_word(&sub).unwrap() == w {
                let mut p = Polynomial::one();
                for j in (0..word.len()).filter(|j| mask >> j & 1 == 1) {
                    p = &p * &betas[j];
                }
                total += &p;
            }
        }
        total
    }

    /// A_β = (1/γ)(δ_e − δ_{s_β}) for a real affine root β = γ + kε.
    pub fn a_alpha(&self, b: &AffineRoot) -> Result<NilHeckeElement> {
        let sb = self.affine_reflection(b)?;
        let d = self.delta_to_a(&sb);
        let mut r = NilHeckeElement::zero();
        for (y, c) in d.terms() {
            if *y == self.identity() {
                if !(c - &Polynomial::one()).is_zero() {
                    return Err(Error::NotInNilHecke("constant term of δ_{s_β} is not 1".into()));
                }
                continue;
            }
            let q = (-c).div_linear(b.finite.coords()).ok_or_else(|| Error::NotInNilHecke(format!("coefficient {c} not divisible by the root")))?;
            r.add_term(*y, &q);
        }
        Ok(r)
    }

    // ---- δ-basis oracle ----

    pub fn delta_mul(&self, a: &DeltaElement, b: &DeltaElement) -> DeltaElement {
        let mut r = DeltaElement::zero();
        for (u, f) in a.terms() {
            for (v, g) in b.terms() {
                let ug = self.w.act_ratfunc(u.u, g);
                r.add_term(self.mul(u, v), &f.mul(&ug));
            }
        }
        r
    }

    /// A_g = (1/α_g)(δ_e − δ_{s_g}) in the δ-basis.
    pub fn delta_generator(&self, g: usize) -> DeltaElement {
        let inv = RationalFunction::one().div_linear(self.rs.affine_simple_root(g).finite.coords()).unwrap();
        let mut d = DeltaElement::term(self.identity(), inv.clone());
        d.add_term(self.gen(g), &inv.neg());
        d
    }

    /// A_β = (1/γ)(δ_e − δ_{s_β}) directly in the δ-basis.
    pub fn delta_a_alpha(&self, b: &AffineRoot) -> Result<DeltaElement> {
        let sb = self.affine_reflection(b)?;
        let inv = RationalFunction::one().div_linear(b.finite.coords())?;
        let mut d = DeltaElement::term(self.identity(), inv.clone());
        d.add_term(sb, &inv.neg());
        Ok(d)
    }

    pub fn basis_to_delta(&self, x: &ExtendedAffineElement) -> DeltaElement {
        let (k, word) = self.reduced_word(x);
        let mut d = DeltaElement::delta(self.z[k].elem);
        for g in word {
            d = self.delta_mul(&d, &self.delta_generator(g));
        }
        d
    }

    pub fn to_delta(&self, a: &NilHeckeElement) -> DeltaElement {
        let mut r = DeltaElement::zero();
        for (x, p) in a.terms() {
            let d = self.basis_to_delta(x);
            r = r.add(&d.scale(&RationalFunction::from_poly(p.clone())));
        }
        r
    }

    /// Inverse of `to_delta`; fails when the input is not in the S-span of the Ã-basis.
    pub fn from_delta(&self, d: &DeltaElement) -> Result<NilHeckeElement> {
        let mut rest = d.clone();
        let mut out = NilHeckeElement::zero();
        while !rest.is_zero() {
            let x = *rest
                .terms()
                .map(|(x, _)| x)
                .max_by_key(|x| self.sort_key(x))
                .unwrap();
            let bx = self.basis_to_delta(&x);
            let lead = bx.coeff(&x);
            // lead is ±1/Π(roots); the quotient must be a polynomial
            let inv = invert_monomial_ratfunc(&lead)?;
            let q = rest.coeff(&x).mul(&inv);
            let p = q
                .as_polynomial()
                .cloned()
                .ok_or_else(|| Error::NotInNilHecke(format!("coefficient {q} of {} is not in S", self.format_elem(&x))))?;
            rest = rest.sub(&bx.scale(&RationalFunction::from_poly(p.clone())));
            out.add_term(x, &p);
        }
        Ok(out)
    }
}

/// 1/f for f = c / Π(linear forms).
fn invert_monomial_ratfunc(f: &RationalFunction) -> Result<RationalFunction> {
    let num = f.numerator();
    if num.num_terms() != 1 || !num.is_constant() {
        return Err(Error::NotInNilHecke("leading coefficient is not invertible".into()));
    }
    let c = num.constant_term();
    Ok(RationalFunction::from_poly(f.denominator().scale(Rational::one() / c)))
}

/// Linear polynomial for a root.
pub fn root_poly(r: &Root) -> Polynomial {
    Polynomial::linear(r.coords())
}

pub fn is_unit(p: &Polynomial) -> bool {
    p.is_constant() && !p.constant_term().is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(c: &Context, s: &str) -> NilHeckeElement {
        NilHeckeElement::basis(c.parse_elem(s).unwrap())
    }

    #[test]
    fn small_products() {
        let c = Context::new("A2").unwrap();
        assert!(c.nh_mul(&a(&c, "s1"), &a(&c, "s1")).is_zero());
        assert_eq!(c.nh_mul(&a(&c, "s1"), &a(&c, "s2")), a(&c, "s1 s2"));
    }

    #[test]
    fn a1_commutation() {
        let c = Context::new("A1").unwrap();
        let s1 = c.gen(1);
        let a1 = Polynomial::var(1);
        let lhs = c.basis_times_poly(&s1, &a1);
        let mut expect = NilHeckeElement::term(s1, -&a1);
        expect.add_term(c.identity(), &Polynomial::integer(2));
        assert_eq!(lhs, expect);
        assert_eq!(c.commute_scalar(&s1, &a1).unwrap(), expect);
    }

    #[test]
    fn weight_commutation_a2() {
        let c = Context::new("A2").unwrap();
        let w2 = c.fundamental_weight_poly(2).clone();
        let s1 = c.gen(1);
        assert_eq!(c.basis_times_poly(&s1, &w2), NilHeckeElement::term(s1, w2.clone()));
        assert!(c.commute_scalar(&s1, &(&w2 * &w2)).is_err());
    }

    #[test]
    fn delta_expansion_simple() {
        let c = Context::new("A2").unwrap();
        let d = c.delta_to_a(&c.gen(1));
        let mut expect = NilHeckeElement::basis(c.identity());
        expect.add_term(c.gen(1), &-&Polynomial::var(1));
        assert_eq!(d, expect);
        assert_eq!(c.xi_value(&c.identity(), &c.weyl(c.w.longest())), Polynomial::one());
    }

    #[test]
    fn billey_sign() {
        let c = Context::new("A3").unwrap();
        for v in c.w.elements() {
            for w in c.w.elements() {
                let s = if c.w.length(w).is_multiple_of(2) { 1 } else { -1 };
                let lhs = c.xi_value(&c.weyl(w), &c.weyl(v));
                assert_eq!(lhs, c.xi_billey(w, v).scale(Rational::from_integer(s)));
            }
        }
    }

    #[test]
    fn roundtrip_oracle() {
        let c = Context::new("A3").unwrap();
        let x = c.parse_elem("tau1 s1").unwrap();
        let b = NilHeckeElement::basis(x);
        assert_eq!(c.from_delta(&c.to_delta(&b)).unwrap(), b);
        let half = DeltaElement::term(c.identity(), RationalFunction::one().div_linear(&[1, 0, 0]).unwrap());
        assert!(c.from_delta(&half).is_err());
    }

    #[test]
    fn a_alpha_simple() {
        let c = Context::new("A2").unwrap();
        for g in 0..=2 {
            let b = c.rs.affine_simple_root(g);
            assert_eq!(c.a_alpha(&b).unwrap(), NilHeckeElement::basis(c.gen(g)));
        }
    }
}
