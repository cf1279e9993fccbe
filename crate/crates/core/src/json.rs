//! JSON views of the main value types, with deterministic term order.

use serde::Serialize;

use crate::affine_homology::HomologyElement;
use crate::context::Context;
use crate::nilhecke::{DeltaElement, NilHeckeElement};
use crate::peterson::QuantumClass;

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct TermJson {
    pub coeff: String,
    pub elem: String,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct CombinationJson {
    pub basis: &'static str,
    pub terms: Vec<TermJson>,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct QuantumTermJson {
    pub coeff: String,
    pub q: Vec<i32>,
    pub schubert: String,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct QuantumJson {
    pub parabolic: Vec<usize>,
    pub terms: Vec<QuantumTermJson>,
}

impl Context {
    pub fn nh_json(&self, a: &NilHeckeElement) -> CombinationJson {
        let terms = self
            .sorted_nh_terms(a)
            .into_iter()
            .map(|(x, p)| TermJson { coeff: self.format_poly(p), elem: self.format_elem(x) })
            .collect();
        CombinationJson { basis: "A", terms }
    }

    pub fn delta_json(&self, d: &DeltaElement) -> CombinationJson {
        let mut t: Vec<_> = d.terms().collect();
        t.sort_by_cached_key(|(x, _)| self.sort_key(x));
        let terms = t.into_iter().map(|(x, f)| TermJson { coeff: f.to_string(), elem: self.format_elem(x) }).collect();
        CombinationJson { basis: "delta", terms }
    }

    pub fn homology_json(&self, m: &HomologyElement) -> CombinationJson {
        let terms = self
            .sorted_terms(m)
            .into_iter()
            .map(|(x, p)| TermJson { coeff: self.format_poly(p), elem: self.format_elem(x) })
            .collect();
        CombinationJson { basis: "xi", terms }
    }

    pub fn quantum_json(&self, c: &QuantumClass) -> QuantumJson {
        let mut t: Vec<_> = c.terms().collect();
        t.sort_by_key(|(q, w, _)| (self.w.length(**w), self.w.word(**w).to_vec(), (*q).clone()));
        let terms = t
            .into_iter()
            .map(|(q, w, p)| QuantumTermJson { coeff: self.format_poly(p), q: q.clone(), schubert: self.w.format(*w) })
            .collect();
        QuantumJson { parabolic: c.nodes().to_vec(), terms }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stable_order() {
        let c = Context::new("A2").unwrap();
        let d = c.delta_to_a(&c.weyl(c.w.longest()));
        let a = serde_json::to_string(&c.nh_json(&d)).unwrap();
        let b = serde_json::to_string(&c.nh_json(&d.clone())).unwrap();
        assert_eq!(a, b);
        assert!(a.starts_with(r#"{"basis":"A","terms":[{"coeff":"1","elem":"e"}"#));
    }
}
