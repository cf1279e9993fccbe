use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::affine_weyl::{ExtendedAffineElement, ZElement};
use crate::error::{Error, Result};
use crate::lattice::{Coweight, Root};
use crate::nilhecke::NilHeckeElement;
use crate::root_data::{CartanType, RootSystem};
use crate::scalars::{parse_polynomial, Monomial, Polynomial};
use crate::weyl::{self, WeylElement, WeylGroup};

/// Everything derived from one Cartan datum: the root system, the finite
/// Weyl group tables and the affine data (s₀, Z).
pub struct Context {
    pub rs: RootSystem,
    pub w: WeylGroup,
    pub(crate) z: Vec<ZElement>,
    pub(crate) reflections: Vec<WeylElement>,
    pub(crate) s_theta: WeylElement,
    weights: Vec<Polynomial>,
    pub(crate) scalar_cache: RwLock<HashMap<(ExtendedAffineElement, Monomial), Arc<NilHeckeElement>>>,
    pub(crate) j_cache: RwLock<HashMap<ExtendedAffineElement, Arc<NilHeckeElement>>>,
    /// Largest ℓ(w) accepted by the general j solver.
    pub j_length_bound: usize,
}

impl Context {
    pub fn new(t: &str) -> Result<Self> {
        let ct: CartanType = t.parse()?;
        Self::from_root_system(RootSystem::from_type(ct)?)
    }

    pub fn from_root_system(rs: RootSystem) -> Result<Self> {
        let w = WeylGroup::new(&rs)?;
        let r = rs.rank();
        let reflections = rs
            .positive_roots()
            .iter()
            .zip(rs.positive_coroots())
            .map(|(a, c)| {
                // s_α(μ) = μ − ⟨α, μ⟩ α∨, columns are images of ϖ_m∨
                let mut m = vec![0; r * r];
                for col in 1..=r {
                    let img = rs.fundamental_coweight(col) - c.scale(a.get(col));
                    for k in 0..r {
                        m[k * r + col - 1] = img.coords()[k];
                    }
                }
                w.from_matrix(&m).expect("reflection lies in W")
            })
            .collect::<Vec<_>>();
        let s_theta = reflections[rs.root_index(&rs.highest_root()).unwrap()];
        let weights = (1..=r).map(|i| Polynomial::linear_rational(&rs.fundamental_weight_in_roots(i))).collect();
        let mut ctx = Context {
            rs,
            w,
            z: Vec::new(),
            reflections,
            s_theta,
            weights,
            scalar_cache: RwLock::new(HashMap::new()),
            j_cache: RwLock::new(HashMap::new()),
            j_length_bound: 6,
        };
        ctx.z = ctx.build_z()?;
        Ok(ctx)
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    /// Reflection s_α for a (positive or negative) root.
    pub fn reflection(&self, a: &Root) -> Option<WeylElement> {
        let k = self.rs.root_index(a)?;
        let np = self.rs.num_positive_roots();
        Some(self.reflections[if k < np { k } else { k - np }])
    }

    pub fn s_theta(&self) -> WeylElement {
        self.s_theta
    }

    /// ϖ_i as a polynomial in the simple-root variables.
    pub fn fundamental_weight_poly(&self, i: usize) -> &Polynomial {
        &self.weights[i - 1]
    }

    pub fn parse_poly(&self, s: &str) -> Result<Polynomial> {
        parse_polynomial(s, self.rank(), &self.weights)
    }

    /// Prints in α-variables when the coefficients are integral there,
    /// otherwise in fundamental-weight variables when those are integral.
    pub fn format_poly(&self, p: &Polynomial) -> String {
        if p.is_integral() {
            return p.to_string();
        }
        let r = self.rank();
        let images: Vec<Polynomial> = (1..=r).map(|j| Polynomial::linear(self.rs.root_to_weight(&self.rs.simple_root(j)).coords())).collect();
        let q = p.substitute(&images);
        if q.is_integral() {
            q.to_string_vars("w")
        } else {
            p.to_string()
        }
    }

    pub fn v_of_node(&self, i: usize) -> Result<WeylElement> {
        weyl::v_of_node(&self.rs, &self.w, i)
    }

    pub fn f_of_node(&self, i: usize) -> Result<usize> {
        weyl::f_of_node(&self.rs, &self.w, i)
    }

    pub fn check_nodes(&self, nodes: &[usize]) -> Result<()> {
        for &i in nodes {
            self.rs.check_node(i)?;
        }
        Ok(())
    }

    pub fn check_coweight(&self, l: &Coweight) -> Result<()> {
        if l.rank() != self.rank() {
            return Err(Error::RankMismatch { expected: self.rank(), got: l.rank() });
        }
        Ok(())
    }
}
