//! Fixed-capacity integer vectors used for roots, weights and coweights.

use std::fmt;

pub const MAX_RANK: usize = 8;

macro_rules! lattice_vector {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name {
            rank: u8,
            c: [i32; MAX_RANK],
        }

        impl $name {
            pub fn zero(rank: usize) -> Self {
                assert!(rank <= MAX_RANK);
                $name { rank: rank as u8, c: [0; MAX_RANK] }
            }

            pub fn new(coords: &[i32]) -> Self {
                let mut v = Self::zero(coords.len());
                v.c[..coords.len()].copy_from_slice(coords);
                v
            }

            /// Unit vector for the 1-based node `i`.
            pub fn unit(rank: usize, i: usize) -> Self {
                let mut v = Self::zero(rank);
                v.c[i - 1] = 1;
                v
            }

            pub fn rank(&self) -> usize {
                self.rank as usize
            }

            pub fn coords(&self) -> &[i32] {
                &self.c[..self.rank as usize]
            }

            pub fn coords_mut(&mut self) -> &mut [i32] {
                &mut self.c[..self.rank as usize]
            }

            /// Coordinate at the 1-based node `i`.
            pub fn get(&self, i: usize) -> i32 {
                self.c[i - 1]
            }

            pub fn is_zero(&self) -> bool {
                self.c.iter().all(|&x| x == 0)
            }

            pub fn scale(&self, k: i32) -> Self {
                let mut v = *self;
                for x in v.c.iter_mut() {
                    *x *= k;
                }
                v
            }

            pub fn dot(&self, other: &[i32]) -> i32 {
                self.coords().iter().zip(other).map(|(a, b)| a * b).sum()
            }
        }

        impl std::ops::Add for $name {
            type Output = $name;
            fn add(mut self, o: $name) -> $name {
                for (a, b) in self.c.iter_mut().zip(o.c.iter()) {
                    *a += b;
                }
                self
            }
        }

        impl std::ops::Sub for $name {
            type Output = $name;
            fn sub(mut self, o: $name) -> $name {
                for (a, b) in self.c.iter_mut().zip(o.c.iter()) {
                    *a -= b;
                }
                self
            }
        }

        impl std::ops::Neg for $name {
            type Output = $name;
            fn neg(self) -> $name {
                self.scale(-1)
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}{:?}", stringify!($name), self.coords())
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "[")?;
                for (k, x) in self.coords().iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, "]")
            }
        }
    };
}

lattice_vector!(
    /// Element of the root lattice Q, in simple-root coordinates.
    Root
);
lattice_vector!(
    /// Element of the weight lattice P, in fundamental-weight coordinates.
    Weight
);
lattice_vector!(
    /// Element of the coweight lattice P∨, in fundamental-coweight coordinates.
    Coweight
);

impl Root {
    pub fn height(&self) -> i32 {
        self.coords().iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.coords().iter().all(|&x| x >= 0)
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.coords().iter().all(|&x| x <= 0)
    }

    /// Pairing ⟨α, λ∨⟩ with a coweight; integral since the bases are dual.
    pub fn pair(&self, l: &Coweight) -> i32 {
        self.dot(l.coords())
    }
}

/// An affine root γ + kε with γ in Q (possibly zero).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct AffineRoot {
    pub finite: Root,
    pub level: i32,
}

impl AffineRoot {
    pub fn new(finite: Root, level: i32) -> Self {
        AffineRoot { finite, level }
    }

    pub fn is_real(&self) -> bool {
        !self.finite.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.level > 0 || (self.level == 0 && self.finite.is_positive())
    }

    pub fn null(rank: usize) -> Self {
        AffineRoot { finite: Root::zero(rank), level: 1 }
    }
}

impl std::ops::Add for AffineRoot {
    type Output = AffineRoot;
    fn add(self, o: AffineRoot) -> AffineRoot {
        AffineRoot { finite: self.finite + o.finite, level: self.level + o.level }
    }
}

impl std::ops::Neg for AffineRoot {
    type Output = AffineRoot;
    fn neg(self) -> AffineRoot {
        AffineRoot { finite: -self.finite, level: -self.level }
    }
}

impl fmt::Display for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}e", self.finite, self.level)
    }
}
