use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::lattice::MAX_RANK;

/// Exponent vector over the simple-root variables α_1..α_r.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(pub [u8; MAX_RANK]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; MAX_RANK])
    }

    /// The variable α_i, 1-based.
    pub fn var(i: usize) -> Self {
        let mut m = Self::one();
        m.0[i - 1] = 1;
        m
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut m = *self;
        for (a, b) in m.0.iter_mut().zip(o.0.iter()) {
            *a = a.checked_add(*b).expect("monomial exponent overflow");
        }
        m
    }

    pub fn divide_var(&self, i: usize) -> Option<Monomial> {
        if self.0[i - 1] == 0 {
            return None;
        }
        let mut m = *self;
        m.0[i - 1] -= 1;
        Some(m)
    }

    /// All monomials of total degree `d` in `rank` variables, in increasing order.
    pub fn all_of_degree(rank: usize, d: u32) -> Vec<Monomial> {
        fn rec(rank: usize, pos: usize, left: u32, cur: &mut Monomial, out: &mut Vec<Monomial>) {
            if pos + 1 == rank {
                cur.0[pos] = left as u8;
                out.push(*cur);
                cur.0[pos] = 0;
                return;
            }
            for e in 0..=left {
                cur.0[pos] = e as u8;
                rec(rank, pos + 1, left - e, cur, out);
            }
            cur.0[pos] = 0;
        }
        let mut out = Vec::new();
        rec(rank, 0, d, &mut Monomial::one(), &mut out);
        out.sort();
        out
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, var: &str) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{var}{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        self.write(f, "a")
    }
}

/// Element of S ⊗ ℚ, written in the simple-root variables.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(Monomial::one(), c)
    }

    pub fn integer(c: i64) -> Self {
        Self::constant(Rational::from_integer(c))
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn var(i: usize) -> Self {
        Self::monomial(Monomial::var(i), Rational::one())
    }

    /// Σ c_i α_i.
    pub fn linear(coeffs: &[i32]) -> Self {
        let mut p = Self::zero();
        for (i, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                p.terms.insert(Monomial::var(i + 1), Rational::from_integer(c as i64));
            }
        }
        p
    }

    pub fn linear_rational(coeffs: &[Rational]) -> Self {
        let mut p = Self::zero();
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                p.terms.insert(Monomial::var(i + 1), *c);
            }
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::one()) == Some(&Rational::one())
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).copied().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut d = None;
        self.terms.keys().all(|m| {
            let e = m.degree();
            *d.get_or_insert(e) == e
        })
    }

    /// Coefficients of a homogeneous linear polynomial.
    pub fn linear_coeffs(&self, rank: usize) -> Option<Vec<Rational>> {
        let mut out = vec![Rational::zero(); rank];
        for (m, c) in &self.terms {
            if m.degree() != 1 {
                return None;
            }
            let i = m.0.iter().position(|&e| e == 1)?;
            if i >= rank {
                return None;
            }
            out[i] = *c;
        }
        Some(out)
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn scale(&self, c: Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(m, x)| (*m, *x * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Polynomial { terms: self.terms.iter().map(|(n, x)| (n.mul(m), *x)).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Self::one();
        for _ in 0..e {
            r = &r * self;
        }
        r
    }

    /// Substitute α_j ↦ images[j] for every variable.
    pub fn substitute(&self, images: &[Polynomial]) -> Self {
        let mut out = Self::zero();
        let mut powers: Vec<Vec<Polynomial>> = images.iter().map(|p| vec![Self::one(), p.clone()]).collect();
        for (m, c) in &self.terms {
            let mut t = Self::constant(*c);
            for (j, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = &mut powers[j];
                while pw.len() <= e as usize {
                    let next = &pw[pw.len() - 1] * &images[j];
                    pw.push(next);
                }
                t = &t * &pw[e as usize];
            }
            out += &t;
        }
        out
    }

    /// Exact quotient by a nonzero linear form Σ l_i α_i, if it exists.
    pub fn div_linear(&self, l: &[i32]) -> Option<Polynomial> {
        let p = l.iter().position(|&x| x != 0)?;
        let lead = Rational::from_integer(l[p] as i64);
        let form = Polynomial::linear(l);
        let mut rem = self.clone();
        let mut q = Polynomial::zero();
        while let Some((m, c)) = rem.terms.iter().next_back().map(|(m, c)| (*m, *c)) {
            let m2 = m.divide_var(p + 1)?;
            let k = c / lead;
            q.add_term(m2, k);
            rem -= &form.mul_monomial(&m2).scale(k);
        }
        Some(q)
    }

    pub fn map_coeffs(&self, f: impl Fn(&Rational) -> Rational) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, f(c));
        }
        out
    }

    /// Drops all terms of positive degree.
    pub fn specialize_zero(&self) -> Self {
        Self::constant(self.constant_term())
    }

    pub fn content_lcm_denominator(&self) -> i64 {
        self.terms.values().fold(1i64, |acc, c| num_integer::lcm(acc, *c.denom()))
    }

    pub fn fmt_vars(&self, f: &mut fmt::Formatter<'_>, var: &str) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then(b.0.cmp(a.0)));
        for (k, (m, c)) in ordered.into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if neg {
                write!(f, "-")?;
            } else if k > 0 {
                write!(f, "+")?;
            }
            if m.degree() == 0 {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                m.write(f, var)?;
            }
        }
        Ok(())
    }

    pub fn to_string_vars(&self, var: &str) -> String {
        struct D<'a>(&'a Polynomial, &'a str);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt_vars(f, self.1)
            }
        }
        D(self, var).to_string()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_vars(f, "a")
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_vars(f, "a")
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, o: &Polynomial) {
        for (m, c) in &o.terms {
            self.add_term(*m, *c);
        }
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, o: &Polynomial) {
        for (m, c) in &o.terms {
            self.add_term(*m, -*c);
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, o: &Polynomial) -> Polynomial {
        let mut r = self.clone();
        r += o;
        r
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, o: &Polynomial) -> Polynomial {
        let mut r = self.clone();
        r -= o;
        r
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(-Rational::one())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, o: &Polynomial) -> Polynomial {
        let mut r = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                r.add_term(m1.mul(m2), *c1 * *c2);
            }
        }
        r
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, o: Polynomial) -> Polynomial {
        self += &o;
        self
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(mut self, o: Polynomial) -> Polynomial {
        self -= &o;
        self
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, o: Polynomial) -> Polynomial {
        &self * &o
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lin(c: &[i32]) -> Polynomial {
        Polynomial::linear(c)
    }

    #[test]
    fn arithmetic() {
        let a = lin(&[1, 0]);
        let b = lin(&[0, 1]);
        let p = &(&a + &b) * &(&a - &b);
        assert_eq!(p, &(&a * &a) - &(&b * &b));
        assert!((&p - &p).is_zero());
        assert_eq!(p.degree(), Some(2));
        assert!(p.is_homogeneous());
        assert!(!(&p + &Polynomial::one()).is_homogeneous());
    }

    #[test]
    fn division() {
        let a = lin(&[1, 0, 0]);
        let b = lin(&[0, 1, 1]);
        let c = lin(&[1, -1, 2]);
        let p = &(&a * &b) * &c;
        assert_eq!(p.div_linear(&[1, -1, 2]).unwrap(), &a * &b);
        assert_eq!(p.div_linear(&[0, 1, 1]).unwrap(), &a * &c);
        assert!(p.div_linear(&[1, 1, 0]).is_none());
        assert!(Polynomial::one().div_linear(&[1, 0, 0]).is_none());
        assert!(Polynomial::zero().div_linear(&[1, 0, 0]).unwrap().is_zero());
    }

    #[test]
    fn printing() {
        let p = &(&lin(&[1, 1]) * &lin(&[0, 1])) - &Polynomial::integer(2);
        assert_eq!(p.to_string(), "a1*a2+a2^2-2");
        let h = Polynomial::constant(Rational::new(-1, 3)) * lin(&[1, 0]);
        assert_eq!(h.to_string(), "-1/3*a1");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }

    #[test]
    fn monomials_of_degree() {
        assert_eq!(Monomial::all_of_degree(3, 2).len(), 6);
        assert_eq!(Monomial::all_of_degree(1, 4).len(), 1);
        assert_eq!(Monomial::all_of_degree(2, 0), vec![Monomial::one()]);
    }
}
