use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Polynomial, Rational};
use crate::error::{Error, Result};
use crate::lattice::{Root, MAX_RANK};

/// A primitive linear form with positive leading coefficient.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct LinearForm(pub [i32; MAX_RANK]);

impl LinearForm {
    /// Normalizes `c` and returns the scalar `k` with `c = k · form`.
    pub fn normalize(c: &[i32]) -> Option<(LinearForm, i32)> {
        let g = c.iter().fold(0i32, |g, &x| g.gcd(&x));
        if g == 0 {
            return None;
        }
        let lead = *c.iter().find(|&&x| x != 0).unwrap();
        let k = if lead < 0 { -g } else { g };
        let mut f = [0; MAX_RANK];
        for (i, &x) in c.iter().enumerate() {
            f[i] = x / k;
        }
        Some((LinearForm(f), k))
    }

    pub fn from_root(r: &Root) -> Option<(LinearForm, i32)> {
        Self::normalize(r.coords())
    }

    pub fn to_poly(&self) -> Polynomial {
        Polynomial::linear(&self.0)
    }
}

/// Element of Frac(S): a numerator over a product of linear forms.
///
/// After normalization the numerator is not divisible by any stored factor,
/// which makes structural equality sound.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalFunction {
    num: Polynomial,
    den: Vec<(LinearForm, u32)>,
}

impl RationalFunction {
    pub fn zero() -> Self {
        RationalFunction { num: Polynomial::zero(), den: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction { num: p, den: Vec::new() }
    }

    /// `num / den`, where `den` must be a constant times a product of the
    /// given candidate linear forms.
    pub fn from_parts(num: Polynomial, den: &Polynomial, candidates: &[Root]) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut rest = den.clone();
        let mut factors = Vec::new();
        'outer: while !rest.is_constant() {
            for c in candidates {
                if let Some((f, _)) = LinearForm::from_root(c) {
                    if let Some(q) = rest.div_linear(&f.0) {
                        rest = q;
                        factors.push(f);
                        continue 'outer;
                    }
                }
            }
            return Err(Error::Precondition(format!("denominator {den} does not split into known linear forms")));
        }
        let mut r = Self::from_poly(num.scale(Rational::one() / rest.constant_term()));
        for f in factors {
            r.push_factor(f, 1);
        }
        r.reduce();
        Ok(r)
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator_factors(&self) -> &[(LinearForm, u32)] {
        &self.den
    }

    pub fn denominator(&self) -> Polynomial {
        let mut d = Polynomial::one();
        for (f, e) in &self.den {
            d = &d * &f.to_poly().pow(*e);
        }
        d
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial this represents, when the denominator is trivial.
    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        if self.den.is_empty() {
            Some(&self.num)
        } else {
            None
        }
    }

    fn push_factor(&mut self, f: LinearForm, e: u32) {
        match self.den.binary_search_by(|(g, _)| g.cmp(&f)) {
            Ok(k) => self.den[k].1 += e,
            Err(k) => self.den.insert(k, (f, e)),
        }
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        for k in 0..self.den.len() {
            while self.den[k].1 > 0 {
                match self.num.div_linear(&self.den[k].0 .0) {
                    Some(q) => {
                        self.num = q;
                        self.den[k].1 -= 1;
                    }
                    None => break,
                }
            }
        }
        self.den.retain(|(_, e)| *e > 0);
    }

    /// Division by a nonzero linear form given in simple-root coordinates.
    pub fn div_linear(&self, c: &[i32]) -> Result<Self> {
        let (f, k) = LinearForm::normalize(c).ok_or(Error::DivisionByZero)?;
        let mut r = self.clone();
        r.num = r.num.scale(Rational::new(1, k as i64));
        r.push_factor(f, 1);
        r.reduce();
        Ok(r)
    }

    pub fn scale(&self, c: Rational) -> Self {
        let mut r = self.clone();
        r.num = r.num.scale(c);
        if r.num.is_zero() {
            r.den.clear();
        }
        r
    }

    pub fn mul_poly(&self, p: &Polynomial) -> Self {
        let mut r = RationalFunction { num: &self.num * p, den: self.den.clone() };
        r.reduce();
        r
    }

    pub fn mul(&self, o: &RationalFunction) -> Self {
        let mut r = RationalFunction { num: &self.num * &o.num, den: self.den.clone() };
        for (f, e) in &o.den {
            r.push_factor(*f, *e);
        }
        r.reduce();
        r
    }

    pub fn add(&self, o: &RationalFunction) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        // Common denominator: per-factor maximum exponent.
        let mut den = self.den.clone();
        for (f, e) in &o.den {
            match den.binary_search_by(|(g, _)| g.cmp(f)) {
                Ok(k) => den[k].1 = den[k].1.max(*e),
                Err(k) => den.insert(k, (*f, *e)),
            }
        }
        let lift = |x: &RationalFunction| {
            let mut p = x.num.clone();
            for (f, e) in &den {
                let have = x.den.iter().find(|(g, _)| g == f).map_or(0, |(_, e)| *e);
                for _ in have..*e {
                    p = &p * &f.to_poly();
                }
            }
            p
        };
        let mut r = RationalFunction { num: &lift(self) + &lift(o), den };
        r.reduce();
        r
    }

    pub fn neg(&self) -> Self {
        self.scale(-Rational::one())
    }

    pub fn sub(&self, o: &RationalFunction) -> Self {
        self.add(&o.neg())
    }

    /// Applies a linear change of variables given by the images of α_j in
    /// simple-root coordinates (a Weyl group action).
    pub fn substitute(&self, images: &[Root]) -> Self {
        let polys: Vec<Polynomial> = images.iter().map(|r| Polynomial::linear(r.coords())).collect();
        let mut r = RationalFunction::from_poly(self.num.substitute(&polys));
        for (f, e) in &self.den {
            let mut c = [0i32; MAX_RANK];
            for (j, &fj) in f.0.iter().enumerate() {
                if fj != 0 {
                    for (i, x) in images[j].coords().iter().enumerate() {
                        c[i] += fj * x;
                    }
                }
            }
            for _ in 0..*e {
                r = r.div_linear(&c[..images.len()]).expect("automorphism maps forms to forms");
            }
        }
        r
    }

    pub fn fmt_vars(&self, f: &mut fmt::Formatter<'_>, var: &str) -> fmt::Result {
        if self.den.is_empty() {
            return self.num.fmt_vars(f, var);
        }
        write!(f, "(")?;
        self.num.fmt_vars(f, var)?;
        write!(f, ")/(")?;
        for (k, (g, e)) in self.den.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "(")?;
            g.to_poly().fmt_vars(f, var)?;
            write!(f, ")")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        write!(f, ")")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_vars(f, "a")
    }
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl std::ops::Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, o: RationalFunction) -> RationalFunction {
        RationalFunction::add(&self, &o)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ops::Mul;

    fn roots2() -> Vec<Root> {
        vec![Root::new(&[1, 0]), Root::new(&[0, 1]), Root::new(&[1, 1])]
    }

    #[test]
    fn normalize_examples() {
        let a1 = Polynomial::linear(&[1, 0]);
        let a2 = Polynomial::linear(&[0, 1]);
        let r = RationalFunction::from_parts(a1.scale(Rational::from_integer(2)), &Polynomial::integer(2), &roots2()).unwrap();
        assert_eq!(r, RationalFunction::from_poly(a1.clone()));
        let r = RationalFunction::from_parts(&a1 * &a2, &a1, &roots2()).unwrap();
        assert_eq!(r, RationalFunction::from_poly(a2.clone()));
        let r = RationalFunction::from_parts(-&a1, &Polynomial::integer(-1), &roots2()).unwrap();
        assert_eq!(r, RationalFunction::from_poly(a1.clone()));
        assert!(RationalFunction::from_parts(a1.clone(), &Polynomial::zero(), &roots2()).is_err());
    }

    #[test]
    fn field_ops() {
        let x = RationalFunction::one().div_linear(&[1, 0]).unwrap();
        let y = RationalFunction::one().div_linear(&[0, -1]).unwrap();
        // 1/a1 - 1/(-a2) = (a1+a2)/(a1 a2)
        let s = x.sub(&y);
        let expect = RationalFunction::from_parts(Polynomial::linear(&[1, 1]), &Polynomial::linear(&[1, 0]).mul(Polynomial::linear(&[0, 1])), &roots2()).unwrap();
        assert_eq!(s, expect);
        assert!(x.sub(&x).is_zero());
        let back = s.mul_poly(&Polynomial::linear(&[1, 0]).mul(Polynomial::linear(&[0, 1])));
        assert_eq!(back.as_polynomial().unwrap(), &Polynomial::linear(&[1, 1]));
        let z = RationalFunction::one().div_linear(&[2, 0]).unwrap();
        assert_eq!(z.scale(Rational::from_integer(2)), x);
    }

    #[test]
    fn substitution() {
        // s1 in A2 on root coordinates: a1 -> -a1, a2 -> a1+a2
        let imgs = [Root::new(&[-1, 0]), Root::new(&[1, 1])];
        let x = RationalFunction::from_poly(Polynomial::linear(&[0, 1])).div_linear(&[1, 0]).unwrap();
        let y = x.substitute(&imgs);
        let expect = RationalFunction::from_poly(Polynomial::linear(&[-1, -1])).div_linear(&[1, 0]).unwrap();
        assert_eq!(y, expect);
        assert_eq!(y.substitute(&imgs), x);
    }
}
