//! Dense integer polynomials in one variable, ascending coefficients.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    c: Vec<BigInt>,
}

impl Poly {
    pub fn new(c: Vec<BigInt>) -> Poly {
        let mut p = Poly { c };
        p.trim();
        p
    }

    pub fn from_i64(c: &[i64]) -> Poly {
        Poly::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zero() -> Poly {
        Poly { c: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly { c: vec![BigInt::one()] }
    }

    pub fn monomial(coef: BigInt, k: usize) -> Poly {
        let mut c = vec![BigInt::zero(); k + 1];
        c[k] = coef;
        Poly::new(c)
    }

    /// `1 + t + ... + t^{d-1}`.
    pub fn q_integer(d: u32) -> Poly {
        Poly::new(vec![BigInt::one(); d as usize])
    }

    fn trim(&mut self) {
        while self.c.last().is_some_and(|x| x.is_zero()) {
            self.c.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.c
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.c.get(k).cloned().unwrap_or_default()
    }

    pub fn lead(&self) -> BigInt {
        self.c.last().cloned().unwrap_or_default()
    }

    pub fn scale(&self, k: &BigInt) -> Poly {
        Poly::new(self.c.iter().map(|x| x * k).collect())
    }

    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![BigInt::zero(); k];
        c.extend(self.c.iter().cloned());
        Poly { c }
    }

    /// `t^deg p(1/t)`.
    pub fn reversed(&self) -> Poly {
        Poly::new(self.c.iter().rev().cloned().collect())
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(self.c.iter().enumerate().skip(1).map(|(k, x)| x * BigInt::from(k)).collect())
    }

    pub fn content(&self) -> BigInt {
        self.c.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut g = self.content();
        if self.lead().is_negative() {
            g = -g;
        }
        Poly::new(self.c.iter().map(|x| x / &g).collect())
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + BigRational::from_integer(a.clone());
        }
        acc
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    /// `lc(b)^(deg a - deg b + 1) a mod b`.
    pub fn pseudo_rem(&self, b: &Poly) -> Poly {
        let db = b.degree().expect("division by zero polynomial");
        let Some(da) = self.degree().filter(|&da| da >= db) else {
            return self.clone();
        };
        let lb = b.lead();
        let mut r = self.clone();
        let mut steps = 0;
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.lead();
            r = r.scale(&lb) - b.scale(&lr).shift(dr - db);
            steps += 1;
        }
        for _ in steps..(da - db + 1) {
            r = r.scale(&lb);
        }
        r
    }

    /// Exact quotient `self / b`, `None` if the division leaves a remainder.
    pub fn div_exact(&self, b: &Poly) -> Option<Poly> {
        let db = b.degree().expect("division by zero polynomial");
        let lb = b.lead();
        let mut r = self.clone();
        let mut q = vec![BigInt::zero(); self.c.len().saturating_sub(db).max(1)];
        while let Some(dr) = r.degree() {
            if dr < db {
                return None;
            }
            let (k, rem) = r.lead().div_rem(&lb);
            if !rem.is_zero() {
                return None;
            }
            q[dr - db] = k.clone();
            r = r - b.scale(&k).shift(dr - db);
        }
        Some(Poly::new(q))
    }

    /// Greatest common divisor via primitive remainder sequences, primitive
    /// with positive leading coefficient.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.primitive(), other.primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        a.primitive()
    }

    /// Power series expansion of `self / den` up to `t^n`; needs `den(0) = ±1`.
    pub fn series_div(&self, den: &Poly, n: usize) -> Vec<BigInt> {
        let d0 = den.coeff(0);
        assert!(d0.abs().is_one(), "series division needs a unit constant term");
        let mut out: Vec<BigInt> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.coeff(k);
            for j in 1..=k.min(den.c.len().saturating_sub(1)) {
                acc -= &den.c[j] * &out[k - j];
            }
            out.push(acc * &d0);
        }
        out
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.c.len().max(rhs.c.len());
        Poly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.c.len().max(rhs.c.len());
        Poly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![BigInt::zero(); self.c.len() + rhs.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::new(c)
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.c.into_iter().map(|x| -x).collect())
    }
}

/// Writes `1+2t-t^3`; the zero polynomial prints as `0`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let neg = a.is_negative();
            let mag = a.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            first = false;
            let unit = mag.is_one();
            match k {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "t")?,
                1 => write!(f, "{mag}t")?,
                _ if unit => write!(f, "t^{k}")?,
                _ => write!(f, "{mag}t^{k}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<String> = self.c.iter().map(|x| x.to_string()).collect();
        // small coefficients stay numeric so the JSON remains readable
        if self.c.iter().all(|x| x.bits() < 53) {
            let n: Vec<i64> = self.c.iter().map(|x| i64::try_from(x).unwrap()).collect();
            n.serialize(s)
        } else {
            v.serialize(s)
        }
    }
}

/// Cyclotomic polynomials, memoized per call site.
#[derive(Default)]
pub struct Cyclotomics {
    cache: HashMap<u32, Poly>,
}

impl Cyclotomics {
    pub fn get(&mut self, k: u32) -> Poly {
        if let Some(p) = self.cache.get(&k) {
            return p.clone();
        }
        // t^k - 1 divided by every Φ_d with d | k, d < k
        let mut p = Poly::monomial(BigInt::one(), k as usize) - Poly::one();
        for d in 1..k {
            if k.is_multiple_of(d) {
                let phi = self.get(d);
                p = p.div_exact(&phi).expect("cyclotomic division is exact");
            }
        }
        self.cache.insert(k, p.clone());
        p
    }
}

/// Sturm chain of the square-free part of `p`.
#[derive(Debug)]
pub struct Sturm {
    chain: Vec<Poly>,
}

impl Sturm {
    pub fn new(p: &Poly) -> Sturm {
        let g = p.gcd(&p.derivative());
        let sf =
            if g.degree().unwrap_or(0) > 0 { p.div_exact(&g).expect("gcd divides").primitive() } else { p.primitive() };
        let mut chain = vec![sf.clone(), sf.derivative()];
        while let Some(b) = chain.last().filter(|b| !b.is_zero() && b.degree() > Some(0)).cloned() {
            let a = &chain[chain.len() - 2];
            let da = a.degree().unwrap();
            let db = b.degree().unwrap();
            let mut r = a.pseudo_rem(&b);
            let lb = b.lead();
            if lb.is_negative() && (da - db + 1) % 2 == 1 {
                r = -r;
            }
            let r = -r;
            if r.is_zero() {
                break;
            }
            // positive rescaling keeps the sign pattern
            let c = r.content();
            chain.push(Poly::new(r.coeffs().iter().map(|x| x / &c).collect()));
        }
        chain.retain(|p| !p.is_zero());
        Sturm { chain }
    }

    pub fn variations(&self, x: &BigRational) -> usize {
        let signs: Vec<i8> = self
            .chain
            .iter()
            .map(|p| {
                let v = p.eval(x);
                if v.is_positive() {
                    1
                } else if v.is_negative() {
                    -1
                } else {
                    0
                }
            })
            .filter(|&s| s != 0)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Distinct real roots in `(a, b]`, assuming `a` is not a root.
    pub fn count(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations(a).saturating_sub(self.variations(b))
    }
}

/// Cauchy bound: every root has modulus below `1 + max |a_i / a_n|`.
pub fn cauchy_bound(p: &Poly) -> BigRational {
    let lead = BigRational::from_integer(p.lead().abs());
    let m = p.coeffs()[..p.coeffs().len() - 1]
        .iter()
        .map(|x| BigRational::from_integer(x.abs()) / &lead)
        .fold(BigRational::zero(), |a, b| if b > a { b } else { a });
    m + BigRational::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn arithmetic_and_display() {
        let p = Poly::from_i64(&[1, 1]);
        let q = Poly::from_i64(&[1, -1]);
        assert_eq!((&p * &q).to_string(), "1-t^2");
        assert_eq!(Poly::from_i64(&[1, 2, 2, 1]).to_string(), "1+2t+2t^2+t^3");
        assert_eq!(Poly::from_i64(&[0, -3]).to_string(), "-3t");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(Poly::from_i64(&[1, 2, 3]).reversed(), Poly::from_i64(&[3, 2, 1]));
    }

    #[test]
    fn gcd_and_division() {
        let a = Poly::from_i64(&[-1, 0, 1]); // (t-1)(t+1)
        let b = Poly::from_i64(&[1, 2, 1]); // (t+1)^2
        assert_eq!(a.gcd(&b), Poly::from_i64(&[1, 1]));
        assert_eq!(a.div_exact(&Poly::from_i64(&[1, 1])), Some(Poly::from_i64(&[-1, 1])));
        assert_eq!(a.div_exact(&Poly::from_i64(&[2, 1])), None);
        let c = Poly::from_i64(&[6, 0, 4]);
        assert_eq!(c.content(), BigInt::from(2));
    }

    #[test]
    fn cyclotomic_values() {
        let mut cy = Cyclotomics::default();
        assert_eq!(cy.get(1), Poly::from_i64(&[-1, 1]));
        assert_eq!(cy.get(2), Poly::from_i64(&[1, 1]));
        assert_eq!(cy.get(6), Poly::from_i64(&[1, -1, 1]));
        assert_eq!(cy.get(12), Poly::from_i64(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn series() {
        let s = Poly::from_i64(&[1, 1]).series_div(&Poly::from_i64(&[1, -2]), 4);
        let v: Vec<i64> = s.iter().map(|x| i64::try_from(x).unwrap()).collect();
        assert_eq!(v, vec![1, 3, 6, 12, 24]);
    }

    #[test]
    fn sturm_counts() {
        // (t - 1/2)(t - 3)(t + 1)
        let p = &(&Poly::from_i64(&[-1, 2]) * &Poly::from_i64(&[-3, 1])) * &Poly::from_i64(&[1, 1]);
        let s = Sturm::new(&p);
        assert_eq!(s.count(&r(0, 1), &r(10, 1)), 2);
        assert_eq!(s.count(&r(0, 1), &r(1, 2)), 1);
        assert_eq!(s.count(&r(-2, 1), &r(0, 1)), 1);
        let sq = &p * &Poly::from_i64(&[-3, 1]);
        assert_eq!(Sturm::new(&sq).count(&r(0, 1), &r(10, 1)), 2);
        assert!(cauchy_bound(&p) > r(3, 1));
    }
}
