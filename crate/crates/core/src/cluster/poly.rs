//! Exact sparse multivariate Laurent polynomials over the integers.
//!
//! Terms map exponent vectors (entries may be negative) to nonzero
//! BigInt coefficients; the zero polynomial has no terms. Equality is
//! canonical-form comparison, which is what makes "each cluster variable
//! exactly once" checkable at all.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("division is not exact (Laurent phenomenon violation)")]
    InexactDivision,
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("evaluation hit a zero denominator")]
    ZeroDenominator,
    #[error("arity mismatch: {0} vs {1}")]
    Arity(usize, usize),
}

/// Sparse Laurent polynomial in a fixed number of variables.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Vec<i32>, BigInt>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: i64) -> Self {
        let mut t = BTreeMap::new();
        if c != 0 {
            t.insert(vec![0; nvars], BigInt::from(c));
        }
        Self { nvars, terms: t }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    /// The generator x_i (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut t = BTreeMap::new();
        t.insert(e, BigInt::one());
        Self { nvars, terms: t }
    }

    pub fn monomial(nvars: usize, exps: Vec<i32>, coeff: BigInt) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut t = BTreeMap::new();
        if !coeff.is_zero() {
            t.insert(exps, coeff);
        }
        Self { nvars, terms: t }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(e.clone()).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        Self { nvars: self.nvars, terms }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut terms: BTreeMap<Vec<i32>, BigInt> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<i32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                let entry = terms.entry(e).or_insert_with(BigInt::zero);
                *entry += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Self { nvars: self.nvars, terms }
    }

    pub fn mul_monomial(&self, exps: &[i32]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.iter().zip(exps).map(|(a, b)| a + b).collect(), c.clone()))
            .collect();
        Self { nvars: self.nvars, terms }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.nvars);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Componentwise minimum exponent over all terms (0 for the zero poly).
    fn min_exponents(&self) -> Vec<i32> {
        let mut min = vec![i32::MAX; self.nvars];
        for e in self.terms.keys() {
            for (m, &x) in min.iter_mut().zip(e) {
                *m = (*m).min(x);
            }
        }
        if self.terms.is_empty() {
            min = vec![0; self.nvars];
        }
        min
    }

    /// Exact division; fails whenever the quotient is not a Laurent
    /// polynomial. Failure is the Laurent-phenomenon tripwire.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, PolyError> {
        if divisor.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.nvars));
        }
        assert_eq!(self.nvars, divisor.nvars);
        // shift both into ordinary polynomials
        let smin = self.min_exponents();
        let dmin = divisor.min_exponents();
        let neg = |v: &[i32]| v.iter().map(|&x| -x).collect::<Vec<i32>>();
        let mut rem = self.mul_monomial(&neg(&smin));
        let div = divisor.mul_monomial(&neg(&dmin));
        let (dlead_e, dlead_c) = div.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let mut quot = Self::zero(self.nvars);
        while !rem.is_zero() {
            let (rlead_e, rlead_c) =
                rem.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())).unwrap();
            let qe: Vec<i32> = rlead_e.iter().zip(&dlead_e).map(|(a, b)| a - b).collect();
            if qe.iter().any(|&x| x < 0) {
                return Err(PolyError::InexactDivision);
            }
            let (qc, r) = num_integer::div_rem(rlead_c, dlead_c.clone());
            if !r.is_zero() {
                return Err(PolyError::InexactDivision);
            }
            let qterm = Self::monomial(self.nvars, qe, qc);
            quot = quot.add(&qterm);
            let sub = qterm.mul(&div);
            rem = rem.add(&sub.neg());
        }
        // undo the shifts
        let shift: Vec<i32> = smin.iter().zip(&dmin).map(|(a, b)| a - b).collect();
        Ok(quot.mul_monomial(&shift))
    }

    pub fn neg(&self) -> Self {
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    /// Evaluates at nonzero rationals.
    pub fn eval(&self, point: &[BigRational]) -> Result<BigRational, PolyError> {
        if point.len() != self.nvars {
            return Err(PolyError::Arity(point.len(), self.nvars));
        }
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = BigRational::from(c.clone());
            for (x, &k) in point.iter().zip(e) {
                if x.is_zero() && k < 0 {
                    return Err(PolyError::ZeroDenominator);
                }
                let p = x.pow(k);
                term *= p;
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Renders with variables x1..xn, exponent-vector style for JSON.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(e, c)| serde_json::json!({"exponents": e, "coefficient": c.to_string()}))
            .collect();
        serde_json::json!(terms)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut wrote = false;
            if !c.is_one() || e.iter().all(|&x| x == 0) {
                write!(f, "{c}")?;
                wrote = true;
            }
            for (i, &k) in e.iter().enumerate() {
                if k != 0 {
                    if wrote {
                        write!(f, "*")?;
                    }
                    wrote = true;
                    if k == 1 {
                        write!(f, "x{}", i + 1)?;
                    } else {
                        write!(f, "x{}^{}", i + 1, k)?;
                    }
                }
            }
            if c.is_negative() {
                // sign already printed with the coefficient
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> LaurentPoly {
        LaurentPoly::var(2, i)
    }

    #[test]
    fn arithmetic_and_canonical_form() {
        let a = x(0).add(&x(1));
        let b = x(0).add(&x(1).neg());
        let prod = a.mul(&b); // x0^2 - x1^2
        assert_eq!(prod.num_terms(), 2);
        let cancel = a.add(&a.neg());
        assert!(cancel.is_zero());
    }

    #[test]
    fn exact_division_round_trip() {
        let a = x(0).add(&x(1)).add(&LaurentPoly::one(2));
        let b = x(0).mul(&x(1)).add(&LaurentPoly::constant(2, 3));
        let prod = a.mul(&b);
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert_eq!(prod.div_exact(&b).unwrap(), a);
    }

    #[test]
    fn inexact_division_detected() {
        let a = x(0).add(&LaurentPoly::one(2));
        let b = x(1).add(&LaurentPoly::one(2));
        assert_eq!(a.div_exact(&b), Err(PolyError::InexactDivision));
    }

    #[test]
    fn laurent_division_with_negative_exponents() {
        // (x0 + x1) / x0 = 1 + x1/x0
        let a = x(0).add(&x(1));
        let q = a.div_exact(&x(0)).unwrap();
        let back = q.mul(&x(0));
        assert_eq!(back, a);
        assert!(q.terms().any(|(e, _)| e.iter().any(|&k| k < 0)));
    }

    #[test]
    fn eval_rationals() {
        use num_traits::FromPrimitive;
        let a = x(0).add(&x(1)); // x0 + x1
        let p = vec![
            BigRational::from_f64(0.5).unwrap(),
            BigRational::from_f64(0.25).unwrap(),
        ];
        assert_eq!(a.eval(&p).unwrap(), BigRational::from_f64(0.75).unwrap());
        let inv = LaurentPoly::monomial(2, vec![-1, 0], num_bigint::BigInt::from(1));
        assert_eq!(inv.eval(&p).unwrap(), BigRational::from_f64(2.0).unwrap());
    }
}
