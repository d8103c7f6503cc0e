use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::{binomial, factorial, PolyError, Rational};

/// Exponent vector of a monomial `ω₁^e₁ ⋯ ωₙ^eₙ`.
///
/// Ordered graded-lexicographically with `ω₁ > ω₂ > … > ωₙ`: higher total
/// degree is greater, ties broken by the first differing exponent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of total degree `degree` in `nvars` variables, in descending
/// graded-lex order (so `ω₁^degree` comes first).
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    fn rec(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if pos + 1 == cur.len() {
            cur[pos] = left;
            out.push(Monomial(cur.clone()));
            return;
        }
        for e in (0..=left).rev() {
            cur[pos] = e;
            rec(pos + 1, left - e, cur, out);
        }
    }
    if nvars == 0 {
        return if degree == 0 { vec![Monomial(vec![])] } else { vec![] };
    }
    let mut out = Vec::new();
    rec(0, degree, &mut vec![0; nvars], &mut out);
    out
}

/// A polynomial in `ω₁..ωₙ` with exact rational coefficients.
///
/// Terms are kept in a sorted map with no zero coefficients, so structural
/// equality is mathematical equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightPolynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

/// One term in the JSON wire format: `{"exp":[..],"num":..,"den":..}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub exp: Vec<u32>,
    pub num: i128,
    pub den: i128,
}

impl WeightPolynomial {
    pub fn zero(nvars: usize) -> Self {
        WeightPolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(Monomial::one(nvars), c)
    }

    /// The variable `ω_{index+1}`.
    pub fn var(nvars: usize, index: usize) -> Self {
        assert!(index < nvars, "variable index {index} out of range");
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        Self::monomial(Monomial(exps), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(m.nvars());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// `Σ coeffs[i]·ω_{i+1}`.
    pub fn linear_form(coeffs: &[Rational]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            let mut exps = vec![0; n];
            exps[i] = 1;
            p.add_term(Monomial(exps), c.clone());
        }
        p
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut p = Self::zero(nvars);
        for (exps, c) in terms {
            if exps.len() != nvars {
                return Err(PolyError::DimensionMismatch {
                    expected: nvars,
                    found: exps.len(),
                });
            }
            p.add_term(Monomial(exps), c);
        }
        Ok(p)
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

    /// Terms in descending graded-lex order (leading term first).
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// The common degree of all terms, if there is one. Zero is homogeneous of
    /// every degree and reports `None`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(Monomial::degree);
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn check_dim(&self, other: &Self) -> Result<(), PolyError> {
        if self.nvars != other.nvars {
            return Err(PolyError::DimensionMismatch {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_dim(other)?;
        let mut out = Self::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        WeightPolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one(self.nvars);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Simultaneous substitution `ω_i ↦ images[i]`.
    pub fn substitute(&self, images: &[WeightPolynomial]) -> Result<Self, PolyError> {
        if images.len() != self.nvars {
            return Err(PolyError::DimensionMismatch {
                expected: self.nvars,
                found: images.len(),
            });
        }
        let target = images.first().map_or(0, |p| p.nvars);
        if let Some(bad) = images.iter().find(|p| p.nvars != target) {
            return Err(PolyError::DimensionMismatch {
                expected: target,
                found: bad.nvars,
            });
        }
        let max_exp: Vec<u32> = (0..self.nvars)
            .map(|i| self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0))
            .collect();
        let powers: Vec<Vec<WeightPolynomial>> = images
            .iter()
            .zip(&max_exp)
            .map(|(img, &top)| {
                let mut pw = vec![WeightPolynomial::one(target)];
                for k in 1..=top as usize {
                    let next = &pw[k - 1] * img;
                    pw.push(next);
                }
                pw
            })
            .collect();
        let mut out = WeightPolynomial::zero(target);
        for (m, c) in &self.terms {
            let mut term = WeightPolynomial::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    term = &term * &powers[i][e as usize];
                }
            }
            for (tm, tc) in term.terms {
                out.add_term(tm, tc);
            }
        }
        Ok(out)
    }

    /// Sum of the terms of total degree `degree`.
    pub fn homogeneous_component(&self, degree: u32) -> Self {
        WeightPolynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// `∂^order / ∂ω_var^order`.
    pub fn partial(&self, var: usize, order: u32) -> Result<Self, PolyError> {
        self.check_var(var)?;
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e < order {
                continue;
            }
            let falling: BigInt = (0..order).fold(BigInt::one(), |acc, k| acc * BigInt::from(e - k));
            let mut exps = m.0.clone();
            exps[var] -= order;
            out.add_term(Monomial(exps), c * BigRational::from_integer(falling));
        }
        Ok(out)
    }

    fn check_var(&self, var: usize) -> Result<(), PolyError> {
        if var >= self.nvars {
            return Err(PolyError::VariableOutOfRange {
                index: var,
                nvars: self.nvars,
            });
        }
        Ok(())
    }

    /// Splits a degree-`l` homogeneous polynomial as `Σ_i f_i · ω_var^{l−i}`,
    /// returning `[f_0, …, f_l]` where `f_i` has degree `i` and does not
    /// involve `ω_var`. The zero polynomial decomposes as `[0]`.
    pub fn layer_decompose(&self, var: usize) -> Result<Vec<WeightPolynomial>, PolyError> {
        self.check_var(var)?;
        if self.is_zero() {
            return Ok(vec![Self::zero(self.nvars)]);
        }
        let l = self.homogeneous_degree().ok_or(PolyError::NotHomogeneous)?;
        let mut layers = vec![Self::zero(self.nvars); l as usize + 1];
        for (m, c) in &self.terms {
            let e = m.0[var];
            let mut exps = m.0.clone();
            exps[var] = 0;
            layers[(l - e) as usize].add_term(Monomial(exps), c.clone());
        }
        Ok(layers)
    }

    /// Inverse of [`layer_decompose`](Self::layer_decompose).
    pub fn reassemble(layers: &[WeightPolynomial], var: usize) -> Result<Self, PolyError> {
        let nvars = layers.first().map_or(0, |p| p.nvars);
        let l = layers.len().saturating_sub(1) as u32;
        let mut out = Self::zero(nvars);
        let x = Self::var(nvars, var);
        for (i, f) in layers.iter().enumerate() {
            out = out.try_add(&f.try_mul(&x.pow(l - i as u32))?)?;
        }
        Ok(out)
    }

    /// Whether `ω_var` divides the polynomial.
    pub fn divisible_by_var(&self, var: usize) -> Result<bool, PolyError> {
        self.check_var(var)?;
        Ok(self.terms.keys().all(|m| m.0[var] > 0))
    }

    /// Whether the linear form `lin` divides the polynomial.
    ///
    /// Writes `lin = c·ω_k + rest` with `c ≠ 0` and tests that the substitution
    /// `ω_k ↦ −rest/c` annihilates the polynomial.
    pub fn divisible_by_linear(&self, lin: &WeightPolynomial) -> Result<bool, PolyError> {
        self.check_dim(lin)?;
        if lin.homogeneous_degree() != Some(1) {
            return Err(PolyError::NotHomogeneous);
        }
        if self.is_zero() {
            return Ok(true);
        }
        let (k, c) = lin
            .terms
            .iter()
            .map(|(m, c)| (m.0.iter().position(|&e| e == 1).unwrap(), c.clone()))
            .next_back()
            .unwrap();
        let rest = lin.try_sub(&Self::var(self.nvars, k).scale(&c))?;
        let mut images: Vec<_> = (0..self.nvars).map(|i| Self::var(self.nvars, i)).collect();
        images[k] = rest.scale(&(-c.recip()));
        Ok(self.substitute(&images)?.is_zero())
    }

    /// Whether one polynomial is a nonzero rational multiple of the other,
    /// decided by cross-multiplying coefficients.
    pub fn is_proportional_to(&self, other: &Self) -> bool {
        if self.nvars != other.nvars || self.is_zero() || other.is_zero() {
            return false;
        }
        if self.terms.len() != other.terms.len() {
            return false;
        }
        if !self.terms.keys().zip(other.terms.keys()).all(|(a, b)| a == b) {
            return false;
        }
        let (m0, a0) = self.terms.iter().next().unwrap();
        let b0 = &other.terms[m0];
        self.terms
            .iter()
            .all(|(m, a)| a * b0 == &other.terms[m] * a0)
    }

    /// Coefficient vector against an explicit monomial basis.
    pub fn coefficients_in(&self, basis: &[Monomial]) -> Vec<Rational> {
        basis.iter().map(|m| self.coeff(m)).collect()
    }

    pub fn to_records(&self) -> Result<Vec<TermRecord>, PolyError> {
        self.terms()
            .map(|(m, c)| {
                let big = || PolyError::CoefficientTooLarge(c.to_string());
                Ok(TermRecord {
                    exp: m.0.clone(),
                    num: c.numer().to_i128().ok_or_else(big)?,
                    den: c.denom().to_i128().ok_or_else(big)?,
                })
            })
            .collect()
    }

    pub fn from_records(nvars: usize, records: &[TermRecord]) -> Result<Self, PolyError> {
        let terms = records
            .iter()
            .map(|r| {
                if r.den == 0 {
                    return Err(PolyError::MalformedTerm("zero denominator".into()));
                }
                Ok((
                    r.exp.clone(),
                    BigRational::new(BigInt::from(r.num), BigInt::from(r.den)),
                ))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_terms(nvars, terms)
    }

    /// Plain-ASCII rendering, e.g. `2*w1^2 - 4*w1*w2 + 2*w2^2`.
    pub fn to_ascii(&self) -> String {
        self.render(|i| format!("w{}", i + 1), |e| format!("^{e}"), "*")
    }

    fn render(
        &self,
        name: impl Fn(usize) -> String,
        power: impl Fn(u32) -> String,
        sep: &str,
    ) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let abs = c.abs();
            let vars: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        name(i)
                    } else {
                        format!("{}{}", name(i), power(e))
                    }
                })
                .collect();
            let unit = abs.is_one() && !vars.is_empty();
            if !unit {
                out.push_str(&abs.to_string());
            }
            if !vars.is_empty() {
                if !unit && !sep.is_empty() {
                    out.push_str(sep);
                }
                out.push_str(&vars.join(sep));
            }
        }
        out
    }
}

fn subscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    n.to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).unwrap() as usize])
        .collect()
}

fn superscript(n: u32) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).unwrap() as usize])
        .collect()
}

impl fmt::Display for WeightPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.render(|i| format!("ω{}", subscript(i + 1)), superscript, "");
        f.write_str(&s)
    }
}

impl Serialize for WeightPolynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_records()
            .map_err(serde::ser::Error::custom)?
            .serialize(serializer)
    }
}

impl Add for &WeightPolynomial {
    type Output = WeightPolynomial;
    fn add(self, rhs: &WeightPolynomial) -> WeightPolynomial {
        self.try_add(rhs).expect("polynomial dimension mismatch")
    }
}

impl Sub for &WeightPolynomial {
    type Output = WeightPolynomial;
    fn sub(self, rhs: &WeightPolynomial) -> WeightPolynomial {
        self.try_sub(rhs).expect("polynomial dimension mismatch")
    }
}

impl Mul for &WeightPolynomial {
    type Output = WeightPolynomial;
    fn mul(self, rhs: &WeightPolynomial) -> WeightPolynomial {
        self.try_mul(rhs).expect("polynomial dimension mismatch")
    }
}

impl Neg for &WeightPolynomial {
    type Output = WeightPolynomial;
    fn neg(self) -> WeightPolynomial {
        self.scale(&-Rational::one())
    }
}

pub(crate) fn binomial_rational(n: u32, k: u32) -> Rational {
    BigRational::from_integer(binomial(n, k))
}

pub(crate) fn inverse_factorial(n: u32) -> Rational {
    BigRational::new(BigInt::one(), factorial(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{rational, ratio};

    fn w(n: usize, i: usize) -> WeightPolynomial {
        WeightPolynomial::var(n, i)
    }

    /// `aω₁² − abω₁ω₂ + bω₂²`.
    fn psi(a: i64, b: i64) -> WeightPolynomial {
        WeightPolynomial::from_terms(
            2,
            vec![
                (vec![2, 0], rational(a)),
                (vec![1, 1], rational(-a * b)),
                (vec![0, 2], rational(b)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn binomial_square() {
        let s = &w(2, 0) + &w(2, 1);
        let sq = s.pow(2);
        let expected = WeightPolynomial::from_terms(
            2,
            vec![
                (vec![2, 0], rational(1)),
                (vec![1, 1], rational(2)),
                (vec![0, 2], rational(1)),
            ],
        )
        .unwrap();
        assert_eq!(sq, expected);
        assert_eq!(sq.to_string(), "ω₁² + 2ω₁ω₂ + ω₂²");
    }

    #[test]
    fn times_zero() {
        let p = &w(3, 0) + &w(3, 2);
        assert!((&p * &WeightPolynomial::zero(3)).is_zero());
        assert!(p.scale(&rational(0)).is_zero());
    }

    #[test]
    fn psi_two_two() {
        assert_eq!(psi(2, 2).to_ascii(), "2*w1^2 - 4*w1*w2 + 2*w2^2");
    }

    #[test]
    fn dimension_mismatch() {
        let err = w(2, 0).try_add(&w(3, 0)).unwrap_err();
        assert_eq!(err, PolyError::DimensionMismatch { expected: 2, found: 3 });
        let err = w(2, 0).substitute(&[w(2, 0)]).unwrap_err();
        assert!(matches!(err, PolyError::DimensionMismatch { .. }));
    }

    #[test]
    fn graded_lex_order() {
        let p = &(&w(2, 1) + &w(2, 0).pow(2)) + &WeightPolynomial::one(2);
        let order: Vec<Vec<u32>> = p.terms().map(|(m, _)| m.exponents().to_vec()).collect();
        assert_eq!(order, vec![vec![2, 0], vec![0, 1], vec![0, 0]]);
        let mons = monomials_of_degree(3, 2);
        assert_eq!(mons.len(), 6);
        assert_eq!(mons[0].exponents(), &[2, 0, 0]);
        assert_eq!(mons[5].exponents(), &[0, 0, 2]);
        assert!(mons.windows(2).all(|p| p[0] > p[1]));
    }

    #[test]
    fn identity_substitution() {
        let p = psi(2, 3);
        let images = vec![w(2, 0), w(2, 1)];
        assert_eq!(p.substitute(&images).unwrap(), p);
    }

    #[test]
    fn homogeneous_components() {
        let p = &w(2, 0) + &(&w(2, 0) * &w(2, 1));
        assert_eq!(p.homogeneous_component(2), &w(2, 0) * &w(2, 1));
        assert!(p.homogeneous_component(5).is_zero());
        assert_eq!(psi(2, 3).homogeneous_component(2), psi(2, 3));
        assert!(!p.is_homogeneous());
    }

    #[test]
    fn layer_decomposition() {
        let sq = w(2, 1).pow(2);
        let layers = sq.layer_decompose(1).unwrap();
        assert_eq!(layers.len(), 3);
        assert_eq!(layers[0], WeightPolynomial::one(2));
        assert!(layers[1].is_zero() && layers[2].is_zero());

        let (a, b) = (2, 3);
        let layers = psi(a, b).layer_decompose(1).unwrap();
        assert_eq!(layers[0], WeightPolynomial::constant(2, rational(b)));
        assert_eq!(layers[1], w(2, 0).scale(&rational(-a * b)));
        assert_eq!(layers[2], w(2, 0).pow(2).scale(&rational(a)));
        assert_eq!(WeightPolynomial::reassemble(&layers, 1).unwrap(), psi(a, b));

        let bad = &w(2, 0) + &WeightPolynomial::one(2);
        assert_eq!(bad.layer_decompose(0).unwrap_err(), PolyError::NotHomogeneous);
    }

    #[test]
    fn partial_derivatives() {
        let p = w(3, 0).pow(3).scale(&ratio(1, 2));
        let d2 = p.partial(0, 2).unwrap();
        assert_eq!(d2, w(3, 0).scale(&rational(3)));
        assert!(p.partial(1, 1).unwrap().is_zero());
    }

    #[test]
    fn divisibility() {
        let p = &w(2, 0) * &(&w(2, 0) - &w(2, 1));
        assert!(p.divisible_by_var(0).unwrap());
        assert!(!p.divisible_by_var(1).unwrap());
        let lin = &w(2, 1) - &w(2, 0);
        assert!(p.divisible_by_linear(&lin).unwrap());
        assert!(!psi(2, 2).divisible_by_linear(&w(2, 0)).unwrap());
        // 2ω₁² − 4ω₁ω₂ + 2ω₂² = 2(ω₁ − ω₂)²
        assert!(psi(2, 2).divisible_by_linear(&lin).unwrap());
    }

    #[test]
    fn proportionality() {
        let p = psi(2, 3);
        assert!(p.is_proportional_to(&p.scale(&ratio(-5, 7))));
        assert!(!p.is_proportional_to(&psi(2, 2)));
        assert!(!p.is_proportional_to(&WeightPolynomial::zero(2)));
    }

    #[test]
    fn json_records() {
        let p = psi(1, 4).scale(&ratio(1, 2));
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(
            json,
            r#"[{"exp":[2,0],"num":1,"den":2},{"exp":[1,1],"num":-2,"den":1},{"exp":[0,2],"num":2,"den":1}]"#
        );
        let records: Vec<TermRecord> = serde_json::from_str(&json).unwrap();
        assert_eq!(WeightPolynomial::from_records(2, &records).unwrap(), p);
    }
}
