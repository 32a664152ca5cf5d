//! Dense univariate polynomials over the rationals.
//!
//! Field-coefficient counterpart of `dpoly`: plain Euclidean division, monic
//! gcds, evaluation, Taylor shift and (bounded) rational root extraction.
//! Heavy eliminations happen in `dpoly` over integers; this type is for the
//! field-level work (extension arithmetic, local expansions, witnesses).

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::dpoly::ZPoly;
use crate::rat::{clear_denominators, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UPoly {
    pub coeffs: Vec<Rational>,
}

impl UPoly {
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        UPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial `c * x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.push(c);
        UPoly { coeffs }
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Self::from_coeffs(c.iter().map(|&x| Rational::from_int(x)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg_or_0(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lc(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero coefficients as (exponent, value) pairs, low to high.
    pub fn coeffs_iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..n).map(|i| &self.coeff(i) + &other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..n).map(|i| &self.coeff(i) - &other.coeff(i)).collect())
    }

    pub fn neg(&self) -> Self {
        UPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UPoly { coeffs }
    }

    /// Euclidean division: `(q, r)` with `self = q*d + r`, `deg r < deg d`.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.deg_or_0();
        let ld = d.lc();
        let mut r = self.clone();
        let mut q = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let c = &r.lc() / &ld;
            q[dr - dd] = c.clone();
            r = r.sub(&d.scale(&c).shift_up(dr - dd));
        }
        (Self::from_coeffs(q), r)
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let inv = self.lc().recip().unwrap();
        self.scale(&inv)
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns (g, u, v) with u·self + v·other = g and g monic
    /// (or zero when both inputs are zero).
    pub fn xgcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut u0, mut u1) = (Self::one(), Self::zero());
        let (mut v0, mut v1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let nu = u0.sub(&q.mul(&u1));
            let nv = v0.sub(&q.mul(&v1));
            r0 = r1;
            r1 = r;
            u0 = u1;
            u1 = nu;
            v0 = v1;
            v1 = nv;
        }
        if r0.is_zero() {
            return (Self::zero(), Self::zero(), Self::zero());
        }
        let inv = r0.lc().recip().unwrap();
        (r0.scale(&inv), u0.scale(&inv), v0.scale(&inv))
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &Rational::from_int(i as i64))
                .collect(),
        )
    }

    /// Squarefree part (monic).
    pub fn squarefree_part(&self) -> Self {
        if self.deg_or_0() == 0 {
            return if self.is_zero() { Self::zero() } else { Self::one() };
        }
        let g = self.gcd(&self.derivative());
        if g.deg_or_0() == 0 {
            return self.monic();
        }
        self.divrem(&g).0.monic()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Taylor shift: `p(x + a)`.
    pub fn shift_var(&self, a: &Rational) -> Self {
        let mut out = Self::zero();
        // Horner on (x + a)
        let xa = Self::from_coeffs(vec![a.clone(), Rational::one()]);
        for c in self.coeffs.iter().rev() {
            out = out.mul(&xa).add(&Self::constant(c.clone()));
        }
        out
    }

    /// Coefficient reversal against a reference degree: `x^d * p(1/x)`.
    /// Used to inspect behaviour at infinity. Requires `d >= deg p`.
    pub fn reverse(&self, d: usize) -> Self {
        assert!(d + 1 >= self.coeffs.len());
        let mut coeffs = vec![Rational::zero(); d + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[d - i] = c.clone();
        }
        Self::from_coeffs(coeffs)
    }

    /// Order of vanishing at 0.
    pub fn trailing_order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Compose: `self(inner)`.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut out = Self::zero();
        for c in self.coeffs.iter().rev() {
            out = out.mul(inner).add(&Self::constant(c.clone()));
        }
        out
    }

    /// Primitive integer image (denominators cleared, content stripped).
    pub fn to_zpoly(&self) -> ZPoly {
        ZPoly::from_coeffs(clear_denominators(&self.coeffs))
    }

    pub fn from_zpoly(z: &ZPoly) -> Self {
        Self::from_coeffs(z.coeffs.iter().cloned().map(Rational::from_bigint).collect())
    }

    /// Resultant of two rational polynomials, computed fraction-free on the
    /// primitive integer images; exact up to a nonzero rational factor, which
    /// is all the elimination logic needs (zero/nonzero and root sets).
    pub fn resultant_scaled(&self, other: &Self) -> Rational {
        if self.is_zero() || other.is_zero() {
            return Rational::zero();
        }
        Rational::from_bigint(self.to_zpoly().resultant(&other.to_zpoly()))
    }

    /// All rational roots with small height: numerator and denominator of the
    /// reduced root bounded by `height`. This is deliberately a bounded
    /// search — callers use it to prefer rational witnesses, never for
    /// completeness of a decision (larger roots are simply handled through
    /// extension arithmetic instead).
    pub fn small_rational_roots(&self, height: u64) -> Vec<Rational> {
        let mut out = Vec::new();
        if self.is_zero() {
            return out;
        }
        let z = self.squarefree_part().to_zpoly();
        if z.deg_or_0() == 0 {
            return out;
        }
        let k = z.trailing_order().unwrap_or(0);
        if k > 0 {
            out.push(Rational::zero());
        }
        let a0 = z.coeffs[k].clone();
        let an = z.lc();
        let nums = small_divisors(&a0, height);
        let dens = small_divisors(&an, height);
        for n in &nums {
            for d in &dens {
                for sign in [1i64, -1] {
                    let cand = Rational::from_big(n * BigInt::from(sign), d.clone());
                    if self.eval(&cand).is_zero() && !out.contains(&cand) {
                        out.push(cand);
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// Divides out all (rational-root) linear factors found at small height;
    /// returns (roots with multiplicity stripped to 1 in output, remaining factor).
    pub fn strip_small_rational_roots(&self, height: u64) -> (Vec<Rational>, UPoly) {
        let roots = self.small_rational_roots(height);
        let mut rest = self.clone();
        for r in &roots {
            let lin = UPoly::from_coeffs(vec![-r, Rational::one()]);
            loop {
                let (q, rem) = rest.divrem(&lin);
                if rem.is_zero() && !q.is_zero() {
                    rest = q;
                    if !rest.eval(r).is_zero() {
                        break;
                    }
                } else {
                    break;
                }
            }
        }
        (roots, rest)
    }
}

/// Positive divisors of `n` up to `bound` (trial division; `n` nonzero).
/// Includes any divisor `d <= bound`, plus 1 always.
fn small_divisors(n: &BigInt, bound: u64) -> Vec<BigInt> {
    let mut out = vec![BigInt::one()];
    if Zero::is_zero(n) {
        return out;
    }
    let n = n.abs();
    let mut d: u64 = 2;
    while d <= bound {
        let db = BigInt::from(d);
        if (&n % &db).is_zero() && !out.contains(&db) {
            out.push(db);
        }
        d += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divrem_and_gcd() {
        // (x^2 - 1) = (x - 1)(x + 1)
        let p = UPoly::from_i64(&[-1, 0, 1]);
        let d = UPoly::from_i64(&[-1, 1]);
        let (q, r) = p.divrem(&d);
        assert!(r.is_zero());
        assert_eq!(q, UPoly::from_i64(&[1, 1]));
        let g = p.gcd(&UPoly::from_i64(&[1, 1]));
        assert_eq!(g, UPoly::from_i64(&[1, 1]));
    }

    #[test]
    fn squarefree_and_shift() {
        let cube = UPoly::from_i64(&[-1, 1]); // (x-1)
        let p = cube.mul(&cube).mul(&cube);
        assert_eq!(p.squarefree_part(), UPoly::from_i64(&[-1, 1]));
        let shifted = p.shift_var(&Rational::one()); // (x)^3
        assert_eq!(shifted, UPoly::from_i64(&[0, 0, 0, 1]));
    }

    #[test]
    fn finds_small_rational_roots() {
        // 6x^3 + x^2 - 5x - 2 has roots... take (2x-1)(3x+1)(x+2) = 6x^3+...
        let p = UPoly::from_i64(&[-1, 2])
            .mul(&UPoly::from_i64(&[1, 3]))
            .mul(&UPoly::from_i64(&[2, 1]));
        let roots = p.small_rational_roots(50);
        assert_eq!(
            roots,
            vec![Rational::from_int(-2), Rational::new(-1, 3), Rational::new(1, 2)]
        );
        let (found, rest) = p.strip_small_rational_roots(50);
        assert_eq!(found.len(), 3);
        assert_eq!(rest.degree(), Some(0));
    }

    #[test]
    fn reversal_sees_infinity() {
        // p = 2x^2 + 3: rev against degree 3 = 2x + 3x^3 (root at x=0 of order 1
        // encodes one root of p at infinity when regarded with degree 3)
        let p = UPoly::from_i64(&[3, 0, 2]);
        let r = p.reverse(3);
        assert_eq!(r, UPoly::from_i64(&[0, 2, 0, 3]));
    }
}
