//! Dense polynomials over an exact ring, generic in the coefficient ring.
//!
//! This is the fraction-free engine room: pseudo-division, primitive-PRS
//! gcds and subresultant resultants over `Z`, `Z[x]`, `Z[x,y]`, ... by
//! instantiating `DPoly` recursively. All divisions performed inside the
//! PRS algorithms are exact by the subresultant theory; `exact_div` panics
//! if that ever fails, which would indicate a bug rather than bad input.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Coefficient rings usable under `DPoly`: GCD domains with exact division.
pub trait ExactRing: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Exact division returning `None` when `other` does not divide `self`.
    fn exact_div_checked(&self, other: &Self) -> Option<Self>;
    /// GCD normalized to the canonical associate (non-negative leading unit).
    fn gcd(&self, other: &Self) -> Self;
    /// True when the canonical-associate normalization would flip the sign.
    fn is_negative(&self) -> bool;

    /// Exact division; only called on known-divisible pairs.
    fn exact_div(&self, other: &Self) -> Self {
        self.exact_div_checked(other)
            .expect("inexact division in fraction-free algorithm")
    }
}

impl ExactRing for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div_checked(&self, other: &Self) -> Option<Self> {
        if Zero::is_zero(other) {
            return None;
        }
        let (q, r) = self.div_rem(other);
        if Zero::is_zero(&r) {
            Some(q)
        } else {
            None
        }
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

/// Dense univariate polynomial over `R`; invariant: no trailing zero
/// coefficient (the zero polynomial is the empty vector).
#[derive(Debug, Clone, PartialEq)]
pub struct DPoly<R: ExactRing> {
    pub coeffs: Vec<R>,
}

impl<R: ExactRing> DPoly<R> {
    pub fn from_coeffs(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        DPoly { coeffs }
    }

    pub fn zero() -> Self {
        DPoly { coeffs: vec![] }
    }

    pub fn constant(c: R) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg_or_0(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lc(&self) -> R {
        self.coeffs.last().cloned().unwrap_or_else(R::zero)
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    /// Order of vanishing at 0 (index of first nonzero coefficient).
    pub fn trailing_order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).add(&other.coeff(i)));
        }
        Self::from_coeffs(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).sub(&other.coeff(i)));
        }
        Self::from_coeffs(out)
    }

    pub fn neg(&self) -> Self {
        DPoly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, c: &R) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        DPoly {
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn scale_exact_div(&self, c: &R) -> Self {
        DPoly {
            coeffs: self.coeffs.iter().map(|a| a.exact_div(c)).collect(),
        }
    }

    /// Multiplication by the variable to the k-th power.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        DPoly { coeffs }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(mul_usize(c, i));
        }
        Self::from_coeffs(out)
    }

    /// GCD of all coefficients (canonical associate); zero for the zero poly.
    pub fn content(&self) -> R {
        let mut g = R::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Canonical associate: leading coefficient made non-negative.
    pub fn canonical_assoc(&self) -> Self {
        if self.coeffs.last().map_or(false, |c| c.is_negative()) {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Content-free copy with canonical sign.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.lc().is_negative() {
            g = g.neg();
        }
        self.scale_exact_div(&g)
    }

    /// Pseudo-remainder: returns `r` with `lc(b)^(da-db+1) * a = q*b + r`,
    /// `deg r < deg b`. Requires `b != 0` and `deg a >= deg b`.
    pub fn prem(&self, b: &Self) -> Self {
        let db = b.degree().expect("prem by zero");
        let da = self.degree().expect("prem of zero");
        debug_assert!(da >= db);
        let lb = b.lc();
        let mut r = self.clone();
        let mut steps = da + 1 - db;
        while let Some(dr) = r.degree() {
            if dr < db || steps == 0 {
                break;
            }
            let lr = r.lc();
            r = r.scale(&lb).sub(&b.scale(&lr).shift_up(dr - db));
            steps -= 1;
        }
        // pad so the identity holds with the full power of lc(b)
        for _ in 0..steps {
            r = r.scale(&lb);
        }
        r
    }

    /// Exact polynomial division (`self = q * b`); `None` if not divisible.
    pub fn exact_poly_div(&self, b: &Self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        let db = b.degree()?;
        let da = self.degree()?;
        if da < db {
            return None;
        }
        let lb = b.lc();
        let mut r = self.clone();
        let mut q = vec![R::zero(); da - db + 1];
        while let Some(dr) = r.degree() {
            if dr < db {
                return None;
            }
            let cand = r.lc().exact_div_checked(&lb)?;
            q[dr - db] = cand.clone();
            r = r.sub(&b.scale(&cand).shift_up(dr - db));
            if r.is_zero() {
                break;
            }
        }
        if !r.is_zero() {
            return None;
        }
        Some(Self::from_coeffs(q))
    }

    /// Primitive-PRS GCD, canonical associate.
    pub fn gcd_poly(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.canonical_assoc();
        }
        if other.is_zero() {
            return self.canonical_assoc();
        }
        let cg = self.content().gcd(&other.content());
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.deg_or_0() < b.deg_or_0() {
            core::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.degree() == Some(0) {
                return DPoly::constant(cg);
            }
            let r = a.prem(&b).primitive_part();
            a = b;
            b = r;
        }
        a.primitive_part().scale(&cg)
    }

    /// Resultant by the subresultant PRS (Collins/Brown). Exact up to sign.
    pub fn resultant(&self, other: &Self) -> R {
        if self.is_zero() || other.is_zero() {
            return R::zero();
        }
        let mut a = self.clone();
        let mut b = other.clone();
        if a.deg_or_0() < b.deg_or_0() {
            core::mem::swap(&mut a, &mut b);
        }
        if b.deg_or_0() == 0 {
            return pow_ring(&b.lc(), a.deg_or_0());
        }
        let mut g = R::one();
        let mut h = R::one();
        loop {
            let da = a.degree().unwrap();
            let db = b.degree().unwrap();
            let delta = da - db;
            let r = a.prem(&b);
            a = b;
            if r.is_zero() {
                return R::zero();
            }
            let denom = g.mul(&pow_ring(&h, delta));
            b = r.scale_exact_div(&denom);
            g = a.lc();
            if delta > 0 {
                h = pow_ring(&g, delta).exact_div(&pow_ring(&h, delta - 1));
            }
            if b.degree() == Some(0) {
                let p = a.degree().unwrap();
                let num = pow_ring(&b.lc(), p);
                return if p >= 1 {
                    num.exact_div(&pow_ring(&h, p - 1))
                } else {
                    num
                };
            }
        }
    }

    /// Squarefree part (primitive, canonical sign).
    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        if self.deg_or_0() == 0 {
            return DPoly::constant(R::one());
        }
        let p = self.primitive_part();
        let d = p.derivative();
        let g = p.gcd_poly(&d);
        if g.deg_or_0() == 0 {
            return p;
        }
        p.exact_poly_div(&g)
            .expect("gcd must divide")
            .primitive_part()
    }
}

fn mul_usize<R: ExactRing>(c: &R, n: usize) -> R {
    let mut m = R::zero();
    let mut base = c.clone();
    let mut e = n;
    while e > 0 {
        if e & 1 == 1 {
            m = m.add(&base);
        }
        base = base.add(&base);
        e >>= 1;
    }
    m
}

pub fn pow_ring<R: ExactRing>(base: &R, exp: usize) -> R {
    let mut acc = R::one();
    let mut b = base.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&b);
        }
        b = b.mul(&b);
        e >>= 1;
    }
    acc
}

/// Nested polynomials form an exact ring again (recursive instantiation).
impl<R: ExactRing> ExactRing for DPoly<R> {
    fn zero() -> Self {
        DPoly::zero()
    }
    fn one() -> Self {
        DPoly::constant(R::one())
    }
    fn is_zero(&self) -> bool {
        DPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        DPoly::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        DPoly::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        DPoly::mul(self, other)
    }
    fn neg(&self) -> Self {
        DPoly::neg(self)
    }
    fn exact_div_checked(&self, other: &Self) -> Option<Self> {
        self.exact_poly_div(other)
    }
    fn gcd(&self, other: &Self) -> Self {
        self.gcd_poly(other)
    }
    fn is_negative(&self) -> bool {
        self.coeffs.last().map_or(false, |c| c.is_negative())
    }
}

pub type ZPoly = DPoly<BigInt>;
pub type ZPoly2 = DPoly<ZPoly>;
pub type ZPoly3 = DPoly<ZPoly2>;

impl ZPoly {
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn eval_bigint(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::from(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zp(c: &[i64]) -> ZPoly {
        ZPoly::from_i64(c)
    }

    #[test]
    fn gcd_of_common_factor() {
        // (x-1)(x+2) and (x-1)(x-3) share x-1
        let a = zp(&[-2, 1, 1]);
        let b = zp(&[3, -4, 1]);
        assert_eq!(a.gcd_poly(&b), zp(&[-1, 1]));
        // contents participate: 2(x-1) and 4(x-1)
        let c = zp(&[-2, 2]);
        let d = zp(&[-4, 4]);
        assert_eq!(c.gcd_poly(&d), zp(&[-2, 2]));
    }

    #[test]
    fn resultant_matches_evaluation() {
        // Res(p, x - c) = ±p(c)
        let p = zp(&[-1, 0, 3, 1]); // x^3 + 3x^2 - 1
        for c in [-3i64, -1, 0, 2, 5] {
            let lin = zp(&[-c, 1]);
            let r = p.resultant(&lin);
            let v = p.eval_bigint(&BigInt::from(c));
            assert!(r == v || r == -v.clone(), "res {r} vs eval {v}");
        }
    }

    #[test]
    fn resultant_zero_iff_common_factor() {
        let a = zp(&[-2, 1, 1]); // (x-1)(x+2)
        let b = zp(&[3, -4, 1]); // (x-1)(x-3)
        assert!(Zero::is_zero(&a.resultant(&b)));
        let c = zp(&[6, 5, 1]); // (x+2)(x+3)
        assert!(!Zero::is_zero(&b.resultant(&c)));
    }

    #[test]
    fn resultant_is_multiplicative_up_to_sign() {
        let a = zp(&[1, 3, 1]);
        let b = zp(&[-2, 0, 1]);
        let c = zp(&[5, 1]);
        let lhs = a.mul(&b).resultant(&c);
        let rhs = a.resultant(&c) * b.resultant(&c);
        assert!(lhs == rhs || lhs == -rhs.clone());
    }

    #[test]
    fn squarefree_part_strips_multiplicity() {
        // (x-2)^3 (x+1) -> (x-2)(x+1)
        let p = zp(&[-2, 1]);
        let q = p.mul(&p).mul(&p).mul(&zp(&[1, 1]));
        assert_eq!(q.squarefree_part(), zp(&[-2, 1]).mul(&zp(&[1, 1])));
    }

    #[test]
    fn exact_poly_div_detects_non_divisibility() {
        let a = zp(&[-2, 1, 1]);
        let b = zp(&[-1, 1]);
        assert_eq!(a.exact_poly_div(&b), Some(zp(&[2, 1])));
        assert!(a.exact_poly_div(&zp(&[1, 1, 1])).is_none());
        assert!(zp(&[1, 2]).exact_poly_div(&zp(&[0, 2])).is_none());
    }

    #[test]
    fn bivariate_resultant_eliminates() {
        // p = y - x^2, q = y^2 - 2 (as polys in y over Z[x]):
        // Res_y = x^4 - 2 up to sign.
        let p = ZPoly2::from_coeffs(vec![zp(&[0, 0, -1]), zp(&[1])]);
        let q = ZPoly2::from_coeffs(vec![zp(&[-2]), zp(&[]), zp(&[1])]);
        let r = p.resultant(&q);
        let expect = zp(&[-2, 0, 0, 0, 1]);
        assert!(r == expect || r == expect.neg());
    }

    #[test]
    fn nested_gcd_finds_bivariate_common_factor() {
        // (y - x)*(y + 1) and (y - x)*(y - 2) in y over Z[x]
        let ymx = ZPoly2::from_coeffs(vec![zp(&[0, -1]), zp(&[1])]);
        let yp1 = ZPoly2::from_coeffs(vec![zp(&[1]), zp(&[1])]);
        let ym2 = ZPoly2::from_coeffs(vec![zp(&[-2]), zp(&[1])]);
        let a = ymx.mul(&yp1);
        let b = ymx.mul(&ym2);
        let g = a.gcd_poly(&b);
        assert_eq!(g, ymx);
    }
}
