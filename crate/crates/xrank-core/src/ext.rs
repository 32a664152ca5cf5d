//! Arithmetic in Q[t]/(m) for squarefree monic m, without factoring m.
//!
//! Elements are residues represented by polynomials of degree < deg m.
//! When an operation must decide whether a residue is zero or invertible
//! and the answer differs between the irreducible factors of m, the
//! operation reports the nontrivial divisor it discovered and the caller
//! splits the modulus ("dynamic evaluation").  [`run_branches`] drives a
//! computation over every branch this process produces.
//!
//! [`KPoly`] is a univariate polynomial (in a second variable) with
//! coefficients in Q[t]/(m); it supports the Euclidean operations needed
//! for gcd and squarefree-part computations over the extension.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::rat::Rational;
use crate::upoly::UPoly;

/// Reason a computation over Q[t]/(m) stopped before producing a value.
#[derive(Debug)]
pub enum BranchEvent {
    /// A nontrivial monic divisor d of the modulus was discovered: some
    /// residue is zero modulo d and invertible modulo m/d.  The caller
    /// should redo the computation modulo d and modulo m/d.
    Split(UPoly),
    /// A hard error; propagated unchanged.
    Fail(Error),
}

pub type KResult<T> = core::result::Result<T, BranchEvent>;

fn fail<T>(msg: &str) -> KResult<T> {
    Err(BranchEvent::Fail(Error::invalid(msg)))
}

/// Trichotomy for "is this residue zero in Q[t]/(m)?".
#[derive(Debug, PartialEq)]
pub enum ZeroTest {
    Zero,
    Nonzero,
    /// Zero modulo the returned divisor, nonzero modulo the cofactor.
    Split(UPoly),
}

/// Decide whether `a` is zero in Q[t]/(m).  `m` must be squarefree.
pub fn zero_test(a: &UPoly, m: &UPoly) -> ZeroTest {
    let r = a.rem(m);
    if r.is_zero() {
        return ZeroTest::Zero;
    }
    let d = r.gcd(m);
    if d.deg_or_0() == 0 {
        ZeroTest::Nonzero
    } else {
        // Since m is squarefree, d and m/d are coprime: r ≡ 0 (mod d) and
        // r is invertible mod m/d, so this is a genuine branch point.
        ZeroTest::Split(d)
    }
}

/// Invert `a` in Q[t]/(m).  The caller must already know `a` is nonzero
/// in every branch (e.g. via [`zero_test`]); inverting an identically
/// zero residue is a hard error, while a zero divisor reports a split.
pub fn invert_mod(a: &UPoly, m: &UPoly) -> KResult<UPoly> {
    let r = a.rem(m);
    if r.is_zero() {
        return fail("inversion of zero in extension ring");
    }
    let (g, u, _) = r.xgcd(m);
    if g.deg_or_0() == 0 {
        // g is monic constant 1, so u·r ≡ 1 (mod m).
        Ok(u.rem(m))
    } else {
        Err(BranchEvent::Split(g))
    }
}

/// Run `f` once per branch of Q[t]/(m), splitting the modulus whenever a
/// zero-divisor is discovered.  `m` must be squarefree with deg m ≥ 1;
/// branches are processed in a fixed deterministic order.  Returns the
/// (branch modulus, value) pairs.
pub fn run_branches<T>(
    m: &UPoly,
    f: &mut dyn FnMut(&UPoly) -> KResult<T>,
) -> Result<Vec<(UPoly, T)>> {
    if m.deg_or_0() == 0 {
        return Err(Error::invalid("branch modulus must have positive degree"));
    }
    let mut stack = vec![m.monic()];
    let mut out = Vec::new();
    while let Some(cur) = stack.pop() {
        match f(&cur) {
            Ok(v) => out.push((cur, v)),
            Err(BranchEvent::Split(d)) => {
                let (q, r) = cur.divrem(&d);
                debug_assert!(r.is_zero(), "split divisor must divide the modulus");
                if !r.is_zero() || d.deg_or_0() == 0 || q.deg_or_0() == 0 {
                    return Err(Error::invalid("invalid modulus split"));
                }
                // Process the discovered divisor first (deterministic order).
                stack.push(q.monic());
                stack.push(d.monic());
            }
            Err(BranchEvent::Fail(e)) => return Err(e),
        }
    }
    Ok(out)
}

/// Polynomial in one variable with coefficients in Q[t]/(m).  Coefficients
/// are kept reduced mod the branch modulus and the leading coefficient is
/// nonzero in the branch (guaranteed at construction time via zero tests).
#[derive(Clone, Debug, PartialEq)]
pub struct KPoly {
    coeffs: Vec<UPoly>,
}

impl KPoly {
    pub fn zero() -> Self {
        KPoly { coeffs: Vec::new() }
    }

    /// Build from low-to-high coefficients, reducing mod m and stripping
    /// leading zeros (which may require branching).
    pub fn new(coeffs: Vec<UPoly>, m: &UPoly) -> KResult<Self> {
        let mut c: Vec<UPoly> = coeffs.iter().map(|p| p.rem(m)).collect();
        loop {
            match c.last() {
                None => break,
                Some(top) => match zero_test(top, m) {
                    ZeroTest::Zero => {
                        c.pop();
                    }
                    ZeroTest::Nonzero => break,
                    ZeroTest::Split(d) => return Err(BranchEvent::Split(d)),
                },
            }
        }
        Ok(KPoly { coeffs: c })
    }

    pub fn constant(c: &UPoly, m: &UPoly) -> KResult<Self> {
        Self::new(vec![c.clone()], m)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn deg_or_0(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[UPoly] {
        &self.coeffs
    }

    pub fn lc(&self) -> &UPoly {
        self.coeffs.last().expect("lc of zero KPoly")
    }

    pub fn add(&self, other: &Self, m: &UPoly) -> KResult<Self> {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(UPoly::zero);
            let b = other.coeffs.get(i).cloned().unwrap_or_else(UPoly::zero);
            c.push(a.add(&b));
        }
        Self::new(c, m)
    }

    pub fn sub(&self, other: &Self, m: &UPoly) -> KResult<Self> {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(UPoly::zero);
            let b = other.coeffs.get(i).cloned().unwrap_or_else(UPoly::zero);
            c.push(a.sub(&b));
        }
        Self::new(c, m)
    }

    pub fn mul(&self, other: &Self, m: &UPoly) -> KResult<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let mut c = vec![UPoly::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] = c[i + j].add(&a.mul(b).rem(m));
            }
        }
        Self::new(c, m)
    }

    /// Multiply every coefficient by a residue.
    pub fn scale_elem(&self, k: &UPoly, m: &UPoly) -> KResult<Self> {
        let c = self.coeffs.iter().map(|a| a.mul(k).rem(m)).collect();
        Self::new(c, m)
    }

    /// Make the leading coefficient 1 (inverting it, which may branch).
    pub fn monic(&self, m: &UPoly) -> KResult<Self> {
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let inv = invert_mod(self.lc(), m)?;
        self.scale_elem(&inv, m)
    }

    /// Euclidean division: self = q·d + r with deg r < deg d.
    pub fn divrem(&self, d: &Self, m: &UPoly) -> KResult<(Self, Self)> {
        if d.is_zero() {
            return fail("division by zero KPoly");
        }
        let dm = d.monic(m)?;
        let lcinv = invert_mod(d.lc(), m)?;
        let dd = dm.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        let mut q = vec![UPoly::zero(); self.coeffs.len().saturating_sub(dd)];
        // Work down from the top; entries of r below index dd form the remainder.
        let mut top = r.len();
        while top > dd {
            let k = top - 1;
            let c = r[k].clone();
            if !c.is_zero() {
                // Subtract c·x^(k-dd)·dm; the quotient coefficient against the
                // original d is c·lc(d)^-1.
                q[k - dd] = c.mul(&lcinv).rem(m);
                for (i, dc) in dm.coeffs.iter().enumerate() {
                    let prod = c.mul(dc).rem(m);
                    r[k - dd + i] = r[k - dd + i].sub(&prod).rem(m);
                }
            }
            top = k;
        }
        r.truncate(dd);
        Ok((Self::new(q, m)?, Self::new(r, m)?))
    }

    pub fn rem(&self, d: &Self, m: &UPoly) -> KResult<Self> {
        Ok(self.divrem(d, m)?.1)
    }

    /// Exact division; a nonzero remainder is a hard error (internal misuse).
    pub fn exact_div(&self, d: &Self, m: &UPoly) -> KResult<Self> {
        let (q, r) = self.divrem(d, m)?;
        if !r.is_zero() {
            return fail("inexact KPoly division");
        }
        Ok(q)
    }

    /// Monic gcd over Q[t]/(m) by the Euclidean algorithm.
    pub fn gcd(&self, other: &Self, m: &UPoly) -> KResult<Self> {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b, m)?;
            a = b;
            b = r;
        }
        a.monic(m)
    }

    pub fn derivative(&self, m: &UPoly) -> KResult<Self> {
        if self.coeffs.len() <= 1 {
            return Ok(Self::zero());
        }
        let mut c = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, a) in self.coeffs.iter().enumerate().skip(1) {
            c.push(a.scale(&Rational::from_int(i as i64)).rem(m));
        }
        Self::new(c, m)
    }

    /// Monic squarefree part: self / gcd(self, self′).
    pub fn squarefree_part(&self, m: &UPoly) -> KResult<Self> {
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if self.deg_or_0() == 0 {
            return Self::constant(&UPoly::one(), m);
        }
        let g = self.gcd(&self.derivative(m)?, m)?;
        if g.deg_or_0() == 0 {
            return self.monic(m);
        }
        self.exact_div(&g, m)?.monic(m)
    }

    /// View as a bivariate polynomial: sum over i of coeffs[i](var `inner`) ·
    /// (var `outer`)^i, in an `nvars`-variable ring.
    pub fn to_mpoly(&self, nvars: usize, outer: usize, inner: usize) -> crate::mpoly::MPoly {
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            for (k, r) in c.coeffs_iter() {
                let mut mono = vec![0u32; nvars];
                mono[outer] = i as u32;
                mono[inner] = k as u32;
                terms.push((mono, r.clone()));
            }
        }
        crate::mpoly::MPoly::from_terms(nvars, terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::upoly::UPoly;

    fn up(c: &[i64]) -> UPoly {
        UPoly::from_i64(c)
    }

    #[test]
    fn invert_in_irreducible_extension() {
        // K = Q[t]/(t²−2): 1/t = t/2.
        let m = up(&[-2, 0, 1]);
        let t = up(&[0, 1]);
        let inv = match invert_mod(&t, &m) {
            Ok(v) => v,
            Err(_) => panic!("t invertible mod t²−2"),
        };
        assert_eq!(inv, up(&[0, 1]).scale(&Rational::new(1, 2)));
        assert!(t.mul(&inv).rem(&m).sub(&UPoly::one()).is_zero());
    }

    #[test]
    fn zero_divisor_reports_split() {
        // t−1 is a zero divisor mod t²−1.
        let m = up(&[-1, 0, 1]);
        match zero_test(&up(&[-1, 1]), &m) {
            ZeroTest::Split(d) => assert_eq!(d, up(&[-1, 1])),
            other => panic!("expected split, got {:?}", other),
        }
        assert_eq!(zero_test(&up(&[5]), &m), ZeroTest::Nonzero);
        assert_eq!(zero_test(&up(&[-1, 0, 1]), &m), ZeroTest::Zero);
    }

    #[test]
    fn branch_driver_splits_on_demand() {
        // gcd(s−t, s−1) over Q[t]/(t²−1): equals s−1 on the branch t=1 and
        // is trivial on the branch t=−1.
        let m = up(&[-1, 0, 1]);
        let results = run_branches(&m, &mut |mm: &UPoly| {
            let a = KPoly::new(vec![up(&[0, -1]), up(&[1])], mm)?; // s − t
            let b = KPoly::new(vec![up(&[-1]), up(&[1])], mm)?; // s − 1
            let g = a.gcd(&b, mm)?;
            Ok(g.deg_or_0())
        })
        .unwrap();
        assert_eq!(results.len(), 2);
        let on_t1 = results.iter().find(|(mm, _)| *mm == up(&[-1, 1])).unwrap();
        let on_tm1 = results.iter().find(|(mm, _)| *mm == up(&[1, 1])).unwrap();
        assert_eq!(on_t1.1, 1);
        assert_eq!(on_tm1.1, 0);
    }

    #[test]
    fn kpoly_squarefree_over_extension() {
        // (s−t)²·(s+1) over Q[t]/(t²−2) has squarefree part (s−t)(s+1).
        let m = up(&[-2, 0, 1]);
        let s_minus_t = KPoly::new(vec![up(&[0, -1]), up(&[1])], &m).unwrap();
        let s_plus_1 = KPoly::new(vec![up(&[1]), up(&[1])], &m).unwrap();
        let p = s_minus_t
            .mul(&s_minus_t, &m)
            .unwrap()
            .mul(&s_plus_1, &m)
            .unwrap();
        let sf = p.squarefree_part(&m).unwrap();
        let expect = s_minus_t.mul(&s_plus_1, &m).unwrap().monic(&m).unwrap();
        assert_eq!(sf, expect);
    }
}
