//! Sparse multivariate polynomials over the rationals.
//!
//! Terms are kept sorted in descending graded-reverse-lexicographic
//! (grevlex) order with no zero coefficients, so equality, leading terms and
//! serialization are all canonical. The variable count is explicit; all
//! binary operations require matching counts.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;

use crate::dpoly::{ZPoly, ZPoly2, ZPoly3};
use crate::error::{Error, Result};
use crate::rat::{clear_denominators, Rational};

pub type Mono = Vec<u32>;

/// Grevlex comparison: higher total degree wins; on ties the monomial whose
/// rightmost differing exponent is *smaller* is the larger monomial.
pub fn grevlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

/// All exponent vectors of total degree `d` in `nvars` variables, sorted in
/// descending grevlex order. Canonical row/column indexing for matrices.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Mono> {
    fn rec(nvars: usize, d: u32, out: &mut Vec<Mono>, prefix: &mut Mono) {
        if nvars == 1 {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            rec(nvars - 1, d - e, out, prefix);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if d == 0 {
            out.push(vec![]);
        }
        return out;
    }
    rec(nvars, d, &mut out, &mut Vec::new());
    out.sort_by(|a, b| grevlex_cmp(b, a));
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MPoly {
    nvars: usize,
    /// `(exponent vector, coefficient)` sorted descending grevlex, coeffs nonzero.
    terms: Vec<(Mono, Rational)>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: vec![] }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        if c.is_zero() {
            return Self::zero(nvars);
        }
        MPoly {
            nvars,
            terms: vec![(vec![0; nvars], c)],
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut m = vec![0; nvars];
        m[i] = 1;
        MPoly {
            nvars,
            terms: vec![(m, Rational::one())],
        }
    }

    pub fn monomial(nvars: usize, exps: Mono, c: Rational) -> Self {
        assert_eq!(exps.len(), nvars);
        if c.is_zero() {
            return Self::zero(nvars);
        }
        MPoly {
            nvars,
            terms: vec![(exps, c)],
        }
    }

    /// Builds from arbitrary (possibly repeated / unsorted / zero) terms.
    pub fn from_terms(nvars: usize, terms: Vec<(Mono, Rational)>) -> Self {
        let mut acc: Vec<(Mono, Rational)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            assert_eq!(m.len(), nvars, "exponent arity mismatch");
            acc.push((m, c));
        }
        acc.sort_by(|a, b| grevlex_cmp(&b.0, &a.0));
        let mut out: Vec<(Mono, Rational)> = Vec::with_capacity(acc.len());
        for (m, c) in acc {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => {
                    *lc += &c;
                }
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        MPoly { nvars, terms: out }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Mono, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(Mono, Rational)> {
        self.terms.first()
    }

    pub fn coeff_of(&self, mono: &[u32]) -> Rational {
        for (m, c) in &self.terms {
            if m.as_slice() == mono {
                return c.clone();
            }
        }
        Rational::zero()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms
            .iter()
            .map(|(m, _)| m.iter().sum::<u32>())
            .max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m[var]).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut deg = None;
        for (m, _) in &self.terms {
            let d: u32 = m.iter().sum();
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => return false,
                _ => {}
            }
        }
        true
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Self::from_terms(self.nvars, terms)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m: Mono = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
                terms.push((m, ca * cb));
            }
        }
        Self::from_terms(self.nvars, terms)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        let mut base = self.clone();
        let mut k = e;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars);
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    t *= &point[i].pow(e);
                }
            }
            acc += &t;
        }
        acc
    }

    /// Substitute a rational constant for one variable (keeps arity).
    pub fn subst(&self, var: usize, value: &Rational) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let e = m[var];
            let mut m2 = m.clone();
            m2[var] = 0;
            terms.push((m2, c * &value.pow(e)));
        }
        Self::from_terms(self.nvars, terms)
    }

    /// Substitute a polynomial (same arity) for one variable.
    pub fn subst_poly(&self, var: usize, value: &Self) -> Self {
        assert_eq!(self.nvars, value.nvars);
        let mut acc = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut t = Self::constant(self.nvars, c.clone());
            let mut rest = m.clone();
            rest[var] = 0;
            t = t.mul(&Self::monomial(self.nvars, rest, Rational::one()));
            if m[var] > 0 {
                t = t.mul(&value.pow(m[var]));
            }
            acc = acc.add(&t);
        }
        acc
    }

    pub fn derivative(&self, var: usize) -> Self {
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            if m[var] == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2[var] -= 1;
            terms.push((m2, c * &Rational::from_int(m[var] as i64)));
        }
        Self::from_terms(self.nvars, terms)
    }

    /// Applies `self` as a constant-coefficient differential operator to `f`
    /// (the apolarity action: each variable of `self` acts as d/dx_i).
    pub fn apply_to(&self, f: &Self) -> Self {
        assert_eq!(self.nvars, f.nvars);
        let mut acc = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut g = f.clone();
            for (i, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    g = g.derivative(i);
                    if g.is_zero() {
                        break;
                    }
                }
                if g.is_zero() {
                    break;
                }
            }
            acc = acc.add(&g.scale(c));
        }
        acc
    }

    /// Exact division by `d` (self = q * d); `None` when not divisible.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        assert_eq!(self.nvars, d.nvars);
        if self.is_zero() {
            return Some(Self::zero(self.nvars));
        }
        let (dm, dc) = d.leading()?;
        let mut r = self.clone();
        let mut q_terms: Vec<(Mono, Rational)> = Vec::new();
        while let Some((rm, rc)) = r.leading().cloned() {
            let mut qm = vec![0u32; self.nvars];
            for i in 0..self.nvars {
                if rm[i] < dm[i] {
                    return None;
                }
                qm[i] = rm[i] - dm[i];
            }
            let qc = &rc / dc;
            let qt = Self::monomial(self.nvars, qm.clone(), qc.clone());
            r = r.sub(&qt.mul(d));
            q_terms.push((qm, qc));
            if r.is_zero() {
                return Some(Self::from_terms(self.nvars, q_terms));
            }
        }
        None
    }

    /// Coefficients of `self` viewed as a univariate polynomial in `var`,
    /// index = power of `var`; entries keep the full arity with `var` zeroed.
    pub fn coeffs_wrt(&self, var: usize) -> Vec<Self> {
        let deg = self.degree_in(var).unwrap_or(0) as usize;
        let mut out = vec![Self::zero(self.nvars); deg + 1];
        for (m, c) in &self.terms {
            let e = m[var] as usize;
            let mut m2 = m.clone();
            m2[var] = 0;
            out[e] = out[e].add(&Self::monomial(self.nvars, m2, c.clone()));
        }
        out
    }

    /// Homogenizes with respect to `var` up to total degree `d`.
    pub fn homogenize(&self, var: usize, d: u32) -> Result<Self> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let td: u32 = m.iter().sum();
            if td > d {
                return Err(Error::invalid("homogenization degree too small"));
            }
            let mut m2 = m.clone();
            m2[var] += d - td;
            terms.push((m2, c.clone()));
        }
        Ok(Self::from_terms(self.nvars, terms))
    }

    /// True when the polynomial uses no variable outside `vars`.
    pub fn supported_on(&self, vars: &[usize]) -> bool {
        self.terms.iter().all(|(m, _)| {
            m.iter()
                .enumerate()
                .all(|(i, &e)| e == 0 || vars.contains(&i))
        })
    }

    /// Extracts a dense univariate image in `var`; requires all other
    /// exponents to vanish.
    pub fn to_upoly(&self, var: usize) -> Result<crate::upoly::UPoly> {
        if !self.supported_on(&[var]) {
            return Err(Error::invalid("polynomial is not univariate in the requested variable"));
        }
        let deg = self.degree_in(var).unwrap_or(0) as usize;
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for (m, c) in &self.terms {
            coeffs[m[var] as usize] = c.clone();
        }
        Ok(crate::upoly::UPoly::from_coeffs(coeffs))
    }

    pub fn from_upoly(p: &crate::upoly::UPoly, nvars: usize, var: usize) -> Self {
        let terms = p
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let mut m = vec![0u32; nvars];
                m[var] = i as u32;
                (m, c.clone())
            })
            .collect();
        Self::from_terms(nvars, terms)
    }

    /// Renders with the given variable names (canonical grevlex term order).
    pub fn render(&self, names: &[&str]) -> String {
        use core::fmt::Write;
        if self.is_zero() {
            return String::from("0");
        }
        let mut s = String::new();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let mut mono = String::new();
            for (i, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !mono.is_empty() {
                    mono.push('*');
                }
                if e == 1 {
                    let _ = write!(mono, "{}", names[i]);
                } else {
                    let _ = write!(mono, "{}^{}", names[i], e);
                }
            }
            let lead_neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if lead_neg {
                    s.push('-');
                }
            } else {
                s.push_str(if lead_neg { " - " } else { " + " });
            }
            if mono.is_empty() {
                let _ = write!(s, "{}", mag.to_canonical_string());
            } else if mag.is_one() {
                s.push_str(&mono);
            } else {
                let _ = write!(s, "{}*{}", mag.to_canonical_string(), mono);
            }
        }
        s
    }
}

/// Determinant of a square MPoly matrix by fraction-free (Bareiss)
/// elimination; exact over the polynomial ring.
pub fn mpoly_det(rows: &[Vec<MPoly>]) -> MPoly {
    let n = rows.len();
    assert!(n > 0 && rows.iter().all(|r| r.len() == n));
    let nvars = rows[0][0].nvars();
    if n == 1 {
        return rows[0][0].clone();
    }
    let mut m: Vec<Vec<MPoly>> = rows.to_vec();
    let mut sign = false;
    let mut prev = MPoly::one(nvars);
    for k in 0..n - 1 {
        // pivot selection: any nonzero entry in column k at/below row k
        if m[k][k].is_zero() {
            let mut found = None;
            for r in k + 1..n {
                if !m[r][k].is_zero() {
                    found = Some(r);
                    break;
                }
            }
            match found {
                Some(r) => {
                    m.swap(k, r);
                    sign = !sign;
                }
                None => return MPoly::zero(nvars),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num
                    .exact_div(&prev)
                    .expect("Bareiss division must be exact");
            }
            m[i][k] = MPoly::zero(nvars);
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign {
        det.neg()
    } else {
        det
    }
}

/// Resultant of `p`, `q` with respect to `var`. Both must have positive
/// degree in `var`. Computed fraction-free on primitive integer images, so
/// the result is exact up to a nonzero rational scalar — which is invariant
/// enough for every use here (vanishing, root sets, factor structure).
pub fn resultant(p: &MPoly, q: &MPoly, var: usize) -> Result<MPoly> {
    assert_eq!(p.nvars(), q.nvars());
    let dp = p.degree_in(var).unwrap_or(0);
    let dq = q.degree_in(var).unwrap_or(0);
    if dp == 0 || dq == 0 {
        return Err(Error::invalid("resultant requires positive degree in the eliminated variable"));
    }
    let nv = p.nvars();
    match nv {
        1 => {
            let r = p.to_upoly(var)?.resultant_scaled(&q.to_upoly(var)?);
            Ok(MPoly::constant(1, r))
        }
        2 => {
            let other = 1 - var;
            let a = mpoly_to_zp2(p, var, other);
            let b = mpoly_to_zp2(q, var, other);
            let r = a.resultant(&b);
            Ok(zp_to_mpoly(&r, nv, other))
        }
        3 => {
            let others: Vec<usize> = (0..3).filter(|&v| v != var).collect();
            let a = mpoly_to_zp3(p, var, others[0], others[1]);
            let b = mpoly_to_zp3(q, var, others[0], others[1]);
            let r = a.resultant(&b);
            Ok(zp2_to_mpoly(&r, nv, others[0], others[1]))
        }
        _ => {
            // Sylvester determinant over the remaining variables.
            let pc = p.coeffs_wrt(var);
            let qc = q.coeffs_wrt(var);
            let n = (dp + dq) as usize;
            let mut rows = vec![vec![MPoly::zero(nv); n]; n];
            for i in 0..dq as usize {
                for (j, c) in pc.iter().enumerate() {
                    rows[i][i + (dp as usize - j)] = c.clone();
                }
            }
            for i in 0..dp as usize {
                for (j, c) in qc.iter().enumerate() {
                    rows[dq as usize + i][i + (dq as usize - j)] = c.clone();
                }
            }
            Ok(mpoly_det(&rows))
        }
    }
}

/// Squarefree part of a univariate polynomial (given as an `MPoly` supported
/// on at most one variable), monic-normalized, together with a flag telling
/// whether the input was already squarefree.
pub fn squarefree_part(p: &MPoly) -> Result<(MPoly, bool)> {
    if p.is_zero() {
        return Err(Error::invalid("squarefree part of the zero polynomial"));
    }
    let mut var = None;
    for v in 0..p.nvars() {
        if p.degree_in(v).unwrap_or(0) > 0 {
            if var.is_some() {
                return Err(Error::invalid("squarefree_part expects a univariate polynomial"));
            }
            var = Some(v);
        }
    }
    let Some(v) = var else {
        // Nonzero constant: squarefree, normalized to 1.
        return Ok((MPoly::one(p.nvars()), true));
    };
    let u = p.to_upoly(v)?;
    let sf = u.squarefree_part();
    let was_squarefree = sf.deg_or_0() == u.deg_or_0();
    Ok((MPoly::from_upoly(&sf, p.nvars(), v), was_squarefree))
}

/// Reduction preserving the zero set exactly: splits off the polynomial
/// content variable by variable and replaces every layer by its squarefree
/// part, so each irreducible factor of the input survives with multiplicity
/// one and no factor is gained or lost. Supports up to three active
/// variables; beyond that the input is returned unchanged (still sound for
/// callers that only rely on the zero set).
pub fn zero_set_reduction(p: &MPoly) -> MPoly {
    if p.is_zero() {
        return p.clone();
    }
    let nv = p.nvars();
    let active: Vec<usize> = (0..nv).filter(|&v| p.degree_in(v).unwrap_or(0) > 0).collect();
    match active.len() {
        0 => MPoly::one(nv),
        1 => {
            let v = active[0];
            let u = p.to_upoly(v).expect("single active variable");
            MPoly::from_upoly(&u.squarefree_part(), nv, v)
        }
        2 => {
            let (main, other) = (active[0], active[1]);
            let z = mpoly_to_zp2(p, main, other);
            let content = zp_to_mpoly(&z.content(), nv, other);
            let sf = z.primitive_part().squarefree_part();
            zp2_to_mpoly(&sf, nv, main, other).mul(&zero_set_reduction(&content))
        }
        3 => {
            let (main, mid, inner) = (active[0], active[1], active[2]);
            let z = mpoly_to_zp3(p, main, mid, inner);
            let content = zp2_to_mpoly(&z.content(), nv, mid, inner);
            let sf = z.primitive_part().squarefree_part();
            zp3_to_mpoly(&sf, nv, main, mid, inner).mul(&zero_set_reduction(&content))
        }
        _ => p.clone(),
    }
}

/// Clears denominators across the whole polynomial, returning integer-scaled
/// terms (content preserved only up to the global scalar).
fn integer_terms(p: &MPoly) -> Vec<(Mono, BigInt)> {
    let coeffs: Vec<Rational> = p.terms().iter().map(|(_, c)| c.clone()).collect();
    let ints = clear_denominators(&coeffs);
    p.terms()
        .iter()
        .zip(ints)
        .map(|((m, _), z)| (m.clone(), z))
        .collect()
}

/// Dense image as a polynomial in `main` with `ZPoly` coefficients in `other`.
pub fn mpoly_to_zp2(p: &MPoly, main: usize, other: usize) -> ZPoly2 {
    let dm = p.degree_in(main).unwrap_or(0) as usize;
    let dother = p.degree_in(other).unwrap_or(0) as usize;
    let mut grid = vec![vec![BigInt::from(0); dother + 1]; dm + 1];
    for (m, c) in integer_terms(p) {
        grid[m[main] as usize][m[other] as usize] += c;
    }
    ZPoly2::from_coeffs(grid.into_iter().map(ZPoly::from_coeffs).collect())
}

pub fn zp_to_mpoly(z: &ZPoly, nvars: usize, var: usize) -> MPoly {
    let terms = z
        .coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let mut m = vec![0u32; nvars];
            m[var] = i as u32;
            (m, Rational::from_bigint(c.clone()))
        })
        .collect();
    MPoly::from_terms(nvars, terms)
}

pub fn zp2_to_mpoly(z: &ZPoly2, nvars: usize, main: usize, other: usize) -> MPoly {
    let mut terms = Vec::new();
    for (i, c) in z.coeffs.iter().enumerate() {
        for (j, k) in c.coeffs.iter().enumerate() {
            let mut m = vec![0u32; nvars];
            m[main] = i as u32;
            m[other] = j as u32;
            terms.push((m, Rational::from_bigint(k.clone())));
        }
    }
    MPoly::from_terms(nvars, terms)
}

pub fn mpoly_to_zp3(p: &MPoly, main: usize, mid: usize, inner: usize) -> ZPoly3 {
    let dm = p.degree_in(main).unwrap_or(0) as usize;
    let dmid = p.degree_in(mid).unwrap_or(0) as usize;
    let dinner = p.degree_in(inner).unwrap_or(0) as usize;
    let mut grid = vec![vec![vec![BigInt::from(0); dinner + 1]; dmid + 1]; dm + 1];
    for (m, c) in integer_terms(p) {
        grid[m[main] as usize][m[mid] as usize][m[inner] as usize] += c;
    }
    ZPoly3::from_coeffs(
        grid.into_iter()
            .map(|plane| ZPoly2::from_coeffs(plane.into_iter().map(ZPoly::from_coeffs).collect()))
            .collect(),
    )
}

pub fn zp3_to_mpoly(z: &ZPoly3, nvars: usize, main: usize, mid: usize, inner: usize) -> MPoly {
    let mut terms = Vec::new();
    for (i, plane) in z.coeffs.iter().enumerate() {
        for (j, row) in plane.coeffs.iter().enumerate() {
            for (k, c) in row.coeffs.iter().enumerate() {
                let mut m = vec![0u32; nvars];
                m[main] = i as u32;
                m[mid] = j as u32;
                m[inner] = k as u32;
                terms.push((m, Rational::from_bigint(c.clone())));
            }
        }
    }
    MPoly::from_terms(nvars, terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xyz() -> (MPoly, MPoly, MPoly) {
        (MPoly::var(3, 0), MPoly::var(3, 1), MPoly::var(3, 2))
    }

    #[test]
    fn squarefree_part_flags_repeated_roots() {
        let x = MPoly::var(1, 0);
        // x² → (x, false)
        let (sf, flag) = squarefree_part(&x.mul(&x)).unwrap();
        assert_eq!(sf, x);
        assert!(!flag);
        // x²+1 → (x²+1, true)
        let p = x.mul(&x).add(&MPoly::one(1));
        let (sf, flag) = squarefree_part(&p).unwrap();
        assert_eq!(sf, p);
        assert!(flag);
        // x³−x² → (x²−x, false)
        let p = x.mul(&x).mul(&x).sub(&x.mul(&x));
        let (sf, flag) = squarefree_part(&p).unwrap();
        assert_eq!(sf, x.mul(&x).sub(&x));
        assert!(!flag);
        assert!(squarefree_part(&MPoly::zero(1)).is_err());
    }

    #[test]
    fn grevlex_orders_standard_example() {
        // degree ties: x*z < y^2 in grevlex (rightmost difference larger for x*z)
        assert_eq!(grevlex_cmp(&[1, 0, 1], &[0, 2, 0]), Ordering::Less);
        // x^2 > x*y > y^2 > x*z > y*z > z^2 for 3 vars, degree 2
        let ms = monomials_of_degree(3, 2);
        let expect: Vec<Mono> = vec![
            vec![2, 0, 0],
            vec![1, 1, 0],
            vec![0, 2, 0],
            vec![1, 0, 1],
            vec![0, 1, 1],
            vec![0, 0, 2],
        ];
        assert_eq!(ms, expect);
    }

    #[test]
    fn terms_are_canonically_sorted() {
        let (x, y, _) = xyz();
        let p = y.mul(&y).add(&x.mul(&y)).add(&MPoly::one(3));
        let monos: Vec<Mono> = p.terms().iter().map(|(m, _)| m.clone()).collect();
        assert_eq!(monos, vec![vec![1, 1, 0], vec![0, 2, 0], vec![0, 0, 0]]);
    }

    #[test]
    fn mul_and_exact_div_roundtrip() {
        let (x, y, z) = xyz();
        let a = x.add(&y.scale(&Rational::from_int(2))).sub(&z);
        let b = x.mul(&x).sub(&y.mul(&z));
        let prod = a.mul(&b);
        assert_eq!(prod.exact_div(&a).unwrap(), b);
        assert_eq!(prod.exact_div(&b).unwrap(), a);
        assert!(b.exact_div(&a).is_none());
    }

    #[test]
    fn derivative_and_operator_action() {
        let (x, y, _) = xyz();
        // f = x^3 + x*y^2
        let f = x.pow(3).add(&x.mul(&y.pow(2)));
        let fx = f.derivative(0);
        assert_eq!(fx, x.pow(2).scale(&Rational::from_int(3)).add(&y.pow(2)));
        // (d/dx d/dy) f = 2y
        let op = MPoly::monomial(3, vec![1, 1, 0], Rational::one());
        assert_eq!(op.apply_to(&f), y.scale(&Rational::from_int(2)));
    }

    #[test]
    fn resultant_two_vars_matches_elimination() {
        // p = y - x^2, q = y^2 - 2 -> Res_y ~ x^4 - 2
        let x = MPoly::var(2, 0);
        let y = MPoly::var(2, 1);
        let p = y.sub(&x.pow(2));
        let q = y.pow(2).sub(&MPoly::constant(2, Rational::from_int(2)));
        let r = resultant(&p, &q, 1).unwrap();
        let expect = x.pow(4).sub(&MPoly::constant(2, Rational::from_int(2)));
        // up to a nonzero rational scalar
        let lead = (&r.leading().unwrap().1 / &expect.leading().unwrap().1).clone();
        assert_eq!(r, expect.scale(&lead));
    }

    #[test]
    fn resultant_vanishes_iff_common_factor() {
        let x = MPoly::var(2, 0);
        let y = MPoly::var(2, 1);
        let common = y.sub(&x.pow(2));
        let p = common.mul(&y.add(&MPoly::one(2)));
        let q = common.mul(&x.sub(&MPoly::one(2)));
        assert!(resultant(&p, &q, 1).unwrap().is_zero());
    }

    #[test]
    fn determinant_by_bareiss() {
        let x = MPoly::var(2, 0);
        let y = MPoly::var(2, 1);
        // det [[x, y], [y, x]] = x^2 - y^2
        let d = mpoly_det(&[vec![x.clone(), y.clone()], vec![y.clone(), x.clone()]]);
        assert_eq!(d, x.pow(2).sub(&y.pow(2)));
    }

    #[test]
    fn eval_and_subst() {
        let (x, y, z) = xyz();
        let f = x.mul(&y).add(&z.pow(2));
        let v = f.eval(&[
            Rational::from_int(2),
            Rational::from_int(3),
            Rational::from_int(-1),
        ]);
        assert_eq!(v, Rational::from_int(7));
        let g = f.subst(2, &Rational::from_int(-1));
        assert_eq!(g, x.mul(&y).add(&MPoly::one(3)));
    }

    #[test]
    fn renders_readably() {
        let (x, y, _) = xyz();
        let f = x.pow(2).sub(&y.scale(&Rational::new(1, 2)));
        assert_eq!(f.render(&["x", "y", "z"]), "x^2 - 1/2*y");
    }
}
