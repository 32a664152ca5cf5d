//! Exact rank of binary forms (equivalently, X-rank of points with respect
//! to a rational normal curve) by Sylvester's catalecticant algorithm.
//!
//! Coefficients are stored against the binomial-weighted basis
//! C(d,i)·z₀^(d−i)z₁^i, which makes the apolarity pairing the plain Hankel
//! pairing: a degree-a operator with coefficient vector (g₀,…,g_a)
//! annihilates f iff Σ_j g_j·c_(k+j) = 0 for k = 0,…,d−a.  The algorithm:
//! find the smallest level a with a nontrivial Hankel kernel; if the kernel
//! contains a squarefree form the rank is a (its roots are the
//! decomposition points), otherwise the rank is d − a + 2.  Existence of a
//! squarefree kernel element is decided exactly: a few deterministic
//! pseudo-random draws, then a formal-discriminant check on the generic
//! kernel combination settles the question either way.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::apolar::RankCertificate;
use crate::apolar::ZeroDimScheme;
use crate::error::{Error, Result};
use crate::mpoly::{mpoly_det, MPoly};
use crate::qmatrix::QMatrix;
use crate::rat::Rational;
use crate::rng::SeededRng;
use crate::solve::{SystemStatus, SystemWitness};
use crate::upoly::UPoly;

/// Binary form of degree d in the binomial-weighted coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct BinaryForm {
    degree: usize,
    coeffs: Vec<Rational>,
}

fn binom(n: usize, k: usize) -> Rational {
    Rational::from_bigint(num_integer::binomial(BigInt::from(n), BigInt::from(k)))
}

impl BinaryForm {
    pub fn new(degree: usize, coeffs: Vec<Rational>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::invalid("binary form degree must be at least 1"));
        }
        if coeffs.len() != degree + 1 {
            return Err(Error::invalid("coefficient count must be degree + 1"));
        }
        if coeffs.iter().all(|c| c.is_zero()) {
            return Err(Error::invalid("binary form must be nonzero"));
        }
        Ok(BinaryForm { degree, coeffs })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// The expanded polynomial Σ C(d,i)·c_i·z₀^(d−i)z₁^i.
    pub fn to_mpoly(&self) -> MPoly {
        let d = self.degree;
        let terms: Vec<_> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (vec![(d - i) as u32, i as u32], &binom(d, i) * c))
            .collect();
        MPoly::from_terms(2, terms)
    }

    /// Inverse of [`to_mpoly`]: read binomial-weighted coordinates off a
    /// nonzero homogeneous binary polynomial.
    pub fn from_mpoly(p: &MPoly) -> Result<Self> {
        if p.nvars() != 2 {
            return Err(Error::invalid("binary form needs exactly two variables"));
        }
        if p.is_zero() || !p.is_homogeneous() {
            return Err(Error::invalid("expected a nonzero homogeneous polynomial"));
        }
        let d = p.total_degree().unwrap() as usize;
        let coeffs = (0..=d)
            .map(|i| {
                &p.coeff_of(&[(d - i) as u32, i as u32]) / &binom(d, i)
            })
            .collect();
        Self::new(d, coeffs)
    }

    /// Hankel catalecticant at level a: the (d−a+1)×(a+1) matrix with
    /// entry (k, j) = c_(k+j); its kernel is (f^⊥)_a.
    pub fn hankel(&self, a: usize) -> Result<QMatrix> {
        if a > self.degree {
            return Err(Error::invalid("catalecticant level out of range"));
        }
        let rows = self.degree - a + 1;
        let mut m = QMatrix::new(rows, a + 1);
        for k in 0..rows {
            for j in 0..=a {
                *m.at_mut(k, j) = self.coeffs[k + j].clone();
            }
        }
        Ok(m)
    }

    /// Substitution z₁ ↦ z₁ + c·z₀ (a unipotent automorphism of P¹).
    pub fn shear(&self, c: &Rational) -> Self {
        let p = self.to_mpoly();
        let z0 = MPoly::var(2, 0);
        let z1 = MPoly::var(2, 1);
        let image = p.subst_poly(1, &z1.add(&z0.scale(c)));
        Self::from_mpoly(&image).expect("shear preserves degree and nonzeroness")
    }

    /// The d-th power of the linear form α·z₀ + β·z₁ has binomial-weighted
    /// coordinates (α^(d−i)·β^i).
    pub fn power_coords(point: &[Rational; 2], d: usize) -> Vec<Rational> {
        (0..=d)
            .map(|i| &point[0].pow((d - i) as u32) * &point[1].pow(i as u32))
            .collect()
    }
}

/// A kernel vector (g₀,…,g_a) as the binary form Σ g_j·z₀^(a−j)z₁^j,
/// dehomogenized at z₀ = 1 (so roots u correspond to points (1:u), and a
/// degree drop of m corresponds to an m-fold root at (0:1)).
fn kernel_upoly(g: &[Rational]) -> UPoly {
    UPoly::from_coeffs(g.to_vec())
}

/// Is Σ g_j·z₀^(a−j)z₁^j squarefree as a binary form?
fn is_squarefree_form(g: &[Rational], a: usize) -> bool {
    let p = kernel_upoly(g);
    if p.is_zero() {
        return false;
    }
    let drop = a - p.deg_or_0();
    drop <= 1 && p.gcd(&p.derivative()).deg_or_0() == 0
}

/// Formal discriminant of the generic kernel combination Σ λ_i·B_i: the
/// Sylvester resultant (declared degrees a−1) of the two partial
/// derivatives, as a polynomial in λ.  It vanishes identically iff the
/// span contains no squarefree form.
fn generic_discriminant(basis: &[Vec<Rational>], a: usize) -> MPoly {
    let r = basis.len();
    // λ-linear coefficient forms of G = Σ_i λ_i Σ_j B_i[j] z₀^(a−j) z₁^j.
    let coeff = |j: usize| -> MPoly {
        let mut acc = MPoly::zero(r);
        for (i, b) in basis.iter().enumerate() {
            acc = acc.add(&MPoly::var(r, i).scale(&b[j]));
        }
        acc
    };
    // ∂G/∂z₀ has z-coefficients (a−j)·g_j for j = 0..a−1 (degree a−1 form);
    // ∂G/∂z₁ has z-coefficients (j+1)·g_(j+1) for j = 0..a−1.
    let d0: Vec<MPoly> = (0..a)
        .map(|j| coeff(j).scale(&Rational::from_int((a - j) as i64)))
        .collect();
    let d1: Vec<MPoly> = (0..a)
        .map(|j| coeff(j + 1).scale(&Rational::from_int((j + 1) as i64)))
        .collect();
    // Sylvester matrix of two binary forms of declared degree a−1 each:
    // size (2a−2), rows are shifted copies of the coefficient sequences.
    let m = a - 1;
    let size = 2 * m;
    if size == 0 {
        // a = 1: linear forms are always squarefree; report a unit.
        return MPoly::one(r);
    }
    let mut rows = vec![vec![MPoly::zero(r); size]; size];
    for i in 0..m {
        for (j, c) in d0.iter().enumerate() {
            rows[i][i + j] = c.clone();
        }
        for (j, c) in d1.iter().enumerate() {
            rows[m + i][i + j] = c.clone();
        }
    }
    mpoly_det(&rows)
}

/// Search a small deterministic grid for rational λ with D(λ) ≠ 0.
fn point_off_mpoly(d: &MPoly) -> Vec<Rational> {
    let r = d.nvars();
    let deg = d.total_degree().unwrap_or(0) as i64;
    let mut point = vec![Rational::zero(); r];
    // Iterate the grid {0,…,deg}^r in mixed radix; a nonzero polynomial
    // cannot vanish on the whole grid.
    let base = (deg + 1) as u64;
    let total = base.pow(r as u32);
    for idx in 0..total {
        let mut rem = idx;
        for item in point.iter_mut() {
            *item = Rational::from_int((rem % base) as i64);
            rem /= base;
        }
        if !d.eval(&point).is_zero() {
            return point;
        }
    }
    unreachable!("nonzero polynomial vanished on a full grid")
}

/// Exact rank of a nonzero binary form, with a machine-checkable
/// certificate: a decomposition when the kernel form splits over Q, a
/// scheme-membership certificate (the kernel form) when it does not, and
/// a refutation with the identically-vanishing discriminant when no
/// squarefree kernel form exists at the critical level.
pub fn sylvester_rank(f: &BinaryForm) -> Result<(usize, RankCertificate)> {
    let d = f.degree;
    for a in 1..=d {
        let (_, kernel) = f.hankel(a)?.kernel();
        if kernel.is_empty() {
            continue;
        }
        // First level with nontrivial kernel.
        if let Some(g) = squarefree_kernel_element(&kernel, a) {
            let cert = certificate_from_kernel_form(f, &g, a)?;
            return Ok((a, cert));
        }
        let disc = generic_discriminant(&kernel, a);
        debug_assert!(disc.is_zero(), "discriminant check disagrees with draws");
        if !disc.is_zero() {
            // The draws missed a squarefree element; extract one from the
            // nonvanishing discriminant deterministically.
            let lambda = point_off_mpoly(&disc);
            let g = combine(&kernel, &lambda);
            let cert = certificate_from_kernel_form(f, &g, a)?;
            return Ok((a, cert));
        }
        let rank = d - a + 2;
        let witness = SystemWitness {
            status: SystemStatus::NoZero,
            description: Some(format!(
                "formal discriminant of the generic level-{} kernel combination vanishes identically",
                a
            )),
        };
        let cert = RankCertificate::Refutation {
            witness,
            context: format!(
                "no squarefree annihilator exists at level {}; rank = {} − {} + 2 = {}",
                a, d, a, rank
            ),
        };
        return Ok((rank, cert));
    }
    unreachable!("level d always has a nontrivial kernel")
}

fn combine(basis: &[Vec<Rational>], lambda: &[Rational]) -> Vec<Rational> {
    let len = basis[0].len();
    let mut g = vec![Rational::zero(); len];
    for (b, l) in basis.iter().zip(lambda) {
        for (gi, bi) in g.iter_mut().zip(b) {
            *gi = &*gi + &(bi * l);
        }
    }
    g
}

/// Up to 8 deterministic pseudo-random draws from the kernel span, each
/// checked exactly for squarefreeness.
fn squarefree_kernel_element(basis: &[Vec<Rational>], a: usize) -> Option<Vec<Rational>> {
    let mut rng = SeededRng::new(0x5359_4c56);
    for _ in 0..8 {
        let lambda: Vec<Rational> = (0..basis.len())
            .map(|_| Rational::from_int(rng.small_nonzero(9)))
            .collect();
        let g = combine(basis, &lambda);
        if is_squarefree_form(&g, a) {
            return Some(g);
        }
    }
    None
}

/// Build the rank-a certificate from a squarefree kernel form: an explicit
/// decomposition when all roots are rational, otherwise the reduced scheme
/// it cuts out on P¹.
fn certificate_from_kernel_form(
    f: &BinaryForm,
    g: &[Rational],
    a: usize,
) -> Result<RankCertificate> {
    let d = f.degree;
    let p = kernel_upoly(g);
    let drop = a - p.deg_or_0();
    debug_assert!(drop <= 1);
    let roots = p.small_rational_roots(10_000);
    if roots.len() == p.deg_or_0() {
        // Fully split: points (1 : u) for each root u, plus (0 : 1) for a
        // simple root at infinity when the degree drops by one.
        let mut points: Vec<[Rational; 2]> = roots
            .iter()
            .map(|u| [Rational::one(), u.clone()])
            .collect();
        if drop == 1 {
            points.push([Rational::zero(), Rational::one()]);
        }
        // Solve Σ_i λ_i (α_i^(d−j) β_i^j)_j = c for the coefficients.
        let mut m = QMatrix::new(d + 1, points.len());
        for (i, pt) in points.iter().enumerate() {
            for (j, v) in BinaryForm::power_coords(pt, d).iter().enumerate() {
                *m.at_mut(j, i) = v.clone();
            }
        }
        let lambda = m
            .solve(f.coeffs())
            .ok_or_else(|| Error::invalid("internal: decomposition solve failed"))?;
        let points: Vec<Vec<Rational>> = points.into_iter().map(|p| p.to_vec()).collect();
        let rebuilt = super_position(&points, &lambda, d);
        if rebuilt != f.coeffs {
            return Err(Error::invalid("internal: decomposition fails re-evaluation"));
        }
        return Ok(RankCertificate::Decomposition {
            points,
            coefficients: lambda,
        });
    }
    // Not rationally split: certify via the scheme the kernel form cuts out.
    let g_mpoly = MPoly::from_terms(
        2,
        g.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (vec![(a - j) as u32, j as u32], c.clone()))
            .collect(),
    );
    let scheme = ZeroDimScheme::new(vec![g_mpoly], a, a, d as u32)?;
    Ok(RankCertificate::SchemeMembership { scheme })
}

fn super_position(points: &[Vec<Rational>], lambda: &[Rational], d: usize) -> Vec<Rational> {
    let mut acc = vec![Rational::zero(); d + 1];
    for (p, l) in points.iter().zip(lambda) {
        let pc = BinaryForm::power_coords(&[p[0].clone(), p[1].clone()], d);
        for (a, v) in acc.iter_mut().zip(pc) {
            *a = &*a + &(&v * l);
        }
    }
    acc
}

/// X-rank of a point of P^d with respect to the rational normal curve of
/// degree d, identifying the point with a binary form through the fixed
/// binomial-weighted convention.
pub fn rnc_point_rank(point: &[Rational]) -> Result<(usize, RankCertificate)> {
    if point.len() < 2 {
        return Err(Error::invalid("point must have at least two coordinates"));
    }
    if point.iter().all(|c| c.is_zero()) {
        return Err(Error::invalid("zero vector is not a projective point"));
    }
    let f = BinaryForm::new(point.len() - 1, point.to_vec())?;
    sylvester_rank(&f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn form(coords: &[i64]) -> BinaryForm {
        BinaryForm::new(coords.len() - 1, coords.iter().map(|&c| rat(c)).collect()).unwrap()
    }

    #[test]
    fn pure_power_has_rank_one() {
        for d in 1..=6 {
            let mut c = vec![rat(0); d + 1];
            c[0] = rat(1);
            let f = BinaryForm::new(d, c).unwrap();
            let (r, cert) = sylvester_rank(&f).unwrap();
            assert_eq!(r, 1);
            match cert {
                RankCertificate::Decomposition {
                    points,
                    coefficients,
                } => {
                    assert_eq!(points, vec![vec![rat(1), rat(0)]]);
                    assert_eq!(coefficients, vec![rat(1)]);
                }
                other => panic!("expected decomposition, got {:?}", other),
            }
        }
    }

    // Oracle for z₀z₁ (degree 2), written independently of sylvester_rank:
    // exhaustive kernel/squarefree check per level plus a randomized
    // two-point span search.
    #[test]
    fn oracle_rank_of_z0z1_is_two() {
        // z₀z₁ = C(2,1)·(1/2)·z₀z₁: binomial coordinates (0, 1/2, 0).
        let f = BinaryForm::new(2, vec![rat(0), Rational::new(1, 2), rat(0)]).unwrap();

        // Level 1: Hankel [[0,1/2],[1/2,0]] is invertible — no annihilator,
        // so the rank exceeds 1.
        let (rank1, k1) = f.hankel(1).unwrap().kernel();
        assert_eq!(rank1, 2);
        assert!(k1.is_empty());

        // Level 2 kernel is {(g₀, 0, g₂)}; exhaustive small search finds a
        // squarefree member, so the rank is exactly 2.
        let (_, k2) = f.hankel(2).unwrap().kernel();
        assert_eq!(k2.len(), 2);
        let mut found = false;
        'search: for a0 in -3i64..=3 {
            for a1 in -3i64..=3 {
                let g = combine(&k2, &[rat(a0), rat(a1)]);
                if g.iter().any(|c| !c.is_zero()) && is_squarefree_form(&g, 2) {
                    found = true;
                    break 'search;
                }
            }
        }
        assert!(found, "level-2 kernel must contain a squarefree form");

        // Randomized two-point span search: find distinct rational points
        // whose squares span z₀z₁ (witnessing rank ≤ 2 independently of the
        // kernel machinery).
        let mut rng = SeededRng::new(0x07AC_1E00);
        let mut spanned = false;
        for _ in 0..50 {
            let p = [rat(1), Rational::from_int(rng.small_int(5))];
            let q = [rat(1), Rational::from_int(rng.small_int(5))];
            if p == q {
                continue;
            }
            let mut m = QMatrix::new(3, 2);
            for (j, v) in BinaryForm::power_coords(&p, 2).iter().enumerate() {
                *m.at_mut(j, 0) = v.clone();
            }
            for (j, v) in BinaryForm::power_coords(&q, 2).iter().enumerate() {
                *m.at_mut(j, 1) = v.clone();
            }
            if let Some(l) = m.solve(f.coeffs()) {
                let rebuilt =
                    super_position(&[p.to_vec(), q.to_vec()], &l, 2);
                assert_eq!(rebuilt, f.coeffs().to_vec());
                spanned = true;
                break;
            }
        }
        assert!(spanned, "no two-point decomposition of z0*z1 found");

        // The algorithm under test must agree with the oracle.
        let (r, _) = sylvester_rank(&f).unwrap();
        assert_eq!(r, 2);
    }

    #[test]
    fn degree_three_monomial_has_rank_three() {
        // z₀²z₁ has binomial coordinates (0, 1/3, 0, 0); scaling does not
        // change the rank, so use (0, 1, 0, 0).
        let f = form(&[0, 1, 0, 0]);
        let (r, cert) = sylvester_rank(&f).unwrap();
        assert_eq!(r, 3);
        match cert {
            RankCertificate::Refutation { witness, .. } => {
                assert_eq!(witness.status, SystemStatus::NoZero);
            }
            other => panic!("expected refutation, got {:?}", other),
        }
    }

    #[test]
    fn rnc_point_rank_examples() {
        // e₀ is on the curve.
        let (r, _) = rnc_point_rank(&[rat(1), rat(0), rat(0), rat(0), rat(0)]).unwrap();
        assert_eq!(r, 1);
        // e₀ + e_d is z₀^d + z₁^d, rank 2 with a rational decomposition.
        let (r, cert) = rnc_point_rank(&[rat(1), rat(0), rat(0), rat(0), rat(1)]).unwrap();
        assert_eq!(r, 2);
        match cert {
            RankCertificate::Decomposition {
                points,
                coefficients,
            } => {
                assert_eq!(points.len(), 2);
                assert_eq!(
                    super_position(&points, &coefficients, 4),
                    vec![rat(1), rat(0), rat(0), rat(0), rat(1)]
                );
            }
            other => panic!("expected decomposition, got {:?}", other),
        }
        // e₁ in degree 3 is z₀²z₁ up to scale.
        let (r, _) = rnc_point_rank(&[rat(0), rat(1), rat(0), rat(0)]).unwrap();
        assert_eq!(r, 3);
    }

    #[test]
    fn random_decompositions_have_expected_rank() {
        let mut rng = SeededRng::new(0xB1AA_27E5);
        for _ in 0..100 {
            let d = 2 + rng.below(7) as usize; // 2..=8
            let rmax = d.div_ceil(2) + usize::from(d % 2 == 0); // ⌈(d+1)/2⌉
            let r = 1 + rng.below(rmax as u64) as usize;
            // Distinct rational parameter values, points (1 : t).
            let mut ts: Vec<Rational> = Vec::new();
            while ts.len() < r {
                let t = Rational::from_int(rng.small_int(10));
                if !ts.contains(&t) {
                    ts.push(t);
                }
            }
            let points: Vec<Vec<Rational>> =
                ts.iter().map(|t| vec![rat(1), t.clone()]).collect();
            let lambda: Vec<Rational> = (0..r)
                .map(|_| Rational::from_int(rng.small_nonzero(9)))
                .collect();
            let coords = super_position(&points, &lambda, d);
            let f = BinaryForm::new(d, coords).unwrap();
            let (rank, cert) = sylvester_rank(&f).unwrap();
            assert!(rank <= r, "d={} r={} got rank {}", d, r, rank);
            if r <= (d + 1) / 2 {
                assert_eq!(rank, r, "d={} r={}", d, r);
            }
            // Every decomposition certificate must re-evaluate exactly.
            if let RankCertificate::Decomposition {
                points: ps,
                coefficients: cs,
            } = &cert
            {
                assert_eq!(super_position(ps, cs, d), f.coeffs);
            }
        }
    }

    #[test]
    fn rank_is_shear_invariant() {
        let mut rng = SeededRng::new(0x5EA8_0001);
        for _ in 0..20 {
            let d = 2 + rng.below(5) as usize;
            let coords: Vec<Rational> = (0..=d)
                .map(|_| Rational::from_int(rng.small_int(7)))
                .collect();
            if coords.iter().all(|c| c.is_zero()) {
                continue;
            }
            let f = BinaryForm::new(d, coords).unwrap();
            let c = Rational::from_int(rng.small_nonzero(4));
            let g = f.shear(&c);
            let (rf, _) = sylvester_rank(&f).unwrap();
            let (rg, _) = sylvester_rank(&g).unwrap();
            assert_eq!(rf, rg, "shear by {} changed the rank", c.to_canonical_string());
        }
    }
}
