//! Apolarity engine for symmetric forms: catalecticant matrices, apolar
//! ideals, membership tests f ∈ ⟨ν_d(Z)⟩ via the apolarity criterion,
//! zero-dimensional schemes with exact graded-piece verification, and the
//! certificate type shared by all rank computations.
//!
//! Conventions: forms live in S = Q[x₀,…,x_n]; dual generators act as
//! constant-coefficient differential operators (∂^α ∘ x^β with the usual
//! falling factorials).  The catalecticant Cat_{a,d−a}(f) is the matrix of
//! g ↦ g ∘ f from degree-a operators to degree-(d−a) forms, in the fixed
//! graded-reverse-lexicographic monomial bases.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::mpoly::{monomials_of_degree, MPoly};
use crate::qmatrix::QMatrix;
use crate::rat::Rational;
use crate::solve::SystemWitness;

/// A nonzero homogeneous form of known degree.
#[derive(Clone, Debug, PartialEq)]
pub struct SymForm {
    nvars: usize,
    degree: u32,
    body: MPoly,
}

impl SymForm {
    pub fn new(body: MPoly) -> Result<Self> {
        if body.is_zero() {
            return Err(Error::invalid("form must be nonzero"));
        }
        if !body.is_homogeneous() {
            return Err(Error::invalid("form must be homogeneous"));
        }
        Ok(SymForm {
            nvars: body.nvars(),
            degree: body.total_degree().unwrap(),
            body,
        })
    }

    /// d-th power of the linear form with the given coefficient vector.
    pub fn linear_power(point: &[Rational], d: u32) -> Result<Self> {
        let n = point.len();
        let mut ell = MPoly::zero(n);
        for (i, c) in point.iter().enumerate() {
            ell = ell.add(&MPoly::var(n, i).scale(c));
        }
        if ell.is_zero() {
            return Err(Error::invalid("zero linear form"));
        }
        SymForm::new(ell.pow(d))
    }

    pub fn body(&self) -> &MPoly {
        &self.body
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }
}

/// Σ coefficients[i] · ⟨points[i], x⟩^d as a polynomial (the exact
/// re-evaluation of a decomposition certificate).
pub fn evaluate_decomposition(
    nvars: usize,
    d: u32,
    points: &[Vec<Rational>],
    coefficients: &[Rational],
) -> Result<MPoly> {
    if points.len() != coefficients.len() {
        return Err(Error::invalid("points/coefficients length mismatch"));
    }
    let mut acc = MPoly::zero(nvars);
    for (p, c) in points.iter().zip(coefficients) {
        if p.len() != nvars {
            return Err(Error::invalid("decomposition point has wrong length"));
        }
        let pw = SymForm::linear_power(p, d)?;
        acc = acc.add(&pw.body().scale(c));
    }
    Ok(acc)
}

/// Catalecticant matrix Cat_{a,d−a}(f): rows indexed by degree-(d−a)
/// monomials, columns by degree-a dual monomials, entry = coefficient of
/// the row monomial in (column operator) ∘ f.
pub fn catalecticant(f: &SymForm, a: u32) -> Result<QMatrix> {
    if a > f.degree() {
        return Err(Error::invalid("catalecticant level out of range"));
    }
    let n = f.nvars();
    let rows_idx = monomials_of_degree(n, f.degree() - a);
    let cols_idx = monomials_of_degree(n, a);
    let mut m = QMatrix::new(rows_idx.len(), cols_idx.len());
    for (j, op_mono) in cols_idx.iter().enumerate() {
        let op = MPoly::monomial(n, op_mono.clone(), Rational::one());
        let img = op.apply_to(f.body());
        for (i, row_mono) in rows_idx.iter().enumerate() {
            *m.at_mut(i, j) = img.coeff_of(row_mono);
        }
    }
    Ok(m)
}

/// Basis of the degree-k graded piece of the apolar ideal f^⊥
/// (the kernel of Cat_{k,d−k}), as polynomials in the dual variables.
pub fn apolar_basis(f: &SymForm, k: u32) -> Result<Vec<MPoly>> {
    let cat = catalecticant(f, k)?;
    let (_, basis) = cat.kernel();
    let monos = monomials_of_degree(f.nvars(), k);
    let mut out = Vec::with_capacity(basis.len());
    for v in basis {
        let terms: Vec<_> = monos
            .iter()
            .zip(v.iter())
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        out.push(MPoly::from_terms(f.nvars(), terms));
    }
    Ok(out)
}

/// Catalecticant lower bound for border rank: max over a of rank Cat_{a,d−a}.
pub fn border_rank_lb(f: &SymForm) -> usize {
    let mut best = 0;
    for a in 0..=f.degree() {
        let r = catalecticant(f, a).expect("level in range").rank();
        best = best.max(r);
    }
    best
}

/// A zero-dimensional subscheme presented by homogeneous ideal generators,
/// with its degree certified via the codimension of the degree-k graded
/// piece of the ideal (k = the ambient problem's degree).
#[derive(Clone, Debug, PartialEq)]
pub struct ZeroDimScheme {
    generators: Vec<MPoly>,
    claimed_degree: usize,
    support_size: usize,
    checked_at: u32,
}

impl ZeroDimScheme {
    pub fn new(
        generators: Vec<MPoly>,
        claimed_degree: usize,
        support_size: usize,
        check_degree: u32,
    ) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::invalid("scheme needs at least one generator"));
        }
        let n = generators[0].nvars();
        for g in &generators {
            if g.is_zero() || !g.is_homogeneous() || g.nvars() != n {
                return Err(Error::invalid(
                    "scheme generators must be nonzero homogeneous forms in a common ring",
                ));
            }
        }
        if support_size > claimed_degree {
            return Err(Error::invalid("support size exceeds scheme degree"));
        }
        let scheme = ZeroDimScheme {
            generators,
            claimed_degree,
            support_size,
            checked_at: check_degree,
        };
        let codim = scheme.graded_codim(check_degree)?;
        if codim != claimed_degree {
            return Err(Error::invalid(format!(
                "scheme degree check failed: codimension {} at degree {} ≠ claimed degree {}",
                codim, check_degree, claimed_degree
            )));
        }
        Ok(scheme)
    }

    pub fn generators(&self) -> &[MPoly] {
        &self.generators
    }

    pub fn claimed_degree(&self) -> usize {
        self.claimed_degree
    }

    pub fn support_size(&self) -> usize {
        self.support_size
    }

    pub fn checked_at(&self) -> u32 {
        self.checked_at
    }

    pub fn nvars(&self) -> usize {
        self.generators[0].nvars()
    }

    /// Spanning set of the degree-k piece of the ideal: all m·g with g a
    /// generator and m a monomial of degree k − deg g.
    pub fn ideal_piece(&self, k: u32) -> Vec<MPoly> {
        let n = self.nvars();
        let mut out = Vec::new();
        for g in &self.generators {
            let dg = g.total_degree().unwrap();
            if dg > k {
                continue;
            }
            for m in monomials_of_degree(n, k - dg) {
                out.push(MPoly::monomial(n, m, Rational::one()).mul(g));
            }
        }
        out
    }

    /// Codimension of the degree-k piece of the ideal inside all of S_k.
    pub fn graded_codim(&self, k: u32) -> Result<usize> {
        let n = self.nvars();
        let monos = monomials_of_degree(n, k);
        let piece = self.ideal_piece(k);
        if piece.is_empty() {
            return Ok(monos.len());
        }
        let mut m = QMatrix::new(piece.len(), monos.len());
        for (i, p) in piece.iter().enumerate() {
            for (j, mono) in monos.iter().enumerate() {
                *m.at_mut(i, j) = p.coeff_of(mono);
            }
        }
        Ok(monos.len() - m.rank())
    }
}

/// Reduced scheme on a set of distinct rational projective points: the
/// generators are a basis of the forms of degree `check_degree` vanishing
/// at every point.  Fails if the points do not impose independent
/// conditions in that degree (the degree certificate would be wrong).
pub fn point_scheme(points: &[Vec<Rational>], check_degree: u32) -> Result<ZeroDimScheme> {
    if points.is_empty() {
        return Err(Error::invalid("point scheme needs at least one point"));
    }
    let n = points[0].len();
    if n == 0 || points.iter().any(|p| p.len() != n) {
        return Err(Error::invalid("points must share a positive dimension"));
    }
    for (i, p) in points.iter().enumerate() {
        if p.iter().all(|c| c.is_zero()) {
            return Err(Error::invalid("zero vector is not a projective point"));
        }
        for q in &points[..i] {
            if projectively_equal(p, q) {
                return Err(Error::invalid("points must be pairwise distinct"));
            }
        }
    }
    let monos = monomials_of_degree(n, check_degree);
    let mut eval = QMatrix::new(points.len(), monos.len());
    for (i, p) in points.iter().enumerate() {
        for (j, m) in monos.iter().enumerate() {
            let mut v = Rational::one();
            for (var, &e) in m.iter().enumerate() {
                v = &v * &p[var].pow(e);
            }
            *eval.at_mut(i, j) = v;
        }
    }
    let (_, kernel) = eval.kernel();
    let gens: Vec<MPoly> = kernel
        .iter()
        .map(|v| {
            MPoly::from_terms(
                n,
                monos
                    .iter()
                    .zip(v.iter())
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(m, c)| (m.clone(), c.clone()))
                    .collect(),
            )
        })
        .collect();
    ZeroDimScheme::new(gens, points.len(), points.len(), check_degree)
}

/// Equality in projective space (proportional coordinate vectors).
pub fn projectively_equal(p: &[Rational], q: &[Rational]) -> bool {
    if p.len() != q.len() {
        return false;
    }
    // p and q proportional iff all 2×2 minors vanish and supports agree.
    for i in 0..p.len() {
        if p[i].is_zero() != q[i].is_zero() {
            return false;
        }
        for j in i + 1..p.len() {
            if !(&(&p[i] * &q[j]) - &(&p[j] * &q[i])).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Does f lie in ⟨ν_d(Z)⟩?  By the apolarity criterion this holds iff
/// every generator of I_Z annihilates f; generators of degree > d cannot
/// be decided at this degree and are rejected.
pub fn apolarity_membership(f: &SymForm, z: &ZeroDimScheme) -> Result<bool> {
    if z.nvars() != f.nvars() {
        return Err(Error::invalid("scheme and form live in different rings"));
    }
    for g in z.generators() {
        if g.total_degree().unwrap() > f.degree() {
            return Err(Error::unsupported(
                "scheme generator degree exceeds the form degree; membership undecidable at this degree",
            ));
        }
    }
    for g in z.generators() {
        if !g.apply_to(f.body()).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Certificate attached to a rank computation.
#[derive(Clone, Debug)]
pub enum RankCertificate {
    /// f = Σ coefficients[i] · ⟨points[i], x⟩^d, exactly.
    Decomposition {
        points: Vec<Vec<Rational>>,
        coefficients: Vec<Rational>,
    },
    /// f ∈ ⟨ν_d(Z)⟩, certified by [`apolarity_membership`].
    SchemeMembership { scheme: ZeroDimScheme },
    /// Impossibility evidence backed by a no-zero elimination outcome.
    Refutation {
        witness: SystemWitness,
        context: String,
    },
}

impl RankCertificate {
    /// Re-validate the certificate against the form it was issued for.
    /// Decompositions are re-evaluated exactly; scheme memberships re-run
    /// the apolarity test; refutations must carry a no-zero witness.
    pub fn revalidate(&self, f: &SymForm) -> Result<bool> {
        match self {
            RankCertificate::Decomposition {
                points,
                coefficients,
            } => {
                let rebuilt =
                    evaluate_decomposition(f.nvars(), f.degree(), points, coefficients)?;
                Ok(rebuilt == *f.body())
            }
            RankCertificate::SchemeMembership { scheme } => apolarity_membership(f, scheme),
            RankCertificate::Refutation { witness, .. } => {
                Ok(witness.status == crate::solve::SystemStatus::NoZero)
            }
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            RankCertificate::Decomposition { .. } => "decomposition",
            RankCertificate::SchemeMembership { .. } => "scheme-membership",
            RankCertificate::Refutation { .. } => "refutation",
        }
    }

    pub fn describe(&self) -> String {
        match self {
            RankCertificate::Decomposition { points, .. } => {
                format!("decomposition into {} powers of linear forms", points.len())
            }
            RankCertificate::SchemeMembership { scheme } => format!(
                "membership in the span of a degree-{} zero-dimensional scheme",
                scheme.claimed_degree()
            ),
            RankCertificate::Refutation { context, .. } => context.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SeededRng;

    fn var(n: usize, i: usize) -> MPoly {
        MPoly::var(n, i)
    }

    fn seeded_form(n: usize, d: u32, rng: &mut SeededRng) -> SymForm {
        loop {
            let monos = monomials_of_degree(n, d);
            let terms: Vec<_> = monos
                .into_iter()
                .map(|m| (m, rng.small_rational(9, 3)))
                .filter(|(_, c)| !c.is_zero())
                .collect();
            if !terms.is_empty() {
                return SymForm::new(MPoly::from_terms(n, terms)).unwrap();
            }
        }
    }

    #[test]
    fn catalecticant_of_pure_and_fermat_binary_cubics() {
        // x₀³: rank Cat_{1,2} = 1.
        let f = SymForm::new(var(2, 0).pow(3)).unwrap();
        assert_eq!(catalecticant(&f, 1).unwrap().rank(), 1);
        // x₀³+x₁³: the 3×2 matrix [[3,0],[0,0],[0,3]] has rank 2.
        let g = SymForm::new(var(2, 0).pow(3).add(&var(2, 1).pow(3))).unwrap();
        let cat = catalecticant(&g, 1).unwrap();
        assert_eq!((cat.rows(), cat.cols()), (3, 2));
        assert_eq!(cat.at(0, 0), &Rational::from_int(3));
        assert_eq!(cat.at(2, 1), &Rational::from_int(3));
        assert_eq!(cat.rank(), 2);
    }

    #[test]
    fn random_plane_quartic_has_full_middle_catalecticant() {
        let mut rng = SeededRng::new(0x0404_0404);
        let f = seeded_form(3, 4, &mut rng);
        assert_eq!(catalecticant(&f, 2).unwrap().rank(), 6);
        assert_eq!(border_rank_lb(&f), 6);
    }

    #[test]
    fn catalecticant_rank_symmetry() {
        let mut rng = SeededRng::new(0xCA7A_1EC7);
        for _ in 0..12 {
            let n = 2 + rng.below(2) as usize;
            let d = 2 + rng.below(3) as u32;
            let f = seeded_form(n, d, &mut rng);
            for a in 0..=d {
                let ra = catalecticant(&f, a).unwrap().rank();
                let rb = catalecticant(&f, d - a).unwrap().rank();
                assert_eq!(ra, rb, "rank symmetry failed at level {}", a);
            }
        }
    }

    #[test]
    fn apolar_basis_of_pure_power_and_binary_form() {
        // (x₀^d)^⊥ in degree 1 is spanned by the other partials.
        let f = SymForm::new(var(3, 0).pow(4)).unwrap();
        let b1 = apolar_basis(&f, 1).unwrap();
        assert_eq!(b1.len(), 2);
        for g in &b1 {
            assert!(g.apply_to(f.body()).is_zero());
            assert_eq!(g.coeff_of(&[1, 0, 0]), Rational::zero());
        }
        // (x₀²x₁)^⊥ in degree 2 is spanned by ∂₁².
        let g = SymForm::new(var(2, 0).pow(2).mul(&var(2, 1))).unwrap();
        let b2 = apolar_basis(&g, 2).unwrap();
        assert_eq!(b2.len(), 1);
        assert_eq!(b2[0], MPoly::monomial(2, vec![0, 2], Rational::one()));
    }

    #[test]
    fn general_plane_cubic_has_net_of_apolar_conics() {
        let mut rng = SeededRng::new(0x3030_3030);
        let f = seeded_form(3, 3, &mut rng);
        // dim S₂ = 6, rank Cat_{2,1} = 3 for general f, so dim (f^⊥)₂ = 3.
        assert_eq!(apolar_basis(&f, 2).unwrap().len(), 3);
    }

    #[test]
    fn border_rank_lower_bounds() {
        let f = SymForm::new(var(2, 0).pow(5)).unwrap();
        assert_eq!(border_rank_lb(&f), 1);
        // y(x²+yz) = x²y + y²z: the three first partials are independent.
        let (x, y, z) = (var(3, 0), var(3, 1), var(3, 2));
        let g = SymForm::new(x.pow(2).mul(&y).add(&y.pow(2).mul(&z))).unwrap();
        assert_eq!(border_rank_lb(&g), 3);
    }

    #[test]
    fn scheme_degree_verification_and_membership() {
        // Three coordinate points in P²: ideal (xy, xz, yz), degree 3.
        let (x, y, z) = (var(3, 0), var(3, 1), var(3, 2));
        let gens = vec![x.mul(&y), x.mul(&z), y.mul(&z)];
        let scheme = ZeroDimScheme::new(gens.clone(), 3, 3, 3).unwrap();
        let fermat = SymForm::new(x.pow(3).add(&y.pow(3)).add(&z.pow(3))).unwrap();
        assert!(apolarity_membership(&fermat, &scheme).unwrap());
        // A cubic with a mixed monomial is not spanned by the coordinate points.
        let other = SymForm::new(x.pow(3).add(&x.mul(&y).mul(&z))).unwrap();
        assert!(!apolarity_membership(&other, &scheme).unwrap());
        // A wrong claimed degree is rejected at construction.
        assert!(ZeroDimScheme::new(gens, 4, 3, 3).is_err());
        // Single point.
        let pt = ZeroDimScheme::new(vec![y.clone(), z.clone()], 1, 1, 4).unwrap();
        let f = SymForm::new(x.pow(4)).unwrap();
        assert!(apolarity_membership(&f, &pt).unwrap());
    }

    #[test]
    fn apolarity_round_trip_on_random_points() {
        let mut rng = SeededRng::new(0xAB0A_B0AB);
        for _ in 0..25 {
            let d = 3 + rng.below(2) as u32; // 3 or 4
            let r = 1 + rng.below(4) as usize; // 1..=4 points in P²
            let mut points: Vec<Vec<Rational>> = Vec::new();
            while points.len() < r {
                let p: Vec<Rational> = (0..3).map(|_| Rational::from_int(rng.small_int(4))).collect();
                if p.iter().all(|c| c.is_zero())
                    || points.iter().any(|q| projectively_equal(&p, q))
                {
                    continue;
                }
                points.push(p);
            }
            let coeffs: Vec<Rational> = (0..r).map(|_| Rational::from_int(rng.small_nonzero(6))).collect();
            let body = evaluate_decomposition(3, d, &points, &coeffs).unwrap();
            if body.is_zero() {
                continue;
            }
            let f = SymForm::new(body).unwrap();
            assert!(border_rank_lb(&f) <= r);
            let scheme = point_scheme(&points, d).unwrap();
            assert!(apolarity_membership(&f, &scheme).unwrap());
            let cert = RankCertificate::Decomposition {
                points: points.clone(),
                coefficients: coeffs.clone(),
            };
            assert!(cert.revalidate(&f).unwrap());
        }
    }
}
