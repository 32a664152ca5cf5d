//! Verifiers for the featured families of curves with large high-rank
//! loci: the tangent-contact normal forms, the projected quartic whose
//! stall tangent meets an ordinary tangent in a rank-3 point, and curves
//! on the blown-up plane (embedded in ℙ⁴ as a cubic scroll) whose
//! contracted line consists of maximal-rank points.  Numeric route and
//! bound checkers accompany them.
//!
//! Every verifier returns a [`VerificationReport`] whose evidence either
//! carries explicit witnesses (point coordinates, rank certificates,
//! contact data) or names the deterministic refutation that was run;
//! reports re-validate from the stored material.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::cubic::normalize_point;
use crate::curve::{
    binary_form_gcd, binary_rational_points, contact_profile, curve_point_rank,
    osculating_subspace, point_key, project, rational_normal_curve, subspace_contact_degree,
    CurveCertificate, LinearSubspace, ProjectionCenter, RationalCurve,
};
use crate::error::{Error, Result};
use crate::mpoly::{mpoly_det, MPoly};
use crate::qmatrix::QMatrix;
use crate::rat::Rational;
use crate::rng::SeededRng;

// ---------------------------------------------------------------------------
// numeric route and bound checkers

/// Outcome of the two numeric hypotheses under which a degree-d genus-g
/// space curve is forced to have a finite rank-3 locus, together with the
/// auxiliary counts the argument runs through.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitenessRoutes {
    pub d: i64,
    pub g: i64,
    /// 23·g < d² − 3d − 15.
    pub odd_route: bool,
    /// d even and 16·g < 3d² − 16d + 16.
    pub even_route: bool,
    /// Cusps a rational-normalization argument must produce:
    /// (d−1)(d−2)/2 − g.
    pub cusp_count: i64,
    /// Threshold (21g + 17)/2 the cusp count must exceed.
    pub cusp_threshold: Rational,
    /// For even d, the upper bound ⌊d(5d−6)/16⌋ on cusps of a degree-d
    /// plane curve.
    pub even_cusp_bound: Option<i64>,
}

pub fn finiteness_routes(d: i64, g: i64) -> Result<FinitenessRoutes> {
    if d < 3 || g < 0 {
        return Err(Error::invalid("routes are defined for d ≥ 3 and g ≥ 0"));
    }
    let odd_route = 23 * g < d * d - 3 * d - 15;
    let even_route = d % 2 == 0 && 16 * g < 3 * d * d - 16 * d + 16;
    let even_cusp_bound = if d % 2 == 0 {
        Some((d * (5 * d - 6)).div_euclid(16))
    } else {
        None
    };
    Ok(FinitenessRoutes {
        d,
        g,
        odd_route,
        even_route,
        cusp_count: (d - 1) * (d - 2) / 2 - g,
        cusp_threshold: Rational::new(21 * g + 17, 2),
        even_cusp_bound,
    })
}

/// Upper bound for the dimension of the join of two varieties of the
/// given dimensions: the sum plus one.
pub fn join_dim_bound(w_dim: i64, x_dim: i64) -> Result<i64> {
    if w_dim < 0 || x_dim < 0 {
        return Err(Error::invalid("join bound takes non-negative dimensions"));
    }
    Ok(w_dim + x_dim + 1)
}

// ---------------------------------------------------------------------------
// intersection theory on the blown-up plane

/// Divisor class a·C₀ + b·f on the blown-up plane, where C₀ is the
/// (−1)-section and f the ruling fiber.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScrollClass {
    pub base: i64,
    pub fiber: i64,
}

impl ScrollClass {
    pub fn new(base: i64, fiber: i64) -> Self {
        ScrollClass { base, fiber }
    }
}

/// Bilinear extension of C₀² = −1, C₀·f = 1, f² = 0.
pub fn scroll_intersection(x: &ScrollClass, y: &ScrollClass) -> i64 {
    -x.base * y.base + x.base * y.fiber + y.base * x.fiber
}

/// Canonical class −2C₀ − 3f.
pub fn scroll_canonical() -> ScrollClass {
    ScrollClass::new(-2, -3)
}

/// Adjunction value 1 + (c² + c·K)/2.
pub fn scroll_genus(c: &ScrollClass) -> i64 {
    let k = scroll_canonical();
    1 + (scroll_intersection(c, c) + scroll_intersection(c, &k)) / 2
}

/// Dimension of the linear system of a class (a, b) with a ∈ {0, 1},
/// together with its monomial basis in the homogeneous coordinates
/// (z₀, z₁, w₀, w₁).  For a = 1 the members are A(z)·w₀ + B(z)·w₁ with
/// deg A = b and deg B = b − 1; `conditions` imposes vanishing of order e
/// on B at the marked point ((1:0), w₀ = 0) of C₀, which strikes the
/// first e fiber-part monomials.
pub fn scroll_system_dimension(
    c: &ScrollClass,
    conditions: Option<usize>,
) -> Result<(usize, Vec<MPoly>)> {
    if c.fiber < 0 {
        return Err(Error::unsupported("negative fiber degree has no sections"));
    }
    let b = c.fiber as usize;
    let zmono = |i: usize, j: usize, w0: u32, w1: u32| {
        MPoly::from_terms(
            4,
            vec![(vec![i as u32, j as u32, w0, w1], Rational::one())],
        )
    };
    match c.base {
        0 => {
            if conditions.is_some() {
                return Err(Error::unsupported(
                    "point conditions are supported on the section classes only",
                ));
            }
            let basis: Vec<MPoly> = (0..=b).map(|j| zmono(b - j, j, 0, 0)).collect();
            Ok((b, basis))
        }
        1 => {
            let e = conditions.unwrap_or(0);
            if b == 0 && e > 0 || b > 0 && e > b - 1 {
                return Err(Error::unsupported(
                    "the vanishing conditions exceed the fiber-part sections",
                ));
            }
            let mut basis: Vec<MPoly> = (0..=b).map(|j| zmono(b - j, j, 1, 0)).collect();
            if b > 0 {
                for j in e..=(b - 1) {
                    basis.push(zmono(b - 1 - j, j, 0, 1));
                }
            }
            Ok((basis.len() - 1, basis))
        }
        _ => Err(Error::unsupported(
            "only fiber classes and unisecant classes are modeled",
        )),
    }
}

// ---------------------------------------------------------------------------
// curves on the scroll

/// A member of |C₀ + (d−1)f| in the coordinates above: the section
/// A(z)·w₀ + B(z)·w₁ with deg A = d−1, deg B = d−2, embedded in ℙ⁴ by
/// (z₀²w₀, z₀z₁w₀, z₁²w₀, z₀w₁, z₁w₁).
#[derive(Clone, Debug)]
pub struct ScrollCurve {
    degree: usize,
    a: MPoly,
    b: MPoly,
}

impl ScrollCurve {
    pub fn new(degree: usize, a: MPoly, b: MPoly) -> Result<Self> {
        if degree < 4 {
            return Err(Error::invalid("the family starts at degree 4"));
        }
        for (f, d) in [(&a, degree - 1), (&b, degree - 2)] {
            if f.nvars() != 2
                || !f.is_homogeneous()
                || f.total_degree() != Some(d as u32)
            {
                return Err(Error::invalid(
                    "coefficient forms must be binary and of degrees d−1 and d−2",
                ));
            }
        }
        let g = binary_form_gcd(&[a.clone(), b.clone()]);
        if g.total_degree().unwrap_or(0) > 0 {
            return Err(Error::invalid(
                "the coefficient forms share a factor, so the member is reducible",
            ));
        }
        Ok(ScrollCurve { degree, a, b })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coefficient_forms(&self) -> (&MPoly, &MPoly) {
        (&self.a, &self.b)
    }

    /// The member is smooth exactly when A, B and the Jacobian
    /// determinant A₀B₁ − A₁B₀ have no common zero on ℙ¹.
    pub fn is_smooth(&self) -> bool {
        let det = self
            .a
            .derivative(0)
            .mul(&self.b.derivative(1))
            .add(&self.a.derivative(1).mul(&self.b.derivative(0)).scale(&-&Rational::one()));
        let g = binary_form_gcd(&[self.a.clone(), self.b.clone(), det]);
        g.total_degree().unwrap_or(0) == 0
    }

    /// Parametrized image in ℙ⁴, obtained by solving the section for
    /// (w₀ : w₁) = (B : −A).
    pub fn image(&self) -> Result<RationalCurve> {
        let z0 = MPoly::var(2, 0);
        let z1 = MPoly::var(2, 1);
        let minus = |f: &MPoly| f.scale(&-&Rational::one());
        RationalCurve::new(vec![
            z0.mul(&z0).mul(&self.b),
            z0.mul(&z1).mul(&self.b),
            z1.mul(&z1).mul(&self.b),
            minus(&self.a).mul(&z0),
            minus(&self.a).mul(&z1),
        ])
    }

    /// The contracted line {x₀ = x₁ = x₂ = 0}, image of C₀.
    pub fn contracted_line(&self) -> Result<LinearSubspace> {
        let unit = |i: usize| {
            let mut e = vec![Rational::zero(); 5];
            e[i] = Rational::one();
            e
        };
        LinearSubspace::from_equations(4, vec![unit(0), unit(1), unit(2)])
    }

    /// The marked point o = (0:0:0:1:0) where the curve meets the
    /// contracted line.
    pub fn marked_point(&self) -> Vec<Rational> {
        let mut o = vec![Rational::zero(); 5];
        o[3] = Rational::one();
        o
    }
}

/// Seeded member of |C₀ + (d−1)f| through the length-(d−2) condition at
/// the marked point: B = z₁^{d−2} and A random of degree d−1.  Rejection
/// sampling discards reducible or singular members and re-verifies the
/// image is an embedded curve.
pub fn scroll_sample_curve(
    d: usize,
    seed: u64,
) -> Result<(ScrollCurve, RationalCurve, VerificationReport)> {
    if d < 4 {
        return Err(Error::invalid("the family starts at degree 4"));
    }
    let b = MPoly::from_terms(
        2,
        vec![(vec![0, (d - 2) as u32], Rational::one())],
    );
    let mut notes: Vec<String> = Vec::new();
    for attempt in 0..8u64 {
        let mut rng = SeededRng::new(seed.wrapping_add(attempt.wrapping_mul(0x9E37_79B9_7F4A_7C15)));
        let mut terms = Vec::new();
        for j in 0..d {
            let c = if j == 0 {
                Rational::from_int(rng.small_nonzero(3))
            } else {
                Rational::from_int(rng.small_int(3))
            };
            if !c.is_zero() {
                terms.push((vec![(d - 1 - j) as u32, j as u32], c));
            }
        }
        let a = MPoly::from_terms(2, terms);
        let sc = match ScrollCurve::new(d, a, b.clone()) {
            Ok(sc) => sc,
            Err(e) => {
                notes.push(format!("attempt {attempt}: {e}"));
                continue;
            }
        };
        if !sc.is_smooth() {
            notes.push(format!("attempt {attempt}: singular member"));
            continue;
        }
        let x = match sc.image() {
            Ok(x) => x,
            Err(e) => {
                notes.push(format!("attempt {attempt}: degenerate image ({e})"));
                continue;
            }
        };
        match x.is_embedded() {
            Ok(true) => {}
            Ok(false) => {
                notes.push(format!("attempt {attempt}: image not embedded"));
                continue;
            }
            Err(e) => {
                notes.push(format!("attempt {attempt}: embedding undecided ({e})"));
                continue;
            }
        }
        let (af, bf) = sc.coefficient_forms();
        let report = VerificationReport {
            claim: String::from("scroll-member-general-sample"),
            status: VerifyStatus::Verified,
            curve: Some(x.clone()),
            evidence: vec![
                Evidence::Smoothness {
                    section_a: af.clone(),
                    section_b: bf.clone(),
                },
                Evidence::Embedded,
                Evidence::SpansAmbient,
                Evidence::Note {
                    text: format!("degree-{d} member found at schedule step {attempt}"),
                },
            ],
            seeds: vec![seed],
            limit: None,
        };
        return Ok((sc, x, report));
    }
    Err(Error::undecided(format!(
        "no general member within the seed schedule: {}",
        notes.join("; ")
    )))
}

// ---------------------------------------------------------------------------
// verification reports

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyStatus {
    Verified,
    Refuted,
    Undecided,
}

/// A single re-checkable item of evidence inside a report.
#[derive(Clone, Debug)]
pub enum Evidence {
    /// curve_point_rank output for one sample point.
    PointRank {
        point: Vec<Rational>,
        rank: usize,
        certificate: CurveCertificate,
    },
    /// A parameter whose contact profile is the stall profile (0, 0, 1).
    StallParameter {
        parameter: Vec<Rational>,
        profile: Vec<usize>,
    },
    /// Contact data of the curve against a linear subspace.
    ContactDegree {
        equations: Vec<Vec<Rational>>,
        degree: usize,
        support_size: usize,
    },
    /// An intersection number on the blown-up plane.
    Intersection {
        left: ScrollClass,
        right: ScrollClass,
        value: i64,
    },
    /// An adjunction genus on the blown-up plane.
    Genus { class: ScrollClass, value: i64 },
    /// A linear-system dimension on the blown-up plane.
    SystemDimension {
        class: ScrollClass,
        conditions: Option<usize>,
        value: usize,
    },
    /// The Jacobian smoothness check for a scroll member.
    Smoothness { section_a: MPoly, section_b: MPoly },
    /// The attached curve passed the injective-immersion check.
    Embedded,
    /// The attached curve passed the nondegeneracy check.
    SpansAmbient,
    Note { text: String },
}

impl Evidence {
    /// Re-check this item.  Witness items re-validate by evaluation and
    /// linear algebra; refutation-backed items re-run the deterministic
    /// decision they record.
    pub fn revalidate(&self, curve: Option<&RationalCurve>) -> Result<bool> {
        let need_curve = || {
            curve.ok_or_else(|| Error::invalid("evidence references a curve the report lacks"))
        };
        match self {
            Evidence::PointRank {
                point,
                rank,
                certificate,
            } => {
                let x = need_curve()?;
                Ok(certificate.revalidate(x, point)? && certificate_rank(certificate) == Some(*rank))
            }
            Evidence::StallParameter { parameter, profile } => {
                let x = need_curve()?;
                Ok(contact_profile(x, parameter)?.orders() == profile.as_slice())
            }
            Evidence::ContactDegree {
                equations,
                degree,
                support_size,
            } => {
                let x = need_curve()?;
                let l = LinearSubspace::from_equations(x.ambient(), equations.clone())?;
                let contact = subspace_contact_degree(x, &l)?;
                Ok(contact.degree == *degree && contact.support.len() == *support_size)
            }
            Evidence::Intersection { left, right, value } => {
                Ok(scroll_intersection(left, right) == *value)
            }
            Evidence::Genus { class, value } => Ok(scroll_genus(class) == *value),
            Evidence::SystemDimension {
                class,
                conditions,
                value,
            } => Ok(scroll_system_dimension(class, *conditions)?.0 == *value),
            Evidence::Smoothness {
                section_a,
                section_b,
            } => {
                let sc = ScrollCurve::new(
                    section_a.total_degree().unwrap_or(0) as usize + 1,
                    section_a.clone(),
                    section_b.clone(),
                )?;
                Ok(sc.is_smooth())
            }
            Evidence::Embedded => need_curve()?.is_embedded(),
            Evidence::SpansAmbient => {
                let x = need_curve()?;
                Ok(RationalCurve::new(x.components().to_vec()).is_ok())
            }
            Evidence::Note { .. } => Ok(true),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Evidence::PointRank { point, rank, .. } => format!(
                "point ({}) has rank {rank}",
                join_coords(point)
            ),
            Evidence::StallParameter { parameter, .. } => {
                format!("stall parameter ({})", join_coords(parameter))
            }
            Evidence::ContactDegree {
                degree,
                support_size,
                ..
            } => format!("contact degree {degree} on {support_size} rational point(s)"),
            Evidence::Intersection { left, right, value } => format!(
                "({}C₀+{}f)·({}C₀+{}f) = {value}",
                left.base, left.fiber, right.base, right.fiber
            ),
            Evidence::Genus { class, value } => {
                format!("genus({}C₀+{}f) = {value}", class.base, class.fiber)
            }
            Evidence::SystemDimension {
                class,
                conditions,
                value,
            } => format!(
                "dim |{}C₀+{}f{}| = {value}",
                class.base,
                class.fiber,
                match conditions {
                    Some(e) => format!(" − length-{e} condition"),
                    None => String::new(),
                }
            ),
            Evidence::Smoothness { .. } => String::from("member passes the Jacobian smoothness check"),
            Evidence::Embedded => String::from("curve is an embedded injective immersion"),
            Evidence::SpansAmbient => String::from("curve spans the ambient space"),
            Evidence::Note { text } => text.clone(),
        }
    }
}

fn join_coords(p: &[Rational]) -> String {
    let parts: Vec<String> = p.iter().map(|c| c.to_canonical_string()).collect();
    parts.join(":")
}

/// The rank a certificate vouches for, when it decides one.
pub fn certificate_rank(cert: &CurveCertificate) -> Option<usize> {
    match cert {
        CurveCertificate::OnCurve { .. } => Some(1),
        CurveCertificate::Secant { .. }
        | CurveCertificate::SecantExtension { .. }
        | CurveCertificate::SecantSuffices { .. } => Some(2),
        CurveCertificate::Trisecant { .. } => Some(3),
        CurveCertificate::AmbientCeiling { ambient } => Some(*ambient),
        CurveCertificate::Chain(parts) => parts.iter().rev().find_map(certificate_rank),
        _ => None,
    }
}

/// Outcome of one verifier run: the claim checked, the verdict, the
/// curve the evidence refers to, and the evidence itself.  Undecided
/// verdicts must state the limit that was hit.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub claim: String,
    pub status: VerifyStatus,
    pub curve: Option<RationalCurve>,
    pub evidence: Vec<Evidence>,
    pub seeds: Vec<u64>,
    pub limit: Option<String>,
}

impl VerificationReport {
    /// Re-check the report from its stored material.
    pub fn revalidate(&self) -> Result<bool> {
        if self.status == VerifyStatus::Undecided {
            return Ok(self.limit.is_some());
        }
        if self.evidence.is_empty() {
            return Ok(false);
        }
        for e in &self.evidence {
            if !e.revalidate(self.curve.as_ref())? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

// ---------------------------------------------------------------------------
// tangent-contact normal form

/// The degree-d normal-form curve (z₀^d, z₀^{d−1}z₁, a₂·z₀z₁^{d−1},
/// a₃·z₁^d) in ℙ³, whose tangent line at p = (1:0:0:0) meets the curve
/// in a length-(d−1) scheme supported at p.
pub fn normal_form_curve(d: usize, a2: &Rational, a3: &Rational) -> Result<RationalCurve> {
    if d < 4 {
        return Err(Error::invalid("the normal form needs degree at least 4"));
    }
    if a2.is_zero() || a3.is_zero() {
        return Err(Error::invalid("both trailing coefficients must be nonzero"));
    }
    let du = d as u32;
    RationalCurve::new(vec![
        MPoly::from_terms(2, vec![(vec![du, 0], Rational::one())]),
        MPoly::from_terms(2, vec![(vec![du - 1, 1], Rational::one())]),
        MPoly::from_terms(2, vec![(vec![1, du - 1], a2.clone())]),
        MPoly::from_terms(2, vec![(vec![0, du], a3.clone())]),
    ])
}

/// Verify the normal form's tangency claim and certify sample points of
/// the tangent line minus the contact point as rank 3.
pub fn normal_form_verify(
    d: usize,
    a2: &Rational,
    a3: &Rational,
    samples: usize,
) -> Result<VerificationReport> {
    let x = normal_form_curve(d, a2, a3)?;
    let mut evidence = Vec::new();
    let mut status = VerifyStatus::Verified;
    let mut limits: Vec<String> = Vec::new();

    if x.is_embedded()? {
        evidence.push(Evidence::Embedded);
    } else {
        status = VerifyStatus::Refuted;
        evidence.push(Evidence::Note {
            text: String::from("the parametrization is not an embedding"),
        });
    }

    let origin = vec![Rational::one(), Rational::zero()];
    let tangent = osculating_subspace(&x, &origin, 1)?;
    let contact = subspace_contact_degree(&x, &tangent)?;
    let expected = d - 1;
    let at_origin = contact.support.len() == 1
        && crate::apolar::projectively_equal(&contact.support[0].0, &origin)
        && contact.support[0].1 == expected;
    if contact.degree == expected && contact.residual.is_none() && at_origin {
        evidence.push(Evidence::ContactDegree {
            equations: tangent.equations().to_vec(),
            degree: contact.degree,
            support_size: contact.support.len(),
        });
    } else {
        status = VerifyStatus::Refuted;
        evidence.push(Evidence::Note {
            text: format!(
                "tangent contact degree {} with {} support point(s), expected {} at the contact point",
                contact.degree,
                contact.support.len(),
                expected
            ),
        });
    }

    // Sample points of the tangent line {x₂ = x₃ = 0} away from p.
    let mut points: Vec<Vec<Rational>> = Vec::new();
    points.push(vec![
        Rational::zero(),
        Rational::one(),
        Rational::zero(),
        Rational::zero(),
    ]);
    let mut k = 1i64;
    while points.len() < samples {
        points.push(vec![
            Rational::one(),
            Rational::from_int(k),
            Rational::zero(),
            Rational::zero(),
        ]);
        k = if k > 0 { -k } else { -k + 1 };
    }
    for q in points {
        match curve_point_rank(&x, &q) {
            Ok((rank, certificate)) => {
                if rank != 3 {
                    status = VerifyStatus::Refuted;
                }
                evidence.push(Evidence::PointRank {
                    point: q,
                    rank,
                    certificate,
                });
            }
            Err(Error::Undecided { limit }) => {
                status = VerifyStatus::Undecided;
                limits.push(format!("rank of ({}) undecided: {limit}", join_coords(&q)));
            }
            Err(e) => return Err(e),
        }
    }

    Ok(VerificationReport {
        claim: String::from("normal-form-tangent-contact"),
        status,
        curve: Some(x),
        evidence,
        seeds: Vec::new(),
        limit: if limits.is_empty() {
            None
        } else {
            Some(limits.join("; "))
        },
    })
}

// ---------------------------------------------------------------------------
// the projected quartic and its stall tangents

/// Verify, for a seeded projection of the quartic normal curve to ℙ³,
/// that a stall tangent and an ordinary tangent meet and that their
/// intersection point has rank 3, and certify five seeded secant points
/// as rank 2.
pub fn projected_quartic_verify(seed: u64) -> Result<VerificationReport> {
    let schedule = [
        Rational::one(),
        Rational::from_int(2),
        Rational::from_int(3),
        Rational::new(1, 2),
    ];
    let vero = rational_normal_curve(4)?;
    let mut notes: Vec<String> = Vec::new();

    for k in 0..schedule.len() {
        let b = &schedule[((seed as usize) + k) % schedule.len()];
        let mut center = vec![Rational::zero(); 5];
        center[2] = Rational::one();
        center[3] = -b;
        let x = project(&vero, &ProjectionCenter::Point(center))?;
        match x.is_embedded() {
            Ok(true) => {}
            Ok(false) => {
                notes.push(format!("center step {k}: image is singular"));
                continue;
            }
            Err(e) => {
                notes.push(format!("center step {k}: embedding undecided ({e})"));
                continue;
            }
        }
        match stall_tangent_report(&x, seed, &mut notes)? {
            Some(report) => return Ok(report),
            None => continue,
        }
    }

    Ok(VerificationReport {
        claim: String::from("stall-tangent-intersection-rank"),
        status: VerifyStatus::Undecided,
        curve: None,
        evidence: Vec::new(),
        seeds: vec![seed],
        limit: Some(format!(
            "no general center with rational stalls in the seed schedule: {}",
            notes.join("; ")
        )),
    })
}

/// Stall analysis of an embedded space curve; None when no rational
/// stall exists (caller moves to the next center).
fn stall_tangent_report(
    x: &RationalCurve,
    seed: u64,
    notes: &mut Vec<String>,
) -> Result<Option<VerificationReport>> {
    let stalls = stall_parameters(x)?;
    if stalls.0.is_empty() {
        notes.push(String::from("no rational stall parameter"));
        return Ok(None);
    }
    let mut evidence: Vec<Evidence> = Vec::new();
    let mut status = VerifyStatus::Verified;
    let mut limits: Vec<String> = Vec::new();
    if stalls.1 {
        limits.push(String::from(
            "stall parameters with irrational values remain unexamined",
        ));
    }
    for s in &stalls.0 {
        evidence.push(Evidence::StallParameter {
            parameter: s.clone(),
            profile: vec![0, 0, 1],
        });
    }

    // Tangent frames and the meeting condition.
    let d0: Vec<MPoly> = x.components().iter().map(|f| f.derivative(0)).collect();
    let d1: Vec<MPoly> = x.components().iter().map(|f| f.derivative(1)).collect();
    let frame = |t: &[Rational]| -> (Vec<Rational>, Vec<Rational>) {
        (
            d0.iter().map(|f| f.eval(t)).collect(),
            d1.iter().map(|f| f.eval(t)).collect(),
        )
    };
    let mut seen: Vec<Vec<String>> = Vec::new();
    for v0 in &stalls.0 {
        let (a0, a1) = frame(v0);
        let mut rows: Vec<Vec<MPoly>> = vec![d0.clone(), d1.clone()];
        for c in [&a0, &a1] {
            rows.push(c.iter().map(|v| MPoly::constant(2, v.clone())).collect());
        }
        let meet = mpoly_det(&rows);
        if meet.is_zero() {
            limits.push(format!(
                "the meeting condition degenerates at stall ({})",
                join_coords(v0)
            ));
            status = VerifyStatus::Undecided;
            continue;
        }
        let (roots, residual) = binary_rational_points(&meet);
        if residual.is_some() {
            limits.push(format!(
                "tangents with irrational parameters may meet the stall tangent at ({})",
                join_coords(v0)
            ));
        }
        for (u, _) in roots {
            if crate::apolar::projectively_equal(&u, v0)
                || stalls
                    .0
                    .iter()
                    .any(|s| crate::apolar::projectively_equal(&u, s))
            {
                continue;
            }
            if contact_profile(x, &u)?.orders() != [0, 0, 0] {
                notes.push(format!(
                    "the tangent at ({}) is itself degenerate; skipped",
                    join_coords(&u)
                ));
                continue;
            }
            let (b0, b1) = frame(&u);
            let cols = [&b0, &b1, &a0, &a1];
            let mut m = QMatrix::new(4, 4);
            for (j, col) in cols.iter().enumerate() {
                for i in 0..4 {
                    *m.at_mut(i, j) = col[i].clone();
                }
            }
            let (_, kernel) = m.kernel();
            let Some(coeffs) = kernel.first() else {
                continue;
            };
            if coeffs[0].is_zero() && coeffs[1].is_zero() {
                continue;
            }
            let q: Vec<Rational> = (0..4)
                .map(|i| &(&coeffs[0] * &b0[i]) + &(&coeffs[1] * &b1[i]))
                .collect();
            let q = normalize_point(&q);
            if seen.iter().any(|key| *key == point_key(&q)) {
                continue;
            }
            seen.push(point_key(&q));
            match curve_point_rank(x, &q) {
                Ok((rank, certificate)) => {
                    if rank != 3 {
                        status = VerifyStatus::Refuted;
                    }
                    evidence.push(Evidence::PointRank {
                        point: q,
                        rank,
                        certificate,
                    });
                }
                Err(Error::Undecided { limit }) => {
                    status = VerifyStatus::Undecided;
                    limits.push(format!(
                        "rank of ({}) undecided: {limit}",
                        join_coords(&q)
                    ));
                }
                Err(e) => return Err(e),
            }
        }
    }
    if seen.is_empty() && status == VerifyStatus::Verified {
        // Stalls exist but no rational ordinary tangent meets them.
        notes.push(String::from(
            "no rational ordinary tangent meets a stall tangent",
        ));
        return Ok(None);
    }

    // Five seeded secant points, certified rank 2 by explicit witnesses.
    let mut rng = SeededRng::new(seed ^ 0xA5A5_5A5A_1234_FEDC);
    let mut found = 0usize;
    let mut attempts = 0usize;
    while found < 5 && attempts < 200 {
        attempts += 1;
        let s = rng.small_int(6);
        let t = rng.small_int(6);
        if s == t {
            continue;
        }
        let lam = Rational::from_int(rng.small_nonzero(3));
        let mu = Rational::from_int(rng.small_nonzero(3));
        let p1 = x.evaluate(&[Rational::one(), Rational::from_int(s)])?;
        let p2 = x.evaluate(&[Rational::one(), Rational::from_int(t)])?;
        let q: Vec<Rational> = p1
            .iter()
            .zip(&p2)
            .map(|(a, c)| &(&lam * a) + &(&mu * c))
            .collect();
        let q = normalize_point(&q);
        if seen.iter().any(|key| *key == point_key(&q)) {
            continue;
        }
        match curve_point_rank(x, &q) {
            Ok((1, _)) => continue, // the secant grazed a third curve point
            Ok((rank, certificate)) => {
                if rank != 2 {
                    status = VerifyStatus::Refuted;
                }
                seen.push(point_key(&q));
                evidence.push(Evidence::PointRank {
                    point: q,
                    rank,
                    certificate,
                });
                found += 1;
            }
            Err(Error::Undecided { limit }) => {
                status = VerifyStatus::Undecided;
                limits.push(format!("rank of a secant sample undecided: {limit}"));
            }
            Err(e) => return Err(e),
        }
    }
    if found < 5 {
        status = VerifyStatus::Undecided;
        limits.push(String::from("fewer than five secant samples certified"));
    }

    Ok(Some(VerificationReport {
        claim: String::from("stall-tangent-intersection-rank"),
        status,
        curve: Some(x.clone()),
        evidence,
        seeds: vec![seed],
        limit: if limits.is_empty() {
            None
        } else {
            Some(limits.join("; "))
        },
    }))
}

/// Rational parameters with contact profile (0, 0, 1), plus a flag for
/// irrational candidates.  Candidates are the zeros of the Wronskian of
/// the affine components together with the point at infinity.
fn stall_parameters(x: &RationalCurve) -> Result<(Vec<Vec<Rational>>, bool)> {
    if x.ambient() != 3 {
        return Err(Error::invalid("stall analysis is for space curves"));
    }
    let aff: Vec<MPoly> = x
        .components()
        .iter()
        .map(|f| f.subst(0, &Rational::one()))
        .collect();
    let mut rows = vec![aff];
    for _ in 0..3 {
        let prev = rows.last().unwrap();
        rows.push(prev.iter().map(|f| f.derivative(1)).collect());
    }
    let w = mpoly_det(&rows);
    if w.is_zero() {
        return Err(Error::unsupported("the curve is degenerate"));
    }
    let wu = w.to_upoly(1)?;
    let (roots, rest) = wu.strip_small_rational_roots(10_000);
    let mut candidates: Vec<Vec<Rational>> = roots
        .into_iter()
        .map(|r| vec![Rational::one(), r])
        .collect();
    candidates.push(vec![Rational::zero(), Rational::one()]);
    let mut stalls = Vec::new();
    for t in candidates {
        if contact_profile(x, &t)?.orders() == [0, 0, 1] {
            stalls.push(normalize_point(&t));
        }
    }
    Ok((stalls, rest.deg_or_0() > 0))
}

// ---------------------------------------------------------------------------
// maximal rank on the contracted line

/// Certify that sample points of the contracted line (other than the
/// marked point) have rank 4 with respect to a seeded scroll member.
pub fn contracted_line_rank_verify(
    d: usize,
    points: &[Vec<Rational>],
    seed: u64,
) -> Result<VerificationReport> {
    if d < 5 {
        return Err(Error::invalid(
            "the maximal-rank claim concerns degrees 5 and up",
        ));
    }
    let (sc, x, sample_report) = scroll_sample_curve(d, seed)?;
    let o = sc.marked_point();
    let mut evidence = sample_report.evidence;
    let mut status = VerifyStatus::Verified;
    let mut limits: Vec<String> = Vec::new();
    for q in points {
        if q.len() != 5 || q.iter().take(3).any(|c| !c.is_zero()) || q.iter().all(|c| c.is_zero()) {
            return Err(Error::invalid(
                "samples must lie on the contracted line {x₀ = x₁ = x₂ = 0}",
            ));
        }
        if crate::apolar::projectively_equal(q, &o) {
            return Err(Error::invalid(
                "the marked point lies on the curve (rank 1) and is excluded",
            ));
        }
        match curve_point_rank(&x, q) {
            Ok((rank, certificate)) => {
                if rank != 4 {
                    status = VerifyStatus::Refuted;
                }
                evidence.push(Evidence::PointRank {
                    point: q.clone(),
                    rank,
                    certificate,
                });
            }
            Err(Error::Undecided { limit }) => {
                status = VerifyStatus::Undecided;
                limits.push(format!("rank of ({}) undecided: {limit}", join_coords(q)));
            }
            Err(e) => return Err(e),
        }
    }
    Ok(VerificationReport {
        claim: String::from("contracted-line-maximal-rank"),
        status,
        curve: Some(x),
        evidence,
        seeds: vec![seed],
        limit: if limits.is_empty() {
            None
        } else {
            Some(limits.join("; "))
        },
    })
}

/// Full scroll suite: intersection numbers, adjunction genus, system
/// dimensions, a seeded smooth spanning member, and maximal-rank
/// certificates on the contracted line.
pub fn scroll_suite_verify(
    d: usize,
    seed: u64,
    points: &[Vec<Rational>],
) -> Result<VerificationReport> {
    if d < 5 {
        return Err(Error::invalid("the suite runs for degrees 5 and up"));
    }
    let di = d as i64;
    let member = ScrollClass::new(1, di - 1);
    let hyperplane = ScrollClass::new(1, 2);
    let section = ScrollClass::new(1, 0);
    let fiber = ScrollClass::new(0, 1);
    let mut evidence = Vec::new();
    let mut status = VerifyStatus::Verified;
    let numeric: [(ScrollClass, ScrollClass, i64); 3] = [
        (member, hyperplane, di),
        (member, section, di - 2),
        (fiber, hyperplane, 1),
    ];
    for (l, r, expected) in numeric {
        let value = scroll_intersection(&l, &r);
        if value != expected {
            status = VerifyStatus::Refuted;
        }
        evidence.push(Evidence::Intersection {
            left: l,
            right: r,
            value,
        });
    }
    let genus = scroll_genus(&member);
    if genus != 0 {
        status = VerifyStatus::Refuted;
    }
    evidence.push(Evidence::Genus {
        class: member,
        value: genus,
    });
    for (conditions, expected) in [(None, 2 * d - 2), (Some(d - 2), d)] {
        let (value, _) = scroll_system_dimension(&member, conditions)?;
        if value != expected {
            status = VerifyStatus::Refuted;
        }
        evidence.push(Evidence::SystemDimension {
            class: member,
            conditions,
            value,
        });
    }
    let line_report = contracted_line_rank_verify(d, points, seed)?;
    if line_report.status != VerifyStatus::Verified {
        status = line_report.status;
    }
    evidence.extend(line_report.evidence);
    Ok(VerificationReport {
        claim: String::from("scroll-suite"),
        status,
        curve: line_report.curve,
        evidence,
        seeds: vec![seed],
        limit: line_report.limit,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn intersection_numbers_match_the_form() {
        let d = 5;
        let member = ScrollClass::new(1, d - 1);
        assert_eq!(scroll_intersection(&member, &ScrollClass::new(1, 2)), 5);
        assert_eq!(scroll_intersection(&member, &ScrollClass::new(1, 0)), 3);
        assert_eq!(
            scroll_intersection(&ScrollClass::new(0, 1), &ScrollClass::new(0, 1)),
            0
        );
        assert_eq!(
            scroll_intersection(&ScrollClass::new(0, 1), &ScrollClass::new(1, 2)),
            1
        );
        // Symmetry and bilinearity spot checks.
        let a = ScrollClass::new(2, -3);
        let b = ScrollClass::new(-1, 4);
        assert_eq!(scroll_intersection(&a, &b), scroll_intersection(&b, &a));
        let sum = ScrollClass::new(a.base + b.base, a.fiber + b.fiber);
        let c = ScrollClass::new(3, 7);
        assert_eq!(
            scroll_intersection(&sum, &c),
            scroll_intersection(&a, &c) + scroll_intersection(&b, &c)
        );
    }

    #[test]
    fn adjunction_genus_of_rational_classes() {
        assert_eq!(scroll_genus(&ScrollClass::new(1, 4)), 0);
        assert_eq!(scroll_genus(&ScrollClass::new(1, 2)), 0);
        assert_eq!(scroll_genus(&ScrollClass::new(0, 1)), 0);
        for b in 0..8 {
            assert_eq!(scroll_genus(&ScrollClass::new(1, b)), 0);
        }
    }

    #[test]
    fn system_dimensions_count_the_monomial_basis() {
        let member = ScrollClass::new(1, 4);
        let (dim, basis) = scroll_system_dimension(&member, None).unwrap();
        assert_eq!(dim, 8);
        assert_eq!(basis.len(), 9);
        let (dim, basis) = scroll_system_dimension(&member, Some(3)).unwrap();
        assert_eq!(dim, 5);
        assert_eq!(basis.len(), 6);
        let (dim, _) = scroll_system_dimension(&ScrollClass::new(0, 7), None).unwrap();
        assert_eq!(dim, 7);
        assert!(scroll_system_dimension(&ScrollClass::new(2, 3), None).is_err());
        assert!(scroll_system_dimension(&member, Some(4)).is_err());
    }

    #[test]
    fn route_table_matches_the_stated_inequalities() {
        let r = finiteness_routes(4, 1).unwrap();
        assert!(!r.odd_route && !r.even_route);
        assert_eq!(r.cusp_count, 2);
        assert_eq!(r.cusp_threshold, rat(19));
        assert_eq!(
            finiteness_routes(4, 0).unwrap().cusp_threshold,
            Rational::new(17, 2)
        );
        assert_eq!(r.even_cusp_bound, Some(3));
        let r = finiteness_routes(6, 1).unwrap();
        assert!(!r.odd_route && r.even_route);
        let r = finiteness_routes(8, 1).unwrap();
        assert!(r.even_route);
        let r = finiteness_routes(9, 1).unwrap();
        assert!(r.odd_route);
        assert_eq!(r.even_cusp_bound, None);
        let r = finiteness_routes(5, 0).unwrap();
        assert!(!r.odd_route && !r.even_route);
        assert!(finiteness_routes(2, 0).is_err());
        assert!(finiteness_routes(5, -1).is_err());
    }

    #[test]
    fn join_bound_is_sum_plus_one() {
        assert_eq!(join_dim_bound(10, 2).unwrap(), 13);
        assert_eq!(join_dim_bound(6, 2).unwrap(), 9);
        assert_eq!(join_dim_bound(0, 1).unwrap(), 2);
        assert!(join_dim_bound(-1, 0).is_err());
    }

    #[test]
    fn normal_form_contact_and_tangent_ranks() {
        let report = normal_form_verify(5, &rat(1), &rat(1), 3).unwrap();
        assert_eq!(report.status, VerifyStatus::Verified);
        let contact = report
            .evidence
            .iter()
            .find_map(|e| match e {
                Evidence::ContactDegree { degree, .. } => Some(*degree),
                _ => None,
            })
            .unwrap();
        assert_eq!(contact, 4);
        let ranks: Vec<usize> = report
            .evidence
            .iter()
            .filter_map(|e| match e {
                Evidence::PointRank { rank, .. } => Some(*rank),
                _ => None,
            })
            .collect();
        assert_eq!(ranks, vec![3, 3, 3]);
        assert!(report.revalidate().unwrap());
        assert!(normal_form_curve(5, &rat(0), &rat(1)).is_err());
        assert!(normal_form_curve(3, &rat(1), &rat(1)).is_err());
    }

    #[test]
    fn projected_quartic_stall_intersection_has_rank_three() {
        let report = projected_quartic_verify(0).unwrap();
        assert_eq!(report.status, VerifyStatus::Verified);
        let stalls: Vec<&Vec<Rational>> = report
            .evidence
            .iter()
            .filter_map(|e| match e {
                Evidence::StallParameter { parameter, .. } => Some(parameter),
                _ => None,
            })
            .collect();
        assert!(stalls.contains(&&vec![rat(1), rat(0)]));
        assert!(stalls.contains(&&vec![rat(3), rat(-2)]));
        let expected = vec![rat(2), rat(-3), rat(0), rat(0)];
        let candidate = report.evidence.iter().any(|e| {
            matches!(e, Evidence::PointRank { point, rank: 3, .. } if *point == expected)
        });
        assert!(candidate, "the tangent-intersection candidate is certified");
        let secants = report
            .evidence
            .iter()
            .filter(|e| matches!(e, Evidence::PointRank { rank: 2, .. }))
            .count();
        assert_eq!(secants, 5);
    }

    #[test]
    fn projected_quartic_report_revalidates() {
        let report = projected_quartic_verify(0).unwrap();
        assert!(report.revalidate().unwrap());
    }

    #[test]
    fn scroll_sample_is_smooth_and_spanning() {
        let (sc, x, report) = scroll_sample_curve(5, 0).unwrap();
        assert!(sc.is_smooth());
        assert_eq!(x.ambient(), 4);
        assert_eq!(x.degree(), 5);
        assert_eq!(report.status, VerifyStatus::Verified);
        assert!(report.revalidate().unwrap());
        // The contracted line meets the curve in a length-(d−2) scheme at
        // the marked point, and the ruling line there meets it simply.
        let contact = subspace_contact_degree(&x, &sc.contracted_line().unwrap()).unwrap();
        assert_eq!(contact.degree, 3);
        assert_eq!(contact.support.len(), 1);
        assert!(crate::apolar::projectively_equal(
            &x.evaluate(&contact.support[0].0).unwrap(),
            &sc.marked_point()
        ));
    }

    #[test]
    fn contracted_line_points_have_maximal_rank() {
        let points = vec![
            vec![rat(0), rat(0), rat(0), rat(0), rat(1)],
            vec![rat(0), rat(0), rat(0), rat(1), rat(1)],
        ];
        let report = scroll_suite_verify(5, 0, &points).unwrap();
        assert_eq!(report.status, VerifyStatus::Verified);
        assert!(report.limit.is_none());
        let ranks: Vec<usize> = report
            .evidence
            .iter()
            .filter_map(|e| match e {
                Evidence::PointRank { point, rank, .. }
                    if point.iter().take(3).all(|c| c.is_zero()) =>
                {
                    Some(*rank)
                }
                _ => None,
            })
            .collect();
        assert_eq!(ranks, vec![4, 4]);
        assert!(report.revalidate().unwrap());
        // The marked point itself sits on the curve and is rejected.
        let o = vec![rat(0), rat(0), rat(0), rat(1), rat(0)];
        assert!(contracted_line_rank_verify(5, &[o], 0).is_err());
    }

    #[test]
    fn reducible_scroll_members_are_rejected() {
        let z1 = MPoly::var(2, 1);
        let a = z1.pow(4);
        let b = z1.pow(3);
        assert!(ScrollCurve::new(5, a, b).is_err());
    }

    #[test]
    fn certificate_rank_reads_chains() {
        let chain = CurveCertificate::Chain(vec![
            CurveCertificate::NotOnCurve {
                context: String::new(),
            },
            CurveCertificate::NoSecant {
                context: String::new(),
            },
            CurveCertificate::AmbientCeiling { ambient: 3 },
        ]);
        assert_eq!(certificate_rank(&chain), Some(3));
        let undec = CurveCertificate::NoSecant {
            context: String::new(),
        };
        assert_eq!(certificate_rank(&undec), None);
    }
}
