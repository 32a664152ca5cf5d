//! Singularities of parametrized plane curves: cusp and identification
//! detection by elimination, branch analysis on truncated power series,
//! multiplicity sequences via blowups, and pairwise branch intersection
//! numbers by the simultaneous-infinitely-near-point count.
//!
//! The scan lists rational singular parameters; completeness is certified
//! arithmetically rather than by the search itself: a rational
//! parametrized curve has geometric genus 0, so the singularities are
//! complete exactly when their delta invariants sum to (d−1)(d−2)/2.
//! Only then (and only when every singularity is of a supported type) is
//! the genus reported.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::cubic::normalize_point;
use crate::curve::{
    basis_through, binary_change, binary_form_gcd, binary_rational_points, pair_zero_scan,
    point_key, RationalCurve,
};
use crate::error::{Error, Result};
use crate::mpoly::MPoly;
use crate::rat::Rational;

/// Working precision for branch power series.  Branch coordinate orders
/// are bounded by the curve degree and every blowup lowers them, so this
/// is far more than the supported degrees ever consume.
const PREC: usize = 96;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SingularityKind {
    Node,
    OrdinaryCusp,
    RamphoidCusp,
    Tacnode,
    Other,
}

#[derive(Clone, Debug)]
pub struct SingularityEntry {
    /// Image point on the plane curve, normalized.
    pub point: Vec<Rational>,
    /// Parameters mapping to the point, sorted.
    pub parameters: Vec<Vec<Rational>>,
    /// Multiplicity sequence of each branch (empty = smooth branch), in
    /// the order of `parameters`.
    pub multiplicity_sequences: Vec<Vec<usize>>,
    /// Delta invariant of the singularity (branch deltas plus pairwise
    /// intersection numbers).
    pub delta: usize,
    pub kind: SingularityKind,
}

#[derive(Clone, Debug)]
pub struct SingularityReport {
    /// Entries sorted by image point.
    pub entries: Vec<SingularityEntry>,
    /// Number of entries typed ordinary or ramphoid cusp.
    pub kappa: usize,
    /// Sum of the delta invariants of all entries.
    pub delta_sum: usize,
    /// Geometric genus, reported only when the delta sum certifies the
    /// entry list complete and every entry has a supported type.
    pub genus: Option<i64>,
    /// Why the genus is withheld, when it is.
    pub residual: Option<String>,
}

/// Classify the singularities of a plane curve given by a base-point-free
/// birational parametrization.
pub fn plane_singularities(x: &RationalCurve) -> Result<SingularityReport> {
    if x.ambient() != 2 {
        return Err(Error::invalid("singularity reports are for plane curves"));
    }
    if !is_birational(x)? {
        return Err(Error::invalid(
            "the parametrization is not birational onto its image",
        ));
    }
    let d = x.degree();
    let mut residual: Vec<String> = Vec::new();

    // Non-immersion parameters: common zeros of the 2×2 minors of the
    // Jacobian [∂₀φ; ∂₁φ].
    let mut jac_minors = Vec::new();
    let d0: Vec<MPoly> = x.components().iter().map(|f| f.derivative(0)).collect();
    let d1: Vec<MPoly> = x.components().iter().map(|f| f.derivative(1)).collect();
    for i in 0..3 {
        for j in i + 1..3 {
            let m = d0[i]
                .mul(&d1[j])
                .add(&d0[j].mul(&d1[i]).scale(&-&Rational::one()));
            if !m.is_zero() {
                jac_minors.push(m);
            }
        }
    }
    let jac_gcd = binary_form_gcd(&jac_minors);
    let (cusp_params, cusp_residual) = binary_rational_points(&jac_gcd);
    if cusp_residual.is_some() {
        residual.push(String::from(
            "non-immersion parameters with irrational values remain",
        ));
    }

    // Identification pairs: rational off-diagonal zeros of the divided
    // pair system.
    let mut pairs: Vec<(Vec<Rational>, Vec<Rational>)> = Vec::new();
    for (s, t) in pair_zero_scan(&x.pair_system()) {
        if crate::apolar::projectively_equal(&s, &t) {
            continue; // diagonal zeros are the cusps, handled above
        }
        let (a, b) = if point_key(&s) <= point_key(&t) {
            (s, t)
        } else {
            (t, s)
        };
        if !pairs.iter().any(|(u, v)| *u == a && *v == b) {
            pairs.push((a, b));
        }
    }

    // Group all singular parameters by image point.
    let mut buckets: Vec<(Vec<Rational>, Vec<Vec<Rational>>)> = Vec::new();
    let mut push_param = |point: Vec<Rational>, t: Vec<Rational>| {
        for (p, params) in buckets.iter_mut() {
            if crate::apolar::projectively_equal(p, &point) {
                if !params.iter().any(|u| *u == t) {
                    params.push(t);
                }
                return;
            }
        }
        buckets.push((point, vec![t]));
    };
    for (t, _) in &cusp_params {
        push_param(x.evaluate(t)?, t.clone());
    }
    for (s, t) in &pairs {
        let img = x.evaluate(s)?;
        let img_t = x.evaluate(t)?;
        if !crate::apolar::projectively_equal(&img, &img_t) {
            return Err(Error::unsupported(
                "pair scan produced parameters with distinct images",
            ));
        }
        push_param(img.clone(), s.clone());
        push_param(img, t.clone());
    }
    buckets.sort_by(|a, b| point_key(&a.0).cmp(&point_key(&b.0)));

    let mut entries = Vec::new();
    for (point, mut params) in buckets {
        params.sort_by(|a, b| point_key(a).cmp(&point_key(b)));
        let branches: Vec<(Series, Series)> = params
            .iter()
            .map(|t| branch_series(x, t, &point))
            .collect::<Result<_>>()?;
        let mut sequences = Vec::new();
        let mut delta = 0usize;
        for b in &branches {
            let seq = multiplicity_sequence(&b.0, &b.1)?;
            delta += seq.iter().map(|m| m * (m - 1) / 2).sum::<usize>();
            sequences.push(seq);
        }
        for i in 0..branches.len() {
            for j in i + 1..branches.len() {
                delta += branch_intersection(&branches[i], &branches[j])?;
            }
        }
        let kind = classify(&sequences, delta);
        entries.push(SingularityEntry {
            point,
            parameters: params,
            multiplicity_sequences: sequences,
            delta,
            kind,
        });
    }

    let delta_sum: usize = entries.iter().map(|e| e.delta).sum();
    let kappa = entries
        .iter()
        .filter(|e| matches!(e.kind, SingularityKind::OrdinaryCusp | SingularityKind::RamphoidCusp))
        .count();
    let target = (d - 1) * (d - 2) / 2;
    if delta_sum > target {
        return Err(Error::unsupported(
            "delta invariants exceed the arithmetic genus; the scan double-counted",
        ));
    }
    if delta_sum < target {
        residual.push(format!(
            "delta sum {delta_sum} of the rational singularities falls short of the arithmetic genus {target}; singularities over extensions remain"
        ));
    }
    if entries.iter().any(|e| e.kind == SingularityKind::Other) {
        residual.push(String::from("a singularity of unsupported type is present"));
    }
    let genus = if residual.is_empty() {
        Some((target - delta_sum) as i64)
    } else {
        None
    };
    Ok(SingularityReport {
        entries,
        kappa,
        delta_sum,
        genus,
        residual: if residual.is_empty() {
            None
        } else {
            Some(residual.join("; "))
        },
    })
}

fn classify(sequences: &[Vec<usize>], delta: usize) -> SingularityKind {
    match sequences.len() {
        1 => match sequences[0].as_slice() {
            [2] => SingularityKind::OrdinaryCusp,
            [2, 2] => SingularityKind::RamphoidCusp,
            _ => SingularityKind::Other,
        },
        2 if sequences.iter().all(|s| s.is_empty()) => match delta {
            1 => SingularityKind::Node,
            2 => SingularityKind::Tacnode,
            _ => SingularityKind::Other,
        },
        _ => SingularityKind::Other,
    }
}

/// Certify birationality by exhibiting one reduced rational fiber: the
/// gcd of the 2×2 minors of [φ(t₀); φ(t)] has degree exactly 1 for some
/// probe parameter (any k:1 parametrization has every fiber of degree k).
fn is_birational(x: &RationalCurve) -> Result<bool> {
    for n in 0..=32i64 {
        let t0 = vec![Rational::one(), Rational::from_int(n)];
        let q = x.evaluate(&t0)?;
        let mut minors = Vec::new();
        for i in 0..3 {
            for j in i + 1..3 {
                let m = x.components()[j]
                    .scale(&q[i])
                    .add(&x.components()[i].scale(&-&q[j]));
                if !m.is_zero() {
                    minors.push(m);
                }
            }
        }
        let g = binary_form_gcd(&minors);
        if g.total_degree().unwrap_or(0) == 1 {
            return Ok(true);
        }
    }
    Ok(false)
}

// ---------------------------------------------------------------------------
// truncated power series

/// A power series truncated to `prec` valid coefficients.
#[derive(Clone, Debug)]
struct Series {
    c: Vec<Rational>,
    prec: usize,
}

impl Series {
    fn from_poly(coeffs: &[Rational]) -> Self {
        let mut c = vec![Rational::zero(); PREC];
        for (i, v) in coeffs.iter().enumerate().take(PREC) {
            c[i] = v.clone();
        }
        Series { c, prec: PREC }
    }

    fn coeff(&self, i: usize) -> &Rational {
        &self.c[i]
    }

    /// Order of vanishing, or None when zero to working precision.
    fn ord(&self) -> Option<usize> {
        (0..self.prec).find(|&i| !self.c[i].is_zero())
    }

    fn sub_const(&self, v: &Rational) -> Self {
        let mut out = self.clone();
        out.c[0] = &out.c[0] - v;
        out
    }

    fn mul(&self, other: &Self) -> Self {
        let prec = self.prec.min(other.prec);
        let mut c = vec![Rational::zero(); PREC];
        for k in 0..prec {
            let mut acc = Rational::zero();
            for i in 0..=k {
                if !self.c[i].is_zero() && !other.c[k - i].is_zero() {
                    acc = &acc + &(&self.c[i] * &other.c[k - i]);
                }
            }
            c[k] = acc;
        }
        Series { c, prec }
    }

    /// Reciprocal of a unit series (nonzero constant term).
    fn recip(&self) -> Result<Self> {
        if self.c[0].is_zero() {
            return Err(Error::unsupported("reciprocal of a non-unit series"));
        }
        let inv0 = self.c[0].recip()?;
        let mut c = vec![Rational::zero(); PREC];
        c[0] = inv0.clone();
        for k in 1..self.prec {
            let mut acc = Rational::zero();
            for i in 1..=k {
                if !self.c[i].is_zero() && !c[k - i].is_zero() {
                    acc = &acc + &(&self.c[i] * &c[k - i]);
                }
            }
            c[k] = &(-&acc) * &inv0;
        }
        Ok(Series {
            c,
            prec: self.prec,
        })
    }

    /// Quotient by a series of order k ≤ ord(self); precision drops by k.
    fn div(&self, other: &Self) -> Result<Self> {
        let k = other
            .ord()
            .ok_or_else(|| Error::unsupported("division by a zero series"))?;
        if let Some(o) = self.ord() {
            if o < k {
                return Err(Error::unsupported("series quotient is not a power series"));
            }
        }
        let shift = |s: &Series| -> Series {
            let mut c = vec![Rational::zero(); PREC];
            for i in k..s.prec {
                c[i - k] = s.c[i].clone();
            }
            Series {
                c,
                prec: s.prec - k,
            }
        };
        let num = shift(self);
        let den = shift(other);
        Ok(num.mul(&den.recip()?))
    }
}

/// Local branch of the curve at a parameter, as a pair of affine
/// coordinate series centered at the image point, in the chart of the
/// first nonzero coordinate of `point`.
fn branch_series(x: &RationalCurve, t: &[Rational], point: &[Rational]) -> Result<(Series, Series)> {
    let m = basis_through(t);
    let moved: Vec<Series> = x
        .components()
        .iter()
        .map(|f| {
            let u = binary_change(f, &m)
                .subst(0, &Rational::one())
                .to_upoly(1)
                .expect("dehomogenized binary form is univariate");
            let coeffs: Vec<Rational> = (0..=u.deg_or_0()).map(|i| u.coeff(i)).collect();
            Series::from_poly(&coeffs)
        })
        .collect();
    let pivot = point
        .iter()
        .position(|c| !c.is_zero())
        .ok_or_else(|| Error::invalid("zero image point"))?;
    if moved[pivot].c[0].is_zero() {
        return Err(Error::unsupported(
            "branch chart pivot vanishes at the parameter",
        ));
    }
    let others: Vec<usize> = (0..3).filter(|&i| i != pivot).collect();
    let mut coords = Vec::new();
    for &i in &others {
        let ratio = moved[i].div(&moved[pivot])?;
        let centered = ratio.sub_const(&ratio.coeff(0).clone());
        coords.push(centered);
    }
    Ok((coords[0].clone(), coords[1].clone()))
}

/// Multiplicity sequence of a unibranch germ via blowups: record
/// min(ord x, ord y) while it exceeds 1, then replace y by the recentered
/// exceptional coordinate y/x (swapping so x carries the lower order).
fn multiplicity_sequence(x0: &Series, y0: &Series) -> Result<Vec<usize>> {
    let mut x = x0.clone();
    let mut y = y0.clone();
    let mut seq = Vec::new();
    for _ in 0..PREC {
        let ox = x
            .ord()
            .ok_or_else(|| Error::unsupported("branch coordinate vanished to precision"))?;
        let oy = y
            .ord()
            .ok_or_else(|| Error::unsupported("branch coordinate vanished to precision"))?;
        let m = ox.min(oy);
        if m == 0 {
            return Err(Error::unsupported("branch is not centered at the origin"));
        }
        if m == 1 {
            return Ok(seq);
        }
        seq.push(m);
        if ox > oy {
            core::mem::swap(&mut x, &mut y);
        }
        let ratio = y.div(&x)?;
        y = ratio.sub_const(&ratio.coeff(0).clone());
    }
    Err(Error::unsupported(
        "multiplicity sequence did not terminate within precision",
    ))
}

/// Tangent direction of a germ: projective leading coefficients at the
/// minimum order.  A coordinate that is zero to working precision is
/// treated as having infinite order (the germ runs along an axis).
fn germ_direction(x: &Series, y: &Series) -> Result<(usize, Vec<Rational>)> {
    let ox = x.ord().unwrap_or(x.prec);
    let oy = y.ord().unwrap_or(y.prec);
    let m = ox.min(oy);
    if m >= x.prec.min(y.prec) {
        return Err(Error::unsupported("branch coordinates vanished to precision"));
    }
    Ok((
        m,
        normalize_point(&[x.coeff(m).clone(), y.coeff(m).clone()]),
    ))
}

/// Intersection number of two distinct branches at a common center: sum
/// of products of multiplicities over the common infinitely-near points,
/// following simultaneous blowups while the tangent directions agree.
fn branch_intersection(a: &(Series, Series), b: &(Series, Series)) -> Result<usize> {
    let (mut ax, mut ay) = (a.0.clone(), a.1.clone());
    let (mut bx, mut by) = (b.0.clone(), b.1.clone());
    let mut total = 0usize;
    for _ in 0..PREC {
        let (ma, dir_a) = germ_direction(&ax, &ay)?;
        let (mb, dir_b) = germ_direction(&bx, &by)?;
        if ma == 0 || mb == 0 {
            return Err(Error::unsupported("branch not centered at the origin"));
        }
        total += ma * mb;
        if dir_a != dir_b {
            return Ok(total);
        }
        // Blow up both branches in the chart adapted to the common
        // tangent: horizontal-ish tangents keep x as the chart
        // coordinate, a vertical tangent swaps the roles.
        if dir_a[0].is_zero() {
            core::mem::swap(&mut ax, &mut ay);
            core::mem::swap(&mut bx, &mut by);
        }
        let slope_a = ay.div(&ax)?;
        ay = slope_a.sub_const(&slope_a.coeff(0).clone());
        let slope_b = by.div(&bx)?;
        by = slope_b.sub_const(&slope_b.coeff(0).clone());
    }
    Err(Error::unsupported(
        "branch intersection did not terminate within precision; the branches may coincide",
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::rational_normal_curve;

    fn rat(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn series_of(orders_and_coeffs: &[(usize, i64)]) -> Series {
        let mut c = vec![Rational::zero(); PREC];
        for (o, v) in orders_and_coeffs {
            c[*o] = rat(*v);
        }
        Series { c, prec: PREC }
    }

    #[test]
    fn multiplicity_sequences_of_model_germs() {
        // (t², t³): ordinary cusp.
        let seq = multiplicity_sequence(&series_of(&[(2, 1)]), &series_of(&[(3, 1)])).unwrap();
        assert_eq!(seq, vec![2]);
        // (t², t⁵): ramphoid cusp.
        let seq = multiplicity_sequence(&series_of(&[(2, 1)]), &series_of(&[(5, 1)])).unwrap();
        assert_eq!(seq, vec![2, 2]);
        // (t³, t⁵): delta 4.
        let seq = multiplicity_sequence(&series_of(&[(3, 1)]), &series_of(&[(5, 1)])).unwrap();
        assert_eq!(seq, vec![3, 2]);
        // (t⁴, t⁶+t⁷): delta 8, sequence (4, 2, 2).
        let seq =
            multiplicity_sequence(&series_of(&[(4, 1)]), &series_of(&[(6, 1), (7, 1)])).unwrap();
        assert_eq!(seq, vec![4, 2, 2]);
        // Smooth branch: empty sequence.
        let seq = multiplicity_sequence(&series_of(&[(1, 1)]), &series_of(&[(2, 1)])).unwrap();
        assert!(seq.is_empty());
    }

    #[test]
    fn branch_intersections_of_model_pairs() {
        // Transverse smooth branches: a node, I = 1.
        let a = (series_of(&[(1, 1)]), series_of(&[(2, 1)]));
        let b = (series_of(&[(1, 1)]), series_of(&[(1, 1)]));
        assert_eq!(branch_intersection(&a, &b).unwrap(), 1);
        // Tangent smooth branches (y = x², y = −x²+x³): a tacnode, I = 2.
        let a = (series_of(&[(1, 1)]), series_of(&[(2, 1)]));
        let b = (series_of(&[(1, 1)]), series_of(&[(2, -1), (3, 1)]));
        assert_eq!(branch_intersection(&a, &b).unwrap(), 2);
        // Higher tangency (y = x², y = x² + x⁴): I = 4.
        let a = (series_of(&[(1, 1)]), series_of(&[(2, 1)]));
        let b = (series_of(&[(1, 1)]), series_of(&[(2, 1), (4, 1)]));
        assert_eq!(branch_intersection(&a, &b).unwrap(), 4);
        // Smooth branch against a cusp through it (y² = x³ vs y = 0): I = 2·1 + ...
        let a = (series_of(&[(2, 1)]), series_of(&[(3, 1)]));
        let b = (series_of(&[(1, 1)]), series_of(&[]));
        assert_eq!(branch_intersection(&a, &b).unwrap(), 3);
    }

    #[test]
    fn cuspidal_cubic_report() {
        let x = RationalCurve::new(vec![
            MPoly::from_terms(2, vec![(vec![3, 0], rat(1))]),
            MPoly::from_terms(2, vec![(vec![1, 2], rat(1))]),
            MPoly::from_terms(2, vec![(vec![0, 3], rat(1))]),
        ])
        .unwrap();
        let report = plane_singularities(&x).unwrap();
        assert_eq!(report.entries.len(), 1);
        let e = &report.entries[0];
        assert_eq!(e.kind, SingularityKind::OrdinaryCusp);
        assert_eq!(e.point, vec![rat(1), rat(0), rat(0)]);
        assert_eq!(e.parameters, vec![vec![rat(1), rat(0)]]);
        assert_eq!(e.multiplicity_sequences, vec![vec![2]]);
        assert_eq!(e.delta, 1);
        assert_eq!(report.kappa, 1);
        assert_eq!(report.delta_sum, 1);
        assert_eq!(report.genus, Some(0));
        assert!(report.residual.is_none());
    }

    #[test]
    fn nodal_cubic_report_matches_direct_image_comparison() {
        // Affine (t²−1, t³−t): parameters ±1 share the image (1:0:0).
        let x = RationalCurve::new(vec![
            MPoly::from_terms(2, vec![(vec![3, 0], rat(1))]),
            MPoly::from_terms(2, vec![(vec![1, 2], rat(1)), (vec![3, 0], rat(-1))]),
            MPoly::from_terms(2, vec![(vec![0, 3], rat(1)), (vec![2, 1], rat(-1))]),
        ])
        .unwrap();
        // Independent oracle: the images at ±1 really coincide and the
        // tangent directions differ.
        assert_eq!(
            x.evaluate(&[rat(1), rat(1)]).unwrap(),
            x.evaluate(&[rat(1), rat(-1)]).unwrap()
        );
        let report = plane_singularities(&x).unwrap();
        assert_eq!(report.entries.len(), 1);
        let e = &report.entries[0];
        assert_eq!(e.kind, SingularityKind::Node);
        assert_eq!(e.point, vec![rat(1), rat(0), rat(0)]);
        assert_eq!(
            e.parameters,
            vec![vec![rat(1), rat(-1)], vec![rat(1), rat(1)]]
        );
        assert_eq!(e.delta, 1);
        assert_eq!(report.kappa, 0);
        assert_eq!(report.delta_sum, 1);
        assert_eq!(report.genus, Some(0));
    }

    #[test]
    fn projected_quartic_has_ordinary_and_ramphoid_cusp() {
        // Projection of the space quartic (1, t, t²+t³, t⁴) from the
        // intersection (2:−3:0:0) of the ordinary tangent at t = −2 with
        // the stall tangent at t = 0.
        let x = RationalCurve::new(vec![
            MPoly::from_terms(2, vec![(vec![4, 0], rat(3)), (vec![3, 1], rat(2))]),
            MPoly::from_terms(2, vec![(vec![2, 2], rat(2)), (vec![1, 3], rat(2))]),
            MPoly::from_terms(2, vec![(vec![0, 4], rat(2))]),
        ])
        .unwrap();
        let report = plane_singularities(&x).unwrap();
        assert_eq!(report.entries.len(), 2);
        let ramphoid = &report.entries[0];
        assert_eq!(ramphoid.point, vec![rat(1), rat(0), rat(0)]);
        assert_eq!(ramphoid.kind, SingularityKind::RamphoidCusp);
        assert_eq!(ramphoid.parameters, vec![vec![rat(1), rat(0)]]);
        assert_eq!(ramphoid.multiplicity_sequences, vec![vec![2, 2]]);
        assert_eq!(ramphoid.delta, 2);
        let ordinary = &report.entries[1];
        assert_eq!(ordinary.kind, SingularityKind::OrdinaryCusp);
        assert_eq!(ordinary.parameters, vec![vec![rat(1), rat(-2)]]);
        assert_eq!(ordinary.delta, 1);
        assert_eq!(report.kappa, 2);
        assert_eq!(report.delta_sum, 3);
        assert_eq!(report.genus, Some(0));
        assert!(report.residual.is_none());
    }

    #[test]
    fn deep_cusp_is_typed_other_and_genus_withheld() {
        // (z₀⁵, z₀³z₁², z₀z₁⁴ + z₁⁵): a ramphoid cusp at t = 0 and a
        // (3,2)-cusp at infinity; delta 2 + 4 = 6 is complete but the
        // deep cusp is unsupported, so the genus is withheld.
        let x = RationalCurve::new(vec![
            MPoly::from_terms(2, vec![(vec![5, 0], rat(1))]),
            MPoly::from_terms(2, vec![(vec![3, 2], rat(1))]),
            MPoly::from_terms(2, vec![(vec![1, 4], rat(1)), (vec![0, 5], rat(1))]),
        ])
        .unwrap();
        let report = plane_singularities(&x).unwrap();
        assert_eq!(report.entries.len(), 2);
        assert_eq!(report.delta_sum, 6);
        assert_eq!(report.kappa, 1);
        let kinds: Vec<SingularityKind> = report.entries.iter().map(|e| e.kind).collect();
        assert!(kinds.contains(&SingularityKind::RamphoidCusp));
        assert!(kinds.contains(&SingularityKind::Other));
        assert_eq!(report.genus, None);
        assert!(report.residual.is_some());
    }

    #[test]
    fn smooth_conic_reports_nothing() {
        let x = rational_normal_curve(2).unwrap();
        let report = plane_singularities(&x).unwrap();
        assert!(report.entries.is_empty());
        assert_eq!(report.delta_sum, 0);
        assert_eq!(report.genus, Some(0));
    }

    #[test]
    fn non_birational_parametrization_is_rejected() {
        // (1, t², t⁴) traverses the conic twice.
        let x = RationalCurve::new(vec![
            MPoly::from_terms(2, vec![(vec![4, 0], rat(1))]),
            MPoly::from_terms(2, vec![(vec![2, 2], rat(1))]),
            MPoly::from_terms(2, vec![(vec![0, 4], rat(1))]),
        ])
        .unwrap();
        assert!(plane_singularities(&x).is_err());
    }
}
