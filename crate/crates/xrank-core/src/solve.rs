//! Decision procedure for bivariate polynomial systems: does the system
//! have a common complex zero at which a given excluded polynomial does
//! not vanish?
//!
//! Variables are fixed as s (index 0) and t (index 1).  The answer is
//! exact: one-dimensional components of the zero set are compared against
//! the excluded curve by divisibility, and the zero-dimensional part is
//! analysed fibre by fibre over the roots of an eliminant in t — rational
//! roots directly over Q, irrational ones through squarefree modular
//! arithmetic Q[t]/(m) with dynamic splitting (no factorization).  The
//! procedure reports `Undecided` only when that would require an extension
//! of degree beyond the configured limit.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::ext::{run_branches, BranchEvent, KPoly, KResult};
use crate::mpoly::{self, MPoly};
use crate::rat::Rational;
use crate::upoly::UPoly;

/// Verdict of [`system_has_zero_off`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SystemStatus {
    ZeroExists,
    NoZero,
    Undecided,
}

/// Outcome plus a textual certificate.  `ZeroExists` always carries a
/// witness description; `Undecided` always states the resource limit hit.
#[derive(Clone, Debug)]
pub struct SystemWitness {
    pub status: SystemStatus,
    pub description: Option<String>,
}

/// Resource limits for the decision procedure.
#[derive(Clone, Debug)]
pub struct SolveOptions {
    /// Maximum degree of a simple extension Q[t]/(m) the engine will work
    /// in; eliminant cofactors beyond this yield `Undecided`.
    pub extension_degree_limit: usize,
    /// Height bound for the rational-root search on eliminants.
    pub rational_root_height: u64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            extension_degree_limit: 24,
            rational_root_height: 10_000,
        }
    }
}

const VAR_NAMES: [&str; 2] = ["s", "t"];

/// Internal tri-state with witness / reason payloads.
enum Found {
    Yes(String),
    No,
    Maybe(String),
}

impl Found {
    fn or_else(self, other: impl FnOnce() -> Result<Found>) -> Result<Found> {
        match self {
            Found::Yes(w) => Ok(Found::Yes(w)),
            Found::No => other(),
            Found::Maybe(r) => match other()? {
                Found::Yes(w) => Ok(Found::Yes(w)),
                _ => Ok(Found::Maybe(r)),
            },
        }
    }
}

/// Does the system have a common complex zero (affine, in (s,t)) at which
/// `excluded` is nonzero?  Exact and deterministic; see module docs.
pub fn system_has_zero_off(polys: &[MPoly], excluded: &MPoly) -> Result<SystemWitness> {
    system_has_zero_off_with(polys, excluded, &SolveOptions::default())
}

pub fn system_has_zero_off_with(
    polys: &[MPoly],
    excluded: &MPoly,
    opts: &SolveOptions,
) -> Result<SystemWitness> {
    validate_system(polys, excluded)?;
    let found = affine_zero_off(polys, excluded, opts, 0)?;
    Ok(witness_from(found))
}

/// A bivariate system considered projectively in each variable: every
/// polynomial carries its intended bihomogeneous bidegree, and zeros on
/// the strata s = ∞, t = ∞ and (∞,∞) count as well.
pub fn system_has_zero_off_projective(
    polys: &[(MPoly, (u32, u32))],
    excluded: &(MPoly, (u32, u32)),
    opts: &SolveOptions,
) -> Result<SystemWitness> {
    let plain: Vec<MPoly> = polys.iter().map(|(p, _)| p.clone()).collect();
    validate_system(&plain, &excluded.0)?;
    for (p, (a, b)) in polys.iter().chain(core::iter::once(excluded)) {
        if p.degree_in(0).unwrap_or(0) > *a || p.degree_in(1).unwrap_or(0) > *b {
            return Err(Error::invalid(
                "declared bidegree smaller than actual degree",
            ));
        }
    }

    let affine = affine_zero_off(&plain, &excluded.0, opts, 0)?;
    let found = affine
        .or_else(|| Ok(stratum_at_infinity(polys, excluded, 1)))?
        .or_else(|| Ok(stratum_at_infinity(polys, excluded, 0)))?
        .or_else(|| Ok(corner_at_infinity(polys, excluded)))?;
    Ok(witness_from(found))
}

fn witness_from(found: Found) -> SystemWitness {
    match found {
        Found::Yes(w) => SystemWitness {
            status: SystemStatus::ZeroExists,
            description: Some(w),
        },
        Found::No => SystemWitness {
            status: SystemStatus::NoZero,
            description: Some(String::from(
                "every common zero lies on the excluded locus (or the zero set is empty)",
            )),
        },
        Found::Maybe(r) => SystemWitness {
            status: SystemStatus::Undecided,
            description: Some(r),
        },
    }
}

fn validate_system(polys: &[MPoly], excluded: &MPoly) -> Result<()> {
    if polys.is_empty() {
        return Err(Error::invalid("empty polynomial system"));
    }
    if excluded.is_zero() {
        return Err(Error::invalid("excluded polynomial must be nonzero"));
    }
    for p in polys.iter().chain(core::iter::once(excluded)) {
        if p.nvars() != 2 {
            return Err(Error::invalid("system polynomials must live in (s, t)"));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Bivariate gcd / squarefree helpers (over Q, up to nonzero scalars).
// ---------------------------------------------------------------------------

fn biv_gcd(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    let za = mpoly::mpoly_to_zp2(a, 0, 1);
    let zb = mpoly::mpoly_to_zp2(b, 0, 1);
    mpoly::zp2_to_mpoly(&za.gcd_poly(&zb), 2, 0, 1)
}

fn biv_gcd_all(ps: &[MPoly]) -> MPoly {
    let mut g = MPoly::zero(2);
    for p in ps {
        g = biv_gcd(&g, p);
        if g.total_degree() == Some(0) {
            break;
        }
    }
    g
}

/// Squarefree part of a bivariate polynomial, up to a nonzero scalar.
fn biv_squarefree(p: &MPoly) -> MPoly {
    let z = mpoly::mpoly_to_zp2(p, 0, 1);
    let cont = z.content(); // polynomial in t alone
    let prim = z.primitive_part(); // no factors purely in t
    let cont_sf = cont.squarefree_part();
    let prim_sf = prim.squarefree_part();
    let combined = prim_sf.mul(&crate::dpoly::DPoly::constant(cont_sf));
    mpoly::zp2_to_mpoly(&combined, 2, 0, 1)
}

fn is_const(p: &MPoly) -> bool {
    p.total_degree() == Some(0)
}

fn render2(p: &MPoly) -> String {
    p.render(&VAR_NAMES)
}

fn render1(p: &UPoly, var: usize) -> String {
    MPoly::from_upoly(p, 2, var).render(&VAR_NAMES)
}

// ---------------------------------------------------------------------------
// Univariate analysis on a line (used for fibres and infinity strata).
// ---------------------------------------------------------------------------

enum UniOff {
    /// No common zero on the line.
    Empty,
    /// Every point of the line is a common zero.
    WholeLine,
    /// Common zeros exist but all lie on the excluded locus.
    AllExcluded,
    /// Nonconstant polynomial whose roots are exactly the common zeros
    /// off the excluded locus.
    Off(UPoly),
}

fn uni_common_off(polys: &[UPoly], excluded: &UPoly) -> UniOff {
    let nz: Vec<&UPoly> = polys.iter().filter(|p| !p.is_zero()).collect();
    if nz.is_empty() {
        return UniOff::WholeLine;
    }
    let mut g = nz[0].clone();
    for p in &nz[1..] {
        g = g.gcd(p);
        if g.deg_or_0() == 0 {
            break;
        }
    }
    if g.deg_or_0() == 0 {
        return UniOff::Empty;
    }
    if excluded.is_zero() {
        return UniOff::AllExcluded;
    }
    let gsf = g.squarefree_part();
    let com = gsf.gcd(excluded);
    let off = if com.deg_or_0() == 0 {
        gsf
    } else {
        gsf.divrem(&com).0.monic()
    };
    if off.deg_or_0() >= 1 {
        UniOff::Off(off)
    } else {
        UniOff::AllExcluded
    }
}

/// A rational point where the nonzero univariate `e` does not vanish.
fn rational_point_off(e: &UPoly) -> Rational {
    let mut k: i64 = 0;
    loop {
        let x = Rational::from_int(k);
        if !e.eval(&x).is_zero() {
            return x;
        }
        k = if k >= 0 { -(k + 1) } else { -k };
    }
}

/// A rational point where the nonzero bivariate `e` does not vanish.
fn plane_point_off(e: &MPoly) -> (Rational, Rational) {
    let d = e.total_degree().unwrap_or(0) as i64;
    for a in 0..=d {
        for b in 0..=d {
            let (x, y) = (Rational::from_int(a), Rational::from_int(b));
            if !e.eval(&[x.clone(), y.clone()]).is_zero() {
                return (x, y);
            }
        }
    }
    unreachable!("nonzero polynomial vanished on a full grid")
}

// ---------------------------------------------------------------------------
// Affine pipeline.
// ---------------------------------------------------------------------------

fn affine_zero_off(
    polys: &[MPoly],
    excluded: &MPoly,
    opts: &SolveOptions,
    depth: usize,
) -> Result<Found> {
    if depth > 64 {
        return Err(Error::invalid("gcd splitting recursion too deep"));
    }
    let nonzero: Vec<MPoly> = polys.iter().filter(|p| !p.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        let (a, b) = plane_point_off(excluded);
        return Ok(Found::Yes(format!(
            "every point is a common zero; witness (s, t) = ({}, {})",
            a.to_canonical_string(),
            b.to_canonical_string()
        )));
    }

    // One-dimensional part: components of the common gcd not inside the
    // excluded curve give zeros off it immediately.
    let f = biv_gcd_all(&nonzero);
    let mut finite_polys = nonzero;
    if !is_const(&f) {
        let fsf = biv_squarefree(&f);
        let shared = biv_gcd(&fsf, excluded);
        let escape = if is_const(&shared) {
            fsf.clone()
        } else {
            fsf.exact_div(&shared)
                .ok_or_else(|| Error::invalid("internal: gcd does not divide squarefree part"))?
        };
        if !is_const(&escape) {
            return Ok(Found::Yes(format!(
                "one-dimensional component {} of the zero set is not contained in the excluded locus",
                render2(&escape)
            )));
        }
        finite_polys = finite_polys
            .iter()
            .map(|p| {
                p.exact_div(&f)
                    .ok_or_else(|| Error::invalid("internal: common gcd fails to divide"))
            })
            .collect::<Result<Vec<_>>>()?;
    }
    finite_zero_off(&finite_polys, excluded, opts, depth)
}

/// The zero-dimensional stage: `polys` have constant overall gcd.
fn finite_zero_off(
    polys: &[MPoly],
    excluded: &MPoly,
    opts: &SolveOptions,
    depth: usize,
) -> Result<Found> {
    // A nonzero constant in the system forces an empty zero set.
    if polys.iter().any(is_const) {
        return Ok(Found::No);
    }

    // Eliminant candidates: polynomials in t alone, plus resultants of
    // s-coprime pairs (valid since Res_s lies in the ideal of the pair).
    let mut pure_t: Vec<UPoly> = Vec::new();
    let mut in_s: Vec<&MPoly> = Vec::new();
    for p in polys {
        if p.degree_in(0).unwrap_or(0) == 0 {
            pure_t.push(p.to_upoly(1)?);
        } else {
            in_s.push(p);
        }
    }
    let mut candidates: Vec<UPoly> = pure_t;
    let mut shared_pair: Option<(usize, usize, MPoly)> = None;
    for i in 0..in_s.len() {
        for j in i + 1..in_s.len() {
            let g = biv_gcd(in_s[i], in_s[j]);
            if is_const(&g) {
                let r = mpoly::resultant(in_s[i], in_s[j], 0)?;
                if !r.is_zero() {
                    candidates.push(r.to_upoly(1)?);
                }
            } else if shared_pair.is_none() {
                shared_pair = Some((i, j, g));
            }
        }
    }

    if candidates.is_empty() {
        // Every s-positive pair shares a curve; split Z(p_i, p_j) into the
        // shared curve plus the coprime residual and recurse on both.
        let Some((i, j, g)) = shared_pair else {
            return Err(Error::invalid("internal: no eliminant and no shared pair"));
        };
        let qi = in_s[i]
            .exact_div(&g)
            .ok_or_else(|| Error::invalid("internal: pair gcd fails to divide"))?;
        let qj = in_s[j]
            .exact_div(&g)
            .ok_or_else(|| Error::invalid("internal: pair gcd fails to divide"))?;
        let rest: Vec<MPoly> = (0..in_s.len())
            .filter(|k| *k != i && *k != j)
            .map(|k| in_s[k].clone())
            .collect();
        let mut branch_a = vec![g];
        branch_a.extend(rest.iter().cloned());
        let mut branch_b = vec![qi, qj];
        branch_b.extend(rest);
        let a = affine_zero_off(&branch_a, excluded, opts, depth + 1)?;
        return a.or_else(|| affine_zero_off(&branch_b, excluded, opts, depth + 1));
    }

    let mut elim = candidates[0].clone();
    for c in &candidates[1..] {
        elim = elim.gcd(c);
        if elim.deg_or_0() == 0 {
            break;
        }
    }
    if elim.deg_or_0() == 0 {
        return Ok(Found::No);
    }

    // Rational fibres first, in sorted root order.
    let elim_sf = elim.squarefree_part();
    let (roots, cofactor) = elim_sf.strip_small_rational_roots(opts.rational_root_height);
    for theta in &roots {
        let slices: Vec<UPoly> = polys
            .iter()
            .map(|p| p.subst(1, theta).to_upoly(0))
            .collect::<Result<Vec<_>>>()?;
        let e_slice = excluded.subst(1, theta).to_upoly(0)?;
        match uni_common_off(&slices, &e_slice) {
            UniOff::Empty | UniOff::AllExcluded => {}
            UniOff::WholeLine => {
                if e_slice.is_zero() {
                    continue; // the excluded curve contains this whole fibre
                }
                let s0 = rational_point_off(&e_slice);
                verify_affine_point(polys, excluded, &s0, theta)?;
                return Ok(Found::Yes(format!(
                    "the whole line t = {} lies in the zero set; witness (s, t) = ({}, {})",
                    theta.to_canonical_string(),
                    s0.to_canonical_string(),
                    theta.to_canonical_string()
                )));
            }
            UniOff::Off(off) => {
                let rs = off.small_rational_roots(opts.rational_root_height);
                if let Some(s0) = rs.first() {
                    verify_affine_point(polys, excluded, s0, theta)?;
                    return Ok(Found::Yes(format!(
                        "witness (s, t) = ({}, {})",
                        s0.to_canonical_string(),
                        theta.to_canonical_string()
                    )));
                }
                return Ok(Found::Yes(format!(
                    "witness: t = {}, s any root of {}",
                    theta.to_canonical_string(),
                    render1(&off, 0)
                )));
            }
        }
    }

    // Irrational fibres via Q[t]/(m) with dynamic splitting.
    if cofactor.deg_or_0() >= 1 {
        if cofactor.deg_or_0() > opts.extension_degree_limit {
            return Ok(Found::Maybe(format!(
                "extension degree limit {} exceeded: eliminant cofactor {} has degree {}",
                opts.extension_degree_limit,
                render1(&cofactor, 1),
                cofactor.deg_or_0()
            )));
        }
        let branch_results = run_branches(&cofactor, &mut |m: &UPoly| {
            extension_fibre(polys, excluded, m)
        })?;
        for (m, res) in &branch_results {
            if let Some(off) = res {
                if off.is_zero() {
                    return Ok(Found::Yes(format!(
                        "whole fibre lines over roots of {} lie in the zero set",
                        render1(m, 1)
                    )));
                }
                return Ok(Found::Yes(format!(
                    "witness: t a root of {}, s a root of {}",
                    render1(m, 1),
                    render2(&off.to_mpoly(2, 0, 1))
                )));
            }
        }
    }
    Ok(Found::No)
}

/// Analyse the fibres over the roots of the branch modulus m(t): reduce the
/// system to polynomials in s over Q[t]/(m), take their gcd, strip repeated
/// and excluded roots, and report what is left (None if nothing survives).
fn extension_fibre(polys: &[MPoly], excluded: &MPoly, m: &UPoly) -> KResult<Option<KPoly>> {
    let e_k = kpoly_from_mpoly(excluded, m)?;
    if e_k.is_zero() {
        // The excluded curve contains every fibre over roots of m.
        return Ok(None);
    }
    let mut h: Option<KPoly> = None;
    let mut any_nonzero = false;
    for p in polys {
        let pk = kpoly_from_mpoly(p, m)?;
        if pk.is_zero() {
            continue;
        }
        any_nonzero = true;
        h = Some(match h {
            None => pk,
            Some(prev) => prev.gcd(&pk, m)?,
        });
        if let Some(ref cur) = h {
            if cur.deg_or_0() == 0 {
                return Ok(None);
            }
        }
    }
    if !any_nonzero {
        // Whole fibre lines in the zero set: points off the excluded curve
        // certainly exist since e is nonzero on the fibre.
        return Ok(Some(KPoly::zero()));
    }
    let h = h.expect("some nonzero reduction");
    let hsf = h.squarefree_part(m)?;
    let com = hsf.gcd(&e_k, m)?;
    let off = if com.deg_or_0() == 0 {
        hsf
    } else {
        hsf.exact_div(&com, m)?.monic(m)?
    };
    if off.degree().map(|d| d >= 1).unwrap_or(false) {
        // Back-substitution check: off must divide every reduced system
        // polynomial, so every root of (m, off) really solves the system.
        for p in polys {
            let pk = kpoly_from_mpoly(p, m)?;
            if pk.is_zero() {
                continue;
            }
            let r = pk.rem(&off, m)?;
            if !r.is_zero() {
                return Err(BranchEvent::Fail(Error::invalid(
                    "internal: back-substitution of extension witness failed",
                )));
            }
        }
        Ok(Some(off))
    } else {
        Ok(None)
    }
}

/// View p(s,t) as a polynomial in s with coefficients in Q[t]/(m).
fn kpoly_from_mpoly(p: &MPoly, m: &UPoly) -> KResult<KPoly> {
    let coeffs = p
        .coeffs_wrt(0)
        .iter()
        .map(|c| c.to_upoly(1))
        .collect::<Result<Vec<_>>>()
        .map_err(BranchEvent::Fail)?;
    KPoly::new(coeffs, m)
}

fn verify_affine_point(
    polys: &[MPoly],
    excluded: &MPoly,
    s0: &Rational,
    t0: &Rational,
) -> Result<()> {
    let pt = [s0.clone(), t0.clone()];
    for p in polys {
        if !p.eval(&pt).is_zero() {
            return Err(Error::invalid("internal: witness fails back-substitution"));
        }
    }
    if excluded.eval(&pt).is_zero() {
        return Err(Error::invalid("internal: witness lies on excluded locus"));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Infinity strata for the projective variant.
// ---------------------------------------------------------------------------

/// Top-slice of p at var = ∞: the coefficient of var^bidegree, a univariate
/// polynomial in the other variable (zero when the actual degree is lower).
fn infinity_slice(p: &MPoly, bidegree: (u32, u32), var: usize) -> UPoly {
    let (top, other) = if var == 1 {
        (bidegree.1, 0)
    } else {
        (bidegree.0, 1)
    };
    let mut coeffs: Vec<(usize, Rational)> = Vec::new();
    for (mono, c) in p.terms() {
        if mono[var] == top {
            coeffs.push((mono[other] as usize, c.clone()));
        }
    }
    let n = coeffs.iter().map(|(k, _)| k + 1).max().unwrap_or(0);
    let mut v = vec![Rational::zero(); n];
    for (k, c) in coeffs {
        v[k] = c;
    }
    UPoly::from_coeffs(v)
}

fn stratum_at_infinity(
    polys: &[(MPoly, (u32, u32))],
    excluded: &(MPoly, (u32, u32)),
    var: usize,
) -> Found {
    let at = |x: &Rational| -> String {
        let (s_str, t_str);
        if var == 1 {
            s_str = x.to_canonical_string();
            t_str = String::from("infinity");
        } else {
            s_str = String::from("infinity");
            t_str = x.to_canonical_string();
        }
        format!("witness (s, t) = ({}, {})", s_str, t_str)
    };
    let e_slice = infinity_slice(&excluded.0, excluded.1, var);
    if e_slice.is_zero() {
        // The excluded locus contains this whole stratum.
        return Found::No;
    }
    let slices: Vec<UPoly> = polys
        .iter()
        .map(|(p, bd)| infinity_slice(p, *bd, var))
        .collect();
    match uni_common_off(&slices, &e_slice) {
        UniOff::Empty | UniOff::AllExcluded => Found::No,
        UniOff::WholeLine => {
            let x = rational_point_off(&e_slice);
            Found::Yes(format!(
                "the whole line at infinity lies in the zero set; {}",
                at(&x)
            ))
        }
        UniOff::Off(off) => {
            let rs = off.small_rational_roots(10_000);
            match rs.first() {
                Some(x) => Found::Yes(at(x)),
                None => Found::Yes(format!(
                    "witness on the {} = infinity stratum: root of {}",
                    VAR_NAMES[var],
                    render1(&off, 1 - var)
                )),
            }
        }
    }
}

fn corner_at_infinity(polys: &[(MPoly, (u32, u32))], excluded: &(MPoly, (u32, u32))) -> Found {
    let corner = |p: &MPoly, bd: (u32, u32)| p.coeff_of(&[bd.0, bd.1]);
    let in_zero_set = polys.iter().all(|(p, bd)| corner(p, *bd).is_zero());
    if in_zero_set && !corner(&excluded.0, excluded.1).is_zero() {
        Found::Yes(String::from("witness (s, t) = (infinity, infinity)"))
    } else {
        Found::No
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SeededRng;

    fn mp(src: &[(i64, (u32, u32))]) -> MPoly {
        MPoly::from_terms(
            2,
            src.iter()
                .map(|(c, (a, b))| (vec![*a, *b], Rational::from_int(*c)))
                .collect(),
        )
    }

    fn diag() -> MPoly {
        // s − t
        mp(&[(1, (1, 0)), (-1, (0, 1))])
    }

    #[test]
    fn system_forcing_excluded_locus_has_no_zero_off() {
        let w = system_has_zero_off(&[diag()], &diag()).unwrap();
        assert_eq!(w.status, SystemStatus::NoZero);
    }

    #[test]
    fn linear_system_finds_rational_witness() {
        // {s+t, s−t+2} off s−t: zero at (−1, 1).
        let p1 = mp(&[(1, (1, 0)), (1, (0, 1))]);
        let p2 = mp(&[(1, (1, 0)), (-1, (0, 1)), (2, (0, 0))]);
        let w = system_has_zero_off(&[p1, p2], &diag()).unwrap();
        assert_eq!(w.status, SystemStatus::ZeroExists);
        let d = w.description.unwrap();
        assert!(d.contains("(-1, 1)"), "unexpected witness: {}", d);
    }

    #[test]
    fn curve_component_escapes_excluded_axes() {
        // {s²+t²} off s·t: the conic is not contained in the axes.
        let p = mp(&[(1, (2, 0)), (1, (0, 2))]);
        let e = mp(&[(1, (1, 1))]);
        let w = system_has_zero_off(&[p], &e).unwrap();
        assert_eq!(w.status, SystemStatus::ZeroExists);
        assert!(w.description.unwrap().contains("one-dimensional"));
    }

    #[test]
    fn irrational_zeros_on_diagonal_are_recognized() {
        // {s²−2, s−t}: zeros (±√2, ±√2) lie on the diagonal.
        let p1 = mp(&[(1, (2, 0)), (-2, (0, 0))]);
        let w = system_has_zero_off(&[p1.clone(), diag()], &diag()).unwrap();
        assert_eq!(w.status, SystemStatus::NoZero);

        // {s²−2, s+t}: zeros (±√2, ∓√2) are off the diagonal.
        let p2 = mp(&[(1, (1, 0)), (1, (0, 1))]);
        let w2 = system_has_zero_off(&[p1, p2], &diag()).unwrap();
        assert_eq!(w2.status, SystemStatus::ZeroExists);
        let d = w2.description.unwrap();
        assert!(d.contains("root of"), "expected symbolic witness: {}", d);
    }

    #[test]
    fn excluded_curve_swallows_line_component() {
        // {t−1} off (t−1)(s+t): the only component lies inside the excluded curve.
        let p = mp(&[(1, (0, 1)), (-1, (0, 0))]);
        let e = mp(&[(1, (1, 1)), (1, (0, 2)), (-1, (1, 0)), (-1, (0, 1))]);
        let w = system_has_zero_off(&[p.clone()], &e).unwrap();
        assert_eq!(w.status, SystemStatus::NoZero);

        // Against the diagonal the same line escapes.
        let w2 = system_has_zero_off(&[p], &diag()).unwrap();
        assert_eq!(w2.status, SystemStatus::ZeroExists);
    }

    #[test]
    fn pairwise_shared_factors_are_split() {
        // (s−1)(t−2), (s−1)(s+t), (t−2)(s+t): every pair shares a line but
        // the common zero set is the three points (1,2), (1,−1), (−2,2).
        let l1 = mp(&[(1, (1, 0)), (-1, (0, 0))]); // s−1
        let l2 = mp(&[(1, (0, 1)), (-2, (0, 0))]); // t−2
        let l3 = mp(&[(1, (1, 0)), (1, (0, 1))]); // s+t
        let polys = [l1.mul(&l2), l1.mul(&l3), l2.mul(&l3)];
        let w = system_has_zero_off(&polys, &diag()).unwrap();
        assert_eq!(w.status, SystemStatus::ZeroExists);

        // Excluding all three points leaves nothing.
        let e = l1.mul(&l2).mul(&l3).neg();
        let w2 = system_has_zero_off(&polys, &e).unwrap();
        assert_eq!(w2.status, SystemStatus::NoZero);
    }

    #[test]
    fn extension_limit_reports_undecided_and_can_be_raised() {
        // {s²⁶−2, s−t}: eliminant cofactor t²⁶−2 exceeds the default cap.
        let mut terms = vec![(-2i64, (0u32, 0u32)), (1, (26, 0))];
        terms.sort();
        let p1 = mp(&terms);
        let w = system_has_zero_off(&[p1.clone(), diag()], &diag()).unwrap();
        assert_eq!(w.status, SystemStatus::Undecided);
        assert!(w.description.unwrap().contains("limit"));

        let opts = SolveOptions {
            extension_degree_limit: 30,
            ..SolveOptions::default()
        };
        let w2 = system_has_zero_off_with(&[p1, diag()], &diag(), &opts).unwrap();
        assert_eq!(w2.status, SystemStatus::NoZero);
    }

    #[test]
    fn projective_strata_and_corner() {
        // {s, st−1} with bidegrees (1,1): the only common projective zero is
        // (s, t) = (0, ∞), which is off the diagonal.
        let p1 = mp(&[(1, (1, 0))]);
        let p2 = mp(&[(1, (1, 1)), (-1, (0, 0))]);
        let sys = [(p1, (1u32, 1u32)), (p2, (1u32, 1u32))];
        let excl = (diag(), (1u32, 1u32));
        let w = system_has_zero_off_projective(&sys, &excl, &SolveOptions::default()).unwrap();
        assert_eq!(w.status, SystemStatus::ZeroExists);
        assert!(w.description.unwrap().contains("(0, infinity)"));

        // {s−t} against the diagonal: the corner (∞,∞) lies in the zero set
        // but also on the closure of the diagonal, so nothing is off it.
        let sys2 = [(diag(), (1u32, 1u32))];
        let w2 = system_has_zero_off_projective(&sys2, &excl, &SolveOptions::default()).unwrap();
        assert_eq!(w2.status, SystemStatus::NoZero);

        // The pair (1 with bidegree (1,0), 1 with bidegree (0,1)) is the
        // bihomogeneous pair (S₀, T₀), whose only zero is the corner (∞,∞);
        // the hyperbola st−1 misses that corner.
        let sys3 = [
            (MPoly::one(2), (1u32, 0u32)),
            (MPoly::one(2), (0u32, 1u32)),
        ];
        let excl2 = (mp(&[(1, (1, 1)), (-1, (0, 0))]), (1u32, 1u32));
        let w3 = system_has_zero_off_projective(&sys3, &excl2, &SolveOptions::default()).unwrap();
        assert_eq!(w3.status, SystemStatus::ZeroExists);
        assert!(w3.description.unwrap().contains("(infinity, infinity)"));
        let w4 = system_has_zero_off_projective(&sys3, &excl, &SolveOptions::default()).unwrap();
        assert_eq!(w4.status, SystemStatus::NoZero);
    }

    // Oracle test: systems built from products of rational lines, checked
    // against direct enumeration of all candidate intersection points.
    #[derive(Clone, Copy, PartialEq, Debug)]
    enum Line {
        S(i64), // s = a
        T(i64), // t = b
        D(i64), // s + t = c
    }

    impl Line {
        fn poly(&self) -> MPoly {
            match self {
                Line::S(a) => MPoly::from_terms(
                    2,
                    vec![
                        (vec![1, 0], Rational::one()),
                        (vec![0, 0], Rational::from_int(-a)),
                    ],
                ),
                Line::T(b) => MPoly::from_terms(
                    2,
                    vec![
                        (vec![0, 1], Rational::one()),
                        (vec![0, 0], Rational::from_int(-b)),
                    ],
                ),
                Line::D(c) => MPoly::from_terms(
                    2,
                    vec![
                        (vec![1, 0], Rational::one()),
                        (vec![0, 1], Rational::one()),
                        (vec![0, 0], Rational::from_int(-c)),
                    ],
                ),
            }
        }

        fn contains(&self, p: (i64, i64)) -> bool {
            match self {
                Line::S(a) => p.0 == *a,
                Line::T(b) => p.1 == *b,
                Line::D(c) => p.0 + p.1 == *c,
            }
        }

        fn meet(&self, other: &Line) -> Option<Vec<(i64, i64)>> {
            // None = the lines coincide; Some(points) otherwise.
            if self == other {
                return None;
            }
            let pt = match (self, other) {
                (Line::S(a), Line::T(b)) | (Line::T(b), Line::S(a)) => Some((*a, *b)),
                (Line::S(a), Line::D(c)) | (Line::D(c), Line::S(a)) => Some((*a, c - a)),
                (Line::T(b), Line::D(c)) | (Line::D(c), Line::T(b)) => Some((c - b, *b)),
                _ => None, // parallel and distinct
            };
            Some(pt.into_iter().collect())
        }
    }

    fn random_line(rng: &mut SeededRng) -> Line {
        let v = (rng.below(7) as i64) - 3;
        match rng.below(3) {
            0 => Line::S(v),
            1 => Line::T(v),
            _ => Line::D(v),
        }
    }

    #[test]
    fn agrees_with_enumeration_on_split_line_systems() {
        let mut rng = SeededRng::new(0x5eed_0001);
        for trial in 0..100 {
            let npolys = 2 + rng.below(2) as usize;
            let mut factor_sets: Vec<Vec<Line>> = Vec::new();
            for _ in 0..npolys {
                let k = 1 + rng.below(3) as usize;
                factor_sets.push((0..k).map(|_| random_line(&mut rng)).collect());
            }
            let e_lines: Vec<Line> = (0..1 + rng.below(2) as usize)
                .map(|_| random_line(&mut rng))
                .collect();

            let polys: Vec<MPoly> = factor_sets
                .iter()
                .map(|ls| {
                    ls.iter()
                        .fold(MPoly::one(2), |acc, l| acc.mul(&l.poly()))
                })
                .collect();
            let excluded = e_lines
                .iter()
                .fold(MPoly::one(2), |acc, l| acc.mul(&l.poly()));

            // Oracle: a common line (in every poly) not among the excluded
            // lines gives infinitely many zeros off; otherwise enumerate all
            // intersection points of one line per polynomial.
            let mut oracle = factor_sets
                .iter()
                .fold(factor_sets[0].clone(), |acc, ls| {
                    acc.into_iter().filter(|l| ls.contains(l)).collect()
                })
                .into_iter()
                .any(|shared| !e_lines.contains(&shared));
            if !oracle {
                let mut choice = vec![0usize; npolys];
                'outer: loop {
                    let lines: Vec<Line> = choice
                        .iter()
                        .enumerate()
                        .map(|(i, &c)| factor_sets[i][c])
                        .collect();
                    // Intersect the chosen lines: collect candidate points on
                    // every non-coincident pair, then keep those on all lines.
                    let mut candidates: Vec<(i64, i64)> = Vec::new();
                    for i in 0..lines.len() {
                        for j in i + 1..lines.len() {
                            if let Some(pts) = lines[i].meet(&lines[j]) {
                                candidates.extend(pts);
                            }
                        }
                    }
                    for p in candidates {
                        if lines.iter().all(|l| l.contains(p))
                            && !e_lines.iter().any(|l| l.contains(p))
                        {
                            oracle = true;
                            break 'outer;
                        }
                    }
                    // Advance the multi-index.
                    let mut i = 0;
                    loop {
                        if i == npolys {
                            break 'outer;
                        }
                        choice[i] += 1;
                        if choice[i] < factor_sets[i].len() {
                            break;
                        }
                        choice[i] = 0;
                        i += 1;
                    }
                }
                // All polynomials sharing a single line (coincident tuple)
                // is covered by the shared-line check above; tuples of fewer
                // than two distinct lines only arise there.
            }

            let w = system_has_zero_off(&polys, &excluded).unwrap();
            assert_ne!(
                w.status,
                SystemStatus::Undecided,
                "trial {} unexpectedly undecided",
                trial
            );
            let got = w.status == SystemStatus::ZeroExists;
            assert_eq!(
                got, oracle,
                "trial {}: engine {:?} vs oracle {} (polys {:?}, excluded {:?})",
                trial, w.status, oracle, factor_sets, e_lines
            );
        }
    }
}
