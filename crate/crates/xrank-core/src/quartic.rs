//! The six shapes of zero-dimensional plane schemes (degree 3 to 5) that
//! can evince rank 7 for a ternary quartic, together with the
//! parameter-count ledger bounding the dimension of the locus of forms
//! they span.
//!
//! Cases I, IIa, IIb and IIIa are unions of curvilinear jets and simple
//! points; their ideals are computed as kernels of jet-evaluation
//! functionals in degrees 2 and 3.  Cases IIIb and IIIc live on a double
//! line and are built directly from their product generators.  Every
//! constructed scheme is validated through the graded-codimension check at
//! degree 4 (the ambient degree), so a successful return certifies the
//! claimed scheme degree.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::apolar::{projectively_equal, ZeroDimScheme};
use crate::error::{Error, Result};
use crate::mpoly::{monomials_of_degree, MPoly};
use crate::qmatrix::QMatrix;
use crate::rat::Rational;
use crate::upoly::UPoly;

/// The six scheme shapes, by increasing degree: I has degree 3; IIa and
/// IIb have degree 4; IIIa, IIIb and IIIc have degree 5.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuarticCase {
    I,
    IIa,
    IIb,
    IIIa,
    IIIb,
    IIIc,
}

impl QuarticCase {
    pub const ALL: [QuarticCase; 6] = [
        QuarticCase::I,
        QuarticCase::IIa,
        QuarticCase::IIb,
        QuarticCase::IIIa,
        QuarticCase::IIIb,
        QuarticCase::IIIc,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            QuarticCase::I => "I",
            QuarticCase::IIa => "IIa",
            QuarticCase::IIb => "IIb",
            QuarticCase::IIIa => "IIIa",
            QuarticCase::IIIb => "IIIb",
            QuarticCase::IIIc => "IIIc",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let lower: String = s.trim().chars().map(|c| c.to_ascii_lowercase()).collect();
        match lower.as_str() {
            "i" => Ok(QuarticCase::I),
            "iia" => Ok(QuarticCase::IIa),
            "iib" => Ok(QuarticCase::IIb),
            "iiia" => Ok(QuarticCase::IIIa),
            "iiib" => Ok(QuarticCase::IIIb),
            "iiic" => Ok(QuarticCase::IIIc),
            _ => Err(Error::invalid(format!(
                "unknown case `{s}` (expected one of I, IIa, IIb, IIIa, IIIb, IIIc)"
            ))),
        }
    }

    /// Scheme degree of the case.
    pub fn degree(&self) -> usize {
        match self {
            QuarticCase::I => 3,
            QuarticCase::IIa | QuarticCase::IIb => 4,
            _ => 5,
        }
    }

    /// Number of support points of the case.
    pub fn support(&self) -> usize {
        match self {
            QuarticCase::I => 1,
            QuarticCase::IIa | QuarticCase::IIIa | QuarticCase::IIIb => 2,
            QuarticCase::IIb | QuarticCase::IIIc => 3,
        }
    }
}

impl core::fmt::Display for QuarticCase {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name())
    }
}

impl core::str::FromStr for QuarticCase {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        QuarticCase::parse(s)
    }
}

/// Free geometric data of each case.  Points are projective coordinate
/// triples; jet directions are tangent vectors (mod the point itself);
/// second-order data w may be zero (a collinear triple point).
#[derive(Clone, Debug)]
pub enum QuarticParams {
    /// Degree-3 curvilinear scheme on a smooth conic at a point of it.
    I {
        conic: MPoly,
        point: Vec<Rational>,
    },
    /// Two 2-jets at distinct points with chosen directions.
    IIa {
        jets: [(Vec<Rational>, Vec<Rational>); 2],
    },
    /// A 2-jet plus two simple points.
    IIb {
        jet: (Vec<Rational>, Vec<Rational>),
        simple: [Vec<Rational>; 2],
    },
    /// A 3-jet (point, direction, second-order term) plus a 2-jet.
    IIIa {
        triple: (Vec<Rational>, Vec<Rational>, Vec<Rational>),
        double: (Vec<Rational>, Vec<Rational>),
    },
    /// Degree-4 point on a conic with contact line, plus a simple point on
    /// that line: the conic is either smooth and tangent to the line at
    /// the contact point, or a pair of distinct lines crossing there.
    IIIb {
        line: MPoly,
        contact: Vec<Rational>,
        simple: Vec<Rational>,
        conic: MPoly,
    },
    /// Two 2-jets and a simple point, all on one line, the jets pointing
    /// off it (the scheme lies on the double line).
    IIIc {
        line: MPoly,
        jet_points: [Vec<Rational>; 2],
        simple: Vec<Rational>,
    },
}

impl QuarticParams {
    /// A rational configuration for each case, with small coordinates.
    /// For IIIb this uses the smooth-conic route; see the tests for the
    /// line-pair route.
    pub fn standard(case: QuarticCase) -> Self {
        let pt = |a: i64, b: i64, c: i64| -> Vec<Rational> {
            vec![
                Rational::from_int(a),
                Rational::from_int(b),
                Rational::from_int(c),
            ]
        };
        match case {
            QuarticCase::I => QuarticParams::I {
                // x z − y², point (1 : 0 : 0).
                conic: MPoly::from_terms(
                    3,
                    vec![
                        (vec![1, 0, 1], Rational::one()),
                        (vec![0, 2, 0], Rational::from_int(-1)),
                    ],
                ),
                point: pt(1, 0, 0),
            },
            QuarticCase::IIa => QuarticParams::IIa {
                jets: [(pt(1, 0, 0), pt(0, 1, 0)), (pt(0, 0, 1), pt(0, 1, 0))],
            },
            QuarticCase::IIb => QuarticParams::IIb {
                jet: (pt(1, 0, 0), pt(0, 1, 0)),
                simple: [pt(0, 0, 1), pt(1, 1, 1)],
            },
            QuarticCase::IIIa => QuarticParams::IIIa {
                triple: (pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 0)),
                double: (pt(0, 0, 1), pt(0, 1, 0)),
            },
            QuarticCase::IIIb => QuarticParams::IIIb {
                // x y − z² is tangent to {y = 0} at (1 : 0 : 0).
                line: MPoly::var(3, 1),
                contact: pt(1, 0, 0),
                simple: pt(1, 0, 1),
                conic: MPoly::from_terms(
                    3,
                    vec![
                        (vec![1, 1, 0], Rational::one()),
                        (vec![0, 0, 2], Rational::from_int(-1)),
                    ],
                ),
            },
            QuarticCase::IIIc => QuarticParams::IIIc {
                line: MPoly::var(3, 1),
                jet_points: [pt(1, 0, 1), pt(1, 0, -1)],
                simple: pt(0, 0, 1),
            },
        }
    }
}

// ---------------------------------------------------------------------------
// jet functionals

/// One punctual piece of a scheme: either a simple point (one evaluation
/// condition) or a jet along a germ p + t·d₁ + t²·d₂ + … (one condition
/// per t-coefficient below `order`).
enum Piece {
    Simple(Vec<Rational>),
    Jet {
        levels: Vec<Vec<Rational>>,
        order: usize,
    },
}

/// Coefficients of t⁰ … t^{order−1} in g(γ(t)) for the germ γ with the
/// given coefficient levels (levels[0] is the support point).
fn germ_coeffs(g: &MPoly, levels: &[Vec<Rational>], order: usize) -> Vec<Rational> {
    let coords: Vec<UPoly> = (0..3)
        .map(|var| UPoly::from_coeffs(levels.iter().map(|lvl| lvl[var].clone()).collect()))
        .collect();
    let mut acc = UPoly::zero();
    for (mono, c) in g.terms() {
        let mut term = UPoly::constant(c.clone());
        for (var, &e) in mono.iter().enumerate() {
            for _ in 0..e {
                term = term.mul(&coords[var]);
            }
        }
        acc = acc.add(&term);
    }
    (0..order).map(|j| acc.coeff(j)).collect()
}

/// Basis of the degree-k part of the ideal of the pieces: kernel of the
/// stacked evaluation functionals.
fn kernel_forms(pieces: &[Piece], k: u32) -> Vec<MPoly> {
    let monos = monomials_of_degree(3, k);
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for piece in pieces {
        match piece {
            Piece::Simple(p) => {
                let germ = vec![p.clone()];
                rows.push(
                    monos
                        .iter()
                        .map(|m| {
                            let g = MPoly::from_terms(3, vec![(m.clone(), Rational::one())]);
                            germ_coeffs(&g, &germ, 1)[0].clone()
                        })
                        .collect(),
                );
            }
            Piece::Jet { levels, order } => {
                let per_mono: Vec<Vec<Rational>> = monos
                    .iter()
                    .map(|m| {
                        let g = MPoly::from_terms(3, vec![(m.clone(), Rational::one())]);
                        germ_coeffs(&g, levels, *order)
                    })
                    .collect();
                for j in 0..*order {
                    rows.push(per_mono.iter().map(|cs| cs[j].clone()).collect());
                }
            }
        }
    }
    let mut mat = QMatrix::new(rows.len(), monos.len());
    for (i, row) in rows.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            *mat.at_mut(i, j) = c.clone();
        }
    }
    let (_, basis) = mat.kernel();
    basis
        .into_iter()
        .map(|v| {
            MPoly::from_terms(
                3,
                monos
                    .iter()
                    .cloned()
                    .zip(v)
                    .filter(|(_, c)| !c.is_zero())
                    .collect(),
            )
        })
        .collect()
}

fn jet_scheme(pieces: &[Piece], degree: usize, support: usize) -> Result<ZeroDimScheme> {
    let mut gens = kernel_forms(pieces, 2);
    gens.extend(kernel_forms(pieces, 3));
    ZeroDimScheme::new(gens, degree, support, 4)
}

// ---------------------------------------------------------------------------
// validation helpers

fn check_point(p: &[Rational], what: &str) -> Result<()> {
    if p.len() != 3 || p.iter().all(|c| c.is_zero()) {
        return Err(Error::invalid(format!(
            "{what} must be a nonzero projective point with three coordinates"
        )));
    }
    Ok(())
}

fn check_direction(p: &[Rational], v: &[Rational], what: &str) -> Result<()> {
    check_point(v, what)?;
    if projectively_equal(p, v) {
        return Err(Error::invalid(format!(
            "{what} must not be proportional to its support point"
        )));
    }
    Ok(())
}

fn check_distinct(p: &[Rational], q: &[Rational], what: &str) -> Result<()> {
    if projectively_equal(p, q) {
        return Err(Error::invalid(format!("{what} must be distinct")));
    }
    Ok(())
}

fn check_form(f: &MPoly, degree: u32, what: &str) -> Result<()> {
    if f.nvars() != 3 || f.total_degree() != Some(degree) {
        return Err(Error::invalid(format!(
            "{what} must be a nonzero ternary form of degree {degree}"
        )));
    }
    for (mono, _) in f.terms() {
        if mono.iter().sum::<u32>() != degree {
            return Err(Error::invalid(format!("{what} must be homogeneous")));
        }
    }
    Ok(())
}

/// Symmetric matrix of a conic (entry (i,j) = half the x_i x_j
/// coefficient off the diagonal).
fn conic_matrix(q: &MPoly) -> QMatrix {
    let mut sym = QMatrix::new(3, 3);
    let half = Rational::new(1, 2);
    for i in 0..3 {
        for j in 0..3 {
            let mut mono = vec![0u32; 3];
            mono[i] += 1;
            mono[j] += 1;
            let c = q.coeff_of(&mono);
            *sym.at_mut(i, j) = if i == j { c } else { &c * &half };
        }
    }
    sym
}

fn gradient(f: &MPoly, p: &[Rational]) -> Vec<Rational> {
    (0..3).map(|i| f.derivative(i).eval(p)).collect()
}

fn line_coeffs(l: &MPoly) -> Vec<Rational> {
    (0..3)
        .map(|i| {
            let mut mono = vec![0u32; 3];
            mono[i] = 1;
            l.coeff_of(&mono)
        })
        .collect()
}

fn cross(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    vec![
        &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
        &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
        &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
    ]
}

fn linear_form(coeffs: &[Rational]) -> MPoly {
    let mut acc = MPoly::zero(3);
    for (i, c) in coeffs.iter().enumerate() {
        acc = acc.add(&MPoly::var(3, i).scale(c));
    }
    acc
}

/// A rational line through `p` not proportional to `avoid`.
fn aux_line_through(p: &[Rational], avoid: &[Rational]) -> Result<MPoly> {
    for i in 0..3 {
        let mut e = vec![Rational::zero(); 3];
        e[i] = Rational::one();
        let c = cross(&e, p);
        if !c.iter().all(|x| x.is_zero()) && !projectively_equal(&c, avoid) {
            return Ok(linear_form(&c));
        }
    }
    Err(Error::invalid("no transverse rational line found"))
}

// ---------------------------------------------------------------------------
// scheme construction

/// Build the scheme of the given case from its parameters.  The returned
/// scheme always passes the degree check at the ambient degree 4;
/// parameter sets that violate the case constraints (point off the conic,
/// degenerate directions, collapsed configurations) are rejected.
pub fn quartic_scheme(case: QuarticCase, params: &QuarticParams) -> Result<ZeroDimScheme> {
    match (case, params) {
        (QuarticCase::I, QuarticParams::I { conic, point }) => {
            check_form(conic, 2, "the conic")?;
            check_point(point, "the point")?;
            let sym = conic_matrix(conic);
            if sym.det().is_zero() {
                return Err(Error::invalid("the conic must be smooth"));
            }
            if !conic.eval(point).is_zero() {
                return Err(Error::invalid("the point must lie on the conic"));
            }
            let n = gradient(conic, point);
            let v = cross(&n, point);
            // Second-order term: continue the germ on the conic, i.e.
            // solve ∇Q(p)·w = −Q(v).
            let mut row = QMatrix::new(1, 3);
            for (j, c) in n.iter().enumerate() {
                *row.at_mut(0, j) = c.clone();
            }
            let w = row
                .solve(&[-&conic.eval(&v)])
                .ok_or_else(|| Error::invalid("the conic is singular at the point"))?;
            let pieces = [Piece::Jet {
                levels: vec![point.clone(), v, w],
                order: 3,
            }];
            jet_scheme(&pieces, 3, 1)
        }
        (QuarticCase::IIa, QuarticParams::IIa { jets }) => {
            let (p, vp) = (&jets[0].0, &jets[0].1);
            let (l, vl) = (&jets[1].0, &jets[1].1);
            check_point(p, "the first jet point")?;
            check_point(l, "the second jet point")?;
            check_distinct(p, l, "the two jet points")?;
            check_direction(p, vp, "the first jet direction")?;
            check_direction(l, vl, "the second jet direction")?;
            let pieces = [
                Piece::Jet {
                    levels: vec![p.clone(), vp.clone()],
                    order: 2,
                },
                Piece::Jet {
                    levels: vec![l.clone(), vl.clone()],
                    order: 2,
                },
            ];
            jet_scheme(&pieces, 4, 2)
        }
        (QuarticCase::IIb, QuarticParams::IIb { jet, simple }) => {
            let (p, v) = (&jet.0, &jet.1);
            check_point(p, "the jet point")?;
            check_direction(p, v, "the jet direction")?;
            check_point(&simple[0], "the first simple point")?;
            check_point(&simple[1], "the second simple point")?;
            check_distinct(p, &simple[0], "the jet point and the first simple point")?;
            check_distinct(p, &simple[1], "the jet point and the second simple point")?;
            check_distinct(&simple[0], &simple[1], "the two simple points")?;
            let pieces = [
                Piece::Jet {
                    levels: vec![p.clone(), v.clone()],
                    order: 2,
                },
                Piece::Simple(simple[0].clone()),
                Piece::Simple(simple[1].clone()),
            ];
            jet_scheme(&pieces, 4, 3)
        }
        (QuarticCase::IIIa, QuarticParams::IIIa { triple, double }) => {
            let (p, v, w) = (&triple.0, &triple.1, &triple.2);
            let (l, u) = (&double.0, &double.1);
            check_point(p, "the triple-jet point")?;
            check_point(l, "the double-jet point")?;
            check_distinct(p, l, "the two jet points")?;
            check_direction(p, v, "the triple-jet direction")?;
            check_direction(l, u, "the double-jet direction")?;
            if w.len() != 3 {
                return Err(Error::invalid(
                    "the triple-jet second-order term must have three coordinates",
                ));
            }
            let pieces = [
                Piece::Jet {
                    levels: vec![p.clone(), v.clone(), w.clone()],
                    order: 3,
                },
                Piece::Jet {
                    levels: vec![l.clone(), u.clone()],
                    order: 2,
                },
            ];
            jet_scheme(&pieces, 5, 2)
        }
        (
            QuarticCase::IIIb,
            QuarticParams::IIIb {
                line,
                contact,
                simple,
                conic,
            },
        ) => {
            check_form(line, 1, "the line")?;
            check_form(conic, 2, "the conic")?;
            check_point(contact, "the contact point")?;
            check_point(simple, "the simple point")?;
            check_distinct(contact, simple, "the two support points")?;
            if !line.eval(contact).is_zero() || !line.eval(simple).is_zero() {
                return Err(Error::invalid("both points must lie on the line"));
            }
            if conic.exact_div(line).is_some() {
                return Err(Error::invalid("the conic must not contain the line"));
            }
            if !conic.eval(contact).is_zero() {
                return Err(Error::invalid("the conic must pass through the contact point"));
            }
            let sym = conic_matrix(conic);
            let lc = line_coeffs(line);
            if sym.det().is_zero() {
                // Line-pair route: the crossing point must be the contact
                // point, and the pair must be two distinct lines.
                if sym.rank() != 2 {
                    return Err(Error::invalid(
                        "a degenerate conic here must be a pair of distinct lines",
                    ));
                }
                let grad = gradient(conic, contact);
                if !grad.iter().all(|c| c.is_zero()) {
                    return Err(Error::invalid(
                        "the line pair must cross at the contact point",
                    ));
                }
            } else {
                // Smooth route: tangency to the line at the contact point.
                let grad = gradient(conic, contact);
                if !projectively_equal(&grad, &lc) {
                    return Err(Error::invalid(
                        "the conic must be tangent to the line at the contact point",
                    ));
                }
            }
            let aux = aux_line_through(simple, &lc)?;
            let gens = vec![line.mul(line), aux.mul(conic), line.mul(conic)];
            ZeroDimScheme::new(gens, 5, 2, 4)
        }
        (
            QuarticCase::IIIc,
            QuarticParams::IIIc {
                line,
                jet_points,
                simple,
            },
        ) => {
            check_form(line, 1, "the line")?;
            let (p, l) = (&jet_points[0], &jet_points[1]);
            check_point(p, "the first jet point")?;
            check_point(l, "the second jet point")?;
            check_point(simple, "the simple point")?;
            check_distinct(p, l, "the two jet points")?;
            check_distinct(p, simple, "the first jet point and the simple point")?;
            check_distinct(l, simple, "the second jet point and the simple point")?;
            for (pt, what) in [(p, "first jet point"), (l, "second jet point"), (simple, "simple point")] {
                if !line.eval(pt).is_zero() {
                    return Err(Error::invalid(format!("the {what} must lie on the line")));
                }
            }
            let lc = line_coeffs(line);
            let a = aux_line_through(p, &lc)?;
            let b = aux_line_through(l, &lc)?;
            let c = aux_line_through(simple, &lc)?;
            let ab = a.mul(&b);
            let gens = vec![line.mul(line), c.mul(&ab), line.mul(&ab)];
            ZeroDimScheme::new(gens, 5, 3, 4)
        }
        _ => Err(Error::invalid("parameter variant does not match the case")),
    }
}

// ---------------------------------------------------------------------------
// dimension ledger

#[derive(Clone, Debug)]
pub struct LedgerRow {
    pub label: String,
    pub summands: Vec<(String, i64)>,
    pub total: i64,
}

impl LedgerRow {
    pub fn new(label: impl Into<String>, summands: Vec<(&str, i64)>, total: i64) -> Result<Self> {
        let summands: Vec<(String, i64)> = summands
            .into_iter()
            .map(|(s, n)| (String::from(s), n))
            .collect();
        let sum: i64 = summands.iter().map(|(_, n)| *n).sum();
        if sum != total {
            return Err(Error::invalid(format!(
                "ledger row total {total} does not match summand sum {sum}"
            )));
        }
        Ok(LedgerRow {
            label: label.into(),
            summands,
            total,
        })
    }
}

/// Labeled parameter counts, one row per case, with the maximum total as
/// the locus-dimension bound.
#[derive(Clone, Debug)]
pub struct DimensionLedger {
    pub rows: Vec<LedgerRow>,
    pub bound: i64,
}

impl DimensionLedger {
    pub fn new(rows: Vec<LedgerRow>) -> Result<Self> {
        let bound = rows
            .iter()
            .map(|r| r.total)
            .max()
            .ok_or_else(|| Error::invalid("ledger needs at least one row"))?;
        Ok(DimensionLedger { rows, bound })
    }

    /// Upper bound for the dimension of the join of the bounded locus with
    /// a variety of the given dimension.
    pub fn join_dim_upper(&self, x_dim: i64) -> i64 {
        self.bound + x_dim + 1
    }
}

/// Parameter counts for the six cases: the count for a case bounds the
/// dimension of the family of pairs (scheme, spanned form).  The bound is
/// 10; joining with the 2-dimensional quartic Veronese surface gives
/// 10 + 2 + 1 = 13, strictly below the 14-dimensional sixth secant.
pub fn quartic_case_table() -> DimensionLedger {
    let rows = vec![
        LedgerRow::new(
            "I",
            vec![
                ("smooth conic", 5),
                ("point on it", 1),
                ("span of the scheme", 2),
            ],
            8,
        ),
        LedgerRow::new(
            "IIa",
            vec![
                ("two points", 4),
                ("a line through each", 2),
                ("span of the scheme", 3),
            ],
            9,
        ),
        LedgerRow::new(
            "IIb",
            vec![
                ("three points", 6),
                ("a line through one of them", 1),
                ("span of the scheme", 3),
            ],
            10,
        ),
        LedgerRow::new(
            "IIIa",
            vec![
                ("two lines", 4),
                ("a point on each", 2),
                ("span of the scheme", 4),
            ],
            10,
        ),
        LedgerRow::new(
            "IIIb (line-pair route; smooth-conic route 5+1+4 gives the same total)",
            vec![
                ("a line", 2),
                ("two points on it", 2),
                ("a line pair crossing at the first", 2),
                ("span of the scheme", 4),
            ],
            10,
        ),
        LedgerRow::new(
            "IIIc",
            vec![
                ("a line", 2),
                ("three points on it", 3),
                ("span of the scheme", 4),
            ],
            9,
        ),
    ];
    let rows: Vec<LedgerRow> = rows
        .into_iter()
        .map(|r| r.expect("static ledger rows are consistent"))
        .collect();
    DimensionLedger::new(rows).expect("static ledger is nonempty")
}
