//! Per-subcommand logic. Every command returns the JSON value for standard
//! output plus the exit code derived from the outcome status: 0 verified or
//! computed, 1 refuted. Invalid input (2) and resource limits (3) travel as
//! errors and are mapped by `main`.

use std::fs;
use std::path::Path;

use serde_json::{Map, Value};
use xrank_core::apolar::{RankCertificate, SymForm};
use xrank_core::binary::{sylvester_rank, BinaryForm};
use xrank_core::cubic::{cubic_rank, CubicRankOutcome};
use xrank_core::curve::curve_point_rank;
use xrank_core::error::{Error, Result};
use xrank_core::loci::{
    finiteness_routes, normal_form_verify, projected_quartic_verify, scroll_suite_verify,
    Evidence, ScrollClass, VerificationReport, VerifyStatus,
};
use xrank_core::quartic::quartic_case_table;
use xrank_core::rat::Rational;

use crate::codec;

const VERSION: &str = env!("CARGO_PKG_VERSION");

fn obj(entries: Vec<(&str, Value)>) -> Value {
    let mut map = Map::new();
    for (k, v) in entries {
        map.insert(String::from(k), v);
    }
    Value::Object(map)
}

/// Read and parse a JSON file; parse failures name the byte offset.
fn read_json(path: &Path) -> Result<Value> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::invalid(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| {
        let offset = byte_offset(&text, e.line(), e.column());
        Error::invalid(format!(
            "malformed JSON in {} at byte {offset}: {e}",
            path.display()
        ))
    })
}

/// Translate serde_json's 1-based line/column into a byte offset.
fn byte_offset(text: &str, line: usize, column: usize) -> usize {
    let mut start = 0usize;
    for (n, l) in text.split_inclusive('\n').enumerate() {
        if n + 1 == line {
            break;
        }
        start += l.len();
    }
    start + column.saturating_sub(1)
}

// ---------------------------------------------------------------------------
// rank commands

pub fn rank_binary(form: &Path) -> Result<(Value, u8)> {
    let p = codec::decode_poly(&read_json(form)?)?;
    if p.nvars() != 2 {
        return Err(Error::invalid("rank-binary expects a binary form (vars = 2)"));
    }
    let f = BinaryForm::from_mpoly(&p)?;
    let (rank, _certificate) = sylvester_rank(&f)?;
    Ok((obj(vec![("rank", Value::from(rank as u64))]), 0))
}

fn encode_certificate(cert: &RankCertificate) -> Value {
    match cert {
        RankCertificate::Decomposition {
            points,
            coefficients,
        } => obj(vec![
            ("kind", Value::from(cert.kind())),
            (
                "points",
                Value::Array(points.iter().map(|p| codec::encode_point(p)).collect()),
            ),
            (
                "coefficients",
                Value::Array(coefficients.iter().map(codec::encode_rational).collect()),
            ),
        ]),
        RankCertificate::SchemeMembership { scheme } => obj(vec![
            ("kind", Value::from(cert.kind())),
            (
                "generators",
                Value::Array(scheme.generators().iter().map(codec::encode_poly).collect()),
            ),
            ("degree", Value::from(scheme.claimed_degree() as u64)),
            ("support_size", Value::from(scheme.support_size() as u64)),
        ]),
        RankCertificate::Refutation { context, .. } => obj(vec![
            ("kind", Value::from(cert.kind())),
            ("context", Value::from(context.as_str())),
        ]),
    }
}

pub fn rank_cubic(form: &Path, decompose: bool) -> Result<(Value, u8)> {
    let p = codec::decode_poly(&read_json(form)?)?;
    if p.nvars() != 3 {
        return Err(Error::invalid("rank-cubic expects a ternary form (vars = 3)"));
    }
    let f = SymForm::new(p)?;
    match cubic_rank(&f)? {
        CubicRankOutcome::Rank { rank, certificate } => {
            let mut entries = vec![
                ("rank", Value::from(rank as u64)),
                ("certificate", Value::from(certificate.describe())),
            ];
            if decompose {
                entries.push(("decomposition", encode_certificate(&certificate)));
            }
            Ok((obj(entries), 0))
        }
        CubicRankOutcome::Undetermined { diagnostics } => Err(Error::undecided(diagnostics)),
    }
}

pub fn rank_curve_point(curve: &Path, point: &Path) -> Result<(Value, u8)> {
    let x = codec::decode_curve(&read_json(curve)?)?;
    let q = codec::decode_point(&read_json(point)?)?;
    if q.len() != x.ambient() + 1 {
        return Err(Error::invalid(format!(
            "the point has {} coordinates but the curve lives in a {}-coordinate space",
            q.len(),
            x.ambient() + 1
        )));
    }
    let (rank, certificate) = curve_point_rank(&x, &q)?;
    Ok((
        obj(vec![
            ("rank", Value::from(rank as u64)),
            ("certificate", Value::from(certificate.describe())),
        ]),
        0,
    ))
}

// ---------------------------------------------------------------------------
// verification reports

fn encode_status(s: &VerifyStatus) -> Value {
    Value::from(match s {
        VerifyStatus::Verified => "verified",
        VerifyStatus::Refuted => "refuted",
        VerifyStatus::Undecided => "undecided",
    })
}

fn encode_class(c: &ScrollClass) -> Value {
    obj(vec![
        ("base", Value::from(c.base)),
        ("fiber", Value::from(c.fiber)),
    ])
}

fn encode_evidence(e: &Evidence) -> Value {
    match e {
        Evidence::PointRank {
            point,
            rank,
            certificate,
        } => obj(vec![
            ("kind", Value::from("point-rank")),
            ("point", codec::encode_point(point)),
            ("rank", Value::from(*rank as u64)),
            ("certificate", Value::from(certificate.describe())),
        ]),
        Evidence::StallParameter { parameter, profile } => obj(vec![
            ("kind", Value::from("stall-parameter")),
            ("parameter", codec::encode_point(parameter)),
            (
                "profile",
                Value::Array(profile.iter().map(|&o| Value::from(o as u64)).collect()),
            ),
        ]),
        Evidence::ContactDegree {
            equations,
            degree,
            support_size,
        } => obj(vec![
            ("kind", Value::from("contact-degree")),
            (
                "equations",
                Value::Array(equations.iter().map(|eq| codec::encode_point(eq)).collect()),
            ),
            ("degree", Value::from(*degree as u64)),
            ("support_size", Value::from(*support_size as u64)),
        ]),
        Evidence::Intersection { left, right, value } => obj(vec![
            ("kind", Value::from("intersection")),
            ("left", encode_class(left)),
            ("right", encode_class(right)),
            ("value", Value::from(*value)),
        ]),
        Evidence::Genus { class, value } => obj(vec![
            ("kind", Value::from("genus")),
            ("class", encode_class(class)),
            ("value", Value::from(*value)),
        ]),
        Evidence::SystemDimension {
            class,
            conditions,
            value,
        } => obj(vec![
            ("kind", Value::from("system-dimension")),
            ("class", encode_class(class)),
            (
                "conditions",
                conditions.map_or(Value::Null, |c| Value::from(c as u64)),
            ),
            ("value", Value::from(*value as u64)),
        ]),
        Evidence::Smoothness {
            section_a,
            section_b,
        } => obj(vec![
            ("kind", Value::from("smoothness")),
            ("section_a", codec::encode_poly(section_a)),
            ("section_b", codec::encode_poly(section_b)),
        ]),
        Evidence::Embedded => obj(vec![("kind", Value::from("embedded"))]),
        Evidence::SpansAmbient => obj(vec![("kind", Value::from("spans-ambient"))]),
        Evidence::Note { text } => obj(vec![
            ("kind", Value::from("note")),
            ("text", Value::from(text.as_str())),
        ]),
    }
}

fn encode_report(r: &VerificationReport) -> Value {
    obj(vec![
        ("claim", Value::from(r.claim.as_str())),
        ("status", encode_status(&r.status)),
        (
            "curve",
            r.curve.as_ref().map_or(Value::Null, codec::encode_curve),
        ),
        (
            "evidence",
            Value::Array(r.evidence.iter().map(encode_evidence).collect()),
        ),
        (
            "seeds",
            Value::Array(r.seeds.iter().map(|&s| Value::from(s)).collect()),
        ),
        (
            "limit",
            r.limit.as_deref().map_or(Value::Null, Value::from),
        ),
        ("version", Value::from(VERSION)),
    ])
}

fn report_exit(status: &VerifyStatus) -> u8 {
    match status {
        VerifyStatus::Verified => 0,
        VerifyStatus::Refuted => 1,
        VerifyStatus::Undecided => 3,
    }
}

pub fn verify_ii1(d: i64, g: i64) -> Result<(Value, u8)> {
    let routes = finiteness_routes(d, g)?;
    Ok((encode_routes(&routes), 0))
}

fn encode_routes(r: &xrank_core::loci::FinitenessRoutes) -> Value {
    obj(vec![
        ("d", Value::from(r.d)),
        ("g", Value::from(r.g)),
        ("odd_route", Value::from(r.odd_route)),
        ("even_route", Value::from(r.even_route)),
        ("cusp_count", Value::from(r.cusp_count)),
        ("cusp_threshold", codec::encode_rational(&r.cusp_threshold)),
        (
            "even_cusp_bound",
            r.even_cusp_bound.map_or(Value::Null, Value::from),
        ),
        ("version", Value::from(VERSION)),
    ])
}

pub fn verify_ii0(d: usize, a2: &str, a3: &str, samples: usize) -> Result<(Value, u8)> {
    let a2 = Rational::parse_canonical(a2)?;
    let a3 = Rational::parse_canonical(a3)?;
    let report = normal_form_verify(d, &a2, &a3, samples)?;
    Ok((encode_report(&report), report_exit(&report.status)))
}

pub fn verify_piene(seed: u64) -> Result<(Value, u8)> {
    let report = projected_quartic_verify(seed)?;
    Ok((encode_report(&report), report_exit(&report.status)))
}

fn default_line_points() -> Vec<Vec<Rational>> {
    let r = Rational::from_int;
    vec![
        vec![r(0), r(0), r(0), r(0), r(1)],
        vec![r(0), r(0), r(0), r(1), r(1)],
    ]
}

pub fn verify_f1(d: usize, seed: u64) -> Result<(Value, u8)> {
    let report = scroll_suite_verify(d, seed, &default_line_points())?;
    Ok((encode_report(&report), report_exit(&report.status)))
}

pub fn verify_quartic_ledger() -> Result<(Value, u8)> {
    Ok((encode_ledger(), 0))
}

fn encode_ledger() -> Value {
    let ledger = quartic_case_table();
    let rows: Vec<Value> = ledger
        .rows
        .iter()
        .map(|row| {
            obj(vec![
                ("label", Value::from(row.label.as_str())),
                (
                    "summands",
                    Value::Array(
                        row.summands
                            .iter()
                            .map(|(name, v)| {
                                Value::Array(vec![Value::from(name.as_str()), Value::from(*v)])
                            })
                            .collect(),
                    ),
                ),
                ("total", Value::from(row.total)),
            ])
        })
        .collect();
    let join = ledger.join_dim_upper(2);
    obj(vec![
        ("rows", Value::Array(rows)),
        ("bound", Value::from(ledger.bound)),
        ("join_dimension_bound", Value::from(join)),
        ("ambient_dimension", Value::from(14)),
        ("deficient", Value::from(join < 14)),
        ("version", Value::from(VERSION)),
    ])
}

// ---------------------------------------------------------------------------
// aggregate report

pub fn report(out: &Path) -> Result<(Value, u8)> {
    let mut any_refuted = false;
    let mut any_undecided = false;
    let mut bump = |s: &VerifyStatus| match s {
        VerifyStatus::Refuted => any_refuted = true,
        VerifyStatus::Undecided => any_undecided = true,
        VerifyStatus::Verified => {}
    };

    let table: Vec<Value> = [(4, 1), (6, 1), (8, 1), (9, 1), (5, 0)]
        .iter()
        .map(|&(d, g)| finiteness_routes(d, g).map(|r| encode_routes(&r)))
        .collect::<Result<_>>()?;

    let ii0 = normal_form_verify(5, &Rational::from_int(2), &Rational::from_int(3), 3)?;
    bump(&ii0.status);
    let piene = projected_quartic_verify(0)?;
    bump(&piene.status);
    let f1 = scroll_suite_verify(5, 0, &default_line_points())?;
    bump(&f1.status);

    let value = obj(vec![
        ("version", Value::from(VERSION)),
        ("seeds", Value::Array(vec![Value::from(0u64)])),
        ("quartic_ledger", encode_ledger()),
        ("finiteness_table", Value::Array(table)),
        ("normal_form_quintic", encode_report(&ii0)),
        ("projected_quartic", encode_report(&piene)),
        ("scroll_suite_quintic", encode_report(&f1)),
    ]);
    let text = format!("{value:#}\n");
    fs::write(out, &text)
        .map_err(|e| Error::invalid(format!("cannot write {}: {e}", out.display())))?;
    let code = if any_refuted {
        1
    } else if any_undecided {
        3
    } else {
        0
    };
    Ok((value, code))
}
