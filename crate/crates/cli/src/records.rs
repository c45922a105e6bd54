use serde::{Deserialize, Serialize};

use cubic3_core::trinomials::{Classification, Emitted, Provenance};
use cubic3_core::{AdmissibleD, Curve, CurvePoint, OracleReport, Representation};

pub fn curve_name(c: Curve) -> &'static str {
    match c {
        Curve::Three => "3",
        Curve::TwentySeven => "27",
    }
}

#[derive(Serialize)]
pub struct RepRecord {
    pub n: i128,
    pub u: i128,
    pub v: i128,
}

impl From<&Representation> for RepRecord {
    fn from(r: &Representation) -> Self {
        Self { n: r.n, u: r.u, v: r.v }
    }
}

#[derive(Serialize)]
pub struct AdmissibleRecord {
    #[serde(rename = "D")]
    pub d: i128,
    #[serde(rename = "D1")]
    pub d1: i128,
    pub has9: bool,
}

impl From<&AdmissibleD> for AdmissibleRecord {
    fn from(a: &AdmissibleD) -> Self {
        Self {
            d: a.d,
            d1: a.d1,
            has9: a.has9,
        }
    }
}

#[derive(Serialize)]
pub struct VerdictRecord {
    #[serde(rename = "D")]
    pub d: i128,
    pub admissible: bool,
    pub reason: String,
}

#[derive(Serialize)]
pub struct PointRecord {
    pub x: i128,
    pub y: i128,
    pub z: i128,
    pub curve: &'static str,
    pub level: i128,
}

impl From<&CurvePoint> for PointRecord {
    fn from(p: &CurvePoint) -> Self {
        Self {
            x: p.x,
            y: p.y,
            z: p.z,
            curve: curve_name(p.curve),
            level: p.level,
        }
    }
}

#[derive(Serialize)]
pub struct TrinomialRecord {
    pub a: i128,
    pub b: i128,
    pub c: i128,
    #[serde(rename = "D")]
    pub d: i128,
    pub family: &'static str,
    pub j: usize,
    pub sign: i128,
    pub s: i128,
    pub t: i128,
}

impl From<&Emitted> for TrinomialRecord {
    fn from(e: &Emitted) -> Self {
        let (t, g) = (e.trinomial, e.tag);
        Self {
            a: t.a,
            b: t.b,
            c: t.c,
            d: t.d,
            family: g.family.name(),
            j: g.j,
            sign: g.sign,
            s: g.s,
            t: g.t,
        }
    }
}

#[derive(Deserialize)]
pub struct Candidate {
    pub a: i128,
    pub b: i128,
}

#[derive(Serialize, Default)]
#[serde(rename_all = "camelCase")]
pub struct VerifyRecord {
    pub line: usize,
    pub a: Option<i128>,
    pub b: Option<i128>,
    pub square_disc: Option<bool>,
    pub irreducible: Option<bool>,
    pub cyclic_cubic: bool,
    pub canonical_a: Option<i128>,
    pub canonical_b: Option<i128>,
    #[serde(rename = "D")]
    pub d: Option<i128>,
    pub provenance: Option<&'static str>,
    pub family: Option<&'static str>,
    pub j: Option<usize>,
    pub sign: Option<i128>,
    pub s: Option<i128>,
    pub t: Option<i128>,
    pub error: Option<String>,
}

impl VerifyRecord {
    pub fn from_classification(line: usize, c: &Candidate, cl: &Classification) -> Self {
        let mut r = Self {
            line,
            a: Some(c.a),
            b: Some(c.b),
            ..Self::default()
        };
        match cl {
            Classification::NotSquareDisc => r.square_disc = Some(false),
            Classification::Reducible { canonical } => {
                r.square_disc = Some(true);
                r.irreducible = Some(false);
                if let Some(t) = canonical {
                    (r.canonical_a, r.canonical_b, r.d) = (Some(t.a), Some(t.b), Some(t.d));
                }
            }
            Classification::Cyclic {
                trinomial: t,
                provenance,
            } => {
                r.square_disc = Some(true);
                r.irreducible = Some(true);
                r.cyclic_cubic = true;
                (r.canonical_a, r.canonical_b, r.d) = (Some(t.a), Some(t.b), Some(t.d));
                match provenance {
                    Provenance::Found(g) => {
                        r.provenance = Some("found");
                        r.family = Some(g.family.name());
                        (r.j, r.sign, r.s, r.t) = (Some(g.j), Some(g.sign), Some(g.s), Some(g.t));
                    }
                    Provenance::Inconclusive => r.provenance = Some("inconclusive"),
                }
            }
        }
        r
    }

    pub fn error(line: usize, msg: String) -> Self {
        Self {
            line,
            error: Some(msg),
            ..Self::default()
        }
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct OracleRecord {
    #[serde(rename = "D")]
    pub d: i128,
    pub kind: &'static str,
    pub curve: &'static str,
    pub z_max: i128,
    pub st_max: i128,
    pub constructed_count: usize,
    pub oracle_count: usize,
    pub missing_count: usize,
    pub extra_count: usize,
    pub matched: bool,
}

impl OracleRecord {
    pub fn new(r: &OracleReport, st_max: i128) -> Self {
        Self {
            d: r.d,
            kind: r.kind.name(),
            curve: curve_name(r.curve),
            z_max: r.z_max,
            st_max,
            constructed_count: r.constructed_count,
            oracle_count: r.oracle_count,
            missing_count: r.missing.len(),
            extra_count: r.extra.len(),
            matched: r.is_match(),
        }
    }
}
