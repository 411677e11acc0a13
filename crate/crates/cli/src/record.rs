//! The serialized record formats. Big integers are emitted as decimal
//! strings so consumers limited to 53-bit JSON numbers never truncate deep
//! tree coordinates, and floats are emitted as strings with 17 significant
//! digits so output is byte-deterministic.

use serde::Serialize;

use berggren_core::geometry::DescTriangleMetrics;
use berggren_core::radii::ChainPoint;
use berggren_core::{Ppt, Rational, TreePath};

#[derive(Debug, Serialize)]
pub struct TripleRecord {
    pub x: String,
    pub y: String,
    pub z: String,
    /// Word from the root, or null when the invocation did not ask for one.
    pub path: Option<String>,
    pub r: String,
    #[serde(rename = "R")]
    pub big_r: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub geometry: Option<GeometryBlock>,
}

#[derive(Debug, Serialize)]
pub struct SurdRepr {
    pub coeff: String,
    pub radicand: String,
}

#[derive(Debug, Serialize)]
pub struct SidesRepr {
    pub ab: String,
    pub bc: String,
    pub ac: SurdRepr,
}

#[derive(Debug, Serialize)]
pub struct ExactInradiusRepr {
    /// r = (p − √d)/√17.
    pub p: String,
    pub d: String,
}

#[derive(Debug, Serialize)]
pub struct GeometryBlock {
    /// The three descendant points in letter order A, B, C.
    pub points: [[String; 3]; 3],
    /// Coefficients (α, β, γ, δ) of the containing plane αa + βb + γc + δ = 0.
    pub plane: [String; 4],
    pub area: SurdRepr,
    #[serde(rename = "D")]
    pub d: String,
    pub dot_products: [String; 3],
    pub sides: SidesRepr,
    pub inradius_exact: ExactInradiusRepr,
    pub circumradius_sq: String,
    pub inradius_float: String,
    pub circumradius_float: String,
}

pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn format_f64(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn triple_record(t: &Ppt, path: Option<&TreePath>) -> TripleRecord {
    TripleRecord {
        x: t.x().to_string(),
        y: t.y().to_string(),
        z: t.z().to_string(),
        path: path.map(|p| p.to_string()),
        r: t.inradius().to_string(),
        big_r: format_rational(&t.circumradius()),
        geometry: None,
    }
}

pub fn chain_record(point: &ChainPoint, path: &TreePath) -> TripleRecord {
    TripleRecord {
        x: point.triple.x().to_string(),
        y: point.triple.y().to_string(),
        z: point.triple.z().to_string(),
        path: Some(path.to_string()),
        r: point.inradius.to_string(),
        big_r: format_rational(&point.circumradius),
        geometry: None,
    }
}

pub fn geometry_block(m: &DescTriangleMetrics) -> GeometryBlock {
    GeometryBlock {
        points: std::array::from_fn(|i| {
            std::array::from_fn(|j| m.points[i].0[j].to_string())
        }),
        plane: std::array::from_fn(|i| m.plane.coeffs[i].to_string()),
        area: SurdRepr {
            coeff: m.area.coeff.to_string(),
            radicand: m.area.radicand.to_string(),
        },
        d: m.d.to_string(),
        dot_products: std::array::from_fn(|i| m.dot_products[i].to_string()),
        sides: SidesRepr {
            ab: m.side_ab.to_string(),
            bc: m.side_bc.to_string(),
            ac: SurdRepr {
                coeff: m.side_ac.coeff.to_string(),
                radicand: m.side_ac.radicand.to_string(),
            },
        },
        inradius_exact: ExactInradiusRepr {
            p: m.inradius.p.to_string(),
            d: m.inradius.d.to_string(),
        },
        circumradius_sq: format_rational(&m.circumradius_sq),
        inradius_float: format_f64(m.inradius_f64),
        circumradius_float: format_f64(m.circumradius_f64),
    }
}

/// CSV needs no escaping: every field is drawn from [0-9A-C/,.-] and the
/// separator never occurs inside a field.
pub fn csv_row(rec: &TripleRecord) -> String {
    format!(
        "{},{},{},{},{},{}",
        rec.x,
        rec.y,
        rec.z,
        rec.path.as_deref().unwrap_or(""),
        rec.r,
        rec.big_r
    )
}

pub const CSV_HEADER: &str = "x,y,z,path,r,R";

pub fn json_line(rec: &TripleRecord) -> String {
    serde_json::to_string(rec).expect("record serialization cannot fail")
}
