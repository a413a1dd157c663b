//! Serializable views of pipeline results, plus a plain-text rendering.
//!
//! Integers are written as JSON numbers when they fit in an `i64` and as
//! decimal strings otherwise; non-integral rationals are strings `"p/q"`.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cone::RationalCone;
use crate::lattice::rational::{self, Rat};
use crate::lattice::LatticeVector;
use crate::quotient::{QuotientReport, SweepResult};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum IntRepr {
    Int(i64),
    Str(String),
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match IntRepr::deserialize(d)? {
            IntRepr::Int(v) => Ok(JsonInt(v.into())),
            IntRepr::Str(s) => s.parse().map(JsonInt).map_err(serde::de::Error::custom),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonRat(pub Rat);

impl Serialize for JsonRat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.0.is_integer() {
            JsonInt(self.0.to_integer()).serialize(s)
        } else {
            s.serialize_str(&rational::format_rat(&self.0))
        }
    }
}

impl<'de> Deserialize<'de> for JsonRat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match IntRepr::deserialize(d)? {
            IntRepr::Int(v) => Ok(JsonRat(Rat::from_integer(v.into()))),
            IntRepr::Str(s) => {
                let parsed = match s.split_once('/') {
                    Some((p, q)) => p.parse::<BigInt>().ok().zip(q.parse::<BigInt>().ok()).and_then(|(p, q)| {
                        (q != BigInt::from(0)).then(|| Rat::new(p, q))
                    }),
                    None => s.parse::<BigInt>().ok().map(Rat::from_integer),
                };
                parsed.map(JsonRat).ok_or_else(|| serde::de::Error::custom(format!("bad rational {s:?}")))
            }
        }
    }
}

fn ints(v: &[BigInt]) -> Vec<JsonInt> {
    v.iter().cloned().map(JsonInt).collect()
}

fn rats(v: &[Rat]) -> Vec<JsonRat> {
    v.iter().cloned().map(JsonRat).collect()
}

fn cone_rays(c: &RationalCone) -> Vec<Vec<JsonInt>> {
    c.generators().iter().map(|g| ints(g)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialJson {
    pub exponents: Vec<JsonInt>,
    pub degree: u64,
    pub display: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorsJson {
    pub ring: String,
    pub monomials: Vec<MonomialJson>,
    pub verified_degree: u64,
    pub certificate_degree: u64,
    pub complete: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChartJson {
    pub center: String,
    pub ring: String,
    pub generators: Vec<Vec<JsonInt>>,
    pub removed: Vec<Vec<JsonInt>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnstableJson {
    pub display: String,
    pub components: Vec<Vec<String>>,
    pub dimension: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointJson {
    pub coords: Vec<JsonInt>,
    pub label: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeJson {
    pub dimension: Option<usize>,
    pub vertices: Vec<Vec<JsonRat>>,
    pub origin: Vec<JsonRat>,
    pub basis: Vec<Vec<JsonInt>>,
    pub lattice_points: Vec<PointJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanJson {
    pub rays: Vec<Vec<JsonInt>>,
    pub maximal_cones: Vec<Vec<Vec<JsonInt>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentificationJson {
    pub name: String,
    pub weights: Vec<u64>,
    pub linear: Vec<Vec<JsonInt>>,
    pub translation: Vec<JsonInt>,
    pub source_scale: JsonInt,
    pub target_scale: JsonInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChamberJson {
    pub status: String,
    pub walls_hit: Vec<Vec<usize>>,
    pub chamber: Option<Vec<Vec<JsonInt>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonJson {
    pub other_mode: String,
    pub other_generators: Option<Vec<String>>,
    pub other_error: Option<String>,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub mode: String,
    pub variables: Vec<String>,
    pub action_rows: Vec<Vec<JsonInt>>,
    pub alpha: Vec<JsonInt>,
    pub generators: GeneratorsJson,
    pub charts: Vec<ChartJson>,
    pub unstable: Option<UnstableJson>,
    pub polytope: Option<PolytopeJson>,
    pub fan: Option<FanJson>,
    pub identification: Option<IdentificationJson>,
    pub chamber: ChamberJson,
    pub mode_comparison: ComparisonJson,
    pub notes: Vec<String>,
}

impl ReportJson {
    pub fn from_report(r: &QuotientReport) -> Self {
        let names = r.action.names();
        let gens = &r.generators.generators;
        let polytope = r.polytope.as_ref().map(|q| {
            let points = q.polytope.lattice_points().unwrap_or_default();
            PolytopeJson {
                dimension: q.polytope.dimension(),
                vertices: q.polytope.vertices().iter().map(|v| rats(v)).collect(),
                origin: rats(&q.origin),
                basis: q.basis.iter().map(|b| ints(b)).collect(),
                lattice_points: points
                    .iter()
                    .map(|p| PointJson {
                        coords: ints(p),
                        label: point_label(r, p),
                    })
                    .collect(),
            }
        });
        ReportJson {
            mode: r.mode.to_string(),
            variables: names.to_vec(),
            action_rows: r.action.matrix().rows().map(ints).collect(),
            alpha: ints(r.action.alpha()),
            generators: GeneratorsJson {
                ring: r.format_generators(gens),
                monomials: gens
                    .iter()
                    .map(|g| MonomialJson {
                        exponents: ints(&g.exponents),
                        degree: g.degree,
                        display: g.display(names).to_string(),
                    })
                    .collect(),
                verified_degree: r.generators.verified_degree,
                certificate_degree: r.generators.certificate_degree,
                complete: r.generators.complete,
            },
            charts: r
                .charts
                .iter()
                .zip(gens)
                .map(|(c, g)| ChartJson {
                    center: g.display(names).to_string(),
                    ring: c.to_string(),
                    generators: c.generators().iter().map(|m| ints(&m.exponents)).collect(),
                    removed: c.removed().iter().map(|m| ints(&m.exponents)).collect(),
                })
                .collect(),
            unstable: r.unstable.as_ref().map(|u| UnstableJson {
                display: u.display(names).to_string(),
                components: u
                    .components()
                    .iter()
                    .map(|c| c.iter().map(|&i| names[i].clone()).collect())
                    .collect(),
                dimension: u.dimension(),
            }),
            polytope,
            fan: r.fan.as_ref().map(|f| FanJson {
                rays: f.rays().iter().map(|v| ints(v)).collect(),
                maximal_cones: f.maximal_cones().iter().map(cone_rays).collect(),
            }),
            identification: r.identification.as_ref().map(|i| IdentificationJson {
                name: i.name(),
                weights: i.weights.weights().to_vec(),
                linear: i.witness.linear().rows().map(ints).collect(),
                translation: ints(i.witness.translation()),
                source_scale: JsonInt(i.source_scale.clone()),
                target_scale: JsonInt(i.target_scale.clone()),
            }),
            chamber: ChamberJson {
                status: r.chamber.status.as_str().into(),
                walls_hit: r.chamber.walls_hit.clone(),
                chamber: r.chamber.chamber.as_ref().map(cone_rays),
            },
            mode_comparison: ComparisonJson {
                other_mode: r.comparison.other_mode.to_string(),
                other_generators: r
                    .comparison
                    .other_generators
                    .as_ref()
                    .map(|g| g.iter().map(|m| m.display(names).to_string()).collect()),
                other_error: r.comparison.other_error.clone(),
                agrees: r.comparison.agrees,
            },
            notes: r.notes.clone(),
        }
    }
}

/// The monomial sitting at an integral polytope point, when the frame maps
/// it to an integral exponent vector.
pub fn point_label(r: &QuotientReport, p: &LatticeVector) -> Option<String> {
    let q = r.polytope.as_ref()?;
    let coords: Vec<Rat> = p.iter().map(rational::rat).collect();
    let m = q.exponent_of(&coords);
    if !rational::is_integral(&m) {
        return None;
    }
    let v = LatticeVector::new(m.iter().map(|x| x.to_integer()).collect());
    Some(crate::semigroup::LaurentMonomial::new(v).display(r.action.names()).to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepGroupJson {
    pub representative: Vec<JsonInt>,
    pub members: Vec<Vec<JsonInt>>,
    pub chamber: String,
    pub walls_hit: Vec<Vec<usize>>,
    pub unstable: Option<String>,
    pub identification: Option<String>,
    pub report: ReportJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureJson {
    pub alpha: Vec<JsonInt>,
    pub error: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepJson {
    pub groups: Vec<SweepGroupJson>,
    pub failures: Vec<FailureJson>,
}

impl SweepJson {
    pub fn from_sweep(s: &SweepResult) -> Self {
        SweepJson {
            groups: s
                .groups
                .iter()
                .map(|g| SweepGroupJson {
                    representative: ints(&g.representative),
                    members: g.members.iter().map(|m| ints(m)).collect(),
                    chamber: g.report.chamber.status.as_str().into(),
                    walls_hit: g.report.chamber.walls_hit.clone(),
                    unstable: g.report.unstable_display(),
                    identification: g.report.identification.as_ref().map(|i| i.name()),
                    report: ReportJson::from_report(&g.report),
                })
                .collect(),
            failures: s
                .failures
                .iter()
                .map(|(a, e)| FailureJson {
                    alpha: ints(a),
                    error: e.to_string(),
                })
                .collect(),
        }
    }
}

fn vec_str(v: &[BigInt]) -> String {
    LatticeVector::new(v.to_vec()).to_string()
}

/// Plain-text report: generators, charts, unstable locus, polytope, fan,
/// identification, chamber, notes.
pub fn render_report(r: &QuotientReport) -> String {
    let names = r.action.names();
    let mut s = String::new();
    let _ = writeln!(s, "mode: {}", r.mode);
    let _ = writeln!(s, "linearization: {}", r.action.alpha());
    let _ = writeln!(
        s,
        "invariant ring: {} (complete: {}, certificate degree {})",
        r.format_generators(&r.generators.generators),
        r.generators.complete,
        r.generators.certificate_degree
    );
    let _ = writeln!(s, "charts:");
    for (c, g) in r.charts.iter().zip(&r.generators.generators) {
        let _ = writeln!(s, "  at {}: {}", g.display(names), c);
    }
    match r.unstable_display() {
        Some(u) => {
            let _ = writeln!(s, "unstable locus: {u}");
        }
        None => {
            let _ = writeln!(s, "unstable locus: (not defined in lattice mode)");
        }
    }
    if let Some(q) = &r.polytope {
        let _ = writeln!(s, "polytope: {}", q.polytope);
        let labels: Vec<String> = q
            .polytope
            .lattice_points()
            .unwrap_or_default()
            .iter()
            .map(|p| match point_label(r, p) {
                Some(l) => format!("{} {}", vec_str(p), l),
                None => vec_str(p),
            })
            .collect();
        if !labels.is_empty() {
            let _ = writeln!(s, "lattice points: {}", labels.join(", "));
        }
    }
    if let Some(f) = &r.fan {
        let rays: Vec<String> = f.rays().iter().map(|v| v.to_string()).collect();
        let _ = writeln!(s, "fan rays: {}", rays.join(", "));
    }
    match &r.identification {
        Some(i) => {
            let _ = writeln!(s, "identification: {}", i.name());
        }
        None => {
            let _ = writeln!(s, "identification: none");
        }
    }
    let _ = write!(s, "chamber: {}", r.chamber.status.as_str());
    if let Some(c) = &r.chamber.chamber {
        let _ = write!(s, " {c}");
    }
    for w in &r.chamber.walls_hit {
        let cols: Vec<String> = w.iter().map(|&j| r.action.matrix().column(j).to_string()).collect();
        let _ = write!(s, " wall⟨{}⟩", cols.join(", "));
    }
    let _ = writeln!(s);
    for n in &r.notes {
        let _ = writeln!(s, "note: {n}");
    }
    s
}

/// One line per group.
pub fn render_sweep(s: &SweepResult) -> String {
    let mut out = String::new();
    for g in &s.groups {
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\tmembers {}",
            g.representative,
            g.report.chamber.status.as_str(),
            g.report.unstable_display().unwrap_or_else(|| "-".into()),
            g.report.identification.as_ref().map_or("-".to_string(), |i| i.name()),
            g.members.len()
        );
    }
    for (a, e) in &s.failures {
        let _ = writeln!(out, "{a}\tfailed: {e}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quotient::{quotient_report, ActionData, Mode};

    #[test]
    fn integers_and_rationals() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let v = vec![JsonInt(5.into()), JsonInt(big)];
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, r#"[5,"123456789012345678901234567890"]"#);
        assert_eq!(serde_json::from_str::<Vec<JsonInt>>(&s).unwrap(), v);
        let r = vec![JsonRat(Rat::new(1.into(), 2.into())), JsonRat(Rat::from_integer(3.into()))];
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(s, r#"["1/2",3]"#);
        assert_eq!(serde_json::from_str::<Vec<JsonRat>>(&s).unwrap(), r);
    }

    #[test]
    fn report_round_trip_and_labels() {
        let a = ActionData::from_i64s(&[&[1, 1, 1, 1], &[0, 0, 1, -1]], &[3, 1]).unwrap();
        let rep = quotient_report(&a, Mode::Polynomial, 8).unwrap();
        let j = ReportJson::from_report(&rep);
        let labels: Vec<String> = j.polytope.as_ref().unwrap().lattice_points.iter().filter_map(|p| p.label.clone()).collect();
        assert_eq!(labels, ["X^2Z", "Z^2W", "XYZ", "Y^2Z"]);
        let s = serde_json::to_string_pretty(&j).unwrap();
        let back: ReportJson = serde_json::from_str(&s).unwrap();
        assert_eq!(serde_json::to_string_pretty(&back).unwrap(), s);
        let text = render_report(&rep);
        assert!(text.contains("identification: CP_{1,1,2}"));
        assert!(text.contains("at Z^2W: C[X^2/ZW, XY/ZW, Y^2/ZW]"));
    }
}
