//! JSON documents for point sets, regions and search output.
//!
//! Every document carries `"format": "csc/1"`. Numbers are strings holding
//! exact rationals (`"p/q"`, integers, or plain decimals on input).

use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::region::{Cell, HalfPlane, Region};
use crate::{Error, Point, PointSet, Rat};

pub const FORMAT: &str = "csc/1";

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(de::Error::custom)
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PointEntry {
            x: self.x.clone(),
            y: self.y.clone(),
            label: None,
        }
        .serialize(s)
    }
}

#[derive(Serialize, Deserialize)]
struct PointEntry {
    x: Rat,
    y: Rat,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct PointSetDoc {
    #[serde(default)]
    format: Option<String>,
    points: Vec<PointEntry>,
}

#[derive(Serialize, Deserialize)]
struct CellDoc {
    halfplanes: Vec<[String; 3]>,
}

#[derive(Serialize, Deserialize)]
struct RegionDoc {
    #[serde(default)]
    format: Option<String>,
    cells: Vec<CellDoc>,
}

fn check_format(f: &Option<String>) -> Result<(), Error> {
    match f.as_deref() {
        None | Some(FORMAT) => Ok(()),
        Some(other) => Err(Error::Parse(format!("unsupported format {other:?}"))),
    }
}

fn entries(set: &PointSet) -> Vec<PointEntry> {
    set.points()
        .iter()
        .enumerate()
        .map(|(i, p)| PointEntry {
            x: p.x.clone(),
            y: p.y.clone(),
            label: set.label(i).map(str::to_owned),
        })
        .collect()
}

/// `serialize_with` helper writing a point set as its bare `points` array.
pub fn serialize_point_set<S: Serializer>(set: &PointSet, s: S) -> Result<S::Ok, S::Error> {
    let e = entries(set);
    let mut seq = s.serialize_seq(Some(e.len()))?;
    for p in &e {
        seq.serialize_element(p)?;
    }
    seq.end()
}

pub fn point_set_to_json(set: &PointSet) -> String {
    let doc = PointSetDoc {
        format: Some(FORMAT.into()),
        points: entries(set),
    };
    serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
}

pub fn parse_point_set(text: &str) -> Result<PointSet, Error> {
    let doc: PointSetDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    check_format(&doc.format)?;
    let labeled = doc.points.iter().filter(|p| p.label.is_some()).count();
    if labeled != 0 && labeled != doc.points.len() {
        return Err(Error::Parse("either every point or no point may carry a label".into()));
    }
    let mut points = Vec::with_capacity(doc.points.len());
    let mut labels = Vec::new();
    for e in doc.points {
        points.push(Point::new(e.x, e.y));
        labels.extend(e.label);
    }
    if labeled == 0 {
        PointSet::new(points)
    } else {
        PointSet::with_labels(points, labels)
    }
}

pub fn region_to_json(region: &Region) -> String {
    let doc = RegionDoc {
        format: Some(FORMAT.into()),
        cells: region
            .cells()
            .iter()
            .map(|c| CellDoc {
                halfplanes: c
                    .constraints()
                    .iter()
                    .map(|h| [h.a().to_string(), h.b().to_string(), h.c().to_string()])
                    .collect(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
}

pub fn parse_region(text: &str) -> Result<Region, Error> {
    let doc: RegionDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    check_format(&doc.format)?;
    let int = |s: &str| -> Result<num_bigint::BigInt, Error> {
        s.trim().parse().map_err(|_| Error::Parse(format!("not an integer: {s:?}")))
    };
    let cells = doc
        .cells
        .iter()
        .map(|c| {
            let hs = c
                .halfplanes
                .iter()
                .map(|[a, b, cc]| HalfPlane::from_ints(int(a)?, int(b)?, int(cc)?))
                .collect::<Result<Vec<_>, Error>>()?;
            Ok(Cell::new(hs))
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(Region::from_cells(cells))
}
