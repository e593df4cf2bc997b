//! Polyline file formats: CSV (header `x,y,z`), JSON
//! (`{"points":[[x,y,z],...]}`), and OBJ (`v` lines plus one closed `l`
//! polyline).
//!
//! Coordinates are written with 17 significant digits so a read-back
//! reproduces every f64 bit-exactly. Closure is implicit: the last vertex
//! connects to the first, which is never repeated.

use std::path::Path;

use lattice_exp3::{Polyline3, Vec3};

fn fnum(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn polyline_to_csv(line: &Polyline3) -> String {
    let mut out = String::from("x,y,z\n");
    for p in line.points() {
        out.push_str(&format!("{},{},{}\n", fnum(p.x), fnum(p.y), fnum(p.z)));
    }
    out
}

pub fn polyline_to_json(line: &Polyline3) -> String {
    let rows: Vec<String> = line
        .points()
        .iter()
        .map(|p| format!("[{}, {}, {}]", fnum(p.x), fnum(p.y), fnum(p.z)))
        .collect();
    format!("{{\"points\":[{}]}}\n", rows.join(", "))
}

pub fn polyline_to_obj(line: &Polyline3) -> String {
    let mut out = String::new();
    for p in line.points() {
        out.push_str(&format!("v {} {} {}\n", fnum(p.x), fnum(p.y), fnum(p.z)));
    }
    let indices: Vec<String> = (1..=line.len()).chain([1]).map(|i| i.to_string()).collect();
    out.push_str(&format!("l {}\n", indices.join(" ")));
    out
}

pub fn read_polyline(path: &Path) -> Result<Polyline3, String> {
    let body = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let ext = path
        .extension()
        .and_then(|e| e.to_str())
        .map(str::to_ascii_lowercase);
    let points = match ext.as_deref() {
        Some("csv") => parse_csv(&body)?,
        Some("json") => parse_json(&body)?,
        Some("obj") => parse_obj(&body)?,
        _ => {
            // sniff: JSON object, OBJ vertex lines, else CSV
            let head = body.trim_start();
            if head.starts_with('{') {
                parse_json(&body)?
            } else if head.starts_with("v ") {
                parse_obj(&body)?
            } else {
                parse_csv(&body)?
            }
        }
    };
    let vecs: Result<Vec<Vec3>, String> = points
        .into_iter()
        .map(|[x, y, z]| Vec3::new(x, y, z).map_err(|e| e.to_string()))
        .collect();
    Polyline3::new(vecs?).map_err(|e| e.to_string())
}

fn parse_csv(body: &str) -> Result<Vec<[f64; 3]>, String> {
    let mut rows = Vec::new();
    for (idx, raw) in body.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || (idx == 0 && line.eq_ignore_ascii_case("x,y,z")) {
            continue;
        }
        let cols: Vec<f64> = line
            .split(',')
            .map(|c| c.trim().parse::<f64>())
            .collect::<Result<_, _>>()
            .map_err(|_| format!("line {}: not three numbers: {raw:?}", idx + 1))?;
        if cols.len() != 3 {
            return Err(format!("line {}: expected x,y,z", idx + 1));
        }
        rows.push([cols[0], cols[1], cols[2]]);
    }
    Ok(rows)
}

fn parse_json(body: &str) -> Result<Vec<[f64; 3]>, String> {
    let value: serde_json::Value =
        serde_json::from_str(body).map_err(|e| format!("invalid JSON: {e}"))?;
    let points = value
        .get("points")
        .and_then(|p| p.as_array())
        .ok_or("JSON must hold an object with a \"points\" array")?;
    points
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let coords: Option<Vec<f64>> = row
                .as_array()
                .map(|r| r.iter().filter_map(|v| v.as_f64()).collect());
            match coords {
                Some(c) if c.len() == 3 => Ok([c[0], c[1], c[2]]),
                _ => Err(format!("points[{i}] is not a triple of numbers")),
            }
        })
        .collect()
}

fn parse_obj(body: &str) -> Result<Vec<[f64; 3]>, String> {
    let mut rows = Vec::new();
    for (idx, raw) in body.lines().enumerate() {
        let line = raw.trim();
        if let Some(rest) = line.strip_prefix("v ") {
            let cols: Vec<f64> = rest
                .split_whitespace()
                .map(|c| c.parse::<f64>())
                .collect::<Result<_, _>>()
                .map_err(|_| format!("line {}: bad vertex: {raw:?}", idx + 1))?;
            if cols.len() != 3 {
                return Err(format!("line {}: vertex needs three coordinates", idx + 1));
            }
            rows.push([cols[0], cols[1], cols[2]]);
        }
    }
    Ok(rows)
}
