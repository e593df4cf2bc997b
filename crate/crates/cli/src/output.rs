//! Deterministic JSON rendering for command results.
//!
//! Display precision is 9 decimals for angles and coordinates in command
//! output; curve files (see `io`) use 17 significant digits so coordinates
//! round-trip exactly.

use lattice_exp3::knot::Certificate;
use lattice_exp3::lattice::Triangle;
use lattice_exp3::phi::CompactifiedLattice;
use lattice_exp3::verify::SuiteReport;
use lattice_exp3::{Basis, CircleSubset};

fn num(x: f64) -> String {
    format!("{x:.9}")
}

fn vec2(v: lattice_exp3::Vec2) -> String {
    format!("[{}, {}]", num(v.x), num(v.y))
}

pub fn subset_json(s: &CircleSubset) -> String {
    let angles: Vec<String> = s.angles().iter().map(|a| num(a.radians())).collect();
    format!("{{\"subset\":[{}]}}", angles.join(", "))
}

pub fn basis_json(b: &Basis) -> String {
    format!("{{\"basis\":[{}, {}]}}", vec2(b.u), vec2(b.v))
}

pub fn lattice_json(l: &CompactifiedLattice<f64>) -> String {
    match l {
        CompactifiedLattice::NonDegenerate(b) => format!(
            "{{\"basis\":[{}, {}],\"degenerate\":null}}",
            vec2(b.u),
            vec2(b.v)
        ),
        CompactifiedLattice::Degenerate(d) => {
            format!("{{\"basis\":null,\"degenerate\":{}}}", num(d.radians()))
        }
    }
}

pub fn triangles_json(triangles: &[Triangle<f64>]) -> String {
    let items: Vec<String> = triangles
        .iter()
        .map(|t| format!("[{}, {}, {}]", vec2(t.a), vec2(t.b), vec2(t.c)))
        .collect();
    format!(
        "{{\"triangles\":[{}],\"count\":{}}}",
        items.join(", "),
        triangles.len()
    )
}

pub fn certificate_json(cert: &Certificate, convention: &str) -> String {
    let jones: Vec<String> = cert
        .jones
        .terms()
        .map(|(e, c)| format!("\"{e}\":{c}"))
        .collect();
    format!(
        "{{\"verdict\":\"{}\",\"jones\":{{{}}},\"crossings\":{},\"writhe\":{},\"convention\":\"{}\"}}",
        cert.verdict,
        jones.join(","),
        cert.crossings,
        cert.writhe,
        convention
    )
}

pub fn verify_json(reports: &[SuiteReport], seed: u64, n: usize) -> String {
    let all_pass = reports.iter().all(|r| r.passed());
    let suites: Vec<String> = reports
        .iter()
        .map(|r| {
            let checks: Vec<String> = r
                .checks
                .iter()
                .map(|c| {
                    format!(
                        "{{\"name\":\"{}\",\"pass\":{},\"max_err\":{:.3e},\"samples\":{}}}",
                        c.name, c.pass, c.max_err, c.samples
                    )
                })
                .collect();
            format!(
                "{{\"suite\":\"{}\",\"pass\":{},\"checks\":[{}]}}",
                r.suite,
                r.passed(),
                checks.join(",")
            )
        })
        .collect();
    format!(
        "{{\"seed\":{seed},\"n\":{n},\"pass\":{all_pass},\"suites\":[{}]}}",
        suites.join(",")
    )
}
