//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (run with `--nocapture` to see them; the harness line per test carries the
//! same verdict). Tolerances and sample counts are pinned here.

use std::process::Command;
use std::time::Instant;

use lattice_exp3::verify::{run_suite, CheckReport, Suite, SuiteReport};

fn report(suite: Suite, seed: u64, n: usize) -> SuiteReport {
    run_suite(suite, seed, n).expect("suite ran")
}

fn check<'a>(r: &'a SuiteReport, name: &str) -> &'a CheckReport {
    r.checks
        .iter()
        .find(|c| c.name == name)
        .unwrap_or_else(|| panic!("check {name} missing from suite {}", r.suite))
}

fn verdict(criterion: &str, pass: bool, detail: String) {
    println!(
        "ACCEPTANCE {criterion}: {} ({detail})",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "{criterion} failed: {detail}");
}

#[test]
fn criterion_01_triangle_counts() {
    let r = report(Suite::WellDefinedness, 1, 500);
    let c = check(&r, "triangle-count");
    verdict(
        "1 triangle-count 12-vs-6",
        c.pass && c.samples >= 502,
        format!("failures={} samples={}", c.max_err, c.samples),
    );
}

#[test]
fn criterion_02_phi_well_definedness() {
    let r = report(Suite::WellDefinedness, 2, 1000);
    let c = check(&r, "phi-well-defined");
    verdict(
        "2 phi well-definedness across generator triangles",
        c.pass && c.max_err <= 1e-9,
        format!(
            "max hausdorff spread={:.3e} lattices={}",
            c.max_err, c.samples
        ),
    );
}

#[test]
fn criterion_03_round_trips() {
    let r = report(Suite::Roundtrip, 3, 1000);
    let mut detail = String::new();
    let mut pass = true;
    for name in [
        "subset-roundtrip-1",
        "subset-roundtrip-2",
        "subset-roundtrip-3",
        "lattice-roundtrip",
    ] {
        let c = check(&r, name);
        pass &= c.pass;
        detail.push_str(&format!("{name}={:.3e} ", c.max_err));
    }
    verdict("3 round-trip identities", pass, detail);
}

#[test]
fn criterion_04_symmetry_suite() {
    let r = report(Suite::Invariance, 4, 1000);
    let scale = check(&r, "scale-invariance");
    let unim = check(&r, "unimodular-invariance");
    let rot = check(&r, "rotation-equivariance");
    verdict(
        "4 symmetry suite (scale 1e-12, unimodular 1e-9, rotation 1e-9)",
        scale.pass && unim.pass && rot.pass,
        format!(
            "scale={:.3e} unimodular={:.3e} rotation={:.3e}",
            scale.max_err, unim.max_err, rot.max_err
        ),
    );
}

#[test]
fn criterion_05_cardinality_dichotomy() {
    let r = report(Suite::Cardinality, 5, 1000);
    let d = check(&r, "cardinality-dichotomy");
    let nr = check(&r, "near-rectangular-dedup");
    verdict(
        "5 cardinality dichotomy incl. controlled near-rectangular",
        d.pass && nr.pass && nr.samples == 200,
        format!(
            "dichotomy failures={} near-rect failures={} near-rect samples={}",
            d.max_err, nr.max_err, nr.samples
        ),
    );
}

#[test]
fn criterion_06_boundary_continuity() {
    let r = report(Suite::Continuity, 6, 0);
    let c = check(&r, "boundary-continuity");
    verdict(
        "6 boundary continuity over 36 directions, eps down to 1e-6",
        c.pass && c.max_err < 1e-3,
        format!("max final hausdorff={:.3e}", c.max_err),
    );
}

#[test]
fn criterion_07_eisenstein_correctness() {
    let r = report(Suite::Eisenstein, 7, 1000);
    let dual = check(&r, "dual-method");
    let vanish = check(&r, "symmetric-vanishing");
    let product = check(&r, "discriminant-product");
    verdict(
        "7 eisenstein: dual-method 1e-8, vanishing 1e-12, product identity 1e-8",
        dual.pass
            && dual.max_err <= 1e-8
            && dual.samples >= 100
            && vanish.pass
            && vanish.max_err <= 1e-12
            && product.pass
            && product.max_err <= 1e-8,
        format!(
            "dual={:.3e} vanish={:.3e} product={:.3e}",
            dual.max_err, vanish.max_err, product.max_err
        ),
    );
}

#[test]
fn criterion_08_trefoil_certification() {
    let t0 = Instant::now();
    let r = report(Suite::Knot, 8, 0);
    let torus = check(&r, "torus-curve-trefoil");
    let pushoff = check(&r, "pushed-off-trefoil");
    let circle = check(&r, "circle-unknot");
    let elapsed = t0.elapsed();
    verdict(
        "8 trefoil certification (torus 512; push-off 0.1/0.05 x 720; circle)",
        torus.pass && pushoff.pass && circle.pass && elapsed.as_secs() <= 120,
        format!(
            "torus={} pushoff-same-chirality={} circle-unknot={} elapsed={elapsed:.2?}",
            torus.pass, pushoff.pass, circle.pass
        ),
    );
}

#[test]
fn criterion_09_degeneration_toward_the_knot() {
    let r = report(Suite::Eisenstein, 9, 1);
    let c = check(&r, "degeneration");
    verdict(
        "9 degeneration: |discriminant| and knot distance strictly decreasing",
        c.pass && c.max_err < 1e-3,
        format!("final |discriminant|={:.3e}", c.max_err),
    );
}

#[test]
fn criterion_10_cli_determinism() {
    let bin = env!("CARGO_BIN_EXE_lattice-exp3");
    let run = || {
        Command::new(bin)
            .args(["verify", "--suite", "all", "--seed", "7"])
            .output()
            .expect("binary runs")
    };
    let first = run();
    let second = run();
    let pass = first.status.success()
        && second.status.success()
        && first.stdout == second.stdout
        && !first.stdout.is_empty();
    verdict(
        "10 CLI determinism: verify --suite all --seed 7, byte-identical",
        pass,
        format!(
            "exit0={} identical={} bytes={}",
            first.status.success(),
            first.stdout == second.stdout,
            first.stdout.len()
        ),
    );
}
