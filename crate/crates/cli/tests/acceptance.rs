//! Go/no-go battery for the whole toolkit: ten criteria, each printed as
//! one pass/fail line. Every criterion either certifies a construction on
//! the full catalog or pins a value against an independently derived
//! oracle; the negative controls at the end make sure the axiom gate
//! actually rejects corrupted structure tensors.

use std::process::Command;
use std::time::{Duration, Instant};

use tempfile::TempDir;

use hopfint_cli::format::HopfFileDocument;
use hopfint_cli::suite::{regular_hom_dimension, SUITE_SEED};
use hopfint_core::catalog::{catalog, catalog_entry};
use hopfint_core::comodule::{doi_iso, dual_comodule, free_hom_iso, ev_db, Comodule, IsoOutcome};
use hopfint_core::functors::{adjunction_check, structure_iso_check, ut_identity_check};
use hopfint_core::hopf::HopfAlgebra;
use hopfint_core::integrals::{
    antipode_bijective, antipode_order, distinguished_grouplike, gamma_comodule, integral_space,
    sweedler_iso_check, uniqueness_check, AntipodeOrder, Side,
};
use hopfint_core::matrix::Matrix;
use hopfint_core::scalar::FieldScalar;

/// The standard test comodules on an algebra, including the line on the
/// distinguished group-like when it exists.
fn battery(h: &HopfAlgebra) -> Vec<(String, Comodule)> {
    let reg = Comodule::regular(h);
    let mut out = vec![
        ("trivial".to_string(), Comodule::trivial(h)),
        ("regular".to_string(), reg.clone()),
        ("dual_regular".to_string(), dual_comodule(&reg)),
    ];
    if let Ok(line) = gamma_comodule(h) {
        out.push(("gamma_line".to_string(), line.comodule));
    }
    out
}

fn one_dimensional_integral_spaces() -> Result<String, String> {
    let entries = catalog();
    if entries.len() != 14 {
        return Err(format!("catalog has {} entries, expected 14", entries.len()));
    }
    let mut slowest = Duration::ZERO;
    for entry in &entries {
        let start = Instant::now();
        let right = integral_space(&entry.algebra, Side::Right);
        let left = integral_space(&entry.algebra, Side::Left);
        let took = start.elapsed();
        if right.dim() != 1 || left.dim() != 1 {
            return Err(format!(
                "{}: right dim {}, left dim {}",
                entry.name,
                right.dim(),
                left.dim()
            ));
        }
        if took >= Duration::from_secs(1) {
            return Err(format!("{}: took {} ms", entry.name, took.as_millis()));
        }
        slowest = slowest.max(took);
    }
    Ok(format!("14 algebras, slowest pair {} ms", slowest.as_millis()))
}

fn sides_vanish_together() -> Result<String, String> {
    for entry in catalog() {
        let u = uniqueness_check(&entry.algebra);
        let wired = u
            .report
            .checks
            .iter()
            .any(|(name, ok)| name == "sides_vanish_together" && *ok);
        if !wired {
            return Err(format!("{}: flag missing or failing", entry.name));
        }
        if u.right_dim == 0 || u.left_dim == 0 {
            return Err(format!("{}: vacuous instance", entry.name));
        }
    }
    Ok("flag wired and nonvacuously true on every algebra".to_string())
}

fn distinguished_grouplike_pinned() -> Result<String, String> {
    for entry in catalog() {
        let dg = distinguished_grouplike(&entry.algebra)
            .map_err(|e| format!("{}: {e}", entry.name))?;
        if !dg.report.all_ok() {
            return Err(format!("{}: {:?}", entry.name, dg.report.failures()));
        }
        let group_like_entry = entry.name.starts_with("kc")
            || entry.name.starts_with("ks")
            || entry.name.starts_with("dual_");
        if group_like_entry && dg.gamma.coords != entry.algebra.unit_coords() {
            return Err(format!("{}: gamma differs from the unit", entry.name));
        }
    }
    let s4 = catalog_entry("sweedler4_q").unwrap().algebra;
    let dg = distinguished_grouplike(&s4).map_err(|e| e.to_string())?;
    let field = s4.field();
    let expected: Vec<FieldScalar> =
        [0, 1, 0, 0].iter().map(|&v| field.from_i64(v)).collect();
    if dg.gamma.coords != expected {
        return Err("4-dimensional example: gamma is not the group-like generator".to_string());
    }
    Ok("certified on all 14; unimodular entries give the unit; 4-dim example gives g".to_string())
}

fn doi_round_trips() -> Result<String, String> {
    let mut count = 0;
    for entry in catalog() {
        let h = &entry.algebra;
        for (label, v) in [("trivial", Comodule::trivial(h)), ("regular", Comodule::regular(h))] {
            let iso = doi_iso(&v).map_err(|e| format!("{}/{label}: {e}", entry.name))?;
            if !iso.report.all_ok() {
                return Err(format!("{}/{label}: {:?}", entry.name, iso.report.failures()));
            }
            count += 1;
        }
    }
    Ok(format!("{count} trivializations certified, largest 81x81"))
}

fn sweedler_map_full_rank() -> Result<String, String> {
    for entry in catalog() {
        let pairing = sweedler_iso_check(&entry.algebra)
            .map_err(|e| format!("{}: {e}", entry.name))?;
        if pairing.rank != entry.algebra.dim() || !pairing.report.all_ok() {
            return Err(format!(
                "{}: rank {} of {}",
                entry.name,
                pairing.rank,
                entry.algebra.dim()
            ));
        }
    }
    Ok("bijective on every algebra".to_string())
}

fn free_hom_and_snake_identities() -> Result<String, String> {
    let mut count = 0;
    for entry in catalog() {
        for (label, m) in battery(&entry.algebra) {
            if m.dim() > 9 {
                continue;
            }
            let free = free_hom_iso(&m, 1).map_err(|e| format!("{}/{label}: {e}", entry.name))?;
            if !free.report.all_ok() {
                return Err(format!(
                    "{}/{label} free-hom: {:?}",
                    entry.name,
                    free.report.failures()
                ));
            }
            let duals = ev_db(&m).map_err(|e| format!("{}/{label}: {e}", entry.name))?;
            if !duals.report.all_ok() {
                return Err(format!(
                    "{}/{label} snake: {:?}",
                    entry.name,
                    duals.report.failures()
                ));
            }
            count += 1;
        }
    }
    Ok(format!("{count} comodules of dimension <= 9 certified"))
}

fn structure_map_bijective() -> Result<String, String> {
    for entry in catalog() {
        let h = &entry.algebra;
        for (label, n) in [("trivial", Comodule::trivial(h)), ("regular", Comodule::regular(h))] {
            let report =
                structure_iso_check(&n).map_err(|e| format!("{}/{label}: {e}", entry.name))?;
            if !report.all_ok() {
                return Err(format!("{}/{label}: {:?}", entry.name, report.failures()));
            }
            if regular_hom_dimension(h, &n) != n.dim() {
                return Err(format!("{}/{label}: hom dimension differs", entry.name));
            }
        }
    }
    Ok("bijective and equivariant; hom dimension equals comodule dimension".to_string())
}

fn adjunction_dimensions_and_round_trip() -> Result<String, String> {
    let mut pairs = 0;
    let mut certificates = 0;
    for name in ["sweedler4_q", "kc2_q"] {
        let h = catalog_entry(name).unwrap().algebra;
        let comodules = battery(&h);
        if comodules.len() != 4 {
            return Err(format!("{name}: expected 4 battery comodules"));
        }
        for (mn, m) in &comodules {
            for (nn, n) in &comodules {
                let adj =
                    adjunction_check(m, n).map_err(|e| format!("{name} {mn}/{nn}: {e}"))?;
                if adj.comodule_side_dim != adj.module_side_dim {
                    return Err(format!(
                        "{name} {mn}/{nn}: {} vs {}",
                        adj.comodule_side_dim, adj.module_side_dim
                    ));
                }
                pairs += 1;
            }
        }
        for (nn, n) in &comodules {
            match ut_identity_check(n, SUITE_SEED) {
                Ok(IsoOutcome::Isomorphic(_)) => certificates += 1,
                Ok(IsoOutcome::NotIsomorphic) => {
                    return Err(format!("{name}/{nn}: round trip not isomorphic"))
                }
                Ok(IsoOutcome::Inconclusive) => {
                    return Err(format!("{name}/{nn}: no certificate found"))
                }
                Err(e) => return Err(format!("{name}/{nn}: {e}")),
            }
        }
    }
    Ok(format!("{pairs} hom-dimension pairs equal, {certificates} invertible round-trip certificates"))
}

fn antipode_orders_pinned() -> Result<String, String> {
    for entry in catalog() {
        if !antipode_bijective(&entry.algebra) {
            return Err(format!("{}: antipode not invertible", entry.name));
        }
    }
    for (name, expected) in [("kc2_q", 1u64), ("sweedler4_q", 4), ("taft3_f7", 6)] {
        let h = catalog_entry(name).unwrap().algebra;
        match antipode_order(&h) {
            AntipodeOrder::Finite(m) if m == expected => {}
            AntipodeOrder::Finite(m) => {
                return Err(format!("{name}: order {m}, expected {expected}"))
            }
            AntipodeOrder::NotFinite(bound) => {
                return Err(format!("{name}: no order found up to {bound}"))
            }
        }
    }
    Ok("invertible everywhere; orders 1, 4, 6 match iterated-power oracle".to_string())
}

/// A position in one of the five structure tensors.
enum Spot {
    Mult(usize, usize, usize),
    Comult(usize, usize),
    Unit(usize),
    Counit(usize),
    Antipode(usize, usize),
}

fn negative_controls_and_timing() -> Result<String, String> {
    let h = catalog_entry("sweedler4_q").unwrap().algebra;
    let n = h.dim();
    let field = h.field();
    let one = field.one();

    let mult: Vec<Vec<Vec<FieldScalar>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| h.mult_sc(i, j, k).clone()).collect())
                .collect()
        })
        .collect();
    let comult: Vec<Vec<FieldScalar>> = (0..n)
        .map(|i| (0..n * n).map(|jk| h.comult_sc(i, jk / n, jk % n).clone()).collect())
        .collect();
    let unit = h.unit_coords().to_vec();
    let counit = h.counit_coords().to_vec();
    let antipode: Matrix = h.antipode().clone();

    let spots = vec![
        Spot::Mult(0, 0, 0),
        Spot::Mult(0, 1, 1),
        Spot::Mult(1, 1, 0),
        Spot::Mult(1, 2, 3),
        Spot::Mult(2, 2, 0),
        Spot::Mult(2, 3, 1),
        Spot::Mult(3, 3, 0),
        Spot::Mult(3, 0, 3),
        Spot::Comult(0, 0),
        Spot::Comult(1, 5),
        Spot::Comult(1, 0),
        Spot::Comult(2, 2),
        Spot::Comult(2, 11),
        Spot::Comult(3, 7),
        Spot::Unit(0),
        Spot::Unit(1),
        Spot::Unit(2),
        Spot::Unit(3),
        Spot::Counit(0),
        Spot::Counit(1),
        Spot::Counit(2),
        Spot::Antipode(0, 0),
        Spot::Antipode(1, 1),
        Spot::Antipode(2, 3),
        Spot::Antipode(0, 2),
    ];
    let total_mutations = spots.len();
    for (idx, spot) in spots.into_iter().enumerate() {
        let mut mult2 = mult.clone();
        let mut comult2 = comult.clone();
        let mut unit2 = unit.clone();
        let mut counit2 = counit.clone();
        let mut antipode2 = antipode.clone();
        match spot {
            Spot::Mult(i, j, k) => mult2[i][j][k] = mult2[i][j][k].add(&one),
            Spot::Comult(i, jk) => comult2[i][jk] = comult2[i][jk].add(&one),
            Spot::Unit(i) => unit2[i] = unit2[i].add(&one),
            Spot::Counit(i) => counit2[i] = counit2[i].add(&one),
            Spot::Antipode(i, j) => {
                let bumped = antipode2.get(i, j).add(&one);
                antipode2.set(i, j, bumped);
            }
        }
        let mutant = HopfAlgebra::new(
            field,
            n,
            h.basis_labels().to_vec(),
            mult2,
            unit2,
            comult2,
            counit2,
            antipode2,
        )
        .map_err(|e| format!("mutation {idx} rejected before the axiom gate: {e}"))?;
        if mutant.verify().all_ok() {
            return Err(format!("mutation {idx} passes every axiom"));
        }
    }

    // A corrupted antipode in a document must stop the binary with code 2.
    let bin = env!("CARGO_BIN_EXE_hopfint");
    let dir = TempDir::new().map_err(|e| e.to_string())?;
    let mut doc = HopfFileDocument::from_algebra(&h);
    doc.antipode[0][0] = "0".to_string();
    doc.antipode[1][0] = "1".to_string();
    let bad = dir.path().join("mutated.json");
    std::fs::write(&bad, doc.to_json_string()).map_err(|e| e.to_string())?;
    let out = Command::new(bin)
        .args(["suite", bad.to_str().unwrap()])
        .output()
        .map_err(|e| e.to_string())?;
    if out.status.code() != Some(2) {
        return Err(format!(
            "mutated-antipode document exited {:?}, expected 2",
            out.status.code()
        ));
    }

    // The full suite over the whole catalog has to stay inside one minute.
    let start = Instant::now();
    for entry in catalog() {
        let path = dir.path().join(format!("{}.json", entry.name));
        let doc = HopfFileDocument::from_algebra(&entry.algebra);
        std::fs::write(&path, doc.to_json_string()).map_err(|e| e.to_string())?;
        let out = Command::new(bin)
            .args(["suite", path.to_str().unwrap()])
            .output()
            .map_err(|e| e.to_string())?;
        if out.status.code() != Some(0) {
            return Err(format!("suite failed on {}", entry.name));
        }
    }
    let total = start.elapsed();
    if total >= Duration::from_secs(60) {
        return Err(format!("catalog suite took {} s", total.as_secs()));
    }
    Ok(format!(
        "{total_mutations} single-entry mutations each fail an axiom; corrupted file exits 2; catalog suite in {} ms",
        total.as_millis()
    ))
}

#[test]
fn acceptance() {
    let criteria: Vec<(&str, fn() -> Result<String, String>)> = vec![
        ("integral spaces are one-dimensional on every catalog algebra", one_dimensional_integral_spaces),
        ("left and right integrals vanish together", sides_vanish_together),
        ("distinguished group-like certified and pinned", distinguished_grouplike_pinned),
        ("trivialization round-trips exactly", doi_round_trips),
        ("integral pairing matrix has full rank", sweedler_map_full_rank),
        ("free-hom round-trip and snake identities hold", free_hom_and_snake_identities),
        ("structure map is bijective and equivariant", structure_map_bijective),
        ("adjunction dimensions agree and the round trip certifies", adjunction_dimensions_and_round_trip),
        ("antipode invertible with pinned orders", antipode_orders_pinned),
        ("negative controls fail and the catalog suite is fast", negative_controls_and_timing),
    ];

    let mut failed = 0;
    for (idx, (label, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {:02} pass — {label} ({detail})", idx + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:02} FAIL — {label}: {why}", idx + 1);
            }
        }
    }
    assert_eq!(failed, 0, "{failed} acceptance criteria failed");
}
