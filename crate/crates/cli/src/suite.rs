//! Named check batteries over a verified Hopf algebra. Every battery
//! returns an ordered list of records; the full suite is their fixed
//! concatenation, so reports are deterministic byte-for-byte.

use serde_json::json;

use hopfint_core::comodule::{
    comodule_hom, doi_iso, dual_comodule, free_hom_iso, ev_db, internal_hom_check, Comodule, IsoOutcome,
};
use hopfint_core::error::Error;
use hopfint_core::functors::{
    adjunction_check, exact_sequence_check, hom_functor, left_adjoint, structure_iso_check,
    ut_identity_check,
};
use hopfint_core::hopf::HopfAlgebra;
use hopfint_core::integrals::{
    antipode_bijective, antipode_order, distinguished_grouplike, gamma_comodule, integral_space,
    sweedler_iso_check, uniqueness_check, AntipodeOrder, Side,
};
use hopfint_core::scalar::FieldScalar;

use crate::report::{CheckRecord, CheckStatus};

/// Seed of the pseudo-random isomorphism-certificate search, fixed so
/// every report is reproducible.
pub const SUITE_SEED: u64 = 7;

/// Largest dimension product admitted to the currying battery.
const CURRYING_CAP: usize = 81;

/// Largest `x * dim(M) * dim(H)^2` admitted to the free-hom battery.
const FREE_HOM_CAP: usize = 1600;

fn scalar_strings(v: &[FieldScalar]) -> Vec<String> {
    v.iter().map(|s| s.to_canonical_string()).collect()
}

fn err_record(name: impl Into<String>, e: &Error) -> CheckRecord {
    CheckRecord::of_bool(name, false).with_witness(json!({ "error": e.to_string() }))
}

/// The standard comodules every battery cycles through. The line on
/// the distinguished group-like is included when it exists.
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

pub fn verify_checks(h: &HopfAlgebra) -> Vec<CheckRecord> {
    CheckRecord::from_axiom_report("verify", &h.verify())
}

pub fn integrals_checks(h: &HopfAlgebra, side: Side) -> Vec<CheckRecord> {
    let space = integral_space(h, side);
    let side_name = match side {
        Side::Left => "left",
        Side::Right => "right",
    };
    vec![CheckRecord::of_bool(
        format!("integrals.{side_name}.dimension_is_one"),
        space.dim() == 1,
    )
    .with_witness(json!({
        "dimension": space.dim(),
        "basis": space.basis.iter().map(|b| scalar_strings(b)).collect::<Vec<_>>(),
    }))]
}

pub fn uniqueness_checks(h: &HopfAlgebra) -> Vec<CheckRecord> {
    let u = uniqueness_check(h);
    let mut records = CheckRecord::from_axiom_report("uniqueness", &u.report);
    if let Some(first) = records.first_mut() {
        first.witness = Some(json!({
            "right_dimension": u.right_dim,
            "left_dimension": u.left_dim,
        }));
    }
    records
}

pub fn grouplike_checks(h: &HopfAlgebra) -> Vec<CheckRecord> {
    match distinguished_grouplike(h) {
        Ok(dg) => {
            let mut records = CheckRecord::from_axiom_report("grouplike", &dg.report);
            if let Some(first) = records.first_mut() {
                first.witness = Some(json!({
                    "gamma": scalar_strings(&dg.gamma.coords),
                    "right_integral": scalar_strings(&dg.integral),
                }));
            }
            records
        }
        Err(e) => vec![err_record("grouplike.computed", &e)],
    }
}

pub fn gamma_line_checks(h: &HopfAlgebra) -> Vec<CheckRecord> {
    match gamma_comodule(h) {
        Ok(line) => CheckRecord::from_axiom_report("gamma_line", &line.report),
        Err(e) => vec![err_record("gamma_line.computed", &e)],
    }
}

pub fn sweedler_checks(h: &HopfAlgebra) -> Vec<CheckRecord> {
    match sweedler_iso_check(h) {
        Ok(pairing) => {
            let mut records = CheckRecord::from_axiom_report("dual_pairing", &pairing.report);
            if let Some(first) = records.first_mut() {
                first.witness = Some(json!({
                    "rank": pairing.rank,
                    "kernel_dimension": pairing.kernel.len(),
                }));
            }
            records
        }
        Err(e) => vec![err_record("dual_pairing.computed", &e)],
    }
}

pub fn phi_star_checks(h: &HopfAlgebra) -> Vec<CheckRecord> {
    match hopfint_core::integrals::phi_star_check(h) {
        Ok(report) => CheckRecord::from_axiom_report("integral_pairing", &report),
        Err(e) => vec![err_record("integral_pairing.computed", &e)],
    }
}

pub fn antipode_checks(h: &HopfAlgebra) -> Vec<CheckRecord> {
    let mut records = vec![CheckRecord::of_bool(
        "antipode.bijective",
        antipode_bijective(h),
    )];
    match antipode_order(h) {
        AntipodeOrder::Finite(m) => {
            records.push(CheckRecord::pass("antipode.finite_order").with_witness(json!({ "order": m })));
        }
        AntipodeOrder::NotFinite(bound) => {
            records.push(
                CheckRecord::of_bool("antipode.finite_order", false)
                    .with_witness(json!({ "searched_up_to": bound })),
            );
        }
    }
    records
}

pub fn doi_checks(h: &HopfAlgebra) -> Vec<CheckRecord> {
    let mut records = Vec::new();
    for (name, v) in [
        ("trivial", Comodule::trivial(h)),
        ("regular", Comodule::regular(h)),
    ] {
        match doi_iso(&v) {
            Ok(iso) => records
                .extend(CheckRecord::from_axiom_report(&format!("doi.{name}"), &iso.report)),
            Err(e) => records.push(err_record(format!("doi.{name}"), &e)),
        }
    }
    records
}

pub fn free_hom_checks(h: &HopfAlgebra) -> Vec<CheckRecord> {
    let n = h.dim();
    let mut records = Vec::new();
    for (name, m) in battery(h) {
        for x in [1usize, 2] {
            if x * m.dim() * n * n > FREE_HOM_CAP {
                continue;
            }
            match free_hom_iso(&m, x) {
                Ok(iso) => records.extend(CheckRecord::from_axiom_report(
                    &format!("free_hom.{name}.x{x}"),
                    &iso.report,
                )),
                Err(e) => records.push(err_record(format!("free_hom.{name}.x{x}"), &e)),
            }
        }
    }
    records
}

pub fn snake_checks(h: &HopfAlgebra) -> Vec<CheckRecord> {
    let mut records = Vec::new();
    for (name, m) in battery(h) {
        match ev_db(&m) {
            Ok(evdb) => records
                .extend(CheckRecord::from_axiom_report(&format!("snake.{name}"), &evdb.report)),
            Err(e) => records.push(err_record(format!("snake.{name}"), &e)),
        }
    }
    records
}

pub fn currying_checks(h: &HopfAlgebra) -> Vec<CheckRecord> {
    let comodules = battery(h);
    let mut records = Vec::new();
    for (mn, m) in &comodules {
        for (nn, n) in &comodules {
            for (pn, p) in &comodules {
                if m.dim() * n.dim() * p.dim() > CURRYING_CAP {
                    continue;
                }
                let label = format!("currying.{mn}_{nn}_{pn}");
                match internal_hom_check(m, n, p) {
                    Ok(report) => {
                        records.extend(CheckRecord::from_axiom_report(&label, &report))
                    }
                    Err(e) => records.push(err_record(label, &e)),
                }
            }
        }
    }
    records
}

pub fn structure_checks(h: &HopfAlgebra) -> Vec<CheckRecord> {
    let mut records = Vec::new();
    for (name, n) in [
        ("trivial", Comodule::trivial(h)),
        ("regular", Comodule::regular(h)),
    ] {
        match structure_iso_check(&n) {
            Ok(report) => records
                .extend(CheckRecord::from_axiom_report(&format!("structure.{name}"), &report)),
            Err(e) => records.push(err_record(format!("structure.{name}"), &e)),
        }
    }
    records
}

pub fn t_u_checks(h: &HopfAlgebra) -> Vec<CheckRecord> {
    let mut records = Vec::new();
    for (name, n) in battery(h) {
        match hom_functor(&n) {
            Ok(t) => {
                records.extend(CheckRecord::from_axiom_report(&format!("functor.t.{name}"), &t.report));
                records.push(
                    CheckRecord::of_bool(
                        format!("functor.t.{name}.dimension_matches"),
                        t.module.dim() == n.dim(),
                    )
                    .with_witness(json!({ "module_dimension": t.module.dim() })),
                );
            }
            Err(e) => records.push(err_record(format!("functor.t.{name}"), &e)),
        }
        match left_adjoint(&n) {
            Ok(u) => records
                .extend(CheckRecord::from_axiom_report(&format!("functor.u.{name}"), &u.report)),
            Err(e) => records.push(err_record(format!("functor.u.{name}"), &e)),
        }
    }
    records
}

pub fn adjunction_checks(h: &HopfAlgebra) -> Vec<CheckRecord> {
    let comodules = battery(h);
    let mut records = Vec::new();
    for (mn, m) in &comodules {
        for (nn, n) in &comodules {
            let label = format!("adjunction.{mn}__{nn}");
            match adjunction_check(m, n) {
                Ok(adj) => records.push(
                    CheckRecord::of_bool(&label, adj.report.all_ok()).with_witness(json!({
                        "comodule_side_dimension": adj.comodule_side_dim,
                        "module_side_dimension": adj.module_side_dim,
                    })),
                ),
                Err(e) => records.push(err_record(label, &e)),
            }
        }
    }
    for (name, n) in [
        ("trivial", Comodule::trivial(h)),
        ("regular", Comodule::regular(h)),
    ] {
        let label = format!("adjunction.round_trip.{name}");
        match ut_identity_check(&n, SUITE_SEED) {
            Ok(IsoOutcome::Isomorphic(_)) => records.push(CheckRecord::pass(label)),
            Ok(IsoOutcome::NotIsomorphic) => records.push(CheckRecord::of_bool(label, false)),
            Ok(IsoOutcome::Inconclusive) => records.push(CheckRecord {
                name: label,
                status: CheckStatus::Inconclusive,
                witness: None,
            }),
            Err(e) => records.push(err_record(label, &e)),
        }
    }
    records
}

pub fn exact_sequence_checks(h: &HopfAlgebra) -> Vec<CheckRecord> {
    match exact_sequence_check(h) {
        Ok(report) => CheckRecord::from_axiom_report("exact_sequence", &report),
        Err(e) => vec![err_record("exact_sequence.computed", &e)],
    }
}

/// Every battery, in a fixed order.
pub fn suite_checks(h: &HopfAlgebra) -> Vec<CheckRecord> {
    let mut records = Vec::new();
    records.extend(verify_checks(h));
    records.extend(uniqueness_checks(h));
    records.extend(integrals_checks(h, Side::Right));
    records.extend(integrals_checks(h, Side::Left));
    records.extend(grouplike_checks(h));
    records.extend(gamma_line_checks(h));
    records.extend(sweedler_checks(h));
    records.extend(phi_star_checks(h));
    records.extend(antipode_checks(h));
    records.extend(doi_checks(h));
    records.extend(free_hom_checks(h));
    records.extend(snake_checks(h));
    records.extend(currying_checks(h));
    records.extend(structure_checks(h));
    records.extend(t_u_checks(h));
    records.extend(adjunction_checks(h));
    records.extend(exact_sequence_checks(h));
    records
}

/// Hom-dimension sanity used by acceptance tooling: the hom space out
/// of the regular comodule has the dimension of the target.
pub fn regular_hom_dimension(h: &HopfAlgebra, n: &Comodule) -> usize {
    comodule_hom(&Comodule::regular(h), n).map(|b| b.len()).unwrap_or(0)
}
