//! Plain-text renderings of the reports.

use std::fmt::Write;

use modquot_core::catalog::CatalogEntry;
use modquot_core::certify::{Certificate, CoordStatus, Coordinate, DiffStatus, Ingredients, TableReport, Verdict};
use modquot_core::picard::FullDivisorClass;
use modquot_core::selfcheck::SelfCheckReport;
use modquot_core::symmetry::ProfileDivisorClass;
use modquot_core::Rational;
use serde_json::json;

fn thirteen() -> Rational {
    Rational::from_int(13)
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn describe_input(ing: &Ingredients) -> String {
    let entries: Vec<String> = ing.input.entries.iter().map(|e| e.to_string()).collect();
    format!("g = {}, blocks {:?}, divisors [{}]", ing.input.g, ing.input.blocks, entries.join(","))
}

pub fn verdict(v: &Verdict) -> String {
    let mut s = String::new();
    writeln!(s, "M({},{}) / {}: {}", v.g, v.n, v.group, v.classification).unwrap();
    for (k, step) in v.justification.iter().enumerate() {
        writeln!(s, "  {}. {} [{}]: {}", k + 1, step.rule, step.reference, step.detail).unwrap();
    }
    for note in &v.notes {
        writeln!(s, "  note: {note}").unwrap();
    }
    s
}

pub fn fm(ing: &Ingredients, passed: bool) -> String {
    let mut s = String::new();
    writeln!(s, "{}", describe_input(ing)).unwrap();
    writeln!(s, "  s(g) = {}   ε = {}   η = {}", ing.slope.slope, ing.epsilon, ing.eta).unwrap();
    writeln!(s, "  a(g,n) = {}   b(g,n) = {}", ing.a, ing.b).unwrap();
    writeln!(s, "  f = {} = {}", ing.f, ing.f.relative_to(&thirteen())).unwrap();
    writeln!(s, "{}: f {} 13", pass(passed), if passed { "≤" } else { ">" }).unwrap();
    s
}

pub fn fm_json(ing: &Ingredients, passed: bool) -> serde_json::Value {
    json!({
        "input": ing.input,
        "slope": ing.slope,
        "epsilon": ing.epsilon,
        "eta": ing.eta,
        "a": ing.a,
        "b": ing.b,
        "f": ing.f,
        "f_relative": ing.f.relative_to(&thirteen()),
        "passed": passed,
    })
}

pub fn certificate(c: &Certificate) -> String {
    let ing = &c.ingredients;
    let mut s = String::new();
    writeln!(s, "certificate for {}", describe_input(ing)).unwrap();
    writeln!(s, "  slope s(g) = {} ({:?})", ing.slope.slope, ing.slope.provenance).unwrap();
    writeln!(s, "  ε = {}   η = {}", ing.epsilon, ing.eta).unwrap();
    writeln!(s, "  multipliers: D {}  L {}  W {}  ψ {}", ing.mult_d, ing.mult_l, ing.mult_w, ing.eta).unwrap();
    writeln!(s, "  f = {}", ing.f.relative_to(&thirteen())).unwrap();
    let (mut exact, mut bound, mut open) = (0, 0, 0);
    for st in c.status.values() {
        match st {
            CoordStatus::ProvedExact => exact += 1,
            CoordStatus::ProvedByBound(_) => bound += 1,
            CoordStatus::Unproved => open += 1,
        }
    }
    writeln!(s, "  coordinates: {exact} proved exactly, {bound} proved by bounds, {open} unproved").unwrap();
    writeln!(s, "  λ remainder = {}", c.remainder.lambda()).unwrap();
    for coord in c.unproved() {
        let v = match coord {
            Coordinate::Lambda => c.remainder.lambda().clone(),
            Coordinate::Irr => c.remainder.irr().clone(),
            Coordinate::Psi(k) => c.remainder.psi(*k).clone(),
            Coordinate::Boundary(p) => c.remainder.at(p),
        };
        writeln!(s, "  unproved {coord}: {v}").unwrap();
    }
    for (a, count) in c.assumption_usage() {
        let kind = if a.is_declared() { "declared" } else { "quoted" };
        writeln!(s, "  assumption {a:?} ({kind}) used by {count} coordinates").unwrap();
    }
    writeln!(s, "verdict: {:?}", c.grade).unwrap();
    s
}

pub fn catalog(e: &CatalogEntry) -> String {
    let js = e.to_json();
    let mut s = String::new();
    writeln!(s, "{} on M({},{}): {}", js.name, js.g, js.n, js.provenance).unwrap();
    writeln!(s, "  λ {}   ψ {}   δ_irr {}   δ_{{0,2}} {}", js.lambda, js.psi, js.irr, js.pair).unwrap();
    for b in &js.bounds {
        writeln!(s, "  {}: ≤ {} ({})", b.family, b.bound.hi, b.notes.join("; ")).unwrap();
    }
    s
}

pub fn profile_class(x: &ProfileDivisorClass) -> String {
    let mut s = String::new();
    writeln!(s, "class on M({},{}) with blocks {}", x.space().g, x.space().n, x.partition()).unwrap();
    writeln!(s, "  λ {}", x.lambda()).unwrap();
    writeln!(s, "  δ_irr {}", x.irr()).unwrap();
    for (k, c) in x.psi_all().iter().enumerate() {
        writeln!(s, "  Ψ_{} {c}", k + 1).unwrap();
    }
    for (p, c) in x.profile_entries() {
        if !c.is_zero() {
            writeln!(s, "  δ{p} {c}").unwrap();
        }
    }
    s
}

pub fn full_class(x: &FullDivisorClass) -> String {
    let mut s = String::new();
    writeln!(s, "class on M({},{})", x.space().g, x.space().n).unwrap();
    writeln!(s, "  λ {}", x.lambda()).unwrap();
    writeln!(s, "  δ_irr {}", x.irr()).unwrap();
    for (l, c) in x.psi_entries() {
        writeln!(s, "  ψ_{l} {c}").unwrap();
    }
    for (key, c) in x.boundary_entries() {
        if !c.is_zero() {
            writeln!(s, "  δ_{{{},{:?}}} {c}", key.i, key.labels()).unwrap();
        }
    }
    s
}

pub fn tables(r: &TableReport) -> String {
    let mut s = String::new();
    match r {
        TableReport::Stored(t) => {
            writeln!(s, "{}: {}", t.table, t.description).unwrap();
            for row in &t.rows {
                writeln!(s, "  g = {:2}  n_min = {}", row.g, row.n_min).unwrap();
            }
        }
        TableReport::Diff(d) => {
            let show = |n: Option<u32>| n.map_or_else(|| "-".to_string(), |n| n.to_string());
            writeln!(s, "  g  table  closed  general  status").unwrap();
            for row in &d.rows {
                let status = match row.status {
                    DiffStatus::Match => "match",
                    DiffStatus::Exception => "exception",
                    DiffStatus::Mismatch => "MISMATCH",
                };
                write!(s, " {:2}  {:>5}  {:>6}  {:>7}  {status}", row.g, row.table, show(row.closed), show(row.general)).unwrap();
                if let Some(note) = &row.note {
                    write!(s, " ({note})").unwrap();
                }
                writeln!(s).unwrap();
            }
            writeln!(s, "{}", pass(d.all_match())).unwrap();
        }
    }
    s
}

pub fn selfcheck(r: &SelfCheckReport) -> String {
    let mut s = String::new();
    for c in &r.checks {
        writeln!(s, "{} {} ({} cases){}", pass(c.passed), c.name, c.cases, if c.passed { String::new() } else { format!(": {}", c.detail) }).unwrap();
    }
    writeln!(s, "{}", pass(r.passed())).unwrap();
    s
}
