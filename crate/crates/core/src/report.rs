//! Command reports: human-readable lines followed by a `[data]` section of
//! `key=value` records with fixed lowercase keys, one per line. Output
//! depends only on the inputs.

use std::fmt;

use crate::algebra::GentleAlgebra;
use crate::error::OracleError;
use crate::ext::{ext1_basis, ext_basis_strings, ext_dim, ext_sequence};
use crate::fuzz::{FuzzReport, Invariant};
use crate::homology::{format_projectives, format_summands, gl_dim_status, resolution};
use crate::modules::StringModule;
use crate::oracle::{check_pair, PairCheck};
use crate::triangulation::Triangulation;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    lines: Vec<String>,
    fields: Vec<(String, String)>,
}

impl Report {
    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn field(&mut self, key: impl Into<String>, value: impl ToString) {
        self.fields.push((key.into(), value.to_string()));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.fields
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn fields(&self) -> &[(String, String)] {
        &self.fields
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.lines {
            writeln!(f, "{l}")?;
        }
        writeln!(f)?;
        writeln!(f, "[data]")?;
        for (k, v) in &self.fields {
            writeln!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn check_report(a: &GentleAlgebra) -> Report {
    let mut r = Report::default();
    let cycles: Vec<String> = a
        .relation_cycles()
        .iter()
        .map(|c| a.cycle_display(c))
        .collect();
    let gl = gl_dim_status(a);
    r.line(format!(
        "gentle algebra: {} vertices, {} arrows, {} relations",
        a.vertex_count(),
        a.arrow_count(),
        a.relations().len()
    ));
    r.line(format!("relation cycles: [{}]", cycles.join(", ")));
    r.line(format!("global dimension: {gl}"));
    r.field("status", "ok");
    r.field("vertices", a.vertex_count());
    r.field("arrows", a.arrow_count());
    r.field("relations", a.relations().len());
    r.field("cycles", format!("[{}]", cycles.join(",")));
    r.field("gldim", gl);
    r
}

pub fn ext_report(
    a: &GentleAlgebra,
    m: &StringModule,
    n: &StringModule,
    max: usize,
    basis: bool,
) -> Report {
    let mut r = Report::default();
    let dims: Vec<usize> = (1..=max).map(|d| ext_dim(a, m, n, d)).collect();
    let seq = ext_sequence(a, m, n);
    r.line(format!(
        "Ext^i({}, {}) for i = 1..{max}",
        m.text(a),
        n.text(a)
    ));
    r.line(format!("dims: {}", join(&dims)));
    r.line(format!(
        "sequence: prefix [{}], period {}, block [{}] from degree {}: {}",
        join(&seq.prefix),
        seq.period,
        join(&seq.block),
        seq.tail_start(),
        seq.classification()
    ));
    if basis {
        for d in 1..=max {
            let mids: Vec<String> = if d == 1 {
                ext1_basis(a, m, n)
                    .iter()
                    .map(|e| {
                        e.middle
                            .iter()
                            .map(|w| w.text(a))
                            .collect::<Vec<_>>()
                            .join(" ⊕ ")
                    })
                    .collect()
            } else {
                ext_basis_strings(a, m, n, d)
                    .iter()
                    .map(|w| w.text(a))
                    .collect()
            };
            for (i, mid) in mids.iter().enumerate() {
                r.line(format!("  degree {d} basis {i}: middle {mid}"));
            }
        }
    }
    r.field("from", m.text(a));
    r.field("to", n.text(a));
    r.field("ext.dims", join(&dims));
    for (i, d) in dims.iter().enumerate() {
        r.field(format!("ext.dim.{}", i + 1), d);
    }
    r.field("seq.prefix", join(&seq.prefix));
    r.field("seq.tail_start", seq.tail_start());
    r.field("seq.period", seq.period);
    r.field("seq.block", join(&seq.block));
    r.field("seq.class", seq.classification());
    r
}

pub fn resolve_report(a: &GentleAlgebra, m: &StringModule, depth: usize) -> Report {
    let mut r = Report::default();
    let res = resolution(a, m, depth);
    r.line(format!("minimal projective resolution of {}", m.text(a)));
    let terms: Vec<String> = res
        .degrees
        .iter()
        .map(|d| format_projectives(a, &d.projectives))
        .collect();
    for (i, d) in res.degrees.iter().enumerate() {
        r.line(format!(
            "  P{i} = {}   Ω^{} = {}",
            terms[i],
            i + 1,
            format_summands(a, &d.syzygy)
        ));
    }
    r.line(format!("terms: {}", terms.join("; ")));
    match (res.tail, res.length) {
        (Some(t), _) => r.line(format!("tail period {} from degree {}", t.period, t.start)),
        (None, Some(l)) => r.line(format!("projective dimension {l}")),
        (None, None) => {}
    }
    r.field("module", m.text(a));
    for (i, t) in terms.iter().enumerate() {
        r.field(format!("res.deg.{i}"), t);
    }
    match (res.tail, res.length) {
        (Some(t), _) => {
            r.field("res.tail.start", t.start);
            r.field("res.tail.period", t.period);
            r.field("res.pd", "infinite");
        }
        (None, Some(l)) => r.field("res.pd", l),
        (None, None) => {}
    }
    r
}

/// Report and verdict of the two-pipeline comparison.
pub fn oracle_report(
    a: &GentleAlgebra,
    m: &StringModule,
    n: &StringModule,
    max: usize,
) -> Result<(Report, PairCheck), OracleError> {
    let pc = check_pair(a, m, n, max)?;
    let mut r = Report::default();
    r.line(format!(
        "Ext^i({}, {}) for i = 1..{max}",
        m.text(a),
        n.text(a)
    ));
    r.line(format!("combinatorial: {}", join(&pc.combinatorial)));
    r.line(format!("oracle:        {}", join(&pc.oracle)));
    r.line(format!(
        "syzygy dims {} / {}",
        join(&pc.syzygy_dims.0),
        join(&pc.syzygy_dims.1)
    ));
    r.line(format!(
        "cosyzygy dims {} / {}",
        join(&pc.cosyzygy_dims.0),
        join(&pc.cosyzygy_dims.1)
    ));
    match pc.first_mismatch() {
        None => r.line("agreement: full"),
        Some(m) => r.line(format!("MISMATCH: {m}")),
    }
    r.field("combinatorial", join(&pc.combinatorial));
    r.field("oracle", join(&pc.oracle));
    r.field("agree", pc.agrees());
    Ok((r, pc))
}

pub fn fuzz_report(f: &FuzzReport) -> Report {
    let mut r = Report::default();
    let c = &f.config;
    r.line(format!(
        "fuzz seed {} count {} horizon {}: {}",
        c.seed,
        c.count,
        c.horizon,
        if f.passed() { "pass" } else { "FAIL" }
    ));
    r.line(format!(
        "algebras with relation cycles: {}, periodic pairs: {}",
        f.algebras_with_cycles, f.periodic_pairs
    ));
    for inv in Invariant::ALL {
        r.line(format!(
            "  {:<15} checks {:>6}  violations {}",
            inv.key(),
            f.checks.get(&inv).copied().unwrap_or(0),
            f.violations_of(inv)
        ));
    }
    let rg = &f.rigidity;
    r.line(format!(
        "self-extensions of R(α), (rigid, not rigid): pd ≤ 2 {:?}, pd ≥ 2 {:?}, pd ≥ 2 without loops {:?}",
        rg.pd_at_most_2, rg.pd_at_least_2, rg.loop_free_pd_at_least_2
    ));
    let mut shown = Vec::new();
    for v in &f.violations {
        if shown.contains(&v.invariant) {
            continue;
        }
        shown.push(v.invariant);
        r.line(format!(
            "reproducer for {} (instance {}): {}",
            v.invariant, v.instance, v.detail
        ));
        r.line(format!("  subjects: {}", v.subjects.join(" | ")));
        for l in v.algebra.lines() {
            r.line(format!("  {l}"));
        }
    }
    r.field("seed", c.seed);
    r.field("count", c.count);
    r.field("horizon", c.horizon);
    r.field("status", if f.passed() { "pass" } else { "fail" });
    for inv in Invariant::ALL {
        r.field(
            format!("checks.{}", inv.key()),
            f.checks.get(&inv).copied().unwrap_or(0),
        );
        r.field(format!("violations.{}", inv.key()), f.violations_of(inv));
    }
    r.field("rigidity.pd_le_2.rigid", rg.pd_at_most_2.0);
    r.field("rigidity.pd_le_2.not_rigid", rg.pd_at_most_2.1);
    r.field("rigidity.pd_ge_2.rigid", rg.pd_at_least_2.0);
    r.field("rigidity.pd_ge_2.not_rigid", rg.pd_at_least_2.1);
    r.field(
        "rigidity.loop_free_pd_ge_2.rigid",
        rg.loop_free_pd_at_least_2.0,
    );
    r.field(
        "rigidity.loop_free_pd_ge_2.not_rigid",
        rg.loop_free_pd_at_least_2.1,
    );
    r.field("rigidity.disagreements", rg.disagreements);
    r
}

pub fn tri_report(t: &Triangulation, a: &GentleAlgebra) -> Report {
    let mut r = Report::default();
    let three = a.relation_cycles().iter().filter(|c| c.len() == 3).count();
    r.line(format!(
        "triangulation: {} triangles, {} internal edges",
        t.triangle_count(),
        t.internal_edges().len()
    ));
    r.line(format!(
        "algebra: {} vertices, {} arrows, {} relations",
        a.vertex_count(),
        a.arrow_count(),
        a.relations().len()
    ));
    let cycles: Vec<String> = a
        .relation_cycles()
        .iter()
        .map(|c| a.cycle_display(c))
        .collect();
    r.line(format!(
        "relation 3-cycles: {three} [{}]",
        cycles.join(", ")
    ));
    r.field("triangles", t.triangle_count());
    r.field("vertices", a.vertex_count());
    r.field("arrows", a.arrow_count());
    r.field("relations", a.relations().len());
    r.field("cycles.len3", three);
    r.field("cycles.other", a.relation_cycles().len() - three);
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn m(a: &GentleAlgebra, s: &str) -> StringModule {
        StringModule::parse(a, s).unwrap()
    }

    #[test]
    fn check_c4() {
        let r = check_report(&fixtures::c4());
        assert_eq!(r.get("cycles"), Some("[(b,g,d,a)]"));
        assert_eq!(r.get("gldim"), Some("infinite"));
        assert_eq!(check_report(&fixtures::lin()).get("gldim"), Some("2"));
    }

    #[test]
    fn ext_fields() {
        let a = fixtures::c4();
        let r = ext_report(&a, &m(&a, "e"), &m(&a, "f"), 12, true);
        assert_eq!(r.get("ext.dims"), Some("0,1,0,0,0,1,0,0,0,1,0,0"));
        assert_eq!(r.get("seq.period"), Some("4"));
        assert_eq!(r.get("ext.dim.2"), Some("1"));
        let t = fixtures::tri3();
        let r = ext_report(&t, &m(&t, "@x"), &m(&t, "@x"), 9, false);
        assert_eq!(r.get("ext.dims"), Some("0,0,1,0,0,1,0,0,1"));
        assert_eq!(r.get("seq.period"), Some("3"));
    }

    #[test]
    fn resolve_fields() {
        let a = fixtures::lin();
        let r = resolve_report(&a, &m(&a, "f"), 6);
        let terms: Vec<&str> = (0..4)
            .map(|i| r.get(&format!("res.deg.{i}")).unwrap())
            .collect();
        assert_eq!(terms, ["P_4", "P_1", "P_2", "0"]);
        assert_eq!(r.get("res.pd"), Some("2"));
    }

    #[test]
    fn output_is_stable() {
        let a = fixtures::c4();
        let x = ext_report(&a, &m(&a, "e"), &m(&a, "f"), 8, true).to_string();
        let y = ext_report(&a, &m(&a, "e"), &m(&a, "f"), 8, true).to_string();
        assert_eq!(x, y);
        assert!(x.contains("\n[data]\nfrom=e\n"));
    }

    #[test]
    fn tri_hex() {
        let t = fixtures::hex();
        let r = tri_report(&t, &t.algebra().unwrap());
        assert_eq!(r.get("cycles.len3"), Some("1"));
        assert_eq!(r.get("vertices"), Some("3"));
    }
}
