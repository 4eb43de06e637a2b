//! One line per acceptance criterion, `criterion N: PASS` or `FAIL` with a
//! short reason. Runs without the libtest harness so the lines are always
//! shown. Criteria whose statement is contradicted by the exact
//! oracle are reported as failures; the test then checks that the
//! counterexample is genuine instead of hiding it.

use std::time::{Duration, Instant};

use gentle::ext::{ext_dim, ext_sequence, ExtClass};
use gentle::format::parse_algebra;
use gentle::fuzz::{self, all_strings, FuzzConfig, FuzzReport, Invariant};
use gentle::homology::{band_inj_dim, band_proj_dim, format_projectives, resolution, Tail};
use gentle::oracle::{ext_dims_oracle, inj_dim_oracle, proj_dim_oracle, Representation};
use gentle::triangulation::{all_cycles_triangles, period3_check, random_disk, Triangulation};
use gentle::{fixtures, Band, BandModule, GentleAlgebra, StringModule};

struct Outcome {
    pass: bool,
    note: String,
    /// For a failing criterion: the failure was confirmed independently.
    confirmed: bool,
}

fn pass(note: impl Into<String>) -> Outcome {
    Outcome {
        pass: true,
        note: note.into(),
        confirmed: false,
    }
}

fn fail(note: impl Into<String>) -> Outcome {
    Outcome {
        pass: false,
        note: note.into(),
        confirmed: false,
    }
}

fn check(ok: bool, good: impl Into<String>, bad: impl Into<String>) -> Outcome {
    if ok {
        pass(good)
    } else {
        fail(bad)
    }
}

fn m(a: &GentleAlgebra, s: &str) -> StringModule {
    StringModule::parse(a, s).unwrap()
}

fn dims(a: &GentleAlgebra, x: &StringModule, y: &StringModule, upto: usize) -> Vec<usize> {
    (1..=upto).map(|d| ext_dim(a, x, y, d)).collect()
}

fn oracle(a: &GentleAlgebra, x: &StringModule, y: &StringModule, upto: usize) -> Vec<usize> {
    let (rx, ry) = (
        Representation::from_module(a, x),
        Representation::from_module(a, y),
    );
    ext_dims_oracle(a, &rx, &ry, upto).unwrap()[1..].to_vec()
}

fn fast(t: Instant) -> bool {
    t.elapsed() < Duration::from_secs(1)
}

fn c1() -> Outcome {
    let t = Instant::now();
    let a = fixtures::c4();
    let (x, y) = (m(&a, "e"), m(&a, "f"));
    let got = dims(&a, &x, &y, 14);
    let seq = ext_sequence(&a, &x, &y);
    let ok = got == [0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1]
        && seq.classification() == ExtClass::Periodic(4)
        && seq.tail_start() == 2
        && fast(t);
    check(
        ok,
        format!("{got:?}, period 4 from degree 2"),
        format!("{got:?} {seq:?}"),
    )
}

fn c2() -> Outcome {
    let t = Instant::now();
    let a = fixtures::c4();
    let (x, y) = (m(&a, "f"), m(&a, "e"));
    let got = dims(&a, &x, &y, 6);
    let ok = got[..5] == [0, 1, 0, 0, 0] && got[5] == 1 && fast(t);
    let or = oracle(&a, &x, &y, 6);
    check(
        ok && or == got,
        format!("{got:?}, oracle agrees"),
        format!("{got:?} vs oracle {or:?}"),
    )
}

fn c3() -> Outcome {
    let t = Instant::now();
    let a = fixtures::lin();
    let (x, y) = (m(&a, "f"), m(&a, "e"));
    let res = resolution(&a, &x, 6);
    let terms: Vec<String> = res
        .degrees
        .iter()
        .take(4)
        .map(|d| format_projectives(&a, &d.projectives))
        .collect();
    let got = dims(&a, &x, &y, 14);
    let mut expect = vec![0; 14];
    expect[1] = 1;
    let projective = y.is_projective(&a)
        && all_strings(&a, 4)
            .iter()
            .all(|w| (1..=6).all(|d| ext_dim(&a, &y, &StringModule::new(&a, w), d) == 0));
    let ok = terms == ["P_4", "P_1", "P_2", "0"] && got == expect && projective && fast(t);
    check(
        ok,
        format!("resolution {}; Ext {got:?}; N projective", terms.join(", ")),
        format!("{terms:?} {got:?} projective={projective}"),
    )
}

fn c4() -> Outcome {
    let a = fixtures::c4();
    let res = resolution(&a, &m(&a, "f"), 9);
    let terms: Vec<String> = res
        .degrees
        .iter()
        .map(|d| format_projectives(&a, &d.projectives))
        .collect();
    let ok = terms[..5] == ["P_4", "P_1", "P_2", "P_6", "P_5"]
        && res.tail
            == Some(Tail {
                start: 1,
                period: 4,
            });
    check(
        ok,
        format!("{}; tail period 4 from degree 1", terms[..5].join("; ")),
        format!("{terms:?} {:?}", res.tail),
    )
}

fn corpus() -> FuzzReport {
    fuzz::run(&FuzzConfig {
        seed: 1,
        count: 200,
        horizon: 6,
    })
}

fn c5(f: &FuzzReport, elapsed: Duration) -> Outcome {
    let checks = f.checks[&Invariant::Oracle];
    check(
        f.violations_of(Invariant::Oracle) == 0
            && checks >= 1000
            && elapsed < Duration::from_secs(300),
        format!(
            "{checks} pairs over 200 algebras, degrees 1..6, syzygy and cosyzygy dims, all agree"
        ),
        format!("{} oracle mismatches", f.violations_of(Invariant::Oracle)),
    )
}

fn zero(f: &FuzzReport, inv: Invariant, what: &str) -> Outcome {
    let n = f.violations_of(inv);
    check(
        n == 0,
        format!("{} {what}, zero violations", f.checks[&inv]),
        format!("{n} violations of {inv}"),
    )
}

/// A relation 7-cycle with both ends of `Ω¹(M(a10 a8))` on it; the string
/// starts and ends at v6 and takes the connecting arrow at either end.
const SEVEN_CYCLE: &str = "\
vertex v1
vertex v2
vertex v3
vertex v4
vertex v5
vertex v6
arrow a1 v2 v4
arrow a2 v5 v3
arrow a5 v4 v6
arrow a6 v2 v5
arrow a7 v4 v2
arrow a8 v1 v6
arrow a9 v6 v2
arrow a10 v6 v1
arrow a11 v3 v4
rel a1 a5
rel a2 a11
rel a5 a9
rel a6 a2
rel a7 a1
rel a8 a10
rel a9 a6
rel a11 a7
";

fn c8(f: &FuzzReport) -> Outcome {
    let n = f.violations_of(Invariant::WindowSum);
    if n == 0 {
        return zero(f, Invariant::WindowSum, "periodic tails");
    }
    // independent confirmation: a single degree already exceeds 2, so no
    // choice of window length rescues the bound
    let a = parse_algebra(SEVEN_CYCLE).unwrap();
    let x = m(&a, "a10 a8");
    let seq = ext_sequence(&a, &x, &x);
    let got = dims(&a, &x, &x, 9);
    let or = oracle(&a, &x, &x, 9);
    let mut out = fail(format!(
        "{n} corpus tails exceed 2; e.g. Ext^i(M,M) for M = M(a10 a8) on a 7-cycle is {got:?} (oracle {or:?}), period {}",
        seq.period
    ));
    let constant = f
        .violations
        .iter()
        .filter(|v| v.invariant == Invariant::WindowSum)
        .all(|v| !v.detail.contains("vary"));
    out.confirmed = got == or && seq.period == 7 && got.contains(&4) && constant;
    out
}

fn c9(f: &FuzzReport) -> Outcome {
    let k = fixtures::band();
    let b = BandModule::new(&k, &Band::parse(&k, "x -y").unwrap());
    let rep = Representation::from_band(&k, b.band());
    let fixture = band_proj_dim(&k, &b) == Some(1)
        && band_inj_dim(&k, &b) == Some(1)
        && proj_dim_oracle(&k, &rep, 4).unwrap() == Some(1)
        && inj_dim_oracle(&k, &rep, 4).unwrap() == Some(1);
    let n = f.violations_of(Invariant::BandDimension);
    check(
        fixture && n == 0,
        format!(
            "{} corpus bands and the Kronecker band: pd = id = 1",
            f.checks[&Invariant::BandDimension]
        ),
        format!("fixture ok={fixture}, {n} violations"),
    )
}

/// Pairs of arc strings over a triangulation, checked for period 3 and
/// for dimensions in {0, 1, 2}; returns the number of pairs.
fn tri_pairs(a: &GentleAlgebra, mods: &[StringModule], bad: &mut Vec<String>) -> usize {
    let mut count = 0;
    for x in mods {
        for y in mods {
            count += 1;
            let r = period3_check(a, x, y, 2..=8);
            if !r.violations.is_empty() {
                bad.push(format!(
                    "{} {}: period 3 fails at {:?}",
                    x.text(a),
                    y.text(a),
                    r.violations
                ));
            }
            if r.dims.iter().any(|&(_, d)| d > 2) {
                bad.push(format!("{} {}: dims {:?}", x.text(a), y.text(a), r.dims));
            }
        }
    }
    count
}

fn c11() -> Outcome {
    let t = Instant::now();
    let mut bad = Vec::new();
    let mut pairs = 0;
    let hex = fixtures::hex();
    let mut algebras: Vec<(GentleAlgebra, Vec<StringModule>)> = Vec::new();
    let ha = hex.algebra().unwrap();
    let hm = all_strings(&ha, 3)
        .iter()
        .map(|w| StringModule::new(&ha, w))
        .collect();
    algebras.push((ha, hm));
    let tri3 = fixtures::tri3();
    let tm = all_strings(&tri3, 3)
        .iter()
        .map(|w| StringModule::new(&tri3, w))
        .collect();
    algebras.push((tri3, tm));
    let mut disks = 0;
    for seed in 0..24u64 {
        let n = 4 + (seed as usize * 7) % 11;
        let disk = random_disk(seed, n);
        let tr = Triangulation::new(&disk.data).unwrap();
        let Ok(a) = tr.algebra() else {
            bad.push(format!("disk {seed}: not gentle"));
            continue;
        };
        disks += 1;
        let mods = disk
            .arcs
            .iter()
            .map(|arc| {
                let refs: Vec<&str> = arc.iter().map(|s| s.as_str()).collect();
                StringModule::new(&a, &tr.string_from_crossings(&a, &refs).unwrap())
            })
            .collect();
        algebras.push((a, mods));
    }
    for (a, mods) in &algebras {
        if !all_cycles_triangles(a) {
            bad.push("relation cycle of length other than 3".into());
        }
        pairs += tri_pairs(a, mods, &mut bad);
    }
    let elapsed = t.elapsed();
    check(
        bad.is_empty() && disks >= 20 && elapsed < Duration::from_secs(120),
        format!("HEX, TRI3 and {disks} disks, {pairs} pairs: 3-cycles only, period 3, dims in {{0,1,2}}"),
        format!("{} violations, first: {:?}", bad.len(), bad.first()),
    )
}

fn c12() -> Outcome {
    let a = fixtures::tri3();
    let s = m(&a, "@x");
    let got = dims(&a, &s, &s, 9);
    let or = oracle(&a, &s, &s, 9);
    let seq = ext_sequence(&a, &s, &s);
    let ok = got == [0, 0, 1, 0, 0, 1, 0, 0, 1] && or == got && seq.block_at(1) == [0, 0, 1];
    check(
        ok,
        format!("{got:?}, oracle agrees through degree 9"),
        format!("{got:?} vs oracle {or:?}"),
    )
}

fn main() {
    let mut results: Vec<(usize, Outcome)> = vec![(1, c1()), (2, c2()), (3, c3()), (4, c4())];
    let t = Instant::now();
    let f = corpus();
    let elapsed = t.elapsed();
    results.push((5, c5(&f, elapsed)));
    results.push((
        6,
        zero(
            &f,
            Invariant::SyzygyShape,
            "modules: middle summands projective, dimension count exact",
        ),
    ));
    results.push((
        7,
        zero(
            &f,
            Invariant::CycleOrbit,
            "cycle arrows return after exactly n steps",
        ),
    ));
    results.push((8, c8(&f)));
    results.push((9, c9(&f)));
    results.push((
        10,
        zero(
            &f,
            Invariant::Classification,
            "pairs classified, matching direct computation",
        ),
    ));
    results.push((11, c11()));
    results.push((12, c12()));
    for (i, o) in &results {
        println!(
            "criterion {i}: {} ({})",
            if o.pass { "PASS" } else { "FAIL" },
            o.note
        );
    }
    let unexplained: Vec<usize> = results
        .iter()
        .filter(|(_, o)| !o.pass && !o.confirmed)
        .map(|(i, _)| *i)
        .collect();
    let passed = results.iter().filter(|(_, o)| o.pass).count();
    println!("acceptance: {passed}/{} criteria pass", results.len());
    if !unexplained.is_empty() {
        eprintln!("criteria failed without a confirmed counterexample: {unexplained:?}");
        std::process::exit(1);
    }
}
