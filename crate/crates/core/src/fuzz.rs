//! Randomized invariant suite.
//!
//! Every instance is a random gentle algebra with a handful of module pairs,
//! arrows and bands, derived deterministically from `(seed, index)`. Each
//! invariant is a function of an algebra and a list of textual subjects
//! (strings, arrow names or bands), which lets a failure be shrunk by
//! deleting arrows and trimming strings while it keeps failing.

use std::collections::BTreeMap;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::{random_gentle, ArrowId, GentleAlgebra, Presentation, VertexId};
use crate::error::OracleError;
use crate::ext::{common_cycle, ext1_dim, ext_dim, ext_sequence, ExtClass};
use crate::homology::{band_inj_dim, band_proj_dim, proj_dim, projective_cover, syzygy};
use crate::modules::{BandModule, StringModule};
use crate::oracle::{
    check_pair, ext_dims_oracle, hom_dim, inj_dim_oracle, proj_dim_oracle, Representation,
};
use crate::strings::{pair_ok, Band, Letter, StringWord};

pub const MAX_VERTICES: usize = 8;
pub const MAX_ARROWS: usize = 12;
pub const PAIRS_PER_ALGEBRA: usize = 5;
const MAX_STRING_LEN: usize = 5;
const MAX_BAND_LEN: usize = 8;
const BAND_SEARCH_NODES: usize = 20_000;
const SHUFFLE_DEGREES: usize = 3;

#[derive(Clone, Debug)]
pub struct FuzzConfig {
    pub seed: u64,
    pub count: usize,
    pub horizon: usize,
}

/// One random algebra with its test subjects.
#[derive(Clone, Debug)]
pub struct Instance {
    pub algebra: GentleAlgebra,
    pub pairs: Vec<(StringModule, StringModule)>,
    pub bands: Vec<Band>,
}

fn mix(seed: u64, index: usize, salt: u64) -> u64 {
    seed ^ (index as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ salt.rotate_left(17)
}

/// A uniformly grown random walk of at most `max_len` letters.
pub fn random_string<R: Rng>(a: &GentleAlgebra, rng: &mut R, max_len: usize) -> StringWord {
    let start = VertexId(rng.gen_range(0..a.vertex_count()));
    let len = rng.gen_range(0..=max_len);
    let mut letters: Vec<Letter> = Vec::new();
    let mut at = start;
    while letters.len() < len {
        let options: Vec<Letter> = a
            .outgoing(at)
            .iter()
            .map(|&x| Letter::direct(x))
            .chain(a.incoming(at).iter().map(|&x| Letter::inverse(x)))
            .filter(|&l| letters.last().is_none_or(|&p| pair_ok(a, p, l)))
            .collect();
        let Some(&l) = options.choose(rng) else { break };
        at = l.target(a);
        letters.push(l);
    }
    StringWord::from_parts(a, start, letters).expect("walk built from valid pairs")
}

/// Every string with at most `max_len` letters, one representative per
/// module, in canonical form.
pub fn all_strings(a: &GentleAlgebra, max_len: usize) -> Vec<StringWord> {
    let mut out: Vec<StringWord> = Vec::new();
    let mut frontier: Vec<StringWord> = a.vertices().map(StringWord::trivial).collect();
    out.extend(frontier.iter().cloned());
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            let at = w.end();
            let steps = a
                .outgoing(at)
                .iter()
                .map(|&x| Letter::direct(x))
                .chain(a.incoming(at).iter().map(|&x| Letter::inverse(x)));
            for l in steps {
                let mut letters = w.letters().to_vec();
                letters.push(l);
                if let Ok(x) = StringWord::from_parts(a, w.start(), letters) {
                    next.push(x);
                }
            }
        }
        for x in &next {
            let c = x.canonical(a);
            if !out.contains(&c) {
                out.push(c);
            }
        }
        frontier = next;
    }
    out
}

/// All bands of length at most `max_len`, found by bounded depth-first
/// search, in canonical form without repetition.
pub fn small_bands(a: &GentleAlgebra, max_len: usize) -> Vec<Band> {
    let mut found: Vec<Band> = Vec::new();
    let mut budget = BAND_SEARCH_NODES;
    for v in a.vertices() {
        let mut path = Vec::new();
        search_bands(a, v, v, max_len, &mut path, &mut found, &mut budget);
    }
    found
}

fn search_bands(
    a: &GentleAlgebra,
    start: VertexId,
    at: VertexId,
    max_len: usize,
    path: &mut Vec<Letter>,
    found: &mut Vec<Band>,
    budget: &mut usize,
) {
    if *budget == 0 {
        return;
    }
    *budget -= 1;
    if at == start && !path.is_empty() {
        if let Ok(b) = Band::new(a, path.clone()) {
            if !found.contains(&b) {
                found.push(b);
            }
        }
    }
    if path.len() == max_len {
        return;
    }
    let next: Vec<Letter> = a
        .outgoing(at)
        .iter()
        .map(|&x| Letter::direct(x))
        .chain(a.incoming(at).iter().map(|&x| Letter::inverse(x)))
        .collect();
    for l in next {
        if path.last().is_some_and(|&p| !pair_ok(a, p, l)) {
            continue;
        }
        path.push(l);
        search_bands(a, start, l.target(a), max_len, path, found, budget);
        path.pop();
    }
}

fn random_module<R: Rng>(a: &GentleAlgebra, rng: &mut R) -> StringModule {
    let cyclic: Vec<ArrowId> = a.arrow_ids().filter(|&x| a.on_relation_cycle(x)).collect();
    // bias towards uniserials on relation cycles, where periodicity lives
    if !cyclic.is_empty() && rng.gen_bool(0.25) {
        return StringModule::r_module(a, *cyclic.choose(rng).unwrap());
    }
    StringModule::new(a, &random_string(a, rng, MAX_STRING_LEN))
}

pub fn instance(seed: u64, index: usize) -> Instance {
    let algebra = random_gentle(mix(seed, index, 1), MAX_VERTICES, MAX_ARROWS)
        .expect("sampler succeeds for positive bounds");
    let mut rng = ChaCha8Rng::seed_from_u64(mix(seed, index, 2));
    let pairs = (0..PAIRS_PER_ALGEBRA)
        .map(|_| {
            (
                random_module(&algebra, &mut rng),
                random_module(&algebra, &mut rng),
            )
        })
        .collect();
    let mut bands = small_bands(&algebra, MAX_BAND_LEN);
    bands.shuffle(&mut rng);
    bands.truncate(3);
    Instance {
        algebra,
        pairs,
        bands,
    }
}

/// The invariants checked by the suite, in report order.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Invariant {
    /// Combinatorial and oracle Ext dims, syzygy and cosyzygy dims agree.
    Oracle,
    /// Middle syzygy summands are projective; `dim Ω¹M = dim P(M) − dim M`.
    SyzygyShape,
    /// `Ω` returns an arrow on a relation cycle of length `n` after `n` steps.
    CycleOrbit,
    /// Tail windows of one period have constant sum at most 2.
    WindowSum,
    /// Quasi-simple band modules have `pd = id = 1`.
    BandDimension,
    /// Periodic classification matches the common-cycle criterion and the
    /// sequence matches direct computation.
    Classification,
    /// Oracle Ext dims do not depend on the chosen bases.
    BasisChange,
    /// `dim Hom(P_v, M) = dim M_v`.
    HomProjective,
}

impl Invariant {
    pub const ALL: [Invariant; 8] = [
        Invariant::Oracle,
        Invariant::SyzygyShape,
        Invariant::CycleOrbit,
        Invariant::WindowSum,
        Invariant::BandDimension,
        Invariant::Classification,
        Invariant::BasisChange,
        Invariant::HomProjective,
    ];

    pub fn key(self) -> &'static str {
        match self {
            Invariant::Oracle => "oracle",
            Invariant::SyzygyShape => "syzygy_shape",
            Invariant::CycleOrbit => "cycle_orbit",
            Invariant::WindowSum => "window_sum",
            Invariant::BandDimension => "band_dimension",
            Invariant::Classification => "classification",
            Invariant::BasisChange => "basis_change",
            Invariant::HomProjective => "hom_projective",
        }
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

type Outcome = Result<(), String>;

fn oracle_err(e: OracleError) -> String {
    format!("oracle failed: {e}")
}

fn module(a: &GentleAlgebra, text: &str) -> Result<StringModule, String> {
    StringModule::parse(a, text).map_err(|e| e.to_string())
}

/// Run one invariant on textual subjects.
pub fn check(inv: Invariant, a: &GentleAlgebra, subjects: &[String], horizon: usize) -> Outcome {
    match inv {
        Invariant::Oracle => {
            let (m, n) = (module(a, &subjects[0])?, module(a, &subjects[1])?);
            let pc = check_pair(a, &m, &n, horizon).map_err(oracle_err)?;
            pc.first_mismatch().map_or(Ok(()), Err)
        }
        Invariant::SyzygyShape => {
            let m = module(a, &subjects[0])?;
            let s = syzygy(a, &m);
            if let Some(p) = s.middle.iter().find(|p| !p.is_projective(a)) {
                return Err(format!("middle summand {} is not projective", p.text(a)));
            }
            let cover: usize = projective_cover(a, &m).iter().map(|p| p.dim()).sum();
            if s.dim() + m.dim() != cover {
                return Err(format!(
                    "dim Ω¹ = {} but cover {} minus module {}",
                    s.dim(),
                    cover,
                    m.dim()
                ));
            }
            Ok(())
        }
        Invariant::CycleOrbit => {
            let x = a.find_arrow(&subjects[0]).ok_or("unknown arrow")?;
            let Some((cycle, _)) = a.cycle_of(x) else {
                return Ok(());
            };
            let n = cycle.len();
            let mut cur = StringModule::r_module(a, x);
            for step in 1..=n {
                let s = syzygy(a, &cur);
                let parts = s.summands();
                if parts.len() != 1 {
                    return Err(format!(
                        "Ω^{step}(R({})) has {} summands",
                        subjects[0],
                        parts.len()
                    ));
                }
                cur = parts[0].clone();
                if step < n && cur == StringModule::r_module(a, x) {
                    return Err(format!("Ω^{step}(R({})) returned early", subjects[0]));
                }
            }
            if cur != StringModule::r_module(a, x) {
                return Err(format!("Ω^{n}(R({})) = {}", subjects[0], cur.text(a)));
            }
            Ok(())
        }
        Invariant::WindowSum => {
            let (m, n) = (module(a, &subjects[0])?, module(a, &subjects[1])?);
            let seq = ext_sequence(a, &m, &n);
            let k = seq.period;
            if k == 0 {
                return Ok(());
            }
            let n0 = seq.tail_start();
            let dims: Vec<usize> = (n0..n0 + 3 * k).map(|d| ext_dim(a, &m, &n, d)).collect();
            let sums: Vec<usize> = dims.windows(k).map(|w| w.iter().sum()).collect();
            if sums.iter().any(|&s| s != sums[0]) {
                return Err(format!("window sums vary: {sums:?}"));
            }
            if sums[0] > 2 {
                return Err(format!(
                    "window sum {} over period {k} from degree {n0}",
                    sums[0]
                ));
            }
            Ok(())
        }
        Invariant::BandDimension => {
            let b = Band::parse(a, &subjects[0]).map_err(|e| e.to_string())?;
            let bm = BandModule::new(a, &b);
            let rep = Representation::from_band(a, &b);
            let budget = a.arrow_count() + 3;
            let found = (
                band_proj_dim(a, &bm),
                band_inj_dim(a, &bm),
                proj_dim_oracle(a, &rep, budget).map_err(oracle_err)?,
                inj_dim_oracle(a, &rep, budget).map_err(oracle_err)?,
            );
            if found != (Some(1), Some(1), Some(1), Some(1)) {
                return Err(format!("(pd, id, oracle pd, oracle id) = {found:?}"));
            }
            Ok(())
        }
        Invariant::Classification => {
            let (m, n) = (module(a, &subjects[0])?, module(a, &subjects[1])?);
            let seq = ext_sequence(a, &m, &n);
            let periodic = matches!(seq.classification(), ExtClass::Periodic(_));
            if periodic != common_cycle(a, &m, &n) {
                return Err(format!(
                    "classification {} but common cycle criterion says {}",
                    seq.classification(),
                    !periodic
                ));
            }
            if periodic && seq.block.iter().all(|&x| x == 0) {
                return Err("periodic with an all-zero block".into());
            }
            let upto = 3 * a.cycle_lcm() + seq.tail_start() + 1;
            let direct: Vec<usize> = (1..=upto).map(|d| ext_dim(a, &m, &n, d)).collect();
            if direct != seq.values(upto) {
                return Err(format!(
                    "sequence {:?} but direct {:?}",
                    seq.values(upto),
                    direct
                ));
            }
            Ok(())
        }
        Invariant::BasisChange => {
            let (m, n) = (module(a, &subjects[0])?, module(a, &subjects[1])?);
            let (rm, rn) = (
                Representation::from_module(a, &m),
                Representation::from_module(a, &n),
            );
            let mut rng = ChaCha8Rng::seed_from_u64(subjects.len() as u64 + m.dim() as u64);
            let sm = rm.shuffled(a, &mut rng).map_err(oracle_err)?;
            let sn = rn.shuffled(a, &mut rng).map_err(oracle_err)?;
            let plain = ext_dims_oracle(a, &rm, &rn, SHUFFLE_DEGREES).map_err(oracle_err)?;
            let moved = ext_dims_oracle(a, &sm, &sn, SHUFFLE_DEGREES).map_err(oracle_err)?;
            if plain != moved {
                return Err(format!(
                    "dims {plain:?} change to {moved:?} after a change of basis"
                ));
            }
            Ok(())
        }
        Invariant::HomProjective => {
            let m = module(a, &subjects[0])?;
            let rm = Representation::from_module(a, &m);
            for v in a.vertices() {
                let p = Representation::from_module(a, &StringModule::projective(a, v));
                let h = hom_dim(a, &p, &rm).map_err(oracle_err)?;
                if h != m.dims()[v.0] {
                    return Err(format!(
                        "dim Hom(P_{}, M) = {h} but dim M at that vertex is {}",
                        a.vertex_name(v),
                        m.dims()[v.0]
                    ));
                }
            }
            Ok(())
        }
    }
}

/// The subjects each invariant is run on for an instance.
fn subjects(inv: Invariant, inst: &Instance) -> Vec<Vec<String>> {
    let a = &inst.algebra;
    let pairs = || {
        inst.pairs
            .iter()
            .map(|(m, n)| vec![m.text(a), n.text(a)])
            .collect::<Vec<_>>()
    };
    let singles = || {
        let mut out: Vec<Vec<String>> = Vec::new();
        for (m, n) in &inst.pairs {
            for x in [m, n] {
                let t = vec![x.text(a)];
                if !out.contains(&t) {
                    out.push(t);
                }
            }
        }
        out
    };
    match inv {
        Invariant::Oracle
        | Invariant::WindowSum
        | Invariant::Classification
        | Invariant::BasisChange => pairs(),
        Invariant::SyzygyShape | Invariant::HomProjective => singles(),
        Invariant::CycleOrbit => a
            .arrow_ids()
            .filter(|&x| a.on_relation_cycle(x))
            .map(|x| vec![a.arrow_name(x).to_owned()])
            .collect(),
        Invariant::BandDimension => inst.bands.iter().map(|b| vec![b.text(a)]).collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub invariant: Invariant,
    pub instance: usize,
    /// The (possibly shrunk) algebra in file format.
    pub algebra: String,
    pub subjects: Vec<String>,
    pub detail: String,
}

/// Empirical data on self-extensions of `R(α)`, bucketed by `pd R(α)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RigidityStats {
    /// `(rigid, not rigid)` among arrows with `pd R(α) ≤ 2`.
    pub pd_at_most_2: (usize, usize),
    /// `(rigid, not rigid)` among arrows with `pd R(α) ≥ 2`, including ∞.
    pub pd_at_least_2: (usize, usize),
    /// The previous bucket restricted to algebras without loops.
    pub loop_free_pd_at_least_2: (usize, usize),
    /// Arrows where the combinatorial and oracle `Ext¹(R(α), R(α))` differ.
    pub disagreements: usize,
}

impl RigidityStats {
    fn add(&mut self, o: &RigidityStats) {
        self.pd_at_most_2.0 += o.pd_at_most_2.0;
        self.pd_at_most_2.1 += o.pd_at_most_2.1;
        self.pd_at_least_2.0 += o.pd_at_least_2.0;
        self.pd_at_least_2.1 += o.pd_at_least_2.1;
        self.loop_free_pd_at_least_2.0 += o.loop_free_pd_at_least_2.0;
        self.loop_free_pd_at_least_2.1 += o.loop_free_pd_at_least_2.1;
        self.disagreements += o.disagreements;
    }
}

fn rigidity(a: &GentleAlgebra) -> Result<RigidityStats, OracleError> {
    let mut s = RigidityStats::default();
    let loop_free = a.arrow_ids().all(|x| a.source(x) != a.target(x));
    for x in a.arrow_ids() {
        let r = StringModule::r_module(a, x);
        let e = ext1_dim(a, &r, &r);
        let rep = Representation::from_module(a, &r);
        if ext_dims_oracle(a, &rep, &rep, 1)?[1] != e {
            s.disagreements += 1;
        }
        let rigid = e == 0;
        let pd = proj_dim(a, &r);
        let bump = |c: &mut (usize, usize)| if rigid { c.0 += 1 } else { c.1 += 1 };
        if pd.is_some_and(|d| d <= 2) {
            bump(&mut s.pd_at_most_2);
        }
        if pd.is_none_or(|d| d >= 2) {
            bump(&mut s.pd_at_least_2);
            if loop_free {
                bump(&mut s.loop_free_pd_at_least_2);
            }
        }
    }
    Ok(s)
}

#[derive(Clone, Debug, Default)]
struct InstanceResult {
    checks: BTreeMap<Invariant, usize>,
    violations: Vec<Violation>,
    rigidity: RigidityStats,
    periodic_pairs: usize,
    cycles: usize,
}

fn run_instance(cfg: &FuzzConfig, index: usize) -> InstanceResult {
    let inst = instance(cfg.seed, index);
    let a = &inst.algebra;
    let mut out = InstanceResult {
        cycles: a.relation_cycles().len(),
        ..InstanceResult::default()
    };
    out.periodic_pairs = inst
        .pairs
        .iter()
        .filter(|(m, n)| ext_sequence(a, m, n).period > 0)
        .count();
    for inv in Invariant::ALL {
        for subj in subjects(inv, &inst) {
            *out.checks.entry(inv).or_default() += 1;
            if let Err(detail) = check(inv, a, &subj, cfg.horizon) {
                out.violations.push(Violation {
                    invariant: inv,
                    instance: index,
                    algebra: a.to_string(),
                    subjects: subj,
                    detail,
                });
            }
        }
    }
    match rigidity(a) {
        Ok(r) => out.rigidity = r,
        Err(e) => out.violations.push(Violation {
            invariant: Invariant::Oracle,
            instance: index,
            algebra: a.to_string(),
            subjects: Vec::new(),
            detail: oracle_err(e),
        }),
    }
    out
}

#[derive(Clone, Debug)]
pub struct FuzzReport {
    pub config: FuzzConfig,
    pub checks: BTreeMap<Invariant, usize>,
    /// All violations in instance order; the first of each invariant is shrunk.
    pub violations: Vec<Violation>,
    pub rigidity: RigidityStats,
    pub algebras_with_cycles: usize,
    pub periodic_pairs: usize,
}

impl FuzzReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations_of(&self, inv: Invariant) -> usize {
        self.violations
            .iter()
            .filter(|v| v.invariant == inv)
            .count()
    }
}

pub fn run(cfg: &FuzzConfig) -> FuzzReport {
    let results: Vec<InstanceResult> = (0..cfg.count)
        .into_par_iter()
        .map(|i| run_instance(cfg, i))
        .collect();
    let mut report = FuzzReport {
        config: cfg.clone(),
        checks: Invariant::ALL.iter().map(|&i| (i, 0)).collect(),
        violations: Vec::new(),
        rigidity: RigidityStats::default(),
        algebras_with_cycles: 0,
        periodic_pairs: 0,
    };
    for r in results {
        for (k, v) in r.checks {
            *report.checks.entry(k).or_default() += v;
        }
        report.violations.extend(r.violations);
        report.rigidity.add(&r.rigidity);
        report.algebras_with_cycles += usize::from(r.cycles > 0);
        report.periodic_pairs += r.periodic_pairs;
    }
    let mut seen = Vec::new();
    for v in report.violations.iter_mut() {
        if !seen.contains(&v.invariant) && !v.subjects.is_empty() {
            seen.push(v.invariant);
            *v = shrink(v, cfg.horizon);
        }
    }
    report
}

fn fails(inv: Invariant, p: &Presentation, subjects: &[String], horizon: usize) -> Option<String> {
    let a = GentleAlgebra::validate(p).ok()?;
    // a subject that no longer parses is not a reproducer
    match inv {
        Invariant::CycleOrbit => {
            a.find_arrow(&subjects[0])?;
        }
        Invariant::BandDimension => {
            Band::parse(&a, &subjects[0]).ok()?;
        }
        _ => {
            for s in subjects {
                StringModule::parse(&a, s).ok()?;
            }
        }
    }
    check(inv, &a, subjects, horizon).err()
}

/// Greedy shrinking: drop arrows, then isolated vertices, then end letters
/// of string subjects, keeping each step that preserves the failure.
pub fn shrink(v: &Violation, horizon: usize) -> Violation {
    let Ok(a) = crate::format::parse_algebra(&v.algebra) else {
        return v.clone();
    };
    let mut p = a.presentation();
    let mut subjects = v.subjects.clone();
    let mut detail = v.detail.clone();
    let is_string = !matches!(
        v.invariant,
        Invariant::CycleOrbit | Invariant::BandDimension
    );
    loop {
        let mut progress = false;
        for i in (0..p.arrows.len()).rev() {
            let mut q = p.clone();
            let (name, _, _) = q.arrows.remove(i);
            q.relations.retain(|(x, y)| *x != name && *y != name);
            if let Some(d) = fails(v.invariant, &q, &subjects, horizon) {
                (p, detail, progress) = (q, d, true);
            }
        }
        for i in (0..p.vertices.len()).rev() {
            let name = &p.vertices[i];
            let used = p.arrows.iter().any(|(_, s, t)| s == name || t == name)
                || subjects
                    .iter()
                    .any(|s| s.split_whitespace().any(|t| t == format!("@{name}")));
            if used {
                continue;
            }
            let mut q = p.clone();
            q.vertices.remove(i);
            if let Some(d) = fails(v.invariant, &q, &subjects, horizon) {
                (p, detail, progress) = (q, d, true);
            }
        }
        if is_string {
            for k in 0..subjects.len() {
                let tokens: Vec<String> =
                    subjects[k].split_whitespace().map(String::from).collect();
                if tokens.len() < 2 {
                    continue;
                }
                for cut in [tokens[1..].join(" "), tokens[..tokens.len() - 1].join(" ")] {
                    let mut s = subjects.clone();
                    s[k] = cut;
                    if let Some(d) = fails(v.invariant, &p, &s, horizon) {
                        (subjects, detail, progress) = (s, d, true);
                        break;
                    }
                }
            }
        }
        if !progress {
            break;
        }
    }
    let algebra = GentleAlgebra::validate(&p)
        .map(|a| a.to_string())
        .unwrap_or_else(|_| v.algebra.clone());
    Violation {
        invariant: v.invariant,
        instance: v.instance,
        algebra,
        subjects,
        detail,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn instances_are_deterministic() {
        let (x, y) = (instance(7, 3), instance(7, 3));
        assert_eq!(x.algebra, y.algebra);
        assert_eq!(x.pairs, y.pairs);
        assert_eq!(x.bands, y.bands);
    }

    #[test]
    fn random_strings_are_valid() {
        let a = fixtures::c4();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let w = random_string(&a, &mut rng, 6);
            assert_eq!(StringWord::parse(&a, &w.text(&a)).unwrap(), w);
        }
    }

    #[test]
    fn string_enumeration() {
        // A3 has 6 indecomposables, all strings
        assert_eq!(all_strings(&fixtures::a3(), 4).len(), 6);
        let c4 = fixtures::c4();
        let all = all_strings(&c4, 3);
        for (i, x) in all.iter().enumerate() {
            assert!(all[..i].iter().all(|y| !y.same_module(x, &c4)));
        }
    }

    #[test]
    fn kronecker_bands() {
        let k = fixtures::band();
        let bands = small_bands(&k, 4);
        assert!(bands.iter().any(|b| b.len() == 2));
        assert!(bands
            .iter()
            .all(|b| check(Invariant::BandDimension, &k, &[b.text(&k)], 4).is_ok()));
    }

    #[test]
    fn small_run_passes_the_exact_invariants() {
        let r = run(&FuzzConfig {
            seed: 11,
            count: 12,
            horizon: 4,
        });
        for inv in [
            Invariant::Oracle,
            Invariant::SyzygyShape,
            Invariant::CycleOrbit,
        ] {
            assert_eq!(r.violations_of(inv), 0, "{:?}", r.violations);
        }
    }

    #[test]
    fn shrinking_keeps_the_failure() {
        // an invariant that fails by construction: a projective cover sum
        // mismatch cannot be forged, so shrink a real oracle check instead
        let a = fixtures::c4();
        let v = Violation {
            invariant: Invariant::HomProjective,
            instance: 0,
            algebra: a.to_string(),
            subjects: vec!["f -d".into()],
            detail: String::new(),
        };
        // the invariant holds, so nothing fails and shrinking is the identity
        assert_eq!(shrink(&v, 3).algebra, a.to_string());
    }
}
