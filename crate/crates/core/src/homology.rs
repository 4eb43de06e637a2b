//! Projective covers, first syzygies and cosyzygies of string and band
//! modules, Ω-orbits of the uniserials `R(α)`, and resolutions.
//!
//! The first syzygy of `M(w)` splits as `L_0 ⊕ P ⊕ ⋯ ⊕ P ⊕ L_k`: the
//! interior valleys of `w` contribute projectives and each end contributes
//! `R(δ)`, where `δ` is the arrow by which the string may be extended at
//! that end (`δ⁻¹ w` resp. `w δ` a string). Since `Ω(R(α)) = R(β)` for the
//! relation successor `β` of `α` (and `0` without one), everything beyond
//! degree one is driven by the two end orbits.

use std::fmt;

use crate::algebra::{ArrowId, GentleAlgebra, VertexId};
use crate::modules::{BandModule, StringModule};
use crate::strings::Band;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyzygyDecomposition {
    pub left: Option<(ArrowId, StringModule)>,
    pub middle: Vec<StringModule>,
    pub right: Option<(ArrowId, StringModule)>,
}

impl SyzygyDecomposition {
    pub fn summands(&self) -> Vec<&StringModule> {
        let mut v: Vec<&StringModule> = Vec::new();
        v.extend(self.left.as_ref().map(|x| &x.1));
        v.extend(&self.middle);
        v.extend(self.right.as_ref().map(|x| &x.1));
        v
    }

    pub fn ends(&self) -> Vec<ArrowId> {
        self.left.iter().chain(&self.right).map(|x| x.0).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.left.is_none() && self.right.is_none() && self.middle.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.summands().iter().map(|m| m.dim()).sum()
    }

    pub fn dims(&self, a: &GentleAlgebra) -> Vec<usize> {
        let mut d = vec![0; a.vertex_count()];
        for m in self.summands() {
            for (x, y) in d.iter_mut().zip(m.dims()) {
                *x += y;
            }
        }
        d
    }
}

/// One projective per top vertex of `M`, in string order.
pub fn projective_cover(a: &GentleAlgebra, m: &StringModule) -> Vec<StringModule> {
    m.top()
        .iter()
        .map(|&v| StringModule::projective(a, v))
        .collect()
}

/// One injective per socle vertex of `M`, in string order.
pub fn injective_hull(a: &GentleAlgebra, m: &StringModule) -> Vec<StringModule> {
    m.socle()
        .iter()
        .map(|&v| StringModule::injective(a, v))
        .collect()
}

pub fn syzygy(a: &GentleAlgebra, m: &StringModule) -> SyzygyDecomposition {
    let w = m.word();
    let (l, r) = w.syzygy_ends(a);
    let verts = w.vertices(a);
    let middle = w
        .socle_positions()
        .into_iter()
        .filter(|&i| i > 0 && i < w.len())
        .map(|i| StringModule::projective(a, verts[i]))
        .collect();
    let end = |x: Option<ArrowId>| x.map(|d| (d, StringModule::r_module(a, d)));
    SyzygyDecomposition {
        left: end(l),
        middle,
        right: end(r),
    }
}

/// Cokernel of the injective hull: `U(γ)` at the ends (`γ w` resp.
/// `w γ⁻¹` a string) and injectives at the interior peaks.
pub fn cosyzygy(a: &GentleAlgebra, m: &StringModule) -> SyzygyDecomposition {
    let w = m.word();
    let (l, r) = w.cosyzygy_ends(a);
    let verts = w.vertices(a);
    let middle = w
        .top_positions()
        .into_iter()
        .filter(|&i| i > 0 && i < w.len())
        .map(|i| StringModule::injective(a, verts[i]))
        .collect();
    let end = |x: Option<ArrowId>| x.map(|g| (g, StringModule::u_module(a, g)));
    SyzygyDecomposition {
        left: end(l),
        middle,
        right: end(r),
    }
}

/// A band has no ends, so its syzygy is the sum of the projectives at its
/// valleys.
pub fn band_syzygy(a: &GentleAlgebra, b: &BandModule) -> SyzygyDecomposition {
    let band: &Band = b.band();
    let verts = band.vertices(a);
    SyzygyDecomposition {
        left: None,
        middle: band
            .socle_positions()
            .into_iter()
            .map(|i| StringModule::projective(a, verts[i]))
            .collect(),
        right: None,
    }
}

pub fn band_cosyzygy(a: &GentleAlgebra, b: &BandModule) -> SyzygyDecomposition {
    let band: &Band = b.band();
    let verts = band.vertices(a);
    SyzygyDecomposition {
        left: None,
        middle: band
            .top_positions()
            .into_iter()
            .map(|i| StringModule::injective(a, verts[i]))
            .collect(),
        right: None,
    }
}

pub fn band_projective_cover(a: &GentleAlgebra, b: &BandModule) -> Vec<StringModule> {
    let verts = b.band().vertices(a);
    b.band()
        .top_positions()
        .into_iter()
        .map(|i| StringModule::projective(a, verts[i]))
        .collect()
}

/// Projective dimension of a band module, read off its syzygy.
pub fn band_proj_dim(a: &GentleAlgebra, b: &BandModule) -> Option<usize> {
    let omega = band_syzygy(a, b);
    if omega.is_zero() {
        Some(0)
    } else if omega.middle.iter().all(|p| p.is_projective(a)) {
        Some(1)
    } else {
        None
    }
}

pub fn band_inj_dim(a: &GentleAlgebra, b: &BandModule) -> Option<usize> {
    let omega = band_cosyzygy(a, b);
    if omega.is_zero() {
        Some(0)
    } else if omega.middle.iter().all(|i| i.is_injective(a)) {
        Some(1)
    } else {
        None
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum OrbitEnd {
    /// The last module in the chain is projective (resp. injective).
    ProjectiveReached,
    /// `chain[entry..]` is a relation cycle of the given length.
    Cycle { entry: usize, length: usize },
    /// The horizon was hit first; never happens for a validated algebra.
    Truncated,
}

/// `α_1, α_2, …` with `Ω(R(α_i)) = R(α_{i+1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaOrbit {
    pub chain: Vec<ArrowId>,
    pub terminal: OrbitEnd,
}

impl OmegaOrbit {
    pub fn cycles(&self) -> bool {
        matches!(self.terminal, OrbitEnd::Cycle { .. })
    }

    pub fn cycle_length(&self) -> Option<usize> {
        match self.terminal {
            OrbitEnd::Cycle { length, .. } => Some(length),
            _ => None,
        }
    }
}

fn orbit_by(
    a: &GentleAlgebra,
    alpha: ArrowId,
    horizon: usize,
    step: impl Fn(ArrowId) -> Option<ArrowId>,
) -> OmegaOrbit {
    let mut chain = vec![alpha];
    loop {
        let cur = *chain.last().unwrap();
        match step(cur) {
            None => {
                return OmegaOrbit {
                    chain,
                    terminal: OrbitEnd::ProjectiveReached,
                }
            }
            Some(next) => {
                if let Some(entry) = chain.iter().position(|&x| x == next) {
                    let length = chain.len() - entry;
                    debug_assert_eq!(a.cycle_of(next).map(|c| c.0.len()), Some(length));
                    return OmegaOrbit {
                        chain,
                        terminal: OrbitEnd::Cycle { entry, length },
                    };
                }
                if chain.len() >= horizon {
                    return OmegaOrbit {
                        chain,
                        terminal: OrbitEnd::Truncated,
                    };
                }
                chain.push(next);
            }
        }
    }
}

pub fn omega_orbit(a: &GentleAlgebra, alpha: ArrowId, horizon: usize) -> OmegaOrbit {
    orbit_by(a, alpha, horizon, |x| a.relation_successor(x))
}

/// `α_1, α_2, …` with `Ω⁻¹(U(α_i)) = U(α_{i+1})`.
pub fn co_omega_orbit(a: &GentleAlgebra, alpha: ArrowId, horizon: usize) -> OmegaOrbit {
    orbit_by(a, alpha, horizon, |x| a.relation_predecessor(x))
}

fn dim_from_ends(a: &GentleAlgebra, omega: &SyzygyDecomposition, dual: bool) -> Option<usize> {
    if omega.is_zero() {
        return Some(0);
    }
    let mut d = 1;
    for e in omega.ends() {
        let orbit = if dual {
            co_omega_orbit(a, e, a.arrow_count() + 1)
        } else {
            omega_orbit(a, e, a.arrow_count() + 1)
        };
        if orbit.terminal != OrbitEnd::ProjectiveReached {
            return None;
        }
        d = d.max(orbit.chain.len());
    }
    Some(d)
}

/// `None` stands for infinite projective dimension.
pub fn proj_dim(a: &GentleAlgebra, m: &StringModule) -> Option<usize> {
    dim_from_ends(a, &syzygy(a, m), false)
}

pub fn inj_dim(a: &GentleAlgebra, m: &StringModule) -> Option<usize> {
    dim_from_ends(a, &cosyzygy(a, m), true)
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum GlobalDimension {
    Finite(usize),
    Infinite,
}

impl fmt::Display for GlobalDimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GlobalDimension::Finite(n) => write!(f, "{n}"),
            GlobalDimension::Infinite => f.write_str("infinite"),
        }
    }
}

pub fn gl_dim_status(a: &GentleAlgebra) -> GlobalDimension {
    let mut best = 0;
    for v in a.vertices() {
        match proj_dim(a, &StringModule::simple(a, v)) {
            Some(d) => best = best.max(d),
            None => return GlobalDimension::Infinite,
        }
    }
    GlobalDimension::Finite(best)
}

/// A summand of a higher syzygy.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Summand {
    R(ArrowId),
    P(VertexId),
}

impl Summand {
    pub fn module(self, a: &GentleAlgebra) -> StringModule {
        match self {
            Summand::R(x) => StringModule::r_module(a, x),
            Summand::P(v) => StringModule::projective(a, v),
        }
    }

    /// Vertex of the projective cover.
    pub fn cover_vertex(self, a: &GentleAlgebra) -> VertexId {
        match self {
            Summand::R(x) => a.target(x),
            Summand::P(v) => v,
        }
    }
}

/// Degree `d` of a resolution: the projective cover `P_d` of `Ω^d(M)`
/// (sorted by vertex) and the summands of `Ω^{d+1}(M)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeData {
    pub projectives: Vec<VertexId>,
    pub syzygy: Vec<Summand>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Tail {
    pub start: usize,
    pub period: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Resolution {
    pub degrees: Vec<DegreeData>,
    pub tail: Option<Tail>,
    /// Projective dimension when the resolution is finite.
    pub length: Option<usize>,
}

fn next_syzygy(a: &GentleAlgebra, current: &[Summand]) -> Vec<Summand> {
    current
        .iter()
        .filter_map(|s| match s {
            Summand::R(x) => a.relation_successor(*x).map(Summand::R),
            Summand::P(_) => None,
        })
        .collect()
}

fn degree_data(a: &GentleAlgebra, cover_of: &[Summand], next: Vec<Summand>) -> DegreeData {
    let mut projectives: Vec<VertexId> = cover_of.iter().map(|s| s.cover_vertex(a)).collect();
    projectives.sort();
    DegreeData {
        projectives,
        syzygy: next,
    }
}

/// Default depth: enough to exhibit two full periods after every orbit
/// has settled.
pub fn default_depth(a: &GentleAlgebra) -> usize {
    2 + 2 * a.cycle_lcm()
}

/// Degrees `0..=depth` of the minimal projective resolution of `M`.
///
/// The tail is found by comparing degree data explicitly; it exists when
/// some end orbit cycles, with period the lcm of the cycling ends' cycle
/// lengths.
pub fn resolution(a: &GentleAlgebra, m: &StringModule, depth: usize) -> Resolution {
    let omega = syzygy(a, m);
    let mut first: Vec<Summand> = Vec::new();
    first.extend(omega.left.as_ref().map(|x| Summand::R(x.0)));
    first.extend(omega.middle.iter().map(|p| Summand::P(p.top()[0])));
    first.extend(omega.right.as_ref().map(|x| Summand::R(x.0)));

    let period = omega
        .ends()
        .into_iter()
        .filter_map(|e| a.cycle_of(e).map(|c| c.0.len()))
        .fold(0, |acc, n| {
            if acc == 0 {
                n
            } else {
                num_integer::lcm(acc, n)
            }
        });
    // chains off cycles have length at most the arrow count
    let settle = a.arrow_count() + 2;
    let horizon = depth.max(settle + 2 * period.max(1));

    let mut degrees = Vec::with_capacity(horizon + 1);
    let mut cover_top: Vec<VertexId> = m.top().to_vec();
    cover_top.sort();
    degrees.push(DegreeData {
        projectives: cover_top,
        syzygy: first.clone(),
    });
    let mut current = first;
    while degrees.len() <= horizon {
        let next = next_syzygy(a, &current);
        degrees.push(degree_data(a, &current, next.clone()));
        current = next;
    }

    let (tail, length) = if period > 0 {
        let start = (0..=horizon - period)
            .find(|&s| (s..=horizon - period).all(|d| degrees[d] == degrees[d + period]))
            .expect("orbits settle within the horizon");
        (Some(Tail { start, period }), None)
    } else {
        let len = degrees
            .iter()
            .rposition(|d| !d.projectives.is_empty())
            .unwrap_or(0);
        (None, Some(len))
    };
    degrees.truncate(depth + 1);
    Resolution {
        degrees,
        tail,
        length,
    }
}

pub fn format_projectives(a: &GentleAlgebra, ps: &[VertexId]) -> String {
    if ps.is_empty() {
        return "0".into();
    }
    let parts: Vec<String> = ps
        .iter()
        .map(|v| format!("P_{}", a.vertex_name(*v)))
        .collect();
    parts.join("⊕")
}

pub fn format_summands(a: &GentleAlgebra, ss: &[Summand]) -> String {
    if ss.is_empty() {
        return "0".into();
    }
    let parts: Vec<String> = ss
        .iter()
        .map(|s| match s {
            Summand::R(x) => format!(
                "R({})=M({})",
                a.arrow_name(*x),
                StringModule::r_module(a, *x).text(a)
            ),
            Summand::P(v) => format!("P_{}", a.vertex_name(*v)),
        })
        .collect();
    parts.join(" ⊕ ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn m(a: &GentleAlgebra, s: &str) -> StringModule {
        StringModule::parse(a, s).unwrap()
    }

    fn vs(a: &GentleAlgebra, names: &[&str]) -> Vec<VertexId> {
        names.iter().map(|n| a.find_vertex(n).unwrap()).collect()
    }

    fn arr(a: &GentleAlgebra, n: &str) -> ArrowId {
        a.find_arrow(n).unwrap()
    }

    #[test]
    fn covers() {
        let c4 = fixtures::c4();
        let tops = |s: &str| -> Vec<VertexId> {
            let mut t: Vec<VertexId> = projective_cover(&c4, &m(&c4, s))
                .iter()
                .map(|p| p.top()[0])
                .collect();
            t.sort();
            t
        };
        assert_eq!(tops("f"), vs(&c4, &["4"]));
        assert_eq!(tops("f -d"), vs(&c4, &["4", "6"]));
        assert_eq!(tops("-e g"), vs(&c4, &["2"]));
    }

    #[test]
    fn syzygy_examples() {
        let c4 = fixtures::c4();
        let s = syzygy(&c4, &m(&c4, "f"));
        assert!(s.middle.is_empty());
        assert_eq!(s.ends(), [arr(&c4, "a")]);
        assert_eq!(s.summands(), [&m(&c4, "@1")]);
        let s = syzygy(&c4, &m(&c4, "e"));
        assert_eq!(s.ends(), [arr(&c4, "g")]);
        assert_eq!(s.summands(), [&m(&c4, "@6")]);
        let s = syzygy(&c4, &m(&c4, "f -d"));
        assert!(s.ends().is_empty());
        assert_eq!(s.middle, [m(&c4, "a")]);
        assert_eq!(s.dim(), 2);
    }

    #[test]
    fn cosyzygy_examples() {
        let c4 = fixtures::c4();
        let s = cosyzygy(&c4, &m(&c4, "@1"));
        assert_eq!(s.summands(), [&m(&c4, "f")]);
        assert!(cosyzygy(&c4, &m(&c4, "f a")).is_zero());
        let lin = fixtures::lin();
        let s = cosyzygy(&lin, &m(&lin, "e"));
        assert_eq!(s.summands(), [&m(&lin, "@1")]);
    }

    #[test]
    fn orbits() {
        let c4 = fixtures::c4();
        let o = omega_orbit(&c4, arr(&c4, "b"), 100);
        assert_eq!(
            o.terminal,
            OrbitEnd::Cycle {
                entry: 0,
                length: 4
            }
        );
        let names: Vec<&str> = o.chain.iter().map(|x| c4.arrow_name(*x)).collect();
        assert_eq!(names, ["b", "g", "d", "a"]);
        let lin = fixtures::lin();
        let o = omega_orbit(&lin, arr(&lin, "a"), 100);
        assert_eq!(o.chain, [arr(&lin, "a"), arr(&lin, "b")]);
        assert_eq!(o.terminal, OrbitEnd::ProjectiveReached);
        assert!(StringModule::r_module(&lin, arr(&lin, "b")).is_projective(&lin));
        let tri = fixtures::tri3();
        assert_eq!(
            omega_orbit(&tri, arr(&tri, "p"), 100).cycle_length(),
            Some(3)
        );
    }

    #[test]
    fn lin_resolution() {
        let lin = fixtures::lin();
        let r = resolution(&lin, &m(&lin, "f"), 6);
        let ps: Vec<String> = r
            .degrees
            .iter()
            .map(|d| format_projectives(&lin, &d.projectives))
            .collect();
        assert_eq!(ps, ["P_4", "P_1", "P_2", "0", "0", "0", "0"]);
        assert_eq!(r.tail, None);
        assert_eq!(r.length, Some(2));
        assert_eq!(proj_dim(&lin, &m(&lin, "f")), Some(2));
    }

    #[test]
    fn c4_resolution() {
        let c4 = fixtures::c4();
        let r = resolution(&c4, &m(&c4, "f"), 9);
        let ps: Vec<String> = r
            .degrees
            .iter()
            .map(|d| format_projectives(&c4, &d.projectives))
            .collect();
        assert_eq!(
            ps,
            ["P_4", "P_1", "P_2", "P_6", "P_5", "P_1", "P_2", "P_6", "P_5", "P_1"]
        );
        assert_eq!(
            r.tail,
            Some(Tail {
                start: 1,
                period: 4
            })
        );
        assert_eq!(proj_dim(&c4, &m(&c4, "f")), None);

        let r = resolution(&c4, &m(&c4, "f -d"), 3);
        let ps: Vec<String> = r
            .degrees
            .iter()
            .map(|d| format_projectives(&c4, &d.projectives))
            .collect();
        assert_eq!(ps, ["P_4⊕P_6", "P_5", "0", "0"]);
        assert_eq!(r.length, Some(1));
    }

    #[test]
    fn dimensions() {
        let c4 = fixtures::c4();
        assert_eq!(
            proj_dim(&c4, &StringModule::projective(&c4, vs(&c4, &["2"])[0])),
            Some(0)
        );
        assert_eq!(gl_dim_status(&c4), GlobalDimension::Infinite);
        assert_eq!(gl_dim_status(&fixtures::lin()), GlobalDimension::Finite(2));
        assert_eq!(gl_dim_status(&fixtures::a3()), GlobalDimension::Finite(1));
        let lin = fixtures::lin();
        assert_eq!(inj_dim(&lin, &m(&lin, "e")), Some(2));
    }

    #[test]
    fn kronecker_band() {
        let k = fixtures::band();
        let b = BandModule::new(&k, &Band::parse(&k, "x -y").unwrap());
        let s = band_syzygy(&k, &b);
        assert_eq!(s.summands(), [&m(&k, "@2")]);
        assert_eq!(band_proj_dim(&k, &b), Some(1));
        assert_eq!(band_inj_dim(&k, &b), Some(1));
    }

    #[test]
    fn cycle_orbits_return_after_cycle_length() {
        for a in [fixtures::c4(), fixtures::tri3()] {
            for c in a.relation_cycles() {
                for &x in c.arrows() {
                    let o = omega_orbit(&a, x, 100);
                    assert_eq!(o.chain.len(), c.len());
                    assert_eq!(a.relation_successor_iter(x, c.len()), Some(x));
                }
            }
        }
    }
}
