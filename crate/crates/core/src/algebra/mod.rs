//! Gentle algebras `KQ/I` given by a quiver and length-two monomial relations.
//!
//! A [`GentleAlgebra`] is built from a raw [`Presentation`] by
//! [`GentleAlgebra::validate`], which checks the gentle axioms and
//! finite-dimensionality and precomputes, for every arrow, its unique
//! composable and relation successors and predecessors. Vertices and
//! arrows keep their declaration order; name comparisons are used where a
//! deterministic tie-break is needed.

mod random;

pub use random::random_gentle;

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::AlgebraError;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(pub usize);

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArrowId(pub usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: VertexId,
    pub target: VertexId,
}

/// Unvalidated quiver with relations, exactly as read from a file.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Presentation {
    pub vertices: Vec<String>,
    /// `(name, source, target)`
    pub arrows: Vec<(String, String, String)>,
    /// `(first, second)`: the path `first` followed by `second` lies in `I`.
    pub relations: Vec<(String, String)>,
}

/// An oriented cycle `α_1 … α_n` with `α_i α_{i+1} ∈ I` for all `i` mod `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCycle {
    arrows: Vec<ArrowId>,
}

impl RelationCycle {
    pub fn arrows(&self) -> &[ArrowId] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct GentleAlgebra {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    relations: Vec<(ArrowId, ArrowId)>,
    vertex_index: HashMap<String, VertexId>,
    arrow_index: HashMap<String, ArrowId>,
    outgoing: Vec<Vec<ArrowId>>,
    incoming: Vec<Vec<ArrowId>>,
    direct_succ: Vec<Option<ArrowId>>,
    relation_succ: Vec<Option<ArrowId>>,
    direct_pred: Vec<Option<ArrowId>>,
    relation_pred: Vec<Option<ArrowId>>,
    cycles: Vec<RelationCycle>,
    /// `(cycle index, position in cycle)` for arrows on a relation cycle.
    cycle_slot: Vec<Option<(usize, usize)>>,
}

impl PartialEq for GentleAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices
            && self.arrows == other.arrows
            && self.relations == other.relations
    }
}

impl Eq for GentleAlgebra {}

impl GentleAlgebra {
    /// Check the gentle axioms and build the successor tables.
    pub fn validate(p: &Presentation) -> Result<Self, AlgebraError> {
        let mut vertex_index = HashMap::new();
        for (i, name) in p.vertices.iter().enumerate() {
            if vertex_index.insert(name.clone(), VertexId(i)).is_some() {
                return Err(AlgebraError::DuplicateVertex(name.clone()));
            }
        }

        let mut arrows = Vec::with_capacity(p.arrows.len());
        let mut arrow_index = HashMap::new();
        for (name, src, dst) in &p.arrows {
            if arrow_index.contains_key(name) {
                return Err(AlgebraError::DuplicateArrow(name.clone()));
            }
            let lookup = |v: &String| {
                vertex_index
                    .get(v)
                    .copied()
                    .ok_or_else(|| AlgebraError::DanglingEndpoint {
                        arrow: name.clone(),
                        vertex: v.clone(),
                    })
            };
            let source = lookup(src)?;
            let target = lookup(dst)?;
            arrow_index.insert(name.clone(), ArrowId(arrows.len()));
            arrows.push(Arrow {
                name: name.clone(),
                source,
                target,
            });
        }

        let mut relations = Vec::with_capacity(p.relations.len());
        let mut seen = HashSet::new();
        for (a, b) in &p.relations {
            let find = |n: &String| {
                arrow_index
                    .get(n)
                    .copied()
                    .ok_or_else(|| AlgebraError::UnknownRelationArrow(n.clone()))
            };
            let (x, y) = (find(a)?, find(b)?);
            if arrows[x.0].target != arrows[y.0].source {
                return Err(AlgebraError::NonComposableRelation {
                    first: a.clone(),
                    second: b.clone(),
                    end: p.vertices[arrows[x.0].target.0].clone(),
                    start: p.vertices[arrows[y.0].source.0].clone(),
                });
            }
            if !seen.insert((x, y)) {
                return Err(AlgebraError::DuplicateRelation(a.clone(), b.clone()));
            }
            relations.push((x, y));
        }

        let n = p.vertices.len();
        let mut outgoing = vec![Vec::new(); n];
        let mut incoming = vec![Vec::new(); n];
        for (i, a) in arrows.iter().enumerate() {
            outgoing[a.source.0].push(ArrowId(i));
            incoming[a.target.0].push(ArrowId(i));
        }
        for v in 0..n {
            for (dir, list) in [("outgoing", &outgoing[v]), ("incoming", &incoming[v])] {
                if list.len() > 2 {
                    return Err(AlgebraError::Valence {
                        vertex: p.vertices[v].clone(),
                        direction: dir,
                        count: list.len(),
                    });
                }
            }
        }

        let m = arrows.len();
        let name = |a: ArrowId| arrows[a.0].name.clone();
        let mut direct_succ = vec![None; m];
        let mut relation_succ = vec![None; m];
        let mut direct_pred = vec![None; m];
        let mut relation_pred = vec![None; m];
        for a in 0..m {
            let alpha = ArrowId(a);
            for &beta in &outgoing[arrows[a].target.0] {
                let (slot, is_rel) = if seen.contains(&(alpha, beta)) {
                    (&mut relation_succ[a], true)
                } else {
                    (&mut direct_succ[a], false)
                };
                if let Some(prev) = slot.replace(beta) {
                    let (first, second) = (name(prev), name(beta));
                    return Err(if is_rel {
                        AlgebraError::NonUniqueRelation {
                            arrow: name(alpha),
                            side: "following",
                            first,
                            second,
                        }
                    } else {
                        AlgebraError::NonUniqueComposable {
                            arrow: name(alpha),
                            side: "following",
                            first,
                            second,
                        }
                    });
                }
            }
            for &gamma in &incoming[arrows[a].source.0] {
                let (slot, is_rel) = if seen.contains(&(gamma, alpha)) {
                    (&mut relation_pred[a], true)
                } else {
                    (&mut direct_pred[a], false)
                };
                if let Some(prev) = slot.replace(gamma) {
                    let (first, second) = (name(prev), name(gamma));
                    return Err(if is_rel {
                        AlgebraError::NonUniqueRelation {
                            arrow: name(alpha),
                            side: "preceding",
                            first,
                            second,
                        }
                    } else {
                        AlgebraError::NonUniqueComposable {
                            arrow: name(alpha),
                            side: "preceding",
                            first,
                            second,
                        }
                    });
                }
            }
        }

        if let Some(cycle) = find_cycle(&direct_succ) {
            return Err(AlgebraError::InfiniteDimensional(
                cycle.into_iter().map(name).collect(),
            ));
        }

        // relation_succ is a partial injection; its closed orbits are the
        // relation cycles. Each cycle starts at its first-declared arrow.
        let mut cycles = Vec::new();
        let mut cycle_slot = vec![None; m];
        for a in 0..m {
            if cycle_slot[a].is_some() {
                continue;
            }
            let mut orbit = vec![ArrowId(a)];
            let mut cur = relation_succ[a];
            let mut closed = false;
            while let Some(next) = cur {
                if next.0 == a {
                    closed = true;
                    break;
                }
                if orbit.len() > m {
                    break;
                }
                orbit.push(next);
                cur = relation_succ[next.0];
            }
            if closed {
                let ci = cycles.len();
                for (pos, x) in orbit.iter().enumerate() {
                    cycle_slot[x.0] = Some((ci, pos));
                }
                cycles.push(RelationCycle { arrows: orbit });
            }
        }

        Ok(GentleAlgebra {
            vertices: p.vertices.clone(),
            arrows,
            relations,
            vertex_index,
            arrow_index,
            outgoing,
            incoming,
            direct_succ,
            relation_succ,
            direct_pred,
            relation_pred,
            cycles,
            cycle_slot,
        })
    }

    pub fn presentation(&self) -> Presentation {
        Presentation {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| {
                    (
                        a.name.clone(),
                        self.vertices[a.source.0].clone(),
                        self.vertices[a.target.0].clone(),
                    )
                })
                .collect(),
            relations: self
                .relations
                .iter()
                .map(|&(x, y)| (self.arrow_name(x).to_owned(), self.arrow_name(y).to_owned()))
                .collect(),
        }
    }

    /// The opposite algebra: every arrow reversed, every relation `αβ`
    /// replaced by `β°α°`. Arrow names are kept.
    pub fn opposite(&self) -> GentleAlgebra {
        let p = self.presentation();
        let op = Presentation {
            vertices: p.vertices,
            arrows: p.arrows.into_iter().map(|(n, s, t)| (n, t, s)).collect(),
            relations: p.relations.into_iter().map(|(a, b)| (b, a)).collect(),
        };
        GentleAlgebra::validate(&op).expect("opposite of a gentle algebra is gentle")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertices.len()).map(VertexId)
    }

    pub fn arrow_ids(&self) -> impl Iterator<Item = ArrowId> + '_ {
        (0..self.arrows.len()).map(ArrowId)
    }

    pub fn arrow(&self, a: ArrowId) -> &Arrow {
        &self.arrows[a.0]
    }

    pub fn source(&self, a: ArrowId) -> VertexId {
        self.arrows[a.0].source
    }

    pub fn target(&self, a: ArrowId) -> VertexId {
        self.arrows[a.0].target
    }

    pub fn arrow_name(&self, a: ArrowId) -> &str {
        &self.arrows[a.0].name
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v.0]
    }

    pub fn find_vertex(&self, name: &str) -> Option<VertexId> {
        self.vertex_index.get(name).copied()
    }

    pub fn find_arrow(&self, name: &str) -> Option<ArrowId> {
        self.arrow_index.get(name).copied()
    }

    pub fn relations(&self) -> &[(ArrowId, ArrowId)] {
        &self.relations
    }

    /// `αβ ∈ I`.
    pub fn is_relation(&self, first: ArrowId, second: ArrowId) -> bool {
        self.relation_succ[first.0] == Some(second)
    }

    pub fn outgoing(&self, v: VertexId) -> &[ArrowId] {
        &self.outgoing[v.0]
    }

    pub fn incoming(&self, v: VertexId) -> &[ArrowId] {
        &self.incoming[v.0]
    }

    /// The unique `β` with `αβ ∉ I`.
    pub fn direct_successor(&self, a: ArrowId) -> Option<ArrowId> {
        self.direct_succ[a.0]
    }

    /// The unique `β` with `αβ ∈ I`.
    pub fn relation_successor(&self, a: ArrowId) -> Option<ArrowId> {
        self.relation_succ[a.0]
    }

    /// The unique `γ` with `γα ∉ I`.
    pub fn direct_predecessor(&self, a: ArrowId) -> Option<ArrowId> {
        self.direct_pred[a.0]
    }

    /// The unique `γ` with `γα ∈ I`.
    pub fn relation_predecessor(&self, a: ArrowId) -> Option<ArrowId> {
        self.relation_pred[a.0]
    }

    pub fn relation_cycles(&self) -> &[RelationCycle] {
        &self.cycles
    }

    /// The relation cycle through `a`, if any, together with `a`'s position on it.
    pub fn cycle_of(&self, a: ArrowId) -> Option<(&RelationCycle, usize)> {
        self.cycle_slot[a.0].map(|(c, pos)| (&self.cycles[c], pos))
    }

    pub fn cycle_index(&self, a: ArrowId) -> Option<usize> {
        self.cycle_slot[a.0].map(|(c, _)| c)
    }

    pub fn on_relation_cycle(&self, a: ArrowId) -> bool {
        self.cycle_slot[a.0].is_some()
    }

    /// Least common multiple of all relation-cycle lengths (1 when there are none).
    pub fn cycle_lcm(&self) -> usize {
        self.cycles
            .iter()
            .fold(1, |acc, c| num_integer::lcm(acc, c.len()))
    }

    /// `relation_successor` applied `steps` times, if every step exists.
    pub fn relation_successor_iter(&self, a: ArrowId, steps: usize) -> Option<ArrowId> {
        if let Some((cycle, pos)) = self.cycle_of(a) {
            return Some(cycle.arrows[(pos + steps) % cycle.len()]);
        }
        let mut cur = a;
        for _ in 0..steps {
            cur = self.relation_succ[cur.0]?;
        }
        Some(cur)
    }

    /// Arrows of the right-maximal direct path `p` with `αp ∉ I`, i.e. the
    /// string of `R(α)`. Empty when `α` has no composable successor.
    pub fn maximal_path_after(&self, a: ArrowId) -> Vec<ArrowId> {
        let mut path = Vec::new();
        let mut cur = self.direct_succ[a.0];
        while let Some(b) = cur {
            path.push(b);
            cur = self.direct_succ[b.0];
        }
        path
    }

    /// Arrows of the left-maximal direct path `q` with `qα ∉ I`, in path
    /// order. Empty when `α` has no composable predecessor.
    pub fn maximal_path_before(&self, a: ArrowId) -> Vec<ArrowId> {
        let mut path = Vec::new();
        let mut cur = self.direct_pred[a.0];
        while let Some(b) = cur {
            path.push(b);
            cur = self.direct_pred[b.0];
        }
        path.reverse();
        path
    }

    /// The maximal direct path starting with `a`.
    pub fn maximal_path_from(&self, a: ArrowId) -> Vec<ArrowId> {
        let mut path = vec![a];
        path.extend(self.maximal_path_after(a));
        path
    }

    /// The maximal direct path ending with `a`.
    pub fn maximal_path_into(&self, a: ArrowId) -> Vec<ArrowId> {
        let mut path = self.maximal_path_before(a);
        path.push(a);
        path
    }

    /// `arrows` sorted by name.
    pub fn sorted_by_name(&self, arrows: &[ArrowId]) -> Vec<ArrowId> {
        let mut v = arrows.to_vec();
        v.sort_by(|x, y| self.arrow_name(*x).cmp(self.arrow_name(*y)));
        v
    }

    pub fn cycle_display(&self, c: &RelationCycle) -> String {
        let names: Vec<&str> = c.arrows.iter().map(|a| self.arrow_name(*a)).collect();
        format!("({})", names.join(","))
    }
}

impl fmt::Display for GentleAlgebra {
    /// The line-oriented algebra file format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.vertices {
            writeln!(f, "vertex {v}")?;
        }
        for a in &self.arrows {
            writeln!(
                f,
                "arrow {} {} {}",
                a.name, self.vertices[a.source.0], self.vertices[a.target.0]
            )?;
        }
        for &(x, y) in &self.relations {
            writeln!(f, "rel {} {}", self.arrow_name(x), self.arrow_name(y))?;
        }
        Ok(())
    }
}

/// Any cycle in the functional graph `a -> succ[a]`.
fn find_cycle(succ: &[Option<ArrowId>]) -> Option<Vec<ArrowId>> {
    // 0 = unvisited, 1 = on current walk, 2 = finished
    let mut state = vec![0u8; succ.len()];
    for start in 0..succ.len() {
        if state[start] != 0 {
            continue;
        }
        let mut walk = Vec::new();
        let mut cur = Some(ArrowId(start));
        while let Some(a) = cur {
            match state[a.0] {
                0 => {
                    state[a.0] = 1;
                    walk.push(a);
                    cur = succ[a.0];
                }
                1 => {
                    let pos = walk.iter().position(|x| *x == a).unwrap();
                    return Some(walk[pos..].to_vec());
                }
                _ => break,
            }
        }
        for a in walk {
            state[a.0] = 2;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn id(a: &GentleAlgebra, n: &str) -> ArrowId {
        a.find_arrow(n).unwrap()
    }

    #[test]
    fn c4_successors() {
        let c4 = fixtures::c4();
        assert_eq!(c4.direct_successor(id(&c4, "b")), Some(id(&c4, "e")));
        assert_eq!(c4.direct_successor(id(&c4, "g")), None);
        assert_eq!(c4.relation_successor(id(&c4, "b")), Some(id(&c4, "g")));
        assert_eq!(c4.relation_successor(id(&c4, "e")), None);
        let lin = fixtures::lin();
        assert_eq!(lin.direct_successor(id(&lin, "f")), Some(id(&lin, "a")));
        assert_eq!(lin.relation_successor(id(&lin, "a")), Some(id(&lin, "b")));
    }

    #[test]
    fn relation_cycles_of_fixtures() {
        let c4 = fixtures::c4();
        let cycles: Vec<String> = c4
            .relation_cycles()
            .iter()
            .map(|c| c4.cycle_display(c))
            .collect();
        assert_eq!(cycles, ["(b,g,d,a)"]);
        assert!(fixtures::lin().relation_cycles().is_empty());
        let tri = fixtures::tri3();
        assert_eq!(tri.relation_cycles().len(), 1);
        assert_eq!(tri.cycle_display(&tri.relation_cycles()[0]), "(p,q,r)");
    }

    #[test]
    fn maximal_paths() {
        let c4 = fixtures::c4();
        assert_eq!(c4.maximal_path_after(id(&c4, "b")), vec![id(&c4, "e")]);
        assert!(c4.maximal_path_after(id(&c4, "g")).is_empty());
        let lin = fixtures::lin();
        assert_eq!(lin.maximal_path_after(id(&lin, "f")), vec![id(&lin, "a")]);
    }

    #[test]
    fn rejects_second_relation_into_a() {
        let mut p = fixtures::c4().presentation();
        p.relations.push(("f".into(), "a".into()));
        let err = GentleAlgebra::validate(&p).unwrap_err();
        assert!(matches!(
            err,
            AlgebraError::NonUniqueRelation { ref arrow, side: "preceding", .. } if arrow == "a"
        ));
    }

    #[test]
    fn rejects_structural_errors() {
        let base = || Presentation {
            vertices: vec!["1".into(), "2".into()],
            arrows: vec![("x".into(), "1".into(), "2".into())],
            relations: vec![],
        };
        let mut p = base();
        p.vertices.push("1".into());
        assert_eq!(
            GentleAlgebra::validate(&p),
            Err(AlgebraError::DuplicateVertex("1".into()))
        );
        let mut p = base();
        p.arrows.push(("x".into(), "2".into(), "1".into()));
        assert_eq!(
            GentleAlgebra::validate(&p),
            Err(AlgebraError::DuplicateArrow("x".into()))
        );
        let mut p = base();
        p.arrows.push(("y".into(), "2".into(), "9".into()));
        assert!(matches!(
            GentleAlgebra::validate(&p),
            Err(AlgebraError::DanglingEndpoint { .. })
        ));
        let mut p = base();
        p.relations.push(("x".into(), "x".into()));
        assert!(matches!(
            GentleAlgebra::validate(&p),
            Err(AlgebraError::NonComposableRelation { .. })
        ));
        let mut p = base();
        for n in ["y", "z"] {
            p.arrows.push((n.into(), "1".into(), "2".into()));
        }
        assert!(matches!(
            GentleAlgebra::validate(&p),
            Err(AlgebraError::Valence {
                direction: "outgoing",
                count: 3,
                ..
            })
        ));
    }

    #[test]
    fn rejects_relation_free_cycle() {
        let p = Presentation {
            vertices: vec!["1".into(), "2".into()],
            arrows: vec![
                ("x".into(), "1".into(), "2".into()),
                ("y".into(), "2".into(), "1".into()),
            ],
            relations: vec![("x".into(), "y".into())],
        };
        // yx is still composable, but xy is not: no free cycle
        assert!(GentleAlgebra::validate(&p).is_ok());
        let mut q = p.clone();
        q.relations.clear();
        assert!(matches!(
            GentleAlgebra::validate(&q),
            Err(AlgebraError::InfiniteDimensional(_))
        ));
    }

    #[test]
    fn loops_with_relation_accepted() {
        let p = Presentation {
            vertices: vec!["1".into()],
            arrows: vec![("x".into(), "1".into(), "1".into())],
            relations: vec![("x".into(), "x".into())],
        };
        let a = GentleAlgebra::validate(&p).unwrap();
        assert_eq!(a.relation_cycles().len(), 1);
        assert_eq!(a.relation_cycles()[0].len(), 1);
    }

    #[test]
    fn opposite_reverses_relations() {
        let c4 = fixtures::c4();
        let op = c4.opposite();
        assert!(op.is_relation(id(&op, "g"), id(&op, "b")));
        assert_eq!(op.relation_cycles()[0].len(), 4);
        assert_eq!(op.opposite(), c4);
    }

    #[test]
    fn relation_successor_iteration() {
        let c4 = fixtures::c4();
        let b = id(&c4, "b");
        assert_eq!(c4.relation_successor_iter(b, 4), Some(b));
        assert_eq!(c4.relation_successor_iter(b, 5), Some(id(&c4, "g")));
        let lin = fixtures::lin();
        let a = id(&lin, "a");
        assert_eq!(lin.relation_successor_iter(a, 1), Some(id(&lin, "b")));
        assert_eq!(lin.relation_successor_iter(a, 2), None);
    }
}
