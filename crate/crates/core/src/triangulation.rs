//! Gentle algebras of triangulated surfaces.
//!
//! A triangulation is given combinatorially: named edges, triangles as
//! counterclockwise triples of edges, and the set of boundary edges. The
//! algebra `Λ(T)` has the internal edges as vertices and an arrow `x → y`
//! (named `x>y`) whenever the internal edge `y` follows `x` in a triangle;
//! any two arrows in the same triangle compose to zero.
//!
//! Arcs are entered as their sequences of crossed internal edges.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{GentleAlgebra, Presentation};
use crate::error::TriangulationError;
use crate::ext::ext_dim;
use crate::homology::syzygy;
use crate::modules::StringModule;
use crate::strings::{Letter, StringWord};

/// Raw triangulation data as read from a file.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TriangulationData {
    pub edges: Vec<String>,
    pub triangles: Vec<[String; 3]>,
    pub boundary: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangulation {
    edges: Vec<String>,
    triangles: Vec<[usize; 3]>,
    boundary: Vec<bool>,
}

impl Triangulation {
    pub fn new(d: &TriangulationData) -> Result<Self, TriangulationError> {
        let mut index = HashMap::new();
        for (i, e) in d.edges.iter().enumerate() {
            if index.insert(e.as_str(), i).is_some() {
                return Err(TriangulationError::DuplicateEdge(e.clone()));
            }
        }
        let find = |e: &String| {
            index
                .get(e.as_str())
                .copied()
                .ok_or_else(|| TriangulationError::UnknownEdge(e.clone()))
        };
        let mut boundary = vec![false; d.edges.len()];
        for b in &d.boundary {
            boundary[find(b)?] = true;
        }
        let mut triangles = Vec::with_capacity(d.triangles.len());
        let mut count = vec![0usize; d.edges.len()];
        for (ti, t) in d.triangles.iter().enumerate() {
            let tri = [find(&t[0])?, find(&t[1])?, find(&t[2])?];
            for k in 0..3 {
                if tri[k] == tri[(k + 1) % 3] {
                    return Err(TriangulationError::SelfFolded {
                        index: ti,
                        edge: d.edges[tri[k]].clone(),
                    });
                }
                count[tri[k]] += 1;
            }
            if tri.iter().all(|&e| boundary[e]) {
                return Err(TriangulationError::NoInternalEdge(ti));
            }
            triangles.push(tri);
        }
        for (e, &c) in count.iter().enumerate() {
            let edge = d.edges[e].clone();
            if boundary[e] && c != 1 {
                return Err(TriangulationError::BoundaryEdgeCount { edge, count: c });
            }
            if !boundary[e] && c != 2 {
                return Err(TriangulationError::InternalEdgeCount { edge, count: c });
            }
        }
        Ok(Triangulation {
            edges: d.edges.clone(),
            triangles,
            boundary,
        })
    }

    pub fn internal_edges(&self) -> Vec<&str> {
        (0..self.edges.len())
            .filter(|&e| !self.boundary[e])
            .map(|e| self.edges[e].as_str())
            .collect()
    }

    pub fn triangle_count(&self) -> usize {
        self.triangles.len()
    }

    fn arrow_name(&self, x: usize, y: usize) -> String {
        format!("{}>{}", self.edges[x], self.edges[y])
    }

    /// `Λ(T)`; fails when the incidence pattern does not give a gentle
    /// algebra (for instance two triangles sharing two internal edges).
    pub fn algebra(&self) -> Result<GentleAlgebra, TriangulationError> {
        let mut p = Presentation {
            vertices: self
                .internal_edges()
                .into_iter()
                .map(String::from)
                .collect(),
            ..Presentation::default()
        };
        for t in &self.triangles {
            let mut arrows = Vec::new();
            for k in 0..3 {
                let (x, y) = (t[k], t[(k + 1) % 3]);
                if !self.boundary[x] && !self.boundary[y] {
                    let name = self.arrow_name(x, y);
                    p.arrows
                        .push((name.clone(), self.edges[x].clone(), self.edges[y].clone()));
                    arrows.push((k, name));
                }
            }
            // composable pairs inside the triangle: x>y then y>z
            for (k, first) in &arrows {
                if let Some((_, second)) = arrows.iter().find(|(k2, _)| *k2 == (k + 1) % 3) {
                    p.relations.push((first.clone(), second.clone()));
                }
            }
        }
        Ok(GentleAlgebra::validate(&p)?)
    }

    /// The string of an arc crossing the given internal edges in order.
    pub fn string_from_crossings(
        &self,
        a: &GentleAlgebra,
        crossed: &[&str],
    ) -> Result<StringWord, TriangulationError> {
        let first = crossed.first().ok_or(TriangulationError::EmptyArc)?;
        let ids: Vec<usize> = crossed
            .iter()
            .map(|e| {
                let i = self
                    .edges
                    .iter()
                    .position(|x| x == e)
                    .ok_or_else(|| TriangulationError::UnknownEdge(e.to_string()))?;
                if self.boundary[i] {
                    return Err(TriangulationError::NotInternal(e.to_string()));
                }
                Ok(i)
            })
            .collect::<Result<_, _>>()?;
        let start = a.find_vertex(first).expect("internal edges are vertices");
        let mut letters = Vec::new();
        for w in ids.windows(2) {
            let (x, y) = (w[0], w[1]);
            let shared: Vec<&[usize; 3]> = self
                .triangles
                .iter()
                .filter(|t| t.contains(&x) && t.contains(&y))
                .collect();
            let (ex, ey) = (self.edges[x].clone(), self.edges[y].clone());
            match shared.len() {
                0 => return Err(TriangulationError::NotAdjacent(ex, ey)),
                1 => {}
                _ => return Err(TriangulationError::AmbiguousAdjacency(ex, ey)),
            }
            let t = shared[0];
            let kx = t.iter().position(|&e| e == x).unwrap();
            let letter = if t[(kx + 1) % 3] == y {
                Letter::direct(a.find_arrow(&self.arrow_name(x, y)).unwrap())
            } else {
                Letter::inverse(a.find_arrow(&self.arrow_name(y, x)).unwrap())
            };
            letters.push(letter);
        }
        StringWord::from_parts(a, start, letters).map_err(TriangulationError::InvalidArc)
    }
}

/// `true` when every relation cycle has length three.
pub fn all_cycles_triangles(a: &GentleAlgebra) -> bool {
    a.relation_cycles().iter().all(|c| c.len() == 3)
}

/// Per-degree dims for `n` in `range` and the degrees `n` (with `n ≥ 2`)
/// where `Ext^n ≠ Ext^{n+3}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Period3Report {
    pub dims: Vec<(usize, usize)>,
    pub violations: Vec<usize>,
}

pub fn period3_check(
    a: &GentleAlgebra,
    m: &StringModule,
    n: &StringModule,
    degrees: std::ops::RangeInclusive<usize>,
) -> Period3Report {
    let dims: Vec<(usize, usize)> = degrees.clone().map(|d| (d, ext_dim(a, m, n, d))).collect();
    let violations = degrees
        .filter(|&d| d >= 2 && ext_dim(a, m, n, d) != ext_dim(a, m, n, d + 3))
        .collect();
    Period3Report { dims, violations }
}

/// For each end of `Ω¹(M)`, the degrees in `{2, 3, 4}` at which that end
/// contributes to `Ext^n(M, N)`.
pub fn ext_degree_profile(
    a: &GentleAlgebra,
    m: &StringModule,
    n: &StringModule,
) -> Vec<(crate::algebra::ArrowId, Vec<usize>)> {
    syzygy(a, m)
        .ends()
        .into_iter()
        .map(|d| {
            let degrees = (2..=4)
                .filter(|&k| {
                    a.relation_successor_iter(d, k - 2)
                        .is_some_and(|x| !crate::ext::ext1_from_r(a, x, n).is_empty())
                })
                .collect();
            (d, degrees)
        })
        .collect()
}

/// A random triangulation of a convex polygon together with the crossing
/// sequences of all its arcs that are not edges of the triangulation.
#[derive(Clone, Debug)]
pub struct RandomDisk {
    pub data: TriangulationData,
    pub arcs: Vec<Vec<String>>,
}

fn diag_name(i: usize, j: usize) -> String {
    format!("d{i}_{j}")
}

/// Random triangulation of an `n`-gon (`4 ≤ n`), vertices `0..n`
/// counterclockwise.
pub fn random_disk(seed: u64, n: usize) -> RandomDisk {
    assert!(n >= 4, "need at least one diagonal");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut triangles: Vec<[usize; 3]> = Vec::new();
    // split polygons (as ccw vertex lists) until only triangles remain
    let mut stack = vec![(0..n).collect::<Vec<usize>>()];
    while let Some(poly) = stack.pop() {
        if poly.len() == 3 {
            triangles.push([poly[0], poly[1], poly[2]]);
            continue;
        }
        let k = poly.len();
        let i = rng.gen_range(0..k);
        let j = (i + rng.gen_range(2..k - 1)) % k;
        let (lo, hi) = (i.min(j), i.max(j));
        stack.push(poly[lo..=hi].to_vec());
        let mut rest = poly[hi..].to_vec();
        rest.extend_from_slice(&poly[..=lo]);
        stack.push(rest);
    }
    let side = |i: usize, j: usize| -> Option<String> {
        let (a, b) = (i.min(j), i.max(j));
        if b == a + 1 {
            Some(format!("s{a}_{b}"))
        } else if a == 0 && b == n - 1 {
            Some(format!("s{b}_0"))
        } else {
            None
        }
    };
    let edge_name =
        |i: usize, j: usize| side(i, j).unwrap_or_else(|| diag_name(i.min(j), i.max(j)));
    let mut diagonals: Vec<(usize, usize)> = Vec::new();
    let mut data = TriangulationData::default();
    for i in 0..n {
        let name = edge_name(i, (i + 1) % n);
        data.edges.push(name.clone());
        data.boundary.push(name);
    }
    for t in &mut triangles {
        t.sort_unstable();
        for k in 0..3 {
            let (x, y) = (t[k], t[(k + 1) % 3]);
            let d = (x.min(y), x.max(y));
            if side(x, y).is_none() && !diagonals.contains(&d) {
                diagonals.push(d);
            }
        }
    }
    diagonals.sort_unstable();
    data.edges
        .extend(diagonals.iter().map(|&(i, j)| diag_name(i, j)));
    triangles.shuffle(&mut rng);
    for t in &triangles {
        // sorted vertices of a convex polygon are in ccw order
        data.triangles.push([
            edge_name(t[0], t[1]),
            edge_name(t[1], t[2]),
            edge_name(t[2], t[0]),
        ]);
    }

    let crosses = |(a, b): (usize, usize), (c, d): (usize, usize)| {
        let inside = |x: usize| a < x && x < b;
        a != c && a != d && b != c && b != d && inside(c) != inside(d)
    };
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in u + 2..n {
            if (u == 0 && v == n - 1) || diagonals.contains(&(u, v)) {
                continue;
            }
            let crossed: Vec<(usize, usize)> = diagonals
                .iter()
                .copied()
                .filter(|&d| crosses((u, v), d))
                .collect();
            arcs.push(order_crossings(&triangles, u, crossed));
        }
    }
    for &(i, j) in &diagonals {
        arcs.push(vec![diag_name(i, j)]);
    }
    RandomDisk { data, arcs }
}

/// Order the diagonals crossed by an arc from polygon vertex `u`: they form
/// a chain in which consecutive diagonals share a triangle.
fn order_crossings(
    triangles: &[[usize; 3]],
    u: usize,
    crossed: Vec<(usize, usize)>,
) -> Vec<String> {
    let has = |t: &[usize; 3], (i, j): (usize, usize)| t.contains(&i) && t.contains(&j);
    let share =
        |d: (usize, usize), e: (usize, usize)| triangles.iter().any(|t| has(t, d) && has(t, e));
    // first crossing: in a triangle with corner u
    let mut order = vec![*crossed
        .iter()
        .find(|&&d| triangles.iter().any(|t| t.contains(&u) && has(t, d)))
        .expect("an arc from u crosses a diagonal opposite u")];
    while order.len() < crossed.len() {
        let last = *order.last().unwrap();
        let next = crossed
            .iter()
            .copied()
            .find(|&d| !order.contains(&d) && share(last, d))
            .expect("crossed diagonals form a chain");
        order.push(next);
    }
    order.into_iter().map(|(i, j)| diag_name(i, j)).collect()
}
