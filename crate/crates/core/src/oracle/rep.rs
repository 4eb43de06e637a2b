use rand::Rng;

use super::linalg::{rank, Mat};
use crate::algebra::{ArrowId, GentleAlgebra, VertexId};
use crate::error::OracleError;
use crate::modules::StringModule;
use crate::strings::{Band, Letter, StringWord};

/// A module as a quiver representation: a vector space `K^{dims[v]}` per
/// vertex and one integer matrix per arrow, of shape
/// `dims[target] × dims[source]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub dims: Vec<usize>,
    pub maps: Vec<Mat>,
}

impl Representation {
    pub fn zero(a: &GentleAlgebra) -> Self {
        Representation {
            dims: vec![0; a.vertex_count()],
            maps: a.arrow_ids().map(|_| Mat::zeros(0, 0)).collect(),
        }
    }

    /// Basis vector at each walk position; letter `i` joins positions `i`
    /// and `i + 1` (cyclically for bands) with a unit entry.
    fn from_walk(
        a: &GentleAlgebra,
        vertices: &[VertexId],
        letters: &[Letter],
        cyclic: bool,
    ) -> Self {
        let mut dims = vec![0; a.vertex_count()];
        let mut index = Vec::with_capacity(vertices.len());
        for v in vertices {
            index.push(dims[v.0]);
            dims[v.0] += 1;
        }
        let mut maps: Vec<Mat> = a
            .arrow_ids()
            .map(|x| Mat::zeros(dims[a.target(x).0], dims[a.source(x).0]))
            .collect();
        let n = vertices.len();
        for (i, l) in letters.iter().enumerate() {
            let j = if cyclic { (i + 1) % n } else { i + 1 };
            let (from, to) = if l.inverse { (j, i) } else { (i, j) };
            maps[l.arrow.0].set(index[to], index[from], 1);
        }
        Representation { dims, maps }
    }

    pub fn from_string(a: &GentleAlgebra, w: &StringWord) -> Self {
        Self::from_walk(a, &w.vertices(a), w.letters(), false)
    }

    pub fn from_module(a: &GentleAlgebra, m: &StringModule) -> Self {
        Self::from_string(a, m.word())
    }

    /// Quasi-simple band module with parameter 1.
    pub fn from_band(a: &GentleAlgebra, b: &Band) -> Self {
        Self::from_walk(a, &b.vertices(a), b.letters(), true)
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// `X_β X_α` for the path `α β`.
    pub fn path_matrix(&self, start: VertexId, path: &[ArrowId]) -> Result<Mat, OracleError> {
        let mut m = Mat::identity(self.dims[start.0]);
        for &x in path {
            m = self.maps[x.0].mul(&m)?;
        }
        Ok(m)
    }

    pub fn satisfies_relations(&self, a: &GentleAlgebra) -> Result<bool, OracleError> {
        for &(x, y) in a.relations() {
            if !self.maps[y.0].mul(&self.maps[x.0])?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The dual `D X` as a representation of the opposite algebra (arrows
    /// keep their identifiers).
    pub fn dual(&self) -> Self {
        Representation {
            dims: self.dims.clone(),
            maps: self.maps.iter().map(|m| m.transpose()).collect(),
        }
    }

    /// Isomorphic representation `G_t X_α G_s⁻¹` for random unimodular `G_v`.
    pub fn shuffled<R: Rng>(&self, a: &GentleAlgebra, rng: &mut R) -> Result<Self, OracleError> {
        let mut g = Vec::with_capacity(self.dims.len());
        for &d in &self.dims {
            g.push(random_unimodular(d, rng));
        }
        let mut maps = Vec::with_capacity(self.maps.len());
        for x in a.arrow_ids() {
            let (gs_inv, gt) = (&g[a.source(x).0].1, &g[a.target(x).0].0);
            maps.push(gt.mul(&self.maps[x.0])?.mul(gs_inv)?);
        }
        Ok(Representation {
            dims: self.dims.clone(),
            maps,
        })
    }
}

/// A product of elementary row operations and its inverse.
fn random_unimodular<R: Rng>(n: usize, rng: &mut R) -> (Mat, Mat) {
    let mut g = Mat::identity(n);
    let mut inv = Mat::identity(n);
    if n < 2 {
        if n == 1 && rng.gen_bool(0.5) {
            g.set(0, 0, -1);
            inv.set(0, 0, -1);
        }
        return (g, inv);
    }
    for _ in 0..2 * n {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let c = if rng.gen_bool(0.5) { 1 } else { -1 };
        // E = I + c e_ij; g ← E g, inv ← inv E⁻¹
        let mut e = Mat::identity(n);
        e.set(i, j, c);
        let mut e_inv = Mat::identity(n);
        e_inv.set(i, j, -c);
        g = e.mul(&g).expect("small entries");
        inv = inv.mul(&e_inv).expect("small entries");
    }
    (g, inv)
}

/// Dimension of `Hom(X, Y)`: the solutions `(F_v)` of
/// `F_{t(α)} X_α = Y_α F_{s(α)}` for every arrow.
pub fn hom_dim(
    a: &GentleAlgebra,
    x: &Representation,
    y: &Representation,
) -> Result<usize, OracleError> {
    let mut offset = Vec::with_capacity(x.dims.len());
    let mut unknowns = 0;
    for v in 0..x.dims.len() {
        offset.push(unknowns);
        unknowns += y.dims[v] * x.dims[v];
    }
    if unknowns == 0 {
        return Ok(0);
    }
    // F_v[i][k] is unknown offset[v] + i * dimX_v + k
    let var = |v: usize, i: usize, k: usize| offset[v] + i * x.dims[v] + k;
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for al in a.arrow_ids() {
        let (s, t) = (a.source(al).0, a.target(al).0);
        let (xm, ym) = (&x.maps[al.0], &y.maps[al.0]);
        for i in 0..y.dims[t] {
            for j in 0..x.dims[s] {
                let mut row = vec![0i64; unknowns];
                for k in 0..x.dims[t] {
                    row[var(t, i, k)] += xm.get(k, j);
                }
                for l in 0..y.dims[s] {
                    row[var(s, l, j)] -= ym.get(i, l);
                }
                if row.iter().any(|&c| c != 0) {
                    rows.push(row);
                }
            }
        }
    }
    let flat: Vec<i64> = rows.iter().flatten().copied().collect();
    let r = rank(&Mat::from_rows(rows.len(), unknowns, &flat))?;
    Ok(unknowns - r)
}
