//! Minimal projective resolutions by linear algebra.
//!
//! Only the raw arrow list and the relation list are consulted: a path is
//! non-zero exactly when no two consecutive arrows form a relation, which
//! is how indecomposable projectives get their path bases. The top of a
//! module is computed as the quotient by the span of all arrow images, so
//! nothing here depends on string combinatorics.

use std::collections::{HashMap, HashSet};

use super::linalg::{nullspace, rank, rank_of_vectors, Mat};
use super::rep::Representation;
use crate::algebra::{ArrowId, GentleAlgebra, VertexId};
use crate::error::OracleError;

/// Basis of `⊕_j P_{v_j}`: at each vertex `u`, the pairs (generator `j`,
/// non-zero path from `v_j` to `u`).
#[derive(Clone, Debug)]
pub struct PathBasis {
    pub gens: Vec<VertexId>,
    pub at: Vec<Vec<(usize, Vec<ArrowId>)>>,
    index: HashMap<(usize, Vec<ArrowId>), usize>,
}

struct Quiver {
    out: Vec<Vec<ArrowId>>,
    target: Vec<VertexId>,
    relations: HashSet<(ArrowId, ArrowId)>,
}

impl Quiver {
    fn new(a: &GentleAlgebra) -> Self {
        let mut out = vec![Vec::new(); a.vertex_count()];
        let mut target = Vec::new();
        for x in a.arrow_ids() {
            let arr = a.arrow(x);
            out[arr.source.0].push(x);
            target.push(arr.target);
        }
        Quiver {
            out,
            target,
            relations: a.relations().iter().copied().collect(),
        }
    }

    fn nonzero_paths(&self, v: VertexId) -> Result<Vec<(VertexId, Vec<ArrowId>)>, OracleError> {
        let limit = self.target.len() + 1;
        let mut out = vec![(v, Vec::new())];
        let mut frontier = vec![(v, Vec::<ArrowId>::new())];
        while let Some((end, path)) = frontier.pop() {
            if path.len() > limit {
                return Err(OracleError::DepthBudget(limit));
            }
            for &x in &self.out[end.0] {
                if path
                    .last()
                    .is_some_and(|&l| self.relations.contains(&(l, x)))
                {
                    continue;
                }
                let mut p = path.clone();
                p.push(x);
                out.push((self.target[x.0], p.clone()));
                frontier.push((self.target[x.0], p));
            }
        }
        Ok(out)
    }
}

impl PathBasis {
    pub fn new(a: &GentleAlgebra, gens: Vec<VertexId>) -> Result<Self, OracleError> {
        let q = Quiver::new(a);
        let mut at = vec![Vec::new(); a.vertex_count()];
        for (j, &v) in gens.iter().enumerate() {
            let mut paths = q.nonzero_paths(v)?;
            paths.sort_by(|x, y| x.1.len().cmp(&y.1.len()).then(x.1.cmp(&y.1)));
            for (end, p) in paths {
                at[end.0].push((j, p));
            }
        }
        let mut index = HashMap::new();
        for list in &at {
            for (i, key) in list.iter().enumerate() {
                index.insert(key.clone(), i);
            }
        }
        Ok(PathBasis { gens, at, index })
    }

    pub fn dims(&self) -> Vec<usize> {
        self.at.iter().map(|l| l.len()).collect()
    }

    /// Right multiplication by each arrow, as a representation.
    pub fn representation(&self, a: &GentleAlgebra) -> Representation {
        let dims = self.dims();
        let mut maps: Vec<Mat> = a
            .arrow_ids()
            .map(|x| Mat::zeros(dims[a.target(x).0], dims[a.source(x).0]))
            .collect();
        for x in a.arrow_ids() {
            let s = a.source(x).0;
            for (col, (j, p)) in self.at[s].iter().enumerate() {
                let mut q = p.clone();
                q.push(x);
                if let Some(&row) = self.index.get(&(*j, q)) {
                    maps[x.0].set(row, col, 1);
                }
            }
        }
        Representation { dims, maps }
    }
}

/// A sub-representation given by integer spanning vectors (a basis) at each
/// vertex, inside an ambient representation.
#[derive(Clone, Debug)]
pub struct Subrep {
    pub ambient: Representation,
    pub basis: Vec<Vec<Vec<i64>>>,
}

impl Subrep {
    pub fn whole(x: &Representation) -> Self {
        let basis = x
            .dims
            .iter()
            .map(|&d| {
                (0..d)
                    .map(|i| {
                        let mut e = vec![0; d];
                        e[i] = 1;
                        e
                    })
                    .collect()
            })
            .collect();
        Subrep {
            ambient: x.clone(),
            basis,
        }
    }

    pub fn dims(&self) -> Vec<usize> {
        self.basis.iter().map(|b| b.len()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.iter().all(|b| b.is_empty())
    }
}

/// Projective cover `⊕ P_{v_j} → X`: generator `j` maps to `gens[j].1`.
#[derive(Clone, Debug)]
pub struct CoverMap {
    pub gens: Vec<(VertexId, Vec<i64>)>,
    pub basis: PathBasis,
    pub source: Representation,
    /// Per vertex, the matrix from the cover to the ambient space.
    pub blocks: Vec<Mat>,
}

/// Top generators of `X`: at each vertex, basis vectors that are
/// independent modulo the images of all arrows.
fn top_generators(a: &GentleAlgebra, x: &Subrep) -> Result<Vec<(VertexId, Vec<i64>)>, OracleError> {
    let mut gens = Vec::new();
    for u in a.vertices() {
        let d = x.ambient.dims[u.0];
        let mut span: Vec<Vec<i64>> = Vec::new();
        for al in a.arrow_ids().filter(|&al| a.target(al) == u) {
            for y in &x.basis[a.source(al).0] {
                let img = x.ambient.maps[al.0].apply(y)?;
                if img.iter().any(|&c| c != 0) {
                    span.push(img);
                }
            }
        }
        let mut r = rank_of_vectors(d, &span)?;
        for b in &x.basis[u.0] {
            span.push(b.clone());
            let r2 = rank_of_vectors(d, &span)?;
            if r2 > r {
                r = r2;
                gens.push((u, b.clone()));
            } else {
                span.pop();
            }
        }
    }
    Ok(gens)
}

/// Projective cover of `X` and its kernel, a sub-representation of the
/// cover.
pub fn cover_and_kernel(a: &GentleAlgebra, x: &Subrep) -> Result<(CoverMap, Subrep), OracleError> {
    let gens = top_generators(a, x)?;
    let basis = PathBasis::new(a, gens.iter().map(|g| g.0).collect())?;
    let source = basis.representation(a);
    let mut blocks = Vec::with_capacity(a.vertex_count());
    let mut kernel = Vec::with_capacity(a.vertex_count());
    for u in a.vertices() {
        let mut cols = Vec::with_capacity(basis.at[u.0].len());
        for (j, p) in &basis.at[u.0] {
            let (v, xj) = &gens[*j];
            cols.push(x.ambient.path_matrix(*v, p)?.apply(xj)?);
        }
        let block = Mat::from_columns(x.ambient.dims[u.0], &cols);
        if rank(&block)? != x.basis[u.0].len() {
            return Err(OracleError::NotSurjective(u.0));
        }
        kernel.push(nullspace(&block)?);
        blocks.push(block);
    }
    Ok((
        CoverMap {
            gens,
            basis,
            source: source.clone(),
            blocks,
        },
        Subrep {
            ambient: source,
            basis: kernel,
        },
    ))
}

/// Terms `P_0, …, P_len` of a minimal projective resolution, each with its
/// generators expressed in the previous term.
#[derive(Clone, Debug)]
pub struct OracleResolution {
    pub covers: Vec<CoverMap>,
    /// Dimension vector of `Ω^{i+1}` for each computed term `i`.
    pub kernel_dims: Vec<Vec<usize>>,
}

pub fn resolve(
    a: &GentleAlgebra,
    x: &Representation,
    terms: usize,
) -> Result<OracleResolution, OracleError> {
    let mut covers = Vec::new();
    let mut kernel_dims = Vec::new();
    let mut current = Subrep::whole(x);
    for _ in 0..terms {
        if current.is_zero() {
            break;
        }
        let (cover, kernel) = cover_and_kernel(a, &current)?;
        covers.push(cover);
        kernel_dims.push(kernel.dims());
        current = kernel;
    }
    Ok(OracleResolution {
        covers,
        kernel_dims,
    })
}

/// Smallest `d` with `Ω^{d+1} = 0`, or `None` if that needs more than
/// `budget` terms.
pub fn proj_dim_oracle(
    a: &GentleAlgebra,
    x: &Representation,
    budget: usize,
) -> Result<Option<usize>, OracleError> {
    let r = resolve(a, x, budget + 1)?;
    Ok(r.kernel_dims.iter().position(|d| d.iter().all(|&k| k == 0)))
}

/// Injective dimension of `X` as the projective dimension of `D X` over
/// the opposite algebra.
pub fn inj_dim_oracle(
    a: &GentleAlgebra,
    x: &Representation,
    budget: usize,
) -> Result<Option<usize>, OracleError> {
    proj_dim_oracle(&a.opposite(), &x.dual(), budget)
}

pub fn syzygy_dims_oracle(
    a: &GentleAlgebra,
    x: &Representation,
) -> Result<Vec<usize>, OracleError> {
    let (_, k) = cover_and_kernel(a, &Subrep::whole(x))?;
    Ok(k.dims())
}

/// Dimension vector of the cokernel of the injective hull.
pub fn cosyzygy_dims_oracle(
    a: &GentleAlgebra,
    x: &Representation,
) -> Result<Vec<usize>, OracleError> {
    syzygy_dims_oracle(&a.opposite(), &x.dual())
}

/// Matrix of `Hom(P_i, N) → Hom(P_{i+1}, N)` induced by `next → P_i`.
fn hom_differential(
    prev: &CoverMap,
    next: &CoverMap,
    n: &Representation,
) -> Result<Mat, OracleError> {
    let offsets = |gens: &[(VertexId, Vec<i64>)]| {
        let mut o = Vec::with_capacity(gens.len());
        let mut total = 0;
        for g in gens {
            o.push(total);
            total += n.dims[g.0 .0];
        }
        (o, total)
    };
    let (col_off, cols) = offsets(&prev.gens);
    let (row_off, rows) = offsets(&next.gens);
    let mut d = Mat::zeros(rows, cols);
    for (jn, (u, x)) in next.gens.iter().enumerate() {
        for (coef, (k, p)) in x.iter().zip(&prev.basis.at[u.0]) {
            if *coef == 0 {
                continue;
            }
            let np = n.path_matrix(prev.gens[*k].0, p)?;
            for r in 0..np.rows() {
                for c in 0..np.cols() {
                    let add = coef
                        .checked_mul(np.get(r, c))
                        .ok_or(OracleError::Overflow)?;
                    let (i, j) = (row_off[jn] + r, col_off[*k] + c);
                    let v = d.get(i, j).checked_add(add).ok_or(OracleError::Overflow)?;
                    d.set(i, j, v);
                }
            }
        }
    }
    Ok(d)
}

fn hom_space_dim(cover: Option<&CoverMap>, n: &Representation) -> usize {
    cover.map_or(0, |c| c.gens.iter().map(|g| n.dims[g.0 .0]).sum())
}

/// `dim Ext^k(M, N)` for `k = 0..=max_degree` (degree 0 is `Hom`), from the
/// complex `Hom(P_•, N)`.
pub fn ext_dims_oracle(
    a: &GentleAlgebra,
    m: &Representation,
    n: &Representation,
    max_degree: usize,
) -> Result<Vec<usize>, OracleError> {
    let res = resolve(a, m, max_degree + 2)?;
    let c = &res.covers;
    // rank of d^i: Hom(P_i, N) → Hom(P_{i+1}, N)
    let mut ranks = Vec::with_capacity(max_degree + 1);
    for i in 0..=max_degree {
        let r = match (c.get(i), c.get(i + 1)) {
            (Some(p), Some(q)) => rank(&hom_differential(p, q, n)?)?,
            _ => 0,
        };
        ranks.push(r);
    }
    Ok((0..=max_degree)
        .map(|i| {
            let before = if i == 0 { 0 } else { ranks[i - 1] };
            hom_space_dim(c.get(i), n) - ranks[i] - before
        })
        .collect())
}

pub fn ext_dim_oracle(
    a: &GentleAlgebra,
    m: &Representation,
    n: &Representation,
    degree: usize,
) -> Result<usize, OracleError> {
    Ok(ext_dims_oracle(a, m, n, degree)?[degree])
}
