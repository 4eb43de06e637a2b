//! Extension spaces between string modules.
//!
//! `Ext¹(M(v), M(w))` has a basis of arrow extensions (middle term
//! `M(w β⁻¹ v)`) and overlap extensions (two middle terms glued along a
//! common factor `m` that is a submodule of `M(v)` and a quotient of
//! `M(w)`). Every enumeration runs over both orientations of each string.
//!
//! In degree `n ≥ 2`, `Ext^n(M, N) = Σ Ext¹(R(α_{n-1}), N)` over the two
//! end orbits `α_1 = δ, α_{i+1} = relsucc(α_i)` of the first syzygy.
//! `Ext¹(R(α), N)` is spanned by arrow extensions through `β = relsucc(α)`;
//! it is usually at most one-dimensional, but a string that can attach
//! `β⁻¹` at both of its ends (a closed string, or a loop `γ` with `γ² ∈ I`)
//! yields two independent classes.

use std::collections::HashSet;
use std::fmt;

use crate::algebra::{ArrowId, GentleAlgebra};
use crate::homology::syzygy;
use crate::modules::StringModule;
use crate::strings::{Letter, StringWord};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtKind {
    Arrow(ArrowId),
    /// Common factor `m` and its alignment: letter offsets into the chosen
    /// orientations of `v` and `w`.
    Overlap {
        m: StringWord,
        v_offset: usize,
        w_offset: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtBasisElement {
    pub kind: ExtKind,
    /// Canonical middle-term strings (one for arrow, two for overlap).
    pub middle: Vec<StringWord>,
}

fn orientations(w: &StringWord) -> Vec<(bool, StringWord)> {
    if w.is_trivial() {
        vec![(false, w.clone())]
    } else {
        vec![(false, w.clone()), (true, w.invert())]
    }
}

fn join(
    a: &GentleAlgebra,
    start: crate::algebra::VertexId,
    parts: &[&[Letter]],
) -> Option<StringWord> {
    let letters: Vec<Letter> = parts.iter().flat_map(|p| p.iter().copied()).collect();
    StringWord::from_parts(a, start, letters).ok()
}

/// Arrow extensions of `M(v)` by `M(w)`: `0 → M(w) → M(w′β⁻¹v′) → M(v) → 0`.
pub fn arrow_extensions(a: &GentleAlgebra, v: &StringWord, w: &StringWord) -> Vec<ExtBasisElement> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for (_, vo) in orientations(v) {
        for (_, wo) in orientations(w) {
            for &beta in a.incoming(wo.end()) {
                if a.source(beta) != vo.start() {
                    continue;
                }
                let link = [Letter::inverse(beta)];
                let Some(mid) = join(a, wo.start(), &[wo.letters(), &link, vo.letters()]) else {
                    continue;
                };
                let canon = mid.canonical(a);
                if seen.insert(canon.clone()) {
                    out.push(ExtBasisElement {
                        kind: ExtKind::Arrow(beta),
                        middle: vec![canon],
                    });
                }
            }
        }
    }
    out
}

/// Overlap extensions of `M(v)` by `M(w)`.
///
/// With `v′ = v_L B m A⁻¹ v_R` and `w′ = w_L D⁻¹ m C w_R` (each boundary
/// letter present unless `m` touches that end of the word), the middle
/// terms are `v_L B m C w_R` and `w_L D⁻¹ m A⁻¹ v_R`. The sequence splits
/// unless a letter is present on each side of `m`.
#[allow(clippy::needless_range_loop)]
pub fn overlap_extensions(
    a: &GentleAlgebra,
    v: &StringWord,
    w: &StringWord,
) -> Vec<ExtBasisElement> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let (lv, lw) = (v.len(), w.len());
    for (vf, vo) in orientations(v) {
        let vv = vo.vertices(a);
        for (wf, wo) in orientations(w) {
            let wv = wo.vertices(a);
            for len in 0..=lv.min(lw) {
                for i in 0..=lv - len {
                    for j in 0..=lw - len {
                        if vv[i] != wv[j] || vo.letters()[i..i + len] != wo.letters()[j..j + len] {
                            continue;
                        }
                        // m is a submodule of M(v′): arrows point into it
                        if i > 0 && vo.letters()[i - 1].inverse {
                            continue;
                        }
                        if i + len < lv && vo.letters()[i + len].is_direct() {
                            continue;
                        }
                        // m is a quotient of M(w′): arrows point out of it
                        if j > 0 && wo.letters()[j - 1].is_direct() {
                            continue;
                        }
                        if j + len < lw && wo.letters()[j + len].inverse {
                            continue;
                        }
                        let left = i > 0 || j > 0;
                        let right = i + len < lv || j + len < lw;
                        if !(left && right) {
                            continue;
                        }
                        // the same alignment seen from the inverted words
                        let key = (vf, i, wf, j, len);
                        let mirror = (
                            !vf && !v.is_trivial(),
                            lv - i - len,
                            !wf && !w.is_trivial(),
                            lw - j - len,
                            len,
                        );
                        if seen.contains(&mirror) || !seen.insert(key) {
                            continue;
                        }
                        let e1 = join(
                            a,
                            vo.start(),
                            &[&vo.letters()[..i + len], &wo.letters()[j + len..]],
                        );
                        let e2 = join(
                            a,
                            wo.start(),
                            &[&wo.letters()[..j + len], &vo.letters()[i + len..]],
                        );
                        if let (Some(e1), Some(e2)) = (e1, e2) {
                            out.push(ExtBasisElement {
                                kind: ExtKind::Overlap {
                                    m: vo.substring(a, i, i + len),
                                    v_offset: i,
                                    w_offset: j,
                                },
                                middle: vec![e1.canonical(a), e2.canonical(a)],
                            });
                        }
                    }
                }
            }
        }
    }
    out
}

pub fn ext1_basis(a: &GentleAlgebra, m: &StringModule, n: &StringModule) -> Vec<ExtBasisElement> {
    let mut b = arrow_extensions(a, m.word(), n.word());
    b.extend(overlap_extensions(a, m.word(), n.word()));
    b
}

pub fn ext1_dim(a: &GentleAlgebra, m: &StringModule, n: &StringModule) -> usize {
    ext1_basis(a, m, n).len()
}

/// `Ext¹(R(α), N)`: the witness arrow `β = relsucc(α)` and the distinct
/// middle terms `w′ β⁻¹ p`, one per orientation `w′` of `N` for which it is
/// a string.
pub fn ext1_from_r(
    a: &GentleAlgebra,
    alpha: ArrowId,
    n: &StringModule,
) -> Vec<(ArrowId, StringWord)> {
    let Some(beta) = a.relation_successor(alpha) else {
        return Vec::new();
    };
    let p = a.maximal_path_after(alpha);
    let p_letters: Vec<Letter> = p.iter().map(|&x| Letter::direct(x)).collect();
    let link = [Letter::inverse(beta)];
    let mut out: Vec<(ArrowId, StringWord)> = Vec::new();
    for (_, wo) in orientations(n.word()) {
        if let Some(mid) = join(a, wo.start(), &[wo.letters(), &link, &p_letters]) {
            let mid = mid.canonical(a);
            if out.iter().all(|(_, m)| *m != mid) {
                out.push((beta, mid));
            }
        }
    }
    out
}

/// The arrows `α` whose `R(α)` is a summand of `Ω^{n-1}(M)` coming from an
/// end of `M`, for `n ≥ 2`.
fn end_arrows_at(a: &GentleAlgebra, m: &StringModule, n: usize) -> Vec<ArrowId> {
    syzygy(a, m)
        .ends()
        .into_iter()
        .filter_map(|d| a.relation_successor_iter(d, n - 2))
        .collect()
}

pub fn ext_dim(a: &GentleAlgebra, m: &StringModule, n_mod: &StringModule, n: usize) -> usize {
    assert!(n >= 1, "Ext degree starts at 1");
    if n == 1 {
        return ext1_dim(a, m, n_mod);
    }
    end_arrows_at(a, m, n)
        .into_iter()
        .map(|x| ext1_from_r(a, x, n_mod).len())
        .sum()
}

/// Canonical middle-term strings of the contributing arrow extensions in
/// degree `n ≥ 2`.
pub fn ext_basis_strings(
    a: &GentleAlgebra,
    m: &StringModule,
    n_mod: &StringModule,
    n: usize,
) -> Vec<StringWord> {
    assert!(n >= 2, "higher Ext bases start in degree 2");
    end_arrows_at(a, m, n)
        .into_iter()
        .flat_map(|x| ext1_from_r(a, x, n_mod).into_iter().map(|w| w.1))
        .collect()
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ExtClass {
    EventuallyZero,
    Periodic(usize),
}

impl fmt::Display for ExtClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtClass::EventuallyZero => f.write_str("eventually_zero"),
            ExtClass::Periodic(k) => write!(f, "periodic({k})"),
        }
    }
}

/// `dim Ext^i(M, N)` for all `i ≥ 1`: `prefix` holds degrees
/// `1..=prefix.len()`, after which `block` repeats forever (or everything
/// vanishes when `period == 0`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtSequence {
    pub prefix: Vec<usize>,
    pub period: usize,
    pub block: Vec<usize>,
}

impl ExtSequence {
    pub fn classification(&self) -> ExtClass {
        if self.period == 0 {
            ExtClass::EventuallyZero
        } else {
            ExtClass::Periodic(self.period)
        }
    }

    /// First degree of the repeating part.
    pub fn tail_start(&self) -> usize {
        self.prefix.len() + 1
    }

    pub fn value(&self, degree: usize) -> usize {
        assert!(degree >= 1);
        if degree <= self.prefix.len() {
            self.prefix[degree - 1]
        } else if self.period == 0 {
            0
        } else {
            self.block[(degree - self.tail_start()) % self.period]
        }
    }

    pub fn values(&self, upto: usize) -> Vec<usize> {
        (1..=upto).map(|d| self.value(d)).collect()
    }

    /// The period-length window of values starting at `start`.
    pub fn block_at(&self, start: usize) -> Vec<usize> {
        (start..start + self.period)
            .map(|d| self.value(d))
            .collect()
    }
}

/// Exact Ext sequence. Ends whose orbit terminates stop contributing after
/// `len(orbit)` degrees; ends on a relation cycle contribute periodically
/// from degree 2 on.
pub fn ext_sequence(a: &GentleAlgebra, m: &StringModule, n: &StringModule) -> ExtSequence {
    let ends = syzygy(a, m).ends();
    let mut longest_chain = 0;
    let mut period = 0;
    for &d in &ends {
        match a.cycle_of(d) {
            Some((cycle, _)) => {
                let hits = cycle
                    .arrows()
                    .iter()
                    .any(|&x| !ext1_from_r(a, x, n).is_empty());
                if hits {
                    period = if period == 0 {
                        cycle.len()
                    } else {
                        num_integer::lcm(period, cycle.len())
                    };
                }
            }
            None => {
                let mut k = 1;
                let mut cur = d;
                while let Some(next) = a.relation_successor(cur) {
                    cur = next;
                    k += 1;
                }
                longest_chain = longest_chain.max(k);
            }
        }
    }
    let n0 = 2 + longest_chain;
    let mut prefix: Vec<usize> = (1..n0).map(|d| ext_dim(a, m, n, d)).collect();
    let block: Vec<usize> = (n0..n0 + period).map(|d| ext_dim(a, m, n, d)).collect();
    if period == 0 {
        while prefix.last() == Some(&0) {
            prefix.pop();
        }
    }
    ExtSequence {
        prefix,
        period,
        block,
    }
}

/// The periodicity criterion checked independently of the sequence:
/// some relation cycle carries both an end arrow of `M` and an arrow by
/// which `N` extends at one of its ends.
pub fn common_cycle(a: &GentleAlgebra, m: &StringModule, n: &StringModule) -> bool {
    let mut n_arrows = n.word().left_extension_arrows(a);
    n_arrows.extend(n.word().right_extension_arrows(a));
    syzygy(a, m).ends().into_iter().any(|d| {
        a.cycle_index(d)
            .is_some_and(|c| n_arrows.iter().any(|&x| a.cycle_index(x) == Some(c)))
    })
}
