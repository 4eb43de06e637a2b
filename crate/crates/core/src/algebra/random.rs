use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{GentleAlgebra, Presentation};
use crate::error::AlgebraError;

const RETRY_BUDGET: usize = 1000;

/// Sample a gentle algebra with at most `max_vertices` vertices and
/// `max_arrows` arrows. The output depends only on the arguments.
///
/// At every vertex each (incoming, outgoing) arrow pair is declared either
/// composable or a relation so that the uniqueness axioms hold; samples
/// whose composable arrows close up into a cycle are discarded.
pub fn random_gentle(
    seed: u64,
    max_vertices: usize,
    max_arrows: usize,
) -> Result<GentleAlgebra, AlgebraError> {
    if max_vertices == 0 {
        return Err(AlgebraError::SamplingBudget);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RETRY_BUDGET {
        let p = sample(&mut rng, max_vertices, max_arrows);
        if let Ok(a) = GentleAlgebra::validate(&p) {
            return Ok(a);
        }
    }
    Err(AlgebraError::SamplingBudget)
}

fn sample(rng: &mut ChaCha8Rng, max_vertices: usize, max_arrows: usize) -> Presentation {
    let n = rng.gen_range(1..=max_vertices);
    let target = rng.gen_range(0..=max_arrows.min(2 * n));
    let mut out_deg = vec![0usize; n];
    let mut in_deg = vec![0usize; n];
    let mut ends: Vec<(usize, usize)> = Vec::new();
    let mut attempts = 0;
    while ends.len() < target && attempts < 20 * (target + 1) {
        attempts += 1;
        let (s, t) = (rng.gen_range(0..n), rng.gen_range(0..n));
        // loops are rarer than in a uniform draw; they tend to dominate tiny quivers
        if s == t && rng.gen_bool(0.7) {
            continue;
        }
        if out_deg[s] < 2 && in_deg[t] < 2 {
            out_deg[s] += 1;
            in_deg[t] += 1;
            ends.push((s, t));
        }
    }

    let mut relations = Vec::new();
    for v in 0..n {
        let mut ins: Vec<usize> = (0..ends.len()).filter(|&i| ends[i].1 == v).collect();
        let mut outs: Vec<usize> = (0..ends.len()).filter(|&i| ends[i].0 == v).collect();
        ins.shuffle(rng);
        outs.shuffle(rng);
        // Parity pattern: with two arrows on each side the composable pairs form
        // one perfect matching and the relations the other.
        let flip = rng.gen_range(0..2);
        for (i, &g) in ins.iter().enumerate() {
            for (j, &b) in outs.iter().enumerate() {
                if (i + j + flip) % 2 == 1 {
                    relations.push((g, b));
                }
            }
        }
    }
    relations.sort_unstable();

    let arrow_name = |i: usize| format!("a{}", i + 1);
    let vertex_name = |v: usize| format!("v{}", v + 1);
    Presentation {
        vertices: (0..n).map(vertex_name).collect(),
        arrows: ends
            .iter()
            .enumerate()
            .map(|(i, &(s, t))| (arrow_name(i), vertex_name(s), vertex_name(t)))
            .collect(),
        relations: relations
            .into_iter()
            .map(|(g, b)| (arrow_name(g), arrow_name(b)))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_valid() {
        let a = random_gentle(1, 8, 12).unwrap();
        let b = random_gentle(1, 8, 12).unwrap();
        assert_eq!(a, b);
        assert!(GentleAlgebra::validate(&a.presentation()).is_ok());
    }

    #[test]
    fn degenerate_bounds() {
        let a = random_gentle(2, 1, 0).unwrap();
        assert_eq!(a.vertex_count(), 1);
        assert_eq!(a.arrow_count(), 0);
    }

    #[test]
    fn many_seeds_validate() {
        for seed in 0..300 {
            let a = random_gentle(seed, 8, 12).unwrap();
            assert!(a.vertex_count() <= 8 && a.arrow_count() <= 12);
            GentleAlgebra::validate(&a.presentation()).unwrap();
        }
    }
}
