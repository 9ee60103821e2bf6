//! Shared random-instance generation for the property and acceptance suites.
//!
//! Random configurations are built strictly diagonally dominant (diagonal
//! magnitude exceeding the off-diagonal row sum), which guarantees negative
//! definiteness, with a random spanning tree per branch for connectivity.
//! Every generated configuration therefore passes validation by construction,
//! and the generator covers single- and multi-branch shapes.

use antinef::config::{ExceptionalConfig, QDivisor};
use antinef::rational::Q;
use num::BigInt;
use rand::rngs::StdRng;
use rand::Rng;

pub fn rng(seed: u64) -> StdRng {
    use rand::SeedableRng;
    StdRng::seed_from_u64(seed)
}

pub fn random_config(rng: &mut StdRng, max_curves: usize, multi_branch: bool) -> ExceptionalConfig {
    let s = rng.gen_range(1..=max_curves);
    let branch_count = if multi_branch && s > 1 {
        rng.gen_range(1..=s.min(3))
    } else {
        1
    };

    // Random partition into branch_count non-empty groups.
    let mut indices: Vec<usize> = (0..s).collect();
    for i in (1..s).rev() {
        let j = rng.gen_range(0..=i);
        indices.swap(i, j);
    }
    let mut branches: Vec<Vec<usize>> = vec![Vec::new(); branch_count];
    for (pos, &idx) in indices.iter().enumerate() {
        if pos < branch_count {
            branches[pos].push(idx);
        } else {
            branches[rng.gen_range(0..branch_count)].push(idx);
        }
    }
    for b in &mut branches {
        b.sort_unstable();
    }

    let mut gram = vec![vec![0i64; s]; s];
    for branch in &branches {
        // Spanning tree: attach each curve to a random earlier one.
        for k in 1..branch.len() {
            let j = branch[k];
            let i = branch[rng.gen_range(0..k)];
            let w = rng.gen_range(1..=2);
            gram[i][j] = w;
            gram[j][i] = w;
        }
        // Occasional extra edge.
        if branch.len() >= 3 && rng.gen_bool(0.3) {
            let i = branch[rng.gen_range(0..branch.len())];
            let j = branch[rng.gen_range(0..branch.len())];
            if i != j && gram[i][j] == 0 {
                gram[i][j] = 1;
                gram[j][i] = 1;
            }
        }
    }
    for i in 0..s {
        let row_sum: i64 = (0..s).filter(|&j| j != i).map(|j| gram[i][j]).sum();
        gram[i][i] = -(row_sum + rng.gen_range(1..=3));
    }

    let weights = (0..branch_count).map(|_| rng.gen_range(1..=3)).collect();
    let labels = (1..=s).map(|i| format!("E{i}")).collect();
    ExceptionalConfig::new(labels, gram, branches, weights).expect("generator yields valid configs")
}

/// Effective divisor with small random numerators and denominators.
pub fn random_effective_divisor(rng: &mut StdRng, len: usize) -> QDivisor {
    QDivisor::new(
        (0..len)
            .map(|_| {
                Q::new(
                    BigInt::from(rng.gen_range(0..=4)),
                    BigInt::from(rng.gen_range(1..=3)),
                )
            })
            .collect(),
    )
}

/// Like [`random_effective_divisor`] but guaranteed nonzero.
pub fn random_nonzero_divisor(rng: &mut StdRng, len: usize) -> QDivisor {
    loop {
        let d = random_effective_divisor(rng, len);
        if !d.is_zero() {
            return d;
        }
    }
}
