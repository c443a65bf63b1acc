//! Seeded random hypergraphs. All randomness is derived from an explicit
//! seed through [`derive_seed`]; nothing reads ambient entropy.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph3;

/// A sub-seed for `(component, index)` under the master `seed`.
pub fn derive_seed(seed: u64, component: &str, index: u64) -> u64 {
    let mut hasher = Sha256::new();
    hasher.update(seed.to_le_bytes());
    hasher.update((component.len() as u64).to_le_bytes());
    hasher.update(component.as_bytes());
    hasher.update(index.to_le_bytes());
    let digest = hasher.finalize();
    u64::from_le_bytes(digest[..8].try_into().expect("8 bytes"))
}

pub fn rng_for(seed: u64, component: &str, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive_seed(seed, component, index))
}

/// Each triple independently with probability `p`, in lexicographic order.
pub fn random_hypergraph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Hypergraph3> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::invalid(format!(
            "edge probability must be in [0, 1], got {p}"
        )));
    }
    let mut h = Hypergraph3::new(n)?;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if rng.random::<f64>() < p {
                    h.add_edge([a, b, c])?;
                }
            }
        }
    }
    Ok(h)
}

/// Adds random edges until every pair has codegree at least `target`.
///
/// Pairs are visited in lexicographic order; a deficient pair `uv` receives
/// edges `uvw` for `w` drawn uniformly without replacement from its
/// non-neighbours. Adding edges never lowers a codegree, so one pass suffices.
pub fn raise_min_codegree<R: Rng>(
    h: &mut Hypergraph3,
    target: usize,
    rng: &mut R,
) -> Result<usize> {
    let n = h.n();
    if n >= 2 && target > n - 2 {
        return Err(Error::invalid(format!(
            "codegree {target} is impossible on {n} vertices"
        )));
    }
    let mut added = 0;
    for u in 0..n {
        for v in u + 1..n {
            let have = h.codegree_unchecked(u, v);
            if have >= target {
                continue;
            }
            let mut missing: Vec<usize> = (0..n)
                .filter(|&w| w != u && w != v && !h.has_edge(u, v, w))
                .collect();
            missing.shuffle(rng);
            for &w in &missing[..target - have] {
                h.add_edge([u, v, w])?;
                added += 1;
            }
        }
    }
    Ok(added)
}

/// `G^(3)(n, p)` lifted to minimum codegree `target` by [`raise_min_codegree`].
pub fn random_with_min_codegree(n: usize, p: f64, target: usize, seed: u64) -> Result<Hypergraph3> {
    let mut rng = rng_for(seed, "random-host", n as u64);
    let mut h = random_hypergraph(n, p, &mut rng)?;
    raise_min_codegree(&mut h, target, &mut rng)?;
    Ok(h)
}
