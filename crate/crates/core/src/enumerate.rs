//! Generators of complexes for exhaustive and randomized sweeps.

use rand::Rng;

use crate::{Error, Result, SimplicialComplex};

/// Largest ground set the exhaustive enumeration accepts.
pub const MAX_EXHAUSTIVE_M: usize = 4;

fn mask_to_labels(mask: u32, m: usize) -> Vec<usize> {
    (1..=m).filter(|v| mask >> (v - 1) & 1 == 1).collect()
}

/// Every simplicial complex on `[m]` that contains all singletons.
///
/// A complex is determined by which subsets of size at least two it contains;
/// we walk every family of such subsets and keep the downward-closed ones.
/// The order is deterministic.
pub fn all_complexes(m: usize) -> Result<Vec<SimplicialComplex>> {
    if m == 0 {
        return Err(Error::EmptyGroundSet);
    }
    if m > MAX_EXHAUSTIVE_M {
        return Err(Error::ExhaustiveTooLarge {
            m,
            max: MAX_EXHAUSTIVE_M,
        });
    }
    let big: Vec<u32> = (0u32..1 << m).filter(|s| s.count_ones() >= 2).collect();
    let mut out = Vec::new();
    for family in 0u64..1 << big.len() {
        let member = |s: u32| match big.iter().position(|&b| b == s) {
            Some(i) => family >> i & 1 == 1,
            None => true, // empty set and singletons
        };
        let closed = big.iter().enumerate().all(|(i, &s)| {
            family >> i & 1 == 0 || (0..m).filter(|j| s >> j & 1 == 1).all(|j| member(s & !(1 << j)))
        });
        if !closed {
            continue;
        }
        let mut facets: Vec<Vec<usize>> = (0..m).map(|v| vec![v + 1]).collect();
        facets.extend(
            big.iter()
                .enumerate()
                .filter(|(i, _)| family >> i & 1 == 1)
                .map(|(_, &s)| mask_to_labels(s, m)),
        );
        out.push(SimplicialComplex::from_facets(m, facets)?);
    }
    Ok(out)
}

/// A random complex on `[m]`: a handful of random vertex sets as facet
/// candidates, with any uncovered vertex added as a singleton.
pub fn random_complex<R: Rng + ?Sized>(m: usize, rng: &mut R) -> Result<SimplicialComplex> {
    if m == 0 {
        return Err(Error::EmptyGroundSet);
    }
    let count = rng.gen_range(1..=m + 1);
    let mut facets: Vec<Vec<usize>> = Vec::with_capacity(count + m);
    for _ in 0..count {
        let mut set: Vec<usize> = (1..=m).filter(|_| rng.gen_bool(0.5)).collect();
        if set.is_empty() {
            set.push(rng.gen_range(1..=m));
        }
        facets.push(set);
    }
    let mut covered = vec![false; m + 1];
    for &v in facets.iter().flatten() {
        covered[v] = true;
    }
    facets.extend((1..=m).filter(|&v| !covered[v]).map(|v| vec![v]));
    SimplicialComplex::from_facets(m, facets)
}
