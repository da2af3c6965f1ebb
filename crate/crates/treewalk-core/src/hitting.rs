//! Exact hitting, joining and meeting times for the simple random walk,
//! plus a seeded Monte Carlo estimator.
//!
//! On a tree every hitting time `H(u, v)` and joining time
//! `J(v) = Σ_u deg(u)·H(u, v)` is a nonnegative integer, so those are
//! returned as `u64`. Quantities divided through the total degree
//! `2(n - 1)` — stationary weights, meeting times, return times — are
//! exact rationals.
//!
//! Hitting times come via two independent routes: a closed formula summing
//! path overlaps against degrees, and an exact fraction-free linear solve
//! of the first-step equations. The second exists so the first can be
//! checked against something that shares none of its reasoning.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::error::Error;
use crate::rational::{ratio, Rational};
use crate::tree::Tree;

/// Exact hitting times into one target from every start vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct HittingProfile {
    pub target: usize,
    /// `times[u]` is `H(u, target)`; `times[target]` is zero.
    pub times: Vec<Rational>,
}

/// Stationary distribution of the walk: `deg(v) / 2|E|`.
#[derive(Debug, Clone, PartialEq)]
pub struct StationaryDistribution {
    pub weights: Vec<Rational>,
}

/// Monte Carlo estimate of a hitting time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    pub mean: f64,
    pub stderr: f64,
}

/// Expected return time `2|E| / deg(u)`.
pub fn return_time(t: &Tree, u: usize) -> Result<Rational, Error> {
    t.check_vertex(u)?;
    if t.n() < 2 {
        return Err(Error::OrderTooSmall { min: 2, actual: t.n() });
    }
    Ok(ratio(2 * (t.n() as i64 - 1), t.degree(u) as i64))
}

/// Hitting time across a single edge: the degree sum of the component on
/// the far side of `v`.
pub fn hit_adjacent(t: &Tree, u: usize, v: usize) -> Result<u64, Error> {
    Ok(t.split_at_edge(u, v)?.deg_u)
}

/// `H(u, v)` by the overlap formula: sum over all vertices `w` of
/// `deg(w)` times the number of edges shared by the paths `u → v` and
/// `w → v`.
pub fn hit_formula(t: &Tree, u: usize, v: usize) -> Result<u64, Error> {
    t.check_vertex(u)?;
    t.check_vertex(v)?;
    if u == v {
        return Ok(0);
    }
    let from_u = t.distances_from(u);
    let from_v = t.distances_from(v);
    let mut total = 0u64;
    for w in 0..t.n() {
        let overlap = (from_v[u] + from_v[w] - from_u[w]) / 2;
        total += overlap as u64 * t.degree(w) as u64;
    }
    Ok(total)
}

/// `H(·, target)` by exact linear algebra: the first-step equations
/// `deg(u)·H(u) - Σ_{w ~ u} H(w) = deg(u)` are solved over the integers
/// with fraction-free (Bareiss) elimination. This path is deliberately
/// kept independent of the overlap formula.
pub fn hit_oracle(t: &Tree, target: usize) -> Result<HittingProfile, Error> {
    t.check_vertex(target)?;
    let n = t.n();
    let m = n - 1;
    // row index for every vertex except the target
    let mut row = vec![usize::MAX; n];
    let mut vertex_of = Vec::with_capacity(m);
    for v in 0..n {
        if v != target {
            row[v] = vertex_of.len();
            vertex_of.push(v);
        }
    }
    let mut a: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); m + 1]; m];
    for (i, &u) in vertex_of.iter().enumerate() {
        let deg = BigInt::from(t.degree(u) as u64);
        a[i][i] = deg.clone();
        a[i][m] = deg;
        for &w in t.neighbors(u) {
            if w != target {
                a[i][row[w]] = BigInt::from(-1);
            }
        }
    }
    let mut prev = BigInt::one();
    for k in 0..m {
        assert!(!a[k][k].is_zero(), "first-step system is nonsingular");
        for i in (k + 1)..m {
            for j in (k + 1)..=m {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let mut solution: Vec<Rational> = vec![Rational::zero(); m];
    for i in (0..m).rev() {
        let mut acc = Rational::from_integer(a[i][m].clone());
        for j in (i + 1)..m {
            acc -= Rational::from_integer(a[i][j].clone()) * &solution[j];
        }
        solution[i] = acc / Rational::from_integer(a[i][i].clone());
    }
    let mut times = vec![Rational::zero(); n];
    for (i, &u) in vertex_of.iter().enumerate() {
        times[u] = solution[i].clone();
    }
    Ok(HittingProfile { target, times })
}

/// Stationary weights `deg(v) / 2(n-1)`.
pub fn stationary(t: &Tree) -> Result<StationaryDistribution, Error> {
    if t.n() < 2 {
        return Err(Error::OrderTooSmall { min: 2, actual: t.n() });
    }
    let total = 2 * (t.n() as i64 - 1);
    let weights = (0..t.n()).map(|v| ratio(t.degree(v) as i64, total)).collect();
    Ok(StationaryDistribution { weights })
}

/// Joining times of every vertex.
///
/// Expanding `J(v) = Σ_u deg(u)·H(u, v)` through the overlap formula gives
/// `J(v) = 2(n-1)·Σ_u deg(u)·d(u, v) - ½·Σ_{u,w} deg(u)·deg(w)·d(u, w)`,
/// which this computes in one pass over the distance matrix.
pub(crate) fn joining_profile(t: &Tree) -> Vec<u64> {
    let n = t.n();
    let total_degree = (2 * (n.max(1) - 1)) as u64;
    let dist = t.distances();
    let mut weighted: Vec<u64> = Vec::with_capacity(n);
    for v in 0..n {
        weighted.push((0..n).map(|u| t.degree(u) as u64 * dist[v][u] as u64).sum());
    }
    let all_pairs: u64 = (0..n).map(|u| t.degree(u) as u64 * weighted[u]).sum();
    debug_assert!(all_pairs % 2 == 0);
    (0..n).map(|v| total_degree * weighted[v] - all_pairs / 2).collect()
}

/// `J(v) = Σ_u deg(u)·H(u, v)`, always an integer.
pub fn joining_time(t: &Tree, v: usize) -> Result<u64, Error> {
    t.check_vertex(v)?;
    Ok(joining_profile(t)[v])
}

/// Joining time restricted to the starts in `set` (repeats count once).
pub fn joining_from_set(t: &Tree, set: &[usize], v: usize) -> Result<u64, Error> {
    t.check_vertex(v)?;
    let mut included = vec![false; t.n()];
    for &w in set {
        t.check_vertex(w)?;
        included[w] = true;
    }
    let mut total = 0u64;
    for w in 0..t.n() {
        if included[w] {
            total += t.degree(w) as u64 * hit_formula(t, w, v)?;
        }
    }
    Ok(total)
}

/// Maximum joining time and all vertices attaining it, ascending.
pub fn jmax(t: &Tree) -> Result<(u64, Vec<usize>), Error> {
    let profile = joining_profile(t);
    let best = *profile.iter().max().expect("nonempty tree");
    let argmax = (0..t.n()).filter(|&v| profile[v] == best).collect();
    Ok((best, argmax))
}

/// Meeting time `max_v H(π, v) = J_max / 2(n-1)`.
pub fn t_meet(t: &Tree) -> Result<Rational, Error> {
    if t.n() < 2 {
        return Err(Error::OrderTooSmall { min: 2, actual: t.n() });
    }
    let (best, _) = jmax(t)?;
    Ok(ratio(best as i64, 2 * (t.n() as i64 - 1)))
}

/// Best meeting time `min_v H(π, v)` with its minimisers, ascending.
pub fn t_bestmeet(t: &Tree) -> Result<(Rational, Vec<usize>), Error> {
    if t.n() < 2 {
        return Err(Error::OrderTooSmall { min: 2, actual: t.n() });
    }
    let profile = joining_profile(t);
    let best = *profile.iter().min().expect("nonempty tree");
    let argmin = (0..t.n()).filter(|&v| profile[v] == best).collect();
    Ok((ratio(best as i64, 2 * (t.n() as i64 - 1)), argmin))
}

/// Expected time to hit a stationary target from `v`:
/// `Σ_w π(w)·H(v, w)`. The random-target identity says this does not
/// depend on `v`; the hitting times are taken from the linear-solve oracle
/// so that checking the identity actually exercises something.
pub fn random_target_time(t: &Tree, v: usize) -> Result<Rational, Error> {
    t.check_vertex(v)?;
    if t.n() < 2 {
        return Err(Error::OrderTooSmall { min: 2, actual: t.n() });
    }
    let total = ratio(2 * (t.n() as i64 - 1), 1);
    let mut acc = Rational::zero();
    for w in 0..t.n() {
        let profile = hit_oracle(t, w)?;
        acc += ratio(t.degree(w) as i64, 1) * &profile.times[v];
    }
    Ok(acc / total)
}

/// Mean and standard error of the hitting time `H(source, target)` over
/// `walks` simulated walks.
///
/// Deterministic per seed: the ChaCha12 key is the 32-byte layout
/// `[seed | source | target | zeros]` (little-endian u64 each), giving one
/// independent stream per `(source, target, seed)` triple. Walks run
/// sequentially, so results are bit-identical across runs.
pub fn mc_hitting(
    t: &Tree,
    source: usize,
    target: usize,
    walks: u64,
    seed: u64,
) -> Result<McEstimate, Error> {
    t.check_vertex(source)?;
    t.check_vertex(target)?;
    if walks == 0 {
        return Err(Error::ZeroWalks);
    }
    let mut key = [0u8; 32];
    key[0..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&(source as u64).to_le_bytes());
    key[16..24].copy_from_slice(&(target as u64).to_le_bytes());
    let mut rng = ChaCha12Rng::from_seed(key);
    let mut sum = 0u128;
    let mut sum_sq = 0u128;
    for _ in 0..walks {
        let mut pos = source;
        let mut steps = 0u64;
        while pos != target {
            let nbrs = t.neighbors(pos);
            pos = nbrs[rng.random_range(0..nbrs.len())];
            steps += 1;
        }
        sum += steps as u128;
        sum_sq += (steps as u128) * (steps as u128);
    }
    let w = walks as f64;
    let mean = sum as f64 / w;
    let stderr = if walks == 1 {
        0.0
    } else {
        let spread = walks as u128 * sum_sq - sum * sum;
        libm::sqrt(spread as f64 / (w * w * (w - 1.0)))
    };
    Ok(McEstimate { mean, stderr })
}

/// All hitting times as solved profiles: `matrix[w]` is the profile into
/// target `w`. Shared by the identity checks in the verification module.
pub(crate) fn oracle_matrix(t: &Tree) -> Result<Vec<HittingProfile>, Error> {
    (0..t.n()).map(|w| hit_oracle(t, w)).collect()
}
