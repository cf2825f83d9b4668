//! Oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sunada_core::symgroup::enumerate_partitions;

pub fn concrete(mu: &[u32]) -> Vec<usize> {
    let mut perm = Vec::new();
    let mut start = 0;
    for &c in mu {
        let c = c as usize;
        for i in 0..c {
            perm.push(start + (i + 1) % c);
        }
        start += c;
    }
    perm
}

/// Tabloids as a row index for each of the m points.
pub fn tabloids(shape: &[u32]) -> Vec<Vec<usize>> {
    let m: u32 = shape.iter().sum();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(m: usize, shape: &[u32], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for (row, &cap) in shape.iter().enumerate() {
            if cur.iter().filter(|&&r| r == row).count() < cap as usize {
                cur.push(row);
                go(m, shape, cur, out);
                cur.pop();
            }
        }
    }
    go(m as usize, shape, &mut cur, &mut out);
    out
}

pub fn permutation_character(shape: &[u32], mu: &[u32]) -> i64 {
    let perm = concrete(mu);
    tabloids(shape)
        .iter()
        .filter(|t| (0..t.len()).all(|x| t[perm[x]] == t[x]))
        .count() as i64
}

/// Number of semistandard tableaux of shape `nu` with content `lambda`.
pub fn kostka(nu: &[u32], lambda: &[u32]) -> i64 {
    let cells: Vec<(usize, usize)> = nu
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
        .collect();
    let mut grid: HashMap<(usize, usize), usize> = HashMap::new();
    let mut used = vec![0u32; lambda.len()];
    fn go(
        idx: usize,
        cells: &[(usize, usize)],
        lambda: &[u32],
        grid: &mut HashMap<(usize, usize), usize>,
        used: &mut Vec<u32>,
    ) -> i64 {
        if idx == cells.len() {
            return 1;
        }
        let (r, c) = cells[idx];
        let mut total = 0;
        for v in 0..lambda.len() {
            if used[v] == lambda[v] {
                continue;
            }
            if c > 0 && grid[&(r, c - 1)] > v {
                continue;
            }
            if r > 0 && grid[&(r - 1, c)] >= v {
                continue;
            }
            grid.insert((r, c), v);
            used[v] += 1;
            total += go(idx + 1, cells, lambda, grid, used);
            used[v] -= 1;
            grid.remove(&(r, c));
        }
        total
    }
    go(0, &cells, lambda, &mut grid, &mut used)
}

pub fn oracle_table(m: u32) -> HashMap<(Vec<u32>, Vec<u32>), i64> {
    let parts: Vec<Vec<u32>> = enumerate_partitions(m)
        .unwrap()
        .iter()
        .map(|p| p.parts().to_vec())
        .collect();
    let mut chi: HashMap<(Vec<u32>, Vec<u32>), i64> = HashMap::new();
    // Reverse-lex order lists every nu dominating lambda before lambda.
    for (i, lambda) in parts.iter().enumerate() {
        for mu in &parts {
            let mut v = permutation_character(lambda, mu);
            for nu in &parts[..i] {
                let k = kostka(nu, lambda);
                if k != 0 {
                    v -= k * chi[&(nu.clone(), mu.clone())];
                }
            }
            chi.insert((lambda.clone(), mu.clone()), v);
        }
        assert_eq!(kostka(lambda, lambda), 1);
    }
    chi
}

/// Distinct subgroups of `G x G` of order at most `cap`, as sorted index
/// pairs, closed from 1 or 2 random generators using the multiplication `mul`.
pub fn random_product_subgroups(
    n: usize,
    mul: &dyn Fn(usize, usize) -> usize,
    identity: usize,
    attempts: usize,
    cap: usize,
    seed: u64,
) -> BTreeSet<Vec<(usize, usize)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = BTreeSet::new();
    for _ in 0..attempts {
        let k = rng.gen_range(1..=2);
        let gens: Vec<(usize, usize)> = (0..k).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect();
        let mut set = BTreeSet::from([(identity, identity)]);
        let mut frontier = vec![(identity, identity)];
        while let Some((a, b)) = frontier.pop() {
            for &(g, h) in &gens {
                let p = (mul(a, g), mul(b, h));
                if set.insert(p) {
                    frontier.push(p);
                }
            }
        }
        if set.len() <= cap {
            seen.insert(set.into_iter().collect());
        }
    }
    seen
}
