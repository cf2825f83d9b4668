use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num::{BigInt, One, Zero};

use super::partition::{enumerate_partitions, factorial, CycleType, Partition};
use crate::error::{Error, Result};

type MemoKey = (Vec<u32>, Vec<u32>);

/// Murnaghan-Nakayama evaluator with a memo keyed on
/// (remaining shape, remaining cycle lengths).
///
/// The memo sits behind a `RwLock`, so one engine can be shared by parallel
/// workers. Values are pure functions of the key, so concurrent fills agree.
#[derive(Debug, Default)]
pub struct CharacterEngine {
    memo: RwLock<HashMap<MemoKey, BigInt>>,
}

impl CharacterEngine {
    pub fn new() -> Self {
        Self::default()
    }

    /// A process-wide engine.
    pub fn global() -> &'static CharacterEngine {
        static ENGINE: OnceLock<CharacterEngine> = OnceLock::new();
        ENGINE.get_or_init(CharacterEngine::new)
    }

    /// `chi_lambda(mu)`.
    pub fn character(&self, lambda: &Partition, mu: &CycleType) -> Result<BigInt> {
        if lambda.m() != mu.m() {
            return Err(Error::arg(format!(
                "size mismatch: |{lambda}| = {} but |{mu}| = {}",
                lambda.m(),
                mu.m()
            )));
        }
        Ok(self.eval(lambda.parts(), mu.partition().parts()))
    }

    /// The full character row, one value per class in enumeration order.
    pub fn row(&self, lambda: &Partition) -> Result<Vec<(CycleType, BigInt)>> {
        enumerate_partitions(lambda.m())?
            .into_iter()
            .map(|p| {
                let mu = CycleType::new(p);
                let v = self.character(lambda, &mu)?;
                Ok((mu, v))
            })
            .collect()
    }

    pub fn memo_len(&self) -> usize {
        self.memo.read().expect("memo lock").len()
    }

    /// `shape` is a partition, `cycles` is weakly decreasing; the largest
    /// cycle is removed first.
    fn eval(&self, shape: &[u32], cycles: &[u32]) -> BigInt {
        let Some((&r, rest)) = cycles.split_first() else {
            return if shape.is_empty() { BigInt::one() } else { BigInt::zero() };
        };
        if rest.is_empty() {
            return hook_sign(shape, r);
        }
        let key = (shape.to_vec(), cycles.to_vec());
        if let Some(v) = self.memo.read().expect("memo lock").get(&key) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for (sub, sign) in remove_rim_hooks(shape, r) {
            let v = self.eval(&sub, rest);
            if sign > 0 {
                total += v;
            } else {
                total -= v;
            }
        }
        self.memo.write().expect("memo lock").insert(key, total.clone());
        total
    }
}

/// Beta numbers `lambda_i + (len - 1 - i)`, strictly decreasing.
fn beta_set(shape: &[u32]) -> Vec<u32> {
    let len = shape.len() as u32;
    shape
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i as u32)
        .collect()
}

fn shape_from_beta(mut beta: Vec<u32>) -> Vec<u32> {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let len = beta.len() as u32;
    beta.iter()
        .enumerate()
        .map(|(i, &b)| b - (len - 1 - i as u32))
        .filter(|&p| p > 0)
        .collect()
}

/// All shapes obtained by removing an `r`-rim hook, with the sign `(-1)^height`.
/// On the abacus a hook removal moves a bead from `b` to the empty position
/// `b - r`; the height is the number of beads strictly in between.
fn remove_rim_hooks(shape: &[u32], r: u32) -> Vec<(Vec<u32>, i32)> {
    let beta = beta_set(shape);
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        if b < r {
            continue;
        }
        let target = b - r;
        if beta.contains(&target) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.clone();
        next[idx] = target;
        out.push((shape_from_beta(next), if between % 2 == 0 { 1 } else { -1 }));
    }
    out
}

/// Character at a single cycle of length `r = |shape|`: nonzero only for hooks.
fn hook_sign(shape: &[u32], r: u32) -> BigInt {
    match remove_rim_hooks(shape, r).first() {
        Some((sub, sign)) if sub.is_empty() => BigInt::from(*sign),
        _ => BigInt::zero(),
    }
}

/// `chi_lambda(mu)` through the shared global engine.
pub fn mn_character(lambda: &Partition, mu: &CycleType) -> Result<BigInt> {
    CharacterEngine::global().character(lambda, mu)
}

/// Hook length formula `m! / prod hooks`.
pub fn dimension(lambda: &Partition) -> BigInt {
    let hooks: BigInt = lambda
        .hook_lengths()
        .into_iter()
        .fold(BigInt::one(), |acc, h| acc * h);
    factorial(lambda.m()) / hooks
}

/// True iff no non-identity class has character value equal to the dimension.
pub fn is_faithful(lambda: &Partition) -> Result<bool> {
    let engine = CharacterEngine::global();
    let dim = dimension(lambda);
    for p in enumerate_partitions(lambda.m())? {
        let mu = CycleType::new(p);
        if !mu.is_identity() && engine.character(lambda, &mu)? == dim {
            return Ok(false);
        }
    }
    Ok(true)
}
