//! Brute-force ground truth: codeword enumeration, exact minimum distance,
//! intersection dimensions and exhaustive σ searches.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::codes::{hull_dim, normalize_hull, LinearCode, SemiLinearMap};
use crate::error::{Error, Result};

/// Caps on exhaustive work.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationBudget {
    /// Largest `q^k` that may be enumerated.
    pub max_words: u64,
    /// Largest field scanned exhaustively.
    pub max_field_size: u32,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget {
            max_words: 1 << 22,
            max_field_size: 1 << 16,
        }
    }
}

impl EnumerationBudget {
    pub fn with_words(max_words: u64) -> Self {
        EnumerationBudget {
            max_words: max_words.max(1),
            ..Default::default()
        }
    }

    fn check(&self, q: u32, k: usize) -> Result<u64> {
        let words = (q as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
        if words > self.max_words as u128 {
            return Err(Error::BudgetExceeded {
                words,
                budget: self.max_words,
            });
        }
        Ok(words as u64)
    }
}

/// Walks `base + span(rows)` in modular Gray order: each step adds a
/// scalar multiple of one row to the running word.
fn gray_walk(c: &LinearCode, rows: usize, base: Vec<u32>, mut visit: impl FnMut(&[u32])) {
    let f = c.field();
    let q = f.order();
    let g = c.generator();
    let mut word = base;
    // Counter digits b and Gray digits; digit j of the Gray word moves to
    // the next field element (by encoding, cyclically) when it changes.
    let mut counter = vec![0u32; rows];
    let mut gray = vec![0u32; rows];
    visit(&word);
    loop {
        let Some(j) = counter.iter().position(|&b| b != q - 1) else {
            return;
        };
        counter[..j].fill(0);
        counter[j] += 1;
        let next = (gray[j] + 1) % q;
        let delta = f.sub(next, gray[j]);
        gray[j] = next;
        for (w, &x) in word.iter_mut().zip(g.row(j)) {
            if x != 0 {
                *w = f.add(*w, f.mul(delta, x));
            }
        }
        visit(&word);
    }
}

/// All `q^k` codewords, each exactly once, in Gray order over messages.
pub fn enumerate_codewords(c: &LinearCode, budget: &EnumerationBudget) -> Result<Vec<Vec<u32>>> {
    let words = budget.check(c.field().order(), c.k())?;
    let mut out = Vec::with_capacity(words as usize);
    gray_walk(c, c.k(), vec![0; c.n()], |w| out.push(w.to_vec()));
    Ok(out)
}

fn weight(w: &[u32]) -> usize {
    w.iter().filter(|&&x| x != 0).count()
}

/// Minimum nonzero weight over a full enumeration.
pub fn brute_min_distance(c: &LinearCode, budget: &EnumerationBudget) -> Result<usize> {
    brute_min_distance_parallel(c, budget, 1)
}

/// Same as [`brute_min_distance`], splitting the message space by the
/// coefficients of the last rows across `jobs` threads.
pub fn brute_min_distance_parallel(c: &LinearCode, budget: &EnumerationBudget, jobs: usize) -> Result<usize> {
    if c.k() == 0 {
        return Err(Error::NoNonzeroWords);
    }
    budget.check(c.field().order(), c.k())?;
    let f = c.field();
    let q = f.order() as usize;
    let k = c.k();
    // Fix the top `split` message digits per task.
    let mut split = 0;
    let mut tasks = 1usize;
    while jobs > 1 && tasks < 4 * jobs && split < k - 1 {
        split += 1;
        tasks *= q;
    }
    let low = k - split;
    let g = c.generator();
    let run = |t: usize| -> usize {
        let mut base = vec![0u32; c.n()];
        let mut rest = t;
        for r in low..k {
            let coef = (rest % q) as u32;
            rest /= q;
            if coef != 0 {
                for (b, &x) in base.iter_mut().zip(g.row(r)) {
                    *b = f.add(*b, f.mul(coef, x));
                }
            }
        }
        let mut best = usize::MAX;
        gray_walk(c, low, base, |w| {
            let wt = weight(w);
            if wt != 0 && wt < best {
                best = wt;
            }
        });
        best
    };
    let best = if tasks == 1 {
        run(0)
    } else {
        let workers = jobs.min(tasks);
        std::thread::scope(|s| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    let run = &run;
                    s.spawn(move || (w..tasks).step_by(workers).map(run).min().unwrap_or(usize::MAX))
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("worker panicked"))
                .min()
                .unwrap_or(usize::MAX)
        })
    };
    Ok(best)
}

/// `dim(C₁ ∩ C₂) = k₁ + k₂ − rank[G₁; G₂]`.
pub fn brute_intersection_dim(c1: &LinearCode, c2: &LinearCode) -> Result<usize> {
    c1.check_compatible(c2)?;
    let stacked = c1.generator().vstack(c2.generator())?;
    Ok(c1.k() + c2.k() - stacked.rank())
}

/// Candidate σ families for [`exhaustive_sigma_search`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SigmaFamily {
    /// Every diagonal map, identity first; coordinate 0 varies fastest.
    DiagonalLambda,
    /// Hull-normalizing permutation conjugating a rotation of `0..=j`.
    CyclicPi2,
    /// Every permutation for `n ≤ 8`, otherwise a seeded sample.
    PermutationSample { samples: usize, seed: u64 },
}

impl SigmaFamily {
    pub fn parse(s: &str) -> Result<SigmaFamily> {
        match s {
            "diagonal-lambda" | "diagonal" => Ok(SigmaFamily::DiagonalLambda),
            "cyclic-pi2" | "cyclic" => Ok(SigmaFamily::CyclicPi2),
            "permutation-sample" | "permutation" => Ok(SigmaFamily::PermutationSample {
                samples: 20_000,
                seed: 0,
            }),
            other => Err(Error::Parse(format!("unknown σ family '{other}'"))),
        }
    }
}

/// Next permutation in lexicographic order, or `false` after the last.
pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// First σ of the family (in its fixed order) making `c` σ-LCD, trying at
/// most `budget.max_words` candidates.
pub fn exhaustive_sigma_search(
    c: &LinearCode,
    family: SigmaFamily,
    budget: &EnumerationBudget,
) -> Option<SemiLinearMap> {
    let f = c.field();
    let n = c.n();
    let lcd = |s: &SemiLinearMap| hull_dim(c, s).map(|h| h == 0).unwrap_or(false);
    let cap = budget.max_words;
    match family {
        SigmaFamily::DiagonalLambda => {
            let radix = f.order() - 1;
            let mut digits = vec![0u32; n];
            for _ in 0..cap {
                let s = SemiLinearMap::diagonal(f, digits.iter().map(|&d| d + 1).collect())
                    .expect("nonzero diagonal");
                if lcd(&s) {
                    return Some(s);
                }
                let pos = digits.iter().position(|&d| d + 1 < radix)?;
                digits[..pos].fill(0);
                digits[pos] += 1;
            }
            None
        }
        SigmaFamily::CyclicPi2 => {
            let pi = normalize_hull(c).pi;
            let pi_inv = pi.inverse();
            (0..n).find_map(|j| {
                let mut perm: Vec<usize> = (0..n).collect();
                if j > 0 {
                    perm[0] = j;
                    for (i, p) in perm.iter_mut().enumerate().take(j + 1).skip(1) {
                        *p = i - 1;
                    }
                }
                let rot = SemiLinearMap::permutation(f, perm).expect("rotation");
                let s = pi_inv.compose(&rot).and_then(|s| s.compose(&pi)).expect("same shape");
                lcd(&s).then_some(s)
            })
        }
        SigmaFamily::PermutationSample { samples, seed } => {
            let mut perm: Vec<usize> = (0..n).collect();
            if n <= 8 {
                let mut tried = 0;
                loop {
                    let s = SemiLinearMap::permutation(f, perm.clone()).expect("permutation");
                    if lcd(&s) {
                        return Some(s);
                    }
                    tried += 1;
                    if tried >= cap || !next_permutation(&mut perm) {
                        return None;
                    }
                }
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let identity = SemiLinearMap::identity(f, n);
            if lcd(&identity) {
                return Some(identity);
            }
            (0..samples.min(cap as usize)).find_map(|_| {
                perm.shuffle(&mut rng);
                let s = SemiLinearMap::permutation(f, perm.clone()).expect("permutation");
                lcd(&s).then_some(s)
            })
        }
    }
}
