//! Brute-force recomputation of Hilbert-Samuel lengths and one
//! Ratliff-Rush colon per instance, sharing no code with the engines:
//! value sets are generated by breadth-first closure up to an explicit bound,
//! monomial ideals by unminimalized generator products and divisibility
//! tests over a box.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::semigroup::{SemigroupEngine, SemigroupInstance};
use crate::staircase::{Exponent, StaircaseEngine, StaircaseIdeal, StaircaseInstance};

/// Checks `l(M / I^{n+1} M)` for `n <= n_max` and the colon
/// `(I^2 M :_M I)` against naive enumeration.
pub fn oracle_check(instance: &Instance, n_max: usize) -> Result<bool> {
    match instance {
        Instance::Semigroup(s) => semigroup_check(s, n_max),
        Instance::Bivariate(s) => bivariate_check(s, n_max),
    }
}

/// Every integer `>= bound` lies in `t^g M` for any `g <= top_shift`.
fn semigroup_bound(inst: &SemigroupInstance, top_shift: u64) -> usize {
    let a_min = *inst.sgen.iter().min().unwrap();
    let a_max = *inst.sgen.iter().max().unwrap();
    // Schur: the conductor of <a_1..a_k> is at most (a_min - 1)(a_max - 1).
    (top_shift + inst.mgen.iter().max().unwrap() + (a_min - 1) * (a_max - 1) + 1) as usize
}

/// Breadth-first closure of `seeds` under adding semigroup generators,
/// truncated at `bound`.
fn closure(seeds: impl IntoIterator<Item = u64>, sgen: &[u64], bound: usize) -> Vec<bool> {
    let mut member = vec![false; bound + 1];
    let mut queue: VecDeque<usize> = VecDeque::new();
    for s in seeds {
        let s = s as usize;
        if s <= bound && !member[s] {
            member[s] = true;
            queue.push_back(s);
        }
    }
    while let Some(x) = queue.pop_front() {
        for &a in sgen {
            let y = x + a as usize;
            if y <= bound && !member[y] {
                member[y] = true;
                queue.push_back(y);
            }
        }
    }
    member
}

/// All values `g_1 + ... + g_k + m` with `g_i` ideal generators and `m` a
/// module generator.
fn product_values(inst: &SemigroupInstance, k: usize) -> BTreeSet<u64> {
    let mut sums: BTreeSet<u64> = inst.mgen.iter().copied().collect();
    for _ in 0..k {
        sums = sums.iter().flat_map(|&s| inst.igen.iter().map(move |&g| s + g)).collect();
    }
    sums
}

fn semigroup_check(inst: &SemigroupInstance, n_max: usize) -> Result<bool> {
    let mut engine = SemigroupEngine::new(inst)?;
    let top = *inst.igen.iter().max().unwrap();
    for n in 0..=n_max {
        let bound = semigroup_bound(inst, top * (n as u64 + 1));
        let module = closure(inst.mgen.iter().copied(), &inst.sgen, bound);
        let power = closure(product_values(inst, n + 1), &inst.sgen, bound);
        let naive = (0..=bound).filter(|&x| module[x] && !power[x]).count() as u64;
        let fast = engine.hilbert_samuel(n)?;
        if naive != fast {
            return Err(Error::OracleMismatch { n: n as i64, engine: fast, oracle: naive });
        }
    }
    // (I^2 M :_M I), by testing every generator of I.
    let bound = semigroup_bound(inst, 2 * top);
    let module = closure(inst.mgen.iter().copied(), &inst.sgen, bound + top as usize);
    let square = closure(product_values(inst, 2), &inst.sgen, bound + top as usize);
    let naive: Vec<usize> = (0..=bound)
        .filter(|&x| module[x] && inst.igen.iter().all(|&g| square[x + g as usize]))
        .collect();
    let colon = engine.ratliff_rush_colon(0, 1);
    let fast: Vec<usize> = colon.members_below(bound + 1).collect();
    if naive != fast {
        return Err(Error::OracleMismatch { n: -1, engine: fast.len() as u64, oracle: naive.len() as u64 });
    }
    Ok(true)
}

/// Side length of a box containing every standard monomial of `I^k + J`.
pub fn bivariate_box(inst: &StaircaseInstance, k: usize) -> u32 {
    (k as u32) * inst.ideal.max_exponent() + inst.ring_ideal.max_exponent() + 1
}

fn power_gens(inst: &StaircaseInstance, k: usize) -> Vec<Exponent> {
    let mut gens: HashSet<Exponent> = HashSet::from([(0, 0)]);
    for _ in 0..k {
        gens = gens
            .iter()
            .flat_map(|&(a, b)| inst.ideal.gens().iter().map(move |&(c, d)| (a + c, b + d)))
            .collect();
    }
    gens.into_iter().chain(inst.ring_ideal.gens().iter().copied()).collect()
}

fn divides(gens: &[Exponent], m: Exponent) -> bool {
    gens.iter().any(|g| g.0 <= m.0 && g.1 <= m.1)
}

/// `l(A / (I^{n+1} + J))` by counting lattice points of a `side x side` box.
pub fn naive_hilbert_samuel(inst: &StaircaseInstance, n: usize, side: u32) -> u64 {
    let gens = power_gens(inst, n + 1);
    let mut count = 0;
    for a in 0..side {
        for b in 0..side {
            if !divides(&gens, (a, b)) {
                count += 1;
            }
        }
    }
    count
}

fn bivariate_check(inst: &StaircaseInstance, n_max: usize) -> Result<bool> {
    let mut engine = StaircaseEngine::new(inst);
    for n in 0..=n_max {
        let naive = naive_hilbert_samuel(inst, n, bivariate_box(inst, n + 1));
        let fast = engine.hilbert_samuel(n)?;
        if naive != fast {
            return Err(Error::OracleMismatch { n: n as i64, engine: fast, oracle: naive });
        }
    }
    let side = bivariate_box(inst, 2);
    let square = power_gens(inst, 2);
    let colon = engine.ratliff_rush_colon(0, 1);
    let (mut naive, mut fast) = (0u64, 0u64);
    for a in 0..side {
        for b in 0..side {
            let in_naive = inst.ideal.gens().iter().all(|&(c, d)| divides(&square, (a + c, b + d)));
            let in_fast = colon.contains((a, b));
            if in_naive != in_fast {
                return Err(Error::OracleMismatch { n: -1, engine: in_fast as u64, oracle: in_naive as u64 });
            }
            naive += in_naive as u64;
            fast += in_fast as u64;
        }
    }
    debug_assert_eq!(naive, fast);
    Ok(true)
}

/// `l(H^0_n)` for `n < window` from the colon `(I^{n+1+t} M : I^t)` at one
/// fixed `t`, by enumeration. Agrees with the true profile once `t` is past
/// the point where every chain has stabilized.
pub fn naive_h0_profile(instance: &Instance, window: usize, t: usize) -> Vec<u64> {
    match instance {
        Instance::Semigroup(inst) => {
            let top = *inst.igen.iter().max().unwrap();
            let shifts: BTreeSet<u64> = product_values(&SemigroupInstance { mgen: vec![0], ..inst.clone() }, t);
            (0..window)
                .map(|n| {
                    let bound = semigroup_bound(inst, top * (n as u64 + 1));
                    let reach = bound + (t as u64 * top) as usize;
                    let module = closure(inst.mgen.iter().copied(), &inst.sgen, bound);
                    let level = closure(product_values(inst, n), &inst.sgen, bound);
                    let next = closure(product_values(inst, n + 1), &inst.sgen, bound);
                    let far = closure(product_values(inst, n + 1 + t), &inst.sgen, reach);
                    (0..=bound)
                        .filter(|&y| module[y] && level[y] && !next[y])
                        .filter(|&y| shifts.iter().all(|&g| far[y + g as usize]))
                        .count() as u64
                })
                .collect()
        }
        Instance::Bivariate(inst) => {
            let divisors = power_gens(&StaircaseInstance { ring_ideal: StaircaseIdeal::zero(), ..inst.clone() }, t);
            (0..window)
                .map(|n| {
                    let level = power_gens(inst, n);
                    let next = power_gens(inst, n + 1);
                    let far = minimal(power_gens(inst, n + 1 + t));
                    let side = bivariate_box(inst, n + 1);
                    let mut count = 0;
                    for a in 0..side {
                        for b in 0..side {
                            let m = (a, b);
                            if divides(&level, m)
                                && !divides(&next, m)
                                && divisors.iter().all(|&(c, d)| divides(&far, (a + c, b + d)))
                            {
                                count += 1;
                            }
                        }
                    }
                    count
                })
                .collect()
        }
    }
}

/// Drops generators divisible by another, by pairwise comparison.
fn minimal(gens: Vec<Exponent>) -> Vec<Exponent> {
    gens.iter()
        .copied()
        .filter(|&g| !gens.iter().any(|&h| h != g && h.0 <= g.0 && h.1 <= g.1))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn semigroup_345_matches() {
        let inst = Instance::Semigroup(SemigroupInstance::ring(vec![3, 4, 5], vec![3, 4]).unwrap());
        assert_eq!(oracle_check(&inst, 6), Ok(true));
    }

    #[test]
    fn naive_samuel_values_for_345() {
        // cumulative sums of h = (2, 2, 3, 3, ...)
        let inst = SemigroupInstance::ring(vec![3, 4, 5], vec![3, 4]).unwrap();
        let values: Vec<u64> = (0..5)
            .map(|n| {
                let bound = semigroup_bound(&inst, 4 * (n as u64 + 1));
                let module = closure([0], &inst.sgen, bound);
                let power = closure(product_values(&inst, n + 1), &inst.sgen, bound);
                (0..=bound).filter(|&x| module[x] && !power[x]).count() as u64
            })
            .collect();
        assert_eq!(values, vec![2, 4, 7, 10, 13]);
    }

    #[test]
    fn regular_ring_matches() {
        let inst = Instance::Semigroup(SemigroupInstance::ring(vec![1], vec![1]).unwrap());
        assert_eq!(oracle_check(&inst, 8), Ok(true));
    }

    #[test]
    fn staircase_family_matches() {
        for (s, u, v) in [(1, 0, 1), (2, 1, 2), (0, 3, 1)] {
            let inst = Instance::Bivariate(StaircaseInstance::family(s, u, v).unwrap());
            assert_eq!(oracle_check(&inst, 8), Ok(true));
        }
    }

    #[test]
    fn naive_h0_examples() {
        let example_345 = Instance::Semigroup(SemigroupInstance::ring(vec![3, 4, 5], vec![3, 4]).unwrap());
        assert_eq!(naive_h0_profile(&example_345, 4, 6), vec![1, 0, 0, 0]);
        let j = StaircaseIdeal::new(vec![(0, 2), (6, 1)]);
        let stalled = Instance::Bivariate(StaircaseInstance::new(j, StaircaseIdeal::maximal()).unwrap());
        assert_eq!(naive_h0_profile(&stalled, 8, 5), vec![0, 0, 1, 1, 1, 1, 1, 0]);
        assert_eq!(naive_h0_profile(&stalled, 8, 12), vec![0, 1, 1, 1, 1, 1, 1, 0]);
    }

    #[test]
    fn box_size_does_not_matter() {
        let inst = StaircaseInstance::family(2, 1, 2).unwrap();
        for n in 0..5 {
            let side = bivariate_box(&inst, n + 1);
            assert_eq!(naive_hilbert_samuel(&inst, n, side), naive_hilbert_samuel(&inst, n, 2 * side));
        }
    }
}
