//! Numerical semigroup rings `A = k[[t^S]]`, value-set modules `M` and
//! monomial ideals `I`.
//!
//! A monomial submodule of `k[[t]]` is determined by its set of exponents
//! (its value set). Lengths of quotients are counts of missing values, sums
//! of submodules are unions, intersections are intersections, and
//! `val(I N) = gens(I) + val(N)`. Everything below is exact integer set
//! arithmetic on [`ValueSet`]s.

use std::collections::BTreeSet;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A set of nonnegative integers containing every integer `>= conductor`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ValueSet {
    window: Vec<bool>,
    conductor: usize,
}

impl ValueSet {
    /// The set `{x : x < bound && member(x)} ∪ [bound, ∞)`, canonicalized.
    pub fn from_fn(bound: usize, member: impl Fn(usize) -> bool) -> ValueSet {
        let window = (0..bound).map(member).collect();
        let mut vs = ValueSet { window, conductor: bound };
        vs.canonicalize();
        vs
    }

    /// All integers `>= start`.
    pub fn tail(start: usize) -> ValueSet {
        ValueSet::from_fn(start, |_| false)
    }

    fn canonicalize(&mut self) {
        while self.conductor > 0 && self.window[self.conductor - 1] {
            self.conductor -= 1;
        }
        self.window.truncate(self.conductor);
    }

    /// The numerical semigroup generated by `gens`.
    pub fn semigroup(gens: &[u64]) -> Result<ValueSet> {
        if gens.is_empty() || gens.contains(&0) {
            return Err(Error::InvalidInstance("semigroup generators must be positive".into()));
        }
        if gens.iter().fold(0u64, |g, &a| g.gcd(&a)) != 1 {
            return Err(Error::InvalidInstance("semigroup generators must have gcd 1".into()));
        }
        let gens: Vec<usize> = gens.iter().map(|&g| g as usize).collect();
        let smallest = *gens.iter().min().unwrap();
        // Grow membership until `smallest` consecutive members appear; from
        // there on everything is reachable by adding `smallest`.
        let mut member = vec![true];
        let mut run = 1usize;
        while run < smallest {
            let x = member.len();
            let m = gens.iter().any(|&g| g <= x && member[x - g]);
            run = if m { run + 1 } else { 0 };
            member.push(m);
        }
        let start = member.len() - run;
        Ok(ValueSet::from_fn(start, |x| member[x]))
    }

    pub fn conductor(&self) -> usize {
        self.conductor
    }

    pub fn contains(&self, x: usize) -> bool {
        x >= self.conductor || self.window[x]
    }

    pub fn min(&self) -> usize {
        self.window.iter().position(|&b| b).unwrap_or(self.conductor)
    }

    /// Members strictly below `bound`.
    pub fn members_below(&self, bound: usize) -> impl Iterator<Item = usize> + '_ {
        (0..bound).filter(move |&x| self.contains(x))
    }

    /// Elements below the conductor that are missing.
    pub fn gaps(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.conductor).filter(move |&x| !self.window[x])
    }

    pub fn is_subset(&self, other: &ValueSet) -> bool {
        let bound = self.conductor.max(other.conductor);
        (0..bound).all(|x| !self.contains(x) || other.contains(x))
    }

    pub fn union(&self, other: &ValueSet) -> ValueSet {
        let bound = self.conductor.min(other.conductor);
        ValueSet::from_fn(bound, |x| self.contains(x) || other.contains(x))
    }

    pub fn intersection(&self, other: &ValueSet) -> ValueSet {
        let bound = self.conductor.max(other.conductor);
        ValueSet::from_fn(bound, |x| self.contains(x) && other.contains(x))
    }

    /// `∪_g (g + base)`: the value set of the submodule generated by
    /// monomials of values `gens` times a module with value set `base`.
    pub fn translates(gens: &[usize], base: &ValueSet) -> ValueSet {
        assert!(!gens.is_empty(), "translates of an empty generator list");
        let bound = gens.iter().map(|g| g + base.conductor).min().unwrap();
        ValueSet::from_fn(bound, |x| gens.iter().any(|&g| g <= x && base.contains(x - g)))
    }

    /// `{a + b : a ∈ self, b ∈ other}`.
    pub fn sumset(&self, other: &ValueSet) -> ValueSet {
        // Everything >= conductor(self) + min(other) is a sum.
        let bound = self.conductor + other.min();
        ValueSet::from_fn(bound, |x| (0..=x).any(|a| self.contains(a) && other.contains(x - a)))
    }

    /// `|big \ small|`; errors when `small` is not contained in `big`.
    pub fn length_quotient(big: &ValueSet, small: &ValueSet) -> Result<usize> {
        if !small.is_subset(big) {
            return Err(Error::NotContained);
        }
        let bound = big.conductor.max(small.conductor);
        Ok((0..bound).filter(|&x| big.contains(x) && !small.contains(x)).count())
    }

    /// `{x ∈ ambient : x + d ∈ target for every d}`.
    pub fn colon(target: &ValueSet, divisors: &[usize], ambient: &ValueSet) -> ValueSet {
        assert!(!divisors.is_empty(), "colon by an empty divisor list");
        let bound = target.conductor.max(ambient.conductor);
        ValueSet::from_fn(bound, |x| {
            ambient.contains(x) && divisors.iter().all(|&d| target.contains(x + d))
        })
    }

    /// Minimal generators of `self` as a module over the semigroup with
    /// minimal generators `sgens`.
    pub fn module_generators(&self, sgens: &[usize]) -> Vec<usize> {
        let bound = self.conductor + sgens.iter().max().copied().unwrap_or(0) + 1;
        self.members_below(bound)
            .filter(|&x| !sgens.iter().any(|&a| a <= x && self.contains(x - a)))
            .collect()
    }
}

/// Minimal generators of a numerical semigroup (the value generators of its
/// maximal ideal).
pub fn minimal_generators(s: &ValueSet) -> Vec<usize> {
    let bound = s.conductor() + s.min_positive() + 1;
    let positive: Vec<usize> = s.members_below(bound).filter(|&x| x > 0).collect();
    positive
        .iter()
        .copied()
        .filter(|&x| !positive.iter().any(|&a| a < x && s.contains(x - a) && x - a > 0))
        .collect()
}

impl ValueSet {
    fn min_positive(&self) -> usize {
        (1..=self.conductor + 1).find(|&x| self.contains(x)).unwrap()
    }
}

/// `A = k[[t^sgen]]`, `I` generated by `t^igen`, `M` generated by `t^mgen`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemigroupInstance {
    pub sgen: Vec<u64>,
    pub igen: Vec<u64>,
    pub mgen: Vec<u64>,
}

impl SemigroupInstance {
    pub fn new(sgen: Vec<u64>, igen: Vec<u64>, mgen: Vec<u64>) -> Result<SemigroupInstance> {
        let s = ValueSet::semigroup(&sgen)?;
        if igen.is_empty() {
            return Err(Error::InvalidInstance("ideal needs at least one generator".into()));
        }
        if let Some(g) = igen.iter().find(|&&g| g == 0 || !s.contains(g as usize)) {
            return Err(Error::InvalidInstance(format!(
                "ideal generator {g} is not a nonzero element of the semigroup"
            )));
        }
        let mgen = if mgen.is_empty() { vec![0] } else { mgen };
        Ok(SemigroupInstance { sgen, igen, mgen })
    }

    pub fn ring(sgen: Vec<u64>, igen: Vec<u64>) -> Result<SemigroupInstance> {
        SemigroupInstance::new(sgen, igen, vec![0])
    }

    /// The instance as a line-oriented instance file.
    pub fn to_text(&self) -> String {
        let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
        let mut s = format!(
            "kind: semigroup\nsemigroup: {}\nideal: {}\n",
            join(&self.sgen),
            join(&self.igen)
        );
        if self.mgen != [0] {
            s.push_str(&format!("module: {}\n", join(&self.mgen)));
        }
        s
    }
}

/// The `I`-adic filtration of `M` for a [`SemigroupInstance`], with the
/// levels `val(I^n M)` computed on demand.
#[derive(Clone, Debug)]
pub struct SemigroupEngine {
    instance: SemigroupInstance,
    semigroup: ValueSet,
    sgens: Vec<usize>,
    igen: Vec<usize>,
    levels: Vec<ValueSet>,
    ideal_power_gens: Vec<Vec<usize>>,
    reduction: Option<usize>,
}

impl SemigroupEngine {
    pub fn new(instance: &SemigroupInstance) -> Result<SemigroupEngine> {
        let semigroup = ValueSet::semigroup(&instance.sgen)?;
        let sgens = minimal_generators(&semigroup);
        let mgen: Vec<usize> = instance.mgen.iter().map(|&g| g as usize).collect();
        let module = ValueSet::translates(&mgen, &semigroup);
        let mut igen: Vec<usize> = instance.igen.iter().map(|&g| g as usize).collect();
        igen.sort_unstable();
        igen.dedup();
        Ok(SemigroupEngine {
            instance: instance.clone(),
            semigroup,
            sgens,
            igen,
            levels: vec![module],
            ideal_power_gens: vec![vec![0]],
            reduction: None,
        })
    }

    pub fn instance(&self) -> &SemigroupInstance {
        &self.instance
    }

    pub fn semigroup(&self) -> &ValueSet {
        &self.semigroup
    }

    pub fn module(&self) -> &ValueSet {
        &self.levels[0]
    }

    /// `val(I^n M)`.
    pub fn filtration(&mut self, n: usize) -> &ValueSet {
        while self.levels.len() <= n {
            let next = ValueSet::translates(&self.igen, self.levels.last().unwrap());
            self.levels.push(next);
        }
        &self.levels[n]
    }

    /// Minimal value generators of `I^t`.
    pub fn ideal_power_generators(&mut self, t: usize) -> &[usize] {
        while self.ideal_power_gens.len() <= t {
            let prev = self.ideal_power_gens.last().unwrap();
            let sums: BTreeSet<usize> =
                prev.iter().flat_map(|&a| self.igen.iter().map(move |&g| a + g)).collect();
            let sums: Vec<usize> = sums.into_iter().collect();
            let vals = ValueSet::translates(&sums, &self.semigroup);
            let gens = vals.module_generators(&self.sgens);
            self.ideal_power_gens.push(gens);
        }
        &self.ideal_power_gens[t]
    }

    /// `l(I^n M / I^{n+1} M)`.
    pub fn hilbert(&mut self, n: usize) -> Result<u64> {
        self.filtration(n + 1);
        Ok(ValueSet::length_quotient(&self.levels[n], &self.levels[n + 1])? as u64)
    }

    /// `l(M / I^{n+1} M)`.
    pub fn hilbert_samuel(&mut self, n: usize) -> Result<u64> {
        self.filtration(n + 1);
        Ok(ValueSet::length_quotient(&self.levels[0], &self.levels[n + 1])? as u64)
    }

    /// Largest `t` with `val(IM) ⊆ val(m^t M)`.
    pub fn b_invariant(&mut self) -> Result<u32> {
        let cap = self.semigroup.conductor() + self.igen.iter().max().unwrap() + 1;
        let im = self.filtration(1).clone();
        let mut power = self.levels[0].clone();
        let mut b = 0;
        loop {
            let next = ValueSet::translates(&self.sgens, &power);
            if !im.is_subset(&next) {
                return Ok(b);
            }
            b += 1;
            if b as usize > cap {
                return Err(Error::Diverged { module: "semigroup", what: "b-invariant", cap });
            }
            power = next;
        }
    }

    /// Smallest `r` with `I^{n+1} M = x I^n M` for all `n >= r`, where `x` is
    /// the ideal generator of least value. `h(n) = e0` and `H^0_n = 0` hold
    /// for every `n >= r`; the latter already from `n >= r - 1`.
    pub fn reduction_number(&mut self) -> Result<usize> {
        if let Some(r) = self.reduction {
            return Ok(r);
        }
        let e = self.igen[0];
        let cap = 4 * (self.semigroup.conductor() + self.igen.last().unwrap() + self.levels[0].conductor()) + 8;
        for r in 0..=cap {
            self.filtration(r + 1);
            if self.levels[r + 1] == ValueSet::translates(&[e], &self.levels[r]) {
                self.reduction = Some(r);
                return Ok(r);
            }
        }
        Err(Error::Diverged { module: "semigroup", what: "reduction number", cap })
    }

    /// `(I^{n+1+t} M :_M I^t)` for one `t`.
    pub fn ratliff_rush_colon(&mut self, n: usize, t: usize) -> ValueSet {
        let divisors = self.ideal_power_generators(t).to_vec();
        self.filtration(n + 1 + t);
        ValueSet::colon(&self.levels[n + 1 + t], &divisors, &self.levels[0])
    }

    /// The union `∪_t (I^{n+1+t} M :_M I^t)`.
    ///
    /// Computed as `(I^{n+1+T} M :_M x^T)` with `T = max(r - n - 1, 0)`. The
    /// `x`-colons contain the `I`-colons, increase with `t` and are constant
    /// once `n + 1 + t >= r`; conversely `y + x^t ∈ I^{n+1+t} M` puts `y` in
    /// the `I`-colon at `t + r_I` where `I^{s+1} = x I^s` for `s >= r_I`.
    pub fn ratliff_rush_closure(&mut self, n: usize) -> Result<ValueSet> {
        let t = self.reduction_number()?.saturating_sub(n + 1);
        let shift = t * self.igen[0];
        self.filtration(n + 1 + t);
        Ok(ValueSet::colon(&self.levels[n + 1 + t], &[shift], &self.levels[0]))
    }

    /// `l(H^0_{G+}(G_I(M))_n)` for `n < window`.
    pub fn h0_profile(&mut self, window: usize) -> Result<Vec<u64>> {
        (0..window)
            .map(|n| {
                let closure = self.ratliff_rush_closure(n)?;
                self.filtration(n + 1);
                let (level, next) = (&self.levels[n], &self.levels[n + 1]);
                let bound = level.conductor().max(next.conductor());
                Ok((0..bound)
                    .filter(|&x| level.contains(x) && !next.contains(x) && closure.contains(x))
                    .count() as u64)
            })
            .collect()
    }
}
