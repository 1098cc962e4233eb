//! Monomial ideals in two variables and the filtration engine for
//! `A = k[[x,y]]/J`, `M = A`, with `I` monomial and `m`-primary.
//!
//! Lengths are lattice-point counts between staircases. A monomial ideal is
//! kept as its antichain of minimal generators sorted by increasing
//! `x`-exponent (and therefore strictly decreasing `y`-exponent), which lets
//! every count be read off column heights.

use std::fmt;

use crate::error::{Error, Result};

pub type Exponent = (u32, u32);

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct StaircaseIdeal {
    gens: Vec<Exponent>,
}

impl StaircaseIdeal {
    /// Minimalizes `gens` into a canonical antichain.
    pub fn new(mut gens: Vec<Exponent>) -> StaircaseIdeal {
        gens.sort_unstable();
        let mut kept: Vec<Exponent> = Vec::with_capacity(gens.len());
        for g in gens {
            if kept.last().is_none_or(|k| g.1 < k.1) {
                kept.push(g);
            }
        }
        StaircaseIdeal { gens: kept }
    }

    pub fn zero() -> StaircaseIdeal {
        StaircaseIdeal { gens: Vec::new() }
    }

    pub fn unit() -> StaircaseIdeal {
        StaircaseIdeal { gens: vec![(0, 0)] }
    }

    /// `(x, y)`.
    pub fn maximal() -> StaircaseIdeal {
        StaircaseIdeal::new(vec![(1, 0), (0, 1)])
    }

    pub fn gens(&self) -> &[Exponent] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, m: Exponent) -> bool {
        self.gens.iter().any(|g| g.0 <= m.0 && g.1 <= m.1)
    }

    pub fn is_subset(&self, other: &StaircaseIdeal) -> bool {
        self.gens.iter().all(|&g| other.contains(g))
    }

    /// Exponent of the pure power of `x` in the ideal, if any.
    pub fn pure_x(&self) -> Option<u32> {
        self.gens.last().filter(|g| g.1 == 0).map(|g| g.0)
    }

    pub fn pure_y(&self) -> Option<u32> {
        self.gens.first().filter(|g| g.0 == 0).map(|g| g.1)
    }

    pub fn sum(&self, other: &StaircaseIdeal) -> StaircaseIdeal {
        StaircaseIdeal::new(self.gens.iter().chain(&other.gens).copied().collect())
    }

    pub fn product(&self, other: &StaircaseIdeal) -> StaircaseIdeal {
        StaircaseIdeal::new(
            self.gens
                .iter()
                .flat_map(|a| other.gens.iter().map(move |b| (a.0 + b.0, a.1 + b.1)))
                .collect(),
        )
    }

    pub fn power(&self, n: u32) -> StaircaseIdeal {
        (0..n).fold(StaircaseIdeal::unit(), |acc, _| acc.product(self))
    }

    pub fn intersect(&self, other: &StaircaseIdeal) -> StaircaseIdeal {
        StaircaseIdeal::new(
            self.gens
                .iter()
                .flat_map(|a| other.gens.iter().map(move |b| (a.0.max(b.0), a.1.max(b.1))))
                .collect(),
        )
    }

    /// `(self : x^g.0 y^g.1)`.
    pub fn colon_monomial(&self, g: Exponent) -> StaircaseIdeal {
        StaircaseIdeal::new(
            self.gens
                .iter()
                .map(|a| (a.0.saturating_sub(g.0), a.1.saturating_sub(g.1)))
                .collect(),
        )
    }

    /// `(self : other)`; the unit ideal when `other` is zero.
    pub fn colon(&self, other: &StaircaseIdeal) -> StaircaseIdeal {
        other
            .gens
            .iter()
            .map(|&g| self.colon_monomial(g))
            .reduce(|acc, c| acc.intersect(&c))
            .unwrap_or_else(StaircaseIdeal::unit)
    }

    /// Number of standard monomials in column `a`: the least `y`-exponent of
    /// the ideal above `x^a`, or `None` when the whole column is standard.
    pub fn height(&self, a: u32) -> Option<u32> {
        self.gens.iter().take_while(|g| g.0 <= a).last().map(|g| g.1)
    }

    fn max_x(&self) -> u32 {
        self.gens.iter().map(|g| g.0).max().unwrap_or(0)
    }

    pub fn max_exponent(&self) -> u32 {
        self.gens.iter().map(|g| g.0.max(g.1)).max().unwrap_or(0)
    }

    /// Number of monomials in `outer` but not in `inner`, or `None` if
    /// infinite. Requires `inner ⊆ outer`.
    pub fn colength_between(outer: &StaircaseIdeal, inner: &StaircaseIdeal) -> Result<Option<u64>> {
        if !inner.is_subset(outer) {
            return Err(Error::NotContained);
        }
        let last = outer.max_x().max(inner.max_x());
        let mut total = 0u64;
        for a in 0..=last {
            match (outer.height(a), inner.height(a)) {
                (None, _) => {}
                (Some(_), None) => return Ok(None),
                (Some(o), Some(i)) => total += (i - o) as u64,
            }
        }
        // Columns past `last` repeat column `last`.
        match (outer.height(last), inner.height(last)) {
            (Some(_), None) => Ok(None),
            (Some(o), Some(i)) if i != o => Ok(None),
            _ => Ok(Some(total)),
        }
    }

    /// Finite colength; errors when the quotient is infinite.
    pub fn finite_colength(outer: &StaircaseIdeal, inner: &StaircaseIdeal) -> Result<u64> {
        StaircaseIdeal::colength_between(outer, inner)?
            .ok_or_else(|| Error::InvalidInstance("quotient has infinite length".into()))
    }

    /// `(self : m^∞)`.
    pub fn saturation(&self) -> Result<StaircaseIdeal> {
        let cap = (self.max_x() + self.gens.iter().map(|g| g.1).max().unwrap_or(0) + 2) as usize;
        let m = StaircaseIdeal::maximal();
        let mut current = self.clone();
        for _ in 0..=cap {
            let next = current.colon(&m);
            if next == current {
                return Ok(current);
            }
            current = next;
        }
        Err(Error::Diverged { module: "staircase", what: "saturation", cap })
    }

    pub fn to_text(&self) -> String {
        self.gens.iter().map(|g| format!("{} {}", g.0, g.1)).collect::<Vec<_>>().join(" ; ")
    }
}

impl fmt::Display for StaircaseIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("(0)");
        }
        let mono = |&(a, b): &Exponent| {
            let part = |v: &str, e: u32| match e {
                0 => String::new(),
                1 => v.to_string(),
                _ => format!("{v}^{e}"),
            };
            let s = format!("{}{}", part("x", a), part("y", b));
            if s.is_empty() { "1".to_string() } else { s }
        };
        write!(f, "({})", self.gens.iter().map(mono).collect::<Vec<_>>().join(", "))
    }
}

/// `A = k[[x,y]]/J` with `M = A` and an `m`-primary monomial ideal `I`
/// (given by preimage generators).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StaircaseInstance {
    pub ring_ideal: StaircaseIdeal,
    pub ideal: StaircaseIdeal,
}

impl StaircaseInstance {
    pub fn new(ring_ideal: StaircaseIdeal, ideal: StaircaseIdeal) -> Result<StaircaseInstance> {
        let reject = |why: &str| Err(Error::InvalidInstance(why.to_string()));
        if ring_ideal.is_zero() {
            return reject("J = 0 gives a ring of dimension 2");
        }
        if ring_ideal.contains((0, 0)) {
            return reject("J is the unit ideal");
        }
        if ring_ideal.pure_x().is_some() && ring_ideal.pure_y().is_some() {
            return reject("J contains pure powers of x and y, so the ring has dimension 0");
        }
        if ideal.is_zero() || ideal.contains((0, 0)) {
            return reject("I must be a proper nonzero ideal inside m");
        }
        let sum = ideal.sum(&ring_ideal);
        if sum.pure_x().is_none() || sum.pure_y().is_none() {
            return reject("I is not m-primary: I + J misses a pure power of x or y");
        }
        Ok(StaircaseInstance { ring_ideal, ideal })
    }

    /// `J = (x^s y^(u+v), x^(s+1) y^u)` with `I = m`.
    pub fn family(s: u32, u: u32, v: u32) -> Result<StaircaseInstance> {
        StaircaseInstance::new(
            StaircaseIdeal::new(vec![(s, u + v), (s + 1, u)]),
            StaircaseIdeal::maximal(),
        )
    }

    pub fn to_text(&self) -> String {
        format!(
            "kind: bivariate\nring_ideal: {}\nideal: {}\n",
            self.ring_ideal.to_text(),
            self.ideal.to_text()
        )
    }
}

/// Filtration ideals `I^n + J` and their derived profiles.
#[derive(Clone, Debug)]
pub struct StaircaseEngine {
    instance: StaircaseInstance,
    powers: Vec<StaircaseIdeal>,
    levels: Vec<StaircaseIdeal>,
    torsion: Option<(StaircaseIdeal, u64)>,
}

impl StaircaseEngine {
    pub fn new(instance: &StaircaseInstance) -> StaircaseEngine {
        StaircaseEngine {
            instance: instance.clone(),
            powers: vec![StaircaseIdeal::unit()],
            levels: vec![StaircaseIdeal::unit()],
            torsion: None,
        }
    }

    pub fn instance(&self) -> &StaircaseInstance {
        &self.instance
    }

    /// `I^t` (without `J`).
    pub fn ideal_power(&mut self, t: usize) -> &StaircaseIdeal {
        while self.powers.len() <= t {
            let next = self.powers.last().unwrap().product(&self.instance.ideal);
            self.powers.push(next);
        }
        &self.powers[t]
    }

    /// `I^n + J`.
    pub fn filtration(&mut self, n: usize) -> &StaircaseIdeal {
        while self.levels.len() <= n {
            let k = self.levels.len();
            self.ideal_power(k);
            let level = self.powers[k].sum(&self.instance.ring_ideal);
            self.levels.push(level);
        }
        &self.levels[n]
    }

    fn level_pair(&mut self, n: usize) -> (&StaircaseIdeal, &StaircaseIdeal) {
        self.filtration(n + 1);
        (&self.levels[n], &self.levels[n + 1])
    }

    /// `l(M / I^{n+1} M)`.
    pub fn hilbert_samuel(&mut self, n: usize) -> Result<u64> {
        let level = self.filtration(n + 1).clone();
        StaircaseIdeal::finite_colength(&StaircaseIdeal::unit(), &level)
    }

    /// `l(I^n M / I^{n+1} M)`.
    pub fn hilbert(&mut self, n: usize) -> Result<u64> {
        let (a, b) = self.level_pair(n);
        StaircaseIdeal::finite_colength(a, b)
    }

    /// Largest `t` with `I + J ⊆ m^t + J`.
    pub fn b_invariant(&mut self) -> Result<u32> {
        let j = &self.instance.ring_ideal;
        let cap = (self.instance.ideal.max_exponent() + j.max_exponent() + 2) as usize;
        let m = StaircaseIdeal::maximal();
        let mut t = 0u32;
        let mut power = StaircaseIdeal::unit();
        loop {
            power = power.product(&m);
            if !self.instance.ideal.is_subset(&power.sum(j)) {
                return Ok(t);
            }
            t += 1;
            if t as usize > cap {
                return Err(Error::Diverged { module: "staircase", what: "b-invariant", cap });
            }
        }
    }

    /// Preimage `J : m^∞` of `L = H^0_m(M)`, and `l(L)`.
    pub fn torsion(&mut self) -> Result<(StaircaseIdeal, u64)> {
        if let Some(t) = &self.torsion {
            return Ok(t.clone());
        }
        let j = &self.instance.ring_ideal;
        let sat = j.saturation()?;
        let len = StaircaseIdeal::finite_colength(&sat, j)?;
        self.torsion = Some((sat.clone(), len));
        Ok((sat, len))
    }

    /// `M / L` as an instance over `A / L`.
    pub fn quotient_by_torsion(&mut self) -> Result<StaircaseInstance> {
        let (sat, _) = self.torsion()?;
        StaircaseInstance::new(sat, self.instance.ideal.clone())
    }

    pub fn depth(&mut self) -> Result<u8> {
        Ok(if self.torsion()?.1 > 0 { 0 } else { 1 })
    }

    /// `l(K_n)` with `K = ⊕ (I^{n+1} M + L ∩ I^n M) / I^{n+1} M`.
    pub fn k_profile(&mut self, window: usize) -> Result<Vec<u64>> {
        let (sat, _) = self.torsion()?;
        (0..window)
            .map(|n| {
                let (level, next) = self.level_pair(n);
                let top = next.sum(&sat.intersect(level));
                StaircaseIdeal::finite_colength(&top, next)
            })
            .collect()
    }

    /// `((I^{n+1+t} + J) : I^t)` for one `t`.
    pub fn ratliff_rush_colon(&mut self, n: usize, t: usize) -> StaircaseIdeal {
        let divisor = self.ideal_power(t).clone();
        self.filtration(n + 1 + t).colon(&divisor)
    }

    /// The colon at `t = top + 1 - n`, which agrees with the union
    /// `∪_t ((I^{n+1+t} + J) : I^t)` on `I^n M` modulo `I^{n+1} M` when
    /// `H^0_{G+}(G)` vanishes above degree `top`: a degree-`n` class killed
    /// by some power of `G+` is then killed by `G_t`, whose products land in
    /// degrees above `top`. The colons grow with `t` but can stall for
    /// several steps before growing again, so no local stopping rule is safe.
    pub fn ratliff_rush_closure(&mut self, n: usize, top: usize) -> StaircaseIdeal {
        self.ratliff_rush_colon(n, (top + 1).saturating_sub(n).max(1))
    }

    /// `l(H^0_{G+}(G_I(M))_n)` for `n < window`, given that `H^0` vanishes
    /// above degree `top` (the main bound dominates `reg >= a0`).
    pub fn h0_profile(&mut self, window: usize, top: usize) -> Result<Vec<u64>> {
        (0..window)
            .map(|n| {
                let closure = self.ratliff_rush_closure(n, top);
                let (level, next) = self.level_pair(n);
                let upper = next.sum(&closure.intersect(level));
                StaircaseIdeal::finite_colength(&upper, next)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(g: &[Exponent]) -> StaircaseIdeal {
        StaircaseIdeal::new(g.to_vec())
    }

    fn engine(j: &[Exponent], i: &[Exponent]) -> StaircaseEngine {
        StaircaseEngine::new(&StaircaseInstance::new(ideal(j), ideal(i)).unwrap())
    }

    const M: &[Exponent] = &[(1, 0), (0, 1)];

    #[test]
    fn minimalizes_to_antichain() {
        let i = ideal(&[(2, 2), (1, 3), (2, 1), (3, 0), (1, 3)]);
        assert_eq!(i.gens(), &[(1, 3), (2, 1), (3, 0)]);
    }

    #[test]
    fn ideal_op_examples() {
        assert_eq!(ideal(&[(1, 1), (2, 0)]).colon(&ideal(&[(1, 0)])), ideal(&[(0, 1), (1, 0)]));
        assert_eq!(ideal(&[(1, 2), (2, 0)]).product(&ideal(&[(0, 1)])), ideal(&[(1, 3), (2, 1)]));
        assert_eq!(ideal(&[(1, 1), (2, 0)]).intersect(&ideal(&[(0, 1)])), ideal(&[(1, 1)]));
        assert_eq!(ideal(&[(2, 0)]).sum(&ideal(&[(0, 3), (3, 0)])), ideal(&[(0, 3), (2, 0)]));
        assert_eq!(ideal(M).power(2), ideal(&[(2, 0), (1, 1), (0, 2)]));
    }

    #[test]
    fn colength_counts_lattice_points() {
        let m = ideal(M);
        assert_eq!(StaircaseIdeal::colength_between(&StaircaseIdeal::unit(), &m.power(3)), Ok(Some(6)));
        assert_eq!(StaircaseIdeal::colength_between(&StaircaseIdeal::unit(), &ideal(&[(0, 2)])), Ok(None));
        assert_eq!(StaircaseIdeal::colength_between(&ideal(&[(1, 0)]), &ideal(&[(1, 1), (2, 0)])), Ok(Some(1)));
        assert_eq!(StaircaseIdeal::colength_between(&ideal(&[(1, 1)]), &m), Err(Error::NotContained));
    }

    #[test]
    fn torsion_examples() {
        assert_eq!(engine(&[(1, 1), (2, 0)], M).torsion(), Ok((ideal(&[(1, 0)]), 1)));
        assert_eq!(engine(&[(0, 3)], M).torsion(), Ok((ideal(&[(0, 3)]), 0)));
        assert_eq!(engine(&[(1, 2), (2, 0)], M).torsion().unwrap().1, 2);
    }

    #[test]
    fn quotient_examples() {
        let q = engine(&[(1, 1), (2, 0)], M).quotient_by_torsion().unwrap();
        assert_eq!(q.ring_ideal, ideal(&[(1, 0)]));
        let q = engine(&[(0, 3)], M).quotient_by_torsion().unwrap();
        assert_eq!(q.ring_ideal, ideal(&[(0, 3)]));
        for (s, u, v) in [(1, 1, 1), (2, 1, 2), (0, 2, 3)] {
            let q = StaircaseEngine::new(&StaircaseInstance::family(s, u, v).unwrap())
                .quotient_by_torsion()
                .unwrap();
            assert_eq!(q.ring_ideal, ideal(&[(s, u)]));
        }
    }

    #[test]
    fn hilbert_samuel_examples() {
        let mut g = engine(&[(1, 1), (2, 0)], M);
        assert_eq!(g.hilbert_samuel(0), Ok(1));
        assert_eq!(g.hilbert_samuel(2), Ok(4));
        let h: Vec<u64> = (0..6).map(|n| g.hilbert(n).unwrap()).collect();
        assert_eq!(h, vec![1, 2, 1, 1, 1, 1]);
        let mut g = engine(&[(0, 2)], M);
        let h: Vec<u64> = (0..5).map(|n| g.hilbert(n).unwrap()).collect();
        assert_eq!(h, vec![1, 2, 2, 2, 2]);
    }

    #[test]
    fn b_invariant_examples() {
        assert_eq!(engine(&[(1, 1), (2, 0)], M).b_invariant(), Ok(1));
        assert_eq!(engine(&[(0, 3)], &[(2, 0), (1, 1), (0, 2)]).b_invariant(), Ok(2));
        assert_eq!(engine(&[(0, 3)], &[(2, 0), (0, 2)]).b_invariant(), Ok(2));
        // y ∉ m^2 + (y^3)
        assert_eq!(engine(&[(0, 3)], &[(3, 0), (0, 1)]).b_invariant(), Ok(1));
    }

    #[test]
    fn k_profile_examples() {
        assert_eq!(engine(&[(0, 2)], M).k_profile(4), Ok(vec![0; 4]));
        assert_eq!(engine(&[(1, 1), (2, 0)], M).k_profile(4), Ok(vec![0, 1, 0, 0]));
        let mut g = StaircaseEngine::new(&StaircaseInstance::family(1, 1, 2).unwrap());
        let ell = g.torsion().unwrap().1;
        assert_eq!(g.k_profile(12).unwrap().iter().sum::<u64>(), ell);
    }

    #[test]
    fn h0_survives_a_stalled_colon_chain() {
        // (m^3 + J) : m^t stays m^2 for t = 1..5 before y enters at t = 6
        let mut g = engine(&[(0, 2), (6, 1)], M);
        assert_eq!(g.ratliff_rush_colon(1, 5), ideal(M).power(2));
        assert!(g.ratliff_rush_colon(1, 6).contains((0, 1)));
        assert_eq!(g.h0_profile(8, 7), Ok(vec![0, 1, 1, 1, 1, 1, 1, 0]));
    }

    #[test]
    fn h0_profile_examples() {
        assert_eq!(engine(&[(1, 1), (2, 0)], M).h0_profile(4, 4), Ok(vec![0, 1, 0, 0]));
        assert_eq!(engine(&[(0, 2)], M).h0_profile(4, 4), Ok(vec![0; 4]));
        assert_eq!(engine(&[(0, 1)], M).h0_profile(4, 4), Ok(vec![0; 4]));
    }

    #[test]
    fn validation_reasons() {
        let bad = |j: &[Exponent], i: &[Exponent]| StaircaseInstance::new(ideal(j), ideal(i)).is_err();
        assert!(bad(&[], M));
        assert!(bad(&[(2, 0), (0, 2)], M));
        assert!(bad(&[(0, 0)], M));
        assert!(bad(&[(1, 1)], &[(1, 0)]));
        assert!(bad(&[(1, 1)], &[(0, 0)]));
        assert!(StaircaseInstance::family(0, 0, 1).is_err());
        assert!(StaircaseInstance::family(0, 1, 1).is_ok());
    }

    #[test]
    fn display() {
        assert_eq!(ideal(&[(1, 1), (2, 0)]).to_string(), "(xy, x^2)");
        assert_eq!(ideal(&[(1, 1), (2, 0)]).to_text(), "1 1 ; 2 0");
    }
}
