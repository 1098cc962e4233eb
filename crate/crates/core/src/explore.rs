//! Seeded random instances run through the full pipeline, with every
//! bound, identity and equivalence checked on each report.

use std::fmt;

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::analysis::{analyze, AnalysisReport, AnalyzeOptions, Family};
use crate::cohomology::{build_profile, postulation_vs_reg};
use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::semigroup::{SemigroupEngine, SemigroupInstance, ValueSet};
use crate::series::HilbertData;
use crate::staircase::{StaircaseEngine, StaircaseIdeal, StaircaseInstance};
use crate::theorems;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ExploreSummary {
    pub family: Option<Family>,
    pub seed: u64,
    pub instances: usize,
    pub depth_zero: usize,
    pub g_cm: usize,
    pub cm_extremal_hits: usize,
    pub depth0_extremal_hits: usize,
    pub rv_extremal: usize,
    pub cm_graded_hits: usize,
    pub reg_additive_count: usize,
    pub max_slack: i64,
    pub max_slack_instance: String,
}

impl fmt::Display for ExploreSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let family = match self.family {
            Some(Family::Semigroup) => "semigroup",
            Some(Family::Bivariate) => "bivariate",
            None => "mixed",
        };
        writeln!(f, "family {family}, seed {}: {} instances, no violations", self.seed, self.instances)?;
        writeln!(f, "  depth M = 0:          {}", self.depth_zero)?;
        writeln!(f, "  G Cohen-Macaulay:     {}", self.g_cm)?;
        writeln!(f, "  CM extremal:          {}", self.cm_extremal_hits)?;
        writeln!(f, "  depth-0 extremal:     {}", self.depth0_extremal_hits)?;
        writeln!(f, "  e1 maximal:           {}", self.rv_extremal)?;
        writeln!(f, "  reg = e0 - h(0):      {}", self.cm_graded_hits)?;
        writeln!(f, "  reg additive over L:  {}", self.reg_additive_count)?;
        write!(f, "  max slack {} at\n{}", self.max_slack, indent(&self.max_slack_instance))
    }
}

fn indent(text: &str) -> String {
    text.lines().map(|l| format!("    {l}")).collect::<Vec<_>>().join("\n")
}

pub fn random_semigroup(rng: &mut impl Rng) -> SemigroupInstance {
    loop {
        let k = rng.gen_range(2..=4);
        let mut sgen: Vec<u64> = (0..k).map(|_| rng.gen_range(2..=30)).collect();
        sgen.sort_unstable();
        sgen.dedup();
        if sgen.iter().fold(0, |g, &a| g.gcd(&a)) != 1 {
            continue;
        }
        let s = ValueSet::semigroup(&sgen).expect("gcd 1");
        let candidates: Vec<u64> = (1..=60).filter(|&x| s.contains(x)).map(|x| x as u64).collect();
        let m = rng.gen_range(1..=3);
        let mut igen: Vec<u64> = (0..m).map(|_| candidates[rng.gen_range(0..candidates.len())]).collect();
        igen.sort_unstable();
        igen.dedup();
        return SemigroupInstance::ring(sgen, igen).expect("valid by construction");
    }
}

fn nonunit_exponent(rng: &mut impl Rng, top: u32) -> (u32, u32) {
    loop {
        let e = (rng.gen_range(0..=top), rng.gen_range(0..=top));
        if e != (0, 0) {
            return e;
        }
    }
}

pub fn random_bivariate(rng: &mut impl Rng) -> StaircaseInstance {
    loop {
        let j = (0..rng.gen_range(1..=3)).map(|_| nonunit_exponent(rng, 6)).collect();
        let mut i = vec![(rng.gen_range(1..=4), 0), (0, rng.gen_range(1..=4))];
        for _ in 0..rng.gen_range(0..=2) {
            i.push(nonunit_exponent(rng, 4));
        }
        if let Ok(inst) = StaircaseInstance::new(StaircaseIdeal::new(j), StaircaseIdeal::new(i)) {
            return inst;
        }
    }
}

/// The instances `explore` would check, in serial order.
pub fn generate(count: usize, seed: u64, family: Option<Family>) -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|k| {
            let family = family.unwrap_or(if k % 2 == 0 { Family::Semigroup } else { Family::Bivariate });
            match family {
                Family::Semigroup => Instance::Semigroup(random_semigroup(&mut rng)),
                Family::Bivariate => Instance::Bivariate(random_bivariate(&mut rng)),
            }
        })
        .collect()
}

struct Checker<'a> {
    instance: &'a Instance,
}

impl Checker<'_> {
    fn require(&self, ok: bool, property: impl Into<String>) -> Result<()> {
        if ok {
            Ok(())
        } else {
            Err(Error::InvariantViolation { instance: self.instance.to_text(), property: property.into() })
        }
    }
}

/// Analyzes `instance` and checks every invariant on the report.
pub fn check_instance(instance: &Instance) -> Result<AnalysisReport> {
    let c = Checker { instance };
    let report = analyze(instance, &AnalyzeOptions::default()).map_err(|e| match e {
        Error::InvariantViolation { .. } => e,
        other => Error::InvariantViolation { instance: instance.to_text(), property: other.to_string() },
    })?;
    check_report(&c, &report)?;
    match instance {
        Instance::Semigroup(s) => check_semigroup_filtration(&c, s, report.h.len())?,
        Instance::Bivariate(s) => check_staircase_filtration(&c, s, report.h.len())?,
    }
    Ok(report)
}

fn check_report(c: &Checker, r: &AnalysisReport) -> Result<()> {
    let reg = r.reg.finite().unwrap_or(i64::MIN);
    c.require(r.e0 >= 1 && r.b >= 1, "e0 >= 1 and b >= 1")?;
    c.require(reg <= r.bound_main, format!("reg {reg} <= main bound {}", r.bound_main))?;
    c.require(r.h0.iter().enumerate().all(|(t, &x)| x == 0 || t as i64 <= r.bound_main), "H^0 vanishes past the main bound")?;

    // series identities
    let p = r.p.finite().unwrap_or(-1);
    for (t, &h) in r.h.iter().enumerate() {
        if t as i64 > p {
            c.require(h as i64 == r.e0, format!("h({t}) = e0 past the postulation number"))?;
        }
    }
    if p >= 0 {
        c.require(r.h[p as usize] as i64 != r.e0, "h(p) != e0")?;
    }
    let tail: i64 = (0..=p).map(|t| r.e0 - r.h[t as usize] as i64).sum();
    c.require(tail == r.e1, format!("e1 = sum of e0 - h(t), got {tail} vs {}", r.e1))?;

    // local cohomology
    let data = HilbertData::new(r.h.clone(), true);
    let profile = build_profile(&data, &r.h0, &r.series()).map_err(|e| Error::InvariantViolation {
        instance: c.instance.to_text(),
        property: format!("profile rebuild: {e}"),
    })?;
    c.require(profile.h1 == r.h1, "h1 reproducible from h, H^0, e0")?;
    c.require(r.h1[0] as i64 == r.e0, "h1 at degree -1 equals e0")?;
    for t in 0..r.h.len() {
        if t as i64 > p && r.h0[t] == 0 {
            c.require(r.h1[t + 1] == 0, format!("h1 vanishes in degree {t} past p"))?;
        }
    }
    c.require(postulation_vs_reg(&profile, r.g_cm), "p <= reg (depth 0) or p <= reg - 1 (depth > 0)")?;
    c.require(r.h[0] >= r.h0[0] + r.b as u64, "h(0) - H^0_0 >= b")?;

    if r.depth_m == 1 {
        check_cm(c, r)?;
    } else {
        check_depth_zero(c, r)?;
    }
    Ok(())
}

fn check_cm(c: &Checker, r: &AnalysisReport) -> Result<()> {
    let reg = r.reg.finite().unwrap_or(i64::MIN);
    c.require(r.ell_l == 0, "depth 1 means no torsion")?;
    c.require(reg <= theorems::bound_cm(r.e0, r.b), format!("reg {reg} <= e0 - b"))?;
    c.require(theorems::bound_cm(r.e0, r.b) <= theorems::linh_bound(r.e0), "e0 - b <= e0 - 1")?;
    let rv = theorems::rv_check(r.e0, r.e1, r.b).map_err(|e| Error::InvariantViolation {
        instance: c.instance.to_text(),
        property: e.to_string(),
    })?;
    c.require(r.e1 <= rv.max_e1, format!("e1 {} <= C(e0-b+1, 2) = {}", r.e1, rv.max_e1))?;
    c.require(r.hoa_inequality(), "a0 <= a1 - 1")?;
    c.require(r.postulation_below_reg(), "p <= reg - 1")?;
    c.require(r.flags.cm_extremal.is_some() && r.flags.rv.is_some(), "CM classification present")?;
    c.require(r.flags.cm_graded.is_some() == r.g_cm, "G-CM classification present exactly when G is CM")?;
    if r.g_cm {
        c.require(r.reg == r.a1.finite().map(|a| a + 1).into_degree(), "reg = a1 + 1 when G is CM")?;
        c.require(r.reg == r.p.finite().map(|p| p + 1).into_degree(), "reg = p + 1 when G is CM")?;
    }
    for d in 1..=r.b {
        let flags = theorems::cm_extremal_classify(&declared(r, d)).map_err(|e| Error::InvariantViolation {
            instance: c.instance.to_text(),
            property: format!("CM classification at b = {d}: {e}"),
        })?;
        c.require(!flags.i || d == r.b, format!("CM classification fires at non-maximal b = {d}"))?;
    }
    Ok(())
}

trait IntoDegree {
    fn into_degree(self) -> Degree;
}

impl IntoDegree for Option<i64> {
    fn into_degree(self) -> Degree {
        self.map_or(Degree::NegInfinity, Degree::Finite)
    }
}

fn check_depth_zero(c: &Checker, r: &AnalysisReport) -> Result<()> {
    let q = r.quotient.as_deref();
    c.require(q.is_some() && r.k_profile.is_some() && r.flags.reg_additive.is_some(), "depth-0 sub-analysis present")?;
    let (q, k) = (q.unwrap(), r.k_profile.as_deref().unwrap());
    c.require(r.ell_l > 0, "depth 0 means nonzero torsion")?;
    c.require(q.depth_m == 1 && q.ell_l == 0, "M/L has depth 1")?;
    c.require(q.e0 == r.e0, format!("e0(M/L) {} = e0 {}", q.e0, r.e0))?;
    c.require(q.e1 - r.e1 == r.ell_l as i64, format!("l(L) {} = e1(M/L) - e1 = {}", r.ell_l, q.e1 - r.e1))?;
    c.require(k.iter().sum::<u64>() == r.ell_l, "sum of the K-profile is l(L)")?;
    c.require(
        k.iter().enumerate().all(|(t, &x)| x <= r.h.get(t).copied().unwrap_or(r.e0 as u64)),
        "K-profile bounded by h",
    )?;
    c.require(r.flags.depth0_extremal.is_some(), "depth-0 classification present")?;
    for d in 1..=r.b {
        let flags = theorems::depth0_extremal_classify(&declared(r, d)).map_err(|e| Error::InvariantViolation {
            instance: c.instance.to_text(),
            property: format!("depth-0 classification at b = {d}: {e}"),
        })?;
        c.require(!flags.i || d == r.b, format!("depth-0 classification fires at non-maximal b = {d}"))?;
    }
    check_report(c, q)
}

fn declared(r: &AnalysisReport, d: u32) -> AnalysisReport {
    let mut copy = r.clone();
    copy.classifier_b = d;
    copy.b_maximal = d == r.b;
    copy
}

fn check_semigroup_filtration(c: &Checker, inst: &SemigroupInstance, window: usize) -> Result<()> {
    let mut engine = SemigroupEngine::new(inst)?;
    for n in 0..window {
        let next = engine.filtration(n + 1).clone();
        c.require(next.is_subset(engine.filtration(n)), format!("filtration monotone at n = {n}"))?;
    }
    Ok(())
}

fn check_staircase_filtration(c: &Checker, inst: &StaircaseInstance, window: usize) -> Result<()> {
    let mut engine = StaircaseEngine::new(inst);
    for n in 0..window {
        let next = engine.filtration(n + 1).clone();
        c.require(next.is_subset(engine.filtration(n)), format!("filtration monotone at n = {n}"))?;
    }
    Ok(())
}

/// Generates `count` seeded instances (alternating families when `family`
/// is `None`), checks them in parallel and reports the first violation in
/// serial order.
pub fn explore(count: usize, seed: u64, family: Option<Family>) -> Result<ExploreSummary> {
    let instances = generate(count, seed, family);
    let results: Vec<Result<AnalysisReport>> = instances.par_iter().map(check_instance).collect();
    let mut summary = ExploreSummary { family, seed, max_slack: i64::MIN, ..Default::default() };
    for (inst, result) in instances.iter().zip(results) {
        let r = result?;
        summary.instances += 1;
        summary.depth_zero += usize::from(r.depth_m == 0);
        summary.g_cm += usize::from(r.g_cm);
        summary.cm_extremal_hits += usize::from(r.flags.cm_extremal.is_some_and(|f| f.i));
        summary.depth0_extremal_hits += usize::from(r.flags.depth0_extremal.is_some_and(|f| f.i));
        summary.rv_extremal += usize::from(r.flags.rv.is_some_and(|f| f.extremal));
        summary.cm_graded_hits += usize::from(r.flags.cm_graded.is_some_and(|f| f.a));
        summary.reg_additive_count += usize::from(r.flags.reg_additive == Some(true));
        if r.slack() > summary.max_slack {
            summary.max_slack = r.slack();
            summary.max_slack_instance = inst.to_text();
        }
    }
    if summary.instances == 0 {
        summary.max_slack = 0;
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generation_is_deterministic() {
        assert_eq!(generate(20, 7, None), generate(20, 7, None));
        assert_ne!(generate(20, 7, None), generate(20, 8, None));
    }

    #[test]
    fn small_sweeps_pass() {
        let s = explore(40, 1, Some(Family::Semigroup)).unwrap();
        assert_eq!(s.instances, 40);
        let b = explore(40, 1, Some(Family::Bivariate)).unwrap();
        assert_eq!(b.instances, 40);
        assert_eq!(explore(40, 1, Some(Family::Bivariate)).unwrap(), b);
    }
}
