//! The full pipeline from an instance to an [`AnalysisReport`]: Hilbert
//! data, series, Hilbert coefficients, `b`, the `H^0` profile, local
//! cohomology, bounds and extremal classification, plus the torsion-quotient
//! sub-analysis for depth-zero modules.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::cohomology::{build_profile, GradedProfile};
use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::semigroup::SemigroupEngine;
use crate::series::{HilbertData, HilbertSeries};
use crate::staircase::StaircaseEngine;
use crate::theorems::{self, ExtremalFlags};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Semigroup,
    Bivariate,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AnalyzeOptions {
    /// Minimum number of degrees reported in the `h`, `H^0`, `H^1` profiles.
    pub window: Option<usize>,
    /// Evaluate the characterizations at this `b` instead of the maximal one.
    pub declared_b: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub kind: Family,
    pub input: String,
    pub e0: i64,
    pub e1: i64,
    /// Maximal `t` with `IM ⊆ m^t M`.
    pub b: u32,
    /// The `b` the characterizations were evaluated at.
    pub classifier_b: u32,
    pub b_maximal: bool,
    #[serde(rename = "ellL")]
    pub ell_l: u64,
    #[serde(rename = "depthM")]
    pub depth_m: u8,
    pub h: Vec<u64>,
    pub h0: Vec<u64>,
    /// Starts at degree -1.
    pub h1: Vec<u64>,
    pub k_profile: Option<Vec<u64>>,
    pub p: Degree,
    pub a0: Degree,
    pub a1: Degree,
    pub reg: Degree,
    pub reg1: Degree,
    pub g_cm: bool,
    pub bound_main: i64,
    pub bound_cm: Option<i64>,
    pub linh_bound: Option<i64>,
    pub numerator: Vec<i64>,
    pub flags: ExtremalFlags,
    pub quotient: Option<Box<AnalysisReport>>,
}

impl AnalysisReport {
    pub fn series(&self) -> HilbertSeries {
        HilbertSeries::from_i64(&self.numerator, 1)
    }

    /// `bound_main - reg`.
    pub fn slack(&self) -> i64 {
        self.bound_main - self.reg.finite().unwrap_or(i64::MIN / 2)
    }

    /// A report built from Hilbert data alone, with no engine behind it and
    /// no classification. `b` is taken as maximal.
    pub fn synthetic(family: Family, h: &[u64], h0: &[u64], b: u32, depth_m: u8) -> Result<AnalysisReport> {
        let data = HilbertData::new(h.to_vec(), true);
        let series = HilbertSeries::from_data(&data, 1)?;
        let profile = build_profile(&data, h0, &series)?;
        assemble(family, String::new(), &profile, &series, b, b, depth_m, 0)
    }
}

#[allow(clippy::too_many_arguments)]
fn assemble(
    kind: Family,
    input: String,
    profile: &GradedProfile,
    series: &HilbertSeries,
    b: u32,
    classifier_b: u32,
    depth_m: u8,
    ell_l: u64,
) -> Result<AnalysisReport> {
    let (e0, e1) = (profile.e0, profile.e1);
    Ok(AnalysisReport {
        kind,
        input,
        e0,
        e1,
        b,
        classifier_b,
        b_maximal: b == classifier_b,
        ell_l,
        depth_m,
        h: profile.h.clone(),
        h0: profile.h0.clone(),
        h1: profile.h1.clone(),
        k_profile: None,
        p: profile.p,
        a0: profile.a0,
        a1: profile.a1,
        reg: profile.reg,
        reg1: profile.reg1,
        g_cm: profile.depth_positive(),
        bound_main: theorems::bound_main(e0, e1, b)?,
        bound_cm: (depth_m == 1).then(|| theorems::bound_cm(e0, b)),
        linh_bound: (depth_m == 1).then(|| theorems::linh_bound(e0)),
        numerator: series.numerator_i64()?,
        flags: ExtremalFlags::default(),
        quotient: None,
    })
}

enum Engine {
    Semigroup(SemigroupEngine),
    Staircase(StaircaseEngine),
}

impl Engine {
    fn new(instance: &Instance) -> Result<Engine> {
        Ok(match instance {
            Instance::Semigroup(s) => Engine::Semigroup(SemigroupEngine::new(s)?),
            Instance::Bivariate(s) => Engine::Staircase(StaircaseEngine::new(s)),
        })
    }

    fn family(&self) -> Family {
        match self {
            Engine::Semigroup(_) => Family::Semigroup,
            Engine::Staircase(_) => Family::Bivariate,
        }
    }

    fn hilbert(&mut self, n: usize) -> Result<u64> {
        match self {
            Engine::Semigroup(g) => g.hilbert(n),
            Engine::Staircase(g) => g.hilbert(n),
        }
    }

    fn b_invariant(&mut self) -> Result<u32> {
        match self {
            Engine::Semigroup(g) => g.b_invariant(),
            Engine::Staircase(g) => g.b_invariant(),
        }
    }

    /// `top` bounds the degrees where `H^0` can live.
    fn h0_profile(&mut self, window: usize, top: usize) -> Result<Vec<u64>> {
        match self {
            Engine::Semigroup(g) => g.h0_profile(window),
            Engine::Staircase(g) => g.h0_profile(window, top),
        }
    }

    fn torsion_length(&mut self) -> Result<u64> {
        match self {
            Engine::Semigroup(_) => Ok(0),
            Engine::Staircase(g) => Ok(g.torsion()?.1),
        }
    }

    /// Number of degrees past which `h = e0` and `H^0 = 0` are guaranteed.
    ///
    /// For value-set modules, `H^0_n = 0` once `n >= r - 1` and `h(n) = e0`
    /// once `n >= r` (`r` the reduction number w.r.t. the least-value
    /// generator). For the bivariate family `H^0` vanishes above the
    /// regularity, which is at most `bound_main`.
    fn window(&mut self, p: Degree, bound_main: i64) -> Result<usize> {
        let past_p = p.finite().map_or(0, |p| p + 2);
        let w = match self {
            Engine::Semigroup(g) => past_p.max(g.reduction_number()? as i64 + 1),
            Engine::Staircase(_) => past_p.max(bound_main + 2),
        };
        Ok(w.max(2) as usize)
    }
}

const REFIT_ATTEMPTS: usize = 6;

pub fn analyze(instance: &Instance, options: &AnalyzeOptions) -> Result<AnalysisReport> {
    let mut engine = Engine::new(instance)?;
    let b = engine.b_invariant()?;
    let classifier_b = match options.declared_b {
        None => b,
        Some(d) if d >= 1 && d <= b => d,
        Some(d) => {
            return Err(Error::PreconditionViolated(format!(
                "declared b = {d} does not satisfy IM ⊆ m^b M (maximal b is {b})"
            )))
        }
    };

    let mut min_len = 0;
    let (data, series, window, bound) = 'fit: {
        for _ in 0..REFIT_ATTEMPTS {
            let mut data = HilbertData::stabilize(1, min_len, |n| engine.hilbert(n))?;
            let series = HilbertSeries::from_data(&data, 1)?;
            let e = series.hilbert_coefficients(2);
            let (e0, e1) = (to_i64(&e[0], "e0")?, to_i64(&e[1], "e1")?);
            let bound = theorems::bound_main(e0, e1, b)?;
            let window = engine.window(series.postulation(), bound)?.max(options.window.unwrap_or(0));
            data.extend_to(window, |n| engine.hilbert(n))?;
            let consistent = data
                .values
                .iter()
                .enumerate()
                .all(|(t, &h)| series.expand(t as i64) == BigInt::from(h));
            if consistent {
                data.values.truncate(window);
                break 'fit (data, series, window, bound);
            }
            min_len = 2 * data.len();
        }
        return Err(Error::NotStabilized(format!(
            "series refit did not converge after {REFIT_ATTEMPTS} attempts"
        )));
    };

    let h0 = engine.h0_profile(window, bound.max(0) as usize)?;
    let profile = build_profile(&data, &h0, &series)?;
    let ell_l = engine.torsion_length()?;
    let depth_m = if ell_l > 0 { 0 } else { 1 };
    let mut report = assemble(
        engine.family(),
        instance.to_text(),
        &profile,
        &series,
        b,
        classifier_b,
        depth_m,
        ell_l,
    )?;

    if depth_m == 1 {
        report.flags.rv = Some(theorems::rv_check(report.e0, report.e1, classifier_b)?);
        report.flags.cm_extremal = Some(theorems::cm_extremal_classify(&report)?);
        if report.g_cm {
            report.flags.cm_graded = Some(theorems::cm_graded_classify(&report)?);
        }
    } else {
        let Engine::Staircase(stair) = &mut engine else {
            unreachable!("value-set modules are torsion-free")
        };
        report.flags.depth0_extremal = Some(theorems::depth0_extremal_classify(&report)?);
        let quotient_instance = Instance::Bivariate(stair.quotient_by_torsion()?);
        let quotient = analyze(&quotient_instance, &AnalyzeOptions::default())?;
        let qreg = quotient.reg.finite().unwrap_or(0);
        let k_window = window.max((qreg + ell_l as i64 + 2) as usize);
        let k_profile = stair.k_profile(k_window)?;
        report.flags.reg_additive = Some(theorems::reg_additivity_check(&report, &quotient, &k_profile)?);
        report.k_profile = Some(k_profile);
        report.quotient = Some(Box::new(quotient));
    }
    Ok(report)
}

fn to_i64(x: &BigInt, what: &'static str) -> Result<i64> {
    num_traits::ToPrimitive::to_i64(x).ok_or(Error::Overflow(what))
}
