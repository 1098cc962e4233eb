//! Regularity bounds for `G_I(M)` in dimension one and the characterizations
//! of the extremal cases, as predicates over [`AnalysisReport`]s.
//!
//! Classifiers are pure functions of a report: they never touch an engine.
//! Each characterization asserts an equivalence; when the flags computed for
//! a report disagree, the classifier returns [`Error::TheoremViolation`].

use serde::{Deserialize, Serialize};

use crate::analysis::AnalysisReport;
use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::series::HilbertSeries;

/// `n (n - 1) / 2`; an error for negative `n`.
pub fn binom2(n: i64) -> Result<i64> {
    if n < 0 {
        return Err(Error::PreconditionViolated(format!("C({n}, 2) with negative n")));
    }
    n.checked_mul(n - 1).map(|x| x / 2).ok_or(Error::Overflow("binomial"))
}

/// `C(e0 - b + 2, 2) - e1 - 1`.
pub fn bound_main(e0: i64, e1: i64, b: u32) -> Result<i64> {
    Ok(binom2(e0 - b as i64 + 2)? - e1 - 1)
}

/// `e0 - b`, the bound for Cohen-Macaulay `M`.
pub fn bound_cm(e0: i64, b: u32) -> i64 {
    e0 - b as i64
}

/// The weaker Cohen-Macaulay bound `e0 - 1`.
pub fn linh_bound(e0: i64) -> i64 {
    e0 - 1
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RvCheck {
    pub max_e1: i64,
    pub extremal: bool,
}

/// `e1 <= C(e0 - b + 1, 2)`, with equality flagged as extremal.
pub fn rv_check(e0: i64, e1: i64, b: u32) -> Result<RvCheck> {
    let max_e1 = binom2(e0 - b as i64 + 1)?;
    Ok(RvCheck { max_e1, extremal: e1 == max_e1 })
}

fn check_b(e0: i64, b: u32) -> Result<()> {
    if b == 0 || e0 < b as i64 {
        return Err(Error::PreconditionViolated(format!("need e0 >= b >= 1, got e0 = {e0}, b = {b}")));
    }
    Ok(())
}

/// `(b + z + ... + z^(e0 - b)) / (1 - z)`.
pub fn rv_series(b: u32, e0: i64) -> Result<HilbertSeries> {
    check_b(e0, b)?;
    let mut q = vec![b as i64];
    q.extend(std::iter::repeat_n(1, (e0 - b as i64) as usize));
    Ok(HilbertSeries::from_i64(&q, 1))
}

/// `(b + z + ... + z^(e0 - b + 1) - z^D) / (1 - z)` with
/// `D = C(e0 - b + 2, 2) - e1`; requires `D > e0 - b + 1`.
pub fn depth0_extremal_series(b: u32, e0: i64, e1: i64) -> Result<HilbertSeries> {
    check_b(e0, b)?;
    let top = binom2(e0 - b as i64 + 2)? - e1;
    let ones = e0 - b as i64 + 1;
    if top <= ones {
        return Err(Error::PreconditionViolated(format!(
            "C(e0 - b + 2, 2) - e1 = {top} must exceed e0 - b + 1 = {ones}"
        )));
    }
    let mut q = vec![0i64; top as usize + 1];
    q[0] = b as i64;
    q[1..=ones as usize].fill(1);
    q[top as usize] = -1;
    Ok(HilbertSeries::from_i64(&q, 1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CmExtremalFlags {
    pub i: bool,
    pub ii: bool,
    pub iii: bool,
    pub iv: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Depth0ExtremalFlags {
    pub i: bool,
    pub ii: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CmGradedFlags {
    pub a: bool,
    pub b: bool,
    pub c: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalFlags {
    pub cm_extremal: Option<CmExtremalFlags>,
    pub depth0_extremal: Option<Depth0ExtremalFlags>,
    pub rv: Option<RvCheck>,
    pub cm_graded: Option<CmGradedFlags>,
    pub reg_additive: Option<bool>,
}

fn all_equal(flags: &[bool]) -> bool {
    flags.windows(2).all(|w| w[0] == w[1])
}

fn check_b_maximal(report: &AnalysisReport, fired: bool, theorem: &str) -> Result<()> {
    if fired && !report.b_maximal {
        return Err(Error::TheoremViolation(format!(
            "{theorem} holds at b = {} but the maximal b is {}",
            report.classifier_b, report.b
        )));
    }
    Ok(())
}

/// Four equivalent conditions for a Cohen-Macaulay `M` to attain the bound.
pub fn cm_extremal_classify(report: &AnalysisReport) -> Result<CmExtremalFlags> {
    if report.depth_m != 1 {
        return Err(Error::HypothesisViolated("the CM characterization needs depth M = 1"));
    }
    let (e0, e1, b) = (report.e0, report.e1, report.classifier_b);
    let flags = CmExtremalFlags {
        i: report.reg == bound_main(e0, e1, b)?,
        ii: report.series() == rv_series(b, e0)?,
        iii: rv_check(e0, e1, b)?.extremal,
        iv: report.reg == bound_cm(e0, b) && report.g_cm,
    };
    if !all_equal(&[flags.i, flags.ii, flags.iii, flags.iv]) {
        return Err(Error::TheoremViolation(format!("CM extremal conditions disagree: {flags:?}")));
    }
    check_b_maximal(report, flags.i, "the CM characterization")?;
    Ok(flags)
}

/// Two equivalent conditions for a depth-zero `M` to attain the bound.
pub fn depth0_extremal_classify(report: &AnalysisReport) -> Result<Depth0ExtremalFlags> {
    if report.depth_m != 0 {
        return Err(Error::HypothesisViolated("the depth-zero characterization needs depth M = 0"));
    }
    let (e0, e1, b) = (report.e0, report.e1, report.classifier_b);
    let series_matches = match depth0_extremal_series(b, e0, e1) {
        Ok(s) => report.series() == s,
        Err(Error::PreconditionViolated(_)) => false,
        Err(e) => return Err(e),
    };
    let flags = Depth0ExtremalFlags { i: report.reg == bound_main(e0, e1, b)?, ii: series_matches };
    if flags.i != flags.ii {
        return Err(Error::TheoremViolation(format!("depth-zero extremal conditions disagree: {flags:?}")));
    }
    check_b_maximal(report, flags.i, "the depth-zero characterization")?;
    Ok(flags)
}

/// Whether `reg G_I(M) = reg G_I(M/L) + l(L)`, after checking that this holds
/// exactly when the `K`-profile is a string of ones in degrees
/// `reg G_I(M/L) + 1 ..= reg G_I(M/L) + l(L)`.
pub fn reg_additivity_check(report: &AnalysisReport, quotient: &AnalysisReport, k_profile: &[u64]) -> Result<bool> {
    let qreg = quotient
        .reg
        .finite()
        .ok_or_else(|| Error::PreconditionViolated("quotient regularity is -inf".into()))?;
    let ell = report.ell_l as i64;
    let additive = report.reg == qreg + ell;
    if k_profile.len() as i64 <= qreg + ell {
        return Err(Error::PreconditionViolated("K-profile window too short".into()));
    }
    let string_of_ones = k_profile.iter().enumerate().all(|(t, &k)| {
        let t = t as i64;
        k == u64::from(t > qreg && t <= qreg + ell)
    });
    if additive != string_of_ones {
        return Err(Error::TheoremViolation(format!(
            "reg additivity ({additive}) and K-profile shape ({string_of_ones}) disagree"
        )));
    }
    Ok(additive)
}

/// Three equivalent conditions for a Cohen-Macaulay `G` generated in degree
/// 0 to have regularity `e0 - h(0)`.
pub fn cm_graded_classify(report: &AnalysisReport) -> Result<CmGradedFlags> {
    if !report.g_cm {
        return Err(Error::HypothesisViolated("needs G_I(M) Cohen-Macaulay"));
    }
    let e0 = report.e0;
    let rho = report.h.first().copied().unwrap_or(0) as i64;
    let window = report.h.len() as i64;
    let top = e0 - rho;
    // h(t) = e0 past the window.
    let shape = (1..window.max(top + 1)).all(|t| {
        let h = if t < window { report.h[t as usize] as i64 } else { e0 };
        if t < top { h == t + rho } else { h == e0 }
    });
    let flags = CmGradedFlags { a: report.reg == top, b: shape, c: report.p == top - 1 };
    if !all_equal(&[flags.a, flags.b, flags.c]) {
        return Err(Error::TheoremViolation(format!("CM regularity conditions disagree: {flags:?}")));
    }
    Ok(flags)
}

impl AnalysisReport {
    /// Whether `p(G) <= reg(G) - 1`.
    pub fn postulation_below_reg(&self) -> bool {
        self.p < self.reg
    }

    /// `a0 <= a1 - 1`, vacuous when `H^0 = 0`.
    pub fn hoa_inequality(&self) -> bool {
        match (self.a0, self.a1) {
            (Degree::NegInfinity, _) => true,
            (Degree::Finite(a0), Degree::Finite(a1)) => a0 < a1,
            (Degree::Finite(_), Degree::NegInfinity) => false,
        }
    }
}
