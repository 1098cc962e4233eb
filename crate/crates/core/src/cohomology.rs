//! Local cohomology lengths of graded modules of dimension at most one.
//!
//! In dimension one the Grothendieck-Serre formula
//! `h(t) - p(t) = l(H^0_t) - l(H^1_t)` determines `H^1` degreewise from the
//! Hilbert function, the (constant) Hilbert polynomial `e0` and `H^0`.

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::series::{HilbertData, HilbertSeries};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedProfile {
    pub dim: u32,
    /// `h(t)` for `t = 0..window`.
    pub h: Vec<u64>,
    /// `l(H^0_t)` for `t = 0..window`.
    pub h0: Vec<u64>,
    /// `l(H^1_t)` for `t = -1..window`; index 0 is degree `-1`. Empty in
    /// dimension 0.
    pub h1: Vec<u64>,
    pub p: Degree,
    pub a0: Degree,
    pub a1: Degree,
    pub reg: Degree,
    pub reg1: Degree,
    pub gen_degree: i64,
    pub e0: i64,
    pub e1: i64,
}

impl GradedProfile {
    /// `H^0` vanishes in every degree.
    pub fn depth_positive(&self) -> bool {
        self.h0.iter().all(|&x| x == 0)
    }

    pub fn h(&self, t: i64) -> u64 {
        if t < 0 { 0 } else { self.h.get(t as usize).copied().unwrap_or(self.e0 as u64) }
    }

    pub fn window(&self) -> usize {
        self.h.len()
    }
}

/// Assembles the cohomology profile of a module with Hilbert data `h`,
/// `H^0` lengths `h0` (same window) and Hilbert series `series`.
pub fn build_profile(h: &HilbertData, h0: &[u64], series: &HilbertSeries) -> Result<GradedProfile> {
    let window = h.len();
    if h0.len() != window || window == 0 {
        return Err(Error::PreconditionViolated(format!(
            "H^0 window {} does not match Hilbert window {window}",
            h0.len()
        )));
    }
    let coeffs = series.hilbert_coefficients(2);
    let e0 = coeffs[0].to_i64().ok_or(Error::Overflow("e0"))?;
    let e1 = coeffs[1].to_i64().ok_or(Error::Overflow("e1"))?;
    let p = series.postulation();
    let a0 = Degree::last_where(h0, 0, |&x| x > 0);
    match series.dim() {
        0 => {
            let reg = reg_dim0(h);
            Ok(GradedProfile {
                dim: 0,
                h: h.values.clone(),
                h0: h0.to_vec(),
                h1: Vec::new(),
                p,
                a0,
                a1: Degree::NegInfinity,
                reg,
                reg1: Degree::NegInfinity,
                gen_degree: 0,
                e0,
                e1,
            })
        }
        1 => {
            let mut h1 = Vec::with_capacity(window + 1);
            h1.push(e0 as u64);
            for (t, (&z, &v)) in h0.iter().zip(&h.values).enumerate() {
                let value = z as i64 - v as i64 + e0;
                if value < 0 {
                    return Err(Error::NegativeCohomology { degree: t as i64, value });
                }
                h1.push(value as u64);
            }
            if h0[window - 1] != 0 || h1[window] != 0 {
                return Err(Error::NotStabilized(format!(
                    "local cohomology does not vanish at the window end (degree {})",
                    window - 1
                )));
            }
            let a1 = Degree::last_where(&h1, -1, |&x| x > 0);
            let reg1 = Degree::Finite(a1.finite().expect("h1[-1] = e0 > 0") + 1);
            Ok(GradedProfile {
                dim: 1,
                h: h.values.clone(),
                h0: h0.to_vec(),
                h1,
                p,
                a0,
                a1,
                reg: a0.max(reg1),
                reg1,
                gen_degree: 0,
                e0,
                e1,
            })
        }
        r => Err(Error::PreconditionViolated(format!("dimension {r} profiles are not supported"))),
    }
}

/// Top nonvanishing degree of a finite-length graded module.
pub fn reg_dim0(h: &HilbertData) -> Degree {
    Degree::last_where(&h.values, 0, |&x| x != 0)
}

/// `p <= reg` when `depth E = 0` and `p <= reg - 1` when `depth E > 0`.
pub fn postulation_vs_reg(profile: &GradedProfile, depth_positive: bool) -> bool {
    if depth_positive {
        profile.p < profile.reg
    } else {
        profile.p <= profile.reg
    }
}
