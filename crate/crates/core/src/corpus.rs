//! The built-in table of worked examples with known invariants.

use std::fmt;

use serde::Serialize;

use crate::analysis::{analyze, AnalysisReport, AnalyzeOptions};
use crate::degree::Degree;
use crate::error::Result;
use crate::instance::Instance;
use crate::semigroup::SemigroupInstance;
use crate::staircase::StaircaseInstance;

/// Known values for a corpus row. `None` fields are not checked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub e0: i64,
    pub e1: i64,
    pub b: u32,
    pub p: Option<Degree>,
    pub reg: Degree,
    pub numerator: Option<Vec<i64>>,
    pub bound_main: Option<i64>,
    pub g_cm: Option<bool>,
    /// All four (depth one) or both (depth zero) characterization flags.
    pub all_flags: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusRow {
    pub name: String,
    pub instance: String,
    pub expected: Expected,
    pub computed: Expected,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusTable {
    pub rows: Vec<CorpusRow>,
}

impl CorpusTable {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }
}

/// The `(s, u, v)` grid of the staircase family with `s + u >= 1`.
pub fn family_grid() -> impl Iterator<Item = (u32, u32, u32)> {
    (0..=3).flat_map(|s| (0..=3).flat_map(move |u| (1..=3).map(move |v| (s, u, v))))
        .filter(|&(s, u, _)| s + u >= 1)
}

/// Expected invariants of the staircase family member `(s, u, v)` with
/// `I = m`.
pub fn family_expected(s: u32, u: u32, v: u32) -> Expected {
    let d = (s + u) as i64;
    let v = v as i64;
    let mut numerator = vec![1; (d + v + 1) as usize];
    for c in &mut numerator[(d + 1) as usize..] {
        *c = 0;
    }
    numerator[(d + v) as usize] = -1;
    Expected {
        e0: d,
        e1: d * (d - 1) / 2 - v,
        b: 1,
        p: Some(Degree::Finite(d + v - 1)),
        reg: Degree::Finite(d + v - 1),
        numerator: Some(numerator),
        bound_main: None,
        g_cm: None,
        all_flags: Some(true),
    }
}

fn observed(report: &AnalysisReport) -> Expected {
    let all_flags = match (&report.flags.cm_extremal, &report.flags.depth0_extremal) {
        (Some(f), _) => Some(f.i && f.ii && f.iii && f.iv),
        (None, Some(f)) => Some(f.i && f.ii),
        (None, None) => None,
    };
    Expected {
        e0: report.e0,
        e1: report.e1,
        b: report.b,
        p: Some(report.p),
        reg: report.reg,
        numerator: Some(report.numerator.clone()),
        bound_main: Some(report.bound_main),
        g_cm: Some(report.g_cm),
        all_flags,
    }
}

fn matches(expected: &Expected, computed: &Expected) -> bool {
    fn opt<T: PartialEq>(e: &Option<T>, c: &Option<T>) -> bool {
        e.is_none() || e == c
    }
    expected.e0 == computed.e0
        && expected.e1 == computed.e1
        && expected.b == computed.b
        && expected.reg == computed.reg
        && opt(&expected.p, &computed.p)
        && opt(&expected.numerator, &computed.numerator)
        && opt(&expected.bound_main, &computed.bound_main)
        && opt(&expected.g_cm, &computed.g_cm)
        && opt(&expected.all_flags, &computed.all_flags)
}

fn semigroup_row(name: &str, sgen: &[u64], igen: &[u64], expected: Expected) -> Result<(String, Instance, Expected)> {
    let inst = Instance::Semigroup(SemigroupInstance::ring(sgen.to_vec(), igen.to_vec())?);
    Ok((name.to_string(), inst, expected))
}

/// Every corpus instance with its expected invariants.
pub fn corpus_instances() -> Result<Vec<(String, Instance, Expected)>> {
    let mut rows = vec![
        semigroup_row(
            "<3,4,5>, I=(t^3,t^4)",
            &[3, 4, 5],
            &[3, 4],
            Expected {
                e0: 3,
                e1: 2,
                b: 1,
                p: Some(1.into()),
                reg: 2.into(),
                numerator: Some(vec![2, 0, 1]),
                bound_main: Some(3),
                g_cm: Some(false),
                all_flags: Some(false),
            },
        )?,
        semigroup_row(
            "regular, I=m",
            &[1],
            &[1],
            Expected {
                e0: 1,
                e1: 0,
                b: 1,
                p: Some((-1).into()),
                reg: 0.into(),
                numerator: Some(vec![1]),
                bound_main: Some(0),
                g_cm: Some(true),
                all_flags: Some(true),
            },
        )?,
        semigroup_row(
            "<2,3>, I=m",
            &[2, 3],
            &[2, 3],
            Expected {
                e0: 2,
                e1: 1,
                b: 1,
                p: Some(0.into()),
                reg: 1.into(),
                numerator: Some(vec![1, 1]),
                bound_main: Some(1),
                g_cm: Some(true),
                all_flags: Some(true),
            },
        )?,
        semigroup_row(
            "<3,4,5>, I=m",
            &[3, 4, 5],
            &[3, 4, 5],
            Expected {
                e0: 3,
                e1: 2,
                b: 1,
                p: Some(0.into()),
                reg: 1.into(),
                numerator: Some(vec![1, 2]),
                bound_main: Some(3),
                g_cm: Some(true),
                all_flags: Some(false),
            },
        )?,
    ];
    for (s, u, v) in family_grid() {
        let inst = Instance::Bivariate(StaircaseInstance::family(s, u, v)?);
        rows.push((format!("staircase s={s} u={u} v={v}"), inst, family_expected(s, u, v)));
    }
    Ok(rows)
}

/// Analyzes the whole corpus. Analysis errors propagate; mismatches are
/// reported as failing rows.
pub fn run_corpus() -> Result<CorpusTable> {
    let rows = corpus_instances()?
        .into_iter()
        .map(|(name, inst, expected)| {
            let report = analyze(&inst, &AnalyzeOptions::default())?;
            let computed = observed(&report);
            let pass = matches(&expected, &computed);
            Ok(CorpusRow { name, instance: inst.to_text(), expected, computed, pass })
        })
        .collect::<Result<_>>()?;
    Ok(CorpusTable { rows })
}

fn show<T: fmt::Display>(x: &Option<T>) -> String {
    x.as_ref().map_or("-".to_string(), T::to_string)
}

impl fmt::Display for CorpusTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:<28} {:>9} {:>9} {:>5} {:>9} {:>9} {:>7} {:>7}  result",
            "instance", "e0", "e1", "b", "p", "reg", "bound", "flags"
        )?;
        for row in &self.rows {
            let (e, c) = (&row.expected, &row.computed);
            let pair = |a: String, b: String| if a == b || a == "-" { b } else { format!("{b}/{a}") };
            writeln!(
                f,
                "{:<28} {:>9} {:>9} {:>5} {:>9} {:>9} {:>7} {:>7}  {}",
                row.name,
                pair(e.e0.to_string(), c.e0.to_string()),
                pair(e.e1.to_string(), c.e1.to_string()),
                pair(e.b.to_string(), c.b.to_string()),
                pair(show(&e.p), show(&c.p)),
                pair(e.reg.to_string(), c.reg.to_string()),
                pair(show(&e.bound_main), show(&c.bound_main)),
                pair(show(&e.all_flags), show(&c.all_flags)),
                if row.pass { "PASS" } else { "FAIL" }
            )?;
        }
        let passed = self.rows.iter().filter(|r| r.pass).count();
        write!(f, "{passed}/{} rows pass", self.rows.len())
    }
}
