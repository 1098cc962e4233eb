//! Acceptance run: one line per criterion, nonzero exit if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use cmreg::analysis::Family;
use cmreg::corpus::{family_expected, family_grid};
use cmreg::explore::{explore, generate};
use cmreg::oracle::oracle_check;
use cmreg::semigroup::{SemigroupEngine, SemigroupInstance};
use cmreg::staircase::StaircaseInstance;
use cmreg::theorems::binom2;
use cmreg::{analyze, AnalysisReport, AnalyzeOptions, Degree, HilbertData, HilbertSeries, Instance};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn report(inst: Instance) -> AnalysisReport {
    analyze(&inst, &AnalyzeOptions::default()).unwrap()
}

fn semigroup(sgen: &[u64], igen: &[u64]) -> Instance {
    Instance::Semigroup(SemigroupInstance::ring(sgen.to_vec(), igen.to_vec()).unwrap())
}

fn golden_value_set_example() {
    let r = report(semigroup(&[3, 4, 5], &[3, 4]));
    assert_eq!(r.numerator, vec![2, 0, 1]);
    assert_eq!((r.e0, r.e1, r.b), (3, 2, 1));
    assert_eq!((r.p, r.reg), (Degree::Finite(1), Degree::Finite(2)));
    assert_eq!(r.bound_main, 3);
    let f = r.flags.cm_extremal.unwrap();
    assert!(!f.i && !f.ii && !f.iii && !f.iv);
    assert!(!r.g_cm);
    assert!(r.h0.iter().any(|&x| x > 0));
}

fn staircase_family() {
    let mut rows = 0;
    for (s, u, v) in family_grid() {
        let r = report(Instance::Bivariate(StaircaseInstance::family(s, u, v).unwrap()));
        let want = family_expected(s, u, v);
        let d = (s + u) as i64;
        assert_eq!(r.e0, d);
        assert_eq!(r.e1, d * (d - 1) / 2 - v as i64);
        assert_eq!(r.reg, Degree::Finite(d + v as i64 - 1));
        assert_eq!(Some(r.numerator.clone()), want.numerator, "s={s} u={u} v={v}");
        let f = r.flags.depth0_extremal.unwrap();
        assert!(f.i && f.ii);
        assert_eq!(r.b, 1);
        rows += 1;
    }
    assert_eq!(rows, 45);
}

fn extremal_cm_witness() {
    let inst = semigroup(&[2, 3], &[2, 3]);
    // lengths l(A/m^{n+1}) = 1, 3, 5, ... by enumeration
    assert!(oracle_check(&inst, 8).unwrap());
    let Instance::Semigroup(s) = &inst else { unreachable!() };
    let mut engine = SemigroupEngine::new(s).unwrap();
    let lengths: Vec<u64> = (0..5).map(|n| engine.hilbert_samuel(n).unwrap()).collect();
    assert_eq!(lengths, vec![1, 3, 5, 7, 9]);
    let r = report(inst);
    assert_eq!((r.e0, r.e1), (2, 1));
    assert_eq!(r.e1, binom2(2).unwrap());
    assert_eq!(r.reg, Degree::Finite(1));
    assert_eq!(r.reg, r.e0 - r.b as i64);
    assert_eq!(r.reg, r.bound_main);
    let f = r.flags.cm_extremal.unwrap();
    assert!(f.i && f.ii && f.iii && f.iv);
    assert!(r.g_cm);
}

fn semigroup_properties() {
    let s = explore(500, 2024, Some(Family::Semigroup)).unwrap();
    assert_eq!(s.instances, 500);
}

fn bivariate_properties() {
    let s = explore(500, 2024, Some(Family::Bivariate)).unwrap();
    assert_eq!(s.instances, 500);
    assert!(s.depth_zero > 0);
}

fn oracle_equivalence() {
    let instances = generate(100, 77, None);
    assert!(instances.iter().any(|i| matches!(i, Instance::Semigroup(_))));
    assert!(instances.iter().any(|i| matches!(i, Instance::Bivariate(_))));
    for inst in &instances {
        assert_eq!(oracle_check(inst, 8), Ok(true), "{}", inst.to_text());
    }
}

fn series_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let dim = rng.gen_range(0..=1u32);
        let e0 = if dim == 0 { 0 } else { rng.gen_range(1..=25u64) };
        let prefix: Vec<u64> = (0..rng.gen_range(0..=12)).map(|_| rng.gen_range(0..=40)).collect();
        let h = |n: usize| Ok(prefix.get(n).copied().unwrap_or(e0));
        let data = HilbertData::stabilize(dim, 0, h).unwrap();
        assert!(data.stabilized);
        let series = HilbertSeries::from_data(&data, dim).unwrap();
        for (t, &v) in data.values.iter().enumerate() {
            assert_eq!(series.expand(t as i64), BigInt::from(v));
        }
        if dim == 1 && !series.is_zero() {
            let e = series.hilbert_coefficients(2);
            let p = series.postulation().finite().unwrap_or(-1);
            let sum: i64 = (0..=p).map(|t| e0 as i64 - data.get(t) as i64).sum();
            assert_eq!((e[0].clone(), e[1].clone()), (BigInt::from(e0), BigInt::from(sum)));
        }
    }
}

fn main() -> ExitCode {
    let criteria: [(&str, fn(), Duration); 7] = [
        ("golden value-set example <3,4,5>, I=(t^3,t^4)", golden_value_set_example, Duration::from_secs(1)),
        ("staircase family, 45 members", staircase_family, Duration::from_secs(5)),
        ("extremal CM witness <2,3>, I=m", extremal_cm_witness, Duration::from_secs(1)),
        ("semigroup property suite, 500 instances", semigroup_properties, Duration::from_secs(60)),
        ("bivariate property suite, 500 instances", bivariate_properties, Duration::from_secs(120)),
        ("oracle equivalence, 100 instances", oracle_equivalence, Duration::from_secs(60)),
        ("series round trips, 200 profiles", series_round_trips, Duration::from_secs(5)),
    ];
    let mut failed = 0;
    for (k, (name, run, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run));
        let elapsed = start.elapsed();
        let status = match outcome {
            Ok(()) if elapsed <= limit => "PASS".to_string(),
            Ok(()) => format!("FAIL (over the {}s limit)", limit.as_secs()),
            Err(_) => "FAIL".to_string(),
        };
        if status != "PASS" {
            failed += 1;
        }
        println!("criterion {}: {status}  {name}  [{:.2}s]", k + 1, elapsed.as_secs_f64());
    }
    if failed == 0 {
        println!("acceptance: all 7 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of 7 criteria fail");
        ExitCode::FAILURE
    }
}
