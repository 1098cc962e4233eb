//! The engines stop their colon chains at proven points; here the profile is
//! recomputed by enumeration with a much larger colon exponent.

use cmreg::explore::generate;
use cmreg::oracle::naive_h0_profile;
use cmreg::{analyze, AnalyzeOptions, Instance};

fn small(inst: &Instance) -> bool {
    match inst {
        Instance::Semigroup(s) => s.sgen.iter().max() <= Some(&15) && s.igen.iter().max() <= Some(&30),
        Instance::Bivariate(_) => true,
    }
}

#[test]
fn h0_matches_enumeration_with_large_exponent() {
    let mut checked = 0;
    for inst in generate(400, 11, None).into_iter().filter(small).take(60) {
        let report = analyze(&inst, &AnalyzeOptions::default()).unwrap();
        let window = report.h.len().min(12);
        let naive = naive_h0_profile(&inst, window, 2 * window + 3);
        assert_eq!(report.h0[..window], naive[..], "{}", inst.to_text());
        checked += 1;
    }
    assert_eq!(checked, 60);
}

#[test]
fn stalled_chain_instance() {
    let inst = cmreg::parse_instance("kind: bivariate\nring_ideal: 0 2 ; 6 1\nideal: 1 0 ; 0 1\n").unwrap();
    let report = analyze(&inst, &AnalyzeOptions::default()).unwrap();
    assert_eq!(report.h0[..8], [0, 1, 1, 1, 1, 1, 1, 0]);
    assert_eq!(report.h0[..8], naive_h0_profile(&inst, 8, 20)[..]);
    assert_eq!((report.ell_l, report.depth_m), (6, 0));
}
