use dirac1d_core::analytic::{dirac_residual, lowest_levels, normalize, standard_grid, BoundState, EnergySign};
use dirac1d_core::oracle::match_common_levels;
use dirac1d_core::{classify_case, effective_params, CaseClass, PhysicalParams, PotentialParams};
use proptest::prelude::*;

fn bound_point() -> impl Strategy<Value = (f64, f64)> {
    (0.5f64..6.0, 0.05f64..8.0, any::<bool>()).prop_map(|(q, v0, flip)| if flip { (-q, -v0) } else { (q, v0) })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn levels_stay_below_threshold_and_increase((q, v0) in bound_point()) {
        let phys = PhysicalParams::default();
        let p = PotentialParams::new(q, v0).unwrap();
        let m_eff = effective_params(&phys, &p).unwrap().m_eff;
        let levels = lowest_levels(&phys, &p, 8);
        prop_assert_eq!(levels.len(), 8);
        for w in levels.windows(2) {
            prop_assert!(w[0].e_abs < w[1].e_abs);
        }
        prop_assert!(levels.iter().all(|s| s.e_abs > 0.0 && s.e_abs < m_eff));
    }

    #[test]
    fn conjugate_parameters_share_spectra((q, v0) in bound_point()) {
        let phys = PhysicalParams::default();
        let a = lowest_levels(&phys, &PotentialParams::new(q, v0).unwrap(), 5);
        let b = lowest_levels(&phys, &PotentialParams::new(-q, -v0).unwrap(), 5);
        prop_assert_eq!(a.iter().map(|s| s.e_abs).collect::<Vec<_>>(), b.iter().map(|s| s.e_abs).collect::<Vec<_>>());
    }

    #[test]
    fn sign_mismatch_never_binds(q in 0.01f64..6.0, v0 in 0.01f64..8.0) {
        let p = PotentialParams::new(q, -v0).unwrap();
        prop_assert!(matches!(classify_case(&p), CaseClass::Unbound(_)));
    }

    #[test]
    fn normalized_spinors_solve_the_equation((q, v0) in bound_point(), k in 0u32..3, negative in any::<bool>()) {
        let phys = PhysicalParams::default();
        let p = PotentialParams::new(q, v0).unwrap();
        let min = classify_case(&p).min_index().unwrap();
        let s = BoundState::new(&phys, &p, min + k).unwrap();
        let sign = if negative { EnergySign::Negative } else { EnergySign::Positive };
        let spinor = normalize(&s, &phys, &p, sign).unwrap();
        prop_assert!((spinor.moments().unwrap()[0] - 1.0).abs() <= 1e-10);
        prop_assert!(dirac_residual(&spinor, &standard_grid(s.kappa)) <= 1e-8);
    }

    #[test]
    fn matching_is_symmetric(a in proptest::collection::vec(-10.0f64..-0.01, 0..8),
                             b in proptest::collection::vec(-10.0f64..-0.01, 0..8)) {
        let mut a = a;
        let mut b = b;
        a.sort_by(f64::total_cmp);
        b.sort_by(f64::total_cmp);
        let ab = match_common_levels(&a, &b, 1e-2);
        let ba = match_common_levels(&b, &a, 1e-2);
        prop_assert_eq!(ab.matched.len(), ba.matched.len());
        prop_assert!(ab.matched.iter().all(|m| m.rel_gap <= 1e-2));
    }
}
