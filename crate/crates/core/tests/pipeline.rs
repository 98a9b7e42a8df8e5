//! End-to-end use of the public API: curve invariants to divisor to ring.

use drinfeld_core::congruence::GroupSpec;
use drinfeld_core::curveinv::{assemble_invariants, parity, Parity, Preset};
use drinfeld_core::ffarith::FqParams;
use drinfeld_core::qdiv::{h0, log_canonical_divisor, presentation, QPoint};
use drinfeld_core::Error;
use num_rational::Rational64;

fn r(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

#[test]
fn gl2_invariants_to_polynomial_ring() {
    for q in [3u64, 5, 7, 9] {
        let f = FqParams::new(q).unwrap();
        let inv = assemble_invariants(Preset::Gl2A2, &f).unwrap();
        assert!(inv.is_tame(&f));
        assert_eq!(inv.cusps.count, 1);
        assert!(matches!(inv.parity, Parity::NonSquare { .. }));

        let d = log_canonical_divisor(&inv).unwrap();
        let q = q as i64;
        // -2 + (1 - 2/(q+1)) + (1 + 2/(q-1))
        assert_eq!(d.degree(), r(2, q - 1) - r(2, q + 1));
        // weight 2 holds only g, and only when q - 1 = 2
        assert_eq!(h0(&d), (q == 3) as u64);

        let ring = presentation(&d, 4 * (q as u64 + 1)).unwrap();
        let weights: Vec<u64> = ring.generators.iter().map(|g| g.weight).collect();
        assert_eq!(weights, vec![q as u64 - 1, q as u64 + 1]);
        assert!(ring.relations.is_empty());
    }
}

#[test]
fn gamma0_invariants_place_cusps_at_zero_and_infinity() {
    let f = FqParams::new(5).unwrap();
    let inv = assemble_invariants(Preset::Gamma0T2, &f).unwrap();
    assert_eq!(inv.cusps.count, 2);
    assert!(inv.elliptic_points.is_empty());
    let d = log_canonical_divisor(&inv).unwrap();
    assert_eq!(d.coeff(QPoint::Zero), r(3, 2));
    assert_eq!(d.coeff(QPoint::Infinity), r(-1, 2));
    assert_eq!(d.coeff(QPoint::One), r(0, 1));
}

#[test]
fn linear_level_groups_have_no_elliptic_witnesses() {
    let f = FqParams::new(7).unwrap();
    for s in ["gamma0:T", "gamma1:T", "gamma1:4*T+3", "gamma0:T+1"] {
        let g = GroupSpec::parse(s, &f).unwrap();
        assert_eq!(
            parity(&g, 0, &f).unwrap(),
            Parity::NoWitnessFound { bound: 0 },
            "{s}"
        );
    }
}

#[test]
fn search_box_is_bounded() {
    let f = FqParams::new(5).unwrap();
    let err = parity(&GroupSpec::full(), 5, &f).unwrap_err();
    assert!(matches!(err, Error::WorkBound(_)));
}
