use num_bigint::BigInt;

use qgonal::divisors::{lambert_series_sigma_prime, sigma, sigma_prime, DivisorTable};
use qgonal::identities::{
    rec_p15_p45, rec_p25_p35, rec_pprime, rec_q_doubled_pentagonal, rec_q_halved_pentagonal,
    sigma_from_pprime, sigma_recurrence, verify_all, IdentityId, IdentityParams,
};
use qgonal::partitions::{build_table, PartitionFamily};
use qgonal::verify_identity;

#[test]
fn recurrences_reproduce_tables() {
    let n_max = 500;
    let p = build_table(PartitionFamily::Unrestricted, n_max).unwrap();
    let p25 = build_table(PartitionFamily::P25P35, n_max).unwrap();
    let p15 = build_table(PartitionFamily::P15P45, n_max).unwrap();
    let q = build_table(PartitionFamily::Distinct, n_max).unwrap();
    for n in 0..=n_max as u64 {
        let i = n as usize;
        assert_eq!(
            rec_p25_p35(n, &p).unwrap(),
            p25.values()[i],
            "p25p35 n = {n}"
        );
        assert_eq!(
            rec_p15_p45(n, &p15).unwrap(),
            p15.values()[i],
            "p15p45 n = {n}"
        );
        assert_eq!(
            rec_q_doubled_pentagonal(n, &q).unwrap(),
            q.values()[i],
            "q n = {n}"
        );
        assert_eq!(
            rec_q_halved_pentagonal(n, &q).unwrap(),
            q.values()[i],
            "q n = {n}"
        );
    }
    for m in 3..=8 {
        let t = build_table(PartitionFamily::PPrime { m }, n_max).unwrap();
        for n in 1..=n_max as u64 {
            assert_eq!(
                rec_pprime(m, n, &t).unwrap(),
                t.values()[n as usize],
                "m = {m}, n = {n}"
            );
        }
    }
}

#[test]
fn recurrences_reject_wrong_tables() {
    let p = build_table(PartitionFamily::Unrestricted, 20).unwrap();
    assert!(rec_p15_p45(5, &p).is_err());
    assert!(rec_q_doubled_pentagonal(5, &p).is_err());
    let short = build_table(PartitionFamily::Unrestricted, 5).unwrap();
    assert!(rec_p25_p35(10, &short).is_err());
}

#[test]
fn three_routes_to_sigma_prime_agree() {
    let n_max = 300;
    for m in 3..=8 {
        let pprime = build_table(PartitionFamily::PPrime { m }, n_max).unwrap();
        let table = DivisorTable::build(m, n_max).unwrap();
        let lambert = lambert_series_sigma_prime(m, n_max).unwrap();
        for n in 1..=n_max as u64 {
            let direct = sigma_prime(m, n).unwrap();
            assert_eq!(
                sigma_from_pprime(m, n, &pprime).unwrap(),
                direct,
                "m = {m}, n = {n}"
            );
            assert_eq!(
                sigma_recurrence(m, n, &table).unwrap(),
                direct,
                "m = {m}, n = {n}"
            );
            assert_eq!(lambert.coeffs()[n as usize], direct, "m = {m}, n = {n}");
        }
    }
}

#[test]
fn m3_gives_classical_partition_identity() {
    let p = build_table(PartitionFamily::Unrestricted, 300).unwrap();
    for n in 1..=300usize {
        let conv: BigInt = (1..=n)
            .map(|k| sigma(k as u64).unwrap() * &p.values()[n - k])
            .sum();
        assert_eq!(BigInt::from(n) * &p.values()[n], conv, "n = {n}");
    }
}

#[test]
fn every_identity_verifies_at_moderate_order() {
    for id in IdentityId::ALL {
        let params = match id.param_kind() {
            qgonal::identities::ParamKind::G => IdentityParams::g(9),
            qgonal::identities::ParamKind::M => IdentityParams::m(5),
            qgonal::identities::ParamKind::None => IdentityParams::default(),
        };
        let report = verify_identity(id, params, 120).unwrap();
        assert!(
            report.is_verified(),
            "{id} failed: {:?}",
            report.first_mismatch
        );
    }
}

#[test]
fn missing_parameters_are_errors() {
    assert!(verify_identity(IdentityId::Theorem1, IdentityParams::default(), 10).is_err());
    assert!(verify_identity(IdentityId::SigmaRec, IdentityParams::default(), 10).is_err());
    assert!(verify_identity(IdentityId::Theorem1, IdentityParams::g(4), 10).is_err());
    assert!(verify_identity(IdentityId::PPrimeRec, IdentityParams::m(2), 10).is_err());
}

#[test]
fn bulk_verification_is_deterministic() {
    let serial = verify_all(150, 1).unwrap();
    let parallel = verify_all(150, 4).unwrap();
    assert_eq!(serial, parallel);
    assert!(serial.iter().all(|r| r.is_verified()));
}
