mod common;

use proptest::prelude::*;
use wpvol_core::exactpoly::VolumePoly;
use wpvol_core::store::VerifyReport;
use wpvol_core::{Engine, Error, Method, Provenance, StoreEntry, VolumeStore};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn symmetric_polys_round_trip(coeffs in proptest::collection::vec((-50i64..50, 1i64..30), 1..10)) {
        // Any symmetric even homogeneous polynomial of the right degree is a
        // valid (0, 5) entry.
        let p = common::symmetric_from_coeffs(5, 2, &coeffs);
        prop_assume!(!p.is_zero());
        let entry = StoreEntry::new(VolumePoly::new(0, 5, p).unwrap(), Provenance::Seed);
        let text = entry.to_json().unwrap();
        let back = StoreEntry::from_json(&text).unwrap();
        prop_assert_eq!(&back, &entry);
        prop_assert_eq!(back.to_json().unwrap(), text);
    }
}

fn report(store: &VolumeStore) -> VerifyReport {
    store.verify_all().unwrap()
}

#[test]
fn engine_populates_directory() {
    let dir = tempfile::tempdir().unwrap();
    let engine = Engine::new(VolumeStore::open(dir.path()).unwrap());
    let v = engine.compute(0, 5, Method::Both).unwrap();
    engine.compute(1, 3, Method::Lift).unwrap();
    drop(engine);

    let store = VolumeStore::open(dir.path()).unwrap();
    assert_eq!(store.get_with((0, 5), Provenance::Mirzakhani).unwrap().unwrap().poly, v);
    let r = report(&store);
    assert!(r.ok(), "{r:?}");
    assert!(r.entries >= 8);
    let path = dir.path().join("v_0_5.genus0_lift.json");
    let bytes = std::fs::read(&path).unwrap();
    let reparsed = StoreEntry::from_json(std::str::from_utf8(&bytes).unwrap()).unwrap();
    assert_eq!(reparsed.to_json().unwrap().as_bytes(), &bytes[..]);
}

#[test]
fn corruption_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let engine = Engine::new(VolumeStore::open(dir.path()).unwrap());
    engine.compute(0, 5, Method::Lift).unwrap();
    drop(engine);
    let path = dir.path().join("v_0_5.genus0_lift.json");
    let text = std::fs::read_to_string(&path).unwrap().replacen("\"re\":\"1/8\"", "\"re\":\"1/9\"", 1);
    std::fs::write(&path, text).unwrap();
    let store = VolumeStore::open(dir.path()).unwrap();
    assert!(!report(&store).ok());
    assert!(store.get((0, 5)).is_err());
}

#[test]
fn unstable_put_is_rejected() {
    let mut store = VolumeStore::in_memory();
    let mut e = StoreEntry::new(wpvol_core::conerec::seed_v03(), Provenance::Seed);
    e.key = (0, 2);
    assert!(matches!(store.put(e), Err(Error::Unstable { .. })));
}
