//! Integration tests across module boundaries: constructions feeding the
//! cap predicates, point files round-tripping, orbit unions re-verified by
//! the pair scan, and the verification report's structural guarantees.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use caps_core::{
    build_singer, build_space, cap11_pg43, cap_verdict, chord_profile, claim_manifest,
    elliptic_quadric, hyperoval_pg24, orbit_cap_filter, orbit_union_cap_search, read_points,
    subgroup_orbits, tits_ovoid, verify, write_points, FieldSpec, Limits, PointId, PointSet,
    ProjectiveSpace, UnionSearchOptions,
};

fn space_of(q: u64, r: usize) -> Arc<ProjectiveSpace> {
    let f = FieldSpec::of_order(q).expect("field order");
    build_space(&f, r).expect("space")
}

/// Greedily extends a cap in a seeded random point order; the result is a
/// complete cap with no designed symmetry.
fn random_cap(space: &Arc<ProjectiveSpace>, seed: u64) -> PointSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ids: Vec<PointId> = space.ids().collect();
    ids.shuffle(&mut rng);
    let mut members: Vec<PointId> = Vec::new();
    'next: for &p in &ids {
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                if space.collinear(a, b, p).expect("distinct points") {
                    continue 'next;
                }
            }
        }
        members.push(p);
    }
    PointSet::new(space, members).expect("members are valid")
}

#[test]
fn point_files_round_trip_constructed_caps() {
    let sets =
        [elliptic_quadric(5).unwrap(), tits_ovoid(8).unwrap(), hyperoval_pg24().unwrap()];
    for set in sets {
        let mut buf: Vec<u8> = Vec::new();
        write_points(&set, &mut buf).expect("serializing");
        let back = read_points(&buf[..]).expect("parsing what we wrote");
        assert_eq!(back.space().r(), set.space().r());
        assert_eq!(back.space().q(), set.space().q());
        assert_eq!(back.members(), set.members());
    }
}

#[test]
fn random_caps_satisfy_the_chord_sum_identity() {
    // Every pair of cap points spans a chord carrying q - 1 external points,
    // so the chord numbers over all externals sum to C(k,2)(q-1) for any
    // cap whatsoever, symmetric or not.
    for (q, r) in [(4u64, 2usize), (5, 2), (3, 3)] {
        let space = space_of(q, r);
        for seed in 0..5u64 {
            let cap = random_cap(&space, seed);
            assert!(cap.len() >= 3, "degenerate random cap in PG({r},{q})");
            assert!(cap_verdict(&cap).is_cap);
            let profile = chord_profile(&cap).expect("profile of a cap");
            let k = cap.len() as u64;
            assert_eq!(
                profile.total(),
                k * (k - 1) * (q - 1) / 2,
                "chord sum off for seed {seed} in PG({r},{q})"
            );
        }
    }
}

#[test]
fn singer_orbit_unions_come_back_as_verified_caps() {
    // In PG(4,3) the order-11 subgroup of a Singer cycle splits the 121
    // points into eleven 11-point orbits, every one a cap; asking the union
    // search for 11-point unions must recover exactly those orbits.
    let space = space_of(3, 4);
    let cycle = build_singer(&space);
    let partition = subgroup_orbits(&cycle, 11).expect("11 divides 121");
    assert!(orbit_cap_filter(&partition).iter().all(|&b| b));

    let result =
        orbit_union_cap_search(&partition, 11, &UnionSearchOptions::default()).expect("search");
    assert!(result.exhaustive);
    assert_eq!(result.unions.len(), 11);
    for union in &result.unions {
        assert_eq!(union.len(), 1);
        let members = partition.orbits()[union[0]].iter().copied();
        let set = PointSet::new(&space, members).expect("orbit members");
        assert!(cap_verdict(&set).is_cap);
        assert_eq!(set.len(), 11);
    }

    let known = cap11_pg43().expect("construction");
    let found = result
        .unions
        .iter()
        .any(|u| partition.orbits()[u[0]] == known.members());
    assert!(found, "the catalogued 11-cap is one of the Singer orbits");
}

#[test]
fn verification_report_passes_and_covers_the_manifest() {
    let limits = Limits::default();
    let report = verify(&limits, 2).expect("verification run");

    assert!(report.all_passed(), "failing checks:\n{}", report.to_text());
    assert_eq!(report.failed, 0);
    assert_eq!(report.passed, report.checks.len());
    assert_eq!(report.checks.len(), 101);

    let ids: Vec<&str> = report.checks.iter().map(|c| c.id.as_str()).collect();
    let mut sorted = ids.clone();
    sorted.sort_unstable();
    sorted.dedup();
    assert_eq!(ids, sorted, "check ids are sorted and unique");

    // The claim manifest and the emitted checks must cover each other: no
    // claim area without checks, no check outside a claim area.
    for (area, prefix) in claim_manifest() {
        assert!(
            ids.iter().any(|id| id.starts_with(prefix)),
            "claim area '{area}' (prefix {prefix}) has no checks"
        );
    }
    for id in &ids {
        assert!(
            claim_manifest().iter().any(|(_, prefix)| id.starts_with(prefix)),
            "check {id} belongs to no claim area"
        );
    }

    let json = report.to_canonical_json();
    let value: serde_json::Value = serde_json::from_str(&json).expect("canonical json parses");
    assert_eq!(value["passed"], 101);
    assert!(json.ends_with('\n'));
    assert!(report.to_text().contains("101 of 101 checks passed"));
}
