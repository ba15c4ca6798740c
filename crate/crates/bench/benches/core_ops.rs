//! Benchmarks for the hot paths: finite-field arithmetic, space
//! construction, the cap pair scan, chord profiles, exhaustive search, and
//! Singer orbit machinery.

use std::hint::black_box;
use std::sync::Arc;

use criterion::{criterion_group, criterion_main, Criterion};

use caps_core::{
    build_singer, build_space, cap_verdict, chord_profile, complete_cap_search,
    elliptic_quadric, hyperplane_complement, setwise_stabilizer_bruteforce, subgroup_orbits,
    Fe, FieldSpec, ProjectiveSpace, SearchOptions,
};

fn space_of(q: u64, r: usize) -> Arc<ProjectiveSpace> {
    let f = FieldSpec::of_order(q).expect("field order");
    build_space(&f, r).expect("space")
}

fn field_arithmetic(c: &mut Criterion) {
    let f = FieldSpec::of_order(256).expect("GF(256)");
    c.bench_function("gf256_mul_all_pairs", |b| {
        b.iter(|| {
            let mut acc = Fe(0);
            for i in 0..256u32 {
                for j in 0..256u32 {
                    acc = f.add(acc, f.mul(Fe(i), Fe(j)));
                }
            }
            black_box(acc)
        })
    });
    c.bench_function("gf256_inv_all_units", |b| {
        b.iter(|| {
            let mut acc = Fe(0);
            for i in 1..256u32 {
                acc = f.add(acc, f.inv(Fe(i)).expect("unit"));
            }
            black_box(acc)
        })
    });
}

fn space_construction(c: &mut Criterion) {
    let f3 = FieldSpec::of_order(3).expect("GF(3)");
    c.bench_function("build_space_pg43", |b| {
        b.iter(|| black_box(build_space(&f3, 4).expect("space")))
    });
}

fn cap_checks(c: &mut Criterion) {
    let ovoid = elliptic_quadric(7).expect("ovoid");
    c.bench_function("cap_verdict_ovoid_q7", |b| b.iter(|| black_box(cap_verdict(&ovoid))));

    let ovoid5 = elliptic_quadric(5).expect("ovoid");
    c.bench_function("chord_profile_ovoid_q5", |b| {
        b.iter(|| black_box(chord_profile(&ovoid5).expect("profile")))
    });
}

fn exhaustive_search(c: &mut Criterion) {
    let space = space_of(2, 3);
    c.bench_function("complete_cap_search_pg32", |b| {
        b.iter(|| black_box(complete_cap_search(&space, &SearchOptions::default()).unwrap()))
    });
}

fn singer_machinery(c: &mut Criterion) {
    let space = space_of(3, 4);
    c.bench_function("singer_orbits_pg43", |b| {
        b.iter(|| {
            let cycle = build_singer(&space);
            black_box(subgroup_orbits(&cycle, 11).expect("11 divides 121"))
        })
    });
}

fn stabilizer(c: &mut Criterion) {
    let complement = hyperplane_complement(2).expect("complement");
    c.bench_function("stabilizer_complement_pg22", |b| {
        b.iter(|| black_box(setwise_stabilizer_bruteforce(&complement, 1_000_000).unwrap()))
    });
}

criterion_group!(
    benches,
    field_arithmetic,
    space_construction,
    cap_checks,
    exhaustive_search,
    singer_machinery,
    stabilizer
);
criterion_main!(benches);
