use std::hint::black_box;
use std::sync::Arc;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use patchtop::enumerate::{random_generating_supports, random_poset, random_subset};
use patchtop::{ProPoint, ProSpace, Probe, Sections, SetLattice, Subset, SupportDatum};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn lattice(carrier: usize, gens: usize) -> SetLattice {
    let mut rng = ChaCha8Rng::seed_from_u64(carrier as u64);
    let gens: Vec<Subset> = (0..gens).map(|_| random_subset(&mut rng, carrier)).collect();
    SetLattice::generate((0..carrier).map(|i| format!("p{i}")).collect(), &gens).unwrap()
}

fn closures(c: &mut Criterion) {
    let mut group = c.benchmark_group("closure");
    for carrier in [4, 8, 12] {
        let l = lattice(carrier, 4);
        group.bench_with_input(BenchmarkId::new("join_irreducibles", carrier), &l, |b, l| {
            b.iter(|| black_box(l.spectral_closure()))
        });
        group.bench_with_input(BenchmarkId::new("evaluation", carrier), &l, |b, l| {
            b.iter(|| black_box(l.closure_via_evaluation()))
        });
    }
    group.finish();
}

fn constructibles(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let x = random_poset(&mut rng, 10, 0.3);
    let d = random_subset(&mut rng, 10);
    c.bench_function("patch_dense/10", |b| b.iter(|| black_box(x.is_patch_dense(&d).unwrap())));
    c.bench_function("thomason_enumeration/10", |b| b.iter(|| black_box(x.closed_sets())));
}

fn chromatic(c: &mut Criterion) {
    let x = ProSpace::chromatic(32);
    let fam = x.retractable_limit(Sections::NextPoint).unwrap();
    c.bench_function("chromatic/pro_dense_32", |b| {
        b.iter(|| black_box(x.patch_dense_pro(&fam, 32).unwrap()))
    });
    c.bench_function("chromatic/singleton_cinf_32", |b| {
        b.iter(|| black_box(x.is_constructible_singleton(&ProPoint::chromatic_infinity(), 32).unwrap()))
    });
}

fn supports(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let x = random_poset(&mut rng, 5, 0.4);
    let gens = random_generating_supports(&mut rng, &x);
    let d = SupportDatum::finite(x.clone(), gens).unwrap();
    c.bench_function("support/catalog_24", |b| b.iter(|| black_box(d.catalog(24))));
    c.bench_function("support/reconstruct_identity", |b| {
        b.iter(|| black_box(d.reconstruct_from_dense(&Probe::Subset(x.full()), 24, 0).unwrap()))
    });
    let space = Arc::new(ProSpace::chromatic(8));
    let chrom = SupportDatum::chromatic(space.clone(), 8).unwrap();
    let fam = space.retractable_limit(Sections::NextPoint).unwrap();
    c.bench_function("support/reconstruct_chromatic_8", |b| {
        b.iter(|| black_box(chrom.reconstruct_from_dense(&Probe::Family(fam.clone()), 40, 8).unwrap()))
    });
}

criterion_group!(benches, closures, constructibles, chromatic, supports);
criterion_main!(benches);
