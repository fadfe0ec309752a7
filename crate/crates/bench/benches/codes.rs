use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use arboreal::bounds::{max_code_search, SearchMode};
use arboreal::codes::{
    construct_coset_code, construct_two_star_code, decode_two_star, generic_erasure_decode,
    min_tree_distance,
};
use arboreal::Guard;
use arboreal_bench::erased_words;

fn constructions(c: &mut Criterion) {
    let mut group = c.benchmark_group("construct");
    group.sample_size(10);
    group.bench_function("coset n=7 d=2", |b| {
        b.iter(|| construct_coset_code(7, 2, &Guard::default()).unwrap())
    });
    group.bench_function("two-star n=31 m=6", |b| {
        b.iter(|| construct_two_star_code(31, 6).unwrap())
    });
    group.finish();
}

fn certification(c: &mut Criterion) {
    let code = construct_two_star_code(31, 6).unwrap();
    c.bench_function("min distance two-star n=31", |b| {
        b.iter(|| min_tree_distance(black_box(&code)))
    });
}

fn decoding(c: &mut Criterion) {
    let code = construct_two_star_code(13, 6).unwrap();
    let patterns = erased_words(&code, 2);
    c.bench_function("two-star decoder, all 2-erasures n=13", |b| {
        b.iter(|| {
            patterns
                .iter()
                .filter(|(_, f)| decode_two_star(&code, 6, f).is_ok())
                .count()
        })
    });
    c.bench_function("generic decoder, all 2-erasures n=13", |b| {
        b.iter(|| {
            patterns
                .iter()
                .filter(|(_, f)| generic_erasure_decode(&code, f).is_ok())
                .count()
        })
    });
}

fn search(c: &mut Criterion) {
    let mut group = c.benchmark_group("clique search");
    group.sample_size(10);
    group.bench_function("exact n=5 d=3", |b| {
        b.iter(|| max_code_search(5, 3, SearchMode::Exact, &Guard::default()).unwrap())
    });
    group.bench_function("greedy n=6 d=3", |b| {
        b.iter(|| max_code_search(6, 3, SearchMode::Greedy, &Guard::default()).unwrap())
    });
    group.finish();
}

criterion_group!(codes, constructions, certification, decoding, search);
criterion_main!(codes);
