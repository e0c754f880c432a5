use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use braidquot::{
    are_conjugate, canonical_representative, order_of, parse_word, realize_z3z3_by_z,
    realize_zp_by_z, theorem1_normal_form, verify_tables, Element,
};

fn el(s: &str, n: usize) -> Element {
    Element::from_word(&parse_word(s, n).unwrap())
}

fn arithmetic(c: &mut Criterion) {
    let w = parse_word("s1 s2^-1 s3 A1,4^2 s5 s6^3 A2,7^-1 s4 s3 s2", 7).unwrap();
    c.bench_function("evaluate word n=7", |b| {
        b.iter(|| Element::from_word(black_box(&w)))
    });
    let u = Element::from_word(&w);
    c.bench_function("power 1000 n=7", |b| b.iter(|| black_box(&u).power(1000)));
}

fn conjugacy(c: &mut Criterion) {
    let mut group = c.benchmark_group("are_conjugate");
    // identity permutations give the largest centralizers
    for n in [3usize, 4, 5, 6] {
        let u = el("A1,2 A2,3^2", n);
        let v = el("A1,2^2 A1,3", n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, _| {
            b.iter(|| are_conjugate(black_box(&u), black_box(&v)).unwrap())
        });
    }
    group.finish();

    let u = el("s1 s2 s4 A1,5^3 A2,6", 7);
    let base = Element::section(u.perm());
    c.bench_function("normal form n=7", |b| {
        b.iter(|| theorem1_normal_form(black_box(&u), &base).unwrap())
    });
    c.bench_function("canonical representative n=6", |b| {
        let u = el("s1 s3 A1,2^2 A4,6", 6);
        b.iter(|| canonical_representative(black_box(&u)))
    });
    c.bench_function("order of delta(0,7)", |b| {
        let d = braidquot::delta(0, 7, 7).unwrap();
        b.iter(|| order_of(black_box(&d)))
    });
}

fn virtually_cyclic(c: &mut Criterion) {
    c.bench_function("realize Z7 x| Z, k=3", |b| {
        b.iter(|| realize_zp_by_z(7, 7, 3).unwrap())
    });
    c.bench_function("realize upsilon5 (exhaustive)", |b| {
        b.iter(|| realize_z3z3_by_z(5).unwrap())
    });
    c.bench_function("verify all tables", |b| b.iter(|| verify_tables(None)));
}

criterion_group!(benches, arithmetic, conjugacy, virtually_cyclic);
criterion_main!(benches);
