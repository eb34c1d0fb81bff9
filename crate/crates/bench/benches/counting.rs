use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use pary_md::count::{Counter, Family};

fn t_rows(c: &mut Criterion) {
    let mut group = c.benchmark_group("t_row");
    for &(p, n) in &[(2u32, 8usize), (2, 16), (3, 12), (5, 12)] {
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("p{p}_n{n}")),
            &(p, n),
            |b, &(p, n)| {
                b.iter(|| {
                    let mut counter = Counter::new(p).unwrap();
                    black_box(counter.t_row(n).unwrap())
                })
            },
        );
    }
    group.finish();
}

fn y_table(c: &mut Criterion) {
    c.bench_function("y_table_p2_n25", |b| {
        b.iter(|| {
            let mut counter = Counter::new(2).unwrap();
            black_box(counter.row(Family::Y, 25).unwrap())
        })
    });
}

criterion_group!(benches, t_rows, y_table);
criterion_main!(benches);
