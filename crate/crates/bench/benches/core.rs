use criterion::{criterion_group, criterion_main, Criterion};
use ellgcd_core::*;

fn running_pair() -> SectionPair {
    let e1 = SurfaceModel::from_ints(&[0, 1], &[1]).unwrap();
    let p1 = FFPoint::from_polys(&e1, Poly::zero(), Poly::one()).unwrap();
    let e2 = SurfaceModel::from_ints(&[0, 1], &[4]).unwrap();
    let p2 = FFPoint::from_polys(&e2, Poly::zero(), Poly::from_ints(&[2])).unwrap();
    SectionPair::untranslated(e1, p1, e2, p2).unwrap()
}

fn gcd_table(c: &mut Criterion) {
    let pair = running_pair();
    let limits = Limits::default();
    c.bench_function("gcd_degree_table 8x8", |b| {
        b.iter(|| gcd_degree_table(&pair, 8, false, &limits).unwrap())
    });
    c.bench_function("gcd_degree_table diagonal 20", |b| {
        b.iter(|| gcd_degree_table(&pair, 20, true, &limits).unwrap())
    });
}

fn scalar_mul(c: &mut Criterion) {
    let pair = running_pair();
    c.bench_function("scalar_mul 24", |b| b.iter(|| pair.e1.scalar_mul(24, &pair.p1).unwrap()));
}

fn poly_gcd(c: &mut Criterion) {
    let a = Poly::from_ints(&[0, 1]).pow(60).sub(&Poly::one());
    let b = Poly::from_ints(&[0, 1]).pow(84).sub(&Poly::one());
    c.bench_function("gcd t^60-1, t^84-1", |bn| bn.iter(|| a.gcd(&b).unwrap()));
}

fn heights(c: &mut Criterion) {
    let curve = QCurve::from_ints(0, -2).unwrap();
    let p = QPoint::from_ints(3, 5);
    let limits = Limits::default();
    c.bench_function("canonical_height_q depth 5", |b| {
        b.iter(|| canonical_height_q(&curve, &p, 5, &limits).unwrap())
    });
}

fn ar(c: &mut Criterion) {
    let cfg = ArConfig::new(Poly::from_ints(&[0, 1]), Poly::from_ints(&[1, 1])).unwrap();
    c.bench_function("ar_bound_scan 24", |b| b.iter(|| ar_bound_scan(&cfg, 24).unwrap()));
}

criterion_group!(benches, gcd_table, scalar_mul, poly_gcd, heights, ar);
criterion_main!(benches);
