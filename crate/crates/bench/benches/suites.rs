use criterion::{criterion_group, criterion_main, Criterion};
use numplane::configtheorems::{run_suite, DesarguesVariant, PappusVariant, Theorem};
use numplane::counterexamples::{desargues_fails_moulton, sas_fails_pseudolength};
use numplane::harmonic::run_harmonic_suite;
use numplane::segcalc::run_segcalc_suite;
use numplane::{AltPlane, MoultonPlane, Octonion, Precision, Quaternion, Rational, SkewPlane};

fn suites(c: &mut Criterion) {
    let p = Precision::default();
    let mut g = c.benchmark_group("suite-100");
    g.sample_size(10);
    let rational = SkewPlane::<Rational>::new();
    g.bench_function("pappus/rational", |b| {
        b.iter(|| run_suite(&rational, Theorem::Pappus(PappusVariant::General), 100, 7, p).unwrap())
    });
    let quaternion = SkewPlane::<Quaternion>::new();
    g.bench_function("d0/quaternion", |b| {
        b.iter(|| run_suite(&quaternion, Theorem::desargues(DesarguesVariant::D0), 100, 7, p).unwrap())
    });
    let octonion = AltPlane::<Octonion>::new();
    g.bench_function("little/octonion", |b| {
        b.iter(|| run_suite(&octonion, Theorem::desargues(DesarguesVariant::Little), 100, 7, p).unwrap())
    });
    g.bench_function("d1/moulton", |b| {
        b.iter(|| run_suite(&MoultonPlane::new(), Theorem::desargues(DesarguesVariant::D1), 100, 7, p).unwrap())
    });
    g.bench_function("harmonic/rational", |b| b.iter(|| run_harmonic_suite(&rational, 100, 7, p).unwrap()));
    g.bench_function("segcalc/octonion", |b| b.iter(|| run_segcalc_suite(&octonion, 100, 7, p).unwrap()));
    g.finish();

    let mut g = c.benchmark_group("counterexample");
    g.sample_size(10);
    g.bench_function("desargues-moulton", |b| b.iter(|| desargues_fails_moulton().unwrap()));
    g.bench_function("sas-pseudolength", |b| b.iter(|| sas_fails_pseudolength().unwrap()));
    g.finish();
}

criterion_group!(benches, suites);
criterion_main!(benches);
