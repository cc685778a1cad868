use brouwer::admissibility::{falsify_admissibility, LogicHandle, SearchBudget};
use brouwer::algebra::{enumerate_algebras, heyting_catalog};
use brouwer::corpus::{corpus, CorpusSpec};
use brouwer::prover::{find_countermodel, is_int_theorem, is_positive_theorem};
use brouwer::reduction::{wajsberg_reduce, ReductionContext};
use brouwer::MRule;
use criterion::{black_box, criterion_group, criterion_main, Criterion};

fn provers(c: &mut Criterion) {
    let formulas = corpus(&CorpusSpec { max_connectives: 4, ..CorpusSpec::default() });
    let reduced: Vec<_> =
        formulas.iter().map(|f| wajsberg_reduce(f, &ReductionContext::for_formula(f)).unwrap()).collect();
    c.bench_function("int prover, corpus <= 4 connectives", |b| {
        b.iter(|| formulas.iter().filter(|f| is_int_theorem(f)).count())
    });
    c.bench_function("positive prover, reduced corpus <= 4 connectives", |b| {
        b.iter(|| reduced.iter().filter(|f| is_positive_theorem(f).unwrap()).count())
    });
    let algebras = heyting_catalog(6);
    let peirce = "((p->q)->p)->p".parse().unwrap();
    c.bench_function("countermodel search, Peirce", |b| b.iter(|| find_countermodel(&peirce, &algebras)));
}

fn enumeration(c: &mut Criterion) {
    c.bench_function("enumerate Heyting algebras <= 7", |b| b.iter(|| enumerate_algebras(black_box(7)).len()));
}

fn admissibility(c: &mut Criterion) {
    let budget = SearchBudget { max_instances: 100, ..SearchBudget::default() };
    let int = LogicHandle::int().with_budget(budget);
    let not_admissible: MRule = "p|q / p".parse().unwrap();
    let dp: MRule = "p|q / p, q".parse().unwrap();
    c.bench_function("falsify p|q / p", |b| b.iter(|| falsify_admissibility(&int, &not_admissible, &budget)));
    c.bench_function("falsify DP, 100 substitutions", |b| b.iter(|| falsify_admissibility(&int, &dp, &budget)));
}

criterion_group!(benches, provers, enumeration, admissibility);
criterion_main!(benches);
