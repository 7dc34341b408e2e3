#include <map>

#include <benchmark/benchmark.h>

#include "msmir/pipeline.hpp"
#include "msmir/svd.hpp"
#include "msmir/synthetic.hpp"

namespace {

const msmir::SyntheticCollection& collection(std::size_t documents) {
    static std::map<std::size_t, msmir::SyntheticCollection> cache;
    auto it = cache.find(documents);
    if (it == cache.end()) {
        msmir::SyntheticSpec spec;
        spec.documents = documents;
        it = cache.emplace(documents, msmir::generate_collection(spec)).first;
    }
    return it->second;
}

void BM_BuildCorpus(benchmark::State& state) {
    const auto& docs = collection(static_cast<std::size_t>(state.range(0))).documents;
    for (auto _ : state) benchmark::DoNotOptimize(msmir::build_corpus(docs, {}));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildCorpus)->Arg(250)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_VsmTdm(benchmark::State& state) {
    const auto corpus = msmir::build_corpus(collection(static_cast<std::size_t>(state.range(0))).documents, {});
    for (auto _ : state) benchmark::DoNotOptimize(msmir::build_vsm_tdm(corpus));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_VsmTdm)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_PseudoTdm(benchmark::State& state) {
    const auto corpus = msmir::build_corpus(collection(1000).documents, {});
    const msmir::KPrime k(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(msmir::build_pseudo_tdm(corpus, k));
    state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_PseudoTdm)->Arg(1)->Arg(2)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_Svds(benchmark::State& state) {
    const auto tdm = msmir::build_vsm_tdm(msmir::build_corpus(collection(1000).documents, {}));
    for (auto _ : state) benchmark::DoNotOptimize(msmir::svds_sparse(tdm.matrix, state.range(0)));
}
BENCHMARK(BM_Svds)->Arg(10)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_Score(benchmark::State& state) {
    const auto& col = collection(1000);
    const auto corpus = msmir::build_corpus(col.documents, {});
    const auto index = msmir::RetrievalIndex::build(corpus, msmir::parse_method(state.range(0) ? "lsi:100" : "vsm"));
    const auto queries = msmir::make_queries(col.queries, corpus.vocabulary, {});
    for (auto _ : state) benchmark::DoNotOptimize(index.score_all(queries));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(queries.size()));
    state.SetLabel(state.range(0) ? "lsi:100" : "vsm");
}
BENCHMARK(BM_Score)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

} // namespace

BENCHMARK_MAIN();
