#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "msmir/eval.hpp"
#include "msmir/index_io.hpp"
#include "msmir/pipeline.hpp"
#include "msmir/retrieval.hpp"
#include "msmir/smart_format.hpp"
#include "msmir/svd.hpp"
#include "msmir/synthetic.hpp"

namespace msmir::cli {

namespace fs = std::filesystem;

namespace {

std::ofstream open_out(const std::string& path) {
    if (const auto parent = fs::path(path).parent_path(); !parent.empty()) fs::create_directories(parent);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    return out;
}

std::vector<RawDocument> read_documents(const std::string& path) {
    auto docs = parse_smart_file(path);
    if (docs.empty()) throw std::runtime_error(path + ": no documents");
    return docs;
}

KPrime parse_kprime_flag(const std::string& text) {
    return parse_method("msm:" + text).kprime;
}

void print_stats(std::ostream& out, const CorpusStats& s) {
    out << std::fixed << std::setprecision(2);
    out << "documents " << s.document_count << '\n'
        << "vocabulary " << s.vocabulary_size << '\n'
        << "avg_terms_per_doc " << s.avg_terms_per_doc << " (" << s.terms_percent << "%)\n"
        << "avg_sentences_per_doc " << s.avg_sentences_per_doc << " (" << s.sentences_percent << "%)\n";
    out.unsetf(std::ios::floatfield);
}

} // namespace

PrepConfig PrepFlags::to_config() const {
    PrepConfig cfg;
    cfg.min_term_length = min_term_length;
    cfg.min_global_df = min_df;
    cfg.lowercase = !keep_case;
    if (!stopwords.empty()) cfg.stopwords = read_stopwords_file(stopwords);
    cfg.validate();
    return cfg;
}

int cmd_index(const IndexArgs& args) {
    const PrepConfig prep = args.prep.to_config();
    const Corpus corpus = build_corpus(read_documents(args.corpus), prep, args.threads);
    if (corpus.vocabulary.size() == 0) throw std::runtime_error(args.corpus + ": no indexable terms");

    MsmOptions options;
    options.rank_tol = args.rank_tol;
    options.threads = args.threads;
    Tdm tdm = args.kprime.empty() ? build_vsm_tdm(corpus)
                                  : build_pseudo_tdm(corpus, parse_kprime_flag(args.kprime), {}, options);

    std::clog << "built " << tdm.describe() << '\n';
    const auto stats = corpus_stats(corpus);
    print_stats(std::cout, stats);
    if (!args.stats.empty()) {
        auto out = open_out(args.stats);
        out << "documents,vocabulary,avg_terms_per_doc,terms_percent,avg_sentences_per_doc,sentences_percent\n"
            << stats.document_count << ',' << stats.vocabulary_size << ',' << stats.avg_terms_per_doc << ','
            << stats.terms_percent << ',' << stats.avg_sentences_per_doc << ',' << stats.sentences_percent << '\n';
    }
    save_index_file(args.out, StoredIndex{corpus.vocabulary, prep, std::move(tdm)});
    return 0;
}

int cmd_query(const QueryArgs& args) {
    const StoredIndex stored = load_index_file(args.index);
    std::vector<RawDocument> raw;
    if (!args.text.empty()) raw.push_back({"1", args.text});
    if (!args.queries.empty()) raw = read_documents(args.queries);
    if (raw.empty()) throw std::runtime_error("no query given (use --text or --queries)");

    const auto queries = make_queries(raw, stored.vocabulary, stored.prep);
    for (const auto& q : queries)
        if (q.vector.nnz() == 0) std::clog << "warning: query " << q.id << " has no indexed terms\n";

    Method method;
    method.kind = stored.tdm.kind == TdmKind::pseudo ? MethodKind::msm : MethodKind::vsm;
    method.kprime = stored.tdm.kprime;
    if (args.lsi_k) {
        if (*args.lsi_k < 1) throw std::invalid_argument("--lsi-k must be positive");
        method.kind = method.kind == MethodKind::msm ? MethodKind::msm_lsi : MethodKind::lsi;
        method.lsi_k = static_cast<Index>(*args.lsi_k);
    }
    PipelineOptions options;
    options.projection = args.fold_in ? LsiQueryProjection::fold_in : LsiQueryProjection::project;
    const auto index = RetrievalIndex::from_tdm(stored.tdm, method, options);
    const auto runs = index.score_all(queries, args.threads);

    const std::string tag = args.tag.empty() ? method.name() : args.tag;
    if (args.out.empty() || args.out == "-") {
        write_trec_run(std::cout, runs, tag);
    } else {
        auto out = open_out(args.out);
        write_trec_run(out, runs, tag);
    }
    return 0;
}

int cmd_eval(const EvalArgs& args) {
    if (!args.names.empty() && args.names.size() != args.runs.size())
        throw std::invalid_argument("--name must be given once per run file");
    const Qrels qrels = read_qrels_file(args.qrels);
    std::vector<MethodRuns> methods;
    for (std::size_t i = 0; i < args.runs.size(); ++i) {
        const std::string name = args.names.empty() ? fs::path(args.runs[i]).stem().string() : args.names[i];
        methods.push_back({name, read_trec_run_file(args.runs[i])});
    }
    auto report = evaluate(methods, qrels);
    report.metadata["qrels"] = args.qrels;
    for (const auto& q : report.skipped_queries) std::clog << "warning: query " << q << " has no relevant documents\n";
    for (const auto& d : report.unknown_relevant_docs)
        std::clog << "warning: relevant document " << d << " appears in no run\n";
    write_eval_report(report, args.out);
    for (const auto& m : report.methods)
        std::cout << m.method << " map=" << m.mean_average_precision << " 11pt=" << m.mean_interpolated_11pt << '\n';
    return 0;
}

int cmd_spectrum(const SpectrumArgs& args) {
    if (args.n < 1) throw std::invalid_argument("-n must be positive");
    const StoredIndex stored = load_index_file(args.index);
    const auto sigma = spectrum_report(stored.tdm, static_cast<Index>(args.n));
    if (args.out.empty() || args.out == "-") {
        write_sigma_csv(std::cout, sigma);
    } else {
        auto out = open_out(args.out);
        write_sigma_csv(out, sigma);
    }
    return 0;
}

int cmd_lowrank(const LowrankArgs& args) {
    const StoredIndex stored = load_index_file(args.index);
    std::ostringstream csv;
    csv << "k,distance\n" << std::setprecision(17);
    for (long k : args.k) {
        if (k < 1) throw std::invalid_argument("-k must be positive");
        csv << k << ',' << lowrank_shift_distance(stored.tdm.matrix, static_cast<Index>(k)) << '\n';
    }
    if (args.out.empty() || args.out == "-") {
        std::cout << csv.str();
    } else {
        open_out(args.out) << csv.str();
    }
    return 0;
}

int cmd_synth(const SynthArgs& args) {
    const auto base = read_documents(args.corpus);
    const JoinSpec spec{args.per_join, parse_join_mode(args.mode), 0};
    const auto joined = synthesize_multitopic(base, spec);
    fs::create_directories(args.out);
    {
        auto out = open_out((fs::path(args.out) / "corpus.all").string());
        write_smart(out, joined.documents);
    }
    {
        auto out = open_out((fs::path(args.out) / "constituents.csv").string());
        write_constituent_map(out, joined);
    }
    if (!args.qrels.empty()) {
        auto out = open_out((fs::path(args.out) / "qrels.txt").string());
        write_qrels(out, remap_qrels(read_qrels_file(args.qrels), joined));
    }
    std::cout << joined.documents.size() << " documents\n";
    return 0;
}

int cmd_generate(const GenerateArgs& args) {
    SyntheticSpec spec;
    spec.documents = args.documents;
    spec.topics = args.topics;
    spec.vocabulary = args.vocabulary;
    spec.queries = args.queries;
    spec.seed = args.seed;
    const auto collection = generate_collection(spec);
    fs::create_directories(args.out);
    {
        auto out = open_out((fs::path(args.out) / "corpus.all").string());
        write_smart(out, collection.documents);
    }
    {
        auto out = open_out((fs::path(args.out) / "queries.all").string());
        write_smart(out, collection.queries);
    }
    {
        auto out = open_out((fs::path(args.out) / "qrels.txt").string());
        write_qrels(out, collection.qrels);
    }
    return 0;
}

int cmd_timing(const TimingArgs& args) {
    const auto docs = read_documents(args.corpus);
    const auto queries = args.queries.empty() ? std::vector<RawDocument>{} : read_documents(args.queries);
    std::vector<Method> methods;
    for (const auto& m : args.methods) methods.push_back(parse_method(m));
    PipelineOptions options;
    options.msm.threads = args.threads;
    const auto timings = timing_report(docs, queries, methods, args.prep.to_config(), options);

    std::ostringstream csv;
    csv << "method,build_seconds,query_seconds,total_seconds\n";
    for (const auto& t : timings)
        csv << t.method << ',' << t.build_seconds << ',' << t.query_seconds << ',' << t.total_seconds() << '\n';
    if (args.out.empty() || args.out == "-") {
        std::cout << csv.str();
    } else {
        open_out(args.out) << csv.str();
    }
    return 0;
}

} // namespace msmir::cli
