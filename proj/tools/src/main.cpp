#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "msmir/error.hpp"
#include "msmir/index_io.hpp"

using namespace msmir::cli;

namespace {

void add_prep_flags(CLI::App* cmd, PrepFlags& prep) {
    cmd->add_option("--min-term-len", prep.min_term_length, "Shortest kept term")->check(CLI::PositiveNumber);
    cmd->add_option("--stopwords", prep.stopwords, "Stopword list, one per line")->check(CLI::ExistingFile);
    cmd->add_option("--min-df", prep.min_df, "Minimum document frequency")->check(CLI::PositiveNumber);
    cmd->add_flag("--keep-case", prep.keep_case, "Do not lowercase tokens");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Matrix space model text retrieval"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "msmir 1.0.0 (index format " + std::to_string(msmir::kIndexFormatVersion) + ")");

    IndexArgs index;
    auto* index_cmd = app.add_subcommand("index", "Build a term-by-document index from a SMART corpus");
    index_cmd->add_option("corpus", index.corpus, "SMART corpus file")->required()->check(CLI::ExistingFile);
    index_cmd->add_option("--kprime", index.kprime, "Sentence-space rank per document (integer or 'full'); omit for plain counts");
    add_prep_flags(index_cmd, index.prep);
    index_cmd->add_option("--rank-tol", index.rank_tol, "Relative numerical rank threshold");
    index_cmd->add_option("--threads", index.threads, "Worker threads (0 = all cores)");
    index_cmd->add_option("--out", index.out, "Index file")->required();
    index_cmd->add_option("--stats", index.stats, "Write corpus statistics CSV");

    QueryArgs query;
    auto* query_cmd = app.add_subcommand("query", "Score queries against an index and write a TREC run");
    query_cmd->add_option("index", query.index, "Index file")->required()->check(CLI::ExistingFile);
    auto* text_opt = query_cmd->add_option("--text", query.text, "Single query text");
    query_cmd->add_option("--queries", query.queries, "SMART query file")->check(CLI::ExistingFile)->excludes(text_opt);
    query_cmd->add_option("--lsi-k", query.lsi_k, "Score in a rank-k latent semantic space");
    query_cmd->add_flag("--fold-in", query.fold_in, "Compare Sigma^-1 U^T q against V^T instead");
    query_cmd->add_option("--threads", query.threads, "Worker threads (0 = all cores)");
    query_cmd->add_option("--tag", query.tag, "Run tag (default: method name)");
    query_cmd->add_option("--out", query.out, "Run file (default: stdout)");

    EvalArgs eval;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate TREC runs against relevance judgments");
    eval_cmd->add_option("runs", eval.runs, "Run files")->required()->check(CLI::ExistingFile);
    eval_cmd->add_option("--qrels", eval.qrels, "Relevance judgments")->required()->check(CLI::ExistingFile);
    eval_cmd->add_option("--name", eval.names, "Method name per run (default: file stem)");
    eval_cmd->add_option("--out", eval.out, "Report directory")->required();

    SpectrumArgs spectrum;
    auto* spectrum_cmd = app.add_subcommand("spectrum", "Leading singular values of an index");
    spectrum_cmd->add_option("index", spectrum.index, "Index file")->required()->check(CLI::ExistingFile);
    spectrum_cmd->add_option("-n", spectrum.n, "Number of singular values");
    spectrum_cmd->add_option("--out", spectrum.out, "CSV file (default: stdout)");

    LowrankArgs lowrank;
    auto* lowrank_cmd = app.add_subcommand("lowrank", "Relative residual |A - best_k(A)|_F / |A|_F");
    lowrank_cmd->add_option("index", lowrank.index, "Index file")->required()->check(CLI::ExistingFile);
    lowrank_cmd->add_option("-k", lowrank.k, "Rank(s)");
    lowrank_cmd->add_option("--out", lowrank.out, "CSV file (default: stdout)");

    SynthArgs synth;
    auto* synth_cmd = app.add_subcommand("synth", "Join base documents into multi-topic documents");
    synth_cmd->add_option("corpus", synth.corpus, "Base SMART corpus")->required()->check(CLI::ExistingFile);
    synth_cmd->add_option("-i", synth.per_join, "Documents per join")->check(CLI::PositiveNumber);
    synth_cmd->add_option("--mode", synth.mode, "window or rotations")->check(CLI::IsMember({"window", "rotations"}));
    synth_cmd->add_option("--qrels", synth.qrels, "Base relevance judgments to remap")->check(CLI::ExistingFile);
    synth_cmd->add_option("--out", synth.out, "Output directory")->required();

    GenerateArgs generate;
    auto* generate_cmd = app.add_subcommand("generate", "Write a synthetic topic-mixture collection");
    generate_cmd->add_option("--documents", generate.documents)->check(CLI::PositiveNumber);
    generate_cmd->add_option("--topics", generate.topics)->check(CLI::PositiveNumber);
    generate_cmd->add_option("--vocabulary", generate.vocabulary)->check(CLI::PositiveNumber);
    generate_cmd->add_option("--queries", generate.queries);
    generate_cmd->add_option("--seed", generate.seed);
    generate_cmd->add_option("--out", generate.out, "Output directory")->required();

    TimingArgs timing;
    auto* timing_cmd = app.add_subcommand("timing", "End-to-end wall-clock time per method");
    timing_cmd->add_option("corpus", timing.corpus, "SMART corpus file")->required()->check(CLI::ExistingFile);
    timing_cmd->add_option("--queries", timing.queries, "SMART query file")->check(CLI::ExistingFile);
    timing_cmd->add_option("--method", timing.methods, "vsm, msm:<k'>, lsi:<k>, msm+lsi:<k'>:<k>");
    add_prep_flags(timing_cmd, timing.prep);
    timing_cmd->add_option("--threads", timing.threads, "Worker threads (0 = all cores)");
    timing_cmd->add_option("--out", timing.out, "CSV file (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*index_cmd) return cmd_index(index);
        if (*query_cmd) return cmd_query(query);
        if (*eval_cmd) return cmd_eval(eval);
        if (*spectrum_cmd) return cmd_spectrum(spectrum);
        if (*lowrank_cmd) return cmd_lowrank(lowrank);
        if (*synth_cmd) return cmd_synth(synth);
        if (*generate_cmd) return cmd_generate(generate);
        if (*timing_cmd) return cmd_timing(timing);
    } catch (const msmir::ParseError& e) {
        std::cerr << "msmir: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "msmir: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
