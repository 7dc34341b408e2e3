#pragma once

#include <optional>
#include <string>
#include <vector>

#include "msmir/datasets.hpp"
#include "msmir/textprep.hpp"

namespace msmir::cli {

struct PrepFlags {
    std::size_t min_term_length = 2;
    std::string stopwords;
    std::size_t min_df = 1;
    bool keep_case = false;

    PrepConfig to_config() const;
};

struct IndexArgs {
    std::string corpus;
    std::string kprime;
    PrepFlags prep;
    double rank_tol = 1e-10;
    unsigned threads = 1;
    std::string out;
    std::string stats;
};

struct QueryArgs {
    std::string index;
    std::string text;
    std::string queries;
    std::optional<long> lsi_k;
    bool fold_in = false;
    unsigned threads = 1;
    std::string tag;
    std::string out;
};

struct EvalArgs {
    std::vector<std::string> runs;
    std::vector<std::string> names;
    std::string qrels;
    std::string out;
};

struct SpectrumArgs {
    std::string index;
    long n = 100;
    std::string out;
};

struct LowrankArgs {
    std::string index;
    std::vector<long> k{100};
    std::string out;
};

struct SynthArgs {
    std::string corpus;
    std::string qrels;
    std::size_t per_join = 1;
    std::string mode = "rotations";
    std::string out;
};

struct GenerateArgs {
    std::size_t documents = 1000;
    std::size_t topics = 30;
    std::size_t vocabulary = 5000;
    std::size_t queries = 30;
    std::uint64_t seed = 1;
    std::string out;
};

struct TimingArgs {
    std::string corpus;
    std::string queries;
    std::vector<std::string> methods{"vsm", "msm:5", "lsi:100"};
    PrepFlags prep;
    unsigned threads = 1;
    std::string out;
};

int cmd_index(const IndexArgs& args);
int cmd_query(const QueryArgs& args);
int cmd_eval(const EvalArgs& args);
int cmd_spectrum(const SpectrumArgs& args);
int cmd_lowrank(const LowrankArgs& args);
int cmd_synth(const SynthArgs& args);
int cmd_generate(const GenerateArgs& args);
int cmd_timing(const TimingArgs& args);

} // namespace msmir::cli
