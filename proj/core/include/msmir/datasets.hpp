#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "msmir/smart_format.hpp"
#include "msmir/textprep.hpp"

namespace msmir {

enum class JoinMode : std::uint8_t {
    /// Output j joins base docs j, j+1, ..., j+i-1 (cyclic): n outputs.
    window,
    /// Window outputs for strides 1..i, i.e. base docs j, j+s, ..., j+(i-1)s: n*i outputs.
    rotations,
};

struct JoinSpec {
    std::size_t documents_per_join = 1;
    JoinMode mode = JoinMode::rotations;
    std::uint64_t seed = 0;
};

struct MultitopicCorpus {
    std::vector<RawDocument> documents;
    /// Source ids of each joined document, in join order.
    std::vector<std::vector<std::string>> constituents;
};

/// Joined texts are separated by ". " so constituent sentences stay apart.
/// Joined ids are the constituent ids joined by '+'. With one document per
/// join the base corpus is returned unchanged. Throws std::invalid_argument
/// when a join would repeat a base document.
MultitopicCorpus synthesize_multitopic(const std::vector<RawDocument>& base, const JoinSpec& spec);

/// A joined document is relevant to q iff any constituent is.
Qrels remap_qrels(const Qrels& qrels, const MultitopicCorpus& joined);

/// "joined_id,source_id" CSV with header.
void write_constituent_map(std::ostream& out, const MultitopicCorpus& joined);

JoinMode parse_join_mode(const std::string& name);
const char* to_string(JoinMode mode);

} // namespace msmir
