#include "msmir/datasets.hpp"

#include <ostream>
#include <stdexcept>
#include <unordered_set>

namespace msmir {

namespace {

RawDocument join(const std::vector<RawDocument>& base, const std::vector<std::size_t>& members) {
    RawDocument out;
    for (std::size_t i = 0; i < members.size(); ++i) {
        const auto& d = base[members[i]];
        if (i > 0) {
            out.id += '+';
            out.text += ". ";
        }
        out.id += d.id;
        out.text += d.text;
    }
    return out;
}

} // namespace

MultitopicCorpus synthesize_multitopic(const std::vector<RawDocument>& base, const JoinSpec& spec) {
    if (base.empty()) throw std::invalid_argument("synthesize_multitopic: empty base corpus");
    if (spec.documents_per_join < 1) throw std::invalid_argument("synthesize_multitopic: documents per join must be >= 1");
    MultitopicCorpus out;
    const std::size_t n = base.size();
    const std::size_t i = spec.documents_per_join;
    if (i == 1) {
        out.documents = base;
        for (const auto& d : base) out.constituents.push_back({d.id});
        return out;
    }
    const std::size_t strides = spec.mode == JoinMode::window ? 1 : i;
    out.documents.reserve(n * strides);
    std::unordered_set<std::string> ids;
    for (std::size_t stride = 1; stride <= strides; ++stride) {
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::size_t> members;
            std::vector<std::string> sources;
            for (std::size_t c = 0; c < i; ++c) {
                members.push_back((j + c * stride) % n);
                sources.push_back(base[members.back()].id);
            }
            if (std::unordered_set<std::size_t>(members.begin(), members.end()).size() != members.size())
                throw std::invalid_argument("synthesize_multitopic: base corpus of " + std::to_string(n) +
                                            " documents too small for stride " + std::to_string(stride) +
                                            " with " + std::to_string(i) + " documents per join");
            RawDocument doc = join(base, members);
            if (!ids.insert(doc.id).second)
                throw std::invalid_argument("synthesize_multitopic: base corpus too small for " +
                                            std::to_string(i) + "-document rotations (repeated join " + doc.id + ")");
            out.documents.push_back(std::move(doc));
            out.constituents.push_back(std::move(sources));
        }
    }
    return out;
}

Qrels remap_qrels(const Qrels& qrels, const MultitopicCorpus& joined) {
    if (joined.constituents.size() != joined.documents.size())
        throw std::invalid_argument("remap_qrels: constituent map does not cover every joined document");
    Qrels out;
    for (const auto& [query, relevant] : qrels.relevant) {
        auto& rel = out.relevant[query];
        for (std::size_t j = 0; j < joined.documents.size(); ++j) {
            for (const auto& source : joined.constituents[j]) {
                if (relevant.contains(source)) {
                    rel.insert(joined.documents[j].id);
                    break;
                }
            }
        }
    }
    return out;
}

void write_constituent_map(std::ostream& out, const MultitopicCorpus& joined) {
    out << "joined_id,source_id\n";
    for (std::size_t j = 0; j < joined.documents.size(); ++j)
        for (const auto& s : joined.constituents[j]) out << joined.documents[j].id << ',' << s << '\n';
}

JoinMode parse_join_mode(const std::string& name) {
    if (name == "window") return JoinMode::window;
    if (name == "rotations") return JoinMode::rotations;
    throw std::invalid_argument("unknown join mode '" + name + "' (expected window or rotations)");
}

const char* to_string(JoinMode mode) {
    return mode == JoinMode::window ? "window" : "rotations";
}

} // namespace msmir
