#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "msmir/msm.hpp"
#include "msmir/textprep.hpp"

namespace msmir {

inline constexpr std::uint32_t kIndexFormatVersion = 1;

/// A persisted term-by-document matrix together with the vocabulary and
/// tokenization settings needed to vectorize queries against it.
struct StoredIndex {
    Vocabulary vocabulary;
    PrepConfig prep;
    Tdm tdm;
};

/// Little-endian binary layout: "MSMIDX\0\0" magic, u32 format version, prep
/// settings, vocabulary, tdm kind and k', document ids, CSC arrays with raw
/// IEEE-754 doubles. No timestamps, so equal inputs give equal bytes.
void save_index(std::ostream& out, const StoredIndex& index);
void save_index_file(const std::string& path, const StoredIndex& index);

/// Throws ParseError on bad magic, unsupported version or truncation.
StoredIndex load_index(std::istream& in, const std::string& source = "<stream>");
StoredIndex load_index_file(const std::string& path);

} // namespace msmir
