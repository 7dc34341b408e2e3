#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "msmir/textprep.hpp"

namespace msmir {

/// Reads a SMART collection (".I <id>" blocks with ".T", ".A", ".W" text
/// fields). Other dotted fields (".B", ".K", ...) are skipped. Field texts are
/// joined with a newline. Used for both document and query files.
std::vector<RawDocument> parse_smart(std::istream& in, const std::string& source = "<stream>");
std::vector<RawDocument> parse_smart(std::string_view content, const std::string& source = "<string>");
std::vector<RawDocument> parse_smart_file(const std::string& path);

/// Writes documents as ".I <id>\n.W\n<text>\n" blocks.
void write_smart(std::ostream& out, const std::vector<RawDocument>& docs);

/// Relevance judgments: query id -> relevant document ids.
struct Qrels {
    std::map<std::string, std::set<std::string>> relevant;

    const std::set<std::string>& relevant_for(const std::string& query_id) const;
    std::size_t judged_pairs() const;
};

/// Reads "query_id doc_id [grade]" lines. A four-column TREC line
/// "query_id iteration doc_id grade" is accepted too. A missing grade means
/// relevant; a grade <= 0 means judged non-relevant.
Qrels read_qrels(std::istream& in, const std::string& source = "<stream>");
Qrels read_qrels_file(const std::string& path);
void write_qrels(std::ostream& out, const Qrels& qrels);

} // namespace msmir
