#include "msmir/smart_format.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "msmir/error.hpp"

namespace msmir {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

bool is_marker(std::string_view line) {
    return line.size() >= 2 && line[0] == '.' && std::isalpha(static_cast<unsigned char>(line[1])) &&
           (line.size() == 2 || line[2] == ' ' || line[2] == '\t' || line[2] == '\r');
}

} // namespace

std::vector<RawDocument> parse_smart(std::istream& in, const std::string& source) {
    std::vector<RawDocument> docs;
    enum class Field { none, text, skipped };
    Field field = Field::none;
    std::string line;
    std::size_t lineno = 0;
    std::vector<bool> has_line;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (is_marker(line)) {
            const char tag = line[1];
            if (tag == 'I') {
                auto id = trim(std::string_view(line).substr(2));
                if (id.empty()) throw ParseError(source, lineno, "'.I' without document id");
                docs.push_back(RawDocument{std::string(id), {}});
                has_line.push_back(false);
                field = Field::none;
                continue;
            }
            if (docs.empty()) throw ParseError(source, lineno, "field marker before any '.I' line");
            field = (tag == 'T' || tag == 'A' || tag == 'W') ? Field::text : Field::skipped;
            continue;
        }
        if (field == Field::none) {
            if (trim(line).empty()) continue;
            if (docs.empty()) throw ParseError(source, lineno, "text before any '.I' line");
            throw ParseError(source, lineno, "text outside a field in document " + docs.back().id);
        }
        if (field == Field::skipped) continue;
        auto& text = docs.back().text;
        if (has_line.back()) text += '\n';
        has_line.back() = true;
        text += line;
    }
    for (auto& d : docs) d.text = std::string(trim(d.text));
    return docs;
}

std::vector<RawDocument> parse_smart(std::string_view content, const std::string& source) {
    std::istringstream in{std::string(content)};
    return parse_smart(in, source);
}

std::vector<RawDocument> parse_smart_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open SMART file: " + path);
    return parse_smart(in, path);
}

void write_smart(std::ostream& out, const std::vector<RawDocument>& docs) {
    for (const auto& d : docs) {
        out << ".I " << d.id << "\n.W\n";
        if (!d.text.empty()) out << d.text << '\n';
    }
}

const std::set<std::string>& Qrels::relevant_for(const std::string& query_id) const {
    static const std::set<std::string> empty;
    auto it = relevant.find(query_id);
    return it == relevant.end() ? empty : it->second;
}

std::size_t Qrels::judged_pairs() const {
    std::size_t n = 0;
    for (const auto& [q, docs] : relevant) n += docs.size();
    return n;
}

Qrels read_qrels(std::istream& in, const std::string& source) {
    Qrels qrels;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream fields(line);
        std::vector<std::string> parts;
        for (std::string f; fields >> f;) parts.push_back(f);
        if (parts.empty() || parts[0][0] == '#') continue;
        std::string query, doc;
        double grade = 1.0;
        auto parse_grade = [&](const std::string& s) {
            try {
                std::size_t used = 0;
                grade = std::stod(s, &used);
                if (used != s.size()) throw std::invalid_argument(s);
            } catch (const std::exception&) {
                throw ParseError(source, lineno, "bad relevance grade '" + s + "'");
            }
        };
        switch (parts.size()) {
        case 2: query = parts[0]; doc = parts[1]; break;
        case 3: query = parts[0]; doc = parts[1]; parse_grade(parts[2]); break;
        case 4: query = parts[0]; doc = parts[2]; parse_grade(parts[3]); break;
        default: throw ParseError(source, lineno, "expected 'query_id doc_id [grade]'");
        }
        auto& rel = qrels.relevant[query];
        if (grade > 0) rel.insert(doc);
    }
    return qrels;
}

Qrels read_qrels_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open qrels file: " + path);
    return read_qrels(in, path);
}

void write_qrels(std::ostream& out, const Qrels& qrels) {
    for (const auto& [q, docs] : qrels.relevant)
        for (const auto& d : docs) out << q << ' ' << d << " 1\n";
}

} // namespace msmir
