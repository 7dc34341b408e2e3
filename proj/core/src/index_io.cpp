#include "msmir/index_io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "msmir/error.hpp"

namespace msmir {

namespace {

constexpr std::array<char, 8> kMagic{'M', 'S', 'M', 'I', 'D', 'X', '\0', '\0'};

class Writer {
public:
    explicit Writer(std::ostream& out) : out_(out) {}

    void u8(std::uint8_t v) { out_.put(static_cast<char>(v)); }
    void u32(std::uint32_t v) { le(v); }
    void u64(std::uint64_t v) { le(v); }
    void f64(double v) { le(std::bit_cast<std::uint64_t>(v)); }
    void str(const std::string& s) {
        u64(s.size());
        out_.write(s.data(), static_cast<std::streamsize>(s.size()));
    }

private:
    template <typename T>
    void le(T v) {
        for (std::size_t i = 0; i < sizeof(T); ++i) out_.put(static_cast<char>((v >> (8 * i)) & 0xff));
    }
    std::ostream& out_;
};

class Reader {
public:
    Reader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

    std::uint8_t u8() { return static_cast<std::uint8_t>(byte()); }
    std::uint32_t u32() { return le<std::uint32_t>(); }
    std::uint64_t u64() { return le<std::uint64_t>(); }
    double f64() { return std::bit_cast<double>(le<std::uint64_t>()); }
    std::string str() {
        const std::uint64_t n = u64();
        if (n > (1ULL << 32)) fail("implausible string length");
        std::string s(n, '\0');
        in_.read(s.data(), static_cast<std::streamsize>(n));
        if (static_cast<std::uint64_t>(in_.gcount()) != n) fail("truncated index file");
        offset_ += n;
        return s;
    }
    std::uint64_t count(std::uint64_t limit, const char* what) {
        const std::uint64_t n = u64();
        if (n > limit) fail(std::string("implausible ") + what);
        return n;
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(source_, offset_, what); }

private:
    unsigned char byte() {
        const int c = in_.get();
        if (c == std::char_traits<char>::eof()) fail("truncated index file");
        ++offset_;
        return static_cast<unsigned char>(c);
    }
    template <typename T>
    T le() {
        T v = 0;
        for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<T>(byte()) << (8 * i);
        return v;
    }
    std::istream& in_;
    std::string source_;
    std::uint64_t offset_ = 0;  // reported in place of a line number
};

constexpr std::uint64_t kLimit = 1ULL << 40;

} // namespace

void save_index(std::ostream& out, const StoredIndex& index) {
    Writer w(out);
    out.write(kMagic.data(), kMagic.size());
    w.u32(kIndexFormatVersion);

    const auto& prep = index.prep;
    w.u64(prep.min_term_length);
    w.u64(prep.min_global_df);
    w.u8(prep.lowercase ? 1 : 0);
    w.u8(prep.stopwords ? 1 : 0);
    if (prep.stopwords) {
        std::vector<std::string> words(prep.stopwords->begin(), prep.stopwords->end());
        std::sort(words.begin(), words.end());
        w.u64(words.size());
        for (const auto& s : words) w.str(s);
    }

    const auto& vocab = index.vocabulary;
    w.u64(vocab.size());
    for (std::size_t i = 0; i < vocab.size(); ++i) {
        w.str(vocab.term(static_cast<TermId>(i)));
        w.u32(vocab.df(static_cast<TermId>(i)));
    }

    const auto& tdm = index.tdm;
    w.u8(static_cast<std::uint8_t>(tdm.kind));
    w.u8(tdm.kprime.is_full_rank() ? 1 : 0);
    w.u64(tdm.kprime.is_full_rank() ? 0 : tdm.kprime.value());
    w.u64(tdm.doc_ids.size());
    for (const auto& id : tdm.doc_ids) w.str(id);

    const auto& m = tdm.matrix;
    w.u64(static_cast<std::uint64_t>(m.rows()));
    w.u64(static_cast<std::uint64_t>(m.cols()));
    w.u64(m.nnz());
    for (Index p : m.col_ptr()) w.u64(static_cast<std::uint64_t>(p));
    for (Index r : m.row_indices()) w.u64(static_cast<std::uint64_t>(r));
    for (double v : m.values()) w.f64(v);
    if (!out) throw std::runtime_error("failed writing index");
}

void save_index_file(const std::string& path, const StoredIndex& index) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write index file: " + path);
    save_index(out, index);
}

StoredIndex load_index(std::istream& in, const std::string& source) {
    std::array<char, 8> magic{};
    in.read(magic.data(), magic.size());
    if (in.gcount() != static_cast<std::streamsize>(magic.size()) || magic != kMagic)
        throw ParseError(source, 0, "not an msmir index (bad magic)");
    Reader r(in, source);
    const std::uint32_t version = r.u32();
    if (version != kIndexFormatVersion)
        r.fail("unsupported index format version " + std::to_string(version) + " (expected " +
               std::to_string(kIndexFormatVersion) + ")");

    StoredIndex index;
    index.prep.min_term_length = r.u64();
    index.prep.min_global_df = r.u64();
    index.prep.lowercase = r.u8() != 0;
    if (r.u8() != 0) {
        std::unordered_set<std::string> words;
        const auto n = r.count(kLimit, "stopword count");
        for (std::uint64_t i = 0; i < n; ++i) words.insert(r.str());
        index.prep.stopwords = std::move(words);
    }

    const auto terms = r.count(kLimit, "vocabulary size");
    std::vector<std::string> words;
    std::unordered_map<std::string, std::uint32_t> df;
    words.reserve(terms);
    for (std::uint64_t i = 0; i < terms; ++i) {
        words.push_back(r.str());
        df[words.back()] = r.u32();
    }
    index.vocabulary = Vocabulary(std::move(words), df);

    auto& tdm = index.tdm;
    const auto kind = r.u8();
    if (kind > 1) r.fail("unknown tdm kind");
    tdm.kind = static_cast<TdmKind>(kind);
    const bool full = r.u8() != 0;
    const auto kp = r.u64();
    tdm.kprime = full ? KPrime::full_rank() : KPrime(kp);
    const auto docs = r.count(kLimit, "document count");
    tdm.doc_ids.reserve(docs);
    for (std::uint64_t i = 0; i < docs; ++i) tdm.doc_ids.push_back(r.str());

    const auto rows = static_cast<Index>(r.count(kLimit, "row count"));
    const auto cols = static_cast<Index>(r.count(kLimit, "column count"));
    const auto nnz = r.count(kLimit, "nonzero count");
    if (static_cast<std::uint64_t>(cols) != docs) r.fail("column count does not match document count");
    if (static_cast<std::size_t>(rows) != index.vocabulary.size()) r.fail("row count does not match vocabulary");
    std::vector<Index> col_ptr(static_cast<std::size_t>(cols) + 1);
    for (auto& p : col_ptr) p = static_cast<Index>(r.u64());
    std::vector<Index> row_idx(nnz);
    for (auto& i : row_idx) i = static_cast<Index>(r.u64());
    std::vector<double> values(nnz);
    for (auto& v : values) v = r.f64();
    try {
        tdm.matrix = SparseMatrix::from_csc(rows, cols, std::move(col_ptr), std::move(row_idx), std::move(values));
    } catch (const std::invalid_argument& e) {
        r.fail(std::string("corrupt matrix: ") + e.what());
    }
    tdm.column_norms = tdm.matrix.column_norms();
    tdm.vocabulary_fingerprint = index.vocabulary.fingerprint();
    return index;
}

StoredIndex load_index_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open index file: " + path);
    return load_index(in, path);
}

} // namespace msmir
