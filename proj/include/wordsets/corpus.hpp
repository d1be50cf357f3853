#ifndef WORDSETS_CORPUS_HPP_
#define WORDSETS_CORPUS_HPP_

#include "wordsets/error.hpp"
#include "wordsets/rational.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace wordsets {

struct Document {
    std::string id;
    std::optional<std::string> label;
    std::string text;

    friend bool operator==(const Document&, const Document&) = default;
};

/// Documents ordered by id, plus the sorted list of class names they use.
class LabeledCorpus {
public:
    LabeledCorpus() = default;

    /// Validates ids and bodies, sorts by id and derives the class list
    /// from the labels present.
    static LabeledCorpus from_documents(std::vector<Document> docs) {
        std::set<std::string> labels;
        for (const auto& d : docs)
            if (d.label) labels.insert(*d.label);
        return from_documents(std::move(docs),
                              std::vector<std::string>(labels.begin(), labels.end()));
    }

    /// Same, but with an explicit class list (which must cover every label).
    static LabeledCorpus from_documents(std::vector<Document> docs,
                                        std::vector<std::string> classes) {
        for (const auto& d : docs) {
            if (is_blank(d.text)) throw CorpusError("document '" + d.id + "' has an empty body");
            if (d.label && std::find(classes.begin(), classes.end(), *d.label) == classes.end())
                throw CorpusError("document '" + d.id + "' has unknown class '" + *d.label + "'");
        }
        std::sort(docs.begin(), docs.end(),
                  [](const Document& a, const Document& b) { return a.id < b.id; });
        for (std::size_t i = 1; i < docs.size(); ++i)
            if (docs[i].id == docs[i - 1].id)
                throw CorpusError("duplicate document id '" + docs[i].id + "'");
        if (std::set<std::string>(classes.begin(), classes.end()).size() != classes.size())
            throw CorpusError("duplicate class name in class list");

        LabeledCorpus corpus;
        corpus.documents_ = std::move(docs);
        corpus.classes_ = std::move(classes);
        return corpus;
    }

    const std::vector<Document>& documents() const noexcept { return documents_; }
    const std::vector<std::string>& classes() const noexcept { return classes_; }
    std::size_t size() const noexcept { return documents_.size(); }
    bool empty() const noexcept { return documents_.empty(); }

    std::size_t class_index(const std::string& name) const {
        auto it = std::find(classes_.begin(), classes_.end(), name);
        if (it == classes_.end()) throw CorpusError("unknown class '" + name + "'");
        return static_cast<std::size_t>(it - classes_.begin());
    }

    /// Number of documents per class, aligned with classes().
    std::vector<std::size_t> class_counts() const {
        std::vector<std::size_t> counts(classes_.size(), 0);
        for (const auto& d : documents_)
            if (d.label) ++counts[class_index(*d.label)];
        return counts;
    }

    std::vector<std::string> ids() const {
        std::vector<std::string> out;
        out.reserve(documents_.size());
        for (const auto& d : documents_) out.push_back(d.id);
        return out;
    }

    friend bool operator==(const LabeledCorpus&, const LabeledCorpus&) = default;

private:
    static bool is_blank(const std::string& s) {
        return std::all_of(s.begin(), s.end(),
                           [](unsigned char c) { return std::isspace(c) != 0; });
    }

    std::vector<Document> documents_;
    std::vector<std::string> classes_;
};

enum class CorpusFormat { directory_per_class, delimited_file };

namespace detail {

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CorpusError("cannot read '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw CorpusError("cannot read '" + path.string() + "'");
    return ss.str();
}

/// RFC 4180 records: comma separated, double-quoted fields may contain
/// commas, newlines and doubled quotes.
inline std::vector<std::vector<std::string>> parse_csv(const std::string& data,
                                                       const std::string& origin) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false;
    bool field_started = false;
    std::size_t line = 1;

    auto end_field = [&] {
        row.push_back(std::move(field));
        field.clear();
        field_started = false;
    };
    auto end_row = [&] {
        end_field();
        if (!(row.size() == 1 && row[0].empty())) rows.push_back(std::move(row));
        row.clear();
    };

    for (std::size_t i = 0; i < data.size(); ++i) {
        const char c = data[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < data.size() && data[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                if (c == '\n') ++line;
                field += c;
            }
            continue;
        }
        switch (c) {
        case '"':
            if (field_started)
                throw CorpusError(origin + ":" + std::to_string(line) + ": stray quote");
            quoted = true;
            field_started = true;
            break;
        case ',':
            end_field();
            break;
        case '\r':
            break;
        case '\n':
            end_row();
            ++line;
            break;
        default:
            field += c;
            field_started = true;
        }
    }
    if (quoted) throw CorpusError(origin + ": unterminated quoted field");
    if (field_started || !row.empty()) end_row();
    return rows;
}

inline LabeledCorpus load_delimited(const std::filesystem::path& path) {
    const auto rows = parse_csv(read_file(path), path.string());
    if (rows.empty()) throw CorpusError("no documents found in '" + path.string() + "'");
    if (rows[0] != std::vector<std::string>{"id", "label", "text"})
        throw CorpusError(path.string() + ": header must be 'id,label,text'");

    std::vector<Document> docs;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.size() != 3)
            throw CorpusError(path.string() + ": row " + std::to_string(r) + " has " +
                              std::to_string(row.size()) + " fields, expected 3");
        Document d;
        d.id = row[0].empty() ? std::to_string(r) : row[0];
        if (!row[1].empty()) d.label = row[1];
        d.text = row[2];
        docs.push_back(std::move(d));
    }
    if (docs.empty()) throw CorpusError("no documents found in '" + path.string() + "'");
    return LabeledCorpus::from_documents(std::move(docs));
}

inline LabeledCorpus load_directory(const std::filesystem::path& root) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(root)) throw CorpusError("'" + root.string() + "' is not a directory");

    std::vector<Document> docs;
    for (const auto& class_dir : fs::directory_iterator(root)) {
        if (!class_dir.is_directory()) continue;
        const auto label = class_dir.path().filename().string();
        if (label.empty() || label[0] == '.') continue;
        for (const auto& file : fs::directory_iterator(class_dir.path())) {
            if (!file.is_regular_file() || file.path().extension() != ".txt") continue;
            Document d;
            d.id = label + "/" + file.path().stem().string();
            d.label = label;
            d.text = read_file(file.path());
            if (std::all_of(d.text.begin(), d.text.end(),
                            [](unsigned char c) { return std::isspace(c) != 0; }))
                throw CorpusError("document '" + file.path().string() + "' has an empty body");
            docs.push_back(std::move(d));
        }
    }
    if (docs.empty()) throw CorpusError("no documents found in '" + root.string() + "'");
    return LabeledCorpus::from_documents(std::move(docs));
}

}  // namespace detail

/// Loads `<root>/<class>/<doc>.txt` trees or an `id,label,text` CSV file.
/// Directory-format ids are "<class>/<file stem>".
inline LabeledCorpus load_corpus(const std::filesystem::path& root, CorpusFormat format) {
    if (!std::filesystem::exists(root))
        throw CorpusError("path '" + root.string() + "' does not exist");
    switch (format) {
    case CorpusFormat::directory_per_class:
        return detail::load_directory(root);
    case CorpusFormat::delimited_file:
        return detail::load_delimited(root);
    }
    throw CorpusError("unknown corpus format");
}

/// Directory → directory_per_class, anything else → delimited_file.
inline LabeledCorpus load_corpus(const std::filesystem::path& root) {
    return load_corpus(root, std::filesystem::is_directory(root)
                                 ? CorpusFormat::directory_per_class
                                 : CorpusFormat::delimited_file);
}

/// How fraction × class size becomes a whole number of training documents.
enum class StratumRounding {
    /// Round half away from zero.
    nearest,
    /// Round to one decimal first, then to the nearest integer (both half
    /// away from zero): 0.35 × 27 = 9.45 → 9.5 → 10.
    tenths_then_nearest,
};

struct SplitSpec {
    Rational training_fraction{1, 2};
    std::uint64_t seed = 0;
    StratumRounding rounding = StratumRounding::tenths_then_nearest;
};

inline std::size_t stratum_train_size(std::size_t class_size, const Rational& fraction,
                                      StratumRounding rounding) {
    const Rational exact = fraction * static_cast<std::int64_t>(class_size);
    switch (rounding) {
    case StratumRounding::nearest:
        return static_cast<std::size_t>(round_half_away(exact));
    case StratumRounding::tenths_then_nearest:
        return static_cast<std::size_t>(
            round_half_away(Rational(round_half_away(exact * 10), 10)));
    }
    return 0;
}

struct TrainTestSplit {
    LabeledCorpus train;
    LabeledCorpus test;
};

/// Stratified split: each class contributes stratum_train_size() documents
/// to train, picked by a seeded Fisher-Yates shuffle of that class.
inline TrainTestSplit split(const LabeledCorpus& corpus, const SplitSpec& spec) {
    if (spec.training_fraction <= 0 || spec.training_fraction >= 1)
        throw CorpusError("training fraction must lie strictly between 0 and 1");

    const auto& classes = corpus.classes();
    std::vector<std::vector<const Document*>> by_class(classes.size());
    for (const auto& d : corpus.documents()) {
        if (!d.label) throw CorpusError("document '" + d.id + "' is unlabeled");
        by_class[corpus.class_index(*d.label)].push_back(&d);
    }

    std::mt19937_64 rng(spec.seed);
    std::vector<Document> train, test;
    for (std::size_t c = 0; c < classes.size(); ++c) {
        auto& docs = by_class[c];
        if (docs.empty()) throw CorpusError("class '" + classes[c] + "' has no documents");
        const auto n_train = stratum_train_size(docs.size(), spec.training_fraction, spec.rounding);
        if (n_train == 0)
            throw CorpusError("training fraction " + to_string(spec.training_fraction) +
                              " leaves class '" + classes[c] + "' with no training documents");
        // Not std::shuffle: its algorithm is unspecified, this one is
        // reproducible across standard libraries.
        for (std::size_t i = docs.size(); i > 1; --i)
            std::swap(docs[i - 1], docs[rng() % i]);
        for (std::size_t i = 0; i < docs.size(); ++i)
            (i < n_train ? train : test).push_back(*docs[i]);
    }
    return {LabeledCorpus::from_documents(std::move(train), classes),
            LabeledCorpus::from_documents(std::move(test), classes)};
}

}  // namespace wordsets

#endif  // WORDSETS_CORPUS_HPP_
