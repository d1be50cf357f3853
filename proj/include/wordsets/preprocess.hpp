#ifndef WORDSETS_PREPROCESS_HPP_
#define WORDSETS_PREPROCESS_HPP_

#include "wordsets/corpus.hpp"
#include "wordsets/error.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace wordsets {

/// Sorted, duplicate-free keywords.
using KeywordSet = std::vector<std::string>;

/// The keyword set of one document.
struct Transaction {
    std::string doc_id;
    KeywordSet items;

    friend bool operator==(const Transaction&, const Transaction&) = default;
};

inline KeywordSet make_keyword_set(std::vector<std::string> words) {
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return words;
}

/// Splits on every non-alphanumeric byte (so "well-formed" and "Dirac–Fock"
/// yield two tokens each), lowercases, and drops purely numeric tokens.
inline std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    auto flush = [&] {
        if (!current.empty() &&
            !std::all_of(current.begin(), current.end(),
                         [](unsigned char c) { return std::isdigit(c) != 0; }))
            tokens.push_back(current);
        current.clear();
    };
    for (unsigned char c : text) {
        if (c < 0x80 && std::isalnum(c))
            current += static_cast<char>(std::tolower(c));
        else
            flush();
    }
    flush();
    return tokens;
}

namespace detail {

inline bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace detail

/// Crude suffix stripping, applied in order:
///   -ies → -y, -sses → -ss, -xes/-ches/-shes → drop "es",
///   otherwise a trailing -s is dropped when the word is longer than three
///   letters and does not end in -ss, -us or -is.
/// "parentheses" becomes "parenthese". Idempotent.
inline std::string normalize_plural(std::string_view token) {
    using detail::ends_with;
    std::string word(token);
    if (word.size() > 4 && ends_with(word, "ies")) {
        word.resize(word.size() - 3);
        word += 'y';
    } else if (ends_with(word, "sses")) {
        word.resize(word.size() - 2);
    } else if (word.size() > 4 &&
               (ends_with(word, "xes") || ends_with(word, "ches") || ends_with(word, "shes"))) {
        word.resize(word.size() - 2);
    } else if (word.size() > 3 && ends_with(word, "s") && !ends_with(word, "ss") &&
               !ends_with(word, "us") && !ends_with(word, "is")) {
        word.pop_back();
    }
    return word;
}

/// `[a-z][a-z0-9-]*`
inline bool is_keyword(std::string_view s) {
    if (s.empty() || s[0] < 'a' || s[0] > 'z') return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-';
    });
}

class StopwordList {
public:
    StopwordList() = default;

    explicit StopwordList(std::set<std::string> words) : words_(std::move(words)) {
        for (const auto& w : words_)
            if (!is_keyword(w)) throw Error("stopword '" + w + "' is not a lowercase word");
    }

    /// One word per line; '#' starts a comment; blank lines ignored.
    static StopwordList parse(std::istream& in, const std::string& origin = "<stream>") {
        std::set<std::string> words;
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
            auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos) continue;
            auto last = line.find_last_not_of(" \t\r");
            std::string word = line.substr(first, last - first + 1);
            std::transform(word.begin(), word.end(), word.begin(),
                           [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
            if (!is_keyword(word))
                throw Error(origin + ":" + std::to_string(lineno) + ": invalid stopword '" +
                            word + "'");
            words.insert(std::move(word));
        }
        return StopwordList(std::move(words));
    }

    static StopwordList load(const std::filesystem::path& path) {
        std::ifstream in(path);
        if (!in) throw Error("cannot read stopword file '" + path.string() + "'");
        return parse(in, path.string());
    }

    /// Built-in English list; identical to data/stopwords.txt.
    static const StopwordList& english();

    bool contains(std::string_view word) const {
        return words_.find(std::string(word)) != words_.end();
    }
    std::size_t size() const noexcept { return words_.size(); }
    const std::set<std::string>& words() const noexcept { return words_; }

private:
    std::set<std::string> words_;
};

namespace detail {

inline constexpr std::string_view kEnglishStopwords = R"(
a about above according across actually after afterwards again against
ago all almost alone along already although always am among amongst an
and another any anybody anyhow anyone anything anyway anywhere are
around as at b be became because become becomes becoming been before
beforehand behind being below beside besides between beyond both but by
c can cannot could d did do does doing done down during e each eg
either else elsewhere enough especially etc even ever every everyone
everything everywhere f few for former formerly from further
furthermore g get gets getting give given gives go goes going got h had
has have having he hence her here hereafter hereby herein hers herself
him himself his how however i ie if in indeed instead into is it its
itself j just k l last later latter least less let like m many may me
meanwhile might mine moreover most mostly much must my myself n namely
neither never nevertheless next no nobody none nor not nothing now
nowhere o of off often on once one only onto or other others otherwise
our ours ourselves out over own p per perhaps q quite r rather really s
same seem seemed seeming seems several she should since so some somehow
someone something sometimes somewhere still such t than that the their
theirs them themselves then thence there thereafter thereby therefore
therein these they this those though through throughout thus to
together too toward towards u under until up upon us v very via w was
we were what whatever when whence whenever where whereas whereby
wherein whether which while who whoever whole whom whose why will with
within without would x y yet you your yours yourself yourselves z)";

}  // namespace detail

inline const StopwordList& StopwordList::english() {
    static const StopwordList list = [] {
        std::istringstream in{std::string(detail::kEnglishStopwords)};
        std::set<std::string> words;
        for (std::string w; in >> w;) words.insert(w);
        return StopwordList(std::move(words));
    }();
    return list;
}

struct PreprocessConfig {
    StopwordList stopwords = StopwordList::english();
    /// A word must occur at least this often in one document to become one
    /// of its keywords.
    std::size_t min_doc_freq = 2;
};

/// tokenize → normalize_plural → drop stopwords → keep words seen at least
/// min_doc_freq times. A stopword is dropped whether it matches before or
/// after plural stripping ("does" would otherwise survive as "doe").
inline Transaction extract_keywords(const Document& doc, const StopwordList& stopwords,
                                    std::size_t min_doc_freq) {
    if (min_doc_freq < 1) throw Error("min_doc_freq must be at least 1");
    std::map<std::string, std::size_t> freq;
    for (const auto& token : tokenize(doc.text)) {
        if (stopwords.contains(token)) continue;
        auto word = normalize_plural(token);
        if (!is_keyword(word) || stopwords.contains(word)) continue;
        ++freq[word];
    }
    Transaction t{doc.id, {}};
    for (const auto& [word, count] : freq)
        if (count >= min_doc_freq) t.items.push_back(word);
    return t;
}

inline Transaction extract_keywords(const Document& doc, const PreprocessConfig& config) {
    return extract_keywords(doc, config.stopwords, config.min_doc_freq);
}

}  // namespace wordsets

#endif  // WORDSETS_PREPROCESS_HPP_
