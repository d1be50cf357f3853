#ifndef WORDSETS_SYNTHETIC_HPP_
#define WORDSETS_SYNTHETIC_HPP_

#include "wordsets/corpus.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace wordsets {

/// Corpus with disjoint class vocabularies: each class owns
/// `patterns_per_class` two-word patterns, and every document repeats both
/// words of `patterns_per_doc` of its class's patterns twice, padded with
/// stopwords and words that occur once.
struct SyntheticCorpusSpec {
    std::size_t classes = 5;
    std::size_t docs_per_class = 20;
    std::size_t patterns_per_class = 8;
    std::size_t patterns_per_doc = 4;
    std::size_t noise_words_per_doc = 6;
    std::uint64_t seed = 2024;
};

inline std::string synthetic_class_name(std::size_t c) { return "topic" + std::to_string(c); }

/// The two words of pattern `j` of class `c`.
inline std::pair<std::string, std::string> synthetic_pattern(std::size_t c, std::size_t j) {
    const auto stem = "t" + std::to_string(c) + "p" + std::to_string(j);
    return {stem + "a", stem + "b"};
}

inline LabeledCorpus make_synthetic_corpus(const SyntheticCorpusSpec& spec = {}) {
    static const char* const kFiller[] = {"the", "of", "and", "with", "for", "is", "a", "to"};
    std::mt19937_64 rng(spec.seed);
    std::vector<Document> docs;
    for (std::size_t c = 0; c < spec.classes; ++c) {
        for (std::size_t d = 0; d < spec.docs_per_class; ++d) {
            std::vector<std::size_t> patterns(spec.patterns_per_class);
            for (std::size_t j = 0; j < patterns.size(); ++j) patterns[j] = j;
            for (std::size_t i = patterns.size(); i > 1; --i)
                std::swap(patterns[i - 1], patterns[rng() % i]);
            patterns.resize(std::min(spec.patterns_per_doc, patterns.size()));

            std::vector<std::string> words;
            for (auto j : patterns) {
                const auto [a, b] = synthetic_pattern(c, j);
                words.insert(words.end(), {a, b, a, b});
            }
            for (std::size_t k = 0; k < spec.noise_words_per_doc; ++k) {
                words.push_back("n" + std::to_string(c) + "d" + std::to_string(d) + "w" +
                                std::to_string(k));
                words.push_back(kFiller[rng() % std::size(kFiller)]);
            }
            for (std::size_t i = words.size(); i > 1; --i)
                std::swap(words[i - 1], words[rng() % i]);

            std::string text;
            for (const auto& w : words) {
                if (!text.empty()) text += ' ';
                text += w;
            }
            text += '.';
            char id[32];
            std::snprintf(id, sizeof id, "%s-%03zu", synthetic_class_name(c).c_str(), d);
            docs.push_back({id, synthetic_class_name(c), std::move(text)});
        }
    }
    return LabeledCorpus::from_documents(std::move(docs));
}

}  // namespace wordsets

#endif  // WORDSETS_SYNTHETIC_HPP_
