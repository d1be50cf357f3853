#ifndef WORDSETS_CLASSIFIER_HPP_
#define WORDSETS_CLASSIFIER_HPP_

#include "wordsets/model.hpp"
#include "wordsets/preprocess.hpp"
#include "wordsets/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace wordsets {

/// |set ∩ keywords| / |set|. Both ranges must be sorted.
inline Rational match_fraction(const KeywordSet& set_items, const KeywordSet& keywords) {
    if (set_items.empty()) throw Error("match_fraction of an empty word set");
    std::size_t common = 0;
    auto a = set_items.begin();
    auto b = keywords.begin();
    while (a != set_items.end() && b != keywords.end()) {
        if (*a < *b) {
            ++a;
        } else if (*b < *a) {
            ++b;
        } else {
            ++common;
            ++a;
            ++b;
        }
    }
    return Rational(static_cast<std::int64_t>(common), static_cast<std::int64_t>(set_items.size()));
}

/// A set counts as present in a document when at least half its words are.
inline bool is_matched(const KeywordSet& set_items, const KeywordSet& keywords) {
    return match_fraction(set_items, keywords) >= Rational(1, 2);
}

/// Per-class score of one document.
///   pval: sets whose most probable class is this one; nval = |S| - pval
///   p:    of those, sets matched by the document
///   n:    of the others, sets not matched
///   total = 100·p/pval + 100·n/nval + prior (a zero denominator gives 0)
struct ScoreBreakdown {
    std::string class_name;
    std::size_t pval = 0;
    std::size_t nval = 0;
    std::size_t p = 0;
    std::size_t n = 0;
    Rational positive_pct;
    Rational negative_pct;
    Rational prior;
    Rational total;

    static ScoreBreakdown from_counts(std::string class_name, std::size_t pval, std::size_t nval,
                                      std::size_t p, std::size_t n, Rational prior) {
        auto pct = [](std::size_t part, std::size_t whole) {
            return whole == 0 ? Rational(0)
                              : Rational(static_cast<std::int64_t>(part) * 100,
                                         static_cast<std::int64_t>(whole));
        };
        ScoreBreakdown b{std::move(class_name), pval, nval, p, n, pct(p, pval), pct(n, nval),
                         prior, {}};
        b.total = b.positive_pct + b.negative_pct + b.prior;
        return b;
    }

    friend bool operator==(const ScoreBreakdown&, const ScoreBreakdown&) = default;
};

struct ClassificationResult {
    std::vector<ScoreBreakdown> breakdowns;
    std::size_t winner = 0;
    /// Every class sharing the top total, in class order; size > 1 is a tie.
    std::vector<std::size_t> top_classes;
    /// Indices of table entries that passed the 50% rule.
    std::vector<std::size_t> matched_sets;
    /// No table entry matched (always the case for an empty keyword set).
    bool low_evidence = false;

    bool tie() const noexcept { return top_classes.size() > 1; }
    const std::string& winner_name() const { return breakdowns.at(winner).class_name; }
};

namespace detail {

inline ScoreBreakdown score_from_flags(const ProbabilityTable& table,
                                       const std::vector<std::size_t>& best,
                                       const std::vector<bool>& matched, std::size_t cls) {
    std::size_t pval = 0, nval = 0, p = 0, n = 0;
    for (std::size_t s = 0; s < best.size(); ++s) {
        if (best[s] == cls) {
            ++pval;
            if (matched[s]) ++p;
        } else {
            ++nval;
            if (!matched[s]) ++n;
        }
    }
    return ScoreBreakdown::from_counts(table.classes[cls], pval, nval, p, n,
                                       table.class_stats[cls].prior);
}

}  // namespace detail

inline ScoreBreakdown score_class(const ProbabilityTable& table, const KeywordSet& keywords,
                                  std::size_t cls) {
    if (table.entries.empty()) throw Error("cannot score against an empty table");
    if (cls >= table.classes.size()) throw Error("class index out of range");
    std::vector<std::size_t> best;
    std::vector<bool> matched;
    for (const auto& e : table.entries) {
        best.push_back(e.best_class());
        matched.push_back(is_matched(e.itemset.items, keywords));
    }
    return detail::score_from_flags(table, best, matched, cls);
}

/// Scores every class and picks the highest total; ties go to the earliest
/// class and are reported through top_classes.
inline ClassificationResult classify(const ProbabilityTable& table, const KeywordSet& keywords) {
    if (table.classes.empty()) throw Error("table has no classes");
    if (table.entries.empty()) throw Error("cannot classify against an empty table");

    std::vector<std::size_t> best;
    std::vector<bool> matched;
    ClassificationResult result;
    for (std::size_t s = 0; s < table.entries.size(); ++s) {
        const auto& e = table.entries[s];
        best.push_back(e.best_class());
        matched.push_back(is_matched(e.itemset.items, keywords));
        if (matched.back()) result.matched_sets.push_back(s);
    }
    result.low_evidence = result.matched_sets.empty();

    for (std::size_t c = 0; c < table.classes.size(); ++c)
        result.breakdowns.push_back(detail::score_from_flags(table, best, matched, c));

    Rational top = result.breakdowns[0].total;
    for (const auto& b : result.breakdowns) top = std::max(top, b.total);
    for (std::size_t c = 0; c < result.breakdowns.size(); ++c)
        if (result.breakdowns[c].total == top) result.top_classes.push_back(c);
    result.winner = result.top_classes.front();
    return result;
}

/// class,pval,nval,p,n,positive_pct,negative_pct,prior,total with two
/// decimals.
inline void write_breakdown_csv(std::ostream& out, const ClassificationResult& result) {
    out << "class,pval,nval,p,n,positive_pct,negative_pct,prior,total\n";
    for (const auto& b : result.breakdowns) {
        out << b.class_name << ',' << b.pval << ',' << b.nval << ',' << b.p << ',' << b.n << ','
            << to_fixed(b.positive_pct, 2) << ',' << to_fixed(b.negative_pct, 2) << ','
            << to_fixed(b.prior, 2) << ',' << to_fixed(b.total, 2) << '\n';
    }
}

}  // namespace wordsets

#endif  // WORDSETS_CLASSIFIER_HPP_
