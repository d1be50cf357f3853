#ifndef WORDSETS_MODEL_HPP_
#define WORDSETS_MODEL_HPP_

#include "wordsets/error.hpp"
#include "wordsets/itemset_mining.hpp"
#include "wordsets/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wordsets {

/// Which denominator the Laplace-smoothed set probability uses.
///   paper_table: (count_c + 1) / (N_owner + |S|), one denominator per row.
///   per_class:   (count_c + 1) / (N_c + |S|).
/// |S| is the number of mined word sets and N_x the number of sets owned
/// by class x.
enum class SmoothingMode { paper_table, per_class };

inline std::string_view to_string(SmoothingMode mode) {
    return mode == SmoothingMode::paper_table ? "paper-table" : "per-class";
}

inline SmoothingMode parse_smoothing_mode(std::string_view s) {
    if (s == "paper-table") return SmoothingMode::paper_table;
    if (s == "per-class") return SmoothingMode::per_class;
    throw ModelError("unknown smoothing mode '" + std::string(s) + "'");
}

struct ClassStats {
    std::string name;
    std::size_t set_count = 0;  // N_c
    Rational prior;             // N_c / |S|

    friend bool operator==(const ClassStats&, const ClassStats&) = default;
};

/// Owner of every set plus the per-class totals derived from the owners.
struct SetAttribution {
    std::vector<std::size_t> owners;
    std::vector<ClassStats> stats;
    std::size_t total_sets = 0;
};

/// Index of the largest count; ties go to the earliest class.
inline std::size_t owner_of(const std::vector<std::size_t>& counts) {
    return static_cast<std::size_t>(std::max_element(counts.begin(), counts.end()) -
                                    counts.begin());
}

inline std::vector<ClassStats> class_stats_from_counts(const std::vector<std::string>& classes,
                                                       const std::vector<std::size_t>& set_counts) {
    std::size_t total = 0;
    for (auto n : set_counts) total += n;
    if (total == 0) throw ModelError("cannot compute priors without any word sets");
    std::vector<ClassStats> stats;
    for (std::size_t c = 0; c < classes.size(); ++c)
        stats.push_back({classes[c], set_counts[c],
                         Rational(static_cast<std::int64_t>(set_counts[c]),
                                  static_cast<std::int64_t>(total))});
    return stats;
}

inline SetAttribution attribute_sets(const std::vector<ItemSet>& itemsets,
                                     const std::vector<std::string>& classes) {
    if (itemsets.empty()) throw ModelError("no word sets to attribute");
    SetAttribution out;
    std::vector<std::size_t> owned(classes.size(), 0);
    for (const auto& s : itemsets) {
        if (s.class_counts.size() != classes.size())
            throw ModelError("word set has counts for " + std::to_string(s.class_counts.size()) +
                             " classes, expected " + std::to_string(classes.size()));
        if (std::all_of(s.class_counts.begin(), s.class_counts.end(),
                        [](std::size_t n) { return n == 0; }))
            throw ModelError("word set has zero occurrences in every class");
        const auto owner = owner_of(s.class_counts);
        out.owners.push_back(owner);
        ++owned[owner];
    }
    out.total_sets = itemsets.size();
    out.stats = class_stats_from_counts(classes, owned);
    return out;
}

struct TableEntry {
    ItemSet itemset;
    std::size_t owner = 0;
    std::vector<Rational> probs;  // aligned with the table's classes

    /// Class with the highest smoothed probability; ties go to the earliest
    /// class. Equals `owner` in paper-table mode.
    std::size_t best_class() const {
        return static_cast<std::size_t>(std::max_element(probs.begin(), probs.end()) -
                                        probs.begin());
    }

    friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

struct ProbabilityTable {
    std::vector<std::string> classes;
    std::vector<TableEntry> entries;
    std::vector<ClassStats> class_stats;
    std::size_t total_sets = 0;
    SmoothingMode mode = SmoothingMode::paper_table;

    std::size_t class_index(std::string_view name) const {
        auto it = std::find(classes.begin(), classes.end(), name);
        if (it == classes.end()) throw ModelError("unknown class '" + std::string(name) + "'");
        return static_cast<std::size_t>(it - classes.begin());
    }

    /// True when the stats were derived from exactly these entries
    /// (|entries| = |S| and N_c = sets owned by c). Tables built from an
    /// excerpt with externally supplied stats are not complete.
    bool is_complete() const {
        if (entries.size() != total_sets) return false;
        std::vector<std::size_t> owned(classes.size(), 0);
        for (const auto& e : entries) ++owned[e.owner];
        for (std::size_t c = 0; c < classes.size(); ++c)
            if (class_stats[c].set_count != owned[c]) return false;
        return true;
    }

    friend bool operator==(const ProbabilityTable&, const ProbabilityTable&) = default;
};

/// Smoothed probability of one set under every class.
inline std::vector<Rational> smoothed_probabilities(const std::vector<std::size_t>& counts,
                                                    std::size_t owner,
                                                    const std::vector<ClassStats>& stats,
                                                    std::size_t total_sets, SmoothingMode mode) {
    std::vector<Rational> probs;
    probs.reserve(counts.size());
    const auto s = static_cast<std::int64_t>(total_sets);
    for (std::size_t c = 0; c < counts.size(); ++c) {
        const auto n = static_cast<std::int64_t>(
            mode == SmoothingMode::paper_table ? stats[owner].set_count : stats[c].set_count);
        probs.emplace_back(static_cast<std::int64_t>(counts[c]) + 1, n + s);
    }
    return probs;
}

/// Builds the probability table. `attribution` normally comes from
/// attribute_sets(itemsets, classes); supplying other stats is allowed
/// (for instance to recompute a published excerpt) and yields a table whose
/// is_complete() is false.
inline ProbabilityTable build_table(std::vector<ItemSet> itemsets,
                                    const std::vector<std::string>& classes,
                                    const SetAttribution& attribution, SmoothingMode mode) {
    if (attribution.owners.size() != itemsets.size())
        throw ModelError("attribution does not cover every word set");
    if (attribution.stats.size() != classes.size())
        throw ModelError("attribution does not cover every class");
    if (attribution.total_sets == 0) throw ModelError("total number of word sets is zero");
    std::size_t sum = 0;
    for (const auto& st : attribution.stats) sum += st.set_count;
    if (sum != attribution.total_sets)
        throw ModelError("per-class set counts sum to " + std::to_string(sum) + ", not " +
                         std::to_string(attribution.total_sets));

    ProbabilityTable table;
    table.classes = classes;
    table.class_stats = attribution.stats;
    table.total_sets = attribution.total_sets;
    table.mode = mode;
    table.entries.reserve(itemsets.size());
    for (std::size_t i = 0; i < itemsets.size(); ++i) {
        const auto owner = attribution.owners[i];
        if (owner >= classes.size()) throw ModelError("owner index out of range");
        if (itemsets[i].class_counts.size() != classes.size())
            throw ModelError("word set counts do not match the class list");
        auto probs = smoothed_probabilities(itemsets[i].class_counts, owner, table.class_stats,
                                            table.total_sets, mode);
        table.entries.push_back({std::move(itemsets[i]), owner, std::move(probs)});
    }
    return table;
}

/// attribute_sets followed by build_table.
inline ProbabilityTable build_table(std::vector<ItemSet> itemsets,
                                    const std::vector<std::string>& classes, SmoothingMode mode) {
    const auto attribution = attribute_sets(itemsets, classes);
    return build_table(std::move(itemsets), classes, attribution, mode);
}

}  // namespace wordsets

#endif  // WORDSETS_MODEL_HPP_
