#ifndef WORDSETS_ITEMSET_MINING_HPP_
#define WORDSETS_ITEMSET_MINING_HPP_

#include "wordsets/apriori.hpp"
#include "wordsets/error.hpp"
#include "wordsets/preprocess.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace wordsets {

/// A mined word set with its occurrence count in every class's training
/// transactions (counts aligned with the class list).
struct ItemSet {
    KeywordSet items;
    std::vector<std::size_t> class_counts;

    friend bool operator==(const ItemSet&, const ItemSet&) = default;
};

/// Maximal frequent sets mined separately inside each class, merged when
/// several classes produce the same set, then counted against every
/// class's transactions. Output is ordered by items.
inline std::vector<ItemSet> mine_per_class(
    const std::vector<std::vector<Transaction>>& transactions_by_class,
    const MiningConfig& config) {
    std::map<KeywordSet, std::vector<std::size_t>> merged;

    std::vector<std::vector<KeywordSet>> keyword_sets(transactions_by_class.size());
    for (std::size_t c = 0; c < transactions_by_class.size(); ++c) {
        if (transactions_by_class[c].empty())
            throw MiningError("class #" + std::to_string(c) + " has no transactions");
        for (const auto& t : transactions_by_class[c]) keyword_sets[c].push_back(t.items);
    }

    for (const auto& sets : keyword_sets) {
        const auto frequent = apriori<std::string>(sets, config);
        for (auto& m : maximal_itemsets(frequent)) merged.try_emplace(std::move(m.items));
    }

    std::vector<ItemSet> out;
    out.reserve(merged.size());
    for (auto& [items, counts] : merged) {
        counts.resize(keyword_sets.size());
        for (std::size_t c = 0; c < keyword_sets.size(); ++c)
            counts[c] = detail::count_containing(keyword_sets[c], items);
        out.push_back({items, std::move(counts)});
    }
    return out;
}

/// Debug/interop dump: one transaction per line, items separated by spaces.
inline void write_transactions(std::ostream& out, const std::vector<Transaction>& transactions) {
    for (const auto& t : transactions) {
        for (std::size_t i = 0; i < t.items.size(); ++i) {
            if (i) out << ' ';
            out << t.items[i];
        }
        out << '\n';
    }
}

inline std::vector<KeywordSet> read_transactions(std::istream& in) {
    std::vector<KeywordSet> out;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream words(line);
        std::vector<std::string> items;
        for (std::string w; words >> w;) items.push_back(w);
        out.push_back(make_keyword_set(std::move(items)));
    }
    return out;
}

}  // namespace wordsets

#endif  // WORDSETS_ITEMSET_MINING_HPP_
