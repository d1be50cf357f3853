#ifndef WORDSETS_APRIORI_HPP_
#define WORDSETS_APRIORI_HPP_

#include "wordsets/error.hpp"
#include "wordsets/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace wordsets {

/// Minimum support as a share of the transactions, e.g. 1/20.
struct SupportFraction {
    Rational value;
};

/// Minimum support as a number of transactions.
struct SupportCount {
    std::size_t value;
};

struct MiningConfig {
    std::variant<SupportFraction, SupportCount> min_support = SupportCount{2};
    /// Only used by association_rules(); itemset mining ignores it.
    Rational min_confidence{3, 4};
    std::optional<std::size_t> max_itemset_size;
};

/// Absolute threshold for `n_transactions`: ceil(fraction × n) for the
/// fractional form.
inline std::size_t effective_support(const MiningConfig& config, std::size_t n_transactions) {
    if (const auto* f = std::get_if<SupportFraction>(&config.min_support)) {
        if (f->value <= 0 || f->value > 1)
            throw MiningError("support fraction " + to_string(f->value) +
                              " is outside (0, 1]");
        const auto count = ceil_of(f->value * static_cast<std::int64_t>(n_transactions));
        if (count < 1) throw MiningError("effective support is below 1");
        return static_cast<std::size_t>(count);
    }
    const auto count = std::get<SupportCount>(config.min_support).value;
    if (count < 1) throw MiningError("effective support is below 1");
    return count;
}

template <class Item>
struct FrequentItemset {
    std::vector<Item> items;  // sorted
    std::size_t support = 0;

    friend bool operator==(const FrequentItemset&, const FrequentItemset&) = default;
    friend auto operator<=>(const FrequentItemset& a, const FrequentItemset& b) {
        if (a.items.size() != b.items.size()) return a.items.size() <=> b.items.size();
        if (a.items != b.items) return a.items < b.items ? std::strong_ordering::less
                                                         : std::strong_ordering::greater;
        return a.support <=> b.support;
    }
};

template <class Item>
struct AssociationRule {
    std::vector<Item> antecedent;
    std::vector<Item> consequent;
    std::size_t support = 0;
    Rational confidence;
};

namespace detail {

template <class Item>
std::vector<std::vector<Item>> canonical_transactions(std::span<const std::vector<Item>> in) {
    std::vector<std::vector<Item>> out(in.begin(), in.end());
    for (auto& t : out) {
        std::sort(t.begin(), t.end());
        t.erase(std::unique(t.begin(), t.end()), t.end());
    }
    return out;
}

template <class Item>
std::size_t count_containing(const std::vector<std::vector<Item>>& transactions,
                             const std::vector<Item>& items) {
    std::size_t n = 0;
    for (const auto& t : transactions)
        if (std::includes(t.begin(), t.end(), items.begin(), items.end())) ++n;
    return n;
}

}  // namespace detail

/// Level-wise Apriori. Returns every itemset contained in at least
/// effective_support() transactions, with exact counts, ordered by size and
/// then lexicographically. Candidates of size k+1 are joined from frequent
/// k-sets sharing a (k-1)-prefix and discarded when any k-subset is
/// infrequent.
template <class Item>
std::vector<FrequentItemset<Item>> apriori(std::span<const std::vector<Item>> transactions,
                                           const MiningConfig& config) {
    if (transactions.empty()) throw MiningError("apriori needs at least one transaction");
    const std::size_t threshold = effective_support(config, transactions.size());
    const auto db = detail::canonical_transactions(transactions);
    const std::size_t cap = config.max_itemset_size.value_or(SIZE_MAX);

    std::vector<FrequentItemset<Item>> result;
    if (cap == 0) return result;

    std::map<Item, std::size_t> singles;
    for (const auto& t : db)
        for (const auto& item : t) ++singles[item];

    std::vector<FrequentItemset<Item>> level;
    for (const auto& [item, count] : singles)
        if (count >= threshold) level.push_back({{item}, count});

    for (std::size_t k = 1; !level.empty(); ++k) {
        result.insert(result.end(), level.begin(), level.end());
        if (k >= cap) break;

        // `level` is lexicographically sorted, so sets sharing a prefix are
        // contiguous.
        std::vector<std::vector<Item>> previous;
        previous.reserve(level.size());
        for (const auto& f : level) previous.push_back(f.items);

        auto is_frequent = [&](const std::vector<Item>& s) {
            return std::binary_search(previous.begin(), previous.end(), s);
        };

        std::vector<FrequentItemset<Item>> next;
        for (std::size_t i = 0; i < previous.size(); ++i) {
            for (std::size_t j = i + 1; j < previous.size(); ++j) {
                const auto& a = previous[i];
                const auto& b = previous[j];
                if (!std::equal(a.begin(), a.end() - 1, b.begin(), b.end() - 1)) break;

                std::vector<Item> candidate = a;
                candidate.push_back(b.back());

                bool pruned = false;
                std::vector<Item> subset;
                for (std::size_t drop = 0; drop + 2 < candidate.size() && !pruned; ++drop) {
                    subset.assign(candidate.begin(), candidate.end());
                    subset.erase(subset.begin() + static_cast<std::ptrdiff_t>(drop));
                    pruned = !is_frequent(subset);
                }
                if (pruned) continue;

                const auto support = detail::count_containing(db, candidate);
                if (support >= threshold) next.push_back({std::move(candidate), support});
            }
        }
        std::sort(next.begin(), next.end());
        level = std::move(next);
    }
    return result;
}

/// Frequent sets that are not a proper subset of another frequent set.
/// Requires a downward-closed input (as produced by apriori), so checking
/// the next size up is enough.
template <class Item>
std::vector<FrequentItemset<Item>> maximal_itemsets(
    const std::vector<FrequentItemset<Item>>& frequent) {
    std::map<std::vector<Item>, bool> covered;
    for (const auto& f : frequent) covered.emplace(f.items, false);

    for (const auto& f : frequent) {
        if (f.items.size() < 2) continue;
        for (std::size_t drop = 0; drop < f.items.size(); ++drop) {
            auto subset = f.items;
            subset.erase(subset.begin() + static_cast<std::ptrdiff_t>(drop));
            if (auto it = covered.find(subset); it != covered.end()) it->second = true;
        }
    }

    std::vector<FrequentItemset<Item>> out;
    for (const auto& f : frequent)
        if (!covered.at(f.items)) out.push_back(f);
    return out;
}

/// Rules A → S∖A for every frequent S with |S| ≥ 2 and every non-empty
/// proper subset A, kept when support(S) / support(A) ≥ min_confidence.
template <class Item>
std::vector<AssociationRule<Item>> association_rules(
    const std::vector<FrequentItemset<Item>>& frequent, const Rational& min_confidence) {
    std::map<std::vector<Item>, std::size_t> support;
    for (const auto& f : frequent) support.emplace(f.items, f.support);

    std::vector<AssociationRule<Item>> rules;
    for (const auto& f : frequent) {
        const std::size_t k = f.items.size();
        if (k < 2) continue;
        if (k > 20) throw MiningError("rule generation is limited to itemsets of 20 items");
        for (std::uint32_t mask = 1; mask + 1 < (1u << k); ++mask) {
            AssociationRule<Item> rule;
            for (std::size_t i = 0; i < k; ++i)
                ((mask >> i) & 1u ? rule.antecedent : rule.consequent).push_back(f.items[i]);
            auto it = support.find(rule.antecedent);
            if (it == support.end())
                throw MiningError("frequent itemsets are not downward closed");
            rule.support = f.support;
            rule.confidence = Rational(static_cast<std::int64_t>(f.support),
                                       static_cast<std::int64_t>(it->second));
            if (rule.confidence >= min_confidence) rules.push_back(std::move(rule));
        }
    }
    return rules;
}

}  // namespace wordsets

#endif  // WORDSETS_APRIORI_HPP_
