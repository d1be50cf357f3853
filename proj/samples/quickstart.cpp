// Trains on half of a synthetic corpus, classifies one held-out document
// and prints its score breakdown.

#include "wordsets/wordsets.hpp"

#include <iostream>

int main() {
    using namespace wordsets;

    const auto corpus = make_synthetic_corpus();
    const auto parts = split(corpus, {Rational(1, 2), 7});

    const PipelineConfig config;
    const auto table = train_table(parts.train, config);
    std::cout << table.total_sets << " word sets mined from " << parts.train.size()
              << " documents\n";

    const auto& doc = parts.test.documents().front();
    const auto keywords = extract_keywords(doc, config.preprocess);
    const auto result = classify(table, keywords.items);
    std::cout << doc.id << " (" << *doc.label << ") -> " << result.winner_name() << "\n\n";
    write_breakdown_csv(std::cout, result);

    const auto report = evaluate(table, parts.test, config.preprocess);
    std::cout << "\naccuracy on " << report.n_test << " held-out documents: "
              << to_fixed(report.accuracy, 4) << '\n';
}
