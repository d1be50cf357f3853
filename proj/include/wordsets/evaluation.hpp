#ifndef WORDSETS_EVALUATION_HPP_
#define WORDSETS_EVALUATION_HPP_

#include "wordsets/classifier.hpp"
#include "wordsets/corpus.hpp"
#include "wordsets/error.hpp"
#include "wordsets/itemset_mining.hpp"
#include "wordsets/model.hpp"
#include "wordsets/preprocess.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace wordsets {

struct PipelineConfig {
    PreprocessConfig preprocess;
    MiningConfig mining;
    SmoothingMode mode = SmoothingMode::paper_table;
};

/// Keyword transactions of a labeled corpus, grouped in class order.
inline std::vector<std::vector<Transaction>> transactions_by_class(
    const LabeledCorpus& corpus, const PreprocessConfig& config) {
    std::vector<std::vector<Transaction>> grouped(corpus.classes().size());
    for (const auto& d : corpus.documents()) {
        if (!d.label) throw CorpusError("document '" + d.id + "' is unlabeled");
        grouped[corpus.class_index(*d.label)].push_back(extract_keywords(d, config));
    }
    return grouped;
}

/// preprocess → mine per class → attribute → build.
inline ProbabilityTable train_table(const LabeledCorpus& train, const PipelineConfig& config) {
    if (train.classes().size() < 2) throw CorpusError("training needs at least two classes");
    const auto grouped = transactions_by_class(train, config.preprocess);
    for (std::size_t c = 0; c < grouped.size(); ++c)
        if (grouped[c].empty())
            throw CorpusError("class '" + train.classes()[c] + "' has no training documents");
    auto itemsets = mine_per_class(grouped, config.mining);
    if (itemsets.empty()) throw MiningError("no frequent word sets found in the training data");
    return build_table(std::move(itemsets), train.classes(), config.mode);
}

struct EvalReport {
    std::vector<std::string> classes;
    std::size_t n_test = 0;
    std::size_t n_correct = 0;
    Rational accuracy;
    /// Recall per class; empty when the class has no test documents.
    std::vector<std::optional<Rational>> per_class_accuracy;
    /// confusion[true][predicted]
    std::vector<std::vector<std::size_t>> confusion;
    std::vector<std::string> test_ids;
    std::vector<std::string> predictions;  // aligned with test_ids
    std::vector<std::string> train_ids;
    /// Test ids that also appear in train_ids.
    std::vector<std::string> leaked_ids;
};

inline EvalReport evaluate(const ProbabilityTable& table, const LabeledCorpus& test,
                           const PreprocessConfig& config,
                           std::span<const std::string> train_ids = {}) {
    if (test.empty()) throw EvaluationError("empty test set");
    const auto k = table.classes.size();

    EvalReport report;
    report.classes = table.classes;
    report.confusion.assign(k, std::vector<std::size_t>(k, 0));
    report.train_ids.assign(train_ids.begin(), train_ids.end());
    const std::set<std::string> train_set(train_ids.begin(), train_ids.end());

    for (const auto& d : test.documents()) {
        if (!d.label) throw EvaluationError("test document '" + d.id + "' is unlabeled");
        auto truth = std::find(table.classes.begin(), table.classes.end(), *d.label);
        if (truth == table.classes.end())
            throw EvaluationError("test document '" + d.id + "' has class '" + *d.label +
                                  "' which the model does not know");
        const auto result = classify(table, extract_keywords(d, config).items);
        ++report.confusion[static_cast<std::size_t>(truth - table.classes.begin())][result.winner];
        report.test_ids.push_back(d.id);
        report.predictions.push_back(result.winner_name());
        if (train_set.count(d.id)) report.leaked_ids.push_back(d.id);
    }

    report.n_test = test.size();
    for (std::size_t c = 0; c < k; ++c) {
        report.n_correct += report.confusion[c][c];
        std::size_t row = 0;
        for (auto v : report.confusion[c]) row += v;
        report.per_class_accuracy.push_back(
            row == 0 ? std::nullopt
                     : std::optional<Rational>(Rational(static_cast<std::int64_t>(report.confusion[c][c]),
                                                        static_cast<std::int64_t>(row))));
    }
    report.accuracy = Rational(static_cast<std::int64_t>(report.n_correct),
                               static_cast<std::int64_t>(report.n_test));
    return report;
}

struct CurvePoint {
    Rational fraction;
    std::uint64_t seed = 0;
    Rational accuracy;

    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

struct CurveSummary {
    Rational fraction;
    Rational mean;
    Rational min;
    Rational max;

    friend bool operator==(const CurveSummary&, const CurveSummary&) = default;
};

struct LearningCurve {
    std::vector<CurvePoint> points;      // fraction-major, seeds in given order
    std::vector<CurveSummary> summaries; // one per fraction

    friend bool operator==(const LearningCurve&, const LearningCurve&) = default;
};

/// One split/train/evaluate run per (fraction, seed).
inline LearningCurve learning_curve(const LabeledCorpus& corpus,
                                    const std::vector<Rational>& fractions,
                                    const std::vector<std::uint64_t>& seeds,
                                    const PipelineConfig& config,
                                    StratumRounding rounding = StratumRounding::tenths_then_nearest) {
    if (fractions.empty() || seeds.empty())
        throw EvaluationError("learning curve needs at least one fraction and one seed");
    for (std::size_t i = 0; i < fractions.size(); ++i) {
        if (fractions[i] <= 0 || fractions[i] >= 1)
            throw EvaluationError("fraction " + to_string(fractions[i]) + " is outside (0, 1)");
        if (i > 0 && fractions[i] <= fractions[i - 1])
            throw EvaluationError("fractions must be strictly increasing");
    }

    LearningCurve curve;
    for (const auto& fraction : fractions) {
        CurveSummary summary{fraction, 0, 1, 0};
        for (auto seed : seeds) {
            const auto parts = split(corpus, SplitSpec{fraction, seed, rounding});
            const auto table = train_table(parts.train, config);
            const auto train_ids = parts.train.ids();
            const auto report = evaluate(table, parts.test, config.preprocess, train_ids);
            curve.points.push_back({fraction, seed, report.accuracy});
            summary.mean += report.accuracy;
            summary.min = std::min(summary.min, report.accuracy);
            summary.max = std::max(summary.max, report.accuracy);
        }
        summary.mean /= static_cast<std::int64_t>(seeds.size());
        curve.summaries.push_back(summary);
    }
    return curve;
}

inline void write_confusion_csv(std::ostream& out, const EvalReport& report) {
    out << "true\\predicted";
    for (const auto& c : report.classes) out << ',' << c;
    out << '\n';
    for (std::size_t r = 0; r < report.classes.size(); ++r) {
        out << report.classes[r];
        for (auto v : report.confusion[r]) out << ',' << v;
        out << '\n';
    }
}

/// Accuracy row (fraction and seed left blank for a plain evaluation),
/// per-class accuracy and the confusion matrix, separated by blank lines.
inline void write_report_csv(std::ostream& out, const EvalReport& report,
                             std::optional<Rational> fraction = std::nullopt,
                             std::optional<std::uint64_t> seed = std::nullopt) {
    out << "fraction,seed,accuracy\n";
    if (fraction) out << to_fixed(*fraction, 2);
    out << ',';
    if (seed) out << *seed;
    out << ',' << to_fixed(report.accuracy, 6) << "\n\n";
    out << "class,n_test,accuracy\n";
    for (std::size_t c = 0; c < report.classes.size(); ++c) {
        std::size_t row = 0;
        for (auto v : report.confusion[c]) row += v;
        out << report.classes[c] << ',' << row << ',';
        if (report.per_class_accuracy[c]) out << to_fixed(*report.per_class_accuracy[c], 6);
        out << '\n';
    }
    out << '\n';
    write_confusion_csv(out, report);
}

inline void write_curve_csv(std::ostream& out, const LearningCurve& curve) {
    out << "fraction,seed,accuracy\n";
    for (const auto& p : curve.points)
        out << to_fixed(p.fraction, 2) << ',' << p.seed << ',' << to_fixed(p.accuracy, 6) << '\n';
    out << "\nfraction,mean,min,max\n";
    for (const auto& s : curve.summaries)
        out << to_fixed(s.fraction, 2) << ',' << to_fixed(s.mean, 6) << ',' << to_fixed(s.min, 6)
            << ',' << to_fixed(s.max, 6) << '\n';
}

}  // namespace wordsets

#endif  // WORDSETS_EVALUATION_HPP_
