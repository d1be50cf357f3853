#include "wordsets/evaluation.hpp"
#include "wordsets/synthetic.hpp"

#include <gtest/gtest.h>

#include <map>
#include <regex>
#include <set>
#include <sstream>

namespace wordsets {
namespace {

TEST(Evaluate, SeparableTestSetIsPerfect) {
    const auto table = build_table({{{"alpha", "beta"}, {2, 0}}, {{"gamma", "delta"}, {0, 2}}},
                                   {"A", "B"}, SmoothingMode::paper_table);
    const auto test = LabeledCorpus::from_documents(
        {{"1", "A", "alpha alpha beta beta"}, {"2", "B", "gamma gamma delta delta"},
         {"3", "A", "alpha beta alpha beta noise"}},
        {"A", "B"});
    const auto report = evaluate(table, test, {});
    EXPECT_EQ(report.accuracy, Rational(1));
    EXPECT_EQ(report.n_test, 3u);
    EXPECT_EQ(report.confusion, (std::vector<std::vector<std::size_t>>{{2, 0}, {0, 1}}));
    EXPECT_EQ(report.predictions, (std::vector<std::string>{"A", "B", "A"}));
}

TEST(Evaluate, ConstantClassifierScoresClassShare) {
    // B owns no set and {zzz} never matches, so every document scores
    // A = 0 + 0 + 1 and B = 0 + 100 + 0: B always wins.
    const auto table = build_table({{{"zzz"}, {2, 0}}}, {"A", "B"}, SmoothingMode::paper_table);
    const auto test = LabeledCorpus::from_documents(
        {{"1", "A", "one"}, {"2", "A", "two"}, {"3", "A", "three"}, {"4", "B", "four"}},
        {"A", "B"});
    const auto report = evaluate(table, test, {});
    EXPECT_EQ(report.accuracy, Rational(1, 4));
    EXPECT_EQ(report.per_class_accuracy[0], Rational(0));
    EXPECT_EQ(report.per_class_accuracy[1], Rational(1));
}

TEST(Evaluate, ConfusionInvariantsAndLeakage) {
    const auto corpus = make_synthetic_corpus();
    const auto parts = split(corpus, {Rational(1, 2), 3});
    const auto table = train_table(parts.train, {});
    auto ids = parts.train.ids();
    ids.push_back(parts.test.documents()[0].id);
    const auto report = evaluate(table, parts.test, {}, ids);
    EXPECT_EQ(report.leaked_ids, (std::vector<std::string>{parts.test.documents()[0].id}));

    std::size_t total = 0, trace = 0;
    const auto class_counts = parts.test.class_counts();
    for (std::size_t r = 0; r < report.confusion.size(); ++r) {
        std::size_t row = 0;
        for (auto v : report.confusion[r]) row += v;
        EXPECT_EQ(row, class_counts[r]);
        total += row;
        trace += report.confusion[r][r];
    }
    EXPECT_EQ(total, report.n_test);
    EXPECT_EQ(report.accuracy, Rational(static_cast<std::int64_t>(trace),
                                        static_cast<std::int64_t>(total)));
    EXPECT_EQ(evaluate(table, parts.test, {}).confusion, report.confusion);
}

TEST(Evaluate, Errors) {
    const auto table = build_table({{{"x"}, {2, 0}}}, {"A", "B"}, SmoothingMode::paper_table);
    EXPECT_THROW(evaluate(table, LabeledCorpus::from_documents({}, {"A"}), {}), EvaluationError);
    EXPECT_THROW(evaluate(table, LabeledCorpus::from_documents({{"1", "C", "x"}}), {}),
                 EvaluationError);
}

// Counts raw occurrences of planted words with a regex, independent of the
// tokenizer and the mining pipeline.
TEST(SyntheticCorpus, PlantedPatternsAreClassExclusive) {
    const SyntheticCorpusSpec spec;
    const auto corpus = make_synthetic_corpus(spec);
    EXPECT_EQ(corpus.size(), 100u);
    EXPECT_EQ(corpus.classes().size(), 5u);
    const std::regex planted(R"(\bt(\d+)p(\d+)[ab]\b)");
    std::map<std::string, std::set<std::string>> classes_using;
    for (const auto& d : corpus.documents()) {
        std::map<std::string, int> per_doc;
        for (std::sregex_iterator it(d.text.begin(), d.text.end(), planted), end; it != end; ++it) {
            classes_using["topic" + (*it)[1].str()].insert(*d.label);
            ++per_doc[it->str()];
        }
        EXPECT_EQ(per_doc.size(), 2 * spec.patterns_per_doc);
        for (const auto& [w, n] : per_doc) EXPECT_EQ(n, 2) << w;
    }
    for (const auto& [owner, users] : classes_using)
        EXPECT_EQ(users, std::set<std::string>{owner});
}

TEST(TrainTable, EndToEndSyntheticAccuracy) {
    const auto corpus = make_synthetic_corpus();
    const auto parts = split(corpus, {Rational(1, 2), 1});
    EXPECT_EQ(parts.train.size(), 50u);
    const auto table = train_table(parts.train, {});
    EXPECT_TRUE(table.is_complete());
    for (const auto& st : table.class_stats) EXPECT_GE(st.set_count, 1u);
    const auto report = evaluate(table, parts.test, {});
    EXPECT_GE(to_double(report.accuracy), 0.95);
}

TEST(TrainTable, NeedsTwoClassesAndSomeSets) {
    EXPECT_THROW(train_table(LabeledCorpus::from_documents({{"1", "A", "x x"}}), {}), CorpusError);
    EXPECT_THROW(train_table(LabeledCorpus::from_documents({{"1", "A", "x x"}, {"2", "B", "y y"}}), {}),
                 MiningError);
}

TEST(LearningCurve, SinglePointEqualsDirectEvaluation) {
    const auto corpus = make_synthetic_corpus();
    const PipelineConfig config;
    const auto curve = learning_curve(corpus, {Rational(3, 10)}, {17}, config);
    ASSERT_EQ(curve.points.size(), 1u);
    const auto parts = split(corpus, {Rational(3, 10), 17});
    const auto report = evaluate(train_table(parts.train, config), parts.test, config.preprocess);
    EXPECT_EQ(curve.points[0].accuracy, report.accuracy);
    EXPECT_EQ(curve.summaries[0].mean, report.accuracy);
}

TEST(LearningCurve, DeterministicWithSummaries) {
    SyntheticCorpusSpec spec;
    spec.patterns_per_doc = 2;
    const auto corpus = make_synthetic_corpus(spec);
    const std::vector<Rational> fractions{Rational(1, 10), Rational(3, 10), Rational(1, 2)};
    const std::vector<std::uint64_t> seeds{1, 2, 3};
    const auto a = learning_curve(corpus, fractions, seeds, {});
    const auto b = learning_curve(corpus, fractions, seeds, {});
    EXPECT_EQ(a, b);
    ASSERT_EQ(a.points.size(), 9u);
    ASSERT_EQ(a.summaries.size(), 3u);
    for (std::size_t f = 0; f < 3; ++f) {
        Rational sum = 0;
        for (std::size_t s = 0; s < 3; ++s) {
            const auto& p = a.points[f * 3 + s];
            EXPECT_EQ(p.fraction, fractions[f]);
            EXPECT_EQ(p.seed, seeds[s]);
            sum += p.accuracy;
            EXPECT_LE(a.summaries[f].min, p.accuracy);
            EXPECT_GE(a.summaries[f].max, p.accuracy);
        }
        EXPECT_EQ(a.summaries[f].mean, sum / 3);
    }
    std::ostringstream out;
    write_curve_csv(out, a);
    EXPECT_EQ(out.str().rfind("fraction,seed,accuracy\n0.10,1,", 0), 0u);
}

TEST(LearningCurve, RejectsBadFractions) {
    const auto corpus = make_synthetic_corpus();
    EXPECT_THROW(learning_curve(corpus, {Rational(1, 2), Rational(1, 4)}, {1}, {}), EvaluationError);
    EXPECT_THROW(learning_curve(corpus, {Rational(1)}, {1}, {}), EvaluationError);
    EXPECT_THROW(learning_curve(corpus, {Rational(1, 2)}, {}, {}), EvaluationError);
}

TEST(Report, CsvLayout) {
    const auto table = build_table({{{"alpha"}, {2, 0}}, {{"gamma"}, {0, 2}}}, {"A", "B"},
                                   SmoothingMode::paper_table);
    const auto test = LabeledCorpus::from_documents(
        {{"1", "A", "alpha alpha"}, {"2", "B", "alpha alpha"}}, {"A", "B"});
    std::ostringstream out;
    write_report_csv(out, evaluate(table, test, {}), Rational(1, 2), 7);
    EXPECT_EQ(out.str(),
              "fraction,seed,accuracy\n0.50,7,0.500000\n\n"
              "class,n_test,accuracy\nA,1,1.000000\nB,1,0.000000\n\n"
              "true\\predicted,A,B\nA,1,0\nB,1,0\n");
}

}  // namespace
}  // namespace wordsets
