// wordsets: train, apply and evaluate word-set classifiers from the shell.
//
//   wordsets train    --corpus data/ --out model.json
//   wordsets classify --model model.json --in abstract.txt --explain
//   wordsets evaluate --model model.json --corpus test.csv
//   wordsets curve    --corpus data/ --fractions 0.1,0.2,0.3 --seeds 1,2,3
//   wordsets inspect  --model model.json

#include "wordsets/wordsets.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace wordsets;

namespace {

struct PreprocessOptions {
    std::string stopwords;
    std::size_t min_doc_freq = 2;

    void add(CLI::App& cmd) {
        cmd.add_option("--stopwords", stopwords, "Stopword file (one word per line)")
            ->envname("WORDSETS_STOPWORDS")
            ->check(CLI::ExistingFile);
        cmd.add_option("--min-doc-freq", min_doc_freq,
                       "Occurrences a word needs inside one document to be a keyword")
            ->capture_default_str()
            ->check(CLI::Range(std::size_t{1}, std::size_t{1000}));
    }

    PreprocessConfig build() const {
        PreprocessConfig c;
        if (!stopwords.empty()) c.stopwords = StopwordList::load(stopwords);
        c.min_doc_freq = min_doc_freq;
        return c;
    }
};

struct PipelineOptions {
    PreprocessOptions preprocess;
    std::size_t support_count = 2;
    std::string support_fraction;
    std::string confidence = "0.75";
    std::size_t max_set_size = 0;
    std::string smoothing = "paper-table";
    CLI::Option* fraction_opt = nullptr;

    void add(CLI::App& cmd) {
        preprocess.add(cmd);
        auto* count = cmd.add_option("--support-count", support_count,
                                     "Minimum number of a class's documents containing a set")
                          ->capture_default_str()
                          ->check(CLI::PositiveNumber);
        fraction_opt = cmd.add_option("--support-fraction", support_fraction,
                                      "Minimum support as a share of a class's documents, e.g. 0.05");
        fraction_opt->excludes(count);
        cmd.add_option("--confidence", confidence, "Minimum rule confidence (not used for scoring)")
            ->capture_default_str();
        cmd.add_option("--max-set-size", max_set_size, "Largest word set to mine (0 = no limit)");
        cmd.add_option("--smoothing", smoothing, "Probability denominator")
            ->capture_default_str()
            ->check(CLI::IsMember({"paper-table", "per-class"}));
    }

    PipelineConfig build() const {
        PipelineConfig c;
        c.preprocess = preprocess.build();
        if (!support_fraction.empty()) {
            const auto f = parse_rational(support_fraction);
            if (f <= 0 || f > 1) throw Error("--support-fraction must lie in (0, 1]");
            c.mining.min_support = SupportFraction{f};
        } else {
            c.mining.min_support = SupportCount{support_count};
        }
        c.mining.min_confidence = parse_rational(confidence);
        if (c.mining.min_confidence <= 0 || c.mining.min_confidence > 1)
            throw Error("--confidence must lie in (0, 1]");
        if (max_set_size > 0) c.mining.max_itemset_size = max_set_size;
        c.mode = parse_smoothing_mode(smoothing);
        return c;
    }
};

CorpusFormat corpus_format(const std::string& flag, const fs::path& path) {
    if (flag == "dir") return CorpusFormat::directory_per_class;
    if (flag == "csv") return CorpusFormat::delimited_file;
    return fs::is_directory(path) ? CorpusFormat::directory_per_class : CorpusFormat::delimited_file;
}

/// Writes to `path`, or stdout when it is empty.
template <class Fn>
void emit(const std::string& path, Fn&& write) {
    if (path.empty()) {
        write(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + path + "'");
    write(out);
    if (!out) throw Error("error writing '" + path + "'");
}

std::vector<Rational> parse_fractions(const std::vector<std::string>& text) {
    std::vector<Rational> out;
    for (const auto& t : text) out.push_back(parse_rational(t));
    return out;
}

nlohmann::json breakdown_json(const ScoreBreakdown& b) {
    return {{"class", b.class_name},
            {"pval", b.pval},
            {"nval", b.nval},
            {"p", b.p},
            {"n", b.n},
            {"positive_pct", to_double(b.positive_pct)},
            {"negative_pct", to_double(b.negative_pct)},
            {"prior", to_double(b.prior)},
            {"total", to_double(b.total)}};
}

nlohmann::json report_json(const EvalReport& r) {
    nlohmann::json per_class = nlohmann::json::object();
    for (std::size_t c = 0; c < r.classes.size(); ++c)
        per_class[r.classes[c]] = r.per_class_accuracy[c]
                                      ? nlohmann::json(to_double(*r.per_class_accuracy[c]))
                                      : nlohmann::json(nullptr);
    nlohmann::json predictions = nlohmann::json::array();
    for (std::size_t i = 0; i < r.test_ids.size(); ++i)
        predictions.push_back({{"id", r.test_ids[i]}, {"predicted", r.predictions[i]}});
    return {{"classes", r.classes},
            {"n_test", r.n_test},
            {"n_correct", r.n_correct},
            {"accuracy", to_double(r.accuracy)},
            {"per_class_accuracy", per_class},
            {"confusion", r.confusion},
            {"predictions", predictions},
            {"train_ids", r.train_ids},
            {"leaked_ids", r.leaked_ids}};
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read '" + path + "'");
    std::vector<std::string> out;
    for (std::string line; std::getline(in, line);)
        if (!line.empty()) out.push_back(line);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Text classification with mined word sets"};
    app.set_config("--config", "", "TOML/INI file with option values (flags take precedence)");
    app.require_subcommand(1);
    std::string format = "csv";
    std::string out_path;

    // train
    auto* train = app.add_subcommand("train", "Mine word sets from a labeled corpus and save a model");
    std::string train_corpus, train_corpus_format = "auto", train_dump;
    PipelineOptions train_opts;
    train->add_option("--corpus", train_corpus, "Class directories or id,label,text CSV")
        ->required()
        ->check(CLI::ExistingPath);
    train->add_option("--corpus-format", train_corpus_format)
        ->capture_default_str()
        ->check(CLI::IsMember({"auto", "dir", "csv"}));
    train->add_option("--out", out_path, "Model file to write")->required();
    train->add_option("--dump-transactions", train_dump, "Write keyword transactions here");
    train_opts.add(*train);

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "Classify text files with a saved model");
    std::string model_path;
    std::vector<std::string> inputs;
    bool explain = false;
    PreprocessOptions classify_opts;
    classify_cmd->add_option("--model", model_path)->required()->check(CLI::ExistingFile);
    classify_cmd->add_option("--in", inputs, "Text file(s) to classify")
        ->required()
        ->check(CLI::ExistingFile);
    classify_cmd->add_flag("--explain", explain, "Print the per-class score breakdown");
    classify_cmd->add_option("--out", out_path, "Output file (default stdout)");
    classify_cmd->add_option("--format", format)->capture_default_str()->check(CLI::IsMember({"csv", "json"}));
    classify_opts.add(*classify_cmd);

    // evaluate
    auto* evaluate_cmd = app.add_subcommand("evaluate", "Measure accuracy on a labeled corpus");
    std::string eval_corpus, eval_corpus_format = "auto", train_ids_path;
    PreprocessOptions evaluate_opts;
    evaluate_cmd->add_option("--model", model_path)->required()->check(CLI::ExistingFile);
    evaluate_cmd->add_option("--corpus", eval_corpus)->required()->check(CLI::ExistingPath);
    evaluate_cmd->add_option("--corpus-format", eval_corpus_format)
        ->capture_default_str()
        ->check(CLI::IsMember({"auto", "dir", "csv"}));
    evaluate_cmd->add_option("--train-ids", train_ids_path,
                             "File listing training document ids, one per line; overlaps are reported")
        ->check(CLI::ExistingFile);
    evaluate_cmd->add_option("--out", out_path, "Output file (default stdout)");
    evaluate_cmd->add_option("--format", format)->capture_default_str()->check(CLI::IsMember({"csv", "json"}));
    evaluate_opts.add(*evaluate_cmd);

    // curve
    auto* curve_cmd = app.add_subcommand("curve", "Accuracy against training-set size");
    std::string curve_corpus, curve_corpus_format = "auto", rounding = "tenths";
    std::vector<std::string> fractions{"0.10", "0.15", "0.20", "0.25", "0.30",
                                       "0.35", "0.40", "0.45", "0.50", "0.55"};
    std::vector<std::uint64_t> seeds{1, 2, 3};
    PipelineOptions curve_opts;
    curve_cmd->add_option("--corpus", curve_corpus)->required()->check(CLI::ExistingPath);
    curve_cmd->add_option("--corpus-format", curve_corpus_format)
        ->capture_default_str()
        ->check(CLI::IsMember({"auto", "dir", "csv"}));
    curve_cmd->add_option("--fractions", fractions, "Training fractions, increasing")
        ->delimiter(',')
        ->capture_default_str();
    curve_cmd->add_option("--seeds,--seed", seeds, "Split seeds")->delimiter(',')->capture_default_str();
    curve_cmd->add_option("--rounding", rounding, "Per-class training-size rounding")
        ->capture_default_str()
        ->check(CLI::IsMember({"tenths", "nearest"}));
    curve_cmd->add_option("--out", out_path, "Output file (default stdout)");
    curve_cmd->add_option("--format", format)->capture_default_str()->check(CLI::IsMember({"csv", "json"}));
    curve_opts.add(*curve_cmd);

    // inspect
    auto* inspect_cmd = app.add_subcommand("inspect", "List a model's word sets and probabilities");
    inspect_cmd->add_option("--model", model_path)->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*train) {
            const auto config = train_opts.build();
            const auto corpus = load_corpus(train_corpus, corpus_format(train_corpus_format, train_corpus));
            if (!train_dump.empty()) {
                std::vector<Transaction> all;
                for (const auto& group : transactions_by_class(corpus, config.preprocess))
                    all.insert(all.end(), group.begin(), group.end());
                emit(train_dump, [&](std::ostream& os) { write_transactions(os, all); });
            }
            const auto table = train_table(corpus, config);
            save_table(table, out_path);
            std::cerr << "trained on " << corpus.size() << " documents: " << table.total_sets
                      << " word sets, " << table.classes.size() << " classes\n";
        } else if (*classify_cmd) {
            const auto table = load_table(model_path);
            const auto config = classify_opts.build();
            struct Row {
                std::string id;
                ClassificationResult result;
            };
            std::vector<Row> rows;
            for (const auto& in : inputs) {
                std::ifstream f(in, std::ios::binary);
                std::ostringstream ss;
                ss << f.rdbuf();
                const Document doc{fs::path(in).filename().string(), std::nullopt, ss.str()};
                rows.push_back({doc.id, classify(table, extract_keywords(doc, config).items)});
            }
            emit(out_path, [&](std::ostream& os) {
                if (format == "json") {
                    nlohmann::json j = nlohmann::json::array();
                    for (const auto& r : rows) {
                        nlohmann::json doc{{"document", r.id},
                                           {"winner", r.result.winner_name()},
                                           {"tie", r.result.tie()},
                                           {"low_evidence", r.result.low_evidence}};
                        if (explain) {
                            nlohmann::json b = nlohmann::json::array();
                            for (const auto& x : r.result.breakdowns) b.push_back(breakdown_json(x));
                            doc["breakdown"] = b;
                            nlohmann::json m = nlohmann::json::array();
                            for (auto s : r.result.matched_sets) m.push_back(table.entries[s].itemset.items);
                            doc["matched_sets"] = m;
                        }
                        j.push_back(doc);
                    }
                    os << j.dump(2) << '\n';
                    return;
                }
                os << "document,winner,total,tie,low_evidence\n";
                for (const auto& r : rows)
                    os << r.id << ',' << r.result.winner_name() << ','
                       << to_fixed(r.result.breakdowns[r.result.winner].total, 2) << ','
                       << (r.result.tie() ? "yes" : "no") << ','
                       << (r.result.low_evidence ? "yes" : "no") << '\n';
                if (explain) {
                    for (const auto& r : rows) {
                        os << "\ndocument: " << r.id << "\n";
                        write_breakdown_csv(os, r.result);
                    }
                }
            });
        } else if (*evaluate_cmd) {
            const auto table = load_table(model_path);
            const auto test = load_corpus(eval_corpus, corpus_format(eval_corpus_format, eval_corpus));
            std::vector<std::string> train_ids;
            if (!train_ids_path.empty()) train_ids = read_lines(train_ids_path);
            const auto report = evaluate(table, test, evaluate_opts.build(), train_ids);
            if (!report.leaked_ids.empty())
                std::cerr << "warning: " << report.leaked_ids.size()
                          << " test documents also appear in the training ids\n";
            emit(out_path, [&](std::ostream& os) {
                if (format == "json")
                    os << report_json(report).dump(2) << '\n';
                else
                    write_report_csv(os, report);
            });
        } else if (*curve_cmd) {
            const auto corpus = load_corpus(curve_corpus, corpus_format(curve_corpus_format, curve_corpus));
            const auto curve = learning_curve(
                corpus, parse_fractions(fractions), seeds, curve_opts.build(),
                rounding == "nearest" ? StratumRounding::nearest : StratumRounding::tenths_then_nearest);
            emit(out_path, [&](std::ostream& os) {
                if (format == "json") {
                    nlohmann::json points = nlohmann::json::array(), summary = nlohmann::json::array();
                    for (const auto& p : curve.points)
                        points.push_back({{"fraction", to_double(p.fraction)},
                                          {"seed", p.seed},
                                          {"accuracy", to_double(p.accuracy)}});
                    for (const auto& s : curve.summaries)
                        summary.push_back({{"fraction", to_double(s.fraction)},
                                           {"mean", to_double(s.mean)},
                                           {"min", to_double(s.min)},
                                           {"max", to_double(s.max)}});
                    os << nlohmann::json{{"points", points}, {"summary", summary}}.dump(2) << '\n';
                } else {
                    write_curve_csv(os, curve);
                }
            });
        } else if (*inspect_cmd) {
            write_table_listing(std::cout, load_table(model_path));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
