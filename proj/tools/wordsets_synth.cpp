// Writes a synthetic corpus with disjoint class vocabularies, either as
// class directories or as an id,label,text CSV file.

#include "wordsets/synthetic.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace fs = std::filesystem;

int main(int argc, char** argv) {
    CLI::App app{"Generate a synthetic labeled corpus"};
    wordsets::SyntheticCorpusSpec spec;
    std::string out, format = "dir";
    app.add_option("--out", out, "Output directory (dir) or file (csv)")->required();
    app.add_option("--format", format)->capture_default_str()->check(CLI::IsMember({"dir", "csv"}));
    app.add_option("--classes", spec.classes)->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--docs-per-class", spec.docs_per_class)->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--patterns-per-class", spec.patterns_per_class)->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--patterns-per-doc", spec.patterns_per_doc)->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--seed", spec.seed)->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    try {
        const auto corpus = wordsets::make_synthetic_corpus(spec);
        if (format == "csv") {
            std::ofstream f(out, std::ios::binary | std::ios::trunc);
            f << "id,label,text\n";
            for (const auto& d : corpus.documents()) f << d.id << ',' << *d.label << ",\"" << d.text << "\"\n";
            if (!f) throw std::runtime_error("cannot write '" + out + "'");
        } else {
            for (const auto& d : corpus.documents()) {
                const auto stem = d.id.substr(d.id.find('-') + 1);
                const auto dir = fs::path(out) / *d.label;
                fs::create_directories(dir);
                std::ofstream f(dir / (stem + ".txt"), std::ios::binary | std::ios::trunc);
                f << d.text << '\n';
                if (!f) throw std::runtime_error("cannot write into '" + dir.string() + "'");
            }
        }
        std::cerr << "wrote " << corpus.size() << " documents to " << out << '\n';
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
