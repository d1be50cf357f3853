#ifndef WORDSETS_MODEL_IO_HPP_
#define WORDSETS_MODEL_IO_HPP_

#include "wordsets/error.hpp"
#include "wordsets/model.hpp"

#include <boost/crc.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

// Model file layout (UTF-8 JSON):
//
//   {
//     "format": "wordsets-model", "version": 1, "mode": "paper-table",
//     "classes": ["CH", ...], "total_sets": 69,
//     "set_counts": {"CH": 25, ...}, "priors": {"CH": "25/69", ...},
//     "entries": [{"items": ["dirac", "fock"], "counts": {"CH": 2, ...}, "owner": "CH"}],
//     "checksum": "crc32:1a2b3c4d"
//   }
//
// Probabilities are not stored; load_table recomputes them from the counts.
// The checksum covers the compact dump of every other field.

namespace wordsets {

inline constexpr int kModelFormatVersion = 1;
inline constexpr const char* kModelFormatName = "wordsets-model";

namespace detail {

inline std::string crc32_hex(const std::string& bytes) {
    boost::crc_32_type crc;
    crc.process_bytes(bytes.data(), bytes.size());
    char buf[16];
    std::snprintf(buf, sizeof buf, "%08x", static_cast<unsigned>(crc.checksum()));
    return std::string("crc32:") + buf;
}

[[noreturn]] inline void malformed(const std::string& origin, const std::string& why) {
    throw ModelFileError(ModelFileError::Kind::malformed, origin + ": " + why);
}

}  // namespace detail

inline nlohmann::json table_to_json(const ProbabilityTable& table) {
    nlohmann::json j;
    j["format"] = kModelFormatName;
    j["version"] = kModelFormatVersion;
    j["mode"] = std::string(to_string(table.mode));
    j["classes"] = table.classes;
    j["total_sets"] = table.total_sets;
    nlohmann::json set_counts = nlohmann::json::object();
    nlohmann::json priors = nlohmann::json::object();
    for (const auto& st : table.class_stats) {
        set_counts[st.name] = st.set_count;
        priors[st.name] = to_string(st.prior);
    }
    j["set_counts"] = set_counts;
    j["priors"] = priors;
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : table.entries) {
        nlohmann::json counts = nlohmann::json::object();
        for (std::size_t c = 0; c < table.classes.size(); ++c)
            counts[table.classes[c]] = e.itemset.class_counts[c];
        entries.push_back({{"items", e.itemset.items},
                           {"counts", counts},
                           {"owner", table.classes[e.owner]}});
    }
    j["entries"] = entries;
    j["checksum"] = detail::crc32_hex(j.dump());
    return j;
}

inline ProbabilityTable table_from_json(nlohmann::json j, const std::string& origin = "<model>") {
    using detail::malformed;
    using Kind = ModelFileError::Kind;
    if (!j.is_object()) malformed(origin, "top-level value is not an object");
    if (!j.contains("format") || j["format"] != kModelFormatName)
        malformed(origin, "not a wordsets model file");
    if (!j.contains("version") || !j["version"].is_number_integer())
        throw ModelFileError(Kind::version_mismatch, origin + ": missing format version");
    if (j["version"].get<int>() != kModelFormatVersion)
        throw ModelFileError(Kind::version_mismatch,
                             origin + ": unsupported format version " + j["version"].dump() +
                                 " (expected " + std::to_string(kModelFormatVersion) + ")");
    if (!j.contains("checksum") || !j["checksum"].is_string())
        malformed(origin, "missing checksum");
    const auto stored = j["checksum"].get<std::string>();
    j.erase("checksum");
    if (detail::crc32_hex(j.dump()) != stored)
        throw ModelFileError(Kind::checksum_mismatch, origin + ": checksum mismatch");

    try {
        const auto mode = parse_smoothing_mode(j.at("mode").get<std::string>());
        const auto classes = j.at("classes").get<std::vector<std::string>>();
        if (classes.empty()) malformed(origin, "empty class list");
        if (std::set<std::string>(classes.begin(), classes.end()).size() != classes.size())
            malformed(origin, "duplicate class name");
        const auto total_sets = j.at("total_sets").get<std::size_t>();

        std::vector<std::size_t> set_counts;
        for (const auto& name : classes) set_counts.push_back(j.at("set_counts").at(name));
        SetAttribution attribution;
        attribution.total_sets = total_sets;
        attribution.stats = class_stats_from_counts(classes, set_counts);
        for (const auto& st : attribution.stats)
            if (parse_rational(j.at("priors").at(st.name).get<std::string>()) != st.prior)
                malformed(origin, "prior of class '" + st.name + "' disagrees with set counts");

        ProbabilityTable probe;
        probe.classes = classes;
        std::vector<ItemSet> itemsets;
        for (const auto& je : j.at("entries")) {
            ItemSet s;
            s.items = je.at("items").get<std::vector<std::string>>();
            if (s.items.empty() || make_keyword_set(s.items) != s.items)
                malformed(origin, "entry items must be non-empty, sorted and unique");
            for (const auto& name : classes) s.class_counts.push_back(je.at("counts").at(name));
            const auto owner = probe.class_index(je.at("owner").get<std::string>());
            if (owner != owner_of(s.class_counts))
                malformed(origin, "entry owner is not the class with the largest count");
            attribution.owners.push_back(owner);
            itemsets.push_back(std::move(s));
        }
        return build_table(std::move(itemsets), classes, attribution, mode);
    } catch (const ModelFileError&) {
        throw;
    } catch (const nlohmann::json::exception& e) {
        malformed(origin, e.what());
    } catch (const std::exception& e) {
        malformed(origin, e.what());
    }
}

inline void save_table(const ProbabilityTable& table, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ModelFileError(ModelFileError::Kind::io, "cannot write '" + path.string() + "'");
    out << table_to_json(table).dump(2) << '\n';
    if (!out) throw ModelFileError(ModelFileError::Kind::io, "error writing '" + path.string() + "'");
}

/// Parse errors name the byte offset where reading failed.
inline ProbabilityTable load_table(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ModelFileError(ModelFileError::Kind::io, "cannot read '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(ss.str());
    } catch (const nlohmann::json::parse_error& e) {
        detail::malformed(path.string(), "parse error at byte " + std::to_string(e.byte));
    }
    return table_from_json(std::move(j), path.string());
}

/// Human-readable listing: per-class set counts and priors, then one block
/// per word set with its occurrence counts and smoothed probabilities
/// (six decimals).
inline void write_table_listing(std::ostream& out, const ProbabilityTable& table) {
    out << "mode: " << to_string(table.mode) << "\n";
    out << "total word sets: " << table.total_sets << "\n\n";
    out << "class\tsets\tprior\n";
    for (const auto& st : table.class_stats)
        out << st.name << '\t' << st.set_count << '\t' << to_string(st.prior) << " ("
            << to_fixed(st.prior, 2) << ")\n";

    auto header = [&](const char* title) {
        out << "\n" << title << "\nword set";
        for (const auto& c : table.classes) out << '\t' << c;
        out << '\n';
    };
    auto items = [&](const TableEntry& e) {
        for (std::size_t i = 0; i < e.itemset.items.size(); ++i)
            out << (i ? ", " : "") << e.itemset.items[i];
    };

    header("occurrences");
    for (const auto& e : table.entries) {
        items(e);
        for (auto n : e.itemset.class_counts) out << '\t' << n;
        out << '\n';
    }
    header("probabilities");
    for (const auto& e : table.entries) {
        items(e);
        for (const auto& p : e.probs) out << '\t' << to_fixed(p, 6);
        out << '\n';
    }
}

}  // namespace wordsets

#endif  // WORDSETS_MODEL_IO_HPP_
