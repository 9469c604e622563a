/**
 * Covector file format and input loading.
 *
 *   h1 h2 h3 g        element labels
 *   g g               optional distinguished element
 *   0000              one sign string per line
 *   +-0+
 *
 * Blank lines and text after `#` are ignored; repeated sign strings are
 * rejected. A file whose first token is `dim` is an arrangement file.
 */
#pragma once

#include <fstream>
#include <istream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "aom/error.hpp"
#include "aom/oriented_matroid.hpp"
#include "aom/realization.hpp"

namespace aom {

struct CovectorFile {
    CovectorSet set;
    std::optional<std::string> g_label;
};

inline CovectorFile parse_covector_file(std::istream& in, const std::string& source = "<input>") {
    std::optional<std::vector<std::string>> labels;
    std::optional<std::string> g;
    std::vector<SignVector> vectors;
    std::set<std::string> seen;
    std::string raw;
    std::size_t lineno = 0;
    bool after_labels = false;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        if (!labels) {
            labels = tok;
            try {
                GroundSet probe(*labels);
            } catch (const Error& e) {
                throw ParseError(source, lineno, e.what());
            }
            after_labels = true;
            continue;
        }
        if (after_labels && tok.size() == 2 && tok[0] == "g") {
            if (std::find(labels->begin(), labels->end(), tok[1]) == labels->end())
                throw ParseError(source, lineno, "unknown element '" + tok[1] + "'");
            g = tok[1];
            after_labels = false;
            continue;
        }
        after_labels = false;
        if (tok.size() != 1) throw ParseError(source, lineno, "expected a single sign string");
        if (!seen.insert(tok[0]).second) throw ParseError(source, lineno, "duplicate sign vector " + tok[0]);
        try {
            vectors.push_back(SignVector::parse(tok[0], labels->size()));
        } catch (const Error& e) {
            throw ParseError(source, lineno, e.what());
        }
    }
    if (!labels) throw ParseError(source, lineno, "missing element label line");
    return {CovectorSet(GroundSet(*labels), std::move(vectors)), g};
}

inline std::string format_covector_file(const CovectorSet& set, std::optional<std::string> g_label = std::nullopt) {
    std::ostringstream out;
    const auto& ground = set.ground();
    for (std::size_t i = 0; i < ground.size(); ++i) out << (i ? " " : "") << ground.label(i);
    out << "\n";
    if (g_label) out << "g " << *g_label << "\n";
    for (const auto& x : set) out << x.str() << "\n";
    return out.str();
}

/// A loaded instance: covectors with a distinguished element, plus the
/// arrangement when the input was one.
struct Instance {
    std::string source;
    std::optional<Arrangement> arrangement;
    CovectorSet covectors;
    std::optional<std::string> g_label;
};

inline bool looks_like_arrangement(const std::string& text) {
    std::istringstream in(text);
    for (std::string raw; std::getline(in, raw);) {
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::string first;
        if (ls >> first) return first == "dim";
    }
    return false;
}

inline Instance load_instance_text(const std::string& text, const std::string& source,
                                   std::optional<std::string> g_override = std::nullopt) {
    Instance inst;
    inst.source = source;
    std::istringstream in(text);
    if (looks_like_arrangement(text)) {
        inst.arrangement = parse_arrangement(in, source);
        inst.covectors = realize(*inst.arrangement);
        inst.g_label = Arrangement::kGLabel;
        if (g_override && *g_override != Arrangement::kGLabel)
            throw PreconditionError("arrangement inputs always use the homogenizing element 'g'");
    } else {
        auto file = parse_covector_file(in, source);
        inst.covectors = std::move(file.set);
        inst.g_label = g_override ? g_override : file.g_label;
        if (inst.g_label) inst.covectors.ground().index_of(*inst.g_label);
    }
    return inst;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path, 0, "cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Instance load_instance(const std::string& path, std::optional<std::string> g_override = std::nullopt) {
    return load_instance_text(read_file(path), path, std::move(g_override));
}

}  // namespace aom
