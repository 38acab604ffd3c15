#pragma once

/**
 * Canonical JSON serialization.
 *
 * A TorusFunction serializes as a list of records {k, alpha, re, im} sorted
 * lexicographically by (k, alpha); the round trip is bit-exact.  Sequence
 * files carry {n, order, convention, ell|s: [...]}; only the "period-1"
 * angle convention is accepted on input.
 */

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "stitchkit/errors.hpp"
#include "stitchkit/germs.hpp"
#include "stitchkit/invariant_calculus.hpp"
#include "stitchkit/sections.hpp"
#include "stitchkit/torus_function.hpp"

namespace stitchkit {

using Json = nlohmann::ordered_json;

inline constexpr const char* kAngleConvention = "period-1";

inline Json to_json(const TorusFunction& f) {
    Json terms = Json::array();
    for (const auto& [key, c] : f.terms()) {  // std::map iterates in (k, alpha) order
        Json rec;
        rec["k"] = key.k;
        rec["alpha"] = key.alpha;
        rec["re"] = c.real();
        rec["im"] = c.imag();
        terms.push_back(std::move(rec));
    }
    Json out;
    out["n"] = f.dim();
    out["terms"] = std::move(terms);
    return out;
}

inline TorusFunction torus_function_from_json(const Json& j) {
    if (!j.contains("n") || !j.contains("terms"))
        throw FormatError("torus function record needs fields n, terms");
    TorusFunction f(j.at("n").get<int>());
    for (const auto& rec : j.at("terms")) {
        std::vector<int> k = rec.at("k").get<std::vector<int>>();
        std::vector<int> alpha = rec.at("alpha").get<std::vector<int>>();
        Complex c(rec.at("re").get<double>(), rec.at("im").get<double>());
        f.add_term(k, alpha, c);
    }
    if (!f.is_real_valued())
        throw FormatError("torus function record violates conjugate symmetry");
    return f;
}

inline Json to_json(const LSection& ell) {
    Json comps = Json::array();
    for (int j = 2; j <= ell.dim(); ++j) comps.push_back(to_json(ell.a(j)));
    Json out;
    out["n"] = ell.dim();
    out["components"] = std::move(comps);
    return out;
}

inline LSection lsection_from_json(const Json& j) {
    int n = j.at("n").get<int>();
    const auto& comps = j.at("components");
    if ((int)comps.size() != n - 1)
        throw FormatError("section record: expected n-1 components");
    std::vector<TorusFunction> parts;
    parts.reserve(comps.size());
    for (const auto& c : comps) {
        parts.push_back(torus_function_from_json(c));
        if (parts.back().dim() != n) throw FormatError("section record: mixed dimensions");
    }
    return LSection(std::move(parts));
}

inline void check_convention(const Json& j) {
    if (!j.contains("convention") || j.at("convention").get<std::string>() != kAngleConvention)
        throw FormatError("unknown angle convention; expected \"period-1\"");
}

inline Json sequence_to_json(int n, int order, const char* key,
                             const std::vector<const LSection*>& elems) {
    Json out;
    out["n"] = n;
    out["order"] = order;
    out["convention"] = kAngleConvention;
    Json arr = Json::array();
    for (const LSection* e : elems) arr.push_back(to_json(*e));
    out[key] = std::move(arr);
    return out;
}

inline Json ell_sequence_to_json(const EllSequence& ell) {
    std::vector<const LSection*> elems;
    for (int m = 1; m <= ell.order(); ++m) elems.push_back(&ell.at(m));
    return sequence_to_json(ell.dim(), ell.order(), "ell", elems);
}

inline Json s_sequence_to_json(const SSequence& s) {
    std::vector<const LSection*> elems;
    for (int m = 1; m <= s.order(); ++m) elems.push_back(&s.at(m));
    return sequence_to_json(s.dim(), s.order(), "s", elems);
}

inline std::vector<LSection> sequence_elements_from_json(const Json& j, const char* key) {
    check_convention(j);
    int n = j.at("n").get<int>();
    int order = j.at("order").get<int>();
    if (!j.contains(key)) throw FormatError(std::string("sequence file: missing field ") + key);
    const auto& arr = j.at(key);
    if ((int)arr.size() != order) throw FormatError("sequence file: order and element count differ");
    std::vector<LSection> elems;
    for (const auto& rec : arr) {
        elems.push_back(lsection_from_json(rec));
        if (elems.back().dim() != n) throw FormatError("sequence file: mixed dimensions");
    }
    return elems;
}

inline EllSequence ell_sequence_from_json(const Json& j) {
    return EllSequence(sequence_elements_from_json(j, "ell"));
}

inline SSequence s_sequence_from_json(const Json& j) {
    return SSequence(sequence_elements_from_json(j, "s"));
}

inline Json germ_to_json(const GermChange& g) {
    Json out;
    out["n"] = g.dim();
    out["order"] = g.order();
    out["convention"] = kAngleConvention;
    Json arr = Json::array();
    for (int m = 1; m <= g.order(); ++m) {
        Json level = Json::array();
        for (int j = 2; j <= g.dim(); ++j) level.push_back(to_json(g.phi(j, m)));
        arr.push_back(std::move(level));
    }
    out["phi"] = std::move(arr);
    return out;
}

inline GermChange germ_from_json(const Json& j) {
    check_convention(j);
    int n = j.at("n").get<int>();
    int order = j.at("order").get<int>();
    GermChange g(n, order);
    const auto& arr = j.at("phi");
    if ((int)arr.size() != order) throw FormatError("germ file: order and level count differ");
    for (int m = 1; m <= order; ++m) {
        const auto& level = arr.at(m - 1);
        if ((int)level.size() != n - 1) throw FormatError("germ file: expected n-1 components");
        for (int jj = 2; jj <= n; ++jj)
            g.set_phi(jj, m, torus_function_from_json(level.at(jj - 2)));
    }
    return g;
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw FormatError(path + ": " + e.what());
    }
    return j;
}

inline void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << j.dump(2) << "\n";
    if (!out) throw IoError("failed writing " + path);
}

} // namespace stitchkit
