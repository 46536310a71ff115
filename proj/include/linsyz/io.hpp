#pragma once

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "field.hpp"
#include "matrix.hpp"
#include "polyring.hpp"
#include "syzygy.hpp"

namespace linsyz {

using json = nlohmann::json;

/// FNV-1a 64-bit hash of a string, printed as 16 hex digits. Used to tie a
/// stored syzygy to the ideal it belongs to.
inline std::string fnv1a_hex(const std::string& s) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

inline json ideal_to_json(const GradedIdeal& I) {
    json j;
    j["p"] = I.F.modulus();
    j["n_vars"] = I.nvars;
    j["variables"] = I.var_names;
    MonBasis basis(I.nvars, I.gen_degree);
    json quads = json::array();
    for (size_t g = 0; g < I.gens.rows(); ++g) {
        json poly = json::array();
        for (size_t t = 0; t < basis.size(); ++t) {
            if (!I.gens.at(g, t)) continue;
            json term;
            term["exps"] = basis.exps(t);
            term["c"] = I.gens.at(g, t);
            poly.push_back(term);
        }
        quads.push_back(poly);
    }
    j["quadrics"] = quads;
    return j;
}

inline GradedIdeal ideal_from_json(const json& j) {
    uint32_t p = j.at("p").get<uint32_t>();
    Fp F(p);
    uint32_t nvars = j.at("n_vars").get<uint32_t>();
    std::vector<std::string> names;
    if (j.contains("variables")) names = j.at("variables").get<std::vector<std::string>>();
    MonBasis basis(nvars, 2);
    const json& quads = j.at("quadrics");
    Matrix gens(quads.size(), basis.size());
    for (size_t g = 0; g < quads.size(); ++g) {
        for (const json& term : quads[g]) {
            std::vector<uint8_t> exps = term.at("exps").get<std::vector<uint8_t>>();
            if (exps.size() != nvars) throw std::invalid_argument("exponent length mismatch");
            uint32_t total = 0;
            for (uint8_t e : exps) total += e;
            if (total != 2) throw std::invalid_argument("ideal file must contain quadrics");
            int64_t c = term.at("c").get<int64_t>();
            size_t t = basis.index_of(exps);
            gens.at(g, t) = F.add(gens.at(g, t), F.from_int(c));
        }
    }
    return GradedIdeal(F, nvars, 2, std::move(gens), std::move(names));
}

/// Stable fingerprint of an ideal: hash of its canonical JSON rendering
/// with canonicalized generators.
inline std::string ideal_hash(const GradedIdeal& I) {
    Echelon e = canonical_generators(I);
    GradedIdeal canon(I.F, I.nvars, I.gen_degree, e.rows, I.var_names);
    return fnv1a_hex(ideal_to_json(canon).dump());
}

inline json syzygy_to_json(const Syzygy& s, const GradedIdeal& parent) {
    json j;
    j["p"] = s.p;
    j["coeffs"] = s.coeffs;
    j["basis"] = "wedge x quadric, lexicographic wedge sets over canonical quadrics";
    j["ideal_hash"] = ideal_hash(parent);
    return j;
}

inline Syzygy syzygy_from_json(const json& j, const GradedIdeal& parent) {
    Syzygy s;
    s.p = j.at("p").get<uint32_t>();
    s.coeffs = j.at("coeffs").get<std::vector<uint32_t>>();
    if (j.contains("ideal_hash")) {
        std::string h = j.at("ideal_hash").get<std::string>();
        if (h != ideal_hash(parent))
            throw std::invalid_argument("syzygy file belongs to a different ideal (hash mismatch)");
    }
    return s;
}

namespace detail {

inline std::string monomial_text(const std::vector<std::string>& names,
                                 const std::vector<uint8_t>& exps) {
    std::string out;
    for (size_t v = 0; v < exps.size(); ++v) {
        if (!exps[v]) continue;
        if (!out.empty()) out += "*";
        out += names[v];
        if (exps[v] > 1) out += "^" + std::to_string(exps[v]);
    }
    return out.empty() ? "1" : out;
}

} // namespace detail

/// Human-readable rendering: one polynomial per line, terms like
/// 3*x0*x1 - x2^2, preceded by header comments recording the modulus and
/// the variable order so the text round-trips.
inline std::string ideal_to_text(const GradedIdeal& I) {
    std::ostringstream out;
    out << "# p: " << I.F.modulus() << "\n# vars:";
    for (const std::string& v : I.var_names) out << " " << v;
    out << "\n";
    MonBasis basis(I.nvars, I.gen_degree);
    for (size_t g = 0; g < I.gens.rows(); ++g) {
        bool first = true;
        for (size_t t = 0; t < basis.size(); ++t) {
            uint32_t c = I.gens.at(g, t);
            if (!c) continue;
            bool neg = (c == I.F.modulus() - 1);
            uint32_t mag = neg ? 1 : c;
            std::string tail = detail::monomial_text(I.var_names, basis.exps(t));
            std::string body = (mag == 1) ? tail : std::to_string(mag) + "*" + tail;
            if (first) {
                out << (neg ? "-" : "") << body;
                first = false;
            } else {
                out << (neg ? " - " : " + ") << body;
            }
        }
        if (first) out << "0";
        out << "\n";
    }
    return out.str();
}

/**
 * Parse the text format. Variables come from a "# vars:" header when
 * present; otherwise names of the form x<i> are assumed and the count is
 * inferred. The modulus comes from a "# p:" header unless overridden by
 * default_p.
 */
inline GradedIdeal ideal_from_text(const std::string& text, uint32_t default_p = 101) {
    uint32_t p = default_p;
    std::vector<std::string> names;
    std::vector<std::string> poly_lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        size_t h = line.find('#');
        std::string body = h == std::string::npos ? line : line.substr(0, h);
        std::string comment = h == std::string::npos ? "" : line.substr(h + 1);
        if (comment.find("p:") != std::string::npos) {
            std::istringstream cs(comment.substr(comment.find("p:") + 2));
            cs >> p;
        } else if (comment.find("vars:") != std::string::npos) {
            std::istringstream cs(comment.substr(comment.find("vars:") + 5));
            std::string v;
            while (cs >> v) names.push_back(v);
        }
        bool blank = true;
        for (char c : body)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (!blank) poly_lines.push_back(body);
    }
    Fp F(p);
    // first pass when no header named the variables: collect x<i> indices
    if (names.empty()) {
        uint32_t max_idx = 0;
        bool any = false;
        for (const std::string& l : poly_lines)
            for (size_t i = 0; i < l.size(); ++i)
                if (l[i] == 'x' && i + 1 < l.size() && std::isdigit((unsigned char)l[i + 1])) {
                    uint32_t idx = 0;
                    size_t j = i + 1;
                    while (j < l.size() && std::isdigit((unsigned char)l[j]))
                        idx = idx * 10 + uint32_t(l[j++] - '0');
                    max_idx = std::max(max_idx, idx);
                    any = true;
                }
        if (!any) throw std::invalid_argument("no variables found; use x0, x1, ... or a # vars: header");
        for (uint32_t i = 0; i <= max_idx; ++i) names.push_back("x" + std::to_string(i));
    }
    uint32_t nvars = uint32_t(names.size());
    MonBasis basis(nvars, 2);
    Matrix gens(0, basis.size());
    auto var_index = [&](const std::string& v) -> uint32_t {
        for (uint32_t i = 0; i < nvars; ++i)
            if (names[i] == v) return i;
        throw std::invalid_argument("unknown variable '" + v + "'");
    };
    for (const std::string& l : poly_lines) {
        std::vector<uint32_t> row(basis.size(), 0);
        size_t i = 0;
        auto skip_ws = [&] {
            while (i < l.size() && std::isspace((unsigned char)l[i])) ++i;
        };
        skip_ws();
        bool any_term = false;
        while (i < l.size()) {
            int sign = 1;
            if (l[i] == '+' || l[i] == '-') {
                sign = l[i] == '-' ? -1 : 1;
                ++i;
                skip_ws();
            } else if (any_term) {
                throw std::invalid_argument("expected + or - between terms: " + l);
            }
            int64_t coeff = 1;
            bool saw_coeff = false;
            if (i < l.size() && std::isdigit((unsigned char)l[i])) {
                coeff = 0;
                while (i < l.size() && std::isdigit((unsigned char)l[i]))
                    coeff = coeff * 10 + (l[i++] - '0');
                saw_coeff = true;
                skip_ws();
                if (i < l.size() && l[i] == '*') {
                    ++i;
                    skip_ws();
                }
            }
            std::vector<uint8_t> exps(nvars, 0);
            uint32_t degree = 0;
            while (i < l.size() &&
                   (std::isalpha((unsigned char)l[i]) || l[i] == '_')) {
                size_t start = i;
                while (i < l.size() && (std::isalnum((unsigned char)l[i]) || l[i] == '_')) ++i;
                std::string v = l.substr(start, i - start);
                uint32_t e = 1;
                skip_ws();
                if (i < l.size() && l[i] == '^') {
                    ++i;
                    skip_ws();
                    e = 0;
                    while (i < l.size() && std::isdigit((unsigned char)l[i]))
                        e = e * 10 + uint32_t(l[i++] - '0');
                }
                exps[var_index(v)] = uint8_t(exps[var_index(v)] + e);
                degree += e;
                skip_ws();
                if (i < l.size() && l[i] == '*') {
                    ++i;
                    skip_ws();
                }
            }
            if (degree == 0 && !saw_coeff)
                throw std::invalid_argument("empty term in: " + l);
            if (degree == 0 && coeff == 0) {
                // explicit zero polynomial, as printed for a zero row
                any_term = true;
                skip_ws();
                continue;
            }
            if (degree != 2)
                throw std::invalid_argument("every term must have degree 2: " + l);
            size_t t = basis.index_of(exps);
            uint32_t c = F.from_int(sign * coeff);
            row[t] = F.add(row[t], c);
            any_term = true;
            skip_ws();
        }
        gens.append_row(row);
    }
    return GradedIdeal(F, nvars, 2, std::move(gens), std::move(names));
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::system_error(ENOENT, std::generic_category(), path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

/// Load an ideal from a .json or textual description, deciding by content.
inline GradedIdeal load_ideal(const std::string& path, uint32_t default_p) {
    std::string text = read_file(path);
    size_t i = 0;
    while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
    if (i < text.size() && text[i] == '{') return ideal_from_json(json::parse(text));
    return ideal_from_text(text, default_p);
}

} // namespace linsyz
