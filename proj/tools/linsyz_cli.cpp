// Command-line front end. Every subcommand loads its inputs from files or
// flags, runs one library pipeline, and prints a report to standard output:
// JSON by default (keys sorted, no timestamps, so identical argv + seed + p
// give byte-identical output), aligned text with --text. Commands hand data
// to each other through ideal / syzygy / matrix files, not shell pipes.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "linsyz/bott.hpp"
#include "linsyz/errors.hpp"
#include "linsyz/exactint.hpp"
#include "linsyz/field.hpp"
#include "linsyz/gensyz.hpp"
#include "linsyz/grass.hpp"
#include "linsyz/io.hpp"
#include "linsyz/matrix.hpp"
#include "linsyz/mukai.hpp"
#include "linsyz/polyring.hpp"
#include "linsyz/prng.hpp"
#include "linsyz/rep.hpp"
#include "linsyz/syzygy.hpp"

using nlohmann::json;
using namespace linsyz;

namespace {

constexpr const char* kArtifactVersion = "1.0.0";

// wall-clock stage timer; disabled unless --timings is given, because the
// default report must be byte-deterministic
struct StageTimer {
    bool enabled = false;
    std::chrono::steady_clock::time_point mark = std::chrono::steady_clock::now();
    json stages = json::object();

    void stage(const std::string& name) {
        if (!enabled) return;
        auto now = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(now - mark).count();
        stages[name] = ms;
        mark = now;
    }
};

std::string to_decimal(Int128 v) {
    __int128 x = v.get();
    if (x == 0) return "0";
    bool neg = x < 0;
    unsigned __int128 u = neg ? -(unsigned __int128)x : (unsigned __int128)x;
    std::string s;
    while (u) {
        s.push_back(char('0' + int(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    return std::string(s.rbegin(), s.rend());
}

// emit as a JSON number when it fits in int64, as a decimal string otherwise
json int128_json(Int128 v) {
    __int128 x = v.get();
    if (x >= INT64_MIN && x <= INT64_MAX) return json(int64_t(x));
    return json(to_decimal(v));
}

template <typename T>
json opt_json(const std::optional<T>& v) {
    if (v) return json(*v);
    return json(nullptr);
}

json matrix_json(const Matrix& A) {
    json rows = json::array();
    for (size_t i = 0; i < A.rows(); ++i) {
        json r = json::array();
        for (size_t j = 0; j < A.cols(); ++j) r.push_back(A.at(i, j));
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string matrix_text(const Matrix& A) {
    std::ostringstream os;
    for (size_t i = 0; i < A.rows(); ++i) {
        for (size_t j = 0; j < A.cols(); ++j) {
            if (j) os << ' ';
            os << A.at(i, j);
        }
        os << '\n';
    }
    return os.str();
}

// plain text matrix file: one row per line, whitespace-separated integers
// (negatives allowed, reduced mod p); blank lines and # comments skipped
Matrix read_matrix_file(const Fp& F, const std::string& path) {
    std::istringstream in(read_file(path));
    std::vector<std::vector<uint32_t>> rows;
    std::string line;
    while (std::getline(in, line)) {
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::vector<uint32_t> row;
        int64_t v;
        while (ls >> v) {
            int64_t m = v % int64_t(F.modulus());
            if (m < 0) m += F.modulus();
            row.push_back(uint32_t(m));
        }
        if (!ls.eof()) throw std::invalid_argument("bad matrix entry in " + path);
        if (!rows.empty() && row.size() != rows.front().size())
            throw std::invalid_argument("ragged matrix rows in " + path);
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("empty matrix file " + path);
    Matrix A(0, rows.front().size());
    for (const auto& r : rows) A.append_row(r);
    return A;
}

void write_ideal_file(const GradedIdeal& I, const std::string& path) {
    if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0)
        write_file(path, ideal_to_json(I).dump(2) + "\n");
    else
        write_file(path, ideal_to_text(I));
}

std::vector<int64_t> parse_csv_ints(const std::string& s) {
    std::vector<int64_t> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ',')) {
        size_t pos = 0;
        int64_t v = std::stoll(item, &pos);
        while (pos < item.size() && std::isspace((unsigned char)item[pos])) ++pos;
        if (pos != item.size()) throw std::invalid_argument("bad integer list: " + s);
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

SectionKind parse_kind(const std::string& s) {
    if (s == "curve") return SectionKind::curve;
    if (s == "k3") return SectionKind::k3;
    throw std::invalid_argument("kind must be 'curve' or 'k3'");
}

const char* regime_name(GensyzRegime r) {
    switch (r) {
        case GensyzRegime::reducible: return "reducible";
        case GensyzRegime::scrollar: return "scrollar";
        case GensyzRegime::pfaffian: return "pfaffian";
        default: return "general";
    }
}

uint64_t minor_budget(std::optional<uint64_t> flag_value) {
    if (flag_value) return *flag_value;
    if (const char* env = std::getenv("SYZYGY_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || v == 0)
            throw std::invalid_argument("SYZYGY_BUDGET must be a positive integer");
        return v;
    }
    return 10'000'000ull;
}

json probe_json(const HilbertProbe& pr) {
    json j;
    j["values"] = pr.values;
    j["stabilized_at"] = opt_json(pr.stabilized_at);
    j["stable_value"] = opt_json(pr.stable_value);
    j["empty_from"] = opt_json(pr.empty_from);
    return j;
}

Syzygy load_syzygy(const std::string& path, const GradedIdeal& parent) {
    return syzygy_from_json(json::parse(read_file(path)), parent);
}

void check_syzygy_length(const LinearStrand& st, const Syzygy& s) {
    size_t expect = s.p == 0 ? st.q() : WedgeBasis(st.nvars, s.p).size() * st.q();
    if (s.coeffs.size() != expect)
        throw std::invalid_argument("syzygy coefficient length does not match the ideal");
}

// ---------------------------------------------------------------- text mode

bool is_scalar_array(const json& a) {
    for (const auto& v : a)
        if (v.is_structured()) return false;
    return true;
}

std::string scalar_str(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "-";
    return v.dump();
}

void render_text(std::ostream& os, const json& v, int indent);

// array of objects prints as an aligned table
void render_table(std::ostream& os, const json& arr, int indent) {
    std::vector<std::string> cols;
    for (const auto& row : arr)
        for (auto it = row.begin(); it != row.end(); ++it) {
            bool seen = false;
            for (const auto& c : cols) seen = seen || c == it.key();
            if (!seen) cols.push_back(it.key());
        }
    std::vector<size_t> width(cols.size());
    for (size_t c = 0; c < cols.size(); ++c) {
        width[c] = cols[c].size();
        for (const auto& row : arr)
            if (row.contains(cols[c]))
                width[c] = std::max(width[c], scalar_str(row[cols[c]]).size());
    }
    std::string pad(indent, ' ');
    os << pad;
    for (size_t c = 0; c < cols.size(); ++c)
        os << (c ? "  " : "") << cols[c] << std::string(width[c] - cols[c].size(), ' ');
    os << '\n';
    for (const auto& row : arr) {
        os << pad;
        for (size_t c = 0; c < cols.size(); ++c) {
            std::string cell = row.contains(cols[c]) ? scalar_str(row[cols[c]]) : "-";
            os << (c ? "  " : "") << cell << std::string(width[c] - cell.size(), ' ');
        }
        os << '\n';
    }
}

void render_text(std::ostream& os, const json& v, int indent) {
    std::string pad(indent, ' ');
    if (v.is_object()) {
        size_t w = 0;
        for (auto it = v.begin(); it != v.end(); ++it) w = std::max(w, it.key().size());
        for (auto it = v.begin(); it != v.end(); ++it) {
            const json& val = it.value();
            if (val.is_object() || (val.is_array() && !is_scalar_array(val))) {
                os << pad << it.key() << ":\n";
                if (val.is_array() && !val.empty() && val.front().is_object())
                    render_table(os, val, indent + 2);
                else
                    render_text(os, val, indent + 2);
            } else {
                os << pad << it.key() << ':' << std::string(w - it.key().size() + 1, ' ');
                if (val.is_array()) {
                    os << '[';
                    for (size_t i = 0; i < val.size(); ++i)
                        os << (i ? " " : "") << scalar_str(val[i]);
                    os << ']';
                } else {
                    os << scalar_str(val);
                }
                os << '\n';
            }
        }
    } else if (v.is_array()) {
        for (const auto& row : v) {
            os << pad;
            if (row.is_array()) {
                for (size_t i = 0; i < row.size(); ++i)
                    os << (i ? " " : "") << scalar_str(row[i]);
            } else {
                os << scalar_str(row);
            }
            os << '\n';
        }
    } else {
        os << pad << scalar_str(v) << '\n';
    }
}

void print_report(const json& report, bool text) {
    if (text)
        render_text(std::cout, report, 0);
    else
        std::cout << report.dump(2) << '\n';
}

int emit_error(int code, const std::string& kind, const std::string& message) {
    json err;
    err["artifact_version"] = kArtifactVersion;
    err["error"] = {{"exit_code", code}, {"kind", kind}, {"message", message}};
    std::cout << err.dump(2) << '\n';
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit: linear strands of quadric ideals, syzygy "
                 "ranks and schemes, Grassmannian sections, and twisted-differential "
                 "cohomology on projective space"};
    app.require_subcommand(1);

    uint32_t p = 101;
    uint64_t seed = 0;
    bool text = false, timings = false;
    app.add_option("--p", p, "odd prime modulus of the base field")->capture_default_str();
    app.add_option("--seed", seed, "seed for all randomized constructions")
        ->capture_default_str();
    app.add_flag("--text", text, "aligned text output instead of JSON");
    app.add_flag("--timings", timings,
                 "include per-stage wall times (makes output non-deterministic)");

    // strand
    auto* c_strand = app.add_subcommand(
        "strand", "dimensions of the linear strand spaces of a quadric ideal");
    std::string strand_ideal;
    uint32_t strand_pmax = 0;
    std::string strand_emit;
    uint32_t strand_pos = 0, strand_index = 0;
    c_strand->add_option("--ideal", strand_ideal, "ideal file (text or JSON)")->required();
    c_strand->add_option("--pmax", strand_pmax, "last strand index to compute")->required();
    c_strand->add_option("--emit", strand_emit,
                         "write one strand basis vector as a syzygy file");
    c_strand->add_option("--pos", strand_pos, "strand index of the emitted vector");
    c_strand->add_option("--index", strand_index, "basis row of the emitted vector");
    c_strand->fallthrough();

    // rank
    auto* c_rank = app.add_subcommand(
        "rank", "rank of a syzygy: dimension of the span of its contraction forms");
    std::string rank_ideal, rank_syzygy;
    bool rank_nomember = false;
    c_rank->add_option("--ideal", rank_ideal, "ideal file")->required();
    c_rank->add_option("--syzygy", rank_syzygy, "syzygy file (JSON)")->required();
    c_rank->add_flag("--no-member", rank_nomember,
                     "skip the strand membership verification");
    c_rank->fallthrough();

    // scheme
    auto* c_scheme = app.add_subcommand(
        "scheme", "the quadric ideal spanned by the payload of a syzygy");
    std::string scheme_ideal, scheme_syzygy, scheme_out;
    c_scheme->add_option("--ideal", scheme_ideal, "ideal file")->required();
    c_scheme->add_option("--syzygy", scheme_syzygy, "syzygy file (JSON)")->required();
    c_scheme->add_option("--out", scheme_out, "write the payload ideal to this file");
    c_scheme->fallthrough();

    // restrict
    auto* c_restrict = app.add_subcommand(
        "restrict",
        "push the strand through a linear substitution and report the induced map");
    std::string restrict_ideal, restrict_matrix;
    uint32_t restrict_pos = 0;
    c_restrict->add_option("--ideal", restrict_ideal, "ideal file")->required();
    c_restrict->add_option("--matrix", restrict_matrix,
                           "substitution matrix file (rows = ambient variables)")
        ->required();
    c_restrict->add_option("--pos", restrict_pos, "strand index of the induced map")
        ->required();
    c_restrict->fallthrough();

    // ranklocus
    auto* c_ranklocus = app.add_subcommand(
        "ranklocus",
        "Hilbert probe of the locus where the strand contraction matrix drops rank");
    std::string ranklocus_ideal;
    uint32_t ranklocus_pos = 0, ranklocus_r = 0, ranklocus_dmax = 0;
    std::optional<uint64_t> ranklocus_budget;
    c_ranklocus->add_option("--ideal", ranklocus_ideal, "ideal file")->required();
    c_ranklocus->add_option("--pos", ranklocus_pos, "strand index")->required();
    c_ranklocus->add_option("--r", ranklocus_r, "rank bound: probe the locus of rank <= r")
        ->required();
    c_ranklocus->add_option("--dmax", ranklocus_dmax, "last probed degree")->required();
    c_ranklocus->add_option("--budget", ranklocus_budget,
                            "work bound (default SYZYGY_BUDGET or 10^7)");
    c_ranklocus->fallthrough();

    // gensyz
    auto* c_gensyz = app.add_subcommand(
        "gensyz", "the universal model of a rank-r syzygy in strand position p");
    uint32_t gensyz_pos = 0, gensyz_r = 0;
    std::string gensyz_out, gensyz_out_syzygy;
    c_gensyz->add_option("--pos", gensyz_pos, "strand position of the modeled syzygy")
        ->required();
    c_gensyz->add_option("--r", gensyz_r, "rank of the modeled syzygy")->required();
    c_gensyz->add_option("--out", gensyz_out, "write the model equations to this file");
    c_gensyz->add_option("--out-syzygy", gensyz_out_syzygy,
                         "write the tautological generic syzygy to this file");
    c_gensyz->fallthrough();

    // lift
    auto* c_lift = app.add_subcommand(
        "lift",
        "reconstruct the projection expressing a syzygy as a pullback of the "
        "universal one");
    std::string lift_ideal, lift_syzygy, lift_out_matrix;
    c_lift->add_option("--ideal", lift_ideal, "ideal file")->required();
    c_lift->add_option("--syzygy", lift_syzygy, "syzygy file (JSON)")->required();
    c_lift->add_option("--out-matrix", lift_out_matrix,
                       "write the projection matrix as plain text");
    c_lift->fallthrough();

    // grass
    auto* c_grass = app.add_subcommand(
        "grass",
        "Pluecker quadrics of the Grassmannian of 2-planes in n-space, with its "
        "distinguished minimal-rank syzygies");
    uint32_t grass_n = 0;
    std::string grass_out, grass_u, grass_out_syzygy;
    c_grass->add_option("--n", grass_n, "dimension of the underlying space (4..8)")
        ->required();
    c_grass->add_option("--out", grass_out, "write the Pluecker ideal to this file");
    c_grass->add_option("--u", grass_u,
                        "comma-separated vector in n-space: attach its minimal syzygy");
    c_grass->add_option("--out-syzygy", grass_out_syzygy,
                        "write the attached syzygy to this file");
    c_grass->fallthrough();

    // mukai
    auto* c_mukai = app.add_subcommand(
        "mukai",
        "draw a validated general linear section of a Grassmannian: a canonical "
        "curve or a K3 surface");
    uint32_t mukai_k = 0, mukai_attempts = 32;
    std::string mukai_kind = "curve", mukai_out;
    c_mukai->add_option("--k", mukai_k, "Grassmannian parameter (3 or 4)")->required();
    c_mukai->add_option("--kind", mukai_kind, "curve or k3")->capture_default_str();
    c_mukai->add_option("--max-attempts", mukai_attempts, "redraw budget")
        ->capture_default_str();
    c_mukai->add_option("--out", mukai_out, "write the section ideal to this file");
    c_mukai->fallthrough();

    // dualdeg
    auto* c_dualdeg = app.add_subcommand(
        "dualdeg", "degree probe of the orthogonal dual section in the dual Grassmannian");
    uint32_t dualdeg_k = 0, dualdeg_dmax = 8, dualdeg_attempts = 32;
    std::string dualdeg_kind = "curve";
    c_dualdeg->add_option("--k", dualdeg_k, "Grassmannian parameter (3 or 4)")->required();
    c_dualdeg->add_option("--kind", dualdeg_kind, "curve or k3")->capture_default_str();
    c_dualdeg->add_option("--dmax", dualdeg_dmax, "last probed degree")
        ->capture_default_str();
    c_dualdeg->add_option("--max-attempts", dualdeg_attempts, "redraw budget")
        ->capture_default_str();
    c_dualdeg->fallthrough();

    // counts
    auto* c_counts = app.add_subcommand(
        "counts",
        "closed-form count table: strand dimension, dual section degree, pencil "
        "locus degree, scrollar line count");
    uint32_t counts_k = 0;
    c_counts->add_option("--k", counts_k, "Grassmannian parameter (>= 2)")->required();
    c_counts->fallthrough();

    // bott
    auto* c_bott = app.add_subcommand(
        "bott",
        "cohomology of a twisted differential on projective space by the dotted "
        "Weyl algorithm");
    std::string bott_weight;
    bool bott_corollary = false;
    uint32_t bott_k = 0;
    c_bott->add_option("--weight", bott_weight,
                       "comma-separated twisting weight, e.g. -4,0,0,0,-2");
    c_bott->add_flag("--corollary", bott_corollary,
                     "emit the full (j, verdict) table for the strand complex");
    c_bott->add_option("--k", bott_k, "Grassmannian parameter for --corollary");
    c_bott->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return emit_error(2, "usage", e.what());
    }

    try {
        Fp F(p);
        StageTimer timer;
        timer.enabled = timings;

        json report;
        report["artifact_version"] = kArtifactVersion;
        json inputs;
        inputs["p"] = p;
        json results;
        std::string command;

        if (c_strand->parsed()) {
            command = "strand";
            inputs["ideal"] = strand_ideal;
            inputs["pmax"] = strand_pmax;
            GradedIdeal I = load_ideal(strand_ideal, p);
            timer.stage("load_ms");
            LinearStrand st = linear_strand(I, strand_pmax);
            timer.stage("strand_ms");
            results["nvars"] = st.nvars;
            results["quadrics"] = st.q();
            results["dims"] = st.dims();
            results["terminated"] = st.terminated;
            if (!strand_emit.empty()) {
                inputs["emit"] = strand_emit;
                inputs["pos"] = strand_pos;
                inputs["index"] = strand_index;
                if (strand_pos >= st.spaces.size())
                    throw std::invalid_argument("emit position beyond the computed strand");
                const Echelon& sp = st.spaces[strand_pos];
                if (strand_index >= sp.dim())
                    throw std::invalid_argument("emit index beyond the strand space");
                Syzygy s{strand_pos, sp.rows.row_copy(strand_index)};
                write_file(strand_emit, syzygy_to_json(s, I).dump(2) + "\n");
                results["emitted"] = strand_emit;
            }
        } else if (c_rank->parsed()) {
            command = "rank";
            inputs["ideal"] = rank_ideal;
            inputs["syzygy"] = rank_syzygy;
            GradedIdeal I = load_ideal(rank_ideal, p);
            Syzygy s = load_syzygy(rank_syzygy, I);
            timer.stage("load_ms");
            LinearStrand st = linear_strand(I, rank_nomember ? 0 : s.p);
            check_syzygy_length(st, s);
            timer.stage("strand_ms");
            SyzygyRank rk = syzygy_rank(st, s);
            timer.stage("rank_ms");
            results["pos"] = s.p;
            results["rank"] = rk.rank;
            results["linear_span_dim"] = rk.linear_span.dim();
            results["gradient_convention"] = rk.partial_derivative_convention;
            results["member"] =
                rank_nomember ? json(nullptr) : json(strand_coords(st, s).has_value());
        } else if (c_scheme->parsed()) {
            command = "scheme";
            inputs["ideal"] = scheme_ideal;
            inputs["syzygy"] = scheme_syzygy;
            GradedIdeal I = load_ideal(scheme_ideal, p);
            Syzygy s = load_syzygy(scheme_syzygy, I);
            timer.stage("load_ms");
            LinearStrand st = linear_strand(I, 0);
            check_syzygy_length(st, s);
            GradedIdeal S = syzygy_scheme(st, s);
            timer.stage("scheme_ms");
            results["pos"] = s.p;
            results["nvars"] = S.nvars;
            results["generators"] = S.gens.rows();
            results["ideal_hash"] = ideal_hash(S);
            if (!scheme_out.empty()) {
                inputs["out"] = scheme_out;
                write_ideal_file(S, scheme_out);
                results["written"] = scheme_out;
            }
        } else if (c_restrict->parsed()) {
            command = "restrict";
            inputs["ideal"] = restrict_ideal;
            inputs["matrix"] = restrict_matrix;
            inputs["pos"] = restrict_pos;
            GradedIdeal I = load_ideal(restrict_ideal, p);
            Matrix A = read_matrix_file(F, restrict_matrix);
            timer.stage("load_ms");
            LinearStrand st = linear_strand(I, restrict_pos);
            timer.stage("strand_ms");
            StrandRestriction R = restrict_syzygies(st, A, restrict_pos);
            timer.stage("restrict_ms");
            results["ambient_dims"] = st.dims();
            results["restricted_dims"] = R.strand.dims();
            results["map_rows"] = R.map.rows();
            results["map_cols"] = R.map.cols();
            results["map_rank"] = R.map.empty() ? 0 : rank_kernel(F, R.map).rank;
            results["injective"] = R.injective;
        } else if (c_ranklocus->parsed()) {
            command = "ranklocus";
            inputs["ideal"] = ranklocus_ideal;
            inputs["pos"] = ranklocus_pos;
            inputs["r"] = ranklocus_r;
            inputs["dmax"] = ranklocus_dmax;
            uint64_t budget = minor_budget(ranklocus_budget);
            inputs["budget"] = budget;
            GradedIdeal I = load_ideal(ranklocus_ideal, p);
            timer.stage("load_ms");
            LinearStrand st = linear_strand(I, ranklocus_pos);
            timer.stage("strand_ms");
            RankLocusProbe pr =
                rank_locus_probe(st, ranklocus_pos, ranklocus_r, ranklocus_dmax, budget);
            timer.stage("probe_ms");
            results["minor_count"] = pr.minor_count;
            results["minor_dim"] = pr.minor_dim;
            results["probe"] = probe_json(pr.probe);
        } else if (c_gensyz->parsed()) {
            command = "gensyz";
            inputs["pos"] = gensyz_pos;
            inputs["r"] = gensyz_r;
            GensyzModel m = gensyz_model(F, gensyz_pos, gensyz_r);
            timer.stage("model_ms");
            results["regime"] = regime_name(m.regime);
            results["nvars"] = m.nvars;
            results["linear_vars"] = m.n_l;
            results["coeff_vars"] = m.nvars - m.n_l;
            results["equations"] = m.equations.gens.rows();
            results["var_names"] = m.equations.var_names;
            if (!gensyz_out.empty()) {
                inputs["out"] = gensyz_out;
                write_ideal_file(m.equations, gensyz_out);
                results["written"] = gensyz_out;
            }
            if (!gensyz_out_syzygy.empty()) {
                inputs["out_syzygy"] = gensyz_out_syzygy;
                Syzygy s = make_generic_syzygy(m);
                write_file(gensyz_out_syzygy, syzygy_to_json(s, m.equations).dump(2) + "\n");
                results["written_syzygy"] = gensyz_out_syzygy;
            }
        } else if (c_lift->parsed()) {
            command = "lift";
            inputs["ideal"] = lift_ideal;
            inputs["syzygy"] = lift_syzygy;
            GradedIdeal I = load_ideal(lift_ideal, p);
            Syzygy s = load_syzygy(lift_syzygy, I);
            timer.stage("load_ms");
            LinearStrand st = linear_strand(I, s.p);
            check_syzygy_length(st, s);
            timer.stage("strand_ms");
            LiftResult L = lift_projection(st, s);
            timer.stage("lift_ms");
            results["pos"] = s.p;
            results["rank"] = L.model.r;
            results["regime"] = regime_name(L.model.regime);
            results["model_vars"] = L.model.equations.var_names;
            results["pullbacks_in_ideal"] = L.pullbacks_in_ideal;
            results["pullback_nonzero"] = L.pullback_nonzero;
            results["stacked_rank"] = L.stacked_rank;
            results["reproduces_syzygy"] = L.reproduces_syzygy;
            results["projection"] = matrix_json(L.projection);
            if (!lift_out_matrix.empty()) {
                inputs["out_matrix"] = lift_out_matrix;
                write_file(lift_out_matrix, matrix_text(L.projection));
                results["written_matrix"] = lift_out_matrix;
            }
        } else if (c_grass->parsed()) {
            command = "grass";
            inputs["n"] = grass_n;
            GradedIdeal G = pluecker_ideal(F, grass_n);
            timer.stage("ideal_ms");
            results["n"] = grass_n;
            results["nvars"] = G.nvars;
            results["generators"] = G.gens.rows();
            results["var_names"] = G.var_names;
            results["ideal_hash"] = ideal_hash(G);
            if (!grass_out.empty()) {
                inputs["out"] = grass_out;
                write_ideal_file(G, grass_out);
                results["written"] = grass_out;
            }
            if (!grass_u.empty()) {
                inputs["u"] = grass_u;
                std::vector<int64_t> raw = parse_csv_ints(grass_u);
                std::vector<uint32_t> u;
                for (int64_t v : raw) {
                    int64_t m = v % int64_t(p);
                    if (m < 0) m += p;
                    u.push_back(uint32_t(m));
                }
                GrassSyzygy gs = minimal_syzygy(F, grass_n, u);
                timer.stage("syzygy_ms");
                results["syzygy_pos"] = gs.syzygy.p;
                results["syzygy_rank"] = gs.rank;
                results["span_dim"] = gs.linear_span.dim();
                if (!grass_out_syzygy.empty()) {
                    inputs["out_syzygy"] = grass_out_syzygy;
                    write_file(grass_out_syzygy,
                               syzygy_to_json(gs.syzygy, G).dump(2) + "\n");
                    results["written_syzygy"] = grass_out_syzygy;
                }
            }
        } else if (c_mukai->parsed()) {
            command = "mukai";
            inputs["k"] = mukai_k;
            inputs["kind"] = mukai_kind;
            inputs["seed"] = seed;
            inputs["max_attempts"] = mukai_attempts;
            MukaiSection sect =
                mukai_section(F, mukai_k, parse_kind(mukai_kind), seed, mukai_attempts);
            timer.stage("section_ms");
            results["n"] = sect.n;
            results["ambient_vars"] = sect.ambient_vars;
            results["section_vars"] = sect.m;
            results["attempts"] = sect.attempts;
            results["quadrics"] = sect.ideal.gens.rows();
            results["expected_quadrics"] = sect.expected_quadrics;
            results["expected_cubics"] = sect.expected_cubics;
            results["substitution"] = matrix_json(sect.substitution);
            results["ideal_hash"] = ideal_hash(sect.ideal);
            if (!mukai_out.empty()) {
                inputs["out"] = mukai_out;
                write_ideal_file(sect.ideal, mukai_out);
                results["written"] = mukai_out;
            }
        } else if (c_dualdeg->parsed()) {
            command = "dualdeg";
            inputs["k"] = dualdeg_k;
            inputs["kind"] = dualdeg_kind;
            inputs["seed"] = seed;
            inputs["dmax"] = dualdeg_dmax;
            inputs["max_attempts"] = dualdeg_attempts;
            MukaiSection sect = mukai_section(F, dualdeg_k, parse_kind(dualdeg_kind), seed,
                                              dualdeg_attempts);
            timer.stage("section_ms");
            DualDegreeProbe d = dual_orthogonal_degree(F, sect, dualdeg_dmax);
            timer.stage("probe_ms");
            results["dual_vars"] = d.dual_vars;
            results["probe"] = probe_json(d.probe);
        } else if (c_counts->parsed()) {
            command = "counts";
            inputs["k"] = counts_k;
            CountTable t = count_table(counts_k);
            results["k"] = t.k;
            results["dimV"] = int128_json(t.strand_dim_binomial);
            results["dimVBetti"] = int128_json(t.strand_dim_betti);
            results["degDualGrass"] = int128_json(t.dual_grass_degree);
            results["degW1"] = int128_json(t.w1_degree);
            results["scrollarLines"] = int128_json(t.scrollar_line_count);
        } else if (c_bott->parsed()) {
            command = "bott";
            if (!bott_corollary && bott_weight.empty())
                throw std::invalid_argument("bott needs --weight or --corollary --k");
            if (bott_corollary && !bott_weight.empty())
                throw std::invalid_argument("--weight and --corollary are exclusive");
            if (bott_corollary) {
                if (bott_k < 2) throw std::invalid_argument("--corollary needs --k >= 2");
                inputs["k"] = bott_k;
                inputs["corollary"] = true;
                json table = json::array();
                for (uint32_t j = 0; j + 1 <= bott_k; ++j) {
                    BottResult r = bott_cohomology(en_term_weight(bott_k, j));
                    json row;
                    row["j"] = j;
                    row["verdict"] = r.all_vanish ? "all_vanish" : "single";
                    row["degree"] = r.all_vanish ? json(nullptr) : json(r.degree);
                    row["dim"] = r.all_vanish ? json(nullptr) : int128_json(r.dim);
                    table.push_back(std::move(row));
                }
                timer.stage("table_ms");
                results["k"] = bott_k;
                results["table"] = std::move(table);
            } else {
                std::vector<int64_t> w = parse_csv_ints(bott_weight);
                inputs["weight"] = w;
                BottResult r = bott_cohomology(w);
                timer.stage("cohomology_ms");
                results["all_vanish"] = r.all_vanish;
                results["degree"] = r.all_vanish ? json(nullptr) : json(r.degree);
                results["dim"] = r.all_vanish ? json(0) : int128_json(r.dim);
                results["dominant_weight"] =
                    r.all_vanish ? json(nullptr) : json(r.dominant_weight);
            }
        }

        if (!inputs.contains("seed")) inputs["seed"] = seed;
        report["command"] = command;
        report["inputs"] = inputs;
        report["results"] = results;
        if (timings) report["timings"] = timer.stages;
        print_report(report, text);
        return 0;
    } catch (const DegenerateSection& e) {
        return emit_error(4, "degenerate_section", e.what());
    } catch (const BudgetExceeded& e) {
        return emit_error(5, "budget_exceeded", e.what());
    } catch (const std::system_error& e) {
        return emit_error(3, "file_not_found", e.what());
    } catch (const json::exception& e) {
        return emit_error(2, "usage", e.what());
    } catch (const std::invalid_argument& e) {
        return emit_error(2, "usage", e.what());
    } catch (const std::domain_error& e) {
        return emit_error(2, "usage", e.what());
    } catch (const std::exception& e) {
        return emit_error(1, "internal", e.what());
    }
}
