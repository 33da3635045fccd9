#pragma once

// Command-line front end. Exit codes: 0 success, 1 usage error, 2 audit
// mismatch, 3 internal inconsistency (inexact division, singular system).

#include <gmpxx.h>

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "weylschur/audit.hpp"
#include "weylschur/weylschur.hpp"

namespace weylschur::cli {

enum ExitCode : int { ok = 0, usage = 1, audit_mismatch = 2, inconsistent = 3 };

struct Query {
    std::string command;
    int rank = 0; ///< N, selecting A_{N-1}
    std::optional<std::vector<int>> weight;    ///< lambda-coordinates
    std::optional<std::vector<int>> partition; ///< mu-basis partition
    std::optional<int> height;
    std::string format = "json";
    bool oracle = false;
    int max_rank = 5;
    int max_height = 5;
};

using json = nlohmann::ordered_json;

namespace detail {

inline json big(const mpz_class& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

inline json terms_json(const XPoly& p) {
    json arr = json::array();
    for (const auto& [m, c] : p.terms()) arr.push_back({{"coefficient", c.get_str()}, {"exponents", m.exponents()}});
    return arr;
}

inline std::string join(const std::vector<int>& v, char sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? std::string(1, sep) : "") + std::to_string(v[i]);
    return s;
}

inline DominantWeight resolve_weight(const Query& q, const AlgebraContext& ctx) {
    if (q.weight && q.partition) throw usage_error("give either --weight or --partition, not both");
    if (q.weight) return DominantWeight(*q.weight, ctx);
    if (q.partition) return partition_to_dominant(Partition(*q.partition), ctx);
    throw usage_error("this command needs --weight or --partition");
}

inline void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

inline int run_mult(const Query& q, const AlgebraContext& ctx, std::ostream& out) {
    const DominantWeight w = resolve_weight(q, ctx);
    SchurContext schur(ctx);
    std::optional<AuditRecord> rec;
    MultiplicityTable t = q.oracle ? (rec = audit_weight(w, schur))->table : solve_multiplicities(w, schur);

    if (q.format == "json") {
        json j{{"algebra", ctx.name()}, {"highest_weight", w.lambda_coords()}, {"dimension", big(t.dimension)}};
        json entries = json::array();
        for (const auto& e : t.entries)
            entries.push_back({{"weight", e.weight.lambda_coords()},
                               {"partition", e.partition.parts()},
                               {"multiplicity", big(e.multiplicity)},
                               {"orbit_size", e.orbit_size}});
        j["entries"] = entries;
        if (rec)
            j["oracle"] = {{"freudenthal", rec->freudenthal_agrees},
                           {"kostka", rec->kostka_agrees},
                           {"alternant", rec->direct_agrees},
                           {"dimension", rec->dimension_agrees}};
        emit(out, j);
    } else if (q.format == "csv") {
        out << "weight,partition,multiplicity,orbit_size\n";
        for (const auto& e : t.entries)
            out << join(e.weight.lambda_coords(), ';') << "," << join(e.partition.parts(), ';') << ","
                << e.multiplicity << "," << e.orbit_size << "\n";
    } else {
        out << "R(" << w.str() << ") of " << ctx.name() << ", dimension " << t.dimension << "\n";
        for (const auto& e : t.entries)
            out << "  " << std::left << std::setw(16) << e.partition.str() << std::setw(20) << e.weight.str()
                << "m = " << e.multiplicity << "  orbit " << e.orbit_size << "\n";
        if (rec) out << (rec->ok() ? "oracles agree\n" : "ORACLE MISMATCH\n");
    }
    return rec && !rec->ok() ? audit_mismatch : ok;
}

inline int run_schur(const Query& q, const AlgebraContext& ctx, std::ostream& out) {
    const Partition p = q.partition ? Partition(*q.partition) : resolve_weight(q, ctx).partition();
    SchurContext schur(ctx);
    const XPoly& s = schur.generalized_schur(p);
    if (q.format == "json") {
        emit(out, {{"algebra", ctx.name()},
                   {"partition", p.parts()},
                   {"polynomial", s.str()},
                   {"factored", str_factored(s)},
                   {"terms", terms_json(s)}});
    } else if (q.format == "csv") {
        out << "coefficient,exponents\n";
        for (const auto& [m, c] : s.terms()) {
            std::vector<int> e(m.exponents().begin(), m.exponents().end());
            out << c.get_str() << "," << join(e, ';') << "\n";
        }
    } else {
        out << "S" << p.str() << " = " << str_factored(s) << "\n";
    }
    return ok;
}

inline int run_orbit(const Query& q, const AlgebraContext& ctx, std::ostream& out) {
    const DominantWeight w = resolve_weight(q, ctx);
    const Partition p = w.partition();
    const UPoly chu = orbit_char_u(p, ctx);
    const XPoly chx = orbit_char_x(p, ctx);
    const GeneratorExpr gen = reduce_to_generators(p);
    const std::uint64_t size = orbit_size(w);
    if (q.oracle && !(oracle::brute_orbit_char(w) == chu)) return audit_mismatch;
    if (q.format == "json") {
        json orbit = json::array();
        for (const auto& o : orbit_weights(w)) orbit.push_back(o.mu());
        emit(out, {{"algebra", ctx.name()},
                   {"weight", w.lambda_coords()},
                   {"partition", p.parts()},
                   {"orbit_size", size},
                   {"orbit", orbit},
                   {"generators", gen.str()},
                   {"character_u", chu.str("u")},
                   {"character_x", chx.str()}});
    } else if (q.format == "csv") {
        out << "mu\n";
        for (const auto& o : orbit_weights(w)) out << join(o.mu(), ';') << "\n";
    } else {
        out << "W(" << w.str() << ") of " << ctx.name() << ": " << size << " weights\n"
            << "  K" << p.str() << " = " << gen.str() << "\n"
            << "  in u: " << chu.str("u") << "\n"
            << "  in x: " << chx.str() << "\n";
    }
    return ok;
}

inline int run_character(const Query& q, const AlgebraContext& ctx, std::ostream& out) {
    const DominantWeight w = resolve_weight(q, ctx);
    const UPoly chu = weyl_character_u(w);
    const XPoly chx = u_to_x(chu, ctx);
    if (q.format == "json") {
        emit(out, {{"algebra", ctx.name()},
                   {"highest_weight", w.lambda_coords()},
                   {"dimension", big(dimension(w))},
                   {"character_u", chu.str("u")},
                   {"character_x", chx.str()}});
    } else {
        out << "ChR(" << w.str() << ") = " << chu.str("u") << "\n"
            << "            = " << str_factored(chx) << "\n";
    }
    return ok;
}

inline int run_sub(const Query& q, const AlgebraContext& ctx, std::ostream& out) {
    if (!q.height) throw usage_error("sub needs --height");
    const int h = *q.height;
    const auto parts = sub_q_lambda1_partitions(h, ctx);
    json entries = json::array();
    std::vector<std::string> labels;
    int prev_len = -1, idx = 0;
    for (const auto& p : parts) {
        idx = p.length() == prev_len ? idx + 1 : 1;
        prev_len = p.length();
        labels.push_back("(" + std::to_string(h) + "_" + std::to_string(p.length()) + ")_" + std::to_string(idx));
    }
    if (q.format == "json") {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            const DominantWeight w = partition_to_dominant(parts[i], ctx);
            entries.push_back({{"label", labels[i]},
                               {"partition", parts[i].parts()},
                               {"length", parts[i].length()},
                               {"weight", w.lambda_coords()},
                               {"reduced_height", height(w)}});
        }
        emit(out, {{"algebra", ctx.name()}, {"height", h}, {"entries", entries}});
    } else if (q.format == "csv") {
        out << "label,partition,length,weight,reduced_height\n";
        for (std::size_t i = 0; i < parts.size(); ++i) {
            const DominantWeight w = partition_to_dominant(parts[i], ctx);
            out << labels[i] << "," << join(parts[i].parts(), ';') << "," << parts[i].length() << ","
                << join(w.lambda_coords(), ';') << "," << height(w) << "\n";
        }
    } else {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            const DominantWeight w = partition_to_dominant(parts[i], ctx);
            out << std::left << std::setw(10) << labels[i] << std::setw(16) << parts[i].str() << w.str() << "\n";
        }
    }
    return ok;
}

inline int run_audit(const Query& q, std::ostream& out) {
    if (q.max_rank < 2 || q.max_height < 1) throw usage_error("audit needs --max-rank >= 2 and --max-height >= 1");
    std::size_t checked = 0;
    json mismatches = json::array();
    for (int n = 2; n <= q.max_rank; ++n) {
        const AlgebraContext ctx(n);
        SchurContext schur(ctx);
        for (int h = 1; h <= q.max_height; ++h) {
            for (const auto& w : dominant_weights_of_height(h, ctx)) {
                const AuditRecord rec = audit_weight(w, schur, q.oracle);
                ++checked;
                for (const auto& m : rec.mismatches) mismatches.push_back(m);
            }
        }
    }
    const bool good = mismatches.empty();
    if (q.format == "json") {
        emit(out, {{"max_rank", q.max_rank},
                   {"max_height", q.max_height},
                   {"checked", checked},
                   {"ok", good},
                   {"mismatches", mismatches}});
    } else {
        out << "audited " << checked << " highest weights: " << (good ? "all routes agree" : "MISMATCH") << "\n";
        for (const auto& m : mismatches) out << "  " << m.get<std::string>() << "\n";
    }
    return good ? ok : audit_mismatch;
}

inline int run_bench(const Query& q, std::ostream& out) {
    using clock = std::chrono::steady_clock;
    json grid = json::array();
    for (int n = 3; n <= q.max_rank; ++n) {
        const AlgebraContext ctx(n);
        for (int h = 1; h <= q.max_height; ++h) {
            const auto weights = dominant_weights_of_height(h, ctx);
            auto t0 = clock::now();
            SchurContext schur(ctx);
            for (const auto& w : weights) (void)solve_multiplicities(w, schur);
            auto t1 = clock::now();
            for (const auto& w : weights) (void)multiplicities_from_character(w);
            auto t2 = clock::now();
            const double solver_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            const double alt_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
            grid.push_back({{"n", n},
                            {"height", h},
                            {"weights", weights.size()},
                            {"solver_ms", solver_ms},
                            {"alternant_ms", alt_ms}});
        }
    }
    if (q.format == "json") {
        emit(out, {{"grid", grid}});
    } else {
        out << "N  height  weights  solver_ms  alternant_ms\n";
        for (const auto& g : grid)
            out << std::left << std::setw(3) << g["n"].get<int>() << std::setw(8) << g["height"].get<int>()
                << std::setw(9) << g["weights"].get<std::size_t>() << std::setw(11) << std::fixed
                << std::setprecision(2) << g["solver_ms"].get<double>() << g["alternant_ms"].get<double>() << "\n";
    }
    return ok;
}

} // namespace detail

/// Executes a parsed query, writing results to `out` and diagnostics to `err`.
inline int run(const Query& q, std::ostream& out, std::ostream& err) {
    try {
        if (q.format != "json" && q.format != "csv" && q.format != "text")
            throw usage_error("unknown format '" + q.format + "'");
        if (q.command == "audit") return detail::run_audit(q, out);
        if (q.command == "bench") return detail::run_bench(q, out);
        const AlgebraContext ctx(q.rank);
        if (q.command == "mult") return detail::run_mult(q, ctx, out);
        if (q.command == "schur") return detail::run_schur(q, ctx, out);
        if (q.command == "orbit") return detail::run_orbit(q, ctx, out);
        if (q.command == "character") return detail::run_character(q, ctx, out);
        if (q.command == "sub") return detail::run_sub(q, ctx, out);
        throw usage_error("unknown command '" + q.command + "'");
    } catch (const usage_error& e) {
        err << "usage error: " << e.what() << "\n";
        return usage;
    } catch (const inconsistency_error& e) {
        err << "internal inconsistency: " << e.what() << "\n";
        return inconsistent;
    }
}

/// Parses argv and runs. `--help` prints usage and returns 0.
inline int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weight multiplicities of A_{N-1} via degenerated Schur functions", "weylschur"};
    app.require_subcommand(1);
    Query q;
    std::vector<int> weight, partition;
    int height = 0;
    std::string oracle = "off";
    auto add_oracle = [&](CLI::App* sub, const std::string& what) {
        sub->add_option("--oracle", oracle, what + " (on|off)")->check(CLI::IsMember({"on", "off"}));
    };

    auto add_common = [&](CLI::App* sub, bool needs_rank) {
        auto* r = sub->add_option("--rank", q.rank, "N, selecting the algebra A_{N-1}");
        if (needs_rank) r->required();
        sub->add_option("--format", q.format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
    };
    auto add_weight = [&](CLI::App* sub) {
        sub->add_option("--weight", weight, "lambda-coordinates, comma separated")->delimiter(',');
        sub->add_option("--partition", partition, "mu-basis partition, comma separated")->delimiter(',');
    };

    auto* mult = app.add_subcommand("mult", "multiplicity table of an irreducible representation");
    add_common(mult, true);
    add_weight(mult);
    add_oracle(mult, "cross-check against Freudenthal, Kostka and alternants");

    auto* schur = app.add_subcommand("schur", "generalized (degenerated) Schur function S_(q)");
    add_common(schur, true);
    add_weight(schur);

    auto* orbit = app.add_subcommand("orbit", "Weyl orbit of a dominant weight and its character");
    add_common(orbit, true);
    add_weight(orbit);
    add_oracle(orbit, "cross-check against brute-force orbit enumeration");

    auto* character = app.add_subcommand("character", "irreducible character A(rho+L)/A(rho)");
    add_common(character, true);
    add_weight(character);

    auto* sub = app.add_subcommand("sub", "dominant weights of Sub(Q lambda_1)");
    add_common(sub, true);
    sub->add_option("--height", height, "Q")->required();

    auto* audit = app.add_subcommand("audit", "oracle-equivalence sweep");
    add_common(audit, false);
    audit->add_option("--max-rank", q.max_rank, "largest N swept (from N = 2)");
    audit->add_option("--max-height", q.max_height, "largest height swept");
    add_oracle(audit, "also verify the alternant factorization");

    auto* bench = app.add_subcommand("bench", "time the Schur route against alternant division");
    add_common(bench, false);
    bench->add_option("--max-rank", q.max_rank, "largest N (from N = 3)");
    bench->add_option("--max-height", q.max_height, "largest height");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return usage;
    }

    for (auto* s : app.get_subcommands()) q.command = s->get_name();
    if (!weight.empty()) q.weight = weight;
    if (!partition.empty()) q.partition = partition;
    if (q.command == "sub") q.height = height;
    q.oracle = oracle == "on";
    return run(q, out, err);
}

} // namespace weylschur::cli
