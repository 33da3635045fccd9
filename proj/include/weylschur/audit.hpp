#pragma once

// Cross-route audit: the x-monomial solver against Freudenthal, Kostka and
// the coefficients of A(rho + Lambda) / A(rho).

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "lattice.hpp"
#include "oracle.hpp"
#include "schur.hpp"
#include "solver.hpp"
#include "weyl.hpp"

namespace weylschur {

/// Dominant weights whose reduced partition has weight exactly h.
inline std::vector<DominantWeight> dominant_weights_of_height(int h, const AlgebraContext& ctx) {
    std::vector<DominantWeight> out;
    for (const auto& p : partitions_of(h, ctx.n() - 1)) out.push_back(partition_to_dominant(p, ctx));
    return out;
}

struct AuditRecord {
    DominantWeight weight;
    MultiplicityTable table;
    bool freudenthal_agrees = false;
    bool kostka_agrees = false;
    bool direct_agrees = false;
    bool dimension_agrees = false;
    bool factorization_holds = true; ///< true when not checked
    std::vector<std::string> mismatches;

    bool ok() const {
        return freudenthal_agrees && kostka_agrees && direct_agrees && dimension_agrees && factorization_holds;
    }
};

inline AuditRecord audit_weight(const DominantWeight& w, SchurContext& schur, bool check_factorization = false) {
    const AlgebraContext& ctx = w.context();
    AuditRecord rec{w, solve_multiplicities(w, schur)};

    const oracle::WeightMultiplicityMap fr = oracle::freudenthal(w);
    const auto direct = multiplicities_from_character(w);
    const Partition shape = w.partition();

    rec.freudenthal_agrees = rec.kostka_agrees = rec.direct_agrees = true;
    for (std::size_t i = 0; i < rec.table.entries.size(); ++i) {
        const auto& e = rec.table.entries[i];
        const auto it = fr.find(e.weight.weight());
        const mpz_class f = it == fr.end() ? mpz_class(0) : it->second;
        const mpz_class k = shape.weight() == 0 ? mpz_class(1) : mpz_class(oracle::kostka(shape, e.partition));
        const mpz_class& d = direct[i].second;
        const std::string where = ctx.name() + " " + w.str() + " at " + e.weight.str() + ": solver " +
                                  e.multiplicity.get_str();
        if (f != e.multiplicity) {
            rec.freudenthal_agrees = false;
            rec.mismatches.push_back(where + ", freudenthal " + f.get_str());
        }
        if (k != e.multiplicity) {
            rec.kostka_agrees = false;
            rec.mismatches.push_back(where + ", kostka " + k.get_str());
        }
        if (!(direct[i].first == e.weight) || d != e.multiplicity) {
            rec.direct_agrees = false;
            rec.mismatches.push_back(where + ", alternant quotient " + d.get_str());
        }
    }

    mpz_class fr_total = 0;
    for (const auto& [wt, m] : fr) fr_total += m;
    const mpz_class dim = dimension(w);
    rec.dimension_agrees = rec.table.dimension == dim && fr_total == dim;
    if (!rec.dimension_agrees)
        rec.mismatches.push_back(ctx.name() + " " + w.str() + ": dimension " + dim.get_str() + ", table sum " +
                                 rec.table.dimension.get_str() + ", freudenthal total " + fr_total.get_str());

    if (check_factorization) {
        rec.factorization_holds = verify_factorization(shape, schur).passed;
        if (!rec.factorization_holds) rec.mismatches.push_back(ctx.name() + " " + w.str() + ": factorization fails");
    }
    return rec;
}

} // namespace weylschur
