#pragma once

#include "berez/serialize.hpp"

namespace berez {

enum class BerMethod { classical, traces, both };

struct ReportConfig {
    int max_k = -1;      // < 0: use p + 2q
    int window_lo = 1;   // lo > hi: use [-q-2, p+2q]
    int window_hi = 0;
    BerMethod method = BerMethod::both;
};

/// Full invariant report: s, c, c*, gamma, P, Q, both Berezinian routes,
/// the invariant Hankel polynomials, resultant and annihilating polynomial.
/// Components whose precondition fails are left out and the reason recorded
/// under "skipped".
Json invariant_report(const Supermatrix& a, const ReportConfig& cfg);

/// Berezinian by the requested method(s); "agree" appears when both ran.
Json ber_report(const Supermatrix& a, const ReportConfig& cfg);

/// Annihilating polynomial plus its residual at the matrix itself, which
/// must serialize as exact zero (empty term lists).
Json minpoly_report(const Supermatrix& a, const ReportConfig& cfg);

} // namespace berez
