#include "berez/report.hpp"

namespace berez {

namespace {

int effective_max_k(const Supermatrix& a, const ReportConfig& cfg) {
    const Dims d = a.dims();
    int k = cfg.max_k >= 0 ? cfg.max_k : d.p + 2 * d.q;
    return std::max(k, d.p + d.q);
}

std::pair<int, int> effective_window(const Supermatrix& a, const ReportConfig& cfg) {
    if (cfg.window_lo <= cfg.window_hi) return {cfg.window_lo, cfg.window_hi};
    const Dims d = a.dims();
    return {-d.q - 2, d.p + 2 * d.q};
}

Json scalar_list(const std::vector<GrassmannElement>& xs) {
    Json out = Json::array();
    for (const auto& x : xs) out.push_back(element_to_json(x));
    return out;
}

Json scalar_map(const std::map<int, GrassmannElement>& xs) {
    Json out = Json::object();
    for (const auto& [k, v] : xs) out[std::to_string(k)] = element_to_json(v);
    return out;
}

void finish(Json& report, const Json& skipped) {
    if (!skipped.empty()) report["skipped"] = skipped;
}

} // namespace

Json invariant_report(const Supermatrix& a, const ReportConfig& cfg) {
    const Dims d = a.dims();
    const int max_k = effective_max_k(a, cfg);
    const auto [lo, hi] = effective_window(a, cfg);

    Json report{{"p", d.p}, {"q", d.q}, {"generators", a.generators()}};
    Json skipped = Json::object();

    InvariantSeq seq;
    seq.dims = d;
    seq.window_lo = lo;
    seq.window_hi = hi;
    seq.s = power_traces(a, max_k);
    seq.c = char_coeffs_from_traces(seq.s, a.entries().front().zero());
    const auto cs = CharSeries<GrassmannElement>{d, seq.c};
    report["s"] = scalar_list(seq.s);
    report["c"] = scalar_list(seq.c);

    try {
        seq.c_star = dual_coeffs(a, d.p + d.q + 2);
        report["c_star"] = scalar_map(seq.c_star);
    } catch (const NotInvertibleError& e) {
        skipped["c_star"] = e.what();
    }
    try {
        seq.gamma = gamma_seq(a, lo, hi);
        report["gamma"] = scalar_map(seq.gamma);
    } catch (const NotInvertibleError& e) {
        skipped["gamma"] = e.what();
    }

    try {
        const auto f = char_function(cs);
        std::vector<GrassmannElement> p_coeffs{a.entries().front().one()};
        p_coeffs.insert(p_coeffs.end(), f.a.begin(), f.a.end());
        std::vector<GrassmannElement> q_coeffs{a.entries().front().one()};
        q_coeffs.insert(q_coeffs.end(), f.b.begin(), f.b.end());
        report["P"] = scalar_list(p_coeffs);
        report["Q"] = scalar_list(q_coeffs);
    } catch (const NonGenericError& e) {
        skipped["P"] = e.precondition();
        skipped["Q"] = e.precondition();
    }

    try {
        report["ber_classical"] = element_to_json(berezinian_classical(a));
    } catch (const NotInvertibleError& e) {
        skipped["ber_classical"] = e.what();
    }
    try {
        report["ber_traces"] = element_to_json(berezinian_via_traces(cs));
    } catch (const NonGenericError& e) {
        skipped["ber_traces"] = e.precondition();
    }

    report["ber_plus"] = element_to_json(ber_plus(cs));
    report["ber_minus"] = element_to_json(ber_minus(cs));
    report["resultant"] = element_to_json(resultant(cs));

    try {
        report["min_poly"] = poly_to_json(min_poly(a));
    } catch (const NonGenericError& e) {
        skipped["min_poly"] = e.precondition();
    }

    finish(report, skipped);
    return report;
}

Json ber_report(const Supermatrix& a, const ReportConfig& cfg) {
    Json report{{"p", a.dims().p}, {"q", a.dims().q}, {"generators", a.generators()}};
    Json skipped = Json::object();
    const bool want_classical = cfg.method != BerMethod::traces;
    const bool want_traces = cfg.method != BerMethod::classical;

    bool have_classical = false;
    bool have_traces = false;
    GrassmannElement classical = a.entries().front().zero();
    GrassmannElement traces = classical;

    if (want_classical) {
        try {
            classical = berezinian_classical(a);
            report["ber_classical"] = element_to_json(classical);
            have_classical = true;
        } catch (const NotInvertibleError& e) {
            skipped["ber_classical"] = e.what();
        }
    }
    if (want_traces) {
        try {
            traces = berezinian_via_traces(a);
            report["ber_traces"] = element_to_json(traces);
            have_traces = true;
        } catch (const NonGenericError& e) {
            skipped["ber_traces"] = e.precondition();
        }
    }
    if (have_classical && have_traces) report["agree"] = (classical == traces);

    finish(report, skipped);
    return report;
}

Json minpoly_report(const Supermatrix& a, const ReportConfig& cfg) {
    (void)cfg;
    Json report{{"p", a.dims().p}, {"q", a.dims().q}, {"generators", a.generators()}};
    Json skipped = Json::object();
    try {
        const GrassmannPoly poly = min_poly(a);
        report["min_poly"] = poly_to_json(poly);
        const Supermatrix residual = eval_at_matrix(poly, a);
        Json rows = Json::array();
        for (int i = 0; i < residual.size(); ++i) {
            Json row = Json::array();
            for (int j = 0; j < residual.size(); ++j)
                row.push_back(element_to_json(residual.at(i, j)));
            rows.push_back(std::move(row));
        }
        report["annihilation_residual"] = std::move(rows);
        report["residual_is_zero"] = residual.is_zero();
    } catch (const NonGenericError& e) {
        skipped["min_poly"] = e.precondition();
    }
    finish(report, skipped);
    return report;
}

} // namespace berez
