#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "berez/report.hpp"
#include "berez/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIdentityViolation = 1;
constexpr int kExitInputError = 2;
constexpr int kExitNonGeneric = 3;

struct Options {
    std::string input;
    std::string output;
    std::string method = "both";
    std::string window;
    int max_k = -1;
    std::uint64_t seed = 42;
};

berez::ReportConfig to_config(const Options& opt) {
    berez::ReportConfig cfg;
    cfg.max_k = opt.max_k;
    if (opt.method == "classical") cfg.method = berez::BerMethod::classical;
    else if (opt.method == "traces") cfg.method = berez::BerMethod::traces;
    else cfg.method = berez::BerMethod::both;
    if (!opt.window.empty()) {
        const auto colon = opt.window.find(':');
        if (colon == std::string::npos)
            throw berez::ParseError("window must look like LO:HI");
        try {
            cfg.window_lo = std::stoi(opt.window.substr(0, colon));
            cfg.window_hi = std::stoi(opt.window.substr(colon + 1));
        } catch (const std::exception&) {
            throw berez::ParseError("window must look like LO:HI");
        }
        if (cfg.window_lo > cfg.window_hi) throw berez::ParseError("window is empty");
    }
    return cfg;
}

void emit(const Options& opt, const std::string& text) {
    if (opt.output.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(opt.output);
    if (!out) throw berez::Error("cannot open output file '" + opt.output + "'");
    out << text << "\n";
}

int emit_report(const Options& opt, const berez::Json& report) {
    emit(opt, report.dump(2));
    if (report.contains("skipped")) {
        for (const auto& [key, reason] : report["skipped"].items())
            std::cerr << "skipped " << key << ": " << reason.get<std::string>() << "\n";
        return kExitNonGeneric;
    }
    return kExitOk;
}

int run_checks(const Options& opt, const std::vector<berez::CheckResult>& results) {
    std::string text;
    int passed = 0, failed = 0, skipped = 0;
    for (const auto& r : results) {
        text += berez::to_string(r.status) + "\t" + r.case_id + "\t" + r.name;
        if (!r.detail.empty()) text += "\t" + r.detail;
        text += "\n";
        if (r.status == berez::CheckStatus::pass) ++passed;
        else if (r.status == berez::CheckStatus::fail) ++failed;
        else ++skipped;
    }
    text += "total\tpass=" + std::to_string(passed) + "\tfail=" + std::to_string(failed) +
            "\tskip=" + std::to_string(skipped);
    emit(opt, text);
    return berez::all_passed(results) ? kExitOk : kExitIdentityViolation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Grassmann-algebra and supermatrix calculator"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* cmd, bool needs_input) {
        auto* in = cmd->add_option("--input", opt.input, "supermatrix JSON document");
        if (needs_input) in->required();
        cmd->add_option("--output", opt.output, "write the report here instead of stdout");
        cmd->add_option("--max-k", opt.max_k, "how many characteristic coefficients to compute");
        cmd->add_option("--method", opt.method, "classical | traces | both")
            ->check(CLI::IsMember({"classical", "traces", "both"}));
        cmd->add_option("--window", opt.window, "gamma window LO:HI");
        cmd->add_option("--seed", opt.seed, "seed for randomized identity batteries");
    };

    auto* invariants = app.add_subcommand("invariants", "full invariant report");
    add_common(invariants, true);
    auto* ber = app.add_subcommand("ber", "Berezinian by one or both formulas");
    add_common(ber, true);
    auto* minpoly = app.add_subcommand("minpoly", "annihilating polynomial and its residual");
    add_common(minpoly, true);
    auto* verify = app.add_subcommand("verify", "run the exact identity suite");
    add_common(verify, false);
    auto* selftest = app.add_subcommand("selftest", "identity suite plus fault injection");
    add_common(selftest, false);

    CLI11_PARSE(app, argc, argv);

    try {
        const berez::ReportConfig cfg = to_config(opt);
        if (invariants->parsed())
            return emit_report(opt, berez::invariant_report(berez::read_supermatrix_file(opt.input), cfg));
        if (ber->parsed())
            return emit_report(opt, berez::ber_report(berez::read_supermatrix_file(opt.input), cfg));
        if (minpoly->parsed()) {
            const auto report = berez::minpoly_report(berez::read_supermatrix_file(opt.input), cfg);
            const int code = emit_report(opt, report);
            if (code == kExitOk && !report.value("residual_is_zero", false)) {
                std::cerr << "annihilation residual is nonzero\n";
                return kExitIdentityViolation;
            }
            return code;
        }
        if (verify->parsed()) {
            if (opt.input.empty()) return run_checks(opt, berez::verify_battery(opt.seed));
            return run_checks(opt,
                              berez::verify_matrix("input", berez::read_supermatrix_file(opt.input),
                                                   opt.seed));
        }
        if (selftest->parsed()) return run_checks(opt, berez::selftest_checks(opt.seed));
    } catch (const berez::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const berez::NonGenericError& e) {
        std::cerr << "precondition failed: " << e.precondition() << "\n";
        return kExitNonGeneric;
    } catch (const berez::NotInvertibleError& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return kExitNonGeneric;
    } catch (const berez::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
