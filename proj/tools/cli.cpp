/*
   Copyright 2026 The valfield Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "valfield/core/errors.hpp"
#include "valfield/fields/hahn.hpp"
#include "valfield/scenarios/scenarios.hpp"
#include "valfield/witt/witt_polynomials.hpp"
#include "valfield/witt/witt_vector.hpp"

namespace valfield::cli {

namespace {

constexpr int kUsageError = 2;

std::string order_name(oag::Order o) {
    switch (o) {
        case oag::Order::less:
            return "less";
        case oag::Order::equal:
            return "equal";
        case oag::Order::greater:
            return "greater";
    }
    return "?";
}

std::int64_t parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw DomainError("expected an integer for " + what + ", got '" + s + "'");
}

const std::string& need(const std::optional<std::string>& arg, const std::string& op) {
    if (!arg) throw DomainError("'" + op + "' needs a second argument");
    return *arg;
}

std::string run_oag(const std::string& expr, const std::string& op, const std::optional<std::string>& arg,
                    std::int64_t p) {
    const OagElement a = oag::parse_oag(expr, p);
    if (op == "show") return a.to_string();
    if (op == "divisible-by") return oag::divisible_by(a, parse_int(need(arg, op), "n")) ? "true" : "false";
    if (op == "divide") {
        const auto d = oag::divide_in_gamma(a, parse_int(need(arg, op), "n"));
        return d ? d->to_string() : "not divisible";
    }
    if (op == "quotient") return oag::quotient_map(a, oag::ConvexSubgroup{parse_int(need(arg, op), "i")}).to_string();
    if (op == "shift") return a.shifted(parse_int(need(arg, op), "k")).to_string();
    const OagElement b = oag::parse_oag(need(arg, op), p);
    if (op == "add") return (a + b).to_string();
    if (op == "sub") return (a - b).to_string();
    if (op == "compare") return order_name(oag::lex_compare(a, b));
    if (op == "archimedean-equiv") return oag::archimedean_equiv(a, b) ? "true" : "false";
    throw DomainError("unknown oag operation '" + op + "'");
}

witt::WittVec<FinFieldElt> parse_witt(const std::string& text, const FiniteField& f) {
    std::string body = text;
    if (!body.empty() && body.front() == '(') body.erase(body.begin());
    if (!body.empty() && body.back() == ')') body.pop_back();
    std::vector<FinFieldElt> comps;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) comps.push_back(parse_finite_field_element(item, f));
    if (comps.empty()) throw DomainError("empty Witt vector '" + text + "'");
    return witt::WittVec<FinFieldElt>(std::move(comps));
}

std::string run_witt(const std::string& op, const std::vector<std::string>& args, std::int64_t p, int degree,
                     int length) {
    const auto& f = FiniteField::get(p, degree);
    if (op == "polys") {
        const auto& set = witt::WittPolySet::get(p, length);
        std::string out;
        for (int i = 0; i < length; ++i) {
            out += "S" + std::to_string(i) + " = " + set.format(set.sum(i)) + "\n";
            out += "P" + std::to_string(i) + " = " + set.format(set.product(i)) + "\n";
        }
        out.pop_back();
        return out;
    }
    auto arg = [&](std::size_t i) -> const std::string& {
        if (i >= args.size()) throw DomainError("'witt " + op + "' needs " + std::to_string(i + 1) + " argument(s)");
        return args[i];
    };
    if (op == "teichmuller")
        return witt::WittVec<FinFieldElt>::teichmuller(parse_finite_field_element(arg(0), f), length).to_string();
    if (op == "from-integer")
        return witt::WittVec<FinFieldElt>::from_integer(parse_int(arg(0), "m"), f.one(), length).to_string();
    const auto x = parse_witt(arg(0), f);
    if (op == "neg") return (-x).to_string();
    if (op == "inverse") return x.inverse().to_string();
    if (op == "frobenius") return x.frobenius().to_string();
    const auto y = parse_witt(arg(1), f);
    if (op == "add") return (x + y).to_string();
    if (op == "sub") return (x - y).to_string();
    if (op == "mul") return (x * y).to_string();
    throw DomainError("unknown witt operation '" + op + "'");
}

std::string run_hahn(const std::string& op, const std::vector<std::string>& args, std::int64_t p, int terms) {
    const auto& f = FiniteField::get(p);
    auto arg = [&](std::size_t i) -> const std::string& {
        if (i >= args.size()) throw DomainError("'hahn " + op + "' needs " + std::to_string(i + 1) + " argument(s)");
        return args[i];
    };
    const HahnElt x = parse_hahn(arg(0), f);
    if (op == "show") return x.to_string();
    if (op == "valuation") return hahn_valuation(x).to_string();
    if (op == "is-square") {
        const auto t = hahn_is_square(x, terms);
        return std::string(t.is_square ? "true" : "false") + " (" + t.reason + ")";
    }
    if (op == "sqrt") return hahn_sqrt(x, terms).to_string();
    if (op == "inverse") return hahn_inv(x, terms).to_string();
    if (op == "shift") return perf_field_automorphism_shift(x, parse_int(arg(1), "k")).to_string();
    if (op == "coarsen") return coarsen_hahn_valuation(x, oag::ConvexSubgroup{parse_int(arg(1), "i")}).to_string();
    const HahnElt y = parse_hahn(arg(1), f);
    if (op == "add") return (x + y).to_string();
    if (op == "sub") return (x - y).to_string();
    if (op == "mul") return (x * y).to_string();
    throw DomainError("unknown hahn operation '" + op + "'");
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Valued-field computations and scenario verification", "valfield"};
    app.require_subcommand(1);

    scenarios::ScenarioParams params;
    std::string scenario;
    std::string json_path;
    bool quiet = false;
    auto* verify = app.add_subcommand("verify", "Run a scenario and report its claims");
    verify->add_option("scenario", scenario, "Scenario name (see list-scenarios)")->required();
    verify->add_option("--p", params.p, "Residue characteristic (3, 5 or 7)")->capture_default_str();
    verify->add_option("--witt-len", params.witt_length, "Witt vector length n (1..4)")->capture_default_str();
    verify->add_option("--ram-depth", params.ram_depth, "Depth m of p^(1/p^m) (0..3)")->capture_default_str();
    verify->add_option("--prec", params.hahn_precision, "Terms used for Hahn series roots (1..16)")->capture_default_str();
    verify->add_option("--search-bound", params.search_bound, "Height bound D of the curve search (0..3)")
        ->capture_default_str();
    verify->add_option("--seed", params.seed, "Seed for sampled checks")->capture_default_str();
    verify->add_option("--json", json_path, "Write the JSON report to this path ('-' for standard output)");
    verify->add_flag("--quiet", quiet, "Print only the verdict line");

    app.add_subcommand("list-scenarios", "List scenario names");

    std::int64_t p = 5;
    std::string expr, op;
    std::optional<std::string> second;
    auto* oag_cmd = app.add_subcommand("oag", "Arithmetic in the lexicographic sum of copies of Z[1/p]");
    oag_cmd->add_option("expr", expr, "Element, e.g. \"e1 - e2\"")->required();
    oag_cmd->add_option("op", op,
                        "show | divisible-by n | divide n | quotient i | shift k | add x | sub x | compare x | "
                        "archimedean-equiv x")
        ->required();
    oag_cmd->add_option("arg", second, "Second operand");
    oag_cmd->add_option("--p", p, "Prime of the coordinate groups")->capture_default_str();

    std::vector<std::string> args;
    int degree = 1, length = 3, terms = 4;
    auto* witt_cmd = app.add_subcommand("witt", "Truncated Witt vectors over F_q");
    witt_cmd->add_option("op", op, "add | sub | mul | neg | inverse | frobenius | teichmuller | from-integer | polys")
        ->required();
    witt_cmd->add_option("args", args, "Operands, e.g. \"(1, 2, 0)\"");
    witt_cmd->add_option("--p", p, "Prime")->capture_default_str();
    witt_cmd->add_option("--degree", degree, "Degree of F_q over F_p")->capture_default_str();
    witt_cmd->add_option("--length", length, "Length for teichmuller, from-integer and polys")->capture_default_str();

    auto* hahn_cmd = app.add_subcommand("hahn", "Finite-support Hahn series over F_p");
    hahn_cmd->add_option("op", op,
                         "show | valuation | is-square | sqrt | inverse | shift k | coarsen i | add y | sub y | mul y")
        ->required();
    hahn_cmd->add_option("args", args, "Operands, e.g. \"3*t^[e1] + 1*t^[2*e2]\"");
    hahn_cmd->add_option("--p", p, "Prime")->capture_default_str();
    hahn_cmd->add_option("--terms", terms, "Terms for sqrt, inverse and is-square roots")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : kUsageError;
    }

    try {
        if (app.got_subcommand("list-scenarios")) {
            for (const auto& name : scenarios::scenario_names())
                out << name << "  " << scenarios::scenario_summary(name) << "\n";
            return 0;
        }
        if (app.got_subcommand(oag_cmd)) {
            out << run_oag(expr, op, second, p) << "\n";
            return 0;
        }
        if (app.got_subcommand(witt_cmd)) {
            out << run_witt(op, args, p, degree, length) << "\n";
            return 0;
        }
        if (app.got_subcommand(hahn_cmd)) {
            out << run_hahn(op, args, p, terms) << "\n";
            return 0;
        }
        const auto report = scenarios::run_scenario(scenario, params);
        const std::string summary = report.summary();
        if (quiet) {
            out << summary.substr(summary.rfind('\n', summary.size() - 2) + 1);
        } else if (json_path != "-") {
            out << summary;
        }
        if (json_path == "-") {
            out << report.json_text();
        } else if (!json_path.empty()) {
            std::ofstream file(json_path, std::ios::binary);
            if (!file) throw DomainError("cannot write " + json_path);
            file << report.json_text();
        }
        return report.passed() ? 0 : 1;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        if (app.got_subcommand(verify)) err << verify->help();
        return kUsageError;
    } catch (const InsufficientPrecision& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
}

}  // namespace valfield::cli
