#pragma once

// Command-line interface. Exit-code contract:
//   0  success / property holds
//   1  semantic false (not integral, verification failed)
//   2  usage error or violated precondition
//
// Options are --name [value]; a missing value is the empty string, so
// `--set` with nothing after it is the empty symbol set.

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "circulant/characterization.hpp"
#include "circulant/circulant.hpp"
#include "circulant/cyclotomic.hpp"
#include "circulant/dot_export.hpp"
#include "circulant/format.hpp"
#include "circulant/ramanujan.hpp"
#include "circulant/report.hpp"
#include "circulant/symbol_set.hpp"
#include "circulant/verify.hpp"

namespace circulant::cli {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail_c {

inline std::int64_t parse_int(const std::string& text) {
    if (text.empty()) throw UsageError("invalid integer: empty value");
    std::size_t pos = 0;
    std::int64_t value = 0;
    try {
        value = std::stoll(text, &pos);
    } catch (const std::exception&) {
        throw UsageError("invalid integer: " + text);
    }
    if (pos != text.size()) throw UsageError("invalid integer: " + text);
    return value;
}

inline std::vector<std::string> split_list(const std::string& text, char sep) {
    std::vector<std::string> out;
    if (text.empty()) return out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, sep)) out.push_back(item);
    if (!text.empty() && text.back() == sep) out.push_back("");
    return out;
}

struct Args {
    std::map<std::string, std::string> values;
    std::set<std::string> present;

    bool has(const std::string& name) const { return present.count(name) > 0; }
    std::string get(const std::string& name, const std::string& fallback = "") const {
        auto it = values.find(name);
        return it == values.end() ? fallback : it->second;
    }
    std::string require(const std::string& name) const {
        if (!has(name)) throw UsageError("missing required option --" + name);
        return get(name);
    }
};

inline Args scan_options(const std::vector<std::string>& tokens,
                         const std::set<std::string>& allowed) {
    Args args;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const std::string& tok = tokens[i];
        if (tok.rfind("--", 0) != 0 || tok.size() == 2) {
            throw UsageError("unexpected argument: " + tok);
        }
        const std::string name = tok.substr(2);
        if (!allowed.count(name)) throw UsageError("unknown option --" + name);
        std::string value;
        if (i + 1 < tokens.size() && tokens[i + 1].rfind("--", 0) != 0) {
            value = tokens[++i];
        }
        args.values[name] = value;
        args.present.insert(name);
    }
    return args;
}

}  // namespace detail_c

// "--n <int> --set <comma list>" semantics; --set may be empty.
inline SymbolSet parse_symbol_set(const std::string& n_text, const std::string& set_text) {
    const std::int64_t n = detail_c::parse_int(n_text);
    std::vector<std::int64_t> elems;
    for (const std::string& item : detail_c::split_list(set_text, ',')) {
        elems.push_back(detail_c::parse_int(item));
    }
    return SymbolSet(n, std::move(elems));
}

namespace detail_c {

inline SymbolSet symbol_set_from_args(const Args& args) {
    return parse_symbol_set(args.require("n"), args.get("set"));
}

inline int cmd_spectrum(const Args& args, std::ostream& out) {
    const SymbolSet c = symbol_set_from_args(args);
    const SpectrumReport report = build_spectrum_report(c);
    if (args.has("json")) {
        out << report_to_json(report).dump(2) << "\n";
    } else {
        out << render_report_table(report);
    }
    return 0;
}

inline int cmd_check(const Args& args, std::ostream& out) {
    const IntegralityResult r = is_integral(symbol_set_from_args(args));
    if (r.integral) {
        out << "integral\n";
        return 0;
    }
    out << "not integral: witness j=" << *r.witness << "\n";
    return 1;
}

inline int cmd_decompose(const Args& args, std::ostream& out) {
    const auto dec = decompose(symbol_set_from_args(args));
    if (!dec) {
        out << "not integral\n";
        return 1;
    }
    out << decomposition_str(*dec) << "\n";
    return 0;
}

inline int cmd_enumerate(const Args& args, std::ostream& out) {
    const std::int64_t n = parse_int(args.require("n"));
    if (args.has("count-only")) {
        std::size_t count = 0;
        enumerate_integral(n, [&](const SymbolSet&) { ++count; });
        out << count << "\n";
    } else {
        enumerate_integral(n, [&](const SymbolSet& s) { out << int_set_str(s.elements()) << "\n"; });
    }
    return 0;
}

inline int cmd_cyclo(const Args& args, std::ostream& out) {
    const std::int64_t n = parse_int(args.require("n"));
    GaussianPoly p;
    if (args.has("factor")) {
        const std::string f = args.get("factor");
        if (f != "1" && f != "3") throw UsageError("--factor must be 1 or 3");
        p = cyclotomic_factor(n, f == "1" ? 1 : 3);
    } else {
        p = cyclotomic(n);
    }
    out << "coeffs: " << poly_coeff_list(p) << "\n";
    out << "poly: " << poly_pretty(p) << "\n";
    return 0;
}

inline int cmd_rsum(const Args& args, std::ostream& out) {
    const std::string kind = args.require("kind");
    const std::int64_t n = parse_int(args.require("n"));
    const std::int64_t t = parse_int(args.require("t"));
    if (kind == "c") {
        if (args.has("closed")) throw UsageError("--closed applies to --kind s only");
        out << c_sum(n, t) << "\n";
    } else if (kind == "s") {
        out << (args.has("closed") ? s_closed(n, t) : s_sum(n, t)) << "\n";
    } else {
        throw UsageError("--kind must be c or s");
    }
    return 0;
}

inline int cmd_export_dot(const Args& args, std::ostream& out) {
    out << export_dot(symbol_set_from_args(args));
    return 0;
}

inline int cmd_verify(const Args& args, std::ostream& out) {
    const std::int64_t cap = args.has("max-n") ? parse_int(args.require("max-n")) : 0;
    std::vector<std::string> suites;
    if (args.has("suite")) {
        suites = split_list(args.get("suite"), ',');
        if (suites.empty()) throw UsageError("--suite needs a comma-separated list of names");
    } else {
        suites = verify::suite_names();
    }

    std::size_t failed = 0, total = 0;
    for (const std::string& suite : suites) {
        for (const verify::CheckResult& r : verify::run_suite(suite, cap)) {
            ++total;
            if (!r.pass) ++failed;
            out << (r.pass ? "[PASS] " : "[FAIL] ") << r.suite << "/" << r.name << " ("
                << r.scope << ")";
            if (!r.pass) out << ": " << r.detail;
            out << "\n";
        }
    }
    if (failed == 0) {
        out << "all " << total << " checks passed\n";
    } else {
        out << failed << " of " << total << " checks failed\n";
    }
    return failed == 0 ? 0 : 1;
}

inline const char* usage_text() {
    return "usage: circulant <subcommand> [options]\n"
           "\n"
           "subcommands:\n"
           "  spectrum   --n N --set LIST [--json]     eigenvalues, exact status, decomposition\n"
           "  check      --n N --set LIST              exit 0 if integral, 1 with witness if not\n"
           "  decompose  --n N --set LIST              orbit decomposition or 'not integral'\n"
           "  enumerate  --n N [--count-only]          all integral symbol sets for modulus N\n"
           "  cyclo      --n N [--factor 1|3]          cyclotomic polynomial or its Q(i) factor\n"
           "  rsum       --kind c|s --n N --t T [--closed]   exact trigonometric divisor sum\n"
           "  export-dot --n N --set LIST              Graphviz DOT of the mixed graph\n"
           "  verify     [--max-n N] [--suite a,b]     run the module property suites\n";
}

}  // namespace detail_c

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using namespace detail_c;
    if (args.empty()) {
        err << usage_text();
        return 2;
    }
    const std::string& cmd = args[0];
    const std::vector<std::string> rest(args.begin() + 1, args.end());
    try {
        if (cmd == "help" || cmd == "--help" || cmd == "-h") {
            out << usage_text();
            return 0;
        }
        if (cmd == "spectrum") {
            return cmd_spectrum(scan_options(rest, {"n", "set", "json"}), out);
        }
        if (cmd == "check") {
            return cmd_check(scan_options(rest, {"n", "set"}), out);
        }
        if (cmd == "decompose") {
            return cmd_decompose(scan_options(rest, {"n", "set"}), out);
        }
        if (cmd == "enumerate") {
            return cmd_enumerate(scan_options(rest, {"n", "count-only"}), out);
        }
        if (cmd == "cyclo") {
            return cmd_cyclo(scan_options(rest, {"n", "factor"}), out);
        }
        if (cmd == "rsum") {
            return cmd_rsum(scan_options(rest, {"kind", "n", "t", "closed"}), out);
        }
        if (cmd == "export-dot") {
            return cmd_export_dot(scan_options(rest, {"n", "set"}), out);
        }
        if (cmd == "verify") {
            return cmd_verify(scan_options(rest, {"max-n", "suite"}), out);
        }
        err << "unknown subcommand: " << cmd << "\n" << usage_text();
        return 2;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace circulant::cli
