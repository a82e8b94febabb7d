#pragma once

// Per-eigenvalue spectrum report: numeric value, exact status, and (when
// the graph is integral) the orbit decomposition of the symbol set. The
// JSON schema is versioned so downstream golden files survive additive
// changes; ordering is deterministic throughout.

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "circulant/characterization.hpp"
#include "circulant/circulant.hpp"
#include "circulant/symbol_set.hpp"

namespace circulant {

inline constexpr int kReportSchemaVersion = 1;

struct EigenvalueRecord {
    std::int64_t j = 0;
    double gamma = 0.0;
    std::optional<std::int64_t> exact;
    bool integral = false;
};

struct SpectrumReport {
    std::int64_t n = 0;
    std::vector<std::int64_t> set;
    std::vector<EigenvalueRecord> eigenvalues;
    bool integral = false;
    std::optional<Decomposition> decomposition;
};

inline SpectrumReport build_spectrum_report(const SymbolSet& c) {
    SpectrumReport report;
    report.n = c.n();
    report.set = c.elements();

    const std::vector<double> gamma = spectrum_numeric(c);
    report.integral = true;
    for (std::int64_t j = 0; j < c.n(); ++j) {
        ExactEigenvalue e = eigenvalue_exact(c, j);
        EigenvalueRecord rec;
        rec.j = j;
        rec.gamma = gamma[static_cast<std::size_t>(j)];
        rec.exact = e.value;
        rec.integral = e.is_integer();
        report.integral = report.integral && rec.integral;
        report.eigenvalues.push_back(rec);
    }
    if (report.integral) report.decomposition = decompose(c);
    return report;
}

inline nlohmann::json decomposition_to_json(const Decomposition& dec) {
    nlohmann::json d2 = nlohmann::json::array();
    for (const auto& [d, tag] : dec.d2) {
        d2.push_back({{"d", d}, {"class", tag == HalfOrbit::Class1 ? 1 : 3}});
    }
    return {{"d1", dec.d1}, {"d2", d2}};
}

inline Decomposition decomposition_from_json(std::int64_t n, const nlohmann::json& j) {
    Decomposition dec;
    dec.n = n;
    dec.d1 = j.at("d1").get<std::vector<std::int64_t>>();
    for (const auto& entry : j.at("d2")) {
        dec.d2.emplace_back(entry.at("d").get<std::int64_t>(),
                            entry.at("class").get<int>() == 1 ? HalfOrbit::Class1
                                                              : HalfOrbit::Class3);
    }
    return dec;
}

inline nlohmann::json report_to_json(const SpectrumReport& report) {
    nlohmann::json eigenvalues = nlohmann::json::array();
    for (const auto& rec : report.eigenvalues) {
        nlohmann::json e{{"j", rec.j}, {"gamma", rec.gamma}, {"integral", rec.integral}};
        if (rec.exact) {
            e["exact"] = *rec.exact;
        } else {
            e["exact"] = nullptr;
        }
        eigenvalues.push_back(std::move(e));
    }
    nlohmann::json out{{"schema", kReportSchemaVersion},
                       {"n", report.n},
                       {"set", report.set},
                       {"eigenvalues", eigenvalues},
                       {"integral", report.integral}};
    if (report.decomposition) {
        out["decomposition"] = decomposition_to_json(*report.decomposition);
    } else {
        out["decomposition"] = nullptr;
    }
    return out;
}

inline SpectrumReport report_from_json(const nlohmann::json& j) {
    SpectrumReport report;
    report.n = j.at("n").get<std::int64_t>();
    report.set = j.at("set").get<std::vector<std::int64_t>>();
    report.integral = j.at("integral").get<bool>();
    for (const auto& e : j.at("eigenvalues")) {
        EigenvalueRecord rec;
        rec.j = e.at("j").get<std::int64_t>();
        rec.gamma = e.at("gamma").get<double>();
        rec.integral = e.at("integral").get<bool>();
        if (!e.at("exact").is_null()) rec.exact = e.at("exact").get<std::int64_t>();
        report.eigenvalues.push_back(rec);
    }
    if (j.contains("decomposition") && !j.at("decomposition").is_null()) {
        report.decomposition = decomposition_from_json(report.n, j.at("decomposition"));
    }
    return report;
}

inline std::string int_set_str(const std::vector<std::int64_t>& xs) {
    std::string out = "{";
    for (std::size_t k = 0; k < xs.size(); ++k) {
        if (k > 0) out += ",";
        out += std::to_string(xs[k]);
    }
    return out + "}";
}

inline std::string decomposition_str(const Decomposition& dec) {
    std::string out = "D1 = " + int_set_str(dec.d1) + "\nD2 = {";
    for (std::size_t k = 0; k < dec.d2.size(); ++k) {
        if (k > 0) out += ", ";
        out += std::to_string(dec.d2[k].first) + ":" + half_orbit_name(dec.d2[k].second);
    }
    return out + "}";
}

inline std::string render_report_table(const SpectrumReport& report) {
    std::ostringstream os;
    os << "n: " << report.n << "\n";
    os << "set: " << int_set_str(report.set) << "\n";
    os << "  j        gamma      exact  integral\n";
    for (const auto& rec : report.eigenvalues) {
        os.width(3);
        os << rec.j << "  ";
        os.width(11);
        os.setf(std::ios::fixed);
        os.precision(6);
        os << rec.gamma << "  ";
        os.width(9);
        if (rec.exact) {
            os << *rec.exact;
        } else {
            os << "-";
        }
        os << "  " << (rec.integral ? "yes" : "no") << "\n";
    }
    os << "integral: " << (report.integral ? "yes" : "no") << "\n";
    if (report.decomposition) os << decomposition_str(*report.decomposition) << "\n";
    return os.str();
}

}  // namespace circulant
