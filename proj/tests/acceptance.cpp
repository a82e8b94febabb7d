// Acceptance driver: runs every identity the library promises at its full
// canonical scale and prints one PASS/FAIL line per criterion. Exits 0
// only when all criteria hold.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "circulant/verify.hpp"

namespace {

using circulant::verify::CheckResult;

struct Criterion {
    int id;
    const char* label;
    std::function<std::vector<CheckResult>()> run;
};

}  // namespace

int main() {
    using namespace circulant::verify;

    const std::vector<Criterion> criteria = {
        {1, "enumeration matches brute force, n = 4..16",
         [] { return std::vector<CheckResult>{check_enumeration_vs_brute_force(4, 16)}; }},
        {2, "enumeration count equals k(n), n = 2..64",
         [] { return std::vector<CheckResult>{check_enumeration_count(64)}; }},
        {3, "cyclotomic factorization and telescoping products, n <= 256",
         [] {
             return std::vector<CheckResult>{check_factor_product(256),
                                             check_telescoping_products(256)};
         }},
        {4, "odd-divisor phi identity, even n <= 10000",
         [] { return std::vector<CheckResult>{check_phi_identity(10000)}; }},
        {5, "sine-sum basic properties, n <= 400",
         [] { return std::vector<CheckResult>{check_s_basic_properties(400)}; }},
        {6, "closed form equals exact sine sum, qualifying n <= 400",
         [] { return std::vector<CheckResult>{check_s_closed_agreement(400)}; }},
        {7, "power-of-two sine tables, n = 4..1024",
         [] { return std::vector<CheckResult>{check_s_pow2_tables(1024)}; }},
        {8, "spectrum reconstruction from divisor sums, 100 draws per modulus",
         [] { return std::vector<CheckResult>{check_spectrum_reconstruction(0, 100)}; }},
        {9, "exact/numeric coherence and eigenpair residuals, n <= 64",
         [] { return std::vector<CheckResult>{check_exact_numeric_coherence(64, 10)}; }},
        {10, "skew-symmetric exclusivity of the tagged half-orbits",
         [] { return std::vector<CheckResult>{check_skew_exclusivity()}; }},
    };

    std::printf("==========================================================\n");
    std::printf(" integral mixed circulant spectra -- acceptance suite\n");
    std::printf("==========================================================\n");

    int failed = 0;
    for (const Criterion& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::vector<CheckResult> results;
        std::string error;
        try {
            results = criterion.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        bool pass = error.empty();
        std::string detail = error;
        for (const CheckResult& r : results) {
            if (!r.pass) {
                pass = false;
                if (detail.empty()) detail = r.name + ": " + r.detail;
            }
        }
        if (!pass) ++failed;
        std::printf("[%s] criterion %2d: %s  [%.1f s]\n", pass ? "PASS" : "FAIL", criterion.id,
                    criterion.label, seconds);
        if (!pass) std::printf("       %s\n", detail.c_str());
    }

    std::printf("----------------------------------------------------------\n");
    if (failed == 0) {
        std::printf(" all %zu criteria passed\n", criteria.size());
    } else {
        std::printf(" %d of %zu criteria FAILED\n", failed, criteria.size());
    }
    return failed == 0 ? 0 : 1;
}
