// Counts the integral mixed circulant graphs for each small modulus and
// prints one decomposition alongside its reassembled spectrum.

#include <iostream>

#include "circulant/characterization.hpp"
#include "circulant/ramanujan.hpp"
#include "circulant/report.hpp"

int main() {
    using namespace circulant;

    std::cout << "integral symbol sets per modulus\n";
    for (std::int64_t n = 2; n <= 24; ++n) {
        std::size_t count = 0;
        enumerate_integral(n, [&](const SymbolSet&) { ++count; });
        std::cout << "  n = " << n << ": " << count << " (bound " << count_bound(n) << ")\n";
    }

    const Decomposition dec{12, {6}, {{1, HalfOrbit::Class1}}};
    const SymbolSet c = compose(dec);
    std::cout << "\nexample: n = 12, set = " << int_set_str(c.elements()) << "\n";
    std::cout << decomposition_str(dec) << "\n";
    std::cout << "spectrum from divisor sums:";
    for (std::int64_t v : mixed_spectrum_from_sums(dec)) std::cout << " " << v;
    std::cout << "\n";
    return 0;
}
