#pragma once

// Symbol (connection) sets of mixed circulant graphs: a modulus n >= 2 and
// a subset of {1,...,n-1}. The skew part of C collects the elements whose
// negation mod n is absent; the rest is the symmetric part, closed under
// u -> n-u. The two parts partition C and drive the whole spectral
// decomposition.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace circulant {

class SymbolSet {
public:
    SymbolSet(std::int64_t n, std::vector<std::int64_t> elements)
        : n_(n), elements_(std::move(elements)) {
        if (n_ < 2) throw std::invalid_argument("n must be at least 2");
        std::sort(elements_.begin(), elements_.end());
        mask_.assign(static_cast<std::size_t>(n_), 0);
        for (std::size_t idx = 0; idx < elements_.size(); ++idx) {
            const std::int64_t k = elements_[idx];
            if (k <= 0 || k >= n_) throw std::invalid_argument("element out of range");
            if (idx > 0 && elements_[idx - 1] == k) {
                throw std::invalid_argument("duplicate element");
            }
            mask_[static_cast<std::size_t>(k)] = 1;
        }
    }

    static SymbolSet empty(std::int64_t n) { return SymbolSet(n, {}); }

    std::int64_t n() const { return n_; }
    const std::vector<std::int64_t>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool is_empty() const { return elements_.empty(); }

    bool contains(std::int64_t k) const {
        return k > 0 && k < n_ && mask_[static_cast<std::size_t>(k)] != 0;
    }

    friend bool operator==(const SymbolSet& a, const SymbolSet& b) {
        return a.n_ == b.n_ && a.elements_ == b.elements_;
    }
    friend bool operator!=(const SymbolSet& a, const SymbolSet& b) { return !(a == b); }

private:
    std::int64_t n_;
    std::vector<std::int64_t> elements_;
    std::vector<char> mask_;
};

struct SymbolSplit {
    SymbolSet symmetric;  // closed under u -> n-u
    SymbolSet skew;       // disjoint from its own negation
};

inline SymbolSplit split(const SymbolSet& c) {
    std::vector<std::int64_t> sym, skew;
    for (std::int64_t u : c.elements()) {
        (c.contains(c.n() - u) ? sym : skew).push_back(u);
    }
    return {SymbolSet(c.n(), std::move(sym)), SymbolSet(c.n(), std::move(skew))};
}

}  // namespace circulant
