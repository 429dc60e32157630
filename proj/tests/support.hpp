#pragma once

// Seeded generators shared by the property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "gtf/necklace.hpp"

namespace gtf::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    double uniform_real(double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(rng_() >> 11) * 0x1.0p-53);
    }
    Rational small_rational() {
        int num = uniform(-5, 5);
        if (num == 0) num = 1;
        return ScalarTraits<Rational>::from_ratio(num, uniform(1, 4));
    }
    Word word(int n, int min_deg, int max_deg) {
        std::vector<int> letters(static_cast<std::size_t>(uniform(min_deg, max_deg)));
        for (auto& l : letters) l = uniform(1, n);
        return Word::from_letters(letters);
    }
    FreeSeries<Rational> series(int n, int order, int terms, int min_deg = 0) {
        FreeSeries<Rational>::Builder b(n, order);
        for (int t = 0; t < terms; ++t) b.add(word(n, min_deg, order), small_rational());
        return std::move(b).build();
    }
    FreeSeries<Rational> grouplike_candidate(int n, int order, int terms) {
        return series(n, order, terms, 1) + unit_series<Rational>(n, order);
    }
    /// Random combination of iterated brackets of generators.
    FreeSeries<Rational> lie_element(int n, int order, int terms) {
        FreeSeries<Rational> acc(n, order);
        for (int t = 0; t < terms; ++t) {
            const int depth = uniform(1, std::max(1, order));
            FreeSeries<Rational> e = generator_series<Rational>(n, order, uniform(1, n));
            for (int k = 1; k < depth; ++k) e = commutator(generator_series<Rational>(n, order, uniform(1, n)), e);
            acc = acc + e * small_rational();
        }
        return acc;
    }
    CyclicSeries<Rational> cyclic(int n, int order, int terms, int min_deg, int max_deg) {
        CyclicSeries<Rational>::Builder b(n, order);
        for (int t = 0; t < terms; ++t) b.add(CyclicWord::of(word(n, min_deg, max_deg)), small_rational());
        return std::move(b).build();
    }
    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline Rational q(long num, long den = 1) { return ScalarTraits<Rational>::from_ratio(num, den); }

inline FreeSeries<Rational> mono(int n, int order, std::initializer_list<int> letters, Rational c = Rational(1)) {
    return monomial_series<Rational>(n, order, Word::from_letters(letters), c);
}

}  // namespace gtf::testing
