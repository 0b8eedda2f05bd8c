#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "rational.hpp"

namespace bethe {

/// Deterministic source of small rationals; the same seed yields the same stream.
class SeededRandom {
public:
    explicit SeededRandom(std::uint64_t seed = 1) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    long integer(long lo, long hi) {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(engine_);
    }

    /// num/den with |num| <= max_num and 1 <= den <= max_den.
    Rational rational(long max_num = 9, long max_den = 5) {
        long num = integer(-max_num, max_num);
        long den = integer(1, max_den);
        return Rational(num, den);
    }

    Rational nonzero_rational(long max_num = 9, long max_den = 5) {
        for (;;) {
            Rational r = rational(max_num, max_den);
            if (!r.is_zero()) return r;
        }
    }

    /// n pairwise distinct rationals.
    std::vector<Rational> distinct_rationals(int n, long max_num = 20, long max_den = 3) {
        std::vector<Rational> out;
        while (static_cast<int>(out.size()) < n) {
            Rational r = rational(max_num, max_den);
            bool fresh = true;
            for (const auto& x : out) fresh = fresh && x != r;
            if (fresh) out.push_back(r);
        }
        return out;
    }

    double uniform(double lo = 0.0, double hi = 1.0) {
        std::uniform_real_distribution<double> d(lo, hi);
        return d(engine_);
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace bethe
