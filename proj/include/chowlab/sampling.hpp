#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "chowlab/matrix.hpp"

namespace chowlab {

// Deterministic seed derivation: sample batches draw their own generator from
// (master seed, suite tag, sample index), so suites are order-independent and
// reproducible across platforms (mt19937_64 output is fully specified).
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::uint64_t derive_seed(std::uint64_t master, std::string_view tag,
                                 std::uint64_t index) {
    return splitmix64(master ^ splitmix64(fnv1a(tag) + 0x632be59bd9b4e019ULL * index));
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform value in [0, bound) by rejection; independent of library
    // distribution implementations.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (~std::uint64_t{0} / bound);
        std::uint64_t draw = engine_();
        while (draw >= limit) draw = engine_();
        return draw % bound;
    }

private:
    std::mt19937_64 engine_;
};

inline PrimeField::value_type random_element(const PrimeField& field, Rng& rng) {
    return rng.below(field.p);
}

// Rational draws are small integers; enough for randomized identities over Q.
inline RationalField::value_type random_element(const RationalField&, Rng& rng) {
    return Rational(static_cast<long long>(rng.below(41)) - 20);
}

template <class F>
Matrix<F> random_matrix(const F& field, Rng& rng, std::size_t rows, std::size_t cols) {
    Matrix<F> m(field, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = random_element(field, rng);
    return m;
}

// Column span of a full-rank n x d matrix with i.i.d. uniform entries;
// rank-deficient draws are rejected and redrawn.
template <class F>
Matrix<F> random_subspace_basis(const F& field, Rng& rng, std::size_t n, std::size_t d) {
    while (true) {
        Matrix<F> m = random_matrix(field, rng, n, d);
        if (m.rank() == d) return m;
    }
}

}  // namespace chowlab
