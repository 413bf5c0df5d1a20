#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>

namespace chowlab {

using Rational = boost::multiprecision::cpp_rational;

// Prime field F_p with a runtime modulus. Elements are canonical residues in
// [0, p); the field object travels with every matrix so different moduli can
// coexist in one process.
struct PrimeField {
    using value_type = std::uint64_t;

    std::uint64_t p;

    explicit PrimeField(std::uint64_t prime) : p(prime) {
        if (prime < 2) throw std::invalid_argument("modulus must be at least 2");
        for (std::uint64_t d = 2; d * d <= prime; ++d)
            if (prime % d == 0) throw std::invalid_argument("modulus must be prime");
    }

    value_type zero() const { return 0; }
    value_type one() const { return 1 % p; }
    bool is_zero(value_type a) const { return a == 0; }

    value_type from_int(long long v) const {
        long long r = v % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        return static_cast<value_type>(r);
    }

    value_type add(value_type a, value_type b) const {
        value_type s = a + b;
        return s >= p ? s - p : s;
    }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p - b; }
    value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
    value_type mul(value_type a, value_type b) const {
        return static_cast<value_type>(static_cast<unsigned __int128>(a) * b % p);
    }
    value_type inv(value_type a) const {
        if (a == 0) throw std::domain_error("division by zero in F_p");
        // Extended Euclid on (a, p).
        long long t = 0, new_t = 1;
        long long r = static_cast<long long>(p), new_r = static_cast<long long>(a);
        while (new_r != 0) {
            const long long q = r / new_r;
            t -= q * new_t;
            std::swap(t, new_t);
            r -= q * new_r;
            std::swap(r, new_r);
        }
        if (t < 0) t += static_cast<long long>(p);
        return static_cast<value_type>(t);
    }
    value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }

    bool operator==(const PrimeField&) const = default;
};

// Exact rationals with arbitrary-precision numerator and denominator.
struct RationalField {
    using value_type = Rational;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    bool is_zero(const value_type& a) const { return a == 0; }
    value_type from_int(long long v) const { return v; }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type inv(const value_type& a) const {
        if (a == 0) throw std::domain_error("division by zero");
        return 1 / a;
    }
    value_type div(const value_type& a, const value_type& b) const { return a / b; }

    bool operator==(const RationalField&) const = default;
};

}  // namespace chowlab
