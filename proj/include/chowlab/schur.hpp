#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>

#include "chowlab/partition.hpp"

namespace chowlab {

using Int = boost::multiprecision::cpp_int;

// A symmetric polynomial in the monomial basis: coefficient per monomial
// orbit, keyed by the exponent multiset written as a partition.
using OrbitPoly = std::map<Partition, Int>;

// Integer combination of Schur polynomials in a fixed number of variables.
// Keys of length > num_vars are the zero polynomial and are never stored.
class SchurPoly {
public:
    SchurPoly() = default;
    explicit SchurPoly(int num_vars);
    SchurPoly(int num_vars, std::map<Partition, Int> terms);

    static SchurPoly single(int num_vars, const Partition& lambda, Int coeff = 1);

    int num_vars() const { return num_vars_; }
    const std::map<Partition, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Int coefficient(const Partition& lambda) const;

    // Drops partitions of length > num_vars; erases cancelled terms.
    void add_term(const Partition& lambda, const Int& coeff);

    SchurPoly& operator+=(const SchurPoly& other);
    SchurPoly& operator-=(const SchurPoly& other);
    SchurPoly operator+(const SchurPoly& other) const;
    SchurPoly operator-(const SchurPoly& other) const;
    SchurPoly operator*(const SchurPoly& other) const;  // Littlewood-Richardson
    SchurPoly& operator*=(const Int& scalar);

    bool operator==(const SchurPoly&) const = default;

    std::string to_string() const;

private:
    int num_vars_ = 0;
    std::map<Partition, Int> terms_;
};

// Littlewood-Richardson coefficient c^nu_{lambda,mu}, counted by a pruned
// depth-first fill of the skew diagram nu/lambda in reading order. Zero when
// the weights do not add up or nu does not contain lambda.
Int lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

// Product in the Schur basis; both factors must share num_vars.
SchurPoly schur_multiply(const SchurPoly& a, const SchurPoly& b);

// Number of semistandard tableaux of shape lambda and content mu (entries i
// appearing mu_i times). Memoized horizontal-strip dynamic program.
Int kostka_number(const Partition& lambda, const Partition& mu);

// Monomial-basis expansion of s_lambda in num_vars variables: the Kostka row
// {mu -> K_{lambda,mu} : length(mu) <= num_vars}.
OrbitPoly schur_monomial_orbits(const Partition& lambda, int num_vars);

// Inverse of the expansion above for an arbitrary symmetric polynomial given
// by monomial-orbit coefficients: repeated subtraction of the leading Schur
// term in the canonical (weight, then lexicographic) order. Rejects orbit keys
// with more parts than num_vars.
SchurPoly polynomial_to_schur(const OrbitPoly& poly, int num_vars);

// Dense front-end: a polynomial given monomial-by-monomial (exponent vectors
// of length num_vars). Verifies full symmetry - every monomial in an orbit
// must carry the orbit coefficient - and compresses to orbit form. Throws when
// the leading monomial of the defect is not weakly decreasing, i.e. when the
// input is not symmetric.
OrbitPoly monomials_to_orbits(const std::map<std::vector<int>, Int>& monomials, int num_vars);

}  // namespace chowlab
