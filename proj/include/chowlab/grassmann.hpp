#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chowlab/bundle.hpp"

namespace chowlab {

// A finite product of Grassmannians G(k_1,n_1) x ... x G(k_m,n_m). The
// Schubert basis of factor i consists of the partitions inside the
// k_i x (n_i - k_i) box; the ring structure is the factor-wise
// Littlewood-Richardson product with box truncation.
struct GrassmannProduct {
    std::vector<std::pair<int, int>> factors;  // (k, n) with 1 <= k < n

    GrassmannProduct() = default;
    explicit GrassmannProduct(std::vector<std::pair<int, int>> f);
    GrassmannProduct(int k, int n);

    std::size_t factor_count() const { return factors.size(); }
    int k(std::size_t f) const { return factors[f].first; }
    int n(std::size_t f) const { return factors[f].second; }
    Box box(std::size_t f) const { return Box(k(f), n(f) - k(f)); }
    int dimension() const;
    std::vector<int> taut_ranks() const;
    PartitionTuple point_class_tuple() const;  // full box in every slot

    bool operator==(const GrassmannProduct&) const = default;
    std::string to_string() const;  // "G(2,4)^3", "G(2,4)xG(3,5)"
};

// Element of the cohomology ring of a GrassmannProduct: an integer combination
// of Schubert-class tuples. Mixed total degrees are allowed so total Chern
// classes can be manipulated before extracting components.
class SchubertClass {
public:
    SchubertClass() = default;
    explicit SchubertClass(GrassmannProduct ring);

    static SchubertClass unit(const GrassmannProduct& ring);
    static SchubertClass zero(const GrassmannProduct& ring);
    static SchubertClass schubert(const GrassmannProduct& ring, PartitionTuple t);
    // The partition lives on one factor, all other slots empty.
    static SchubertClass sigma(const GrassmannProduct& ring, std::size_t factor,
                               const Partition& lambda);
    static SchubertClass hyperplane(const GrassmannProduct& ring, std::size_t factor);

    const GrassmannProduct& ring() const { return ring_; }
    const std::map<PartitionTuple, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Int coefficient(const PartitionTuple& t) const;

    // Tuples failing a factor box are dropped (they vanish in the ring).
    void add_term(const PartitionTuple& t, const Int& coeff);

    // Total degree when homogeneous.
    std::optional<int> homogeneous_degree() const;
    SchubertClass component(int degree) const;

    SchubertClass& operator+=(const SchubertClass& other);
    SchubertClass& operator-=(const SchubertClass& other);
    SchubertClass operator+(const SchubertClass& other) const;
    SchubertClass operator-(const SchubertClass& other) const;
    SchubertClass operator*(const SchubertClass& other) const;
    SchubertClass& operator*=(const Int& scalar);

    bool operator==(const SchubertClass&) const = default;
    std::string to_string() const;

private:
    GrassmannProduct ring_;
    std::map<PartitionTuple, Int> terms_;
};

SchubertClass class_multiply(const SchubertClass& a, const SchubertClass& b);

// Coefficient of the point class (full box in every factor).
Int integrate(const SchubertClass& c);

// integrate(c * (sum_i w_i h_i)^d) with d = dim - deg(c). Requires c
// homogeneous and nonnegative weights, not all zero.
Int degree_wrt(const SchubertClass& c, std::span<const long> weights);

// Truncation of a MultiSchur computed over the ring's tautological ranks.
SchubertClass from_multischur(const GrassmannProduct& ring, const MultiSchur& m);

// A bundle on the ring, or the kernel of a surjection primary -> quotient
// (rank and total Chern class follow from the Whitney formula, c(kernel) =
// c(primary)/c(quotient)).
struct BundleSpec {
    BundleExpr primary;
    std::optional<BundleExpr> quotient;

    BundleSpec() = default;
    BundleSpec(BundleExpr p) : primary(std::move(p)) {}  // NOLINT(google-explicit-constructor)
    BundleSpec(BundleExpr p, BundleExpr q) : primary(std::move(p)), quotient(std::move(q)) {}
};

long rank_on(const GrassmannProduct& ring, const BundleSpec& spec);

SchubertClass chern_class_on(const GrassmannProduct& ring, const BundleExpr& e, int degree);

// Components 0..top as one mixed-degree class (top defaults to min(rank,dim)).
SchubertClass total_chern_on(const GrassmannProduct& ring, const BundleSpec& spec);

// Multiplicative inverse of a total class with constant term 1, computed up to
// the given degree (defaults to the ring dimension).
SchubertClass chern_series_inverse(const SchubertClass& total, int max_degree);

// Thom-Porteous class of the locus where a generic map from a trivial rank
// e_rank bundle to F drops to rank <= r: the (e_rank - r) x (e_rank - r)
// determinant det(c_{(f_rank - r) + j - i}(F)). f_chern[i] must be c_i(F)
// starting from c_0 = 1; indices beyond the list are treated as zero.
SchubertClass porteous_class(const GrassmannProduct& ring, int e_rank,
                             std::span<const SchubertClass> f_chern, int f_rank, int r);

struct ZeroLocusProfile {
    SchubertClass top_class;
    long dim = 0;
    std::vector<long> index;  // per factor: n_f minus the sigma_1 weight of c_1
    bool empty_locus = false;
};

// Dimension, per-factor adjunction index and fundamental class of the zero
// locus of a general section.
ZeroLocusProfile zero_locus_profile(const GrassmannProduct& ring, const BundleSpec& spec);

// c_1(wedge^3 T) - c_1(T) on G(6,9) for the rank-6 tautological subbundle T:
// the hyperplane part of the first Chern class of the kernel of the
// contraction map, valid away from the jumping locus.
SchubertClass kernel_c1_on_complement();

enum class SpaceKind { Grassmannian, Isotropic, Orthogonal };

// dim G(k,n) = k(n-k); dim IG(k,n) = k(n-k) - k(k-1)/2 for n even;
// dim OG(k,n) = k(n-k) - k(k+1)/2.
long homogeneous_dim(SpaceKind kind, int k, int n);

// Euler number of the 4-dimensional zero locus of the triple tensor product of
// dual tautological bundles on G(2,4)^3, via the tangent and normal bundle
// sequence: integrate c_4(T_P - E) * c_8(E).
Int d4_zero_locus_euler();

}  // namespace chowlab
