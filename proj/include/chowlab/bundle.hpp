#pragma once

#include <span>
#include <string>
#include <vector>

#include "chowlab/schur.hpp"

namespace chowlab {

// Formal expression tree over per-factor tautological subbundles. Taut(f, k)
// is the rank-k tautological subbundle of the f-th Grassmannian factor; the
// remaining nodes are the usual bundle constructions. Chern classes are
// computed by the splitting principle: to factor f we attach formal Chern
// roots x_{f,1..k} of the dual tautological bundle, so the roots of Taut(f,k)
// are -x_{f,i} and c_i of the dual is the i-th elementary symmetric function.
enum class BundleKind { Taut, Trivial, Dual, Sum, Tensor, Wedge, Sym };

struct BundleExpr {
    BundleKind kind = BundleKind::Trivial;
    int factor = -1;  // Taut only
    int rank = 0;     // Taut / Trivial leaves; Taut rank 0 means "bind later"
    int power = 0;    // Wedge / Sym
    std::vector<BundleExpr> children;

    static BundleExpr taut(int factor, int rank = 0);
    static BundleExpr trivial(int rank);
    static BundleExpr dual(BundleExpr e);
    static BundleExpr sum(BundleExpr a, BundleExpr b);
    static BundleExpr tensor(BundleExpr a, BundleExpr b);
    static BundleExpr wedge(int p, BundleExpr e);
    static BundleExpr sym(int p, BundleExpr e);

    bool operator==(const BundleExpr&) const = default;

    std::string to_string() const;  // the CLI grammar, e.g. wedge(3,dual(taut(0)))
};

// Rank by the standard rules; throws on malformed expressions (unbound leaf
// ranks, wedge power out of range, negative symmetric power).
long rank_of(const BundleExpr& e);

// Largest factor index referenced, or -1 when none.
int max_factor_index(const BundleExpr& e);

// Fills in the rank of every Taut leaf from the per-factor ranks and checks
// consistency with leaves that already carry one.
void bind_taut_ranks(BundleExpr& e, std::span<const int> factor_ranks);

// Integer combination of tuples of Schur polynomials, one slot per factor;
// the value of a multi-factor characteristic class before any box truncation.
struct PartitionTuple {
    std::vector<Partition> entries;

    PartitionTuple() = default;
    explicit PartitionTuple(std::vector<Partition> e) : entries(std::move(e)) {}

    int total_weight() const;
    bool operator==(const PartitionTuple&) const = default;
    std::string to_string() const;  // "[2,1|∅|1]" style
};

bool operator<(const PartitionTuple& a, const PartitionTuple& b);

class MultiSchur {
public:
    MultiSchur() = default;
    explicit MultiSchur(std::vector<int> factor_vars);

    static MultiSchur unit(std::vector<int> factor_vars);

    const std::vector<int>& factor_vars() const { return factor_vars_; }
    const std::map<PartitionTuple, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Int coefficient(const PartitionTuple& t) const;

    // Drops tuples with a slot of length > that factor's variable count.
    void add_term(const PartitionTuple& t, const Int& coeff);

    MultiSchur& operator+=(const MultiSchur& other);
    MultiSchur operator+(const MultiSchur& other) const;
    MultiSchur operator*(const MultiSchur& other) const;  // factor-wise LR product
    MultiSchur& operator*=(const Int& scalar);

    bool operator==(const MultiSchur&) const = default;

    std::string to_string() const;

private:
    std::vector<int> factor_vars_;
    std::map<PartitionTuple, Int> terms_;
};

// Chern roots of the expression: integer linear forms over the flattened
// variables (factor f occupies a block of factor_ranks[f] variables).
std::vector<std::vector<int>> chern_roots(const BundleExpr& e, std::span<const int> factor_ranks);

// Degree-d component of the Chern class of e, as an integer combination of
// per-factor Schur polynomial tuples. Zero above the rank; 1 at degree 0.
MultiSchur chern_class(const BundleExpr& e, int degree, std::span<const int> factor_ranks);

// All components 0..max_degree in one elementary-symmetric pass.
std::vector<MultiSchur> chern_classes_up_to(const BundleExpr& e, int max_degree,
                                            std::span<const int> factor_ranks);

}  // namespace chowlab
