#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace chowlab {

// Integer partition: weakly decreasing positive parts. Trailing zeros are
// never stored, so structural equality is value equality. Partitions index
// Schubert classes and Schur polynomials throughout the library.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    // Accepts any list of nonnegative integers: sorts descending, drops zeros.
    static Partition from_unsorted(std::vector<int> values);

    const std::vector<int>& parts() const { return parts_; }
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int first() const { return parts_.empty() ? 0 : parts_[0]; }
    int weight() const;

    Partition conjugate() const;

    // Componentwise containment of Young diagrams.
    bool contains(const Partition& mu) const;

    std::string to_string() const;  // "(4,3,2,1)"; "()" for the empty partition

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// Canonical total order used by every term map in the library: weight first,
// then lexicographically descending parts, so iteration over one weight matches
// the enumerate_partitions order ((2) before (1,1)). Byte-stable output depends
// on this order; do not change it.
bool canonical_less(const Partition& a, const Partition& b);

inline bool operator<(const Partition& a, const Partition& b) { return canonical_less(a, b); }

// Dominance order on partitions of equal weight (prefix sums of a all >= those
// of b means a dominates b).
bool dominates(const Partition& a, const Partition& b);

// The k x m rectangle truncating the Schubert basis of G(k, k+m).
struct Box {
    int rows = 0;
    int cols = 0;
    Box(int r, int c);
};

bool fits_in_box(const Partition& p, const Box& b);

// Reversed complement inside the box; involution. Rejects partitions that do
// not fit.
Partition box_complement(const Partition& p, const Box& b);

// All partitions of the given weight fitting in the box, in lexicographic
// descending order.
std::vector<Partition> enumerate_partitions(int weight, const Box& b);

}  // namespace chowlab
