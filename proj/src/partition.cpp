#include "chowlab/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace chowlab {

namespace {

void check_decreasing_positive(const std::vector<int>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    check_decreasing_positive(parts_);
}

Partition::Partition(std::initializer_list<int> parts) : parts_(parts) {
    check_decreasing_positive(parts_);
}

Partition Partition::from_unsorted(std::vector<int> values) {
    for (int v : values)
        if (v < 0) throw std::invalid_argument("partition parts must be nonnegative");
    std::sort(values.begin(), values.end(), std::greater<int>());
    while (!values.empty() && values.back() == 0) values.pop_back();
    Partition p;
    p.parts_ = std::move(values);
    return p;
}

int Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> conj(static_cast<std::size_t>(parts_[0]), 0);
    for (int part : parts_)
        for (int j = 0; j < part; ++j) ++conj[static_cast<std::size_t>(j)];
    Partition p;
    p.parts_ = std::move(conj);
    return p;
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (std::size_t i = 0; i < mu.length(); ++i)
        if (mu.parts_[i] > parts_[i]) return false;
    return true;
}

std::string Partition::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

bool canonical_less(const Partition& a, const Partition& b) {
    const int wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa < wb;
    // Within one weight: lexicographically larger parts come first.
    return a.parts() > b.parts();
}

bool dominates(const Partition& a, const Partition& b) {
    if (a.weight() != b.weight()) return false;
    int pa = 0, pb = 0;
    const std::size_t len = std::max(a.length(), b.length());
    for (std::size_t i = 0; i < len; ++i) {
        pa += a.part(i);
        pb += b.part(i);
        if (pa < pb) return false;
    }
    return true;
}

Box::Box(int r, int c) : rows(r), cols(c) {
    if (r < 1 || c < 1) throw std::invalid_argument("box sides must be >= 1");
}

bool fits_in_box(const Partition& p, const Box& b) {
    return p.length() <= static_cast<std::size_t>(b.rows) && p.first() <= b.cols;
}

Partition box_complement(const Partition& p, const Box& b) {
    if (!fits_in_box(p, b))
        throw std::invalid_argument("partition does not fit in the box");
    std::vector<int> comp;
    comp.reserve(static_cast<std::size_t>(b.rows));
    for (int i = 0; i < b.rows; ++i)
        comp.push_back(b.cols - p.part(static_cast<std::size_t>(b.rows - 1 - i)));
    while (!comp.empty() && comp.back() == 0) comp.pop_back();
    return Partition(std::move(comp));
}

namespace {

void enumerate_rec(int remaining, int max_part, int rows_left,
                   std::vector<int>& current, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    if (rows_left == 0) return;
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        // Feasibility: the rest must fit in (rows_left - 1) rows of width part.
        if (static_cast<long long>(part) * rows_left < remaining) break;
        current.push_back(part);
        enumerate_rec(remaining - part, part, rows_left - 1, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int weight, const Box& b) {
    if (weight < 0) throw std::invalid_argument("weight must be nonnegative");
    std::vector<Partition> out;
    if (weight == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> current;
    enumerate_rec(weight, b.cols, b.rows, current, out);
    return out;
}

}  // namespace chowlab
