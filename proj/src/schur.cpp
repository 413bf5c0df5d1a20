#include "chowlab/schur.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace chowlab {

SchurPoly::SchurPoly(int num_vars) : num_vars_(num_vars) {
    if (num_vars < 1) throw std::invalid_argument("num_vars must be positive");
}

SchurPoly::SchurPoly(int num_vars, std::map<Partition, Int> terms) : SchurPoly(num_vars) {
    for (auto& [lambda, coeff] : terms) add_term(lambda, coeff);
}

SchurPoly SchurPoly::single(int num_vars, const Partition& lambda, Int coeff) {
    SchurPoly p(num_vars);
    p.add_term(lambda, coeff);
    return p;
}

Int SchurPoly::coefficient(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? Int(0) : it->second;
}

void SchurPoly::add_term(const Partition& lambda, const Int& coeff) {
    if (coeff == 0) return;
    if (lambda.length() > static_cast<std::size_t>(num_vars_)) return;  // vanishes identically
    auto [it, inserted] = terms_.emplace(lambda, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

SchurPoly& SchurPoly::operator+=(const SchurPoly& other) {
    if (num_vars_ != other.num_vars_)
        throw std::invalid_argument("SchurPoly num_vars mismatch");
    for (const auto& [lambda, coeff] : other.terms_) add_term(lambda, coeff);
    return *this;
}

SchurPoly& SchurPoly::operator-=(const SchurPoly& other) {
    if (num_vars_ != other.num_vars_)
        throw std::invalid_argument("SchurPoly num_vars mismatch");
    for (const auto& [lambda, coeff] : other.terms_) add_term(lambda, -coeff);
    return *this;
}

SchurPoly SchurPoly::operator+(const SchurPoly& other) const {
    SchurPoly out = *this;
    out += other;
    return out;
}

SchurPoly SchurPoly::operator-(const SchurPoly& other) const {
    SchurPoly out = *this;
    out -= other;
    return out;
}

SchurPoly& SchurPoly::operator*=(const Int& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [lambda, coeff] : terms_) coeff *= scalar;
    return *this;
}

std::string SchurPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [lambda, coeff] : terms_) {
        if (!out.empty()) out += " + ";
        out += coeff.str() + "*s" + lambda.to_string();
    }
    return out;
}

// ---------------------------------------------------------------------------
// Littlewood-Richardson coefficients.
//
// c^nu_{lambda,mu} counts semistandard fillings of the skew diagram nu/lambda
// with content mu whose reverse reading word (rows top to bottom, each row
// right to left) is a lattice word. The fill proceeds in exactly that reading
// order so the lattice condition prunes incrementally.
// ---------------------------------------------------------------------------

namespace {

struct LrCell {
    int row;
    int col;
};

class LrCounter {
public:
    LrCounter(const Partition& lambda, const Partition& mu, const Partition& nu)
        : lambda_(lambda), mu_(mu), nu_(nu) {
        for (std::size_t r = 0; r < nu.length(); ++r)
            for (int c = nu.part(r) - 1; c >= lambda.part(r); --c)
                cells_.push_back({static_cast<int>(r), c});
        grid_.assign(nu.length(), {});
        for (std::size_t r = 0; r < nu.length(); ++r)
            grid_[r].assign(static_cast<std::size_t>(nu.part(r)), 0);
        counts_.assign(mu.length() + 2, 0);
    }

    Int count() {
        Int total = 0;
        fill(0, total);
        return total;
    }

private:
    void fill(std::size_t idx, Int& total) {
        if (idx == cells_.size()) {
            ++total;
            return;
        }
        const auto [r, c] = cells_[idx];
        // Weakly increasing along the row (right neighbour already placed).
        int hi = static_cast<int>(mu_.length());
        if (c + 1 < nu_.part(static_cast<std::size_t>(r)))
            hi = std::min(hi, grid_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c) + 1]);
        // Entries of row r never exceed r+1 in a lattice filling.
        hi = std::min(hi, r + 1);
        // Strictly increasing down the column when the cell above is filled.
        int lo = 1;
        if (r > 0 && c >= lambda_.part(static_cast<std::size_t>(r) - 1) &&
            c < nu_.part(static_cast<std::size_t>(r) - 1))
            lo = grid_[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(c)] + 1;
        for (int v = lo; v <= hi; ++v) {
            if (counts_[static_cast<std::size_t>(v)] >= mu_.part(static_cast<std::size_t>(v) - 1))
                continue;  // content bound
            if (v > 1 && counts_[static_cast<std::size_t>(v)] >=
                             counts_[static_cast<std::size_t>(v) - 1])
                continue;  // lattice condition
            grid_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
            ++counts_[static_cast<std::size_t>(v)];
            fill(idx + 1, total);
            --counts_[static_cast<std::size_t>(v)];
        }
        grid_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
    }

    const Partition& lambda_;
    const Partition& mu_;
    const Partition& nu_;
    std::vector<LrCell> cells_;
    std::vector<std::vector<int>> grid_;
    std::vector<int> counts_;
};

}  // namespace

Int lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (nu.weight() != lambda.weight() + mu.weight()) return 0;
    if (!nu.contains(lambda) || !nu.contains(mu)) return 0;
    if (mu.empty()) return 1;  // nu == lambda at this point
    return LrCounter(lambda, mu, nu).count();
}

// ---------------------------------------------------------------------------
// Schur products, with a process-wide expansion cache (the pair (lambda, mu)
// is looked up in both orders; LR coefficients are symmetric in them).
// ---------------------------------------------------------------------------

namespace {

using Expansion = std::vector<std::pair<Partition, Int>>;

const Expansion& lr_expansion(const Partition& lambda, const Partition& mu) {
    static std::map<std::pair<Partition, Partition>, Expansion> cache;
    static std::mutex mutex;
    std::pair<Partition, Partition> key =
        mu < lambda ? std::make_pair(mu, lambda) : std::make_pair(lambda, mu);
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const auto& [a, b] = key;
    Expansion expansion;
    const int total = a.weight() + b.weight();
    const int rows = static_cast<int>(a.length() + b.length());
    if (total == 0) {
        expansion.emplace_back(Partition{}, 1);
    } else {
        const Box bound(std::max(rows, 1), std::max(a.first() + b.first(), 1));
        for (const Partition& nu : enumerate_partitions(total, bound)) {
            if (!nu.contains(a) || !nu.contains(b)) continue;
            Int c = lr_coefficient(a, b, nu);
            if (c != 0) expansion.emplace_back(nu, std::move(c));
        }
    }
    return cache.emplace(std::move(key), std::move(expansion)).first->second;
}

}  // namespace

SchurPoly schur_multiply(const SchurPoly& a, const SchurPoly& b) {
    if (a.num_vars() != b.num_vars())
        throw std::invalid_argument("SchurPoly num_vars mismatch");
    SchurPoly out(a.num_vars());
    for (const auto& [lambda, ca] : a.terms())
        for (const auto& [mu, cb] : b.terms()) {
            const Int c = ca * cb;
            for (const auto& [nu, k] : lr_expansion(lambda, mu)) out.add_term(nu, c * k);
        }
    return out;
}

SchurPoly SchurPoly::operator*(const SchurPoly& other) const {
    return schur_multiply(*this, other);
}

// ---------------------------------------------------------------------------
// Kostka numbers by the horizontal-strip dynamic program: a semistandard
// tableau of shape lambda and content mu is a chain of partitions growing by
// horizontal strips of sizes mu_1, mu_2, ...
// ---------------------------------------------------------------------------

namespace {

void strips_rec(const Partition& target, const std::vector<int>& base, std::size_t row,
                int budget, std::vector<int>& current,
                const std::function<void(const std::vector<int>&)>& emit) {
    if (row == current.size()) {
        if (budget == 0) emit(current);
        return;
    }
    const int lo = row < base.size() ? base[row] : 0;
    int hi = target.part(row);
    if (row > 0) hi = std::min(hi, row - 1 < base.size() ? base[row - 1] : 0);
    for (int v = lo; v <= hi && v - lo <= budget; ++v) {
        current[row] = v;
        strips_rec(target, base, row + 1, budget - (v - lo), current, emit);
    }
    current[row] = lo;
}

// All partitions base + horizontal strip of the given size inside target.
std::vector<Partition> horizontal_strip_extensions(const Partition& target,
                                                   const Partition& base, int size) {
    std::vector<Partition> out;
    std::vector<int> current(target.length(), 0);
    const std::vector<int>& b = base.parts();
    for (std::size_t i = 0; i < current.size(); ++i) current[i] = i < b.size() ? b[i] : 0;
    std::function<void(const std::vector<int>&)> emit = [&](const std::vector<int>& rows) {
        std::vector<int> parts = rows;
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        out.emplace_back(std::move(parts));
    };
    strips_rec(target, b, 0, size, current, emit);
    return out;
}

}  // namespace

Int kostka_number(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight()) return 0;
    if (lambda == mu) return 1;
    if (!dominates(lambda, mu)) return 0;
    static std::map<std::pair<Partition, Partition>, Int> cache;
    static std::mutex mutex;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find({lambda, mu});
        if (it != cache.end()) return it->second;
    }
    std::map<Partition, Int> states;
    states.emplace(Partition{}, 1);
    for (int s : mu.parts()) {
        std::map<Partition, Int> next;
        for (const auto& [nu, c] : states)
            for (const Partition& grown : horizontal_strip_extensions(lambda, nu, s)) {
                auto [it, inserted] = next.emplace(grown, c);
                if (!inserted) it->second += c;
            }
        states = std::move(next);
    }
    auto it = states.find(lambda);
    Int result = it == states.end() ? Int(0) : it->second;
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(std::make_pair(lambda, mu), std::move(result)).first->second;
}

OrbitPoly schur_monomial_orbits(const Partition& lambda, int num_vars) {
    OrbitPoly out;
    if (lambda.length() > static_cast<std::size_t>(num_vars)) return out;
    if (lambda.empty()) {
        out.emplace(Partition{}, 1);
        return out;
    }
    const Box bound(num_vars, lambda.weight());
    for (const Partition& mu : enumerate_partitions(lambda.weight(), bound)) {
        Int k = kostka_number(lambda, mu);
        if (k != 0) out.emplace(mu, std::move(k));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Monomial-basis to Schur-basis conversion by leading-term subtraction.
// ---------------------------------------------------------------------------

SchurPoly polynomial_to_schur(const OrbitPoly& poly, int num_vars) {
    if (num_vars < 1) throw std::invalid_argument("num_vars must be positive");
    OrbitPoly remainder;
    for (const auto& [mu, coeff] : poly) {
        if (mu.length() > static_cast<std::size_t>(num_vars))
            throw std::invalid_argument(
                "orbit key " + mu.to_string() + " has more parts than variables");
        if (coeff != 0) remainder.emplace(mu, coeff);
    }
    SchurPoly out(num_vars);
    while (!remainder.empty()) {
        // Leading term: maximal weight, then lexicographically greatest parts.
        // Every Kostka row is supported on dominance-smaller partitions, so the
        // subtraction below only introduces strictly lex-smaller keys.
        const Partition* lead = nullptr;
        for (const auto& [mu, coeff] : remainder) {
            if (!lead || mu.weight() > lead->weight() ||
                (mu.weight() == lead->weight() && mu.parts() > lead->parts()))
                lead = &mu;
        }
        const Partition lambda = *lead;
        const Int c = remainder.at(lambda);
        out.add_term(lambda, c);
        for (const auto& [mu, k] : schur_monomial_orbits(lambda, num_vars)) {
            auto it = remainder.find(mu);
            Int updated = (it == remainder.end() ? Int(0) : it->second) - c * k;
            if (updated == 0) {
                if (it != remainder.end()) remainder.erase(it);
            } else if (it == remainder.end()) {
                remainder.emplace(mu, std::move(updated));
            } else {
                it->second = std::move(updated);
            }
        }
    }
    return out;
}

OrbitPoly monomials_to_orbits(const std::map<std::vector<int>, Int>& monomials, int num_vars) {
    OrbitPoly orbits;
    std::map<Partition, long long> members_seen;
    for (const auto& [expo, coeff] : monomials) {
        if (expo.size() != static_cast<std::size_t>(num_vars))
            throw std::invalid_argument("exponent vector length must equal num_vars");
        for (int e : expo)
            if (e < 0) throw std::invalid_argument("negative exponent");
        if (coeff == 0) continue;
        Partition key = Partition::from_unsorted(expo);
        ++members_seen[key];
        std::vector<int> sorted = expo;
        std::sort(sorted.begin(), sorted.end(), std::greater<int>());
        if (sorted == expo) orbits[key] = coeff;
    }
    // Symmetry: every monomial must carry its orbit coefficient and every orbit
    // must be fully populated. The lexicographically greatest offender is
    // reported; for symmetric input the greatest monomial is always weakly
    // decreasing and this loop never fires.
    for (const auto& [expo, coeff] : monomials) {
        if (coeff == 0) continue;
        Partition key = Partition::from_unsorted(expo);
        auto it = orbits.find(key);
        if (it == orbits.end() || it->second != coeff)
            throw std::invalid_argument("polynomial is not symmetric near monomial orbit " +
                                        key.to_string());
    }
    for (const auto& [key, seen] : members_seen) {
        // Orbit size: distinct permutations of the padded exponent vector,
        // n! / prod(multiplicity!).
        std::map<int, int> multiplicity;
        multiplicity[0] = num_vars - static_cast<int>(key.length());
        for (int part : key.parts()) ++multiplicity[part];
        long long orbit = 1;
        for (int i = 2; i <= num_vars; ++i) orbit *= i;
        for (const auto& [value, m] : multiplicity) {
            (void)value;
            for (int i = 2; i <= m; ++i) orbit /= i;
        }
        if (seen != orbit)
            throw std::invalid_argument("polynomial is not symmetric: orbit " + key.to_string() +
                                        " is incomplete");
    }
    return orbits;
}

}  // namespace chowlab
