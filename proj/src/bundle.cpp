#include "chowlab/bundle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace chowlab {

BundleExpr BundleExpr::taut(int factor, int rank) {
    if (factor < 0) throw std::invalid_argument("factor index must be nonnegative");
    if (rank < 0) throw std::invalid_argument("rank must be nonnegative");
    BundleExpr e;
    e.kind = BundleKind::Taut;
    e.factor = factor;
    e.rank = rank;
    return e;
}

BundleExpr BundleExpr::trivial(int rank) {
    if (rank < 0) throw std::invalid_argument("rank must be nonnegative");
    BundleExpr e;
    e.kind = BundleKind::Trivial;
    e.rank = rank;
    return e;
}

BundleExpr BundleExpr::dual(BundleExpr inner) {
    BundleExpr e;
    e.kind = BundleKind::Dual;
    e.children.push_back(std::move(inner));
    return e;
}

BundleExpr BundleExpr::sum(BundleExpr a, BundleExpr b) {
    BundleExpr e;
    e.kind = BundleKind::Sum;
    e.children.push_back(std::move(a));
    e.children.push_back(std::move(b));
    return e;
}

BundleExpr BundleExpr::tensor(BundleExpr a, BundleExpr b) {
    BundleExpr e;
    e.kind = BundleKind::Tensor;
    e.children.push_back(std::move(a));
    e.children.push_back(std::move(b));
    return e;
}

BundleExpr BundleExpr::wedge(int p, BundleExpr inner) {
    BundleExpr e;
    e.kind = BundleKind::Wedge;
    e.power = p;
    e.children.push_back(std::move(inner));
    return e;
}

BundleExpr BundleExpr::sym(int p, BundleExpr inner) {
    BundleExpr e;
    e.kind = BundleKind::Sym;
    e.power = p;
    e.children.push_back(std::move(inner));
    return e;
}

std::string BundleExpr::to_string() const {
    switch (kind) {
        case BundleKind::Taut:
            return "taut(" + std::to_string(factor) + ")";
        case BundleKind::Trivial:
            return "triv(" + std::to_string(rank) + ")";
        case BundleKind::Dual:
            return "dual(" + children[0].to_string() + ")";
        case BundleKind::Sum:
            return "sum(" + children[0].to_string() + "," + children[1].to_string() + ")";
        case BundleKind::Tensor:
            return "tensor(" + children[0].to_string() + "," + children[1].to_string() + ")";
        case BundleKind::Wedge:
            return "wedge(" + std::to_string(power) + "," + children[0].to_string() + ")";
        case BundleKind::Sym:
            return "sym(" + std::to_string(power) + "," + children[0].to_string() + ")";
    }
    return "?";
}

namespace {

long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long out = 1;
    for (long long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

}  // namespace

long rank_of(const BundleExpr& e) {
    switch (e.kind) {
        case BundleKind::Taut:
            if (e.rank <= 0) throw std::invalid_argument("tautological leaf has unbound rank");
            return e.rank;
        case BundleKind::Trivial:
            return e.rank;
        case BundleKind::Dual:
            return rank_of(e.children[0]);
        case BundleKind::Sum:
            return rank_of(e.children[0]) + rank_of(e.children[1]);
        case BundleKind::Tensor:
            return rank_of(e.children[0]) * rank_of(e.children[1]);
        case BundleKind::Wedge: {
            const long r = rank_of(e.children[0]);
            if (e.power < 0 || e.power > r)
                throw std::invalid_argument("wedge power out of range 0..rank");
            return binomial(r, e.power);
        }
        case BundleKind::Sym: {
            const long r = rank_of(e.children[0]);
            if (e.power < 0) throw std::invalid_argument("symmetric power must be nonnegative");
            return binomial(r + e.power - 1, e.power);
        }
    }
    throw std::logic_error("unreachable bundle kind");
}

int max_factor_index(const BundleExpr& e) {
    int best = e.kind == BundleKind::Taut ? e.factor : -1;
    for (const auto& child : e.children) best = std::max(best, max_factor_index(child));
    return best;
}

void bind_taut_ranks(BundleExpr& e, std::span<const int> factor_ranks) {
    if (e.kind == BundleKind::Taut) {
        if (e.factor >= static_cast<int>(factor_ranks.size()))
            throw std::invalid_argument("factor index " + std::to_string(e.factor) +
                                        " not declared");
        const int k = factor_ranks[static_cast<std::size_t>(e.factor)];
        if (e.rank == 0)
            e.rank = k;
        else if (e.rank != k)
            throw std::invalid_argument("tautological leaf rank disagrees with its factor");
    }
    for (auto& child : e.children) bind_taut_ranks(child, factor_ranks);
}

// ---------------------------------------------------------------------------
// PartitionTuple / MultiSchur
// ---------------------------------------------------------------------------

int PartitionTuple::total_weight() const {
    int w = 0;
    for (const auto& p : entries) w += p.weight();
    return w;
}

std::string PartitionTuple::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i > 0) out += "|";
        const auto& parts = entries[i].parts();
        for (std::size_t j = 0; j < parts.size(); ++j) {
            if (j > 0) out += ",";
            out += std::to_string(parts[j]);
        }
    }
    return out + "]";
}

bool operator<(const PartitionTuple& a, const PartitionTuple& b) {
    if (a.entries.size() != b.entries.size()) return a.entries.size() < b.entries.size();
    const int wa = a.total_weight(), wb = b.total_weight();
    if (wa != wb) return wa < wb;
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        if (!(a.entries[i] == b.entries[i])) return canonical_less(a.entries[i], b.entries[i]);
    return false;
}

MultiSchur::MultiSchur(std::vector<int> factor_vars) : factor_vars_(std::move(factor_vars)) {
    for (int k : factor_vars_)
        if (k < 1) throw std::invalid_argument("factor variable counts must be positive");
}

MultiSchur MultiSchur::unit(std::vector<int> factor_vars) {
    MultiSchur m(std::move(factor_vars));
    PartitionTuple one(std::vector<Partition>(m.factor_vars_.size()));
    m.terms_.emplace(std::move(one), 1);
    return m;
}

Int MultiSchur::coefficient(const PartitionTuple& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Int(0) : it->second;
}

void MultiSchur::add_term(const PartitionTuple& t, const Int& coeff) {
    if (coeff == 0) return;
    if (t.entries.size() != factor_vars_.size())
        throw std::invalid_argument("tuple arity mismatch");
    for (std::size_t f = 0; f < t.entries.size(); ++f)
        if (t.entries[f].length() > static_cast<std::size_t>(factor_vars_[f])) return;
    auto [it, inserted] = terms_.emplace(t, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiSchur& MultiSchur::operator+=(const MultiSchur& other) {
    if (factor_vars_ != other.factor_vars_)
        throw std::invalid_argument("MultiSchur factor mismatch");
    for (const auto& [t, c] : other.terms_) add_term(t, c);
    return *this;
}

MultiSchur MultiSchur::operator+(const MultiSchur& other) const {
    MultiSchur out = *this;
    out += other;
    return out;
}

MultiSchur& MultiSchur::operator*=(const Int& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [t, c] : terms_) c *= scalar;
    return *this;
}

MultiSchur MultiSchur::operator*(const MultiSchur& other) const {
    if (factor_vars_ != other.factor_vars_)
        throw std::invalid_argument("MultiSchur factor mismatch");
    MultiSchur out(factor_vars_);
    for (const auto& [ta, ca] : terms_)
        for (const auto& [tb, cb] : other.terms_) {
            // Factor-wise Schur product, combined across slots.
            std::vector<std::vector<std::pair<Partition, Int>>> slots;
            slots.reserve(factor_vars_.size());
            for (std::size_t f = 0; f < factor_vars_.size(); ++f) {
                SchurPoly prod =
                    schur_multiply(SchurPoly::single(factor_vars_[f], ta.entries[f]),
                                   SchurPoly::single(factor_vars_[f], tb.entries[f]));
                slots.emplace_back(prod.terms().begin(), prod.terms().end());
            }
            std::vector<std::size_t> pick(slots.size(), 0);
            while (true) {
                Int coeff = ca * cb;
                PartitionTuple t;
                t.entries.reserve(slots.size());
                bool dead = false;
                for (std::size_t f = 0; f < slots.size(); ++f) {
                    if (slots[f].empty()) {
                        dead = true;
                        break;
                    }
                    t.entries.push_back(slots[f][pick[f]].first);
                    coeff *= slots[f][pick[f]].second;
                }
                if (dead) break;
                out.add_term(t, coeff);
                std::size_t f = 0;
                while (f < slots.size() && ++pick[f] == slots[f].size()) {
                    pick[f] = 0;
                    ++f;
                }
                if (f == slots.size()) break;
            }
        }
    return out;
}

std::string MultiSchur::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [t, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += c.str() + "*s" + t.to_string();
    }
    return out;
}

// ---------------------------------------------------------------------------
// Chern roots and elementary symmetric expansion.
// ---------------------------------------------------------------------------

namespace {

constexpr std::size_t kRootLimit = 100000;

void collect_roots(const BundleExpr& e, std::span<const int> factor_ranks,
                   std::span<const int> offsets, int total_vars,
                   std::vector<std::vector<int>>& out) {
    switch (e.kind) {
        case BundleKind::Taut: {
            if (e.factor < 0 || e.factor >= static_cast<int>(factor_ranks.size()))
                throw std::invalid_argument("factor index not declared");
            const int k = factor_ranks[static_cast<std::size_t>(e.factor)];
            if (e.rank != 0 && e.rank != k)
                throw std::invalid_argument("tautological leaf rank disagrees with its factor");
            for (int i = 0; i < k; ++i) {
                std::vector<int> root(static_cast<std::size_t>(total_vars), 0);
                root[static_cast<std::size_t>(offsets[static_cast<std::size_t>(e.factor)] + i)] =
                    -1;
                out.push_back(std::move(root));
            }
            return;
        }
        case BundleKind::Trivial: {
            for (int i = 0; i < e.rank; ++i)
                out.emplace_back(static_cast<std::size_t>(total_vars), 0);
            return;
        }
        case BundleKind::Dual: {
            std::vector<std::vector<int>> inner;
            collect_roots(e.children[0], factor_ranks, offsets, total_vars, inner);
            for (auto& r : inner) {
                for (int& c : r) c = -c;
                out.push_back(std::move(r));
            }
            return;
        }
        case BundleKind::Sum: {
            collect_roots(e.children[0], factor_ranks, offsets, total_vars, out);
            collect_roots(e.children[1], factor_ranks, offsets, total_vars, out);
            return;
        }
        case BundleKind::Tensor: {
            std::vector<std::vector<int>> a, b;
            collect_roots(e.children[0], factor_ranks, offsets, total_vars, a);
            collect_roots(e.children[1], factor_ranks, offsets, total_vars, b);
            if (a.size() * b.size() > kRootLimit)
                throw std::invalid_argument("bundle expression has too many Chern roots");
            for (const auto& ra : a)
                for (const auto& rb : b) {
                    std::vector<int> root(ra);
                    for (std::size_t i = 0; i < root.size(); ++i) root[i] += rb[i];
                    out.push_back(std::move(root));
                }
            return;
        }
        case BundleKind::Wedge:
        case BundleKind::Sym: {
            std::vector<std::vector<int>> inner;
            collect_roots(e.children[0], factor_ranks, offsets, total_vars, inner);
            const int n = static_cast<int>(inner.size());
            const int p = e.power;
            if (e.kind == BundleKind::Wedge && (p < 0 || p > n))
                throw std::invalid_argument("wedge power out of range 0..rank");
            if (e.kind == BundleKind::Sym && p < 0)
                throw std::invalid_argument("symmetric power must be nonnegative");
            // Choose p indices, strictly increasing for wedge, weakly for sym.
            std::vector<int> idx(static_cast<std::size_t>(p), 0);
            if (e.kind == BundleKind::Wedge)
                for (int i = 0; i < p; ++i) idx[static_cast<std::size_t>(i)] = i;
            const bool strict = e.kind == BundleKind::Wedge;
            if (p == 0) {
                out.emplace_back(static_cast<std::size_t>(total_vars), 0);
                return;
            }
            while (true) {
                std::vector<int> root(static_cast<std::size_t>(total_vars), 0);
                for (int i : idx)
                    for (std::size_t v = 0; v < root.size(); ++v)
                        root[v] += inner[static_cast<std::size_t>(i)][v];
                out.push_back(std::move(root));
                if (out.size() > kRootLimit)
                    throw std::invalid_argument("bundle expression has too many Chern roots");
                // Advance the (strictly/weakly) increasing index vector.
                int pos = p - 1;
                while (pos >= 0) {
                    const int cap = strict ? n - (p - pos) : n - 1;
                    if (idx[static_cast<std::size_t>(pos)] < cap) break;
                    --pos;
                }
                if (pos < 0) break;
                ++idx[static_cast<std::size_t>(pos)];
                for (int q = pos + 1; q < p; ++q)
                    idx[static_cast<std::size_t>(q)] =
                        idx[static_cast<std::size_t>(q - 1)] + (strict ? 1 : 0);
            }
            return;
        }
    }
    throw std::logic_error("unreachable bundle kind");
}

std::vector<int> factor_offsets(std::span<const int> factor_ranks) {
    std::vector<int> offsets;
    offsets.reserve(factor_ranks.size());
    int acc = 0;
    for (int k : factor_ranks) {
        if (k < 1) throw std::invalid_argument("factor ranks must be positive");
        offsets.push_back(acc);
        acc += k;
    }
    return offsets;
}

using MonomialPoly = std::map<std::vector<int>, Int>;

// Elementary symmetric polynomials e_0..e_max of the given linear forms.
std::vector<MonomialPoly> elementary_symmetric(const std::vector<std::vector<int>>& roots,
                                               int max_degree, int total_vars) {
    std::vector<MonomialPoly> e(static_cast<std::size_t>(max_degree) + 1);
    e[0].emplace(std::vector<int>(static_cast<std::size_t>(total_vars), 0), 1);
    int processed = 0;
    for (const auto& root : roots) {
        ++processed;
        const int top = std::min(max_degree, processed);
        for (int j = top; j >= 1; --j) {
            for (const auto& [mono, coeff] : e[static_cast<std::size_t>(j - 1)]) {
                for (int v = 0; v < total_vars; ++v) {
                    const int a = root[static_cast<std::size_t>(v)];
                    if (a == 0) continue;
                    std::vector<int> grown = mono;
                    ++grown[static_cast<std::size_t>(v)];
                    auto [it, inserted] =
                        e[static_cast<std::size_t>(j)].emplace(std::move(grown), coeff * a);
                    if (!inserted) {
                        it->second += coeff * a;
                        if (it->second == 0) e[static_cast<std::size_t>(j)].erase(it);
                    }
                }
            }
        }
    }
    return e;
}

// Orbit compression per factor block: each block of the exponent vector is
// sorted descending; the polynomial must be symmetric within every block.
MonomialPoly compress_blockwise(const MonomialPoly& poly, std::span<const int> factor_ranks,
                                std::span<const int> offsets) {
    MonomialPoly orbits;
    std::map<std::vector<int>, long long> seen;
    auto block_sorted = [&](const std::vector<int>& mono) {
        std::vector<int> key = mono;
        for (std::size_t f = 0; f < factor_ranks.size(); ++f) {
            auto begin = key.begin() + offsets[f];
            std::sort(begin, begin + factor_ranks[f], std::greater<int>());
        }
        return key;
    };
    for (const auto& [mono, coeff] : poly) {
        if (coeff == 0) continue;
        std::vector<int> key = block_sorted(mono);
        ++seen[key];
        if (key == mono) orbits.emplace(std::move(key), coeff);
    }
    for (const auto& [mono, coeff] : poly) {
        if (coeff == 0) continue;
        auto it = orbits.find(block_sorted(mono));
        if (it == orbits.end() || it->second != coeff)
            throw std::logic_error("chern expansion is not symmetric per factor");
    }
    for (const auto& [key, count] : seen) {
        long long expected = 1;
        for (std::size_t f = 0; f < factor_ranks.size(); ++f) {
            std::map<int, int> mult;
            for (int i = 0; i < factor_ranks[f]; ++i)
                ++mult[key[static_cast<std::size_t>(offsets[f] + i)]];
            long long block = 1;
            for (int i = 2; i <= factor_ranks[f]; ++i) block *= i;
            for (const auto& [v, m] : mult) {
                (void)v;
                for (int i = 2; i <= m; ++i) block /= i;
            }
            expected *= block;
        }
        if (seen.at(key) != expected)
            throw std::logic_error("chern expansion is not symmetric per factor");
    }
    return orbits;
}

struct SignedPermutation {
    std::vector<int> delta_perm;  // w(delta)
    int sign;
};

std::vector<SignedPermutation> signed_delta_permutations(int k) {
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<SignedPermutation> out;
    do {
        SignedPermutation sp;
        sp.delta_perm.resize(static_cast<std::size_t>(k));
        int inversions = 0;
        for (int i = 0; i < k; ++i) {
            // delta = (k-1, k-2, ..., 0); w(delta)_i = delta_{w^{-1}(i)}; with
            // perm as the image list, position i carries delta value of perm[i].
            sp.delta_perm[static_cast<std::size_t>(i)] = k - 1 - perm[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)])
                    ++inversions;
        }
        sp.sign = inversions % 2 == 0 ? 1 : -1;
        out.push_back(std::move(sp));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

void candidate_tuples_rec(std::span<const int> factor_ranks, std::size_t f, int remaining,
                          std::vector<Partition>& current,
                          std::vector<PartitionTuple>& out) {
    if (f == factor_ranks.size()) {
        if (remaining == 0) out.emplace_back(current);
        return;
    }
    for (int w = 0; w <= remaining; ++w) {
        const Box bound(factor_ranks[f], std::max(w, 1));
        for (const Partition& lambda : enumerate_partitions(w, bound)) {
            current.push_back(lambda);
            candidate_tuples_rec(factor_ranks, f + 1, remaining - w, current, out);
            current.pop_back();
        }
    }
}

// Schur-basis coefficients of a blockwise-symmetric polynomial through the
// bialternant: the coefficient of s_lambda is sum over w in S_k of
// sgn(w) * [x^(lambda + delta - w(delta))] P, applied factor by factor.
MultiSchur schur_extract(const MonomialPoly& orbits, int degree,
                         std::span<const int> factor_ranks, std::span<const int> offsets,
                         int total_vars) {
    std::vector<int> vars(factor_ranks.begin(), factor_ranks.end());
    MultiSchur result(vars);
    if (orbits.empty()) return result;

    std::vector<std::vector<SignedPermutation>> perms;
    perms.reserve(factor_ranks.size());
    long long combos = 1;
    for (int k : factor_ranks) {
        perms.push_back(signed_delta_permutations(k));
        combos *= static_cast<long long>(perms.back().size());
        if (combos > 2000000)
            throw std::invalid_argument("too many factor permutations for Schur extraction");
    }

    std::vector<PartitionTuple> tuples;
    std::vector<Partition> scratch;
    candidate_tuples_rec(factor_ranks, 0, degree, scratch, tuples);

    std::vector<int> key(static_cast<std::size_t>(total_vars), 0);
    for (const auto& tuple : tuples) {
        Int coeff = 0;
        std::vector<std::size_t> pick(factor_ranks.size(), 0);
        while (true) {
            int sign = 1;
            bool valid = true;
            for (std::size_t f = 0; f < factor_ranks.size() && valid; ++f) {
                const auto& sp = perms[f][pick[f]];
                sign *= sp.sign;
                const int k = factor_ranks[f];
                for (int i = 0; i < k; ++i) {
                    const int delta = k - 1 - i;
                    const int value = tuple.entries[f].part(static_cast<std::size_t>(i)) + delta -
                                      sp.delta_perm[static_cast<std::size_t>(i)];
                    if (value < 0) {
                        valid = false;
                        break;
                    }
                    key[static_cast<std::size_t>(offsets[f] + i)] = value;
                }
            }
            if (valid) {
                for (std::size_t f = 0; f < factor_ranks.size(); ++f) {
                    auto begin = key.begin() + offsets[f];
                    std::sort(begin, begin + factor_ranks[f], std::greater<int>());
                }
                auto it = orbits.find(key);
                if (it != orbits.end()) coeff += sign > 0 ? it->second : -it->second;
            }
            std::size_t f = 0;
            while (f < pick.size() && ++pick[f] == perms[f].size()) {
                pick[f] = 0;
                ++f;
            }
            if (f == pick.size()) break;
        }
        if (coeff != 0) result.add_term(tuple, coeff);
    }
    return result;
}

}  // namespace

std::vector<std::vector<int>> chern_roots(const BundleExpr& e,
                                          std::span<const int> factor_ranks) {
    const std::vector<int> offsets = factor_offsets(factor_ranks);
    const int total_vars = std::accumulate(factor_ranks.begin(), factor_ranks.end(), 0);
    std::vector<std::vector<int>> out;
    collect_roots(e, factor_ranks, offsets, total_vars, out);
    return out;
}

std::vector<MultiSchur> chern_classes_up_to(const BundleExpr& e, int max_degree,
                                            std::span<const int> factor_ranks) {
    if (max_degree < 0) throw std::invalid_argument("degree must be nonnegative");
    const std::vector<int> offsets = factor_offsets(factor_ranks);
    const int total_vars = std::accumulate(factor_ranks.begin(), factor_ranks.end(), 0);
    const auto roots = chern_roots(e, factor_ranks);
    const int top = std::min<int>(max_degree, static_cast<int>(roots.size()));
    const auto elementary = elementary_symmetric(roots, top, total_vars);

    std::vector<int> vars(factor_ranks.begin(), factor_ranks.end());
    std::vector<MultiSchur> out;
    out.reserve(static_cast<std::size_t>(max_degree) + 1);
    for (int d = 0; d <= max_degree; ++d) {
        if (d > top) {
            out.emplace_back(vars);
            continue;
        }
        const auto orbits =
            compress_blockwise(elementary[static_cast<std::size_t>(d)], factor_ranks, offsets);
        out.push_back(schur_extract(orbits, d, factor_ranks, offsets, total_vars));
    }
    return out;
}

MultiSchur chern_class(const BundleExpr& e, int degree, std::span<const int> factor_ranks) {
    if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
    const std::vector<int> offsets = factor_offsets(factor_ranks);
    const int total_vars = std::accumulate(factor_ranks.begin(), factor_ranks.end(), 0);
    const auto roots = chern_roots(e, factor_ranks);
    std::vector<int> vars(factor_ranks.begin(), factor_ranks.end());
    if (degree > static_cast<int>(roots.size())) return MultiSchur(vars);
    const auto elementary = elementary_symmetric(roots, degree, total_vars);
    const auto orbits =
        compress_blockwise(elementary[static_cast<std::size_t>(degree)], factor_ranks, offsets);
    return schur_extract(orbits, degree, factor_ranks, offsets, total_vars);
}

}  // namespace chowlab
