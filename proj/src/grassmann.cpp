#include "chowlab/grassmann.hpp"

#include <algorithm>
#include <stdexcept>

namespace chowlab {

GrassmannProduct::GrassmannProduct(std::vector<std::pair<int, int>> f) : factors(std::move(f)) {
    if (factors.empty()) throw std::invalid_argument("ring needs at least one factor");
    for (const auto& [k, n] : factors)
        if (k < 1 || k >= n) throw std::invalid_argument("factor requires 1 <= k < n");
}

GrassmannProduct::GrassmannProduct(int k, int n)
    : GrassmannProduct(std::vector<std::pair<int, int>>{{k, n}}) {}

int GrassmannProduct::dimension() const {
    int dim = 0;
    for (const auto& [k, n] : factors) dim += k * (n - k);
    return dim;
}

std::vector<int> GrassmannProduct::taut_ranks() const {
    std::vector<int> ranks;
    ranks.reserve(factors.size());
    for (const auto& [k, n] : factors) ranks.push_back(k);
    return ranks;
}

PartitionTuple GrassmannProduct::point_class_tuple() const {
    std::vector<Partition> slots;
    slots.reserve(factors.size());
    for (const auto& [k, n] : factors)
        slots.push_back(Partition(std::vector<int>(static_cast<std::size_t>(k), n - k)));
    return PartitionTuple(std::move(slots));
}

std::string GrassmannProduct::to_string() const {
    std::string out;
    std::size_t i = 0;
    while (i < factors.size()) {
        std::size_t j = i;
        while (j < factors.size() && factors[j] == factors[i]) ++j;
        if (!out.empty()) out += "x";
        out += "G(" + std::to_string(factors[i].first) + "," +
               std::to_string(factors[i].second) + ")";
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

SchubertClass::SchubertClass(GrassmannProduct ring) : ring_(std::move(ring)) {}

SchubertClass SchubertClass::unit(const GrassmannProduct& ring) {
    SchubertClass c(ring);
    c.add_term(PartitionTuple(std::vector<Partition>(ring.factor_count())), 1);
    return c;
}

SchubertClass SchubertClass::zero(const GrassmannProduct& ring) { return SchubertClass(ring); }

SchubertClass SchubertClass::schubert(const GrassmannProduct& ring, PartitionTuple t) {
    SchubertClass c(ring);
    if (t.entries.size() != ring.factor_count())
        throw std::invalid_argument("tuple arity does not match the ring");
    for (std::size_t f = 0; f < t.entries.size(); ++f)
        if (!fits_in_box(t.entries[f], ring.box(f)))
            throw std::invalid_argument("partition does not fit the factor box");
    c.add_term(std::move(t), 1);
    return c;
}

SchubertClass SchubertClass::sigma(const GrassmannProduct& ring, std::size_t factor,
                                   const Partition& lambda) {
    if (factor >= ring.factor_count()) throw std::invalid_argument("factor out of range");
    std::vector<Partition> slots(ring.factor_count());
    slots[factor] = lambda;
    return schubert(ring, PartitionTuple(std::move(slots)));
}

SchubertClass SchubertClass::hyperplane(const GrassmannProduct& ring, std::size_t factor) {
    return sigma(ring, factor, Partition{1});
}

Int SchubertClass::coefficient(const PartitionTuple& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Int(0) : it->second;
}

void SchubertClass::add_term(const PartitionTuple& t, const Int& coeff) {
    if (coeff == 0) return;
    if (t.entries.size() != ring_.factor_count())
        throw std::invalid_argument("tuple arity does not match the ring");
    for (std::size_t f = 0; f < t.entries.size(); ++f)
        if (!fits_in_box(t.entries[f], ring_.box(f))) return;  // truncated away
    auto [it, inserted] = terms_.emplace(t, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

std::optional<int> SchubertClass::homogeneous_degree() const {
    std::optional<int> deg;
    for (const auto& [t, c] : terms_) {
        const int w = t.total_weight();
        if (!deg)
            deg = w;
        else if (*deg != w)
            return std::nullopt;
    }
    return deg;
}

SchubertClass SchubertClass::component(int degree) const {
    SchubertClass out(ring_);
    for (const auto& [t, c] : terms_)
        if (t.total_weight() == degree) out.add_term(t, c);
    return out;
}

SchubertClass& SchubertClass::operator+=(const SchubertClass& other) {
    if (!(ring_ == other.ring_)) throw std::invalid_argument("ring mismatch");
    for (const auto& [t, c] : other.terms_) add_term(t, c);
    return *this;
}

SchubertClass& SchubertClass::operator-=(const SchubertClass& other) {
    if (!(ring_ == other.ring_)) throw std::invalid_argument("ring mismatch");
    for (const auto& [t, c] : other.terms_) add_term(t, -c);
    return *this;
}

SchubertClass SchubertClass::operator+(const SchubertClass& other) const {
    SchubertClass out = *this;
    out += other;
    return out;
}

SchubertClass SchubertClass::operator-(const SchubertClass& other) const {
    SchubertClass out = *this;
    out -= other;
    return out;
}

SchubertClass& SchubertClass::operator*=(const Int& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [t, c] : terms_) c *= scalar;
    return *this;
}

std::string SchubertClass::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [t, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += c.str() + "*sigma" + t.to_string();
    }
    return out;
}

SchubertClass class_multiply(const SchubertClass& a, const SchubertClass& b) {
    if (!(a.ring() == b.ring())) throw std::invalid_argument("ring mismatch");
    const GrassmannProduct& ring = a.ring();
    SchubertClass out(ring);
    for (const auto& [ta, ca] : a.terms())
        for (const auto& [tb, cb] : b.terms()) {
            // Factor-wise LR product; add_term applies the box truncation.
            std::vector<std::vector<std::pair<Partition, Int>>> slots;
            slots.reserve(ring.factor_count());
            bool dead = false;
            for (std::size_t f = 0; f < ring.factor_count() && !dead; ++f) {
                SchurPoly prod = schur_multiply(SchurPoly::single(ring.k(f), ta.entries[f]),
                                                SchurPoly::single(ring.k(f), tb.entries[f]));
                if (prod.is_zero()) dead = true;
                slots.emplace_back(prod.terms().begin(), prod.terms().end());
            }
            if (dead) continue;
            std::vector<std::size_t> pick(slots.size(), 0);
            while (true) {
                Int coeff = ca * cb;
                PartitionTuple t;
                t.entries.reserve(slots.size());
                for (std::size_t f = 0; f < slots.size(); ++f) {
                    t.entries.push_back(slots[f][pick[f]].first);
                    coeff *= slots[f][pick[f]].second;
                }
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

SchubertClass SchubertClass::operator*(const SchubertClass& other) const {
    return class_multiply(*this, other);
}

Int integrate(const SchubertClass& c) {
    return c.coefficient(c.ring().point_class_tuple());
}

Int degree_wrt(const SchubertClass& c, std::span<const long> weights) {
    const GrassmannProduct& ring = c.ring();
    if (weights.size() != ring.factor_count())
        throw std::invalid_argument("one weight per factor required");
    bool any = false;
    for (long w : weights) {
        if (w < 0) throw std::invalid_argument("polarization weights must be nonnegative");
        if (w > 0) any = true;
    }
    if (!any) throw std::invalid_argument("polarization weights must not all vanish");
    const auto deg = c.homogeneous_degree();
    if (!deg) throw std::invalid_argument("class must be homogeneous");
    const int d = ring.dimension() - *deg;
    if (d < 0) throw std::invalid_argument("class degree exceeds the ring dimension");
    SchubertClass h = SchubertClass::zero(ring);
    for (std::size_t f = 0; f < ring.factor_count(); ++f) {
        SchubertClass hf = SchubertClass::hyperplane(ring, f);
        hf *= Int(weights[f]);
        h += hf;
    }
    SchubertClass acc = c;
    for (int i = 0; i < d; ++i) acc = acc * h;
    return integrate(acc);
}

SchubertClass from_multischur(const GrassmannProduct& ring, const MultiSchur& m) {
    if (m.factor_vars() != ring.taut_ranks())
        throw std::invalid_argument("MultiSchur factors do not match the ring");
    SchubertClass out(ring);
    for (const auto& [t, c] : m.terms()) out.add_term(t, c);
    return out;
}

long rank_on(const GrassmannProduct& ring, const BundleSpec& spec) {
    const std::vector<int> ranks = ring.taut_ranks();
    BundleExpr primary = spec.primary;
    bind_taut_ranks(primary, ranks);
    long r = rank_of(primary);
    if (spec.quotient) {
        BundleExpr quotient = *spec.quotient;
        bind_taut_ranks(quotient, ranks);
        r -= rank_of(quotient);
        if (r < 0) throw std::invalid_argument("kernel bundle has negative rank");
    }
    return r;
}

SchubertClass chern_class_on(const GrassmannProduct& ring, const BundleExpr& e, int degree) {
    const std::vector<int> ranks = ring.taut_ranks();
    BundleExpr bound = e;
    bind_taut_ranks(bound, ranks);
    return from_multischur(ring, chern_class(bound, degree, ranks));
}

namespace {

SchubertClass total_chern_expr(const GrassmannProduct& ring, const BundleExpr& e, int top) {
    const std::vector<int> ranks = ring.taut_ranks();
    BundleExpr bound = e;
    bind_taut_ranks(bound, ranks);
    top = std::min<int>(top, static_cast<int>(rank_of(bound)));
    SchubertClass out = SchubertClass::zero(ring);
    for (const auto& component : chern_classes_up_to(bound, top, ranks))
        out += from_multischur(ring, component);
    return out;
}

}  // namespace

SchubertClass total_chern_on(const GrassmannProduct& ring, const BundleSpec& spec) {
    const int dim = ring.dimension();
    const SchubertClass primary = total_chern_expr(ring, spec.primary, dim);
    if (!spec.quotient) return primary;
    const SchubertClass quotient = total_chern_expr(ring, *spec.quotient, dim);
    return class_multiply(primary, chern_series_inverse(quotient, dim));
}

SchubertClass chern_series_inverse(const SchubertClass& total, int max_degree) {
    if (!(total.component(0) == SchubertClass::unit(total.ring())))
        throw std::invalid_argument("total class must have constant term 1");
    const GrassmannProduct& ring = total.ring();
    std::vector<SchubertClass> inv;
    inv.push_back(SchubertClass::unit(ring));
    SchubertClass out = inv[0];
    for (int d = 1; d <= max_degree; ++d) {
        SchubertClass term = SchubertClass::zero(ring);
        for (int i = 1; i <= d; ++i)
            term -= class_multiply(total.component(i), inv[static_cast<std::size_t>(d - i)]);
        inv.push_back(term);
        out += term;
    }
    return out;
}

SchubertClass porteous_class(const GrassmannProduct& ring, int e_rank,
                             std::span<const SchubertClass> f_chern, int f_rank, int r) {
    if (r < 0 || r > std::min(e_rank, f_rank))
        throw std::invalid_argument("rank bound r out of range");
    const int m = e_rank - r;   // determinant size
    const int q = f_rank - r;   // leading Chern index
    auto entry = [&](int i, int j) -> SchubertClass {
        const int idx = q + j - i;  // c_{q + j - i}(F)
        if (idx < 0 || idx >= static_cast<int>(f_chern.size()))
            return idx == 0 ? SchubertClass::unit(ring) : SchubertClass::zero(ring);
        return f_chern[static_cast<std::size_t>(idx)];
    };
    if (m == 0) return SchubertClass::unit(ring);
    // Leibniz expansion; the determinants in scope are tiny.
    std::vector<int> perm(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) perm[static_cast<std::size_t>(i)] = i;
    SchubertClass out = SchubertClass::zero(ring);
    do {
        int inversions = 0;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)])
                    ++inversions;
        SchubertClass prod = SchubertClass::unit(ring);
        for (int i = 0; i < m; ++i) prod = prod * entry(i, perm[static_cast<std::size_t>(i)]);
        if (inversions % 2 == 1) prod *= Int(-1);
        out += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

ZeroLocusProfile zero_locus_profile(const GrassmannProduct& ring, const BundleSpec& spec) {
    ZeroLocusProfile profile;
    const long rank = rank_on(ring, spec);
    if (rank > ring.dimension())
        throw std::invalid_argument("bundle rank exceeds the ambient dimension");
    profile.dim = ring.dimension() - rank;

    const SchubertClass total = total_chern_on(ring, spec);
    profile.top_class = total.component(static_cast<int>(rank));
    profile.empty_locus = profile.top_class.is_zero() && rank > 0;

    // Adjunction: per-factor anticanonical weight n minus the sigma_1 weight
    // of c_1 of the bundle.
    const SchubertClass c1 = total.component(1);
    profile.index.reserve(ring.factor_count());
    for (std::size_t f = 0; f < ring.factor_count(); ++f) {
        std::vector<Partition> slot(ring.factor_count());
        slot[f] = Partition{1};
        const Int w = c1.coefficient(PartitionTuple(std::move(slot)));
        profile.index.push_back(ring.n(f) - w.convert_to<long>());
    }
    return profile;
}

SchubertClass kernel_c1_on_complement() {
    const GrassmannProduct ring(6, 9);
    const BundleExpr t = BundleExpr::taut(0, 6);
    return chern_class_on(ring, BundleExpr::wedge(3, t), 1) - chern_class_on(ring, t, 1);
}

long homogeneous_dim(SpaceKind kind, int k, int n) {
    switch (kind) {
        case SpaceKind::Grassmannian:
            if (k < 1 || k >= n) throw std::invalid_argument("need 1 <= k < n");
            return static_cast<long>(k) * (n - k);
        case SpaceKind::Isotropic:
            if (n % 2 != 0) throw std::invalid_argument("isotropic Grassmannian needs n even");
            if (k < 1 || 2 * k > n) throw std::invalid_argument("need 1 <= k <= n/2");
            return static_cast<long>(k) * (n - k) - static_cast<long>(k) * (k - 1) / 2;
        case SpaceKind::Orthogonal:
            if (k < 1 || 2 * k > n) throw std::invalid_argument("need 1 <= k <= n/2");
            return static_cast<long>(k) * (n - k) - static_cast<long>(k) * (k + 1) / 2;
    }
    throw std::logic_error("unreachable space kind");
}

namespace {

// Schur polynomial of a bundle given by its total Chern class, via the dual
// Jacobi-Trudi determinant s_mu = det(e_{mu'_i - i + j}) with e_i = c_i.
SchubertClass schur_of_total_chern(const SchubertClass& total, const Partition& mu) {
    const GrassmannProduct& ring = total.ring();
    const Partition conj = mu.conjugate();
    const int m = static_cast<int>(conj.length());
    if (m == 0) return SchubertClass::unit(ring);
    std::vector<int> perm(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) perm[static_cast<std::size_t>(i)] = i;
    SchubertClass out = SchubertClass::zero(ring);
    do {
        int inversions = 0;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)])
                    ++inversions;
        SchubertClass prod = SchubertClass::unit(ring);
        bool dead = false;
        for (int i = 0; i < m && !dead; ++i) {
            // entry (i, j) of the dual Jacobi-Trudi matrix is e_{mu'_i + j - i}
            const int idx = conj.part(static_cast<std::size_t>(i)) +
                            perm[static_cast<std::size_t>(i)] - i;
            if (idx < 0) {
                dead = true;
                break;
            }
            prod = prod * total.component(idx);
        }
        if (dead) continue;
        if (inversions % 2 == 1) prod *= Int(-1);
        out += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace

Int d4_zero_locus_euler() {
    const GrassmannProduct ring({{2, 4}, {2, 4}, {2, 4}});
    const std::vector<int> ranks = ring.taut_ranks();

    const BundleExpr e = BundleExpr::tensor(
        BundleExpr::dual(BundleExpr::taut(0, 2)),
        BundleExpr::tensor(BundleExpr::dual(BundleExpr::taut(1, 2)),
                           BundleExpr::dual(BundleExpr::taut(2, 2))));
    const SchubertClass total_e = total_chern_on(ring, BundleSpec(e));
    const SchubertClass top_e = total_e.component(8);

    // Tangent bundle of each factor: Hom(U, Q) with Q = O^4 / U. Expand
    // c(U^dual tensor Q) through formal roots for both sides, then substitute
    // sigma classes for the U^dual side and Jacobi-Trudi polynomials in c(Q)
    // for the quotient side.
    SchubertClass tangent_total = SchubertClass::unit(ring);
    const std::vector<int> pair_ranks{2, 2};
    const BundleExpr formal_tensor = BundleExpr::tensor(
        BundleExpr::dual(BundleExpr::taut(0, 2)), BundleExpr::dual(BundleExpr::taut(1, 2)));
    const auto tensor_components = chern_classes_up_to(formal_tensor, 4, pair_ranks);
    for (std::size_t f = 0; f < ring.factor_count(); ++f) {
        const SchubertClass cu =
            total_chern_expr(ring, BundleExpr::taut(static_cast<int>(f), 2), 4);
        const SchubertClass cq = chern_series_inverse(cu, ring.dimension());
        SchubertClass factor_total = SchubertClass::zero(ring);
        for (int d = 0; d <= 4; ++d) {
            for (const auto& [tuple, coeff] : tensor_components[static_cast<std::size_t>(d)]
                                                  .terms()) {
                // tuple = (lambda for U^dual roots, mu for Q roots)
                SchubertClass part = SchubertClass::sigma(ring, f, tuple.entries[0]);
                part = part * schur_of_total_chern(cq, tuple.entries[1]);
                part *= coeff;
                factor_total += part;
            }
        }
        tangent_total = tangent_total * factor_total;
    }

    const SchubertClass normal_inverse = chern_series_inverse(total_e, 4);
    const SchubertClass zero_locus_tangent = tangent_total * normal_inverse;
    return integrate(zero_locus_tangent.component(4) * top_e);
}

}  // namespace chowlab
