#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "chowlab/matrix.hpp"
#include "chowlab/sampling.hpp"

namespace chowlab {

// Geometry of a general trilinear form h on three 4-dimensional spaces: the
// three determinantal quartic surfaces cut out by its slices, the next-line
// correspondence between them, the composed triality automorphism, and the
// plane-triple construction attached to a pair of surface points. Everything
// is pointwise and exact; degenerate inputs are rejected or reported, never
// silently retried.

template <class F>
struct ProjPoint {
    std::array<typename F::value_type, 4> v;

    ProjPoint(const F& field, std::array<typename F::value_type, 4> coords) : v(coords) {
        normalize(field);
    }

    void normalize(const F& field) {
        std::size_t lead = 4;
        for (std::size_t i = 0; i < 4; ++i)
            if (!field.is_zero(v[i])) {
                lead = i;
                break;
            }
        if (lead == 4) throw std::invalid_argument("projective point must be nonzero");
        const auto inv = field.inv(v[lead]);
        for (std::size_t i = 0; i < 4; ++i) v[i] = field.mul(v[i], inv);
    }

    bool operator==(const ProjPoint&) const = default;
};

template <class F>
struct Tensor444 {
    const F field;
    // h[i][j][k] with i, j, k indexing the three factors
    std::array<std::array<std::array<typename F::value_type, 4>, 4>, 4> h;

    explicit Tensor444(const F& f) : field(f) {
        for (auto& plane : h)
            for (auto& row : plane) row.fill(f.zero());
    }

    typename F::value_type eval(const std::array<typename F::value_type, 4>& x,
                                const std::array<typename F::value_type, 4>& y,
                                const std::array<typename F::value_type, 4>& z) const {
        typename F::value_type out = field.zero();
        for (std::size_t i = 0; i < 4; ++i) {
            if (field.is_zero(x[i])) continue;
            for (std::size_t j = 0; j < 4; ++j) {
                if (field.is_zero(y[j])) continue;
                typename F::value_type inner = field.zero();
                for (std::size_t k = 0; k < 4; ++k)
                    inner = field.add(inner, field.mul(h[i][j][k], z[k]));
                out = field.add(out, field.mul(field.mul(x[i], y[j]), inner));
            }
        }
        return out;
    }
};

// Contraction along one axis (1, 2 or 3). The rows and columns of the result
// are the two remaining factors in their natural order: axis 1 yields
// M[j][k] = sum_i x_i h[i][j][k], axis 2 yields M[i][k], axis 3 yields M[i][j].
template <class F>
Matrix<F> slice_matrix(const Tensor444<F>& t, int axis, const ProjPoint<F>& point) {
    if (axis < 1 || axis > 3) throw std::invalid_argument("axis must be 1, 2 or 3");
    const F& field = t.field;
    Matrix<F> m(field, 4, 4);
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) {
            typename F::value_type acc = field.zero();
            for (std::size_t s = 0; s < 4; ++s) {
                const auto& entry = axis == 1   ? t.h[s][a][b]
                                    : axis == 2 ? t.h[a][s][b]
                                                : t.h[a][b][s];
                acc = field.add(acc, field.mul(point.v[s], entry));
            }
            m.at(a, b) = acc;
        }
    return m;
}

template <class F>
typename F::value_type det4(const Matrix<F>& m) {
    const F& field = m.field();
    typename F::value_type out = field.zero();
    std::array<std::size_t, 4> p{0, 1, 2, 3};
    do {
        int inv = 0;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j)
                if (p[i] > p[j]) ++inv;
        auto prod = field.one();
        for (std::size_t i = 0; i < 4; ++i) prod = field.mul(prod, m.at(i, p[i]));
        out = inv % 2 == 0 ? field.add(out, prod) : field.sub(out, prod);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Determinant of the slice; the closure of its projective zero set is the
// determinantal quartic surface attached to the axis.
template <class F>
typename F::value_type quartic_value(const Tensor444<F>& t, int axis,
                                     const ProjPoint<F>& point) {
    return det4(slice_matrix(t, axis, point));
}

// A tensor is rejected as non-general when some axis has an identically
// vanishing quartic or an everywhere rank <= 2 slice; both conditions are
// decided symbolically on the 4-variable coefficient polynomials.
template <class F>
std::optional<std::string> degeneracy_reason(const Tensor444<F>& t) {
    const F& field = t.field;
    using Value = typename F::value_type;
    using Mono = std::array<int, 4>;
    using Poly = std::map<Mono, Value>;
    auto add_to = [&](Poly& p, const Mono& m, const Value& v) {
        if (field.is_zero(v)) return;
        auto [it, inserted] = p.emplace(m, v);
        if (!inserted) {
            it->second = field.add(it->second, v);
            if (field.is_zero(it->second)) p.erase(it);
        }
    };
    for (int axis = 1; axis <= 3; ++axis) {
        // Symbolic slice: entry (a, b) is a linear polynomial in the axis point.
        std::array<std::array<std::array<Value, 4>, 4>, 4> lin{};  // [a][b][var]
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = 0; b < 4; ++b)
                for (std::size_t s = 0; s < 4; ++s)
                    lin[a][b][s] = axis == 1   ? t.h[s][a][b]
                                   : axis == 2 ? t.h[a][s][b]
                                               : t.h[a][b][s];
        auto minor_poly = [&](const std::vector<std::size_t>& rows,
                              const std::vector<std::size_t>& cols) {
            Poly det;
            std::vector<std::size_t> perm(cols.size());
            for (std::size_t i = 0; i < cols.size(); ++i) perm[i] = i;
            do {
                int inv = 0;
                for (std::size_t i = 0; i < perm.size(); ++i)
                    for (std::size_t j = i + 1; j < perm.size(); ++j)
                        if (perm[i] > perm[j]) ++inv;
                // product of linear forms, expanded over variable choices
                Poly prod;
                add_to(prod, Mono{0, 0, 0, 0}, field.one());
                for (std::size_t i = 0; i < perm.size(); ++i) {
                    Poly next;
                    for (const auto& [mono, coeff] : prod)
                        for (std::size_t var = 0; var < 4; ++var) {
                            const Value& c = lin[rows[i]][cols[perm[i]]][var];
                            if (field.is_zero(c)) continue;
                            Mono grown = mono;
                            ++grown[var];
                            add_to(next, grown, field.mul(coeff, c));
                        }
                    prod = std::move(next);
                }
                for (const auto& [mono, coeff] : prod)
                    add_to(det, mono, inv % 2 == 0 ? coeff : field.neg(coeff));
            } while (std::next_permutation(perm.begin(), perm.end()));
            return det;
        };
        if (minor_poly({0, 1, 2, 3}, {0, 1, 2, 3}).empty())
            return "axis " + std::to_string(axis) + " has an identically vanishing quartic";
        bool any_minor = false;
        for (std::size_t ri = 0; ri < 4 && !any_minor; ++ri)
            for (std::size_t ci = 0; ci < 4 && !any_minor; ++ci) {
                std::vector<std::size_t> rows, cols;
                for (std::size_t q = 0; q < 4; ++q) {
                    if (q != ri) rows.push_back(q);
                    if (q != ci) cols.push_back(q);
                }
                if (!minor_poly(rows, cols).empty()) any_minor = true;
            }
        if (!any_minor)
            return "axis " + std::to_string(axis) + " slice has rank <= 2 everywhere";
    }
    return std::nullopt;
}

template <class F>
Tensor444<F> random_tensor(const F& field, Rng& rng) {
    Tensor444<F> t(field);
    for (auto& plane : t.h)
        for (auto& row : plane)
            for (auto& entry : row) entry = random_element(field, rng);
    return t;
}

// Surface membership: (l1, l2) lies on the incidence surface for axis 3 when
// h vanishes on l1 x l2 x V3, i.e. l2 is a left kernel vector of the axis-1
// slice at l1.
template <class F>
bool on_surface(const Tensor444<F>& t, const ProjPoint<F>& l1, const ProjPoint<F>& l2) {
    const F& field = t.field;
    const Matrix<F> m = slice_matrix(t, 1, l1);
    for (std::size_t k = 0; k < 4; ++k) {
        typename F::value_type acc = field.zero();
        for (std::size_t j = 0; j < 4; ++j)
            acc = field.add(acc, field.mul(l2.v[j], m.at(j, k)));
        if (!field.is_zero(acc)) return false;
    }
    return true;
}

struct DegenerateWitness : std::runtime_error {
    explicit DegenerateWitness(const std::string& what) : std::runtime_error(what) {}
};

// The unique l3 with h(l1 x V2 x l3) = 0, as the right kernel of the axis-1
// slice at l1. Requires (l1, l2) on the surface; a kernel of dimension != 1
// is a witness that the tensor fails to be general at this point.
template <class F>
ProjPoint<F> next_line(const Tensor444<F>& t, const ProjPoint<F>& l1, const ProjPoint<F>& l2) {
    if (!on_surface(t, l1, l2))
        throw std::invalid_argument("(l1, l2) is not on the incidence surface");
    const F& field = t.field;
    const Matrix<F> m = slice_matrix(t, 1, l1);
    const Matrix<F> kernel = m.kernel_basis();
    if (kernel.cols() != 1)
        throw DegenerateWitness("slice kernel at l1 has dimension " +
                                std::to_string(kernel.cols()));
    std::array<typename F::value_type, 4> coords;
    for (std::size_t i = 0; i < 4; ++i) coords[i] = kernel.at(i, 0);
    ProjPoint<F> l3(field, coords);
    // Exact re-check of the defining vanishing.
    for (std::size_t j = 0; j < 4; ++j) {
        typename F::value_type acc = field.zero();
        for (std::size_t k = 0; k < 4; ++k) acc = field.add(acc, field.mul(m.at(j, k), l3.v[k]));
        if (!field.is_zero(acc)) throw std::logic_error("kernel vector fails the vanishing");
    }
    return l3;
}

// The other kernel of the same slice: the unique l2 with h(l1 x l2 x V3) = 0
// given that h(l1 x V2 x l3) = 0. Composing with next_line in either order is
// the identity on the incidence varieties, which is what makes every
// elementary step of the iteration an involution.
template <class F>
ProjPoint<F> prev_line(const Tensor444<F>& t, const ProjPoint<F>& l1, const ProjPoint<F>& l3) {
    const F& field = t.field;
    const Matrix<F> m = slice_matrix(t, 1, l1);
    // Membership on the axis-2 incidence surface: l3 must be a right kernel vector.
    for (std::size_t j = 0; j < 4; ++j) {
        typename F::value_type acc = field.zero();
        for (std::size_t k = 0; k < 4; ++k) acc = field.add(acc, field.mul(m.at(j, k), l3.v[k]));
        if (!field.is_zero(acc))
            throw std::invalid_argument("(l1, l3) is not on the incidence surface");
    }
    const Matrix<F> kernel = m.transpose().kernel_basis();
    if (kernel.cols() != 1)
        throw DegenerateWitness("slice kernel at l1 has dimension " +
                                std::to_string(kernel.cols()));
    std::array<typename F::value_type, 4> coords;
    for (std::size_t i = 0; i < 4; ++i) coords[i] = kernel.at(i, 0);
    return ProjPoint<F>(field, coords);
}

// One elementary step of the iteration
//   l1 x l2 x V3 -> l1 x V2 x l3 -> V1 x l2' x l3 -> l1' x l2' x V3.
// The state records which axis is free and the points on the other two axes
// in axis order.
template <class F>
struct TrialityState {
    int free_axis;  // 1, 2 or 3
    ProjPoint<F> a;
    ProjPoint<F> b;
};

template <class F>
TrialityState<F> triality_step(const Tensor444<F>& t, const TrialityState<F>& state) {
    const F& field = t.field;
    auto kernel_point = [&](const Matrix<F>& m, bool left) {
        const Matrix<F> kernel = left ? m.transpose().kernel_basis() : m.kernel_basis();
        if (kernel.cols() != 1)
            throw DegenerateWitness("slice kernel has dimension " +
                                    std::to_string(kernel.cols()));
        std::array<typename F::value_type, 4> coords;
        for (std::size_t i = 0; i < 4; ++i) coords[i] = kernel.at(i, 0);
        return ProjPoint<F>(field, coords);
    };
    switch (state.free_axis) {
        case 3: {
            // fixed (l1, l2): slice at l1, right kernel gives l3
            const ProjPoint<F> l3 = kernel_point(slice_matrix(t, 1, state.a), false);
            return TrialityState<F>{2, state.a, l3};
        }
        case 2: {
            // fixed (l1, l3): slice at l3 (axis 3), right kernel over the
            // middle factor gives l2'
            const ProjPoint<F> l2 = kernel_point(slice_matrix(t, 3, state.b), false);
            return TrialityState<F>{1, l2, state.b};
        }
        case 1: {
            // fixed (l2, l3): slice at l2 (axis 2), left kernel over the first
            // factor gives l1'
            const ProjPoint<F> l1 = kernel_point(slice_matrix(t, 2, state.a), true);
            return TrialityState<F>{3, l1, state.a};
        }
        default:
            throw std::invalid_argument("free axis must be 1, 2 or 3");
    }
}

// The composition of three elementary steps, mapping the axis-3 incidence
// surface to itself.
template <class F>
std::pair<ProjPoint<F>, ProjPoint<F>> triality_cycle(const Tensor444<F>& t,
                                                     const ProjPoint<F>& l1,
                                                     const ProjPoint<F>& l2) {
    if (!on_surface(t, l1, l2))
        throw std::invalid_argument("(l1, l2) is not on the incidence surface");
    TrialityState<F> state{3, l1, l2};
    for (int step = 0; step < 3; ++step) state = triality_step(t, state);
    if (state.free_axis != 3) throw std::logic_error("triality cycle did not close");
    return {state.a, state.b};
}

template <class F>
struct PlaneTriple {
    Matrix<F> t1;  // 4 x 2 column spans
    Matrix<F> t2;
    Matrix<F> t3;
};

template <class F>
struct SurfacePointPair {
    ProjPoint<F> first_l1, first_l2;
    ProjPoint<F> second_l1, second_l2;
};

// From two surface points with distinct first lines and distinct second
// lines: T1 and T2 are the spans, T3 is the common kernel of the induced maps
// V3 -> (T1 tensor T2)^dual. The full vanishing of h on T1 x T2 x T3 is
// re-verified entry by entry.
template <class F>
PlaneTriple<F> triple_from_pair(const Tensor444<F>& t, const SurfacePointPair<F>& z) {
    const F& field = t.field;
    auto span2 = [&](const ProjPoint<F>& p, const ProjPoint<F>& q) {
        Matrix<F> m(field, 4, 2);
        for (std::size_t i = 0; i < 4; ++i) {
            m.at(i, 0) = p.v[i];
            m.at(i, 1) = q.v[i];
        }
        if (m.rank() != 2) throw std::invalid_argument("coincident lines");
        return m;
    };
    Matrix<F> t1 = span2(z.first_l1, z.second_l1);
    Matrix<F> t2 = span2(z.first_l2, z.second_l2);

    // h restricted to T1 x T2: a 4 x 4 matrix from (pairs of T-basis vectors)
    // to V3^dual; its kernel in V3 is T3.
    Matrix<F> pairing(field, 4, 4);
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t k = 0; k < 4; ++k) {
                typename F::value_type acc = field.zero();
                for (std::size_t i = 0; i < 4; ++i)
                    for (std::size_t j = 0; j < 4; ++j)
                        acc = field.add(
                            acc, field.mul(field.mul(t1.at(i, a), t2.at(j, b)), t.h[i][j][k]));
                pairing.at(a * 2 + b, k) = acc;
            }
    if (pairing.rank() != 2)
        throw DegenerateWitness("induced map V3 -> T1* x T2* has rank " +
                                std::to_string(pairing.rank()));
    Matrix<F> t3 = pairing.kernel_basis();
    if (t3.cols() != 2) throw std::logic_error("kernel dimension disagrees with the rank");

    // The eight vanishing equations, verified exactly.
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t c = 0; c < 2; ++c) {
                typename F::value_type acc = field.zero();
                for (std::size_t i = 0; i < 4; ++i)
                    for (std::size_t j = 0; j < 4; ++j)
                        for (std::size_t k = 0; k < 4; ++k)
                            acc = field.add(acc, field.mul(field.mul(t1.at(i, a), t2.at(j, b)),
                                                           field.mul(t.h[i][j][k], t3.at(k, c))));
                if (!field.is_zero(acc))
                    throw std::logic_error("plane triple fails the vanishing equations");
            }
    return PlaneTriple<F>{std::move(t1), std::move(t2), std::move(t3)};
}

// Base points of the pencil of bilinear forms on P(T1) x P(T2) spanned by the
// images of T3-complementary vectors of V3: the two surface points the triple
// came from. Enumerates P1(F_p) along the first factor and solves linearly on
// the second.
template <class F>
std::vector<std::pair<ProjPoint<F>, ProjPoint<F>>> pencil_base_points(
    const Tensor444<F>& t, const PlaneTriple<F>& triple) {
    static_assert(std::is_same_v<F, PrimeField>, "base-point enumeration sweeps P1(F_p)");
    const F& field = t.field;
    const PrimeField* prime = &t.field;

    // Two independent bilinear forms on T1 x T2 spanning the image of h(., ., V3).
    std::vector<Matrix<F>> forms;
    for (std::size_t k0 = 0; k0 < 4 && forms.size() < 2; ++k0) {
        Matrix<F> b(field, 2, 2);
        for (std::size_t a = 0; a < 2; ++a)
            for (std::size_t bb = 0; bb < 2; ++bb) {
                typename F::value_type acc = field.zero();
                for (std::size_t i = 0; i < 4; ++i)
                    for (std::size_t j = 0; j < 4; ++j)
                        acc = field.add(acc,
                                        field.mul(field.mul(triple.t1.at(i, a),
                                                            triple.t2.at(j, bb)),
                                                  t.h[i][j][k0]));
                b.at(a, bb) = acc;
            }
        bool dependent = false;
        if (!forms.empty()) {
            // 2x2 matrices are dependent when all 2x2 minors of the stacked
            // coefficient vectors vanish.
            Matrix<F> stack(field, 2, 4);
            for (std::size_t q = 0; q < 4; ++q) {
                stack.at(0, q) = forms[0].at(q / 2, q % 2);
                stack.at(1, q) = b.at(q / 2, q % 2);
            }
            dependent = stack.rank() < 2;
        } else {
            Matrix<F> stack(field, 1, 4);
            for (std::size_t q = 0; q < 4; ++q) stack.at(0, q) = b.at(q / 2, q % 2);
            dependent = stack.rank() < 1;
        }
        if (!dependent) forms.push_back(std::move(b));
    }
    if (forms.size() != 2) throw DegenerateWitness("image pencil is not 2-dimensional");

    std::vector<std::pair<ProjPoint<F>, ProjPoint<F>>> out;
    auto lift = [&](const Matrix<F>& plane, const std::array<typename F::value_type, 2>& c) {
        std::array<typename F::value_type, 4> coords;
        for (std::size_t i = 0; i < 4; ++i)
            coords[i] = field.add(field.mul(plane.at(i, 0), c[0]),
                                  field.mul(plane.at(i, 1), c[1]));
        return ProjPoint<F>(field, coords);
    };
    auto consider = [&](const std::array<typename F::value_type, 2>& xc) {
        // Both forms become linear in the second factor; a common zero needs
        // the 2x2 system to be singular.
        Matrix<F> sys(field, 2, 2);
        for (std::size_t f = 0; f < 2; ++f)
            for (std::size_t b = 0; b < 2; ++b)
                sys.at(f, b) = field.add(field.mul(xc[0], forms[f].at(0, b)),
                                         field.mul(xc[1], forms[f].at(1, b)));
        const Matrix<F> kernel = sys.kernel_basis();
        if (kernel.cols() == 0) return;
        if (kernel.cols() > 1) throw DegenerateWitness("a pencil member vanishes on P(T2)");
        const std::array<typename F::value_type, 2> yc{kernel.at(0, 0), kernel.at(1, 0)};
        out.emplace_back(lift(triple.t1, xc), lift(triple.t2, yc));
    };
    for (std::uint64_t s = 0; s < prime->p; ++s)
        consider({field.one(), field.from_int(static_cast<long long>(s))});
    consider({field.zero(), field.one()});
    return out;
}

struct SamplingExhausted : std::runtime_error {
    explicit SamplingExhausted(const std::string& what) : std::runtime_error(what) {}
};

// Surface points found by sweeping random lines in P(V1): along each line the
// quartic has at most four roots; roots with a rank-3 slice contribute the
// kernel line as l2. Every returned pair is re-verified exactly.
template <class F>
std::vector<std::pair<ProjPoint<F>, ProjPoint<F>>> find_surface_points(const Tensor444<F>& t,
                                                                       std::size_t count,
                                                                       Rng& rng,
                                                                       std::size_t line_budget) {
    static_assert(std::is_same_v<F, PrimeField>, "surface sampling enumerates P1(F_p)");
    const F& field = t.field;
    if (auto reason = degeneracy_reason(t))
        throw DegenerateWitness("tensor is not general: " + *reason);
    std::vector<std::pair<ProjPoint<F>, ProjPoint<F>>> out;
    std::vector<ProjPoint<F>> seen;
    std::size_t lines = 0;
    while (out.size() < count && lines < line_budget) {
        ++lines;
        const Matrix<F> span = random_subspace_basis(field, rng, 4, 2);
        auto try_point = [&](const std::array<typename F::value_type, 2>& c) {
            if (out.size() >= count) return;
            std::array<typename F::value_type, 4> coords;
            for (std::size_t i = 0; i < 4; ++i)
                coords[i] = field.add(field.mul(span.at(i, 0), c[0]),
                                      field.mul(span.at(i, 1), c[1]));
            ProjPoint<F> l1(field, coords);
            for (const auto& p : seen)
                if (p == l1) return;
            const Matrix<F> m = slice_matrix(t, 1, l1);
            if (m.rank() != 3) return;  // off the surface, or a non-reduced point
            const Matrix<F> left = m.transpose().kernel_basis();
            if (left.cols() != 1) return;
            std::array<typename F::value_type, 4> l2c;
            for (std::size_t i = 0; i < 4; ++i) l2c[i] = left.at(i, 0);
            ProjPoint<F> l2(field, l2c);
            if (!on_surface(t, l1, l2)) throw std::logic_error("kernel point fails vanishing");
            seen.push_back(l1);
            out.emplace_back(std::move(l1), std::move(l2));
        };
        for (std::uint64_t s = 0; s < field.p && out.size() < count; ++s)
            try_point({field.one(), field.from_int(static_cast<long long>(s))});
        try_point({field.zero(), field.one()});
    }
    if (out.size() < count)
        throw SamplingExhausted("found " + std::to_string(out.size()) + " of " +
                                std::to_string(count) + " surface points within " +
                                std::to_string(line_budget) + " lines");
    return out;
}

}  // namespace chowlab
