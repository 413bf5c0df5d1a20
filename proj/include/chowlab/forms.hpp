#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "chowlab/matrix.hpp"
#include "chowlab/sampling.hpp"

namespace chowlab {

// Lexicographic index tables for exterior powers.
inline std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n) {
    // i < j < n
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

inline std::size_t triple_index(std::size_t i, std::size_t j, std::size_t k, std::size_t n) {
    // i < j < k < n, lexicographic rank among increasing triples
    auto binom2 = [](std::size_t m) { return m * (m - 1) / 2; };
    auto binom3 = [&](std::size_t m) { return m < 3 ? 0 : m * (m - 1) * (m - 2) / 6; };
    const std::size_t total = binom3(n);
    // triples following (i,j,k): count those lexicographically greater
    const std::size_t after = binom3(n - 1 - i) + binom2(n - 1 - j) + (n - 1 - k);
    return total - 1 - after;
}

template <class F>
struct Subspace {
    Matrix<F> basis;  // ambient x dim, full column rank

    explicit Subspace(Matrix<F> b) : basis(std::move(b)) {
        if (basis.rank() != basis.cols())
            throw std::invalid_argument("subspace basis must have full column rank");
    }

    std::size_t ambient() const { return basis.rows(); }
    std::size_t dim() const { return basis.cols(); }
};

// Skew 2-form on a fixed 9-dimensional space: the matrix is required to be
// antisymmetric of rank exactly 8, so the kernel is a line.
template <class F>
struct SkewForm {
    Matrix<F> m;

    explicit SkewForm(Matrix<F> matrix) : m(std::move(matrix)) {
        if (m.rows() != 9 || m.cols() != 9)
            throw std::invalid_argument("skew form lives on a 9-dimensional space");
        const F& field = m.field();
        for (std::size_t i = 0; i < 9; ++i) {
            if (!field.is_zero(m.at(i, i)))
                throw std::invalid_argument("skew form has nonzero diagonal");
            for (std::size_t j = i + 1; j < 9; ++j)
                if (!(m.at(i, j) == field.neg(m.at(j, i))))
                    throw std::invalid_argument("skew form is not antisymmetric");
        }
        if (m.rank() != 8)
            throw std::invalid_argument("skew form must have rank exactly 8");
    }

    typename F::value_type eval(const std::vector<typename F::value_type>& x,
                                const std::vector<typename F::value_type>& y) const {
        const F& field = m.field();
        typename F::value_type out = field.zero();
        for (std::size_t i = 0; i < 9; ++i) {
            if (field.is_zero(x[i])) continue;
            typename F::value_type row = field.zero();
            for (std::size_t j = 0; j < 9; ++j)
                row = field.add(row, field.mul(m.at(i, j), y[j]));
            out = field.add(out, field.mul(x[i], row));
        }
        return out;
    }

    Matrix<F> kernel() const { return m.kernel_basis(); }
};

// Alternating 3-form on an n-dimensional space, coefficients stored on
// lexicographic triples i < j < k.
template <class F>
struct ThreeForm {
    const F field;
    std::size_t n;
    std::vector<typename F::value_type> coeff;  // size C(n,3)

    ThreeForm(const F& f, std::size_t dim)
        : field(f), n(dim), coeff(dim * (dim - 1) * (dim - 2) / 6, f.zero()) {
        if (dim < 3) throw std::invalid_argument("three-form needs dimension >= 3");
    }

    typename F::value_type& at(std::size_t i, std::size_t j, std::size_t k) {
        return coeff[triple_index(i, j, k, n)];
    }
    const typename F::value_type& at(std::size_t i, std::size_t j, std::size_t k) const {
        return coeff[triple_index(i, j, k, n)];
    }

    typename F::value_type eval(const std::vector<typename F::value_type>& x,
                                const std::vector<typename F::value_type>& y,
                                const std::vector<typename F::value_type>& z) const {
        typename F::value_type out = field.zero();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k) {
                    const auto& c = coeff[triple_index(i, j, k, n)];
                    if (field.is_zero(c)) continue;
                    // 3x3 determinant of the (i,j,k) coordinates of (x,y,z)
                    auto det3 = field.sub(
                        field.add(field.mul(x[i], field.sub(field.mul(y[j], z[k]),
                                                            field.mul(y[k], z[j]))),
                                  field.mul(x[k], field.sub(field.mul(y[i], z[j]),
                                                            field.mul(y[j], z[i])))),
                        field.mul(x[j], field.sub(field.mul(y[i], z[k]),
                                                  field.mul(y[k], z[i]))));
                    out = field.add(out, field.mul(c, det3));
                }
        return out;
    }
};

// ---------------------------------------------------------------------------
// Orbit stratification of 6-spaces under the symplectic group of a rank-8
// skew form on a 9-space, and the attached kernel computations.
// ---------------------------------------------------------------------------

// Rank of the restriction of omega to a 6-space; always one of 2, 4, 6.
// Rank 0 would force a 6-dimensional isotropic subspace, impossible for a
// rank-8 form on a 9-space, and signals corrupt input.
template <class F>
int restriction_rank(const SkewForm<F>& omega, const Subspace<F>& v6) {
    if (v6.ambient() != 9 || v6.dim() != 6)
        throw std::invalid_argument("restriction_rank needs a 6-space in the 9-space");
    const F& field = omega.m.field();
    Matrix<F> restricted(field, 6, 6);
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b)
            restricted.at(a, b) = omega.eval(v6.basis.column(a), v6.basis.column(b));
    const int rank = static_cast<int>(restricted.rank());
    if (rank == 0)
        throw std::logic_error("restriction of a rank-8 form to a 6-space cannot vanish");
    return rank;
}

// The contraction map wedge^3 T -> T, t_a ^ t_b ^ t_c |->
// w(a,b) t_c - w(a,c) t_b + w(b,c) t_a, materialized as a 6 x 20 matrix in the
// basis of T.
template <class F>
Matrix<F> contraction_matrix(const SkewForm<F>& omega, const Subspace<F>& t) {
    if (t.ambient() != 9 || t.dim() != 6)
        throw std::invalid_argument("contraction needs a 6-space in the 9-space");
    const F& field = omega.m.field();
    Matrix<F> w(field, 6, 6);
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b)
            w.at(a, b) = omega.eval(t.basis.column(a), t.basis.column(b));
    Matrix<F> out(field, 6, 20);
    std::size_t col = 0;
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = a + 1; b < 6; ++b)
            for (std::size_t c = b + 1; c < 6; ++c) {
                out.at(c, col) = field.add(out.at(c, col), w.at(a, b));
                out.at(b, col) = field.sub(out.at(b, col), w.at(a, c));
                out.at(a, col) = field.add(out.at(a, col), w.at(b, c));
                ++col;
            }
    return out;
}

template <class F>
int contraction_kernel_dim(const SkewForm<F>& omega, const Subspace<F>& t) {
    return 20 - static_cast<int>(contraction_matrix(omega, t).rank());
}

struct FLambdaDims {
    int t_wedge_lambda = 0;   // dim(T ^ Lambda) inside wedge^3 T
    int t4_wedge_lambda = 0;  // dim(T4 ^ Lambda) inside wedge^3 T4
};

// For T4 (dim 4) inside T (dim 6) and a hyperplane Lambda of wedge^2 T4,
// the dimensions of T ^ Lambda and T4 ^ Lambda.
template <class F>
FLambdaDims f_lambda_dim(const Subspace<F>& t, const Subspace<F>& t4,
                         const Matrix<F>& lambda_cols) {
    if (t.dim() != 6 || t4.dim() != 4)
        throw std::invalid_argument("need dim T = 6 and dim T4 = 4");
    if (t.ambient() != t4.ambient())
        throw std::invalid_argument("ambient dimension mismatch");
    if (!span_contains(t.basis, t4.basis))
        throw std::invalid_argument("T4 must be contained in T");
    if (lambda_cols.rows() != 6 || lambda_cols.cols() != 5)
        throw std::invalid_argument("Lambda must be a hyperplane of the 6-dimensional wedge^2 T4");
    if (lambda_cols.rank() != 5)
        throw std::invalid_argument("Lambda basis must have full column rank");
    const F& field = t.basis.field();

    // T4 basis in T coordinates.
    Matrix<F> x(field, 6, 4);
    for (std::size_t c = 0; c < 4; ++c) {
        std::vector<typename F::value_type> coords;
        if (!t.basis.solve(t4.basis.column(c), coords))
            throw std::invalid_argument("T4 must be contained in T");
        x.set_column(c, coords);
    }

    // Embed wedge^2 T4 into wedge^2 T.
    Matrix<F> embed(field, 15, 6);
    std::size_t idx = 0;
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = a + 1; b < 4; ++b) {
            // x_a ^ x_b in coordinates e_i ^ e_j of T
            for (std::size_t i = 0; i < 6; ++i)
                for (std::size_t j = i + 1; j < 6; ++j) {
                    const auto v = field.sub(field.mul(x.at(i, a), x.at(j, b)),
                                             field.mul(x.at(j, a), x.at(i, b)));
                    embed.at(pair_index(i, j, 6), idx) = v;
                }
            ++idx;
        }
    Matrix<F> lambda_in_t = embed * lambda_cols;  // 15 x 5

    auto wedge_vector = [&](std::size_t i, const std::vector<typename F::value_type>& two) {
        // e_i ^ (2-vector in wedge^2 T) -> wedge^3 T coordinates
        std::vector<typename F::value_type> out(20, field.zero());
        for (std::size_t a = 0; a < 6; ++a)
            for (std::size_t b = a + 1; b < 6; ++b) {
                const auto& c = two[pair_index(a, b, 6)];
                if (field.is_zero(c)) continue;
                if (i == a || i == b) continue;
                std::size_t t1 = i, t2 = a, t3 = b;
                int sign = 1;
                // sort (i, a, b) with sign
                if (t1 > t2) {
                    std::swap(t1, t2);
                    sign = -sign;
                }
                if (t2 > t3) {
                    std::swap(t2, t3);
                    sign = -sign;
                }
                if (t1 > t2) {
                    std::swap(t1, t2);
                    sign = -sign;
                }
                const std::size_t pos = triple_index(t1, t2, t3, 6);
                out[pos] = field.add(out[pos], sign > 0 ? c : field.neg(c));
            }
        return out;
    };

    FLambdaDims dims;
    {
        Matrix<F> span(field, 20, 30);
        std::size_t col = 0;
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t l = 0; l < 5; ++l)
                span.set_column(col++, wedge_vector(i, lambda_in_t.column(l)));
        dims.t_wedge_lambda = static_cast<int>(span.rank());
    }
    {
        Matrix<F> span(field, 20, 20);
        std::size_t col = 0;
        for (std::size_t c = 0; c < 4; ++c)
            for (std::size_t l = 0; l < 5; ++l) {
                // wedge with the T4 basis vector x_c = sum_i x.at(i,c) e_i
                std::vector<typename F::value_type> acc(20, field.zero());
                for (std::size_t i = 0; i < 6; ++i) {
                    if (field.is_zero(x.at(i, c))) continue;
                    auto piece = wedge_vector(i, lambda_in_t.column(l));
                    for (std::size_t q = 0; q < 20; ++q)
                        acc[q] = field.add(acc[q], field.mul(x.at(i, c), piece[q]));
                }
                span.set_column(col++, acc);
            }
        dims.t4_wedge_lambda = static_cast<int>(span.rank());
    }
    return dims;
}

struct GraphCheck {
    bool lhs = false;  // Omega_0 vanishes on the graph subspace of V_10
    bool rhs = false;  // Omega + u ^ omega vanishes on T
};

// Compare the two formulations of membership for a graph subspace
// T_0 = { x + u(x) v_0 : x in T }: the 3-form Omega_0 = Omega + omega ^ v_0^*
// vanishes on T_0 exactly when Omega + u ^ omega vanishes on T. Both sides are
// evaluated independently; the identity is exact, not generic.
template <class F>
GraphCheck graph_vanishing_check(const SkewForm<F>& omega, const ThreeForm<F>& big_omega,
                                 const Subspace<F>& t,
                                 const std::vector<typename F::value_type>& u,
                                 std::size_t v0_index) {
    if (big_omega.n != 9) throw std::invalid_argument("Omega must live on the 9-space");
    if (t.ambient() != 9 || t.dim() != 6)
        throw std::invalid_argument("T must be a 6-space of the 9-space");
    if (u.size() != 6) throw std::invalid_argument("u must be a functional on T");
    if (v0_index > 9) throw std::invalid_argument("v0 position must be in 0..9");
    const F& field = omega.m.field();

    // Build Omega_0 = Omega + omega ^ v0^* on the extended 10-space, with the
    // new coordinate inserted at position v0_index.
    auto to10 = [&](std::size_t i9) { return i9 < v0_index ? i9 : i9 + 1; };
    ThreeForm<F> omega0(field, 10);
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = i + 1; j < 9; ++j)
            for (std::size_t k = j + 1; k < 9; ++k)
                omega0.at(to10(i), to10(j), to10(k)) = big_omega.at(i, j, k);
    for (std::size_t i9 = 0; i9 < 9; ++i9)
        for (std::size_t j9 = i9 + 1; j9 < 9; ++j9) {
            const auto w = omega.m.at(i9, j9);
            if (field.is_zero(w)) continue;
            const std::size_t a = to10(i9), b = to10(j9), c = v0_index;
            // (omega ^ v0^*) on the sorted triple; the sign records the slot of v0.
            if (c < a)
                omega0.at(c, a, b) = field.add(omega0.at(c, a, b), w);
            else if (c < b)
                omega0.at(a, c, b) = field.sub(omega0.at(a, c, b), w);
            else
                omega0.at(a, b, c) = field.add(omega0.at(a, b, c), w);
        }

    // Graph basis inside V_10.
    std::vector<std::vector<typename F::value_type>> graph;
    for (std::size_t c = 0; c < 6; ++c) {
        std::vector<typename F::value_type> v(10, field.zero());
        for (std::size_t i = 0; i < 9; ++i) v[to10(i)] = t.basis.at(i, c);
        v[v0_index] = field.add(v[v0_index], u[c]);
        graph.push_back(std::move(v));
    }

    GraphCheck out;
    out.lhs = true;
    for (std::size_t a = 0; a < 6 && out.lhs; ++a)
        for (std::size_t b = a + 1; b < 6 && out.lhs; ++b)
            for (std::size_t c = b + 1; c < 6 && out.lhs; ++c)
                if (!field.is_zero(omega0.eval(graph[a], graph[b], graph[c]))) out.lhs = false;

    out.rhs = true;
    for (std::size_t a = 0; a < 6 && out.rhs; ++a)
        for (std::size_t b = a + 1; b < 6 && out.rhs; ++b)
            for (std::size_t c = b + 1; c < 6 && out.rhs; ++c) {
                const auto xa = t.basis.column(a);
                const auto xb = t.basis.column(b);
                const auto xc = t.basis.column(c);
                auto value = big_omega.eval(xa, xb, xc);
                value = field.add(value, field.mul(u[a], omega.eval(xb, xc)));
                value = field.sub(value, field.mul(u[b], omega.eval(xa, xc)));
                value = field.add(value, field.mul(u[c], omega.eval(xa, xb)));
                if (!field.is_zero(value)) out.rhs = false;
            }
    return out;
}

struct VanishingPair {
    bool omega_vanishes = false;
    bool three_form_vanishes = false;
};

// Exact evaluation of both restrictions to a 5-space.
template <class F>
VanishingPair vanishing_pair_residual(const SkewForm<F>& omega, const ThreeForm<F>& big_omega,
                                      const Subspace<F>& r) {
    if (big_omega.n != 9) throw std::invalid_argument("Omega must live on the 9-space");
    if (r.ambient() != 9 || r.dim() != 5)
        throw std::invalid_argument("R must be a 5-space of the 9-space");
    const F& field = omega.m.field();
    VanishingPair out;
    out.omega_vanishes = true;
    for (std::size_t a = 0; a < 5 && out.omega_vanishes; ++a)
        for (std::size_t b = a + 1; b < 5 && out.omega_vanishes; ++b)
            if (!field.is_zero(omega.eval(r.basis.column(a), r.basis.column(b))))
                out.omega_vanishes = false;
    out.three_form_vanishes = true;
    for (std::size_t a = 0; a < 5 && out.three_form_vanishes; ++a)
        for (std::size_t b = a + 1; b < 5 && out.three_form_vanishes; ++b)
            for (std::size_t c = b + 1; c < 5 && out.three_form_vanishes; ++c)
                if (!field.is_zero(big_omega.eval(r.basis.column(a), r.basis.column(b),
                                                  r.basis.column(c))))
                    out.three_form_vanishes = false;
    return out;
}

// For a pair (omega, Omega) vanishing on the 5-space R, the induced map
// V_9 / R -> wedge^2 R^dual, v |-> Omega(., ., v)|_R, as a 4 x 10 matrix;
// injectivity for the general pair is probed through its rank.
template <class F>
int lift_map_rank(const SkewForm<F>& omega, const ThreeForm<F>& big_omega,
                  const Subspace<F>& r) {
    const auto residual = vanishing_pair_residual(omega, big_omega, r);
    if (!residual.omega_vanishes || !residual.three_form_vanishes)
        throw std::invalid_argument("the pair must vanish on R");
    const F& field = omega.m.field();
    // Greedy complement of R by standard basis vectors.
    Matrix<F> span = r.basis;
    std::vector<std::vector<typename F::value_type>> complement;
    for (std::size_t i = 0; i < 9 && complement.size() < 4; ++i) {
        std::vector<typename F::value_type> e(9, field.zero());
        e[i] = field.one();
        Matrix<F> trial = span.hstack(Matrix<F>::from_columns(field, 9, {e}));
        if (trial.rank() > span.rank()) {
            span = trial;
            complement.push_back(std::move(e));
        }
    }
    Matrix<F> out(field, 4, 10);
    for (std::size_t row = 0; row < 4; ++row) {
        std::size_t col = 0;
        for (std::size_t a = 0; a < 5; ++a)
            for (std::size_t b = a + 1; b < 5; ++b)
                out.at(row, col++) = big_omega.eval(r.basis.column(a), r.basis.column(b),
                                                    complement[row]);
    }
    return static_cast<int>(out.rank());
}

// ---------------------------------------------------------------------------
// Constructions and samplers.
// ---------------------------------------------------------------------------

// omega = e5^ e6^ + e4^ e7^ + e3^ e8^ + e2^ e9^ (indices 1-based): the
// adapted-basis normal form of a rank-8 skew form; its kernel is e1 and it
// vanishes on span(e1..e5).
template <class F>
SkewForm<F> normal_form_skew(const F& field) {
    Matrix<F> m(field, 9, 9);
    const std::array<std::pair<std::size_t, std::size_t>, 4> pairs{
        {{4, 5}, {3, 6}, {2, 7}, {1, 8}}};
    for (const auto& [i, j] : pairs) {
        m.at(i, j) = field.one();
        m.at(j, i) = field.neg(field.one());
    }
    return SkewForm<F>(std::move(m));
}

template <class F>
SkewForm<F> random_skew_form(const F& field, Rng& rng) {
    while (true) {
        Matrix<F> m(field, 9, 9);
        for (std::size_t i = 0; i < 9; ++i)
            for (std::size_t j = i + 1; j < 9; ++j) {
                m.at(i, j) = random_element(field, rng);
                m.at(j, i) = field.neg(m.at(i, j));
            }
        if (m.rank() == 8) return SkewForm<F>(std::move(m));
    }
}

template <class F>
ThreeForm<F> random_three_form(const F& field, Rng& rng, std::size_t n = 9) {
    ThreeForm<F> out(field, n);
    for (auto& c : out.coeff) c = random_element(field, rng);
    return out;
}

// Random 3-form vanishing on span(e1..e5): supported on triples whose largest
// index is at least 5 (0-based), i.e. an element of wedge^2 V9^* ^ W for
// W = span(e6^*..e9^*).
template <class F>
ThreeForm<F> random_three_form_vanishing_on_r(const F& field, Rng& rng) {
    ThreeForm<F> out(field, 9);
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = i + 1; j < 9; ++j)
            for (std::size_t k = j + 1; k < 9; ++k)
                if (k >= 5) out.at(i, j, k) = random_element(field, rng);
    return out;
}

template <class F>
Subspace<F> coordinate_subspace(const F& field, const std::vector<std::size_t>& indices,
                                std::size_t ambient = 9) {
    Matrix<F> m(field, ambient, indices.size());
    for (std::size_t c = 0; c < indices.size(); ++c) m.at(indices[c], c) = field.one();
    return Subspace<F>(std::move(m));
}

// Basis change for 3-forms: the pullback along x |-> basis_change * x.
template <class F>
ThreeForm<F> pullback(const ThreeForm<F>& form, const Matrix<F>& basis_change) {
    if (basis_change.rows() != form.n || basis_change.cols() != form.n)
        throw std::invalid_argument("basis change must be square of the form dimension");
    const F& field = form.field;
    ThreeForm<F> out(field, form.n);
    std::vector<std::vector<typename F::value_type>> cols;
    for (std::size_t c = 0; c < form.n; ++c) cols.push_back(basis_change.column(c));
    for (std::size_t i = 0; i < form.n; ++i)
        for (std::size_t j = i + 1; j < form.n; ++j)
            for (std::size_t k = j + 1; k < form.n; ++k)
                out.at(i, j, k) = form.eval(cols[i], cols[j], cols[k]);
    return out;
}

// Rank of the wedge map v^* |-> omega ^ v^* from the dual 9-space into the
// 3-forms; 9 exactly when omega cannot be written with a linear factor, which
// holds for every rank-8 form.
template <class F>
int omega_wedge_map_rank(const SkewForm<F>& omega) {
    const F& field = omega.m.field();
    Matrix<F> map(field, 84, 9);
    for (std::size_t m = 0; m < 9; ++m)
        for (std::size_t i = 0; i < 9; ++i)
            for (std::size_t j = i + 1; j < 9; ++j)
                for (std::size_t k = j + 1; k < 9; ++k) {
                    // (omega ^ e_m^*)(e_i, e_j, e_k)
                    typename F::value_type v = field.zero();
                    if (k == m) v = omega.m.at(i, j);
                    else if (j == m) v = field.neg(omega.m.at(i, k));
                    else if (i == m) v = omega.m.at(j, k);
                    else continue;
                    map.at(triple_index(i, j, k, 9), m) = v;
                }
    return static_cast<int>(map.rank());
}

}  // namespace chowlab
