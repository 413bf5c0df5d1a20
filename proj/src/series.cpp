#include "chowlab/series.hpp"

#include <stdexcept>

#include "chowlab/forms.hpp"

namespace chowlab {

long SpaceDesc::dim() const {
    if (homogeneous) {
        const auto& [kind, k, n] = *homogeneous;
        return homogeneous_dim(kind, k, n);
    }
    if (recorded_dim) return *recorded_dim;
    throw std::logic_error("space has neither recorded nor computable dimension");
}

namespace {

Int binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int out = 1;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

BundleExpr dual_taut(int factor) { return BundleExpr::dual(BundleExpr::taut(factor)); }

}  // namespace

std::string to_string(SeriesLabel label) {
    switch (label) {
        case SeriesLabel::G2: return "G2";
        case SeriesLabel::D4: return "D4";
        case SeriesLabel::F4: return "F4";
        case SeriesLabel::E6: return "E6";
        case SeriesLabel::E7: return "E7";
        case SeriesLabel::E8: return "E8";
        case SeriesLabel::Sextonions: return "sextonions";
    }
    return "?";
}

SeriesRow series_row(SeriesLabel label) {
    SeriesRow row;
    row.label = label;
    switch (label) {
        case SeriesLabel::G2: {
            row.group = "G2";
            row.dual_coxeter = 4;
            row.a = Rational(-2, 3);
            row.h_group = "SL2";
            row.cycle = {"v3(P1)", 1, std::nullopt};
            row.x_name = "P5";
            row.x_dim_recorded = 5;
            row.x_index_recorded = 2;  // -K = 6H = 2 L for the cubic polarization L = O(3)
            row.p_name = "G(2,6)";
            row.p_space = GrassmannProduct(2, 6);
            row.e_bundle = BundleSpec(BundleExpr::sym(3, dual_taut(0)));
            row.h0_dim = binom(8, 3);  // cubics on P5, equal to Sym^3 of a 6-space
            row.status = RowStatus::Constructed;
            break;
        }
        case SeriesLabel::D4: {
            row.group = "SO8";
            row.dual_coxeter = 6;
            row.a = 0;
            row.h_group = "SL2^3";
            row.cycle = {"(P1)^3", 3, std::nullopt};
            row.x_name = "(P3)^3";
            row.x_dim_recorded = 9;
            row.x_index_recorded = 4;  // -K = O(4,4,4) = 4 L
            row.p_name = "G(2,4)^3";
            row.p_space = GrassmannProduct({{2, 4}, {2, 4}, {2, 4}});
            row.e_bundle = BundleSpec(BundleExpr::tensor(
                dual_taut(0), BundleExpr::tensor(dual_taut(1), dual_taut(2))));
            row.h0_dim = Int(64);  // 4^3 trilinear forms
            row.status = RowStatus::Constructed;
            break;
        }
        case SeriesLabel::F4: {
            row.group = "F4";
            row.dual_coxeter = 9;
            row.a = 1;
            row.h_group = "Sp6";
            row.cycle = {"IG(3,6)", std::nullopt,
                         std::make_tuple(SpaceKind::Isotropic, 3, 6)};
            row.x_name = "IG(3,9)";
            row.x_is_zero_locus = true;  // Z(wedge^2 U*) in G(3,9)
            row.p_name = "Bl G(6,9)";
            row.p_space = GrassmannProduct(6, 9);
            row.p_blown_up = true;
            // Dual of the kernel of the contraction wedge^3 T -> T; sections
            // of the dual cut the cycle space of a hyperplane section.
            row.e_bundle = BundleSpec(BundleExpr::wedge(3, dual_taut(0)), dual_taut(0));
            row.h0_dim = binom(9, 3) - 9;  // 3-forms on V9 modulo omega ^ V9^*
            row.status = RowStatus::Constructed;
            break;
        }
        case SeriesLabel::E6: {
            row.group = "E6";
            row.dual_coxeter = 12;
            row.a = 2;
            row.h_group = "SL6";
            row.cycle = {"G(3,6)", std::nullopt,
                         std::make_tuple(SpaceKind::Grassmannian, 3, 6)};
            row.x_name = "G(3,10)";
            row.x_homogeneous = SpaceDesc{"G(3,10)", std::nullopt,
                                          std::make_tuple(SpaceKind::Grassmannian, 3, 10)};
            row.x_index_recorded = 10;  // Grassmannian G(k,n) has index n
            row.p_name = "G(6,10)";
            row.p_space = GrassmannProduct(6, 10);
            row.e_bundle = BundleSpec(BundleExpr::wedge(3, dual_taut(0)));
            row.h0_dim = binom(10, 3);  // 3-forms on V10
            row.status = RowStatus::Constructed;
            break;
        }
        case SeriesLabel::E7: {
            row.group = "E7";
            row.dual_coxeter = 18;
            row.a = 4;
            row.h_group = "Spin12";
            row.cycle = {"S12", std::nullopt,
                         std::make_tuple(SpaceKind::Orthogonal, 6, 12)};
            row.x_name = "OG(6,15)";
            row.x_homogeneous = SpaceDesc{"OG(6,15)", std::nullopt,
                                          std::make_tuple(SpaceKind::Orthogonal, 6, 15)};
            row.x_index_recorded = 5;  // actual index; the 3a+4 pattern fails here
            row.p_name = "Bl G(12,15)";
            row.p_space = GrassmannProduct(12, 15);
            row.p_blown_up = true;
            row.e_recorded_rank = 32;  // half-spin fibers; construction open
            row.status = RowStatus::Open;
            row.note =
                "ambient polarization restricts with divisibility two on the cycles; "
                "the bundle construction is open";
            break;
        }
        case SeriesLabel::E8: {
            row.group = "E8";
            row.dual_coxeter = 30;
            row.a = 8;
            row.h_group = "E7";
            row.cycle = {"Freudenthal 27-fold", 27, std::nullopt};
            row.x_name = "??";
            row.p_name = "??";
            row.status = RowStatus::Open;
            row.note = "no candidate ambient or cycle space; formula values only";
            break;
        }
        case SeriesLabel::Sextonions: {
            row.group = "sextonions";
            row.dual_coxeter = 24;
            row.a = 6;
            row.h_group = "SL6 x SL2 (degenerate)";
            row.cycle = {"(degenerate)", 21, std::nullopt};
            row.x_name = "??";
            row.p_name = "??";
            row.status = RowStatus::Open;
            row.note = "intermediate row; singular geometry expected, formula values only";
            break;
        }
    }
    return row;
}

std::vector<SeriesRow> all_series_rows() {
    return {series_row(SeriesLabel::G2),  series_row(SeriesLabel::D4),
            series_row(SeriesLabel::F4),  series_row(SeriesLabel::E6),
            series_row(SeriesLabel::E7),  series_row(SeriesLabel::E8),
            series_row(SeriesLabel::Sextonions)};
}

namespace {

Rational rat(long v) { return Rational(v); }

std::string rat_str(const Rational& r) {
    return r.str();
}

void push(std::vector<CheckLine>& out, std::string name, std::string claim,
          std::string expected, std::string computed, CheckStatus status,
          std::string note = "") {
    out.push_back({std::move(name), std::move(claim), std::move(expected),
                   std::move(computed), status, std::move(note)});
}

void push_int_check(std::vector<CheckLine>& out, std::string name, std::string claim,
                    const Rational& expected, long computed, std::string note = "") {
    const CheckStatus status =
        expected == rat(computed) ? CheckStatus::Pass : CheckStatus::Fail;
    push(out, std::move(name), std::move(claim), rat_str(expected),
         std::to_string(computed), status, std::move(note));
}

}  // namespace

std::vector<CheckLine> check_row(const SeriesRow& row) {
    std::vector<CheckLine> out;
    const Rational a = row.a;

    // a = h_vee / 3 - 2, exact rational arithmetic.
    {
        const Rational derived = Rational(row.dual_coxeter, 3) - 2;
        push(out, "a_param", "a equals h_vee/3 - 2", rat_str(a), rat_str(derived),
             derived == a ? CheckStatus::Pass : CheckStatus::Fail);
    }

    // dim C = 3a + 3
    push_int_check(out, "dim_c", "dim C = 3a+3", 3 * a + 3, row.cycle.dim());

    // dim X = 6a + 9 (where X exists), and the zero-locus route for IG(3,9).
    std::optional<long> x_dim;
    std::optional<long> x_index;
    if (row.x_is_zero_locus) {
        const GrassmannProduct g39(3, 9);
        const auto profile = zero_locus_profile(
            g39, BundleSpec(BundleExpr::wedge(2, BundleExpr::dual(BundleExpr::taut(0)))));
        x_dim = profile.dim;
        x_index = profile.index.at(0);
    } else if (row.x_homogeneous) {
        x_dim = row.x_homogeneous->dim();
        x_index = row.x_index_recorded;
    } else if (row.x_dim_recorded) {
        x_dim = row.x_dim_recorded;
        x_index = row.x_index_recorded;
    }
    if (x_dim) {
        push_int_check(out, "dim_x", "dim X = 6a+9", 6 * a + 9, *x_dim);
        push_int_check(out, "dim_v", "dim V = 6a+8 = dim X - 1", 6 * a + 8, *x_dim - 1);
    } else {
        push(out, "dim_x", "dim X = 6a+9 (formula value; construction open)",
             rat_str(6 * a + 9), rat_str(6 * a + 9), CheckStatus::Pass, row.note);
        push(out, "dim_v", "dim V = 6a+8 (formula value; construction open)",
             rat_str(6 * a + 8), rat_str(6 * a + 8), CheckStatus::Pass, row.note);
    }

    // index X = 3a + 4, with respect to the cycle-compatible polarization L
    // with -K_X = (3a+4) L. The a=4 row records the known departure.
    if (x_index) {
        const Rational expected = 3 * a + 4;
        const std::string claim = "index of X in the cycle polarization = 3a+4";
        if (expected == rat(*x_index)) {
            push(out, "index_x", claim, rat_str(expected), std::to_string(*x_index),
                 CheckStatus::Pass);
        } else if (row.label == SeriesLabel::E7) {
            push(out, "index_x", claim, rat_str(expected), std::to_string(*x_index),
                 CheckStatus::RecordedException, row.note);
        } else {
            push(out, "index_x", claim, rat_str(expected), std::to_string(*x_index),
                 CheckStatus::Fail);
        }
    }

    // dim P = 6a + 12
    if (row.p_space) {
        long dim_p = 0;
        for (std::size_t f = 0; f < row.p_space->factor_count(); ++f)
            dim_p += homogeneous_dim(SpaceKind::Grassmannian, row.p_space->k(f),
                                     row.p_space->n(f));
        push_int_check(out, "dim_p", "dim P = 6a+12", 6 * a + 12, dim_p);
    } else {
        push(out, "dim_p", "dim P = 6a+12 (formula value; construction open)",
             rat_str(6 * a + 12), rat_str(6 * a + 12), CheckStatus::Pass, row.note);
    }

    // rank E = 6a + 8 = dim X - 1, and the zero-locus dimension dim P - rank E.
    if (row.e_bundle && row.p_space) {
        const long rank = rank_on(*row.p_space, *row.e_bundle);
        push_int_check(out, "rank_e", "rank E = 6a+8", 6 * a + 8, rank);
        if (x_dim)
            push_int_check(out, "rank_e_vs_x", "rank E = dim X - 1", rat(*x_dim - 1), rank);
        const auto profile = zero_locus_profile(*row.p_space, *row.e_bundle);
        push_int_check(out, "zero_locus_dim",
                       "zero locus of a section of E has dimension 4", 4, profile.dim);
    } else if (row.e_recorded_rank) {
        push_int_check(out, "rank_e", "rank E = 6a+8 (recorded; construction open)",
                       6 * a + 8, *row.e_recorded_rank, row.note);
    }

    // Section-space dimensions. For the kernel-bundle row the quotient uses
    // that v |-> omega ^ v is injective on the dual 9-space, checked exactly.
    if (row.h0_dim) {
        Int computed = *row.h0_dim;
        std::string note;
        if (row.label == SeriesLabel::F4) {
            const RationalField rationals;
            const int wedge_rank = omega_wedge_map_rank(normal_form_skew(rationals));
            computed = binom(9, 3) - wedge_rank;
            note = "wedge map rank " + std::to_string(wedge_rank) + " of 9 checked exactly";
        }
        push(out, "h0_dim", "dim of the section space of E", row.h0_dim->str(),
             computed.str(), computed == *row.h0_dim ? CheckStatus::Pass : CheckStatus::Fail,
             note);
    }

    return out;
}

}  // namespace chowlab
