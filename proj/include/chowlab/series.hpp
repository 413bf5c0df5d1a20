#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "chowlab/field.hpp"
#include "chowlab/grassmann.hpp"

namespace chowlab {

// The extended series of groups behind the cycle-space constructions, one row
// per group, with the varieties entering each construction and the integer
// invariants that tie them together: for parameter a the cycle C has
// dimension 3a+3, the ambient X has dimension 6a+9 and index 3a+4, the cycle
// space P has dimension 6a+12, and the bundle E has rank 6a+8 = dim X - 1.

enum class SeriesLabel { G2, D4, F4, E6, E7, E8, Sextonions };
enum class RowStatus { Constructed, Open };

// A variety entering a row: either a homogeneous space whose dimension we
// compute, or a named space with a recorded dimension.
struct SpaceDesc {
    std::string name;
    std::optional<long> recorded_dim;
    std::optional<std::tuple<SpaceKind, int, int>> homogeneous;

    long dim() const;
};

struct SeriesRow {
    SeriesLabel label;
    std::string group;
    int dual_coxeter = 0;
    Rational a;
    std::string h_group;
    SpaceDesc cycle;  // C

    std::string x_name;
    std::optional<long> x_dim_recorded;        // projective spaces and products
    std::optional<long> x_index_recorded;      // where not derived by adjunction
    bool x_is_zero_locus = false;              // X = Z(wedge^2 U*) in G(3,9)
    std::optional<SpaceDesc> x_homogeneous;    // X itself homogeneous (G(3,10), OG(6,15))

    std::string p_name;
    std::optional<GrassmannProduct> p_space;
    bool p_blown_up = false;

    std::optional<BundleSpec> e_bundle;   // on p_space
    std::optional<long> e_recorded_rank;  // recorded only (no construction)

    std::optional<Int> h0_dim;  // dimension of the section space, when recorded

    RowStatus status = RowStatus::Open;
    std::string note;
};

SeriesRow series_row(SeriesLabel label);
std::vector<SeriesRow> all_series_rows();
std::string to_string(SeriesLabel label);

enum class CheckStatus { Pass, Fail, RecordedException };

struct CheckLine {
    std::string name;      // e.g. "dim_c"
    std::string claim;     // human-readable statement
    std::string expected;
    std::string computed;
    CheckStatus status = CheckStatus::Pass;
    std::string note;
};

// Formula-vs-computation report for one row. Failures become Fail entries;
// discrepancies the construction itself records (the a=4 index) come back as
// RecordedException.
std::vector<CheckLine> check_row(const SeriesRow& row);

}  // namespace chowlab
