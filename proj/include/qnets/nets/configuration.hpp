#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qnets/errors.hpp"

namespace qnets {

enum class RowId { T1_1, T1_2, T1_3, T1_4, T2_1, T2_2, T2_3, T2_4, C8_SPLIT };

enum class SingularLocusLabel {
    Point,
    TwoPoints,
    ConicV2P1,
    QuadricSurfaceP1xP1,
    LineP1,
    Quadric3Fold,
    Quadric4FoldGr24,
    Empty,
    ConeCase,
    Unclassified,
};

inline std::string to_string(SingularLocusLabel l) {
    switch (l) {
        case SingularLocusLabel::Point: return "Point";
        case SingularLocusLabel::TwoPoints: return "TwoPoints";
        case SingularLocusLabel::ConicV2P1: return "ConicV2P1";
        case SingularLocusLabel::QuadricSurfaceP1xP1: return "QuadricSurfaceP1xP1";
        case SingularLocusLabel::LineP1: return "LineP1";
        case SingularLocusLabel::Quadric3Fold: return "Quadric3Fold";
        case SingularLocusLabel::Quadric4FoldGr24: return "Quadric4FoldGr24";
        case SingularLocusLabel::Empty: return "Empty";
        case SingularLocusLabel::ConeCase: return "ConeCase";
        case SingularLocusLabel::Unclassified: return "Unclassified";
    }
    return "?";
}

using Bidegree = std::pair<int, int>;

/// One row of the classification tables (plus the split C-8 bundle).
struct Configuration {
    RowId id;
    std::string_view name;   // "T1-1", ...
    std::string_view alias;  // "K3-27", "R-63" or empty
    int a;                   // G = P^a x P^b
    int b;
    std::array<int, 3> kernel_dims;
    std::array<Bidegree, 3> quadric_types;
    std::optional<SingularLocusLabel> expected_singular_label;
    std::array<int, 3> expected_h4;
    std::string_view fano_note;

    /// Ambient projective dimension N of the quadrics (P^N = P^b).
    int ambient_n() const { return b; }
    /// Dimension of the common kernel K.
    int k_dim() const { return kernel_dims[0]; }
    /// Vanishing order along the center of each quadric: type (m, 2-m).
    std::array<int, 3> orders() const { return {quadric_types[0].first, quadric_types[1].first, quadric_types[2].first}; }
    bool is_table_row() const { return id != RowId::C8_SPLIT; }
};

inline const std::vector<Configuration>& configurations() {
    using L = SingularLocusLabel;
    static const std::vector<Configuration> rows{
        {RowId::T1_1, "T1-1", "K3-27", 6, 7, {1, 1, 0}, {{{2, 0}, {2, 0}, {1, 1}}}, L::Point, {1, 28, 1}, "K3-27"},
        {RowId::T1_2, "T1-2", "R-63", 5, 7, {2, 2, 0}, {{{2, 0}, {2, 0}, {0, 2}}}, L::TwoPoints, {1, 24, 1}, "R-63"},
        {RowId::T1_3, "T1-3", "", 4, 7, {3, 3, 0}, {{{2, 0}, {2, 0}, {0, 2}}}, L::ConicV2P1, {1, 22, 1}, "not Fano"},
        {RowId::T1_4, "T1-4", "", 3, 7, {4, 0, 0}, {{{2, 0}, {0, 2}, {1, 1}}}, L::QuadricSurfaceP1xP1, {1, 22, 1}, "not Fano"},
        {RowId::T2_1, "T2-1", "", 7, 9, {2, 2, 0}, {{{2, 0}, {2, 0}, {1, 1}}}, L::LineP1, {1, 22, 1}, "Fano, index 2"},
        {RowId::T2_2, "T2-2", "", 5, 9, {4, 4, 0}, {{{2, 0}, {2, 0}, {0, 2}}}, L::QuadricSurfaceP1xP1, {1, 24, 1}, "Fano, index 1"},
        {RowId::T2_3, "T2-3", "", 4, 9, {5, 5, 0}, {{{2, 0}, {2, 0}, {0, 2}}}, L::Quadric3Fold, {1, 22, 1}, "not Fano"},
        {RowId::T2_4, "T2-4", "", 3, 9, {6, 0, 0}, {{{2, 0}, {0, 2}, {1, 1}}}, L::Quadric4FoldGr24, {1, 22, 1}, "not Fano"},
        // Split version of the C-8 bundle: Q(0,1) + O(1,1) + O(2,0) + O(1,1) on P^5 x P^7.
        {RowId::C8_SPLIT, "C8-SPLIT", "C-8", 5, 7, {0, 0, 0}, {{{1, 1}, {2, 0}, {1, 1}}}, std::nullopt, {2, 32, 2},
         "split bundle, not of K3 type"},
    };
    return rows;
}

inline const Configuration& configuration(RowId id) {
    for (const auto& c : configurations())
        if (c.id == id) return c;
    throw InvalidInput("unknown row");
}

inline std::optional<RowId> parse_row_id(std::string_view s) {
    for (const auto& c : configurations())
        if (s == c.name || (!c.alias.empty() && s == c.alias)) return c.id;
    return std::nullopt;
}

inline std::vector<RowId> table_rows() {
    std::vector<RowId> out;
    for (const auto& c : configurations())
        if (c.is_table_row()) out.push_back(c.id);
    return out;
}

}  // namespace qnets
