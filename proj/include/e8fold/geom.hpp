#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "e8fold/foldcore.hpp"

namespace e8fold {

struct ProjectionBasis {
    std::vector<std::array<double, 8>> rows;
    std::string provenance;
};

// Van Oss style 600-cell Petrie basis vectors, padded to eight coordinates.
// The third (z) row makes an optional 3D variant.
inline ProjectionBasis h4_petrie_basis() {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    const double s15 = 2.0 * std::sin(2.0 * std::numbers::pi / 15.0);
    const double s30 = 2.0 * std::sin(2.0 * std::numbers::pi / 30.0);
    const double s60 = 2.0 * std::sin(2.0 * std::numbers::pi / 60.0);
    ProjectionBasis b;
    b.provenance = "h4-petrie";
    b.rows = {
        {0.0, phi * s30, s15, 0.0, 0.0, 0.0, 0.0, 0.0},
        {-phi * s60, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0},
        {1.0, 0.0, 0.0, phi * s60, 0.0, 0.0, 0.0, 0.0},
    };
    return b;
}

// E8 Petrie basis: the H4 rows pushed through U.
inline ProjectionBasis e8_petrie_basis() {
    ProjectionBasis h4 = h4_petrie_basis();
    Mat8 u = build_U();
    std::array<std::array<double, 8>, 8> ud;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) ud[i][j] = u[i][j].to_double();
    ProjectionBasis b;
    b.provenance = "e8-petrie";
    for (const auto& row : h4.rows) {
        std::array<double, 8> out{};
        for (int i = 0; i < 8; ++i) {
            double s = 0;
            for (int j = 0; j < 8; ++j) s += ud[i][j] * row[j];
            out[i] = s;
        }
        b.rows.push_back(out);
    }
    return b;
}

template <std::size_t N>
inline std::vector<double> to_floats(const Vec<N>& v) {
    std::vector<double> out(N);
    for (std::size_t i = 0; i < N; ++i) out[i] = v[i].to_double();
    return out;
}

// Dot products against each basis row; point order matches input order.
template <std::size_t N>
inline std::vector<std::vector<double>> project(const std::vector<Vec<N>>& vertices,
                                                const ProjectionBasis& basis) {
    for (const auto& row : basis.rows)
        for (std::size_t j = N; j < 8; ++j)
            if (row[j] != 0.0 && N < 8)
                throw std::invalid_argument("project: basis touches missing dimensions");
    std::vector<std::vector<double>> out;
    out.reserve(vertices.size());
    for (const auto& v : vertices) {
        std::vector<double> p;
        p.reserve(basis.rows.size());
        for (const auto& row : basis.rows) {
            double s = 0;
            for (std::size_t j = 0; j < N; ++j) s += row[j] * v[j].to_double();
            p.push_back(s);
        }
        out.push_back(std::move(p));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Platonic 3D projection: coordinates 1..3 of U v.
// ---------------------------------------------------------------------------

struct Exact3 {
    std::array<TowerScalar, 3> c;
    TowerScalar norm2() const { return c[0] * c[0] + c[1] * c[1] + c[2] * c[2]; }
};

inline std::vector<Exact3> platonic_3d_exact(const std::vector<Vec8>& vertices) {
    Mat8 u = build_U();
    std::vector<Exact3> out;
    out.reserve(vertices.size());
    for (const Vec8& v : vertices) {
        Vec8 w = mat_vec(u, v);
        out.push_back({{w[0], w[1], w[2]}});
    }
    return out;
}

inline std::vector<std::array<double, 3>> platonic_3d(const std::vector<Vec8>& vertices) {
    std::vector<std::array<double, 3>> out;
    out.reserve(vertices.size());
    for (const Exact3& e : platonic_3d_exact(vertices))
        out.push_back({e.c[0].to_double(), e.c[1].to_double(), e.c[2].to_double()});
    return out;
}

// ---------------------------------------------------------------------------
// Norm-shell partitions.
// ---------------------------------------------------------------------------

struct ShellPartition {
    struct Group {
        double norm = 0;                 // representative radial distance
        std::vector<uint32_t> indices;   // member points
        bool has_exact = false;
        TowerScalar exact_norm2;
    };
    std::vector<Group> groups;  // sorted by norm
    double tolerance = 1e-9;
};

// Groups points by radial norm with the given tolerance (gap grouping on the
// sorted norms, so the result is independent of input order).
inline ShellPartition shell_partition(const std::vector<std::vector<double>>& points,
                                      double tolerance = 1e-9) {
    if (tolerance <= 0) throw std::invalid_argument("shell_partition: tolerance must be positive");
    ShellPartition part;
    part.tolerance = tolerance;
    std::vector<std::pair<double, uint32_t>> norms;
    norms.reserve(points.size());
    for (uint32_t i = 0; i < points.size(); ++i) {
        double n = 0;
        for (double x : points[i]) n += x * x;
        norms.push_back({std::sqrt(n), i});
    }
    std::sort(norms.begin(), norms.end());
    for (std::size_t i = 0; i < norms.size(); ++i) {
        if (part.groups.empty() || norms[i].first - part.groups.back().norm > tolerance) {
            ShellPartition::Group g;
            g.norm = norms[i].first;
            part.groups.push_back(g);
        }
        part.groups.back().indices.push_back(norms[i].second);
        part.groups.back().norm = norms[i].first;  // track the running edge of the group
    }
    for (auto& g : part.groups) {
        double lo = 0;
        for (uint32_t idx : g.indices) {
            double n = 0;
            for (double x : points[idx]) n += x * x;
            lo += std::sqrt(n);
        }
        g.norm = lo / static_cast<double>(g.indices.size());
        std::sort(g.indices.begin(), g.indices.end());
    }
    return part;
}

// Exact shells of the Platonic 3D projection: squared norm -> indices,
// ascending norm.
inline std::vector<std::pair<TowerScalar, std::vector<uint32_t>>> platonic_shells_exact(
    const std::vector<Vec8>& vertices) {
    std::vector<Exact3> pts = platonic_3d_exact(vertices);
    std::vector<std::pair<TowerScalar, std::vector<uint32_t>>> groups;
    for (uint32_t i = 0; i < pts.size(); ++i) {
        TowerScalar n2 = pts[i].norm2();
        bool placed = false;
        for (auto& g : groups)
            if (g.first == n2) {
                g.second.push_back(i);
                placed = true;
                break;
            }
        if (!placed) groups.push_back({n2, {i}});
    }
    std::sort(groups.begin(), groups.end(),
              [](const auto& a, const auto& b) { return TowerScalar::cmp(a.first, b.first) < 0; });
    return groups;
}

// Attaches exact squared norms to a float partition computed from exact input.
inline ShellPartition shell_partition_exact_tagged(const std::vector<Vec8>& vertices) {
    auto exact = platonic_shells_exact(vertices);
    ShellPartition part;
    part.tolerance = 0;
    for (auto& [n2, idx] : exact) {
        ShellPartition::Group g;
        g.has_exact = true;
        g.exact_norm2 = n2;
        g.norm = std::sqrt(std::max(0.0, n2.to_double()));
        g.indices = idx;
        part.groups.push_back(g);
    }
    return part;
}

}  // namespace e8fold
