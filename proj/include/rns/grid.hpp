#pragma once

#include <string>

#include "rns/core.hpp"

namespace rns {

enum class AxisKind { Wall, Periodic };

inline const char* to_string(AxisKind k) { return k == AxisKind::Wall ? "wall" : "periodic"; }

struct GridConfig {
    std::array<double, 3> lengths{M_PI, M_PI, M_PI};
    std::array<int, 3> counts{16, 16, 16};
    std::array<AxisKind, 3> kinds{AxisKind::Wall, AxisKind::Wall, AxisKind::Wall};
};

/// One quadrilateral surface cell of a wall, carrying the outward normal and
/// its area weight. `cell_a`/`cell_b` index the two tangential axes in
/// ascending axis order.
struct BoundaryFace {
    int normal_axis;   // 0,1,2
    int side;          // 0 = low wall, 1 = high wall
    int cell_a;        // index along the smaller tangential axis
    int cell_b;        // index along the larger tangential axis
    Vec3 normal;       // exactly +-e_axis
    double weight;     // surface area of the cell
};

/**
 * Axis-aligned box with a staggered (MAC) layout:
 * pressure at cell centers, velocity component i on faces normal to axis i,
 * vorticity component i on edges parallel to axis i.
 *
 * Along a Wall axis, face-normal planes carry n+1 samples (both walls
 * included); along a Periodic axis they carry n (plane n wraps to 0).
 * Immutable after construction.
 */
class BoxGrid {
public:
    explicit BoxGrid(const GridConfig& cfg) : cfg_(cfg) {
        for (int a = 0; a < 3; ++a) {
            if (!(cfg.lengths[a] > 0.0)) throw std::invalid_argument("grid: lengths must be positive");
            if (cfg.counts[a] < 4) throw std::invalid_argument("grid: counts must be >= 4 per axis");
            h_[a] = cfg.lengths[a] / cfg.counts[a];
        }
        build_boundary_faces();
    }

    double length(int a) const { return cfg_.lengths[a]; }
    int count(int a) const { return cfg_.counts[a]; }
    double spacing(int a) const { return h_[a]; }
    AxisKind kind(int a) const { return cfg_.kinds[a]; }
    bool wall(int a) const { return cfg_.kinds[a] == AxisKind::Wall; }
    const GridConfig& config() const { return cfg_; }

    int cells(int a) const { return cfg_.counts[a]; }
    int nodes(int a) const { return wall(a) ? cfg_.counts[a] + 1 : cfg_.counts[a]; }

    bool any_wall() const { return wall(0) || wall(1) || wall(2); }

    double cell_volume() const { return h_[0] * h_[1] * h_[2]; }
    double total_volume() const { return cfg_.lengths[0] * cfg_.lengths[1] * cfg_.lengths[2]; }

    /// Quadrature weight of plane index i along axis a for node-staggered data:
    /// trapezoid rule, halved at wall ends.
    double node_weight(int a, int i) const {
        if (wall(a) && (i == 0 || i == cfg_.counts[a])) return 0.5 * h_[a];
        return h_[a];
    }

    /// Dimensions of velocity component c (normal to axis c).
    std::array<int, 3> face_dims(int c) const {
        return {c == 0 ? nodes(0) : cells(0), c == 1 ? nodes(1) : cells(1),
                c == 2 ? nodes(2) : cells(2)};
    }

    /// Dimensions of vorticity component c (parallel to axis c).
    std::array<int, 3> edge_dims(int c) const {
        return {c == 0 ? cells(0) : nodes(0), c == 1 ? cells(1) : nodes(1),
                c == 2 ? cells(2) : nodes(2)};
    }

    std::array<int, 3> cell_dims() const { return {cells(0), cells(1), cells(2)}; }
    std::array<int, 3> node_dims() const { return {nodes(0), nodes(1), nodes(2)}; }

    // Coordinates of staggered sample points.
    double cell_coord(int a, int i) const { return (i + 0.5) * h_[a]; }
    double node_coord(int a, int i) const { return i * h_[a]; }

    // Cyclic index wrap for periodic axes. Callers use these only when the
    // neighbor can cross the seam.
    int wrap_cell(int a, int i) const {
        const int n = cfg_.counts[a];
        return ((i % n) + n) % n;
    }

    const std::vector<BoundaryFace>& boundary_faces() const { return bfaces_; }

    /// Tangential axes of a wall with given normal axis, in ascending order.
    static std::array<int, 2> tangential_axes(int normal_axis) {
        switch (normal_axis) {
            case 0: return {1, 2};
            case 1: return {0, 2};
            default: return {0, 1};
        }
    }

    /// Stable fingerprint of the staggered enumeration (dims, kinds, boundary
    /// face order); golden-checked in the tests.
    uint64_t layout_hash() const {
        uint64_t h = 1469598103934665603ull;
        for (int c = 0; c < 3; ++c) {
            auto fd = face_dims(c);
            auto ed = edge_dims(c);
            h = fnv1a64(fd.data(), sizeof(fd), h);
            h = fnv1a64(ed.data(), sizeof(ed), h);
        }
        for (const auto& f : bfaces_) {
            int rec[4] = {f.normal_axis, f.side, f.cell_a, f.cell_b};
            h = fnv1a64(rec, sizeof(rec), h);
        }
        return h;
    }

private:
    void build_boundary_faces() {
        for (int a = 0; a < 3; ++a) {
            if (!wall(a)) continue;
            auto tang = tangential_axes(a);
            const double area = h_[tang[0]] * h_[tang[1]];
            for (int side = 0; side < 2; ++side) {
                Vec3 nu{0, 0, 0};
                nu[a] = side == 0 ? -1.0 : 1.0;
                for (int ia = 0; ia < cells(tang[0]); ++ia)
                    for (int ib = 0; ib < cells(tang[1]); ++ib)
                        bfaces_.push_back(BoundaryFace{a, side, ia, ib, nu, area});
            }
        }
    }

    GridConfig cfg_;
    std::array<double, 3> h_{};
    std::vector<BoundaryFace> bfaces_;
};

/// Shape operator of the boundary. Every discretized wall is flat, so this is
/// identically zero; it exists so the friction-to-Robin conversion below keeps
/// the full beta = 2W + B structure.
inline Mat3 weingarten(const BoundaryFace&) { return Mat3::zero(); }

/// Robin matrix from a friction matrix B: beta = 2W + B.
inline Mat3 beta_from_friction(const BoundaryFace& f, const Mat3& friction) {
    return 2.0 * weingarten(f) + friction;
}

inline BoxGrid build_grid(const GridConfig& cfg) { return BoxGrid(cfg); }

} // namespace rns
