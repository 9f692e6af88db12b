#pragma once

#include "rns/grid.hpp"

namespace rns {

/// Velocity-like field: one component per axis at its staggered face location.
struct FaceField {
    std::array<Array3, 3> comp;

    FaceField() = default;
    explicit FaceField(const BoxGrid& g) {
        for (int c = 0; c < 3; ++c) {
            auto d = g.face_dims(c);
            comp[c] = Array3(d[0], d[1], d[2]);
        }
    }
};

/// Vorticity-like field: one component per axis at its staggered edge location.
struct EdgeField {
    std::array<Array3, 3> comp;

    EdgeField() = default;
    explicit EdgeField(const BoxGrid& g) {
        for (int c = 0; c < 3; ++c) {
            auto d = g.edge_dims(c);
            comp[c] = Array3(d[0], d[1], d[2]);
        }
    }
};

/// Scalar field at cell centers (pressure, potentials).
struct CellField {
    Array3 a;

    CellField() = default;
    explicit CellField(const BoxGrid& g) {
        auto d = g.cell_dims();
        a = Array3(d[0], d[1], d[2]);
    }
};

/// Scalar field at grid nodes; internal to the relative Hodge Laplacian.
struct NodeField {
    Array3 a;

    NodeField() = default;
    explicit NodeField(const BoxGrid& g) {
        auto d = g.node_dims();
        a = Array3(d[0], d[1], d[2]);
    }
};

/// Three cell-centered components (interpolated vectors).
struct CellVec3 {
    std::array<Array3, 3> comp;

    CellVec3() = default;
    explicit CellVec3(const BoxGrid& g) {
        auto d = g.cell_dims();
        for (int c = 0; c < 3; ++c) comp[c] = Array3(d[0], d[1], d[2]);
    }
};

// ---- elementwise arithmetic ----

namespace detail {
template <class F>
void zip3(std::array<Array3, 3>& y, const std::array<Array3, 3>& x, F&& f) {
    for (int c = 0; c < 3; ++c) {
        check_same_shape(y[c], x[c], "field arithmetic");
        double* a = y[c].v.data();
        const double* b = x[c].v.data();
        const size_t n = y[c].size();
        for (size_t i = 0; i < n; ++i) f(a[i], b[i]);
    }
}
} // namespace detail

inline void axpy(double alpha, const FaceField& x, FaceField& y) {
    detail::zip3(y.comp, x.comp, [alpha](double& yi, double xi) { yi += alpha * xi; });
}
inline void axpy(double alpha, const EdgeField& x, EdgeField& y) {
    detail::zip3(y.comp, x.comp, [alpha](double& yi, double xi) { yi += alpha * xi; });
}
inline void axpy(double alpha, const CellField& x, CellField& y) {
    check_same_shape(y.a, x.a, "field arithmetic");
    for (size_t i = 0; i < y.a.size(); ++i) y.a.v[i] += alpha * x.a.v[i];
}

inline void scale(FaceField& u, double s) {
    for (int c = 0; c < 3; ++c)
        for (double& x : u.comp[c].v) x *= s;
}
inline void scale(EdgeField& u, double s) {
    for (int c = 0; c < 3; ++c)
        for (double& x : u.comp[c].v) x *= s;
}
inline void scale(CellField& u, double s) {
    for (double& x : u.a.v) x *= s;
}

inline FaceField added(const FaceField& a, const FaceField& b) {
    FaceField r = a;
    axpy(1.0, b, r);
    return r;
}
inline FaceField subtracted(const FaceField& a, const FaceField& b) {
    FaceField r = a;
    axpy(-1.0, b, r);
    return r;
}
inline FaceField scaled(const FaceField& a, double s) {
    FaceField r = a;
    scale(r, s);
    return r;
}

inline double max_abs(const Array3& a) {
    double r = 0;
    for (double x : a.v) r = std::max(r, std::abs(x));
    return r;
}
inline double max_abs(const FaceField& u) {
    double r = 0;
    for (int c = 0; c < 3; ++c) r = std::max(r, max_abs(u.comp[c]));
    return r;
}
inline double max_abs(const EdgeField& u) {
    double r = 0;
    for (int c = 0; c < 3; ++c) r = std::max(r, max_abs(u.comp[c]));
    return r;
}
inline double max_abs(const CellField& u) { return max_abs(u.a); }

// ---- sampling of analytic fields at staggered locations ----

template <class F>
FaceField sample_face_field(const BoxGrid& g, F&& f) {
    // f(c, x, y, z) -> component c value
    FaceField u(g);
    for (int c = 0; c < 3; ++c) {
        auto d = g.face_dims(c);
        for (int i = 0; i < d[0]; ++i)
            for (int j = 0; j < d[1]; ++j)
                for (int k = 0; k < d[2]; ++k) {
                    const double x = c == 0 ? g.node_coord(0, i) : g.cell_coord(0, i);
                    const double y = c == 1 ? g.node_coord(1, j) : g.cell_coord(1, j);
                    const double z = c == 2 ? g.node_coord(2, k) : g.cell_coord(2, k);
                    u.comp[c](i, j, k) = f(c, x, y, z);
                }
    }
    return u;
}

template <class F>
EdgeField sample_edge_field(const BoxGrid& g, F&& f) {
    EdgeField w(g);
    for (int c = 0; c < 3; ++c) {
        auto d = g.edge_dims(c);
        for (int i = 0; i < d[0]; ++i)
            for (int j = 0; j < d[1]; ++j)
                for (int k = 0; k < d[2]; ++k) {
                    const double x = c == 0 ? g.cell_coord(0, i) : g.node_coord(0, i);
                    const double y = c == 1 ? g.cell_coord(1, j) : g.node_coord(1, j);
                    const double z = c == 2 ? g.cell_coord(2, k) : g.node_coord(2, k);
                    w.comp[c](i, j, k) = f(c, x, y, z);
                }
    }
    return w;
}

template <class F>
CellField sample_cell_field(const BoxGrid& g, F&& f) {
    CellField p(g);
    auto d = g.cell_dims();
    for (int i = 0; i < d[0]; ++i)
        for (int j = 0; j < d[1]; ++j)
            for (int k = 0; k < d[2]; ++k)
                p.a(i, j, k) = f(g.cell_coord(0, i), g.cell_coord(1, j), g.cell_coord(2, k));
    return p;
}

} // namespace rns
