#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace rns {

/// Dense 3D array of doubles, k (last index) fastest.
struct Array3 {
    int n0 = 0, n1 = 0, n2 = 0;
    std::vector<double> v;

    Array3() = default;
    Array3(int a, int b, int c) : n0(a), n1(b), n2(c), v(static_cast<size_t>(a) * b * c, 0.0) {}

    double& operator()(int i, int j, int k) {
        return v[(static_cast<size_t>(i) * n1 + j) * n2 + k];
    }
    double operator()(int i, int j, int k) const {
        return v[(static_cast<size_t>(i) * n1 + j) * n2 + k];
    }

    size_t size() const { return v.size(); }
    void fill(double x) { std::fill(v.begin(), v.end(), x); }

    bool same_shape(const Array3& o) const { return n0 == o.n0 && n1 == o.n1 && n2 == o.n2; }
};

inline void check_same_shape(const Array3& a, const Array3& b, const char* what) {
    if (!a.same_shape(b)) throw std::invalid_argument(std::string(what) + ": shape mismatch");
}

using Vec3 = std::array<double, 3>;

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

/// Row-major 3x3 matrix.
struct Mat3 {
    std::array<double, 9> m{};

    static Mat3 zero() { return Mat3{}; }
    static Mat3 identity() {
        Mat3 r;
        r.m = {1, 0, 0, 0, 1, 0, 0, 0, 1};
        return r;
    }
    static Mat3 diagonal(double a, double b, double c) {
        Mat3 r;
        r.m = {a, 0, 0, 0, b, 0, 0, 0, c};
        return r;
    }
    static Mat3 scalar(double s) { return diagonal(s, s, s); }

    double& operator()(int i, int j) { return m[3 * i + j]; }
    double operator()(int i, int j) const { return m[3 * i + j]; }

    Vec3 apply(const Vec3& x) const {
        return {m[0] * x[0] + m[1] * x[1] + m[2] * x[2], m[3] * x[0] + m[4] * x[1] + m[5] * x[2],
                m[6] * x[0] + m[7] * x[1] + m[8] * x[2]};
    }

    Mat3 transposed() const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r(i, j) = (*this)(j, i);
        return r;
    }

    double max_abs() const {
        double r = 0;
        for (double x : m) r = std::max(r, std::abs(x));
        return r;
    }
};

inline Mat3 operator+(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 9; ++i) r.m[i] = a.m[i] + b.m[i];
    return r;
}
inline Mat3 operator-(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 9; ++i) r.m[i] = a.m[i] - b.m[i];
    return r;
}
inline Mat3 operator*(double s, const Mat3& a) {
    Mat3 r;
    for (int i = 0; i < 9; ++i) r.m[i] = s * a.m[i];
    return r;
}

/// Eigenvalues of a symmetric 3x3 matrix, ascending (closed-form trigonometric method).
inline std::array<double, 3> symmetric_eigenvalues(const Mat3& a) {
    const double p1 = a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) + a(1, 2) * a(1, 2);
    const double q = (a(0, 0) + a(1, 1) + a(2, 2)) / 3.0;
    if (p1 < 1e-300) {
        std::array<double, 3> e{a(0, 0), a(1, 1), a(2, 2)};
        std::sort(e.begin(), e.end());
        return e;
    }
    const double p2 = (a(0, 0) - q) * (a(0, 0) - q) + (a(1, 1) - q) * (a(1, 1) - q) +
                      (a(2, 2) - q) * (a(2, 2) - q) + 2.0 * p1;
    const double p = std::sqrt(p2 / 6.0);
    Mat3 b;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) b(i, j) = (a(i, j) - (i == j ? q : 0.0)) / p;
    // det(B)/2, clamped into [-1,1] for acos
    const double detb =
        b(0, 0) * (b(1, 1) * b(2, 2) - b(1, 2) * b(2, 1)) -
        b(0, 1) * (b(1, 0) * b(2, 2) - b(1, 2) * b(2, 0)) +
        b(0, 2) * (b(1, 0) * b(2, 1) - b(1, 1) * b(2, 0));
    double r = detb / 2.0;
    r = std::max(-1.0, std::min(1.0, r));
    const double phi = std::acos(r) / 3.0;
    const double e1 = q + 2.0 * p * std::cos(phi);
    const double e3 = q + 2.0 * p * std::cos(phi + 2.0 * M_PI / 3.0);
    const double e2 = 3.0 * q - e1 - e3;
    std::array<double, 3> e{e3, e2, e1};
    std::sort(e.begin(), e.end());
    return e;
}

/// Spectral norm of a symmetric matrix.
inline double symmetric_norm2(const Mat3& a) {
    auto e = symmetric_eigenvalues(a);
    return std::max(std::abs(e[0]), std::abs(e[2]));
}

/// FNV-1a 64-bit hash, used for artifact fingerprints.
inline uint64_t fnv1a64(const void* data, size_t n, uint64_t h = 1469598103934665603ull) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace rns
