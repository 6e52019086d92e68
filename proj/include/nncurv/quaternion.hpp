#pragma once

#include <cmath>

namespace nncurv {

// Quaternion w + xi + yj + zk over doubles. Real and complex scalars are the
// subalgebras with x=y=z=0 resp. y=z=0, so one scalar type serves all three
// ground fields.
struct Quat {
    double w = 0.0, x = 0.0, y = 0.0, z = 0.0;

    constexpr Quat() = default;
    constexpr Quat(double w_, double x_ = 0.0, double y_ = 0.0, double z_ = 0.0)
        : w(w_), x(x_), y(y_), z(z_) {}

    static constexpr Quat i() { return {0, 1, 0, 0}; }
    static constexpr Quat j() { return {0, 0, 1, 0}; }
    static constexpr Quat k() { return {0, 0, 0, 1}; }

    constexpr Quat operator+(const Quat& o) const { return {w + o.w, x + o.x, y + o.y, z + o.z}; }
    constexpr Quat operator-(const Quat& o) const { return {w - o.w, x - o.x, y - o.y, z - o.z}; }
    constexpr Quat operator-() const { return {-w, -x, -y, -z}; }

    // Hamilton product; noncommutative.
    constexpr Quat operator*(const Quat& o) const {
        return {w * o.w - x * o.x - y * o.y - z * o.z,
                w * o.x + x * o.w + y * o.z - z * o.y,
                w * o.y - x * o.z + y * o.w + z * o.x,
                w * o.z + x * o.y - y * o.x + z * o.w};
    }
    constexpr Quat operator*(double s) const { return {w * s, x * s, y * s, z * s}; }
    friend constexpr Quat operator*(double s, const Quat& q) { return q * s; }

    Quat& operator+=(const Quat& o) { w += o.w; x += o.x; y += o.y; z += o.z; return *this; }
    Quat& operator-=(const Quat& o) { w -= o.w; x -= o.x; y -= o.y; z -= o.z; return *this; }

    constexpr Quat conj() const { return {w, -x, -y, -z}; }
    constexpr double normSq() const { return w * w + x * x + y * y + z * z; }
    double norm() const { return std::sqrt(normSq()); }

    // Euclidean dot of components; equals Re(conj(a) * b).
    constexpr double dot(const Quat& o) const { return w * o.w + x * o.x + y * o.y + z * o.z; }

    constexpr bool operator==(const Quat& o) const = default;
};

}  // namespace nncurv
