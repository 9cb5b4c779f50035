#include <cmath>
#include <map>
#include <stdexcept>

#include "stems/oracle.hpp"

namespace stems::oracle {

namespace {

Mat3 identity() { return {1, 0, 0, 0, 1, 0, 0, 0, 1}; }

Mat3 mul(const Mat3& a, const Mat3& b) {
    Mat3 c{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double v = 0;
            for (int k = 0; k < 3; ++k) v += a[3 * i + k] * b[3 * k + j];
            c[3 * i + j] = v;
        }
    return c;
}

double trace(const Mat3& m) { return m[0] + m[4] + m[8]; }

// Rotation about the (not necessarily unit) axis by the given angle,
// via the Rodrigues formula.
Mat3 rotation(double ax, double ay, double az, double angle) {
    double n = std::sqrt(ax * ax + ay * ay + az * az);
    double x = ax / n, y = ay / n, z = az / n;
    double c = std::cos(angle), s = std::sin(angle), t = 1 - c;
    return {t * x * x + c,     t * x * y - s * z, t * x * z + s * y,
            t * x * y + s * z, t * y * y + c,     t * y * z - s * x,
            t * x * z - s * y, t * y * z + s * x, t * z * z + c};
}

using MatKey = std::array<long long, 9>;

MatKey key_of(const Mat3& m) {
    MatKey k;
    for (int i = 0; i < 9; ++i) k[i] = std::llround(m[i] * 1e7);
    return k;
}

std::vector<Mat3> closure(const std::vector<Mat3>& generators, std::size_t expected) {
    std::map<MatKey, Mat3> seen;
    std::vector<Mat3> queue{identity()};
    seen.emplace(key_of(identity()), identity());
    while (!queue.empty()) {
        Mat3 m = queue.back();
        queue.pop_back();
        for (const auto& g : generators) {
            Mat3 p = mul(m, g);
            if (seen.emplace(key_of(p), p).second) queue.push_back(p);
        }
        if (seen.size() > 2 * expected)
            throw std::logic_error("rotation group closure exceeded expected order");
    }
    if (seen.size() != expected)
        throw std::logic_error("rotation group closure has wrong order");
    std::vector<Mat3> out;
    out.reserve(seen.size());
    for (const auto& [k, m] : seen) {
        (void)k;
        out.push_back(m);
    }
    return out;
}

const double kPi = std::acos(-1.0);

std::vector<Mat3> enumerate(RotationGroup g) {
    switch (g) {
        case RotationGroup::KleinD4:
            return closure({rotation(0, 0, 1, kPi), rotation(1, 0, 0, kPi)}, 4);
        case RotationGroup::D8:
            return closure({rotation(0, 0, 1, kPi / 2), rotation(1, 0, 0, kPi)}, 8);
        case RotationGroup::A4:
            return closure({rotation(1, 0, 0, kPi), rotation(1, 1, 1, 2 * kPi / 3)}, 12);
        case RotationGroup::S4:
            return closure({rotation(0, 0, 1, kPi / 2), rotation(1, 1, 1, 2 * kPi / 3)}, 24);
        case RotationGroup::A5: {
            // Icosahedron with vertices at the cyclic permutations of
            // (0, +-1, +-phi): the z-axis passes through an edge midpoint
            // (half-turn) and (0, 1, phi) through a vertex (fifth-turn).
            double phi = (1 + std::sqrt(5.0)) / 2;
            return closure({rotation(0, 0, 1, kPi), rotation(0, 1, phi, 2 * kPi / 5)}, 60);
        }
    }
    throw std::logic_error("enumerate: bad rotation group");
}

// Character of W(2i+1) at g through symmetric-power traces: the degree-d
// homogeneous polynomials carry Sym^d of the standard action, whose trace
// is the complete homogeneous function h_d of the eigenvalues (Newton's
// recurrence from the power traces). Harmonics of degree i are the
// difference of consecutive symmetric powers.
double harmonic_char(const Mat3& g, int i) {
    std::vector<double> p(i + 1, 0.0), h(i + 1, 0.0);
    Mat3 pw = g;
    for (int k = 1; k <= i; ++k) {
        p[k] = trace(pw);
        pw = mul(pw, g);
    }
    h[0] = 1;
    for (int m = 1; m <= i; ++m) {
        double acc = 0;
        for (int k = 1; k <= m; ++k) acc += p[k] * h[m - k];
        h[m] = acc / m;
    }
    return h[i] - (i >= 2 ? h[i - 2] : 0.0);
}

} // namespace

const std::vector<Mat3>& rotation_group_elements(RotationGroup g) {
    static std::map<RotationGroup, std::vector<Mat3>> cache;
    auto it = cache.find(g);
    if (it == cache.end()) it = cache.emplace(g, enumerate(g)).first;
    return it->second;
}

long long oracle_char_matrix(RotationGroup g, int i) {
    if (i < 0) throw std::invalid_argument("oracle_char_matrix: index must be >= 0");
    const auto& elements = rotation_group_elements(g);
    double total = 0;
    for (const auto& m : elements) total += harmonic_char(m, i);
    double avg = total / static_cast<double>(elements.size());
    double rounded = std::round(avg);
    if (std::abs(avg - rounded) > 1e-6)
        throw std::logic_error("oracle_char_matrix: average is not close to an integer");
    return static_cast<long long>(rounded);
}

} // namespace stems::oracle
