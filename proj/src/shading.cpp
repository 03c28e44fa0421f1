#include "vidp/shading.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "parallel.hpp"
#include "vidp/errors.hpp"

namespace vidp {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;
constexpr double kEmptyTolerance = 1e-9;

double normalize_azimuth(double deg) {
    double a = std::fmod(deg, 360.0);
    if (a < 0.0) a += 360.0;
    if (a >= 360.0) a = 0.0;
    return a;
}

void check_elevation(double elevation_deg) {
    if (!(elevation_deg > 0.0 && elevation_deg <= 90.0)) {
        throw InvalidParams("light elevation must lie in (0, 90] degrees, got " +
                            std::to_string(elevation_deg));
    }
}

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t word) {
    for (int b = 0; b < 8; ++b) {
        h ^= (word >> (8 * b)) & 0xffu;
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace

double Vec3::norm() const { return std::sqrt(x * x + y * y + z * z); }

NormalField::NormalField(int width, int height, Vec3 fill)
    : width_(width),
      height_(height),
      normals_(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill) {}

EtaField::EtaField(double uniform) : uniform_(uniform) {
    if (!(uniform > 0.0) || !std::isfinite(uniform)) {
        throw InvalidParams("eta must be a positive finite number");
    }
}

EtaField::EtaField(int width, int height, std::vector<double> values)
    : uniform_(values.empty() ? kDefault : values.front()),
      width_(width),
      height_(height),
      values_(std::move(values)) {
    if (values_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
        throw DimensionMismatch("eta map size does not match its dimensions");
    }
    for (double v : values_) {
        if (!(v > 0.0) || !std::isfinite(v)) throw InvalidParams("every eta value must be > 0");
    }
}

EtaField EtaField::expanded(int width, int height) const {
    if (!is_uniform()) {
        if (width != width_ || height != height_) {
            throw DimensionMismatch("eta map does not match requested dimensions");
        }
        return *this;
    }
    return EtaField(width, height,
                    std::vector<double>(static_cast<std::size_t>(width) *
                                            static_cast<std::size_t>(height),
                                        uniform_));
}

std::uint64_t EtaField::hash() const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    if (is_uniform()) return fnv1a(h, std::bit_cast<std::uint64_t>(uniform_));
    h = fnv1a(h, static_cast<std::uint64_t>(width_));
    h = fnv1a(h, static_cast<std::uint64_t>(height_));
    for (double v : values_) h = fnv1a(h, std::bit_cast<std::uint64_t>(v));
    return h;
}

bool EtaField::operator==(const EtaField& other) const {
    if (is_uniform() != other.is_uniform()) return false;
    if (is_uniform()) return uniform_ == other.uniform_;
    return width_ == other.width_ && height_ == other.height_ && values_ == other.values_;
}

LightConfig::LightConfig(double azimuth_deg, double elevation_deg)
    : azimuth_(normalize_azimuth(azimuth_deg)), elevation_(elevation_deg) {
    if (!std::isfinite(azimuth_deg)) throw InvalidParams("light azimuth must be finite");
    check_elevation(elevation_deg);
    const double az = azimuth_ * kDegToRad;
    const double el = elevation_ * kDegToRad;
    direction_ = {std::cos(az) * std::cos(el), -std::sin(az) * std::cos(el), std::sin(el)};
}

LightConfig::LightConfig(double azimuth_deg, double elevation_deg, Vec3 direction)
    : azimuth_(azimuth_deg), elevation_(elevation_deg), direction_(direction) {}

LightConfig LightConfig::from_planar(Vec2 d, double elevation_deg) {
    check_elevation(elevation_deg);
    const double len = std::hypot(d.x, d.y);
    if (!(len > 0.0)) throw InvalidParams("planar light direction has zero length");
    const double ux = d.x / len;
    const double uy = d.y / len;
    const double el = elevation_deg * kDegToRad;
    const double az = normalize_azimuth(std::atan2(-uy, ux) / kDegToRad);
    return {az, elevation_deg, Vec3{ux * std::cos(el), uy * std::cos(el), std::sin(el)}};
}

GradientField gradient(const ScalarField& f) {
    const int w = f.width();
    const int h = f.height();
    if (w < 3 || h < 3) throw InvalidParams("gradient needs at least a 3x3 field");
    GradientField g{ScalarField(f.transform()), ScalarField(f.transform())};
    detail::parallel_ranges(h, [&](int j_begin, int j_end) {
        for (int j = j_begin; j < j_end; ++j) {
            for (int i = 0; i < w; ++i) {
                if (i == 0) {
                    g.gx(i, j) = f(1, j) - f(0, j);
                } else if (i == w - 1) {
                    g.gx(i, j) = f(w - 1, j) - f(w - 2, j);
                } else {
                    g.gx(i, j) = 0.5 * (f(i + 1, j) - f(i - 1, j));
                }
                if (j == 0) {
                    g.gy(i, j) = f(i, 1) - f(i, 0);
                } else if (j == h - 1) {
                    g.gy(i, j) = f(i, h - 1) - f(i, h - 2);
                } else {
                    g.gy(i, j) = 0.5 * (f(i, j + 1) - f(i, j - 1));
                }
            }
        }
    });
    return g;
}

NormalField exaggerated_normal(const ScalarField& gx, const ScalarField& gy, const EtaField& eta) {
    require_same_shape(gx, gy, "exaggerated_normal");
    const int w = gx.width();
    const int h = gx.height();
    if (!eta.is_uniform() && (eta.width() != w || eta.height() != h)) {
        throw DimensionMismatch("exaggerated_normal: eta map does not match gradient size");
    }
    NormalField out(w, h);
    auto dst = out.normals();
    auto ax = gx.values();
    auto ay = gy.values();
    detail::parallel_ranges(h, [&](int j_begin, int j_end) {
        const std::size_t begin = static_cast<std::size_t>(j_begin) * static_cast<std::size_t>(w);
        const std::size_t end = static_cast<std::size_t>(j_end) * static_cast<std::size_t>(w);
        for (std::size_t k = begin; k < end; ++k) {
            const double e = eta.at(k);
            const double px = -e * ax[k];
            const double py = e * ay[k];  // screen y runs against row index
            const double inv = 1.0 / std::sqrt(px * px + py * py + 1.0);
            dst[k] = {px * inv, py * inv, inv};
        }
    });
    return out;
}

NormalField exaggerated_normal(const GradientField& g, const EtaField& eta) {
    return exaggerated_normal(g.gx, g.gy, eta);
}

LightStats light_stats(const NormalField& normals, const std::vector<bool>* mask) {
    if (mask && mask->size() != normals.size()) {
        throw DimensionMismatch("light_stats: mask size does not match normal field");
    }
    LightStats s;
    const auto ns = normals.normals();
    double sx = 0.0, sy = 0.0;
    std::size_t count = 0;
    for (std::size_t k = 0; k < ns.size(); ++k) {
        if (mask && !(*mask)[k]) continue;
        if (std::abs(ns[k].x) <= kEmptyTolerance && std::abs(ns[k].y) <= kEmptyTolerance) continue;
        sx += ns[k].x;
        sy += ns[k].y;
        ++count;
    }
    if (count == 0) return s;

    const double inv_n = 1.0 / static_cast<double>(count);
    s.mean = {sx * inv_n, sy * inv_n};
    double cxx = 0.0, cxy = 0.0, cyy = 0.0;
    for (std::size_t k = 0; k < ns.size(); ++k) {
        if (mask && !(*mask)[k]) continue;
        if (std::abs(ns[k].x) <= kEmptyTolerance && std::abs(ns[k].y) <= kEmptyTolerance) continue;
        const double dx = ns[k].x - s.mean.x;
        const double dy = ns[k].y - s.mean.y;
        cxx += dx * dx;
        cxy += dx * dy;
        cyy += dy * dy;
    }
    cxx *= inv_n;
    cxy *= inv_n;
    cyy *= inv_n;

    // Closed-form eigendecomposition of the symmetric 2x2 covariance.
    const double half_trace = 0.5 * (cxx + cyy);
    const double disc = std::hypot(0.5 * (cxx - cyy), cxy);
    s.lambda1 = half_trace + disc;
    s.lambda2 = std::max(0.0, half_trace - disc);
    Vec2 a{s.lambda1 - cyy, cxy};
    Vec2 b{cxy, s.lambda1 - cxx};
    Vec2 v = std::hypot(a.x, a.y) >= std::hypot(b.x, b.y) ? a : b;
    const double len = std::hypot(v.x, v.y);
    if (len > 1e-300) {
        v = {v.x / len, v.y / len};
    } else {
        v = {1.0, 0.0};  // isotropic: any direction is principal
    }
    s.v1 = v;
    s.v2 = {-v.y, v.x};
    s.nonempty_count = count;
    return s;
}

LightConfig auto_light(const LightStats& stats) {
    const LightConfig fallback(kFallbackAzimuth, kAutoElevation);
    if (stats.nonempty_count == 0) return fallback;
    const double r = std::sqrt(std::max(0.0, stats.lambda1));
    const double sign = stats.v1.y < 0.0 ? 1.0 : -1.0;
    const Vec2 d{stats.mean.x + sign * r * stats.v1.x, stats.mean.y + sign * r * stats.v1.y};
    if (std::hypot(d.x, d.y) < 1e-12 || d.y >= 0.0) return fallback;
    return LightConfig::from_planar(d, kAutoElevation);
}

ScalarField lambert_shade(const NormalField& normals, const LightConfig& light,
                          const GridTransform& transform) {
    if (normals.width() != transform.width() ||
        normals.height() != transform.height()) {
        throw DimensionMismatch("lambert_shade: normals do not match the grid");
    }
    ScalarField out(transform);
    auto dst = out.values();
    const auto ns = normals.normals();
    const Vec3& l = light.direction();
    for (std::size_t k = 0; k < ns.size(); ++k) dst[k] = ns[k].dot(l);
    return out;
}

double phong_intensity(const Vec3& n, const Vec3& l, const PhongCoefficients& k) {
    const double ndotl = n.dot(l);
    // Reflection of L about N, viewed along +z.
    const double r_z = 2.0 * ndotl * n.z - l.z;
    const double spec = r_z > 0.0 ? std::pow(r_z, k.shininess) : 0.0;
    const double i = k.ambient + k.diffuse * std::max(ndotl, 0.0) + k.specular * spec;
    return std::clamp(i, 0.0, 1.0);
}

ScalarField phong_shade(const NormalField& normals, const LightConfig& light,
                        const GridTransform& transform, const PhongCoefficients& k) {
    if (normals.width() != transform.width() || normals.height() != transform.height()) {
        throw DimensionMismatch("phong_shade: normals do not match the grid");
    }
    ScalarField out(transform);
    auto dst = out.values();
    const auto ns = normals.normals();
    for (std::size_t p = 0; p < ns.size(); ++p) {
        dst[p] = phong_intensity(ns[p], light.direction(), k);
    }
    return out;
}

}  // namespace vidp
