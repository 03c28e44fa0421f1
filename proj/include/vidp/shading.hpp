#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vidp/field.hpp"

namespace vidp {

// Normals and light vectors live in the screen frame of the rendered image:
// +x to the right, +y downwards (toward the bottom of the plot), +z toward the
// viewer. Field rows run the other way (row index grows with data y, i.e.
// upward on screen), which exaggerated_normal accounts for.

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const;
    bool operator==(const Vec3&) const = default;
};

class NormalField {
public:
    NormalField() = default;
    NormalField(int width, int height, Vec3 fill = {0.0, 0.0, 1.0});

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t size() const { return normals_.size(); }

    Vec3& operator()(int i, int j) { return normals_[index(i, j)]; }
    const Vec3& operator()(int i, int j) const { return normals_[index(i, j)]; }
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(j) * static_cast<std::size_t>(width_) +
               static_cast<std::size_t>(i);
    }
    std::span<Vec3> normals() { return normals_; }
    std::span<const Vec3> normals() const { return normals_; }

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<Vec3> normals_;
};

// Height-exaggeration factor: one global value, or a per-pixel map used by
// local brushing. Every value is strictly positive.
class EtaField {
public:
    static constexpr double kDefault = 5.0;

    EtaField(double uniform = kDefault);  // NOLINT(google-explicit-constructor)
    EtaField(int width, int height, std::vector<double> values);

    bool is_uniform() const { return values_.empty(); }
    double uniform_value() const { return uniform_; }
    int width() const { return width_; }
    int height() const { return height_; }
    double at(std::size_t pixel) const { return values_.empty() ? uniform_ : values_[pixel]; }
    std::span<const double> values() const { return values_; }

    // Expands a uniform field to an explicit map of the given size.
    EtaField expanded(int width, int height) const;
    // Content hash for render-stage caching; equal fields hash equally.
    std::uint64_t hash() const;

    bool operator==(const EtaField& other) const;

private:
    double uniform_ = kDefault;
    int width_ = 0;
    int height_ = 0;
    std::vector<double> values_;
};

// Directional light given by azimuth (degrees, counterclockwise from +x as
// seen on screen, so 90 points to the top of the plot) and elevation above
// the image plane (degrees). `direction` points from the surface to the light.
class LightConfig {
public:
    LightConfig(double azimuth_deg, double elevation_deg);

    // Keeps the azimuth of the planar vector d and imposes the elevation:
    // L = (d.x cos e, d.y cos e, sin e) with d normalized.
    static LightConfig from_planar(Vec2 d, double elevation_deg);

    double azimuth() const { return azimuth_; }
    double elevation() const { return elevation_; }
    const Vec3& direction() const { return direction_; }

    bool operator==(const LightConfig&) const = default;

private:
    LightConfig(double azimuth_deg, double elevation_deg, Vec3 direction);

    double azimuth_;
    double elevation_;
    Vec3 direction_;
};

struct LightStats {
    Vec2 mean;
    Vec2 v1;
    Vec2 v2;
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    std::size_t nonempty_count = 0;
};

inline constexpr double kAutoElevation = 60.0;
inline constexpr double kFallbackAzimuth = 120.0;

struct GradientField {
    ScalarField gx;
    ScalarField gy;
};

// Central differences in grid-cell units (one-sided on the border). gy is the
// derivative along increasing row index, i.e. increasing data y.
GradientField gradient(const ScalarField& f);

// Unit normals of the height field scaled by eta, per pixel:
// n = (-eta gx, -eta gy_screen, 1) / |.|, with gy_screen = -gy.
NormalField exaggerated_normal(const ScalarField& gx, const ScalarField& gy, const EtaField& eta);
NormalField exaggerated_normal(const GradientField& g, const EtaField& eta);

// PCA of the planar components of every normal that is not [0,0,1]. With a
// mask, only pixels where mask[k] is true contribute.
LightStats light_stats(const NormalField& normals, const std::vector<bool>* mask = nullptr);

// Light along the dominant normal direction, always from the top of the plot
// at 60 degrees elevation; falls back to azimuth 120 when the statistics give
// no usable direction.
LightConfig auto_light(const LightStats& stats);

// Raw N . L per pixel. Deliberately unclamped.
ScalarField lambert_shade(const NormalField& normals, const LightConfig& light,
                          const GridTransform& transform);

struct PhongCoefficients {
    double ambient = 0.1;
    double diffuse = 0.6;
    double specular = 0.3;
    double shininess = 8.0;
};

// Ambient + diffuse + specular with a viewer along +z; clamped to [0, 1].
ScalarField phong_shade(const NormalField& normals, const LightConfig& light,
                        const GridTransform& transform, const PhongCoefficients& k = {});

// Scalar Phong evaluation for one normal.
double phong_intensity(const Vec3& n, const Vec3& l, const PhongCoefficients& k = {});

}  // namespace vidp
