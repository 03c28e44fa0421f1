#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vidp/color.hpp"
#include "vidp/density.hpp"
#include "vidp/shading.hpp"

namespace vidp {

enum class Technique { vidp, cdp, idp };

std::string to_string(Technique t);
Technique technique_from_string(const std::string& s);
std::string to_string(Background b);
Background background_from_string(const std::string& s);

// Everything that controls a render. Defaults are the reference
// configuration: 900x600, eta 5, phi -25, Silverman / one-cell bandwidths,
// automatic light, magma on a light background.
struct RenderParams {
    Technique technique = Technique::vidp;
    int width = 900;
    int height = 600;
    std::optional<double> h_large;
    std::optional<double> h_small;
    EtaField eta = EtaField(EtaField::kDefault);
    double phi = -25.0;
    std::optional<LightConfig> light;  // nullopt = automatic
    std::string colormap = "magma";
    Background background = Background::light;
    double padding_fraction = 0.05;
    // Fixes I_min in the intensity rescale instead of taking the field
    // minimum; used to keep edits local while brushing.
    std::optional<double> intensity_floor;
    // Light statistics from unexaggerated (eta = 1) normals instead of the
    // shaded field.
    bool light_from_unexaggerated = false;
    LightConfig baseline_light = LightConfig(120.0, 45.0);
    PhongCoefficients phong{};

    // Throws InvalidParams on out-of-range values.
    void validate() const;
};

// Intermediate products of one render, for probing and diagnostics.
struct RenderResult {
    RgbImage image;
    RgbImage base;           // colormapped F_large
    ScalarField density;     // F_large
    ScalarField intensity;   // shading intensity I (empty for CDP)
    ScalarField scaled;      // I' (VIDP only)
    LightConfig light = LightConfig(kFallbackAzimuth, kAutoElevation);
    double i_empty = 0.0;
    double i_min = 0.0;
    std::uint64_t eta_hash = 0;
};

// Density stage products that do not depend on eta, phi, light or colours.
struct DensityStage {
    GridTransform grid;
    double h_large = 0.0;
    double h_small = 0.0;
    ScalarField counts;
    ScalarField f_large;
    ScalarField f_small;
    ScalarField structure;   // F_DoG as shading heights
    GradientField structure_gradient;
    GradientField density_gradient;  // of F_large heights, for the IDP baseline
};

// Heights for shading are density in plot-normalized units (x extent = 1),
// which keeps slopes independent of the data's units.
double height_scale(const GridTransform& grid);

DensityStage compute_density_stage(const PointSet& points, const RenderParams& params);

// Renderer bound to one dataset that memoizes the density stage (keyed by
// grid and bandwidths) and the normal field (keyed additionally by the eta
// field), so eta/phi/light/colour edits skip the KDE. Results are identical to
// a cold render with the same parameters. Not thread-safe; callers serialize.
class StagedRenderer {
public:
    explicit StagedRenderer(std::shared_ptr<const PointSet> points);

    RenderResult render(const RenderParams& params);
    // Light that `render` would pick for these params, optionally restricted
    // to masked pixels (row-major, field layout).
    LightConfig auto_light_for(const RenderParams& params, const std::vector<bool>* mask = nullptr);
    const DensityStage& density(const RenderParams& params);

    const PointSet& points() const { return *points_; }
    int density_computations() const { return density_computations_; }

private:
    struct DensityKey {
        int width, height;
        double padding;
        std::optional<double> h_large, h_small;
        bool operator==(const DensityKey&) const = default;
    };
    const NormalField& structure_normals(const RenderParams& params, const DensityStage& stage);

    std::shared_ptr<const PointSet> points_;
    std::optional<DensityKey> density_key_;
    std::optional<DensityStage> density_;
    std::optional<std::uint64_t> normals_key_;
    std::optional<EtaField> normals_eta_;
    NormalField normals_;
    int density_computations_ = 0;
};

RenderResult render_detailed(const PointSet& points, const RenderParams& params);
RgbImage render(const PointSet& points, const RenderParams& params);

struct SyntheticSpec {
    int cluster_count = 4;
    int points_per_cluster = 25000;
    double outlier_fraction = 0.001;
    std::uint64_t seed = 1;
    double mean_min = 0.0;
    double mean_max = 1.0;
    double sd_min = 0.02;
    double sd_max = 0.08;
};

struct SyntheticCluster {
    Point mean;
    double sd_x = 0.0;
    double sd_y = 0.0;
};

struct SyntheticDataset {
    PointSet points;
    std::vector<SyntheticCluster> clusters;
    std::size_t outlier_count = 0;
};

// Mixture of isotropic-per-axis Gaussian clusters plus uniform outliers over
// the clusters' bounding box; fully determined by the seed.
SyntheticDataset generate_synthetic_dataset(const SyntheticSpec& spec);
PointSet generate_synthetic(const SyntheticSpec& spec);

// Brush region in pixel coordinates of the field grid (x = column, y = row,
// both continuous, pixel centres at integers).
struct BrushRegion {
    enum class Kind { rect, polygon } kind = Kind::rect;
    double x0 = 0, y0 = 0, x1 = 0, y1 = 0;   // rect corners (inclusive), x0 <= x1, y0 <= y1
    std::vector<Vec2> polygon;                // polygon vertices

    static BrushRegion rect(double x0, double y0, double x1, double y1);
    static BrushRegion poly(std::vector<Vec2> vertices);
    bool empty() const;
};

// Per-pixel brush weight in [0, 1]: 1 inside, Gaussian falloff with sigma
// `feather` outside, exactly 0 beyond 3 feather widths.
std::vector<double> brush_weights(const BrushRegion& region, int width, int height, double feather);

// eta' = base + (eta_local - base) * w per pixel.
EtaField local_eta_apply(const EtaField& base, const BrushRegion& region, double eta_local,
                         double feather, int width, int height);

}  // namespace vidp
