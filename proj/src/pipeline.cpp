#include "vidp/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <utility>

#include "vidp/errors.hpp"

namespace vidp {

std::string to_string(Technique t) {
    switch (t) {
        case Technique::vidp: return "vidp";
        case Technique::cdp: return "cdp";
        case Technique::idp: return "idp";
    }
    return "vidp";
}

Technique technique_from_string(const std::string& s) {
    if (s == "vidp" || s == "VIDP") return Technique::vidp;
    if (s == "cdp" || s == "CDP") return Technique::cdp;
    if (s == "idp" || s == "IDP") return Technique::idp;
    throw InvalidParams("unknown technique '" + s + "' (expected vidp, cdp or idp)");
}

std::string to_string(Background b) { return b == Background::light ? "light" : "dark"; }

Background background_from_string(const std::string& s) {
    if (s == "light") return Background::light;
    if (s == "dark") return Background::dark;
    throw InvalidParams("unknown background '" + s + "' (expected light or dark)");
}

void RenderParams::validate() const {
    if (width < 3 || height < 3 || width > 16384 || height > 16384) {
        throw InvalidParams("grid size must be between 3 and 16384 on each axis");
    }
    if (h_large && !(*h_large > 0.0)) throw InvalidParams("h_large must be positive");
    if (h_small && !(*h_small > 0.0)) throw InvalidParams("h_small must be positive");
    if (!std::isfinite(phi)) throw InvalidParams("phi must be finite");
    if (!(padding_fraction >= 0.0 && padding_fraction < 1.0)) {
        throw InvalidParams("padding fraction must lie in [0, 1)");
    }
    if (!eta.is_uniform() && (eta.width() != width || eta.height() != height)) {
        throw InvalidParams("per-pixel eta map does not match the grid size");
    }
    if (intensity_floor && !std::isfinite(*intensity_floor)) {
        throw InvalidParams("intensity floor must be finite");
    }
}

double height_scale(const GridTransform& grid) {
    const double extent = grid.bounds().width();
    return extent * extent;
}

DensityStage compute_density_stage(const PointSet& points, const RenderParams& params) {
    params.validate();
    DensityStage s;
    s.grid = GridTransform(points.bounds().padded(params.padding_fraction), params.width,
                           params.height);
    s.h_large = params.h_large ? *params.h_large : silverman_bandwidth(points);
    s.h_small = params.h_small ? *params.h_small : small_bandwidth(params.width, s.grid.bounds());
    const BandwidthPair pair(s.h_large, s.h_small);

    s.counts = linear_bin(points, s.grid);
    const ScalarField fine = linear_bin(points, oversampled(s.grid, kBinningOversample));
    s.f_large = kde_from_oversampled_counts(fine, s.grid, points.size(), pair.large());
    s.f_small = kde_from_oversampled_counts(fine, s.grid, points.size(), pair.small());

    const double scale = height_scale(s.grid);
    s.structure = dog(s.f_large, s.f_small);
    for (double& v : s.structure.values()) v *= scale;
    s.structure_gradient = gradient(s.structure);

    ScalarField heights(s.grid);
    auto src = s.f_large.values();
    auto dst = heights.values();
    for (std::size_t k = 0; k < src.size(); ++k) dst[k] = src[k] * scale;
    s.density_gradient = gradient(heights);
    return s;
}

StagedRenderer::StagedRenderer(std::shared_ptr<const PointSet> points) : points_(std::move(points)) {
    if (!points_) throw InvalidParams("renderer needs a dataset");
}

const DensityStage& StagedRenderer::density(const RenderParams& params) {
    const DensityKey key{params.width, params.height, params.padding_fraction, params.h_large,
                         params.h_small};
    if (!density_ || !density_key_ || !(*density_key_ == key)) {
        density_.reset();
        normals_key_.reset();
        normals_eta_.reset();
        density_ = compute_density_stage(*points_, params);
        density_key_ = key;
        ++density_computations_;
    }
    return *density_;
}

const NormalField& StagedRenderer::structure_normals(const RenderParams& params,
                                                     const DensityStage& stage) {
    const std::uint64_t key = params.eta.hash();
    if (!normals_key_ || *normals_key_ != key || !normals_eta_ || !(*normals_eta_ == params.eta)) {
        normals_ = exaggerated_normal(stage.structure_gradient, params.eta);
        normals_key_ = key;
        normals_eta_ = params.eta;
    }
    return normals_;
}

LightConfig StagedRenderer::auto_light_for(const RenderParams& params, const std::vector<bool>* mask) {
    const DensityStage& stage = density(params);
    if (params.light_from_unexaggerated) {
        return auto_light(light_stats(exaggerated_normal(stage.structure_gradient, EtaField(1.0)), mask));
    }
    return auto_light(light_stats(structure_normals(params, stage), mask));
}

RenderResult StagedRenderer::render(const RenderParams& params) {
    params.validate();
    const Colormap cmap = Colormap::resolve(params.colormap).oriented_for(params.background);
    const DensityStage& stage = density(params);

    RenderResult r;
    r.density = stage.f_large;
    r.base = apply_colormap(stage.f_large, cmap);
    r.eta_hash = params.eta.hash();

    switch (params.technique) {
        case Technique::cdp:
            r.image = r.base;
            break;
        case Technique::idp: {
            const NormalField normals = exaggerated_normal(stage.density_gradient, EtaField(1.0));
            r.light = params.baseline_light;
            r.intensity = phong_shade(normals, r.light, stage.grid, params.phong);
            r.image = compose_multiply(r.base, r.intensity);
            break;
        }
        case Technique::vidp: {
            r.light = params.light ? *params.light : auto_light_for(params);
            const NormalField& normals = structure_normals(params, stage);
            r.intensity = lambert_shade(normals, r.light, stage.grid);
            r.i_empty = r.light.direction().z;
            r.i_min = params.intensity_floor ? *params.intensity_floor : r.intensity.min();
            const double phi = params.background == Background::dark ? -params.phi : params.phi;
            if (r.i_empty - r.i_min > 1e-12) {
                r.scaled = scale_intensity(r.intensity, ComposeParams{phi, r.i_empty, r.i_min});
            } else {
                // Flat field: nothing to shade.
                r.scaled = ScalarField(stage.grid, 0.0);
            }
            r.image = compose_luminance(r.base, r.scaled);
            break;
        }
    }
    return r;
}

RenderResult render_detailed(const PointSet& points, const RenderParams& params) {
    StagedRenderer renderer(std::make_shared<const PointSet>(points));
    return renderer.render(params);
}

RgbImage render(const PointSet& points, const RenderParams& params) {
    return render_detailed(points, params).image;
}

SyntheticDataset generate_synthetic_dataset(const SyntheticSpec& spec) {
    if (spec.points_per_cluster < 1) throw InvalidParams("points per cluster must be >= 1");
    if (spec.cluster_count < 1) throw InvalidParams("cluster count must be >= 1");
    if (!(spec.outlier_fraction >= 0.0)) throw InvalidParams("outlier fraction must be >= 0");
    if (!(spec.mean_max > spec.mean_min) || !(spec.sd_max >= spec.sd_min) || !(spec.sd_min > 0.0)) {
        throw InvalidParams("invalid synthetic sampling ranges");
    }

    std::mt19937_64 rng(spec.seed);
    const double side = spec.mean_max - spec.mean_min;
    std::uniform_real_distribution<double> mean_dist(spec.mean_min, spec.mean_max);
    std::uniform_real_distribution<double> sd_dist(spec.sd_min * side, spec.sd_max * side);

    SyntheticDataset out{PointSet({{0.0, 0.0}, {1.0, 1.0}}), {}, 0};
    for (int c = 0; c < spec.cluster_count; ++c) {
        SyntheticCluster cl;
        cl.mean.x = mean_dist(rng);
        cl.mean.y = mean_dist(rng);
        cl.sd_x = sd_dist(rng);
        cl.sd_y = sd_dist(rng);
        out.clusters.push_back(cl);
    }

    const std::size_t cluster_points =
        static_cast<std::size_t>(spec.cluster_count) * static_cast<std::size_t>(spec.points_per_cluster);
    out.outlier_count = static_cast<std::size_t>(
        std::llround(spec.outlier_fraction * static_cast<double>(cluster_points)));

    std::vector<Point> pts;
    pts.reserve(cluster_points + out.outlier_count);
    std::normal_distribution<double> unit(0.0, 1.0);
    for (const SyntheticCluster& cl : out.clusters) {
        for (int k = 0; k < spec.points_per_cluster; ++k) {
            const double x = cl.mean.x + cl.sd_x * unit(rng);
            const double y = cl.mean.y + cl.sd_y * unit(rng);
            pts.push_back({x, y});
        }
    }
    Bounds box{pts.front().x, pts.front().x, pts.front().y, pts.front().y};
    for (const Point& p : pts) {
        box.xmin = std::min(box.xmin, p.x);
        box.xmax = std::max(box.xmax, p.x);
        box.ymin = std::min(box.ymin, p.y);
        box.ymax = std::max(box.ymax, p.y);
    }
    std::uniform_real_distribution<double> ux(box.xmin, box.xmax);
    std::uniform_real_distribution<double> uy(box.ymin, box.ymax);
    for (std::size_t k = 0; k < out.outlier_count; ++k) {
        const double x = ux(rng);
        const double y = uy(rng);
        pts.push_back({x, y});
    }
    out.points = PointSet(std::move(pts));
    return out;
}

PointSet generate_synthetic(const SyntheticSpec& spec) {
    return generate_synthetic_dataset(spec).points;
}

BrushRegion BrushRegion::rect(double x0, double y0, double x1, double y1) {
    BrushRegion r;
    if (x1 < x0) std::swap(x0, x1);
    if (y1 < y0) std::swap(y0, y1);
    r.kind = Kind::rect;
    r.x0 = x0;
    r.y0 = y0;
    r.x1 = x1;
    r.y1 = y1;
    return r;
}

BrushRegion BrushRegion::poly(std::vector<Vec2> vertices) {
    BrushRegion r;
    r.kind = Kind::polygon;
    r.polygon = std::move(vertices);
    return r;
}

bool BrushRegion::empty() const {
    if (kind == Kind::rect) return x1 < x0 || y1 < y0;
    return polygon.size() < 3;
}

namespace {

bool point_in_polygon(const std::vector<Vec2>& poly, double x, double y) {
    bool inside = false;
    for (std::size_t a = 0, b = poly.size() - 1; a < poly.size(); b = a++) {
        const Vec2& p = poly[a];
        const Vec2& q = poly[b];
        if ((p.y > y) != (q.y > y)) {
            const double xc = p.x + (y - p.y) * (q.x - p.x) / (q.y - p.y);
            if (x < xc) inside = !inside;
        }
    }
    return inside;
}

double segment_distance(const Vec2& p, const Vec2& q, double x, double y) {
    const double dx = q.x - p.x;
    const double dy = q.y - p.y;
    const double len2 = dx * dx + dy * dy;
    double t = len2 > 0.0 ? ((x - p.x) * dx + (y - p.y) * dy) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return std::hypot(x - (p.x + t * dx), y - (p.y + t * dy));
}

// Distance from (x, y) to the region; 0 inside.
double region_distance(const BrushRegion& r, double x, double y) {
    if (r.kind == BrushRegion::Kind::rect) {
        const double dx = std::max({r.x0 - x, 0.0, x - r.x1});
        const double dy = std::max({r.y0 - y, 0.0, y - r.y1});
        return std::hypot(dx, dy);
    }
    if (point_in_polygon(r.polygon, x, y)) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0, b = r.polygon.size() - 1; a < r.polygon.size(); b = a++) {
        best = std::min(best, segment_distance(r.polygon[b], r.polygon[a], x, y));
    }
    return best;
}

void validate_region(const BrushRegion& r, int width, int height) {
    auto finite = [](double v) { return std::isfinite(v); };
    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    if (r.kind == BrushRegion::Kind::rect) {
        if (!finite(r.x0) || !finite(r.x1) || !finite(r.y0) || !finite(r.y1)) {
            throw InvalidRegion("brush rectangle has non-finite coordinates");
        }
        xmin = r.x0, xmax = r.x1, ymin = r.y0, ymax = r.y1;
    } else {
        xmin = ymin = std::numeric_limits<double>::infinity();
        xmax = ymax = -std::numeric_limits<double>::infinity();
        for (const Vec2& v : r.polygon) {
            if (!finite(v.x) || !finite(v.y)) throw InvalidRegion("brush polygon has non-finite vertices");
            xmin = std::min(xmin, v.x), xmax = std::max(xmax, v.x);
            ymin = std::min(ymin, v.y), ymax = std::max(ymax, v.y);
        }
    }
    if (xmax < -0.5 || ymax < -0.5 || xmin > width - 0.5 || ymin > height - 0.5) {
        throw InvalidRegion("brush region lies entirely outside the image");
    }
}

}  // namespace

std::vector<double> brush_weights(const BrushRegion& region, int width, int height, double feather) {
    if (width < 1 || height < 1) throw InvalidParams("brush grid must be non-empty");
    if (!(feather >= 0.0) || !std::isfinite(feather)) throw InvalidRegion("feather must be >= 0");
    std::vector<double> w(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 0.0);
    if (region.empty()) return w;
    validate_region(region, width, height);

    const double cutoff = 3.0 * feather;
    const double inv = feather > 0.0 ? 1.0 / (2.0 * feather * feather) : 0.0;
    bool any_inside = false;
    for (int j = 0; j < height; ++j) {
        for (int i = 0; i < width; ++i) {
            const double d = region_distance(region, i, j);
            double v = 0.0;
            if (d == 0.0) {
                v = 1.0;
                any_inside = true;
            } else if (feather > 0.0 && d <= cutoff) {
                v = std::exp(-d * d * inv);
            }
            w[static_cast<std::size_t>(j) * static_cast<std::size_t>(width) + static_cast<std::size_t>(i)] = v;
        }
    }
    // A region that covers no pixel centre is an empty mask.
    if (!any_inside) std::fill(w.begin(), w.end(), 0.0);
    return w;
}

EtaField local_eta_apply(const EtaField& base, const BrushRegion& region, double eta_local,
                         double feather, int width, int height) {
    if (!(eta_local > 0.0) || !std::isfinite(eta_local)) {
        throw InvalidParams("local eta must be a positive finite number");
    }
    const std::vector<double> w = brush_weights(region, width, height, feather);
    if (std::all_of(w.begin(), w.end(), [](double v) { return v == 0.0; })) return base;

    const EtaField full = base.expanded(width, height);
    std::vector<double> values(full.values().begin(), full.values().end());
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (w[k] == 1.0) {
            values[k] = eta_local;
        } else if (w[k] > 0.0) {
            values[k] = values[k] + (eta_local - values[k]) * w[k];
        }
    }
    return EtaField(width, height, std::move(values));
}

}  // namespace vidp
