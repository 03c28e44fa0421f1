#include "vidp/density.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "parallel.hpp"
#include "vidp/errors.hpp"

namespace vidp {

namespace {

Bounds tight_bounds(std::span<const Point> points) {
    Bounds b{points.front().x, points.front().x, points.front().y, points.front().y};
    for (const Point& p : points) {
        b.xmin = std::min(b.xmin, p.x);
        b.xmax = std::max(b.xmax, p.x);
        b.ymin = std::min(b.ymin, p.y);
        b.ymax = std::max(b.ymax, p.y);
    }
    return b;
}

double sample_stddev(std::span<const Point> points, double Point::*axis) {
    const double n = static_cast<double>(points.size());
    double mean = 0.0;
    for (const Point& p : points) mean += p.*axis;
    mean /= n;
    double ss = 0.0;
    for (const Point& p : points) {
        const double d = p.*axis - mean;
        ss += d * d;
    }
    return std::sqrt(ss / (n - 1.0));
}

std::vector<double> gaussian_taps(double sigma_cells, double truncation) {
    const int radius = static_cast<int>(std::ceil(truncation * sigma_cells));
    std::vector<double> taps(static_cast<std::size_t>(2 * radius + 1));
    const double inv = 1.0 / (2.0 * sigma_cells * sigma_cells);
    for (int k = -radius; k <= radius; ++k) {
        taps[static_cast<std::size_t>(k + radius)] = std::exp(-k * k * inv);
    }
    return taps;
}

}  // namespace

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
    if (points_.empty()) throw EmptyDataset("point set is empty");
    bounds_ = tight_bounds(points_);
    if (!(bounds_.width() > 0.0) || !(bounds_.height() > 0.0)) {
        throw DegenerateData("point set has zero extent on at least one axis");
    }
}

PointSet::PointSet(std::vector<Point> points, Bounds bounds)
    : points_(std::move(points)), bounds_(bounds) {
    if (points_.empty()) throw EmptyDataset("point set is empty");
    if (!(bounds_.width() > 0.0) || !(bounds_.height() > 0.0)) {
        throw DegenerateData("bounds have zero extent on at least one axis");
    }
    for (const Point& p : points_) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y) || !bounds_.contains(p.x, p.y)) {
            throw InvalidParams("point (" + std::to_string(p.x) + ", " + std::to_string(p.y) +
                                ") lies outside the declared bounds");
        }
    }
}

BandwidthPair::BandwidthPair(double h_large, double h_small) : large_(h_large), small_(h_small) {
    if (!(h_small > 0.0) || !(h_small < h_large)) {
        throw InvalidParams("bandwidths must satisfy 0 < h_small < h_large (got h_large=" +
                            std::to_string(h_large) + ", h_small=" + std::to_string(h_small) +
                            ")");
    }
}

double silverman_bandwidth(const PointSet& points) {
    const auto pts = points.points();
    if (pts.size() < 2) throw DegenerateData("Silverman bandwidth needs at least two points");
    const double sigma = 0.5 * (sample_stddev(pts, &Point::x) + sample_stddev(pts, &Point::y));
    if (!(sigma > 0.0)) throw DegenerateData("all points coincide; bandwidth undefined");
    return sigma * std::pow(static_cast<double>(pts.size()), -1.0 / 6.0);
}

double small_bandwidth(int grid_width, const Bounds& bounds) {
    if (grid_width < 2) throw InvalidParams("grid width must be at least 2");
    return bounds.width() / grid_width;
}

ScalarField linear_bin(const PointSet& points, const GridTransform& grid) {
    ScalarField counts(grid);
    const int w = grid.width();
    const int h = grid.height();
    for (const Point& p : points.points()) {
        const double gx = std::clamp(grid.to_grid_x(p.x), 0.0, static_cast<double>(w - 1));
        const double gy = std::clamp(grid.to_grid_y(p.y), 0.0, static_cast<double>(h - 1));
        const int i0 = std::min(static_cast<int>(gx), std::max(0, w - 2));
        const int j0 = std::min(static_cast<int>(gy), std::max(0, h - 2));
        const double fx = gx - i0;
        const double fy = gy - j0;
        const int i1 = std::min(i0 + 1, w - 1);
        const int j1 = std::min(j0 + 1, h - 1);
        counts(i0, j0) += (1.0 - fx) * (1.0 - fy);
        counts(i1, j0) += fx * (1.0 - fy);
        counts(i0, j1) += (1.0 - fx) * fy;
        counts(i1, j1) += fx * fy;
    }
    return counts;
}

ScalarField linear_bin(const PointSet& points, int width, int height) {
    return linear_bin(points, GridTransform(points.bounds(), width, height));
}

GridTransform oversampled(const GridTransform& grid, int factor) {
    if (factor < 1 || factor % 2 == 0) throw InvalidParams("oversampling factor must be odd and positive");
    return GridTransform(grid.bounds(), grid.width() * factor, grid.height() * factor);
}

ScalarField kde_from_oversampled_counts(const ScalarField& counts, const GridTransform& grid, std::size_t n,
                                        double h, int factor, double truncation) {
    if (!(h > 0.0)) throw InvalidParams("bandwidth must be positive");
    if (grid.width() < 2 || grid.height() < 2) throw InvalidParams("grid must be at least 2x2");
    if (!(counts.transform() == oversampled(grid, factor))) {
        throw DimensionMismatch("counts are not on the oversampled lattice of the output grid");
    }
    const GridTransform& fine = counts.transform();
    const int fw = fine.width();
    const int fh = fine.height();
    const int w = grid.width();
    const int hgt = grid.height();
    const int centre = factor / 2;

    const auto taps_x = gaussian_taps(h / fine.cell_width(), truncation);
    const auto taps_y = gaussian_taps(h / fine.cell_height(), truncation);
    const int rx = static_cast<int>(taps_x.size() / 2);
    const int ry = static_cast<int>(taps_y.size() / 2);

    std::vector<char> row_used(static_cast<std::size_t>(fh), 0);
    for (int k = 0; k < fh; ++k) {
        for (int i = 0; i < fw; ++i) {
            if (counts(i, k) != 0.0) {
                row_used[static_cast<std::size_t>(k)] = 1;
                break;
            }
        }
    }

    // Vertical pass onto the output rows, all lattice columns.
    std::vector<double> tmp(static_cast<std::size_t>(fw) * static_cast<std::size_t>(hgt), 0.0);
    const auto src = counts.values();
    detail::parallel_ranges(hgt, [&](int j_begin, int j_end) {
        for (int j = j_begin; j < j_end; ++j) {
            double* row = tmp.data() + static_cast<std::size_t>(j) * static_cast<std::size_t>(fw);
            const int fj = factor * j + centre;
            const int lo = std::max(0, fj - ry);
            const int hi = std::min(fh - 1, fj + ry);
            for (int k = lo; k <= hi; ++k) {
                if (!row_used[static_cast<std::size_t>(k)]) continue;
                const double t = taps_y[static_cast<std::size_t>(k - fj + ry)];
                const double* in = src.data() + static_cast<std::size_t>(k) * static_cast<std::size_t>(fw);
                for (int i = 0; i < fw; ++i) row[i] += in[i] * t;
            }
        }
    });

    // Horizontal pass at the output columns.
    const double scale = 1.0 / (2.0 * std::numbers::pi * static_cast<double>(n) * h * h);
    ScalarField out(grid);
    detail::parallel_ranges(hgt, [&](int j_begin, int j_end) {
        for (int j = j_begin; j < j_end; ++j) {
            const double* row = tmp.data() + static_cast<std::size_t>(j) * static_cast<std::size_t>(fw);
            for (int i = 0; i < w; ++i) {
                const int fi = factor * i + centre;
                const int lo = std::max(0, fi - rx);
                const int hi = std::min(fw - 1, fi + rx);
                const double* tap = taps_x.data() + (lo - fi + rx);
                const double* in = row + lo;
                const int len = hi - lo + 1;
                double a0 = 0.0, a1 = 0.0, a2 = 0.0, a3 = 0.0;
                int k = 0;
                for (; k + 3 < len; k += 4) {
                    a0 += in[k] * tap[k];
                    a1 += in[k + 1] * tap[k + 1];
                    a2 += in[k + 2] * tap[k + 2];
                    a3 += in[k + 3] * tap[k + 3];
                }
                for (; k < len; ++k) a0 += in[k] * tap[k];
                out(i, j) = ((a0 + a1) + (a2 + a3)) * scale;
            }
        }
    });
    return out;
}

ScalarField kde_from_counts(const ScalarField& counts, std::size_t n, double h, double truncation) {
    return kde_from_oversampled_counts(counts, counts.transform(), n, h, 1, truncation);
}

ScalarField kde(const PointSet& points, double h, const GridTransform& grid) {
    if (!(h > 0.0)) throw InvalidParams("bandwidth must be positive");
    if (grid.width() < 2 || grid.height() < 2) throw InvalidParams("grid must be at least 2x2");
    return kde_from_oversampled_counts(linear_bin(points, oversampled(grid, kBinningOversample)), grid,
                                       points.size(), h);
}

ScalarField kde(const PointSet& points, double h, int width, int height) {
    if (width < 2 || height < 2) throw InvalidParams("grid must be at least 2x2");
    return kde(points, h, GridTransform(points.bounds(), width, height));
}

ScalarField dog(const ScalarField& f_large, const ScalarField& f_small) {
    require_same_shape(f_large, f_small, "dog");
    ScalarField out(f_large.transform());
    auto dst = out.values();
    auto a = f_large.values();
    auto b = f_small.values();
    for (std::size_t k = 0; k < dst.size(); ++k) dst[k] = a[k] - b[k];
    return out;
}

}  // namespace vidp
