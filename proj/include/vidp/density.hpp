#pragma once

#include <optional>
#include <span>
#include <vector>

#include "vidp/field.hpp"

namespace vidp {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

// Immutable set of 2-D samples together with the data window that contains
// them. Construction validates the invariants: at least one point, every
// point inside the bounds, and strictly positive extent on both axes.
class PointSet {
public:
    // Bounds are the tight min/max box of the points.
    explicit PointSet(std::vector<Point> points);
    PointSet(std::vector<Point> points, Bounds bounds);

    std::span<const Point> points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    const Bounds& bounds() const { return bounds_; }

private:
    std::vector<Point> points_;
    Bounds bounds_;
};

// Large/small kernel bandwidths in data units, 0 < small < large.
class BandwidthPair {
public:
    BandwidthPair(double h_large, double h_small);

    double large() const { return large_; }
    double small() const { return small_; }

private:
    double large_;
    double small_;
};

// Bivariate Silverman/Scott rule: mean per-axis sample standard deviation
// times n^(-1/6). Throws DegenerateData when all points coincide.
double silverman_bandwidth(const PointSet& points);

// One grid cell in data units along x.
double small_bandwidth(int grid_width, const Bounds& bounds);

// Bilinear split of every point's unit mass among the four surrounding grid
// nodes. Points within half a cell of the border are clamped onto the edge
// nodes so the total mass is always exactly n.
ScalarField linear_bin(const PointSet& points, const GridTransform& grid);
ScalarField linear_bin(const PointSet& points, int width, int height);

// Gaussian KDE of already-binned counts: separable convolution with the
// sampled kernel truncated at `truncation` sigmas and zero padding, scaled by
// 1 / (2 pi n h^2) so grid values estimate the bivariate density in data units.
ScalarField kde_from_counts(const ScalarField& counts, std::size_t n, double h,
                            double truncation = 4.0);

// Points are binned on a lattice `factor` times finer than the output grid
// (odd factor, so every output node is also a lattice node), which keeps the
// binning error well below the kernel-shape error at typical bandwidths.
inline constexpr int kBinningOversample = 3;
GridTransform oversampled(const GridTransform& grid, int factor);

// Same convolution evaluated only at the output nodes of `grid`; `counts`
// must live on oversampled(grid, factor).
ScalarField kde_from_oversampled_counts(const ScalarField& counts, const GridTransform& grid,
                                        std::size_t n, double h, int factor = kBinningOversample,
                                        double truncation = 4.0);

ScalarField kde(const PointSet& points, double h, const GridTransform& grid);
// Grid spans the point set's own bounds.
ScalarField kde(const PointSet& points, double h, int width, int height);

// Structure map: pointwise large-bandwidth minus small-bandwidth density.
ScalarField dog(const ScalarField& f_large, const ScalarField& f_small);

}  // namespace vidp
