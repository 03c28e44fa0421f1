#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace vidp {

struct Bounds {
    double xmin = 0.0;
    double xmax = 1.0;
    double ymin = 0.0;
    double ymax = 1.0;

    double width() const { return xmax - xmin; }
    double height() const { return ymax - ymin; }
    bool contains(double x, double y) const {
        return x >= xmin && x <= xmax && y >= ymin && y <= ymax;
    }
    // Grows each side by `fraction` of the extent on that axis.
    Bounds padded(double fraction) const;

    bool operator==(const Bounds&) const = default;
};

// Affine data -> grid mapping. The grid covers `bounds` with width x height
// square-ish cells; node (i, j) sits at the centre of cell (i, j). Row index j
// increases with data y.
class GridTransform {
public:
    GridTransform() = default;
    GridTransform(Bounds bounds, int width, int height);

    int width() const { return width_; }
    int height() const { return height_; }
    const Bounds& bounds() const { return bounds_; }
    double cell_width() const { return cell_w_; }
    double cell_height() const { return cell_h_; }

    double node_x(int i) const { return bounds_.xmin + (i + 0.5) * cell_w_; }
    double node_y(int j) const { return bounds_.ymin + (j + 0.5) * cell_h_; }
    // Continuous grid coordinates; integral values land exactly on nodes.
    double to_grid_x(double x) const { return (x - bounds_.xmin) / cell_w_ - 0.5; }
    double to_grid_y(double y) const { return (y - bounds_.ymin) / cell_h_ - 0.5; }

    bool operator==(const GridTransform&) const = default;

private:
    Bounds bounds_{};
    int width_ = 0;
    int height_ = 0;
    double cell_w_ = 1.0;
    double cell_h_ = 1.0;
};

// Row-major W x H grid of reals with its data-space placement.
class ScalarField {
public:
    ScalarField() = default;
    explicit ScalarField(const GridTransform& transform, double fill = 0.0);
    ScalarField(const GridTransform& transform, std::vector<double> values);

    int width() const { return transform_.width(); }
    int height() const { return transform_.height(); }
    std::size_t size() const { return values_.size(); }
    const GridTransform& transform() const { return transform_; }

    double& operator()(int i, int j) { return values_[index(i, j)]; }
    double operator()(int i, int j) const { return values_[index(i, j)]; }
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(j) * static_cast<std::size_t>(width()) +
               static_cast<std::size_t>(i);
    }

    std::span<double> values() { return values_; }
    std::span<const double> values() const { return values_; }

    double min() const;
    double max() const;
    double sum() const;

    bool same_shape(const ScalarField& other) const { return transform_ == other.transform_; }

private:
    GridTransform transform_{};
    std::vector<double> values_;
};

// Throws DimensionMismatch unless both fields share dimensions and transform.
void require_same_shape(const ScalarField& a, const ScalarField& b, const char* what);

}  // namespace vidp
