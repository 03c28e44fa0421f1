#include "vidp/field.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "vidp/errors.hpp"

namespace vidp {

Bounds Bounds::padded(double fraction) const {
    const double px = width() * fraction;
    const double py = height() * fraction;
    return {xmin - px, xmax + px, ymin - py, ymax + py};
}

GridTransform::GridTransform(Bounds bounds, int width, int height)
    : bounds_(bounds), width_(width), height_(height) {
    if (width < 1 || height < 1) {
        throw InvalidParams("grid dimensions must be positive");
    }
    if (!(bounds.width() > 0.0) || !(bounds.height() > 0.0)) {
        throw DegenerateData("grid bounds must have positive extent on both axes");
    }
    cell_w_ = bounds.width() / width;
    cell_h_ = bounds.height() / height;
}

ScalarField::ScalarField(const GridTransform& transform, double fill)
    : transform_(transform),
      values_(static_cast<std::size_t>(transform.width()) *
                  static_cast<std::size_t>(transform.height()),
              fill) {}

ScalarField::ScalarField(const GridTransform& transform, std::vector<double> values)
    : transform_(transform), values_(std::move(values)) {
    if (values_.size() != static_cast<std::size_t>(transform.width()) *
                              static_cast<std::size_t>(transform.height())) {
        throw DimensionMismatch("value count does not match grid dimensions");
    }
}

double ScalarField::min() const {
    return values_.empty() ? 0.0 : *std::min_element(values_.begin(), values_.end());
}

double ScalarField::max() const {
    return values_.empty() ? 0.0 : *std::max_element(values_.begin(), values_.end());
}

double ScalarField::sum() const { return std::accumulate(values_.begin(), values_.end(), 0.0); }

void require_same_shape(const ScalarField& a, const ScalarField& b, const char* what) {
    if (!a.same_shape(b)) {
        throw DimensionMismatch(std::string(what) + ": fields differ in size or placement");
    }
}

}  // namespace vidp
