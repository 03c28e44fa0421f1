#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "vidp/field.hpp"

namespace vidp {

// sRGB components in [0, 1].
struct Rgb {
    double r = 0.0;
    double g = 0.0;
    double b = 0.0;
    bool operator==(const Rgb&) const = default;
};

// CIE 1976 L*a*b* relative to D65.
struct Lab {
    double l = 0.0;
    double a = 0.0;
    double b = 0.0;
    bool operator==(const Lab&) const = default;
};

// Float RGB image sharing the field layout: pixel (i, j) row j grows with
// data y. PNG encoding flips rows so the top of the file is the top of the plot.
class RgbImage {
public:
    RgbImage() = default;
    RgbImage(int width, int height, Rgb fill = {});

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t size() const { return pixels_.size(); }
    Rgb& operator()(int i, int j) { return pixels_[index(i, j)]; }
    const Rgb& operator()(int i, int j) const { return pixels_[index(i, j)]; }
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(j) * static_cast<std::size_t>(width_) +
               static_cast<std::size_t>(i);
    }
    std::span<Rgb> pixels() { return pixels_; }
    std::span<const Rgb> pixels() const { return pixels_; }

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<Rgb> pixels_;
};

// 8-bit interleaved RGB in the same (bottom-up) row order as RgbImage.
struct Rgb8Image {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;

    Rgb pixel(std::size_t k) const {
        return {data[3 * k] / 255.0, data[3 * k + 1] / 255.0, data[3 * k + 2] / 255.0};
    }
    bool operator==(const Rgb8Image&) const = default;
};

Rgb8Image quantize(const RgbImage& image);
RgbImage dequantize(const Rgb8Image& image);

enum class Background { light, dark };

// 256-entry lookup table with linear interpolation between entries.
class Colormap {
public:
    static constexpr std::size_t kEntries = 256;

    Colormap(std::string name, std::array<Rgb, kEntries> entries);

    // "magma" or "viridis"; throws InvalidParams otherwise.
    static Colormap builtin(const std::string& name);
    // 256 rows of r,g,b in [0,1] (or 0..255 integers); an optional header row is skipped.
    static Colormap from_csv(const std::filesystem::path& path);
    // Resolves a built-in name or, failing that, a CSV path.
    static Colormap resolve(const std::string& name_or_path);

    const std::string& name() const { return name_; }
    const std::array<Rgb, kEntries>& entries() const { return entries_; }
    bool reversed() const { return reversed_; }

    // t in [0, 1], clamped.
    Rgb lookup(double t) const;
    // Same table read back to front.
    Colormap flipped() const;
    // Orientation for the background polarity: entry 0 (zero density) is the
    // light end on a light background and the dark end on a dark one.
    Colormap oriented_for(Background background) const;

private:
    std::string name_;
    std::array<Rgb, kEntries> entries_;
    bool reversed_ = false;
};

Lab rgb_to_lab(const Rgb& c);
// Out-of-gamut results are clipped per channel.
Rgb lab_to_rgb(const Lab& c);
// True when the Lab colour maps inside the sRGB cube without clipping.
bool in_srgb_gamut(const Lab& c, double tolerance = 1e-9);

// Min-max normalizes the field (a constant field maps to 0) and looks up
// every pixel.
RgbImage apply_colormap(const ScalarField& f, const Colormap& map);

struct ComposeParams {
    double phi = -25.0;
    double i_empty = 0.0;
    double i_min = 0.0;
};

// I' = phi (I_empty - I) / (I_empty - I_min). Throws DegenerateRange when the
// two endpoints coincide.
ScalarField scale_intensity(const ScalarField& intensity, const ComposeParams& p);
double scale_intensity(double intensity, const ComposeParams& p);

// Adds I' to L* of every pixel (clamped to [0, 100]) keeping a* and b*.
RgbImage compose_luminance(const RgbImage& base, const ScalarField& scaled);
// Multiplies RGB by max(I, 0).
RgbImage compose_multiply(const RgbImage& base, const ScalarField& intensity);

// CIEDE2000 colour difference with kL = kC = kH = 1.
double ciede2000(const Lab& c1, const Lab& c2);

// Mean per-pixel CIEDE2000 between an image and its baseline.
double dcd(const RgbImage& image, const RgbImage& baseline);
double dcd(const Rgb8Image& image, const Rgb8Image& baseline);

}  // namespace vidp
