#include "vidp/color.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "colormap_tables.hpp"
#include "parallel.hpp"
#include "vidp/errors.hpp"

namespace vidp {

namespace {

using Mat3 = std::array<std::array<double, 3>, 3>;

// IEC 61966-2-1 primaries, D65.
constexpr Mat3 kRgbToXyz = {{{0.4124564, 0.3575761, 0.1804375},
                             {0.2126729, 0.7151522, 0.0721750},
                             {0.0193339, 0.1191920, 0.9503041}}};

constexpr Mat3 invert(const Mat3& m) {
    const double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                       m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                       m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    Mat3 r{};
    r[0][0] = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) / det;
    r[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / det;
    r[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / det;
    r[1][0] = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) / det;
    r[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / det;
    r[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / det;
    r[2][0] = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) / det;
    r[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / det;
    r[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / det;
    return r;
}

constexpr Mat3 kXyzToRgb = invert(kRgbToXyz);

// Reference white = XYZ of sRGB (1, 1, 1), so white maps to a* = b* = 0 exactly.
constexpr double kWhiteX = kRgbToXyz[0][0] + kRgbToXyz[0][1] + kRgbToXyz[0][2];
constexpr double kWhiteY = kRgbToXyz[1][0] + kRgbToXyz[1][1] + kRgbToXyz[1][2];
constexpr double kWhiteZ = kRgbToXyz[2][0] + kRgbToXyz[2][1] + kRgbToXyz[2][2];

constexpr double kDelta = 6.0 / 29.0;

double srgb_to_linear(double c) {
    return c <= 0.04045 ? c / 12.92 : std::pow((c + 0.055) / 1.055, 2.4);
}

double linear_to_srgb(double c) {
    return c <= 0.0031308 ? 12.92 * c : 1.055 * std::pow(c, 1.0 / 2.4) - 0.055;
}

double lab_f(double t) {
    return t > kDelta * kDelta * kDelta ? std::cbrt(t) : t / (3.0 * kDelta * kDelta) + 4.0 / 29.0;
}

double lab_f_inv(double t) {
    return t > kDelta ? t * t * t : 3.0 * kDelta * kDelta * (t - 4.0 / 29.0);
}

std::array<double, 3> lab_to_linear(const Lab& c) {
    const double fy = (c.l + 16.0) / 116.0;
    const double fx = fy + c.a / 500.0;
    const double fz = fy - c.b / 200.0;
    const double x = kWhiteX * lab_f_inv(fx);
    const double y = kWhiteY * lab_f_inv(fy);
    const double z = kWhiteZ * lab_f_inv(fz);
    return {kXyzToRgb[0][0] * x + kXyzToRgb[0][1] * y + kXyzToRgb[0][2] * z,
            kXyzToRgb[1][0] * x + kXyzToRgb[1][1] * y + kXyzToRgb[1][2] * z,
            kXyzToRgb[2][0] * x + kXyzToRgb[2][1] * y + kXyzToRgb[2][2] * z};
}

std::uint8_t to_byte(double v) {
    return static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 1.0) * 255.0));
}

double deg(double rad) { return rad * 180.0 / std::numbers::pi; }
double rad(double deg) { return deg * std::numbers::pi / 180.0; }

}  // namespace

RgbImage::RgbImage(int width, int height, Rgb fill)
    : width_(width),
      height_(height),
      pixels_(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill) {}

Rgb8Image quantize(const RgbImage& image) {
    Rgb8Image out{image.width(), image.height(), {}};
    out.data.resize(image.size() * 3);
    const auto px = image.pixels();
    for (std::size_t k = 0; k < px.size(); ++k) {
        out.data[3 * k] = to_byte(px[k].r);
        out.data[3 * k + 1] = to_byte(px[k].g);
        out.data[3 * k + 2] = to_byte(px[k].b);
    }
    return out;
}

RgbImage dequantize(const Rgb8Image& image) {
    RgbImage out(image.width, image.height);
    auto px = out.pixels();
    for (std::size_t k = 0; k < px.size(); ++k) px[k] = image.pixel(k);
    return out;
}

Colormap::Colormap(std::string name, std::array<Rgb, kEntries> entries)
    : name_(std::move(name)), entries_(entries) {}

Colormap Colormap::builtin(const std::string& name) {
    if (name == "magma") return {"magma", detail::k_magma_table};
    if (name == "viridis") return {"viridis", detail::k_viridis_table};
    throw InvalidParams("unknown colormap '" + name + "' (expected magma or viridis)");
}

Colormap Colormap::from_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open colormap file " + path.string());
    std::vector<Rgb> rows;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::array<double, 3> v{};
        std::size_t pos = 0;
        bool ok = true;
        for (int c = 0; c < 3 && ok; ++c) {
            while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
            const char* begin = line.data() + pos;
            const char* end = line.data() + line.size();
            auto [ptr, ec] = std::from_chars(begin, end, v[static_cast<std::size_t>(c)]);
            ok = ec == std::errc{};
            pos = static_cast<std::size_t>(ptr - line.data());
            while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
            if (c < 2) {
                ok = ok && pos < line.size() && (line[pos] == ',' || line[pos] == ';');
                ++pos;
            }
        }
        if (!ok) {
            if (first) {
                first = false;
                continue;  // header
            }
            throw ParseError("malformed colormap row: " + line);
        }
        first = false;
        rows.push_back({v[0], v[1], v[2]});
    }
    if (rows.size() != kEntries) {
        throw ParseError("colormap file must contain 256 rows, found " + std::to_string(rows.size()));
    }
    const bool bytes = std::any_of(rows.begin(), rows.end(),
                                   [](const Rgb& c) { return c.r > 1.0 || c.g > 1.0 || c.b > 1.0; });
    std::array<Rgb, kEntries> entries{};
    for (std::size_t k = 0; k < kEntries; ++k) {
        Rgb c = rows[k];
        if (bytes) c = {c.r / 255.0, c.g / 255.0, c.b / 255.0};
        if (c.r < 0.0 || c.g < 0.0 || c.b < 0.0 || c.r > 1.0 || c.g > 1.0 || c.b > 1.0) {
            throw ParseError("colormap entry out of range in row " + std::to_string(k + 1));
        }
        entries[k] = c;
    }
    return {path.stem().string(), entries};
}

Colormap Colormap::resolve(const std::string& name_or_path) {
    if (name_or_path == "magma" || name_or_path == "viridis") return builtin(name_or_path);
    if (std::filesystem::exists(name_or_path)) return from_csv(name_or_path);
    return builtin(name_or_path);
}

Rgb Colormap::lookup(double t) const {
    if (!(t > 0.0)) return entries_.front();
    if (t >= 1.0) return entries_.back();
    const double pos = t * static_cast<double>(kEntries - 1);
    const auto i0 = static_cast<std::size_t>(pos);
    const std::size_t i1 = std::min(i0 + 1, kEntries - 1);
    const double f = pos - static_cast<double>(i0);
    const Rgb& a = entries_[i0];
    const Rgb& b = entries_[i1];
    return {a.r + (b.r - a.r) * f, a.g + (b.g - a.g) * f, a.b + (b.b - a.b) * f};
}

Colormap Colormap::flipped() const {
    Colormap out(*this);
    std::reverse(out.entries_.begin(), out.entries_.end());
    out.reversed_ = !reversed_;
    return out;
}

Colormap Colormap::oriented_for(Background background) const {
    // Shipped tables run dark -> light.
    return background == Background::light ? flipped() : *this;
}

Lab rgb_to_lab(const Rgb& c) {
    const double r = srgb_to_linear(c.r);
    const double g = srgb_to_linear(c.g);
    const double b = srgb_to_linear(c.b);
    const double x = kRgbToXyz[0][0] * r + kRgbToXyz[0][1] * g + kRgbToXyz[0][2] * b;
    const double y = kRgbToXyz[1][0] * r + kRgbToXyz[1][1] * g + kRgbToXyz[1][2] * b;
    const double z = kRgbToXyz[2][0] * r + kRgbToXyz[2][1] * g + kRgbToXyz[2][2] * b;
    const double fx = lab_f(x / kWhiteX);
    const double fy = lab_f(y / kWhiteY);
    const double fz = lab_f(z / kWhiteZ);
    return {116.0 * fy - 16.0, 500.0 * (fx - fy), 200.0 * (fy - fz)};
}

Rgb lab_to_rgb(const Lab& c) {
    const auto lin = lab_to_linear(c);
    return {linear_to_srgb(std::clamp(lin[0], 0.0, 1.0)),
            linear_to_srgb(std::clamp(lin[1], 0.0, 1.0)),
            linear_to_srgb(std::clamp(lin[2], 0.0, 1.0))};
}

bool in_srgb_gamut(const Lab& c, double tolerance) {
    const auto lin = lab_to_linear(c);
    return std::all_of(lin.begin(), lin.end(),
                       [tolerance](double v) { return v >= -tolerance && v <= 1.0 + tolerance; });
}

RgbImage apply_colormap(const ScalarField& f, const Colormap& map) {
    RgbImage out(f.width(), f.height());
    const double lo = f.min();
    const double range = f.max() - lo;
    auto src = f.values();
    auto dst = out.pixels();
    for (std::size_t k = 0; k < src.size(); ++k) {
        dst[k] = map.lookup(range > 0.0 ? (src[k] - lo) / range : 0.0);
    }
    return out;
}

double scale_intensity(double intensity, const ComposeParams& p) {
    const double denom = p.i_empty - p.i_min;
    if (denom == 0.0 || !std::isfinite(denom)) {
        throw DegenerateRange("I_empty equals I_min; intensity scaling is undefined");
    }
    return p.phi * (p.i_empty - intensity) / denom;
}

ScalarField scale_intensity(const ScalarField& intensity, const ComposeParams& p) {
    scale_intensity(p.i_empty, p);  // validates the range
    ScalarField out(intensity.transform());
    auto src = intensity.values();
    auto dst = out.values();
    for (std::size_t k = 0; k < src.size(); ++k) dst[k] = scale_intensity(src[k], p);
    return out;
}

RgbImage compose_luminance(const RgbImage& base, const ScalarField& scaled) {
    if (base.width() != scaled.width() || base.height() != scaled.height()) {
        throw DimensionMismatch("compose_luminance: image and intensity field differ in size");
    }
    RgbImage out(base.width(), base.height());
    auto src = base.pixels();
    auto dst = out.pixels();
    auto shift = scaled.values();
    detail::parallel_ranges(static_cast<int>(src.size()), [&](int begin, int end) {
        for (int k = begin; k < end; ++k) {
            const auto u = static_cast<std::size_t>(k);
            if (shift[u] == 0.0) {
                dst[u] = src[u];
                continue;
            }
            Lab lab = rgb_to_lab(src[u]);
            lab.l = std::clamp(lab.l + shift[u], 0.0, 100.0);
            dst[u] = lab_to_rgb(lab);
        }
    }, 4096);
    return out;
}

RgbImage compose_multiply(const RgbImage& base, const ScalarField& intensity) {
    if (base.width() != intensity.width() || base.height() != intensity.height()) {
        throw DimensionMismatch("compose_multiply: image and intensity field differ in size");
    }
    RgbImage out(base.width(), base.height());
    auto src = base.pixels();
    auto dst = out.pixels();
    auto in = intensity.values();
    for (std::size_t k = 0; k < src.size(); ++k) {
        const double s = std::max(in[k], 0.0);
        dst[k] = {src[k].r * s, src[k].g * s, src[k].b * s};
    }
    return out;
}

double ciede2000(const Lab& c1, const Lab& c2) {
    constexpr double k25_7 = 6103515625.0;  // 25^7

    const double c1ab = std::hypot(c1.a, c1.b);
    const double c2ab = std::hypot(c2.a, c2.b);
    const double cbar = 0.5 * (c1ab + c2ab);
    const double cbar7 = std::pow(cbar, 7.0);
    const double g = 0.5 * (1.0 - std::sqrt(cbar7 / (cbar7 + k25_7)));

    const double a1p = (1.0 + g) * c1.a;
    const double a2p = (1.0 + g) * c2.a;
    const double c1p = std::hypot(a1p, c1.b);
    const double c2p = std::hypot(a2p, c2.b);

    auto hue = [](double b, double ap) {
        if (b == 0.0 && ap == 0.0) return 0.0;
        double h = deg(std::atan2(b, ap));
        return h < 0.0 ? h + 360.0 : h;
    };
    const double h1p = hue(c1.b, a1p);
    const double h2p = hue(c2.b, a2p);

    const double dlp = c2.l - c1.l;
    const double dcp = c2p - c1p;
    double dhp = 0.0;
    if (c1p * c2p != 0.0) {
        dhp = h2p - h1p;
        if (dhp > 180.0) {
            dhp -= 360.0;
        } else if (dhp < -180.0) {
            dhp += 360.0;
        }
    }
    const double dHp = 2.0 * std::sqrt(c1p * c2p) * std::sin(rad(dhp) / 2.0);

    const double lbarp = 0.5 * (c1.l + c2.l);
    const double cbarp = 0.5 * (c1p + c2p);
    double hbarp = h1p + h2p;
    if (c1p * c2p != 0.0) {
        if (std::abs(h1p - h2p) <= 180.0) {
            hbarp *= 0.5;
        } else if (h1p + h2p < 360.0) {
            hbarp = 0.5 * (h1p + h2p + 360.0);
        } else {
            hbarp = 0.5 * (h1p + h2p - 360.0);
        }
    }

    const double t = 1.0 - 0.17 * std::cos(rad(hbarp - 30.0)) + 0.24 * std::cos(rad(2.0 * hbarp)) +
                     0.32 * std::cos(rad(3.0 * hbarp + 6.0)) - 0.20 * std::cos(rad(4.0 * hbarp - 63.0));
    const double dtheta = 30.0 * std::exp(-std::pow((hbarp - 275.0) / 25.0, 2.0));
    const double cbarp7 = std::pow(cbarp, 7.0);
    const double rc = 2.0 * std::sqrt(cbarp7 / (cbarp7 + k25_7));
    const double l50 = (lbarp - 50.0) * (lbarp - 50.0);
    const double sl = 1.0 + 0.015 * l50 / std::sqrt(20.0 + l50);
    const double sc = 1.0 + 0.045 * cbarp;
    const double sh = 1.0 + 0.015 * cbarp * t;
    const double rt = -std::sin(rad(2.0 * dtheta)) * rc;

    const double tl = dlp / sl;
    const double tc = dcp / sc;
    const double th = dHp / sh;
    return std::sqrt(tl * tl + tc * tc + th * th + rt * tc * th);
}

double dcd(const RgbImage& image, const RgbImage& baseline) {
    if (image.width() != baseline.width() || image.height() != baseline.height()) {
        throw DimensionMismatch("dcd: images differ in size");
    }
    const auto a = image.pixels();
    const auto b = baseline.pixels();
    if (a.empty()) return 0.0;
    std::vector<double> per_pixel(a.size());
    detail::parallel_ranges(static_cast<int>(a.size()), [&](int begin, int end) {
        for (int k = begin; k < end; ++k) {
            const auto u = static_cast<std::size_t>(k);
            per_pixel[u] = a[u] == b[u] ? 0.0 : ciede2000(rgb_to_lab(a[u]), rgb_to_lab(b[u]));
        }
    }, 4096);
    double sum = 0.0;
    for (double v : per_pixel) sum += v;
    return sum / static_cast<double>(a.size());
}

double dcd(const Rgb8Image& image, const Rgb8Image& baseline) {
    if (image.width != baseline.width || image.height != baseline.height) {
        throw DimensionMismatch("dcd: images differ in size");
    }
    return dcd(dequantize(image), dequantize(baseline));
}

}  // namespace vidp
