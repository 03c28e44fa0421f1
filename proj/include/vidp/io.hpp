#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "vidp/color.hpp"
#include "vidp/density.hpp"
#include "vidp/pipeline.hpp"

namespace vidp {

// Where to read points from and how to interpret the columns. A column is
// addressed by header name when `*_name` is set, otherwise by zero-based index.
struct DatasetSource {
    std::filesystem::path path;
    std::optional<std::string> x_name;
    std::optional<std::string> y_name;
    std::size_t x_index = 0;
    std::size_t y_index = 1;
    char delimiter = ',';
    bool header = true;
    std::optional<std::size_t> row_limit;
};

struct LoadedDataset {
    PointSet points;
    std::size_t skipped_rows = 0;
    std::size_t parsed_rows = 0;
};

// Streaming single-pass parse. Rows with a missing or non-numeric x/y field
// are counted in skipped_rows, never coerced.
LoadedDataset load_csv(const DatasetSource& source);
LoadedDataset load_csv(std::istream& in, const DatasetSource& source);

void write_points_csv(const PointSet& points, const std::filesystem::path& path);

// 8-bit RGB PNG with an sRGB chunk; output rows are top-of-plot first.
// Encoding parameters are fixed, so equal images give equal bytes.
std::vector<std::uint8_t> encode_png(const Rgb8Image& image);
std::vector<std::uint8_t> encode_png(const RgbImage& image);
void write_png(const RgbImage& image, const std::filesystem::path& path);
void write_png(const Rgb8Image& image, const std::filesystem::path& path);
Rgb8Image decode_png(const std::vector<std::uint8_t>& bytes);
Rgb8Image read_png(const std::filesystem::path& path);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes);

// Config document mirrors RenderParams field for field. Keys missing from the
// document keep the values already in `base`.
nlohmann::json params_to_json(const RenderParams& params);
RenderParams params_from_json(const nlohmann::json& doc, RenderParams base = {});
RenderParams load_config(const std::filesystem::path& path, RenderParams base = {});
void save_config(const RenderParams& params, const std::filesystem::path& path);

}  // namespace vidp
