#include "vidp/io.hpp"

#include <png.h>

#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <istream>
#include <string_view>

#include "vidp/errors.hpp"

namespace vidp {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

// Splits one CSV line into fields (views into `line`, quotes retained).
// Returns false on an unterminated quote.
bool split_fields(std::string_view line, char delim, std::vector<std::string_view>& fields) {
    fields.clear();
    std::size_t start = 0;
    bool quoted = false;
    for (std::size_t k = 0; k < line.size(); ++k) {
        const char c = line[k];
        if (c == '"') {
            quoted = !quoted;
        } else if (c == delim && !quoted) {
            fields.push_back(line.substr(start, k - start));
            start = k + 1;
        }
    }
    if (quoted) return false;
    fields.push_back(line.substr(start));
    return true;
}

std::string unquote(std::string_view s) {
    s = trim(s);
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
    return std::string(s);
}

std::optional<double> parse_number(std::string_view s) {
    s = trim(s);
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = trim(s.substr(1, s.size() - 2));
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    if (s.empty()) return std::nullopt;
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
    return v;
}

std::size_t resolve_column(const std::vector<std::string>& header, const std::optional<std::string>& name,
                           std::size_t index, const char* axis) {
    if (!name) {
        if (!header.empty() && index >= header.size()) {
            throw MissingColumn(std::string(axis) + " column index " + std::to_string(index) +
                                " is beyond the " + std::to_string(header.size()) + " header columns");
        }
        return index;
    }
    for (std::size_t k = 0; k < header.size(); ++k) {
        if (header[k] == *name) return k;
    }
    throw MissingColumn("no column named '" + *name + "' for " + axis);
}

}  // namespace

LoadedDataset load_csv(std::istream& in, const DatasetSource& src) {
    std::vector<Point> points;
    std::vector<std::string_view> fields;
    std::vector<std::string> header;
    std::size_t skipped = 0;
    std::size_t rows = 0;
    std::size_t line_no = 0;
    std::size_t xi = src.x_index;
    std::size_t yi = src.y_index;
    bool need_header = src.header;
    if (!src.header && (src.x_name || src.y_name)) {
        throw MissingColumn("columns can only be selected by name when the file has a header");
    }

    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view = trim(line);
        if (view.empty()) continue;
        if (line_no == 1 && view.size() >= 3 && view.substr(0, 3) == "\xEF\xBB\xBF") view.remove_prefix(3);
        if (!split_fields(view, src.delimiter, fields)) {
            throw ParseError("unterminated quote on line " + std::to_string(line_no));
        }
        if (need_header) {
            for (auto f : fields) header.push_back(unquote(f));
            xi = resolve_column(header, src.x_name, src.x_index, "x");
            yi = resolve_column(header, src.y_name, src.y_index, "y");
            need_header = false;
            continue;
        }
        if (src.row_limit && rows >= *src.row_limit) break;
        ++rows;
        if (xi >= fields.size() || yi >= fields.size()) {
            ++skipped;
            continue;
        }
        const auto x = parse_number(fields[xi]);
        const auto y = parse_number(fields[yi]);
        if (!x || !y) {
            ++skipped;
            continue;
        }
        points.push_back({*x, *y});
    }
    if (in.bad()) throw IoError("read error while loading CSV");
    if (need_header) throw EmptyDataset("CSV input has no header row");
    if (points.empty()) throw EmptyDataset("CSV input contains no numeric rows");
    return {PointSet(std::move(points)), skipped, rows};
}

LoadedDataset load_csv(const DatasetSource& src) {
    std::ifstream in(src.path, std::ios::binary);
    if (!in) throw IoError("cannot open " + src.path.string());
    return load_csv(in, src);
}

void write_points_csv(const PointSet& points, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << "x,y\n";
    char buf[64];
    for (const Point& p : points.points()) {
        auto r1 = std::to_chars(buf, buf + sizeof buf, p.x);
        *r1.ptr++ = ',';
        auto r2 = std::to_chars(r1.ptr, buf + sizeof buf, p.y);
        *r2.ptr++ = '\n';
        out.write(buf, r2.ptr - buf);
    }
    if (!out) throw IoError("write failed for " + path.string());
}

std::vector<std::uint8_t> encode_png(const Rgb8Image& image) {
    if (image.width < 1 || image.height < 1 ||
        image.data.size() != static_cast<std::size_t>(image.width) * image.height * 3) {
        throw InvalidParams("cannot encode an empty or inconsistent image");
    }
    const std::size_t stride = static_cast<std::size_t>(image.width) * 3;
    std::vector<std::uint8_t> top_down(image.data.size());
    for (int j = 0; j < image.height; ++j) {
        std::memcpy(top_down.data() + static_cast<std::size_t>(j) * stride,
                    image.data.data() + static_cast<std::size_t>(image.height - 1 - j) * stride, stride);
    }

    png_image img;
    std::memset(&img, 0, sizeof img);
    img.version = PNG_IMAGE_VERSION;
    img.width = static_cast<png_uint_32>(image.width);
    img.height = static_cast<png_uint_32>(image.height);
    img.format = PNG_FORMAT_RGB;

    png_alloc_size_t size = 0;
    if (!png_image_write_to_memory(&img, nullptr, &size, 0, top_down.data(), 0, nullptr)) {
        throw IoError(std::string("PNG sizing failed: ") + img.message);
    }
    std::vector<std::uint8_t> out(size);
    if (!png_image_write_to_memory(&img, out.data(), &size, 0, top_down.data(), 0, nullptr)) {
        throw IoError(std::string("PNG encoding failed: ") + img.message);
    }
    out.resize(size);
    return out;
}

std::vector<std::uint8_t> encode_png(const RgbImage& image) { return encode_png(quantize(image)); }

void write_png(const Rgb8Image& image, const std::filesystem::path& path) {
    write_file(path, encode_png(image));
}

void write_png(const RgbImage& image, const std::filesystem::path& path) {
    write_png(quantize(image), path);
}

Rgb8Image decode_png(const std::vector<std::uint8_t>& bytes) {
    png_image img;
    std::memset(&img, 0, sizeof img);
    img.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_memory(&img, bytes.data(), bytes.size())) {
        throw IoError(std::string("not a readable PNG: ") + img.message);
    }
    img.format = PNG_FORMAT_RGB;
    const std::size_t stride = static_cast<std::size_t>(img.width) * 3;
    std::vector<std::uint8_t> top_down(stride * img.height);
    if (!png_image_finish_read(&img, nullptr, top_down.data(), 0, nullptr)) {
        png_image_free(&img);
        throw IoError(std::string("PNG decoding failed: ") + img.message);
    }
    Rgb8Image out{static_cast<int>(img.width), static_cast<int>(img.height), {}};
    out.data.resize(top_down.size());
    for (int j = 0; j < out.height; ++j) {
        std::memcpy(out.data.data() + static_cast<std::size_t>(j) * stride,
                    top_down.data() + static_cast<std::size_t>(out.height - 1 - j) * stride, stride);
    }
    return out;
}

Rgb8Image read_png(const std::filesystem::path& path) { return decode_png(read_file(path)); }

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return bytes;
}

void write_file(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("write failed for " + path.string());
}

namespace {

nlohmann::json light_to_json(const LightConfig& l) {
    return {{"azimuth", l.azimuth()}, {"elevation", l.elevation()}};
}

LightConfig light_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("azimuth") || !j.contains("elevation")) {
        throw InvalidParams("light must be \"auto\" or {\"azimuth\": deg, \"elevation\": deg}");
    }
    return {j.at("azimuth").get<double>(), j.at("elevation").get<double>()};
}

template <class T>
std::optional<T> optional_from(const nlohmann::json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<T>();
}

}  // namespace

nlohmann::json params_to_json(const RenderParams& p) {
    nlohmann::json doc;
    doc["technique"] = to_string(p.technique);
    doc["width"] = p.width;
    doc["height"] = p.height;
    doc["h_large"] = p.h_large ? nlohmann::json(*p.h_large) : nlohmann::json(nullptr);
    doc["h_small"] = p.h_small ? nlohmann::json(*p.h_small) : nlohmann::json(nullptr);
    if (p.eta.is_uniform()) {
        doc["eta"] = p.eta.uniform_value();
    } else {
        doc["eta"] = {{"width", p.eta.width()},
                      {"height", p.eta.height()},
                      {"values", std::vector<double>(p.eta.values().begin(), p.eta.values().end())}};
    }
    doc["phi"] = p.phi;
    doc["light"] = p.light ? light_to_json(*p.light) : nlohmann::json("auto");
    doc["colormap"] = p.colormap;
    doc["background"] = to_string(p.background);
    doc["padding_fraction"] = p.padding_fraction;
    doc["intensity_floor"] = p.intensity_floor ? nlohmann::json(*p.intensity_floor) : nlohmann::json(nullptr);
    doc["light_from_unexaggerated"] = p.light_from_unexaggerated;
    doc["baseline_light"] = light_to_json(p.baseline_light);
    doc["phong"] = {{"ambient", p.phong.ambient},
                    {"diffuse", p.phong.diffuse},
                    {"specular", p.phong.specular},
                    {"shininess", p.phong.shininess}};
    return doc;
}

RenderParams params_from_json(const nlohmann::json& doc, RenderParams p) {
    if (!doc.is_object()) throw InvalidParams("config document must be a JSON object");
    try {
        for (const auto& [key, v] : doc.items()) {
            if (key == "technique") {
                p.technique = technique_from_string(v.get<std::string>());
            } else if (key == "width") {
                p.width = v.get<int>();
            } else if (key == "height") {
                p.height = v.get<int>();
            } else if (key == "h_large") {
                p.h_large = optional_from<double>(v);
            } else if (key == "h_small") {
                p.h_small = optional_from<double>(v);
            } else if (key == "eta") {
                if (v.is_number()) {
                    p.eta = EtaField(v.get<double>());
                } else {
                    p.eta = EtaField(v.at("width").get<int>(), v.at("height").get<int>(),
                                     v.at("values").get<std::vector<double>>());
                }
            } else if (key == "phi") {
                p.phi = v.get<double>();
            } else if (key == "light") {
                if (v.is_string() && v.get<std::string>() == "auto") {
                    p.light.reset();
                } else {
                    p.light = light_from_json(v);
                }
            } else if (key == "colormap") {
                p.colormap = v.get<std::string>();
            } else if (key == "background") {
                p.background = background_from_string(v.get<std::string>());
            } else if (key == "padding_fraction") {
                p.padding_fraction = v.get<double>();
            } else if (key == "intensity_floor") {
                p.intensity_floor = optional_from<double>(v);
            } else if (key == "light_from_unexaggerated") {
                p.light_from_unexaggerated = v.get<bool>();
            } else if (key == "baseline_light") {
                p.baseline_light = light_from_json(v);
            } else if (key == "phong") {
                p.phong.ambient = v.value("ambient", p.phong.ambient);
                p.phong.diffuse = v.value("diffuse", p.phong.diffuse);
                p.phong.specular = v.value("specular", p.phong.specular);
                p.phong.shininess = v.value("shininess", p.phong.shininess);
            } else {
                throw InvalidParams("unknown config key '" + key + "'");
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw InvalidParams(std::string("bad config value: ") + e.what());
    }
    p.validate();
    return p;
}

RenderParams load_config(const std::filesystem::path& path, RenderParams base) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config " + path.string());
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("config " + path.string() + ": " + e.what());
    }
    return params_from_json(doc, std::move(base));
}

void save_config(const RenderParams& params, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write config " + path.string());
    out << params_to_json(params).dump(2) << '\n';
}

}  // namespace vidp
