#include "vidp/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <ostream>

#include "json.hpp"
#include "vidp/bench.hpp"
#include "vidp/errors.hpp"
#include "vidp/io.hpp"

namespace vidp {

namespace {

struct UsageError : Error {
    using Error::Error;
};

std::string fixed4(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

std::optional<LightConfig> parse_light(const std::string& s) {
    if (s == "auto") return std::nullopt;
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw UsageError("--light expects 'auto' or 'azimuth,elevation'");
    try {
        return LightConfig(std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1)));
    } catch (const std::logic_error&) {
        throw UsageError("--light expects 'auto' or 'azimuth,elevation'");
    }
}

void select_column(const std::string& spec, std::optional<std::string>& name, std::size_t& index) {
    if (!spec.empty() && std::all_of(spec.begin(), spec.end(), [](unsigned char c) { return std::isdigit(c); })) {
        index = std::stoul(spec);
        name.reset();
    } else {
        name = spec;
    }
}

struct RenderArgs {
    std::string input, out, config, save_config;
    std::string technique = "vidp";
    double eta = EtaField::kDefault;
    double phi = -25.0;
    std::string colormap = "magma";
    int width = 900;
    int height = 600;
    std::string light = "auto";
    std::string background = "light";
    double h_large = 0.0, h_small = 0.0, padding = 0.05;
    std::string x_col = "0", y_col = "1";
    char delimiter = ',';
    bool no_header = false;
};

int cmd_render(const RenderArgs& a, const CLI::App& sub, std::ostream& out) {
    RenderParams params;
    if (!a.config.empty()) params = load_config(a.config, params);
    auto given = [&sub](const char* name) { return sub.get_option(name)->count() > 0; };
    if (given("--technique")) params.technique = technique_from_string(a.technique);
    if (given("--eta")) params.eta = EtaField(a.eta);
    if (given("--phi")) params.phi = a.phi;
    if (given("--colormap")) params.colormap = a.colormap;
    if (given("--width")) params.width = a.width;
    if (given("--height")) params.height = a.height;
    if (given("--light")) params.light = parse_light(a.light);
    if (given("--background")) params.background = background_from_string(a.background);
    if (given("--h-large")) params.h_large = a.h_large;
    if (given("--h-small")) params.h_small = a.h_small;
    if (given("--padding")) params.padding_fraction = a.padding;
    params.validate();
    if (!a.save_config.empty()) save_config(params, a.save_config);

    DatasetSource src;
    src.path = a.input;
    src.delimiter = a.delimiter;
    src.header = !a.no_header;
    select_column(a.x_col, src.x_name, src.x_index);
    select_column(a.y_col, src.y_name, src.y_index);
    const LoadedDataset data = load_csv(src);

    const RenderResult r = render_detailed(data.points, params);
    write_png(r.image, a.out);
    out << "wrote " << a.out << " (" << params.width << "x" << params.height << ", "
        << to_string(params.technique) << ", " << data.points.size() << " points";
    if (data.skipped_rows) out << ", " << data.skipped_rows << " rows skipped";
    if (params.technique != Technique::cdp) {
        out << ", light azimuth " << fixed4(r.light.azimuth()) << " elevation "
            << fixed4(r.light.elevation());
    }
    out << ")\n";
    return 0;
}

void print_bench(const std::vector<BenchRow>& rows, bool json, std::ostream& out) {
    double mv = 0, mi = 0, mc = 0;
    for (const auto& r : rows) mv += r.dcd_vidp, mi += r.dcd_idp, mc += r.dcd_cdp;
    const double n = rows.empty() ? 1.0 : static_cast<double>(rows.size());
    mv /= n, mi /= n, mc /= n;
    if (json) {
        nlohmann::json doc;
        doc["rows"] = nlohmann::json::array();
        for (const auto& r : rows) {
            doc["rows"].push_back({{"seed", r.seed},
                                   {"points", r.points},
                                   {"vidp", r.dcd_vidp},
                                   {"idp", r.dcd_idp},
                                   {"cdp", r.dcd_cdp},
                                   {"light_azimuth", r.light.azimuth()},
                                   {"light_elevation", r.light.elevation()}});
        }
        doc["mean"] = {{"vidp", mv}, {"idp", mi}, {"cdp", mc}};
        out << doc.dump(2) << '\n';
        return;
    }
    char line[160];
    std::snprintf(line, sizeof line, "%-8s %9s %9s %9s %9s %9s\n", "dataset", "points", "VIDP", "IDP",
                  "CDP", "azimuth");
    out << line;
    for (const auto& r : rows) {
        std::snprintf(line, sizeof line, "%-8s %9zu %9.4f %9.4f %9.4f %9.2f\n",
                      ("seed" + std::to_string(r.seed)).c_str(), r.points, r.dcd_vidp, r.dcd_idp,
                      r.dcd_cdp, r.light.azimuth());
        out << line;
    }
    std::snprintf(line, sizeof line, "%-8s %9s %9.4f %9.4f %9.4f\n", "mean", "", mv, mi, mc);
    out << line;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Illuminated density plot renderer"};
    app.require_subcommand(1);

    RenderArgs ra;
    auto* render_cmd = app.add_subcommand("render", "Render a density plot from a CSV of points");
    render_cmd->add_option("--input", ra.input, "CSV file with x,y columns")->required();
    render_cmd->add_option("--out", ra.out, "Output PNG path")->required();
    render_cmd->add_option("--technique", ra.technique, "vidp | cdp | idp")->capture_default_str();
    render_cmd->add_option("--eta", ra.eta, "Height exaggeration factor")->capture_default_str();
    render_cmd->add_option("--phi", ra.phi, "Luminance scaling")->capture_default_str();
    render_cmd->add_option("--colormap", ra.colormap, "magma | viridis | path to 256-row CSV")
        ->capture_default_str();
    render_cmd->add_option("--width", ra.width, "Grid width in pixels")->capture_default_str();
    render_cmd->add_option("--height", ra.height, "Grid height in pixels")->capture_default_str();
    render_cmd->add_option("--light", ra.light, "auto | azimuth,elevation (degrees)")->capture_default_str();
    render_cmd->add_option("--background", ra.background, "light | dark")->capture_default_str();
    render_cmd->add_option("--h-large", ra.h_large, "Large bandwidth override (data units)");
    render_cmd->add_option("--h-small", ra.h_small, "Small bandwidth override (data units)");
    render_cmd->add_option("--padding", ra.padding, "Bounds padding fraction")->capture_default_str();
    render_cmd->add_option("--config", ra.config, "JSON config; flags override it");
    render_cmd->add_option("--save-config", ra.save_config, "Write the effective config as JSON");
    render_cmd->add_option("--x-col", ra.x_col, "x column (name or zero-based index)")->capture_default_str();
    render_cmd->add_option("--y-col", ra.y_col, "y column (name or zero-based index)")->capture_default_str();
    render_cmd->add_option("--delimiter", ra.delimiter, "Field delimiter")->capture_default_str();
    render_cmd->add_flag("--no-header", ra.no_header, "First row is data");

    std::string dcd_image, dcd_baseline;
    bool dcd_json = false;
    auto* dcd_cmd = app.add_subcommand("dcd", "Mean CIEDE2000 distance between two PNGs");
    dcd_cmd->add_option("--image", dcd_image, "Image to score")->required();
    dcd_cmd->add_option("--baseline", dcd_baseline, "Baseline (CDP) image")->required();
    dcd_cmd->add_flag("--json", dcd_json, "Machine-readable output");

    SyntheticSpec synth;
    std::string synth_out;
    auto* synth_cmd = app.add_subcommand("synth", "Generate a Gaussian-mixture dataset with outliers");
    synth_cmd->add_option("--seed", synth.seed, "RNG seed")->capture_default_str();
    synth_cmd->add_option("--per-cluster", synth.points_per_cluster, "Points per cluster")->capture_default_str();
    synth_cmd->add_option("--clusters", synth.cluster_count, "Cluster count")->capture_default_str();
    synth_cmd->add_option("--outlier-fraction", synth.outlier_fraction, "Outliers per cluster point")
        ->capture_default_str();
    synth_cmd->add_option("--out", synth_out, "Output CSV path")->required();

    int bench_seeds = 5;
    BenchOptions bench;
    bool bench_json = false;
    auto* bench_cmd = app.add_subcommand("bench", "DCD sweep over synthetic datasets");
    bench_cmd->add_option("--seeds", bench_seeds, "Datasets with seeds 1..N")->capture_default_str();
    bench_cmd->add_option("--per-cluster", bench.points_per_cluster, "Points per cluster")->capture_default_str();
    bench_cmd->add_option("--width", bench.params.width, "Grid width")->capture_default_str();
    bench_cmd->add_option("--height", bench.params.height, "Grid height")->capture_default_str();
    bench_cmd->add_option("--out-dir", bench.out_dir, "Write every rendered PNG here");
    bench_cmd->add_flag("--json", bench_json, "Machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (render_cmd->parsed()) return cmd_render(ra, *render_cmd, out);
        if (dcd_cmd->parsed()) {
            const double v = dcd(read_png(dcd_image), read_png(dcd_baseline));
            if (dcd_json) {
                out << nlohmann::json{{"dcd", v}}.dump() << '\n';
            } else {
                out << fixed4(v) << '\n';
            }
            return 0;
        }
        if (synth_cmd->parsed()) {
            const SyntheticDataset data = generate_synthetic_dataset(synth);
            write_points_csv(data.points, synth_out);
            out << "wrote " << synth_out << " (" << data.points.size() << " points, "
                << data.outlier_count << " outliers)\n";
            return 0;
        }
        if (bench_cmd->parsed()) {
            if (bench_seeds < 1) throw UsageError("--seeds must be >= 1");
            bench.seeds.clear();
            for (int s = 1; s <= bench_seeds; ++s) bench.seeds.push_back(static_cast<std::uint64_t>(s));
            print_bench(run_bench(bench), bench_json, out);
            return 0;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const InvalidParams& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace vidp
