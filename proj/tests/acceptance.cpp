// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "sharma_pairs.hpp"
#include "support.hpp"
#include "vidp/bench.hpp"
#include "vidp/cli.hpp"
#include "vidp/io.hpp"
#include "vidp/pipeline.hpp"

using namespace vidp;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;
std::map<int, std::string> lines;

void report(int id, bool ok, const std::string& detail) {
    lines[id] = std::string(ok ? "PASS" : "FAIL") + "  " + detail;
    if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

struct Dataset {
    std::string name;
    PointSet points;
    bool synthetic;
};

std::vector<Dataset> test_datasets() {
    std::vector<Dataset> out;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        SyntheticSpec spec;
        spec.seed = seed;
        out.push_back({"synth" + std::to_string(seed), generate_synthetic(spec), true});
    }
    out.push_back({"uniform", PointSet(test::uniform_points(20000, 77)), false});
    // Noisy ring: a curved ridge with an empty interior.
    std::mt19937_64 rng(5);
    std::normal_distribution<double> nd(0.0, 0.05);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
    std::vector<Point> ring;
    for (int k = 0; k < 30000; ++k) {
        const double a = ang(rng), r = 1.0 + nd(rng);
        ring.push_back({2.0 * r * std::cos(a), r * std::sin(a)});
    }
    out.push_back({"ring", PointSet(std::move(ring)), false});
    return out;
}

double variance(const ScalarField& f) {
    double m = 0.0;
    for (double v : f.values()) m += v;
    m /= static_cast<double>(f.size());
    double s = 0.0;
    for (double v : f.values()) s += (v - m) * (v - m);
    return s / static_cast<double>(f.size());
}

void criterion1() {
    const PointSet pts(test::uniform_points(1000, 2024));
    const double h = silverman_bandwidth(pts);
    const GridTransform g(pts.bounds().padded(0.05), 128, 128);
    const auto t0 = Clock::now();
    const ScalarField f = kde(pts, h, g);
    const double secs = seconds_since(t0);

    std::vector<double> direct(f.size());
    double peak = 0.0;
    for (int j = 0; j < g.height(); ++j) {
        for (int i = 0; i < g.width(); ++i) {
            double s = 0.0;
            for (const Point& p : pts.points()) {
                const double dx = g.node_x(i) - p.x, dy = g.node_y(j) - p.y;
                s += std::exp(-(dx * dx + dy * dy) / (2.0 * h * h));
            }
            direct[f.index(i, j)] = s / (2.0 * std::numbers::pi * 1000.0 * h * h);
            peak = std::max(peak, direct[f.index(i, j)]);
        }
    }
    double worst = 0.0;
    for (std::size_t k = 0; k < f.size(); ++k) {
        if (direct[k] > 1e-9 * peak) worst = std::max(worst, std::abs(f.values()[k] - direct[k]) / direct[k]);
    }
    report(1, worst <= 1e-3 && secs < 1.0,
           fmt("KDE vs direct sum: max rel err %.3e (<= 1e-3), grid KDE %.4f s (< 1 s)", worst, secs));
}

void criterion2() {
    double worst = 0.0;
    for (const auto& p : test::kSharmaPairs) worst = std::max(worst, std::abs(ciede2000(p.c1, p.c2) - p.expected));
    report(2, worst <= 1e-4, fmt("34 Sharma pairs: max |dE - expected| %.2e (<= 1e-4)", worst));
}

std::vector<BenchRow> bench_rows_a;

void criterion3_and_9(const std::filesystem::path& dir) {
    BenchOptions opt;
    opt.out_dir = (dir / "run_a").string();
    const auto t0 = Clock::now();
    bench_rows_a = run_bench(opt);
    const double secs = seconds_since(t0);

    bool ordered = true;
    double mean_vidp = 0.0, mean_idp = 0.0;
    std::string per;
    for (const auto& r : bench_rows_a) {
        ordered = ordered && r.dcd_vidp < r.dcd_idp;
        mean_vidp += r.dcd_vidp / static_cast<double>(bench_rows_a.size());
        mean_idp += r.dcd_idp / static_cast<double>(bench_rows_a.size());
        per += fmt(" s%llu:%.3f/%.3f", static_cast<unsigned long long>(r.seed), r.dcd_vidp, r.dcd_idp);
    }
    report(3, ordered && mean_vidp <= 4.0 && secs < 300.0,
           fmt("DCD VIDP/IDP per seed%s; mean VIDP %.3f (<= 4), mean IDP %.3f; %.1f s (< 300 s)", per.c_str(),
               mean_vidp, mean_idp, secs));

    BenchOptions again = opt;
    again.out_dir = (dir / "run_b").string();
    const auto rows_b = run_bench(again);
    bool same_table = rows_b.size() == bench_rows_a.size();
    for (std::size_t k = 0; same_table && k < rows_b.size(); ++k) {
        same_table = rows_b[k].dcd_vidp == bench_rows_a[k].dcd_vidp && rows_b[k].dcd_idp == bench_rows_a[k].dcd_idp &&
                     rows_b[k].dcd_cdp == bench_rows_a[k].dcd_cdp && rows_b[k].light == bench_rows_a[k].light;
    }
    std::size_t files = 0, identical = 0;
    for (const auto& entry : std::filesystem::directory_iterator(opt.out_dir)) {
        ++files;
        const auto other = std::filesystem::path(again.out_dir) / entry.path().filename();
        if (std::filesystem::exists(other) && read_file(entry.path()) == read_file(other)) ++identical;
    }
    report(9, same_table && files == 15 && identical == files,
           fmt("two bench runs: %zu/%zu PNGs byte-identical, DCD tables %s", identical, files,
               same_table ? "identical" : "differ"));
}

void criterion4_6_7_8(const std::vector<Dataset>& sets) {
    // 4: background preservation on empty bins.
    std::size_t worst_diff = 0, checked = 0, violating = 0, flat = 0, flat_violating = 0;
    std::string where;
    // 6: intensity rescale endpoints and the phi = 0 null case.
    double endpoint_err = 0.0;
    int phi0_max = 0;
    // 7: auto-light contract.
    bool light_ok = true;
    int min_beaten = 12;
    std::string light_detail;
    // 8: hue/chroma preservation.
    std::size_t eligible = 0, preserved = 0;

    for (const Dataset& d : sets) {
        StagedRenderer renderer(std::make_shared<const PointSet>(d.points));
        RenderParams p;
        const RenderResult vidp_r = renderer.render(p);
        p.technique = Technique::cdp;
        const RenderResult cdp_r = renderer.render(p);
        const Rgb8Image v8 = quantize(vidp_r.image), c8 = quantize(cdp_r.image);
        const DensityStage& stage = renderer.density(p);

        std::size_t bad_here = 0;
        for (std::size_t k = 0; k < stage.counts.size(); ++k) {
            if (stage.counts.values()[k] != 0.0) continue;
            ++checked;
            std::size_t diff = 0;
            for (int c = 0; c < 3; ++c) {
                diff = std::max<std::size_t>(diff, static_cast<std::size_t>(
                                                       std::abs(int(v8.data[3 * k + c]) - int(c8.data[3 * k + c]))));
            }
            worst_diff = std::max(worst_diff, diff);
            if (diff > 1) ++bad_here;
        }
        violating += bad_here;
        // Same check restricted to pixels whose shading normal is exactly flat.
        const NormalField shaded = exaggerated_normal(stage.structure_gradient, p.eta);
        for (std::size_t k = 0; k < shaded.size(); ++k) {
            const Vec3 nv = shaded.normals()[k];
            if (std::abs(nv.x) > 1e-9 || std::abs(nv.y) > 1e-9) continue;
            ++flat;
            for (int c = 0; c < 3; ++c) {
                if (std::abs(int(v8.data[3 * k + c]) - int(c8.data[3 * k + c])) > 1) {
                    ++flat_violating;
                    break;
                }
            }
        }
        if (bad_here) where += fmt(" %s:%zu", d.name.c_str(), bad_here);

        const ComposeParams cp{-25.0, vidp_r.i_empty, vidp_r.i_min};
        endpoint_err = std::max(endpoint_err, std::abs(scale_intensity(cp.i_empty, cp)));
        endpoint_err = std::max(endpoint_err, std::abs(scale_intensity(cp.i_min, cp) - cp.phi));
        RenderParams flat;
        flat.phi = 0.0;
        const Rgb8Image z8 = quantize(renderer.render(flat).image);
        for (std::size_t k = 0; k < z8.data.size(); ++k) {
            phi0_max = std::max(phi0_max, std::abs(int(z8.data[k]) - int(c8.data[k])));
        }

        const LightConfig& l = vidp_r.light;
        light_ok = light_ok && l.elevation() == 60.0 && l.direction().y < 0.0;
        if (d.synthetic) {
            const NormalField n = exaggerated_normal(stage.structure_gradient, EtaField(5.0));
            const double v_auto = variance(lambert_shade(n, l, stage.grid));
            int beaten = 0;
            for (int a = 0; a < 12; ++a) {
                if (v_auto >= variance(lambert_shade(n, LightConfig(30.0 * a, 60.0), stage.grid))) ++beaten;
            }
            min_beaten = std::min(min_beaten, beaten);
            light_detail += fmt(" %s:%d", d.name.c_str(), beaten);
        }

        for (std::size_t k = 0; k < vidp_r.base.size(); ++k) {
            const Lab base = rgb_to_lab(vidp_r.base.pixels()[k]);
            const Lab target{base.l + vidp_r.scaled.values()[k], base.a, base.b};
            if (!(target.l > 0.0 && target.l < 100.0) || !in_srgb_gamut(target)) continue;
            ++eligible;
            const Lab out = rgb_to_lab(vidp_r.image.pixels()[k]);
            if (std::abs(out.a - base.a) <= 0.05 && std::abs(out.b - base.b) <= 0.05) ++preserved;
        }
    }

    report(4, violating == 0,
           fmt("empty-bin pixels: %zu of %zu differ by > 1/255 (max %zu/255)%s; flat-normal pixels: %zu of %zu differ",
               violating, checked, worst_diff, where.c_str(), flat_violating, flat));
    report(6, endpoint_err <= 1e-12 && phi0_max <= 1,
           fmt("rescale endpoint error %.1e (<= 1e-12); phi=0 vs CDP max channel diff %d/255", endpoint_err, phi0_max));
    report(7, light_ok && min_beaten >= 10,
           fmt("elevation 60 and L.y < 0 on all %zu datasets: %s; azimuths beaten of 12:%s", sets.size(),
               light_ok ? "yes" : "no", light_detail.c_str()));
    const double frac = eligible ? static_cast<double>(preserved) / static_cast<double>(eligible) : 0.0;
    report(8, eligible > 0 && frac >= 0.99,
           fmt("a*/b* within 0.05 on %.4f%% of %zu eligible pixels (>= 99%%)", 100.0 * frac, eligible));
}

void criterion5(const std::vector<Dataset>& sets) {
    double worst_norm = 0.0, worst_dir = 0.0;
    bool nz_positive = true;
    for (const Dataset& d : sets) {
        if (!d.synthetic) continue;
        const DensityStage stage = compute_density_stage(d.points, RenderParams{});
        const auto& g = stage.structure_gradient;
        const NormalField ref = exaggerated_normal(g, EtaField(1.0));
        for (double eta : {0.2, 1.0, 5.0, 20.0}) {
            const NormalField n = exaggerated_normal(g, EtaField(eta));
            for (std::size_t k = 0; k < n.size(); ++k) {
                const Vec3 v = n.normals()[k];
                worst_norm = std::max(worst_norm, std::abs(v.norm() - 1.0));
                nz_positive = nz_positive && v.z > 0.0;
                if (g.gx.values()[k] == 0.0 && g.gy.values()[k] == 0.0) continue;
                const Vec3 r = ref.normals()[k];
                const double hv = std::hypot(v.x, v.y), hr = std::hypot(r.x, r.y);
                worst_dir = std::max(worst_dir, std::abs(v.x / hv - r.x / hr));
                worst_dir = std::max(worst_dir, std::abs(v.y / hv - r.y / hr));
            }
        }
    }
    report(5, worst_norm <= 1e-6 && nz_positive && worst_dir <= 1e-9,
           fmt("eta in {0.2,1,5,20}: max | |N|-1 | %.1e, nz > 0: %s, horizontal direction drift %.1e (<= 1e-9)",
               worst_norm, nz_positive ? "yes" : "no", worst_dir));
}

void criterion10(const std::filesystem::path& dir) {
    SyntheticSpec spec;
    spec.points_per_cluster = 500000;
    spec.seed = 10;
    const auto csv = dir / "two_million.csv";
    write_points_csv(generate_synthetic(spec), csv);
    const std::string out = (dir / "two_million.png").string();
    const std::string input = csv.string();
    const char* argv[] = {"vidp", "render", "--input", input.c_str(), "--out", out.c_str()};
    std::ostringstream so, se;
    const auto t0 = Clock::now();
    const int rc = run_cli(6, argv, so, se);
    const double secs = seconds_since(t0);
    bool dims = false;
    if (rc == 0) {
        const Rgb8Image img = read_png(out);
        dims = img.width == 900 && img.height == 600;
    }
    report(10, rc == 0 && dims && secs < 10.0,
           fmt("2,002,000-point CSV -> 900x600 PNG via CLI in %.2f s (< 10 s)%s", secs,
               rc == 0 ? "" : (" error: " + se.str()).c_str()));
}

}  // namespace

int main() {
    test::TempDir dir;
    criterion1();
    criterion2();
    criterion3_and_9(dir.path());
    const auto sets = test_datasets();
    criterion4_6_7_8(sets);
    criterion5(sets);
    criterion10(dir.path());
    for (const auto& [id, line] : lines) std::printf("criterion %2d: %s\n", id, line.c_str());
    std::printf("%d of %zu criteria failed\n", failures, lines.size());
    return failures == 0 ? 0 : 1;
}
