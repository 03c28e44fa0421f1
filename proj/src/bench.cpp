#include "vidp/bench.hpp"

#include <chrono>
#include <filesystem>

#include "vidp/io.hpp"

namespace vidp {

std::vector<BenchRow> run_bench(const BenchOptions& options) {
    std::vector<BenchRow> rows;
    if (!options.out_dir.empty()) std::filesystem::create_directories(options.out_dir);
    for (std::uint64_t seed : options.seeds) {
        const auto start = std::chrono::steady_clock::now();
        SyntheticSpec spec;
        spec.seed = seed;
        spec.points_per_cluster = options.points_per_cluster;
        auto points = std::make_shared<const PointSet>(generate_synthetic(spec));
        StagedRenderer renderer(points);

        RenderParams params = options.params;
        params.technique = Technique::cdp;
        const Rgb8Image cdp = quantize(renderer.render(params).image);
        params.technique = Technique::vidp;
        const RenderResult vidp_result = renderer.render(params);
        const Rgb8Image vidp = quantize(vidp_result.image);
        params.technique = Technique::idp;
        const Rgb8Image idp = quantize(renderer.render(params).image);

        BenchRow row;
        row.seed = seed;
        row.points = points->size();
        row.dcd_vidp = dcd(vidp, cdp);
        row.dcd_idp = dcd(idp, cdp);
        row.dcd_cdp = dcd(cdp, cdp);
        row.light = vidp_result.light;

        if (!options.out_dir.empty()) {
            const std::filesystem::path dir(options.out_dir);
            const std::string stem = "seed" + std::to_string(seed) + "_";
            write_png(cdp, dir / (stem + "cdp.png"));
            write_png(vidp, dir / (stem + "vidp.png"));
            write_png(idp, dir / (stem + "idp.png"));
        }
        row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        rows.push_back(row);
    }
    return rows;
}

}  // namespace vidp
