#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vidp/pipeline.hpp"

namespace vidp {

// Evaluation sweep over synthetic datasets.
struct BenchRow {
    std::uint64_t seed = 0;
    std::size_t points = 0;
    double dcd_vidp = 0.0;
    double dcd_idp = 0.0;
    double dcd_cdp = 0.0;
    LightConfig light = LightConfig(kFallbackAzimuth, kAutoElevation);
    double seconds = 0.0;
};

struct BenchOptions {
    std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
    int points_per_cluster = 25000;
    RenderParams params{};
    std::string out_dir;  // when set, PNGs are written per dataset and technique
};

std::vector<BenchRow> run_bench(const BenchOptions& options);

}  // namespace vidp
