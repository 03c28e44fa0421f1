#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "support.hpp"
#include "vidp/errors.hpp"
#include "vidp/pipeline.hpp"

using namespace vidp;

namespace {

const PointSet& small_dataset() {
    static const PointSet pts = [] {
        SyntheticSpec spec;
        spec.points_per_cluster = 4000;
        spec.seed = 7;
        return generate_synthetic(spec);
    }();
    return pts;
}

RenderParams small_params() {
    RenderParams p;
    p.width = 150;
    p.height = 100;
    return p;
}

bool same_pixels(const RgbImage& a, const RgbImage& b) {
    if (a.width() != b.width() || a.height() != b.height()) return false;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (!(a.pixels()[k] == b.pixels()[k])) return false;
    }
    return true;
}

}  // namespace

TEST(Pipeline, CdpIgnoresShadingParameters) {
    RenderParams p = small_params();
    p.technique = Technique::cdp;
    const RgbImage ref = render(small_dataset(), p);
    p.eta = EtaField(20.0);
    p.phi = -80.0;
    p.light = LightConfig(10.0, 30.0);
    EXPECT_TRUE(same_pixels(ref, render(small_dataset(), p)));
}

TEST(Pipeline, ZeroPhiReproducesCdp) {
    RenderParams p = small_params();
    p.phi = 0.0;
    const RgbImage vidp = render(small_dataset(), p);
    p.technique = Technique::cdp;
    EXPECT_TRUE(same_pixels(vidp, render(small_dataset(), p)));
}

TEST(Pipeline, VidpChangesImageAndKeepsShape) {
    const RenderParams p = small_params();
    const RenderResult r = render_detailed(small_dataset(), p);
    EXPECT_EQ(r.image.width(), 150);
    EXPECT_EQ(r.image.height(), 100);
    EXPECT_FALSE(same_pixels(r.image, r.base));
    EXPECT_DOUBLE_EQ(r.light.elevation(), kAutoElevation);
    EXPECT_NEAR(r.i_empty, std::sin(kAutoElevation * std::numbers::pi / 180.0), 1e-12);
    EXPECT_LE(r.i_min, r.i_empty);
    // The darkest pixel reaches phi; slopes facing the light brighten.
    EXPECT_NEAR(r.scaled.min(), p.phi, 1e-9);
    EXPECT_GT(r.scaled.max(), 0.0);
}

TEST(Pipeline, IdpUsesBaselineLight) {
    RenderParams p = small_params();
    p.technique = Technique::idp;
    const RenderResult r = render_detailed(small_dataset(), p);
    EXPECT_DOUBLE_EQ(r.light.azimuth(), 120.0);
    EXPECT_DOUBLE_EQ(r.light.elevation(), 45.0);
    EXPECT_FALSE(same_pixels(r.image, r.base));
}

TEST(Pipeline, DarkBackgroundMapsEmptyToDarkEnd) {
    RenderParams p = small_params();
    p.background = Background::dark;
    p.technique = Technique::cdp;
    const RgbImage dark = render(small_dataset(), p);
    p.background = Background::light;
    const RgbImage light = render(small_dataset(), p);
    const Rgb d = dark(0, 0), l = light(0, 0);
    EXPECT_LT(d.r + d.g + d.b, l.r + l.g + l.b);
}

TEST(Pipeline, DarkBackgroundBrightensStructure) {
    RenderParams p = small_params();
    p.background = Background::dark;
    const RenderResult r = render_detailed(small_dataset(), p);
    EXPECT_NEAR(r.scaled.max(), -p.phi, 1e-9);
}

TEST(Pipeline, ValidateRejectsBadParams) {
    auto bad = [](auto mutate) {
        RenderParams p;
        mutate(p);
        return p;
    };
    EXPECT_THROW(bad([](RenderParams& p) { p.width = 2; }).validate(), InvalidParams);
    EXPECT_THROW(bad([](RenderParams& p) { p.height = 20000; }).validate(), InvalidParams);
    EXPECT_THROW(bad([](RenderParams& p) { p.h_large = 0.0; }).validate(), InvalidParams);
    EXPECT_THROW(bad([](RenderParams& p) { p.h_small = -1.0; }).validate(), InvalidParams);
    EXPECT_THROW(bad([](RenderParams& p) { p.phi = NAN; }).validate(), InvalidParams);
    EXPECT_THROW(bad([](RenderParams& p) { p.padding_fraction = 1.0; }).validate(), InvalidParams);
    EXPECT_THROW(bad([](RenderParams& p) { p.eta = EtaField(2, 2, {1, 1, 1, 1}); }).validate(),
                 InvalidParams);
    EXPECT_NO_THROW(RenderParams{}.validate());
    EXPECT_THROW(technique_from_string("phong"), InvalidParams);
    EXPECT_THROW(background_from_string("grey"), InvalidParams);
    EXPECT_EQ(technique_from_string("idp"), Technique::idp);
    EXPECT_EQ(to_string(Background::dark), "dark");
}

TEST(Pipeline, UnknownColormapIsInvalid) {
    RenderParams p = small_params();
    p.colormap = "no-such-map";
    EXPECT_THROW(render(small_dataset(), p), InvalidParams);
}

TEST(Pipeline, IsolatedPointDogValue) {
    const PointSet pts({{0.5, 0.5}}, Bounds{0, 1, 0, 1});
    RenderParams p;
    p.width = 101;
    p.height = 101;
    p.padding_fraction = 0.0;
    p.h_large = 0.1;
    p.h_small = 0.02;
    const DensityStage s = compute_density_stage(pts, p);
    const double expect = (1.0 / (0.1 * 0.1) - 1.0 / (0.02 * 0.02)) / (2.0 * std::numbers::pi);
    EXPECT_NEAR(s.f_large(50, 50) - s.f_small(50, 50), expect, 1e-9 * std::abs(expect));
    EXPECT_LT(s.structure(50, 50), 0.0);
    EXPECT_DOUBLE_EQ(height_scale(s.grid), 1.0);
    EXPECT_NEAR(s.structure(50, 50), expect, 1e-9 * std::abs(expect));
}

TEST(Pipeline, DensityStageBandwidthDefaults) {
    const DensityStage s = compute_density_stage(small_dataset(), small_params());
    EXPECT_NEAR(s.h_large, silverman_bandwidth(small_dataset()), 1e-15);
    EXPECT_NEAR(s.h_small, s.grid.cell_width(), 1e-15);
    EXPECT_EQ(s.grid.bounds(), small_dataset().bounds().padded(0.05));
    EXPECT_NEAR(s.counts.sum(), static_cast<double>(small_dataset().size()), 1e-6);
}

TEST(StagedRendererTest, EditsMatchColdRender) {
    auto pts = std::make_shared<const PointSet>(small_dataset());
    StagedRenderer staged(pts);
    RenderParams p = small_params();
    staged.render(p);

    std::vector<RenderParams> edits;
    p.eta = EtaField(12.0);
    edits.push_back(p);
    p.phi = -40.0;
    edits.push_back(p);
    p.light = LightConfig(200.0, 35.0);
    edits.push_back(p);
    p.colormap = "viridis";
    edits.push_back(p);
    p.technique = Technique::idp;
    edits.push_back(p);
    p.technique = Technique::vidp;
    p.eta = local_eta_apply(EtaField(5.0), BrushRegion::rect(20, 20, 60, 50), 15.0, 3.0, 150, 100);
    edits.push_back(p);

    for (const auto& e : edits) {
        const RgbImage warm = staged.render(e).image;
        EXPECT_TRUE(same_pixels(warm, render(*pts, e)));
    }
    EXPECT_EQ(staged.density_computations(), 1);

    p.width = 120;
    p.eta = EtaField(5.0);
    const RgbImage resized = staged.render(p).image;
    EXPECT_EQ(staged.density_computations(), 2);
    EXPECT_TRUE(same_pixels(resized, render(*pts, p)));
}

TEST(StagedRendererTest, AutoLightMatchesRender) {
    StagedRenderer staged(std::make_shared<const PointSet>(small_dataset()));
    const RenderParams p = small_params();
    EXPECT_EQ(staged.auto_light_for(p), staged.render(p).light);
}

TEST(Synthetic, CountsAndDeterminism) {
    SyntheticSpec spec;
    const SyntheticDataset full = generate_synthetic_dataset(spec);
    EXPECT_EQ(full.points.size(), 100100u);
    EXPECT_EQ(full.outlier_count, 100u);
    EXPECT_EQ(full.clusters.size(), 4u);
    for (const auto& c : full.clusters) {
        EXPECT_GE(c.mean.x, 0.0);
        EXPECT_LE(c.mean.x, 1.0);
        EXPECT_GE(c.sd_x, 0.02);
        EXPECT_LE(c.sd_y, 0.08);
    }

    spec.points_per_cluster = 10000;
    const SyntheticDataset a = generate_synthetic_dataset(spec);
    const SyntheticDataset b = generate_synthetic_dataset(spec);
    EXPECT_EQ(a.outlier_count, 40u);
    ASSERT_EQ(a.points.size(), b.points.size());
    for (std::size_t k = 0; k < a.points.size(); ++k) {
        EXPECT_EQ(a.points.points()[k].x, b.points.points()[k].x);
        EXPECT_EQ(a.points.points()[k].y, b.points.points()[k].y);
    }
    spec.seed = 2;
    const SyntheticDataset c = generate_synthetic_dataset(spec);
    EXPECT_NE(a.points.points()[0].x, c.points.points()[0].x);

    spec.cluster_count = 0;
    EXPECT_THROW(generate_synthetic_dataset(spec), InvalidParams);
}

TEST(Brush, WeightsInsideAndFalloff) {
    const auto w = brush_weights(BrushRegion::rect(10, 10, 19, 19), 40, 40, 2.0);
    EXPECT_EQ(w[15 * 40 + 15], 1.0);
    EXPECT_EQ(w[10 * 40 + 10], 1.0);
    EXPECT_NEAR(w[15 * 40 + 21], std::exp(-4.0 / 8.0), 1e-12);
    EXPECT_EQ(w[15 * 40 + 26], 0.0);
    EXPECT_EQ(w[0], 0.0);
}

TEST(Brush, RectCornersInAnyOrder) {
    EXPECT_EQ(brush_weights(BrushRegion::rect(19, 19, 10, 10), 40, 40, 2.0),
              brush_weights(BrushRegion::rect(10, 10, 19, 19), 40, 40, 2.0));
    EXPECT_EQ(brush_weights(BrushRegion::rect(10, 19, 19, 10), 40, 40, 0.0),
              brush_weights(BrushRegion::rect(10, 10, 19, 19), 40, 40, 0.0));
}

TEST(Brush, PolygonContainment) {
    const auto w = brush_weights(BrushRegion::poly({{0, 0}, {20, 0}, {0, 20}}), 30, 30, 0.0);
    EXPECT_EQ(w[2 * 30 + 2], 1.0);
    EXPECT_EQ(w[18 * 30 + 18], 0.0);
}

TEST(Brush, EmptyRegionReturnsBase) {
    const EtaField base(5.0);
    const EtaField out = local_eta_apply(base, BrushRegion::rect(10.2, 10.2, 10.4, 10.4), 20.0, 0.0, 30, 20);
    for (std::size_t k = 0; k < 600; ++k) EXPECT_EQ(out.at(k), 5.0);
}

TEST(Brush, FullImageIsUniform) {
    const EtaField out = local_eta_apply(EtaField(5.0), BrushRegion::rect(0, 0, 29, 19), 9.0, 0.0, 30, 20);
    for (std::size_t k = 0; k < 600; ++k) EXPECT_EQ(out.at(k), 9.0);
}

TEST(Brush, HalfImageMonotone) {
    const int w = 40, h = 10;
    const EtaField out = local_eta_apply(EtaField(2.0), BrushRegion::rect(0, 0, 19, 9), 10.0, 4.0, w, h);
    for (int j = 0; j < h; ++j) {
        for (int i = 1; i < w; ++i) {
            EXPECT_LE(out.at(j * w + i), out.at(j * w + i - 1));
        }
        EXPECT_EQ(out.at(j * w), 10.0);
        EXPECT_EQ(out.at(j * w + w - 1), 2.0);
    }
}

TEST(Brush, InvalidInputs) {
    EXPECT_THROW(brush_weights(BrushRegion::rect(100, 100, 120, 120), 30, 30, 1.0), InvalidRegion);
    EXPECT_THROW(brush_weights(BrushRegion::rect(0, 0, NAN, 3), 30, 30, 1.0), InvalidRegion);
    EXPECT_THROW(brush_weights(BrushRegion::rect(0, 0, 5, 5), 30, 30, -1.0), InvalidRegion);
    EXPECT_THROW(local_eta_apply(EtaField(5.0), BrushRegion::rect(0, 0, 5, 5), 0.0, 1.0, 30, 30),
                 InvalidParams);
}

TEST(Brush, ZeroWeightPixelsUnchangedWithFrozenLightAndFloor) {
    StagedRenderer staged(std::make_shared<const PointSet>(small_dataset()));
    RenderParams p = small_params();
    const RenderResult before = staged.render(p);
    p.light = before.light;
    p.intensity_floor = before.i_min;
    ASSERT_TRUE(same_pixels(before.image, staged.render(p).image));

    const BrushRegion region = BrushRegion::rect(40, 30, 90, 70);
    const double feather = 3.0;
    p.eta = local_eta_apply(p.eta, region, 20.0, feather, p.width, p.height);
    const RenderResult after = staged.render(p);
    const auto w = brush_weights(region, p.width, p.height, feather);

    std::size_t changed_inside = 0;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (w[k] == 0.0) {
            EXPECT_TRUE(before.image.pixels()[k] == after.image.pixels()[k]) << "pixel " << k;
        } else if (!(before.image.pixels()[k] == after.image.pixels()[k])) {
            ++changed_inside;
        }
    }
    EXPECT_GT(changed_inside, 0u);
}
