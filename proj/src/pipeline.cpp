#include "lattesda/pipeline.hpp"

#include "lattesda/pillowcase.hpp"
#include "lattesda/reports.hpp"

#include <filesystem>

namespace lattesda {

PipelineResult run_pipeline(const RunConfig& cfg) {
    std::filesystem::create_directories(cfg.out_dir);
    auto path = [&](const char* name) {
        return (std::filesystem::path(cfg.out_dir) / name).string();
    };

    PipelineResult result;
    IntMatrix2 M = cfg.int_matrix();
    SurgeryProfile profile(cfg.r, cfg.mu);
    PerturbedMap P(M, profile);

    write_census_csv(path("census.csv"), cfg, periodic_census(M, cfg.n_max));

    if (P.surgery_enabled()) {
        result.surgery = find_saddles(P);
        write_surgery_csv(path("surgery.csv"), cfg, *result.surgery);
    } else {
        result.degenerate = true;
    }

    RasterGrid grid =
        compute_basins(P, cfg.width, cfg.height, cfg.max_iter, cfg.eps_attract, cfg.threads);
    render_ppm(grid, Palette::defaults(), path("basins.ppm"));
    write_pixel_samples_csv(path("samples.csv"), cfg, grid, cfg.samples, cfg.seed);

    result.b1_pixels = grid.count(BasinLabel::B1);
    result.b2_pixels = grid.count(BasinLabel::B2);
    result.k_pixels = grid.count(BasinLabel::KCandidate);
    result.symmetric_agreement = grid.symmetric_agreement();
    result.basins_nonempty_pass =
        result.b1_pixels > 0 && result.b2_pixels > 0 && result.k_pixels > 0;
    result.symmetry_pass = result.symmetric_agreement >= 0.999;

    std::vector<std::string> summary;
    for (const auto& [key, value] : cfg.echo()) summary.push_back("# " + key + "=" + value);

    if (result.degenerate) {
        summary.push_back("DEGENERATE r=0: surgery disabled, no attractors exist");
        summary.push_back("K_candidate pixels: " + std::to_string(result.k_pixels) + " of " +
                          std::to_string(grid.cells.size()));
        summary.push_back("B1 pixels: " + std::to_string(result.b1_pixels) + " (expected 0)");
        summary.push_back("B2 pixels: " + std::to_string(result.b2_pixels) + " (expected 0)");
        write_lines(path("summary.txt"), summary);
        result.summary_lines = summary;
        return result;
    }

    double eps = cfg.effective_eps_invariance();
    KPixelIndex reference(grid);
    std::vector<Vec2> k_samples = sample_k_points(grid, cfg.samples, cfg.seed);
    if (k_samples.empty()) throw std::runtime_error("pipeline: no K_candidate pixels found");
    result.invariance = invariance_check(k_samples, reference, P, eps);
    result.invariance_pass = result.invariance->passed(0.99);
    write_invariance_csv(path("invariance.csv"), cfg, *result.invariance);

    Vec2 p1 = result.surgery->saddles[0].point.numeric_rep();
    LeafTrace trace = trace_unstable_leaf(P, p1, cfg.target_length, cfg.delta);
    result.leaf_arc_length = trace.arc_length;
    result.density = density_statistic(trace, k_samples, cfg.density_eps);
    result.density_pass = result.density >= 0.95;

    auto pf = [](bool ok) { return ok ? "PASS" : "FAIL"; };
    summary.push_back(std::string(pf(result.basins_nonempty_pass)) +
                      " basins nonempty: B1=" + std::to_string(result.b1_pixels) +
                      " B2=" + std::to_string(result.b2_pixels) +
                      " K=" + std::to_string(result.k_pixels));
    summary.push_back(std::string(pf(result.symmetry_pass)) + " symmetric-cell agreement " +
                      format_double(result.symmetric_agreement) + " (>= 0.999)");
    summary.push_back(std::string(pf(result.invariance_pass)) + " complete invariance: forward " +
                      format_double(result.invariance->forward_rate()) + ", backward " +
                      format_double(result.invariance->backward_rate()) + " (>= 0.99 at eps=" +
                      format_double(eps) + ")");
    summary.push_back(std::string(pf(result.density_pass)) + " leaf density " +
                      format_double(result.density) + " (>= 0.95 at eps=" +
                      format_double(cfg.density_eps) + ", arc length " +
                      format_double(trace.arc_length) + ")");
    write_lines(path("summary.txt"), summary);
    result.summary_lines = summary;
    return result;
}

}  // namespace lattesda
