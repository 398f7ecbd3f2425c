#pragma once

// End-to-end run: surgery -> basins -> repeller sample -> invariance ->
// leaf trace -> density, with all file outputs and a pass/fail summary.

#include "lattesda/config.hpp"
#include "lattesda/repeller.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lattesda {

struct PipelineResult {
    bool degenerate{false};  // surgery disabled (r = 0): no attractors
    std::size_t b1_pixels{0}, b2_pixels{0}, k_pixels{0};
    double symmetric_agreement{0.0};
    std::optional<SurgeryReport> surgery;
    std::optional<InvarianceReport> invariance;
    double density{0.0};
    double leaf_arc_length{0.0};
    bool basins_nonempty_pass{false};
    bool symmetry_pass{false};
    bool invariance_pass{false};
    bool density_pass{false};
    std::vector<std::string> summary_lines;

    bool all_pass() const {
        if (degenerate) return true;  // documented negative-control outcome
        return basins_nonempty_pass && symmetry_pass && invariance_pass && density_pass;
    }
};

// Runs every stage and writes basins.ppm, census.csv, samples.csv,
// surgery.csv, invariance.csv and summary.txt into cfg.out_dir.
PipelineResult run_pipeline(const RunConfig& cfg);

}  // namespace lattesda
