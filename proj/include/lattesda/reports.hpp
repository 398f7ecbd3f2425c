#pragma once

// File emission for the CLI: CSV tables (comma-separated, header row, LF
// endings, effective config echoed as '#' comment lines) and text reports.

#include "lattesda/config.hpp"
#include "lattesda/lamination.hpp"
#include "lattesda/pillowcase.hpp"
#include "lattesda/repeller.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace lattesda {

void write_config_echo(std::ostream& out, const RunConfig& cfg);

void write_census_csv(const std::string& path, const RunConfig& cfg,
                      const std::vector<CensusRow>& rows);

void write_lattes_text(const std::string& path, const RunConfig& cfg, const LattesReport& report);
void write_lattes_csv(const std::string& path, const RunConfig& cfg, const LattesReport& report);

void write_surgery_csv(const std::string& path, const RunConfig& cfg, const SurgeryReport& report);

// Deterministic sample of `count` pixels over the whole raster:
// columns x1, x2, label, iterations_to_capture.
void write_pixel_samples_csv(const std::string& path, const RunConfig& cfg,
                             const RasterGrid& grid, std::size_t count, std::uint64_t seed);

void write_invariance_csv(const std::string& path, const RunConfig& cfg,
                          const InvarianceReport& report);

void write_suspension_csv(const std::string& path, const RunConfig& cfg,
                          const DenseLeafVerdict& verdict);

void write_lines(const std::string& path, const std::vector<std::string>& lines);

}  // namespace lattesda
