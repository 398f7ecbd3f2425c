#pragma once

// Run configuration shared by the CLI subcommands: plain key=value files
// ('#' comments), with command-line flags overriding file values.

#include "lattesda/int_matrix.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace lattesda {

struct RunConfig {
    std::array<long long, 4> matrix{4, 1, 2, 1};
    double r{0.2};
    double mu{0.5};
    int width{512};
    int height{512};
    int max_iter{5000};
    double eps_attract{1e-3};
    double eps_invariance{0.0};  // 0 means 2 pixel widths
    double density_eps{0.05};
    double target_length{200.0};
    double delta{1e-3};
    std::uint64_t samples{1000};
    unsigned n_max{6};
    unsigned depth{6};
    std::uint64_t horizon{10000};
    unsigned seed_depth{8};
    std::string example{"shift"};
    std::uint64_t seed{42};
    std::string out_dir{"out"};
    int threads{0};

    IntMatrix2 int_matrix() const {
        return {matrix[0], matrix[1], matrix[2], matrix[3]};
    }
    double effective_eps_invariance() const {
        return eps_invariance > 0.0 ? eps_invariance : 2.0 / width;
    }

    // Stable key=value listing, echoed into report headers.
    std::vector<std::pair<std::string, std::string>> echo() const;
};

// Parse a key=value file into cfg (unknown keys are an error).
void load_config_file(RunConfig& cfg, const std::string& path);

// Apply one key=value entry; throws std::invalid_argument on bad input.
void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& value);

// Deterministic, locale-independent double formatting for reports.
std::string format_double(double v);

}  // namespace lattesda
