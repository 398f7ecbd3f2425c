#include "lattesda/reports.hpp"

#include <fstream>

namespace lattesda {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);  // LF endings everywhere
    if (!out) throw std::runtime_error("cannot open output file " + path);
    return out;
}

struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

}  // namespace

void write_config_echo(std::ostream& out, const RunConfig& cfg) {
    for (const auto& [key, value] : cfg.echo()) out << "# " << key << "=" << value << "\n";
}

void write_census_csv(const std::string& path, const RunConfig& cfg,
                      const std::vector<CensusRow>& rows) {
    auto out = open_out(path);
    write_config_echo(out, cfg);
    out << "n,det_minus,det_plus,torus_count,sphere_count,log_rate\n";
    for (const auto& r : rows) {
        out << r.n << "," << r.det_minus << "," << r.det_plus << "," << r.torus_count << ","
            << r.sphere_count << "," << format_double(r.log_rate) << "\n";
    }
}

namespace {

std::string sphere_set_to_string(const std::set<SpherePoint>& points) {
    std::string out = "{";
    bool first = true;
    for (const auto& p : points) {
        if (!first) out += ", ";
        out += p.to_string();
        first = false;
    }
    return out + "}";
}

}  // namespace

void write_lattes_text(const std::string& path, const RunConfig& cfg, const LattesReport& report) {
    auto out = open_out(path);
    write_config_echo(out, cfg);
    out << "critical_points " << sphere_set_to_string(report.crit_f) << "\n";
    out << "critical_values " << sphere_set_to_string(report.crit_values_f) << "\n";
    out << "ram " << (report.ram ? "pass" : "FAIL") << "\n";
    out << "crit " << (report.crit ? "pass" : "FAIL") << "\n";
    out << "inv " << (report.inv ? "pass" : "FAIL") << "\n";
    out << "nonperiodic " << (report.nonperiodic ? "pass" : "FAIL") << "\n";
    out << "homology_hyperbolic " << (report.homology_hyperbolic ? "pass" : "FAIL") << "\n";
    out << "totally_invariant_fixed_point "
        << (report.has_totally_invariant_fixed_point ? "present" : "none") << "\n";
    out << "branch_orbit";
    for (const auto& [b, fb] : report.branch_orbit)
        out << " " << b.to_string() << "->" << fb.to_string();
    out << "\n";
    for (const auto& orbit : report.postcritical_orbits) {
        out << "postcritical_orbit " << orbit.start.to_string() << ":";
        for (std::size_t i = 0; i < orbit.orbit.size(); ++i) {
            out << " " << orbit.orbit[i].to_string();
            if (i + 1 == orbit.orbit.size()) out << " (cycle from index " << orbit.cycle_start << ")";
        }
        out << "\n";
    }
}

void write_lattes_csv(const std::string& path, const RunConfig& cfg, const LattesReport& report) {
    auto out = open_out(path);
    write_config_echo(out, cfg);
    out << "flag,value\n";
    out << "ram," << (report.ram ? 1 : 0) << "\n";
    out << "crit," << (report.crit ? 1 : 0) << "\n";
    out << "inv," << (report.inv ? 1 : 0) << "\n";
    out << "nonperiodic," << (report.nonperiodic ? 1 : 0) << "\n";
    out << "homology_hyperbolic," << (report.homology_hyperbolic ? 1 : 0) << "\n";
    out << "totally_invariant_fixed_point," << (report.has_totally_invariant_fixed_point ? 1 : 0)
        << "\n";
}

void write_surgery_csv(const std::string& path, const RunConfig& cfg,
                       const SurgeryReport& report) {
    auto out = open_out(path);
    write_config_echo(out, cfg);
    out << "kind,x1,x2,mult1,mult2,residual\n";
    auto row = [&](const char* kind, const FixedPointInfo& info) {
        Vec2 p = info.point.numeric_rep();
        out << kind << "," << format_double(p.x) << "," << format_double(p.y) << ","
            << format_double(info.multipliers[0]) << "," << format_double(info.multipliers[1])
            << "," << format_double(info.residual) << "\n";
    };
    row("attractor", report.attractors[0]);
    row("attractor", report.attractors[1]);
    row("saddle", report.saddles[0]);
    row("saddle", report.saddles[1]);
}

void write_pixel_samples_csv(const std::string& path, const RunConfig& cfg,
                             const RasterGrid& grid, std::size_t count, std::uint64_t seed) {
    auto out = open_out(path);
    write_config_echo(out, cfg);
    out << "x1,x2,label,iterations_to_capture\n";
    std::size_t total = grid.cells.size();
    SplitMix64 rng(seed);
    std::vector<std::size_t> indices;
    if (count >= total) {
        indices.resize(total);
        for (std::size_t i = 0; i < total; ++i) indices[i] = i;
    } else {
        indices.resize(total);
        for (std::size_t i = 0; i < total; ++i) indices[i] = i;
        for (std::size_t i = 0; i < count; ++i) {
            std::size_t j = i + std::size_t(rng.next() % (total - i));
            std::swap(indices[i], indices[j]);
        }
        indices.resize(count);
    }
    for (std::size_t idx : indices) {
        int iy = int(idx / std::size_t(grid.width));
        int ix = int(idx % std::size_t(grid.width));
        Vec2 p = grid.pixel_center(ix, iy);
        out << format_double(p.x) << "," << format_double(p.y) << ","
            << to_string(grid.cells[idx]) << "," << grid.capture_iters[idx] << "\n";
    }
}

void write_invariance_csv(const std::string& path, const RunConfig& cfg,
                          const InvarianceReport& report) {
    auto out = open_out(path);
    write_config_echo(out, cfg);
    out << "# total=" << report.total << " forward_ok=" << report.forward_ok
        << " backward_ok=" << report.backward_ok << "\n";
    out << "x1,x2,violation\n";
    for (const auto& v : report.violations)
        out << format_double(v.point.x) << "," << format_double(v.point.y) << "," << v.kind
            << "\n";
}

void write_suspension_csv(const std::string& path, const RunConfig& cfg,
                          const DenseLeafVerdict& verdict) {
    auto out = open_out(path);
    write_config_echo(out, cfg);
    out << "cylinder,count\n";
    for (const auto& [word, count] : verdict.visit_counts) out << word << "," << count << "\n";
}

void write_lines(const std::string& path, const std::vector<std::string>& lines) {
    auto out = open_out(path);
    for (const auto& line : lines) out << line << "\n";
}

}  // namespace lattesda
