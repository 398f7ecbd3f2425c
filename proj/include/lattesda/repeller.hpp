#pragma once

// Basin rasterization, the repeller sample set K, complete-invariance
// checks, unstable-leaf tracing and the leaf-density statistic.

#include "lattesda/surgery.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace lattesda {

struct SegmentCollapse : std::runtime_error {
    explicit SegmentCollapse(const std::string& what) : std::runtime_error(what) {}
};

enum class BasinLabel : std::uint8_t { B1 = 0, B2 = 1, KCandidate = 2, Undecided = 3 };

const char* to_string(BasinLabel label);

// Raster over [0,1)^2; cells are row-major with row 0 on top, so the pixel
// center of cell (ix, iy) is ((ix+0.5)/w, (h-iy-0.5)/h).
struct RasterGrid {
    int width{0}, height{0};
    std::vector<BasinLabel> cells;
    std::vector<std::int32_t> capture_iters;  // -1 when never captured

    BasinLabel at(int ix, int iy) const { return cells[index(ix, iy)]; }
    std::size_t index(int ix, int iy) const {
        return static_cast<std::size_t>(iy) * static_cast<std::size_t>(width) +
               static_cast<std::size_t>(ix);
    }
    Vec2 pixel_center(int ix, int iy) const {
        return {(ix + 0.5) / width, (height - iy - 0.5) / height};
    }

    std::size_t count(BasinLabel label) const;
    // Fraction of cells whose label matches the cell of the negated point.
    double symmetric_agreement() const;
};

struct ClassifyResult {
    BasinLabel label{BasinLabel::Undecided};
    int iterations{0};  // steps until capture; max_iter when not captured
};

// Iterate the sphere map and label on first entry into an attractor ball.
// With the surgery disabled (r = 0) there are no attractors and every point
// is reported K_candidate.
ClassifyResult classify_torus_point(const PerturbedMap& P, const Vec2& x, int max_iter,
                                    double eps_attract);
BasinLabel classify_point(const PerturbedMap& P, const SpherePoint& s, int max_iter,
                          double eps_attract);

// Sample each attractor-ball boundary and require the image to stay inside;
// throws std::runtime_error asking for a smaller eps_attract on failure.
void verify_attractor_balls(const PerturbedMap& P, double eps_attract, int samples = 1000);

// Full raster; deterministic for fixed parameters regardless of the number
// of threads (pixels are classified independently).
RasterGrid compute_basins(const PerturbedMap& P, int width, int height, int max_iter = 5000,
                          double eps_attract = 1e-3, int threads = 0);

struct Palette {
    std::array<std::array<std::uint8_t, 3>, 4> rgb;  // indexed by BasinLabel
    static Palette defaults() {
        Palette p;
        p.rgb[0] = {0, 90, 200};    // B1
        p.rgb[1] = {200, 60, 0};    // B2
        p.rgb[2] = {0, 0, 0};       // K_candidate
        p.rgb[3] = {128, 128, 128}; // undecided
        return p;
    }
};

// Binary PPM: "P6\n<width> <height>\n255\n" + RGB triples, row-major, top
// row first. Byte-identical for identical inputs.
void render_ppm(const RasterGrid& grid, const Palette& palette, const std::string& path);

// Deterministic sample of K_candidate pixel centers (splitmix-based).
std::vector<Vec2> sample_k_points(const RasterGrid& grid, std::size_t count, std::uint64_t seed);

// Proximity queries against the K_candidate pixel set.
class KPixelIndex {
public:
    explicit KPixelIndex(const RasterGrid& grid);
    // True iff some K_candidate pixel center is within eps of the class of p.
    bool near(const Vec2& p, double eps) const;
    std::size_t k_count() const { return k_count_; }

private:
    bool near_lift(const Vec2& p, double eps) const;
    int width_, height_;
    std::vector<std::uint8_t> is_k_;
    std::size_t k_count_{0};
};

struct InvarianceViolation {
    Vec2 point;
    std::string kind;  // "forward" or "backward"
};

struct InvarianceReport {
    std::size_t total{0};
    std::size_t forward_ok{0};
    std::size_t backward_ok{0};
    std::vector<InvarianceViolation> violations;

    double forward_rate() const { return total ? double(forward_ok) / double(total) : 0.0; }
    double backward_rate() const { return total ? double(backward_ok) / double(total) : 0.0; }
    bool passed(double threshold = 0.99) const {
        return total > 0 && forward_rate() >= threshold && backward_rate() >= threshold;
    }
};

// Forward: F(k) within eps of the reference set. Backward: both F-preimages
// within eps of the reference set. Newton failures count as violations.
InvarianceReport invariance_check(const std::vector<Vec2>& samples, const KPixelIndex& reference,
                                  const PerturbedMap& P, double eps);

struct LeafTrace {
    std::vector<Vec2> polyline;  // canonical sphere representatives
    double arc_length{0.0};
    int generations{0};
};

// Grow the forward-expanding invariant curve through `start` (a verified K
// point, typically the saddle p1): iterate a short segment of the unstable
// axis, re-subdividing so consecutive images stay within delta. Throws
// SegmentCollapse when the segment fails to expand to the target length.
LeafTrace trace_unstable_leaf(const PerturbedMap& P, const Vec2& start_canonical,
                              double target_length, double delta = 1e-3,
                              std::size_t point_budget = 4000000, int max_generations = 400);

// Fraction of the K sample within eps of the trace polyline.
double density_statistic(const LeafTrace& trace, const std::vector<Vec2>& k_samples, double eps);

}  // namespace lattesda
