#include "lattesda/repeller.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <thread>
#include <unordered_map>

namespace lattesda {

const char* to_string(BasinLabel label) {
    switch (label) {
        case BasinLabel::B1: return "B1";
        case BasinLabel::B2: return "B2";
        case BasinLabel::KCandidate: return "K_candidate";
        case BasinLabel::Undecided: return "undecided";
    }
    return "?";
}

std::size_t RasterGrid::count(BasinLabel label) const {
    return static_cast<std::size_t>(std::count(cells.begin(), cells.end(), label));
}

double RasterGrid::symmetric_agreement() const {
    // The cell of -x for the center of (ix, iy) is (w-1-ix, h-1-iy).
    std::size_t agree = 0;
    for (int iy = 0; iy < height; ++iy)
        for (int ix = 0; ix < width; ++ix)
            if (at(ix, iy) == at(width - 1 - ix, height - 1 - iy)) ++agree;
    return double(agree) / double(std::size_t(width) * std::size_t(height));
}

ClassifyResult classify_torus_point(const PerturbedMap& P, const Vec2& x0, int max_iter,
                                    double eps_attract) {
    Vec2 x = wrap_unit(x0);
    if (!P.surgery_enabled()) return {BasinLabel::KCandidate, max_iter};
    const Vec2 a1{0.0, 0.0}, a2{0.5, 0.5};
    for (int it = 0; it < max_iter; ++it) {
        if (torus_distance(x, a1) <= eps_attract) return {BasinLabel::B1, it};
        if (torus_distance(x, a2) <= eps_attract) return {BasinLabel::B2, it};
        x = P.torus_apply(x);
    }
    return {BasinLabel::KCandidate, max_iter};
}

BasinLabel classify_point(const PerturbedMap& P, const SpherePoint& s, int max_iter,
                          double eps_attract) {
    return classify_torus_point(P, s.numeric_rep(), max_iter, eps_attract).label;
}

void verify_attractor_balls(const PerturbedMap& P, double eps_attract, int samples) {
    if (!P.surgery_enabled())
        throw std::runtime_error("verify_attractor_balls: surgery disabled, no attractors");
    for (const Vec2& c : P.attractor_centers()) {
        for (int i = 0; i < samples; ++i) {
            double theta = 2.0 * M_PI * i / samples;
            Vec2 p = c + Vec2{eps_attract * std::cos(theta), eps_attract * std::sin(theta)};
            Vec2 image = P.torus_apply(p);
            if (torus_distance(image, c) > eps_attract)
                throw std::runtime_error(
                    "verify_attractor_balls: ball of radius " + std::to_string(eps_attract) +
                    " is not forward-invariant; shrink eps_attract");
        }
    }
}

RasterGrid compute_basins(const PerturbedMap& P, int width, int height, int max_iter,
                          double eps_attract, int threads) {
    if (width < 16 || height < 16)
        throw std::invalid_argument("compute_basins: raster must be at least 16x16");
    if (P.surgery_enabled()) verify_attractor_balls(P, eps_attract);

    RasterGrid grid;
    grid.width = width;
    grid.height = height;
    grid.cells.assign(std::size_t(width) * std::size_t(height), BasinLabel::Undecided);
    grid.capture_iters.assign(grid.cells.size(), -1);

    auto classify_rows = [&](int row_begin, int row_end) {
        for (int iy = row_begin; iy < row_end; ++iy) {
            for (int ix = 0; ix < width; ++ix) {
                ClassifyResult r =
                    classify_torus_point(P, grid.pixel_center(ix, iy), max_iter, eps_attract);
                std::size_t idx = grid.index(ix, iy);
                grid.cells[idx] = r.label;
                grid.capture_iters[idx] =
                    (r.label == BasinLabel::B1 || r.label == BasinLabel::B2) ? r.iterations : -1;
            }
        }
    };

    int n_threads = threads > 0 ? threads : int(std::thread::hardware_concurrency());
    if (n_threads <= 1 || height < 2 * n_threads) {
        classify_rows(0, height);
    } else {
        std::vector<std::thread> pool;
        int chunk = (height + n_threads - 1) / n_threads;
        for (int t = 0; t < n_threads; ++t) {
            int lo = t * chunk;
            int hi = std::min(height, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(classify_rows, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    return grid;
}

void render_ppm(const RasterGrid& grid, const Palette& palette, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("render_ppm: cannot open " + path);
    out << "P6\n" << grid.width << " " << grid.height << "\n255\n";
    std::vector<std::uint8_t> row(std::size_t(grid.width) * 3);
    for (int iy = 0; iy < grid.height; ++iy) {
        for (int ix = 0; ix < grid.width; ++ix) {
            const auto& rgb = palette.rgb[static_cast<std::size_t>(grid.at(ix, iy))];
            row[std::size_t(ix) * 3 + 0] = rgb[0];
            row[std::size_t(ix) * 3 + 1] = rgb[1];
            row[std::size_t(ix) * 3 + 2] = rgb[2];
        }
        out.write(reinterpret_cast<const char*>(row.data()), std::streamsize(row.size()));
    }
    if (!out) throw std::runtime_error("render_ppm: write failed for " + path);
}

namespace {

// Deterministic RNG independent of the standard library implementation.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
    double unit() { return (next() >> 11) * 0x1.0p-53; }
};

}  // namespace

std::vector<Vec2> sample_k_points(const RasterGrid& grid, std::size_t count, std::uint64_t seed) {
    std::vector<Vec2> all;
    for (int iy = 0; iy < grid.height; ++iy)
        for (int ix = 0; ix < grid.width; ++ix)
            if (grid.at(ix, iy) == BasinLabel::KCandidate) all.push_back(grid.pixel_center(ix, iy));
    if (all.size() <= count) return all;

    // Partial Fisher-Yates with an explicit generator for reproducibility.
    SplitMix64 rng(seed);
    std::vector<Vec2> picked;
    picked.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t j = i + std::size_t(rng.below(all.size() - i));
        std::swap(all[i], all[j]);
        picked.push_back(all[i]);
    }
    return picked;
}

KPixelIndex::KPixelIndex(const RasterGrid& grid)
    : width_(grid.width), height_(grid.height), is_k_(grid.cells.size(), 0) {
    for (std::size_t i = 0; i < grid.cells.size(); ++i) {
        if (grid.cells[i] == BasinLabel::KCandidate) {
            is_k_[i] = 1;
            ++k_count_;
        }
    }
}

bool KPixelIndex::near_lift(const Vec2& p, double eps) const {
    // Pixel (ix, iy) center is ((ix+0.5)/w, (h-iy-0.5)/h).
    int cx = int(std::floor(wrap_unit(p.x) * width_ - 0.5));
    int cy = int(std::floor((1.0 - wrap_unit(p.y)) * height_ - 0.5));
    int rx = int(std::ceil(eps * width_)) + 1;
    int ry = int(std::ceil(eps * height_)) + 1;
    for (int dy = -ry; dy <= ry; ++dy) {
        int iy = ((cy + dy) % height_ + height_) % height_;
        for (int dx = -rx; dx <= rx; ++dx) {
            int ix = ((cx + dx) % width_ + width_) % width_;
            if (!is_k_[std::size_t(iy) * std::size_t(width_) + std::size_t(ix)]) continue;
            Vec2 center{(ix + 0.5) / width_, (height_ - iy - 0.5) / height_};
            if (torus_distance(p, center) <= eps) return true;
        }
    }
    return false;
}

bool KPixelIndex::near(const Vec2& p, double eps) const {
    return near_lift(p, eps) || near_lift(Vec2{-p.x, -p.y}, eps);
}

InvarianceReport invariance_check(const std::vector<Vec2>& samples, const KPixelIndex& reference,
                                  const PerturbedMap& P, double eps) {
    if (samples.empty()) throw std::invalid_argument("invariance_check: empty sample set");
    InvarianceReport report;
    report.total = samples.size();
    for (const Vec2& k : samples) {
        Vec2 image = P.sphere_apply_numeric(k);
        if (reference.near(image, eps)) {
            ++report.forward_ok;
        } else {
            report.violations.push_back({k, "forward"});
        }

        bool back_ok = true;
        for (const auto& branch : preimages_perturbed(P, k)) {
            if (!branch.converged || !reference.near(branch.point, eps)) back_ok = false;
        }
        if (back_ok) {
            ++report.backward_ok;
        } else {
            report.violations.push_back({k, "backward"});
        }
    }
    return report;
}

LeafTrace trace_unstable_leaf(const PerturbedMap& P, const Vec2& start_canonical,
                              double target_length, double delta, std::size_t point_budget,
                              int max_generations) {
    const Vec2 start = start_canonical;

    // Expanding direction at the seed, oriented away from the nearest center
    // (the inward branch of the unstable axis falls into the basin).
    Mat2d J = fd_jacobian([&P](const Vec2& x) { return P.lift_apply(x); }, start, 1e-6);
    Vec2 dir;
    if (auto ev = real_eigenvalues(J)) {
        dir = eigenvector_for(J, (*ev)[0]);
    } else {
        dir = Vec2{1.0, 0.0};
    }
    Vec2 outward = start - P.nearest_center(start);
    if (outward.norm2() > 1e-20 && dir.dot(outward) < 0.0) dir = -dir;

    // Fundamental domain on the local manifold: the arc between q0 and G(q0),
    // parametrized by the chord.
    const double seed_offset = 1e-6;
    Vec2 q0 = start + dir * seed_offset;
    Vec2 q1 = P.lift_apply(q0);

    struct Node {
        double t;
        Vec2 p;  // G^gen(gamma(t)), wrapped to the torus
    };
    auto gamma = [&](double t) { return wrap_unit(q0 + (q1 - q0) * t); };

    std::vector<Node> nodes{{0.0, gamma(0.0)}, {1.0, gamma(1.0)}};
    int generation = 0;

    LeafTrace trace;
    trace.polyline.push_back(canonical_rep(nodes.front().p));
    trace.arc_length += sphere_distance(trace.polyline.back(), canonical_rep(nodes.back().p));
    trace.polyline.push_back(canonical_rep(nodes.back().p));

    std::size_t total_points = 0;
    while (trace.arc_length < target_length) {
        if (++generation > max_generations)
            throw SegmentCollapse("trace_unstable_leaf: arc length " +
                                  std::to_string(trace.arc_length) + " after " +
                                  std::to_string(max_generations) +
                                  " generations; segment is not expanding (wrong seed?)");

        // Advance every cached node by one application.
        std::vector<Node> next;
        next.reserve(nodes.size());
        for (const Node& n : nodes) next.push_back({n.t, P.torus_apply(n.p)});

        // Recompute gamma(t) through `generation` applications (used for
        // freshly inserted parameters only).
        auto evaluate = [&](double t) {
            Vec2 p = gamma(t);
            for (int g = 0; g < generation; ++g) p = P.torus_apply(p);
            return p;
        };

        // Refine until consecutive images are within delta.
        std::vector<Node> refined;
        refined.push_back(next.front());
        for (std::size_t i = 1; i < next.size(); ++i) {
            std::vector<Node> stack{next[i]};
            while (!stack.empty()) {
                Node hi = stack.back();
                const Node& lo = refined.back();
                if (sphere_distance(canonical_rep(lo.p), canonical_rep(hi.p)) <= delta) {
                    refined.push_back(hi);
                    stack.pop_back();
                    continue;
                }
                double tm = 0.5 * (lo.t + hi.t);
                if (tm <= lo.t || tm >= hi.t)
                    throw SegmentCollapse(
                        "trace_unstable_leaf: parameter resolution exhausted at generation " +
                        std::to_string(generation));
                stack.push_back({tm, evaluate(tm)});
                if (refined.size() + stack.size() > point_budget)
                    throw SegmentCollapse("trace_unstable_leaf: point budget exceeded at "
                                          "generation " +
                                          std::to_string(generation));
            }
        }
        nodes = std::move(refined);
        total_points += nodes.size();
        if (total_points > point_budget)
            throw SegmentCollapse("trace_unstable_leaf: total point budget exceeded");

        // Append this generation (its first node equals the previous
        // generation's last image, already represented up to one application).
        for (std::size_t i = 1; i < nodes.size(); ++i) {
            Vec2 prev = trace.polyline.back();
            Vec2 cur = canonical_rep(nodes[i].p);
            trace.arc_length += sphere_distance(prev, cur);
            trace.polyline.push_back(cur);
            if (trace.arc_length >= target_length) break;
        }
        trace.generations = generation;
    }
    return trace;
}

double density_statistic(const LeafTrace& trace, const std::vector<Vec2>& k_samples, double eps) {
    if (k_samples.empty()) throw std::invalid_argument("density_statistic: empty K sample");
    if (trace.polyline.empty()) return 0.0;

    // Uniform bucket grid with cell width >= eps; neighbors cover the ball.
    int ncells = std::max(1, int(std::floor(1.0 / eps)));
    auto bucket_of = [&](const Vec2& p) {
        int bx = std::min(ncells - 1, int(wrap_unit(p.x) * ncells));
        int by = std::min(ncells - 1, int(wrap_unit(p.y) * ncells));
        return std::size_t(by) * std::size_t(ncells) + std::size_t(bx);
    };
    std::vector<std::vector<std::uint32_t>> buckets(std::size_t(ncells) * std::size_t(ncells));
    for (std::uint32_t i = 0; i < trace.polyline.size(); ++i)
        buckets[bucket_of(trace.polyline[i])].push_back(i);

    auto near_trace_lift = [&](const Vec2& q) {
        int bx = int(wrap_unit(q.x) * ncells);
        int by = int(wrap_unit(q.y) * ncells);
        for (int dy = -1; dy <= 1; ++dy) {
            int cy = ((by + dy) % ncells + ncells) % ncells;
            for (int dx = -1; dx <= 1; ++dx) {
                int cx = ((bx + dx) % ncells + ncells) % ncells;
                for (std::uint32_t idx : buckets[std::size_t(cy) * std::size_t(ncells) +
                                                 std::size_t(cx)]) {
                    if (torus_distance(q, trace.polyline[idx]) <= eps) return true;
                }
            }
        }
        return false;
    };

    std::size_t hit = 0;
    for (const Vec2& q : k_samples) {
        if (near_trace_lift(q) || near_trace_lift(Vec2{-q.x, -q.y})) ++hit;
    }
    return double(hit) / double(k_samples.size());
}

}  // namespace lattesda
