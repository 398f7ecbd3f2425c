#include "lattesda/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lattesda {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::vector<std::pair<std::string, std::string>> RunConfig::echo() const {
    std::ostringstream m;
    m << matrix[0] << "," << matrix[1] << "," << matrix[2] << "," << matrix[3];
    return {
        {"matrix", m.str()},
        {"r", format_double(r)},
        {"mu", format_double(mu)},
        {"width", std::to_string(width)},
        {"height", std::to_string(height)},
        {"max_iter", std::to_string(max_iter)},
        {"eps_attract", format_double(eps_attract)},
        {"eps_invariance", format_double(effective_eps_invariance())},
        {"density_eps", format_double(density_eps)},
        {"target_length", format_double(target_length)},
        {"delta", format_double(delta)},
        {"samples", std::to_string(samples)},
        {"n_max", std::to_string(n_max)},
        {"depth", std::to_string(depth)},
        {"horizon", std::to_string(horizon)},
        {"seed_depth", std::to_string(seed_depth)},
        {"example", example},
        {"seed", std::to_string(seed)},
        {"out", out_dir},
        {"threads", std::to_string(threads)},
    };
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    std::size_t e = s.find_last_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

long long parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("config: bad integer for '" + key + "': " + value);
    }
}

double parse_real(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("config: bad number for '" + key + "': " + value);
    }
}

}  // namespace

void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "matrix") {
        std::array<long long, 4> m{};
        std::istringstream is(value);
        std::string tok;
        for (int i = 0; i < 4; ++i) {
            if (!std::getline(is, tok, ','))
                throw std::invalid_argument("config: matrix needs 4 comma-separated integers");
            m[std::size_t(i)] = parse_int("matrix", trim(tok));
        }
        if (std::getline(is, tok, ','))
            throw std::invalid_argument("config: matrix needs exactly 4 entries");
        cfg.matrix = m;
    } else if (key == "r") {
        cfg.r = parse_real(key, value);
    } else if (key == "mu") {
        cfg.mu = parse_real(key, value);
    } else if (key == "width") {
        cfg.width = int(parse_int(key, value));
    } else if (key == "height") {
        cfg.height = int(parse_int(key, value));
    } else if (key == "size") {
        std::size_t x = value.find('x');
        if (x == std::string::npos) throw std::invalid_argument("config: size must be WxH");
        cfg.width = int(parse_int(key, value.substr(0, x)));
        cfg.height = int(parse_int(key, value.substr(x + 1)));
    } else if (key == "max_iter") {
        cfg.max_iter = int(parse_int(key, value));
    } else if (key == "eps_attract") {
        cfg.eps_attract = parse_real(key, value);
    } else if (key == "eps_invariance") {
        cfg.eps_invariance = parse_real(key, value);
    } else if (key == "density_eps") {
        cfg.density_eps = parse_real(key, value);
    } else if (key == "target_length") {
        cfg.target_length = parse_real(key, value);
    } else if (key == "delta") {
        cfg.delta = parse_real(key, value);
    } else if (key == "samples") {
        cfg.samples = std::uint64_t(parse_int(key, value));
    } else if (key == "n_max") {
        cfg.n_max = unsigned(parse_int(key, value));
    } else if (key == "depth") {
        cfg.depth = unsigned(parse_int(key, value));
    } else if (key == "horizon") {
        cfg.horizon = std::uint64_t(parse_int(key, value));
    } else if (key == "seed_depth") {
        cfg.seed_depth = unsigned(parse_int(key, value));
    } else if (key == "example") {
        if (value != "shift" && value != "h")
            throw std::invalid_argument("config: example must be 'shift' or 'h'");
        cfg.example = value;
    } else if (key == "seed") {
        cfg.seed = std::uint64_t(parse_int(key, value));
    } else if (key == "out") {
        cfg.out_dir = value;
    } else if (key == "threads") {
        cfg.threads = int(parse_int(key, value));
    } else {
        throw std::invalid_argument("config: unknown key '" + key + "'");
    }
}

void load_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: missing '=' at " + path + ":" +
                                        std::to_string(lineno));
        apply_config_entry(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
}

}  // namespace lattesda
