#include "lattesda/lamination.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace lattesda {

void CantorSystem::validate() const {
    if (alphabet.size() < 2) throw std::invalid_argument("CantorSystem: alphabet too small");
    std::set<char> symbols(alphabet.begin(), alphabet.end());
    if (symbols.size() != alphabet.size())
        throw std::invalid_argument("CantorSystem: repeated alphabet symbol");
    if (rules.empty()) throw std::invalid_argument("CantorSystem: no rules");

    std::size_t max_len = 0;
    for (const auto& r : rules) {
        if (r.pattern.empty()) throw std::invalid_argument("CantorSystem: empty pattern");
        for (char ch : r.pattern)
            if (!symbols.count(ch)) throw std::invalid_argument("CantorSystem: pattern symbol outside alphabet");
        for (char ch : r.replacement)
            if (!symbols.count(ch)) throw std::invalid_argument("CantorSystem: replacement symbol outside alphabet");
        max_len = std::max(max_len, r.pattern.size());
    }

    auto prefix_free = [](std::vector<std::string> words) {
        std::sort(words.begin(), words.end());
        for (std::size_t i = 0; i + 1 < words.size(); ++i)
            if (words[i + 1].compare(0, words[i].size(), words[i]) == 0) return false;
        return true;
    };

    std::vector<std::string> patterns, replacements;
    for (const auto& r : rules) {
        patterns.push_back(r.pattern);
        replacements.push_back(r.replacement);
    }
    if (!prefix_free(patterns))
        throw std::invalid_argument("CantorSystem: patterns are not prefix-free (nondeterministic)");
    if (!prefix_free(replacements))
        throw std::invalid_argument("CantorSystem: replacements are not prefix-free (not injective)");

    // Completeness (totality on deep addresses): Kraft equality for the
    // pattern prefix code.
    std::size_t covered = 0, full = 1;
    for (std::size_t i = 0; i < max_len; ++i) full *= alphabet.size();
    for (const auto& p : patterns) {
        std::size_t weight = 1;
        for (std::size_t i = p.size(); i < max_len; ++i) weight *= alphabet.size();
        covered += weight;
    }
    if (covered != full)
        throw std::invalid_argument("CantorSystem: patterns do not cover every address (not total)");
}

CylinderAddress CantorSystem::apply(const CylinderAddress& addr) const {
    for (const auto& r : rules) {
        if (addr.word.size() >= r.pattern.size() &&
            addr.word.compare(0, r.pattern.size(), r.pattern) == 0) {
            return {r.replacement + addr.word.substr(r.pattern.size())};
        }
    }
    throw InsufficientDepth("CantorSystem: no rule matches within the available prefix of '" +
                            addr.word + "'");
}

CantorSystem CantorSystem::middle_thirds_interval_map() {
    CantorSystem s;
    s.alphabet = "02";
    s.rules = {{"00", "0"}, {"02", "20"}, {"2", "22"}};
    s.validate();
    return s;
}

CylinderAddress h_apply(const CylinderAddress& addr) {
    static const CantorSystem system = CantorSystem::middle_thirds_interval_map();
    return system.apply(addr);
}

ShiftWindow shift_apply(const ShiftWindow& w) {
    if (w.window.empty()) throw InsufficientDepth("shift_apply: empty window");
    ShiftWindow out;
    out.cyclic = w.cyclic;
    if (w.cyclic)
        out.window = w.window.substr(1) + w.window[0];
    else
        out.window = w.window.substr(1);
    return out;
}

std::string de_bruijn_word(unsigned n, const std::string& alphabet) {
    // FKM: concatenate the Lyndon words over the alphabet whose length
    // divides n, in lexicographic order.
    const int k = int(alphabet.size());
    std::vector<int> a(std::size_t(k) * n + 1, 0);
    std::string seq;
    std::function<void(int, int)> db = [&](int t, int p) {
        if (t > int(n)) {
            if (int(n) % p == 0)
                for (int i = 1; i <= p; ++i) seq += alphabet[std::size_t(a[std::size_t(i)])];
        } else {
            a[std::size_t(t)] = a[std::size_t(t - p)];
            db(t + 1, p);
            for (int j = a[std::size_t(t - p)] + 1; j < k; ++j) {
                a[std::size_t(t)] = j;
                db(t + 1, t);
            }
        }
    };
    db(1, 1);
    return seq;
}

std::vector<std::string> all_words(const std::string& alphabet, unsigned depth) {
    std::vector<std::string> words{""};
    for (unsigned d = 0; d < depth; ++d) {
        std::vector<std::string> next;
        next.reserve(words.size() * alphabet.size());
        for (const auto& w : words)
            for (char ch : alphabet) next.push_back(w + ch);
        words = std::move(next);
    }
    return words;
}

SuspensionSystem SuspensionSystem::shift_suspension() {
    SuspensionSystem s;
    s.kind = Kind::shift;
    return s;
}

SuspensionSystem SuspensionSystem::cantor_suspension(CantorSystem system) {
    system.validate();
    SuspensionSystem s;
    s.kind = Kind::cantor;
    s.cantor = std::move(system);
    return s;
}

SymbolicOrbit::SymbolicOrbit(const SuspensionSystem& sys, const std::string& seed) : sys_(&sys) {
    if (seed.empty()) throw std::invalid_argument("SymbolicOrbit: empty seed");
    for (char ch : seed)
        if (sys.alphabet().find(ch) == std::string::npos)
            throw std::invalid_argument("SymbolicOrbit: seed symbol outside alphabet");
    if (sys.kind == SuspensionSystem::Kind::shift) {
        window_ = seed;
        cyclic_ = true;  // seeds denote periodic points of the full shift
    } else {
        word_.assign(seed.begin(), seed.end());
        tail_ = sys.cantor.alphabet.back();  // cylinder right endpoint
    }
}

void SymbolicOrbit::ensure_depth(std::size_t k) {
    while (word_.size() < k) word_.push_back(tail_);
}

bool SymbolicOrbit::prefix_available(unsigned k) const {
    if (sys_->kind == SuspensionSystem::Kind::shift)
        return cyclic_ ? !window_.empty() : offset_ + k <= window_.size();
    return true;  // tail completion never runs out
}

std::string SymbolicOrbit::prefix(unsigned k) const {
    std::string out;
    out.reserve(k);
    if (sys_->kind == SuspensionSystem::Kind::shift) {
        if (!prefix_available(k)) throw InsufficientDepth("SymbolicOrbit: window exhausted");
        for (unsigned i = 0; i < k; ++i) out += window_[(offset_ + i) % window_.size()];
    } else {
        for (unsigned i = 0; i < k; ++i) out += i < word_.size() ? word_[i] : tail_;
    }
    return out;
}

std::uint64_t SymbolicOrbit::prefix_code(unsigned k) const {
    const std::string& sigma = sys_->alphabet();
    std::uint64_t code = 0;
    for (char ch : prefix(k)) code = code * sigma.size() + std::uint64_t(sigma.find(ch));
    return code;
}

std::string SymbolicOrbit::current_word(std::size_t max_len) const {
    if (sys_->kind == SuspensionSystem::Kind::shift) {
        std::string out;
        std::size_t n = cyclic_ ? window_.size() : window_.size() - offset_;
        for (std::size_t i = 0; i < std::min(n, max_len); ++i)
            out += window_[(offset_ + i) % window_.size()];
        return out;
    }
    std::string out(word_.begin(), word_.begin() + std::min(word_.size(), max_len));
    return out;
}

std::size_t SymbolicOrbit::leading_count(char symbol) const {
    std::size_t n = 0;
    if (sys_->kind == SuspensionSystem::Kind::shift) {
        while (n < window_.size() && window_[(offset_ + n) % window_.size()] == symbol) ++n;
        return n;
    }
    while (n < word_.size() && word_[n] == symbol) ++n;
    if (n == word_.size() && tail_ == symbol) return word_.size();  // run continues into the tail
    return n;
}

void SymbolicOrbit::step() {
    if (sys_->kind == SuspensionSystem::Kind::shift) {
        if (cyclic_) {
            offset_ = (offset_ + 1) % window_.size();
        } else {
            if (offset_ >= window_.size()) throw InsufficientDepth("SymbolicOrbit: window exhausted");
            ++offset_;
        }
        return;
    }
    // Match the rule on the tail-completed word; rules touch only a short
    // prefix, so the deque makes each step O(1).
    std::size_t max_pattern = 0;
    for (const auto& r : sys_->cantor.rules) max_pattern = std::max(max_pattern, r.pattern.size());
    ensure_depth(max_pattern);
    for (const auto& r : sys_->cantor.rules) {
        bool match = true;
        for (std::size_t i = 0; i < r.pattern.size(); ++i)
            if (word_[i] != r.pattern[i]) {
                match = false;
                break;
            }
        if (!match) continue;
        for (std::size_t i = 0; i < r.pattern.size(); ++i) word_.pop_front();
        for (auto it = r.replacement.rbegin(); it != r.replacement.rend(); ++it)
            word_.push_front(*it);
        return;
    }
    throw InsufficientDepth("SymbolicOrbit: no rule matched (system not total?)");
}

LeafItinerary record_itinerary(const SuspensionSystem& sys, const std::string& seed,
                               std::size_t steps) {
    SymbolicOrbit orbit(sys, seed);
    LeafItinerary it;
    it.base = seed;
    it.log.push_back(orbit.current_word());
    for (std::size_t i = 0; i < steps; ++i) {
        orbit.step();
        it.log.push_back(orbit.current_word());
    }
    return it;
}

bool validate_itinerary(const SuspensionSystem& sys, const LeafItinerary& itinerary) {
    if (itinerary.log.empty()) return false;
    SymbolicOrbit orbit(sys, itinerary.base);
    if (orbit.current_word() != itinerary.log.front()) return false;
    for (std::size_t i = 1; i < itinerary.log.size(); ++i) {
        orbit.step();
        if (orbit.current_word() != itinerary.log[i]) return false;
    }
    return true;
}

DenseLeafVerdict dense_leaf_search(const SuspensionSystem& sys, unsigned k, std::size_t horizon,
                                   const std::vector<std::string>& seeds) {
    if (k < 1) throw std::invalid_argument("dense_leaf_search: depth must be >= 1");
    const std::size_t sigma = sys.alphabet().size();
    std::uint64_t cylinders = 1;
    for (unsigned i = 0; i < k; ++i) cylinders *= sigma;
    if (horizon < cylinders)
        throw std::invalid_argument("dense_leaf_search: horizon below the cylinder count");

    DenseLeafVerdict verdict;
    verdict.depth = k;
    verdict.horizon = horizon;

    std::vector<std::size_t> aggregate(cylinders, 0);
    auto code_to_word = [&](std::uint64_t code) {
        std::string w(k, sys.alphabet()[0]);
        for (unsigned i = k; i-- > 0;) {
            w[i] = sys.alphabet()[code % sigma];
            code /= sigma;
        }
        return w;
    };

    for (const auto& seed : seeds) {
        SymbolicOrbit orbit(sys, seed);
        std::vector<std::size_t> counts(cylinders, 0);
        std::uint64_t distinct = 0;
        std::size_t steps_needed = 0;
        for (std::size_t t = 0; t <= horizon; ++t) {
            if (!orbit.prefix_available(k)) break;
            std::uint64_t code = orbit.prefix_code(k);
            if (counts[code]++ == 0) {
                ++distinct;
                steps_needed = t;
            }
            if (distinct == cylinders) break;
            if (t < horizon) orbit.step();
        }
        for (std::size_t i = 0; i < cylinders; ++i) aggregate[i] += counts[i];
        if (distinct == cylinders) {
            verdict.found = true;
            verdict.witness = seed;
            verdict.steps_to_cover = steps_needed;
            for (std::size_t i = 0; i < cylinders; ++i)
                if (counts[i]) verdict.visit_counts[code_to_word(i)] = counts[i];
            return verdict;
        }
    }
    for (std::size_t i = 0; i < cylinders; ++i)
        if (aggregate[i]) verdict.visit_counts[code_to_word(i)] = aggregate[i];
    return verdict;
}

IndecomposabilityVerdict indecomposability_verdict(const SuspensionSystem& sys, unsigned k,
                                                   std::size_t horizon,
                                                   const std::vector<std::string>& seeds) {
    IndecomposabilityVerdict v;
    v.depth = k;
    v.horizon = horizon;
    v.search = dense_leaf_search(sys, k, horizon, seeds);
    v.kind = v.search.found ? IndecomposabilityVerdict::Kind::consistent_with_indecomposable
                            : IndecomposabilityVerdict::Kind::no_dense_leaf_detected;
    v.witness = v.search.witness;

    // Exhaustive when the seeds cover every word of one fixed depth.
    if (!seeds.empty()) {
        std::size_t depth = seeds.front().size();
        bool same_depth = true;
        std::set<std::string> distinct(seeds.begin(), seeds.end());
        for (const auto& s : seeds)
            if (s.size() != depth) same_depth = false;
        std::size_t expected = 1;
        for (std::size_t i = 0; i < depth; ++i) expected *= sys.alphabet().size();
        v.exhaustive = same_depth && distinct.size() == expected;
        if (v.exhaustive) v.seed_depth = depth;
    }
    return v;
}

std::string IndecomposabilityVerdict::to_string() const {
    std::string out = kind == Kind::consistent_with_indecomposable
                          ? "consistent_with_indecomposable"
                          : "no_dense_leaf_detected";
    out += "(depth=" + std::to_string(depth) + ", horizon=" + std::to_string(horizon) + ")";
    if (witness) out += " witness=" + *witness;
    if (exhaustive) out += " [exhaustive over depth-" + std::to_string(seed_depth) + " seeds]";
    return out;
}

}  // namespace lattesda
