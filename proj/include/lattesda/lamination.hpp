#pragma once

// Symbolic models of Cantor-set suspensions: cylinder addresses, the shift,
// a prefix-rewriting interval homeomorphism, and finite-resolution
// dense-leaf / indecomposability verdicts.

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lattesda {

struct InsufficientDepth : std::runtime_error {
    explicit InsufficientDepth(const std::string& what) : std::runtime_error(what) {}
};

// Finite word over the declared alphabet; depth = length.
struct CylinderAddress {
    std::string word;
    std::size_t depth() const { return word.size(); }
    bool operator==(const CylinderAddress& o) const { return word == o.word; }
};

struct RewriteRule {
    std::string pattern;
    std::string replacement;
};

// Deterministic, total prefix-rewriting map on one-sided addresses.
// Patterns must form a complete prefix code over the alphabet and the
// replacements must be prefix-free (images of distinct rule cylinders stay
// disjoint).
struct CantorSystem {
    std::string alphabet;
    std::vector<RewriteRule> rules;

    void validate() const;
    CylinderAddress apply(const CylinderAddress& addr) const;  // throws InsufficientDepth

    // The order-preserving homeomorphism of the middle-thirds Cantor set
    // carrying C n [0,1/9] onto C n [0,1/3] and C n [1/9,1] onto C n [2/3,1],
    // realized on ternary addresses as 00w->0w, 02w->20w, 2w->22w.
    static CantorSystem middle_thirds_interval_map();
};

// The fixed middle-thirds system's rules applied to one address.
CylinderAddress h_apply(const CylinderAddress& addr);

// Window onto a one-sided view of a bi-infinite {0,1} word. A cyclic window
// is backed by its own content as the periodic generator.
struct ShiftWindow {
    std::string window;
    bool cyclic{false};
};

// Left shift; the window shrinks at the boundary unless cyclic.
ShiftWindow shift_apply(const ShiftWindow& w);

// Order-k de Bruijn word (FKM construction): cyclically visits every depth-k
// cylinder exactly once.
std::string de_bruijn_word(unsigned k, const std::string& alphabet);

// All |alphabet|^depth words; the exhaustive seed set.
std::vector<std::string> all_words(const std::string& alphabet, unsigned depth);

struct SuspensionSystem {
    enum class Kind { shift, cantor };
    Kind kind{Kind::shift};
    CantorSystem cantor;  // meaningful when kind == cantor

    std::string alphabet() const { return kind == Kind::shift ? "01" : cantor.alphabet; }

    static SuspensionSystem shift_suspension();
    static SuspensionSystem cantor_suspension(CantorSystem system);
};

// Orbit of one symbolic point. Shift seeds are backed cyclically (periodic
// points); Cantor seeds are completed with a constant tail (cylinder
// right endpoint for tail '2'), so long orbits never run out of depth.
class SymbolicOrbit {
public:
    SymbolicOrbit(const SuspensionSystem& sys, const std::string& seed);

    bool prefix_available(unsigned k) const;
    std::string prefix(unsigned k) const;           // depth-k cylinder of the current point
    std::uint64_t prefix_code(unsigned k) const;    // base-|alphabet| encoding
    std::string current_word(std::size_t max_len = 64) const;
    std::size_t leading_count(char symbol) const;   // run length at the front
    void step();

private:
    const SuspensionSystem* sys_;
    std::deque<char> word_;   // cantor variant
    char tail_{'\0'};
    std::string window_;      // shift variant
    std::size_t offset_{0};
    bool cyclic_{true};
    void ensure_depth(std::size_t k);
};

// Replayable orbit log (explicit words, intended for short runs).
struct LeafItinerary {
    std::string base;
    std::vector<std::string> log;
};
LeafItinerary record_itinerary(const SuspensionSystem& sys, const std::string& seed,
                               std::size_t steps);
bool validate_itinerary(const SuspensionSystem& sys, const LeafItinerary& itinerary);

// A seed is declared depth-k dense when its orbit visits every depth-k
// cylinder within the horizon (the seed's own cylinder counts as step 0).
struct DenseLeafVerdict {
    bool found{false};
    std::optional<std::string> witness;
    std::size_t steps_to_cover{0};
    unsigned depth{0};
    std::size_t horizon{0};
    // Visit counts per depth-k cylinder: the witness orbit's counts when
    // found, otherwise aggregated over all seeds.
    std::map<std::string, std::size_t> visit_counts;
};

DenseLeafVerdict dense_leaf_search(const SuspensionSystem& sys, unsigned k, std::size_t horizon,
                                   const std::vector<std::string>& seeds);

struct IndecomposabilityVerdict {
    enum class Kind { consistent_with_indecomposable, no_dense_leaf_detected };
    Kind kind{Kind::no_dense_leaf_detected};
    unsigned depth{0};
    std::size_t horizon{0};
    bool exhaustive{false};       // seed set covered every word of the seed depth
    std::size_t seed_depth{0};    // meaningful when exhaustive
    std::optional<std::string> witness;
    DenseLeafVerdict search;

    std::string to_string() const;
};

IndecomposabilityVerdict indecomposability_verdict(const SuspensionSystem& sys, unsigned k,
                                                   std::size_t horizon,
                                                   const std::vector<std::string>& seeds);

}  // namespace lattesda
