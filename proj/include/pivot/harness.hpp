#ifndef PIVOT_HARNESS_HPP
#define PIVOT_HARNESS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pivot/field.hpp"

namespace pivot {

/// Deterministic random source. A fixed generator plus hand-rolled bounded
/// draws keep the stream identical across platforms and standard libraries,
/// which is what makes verification reports byte-for-byte reproducible.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();

    /// Uniform draw in [0, bound), bound >= 1. Rejection sampling, no bias.
    std::uint64_t below(std::uint64_t bound);

    /// Uniform draw in [lo, hi], inclusive on both ends.
    long integer(long lo, long hi);

    /// Coin flip.
    bool flip() { return (next() & 1) != 0; }

  private:
    std::uint64_t state_;
};

struct HarnessConfig {
    /// Fields exercised by field-generic suites. Graph suites always run
    /// over GF(2) regardless of this list.
    std::vector<FieldDescriptor> fields = {FieldDescriptor::gf2(),
                                           FieldDescriptor::gfp(3),
                                           FieldDescriptor::rational()};
    std::uint64_t seed = 42;

    /// Upper bound on |V| for generated instances; 0 keeps per-suite defaults.
    std::size_t max_size = 0;

    /// Override for per-suite random sample counts; 0 keeps defaults.
    std::size_t samples = 0;

    /// Suites to run, in the canonical order; empty means all of them.
    std::vector<std::string> suites;
};

struct SuiteResult {
    std::string name;
    std::size_t passed = 0;
    std::size_t total = 0;
    std::vector<std::string> counterexamples;

    bool ok() const { return passed == total; }
};

struct Report {
    std::vector<SuiteResult> suites;

    bool all_ok() const;

    /// One line per suite, "<name>: <passed>/<total> ok" or "... FAILED",
    /// followed by counterexample blocks indented two spaces.
    std::string str() const;
};

/// Canonical suite names in report order.
const std::vector<std::string>& harness_suite_names();

/// Runs the selected suites and collects the report. Unknown suite names
/// raise ParseError.
Report run_harness(const HarnessConfig& config);

}  // namespace pivot

#endif
