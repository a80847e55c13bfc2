#pragma once

// Property suites that sample or sweep the explicit inequalities and report
// violations. Reports are a pure function of (suite, samples, seed, precision).

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "special_locus/numerics.hpp"

namespace special_locus {

enum class Suite { lemma22, lemma23, separation, aux, phi, classnum };

// Throws UnknownSuite.
Suite parse_suite(std::string_view name);
const char* to_string(Suite s);
const std::vector<Suite>& all_suites();

struct VerifyConfig {
  Suite suite = Suite::phi;
  // Population size; for aux the number of grid points per axis, for phi the
  // largest N and for classnum the largest |D|. Empty selects the default.
  std::optional<long> samples;
  std::uint64_t seed = 1;
  Precision precision = kDefaultPrecision;
};

long default_samples(Suite s);

struct VerifyReport {
  Suite suite = Suite::phi;
  std::uint64_t seed = 1;
  long samples = 0;
  long checked = 0;      // inequalities decided
  long skipped = 0;      // draws outside the hypotheses (e.g. g(lambda) = 0)
  long violations = 0;
  long undecided = 0;    // still indeterminate after precision doubling
  std::vector<std::string> counterexamples;  // first few, verbatim

  bool passed() const { return violations == 0 && undecided == 0 && checked > 0; }
};

VerifyReport run_verify(const VerifyConfig& config);

std::string to_text(const VerifyReport& report);

// Uniform integer in [lo, hi] by rejection, identical on every platform
// (std::uniform_int_distribution is implementation-defined).
std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

}  // namespace special_locus
