#pragma once

// End-to-end constructions: discrete coloring -> torus coloring ->
// solution-free set -> torus set A -> exact certificate and Monte Carlo
// estimate of Lambda-tilde(1_A). Every stage re-verifies its output and
// writes it to the output directory.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "addcomb/cli/config.hpp"
#include "addcomb/core/pattern.hpp"

namespace addcomb::cli {

class StageError : public std::runtime_error {
 public:
  StageError(std::string stage, const std::string& what, bool violation)
      : std::runtime_error(stage + ": " + what), stage_(std::move(stage)), violation_(violation) {}
  const std::string& stage() const noexcept { return stage_; }
  // true when a stage output failed its verifier (as opposed to bad input or budget)
  bool violation() const noexcept { return violation_; }

 private:
  std::string stage_;
  bool violation_;
};

struct PipelineOptions {
  std::string name;  // thm2_6 | thm2_7 | thm2_5 | lemma7_10
  std::optional<std::filesystem::path> coloring;
  int ell = 1;
  int k = 4;
  std::optional<core::PatternSpec> pattern;  // lemma7_10
  std::int64_t N = 0;                        // Behrend stage size; 0 picks a small default
  std::int64_t M = 0;                        // lemma7_10, even k: mod-Behrend digit base
  int digits = 2;                            // lemma7_10, even k: mod-Behrend digit count
  std::filesystem::path out_dir = ".";
  std::uint64_t seed = 0;
  unsigned workers = 1;
  Budgets budgets;
};

nlohmann::ordered_json run_pipeline(const PipelineOptions& opts);

}  // namespace addcomb::cli
