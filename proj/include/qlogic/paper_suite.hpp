#pragma once

#include "qlogic/extend.hpp"

#include <functional>
#include <string>
#include <vector>

namespace qlogic {

struct SuiteCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Injection points so the suite can be run against deliberately broken
// implementations.
struct SuiteHooks {
  std::function<SignedPointMeasure(const StateTable&)> even_masses = even_logic_masses;
  std::function<bool(const StateTable&)> subadditive = [](const StateTable& s) { return is_subadditive(s).holds; };
  std::size_t samples_per_size = 500;
  std::size_t consistency_samples = 200;
};

// Reproduces every worked example and extension result on the embedded
// inputs. Checks are reported in a fixed order.
std::vector<SuiteCheck> run_reproduction_suite(const SuiteHooks& hooks = {});

// Sampled even-logic states used by the suite: `count` per size, alternating
// between the two sampler modes.
std::vector<StateTable> sampled_even_states(std::size_t n, std::size_t count);

}  // namespace qlogic
