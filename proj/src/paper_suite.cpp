#include "qlogic/paper_suite.hpp"

#include "qlogic/qlf.hpp"
#include "qlogic/reference_cases.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <sstream>

namespace qlogic {

std::vector<StateTable> sampled_even_states(std::size_t n, std::size_t count) {
  std::vector<StateTable> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto mode = i % 2 == 0 ? SampleMode::nonneg : SampleMode::one_negative;
    out.push_back(sample_state_even(n, 100003 * n + i, mode));
  }
  return out;
}

namespace {

constexpr std::array<std::size_t, 4> kSizes{4, 6, 8, 10};

class Recorder {
 public:
  template <typename Fn>
  void run(std::string name, Fn&& fn) {
    SuiteCheck check{std::move(name), false, {}};
    try {
      std::ostringstream detail;
      check.passed = fn(detail);
      check.detail = detail.str();
    } catch (const std::exception& e) {
      check.detail = std::string("exception: ") + e.what();
    }
    checks_.push_back(std::move(check));
  }
  std::vector<SuiteCheck> take() { return std::move(checks_); }

 private:
  std::vector<SuiteCheck> checks_;
};

Rational certificate_pairing(const StateTable& state, const RatVector& certificate) {
  return dot(certificate, RatVector(state.values().begin(), state.values().end()));
}

}  // namespace

std::vector<SuiteCheck> run_reproduction_suite(const SuiteHooks& hooks) {
  Recorder rec;
  const Universe six(6);

  rec.run("mo4-closure-has-ten-members", [&](std::ostream& d) {
    const auto g = reference::mo4_generators();
    std::vector<SubsetMask> expected{0, six.full()};
    for (SubsetMask s : g) {
      expected.push_back(s);
      expected.push_back(six.complement(s));
    }
    const Family closed = reference::mo4_logic();
    d << closed.size() << " members";
    return closed == Family(six, expected) && closed.size() == 10;
  });

  rec.run("mo4-two-valued-state-is-valid", [&](std::ostream& d) {
    const auto s = reference::mo4_two_valued_state();
    d << "two-valued=" << is_two_valued(s);
    return is_two_valued(s) && !dirac_point(s);
  });

  rec.run("mo4-state-has-no-signed-extension", [&](std::ostream& d) {
    const auto s = reference::mo4_two_valued_state();
    const auto outcome = solve_signed_extension(s);
    if (feasible(outcome)) return false;
    const auto& cert = std::get<ExtensionInfeasible>(outcome).certificate;
    if (!cert) return false;
    const Rational pairing = certificate_pairing(s, *cert);
    d << format_outcome_machine(outcome) << " pairing=" << to_string(pairing);
    return certificate_is_sound(s, *cert) && abs(pairing) == 4;
  });

  std::vector<std::vector<StateTable>> samples;
  for (std::size_t n : kSizes) samples.push_back(sampled_even_states(n, hooks.samples_per_size));

  rec.run("even-logic-masses-recover-pairs", [&](std::ostream& d) {
    std::size_t checked = 0;
    for (const auto& batch : samples)
      for (const auto& s : batch) {
        const auto m = hooks.even_masses(s);
        const std::size_t n = s.family().universe().size();
        for (std::size_t x = 0; x < n; ++x)
          for (std::size_t y = x + 1; y < n; ++y, ++checked)
            if (m.masses[x] + m.masses[y] != s.value(mask_of({x, y}))) {
              d << "pair {" << x << "," << y << "} fails at n=" << n;
              return false;
            }
      }
    d << checked << " pairs";
    return true;
  });

  rec.run("even-logic-masses-sum-to-one", [&](std::ostream& d) {
    for (const auto& batch : samples)
      for (const auto& s : batch)
        if (hooks.even_masses(s).total() != 1) return false;
    d << samples.size() * hooks.samples_per_size << " states";
    return true;
  });

  rec.run("even-logic-masses-independent-of-choice", [&](std::ostream& d) {
    std::size_t triples = 0;
    for (const auto& batch : samples) {
      const std::size_t n = batch.front().family().universe().size();
      if (n > 8) continue;
      for (const auto& s : batch)
        for (std::size_t x = 0; x < n; ++x) {
          std::optional<Rational> reference;
          for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v) {
              if (u == x || v == x) continue;
              const Rational f = pair_combination(s, x, u, v);
              if (reference && f != *reference) return false;
              reference = f;
              ++triples;
            }
        }
    }
    d << triples << " triples";
    return true;
  });

  rec.run("even-logic-masses-match-solver", [&](std::ostream& d) {
    for (const auto& batch : samples)
      for (const auto& s : batch) {
        const auto outcome = solve_signed_extension(s);
        const auto* ok = std::get_if<ExtensionFeasible>(&outcome);
        if (!ok || !ok->unique || ok->witness != hooks.even_masses(s)) return false;
      }
    d << "unique witness equals formula";
    return true;
  });

  rec.run("negative-point-state-masses", [&](std::ostream& d) {
    for (std::size_t k = 2; k <= 6; ++k) {
      const auto s = reference::negative_point_state(k);
      const auto outcome = solve_signed_extension(s);
      const auto* ok = std::get_if<ExtensionFeasible>(&outcome);
      if (!ok || !ok->unique) return false;
      const Rational unit = rat(1, static_cast<long>(2 * (k - 1)));
      for (std::size_t p = 0; p < 2 * k; ++p)
        if (ok->witness.masses[p] != (p == 0 ? Rational(-unit) : unit)) return false;
      d << (k > 2 ? " " : "") << "k=" << k << ":" << to_string(ok->witness.masses[0]);
    }
    return true;
  });

  rec.run("negative-point-state-has-no-state-extension", [&](std::ostream& d) {
    for (std::size_t k = 2; k <= 6; ++k)
      if (feasible(solve_state_extension(reference::negative_point_state(k)))) return false;
    d << "k=2..6 infeasible";
    return true;
  });

  rec.run("mo15-structure", [&](std::ostream& d) {
    const Family l = reference::mo15_logic();
    std::vector<SubsetMask> four;
    std::size_t six_count = 0;
    for (SubsetMask s : l.members()) {
      if (cardinality(s) == 4) four.push_back(s);
      if (cardinality(s) == 6) ++six_count;
    }
    bool meeting = true;
    for (std::size_t i = 0; i < four.size(); ++i)
      for (std::size_t j = i + 1; j < four.size(); ++j) meeting = meeting && (four[i] & four[j]) != 0;
    d << l.size() << " members, " << four.size() << " four-point, " << six_count << " six-point";
    return l.size() == 32 && four.size() == 15 && six_count == 15 && meeting && l.contains(0) &&
           l.contains(l.universe().full());
  });

  rec.run("mo15-conflicting-state-has-no-signed-extension", [&](std::ostream& d) {
    const auto s = reference::mo15_conflicting_state();
    const auto outcome = solve_signed_extension(s);
    if (feasible(outcome)) return false;
    const auto& cert = std::get<ExtensionInfeasible>(outcome).certificate;
    d << format_outcome_machine(outcome);
    return cert && certificate_is_sound(s, *cert);
  });

  rec.run("mo15-subadditive-state-is-subadditive", [&](std::ostream& d) {
    const auto s = reference::mo15_subadditive_state();
    const bool sub = hooks.subadditive(s);
    d << "subadditive=" << sub;
    return sub;
  });

  rec.run("mo15-subadditive-state-has-no-signed-extension", [&](std::ostream& d) {
    const auto s = reference::mo15_subadditive_state();
    const auto outcome = solve_signed_extension(s);
    if (feasible(outcome)) return false;
    const auto& cert = std::get<ExtensionInfeasible>(outcome).certificate;
    d << format_outcome_machine(outcome);
    return cert && certificate_is_sound(s, *cert);
  });

  rec.run("mo15-intersection-values-disagree", [&](std::ostream& d) {
    const auto s = reference::mo15_subadditive_state();
    const auto [a, b, c, dd] = reference::mo15_generators();
    const Rational ab = s.value(a) + s.value(b) - s.value(a ^ b);
    const Rational cd = s.value(c) + s.value(dd) - s.value(c ^ dd);
    d << "A,B: " << to_string(ab) << "  C,D: " << to_string(cd);
    return ab == rat(1, 12) && cd == rat(2, 5);
  });

  rec.run("subadditive-iff-state-extendable", [&](std::ostream& d) {
    std::size_t yes = 0, no = 0;
    for (const auto& batch : samples)
      for (const auto& s : batch) {
        const bool sub = hooks.subadditive(s);
        if (sub != feasible(solve_state_extension(s))) return false;
        (sub ? yes : no) += 1;
      }
    d << yes << " subadditive, " << no << " not";
    return true;
  });

  rec.run("subadditive-extension-consistency", [&](std::ostream& d) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < hooks.consistency_samples; ++i) {
      const auto& batch = samples[i % samples.size()];
      if (!check_subadditive_extension(batch[i / samples.size()]).consistent) return false;
      ++count;
    }
    for (const auto& s : {reference::negative_point_state(2), reference::negative_point_state(3),
                          reference::mo15_conflicting_state(), reference::mo15_subadditive_state()}) {
      if (!check_subadditive_extension(s).consistent) return false;
      ++count;
    }
    d << count << " states consistent";
    return true;
  });

  return rec.take();
}

}  // namespace qlogic
