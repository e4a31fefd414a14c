#include "qlogic/cli.hpp"

#include "qlogic/extend.hpp"
#include "qlogic/paper_suite.hpp"
#include "qlogic/qlf.hpp"
#include "qlogic/qsf.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace qlogic {

namespace fs = std::filesystem;

namespace {

// Raised for unreadable or unwritable files.
class IoError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoError("cannot write '" + path.string() + "'");
}

void emit(const std::string& out_path, const std::string& text, std::ostream& out) {
  if (out_path.empty())
    out << text;
  else
    write_file(out_path, text);
}

LogicDocument load_logic(const fs::path& path) {
  try {
    return parse_qlf(read_file(path));
  } catch (const FormatError& e) {
    throw FormatError(e.line(), path.string() + ": " + e.what());
  }
}

struct LoadedState {
  LogicDocument logic;
  StateDocument doc;
};

// Resolves the logic from the header (relative to the state file) unless
// an explicit logic path is given.
LoadedState load_state_document(const std::string& state_path, const std::string& logic_override) {
  const std::string text = read_file(state_path);
  fs::path logic_path = logic_override;
  if (logic_path.empty()) {
    logic_path = qsf_logic_path(text);
    if (logic_path.is_relative()) logic_path = fs::path(state_path).parent_path() / logic_path;
  }
  LogicDocument logic = load_logic(logic_path);
  StateDocument doc = parse_qsf(text, logic.family);
  return {std::move(logic), std::move(doc)};
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string join_masses(const SignedPointMeasure& m) {
  std::string s;
  for (std::size_t i = 0; i < m.masses.size(); ++i) s += (i ? " " : "") + to_string(m.masses[i]);
  return s;
}

std::string human_outcome(const ExtensionOutcome& outcome, const StateTable& state, const std::string& kind) {
  std::ostringstream out;
  if (const auto* ok = std::get_if<ExtensionFeasible>(&outcome)) {
    out << kind << " extension exists (" << (ok->unique ? "unique" : "not unique") << ")\n";
    out << "point masses: " << join_masses(ok->witness) << '\n';
    return out.str();
  }
  const auto& bad = std::get<ExtensionInfeasible>(outcome);
  out << "no " << kind << " extension exists\n";
  if (bad.certificate) {
    const RatVector values(state.values().begin(), state.values().end());
    out << "certificate: the combination below vanishes at every point but pairs with the state to "
        << to_string(dot(*bad.certificate, values)) << '\n';
    for (std::size_t i = 0; i < bad.certificate->size(); ++i) {
      const Rational& c = (*bad.certificate)[i];
      if (sgn(c) == 0) continue;
      out << "  " << (sgn(c) > 0 ? "+" : "") << to_string(c) << " x " << format_set(state.family()[i]) << '\n';
    }
  }
  return out.str();
}

std::string describe_report(const LogicReport& r, std::size_t size) {
  std::ostringstream out;
  out << "members: " << size << '\n';
  out << "contains_X: " << yes_no(r.contains_X) << '\n';
  out << "complement_closed: " << yes_no(r.complement_closed);
  if (r.complement_violation) out << " (missing complement of " << format_set(*r.complement_violation) << ")";
  out << "\ndisjoint_union_closed: " << yes_no(r.disjoint_union_closed);
  if (r.disjoint_union_violation)
    out << " (missing union of " << format_set(r.disjoint_union_violation->first) << " and "
        << format_set(r.disjoint_union_violation->second) << ")";
  out << "\ndifference_closed: " << yes_no(r.difference_closed);
  if (r.difference_violation)
    out << " (missing difference of " << format_set(r.difference_violation->first) << " and "
        << format_set(r.difference_violation->second) << ")";
  out << "\nlogic: " << yes_no(r.is_logic()) << '\n';
  return out.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite concrete quantum logics: closures, states and measure extensions", "qlogic"};
  app.require_subcommand(1, 1);

  std::string out_path, logic_path, state_path, gen_path, fill_text = "1/2";
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string mode, kind = "signed", format = "human";

  auto add_state_inputs = [&](CLI::App* cmd) {
    cmd->add_option("state", state_path, "QSF state file")->required();
    cmd->add_option("--logic", logic_path, "QLF logic file (defaults to the one named in the state file)");
    cmd->add_option("--fill", fill_text, "value for members the state file leaves unassigned");
  };

  auto* even = app.add_subcommand("even-logic", "write the logic of all even subsets of n points");
  even->add_option("-n", n, "number of points (even, 2..20)")->required();
  even->add_option("-o,--out", out_path, "output QLF file (default: standard output)");

  auto* closure = app.add_subcommand("closure", "close a generator file into a logic");
  closure->add_option("--mode", mode, "concrete or delta")->required()->check(CLI::IsMember({"concrete", "delta"}));
  closure->add_option("generators", gen_path, "QLF file listing the generators")->required();
  closure->add_option("-o,--out", out_path, "output QLF file (default: standard output)");

  auto* check_logic = app.add_subcommand("check-logic", "verify the logic axioms");
  check_logic->add_option("file", logic_path, "QLF logic file")->required();

  auto* check_state = app.add_subcommand("check-state", "verify that a state file describes a state");
  add_state_inputs(check_state);

  auto* subadditive = app.add_subcommand("subadditive", "test subadditivity on a difference-closed logic");
  add_state_inputs(subadditive);

  auto* extend = app.add_subcommand("extend", "decide extension to all subsets");
  add_state_inputs(extend);
  extend->add_option("--kind", kind, "signed or state")->check(CLI::IsMember({"signed", "state"}));
  extend->add_option("--format", format, "human or machine")->check(CLI::IsMember({"human", "machine"}));

  auto* classify = app.add_subcommand("classify", "summarize the extension properties of a state");
  add_state_inputs(classify);

  std::string sample_logic;
  auto* sample = app.add_subcommand("sample", "draw a seeded state on the even logic");
  sample->add_option("-n", n, "number of points (even, 4..12)")->required();
  sample->add_option("--seed", seed, "generator seed")->required();
  sample->add_option("--mode", mode, "nonneg or one_negative")
      ->required()
      ->check(CLI::IsMember({"nonneg", "one_negative"}));
  sample->add_option("-o,--out", out_path, "output QSF file (default: standard output)");
  sample->add_option("--logic", sample_logic, "logic path recorded in the state file (default: even<n>.qlf)");

  auto* suite = app.add_subcommand("paper-suite", "reproduce the worked examples and extension results");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitYes;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitError;
  }

  try {
    if (even->parsed()) {
      emit(out_path, write_qlf(make_even_logic(n)), out);
      return kExitYes;
    }

    if (closure->parsed()) {
      const auto gens = load_logic(gen_path);
      const auto members = gens.family.members();
      const Family closed = mode == "concrete" ? concrete_closure(gens.family.universe(), members)
                                               : difference_closure(gens.family.universe(), members);
      emit(out_path, write_qlf(closed), out);
      return kExitYes;
    }

    if (check_logic->parsed()) {
      const auto doc = load_logic(logic_path);
      const auto report = validate_logic(doc.family);
      out << describe_report(report, doc.family.size());
      return report.is_logic() ? kExitYes : kExitNo;
    }

    if (sample->parsed()) {
      const auto sm = mode == "nonneg" ? SampleMode::nonneg : SampleMode::one_negative;
      const StateTable state = sample_state_even(n, seed, sm);
      if (sample_logic.empty()) sample_logic = "even" + std::to_string(n) + ".qlf";
      if (!out_path.empty()) {
        fs::path logic_file = sample_logic;
        if (logic_file.is_relative()) logic_file = fs::path(out_path).parent_path() / logic_file;
        if (!fs::exists(logic_file)) write_file(logic_file, write_qlf(state.family()));
      }
      emit(out_path, write_qsf(state, sample_logic), out);
      return kExitYes;
    }

    if (suite->parsed()) {
      const auto checks = run_reproduction_suite();
      std::size_t passed = 0;
      for (const auto& c : checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
        passed += c.passed;
      }
      out << passed << "/" << checks.size() << " checks passed\n";
      return passed == checks.size() ? kExitYes : kExitNo;
    }

    const Rational fill = parse_rational(fill_text);
    const auto loaded = load_state_document(state_path, logic_path);
    const Family& family = loaded.logic.family;

    if (check_state->parsed()) {
      try {
        const StateTable state = complete_state(family, loaded.doc.assignments, fill);
        out << "STATE valid\n";
        return kExitYes;
      } catch (const InvalidState& e) {
        out << "STATE invalid: " << e.violation().describe() << '\n';
        return kExitNo;
      }
    }

    const StateTable state = complete_state(family, loaded.doc.assignments, fill);

    if (subadditive->parsed()) {
      const auto result = is_subadditive(state);
      out << "SUBADDITIVE " << yes_no(result.holds);
      if (result.witness) out << ' ' << format_set(result.witness->first) << ' ' << format_set(result.witness->second);
      out << '\n';
      return result.holds ? kExitYes : kExitNo;
    }

    if (extend->parsed()) {
      const auto outcome = kind == "signed" ? solve_signed_extension(state) : solve_state_extension(state);
      if (format == "machine")
        out << format_outcome_machine(outcome) << '\n';
      else
        out << human_outcome(outcome, state, kind);
      return feasible(outcome) ? kExitYes : kExitNo;
    }

    if (classify->parsed()) {
      const auto c = classify_state(state);
      out << "signed_extendable=" << yes_no(c.signed_extendable) << '\n';
      out << "state_extendable=" << yes_no(c.state_extendable) << '\n';
      if (c.subadditive) out << "subadditive=" << yes_no(*c.subadditive) << '\n';
      out << "two_valued=" << yes_no(c.two_valued) << '\n';
      out << "dirac=" << (c.dirac ? std::to_string(*c.dirac) : "none") << '\n';
      return kExitYes;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace qlogic
