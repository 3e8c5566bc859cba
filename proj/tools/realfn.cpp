#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "realfn/commands.hpp"

using namespace realfn;

namespace {

int emit(const CommandResult& r, const std::string& json_out) {
  if (!r.error.empty()) std::cerr << r.error << "\n";
  if (r.output.is_null()) return r.exit_code;
  const std::string text = r.output.dump(2) + "\n";
  if (json_out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(json_out);
    if (!out) {
      std::cerr << "invalid input: cannot write " << json_out << "\n";
      return kInvalidInput;
    }
    out << text;
  }
  return r.exit_code;
}

Json load(const std::string& path) {
  if (path == "-") return Json::parse(std::cin);
  return read_json_file(path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Real and pseudoreal forms of rational maps of the sphere"};
  app.require_subcommand(1);

  std::string json_out, tau_name, mode_name;
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  auto add_common = [&](CLI::App* sub, bool with_mode) {
    sub->add_option("--tau", tau_name, "conj | antipodal")->check(CLI::IsMember({"conj", "antipodal"}));
    if (with_mode) sub->add_option("--mode", mode_name, "exact | float")->check(CLI::IsMember({"exact", "float"}));
    sub->add_option("--tol", tol, "float tolerance (default 1e-9)");
    sub->add_option("--seed", seed, "random seed (default 0)");
    sub->add_option("--json-out", json_out, "write the JSON report here instead of stdout");
  };

  std::string instance_path;
  auto* test = app.add_subcommand("test", "decide real / pseudoreal / not equivalent");
  test->add_option("instance", instance_path, "instance JSON file, - for stdin")->required();
  add_common(test, true);

  auto* divisor = app.add_subcommand("divisor", "report the critical values and Sigma(f)");
  divisor->add_option("instance", instance_path, "instance JSON file, - for stdin")->required();
  add_common(divisor, true);

  int degree = 1;
  std::string class_name = "real";
  auto* scr = app.add_subcommand("scramble", "generate an instance of known class");
  scr->add_option("--degree", degree, "degree of the map")->required();
  scr->add_option("--class", class_name, "real | pseudoreal")->check(CLI::IsMember({"real", "pseudoreal"}));
  add_common(scr, true);

  int count = 10, max_degree = 4;
  auto* self = app.add_subcommand("selfcheck", "check criterion against construction on generated instances");
  self->add_option("--count", count, "instances per involution");
  self->add_option("--max-degree", max_degree, "largest degree drawn");
  add_common(self, true);

  std::string constellation_path, action;
  auto* mono = app.add_subcommand("monodromy", "validate | genus | blocks | quotient on a constellation");
  mono->add_option("action", action, "validate | genus | blocks | quotient")
      ->required()
      ->check(CLI::IsMember({"validate", "genus", "blocks", "quotient"}));
  mono->add_option("constellation", constellation_path, "constellation JSON file, - for stdin")->required();
  mono->add_option("--json-out", json_out, "write the JSON report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalidInput;
  }

  Overrides o;
  if (!tau_name.empty()) o.tau = involution_from_string(tau_name);
  if (!mode_name.empty()) o.mode = mode_from_string(mode_name);
  o.tol = tol;
  o.seed = seed;
  if (tol && !(*tol > 0)) {
    std::cerr << "invalid input: --tol must be positive\n";
    return kInvalidInput;
  }

  if (*test || *divisor) {
    CommandResult r = guarded([&]() -> CommandResult {
      const Json instance = load(instance_path);
      return *test ? cmd_test(instance, o) : cmd_divisor(instance, o);
    });
    return emit(r, json_out);
  }
  if (*scr) {
    const VerdictKind cls = class_name == "real" ? VerdictKind::Real : VerdictKind::Pseudoreal;
    return emit(cmd_scramble(seed.value_or(0), degree, o.tau.value_or(Involution::Conj), cls,
                             o.mode.value_or(Mode::Float)),
                json_out);
  }
  if (*self) {
    return emit(cmd_selfcheck(count, max_degree, seed.value_or(0), o.mode.value_or(Mode::Float), tol.value_or(1e-9)),
                json_out);
  }
  CommandResult r = guarded([&]() -> CommandResult { return cmd_monodromy(load(constellation_path), action); });
  return emit(r, json_out);
}
