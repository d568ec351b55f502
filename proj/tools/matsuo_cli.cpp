// matsuo: build Matsuo algebras, compute derivations, classify lines and run
// the verification suites. Exit codes: 0 pass, 1 check failed, 2 usage error.

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "matsuo/errors.hpp"
#include "matsuo/report.hpp"

namespace {

enum class Format { Text, Json, Csv };

struct Output {
  bool json = false;
  bool csv = false;
  bool timing = false;
  std::string out;
};

void add_output(CLI::App* cmd, Output& o) {
  auto* j = cmd->add_flag("--json", o.json, "JSON report");
  auto* c = cmd->add_flag("--csv", o.csv, "CSV table");
  j->excludes(c);
  cmd->add_flag("--timing", o.timing, "Include wall-clock duration (reports are then not reproducible)");
  cmd->add_option("--out", o.out, "Write the report to a file instead of stdout");
}

int emit(const matsuo::report::Result& r, const Output& o, double ms) {
  nlohmann::json j = r.json;
  if (o.timing) j["duration_ms"] = ms;
  std::string text;
  if (o.json) {
    text = j.dump(2) + "\n";
  } else if (o.csv) {
    text = matsuo::report::to_csv(j);
  } else {
    text = matsuo::report::to_text(j);
  }
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out);
    if (!f) {
      std::cerr << "error: cannot write " << o.out << "\n";
      return 2;
    }
    f << text;
  }
  return r.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matsuo algebras of 3-transposition groups"};
  app.require_subcommand(1);
  matsuo::report::Options opt;
  Output out;
  std::string group;
  std::string system = "both";
  std::string suite;
  std::string type;

  auto field_opt = [&](CLI::App* cmd) {
    cmd->add_option("--field", opt.field, "Field: Q, Fp:<p>, F<p>, Q(sqrt:<d>), Fp:<p>(sqrt:<d>)")
        ->capture_default_str();
    cmd->add_option("--eta", opt.eta, "Axis parameter eta")->capture_default_str();
  };

  auto* build = app.add_subcommand("build", "Construct an algebra and summarize its Fischer space");
  build->add_option("group", group, "Group: S<n>, W:<type>, 3W:<type>, M3:<n>, A+B")->required();
  field_opt(build);
  build->add_flag("--constants", opt.constants, "Embed the structure constants");
  add_output(build, out);

  auto* derive = app.add_subcommand("derive", "Derivation algebra");
  derive->add_option("group", group, "Group descriptor")->required();
  field_opt(derive);
  derive->add_option("--system", system, "Constraint system")
      ->check(CLI::IsMember({"leibniz", "r", "both"}))
      ->capture_default_str();
  add_output(derive, out);

  auto* classify = app.add_subcommand("classify", "Near-solid line classification");
  classify->alias("classify-lines");
  classify->add_option("group", group, "Group descriptor")->required();
  add_output(classify, out);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "all, fusion, equivalence, model, torus, section, char3")
      ->required()
      ->check(CLI::IsMember({"all", "fusion", "equivalence", "model", "torus", "section", "char3"}));
  field_opt(verify);
  verify->add_option("--seed", opt.seed, "Seed for random parameters")->capture_default_str();
  verify->add_option("--group", opt.group, "Restrict group suites to one group");
  verify->add_option("--type", opt.type, "Restrict root system suites to one type, e.g. A3");
  add_output(verify, out);

  auto* verify_model = app.add_subcommand("verify-model", "Model, torus and section checks for one root system");
  verify_model->add_option("--type", type, "Root system, e.g. A2 or D4")->required();
  field_opt(verify_model);
  verify_model->add_option("--seed", opt.seed, "Seed for random parameters")->capture_default_str();
  add_output(verify_model, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    auto start = std::chrono::steady_clock::now();
    matsuo::report::Result r;
    if (*build) {
      r = matsuo::report::build(group, opt);
    } else if (*derive) {
      r = matsuo::report::derive(group, system, opt);
    } else if (*classify) {
      r = matsuo::report::classify(group);
    } else if (*verify) {
      r = matsuo::report::verify(suite, opt);
    } else {
      r = matsuo::report::verify_model(type, opt);
    }
    std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
    return emit(r, out, ms.count());
  } catch (const matsuo::VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 1;
  } catch (const matsuo::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
