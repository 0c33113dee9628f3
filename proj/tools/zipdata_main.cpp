#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zipdata/config.hpp"
#include "zipdata/equivalence.hpp"
#include "zipdata/errors.hpp"
#include "zipdata/forest.hpp"
#include "zipdata/report.hpp"
#include "zipdata/verification.hpp"
#include "zipdata/zoo.hpp"

namespace fs = std::filesystem;
using namespace zipdata;

namespace {

enum Exit : int {
  ok = 0,
  usage = 1,
  config = 2,
  check_failed = 3,
  resource = 4,
  bad_homomorphism = 5,
};

struct Output {
  std::optional<fs::path> dir;

  void emit(const std::string& file, const std::string& text) const {
    if (!dir) {
      std::cout << text;
      return;
    }
    fs::create_directories(*dir);
    std::ofstream out(*dir / file, std::ios::binary);
    out << text;
    if (!out) throw std::runtime_error("cannot write " + (*dir / file).string());
    std::cout << "wrote " << (*dir / file).string() << "\n";
  }
};

void print_checks(const std::string& label, const VerificationReport& r) {
  for (const auto& c : r.checks)
    std::cerr << (c.passed ? "PASS " : "FAIL ") << label << " " << c.name
              << (c.detail.empty() ? "" : ": " + c.detail) << " (" << std::fixed << std::setprecision(3) << c.seconds << " s)\n";
}

int run(const std::string& command, const std::string& config_path, const LoadOptions& load,
        const Output& out) {
  if (command == "zoo") {
    std::vector<std::pair<std::string, VerificationReport>> results;
    bool all = true;
    for (const auto& entry : build_small_zoo()) {
      auto r = run_verification(entry.datum);
      print_checks(entry.name, r);
      all = all && r.all_passed();
      results.emplace_back(entry.name, std::move(r));
    }
    out.emit("zoo.json", zoo_report(results));
    return all ? ok : check_failed;
  }
  if (config_path.empty()) throw config_error("--config", "required for command " + command);
  const LoadedConfig cfg = load_config_file(config_path, load);
  const ZipDatum& z = cfg.datum;
  if (command == "refine") {
    out.emit("refine.json", trace_report(refine_to_stationary(z), cfg.label));
  } else if (command == "infinity") {
    out.emit("infinity.json", infinity_report(refine_to_stationary(z), cfg.label));
  } else if (command == "orbits") {
    out.emit("orbits.json", classes_report(fine_orbits(z), cfg.label));
  } else if (command == "classes") {
    out.emit("classes.json", classes_report(zip_classes(z), cfg.label));
  } else if (command == "forest") {
    const RepForest f = build_forest(z);
    out.emit("forest.json", forest_report(f, cfg.label));
    out.emit("forest.dot", forest_dot(f));
  } else if (command == "verify") {
    const auto r = run_verification(z);
    print_checks(cfg.label, r);
    out.emit("verify.json", verification_report(r, cfg.label));
    return r.all_passed() ? ok : check_failed;
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zip data: refinement, equivalence classes and representative forests"};
  std::string config_path;
  std::string command;
  std::string out_dir;
  std::string twist_literal;
  std::size_t max_order = 20000;
  app.add_option("--config", config_path, "JSON config describing the zip datum");
  app.add_option("--command", command, "Computation to run")
      ->required()
      ->check(CLI::IsMember({"refine", "infinity", "orbits", "classes", "forest", "verify", "zoo"}));
  app.add_option("--out", out_dir, "Directory for report files (default: stdout)");
  app.add_option("--twist", twist_literal, "Element of G to twist by, replacing the config's twist");
  app.add_option("--max-order", max_order, "Refuse groups with more elements than this")
      ->capture_default_str();
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage;
  }

  LoadOptions load{max_order, std::nullopt};
  if (!twist_literal.empty()) load.twist = twist_literal;
  Output out;
  if (!out_dir.empty()) out.dir = out_dir;
  try {
    return run(command, config_path, load, out);
  } catch (const invalid_homomorphism& ex) {
    std::cerr << "invalid homomorphism: " << ex.what() << "\n";
    return bad_homomorphism;
  } catch (const input_error& ex) {
    std::cerr << "config error: " << ex.what() << "\n";
    return config;
  } catch (const resource_limit& ex) {
    std::cerr << "resource limit: " << ex.what() << "\n";
    return resource;
  } catch (const falsified_statement& ex) {
    std::cerr << "check failed: " << ex.what() << "\n";
    return check_failed;
  } catch (const invariant_violation& ex) {
    std::cerr << "internal invariant failed: " << ex.what() << "\n";
    return check_failed;
  }
}
