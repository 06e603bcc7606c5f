#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "linftrees/errors.hpp"
#include "linftrees/reports.hpp"
#include "linftrees/svg_fan.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitGuard = 3;

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

std::string format_report(const nlohmann::json& report, const std::string& format) {
  if (format == "text") return linftrees::render_text(report);
  return linftrees::to_output_string(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact l-infinity fitting of ultrametrics and tree metrics"};
  app.require_subcommand(1);

  std::string input, output, format = "json", mode = "tree";
  std::uint64_t seed = linftrees::kDefaultCensusSeed;
  std::size_t samples = 50000;
  std::vector<long> box{0, 100};

  auto add_io = [&](CLI::App* cmd, bool with_input) {
    if (with_input) cmd->add_option("--input", input, "input file path");
    cmd->add_option("--output", output, "output file path (default stdout)");
    cmd->add_option("--format", format, "json|text|svg")->default_val("json");
  };

  CLI::App* ultra = app.add_subcommand("ultra", "closest ultrametrics of a dissimilarity map");
  add_io(ultra, true);
  ultra->get_option("--input")->required();

  CLI::App* tree = app.add_subcommand("tree", "closest tree metrics of a dissimilarity map");
  add_io(tree, true);
  tree->get_option("--input")->required();
  tree->add_option("--mode", mode, "tree|grassmannian")->default_val("tree");

  CLI::App* type = app.add_subcommand("type", "type of a point against a linear subspace");
  add_io(type, true);
  type->get_option("--input")->required();

  CLI::App* fan3 = app.add_subcommand("fan3", "SVG of the 3-leaf district decomposition");
  add_io(fan3, true);  // optional overlay input

  CLI::App* census = app.add_subcommand("census", "district census of random 4-leaf points");
  add_io(census, false);
  census->add_option("--seed", seed, "RNG seed")->default_val(linftrees::kDefaultCensusSeed);
  census->add_option("--samples", samples, "sample count")->default_val(50000);
  census->add_option("--box", box, "sampling box LO HI")->expected(2);

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(ultra)) {
      const auto delta = linftrees::load_dissimilarity(input);
      write_output(output, format_report(linftrees::report_ultra(delta), format));
    } else if (app.got_subcommand(tree)) {
      if (mode != "tree" && mode != "grassmannian") {
        std::cerr << "error: --mode must be tree or grassmannian\n";
        return kExitParse;
      }
      const auto delta = linftrees::load_dissimilarity(input);
      const auto fit_mode = mode == "tree" ? linftrees::FitMode::TreeMetric
                                           : linftrees::FitMode::Grassmannian;
      write_output(output, format_report(linftrees::report_tree(delta, fit_mode), format));
    } else if (app.got_subcommand(type)) {
      const auto in = linftrees::load_type_input(input);
      write_output(output, format_report(linftrees::report_type(in.basis, in.point), format));
    } else if (app.got_subcommand(fan3)) {
      std::optional<linftrees::DissimilarityMap> overlay;
      if (!input.empty()) overlay = linftrees::load_dissimilarity(input);
      write_output(output, linftrees::svg_fan3(overlay));
    } else if (app.got_subcommand(census)) {
      linftrees::CensusOptions opts;
      opts.sample_count = samples;
      opts.seed = seed;
      opts.box_lo = box.at(0);
      opts.box_hi = box.at(1);
      write_output(output, format_report(linftrees::report_census(opts), format));
    }
  } catch (const linftrees::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const linftrees::GuardViolation& e) {
    std::cerr << "guard violation: " << e.what() << "\n";
    return kExitGuard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
