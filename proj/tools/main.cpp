#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "pairprod/runner.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Electron-positron pair creation from vacuum by time-dependent "
               "electric-field pulses"};
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> overrides;
  std::string output_override;
  std::string method_a, method_b;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("config", config_path, "run configuration file")->required();
    cmd->add_option("--override", overrides,
                    "override a configuration entry, section.key=value");
    cmd->add_option("-o,--output", output_override, "output file path");
  };

  add_common(app.add_subcommand("pulse", "emit the field/potential time series"));
  add_common(app.add_subcommand("point", "single-momentum amplitude record"));
  add_common(app.add_subcommand("scan", "momentum-grid sweep"));
  auto* compare = app.add_subcommand("compare", "cross-method difference report");
  add_common(compare);
  compare->add_option("method_a", method_a, "first method")->required();
  compare->add_option("method_b", method_b, "second method")->required();
  add_common(app.add_subcommand("phase", "phase map and singularity list"));

  CLI11_PARSE(app, argc, argv);

  try {
    pairprod::RunConfig config = pairprod::parse_config(read_file(config_path));
    for (const auto& assignment : overrides) {
      pairprod::apply_override(config, assignment);
    }
    if (!output_override.empty()) config.output = output_override;
    config.validate();

    const std::string command = app.get_subcommands().front()->get_name();
    std::vector<std::string> extra;
    if (command == "compare") extra = {method_a, method_b};
    const auto files = pairprod::run_command(command, config, extra);
    for (const auto& f : files) std::cout << f << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 1;
  }
}
