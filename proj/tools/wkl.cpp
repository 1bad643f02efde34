// wkl: exact computations for affine Weyl groups, Kazhdan-Lusztig
// polynomials and W-algebra characters. See README.md for the subcommands.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wkl/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact affine Kazhdan-Lusztig and W-algebra character computations"};
  std::string command, config_path, format = "json";
  std::vector<std::string> overrides;
  std::string names;
  for (const auto& s : wkl::cli::subcommands()) names += (names.empty() ? "" : ", ") + s;
  app.add_option("command", command, "Subcommand: " + names)->required();
  app.add_option("-c,--config", config_path, "JSON job configuration file");
  app.add_option("-s,--set", overrides, "Override a config key, e.g. --set k=-7/2 (repeatable)");
  app.add_option("-f,--format", format, "Output format: json, tsv or pretty");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  try {
    nlohmann::json cfg = config_path.empty() ? nlohmann::json::object() : wkl::cli::read_config_file(config_path);
    for (const auto& o : overrides) wkl::cli::apply_override(cfg, o);
    auto job = wkl::cli::parse_config(cfg);
    auto fmt = wkl::cli::parse_format(format);
    std::cout << wkl::cli::emit_report(wkl::cli::run(command, job), fmt);
    return 0;
  } catch (const wkl::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const wkl::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const wkl::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 3;
  }
}
