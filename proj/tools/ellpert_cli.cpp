#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ellpert/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Perturbation-series solver for planar strongly elliptic systems"};
    std::string config_path;
    std::string output_dir;
    bool quiet = false;
    app.add_option("--config", config_path, "JSON run configuration")->required();
    app.add_option("--output", output_dir, "output directory, overrides output_dir in the config");
    app.add_flag("--quiet", quiet, "suppress progress output");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : ellpert::cli::kExitConfig;
    }

    ellpert::cli::RunConfig cfg;
    try {
        cfg = ellpert::cli::load_config(config_path);
    } catch (const ellpert::cli::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return ellpert::cli::kExitConfig;
    }
    if (!output_dir.empty()) cfg.output_dir = output_dir;

    std::ostringstream sink;
    return ellpert::cli::run(cfg, quiet ? static_cast<std::ostream&>(sink) : std::cout, std::cerr);
}
