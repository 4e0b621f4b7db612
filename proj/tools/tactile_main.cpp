#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "tactile/config.hpp"
#include "tactile/errors.hpp"
#include "tactile/pipeline.hpp"

namespace {

void print_usage(std::ostream& out) {
    out << "tactile - convert color images into tactile-graphics pages\n"
           "\n"
           "Usage:\n"
           "  tactile convert <input> [options]\n"
           "\n"
           "Input formats: 8-bit PNG (RGB/RGBA) or binary PPM (P6).\n"
           "\n"
           "Options:\n"
           "  --config FILE   key=value pipeline configuration\n"
           "  --out DIR       output directory (default: out)\n"
           "  --edges-only    export the 16-bit edge map and stop, for hand editing\n"
           "  --edges-in FILE use an edited 16-bit edge map instead of detecting\n"
           "  --fringe        enable transitional-hue texture subclasses\n"
           "  --no-fringe     disable them (default)\n"
           "  --stage NAME    run one stage only: edges, lines, quantize,\n"
           "                  density, textures or page\n"
           "  --dpi N         override the output resolution\n"
           "\n"
           "Exit codes: 0 ok, 1 usage, 2 validation, 3 I/O.\n";
}

struct CliArgs {
    std::string input;
    std::string config_path;
    std::string out_dir = "out";
    std::string stage;
    tactile::ConvertOptions convert;
    int fringe_override = -1;  // -1 unset, 0 off, 1 on
    int dpi_override = 0;
};

CliArgs parse_args(const std::vector<std::string>& args) {
    CliArgs parsed;
    auto value_of = [&args](size_t& i, const std::string& flag) {
        if (i + 1 >= args.size()) throw tactile::UsageError("missing value for " + flag);
        return args[++i];
    };
    for (size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--config")
            parsed.config_path = value_of(i, a);
        else if (a == "--out")
            parsed.out_dir = value_of(i, a);
        else if (a == "--edges-only")
            parsed.convert.edges_only = true;
        else if (a == "--edges-in")
            parsed.convert.edges_in = value_of(i, a);
        else if (a == "--fringe")
            parsed.fringe_override = 1;
        else if (a == "--no-fringe")
            parsed.fringe_override = 0;
        else if (a == "--stage")
            parsed.stage = value_of(i, a);
        else if (a == "--dpi")
            parsed.dpi_override = std::atoi(value_of(i, a).c_str());
        else if (!a.empty() && a[0] == '-')
            throw tactile::UsageError("unknown option '" + a + "'");
        else if (parsed.input.empty())
            parsed.input = a;
        else
            throw tactile::UsageError("unexpected argument '" + a + "'");
    }
    if (parsed.input.empty()) throw tactile::UsageError("missing input image");
    return parsed;
}

int run_convert_command(const std::vector<std::string>& args) {
    const CliArgs parsed = parse_args(args);

    tactile::PipelineConfig cfg =
        parsed.config_path.empty() ? tactile::PipelineConfig{} : tactile::load_config(parsed.config_path);
    if (parsed.fringe_override >= 0) cfg.fringe_enabled = parsed.fringe_override == 1;
    if (parsed.dpi_override > 0) cfg.dpi = parsed.dpi_override;
    tactile::validate_config(cfg);

    tactile::RunManifest manifest;
    if (!parsed.stage.empty())
        manifest = tactile::run_stage(parsed.stage, parsed.input, cfg, parsed.out_dir);
    else
        manifest = tactile::run_convert(parsed.input, cfg, parsed.out_dir, parsed.convert);

    for (const auto& [name, path] : manifest.artifacts) std::cout << name << ": " << path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        if (args.empty()) {
            print_usage(std::cerr);
            return 1;
        }
        const std::string command = args[0];
        if (command == "help" || command == "--help" || command == "-h") {
            print_usage(std::cout);
            return 0;
        }
        if (command == "convert") return run_convert_command({args.begin() + 1, args.end()});
        throw tactile::UsageError("unknown command '" + command + "'");
    } catch (const tactile::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n\n";
        print_usage(std::cerr);
        return 1;
    } catch (const tactile::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const tactile::IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
