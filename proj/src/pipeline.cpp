#include "tactile/pipeline.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "tactile/color_quant.hpp"
#include "tactile/edge_detect.hpp"
#include "tactile/errors.hpp"
#include "tactile/image_io.hpp"
#include "tactile/layout.hpp"
#include "tactile/line_render.hpp"
#include "tactile/texture_synth.hpp"

namespace tactile {

namespace {

namespace fs = std::filesystem;

class StageClock {
   public:
    explicit StageClock(RunManifest& manifest) : manifest_(manifest) {}

    template <typename Fn>
    auto run(const std::string& stage, Fn&& fn) {
        const auto t0 = std::chrono::steady_clock::now();
        auto result = fn();
        const auto t1 = std::chrono::steady_clock::now();
        manifest_.timings.push_back({stage, std::chrono::duration<double, std::milli>(t1 - t0).count()});
        return result;
    }

   private:
    RunManifest& manifest_;
};

std::string artifact_path(const std::string& out_dir, const char* name) {
    return (fs::path(out_dir) / name).string();
}

void ensure_out_dir(const std::string& out_dir) {
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create output directory '" + out_dir + "': " + ec.message());
}

EdgeStrengthMap obtain_edges(const ColorImage& img, const PipelineConfig& cfg, const ConvertOptions& options) {
    if (!options.edges_in.empty()) return import_edges(options.edges_in, img.width, img.height);
    return detect_edges(img, cfg);
}

EdgeStrengthMap load_stage_edges(const std::string& out_dir, int w, int h) {
    const std::string path = artifact_path(out_dir, "edges.pgm");
    if (!fs::exists(path))
        throw IoError("stage input missing: '" + path + "' (run the edges stage first)");
    return import_edges(path, w, h);
}

}  // namespace

void write_manifest(const RunManifest& manifest, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << "input=" << manifest.input_path << "\n";
    for (const auto& [key, value] : config_entries(manifest.config)) out << "config." << key << "=" << value << "\n";
    for (const auto& [name, file] : manifest.artifacts) out << "artifact." << name << "=" << file << "\n";
    char buf[64];
    for (const auto& t : manifest.timings) {
        std::snprintf(buf, sizeof(buf), "%.3f", t.ms);
        out << "timing." << t.stage << "_ms=" << buf << "\n";
    }
    if (!out) throw IoError("write failed for '" + path + "'");
}

RunManifest run_convert(const std::string& input_path, const PipelineConfig& cfg, const std::string& out_dir,
                        const ConvertOptions& options) {
    ensure_out_dir(out_dir);
    RunManifest manifest;
    manifest.input_path = input_path;
    manifest.config = cfg;
    StageClock clock(manifest);

    const ColorImage img = clock.run("load", [&] { return load_color_image(input_path); });
    const EdgeStrengthMap edges = clock.run("edges", [&] { return obtain_edges(img, cfg, options); });

    const std::string edges_file = artifact_path(out_dir, "edges.pgm");
    save_gray_image(edges, edges_file, 16);
    manifest.artifacts.emplace_back("edges", edges_file);

    if (options.edges_only) {
        write_manifest(manifest, artifact_path(out_dir, "manifest.txt"));
        return manifest;
    }

    const BinaryEdgeMap edge_mask = threshold_edges(edges, cfg.edge_threshold);
    const LineLayer lines = clock.run("lines", [&] { return render_lines(edges, cfg); });
    const GapMask gap = clock.run("gap", [&] { return compute_gap_mask(lines, cfg.gap_width); });
    const QuantizedColorField field = clock.run("quantize", [&] { return quantize_field(img, cfg); });
    const DensityField density = clock.run("density", [&] { return compute_density(edge_mask, cfg); });
    const TextureLayer textures = clock.run("textures", [&] { return stamp_texture(field, density, gap, cfg); });

    const ComposedPage composed = clock.run("page", [&] {
        const BinaryImage main = compose_tactile(lines, textures);
        const LineLayer thumb = make_thumbnail(lines, cfg.thumbnail_scale);
        return compose_page(main, thumb, cfg);
    });

    const std::string lines_file = artifact_path(out_dir, "lines.png");
    save_binary_png(lines, lines_file);
    manifest.artifacts.emplace_back("lines", lines_file);

    const std::string classes_file = artifact_path(out_dir, "classes.png");
    save_class_debug_png(field, classes_file);
    manifest.artifacts.emplace_back("classes", classes_file);

    const std::string density_file = artifact_path(out_dir, "density.pgm");
    save_gray_image(density, density_file, 8);
    manifest.artifacts.emplace_back("density", density_file);

    const std::string textures_file = artifact_path(out_dir, "textures.png");
    save_binary_png(textures, textures_file);
    manifest.artifacts.emplace_back("textures", textures_file);

    const std::string page_file = artifact_path(out_dir, "page.png");
    save_binary_png(composed.page.ink, page_file, composed.page.dpi);
    manifest.artifacts.emplace_back("page", page_file);

    const std::string page_pgm_file = artifact_path(out_dir, "page.pgm");
    save_binary_pgm(composed.page.ink, page_pgm_file);
    manifest.artifacts.emplace_back("page_pgm", page_pgm_file);

    write_manifest(manifest, artifact_path(out_dir, "manifest.txt"));
    return manifest;
}

RunManifest run_stage(const std::string& stage, const std::string& input_path, const PipelineConfig& cfg,
                      const std::string& out_dir) {
    ensure_out_dir(out_dir);
    RunManifest manifest;
    manifest.input_path = input_path;
    manifest.config = cfg;
    StageClock clock(manifest);

    const ColorImage img = load_color_image(input_path);

    if (stage == "edges") {
        const EdgeStrengthMap edges = clock.run(stage, [&] { return detect_edges(img, cfg); });
        const std::string file = artifact_path(out_dir, "edges.pgm");
        save_gray_image(edges, file, 16);
        manifest.artifacts.emplace_back("edges", file);
    } else if (stage == "lines") {
        const EdgeStrengthMap edges = load_stage_edges(out_dir, img.width, img.height);
        const LineLayer lines = clock.run(stage, [&] { return render_lines(edges, cfg); });
        const std::string file = artifact_path(out_dir, "lines.png");
        save_binary_png(lines, file);
        manifest.artifacts.emplace_back("lines", file);
    } else if (stage == "quantize") {
        const QuantizedColorField field = clock.run(stage, [&] { return quantize_field(img, cfg); });
        const std::string file = artifact_path(out_dir, "classes.png");
        save_class_debug_png(field, file);
        manifest.artifacts.emplace_back("classes", file);
    } else if (stage == "density") {
        const EdgeStrengthMap edges = load_stage_edges(out_dir, img.width, img.height);
        const DensityField density = clock.run(stage, [&] {
            return compute_density(threshold_edges(edges, cfg.edge_threshold), cfg);
        });
        const std::string file = artifact_path(out_dir, "density.pgm");
        save_gray_image(density, file, 8);
        manifest.artifacts.emplace_back("density", file);
    } else if (stage == "textures") {
        const EdgeStrengthMap edges = load_stage_edges(out_dir, img.width, img.height);
        const TextureLayer textures = clock.run(stage, [&] {
            const GapMask gap = compute_gap_mask(render_lines(edges, cfg), cfg.gap_width);
            const DensityField density = compute_density(threshold_edges(edges, cfg.edge_threshold), cfg);
            return stamp_texture(quantize_field(img, cfg), density, gap, cfg);
        });
        const std::string file = artifact_path(out_dir, "textures.png");
        save_binary_png(textures, file);
        manifest.artifacts.emplace_back("textures", file);
    } else if (stage == "page") {
        const EdgeStrengthMap edges = load_stage_edges(out_dir, img.width, img.height);
        const ComposedPage composed = clock.run(stage, [&] {
            const LineLayer lines = render_lines(edges, cfg);
            const GapMask gap = compute_gap_mask(lines, cfg.gap_width);
            const DensityField density = compute_density(threshold_edges(edges, cfg.edge_threshold), cfg);
            const TextureLayer textures = stamp_texture(quantize_field(img, cfg), density, gap, cfg);
            const BinaryImage main = compose_tactile(lines, textures);
            return compose_page(main, make_thumbnail(lines, cfg.thumbnail_scale), cfg);
        });
        const std::string file = artifact_path(out_dir, "page.png");
        save_binary_png(composed.page.ink, file, composed.page.dpi);
        manifest.artifacts.emplace_back("page", file);
    } else {
        throw UsageError("unknown stage '" + stage + "' (expected edges, lines, quantize, density, textures or page)");
    }

    write_manifest(manifest, artifact_path(out_dir, "manifest.txt"));
    return manifest;
}

}  // namespace tactile
