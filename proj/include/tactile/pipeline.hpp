#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tactile/config.hpp"
#include "tactile/raster.hpp"

namespace tactile {

struct StageTiming {
    std::string stage;
    double ms = 0.0;
};

// Everything one conversion run produced: config snapshot, artifact paths
// (each emitted file exactly once) and per-stage wall times.
struct RunManifest {
    std::string input_path;
    PipelineConfig config;
    std::vector<std::pair<std::string, std::string>> artifacts;  // name -> path
    std::vector<StageTiming> timings;
};

// Flat key=value serialization (input=, config.*, artifact.*, timing.*).
void write_manifest(const RunManifest& manifest, const std::string& path);

struct ConvertOptions {
    bool edges_only = false;   // stop after exporting the edge map
    std::string edges_in;      // nonempty: use this map instead of detecting
};

// Full conversion. Edge detection always runs on the unblurred input; lines
// and textures derive independently from the edge map and are composed into
// the framed page. Writes edges.pgm, lines.png, classes.png, density.pgm,
// textures.png, page.png, page.pgm and manifest.txt under out_dir.
RunManifest run_convert(const std::string& input_path, const PipelineConfig& cfg, const std::string& out_dir,
                        const ConvertOptions& options = {});

// Runs one stage and emits only its raster. Stages downstream of edge
// detection read edges.pgm from out_dir and fail if it is missing.
// Valid names: edges, lines, quantize, density, textures, page.
RunManifest run_stage(const std::string& stage, const std::string& input_path, const PipelineConfig& cfg,
                      const std::string& out_dir);

}  // namespace tactile
