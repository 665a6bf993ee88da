#include "lltext/dataio.hpp"
#include "lltext/dsf.hpp"
#include "lltext/error.hpp"
#include "lltext/evalproto.hpp"
#include "lltext/numgrid.hpp"
#include "lltext/tsr.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <memory>
#include <set>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace lltext;
namespace fs = std::filesystem;

namespace {

constexpr int kOk = 0;
constexpr int kBelowThreshold = 1;
constexpr int kUsage = 2;

struct ShapeArgs {
    std::string maps;
    std::string image;
    std::string out;
    ShapingConfig cfg;
    std::size_t frame = 640;
    std::size_t channels = 8;
    std::uint64_t seed = 0;
};

struct EvalArgs {
    std::string pred;
    std::string gt;
    double iou = 0.5;
    int jobs = 1;
    double assert_f1 = -1.0;
    bool table = false;
};

struct BenchArgs {
    std::size_t k = 2000;
    int trials = 20;
    std::uint64_t seed = 0;
};

struct SynthArgs {
    SynthSpec spec;
    BandSpec second;
    bool two_bands = false;
    std::uint64_t seed = 0;
    std::string out;
};

struct RenderArgs {
    std::string image;
    std::string polys;
    std::string out;
};

void add_shaping_flags(CLI::App& cmd, ShapingConfig& cfg) {
    cmd.add_option("--text-thresh", cfg.text_thresh, "Text map threshold")->capture_default_str();
    cmd.add_option("--center-thresh", cfg.center_thresh, "Centre map threshold")->capture_default_str();
    cmd.add_option("--rect-width", cfg.rect_width, "Component rectangle width, map px")->capture_default_str();
    cmd.add_option("--fps-budget", cfg.fps_budget, "Max samples per centre region")->capture_default_str();
    cmd.add_option("--fps-stop", cfg.fps_stop_dist, "FPS stop distance, map px")->capture_default_str();
    cmd.add_option("--close-kernel", cfg.close_kernel, "Odd closing kernel size")->capture_default_str();
    cmd.add_option("--min-area", cfg.min_area, "Minimum contour area, map px^2")->capture_default_str();
    cmd.add_flag("--offset-mode", cfg.offset_mode, "Regressed x/y are offsets from the pixel centre");
    cmd.add_option("--output-scale", cfg.output_scale, "Multiply output coordinates by this")->capture_default_str();
}

void add_band_flags(CLI::App& cmd, BandSpec& band, const std::string& prefix) {
    cmd.add_option("--" + prefix + "x-start", band.x_start, "Band start x")->capture_default_str();
    cmd.add_option("--" + prefix + "x-end", band.x_end, "Band end x")->capture_default_str();
    cmd.add_option("--" + prefix + "baseline", band.baseline, "Centreline y")->capture_default_str();
    cmd.add_option("--" + prefix + "amplitude", band.amplitude, "Sinusoid amplitude, px")->capture_default_str();
    cmd.add_option("--" + prefix + "period", band.period, "Sinusoid period, px")->capture_default_str();
    cmd.add_option("--" + prefix + "phase", band.phase, "Sinusoid phase, radians")->capture_default_str();
    cmd.add_option("--" + prefix + "height-start", band.height_start, "Band height at the start")->capture_default_str();
    cmd.add_option("--" + prefix + "height-end", band.height_end, "Band height at the end")->capture_default_str();
}

void print_kv(const std::string& key, const std::string& value) { std::cout << key << '=' << value << '\n'; }

template <class T>
void print_kv(const std::string& key, T value) {
    std::cout << key << '=' << value << '\n';
}

std::vector<TextPolygon> polygons_of(const std::vector<Annotation>& anns) {
    std::vector<TextPolygon> out;
    for (const auto& a : anns) out.push_back(a.polygon);
    return out;
}

// Maps from a grey image through the stand-in backbone and DSF.
GeometryMaps maps_from_image(const Grid& gray, const ShapeArgs& args) {
    const std::size_t f = args.frame, h = gray.dim(0), w = gray.dim(1);
    Grid input({1, 1, f, f});
    for (std::size_t i = 0; i < f; ++i)
        for (std::size_t j = 0; j < f; ++j) {
            const double y = (i + 0.5) * double(h) / double(f) - 0.5;
            const double x = (j + 0.5) * double(w) / double(f) - 0.5;
            const double yc = std::clamp(y, 0.0, double(h - 1)), xc = std::clamp(x, 0.0, double(w - 1));
            input.at(0, 0, i, j) = bilinear_at(gray.data(), h, w, yc, xc) / 255.0;
        }
    const auto feats = BackboneStub::seeded(args.channels, args.seed).forward(input);
    DsfConfig cfg;
    cfg.channels = args.channels;
    return dsf_forward(feats, DsfParams::seeded(cfg, args.seed + 1)).geometry();
}

int cmd_shape(const ShapeArgs& args) {
    args.cfg.validate();
    std::vector<TextPolygon> polys;
    if (!args.image.empty()) {
        if (args.frame == 0 || args.frame % 32 != 0) throw GeometryError("--frame must be a positive multiple of 32");
        const Grid gray = read_pgm(args.image);
        std::cerr << "shape: experimental image path, untrained weights, frame " << args.frame << "\n";
        ShapingConfig cfg = args.cfg;
        cfg.output_scale = 1.0;
        polys = shape_text(maps_from_image(gray, args), cfg);
        const double sx = 4.0 * double(gray.dim(1)) / double(args.frame) * args.cfg.output_scale;
        const double sy = 4.0 * double(gray.dim(0)) / double(args.frame) * args.cfg.output_scale;
        for (auto& p : polys)
            for (auto& v : p.vertices) v = {v.x * sx, v.y * sy};
    } else {
        const auto maps = read_geometry_maps(args.maps);
        polys = shape_text(maps, args.cfg);
    }
    write_annotations(args.out, polys);
    print_kv("polygons", polys.size());
    print_kv("out", args.out);
    return kOk;
}

std::vector<std::string> annotation_names(const fs::path& dir) {
    if (!fs::is_directory(dir)) throw FormatError(FormatError::Kind::Io, "not a directory: " + dir.string());
    std::vector<std::string> names;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".txt") names.push_back(e.path().filename().string());
    return names;
}

int cmd_eval(const EvalArgs& args) {
    if (!(args.iou > 0.0 && args.iou <= 1.0)) throw GeometryError("--iou must lie in (0, 1]");
    if (args.jobs < 1) throw GeometryError("--jobs must be at least 1");
    std::set<std::string> names;
    for (const auto& n : annotation_names(args.gt)) names.insert(n);
    for (const auto& n : annotation_names(args.pred)) names.insert(n);
    const std::vector<std::string> order(names.begin(), names.end());

    // Read serially so IO errors surface in a fixed order.
    std::vector<std::vector<Annotation>> preds(order.size()), gts(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        const auto p = fs::path(args.pred) / order[i], g = fs::path(args.gt) / order[i];
        if (fs::exists(p)) preds[i] = parse_annotations(p);
        if (fs::exists(g)) gts[i] = parse_annotations(g);
    }
    std::vector<ImageReport> rows(order.size());
    const auto n = static_cast<std::int64_t>(order.size());
#pragma omp parallel for num_threads(args.jobs) schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto pp = polygons_of(preds[i]), gp = polygons_of(gts[i]);
        const auto ignore = std::make_unique<bool[]>(gp.size() + 1);
        for (std::size_t k = 0; k < gp.size(); ++k) ignore[k] = gts[i][k].ignore;
        const auto m = match_image(pp, gp, args.iou, std::span<const bool>(ignore.get(), gp.size()));
        rows[i] = {order[i], m.tp, m.fp, m.fn};
    }
    const auto report = aggregate(rows);
    std::cout << format_key_values(report);
    print_kv("images", order.size());
    if (args.table) std::cerr << format_table(report);
    if (args.assert_f1 >= 0.0 && 100.0 * report.f1 < args.assert_f1) {
        std::cerr << "eval: f1 " << 100.0 * report.f1 << " below --assert-f1 " << args.assert_f1 << "\n";
        return kBelowThreshold;
    }
    return kOk;
}

int cmd_bench(const BenchArgs& args) {
    if (args.k == 0) throw GeometryError("--n-candidates must be at least 1");
    if (args.trials < 1) throw GeometryError("--trials must be at least 1");
    const auto c = synth_candidates(args.k, args.seed);
    const ShapingConfig cfg;
    using Clock = std::chrono::steady_clock;
    std::vector<double> fps_ms, nms_ms;
    std::uint64_t fps_ops = 0, nms_ops = 0;
    for (int t = 0; t < args.trials; ++t) {
        reset_overlap_count();
        auto t0 = Clock::now();
        shape_mask_fps(c.candidates, c.maps, cfg);
        fps_ms.push_back(std::chrono::duration<double, std::milli>(Clock::now() - t0).count());
        fps_ops = overlap_count();
        reset_overlap_count();
        t0 = Clock::now();
        shape_mask_nms(c.candidates, c.maps, cfg);
        nms_ms.push_back(std::chrono::duration<double, std::milli>(Clock::now() - t0).count());
        nms_ops = overlap_count();
        print_kv("trial_" + std::to_string(t) + "_fps_ms", fps_ms.back());
        print_kv("trial_" + std::to_string(t) + "_nms_ms", nms_ms.back());
    }
    auto median = [](std::vector<double> v) {
        std::sort(v.begin(), v.end());
        return v.size() % 2 ? v[v.size() / 2] : 0.5 * (v[v.size() / 2 - 1] + v[v.size() / 2]);
    };
    print_kv("n_candidates", args.k);
    print_kv("trials", args.trials);
    print_kv("fps_overlaps", fps_ops);
    print_kv("nms_overlaps", nms_ops);
    print_kv("fps_ms_median", median(fps_ms));
    print_kv("nms_ms_median", median(nms_ms));
    return kOk;
}

int cmd_synth(SynthArgs args) {
    if (args.two_bands) args.spec.bands.push_back(args.second);
    args.spec.validate();
    const auto syn = synth_maps(args.spec, args.seed);
    const fs::path dir(args.out);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw FormatError(FormatError::Kind::Io, "cannot create " + dir.string() + ": " + ec.message());
    write_geometry_maps(dir / "maps.tmap", syn.maps);
    write_annotations(dir / "truth.txt", syn.truth);
    Grid text = syn.maps.text;
    for (auto& v : text.data()) v *= 255.0;
    write_pgm(dir / "text.pgm", text);
    print_kv("maps", (dir / "maps.tmap").string());
    print_kv("truth", (dir / "truth.txt").string());
    print_kv("image", (dir / "text.pgm").string());
    print_kv("bands", syn.truth.size());
    return kOk;
}

int cmd_render(const RenderArgs& args) {
    const Grid gray = read_pgm(args.image);
    const auto polys = polygons_of(parse_annotations(args.polys));
    write_ppm(args.out, render_overlay(gray, polys));
    print_kv("polygons", polys.size());
    print_kv("out", args.out);
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Curved text shaping, evaluation and fixtures"};
    app.require_subcommand(1);

    ShapeArgs shape;
    auto* sh = app.add_subcommand("shape", "Turn geometry maps into text polygons");
    auto* maps_opt = sh->add_option("--maps", shape.maps, "Geometry map file")->check(CLI::ExistingFile);
    auto* image_opt = sh->add_option("--image", shape.image,
                                     "EXPERIMENTAL: grey PGM run through an untrained stand-in network")
                          ->check(CLI::ExistingFile);
    maps_opt->excludes(image_opt);
    sh->add_option("--out", shape.out, "Output annotation file")->required();
    sh->add_option("--frame", shape.frame, "EXPERIMENTAL: square frame for --image")->capture_default_str();
    sh->add_option("--channels", shape.channels, "EXPERIMENTAL: feature channels for --image")->capture_default_str();
    sh->add_option("--seed", shape.seed, "Weight seed for --image")->capture_default_str();
    add_shaping_flags(*sh, shape.cfg);

    EvalArgs eval;
    auto* ev = app.add_subcommand("eval", "Score predicted polygons against ground truth");
    ev->add_option("--pred", eval.pred, "Directory of predicted annotation files")->required();
    ev->add_option("--gt", eval.gt, "Directory of ground-truth annotation files")->required();
    ev->add_option("--iou", eval.iou, "Match IoU threshold")->capture_default_str();
    ev->add_option("--jobs", eval.jobs, "Parallel images")->capture_default_str();
    ev->add_option("--assert-f1", eval.assert_f1, "Exit 1 when F1 (percent) is below this");
    ev->add_flag("--table", eval.table, "Also print a table on stderr");

    BenchArgs bench;
    auto* be = app.add_subcommand("bench", "Time FPS selection against the NMS baseline");
    be->add_option("--n-candidates", bench.k, "Candidate pixels")->capture_default_str();
    be->add_option("--trials", bench.trials, "Timed repetitions")->capture_default_str();
    be->add_option("--seed", bench.seed, "Candidate seed")->capture_default_str();

    SynthArgs synth;
    auto* sy = app.add_subcommand("synth", "Write synthetic maps and their ground truth");
    sy->add_option("--seed", synth.seed, "Noise seed")->capture_default_str();
    sy->add_option("--out", synth.out, "Output directory")->required();
    sy->add_option("--height", synth.spec.height, "Frame height")->capture_default_str();
    sy->add_option("--width", synth.spec.width, "Frame width")->capture_default_str();
    sy->add_option("--noise", synth.spec.noise, "Map noise std-dev")->capture_default_str();
    sy->add_option("--gamma", synth.spec.gamma, "Map contrast gain")->capture_default_str();
    add_band_flags(*sy, synth.spec.bands[0], "");
    sy->add_flag("--two-bands", synth.two_bands, "Add a second band (--b2-* flags)");
    synth.second.baseline = 80;
    add_band_flags(*sy, synth.second, "b2-");

    RenderArgs render;
    auto* re = app.add_subcommand("render", "Draw polygon outlines over a grey image");
    re->add_option("--image", render.image, "Grey PGM")->required();
    re->add_option("--polys", render.polys, "Annotation file")->required();
    re->add_option("--out", render.out, "Output PPM")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*sh) {
            if (shape.maps.empty() && shape.image.empty()) throw GeometryError("shape needs --maps or --image");
            return cmd_shape(shape);
        }
        if (*ev) return cmd_eval(eval);
        if (*be) return cmd_bench(bench);
        if (*sy) return cmd_synth(synth);
        if (*re) return cmd_render(render);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
