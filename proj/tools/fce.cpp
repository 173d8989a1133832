// Copyright (C) 2026 The fce authors
// SPDX-License-Identifier: Apache-2.0
//
// fce: command-line front end for contour embedding, target generation,
// detection decoding, losses, evaluation and fidelity reports.
//
// Exit codes: 0 success, 2 input error, 3 configuration error.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fce/fce.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitConfig = 3;

struct Globals {
  std::string config_path;
  std::vector<std::string> overrides;
  unsigned threads = 1;
};

fce::Config load_config(const Globals& g) {
  fce::Config c;
  if (!g.config_path.empty()) {
    std::ifstream in(g.config_path);
    if (!in) throw fce::Error(fce::ErrorCode::Config, "cannot open config " + g.config_path);
    c = fce::parse_config(in);
  }
  for (const auto& o : g.overrides) fce::apply_override(c, o);
  fce::validate_config(c);
  return c;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw fce::Error(fce::ErrorCode::Io, "cannot open " + path);
  return in;
}

// Writes to `path`, or stdout when path is empty or "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw fce::Error(fce::ErrorCode::Io, "cannot open " + path + " for writing");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

fce::AnnotationSet read_annotations(const std::string& path) {
  auto in = open_input(path);
  auto set = fce::parse_jsonl(in);
  if (set.clamped_points > 0) {
    std::cerr << "warning: " << set.clamped_points << " annotation point(s) clamped to image bounds\n";
  }
  return set;
}

std::string sanitize(const std::string& id) {
  std::string s = id;
  for (char& ch : s) {
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '-' && ch != '_' && ch != '.') ch = '_';
  }
  return s;
}

std::string numbered(std::size_t index, const std::string& id) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%05zu", index);
  return std::string(buf) + "_" + sanitize(id);
}

std::string points_json(std::span<const fce::Point2> pts) {
  return "[" + fce::format_numbers(fce::flatten(pts)) + "]";
}

// Runs fn(i) -> std::string for every image and writes the strings in order.
template <typename Fn>
void ordered_emit(std::ostream& out, std::size_t n, unsigned threads, Fn&& fn) {
  std::vector<std::string> chunks(n);
  fce::parallel_for(n, threads, [&](std::size_t i) { chunks[i] = fn(i); });
  for (const auto& c : chunks) out << c;
}

// ---------------------------------------------------------------- embed

int cmd_embed(const Globals& g, const std::string& annotations, const std::string& out_path) {
  const auto cfg = load_config(g);
  const auto set = read_annotations(annotations);
  Output out(out_path);
  ordered_emit(out.stream(), set.images.size(), g.threads, [&](std::size_t i) {
    const auto& img = set.images[i];
    std::string s;
    for (const auto& inst : img.instances) {
      const auto sig = fce::embed(inst.polygon, cfg.degree, cfg.samples);
      s += "{\"image_id\":" + fce::json_string(img.image_id) + ",\"instance_id\":" + fce::json_string(inst.id) +
           ",\"ignore\":" + (inst.ignore ? "true" : "false") + ",\"K\":" + std::to_string(cfg.degree) +
           ",\"signature\":[" + fce::format_numbers(sig.flat()) + "]}\n";
    }
    return s;
  });
  return 0;
}

// ---------------------------------------------------------------- reconstruct

int cmd_reconstruct(const Globals& g, const std::string& signatures, const std::string& out_path) {
  const auto cfg = load_config(g);
  auto in = open_input(signatures);
  Output out(out_path);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      const auto flat = j.at("signature").get<std::vector<double>>();
      const auto contour = fce::reconstruct(fce::FourierSignature::from_flat(flat), cfg.points);
      out.stream() << "{\"image_id\":" << fce::json_string(j.at("image_id").get<std::string>())
                   << ",\"instance_id\":" << fce::json_string(j.value("instance_id", std::string{}))
                   << ",\"points\":" << points_json(contour.vertices()) << "}\n";
    } catch (const nlohmann::json::exception& e) {
      throw fce::Error(fce::ErrorCode::ParseError, e.what(), lineno);
    } catch (const fce::Error& e) {
      throw fce::Error(e.code(), e.what(), lineno);
    }
  }
  return 0;
}

// ---------------------------------------------------------------- fidelity

int cmd_fidelity(const Globals& g, const std::string& annotations, std::vector<std::size_t> degrees,
                 const std::string& out_path, const std::string& svg_dir) {
  const auto cfg = load_config(g);
  if (degrees.empty()) throw fce::Error(fce::ErrorCode::Config, "K list must not be empty");
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (i > 0 && degrees[i] <= degrees[i - 1]) throw fce::Error(fce::ErrorCode::Config, "K list must ascend");
    if (2 * degrees[i] + 1 > cfg.samples) throw fce::Error(fce::ErrorCode::Config, "K too large for N");
  }
  const auto set = read_annotations(annotations);

  struct Sample {
    std::size_t image;
    const fce::TextInstance* inst;
  };
  std::vector<Sample> samples;
  for (std::size_t i = 0; i < set.images.size(); ++i) {
    for (const auto& inst : set.images[i].instances) {
      if (!inst.ignore) samples.push_back({i, &inst});
    }
  }
  if (!svg_dir.empty()) fs::create_directories(svg_dir);

  // iou[k][s], l2[k][s]
  std::vector<std::vector<double>> iou(degrees.size(), std::vector<double>(samples.size()));
  std::vector<std::vector<double>> l2(degrees.size(), std::vector<double>(samples.size()));
  fce::parallel_for(samples.size(), g.threads, [&](std::size_t s) {
    const auto& poly = samples[s].inst->polygon;
    const auto resampled = fce::resample_equidistant(poly, cfg.samples);
    for (std::size_t k = 0; k < degrees.size(); ++k) {
      const auto fit = fce::reconstruct(fce::fourier_coefficients(resampled, degrees[k]), cfg.points);
      iou[k][s] = fce::polygon_iou(poly, fit, cfg.supersample);
      l2[k][s] = fce::truncation_l2_error(resampled, degrees[k]);
      if (!svg_dir.empty()) {
        const auto& img = set.images[samples[s].image];
        fce::SvgCanvas svg(img.width, img.height);
        svg.polygon(poly.vertices(), fce::kGroundTruthColor);
        svg.polygon(fit.vertices(), fce::kFittedColor);
        std::ofstream f(fs::path(svg_dir) / (numbered(s, img.image_id + "_" + samples[s].inst->id) + "_K" +
                                              std::to_string(degrees[k]) + ".svg"));
        f << svg.str();
      }
    }
  });

  Output out(out_path);
  auto& os = out.stream();
  os << "# " << fce::describe(cfg) << "\n";
  os << "K,count,mean_iou,median_iou,mean_l2\n";
  for (std::size_t k = 0; k < degrees.size(); ++k) {
    double mean_iou = 0.0, mean_l2 = 0.0, median = 0.0;
    if (!samples.empty()) {
      mean_iou = fce::pairwise_sum(iou[k]) / static_cast<double>(samples.size());
      mean_l2 = fce::pairwise_sum(l2[k]) / static_cast<double>(samples.size());
      std::vector<double> sorted = iou[k];
      std::sort(sorted.begin(), sorted.end());
      const std::size_t m = sorted.size();
      median = m % 2 ? sorted[m / 2] : 0.5 * (sorted[m / 2 - 1] + sorted[m / 2]);
    }
    os << degrees[k] << ',' << samples.size() << ',' << fce::format_number(mean_iou) << ','
       << fce::format_number(median) << ',' << fce::format_number(mean_l2) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- targets

int cmd_targets(const Globals& g, const std::string& annotations, const std::string& out_dir, bool as_predictions) {
  const auto cfg = load_config(g);
  const auto set = read_annotations(annotations);
  fs::create_directories(out_dir);

  std::vector<std::string> index(set.images.size());
  std::vector<std::string> warnings(set.images.size());
  fce::parallel_for(set.images.size(), g.threads, [&](std::size_t i) {
    const auto& img = set.images[i];
    const auto maps = fce::generate_targets(img, cfg.levels, cfg.target_params());
    for (const auto& sk : maps.skipped) {
      warnings[i] += "warning: image " + img.image_id + " instance " + sk.id + " skipped: " + sk.reason + "\n";
    }
    const auto preds = as_predictions ? fce::ideal_predictions(maps) : fce::PredictionMaps{};
    for (std::size_t l = 0; l < maps.levels.size(); ++l) {
      const auto& lv = maps.levels[l];
      fce::MapIndexEntry e{img.image_id, lv.spec.name, lv.spec.stride,
                           numbered(i, img.image_id) + "." + lv.spec.name + ".fct",
                           as_predictions ? fce::MapKind::Predictions : fce::MapKind::Targets, cfg.degree};
      fce::save_tensor((fs::path(out_dir) / e.file).string(),
                       as_predictions ? fce::to_tensor(preds.levels[l]) : fce::to_tensor(lv));
      index[i] += fce::to_jsonl(e) + "\n";
    }
  });
  for (const auto& w : warnings) std::cerr << w;
  std::ofstream idx(fs::path(out_dir) / "index.jsonl", std::ios::binary);
  for (const auto& s : index) idx << s;
  if (!idx) throw fce::Error(fce::ErrorCode::Io, "failed writing index");
  return 0;
}

struct MapImage {
  std::string image_id;
  std::vector<fce::MapIndexEntry> levels;
};

std::vector<MapImage> read_map_dir(const std::string& dir) {
  auto in = open_input((fs::path(dir) / "index.jsonl").string());
  const auto entries = fce::parse_map_index(in);
  std::vector<MapImage> out;
  std::map<std::string, std::size_t> pos;
  for (const auto& e : entries) {
    auto [it, fresh] = pos.emplace(e.image_id, out.size());
    if (fresh) out.push_back({e.image_id, {}});
    out[it->second].levels.push_back(e);
  }
  return out;
}

fce::PredictionMaps load_predictions(const std::string& dir, const MapImage& img, const fce::Config& cfg) {
  fce::PredictionMaps maps;
  for (const auto& e : img.levels) {
    if (e.degree != cfg.degree) {
      throw fce::Error(fce::ErrorCode::ChannelCountMismatch,
                       "maps for " + img.image_id + " were written with K=" + std::to_string(e.degree));
    }
    const auto t = fce::load_tensor((fs::path(dir) / e.file).string());
    maps.levels.push_back(fce::prediction_level_from_tensor(t, e.level, e.stride, e.kind));
    if (fce::validate_level(maps.levels.back()) != cfg.degree) {
      throw fce::Error(fce::ErrorCode::ChannelCountMismatch, "channel count does not match K");
    }
  }
  return maps;
}

// ---------------------------------------------------------------- decode

int cmd_decode(const Globals& g, const std::string& maps_dir, const std::string& out_path) {
  const auto cfg = load_config(g);
  const auto images = read_map_dir(maps_dir);
  Output out(out_path);
  ordered_emit(out.stream(), images.size(), g.threads, [&](std::size_t i) {
    const auto maps = load_predictions(maps_dir, images[i], cfg);
    const auto dets = fce::decode_all(maps, cfg.decode_params());
    std::string s;
    for (const auto& d : dets) {
      s += "{\"image_id\":" + fce::json_string(images[i].image_id) + ",\"score\":" + fce::format_number(d.score) +
           ",\"level\":" + fce::json_string(d.level) + ",\"points\":" + points_json(d.contour.vertices()) + "}\n";
    }
    return s;
  });
  return 0;
}

// ---------------------------------------------------------------- loss

int cmd_loss(const Globals& g, const std::string& targets_dir, const std::string& preds_dir,
             const std::string& out_path) {
  const auto cfg = load_config(g);
  const auto targets = read_map_dir(targets_dir);
  const auto preds = read_map_dir(preds_dir);
  std::map<std::string, const MapImage*> by_id;
  for (const auto& p : preds) by_id[p.image_id] = &p;

  std::vector<fce::LossBreakdown> results(targets.size());
  fce::parallel_for(targets.size(), g.threads, [&](std::size_t i) {
    const auto it = by_id.find(targets[i].image_id);
    if (it == by_id.end()) {
      throw fce::Error(fce::ErrorCode::ShapeMismatch, "no predictions for image " + targets[i].image_id);
    }
    fce::TargetMaps gt;
    gt.degree = cfg.degree;
    for (const auto& e : targets[i].levels) {
      if (e.kind != fce::MapKind::Targets) {
        throw fce::Error(fce::ErrorCode::ParseError, targets_dir + " does not hold target maps");
      }
      gt.levels.push_back(fce::target_level_from_tensor(fce::load_tensor((fs::path(targets_dir) / e.file).string()),
                                                        {e.level, e.stride, 0.0, 1.0}));
    }
    results[i] = fce::map_losses(gt, load_predictions(preds_dir, *it->second, cfg),
                                 {cfg.points, fce::kDefaultOhemRatio, cfg.lambda});
  });

  Output out(out_path);
  auto& os = out.stream();
  auto line = [&](const std::string& key, const std::string& value, const fce::LossBreakdown& b) {
    os << "{\"" << key << "\":" << value << ",\"l_tr\":" << fce::format_number(b.l_tr)
       << ",\"l_tcr\":" << fce::format_number(b.l_tcr) << ",\"l_reg\":" << fce::format_number(b.l_reg)
       << ",\"lambda\":" << fce::format_number(b.lambda) << ",\"total\":" << fce::format_number(b.total) << "}\n";
  };
  fce::LossComponents sum;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    line("image_id", fce::json_string(targets[i].image_id), results[i]);
    sum.l_tr += results[i].l_tr;
    sum.l_tcr += results[i].l_tcr;
    sum.l_reg += results[i].l_reg;
  }
  line("summary", fce::json_string(fce::describe(cfg)), fce::total_loss(sum, cfg.lambda));
  return 0;
}

// ---------------------------------------------------------------- eval

std::map<std::string, std::vector<fce::Detection>> read_detections(const std::string& path) {
  auto in = open_input(path);
  std::map<std::string, std::vector<fce::Detection>> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      const double score = j.at("score").get<double>();
      if (!(score >= 0.0 && score <= 1.0)) throw fce::Error(fce::ErrorCode::ParseError, "score outside [0, 1]");
      const auto flat = j.at("points").get<std::vector<double>>();
      out[j.at("image_id").get<std::string>()].push_back(
          {fce::Contour::from_flat(flat), score, j.value("level", std::string{}), 0, 0, 0});
    } catch (const nlohmann::json::exception& e) {
      throw fce::Error(fce::ErrorCode::ParseError, e.what(), lineno);
    } catch (const fce::Error& e) {
      throw fce::Error(e.code(), e.what(), lineno);
    }
  }
  return out;
}

int cmd_eval(const Globals& g, const std::string& dets_path, const std::string& annotations,
             const std::string& out_path, const std::string& csv_path) {
  const auto cfg = load_config(g);
  const auto set = read_annotations(annotations);
  auto dets = read_detections(dets_path);
  for (const auto& [id, _] : dets) {
    const bool known = std::any_of(set.images.begin(), set.images.end(),
                                   [&](const fce::AnnotatedImage& img) { return img.image_id == id; });
    if (!known) throw fce::Error(fce::ErrorCode::ParseError, "detections reference unknown image '" + id + "'");
  }

  std::vector<fce::EvalReport> reports(set.images.size());
  fce::parallel_for(set.images.size(), g.threads, [&](std::size_t i) {
    const auto it = dets.find(set.images[i].image_id);
    const std::span<const fce::Detection> d =
        it == dets.end() ? std::span<const fce::Detection>{} : std::span<const fce::Detection>(it->second);
    reports[i] = fce::evaluate(d, set.images[i].instances, cfg.eval_iou, cfg.supersample);
  });
  const auto total = fce::combine(reports);

  Output out(out_path);
  auto& os = out.stream();
  os << "{\"config\":" << fce::json_string(fce::describe(cfg)) << ",\"precision\":" << fce::format_number(total.precision)
     << ",\"recall\":" << fce::format_number(total.recall) << ",\"hmean\":" << fce::format_number(total.hmean)
     << ",\"tp\":" << total.tp << ",\"fp\":" << total.fp << ",\"fn\":" << total.fn
     << ",\"discarded\":" << total.discarded << ",\"images\":[";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    if (i > 0) os << ',';
    os << "{\"image_id\":" << fce::json_string(set.images[i].image_id) << ",\"tp\":" << r.tp << ",\"fp\":" << r.fp
       << ",\"fn\":" << r.fn << ",\"discarded\":" << r.discarded << ",\"matches\":[";
    for (std::size_t m = 0; m < r.matches.size(); ++m) {
      if (m > 0) os << ',';
      os << "{\"detection\":" << r.matches[m].detection << ",\"gt_id\":" << fce::json_string(r.matches[m].gt_id)
         << ",\"iou\":" << fce::format_number(r.matches[m].iou) << "}";
    }
    os << "]}";
  }
  os << "]}\n";

  if (!csv_path.empty()) {
    Output csv(csv_path);
    csv.stream() << "# " << fce::describe(cfg) << "\n"
                 << "precision,recall,hmean,tp,fp,fn\n"
                 << fce::format_number(total.precision) << ',' << fce::format_number(total.recall) << ','
                 << fce::format_number(total.hmean) << ',' << total.tp << ',' << total.fp << ',' << total.fn << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- subset

int cmd_subset(const Globals& g, const std::string& annotations, const std::string& out_path) {
  const auto cfg = load_config(g);
  const auto set = read_annotations(annotations);
  std::vector<fce::AnnotatedImage> kept;
  for (const auto& img : set.images) {
    auto selected = fce::curved_subset_select(img.instances, cfg.subset_threshold);
    if (selected.empty()) continue;
    kept.push_back({img.image_id, img.width, img.height, std::move(selected)});
  }
  Output out(out_path);
  fce::write_jsonl(out.stream(), kept);
  return 0;
}

// ---------------------------------------------------------------- plot

int cmd_plot(const Globals& g, const std::string& annotations, const std::string& dets_path,
             const std::string& out_dir) {
  load_config(g);
  const auto set = read_annotations(annotations);
  const auto dets = dets_path.empty() ? std::map<std::string, std::vector<fce::Detection>>{}
                                      : read_detections(dets_path);
  fs::create_directories(out_dir);
  fce::parallel_for(set.images.size(), g.threads, [&](std::size_t i) {
    const auto& img = set.images[i];
    fce::SvgCanvas svg(img.width, img.height);
    for (const auto& inst : img.instances) svg.polygon(inst.polygon.vertices(), fce::kGroundTruthColor);
    if (const auto it = dets.find(img.image_id); it != dets.end()) {
      for (const auto& d : it->second) svg.polygon(d.contour.vertices(), fce::kFittedColor);
    }
    std::ofstream f(fs::path(out_dir) / (numbered(i, img.image_id) + ".svg"), std::ios::binary);
    f << svg.str();
    if (!f) throw fce::Error(fce::ErrorCode::Io, "failed writing svg for " + img.image_id);
  });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fourier contour embedding toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--config", g.config_path, "key = value configuration file");
  app.add_option("--set", g.overrides, "override a configuration key (key=value), repeatable");
  app.add_option("--threads", g.threads, "worker threads")->check(CLI::Range(1u, 1024u));

  std::string annotations, out, signatures, maps_dir, targets_dir, preds_dir, dets, csv, svg_dir;
  std::vector<std::size_t> degrees;
  bool as_predictions = false;

  auto* embed = app.add_subcommand("embed", "Fourier signatures for every annotated instance (JSON-lines)");
  embed->add_option("annotations", annotations, "annotation JSON-lines")->required();
  embed->add_option("-o,--out", out, "output path (default stdout)");

  auto* recon = app.add_subcommand("reconstruct", "contours from signature JSON-lines");
  recon->add_option("signatures", signatures, "signature JSON-lines")->required();
  recon->add_option("-o,--out", out, "output path (default stdout)");

  auto* fidelity = app.add_subcommand("fidelity", "approximation quality per Fourier degree (CSV)");
  fidelity->add_option("annotations", annotations, "annotation JSON-lines")->required();
  fidelity->add_option("--degrees", degrees, "ascending list of K")->delimiter(',')->required();
  fidelity->add_option("-o,--out", out, "CSV output path (default stdout)");
  fidelity->add_option("--svg-dir", svg_dir, "write one SVG per sample and degree");

  auto* targets = app.add_subcommand("targets", "per-level training targets as tensor files");
  targets->add_option("annotations", annotations, "annotation JSON-lines")->required();
  targets->add_option("-o,--out", out, "output directory")->required();
  targets->add_flag("--as-predictions", as_predictions, "write ideal prediction maps instead");

  auto* decode = app.add_subcommand("decode", "detections from prediction maps (JSON-lines)");
  decode->add_option("maps", maps_dir, "map directory with index.jsonl")->required();
  decode->add_option("-o,--out", out, "output path (default stdout)");

  auto* loss = app.add_subcommand("loss", "loss breakdown of predictions against targets (JSON-lines)");
  loss->add_option("targets", targets_dir, "target map directory")->required();
  loss->add_option("predictions", preds_dir, "prediction map directory")->required();
  loss->add_option("-o,--out", out, "output path (default stdout)");

  auto* eval = app.add_subcommand("eval", "precision / recall / h-mean of detections");
  eval->add_option("detections", dets, "detection JSON-lines")->required();
  eval->add_option("annotations", annotations, "annotation JSON-lines")->required();
  eval->add_option("-o,--out", out, "JSON report path (default stdout)");
  eval->add_option("--csv", csv, "also write a CSV summary");

  auto* subset = app.add_subcommand("subset", "keep highly curved instances (annotation JSON-lines)");
  subset->add_option("annotations", annotations, "annotation JSON-lines")->required();
  subset->add_option("-o,--out", out, "output path (default stdout)");

  auto* plot = app.add_subcommand("plot", "SVG overlays of annotations and detections");
  plot->add_option("annotations", annotations, "annotation JSON-lines")->required();
  plot->add_option("--detections", dets, "detection JSON-lines");
  plot->add_option("-o,--out", out, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*embed) return cmd_embed(g, annotations, out);
    if (*recon) return cmd_reconstruct(g, signatures, out);
    if (*fidelity) return cmd_fidelity(g, annotations, degrees, out, svg_dir);
    if (*targets) return cmd_targets(g, annotations, out, as_predictions);
    if (*decode) return cmd_decode(g, maps_dir, out);
    if (*loss) return cmd_loss(g, targets_dir, preds_dir, out);
    if (*eval) return cmd_eval(g, dets, annotations, out, csv);
    if (*subset) return cmd_subset(g, annotations, out);
    if (*plot) return cmd_plot(g, annotations, dets, out);
  } catch (const fce::Error& e) {
    std::cerr << "fce: " << e.what() << "\n";
    return e.code() == fce::ErrorCode::Config ? kExitConfig : kExitInput;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "fce: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}
