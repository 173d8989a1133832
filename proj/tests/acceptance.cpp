// Copyright (C) 2026 The fce authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance checks: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <chrono>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "fce/fce.hpp"
#include "fce/synthetic.hpp"
#include "oracles.hpp"
#include "support.hpp"

namespace fs = std::filesystem;
using fce::Complex;
using fce::Contour;
using fce::FourierSignature;
using fce::Point2;

namespace {

const fs::path kData = FCE_DATA_DIR;
const std::string kCli = FCE_CLI_PATH;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail = what;
      pass = false;
    }
  }
};

fce::AnnotationSet load(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw std::runtime_error("cannot open " + p.string());
  return fce::parse_jsonl(in);
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// 1
Outcome round_trip() {
  Outcome o;
  fce::synthetic::Random rng(1001);
  double worst = 0;
  for (int i = 0; i < 200; ++i) {
    const Contour poly = fce::test::random_polygon(rng, 5 + static_cast<std::size_t>(rng.integer(0, 40)));
    const auto samples = fce::resample_equidistant(poly, 401);
    const Contour back = fce::reconstruct(fce::fourier_coefficients(samples, 200), 401);
    for (std::size_t j = 0; j < 401; ++j) worst = std::max(worst, fce::norm(back[j] - samples[j]));
  }
  o.require(worst < 1e-9, "max error " + sci(worst));
  if (o.pass) o.detail = "max error " + sci(worst);
  return o;
}

// 2
Outcome parseval() {
  Outcome o;
  fce::synthetic::Random rng(1002);
  double worst = 0;
  for (int i = 0; i < 200; ++i) {
    const Contour poly = fce::test::random_polygon(rng, 6 + static_cast<std::size_t>(rng.integer(0, 30)));
    const std::size_t n = 100 + static_cast<std::size_t>(rng.integer(0, 300));
    const auto samples = fce::resample_equidistant(poly, n);
    // Independent DFT straight from the definition.
    double time_energy = 0, freq_energy = 0;
    for (const auto& p : samples) time_energy += p.x * p.x + p.y * p.y;
    time_energy /= static_cast<double>(n);
    for (std::size_t k = 0; k < n; ++k) {
      Complex c = 0;
      for (std::size_t j = 0; j < n; ++j) {
        c += Complex{samples[j].x, samples[j].y} *
             std::polar(1.0, -2 * std::numbers::pi * static_cast<double>(k * j % n) / static_cast<double>(n));
      }
      freq_energy += std::norm(c / static_cast<double>(n));
    }
    worst = std::max(worst, std::abs(time_energy - freq_energy) / time_energy);

    double prev = INFINITY;
    for (std::size_t K = 1; K <= 20; ++K) {
      const auto err = fce::truncation_error(samples, K);
      o.require(err.spectral <= prev, "truncation error increases at K=" + std::to_string(K));
      o.require(std::abs(err.direct - err.spectral) <= 1e-9 * std::max(1.0, err.direct),
                "direct and spectral tails disagree at K=" + std::to_string(K));
      prev = err.spectral;
    }
  }
  o.require(worst <= 1e-9, "Parseval relative error " + sci(worst));
  if (o.pass) o.detail = "worst relative error " + sci(worst);
  return o;
}

// 3
Outcome circle() {
  Outcome o;
  const Point2 center{250, 180};
  const double radius = 37.5;
  const auto sig = fce::embed(fce::synthetic::circle(center, radius, 400), 5, 400);
  o.require(std::abs(sig[0] - Complex{center.x, center.y}) <= 1e-12, "c_0 off by " + sci(std::abs(sig[0] - Complex{center.x, center.y})));
  o.require(std::abs(sig[1] - Complex{radius, 0}) < 1e-9, "c_1 off by " + sci(std::abs(sig[1] - Complex{radius, 0})));
  double other = 0;
  for (int k = -5; k <= 5; ++k) {
    if (k != 0 && k != 1) other = std::max(other, std::abs(sig[k]));
  }
  o.require(other < 1e-9, "largest other |c_k| " + sci(other));
  if (o.pass) o.detail = "largest other |c_k| " + sci(other);
  return o;
}

// 4
Outcome compactness() {
  Outcome o;
  const auto corpus = load(kData / "ribbons.jsonl");
  std::vector<const fce::TextInstance*> insts;
  for (const auto& img : corpus.images) {
    for (const auto& inst : img.instances) insts.push_back(&inst);
  }
  o.require(insts.size() == 50, "corpus holds " + std::to_string(insts.size()) + " polygons");
  auto mean_iou = [&](std::size_t K) {
    double total = 0;
    for (const auto* inst : insts) {
      const Contour fit = fce::reconstruct(fce::embed(inst->polygon, K, 400), 50);
      total += fce::polygon_iou(fit, inst->polygon, 8);
    }
    return total / static_cast<double>(insts.size());
  };
  const double k3 = mean_iou(3), k5 = mean_iou(5), k10 = mean_iou(10);
  o.require(k5 >= 0.90, "K=5 mean IoU " + sci(k5));
  o.require(k10 > k3, "K=10 not above K=3");
  o.detail = "mean IoU K3 " + sci(k3) + ", K5 " + sci(k5) + ", K10 " + sci(k10) + (o.pass ? "" : "; " + o.detail);
  return o;
}

// 5
Outcome pipeline() {
  Outcome o;
  const auto corpus = load(kData / "scenes.jsonl");
  o.require(corpus.images.size() == 20, "corpus holds " + std::to_string(corpus.images.size()) + " images");
  const auto levels = fce::default_levels();
  std::size_t multi_level = 0;
  std::vector<fce::EvalReport> reports;
  for (const auto& img : corpus.images) {
    for (const auto& inst : img.instances) {
      if (!inst.ignore && fce::assign_levels(inst, img.width, img.height, levels).size() > 1) ++multi_level;
    }
    const auto dets = fce::decode_all(fce::ideal_predictions(fce::generate_targets(img, levels)));
    reports.push_back(fce::evaluate(dets, img.instances));
  }
  const auto total = fce::combine(reports);
  o.require(multi_level > 0, "no instance falls in two levels");
  o.require(total.hmean == 1.0, "hmean " + sci(total.hmean));
  o.require(total.fp == 0, std::to_string(total.fp) + " false positives");
  o.detail = "hmean " + sci(total.hmean) + ", tp " + std::to_string(total.tp) + ", fp " + std::to_string(total.fp) +
             ", multi-level instances " + std::to_string(multi_level) + (o.pass ? "" : "; " + o.detail);
  return o;
}

FourierSignature random_signature(fce::synthetic::Random& rng, std::size_t K, double scale) {
  FourierSignature s(K);
  for (int k = -static_cast<int>(K); k <= static_cast<int>(K); ++k) {
    s[k] = {rng.uniform(-scale, scale), rng.uniform(-scale, scale)};
  }
  return s;
}

// 6
Outcome regression_oracle() {
  Outcome o;
  fce::synthetic::Random rng(1006);
  double worst_value = 0, worst_grad = 0;
  for (int c = 0; c < 100; ++c) {
    const std::size_t K = 1 + static_cast<std::size_t>(rng.integer(0, 4));
    const std::size_t pixels = 1 + static_cast<std::size_t>(rng.integer(0, 4));
    const std::size_t points = 3 + static_cast<std::size_t>(rng.integer(0, 20));
    std::vector<FourierSignature> gt, pred;
    std::vector<std::uint8_t> tcr;
    for (std::size_t i = 0; i < pixels; ++i) {
      gt.push_back(random_signature(rng, K, 3));
      pred.push_back(random_signature(rng, K, 3));
      tcr.push_back(static_cast<std::uint8_t>(rng.integer(0, 1)));
    }
    const double lib = fce::regression_loss(gt, pred, tcr, points);
    const double ref = fce::oracle::regression_loss(gt, pred, tcr, points);
    worst_value = std::max(worst_value, std::abs(lib - ref) / std::max(1.0, std::abs(ref)));

    const auto grad = fce::regression_loss_gradient(gt, pred, tcr, points);
    const double h = 1e-6;
    for (std::size_t i = 0; i < pixels; ++i) {
      for (int k = -static_cast<int>(K); k <= static_cast<int>(K); ++k) {
        for (int part = 0; part < 2; ++part) {
          auto plus = pred, minus = pred;
          const Complex step = part ? Complex{0, h} : Complex{h, 0};
          plus[i][k] += step;
          minus[i][k] -= step;
          const double fd = (fce::oracle::regression_loss(gt, plus, tcr, points) -
                             fce::oracle::regression_loss(gt, minus, tcr, points)) /
                            (2 * h);
          const double an = part ? grad[i][k].imag() : grad[i][k].real();
          worst_grad = std::max(worst_grad, std::abs(fd - an) / std::max(1.0, std::abs(fd)));
        }
      }
    }
  }
  o.require(worst_value <= 1e-12, "loss mismatch " + sci(worst_value));
  o.require(worst_grad <= 1e-4, "gradient mismatch " + sci(worst_grad));
  o.detail = "loss " + sci(worst_value) + ", gradient " + sci(worst_grad) + (o.pass ? "" : "; " + o.detail);
  return o;
}

// 7
Outcome uniqueness() {
  Outcome o;
  fce::synthetic::Random rng(1007);
  double worst = 0, worst_shift = 0;
  for (int i = 0; i < 200; ++i) {
    const Contour poly = fce::test::random_polygon(rng, 5 + static_cast<std::size_t>(rng.integer(0, 30)));
    const auto base = fce::embed(poly);
    auto compare = [&](const FourierSignature& s) {
      for (int k = -5; k <= 5; ++k) worst = std::max(worst, std::abs(s[k] - base[k]));
    };
    compare(fce::embed(fce::test::rotated_list(poly, 1 + static_cast<std::size_t>(rng.integer(0, 100)))));
    compare(fce::embed(fce::test::reversed(poly)));
    compare(fce::embed(fce::test::rotated_list(fce::test::reversed(poly), 3)));

    // Integer shifts keep every sample bit-comparable up to rounding in the resampler.
    const Point2 shift{static_cast<double>(rng.integer(-60, 60)), static_cast<double>(rng.integer(-60, 60))};
    const auto moved = fce::embed(fce::test::translated(poly, shift));
    for (int k = -5; k <= 5; ++k) {
      const Complex expect = k == 0 ? base[0] + Complex{shift.x, shift.y} : base[k];
      worst_shift = std::max(worst_shift, std::abs(moved[k] - expect));
    }
  }
  o.require(worst <= 1e-9, "list rotation/reversal changes signature by " + sci(worst));
  o.require(worst_shift <= 1e-9, "translation error " + sci(worst_shift));
  o.detail = "rotation/reversal " + sci(worst) + ", translation " + sci(worst_shift) + (o.pass ? "" : "; " + o.detail);
  return o;
}

// 8
Outcome subset() {
  Outcome o;
  const auto corpus = load(kData / "subset.jsonl");
  std::size_t rects = 0, arcs = 0, picked_arcs = 0, picked_other = 0;
  double min_arc = INFINITY, max_rect = 0;
  for (const auto& img : corpus.images) {
    const bool is_arc = img.image_id.rfind("arc_", 0) == 0;
    (is_arc ? arcs : rects)++;
    for (const auto& inst : img.instances) {
      const double oracle = fce::oracle::max_removal_delta(inst.polygon);
      const double lib = fce::max_interior_removal_delta(inst.polygon);
      o.require(std::abs(oracle - lib) <= 1e-12, img.image_id + ": delta " + sci(lib) + " vs oracle " + sci(oracle));
      if (is_arc) {
        min_arc = std::min(min_arc, oracle);
      } else {
        max_rect = std::max(max_rect, oracle);
      }
    }
    const auto picked = fce::curved_subset_select(img.instances, 0.07);
    (is_arc ? picked_arcs : picked_other) += picked.size();
  }
  o.require(rects == 10 && arcs == 10, "corpus is not 10 rectangles + 10 arcs");
  o.require(min_arc >= 0.2, "smallest curved delta " + sci(min_arc));
  o.require(picked_arcs == 10 && picked_other == 0,
            "selected " + std::to_string(picked_arcs) + " curved and " + std::to_string(picked_other) + " straight");
  o.detail = "selected " + std::to_string(picked_arcs) + "/10 curved, " + std::to_string(picked_other) +
             " straight; curved delta >= " + sci(min_arc) + ", straight delta <= " + sci(max_rect) +
             (o.pass ? "" : "; " + o.detail);
  return o;
}

// 9
Outcome rule_conformance() {
  Outcome o;
  std::size_t ohem_cases = 0, nms_cases = 0;
  // OHEM: every positive mask for n <= 12 with losses drawn from a small set so ties occur.
  fce::synthetic::Random rng(1009);
  const double levels[] = {0.1, 0.5, 0.5, 2.0};
  for (std::size_t n = 1; n <= 12; ++n) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<double> loss(n);
      std::vector<std::uint8_t> pos(n);
      for (std::size_t i = 0; i < n; ++i) {
        loss[i] = levels[rng.integer(0, 3)];
        pos[i] = (mask >> i) & 1u;
      }
      for (std::size_t ratio : {1u, 3u}) {
        ++ohem_cases;
        if (fce::ohem_select(loss, pos, ratio) != fce::oracle::ohem(loss, pos, ratio)) {
          o.require(false, "OHEM mismatch at n=" + std::to_string(n) + " mask=" + std::to_string(mask));
        }
      }
    }
  }
  // NMS: random overlapping squares with tied scores, up to 6 detections.
  const double scores[] = {0.95, 0.7, 0.7, 0.4};
  for (int trial = 0; trial < 600; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 6);
    std::vector<fce::Detection> dets;
    for (std::size_t i = 0; i < n; ++i) {
      const Contour c = fce::test::square(rng.uniform(0, 25), rng.uniform(0, 25), rng.uniform(8, 18));
      dets.push_back({c, scores[rng.integer(0, 3)], "L", static_cast<std::size_t>(rng.integer(0, 2)),
                      static_cast<std::size_t>(rng.integer(0, 3)), static_cast<std::size_t>(rng.integer(0, 3))});
    }
    const double thresh = std::array{0.1, 0.3, 0.5}[trial % 3];
    const auto expect = fce::oracle::nms(dets, thresh);
    const auto kept = fce::poly_nms(dets, thresh);
    ++nms_cases;
    bool same = expect.has_value() && kept.size() == expect->size();
    for (std::size_t i = 0; same && i < kept.size(); ++i) {
      const auto& d = dets[(*expect)[i]];
      same = kept[i].score == d.score && kept[i].level_index == d.level_index && kept[i].row == d.row &&
             kept[i].col == d.col && std::equal(kept[i].contour.begin(), kept[i].contour.end(), d.contour.begin());
    }
    o.require(same, "NMS mismatch in trial " + std::to_string(trial));
  }
  o.detail = std::to_string(ohem_cases) + " OHEM cases, " + std::to_string(nms_cases) + " NMS cases" +
             (o.pass ? "" : "; " + o.detail);
  return o;
}

// 10
int run_cli(const std::string& args, const fs::path& out) {
  const std::string cmd = kCli + " " + args + " > '" + out.string() + "' 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Every regular file below `root`, keyed by relative path.
std::map<std::string, std::string> snapshot(const fs::path& root) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(root)) {
    if (e.is_regular_file()) out[fs::relative(e.path(), root).string()] = slurp(e.path());
  }
  return out;
}

Outcome determinism() {
  Outcome o;
  const fs::path base = fs::temp_directory_path() / ("fce_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(base);
  const unsigned many = std::max(4u, std::thread::hardware_concurrency());
  const std::vector<std::string> corpora{"ribbons", "circles", "subset", "scenes"};

  // Runs the whole command set into `dir` with the given thread count.
  auto run_all = [&](const fs::path& dir, unsigned threads) {
    fs::create_directories(dir);
    const std::string t = " --threads " + std::to_string(threads);
    auto q = [](const fs::path& p) { return "'" + p.string() + "'"; };
    auto step = [&](const std::string& name, const std::string& args) {
      const int rc = run_cli(args + t, dir / (name + ".stdout"));
      o.require(rc == 0, name + " exited " + std::to_string(rc));
    };
    for (const auto& c : corpora) {
      const fs::path in = kData / (c + ".jsonl");
      const fs::path d = dir / c;
      fs::create_directories(d);
      step(c + "_embed", "embed " + q(in) + " -o " + q(d / "sig.jsonl"));
      step(c + "_reconstruct", "reconstruct " + q(d / "sig.jsonl") + " -o " + q(d / "rec.jsonl"));
      step(c + "_fidelity", "fidelity " + q(in) + " --degrees 1,3,5,10 -o " + q(d / "fid.csv") + " --svg-dir " +
                                q(d / "fid_svg"));
      step(c + "_subset", "subset " + q(in) + " -o " + q(d / "subset.jsonl"));
      step(c + "_targets", "targets " + q(in) + " -o " + q(d / "gt"));
      step(c + "_ideal", "targets " + q(in) + " --as-predictions -o " + q(d / "ideal"));
      step(c + "_decode", "decode " + q(d / "ideal") + " -o " + q(d / "dets.jsonl"));
      step(c + "_loss", "loss " + q(d / "gt") + " " + q(d / "ideal") + " -o " + q(d / "loss.jsonl"));
      step(c + "_eval", "eval " + q(d / "dets.jsonl") + " " + q(in) + " -o " + q(d / "eval.jsonl") + " --csv " +
                            q(d / "eval.csv"));
      step(c + "_plot", "plot " + q(in) + " --detections " + q(d / "dets.jsonl") + " -o " + q(d / "plots"));
    }
  };

  run_all(base / "a", 1);
  run_all(base / "b", 1);
  run_all(base / "c", many);
  const auto a = snapshot(base / "a"), b = snapshot(base / "b"), c = snapshot(base / "c");
  o.require(!a.empty(), "no outputs");
  for (const auto& [name, bytes] : a) {
    if (b.count(name) == 0 || b.at(name) != bytes) o.require(false, name + " differs between identical runs");
    if (c.count(name) == 0 || c.at(name) != bytes) o.require(false, name + " differs with " + std::to_string(many) + " threads");
  }
  o.require(a.size() == b.size() && a.size() == c.size(), "runs produced different file sets");
  if (o.pass) fs::remove_all(base);
  o.detail = std::to_string(a.size()) + " output files compared, 1 vs " + std::to_string(many) + " threads" +
             (o.pass ? "" : "; " + o.detail + " (outputs kept in " + base.string() + ")");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    std::function<Outcome()> check;
    double budget_s;  // 0 = no runtime bound
  };
  const std::vector<Criterion> criteria{
      {1, "DFT round trip", round_trip, 5},
      {2, "Parseval and monotone truncation", parseval, 0},
      {3, "circle analytic case", circle, 0},
      {4, "compactness on ribbons", compactness, 30},
      {5, "pipeline round trip", pipeline, 60},
      {6, "regression loss oracle", regression_oracle, 0},
      {7, "signature uniqueness", uniqueness, 0},
      {8, "curved subset selector", subset, 0},
      {9, "OHEM and NMS rules", rule_conformance, 0},
      {10, "CLI determinism", determinism, 0},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0 && secs >= c.budget_s) {
      o.pass = false;
      o.detail += "; took " + sci(secs) + " s, budget " + sci(c.budget_s) + " s";
    }
    failed += o.pass ? 0 : 1;
    char time_buf[32];
    std::snprintf(time_buf, sizeof time_buf, "%.2fs", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << " [" << time_buf << "] -- "
              << o.detail << std::endl;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << std::endl;
  return failed;
}
