// Command-line front end: exact traces and projective orders of the quantum
// pants representation, finite h-adic images, cover homology reports, the
// free-subgroup certificate, and the verification battery.
//
// Exit codes: 0 ok, 1 usage error, 2 verification failure, 3 budget exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "slh/covers.hpp"
#include "slh/verify.hpp"

using json = nlohmann::ordered_json;
using namespace slh;

namespace {

constexpr const char* kVersion = "1.0.0";

struct RunConfig {
  long p = 7;
  long j = -1;  // -1: default embedding index for p
  long k = 0;
  std::string word;
  std::size_t bfs_cap = kDefaultBfsCap;
  std::string format = "json";
  std::uint64_t seed = 0;
};

json header(const RunConfig& cfg, const std::string& command) {
  json meta;
  meta["schema"] = 1;
  meta["tool"] = std::string("slh ") + kVersion;
  meta["command"] = command;
  meta["p"] = cfg.p;
  meta["j"] = cfg.j < 0 ? default_embedding_index(cfg.p) : cfg.j;
  return meta;
}

void emit(const json& out, const RunConfig& cfg) {
  if (cfg.format == "json") {
    std::cout << out.dump(2) << "\n";
    return;
  }
  // text mode: flat rendering of the same data
  for (auto& [key, val] : out.items())
    std::cout << key << ": " << (val.is_string() ? val.get<std::string>() : val.dump())
              << "\n";
}

json disk_json(const Disk& d) {
  return json{{"center", {d.center.real(), d.center.imag()}}, {"radius", d.radius}};
}

json report_json(const HomologyReport& hr) {
  json j;
  j["p"] = hr.p;
  j["k"] = hr.k;
  j["N"] = hr.N;
  j["e"] = hr.e;
  j["degree"] = hr.degree;
  j["rank"] = hr.rank;
  json divs = json::array();
  for (const auto& d : hr.elementary_divisors) divs.push_back(d.get_str());
  j["elementary_divisors"] = divs;
  j["proper"] = hr.proper;
  if (hr.finite_index)
    j["index"] = hr.index.get_str();
  else
    j["index"] = "infinite";
  j["bound"] = hr.bound.get_str();
  j["bound_satisfied"] = hr.bound_satisfied;
  j["psi_witness_excluded"] = hr.psi_witness_excluded;
  j["certified_level"] = hr.certified_level;
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"quantum pants representation: exact orders, h-adic images, cover homology"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand name

  RunConfig cfg;
  if (const char* env = std::getenv("SLH_BFS_CAP"))
    cfg.bfs_cap = static_cast<std::size_t>(std::strtoull(env, nullptr, 10));

  app.add_option("--p", cfg.p, "odd prime >= 5")->capture_default_str();
  app.add_option("--j", cfg.j, "embedding index (default: nearest to e^{i pi/6})");
  app.add_option("--bfs-cap", cfg.bfs_cap, "element budget for image closure");
  app.add_option("--format", cfg.format, "json|text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for randomized suites");

  auto* c_trace = app.add_subcommand("trace", "exact normalized trace of a word");
  c_trace->add_option("--word", cfg.word, "word over a b A B")->required();

  auto* c_order = app.add_subcommand("order", "projective order of a word");
  c_order->add_option("--word", cfg.word, "word over a b A B")->required();

  auto* c_image = app.add_subcommand("image", "finite image of the level-k reduction");
  c_image->add_option("--k", cfg.k, "filtration level")->required();

  auto* c_cover = app.add_subcommand("cover", "homology report of the level-k cover");
  auto* opt_k = c_cover->add_option("--k", cfg.k, "filtration level");
  bool auto_n = false;
  c_cover->add_flag("--auto-N", auto_n, "use the certified level N from the psi search");

  auto* c_schottky = app.add_subcommand("schottky", "numeric free-subgroup certificate");

  auto* c_verify = app.add_subcommand("verify", "run the verification battery");
  std::string suite = "all";
  c_verify->add_option("--suite", suite, "all|fast")
      ->check(CLI::IsMember({"all", "fast"}))
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  if (c_trace->parsed()) {
    PantsRep rep = pants_rep(cfg.p, cfg.j);
    GroupWord w = GroupWord::parse(cfg.word);
    CycInt t = trace_normalized(rep, w);
    json out = header(cfg, "trace");
    out["word"] = w.str();
    out["trace"] = t.str();
    json coeffs = json::array();
    for (const auto& c : t.coeffs()) coeffs.push_back(c.get_str());
    out["coefficients"] = coeffs;
    auto z = embed(t, rep.j);
    out["numeric"] = {z.real(), z.imag()};
    emit(out, cfg);
    return 0;
  }

  if (c_order->parsed()) {
    PantsRep rep = pants_rep(cfg.p, cfg.j);
    GroupWord w = GroupWord::parse(cfg.word);
    ExactMat m = eval_word(rep, w);
    auto ord = proj_order(m, cfg.p);
    json out = header(cfg, "order");
    out["word"] = w.str();
    out["simple"] = is_simple(w);
    if (ord) {
      out["order"] = *ord;
    } else {
      out["order"] = "infinite";
      SpectralCertificate sc = spectral_certificate(m, rep.j);
      out["witness"] = {{"j", rep.j}, {"abs_trace", sc.abs_trace}, {"margin", sc.margin}};
    }
    emit(out, cfg);
    return 0;
  }

  if (c_image->parsed()) {
    PantsRep rep = pants_rep(cfg.p, cfg.j);
    FiniteImage img = image_bfs(rep, cfg.k, cfg.bfs_cap);
    json out = header(cfg, "image");
    out["level"] = img.k;
    out["order"] = img.order();
    out["identity_index"] = img.identity_index;
    const char* names[4] = {"a", "a_inv", "b", "b_inv"};
    json act;
    for (int g = 0; g < 4; ++g) act[names[g]] = img.gen_action[static_cast<std::size_t>(g)];
    out["generator_action"] = act;
    emit(out, cfg);
    return 0;
  }

  if (c_cover->parsed()) {
    if (auto_n == (opt_k->count() > 0)) {
      std::cerr << "cover: give exactly one of --k and --auto-N\n";
      return 1;
    }
    PantsRep rep = pants_rep(cfg.p, cfg.j);
    long k = auto_n ? find_psi_N(rep).N : cfg.k;
    HomologyReport hr = homology_report(rep, k, cfg.bfs_cap);
    json out = header(cfg, "cover");
    out.update(report_json(hr));
    emit(out, cfg);
    return 0;
  }

  if (c_schottky->parsed()) {
    PantsRep rep = pants_rep(cfg.p, cfg.j);
    SchottkyCertificate cert = schottky_certificate(rep);
    json out = header(cfg, "schottky");
    out["w1"] = cert.w1.str();
    out["w2"] = cert.w2.str();
    out["conjugating_power"] = cert.conj_power;
    out["powers"] = {cert.n1, cert.n2};
    json disks = json::array();
    for (const auto& d : cert.disks) disks.push_back(disk_json(d));
    out["disks"] = disks;
    out["samples"] = cert.samples;
    out["verified"] = cert.verified;
    out["fixed_point"] = {cert.z0.real(), cert.z0.imag()};
    emit(out, cfg);
    return cert.verified ? 0 : 2;
  }

  // verify
  VerifyReport vr = run_verification(suite == "fast", cfg.seed, cfg.bfs_cap);
  json out = header(cfg, "verify");
  out["suite"] = suite;
  out["seed"] = cfg.seed;
  json results = json::array();
  for (const auto& c : vr.results)
    results.push_back({{"id", c.id},
                       {"name", c.name},
                       {"pass", c.pass},
                       {"detail", c.detail}});
  out["results"] = results;
  out["all_pass"] = vr.all_pass;
  emit(out, cfg);
  return vr.all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const WordSyntaxError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << " (partial count "
              << e.partial_count << ")\n";
    return 3;
  } catch (const InvalidParameter& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
