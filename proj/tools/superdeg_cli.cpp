#include "superdeg/degeneration.hpp"
#include "superdeg/error.hpp"
#include "superdeg/pipeline.hpp"
#include "superdeg/polytope.hpp"
#include "superdeg/toric.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace superdeg;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

constexpr int kChecksFailed = 1;
constexpr int kUsage = 2;
constexpr int kComputation = 3;

struct Overrides {
  std::string config;
  std::string out;
  unsigned degree_bound = 0;
  unsigned favourable_k = 0;
  std::string samples;
  std::string order;
  std::string basis_perm;

  void attach(CLI::App *cmd, bool config_required) {
    auto *opt = cmd->add_option("--config", config, "job configuration file");
    if (config_required)
      opt->required();
    cmd->add_option("--out", out, "output directory");
    cmd->add_option("--degree-bound", degree_bound, "relation degree bound D");
    cmd->add_option("--favourable-k", favourable_k, "favourability check up to K");
    cmd->add_option("--samples", samples, "fiber samples, e.g. 0,1,2,5");
    cmd->add_option("--order", order, "graded-lex | graded-revlex | weighted:w1,...");
    cmd->add_option("--basis-perm", basis_perm, "1-based negative basis permutation");
  }

  JobConfig load() const {
    JobConfig c = config.empty() ? JobConfig{} : JobConfig::load(config);
    if (!out.empty())
      c.out_dir = out;
    if (degree_bound)
      c.degree = degree_bound;
    if (favourable_k)
      c.favourable_k = favourable_k;
    if (!samples.empty())
      c.samples = parse_rational_list(samples);
    if (!order.empty())
      c.order = order;
    if (!basis_perm.empty())
      c.basis_perm = parse_index_list(basis_perm, true);
    return c;
  }
};

std::string command_line;

std::string timestamp() {
  auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

void write_file(const fs::path &path, const std::string &content) {
  fs::create_directories(path.parent_path().empty() ? fs::path(".") : path.parent_path());
  std::ofstream out(path);
  if (!out)
    throw UsageError("cannot write " + path.string());
  out << content;
}

// Text and JSON versions of one report; the metadata header is the only
// nondeterministic part.
void write_report(const fs::path &dir, const std::string &name, json doc,
                  const std::string &text) {
  json meta{{"tool", "superdeg"}, {"command", command_line}, {"generated", timestamp()}};
  doc["meta"] = meta;
  write_file(dir / (name + ".json"), doc.dump(2) + "\n");
  std::ostringstream t;
  t << "# meta: superdeg | " << command_line << " | " << meta["generated"].get<std::string>()
    << "\n"
    << text;
  write_file(dir / (name + ".txt"), t.str());
}

std::string read_file(const fs::path &path) {
  std::ifstream in(path);
  if (!in)
    throw UsageError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json weight_json(const Weight &w) {
  json a = json::array();
  for (const auto &c : w)
    a.push_back(c.get_str());
  return a;
}

std::vector<RootCounts> polytope_counts(const InequalitySystem &sys,
                                        const std::vector<std::vector<long>> &pts) {
  std::vector<RootCounts> out;
  for (const auto &p : pts)
    out.push_back(point_root_counts(sys, p));
  return out;
}

int cmd_essential(const Overrides &ov) {
  JobConfig cfg = ov.load();
  Pipeline p(cfg);
  unsigned K = cfg.favourable_k;
  auto es = p.essentials(K);
  json doc;
  std::ostringstream text;
  doc["job"] = cfg.describe();
  doc["lambda"] = weight_json(p.lambda());
  doc["order"] = p.order().describe();
  doc["warnings"] = p.warnings();
  text << "job: " << cfg.describe() << "\nlambda: " << weight_to_string(p.lambda())
       << "\norder: " << p.order().describe() << "\n";
  for (const auto &w : p.warnings())
    text << "warning: " << w << "\n";
  for (unsigned k = 1; k <= K; ++k) {
    const auto &e = *es[k - 1];
    write_file(cfg.out_dir / ("es_" + std::to_string(k) + ".txt"), e.serialize());
    doc["levels"].push_back({{"k", k}, {"size", e.size()},
                             {"module_dim", p.tower().level(k).module.dim()}});
    text << "es(" << k << " lambda): " << e.size() << " monomials\n";
  }
  bool ok = true;
  for (unsigned k1 = 1; k1 <= K; ++k1)
    for (unsigned k2 = k1; k1 + k2 <= K; ++k2) {
      auto rep = check_semigroup_property(*es[k1 - 1], *es[k2 - 1], *es[k1 + k2 - 1]);
      json v = json::array();
      for (const auto &[a, b] : rep.violations)
        v.push_back({a.to_string(), b.to_string()});
      doc["semigroup"].push_back({{"k1", k1}, {"k2", k2}, {"pairs", rep.pairs_checked},
                                  {"compatible", rep.compatible_pairs}, {"violations", v}});
      text << "semigroup (" << k1 << "," << k2 << "): " << rep.compatible_pairs
           << " compatible pairs, " << rep.violations.size() << " violations\n";
      ok = ok && rep.ok();
    }
  auto fav = is_favourable(es);
  json failures = json::array();
  for (const auto &[k, e] : fav.failures)
    failures.push_back({{"k", k}, {"exponent", e.to_string()}});
  doc["favourable"] = {{"ok", fav.favourable},
                       {"checked_up_to", fav.checked_up_to},
                       {"failures", failures},
                       {"reading", "running partial sums stay in {0,1}^q x N^n"}};
  text << "favourable up to " << fav.checked_up_to << ": " << (fav.favourable ? "yes" : "no")
       << " (partial sums stay in {0,1}^q x N^n)\n";
  ok = ok && fav.favourable;

  if (cfg.search && !cfg.polytope.empty()) {
    auto sys = InequalitySystem::load(cfg.polytope);
    auto res = search_catalog(cfg, polytope_counts(sys, enumerate(sys)));
    json cat{{"tried", res.tried}, {"match", res.match.has_value()},
             {"best_difference", res.best_difference}};
    if (res.best)
      cat["best"] = {{"order", res.best->order}, {"basis_perm", res.best->basis_perm}};
    doc["catalog"] = cat;
    text << "catalog search: " << res.tried << " combinations, "
         << (res.match ? "match found" : "no match") << ", best symmetric difference "
         << res.best_difference << "\n";
    ok = ok && res.match.has_value();
  }
  doc["ok"] = ok;
  write_report(cfg.out_dir, "essential_report", doc, text.str());
  std::cout << text.str();
  return ok ? 0 : kChecksFailed;
}

int cmd_degenerate(const Overrides &ov) {
  JobConfig cfg = ov.load();
  Pipeline p(cfg);
  unsigned D = cfg.degree;
  auto es = p.essentials(D);
  Presentation pres(*es[0]);
  RingModel ring(pres, es);
  auto lifted = lift_relations(gr_ideal(pres, D), ring);
  auto w = find_weight_vector(lifted);
  auto fam = family_ideal(pres, lifted, w, es, D);
  std::vector<std::size_t> expected{1};
  for (auto *e : es)
    expected.push_back(e->size());
  auto hil = hilbert_check(fam, cfg.samples, expected);

  auto names = pres.names();
  auto tnames = pres.names_with_t();
  std::ostringstream family_text, relations_text;
  for (const auto &g : fam.generators)
    family_text << g.to_string(tnames) << "\n";
  for (const auto &rel : lifted)
    relations_text << rel.full().to_string(names) << "\n";
  write_file(cfg.out_dir / "family.txt", family_text.str());
  write_file(cfg.out_dir / "relations.txt", relations_text.str());

  json doc;
  std::ostringstream text;
  doc["job"] = cfg.describe();
  doc["degree_bound"] = D;
  doc["truncation"] = "relations and exchange sets computed for total degree <= " +
                      std::to_string(D);
  doc["weight"] = w;
  doc["weight_coordinates"] = "even block first, then odd";
  doc["generators"] = {{"even", pres.r()}, {"odd", pres.s()}};
  text << "job: " << cfg.describe() << "\nS: " << pres.r() << " even, " << pres.s()
       << " odd generators\nD = " << D << " (relations and exchange sets truncated there)\nw =";
  for (auto x : w)
    text << " " << x;
  text << "  (even block first)\n";
  for (const auto &rel : lifted) {
    json r{{"degree", rel.degree},
           {"lead", rel.lead.to_string(names)},
           {"component", rel.component ? rel.component->to_string() : "bottom"}};
    json corr = json::array();
    for (const auto &[u, g] : rel.corrections)
      corr.push_back({{"component", u.to_string()}, {"polynomial", g.to_string(names)},
                      {"t_power", apply_weight(w, u) - apply_weight(w, rel.exponent_sum)}});
    r["corrections"] = corr;
    doc["relations"].push_back(r);
    text << "relation [" << (rel.component ? rel.component->to_string() : "bottom") << "] "
         << rel.full().to_string(names) << "\n";
  }
  for (const auto &[h, ex] : fam.exchange)
    doc["exchange"][std::to_string(h)] = ex.size();
  for (const auto &wn : fam.warnings) {
    doc["warnings"].push_back(wn);
    text << "warning: " << wn << "\n";
  }
  doc["expected"] = expected;
  text << "expected |es(h lambda)|:";
  for (auto d : expected)
    text << " " << d;
  text << "\n";
  for (const auto &row : hil.rows) {
    doc["fibers"].push_back({{"t", row.sample.get_str()}, {"dims", row.dims}});
    text << "fiber t=" << row.sample << ":";
    for (auto d : row.dims)
      text << " " << d;
    text << (row.dims == expected ? "  ok" : "  MISMATCH") << "\n";
  }
  doc["ok"] = hil.ok();
  write_report(cfg.out_dir, "degenerate_report", doc, text.str());
  std::cout << text.str();
  return hil.ok() ? 0 : kChecksFailed;
}

json certificate_json(const ExponentSet &k, const ToricCertificate &c) {
  json doc;
  doc["verdict"] = to_string(c.verdict);
  doc["faithful"] = c.faithful;
  doc["reasons"] = c.reasons;
  doc["bound"] = c.bound;
  json viol = json::array();
  for (const auto &[e, i] : c.odd_removal.violations)
    viol.push_back({{"element", e.to_string()}, {"i", i + 1}});
  doc["odd_removal"] = {{"ok", c.odd_removal.ok}, {"violations", viol}};
  json factors = json::array();
  for (const auto &f : c.laurent.invariant_factors)
    factors.push_back(f.get_str());
  doc["even_laurent"] = {{"ok", c.laurent.ok},
                         {"generators", c.laurent.generators},
                         {"invariant_factors", factors}};
  json reach = json::array();
  for (std::size_t i = 0; i < c.reachability.answers.size(); ++i) {
    json sum = json::array();
    for (auto idx : c.reachability.witnesses[i])
      sum.push_back(k.elements[idx].to_string());
    reach.push_back({{"i", i + 1}, {"answer", to_string(c.reachability.answers[i])},
                     {"witness", sum}});
  }
  doc["odd_reachability"] = reach;
  auto space_json = [](const ActionSpace &s) {
    json out = json::array();
    for (std::size_t j = 0; j < s.basis.size(); ++j) {
      json basis = json::array();
      for (const auto &v : s.basis[j])
        basis.push_back(v.to_string());
      out.push_back({{"j", j + 1}, {"constraints", s.constraints[j].size()}, {"basis", basis}});
    }
    return out;
  };
  doc["action"] = {{"graded", space_json(c.action.graded)},
                   {"ungraded", space_json(c.action.ungraded)},
                   {"readings_differ", c.action.readings_differ()},
                   {"residuals_zero", c.action.graded.residuals_zero()}};
  json fails = json::array();
  for (const auto &f : c.closure.failures)
    fails.push_back({{"generator", f.generator.to_string()},
                     {"i", f.direction + 1},
                     {"parameter_j", f.parameter ? json(*f.parameter + 1) : json(nullptr)},
                     {"residual", f.residual.to_string()}});
  doc["derivation_closure"] = {{"ok", c.closure.ok},
                               {"checked", c.closure.derivatives_checked},
                               {"failures", fails}};
  doc["localization_witness"] = {{"exponent", c.localization_witness.to_string()},
                                 {"v_degree", c.localization_v_degree}};
  return doc;
}

int cmd_toric(const Overrides &ov, const std::string &exponents, unsigned bound) {
  JobConfig cfg = ov.load();
  std::vector<MultiExponent> elems;
  if (!exponents.empty()) {
    for (const auto &[e, k] : parse_exponent_lines(read_file(exponents)))
      elems.push_back(e);
  } else if (!ov.config.empty()) {
    Pipeline p(cfg);
    elems = p.essential(1).monomials;
  } else {
    throw UsageError("toric needs --exponents FILE or --config PATH");
  }
  if (elems.empty())
    throw UsageError("empty exponent set");
  auto k = ExponentSet::from(elems);
  auto cert = certify(k, bound ? bound : cfg.semigroup);
  json doc = certificate_json(k, cert);
  std::ostringstream text;
  text << "verdict: " << to_string(cert.verdict) << (cert.faithful ? " (faithful)" : "") << "\n";
  for (const auto &r : cert.reasons)
    text << "reason: " << r << "\n";
  text << "odd removal: " << (cert.odd_removal.ok ? "ok" : "fails") << "\n"
       << "even Laurent lattice: " << (cert.laurent.ok ? "ok" : "fails") << ", invariant factors";
  for (const auto &f : cert.laurent.invariant_factors)
    text << " " << f;
  text << "\nodd reachability:";
  for (auto a : cert.reachability.answers)
    text << " " << to_string(a);
  text << "\ntorus action (graded reading): dims";
  for (const auto &b : cert.action.graded.basis)
    text << " " << b.size();
  text << "; ungraded reading: dims";
  for (const auto &b : cert.action.ungraded.basis)
    text << " " << b.size();
  text << "\nderivation closure: " << (cert.closure.ok ? "ok" : "fails") << " ("
       << cert.closure.derivatives_checked << " derivatives)\n"
       << "localization witness: " << cert.localization_witness.to_string()
       << " v^" << cert.localization_v_degree << "\n";
  write_report(cfg.out_dir, "toric_certificate", doc, text.str());
  std::cout << text.str();
  return cert.verdict == ToricCertificate::Verdict::Toric ? 0 : kChecksFailed;
}

int cmd_polytope(const Overrides &ov, const std::string &file, unsigned dilation) {
  JobConfig cfg = ov.load();
  fs::path path = !file.empty() ? fs::path(file) : cfg.polytope;
  if (path.empty())
    throw UsageError("polytope needs --polytope FILE or a config with [polytope] file");
  auto sys = dilate(InequalitySystem::load(path), dilation);
  auto pts = enumerate(sys);
  std::ostringstream points;
  for (const auto &p : pts)
    points << to_exponent(sys, p).to_string() << " k=" << dilation << "\n";
  write_file(cfg.out_dir / ("points_" + std::to_string(dilation) + ".txt"), points.str());
  json doc{{"file", path.string()}, {"dilation", dilation}, {"points", pts.size()}};
  std::ostringstream text;
  text << "polytope " << path.string() << " dilated by " << dilation << ": " << pts.size()
       << " lattice points\n";
  bool ok = true;
  if (!ov.config.empty()) {
    Pipeline p(cfg);
    auto rep = compare(sys, pts, p.essential(dilation), p.algebra(), p.borel(), p.basis());
    doc["compare"] = {{"essential_size", rep.essential_size},
                      {"polytope_only", rep.polytope_only},
                      {"essential_only", rep.essential_only},
                      {"equal", rep.equal()}};
    text << "compare with es(" << dilation << " lambda) (" << rep.essential_size
         << " monomials): " << (rep.equal() ? "equal" : "differ") << "\n";
    for (const auto &s : rep.polytope_only)
      text << "  polytope-only: " << s << "\n";
    for (const auto &s : rep.essential_only)
      text << "  essential-only: " << s << "\n";
    ok = rep.equal();
  }
  doc["ok"] = ok;
  write_report(cfg.out_dir, "polytope_report", doc, text.str());
  std::cout << text.str();
  return ok ? 0 : kChecksFailed;
}

fs::path require(const fs::path &dir, const std::string &name) {
  fs::path p = dir / name;
  if (!fs::exists(p))
    throw UsageError("missing fixture file: " + p.string());
  return p;
}

int cmd_verify_example(const std::string &fixtures, const std::string &out) {
  fs::path dir = fixtures;
  fs::path conf = require(dir, "osp14_varpi1.conf");
  fs::path poly = require(dir, "osp14_varpi1.polytope");
  fs::path exp = require(dir, "osp14_generators.exp");

  std::vector<std::string> failed;
  json doc;
  std::ostringstream text;
  auto stage = [&](const std::string &name, auto &&body) {
    bool ok = false;
    std::string detail;
    try {
      ok = body(detail);
    } catch (const std::exception &e) {
      detail = std::string("error: ") + e.what();
    }
    if (!ok)
      failed.push_back(name);
    doc["stages"].push_back({{"stage", name}, {"pass", ok}, {"detail", detail}});
    std::string line = "stage " + name + ": " + (ok ? "PASS" : "FAIL") + " (" + detail + ")\n";
    text << line;
    std::cout << line << std::flush;
  };

  JobConfig cfg = JobConfig::load(conf);
  if (!out.empty())
    cfg.out_dir = out;
  InequalitySystem sys;
  std::vector<std::vector<long>> pts;
  std::vector<MultiExponent> listed;
  for (const auto &[e, k] : parse_exponent_lines(read_file(exp)))
    listed.push_back(e);
  std::sort(listed.begin(), listed.end());

  stage("polytope", [&](std::string &d) {
    sys = InequalitySystem::load(poly);
    pts = enumerate(sys);
    std::vector<MultiExponent> ours;
    for (const auto &p : pts)
      ours.push_back(to_exponent(sys, p));
    std::sort(ours.begin(), ours.end());
    d = std::to_string(pts.size()) + " points, " +
        (ours == listed ? "equal to" : "different from") + " the generator list";
    return pts.size() == 10 && ours == listed;
  });

  Pipeline p(cfg);
  stage("essential", [&](std::string &d) {
    d = "|es(lambda)| = " + std::to_string(p.essential(1).size());
    return p.essential(1).size() == 10;
  });

  stage("compare", [&](std::string &d) {
    auto res = search_catalog(cfg, polytope_counts(sys, pts));
    d = std::to_string(res.tried) + " order/permutation combinations, " +
        (res.match ? "match" : "no match") + ", best symmetric difference " +
        std::to_string(res.best_difference);
    return res.match.has_value();
  });

  unsigned D = cfg.degree;
  std::vector<const EssentialSet *> es;
  std::unique_ptr<Presentation> pres;
  std::unique_ptr<RingModel> ring;
  std::vector<GradedRelation> lifted;
  stage("gr-ideal", [&](std::string &d) {
    es = p.essentials(D);
    pres = std::make_unique<Presentation>(*es[0]);
    ring = std::make_unique<RingModel>(*pres, es);
    auto leads = gr_ideal(*pres, D);
    lifted = lift_relations(leads, *ring);
    std::size_t exact = 0;
    for (const auto &rel : lifted)
      exact += ring->evaluate(rel.full()).is_zero();
    d = std::to_string(leads.size()) + " leads, " + std::to_string(exact) + " lifted exactly";
    return exact == lifted.size();
  });

  DegenerationFamily fam;
  stage("family", [&](std::string &d) {
    auto w = find_weight_vector(lifted);
    fam = family_ideal(*pres, lifted, w, es, D);
    d = std::to_string(fam.generators.size()) + " generators over S[t]";
    return true;
  });

  stage("hilbert", [&](std::string &d) {
    std::vector<std::size_t> expected{1};
    for (auto *e : es)
      expected.push_back(e->size());
    auto rep = hilbert_check(fam, cfg.samples, expected);
    d = "degrees 0.." + std::to_string(D) + " at " + std::to_string(cfg.samples.size()) +
        " samples " + (rep.ok() ? "match" : "differ from") + " |es(h lambda)|";
    return rep.ok();
  });

  stage("toric", [&](std::string &d) {
    auto cert = certify(ExponentSet::from(listed));
    d = to_string(cert.verdict) + (cert.faithful ? ", faithful" : "");
    return cert.verdict == ToricCertificate::Verdict::Toric && cert.faithful;
  });

  doc["failed"] = failed;
  write_report(cfg.out_dir, "verify_example", doc, text.str());
  if (!failed.empty()) {
    std::cout << "failed stages:";
    for (const auto &f : failed)
      std::cout << " " << f;
    std::cout << "\n";
    return kChecksFailed;
  }
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  for (int i = 0; i < argc; ++i)
    command_line += (i ? " " : "") + std::string(i ? argv[i] : "superdeg");

  CLI::App app{"Essential monomials, degenerations and toric certificates for Lie superalgebra "
               "modules"};
  app.require_subcommand(1);

  Overrides ess, deg, tor, pol;
  auto *c_ess = app.add_subcommand("essential", "essential sets, semigroup and favourability");
  ess.attach(c_ess, true);
  auto *c_deg = app.add_subcommand("degenerate", "family ideal and fiber Hilbert functions");
  deg.attach(c_deg, true);
  auto *c_tor = app.add_subcommand("toric", "toric supervariety certificate");
  tor.attach(c_tor, false);
  std::string exponents;
  unsigned bound = 0;
  c_tor->add_option("--exponents", exponents, "exponent set file");
  c_tor->add_option("--bound", bound, "semigroup search bound (default 2q+2)");
  auto *c_pol = app.add_subcommand("polytope", "lattice points and comparison with es");
  pol.attach(c_pol, false);
  std::string polytope_file;
  unsigned dilation = 1;
  c_pol->add_option("--polytope", polytope_file, "inequality system file");
  c_pol->add_option("--dilate", dilation, "dilation factor")->check(CLI::PositiveNumber);
  auto *c_ver = app.add_subcommand("verify-example", "osp(1|4) varpi_1 end to end");
  std::string fixtures = "fixtures", ver_out;
  c_ver->add_option("--fixtures", fixtures, "fixture directory");
  c_ver->add_option("--out", ver_out, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? 0 : kUsage;
  }

  try {
    if (c_ess->parsed())
      return cmd_essential(ess);
    if (c_deg->parsed())
      return cmd_degenerate(deg);
    if (c_tor->parsed())
      return cmd_toric(tor, exponents, bound);
    if (c_pol->parsed())
      return cmd_polytope(pol, polytope_file, dilation);
    if (c_ver->parsed())
      return cmd_verify_example(fixtures, ver_out);
  } catch (const UsageError &e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnsupportedFamilyError &e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const NotConvergedError &e) {
    std::cerr << "not converged at degree cap " << e.degree_cap << ": " << e.what() << "\n";
    return kComputation;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kComputation;
  }
  return kUsage;
}
