#include "superdeg/pipeline.hpp"

#include "superdeg/error.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace superdeg {

namespace {

std::vector<std::string> words(const std::string &text) {
  std::string t = text;
  std::replace(t.begin(), t.end(), ',', ' ');
  std::istringstream in(t);
  std::vector<std::string> out;
  for (std::string w; in >> w;)
    out.push_back(w);
  return out;
}

unsigned to_unsigned(const std::string &key, const std::string &value) {
  try {
    std::size_t pos = 0;
    long v = std::stol(value, &pos);
    if (pos != value.size() || v < 0)
      throw std::invalid_argument(value);
    return static_cast<unsigned>(v);
  } catch (const std::exception &) {
    throw UsageError(key + ": expected a nonnegative integer, got '" + value + "'");
  }
}

bool to_bool(const std::string &key, const std::string &value) {
  if (value == "true" || value == "yes" || value == "1")
    return true;
  if (value == "false" || value == "no" || value == "0")
    return false;
  throw UsageError(key + ": expected true or false, got '" + value + "'");
}

std::string join(const std::vector<std::string> &v, const char *sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out += (i ? sep : "") + v[i];
  return out;
}

} // namespace

std::vector<Rational> parse_rational_list(const std::string &text) {
  std::vector<Rational> out;
  for (const auto &w : words(text)) {
    try {
      out.push_back(parse_rational(w));
    } catch (const std::exception &) {
      throw UsageError("not a rational number: '" + w + "'");
    }
  }
  return out;
}

std::vector<std::size_t> parse_index_list(const std::string &text, bool one_based) {
  std::vector<std::size_t> out;
  for (const auto &w : words(text)) {
    unsigned v = to_unsigned("index list", w);
    if (one_based && v == 0)
      throw UsageError("indices are 1-based");
    out.push_back(one_based ? v - 1 : v);
  }
  return out;
}

JobConfig JobConfig::parse(const std::string &text, const std::filesystem::path &base_dir) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  std::istringstream in(text);
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error &e) {
    throw ParseError(e.message(), e.line());
  }
  static const std::map<std::string, std::vector<std::string>> known{
      {"algebra", {"family", "m", "n", "functional", "basis_perm"}},
      {"realization", {"factors", "hw"}},
      {"order", {"name", "priority", "search"}},
      {"bounds", {"favourable_k", "degree", "semigroup", "samples", "degree_cap"}},
      {"polytope", {"file"}},
      {"output", {"dir"}}};
  for (const auto &[section, sub] : tree) {
    auto it = known.find(section);
    if (it == known.end())
      throw UsageError("unknown config section [" + section + "]");
    for (const auto &[key, value] : sub)
      if (std::find(it->second.begin(), it->second.end(), key) == it->second.end())
        throw UsageError("unknown key '" + key + "' in [" + section + "]");
  }
  auto get = [&](const std::string &path) { return tree.get_optional<std::string>(path); };

  JobConfig c;
  if (auto v = get("algebra.family"))
    c.family = *v;
  if (auto v = get("algebra.m"))
    c.m = to_unsigned("m", *v);
  if (auto v = get("algebra.n"))
    c.n = to_unsigned("n", *v);
  if (auto v = get("algebra.functional"))
    c.functional = parse_rational_list(*v);
  if (auto v = get("algebra.basis_perm"))
    c.basis_perm = parse_index_list(*v, true);
  if (auto v = get("realization.factors"))
    c.factors = words(*v);
  if (auto v = get("realization.hw")) {
    auto w = words(*v);
    if (w.empty())
      throw UsageError("hw: expected 'weight ...' or 'index ...'");
    std::string rest = join(std::vector<std::string>(w.begin() + 1, w.end()), " ");
    if (w[0] == "weight") {
      c.hw_mode = HwMode::Weight;
      c.hw_weight = parse_rational_list(rest);
    } else if (w[0] == "index") {
      c.hw_mode = HwMode::Index;
      c.hw_index = parse_index_list(rest, true);
    } else {
      throw UsageError("hw: unknown mode '" + w[0] + "'");
    }
  }
  if (auto v = get("order.name"))
    c.order = *v;
  if (auto v = get("order.priority"))
    c.priority = parse_index_list(*v, true);
  if (auto v = get("order.search"))
    c.search = to_bool("search", *v);
  if (auto v = get("bounds.favourable_k"))
    c.favourable_k = to_unsigned("favourable_k", *v);
  if (auto v = get("bounds.degree"))
    c.degree = to_unsigned("degree", *v);
  if (auto v = get("bounds.semigroup"))
    c.semigroup = to_unsigned("semigroup", *v);
  if (auto v = get("bounds.samples"))
    c.samples = parse_rational_list(*v);
  if (auto v = get("bounds.degree_cap"))
    c.degree_cap = to_unsigned("degree_cap", *v);
  if (auto v = get("polytope.file"))
    c.polytope = base_dir / *v;
  if (auto v = get("output.dir"))
    c.out_dir = *v;
  if (c.favourable_k == 0 || c.degree == 0)
    throw UsageError("bounds must be at least 1");
  if (c.factors.empty())
    throw UsageError("realization needs at least one factor");
  return c;
}

JobConfig JobConfig::load(const std::filesystem::path &file) {
  std::ifstream in(file);
  if (!in)
    throw UsageError("cannot open config file " + file.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), file.parent_path());
}

std::string JobConfig::describe() const {
  std::ostringstream out;
  out << family << "(" << m << "|" << (family == "osp" ? 2 * n : n) << ") factors=" << join(factors, ",");
  if (hw_mode == HwMode::Weight)
    out << " hw=weight " << weight_to_string(hw_weight);
  else {
    out << " hw=index";
    for (auto i : hw_index)
      out << " " << i + 1;
  }
  out << " order=" << order;
  if (!basis_perm.empty()) {
    out << " basis_perm=";
    for (std::size_t i = 0; i < basis_perm.size(); ++i)
      out << (i ? "," : "") << basis_perm[i] + 1;
  }
  return out.str();
}

Pipeline::Pipeline(JobConfig config) : config_(std::move(config)) {
  g_ = std::make_unique<LieSuperalgebra>(
      LieSuperalgebra::build(config_.family, config_.m, config_.n));
  Weight phi = config_.functional ? *config_.functional : default_functional(*g_);
  borel_ = choose_borel(*g_, phi);
  NegativeBasis nb = negative_basis(*g_, borel_, config_.basis_perm);
  order_ = MonomialOrder::from_name(config_.order, nb.size(), config_.priority);

  std::vector<Representation> factors;
  for (const auto &name : config_.factors)
    factors.push_back(Representation::from_name(name, *g_));
  Representation product = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i)
    product = Representation::tensor(product, factors[i], *g_);
  HighestWeightVector hw =
      config_.hw_mode == JobConfig::HwMode::Weight
          ? highest_weight_by_weight(product, config_.hw_weight, *g_, borel_)
          : highest_weight_by_index(factors, product, config_.hw_index, *g_, borel_);
  tower_ = std::make_unique<ModuleTower>(*g_, borel_, std::move(nb), std::move(product),
                                         std::move(hw), config_.degree_cap);
}

const EssentialSet &Pipeline::essential(unsigned k) {
  auto it = es_.find(k);
  if (it != es_.end())
    return *it->second;
  auto &level = tower_->level(k);
  auto es = std::make_unique<EssentialSet>(
      essential_monomials(*level.eval, level.module.dim(), order_, k));
  return *es_.emplace(k, std::move(es)).first->second;
}

std::vector<const EssentialSet *> Pipeline::essentials(unsigned K) {
  std::vector<const EssentialSet *> out;
  for (unsigned k = 1; k <= K; ++k)
    out.push_back(&essential(k));
  return out;
}

std::vector<std::string> Pipeline::warnings() const { return g_->warnings(); }

std::size_t root_count_difference(std::vector<RootCounts> a, std::vector<RootCounts> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<RootCounts> d;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(d));
  return d.size();
}

CatalogResult search_catalog(const JobConfig &base, const std::vector<RootCounts> &target) {
  CatalogResult result;
  std::size_t size = 0;
  {
    Pipeline p(base);
    size = p.basis().size();
  }
  for (const std::string order : {"graded-lex", "graded-revlex"}) {
    std::vector<std::size_t> perm(size);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      JobConfig c = base;
      c.order = order;
      c.priority.clear();
      c.basis_perm = perm;
      Pipeline p(c);
      const EssentialSet &es = p.essential(1);
      std::vector<RootCounts> counts;
      for (const auto &e : es.monomials)
        counts.push_back(root_counts(e, p.algebra(), p.basis()));
      std::size_t diff = root_count_difference(counts, target);
      ++result.tried;
      if (!result.best || diff < result.best_difference) {
        result.best_difference = diff;
        result.best = CatalogEntry{order, perm};
      }
      if (diff == 0) {
        result.match = CatalogEntry{order, perm};
        return result;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return result;
}

} // namespace superdeg
