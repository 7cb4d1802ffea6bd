// Copyright 2026 The mip Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Documents go to stdout (or --output), messages to
// stderr. Exit codes: 0 success, 1 a verification failed, 2 usage or guard.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mip/base_analysis.hpp"
#include "mip/concrete_group.hpp"
#include "mip/recognize.hpp"
#include "mip/render.hpp"
#include "mip/report.hpp"

namespace {

using mip::Json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t max_order_from_env() {
  const char* env = std::getenv("MIP_MAX_ORDER");
  if (env == nullptr || *env == '\0') return mip::kDefaultMaxOrder;
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(env, &pos);
    if (pos != std::string(env).size() || v == 0) throw std::invalid_argument(env);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw UsageError(std::string("MIP_MAX_ORDER must be a positive integer, got '") + env + "'");
  }
}

void guard(std::uint64_t order, std::size_t max_order) {
  mip::check_order_guard(order, max_order);
}

mip::GroupParams family_params(int family, int n, int m, int l) {
  if (family < 1 || family > 6) throw UsageError("family must be 1..6");
  const mip::Mode mode = l >= 2 ? mip::Mode::kStandard : mip::Mode::kDegenerate;
  return mip::GroupParams::of_family(mip::family_from_index(family), n, m, l, mode);
}

/// "f,n,m,l" (f = 1..6 or G1..G6) or a maximal-class name such as "q16".
using GroupSpec = std::variant<mip::GroupParams, mip::MaximalClassSpec>;

GroupSpec parse_spec(const std::string& text) {
  if (text.find(',') == std::string::npos) return mip::parse_maximal_class(text);
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ',');) parts.push_back(part);
  if (parts.size() != 4) throw UsageError("group spec must be f,n,m,l: '" + text + "'");
  try {
    const int f = mip::family_index(mip::parse_family(parts[0]));
    return family_params(f, std::stoi(parts[1]), std::stoi(parts[2]), std::stoi(parts[3]));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad group spec '") + text + "': " + e.what());
  }
}

std::string spec_name(const GroupSpec& s) {
  if (const auto* p = std::get_if<mip::GroupParams>(&s)) return mip::params_name(*p);
  return std::get<mip::MaximalClassSpec>(s).name();
}

std::uint64_t spec_order(const GroupSpec& s) {
  if (const auto* p = std::get_if<mip::GroupParams>(&s)) return p->order();
  return std::get<mip::MaximalClassSpec>(s).order();
}

std::string subgroup_text(const mip::SubgroupData& s) {
  if (s.abelian) return mip::invariants_name(s.invariants);
  return "non-abelian of order " + std::to_string(s.order());
}

/// Key/value projection of a flat JSON object for md and csv.
mip::TextTable key_values(const Json& j) {
  mip::TextTable t;
  t.header = {"field", "value"};
  for (const auto& [k, v] : j.items()) t.rows.push_back({k, v.is_string() ? v.get<std::string>() : v.dump()});
  return t;
}

std::string render_object(const Json& j, mip::Format format) {
  switch (format) {
    case mip::Format::kJson:
      return mip::to_json_text(j);
    case mip::Format::kMarkdown:
      return mip::to_markdown(key_values(j));
    case mip::Format::kCsv:
      return mip::to_csv(key_values(j));
    case mip::Format::kDot:
      break;
  }
  throw UsageError("dot output is only available for quotient-graph");
}

Json checks_json(const std::vector<mip::CheckResult>& checks) {
  Json j = Json::array();
  for (const auto& c : checks) {
    Json e{{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) e["detail"] = c.detail;
    j.push_back(e);
  }
  return j;
}

struct Options {
  int family = 1;
  int n = 4, m = 3, l = 2;
  int field_degree = 1;
  std::string format;
  std::string output;
  std::string a, b;
  std::size_t graph_order = 128;
  int trials = 20;
  std::uint64_t seed = 1;
  bool quotients = false;
  std::vector<int> field_degrees{1, 2};
};

class Runner {
 public:
  Runner(const Options& o, std::size_t max_order) : o_(o), max_order_(max_order) {}

  int group() {
    const mip::GroupParams p = family_params(o_.family, o_.n, o_.m, o_.l);
    guard(p.order(), max_order_);
    const mip::Group g(p);
    std::map<std::uint64_t, std::size_t> orders;
    for (mip::Elem e = 0; e < g.order(); ++e) ++orders[mip::element_order(g, e)];
    Json hist = Json::object();
    for (const auto& [k, c] : orders) hist[std::to_string(k)] = c;
    const auto named = mip::named_subgroups(g);
    Json j{{"group", mip::params_name(p)},
           {"order", g.order()},
           {"element_orders", hist},
           {"conjugacy_classes", mip::conjugacy_classes(g).size()},
           {"center", subgroup_text(named.center)},
           {"derived", subgroup_text(named.derived)},
           {"frattini", subgroup_text(named.frattini)},
           {"socle", subgroup_text(named.socle)}};
    return emit(render_object(j, format("json")));
  }

  int invariants() {
    const mip::GroupParams p = family_params(o_.family, o_.n, o_.m, o_.l);
    guard(p.order(), max_order_);
    mip::FingerprintOptions fo;
    fo.field_degrees = o_.field_degrees;
    fo.quotients = o_.quotients;
    const mip::InvariantReport r = mip::fingerprint(p, fo);
    Json kernels = Json::object();
    for (const auto& [k, v] : r.kernel_sizes) kernels[std::to_string(k)] = v;
    Json j{{"group", mip::params_name(p)},
           {"order", r.order},
           {"coclass", r.coclass},
           {"abelianization", mip::invariants_name(r.abelianization)},
           {"center", mip::invariants_name(r.center)},
           {"socle", mip::invariants_name(r.socle)},
           {"kulshammer", r.kulshammer},
           {"quillen_rank", r.quillen_rank},
           {"centralizer_exponent", r.centralizer_exponent},
           {"kernel_sizes", kernels}};
    if (r.quotients) {
      Json q = Json::array();
      for (const auto& row : *r.quotients) q.push_back({{"involution", row.involution}, {"target", row.target}});
      j["quotients"] = q;
    }
    return emit(render_object(j, format("json")));
  }

  int verify_counterexample() {
    const int n = o_.n, m = o_.m, l = o_.l;
    if (!(n >= m && m > l && l >= 2)) throw UsageError("verify-counterexample needs n >= m > l >= 2");
    const mip::GroupParams pa = mip::GroupParams::of_family(mip::Family::kG1, n, m, l);
    guard(pa.order(), max_order_);
    mip::CrossedBase base = mip::crossed_base(n, m, l, mip::FieldSpec(o_.field_degree));
    const auto& log = mip::verify_relations(base);
    const bool relations_ok = mip::all_passed(log);
    Json j{{"group_a", mip::params_name(pa)},
           {"group_b", "G2" + mip::ParamTriple{n, m, l}.label()},
           {"field_degree", o_.field_degree},
           {"relations", checks_json(log)}};
    bool ok = relations_ok;
    if (relations_ok) {
      const std::size_t rank = mip::hom_rank(base);
      j["rank"] = rank;
      ok = ok && rank == base.algebra->dim();
    } else {
      j["rank"] = nullptr;
    }
    j["order"] = pa.order();
    const mip::Group ga(pa), gb(base.algebra->group().params());
    const auto ea = mip::exponent(ga, mip::centralizer(ga, mip::derived_subgroup(ga).elements));
    const auto eb = mip::exponent(gb, mip::centralizer(gb, mip::derived_subgroup(gb).elements));
    j["centralizer_exponents"] = Json::array({ea, eb});
    if (pa.order() <= mip::kVerdictBruteForceOrder) {
      const bool iso = mip::brute_force_isomorphic(ga, gb);
      j["groups_isomorphic"] = iso;
      ok = ok && !iso;
    } else {
      j["groups_isomorphic"] = nullptr;
      ok = ok && ea != eb;
    }
    j["verified"] = ok;
    emit(render_object(j, format("json")));
    return ok ? kOk : kFailed;
  }

  int kernel_table(bool explicit_triple) {
    std::vector<mip::ParamTriple> cols{{4, 3, 2}, {4, 3, 3}, {4, 2, 3}};
    if (explicit_triple) cols = {{o_.n, o_.m, o_.l}};
    const auto t = mip::kernel_table(cols, o_.field_degree, max_order_);
    return emit(mip::render(t, format("md")));
  }

  int quotients() {
    const auto s = mip::quotient_summary(o_.n, o_.m, o_.l, max_order_);
    return emit(mip::render(s, format("md")));
  }

  int quotient_graph() {
    if (o_.graph_order > max_order_) guard(o_.graph_order, max_order_);
    const auto g = mip::quotient_graph(o_.graph_order);
    return emit(mip::render(g, format("dot")));
  }

  int classify_pair() {
    const GroupSpec a = parse_spec(o_.a), b = parse_spec(o_.b);
    const auto* pa = std::get_if<mip::GroupParams>(&a);
    const auto* pb = std::get_if<mip::GroupParams>(&b);
    if (!pa || !pb) throw UsageError("classify-pair takes two f,n,m,l specs");
    guard(pa->order(), max_order_);
    const mip::Verdict v = mip::distinguish_pair(*pa, *pb, o_.field_degree);
    Json ev = Json::object();
    for (const auto& [k, val] : v.evidence) ev[k] = val;
    Json j{{"a", mip::params_name(v.a)}, {"b", mip::params_name(v.b)},
           {"outcome", mip::outcome_name(v.outcome)}};
    if (!v.invariant.empty()) {
      j["invariant"] = v.invariant;
      j["value_a"] = v.value_a;
      j["value_b"] = v.value_b;
    }
    if (!v.citation.empty()) j["citation"] = v.citation;
    j["evidence"] = ev;
    return emit(render_object(j, format("json")));
  }

  int brute_iso() {
    const GroupSpec a = parse_spec(o_.a), b = parse_spec(o_.b);
    guard(spec_order(a), max_order_);
    guard(spec_order(b), max_order_);
    const bool iso = std::visit(
        [this](const auto& x, const auto& y) {
          return mip::brute_force_isomorphic(materialize(x), materialize(y), max_order_);
        },
        a, b);
    Json j{{"a", spec_name(a)}, {"b", spec_name(b)}, {"isomorphic", iso}};
    return emit(render_object(j, format("json")));
  }

  int base_lemmas() {
    const int n = o_.n, m = o_.m, l = o_.l;
    if (!(n >= m && m >= 2 && l >= 2)) throw UsageError("base-lemmas needs n >= m >= 2 and l >= 2");
    guard(std::uint64_t{1} << (n + m + l), max_order_);
    mip::CrossedBase base = mip::crossed_base(n, m, l, mip::FieldSpec(o_.field_degree));
    const mip::JenningsBasis basis(*base.algebra);
    const auto& rel = mip::verify_relations(base);
    const auto checks = mip::base_lemma_checks(base, basis);
    const auto pert = mip::perturbation_checks(base, basis, o_.trials, o_.seed);
    const auto prof = mip::base_profile(base.x + base.algebra->one(), base.y + base.algebra->one(), basis);
    Json j{{"ambient", "G2" + mip::ParamTriple{n, m, l}.label()},
           {"field_degree", o_.field_degree},
           {"relations", checks_json(rel)},
           {"profile",
            {{"alpha_A", prof.a.alpha}, {"beta_A", prof.a.beta}, {"gamma_A", prof.a.gamma},
             {"alpha_B", prof.b.alpha}, {"beta_B", prof.b.beta}, {"gamma_B", prof.b.gamma},
             {"lambda", prof.lambda}, {"mu", prof.mu}, {"nu", prof.nu}}},
           {"checks", checks_json(checks)},
           {"perturbations", {{"trials", pert.trials}, {"passed", pert.passed}, {"seed", o_.seed}}}};
    const bool ok = mip::all_passed(rel) && mip::all_passed(checks) && pert.passed == pert.trials;
    j["verified"] = ok;
    emit(render_object(j, format("json")));
    return ok ? kOk : kFailed;
  }

 private:
  static mip::Group materialize(const mip::GroupParams& p) { return mip::Group(p); }
  static mip::ConcreteGroup materialize(const mip::MaximalClassSpec& s) {
    return mip::make_maximal_class(s);
  }

  mip::Format format(const char* fallback) const {
    return mip::parse_format(o_.format.empty() ? fallback : o_.format);
  }

  int emit(const std::string& text) const {
    if (o_.output.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(o_.output, std::ios::binary);
      if (!out) throw UsageError("cannot write " + o_.output);
      out << text;
    }
    return kOk;
  }

  const Options& o_;
  std::size_t max_order_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Group and group-algebra computations for the 2-groups G_theta(n, m, l)"};
  app.set_version_flag("--version", "mip 0.1.0");
  app.require_subcommand(1);
  Options o;

  auto add_triple = [&o](CLI::App* cmd) {
    cmd->add_option("--n", o.n, "log2 of the order of x")->capture_default_str();
    cmd->add_option("--m", o.m, "log2 of the order of y modulo <x>")->capture_default_str();
    cmd->add_option("--l", o.l, "log2 of the order of z")->capture_default_str();
  };
  auto add_common = [&o](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "md, csv, json or dot")
        ->check(CLI::IsMember({"md", "markdown", "csv", "json", "dot"}));
    cmd->add_option("-o,--output", o.output, "write the document here instead of stdout");
  };
  auto add_field = [&o](CLI::App* cmd) {
    cmd->add_option("--field-deg", o.field_degree, "k for the field GF(2^k)")
        ->check(CLI::Range(1, 8))
        ->capture_default_str();
  };

  auto* group = app.add_subcommand("group", "element counts and subgroup landmarks");
  group->add_option("-f,--family", o.family, "family 1..6")->capture_default_str();
  add_triple(group);
  add_common(group);

  auto* inv = app.add_subcommand("invariants", "invariant fingerprint");
  inv->add_option("-f,--family", o.family, "family 1..6")->capture_default_str();
  add_triple(inv);
  add_common(inv);
  inv->add_option("--field-degs", o.field_degrees, "field degrees for kernel sizes")
      ->check(CLI::Range(1, 8));
  inv->add_flag("--quotients", o.quotients, "include the maximal quotients");

  auto* verify = app.add_subcommand("verify-counterexample",
                                    "crossed base of F G2, relations, rank and group evidence");
  add_triple(verify);
  add_field(verify);
  add_common(verify);

  auto* kernel = app.add_subcommand("kernel-table", "kernel sizes of the 2^m-power map");
  add_triple(kernel);
  add_field(kernel);
  add_common(kernel);

  auto* quot = app.add_subcommand("quotients", "maximal quotients of the six groups at (n, m, l)");
  add_triple(quot);
  add_common(quot);

  auto* graph = app.add_subcommand("quotient-graph", "maximal-quotient graph up to an order");
  graph->add_option("--max-order", o.graph_order, "largest group order in the graph")
      ->capture_default_str();
  add_common(graph);

  auto* pair = app.add_subcommand("classify-pair", "verdict for two groups with equal (n, m, l)");
  pair->add_option("--a", o.a, "f,n,m,l")->required();
  pair->add_option("--b", o.b, "f,n,m,l")->required();
  add_field(pair);
  add_common(pair);

  auto* iso = app.add_subcommand("brute-iso", "brute-force group isomorphism test");
  iso->add_option("--a", o.a, "f,n,m,l or d16, sd16, q16, ...")->required();
  iso->add_option("--b", o.b, "f,n,m,l or d16, sd16, q16, ...")->required();
  add_common(iso);

  auto* lemmas = app.add_subcommand("base-lemmas", "profile and congruence checks on the crossed base");
  add_triple(lemmas);
  add_field(lemmas);
  add_common(lemmas);
  lemmas->add_option("--trials", o.trials, "random Delta^3 perturbations")->capture_default_str();
  lemmas->add_option("--seed", o.seed, "perturbation seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    Runner run(o, max_order_from_env());
    if (*group) return run.group();
    if (*inv) return run.invariants();
    if (*verify) return run.verify_counterexample();
    if (*kernel) {
      const bool explicit_triple = kernel->count("--n") + kernel->count("--m") + kernel->count("--l") > 0;
      return run.kernel_table(explicit_triple);
    }
    if (*quot) return run.quotients();
    if (*graph) return run.quotient_graph();
    if (*pair) return run.classify_pair();
    if (*iso) return run.brute_iso();
    if (*lemmas) return run.base_lemmas();
  } catch (const mip::GuardExceeded& e) {
    std::cerr << "mip: " << e.what() << " (raise MIP_MAX_ORDER to allow it)\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "mip: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "mip: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
