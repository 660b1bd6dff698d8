#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "salab/errors.hpp"
#include "salab/experiments.hpp"
#include "salab/parser.hpp"
#include "salab/reproduce.hpp"

using namespace salab;

namespace {

enum Exit { kOk = 0, kDomain = 1, kParse = 2, kResource = 3 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string command;
  std::vector<std::string> files;
  std::string field;
  std::uint64_t seed = 0;
  bool seed_given = false;
  int mmax = -1;
  int trials = 3;
  std::size_t cap = 1000000;
  std::string json_out;
  std::string order = "grevlex";
  bool tuple = false;
  std::string threshold;
  std::string n_range = "2";
  std::string degrees = "2";
  std::string mode = "exhaustive";
  std::size_t samples = 1000;
  bool reverse = false;
  bool timings = false;
  bool mutate_syzygy = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Ideal load(const Options& o, const std::string& path) {
  Ideal ideal = parse_ideal_file(read_file(path));
  if (o.field.empty()) return ideal;
  const auto ring = RingContext::make(FieldSpec::parse(o.field), ideal.ring()->var_names());
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(change_ring(g, ring));
  return Ideal(ring, std::move(gens));
}

Ideal single(const Options& o) {
  if (o.files.size() != 1) throw InputError("'" + o.command + "' takes exactly one ideal file");
  return load(o, o.files.front());
}

Json strings(const std::vector<Polynomial>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(to_string(p));
  return out;
}

std::vector<int> int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::invalid_argument&) {
      throw DomainError("bad integer list '" + text + "'");
    } catch (const std::out_of_range&) {
      throw DomainError("bad integer list '" + text + "'");
    }
  }
  if (out.empty()) throw DomainError("empty integer list");
  return out;
}

ExperimentGrid grid_of(const Options& o) {
  ExperimentGrid g;
  g.field = FieldSpec::parse(o.field.empty() ? "F3" : o.field);
  const auto dots = o.n_range.find("..");
  if (dots == std::string::npos) {
    g.n_min = g.n_max = int_list(o.n_range).front();
  } else {
    g.n_min = int_list(o.n_range.substr(0, dots)).front();
    g.n_max = int_list(o.n_range.substr(dots + 2)).front();
  }
  if (g.n_min < 1) throw DomainError("variable counts must be positive");
  g.degrees = int_list(o.degrees);
  if (o.mode == "exhaustive") {
    g.mode = ExperimentGrid::Mode::exhaustive;
  } else if (o.mode == "sample") {
    g.mode = ExperimentGrid::Mode::sample;
  } else {
    throw DomainError("mode must be 'exhaustive' or 'sample'");
  }
  g.samples = o.samples;
  g.seed = o.seed;
  g.cap = o.cap;
  g.m_max = o.mmax;
  g.reverse_order = o.reverse;
  return g;
}

Json file_inputs(const Options& o, const Ideal& ideal) {
  Json in = {{"file", o.files.front()}, {"ideal", to_json(ideal)}};
  return in;
}

Json run_command(const Options& o) {
  const MonomialOrder ord = parse_order(o.order);
  const std::optional<std::uint64_t> seed = o.seed_given ? std::optional(o.seed) : std::nullopt;
  const std::string& cmd = o.command;

  if (cmd == "enumerate-hf") return enumerate_hilbert_functions(grid_of(o));
  if (cmd == "explore-threshold") return explore_threshold(grid_of(o));
  if (cmd == "reproduce-paper") return reproduce_paper(o.seed_given ? o.seed : kDefaultReproduceSeed);

  if (cmd == "pd-transfer") {
    if (o.files.size() != 2) throw InputError("pd-transfer takes an inner and an outer ideal file");
    const Ideal inner = load(o, o.files[0]);
    const Ideal outer_file = load(o, o.files[1]);
    const auto& gs = inner.generators();
    if (outer_file.ring()->num_vars() != gs.size())
      throw DomainError("outer ring needs one variable per inner generator");
    std::vector<int> weights;
    for (const auto& g : gs) {
      if (!g.degree() || *g.degree() < 1) throw DomainError("inner generators must have positive degree");
      weights.push_back(*g.degree());
    }
    const auto outer_ring =
        RingContext::make(outer_file.ring()->field(), outer_file.ring()->var_names(), std::move(weights));
    std::vector<Polynomial> outers;
    for (const auto& F : outer_file.generators()) outers.push_back(change_ring(F, outer_ring));
    const SubalgebraPresentation sp{gs, outers, outer_ring};
    const auto t = pd_transfer(sp, ord);
    std::vector<Polynomial> pushed;
    for (const auto& F : outers) pushed.push_back(substitute(F, gs, inner.ring()));
    return make_report(cmd, {{"inner", to_json(inner)}, {"outer", to_json(outer_file)}},
                       {{"pd_over_inner", t.pd_over_inner},
                        {"pd_in_S", t.pd_in_S},
                        {"agree", t.agree},
                        {"pushed_forward", strings(pushed)}});
  }

  const Ideal ideal = single(o);
  Json in = file_inputs(o, ideal);
  const auto& gens = ideal.generators();

  if (cmd == "gb") {
    const auto gb = buchberger(ideal, ord);
    in["order"] = to_string(ord);
    return make_report(cmd, in, {{"basis", strings(gb.basis)}, {"certified", verify_groebner_certificate(gb)}});
  }
  if (cmd == "hilbert") {
    const int mmax = o.mmax >= 0 ? o.mmax : default_hilbert_mmax(ideal);
    in["m_max"] = mmax;
    return make_report(cmd, in, {{"hilbert", to_json(hilbert_function(ideal, mmax))}});
  }
  if (cmd == "dim") {
    const int d = krull_dimension(ideal);
    return make_report(cmd, in, {{"dim", d}, {"codim", static_cast<int>(ideal.ring()->num_vars()) - d}});
  }
  if (cmd == "resolve" || cmd == "betti" || cmd == "pd") {
    ResolveOptions ro;
    ro.order = ord;
    const auto raw = resolve(ideal, ro);
    const auto raw_ranks = raw.ranks();
    const auto min = minimalize(raw);
    if (cmd == "pd") {
      const int pd = min.betti.projective_dimension();
      if (pd > static_cast<int>(ideal.ring()->num_vars())) throw std::logic_error("Hilbert syzygy bound violated");
      return make_report(cmd, in, {{"pd", pd}});
    }
    if (cmd == "betti") return make_report(cmd, in, {{"betti", to_json(min.betti)}});
    Json maps = Json::array();
    for (const auto& m : min.resolution.maps) maps.push_back(to_json(m));
    return make_report(cmd, in,
                       {{"ranks", min.resolution.ranks()}, {"raw_ranks", raw_ranks}, {"maps", maps},
                        {"exact", verify_exactness(min.resolution)}, {"betti", to_json(min.betti)}});
  }
  if (cmd == "nu") {
    if (o.tuple) {
      const auto rep = nu_tuple(gens);
      Json combo = Json::array();
      for (const auto& c : rep.combination) combo.push_back(to_json(c));
      return make_report(cmd, in, {{"nu", to_json(rep.value)}, {"combination", combo}, {"degree_class", rep.degree_class}});
    }
    Json forms = Json::array();
    for (const auto& f : gens) {
      Json entry = {{"form", to_string(f)}};
      const auto d = f.degree().value_or(0);
      if (d == 2 && is_homogeneous(f).homogeneous) {
        entry["nu"] = to_json(nu_quadric(f).value);
      } else if (d == 1 && is_homogeneous(f).homogeneous) {
        entry["nu"] = "inf";
      } else if (d == 0) {
        entry["nu"] = 0;
      } else {
        entry["nu"] = nullptr;
        entry["upper_bound"] = nu_variable_bound(f).bound;
      }
      forms.push_back(entry);
    }
    return make_report(cmd, in, {{"forms", forms}});
  }
  if (cmd == "strength") {
    Json values = Json::array();
    for (const auto& f : gens) values.push_back(strength_quadric(f));
    return make_report(cmd, in, {{"strength", values}});
  }
  if (cmd == "regseq") {
    const auto rep = is_regular_sequence(gens);
    return make_report(cmd, in, {{"regular", rep.regular}, {"codim", rep.codimension}, {"reason", rep.reason}});
  }
  if (cmd == "independent") return make_report(cmd, in, {{"independent", jacobian_independent(gens)}});
  if (cmd == "decompose") {
    if (o.threshold.empty()) throw DomainError("decompose needs --threshold");
    const auto N = ThresholdFunction::parse(o.threshold);
    const auto d = decompose_to_high_nu(gens, N);
    in["threshold"] = N.describe();
    Json res = to_json(d.presentation);
    res["nu"] = to_json(d.nu);
    res["steps"] = d.steps;
    res["length_bound"] = decomposition_length_bound(static_cast<int>(gens.size()), N);
    res["verified"] = verify_presentation(gens, d.presentation);
    return make_report(cmd, in, res);
  }
  if (cmd == "gin") {
    GinOptions go;
    go.trials = o.trials;
    const auto check = check_gin_pd_invariance(ideal, o.seed, go);
    Json res = to_json(check.gin, ideal.ring());
    res["pd_ideal"] = check.pd_ideal;
    res["pd_gin"] = check.pd_gin;
    res["pd_agree"] = check.agree;
    return make_report(cmd, in, res, o.seed);
  }
  throw DomainError("unknown command '" + cmd + "'");
}

int fail(int code, const std::string& kind, const std::string& message) {
  std::cerr << "salab: " << kind << ": " << message << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"salab: exact commutative algebra explorer"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--field", o.field, "Coefficient field override (QQ or F<p>)");
  app.add_option("--seed", o.seed, "Random seed")->each([&](const std::string&) { o.seed_given = true; });
  app.add_option("--mmax", o.mmax, "Largest degree for Hilbert functions");
  app.add_option("--trials", o.trials, "gin trials per round");
  app.add_option("--cap", o.cap, "Instance cap for experiments");
  app.add_option("--json", o.json_out, "Also write the report to this file");
  app.add_option("--order", o.order, "Monomial order (grevlex, lex, grlex)");
  app.add_flag("--timings", o.timings, "Add wall-clock timings to the report");
  app.add_flag("--mutate-syzygy", o.mutate_syzygy)->group("");

  const std::vector<std::pair<std::string, std::string>> commands{
      {"gb", "Reduced Groebner basis"},
      {"hilbert", "Hilbert function of S/I"},
      {"dim", "Krull dimension of S/I"},
      {"resolve", "Minimal graded free resolution"},
      {"betti", "Graded Betti table"},
      {"pd", "Projective dimension of S/I"},
      {"nu", "nu-complexity of the generators (or the tuple)"},
      {"strength", "Strength of quadratic generators"},
      {"regseq", "Regular sequence test"},
      {"independent", "Jacobian algebraic independence test"},
      {"decompose", "Rewrite over a tuple of high nu-complexity"},
      {"gin", "Generic initial ideal and pd invariance"},
      {"pd-transfer", "Compare pd over the inner subalgebra and in S"},
      {"enumerate-hf", "Distinct Hilbert functions over a grid"},
      {"explore-threshold", "nu against regularity over a quadric grid"},
      {"reproduce-paper", "Run the reproduction suite"}};
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("files", o.files, "Ideal files");
    sub->final_callback([&o, name] { o.command = name; });
    if (name == "nu") sub->add_flag("--tuple", o.tuple, "nu of the whole tuple");
    if (name == "decompose") sub->add_option("--threshold", o.threshold, "N as a constant or table 'a,b,c'");
    if (name == "enumerate-hf" || name == "explore-threshold") {
      sub->add_option("--n", o.n_range, "Variable count or range 'a..b'");
      sub->add_option("--degrees", o.degrees, "Degree tuple 'd1,d2,...'");
      sub->add_option("--mode", o.mode, "exhaustive or sample");
      sub->add_option("--samples", o.samples, "Instances per n in sample mode");
      sub->add_flag("--reverse", o.reverse, "Enumerate in reverse order");
    }
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  mutation::set_syzygy_perturbation(o.mutate_syzygy);
  try {
    const auto start = std::chrono::steady_clock::now();
    Json report = run_command(o);
    if (o.timings) {
      report["timings"] = {
          {"total_ms", std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count()}};
    }
    const std::string text = dump(report);
    std::cout << text;
    if (!o.json_out.empty()) {
      std::ofstream out(o.json_out);
      if (!out) return fail(kDomain, "error", "cannot write '" + o.json_out + "'");
      out << text;
    }
    if (o.command == "reproduce-paper" && !report["results"]["all_pass"].get<bool>()) return kDomain;
    return kOk;
  } catch (const ParseError& e) {
    return fail(kParse, "parse error", e.what());
  } catch (const InputError& e) {
    return fail(kParse, "input error", e.what());
  } catch (const ResourceError& e) {
    return fail(kResource, "resource cap", e.what());
  } catch (const DomainError& e) {
    return fail(kDomain, "domain error", e.what());
  }
}
