#include "salab/reproduce.hpp"

#include <chrono>
#include <stdexcept>

#include "salab/errors.hpp"
#include "salab/experiments.hpp"
#include "salab/random.hpp"

namespace salab {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Ring ring_qq(std::size_t n, const std::string& prefix = "x") {
  return RingContext::make_indexed(FieldSpec::rationals(), n, prefix);
}

Polynomial form(const Ring& ring, Rng& rng, int degree, std::size_t max_terms, std::int64_t bound = 3) {
  RandomFormSpec spec;
  spec.degree = degree;
  spec.max_terms = max_terms;
  spec.coeff_bound = bound;
  return random_form(ring, spec, rng);
}

std::vector<Polynomial> random_tuple(const Ring& ring, Rng& rng, int r, int max_degree, std::size_t max_terms) {
  std::vector<Polynomial> out;
  for (int i = 0; i < r; ++i) out.push_back(form(ring, rng, static_cast<int>(rng.uniform(1, max_degree)), max_terms));
  return out;
}

Ring alternate_field_ring(int k, std::size_t n) {
  return RingContext::make_indexed(k % 2 ? FieldSpec::prime(5) : FieldSpec::rationals(), n);
}

long long binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

AcceptanceItem worked_resolution() {
  AcceptanceItem item{1, "worked resolution of (x1^2, x1*x2)", false, {}};
  const auto start = Clock::now();
  const auto ring = RingContext::make(FieldSpec::rationals(), {"x1", "x2"});
  const auto x1 = Polynomial::variable(ring, 0), x2 = Polynomial::variable(ring, 1);
  const Ideal ideal(ring, {x1 * x1, x1 * x2});
  const auto min = minimalize(resolve(ideal));
  const auto ranks = min.resolution.ranks();
  bool phi2_ok = false;
  if (min.resolution.maps.size() == 2) {
    const auto& phi2 = min.resolution.maps[1];
    if (phi2.rows() == 2 && phi2.cols() == 1) {
      const Coeff u = phi2(1, 0).coefficient(Monomial::variable(2, 0));
      phi2_ok = u != 0 && phi2(0, 0) == (-x2).scaled(u) && phi2(1, 0) == x1.scaled(u);
    }
  }
  const int pd = min.betti.projective_dimension();
  const bool vanish = compositions_vanish(min.resolution) && verify_exactness(min.resolution);
  const bool fast = seconds_since(start) < 1.0;
  Json rk = Json::array();
  for (auto r : ranks) rk.push_back(r);
  item.detail = {{"ranks", rk}, {"phi2_matches", phi2_ok}, {"pd", pd}, {"composition_zero", vanish},
                 {"within_time", fast}, {"betti", to_json(min.betti)}};
  item.pass = ranks == std::vector<std::size_t>{1, 2, 1} && phi2_ok && pd == 2 && vanish && fast;
  return item;
}

AcceptanceItem syzygy_bound(std::uint64_t seed) {
  AcceptanceItem item{2, "projective dimension at most n on random ideals", false, {}};
  const auto start = Clock::now();
  Rng rng(derive_seed(seed, 2));
  int cases = 0, violations = 0;
  std::map<int, int> max_pd;
  for (int k = 0; k < 500; ++k) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    const auto ring = alternate_field_ring(k, n);
    const auto fs = random_tuple(ring, rng, static_cast<int>(rng.uniform(1, 4)), 3, 3);
    ++cases;
    try {
      const int pd = projective_dimension(Ideal(ring, fs));
      max_pd[static_cast<int>(n)] = std::max(max_pd[static_cast<int>(n)], pd);
      if (pd > static_cast<int>(n)) ++violations;
    } catch (const std::logic_error&) {
      ++violations;
    }
  }
  Json mp = Json::object();
  for (const auto& [n, pd] : max_pd) mp[std::to_string(n)] = pd;
  const bool fast = seconds_since(start) < 120.0;
  item.detail = {{"cases", cases}, {"violations", violations}, {"max_pd_by_n", mp}, {"within_time", fast}};
  item.pass = cases >= 500 && violations == 0 && fast;
  return item;
}

AcceptanceItem principal_hilbert(std::uint64_t seed) {
  AcceptanceItem item{3, "principal ideal Hilbert function closed form", false, {}};
  Rng rng(derive_seed(seed, 3));
  int cases = 0, mismatches = 0;
  for (long long n = 1; n <= 5; ++n)
    for (int d = 1; d <= 4; ++d) {
      const auto ring = ring_qq(static_cast<std::size_t>(n));
      const auto f = form(ring, rng, d, 4);
      const auto hf = hilbert_function(Ideal(ring, {f}), 10);
      for (long long m = 0; m <= 10; ++m) {
        const long long expect = binomial(n + m - 1, n - 1) - binomial(n + m - d - 1, n - 1);
        ++cases;
        if (hf.values.at(static_cast<int>(m)) != expect) ++mismatches;
      }
    }
  item.detail = {{"cases", cases}, {"mismatches", mismatches}};
  item.pass = mismatches == 0 && cases == 5 * 4 * 11;
  return item;
}

AcceptanceItem diagonal_nu() {
  AcceptanceItem item{4, "nu of x1^2 + ... + xn^2 equals n", false, {}};
  Json values = Json::array();
  bool ok = true;
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto ring = ring_qq(n);
    Polynomial f(ring);
    for (std::size_t i = 0; i < n; ++i) f += Polynomial::monomial(ring, 1, Monomial::variable(n, i, 2));
    const auto rep = nu_quadric(f);
    values.push_back(to_json(rep.value));
    ok = ok && rep.value == Nu::finite(static_cast<int>(n)) && rep.witness && verify_witness(f, *rep.witness);
  }
  item.detail = {{"nu", values}};
  item.pass = ok;
  return item;
}

AcceptanceItem cube_witness() {
  AcceptanceItem item{5, "witness for (x1^2 + x2^2 + x3^2)^3", false, {}};
  const auto ring = ring_qq(3);
  Polynomial q(ring);
  for (std::size_t i = 0; i < 3; ++i) q += Polynomial::monomial(ring, 1, Monomial::variable(3, i, 2));
  const auto f = pow(q, 3);
  const auto outer = ring_qq(1, "X");
  const bool accepted = verify_witness(f, {pow(Polynomial::variable(outer, 0), 3), {q}});
  const bool self_rejected = !verify_witness(f, {Polynomial::variable(outer, 0), {f}});
  item.detail = {{"accepted", accepted}, {"self_witness_rejected", self_rejected}, {"nu_upper_bound", 1}};
  item.pass = accepted && self_rejected;
  return item;
}

AcceptanceItem regular_sequence_oracles(std::uint64_t seed) {
  AcceptanceItem item{6, "regular sequence: dimension and Koszul oracles agree", false, {}};
  Rng rng(derive_seed(seed, 6));
  int cases = 0, disagreements = 0, regular = 0;
  for (int k = 0; k < 300; ++k) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    const auto ring = alternate_field_ring(k, n);
    const int r = static_cast<int>(rng.uniform(1, std::min<std::int64_t>(3, static_cast<std::int64_t>(n))));
    const auto fs = random_tuple(ring, rng, r, 3, 3);
    const bool by_dim = is_regular_sequence(fs).regular;
    if (by_dim != koszul_check(fs)) ++disagreements;
    regular += by_dim;
    ++cases;
  }
  const auto ring = RingContext::make(FieldSpec::rationals(), {"x", "y", "z"});
  const auto x = Polynomial::variable(ring, 0);
  const std::vector<Polynomial> xy_xz{x * Polynomial::variable(ring, 1), x * Polynomial::variable(ring, 2)};
  const auto rep = is_regular_sequence(xy_xz);
  item.detail = {{"cases", cases},
                 {"disagreements", disagreements},
                 {"regular_cases", regular},
                 {"xy_xz", {{"regular", rep.regular}, {"codim", rep.codimension}}}};
  item.pass = cases >= 300 && disagreements == 0 && !rep.regular && rep.codimension == 1;
  return item;
}

AcceptanceItem decomposition(std::uint64_t seed) {
  AcceptanceItem item{7, "decomposition into a high-nu tuple", false, {}};
  const auto start = Clock::now();
  Rng rng(derive_seed(seed, 7));
  int cases = 0, failures = 0, max_s = 0, rewrites = 0;
  for (int k = 0; k < 100; ++k) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 5));
    const auto ring = RingContext::make_indexed(FieldSpec::prime(7), n);
    const int r = static_cast<int>(rng.uniform(1, 3));
    std::vector<Polynomial> fs;
    for (int i = 0; i < r; ++i) fs.push_back(form(ring, rng, 2, static_cast<std::size_t>(rng.uniform(1, 4))));
    const int c = k % 3 + 1;
    const auto N = ThresholdFunction::constant(c);
    ++cases;
    try {
      const auto d = decompose_to_high_nu(fs, N);
      const int s = static_cast<int>(d.presentation.inner.size());
      max_s = std::max(max_s, s);
      rewrites += d.steps;
      const bool ok = verify_presentation(fs, d.presentation) && nu_tuple(d.presentation.inner).value.exceeds(N(s)) &&
                      s <= r * (1 + c);
      if (!ok) ++failures;
    } catch (const std::exception&) {
      ++failures;
    }
  }
  const bool fast = seconds_since(start) < 120.0;
  item.detail = {{"cases", cases}, {"failures", failures}, {"max_length", max_s}, {"rewrites", rewrites},
                 {"within_time", fast}};
  item.pass = cases >= 100 && failures == 0 && fast;
  return item;
}

AcceptanceItem pd_transfer_item(std::uint64_t seed) {
  AcceptanceItem item{8, "pd transfer along a regular inner tuple", false, {}};
  Rng rng(derive_seed(seed, 8));
  int built = 0, attempts = 0, disagreements = 0;
  while (built < 50 && attempts < 1000) {
    ++attempts;
    const auto n = static_cast<std::size_t>(rng.uniform(2, 4));
    const auto ring = alternate_field_ring(attempts, n);
    const int s = static_cast<int>(rng.uniform(1, std::min<std::int64_t>(3, static_cast<std::int64_t>(n))));
    const auto inner = random_tuple(ring, rng, s, 2, 3);
    if (!is_regular_sequence(inner).regular) continue;
    std::vector<int> weights;
    for (const auto& g : inner) weights.push_back(*g.degree());
    const auto outer = RingContext::make_indexed(ring->field(), inner.size(), "X", weights);
    std::vector<Polynomial> outers;
    const int r = static_cast<int>(rng.uniform(1, 3));
    for (int i = 0; i < r; ++i) {
      const auto j = static_cast<std::size_t>(rng.uniform(0, s - 1));
      outers.push_back(form(outer, rng, weights[j] * static_cast<int>(rng.uniform(1, 2)), 3));
    }
    const SubalgebraPresentation sp{inner, outers, outer};
    const auto t = pd_transfer(sp);
    ++built;
    if (!t.agree) ++disagreements;
  }
  item.detail = {{"presentations", built}, {"attempts", attempts}, {"disagreements", disagreements}};
  item.pass = built >= 50 && disagreements == 0;
  return item;
}

AcceptanceItem gin_invariance(std::uint64_t seed) {
  AcceptanceItem item{9, "pd and Hilbert function invariant under gin", false, {}};
  Rng rng(derive_seed(seed, 9));
  int stable = 0, unstable = 0, total = 0, pd_mismatch = 0, hf_mismatch = 0;
  while (stable < 50 && total < 100) {
    ++total;
    const auto n = static_cast<std::size_t>(rng.uniform(2, 4));
    const auto ring = ring_qq(n);
    const Ideal ideal(ring, random_tuple(ring, rng, static_cast<int>(rng.uniform(1, 3)), 3, 3));
    const auto check = check_gin_pd_invariance(ideal, derive_seed(seed, 900 + static_cast<std::uint64_t>(total)));
    if (!check.stable) {
      ++unstable;
      continue;
    }
    ++stable;
    if (!check.agree) ++pd_mismatch;
    const int mmax = default_hilbert_mmax(ideal);
    if (!(hilbert_function(ideal, mmax).values == hilbert_function_of_monomials(check.gin.gin, *ring, mmax).values))
      ++hf_mismatch;
  }
  item.detail = {{"ideals", total},        {"stable", stable}, {"unstable", unstable},
                 {"pd_mismatches", pd_mismatch}, {"hf_mismatches", hf_mismatch}};
  item.pass = stable >= 50 && pd_mismatch == 0 && hf_mismatch == 0 && unstable * 20 < total;
  return item;
}

AcceptanceItem hilbert_finiteness() {
  AcceptanceItem item{10, "finitely many Hilbert functions at desk scale", false, {}};
  ExperimentGrid grid;
  grid.field = FieldSpec::prime(3);
  grid.n_min = grid.n_max = 2;
  grid.degrees = {2, 2};
  const auto first = dump(enumerate_hilbert_functions(grid));
  grid.reverse_order = true;
  const auto second = dump(enumerate_hilbert_functions(grid));
  grid.reverse_order = false;
  const auto report = enumerate_hilbert_functions(grid);
  const auto distinct = report["results"]["per_n"][0]["distinct"].get<int>();
  bool principal_two = true;
  Json principal = Json::array();
  for (int n = 1; n <= 3; ++n)
    for (int d = 1; d <= 2; ++d) {
      ExperimentGrid g;
      g.field = FieldSpec::prime(3);
      g.n_min = g.n_max = n;
      g.degrees = {d};
      const auto c = enumerate_hilbert_functions(g)["results"]["per_n"][0]["distinct"].get<int>();
      principal.push_back({n, d, c});
      principal_two = principal_two && c == 2;
    }
  item.detail = {{"distinct_hf_n2_d22", distinct},
                 {"instances", report["results"]["per_n"][0]["instances"]},
                 {"byte_identical", first == second},
                 {"principal_counts", principal}};
  item.pass = distinct > 0 && first == second && principal_two;
  return item;
}

AcceptanceItem chain_rule(std::uint64_t seed) {
  AcceptanceItem item{11, "chain rule for d/dx_i F(g)", false, {}};
  Rng rng(derive_seed(seed, 11));
  int cases = 0, failures = 0;
  for (int k = 0; k < 200; ++k) {
    const auto s = static_cast<std::size_t>(rng.uniform(1, 3));
    const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    const auto outer = ring_qq(s, "X");
    const auto inner = ring_qq(n);
    Polynomial F(outer);
    for (int d = 0; d <= 3; ++d)
      if (rng.coin(1, 2)) F += form(outer, rng, d, 3);
    std::vector<Polynomial> gs;
    for (std::size_t j = 0; j < s; ++j) gs.push_back(form(inner, rng, static_cast<int>(rng.uniform(1, 2)), 3));
    const auto composed = substitute(F, gs, inner);
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
      Polynomial rhs(inner);
      for (std::size_t j = 0; j < s; ++j)
        rhs += substitute(partial_derivative(F, j), gs, inner) * partial_derivative(gs[j], i);
      ok = ok && partial_derivative(composed, i) == rhs;
    }
    ++cases;
    if (!ok) ++failures;
  }
  item.detail = {{"cases", cases}, {"failures", failures}};
  item.pass = cases >= 200 && failures == 0;
  return item;
}

template <class F>
AcceptanceItem guarded(int id, const std::string& name, F&& run) {
  try {
    return run();
  } catch (const std::exception& e) {
    return {id, name, false, {{"error", e.what()}}};
  }
}

Json items_json(const std::vector<AcceptanceItem>& items) {
  Json out = Json::array();
  for (const auto& i : items) out.push_back(to_json(i));
  return out;
}

}  // namespace

Json to_json(const AcceptanceItem& item) {
  return {{"id", item.id}, {"name", item.name}, {"pass", item.pass}, {"detail", item.detail}};
}

std::vector<AcceptanceItem> run_acceptance_items(std::uint64_t seed,
                                                 const std::function<void(const AcceptanceItem&)>& on_item) {
  std::vector<AcceptanceItem> items;
  auto add = [&](AcceptanceItem item) {
    if (on_item) on_item(item);
    items.push_back(std::move(item));
  };
  add(guarded(1, "worked resolution", [] { return worked_resolution(); }));
  add(guarded(2, "syzygy bound", [&] { return syzygy_bound(seed); }));
  add(guarded(3, "principal Hilbert function", [&] { return principal_hilbert(seed); }));
  add(guarded(4, "diagonal nu", [] { return diagonal_nu(); }));
  add(guarded(5, "witness", [] { return cube_witness(); }));
  add(guarded(6, "regular sequence oracles", [&] { return regular_sequence_oracles(seed); }));
  add(guarded(7, "decomposition", [&] { return decomposition(seed); }));
  add(guarded(8, "pd transfer", [&] { return pd_transfer_item(seed); }));
  add(guarded(9, "gin invariance", [&] { return gin_invariance(seed); }));
  add(guarded(10, "Hilbert function finiteness", [] { return hilbert_finiteness(); }));
  add(guarded(11, "chain rule", [&] { return chain_rule(seed); }));
  return items;
}

AcceptanceItem determinism_item(std::uint64_t seed, const std::vector<AcceptanceItem>& first) {
  AcceptanceItem item{12, "deterministic reproduction report", false, {}};
  const auto again = run_acceptance_items(seed);
  const bool same = dump(items_json(first)) == dump(items_json(again));
  item.detail = {{"byte_identical", same}, {"runs", 2}};
  item.pass = same;
  return item;
}

Json reproduce_paper(std::uint64_t seed, const std::function<void(const AcceptanceItem&)>& on_item) {
  auto items = run_acceptance_items(seed, on_item);
  auto last = determinism_item(seed, items);
  if (on_item) on_item(last);
  items.push_back(std::move(last));
  bool all = true;
  for (const auto& i : items) all = all && i.pass;
  return make_report("reproduce-paper", Json::object(), {{"items", items_json(items)}, {"all_pass", all}}, seed);
}

}  // namespace salab
