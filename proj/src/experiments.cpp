#include "salab/experiments.hpp"

#include <climits>
#include <cstdlib>
#include <map>
#include <set>

#include "salab/errors.hpp"
#include "salab/linalg.hpp"
#include "salab/random.hpp"

namespace salab {

namespace {

struct InstanceSpace {
  Ring ring;
  std::vector<std::vector<Monomial>> bases;  // monomial basis per member
  std::size_t digits = 0;
  std::size_t count = 0;
};

InstanceSpace make_space(const ExperimentGrid& grid, int n, std::size_t budget) {
  InstanceSpace s;
  s.ring = RingContext::make_indexed(grid.field, static_cast<std::size_t>(n));
  for (int d : grid.degrees) {
    if (d < 1) throw DomainError("experiment degrees must be positive");
    s.bases.push_back(monomials_of_degree(static_cast<std::size_t>(n), d));
    s.digits += s.bases.back().size();
  }
  if (grid.mode == ExperimentGrid::Mode::sample) {
    s.count = grid.samples;
  } else {
    if (grid.field.is_rationals()) throw DomainError("exhaustive enumeration needs a prime field");
    const double p = static_cast<double>(grid.field.characteristic());
    double total = 1;
    for (std::size_t i = 0; i < s.digits && total <= static_cast<double>(budget); ++i) total *= p;
    if (total > static_cast<double>(budget))
      throw ResourceError("grid at n=" + std::to_string(n) + " exceeds the instance cap of " + std::to_string(grid.cap));
    s.count = static_cast<std::size_t>(total);
  }
  if (s.count > budget) throw ResourceError("grid exceeds the instance cap of " + std::to_string(grid.cap));
  return s;
}

/// Instance i: exhaustive mode decodes i in base p (last coefficient fastest);
/// sample mode draws dense forms from a per-instance stream.
std::vector<Polynomial> instance(const ExperimentGrid& grid, const InstanceSpace& s, int n, std::size_t i) {
  std::vector<Polynomial> out;
  if (grid.mode == ExperimentGrid::Mode::sample) {
    Rng rng(derive_seed(grid.seed, (static_cast<std::uint64_t>(n) << 32) | i));
    for (int d : grid.degrees) {
      RandomFormSpec spec;
      spec.degree = d;
      spec.coeff_bound = grid.coeff_bound;
      spec.allow_zero = true;
      out.push_back(random_form(s.ring, spec, rng));
    }
    return out;
  }
  const std::uint64_t p = grid.field.characteristic();
  std::size_t code = grid.reverse_order ? s.count - 1 - i : i;
  std::vector<long> digits(s.digits);
  for (std::size_t k = s.digits; k-- > 0;) {
    digits[k] = static_cast<long>(code % p);
    code /= p;
  }
  std::size_t pos = 0;
  for (const auto& basis : s.bases) {
    std::vector<Term> terms;
    for (const auto& m : basis) {
      if (digits[pos]) terms.push_back({Coeff(digits[pos]), m});
      ++pos;
    }
    out.push_back(Polynomial::from_terms(s.ring, std::move(terms)));
  }
  return out;
}

Json grid_inputs(const ExperimentGrid& grid) {
  return {{"field", grid.field.name()},
          {"n_min", grid.n_min},
          {"n_max", grid.n_max},
          {"degrees", grid.degrees},
          {"mode", grid.mode == ExperimentGrid::Mode::exhaustive ? "exhaustive" : "sample"},
          {"cap", grid.cap}};
}

std::string span_key(const std::vector<Polynomial>& fs, const std::vector<Monomial>& basis, const FieldSpec& k) {
  DenseMatrix m(k, fs.size(), basis.size());
  for (std::size_t r = 0; r < fs.size(); ++r)
    for (std::size_t c = 0; c < basis.size(); ++c) m(r, c) = fs[r].coefficient(basis[c]);
  row_reduce(m);
  std::string key;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) key += to_string(m(r, c)) + ',';
  return key;
}

}  // namespace

std::size_t worker_count() {
  if (const char* env = std::getenv("SALAB_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

Json enumerate_hilbert_functions(const ExperimentGrid& grid) {
  Json per_n = Json::array();
  std::size_t budget = grid.cap;
  for (int n = grid.n_min; n <= grid.n_max; ++n) {
    const auto space = make_space(grid, n, budget);
    budget -= space.count;
    int max_deg = 0;
    for (int d : grid.degrees) max_deg = std::max(max_deg, d);
    const int mmax = grid.m_max >= 0 ? grid.m_max : 2 * max_deg + n;
    const auto tables = parallel_map(space.count, [&](std::size_t i) {
      const auto hf = hilbert_function(Ideal(space.ring, instance(grid, space, n, i)), mmax);
      std::vector<long long> v;
      for (const auto& [m, value] : hf.values) v.push_back(value);
      return v;
    });
    const std::set<std::vector<long long>> distinct(tables.begin(), tables.end());
    per_n.push_back({{"n", n}, {"m_max", mmax}, {"instances", space.count}, {"distinct", distinct.size()},
                     {"tables", Json(std::vector<std::vector<long long>>(distinct.begin(), distinct.end()))}});
  }
  Json inputs = grid_inputs(grid);
  if (grid.mode == ExperimentGrid::Mode::sample) inputs["samples"] = grid.samples;
  return make_report("enumerate-hf", inputs, {{"per_n", per_n}}, grid.seed);
}

Json explore_threshold(const ExperimentGrid& grid) {
  if (grid.degrees.empty() || std::any_of(grid.degrees.begin(), grid.degrees.end(), [](int d) { return d != 2; }))
    throw DomainError("explore-threshold needs a grid of quadrics");
  Json per_n = Json::array();
  std::size_t budget = grid.cap;
  for (int n = grid.n_min; n <= grid.n_max; ++n) {
    const auto space = make_space(grid, n, budget);
    budget -= space.count;
    const auto& basis = space.bases.front();
    const auto keys = parallel_map(space.count, [&](std::size_t i) {
      return span_key(instance(grid, space, n, i), basis, grid.field);
    });
    std::map<std::string, std::size_t> first;
    for (std::size_t i = 0; i < keys.size(); ++i) first.emplace(keys[i], i);
    std::vector<std::size_t> reps;
    for (const auto& [key, idx] : first) reps.push_back(idx);
    struct Outcome {
      int nu;  // INT_MAX for infinity
      bool regular;
    };
    const auto outcomes = parallel_map(reps.size(), [&](std::size_t k) {
      const auto fs = instance(grid, space, n, reps[k]);
      const Nu nu = nu_tuple(fs).value;
      return Outcome{nu.infinite ? INT_MAX : nu.value, is_regular_sequence(fs).regular};
    });
    std::map<std::string, Outcome> by_key;
    for (std::size_t k = 0; k < reps.size(); ++k) by_key.emplace(keys[reps[k]], outcomes[k]);
    std::map<int, std::pair<long long, long long>> hist;
    for (const auto& key : keys) {
      const auto& o = by_key.at(key);
      auto& cell = hist[o.nu];
      (o.regular ? cell.first : cell.second) += 1;
    }
    Json histogram = Json::array();
    Json max_non_regular = nullptr, min_regular = nullptr;
    for (const auto& [nu, cell] : hist) {
      const Json v = nu == INT_MAX ? Json("inf") : Json(nu);
      histogram.push_back({{"nu", v}, {"regular", cell.first}, {"non_regular", cell.second}});
      if (cell.second > 0) max_non_regular = v;
      if (cell.first > 0 && min_regular.is_null()) min_regular = v;
    }
    per_n.push_back({{"n", n},
                     {"instances", space.count},
                     {"distinct_spans", reps.size()},
                     {"histogram", histogram},
                     {"max_nu_non_regular", max_non_regular},
                     {"min_nu_regular", min_regular}});
  }
  Json inputs = grid_inputs(grid);
  if (grid.mode == ExperimentGrid::Mode::sample) inputs["samples"] = grid.samples;
  return make_report("explore-threshold", inputs, {{"per_n", per_n}}, grid.seed);
}

}  // namespace salab
