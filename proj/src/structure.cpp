#include "salab/structure.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include "salab/errors.hpp"
#include "salab/groebner.hpp"
#include "salab/random.hpp"
#include "salab/resolution.hpp"

namespace salab {

namespace {

Coeff evaluate(const Polynomial& f, const std::vector<Coeff>& point) {
  Coeff acc = 0;
  for (const auto& t : f.terms()) {
    Coeff v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i)
      for (int e = 0; e < t.mono[i]; ++e) v *= point[i];
    acc += v;
  }
  return acc;
}

std::vector<std::vector<std::size_t>> column_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

Ring outer_ring_of(const FieldSpec& field, std::size_t s, std::vector<int> weights = {}) {
  return RingContext::make_indexed(field, s, "X", std::move(weights));
}

}  // namespace

RegularityReport is_regular_sequence(std::span<const Polynomial> fs) {
  RegularityReport rep;
  if (fs.empty()) {
    rep.regular = true;
    return rep;
  }
  const Ring& ring = fs.front().ring();
  for (const auto& f : fs) {
    require_same_ring(ring, f.ring(), "is_regular_sequence");
    if (!is_homogeneous(f).homogeneous) throw DomainError("regular sequence test needs homogeneous forms");
    if (f.is_zero()) {
      rep.reason = "zero member";
      return rep;
    }
    if (f.is_constant()) {
      rep.reason = "unit member";
      return rep;
    }
  }
  const std::size_t n = ring->num_vars();
  rep.codimension = codimension(Ideal(ring, std::vector<Polynomial>(fs.begin(), fs.end())));
  if (fs.size() > n) {
    rep.reason = "more members than variables";
    return rep;
  }
  rep.regular = rep.codimension == static_cast<int>(fs.size());
  if (!rep.regular)
    rep.reason = "codimension " + std::to_string(rep.codimension) + " below " + std::to_string(fs.size());
  return rep;
}

bool jacobian_independent(std::span<const Polynomial> fs) {
  if (fs.empty()) return true;
  const Ring& ring = fs.front().ring();
  if (!ring->field().is_rationals()) throw DomainError("Jacobian criterion requires characteristic 0");
  const std::size_t r = fs.size();
  const std::size_t n = ring->num_vars();
  if (r > n) return false;
  std::vector<std::vector<Polynomial>> jac(r);
  for (std::size_t i = 0; i < r; ++i) {
    require_same_ring(ring, fs[i].ring(), "jacobian_independent");
    for (std::size_t v = 0; v < n; ++v) jac[i].push_back(partial_derivative(fs[i], v));
  }
  Rng rng(derive_seed(0x6a61636f62ULL, r * 131 + n));
  for (std::int64_t range : {10, 1000, 100000}) {
    std::vector<Coeff> point(n);
    for (auto& c : point) c = Coeff(rng.uniform(-range, range));
    DenseMatrix m(ring->field(), r, n);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t v = 0; v < n; ++v) m(i, v) = evaluate(jac[i][v], point);
    if (rank(m) == r) return true;
  }
  for (const auto& cols : column_subsets(n, r)) {
    std::vector<std::vector<Polynomial>> minor(r);
    for (std::size_t i = 0; i < r; ++i)
      for (auto c : cols) minor[i].push_back(jac[i][c]);
    if (!determinant(minor, ring).is_zero()) return true;
  }
  return false;
}

ThresholdFunction ThresholdFunction::constant(int value) { return table({value}); }

ThresholdFunction ThresholdFunction::table(std::vector<int> values) {
  if (values.empty()) throw DomainError("threshold table is empty");
  if (std::any_of(values.begin(), values.end(), [](int v) { return v < 0; }))
    throw DomainError("threshold values must be non-negative");
  ThresholdFunction n;
  n.values_ = std::move(values);
  return n;
}

ThresholdFunction ThresholdFunction::parse(const std::string& text) {
  std::vector<int> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw DomainError("bad threshold value '" + item + "'");
    }
  }
  return table(std::move(values));
}

int ThresholdFunction::operator()(int s) const {
  if (s < 1) return values_.front();
  return values_[std::min<std::size_t>(static_cast<std::size_t>(s - 1), values_.size() - 1)];
}

int ThresholdFunction::max_up_to(int s) const {
  int m = 0;
  for (int t = 1; t <= std::max(1, s); ++t) m = std::max(m, (*this)(t));
  return m;
}

std::string ThresholdFunction::describe() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) out += (i ? "," : "") + std::to_string(values_[i]);
  return out;
}

int decomposition_length_bound(int r, const ThresholdFunction& N) {
  return r * (1 + N.max_up_to(r + r * N(r)));
}

Decomposition decompose_to_high_nu(std::span<const Polynomial> fs, const ThresholdFunction& N) {
  if (fs.empty()) throw DomainError("decomposition of an empty tuple");
  const Ring& ring = fs.front().ring();
  const FieldSpec& field = ring->field();
  std::vector<Polynomial> g(fs.begin(), fs.end());
  Ring current = outer_ring_of(field, g.size());
  std::vector<Polynomial> outers;
  for (std::size_t i = 0; i < g.size(); ++i) outers.push_back(Polynomial::variable(current, i));

  Decomposition out;
  for (;;) {
    const int t = static_cast<int>(g.size());
    const NuReport rep = nu_tuple(g);
    if (rep.value.exceeds(N(t))) {
      out.nu = rep.value;
      break;
    }
    std::vector<Coeff> combo = rep.combination;
    if (combo.empty()) {
      std::vector<std::size_t> idx;
      std::vector<DenseMatrix> grams;
      for (std::size_t i = 0; i < g.size(); ++i)
        if (g[i].degree() == 2) {
          idx.push_back(i);
          grams.push_back(gram_matrix(g[i]));
        }
      auto local = find_low_rank_combination(grams, N(t));
      if (!local) throw DomainError("no rational combination of rank <= " + std::to_string(N(t)) + " found");
      combo.assign(g.size(), Coeff(0));
      for (std::size_t c = 0; c < idx.size(); ++c) combo[idx[c]] = (*local)[c];
    }
    std::size_t pivot = combo.size();
    for (std::size_t j = 0; j < combo.size(); ++j)
      if (combo[j] != 0) pivot = j;
    Polynomial h(ring);
    for (std::size_t j = 0; j < g.size(); ++j)
      if (combo[j] != 0) h += g[j].scaled(combo[j]);

    std::vector<Polynomial> pieces;
    std::vector<Coeff> weights;
    if (!h.is_zero() && !h.is_constant()) {
      if (h.degree() != 2) throw DomainError("decomposition step on a form of degree other than 2");
      for (auto& sq : diagonalize(h)) {
        pieces.push_back(std::move(sq.linear));
        weights.push_back(std::move(sq.weight));
      }
    }

    std::vector<Polynomial> next;
    for (std::size_t j = 0; j < g.size(); ++j)
      if (j != pivot) next.push_back(g[j]);
    const std::size_t kept = next.size();
    next.insert(next.end(), pieces.begin(), pieces.end());
    Ring next_ring = outer_ring_of(field, next.size());

    // X_pivot = (P(Z) - sum_{j != pivot} a_j X_j) / a_pivot with h = P(Z).
    Polynomial expr = h.is_constant() ? Polynomial::constant(next_ring, h.is_zero() ? Coeff(0) : h.terms()[0].coeff)
                                      : Polynomial(next_ring);
    for (std::size_t m = 0; m < pieces.size(); ++m)
      expr += Polynomial::monomial(next_ring, weights[m], Monomial::variable(next.size(), kept + m, 2));
    std::vector<Polynomial> images;
    std::size_t pos = 0;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (j == pivot) {
        images.push_back(Polynomial(next_ring));
        continue;
      }
      images.push_back(Polynomial::variable(next_ring, pos));
      if (combo[j] != 0) expr -= Polynomial::variable(next_ring, pos).scaled(combo[j]);
      ++pos;
    }
    images[pivot] = expr.scaled(field.inv(combo[pivot]));
    for (auto& F : outers) F = substitute(F, images, next_ring);
    g = std::move(next);
    current = next_ring;
    ++out.steps;
  }

  std::vector<int> degrees;
  for (const auto& gi : g) degrees.push_back(gi.degree().value_or(1));
  Ring weighted = outer_ring_of(field, g.size(), degrees);
  for (auto& F : outers) F = change_ring(F, weighted);
  out.presentation = {std::move(g), std::move(outers), weighted};
  return out;
}

bool verify_presentation(std::span<const Polynomial> fs, const SubalgebraPresentation& sp) {
  if (fs.size() != sp.outers.size()) return false;
  if (fs.empty()) return true;
  const Ring& ring = fs.front().ring();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (sp.outers[i].ring()->num_vars() != sp.inner.size()) return false;
    if (!(substitute(sp.outers[i], sp.inner, ring) == fs[i])) return false;
  }
  return true;
}

PdTransfer pd_transfer(const SubalgebraPresentation& sp, MonomialOrder ord) {
  if (sp.inner.empty()) throw DomainError("pd transfer needs a nonempty inner tuple");
  const auto reg = is_regular_sequence(sp.inner);
  if (!reg.regular) throw DomainError("inner tuple is not a regular sequence: " + reg.reason);
  const Ring& ring = sp.inner.front().ring();
  std::vector<Polynomial> pushed;
  for (const auto& F : sp.outers) pushed.push_back(substitute(F, sp.inner, ring));
  auto inner_pd = std::async(std::launch::async, [&] {
    return projective_dimension(Ideal(sp.outer_ring, sp.outers), ord);
  });
  PdTransfer out;
  out.pd_in_S = projective_dimension(Ideal(ring, pushed), ord);
  out.pd_over_inner = inner_pd.get();
  out.agree = out.pd_over_inner == out.pd_in_S;
  return out;
}

}  // namespace salab
