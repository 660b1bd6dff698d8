#include "salab/strength.hpp"

#include <algorithm>
#include <map>

#include "salab/errors.hpp"
#include "salab/groebner.hpp"

namespace salab {

namespace {

void require_quadric(const Polynomial& f) {
  if (f.is_zero()) return;
  const auto h = is_homogeneous(f);
  if (!h.homogeneous || h.degree != 2 || !f.ring()->standard_grading())
    throw DomainError("expected a quadratic form");
}

DenseMatrix combine(std::span<const DenseMatrix> grams, std::span<const Coeff> alpha) {
  const FieldSpec& k = grams.front().field();
  const std::size_t n = grams.front().rows();
  DenseMatrix out(k, n, n);
  for (std::size_t l = 0; l < grams.size(); ++l) {
    if (alpha[l] == 0) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out(i, j) = k.add(out(i, j), k.mul(alpha[l], grams[l](i, j)));
  }
  return out;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
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

/// Linearly independent subset spanning the same space as `polys` (all of one degree).
std::vector<Polynomial> linear_basis(const std::vector<Polynomial>& polys, const Ring& ring) {
  std::map<std::vector<int>, std::size_t> index;
  std::vector<Monomial> monos;
  for (const auto& f : polys)
    for (const auto& t : f.terms()) {
      std::vector<int> key(t.mono.exponents().begin(), t.mono.exponents().end());
      if (index.emplace(key, monos.size()).second) monos.push_back(t.mono);
    }
  if (monos.empty()) return {};
  DenseMatrix m(ring->field(), polys.size(), monos.size());
  for (std::size_t r = 0; r < polys.size(); ++r)
    for (const auto& t : polys[r].terms()) {
      std::vector<int> key(t.mono.exponents().begin(), t.mono.exponents().end());
      m(r, index.at(key)) = t.coeff;
    }
  const auto pivots = row_reduce(m);
  std::vector<Polynomial> out;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    std::vector<Term> terms;
    for (std::size_t c = 0; c < monos.size(); ++c)
      if (m(r, c) != 0) terms.push_back({m(r, c), monos[c]});
    out.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  return out;
}

/// True when the homogeneous ideal has a nonzero point (affine dimension >= 1).
bool has_nonzero_point(const Ideal& ideal) {
  if (ideal.is_zero()) return ideal.ring()->num_vars() > 0;
  const auto gb = buchberger(ideal, MonomialOrder::grevlex);
  for (const auto& g : gb.basis)
    if (g.is_constant()) return false;
  return krull_dimension_of_monomials(leading_monomials(gb), ideal.ring()->num_vars()) >= 1;
}

std::vector<Coeff> unit_vector(std::size_t n, std::size_t i) {
  std::vector<Coeff> v(n, Coeff(0));
  v[i] = 1;
  return v;
}

}  // namespace

std::string to_string(const Nu& nu) { return nu.infinite ? "inf" : std::to_string(nu.value); }

DenseMatrix gram_matrix(const Polynomial& f) {
  require_quadric(f);
  const FieldSpec& k = f.field();
  const std::size_t n = f.ring()->num_vars();
  DenseMatrix g(k, n, n);
  const Coeff half = k.inv(k.from_int(2));
  for (const auto& t : f.terms()) {
    const auto s = t.mono.support();
    if (s.size() == 1) {
      g(s[0], s[0]) = t.coeff;
    } else {
      const Coeff c = k.mul(t.coeff, half);
      g(s[0], s[1]) = c;
      g(s[1], s[0]) = c;
    }
  }
  return g;
}

Polynomial quadric_from_gram(const DenseMatrix& gram, const Ring& ring) {
  if (gram.rows() != ring->num_vars() || gram.cols() != ring->num_vars() || !gram.is_symmetric())
    throw DomainError("Gram matrix must be symmetric of size n");
  const FieldSpec& k = ring->field();
  const std::size_t n = ring->num_vars();
  std::vector<Term> terms;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (gram(i, j) == 0) continue;
      const Coeff c = i == j ? gram(i, j) : k.mul(k.from_int(2), gram(i, j));
      terms.push_back({c, Monomial::variable(n, i) * Monomial::variable(n, j)});
    }
  return Polynomial::from_terms(ring, std::move(terms));
}

std::vector<WeightedSquare> diagonalize(const Polynomial& quadric) {
  DenseMatrix a = gram_matrix(quadric);
  const FieldSpec& k = a.field();
  const Ring& ring = quadric.ring();
  const std::size_t n = a.rows();
  std::vector<WeightedSquare> out;
  auto subtract_outer = [&](const std::vector<Coeff>& u, const std::vector<Coeff>& v, const Coeff& s) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = k.sub(a(i, j), k.mul(s, k.mul(u[i], v[j])));
  };
  auto row = [&](std::size_t i) {
    std::vector<Coeff> r(n);
    for (std::size_t j = 0; j < n; ++j) r[j] = a(i, j);
    return r;
  };
  auto to_form = [&](const std::vector<Coeff>& r) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < n; ++j)
      if (r[j] != 0) terms.push_back({r[j], Monomial::variable(n, j)});
    return Polynomial::from_terms(ring, std::move(terms));
  };
  while (!a.is_zero()) {
    std::optional<std::size_t> diag;
    for (std::size_t i = 0; i < n && !diag; ++i)
      if (a(i, i) != 0) diag = i;
    if (diag) {
      const auto r = row(*diag);
      const Coeff w = k.inv(a(*diag, *diag));
      out.push_back({w, to_form(r)});
      subtract_outer(r, r, w);
      continue;
    }
    std::size_t pi = 0, pj = 0;
    for (std::size_t i = 0; i < n && pi == pj; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (a(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    const auto u = row(pi);
    const auto v = row(pj);
    const Coeff c = a(pi, pj);
    const Coeff w = k.inv(k.mul(k.from_int(2), c));
    std::vector<Coeff> plus(n), minus(n);
    for (std::size_t j = 0; j < n; ++j) {
      plus[j] = k.add(u[j], v[j]);
      minus[j] = k.sub(u[j], v[j]);
    }
    out.push_back({w, to_form(plus)});
    out.push_back({k.neg(w), to_form(minus)});
    const Coeff s = k.inv(c);
    subtract_outer(u, v, s);
    subtract_outer(v, u, s);
  }
  return out;
}

NuReport nu_quadric(const Polynomial& f) {
  const auto squares = diagonalize(f);
  NuReport rep;
  rep.value = Nu::finite(static_cast<int>(squares.size()));
  rep.degree_class = 2;
  rep.combination = {Coeff(1)};
  if (squares.empty()) return rep;
  const std::size_t s = squares.size();
  auto outer_ring = RingContext::make_indexed(f.field(), s, "X");
  std::vector<Term> terms;
  DecompositionWitness w{Polynomial(outer_ring), {}};
  for (std::size_t i = 0; i < s; ++i) {
    terms.push_back({squares[i].weight, Monomial::variable(s, i, 2)});
    w.inner.push_back(squares[i].linear);
  }
  w.outer = Polynomial::from_terms(outer_ring, std::move(terms));
  rep.witness = std::move(w);
  return rep;
}

int strength_quadric(const Polynomial& f) {
  const int r = static_cast<int>(rank(gram_matrix(f)));
  return std::max(0, (r + 1) / 2 - 1);
}

bool verify_witness(const Polynomial& f, const DecompositionWitness& w) {
  const auto d = f.degree();
  for (const auto& g : w.inner) {
    if (!same_ring(g.ring(), f.ring())) return false;
    const auto e = g.degree();
    if (d && e && *e >= *d) return false;
  }
  if (w.outer.ring()->num_vars() != w.inner.size()) return false;
  return substitute(w.outer, w.inner, f.ring()) == f;
}

VariableBound nu_variable_bound(const Polynomial& f) {
  const auto d = f.degree();
  if (!d || *d < 2) throw DomainError("variable bound needs degree at least 2");
  const std::size_t n = f.ring()->num_vars();
  std::vector<bool> used(n, false);
  for (const auto& t : f.terms())
    for (auto i : t.mono.support()) used[i] = true;
  std::vector<std::size_t> vars;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    if (used[i]) {
      vars.push_back(i);
      names.push_back(f.ring()->var_names()[i]);
    }
  auto outer_ring = RingContext::make(f.field(), names);
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    std::vector<int> e;
    for (auto i : vars) e.push_back(t.mono[i]);
    terms.push_back({t.coeff, Monomial(std::move(e))});
  }
  VariableBound out{static_cast<int>(vars.size()),
                    {Polynomial::from_terms(outer_ring, std::move(terms)), {}}};
  for (auto i : vars) out.witness.inner.push_back(Polynomial::variable(f.ring(), i));
  return out;
}

PencilMinimum min_pencil_rank_enumerate(std::span<const DenseMatrix> grams, std::size_t cap) {
  if (grams.empty()) throw DomainError("empty pencil");
  const FieldSpec& k = grams.front().field();
  if (k.is_rationals()) throw DomainError("enumeration needs a finite field");
  const std::uint64_t p = k.characteristic();
  const std::size_t r = grams.size();
  double total = 1;
  for (std::size_t i = 0; i < r; ++i) total *= static_cast<double>(p);
  if (total > static_cast<double>(cap) * static_cast<double>(p - 1) + static_cast<double>(p))
    throw ResourceError("pencil enumeration exceeds cap of " + std::to_string(cap) + " points");
  PencilMinimum best;
  best.rank = -1;
  std::vector<std::uint64_t> digits(r, 0);
  for (;;) {
    std::size_t i = r;
    while (i > 0 && digits[i - 1] == p - 1) digits[--i] = 0;
    if (i == 0) break;
    ++digits[i - 1];
    auto first = std::find_if(digits.begin(), digits.end(), [](auto d) { return d != 0; });
    if (*first != 1) continue;
    std::vector<Coeff> alpha(r);
    for (std::size_t j = 0; j < r; ++j) alpha[j] = static_cast<unsigned long>(digits[j]);
    const int rk = static_cast<int>(rank(combine(grams, alpha)));
    if (best.rank < 0 || rk < best.rank) {
      best.rank = rk;
      best.combination = alpha;
      if (rk == 0) break;
    }
  }
  return best;
}

int min_pencil_rank_symbolic(std::span<const DenseMatrix> grams) {
  if (grams.empty()) throw DomainError("empty pencil");
  const FieldSpec& k = grams.front().field();
  const std::size_t r = grams.size();
  const std::size_t n = grams.front().rows();
  auto ring = RingContext::make_indexed(k, r, "a");
  std::vector<std::vector<Polynomial>> pencil(n, std::vector<Polynomial>(n, Polynomial(ring)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < r; ++l)
        if (grams[l](i, j) != 0)
          pencil[i][j] += Polynomial::monomial(ring, grams[l](i, j), Monomial::variable(r, l));
  std::vector<Polynomial> field_eqs;
  if (!k.is_rationals()) {
    const int p = static_cast<int>(k.characteristic());
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i + 1; j < r; ++j)
        field_eqs.push_back(
            Polynomial::monomial(ring, 1, Monomial::variable(r, i, p) * Monomial::variable(r, j)) -
            Polynomial::monomial(ring, 1, Monomial::variable(r, i) * Monomial::variable(r, j, p)));
  }
  for (std::size_t size = 1; size <= n; ++size) {
    const auto subs = subsets(n, size);
    std::vector<Polynomial> minors;
    for (std::size_t a = 0; a < subs.size(); ++a)
      for (std::size_t b = a; b < subs.size(); ++b) {
        std::vector<std::vector<Polynomial>> m(size, std::vector<Polynomial>(size, Polynomial(ring)));
        for (std::size_t i = 0; i < size; ++i)
          for (std::size_t j = 0; j < size; ++j) m[i][j] = pencil[subs[a][i]][subs[b][j]];
        auto d = determinant(m, ring);
        if (!d.is_zero()) minors.push_back(std::move(d));
      }
    auto gens = linear_basis(minors, ring);
    gens.insert(gens.end(), field_eqs.begin(), field_eqs.end());
    if (has_nonzero_point(Ideal(ring, gens))) return static_cast<int>(size) - 1;
  }
  return static_cast<int>(n);
}

std::optional<std::vector<Coeff>> find_low_rank_combination(std::span<const DenseMatrix> grams, int max_rank,
                                                            int max_height) {
  if (grams.empty()) return std::nullopt;
  const std::size_t r = grams.size();
  for (int h = 1; h <= max_height; ++h) {
    std::vector<int> v(r, -h);
    for (;;) {
      auto first = std::find_if(v.begin(), v.end(), [](int x) { return x != 0; });
      const bool top = std::any_of(v.begin(), v.end(), [h](int x) { return x == h || x == -h; });
      if (first != v.end() && *first > 0 && top) {
        std::vector<Coeff> alpha(r);
        for (std::size_t j = 0; j < r; ++j) alpha[j] = grams.front().field().from_int(v[j]);
        if (std::any_of(alpha.begin(), alpha.end(), [](const Coeff& c) { return c != 0; }) &&
            static_cast<int>(rank(combine(grams, alpha))) <= max_rank)
          return alpha;
      }
      std::size_t i = r;
      while (i > 0 && v[i - 1] == h) v[--i] = -h;
      if (i == 0) break;
      ++v[i - 1];
    }
  }
  return std::nullopt;
}

NuReport nu_tuple(std::span<const Polynomial> fs) {
  NuReport best;
  best.value = Nu::infinity();
  if (fs.empty()) return best;
  const Ring& ring = fs.front().ring();
  const std::size_t m = fs.size();
  std::map<int, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < m; ++i) {
    require_same_ring(ring, fs[i].ring(), "nu_tuple");
    const auto h = is_homogeneous(fs[i]);
    if (!h.homogeneous) throw DomainError("nu of a tuple requires homogeneous forms");
    if (!h.degree || *h.degree == 0) {
      best.value = Nu::finite(0);
      best.degree_class = h.degree.value_or(0);
      best.combination = unit_vector(m, i);
      return best;
    }
    if (*h.degree > 2 || !ring->standard_grading()) throw DomainError("nu of a tuple is implemented for degree <= 2");
    classes[*h.degree].push_back(i);
  }
  auto consider = [&](Nu v, int cls, std::vector<Coeff> combo) {
    if (v < best.value) {
      best.value = v;
      best.degree_class = cls;
      best.combination = std::move(combo);
    }
  };
  if (auto it = classes.find(1); it != classes.end()) {
    const auto& idx = it->second;
    const std::size_t n = ring->num_vars();
    DenseMatrix coeffs(ring->field(), n, idx.size());
    for (std::size_t c = 0; c < idx.size(); ++c)
      for (const auto& t : fs[idx[c]].terms()) coeffs(t.mono.support()[0], c) = t.coeff;
    const auto ns = null_space(coeffs);
    if (!ns.empty()) {
      std::vector<Coeff> combo(m, Coeff(0));
      for (std::size_t c = 0; c < idx.size(); ++c) combo[idx[c]] = ns.front()[c];
      consider(Nu::finite(0), 1, std::move(combo));
    }
  }
  if (auto it = classes.find(2); it != classes.end() && best.value.exceeds(0)) {
    const auto& idx = it->second;
    std::vector<DenseMatrix> grams;
    for (auto i : idx) grams.push_back(gram_matrix(fs[i]));
    std::vector<Coeff> local;
    int k;
    if (!ring->field().is_rationals()) {
      auto pm = min_pencil_rank_enumerate(grams);
      k = pm.rank;
      local = std::move(pm.combination);
    } else {
      k = min_pencil_rank_symbolic(grams);
      if (k == 0) {
        const std::size_t n = ring->num_vars();
        DenseMatrix flat(ring->field(), n * n, grams.size());
        for (std::size_t l = 0; l < grams.size(); ++l)
          for (std::size_t i = 0; i < n * n; ++i) flat(i, l) = grams[l](i / n, i % n);
        local = null_space(flat).front();
      } else if (auto c = find_low_rank_combination(grams, k)) {
        local = std::move(*c);
      }
    }
    std::vector<Coeff> combo;
    if (!local.empty()) {
      combo.assign(m, Coeff(0));
      for (std::size_t c = 0; c < idx.size(); ++c) combo[idx[c]] = local[c];
    }
    consider(Nu::finite(k), 2, std::move(combo));
  }
  return best;
}

}  // namespace salab
