#include "salab/module_gb.hpp"

#include <algorithm>

#include "salab/errors.hpp"

namespace salab {

int ModuleOrder::degree(const VTerm& t, const RingContext& ring) const {
  const int d = ring.degree(t.mono);
  return shifts.empty() ? d : d + shifts[t.comp];
}

int ModuleOrder::compare(const VTerm& a, const VTerm& b, const RingContext& ring) const {
  if (elim_block > 0) {
    const bool la = a.comp >= elim_block;
    const bool lb = b.comp >= elim_block;
    if (la != lb) return la ? -1 : 1;
  }
  if (!shifts.empty()) {
    const int da = degree(a, ring);
    const int db = degree(b, ring);
    if (da != db) return da > db ? 1 : -1;
  }
  const int c = salab::compare(a.mono, b.mono, mono);
  if (c != 0) return c;
  if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
  return 0;
}

ModuleVector normalize_vector(ModuleVector v, const ModuleOrder& order, const RingContext& ring) {
  const FieldSpec& field = ring.field();
  for (auto& t : v) t.coeff = field.normalize(t.coeff);
  std::sort(v.begin(), v.end(),
            [&](const VTerm& a, const VTerm& b) { return order.compare(a, b, ring) > 0; });
  ModuleVector out;
  out.reserve(v.size());
  for (auto& t : v) {
    if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
      out.back().coeff = field.add(out.back().coeff, t.coeff);
    } else {
      if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
  return out;
}

ModuleVector to_vector(const Polynomial& f, std::size_t comp, const ModuleOrder& order) {
  ModuleVector v;
  v.reserve(f.size());
  for (const auto& t : f.terms()) v.push_back({t.coeff, t.mono, comp});
  if (order.mono != MonomialOrder::grevlex) {
    std::sort(v.begin(), v.end(), [&](const VTerm& a, const VTerm& b) {
      return salab::compare(a.mono, b.mono, order.mono) > 0;
    });
  }
  return v;
}

Polynomial component(const ModuleVector& v, std::size_t comp, const Ring& ring) {
  std::vector<Term> terms;
  for (const auto& t : v) {
    if (t.comp == comp) terms.push_back({t.coeff, t.mono});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

ModuleVector sub_multiple(const ModuleVector& f, std::size_t f_start, const Coeff& c,
                          const Monomial& m, const ModuleVector& g, const ModuleOrder& order,
                          const RingContext& ring) {
  const FieldSpec& field = ring.field();
  ModuleVector out;
  out.reserve(f.size() - f_start + g.size());
  std::size_t i = f_start, j = 0;
  // Shifted terms of g are built lazily.
  VTerm gj;
  bool have_gj = false;
  auto load_g = [&]() {
    if (!have_gj && j < g.size()) {
      gj.coeff = field.mul(c, g[j].coeff);
      gj.mono = g[j].mono * m;
      gj.comp = g[j].comp;
      have_gj = true;
    }
  };
  while (i < f.size() || j < g.size()) {
    load_g();
    int cmp;
    if (i == f.size()) {
      cmp = -1;
    } else if (j == g.size()) {
      cmp = 1;
    } else {
      cmp = order.compare(f[i], gj, ring);
    }
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back({field.neg(gj.coeff), std::move(gj.mono), gj.comp});
      have_gj = false;
      ++j;
    } else {
      Coeff s = field.sub(f[i].coeff, gj.coeff);
      if (sgn(s) != 0) out.push_back({std::move(s), f[i].mono, f[i].comp});
      have_gj = false;
      ++i;
      ++j;
    }
  }
  return out;
}

ModuleGroebner::ModuleGroebner(Ring ring, ModuleOrder order, bool rank_one, std::size_t max_basis)
    : ring_(std::move(ring)), order_(std::move(order)), max_basis_(max_basis), rank_one_(rank_one) {}

bool ModuleGroebner::is_pending(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  return pending_.count({i, j}) > 0;
}

void ModuleGroebner::add_generator(ModuleVector v) {
  if (v.empty()) return;
  insert(std::move(v));
}

void ModuleGroebner::insert(ModuleVector v) {
  const FieldSpec& field = ring_->field();
  const Coeff inv = field.inv(v.front().coeff);
  for (auto& t : v) t.coeff = field.mul(t.coeff, inv);
  if (basis_.size() >= max_basis_) {
    throw ResourceError("Groebner basis exceeded " + std::to_string(max_basis_) + " elements");
  }
  const std::size_t k = basis_.size();
  basis_.push_back(std::move(v));
  const VTerm& lk = basis_[k].front();
  for (std::size_t i = 0; i < k; ++i) {
    const VTerm& li = basis_[i].front();
    if (li.comp != lk.comp) continue;
    if (rank_one_ && coprime(li.mono, lk.mono)) continue;
    const Monomial l = lcm(li.mono, lk.mono);
    VTerm probe{Coeff(1), l, lk.comp};
    queue_.insert({order_.degree(probe, *ring_), i, k});
    pending_.insert({i, k});
  }
}

bool ModuleGroebner::chain_criterion(std::size_t i, std::size_t j, const Monomial& l) const {
  const std::size_t comp = basis_[i].front().comp;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (k == i || k == j) continue;
    const VTerm& lk = basis_[k].front();
    if (lk.comp != comp || !lk.mono.divides(l)) continue;
    if (!is_pending(i, k) && !is_pending(j, k)) return true;
  }
  return false;
}

ModuleVector ModuleGroebner::s_vector(std::size_t i, std::size_t j) const {
  const VTerm& li = basis_[i].front();
  const VTerm& lj = basis_[j].front();
  const Monomial l = lcm(li.mono, lj.mono);
  ModuleVector a;
  const Monomial mi = quotient(l, li.mono);
  a.reserve(basis_[i].size());
  for (const auto& t : basis_[i]) a.push_back({t.coeff, t.mono * mi, t.comp});
  return sub_multiple(a, 0, Coeff(1), quotient(l, lj.mono), basis_[j], order_, *ring_);
}

void ModuleGroebner::complete() {
  while (!queue_.empty()) {
    const PairKey key = *queue_.begin();
    queue_.erase(queue_.begin());
    pending_.erase({key.i, key.j});
    const Monomial l = lcm(basis_[key.i].front().mono, basis_[key.j].front().mono);
    if (chain_criterion(key.i, key.j, l)) continue;
    ++reductions_;
    ModuleVector h = reduce(s_vector(key.i, key.j));
    if (!h.empty()) insert(std::move(h));
  }
}

ModuleVector reduce_vector(ModuleVector p, std::span<const ModuleVector> divisors,
                           const ModuleOrder& order, const RingContext& ring) {
  const FieldSpec& field = ring.field();
  ModuleVector rem;
  std::size_t pos = 0;
  while (pos < p.size()) {
    const VTerm& lt = p[pos];
    const ModuleVector* divisor = nullptr;
    for (const auto& g : divisors) {
      if (g.empty()) continue;
      const VTerm& lg = g.front();
      if (lg.comp == lt.comp && lg.mono.divides(lt.mono)) {
        divisor = &g;
        break;
      }
    }
    if (divisor == nullptr) {
      rem.push_back(lt);
      ++pos;
      continue;
    }
    const VTerm& lg = divisor->front();
    const Coeff c = field.div(lt.coeff, lg.coeff);
    const Monomial m = quotient(lt.mono, lg.mono);
    p = sub_multiple(p, pos, c, m, *divisor, order, ring);
    pos = 0;
  }
  return rem;
}

ModuleVector ModuleGroebner::reduce(ModuleVector p) const {
  return reduce_vector(std::move(p), basis_, order_, *ring_);
}

std::vector<ModuleVector> ModuleGroebner::reduced_basis() const {
  const FieldSpec& field = ring_->field();
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const VTerm& li = basis_[i].front();
    bool redundant = false;
    for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
      if (i == j) continue;
      const VTerm& lj = basis_[j].front();
      if (lj.comp != li.comp || !lj.mono.divides(li.mono)) continue;
      // Equal leads: keep the earliest.
      redundant = !(lj.mono == li.mono) || j < i;
    }
    if (!redundant) keep.push_back(i);
  }
  std::vector<ModuleVector> out;
  std::vector<ModuleVector> others;
  for (std::size_t i : keep) {
    others.clear();
    for (std::size_t j : keep) {
      if (j != i) others.push_back(basis_[j]);
    }
    ModuleVector tail(basis_[i].begin() + 1, basis_[i].end());
    ModuleVector red = reduce_vector(std::move(tail), others, order_, *ring_);
    ModuleVector g;
    g.reserve(red.size() + 1);
    g.push_back(basis_[i].front());
    for (auto& t : red) g.push_back(std::move(t));
    const Coeff inv = field.inv(g.front().coeff);
    for (auto& t : g) t.coeff = field.mul(t.coeff, inv);
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end(), [&](const ModuleVector& a, const ModuleVector& b) {
    return order_.compare(a.front(), b.front(), *ring_) < 0;
  });
  return out;
}

}  // namespace salab
