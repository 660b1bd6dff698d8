#include "salab/resolution.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

#include "salab/errors.hpp"

namespace salab {

namespace mutation {
namespace {
std::atomic<bool> g_perturb_syzygies{false};
}
void set_syzygy_perturbation(bool enabled) { g_perturb_syzygies = enabled; }
bool syzygy_perturbation() { return g_perturb_syzygies; }
}  // namespace mutation

GradedMatrix::GradedMatrix(Ring ring, std::vector<int> row_degrees, std::vector<int> col_degrees)
    : ring_(std::move(ring)), row_degrees_(std::move(row_degrees)), col_degrees_(std::move(col_degrees)) {
  entries_.assign(row_degrees_.size(), std::vector<Polynomial>(col_degrees_.size(), Polynomial(ring_)));
}

void GradedMatrix::validate() const {
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) {
      const Polynomial& e = entries_[i][j];
      if (e.is_zero()) continue;
      require_same_ring(e.ring(), ring_, "graded matrix");
      const auto h = is_homogeneous(e);
      if (!h.homogeneous || *h.degree != col_degrees_[j] - row_degrees_[i]) {
        throw DomainError("graded matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                          ") violates the grading");
      }
    }
  }
}

bool GradedMatrix::is_zero() const {
  for (const auto& row : entries_) {
    for (const auto& e : row) {
      if (!e.is_zero()) return false;
    }
  }
  return true;
}

void GradedMatrix::remove_row(std::size_t r) {
  entries_.erase(entries_.begin() + static_cast<std::ptrdiff_t>(r));
  row_degrees_.erase(row_degrees_.begin() + static_cast<std::ptrdiff_t>(r));
}

void GradedMatrix::remove_col(std::size_t c) {
  for (auto& row : entries_) row.erase(row.begin() + static_cast<std::ptrdiff_t>(c));
  col_degrees_.erase(col_degrees_.begin() + static_cast<std::ptrdiff_t>(c));
}

GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("graded matrix shape mismatch");
  GradedMatrix r(a.ring_, a.row_degrees_, b.col_degrees_);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) r(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return r;
}

bool operator==(const GradedMatrix& a, const GradedMatrix& b) {
  return a.row_degrees_ == b.row_degrees_ && a.col_degrees_ == b.col_degrees_ && a.entries_ == b.entries_;
}

std::vector<std::size_t> FreeResolution::ranks() const {
  std::vector<std::size_t> r;
  r.push_back(maps.empty() ? 1 : maps.front().rows());
  for (const auto& m : maps) r.push_back(m.cols());
  return r;
}

std::vector<int> BettiTable::totals() const {
  std::vector<int> t;
  for (const auto& [key, count] : graded) {
    const auto step = static_cast<std::size_t>(key.first);
    if (t.size() <= step) t.resize(step + 1, 0);
    t[step] += count;
  }
  return t;
}

int BettiTable::projective_dimension() const {
  int pd = 0;
  for (const auto& [key, count] : graded) {
    if (count > 0) pd = std::max(pd, key.first);
  }
  return pd;
}

namespace {

ModuleVector column_vector(const GradedMatrix& m, std::size_t col, std::size_t offset,
                           const ModuleOrder& order) {
  ModuleVector v;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (const auto& t : m(i, col).terms()) v.push_back({t.coeff, t.mono, i + offset});
  }
  return normalize_vector(std::move(v), order, *m.ring());
}

// Graded order on a free module with the given generator degrees.
ModuleOrder graded_order(MonomialOrder ord, std::vector<int> shifts) {
  ModuleOrder o;
  o.mono = ord;
  o.shifts = std::move(shifts);
  return o;
}

// Submodule generated by the columns of m, as a completed Groebner engine.
ModuleGroebner column_span(const GradedMatrix& m, MonomialOrder ord) {
  ModuleGroebner gb(m.ring(), graded_order(ord, m.row_degrees()), m.rows() == 1);
  for (std::size_t j = 0; j < m.cols(); ++j) gb.add_generator(column_vector(m, j, 0, gb.order()));
  gb.complete();
  return gb;
}

}  // namespace

GradedMatrix syzygies(const GradedMatrix& m, MonomialOrder ord) {
  m.validate();
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  const Ring& ring = m.ring();
  if (c == 0) return GradedMatrix(ring, {}, {});

  // Stack M over the identity and eliminate the target block.
  ModuleOrder elim = graded_order(ord, m.row_degrees());
  elim.shifts.insert(elim.shifts.end(), m.col_degrees().begin(), m.col_degrees().end());
  elim.elim_block = r;
  ModuleGroebner aug(ring, elim, false);
  std::vector<std::size_t> col_order(c);
  for (std::size_t j = 0; j < c; ++j) col_order[j] = j;
  std::stable_sort(col_order.begin(), col_order.end(),
                   [&](std::size_t a, std::size_t b) { return m.col_degrees()[a] < m.col_degrees()[b]; });
  for (std::size_t j : col_order) {
    ModuleVector v = column_vector(m, j, 0, elim);
    v.push_back({Coeff(1), Monomial(ring->num_vars()), r + j});
    aug.add_generator(normalize_vector(std::move(v), elim, *ring));
  }
  aug.complete();

  // Kernel elements, moved to F1 coordinates.
  const ModuleOrder target = graded_order(ord, m.col_degrees());
  std::vector<std::pair<int, ModuleVector>> kernel;
  for (const auto& g : aug.raw_basis()) {
    if (g.front().comp < r) continue;
    ModuleVector k;
    k.reserve(g.size());
    for (const auto& t : g) k.push_back({t.coeff, t.mono, t.comp - r});
    const int deg = target.degree(k.front(), *ring);
    kernel.emplace_back(deg, normalize_vector(std::move(k), target, *ring));
  }
  std::stable_sort(kernel.begin(), kernel.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return target.compare(a.second.front(), b.second.front(), *ring) < 0;
  });

  // Greedy minimal generating set, degree by degree.
  ModuleGroebner selected(ring, target, c == 1);
  std::vector<std::pair<int, ModuleVector>> gens;
  for (auto& [deg, k] : kernel) {
    selected.complete();
    ModuleVector nf = selected.reduce(k);
    if (nf.empty()) continue;
    const Coeff inv = ring->field().inv(nf.front().coeff);
    for (auto& t : nf) t.coeff = ring->field().mul(t.coeff, inv);
    selected.add_generator(nf);
    gens.emplace_back(deg, std::move(nf));
  }
  if (mutation::syzygy_perturbation() && !gens.empty()) gens.pop_back();

  std::vector<int> degs;
  for (const auto& g : gens) degs.push_back(g.first);
  GradedMatrix out(ring, m.col_degrees(), degs);
  for (std::size_t j = 0; j < gens.size(); ++j) {
    for (std::size_t i = 0; i < c; ++i) out(i, j) = component(gens[j].second, i, ring);
  }
  return out;
}

GradedMatrix generator_row(std::span<const Polynomial> fs, const Ring& ring) {
  std::vector<int> degs;
  for (const auto& f : fs) {
    const auto h = is_homogeneous(f);
    if (!h.homogeneous) throw DomainError("inhomogeneous generator: graded resolution refused");
    degs.push_back(h.degree.value_or(0));
  }
  GradedMatrix row(ring, {0}, degs);
  for (std::size_t j = 0; j < fs.size(); ++j) row(0, j) = fs[j];
  return row;
}

FreeResolution resolve(const Ideal& ideal, const ResolveOptions& opts) {
  FreeResolution res{ideal.ring(), {}};
  if (ideal.is_zero()) return res;
  if (!ideal.is_homogeneous()) throw DomainError("inhomogeneous generator: graded resolution refused");
  for (const auto& g : ideal.generators()) {
    if (g.is_constant()) throw DomainError("unit ideal: S/I is zero");
  }
  const std::size_t n = ideal.ring()->num_vars();
  res.maps.push_back(generator_row(ideal.generators(), ideal.ring()));
  if (res.maps.back().cols() > opts.rank_cap) throw ResourceError("resolution rank cap exceeded");
  while (true) {
    GradedMatrix next = syzygies(res.maps.back(), opts.order);
    if (next.cols() == 0) break;
    if (next.cols() > opts.rank_cap) throw ResourceError("resolution rank cap exceeded");
    // Only a non-minimal first map can push the raw length to n + 1.
    if (res.maps.size() >= n + 1) {
      throw std::logic_error("resolution longer than n + 1 steps (Hilbert syzygy bound)");
    }
    res.maps.push_back(std::move(next));
  }
  return res;
}

namespace {

std::optional<std::pair<std::size_t, std::size_t>> find_unit(const GradedMatrix& m) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      const Polynomial& e = m(i, j);
      if (!e.is_zero() && e.is_constant()) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

}  // namespace

MinimalResolution minimalize(FreeResolution res) {
  auto& maps = res.maps;
  for (std::size_t k = 0; k < maps.size(); ++k) {
    while (auto unit = find_unit(maps[k])) {
      const auto [pi, pj] = *unit;
      if (k == 0 && maps[0].rows() == 1) throw DomainError("unit ideal: S/I is zero");
      GradedMatrix& m = maps[k];
      const FieldSpec& field = res.ring->field();
      const Coeff inv = field.inv(m(pi, pj).terms()[0].coeff);
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (c == pj || m(pi, c).is_zero()) continue;
        const Polynomial factor = m(pi, c).scaled(inv);
        for (std::size_t r = 0; r < m.rows(); ++r) {
          if (r == pi || m(r, pj).is_zero()) continue;
          m(r, c) -= m(r, pj) * factor;
        }
      }
      m.remove_row(pi);
      m.remove_col(pj);
      if (k > 0) maps[k - 1].remove_col(pi);
      if (k + 1 < maps.size()) maps[k + 1].remove_row(pj);
    }
  }
  for (std::size_t k = 0; k < maps.size(); ++k) {
    if (maps[k].cols() == 0) {
      maps.erase(maps.begin() + static_cast<std::ptrdiff_t>(k), maps.end());
      break;
    }
  }
  MinimalResolution out{std::move(res), {}};
  out.betti = betti_table(out.resolution);
  return out;
}

BettiTable betti_table(const FreeResolution& res) {
  BettiTable t;
  if (res.maps.empty()) {
    t.graded[{0, 0}] = 1;
    return t;
  }
  for (int d : res.maps.front().row_degrees()) t.graded[{0, d}] += 1;
  for (std::size_t k = 0; k < res.maps.size(); ++k) {
    for (int d : res.maps[k].col_degrees()) t.graded[{static_cast<int>(k + 1), d}] += 1;
  }
  return t;
}

int projective_dimension(const Ideal& ideal, MonomialOrder ord) {
  ResolveOptions opts;
  opts.order = ord;
  const int pd = minimalize(resolve(ideal, opts)).betti.projective_dimension();
  if (pd > static_cast<int>(ideal.ring()->num_vars())) {
    throw std::logic_error("projective dimension exceeds the number of variables (Hilbert syzygy bound)");
  }
  return pd;
}

bool compositions_vanish(const FreeResolution& res) {
  for (std::size_t k = 0; k + 1 < res.maps.size(); ++k) {
    if (!(res.maps[k] * res.maps[k + 1]).is_zero()) return false;
  }
  return true;
}

bool verify_exactness(const FreeResolution& res) {
  if (!compositions_vanish(res)) return false;
  for (std::size_t k = 0; k < res.maps.size(); ++k) {
    const GradedMatrix ker = syzygies(res.maps[k]);
    if (k + 1 == res.maps.size()) {
      if (ker.cols() != 0) return false;
      continue;
    }
    const ModuleGroebner image = column_span(res.maps[k + 1], MonomialOrder::grevlex);
    for (std::size_t j = 0; j < ker.cols(); ++j) {
      if (!image.reduce(column_vector(ker, j, 0, image.order())).empty()) return false;
    }
  }
  return true;
}

bool koszul_check(std::span<const Polynomial> fs) {
  if (fs.size() > 20) throw ResourceError("koszul_check refuses more than 20 forms");
  if (fs.empty()) return true;
  const Ring& ring = fs[0].ring();
  for (const auto& f : fs) {
    require_same_ring(f.ring(), ring, "koszul_check");
    if (f.is_zero()) return false;
    const auto h = is_homogeneous(f);
    if (!h.homogeneous || *h.degree <= 0) {
      throw DomainError("koszul_check needs homogeneous forms of positive degree");
    }
  }
  const GradedMatrix row = generator_row(fs, ring);
  const GradedMatrix syz = syzygies(row);
  const std::size_t r = fs.size();
  std::vector<int> kdegs;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) kdegs.push_back(row.col_degrees()[i] + row.col_degrees()[j]);
  }
  GradedMatrix koszul(ring, row.col_degrees(), kdegs);
  std::size_t col = 0;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j, ++col) {
      koszul(i, col) = fs[j];
      koszul(j, col) = -fs[i];
    }
  }
  const ModuleGroebner trivial = column_span(koszul, MonomialOrder::grevlex);
  for (std::size_t j = 0; j < syz.cols(); ++j) {
    if (!trivial.reduce(column_vector(syz, j, 0, trivial.order())).empty()) return false;
  }
  return true;
}

}  // namespace salab
