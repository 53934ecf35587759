#include "fiber.hpp"

#include <algorithm>

#include "error.hpp"
#include "modular.hpp"
#include "primes.hpp"

namespace arakx0::fiber {

namespace {

const char* const kNames[5] = {"C20", "C02", "C11", "E", "F"};

Rat from_u(std::uint64_t v) { return Rat(int_from(v)); }

RatMatrix zero_matrix(std::size_t n) { return RatMatrix(n, std::vector<Rat>(n, Rat(0))); }

std::vector<Rat> multiplicity_vector(const FiberModel& f) {
  std::vector<Rat> v;
  for (const auto& c : f.components) v.emplace_back(int_from(c.multiplicity));
  return v;
}

std::vector<Rat> unit_vector(std::size_t n, std::size_t i) {
  std::vector<Rat> v(n, Rat(0));
  v[i] = 1;
  return v;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t rows = m.size(), cols = m[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    Rat inv = 1 / m[r][c];
    for (auto& e : m[r]) e *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat factor = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= factor * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t FiberModel::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < components.size(); ++i)
    if (components[i].name == name) return i;
  fail(ErrorCode::InvalidArgument, "no component named " + name);
}

const Rat& FiberModel::at(const std::string& a, const std::string& b) const {
  return inter[index_of(a)][index_of(b)];
}

Rat intersect(const RatMatrix& inter, const std::vector<Rat>& x, const std::vector<Rat>& y) {
  Rat total = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) total += x[i] * inter[i][j] * y[j];
  }
  return total;
}

std::size_t rank(RatMatrix m) { return row_reduce(m).size(); }

FiberModel edixhoven_fiber(std::uint64_t p) {
  require_prime(p);
  if (p < 7) fail(ErrorCode::InvalidArgument, "the fiber model needs p >= 7");
  const unsigned r = static_cast<unsigned>(p % 12);
  const Rat P = from_u(p);

  // C20^2 = C02^2 = -(p^2 - p + k)/12, with p(p-1) written as k = 0
  long k = 0, shift = 1;
  bool meets_e = false, meets_f = false;
  switch (r) {
    case 1: k = 0, shift = 1; break;
    case 5: k = 4, shift = 5, meets_f = true; break;
    case 7: k = 6, shift = 7, meets_e = true; break;
    case 11: k = 10, shift = 11, meets_e = meets_f = true; break;
    default: fail(ErrorCode::Inconsistent, "prime outside the classes 1, 5, 7, 11 mod 12");
  }
  const Rat self = -(P * P - P + k) / 12;
  const Rat cross = (P - shift) / 12;

  FiberModel f;
  f.p = p;
  const std::int64_t pm = static_cast<std::int64_t>(p);
  const std::int64_t m_e = (r == 1 || r == 5) ? (pm - 1) / 2 : (pm + 1) / 2;
  const std::int64_t m_f = (r == 1 || r == 7) ? (pm - 1) / 3 : (pm + 1) / 3;
  const std::int64_t mult[5] = {1, 1, pm - 1, m_e, m_f};
  for (int i = 0; i < 5; ++i) f.components.push_back({kNames[i], mult[i], 0});

  f.inter = zero_matrix(5);
  auto set = [&f](int i, int j, const Rat& v) {
    f.inter[i][j] = v;
    f.inter[j][i] = v;
  };
  set(0, 0, self);
  set(1, 1, self);
  set(0, 1, cross);
  set(0, 2, cross);
  set(1, 2, cross);
  set(2, 2, Rat(-1));
  set(2, 3, Rat(1));
  set(2, 4, Rat(1));
  set(3, 3, Rat(-2));
  set(4, 4, Rat(-3));
  set(3, 4, Rat(0));
  const Rat e_meet = meets_e ? 1 : 0;
  const Rat f_meet = meets_f ? 1 : 0;
  set(0, 3, e_meet);
  set(1, 3, e_meet);
  set(0, 4, f_meet);
  set(1, 4, f_meet);
  return f;
}

std::vector<Rat> derive_multiplicities(const RatMatrix& inter) {
  const std::size_t n = inter.size();
  RatMatrix m = inter;
  auto pivots = row_reduce(m);
  if (n - pivots.size() != 1)
    fail(ErrorCode::Inconsistent, "intersection matrix kernel has dimension " + std::to_string(n - pivots.size()));
  std::size_t free_col = 0;
  while (std::find(pivots.begin(), pivots.end(), free_col) != pivots.end()) ++free_col;
  std::vector<Rat> v(n, Rat(0));
  v[free_col] = 1;
  for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free_col];
  if (v[0] == 0) fail(ErrorCode::Inconsistent, "kernel vector vanishes on the first component");
  Rat lead = v[0];
  for (auto& e : v) e /= lead;
  return v;
}

std::vector<Rat> canonical_degrees(const FiberModel& f) {
  std::vector<Rat> out;
  for (std::size_t i = 0; i < f.size(); ++i)
    out.push_back(Rat(2 * int_from(f.components[i].arith_genus) - 2) - f.inter[i][i]);
  return out;
}

Rat adjunction_sum(const FiberModel& f) {
  auto k = canonical_degrees(f);
  Rat total = 0;
  for (std::size_t i = 0; i < f.size(); ++i) total += Rat(int_from(f.components[i].multiplicity)) * k[i];
  return total;
}

std::vector<std::size_t> contractible(const FiberModel& f) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f.components[i].arith_genus == 0 && f.inter[i][i] == -1) out.push_back(i);
  return out;
}

BlowDown blow_down(const FiberModel& f, std::size_t x) {
  auto cands = contractible(f);
  if (std::find(cands.begin(), cands.end(), x) == cands.end())
    fail(ErrorCode::InvalidArgument,
         x < f.size() ? f.components[x].name + " is not contractible" : "component index out of range");

  BlowDown out;
  out.model.p = f.p;
  out.pullback.basis.reserve(f.size());
  for (const auto& c : f.components) out.pullback.basis.push_back(c.name);

  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (i != x) keep.push_back(i);

  for (std::size_t i : keep) {
    const Rat& dx = f.inter[i][x];
    if (!is_integer(dx)) fail(ErrorCode::Inconsistent, "non-integral intersection with the contracted curve");
    std::int64_t d = to_i64(dx.get_num());
    Component c = f.components[i];
    c.name += "'";
    c.arith_genus += d * (d - 1) / 2;
    out.model.components.push_back(c);

    std::vector<Rat> row = unit_vector(f.size(), i);
    row[x] = dx;
    out.pullback.targets.push_back(c.name);
    out.pullback.coeffs.push_back(std::move(row));
  }

  out.model.inter = zero_matrix(keep.size());
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b)
      out.model.inter[a][b] = f.inter[keep[a]][keep[b]] + f.inter[keep[a]][x] * f.inter[keep[b]][x];
  return out;
}

MinimalModel minimal_model(const FiberModel& f) {
  MinimalModel out;
  out.model = f;
  out.pullback.basis.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    out.pullback.basis.push_back(f.components[i].name);
    out.pullback.targets.push_back(f.components[i].name);
    out.pullback.coeffs.push_back(unit_vector(f.size(), i));
  }

  for (;;) {
    auto cands = contractible(out.model);
    if (cands.empty()) break;
    std::size_t x = cands.front();
    out.contracted.push_back(out.model.components[x].name);
    BlowDown step = blow_down(out.model, x);

    // pi^* D' = pi^* D + (D.X) pi^* X over the original basis
    RatMatrix composed;
    for (std::size_t i = 0; i < step.pullback.targets.size(); ++i) {
      std::vector<Rat> row(f.size(), Rat(0));
      for (std::size_t j = 0; j < step.pullback.basis.size(); ++j) {
        const Rat& coef = step.pullback.coeffs[i][j];
        if (coef == 0) continue;
        for (std::size_t k = 0; k < f.size(); ++k) row[k] += coef * out.pullback.coeffs[j][k];
      }
      composed.push_back(std::move(row));
    }
    out.pullback.targets = step.pullback.targets;
    out.pullback.coeffs = std::move(composed);
    out.model = std::move(step.model);
  }

  if (out.model.size() != 2)
    fail(ErrorCode::NotStabilized,
         "contractions stopped with " + std::to_string(out.model.size()) + " components instead of 2");

  // images in the minimal model carry a single prime
  for (auto& c : out.model.components) {
    c.name = c.name.substr(0, c.name.find('\'')) + "'";
  }
  for (std::size_t i = 0; i < out.model.size(); ++i) out.pullback.targets[i] = out.model.components[i].name;
  return out;
}

FiberCheck validate(const FiberModel& f) {
  FiberCheck chk;
  const std::size_t n = f.size();
  chk.symmetric = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (f.inter[i][j] != f.inter[j][i]) chk.symmetric = false;

  auto v = multiplicity_vector(f);
  chk.fiber_relation = true;
  for (std::size_t i = 0; i < n; ++i)
    if (intersect(f.inter, v, unit_vector(n, i)) != 0) chk.fiber_relation = false;
  chk.kernel_spanned = chk.fiber_relation && rank(f.inter) == n - 1;

  chk.adjunction_value = adjunction_sum(f);
  chk.expected_adjunction = 2 * modular::genus(f.p) - 2;
  chk.adjunction = chk.adjunction_value == Rat(int_from(chk.expected_adjunction));
  return chk;
}

bool pullbacks_orthogonal(const FiberModel& original, const MinimalModel& m) {
  FiberModel cur = original;
  RatMatrix transforms;  // total transforms of contracted curves over the original basis
  std::vector<std::vector<Rat>> basis_rows;
  for (std::size_t i = 0; i < original.size(); ++i) basis_rows.push_back(unit_vector(original.size(), i));
  for (const auto& name : m.contracted) {
    std::size_t x = cur.index_of(name);
    transforms.push_back(basis_rows[x]);
    BlowDown step = blow_down(cur, x);
    std::vector<std::vector<Rat>> next;
    for (std::size_t i = 0; i < step.pullback.targets.size(); ++i) {
      std::vector<Rat> row(original.size(), Rat(0));
      for (std::size_t j = 0; j < step.pullback.basis.size(); ++j)
        for (std::size_t k = 0; k < original.size(); ++k) row[k] += step.pullback.coeffs[i][j] * basis_rows[j][k];
      next.push_back(std::move(row));
    }
    basis_rows = std::move(next);
    cur = std::move(step.model);
  }
  for (const auto& row : m.pullback.coeffs)
    for (const auto& t : transforms)
      if (intersect(original.inter, row, t) != 0) return false;
  return true;
}

std::vector<Rat> expected_pullback_c20(std::uint64_t p) {
  require_prime(p);
  const unsigned r = static_cast<unsigned>(p % 12);
  const Rat P = from_u(p);
  Rat e = (r == 1 || r == 5) ? Rat((P - 1) / 4) : Rat((P + 1) / 4);
  Rat f = (r == 1 || r == 7) ? Rat((P - 1) / 6) : Rat((P + 1) / 6);
  return {Rat(1), Rat(0), (P - 1) / 2, e, f};
}

}  // namespace arakx0::fiber
