#include "quadforms.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>

#include "error.hpp"
#include "primes.hpp"
#include "special.hpp"

namespace arakx0::qf {

using num::kPi;

namespace {

using Triple = std::array<Int, 3>;

Triple key_of(const QuadForm& f) { return {f.a, f.b, f.c}; }

Int isqrt(const Int& n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_square(const Int& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

Int gcd3(const Int& a, const Int& b, const Int& c) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

Int fdiv_r(const Int& v, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return r;
}

// The w = v mod m with lo < w <= lo + m.
Int into_window(const Int& v, const Int& m, const Int& lo) { return lo + 1 + fdiv_r(v - lo - 1, m); }

double int_log(const Int& v) {
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * num::kLn2;
}

UnimodularMatrix translation(const Int& k) { return {1, k, 0, 1}; }
const UnimodularMatrix kS{0, -1, 1, 0};

void require_unimodular(const UnimodularMatrix& m) {
  if (m.det() != 1) fail(ErrorCode::InvalidArgument, "matrix is not unimodular");
}

// A form together with the accumulated change of variables: form = start o g.
struct Tracked {
  QuadForm form;
  UnimodularMatrix g;

  void apply(const UnimodularMatrix& m) {
    form = transform(form, m);
    g = g * m;
  }
};

// Shift b into (-|a|, |a|].
void normalize_b(Tracked& t) {
  Int abs_a = abs(t.form.a);
  Int target = into_window(t.form.b, 2 * abs_a, -abs_a);
  Int k = (target - t.form.b) / (2 * t.form.a);
  if (k != 0) t.apply(translation(k));
}

bool definite_reduced(const QuadForm& f) {
  if (!(abs(f.b) <= f.a && f.a <= f.c)) return false;
  if ((abs(f.b) == f.a || f.a == f.c) && f.b < 0) return false;
  return true;
}

void reduce_definite(Tracked& t) {
  for (int guard = 0; guard < 100000; ++guard) {
    normalize_b(t);
    if (t.form.c < t.form.a || (t.form.c == t.form.a && t.form.b < 0)) {
      t.apply(kS);
      continue;
    }
    if (definite_reduced(t.form)) return;
  }
  fail(ErrorCode::Inconsistent, "definite reduction did not terminate");
}

bool indefinite_reduced(const QuadForm& f, const Int& s) {
  if (!(f.b >= 1 && f.b <= s)) return false;
  Int two_a = 2 * abs(f.a);
  return two_a >= s + 1 - f.b && two_a <= s + f.b;
}

// One step [a,b,c] -> [c, b', (b'^2 - D)/(4c)] by [[0,-1],[1,k]].
void rho(Tracked& t, const Int& D, const Int& s) {
  const Int& c = t.form.c;
  Int abs_c = abs(c);
  Int lo = c * c > D ? Int(-abs_c) : Int(s - 2 * abs_c);
  Int b_new = into_window(-t.form.b, 2 * abs_c, lo);
  Int k = (b_new + t.form.b) / (2 * c);
  t.apply(UnimodularMatrix{0, -1, 1, k});
}

void reduce_indefinite(Tracked& t, const Int& D, const Int& s) {
  for (int guard = 0; guard < 100000; ++guard) {
    if (indefinite_reduced(t.form, s)) return;
    rho(t, D, s);
  }
  fail(ErrorCode::Inconsistent, "indefinite reduction did not terminate");
}

void require_valid_disc(const Int& D) {
  if (D == 0 || is_square(D))
    fail(ErrorCode::Domain, "discriminant " + D.get_str() + " is zero or a perfect square");
}

// Generator of SL_2(Z)_Phi modulo -I, definite case.
UnimodularMatrix definite_generator(const QuadForm& phi) {
  Int f = phi.content();
  Int D = phi.disc() / (f * f);
  QuadForm prim{phi.a / f, phi.b / f, phi.c / f, std::nullopt};
  Int x;
  if (D == -3)
    x = 1;
  else if (D == -4)
    x = 0;
  else
    return UnimodularMatrix::identity();
  return {(x - prim.b) / 2, -prim.c, prim.a, (x + prim.b) / 2};
}

int full_stab_order(const QuadForm& phi) {
  Int f = phi.content();
  Int D = phi.disc() / (f * f);
  if (D == -3) return 6;
  if (D == -4) return 4;
  return 2;
}

// ---- P^1(Z/p^2) ----------------------------------------------------------

__extension__ typedef __int128 i128;

struct ProjectiveLine {
  std::int64_t p;
  std::int64_t N;

  std::int64_t size() const { return N + p; }

  std::int64_t mod(const Int& v) const {
    Int r = fdiv_r(v, Int(std::to_string(N)));
    return r.get_si();
  }

  std::int64_t mulmod(std::int64_t a, std::int64_t b) const {
    return static_cast<std::int64_t>(static_cast<i128>(a) * b % N);
  }

  std::int64_t inverse(std::int64_t a) const {
    Int r;
    Int aa(std::to_string(a)), nn(std::to_string(N));
    if (mpz_invert(r.get_mpz_t(), aa.get_mpz_t(), nn.get_mpz_t()) == 0)
      fail(ErrorCode::Inconsistent, "non-invertible residue");
    return r.get_si();
  }

  // (1 : z) -> z,  (x : 1) with p | x -> N + x/p
  std::int64_t index(std::int64_t x, std::int64_t z) const {
    if (x % p != 0) return mulmod(z, inverse(x));
    if (z % p == 0) fail(ErrorCode::Inconsistent, "not a point of P^1(Z/N)");
    return N + mulmod(x, inverse(z)) / p;
  }

  UnimodularMatrix lift(std::int64_t idx) const {
    if (idx < N) return {1, 0, Int(std::to_string(idx)), 1};
    return {Int(std::to_string((idx - N) * p)), -1, 1, 0};
  }

  std::int64_t act(const UnimodularMatrix& m, std::int64_t idx) const {
    UnimodularMatrix r = lift(idx);
    return index(mod(m.x * r.x + m.y * r.z), mod(m.z * r.x + m.t * r.z));
  }
};

ProjectiveLine line_for(std::uint64_t p) {
  if (p > 3037000499ULL) fail(ErrorCode::InvalidArgument, "p too large for P^1(Z/p^2) enumeration");
  auto ps = static_cast<std::int64_t>(p);
  return {ps, ps * ps};
}

std::vector<QuadForm> indefinite_reduced_forms(const Int& D) {
  Int s = isqrt(D);
  std::vector<QuadForm> out;
  for (Int b = 1; b <= s; ++b) {
    if (fdiv_r(b - D, 2) != 0) continue;
    Int m = (D - b * b) / 4;  // -ac > 0
    if (!m.fits_slong_p()) fail(ErrorCode::Domain, "discriminant too large to enumerate");
    long mm = m.get_si();
    for (long d = 1; d * d <= mm; ++d) {
      if (mm % d != 0) continue;
      long pair[2] = {d, mm / d};
      for (int i = 0; i < (pair[0] == pair[1] ? 1 : 2); ++i) {
        for (long sign : {1L, -1L}) {
          Int a = sign * pair[i];
          QuadForm f{a, b, -Int(mm) / a, std::nullopt};
          if (indefinite_reduced(f, s)) out.push_back(f);
        }
      }
    }
  }
  return out;
}

std::vector<QuadForm> definite_reduced_forms(const Int& D) {
  // 3a^2 <= |D| for reduced forms
  Int absD = -D;
  std::vector<QuadForm> out;
  for (Int a = 1; 3 * a * a <= absD; ++a) {
    for (Int b = -a + 1; b <= a; ++b) {
      Int num = b * b - D;
      if (fdiv_r(num, 4 * a) != 0) continue;
      QuadForm f{a, b, num / (4 * a), std::nullopt};
      if (definite_reduced(f)) out.push_back(f);
    }
  }
  return out;
}

struct Gamma0Unit {
  UnimodularMatrix generator;
  std::uint64_t power;  // of the SL_2(Z)_Phi generator
};

// Smallest positive power of the SL_2(Z)_Phi generator lying in Gamma_0(N).
Gamma0Unit gamma0_unit(const QuadForm& phi, std::uint64_t N) {
  UnimodularMatrix gen = stab_generator(phi);
  UnimodularMatrix power = gen;
  Int n = int_from(N);
  for (std::uint64_t k = 1; k <= 2 * N + 2; ++k) {
    // -I is in every Gamma_0(N), so +-M^k suffices
    if (fdiv_r(power.z, n) == 0) return {power, k};
    power = power * gen;
  }
  fail(ErrorCode::Inconsistent, "no power of the automorph generator lies in Gamma_0(N)");
}

int gamma0_stab_order(const QuadForm& phi, std::uint64_t N) {
  UnimodularMatrix gen = definite_generator(phi);
  int order = full_stab_order(phi);
  Int n = int_from(N);
  int count = 0;
  UnimodularMatrix power = UnimodularMatrix::identity();
  // <gen> together with -I covers the whole stabilizer
  std::vector<UnimodularMatrix> elems;
  for (int k = 0; k < order; ++k) {
    for (int sign : {1, -1}) {
      UnimodularMatrix e{sign * power.x, sign * power.y, sign * power.z, sign * power.t};
      if (std::find(elems.begin(), elems.end(), e) == elems.end()) elems.push_back(e);
    }
    power = power * gen;
  }
  for (const auto& e : elems)
    if (fdiv_r(e.z, n) == 0) ++count;
  return count;
}

void require_level_form(const QuadForm& phi, std::uint64_t N) {
  if (N == 0) fail(ErrorCode::InvalidArgument, "level must be positive");
  if (fdiv_r(phi.a, int_from(N)) != 0)
    fail(ErrorCode::InvalidArgument, "form " + phi.str() + " is not of level " + std::to_string(N));
}

void require_positive_definite(const QuadForm& phi) {
  if (!(phi.disc() < 0 && phi.a > 0)) fail(ErrorCode::Domain, "form " + phi.str() + " is not positive definite");
}

void require_classes_defined(std::int64_t l) {
  if (l == 2 || l == -2) fail(ErrorCode::Domain, "|l| = 2 gives a square discriminant");
  if (l > 3037000499LL || l < -3037000499LL) fail(ErrorCode::InvalidArgument, "|l| too large");
}

}  // namespace

// ---- forms and matrices --------------------------------------------------

Int QuadForm::content() const {
  Int g = gcd3(a, b, c);
  return g == 0 ? Int(1) : g;
}

std::string QuadForm::str() const {
  return "[" + a.get_str() + "," + b.get_str() + "," + c.get_str() + "]";
}

QuadForm make_form(long a, long b, long c, std::optional<std::uint64_t> level) {
  QuadForm f{a, b, c, level};
  if (level) require_level_form(f, *level);
  return f;
}

UnimodularMatrix operator*(const UnimodularMatrix& m, const UnimodularMatrix& n) {
  return {m.x * n.x + m.y * n.z, m.x * n.y + m.y * n.t, m.z * n.x + m.t * n.z, m.z * n.y + m.t * n.t};
}

UnimodularMatrix make_matrix(long x, long y, long z, long t) {
  UnimodularMatrix m{x, y, z, t};
  require_unimodular(m);
  return m;
}

double PellSolution::log_unit() const {
  if (mpz_sizeinbase(x.get_mpz_t(), 2) < 500) {
    double xd = x.get_d();
    return std::log((xd + std::sqrt(xd * xd - 4.0)) / 2.0);
  }
  return int_log(x);
}

QuadForm transform(const QuadForm& phi, const UnimodularMatrix& d) {
  QuadForm out;
  out.a = phi.eval(d.x, d.z);
  out.b = phi.b * (d.x * d.t + d.y * d.z) + 2 * (phi.a * d.x * d.y + phi.c * d.z * d.t);
  out.c = phi.eval(d.y, d.t);
  if (phi.level && fdiv_r(d.z, int_from(*phi.level)) == 0) out.level = phi.level;
  return out;
}

Int act(const QuadForm& phi, const Int& m, const Int& n) { return phi.eval(n, -m); }

QuadForm form_of_matrix(const UnimodularMatrix& gamma, std::uint64_t N) {
  require_unimodular(gamma);
  if (N == 0 || fdiv_r(gamma.z, int_from(N)) != 0)
    fail(ErrorCode::InvalidArgument, "matrix is not in Gamma_0(" + std::to_string(N) + ")");
  return {gamma.z, gamma.t - gamma.x, -gamma.y, N};
}

UnimodularMatrix matrix_of_form(const QuadForm& phi, std::int64_t l, std::uint64_t N) {
  require_level_form(phi, N);
  Int L(std::to_string(l));
  if (phi.disc() != L * L - 4)
    fail(ErrorCode::InvalidArgument,
         "discriminant of " + phi.str() + " is not l^2 - 4 for l = " + std::to_string(l));
  return {(L - phi.b) / 2, -phi.c, phi.a, (L + phi.b) / 2};
}

PellSolution pell_min(const Int& delta) {
  if (delta <= 0) fail(ErrorCode::Domain, "Pell discriminant must be positive");
  if (is_square(delta)) fail(ErrorCode::Domain, "Pell discriminant " + delta.get_str() + " is a square");
  Int r4 = fdiv_r(delta, 4);
  if (r4 != 0 && r4 != 1) fail(ErrorCode::Domain, "discriminant must be 0 or 1 mod 4");

  // u^2 - D v^2 = 1 through the continued fraction of sqrt(D)
  auto pell_one = [](const Int& D) {
    Int a0 = isqrt(D);
    Int m = 0, d = 1, a = a0;
    Int h1 = 1, h2 = 0, k1 = 0, k2 = 1;
    for (;;) {
      Int h = a * h1 + h2;
      Int k = a * k1 + k2;
      if (h * h - D * k * k == 1) return std::pair<Int, Int>{h, k};
      h2 = h1;
      h1 = h;
      k2 = k1;
      k1 = k;
      m = d * a - m;
      d = (D - m * m) / d;
      a = (a0 + m) / d;
    }
  };

  if (r4 == 0) {
    auto [u, v] = pell_one(delta / 4);
    return {2 * u, v, delta};
  }
  auto [u, v] = pell_one(delta);
  // an odd solution eps with eps^3 = u + v sqrt(D) has 2v = y (3 + D y^2)
  Int lo = 1, hi = v;
  while (lo < hi) {
    Int mid = (lo + hi) / 2;
    if (mid * (3 + delta * mid * mid) < 2 * v)
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo * (3 + delta * lo * lo) == 2 * v) {
    Int x2 = 4 + delta * lo * lo;
    if (is_square(x2)) return {isqrt(x2), lo, delta};
  }
  return {2 * u, 2 * v, delta};
}

UnimodularMatrix stab_generator(const QuadForm& phi) {
  Int D = phi.disc();
  if (D <= 0) fail(ErrorCode::Domain, "stab_generator needs a positive discriminant");
  require_valid_disc(D);
  Int f = phi.content();
  Int a = phi.a / f, b = phi.b / f, c = phi.c / f;
  PellSolution sol = pell_min(D / (f * f));
  if (fdiv_r(sol.x - sol.y * b, 2) != 0)
    fail(ErrorCode::Inconsistent, "Pell solution violates x = yb mod 2 for " + phi.str());
  return {(sol.x - sol.y * b) / 2, -c * sol.y, a * sol.y, (sol.x + sol.y * b) / 2};
}

int stab_order_definite(const Int& disc) {
  if (disc == -3) return 6;
  if (disc == -4) return 4;
  fail(ErrorCode::Domain, "stab_order_definite supports discriminants -3 and -4 only");
}

QuadForm star_d(const QuadForm& phi, std::uint64_t d, std::uint64_t N) {
  require_level_form(phi, N);
  if (d == 0 || N % d != 0) fail(ErrorCode::InvalidArgument, std::to_string(d) + " does not divide " + std::to_string(N));
  Int n = int_from(N), dd = int_from(d);
  return {dd * (phi.a / n), phi.b, (n / dd) * phi.c, d};
}

std::vector<QuadForm> sl2_class_reps(const Int& D) {
  require_valid_disc(D);
  if (fdiv_r(D, 4) > 1) fail(ErrorCode::Domain, "discriminant must be 0 or 1 mod 4");
  if (D < 0) return definite_reduced_forms(D);

  std::vector<QuadForm> reduced = indefinite_reduced_forms(D);
  std::map<Triple, std::size_t> where;
  for (std::size_t i = 0; i < reduced.size(); ++i) where[key_of(reduced[i])] = i;

  Int s = isqrt(D);
  std::vector<bool> seen(reduced.size(), false);
  std::vector<QuadForm> reps;
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    if (seen[i]) continue;
    Triple least = key_of(reduced[i]);
    Tracked t{reduced[i], UnimodularMatrix::identity()};
    std::size_t j = i;
    do {
      seen[j] = true;
      rho(t, D, s);
      auto it = where.find(key_of(t.form));
      if (it == where.end()) fail(ErrorCode::Inconsistent, "reduction cycle left the reduced forms");
      j = it->second;
      least = std::min(least, key_of(t.form));
    } while (j != i);
    reps.push_back({least[0], least[1], least[2], std::nullopt});
  }
  std::sort(reps.begin(), reps.end(),
            [](const QuadForm& x, const QuadForm& y) { return key_of(x) < key_of(y); });
  return reps;
}

// ---- classes ---------------------------------------------------------------

ClassSet enumerate_classes(std::int64_t l, std::uint64_t p) {
  require_classes_defined(l);
  require_prime(p);
  ProjectiveLine line = line_for(p);
  const std::uint64_t N = p * p;
  Int L(std::to_string(l));
  Int D = L * L - 4;

  ClassSet set{l, N, {}, {}, 0};
  if (D < 0) {
    set.sl2_reps = definite_reduced_forms(D);
  } else {
    set.sl2_reps = sl2_class_reps(D);
  }

  for (std::size_t ci = 0; ci < set.sl2_reps.size(); ++ci) {
    const QuadForm& phi0 = set.sl2_reps[ci];
    UnimodularMatrix gen = D < 0 ? definite_generator(phi0) : stab_generator(phi0);

    std::vector<char> visited(static_cast<std::size_t>(line.size()), 0);
    for (std::int64_t idx = 0; idx < line.size(); ++idx) {
      ++set.certificate;
      if (visited[idx]) continue;
      UnimodularMatrix r = line.lift(idx);
      if (line.mod(phi0.eval(r.x, r.z)) != 0) continue;

      std::size_t orbit = 0;
      std::int64_t cur = idx;
      do {
        visited[cur] = 1;
        ++orbit;
        cur = line.act(gen, cur);
      } while (cur != idx);

      Tracked t{transform(phi0, r), r};
      normalize_b(t);
      FormClass cls;
      cls.rep = t.form;
      cls.rep.level = N;
      cls.to_rep = t.g;
      cls.sl2_class = ci;
      cls.orbit_size = orbit;
      if (D > 0) {
        UnimodularMatrix power = UnimodularMatrix::identity();
        for (std::size_t k = 0; k < orbit; ++k) power = power * gen;
        cls.stabilizer = t.g.inverse() * power * t.g;
        Int f = phi0.content();
        cls.log_unit = static_cast<double>(orbit) * pell_min(D / (f * f)).log_unit();
      } else {
        cls.stab_order = full_stab_order(phi0) / static_cast<int>(orbit);
      }
      set.reps.push_back(std::move(cls));
    }
  }
  return set;
}

std::size_t classify(const ClassSet& set, const QuadForm& phi) {
  Int L(std::to_string(set.l));
  Int D = L * L - 4;
  if (phi.disc() != D) fail(ErrorCode::InvalidArgument, "form " + phi.str() + " has the wrong discriminant");
  require_level_form(phi, set.N);
  if (D < 0 && phi.a < 0) fail(ErrorCode::Domain, "negative definite forms are not classified");

  Tracked t{phi, UnimodularMatrix::identity()};
  std::size_t ci = set.sl2_reps.size();
  if (D < 0) {
    reduce_definite(t);
    for (std::size_t i = 0; i < set.sl2_reps.size(); ++i)
      if (set.sl2_reps[i].same_coefficients(t.form)) ci = i;
  } else {
    Int s = isqrt(D);
    reduce_indefinite(t, D, s);
    for (int guard = 0; guard < 100000 && ci == set.sl2_reps.size(); ++guard) {
      for (std::size_t i = 0; i < set.sl2_reps.size(); ++i)
        if (set.sl2_reps[i].same_coefficients(t.form)) ci = i;
      if (ci == set.sl2_reps.size()) rho(t, D, s);
    }
  }
  if (ci == set.sl2_reps.size()) fail(ErrorCode::Inconsistent, "no SL_2(Z)-class found for " + phi.str());

  // phi = phi0 o g^{-1}
  std::uint64_t p = 1;
  while (p * p < set.N) ++p;
  ProjectiveLine line = line_for(p);
  UnimodularMatrix r = t.g.inverse();
  std::int64_t idx = line.index(line.mod(r.x), line.mod(r.z));
  UnimodularMatrix gen = D < 0 ? definite_generator(set.sl2_reps[ci]) : stab_generator(set.sl2_reps[ci]);

  // the class whose representative point lies in the orbit of idx
  std::int64_t cur = idx;
  do {
    for (std::size_t k = 0; k < set.reps.size(); ++k) {
      const FormClass& cls = set.reps[k];
      if (cls.sl2_class != ci) continue;
      UnimodularMatrix rr = cls.to_rep;  // first column is that of the lift
      if (line.index(line.mod(rr.x), line.mod(rr.z)) == cur) return k;
    }
    cur = line.act(gen, cur);
  } while (cur != idx);
  fail(ErrorCode::Inconsistent, "form " + phi.str() + " matches no enumerated class");
}

// ---- zeta functions ----------------------------------------------------------

eis::Truncated<double> epstein_zeta_definite(const QuadForm& phi, double s, std::int64_t box,
                                             double tolerance) {
  require_positive_definite(phi);
  if (!(s > 1.0)) fail(ErrorCode::Domain, "Epstein sums need s > 1");
  if (box < 1) fail(ErrorCode::InvalidArgument, "box must be >= 1");
  const double a = phi.a.get_d(), b = phi.b.get_d(), c = phi.c.get_d();

  // Phi(n,-m) runs over all nonzero values Phi(u,v); use Phi(-v) = Phi(v).
  num::KahanSum half;
  for (std::int64_t u = box; u >= 1; --u) {
    const double ud = static_cast<double>(u);
    for (std::int64_t v = -box; v <= box; ++v) {
      const double vd = static_cast<double>(v);
      half.add(std::pow(a * ud * ud + b * ud * vd + c * vd * vd, -s));
    }
  }
  for (std::int64_t v = box; v >= 1; --v) {
    const double vd = static_cast<double>(v);
    half.add(std::pow(c * vd * vd, -s));
  }

  const double stab = full_stab_order(phi);
  const double lambda = 0.5 * (a + c) - std::sqrt(0.25 * (a - c) * (a - c) + 0.25 * b * b);
  const double tail = 8.0 * std::pow(lambda, -s) * std::pow(static_cast<double>(box), 2.0 - 2.0 * s) /
                      (2.0 * s - 2.0) / stab;
  eis::Truncated<double> out{2.0 * half.value() / stab, tail};
  if (tail > tolerance) fail(ErrorCode::Truncation, "Epstein box sum: tail bound exceeds tolerance");
  return out;
}

double epstein_zeta_definite_cs(const QuadForm& phi, double s) {
  require_positive_definite(phi);
  if (!(s > 1.0)) fail(ErrorCode::Domain, "Epstein sums need s > 1");
  Tracked t{phi, UnimodularMatrix::identity()};
  reduce_definite(t);
  const double a = t.form.a.get_d(), b = t.form.b.get_d(), c = t.form.c.get_d();
  const double D = 4.0 * a * c - b * b;
  const double sqD = std::sqrt(D);
  const double gs = num::gamma_fn(s).real();
  const double nu = s - 0.5;

  const double zeta2s = num::riemann_zeta(2.0 * s).real();
  const double zeta2s1 = num::riemann_zeta(2.0 * s - 1.0).real();
  double total = 2.0 * zeta2s * std::pow(a, -s);
  total += std::pow(2.0, 2.0 * s) * std::sqrt(kPi) * std::pow(a, s - 1.0) *
           num::gamma_fn(nu).real() * zeta2s1 / (gs * std::pow(D, nu));

  const double pref = std::pow(2.0, s + 2.5) * std::pow(kPi, s) / (gs * std::sqrt(a) * std::pow(D, 0.5 * s - 0.25));
  num::KahanSum series;
  for (int n = 1; n <= 400; ++n) {
    const double arg = kPi * n * sqD / a;
    double sigma = 0.0;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) sigma += std::pow(static_cast<double>(d), 1.0 - 2.0 * s);
    const double term = std::pow(static_cast<double>(n), nu) * sigma * std::cos(kPi * n * b / a) *
                        std::cyl_bessel_k(nu, arg);
    series.add(term);
    if (arg > 60.0 && std::abs(term) < 1e-300 + 1e-19 * std::abs(series.value())) break;
  }
  total += pref * series.value();
  return total / full_stab_order(phi);
}

double residue_epstein(const QuadForm& phi) {
  Int D = phi.disc();
  require_valid_disc(D);
  if (D < 0) {
    require_positive_definite(phi);
    return 2.0 * kPi / (std::sqrt(-D.get_d()) * full_stab_order(phi));
  }
  Int f = phi.content();
  return pell_min(D / (f * f)).log_unit() / std::sqrt(D.get_d());
}

double zeta_phi_d_value(const QuadForm& phi, std::uint64_t d, std::uint64_t N, double s) {
  QuadForm starred = star_d(phi, d, N);
  require_positive_definite(phi);
  // sum over the Gamma_0(N)_Phi quotient of all nonzero lattice values
  double total = epstein_zeta_definite_cs(starred, s) * full_stab_order(starred);
  double nd = static_cast<double>(N) * static_cast<double>(d);
  return std::pow(nd, -s) * total / gamma0_stab_order(phi, N);
}

double zeta_phi_d_residue(const QuadForm& phi, std::uint64_t d, std::uint64_t N) {
  star_d(phi, d, N);
  Int D = phi.disc();
  require_valid_disc(D);
  double nd = static_cast<double>(N) * static_cast<double>(d);
  if (D < 0) {
    require_positive_definite(phi);
    return 2.0 * kPi / (nd * std::sqrt(-D.get_d()) * gamma0_stab_order(phi, N));
  }
  Gamma0Unit unit = gamma0_unit(phi, N);
  Int f = phi.content();
  double log_eps = static_cast<double>(unit.power) * pell_min(D / (f * f)).log_unit();
  return log_eps / (nd * std::sqrt(D.get_d()));
}

double theta_class_weight(std::int64_t l, std::uint64_t p) {
  if (l >= -2 && l <= 2) fail(ErrorCode::Domain, "theta_class_weight needs |l| > 2");
  ClassSet set = enumerate_classes(l, p);
  const double root = std::sqrt(static_cast<double>(l) * static_cast<double>(l) - 4.0);
  num::KahanSum sum;
  for (const auto& cls : set.reps) sum.add(cls.log_unit / root);
  return sum.value();
}

double zeta_level_residue(std::int64_t l, std::uint64_t p) {
  require_classes_defined(l);
  require_prime(p);
  if (l < -2 || l > 2) {
    double v = num::kPi / 3.0 * static_cast<double>(p) * static_cast<double>(p + 1);
    return theta_class_weight(l, p) / (kPi * v);
  }
  return zeta_level_residue_by_definition(l, p);
}

double zeta_level_residue_by_definition(std::int64_t l, std::uint64_t p) {
  ClassSet set = enumerate_classes(l, p);
  const double pd = static_cast<double>(p);
  const double zeta2 = kPi * kPi / 6.0;
  num::KahanSum sum;
  for (const auto& cls : set.reps) {
    sum.add(zeta_phi_d_residue(cls.rep, 1, set.N));
    sum.add(-zeta_phi_d_residue(cls.rep, p, set.N));
  }
  return sum.value() / (2.0 * zeta2 * (1.0 - 1.0 / (pd * pd)));
}

double zeta_level_value(std::int64_t l, std::uint64_t p, double s) {
  if (l < -1 || l > 1) fail(ErrorCode::Domain, "zeta_level_value is provided for |l| < 2");
  if (!(s > 1.0)) fail(ErrorCode::Domain, "zeta_level_value needs s > 1");
  ClassSet set = enumerate_classes(l, p);
  const double pd = static_cast<double>(p);
  num::KahanSum sum;
  for (const auto& cls : set.reps) {
    sum.add(zeta_phi_d_value(cls.rep, 1, set.N, s));
    sum.add(-zeta_phi_d_value(cls.rep, p, set.N, s));
  }
  const double zeta2s = num::riemann_zeta(2.0 * s).real();
  return sum.value() / (2.0 * zeta2s * (1.0 - std::pow(pd, -2.0 * s)));
}

}  // namespace arakx0::qf
