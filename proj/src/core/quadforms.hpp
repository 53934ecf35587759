#pragma once

// Binary quadratic forms [a,b,c] = a x^2 + b x z + c z^2 of discriminant
// l^2 - 4, their Gamma_0(N)-classes, Pell units and Epstein zeta functions.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eisenstein.hpp"
#include "rational.hpp"

namespace arakx0::qf {

struct QuadForm {
  Int a, b, c;
  std::optional<std::uint64_t> level;  // N with N | a, when tagged

  Int disc() const { return b * b - 4 * a * c; }
  Int eval(const Int& x, const Int& z) const { return a * x * x + b * x * z + c * z * z; }
  Int content() const;
  std::string str() const;  // "[a,b,c]"

  bool same_coefficients(const QuadForm& o) const { return a == o.a && b == o.b && c == o.c; }
};

QuadForm make_form(long a, long b, long c, std::optional<std::uint64_t> level = std::nullopt);

// [[x, y], [z, t]] with xt - yz = 1.
struct UnimodularMatrix {
  Int x, y, z, t;

  static UnimodularMatrix identity() { return {1, 0, 0, 1}; }
  Int det() const { return x * t - y * z; }
  Int trace() const { return x + t; }
  UnimodularMatrix inverse() const { return {t, -y, -z, x}; }
  bool operator==(const UnimodularMatrix& o) const {
    return x == o.x && y == o.y && z == o.z && t == o.t;
  }
};

UnimodularMatrix operator*(const UnimodularMatrix& m, const UnimodularMatrix& n);
UnimodularMatrix make_matrix(long x, long y, long z, long t);

struct PellSolution {
  Int x, y;
  Int delta;
  // log of the fundamental unit (x + y sqrt(delta)) / 2
  double log_unit() const;
};

// Phi o delta = [Phi(x,z), b(xt+yz) + 2(axy+czt), Phi(y,t)]. The level tag
// survives when delta lies in Gamma_0(N).
QuadForm transform(const QuadForm& phi, const UnimodularMatrix& delta);

// The action Phi . (m, n) = Phi(n, -m).
Int act(const QuadForm& phi, const Int& m, const Int& n);

// gamma = [[a, b], [Nc, d]] -> [Nc, d - a, -b]
QuadForm form_of_matrix(const UnimodularMatrix& gamma, std::uint64_t N);
// [aN, b, c] -> [[(l-b)/2, -c], [aN, (l+b)/2]]
UnimodularMatrix matrix_of_form(const QuadForm& phi, std::int64_t l, std::uint64_t N);

PellSolution pell_min(const Int& delta);

// U_Phi(x, y) for the primitive part of Phi and the minimal Pell solution of
// its discriminant.
UnimodularMatrix stab_generator(const QuadForm& phi);

int stab_order_definite(const Int& disc);

QuadForm star_d(const QuadForm& phi, std::uint64_t d, std::uint64_t N);

// SL_2(Z)-class representatives of positive-definite (disc < 0) or
// indefinite (disc > 0, nonsquare) forms of the given discriminant. Each
// representative is reduced; indefinite ones are the least form of their
// reduction cycle.
std::vector<QuadForm> sl2_class_reps(const Int& disc);

struct FormClass {
  QuadForm rep;                  // normalized so that -|a| < b <= |a|
  UnimodularMatrix to_rep;       // rep = reduced o to_rep
  std::size_t sl2_class;         // index into ClassSet::sl2_reps
  std::size_t orbit_size;        // points of P^1(Z/N) merged into this class
  // disc > 0
  std::optional<UnimodularMatrix> stabilizer;  // generator of Gamma_0(N)_Phi up to sign
  double log_unit = 0.0;                       // log eps_Phi
  // disc < 0
  int stab_order = 0;  // |Gamma_0(N)_Phi|
};

struct ClassSet {
  std::int64_t l;
  std::uint64_t N;
  std::vector<QuadForm> sl2_reps;
  std::vector<FormClass> reps;
  // points of P^1(Z/N) scanned, summed over SL_2(Z)-classes
  std::uint64_t certificate;
};

// Q_l(p^2)/Gamma_0(p^2), |l| != 2. Exhaustive over P^1(Z/p^2), so the result
// is complete by construction.
ClassSet enumerate_classes(std::int64_t l, std::uint64_t p);

// Index of the class of phi inside `set`.
std::size_t classify(const ClassSet& set, const QuadForm& phi);

// (1/|stab|) sum' over max(|m|,|n|) <= box of Phi(n,-m)^{-s}, with tail bound.
eis::Truncated<double> epstein_zeta_definite(const QuadForm& phi, double s, std::int64_t box,
                                             double tolerance = eis::kNoTolerance);

// Same function through the Chowla-Selberg expansion; converges exponentially.
double epstein_zeta_definite_cs(const QuadForm& phi, double s);

double residue_epstein(const QuadForm& phi);

// zeta_{Phi,d}(s) = (Nd)^{-s} zeta_{Phi^{*d}}(s) for definite Phi.
double zeta_phi_d_value(const QuadForm& phi, std::uint64_t d, std::uint64_t N, double s);
double zeta_phi_d_residue(const QuadForm& phi, std::uint64_t d, std::uint64_t N);

double zeta_level_residue(std::int64_t l, std::uint64_t p);
// The same residue assembled from the defining Moebius combination of
// zeta_{Phi,d} residues.
double zeta_level_residue_by_definition(std::int64_t l, std::uint64_t p);
// zeta_{Gamma_0(p^2)}(s, l) for |l| < 2 and real s > 1.
double zeta_level_value(std::int64_t l, std::uint64_t p, double s);

double theta_class_weight(std::int64_t l, std::uint64_t p);

}  // namespace arakx0::qf
