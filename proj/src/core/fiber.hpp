#pragma once

// Exact intersection calculus on the special fiber at p of Edixhoven's
// regular model of X_0(p^2). Numbers are local (log p factored out).

#include <cstdint>
#include <string>
#include <vector>

#include "rational.hpp"

namespace arakx0::fiber {

struct Component {
  std::string name;
  std::int64_t multiplicity = 1;
  std::int64_t arith_genus = 0;
};

using RatMatrix = std::vector<std::vector<Rat>>;

struct FiberModel {
  std::uint64_t p = 0;
  std::vector<Component> components;
  RatMatrix inter;

  std::size_t size() const { return components.size(); }
  std::size_t index_of(const std::string& name) const;
  const Rat& at(const std::string& a, const std::string& b) const;
};

// Surviving components written over the basis of the model they came from.
struct PullbackMap {
  std::vector<std::string> basis;
  std::vector<std::string> targets;
  RatMatrix coeffs;  // coeffs[i][j]: coefficient of basis[j] in pi^* targets[i]
};

FiberModel edixhoven_fiber(std::uint64_t p);

// One-dimensional kernel of the intersection matrix, first coordinate 1.
std::vector<Rat> derive_multiplicities(const RatMatrix& inter);

// K.C = 2 p_a(C) - 2 - C^2 per component.
std::vector<Rat> canonical_degrees(const FiberModel& f);
Rat adjunction_sum(const FiberModel& f);

std::vector<std::size_t> contractible(const FiberModel& f);

struct BlowDown {
  FiberModel model;
  PullbackMap pullback;
};

BlowDown blow_down(const FiberModel& f, std::size_t x);

struct MinimalModel {
  FiberModel model;
  PullbackMap pullback;               // composed, over the Edixhoven basis
  std::vector<std::string> contracted;  // in contraction order
};

MinimalModel minimal_model(const FiberModel& f);

struct FiberCheck {
  bool symmetric = false;
  bool fiber_relation = false;   // V.D = 0 for every D
  bool kernel_spanned = false;   // kernel = span(V)
  bool adjunction = false;       // sum m (K.C) = 2g - 2
  Rat adjunction_value;
  std::int64_t expected_adjunction = 0;

  bool ok() const { return symmetric && fiber_relation && kernel_spanned && adjunction; }
};

FiberCheck validate(const FiberModel& f);

// pi^* D' . X = 0 for every contracted X, over the original model.
bool pullbacks_orthogonal(const FiberModel& original, const MinimalModel& m);

// The closed-form pi^* C20' coefficients (C20, C02, C11, E, F).
std::vector<Rat> expected_pullback_c20(std::uint64_t p);

Rat intersect(const RatMatrix& inter, const std::vector<Rat>& x, const std::vector<Rat>& y);
std::size_t rank(RatMatrix m);

}  // namespace arakx0::fiber
