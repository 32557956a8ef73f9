#pragma once

#include <string>

#include "qv/expansion.hpp"
#include "qv/invariant.hpp"

namespace qv {

/// A worked torus-link example: the invariant configuration, the substitution, and
/// the closed-form display of its value with its exponents kept as the given lifts.
struct ReferenceExample {
  std::string name;
  int n = 3;
  BraidWord braid;
  InvariantConfig config;
  SubstitutionParams params;
  GroupRingElement display;
};

/// Shadow invariant of the (2,n) torus link with the p = 3 Mochizuki cocycle over
/// F_3[w]/(w^2-w+1), FixArcAndRegion(0, 0, 0); t = e^{2 hbar}, w = e^{hbar}.
/// Display: 3 + 2t^{(n/3)(1-w)w^-2} + t^{(n/3)(-2+w^-1+w)} + 2t^{(n/3)(2-w^-1-2w+2w^2-w^3)}
///            + t^{(n/3)(-2-2w^-2+w+2w^2+w^3)}. Throws InvalidArgument unless 3 | n, n > 0.
ReferenceExample example110(int n);

/// 2-cocycle invariant with (x-y)y^2 over F_4, SumAll; t = e^{3 hbar}, w = e^{2 hbar}.
/// Display: 4 + 10t^{(n/3)(w^2-1)} + t^{(n/3)(w^2+w-2)} + t^{(n/3)(w-1)}.
ReferenceExample example111(int n);

}  // namespace qv
