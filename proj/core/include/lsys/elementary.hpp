#pragma once

// One-dimensional L-systems built from multiplication by a scalar lambda0 in
// the open upper half-plane, and their skew-adjoint companions.

#include "lsys/lsystem.hpp"
#include "lsys/num.hpp"

namespace lsys {

/// Throws DomainError unless lambda0 is finite with Im lambda0 > 0.
Complex require_upper_half_plane(Complex lambda0);

/// T = [lambda0], K = [sqrt(Im lambda0)], J = 1.
struct ElementarySystem {
  Complex lambda0;
  LSystem system;
};

/// T = [-conj(lambda0)], same channel as the originating elementary system.
struct SkewAdjointSystem {
  Complex lambda0;
  LSystem system;
};

ElementarySystem make_elementary(Complex lambda0);
SkewAdjointSystem make_skew_adjoint(Complex lambda0);

/// W(z) = (conj(lambda0) - z)/(lambda0 - z)
RationalFunction elementary_transfer(Complex lambda0);
/// V(z) = Im lambda0 / (Re lambda0 - z)
RationalFunction elementary_impedance(Complex lambda0);

/// W(z) = (lambda0 + z)/(conj(lambda0) + z)
RationalFunction skew_adjoint_transfer(Complex lambda0);
/// V(z) = -Im lambda0 / (Re lambda0 + z)
RationalFunction skew_adjoint_impedance(Complex lambda0);

}  // namespace lsys
