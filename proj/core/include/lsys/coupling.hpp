#pragma once

// Coupling Theta1 . Theta2 of two L-systems with scalar input-output space.

#include "lsys/lsystem.hpp"
#include "lsys/num.hpp"

namespace lsys {

/// The block system
///
///   T = [ T1   2i K1 K2* ]      K = [ K1 ]      J = 1
///       [ 0    T2        ]          [ K2 ]
///
/// together with the two factors it was assembled from.
struct CoupledSystem {
  LSystem system;
  LSystem first;
  LSystem second;
};

/// Throws IncompatibleError if either factor has J != +1 or fails validate().
/// Factors may be of any dimension, so couplings can be chained.
CoupledSystem couple(const LSystem& first, const LSystem& second);

/// Product of the elementary transfer functions for lambda0 and mu0.
RationalFunction coupling_transfer(Complex lambda0, Complex mu0);

/// V(z) = [Im(l + m) z - Im(l m)] / [Re(l + m) z - Re(l m) - z^2]
RationalFunction coupling_impedance(Complex lambda0, Complex mu0);

/// Coupling of the elementary system for lambda0 with its skew-adjoint.
CoupledSystem self_skew_coupling(Complex lambda0);

/// W(z) = [|l|^2 - 2i Im(l) z - z^2] / [|l|^2 + 2i Im(l) z - z^2]
RationalFunction self_skew_transfer(Complex lambda0);

/// V(z) = 2 Im(l) z / (|l|^2 - z^2)
RationalFunction self_skew_impedance(Complex lambda0);

}  // namespace lsys
