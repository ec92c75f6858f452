#ifndef PPLATEAU_FLATNORM_HPP
#define PPLATEAU_FLATNORM_HPP

#include "pplateau/complex.hpp"
#include "pplateau/functionals.hpp"

#include <cstdint>

namespace pplateau {

/// T = remainder + ∂filling, value = cost(remainder) + cost(filling).
struct FlatCertificate {
  Scalar value;
  Chain filling;
  Chain remainder;
  /// The optimal filling touches the coefficient cap; the value is then only
  /// an upper bound for the uncapped problem.
  bool cap_active = false;
};

struct RealFlatCertificate {
  Scalar value;
  RationalChain filling;
  RationalChain remainder;
};

/// inf over real (m+1)-chains S of M(T - ∂S) + M(S), by exact LP.
RealFlatCertificate flat_norm_real(const Chain& t);

/// min over integer S with |S(τ)| <= cap of M(T - ∂S) + M(S). Branch and
/// bound with LP-relaxation bounds; ties go to the lexicographically
/// smallest filling.
FlatCertificate flat_distance_integral(const Chain& t, std::int64_t cap);

/// min over integer S with |S(τ)| <= cap of M_H(T - ∂S) + M_H(S), with the
/// same tie rule.
FlatCertificate h_flat_distance(const Chain& t, const Integrand& h, std::int64_t cap);

}  // namespace pplateau

#endif
