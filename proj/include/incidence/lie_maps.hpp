#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "incidence/linear_map.hpp"
#include "incidence/theta.hpp"

namespace incidence {

/// beta with diagonal part delta.
class InnerUnit {
public:
  /// Throws InvalidArgument unless split_diagonal(beta).first == delta.
  explicit InnerUnit(AlgebraElement beta);
  const AlgebraElement &beta() const { return beta_; }
  friend bool operator==(const InnerUnit &, const InnerUnit &) = default;

private:
  AlgebraElement beta_;
};

bool is_lie_automorphism(const LinearMap &m);
/// Bijective, multiplicative on basis pairs, unital.
bool is_algebra_automorphism(const LinearMap &m);
/// Bijective, m(fg) = m(g)m(f) on basis pairs, unital.
bool is_anti_automorphism(const LinearMap &m);

/// f -> beta f beta^-1.
LinearMap inner_from_unit(const InnerUnit &u);

/// Levelwise leading part: e_xy in L_i goes to the L_i-component of m(e_xy).
LinearMap tilde(const LinearMap &m);
/// A Lie automorphism with m(L_i) in L_i for every i.
bool is_elementary(const LinearMap &m);

/// theta and sigma with m(e_xy) = sigma(x,y) theta(e_xy); NotElementary otherwise.
std::pair<BasisBijection, SigmaMap> extract_theta_sigma(const LinearMap &m);

struct InnerElementary {
  InnerUnit unit;
  LinearMap elementary;
};
/// m = xi_beta o tau with tau = tilde(m).
InnerElementary decompose_inner_elementary(const LinearMap &m);

struct ProperWitness {
  enum class Kind { Automorphism, NegatedAntiAutomorphism };
  Kind kind;
  /// nu(e_z) = alpha[z] delta.
  std::vector<Scalar> alpha;
};

/// The central part nu(e_z) = alpha_z delta, nu(e_xy) = 0 for x < y.
LinearMap central_part(const AlgebraPtr &algebra, const std::vector<Scalar> &alpha);
/// psi for the witness: m - nu, negated in the anti-automorphism case.
LinearMap proper_component(const LinearMap &m, const ProperWitness &w);

/// Decides whether m = psi + nu with psi an automorphism or the negative of an
/// anti-automorphism and nu central-valued, vanishing on the radical.
std::optional<ProperWitness> is_proper(const LinearMap &m);

} // namespace incidence
