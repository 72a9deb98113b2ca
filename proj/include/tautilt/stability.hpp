#pragma once

// King stability for g-vector functionals, the bricks attached to the slots
// of a tau-tilting pair, and torsion-class membership tests.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tautilt/algebra.hpp"
#include "tautilt/representation.hpp"
#include "tautilt/tau_tilting.hpp"

namespace tautilt {

/// sum_i w_i g^{M_i} - sum_j w_j g^{P_j}, weights in slot order.
Vec theta_of_pair(const TauPair& pair, const std::vector<Rational>& weights);
/// Unit weights.
Vec theta_of_pair(const TauPair& pair);
/// theta of the almost pair obtained by dropping slot r.
Vec slot_theta(const TauPair& pair, std::size_t r);
Rational pairing(const Vec& theta, const IntVector& dims);

/// Hom(M, X) = 0, Hom(X, tau M) = 0 and X vanishes on the P-vertices.
bool is_semistable_hom(const BoundQuiver& q, const Representation& x, const TauPair& rigid);

bool is_prime(int p);

struct BruteForceBudget {
  int prime = 2;
  /// Upper bound on p^(dim X).
  std::uint64_t max_points = std::uint64_t{1} << 14;
  std::size_t max_submodules = 200000;
};

/// Same module in a basis where every arrow matrix is integral: the basis of
/// the lattice spanned by path images of the top generators.
Representation integral_form(const BoundQuiver& q, const Representation& x);

/// True when submodule_dim_vectors would accept x under the budget.
bool within_budget(const Representation& x, const BruteForceBudget& budget);

/// Dimension vectors of all subrepresentations of x over the field with p
/// elements. x is first brought to integral form. Throws LimitExceeded
/// beyond the budget and InputError if p is not prime.
std::set<std::vector<int>> submodule_dim_vectors(const BoundQuiver& q, const Representation& x,
                                                 const BruteForceBudget& budget = {});

bool is_semistable_bruteforce(const BoundQuiver& q, const Representation& x, const Vec& theta,
                              const BruteForceBudget& budget = {});
bool is_stable_bruteforce(const BoundQuiver& q, const Representation& x, const Vec& theta,
                          const BruteForceBudget& budget = {});

/// The theta_r-stable brick of slot r. Throws TheoremViolation when the
/// construction does not produce a semistable brick.
Representation brick_of_slot(const Context& ctx, const TauPair& pair, std::size_t r);

struct BrickSlate {
  TauPair pair;
  std::vector<Representation> bricks;  ///< one per slot
  IntMatrix g;
  IntMatrix c;
  IntMatrix x;  ///< columns [B_r]
  IntMatrix d;  ///< G^T X, diagonal with entries +-1
};

/// Throws TheoremViolation if G^T X is not diagonal +-1 or C != X D.
BrickSlate brick_slate(const Context& ctx, const TauPair& pair);

/// Bricks at the slots where D is +1.
std::vector<Representation> b_plus(const BrickSlate& slate);
IntVector d_diagonal(const BrickSlate& slate);

bool fac_contains(const BoundQuiver& q, const TauPair& pair, const Representation& x);
/// Membership in the smallest torsion class containing the bricks, by
/// repeatedly dividing out the trace.
bool minimal_torsion_contains(const BoundQuiver& q, const std::vector<Representation>& bricks,
                              const Representation& x);

struct Check {
  std::string name;
  bool passed = true;
  std::string witness;
  void fail(const std::string& w) {
    if (passed) witness = w;
    passed = false;
  }
};

/// Hom-orthogonality of B+ and agreement of Fac M with T(B+) on the probes
/// and on every M-summand.
std::vector<Check> verify_facm_theorem(const BoundQuiver& q, const BrickSlate& slate,
                                       const std::vector<Representation>& probes);

/// Index of the node whose B+ matches the given bricks up to isomorphism.
/// Throws InputError if the bricks are not pairwise Hom-orthogonal or the
/// graph is truncated.
std::optional<std::size_t> semibrick_to_pair(const BoundQuiver& q, const std::vector<Representation>& bricks,
                                             const ExchangeGraph& graph, const std::vector<BrickSlate>& slates);

/// dim Ext^1(X, Y) from a minimal projective presentation of X.
std::size_t ext1_dimension(const BoundQuiver& q, const Representation& x, const Representation& y);

/// A module E among the candidates fitting in a non-split sequence
/// 0 -> B -> E -> B -> 0.
std::optional<Representation> self_extension_witness(const BoundQuiver& q, const Representation& brick,
                                                     const std::vector<Representation>& candidates);

}  // namespace tautilt
