#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "tautilt/algebra.hpp"
#include "tautilt/representation.hpp"

namespace tautilt {

/// An algebra paired with its opposite; each side's dual() is the other.
class Context {
 public:
  explicit Context(const BoundQuiver& q, std::uint64_t seed = 0);
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;
  ~Context();

  const BoundQuiver& algebra() const { return *q_; }
  const Context& dual() const { return *dual_; }
  std::uint64_t seed() const { return seed_; }

 private:
  Context(const BoundQuiver& q, const Context* back, std::uint64_t seed);

  const BoundQuiver* q_;
  std::unique_ptr<BoundQuiver> owned_opposite_;
  std::unique_ptr<Context> owned_dual_;
  const Context* dual_;
  std::uint64_t seed_;
};

/// (M, P) with M = sum of m_parts and P = sum of P(j) for j in p_parts.
/// Canonical order: M-parts by g-vector, lexicographically descending, then
/// P-parts by vertex ascending. Slot r indexes this concatenated order.
struct TauPair {
  std::vector<Representation> m_parts;
  std::vector<int> p_parts;
  std::vector<IntVector> m_g;
  int vertices = 0;

  std::size_t size() const { return m_parts.size() + p_parts.size(); }
  bool is_m_slot(std::size_t r) const { return r < m_parts.size(); }
};

/// Sorts the parts canonically and computes g-vectors. The parts must
/// already be indecomposable.
TauPair make_pair(const BoundQuiver& q, std::vector<Representation> m_parts, std::vector<int> p_parts);

/// Columns of G: g^{M_i} followed by -g^{P_j}. Used as the node identity.
std::vector<std::vector<std::int64_t>> pair_key(const TauPair& pair);

Representation m_module(const BoundQuiver& q, const TauPair& pair);
Representation p_module(const BoundQuiver& q, const TauPair& pair);

bool is_tau_rigid_pair(const BoundQuiver& q, const Representation& m, const std::vector<int>& p_vertices);
/// P must be projective; throws InputError otherwise.
bool is_tau_rigid_pair(const BoundQuiver& q, const Representation& m, const Representation& p);
bool is_tau_tilting(const BoundQuiver& q, const TauPair& pair);

/// Vertex j such that m is isomorphic to P(j), or -1.
int projective_vertex(const BoundQuiver& q, const Representation& m);

TauPair remove_summand(const TauPair& pair, std::size_t r);
/// The pair whose torsion class is Fac U for the almost pair (U, Q).
TauPair co_bongartz_completion(const Context& ctx, const TauPair& almost);
/// The completion with the larger torsion class.
TauPair bongartz_completion(const Context& ctx, const TauPair& almost);
/// (upper, lower) with Fac(upper) containing Fac(lower).
std::pair<TauPair, TauPair> complete_almost_pair(const Context& ctx, const TauPair& almost);

/// True when slot r is an M-summand outside Fac of the remaining M-summands,
/// i.e. `pair` is the upper completion of its r-th almost pair.
bool is_upper_at(const BoundQuiver& q, const TauPair& pair, std::size_t r);
TauPair mutate(const Context& ctx, const TauPair& pair, std::size_t r);
/// Slot of `to` holding the summand that is not in `from`, or -1.
int exchanged_slot(const TauPair& from, const TauPair& to);

TauPair regular_pair(const BoundQuiver& q);

IntMatrix g_matrix(const TauPair& pair);
/// Inverse transpose of G; throws TheoremViolation when |det G| != 1.
IntMatrix c_matrix(const TauPair& pair);
/// Per column: +1 positive, -1 negative, 0 mixed or zero.
std::vector<int> sign_coherence(const IntMatrix& c);

struct ExchangeEdge {
  int upper = 0;  ///< node with the larger torsion class
  int lower = 0;
  int upper_slot = 0;
  int lower_slot = 0;
  IntVector label;  ///< c-vector of the upper node at upper_slot
};

struct EnumerationLimits {
  std::size_t max_nodes = 10000;
  int max_dim = 30;
};

struct ExchangeGraph {
  std::vector<TauPair> nodes;
  std::vector<ExchangeEdge> edges;
  bool complete = false;
  std::string truncation_reason;
  std::string fingerprint;
};

ExchangeGraph enumerate_exchange_graph(const Context& ctx, const EnumerationLimits& limits = {});

/// Short human-readable descriptor such as "(1\2+2\3+3, 0)".
std::string describe_pair(const BoundQuiver& q, const TauPair& pair);

}  // namespace tautilt
