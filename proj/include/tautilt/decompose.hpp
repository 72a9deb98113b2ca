#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tautilt/algebra.hpp"
#include "tautilt/module_ops.hpp"

namespace tautilt {

struct Summand {
  Representation module;
  int multiplicity = 1;
};

/// Krull-Schmidt decomposition, one entry per isomorphism class, ordered by
/// dimension vector and then by layer invariants. Throws Error when no
/// splitting endomorphism with a rational eigenvalue is found.
std::vector<Summand> decompose(const BoundQuiver& q, const Representation& m, std::uint64_t seed = 0);

/// Indecomposable summands with repetition, in the same order.
std::vector<Representation> indecomposable_summands(const BoundQuiver& q, const Representation& m,
                                                    std::uint64_t seed = 0);

bool is_indecomposable(const BoundQuiver& q, const Representation& m, std::uint64_t seed = 0);
bool is_brick(const BoundQuiver& q, const Representation& m);
bool is_isomorphic(const BoundQuiver& q, const Representation& a, const Representation& b, std::uint64_t seed = 0);

/// Drops repeated isomorphism classes, keeping the first representative.
std::vector<Representation> basic_part(const BoundQuiver& q, const std::vector<Representation>& parts,
                                       std::uint64_t seed = 0);

/// Split m = K + I along the Fitting decomposition of phi - lambda for some
/// rational eigenvalue lambda, if that gives two non-zero pieces.
std::optional<std::pair<Subrepresentation, Subrepresentation>> fitting_split(const BoundQuiver& q,
                                                                             const Representation& m,
                                                                             const ModuleMap& phi);

/// Basis of the Jacobson radical of End(m), as endomorphisms.
std::vector<ModuleMap> endomorphism_radical(const BoundQuiver& q, const Representation& m);

/// Total order used for canonical output: dimension vector, then radical
/// and socle layers, then dim End.
bool canonical_less(const BoundQuiver& q, const Representation& a, const Representation& b);

/// Rational roots of a polynomial given by coefficients c0 + c1 x + ...
std::vector<Rational> rational_roots(std::vector<Rational> coefficients);
/// Characteristic polynomial det(x I - a), coefficients lowest degree first.
std::vector<Rational> characteristic_polynomial(const Mat& a);

}  // namespace tautilt
