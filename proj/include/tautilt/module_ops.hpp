#pragma once

// Homological operations on representations of a bound quiver algebra.

#include <cstdint>
#include <vector>

#include "tautilt/algebra.hpp"
#include "tautilt/representation.hpp"

namespace tautilt {

/// A subrepresentation together with its inclusion; inclusion[i] has the
/// ambient coordinates of the sub's basis vectors at vertex i as columns.
struct Subrepresentation {
  Representation module;
  std::vector<Mat> inclusion;
};

/// A quotient with its projection and a section of the projection.
struct Quotient {
  Representation module;
  std::vector<Mat> projection;
  std::vector<Mat> section;
};

/// Path coefficients of a map between sums of indecomposable projectives:
/// entry [s][t] lies in e_{target[s]} A e_{source[t]} and the component
/// P(source[t]) -> P(target[s]) is left multiplication by it.
using PathCoefficients = std::vector<std::vector<Element>>;

struct ProjectivePresentation {
  std::vector<int> p0;  ///< vertex of each summand of P0, ascending
  std::vector<int> p1;  ///< vertex of each summand of P1, ascending
  PathCoefficients map;  ///< P1 -> P0
  std::vector<Vec> generators;  ///< image in M of the top of each P0 summand
};

Representation simple(const BoundQuiver& q, int vertex);
Representation projective(const BoundQuiver& q, int vertex);
Representation injective(const BoundQuiver& q, int vertex);
Representation projective_sum(const BoundQuiver& q, const std::vector<int>& vertices);
Representation injective_sum(const BoundQuiver& q, const std::vector<int>& vertices);

ModuleMap projective_map(const BoundQuiver& q, const std::vector<int>& source, const std::vector<int>& target,
                         const PathCoefficients& x);
/// The Nakayama functor on a map between projectives, given in path coordinates.
ModuleMap nakayama_on_map(const BoundQuiver& q, const std::vector<int>& source, const std::vector<int>& target,
                          const PathCoefficients& x);

std::vector<ModuleMap> hom_basis(const BoundQuiver& q, const Representation& m, const Representation& n);
std::size_t hom_dimension(const BoundQuiver& q, const Representation& m, const Representation& n);

/// Subrepresentation spanned by the given per-vertex columns, which must
/// already be closed under the arrows.
Subrepresentation subrepresentation(const BoundQuiver& q, const Representation& m, const std::vector<Mat>& spans);
/// Smallest subrepresentation containing the given per-vertex columns.
Subrepresentation generated_submodule(const BoundQuiver& q, const Representation& m, const std::vector<Mat>& spans);
Quotient quotient(const BoundQuiver& q, const Representation& m, const std::vector<Mat>& sub_spans);

Subrepresentation kernel(const BoundQuiver& q, const Representation& source, const ModuleMap& f);
Subrepresentation image(const BoundQuiver& q, const Representation& target, const ModuleMap& f);
Quotient cokernel(const BoundQuiver& q, const Representation& target, const ModuleMap& f);

Representation direct_sum(const BoundQuiver& q, const std::vector<Representation>& parts);
Representation power(const BoundQuiver& q, const Representation& m, int copies);

Subrepresentation radical(const BoundQuiver& q, const Representation& m);
Quotient top(const BoundQuiver& q, const Representation& m);
Subrepresentation socle(const BoundQuiver& q, const Representation& m);
/// Dimension vectors of the successive radical layers.
std::vector<IntVector> radical_layers(const BoundQuiver& q, const Representation& m);
std::vector<IntVector> socle_layers(const BoundQuiver& q, const Representation& m);
/// Layer notation such as 1\2 for the module with top 1 and socle 2.
std::string loewy_name(const BoundQuiver& q, const Representation& m);

bool is_projective(const BoundQuiver& q, const Representation& m);

ProjectivePresentation minimal_projective_presentation(const BoundQuiver& q, const Representation& m);
IntVector g_vector(const BoundQuiver& q, const Representation& m);
Representation tau(const BoundQuiver& q, const Representation& m);
/// Auslander-Bridger transpose, a module over `op` (the opposite algebra
/// with matching arrow indices).
Representation transpose(const BoundQuiver& q, const BoundQuiver& op, const Representation& m);
/// Image of an element of A in the opposite algebra.
Element opposite_element(const BoundQuiver& q, const BoundQuiver& op, const Element& x);

/// <g^M, [N]>.
std::int64_t ar_pairing(const BoundQuiver& q, const Representation& m, const Representation& n);

/// Sum of the images of all maps n -> x.
Subrepresentation trace(const BoundQuiver& q, const Representation& n, const Representation& x);
/// Sum of the images of all maps from any of `generators` to x.
Subrepresentation trace(const BoundQuiver& q, const std::vector<Representation>& generators, const Representation& x);

/// f: N' -> X with N' in add(generators); every map from a generator to X
/// factors through f, and no copy of a generator can be dropped.
struct Approximation {
  Representation source;
  std::vector<int> summands;  ///< index into generators of each copy in source
  ModuleMap map;
};
Approximation minimal_right_approximation(const BoundQuiver& q, const std::vector<Representation>& generators,
                                          const Representation& x);
/// f: X -> N' with N' in add(generators); every map from X to a generator
/// factors through f. Not pruned.
struct LeftApproximation {
  Representation target;
  ModuleMap map;
};
LeftApproximation left_approximation(const BoundQuiver& q, const Representation& x,
                                     const std::vector<Representation>& generators);

}  // namespace tautilt
