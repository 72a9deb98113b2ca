#pragma once

#include <string>
#include <vector>

#include "tautilt/algebra.hpp"
#include "tautilt/rational.hpp"

namespace tautilt {

/// A right A-module as a quiver representation. The matrix of an arrow
/// i -> j has shape dims[j] x dims[i].
struct Representation {
  std::vector<int> dims;
  std::vector<Mat> arrows;

  int total_dimension() const;
  IntVector dim_vector() const;
  bool is_zero() const { return total_dimension() == 0; }
};

/// One matrix per vertex, shape target.dims[i] x source.dims[i]. Source and
/// target are supplied by the caller.
struct ModuleMap {
  std::vector<Mat> vertex_maps;
};

Representation zero_representation(const BoundQuiver& q);

/// Throws InputError on shape mismatch or a violated relation.
void validate(const BoundQuiver& q, const Representation& m);
bool satisfies_relations(const BoundQuiver& q, const Representation& m);

/// Action of a path: the product of arrow matrices in reverse traversal order.
Mat path_matrix(const BoundQuiver& q, const Representation& m, const Path& path);
Mat basis_path_matrix(const BoundQuiver& q, const Representation& m, int basis_index);
/// Action of x in e_from A e_to as a map m_from -> m_to.
Mat element_matrix(const BoundQuiver& q, const Representation& m, int from, int to, const Element& x);

bool is_module_map(const BoundQuiver& q, const Representation& source, const Representation& target,
                   const ModuleMap& f);
ModuleMap identity_map(const Representation& m);
ModuleMap zero_map(const Representation& source, const Representation& target);
/// g after f.
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);
ModuleMap combine(const std::vector<ModuleMap>& maps, const std::vector<Rational>& coefficients,
                  const Representation& source, const Representation& target);
bool is_isomorphism(const ModuleMap& f);
bool is_injective(const ModuleMap& f);
bool is_surjective(const ModuleMap& f);

/// Dual module over the opposite algebra: transposed arrow matrices.
Representation dual(const Representation& m);

}  // namespace tautilt
