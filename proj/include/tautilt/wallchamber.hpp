#pragma once

#include <array>
#include <string>
#include <vector>

#include "tautilt/stability.hpp"
#include "tautilt/tau_tilting.hpp"

namespace tautilt {

struct Chamber {
  std::size_t node = 0;
  IntMatrix generators;  ///< columns of G
  IntMatrix normals;     ///< columns of C, same slot order
};

/// Throws TheoremViolation unless C^T G is the identity.
Chamber chamber_of_pair(std::size_t node, const TauPair& pair);

struct Wall {
  IntVector normal;                ///< [B]
  std::vector<IntVector> facets;   ///< proper non-zero submodule classes L, <theta, L> <= 0
  Representation brick;
};

Wall wall_of_brick(const BoundQuiver& q, const Representation& brick, const BruteForceBudget& budget = {});

struct EdgeLabel {
  IntVector c_vector;
  Representation brick;
  std::size_t upper = 0;  ///< node on the side where the c-vector is positive
  std::size_t lower = 0;
};

/// Label of the wall between two adjacent nodes. Throws InputError if the
/// nodes differ in more than one summand.
EdgeLabel shared_wall(const ExchangeGraph& graph, const std::vector<BrickSlate>& slates, std::size_t a,
                      std::size_t b);

struct Fan {
  std::vector<Chamber> chambers;
  std::vector<Wall> walls;  ///< one per brick isomorphism class
  bool complete = false;
};

Fan build_fan(const BoundQuiver& q, const ExchangeGraph& graph, const std::vector<BrickSlate>& slates,
              const BruteForceBudget& budget = {});

std::string emit_dot(const BoundQuiver& q, const ExchangeGraph& graph, const std::vector<BrickSlate>& slates);

inline constexpr int kFanSchemaVersion = 1;
std::string emit_fan_json(const BoundQuiver& q, const ExchangeGraph& graph, const Fan& fan);

/// Stereographic picture of the walls on the unit sphere, projected from
/// the normalized `pole` onto the tangent plane at its antipode. Rank 3 only.
std::string emit_svg_stereographic(const BoundQuiver& q, const ExchangeGraph& graph, const Fan& fan,
                                   const std::array<double, 3>& pole = {1.0, 1.0, 1.0});

}  // namespace tautilt
