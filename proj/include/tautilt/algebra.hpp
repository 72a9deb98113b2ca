#pragma once

// Bound quiver algebras A = kQ/I with a computed path basis.
//
// Conventions: vertices are 0-based internally and 1-based in text. A path
// a*b traverses a and then b. Modules are right modules, so the projective
// P(i) is spanned by the basis paths starting at i.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tautilt/rational.hpp"

namespace tautilt {

struct Arrow {
  std::string name;
  int source = 0;
  int target = 0;
};

struct Path {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;  ///< arrow indices in traversal order; empty for e_source

  std::size_t length() const { return arrows.size(); }
  bool operator==(const Path&) const = default;
  auto operator<=>(const Path&) const = default;
};

struct Relation {
  std::vector<std::pair<Rational, Path>> terms;
};

/// Sparse algebra element in path-basis coordinates.
using Element = std::map<int, Rational>;

struct AlgebraLimits {
  int max_path_length = 60;
  std::size_t max_paths = 20000;
};

class BoundQuiver {
 public:
  /// Validates the presentation and computes the path basis. Throws
  /// InputError for non-parallel relations or a non-admissible ideal.
  BoundQuiver(int vertices, std::vector<Arrow> arrows, std::vector<Relation> relations,
              AlgebraLimits limits = {});

  int vertex_count() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::vector<Relation>& relations() const { return relations_; }
  std::optional<int> find_arrow(std::string_view name) const;

  const std::vector<Path>& basis() const { return basis_; }
  std::size_t dimension() const { return basis_.size(); }
  /// Basis indices of paths from `from` to `to`, i.e. a basis of e_from A e_to.
  const std::vector<int>& basis_between(int from, int to) const;
  int trivial_index(int vertex) const { return trivial_index_[static_cast<std::size_t>(vertex)]; }
  int arrow_index(int arrow) const { return arrow_index_[static_cast<std::size_t>(arrow)]; }
  /// Length of the longest non-zero path.
  int loewy_bound() const { return loewy_bound_; }

  /// Normal form of an arbitrary path.
  Element reduce(const Path& path) const;
  const Element& multiply(int left, int right) const;
  Element multiply(const Element& left, const Element& right) const;

  /// Same arrow names reversed, relations reversed.
  BoundQuiver opposite() const;

  std::string path_name(const Path& path) const;
  std::string to_text() const;
  /// Short stable digest of the presentation, for report metadata.
  std::string fingerprint() const;

 private:
  void compute_basis(const AlgebraLimits& limits);

  int vertices_;
  std::vector<Arrow> arrows_;
  std::vector<Relation> relations_;
  AlgebraLimits limits_;

  std::vector<Path> basis_;
  std::map<Path, Element> normal_forms_;
  std::size_t truncation_ = 0;  ///< paths longer than this are zero
  int loewy_bound_ = 0;
  std::vector<int> trivial_index_;
  std::vector<int> arrow_index_;
  std::vector<std::vector<std::vector<int>>> between_;
  std::vector<std::vector<Element>> products_;
};

/// Parses the line-oriented algebra format:
///   vertices <n>
///   arrow <name>: <i> -> <j>
///   relation [c1] <path1> [+|- [c2] <path2> ...]
/// `#` starts a comment. Throws ParseError with a line number.
BoundQuiver parse_algebra(std::string_view text, AlgebraLimits limits = {});

}  // namespace tautilt
