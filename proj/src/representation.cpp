#include "tautilt/representation.hpp"

#include <numeric>

#include "tautilt/errors.hpp"
#include "tautilt/linalg.hpp"

namespace tautilt {

int Representation::total_dimension() const { return std::accumulate(dims.begin(), dims.end(), 0); }

IntVector Representation::dim_vector() const {
  IntVector v(static_cast<Eigen::Index>(dims.size()));
  for (std::size_t i = 0; i < dims.size(); ++i) v(static_cast<Eigen::Index>(i)) = dims[i];
  return v;
}

Representation zero_representation(const BoundQuiver& q) {
  Representation m;
  m.dims.assign(static_cast<std::size_t>(q.vertex_count()), 0);
  for (std::size_t a = 0; a < q.arrows().size(); ++a) m.arrows.emplace_back(0, 0);
  return m;
}

namespace {

void check_shapes(const BoundQuiver& q, const Representation& m) {
  if (m.dims.size() != static_cast<std::size_t>(q.vertex_count()))
    throw InputError("module has " + std::to_string(m.dims.size()) + " vertex spaces, algebra has " +
                     std::to_string(q.vertex_count()) + " vertices");
  if (m.arrows.size() != q.arrows().size())
    throw InputError("module has " + std::to_string(m.arrows.size()) + " arrow maps, algebra has " +
                     std::to_string(q.arrows().size()) + " arrows");
  for (int d : m.dims)
    if (d < 0) throw InputError("negative vertex dimension");
  for (std::size_t a = 0; a < m.arrows.size(); ++a) {
    const Arrow& arr = q.arrows()[a];
    const Mat& mat = m.arrows[a];
    if (mat.rows() != m.dims[static_cast<std::size_t>(arr.target)] ||
        mat.cols() != m.dims[static_cast<std::size_t>(arr.source)])
      throw InputError("matrix of arrow " + arr.name + " has the wrong shape");
  }
}

}  // namespace

bool satisfies_relations(const BoundQuiver& q, const Representation& m) {
  for (const Relation& r : q.relations()) {
    const Path& shape = r.terms.front().second;
    Mat total = Mat::Zero(m.dims[static_cast<std::size_t>(shape.target)], m.dims[static_cast<std::size_t>(shape.source)]);
    for (const auto& [c, p] : r.terms) total += c * path_matrix(q, m, p);
    if (!linalg::is_zero(total)) return false;
  }
  return true;
}

void validate(const BoundQuiver& q, const Representation& m) {
  check_shapes(q, m);
  if (!satisfies_relations(q, m)) throw InputError("module does not satisfy the relations of the algebra");
}

Mat path_matrix(const BoundQuiver& /*q*/, const Representation& m, const Path& path) {
  const auto start = m.dims[static_cast<std::size_t>(path.source)];
  Mat acc = Mat::Identity(start, start);
  for (int a : path.arrows) acc = m.arrows[static_cast<std::size_t>(a)] * acc;
  return acc;
}

Mat basis_path_matrix(const BoundQuiver& q, const Representation& m, int basis_index) {
  return path_matrix(q, m, q.basis()[static_cast<std::size_t>(basis_index)]);
}

Mat element_matrix(const BoundQuiver& q, const Representation& m, int from, int to, const Element& x) {
  Mat acc = Mat::Zero(m.dims[static_cast<std::size_t>(to)], m.dims[static_cast<std::size_t>(from)]);
  for (const auto& [index, c] : x) acc += c * basis_path_matrix(q, m, index);
  return acc;
}

bool is_module_map(const BoundQuiver& q, const Representation& source, const Representation& target,
                   const ModuleMap& f) {
  if (f.vertex_maps.size() != source.dims.size()) return false;
  for (std::size_t i = 0; i < source.dims.size(); ++i) {
    if (f.vertex_maps[i].rows() != target.dims[i] || f.vertex_maps[i].cols() != source.dims[i]) return false;
  }
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const auto i = static_cast<std::size_t>(q.arrows()[a].source);
    const auto j = static_cast<std::size_t>(q.arrows()[a].target);
    if (target.arrows[a] * f.vertex_maps[i] != f.vertex_maps[j] * source.arrows[a]) return false;
  }
  return true;
}

ModuleMap identity_map(const Representation& m) {
  ModuleMap f;
  for (int d : m.dims) f.vertex_maps.push_back(Mat::Identity(d, d));
  return f;
}

ModuleMap zero_map(const Representation& source, const Representation& target) {
  ModuleMap f;
  for (std::size_t i = 0; i < source.dims.size(); ++i) f.vertex_maps.push_back(Mat::Zero(target.dims[i], source.dims[i]));
  return f;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  ModuleMap h;
  for (std::size_t i = 0; i < f.vertex_maps.size(); ++i) h.vertex_maps.push_back(g.vertex_maps[i] * f.vertex_maps[i]);
  return h;
}

ModuleMap combine(const std::vector<ModuleMap>& maps, const std::vector<Rational>& coefficients,
                  const Representation& source, const Representation& target) {
  ModuleMap out = zero_map(source, target);
  for (std::size_t k = 0; k < maps.size(); ++k) {
    if (coefficients[k] == 0) continue;
    for (std::size_t i = 0; i < out.vertex_maps.size(); ++i) out.vertex_maps[i] += coefficients[k] * maps[k].vertex_maps[i];
  }
  return out;
}

bool is_isomorphism(const ModuleMap& f) {
  for (const Mat& m : f.vertex_maps)
    if (m.rows() != m.cols() || linalg::rank(m) != m.rows()) return false;
  return true;
}

bool is_injective(const ModuleMap& f) {
  for (const Mat& m : f.vertex_maps)
    if (linalg::rank(m) != m.cols()) return false;
  return true;
}

bool is_surjective(const ModuleMap& f) {
  for (const Mat& m : f.vertex_maps)
    if (linalg::rank(m) != m.rows()) return false;
  return true;
}

Representation dual(const Representation& m) {
  Representation d;
  d.dims = m.dims;
  for (const Mat& a : m.arrows) d.arrows.push_back(a.transpose());
  return d;
}

}  // namespace tautilt
