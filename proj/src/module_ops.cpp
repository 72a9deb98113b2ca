#include "tautilt/module_ops.hpp"

#include <algorithm>

#include "tautilt/errors.hpp"
#include "tautilt/linalg.hpp"

namespace tautilt {

namespace {

using linalg::Index;

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

/// Position of basis index `b` inside basis_between(from, to).
Index position(const BoundQuiver& q, int from, int to, int b) {
  const auto& list = q.basis_between(from, to);
  const auto it = std::lower_bound(list.begin(), list.end(), b);
  return static_cast<Index>(it - list.begin());
}

/// offsets[s][j]: first coordinate of summand s inside vertex j of a sum
/// whose summand s has basis basis_between(lookup(s, j)).
struct Layout {
  std::vector<std::vector<Index>> offset;
  std::vector<int> dims;
};

template <typename Block>
Layout make_layout(const BoundQuiver& q, std::size_t count, Block block_size) {
  Layout layout;
  const int n = q.vertex_count();
  layout.dims.assign(sz(n), 0);
  layout.offset.assign(count, std::vector<Index>(sz(n), 0));
  for (std::size_t s = 0; s < count; ++s)
    for (int j = 0; j < n; ++j) {
      layout.offset[s][sz(j)] = layout.dims[sz(j)];
      layout.dims[sz(j)] += static_cast<int>(block_size(s, j));
    }
  return layout;
}

Layout projective_layout(const BoundQuiver& q, const std::vector<int>& vertices) {
  return make_layout(q, vertices.size(),
                     [&](std::size_t s, int j) { return q.basis_between(vertices[s], j).size(); });
}

Layout injective_layout(const BoundQuiver& q, const std::vector<int>& vertices) {
  return make_layout(q, vertices.size(),
                     [&](std::size_t s, int k) { return q.basis_between(k, vertices[s]).size(); });
}

Representation empty_with_dims(const BoundQuiver& q, const std::vector<int>& dims) {
  Representation m;
  m.dims = dims;
  for (const Arrow& a : q.arrows()) m.arrows.push_back(Mat::Zero(dims[sz(a.target)], dims[sz(a.source)]));
  return m;
}

Mat stack_columns(const std::vector<Mat>& blocks, Index rows) {
  Index cols = 0;
  for (const Mat& b : blocks) cols += b.cols();
  Mat out(rows, cols);
  Index at = 0;
  for (const Mat& b : blocks) {
    if (b.cols() > 0) out.middleCols(at, b.cols()) = b;
    at += b.cols();
  }
  return out;
}

}  // namespace

Representation simple(const BoundQuiver& q, int vertex) {
  std::vector<int> dims(sz(q.vertex_count()), 0);
  dims[sz(vertex)] = 1;
  return empty_with_dims(q, dims);
}

Representation projective_sum(const BoundQuiver& q, const std::vector<int>& vertices) {
  const Layout layout = projective_layout(q, vertices);
  Representation m = empty_with_dims(q, layout.dims);
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const int j = q.arrows()[a].source;
    const int k = q.arrows()[a].target;
    const int arrow_basis = q.arrow_index(static_cast<int>(a));
    for (std::size_t s = 0; s < vertices.size(); ++s) {
      const int i = vertices[s];
      const auto& from = q.basis_between(i, j);
      for (std::size_t c = 0; c < from.size(); ++c) {
        for (const auto& [idx, coeff] : q.multiply(from[c], arrow_basis)) {
          const Index row = layout.offset[s][sz(k)] + position(q, i, k, idx);
          m.arrows[a](row, layout.offset[s][sz(j)] + static_cast<Index>(c)) = coeff;
        }
      }
    }
  }
  return m;
}

Representation projective(const BoundQuiver& q, int vertex) { return projective_sum(q, {vertex}); }

Representation injective_sum(const BoundQuiver& q, const std::vector<int>& vertices) {
  const Layout layout = injective_layout(q, vertices);
  Representation m = empty_with_dims(q, layout.dims);
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const int k = q.arrows()[a].source;
    const int l = q.arrows()[a].target;
    const int arrow_basis = q.arrow_index(static_cast<int>(a));
    for (std::size_t s = 0; s < vertices.size(); ++s) {
      const int i = vertices[s];
      const auto& targets = q.basis_between(l, i);
      // Entry [q*, y*] is the coefficient of y in a*q.
      for (std::size_t r = 0; r < targets.size(); ++r) {
        for (const auto& [idx, coeff] : q.multiply(arrow_basis, targets[r])) {
          const Index col = layout.offset[s][sz(k)] + position(q, k, i, idx);
          m.arrows[a](layout.offset[s][sz(l)] + static_cast<Index>(r), col) = coeff;
        }
      }
    }
  }
  return m;
}

Representation injective(const BoundQuiver& q, int vertex) { return injective_sum(q, {vertex}); }

ModuleMap projective_map(const BoundQuiver& q, const std::vector<int>& source, const std::vector<int>& target,
                         const PathCoefficients& x) {
  const Layout src = projective_layout(q, source);
  const Layout tgt = projective_layout(q, target);
  ModuleMap f;
  for (int j = 0; j < q.vertex_count(); ++j) {
    Mat block = Mat::Zero(tgt.dims[sz(j)], src.dims[sz(j)]);
    for (std::size_t t = 0; t < source.size(); ++t) {
      const auto& paths = q.basis_between(source[t], j);
      for (std::size_t c = 0; c < paths.size(); ++c) {
        const Element y{{paths[c], Rational(1)}};
        for (std::size_t s = 0; s < target.size(); ++s) {
          if (x[s][t].empty()) continue;
          for (const auto& [idx, coeff] : q.multiply(x[s][t], y))
            block(tgt.offset[s][sz(j)] + position(q, target[s], j, idx), src.offset[t][sz(j)] + static_cast<Index>(c)) +=
                coeff;
        }
      }
    }
    f.vertex_maps.push_back(std::move(block));
  }
  return f;
}

ModuleMap nakayama_on_map(const BoundQuiver& q, const std::vector<int>& source, const std::vector<int>& target,
                          const PathCoefficients& x) {
  const Layout src = injective_layout(q, source);
  const Layout tgt = injective_layout(q, target);
  ModuleMap f;
  for (int k = 0; k < q.vertex_count(); ++k) {
    Mat block = Mat::Zero(tgt.dims[sz(k)], src.dims[sz(k)]);
    for (std::size_t s = 0; s < target.size(); ++s) {
      const auto& rows = q.basis_between(k, target[s]);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        const Element z{{rows[r], Rational(1)}};
        for (std::size_t t = 0; t < source.size(); ++t) {
          if (x[s][t].empty()) continue;
          // Entry [q*, y*] is the coefficient of y in q*x.
          for (const auto& [idx, coeff] : q.multiply(z, x[s][t]))
            block(tgt.offset[s][sz(k)] + static_cast<Index>(r), src.offset[t][sz(k)] + position(q, k, source[t], idx)) +=
                coeff;
        }
      }
    }
    f.vertex_maps.push_back(std::move(block));
  }
  return f;
}

std::vector<ModuleMap> hom_basis(const BoundQuiver& q, const Representation& m, const Representation& n) {
  if (m.dims.size() != n.dims.size() || m.dims.size() != sz(q.vertex_count()))
    throw InputError("modules over different algebras");
  const int vertices = q.vertex_count();
  std::vector<Index> offset(sz(vertices) + 1, 0);
  for (int i = 0; i < vertices; ++i) offset[sz(i) + 1] = offset[sz(i)] + Index{n.dims[sz(i)]} * m.dims[sz(i)];
  const Index unknowns = offset.back();
  if (unknowns == 0) return {};

  Index equations = 0;
  for (const Arrow& a : q.arrows()) equations += Index{n.dims[sz(a.target)]} * m.dims[sz(a.source)];
  Mat system = Mat::Zero(equations, unknowns);
  // F_i is stored column-major: F_i(r, c) sits at offset[i] + c * n_i + r.
  Index row = 0;
  for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
    const auto i = sz(q.arrows()[ai].source);
    const auto j = sz(q.arrows()[ai].target);
    const Mat& na = n.arrows[ai];
    const Mat& ma = m.arrows[ai];
    const Index ni = n.dims[i], nj = n.dims[j], mi = m.dims[i], mj = m.dims[j];
    for (Index c = 0; c < mi; ++c)
      for (Index r = 0; r < nj; ++r, ++row) {
        for (Index k = 0; k < ni; ++k)
          if (na(r, k) != 0) system(row, offset[i] + c * ni + k) += na(r, k);
        for (Index k = 0; k < mj; ++k)
          if (ma(k, c) != 0) system(row, offset[j] + k * nj + r) -= ma(k, c);
      }
  }
  const Mat kernel = linalg::nullspace(system);
  std::vector<ModuleMap> basis;
  for (Index col = 0; col < kernel.cols(); ++col) {
    ModuleMap f;
    for (int v = 0; v < vertices; ++v) {
      const Index rows = n.dims[sz(v)], cols = m.dims[sz(v)];
      Mat block(rows, cols);
      for (Index c = 0; c < cols; ++c)
        for (Index r = 0; r < rows; ++r) block(r, c) = kernel(offset[sz(v)] + c * rows + r, col);
      f.vertex_maps.push_back(std::move(block));
    }
    basis.push_back(std::move(f));
  }
  return basis;
}

std::size_t hom_dimension(const BoundQuiver& q, const Representation& m, const Representation& n) {
  return hom_basis(q, m, n).size();
}

Subrepresentation subrepresentation(const BoundQuiver& q, const Representation& m, const std::vector<Mat>& spans) {
  Subrepresentation sub;
  for (std::size_t i = 0; i < spans.size(); ++i) sub.inclusion.push_back(linalg::column_space(spans[i]));
  for (const Mat& b : sub.inclusion) sub.module.dims.push_back(static_cast<int>(b.cols()));
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const auto i = sz(q.arrows()[a].source);
    const auto j = sz(q.arrows()[a].target);
    const Mat moved = m.arrows[a] * sub.inclusion[i];
    try {
      sub.module.arrows.push_back(linalg::solve(sub.inclusion[j], moved));
    } catch (const std::domain_error&) {
      throw InputError("subspace is not closed under arrow " + q.arrows()[a].name);
    }
  }
  return sub;
}

Subrepresentation generated_submodule(const BoundQuiver& q, const Representation& m, const std::vector<Mat>& spans) {
  std::vector<Mat> current;
  for (const Mat& s : spans) current.push_back(linalg::column_space(s));
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
      const auto i = sz(q.arrows()[a].source);
      const auto j = sz(q.arrows()[a].target);
      if (current[i].cols() == 0) continue;
      Mat next = linalg::sum_space(current[j], Mat(m.arrows[a] * current[i]));
      if (next.cols() > current[j].cols()) {
        current[j] = std::move(next);
        grew = true;
      }
    }
  }
  return subrepresentation(q, m, current);
}

Quotient quotient(const BoundQuiver& q, const Representation& m, const std::vector<Mat>& sub_spans) {
  Quotient out;
  std::vector<Mat> subs;
  for (std::size_t i = 0; i < sub_spans.size(); ++i) {
    const Mat s = linalg::column_space(sub_spans[i]);
    const Mat c = linalg::complement_basis(s);
    const Mat inv = linalg::inverse(linalg::hcat(s, c));
    out.projection.push_back(inv.bottomRows(c.cols()));
    out.section.push_back(c);
    out.module.dims.push_back(static_cast<int>(c.cols()));
  }
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const auto i = sz(q.arrows()[a].source);
    const auto j = sz(q.arrows()[a].target);
    out.module.arrows.push_back(out.projection[j] * m.arrows[a] * out.section[i]);
  }
  return out;
}

Subrepresentation kernel(const BoundQuiver& q, const Representation& source, const ModuleMap& f) {
  std::vector<Mat> spans;
  for (const Mat& fi : f.vertex_maps) spans.push_back(linalg::nullspace(fi));
  return subrepresentation(q, source, spans);
}

Subrepresentation image(const BoundQuiver& q, const Representation& target, const ModuleMap& f) {
  return subrepresentation(q, target, f.vertex_maps);
}

Quotient cokernel(const BoundQuiver& q, const Representation& target, const ModuleMap& f) {
  return quotient(q, target, f.vertex_maps);
}

Representation direct_sum(const BoundQuiver& q, const std::vector<Representation>& parts) {
  std::vector<int> dims(sz(q.vertex_count()), 0);
  for (const auto& p : parts)
    for (std::size_t i = 0; i < dims.size(); ++i) dims[i] += p.dims[i];
  Representation out = empty_with_dims(q, dims);
  std::vector<Index> at(dims.size(), 0);
  for (const auto& p : parts) {
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
      const auto i = sz(q.arrows()[a].source);
      const auto j = sz(q.arrows()[a].target);
      if (p.arrows[a].size() > 0) out.arrows[a].block(at[j], at[i], p.dims[j], p.dims[i]) = p.arrows[a];
    }
    for (std::size_t i = 0; i < dims.size(); ++i) at[i] += p.dims[i];
  }
  return out;
}

Representation power(const BoundQuiver& q, const Representation& m, int copies) {
  return direct_sum(q, std::vector<Representation>(sz(copies), m));
}

Subrepresentation radical(const BoundQuiver& q, const Representation& m) {
  std::vector<std::vector<Mat>> incoming(m.dims.size());
  for (std::size_t a = 0; a < q.arrows().size(); ++a) incoming[sz(q.arrows()[a].target)].push_back(m.arrows[a]);
  std::vector<Mat> spans;
  for (std::size_t j = 0; j < m.dims.size(); ++j) spans.push_back(stack_columns(incoming[j], m.dims[j]));
  return subrepresentation(q, m, spans);
}

Quotient top(const BoundQuiver& q, const Representation& m) { return quotient(q, m, radical(q, m).inclusion); }

Subrepresentation socle(const BoundQuiver& q, const Representation& m) {
  std::vector<Mat> spans;
  for (std::size_t i = 0; i < m.dims.size(); ++i) {
    Mat outgoing(0, m.dims[i]);
    for (std::size_t a = 0; a < q.arrows().size(); ++a)
      if (sz(q.arrows()[a].source) == i) outgoing = linalg::vcat(outgoing, m.arrows[a]);
    spans.push_back(linalg::nullspace(outgoing));
  }
  return subrepresentation(q, m, spans);
}

std::vector<IntVector> radical_layers(const BoundQuiver& q, const Representation& m) {
  std::vector<IntVector> layers;
  Representation current = m;
  while (!current.is_zero()) {
    Subrepresentation rad = radical(q, current);
    layers.push_back(current.dim_vector() - rad.module.dim_vector());
    current = std::move(rad.module);
  }
  return layers;
}

std::vector<IntVector> socle_layers(const BoundQuiver& q, const Representation& m) {
  std::vector<IntVector> layers;
  Representation current = m;
  while (!current.is_zero()) {
    const Subrepresentation soc = socle(q, current);
    layers.push_back(soc.module.dim_vector());
    current = quotient(q, current, soc.inclusion).module;
  }
  return layers;
}

std::string loewy_name(const BoundQuiver& q, const Representation& m) {
  if (m.is_zero()) return "0";
  const bool wide = q.vertex_count() >= 10;
  std::string out;
  for (const IntVector& layer : radical_layers(q, m)) {
    if (!out.empty()) out += '\\';
    std::string part;
    for (Index i = 0; i < layer.size(); ++i)
      for (std::int64_t c = 0; c < layer(i); ++c) {
        if (wide && !part.empty()) part += ',';
        part += std::to_string(i + 1);
      }
    out += part;
  }
  return out;
}

ProjectivePresentation minimal_projective_presentation(const BoundQuiver& q, const Representation& m) {
  ProjectivePresentation pres;
  const int n = q.vertex_count();
  const Subrepresentation rad = radical(q, m);
  for (int i = 0; i < n; ++i) {
    const Mat gens = linalg::complement_basis(rad.inclusion[sz(i)]);
    for (Index c = 0; c < gens.cols(); ++c) {
      pres.p0.push_back(i);
      pres.generators.push_back(gens.col(c));
    }
  }
  const Layout layout = projective_layout(q, pres.p0);
  Representation p0 = projective_sum(q, pres.p0);
  ModuleMap cover;
  for (int j = 0; j < n; ++j) {
    Mat block(m.dims[sz(j)], layout.dims[sz(j)]);
    for (std::size_t s = 0; s < pres.p0.size(); ++s) {
      const auto& paths = q.basis_between(pres.p0[s], j);
      for (std::size_t c = 0; c < paths.size(); ++c)
        block.col(layout.offset[s][sz(j)] + static_cast<Index>(c)) = basis_path_matrix(q, m, paths[c]) * pres.generators[s];
    }
    cover.vertex_maps.push_back(std::move(block));
  }
  const Subrepresentation ker = kernel(q, p0, cover);
  const Subrepresentation ker_rad = radical(q, ker.module);
  for (int u = 0; u < n; ++u) {
    const Mat gens = linalg::complement_basis(ker_rad.inclusion[sz(u)]);
    for (Index c = 0; c < gens.cols(); ++c) {
      const Vec k = ker.inclusion[sz(u)] * gens.col(c);
      pres.p1.push_back(u);
      std::vector<Element> column(pres.p0.size());
      for (std::size_t s = 0; s < pres.p0.size(); ++s) {
        const auto& paths = q.basis_between(pres.p0[s], u);
        for (std::size_t r = 0; r < paths.size(); ++r) {
          const Rational& v = k(layout.offset[s][sz(u)] + static_cast<Index>(r));
          if (v != 0) column[s][paths[r]] = v;
        }
      }
      if (pres.map.empty()) pres.map.assign(pres.p0.size(), {});
      for (std::size_t s = 0; s < pres.p0.size(); ++s) pres.map[s].push_back(std::move(column[s]));
    }
  }
  if (pres.map.empty()) pres.map.assign(pres.p0.size(), {});
  return pres;
}

IntVector g_vector(const BoundQuiver& q, const Representation& m) {
  const auto pres = minimal_projective_presentation(q, m);
  IntVector g = IntVector::Zero(q.vertex_count());
  for (int v : pres.p0) g(v) += 1;
  for (int v : pres.p1) g(v) -= 1;
  return g;
}

bool is_projective(const BoundQuiver& q, const Representation& m) {
  return minimal_projective_presentation(q, m).p1.empty();
}

Representation tau(const BoundQuiver& q, const Representation& m) {
  const auto pres = minimal_projective_presentation(q, m);
  if (pres.p1.empty()) return zero_representation(q);
  const ModuleMap nu = nakayama_on_map(q, pres.p1, pres.p0, pres.map);
  return kernel(q, injective_sum(q, pres.p1), nu).module;
}

Element opposite_element(const BoundQuiver& q, const BoundQuiver& op, const Element& x) {
  Element out;
  for (const auto& [idx, c] : x) {
    const Path& p = q.basis()[sz(idx)];
    const Path reversed{p.target, p.source, {p.arrows.rbegin(), p.arrows.rend()}};
    for (const auto& [j, d] : op.reduce(reversed)) {
      Rational& slot = out[j];
      slot += c * d;
      if (slot == 0) out.erase(j);
    }
  }
  return out;
}

Representation transpose(const BoundQuiver& q, const BoundQuiver& op, const Representation& m) {
  const auto pres = minimal_projective_presentation(q, m);
  if (pres.p1.empty()) return zero_representation(op);
  PathCoefficients dual_map(pres.p1.size(), std::vector<Element>(pres.p0.size()));
  for (std::size_t s = 0; s < pres.p0.size(); ++s)
    for (std::size_t t = 0; t < pres.p1.size(); ++t) dual_map[t][s] = opposite_element(q, op, pres.map[s][t]);
  const ModuleMap f = projective_map(op, pres.p0, pres.p1, dual_map);
  return cokernel(op, projective_sum(op, pres.p1), f).module;
}

std::int64_t ar_pairing(const BoundQuiver& q, const Representation& m, const Representation& n) {
  return g_vector(q, m).dot(n.dim_vector());
}

Subrepresentation trace(const BoundQuiver& q, const std::vector<Representation>& generators, const Representation& x) {
  std::vector<std::vector<Mat>> images(x.dims.size());
  for (const Representation& g : generators)
    for (const ModuleMap& h : hom_basis(q, g, x))
      for (std::size_t i = 0; i < x.dims.size(); ++i) images[i].push_back(h.vertex_maps[i]);
  std::vector<Mat> spans;
  for (std::size_t i = 0; i < x.dims.size(); ++i) spans.push_back(stack_columns(images[i], x.dims[i]));
  return subrepresentation(q, x, spans);
}

Subrepresentation trace(const BoundQuiver& q, const Representation& n, const Representation& x) {
  return trace(q, std::vector<Representation>{n}, x);
}

namespace {

Mat flatten(const std::vector<ModuleMap>& maps) {
  if (maps.empty()) return Mat(0, 0);
  Index length = 0;
  for (const Mat& b : maps.front().vertex_maps) length += b.size();
  Mat out(length, static_cast<Index>(maps.size()));
  for (std::size_t k = 0; k < maps.size(); ++k) {
    Index at = 0;
    for (const Mat& b : maps[k].vertex_maps)
      for (Index c = 0; c < b.cols(); ++c)
        for (Index r = 0; r < b.rows(); ++r) out(at++, static_cast<Index>(k)) = b(r, c);
  }
  return out;
}

ModuleMap assemble_right(const BoundQuiver& q, const std::vector<ModuleMap>& parts, const Representation& x) {
  ModuleMap f;
  for (int v = 0; v < q.vertex_count(); ++v) {
    std::vector<Mat> blocks;
    for (const ModuleMap& p : parts) blocks.push_back(p.vertex_maps[sz(v)]);
    f.vertex_maps.push_back(stack_columns(blocks, x.dims[sz(v)]));
  }
  return f;
}

bool factors_all(const BoundQuiver& q, const std::vector<Representation>& generators, const Representation& source,
                 const ModuleMap& f, const Representation& x) {
  for (const Representation& g : generators) {
    const std::size_t want = hom_dimension(q, g, x);
    if (want == 0) continue;
    std::vector<ModuleMap> composed;
    for (const ModuleMap& h : hom_basis(q, g, source)) composed.push_back(compose(f, h));
    if (composed.empty() || static_cast<std::size_t>(linalg::rank(flatten(composed))) != want) return false;
  }
  return true;
}

}  // namespace

Approximation minimal_right_approximation(const BoundQuiver& q, const std::vector<Representation>& generators,
                                          const Representation& x) {
  std::vector<ModuleMap> parts;
  std::vector<int> owners;
  for (std::size_t k = 0; k < generators.size(); ++k)
    for (ModuleMap& h : hom_basis(q, generators[k], x)) {
      parts.push_back(std::move(h));
      owners.push_back(static_cast<int>(k));
    }
  auto build = [&](const std::vector<std::size_t>& keep) {
    Approximation approx;
    std::vector<Representation> sources;
    std::vector<ModuleMap> kept;
    for (std::size_t i : keep) {
      sources.push_back(generators[sz(owners[i])]);
      kept.push_back(parts[i]);
      approx.summands.push_back(owners[i]);
    }
    approx.source = sources.empty() ? zero_representation(q) : direct_sum(q, sources);
    approx.map = kept.empty() ? zero_map(approx.source, x) : assemble_right(q, kept, x);
    return approx;
  };
  std::vector<std::size_t> keep(parts.size());
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
  for (std::size_t drop = keep.size(); drop-- > 0;) {
    std::vector<std::size_t> trial;
    for (std::size_t i : keep)
      if (i != drop) trial.push_back(i);
    const Approximation candidate = build(trial);
    if (factors_all(q, generators, candidate.source, candidate.map, x)) keep = std::move(trial);
  }
  return build(keep);
}

LeftApproximation left_approximation(const BoundQuiver& q, const Representation& x,
                                     const std::vector<Representation>& generators) {
  std::vector<Representation> targets;
  std::vector<ModuleMap> parts;
  for (const Representation& g : generators)
    for (ModuleMap& h : hom_basis(q, x, g)) {
      targets.push_back(g);
      parts.push_back(std::move(h));
    }
  LeftApproximation out;
  out.target = targets.empty() ? zero_representation(q) : direct_sum(q, targets);
  for (int v = 0; v < q.vertex_count(); ++v) {
    Mat block(0, x.dims[sz(v)]);
    for (const ModuleMap& p : parts) block = linalg::vcat(block, p.vertex_maps[sz(v)]);
    out.map.vertex_maps.push_back(std::move(block));
  }
  return out;
}

}  // namespace tautilt
