#include "tautilt/tau_tilting.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "tautilt/decompose.hpp"
#include "tautilt/errors.hpp"
#include "tautilt/linalg.hpp"
#include "tautilt/module_ops.hpp"

namespace tautilt {

Context::Context(const BoundQuiver& q, std::uint64_t seed)
    : q_(&q), owned_opposite_(std::make_unique<BoundQuiver>(q.opposite())), seed_(seed) {
  owned_dual_.reset(new Context(*owned_opposite_, this, seed));
  dual_ = owned_dual_.get();
}

Context::Context(const BoundQuiver& q, const Context* back, std::uint64_t seed) : q_(&q), dual_(back), seed_(seed) {}

Context::~Context() = default;

namespace {

std::vector<std::int64_t> column(const IntVector& v) { return to_std(v); }

bool slot_nonzero_at(const Representation& m, int vertex) { return m.dims[static_cast<std::size_t>(vertex)] != 0; }

}  // namespace

TauPair make_pair(const BoundQuiver& q, std::vector<Representation> m_parts, std::vector<int> p_parts) {
  std::vector<IntVector> gs;
  for (const Representation& m : m_parts) gs.push_back(g_vector(q, m));
  std::vector<std::size_t> order(m_parts.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return column(gs[a]) > column(gs[b]); });
  TauPair pair;
  pair.vertices = q.vertex_count();
  for (std::size_t i : order) {
    pair.m_parts.push_back(std::move(m_parts[i]));
    pair.m_g.push_back(gs[i]);
  }
  std::sort(p_parts.begin(), p_parts.end());
  p_parts.erase(std::unique(p_parts.begin(), p_parts.end()), p_parts.end());
  pair.p_parts = std::move(p_parts);
  return pair;
}

std::vector<std::vector<std::int64_t>> pair_key(const TauPair& pair) {
  std::vector<std::vector<std::int64_t>> key;
  for (const IntVector& g : pair.m_g) key.push_back(column(g));
  for (int j : pair.p_parts) {
    std::vector<std::int64_t> e(static_cast<std::size_t>(pair.vertices), 0);
    e[static_cast<std::size_t>(j)] = -1;
    key.push_back(std::move(e));
  }
  return key;
}

Representation m_module(const BoundQuiver& q, const TauPair& pair) {
  return pair.m_parts.empty() ? zero_representation(q) : direct_sum(q, pair.m_parts);
}

Representation p_module(const BoundQuiver& q, const TauPair& pair) { return projective_sum(q, pair.p_parts); }

bool is_tau_rigid_pair(const BoundQuiver& q, const Representation& m, const std::vector<int>& p_vertices) {
  for (int j : p_vertices)
    if (slot_nonzero_at(m, j)) return false;
  if (m.is_zero()) return true;
  const Representation tm = tau(q, m);
  return tm.is_zero() || hom_dimension(q, m, tm) == 0;
}

bool is_tau_rigid_pair(const BoundQuiver& q, const Representation& m, const Representation& p) {
  if (!is_projective(q, p)) throw InputError("second component of a tau-rigid pair must be projective");
  if (hom_dimension(q, p, m) != 0) return false;
  return is_tau_rigid_pair(q, m, std::vector<int>{});
}

bool is_tau_tilting(const BoundQuiver& q, const TauPair& pair) {
  return pair.size() == static_cast<std::size_t>(q.vertex_count()) &&
         is_tau_rigid_pair(q, m_module(q, pair), pair.p_parts);
}

int projective_vertex(const BoundQuiver& q, const Representation& m) {
  const auto pres = minimal_projective_presentation(q, m);
  if (pres.p1.empty() && pres.p0.size() == 1) return pres.p0.front();
  return -1;
}

TauPair remove_summand(const TauPair& pair, std::size_t r) {
  TauPair out = pair;
  if (r < pair.m_parts.size()) {
    out.m_parts.erase(out.m_parts.begin() + static_cast<std::ptrdiff_t>(r));
    out.m_g.erase(out.m_g.begin() + static_cast<std::ptrdiff_t>(r));
  } else {
    out.p_parts.erase(out.p_parts.begin() + static_cast<std::ptrdiff_t>(r - pair.m_parts.size()));
  }
  return out;
}

TauPair co_bongartz_completion(const Context& ctx, const TauPair& almost) {
  const BoundQuiver& q = ctx.algebra();
  std::vector<Representation> parts = almost.m_parts;
  if (!parts.empty()) {
    std::vector<int> all(static_cast<std::size_t>(q.vertex_count()));
    std::iota(all.begin(), all.end(), 0);
    const Representation regular = projective_sum(q, all);
    const LeftApproximation approx = left_approximation(q, regular, almost.m_parts);
    const Representation rest = cokernel(q, approx.target, approx.map).module;
    for (Representation& s : indecomposable_summands(q, rest, ctx.seed())) parts.push_back(std::move(s));
    parts = basic_part(q, parts, ctx.seed());
  }
  std::vector<int> outside;
  for (int j = 0; j < q.vertex_count(); ++j) {
    bool supported = false;
    for (const Representation& m : parts) supported = supported || slot_nonzero_at(m, j);
    if (!supported) outside.push_back(j);
  }
  return make_pair(q, std::move(parts), std::move(outside));
}

namespace {

/// The order-reversing duality of pairs between A and its opposite:
/// (M, P) goes to (Tr M_np + P^*, M_pr^*).
TauPair dualize(const Context& ctx, const TauPair& pair) {
  const BoundQuiver& q = ctx.algebra();
  const BoundQuiver& op = ctx.dual().algebra();
  std::vector<Representation> m;
  std::vector<int> p;
  for (const Representation& x : pair.m_parts) {
    const int j = projective_vertex(q, x);
    if (j >= 0)
      p.push_back(j);
    else
      m.push_back(transpose(q, op, x));
  }
  for (int i : pair.p_parts) m.push_back(projective(op, i));
  return make_pair(op, std::move(m), std::move(p));
}

}  // namespace

TauPair bongartz_completion(const Context& ctx, const TauPair& almost) {
  const TauPair mirrored = co_bongartz_completion(ctx.dual(), dualize(ctx, almost));
  return dualize(ctx.dual(), mirrored);
}

std::pair<TauPair, TauPair> complete_almost_pair(const Context& ctx, const TauPair& almost) {
  const BoundQuiver& q = ctx.algebra();
  const auto n = static_cast<std::size_t>(q.vertex_count());
  if (almost.size() + 1 != n) throw InputError("complete_almost_pair needs a pair with n - 1 summands");
  TauPair upper = bongartz_completion(ctx, almost);
  TauPair lower = co_bongartz_completion(ctx, almost);
  for (const TauPair* t : {&upper, &lower})
    if (!is_tau_tilting(q, *t))
      throw TheoremViolation("completion", "completion " + describe_pair(q, *t) + " of " + describe_pair(q, almost) +
                                               " is not a tau-tilting pair");
  if (pair_key(upper) == pair_key(lower))
    throw TheoremViolation("completion", "almost pair " + describe_pair(q, almost) + " has a single completion");
  return {std::move(upper), std::move(lower)};
}

bool is_upper_at(const BoundQuiver& q, const TauPair& pair, std::size_t r) {
  if (!pair.is_m_slot(r)) return false;
  const Representation& x = pair.m_parts[r];
  std::vector<Representation> others;
  for (std::size_t i = 0; i < pair.m_parts.size(); ++i)
    if (i != r) others.push_back(pair.m_parts[i]);
  return trace(q, others, x).module.dims != x.dims;
}

TauPair mutate(const Context& ctx, const TauPair& pair, std::size_t r) {
  const TauPair almost = remove_summand(pair, r);
  return is_upper_at(ctx.algebra(), pair, r) ? co_bongartz_completion(ctx, almost) : bongartz_completion(ctx, almost);
}

int exchanged_slot(const TauPair& from, const TauPair& to) {
  const auto a = pair_key(from);
  const auto b = pair_key(to);
  for (std::size_t i = 0; i < b.size(); ++i)
    if (std::find(a.begin(), a.end(), b[i]) == a.end()) return static_cast<int>(i);
  return -1;
}

TauPair regular_pair(const BoundQuiver& q) {
  std::vector<Representation> parts;
  for (int i = 0; i < q.vertex_count(); ++i) parts.push_back(projective(q, i));
  return make_pair(q, std::move(parts), {});
}

IntMatrix g_matrix(const TauPair& pair) {
  IntMatrix g = IntMatrix::Zero(pair.vertices, static_cast<Eigen::Index>(pair.size()));
  Eigen::Index c = 0;
  for (const IntVector& v : pair.m_g) g.col(c++) = v;
  for (int j : pair.p_parts) g(j, c++) = -1;
  return g;
}

IntMatrix c_matrix(const TauPair& pair) {
  const IntMatrix g = g_matrix(pair);
  const Mat gr = to_rational(g);
  const Rational det = linalg::determinant(gr);
  if (det != 1 && det != -1)
    throw TheoremViolation("g_matrix_unimodular", "det G = " + format_rational(det));
  return to_integer(Mat(linalg::inverse(gr).transpose()));
}

std::vector<int> sign_coherence(const IntMatrix& c) {
  std::vector<int> signs;
  for (Eigen::Index j = 0; j < c.cols(); ++j) {
    const bool nonneg = (c.col(j).array() >= 0).all();
    const bool nonpos = (c.col(j).array() <= 0).all();
    const bool zero = (c.col(j).array() == 0).all();
    signs.push_back(zero ? 0 : nonneg ? 1 : nonpos ? -1 : 0);
  }
  return signs;
}

std::string describe_pair(const BoundQuiver& q, const TauPair& pair) {
  std::string m, p;
  for (const Representation& x : pair.m_parts) m += (m.empty() ? "" : "+") + loewy_name(q, x);
  for (int j : pair.p_parts) p += (p.empty() ? "" : "+") + loewy_name(q, projective(q, j));
  return "(" + (m.empty() ? "0" : m) + ", " + (p.empty() ? "0" : p) + ")";
}

ExchangeGraph enumerate_exchange_graph(const Context& ctx, const EnumerationLimits& limits) {
  if (limits.max_nodes == 0 || limits.max_dim <= 0) throw InputError("enumeration limits must be positive");
  const BoundQuiver& q = ctx.algebra();
  ExchangeGraph graph;
  graph.fingerprint = q.fingerprint();
  graph.complete = true;
  std::map<std::vector<std::vector<std::int64_t>>, int> index;

  auto too_big = [&](const TauPair& t) {
    for (const Representation& m : t.m_parts)
      if (m.total_dimension() > limits.max_dim) return true;
    return false;
  };

  // Every tau-tilting pair of a finite lattice lies below (A, 0) along a
  // chain of down-mutations, so only the co-Bongartz side is needed here.
  TauPair top = regular_pair(q);
  index[pair_key(top)] = 0;
  graph.nodes.push_back(std::move(top));
  std::vector<ExchangeEdge> edges;
  for (std::size_t head = 0; head < graph.nodes.size(); ++head) {
    const auto n = graph.nodes[head].size();
    for (std::size_t r = 0; r < n; ++r) {
      if (!is_upper_at(q, graph.nodes[head], r)) continue;
      TauPair next = co_bongartz_completion(ctx, remove_summand(graph.nodes[head], r));
      const auto key = pair_key(next);
      int target;
      if (auto it = index.find(key); it != index.end()) {
        target = it->second;
      } else {
        if (too_big(next)) {
          graph.complete = false;
          graph.truncation_reason = "a module exceeds max_dim = " + std::to_string(limits.max_dim);
          continue;
        }
        if (graph.nodes.size() >= limits.max_nodes) {
          graph.complete = false;
          graph.truncation_reason = "more than max_nodes = " + std::to_string(limits.max_nodes) + " pairs";
          continue;
        }
        target = static_cast<int>(graph.nodes.size());
        index[key] = target;
        graph.nodes.push_back(std::move(next));
      }
      ExchangeEdge e;
      e.upper = static_cast<int>(head);
      e.lower = target;
      e.upper_slot = static_cast<int>(r);
      e.lower_slot = exchanged_slot(graph.nodes[head], graph.nodes[static_cast<std::size_t>(target)]);
      e.label = c_matrix(graph.nodes[head]).col(static_cast<Eigen::Index>(r));
      edges.push_back(std::move(e));
    }
  }

  // Canonical order: fewer shifted projectives first, then larger modules,
  // then G columns in descending order.
  std::vector<std::size_t> order(graph.nodes.size());
  std::iota(order.begin(), order.end(), 0);
  auto sort_key = [&](std::size_t i) {
    const TauPair& t = graph.nodes[i];
    return std::make_tuple(t.p_parts.size(), -m_module(q, t).total_dimension(), pair_key(t));
  };
  std::vector<decltype(sort_key(0))> keys;
  for (std::size_t i = 0; i < order.size(); ++i) keys.push_back(sort_key(i));
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& ka = keys[a];
    const auto& kb = keys[b];
    if (std::get<0>(ka) != std::get<0>(kb)) return std::get<0>(ka) < std::get<0>(kb);
    if (std::get<1>(ka) != std::get<1>(kb)) return std::get<1>(ka) < std::get<1>(kb);
    return std::get<2>(ka) > std::get<2>(kb);
  });
  std::vector<int> position(order.size());
  std::vector<TauPair> sorted;
  for (std::size_t i = 0; i < order.size(); ++i) {
    position[order[i]] = static_cast<int>(i);
    sorted.push_back(std::move(graph.nodes[order[i]]));
  }
  graph.nodes = std::move(sorted);
  for (ExchangeEdge& e : edges) {
    e.upper = position[static_cast<std::size_t>(e.upper)];
    e.lower = position[static_cast<std::size_t>(e.lower)];
  }
  std::sort(edges.begin(), edges.end(), [](const ExchangeEdge& a, const ExchangeEdge& b) {
    return std::tie(a.upper, a.upper_slot) < std::tie(b.upper, b.upper_slot);
  });
  graph.edges = std::move(edges);
  return graph;
}

}  // namespace tautilt
