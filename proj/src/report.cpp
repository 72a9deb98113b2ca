#include "tautilt/report.hpp"

#include <algorithm>
#include <json.hpp>
#include <random>
#include <set>
#include <sstream>

#include "tautilt/decompose.hpp"
#include "tautilt/errors.hpp"
#include "tautilt/module_json.hpp"
#include "tautilt/module_ops.hpp"
#include "tautilt/wallchamber.hpp"

namespace tautilt {

using Index = Eigen::Index;
using json = nlohmann::ordered_json;

namespace {

std::string vec_text(const IntVector& v) {
  std::string s = "(";
  for (Index i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v(i));
  return s + ")";
}

std::string mat_text(const IntMatrix& m) {
  std::string s = "[";
  for (Index r = 0; r < m.rows(); ++r) {
    s += r ? ",[" : "[";
    for (Index c = 0; c < m.cols(); ++c) s += (c ? "," : "") + std::to_string(m(r, c));
    s += "]";
  }
  return s + "]";
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

json vector_json(const IntVector& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

json module_ref(const BoundQuiver& q, const Representation& m) {
  json out;
  out["name"] = loewy_name(q, m);
  out["dims"] = vector_json(m.dim_vector());
  return out;
}

bool contains_iso(const BoundQuiver& q, const std::vector<Representation>& list, const Representation& x) {
  for (const Representation& y : list)
    if (y.dims == x.dims && is_isomorphic(q, x, y)) return true;
  return false;
}

}  // namespace

std::vector<BrickSlate> all_slates(const Context& ctx, const ExchangeGraph& graph) {
  std::vector<BrickSlate> slates;
  for (const TauPair& t : graph.nodes) slates.push_back(brick_slate(ctx, t));
  return slates;
}

ModulePool module_pool(const Context& ctx, const ExchangeGraph& graph, const std::vector<BrickSlate>& slates,
                       std::size_t min_probes) {
  const BoundQuiver& q = ctx.algebra();
  std::vector<Representation> seeds;
  for (int i = 0; i < q.vertex_count(); ++i) {
    seeds.push_back(simple(q, i));
    seeds.push_back(projective(q, i));
    seeds.push_back(injective(q, i));
  }
  for (const TauPair& t : graph.nodes)
    for (const Representation& m : t.m_parts) seeds.push_back(m);
  for (const BrickSlate& s : slates)
    for (const Representation& b : s.bricks) seeds.push_back(b);
  const std::size_t first_round = seeds.size();
  for (std::size_t k = 0; k < first_round; ++k) seeds.push_back(tau(q, seeds[k]));

  ModulePool pool;
  for (const Representation& s : seeds) {
    if (s.is_zero()) continue;
    for (Representation& x : indecomposable_summands(q, s, ctx.seed()))
      if (!contains_iso(q, pool.indecomposables, x)) pool.indecomposables.push_back(std::move(x));
  }
  std::stable_sort(pool.indecomposables.begin(), pool.indecomposables.end(),
                   [&](const Representation& a, const Representation& b) { return canonical_less(q, a, b); });
  pool.probes = pool.indecomposables;
  // Too few indecomposables (e.g. a field): pad with direct sums.
  const std::size_t base = pool.indecomposables.size();
  for (std::size_t i = 0; i < base && pool.probes.size() < min_probes; ++i)
    for (std::size_t j = i; j < base && pool.probes.size() < min_probes; ++j)
      pool.probes.push_back(direct_sum(q, {pool.indecomposables[i], pool.indecomposables[j]}));
  for (int copies = 3; pool.probes.size() < min_probes && base > 0; ++copies)
    pool.probes.push_back(power(q, pool.indecomposables.front(), copies));
  return pool;
}

bool PairReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

PairReport verify_pair(const Context& ctx, const TauPair& pair, std::size_t node, const ModulePool& pool,
                       const BruteForceBudget& budget) {
  const BoundQuiver& q = ctx.algebra();
  PairReport report;
  report.node = node;

  Check sign{"sign_coherence", true, ""};
  const IntMatrix c = c_matrix(pair);
  const auto signs = sign_coherence(c);
  for (std::size_t r = 0; r < signs.size(); ++r)
    if (signs[r] == 0) sign.fail("column " + std::to_string(r + 1) + " = " + vec_text(c.col(static_cast<Index>(r))));
  report.checks.push_back(sign);

  Check cxd{"c_eq_xd", true, ""};
  try {
    report.slate = brick_slate(ctx, pair);
  } catch (const TheoremViolation& e) {
    cxd.fail(e.what());
  }
  report.checks.push_back(cxd);
  if (!report.slate) return report;
  const BrickSlate& slate = *report.slate;

  Check theta{"theta_pairing", true, ""};
  Check in_fac{"bricks_in_fac_or_perp", true, ""};
  const Vec th = theta_of_pair(pair);
  const Representation m = m_module(q, pair);
  for (std::size_t r = 0; r < pair.size(); ++r) {
    const Representation& b = slate.bricks[r];
    const auto dr = slate.d(static_cast<Index>(r), static_cast<Index>(r));
    if (pairing(th, b.dim_vector()) != dr)
      theta.fail("slot " + std::to_string(r + 1) + ": <theta, [B]> = " + format_rational(pairing(th, b.dim_vector())));
    if (dr == 1 && !fac_contains(q, pair, b)) in_fac.fail("slot " + std::to_string(r + 1) + ": B not in Fac M");
    if (dr == -1 && !m.is_zero() && hom_dimension(q, m, b) != 0)
      in_fac.fail("slot " + std::to_string(r + 1) + ": Hom(M, B) != 0");
  }
  report.checks.push_back(theta);
  report.checks.push_back(in_fac);

  for (Check& check : verify_facm_theorem(q, slate, pool.probes)) report.checks.push_back(std::move(check));

  Check oracle{"dual_oracle", true, ""};
  Check unique{"stable_uniqueness", true, ""};
  for (std::size_t r = 0; r < pair.size(); ++r) {
    const TauPair almost = remove_summand(pair, r);
    const Vec tr = slot_theta(pair, r);
    const std::string slot = "slot " + std::to_string(r + 1) + ", ";
    if (within_budget(slate.bricks[r], budget) && !is_stable_bruteforce(q, slate.bricks[r], tr, budget))
      unique.fail(slot + loewy_name(q, slate.bricks[r]) + " is not stable by brute force");
    for (const Representation& x : pool.indecomposables) {
      if (!within_budget(x, budget)) continue;
      ++report.oracle_cases;
      const bool hom = is_semistable_hom(q, x, almost);
      const bool brute = is_semistable_bruteforce(q, x, tr, budget);
      if (hom != brute)
        oracle.fail(slot + loewy_name(q, x) + ": Hom criterion " + (hom ? "yes" : "no") + ", brute force " +
                    (brute ? "yes" : "no") +
                    (hom ? " (reduction mod p can only add submodules; retry with another prime)" : ""));
      if (brute && is_stable_bruteforce(q, x, tr, budget) &&
          !(x.dims == slate.bricks[r].dims && is_isomorphic(q, x, slate.bricks[r])))
        unique.fail(slot + "second stable module " + loewy_name(q, x));
    }
  }
  report.checks.push_back(oracle);
  report.checks.push_back(unique);
  return report;
}

bool VerificationReport::passed() const {
  return std::all_of(pairs.begin(), pairs.end(), [](const PairReport& p) { return p.passed(); }) &&
         std::all_of(global.begin(), global.end(), [](const Check& c) { return c.passed; });
}

VerificationReport verify_algebra(const Context& ctx, const ExchangeGraph& graph, const VerifyOptions& options) {
  const BoundQuiver& q = ctx.algebra();
  VerificationReport report;
  std::vector<BrickSlate> slates;
  for (const TauPair& t : graph.nodes) {
    try {
      slates.push_back(brick_slate(ctx, t));
    } catch (const TheoremViolation&) {
      // Reported per pair below.
    }
  }
  const ModulePool pool = module_pool(ctx, graph, slates);
  for (std::size_t k = 0; k < graph.nodes.size(); ++k) {
    report.pairs.push_back(verify_pair(ctx, graph.nodes[k], k, pool, options.budget));
    report.dual_oracle_cases += report.pairs.back().oracle_cases;
  }

  Check complete{"exchange_graph_complete", graph.complete, graph.truncation_reason};
  report.global.push_back(complete);

  Check regular{"regular_connected", true, ""};
  const std::size_t n = static_cast<std::size_t>(q.vertex_count());
  std::vector<std::vector<std::size_t>> adj(graph.nodes.size());
  for (const ExchangeEdge& e : graph.edges) {
    adj[static_cast<std::size_t>(e.upper)].push_back(static_cast<std::size_t>(e.lower));
    adj[static_cast<std::size_t>(e.lower)].push_back(static_cast<std::size_t>(e.upper));
  }
  if (graph.complete) {
    for (std::size_t k = 0; k < adj.size(); ++k)
      if (adj[k].size() != n) regular.fail("node " + std::to_string(k) + " has degree " + std::to_string(adj[k].size()));
    std::vector<bool> seen(adj.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      const std::size_t k = stack.back();
      stack.pop_back();
      for (std::size_t j : adj[k])
        if (!seen[j]) {
          seen[j] = true;
          stack.push_back(j);
        }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) regular.fail("graph is not connected");
  }
  report.global.push_back(regular);

  Check duality{"c_vector_duality", true, ""};
  std::set<std::vector<std::int64_t>> positive, negated;
  for (const TauPair& t : graph.nodes) {
    const IntMatrix c = c_matrix(t);
    for (Index j = 0; j < c.cols(); ++j) {
      const IntVector col = c.col(j);
      if ((col.array() >= 0).all())
        positive.insert(to_std(col));
      else
        negated.insert(to_std(IntVector(-col)));
    }
  }
  if (graph.complete && positive != negated) duality.fail("positive and negated negative c-vectors differ");
  report.global.push_back(duality);

  Check labels{"edge_labels", true, ""};
  if (slates.size() == graph.nodes.size()) {
    for (const ExchangeEdge& e : graph.edges) {
      try {
        shared_wall(graph, slates, static_cast<std::size_t>(e.upper), static_cast<std::size_t>(e.lower));
      } catch (const Error& err) {
        labels.fail(err.what());
      }
    }
  } else {
    labels.fail("bricks unavailable for some pair");
  }
  report.global.push_back(labels);

  Check ar{"ar_pairing", true, ""};
  if (!pool.indecomposables.empty()) {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> pick(0, pool.indecomposables.size() - 1);
    std::uniform_int_distribution<int> parts(1, 2);
    auto draw = [&] {
      std::vector<Representation> chosen;
      for (int k = parts(rng); k > 0; --k) chosen.push_back(pool.indecomposables[pick(rng)]);
      return direct_sum(q, chosen);
    };
    for (std::size_t s = 0; s < options.ar_samples; ++s) {
      const Representation a = draw();
      const Representation b = draw();
      const Representation ta = tau(q, a);
      const auto rhs = static_cast<std::int64_t>(hom_dimension(q, a, b)) -
                       static_cast<std::int64_t>(ta.is_zero() ? 0 : hom_dimension(q, b, ta));
      if (ar_pairing(q, a, b) != rhs) ar.fail(loewy_name(q, a) + " vs " + loewy_name(q, b));
      ++report.ar_samples;
    }
  }
  report.global.push_back(ar);

  std::vector<Representation> seen_bricks;
  std::vector<Representation> candidates = pool.indecomposables;
  for (int i = 0; i < q.vertex_count(); ++i) candidates.push_back(projective(q, i));
  for (const BrickSlate& s : slates)
    for (const Representation& b : b_plus(s)) {
      if (contains_iso(q, seen_bricks, b)) continue;
      seen_bricks.push_back(b);
      const std::size_t e = ext1_dimension(q, b, b);
      if (e == 0) continue;
      report.self_extensions.push_back({b, e, self_extension_witness(q, b, candidates)});
    }
  return report;
}

// ---------------------------------------------------------------------------
// Text formats

std::string info_text(const BoundQuiver& q) {
  std::ostringstream out;
  out << "vertices: " << q.vertex_count() << "\n";
  out << "dim A: " << q.dimension() << "\n";
  out << "path basis:";
  for (const Path& p : q.basis()) out << " " << q.path_name(p);
  out << "\n";
  for (int i = 0; i < q.vertex_count(); ++i) {
    const Representation p = projective(q, i);
    const Representation in = injective(q, i);
    out << "P(" << i + 1 << ") = " << loewy_name(q, p) << " dims " << vec_text(p.dim_vector()) << "    I(" << i + 1
        << ") = " << loewy_name(q, in) << " dims " << vec_text(in.dim_vector()) << "\n";
  }
  return out.str();
}

std::string info_json(const BoundQuiver& q) {
  json out;
  out["algebra"] = q.fingerprint();
  out["vertices"] = q.vertex_count();
  out["dimension"] = q.dimension();
  json basis = json::array();
  for (const Path& p : q.basis()) basis.push_back(q.path_name(p));
  out["path_basis"] = std::move(basis);
  json projectives = json::array(), injectives = json::array();
  for (int i = 0; i < q.vertex_count(); ++i) {
    projectives.push_back(module_ref(q, projective(q, i)));
    injectives.push_back(module_ref(q, injective(q, i)));
  }
  out["projectives"] = std::move(projectives);
  out["injectives"] = std::move(injectives);
  return out.dump(2) + "\n";
}

namespace {

json pair_json(const BoundQuiver& q, const TauPair& t, std::size_t id) {
  json out;
  out["id"] = id;
  out["pair"] = describe_pair(q, t);
  json m = json::array();
  for (const Representation& x : t.m_parts) {
    json ref = module_ref(q, x);
    ref["module"] = json::parse(format_module(q, x));
    m.push_back(std::move(ref));
  }
  out["m_parts"] = std::move(m);
  json p = json::array();
  for (int j : t.p_parts) {
    json ref = module_ref(q, projective(q, j));
    ref["vertex"] = j + 1;
    p.push_back(std::move(ref));
  }
  out["p_parts"] = std::move(p);
  out["g_matrix"] = matrix_json(g_matrix(t));
  out["c_matrix"] = matrix_json(c_matrix(t));
  return out;
}

std::vector<IntVector> positive_columns(const IntMatrix& c) {
  std::vector<IntVector> out;
  for (Index j = 0; j < c.cols(); ++j)
    if ((c.col(j).array() >= 0).all()) out.push_back(c.col(j));
  return out;
}

}  // namespace

std::string enumerate_json(const BoundQuiver& q, const ExchangeGraph& graph, const std::vector<BrickSlate>& slates) {
  json out;
  out["version"] = 1;
  out["algebra"] = graph.fingerprint;
  out["complete"] = graph.complete;
  out["truncation_reason"] = graph.truncation_reason;
  json pairs = json::array();
  for (std::size_t k = 0; k < graph.nodes.size(); ++k) {
    json p = pair_json(q, graph.nodes[k], k);
    json pos = json::array();
    for (const IntVector& v : positive_columns(c_matrix(graph.nodes[k]))) pos.push_back(vector_json(v));
    p["positive_c_vectors"] = std::move(pos);
    if (k < slates.size()) {
      json bp = json::array();
      for (const Representation& b : b_plus(slates[k])) bp.push_back(module_ref(q, b));
      p["b_plus"] = std::move(bp);
    }
    pairs.push_back(std::move(p));
  }
  out["pairs"] = std::move(pairs);
  json edges = json::array();
  for (const ExchangeEdge& e : graph.edges) {
    json j;
    j["upper"] = e.upper;
    j["lower"] = e.lower;
    j["upper_slot"] = e.upper_slot + 1;
    j["lower_slot"] = e.lower_slot + 1;
    j["label"] = vector_json(e.label);
    edges.push_back(std::move(j));
  }
  out["edges"] = std::move(edges);
  return out.dump(2) + "\n";
}

std::string enumerate_table(const BoundQuiver& q, const ExchangeGraph& graph, const std::vector<BrickSlate>& slates) {
  std::ostringstream out;
  out << "(M,P) | G | C | positive c-vectors | B+ | Fac M\n";
  for (std::size_t k = 0; k < graph.nodes.size(); ++k) {
    const TauPair& t = graph.nodes[k];
    const IntMatrix c = c_matrix(t);
    out << describe_pair(q, t) << " | " << mat_text(g_matrix(t)) << " | " << mat_text(c) << " | {";
    bool first = true;
    for (const IntVector& v : positive_columns(c)) {
      out << (first ? "" : ", ") << vec_text(v);
      first = false;
    }
    out << "} | {";
    if (k < slates.size()) {
      first = true;
      for (const Representation& b : b_plus(slates[k])) {
        out << (first ? "" : ", ") << loewy_name(q, b);
        first = false;
      }
    }
    out << "} | ";
    if (t.m_parts.empty())
      out << "add{0}";
    else {
      out << "Fac(";
      first = true;
      for (const Representation& m : t.m_parts) {
        out << (first ? "" : "+") << loewy_name(q, m);
        first = false;
      }
      out << ")";
    }
    out << "\n";
  }
  if (!graph.complete) out << "# truncated: " << graph.truncation_reason << "\n";
  return out.str();
}

std::string verification_json(const BoundQuiver& q, const ExchangeGraph& graph, const VerificationReport& report) {
  auto checks_json = [](const std::vector<Check>& checks) {
    json out;
    for (const Check& c : checks) {
      json entry;
      entry["passed"] = c.passed;
      if (!c.passed) entry["witness"] = c.witness;
      out[c.name] = std::move(entry);
    }
    return out;
  };
  json out;
  out["version"] = 1;
  out["algebra"] = graph.fingerprint;
  out["passed"] = report.passed();
  out["global"] = checks_json(report.global);
  out["ar_samples"] = report.ar_samples;
  out["dual_oracle_cases"] = report.dual_oracle_cases;
  json ext = json::array();
  for (const SelfExtension& s : report.self_extensions) {
    json e = module_ref(q, s.brick);
    e["ext1"] = s.ext1;
    e["witness"] = s.witness ? json(module_ref(q, *s.witness)) : json(nullptr);
    ext.push_back(std::move(e));
  }
  out["self_extensions"] = std::move(ext);
  json pairs = json::array();
  for (const PairReport& p : report.pairs) {
    json entry;
    entry["id"] = p.node;
    entry["pair"] = describe_pair(q, graph.nodes[p.node]);
    if (p.slate) {
      entry["d_diagonal"] = vector_json(d_diagonal(*p.slate));
      json bricks = json::array();
      for (std::size_t r = 0; r < p.slate->bricks.size(); ++r) {
        json b = module_ref(q, p.slate->bricks[r]);
        b["slot"] = r + 1;
        bricks.push_back(std::move(b));
      }
      entry["bricks"] = std::move(bricks);
    }
    entry["checks"] = checks_json(p.checks);
    pairs.push_back(std::move(entry));
  }
  out["pairs"] = std::move(pairs);
  return out.dump(2) + "\n";
}

}  // namespace tautilt
