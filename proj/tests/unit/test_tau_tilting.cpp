#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "tautilt/decompose.hpp"
#include "tautilt/errors.hpp"
#include "tautilt/module_ops.hpp"
#include "tautilt/tau_tilting.hpp"

using namespace tautilt;

namespace {

IntMatrix imat(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    Eigen::Index c = 0;
    for (auto v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

/// Pair given by M-parts and shifted projective vertices.
TauPair pair_of(const BoundQuiver& q, std::vector<Representation> m, std::vector<int> p) {
  return make_pair(q, std::move(m), std::move(p));
}

}  // namespace

TEST_CASE("tau-rigid pairs", "[tau]") {
  const auto q = load_corpus("a3_rel");
  for (int i = 0; i < 3; ++i) CHECK(is_tau_rigid_pair(q, projective(q, i), std::vector<int>{}));
  const auto row2 = direct_sum(q, {projective(q, 0), projective(q, 1), simple(q, 1)});
  CHECK(is_tau_rigid_pair(q, row2, std::vector<int>{}));
  // tau S(2) = S(3) and Hom(S(2), S(3)) = 0, but tau S(1) = S(2) and
  // Hom(S(2), S(2)) != 0, so S(1) + S(2) is not tau-rigid.
  const auto s12 = direct_sum(q, {simple(q, 0), simple(q, 1)});
  CHECK(oracle::hom_dim(q, s12, tau(q, s12)) > 0);
  CHECK_FALSE(is_tau_rigid_pair(q, s12, std::vector<int>{}));
  CHECK(is_tau_rigid_pair(q, simple(q, 0), projective(q, 2)));
  CHECK_FALSE(is_tau_rigid_pair(q, projective(q, 0), projective(q, 1)));
  CHECK_THROWS_AS(is_tau_rigid_pair(q, simple(q, 0), simple(q, 1)), InputError);
}

TEST_CASE("G and C matrices of known pairs", "[tau]") {
  const auto q = load_corpus("a3_rel");
  const auto top = regular_pair(q);
  CHECK(g_matrix(top) == IntMatrix::Identity(3, 3));
  CHECK(c_matrix(top) == IntMatrix::Identity(3, 3));
  const auto row2 = pair_of(q, {projective(q, 0), projective(q, 1), simple(q, 1)}, {});
  CHECK(g_matrix(row2) == imat({{1, 0, 0}, {0, 1, 1}, {0, 0, -1}}));
  CHECK(c_matrix(row2) == imat({{1, 0, 0}, {0, 1, 0}, {0, 1, -1}}));
  CHECK(sign_coherence(c_matrix(row2)) == std::vector<int>{1, 1, -1});
  const auto row4 = pair_of(q, {projective(q, 1), simple(q, 2)}, {0});
  CHECK(c_matrix(row4) == imat({{0, 0, -1}, {1, 0, 0}, {0, 1, 0}}));
  const auto bottom = pair_of(q, {}, {0, 1, 2});
  CHECK(g_matrix(bottom) == -IntMatrix::Identity(3, 3));
  CHECK(sign_coherence(c_matrix(bottom)) == std::vector<int>{-1, -1, -1});
  CHECK(sign_coherence(IntMatrix::Identity(2, 2)) == std::vector<int>{1, 1});
  CHECK(sign_coherence(imat({{1}, {-1}})) == std::vector<int>{0});
}

TEST_CASE("removing summands and completing", "[tau]") {
  const auto q = load_corpus("a3_rel");
  const Context ctx(q);
  const auto top = regular_pair(q);
  // Slot 3 of (A, 0) holds P(3) = S(3).
  const auto almost = remove_summand(top, 2);
  CHECK(almost.size() == 2);
  const auto [upper, lower] = complete_almost_pair(ctx, almost);
  CHECK(pair_key(upper) == pair_key(top));
  const auto row2 = pair_of(q, {projective(q, 0), projective(q, 1), simple(q, 1)}, {});
  CHECK(pair_key(lower) == pair_key(row2));

  // Removing P(1) from (A, 0): the other completion is (2\3 + 3, P(1)).
  const auto [u1, l1] = complete_almost_pair(ctx, remove_summand(top, 0));
  CHECK(pair_key(u1) == pair_key(top));
  CHECK(pair_key(l1) == pair_key(pair_of(q, {projective(q, 1), simple(q, 2)}, {0})));

  const auto one = load_corpus("one_vertex");
  const Context ctx1(one);
  const auto empty = remove_summand(regular_pair(one), 0);
  CHECK(empty.size() == 0);
  const auto [a, b] = complete_almost_pair(ctx1, empty);
  CHECK(a.m_parts.size() == 1);
  CHECK(b.p_parts == std::vector<int>{0});
}

TEST_CASE("mutation is an involution", "[tau]") {
  for (const char* name : {"a3_rel", "nakayama2", "loop", "a3"}) {
    const auto q = load_corpus(name);
    const Context ctx(q);
    const auto graph = enumerate_exchange_graph(ctx);
    REQUIRE(graph.complete);
    for (const auto& t : graph.nodes)
      for (std::size_t r = 0; r < t.size(); ++r) {
        const auto next = mutate(ctx, t, r);
        CHECK(is_tau_tilting(q, next));
        const int slot = exchanged_slot(t, next);
        REQUIRE(slot >= 0);
        CHECK(pair_key(mutate(ctx, next, static_cast<std::size_t>(slot))) == pair_key(t));
      }
  }
}

TEST_CASE("exchange graph sizes", "[tau]") {
  struct Expect {
    const char* name;
    std::size_t nodes;
  };
  for (const auto& [name, nodes] : {Expect{"a3_rel", 12}, Expect{"one_vertex", 2}, Expect{"a2", 5},
                                    Expect{"a3", 14}, Expect{"nakayama2", 6}}) {
    const auto q = load_corpus(name);
    const Context ctx(q);
    const auto graph = enumerate_exchange_graph(ctx);
    INFO(name);
    CHECK(graph.complete);
    CHECK(graph.nodes.size() == nodes);
    CHECK(graph.edges.size() * 2 == nodes * static_cast<std::size_t>(q.vertex_count()));
    for (const auto& t : graph.nodes) CHECK(is_tau_tilting(q, t));
    for (const auto& e : graph.edges) CHECK(sign_coherence(IntMatrix(e.label)) == std::vector<int>{1});
  }
}

TEST_CASE("truncation flags", "[tau]") {
  const auto q = load_corpus("a3_rel");
  const Context ctx(q);
  const auto graph = enumerate_exchange_graph(ctx, EnumerationLimits{5, 30});
  CHECK_FALSE(graph.complete);
  CHECK(graph.nodes.size() == 5);
  CHECK_THROWS_AS(enumerate_exchange_graph(ctx, EnumerationLimits{0, 30}), InputError);
}
