#pragma once

// Whole-algebra verification and the text formats shared by the CLI.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tautilt/stability.hpp"
#include "tautilt/tau_tilting.hpp"

namespace tautilt {

/// Modules used as test inputs: every indecomposable met during the run,
/// and probes = those indecomposables padded with direct sums up to a
/// minimum count.
struct ModulePool {
  std::vector<Representation> indecomposables;
  std::vector<Representation> probes;
};

ModulePool module_pool(const Context& ctx, const ExchangeGraph& graph, const std::vector<BrickSlate>& slates,
                       std::size_t min_probes = 8);

struct PairReport {
  std::size_t node = 0;
  std::optional<BrickSlate> slate;  ///< empty when extraction failed
  std::vector<Check> checks;
  std::size_t oracle_cases = 0;  ///< (module, slot) combinations checked by brute force
  bool passed() const;
};

PairReport verify_pair(const Context& ctx, const TauPair& pair, std::size_t node, const ModulePool& pool,
                       const BruteForceBudget& budget);

struct SelfExtension {
  Representation brick;
  std::size_t ext1 = 0;
  std::optional<Representation> witness;
};

struct VerificationReport {
  std::vector<PairReport> pairs;
  std::vector<Check> global;
  std::vector<SelfExtension> self_extensions;  ///< bricks of B+ sets with Ext^1(B, B) != 0
  std::size_t ar_samples = 0;
  std::size_t dual_oracle_cases = 0;
  bool passed() const;
};

struct VerifyOptions {
  BruteForceBudget budget;
  std::size_t ar_samples = 200;
  std::uint64_t seed = 0;
};

VerificationReport verify_algebra(const Context& ctx, const ExchangeGraph& graph, const VerifyOptions& options = {});

/// Slates for every node, in node order.
std::vector<BrickSlate> all_slates(const Context& ctx, const ExchangeGraph& graph);

std::string info_text(const BoundQuiver& q);
std::string info_json(const BoundQuiver& q);
std::string enumerate_json(const BoundQuiver& q, const ExchangeGraph& graph, const std::vector<BrickSlate>& slates);
/// One row per pair: (M,P) | G | C | positive c-vectors | B+ | Fac M.
std::string enumerate_table(const BoundQuiver& q, const ExchangeGraph& graph, const std::vector<BrickSlate>& slates);
std::string verification_json(const BoundQuiver& q, const ExchangeGraph& graph, const VerificationReport& report);

}  // namespace tautilt
