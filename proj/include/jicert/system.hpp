#pragma once

#include <optional>
#include <vector>

#include "jicert/homomorphism.hpp"
#include "jicert/perm_group.hpp"

namespace jicert {

/// One level G_n of an inverse-system prefix.
struct StageRecord
{
  PermGroup group;
  /// The marked normal subgroup A_n, when given.
  std::optional<PermGroup> a_mark;
  /// Stage 0 only: the supplied B_0.
  std::optional<PermGroup> b0;
  /// Stage n >= 1: the surjection G_n -> G_{n-1}.
  std::optional<GroupHom> map;
  /// Stage n >= 1: ker(G_n -> G_{n-1}), recomputed from the map.
  std::optional<PermGroup> kernel;
};

/// Stages are listed coarsest first: stages[0] is G_0.
struct SystemPrefix
{
  std::vector<StageRecord> stages;

  std::size_t size() const { return stages.size(); }
  /// B_n: the supplied B_0 at stage 0, the kernel of the map otherwise.
  std::optional<PermGroup> b(std::size_t n) const;
  /// P_n = image of A_{n+1} in G_n, when A_{n+1} is marked.
  std::optional<PermGroup> p(std::size_t n) const;
};

/// Recomputes kernels and checks the structural invariants: every map is a
/// surjective homomorphism onto the previous stage, every mark is normal and
/// B_0 lies in G_0. Throws PreconditionError or InvalidHomomorphism.
void validate_prefix(SystemPrefix &prefix);

} // namespace jicert
