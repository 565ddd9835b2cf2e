#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jicert/perm_group.hpp"

namespace jicert {

/// Element-order multiset of a group or section: element order -> count.
using OrderMultiset = std::map<std::uint64_t, std::uint64_t>;

/// Cheap isomorphism invariant of a group or of a section X/Y.
struct Fingerprint
{
  std::uint64_t order = 1;
  OrderMultiset element_orders;
  bool abelian = true;
  friend bool operator==(Fingerprint const &, Fingerprint const &) = default;
};

/// Label of a finite simple group. `name` is canonical ("C5", "A5",
/// "PSL(2,7)", ...) and is determined by the order and the fingerprint, so
/// comparisons use (order, name).
struct SimpleTypeId
{
  std::string name;
  std::uint64_t order = 1;
  bool abelian = true;
  /// Element-order multiset when the type came from an actual group; empty
  /// for types named from a table or a class list.
  OrderMultiset fingerprint;

  friend bool operator==(SimpleTypeId const &a, SimpleTypeId const &b)
  {
    return a.order == b.order && a.name == b.name;
  }
  friend std::strong_ordering operator<=>(SimpleTypeId const &a, SimpleTypeId const &b)
  {
    if (auto c = a.order <=> b.order; c != 0)
      return c;
    return a.name <=> b.name;
  }
};

/// Jordan-Holder multiset.
using FactorMultiset = std::map<SimpleTypeId, std::size_t>;

struct CriticalPair
{
  PermGroup parent;
  PermGroup a;
  PermGroup b;
};

struct ChiefFactorDesc
{
  PermGroup top;
  PermGroup bottom;
  SimpleTypeId simple_type;
  std::size_t multiplicity = 1;
};

struct CriticalityResult
{
  bool critical = false;
  /// A normal subgroup N < A with N not inside B, when not critical.
  std::optional<PermGroup> witness;
};

/// Every normal subgroup, sorted by order and then by element list.
std::vector<PermGroup> normal_subgroups(PermGroup const &g);
std::vector<PermGroup> minimal_normal_subgroups(PermGroup const &g);
/// Proper normal subgroups that are maximal under inclusion.
std::vector<PermGroup> maximal_normal_subgroups(PermGroup const &g);

/// Requires A, B normal in G and B < A.
CriticalityResult is_critical_pair(PermGroup const &g, PermGroup const &a, PermGroup const &b);
/// For every normal A, pairs it with the join of the normal subgroups strictly
/// inside A when that join is still proper.
std::vector<CriticalPair> critical_pairs(PermGroup const &g);
/// Among the minimal normal subgroups of G inside K but not inside L picks
/// the least one and returns (A, A meet L). Requires K/L to be a chief factor.
CriticalPair find_critical_refinement(PermGroup const &g, PermGroup const &k, PermGroup const &l);

/// No normal subgroup of G lies strictly between bottom and top.
bool is_chief_factor(PermGroup const &g, PermGroup const &top, PermGroup const &bottom);

Fingerprint fingerprint(PermGroup const &g);
/// Fingerprint of X/Y for subgroups Y normal in X of the dense group G.
Fingerprint section_fingerprint(PermGroup const &g, PermGroup const &x, PermGroup const &y);

/// Names a simple group by order and, where the order is ambiguous, its
/// element orders. Throws PreconditionError unless S is simple.
SimpleTypeId identify_simple_type(PermGroup const &s);
/// Splits a characteristically simple group as T^k.
std::pair<SimpleTypeId, std::size_t> decompose_char_simple(PermGroup const &q);
ChiefFactorDesc describe_chief_factor(PermGroup const &g, PermGroup const &top,
                                      PermGroup const &bottom);

/// A chief series 1 = N_0 < ... < N_r = G built bottom-up by always taking the
/// least minimal normal subgroup of the current quotient.
std::vector<PermGroup> chief_series(PermGroup const &g);
std::vector<ChiefFactorDesc> chief_factors(PermGroup const &g);
FactorMultiset composition_factors(PermGroup const &g);

/// Two proper normal subgroups that commute elementwise and generate G, if any.
std::optional<std::vector<PermGroup>> central_decomposition(PermGroup const &g);
/// A normal subgroup H of G and a maximal normal subgroup M of L with H not
/// inside M and K not inside H. Requires G centrally decomposable, K not
/// central and L a nontrivial normal subgroup.
std::pair<PermGroup, PermGroup> centdec_witness(PermGroup const &g, PermGroup const &k,
                                                PermGroup const &l);

struct SimpleGroupInfo
{
  char const *name;
  std::uint64_t order;
};
/// The nonabelian simple groups of order below 10^6.
std::vector<SimpleGroupInfo> const &nonabelian_simple_catalogue();
inline constexpr std::uint64_t kSimpleCatalogueBound = 1'000'000;

/// A type by name: "C<p>" or an entry of the catalogue.
SimpleTypeId simple_type_by_name(std::string const &name);

} // namespace jicert
