#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jicert/class_spec.hpp"
#include "jicert/normal_structure.hpp"
#include "jicert/system.hpp"

namespace jicert {

enum class CheckStatus
{
  pass,
  fail,
  not_applicable,
  /// The check needs an exhaustive search that was not run: the group is
  /// above the subgroup bound or is held in chain mode.
  inconclusive
};

std::string to_string(CheckStatus s);
CheckStatus check_status_from_string(std::string const &s);

/// A subgroup (or single element) that makes a check fail, by generators.
struct Witness
{
  std::string role;
  std::vector<Permutation> generators;
  friend bool operator==(Witness const &, Witness const &) = default;
};

struct CheckResult
{
  CheckStatus status = CheckStatus::pass;
  std::string detail;
  std::vector<Witness> witnesses;
  friend bool operator==(CheckResult const &, CheckResult const &) = default;
};

/// Check names used in stage verdicts.
namespace checks {
inline constexpr char const *critical_pair = "critical_pair";
inline constexpr char const *centralizer = "centralizer";
inline constexpr char const *commuting_conjugates = "commuting_conjugates";
inline constexpr char const *normalised_dichotomy = "normalised_dichotomy";
inline constexpr char const *central_indecomposable = "central_indecomposable";
inline constexpr char const *class_factor = "class_factor";
inline constexpr char const *wilson_containment = "wilson_containment";
inline constexpr char const *wilson_generation = "wilson_generation";
} // namespace checks

struct StageVerdict
{
  std::size_t stage = 0;
  std::uint64_t order = 1;
  std::map<std::string, CheckResult> checks;
  std::vector<std::string> notes;
  /// Composition factors in the requested class, when a class was given.
  std::optional<std::size_t> class_factor_count;
  friend bool operator==(StageVerdict const &, StageVerdict const &) = default;
};

/// Per-criterion aggregation over the checked stages.
struct CriterionSummary
{
  std::string criterion;
  std::vector<std::string> checks;
  std::vector<std::size_t> checked_stages;
  /// Stages where a constituent check failed: the exception set.
  std::vector<std::size_t> failing_stages;
  std::vector<std::size_t> inconclusive_stages;
  std::vector<std::size_t> satisfied_stages;
  friend bool operator==(CriterionSummary const &, CriterionSummary const &) = default;
};

struct ClassReport
{
  std::string members;
  bool schur_closed = true;
  std::string schur_detail;
  std::vector<std::size_t> counts;
  bool strictly_increasing = true;
  friend bool operator==(ClassReport const &, ClassReport const &) = default;
};

struct SystemVerdict
{
  std::vector<StageVerdict> stages;
  std::vector<CriterionSummary> summary;
  std::vector<std::string> limit_claims;
  std::optional<ClassReport> class_report;
  friend bool operator==(SystemVerdict const &, SystemVerdict const &) = default;
};

struct CertifyOptions
{
  bool wilson = false;
  bool star = false;
  bool thmb = false;
  std::uint64_t subgroup_bound = kDefaultSubgroupBound;
  std::optional<SimpleClass> simple_class;
};

/// (A, B) critical in G. A degenerate pair with B = A fails with the pair
/// itself as witness.
CheckResult check_critical_pair(PermGroup const &g, PermGroup const &a, PermGroup const &b);
/// P C_G(P) <= B.
CheckResult check_centralizer_condition(PermGroup const &g, PermGroup const &p, PermGroup const &b);

/// Both stage conditions of the critical-pair criterion for G_n, where `rho`
/// maps G_{n+1} onto G_n. Throws PreconditionError if rho is not surjective
/// or B is not a proper subgroup.
StageVerdict check_reid_stage(GroupHom const &rho, PermGroup const &a_next, PermGroup const &a,
                              PermGroup const &b);
/// Wilson's two conditions for every normal L of G not inside K.
StageVerdict check_wilson_stage(PermGroup const &g, PermGroup const &k,
                                std::uint64_t subgroup_bound = kDefaultSubgroupBound);
/// No non-normal U with pairwise commuting conjugates has normal closure
/// containing A.
StageVerdict check_star_stage(PermGroup const &g, PermGroup const &a,
                              std::uint64_t subgroup_bound = kDefaultSubgroupBound);
/// A/B is a direct power of a member of the class.
CheckResult check_class_factor(PermGroup const &g, PermGroup const &a, PermGroup const &b,
                               SimpleClass const &cls);
/// The two extra conditions of the strengthened criterion. `p` may be empty
/// at the last stage, in which case the dichotomy is not applicable.
StageVerdict check_thmb_stage(PermGroup const &g, PermGroup const &a, PermGroup const &b,
                              std::optional<PermGroup> const &p,
                              std::uint64_t subgroup_bound = kDefaultSubgroupBound);

/// If K does not centralise A/B then A <= K and K is not nilpotent. A false
/// result means the engine is wrong.
bool verify_critlem(PermGroup const &g, CriticalPair const &pair, PermGroup const &k);

struct OpschVerdict
{
  /// pass: hypotheses hold and E^p(G) < G; fail: hypotheses hold but
  /// E^p(G) = G; not_applicable: a hypothesis fails; inconclusive: a
  /// nonabelian composition factor is outside the Schur table.
  CheckStatus status = CheckStatus::not_applicable;
  bool has_p_chief_factor = false;
  bool p_chief_factors_central = false;
  bool multipliers_coprime = false;
  std::string detail;
};
OpschVerdict check_opsch(PermGroup const &g, std::uint64_t p,
                         SchurTable const &table = SchurTable::builtin());

/// Chooses A-marks on a Wilson-style prefix (kernels only) by picking, at each
/// level, a minimal normal subgroup of the previous quotient that the previous
/// kernel does not centralise. Works inside the top stage, which must be dense.
/// Stage 0 gets the first critical pair whose lower term contains P_0 C(P_0).
/// Throws HypothesisError naming the level where no choice exists.
SystemPrefix derive_reid_from_wilson(SystemPrefix const &prefix);

SystemVerdict certify_system(SystemPrefix const &prefix, CertifyOptions const &options);
/// Criterion summaries and limit claims; a pure function of the stage verdicts.
void summarize(SystemVerdict &verdict);
/// fail if any check failed, else inconclusive if any was, else pass.
CheckStatus overall_status(SystemVerdict const &verdict);

/// Re-evaluates the predicate behind a failed check on its witnesses and
/// returns whether the failure is reproduced.
/// `cls` is needed only for the class_factor check.
bool witness_reproduces(SystemPrefix const &prefix, StageVerdict const &verdict,
                        std::string const &check_name, SimpleClass const *cls = nullptr);

} // namespace jicert
