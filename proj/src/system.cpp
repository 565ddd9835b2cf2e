#include "jicert/system.hpp"

#include "jicert/group_ops.hpp"

namespace jicert {

std::optional<PermGroup> SystemPrefix::b(std::size_t n) const
{
  if (n >= stages.size())
    return std::nullopt;
  return n == 0 ? stages[0].b0 : stages[n].kernel;
}

std::optional<PermGroup> SystemPrefix::p(std::size_t n) const
{
  if (n + 1 >= stages.size())
    return std::nullopt;
  auto const &next = stages[n + 1];
  if (!next.a_mark || !next.map)
    return std::nullopt;
  return hom_image(*next.map, *next.a_mark);
}

void validate_prefix(SystemPrefix &prefix)
{
  if (prefix.stages.empty())
    throw PreconditionError("the system has no stages");
  for (std::size_t n = 0; n < prefix.stages.size(); ++n) {
    auto &st = prefix.stages[n];
    std::string where = "stage " + std::to_string(n) + ": ";
    if (st.a_mark) {
      if (!st.a_mark->is_subgroup_of(st.group))
        throw PreconditionError(where + "A mark is not a subgroup of the stage group");
      if (!is_normal(st.group, *st.a_mark))
        throw PreconditionError(where + "A mark is not normal");
    }
    if (st.b0) {
      if (n != 0)
        throw PreconditionError(where + "B_0 may only be given at stage 0");
      if (!st.b0->is_subgroup_of(st.group) || !is_normal(st.group, *st.b0))
        throw PreconditionError(where + "B_0 is not a normal subgroup");
      if (st.b0->order() == st.group.order())
        throw PreconditionError(where + "B_0 must be a proper subgroup");
    }
    if (n == 0) {
      if (st.map)
        throw PreconditionError(where + "stage 0 has no map");
      continue;
    }
    if (!st.map)
      throw PreconditionError(where + "missing map to the previous stage");
    if (!st.map->source().same_group(st.group) ||
        !st.map->target().same_group(prefix.stages[n - 1].group))
      throw PreconditionError(where + "map does not connect consecutive stages");
    if (!st.map->is_surjective())
      throw PreconditionError(where + "map is not surjective");
    st.kernel = hom_kernel(*st.map);
    if (st.kernel->order() * prefix.stages[n - 1].group.order() != st.group.order())
      throw Error(where + "kernel order does not match the index");
    if (st.a_mark && st.kernel->order() == st.group.order())
      throw PreconditionError(where + "the kernel is the whole group, so B_n is not proper");
  }
}

} // namespace jicert
