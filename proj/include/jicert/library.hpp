#pragma once

#include <string>

#include "jicert/perm_group.hpp"

namespace jicert::library {

PermGroup cyclic(std::size_t n);
PermGroup symmetric(std::size_t n);
PermGroup alternating(std::size_t n);
/// Dihedral group of the given order (order 2m acting on m points; order 4 is
/// the Klein four-group on 4 points).
PermGroup dihedral(std::size_t order);
/// Quaternion group of order 8 in its regular representation.
PermGroup quaternion8();
/// SL(2, p) acting on the p^2 - 1 nonzero vectors of F_p^2.
PermGroup special_linear2(std::size_t p);
/// PSL(2, p) acting on the p + 1 points of the projective line.
PermGroup projective_special_linear2(std::size_t p);

/// Parses names such as "C6", "S4", "A5", "D8", "Q8", "SL(2,5)", "PSL(2,7)".
/// Throws PreconditionError for unknown names.
PermGroup by_name(std::string const &name, Mode mode = Mode::dense,
                  std::uint64_t dense_bound = kDefaultDenseBound);

} // namespace jicert::library
