#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "jicert/homomorphism.hpp"
#include "jicert/perm_group.hpp"

namespace jicert {

/// <elems> as a subgroup of `g`. Throws PreconditionError if an element lies outside `g`.
PermGroup subgroup_generated(PermGroup const &g, std::span<const Permutation> elems);

/// Smallest normal subgroup of `g` containing `s`.
PermGroup normal_closure(PermGroup const &g, PermGroup const &s);

/// [A, B] = <[a, b] : a in A, b in B>.
PermGroup commutator_subgroup(PermGroup const &g, PermGroup const &a, PermGroup const &b);

/// C_G(A/B) = { g : [a, g] in B for all a in A }. Requires A, B normal in G and
/// B <= A. Dense mode only.
PermGroup centralizer_of_section(PermGroup const &g, PermGroup const &a, PermGroup const &b);

/// Plain centralizer of an arbitrary subgroup. Dense mode only.
PermGroup centralizer(PermGroup const &g, PermGroup const &h);

PermGroup center(PermGroup const &g);

/// gamma_1 = G, gamma_{i+1} = [gamma_i, G], stopping at the first repeated term.
std::vector<PermGroup> lower_central_series(PermGroup const &g);
bool is_nilpotent(PermGroup const &g);
bool is_abelian(PermGroup const &g);

/// Every generator of `h` is conjugated into `h` by every generator of `g`.
bool is_normal(PermGroup const &g, PermGroup const &h);

/// Dense mode only.
PermGroup intersection(PermGroup const &g, PermGroup const &a, PermGroup const &b);

/// <A, B> inside `g`.
PermGroup join(PermGroup const &g, PermGroup const &a, PermGroup const &b);

/// G/N acting regularly on the right cosets of N, with the projection.
/// Dense mode only; N must be normal.
std::pair<PermGroup, GroupHom> quotient(PermGroup const &g, PermGroup const &n);

/// A x B on disjoint point sets (A first).
PermGroup direct_product(PermGroup const &a, PermGroup const &b);

/// Permutational wreath product `base wr top` on degree(base) * degree(top)
/// points: block b holds points b*degree(base) .. b*degree(base)+degree(base)-1.
/// Dense when the order fits the smaller of the two dense bounds.
PermGroup wreath_product(PermGroup const &base, PermGroup const &top);

/// E^p(G), the intersection of the normal subgroups of index p, computed as the
/// normal closure of the generator commutators and p-th powers.
PermGroup e_p_subgroup(PermGroup const &g, std::uint64_t p);

bool is_prime(std::uint64_t n);

} // namespace jicert
