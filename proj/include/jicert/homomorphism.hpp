#pragma once

#include <memory>
#include <vector>

#include "jicert/perm_group.hpp"

namespace jicert {

/// A homomorphism between permutation groups given by the images of a
/// generating list of the source.
///
/// Construction verifies that the assignment extends to a homomorphism:
/// exhaustively along the Cayley graph of a dense source, and for a
/// chain-mode source by checking that the graph subgroup
/// <(g, phi(g))> has the same order as the source.
class GroupHom
{
public:
  /// Uses `source.generators()` as the domain generating list.
  GroupHom(PermGroup source, PermGroup target, std::vector<Permutation> images);

  /// `domain_gens` must generate `source`; `images[i]` is the image of `domain_gens[i]`.
  GroupHom(PermGroup source, PermGroup target, std::vector<Permutation> domain_gens,
           std::vector<Permutation> images);

  PermGroup const &source() const;
  PermGroup const &target() const;
  std::vector<Permutation> const &domain_generators() const;
  std::vector<Permutation> const &generator_images() const;

  Permutation apply(Permutation const &x) const;
  bool is_surjective() const;

  /// Some element of the source mapping to `y`; throws PreconditionError when
  /// `y` is not in the image.
  Permutation lift(Permutation const &y) const;

  /// Generators of the kernel from the stabilizer chain of the graph subgroup.
  std::vector<Permutation> kernel_generators() const;

  /// First apply *this, then `next`.
  GroupHom then(GroupHom const &next) const;

  struct Impl;

private:
  std::shared_ptr<Impl const> impl_;
};

PermGroup hom_image(GroupHom const &phi, PermGroup const &h);
PermGroup hom_kernel(GroupHom const &phi);
/// Requires K <= image(phi).
PermGroup hom_preimage(GroupHom const &phi, PermGroup const &k);

} // namespace jicert
