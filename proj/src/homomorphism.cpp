#include "jicert/homomorphism.hpp"

#include <mutex>
#include <numeric>
#include <optional>

#include "jicert/detail/dense_engine.hpp"
#include "jicert/detail/stab_chain.hpp"
#include "jicert/group_ops.hpp"

namespace jicert {

struct GroupHom::Impl
{
  PermGroup source;
  PermGroup target;
  std::vector<Permutation> domain;
  std::vector<Permutation> images;
  std::vector<Permutation> dense_map; // indexed by source element index; dense source only
  std::vector<Permutation> graph_gens;

  mutable std::once_flag source_first_once;
  mutable std::unique_ptr<detail::StabChain> source_first;
  mutable std::once_flag target_first_once;
  mutable std::unique_ptr<detail::StabChain> target_first;

  std::size_t graph_degree() const { return source.degree() + target.degree(); }

  Permutation graph_element(Permutation const &x, Permutation const &y) const
  {
    std::vector<Point> imgs(graph_degree());
    std::size_t off = source.degree();
    for (std::size_t i = 0; i < off; ++i)
      imgs[i] = x[static_cast<Point>(i)];
    for (std::size_t i = 0; i < target.degree(); ++i)
      imgs[off + i] = static_cast<Point>(off + y[static_cast<Point>(i)]);
    return Permutation(std::move(imgs));
  }

  detail::StabChain const &chain_source_first() const
  {
    std::call_once(source_first_once, [this] {
      std::vector<Point> base(source.degree());
      std::iota(base.begin(), base.end(), Point{0});
      source_first = std::make_unique<detail::StabChain>(graph_degree(), graph_gens, base);
    });
    return *source_first;
  }

  detail::StabChain const &chain_target_first() const
  {
    std::call_once(target_first_once, [this] {
      std::vector<Point> base(target.degree());
      std::iota(base.begin(), base.end(), static_cast<Point>(source.degree()));
      target_first = std::make_unique<detail::StabChain>(graph_degree(), graph_gens, base);
    });
    return *target_first;
  }
};

namespace {

std::shared_ptr<GroupHom::Impl const> make_impl(PermGroup source, PermGroup target,
                                                std::vector<Permutation> domain,
                                                std::vector<Permutation> images)
{
  if (domain.size() != images.size())
    throw PreconditionError("generator and image lists differ in length");
  for (auto const &d : domain) {
    if (!source.contains(d))
      throw PreconditionError("domain generator " + d.to_cycle_string() + " is not in the source");
  }
  for (auto const &y : images) {
    if (!target.contains(y))
      throw InvalidHomomorphism("generator image " + y.to_cycle_string() +
                                " is not in the target group");
  }
  if (PermGroup::from_generators(source.degree(), domain, Mode::chain).order() != source.order())
    throw PreconditionError("domain generators do not generate the source");

  auto impl = std::make_shared<GroupHom::Impl>();
  impl->source = std::move(source);
  impl->target = std::move(target);
  impl->domain = std::move(domain);
  impl->images = std::move(images);
  for (std::size_t k = 0; k < impl->domain.size(); ++k)
    impl->graph_gens.push_back(impl->graph_element(impl->domain[k], impl->images[k]));

  if (impl->source.mode() == Mode::dense) {
    // Assign images along the right Cayley graph and require every edge to agree.
    auto const &e = impl->source.engine();
    std::vector<std::uint32_t> dk;
    for (auto const &d : impl->domain)
      dk.push_back(e.index_of(d));
    std::vector<std::optional<Permutation>> map(e.size());
    map[0] = Permutation(impl->target.degree());
    std::vector<std::uint32_t> queue{0};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      std::uint32_t x = queue[q];
      for (std::size_t k = 0; k < dk.size(); ++k) {
        std::uint32_t y = e.mul(x, dk[k]);
        Permutation img = *map[x] * impl->images[k];
        if (!map[y]) {
          map[y] = std::move(img);
          queue.push_back(y);
        } else if (*map[y] != img) {
          throw InvalidHomomorphism("generator images violate a relation of the source");
        }
      }
    }
    impl->dense_map.reserve(e.size());
    for (auto &m : map)
      impl->dense_map.push_back(std::move(*m));
  } else {
    std::uint64_t graph_order = detail::StabChain(impl->graph_degree(), impl->graph_gens).order();
    if (graph_order != impl->source.order())
      throw InvalidHomomorphism("generator images do not define a homomorphism");
  }
  return impl;
}

} // namespace

GroupHom::GroupHom(PermGroup source, PermGroup target, std::vector<Permutation> images)
{
  std::vector<Permutation> domain(source.generators().begin(), source.generators().end());
  impl_ = make_impl(std::move(source), std::move(target), std::move(domain), std::move(images));
}

GroupHom::GroupHom(PermGroup source, PermGroup target, std::vector<Permutation> domain_gens,
                   std::vector<Permutation> images)
: impl_(make_impl(std::move(source), std::move(target), std::move(domain_gens),
                  std::move(images)))
{}

PermGroup const &GroupHom::source() const { return impl_->source; }
PermGroup const &GroupHom::target() const { return impl_->target; }
std::vector<Permutation> const &GroupHom::domain_generators() const { return impl_->domain; }
std::vector<Permutation> const &GroupHom::generator_images() const { return impl_->images; }

Permutation GroupHom::apply(Permutation const &x) const
{
  if (!impl_->source.contains(x))
    throw PreconditionError("element " + x.to_cycle_string() + " is not in the source");
  if (!impl_->dense_map.empty())
    return impl_->dense_map[impl_->source.engine().index_of(x)];
  auto const &ch = impl_->chain_source_first();
  Permutation g = impl_->graph_element(x, Permutation(impl_->target.degree()));
  auto [residue, level] = ch.strip(std::move(g), 0, impl_->source.degree());
  return residue.restricted(impl_->source.degree(), impl_->target.degree()).inverse();
}

Permutation GroupHom::lift(Permutation const &y) const
{
  auto const &ch = impl_->chain_target_first();
  Permutation g = impl_->graph_element(Permutation(impl_->source.degree()), y);
  auto [residue, level] = ch.strip(std::move(g), 0, impl_->target.degree());
  Permutation t = residue.restricted(impl_->source.degree(), impl_->target.degree());
  if (!t.is_identity())
    throw PreconditionError("element " + y.to_cycle_string() + " is not in the image");
  return residue.restricted(0, impl_->source.degree()).inverse();
}

std::vector<Permutation> GroupHom::kernel_generators() const
{
  auto const &ch = impl_->chain_target_first();
  std::vector<Permutation> gens;
  for (auto const &s : ch.stabilizer_generators(impl_->target.degree()))
    gens.push_back(s.restricted(0, impl_->source.degree()));
  return gens;
}

bool GroupHom::is_surjective() const
{
  return hom_image(*this, impl_->source).order() == impl_->target.order();
}

GroupHom GroupHom::then(GroupHom const &next) const
{
  std::vector<Permutation> imgs;
  for (auto const &y : impl_->images)
    imgs.push_back(next.apply(y));
  return GroupHom(impl_->source, next.target(), impl_->domain, std::move(imgs));
}

PermGroup hom_image(GroupHom const &phi, PermGroup const &h)
{
  if (!h.is_subgroup_of(phi.source()))
    throw PreconditionError("H is not a subgroup of the source");
  std::vector<Permutation> imgs;
  for (auto const &x : h.generators())
    imgs.push_back(phi.apply(x));
  return subgroup_generated(phi.target(), imgs);
}

PermGroup hom_kernel(GroupHom const &phi)
{
  PermGroup const &src = phi.source();
  if (src.mode() == Mode::dense) {
    auto const &e = src.engine();
    detail::ElementSet bits(e.size());
    for (std::uint32_t i = 0; i < e.size(); ++i) {
      if (phi.apply(e.element(i)).is_identity())
        bits.set(i);
    }
    return e.to_group(e.from_bits(bits));
  }
  return PermGroup::from_generators(src.degree(), phi.kernel_generators(), Mode::chain,
                                    src.dense_bound());
}

PermGroup hom_preimage(GroupHom const &phi, PermGroup const &k)
{
  if (!k.is_subgroup_of(phi.target()))
    throw PreconditionError("K is not a subgroup of the target");
  PermGroup ker = hom_kernel(phi);
  std::vector<Permutation> gens(ker.generators().begin(), ker.generators().end());
  for (auto const &y : k.generators())
    gens.push_back(phi.lift(y));
  return subgroup_generated(phi.source(), gens);
}

} // namespace jicert
