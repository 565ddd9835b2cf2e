#include "jicert/perm_group.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_set>

#include "jicert/detail/dense_engine.hpp"
#include "jicert/detail/stab_chain.hpp"

namespace jicert {

namespace detail {

struct GroupData
{
  std::size_t degree = 0;
  std::vector<Permutation> gens;
  Mode mode = Mode::dense;
  std::uint64_t dense_bound = kDefaultDenseBound;
  std::vector<Permutation> elements; // dense only

  mutable std::once_flag chain_once;
  mutable std::unique_ptr<StabChain> chain;
  mutable std::once_flag engine_once;
  mutable std::unique_ptr<DenseEngine> engine;
};

} // namespace detail

namespace {

std::vector<Permutation> enumerate_closure(std::size_t degree,
                                           std::vector<Permutation> const &gens)
{
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> out{Permutation(degree)};
  seen.insert(out.front());
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (auto const &g : gens) {
      Permutation y = out[k] * g;
      if (seen.insert(y).second)
        out.push_back(std::move(y));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> clean_generators(std::size_t degree, std::vector<Permutation> gens)
{
  std::vector<Permutation> out;
  for (auto &g : gens) {
    if (g.degree() != degree)
      throw PreconditionError("generator degree " + std::to_string(g.degree()) +
                              " does not match group degree " + std::to_string(degree));
    if (g.is_identity() || std::find(out.begin(), out.end(), g) != out.end())
      continue;
    out.push_back(std::move(g));
  }
  return out;
}

} // namespace

std::string to_string(Mode m)
{
  return m == Mode::dense ? "dense" : "chain";
}

PermGroup::PermGroup()
: PermGroup(trivial(0))
{}

PermGroup::PermGroup(std::shared_ptr<detail::GroupData const> d)
: data_(std::move(d))
{}

PermGroup PermGroup::from_generators(std::size_t degree, std::vector<Permutation> gens, Mode mode,
                                     std::uint64_t dense_bound)
{
  auto d = std::make_shared<detail::GroupData>();
  d->degree = degree;
  d->gens = clean_generators(degree, std::move(gens));
  d->mode = mode;
  d->dense_bound = dense_bound;
  if (mode == Mode::dense) {
    std::uint64_t projected = detail::StabChain(degree, d->gens).order();
    if (projected > dense_bound)
      throw DenseBoundExceeded("group of order " + std::to_string(projected) +
                               " exceeds the dense bound " + std::to_string(dense_bound) +
                               "; use chain mode");
    d->elements = enumerate_closure(degree, d->gens);
  }
  return PermGroup(std::move(d));
}

PermGroup PermGroup::from_sorted_elements(std::size_t degree, std::vector<Permutation> gens,
                                          std::vector<Permutation> elements,
                                          std::uint64_t dense_bound)
{
  if (elements.empty() || !elements.front().is_identity() ||
      !std::is_sorted(elements.begin(), elements.end()))
    throw PreconditionError("element list must be sorted and start with the identity");
  for (auto const &e : elements) {
    if (e.degree() != degree)
      throw PreconditionError("element degree does not match group degree");
  }
  auto d = std::make_shared<detail::GroupData>();
  d->degree = degree;
  d->gens = clean_generators(degree, std::move(gens));
  d->mode = Mode::dense;
  d->dense_bound = dense_bound;
  d->elements = std::move(elements);
  return PermGroup(std::move(d));
}

PermGroup PermGroup::trivial(std::size_t degree, Mode mode)
{
  auto d = std::make_shared<detail::GroupData>();
  d->degree = degree;
  d->mode = mode;
  if (mode == Mode::dense)
    d->elements.emplace_back(degree);
  return PermGroup(std::move(d));
}

std::size_t PermGroup::degree() const { return data_->degree; }
std::span<const Permutation> PermGroup::generators() const { return data_->gens; }
Mode PermGroup::mode() const { return data_->mode; }
std::uint64_t PermGroup::dense_bound() const { return data_->dense_bound; }

std::uint64_t PermGroup::order() const
{
  if (data_->mode == Mode::dense)
    return data_->elements.size();
  return chain().order();
}

bool PermGroup::contains(Permutation const &g) const
{
  if (g.degree() != data_->degree)
    return false;
  if (data_->mode == Mode::dense)
    return std::binary_search(data_->elements.begin(), data_->elements.end(), g);
  return chain().contains(g);
}

std::vector<Permutation> const &PermGroup::elements() const
{
  require_dense("element table");
  return data_->elements;
}

bool PermGroup::is_subgroup_of(PermGroup const &other) const
{
  if (degree() != other.degree())
    return false;
  return std::all_of(data_->gens.begin(), data_->gens.end(),
                     [&](Permutation const &g) { return other.contains(g); });
}

bool PermGroup::same_group(PermGroup const &other) const
{
  return degree() == other.degree() && order() == other.order() && is_subgroup_of(other);
}

PermGroup PermGroup::with_mode(Mode mode) const
{
  if (mode == data_->mode)
    return *this;
  return from_generators(data_->degree, data_->gens, mode, data_->dense_bound);
}

detail::StabChain const &PermGroup::chain() const
{
  std::call_once(data_->chain_once, [this] {
    data_->chain = std::make_unique<detail::StabChain>(data_->degree, data_->gens);
  });
  return *data_->chain;
}

detail::DenseEngine const &PermGroup::engine() const
{
  require_dense("index engine");
  std::call_once(data_->engine_once,
                 [this] { data_->engine = std::make_unique<detail::DenseEngine>(*this); });
  return *data_->engine;
}

void PermGroup::require_dense(char const *what) const
{
  if (data_->mode != Mode::dense)
    throw NeedsDenseMode(std::string(what) + " needs a dense-mode group");
}

PermGroup group_from_generators(std::size_t degree, std::vector<Permutation> gens, Mode mode,
                                std::uint64_t dense_bound)
{
  return PermGroup::from_generators(degree, std::move(gens), mode, dense_bound);
}

Mode auto_mode(std::size_t degree, std::span<const Permutation> gens, std::uint64_t dense_bound)
{
  return detail::StabChain(degree, gens).order() <= dense_bound ? Mode::dense : Mode::chain;
}

} // namespace jicert
