#include "oakit/multiplicity.hpp"

namespace oakit {

namespace {

const ResourceConstruct* as_construct(const ResourceRef& r) {
  return std::get_if<ResourceConstruct>(&r.value);
}

const SelectorConstruct* as_construct(const Selector& s) {
  return std::get_if<SelectorConstruct>(&s.kind);
}

template <class Item>
struct Alternative {
  std::vector<Item> leaves;
  std::optional<NodeId> set_id;
};

template <class Item>
std::vector<Alternative<Item>> alternatives(const Item& item, ExpandMode mode);

template <class Item>
std::vector<Alternative<Item>> construct_alternatives(const Construct<Item>& c, ExpandMode mode) {
  if (c.items.empty()) {
    throw Error(ErrorCode::EmptyConstruct,
                std::string(to_string(c.kind)) + " " + to_string(c.id) + " has no items");
  }
  if (c.kind == ConstructKind::Choice) {
    if (mode == ExpandMode::Default) return alternatives(c.items.front(), mode);
    std::vector<Alternative<Item>> out;
    for (const auto& branch : c.items) {
      auto alts = alternatives(branch, mode);
      out.insert(out.end(), std::make_move_iterator(alts.begin()),
                 std::make_move_iterator(alts.end()));
    }
    return out;
  }
  // Composite / List: every item is used, so combine one alternative per
  // item. The first item varies slowest.
  std::vector<Alternative<Item>> out{Alternative<Item>{{}, c.id}};
  for (const auto& member : c.items) {
    const auto member_alts = alternatives(member, mode);
    std::vector<Alternative<Item>> next;
    next.reserve(out.size() * member_alts.size());
    for (const auto& prefix : out) {
      for (const auto& alt : member_alts) {
        Alternative<Item> combined = prefix;
        combined.leaves.insert(combined.leaves.end(), alt.leaves.begin(), alt.leaves.end());
        next.push_back(std::move(combined));
      }
    }
    out = std::move(next);
  }
  return out;
}

template <class Item>
std::vector<Alternative<Item>> alternatives(const Item& item, ExpandMode mode) {
  if (const auto* c = as_construct(item)) return construct_alternatives(*c, mode);
  return {Alternative<Item>{{item}, std::nullopt}};
}

template <class Item>
std::vector<Item> default_leaves(const Construct<Item>& c) {
  auto alts = construct_alternatives(c, ExpandMode::Default);
  return std::move(alts.front().leaves);
}

}  // namespace

std::vector<Interpretation> expand(const Annotation& annotation, ExpandMode mode) {
  std::vector<std::vector<Alternative<ResourceRef>>> target_slots;
  target_slots.reserve(annotation.targets.size());
  for (const auto& t : annotation.targets) target_slots.push_back(alternatives(t, mode));

  std::vector<Interpretation> out;
  auto emit = [&](const std::vector<ResourceRef>& bodies) {
    for (const auto& slot : target_slots) {
      for (const auto& alt : slot) out.push_back(Interpretation{bodies, alt.leaves, alt.set_id});
    }
  };
  if (annotation.bodies.empty()) {
    emit({});
    return out;
  }
  for (const auto& body : annotation.bodies) {
    for (const auto& alt : alternatives(body, mode)) emit(alt.leaves);
  }
  return out;
}

std::vector<ResourceRef> flatten_leaves(const ResourceConstruct& construct) {
  return default_leaves(construct);
}

std::vector<Selector> flatten_leaves(const SelectorConstruct& construct) {
  return default_leaves(construct);
}

}  // namespace oakit
