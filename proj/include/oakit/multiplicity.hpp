#pragma once

#include <optional>
#include <vector>

#include "oakit/error.hpp"
#include "oakit/model.hpp"

namespace oakit {

enum class ExpandMode { Default, AllAlternatives };

/// One reading of an annotation: every body in bodies is about the set of
/// targets. Both lists hold leaves only.
struct Interpretation {
  std::vector<ResourceRef> bodies;
  std::vector<ResourceRef> targets;
  /// Identity of the Composite/List that supplied the target set, if any.
  std::optional<NodeId> target_set_id;

  bool operator==(const Interpretation&) const = default;
};

/// Cross product of body slots and target slots, resolving constructs inside
/// each slot. Choice takes its first item in Default mode and branches per
/// item in AllAlternatives mode. Body-less annotations yield one
/// interpretation per target alternative with empty bodies.
/// Throws Error(EmptyConstruct).
std::vector<Interpretation> expand(const Annotation& annotation,
                                   ExpandMode mode = ExpandMode::Default);

/// Depth-first leaves; a Choice contributes only its default item.
std::vector<ResourceRef> flatten_leaves(const ResourceConstruct& construct);
std::vector<Selector> flatten_leaves(const SelectorConstruct& construct);

}  // namespace oakit
