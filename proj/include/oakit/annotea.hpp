#pragma once

#include <vector>

#include "oakit/core.hpp"
#include "oakit/model.hpp"
#include "oakit/rdf.hpp"

namespace oakit {

/// Annotea annotations converted to the Open Annotation model, plus what
/// could not be converted. Report entries are Warnings with codes
/// dropped-created, literal-author, unconvertible-context, unmapped-triple.
struct AnnoteaConversion {
  std::vector<Annotation> annotations;
  ValidationReport report;
};

/// Every subject with a:annotates becomes one Annotation, in sorted subject
/// order. Throws Error(NoAnnotations) when there is none.
AnnoteaConversion convert_annotea(const Graph& graph);

}  // namespace oakit
