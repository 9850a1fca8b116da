#pragma once

#include "homwb/logic/axioms.hpp"
#include "homwb/model.hpp"

#include <string>
#include <vector>

namespace homwb::logic {

struct SemanticResult {
    std::string id;
    std::string tag;
    bool passed = true;
    std::string detail;
};

struct SemanticReport {
    std::vector<SemanticResult> results;
    bool all_passed() const;
    std::size_t failures() const;
};

/// Resolves a map reference against a model (degree taken from the symbol).
GroupHom resolve_map(const HomologyModel& model, const Signature& sig, const MapRef& ref);

/// Checks every axiom of the theory by group arithmetic: homomorphism
/// well-definedness, equality of composites, vanishing composites and
/// kernel-in-image inclusions. Works for integral coefficients. Throws
/// InputError when the theory was generated for another diagram or window.
SemanticReport validate_semantic(const HomologyModel& model, const Theory& theory);

} // namespace homwb::logic
