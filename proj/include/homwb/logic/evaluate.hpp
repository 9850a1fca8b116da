#pragma once

#include "homwb/logic/formula.hpp"
#include "homwb/logic/structure.hpp"

#include <optional>
#include <string>
#include <vector>

namespace homwb::logic {

struct Assignment {
    std::string var;
    std::string sort;
    Element value = 0;
    std::string label;
};

struct Verdict {
    bool valid = true;
    /// First failing context assignment in enumeration order (first
    /// variable slowest).
    std::optional<std::vector<Assignment>> counterexample;
    std::size_t assignments_checked = 0;
};

/// Throws InputError on unknown sorts/symbols, sort mismatches, or free
/// variables missing from the context.
void check_well_sorted(const FiniteStructure& s, const RegularSequent& seq);

/// phi |- psi is valid when every context assignment satisfying phi also
/// satisfies psi; existentials are searched exhaustively.
Verdict eval_sequent(const FiniteStructure& s, const RegularSequent& seq);

struct CandidateVerdict {
    RegularSequent sequent;
    Verdict verdict;
};

struct TheoryFragment {
    std::vector<RegularSequent> retained;
    std::vector<CandidateVerdict> rejected;
};

/// The candidates valid in s (a finite slice of the theory of s).
TheoryFragment theory_of_model(const FiniteStructure& s, const std::vector<RegularSequent>& candidates);

} // namespace homwb::logic
