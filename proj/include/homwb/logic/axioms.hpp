#pragma once

#include "homwb/logic/formula.hpp"
#include "homwb/logic/signature.hpp"

#include <string>
#include <vector>

namespace homwb::logic {

struct Flavors {
    bool core = true;
    bool homotopy = false;
    bool cd = false;

    /// Comma separated subset of "core", "homotopy", "cd".
    static Flavors parse(const std::string& text);
    std::string to_string() const;
    bool operator==(const Flavors&) const = default;
};

/// A homomorphism named in a semantic check: a signature symbol, or one of
/// the two Mayer-Vietoris maps built from the sides of a square.
struct MapRef {
    enum class Kind { Symbol, MvSplit, MvDifference };
    Kind kind = Kind::Symbol;
    std::string symbol;
    std::size_t square = 0;
    int degree = 0;

    static MapRef sym(std::string s) { return {Kind::Symbol, std::move(s), 0, 0}; }
    std::string to_string() const;
};

/// Group-level meaning of an axiom instance, usable with infinite groups.
struct SemanticCheck {
    enum class Kind {
        Group,  ///< sort carries an abelian group
        Hom,    ///< symbol is a well-defined homomorphism
        Equal,  ///< chain lhs == chain rhs (empty chain = identity of `sort`)
        Zero,   ///< chain lhs is the zero map
        Exact,  ///< ker(chain rhs) <= im(chain lhs)
    };
    Kind kind = Kind::Group;
    std::string sort;
    std::vector<MapRef> lhs;  ///< innermost first
    std::vector<MapRef> rhs;
};

struct AxiomInstance {
    std::string id;
    std::string tag;  ///< "U1" ... "U7"
    std::string flavor;
    RegularSequent sequent;
    SemanticCheck check;
};

struct Theory {
    Signature signature;
    Flavors flavors;
    std::vector<AxiomInstance> axioms;
};

/// Instances of the axiom schemas U1-U4 (core), U5 (homotopy) and U6-U7 (cd)
/// over the generated signature. Instances that would mention a symbol
/// missing from the window are skipped. Throws InputError when a requested
/// flavor has no prism / square data, or for an empty window.
Theory generate_axioms(const PairDiagram& diagram, DegreeWindow window, Flavors flavors);

} // namespace homwb::logic
