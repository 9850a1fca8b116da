#pragma once

#include "homwb/diagram.hpp"
#include "homwb/model.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace homwb::logic {

/// Sort h_n(X,Y) for one pair node and one degree.
struct SortDecl {
    std::string name;
    std::size_t node = 0;
    int degree = 0;
};

/// Where a unary function symbol comes from.
enum class SymbolOrigin { Edge, Connecting, MayerVietoris };

struct FunctionDecl {
    std::string name;
    std::string domain;
    std::string codomain;
    SymbolOrigin origin = SymbolOrigin::Edge;
    std::size_t index = 0;  ///< edge, triple or square index
    int degree = 0;         ///< degree of the domain
};

/// Sorts (each carrying +, -, 0) and unary function symbols. Equality is the
/// only relation.
class Signature {
public:
    const std::vector<SortDecl>& sorts() const { return sorts_; }
    const std::vector<FunctionDecl>& functions() const { return functions_; }
    const DegreeWindow& window() const { return window_; }

    const SortDecl* find_sort(const std::string& name) const;
    const FunctionDecl* find_function(const std::string& name) const;
    /// Name of h_n of a node, or nullopt when n is outside the window.
    std::optional<std::string> sort_of(std::size_t node, int n) const;
    std::optional<std::string> edge_symbol(std::size_t edge, int n) const;
    std::optional<std::string> connecting_symbol(std::size_t triple, int n) const;
    std::optional<std::string> mv_symbol(std::size_t square, int n) const;

private:
    friend Signature generate_signature(const PairDiagram& diagram, DegreeWindow window);
    DegreeWindow window_;
    std::vector<SortDecl> sorts_;
    std::vector<FunctionDecl> functions_;
    std::map<std::string, std::size_t> sort_index_;
    std::map<std::string, std::size_t> function_index_;
    std::map<std::pair<std::size_t, int>, std::string> sort_by_node_;
    std::map<std::tuple<SymbolOrigin, std::size_t, int>, std::string> symbol_by_origin_;
};

std::string sort_name(const PairNode& node, int n);
std::string edge_symbol_name(const PairMorphism& edge, int n);
std::string connecting_symbol_name(const TripleDecl& t, int n);
std::string mv_symbol_name(const SquareDecl& s, int n);

/// Sorts = nodes x window. One symbol per non-identity edge and degree, one
/// connecting symbol per triple and degree n with n, n-1 in the window, and
/// one Mayer-Vietoris symbol per distinguished square under the same rule.
/// Identity edges contribute no symbol: they are interpreted as the
/// identity. Throws InputError for an empty window.
Signature generate_signature(const PairDiagram& diagram, DegreeWindow window);

} // namespace homwb::logic
