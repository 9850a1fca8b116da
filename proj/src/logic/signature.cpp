#include "homwb/logic/signature.hpp"

#include "homwb/error.hpp"

namespace homwb::logic {

std::string sort_name(const PairNode& node, int n) {
    return "h" + std::to_string(n) + "(" + node.total + "," + node.sub + ")";
}

std::string edge_symbol_name(const PairMorphism& edge, int n) { return edge.name + "_" + std::to_string(n); }

std::string connecting_symbol_name(const TripleDecl& t, int n) { return t.name + ".d_" + std::to_string(n); }

std::string mv_symbol_name(const SquareDecl& s, int n) { return s.name + ".d_" + std::to_string(n); }

const SortDecl* Signature::find_sort(const std::string& name) const {
    auto it = sort_index_.find(name);
    return it == sort_index_.end() ? nullptr : &sorts_[it->second];
}

const FunctionDecl* Signature::find_function(const std::string& name) const {
    auto it = function_index_.find(name);
    return it == function_index_.end() ? nullptr : &functions_[it->second];
}

std::optional<std::string> Signature::sort_of(std::size_t node, int n) const {
    auto it = sort_by_node_.find({node, n});
    if (it == sort_by_node_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::string> Signature::edge_symbol(std::size_t edge, int n) const {
    auto it = symbol_by_origin_.find({SymbolOrigin::Edge, edge, n});
    if (it == symbol_by_origin_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::string> Signature::connecting_symbol(std::size_t triple, int n) const {
    auto it = symbol_by_origin_.find({SymbolOrigin::Connecting, triple, n});
    if (it == symbol_by_origin_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::string> Signature::mv_symbol(std::size_t square, int n) const {
    auto it = symbol_by_origin_.find({SymbolOrigin::MayerVietoris, square, n});
    if (it == symbol_by_origin_.end()) return std::nullopt;
    return it->second;
}

Signature generate_signature(const PairDiagram& diagram, DegreeWindow window) {
    if (window.hi < window.lo)
        throw InputError("degree window " + std::to_string(window.lo) + ".." + std::to_string(window.hi) +
                         " is empty");
    Signature sig;
    sig.window_ = window;
    const auto& nodes = diagram.nodes();
    auto add_sort = [&](std::size_t node, int n) {
        SortDecl s{sort_name(nodes[node], n), node, n};
        if (sig.sort_index_.count(s.name)) throw InputError("duplicate sort " + s.name);
        sig.sort_index_[s.name] = sig.sorts_.size();
        sig.sort_by_node_[{node, n}] = s.name;
        sig.sorts_.push_back(std::move(s));
    };
    auto add_fn = [&](FunctionDecl f) {
        if (sig.function_index_.count(f.name)) throw InputError("duplicate function symbol " + f.name);
        sig.function_index_[f.name] = sig.functions_.size();
        sig.symbol_by_origin_[{f.origin, f.index, f.degree}] = f.name;
        sig.functions_.push_back(std::move(f));
    };

    for (std::size_t v = 0; v < nodes.size(); ++v)
        for (int n = window.lo; n <= window.hi; ++n) add_sort(v, n);

    const auto& edges = diagram.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (edges[e].kind == MorphismKind::Identity) continue;
        for (int n = window.lo; n <= window.hi; ++n)
            add_fn({edge_symbol_name(edges[e], n), *sig.sort_of(edges[e].source, n),
                    *sig.sort_of(edges[e].target, n), SymbolOrigin::Edge, e, n});
    }
    for (std::size_t t = 0; t < diagram.triples().size(); ++t) {
        const TripleDecl& tr = diagram.triples()[t];
        for (int n = window.lo + 1; n <= window.hi; ++n)
            add_fn({connecting_symbol_name(tr, n), *sig.sort_of(tr.node_xy, n), *sig.sort_of(tr.node_yz, n - 1),
                    SymbolOrigin::Connecting, t, n});
    }
    for (std::size_t s = 0; s < diagram.squares().size(); ++s) {
        const SquareDecl& sq = diagram.squares()[s];
        for (int n = window.lo + 1; n <= window.hi; ++n)
            add_fn({mv_symbol_name(sq, n), *sig.sort_of(sq.node_d, n), *sig.sort_of(sq.node_b, n - 1),
                    SymbolOrigin::MayerVietoris, s, n});
    }
    return sig;
}

} // namespace homwb::logic
