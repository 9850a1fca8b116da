#include "homwb/diagram.hpp"

#include "homwb/error.hpp"

#include <algorithm>

namespace homwb {

std::string kind_name(MorphismKind k) {
    switch (k) {
    case MorphismKind::Square: return "square";
    case MorphismKind::Identity: return "identity";
    case MorphismKind::Composite: return "composite";
    case MorphismKind::BoxTimes: return "boxtimes";
    case MorphismKind::BoxPlus: return "boxplus";
    case MorphismKind::Partial: return "partial";
    }
    return "?";
}

std::string filtration_step_name(const std::string& prefix, int p) { return prefix + "." + std::to_string(p); }

const SimplicialComplex& PairDiagram::complex(const std::string& name) const {
    auto it = complexes_.find(name);
    if (it == complexes_.end()) throw InputError("unknown complex '" + name + "'");
    return it->second;
}

bool PairDiagram::has_complex(const std::string& name) const { return complexes_.count(name) > 0; }

std::optional<std::size_t> PairDiagram::find_node(const std::string& total, const std::string& sub) const {
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        if (nodes_[i].total == total && nodes_[i].sub == sub) return i;
    return std::nullopt;
}

std::optional<std::size_t> PairDiagram::find_edge(const std::string& name) const {
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].name == name) return i;
    return std::nullopt;
}

std::size_t PairDiagram::identity_edge(std::size_t node) const { return identity_of_.at(node); }

std::optional<std::size_t> PairDiagram::find_triple(const std::string& x, const std::string& y,
                                                    const std::string& z) const {
    for (std::size_t i = 0; i < triples_.size(); ++i)
        if (triples_[i].x == x && triples_[i].y == y && triples_[i].z == z) return i;
    return std::nullopt;
}

int PairDiagram::max_dim() const {
    int d = -1;
    for (const auto& n : nodes_) d = std::max(d, n.pair.total.dim());
    return d;
}

namespace {

VertexMap restrict_map(const VertexMap& f, const SimplicialComplex& domain) {
    VertexMap out;
    for (const auto& v : domain.vertices()) {
        auto it = f.find(v);
        if (it == f.end()) throw InputError("vertex map is undefined on '" + v + "'");
        out[v] = it->second;
    }
    return out;
}

std::optional<std::string> edge_problem(const PairDiagram& d, const PairMorphism& e) {
    const SimpPair& src = d.nodes()[e.source].pair;
    const SimpPair& tgt = d.nodes()[e.target].pair;
    for (const auto& v : src.total.vertices())
        if (!e.vertex_map.count(v)) return "map '" + e.name + "' is undefined on vertex '" + v + "'";
    if (auto bad = simplicial_violation(e.vertex_map, src.total, tgt.total))
        return "map '" + e.name + "' is not simplicial: " + simplex_to_string(*bad) + " maps to " +
               simplex_to_string(image_of(e.vertex_map, *bad)) + ", which is not a simplex of the target";
    if (auto bad = simplicial_violation(e.vertex_map, src.sub, tgt.sub))
        return "map '" + e.name + "' does not send the subcomplex into the target subcomplex: " +
               simplex_to_string(*bad) + " maps outside it";
    return std::nullopt;
}

} // namespace

std::vector<std::string> PairDiagram::verify() const {
    std::vector<std::string> problems;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        auto it = identity_of_.find(i);
        if (it == identity_of_.end()) problems.push_back("node " + nodes_[i].name() + " has no identity edge");
    }
    for (const auto& e : edges_)
        if (auto p = edge_problem(*this, e)) problems.push_back(*p);
    for (const auto& c : composites_) {
        const auto& f = edges_[c.first];
        const auto& g = edges_[c.second];
        const auto& h = edges_[c.composite];
        if (f.target != g.source || h.source != f.source || h.target != g.target) {
            problems.push_back("composite '" + h.name + "' has mismatched endpoints");
            continue;
        }
        if (compose_maps(g.vertex_map, f.vertex_map) != h.vertex_map)
            problems.push_back("composite '" + h.name + "' differs from '" + g.name + "' o '" + f.name + "'");
    }
    for (const auto& t : triples_) {
        const auto& bt = edges_[t.box_times];
        const auto& bp = edges_[t.box_plus];
        const auto& dq = edges_[t.partial];
        if (bt.source != t.node_yz || bt.target != t.node_xz || bp.source != t.node_xz || bp.target != t.node_xy ||
            dq.source != t.node_yz || dq.target != t.node_xy)
            problems.push_back("triple '" + t.name + "' has a broken factorization");
        const bool declared = std::any_of(composites_.begin(), composites_.end(), [&](const CompositeDecl& c) {
            return c.first == t.box_times && c.second == t.box_plus && c.composite == t.partial;
        });
        if (!declared) problems.push_back("triple '" + t.name + "': boundary square is not recorded as the composite");
    }
    for (const auto& c : cubes_) {
        const auto& t1 = triples_[c.triple];
        const auto& t2 = triples_[c.target_triple];
        const auto& sq = edges_[c.square];
        const auto& di = edges_[c.diamond];
        if (sq.source != t1.node_xy || sq.target != t2.node_xy || di.source != t1.node_yz || di.target != t2.node_yz) {
            problems.push_back("cube '" + c.name + "' has mismatched endpoints");
            continue;
        }
        // partial' o diamond == square o partial on vertex maps
        const VertexMap lhs = compose_maps(edges_[t2.partial].vertex_map, di.vertex_map);
        const VertexMap rhs = compose_maps(sq.vertex_map, edges_[t1.partial].vertex_map);
        if (lhs != rhs) problems.push_back("cube '" + c.name + "' does not commute");
    }
    return problems;
}

DiagramBuilder::DiagramBuilder() { diagram_.complexes_[kEmptyName] = SimplicialComplex{}; }

void DiagramBuilder::add_complex(const std::string& name, SimplicialComplex k) {
    auto it = diagram_.complexes_.find(name);
    if (it != diagram_.complexes_.end()) {
        if (it->second == k) return;
        throw InputError("complex '" + name + "' is already defined differently");
    }
    diagram_.complexes_[name] = std::move(k);
}

std::string DiagramBuilder::unique_edge_name(const std::string& base) const {
    std::string name = base;
    for (int k = 2; diagram_.find_edge(name); ++k) name = base + "." + std::to_string(k);
    return name;
}

std::size_t DiagramBuilder::add_edge(PairMorphism e) {
    if (diagram_.find_edge(e.name)) throw InputError("map name '" + e.name + "' is already used");
    if (auto p = edge_problem(diagram_, e)) throw InputError(*p);
    diagram_.edges_.push_back(std::move(e));
    return diagram_.edges_.size() - 1;
}

std::size_t DiagramBuilder::add_pair(const std::string& total, const std::string& sub) {
    if (auto n = diagram_.find_node(total, sub)) return *n;
    const SimplicialComplex& x = diagram_.complex(total);
    const SimplicialComplex& y = diagram_.complex(sub);
    PairNode node{total, sub, SimpPair::make(x, y)};
    diagram_.nodes_.push_back(std::move(node));
    const std::size_t idx = diagram_.nodes_.size() - 1;
    PairMorphism id{unique_edge_name("id." + total + "." + sub), idx, idx, identity_map(x), MorphismKind::Identity};
    diagram_.identity_of_[idx] = add_edge(std::move(id));
    return idx;
}

std::size_t DiagramBuilder::add_map(const std::string& name, std::size_t source, std::size_t target, const VertexMap& f,
                                    MorphismKind kind) {
    if (source >= diagram_.nodes_.size() || target >= diagram_.nodes_.size())
        throw InputError("map '" + name + "': unknown pair");
    return add_edge({name, source, target, restrict_map(f, diagram_.nodes_[source].pair.total), kind});
}

std::size_t DiagramBuilder::add_composite(const std::string& name, std::size_t first, std::size_t second) {
    const auto& f = diagram_.edges_.at(first);
    const auto& g = diagram_.edges_.at(second);
    if (f.target != g.source)
        throw InputError("composite '" + name + "': '" + f.name + "' and '" + g.name + "' are not composable");
    const std::size_t src = f.source, tgt = g.target;
    const VertexMap h = compose_maps(g.vertex_map, f.vertex_map);
    const std::size_t idx = add_map(name, src, tgt, h, MorphismKind::Composite);
    diagram_.composites_.push_back({first, second, idx});
    return idx;
}

std::size_t DiagramBuilder::add_triple(const std::string& name, const std::string& x, const std::string& y,
                                       const std::string& z) {
    const SimplicialComplex& cx = diagram_.complex(x);
    const SimplicialComplex& cy = diagram_.complex(y);
    const SimplicialComplex& cz = diagram_.complex(z);
    if (!cy.is_subcomplex_of(cx)) throw InputError("triple '" + name + "': " + y + " is not a subcomplex of " + x);
    if (!cz.is_subcomplex_of(cy)) throw InputError("triple '" + name + "': " + z + " is not a subcomplex of " + y);
    TripleDecl t;
    t.name = name;
    t.x = x;
    t.y = y;
    t.z = z;
    t.node_yz = add_pair(y, z);
    t.node_xz = add_pair(x, z);
    t.node_xy = add_pair(x, y);
    t.box_times = add_map(name + ".bt", t.node_yz, t.node_xz, identity_map(cy), MorphismKind::BoxTimes);
    t.box_plus = add_map(name + ".bp", t.node_xz, t.node_xy, identity_map(cx), MorphismKind::BoxPlus);
    t.partial = add_map(name + ".dsq", t.node_yz, t.node_xy, identity_map(cy), MorphismKind::Partial);
    diagram_.composites_.push_back({t.box_times, t.box_plus, t.partial});
    diagram_.triples_.push_back(std::move(t));
    return diagram_.triples_.size() - 1;
}

std::size_t DiagramBuilder::add_cube(const std::string& name, std::size_t triple, std::size_t target_triple,
                                     const VertexMap& f) {
    const TripleDecl t1 = diagram_.triples_.at(triple);
    const TripleDecl t2 = diagram_.triples_.at(target_triple);
    CubeDecl c;
    c.name = name;
    c.triple = triple;
    c.target_triple = target_triple;
    c.square = add_map(name + ".sq", t1.node_xy, t2.node_xy, f);
    c.diamond = add_map(name + ".dia", t1.node_yz, t2.node_yz, f);
    diagram_.cubes_.push_back(c);
    if (auto problems = diagram_.verify(); !problems.empty())
        for (const auto& p : problems)
            if (p.rfind("cube '" + name + "'", 0) == 0) throw InputError(p);
    return diagram_.cubes_.size() - 1;
}

std::size_t DiagramBuilder::add_prism(const std::string& name, const std::string& x, const std::string& y) {
    const SimplicialComplex cx = diagram_.complex(x);
    const SimplicialComplex cy = diagram_.complex(y);
    if (!cy.is_subcomplex_of(cx)) throw InputError("prism '" + name + "': " + y + " is not a subcomplex of " + x);
    const Prism px = prism(cx);
    const std::string xi = x + ".I";
    std::string yi = kEmptyName;
    add_complex(xi, px.complex);
    if (!cy.empty()) {
        yi = y + ".I";
        add_complex(yi, prism(cy).complex);
    }
    PrismDecl p;
    p.name = name;
    p.base = add_pair(x, y);
    p.cylinder = add_pair(xi, yi);
    p.bottom = add_map(name + ".i0", p.base, p.cylinder, px.bottom);
    p.top = add_map(name + ".i1", p.base, p.cylinder, px.top);
    p.project = add_map(name + ".pi", p.cylinder, p.base, px.project);
    diagram_.prisms_.push_back(p);
    return diagram_.prisms_.size() - 1;
}

std::size_t DiagramBuilder::add_square(const std::string& name, const std::string& x, const std::string& u,
                                       const std::string& v) {
    const DistinguishedSquare sq = subcomplex_union(diagram_.complex(x), diagram_.complex(u), diagram_.complex(v));
    const std::string cap = name + ".cap";
    const std::string cup = name + ".cup";
    add_complex(cap, sq.intersection);
    add_complex(cup, sq.union_);
    SquareDecl s;
    s.name = name;
    s.node_b = add_pair(cap, kEmptyName);
    s.node_a = add_pair(u, kEmptyName);
    s.node_c = add_pair(v, kEmptyName);
    s.node_d = add_pair(cup, kEmptyName);
    s.alpha = add_map(name + ".a", s.node_b, s.node_a, identity_map(sq.intersection));
    s.gamma = add_map(name + ".g", s.node_b, s.node_c, identity_map(sq.intersection));
    s.beta = add_map(name + ".b", s.node_a, s.node_d, identity_map(sq.u));
    s.epsilon = add_map(name + ".e", s.node_c, s.node_d, identity_map(sq.v));
    diagram_.squares_.push_back(s);
    return diagram_.squares_.size() - 1;
}

std::size_t DiagramBuilder::add_square_map(const std::string& name, std::size_t source, std::size_t target,
                                           const VertexMap& f) {
    const SquareDecl s1 = diagram_.squares_.at(source);
    const SquareDecl s2 = diagram_.squares_.at(target);
    SquareMapDecl m;
    m.name = name;
    m.source = source;
    m.target = target;
    m.map_b = add_map(name + ".B", s1.node_b, s2.node_b, f);
    m.map_a = add_map(name + ".A", s1.node_a, s2.node_a, f);
    m.map_c = add_map(name + ".C", s1.node_c, s2.node_c, f);
    m.map_d = add_map(name + ".D", s1.node_d, s2.node_d, f);
    diagram_.square_maps_.push_back(m);
    return diagram_.square_maps_.size() - 1;
}

void DiagramBuilder::add_filtration(const std::string& prefix, const std::string& base, const Filtration& f) {
    if (!(diagram_.complex(base) == f.base())) throw InputError("filtration '" + prefix + "' does not filter " + base);
    const int d = f.length();
    auto name = [&](int p) -> std::string {
        if (p < 0) return kEmptyName;
        if (p >= d) return base;
        return filtration_step_name(prefix, p);
    };
    for (int p = 0; p < d; ++p) add_complex(name(p), f.step(p));
    for (int p = 0; p <= d; ++p) {
        add_pair(name(p), kEmptyName);
        add_pair(name(p), name(p - 1));
        if (p >= 1 && !diagram_.find_triple(name(p), name(p - 1), name(p - 2)))
            add_triple(prefix + ".t" + std::to_string(p), name(p), name(p - 1), name(p - 2));
        if (p >= 1 && !diagram_.find_triple(name(p), name(p - 1), kEmptyName))
            add_triple(prefix + ".e" + std::to_string(p), name(p), name(p - 1), kEmptyName);
        if (p < d && !diagram_.find_triple(base, name(p), kEmptyName))
            add_triple(prefix + ".n" + std::to_string(p), base, name(p), kEmptyName);
    }
}

} // namespace homwb
