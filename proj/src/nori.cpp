#include "homwb/nori.hpp"

#include "homwb/error.hpp"
#include "homwb/logic/signature.hpp"
#include "homwb/smith.hpp"

#include <algorithm>
#include <map>

namespace homwb {

std::size_t Representation::add_node(std::string name, FgAbGroup g) {
    if (!g.is_canonical()) throw InputError("representation node " + name + " needs a canonical presentation");
    node_names.push_back(std::move(name));
    groups.push_back(std::move(g));
    return groups.size() - 1;
}

void Representation::add_edge(std::string name, std::size_t source, std::size_t target, GroupHom map) {
    if (source >= groups.size() || target >= groups.size())
        throw InputError("representation edge " + name + " has an unknown endpoint");
    if (!(map.source() == groups[source]) || !(map.target() == groups[target]))
        throw InputError("representation edge " + name + " does not match its endpoint groups");
    map.require_well_defined();
    edges.push_back({std::move(name), source, target, std::move(map)});
}

Representation Representation::from_model(const HomologyModel& model) {
    const PairDiagram& d = model.diagram();
    const DegreeWindow w = model.window();
    Representation t;
    std::map<std::pair<std::size_t, int>, std::size_t> idx;
    for (std::size_t v = 0; v < d.nodes().size(); ++v)
        for (int n = w.lo; n <= w.hi; ++n) idx[{v, n}] = t.add_node(model.sort_label(v, n), model.group(v, n));
    for (std::size_t e = 0; e < d.edges().size(); ++e) {
        const PairMorphism& m = d.edges()[e];
        if (m.kind == MorphismKind::Identity) continue;
        for (int n = w.lo; n <= w.hi; ++n)
            t.add_edge(logic::edge_symbol_name(m, n), idx.at({m.source, n}), idx.at({m.target, n}), model.map(e, n));
    }
    for (std::size_t i = 0; i < d.triples().size(); ++i) {
        const TripleDecl& tr = d.triples()[i];
        for (int n = w.lo + 1; n <= w.hi; ++n)
            t.add_edge(logic::connecting_symbol_name(tr, n), idx.at({tr.node_xy, n}), idx.at({tr.node_yz, n - 1}),
                       model.connecting(i, n));
    }
    for (std::size_t i = 0; i < d.squares().size(); ++i) {
        const SquareDecl& sq = d.squares()[i];
        for (int n = w.lo + 1; n <= w.hi; ++n)
            t.add_edge(logic::mv_symbol_name(sq, n), idx.at({sq.node_d, n}), idx.at({sq.node_b, n - 1}),
                       model.mv_connecting(i, n));
    }
    return t;
}

Subdiagram Subdiagram::full(const Representation& t, std::string name) {
    Subdiagram s;
    s.name = std::move(name);
    for (std::size_t i = 0; i < t.groups.size(); ++i) s.nodes.push_back(i);
    for (std::size_t i = 0; i < t.edges.size(); ++i) s.edges.push_back(i);
    return s;
}

Subdiagram Subdiagram::induced(const Representation& t, std::vector<std::size_t> nodes, std::string name) {
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    Subdiagram s;
    s.name = std::move(name);
    s.nodes = std::move(nodes);
    for (std::size_t i = 0; i < t.edges.size(); ++i)
        if (std::binary_search(s.nodes.begin(), s.nodes.end(), t.edges[i].source) &&
            std::binary_search(s.nodes.begin(), s.nodes.end(), t.edges[i].target))
            s.edges.push_back(i);
    return s;
}

bool Subdiagram::contains(const Subdiagram& other) const {
    auto has = [](const std::vector<std::size_t>& v, std::size_t x) { return std::find(v.begin(), v.end(), x) != v.end(); };
    for (auto n : other.nodes)
        if (!has(nodes, n)) return false;
    for (auto e : other.edges)
        if (!has(edges, e)) return false;
    return true;
}

IntMatrix free_part(const GroupHom& h) {
    const std::size_t s0 = h.source().relations().rows(), t0 = h.target().relations().rows();
    const std::size_t rs = h.source().ngens() - std::min(s0, h.source().ngens());
    const std::size_t rt = h.target().ngens() - std::min(t0, h.target().ngens());
    return h.matrix().block(t0, s0, rt, rs);
}

namespace {

std::size_t free_rank(const FgAbGroup& g) { return g.ngens() - std::min(g.relations().rows(), g.ngens()); }

IntVector flatten(const std::vector<IntMatrix>& tuple) {
    IntVector v;
    for (const auto& m : tuple)
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
}

std::vector<IntMatrix> unflatten(const IntVector& v, const std::vector<std::size_t>& ranks) {
    std::vector<IntMatrix> out;
    std::size_t pos = 0;
    for (std::size_t r : ranks) {
        IntMatrix m(r, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) m(i, j) = v[pos++];
        out.push_back(std::move(m));
    }
    return out;
}

std::vector<IntMatrix> multiply(const std::vector<IntMatrix>& a, const std::vector<IntMatrix>& b) {
    std::vector<IntMatrix> out;
    for (std::size_t k = 0; k < a.size(); ++k) out.push_back(a[k] * b[k]);
    return out;
}

IntMatrix basis_matrix(const EndAlgebra& e) {
    std::size_t n = 0;
    for (std::size_t r : e.ranks) n += r * r;
    IntMatrix b(n, e.basis.size());
    for (std::size_t i = 0; i < e.basis.size(); ++i) b.set_column(i, flatten(e.basis[i]));
    return b;
}

std::size_t position(const std::vector<std::size_t>& v, std::size_t x) {
    return static_cast<std::size_t>(std::find(v.begin(), v.end(), x) - v.begin());
}

} // namespace

std::optional<IntVector> EndAlgebra::coordinates(const std::vector<IntMatrix>& tuple) const {
    const IntMatrix b = basis_matrix(*this);
    const IntVector v = flatten(tuple);
    if (v.size() != b.rows()) return std::nullopt;
    if (b.cols() == 0) return is_zero(v) ? std::optional<IntVector>(IntVector()) : std::nullopt;
    return solve(b, v);
}

EndAlgebra end_algebra(const Representation& t, const Subdiagram& f) {
    EndAlgebra e;
    e.sub = f;
    std::vector<std::size_t> offset;
    std::size_t n = 0;
    for (std::size_t node : f.nodes) {
        if (node >= t.groups.size()) throw InputError("subdiagram " + f.name + " names an unknown node");
        e.ranks.push_back(free_rank(t.groups[node]));
        offset.push_back(n);
        n += e.ranks.back() * e.ranks.back();
    }
    std::vector<IntVector> rows;
    for (std::size_t ei : f.edges) {
        if (ei >= t.edges.size()) throw InputError("subdiagram " + f.name + " names an unknown edge");
        const auto& edge = t.edges[ei];
        const std::size_t ks = position(f.nodes, edge.source), kt = position(f.nodes, edge.target);
        if (ks == f.nodes.size() || kt == f.nodes.size())
            throw InputError("subdiagram " + f.name + ": edge " + edge.name + " leaves the chosen nodes");
        const IntMatrix m = free_part(edge.map);
        const std::size_t rs = e.ranks[ks], rt = e.ranks[kt];
        // (e_t m - m e_s)(i, j) = 0
        for (std::size_t i = 0; i < rt; ++i)
            for (std::size_t j = 0; j < rs; ++j) {
                IntVector row(n);
                for (std::size_t a = 0; a < rt; ++a) row[offset[kt] + i * rt + a] += m(a, j);
                for (std::size_t b = 0; b < rs; ++b) row[offset[ks] + b * rs + j] -= m(i, b);
                rows.push_back(std::move(row));
            }
    }
    IntMatrix system(rows.size(), n);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < n; ++c) system(r, c) = rows[r][c];
    const IntMatrix kernel = rows.empty() ? IntMatrix::identity(n) : kernel_basis(system);
    e.rational_rank = n - (rows.empty() ? 0 : smith(system).rank);
    for (std::size_t i = 0; i < kernel.cols(); ++i) e.basis.push_back(unflatten(kernel.column(i), e.ranks));

    std::vector<IntMatrix> id;
    for (std::size_t r : e.ranks) id.push_back(IntMatrix::identity(r));
    if (auto u = e.coordinates(id)) e.unit = *u;
    else e.closed = false;

    e.structure.assign(e.rank(), std::vector<IntVector>(e.rank()));
    for (std::size_t i = 0; i < e.rank(); ++i)
        for (std::size_t j = 0; j < e.rank(); ++j) {
            auto c = e.coordinates(multiply(e.basis[i], e.basis[j]));
            if (!c) {
                e.closed = false;
                c = IntVector(e.rank());
            }
            e.structure[i][j] = *c;
        }
    return e;
}

AlgebraMap restriction_map(const EndAlgebra& larger, const EndAlgebra& smaller) {
    if (!larger.sub.contains(smaller.sub))
        throw InputError("subdiagram " + smaller.sub.name + " is not contained in " + larger.sub.name);
    AlgebraMap out;
    out.matrix = IntMatrix(smaller.rank(), larger.rank());
    for (std::size_t i = 0; i < larger.rank(); ++i) {
        std::vector<IntMatrix> proj;
        for (std::size_t node : smaller.sub.nodes) proj.push_back(larger.basis[i][position(larger.sub.nodes, node)]);
        auto c = smaller.coordinates(proj);
        if (!c) throw StructuralError("restriction of a commuting tuple does not commute");
        out.matrix.set_column(i, *c);
    }
    out.unital = out.matrix * larger.unit == smaller.unit;
    for (std::size_t i = 0; i < larger.rank() && out.multiplicative; ++i)
        for (std::size_t j = 0; j < larger.rank(); ++j) {
            const IntVector lhs = out.matrix * larger.structure[i][j];
            IntVector rhs(smaller.rank());
            for (std::size_t k = 0; k < smaller.rank(); ++k)
                for (std::size_t l = 0; l < smaller.rank(); ++l) {
                    const Integer coef = out.matrix(k, i) * out.matrix(l, j);
                    if (coef == 0) continue;
                    for (std::size_t m = 0; m < smaller.rank(); ++m) rhs[m] += coef * smaller.structure[k][l][m];
                }
            if (lhs != rhs) {
                out.multiplicative = false;
                break;
            }
        }
    return out;
}

ModuleActionVerdict verify_module_action(const Representation& t, const EndAlgebra& e) {
    ModuleActionVerdict v;
    for (std::size_t i = 0; i < e.rank(); ++i)
        for (std::size_t ei : e.sub.edges) {
            const auto& edge = t.edges[ei];
            const IntMatrix m = free_part(edge.map);
            const IntMatrix& es = e.basis[i][position(e.sub.nodes, edge.source)];
            const IntMatrix& et = e.basis[i][position(e.sub.nodes, edge.target)];
            if (!(et * m == m * es))
                v.failures.push_back("basis element " + std::to_string(i) + " is not equivariant for " + edge.name);
        }
    for (std::size_t i = 0; i < e.rank(); ++i)
        for (std::size_t j = 0; j < e.rank(); ++j) {
            const auto prod = multiply(e.basis[i], e.basis[j]);
            std::vector<IntMatrix> combo;
            for (std::size_t r : e.ranks) combo.push_back(IntMatrix(r, r));
            for (std::size_t k = 0; k < e.rank(); ++k)
                for (std::size_t node = 0; node < combo.size(); ++node)
                    combo[node] = combo[node] + e.basis[k][node].scaled(e.structure[i][j][k]);
            if (combo != prod)
                v.failures.push_back("product of basis elements " + std::to_string(i) + " and " + std::to_string(j) +
                                     " disagrees with the structure constants");
        }
    v.ok = v.failures.empty();
    return v;
}

} // namespace homwb
