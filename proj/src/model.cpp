#include "homwb/model.hpp"

#include "homwb/error.hpp"

namespace homwb {

Coefficients Coefficients::modulo(long m) {
    if (m < 2) throw InputError("coefficient modulus must be at least 2 (got " + std::to_string(m) + ")");
    Coefficients c;
    c.modulus_ = m;
    return c;
}

std::string Coefficients::to_string() const { return modulus_ == 0 ? "Z" : "Z/" + modulus_.get_str(); }

ChainComplex relative_chain_complex(const SimpPair& pair, const Coefficients& coeffs, int lo, int hi) {
    std::vector<FgAbGroup> groups;
    std::vector<GroupHom> diffs;
    for (int d = lo; d <= hi; ++d) {
        const std::size_t k = d < 0 ? 0 : pair.relative_basis(d).size();
        groups.push_back(FgAbGroup::cyclic_power(k, coeffs.modulus()));
        if (d > lo) {
            IntMatrix m = d <= 0 ? IntMatrix(groups[groups.size() - 2].ngens(), k) : relative_boundary(pair, d);
            diffs.emplace_back(groups.back(), groups[groups.size() - 2], std::move(m));
        }
    }
    return {lo, std::move(groups), std::move(diffs)};
}

FgAbGroup relative_homology(const SimpPair& pair, const Coefficients& coeffs, int n) {
    return homology(relative_chain_complex(pair, coeffs, n - 1, n + 1), n);
}

namespace {

std::map<Simplex, std::size_t> index_basis(const std::vector<Simplex>& basis) {
    std::map<Simplex, std::size_t> idx;
    for (std::size_t i = 0; i < basis.size(); ++i) idx[basis[i]] = i;
    return idx;
}

// Chain-level snake: lift a relative cycle of (X,Y) to C(X,Z), take its
// boundary, and read it as a cycle of (Y,Z).
GroupHom snake_connecting(const SimpPair& xy, const SimpPair& xz, const SimpPair& yz, const Subquotient& source,
                          const Subquotient& target, int n) {
    const auto basis_xy = xy.relative_basis(n);
    const auto basis_xz = xz.relative_basis(n);
    const auto idx_xz = index_basis(basis_xz);
    const auto basis_xz_low = xz.relative_basis(n - 1);
    const auto basis_yz_low = yz.relative_basis(n - 1);
    const auto idx_yz_low = index_basis(basis_yz_low);
    const IntMatrix bd = relative_boundary(xz, n);

    const IntMatrix& reps = source.representatives();
    IntMatrix m(target.group().ngens(), source.group().ngens());
    for (std::size_t j = 0; j < reps.cols(); ++j) {
        IntVector lift(basis_xz.size());
        for (std::size_t i = 0; i < basis_xy.size(); ++i) lift[idx_xz.at(basis_xy[i])] = reps(i, j);
        const IntVector boundary = bd * lift;
        IntVector restricted(basis_yz_low.size());
        for (std::size_t i = 0; i < basis_xz_low.size(); ++i) {
            auto it = idx_yz_low.find(basis_xz_low[i]);
            if (it != idx_yz_low.end()) restricted[it->second] = boundary[i];
        }
        m.set_column(j, target.coordinates(restricted));
    }
    return {source.group(), target.group(), m};
}

// Mayer-Vietoris connecting map: z = u - c with u the part of z on U; the
// boundary of u lies in U n V.
GroupHom mv_connecting_map(const SimplicialComplex& d, const SimplicialComplex& u, const SimplicialComplex& b,
                           const Subquotient& source, const Subquotient& target, int n) {
    const auto& cells_d = d.simplices(n);
    const auto& cells_u = u.simplices(n);
    const auto idx_u = index_basis(cells_u);
    const auto& low_u = u.simplices(n - 1);
    const auto idx_b_low = index_basis(b.simplices(n - 1));
    const IntMatrix bd = u.boundary(n);

    const IntMatrix& reps = source.representatives();
    IntMatrix m(target.group().ngens(), source.group().ngens());
    for (std::size_t j = 0; j < reps.cols(); ++j) {
        IntVector part(cells_u.size());
        for (std::size_t i = 0; i < cells_d.size(); ++i) {
            auto it = idx_u.find(cells_d[i]);
            if (it != idx_u.end()) part[it->second] = reps(i, j);
        }
        const IntVector boundary = n > 0 ? bd * part : IntVector(low_u.size());
        IntVector restricted(b.count(n - 1));
        for (std::size_t i = 0; i < low_u.size(); ++i) {
            auto it = idx_b_low.find(low_u[i]);
            if (it != idx_b_low.end()) restricted[it->second] = boundary[i];
        }
        m.set_column(j, target.coordinates(restricted));
    }
    return {source.group(), target.group(), m};
}

} // namespace

DegreeWindow HomologyModel::default_window(const PairDiagram& diagram) {
    return {0, std::max(diagram.max_dim(), 0) + 1};
}

HomologyModel HomologyModel::simplicial(PairDiagram diagram, Coefficients coeffs, DegreeWindow window) {
    if (window.hi < window.lo) throw InputError("degree window is empty");
    HomologyModel model;
    model.diagram_ = std::move(diagram);
    model.coeffs_ = coeffs;
    model.window_ = window;
    const auto& nodes = model.diagram_.nodes();
    for (std::size_t v = 0; v < nodes.size(); ++v) {
        const ChainComplex cc = relative_chain_complex(nodes[v].pair, coeffs, window.lo - 1, window.hi + 1);
        for (int n = window.lo; n <= window.hi; ++n) model.homology_[{v, n}] = homology_subquotient(cc, n);
    }
    const auto& edges = model.diagram_.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const SimpPair& src = nodes[edges[e].source].pair;
        const SimpPair& tgt = nodes[edges[e].target].pair;
        for (int n = window.lo; n <= window.hi; ++n) {
            const IntMatrix chain = n < 0 ? IntMatrix(0, 0) : induced_chain_map(edges[e].vertex_map, src, tgt, n);
            model.maps_[{e, n}] = induced_map(model.homology_.at({edges[e].source, n}),
                                              model.homology_.at({edges[e].target, n}),
                                              n < 0 ? IntMatrix(0, 0) : chain);
        }
    }
    for (std::size_t t = 0; t < model.diagram_.triples().size(); ++t)
        for (int n = window.lo + 1; n <= window.hi; ++n) model.connecting_[{t, n}] = connecting_hom(model, t, n);
    const auto& squares = model.diagram_.squares();
    for (std::size_t s = 0; s < squares.size(); ++s) {
        const auto& sq = squares[s];
        for (int n = window.lo + 1; n <= window.hi; ++n)
            model.mv_connecting_[{s, n}] =
                n <= 0 ? GroupHom::zero(model.group(sq.node_d, n), model.group(sq.node_b, n - 1))
                       : mv_connecting_map(nodes[sq.node_d].pair.total, nodes[sq.node_a].pair.total,
                                           nodes[sq.node_b].pair.total, model.homology_.at({sq.node_d, n}),
                                           model.homology_.at({sq.node_b, n - 1}), n);
    }
    return model;
}

GroupHom connecting_hom(const HomologyModel& model, std::size_t triple, int n) {
    if (!model.has_connecting(n))
        throw InputError("connecting map in degree " + std::to_string(n) + " needs degrees " + std::to_string(n) +
                         " and " + std::to_string(n - 1) + " inside the window");
    const TripleDecl& t = model.diagram().triples().at(triple);
    const auto& nodes = model.diagram().nodes();
    const Subquotient& src = model.homology_data(t.node_xy, n);
    const Subquotient& tgt = model.homology_data(t.node_yz, n - 1);
    if (n <= 0) return GroupHom::zero(src.group(), tgt.group());
    return snake_connecting(nodes[t.node_xy].pair, nodes[t.node_xz].pair, nodes[t.node_yz].pair, src, tgt, n);
}

const Subquotient& HomologyModel::homology_data(std::size_t node, int n) const {
    auto it = homology_.find({node, n});
    if (it == homology_.end())
        throw InputError("no homology for node " + std::to_string(node) + " in degree " + std::to_string(n));
    return it->second;
}

const FgAbGroup& HomologyModel::group(std::size_t node, int n) const { return homology_data(node, n).group(); }

const GroupHom& HomologyModel::map(std::size_t edge, int n) const {
    auto it = maps_.find({edge, n});
    if (it == maps_.end())
        throw InputError("no induced map for edge " + std::to_string(edge) + " in degree " + std::to_string(n));
    return it->second;
}

const GroupHom& HomologyModel::connecting(std::size_t triple, int n) const {
    auto it = connecting_.find({triple, n});
    if (it == connecting_.end())
        throw InputError("no connecting map for triple " + std::to_string(triple) + " in degree " + std::to_string(n));
    return it->second;
}

const GroupHom& HomologyModel::mv_connecting(std::size_t square, int n) const {
    auto it = mv_connecting_.find({square, n});
    if (it == mv_connecting_.end())
        throw InputError("no Mayer-Vietoris map for square " + std::to_string(square) + " in degree " +
                         std::to_string(n));
    return it->second;
}

void HomologyModel::override_map(std::size_t edge, int n, GroupHom h) { maps_.at({edge, n}) = std::move(h); }

void HomologyModel::override_connecting(std::size_t triple, int n, GroupHom h) {
    connecting_.at({triple, n}) = std::move(h);
}

std::string HomologyModel::sort_label(std::size_t node, int n) const {
    const auto& nd = diagram_.nodes().at(node);
    return "h" + std::to_string(n) + "(" + nd.total + "," + nd.sub + ")";
}

LongSequence HomologyModel::triple_sequence(std::size_t triple) const {
    const TripleDecl& t = diagram_.triples().at(triple);
    LongSequence seq;
    for (int n = window_.hi; n >= window_.lo; --n) {
        seq.groups.push_back(group(t.node_yz, n));
        seq.labels.push_back(sort_label(t.node_yz, n));
        seq.maps.push_back(map(t.box_times, n));
        seq.groups.push_back(group(t.node_xz, n));
        seq.labels.push_back(sort_label(t.node_xz, n));
        seq.maps.push_back(map(t.box_plus, n));
        seq.groups.push_back(group(t.node_xy, n));
        seq.labels.push_back(sort_label(t.node_xy, n));
        if (has_connecting(n)) seq.maps.push_back(connecting(triple, n));
    }
    return seq;
}

GroupHom HomologyModel::mv_split(std::size_t square, int n) const {
    const SquareDecl& s = diagram_.squares().at(square);
    return hom_vcat(map(s.alpha, n), map(s.gamma, n));
}

GroupHom HomologyModel::mv_difference(std::size_t square, int n) const {
    const SquareDecl& s = diagram_.squares().at(square);
    return hom_hcat(map(s.beta, n), map(s.epsilon, n).negated());
}

LongSequence HomologyModel::mayer_vietoris_sequence(std::size_t square) const {
    const SquareDecl& s = diagram_.squares().at(square);
    LongSequence seq;
    for (int n = window_.hi; n >= window_.lo; --n) {
        const GroupHom split = mv_split(square, n);
        seq.groups.push_back(split.source());
        seq.labels.push_back(sort_label(s.node_b, n));
        seq.maps.push_back(split);
        seq.groups.push_back(split.target());
        seq.labels.push_back(sort_label(s.node_a, n) + "+" + sort_label(s.node_c, n));
        seq.maps.push_back(mv_difference(square, n));
        seq.groups.push_back(group(s.node_d, n));
        seq.labels.push_back(sort_label(s.node_d, n));
        if (has_connecting(n)) seq.maps.push_back(mv_connecting(square, n));
    }
    return seq;
}

} // namespace homwb
