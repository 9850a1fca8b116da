#include "homwb/complexes.hpp"

#include "homwb/error.hpp"

namespace homwb {

ChainComplex::ChainComplex(int n_min, std::vector<FgAbGroup> groups, std::vector<GroupHom> differentials)
    : n_min_(n_min), groups_(std::move(groups)), differentials_(std::move(differentials)) {
    if (groups_.empty()) throw InputError("ChainComplex: empty window");
    if (differentials_.size() + 1 != groups_.size())
        throw InputError("ChainComplex: expected one differential per adjacent pair of degrees");
    for (std::size_t i = 0; i < differentials_.size(); ++i) {
        if (!(differentials_[i].source() == groups_[i + 1]) || !(differentials_[i].target() == groups_[i]))
            throw InputError("ChainComplex: differential d_" + std::to_string(n_min_ + static_cast<int>(i) + 1) +
                             " does not match the chain groups");
    }
}

ChainComplex ChainComplex::zero(int n_min, int n_max) {
    std::vector<FgAbGroup> groups(static_cast<std::size_t>(n_max - n_min + 1), FgAbGroup::trivial());
    std::vector<GroupHom> diffs(groups.size() - 1, GroupHom::identity(FgAbGroup::trivial()));
    return {n_min, std::move(groups), std::move(diffs)};
}

FgAbGroup ChainComplex::group(int n) const {
    if (!in_window(n)) return FgAbGroup::trivial();
    return groups_[static_cast<std::size_t>(n - n_min_)];
}

GroupHom ChainComplex::differential(int n) const {
    if (in_window(n) && in_window(n - 1)) return differentials_[static_cast<std::size_t>(n - n_min_ - 1)];
    return GroupHom::zero(group(n), group(n - 1));
}

ChainComplex ChainComplex::shifted(int k) const { return {n_min_ + k, groups_, differentials_}; }

namespace {

void require_square_zero(const ChainComplex& c, int n) {
    const GroupHom dn = c.differential(n);
    const GroupHom dn1 = c.differential(n + 1);
    dn.require_well_defined();
    dn1.require_well_defined();
    if (!compose(dn, dn1).is_zero())
        throw StructuralError("chain complex: d_" + std::to_string(n) + " o d_" + std::to_string(n + 1) + " != 0");
}

} // namespace

Subquotient homology_subquotient(const ChainComplex& c, int n) {
    require_square_zero(c, n);
    const FgAbGroup cn = c.group(n);
    const IntMatrix cycles = preimage(c.differential(n).matrix(), c.group(n - 1).relation_lattice());
    const IntMatrix boundaries = cn.relation_lattice().hcat(c.differential(n + 1).matrix());
    return {cycles, boundaries};
}

FgAbGroup homology(const ChainComplex& c, int n) { return homology_subquotient(c, n).group(); }

std::vector<ComplexDefect> verify_complex(const ChainComplex& c) {
    std::vector<ComplexDefect> out;
    for (int n = c.n_min() + 2; n <= c.n_max(); ++n) {
        const GroupHom dd = compose(c.differential(n - 1), c.differential(n));
        for (std::size_t j = 0; j < dd.matrix().cols(); ++j)
            if (!dd.target().is_zero_element(dd.matrix().column(j))) {
                out.push_back({n, j});
                break;
            }
    }
    return out;
}

GroupHom induced_map(const Subquotient& source, const Subquotient& target, const IntMatrix& chain_map) {
    const IntMatrix& reps = source.representatives();
    IntMatrix m(target.group().ngens(), source.group().ngens());
    for (std::size_t j = 0; j < reps.cols(); ++j) m.set_column(j, target.coordinates(chain_map * reps.column(j)));
    return {source.group(), target.group(), m};
}

Bicomplex::Bicomplex(int p_min, int p_max, int q_min, int q_max)
    : p_min_(p_min), p_max_(p_max), q_min_(q_min), q_max_(q_max) {
    if (p_max < p_min || q_max < q_min) throw InputError("Bicomplex: empty grid");
}

void Bicomplex::set_group(int p, int q, FgAbGroup g) { groups_[{p, q}] = std::move(g); }
void Bicomplex::set_horizontal(int p, int q, GroupHom h) { horizontal_[{p, q}] = std::move(h); }
void Bicomplex::set_vertical(int p, int q, GroupHom v) { vertical_[{p, q}] = std::move(v); }

FgAbGroup Bicomplex::group(int p, int q) const {
    auto it = groups_.find({p, q});
    return it == groups_.end() ? FgAbGroup::trivial() : it->second;
}

GroupHom Bicomplex::horizontal(int p, int q) const {
    auto it = horizontal_.find({p, q});
    return it == horizontal_.end() ? GroupHom::zero(group(p, q), group(p - 1, q)) : it->second;
}

GroupHom Bicomplex::vertical(int p, int q) const {
    auto it = vertical_.find({p, q});
    return it == vertical_.end() ? GroupHom::zero(group(p, q), group(p, q - 1)) : it->second;
}

std::size_t total_offset(const Bicomplex& b, int p, int q) {
    const int n = p + q;
    std::size_t off = 0;
    for (int pp = b.p_min(); pp < p; ++pp) {
        const int qq = n - pp;
        if (qq >= b.q_min() && qq <= b.q_max()) off += b.group(pp, qq).ngens();
    }
    return off;
}

ChainComplex total_complex(const Bicomplex& b) {
    const int n_min = b.p_min() + b.q_min();
    const int n_max = b.p_max() + b.q_max();
    auto in_grid = [&](int p, int q) { return p >= b.p_min() && p <= b.p_max() && q >= b.q_min() && q <= b.q_max(); };

    for (int p = b.p_min(); p <= b.p_max(); ++p)
        for (int q = b.q_min(); q <= b.q_max(); ++q) {
            const GroupHom h = b.horizontal(p, q);
            const GroupHom v = b.vertical(p, q);
            if (!(h.source() == b.group(p, q)) || (in_grid(p - 1, q) && !(h.target() == b.group(p - 1, q))))
                throw StructuralError("total_complex: horizontal map at (" + std::to_string(p) + "," + std::to_string(q) +
                                      ") does not fit the grid");
            if (!(v.source() == b.group(p, q)) || (in_grid(p, q - 1) && !(v.target() == b.group(p, q - 1))))
                throw StructuralError("total_complex: vertical map at (" + std::to_string(p) + "," + std::to_string(q) +
                                      ") does not fit the grid");
        }

    std::vector<FgAbGroup> groups;
    for (int n = n_min; n <= n_max; ++n) {
        FgAbGroup tot = FgAbGroup::trivial();
        for (int p = b.p_min(); p <= b.p_max(); ++p)
            if (in_grid(p, n - p)) tot = direct_sum(tot, b.group(p, n - p));
        groups.push_back(std::move(tot));
    }

    std::vector<GroupHom> diffs;
    for (int n = n_min + 1; n <= n_max; ++n) {
        const FgAbGroup& src = groups[static_cast<std::size_t>(n - n_min)];
        const FgAbGroup& tgt = groups[static_cast<std::size_t>(n - 1 - n_min)];
        IntMatrix m(tgt.ngens(), src.ngens());
        for (int p = b.p_min(); p <= b.p_max(); ++p) {
            const int q = n - p;
            if (!in_grid(p, q)) continue;
            const std::size_t col0 = total_offset(b, p, q);
            const std::size_t ncols = b.group(p, q).ngens();
            auto place = [&](int tp, int tq, const IntMatrix& block, int sign) {
                if (!in_grid(tp, tq)) return;
                const std::size_t row0 = total_offset(b, tp, tq);
                for (std::size_t r = 0; r < block.rows(); ++r)
                    for (std::size_t c = 0; c < ncols; ++c) m(row0 + r, col0 + c) += sign * block(r, c);
            };
            place(p - 1, q, b.horizontal(p, q).matrix(), 1);
            place(p, q - 1, b.vertical(p, q).matrix(), (p % 2 == 0) ? 1 : -1);
        }
        diffs.emplace_back(src, tgt, std::move(m));
    }
    ChainComplex tot(n_min, std::move(groups), std::move(diffs));
    if (auto defects = verify_complex(tot); !defects.empty())
        throw StructuralError("total_complex: d^2 != 0 in degree " + std::to_string(defects.front().degree) +
                              " (grid maps are incompatible)");
    return tot;
}

LongExactReport check_long_exact(const LongSequence& seq) {
    if (seq.maps.size() + 1 != seq.groups.size() && !(seq.groups.empty() && seq.maps.empty()))
        throw InputError("check_long_exact: expected one map between each pair of consecutive groups");
    for (std::size_t i = 0; i < seq.maps.size(); ++i)
        if (!(seq.maps[i].source() == seq.groups[i]) || !(seq.maps[i].target() == seq.groups[i + 1]))
            throw InputError("check_long_exact: map " + std::to_string(i) + " is not composable with its neighbours");
    LongExactReport report;
    for (std::size_t i = 1; i + 1 < seq.groups.size(); ++i) {
        NodeExactness node;
        node.node = i;
        if (i < seq.labels.size()) node.label = seq.labels[i];
        node.verdict = is_exact_at(seq.maps[i - 1], seq.maps[i]);
        if (!node.verdict.exact) report.exact = false;
        report.nodes.push_back(std::move(node));
    }
    return report;
}

} // namespace homwb
