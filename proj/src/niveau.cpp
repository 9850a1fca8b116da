#include "homwb/niveau.hpp"

#include "homwb/error.hpp"

#include <functional>
#include <tuple>

namespace homwb {

FilteredChainComplex::FilteredChainComplex(ChainComplex chains, int length,
                                           std::map<std::pair<int, int>, IntMatrix> steps)
    : chains_(std::move(chains)), length_(length), steps_(std::move(steps)) {
    if (length_ < 0) throw InputError("filtered complex: negative length");
    for (const auto& [key, m] : steps_)
        if (m.rows() != chains_.group(key.second).ngens())
            throw InputError("filtered complex: step " + std::to_string(key.first) + " in degree " +
                             std::to_string(key.second) + " has the wrong ambient rank");
}

FilteredChainComplex FilteredChainComplex::simplicial(const Filtration& f, const Coefficients& coeffs) {
    const SimpPair pair = SimpPair::make(f.base(), SimplicialComplex());
    const int top = std::max(f.base().dim(), 0) + 1;
    ChainComplex chains = relative_chain_complex(pair, coeffs, 0, top);
    std::map<std::pair<int, int>, IntMatrix> steps;
    for (int p = 0; p < f.length(); ++p) {
        const SimplicialComplex xp = f.step(p);
        for (int n = 0; n <= top; ++n) {
            const auto basis = pair.relative_basis(n);
            std::vector<IntVector> cols;
            for (std::size_t i = 0; i < basis.size(); ++i)
                if (xp.contains(basis[i])) {
                    IntVector e(basis.size());
                    e[i] = 1;
                    cols.push_back(std::move(e));
                }
            steps[{p, n}] = IntMatrix::from_columns(basis.size(), cols);
        }
    }
    return {std::move(chains), f.length(), std::move(steps)};
}

IntMatrix FilteredChainComplex::step(int p, int n) const {
    const std::size_t k = chains_.group(n).ngens();
    if (p < 0) return IntMatrix(k, 0);
    if (p >= length_) return IntMatrix::identity(k);
    auto it = steps_.find({p, n});
    return it == steps_.end() ? IntMatrix(k, 0) : it->second;
}

SpectralPage::SpectralPage(int r, int p_min, int p_max, int n_min, int n_max)
    : r_(r), p_min_(p_min), p_max_(p_max), n_min_(n_min), n_max_(n_max) {}

void SpectralPage::set_group(int p, int q, FgAbGroup g) { groups_[{p, q}] = std::move(g); }

void SpectralPage::set_differential(int p, int q, GroupHom d) { differentials_[{p, q}] = std::move(d); }

FgAbGroup SpectralPage::group(int p, int q) const {
    auto it = groups_.find({p, q});
    return it == groups_.end() ? FgAbGroup::trivial() : it->second;
}

GroupHom SpectralPage::differential(int p, int q) const {
    auto it = differentials_.find({p, q});
    if (it != differentials_.end()) return it->second;
    return GroupHom::zero(group(p, q), group(p - r_, q + r_ - 1));
}

std::vector<std::pair<int, int>> SpectralPage::cells() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& [key, g] : groups_) out.push_back(key);
    return out;
}

bool SpectralPage::differentials_vanish() const {
    for (const auto& [key, d] : differentials_)
        if (!d.is_zero()) return false;
    return true;
}

FgAbGroup NiveauFiltration::graded(int p) const {
    if (p < 0 || p >= static_cast<int>(steps.size())) return FgAbGroup::trivial();
    const IntMatrix rel = total.relation_lattice();
    const IntMatrix num = steps[static_cast<std::size_t>(p)].hcat(rel);
    const IntMatrix den = (p > 0 ? steps[static_cast<std::size_t>(p - 1)] : IntMatrix(total.ngens(), 0)).hcat(rel);
    return Subquotient(num, den).group();
}

namespace {

class PageEngine {
public:
    explicit PageEngine(const FilteredChainComplex& fc) : fc_(fc) {}

    std::size_t rank(int n) const { return fc_.chains().group(n).ngens(); }
    IntMatrix relations(int n) const { return fc_.chains().group(n).relation_lattice(); }
    IntMatrix boundary(int n) const { return fc_.chains().differential(n).matrix(); }
    IntMatrix filtered(int p, int n) const { return fc_.step(p, n).hcat(relations(n)); }

    // Z^r_{p,n} = {x in F_p : dx in F_{p-r}}
    const IntMatrix& cycles(int r, int p, int n) {
        const auto key = std::make_tuple(r, p, n);
        auto it = z_.find(key);
        if (it != z_.end()) return it->second;
        const IntMatrix f = filtered(p, n);
        IntMatrix z;
        if (rank(n - 1) == 0 || f.cols() == 0) z = f;
        else z = f * preimage(boundary(n) * f, filtered(p - r, n - 1));
        return z_[key] = z;
    }

    const Subquotient& cell(int r, int p, int n) {
        const auto key = std::make_tuple(r, p, n);
        auto it = e_.find(key);
        if (it != e_.end()) return it->second;
        const IntMatrix num = cycles(r, p, n);
        IntMatrix den = cycles(r - 1, p - 1, n);
        if (rank(n + 1) > 0) den = den.hcat(boundary(n + 1) * cycles(r - 1, p + r - 1, n + 1));
        return e_.emplace(key, Subquotient(num, den)).first->second;
    }

private:
    const FilteredChainComplex& fc_;
    std::map<std::tuple<int, int, int>, IntMatrix> z_;
    std::map<std::tuple<int, int, int>, Subquotient> e_;
};

NiveauFiltration chain_niveau(const FilteredChainComplex& fc, PageEngine& eng, int n) {
    const Subquotient h = homology_subquotient(fc.chains(), n);
    const IntMatrix cycles = eng.rank(n - 1) == 0 ? IntMatrix::identity(eng.rank(n))
                                                  : preimage(eng.boundary(n), eng.relations(n - 1));
    NiveauFiltration nf;
    nf.n = n;
    nf.total = h.group();
    for (int p = 0; p <= fc.length(); ++p) {
        const IntMatrix inter = intersect(cycles, eng.filtered(p, n));
        IntMatrix cols(h.group().ngens(), inter.cols());
        for (std::size_t j = 0; j < inter.cols(); ++j) cols.set_column(j, h.coordinates(inter.column(j)));
        nf.steps.push_back(std::move(cols));
    }
    return nf;
}

} // namespace

SpectralSequence run_pages(const FilteredChainComplex& fc) {
    const int P = fc.length();
    const int n_min = fc.chains().n_min(), n_max = fc.chains().n_max();
    PageEngine eng(fc);
    std::vector<SpectralPage> pages;
    for (int r = 1; r <= P + 1; ++r) {
        SpectralPage page(r, 0, P, n_min, n_max);
        for (int p = 0; p <= P; ++p)
            for (int n = n_min; n <= n_max; ++n) page.set_group(p, n - p, eng.cell(r, p, n).group());
        for (int p = r; p <= P; ++p)
            for (int n = n_min + 1; n <= n_max; ++n) {
                const Subquotient& src = eng.cell(r, p, n);
                const Subquotient& tgt = eng.cell(r, p - r, n - 1);
                const IntMatrix d = eng.boundary(n);
                const IntMatrix& reps = src.representatives();
                IntMatrix m(tgt.group().ngens(), src.group().ngens());
                for (std::size_t j = 0; j < reps.cols(); ++j) m.set_column(j, tgt.coordinates(d * reps.column(j)));
                page.set_differential(p, n - p, GroupHom(src.group(), tgt.group(), std::move(m)));
            }
        pages.push_back(std::move(page));
    }
    std::size_t stable = pages.size();
    while (stable > 1 && pages[stable - 2].differentials_vanish()) --stable;
    pages.resize(stable);

    SpectralSequence ss;
    ss.pages = std::move(pages);
    ss.stable_r = static_cast<int>(stable);
    for (int n = n_min; n <= n_max; ++n) ss.niveau[n] = chain_niveau(fc, eng, n);
    return ss;
}

std::vector<ConvergenceCell> check_convergence(const SpectralSequence& ss) {
    std::vector<ConvergenceCell> out;
    const SpectralPage& lim = ss.limit();
    for (const auto& [n, nf] : ss.niveau)
        for (int p = lim.p_min(); p <= lim.p_max(); ++p) {
            ConvergenceCell c;
            c.n = n;
            c.p = p;
            c.limit = lim.group(p, n - p).invariants();
            c.graded = nf.graded(p).invariants();
            c.matches = c.limit == c.graded;
            out.push_back(c);
        }
    return out;
}

std::string FiltrationRef::step_name(int p) const {
    if (p < 0) return kEmptyName;
    if (p >= length) return base;
    return filtration_step_name(prefix, p);
}

namespace {

std::size_t require_node(const HomologyModel& model, const std::string& x, const std::string& y) {
    auto node = model.diagram().find_node(x, y);
    if (!node) throw InputError("pair (" + x + "," + y + ") is missing from the model");
    return *node;
}

std::size_t require_triple(const HomologyModel& model, const std::string& x, const std::string& y,
                           const std::string& z) {
    auto t = model.diagram().find_triple(x, y, z);
    if (!t) throw InputError("triple (" + x + "," + y + "," + z + ") is missing from the model");
    return *t;
}

} // namespace

SpectralPage e1_page(const HomologyModel& model, const FiltrationRef& f) {
    const DegreeWindow w = model.window();
    SpectralPage page(1, 0, f.length, w.lo, w.hi);
    for (int p = 0; p <= f.length; ++p) {
        const std::size_t node = require_node(model, f.step_name(p), f.step_name(p - 1));
        for (int n = w.lo; n <= w.hi; ++n) page.set_group(p, n - p, model.group(node, n));
    }
    for (int p = 1; p <= f.length; ++p) {
        const std::size_t t = require_triple(model, f.step_name(p), f.step_name(p - 1), kEmptyName);
        for (int n = w.lo + 1; n <= w.hi; ++n) {
            GroupHom d = model.connecting(t, n);
            if (p >= 2) {
                const std::size_t below = require_triple(model, f.step_name(p - 1), f.step_name(p - 2), kEmptyName);
                d = compose(model.map(model.diagram().triples()[below].box_plus, n - 1), d);
            }
            page.set_differential(p, n - p, std::move(d));
        }
    }
    return page;
}

CellularComplex cellular_complex(const HomologyModel& model, const FiltrationRef& f) {
    const SpectralPage page = e1_page(model, f);
    const DegreeWindow w = model.window();
    Bicomplex b(0, f.length, w.lo - f.length, w.hi);
    for (const auto& [p, q] : page.cells()) {
        b.set_group(p, q, page.group(p, q));
        if (p >= 1) b.set_horizontal(p, q, page.differential(p, q));
    }
    ChainComplex tot = total_complex(b);
    return {std::move(tot), std::move(b)};
}

CellularityVerdict check_cellularity(const SpectralPage& e1) {
    if (e1.r() != 1) throw InputError("cellularity is a property of the E^1 page");
    CellularityVerdict v;
    for (const auto& [p, q] : e1.cells())
        if (q != 0 && !e1.group(p, q).is_trivial()) v.offending.push_back({p, q});
    v.cellular = v.offending.empty();
    v.degenerates_at_e2 = v.cellular;
    return v;
}

RecoveryVerdict edge_recovery(const HomologyModel& model, const FiltrationRef& f, int n) {
    const SpectralPage page = e1_page(model, f);
    if (!check_cellularity(page).cellular)
        throw InputError("edge recovery needs a cellular filtration (E^1 nonzero off the row q = 0)");
    const CellularComplex cc = cellular_complex(model, f);
    const Subquotient hc = homology_subquotient(cc.complex, n);
    const std::size_t node_x = require_node(model, f.base, kEmptyName);
    const Subquotient& hx = model.homology_data(node_x, n);

    RecoveryVerdict v;
    v.n = n;
    v.cellular = hc.group().invariants();
    v.direct = hx.group().invariants();
    v.invariants_match = v.cellular == v.direct;

    if (n < 0 || n > f.length) {
        v.comparison_iso = hc.group().is_trivial() && hx.group().is_trivial();
        if (!v.comparison_iso) v.detail = "degree outside the filtration carries homology";
        return v;
    }
    const std::size_t node_n = require_node(model, f.step_name(n), f.step_name(n - 1));
    const Subquotient& e1 = model.homology_data(node_n, n);
    const auto& pair_n = model.diagram().nodes()[node_n].pair;
    const auto& pair_x = model.diagram().nodes()[node_x].pair;
    const auto cells = pair_n.relative_basis(n);
    const auto simplices = pair_x.relative_basis(n);
    std::map<Simplex, std::size_t> where;
    for (std::size_t i = 0; i < simplices.size(); ++i) where[simplices[i]] = i;

    const std::size_t off = total_offset(cc.e1, n, 0);
    const std::size_t width = e1.group().ngens();
    IntMatrix m(hx.group().ngens(), hc.group().ngens());
    for (std::size_t j = 0; j < hc.group().ngens(); ++j) {
        const IntVector tot = hc.representatives().column(j);
        IntVector coords(width);
        for (std::size_t i = 0; i < width; ++i) coords[i] = tot[off + i];
        const IntVector rel = e1.representatives() * coords;
        IntVector chain(simplices.size());
        for (std::size_t i = 0; i < cells.size(); ++i) chain[where.at(cells[i])] = rel[i];
        if (!hx.contains(chain)) {
            v.comparison_iso = false;
            v.detail = "cellular cycle " + std::to_string(j) + " is not a cycle of X";
            return v;
        }
        m.set_column(j, hx.coordinates(chain));
    }
    const GroupHom phi(hc.group(), hx.group(), m);
    if (phi.well_definedness_violation()) {
        v.comparison_iso = false;
        v.detail = "comparison map is not well defined";
    } else if (!is_isomorphism(phi)) {
        v.comparison_iso = false;
        v.detail = "comparison map is not bijective";
    }
    return v;
}

NiveauFiltration model_niveau(const HomologyModel& model, const FiltrationRef& f, int n) {
    const std::size_t node_x = require_node(model, f.base, kEmptyName);
    NiveauFiltration nf;
    nf.n = n;
    nf.total = model.group(node_x, n);
    for (int p = 0; p <= f.length; ++p) {
        if (p >= f.length) {
            nf.steps.push_back(IntMatrix::identity(nf.total.ngens()));
            continue;
        }
        const std::size_t t = require_triple(model, f.base, f.step_name(p), kEmptyName);
        nf.steps.push_back(model.map(model.diagram().triples()[t].box_times, n).matrix());
    }
    return nf;
}

} // namespace homwb
