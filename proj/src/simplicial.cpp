#include "homwb/simplicial.hpp"

#include "homwb/error.hpp"

#include <algorithm>
#include <set>

namespace homwb {

std::string simplex_to_string(const Simplex& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + s[i];
    return out + "}";
}

namespace {

void add_faces(const Simplex& s, std::vector<std::set<Simplex>>& acc) {
    const std::size_t k = s.size();
    if (k == 0) return;
    if (acc.size() < k) acc.resize(k);
    // all nonempty subsets
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        Simplex face;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (1u << i)) face.push_back(s[i]);
        acc[face.size() - 1].insert(std::move(face));
    }
}

Simplex sorted_unique(Simplex s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

} // namespace

void SimplicialComplex::rebuild_index() {
    while (!by_dim_.empty() && by_dim_.back().empty()) by_dim_.pop_back();
    index_.assign(by_dim_.size(), {});
    for (std::size_t d = 0; d < by_dim_.size(); ++d)
        for (std::size_t i = 0; i < by_dim_[d].size(); ++i) index_[d][by_dim_[d][i]] = i;
    vertices_.clear();
    if (!by_dim_.empty())
        for (const auto& v : by_dim_[0]) vertices_.push_back(v[0]);
}

SimplicialComplex SimplicialComplex::from_simplices(const std::vector<Simplex>& maximal) {
    std::vector<std::set<Simplex>> acc;
    for (const auto& raw : maximal) {
        Simplex s = sorted_unique(raw);
        if (s.size() != raw.size()) throw InputError("simplex " + simplex_to_string(raw) + " repeats a vertex");
        if (s.size() > 20) throw InputError("simplex " + simplex_to_string(raw) + " is too large");
        add_faces(s, acc);
    }
    SimplicialComplex out;
    for (auto& level : acc) out.by_dim_.emplace_back(level.begin(), level.end());
    out.rebuild_index();
    return out;
}

SimplicialComplex SimplicialComplex::from_maximal_simplices(const std::vector<std::string>& labels,
                                                            const std::vector<Simplex>& maximal) {
    std::set<std::string> known;
    for (const auto& l : labels)
        if (!known.insert(l).second) throw InputError("duplicate vertex label '" + l + "'");
    for (const auto& s : maximal)
        for (const auto& v : s)
            if (!known.count(v)) throw InputError("simplex " + simplex_to_string(s) + " references unknown label '" + v + "'");
    std::vector<Simplex> all = maximal;
    for (const auto& l : labels) all.push_back({l});
    return from_simplices(all);
}

std::size_t SimplicialComplex::size() const {
    std::size_t n = 0;
    for (const auto& level : by_dim_) n += level.size();
    return n;
}

std::size_t SimplicialComplex::count(int d) const {
    if (d < 0 || d > dim()) return 0;
    return by_dim_[static_cast<std::size_t>(d)].size();
}

const std::vector<Simplex>& SimplicialComplex::simplices(int d) const {
    static const std::vector<Simplex> none;
    if (d < 0 || d > dim()) return none;
    return by_dim_[static_cast<std::size_t>(d)];
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
    const int d = static_cast<int>(s.size()) - 1;
    if (d < 0 || d > dim()) return std::nullopt;
    const auto& idx = index_[static_cast<std::size_t>(d)];
    auto it = idx.find(s);
    if (it == idx.end()) return std::nullopt;
    return it->second;
}

bool SimplicialComplex::has_vertex(const std::string& v) const { return contains(Simplex{v}); }

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
    std::vector<Simplex> out;
    for (int d = 0; d <= dim(); ++d)
        for (const auto& s : simplices(d)) {
            bool maximal = true;
            for (const auto& t : simplices(d + 1))
                if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                    maximal = false;
                    break;
                }
            if (maximal) out.push_back(s);
        }
    return out;
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
    for (int d = 0; d <= dim(); ++d)
        for (const auto& s : simplices(d))
            if (!other.contains(s)) return false;
    return true;
}

SimplicialComplex SimplicialComplex::skeleton(int p) const {
    SimplicialComplex out;
    for (int d = 0; d <= std::min(p, dim()); ++d) out.by_dim_.push_back(by_dim_[static_cast<std::size_t>(d)]);
    out.rebuild_index();
    return out;
}

IntMatrix SimplicialComplex::boundary(int d) const {
    IntMatrix m(count(d - 1), count(d));
    if (d <= 0) return m;
    const auto& cells = simplices(d);
    for (std::size_t j = 0; j < cells.size(); ++j)
        for (std::size_t i = 0; i < cells[j].size(); ++i) {
            Simplex face = cells[j];
            face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
            m(*index_of(face), j) = (i % 2 == 0) ? 1 : -1;
        }
    return m;
}

SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b) {
    SimplicialComplex out;
    const int top = std::max(a.dim(), b.dim());
    for (int d = 0; d <= top; ++d) {
        std::vector<Simplex> level;
        std::set_union(a.simplices(d).begin(), a.simplices(d).end(), b.simplices(d).begin(), b.simplices(d).end(),
                       std::back_inserter(level));
        out.by_dim_.push_back(std::move(level));
    }
    out.rebuild_index();
    return out;
}

SimplicialComplex complex_intersection(const SimplicialComplex& a, const SimplicialComplex& b) {
    SimplicialComplex out;
    const int top = std::min(a.dim(), b.dim());
    for (int d = 0; d <= top; ++d) {
        std::vector<Simplex> level;
        std::set_intersection(a.simplices(d).begin(), a.simplices(d).end(), b.simplices(d).begin(),
                              b.simplices(d).end(), std::back_inserter(level));
        out.by_dim_.push_back(std::move(level));
    }
    out.rebuild_index();
    return out;
}

Simplex image_of(const VertexMap& f, const Simplex& s) {
    Simplex out;
    for (const auto& v : s) {
        auto it = f.find(v);
        if (it == f.end()) throw InputError("vertex map is undefined on '" + v + "'");
        out.push_back(it->second);
    }
    return sorted_unique(std::move(out));
}

std::optional<Simplex> simplicial_violation(const VertexMap& f, const SimplicialComplex& source,
                                            const SimplicialComplex& target) {
    for (int d = 0; d <= source.dim(); ++d)
        for (const auto& s : source.simplices(d))
            if (!target.contains(image_of(f, s))) return s;
    return std::nullopt;
}

VertexMap identity_map(const SimplicialComplex& x) {
    VertexMap f;
    for (const auto& v : x.vertices()) f[v] = v;
    return f;
}

VertexMap compose_maps(const VertexMap& g, const VertexMap& f) {
    VertexMap out;
    for (const auto& [v, w] : f) {
        auto it = g.find(w);
        if (it == g.end()) throw InputError("compose_maps: '" + w + "' is outside the domain of the second map");
        out[v] = it->second;
    }
    return out;
}

SimpPair SimpPair::make(SimplicialComplex total, SimplicialComplex sub) {
    if (!sub.is_subcomplex_of(total)) {
        for (int d = 0; d <= sub.dim(); ++d)
            for (const auto& s : sub.simplices(d))
                if (!total.contains(s))
                    throw InputError("pair: simplex " + simplex_to_string(s) + " of the subcomplex is not in the total complex");
    }
    return {std::move(total), std::move(sub)};
}

std::vector<Simplex> SimpPair::relative_basis(int d) const {
    std::vector<Simplex> out;
    for (const auto& s : total.simplices(d))
        if (!sub.contains(s)) out.push_back(s);
    return out;
}

namespace {

// Parity of the permutation sorting `v`.
int sort_sign(std::vector<std::string> v) {
    int sign = 1;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[j] < v[i]) sign = -sign;
    return sign;
}

std::map<Simplex, std::size_t> basis_index(const std::vector<Simplex>& basis) {
    std::map<Simplex, std::size_t> idx;
    for (std::size_t i = 0; i < basis.size(); ++i) idx[basis[i]] = i;
    return idx;
}

} // namespace

IntMatrix induced_chain_map(const VertexMap& f, const SimpPair& source, const SimpPair& target, int d) {
    const auto src = source.relative_basis(d);
    const auto tgt = target.relative_basis(d);
    const auto tgt_idx = basis_index(tgt);
    IntMatrix m(tgt.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
        std::vector<std::string> img;
        for (const auto& v : src[j]) {
            auto it = f.find(v);
            if (it == f.end()) throw InputError("vertex map is undefined on '" + v + "'");
            img.push_back(it->second);
        }
        Simplex sorted = img;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;  // degenerate
        if (!target.total.contains(sorted))
            throw InputError("vertex map sends " + simplex_to_string(src[j]) + " outside the target complex");
        auto it = tgt_idx.find(sorted);
        if (it == tgt_idx.end()) continue;  // lands in the target subcomplex
        m(it->second, j) = sort_sign(img);
    }
    return m;
}

IntMatrix relative_boundary(const SimpPair& pair, int d) {
    const auto src = pair.relative_basis(d);
    const auto tgt = pair.relative_basis(d - 1);
    const auto tgt_idx = basis_index(tgt);
    IntMatrix m(tgt.size(), src.size());
    if (d <= 0) return m;
    for (std::size_t j = 0; j < src.size(); ++j)
        for (std::size_t i = 0; i < src[j].size(); ++i) {
            Simplex face = src[j];
            face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
            auto it = tgt_idx.find(face);
            if (it != tgt_idx.end()) m(it->second, j) = (i % 2 == 0) ? 1 : -1;
        }
    return m;
}

std::string prism_label(const std::string& v, int end) { return v + "." + std::to_string(end); }

Prism prism(const SimplicialComplex& x) {
    if (x.empty()) throw InputError("prism: complex is empty");
    std::vector<Simplex> cells;
    for (const auto& s : x.maximal_simplices()) {
        // staircase: (v_0,0) .. (v_i,0) (v_i,1) .. (v_k,1)
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex cell;
            for (std::size_t j = 0; j <= i; ++j) cell.push_back(prism_label(s[j], 0));
            for (std::size_t j = i; j < s.size(); ++j) cell.push_back(prism_label(s[j], 1));
            cells.push_back(std::move(cell));
        }
    }
    Prism out;
    out.complex = SimplicialComplex::from_simplices(cells);
    for (const auto& v : x.vertices()) {
        out.bottom[v] = prism_label(v, 0);
        out.top[v] = prism_label(v, 1);
        out.project[prism_label(v, 0)] = v;
        out.project[prism_label(v, 1)] = v;
    }
    return out;
}

DistinguishedSquare subcomplex_union(const SimplicialComplex& x, const SimplicialComplex& u,
                                     const SimplicialComplex& v) {
    if (!u.is_subcomplex_of(x)) throw InputError("subcomplex_union: U is not a subcomplex of X");
    if (!v.is_subcomplex_of(x)) throw InputError("subcomplex_union: V is not a subcomplex of X");
    return {complex_intersection(u, v), u, v, complex_union(u, v)};
}

Filtration::Filtration(SimplicialComplex base, std::vector<SimplicialComplex> steps)
    : base_(std::move(base)), steps_(std::move(steps)) {
    if (steps_.empty()) throw InputError("filtration: no steps");
    for (std::size_t p = 0; p < steps_.size(); ++p) {
        if (steps_[p].dim() > static_cast<int>(p))
            throw InputError("filtration: dimensional-type violation at step " + std::to_string(p) + " (dimension " +
                             std::to_string(steps_[p].dim()) + " > " + std::to_string(p) + ")");
        if (p > 0 && !steps_[p - 1].is_subcomplex_of(steps_[p]))
            throw InputError("filtration: step " + std::to_string(p - 1) + " is not contained in step " + std::to_string(p));
    }
    if (!(steps_.back() == base_)) throw InputError("filtration: last step is not the whole complex");
}

Filtration Filtration::skeletal(const SimplicialComplex& base) {
    std::vector<SimplicialComplex> steps;
    for (int p = 0; p <= std::max(base.dim(), 0); ++p) steps.push_back(base.skeleton(p));
    return {base, std::move(steps)};
}

SimplicialComplex Filtration::step(int p) const {
    if (p < 0) return {};
    if (p > length()) return base_;
    return steps_[static_cast<std::size_t>(p)];
}

} // namespace homwb
