#include "homwb/random.hpp"

#include <algorithm>
#include <set>

namespace homwb::random {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::vector<Simplex> all_simplices(const SimplicialComplex& k) {
    std::vector<Simplex> out;
    for (int d = 0; d <= k.dim(); ++d)
        for (const auto& s : k.simplices(d)) out.push_back(s);
    return out;
}

bool respects(const VertexMap& f, const SimplicialComplex& sub, const SimplicialComplex& target_sub) {
    for (const auto& s : all_simplices(sub))
        if (!target_sub.contains(image_of(f, s))) return false;
    return true;
}

} // namespace

IntMatrix matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
    return m;
}

SimplicialComplex complex(Rng& rng, int vertices, int max_dim, int simplices) {
    vertices = std::clamp(vertices, 1, 10);
    std::vector<Simplex> gens;
    for (int v = 0; v < vertices; ++v)
        if (uniform(rng, 0, 3) == 0) gens.push_back({std::to_string(v)});
    for (int i = 0; i < simplices; ++i) {
        const int d = uniform(rng, 1, std::min(max_dim, vertices - 1));
        std::vector<int> idx(static_cast<std::size_t>(vertices));
        for (int v = 0; v < vertices; ++v) idx[static_cast<std::size_t>(v)] = v;
        std::shuffle(idx.begin(), idx.end(), rng);
        Simplex s;
        for (int k = 0; k <= d; ++k) s.push_back(std::to_string(idx[static_cast<std::size_t>(k)]));
        std::sort(s.begin(), s.end());
        gens.push_back(s);
    }
    if (gens.empty()) gens.push_back({"0"});
    return SimplicialComplex::from_simplices(gens);
}

SimplicialComplex subcomplex(Rng& rng, const SimplicialComplex& k, double keep) {
    std::bernoulli_distribution pick(keep);
    std::vector<Simplex> chosen;
    for (const auto& s : all_simplices(k))
        if (pick(rng)) chosen.push_back(s);
    if (chosen.empty()) return {};
    return SimplicialComplex::from_simplices(chosen);
}

std::vector<SimplicialComplex> descending_chain(Rng& rng, const SimplicialComplex& top, int length) {
    std::vector<SimplicialComplex> out{top};
    while (static_cast<int>(out.size()) < length) out.push_back(out.back().empty() ? out.back() : subcomplex(rng, out.back(), 0.6));
    return out;
}

VertexMap simplicial_map(Rng& rng, const SimplicialComplex& source, const SimplicialComplex& source_sub,
                         const SimplicialComplex& target, const SimplicialComplex& target_sub) {
    auto ok = [&](const VertexMap& f) {
        return !simplicial_violation(f, source, target) && respects(f, source_sub, target_sub);
    };
    for (int attempt = 0; attempt < 12; ++attempt) {
        VertexMap f = identity_map(source);
        bool defined = true;
        for (auto& [v, w] : f)
            if (!target.has_vertex(v)) defined = false;
        if (!defined) break;
        const auto edges = source.dim() >= 1 ? source.simplices(1) : std::vector<Simplex>{};
        const int collapses = edges.empty() ? 0 : uniform(rng, 0, 2);
        for (int c = 0; c < collapses; ++c) {
            const Simplex& e = edges[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(edges.size()) - 1))];
            const std::string old = f[e[0]], to = f[e[1]];
            for (auto& [v, w] : f)
                if (w == old) w = to;
        }
        if (ok(f)) return f;
    }
    const SimplicialComplex& anchor = source_sub.empty() || target_sub.empty() ? target : target_sub;
    std::vector<Simplex> tops = anchor.maximal_simplices();
    if (tops.empty()) tops = target.maximal_simplices();
    const Simplex& sigma = tops[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(tops.size()) - 1))];
    VertexMap f;
    for (const auto& v : source.vertices())
        f[v] = sigma[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(sigma.size()) - 1))];
    return f;
}

dsl::WorkbenchSpec spec(Rng& rng, dsl::CommandStmt::Kind command) {
    using namespace dsl;
    WorkbenchSpec s;
    const SimplicialComplex x = complex(rng, uniform(rng, 3, 6), 2, uniform(rng, 2, 4));
    const auto chain = descending_chain(rng, x, 3);
    const char* names[] = {"X", "Y", "Z"};
    for (int i = 0; i < 3; ++i) {
        ComplexStmt c;
        c.name = names[i];
        c.simplices = chain[static_cast<std::size_t>(i)].maximal_simplices();
        s.statements.push_back(c);
    }
    s.statements.push_back(PairStmt{"X", "Y", {}});
    s.statements.push_back(TripleStmt{"T", "X", "Y", "Z", {}});
    const VertexMap f = simplicial_map(rng, chain[0], chain[1], chain[0], chain[1]);
    Assignments a;
    for (const auto& [v, w] : f)
        if (v != w) a.emplace_back(v, w);
    s.statements.push_back(MapStmt{"f", "X", "Y", "X", "Y", a, {}});
    const long mods[] = {0, 2, 3};
    s.statements.push_back(CoeffStmt{mods[uniform(rng, 0, 2)], {}});
    CommandStmt cmd;
    cmd.kind = command;
    if (command == CommandStmt::Kind::Cellular || command == CommandStmt::Kind::Spectral) {
        cmd.complex = "X";
        cmd.filtration = "skeletal";
    }
    s.statements.push_back(cmd);
    return s;
}

} // namespace homwb::random
