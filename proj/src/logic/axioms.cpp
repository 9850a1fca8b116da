#include "homwb/logic/axioms.hpp"

#include "homwb/error.hpp"

#include <sstream>

namespace homwb::logic {

Flavors Flavors::parse(const std::string& text) {
    Flavors f;
    f.core = false;
    std::stringstream in(text);
    std::string item;
    bool any = false;
    while (std::getline(in, item, ',')) {
        if (item == "core") f.core = true;
        else if (item == "homotopy") f.homotopy = true;
        else if (item == "cd") f.cd = true;
        else throw InputError("unknown flavor '" + item + "' (expected core, homotopy or cd)");
        any = true;
    }
    if (!any) throw InputError("empty flavor list");
    return f;
}

std::string Flavors::to_string() const {
    std::string out;
    auto add = [&](bool on, const char* name) {
        if (!on) return;
        if (!out.empty()) out += ",";
        out += name;
    };
    add(core, "core");
    add(homotopy, "homotopy");
    add(cd, "cd");
    return out;
}

std::string MapRef::to_string() const {
    switch (kind) {
    case Kind::Symbol: return symbol;
    case Kind::MvSplit: return "split[" + std::to_string(square) + "]_" + std::to_string(degree);
    case Kind::MvDifference: return "difference[" + std::to_string(square) + "]_" + std::to_string(degree);
    }
    return symbol;
}

namespace {

using Kind = SemanticCheck::Kind;

Term v(const std::string& n) { return Term::var(n); }
Term ap(const std::string& f, Term t) { return Term::apply(f, std::move(t)); }
Term minus(Term a, Term b) { return Term::plus(std::move(a), Term::neg(std::move(b))); }

std::vector<MapRef> refs(const std::vector<std::string>& syms) {
    std::vector<MapRef> out;
    for (const auto& s : syms) out.push_back(MapRef::sym(s));
    return out;
}

class AxiomWriter {
public:
    AxiomWriter(const PairDiagram& d, DegreeWindow w, Flavors f)
        : diagram_(d), window_(w), flavors_(f) {
        theory_.signature = generate_signature(d, w);
        theory_.flavors = f;
    }

    Theory run() {
        if (flavors_.homotopy && diagram_.prisms().empty())
            throw InputError("homotopy flavor needs at least one prism (cylinder pairs and end inclusions)");
        if (flavors_.cd && diagram_.squares().empty())
            throw InputError("cd flavor needs at least one distinguished square");
        if (flavors_.core) {
            group_axioms();
            hom_axioms();
            functor_axioms();
            exactness_axioms();
        }
        if (flavors_.homotopy) homotopy_axioms();
        if (flavors_.cd) {
            mv_exactness_axioms();
            mv_naturality_axioms();
        }
        return std::move(theory_);
    }

private:
    const PairDiagram& diagram_;
    DegreeWindow window_;
    Flavors flavors_;
    Theory theory_;

    const Signature& sig() const { return theory_.signature; }
    std::string sort(std::size_t node, int n) const { return *sig().sort_of(node, n); }
    /// Symbol of an edge, empty for identity edges.
    std::string edge(std::size_t e, int n) const {
        auto s = sig().edge_symbol(e, n);
        return s ? *s : std::string();
    }
    std::string conn(std::size_t t, int n) const { return *sig().connecting_symbol(t, n); }
    std::string mv(std::size_t s, int n) const { return *sig().mv_symbol(s, n); }

    static Term through(const std::vector<std::string>& syms, Term t) {
        for (const auto& s : syms)
            if (!s.empty()) t = ap(s, std::move(t));
        return t;
    }
    static std::vector<std::string> nonempty(std::vector<std::string> syms) {
        std::erase(syms, std::string());
        return syms;
    }

    void add(std::string tag, std::string flavor, std::string id, RegularSequent seq, SemanticCheck check) {
        theory_.axioms.push_back({tag + "." + id, std::move(tag), std::move(flavor), std::move(seq), std::move(check)});
    }

    void group_axioms() {
        for (const auto& s : sig().sorts()) {
            const std::string& h = s.name;
            const SemanticCheck grp{Kind::Group, h, {}, {}};
            add("U1", "core", "assoc[" + h + "]",
                {{{"x", h}, {"y", h}, {"z", h}},
                 Formula::top(),
                 Formula::eq(Term::plus(Term::plus(v("x"), v("y")), v("z")),
                             Term::plus(v("x"), Term::plus(v("y"), v("z"))))},
                grp);
            add("U1", "core", "unit[" + h + "]",
                {{{"x", h}},
                 Formula::top(),
                 Formula::conj({Formula::eq(Term::plus(Term::zero(), v("x")), v("x")),
                                Formula::eq(Term::plus(v("x"), Term::zero()), v("x"))})},
                grp);
            add("U1", "core", "inverse[" + h + "]",
                {{{"x", h}},
                 Formula::top(),
                 Formula::conj({Formula::eq(Term::plus(v("x"), Term::neg(v("x"))), Term::zero()),
                                Formula::eq(Term::plus(Term::neg(v("x")), v("x")), Term::zero())})},
                grp);
            add("U1", "core", "comm[" + h + "]",
                {{{"x", h}, {"y", h}},
                 Formula::top(),
                 Formula::eq(Term::plus(v("x"), v("y")), Term::plus(v("y"), v("x")))},
                grp);
        }
    }

    void hom_axioms() {
        for (const auto& f : sig().functions()) {
            if (f.origin == SymbolOrigin::MayerVietoris && !flavors_.cd) continue;
            const std::string flavor = f.origin == SymbolOrigin::MayerVietoris ? "cd" : "core";
            add("U2", flavor, "hom[" + f.name + "]",
                {{{"x", f.domain}, {"y", f.domain}},
                 Formula::top(),
                 Formula::eq(ap(f.name, Term::plus(v("x"), v("y"))), Term::plus(ap(f.name, v("x")), ap(f.name, v("y"))))},
                {Kind::Hom, f.domain, {MapRef::sym(f.name)}, {}});
        }
    }

    void functor_axioms() {
        const auto& edges = diagram_.edges();
        for (const auto& c : diagram_.composites()) {
            for (int n = window_.lo; n <= window_.hi; ++n) {
                const std::string h = sort(edges[c.first].source, n);
                const std::vector<std::string> path = {edge(c.first, n), edge(c.second, n)};
                const std::vector<std::string> direct = {edge(c.composite, n)};
                add("U3", "core", "compose[" + edges[c.composite].name + "," + std::to_string(n) + "]",
                    {{{"x", h}}, Formula::top(), Formula::eq(through(path, v("x")), through(direct, v("x")))},
                    {Kind::Equal, h, refs(nonempty(path)), refs(nonempty(direct))});
            }
        }
        for (const auto& cube : diagram_.cubes()) {
            const TripleDecl& t1 = diagram_.triples()[cube.triple];
            for (int n = window_.lo + 1; n <= window_.hi; ++n) {
                const std::string h = sort(t1.node_xy, n);
                const std::vector<std::string> lhs = {conn(cube.triple, n), edge(cube.diamond, n - 1)};
                const std::vector<std::string> rhs = {edge(cube.square, n), conn(cube.target_triple, n)};
                add("U3", "core", "cube[" + cube.name + "," + std::to_string(n) + "]",
                    {{{"x", h}}, Formula::top(), Formula::eq(through(lhs, v("x")), through(rhs, v("x")))},
                    {Kind::Equal, h, refs(nonempty(lhs)), refs(nonempty(rhs))});
            }
        }
    }

    // Y,Z -bt-> X,Z -bp-> X,Y -d-> (Y,Z)[n-1]
    void exactness_axioms() {
        const auto& triples = diagram_.triples();
        for (std::size_t ti = 0; ti < triples.size(); ++ti) {
            const TripleDecl& t = triples[ti];
            for (int n = window_.lo; n <= window_.hi; ++n) {
                const std::string at = t.name + "," + std::to_string(n) + "]";
                const std::string yz = sort(t.node_yz, n), xz = sort(t.node_xz, n), xy = sort(t.node_xy, n);
                const std::string bt = edge(t.box_times, n), bp = edge(t.box_plus, n);
                const bool with_d = n > window_.lo;
                add("U4", "core", "complex_bt_bp[" + at,
                    {{{"x", yz}}, Formula::top(), Formula::eq(through({bt, bp}, v("x")), Term::zero())},
                    {Kind::Zero, yz, refs(nonempty({bt, bp})), {}});
                if (with_d) {
                    const std::string d = conn(ti, n);
                    const std::string bt1 = edge(t.box_times, n - 1);
                    add("U4", "core", "complex_bp_d[" + at,
                        {{{"x", xz}}, Formula::top(), Formula::eq(through({bp, d}, v("x")), Term::zero())},
                        {Kind::Zero, xz, refs(nonempty({bp, d})), {}});
                    add("U4", "core", "complex_d_bt[" + at,
                        {{{"x", xy}}, Formula::top(), Formula::eq(through({d, bt1}, v("x")), Term::zero())},
                        {Kind::Zero, xy, refs(nonempty({d, bt1})), {}});
                }
                add("U4", "core", "exact_xz[" + at,
                    {{{"x", xz}},
                     Formula::eq(through({bp}, v("x")), Term::zero()),
                     Formula::exists("y", yz, Formula::eq(through({bt}, v("y")), v("x")))},
                    {Kind::Exact, xz, refs(nonempty({bt})), refs(nonempty({bp}))});
                if (with_d) {
                    const std::string d = conn(ti, n);
                    const std::string bt1 = edge(t.box_times, n - 1);
                    const std::string yz1 = sort(t.node_yz, n - 1);
                    add("U4", "core", "exact_xy[" + at,
                        {{{"x", xy}},
                         Formula::eq(through({d}, v("x")), Term::zero()),
                         Formula::exists("y", xz, Formula::eq(through({bp}, v("y")), v("x")))},
                        {Kind::Exact, xy, refs(nonempty({bp})), refs({d})});
                    add("U4", "core", "exact_yz[" + at,
                        {{{"x", yz1}},
                         Formula::eq(through({bt1}, v("x")), Term::zero()),
                         Formula::exists("y", xy, Formula::eq(through({d}, v("y")), v("x")))},
                        {Kind::Exact, yz1, refs({d}), refs(nonempty({bt1}))});
                }
            }
        }
    }

    void homotopy_axioms() {
        for (const auto& p : diagram_.prisms()) {
            for (int n = window_.lo; n <= window_.hi; ++n) {
                const std::string h = sort(p.base, n);
                const std::string i0 = edge(p.bottom, n), i1 = edge(p.top, n);
                add("U5", "homotopy", "ends[" + p.name + "," + std::to_string(n) + "]",
                    {{{"x", h}}, Formula::top(), Formula::eq(ap(i0, v("x")), ap(i1, v("x")))},
                    {Kind::Equal, h, refs({i0}), refs({i1})});
            }
        }
    }

    // B -split-> A + C -difference-> D -delta-> B[n-1], with split = (a, g)
    // and difference = b - e.
    void mv_exactness_axioms() {
        const auto& squares = diagram_.squares();
        for (std::size_t si = 0; si < squares.size(); ++si) {
            const SquareDecl& q = squares[si];
            for (int n = window_.lo; n <= window_.hi; ++n) {
                const std::string at = q.name + "," + std::to_string(n) + "]";
                const std::string hb = sort(q.node_b, n), ha = sort(q.node_a, n), hc = sort(q.node_c, n),
                                  hd = sort(q.node_d, n);
                const std::string al = edge(q.alpha, n), ga = edge(q.gamma, n), be = edge(q.beta, n),
                                  ep = edge(q.epsilon, n);
                const MapRef split{MapRef::Kind::MvSplit, {}, si, n};
                const MapRef diff{MapRef::Kind::MvDifference, {}, si, n};
                auto difference = [&](Term a, Term c) { return minus(ap(be, std::move(a)), ap(ep, std::move(c))); };
                const bool with_d = n > window_.lo;

                add("U6", "cd", "complex_split_diff[" + at,
                    {{{"x", hb}}, Formula::top(), Formula::eq(difference(ap(al, v("x")), ap(ga, v("x"))), Term::zero())},
                    {Kind::Zero, hb, {split, diff}, {}});
                if (with_d) {
                    const std::string d = mv(si, n);
                    const std::string al1 = edge(q.alpha, n - 1), ga1 = edge(q.gamma, n - 1);
                    const MapRef split1{MapRef::Kind::MvSplit, {}, si, n - 1};
                    add("U6", "cd", "complex_diff_d[" + at,
                        {{{"x", ha}, {"y", hc}}, Formula::top(), Formula::eq(ap(d, difference(v("x"), v("y"))), Term::zero())},
                        {Kind::Zero, ha, {diff, MapRef::sym(d)}, {}});
                    add("U6", "cd", "complex_d_split[" + at,
                        {{{"x", hd}},
                         Formula::top(),
                         Formula::conj({Formula::eq(ap(al1, ap(d, v("x"))), Term::zero()),
                                        Formula::eq(ap(ga1, ap(d, v("x"))), Term::zero())})},
                        {Kind::Zero, hd, {MapRef::sym(d), split1}, {}});
                }
                add("U6", "cd", "exact_sum[" + at,
                    {{{"x", ha}, {"y", hc}},
                     Formula::eq(difference(v("x"), v("y")), Term::zero()),
                     Formula::exists("z", hb,
                                     Formula::conj({Formula::eq(ap(al, v("z")), v("x")),
                                                    Formula::eq(ap(ga, v("z")), v("y"))}))},
                    {Kind::Exact, ha, {split}, {diff}});
                if (with_d) {
                    const std::string d = mv(si, n);
                    const std::string al1 = edge(q.alpha, n - 1), ga1 = edge(q.gamma, n - 1);
                    const std::string hb1 = sort(q.node_b, n - 1);
                    const MapRef split1{MapRef::Kind::MvSplit, {}, si, n - 1};
                    add("U6", "cd", "exact_union[" + at,
                        {{{"x", hd}},
                         Formula::eq(ap(d, v("x")), Term::zero()),
                         Formula::exists("y", ha, Formula::exists("z", hc, Formula::eq(difference(v("y"), v("z")), v("x"))))},
                        {Kind::Exact, hd, {diff}, {MapRef::sym(d)}});
                    add("U6", "cd", "exact_cap[" + at,
                        {{{"x", hb1}},
                         Formula::conj({Formula::eq(ap(al1, v("x")), Term::zero()), Formula::eq(ap(ga1, v("x")), Term::zero())}),
                         Formula::exists("y", hd, Formula::eq(ap(d, v("y")), v("x")))},
                        {Kind::Exact, hb1, {MapRef::sym(d)}, {split1}});
                }
            }
        }
    }

    void mv_naturality_axioms() {
        const auto& squares = diagram_.squares();
        for (const auto& m : diagram_.square_maps()) {
            const SquareDecl& s = squares[m.source];
            const SquareDecl& t = squares[m.target];
            for (int n = window_.lo; n <= window_.hi; ++n) {
                const std::string at = "," + std::to_string(n) + "]";
                auto side = [&](const char* label, std::size_t node, std::size_t src_side, std::size_t src_map,
                                std::size_t tgt_side, std::size_t tgt_map) {
                    const std::string h = sort(node, n);
                    const std::vector<std::string> lhs = {edge(src_side, n), edge(tgt_map, n)};
                    const std::vector<std::string> rhs = {edge(src_map, n), edge(tgt_side, n)};
                    add("U7", "cd", std::string(label) + "[" + m.name + at,
                        {{{"x", h}}, Formula::top(), Formula::eq(through(lhs, v("x")), through(rhs, v("x")))},
                        {Kind::Equal, h, refs(nonempty(lhs)), refs(nonempty(rhs))});
                };
                side("square_a", s.node_b, s.alpha, m.map_b, t.alpha, m.map_a);
                side("square_g", s.node_b, s.gamma, m.map_b, t.gamma, m.map_c);
                side("square_b", s.node_a, s.beta, m.map_a, t.beta, m.map_d);
                side("square_e", s.node_c, s.epsilon, m.map_c, t.epsilon, m.map_d);
                if (n > window_.lo) {
                    const std::string h = sort(s.node_d, n);
                    const std::vector<std::string> lhs = {mv(m.source, n), edge(m.map_b, n - 1)};
                    const std::vector<std::string> rhs = {edge(m.map_d, n), mv(m.target, n)};
                    add("U7", "cd", "delta[" + m.name + at,
                        {{{"x", h}}, Formula::top(), Formula::eq(through(lhs, v("x")), through(rhs, v("x")))},
                        {Kind::Equal, h, refs(nonempty(lhs)), refs(nonempty(rhs))});
                }
            }
        }
    }
};

} // namespace

Theory generate_axioms(const PairDiagram& diagram, DegreeWindow window, Flavors flavors) {
    return AxiomWriter(diagram, window, flavors).run();
}

} // namespace homwb::logic
