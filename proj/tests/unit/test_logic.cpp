#include "homwb/error.hpp"
#include "homwb/logic/axioms.hpp"
#include "homwb/logic/evaluate.hpp"
#include "homwb/logic/semantic.hpp"
#include "homwb/logic/structure.hpp"
#include "homwb/random.hpp"

#include "generators.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace homwb;
using namespace homwb::logic;

namespace {

SimplicialComplex k(std::vector<Simplex> s) { return SimplicialComplex::from_simplices(s); }

PairDiagram point_diagram() {
    DiagramBuilder b;
    b.add_complex("P", k({{"0"}}));
    b.add_pair("P", "empty");
    return b.build();
}

std::size_t count_tag(const Theory& t, const std::string& tag) {
    return static_cast<std::size_t>(
        std::count_if(t.axioms.begin(), t.axioms.end(), [&](const AxiomInstance& a) { return a.tag == tag; }));
}

// Random well-sorted terms over one sort with the given endomorphism symbols.
Term random_term(gen::Rng& rng, const std::vector<std::string>& vars, const std::vector<std::string>& symbols, int depth) {
    const int choice = gen::pick(rng, 0, depth <= 0 ? 1 : 4);
    switch (choice) {
    case 0: return Term::var(vars[static_cast<std::size_t>(gen::pick(rng, 0, static_cast<int>(vars.size()) - 1))]);
    case 1: return Term::zero();
    case 2: return Term::plus(random_term(rng, vars, symbols, depth - 1), random_term(rng, vars, symbols, depth - 1));
    case 3: return Term::neg(random_term(rng, vars, symbols, depth - 1));
    default:
        if (symbols.empty()) return Term::var(vars[0]);
        return Term::apply(symbols[static_cast<std::size_t>(gen::pick(rng, 0, static_cast<int>(symbols.size()) - 1))],
                           random_term(rng, vars, symbols, depth - 1));
    }
}

Formula random_formula(gen::Rng& rng, const std::string& sort, std::vector<std::string> vars,
                       const std::vector<std::string>& symbols, int depth) {
    const int choice = gen::pick(rng, 0, depth <= 0 ? 1 : 3);
    switch (choice) {
    case 0: return Formula::top();
    case 1: return Formula::eq(random_term(rng, vars, symbols, 2), random_term(rng, vars, symbols, 2));
    case 2:
        return Formula::conj({random_formula(rng, sort, vars, symbols, depth - 1),
                              random_formula(rng, sort, vars, symbols, depth - 1)});
    default: {
        const std::string v = "v" + std::to_string(vars.size());
        vars.push_back(v);
        return Formula::exists(v, sort, random_formula(rng, sort, vars, symbols, depth - 1));
    }
    }
}

} // namespace

TEST_CASE("sequent syntax round trip on fixed examples") {
    const std::string text = "[x:h1(X,Y)] top |- exists y:h1(X,Y). f_1(y) = x";
    const RegularSequent s = parse_sequent(text);
    CHECK(to_string(s) == text);
    CHECK(s.context.size() == 1);
    CHECK(s.consequent.kind == Formula::Kind::Exists);
    CHECK(parse_sequent("[] top |- 0 = 0").context.empty());
    CHECK(parse_sequent("[x:h0(P,empty)] x = 0 & (x + x = x) |- -x = x").antecedent.kind == Formula::Kind::And);
    CHECK(parse_sequent("[x:h0(A,B)] top |- T.d_-1(x) = 0").consequent.terms[0].name == "T.d_-1");
    CHECK_THROWS_AS(parse_sequent("[x:h0(P,empty)] top |- x ="), InputError);
    CHECK_THROWS_AS(parse_sequent("[x:h0(P,empty)] top x = x"), InputError);
    CHECK_THROWS_WITH_AS(parse_sequent("[x:h0(P,empty)] top |- x = $"), doctest::Contains("column"), InputError);
}

TEST_CASE("property: printing then parsing a random sequent is the identity") {
    gen::Rng rng(61);
    for (int trial = 0; trial < 300; ++trial) {
        RegularSequent s;
        const int nv = gen::pick(rng, 1, 3);
        std::vector<std::string> vars;
        for (int i = 0; i < nv; ++i) {
            vars.push_back("x" + std::to_string(i));
            s.context.push_back({vars.back(), "h1(X,Y)"});
        }
        s.antecedent = random_formula(rng, "h1(X,Y)", vars, {"f_1", "T.d_1"}, 2);
        s.consequent = random_formula(rng, "h1(X,Y)", vars, {"f_1", "T.d_1"}, 3);
        const std::string text = to_string(s);
        CHECK_MESSAGE(parse_sequent(text) == s, text);
    }
}

TEST_CASE("signature counts") {
    PairDiagram one = point_diagram();
    const Signature s = generate_signature(one, {0, 2});
    CHECK(s.sorts().size() == 3);
    CHECK(s.functions().empty());
    CHECK_THROWS_AS(generate_signature(one, {1, 0}), InputError);

    DiagramBuilder b;
    b.add_complex("D", k({{"0", "1", "2"}}));
    b.add_complex("C", k({{"0", "1"}, {"1", "2"}, {"0", "2"}}));
    b.add_triple("T", "D", "C", "empty");
    const PairDiagram d = b.build();
    const Signature st = generate_signature(d, {0, 2});
    const auto partials = std::count_if(st.functions().begin(), st.functions().end(),
                                        [](const FunctionDecl& f) { return f.origin == SymbolOrigin::Connecting; });
    CHECK(partials == 2);
    CHECK(st.find_function("T.d_2") != nullptr);
    CHECK(st.find_function("T.d_0") == nullptr);
    CHECK(st.sort_of(0, 3) == std::nullopt);
}

TEST_CASE("axiom counts") {
    const Theory t = generate_axioms(point_diagram(), {0, 0}, Flavors{});
    CHECK(t.axioms.size() == 4);
    CHECK(count_tag(t, "U1") == 4);
    CHECK_THROWS_AS(generate_axioms(point_diagram(), {0, 0}, Flavors::parse("core,homotopy")), InputError);
    CHECK_THROWS_AS(generate_axioms(point_diagram(), {0, 0}, Flavors::parse("cd")), InputError);
    CHECK_THROWS_AS(Flavors::parse("core,spicy"), InputError);
    CHECK(Flavors::parse("cd,core").to_string() == "core,cd");

    DiagramBuilder b;
    b.add_complex("D", k({{"0", "1", "2"}}));
    b.add_complex("C", k({{"0", "1"}, {"1", "2"}, {"0", "2"}}));
    b.add_triple("T", "D", "C", "empty");
    const Theory tt = generate_axioms(b.build(), {0, 2}, Flavors{});
    // U4: two instances at the lowest degree, six above it
    CHECK(count_tag(tt, "U4") == 2 + 6 + 6);
    for (const auto& ax : tt.axioms) CHECK(parse_sequent(to_string(ax.sequent)) == ax.sequent);
}

TEST_CASE("point with Z/2 exports the XOR carrier") {
    const HomologyModel m = HomologyModel::simplicial(point_diagram(), Coefficients::modulo(2), {0, 0});
    const FiniteStructure s = export_finite_structure(m);
    REQUIRE(s.sorts.size() == 1);
    const Carrier& c = s.sorts.begin()->second;
    CHECK(c.size == 2);
    CHECK(c.plus == std::vector<Element>{0, 1, 1, 0});
    CHECK(c.labels == std::vector<std::string>{"0", "1"});
    CHECK(s.verify().empty());
    CHECK_THROWS_AS(export_finite_structure(HomologyModel::simplicial(point_diagram(), Coefficients::integers(), {0, 0})),
                    InputError);
}

TEST_CASE("doubling is not surjective on Z/4") {
    const HomologyModel m = HomologyModel::simplicial(point_diagram(), Coefficients::modulo(4), {0, 0});
    const FiniteStructure s = export_finite_structure(m);
    const Verdict v = eval_sequent(s, parse_sequent("[x:h0(P,empty)] top |- exists y:h0(P,empty). y + y = x"));
    CHECK_FALSE(v.valid);
    REQUIRE(v.counterexample.has_value());
    CHECK(v.counterexample->at(0).label == "1");
    CHECK(eval_sequent(s, parse_sequent("[x:h0(P,empty)] x + x = 0 |- exists y:h0(P,empty). y + y = x")).valid);
    CHECK_THROWS_AS(check_well_sorted(s, parse_sequent("[x:h1(P,empty)] top |- x = x")), InputError);
    CHECK_THROWS_AS(check_well_sorted(s, parse_sequent("[x:h0(P,empty)] top |- g_0(x) = x")), InputError);

    const TheoryFragment frag = theory_of_model(
        s, {parse_sequent("[x:h0(P,empty)] top |- x + x + x + x = 0"), parse_sequent("[x:h0(P,empty)] top |- x + x = 0")});
    CHECK(frag.retained.size() == 1);
    CHECK(frag.rejected.size() == 1);
}

TEST_CASE("a negated composite is caught as a functoriality failure") {
    DiagramBuilder b;
    b.add_complex("C", k({{"0", "1"}, {"1", "2"}, {"0", "2"}}));
    const std::size_t c = b.add_pair("C", "empty");
    const std::size_t r = b.add_map("r", c, c, {{"0", "1"}, {"1", "2"}, {"2", "0"}});
    const std::size_t rr = b.add_composite("rr", r, r);
    const PairDiagram d = b.build();
    HomologyModel m = HomologyModel::simplicial(d, Coefficients::integers(), {0, 1});
    const Theory t = generate_axioms(d, {0, 1}, Flavors{});
    CHECK(validate_semantic(m, t).all_passed());
    m.override_map(rr, 1, m.map(rr, 1).negated());
    const SemanticReport rep = validate_semantic(m, t);
    CHECK_FALSE(rep.all_passed());
    bool u3 = false;
    for (const auto& res : rep.results)
        if (!res.passed) {
            CHECK(res.tag == "U3");
            u3 = true;
        }
    CHECK(u3);
}

TEST_CASE("property: semantic and enumerative verdicts agree on random diagrams") {
    gen::Rng rng(62);
    int checked = 0;
    for (int trial = 0; trial < 12; ++trial) {
        const PairDiagram d = gen::triple_diagram(rng, 5, 2);
        const long m = std::vector<long>{2, 3, 4}[static_cast<std::size_t>(trial % 3)];
        const HomologyModel model = HomologyModel::simplicial(d, Coefficients::modulo(m), {0, 2});
        FiniteStructure s;
        try {
            s = export_finite_structure(model);
        } catch (const InputError&) {
            continue;
        }
        const Theory t = generate_axioms(d, {0, 2}, Flavors{});
        const SemanticReport rep = validate_semantic(model, t);
        CHECK(rep.all_passed());
        for (std::size_t i = 0; i < t.axioms.size(); ++i) CHECK(eval_sequent(s, t.axioms[i].sequent).valid == rep.results[i].passed);
        ++checked;
    }
    CHECK(checked >= 6);
}

TEST_CASE("property: faults are seen by both checkers") {
    gen::Rng rng(63);
    for (int trial = 0; trial < 10; ++trial) {
        DiagramBuilder b;
        const SimplicialComplex x = gen::small_complex(rng, 5, 2);
        b.add_complex("X", x);
        b.add_complex("Y", random::subcomplex(rng, x));
        const std::size_t t = b.add_triple("T", "X", "Y", "empty");
        const PairDiagram d = b.build();
        HomologyModel model = HomologyModel::simplicial(d, Coefficients::modulo(2), {0, 2});
        // doubling is zero mod 2, so replace a nonzero bt map by zero
        const std::size_t bt = d.triples()[t].box_times;
        int n = -1;
        for (int deg = 0; deg <= 2; ++deg)
            if (!model.map(bt, deg).is_zero()) n = deg;
        if (n < 0) continue;
        model.override_map(bt, n, GroupHom::zero(model.map(bt, n).source(), model.map(bt, n).target()));
        FiniteStructure s;
        try {
            s = export_finite_structure(model);
        } catch (const InputError&) {
            continue;
        }
        const Theory th = generate_axioms(d, {0, 2}, Flavors{});
        const SemanticReport rep = validate_semantic(model, th);
        CHECK_FALSE(rep.all_passed());
        for (std::size_t i = 0; i < th.axioms.size(); ++i) CHECK(eval_sequent(s, th.axioms[i].sequent).valid == rep.results[i].passed);
    }
}

TEST_CASE("property: verdicts are invariant under relabelling the carriers") {
    gen::Rng rng(64);
    for (int trial = 0; trial < 6; ++trial) {
        const PairDiagram d = gen::triple_diagram(rng, 4, 2);
        const HomologyModel model = HomologyModel::simplicial(d, Coefficients::modulo(3), {0, 1});
        FiniteStructure s;
        try {
            s = export_finite_structure(model);
        } catch (const InputError&) {
            continue;
        }
        std::map<std::string, std::vector<Element>> perms;
        for (const auto& [name, c] : s.sorts) {
            std::vector<Element> p(c.size);
            std::iota(p.begin(), p.end(), 0u);
            std::shuffle(p.begin(), p.end(), rng);
            perms[name] = p;
        }
        const FiniteStructure r = s.relabeled(perms);
        CHECK(r.verify().empty());
        const Theory t = generate_axioms(d, {0, 1}, Flavors{});
        for (const auto& ax : t.axioms) CHECK(eval_sequent(s, ax.sequent).valid == eval_sequent(r, ax.sequent).valid);
        const RegularSequent odd = parse_sequent("[x:h0(X,Z)] top |- x = 0");
        CHECK(eval_sequent(s, odd).valid == eval_sequent(r, odd).valid);
    }
}

TEST_CASE("theories are tied to their diagram") {
    const HomologyModel m = HomologyModel::simplicial(point_diagram(), Coefficients::integers(), {0, 1});
    const Theory other = generate_axioms(point_diagram(), {0, 0}, Flavors{});
    CHECK_THROWS_AS(validate_semantic(m, other), InputError);
}
