#include "homwb/dsl/workbench.hpp"

#include "homwb/logic/evaluate.hpp"
#include "homwb/logic/semantic.hpp"
#include "homwb/logic/structure.hpp"
#include "homwb/nori.hpp"

#include <algorithm>
#include <chrono>
#include <regex>

namespace homwb::dsl {

long parse_coefficient(const std::string& text) {
    static const std::regex re(R"(Z(?:(?:/|mod)<?(\d{1,9})>?)?)");
    std::smatch m;
    if (!std::regex_match(text, m, re)) throw InputError("coefficients must be Z, Z/m or Zmod<m>, got '" + text + "'");
    if (!m[1].matched) return 0;
    const long v = std::stol(m[1].str());
    if (v < 2) throw InputError("modulus must be at least 2");
    return v;
}

std::string coefficient_text(long modulus) { return modulus == 0 ? "Z" : "Z/" + std::to_string(modulus); }

DegreeWindow parse_window(const std::string& text) {
    static const std::regex re(R"((-?\d{1,6})\.\.(-?\d{1,6}))");
    std::smatch m;
    if (!std::regex_match(text, m, re)) throw InputError("window must look like a..b, got '" + text + "'");
    DegreeWindow w{std::stoi(m[1].str()), std::stoi(m[2].str())};
    if (w.hi < w.lo) throw InputError("window upper end below lower end");
    return w;
}

// ---------------------------------------------------------------------------

std::optional<std::size_t> SpecBuilder::triple(const std::string& name) const {
    const auto& ts = diagram().triples();
    for (std::size_t i = 0; i < ts.size(); ++i)
        if (ts[i].name == name) return i;
    return std::nullopt;
}

std::optional<std::size_t> SpecBuilder::square(const std::string& name) const {
    const auto& ss = diagram().squares();
    for (std::size_t i = 0; i < ss.size(); ++i)
        if (ss[i].name == name) return i;
    return std::nullopt;
}

std::size_t SpecBuilder::node(const std::string& total, const std::string& sub) { return builder_.add_pair(total, sub); }

std::size_t SpecBuilder::edge(const std::string& name) const {
    auto e = diagram().find_edge(name);
    if (!e) throw InputError("unknown map '" + name + "'");
    return *e;
}

VertexMap SpecBuilder::vertex_map(const std::string& source, const Assignments& a) const {
    const SimplicialComplex& x = diagram().complex(source);
    VertexMap f = identity_map(x);
    for (const auto& [from, to] : a) {
        if (!x.has_vertex(from)) throw InputError("vertex '" + from + "' is not a vertex of " + source);
        f[from] = to;
    }
    return f;
}

FiltrationRef SpecBuilder::filtration(const std::string& name, const std::string& base) {
    if (name == "skeletal") {
        const std::string prefix = base + ".skeletal";
        auto it = filtrations_.find(prefix);
        if (it != filtrations_.end()) return it->second;
        const Filtration f = Filtration::skeletal(diagram().complex(base));
        builder_.add_filtration(prefix, base, f);
        return filtrations_[prefix] = FiltrationRef{prefix, base, f.length()};
    }
    auto it = filtrations_.find(name);
    if (it == filtrations_.end()) throw InputError("unknown filtration '" + name + "'");
    if (it->second.base != base)
        throw InputError("filtration '" + name + "' filters " + it->second.base + ", not " + base);
    return it->second;
}

void SpecBuilder::apply(const Statement& st) {
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ComplexStmt>) {
                if (s.kind == ComplexStmt::Kind::Literal)
                    builder_.add_complex(s.name, s.simplices.empty() ? SimplicialComplex()
                                                                     : SimplicialComplex::from_simplices(s.simplices));
                else
                    builder_.add_complex(s.name, diagram().complex(s.source).skeleton(s.dim));
            } else if constexpr (std::is_same_v<T, PairStmt>) {
                node(s.total, s.sub);
            } else if constexpr (std::is_same_v<T, MapStmt>) {
                const std::size_t a = node(s.source_total, s.source_sub);
                const std::size_t b = node(s.target_total, s.target_sub);
                builder_.add_map(s.name, a, b, vertex_map(s.source_total, s.assignments));
            } else if constexpr (std::is_same_v<T, ComposeStmt>) {
                builder_.add_composite(s.name, edge(s.first), edge(s.second));
            } else if constexpr (std::is_same_v<T, TripleStmt>) {
                builder_.add_triple(s.name, s.x, s.y, s.z);
            } else if constexpr (std::is_same_v<T, CubeStmt>) {
                auto a = triple(s.source), b = triple(s.target);
                if (!a || !b) throw InputError("unknown triple in cube '" + s.name + "'");
                builder_.add_cube(s.name, *a, *b, vertex_map(diagram().triples()[*a].x, s.assignments));
            } else if constexpr (std::is_same_v<T, PrismStmt>) {
                builder_.add_prism(s.name, s.x, s.y);
            } else if constexpr (std::is_same_v<T, SquareStmt>) {
                builder_.add_square(s.name, s.x, s.u, s.v);
            } else if constexpr (std::is_same_v<T, SquareMapStmt>) {
                auto a = square(s.source), b = square(s.target);
                if (!a || !b) throw InputError("unknown square in squaremap '" + s.name + "'");
                const std::string cup = diagram().nodes()[diagram().squares()[*a].node_d].total;
                builder_.add_square_map(s.name, *a, *b, vertex_map(cup, s.assignments));
            } else if constexpr (std::is_same_v<T, FiltrationStmt>) {
                const SimplicialComplex& x = diagram().complex(s.base);
                Filtration f;
                if (s.skeletal) {
                    f = Filtration::skeletal(x);
                } else {
                    std::vector<SimplicialComplex> steps;
                    for (const auto& n : s.steps) steps.push_back(diagram().complex(n));
                    f = Filtration(x, steps);
                }
                builder_.add_filtration(s.name, s.base, f);
                filtrations_[s.name] = FiltrationRef{s.name, s.base, f.length()};
            } else if constexpr (std::is_same_v<T, CoeffStmt>) {
                if (s.modulus != 0) Coefficients::modulo(s.modulus);
                modulus_ = s.modulus;
            } else if constexpr (std::is_same_v<T, WindowStmt>) {
                if (s.hi < s.lo) throw InputError("window upper end below lower end");
                window_ = DegreeWindow{s.lo, s.hi};
            } else if constexpr (std::is_same_v<T, FlavorStmt>) {
                std::string text;
                for (const auto& f : s.flavors) text += (text.empty() ? "" : ",") + f;
                flavors_ = logic::Flavors::parse(text);
            } else if constexpr (std::is_same_v<T, SequentStmt>) {
            } else if constexpr (std::is_same_v<T, CommandStmt>) {
                if (s.kind == CommandStmt::Kind::Cellular || s.kind == CommandStmt::Kind::Spectral)
                    filtration(s.filtration, s.complex);
                for (const auto& [x, y] : s.on_pairs)
                    if (!diagram().find_node(x, y)) throw InputError("pair (" + x + "," + y + ") is not declared");
            }
        },
        st);
}

// ---------------------------------------------------------------------------

namespace {

Json json_int(const Integer& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

Json json_vector(const IntVector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(json_int(x));
    return a;
}

Json json_matrix(const IntMatrix& m) {
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(json_vector(m.row(i)));
    return a;
}

Json json_invariants(const IsoInvariants& inv) {
    Json t = Json::array();
    for (const auto& x : inv.torsion) t.push_back(json_int(x));
    return {{"rank", inv.rank}, {"torsion", t}};
}

Json json_assignment(const std::vector<logic::Assignment>& as) {
    Json a = Json::array();
    for (const auto& x : as) a.push_back({{"var", x.var}, {"sort", x.sort}, {"value", x.label}});
    return a;
}

const char* verdict(bool ok) { return ok ? "pass" : "fail"; }

struct Context {
    const WorkbenchSpec& spec;
    const CommandStmt& cmd;
    SpecBuilder& builder;
    Coefficients coeffs;
    DegreeWindow window;
    logic::Flavors flavors;
    Report& report;
};

void run_validate(Context& c) {
    const PairDiagram& d = c.builder.diagram();
    Json structure = Json::array();
    for (const auto& p : d.verify()) structure.push_back(p);
    if (!structure.empty()) c.report.exit_code = 1;
    c.report.extra["structure_problems"] = structure;

    const HomologyModel model = HomologyModel::simplicial(d, c.coeffs, c.window);
    const logic::Theory theory = logic::generate_axioms(d, c.window, c.flavors);
    const logic::SemanticReport sem = logic::validate_semantic(model, theory);

    std::optional<logic::FiniteStructure> fs;
    if (c.coeffs.is_finite()) {
        try {
            fs = logic::export_finite_structure(model);
        } catch (const InputError& e) {
            c.report.notes.push_back(std::string("enumerative check skipped: ") + e.what());
        }
    } else {
        c.report.notes.push_back("integral coefficients: carriers are infinite, semantic check only");
    }

    std::size_t sem_fail = 0, enum_fail = 0, disagree = 0, skipped = 0;
    std::map<std::string, std::size_t> by_tag;
    for (std::size_t i = 0; i < theory.axioms.size(); ++i) {
        const auto& ax = theory.axioms[i];
        const auto& sr = sem.results[i];
        ++by_tag[ax.tag];
        Json j = {{"id", ax.id}, {"tag", ax.tag}, {"flavor", ax.flavor}, {"sequent", logic::to_string(ax.sequent)},
                  {"semantic", verdict(sr.passed)}};
        if (!sr.detail.empty()) j["semantic_detail"] = sr.detail;
        if (!sr.passed) ++sem_fail;
        if (fs) {
            try {
                const logic::Verdict v = logic::eval_sequent(*fs, ax.sequent);
                j["enumerative"] = verdict(v.valid);
                j["agree"] = v.valid == sr.passed;
                if (!v.valid) ++enum_fail;
                if (v.valid != sr.passed) ++disagree;
                if (v.counterexample)
                    c.report.counterexamples.push_back({{"axiom", ax.id}, {"assignment", json_assignment(*v.counterexample)}});
            } catch (const InputError& e) {
                j["enumerative"] = "skipped";
                j["enumerative_detail"] = e.what();
                ++skipped;
            }
        }
        c.report.results.push_back(std::move(j));
    }
    Json tags = Json::object();
    for (const auto& [t, n] : by_tag) tags[t] = n;
    c.report.extra["summary"] = {{"instances", theory.axioms.size()},
                                 {"semantic_failures", sem_fail},
                                 {"enumerative_failures", enum_fail},
                                 {"enumerative_skipped", skipped},
                                 {"disagreements", disagree},
                                 {"by_tag", tags}};
    c.report.extra["flavors"] = c.flavors.to_string();
    if (sem_fail || enum_fail || disagree) c.report.exit_code = 1;
}

Json page_json(const SpectralPage& page) {
    Json cells = Json::array();
    for (const auto& [p, q] : page.cells()) {
        const FgAbGroup g = page.group(p, q);
        if (g.is_trivial()) continue;
        const IsoInvariants inv = g.invariants();
        Json cell = {{"p", p}, {"q", q}, {"rank", inv.rank}, {"torsion", json_invariants(inv)["torsion"]}};
        cell["d_matrix"] = json_matrix(page.differential(p, q).matrix());
        cells.push_back(std::move(cell));
    }
    return {{"r", page.r()}, {"cells", cells}};
}

Json filtration_json(const FiltrationRef& f, const std::string& requested) {
    return {{"name", requested}, {"base", f.base}, {"length", f.length}, {"skeletal", requested == "skeletal"}};
}

void run_cellular(Context& c) {
    const FiltrationRef f = c.builder.filtration(c.cmd.filtration, c.cmd.complex);
    const HomologyModel model = HomologyModel::simplicial(c.builder.diagram(), c.coeffs, c.window);
    const SpectralPage e1 = e1_page(model, f);
    const CellularityVerdict cv = check_cellularity(e1);
    Json offending = Json::array();
    for (const auto& [p, q] : cv.offending) offending.push_back({p, q});
    c.report.extra["filtration"] = filtration_json(f, c.cmd.filtration);
    c.report.extra["cellularity"] = {{"concentrated", cv.cellular}, {"offending", offending},
                                     {"degenerates_at_e2", cv.degenerates_at_e2}};
    c.report.extra["e1"] = page_json(e1);
    if (!cv.cellular) {
        c.report.exit_code = 1;
        c.report.notes.push_back("E1 is not concentrated in q = 0; recovery not attempted");
        return;
    }
    const CellularComplex cc = cellular_complex(model, f);
    Json chains = Json::array();
    for (int n = cc.complex.n_min(); n <= cc.complex.n_max(); ++n) {
        const FgAbGroup g = cc.complex.group(n);
        if (!g.is_trivial()) chains.push_back({{"degree", n}, {"group", json_invariants(g.invariants())}});
    }
    c.report.extra["cellular_chains"] = chains;
    for (int n = c.window.lo; n <= c.window.hi; ++n) {
        const RecoveryVerdict rv = edge_recovery(model, f, n);
        if (rv.cellular.is_trivial() && rv.direct.is_trivial() && rv.invariants_match) continue;
        Json j = json_invariants(rv.cellular);
        j["degree"] = n;
        j["direct"] = json_invariants(rv.direct);
        j["invariants_match"] = rv.invariants_match;
        j["comparison_iso"] = rv.comparison_iso;
        if (!rv.detail.empty()) j["detail"] = rv.detail;
        if (!rv.invariants_match || !rv.comparison_iso) c.report.exit_code = 1;
        c.report.results.push_back(std::move(j));
    }
}

void run_spectral(Context& c) {
    const FiltrationRef ref = c.builder.filtration(c.cmd.filtration, c.cmd.complex);
    const PairDiagram& d = c.builder.diagram();
    std::vector<SimplicialComplex> steps;
    for (int p = 0; p <= ref.length; ++p) steps.push_back(d.complex(ref.step_name(p)));
    const Filtration f(d.complex(ref.base), steps);
    const SpectralSequence ss = run_pages(FilteredChainComplex::simplicial(f, c.coeffs));
    Json pages = Json::array();
    bool dd_zero = true;
    for (const auto& page : ss.pages) {
        pages.push_back(page_json(page));
        for (const auto& [p, q] : page.cells()) {
            const GroupHom d1 = page.differential(p, q);
            const GroupHom d2 = page.differential(p - page.r(), q + page.r() - 1);
            if (d1.target() == d2.source() && !compose(d2, d1).is_zero()) dd_zero = false;
        }
    }
    c.report.extra["filtration"] = filtration_json(ref, c.cmd.filtration);
    c.report.extra["pages"] = pages;
    c.report.extra["stable_r"] = ss.stable_r;
    c.report.extra["differentials_square_to_zero"] = dd_zero;
    if (!dd_zero) c.report.exit_code = 1;
    for (const auto& cell : check_convergence(ss)) {
        if (cell.limit.is_trivial() && cell.graded.is_trivial()) continue;
        c.report.results.push_back({{"degree", cell.n}, {"p", cell.p}, {"limit", json_invariants(cell.limit)},
                                    {"graded", json_invariants(cell.graded)}, {"matches", cell.matches}});
        if (!cell.matches) c.report.exit_code = 1;
    }
}

void run_sequents(Context& c) {
    if (!c.coeffs.is_finite()) throw InputError("sequent evaluation needs finite coefficients (coeff Z/m)");
    const HomologyModel model = HomologyModel::simplicial(c.builder.diagram(), c.coeffs, c.window);
    const logic::FiniteStructure fs = logic::export_finite_structure(model);
    std::size_t count = 0;
    for (const auto& st : c.spec.statements) {
        const auto* s = std::get_if<SequentStmt>(&st);
        if (!s) continue;
        ++count;
        logic::check_well_sorted(fs, s->sequent);
        const logic::Verdict v = logic::eval_sequent(fs, s->sequent);
        c.report.results.push_back({{"name", s->name},
                                    {"sequent", logic::to_string(s->sequent)},
                                    {"valid", v.valid},
                                    {"assignments_checked", v.assignments_checked}});
        if (v.counterexample)
            c.report.counterexamples.push_back({{"sequent", s->name}, {"assignment", json_assignment(*v.counterexample)}});
        if (!v.valid) c.report.exit_code = 1;
    }
    if (count == 0) c.report.notes.push_back("no sequents declared");
    c.report.notes.push_back("finite slice only: the listed candidates are checked, the full theory is not extracted");
}

Json algebra_json(const Representation& t, const EndAlgebra& e, const ModuleActionVerdict& mv) {
    Json nodes = Json::array();
    for (auto n : e.sub.nodes) nodes.push_back(t.node_names[n]);
    Json basis = Json::array();
    for (const auto& tuple : e.basis) {
        Json b = Json::array();
        for (const auto& m : tuple) b.push_back(json_matrix(m));
        basis.push_back(std::move(b));
    }
    Json structure = Json::array();
    for (const auto& row : e.structure) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(json_vector(v));
        structure.push_back(std::move(r));
    }
    return {{"subdiagram", e.sub.name},
            {"nodes", nodes},
            {"edges", e.sub.edges.size()},
            {"free_ranks", e.ranks},
            {"rank", e.rank()},
            {"rational_rank", e.rational_rank},
            {"closed", e.closed},
            {"unit", json_vector(e.unit)},
            {"basis", basis},
            {"structure_constants", structure},
            {"module_action", mv.ok},
            {"module_action_failures", mv.failures}};
}

void run_end_algebra(Context& c) {
    const HomologyModel model = HomologyModel::simplicial(c.builder.diagram(), c.coeffs, c.window);
    const Representation t = Representation::from_model(model);
    const EndAlgebra full = end_algebra(t, Subdiagram::full(t));
    const ModuleActionVerdict mv = verify_module_action(t, full);
    c.report.results.push_back(algebra_json(t, full, mv));
    if (!full.closed || !mv.ok) c.report.exit_code = 1;
    c.report.notes.push_back("computed on the free quotients of the groups");
    if (c.cmd.on_pairs.empty()) return;

    const PairDiagram& d = model.diagram();
    const int len = c.window.hi - c.window.lo + 1;
    std::vector<std::size_t> nodes;
    for (const auto& [x, y] : c.cmd.on_pairs) {
        const std::size_t v = *d.find_node(x, y);
        for (int k = 0; k < len; ++k) nodes.push_back(v * static_cast<std::size_t>(len) + static_cast<std::size_t>(k));
    }
    const EndAlgebra sub = end_algebra(t, Subdiagram::induced(t, nodes, "restricted"));
    const ModuleActionVerdict smv = verify_module_action(t, sub);
    c.report.results.push_back(algebra_json(t, sub, smv));
    const AlgebraMap r = restriction_map(full, sub);
    c.report.extra["restriction"] = {{"matrix", json_matrix(r.matrix)}, {"unital", r.unital},
                                     {"multiplicative", r.multiplicative}};
    if (!sub.closed || !smv.ok || !r.unital || !r.multiplicative) c.report.exit_code = 1;
}

} // namespace

Report run(const WorkbenchSpec& spec, const std::string& source_text, const RunOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    Report report;
    report.input_digest = digest(source_text);
    try {
        const CommandStmt& cmd = spec.command();
        report.command = command_name(cmd.kind);
        SpecBuilder builder;
        for (const auto& s : spec.statements) builder.apply(s);
        const long modulus = options.modulus ? *options.modulus : cmd.coeff ? *cmd.coeff : builder.modulus().value_or(0);
        const Coefficients coeffs = modulus ? Coefficients::modulo(modulus) : Coefficients::integers();
        const DegreeWindow window = options.window   ? *options.window
                                    : builder.window() ? *builder.window()
                                                       : HomologyModel::default_window(builder.diagram());
        const logic::Flavors flavors = options.flavors ? *options.flavors : builder.flavors().value_or(logic::Flavors{});
        report.extra["coefficients"] = coeffs.to_string();
        report.extra["window"] = {window.lo, window.hi};
        if (options.seed) report.extra["seed"] = *options.seed;
        Context c{spec, cmd, builder, coeffs, window, flavors, report};
        switch (cmd.kind) {
        case CommandStmt::Kind::Validate: run_validate(c); break;
        case CommandStmt::Kind::Cellular: run_cellular(c); break;
        case CommandStmt::Kind::Spectral: run_spectral(c); break;
        case CommandStmt::Kind::Sequent: run_sequents(c); break;
        case CommandStmt::Kind::EndAlgebra: run_end_algebra(c); break;
        }
    } catch (const StructuralError& e) {
        report.exit_code = 1;
        report.notes.push_back(e.what());
    } catch (const Error& e) {
        report.exit_code = 2;
        report.notes.push_back(e.what());
    }
    if (options.timing)
        report.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace homwb::dsl
