// One line per criterion; exit status 1 when any criterion fails.

#include "homwb/dsl/report.hpp"
#include "homwb/dsl/spec.hpp"
#include "homwb/dsl/workbench.hpp"
#include "homwb/error.hpp"
#include "homwb/logic/axioms.hpp"
#include "homwb/logic/evaluate.hpp"
#include "homwb/logic/semantic.hpp"
#include "homwb/logic/structure.hpp"
#include "homwb/model.hpp"
#include "homwb/niveau.hpp"
#include "homwb/nori.hpp"
#include "homwb/random.hpp"
#include "homwb/smith.hpp"

#include "generators.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace homwb;
namespace fs = std::filesystem;

namespace {

// pinned limits
constexpr double kAxiomSuiteSeconds = 60.0;
constexpr double kSmithSeconds = 5.0;
constexpr std::size_t kMaxCarrier = 64;

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

SimplicialComplex k(std::vector<Simplex> s) { return SimplicialComplex::from_simplices(s); }

SimplicialComplex random_complex(gen::Rng& rng, int max_vertices, int max_dim) {
    return random::complex(rng, gen::pick(rng, 3, max_vertices), max_dim, gen::pick(rng, 2, 8));
}

SimplicialComplex image(const VertexMap& f, const SimplicialComplex& x) {
    std::vector<Simplex> out;
    for (const auto& s : x.maximal_simplices()) out.push_back(image_of(f, s));
    return out.empty() ? SimplicialComplex() : SimplicialComplex::from_simplices(out);
}

/// X >= Y >= Z with the triple T, a self-map f of (X,Y) and f o f.
PairDiagram core_diagram(gen::Rng& rng) {
    const SimplicialComplex x = random_complex(rng, 8, 3);
    const auto chain = random::descending_chain(rng, x, 3);
    DiagramBuilder b;
    b.add_complex("X", chain[0]);
    b.add_complex("Y", chain[1]);
    b.add_complex("Z", chain[2]);
    b.add_triple("T", "X", "Y", "Z");
    const std::size_t xy = b.add_pair("X", "Y");
    const std::size_t f = b.add_map("f", xy, xy, random::simplicial_map(rng, chain[0], chain[1], chain[0], chain[1]));
    b.add_composite("ff", f, f);
    return b.build();
}

std::size_t largest_carrier(const logic::FiniteStructure& s) {
    std::size_t m = 0;
    for (const auto& [name, c] : s.sorts) m = std::max(m, c.size);
    return m;
}

Outcome axiom_suite() {
    const auto t0 = Clock::now();
    gen::Rng rng(1001);
    const DegreeWindow w{0, 3};
    const long moduli[] = {2, 3, 4, 6};
    int accepted = 0, attempts = 0;
    std::size_t instances = 0, semantic_failures = 0, enumerative_failures = 0, disagreements = 0;
    while (accepted < 20 && attempts < 5000) {
        ++attempts;
        const PairDiagram d = core_diagram(rng);
        std::vector<HomologyModel> models;
        std::vector<logic::FiniteStructure> structures;
        bool small = true;
        for (long m : moduli) {
            models.push_back(HomologyModel::simplicial(d, Coefficients::modulo(m), w));
            try {
                structures.push_back(logic::export_finite_structure(models.back()));
            } catch (const InputError&) {
                small = false;
                break;
            }
            if (largest_carrier(structures.back()) > kMaxCarrier) {
                small = false;
                break;
            }
        }
        if (!small) continue;
        ++accepted;
        const logic::Theory t = logic::generate_axioms(d, w, logic::Flavors{});
        const HomologyModel integral = HomologyModel::simplicial(d, Coefficients::integers(), w);
        const logic::SemanticReport zr = logic::validate_semantic(integral, t);
        instances += t.axioms.size();
        semantic_failures += zr.failures();
        for (std::size_t i = 0; i < models.size(); ++i) {
            const logic::SemanticReport r = logic::validate_semantic(models[i], t);
            instances += t.axioms.size();
            semantic_failures += r.failures();
            for (std::size_t a = 0; a < t.axioms.size(); ++a) {
                const bool valid = logic::eval_sequent(structures[i], t.axioms[a].sequent).valid;
                if (!valid) ++enumerative_failures;
                if (valid != r.results[a].passed) ++disagreements;
            }
        }
    }
    const double secs = seconds_since(t0);
    const bool pass = accepted >= 20 && semantic_failures == 0 && enumerative_failures == 0 && disagreements == 0 &&
                      secs < kAxiomSuiteSeconds;
    return {pass, fmt("%d diagrams (%d drawn), %zu instances over Z and Z/2,3,4,6, %zu semantic failures, "
                      "%zu enumerative failures, %zu disagreements, %.1f s (limit %.0f s)",
                      accepted, attempts, instances, semantic_failures, enumerative_failures, disagreements, secs,
                      kAxiomSuiteSeconds)};
}

Outcome triple_exactness() {
    gen::Rng rng(1002);
    std::size_t inexact = 0, sequences = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const PairDiagram d = gen::triple_diagram(rng, 8, 3);
        for (long m : {0L, 6L}) {
            const HomologyModel model = HomologyModel::simplicial(
                d, m ? Coefficients::modulo(m) : Coefficients::integers(), HomologyModel::default_window(d));
            ++sequences;
            if (!check_long_exact(model.triple_sequence(0)).exact) ++inexact;
        }
    }
    return {inexact == 0, fmt("50 triples, %zu sequences over Z and Z/6, %zu inexact", sequences, inexact)};
}

Outcome boundary_squares_to_zero() {
    gen::Rng rng(1003);
    std::size_t pairs = 0, nonzero = 0;
    for (int trial = 0; trial < 30; ++trial) {
        const SimplicialComplex x = random_complex(rng, 8, 3);
        const auto c = random::descending_chain(rng, x, 4);
        DiagramBuilder b;
        b.add_complex("X", c[0]);
        b.add_complex("Y", c[1]);
        b.add_complex("Z", c[2]);
        b.add_complex("W", c[3]);
        const std::size_t t1 = b.add_triple("T1", "X", "Y", "Z");
        const std::size_t t2 = b.add_triple("T2", "Y", "Z", "W");
        const PairDiagram d = b.build();
        const HomologyModel model = HomologyModel::simplicial(d, Coefficients::integers(), {0, 4});
        for (int n = 2; n <= 4; ++n) {
            ++pairs;
            if (!compose(model.connecting(t2, n - 1), model.connecting(t1, n)).is_zero()) ++nonzero;
        }
    }
    std::size_t d1_pairs = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const SimplicialComplex x = random_complex(rng, 7, 3);
        const Filtration f = gen::random_filtration(rng, x);
        DiagramBuilder b;
        b.add_complex("X", x);
        b.add_filtration("F", "X", f);
        const PairDiagram d = b.build();
        const HomologyModel model = HomologyModel::simplicial(d, Coefficients::integers(), HomologyModel::default_window(d));
        const SpectralPage e1 = e1_page(model, FiltrationRef{"F", "X", f.length()});
        for (const auto& [p, q] : e1.cells()) {
            ++d1_pairs;
            if (!compose(e1.differential(p - 1, q), e1.differential(p, q)).is_zero()) ++nonzero;
        }
    }
    return {nonzero == 0, fmt("%zu connecting pairs from 30 quadruples, %zu d1 pairs from 20 filtrations, %zu nonzero",
                              pairs, d1_pairs, nonzero)};
}

IntVector elementary_divisors(const IntMatrix& a) {
    std::vector<Integer> nz;
    for (const auto& x : smith(a).diagonal())
        if (x != 0) nz.push_back(abs(x));
    std::sort(nz.begin(), nz.end());
    return IntVector(nz.begin(), nz.end());
}

struct Skeletal {
    HomologyModel model;
    FiltrationRef ref;
};

Skeletal skeletal_model(const SimplicialComplex& x) {
    DiagramBuilder b;
    b.add_complex("X", x);
    const Filtration f = Filtration::skeletal(x);
    b.add_filtration("X.skeletal", "X", f);
    const PairDiagram d = b.build();
    return {HomologyModel::simplicial(d, Coefficients::integers(), HomologyModel::default_window(d)),
            FiltrationRef{"X.skeletal", "X", f.length()}};
}

Outcome cellular_recovery() {
    gen::Rng rng(1004);
    std::size_t off_row = 0, outside = 0, mismatched = 0, not_iso = 0, chain_mismatch = 0, degrees = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const SimplicialComplex x = random_complex(rng, 8, 3);
        const Skeletal s = skeletal_model(x);
        off_row += check_cellularity(e1_page(s.model, s.ref)).offending.size();
        const ChainComplex ch = cellular_complex(s.model, s.ref).complex;
        for (int n = ch.n_min(); n <= ch.n_max(); ++n)
            if ((n < 0 || n > x.dim()) && !ch.group(n).is_trivial()) ++outside;
        for (int n = 0; n <= x.dim(); ++n) {
            ++degrees;
            const RecoveryVerdict r = edge_recovery(s.model, s.ref, n);
            if (!r.invariants_match) ++mismatched;
            if (!r.comparison_iso) ++not_iso;
            const IsoInvariants g = ch.group(n).invariants();
            if (g.rank != x.count(n) || !g.torsion.empty()) ++chain_mismatch;
            if (n >= 1 && elementary_divisors(ch.differential(n).matrix()) != elementary_divisors(x.boundary(n)))
                ++chain_mismatch;
        }
    }
    const bool pass = off_row == 0 && outside == 0 && mismatched == 0 && not_iso == 0 && chain_mismatch == 0;
    return {pass, fmt("20 complexes, %zu degrees; off-row E1 cells %zu, cells outside [0,dim] %zu, invariant "
                      "mismatches %zu, non-iso comparisons %zu, chain-level mismatches %zu",
                      degrees, off_row, outside, mismatched, not_iso, chain_mismatch)};
}

Outcome niveau_convergence() {
    gen::Rng rng(1005);
    std::size_t cells = 0, bad = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const SimplicialComplex x = random_complex(rng, 8, 3);
        const SpectralSequence ss =
            run_pages(FilteredChainComplex::simplicial(Filtration::skeletal(x), Coefficients::integers()));
        for (const auto& c : check_convergence(ss)) {
            ++cells;
            if (!c.matches) ++bad;
        }
    }
    const SimplicialComplex disk = k({{"0", "1", "2"}});
    const Filtration f(disk, {k({{"0"}}), disk.skeleton(1), disk});
    const SpectralSequence ss = run_pages(FilteredChainComplex::simplicial(f, Coefficients::integers()));
    for (const auto& c : check_convergence(ss)) {
        ++cells;
        if (!c.matches) ++bad;
    }
    bool example = ss.pages.size() >= 2;
    if (example) {
        const SpectralPage& e1 = ss.pages[0];
        const SpectralPage& e2 = ss.pages[1];
        example = e2.group(0, 0).invariants() == FgAbGroup::free(1).invariants() && e2.group(1, 0).is_trivial() &&
                  e2.group(2, 0).is_trivial() && is_isomorphism(e1.differential(2, 0));
        for (const auto& [p, q] : e2.cells())
            if (q != 0 && !e2.group(p, q).is_trivial()) example = false;
    }
    return {bad == 0 && example,
            fmt("%zu limit cells checked, %zu mismatches; point-circle-disk E2 = (Z,0,0) with d1 iso: %s", cells, bad,
                example ? "yes" : "no")};
}

Outcome prism_projection() {
    gen::Rng rng(1006);
    std::size_t maps = 0, bad = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const SimplicialComplex x = random_complex(rng, 6, 2);
        DiagramBuilder b;
        b.add_complex("X", x);
        b.add_complex("Y", random::subcomplex(rng, x));
        const std::size_t p = b.add_prism("P", "X", "Y");
        const PairDiagram d = b.build();
        const HomologyModel model = HomologyModel::simplicial(d, Coefficients::integers(), HomologyModel::default_window(d));
        for (int n = model.window().lo; n <= model.window().hi; ++n) {
            ++maps;
            if (!is_isomorphism(model.map(d.prisms()[p].project, n))) ++bad;
        }
    }
    return {bad == 0, fmt("20 pairs, %zu projections, %zu not isomorphisms", maps, bad)};
}

Outcome mayer_vietoris() {
    gen::Rng rng(1007);
    int squares = 0, attempts = 0;
    std::size_t inexact = 0, natural = 0, failures = 0;
    while (squares < 20 && attempts < 1000) {
        ++attempts;
        const SimplicialComplex x = random_complex(rng, 7, 2);
        const SimplicialComplex u = random::subcomplex(rng, x, 0.6), v = random::subcomplex(rng, x, 0.6);
        if (u.empty() || v.empty()) continue;
        const VertexMap f = random::simplicial_map(rng, x, {}, x, {});
        DiagramBuilder b;
        b.add_complex("X", x);
        b.add_complex("U", u);
        b.add_complex("V", v);
        b.add_complex("U2", image(f, u));
        b.add_complex("V2", image(f, v));
        const std::size_t q = b.add_square("Q", "X", "U", "V");
        const std::size_t q2 = b.add_square("Q2", "X", "U2", "V2");
        b.add_square_map("g", q, q2, f);
        const PairDiagram d = b.build();
        const DegreeWindow w{0, 3};
        const HomologyModel model = HomologyModel::simplicial(d, Coefficients::integers(), w);
        ++squares;
        for (std::size_t s : {q, q2})
            if (!check_long_exact(model.mayer_vietoris_sequence(s)).exact) ++inexact;
        const logic::Theory t = logic::generate_axioms(d, w, logic::Flavors::parse("core,cd"));
        const logic::SemanticReport r = logic::validate_semantic(model, t);
        for (std::size_t i = 0; i < t.axioms.size(); ++i) {
            if (t.axioms[i].tag == "U7") ++natural;
            if (!r.results[i].passed) ++failures;
        }
    }
    return {squares >= 20 && inexact == 0 && failures == 0,
            fmt("%d squares with a square map, %zu inexact sequences, %zu naturality instances, %zu failed instances",
                squares, inexact, natural, failures)};
}

Outcome purity() {
    gen::Rng rng(1008);
    std::size_t groups = 0, nonzero = 0;
    for (int trial = 0; trial < 30; ++trial) {
        DiagramBuilder b;
        b.add_complex("X", random_complex(rng, 8, 3));
        const std::size_t xx = b.add_pair("X", "X");
        const std::size_t ee = b.add_pair("empty", "empty");
        const PairDiagram d = b.build();
        for (long m : {0L, 4L}) {
            const HomologyModel model = HomologyModel::simplicial(
                d, m ? Coefficients::modulo(m) : Coefficients::integers(), HomologyModel::default_window(d));
            for (int n = model.window().lo; n <= model.window().hi; ++n)
                for (std::size_t node : {xx, ee}) {
                    ++groups;
                    if (!model.group(node, n).is_trivial()) ++nonzero;
                }
        }
    }
    return {nonzero == 0, fmt("30 complexes, %zu groups over Z and Z/4, %zu nonzero", groups, nonzero)};
}

Outcome connecting_naturality() {
    gen::Rng rng(1009);
    std::size_t squares = 0, bad = 0, semantic = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const SimplicialComplex x = random_complex(rng, 7, 3);
        const auto c = random::descending_chain(rng, x, 3);
        const VertexMap f = random::simplicial_map(rng, x, {}, x, {});
        DiagramBuilder b;
        b.add_complex("X", c[0]);
        b.add_complex("Y", c[1]);
        b.add_complex("Z", c[2]);
        b.add_complex("Y2", image(f, c[1]));
        b.add_complex("Z2", image(f, c[2]));
        const std::size_t t1 = b.add_triple("T", "X", "Y", "Z");
        const std::size_t t2 = b.add_triple("T2", "X", "Y2", "Z2");
        const std::size_t cube = b.add_cube("C", t1, t2, f);
        const PairDiagram d = b.build();
        const DegreeWindow w{0, 4};
        const HomologyModel model = HomologyModel::simplicial(d, Coefficients::integers(), w);
        const CubeDecl& cd = d.cubes()[cube];
        for (int n = 1; n <= 4; ++n) {
            ++squares;
            if (!equal_as_maps(compose(model.map(cd.diamond, n - 1), model.connecting(t1, n)),
                               compose(model.connecting(t2, n), model.map(cd.square, n))))
                ++bad;
        }
        const logic::Theory t = logic::generate_axioms(d, w, logic::Flavors{});
        semantic += logic::validate_semantic(model, t).failures();
    }
    return {bad == 0 && semantic == 0,
            fmt("20 maps of triples, %zu squares, %zu not commuting, %zu failed axiom instances", squares, bad, semantic)};
}

Outcome end_algebras() {
    gen::Rng rng(1010);
    std::size_t checks = 0, bad = 0;
    std::vector<std::string> why;
    auto expect = [&](bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            ++bad;
            if (why.size() < 3) why.push_back(what);
        }
    };
    for (int trial = 0; trial < 10; ++trial) {
        const PairDiagram d = core_diagram(rng);
        const HomologyModel model = HomologyModel::simplicial(d, Coefficients::integers(), {0, 2});
        const Representation t = Representation::from_model(model);
        const EndAlgebra full = end_algebra(t, Subdiagram::full(t));
        expect(full.closed, "closure");
        expect(verify_module_action(t, full).ok, "module action");
        std::vector<IntMatrix> id;
        for (const auto& g : t.groups) id.push_back(IntMatrix::identity(g.invariants().rank));
        const auto u = full.coordinates(id);
        expect(u.has_value() && *u == full.unit, "unit");
        expect(full.rank() == oracle::commutant_dimension(t), "rank against linear solve");
        std::vector<std::size_t> half;
        for (std::size_t i = 0; i < t.groups.size(); i += 2) half.push_back(i);
        const EndAlgebra part = end_algebra(t, Subdiagram::induced(t, half, "half"));
        expect(part.closed, "closure of restriction target");
        const AlgebraMap r = restriction_map(full, part);
        expect(r.unital && r.multiplicative, "restriction");

        Representation bare;
        std::size_t squares = 0;
        for (std::size_t i = 0; i < t.groups.size(); ++i) {
            bare.add_node(t.node_names[i], t.groups[i]);
            const std::size_t rk = t.groups[i].invariants().rank;
            squares += rk * rk;
        }
        expect(end_algebra(bare, Subdiagram::full(bare)).rank() == squares, "no-edge rank");
    }
    std::string detail = fmt("10 diagrams, %zu checks, %zu failed", checks, bad);
    for (const auto& w : why) detail += "; " + w;
    return {bad == 0, detail};
}

Outcome smith_forms() {
    gen::Rng rng(1011);
    double smith_secs = 0;
    std::size_t bad = 0, divisor_checks = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t r = static_cast<std::size_t>(gen::pick(rng, 1, 8));
        const std::size_t c = static_cast<std::size_t>(gen::pick(rng, 1, 8));
        const IntMatrix a = random::matrix(rng, r, c, -9, 9);
        const auto t0 = Clock::now();
        const SmithDecomposition s = smith(a);
        smith_secs += seconds_since(t0);
        bool ok = s.u * a * s.v == s.d;
        ok = ok && s.u * s.u_inv == IntMatrix::identity(r) && s.u_inv * s.u == IntMatrix::identity(r);
        ok = ok && s.v * s.v_inv == IntMatrix::identity(c) && s.v_inv * s.v == IntMatrix::identity(c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (i != j && s.d(i, j) != 0) ok = false;
        const IntVector diag = s.diagonal();
        for (std::size_t i = 0; i < diag.size(); ++i) {
            if (diag[i] < 0) ok = false;
            if (i + 1 < diag.size() && diag[i + 1] % (diag[i] == 0 ? Integer(1) : diag[i]) != 0) ok = false;
            if (i + 1 < diag.size() && diag[i] == 0 && diag[i + 1] != 0) ok = false;
        }
        // determinantal divisors, by brute force on the smaller shapes
        if (std::min(r, c) <= 5) {
            Integer prod = 1;
            for (std::size_t kk = 1; kk <= std::min(r, c); ++kk) {
                prod *= diag[kk - 1];
                ++divisor_checks;
                if (oracle::minors_gcd(a, kk) != prod) ok = false;
            }
        }
        if (!ok) ++bad;
    }
    return {bad == 0 && smith_secs < kSmithSeconds,
            fmt("200 matrices up to 8x8, %zu failures, %zu determinantal divisor checks, %.3f s (limit %.0f s)", bad,
                divisor_checks, smith_secs, kSmithSeconds)};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome golden_corpus() {
    const fs::path dir = HOMWB_CORPUS_DIR;
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".hwb") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::size_t unstable = 0, golden_mismatch = 0, round_trip = 0;
    std::vector<std::string> why;
    for (const auto& f : files) {
        const std::string text = slurp(f);
        const dsl::WorkbenchSpec spec = dsl::parse(text);
        const std::string printed = dsl::print(spec);
        if (!(dsl::parse(printed) == spec) || dsl::print(dsl::parse(printed)) != printed) {
            ++round_trip;
            why.push_back(f.filename().string() + " round trip");
        }
        const fs::path out1 = fs::temp_directory_path() / ("homwb_acc_1_" + f.stem().string() + ".json");
        const fs::path out2 = fs::temp_directory_path() / ("homwb_acc_2_" + f.stem().string() + ".json");
        dsl::emit_report(dsl::run(spec, text), out1.string());
        dsl::emit_report(dsl::run(dsl::parse(text), text), out2.string());
        const std::string a = slurp(out1), b = slurp(out2);
        fs::remove(out1);
        fs::remove(out2);
        if (a != b) {
            ++unstable;
            why.push_back(f.filename().string() + " unstable");
        }
        fs::path golden = f;
        golden.replace_extension(".json");
        if (!fs::exists(golden) || slurp(golden) != a) {
            ++golden_mismatch;
            why.push_back(f.filename().string() + " golden");
        }
    }
    std::string detail = fmt("%zu corpus files, %zu unstable, %zu golden mismatches, %zu round-trip failures",
                             files.size(), unstable, golden_mismatch, round_trip);
    for (std::size_t i = 0; i < why.size() && i < 3; ++i) detail += "; " + why[i];
    return {!files.empty() && unstable == 0 && golden_mismatch == 0 && round_trip == 0, detail};
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"axiom suite U1-U4, semantic vs enumerative", axiom_suite},
        {"triple long exact sequences", triple_exactness},
        {"boundary composites vanish", boundary_squares_to_zero},
        {"cellular complex recovers homology", cellular_recovery},
        {"niveau convergence", niveau_convergence},
        {"prism projection is an isomorphism", prism_projection},
        {"Mayer-Vietoris exactness and naturality", mayer_vietoris},
        {"purity", purity},
        {"connecting map naturality", connecting_naturality},
        {"end-algebras", end_algebras},
        {"Smith normal form", smith_forms},
        {"CLI golden files and round trip", golden_corpus},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
    return failed == 0 ? 0 : 1;
}
