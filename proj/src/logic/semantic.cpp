#include "homwb/logic/semantic.hpp"

#include "homwb/error.hpp"

namespace homwb::logic {

bool SemanticReport::all_passed() const { return failures() == 0; }

std::size_t SemanticReport::failures() const {
    std::size_t n = 0;
    for (const auto& r : results) n += r.passed ? 0 : 1;
    return n;
}

GroupHom resolve_map(const HomologyModel& model, const Signature& sig, const MapRef& ref) {
    switch (ref.kind) {
    case MapRef::Kind::MvSplit: return model.mv_split(ref.square, ref.degree);
    case MapRef::Kind::MvDifference: return model.mv_difference(ref.square, ref.degree);
    case MapRef::Kind::Symbol: break;
    }
    const FunctionDecl* f = sig.find_function(ref.symbol);
    if (!f) throw InputError("symbol " + ref.symbol + " is not in the signature");
    switch (f->origin) {
    case SymbolOrigin::Edge: return model.map(f->index, f->degree);
    case SymbolOrigin::Connecting: return model.connecting(f->index, f->degree);
    case SymbolOrigin::MayerVietoris: return model.mv_connecting(f->index, f->degree);
    }
    throw InputError("unresolvable symbol " + ref.symbol);
}

namespace {

std::string vec_str(const IntVector& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].get_str();
    return out + "]";
}

void require_same_signature(const Signature& a, const Signature& b) {
    if (!(a.window() == b.window())) throw InputError("theory window differs from the model window");
    if (a.sorts().size() != b.sorts().size() || a.functions().size() != b.functions().size())
        throw InputError("theory was generated for a different diagram");
    for (std::size_t i = 0; i < a.sorts().size(); ++i)
        if (a.sorts()[i].name != b.sorts()[i].name) throw InputError("theory sort " + a.sorts()[i].name + " is not a model sort");
    for (std::size_t i = 0; i < a.functions().size(); ++i)
        if (a.functions()[i].name != b.functions()[i].name)
            throw InputError("theory symbol " + a.functions()[i].name + " is not a model symbol");
}

class Checker {
public:
    Checker(const HomologyModel& m, const Signature& s) : model_(m), sig_(s) {}

    SemanticResult check(const AxiomInstance& ax) const {
        SemanticResult r{ax.id, ax.tag, true, ""};
        const SemanticCheck& c = ax.check;
        switch (c.kind) {
        case SemanticCheck::Kind::Group: {
            const SortDecl* s = sig_.find_sort(c.sort);
            if (!s) throw InputError("sort " + c.sort + " is not in the signature");
            const FgAbGroup& g = model_.group(s->node, s->degree);
            if (!g.is_canonical()) {
                r.passed = false;
                r.detail = "group presentation is not canonical";
            }
            break;
        }
        case SemanticCheck::Kind::Hom: {
            const GroupHom h = resolve_map(model_, sig_, c.lhs.at(0));
            if (auto bad = h.well_definedness_violation()) {
                r.passed = false;
                r.detail = "relation " + std::to_string(*bad) + " of the source is not sent to zero";
            }
            break;
        }
        case SemanticCheck::Kind::Equal: {
            const GroupHom l = chain(c.lhs, c.sort), rr = chain(c.rhs, c.sort);
            if (!(l.source() == rr.source()) || !(l.target() == rr.target()) || !equal_as_maps(l, rr)) {
                r.passed = false;
                r.detail = "composites differ";
                for (std::size_t i = 0; i < l.source().ngens() && l.source() == rr.source(); ++i) {
                    IntVector e(l.source().ngens());
                    e[i] = 1;
                    if (!l.target().elements_equal(l.apply(e), rr.apply(e))) {
                        r.detail += " on generator " + std::to_string(i) + ": " + vec_str(l.apply(e)) + " vs " +
                                    vec_str(rr.apply(e));
                        break;
                    }
                }
            }
            break;
        }
        case SemanticCheck::Kind::Zero: {
            const GroupHom h = chain(c.lhs, c.sort);
            if (!h.is_zero()) {
                r.passed = false;
                r.detail = "composite is not zero";
            }
            break;
        }
        case SemanticCheck::Kind::Exact: {
            const GroupHom f = chain(c.lhs, c.sort);
            const GroupHom g = chain(c.rhs, c.sort);
            const ExactnessWitness w = kernel_contained_in_image(f, g);
            if (!w.exact) {
                r.passed = false;
                r.detail = w.reason + (w.witness ? " (witness " + vec_str(*w.witness) + ")" : "");
            }
            break;
        }
        }
        return r;
    }

private:
    const HomologyModel& model_;
    const Signature& sig_;

    GroupHom chain(const std::vector<MapRef>& refs, const std::string& sort) const {
        if (refs.empty()) {
            const SortDecl* s = sig_.find_sort(sort);
            if (!s) throw InputError("sort " + sort + " is not in the signature");
            return GroupHom::identity(model_.group(s->node, s->degree));
        }
        GroupHom h = resolve_map(model_, sig_, refs[0]);
        for (std::size_t i = 1; i < refs.size(); ++i) h = compose(resolve_map(model_, sig_, refs[i]), h);
        return h;
    }
};

} // namespace

SemanticReport validate_semantic(const HomologyModel& model, const Theory& theory) {
    const Signature own = generate_signature(model.diagram(), model.window());
    require_same_signature(theory.signature, own);
    const Checker checker(model, own);
    SemanticReport report;
    for (const auto& ax : theory.axioms) report.results.push_back(checker.check(ax));
    return report;
}

} // namespace homwb::logic
