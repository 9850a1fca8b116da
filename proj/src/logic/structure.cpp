#include "homwb/logic/structure.hpp"

#include "homwb/error.hpp"
#include "homwb/logic/signature.hpp"

namespace homwb::logic {

namespace {

constexpr std::size_t kMaxCarrier = 1u << 16;

std::string element_label(const IntVector& v) {
    if (v.empty()) return "0";
    if (v.size() == 1) return v[0].get_str();
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].get_str();
    return out + ")";
}

std::size_t finite_order(const FgAbGroup& g) {
    const auto n = g.order();
    if (!n) throw InputError("carrier of an infinite group requested; use validate_semantic");
    if (*n > kMaxCarrier) throw InputError("carrier with " + std::to_string(*n) + " elements is too large to enumerate");
    return *n;
}

} // namespace

Carrier Carrier::of_group(const FgAbGroup& g) {
    Carrier c;
    c.size = finite_order(g);
    std::vector<IntVector> elems(c.size);
    for (std::size_t i = 0; i < c.size; ++i) {
        elems[i] = g.element_at(i);
        c.labels.push_back(element_label(elems[i]));
    }
    c.plus.resize(c.size * c.size);
    c.neg.resize(c.size);
    for (std::size_t a = 0; a < c.size; ++a) {
        IntVector n = elems[a];
        for (auto& x : n) x = -x;
        c.neg[a] = static_cast<Element>(g.index_of(g.normalize(n)));
        for (std::size_t b = 0; b < c.size; ++b) {
            IntVector s = elems[a];
            for (std::size_t i = 0; i < s.size(); ++i) s[i] += elems[b][i];
            c.plus[a * c.size + b] = static_cast<Element>(g.index_of(g.normalize(s)));
        }
    }
    c.zero = 0;
    return c;
}

Carrier Carrier::cyclic(std::size_t m) {
    if (m == 0) throw InputError("cyclic carrier needs at least one element");
    return of_group(FgAbGroup::cyclic_power(m == 1 ? 0 : 1, m));
}

FunctionTable FiniteStructure::table_of(const GroupHom& h, const std::string& domain, const std::string& codomain) {
    const std::size_t n = finite_order(h.source());
    finite_order(h.target());
    FunctionTable t{domain, codomain, std::vector<Element>(n)};
    for (std::size_t i = 0; i < n; ++i)
        t.table[i] = static_cast<Element>(h.target().index_of(h.target().normalize(h.apply(h.source().element_at(i)))));
    return t;
}

std::vector<std::string> FiniteStructure::verify() const {
    std::vector<std::string> problems;
    for (const auto& [name, c] : sorts) {
        if (c.plus.size() != c.size * c.size || c.neg.size() != c.size || c.zero >= c.size)
            problems.push_back("sort " + name + ": group tables have the wrong shape");
        for (Element e : c.plus)
            if (e >= c.size) problems.push_back("sort " + name + ": addition leaves the carrier");
        for (Element e : c.neg)
            if (e >= c.size) problems.push_back("sort " + name + ": negation leaves the carrier");
    }
    for (const auto& [name, f] : functions) {
        auto dom = sorts.find(f.domain);
        auto cod = sorts.find(f.codomain);
        if (dom == sorts.end() || cod == sorts.end()) {
            problems.push_back("symbol " + name + ": unknown domain or codomain sort");
            continue;
        }
        if (f.table.size() != dom->second.size) problems.push_back("symbol " + name + ": table is not total");
        for (Element e : f.table)
            if (e >= cod->second.size) {
                problems.push_back("symbol " + name + ": value outside the codomain");
                break;
            }
    }
    return problems;
}

FiniteStructure FiniteStructure::relabeled(const std::map<std::string, std::vector<Element>>& perms) const {
    auto perm_of = [&](const std::string& sort) -> const std::vector<Element>* {
        auto it = perms.find(sort);
        return it == perms.end() ? nullptr : &it->second;
    };
    auto map_el = [](const std::vector<Element>* p, Element e) { return p ? (*p)[e] : e; };
    FiniteStructure out;
    for (const auto& [name, c] : sorts) {
        const auto* p = perm_of(name);
        Carrier d;
        d.size = c.size;
        d.plus.resize(c.plus.size());
        d.neg.resize(c.size);
        d.labels.resize(c.labels.size());
        d.zero = map_el(p, c.zero);
        for (std::size_t a = 0; a < c.size; ++a) {
            const Element pa = map_el(p, static_cast<Element>(a));
            d.neg[pa] = map_el(p, c.neg[a]);
            if (a < c.labels.size()) d.labels[pa] = c.labels[a];
            for (std::size_t b = 0; b < c.size; ++b)
                d.plus[pa * c.size + map_el(p, static_cast<Element>(b))] = map_el(p, c.plus[a * c.size + b]);
        }
        out.sorts[name] = std::move(d);
    }
    for (const auto& [name, f] : functions) {
        const auto* pd = perm_of(f.domain);
        const auto* pc = perm_of(f.codomain);
        FunctionTable g{f.domain, f.codomain, std::vector<Element>(f.table.size())};
        for (std::size_t a = 0; a < f.table.size(); ++a) g.table[map_el(pd, static_cast<Element>(a))] = map_el(pc, f.table[a]);
        out.functions[name] = std::move(g);
    }
    return out;
}

FiniteStructure export_finite_structure(const HomologyModel& model) {
    if (!model.coefficients().is_finite())
        throw InputError("carriers infinite with integral coefficients; use validate_semantic");
    const Signature sig = generate_signature(model.diagram(), model.window());
    FiniteStructure s;
    for (const auto& sd : sig.sorts()) s.sorts[sd.name] = Carrier::of_group(model.group(sd.node, sd.degree));
    for (const auto& fd : sig.functions()) {
        const GroupHom* h = nullptr;
        switch (fd.origin) {
        case SymbolOrigin::Edge: h = &model.map(fd.index, fd.degree); break;
        case SymbolOrigin::Connecting: h = &model.connecting(fd.index, fd.degree); break;
        case SymbolOrigin::MayerVietoris: h = &model.mv_connecting(fd.index, fd.degree); break;
        }
        s.functions[fd.name] = FiniteStructure::table_of(*h, fd.domain, fd.codomain);
    }
    return s;
}

} // namespace homwb::logic
