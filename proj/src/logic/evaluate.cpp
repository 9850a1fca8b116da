#include "homwb/logic/evaluate.hpp"

#include "homwb/error.hpp"

namespace homwb::logic {

namespace {

constexpr double kMaxAssignments = 2e9;

struct CTerm {
    enum class Op { Var, Const, Plus, Neg, Apply };
    Op op = Op::Const;
    int a = -1;
    int b = -1;
    std::size_t slot = 0;
    Element value = 0;
    const Carrier* carrier = nullptr;
    const std::vector<Element>* table = nullptr;
};

struct CForm {
    enum class Op { True, Eq, And, Exists };
    Op op = Op::True;
    int lhs = -1;
    int rhs = -1;
    std::vector<int> parts;
    std::size_t slot = 0;
    std::size_t range = 0;
};

struct Binding {
    std::string name;
    std::string sort;
    std::size_t slot;
};

class Compiler {
public:
    explicit Compiler(const FiniteStructure& s) : s_(s) {}

    std::vector<CTerm> terms;
    std::vector<CForm> forms;
    std::vector<Binding> scope;
    std::size_t slots = 0;

    const Carrier& carrier(const std::string& sort) const {
        auto it = s_.sorts.find(sort);
        if (it == s_.sorts.end()) throw InputError("unknown sort " + sort);
        return it->second;
    }

    std::size_t bind(const std::string& name, const std::string& sort) {
        carrier(sort);
        scope.push_back({name, sort, slots});
        return slots++;
    }

    int formula(const Formula& f) {
        CForm c;
        switch (f.kind) {
        case Formula::Kind::Top: break;
        case Formula::Kind::Eq: {
            std::optional<std::string> sort = infer(f.terms[0]);
            if (!sort) sort = infer(f.terms[1]);
            else if (auto other = infer(f.terms[1]); other && *other != *sort)
                throw InputError("sort mismatch in equation " + to_string(f) + ": " + *sort + " vs " + *other);
            if (!sort) break;  // both sides are built from 0 alone
            c.op = CForm::Op::Eq;
            c.lhs = term(f.terms[0], *sort);
            c.rhs = term(f.terms[1], *sort);
            break;
        }
        case Formula::Kind::And:
            c.op = CForm::Op::And;
            for (const auto& p : f.parts) c.parts.push_back(formula(p));
            break;
        case Formula::Kind::Exists: {
            c.op = CForm::Op::Exists;
            c.range = carrier(f.sort).size;
            c.slot = bind(f.var, f.sort);
            c.parts.push_back(formula(f.parts[0]));
            scope.pop_back();
            break;
        }
        }
        forms.push_back(std::move(c));
        return static_cast<int>(forms.size() - 1);
    }

private:
    const FiniteStructure& s_;

    const Binding& lookup(const std::string& name) const {
        for (auto it = scope.rbegin(); it != scope.rend(); ++it)
            if (it->name == name) return *it;
        throw InputError("variable '" + name + "' is not in the context");
    }

    const FunctionTable& function(const std::string& name) const {
        auto it = s_.functions.find(name);
        if (it == s_.functions.end()) throw InputError("unknown function symbol " + name);
        return it->second;
    }

    std::optional<std::string> infer(const Term& t) const {
        switch (t.kind) {
        case Term::Kind::Var: return lookup(t.name).sort;
        case Term::Kind::Zero: return std::nullopt;
        case Term::Kind::Neg: return infer(t.args[0]);
        case Term::Kind::Plus: {
            auto a = infer(t.args[0]);
            auto b = infer(t.args[1]);
            if (a && b && *a != *b) throw InputError("sort mismatch in " + to_string(t) + ": " + *a + " vs " + *b);
            return a ? a : b;
        }
        case Term::Kind::Apply: {
            const FunctionTable& f = function(t.name);
            if (auto a = infer(t.args[0]); a && *a != f.domain)
                throw InputError("sort mismatch: " + t.name + " expects " + f.domain + " but got " + *a);
            return f.codomain;
        }
        }
        return std::nullopt;
    }

    int term(const Term& t, const std::string& sort) {
        CTerm c;
        switch (t.kind) {
        case Term::Kind::Var: {
            const Binding& b = lookup(t.name);
            if (b.sort != sort)
                throw InputError("sort mismatch: variable " + t.name + " has sort " + b.sort + ", expected " + sort);
            c.op = CTerm::Op::Var;
            c.slot = b.slot;
            break;
        }
        case Term::Kind::Zero:
            c.op = CTerm::Op::Const;
            c.value = carrier(sort).zero;
            break;
        case Term::Kind::Plus:
            c.op = CTerm::Op::Plus;
            c.carrier = &carrier(sort);
            c.a = term(t.args[0], sort);
            c.b = term(t.args[1], sort);
            break;
        case Term::Kind::Neg:
            c.op = CTerm::Op::Neg;
            c.carrier = &carrier(sort);
            c.a = term(t.args[0], sort);
            break;
        case Term::Kind::Apply: {
            const FunctionTable& f = function(t.name);
            if (f.codomain != sort)
                throw InputError("sort mismatch: " + t.name + " lands in " + f.codomain + ", expected " + sort);
            c.op = CTerm::Op::Apply;
            c.table = &f.table;
            c.a = term(t.args[0], f.domain);
            break;
        }
        }
        terms.push_back(c);
        return static_cast<int>(terms.size() - 1);
    }
};

class Machine {
public:
    Machine(const std::vector<CTerm>& t, const std::vector<CForm>& f, std::size_t slots)
        : env(slots), terms_(t), forms_(f) {}

    std::vector<Element> env;

    Element eval(int i) {
        const CTerm& c = terms_[i];
        switch (c.op) {
        case CTerm::Op::Var: return env[c.slot];
        case CTerm::Op::Const: return c.value;
        case CTerm::Op::Plus: return c.carrier->plus[eval(c.a) * c.carrier->size + eval(c.b)];
        case CTerm::Op::Neg: return c.carrier->neg[eval(c.a)];
        case CTerm::Op::Apply: return (*c.table)[eval(c.a)];
        }
        return 0;
    }

    bool holds(int i) {
        const CForm& f = forms_[i];
        switch (f.op) {
        case CForm::Op::True: return true;
        case CForm::Op::Eq: return eval(f.lhs) == eval(f.rhs);
        case CForm::Op::And:
            for (int p : f.parts)
                if (!holds(p)) return false;
            return true;
        case CForm::Op::Exists:
            for (std::size_t e = 0; e < f.range; ++e) {
                env[f.slot] = static_cast<Element>(e);
                if (holds(f.parts[0])) return true;
            }
            return false;
        }
        return false;
    }

private:
    const std::vector<CTerm>& terms_;
    const std::vector<CForm>& forms_;
};

struct CompiledSequent {
    Compiler compiler;
    std::vector<std::size_t> ranges;
    int antecedent = -1;
    int consequent = -1;
};

CompiledSequent compile(const FiniteStructure& s, const RegularSequent& seq) {
    CompiledSequent out{Compiler(s), {}, -1, -1};
    for (std::size_t i = 0; i < seq.context.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (seq.context[j].name == seq.context[i].name)
                throw InputError("variable '" + seq.context[i].name + "' appears twice in the context");
        out.ranges.push_back(out.compiler.carrier(seq.context[i].sort).size);
        out.compiler.bind(seq.context[i].name, seq.context[i].sort);
    }
    out.antecedent = out.compiler.formula(seq.antecedent);
    out.consequent = out.compiler.formula(seq.consequent);
    return out;
}

} // namespace

void check_well_sorted(const FiniteStructure& s, const RegularSequent& seq) { compile(s, seq); }

Verdict eval_sequent(const FiniteStructure& s, const RegularSequent& seq) {
    const CompiledSequent c = compile(s, seq);
    double total = 1;
    for (std::size_t r : c.ranges) total *= static_cast<double>(r);
    if (total > kMaxAssignments) throw InputError("sequent has too many context assignments to enumerate");

    Machine m(c.compiler.terms, c.compiler.forms, c.compiler.slots);
    Verdict v;
    const std::size_t k = c.ranges.size();
    for (std::size_t r : c.ranges)
        if (r == 0) return v;
    std::vector<Element> idx(k, 0);
    while (true) {
        for (std::size_t i = 0; i < k; ++i) m.env[i] = idx[i];
        ++v.assignments_checked;
        if (m.holds(c.antecedent)) {
            for (std::size_t i = 0; i < k; ++i) m.env[i] = idx[i];
            if (!m.holds(c.consequent)) {
                v.valid = false;
                std::vector<Assignment> ce;
                for (std::size_t i = 0; i < k; ++i) {
                    const Carrier& car = c.compiler.carrier(seq.context[i].sort);
                    ce.push_back({seq.context[i].name, seq.context[i].sort, idx[i],
                                  idx[i] < car.labels.size() ? car.labels[idx[i]] : std::to_string(idx[i])});
                }
                v.counterexample = std::move(ce);
                return v;
            }
        }
        std::size_t pos = k;
        while (pos > 0) {
            --pos;
            if (++idx[pos] < c.ranges[pos]) break;
            idx[pos] = 0;
            if (pos == 0) return v;
        }
        if (k == 0) return v;
    }
}

TheoryFragment theory_of_model(const FiniteStructure& s, const std::vector<RegularSequent>& candidates) {
    TheoryFragment out;
    for (const auto& seq : candidates) {
        Verdict v = eval_sequent(s, seq);
        if (v.valid) out.retained.push_back(seq);
        else out.rejected.push_back({seq, std::move(v)});
    }
    return out;
}

} // namespace homwb::logic
