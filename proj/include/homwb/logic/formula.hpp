#pragma once

#include <optional>
#include <string>
#include <vector>

namespace homwb::logic {

/// Terms: variables, 0, t + t, -t and unary function symbols f(t).
struct Term {
    enum class Kind { Var, Zero, Plus, Neg, Apply };

    Kind kind = Kind::Zero;
    std::string name;  ///< variable or function symbol
    std::vector<Term> args;

    static Term var(std::string n) { return {Kind::Var, std::move(n), {}}; }
    static Term zero() { return {Kind::Zero, {}, {}}; }
    static Term plus(Term a, Term b) { return {Kind::Plus, {}, {std::move(a), std::move(b)}}; }
    static Term neg(Term a) { return {Kind::Neg, {}, {std::move(a)}}; }
    static Term apply(std::string f, Term a) { return {Kind::Apply, std::move(f), {std::move(a)}}; }
    /// f(g(h(t))) for symbols listed innermost first.
    static Term chain(const std::vector<std::string>& symbols, Term t);

    bool operator==(const Term&) const = default;
};

/// Regular formulas: top, t = t, conjunction, existential quantification.
struct Formula {
    enum class Kind { Top, Eq, And, Exists };

    Kind kind = Kind::Top;
    std::vector<Term> terms;       ///< two for Eq
    std::vector<Formula> parts;    ///< conjuncts, or the single body of Exists
    std::string var;               ///< bound variable of Exists
    std::string sort;              ///< its sort

    static Formula top() { return {}; }
    static Formula eq(Term a, Term b) { return {Kind::Eq, {std::move(a), std::move(b)}, {}, {}, {}}; }
    static Formula conj(std::vector<Formula> fs);
    static Formula exists(std::string v, std::string s, Formula body) {
        return {Kind::Exists, {}, {std::move(body)}, std::move(v), std::move(s)};
    }

    bool operator==(const Formula&) const = default;
};

struct TypedVar {
    std::string name;
    std::string sort;
    bool operator==(const TypedVar&) const = default;
};

/// phi |-_{context} psi
struct RegularSequent {
    std::vector<TypedVar> context;
    Formula antecedent;
    Formula consequent;
    bool operator==(const RegularSequent&) const = default;
};

std::string to_string(const Term& t);
std::string to_string(const Formula& f);
/// ASCII form: "[x:h1(X,Y)] top |- exists y:h1(X,Y). f_1(y) = x"
std::string to_string(const RegularSequent& s);

/// Parses the ASCII form above. Throws InputError with a column on failure.
RegularSequent parse_sequent(const std::string& text);

} // namespace homwb::logic
