#include "homwb/logic/formula.hpp"

#include "homwb/error.hpp"

#include <cctype>

namespace homwb::logic {

Term Term::chain(const std::vector<std::string>& symbols, Term t) {
    for (const auto& s : symbols) t = apply(s, std::move(t));
    return t;
}

Formula Formula::conj(std::vector<Formula> fs) {
    if (fs.empty()) return top();
    if (fs.size() == 1) return std::move(fs.front());
    Formula f;
    f.kind = Kind::And;
    f.parts = std::move(fs);
    return f;
}

std::string to_string(const Term& t) {
    switch (t.kind) {
    case Term::Kind::Var: return t.name;
    case Term::Kind::Zero: return "0";
    case Term::Kind::Apply: return t.name + "(" + to_string(t.args[0]) + ")";
    case Term::Kind::Neg: {
        const Term& a = t.args[0];
        const bool wrap = a.kind == Term::Kind::Plus;
        return "-" + (wrap ? "(" + to_string(a) + ")" : to_string(a));
    }
    case Term::Kind::Plus: {
        const Term& b = t.args[1];
        const bool wrap = b.kind == Term::Kind::Plus;
        return to_string(t.args[0]) + " + " + (wrap ? "(" + to_string(b) + ")" : to_string(b));
    }
    }
    return "?";
}

std::string to_string(const Formula& f) {
    switch (f.kind) {
    case Formula::Kind::Top: return "top";
    case Formula::Kind::Eq: return to_string(f.terms[0]) + " = " + to_string(f.terms[1]);
    case Formula::Kind::Exists: return "exists " + f.var + ":" + f.sort + ". " + to_string(f.parts[0]);
    case Formula::Kind::And: {
        std::string out;
        for (std::size_t i = 0; i < f.parts.size(); ++i) {
            const bool wrap = f.parts[i].kind != Formula::Kind::Eq && f.parts[i].kind != Formula::Kind::Top;
            if (i) out += " & ";
            out += wrap ? "(" + to_string(f.parts[i]) + ")" : to_string(f.parts[i]);
        }
        return out;
    }
    }
    return "?";
}

std::string to_string(const RegularSequent& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.context.size(); ++i)
        out += (i ? ", " : "") + s.context[i].name + ":" + s.context[i].sort;
    return out + "] " + to_string(s.antecedent) + " |- " + to_string(s.consequent);
}

namespace {

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\''; }

class SequentParser {
public:
    explicit SequentParser(const std::string& text) : s_(text) {}

    RegularSequent parse() {
        RegularSequent seq;
        skip();
        if (peek() == '[') seq.context = context();
        seq.antecedent = formula();
        expect("|-");
        seq.consequent = formula();
        skip();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return seq;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw InputError("sequent: " + what + " at column " + std::to_string(pos_ + 1));
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(const std::string& tok) {
        skip();
        if (s_.compare(pos_, tok.size(), tok) == 0) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }
    void expect(const std::string& tok) {
        if (!accept(tok)) fail("expected '" + tok + "'");
    }
    bool at_keyword(const std::string& kw) {
        skip();
        return s_.compare(pos_, kw.size(), kw) == 0 &&
               (pos_ + kw.size() == s_.size() || !ident_char(s_[pos_ + kw.size()]));
    }
    // "f_-1": a minus sign right after '_' and before a digit belongs to the name.
    bool degree_sign(std::size_t start) const {
        return s_[pos_] == '-' && pos_ > start && s_[pos_ - 1] == '_' && pos_ + 1 < s_.size() &&
               std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]));
    }
    std::string ident() {
        skip();
        const std::size_t start = pos_;
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected identifier");
        while (pos_ < s_.size() && (ident_char(s_[pos_]) || degree_sign(start))) ++pos_;
        if (start == pos_) fail("expected identifier");
        return s_.substr(start, pos_ - start);
    }
    std::string name() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
        if (start == pos_) fail("expected name");
        return s_.substr(start, pos_ - start);
    }
    std::string sort() {
        skip();
        if (!accept("h")) fail("expected sort h<n>(X,Y)");
        const std::size_t digits = pos_;
        if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == digits) fail("expected degree in sort");
        const std::string degree = s_.substr(digits, pos_ - digits);
        expect("(");
        const std::string x = name();
        expect(",");
        const std::string y = name();
        expect(")");
        return "h" + degree + "(" + x + "," + y + ")";
    }
    std::vector<TypedVar> context() {
        expect("[");
        std::vector<TypedVar> out;
        if (accept("]")) return out;
        do {
            TypedVar v;
            v.name = ident();
            expect(":");
            v.sort = sort();
            out.push_back(std::move(v));
        } while (accept(","));
        expect("]");
        return out;
    }
    Formula formula() {
        std::vector<Formula> parts;
        parts.push_back(atom());
        while (true) {
            skip();
            if (peek() == '&') {
                ++pos_;
                parts.push_back(atom());
            } else {
                break;
            }
        }
        return Formula::conj(std::move(parts));
    }
    Formula atom() {
        if (at_keyword("top")) {
            pos_ += 3;
            return Formula::top();
        }
        if (at_keyword("exists")) {
            pos_ += 6;
            std::string v = ident();
            expect(":");
            std::string srt = sort();
            expect(".");
            return Formula::exists(std::move(v), std::move(srt), formula());
        }
        if (peek() == '(') {
            const std::size_t save = pos_;
            try {
                ++pos_;
                Formula inner = formula();
                expect(")");
                const char next = peek();
                if (next != '=' && next != '+') return inner;
            } catch (const InputError&) {
            }
            pos_ = save;
        }
        Term lhs = term();
        expect("=");
        Term rhs = term();
        return Formula::eq(std::move(lhs), std::move(rhs));
    }
    Term term() {
        Term t = unary();
        while (peek() == '+') {
            ++pos_;
            t = Term::plus(std::move(t), unary());
        }
        return t;
    }
    Term unary() {
        if (peek() == '-') {
            ++pos_;
            return Term::neg(unary());
        }
        return primary();
    }
    Term primary() {
        const char c = peek();
        if (c == '0') {
            ++pos_;
            return Term::zero();
        }
        if (c == '(') {
            ++pos_;
            Term t = term();
            expect(")");
            return t;
        }
        if (at_keyword("top") || at_keyword("exists")) fail("unexpected keyword");
        std::string id = ident();
        if (peek() == '(') {
            ++pos_;
            Term arg = term();
            expect(")");
            return Term::apply(std::move(id), std::move(arg));
        }
        return Term::var(std::move(id));
    }
};

} // namespace

RegularSequent parse_sequent(const std::string& text) { return SequentParser(text).parse(); }

} // namespace homwb::logic
