#include "homwb/dsl/lexer.hpp"
#include "homwb/dsl/spec.hpp"
#include "homwb/dsl/workbench.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace homwb::dsl {

ParseError::ParseError(int line, int column, const std::string& what)
    : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line), column_(column) {}

const CommandStmt& WorkbenchSpec::command() const {
    for (const auto& s : statements)
        if (auto c = std::get_if<CommandStmt>(&s)) return *c;
    throw InputError("spec has no command");
}

std::string command_name(CommandStmt::Kind k) {
    switch (k) {
    case CommandStmt::Kind::Validate: return "validate";
    case CommandStmt::Kind::Cellular: return "cellular";
    case CommandStmt::Kind::Spectral: return "spectral";
    case CommandStmt::Kind::Sequent: return "sequent";
    case CommandStmt::Kind::EndAlgebra: return "end-algebra";
    }
    return "?";
}

namespace {

bool all_digits(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

struct Ref {
    enum class Kind { Complex, Edge, Triple, Square, Filtration };
    Kind kind;
    std::string name;
    Token at;
};

class LineParser {
public:
    LineParser(std::vector<Token> toks, std::string text) : t_(std::move(toks)), text_(std::move(text)) {}

    const Token& peek(std::size_t k = 0) const { return t_[std::min(pos_ + k, t_.size() - 1)]; }
    Token next() {
        Token t = peek();
        if (pos_ < t_.size() - 1) ++pos_;
        return t;
    }
    [[noreturn]] void fail(const Token& t, const std::string& msg) const { throw ParseError(t.line, t.column, msg); }
    [[noreturn]] void expected(const std::string& what) const {
        fail(peek(), "expected " + what + ", found " + peek().describe());
    }
    bool accept(const char* sym) {
        if (!peek().is(sym)) return false;
        next();
        return true;
    }
    void expect(const char* sym) {
        if (!accept(sym)) expected(std::string("'") + sym + "'");
    }
    bool accept_word(const char* w) {
        if (!peek().is_word(w)) return false;
        next();
        return true;
    }
    void expect_word(const char* w) {
        if (!accept_word(w)) expected(std::string("'") + w + "'");
    }
    Token word(const char* what) {
        if (peek().kind != Token::Kind::Word) expected(what);
        return next();
    }
    /// word ('.' word)* with no whitespace around the dots
    std::string name(const char* what, Token* at = nullptr) {
        Token first = word(what);
        if (at) *at = first;
        std::string n = first.text;
        while (peek().is(".") && !peek().spaced && peek(1).kind == Token::Kind::Word && !peek(1).spaced) {
            next();
            n += "." + next().text;
        }
        return n;
    }
    std::string declared(const char* what) {
        Token t = word(what);
        if (peek().is(".") && !peek().spaced) fail(peek(), "declared names cannot contain '.'");
        return t.text;
    }
    long integer() {
        const Token start = peek();
        bool neg = false;
        if (peek().is("-")) {
            next();
            neg = true;
            if (peek().spaced) expected("a number");
        }
        if (peek().kind != Token::Kind::Word || !all_digits(peek().text)) expected("a number");
        const std::string digits = next().text;
        if (digits.size() > 9) fail(start, "number out of range");
        const long v = std::stol(digits);
        return neg ? -v : v;
    }
    long coefficient() {
        const Token w = word("a coefficient ring");
        if (w.text == "Z") {
            if (peek().is("/") && !peek().spaced) {
                next();
                const Token m = peek();
                const long v = integer();
                if (v < 2) fail(m, "modulus must be at least 2");
                return v;
            }
            return 0;
        }
        if (w.text.rfind("Zmod", 0) == 0 && all_digits(w.text.substr(4)) && w.text.size() <= 13) {
            const long v = std::stol(w.text.substr(4));
            if (v < 2) fail(w, "modulus must be at least 2");
            return v;
        }
        fail(w, "expected a coefficient ring (Z, Z/m or Zmod<m>), found " + w.describe());
    }
    std::pair<std::string, std::string> pair(std::vector<Ref>& refs) {
        expect("(");
        Token a, b;
        std::string x = name("a complex name", &a);
        expect(",");
        std::string y = name("a complex name", &b);
        expect(")");
        refs.push_back({Ref::Kind::Complex, x, a});
        refs.push_back({Ref::Kind::Complex, y, b});
        return {x, y};
    }
    Assignments assignments() {
        Assignments out;
        expect("{");
        if (accept("}")) return out;
        do {
            const std::string a = word("a vertex label").text;
            expect("->");
            const std::string b = word("a vertex label").text;
            out.emplace_back(a, b);
        } while (accept(","));
        expect("}");
        return out;
    }
    Simplex simplex() {
        Simplex s;
        if (accept("(")) {
            while (peek().kind == Token::Kind::Word) {
                const Token v = next();
                if (std::find(s.begin(), s.end(), v.text) != s.end()) fail(v, "repeated vertex " + v.describe());
                s.push_back(v.text);
            }
            if (s.empty()) expected("a vertex label");
            expect(")");
        } else {
            const Token w = word("a simplex");
            for (char c : w.text) {
                if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
                    fail(w, "single-character vertices must be letters, digits or '_'");
                const std::string v(1, c);
                if (std::find(s.begin(), s.end(), v) != s.end()) fail(w, "repeated vertex '" + v + "'");
                s.push_back(v);
            }
        }
        std::sort(s.begin(), s.end());
        return s;
    }
    std::vector<Simplex> simplices() {
        std::vector<Simplex> out;
        expect("{");
        if (accept("}")) return out;
        do out.push_back(simplex());
        while (accept(","));
        expect("}");
        return out;
    }
    void finish() {
        if (peek().kind != Token::Kind::End) expected("end of line");
    }
    std::string rest_after(const Token& t) const {
        return text_.substr(static_cast<std::size_t>(t.column - 1 + static_cast<int>(t.text.size())));
    }

private:
    std::vector<Token> t_;
    std::string text_;
    std::size_t pos_ = 0;
};

Loc loc_of(const Token& t) { return {t.line, t.column}; }

Statement parse_statement(LineParser& p, std::vector<Ref>& refs) {
    const Token kw = p.word("a statement keyword");
    const Loc loc = loc_of(kw);
    const std::string& k = kw.text;
    auto ref = [&](Ref::Kind kind, const char* what) {
        Token at;
        std::string n = p.name(what, &at);
        refs.push_back({kind, n, at});
        return n;
    };

    if (k == "complex") {
        ComplexStmt s;
        s.loc = loc;
        const Token nt = p.peek();
        s.name = p.declared("a complex name");
        if (s.name == kEmptyName) p.fail(nt, "the name 'empty' is reserved");
        p.expect("=");
        if (p.accept_word("skeleton")) {
            s.kind = ComplexStmt::Kind::Skeleton;
            s.source = ref(Ref::Kind::Complex, "a complex name");
            const Token d = p.peek();
            s.dim = static_cast<int>(p.integer());
            if (s.dim < 0) p.fail(d, "skeleton dimension must be non-negative");
        } else {
            s.simplices = p.simplices();
        }
        return s;
    }
    if (k == "pair") {
        PairStmt s;
        s.loc = loc;
        std::tie(s.total, s.sub) = p.pair(refs);
        return s;
    }
    if (k == "map") {
        MapStmt s;
        s.loc = loc;
        s.name = p.declared("a map name");
        p.expect(":");
        std::tie(s.source_total, s.source_sub) = p.pair(refs);
        p.expect("->");
        std::tie(s.target_total, s.target_sub) = p.pair(refs);
        p.expect("=");
        s.assignments = p.assignments();
        return s;
    }
    if (k == "compose") {
        ComposeStmt s;
        s.loc = loc;
        s.name = p.declared("a map name");
        p.expect("=");
        s.second = ref(Ref::Kind::Edge, "a map name");
        p.expect(".");
        s.first = ref(Ref::Kind::Edge, "a map name");
        return s;
    }
    if (k == "triple") {
        TripleStmt s;
        s.loc = loc;
        s.name = p.declared("a triple name");
        p.expect("=");
        p.expect("(");
        s.x = ref(Ref::Kind::Complex, "a complex name");
        p.expect(",");
        s.y = ref(Ref::Kind::Complex, "a complex name");
        p.expect(",");
        s.z = ref(Ref::Kind::Complex, "a complex name");
        p.expect(")");
        return s;
    }
    if (k == "cube" || k == "squaremap") {
        const Ref::Kind kind = k == "cube" ? Ref::Kind::Triple : Ref::Kind::Square;
        const char* what = k == "cube" ? "a triple name" : "a square name";
        std::string name = p.declared("a name");
        p.expect(":");
        std::string src = ref(kind, what);
        p.expect("->");
        std::string tgt = ref(kind, what);
        p.expect("=");
        Assignments a = p.assignments();
        if (k == "cube") return CubeStmt{name, src, tgt, a, loc};
        return SquareMapStmt{name, src, tgt, a, loc};
    }
    if (k == "prism") {
        PrismStmt s;
        s.loc = loc;
        s.name = p.declared("a prism name");
        p.expect("=");
        std::tie(s.x, s.y) = p.pair(refs);
        return s;
    }
    if (k == "square") {
        SquareStmt s;
        s.loc = loc;
        s.name = p.declared("a square name");
        p.expect("=");
        p.expect("(");
        s.x = ref(Ref::Kind::Complex, "a complex name");
        p.expect(";");
        s.u = ref(Ref::Kind::Complex, "a complex name");
        p.expect(",");
        s.v = ref(Ref::Kind::Complex, "a complex name");
        p.expect(")");
        return s;
    }
    if (k == "filtration") {
        FiltrationStmt s;
        s.loc = loc;
        const Token nt = p.peek();
        s.name = p.declared("a filtration name");
        if (s.name == "skeletal") p.fail(nt, "the name 'skeletal' is reserved");
        p.expect_word("on");
        s.base = ref(Ref::Kind::Complex, "a complex name");
        p.expect("=");
        if (p.accept_word("skeletal")) {
            s.skeletal = true;
        } else {
            p.expect("[");
            do s.steps.push_back(ref(Ref::Kind::Complex, "a complex name"));
            while (p.accept(","));
            p.expect("]");
        }
        return s;
    }
    if (k == "coeff") return CoeffStmt{p.coefficient(), loc};
    if (k == "window") {
        WindowStmt s;
        s.loc = loc;
        s.lo = static_cast<int>(p.integer());
        p.expect("..");
        const Token hi = p.peek();
        s.hi = static_cast<int>(p.integer());
        if (s.hi < s.lo) p.fail(hi, "window upper end below lower end");
        return s;
    }
    if (k == "flavor") {
        FlavorStmt s;
        s.loc = loc;
        do {
            const Token f = p.word("a flavor");
            if (f.text != "core" && f.text != "homotopy" && f.text != "cd")
                p.fail(f, "unknown flavor " + f.describe());
            s.flavors.push_back(f.text);
        } while (p.accept(","));
        return s;
    }
    if (k == "sequent" && p.peek().kind == Token::Kind::Word) {
        SequentStmt s;
        s.loc = loc;
        s.name = p.declared("a sequent name");
        const Token colon = p.peek();
        p.expect(":");
        const std::string body = p.rest_after(colon);
        try {
            s.sequent = logic::parse_sequent(body);
        } catch (const ParseError&) {
            throw;
        } catch (const InputError& e) {
            p.fail(colon, e.what());
        }
        while (p.peek().kind != Token::Kind::End) p.next();
        return s;
    }

    CommandStmt c;
    c.loc = loc;
    if (k == "validate") {
        c.kind = CommandStmt::Kind::Validate;
    } else if (k == "sequent") {
        c.kind = CommandStmt::Kind::Sequent;
    } else if (k == "cellular" || k == "spectral") {
        c.kind = k == "cellular" ? CommandStmt::Kind::Cellular : CommandStmt::Kind::Spectral;
        c.complex = ref(Ref::Kind::Complex, "a complex name");
        const Token f = p.word("a filtration name");
        c.filtration = f.text;
        if (c.filtration != "skeletal") refs.push_back({Ref::Kind::Filtration, c.filtration, f});
        if (p.peek().kind != Token::Kind::End) c.coeff = p.coefficient();
    } else if (k == "end-algebra") {
        c.kind = CommandStmt::Kind::EndAlgebra;
        if (p.accept_word("on")) {
            do c.on_pairs.push_back(p.pair(refs));
            while (p.accept(","));
        }
    } else {
        p.fail(kw, "unknown statement " + kw.describe());
    }
    return c;
}

std::string kind_word(Ref::Kind k) {
    switch (k) {
    case Ref::Kind::Complex: return "complex";
    case Ref::Kind::Edge: return "map";
    case Ref::Kind::Triple: return "triple";
    case Ref::Kind::Square: return "square";
    case Ref::Kind::Filtration: return "filtration";
    }
    return "name";
}

bool resolves(const SpecBuilder& b, const Ref& r) {
    switch (r.kind) {
    case Ref::Kind::Complex: return b.has_complex(r.name);
    case Ref::Kind::Edge: return b.has_edge(r.name);
    case Ref::Kind::Triple: return b.triple(r.name).has_value();
    case Ref::Kind::Square: return b.square(r.name).has_value();
    case Ref::Kind::Filtration: return b.has_filtration(r.name);
    }
    return false;
}

/// Declared names must be fresh within their kind.
void check_fresh(const SpecBuilder& b, const Statement& s, const Loc& loc) {
    auto clash = [&](bool taken, const std::string& kind, const std::string& name) {
        if (taken) throw ParseError(loc.line, loc.column, kind + " '" + name + "' is already defined");
    };
    if (auto m = std::get_if<MapStmt>(&s)) clash(b.has_edge(m->name), "map", m->name);
    if (auto m = std::get_if<ComposeStmt>(&s)) clash(b.has_edge(m->name), "map", m->name);
    if (auto t = std::get_if<TripleStmt>(&s)) clash(b.triple(t->name).has_value(), "triple", t->name);
    if (auto t = std::get_if<SquareStmt>(&s)) clash(b.square(t->name).has_value(), "square", t->name);
    if (auto f = std::get_if<FiltrationStmt>(&s)) clash(b.has_filtration(f->name), "filtration", f->name);
}

} // namespace

WorkbenchSpec parse(const std::string& text) {
    WorkbenchSpec spec;
    SpecBuilder builder;
    std::vector<std::string> sequent_names;
    bool have_command = false;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string body = strip_comment(line);
        LineParser p(lex_line(body, line_no), body);
        if (p.peek().kind == Token::Kind::End) continue;
        std::vector<Ref> refs;
        Statement st = parse_statement(p, refs);
        p.finish();
        const Loc loc = std::visit([](const auto& s) { return s.loc; }, st);
        for (const auto& r : refs)
            if (!resolves(builder, r))
                throw ParseError(r.at.line, r.at.column, "unknown " + kind_word(r.kind) + " '" + r.name + "'");
        if (std::holds_alternative<CommandStmt>(st)) {
            if (have_command)
                throw ParseError(loc.line, loc.column, "a second command; exactly one command per input");
            have_command = true;
        }
        if (auto sq = std::get_if<SequentStmt>(&st)) {
            if (std::find(sequent_names.begin(), sequent_names.end(), sq->name) != sequent_names.end())
                throw ParseError(loc.line, loc.column, "sequent '" + sq->name + "' is already defined");
            sequent_names.push_back(sq->name);
        }
        check_fresh(builder, st, loc);
        try {
            builder.apply(st);
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(loc.line, loc.column, e.what());
        }
        spec.statements.push_back(std::move(st));
    }
    if (!have_command) throw ParseError(line_no + 1, 1, "no command; expected one of validate, cellular, spectral, sequent, end-algebra");
    return spec;
}

} // namespace homwb::dsl
