#include "homwb/dsl/spec.hpp"
#include "homwb/dsl/workbench.hpp"

#include <cctype>
#include <sstream>

namespace homwb::dsl {

namespace {

bool compact(const Simplex& s) {
    for (const auto& v : s)
        if (v.size() != 1 || !(std::isalnum(static_cast<unsigned char>(v[0])) || v[0] == '_')) return false;
    return true;
}

std::string simplex_text(const Simplex& s) {
    if (compact(s)) {
        std::string out;
        for (const auto& v : s) out += v;
        return out;
    }
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + s[i];
    return out + ")";
}

std::string pair_text(const std::string& x, const std::string& y) { return "(" + x + ", " + y + ")"; }

std::string assignments_text(const Assignments& a) {
    std::string out = "{";
    for (std::size_t i = 0; i < a.size(); ++i) out += (i ? ", " : "") + a[i].first + "->" + a[i].second;
    return out + "}";
}

struct Printer {
    std::ostringstream& o;

    void operator()(const ComplexStmt& s) {
        o << "complex " << s.name << " = ";
        if (s.kind == ComplexStmt::Kind::Skeleton) {
            o << "skeleton " << s.source << " " << s.dim;
            return;
        }
        o << "{";
        for (std::size_t i = 0; i < s.simplices.size(); ++i) o << (i ? ", " : "") << simplex_text(s.simplices[i]);
        o << "}";
    }
    void operator()(const PairStmt& s) { o << "pair " << pair_text(s.total, s.sub); }
    void operator()(const MapStmt& s) {
        o << "map " << s.name << " : " << pair_text(s.source_total, s.source_sub) << " -> "
          << pair_text(s.target_total, s.target_sub) << " = " << assignments_text(s.assignments);
    }
    void operator()(const ComposeStmt& s) { o << "compose " << s.name << " = " << s.second << " . " << s.first; }
    void operator()(const TripleStmt& s) { o << "triple " << s.name << " = (" << s.x << ", " << s.y << ", " << s.z << ")"; }
    void operator()(const CubeStmt& s) {
        o << "cube " << s.name << " : " << s.source << " -> " << s.target << " = " << assignments_text(s.assignments);
    }
    void operator()(const PrismStmt& s) { o << "prism " << s.name << " = " << pair_text(s.x, s.y); }
    void operator()(const SquareStmt& s) { o << "square " << s.name << " = (" << s.x << "; " << s.u << ", " << s.v << ")"; }
    void operator()(const SquareMapStmt& s) {
        o << "squaremap " << s.name << " : " << s.source << " -> " << s.target << " = " << assignments_text(s.assignments);
    }
    void operator()(const FiltrationStmt& s) {
        o << "filtration " << s.name << " on " << s.base << " = ";
        if (s.skeletal) {
            o << "skeletal";
            return;
        }
        o << "[";
        for (std::size_t i = 0; i < s.steps.size(); ++i) o << (i ? ", " : "") << s.steps[i];
        o << "]";
    }
    void operator()(const CoeffStmt& s) { o << "coeff " << coefficient_text(s.modulus); }
    void operator()(const WindowStmt& s) { o << "window " << s.lo << ".." << s.hi; }
    void operator()(const FlavorStmt& s) {
        o << "flavor ";
        for (std::size_t i = 0; i < s.flavors.size(); ++i) o << (i ? "," : "") << s.flavors[i];
    }
    void operator()(const SequentStmt& s) { o << "sequent " << s.name << ": " << logic::to_string(s.sequent); }
    void operator()(const CommandStmt& c) {
        o << command_name(c.kind);
        switch (c.kind) {
        case CommandStmt::Kind::Cellular:
        case CommandStmt::Kind::Spectral:
            o << " " << c.complex << " " << c.filtration;
            if (c.coeff) o << " " << coefficient_text(*c.coeff);
            break;
        case CommandStmt::Kind::EndAlgebra:
            for (std::size_t i = 0; i < c.on_pairs.size(); ++i)
                o << (i ? ", " : " on ") << pair_text(c.on_pairs[i].first, c.on_pairs[i].second);
            break;
        default: break;
        }
    }
};

} // namespace

std::string print(const WorkbenchSpec& spec) {
    std::ostringstream o;
    for (const auto& s : spec.statements) {
        std::visit(Printer{o}, s);
        o << "\n";
    }
    return o.str();
}

} // namespace homwb::dsl
