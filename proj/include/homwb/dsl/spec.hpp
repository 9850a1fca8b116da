#pragma once

#include "homwb/error.hpp"
#include "homwb/logic/formula.hpp"
#include "homwb/simplicial.hpp"

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace homwb::dsl {

/// Source position; ignored by equality.
struct Loc {
    int line = 0;
    int column = 0;
    bool operator==(const Loc&) const { return true; }
};

/// InputError carrying a position.
class ParseError : public InputError {
public:
    ParseError(int line, int column, const std::string& what);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

using Assignments = std::vector<std::pair<std::string, std::string>>;

struct ComplexStmt {
    enum class Kind { Literal, Skeleton };
    std::string name;
    Kind kind = Kind::Literal;
    std::vector<Simplex> simplices;  ///< Literal
    std::string source;              ///< Skeleton
    int dim = 0;                     ///< Skeleton
    Loc loc;
    bool operator==(const ComplexStmt&) const = default;
};

struct PairStmt {
    std::string total, sub;
    Loc loc;
    bool operator==(const PairStmt&) const = default;
};

struct MapStmt {
    std::string name;
    std::string source_total, source_sub, target_total, target_sub;
    Assignments assignments;
    Loc loc;
    bool operator==(const MapStmt&) const = default;
};

/// name = second . first
struct ComposeStmt {
    std::string name, second, first;
    Loc loc;
    bool operator==(const ComposeStmt&) const = default;
};

struct TripleStmt {
    std::string name, x, y, z;
    Loc loc;
    bool operator==(const TripleStmt&) const = default;
};

struct CubeStmt {
    std::string name, source, target;
    Assignments assignments;
    Loc loc;
    bool operator==(const CubeStmt&) const = default;
};

struct PrismStmt {
    std::string name, x, y;
    Loc loc;
    bool operator==(const PrismStmt&) const = default;
};

struct SquareStmt {
    std::string name, x, u, v;
    Loc loc;
    bool operator==(const SquareStmt&) const = default;
};

struct SquareMapStmt {
    std::string name, source, target;
    Assignments assignments;
    Loc loc;
    bool operator==(const SquareMapStmt&) const = default;
};

struct FiltrationStmt {
    std::string name, base;
    bool skeletal = false;
    std::vector<std::string> steps;
    Loc loc;
    bool operator==(const FiltrationStmt&) const = default;
};

struct CoeffStmt {
    long modulus = 0;  ///< 0 for Z
    Loc loc;
    bool operator==(const CoeffStmt&) const = default;
};

struct WindowStmt {
    int lo = 0, hi = 0;
    Loc loc;
    bool operator==(const WindowStmt&) const = default;
};

struct FlavorStmt {
    std::vector<std::string> flavors;
    Loc loc;
    bool operator==(const FlavorStmt&) const = default;
};

struct SequentStmt {
    std::string name;
    logic::RegularSequent sequent;
    Loc loc;
    bool operator==(const SequentStmt&) const = default;
};

struct CommandStmt {
    enum class Kind { Validate, Cellular, Spectral, Sequent, EndAlgebra };
    Kind kind = Kind::Validate;
    std::string complex;     ///< cellular / spectral
    std::string filtration;  ///< name or "skeletal"
    std::optional<long> coeff;
    std::vector<std::pair<std::string, std::string>> on_pairs;  ///< end-algebra restriction
    Loc loc;
    bool operator==(const CommandStmt&) const = default;
};

using Statement = std::variant<ComplexStmt, PairStmt, MapStmt, ComposeStmt, TripleStmt, CubeStmt, PrismStmt,
                               SquareStmt, SquareMapStmt, FiltrationStmt, CoeffStmt, WindowStmt, FlavorStmt,
                               SequentStmt, CommandStmt>;

struct WorkbenchSpec {
    std::vector<Statement> statements;

    const CommandStmt& command() const;
    bool operator==(const WorkbenchSpec&) const = default;
};

std::string command_name(CommandStmt::Kind k);

/// Parses the workbench DSL: syntax, name resolution and the one-command
/// rule. Throws ParseError with the first error's line and column.
WorkbenchSpec parse(const std::string& text);

/// Canonical text; parse(print(s)) == s.
std::string print(const WorkbenchSpec& spec);

} // namespace homwb::dsl
