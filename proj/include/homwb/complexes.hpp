#pragma once

#include "homwb/group.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace homwb {

/// Bounded chain complex C_{n_min} <- ... <- C_{n_max}. Degrees outside the
/// window are zero groups.
class ChainComplex {
public:
    ChainComplex() = default;
    /// differentials[i] is d_{n_min + i + 1} : C_{n_min+i+1} -> C_{n_min+i}.
    ChainComplex(int n_min, std::vector<FgAbGroup> groups, std::vector<GroupHom> differentials);

    static ChainComplex zero(int n_min, int n_max);

    int n_min() const { return n_min_; }
    int n_max() const { return n_min_ + static_cast<int>(groups_.size()) - 1; }
    bool in_window(int n) const { return n >= n_min() && n <= n_max(); }

    /// Zero group outside the window.
    FgAbGroup group(int n) const;
    /// d_n : C_n -> C_{n-1}; zero map when either end lies outside the window.
    GroupHom differential(int n) const;

    ChainComplex shifted(int k) const;

private:
    int n_min_ = 0;
    std::vector<FgAbGroup> groups_;
    std::vector<GroupHom> differentials_;
};

/// ker d_n / im d_{n+1} with access to cycle representatives.
Subquotient homology_subquotient(const ChainComplex& c, int n);

/// Throws StructuralError when d_n o d_{n+1} != 0.
FgAbGroup homology(const ChainComplex& c, int n);

struct ComplexDefect {
    int degree = 0;          ///< n such that d_{n-1} o d_n != 0
    std::size_t generator = 0;  ///< generator of C_n witnessing it
    bool operator==(const ComplexDefect&) const = default;
};

/// Every degree where d^2 != 0; empty means the complex is valid.
std::vector<ComplexDefect> verify_complex(const ChainComplex& c);

/// Map on homology induced by a chain-level matrix between two subquotients.
GroupHom induced_map(const Subquotient& source, const Subquotient& target, const IntMatrix& chain_map);

/// Finite double complex. Horizontal maps go (p,q) -> (p-1,q), vertical maps
/// (p,q) -> (p,q-1); the squares commute and the total differential is
/// h + (-1)^p v.
class Bicomplex {
public:
    Bicomplex(int p_min, int p_max, int q_min, int q_max);

    int p_min() const { return p_min_; }
    int p_max() const { return p_max_; }
    int q_min() const { return q_min_; }
    int q_max() const { return q_max_; }

    void set_group(int p, int q, FgAbGroup g);
    void set_horizontal(int p, int q, GroupHom h);
    void set_vertical(int p, int q, GroupHom v);

    FgAbGroup group(int p, int q) const;
    GroupHom horizontal(int p, int q) const;
    GroupHom vertical(int p, int q) const;

private:
    int p_min_, p_max_, q_min_, q_max_;
    std::map<std::pair<int, int>, FgAbGroup> groups_;
    std::map<std::pair<int, int>, GroupHom> horizontal_;
    std::map<std::pair<int, int>, GroupHom> vertical_;
};

/// Tot_n = sum over p+q = n of E_{p,q}, ordered by increasing p.
/// Throws StructuralError when the maps do not fit the grid or d^2 != 0.
ChainComplex total_complex(const Bicomplex& b);

/// Position of E_{p,q} inside Tot_{p+q}: offset of its first generator.
std::size_t total_offset(const Bicomplex& b, int p, int q);

/// groups[0] -> groups[1] -> ... with maps[i] : groups[i] -> groups[i+1].
struct LongSequence {
    std::vector<FgAbGroup> groups;
    std::vector<GroupHom> maps;
    std::vector<std::string> labels;  ///< optional node names for reports
};

struct NodeExactness {
    std::size_t node = 0;
    std::string label;
    ExactnessWitness verdict;
};

struct LongExactReport {
    bool exact = true;
    std::vector<NodeExactness> nodes;
};

/// Exactness at every interior node. Throws InputError on composability mismatch.
LongExactReport check_long_exact(const LongSequence& seq);

} // namespace homwb
