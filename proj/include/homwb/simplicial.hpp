#pragma once

#include "homwb/int_matrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace homwb {

/// Vertex labels sorted by plain string order; orientation follows that order.
using Simplex = std::vector<std::string>;
using VertexMap = std::map<std::string, std::string>;

std::string simplex_to_string(const Simplex& s);

/// Finite abstract simplicial complex, closed under faces.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Face closure of the given simplices. Labels must be distinct and every
    /// simplex may only use listed labels; both violations throw InputError.
    static SimplicialComplex from_maximal_simplices(const std::vector<std::string>& labels,
                                                    const std::vector<Simplex>& maximal);
    /// Vertices are taken from the simplices themselves.
    static SimplicialComplex from_simplices(const std::vector<Simplex>& maximal);

    const std::vector<std::string>& vertices() const { return vertices_; }
    int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
    bool empty() const { return by_dim_.empty(); }
    std::size_t size() const;
    std::size_t count(int d) const;
    const std::vector<Simplex>& simplices(int d) const;
    std::optional<std::size_t> index_of(const Simplex& s) const;
    bool contains(const Simplex& s) const { return index_of(s).has_value(); }
    bool has_vertex(const std::string& v) const;

    /// Maximal simplices in canonical order (by dimension, then lexicographic).
    std::vector<Simplex> maximal_simplices() const;

    bool is_subcomplex_of(const SimplicialComplex& other) const;
    SimplicialComplex skeleton(int p) const;

    /// Boundary C_d -> C_{d-1}; entry (face, simplex) is (-1)^i for the face
    /// omitting the i-th vertex.
    IntMatrix boundary(int d) const;

    bool operator==(const SimplicialComplex&) const = default;

private:
    std::vector<std::string> vertices_;
    std::vector<std::vector<Simplex>> by_dim_;
    std::vector<std::map<Simplex, std::size_t>> index_;

    void rebuild_index();
    friend SimplicialComplex complex_union(const SimplicialComplex&, const SimplicialComplex&);
    friend SimplicialComplex complex_intersection(const SimplicialComplex&, const SimplicialComplex&);
};

SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex complex_intersection(const SimplicialComplex& a, const SimplicialComplex& b);

/// Image of a simplex under a vertex map, as a sorted set of labels.
Simplex image_of(const VertexMap& f, const Simplex& s);

/// First simplex of `source` whose image is not a simplex of `target`.
std::optional<Simplex> simplicial_violation(const VertexMap& f, const SimplicialComplex& source,
                                            const SimplicialComplex& target);

VertexMap identity_map(const SimplicialComplex& x);
/// g o f on the vertices of f's domain.
VertexMap compose_maps(const VertexMap& g, const VertexMap& f);

/// Y subcomplex of X.
struct SimpPair {
    SimplicialComplex total;
    SimplicialComplex sub;

    /// Throws InputError when sub is not a subcomplex of total.
    static SimpPair make(SimplicialComplex total, SimplicialComplex sub);
    /// Basis of the relative chains in degree d: simplices of total not in sub.
    std::vector<Simplex> relative_basis(int d) const;
    bool operator==(const SimpPair&) const = default;
};

/// Chain map C_d(X,Y) -> C_d(X',Y') induced by a vertex map, in the relative
/// bases of the two pairs.
IntMatrix induced_chain_map(const VertexMap& f, const SimpPair& source, const SimpPair& target, int d);

/// Relative boundary C_d(X,Y) -> C_{d-1}(X,Y).
IntMatrix relative_boundary(const SimpPair& pair, int d);

std::string prism_label(const std::string& v, int end);

/// Staircase triangulation of X x [0,1] with its two end inclusions and the
/// projection back to X.
struct Prism {
    SimplicialComplex complex;
    VertexMap bottom;   ///< v |-> (v,0)
    VertexMap top;      ///< v |-> (v,1)
    VertexMap project;  ///< (v,t) |-> v
};
Prism prism(const SimplicialComplex& x);

/// U n V -> U, V -> U u V.
struct DistinguishedSquare {
    SimplicialComplex intersection;
    SimplicialComplex u;
    SimplicialComplex v;
    SimplicialComplex union_;
};
/// Throws InputError unless U and V are subcomplexes of X.
DistinguishedSquare subcomplex_union(const SimplicialComplex& x, const SimplicialComplex& u,
                                     const SimplicialComplex& v);

/// X_0 <= X_1 <= ... <= X_d = X with dim X_p <= p; X_{-1} is empty.
class Filtration {
public:
    Filtration() = default;
    /// Throws InputError on a non-increasing chain, a dimensional-type
    /// violation, or a top step different from the base.
    Filtration(SimplicialComplex base, std::vector<SimplicialComplex> steps);
    static Filtration skeletal(const SimplicialComplex& base);

    const SimplicialComplex& base() const { return base_; }
    int length() const { return static_cast<int>(steps_.size()) - 1; }
    /// X_p; empty for p < 0, X for p > length().
    SimplicialComplex step(int p) const;
    const std::vector<SimplicialComplex>& steps() const { return steps_; }

private:
    SimplicialComplex base_;
    std::vector<SimplicialComplex> steps_;
};

} // namespace homwb
