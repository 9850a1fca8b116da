#pragma once

#include "homwb/simplicial.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace homwb {

/// Name reserved for the empty complex.
inline constexpr const char* kEmptyName = "empty";

enum class MorphismKind { Square, Identity, Composite, BoxTimes, BoxPlus, Partial };

std::string kind_name(MorphismKind k);

/// A node of the finite fragment of the category of pairs: (X, Y) with Y a
/// subcomplex of X, both referenced by complex name.
struct PairNode {
    std::string total;
    std::string sub;
    SimpPair pair;

    std::string name() const { return "(" + total + "," + sub + ")"; }
};

/// A commutative square (X,Y) -> (X',Y') given by a vertex map on X.
struct PairMorphism {
    std::string name;
    std::size_t source = 0;
    std::size_t target = 0;
    VertexMap vertex_map;
    MorphismKind kind = MorphismKind::Square;
};

/// second o first == composite
struct CompositeDecl {
    std::size_t first = 0;
    std::size_t second = 0;
    std::size_t composite = 0;
};

/// Z <= Y <= X with the factorization (Y,Z) -bt-> (X,Z) -bp-> (X,Y) of the
/// boundary square (Y,Z) -> (X,Y).
struct TripleDecl {
    std::string name;
    std::string x, y, z;
    std::size_t node_yz = 0, node_xz = 0, node_xy = 0;
    std::size_t box_times = 0, box_plus = 0, partial = 0;
};

/// A map of triples: square (X,Y) -> (X',Y') and diamond (Y,Z) -> (Y',Z').
struct CubeDecl {
    std::string name;
    std::size_t triple = 0;
    std::size_t target_triple = 0;
    std::size_t square = 0;
    std::size_t diamond = 0;
};

/// (X,Y) with its cylinder (X x I, Y x I), the two end inclusions and the
/// projection back.
struct PrismDecl {
    std::string name;
    std::size_t base = 0;
    std::size_t cylinder = 0;
    std::size_t bottom = 0;
    std::size_t top = 0;
    std::size_t project = 0;
};

/// Distinguished square B -> A, B -> C, A -> D, C -> D with B = U n V,
/// A = U, C = V, D = U u V; all nodes are absolute pairs (K, empty).
struct SquareDecl {
    std::string name;
    std::size_t node_b = 0, node_a = 0, node_c = 0, node_d = 0;
    std::size_t alpha = 0;    ///< B -> A
    std::size_t gamma = 0;    ///< B -> C
    std::size_t beta = 0;     ///< A -> D
    std::size_t epsilon = 0;  ///< C -> D
};

/// Morphism of distinguished squares induced by one vertex map.
struct SquareMapDecl {
    std::string name;
    std::size_t source = 0;
    std::size_t target = 0;
    std::size_t map_b = 0, map_a = 0, map_c = 0, map_d = 0;
};

/// Finite fragment of the category of pairs.
class PairDiagram {
public:
    const std::map<std::string, SimplicialComplex>& complexes() const { return complexes_; }
    const SimplicialComplex& complex(const std::string& name) const;
    bool has_complex(const std::string& name) const;

    const std::vector<PairNode>& nodes() const { return nodes_; }
    const std::vector<PairMorphism>& edges() const { return edges_; }
    const std::vector<CompositeDecl>& composites() const { return composites_; }
    const std::vector<TripleDecl>& triples() const { return triples_; }
    const std::vector<CubeDecl>& cubes() const { return cubes_; }
    const std::vector<PrismDecl>& prisms() const { return prisms_; }
    const std::vector<SquareDecl>& squares() const { return squares_; }
    const std::vector<SquareMapDecl>& square_maps() const { return square_maps_; }

    std::optional<std::size_t> find_node(const std::string& total, const std::string& sub) const;
    std::optional<std::size_t> find_edge(const std::string& name) const;
    std::size_t identity_edge(std::size_t node) const;
    std::optional<std::size_t> find_triple(const std::string& x, const std::string& y, const std::string& z) const;
    int max_dim() const;

    /// Structural problems (missing factorizations, inconsistent composites,
    /// non-simplicial maps); empty for a well-formed diagram.
    std::vector<std::string> verify() const;

private:
    friend class DiagramBuilder;
    std::map<std::string, SimplicialComplex> complexes_;
    std::vector<PairNode> nodes_;
    std::vector<PairMorphism> edges_;
    std::vector<CompositeDecl> composites_;
    std::vector<TripleDecl> triples_;
    std::vector<CubeDecl> cubes_;
    std::vector<PrismDecl> prisms_;
    std::vector<SquareDecl> squares_;
    std::vector<SquareMapDecl> square_maps_;
    std::map<std::size_t, std::size_t> identity_of_;
};

/// Incremental construction with validation at every step. All errors are
/// InputError naming the offending object or simplex.
class DiagramBuilder {
public:
    DiagramBuilder();

    void add_complex(const std::string& name, SimplicialComplex k);
    std::size_t add_pair(const std::string& total, const std::string& sub);
    std::size_t add_map(const std::string& name, std::size_t source, std::size_t target, const VertexMap& f,
                        MorphismKind kind = MorphismKind::Square);
    /// Declares `composite` == second o first (vertex maps must agree).
    std::size_t add_composite(const std::string& name, std::size_t first, std::size_t second);
    std::size_t add_triple(const std::string& name, const std::string& x, const std::string& y, const std::string& z);
    /// f maps the triple's X into the target triple's X, Y into Y', Z into Z'.
    std::size_t add_cube(const std::string& name, std::size_t triple, std::size_t target_triple, const VertexMap& f);
    /// Registers `name` as the cylinder complexes "<X>.I", "<Y>.I".
    std::size_t add_prism(const std::string& name, const std::string& x, const std::string& y);
    /// Registers "<name>.cap" and "<name>.cup" and the four inclusions.
    std::size_t add_square(const std::string& name, const std::string& x, const std::string& u, const std::string& v);
    std::size_t add_square_map(const std::string& name, std::size_t source, std::size_t target, const VertexMap& f);
    /// Pairs (X_p, X_{p-1}), (X_p, empty) and the triples X_{p-2} <= X_{p-1} <= X_p,
    /// empty <= X_{p-1} <= X_p and empty <= X_p <= X of a filtration,
    /// registering the steps as "<prefix>.<p>".
    void add_filtration(const std::string& prefix, const std::string& base, const Filtration& f);

    const PairDiagram& diagram() const { return diagram_; }
    PairDiagram build() const { return diagram_; }

private:
    PairDiagram diagram_;
    std::size_t add_edge(PairMorphism e);
    std::string unique_edge_name(const std::string& base) const;
};

/// Name of the complex registered for step p of a filtration.
std::string filtration_step_name(const std::string& prefix, int p);

} // namespace homwb
