#pragma once

#include "homwb/complexes.hpp"
#include "homwb/diagram.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace homwb {

/// Z (modulus 0) or Z/m with m >= 2.
class Coefficients {
public:
    Coefficients() = default;
    static Coefficients integers() { return {}; }
    /// Throws InputError for m < 2.
    static Coefficients modulo(long m);

    const Integer& modulus() const { return modulus_; }
    bool is_finite() const { return modulus_ != 0; }
    std::string to_string() const;
    bool operator==(const Coefficients&) const = default;

private:
    Integer modulus_ = 0;
};

struct DegreeWindow {
    int lo = 0;
    int hi = 0;

    bool contains(int n) const { return n >= lo && n <= hi; }
    bool operator==(const DegreeWindow&) const = default;
};

/// Relative simplicial chains C_*(X,Y) with coefficients, degrees [lo, hi].
ChainComplex relative_chain_complex(const SimpPair& pair, const Coefficients& coeffs, int lo, int hi);

/// H_n(X,Y) computed directly (no diagram).
FgAbGroup relative_homology(const SimpPair& pair, const Coefficients& coeffs, int n);

/// Relative simplicial homology evaluated on a pair diagram: groups for every
/// (node, degree), induced maps for every (edge, degree), connecting maps for
/// every triple and every distinguished square.
class HomologyModel {
public:
    /// Throws InputError for an empty window.
    static HomologyModel simplicial(PairDiagram diagram, Coefficients coeffs, DegreeWindow window);
    /// Window [0, max dim + 1].
    static DegreeWindow default_window(const PairDiagram& diagram);

    const PairDiagram& diagram() const { return diagram_; }
    const Coefficients& coefficients() const { return coeffs_; }
    const DegreeWindow& window() const { return window_; }

    /// True when connecting maps out of degree n exist (n and n-1 in window).
    bool has_connecting(int n) const { return window_.contains(n) && window_.contains(n - 1); }

    const FgAbGroup& group(std::size_t node, int n) const;
    /// Cycle representatives / coordinates for H_n of the node's pair.
    const Subquotient& homology_data(std::size_t node, int n) const;
    const GroupHom& map(std::size_t edge, int n) const;
    /// H_n(X,Y) -> H_{n-1}(Y,Z) of a triple.
    const GroupHom& connecting(std::size_t triple, int n) const;
    /// H_n(U u V) -> H_{n-1}(U n V) of a distinguished square.
    const GroupHom& mv_connecting(std::size_t square, int n) const;

    /// Replace an induced map (fault injection in tests and checks).
    void override_map(std::size_t edge, int n, GroupHom h);
    void override_connecting(std::size_t triple, int n, GroupHom h);

    /// H_hi(Y,Z) -> H_hi(X,Z) -> H_hi(X,Y) -> H_{hi-1}(Y,Z) -> ... -> H_lo(X,Y).
    LongSequence triple_sequence(std::size_t triple) const;
    /// H_hi(B) -> H_hi(A)+H_hi(C) -> H_hi(D) -> H_{hi-1}(B) -> ... -> H_lo(D).
    LongSequence mayer_vietoris_sequence(std::size_t square) const;
    /// (alpha, gamma) : H_n(B) -> H_n(A) + H_n(C)
    GroupHom mv_split(std::size_t square, int n) const;
    /// beta - epsilon : H_n(A) + H_n(C) -> H_n(D)
    GroupHom mv_difference(std::size_t square, int n) const;

    std::string sort_label(std::size_t node, int n) const;

private:
    PairDiagram diagram_;
    Coefficients coeffs_;
    DegreeWindow window_;
    std::map<std::pair<std::size_t, int>, Subquotient> homology_;
    std::map<std::pair<std::size_t, int>, GroupHom> maps_;
    std::map<std::pair<std::size_t, int>, GroupHom> connecting_;
    std::map<std::pair<std::size_t, int>, GroupHom> mv_connecting_;
};

/// The connecting homomorphism of a triple, recomputed on the chain level
/// from scratch (lift, boundary, restrict). Throws InputError when n or n-1
/// is outside the model's window.
GroupHom connecting_hom(const HomologyModel& model, std::size_t triple, int n);

} // namespace homwb
