#pragma once

#include "homwb/complexes.hpp"
#include "homwb/model.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace homwb {

/// Chain complex C with an increasing filtration F_0 <= ... <= F_P = C given
/// by sublattices of the chain groups (coefficient relations excluded).
class FilteredChainComplex {
public:
    FilteredChainComplex(ChainComplex chains, int length, std::map<std::pair<int, int>, IntMatrix> steps);
    /// Simplicial chains of the filtered complex; F_p spanned by simplices of X_p.
    static FilteredChainComplex simplicial(const Filtration& f, const Coefficients& coeffs);

    const ChainComplex& chains() const { return chains_; }
    int length() const { return length_; }
    /// Generators of F_p C_n: none for p < 0, all of C_n for p >= length.
    IntMatrix step(int p, int n) const;

private:
    ChainComplex chains_;
    int length_ = 0;
    std::map<std::pair<int, int>, IntMatrix> steps_;
};

/// E^r_{p,q} on a finite grid with d^r : (p,q) -> (p-r, q+r-1).
class SpectralPage {
public:
    SpectralPage() = default;
    SpectralPage(int r, int p_min, int p_max, int n_min, int n_max);

    int r() const { return r_; }
    int p_min() const { return p_min_; }
    int p_max() const { return p_max_; }
    /// Total degrees n = p + q covered by the grid.
    int n_min() const { return n_min_; }
    int n_max() const { return n_max_; }

    void set_group(int p, int q, FgAbGroup g);
    void set_differential(int p, int q, GroupHom d);
    /// Trivial group outside the grid.
    FgAbGroup group(int p, int q) const;
    /// Zero map when none was set.
    GroupHom differential(int p, int q) const;
    /// Cells (p, q) in increasing p, then q.
    std::vector<std::pair<int, int>> cells() const;
    bool differentials_vanish() const;

private:
    int r_ = 1;
    int p_min_ = 0, p_max_ = 0, n_min_ = 0, n_max_ = 0;
    std::map<std::pair<int, int>, FgAbGroup> groups_;
    std::map<std::pair<int, int>, GroupHom> differentials_;
};

/// N_p H_n(X) = im(H_n(X_p) -> H_n(X)) as generator columns in the
/// canonical coordinates of H_n(X).
struct NiveauFiltration {
    int n = 0;
    FgAbGroup total;
    std::vector<IntMatrix> steps;  ///< p = 0 .. P

    /// N_p / N_{p-1}.
    FgAbGroup graded(int p) const;
};

struct SpectralSequence {
    std::vector<SpectralPage> pages;  ///< E^1 ... E^stable
    int stable_r = 1;
    /// E^infinity (equal to the last page).
    const SpectralPage& limit() const { return pages.back(); }
    std::map<int, NiveauFiltration> niveau;  ///< by degree n
};

/// Pages computed from the filtered complex by the lattice formulas
/// Z^r_p = {x in F_p : dx in F_{p-r}}, E^r_p = Z^r_p / (Z^{r-1}_{p-1} + d Z^{r-1}_{p+r-1}),
/// until all later differentials vanish; niveau filtration of H_n(C).
SpectralSequence run_pages(const FilteredChainComplex& fc);

struct ConvergenceCell {
    int n = 0;
    int p = 0;
    IsoInvariants limit;
    IsoInvariants graded;
    bool matches = true;
};
/// E^infinity_{p, n-p} against N_p H_n / N_{p-1} H_n for every n and p.
std::vector<ConvergenceCell> check_convergence(const SpectralSequence& ss);

/// A filtration registered in a model's diagram under `prefix`
/// (see DiagramBuilder::add_filtration).
struct FiltrationRef {
    std::string prefix;
    std::string base;
    int length = 0;

    std::string step_name(int p) const;
};

/// E^1_{p,q} = H_{p+q}(X_p, X_{p-1}) with d^1 the composite of the
/// connecting map into H_{p+q-1}(X_{p-1}) and the projection to
/// H_{p+q-1}(X_{p-1}, X_{p-2}). Throws InputError naming a missing pair.
SpectralPage e1_page(const HomologyModel& model, const FiltrationRef& f);

struct CellularComplex {
    ChainComplex complex;
    Bicomplex e1;
};
/// Tot of E^1 with zero vertical differentials.
CellularComplex cellular_complex(const HomologyModel& model, const FiltrationRef& f);

struct CellularityVerdict {
    bool cellular = true;
    /// Cells with q != 0 and nonzero E^1.
    std::vector<std::pair<int, int>> offending;
    /// d^r vanishes for r >= 2 (all rows but q = 0 are zero).
    bool degenerates_at_e2 = true;
};
CellularityVerdict check_cellularity(const SpectralPage& e1);

struct RecoveryVerdict {
    int n = 0;
    IsoInvariants cellular;
    IsoInvariants direct;
    bool invariants_match = true;
    /// The cycle-level map H_n(C^H) -> H_n(X) is well defined and bijective.
    bool comparison_iso = true;
    std::string detail;
};
/// Compares H_n(C^H(X)) with H_n(X). Throws InputError when the E^1 page is
/// not cellular.
RecoveryVerdict edge_recovery(const HomologyModel& model, const FiltrationRef& f, int n);

/// N_p H_n(X) read off the model maps H_n(X_p) -> H_n(X).
NiveauFiltration model_niveau(const HomologyModel& model, const FiltrationRef& f, int n);

} // namespace homwb
