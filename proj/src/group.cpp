#include "homwb/group.hpp"

#include "homwb/error.hpp"

#include <sstream>

namespace homwb {

std::string IsoInvariants::to_string() const {
    std::ostringstream os;
    os << "(" << rank << ", [";
    for (std::size_t i = 0; i < torsion.size(); ++i) os << (i ? "," : "") << torsion[i].get_str();
    os << "])";
    return os.str();
}

FgAbGroup::FgAbGroup(std::size_t ngens, IntMatrix relations)
    : ngens_(ngens), relations_(std::move(relations)) {
    if (relations_.rows() == 0 && relations_.cols() != ngens_) relations_ = IntMatrix(0, ngens_);
    if (relations_.cols() != ngens_) throw InputError("FgAbGroup: relation matrix has wrong number of columns");
}

FgAbGroup FgAbGroup::free(std::size_t rank) { return {rank, IntMatrix(0, rank)}; }

FgAbGroup FgAbGroup::cyclic_power(std::size_t rank, const Integer& m) {
    if (m == 0) return free(rank);
    return {rank, IntMatrix::identity(rank).scaled(m)};
}

FgAbGroup FgAbGroup::from_invariants(const IsoInvariants& inv) {
    const std::size_t n = inv.torsion.size() + inv.rank;
    return {n, IntMatrix::diagonal(inv.torsion.size(), n, inv.torsion)};
}

IsoInvariants FgAbGroup::invariants() const {
    IsoInvariants inv;
    if (relations_.rows() == 0) {
        inv.rank = ngens_;
        return inv;
    }
    const SmithDecomposition snf = smith(relations_);
    for (std::size_t i = 0; i < snf.rank; ++i)
        if (snf.d(i, i) > 1) inv.torsion.push_back(snf.d(i, i));
    inv.rank = ngens_ - snf.rank;
    return inv;
}

bool FgAbGroup::is_canonical() const {
    const std::size_t k = relations_.rows();
    if (k > ngens_) return false;
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < ngens_; ++c) {
            const Integer& x = relations_(r, c);
            if (r == c) {
                if (x < 2) return false;
                if (r > 0 && !mpz_divisible_p(x.get_mpz_t(), relations_(r - 1, r - 1).get_mpz_t())) return false;
            } else if (x != 0) {
                return false;
            }
        }
    return true;
}

bool FgAbGroup::is_zero_element(const IntVector& v) const {
    if (v.size() != ngens_) throw InputError("FgAbGroup: element has wrong length");
    if (is_canonical()) {
        for (std::size_t i = 0; i < ngens_; ++i) {
            if (i < relations_.rows()) {
                if (!mpz_divisible_p(v[i].get_mpz_t(), relations_(i, i).get_mpz_t())) return false;
            } else if (v[i] != 0) {
                return false;
            }
        }
        return true;
    }
    return solve(relation_lattice(), v).has_value();
}

bool FgAbGroup::elements_equal(const IntVector& a, const IntVector& b) const {
    IntVector diff(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - b[i];
    return is_zero_element(diff);
}

IntVector FgAbGroup::normalize(const IntVector& v) const {
    IntVector out = v;
    for (std::size_t i = 0; i < relations_.rows() && i < out.size(); ++i)
        mpz_fdiv_r(out[i].get_mpz_t(), out[i].get_mpz_t(), relations_(i, i).get_mpz_t());
    return out;
}

std::optional<std::size_t> FgAbGroup::order() const {
    if (!is_canonical()) throw InputError("FgAbGroup::order: presentation is not canonical");
    if (relations_.rows() < ngens_) return std::nullopt;
    std::size_t n = 1;
    for (std::size_t i = 0; i < ngens_; ++i) n *= relations_(i, i).get_ui();
    return n;
}

IntVector FgAbGroup::element_at(std::size_t index) const {
    IntVector v(ngens_);
    for (std::size_t i = 0; i < ngens_; ++i) {
        const std::size_t t = relations_(i, i).get_ui();
        v[i] = static_cast<unsigned long>(index % t);
        index /= t;
    }
    return v;
}

std::size_t FgAbGroup::index_of(const IntVector& normalized) const {
    std::size_t index = 0;
    for (std::size_t i = ngens_; i-- > 0;) index = index * relations_(i, i).get_ui() + normalized[i].get_ui();
    return index;
}

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
    return {a.ngens() + b.ngens(), direct_sum(a.relations(), b.relations())};
}

GroupHom::GroupHom(FgAbGroup source, FgAbGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (matrix_.rows() == 0 && matrix_.cols() == 0) matrix_ = IntMatrix(target_.ngens(), source_.ngens());
    if (matrix_.rows() != target_.ngens() || matrix_.cols() != source_.ngens())
        throw InputError("GroupHom: matrix shape does not match source/target generators");
}

GroupHom GroupHom::identity(const FgAbGroup& g) { return {g, g, IntMatrix::identity(g.ngens())}; }

GroupHom GroupHom::zero(const FgAbGroup& source, const FgAbGroup& target) {
    return {source, target, IntMatrix(target.ngens(), source.ngens())};
}

std::optional<std::size_t> GroupHom::well_definedness_violation() const {
    const IntMatrix& rel = source_.relations();
    for (std::size_t r = 0; r < rel.rows(); ++r)
        if (!target_.is_zero_element(matrix_ * rel.row(r))) return r;
    return std::nullopt;
}

void GroupHom::require_well_defined() const {
    if (auto r = well_definedness_violation())
        throw StructuralError("ill-defined homomorphism: source relation " + std::to_string(*r) +
                              " is not mapped into the target relations");
}

bool GroupHom::is_zero() const {
    for (std::size_t c = 0; c < matrix_.cols(); ++c)
        if (!target_.is_zero_element(matrix_.column(c))) return false;
    return true;
}

GroupHom GroupHom::negated() const { return {source_, target_, -matrix_}; }

GroupHom compose(const GroupHom& g, const GroupHom& f) {
    if (!(f.target() == g.source())) throw InputError("compose: target of f differs from source of g");
    return {f.source(), g.target(), g.matrix() * f.matrix()};
}

GroupHom add(const GroupHom& f, const GroupHom& g) {
    if (!(f.source() == g.source()) || !(f.target() == g.target())) throw InputError("add: homomorphisms not parallel");
    return {f.source(), f.target(), f.matrix() + g.matrix()};
}

bool equal_as_maps(const GroupHom& f, const GroupHom& g) {
    if (!(f.source() == g.source()) || !(f.target() == g.target())) return false;
    const IntMatrix diff = f.matrix() - g.matrix();
    for (std::size_t c = 0; c < diff.cols(); ++c)
        if (!f.target().is_zero_element(diff.column(c))) return false;
    return true;
}

GroupHom hom_hcat(const GroupHom& f, const GroupHom& g) {
    if (!(f.target() == g.target())) throw InputError("hom_hcat: targets differ");
    return {direct_sum(f.source(), g.source()), f.target(), f.matrix().hcat(g.matrix())};
}

GroupHom hom_vcat(const GroupHom& f, const GroupHom& g) {
    if (!(f.source() == g.source())) throw InputError("hom_vcat: sources differ");
    return {f.source(), direct_sum(f.target(), g.target()), f.matrix().vcat(g.matrix())};
}

bool is_isomorphism(const GroupHom& f) {
    return hom_kernel(f).group.is_trivial() && hom_cokernel(f).group.is_trivial();
}

Subquotient::Subquotient(const IntMatrix& numerator, const IntMatrix& denominator) {
    const std::size_t k = numerator.rows();
    basis_ = column_basis(numerator);
    basis_snf_ = smith(basis_);
    const std::size_t r = basis_.cols();
    IntMatrix coeffs(r, denominator.cols());
    for (std::size_t j = 0; j < denominator.cols(); ++j) {
        auto c = solve(basis_snf_, denominator.column(j));
        if (!c) throw StructuralError("subquotient: denominator is not contained in numerator");
        coeffs.set_column(j, *c);
    }
    const SmithDecomposition snf = smith(coeffs);
    std::vector<std::size_t> kept;
    IntVector torsion;
    for (std::size_t i = 0; i < snf.rank; ++i)
        if (snf.d(i, i) > 1) {
            kept.push_back(i);
            torsion.push_back(snf.d(i, i));
        }
    for (std::size_t i = snf.rank; i < r; ++i) kept.push_back(i);
    group_ = FgAbGroup(kept.size(), IntMatrix::diagonal(torsion.size(), kept.size(), torsion));
    to_canon_ = snf.u.select_rows(kept);
    reps_ = basis_ * snf.u_inv.select_columns(kept);
    if (reps_.rows() != k) reps_ = IntMatrix(k, kept.size());
    // Sign normalization: first nonzero entry of each representative positive.
    for (std::size_t j = 0; j < reps_.cols(); ++j) {
        for (std::size_t i = 0; i < k; ++i) {
            if (reps_(i, j) == 0) continue;
            if (reps_(i, j) < 0) {
                reps_.negate_col(j);
                to_canon_.negate_row(j);
            }
            break;
        }
    }
}

bool Subquotient::contains(const IntVector& v) const { return solve(basis_snf_, v).has_value(); }

IntVector Subquotient::coordinates(const IntVector& v) const {
    auto c = solve(basis_snf_, v);
    if (!c) throw StructuralError("subquotient: vector is not in the numerator lattice");
    return group_.normalize(to_canon_ * *c);
}

CanonicalForm canonical_form(const FgAbGroup& g) {
    const Subquotient sq(IntMatrix::identity(g.ngens()), g.relation_lattice());
    IntMatrix to(sq.group().ngens(), g.ngens());
    for (std::size_t i = 0; i < g.ngens(); ++i) {
        IntVector e(g.ngens());
        e[i] = 1;
        to.set_column(i, sq.coordinates(e));
    }
    return {sq.group(), GroupHom(g, sq.group(), to), GroupHom(sq.group(), g, sq.representatives())};
}

GroupWithMap hom_kernel(const GroupHom& f) {
    f.require_well_defined();
    const IntMatrix pre = preimage(f.matrix(), f.target().relation_lattice());
    const Subquotient sq(pre, f.source().relation_lattice());
    return {sq.group(), GroupHom(sq.group(), f.source(), sq.representatives())};
}

GroupWithMap hom_image(const GroupHom& f) {
    f.require_well_defined();
    const IntMatrix pre = preimage(f.matrix(), f.target().relation_lattice());
    const Subquotient sq(IntMatrix::identity(f.source().ngens()), pre);
    return {sq.group(), GroupHom(sq.group(), f.target(), f.matrix() * sq.representatives())};
}

GroupWithMap hom_cokernel(const GroupHom& f) {
    f.require_well_defined();
    const std::size_t m = f.target().ngens();
    const Subquotient sq(IntMatrix::identity(m), f.target().relation_lattice().hcat(f.matrix()));
    IntMatrix proj(sq.group().ngens(), m);
    for (std::size_t i = 0; i < m; ++i) {
        IntVector e(m);
        e[i] = 1;
        proj.set_column(i, sq.coordinates(e));
    }
    return {sq.group(), GroupHom(f.target(), sq.group(), proj)};
}

ExactnessWitness is_exact_at(const GroupHom& f, const GroupHom& g) {
    if (!(f.target() == g.source())) throw InputError("is_exact_at: target of f differs from source of g");
    f.require_well_defined();
    g.require_well_defined();
    for (std::size_t i = 0; i < f.source().ngens(); ++i) {
        const IntVector y = f.matrix().column(i);
        if (!g.target().is_zero_element(g.apply(y)))
            return {false, y, "image not contained in kernel (composite is nonzero on generator " + std::to_string(i) + ")"};
    }
    return kernel_contained_in_image(f, g);
}

ExactnessWitness kernel_contained_in_image(const GroupHom& f, const GroupHom& g) {
    if (!(f.target() == g.source()))
        throw InputError("kernel_contained_in_image: target of f differs from source of g");
    const GroupWithMap ker = hom_kernel(g);
    const SmithDecomposition span = smith(f.matrix().hcat(f.target().relation_lattice()));
    for (std::size_t j = 0; j < ker.map.matrix().cols(); ++j) {
        const IntVector k = ker.map.matrix().column(j);
        if (!solve(span, k)) return {false, k, "kernel not contained in image"};
    }
    return {true, std::nullopt, ""};
}

} // namespace homwb
