#include "homwb/smith.hpp"

#include <algorithm>

namespace homwb {

namespace {

// Row/column operations applied simultaneously to the working matrix and the
// transforms, so that u * a * v == work holds after every step.
struct SmithState {
    IntMatrix work;
    IntMatrix u, u_inv, v, v_inv;

    explicit SmithState(const IntMatrix& a)
        : work(a),
          u(IntMatrix::identity(a.rows())),
          u_inv(IntMatrix::identity(a.rows())),
          v(IntMatrix::identity(a.cols())),
          v_inv(IntMatrix::identity(a.cols())) {}

    void swap_rows(std::size_t a, std::size_t b) {
        work.swap_rows(a, b);
        u.swap_rows(a, b);
        u_inv.swap_cols(a, b);
    }
    void swap_cols(std::size_t a, std::size_t b) {
        work.swap_cols(a, b);
        v.swap_cols(a, b);
        v_inv.swap_rows(a, b);
    }
    void add_row(std::size_t dst, std::size_t src, const Integer& k) {
        work.add_row_multiple(dst, src, k);
        u.add_row_multiple(dst, src, k);
        u_inv.add_col_multiple(src, dst, -k);
    }
    void add_col(std::size_t dst, std::size_t src, const Integer& k) {
        work.add_col_multiple(dst, src, k);
        v.add_col_multiple(dst, src, k);
        v_inv.add_row_multiple(src, dst, -k);
    }
    void negate_row(std::size_t r) {
        work.negate_row(r);
        u.negate_row(r);
        u_inv.negate_col(r);
    }
};

// Quotient rounded to nearest, which keeps remainders at most |p|/2.
Integer nearest_quotient(const Integer& a, const Integer& p) {
    Integer q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    Integer twice = 2 * abs(r);
    // floor remainder shares the sign of p, so stepping q up always shrinks it
    if (twice > abs(p)) q += 1;
    return q;
}

bool find_min_pivot(const IntMatrix& m, std::size_t t, std::size_t& pr, std::size_t& pc) {
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < m.rows(); ++i)
        for (std::size_t j = t; j < m.cols(); ++j) {
            const Integer& x = m(i, j);
            if (x == 0) continue;
            if (!found || abs(x) < best) {
                best = abs(x);
                pr = i;
                pc = j;
                found = true;
                if (best == 1) return true;
            }
        }
    return found;
}

} // namespace

IntVector SmithDecomposition::diagonal() const {
    IntVector out;
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
    return out;
}

SmithDecomposition smith(const IntMatrix& a) {
    SmithState s(a);
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
        std::size_t pr = t, pc = t;
        if (!find_min_pivot(s.work, t, pr, pc)) break;
        s.swap_rows(t, pr);
        s.swap_cols(t, pc);
        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (s.work(i, t) == 0) continue;
                s.add_row(i, t, -nearest_quotient(s.work(i, t), s.work(t, t)));
                if (s.work(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (s.work(t, j) == 0) continue;
                s.add_col(j, t, -nearest_quotient(s.work(t, j), s.work(t, t)));
                if (s.work(t, j) != 0) dirty = true;
            }
            if (dirty) {
                // A remainder survived; it is smaller than the pivot, move it in.
                std::size_t br = t, bc = t;
                Integer best = abs(s.work(t, t));
                for (std::size_t i = t + 1; i < m; ++i)
                    if (s.work(i, t) != 0 && abs(s.work(i, t)) < best) { best = abs(s.work(i, t)); br = i; bc = t; }
                for (std::size_t j = t + 1; j < n; ++j)
                    if (s.work(t, j) != 0 && abs(s.work(t, j)) < best) { best = abs(s.work(t, j)); br = t; bc = j; }
                s.swap_rows(t, br);
                s.swap_cols(t, bc);
                continue;
            }
            // Row and column are clear; enforce divisibility of the remaining block.
            bool divisible = true;
            for (std::size_t i = t + 1; i < m && divisible; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (s.work(i, j) != 0 && !mpz_divisible_p(s.work(i, j).get_mpz_t(), s.work(t, t).get_mpz_t())) {
                        s.add_row(t, i, 1);
                        divisible = false;
                        break;
                    }
            if (divisible) break;
        }
        if (s.work(t, t) < 0) s.negate_row(t);
    }
    SmithDecomposition out{std::move(s.u), std::move(s.work), std::move(s.v), std::move(s.u_inv), std::move(s.v_inv), t};
    return out;
}

IntMatrix kernel_basis(const IntMatrix& a) {
    const SmithDecomposition snf = smith(a);
    std::vector<std::size_t> idx;
    for (std::size_t j = snf.rank; j < a.cols(); ++j) idx.push_back(j);
    return snf.v.select_columns(idx);
}

IntMatrix column_basis(const IntMatrix& a) {
    const SmithDecomposition snf = smith(a);
    IntMatrix out(a.rows(), snf.rank);
    for (std::size_t j = 0; j < snf.rank; ++j)
        for (std::size_t i = 0; i < a.rows(); ++i) out(i, j) = snf.u_inv(i, j) * snf.d(j, j);
    return out;
}

std::optional<IntVector> solve(const SmithDecomposition& snf, const IntVector& b) {
    // a = u_inv * d * v_inv, so a x = b  <=>  d y = u b  with  x = v y.
    const IntVector c = snf.u * b;
    IntVector y(snf.v.rows());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < snf.rank) {
            if (!mpz_divisible_p(c[i].get_mpz_t(), snf.d(i, i).get_mpz_t())) return std::nullopt;
            mpz_divexact(y[i].get_mpz_t(), c[i].get_mpz_t(), snf.d(i, i).get_mpz_t());
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    return snf.v * y;
}

std::optional<IntVector> solve(const IntMatrix& a, const IntVector& b) {
    return solve(smith(a), b);
}

IntMatrix preimage(const IntMatrix& a, const IntMatrix& lattice) {
    const IntMatrix joint = a.hcat(lattice);
    const IntMatrix k = kernel_basis(joint);
    return column_basis(k.block(0, 0, a.cols(), k.cols()));
}

IntMatrix intersect(const IntMatrix& l1, const IntMatrix& l2) {
    const IntMatrix k = kernel_basis(l1.hcat(-l2));
    return column_basis(l1 * k.block(0, 0, l1.cols(), k.cols()));
}

bool lattice_contains(const IntMatrix& lattice, const IntMatrix& sub) {
    if (sub.cols() == 0) return true;
    const SmithDecomposition snf = smith(lattice);
    for (std::size_t j = 0; j < sub.cols(); ++j)
        if (!solve(snf, sub.column(j))) return false;
    return true;
}

} // namespace homwb
