#include "seshadri/lattice.hpp"

#include "seshadri/error.hpp"

#include <algorithm>
#include <utility>

namespace seshadri {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        require(r.size() == cols_, ErrorCode::InvalidArgument, "ragged matrix literal");
        for (long x : r)
            data_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::span<const IntVector> rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require(rows[r].size() == cols, ErrorCode::DimensionMismatch, "row length differs from column count");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

IntVector IntMatrix::row(std::size_t r) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::col(std::size_t c) const {
    IntVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

std::vector<IntVector> IntMatrix::row_vectors() const {
    std::vector<IntVector> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out.push_back(row(r));
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

IntVector IntMatrix::apply(std::span<const Integer> x) const {
    require(x.size() == cols_, ErrorCode::DimensionMismatch, "matrix/vector size mismatch");
    IntVector y(rows_, Integer(0));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            y[r] += (*this)(r, c) * x[c];
    return y;
}

RationalPoint IntMatrix::apply(std::span<const Rational> x) const {
    require(x.size() == cols_, ErrorCode::DimensionMismatch, "matrix/vector size mismatch");
    RationalPoint y(rows_, Rational(0));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if ((*this)(r, c) != 0)
                y[r] += (*this)(r, c) * x[c];
    return y;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        std::swap((*this)(r, a), (*this)(r, b));
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    require(a.cols() == b.rows(), ErrorCode::DimensionMismatch, "matrix product size mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

Integer determinant(const IntMatrix& a) {
    require(a.rows() == a.cols(), ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0)
        return 1;
    IntMatrix m = a;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = v;
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& a) {
    if (a.rows() != a.cols())
        return false;
    Integer d = determinant(a);
    return d == 1 || d == -1;
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
    require(is_unimodular(a), ErrorCode::InvalidArgument, "matrix is not unimodular");
    // U*A = H with H unimodular in HNF is the identity, so U is the inverse.
    return hermite_normal_form(a).U;
}

IntVector primitive_part(std::span<const Integer> v) {
    Integer g = gcd_of(v);
    if (g == 0)
        fail(ErrorCode::InvalidArgument, "zero vector has no primitive part");
    IntVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        mpz_divexact(r[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
    return r;
}

bool is_primitive(std::span<const Integer> v) { return gcd_of(v) == 1; }

namespace {

// rows (r, i) <- [[x, y], [-b/g, a/g]] * rows (r, i); determinant 1.
void combine_rows(IntMatrix& m, std::size_t r, std::size_t i, const Integer& x, const Integer& y,
                  const Integer& p, const Integer& q) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
        Integer top = x * m(r, c) + y * m(i, c);
        Integer bottom = p * m(r, c) + q * m(i, c);
        m(r, c) = std::move(top);
        m(i, c) = std::move(bottom);
    }
}

void add_row_multiple(IntMatrix& m, std::size_t target, std::size_t source, const Integer& k) {
    if (k == 0)
        return;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (m(source, c) != 0)
            m(target, c) -= k * m(source, c);
}

void add_col_multiple(IntMatrix& m, std::size_t target, std::size_t source, const Integer& k) {
    if (k == 0)
        return;
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (m(r, source) != 0)
            m(r, target) -= k * m(r, source);
}

void negate_row(IntMatrix& m, std::size_t r) {
    for (std::size_t c = 0; c < m.cols(); ++c)
        m(r, c) = -m(r, c);
}

} // namespace

HermiteForm hermite_normal_form(const IntMatrix& a) {
    HermiteForm out{a, IntMatrix::identity(a.rows()), 0};
    IntMatrix& H = out.H;
    IntMatrix& U = out.U;
    std::size_t r = 0;
    for (std::size_t j = 0; j < H.cols() && r < H.rows(); ++j) {
        for (std::size_t i = r + 1; i < H.rows(); ++i) {
            if (H(i, j) == 0)
                continue;
            Integer g, x, y;
            mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), H(r, j).get_mpz_t(), H(i, j).get_mpz_t());
            Integer p = -H(i, j) / g;
            Integer q = H(r, j) / g;
            combine_rows(H, r, i, x, y, p, q);
            combine_rows(U, r, i, x, y, p, q);
        }
        if (H(r, j) == 0)
            continue;
        if (H(r, j) < 0) {
            negate_row(H, r);
            negate_row(U, r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            Integer k;
            mpz_fdiv_q(k.get_mpz_t(), H(i, j).get_mpz_t(), H(r, j).get_mpz_t());
            add_row_multiple(H, i, r, k);
            add_row_multiple(U, i, r, k);
        }
        ++r;
    }
    out.rank = r;
    return out;
}

std::vector<Integer> SmithForm::invariant_factors() const {
    std::vector<Integer> d;
    for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i)
        d.push_back(S(i, i));
    return d;
}

SmithForm smith_normal_form(const IntMatrix& a) {
    SmithForm out{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols())};
    IntMatrix& S = out.S;
    const std::size_t m = S.rows();
    const std::size_t n = S.cols();
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        while (true) {
            // Move the smallest nonzero entry of the trailing block to (t, t).
            std::size_t pr = m, pc = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (S(i, j) != 0 && (pr == m || abs(S(i, j)) < abs(S(pr, pc)))) {
                        pr = i;
                        pc = j;
                    }
            if (pr == m)
                return out;
            S.swap_rows(t, pr);
            out.U.swap_rows(t, pr);
            S.swap_cols(t, pc);
            out.V.swap_cols(t, pc);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (S(i, t) == 0)
                    continue;
                Integer k;
                mpz_fdiv_q(k.get_mpz_t(), S(i, t).get_mpz_t(), S(t, t).get_mpz_t());
                add_row_multiple(S, i, t, k);
                add_row_multiple(out.U, i, t, k);
                if (S(i, t) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (S(t, j) == 0)
                    continue;
                Integer k;
                mpz_fdiv_q(k.get_mpz_t(), S(t, j).get_mpz_t(), S(t, t).get_mpz_t());
                add_col_multiple(S, j, t, k);
                add_col_multiple(out.V, j, t, k);
                if (S(t, j) != 0)
                    clean = false;
            }
            if (!clean)
                continue;

            // Divisibility: fold an offending row into row t and start over.
            std::size_t bad = m;
            for (std::size_t i = t + 1; i < m && bad == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!mpz_divisible_p(S(i, j).get_mpz_t(), S(t, t).get_mpz_t())) {
                        bad = i;
                        break;
                    }
            if (bad == m)
                break;
            add_row_multiple(S, t, bad, Integer(-1));
            add_row_multiple(out.U, t, bad, Integer(-1));
        }
        if (S(t, t) < 0) {
            negate_row(S, t);
            negate_row(out.U, t);
        }
    }
    return out;
}

std::size_t matrix_rank(const IntMatrix& a) { return hermite_normal_form(a).rank; }

std::vector<IntVector> integer_kernel(const IntMatrix& a) {
    const std::size_t n = a.cols();
    HermiteForm h = hermite_normal_form(a.transpose());
    std::vector<IntVector> basis;
    for (std::size_t r = h.rank; r < n; ++r)
        basis.push_back(h.U.row(r));
    if (basis.empty())
        return basis;
    HermiteForm canon = hermite_normal_form(IntMatrix::from_rows(basis, n));
    return canon.H.row_vectors();
}

QuotientMap quotient_projection(std::span<const IntVector> generators, std::size_t ambient_rank) {
    QuotientMap q;
    q.source_rank = ambient_rank;
    if (generators.empty()) {
        q.target_rank = ambient_rank;
        q.matrix = IntMatrix::identity(ambient_rank);
        return q;
    }
    IntMatrix g = IntMatrix::from_rows(generators, ambient_rank);
    // Rows of the quotient matrix: the annihilator lattice of the generators.
    std::vector<IntVector> annihilator = integer_kernel(g);
    q.target_rank = annihilator.size();
    q.matrix = IntMatrix::from_rows(annihilator, ambient_rank);
    if (q.target_rank == 0) {
        q.matrix = IntMatrix(0, ambient_rank);
        q.kernel_basis = IntMatrix::identity(ambient_rank).row_vectors();
    } else {
        q.kernel_basis = integer_kernel(q.matrix);
    }
    return q;
}

namespace {

std::vector<RationalPoint> rational_inverse(const IntMatrix& a) {
    const std::size_t n = a.rows();
    std::vector<RationalPoint> m(n, RationalPoint(2 * n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = a(i, j);
        m[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0)
            ++p;
        require(p < n, ErrorCode::InvalidArgument, "singular matrix");
        std::swap(m[c], m[p]);
        Rational inv = 1 / m[c][c];
        for (auto& x : m[c])
            x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0)
                continue;
            Rational f = m[r][c];
            for (std::size_t k = 0; k < 2 * n; ++k)
                if (m[c][k] != 0)
                    m[r][k] -= f * m[c][k];
        }
    }
    std::vector<RationalPoint> inv(n);
    for (std::size_t i = 0; i < n; ++i)
        inv[i].assign(m[i].begin() + static_cast<std::ptrdiff_t>(n), m[i].end());
    return inv;
}

} // namespace

KernelSplitting kernel_splitting(std::span<const Integer> w) {
    if (w.empty() || !is_primitive(w))
        fail(ErrorCode::InvalidArgument, "functional must be primitive");
    const std::size_t n = w.size();
    KernelSplitting ks;
    ks.functional.assign(w.begin(), w.end());

    IntMatrix row(1, n);
    for (std::size_t i = 0; i < n; ++i)
        row(0, i) = w[i];
    ks.kernel_basis = integer_kernel(row);

    // First row of U in U*w^T = (1, 0, ..., 0)^T gives w(u) = 1.
    HermiteForm h = hermite_normal_form(row.transpose());
    IntVector section = h.U.row(0);
    // Normalize against the kernel basis so each pivot coordinate lies in
    // (-pivot/2, pivot/2].
    for (const auto& b : ks.kernel_basis) {
        std::size_t p = 0;
        while (b[p] == 0)
            ++p;
        Integer k = ceil_of(make_rational(2 * section[p] - b[p], 2 * b[p]));
        for (std::size_t i = 0; i < n; ++i)
            section[i] -= k * b[i];
    }
    ks.section = std::move(section);

    std::vector<IntVector> rows = ks.kernel_basis;
    rows.push_back(ks.section);
    ks.inverse_rows = rational_inverse(IntMatrix::from_rows(rows, n));
    return ks;
}

RationalPoint KernelSplitting::kernel_coordinates(std::span<const Rational> x) const {
    const std::size_t n = functional.size();
    require(x.size() == n, ErrorCode::DimensionMismatch, "point rank differs from functional rank");
    // coeffs = x * B^{-1}
    RationalPoint c(n - 1, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0)
            continue;
        for (std::size_t j = 0; j + 1 < n; ++j)
            if (inverse_rows[i][j] != 0)
                c[j] += x[i] * inverse_rows[i][j];
    }
    return c;
}

RationalPoint KernelSplitting::lift(std::span<const Rational> coords, const Rational& t) const {
    const std::size_t n = functional.size();
    require(coords.size() + 1 == n, ErrorCode::DimensionMismatch, "kernel coordinates have wrong rank");
    RationalPoint x(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = t * section[i];
        for (std::size_t j = 0; j + 1 < n; ++j)
            if (kernel_basis[j][i] != 0)
                x[i] += coords[j] * kernel_basis[j][i];
    }
    return x;
}

RationalPoint coordinates_in_basis(std::span<const IntVector> hnf_basis, std::span<const Rational> x) {
    RationalPoint c(hnf_basis.size());
    RationalPoint residual(x.begin(), x.end());
    for (std::size_t k = 0; k < hnf_basis.size(); ++k) {
        const IntVector& b = hnf_basis[k];
        std::size_t p = 0;
        while (p < b.size() && b[p] == 0)
            ++p;
        require(p < b.size(), ErrorCode::InvalidArgument, "zero basis vector");
        c[k] = residual[p] / b[p];
        for (std::size_t i = 0; i < residual.size(); ++i)
            if (b[i] != 0)
                residual[i] -= c[k] * b[i];
    }
    require(is_zero(residual), ErrorCode::InvalidArgument, "point is not in the span of the basis");
    return c;
}

} // namespace seshadri
