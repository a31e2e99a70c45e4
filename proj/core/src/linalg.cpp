#include "curvop/linalg.hpp"

#include "curvop/errors.hpp"

#include <cstdint>
#include <numeric>

namespace curvop {

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool RationalMatrix::is_zero() const {
    for (const Rational& x : data_)
        if (x != 0) return false;
    return true;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw InvalidArgument("matrix-vector size mismatch");
    std::vector<Rational> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if ((*this)(r, c) != 0 && v[c] != 0) out[r] += (*this)(r, c) * v[c];
    return out;
}

RationalMatrix RationalMatrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    RationalMatrix m(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(rows[i], cols[j]);
    return m;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw InvalidArgument("matrix product size mismatch");
    RationalMatrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (b(k, j) != 0) m(i, j) += x * b(k, j);
        }
    return m;
}

std::string RationalMatrix::to_string() const {
    std::string s;
    for (std::size_t r = 0; r < rows_; ++r) {
        s += "[";
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) s += ", ";
            s += curvop::to_string((*this)(r, c));
        }
        s += "]\n";
    }
    return s;
}

namespace {

using IntRow = std::vector<mpz_class>;

// Scales each row to integers; row scaling preserves rank and kernel.
std::vector<IntRow> integer_rows(const RationalMatrix& m) {
    std::vector<IntRow> rows(m.rows(), IntRow(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        mpz_class l = 1;
        for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
    }
    return rows;
}

}  // namespace

KernelRank kernel_rank(const RationalMatrix& m) {
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<IntRow> a = integer_rows(m);
    std::vector<std::size_t> pivots;
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t p = r;
        while (p < R && a[p][c] == 0) ++p;
        if (p == R) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < R; ++i) {
            for (std::size_t j = c + 1; j < C; ++j) {
                mpz_class v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        pivots.push_back(c);
        ++r;
    }

    KernelRank out;
    out.rank = pivots.size();
    std::vector<bool> is_pivot(C, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    for (std::size_t f = 0; f < C; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(C);
        v[f] = 1;
        for (std::size_t k = pivots.size(); k-- > 0;) {
            const std::size_t pc = pivots[k];
            Rational s = 0;
            for (std::size_t j = pc + 1; j < C; ++j)
                if (a[k][j] != 0 && v[j] != 0) s += Rational(a[k][j]) * v[j];
            v[pc] = -s / Rational(a[k][pc]);
        }
        // Reduce to a primitive integer vector.
        mpz_class l = 1, g = 0;
        for (const Rational& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        for (Rational& x : v) {
            x *= l;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
        }
        if (g != 0)
            for (Rational& x : v) x /= g;
        out.kernel.push_back(std::move(v));
    }
    return out;
}

std::size_t rank(const RationalMatrix& m) { return kernel_rank(m).rank; }

namespace {

void check_complex(const RationalMatrix& d_in, const RationalMatrix& d_out) {
    if (d_in.rows() != d_out.cols())
        throw InvalidArgument("incompatible maps: d_in has " + std::to_string(d_in.rows()) + " rows, d_out has " +
                              std::to_string(d_out.cols()) + " columns");
    if (!(d_out * d_in).is_zero()) throw NotAComplex("d_out * d_in != 0");
}

long homology_unchecked(const RationalMatrix& d_in, const RationalMatrix& d_out) {
    const std::size_t mid = d_out.cols();
    const std::size_t nullity = mid - (d_out.rows() == 0 ? 0 : rank(d_out));
    const std::size_t r_in = d_in.cols() == 0 ? 0 : rank(d_in);
    return static_cast<long>(nullity) - static_cast<long>(r_in);
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

long homology_dimension(const RationalMatrix& d_in, const RationalMatrix& d_out) {
    check_complex(d_in, d_out);
    return homology_unchecked(d_in, d_out);
}

long homology_dimension_blocked(const RationalMatrix& d_in, const RationalMatrix& d_out) {
    check_complex(d_in, d_out);
    // Nodes: domain [0, A), middle [A, A+B), codomain [A+B, A+B+C).
    const std::size_t A = d_in.cols(), B = d_in.rows(), C = d_out.rows();
    UnionFind uf(A + B + C);
    for (std::size_t i = 0; i < B; ++i)
        for (std::size_t j = 0; j < A; ++j)
            if (d_in(i, j) != 0) uf.unite(A + i, j);
    for (std::size_t i = 0; i < C; ++i)
        for (std::size_t j = 0; j < B; ++j)
            if (d_out(i, j) != 0) uf.unite(A + B + i, A + j);

    struct Block {
        std::vector<std::size_t> dom, mid, cod;
    };
    std::vector<std::size_t> root_index(A + B + C, SIZE_MAX);
    std::vector<Block> blocks;
    auto block_of = [&](std::size_t node) -> Block& {
        const std::size_t r = uf.find(node);
        if (root_index[r] == SIZE_MAX) {
            root_index[r] = blocks.size();
            blocks.emplace_back();
        }
        return blocks[root_index[r]];
    };
    for (std::size_t j = 0; j < A; ++j) block_of(j).dom.push_back(j);
    for (std::size_t i = 0; i < B; ++i) block_of(A + i).mid.push_back(i);
    for (std::size_t i = 0; i < C; ++i) block_of(A + B + i).cod.push_back(i);

    long total = 0;
    for (const Block& b : blocks) {
        if (b.mid.empty()) continue;
        total += homology_unchecked(d_in.submatrix(b.mid, b.dom), d_out.submatrix(b.cod, b.mid));
    }
    return total;
}

}  // namespace curvop
