#include "oml/linalg.hpp"

namespace oml {
namespace la {

Vec zero_vec(int n, const Field& f) { return Vec(static_cast<std::size_t>(n), f.zero()); }

Mat identity(int n, const Field& f) {
    Mat m(static_cast<std::size_t>(n), zero_vec(n, f));
    for (int i = 0; i < n; ++i) m[i][i] = f.one();
    return m;
}

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vec conj(const Vec& v) {
    Vec out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(x.conj());
    return out;
}

Vec add(const Vec& x, const Vec& y) {
    if (x.size() != y.size()) fail(ErrorKind::dimension_mismatch, "vector add");
    Vec out;
    out.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out.push_back(x[i] + y[i]);
    return out;
}

Vec sub(const Vec& x, const Vec& y) {
    if (x.size() != y.size()) fail(ErrorKind::dimension_mismatch, "vector sub");
    Vec out;
    out.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out.push_back(x[i] - y[i]);
    return out;
}

Vec scale(const Scalar& c, const Vec& v) {
    Vec out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(c * x);
    return out;
}

Scalar dot(const Vec& x, const Vec& y) {
    if (x.size() != y.size() || x.empty()) fail(ErrorKind::dimension_mismatch, "dot");
    Scalar s = x[0].field().zero();
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

Vec matvec(const Mat& m, const Vec& v) {
    Vec out;
    out.reserve(m.size());
    for (const auto& row : m) out.push_back(dot(row, v));
    return out;
}

Mat matmul(const Mat& a, const Mat& b) {
    const Mat bt = transpose(b);
    Mat out;
    out.reserve(a.size());
    for (const auto& row : a) out.push_back(matvec(bt, row));
    return out;
}

Mat transpose(const Mat& m) {
    if (m.empty()) return {};
    Mat out(m[0].size(), Vec(m.size(), m[0][0].field().zero()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) out[j][i] = m[i][j];
    return out;
}

std::vector<int> rref(Mat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        const Scalar piv = m[r][c].inv();
        for (std::size_t j = c; j < cols; ++j) m[r][j] = piv * m[r][j];
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            const Scalar factor = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - factor * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    m.resize(r);
    return pivots;
}

int rank(Mat m) { return static_cast<int>(rref(m).size()); }

Mat nullspace(const Mat& m, int ncols, const Field& f) {
    Mat a = m;
    const std::vector<int> pivots = rref(a);
    std::vector<bool> is_pivot(static_cast<std::size_t>(ncols), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    Mat basis;
    for (int fc = 0; fc < ncols; ++fc) {
        if (is_pivot[static_cast<std::size_t>(fc)]) continue;
        Vec x = zero_vec(ncols, f);
        x[static_cast<std::size_t>(fc)] = f.one();
        for (std::size_t i = 0; i < pivots.size(); ++i)
            x[static_cast<std::size_t>(pivots[i])] = -a[i][static_cast<std::size_t>(fc)];
        basis.push_back(std::move(x));
    }
    rref(basis);
    return basis;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
    if (a.size() != b.size()) fail(ErrorKind::dimension_mismatch, "solve");
    if (a.empty()) return Vec{};
    const Field f = b.empty() ? a[0][0].field() : b[0].field();
    Mat aug = a;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    const std::size_t cols = a[0].size();
    const std::vector<int> pivots = rref(aug);
    Vec x = zero_vec(static_cast<int>(cols), f);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (static_cast<std::size_t>(pivots[i]) == cols) return std::nullopt; // 0 = 1 row
        x[static_cast<std::size_t>(pivots[i])] = aug[i][cols];
    }
    return x;
}

Scalar det(Mat m) {
    if (m.empty()) fail(ErrorKind::bad_argument, "determinant of empty matrix");
    const std::size_t n = m.size();
    const Field f = m[0][0].field();
    Scalar d = f.one();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c].is_zero()) ++p;
        if (p == n) return f.zero();
        if (p != c) {
            std::swap(m[p], m[c]);
            d = -d;
        }
        d = d * m[c][c];
        const Scalar inv = m[c][c].inv();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c].is_zero()) continue;
            const Scalar factor = m[i][c] * inv;
            for (std::size_t j = c; j < n; ++j) m[i][j] = m[i][j] - factor * m[c][j];
        }
    }
    return d;
}

std::optional<Mat> inverse(Mat m) {
    const std::size_t n = m.size();
    if (n == 0) return Mat{};
    const Field f = m[0][0].field();
    Mat aug = std::move(m);
    const Mat id = identity(static_cast<int>(n), f);
    for (std::size_t i = 0; i < n; ++i)
        aug[i].insert(aug[i].end(), id[i].begin(), id[i].end());
    const std::vector<int> pivots = rref(aug);
    if (pivots.size() != n || static_cast<std::size_t>(pivots.back()) != n - 1)
        return std::nullopt;
    Mat out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.emplace_back(aug[i].begin() + static_cast<long>(n), aug[i].end());
    return out;
}

} // namespace la
} // namespace oml
