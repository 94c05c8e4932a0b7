#include "automin/rational.hh"

#include <stdexcept>

namespace automin {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    const boost::multiprecision::cpp_int d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational r(boost::multiprecision::cpp_int{std::string(num)}, d);
    return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

namespace linalg {

Matrix identity(std::size_t n) {
    Matrix m = zeros(n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Matrix zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, Vector(cols)); }

Matrix transpose(const Matrix& m, std::size_t cols) {
    Matrix t = zeros(cols, m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
    return t;
}

Vector row_times(const Vector& v, const Matrix& m, std::size_t cols) {
    Vector out(cols);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < cols; ++j) out[j] += v[i] * m[i][j];
    }
    return out;
}

Vector times_column(const Matrix& m, const Vector& v) {
    Vector out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], v);
    return out;
}

Rational dot(const Vector& a, const Vector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero(const Vector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

std::size_t rank(Matrix m) {
    if (m.empty()) return 0;
    const std::size_t cols = m.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            if (m[i][c] == 0) continue;
            const Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

Vector Span::reduce(Vector v, Vector* combo) const {
    for (std::size_t i = 0; i < echelon_.size(); ++i) {
        const std::size_t p = pivots_[i];
        if (v[p] == 0) continue;
        const Rational f = v[p] / echelon_[i][p];
        for (std::size_t j = 0; j < n_; ++j) v[j] -= f * echelon_[i][j];
        if (combo) {
            for (std::size_t j = 0; j < echelon_combo_[i].size(); ++j) (*combo)[j] += f * echelon_combo_[i][j];
        }
    }
    return v;
}

bool Span::insert(const Vector& v) {
    if (v.size() != n_) throw std::invalid_argument("Span::insert: dimension mismatch");
    const std::size_t m = basis_.size();
    Vector combo(m + 1);
    Vector r = reduce(v, &combo);
    std::size_t p = 0;
    while (p < n_ && r[p] == 0) ++p;
    if (p == n_) return false;
    // r = v - Σ combo_j basis_j, and v becomes basis_m.
    for (auto& c : combo) c = -c;
    combo[m] = 1;
    for (auto& row : echelon_combo_) row.resize(m + 1);
    basis_.push_back(v);
    echelon_.push_back(std::move(r));
    pivots_.push_back(p);
    echelon_combo_.push_back(std::move(combo));
    return true;
}

bool Span::contains(const Vector& v) const { return is_zero(reduce(v, nullptr)); }

std::optional<Vector> Span::coordinates(const Vector& v) const {
    Vector factors(basis_.size());
    if (!is_zero(reduce(v, &factors))) return std::nullopt;
    // `factors` holds coefficients over the basis already (combo rows are in basis coordinates).
    return factors;
}

std::optional<Vector> solve(Matrix a, Vector b, std::size_t unknowns) {
    const std::size_t rows = a.size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < unknowns && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        const Rational inv = 1 / a[r][c];
        for (std::size_t j = c; j < unknowns; ++j) a[r][j] *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Rational f = a[i][c];
            for (std::size_t j = c; j < unknowns; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;
    Vector x(unknowns);
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
    return x;
}

} // namespace linalg
} // namespace automin
