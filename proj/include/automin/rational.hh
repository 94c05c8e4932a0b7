// Exact rationals and the small amount of linear algebra the weighted
// automata need. Rational is boost's arbitrary-precision cpp_rational, which
// keeps every value reduced with a positive denominator.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace automin {

using Rational = boost::multiprecision::cpp_rational;
using Vector = std::vector<Rational>;
/// Row-major; `m[i]` is row i.
using Matrix = std::vector<Vector>;

/// Parses `p` or `p/q` (optional leading minus). Throws std::invalid_argument.
[[nodiscard]] Rational parse_rational(std::string_view text);
/// `p` for integers, `p/q` otherwise.
[[nodiscard]] std::string to_string(const Rational& r);

namespace linalg {

[[nodiscard]] Matrix identity(std::size_t n);
[[nodiscard]] Matrix zeros(std::size_t rows, std::size_t cols);
[[nodiscard]] Matrix transpose(const Matrix& m, std::size_t cols);
/// Row vector times matrix; `m` has v.size() rows and `cols` columns.
[[nodiscard]] Vector row_times(const Vector& v, const Matrix& m, std::size_t cols);
[[nodiscard]] Vector times_column(const Matrix& m, const Vector& v);
[[nodiscard]] Rational dot(const Vector& a, const Vector& b);
[[nodiscard]] bool is_zero(const Vector& v);

/// Rank by exact Gaussian elimination.
[[nodiscard]] std::size_t rank(Matrix m);

/// Incrementally maintained basis of a subspace of Q^n. Vectors are kept as
/// inserted; an echelon copy with first-nonzero pivots answers membership.
class Span {
public:
    explicit Span(std::size_t n) : n_(n) {}

    /// Adds `v` if it is independent of the current basis; returns whether it was added.
    bool insert(const Vector& v);
    [[nodiscard]] bool contains(const Vector& v) const;
    /// Coefficients c with Σ c_i · basis_i = v, or nothing when v is outside the span.
    [[nodiscard]] std::optional<Vector> coordinates(const Vector& v) const;

    [[nodiscard]] const std::vector<Vector>& basis() const noexcept { return basis_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return basis_.size(); }

private:
    // Reduces v against the echelon rows; `combo` tracks the combination of
    // basis vectors subtracted.
    Vector reduce(Vector v, Vector* combo) const;

    std::size_t n_;
    std::vector<Vector> basis_;
    std::vector<Vector> echelon_;
    std::vector<std::size_t> pivots_;
    // echelon_[i] = Σ_j echelon_combo_[i][j] · basis_[j]
    std::vector<Vector> echelon_combo_;
};

/// One solution of A x = b, or nothing if inconsistent. Free variables are 0.
[[nodiscard]] std::optional<Vector> solve(Matrix a, Vector b, std::size_t unknowns);

} // namespace linalg
} // namespace automin
