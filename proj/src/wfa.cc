#include "automin/wfa.hh"

#include <sstream>
#include <stdexcept>

namespace automin::wfa {

Wfa::Wfa(Alphabet alphabet, std::size_t dim, Vector init, std::vector<Matrix> trans, Vector final)
    : alphabet_(std::move(alphabet)), dim_(dim), init_(std::move(init)), trans_(std::move(trans)),
      final_(std::move(final)) {
    if (init_.size() != dim_ || final_.size() != dim_) {
        throw std::invalid_argument("wfa: initial and final vectors must have length " + std::to_string(dim_));
    }
    if (trans_.size() != alphabet_.size()) throw std::invalid_argument("wfa: need one matrix per symbol");
    for (std::size_t a = 0; a < trans_.size(); ++a) {
        if (trans_[a].size() != dim_) throw std::invalid_argument("wfa: matrix for symbol " + std::string(1, alphabet_[a]) + " has wrong row count");
        for (const auto& row : trans_[a]) {
            if (row.size() != dim_) throw std::invalid_argument("wfa: matrix for symbol " + std::string(1, alphabet_[a]) + " is not square");
        }
    }
}

Rational weight(const Wfa& w, const Word& word) {
    Vector v = w.init();
    for (std::size_t a : w.alphabet().encode(word)) v = linalg::row_times(v, w.matrix(a), w.dim());
    return linalg::dot(v, w.final_weights());
}

Wfa transpose(const Wfa& w) {
    std::vector<Matrix> trans;
    trans.reserve(w.matrices().size());
    for (const auto& m : w.matrices()) trans.push_back(linalg::transpose(m, w.dim()));
    return Wfa(w.alphabet(), w.dim(), w.final_weights(), std::move(trans), w.init());
}

Wfa forward_reduce(const Wfa& w) {
    const std::size_t k = w.alphabet().size();
    linalg::Span span(w.dim());
    span.insert(w.init());
    // The basis grows while we walk it: vector i is init·M_u for the i-th
    // new word u in breadth-first order.
    for (std::size_t i = 0; i < span.dimension(); ++i) {
        for (std::size_t a = 0; a < k; ++a) {
            span.insert(linalg::row_times(span.basis()[i], w.matrix(a), w.dim()));
        }
    }
    const auto& basis = span.basis();
    const std::size_t r = basis.size();
    Vector init = r == 0 ? Vector{} : *span.coordinates(w.init());
    std::vector<Matrix> trans(k, Matrix(r));
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t i = 0; i < r; ++i) {
            trans[a][i] = *span.coordinates(linalg::row_times(basis[i], w.matrix(a), w.dim()));
        }
    }
    Vector final(r);
    for (std::size_t i = 0; i < r; ++i) final[i] = linalg::dot(basis[i], w.final_weights());
    return Wfa(w.alphabet(), r, std::move(init), std::move(trans), std::move(final));
}

Wfa backward_reduce(const Wfa& w) { return transpose(forward_reduce(transpose(w))); }

Wfa minimize(const Wfa& w) { return forward_reduce(backward_reduce(w)); }

Wfa difference(const Wfa& w1, const Wfa& w2) {
    require_same_alphabet(w1.alphabet(), w2.alphabet(), "wfa::difference");
    const std::size_t n1 = w1.dim();
    const std::size_t n = n1 + w2.dim();
    Vector init(n), final(n);
    for (std::size_t i = 0; i < n1; ++i) {
        init[i] = w1.init()[i];
        final[i] = w1.final_weights()[i];
    }
    for (std::size_t i = 0; i < w2.dim(); ++i) {
        init[n1 + i] = w2.init()[i];
        final[n1 + i] = -w2.final_weights()[i];
    }
    std::vector<Matrix> trans;
    for (std::size_t a = 0; a < w1.alphabet().size(); ++a) {
        Matrix m = linalg::zeros(n, n);
        for (std::size_t i = 0; i < n1; ++i)
            for (std::size_t j = 0; j < n1; ++j) m[i][j] = w1.matrix(a)[i][j];
        for (std::size_t i = 0; i < w2.dim(); ++i)
            for (std::size_t j = 0; j < w2.dim(); ++j) m[n1 + i][n1 + j] = w2.matrix(a)[i][j];
        trans.push_back(std::move(m));
    }
    return Wfa(w1.alphabet(), n, std::move(init), std::move(trans), std::move(final));
}

bool equivalent(const Wfa& w1, const Wfa& w2) {
    require_same_alphabet(w1.alphabet(), w2.alphabet(), "wfa::equivalent");
    return minimize(difference(w1, w2)).dim() == 0;
}

std::optional<LinearMap> find_morphism(const Wfa& from, const Wfa& to) {
    require_same_alphabet(from.alphabet(), to.alphabet(), "wfa::find_morphism");
    const std::size_t dx = from.dim();
    const std::size_t dy = to.dim();
    const std::size_t unknowns = dx * dy;
    auto var = [dy](std::size_t i, std::size_t j) { return i * dy + j; };
    Matrix a;
    Vector b;
    auto equation = [&]() -> Vector& {
        a.emplace_back(unknowns);
        b.emplace_back(0);
        return a.back();
    };
    // init · H = init'
    for (std::size_t j = 0; j < dy; ++j) {
        auto& row = equation();
        for (std::size_t i = 0; i < dx; ++i) row[var(i, j)] += from.init()[i];
        b.back() = to.init()[j];
    }
    // M_a · H − H · M'_a = 0
    for (std::size_t s = 0; s < from.alphabet().size(); ++s) {
        const auto& m = from.matrix(s);
        const auto& mp = to.matrix(s);
        for (std::size_t i = 0; i < dx; ++i) {
            for (std::size_t j = 0; j < dy; ++j) {
                auto& row = equation();
                for (std::size_t k = 0; k < dx; ++k) row[var(k, j)] += m[i][k];
                for (std::size_t k = 0; k < dy; ++k) row[var(i, k)] -= mp[k][j];
            }
        }
    }
    // final = H · final'
    for (std::size_t i = 0; i < dx; ++i) {
        auto& row = equation();
        for (std::size_t j = 0; j < dy; ++j) row[var(i, j)] += to.final_weights()[j];
        b.back() = from.final_weights()[i];
    }
    const auto x = linalg::solve(std::move(a), std::move(b), unknowns);
    if (!x) return std::nullopt;
    LinearMap map{linalg::zeros(dx, dy), MapKind::general};
    for (std::size_t i = 0; i < dx; ++i)
        for (std::size_t j = 0; j < dy; ++j) map.h[i][j] = (*x)[var(i, j)];
    const std::size_t r = linalg::rank(map.h);
    map.kind = make_kind(r == dy, r == dx);
    return map;
}

bool is_isomorphic(const Wfa& a, const Wfa& b) {
    if (a.alphabet() != b.alphabet() || a.dim() != b.dim()) return false;
    const auto m = find_morphism(a, b);
    return m && m->kind == MapKind::iso;
}

std::string to_dot(const Wfa& w) {
    std::ostringstream out;
    out << "digraph wfa {\n  rankdir=LR;\n";
    for (std::size_t i = 0; i < w.dim(); ++i) {
        out << "  " << i << " [shape=circle, label=\"" << i;
        if (w.init()[i] != 0) out << "\\nin " << to_string(w.init()[i]);
        if (w.final_weights()[i] != 0) out << "\\nout " << to_string(w.final_weights()[i]);
        out << "\"];\n";
    }
    for (std::size_t a = 0; a < w.alphabet().size(); ++a)
        for (std::size_t i = 0; i < w.dim(); ++i)
            for (std::size_t j = 0; j < w.dim(); ++j)
                if (w.matrix(a)[i][j] != 0)
                    out << "  " << i << " -> " << j << " [label=\"" << w.alphabet()[a] << " / "
                        << to_string(w.matrix(a)[i][j]) << "\"];\n";
    out << "}\n";
    return out.str();
}

} // namespace automin::wfa
