#include "automin/monoid.hh"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace automin::monoid {

FiniteMonoid::FiniteMonoid(std::vector<std::vector<Element>> mult, Element identity)
    : mult_(std::move(mult)), identity_(identity) {
    const std::size_t m = mult_.size();
    if (m == 0) throw std::invalid_argument("monoid: a monoid has at least one element");
    if (identity_ >= m) throw std::invalid_argument("monoid: identity out of range");
    for (const auto& row : mult_) {
        if (row.size() != m) throw std::invalid_argument("monoid: multiplication table is not square");
        for (Element e : row)
            if (e >= m) throw std::invalid_argument("monoid: product out of range");
    }
}

void FiniteMonoid::validate() const {
    const std::size_t m = order();
    for (Element x = 0; x < m; ++x) {
        if (mult_[identity_][x] != x || mult_[x][identity_] != x) {
            throw ContractViolation("monoid: identity law fails at element " + std::to_string(x));
        }
    }
    for (Element x = 0; x < m; ++x)
        for (Element y = 0; y < m; ++y)
            for (Element z = 0; z < m; ++z)
                if (mult_[mult_[x][y]][z] != mult_[x][mult_[y][z]]) {
                    throw ContractViolation("monoid: associativity fails at (" + std::to_string(x) + ", " +
                                            std::to_string(y) + ", " + std::to_string(z) + ")");
                }
}

Element evaluate(const MonoidRecognizer& r, const Word& w) {
    Element x = r.monoid.identity();
    for (std::size_t a : r.alphabet.encode(w)) x = r.monoid.multiply(x, r.phi[a]);
    return x;
}

bool recognizes(const MonoidRecognizer& r, const Word& w) { return r.accepting[evaluate(r, w)]; }

Element act_left(const BiactionRecognizer& b, const Word& w, Element x) {
    const auto symbols = b.alphabet.encode(w);
    for (auto it = symbols.rbegin(); it != symbols.rend(); ++it) x = b.left[*it][x];
    return x;
}

Element act_right(const BiactionRecognizer& b, Element x, const Word& w) {
    for (std::size_t a : b.alphabet.encode(w)) x = b.right[a][x];
    return x;
}

bool recognizes(const BiactionRecognizer& b, const Word& w) { return b.accepting[act_left(b, w, b.phi_empty)]; }

MonoidRecognizer transition_monoid(const dfa::Dfa& d) {
    const std::size_t n = d.num_states();
    const std::size_t k = d.alphabet().size();
    using Transformation = std::vector<State>;
    std::map<Transformation, Element> index;
    std::vector<Transformation> elements;
    std::vector<Word> names;

    Transformation id(n);
    for (State q = 0; q < n; ++q) id[q] = q;
    index.emplace(id, 0);
    elements.push_back(std::move(id));
    names.emplace_back();
    // Breadth-first over words: element i extended by each symbol.
    for (Element i = 0; i < elements.size(); ++i) {
        for (std::size_t a = 0; a < k; ++a) {
            Transformation g(n);
            for (State q = 0; q < n; ++q) g[q] = d.next(elements[i][q], a);
            if (index.try_emplace(g, elements.size()).second) {
                elements.push_back(std::move(g));
                names.push_back(names[i] + d.alphabet()[a]);
            }
        }
    }
    const std::size_t m = elements.size();
    std::vector<std::vector<Element>> mult(m, std::vector<Element>(m));
    Transformation g(n);
    for (Element x = 0; x < m; ++x) {
        for (Element y = 0; y < m; ++y) {
            // x then y
            for (State q = 0; q < n; ++q) g[q] = elements[y][elements[x][q]];
            mult[x][y] = index.at(g);
        }
    }
    std::vector<Element> phi(k);
    for (std::size_t a = 0; a < k; ++a) {
        Transformation delta_a(n);
        for (State q = 0; q < n; ++q) delta_a[q] = d.next(q, a);
        phi[a] = index.at(delta_a);
    }
    std::vector<bool> accepting(m);
    for (Element x = 0; x < m; ++x) accepting[x] = d.is_final(elements[x][d.initial()]);
    return MonoidRecognizer{d.alphabet(), FiniteMonoid(std::move(mult), 0), std::move(phi), std::move(accepting),
                            std::move(names)};
}

MonoidRecognizer syntactic_monoid(const dfa::Dfa& d) { return transition_monoid(dfa::minimize(d)); }

bool congruence_oracle(const dfa::Dfa& d, const Word& w, const Word& w2) {
    const auto m = dfa::minimize(d);
    for (State q = 0; q < m.num_states(); ++q)
        if (m.run(q, w) != m.run(q, w2)) return false;
    return true;
}

BiactionRecognizer monoid_to_biaction(const MonoidRecognizer& r) {
    const std::size_t m = r.monoid.order();
    const std::size_t k = r.alphabet.size();
    BiactionRecognizer b{r.alphabet, m, std::vector<std::vector<Element>>(k, std::vector<Element>(m)),
                         std::vector<std::vector<Element>>(k, std::vector<Element>(m)), r.monoid.identity(),
                         r.accepting};
    for (std::size_t a = 0; a < k; ++a) {
        for (Element x = 0; x < m; ++x) {
            b.left[a][x] = r.monoid.multiply(r.phi[a], x);
            b.right[a][x] = r.monoid.multiply(x, r.phi[a]);
        }
    }
    return b;
}

MonoidRecognizer biaction_to_monoid(const BiactionRecognizer& b) {
    const std::size_t m = b.carrier_size;
    const std::size_t k = b.alphabet.size();
    if (m == 0 || b.phi_empty >= m || b.accepting.size() != m || b.left.size() != k || b.right.size() != k) {
        throw std::invalid_argument("biaction: malformed recognizer");
    }
    for (std::size_t a = 0; a < k; ++a) {
        if (b.left[a].size() != m || b.right[a].size() != m) throw std::invalid_argument("biaction: malformed action table");
    }
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t c = 0; c < k; ++c)
            for (Element x = 0; x < m; ++x)
                if (b.right[c][b.left[a][x]] != b.left[a][b.right[c][x]]) {
                    throw std::logic_error("biaction: left and right actions do not commute");
                }
    for (std::size_t a = 0; a < k; ++a) {
        if (b.left[a][b.phi_empty] != b.right[a][b.phi_empty]) {
            throw std::logic_error("biaction: phi is not a morphism of biactions");
        }
    }
    // Representatives: rep[x] is a word with φ(rep[x]) = x.
    std::vector<std::optional<Word>> rep(m);
    rep[b.phi_empty] = Word{};
    std::deque<Element> queue{b.phi_empty};
    while (!queue.empty()) {
        const Element x = queue.front();
        queue.pop_front();
        for (std::size_t a = 0; a < k; ++a) {
            const Element y = b.left[a][x];
            if (!rep[y]) {
                rep[y] = b.alphabet[a] + *rep[x];
                queue.push_back(y);
            }
        }
    }
    for (Element x = 0; x < m; ++x) {
        if (!rep[x]) {
            throw ContractViolation("biaction: phi is not surjective (element " + std::to_string(x) + " unreachable)");
        }
    }
    std::vector<std::vector<Element>> mult(m, std::vector<Element>(m));
    for (Element x = 0; x < m; ++x) {
        for (Element y = 0; y < m; ++y) {
            const Element via_left = act_left(b, *rep[x], y);
            if (via_left != act_right(b, x, *rep[y])) {
                throw std::logic_error("biaction: product of " + std::to_string(x) + " and " + std::to_string(y) +
                                       " depends on the representatives");
            }
            mult[x][y] = via_left;
        }
    }
    FiniteMonoid monoid(std::move(mult), b.phi_empty);
    monoid.validate();
    std::vector<Element> phi(k);
    for (std::size_t a = 0; a < k; ++a) phi[a] = b.left[a][b.phi_empty];
    std::vector<Word> names;
    for (auto& w : rep) names.push_back(std::move(*w));
    return MonoidRecognizer{b.alphabet, std::move(monoid), std::move(phi), b.accepting, std::move(names)};
}

bool recognizers_isomorphic(const MonoidRecognizer& a, const MonoidRecognizer& b) {
    if (a.alphabet != b.alphabet || a.monoid.order() != b.monoid.order()) return false;
    const std::size_t m = a.monoid.order();
    std::vector<std::optional<Element>> h(m);
    h[a.monoid.identity()] = b.monoid.identity();
    std::deque<Element> queue{a.monoid.identity()};
    while (!queue.empty()) {
        const Element x = queue.front();
        queue.pop_front();
        for (std::size_t s = 0; s < a.alphabet.size(); ++s) {
            const Element xa = a.monoid.multiply(x, a.phi[s]);
            const Element ya = b.monoid.multiply(*h[x], b.phi[s]);
            if (!h[xa]) {
                h[xa] = ya;
                queue.push_back(xa);
            } else if (*h[xa] != ya) {
                return false;
            }
        }
    }
    std::vector<bool> hit(m, false);
    for (Element x = 0; x < m; ++x) {
        if (!h[x] || hit[*h[x]]) return false;
        hit[*h[x]] = true;
        if (a.accepting[x] != b.accepting[*h[x]]) return false;
    }
    return true;
}

dfa::Dfa to_dfa(const MonoidRecognizer& r) {
    const std::size_t m = r.monoid.order();
    std::vector<std::vector<State>> delta(m, std::vector<State>(r.alphabet.size()));
    std::vector<State> finals;
    for (Element x = 0; x < m; ++x) {
        for (std::size_t a = 0; a < r.alphabet.size(); ++a) delta[x][a] = r.monoid.multiply(x, r.phi[a]);
        if (r.accepting[x]) finals.push_back(x);
    }
    return dfa::Dfa(r.alphabet, m, r.monoid.identity(), finals, std::move(delta));
}

std::string to_text(const MonoidRecognizer& r) {
    const std::size_t m = r.monoid.order();
    std::vector<std::string> label(m);
    for (Element x = 0; x < m; ++x) label[x] = x < r.names.size() ? show_word(r.names[x]) : std::to_string(x);
    std::size_t width = 1;
    for (const auto& l : label) width = std::max(width, l.size());
    auto pad = [width](const std::string& s) { return std::string(width - s.size(), ' ') + s; };

    std::ostringstream out;
    out << "order " << m << "\n";
    out << pad("*") << " |";
    for (Element y = 0; y < m; ++y) out << ' ' << pad(label[y]);
    out << "\n" << std::string(width + 1, '-') << '+' << std::string(m * (width + 1), '-') << "\n";
    for (Element x = 0; x < m; ++x) {
        out << pad(label[x]) << " |";
        for (Element y = 0; y < m; ++y) out << ' ' << pad(label[r.monoid.multiply(x, y)]);
        out << "\n";
    }
    out << "identity " << label[r.monoid.identity()] << "\n";
    out << "phi";
    for (std::size_t a = 0; a < r.alphabet.size(); ++a) out << ' ' << r.alphabet[a] << '=' << label[r.phi[a]];
    out << "\naccepting";
    for (Element x = 0; x < m; ++x)
        if (r.accepting[x]) out << ' ' << label[x];
    out << "\n";
    return out.str();
}

} // namespace automin::monoid
