#include "hr/symbolic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hr {

Alphabet::Alphabet(int d_) : d(d_) {
    if (d < 2) throw std::invalid_argument("alphabet requires d >= 2");
}

std::size_t Alphabet::num_words(int depth) const {
    if (depth < 0) throw std::invalid_argument("negative depth");
    std::size_t n = 1;
    for (int i = 0; i < depth; ++i) n *= static_cast<std::size_t>(d);
    return n;
}

Point::Point(std::vector<Symbol> prefix, Symbol tail)
    : prefix_(std::move(prefix)), tail_(tail) {
    while (!prefix_.empty() && prefix_.back() == tail_) prefix_.pop_back();
}

Point Point::constant(Symbol s) { return Point({}, s); }

Symbol Point::coord(std::size_t k) const {
    if (k == 0) throw std::invalid_argument("coordinates are 1-based");
    return k <= prefix_.size() ? prefix_[k - 1] : tail_;
}

std::string Point::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < prefix_.size(); ++i) {
        if (i) os << ',';
        os << prefix_[i];
    }
    os << '|' << tail_;
    return os.str();
}

namespace {

std::vector<Symbol> parse_symbol_list(std::string_view s) {
    std::vector<Symbol> out;
    if (s.empty()) return out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t next = s.find(',', pos);
        std::string tok(s.substr(pos, next == std::string_view::npos ? next : next - pos));
        out.push_back(std::stoi(tok));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return out;
}

} // namespace

Point Point::parse(std::string_view s) {
    auto bar = s.find('|');
    if (bar == std::string_view::npos)
        throw std::invalid_argument("point literal must contain '|': " + std::string(s));
    auto prefix = parse_symbol_list(s.substr(0, bar));
    Symbol tail = std::stoi(std::string(s.substr(bar + 1)));
    return Point(std::move(prefix), tail);
}

std::string Cylinder::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) os << ',';
        os << word[i];
    }
    return os.str();
}

Cylinder Cylinder::parse(std::string_view s) {
    Cylinder c{parse_symbol_list(s)};
    if (c.word.empty()) throw std::invalid_argument("empty cylinder literal");
    return c;
}

Point concat(const Alphabet& a, Symbol i, const Point& x) {
    if (i < 1 || i > a.d) throw std::out_of_range("concat: symbol out of range");
    std::vector<Symbol> p;
    p.reserve(x.prefix().size() + 1);
    p.push_back(i);
    p.insert(p.end(), x.prefix().begin(), x.prefix().end());
    return Point(std::move(p), x.tail());
}

Point shift(const Point& x) {
    if (x.prefix().empty()) return x;
    return Point({x.prefix().begin() + 1, x.prefix().end()}, x.tail());
}

double metric(const Point& x, const Point& z) {
    std::size_t n = std::max(x.horizon(), z.horizon());
    for (std::size_t k = 1; k <= n; ++k)
        if (x.coord(k) != z.coord(k)) return std::ldexp(1.0, -static_cast<int>(k));
    if (x.tail() != z.tail()) return std::ldexp(1.0, -static_cast<int>(n + 1));
    return 0.0;
}

double t_coordinate(const Alphabet& a, const Cylinder& c) {
    if (a.d != 2)
        throw std::invalid_argument("t coordinate is defined only for d = 2");
    double t = 0.0;
    for (std::size_t i = 0; i < c.word.size(); ++i)
        t += c.word[i] * std::ldexp(1.0, -static_cast<int>(i + 2));
    return t;
}

std::vector<Cylinder> enumerate_cylinders(const Alphabet& a, int k) {
    if (k < 1) throw std::invalid_argument("cylinder depth must be >= 1");
    std::size_t n = a.num_words(k);
    std::vector<Cylinder> out;
    out.reserve(n);
    for (std::size_t idx = 0; idx < n; ++idx) out.push_back(Cylinder{index_word(a, k, idx)});
    return out;
}

std::size_t word_index(const Alphabet& a, const std::vector<Symbol>& word) {
    std::size_t idx = 0;
    for (Symbol s : word) {
        if (s < 1 || s > a.d) throw std::out_of_range("word symbol out of range");
        idx = idx * static_cast<std::size_t>(a.d) + static_cast<std::size_t>(s - 1);
    }
    return idx;
}

std::vector<Symbol> index_word(const Alphabet& a, int depth, std::size_t index) {
    std::vector<Symbol> w(static_cast<std::size_t>(depth));
    for (int i = depth - 1; i >= 0; --i) {
        w[static_cast<std::size_t>(i)] = static_cast<Symbol>(index % static_cast<std::size_t>(a.d)) + 1;
        index /= static_cast<std::size_t>(a.d);
    }
    return w;
}

std::vector<Symbol> leading_word(const Point& x, int depth) {
    std::vector<Symbol> w(static_cast<std::size_t>(depth));
    for (int k = 1; k <= depth; ++k) w[static_cast<std::size_t>(k - 1)] = x.coord(static_cast<std::size_t>(k));
    return w;
}

Point cylinder_point(const Cylinder& c) { return Point(c.word, 1); }

} // namespace hr
