#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

// Symbolic space {1,...,d}^N: points with eventually-constant tails,
// cylinders, the 2^{-m} metric and the histogram coordinate.
namespace hr {

using Symbol = int; // 1..d

struct Alphabet {
    int d;
    explicit Alphabet(int d_);
    std::size_t num_words(int depth) const; // d^depth
};

/// A point of the symbolic space, stored as a finite prefix followed by a
/// constant tail symbol. The representation is canonical: trailing prefix
/// entries equal to the tail are stripped, so operator== decides equality
/// of the underlying sequences.
class Point {
public:
    Point(std::vector<Symbol> prefix, Symbol tail);
    static Point constant(Symbol s);

    Symbol coord(std::size_t k) const; // 1-based, total
    const std::vector<Symbol>& prefix() const { return prefix_; }
    Symbol tail() const { return tail_; }
    // coordinates beyond this horizon are all equal to tail()
    std::size_t horizon() const { return prefix_.size(); }

    bool operator==(const Point&) const = default;

    std::string str() const;                 // "1,2|1"
    static Point parse(std::string_view s);

private:
    std::vector<Symbol> prefix_;
    Symbol tail_;
};

struct Cylinder {
    std::vector<Symbol> word; // length k >= 1

    std::size_t depth() const { return word.size(); }
    bool operator==(const Cylinder&) const = default;
    std::string str() const;                 // "1,1,2,1,2"
    static Cylinder parse(std::string_view s);
};

Point concat(const Alphabet& a, Symbol i, const Point& x);
Point shift(const Point& x);
double metric(const Point& x, const Point& z);

// t = sum a_i 2^{-(i+1)}; only defined for d = 2
double t_coordinate(const Alphabet& a, const Cylinder& c);

std::vector<Cylinder> enumerate_cylinders(const Alphabet& a, int k);

// lexicographic index of a depth-k word, 0-based
std::size_t word_index(const Alphabet& a, const std::vector<Symbol>& word);
std::vector<Symbol> index_word(const Alphabet& a, int depth, std::size_t index);

// first `depth` coordinates of x as a word
std::vector<Symbol> leading_word(const Point& x, int depth);

// the point whose prefix is the cylinder word, with constant tail 1
Point cylinder_point(const Cylinder& c);

} // namespace hr
