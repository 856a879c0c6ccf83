#ifndef KGRAPH_DEGREE_HPP
#define KGRAPH_DEGREE_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace kgraph {

// Element of N^k with the componentwise order. N^k is lattice ordered:
// every pair has a join (componentwise max) and meet (componentwise min).
class Degree {
public:
    Degree() = default;
    explicit Degree(std::vector<int> coords) : coords_(std::move(coords)) {
        for (int c : coords_)
            if (c < 0) throw std::invalid_argument("degree coordinates must be non-negative");
    }

    static Degree zero(std::size_t rank) { return Degree(std::vector<int>(rank, 0)); }

    static Degree unit(std::size_t rank, std::size_t color_index) {
        Degree d = zero(rank);
        d.coords_.at(color_index) = 1;
        return d;
    }

    std::size_t rank() const { return coords_.size(); }
    int operator[](std::size_t i) const { return coords_[i]; }
    const std::vector<int>& coords() const { return coords_; }

    // |p| = sum of coordinates; the length of any path of this degree.
    int total() const { return std::accumulate(coords_.begin(), coords_.end(), 0); }
    bool is_zero() const { return total() == 0; }

    Degree join(const Degree& o) const { return zip(o, [](int a, int b) { return std::max(a, b); }); }
    Degree meet(const Degree& o) const { return zip(o, [](int a, int b) { return std::min(a, b); }); }
    Degree plus(const Degree& o) const { return zip(o, [](int a, int b) { return a + b; }); }

    // Componentwise difference; only defined when o <= *this.
    Degree minus(const Degree& o) const {
        return zip(o, [](int a, int b) {
            if (b > a) throw std::invalid_argument("degree subtraction underflow");
            return a - b;
        });
    }

    bool leq(const Degree& o) const {
        check_rank(o);
        for (std::size_t i = 0; i < coords_.size(); ++i)
            if (coords_[i] > o.coords_[i]) return false;
        return true;
    }

    bool operator==(const Degree& o) const { return coords_ == o.coords_; }
    bool operator!=(const Degree& o) const { return coords_ != o.coords_; }
    bool operator<(const Degree& o) const { return coords_ < o.coords_; }  // lexicographic, for containers

    std::string to_string() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (i) os << ',';
            os << coords_[i];
        }
        return os.str();
    }

    // Parses "a,b,..." with exactly `rank` coordinates.
    static Degree parse(const std::string& text, std::size_t rank) {
        std::vector<int> coords;
        std::istringstream is(text);
        std::string item;
        while (std::getline(is, item, ',')) {
            std::size_t pos = 0;
            int value = 0;
            try {
                value = std::stoi(item, &pos);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad degree component '" + item + "'");
            }
            if (pos != item.size() || value < 0)
                throw std::invalid_argument("bad degree component '" + item + "'");
            coords.push_back(value);
        }
        if (coords.size() != rank)
            throw std::invalid_argument("degree '" + text + "' has wrong rank");
        return Degree(std::move(coords));
    }

private:
    template <class F>
    Degree zip(const Degree& o, F f) const {
        check_rank(o);
        Degree out;
        out.coords_.reserve(coords_.size());
        for (std::size_t i = 0; i < coords_.size(); ++i)
            out.coords_.push_back(f(coords_[i], o.coords_[i]));
        return out;
    }
    void check_rank(const Degree& o) const {
        if (coords_.size() != o.coords_.size())
            throw std::invalid_argument("degree rank mismatch");
    }

    std::vector<int> coords_;
};

}  // namespace kgraph

#endif
