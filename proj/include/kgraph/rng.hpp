#ifndef KGRAPH_RNG_HPP
#define KGRAPH_RNG_HPP

#include <cstdint>
#include <vector>

namespace kgraph {

// splitmix64; deterministic across platforms so seeded fixtures and
// reports are reproducible.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n)
    std::size_t below(std::size_t n) { return n ? static_cast<std::size_t>(next() % n) : 0; }

    int in_range(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(below(static_cast<std::size_t>(hi - lo + 1)));
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

    template <class T>
    const T& pick(const std::vector<T>& v) {
        return v[below(v.size())];
    }

private:
    std::uint64_t state_;
};

}  // namespace kgraph

#endif
