#ifndef RESOLVEDIM_FAMILIES_HPP
#define RESOLVEDIM_FAMILIES_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "resolvedim/graph.hpp"

namespace resolvedim {

/// Deterministic stream used by all seeded generators.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound) by rejection
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

private:
    std::uint64_t state_;
};

struct FamilySpec {
    std::string name; // path | cycle | complete | complete_bipartite_2 | wheel |
                      // bipyramid | max_outerplanar | outerplanar_random |
                      // stacked_triangulation
    std::map<std::string, std::int64_t> params; // n, seed, ...
};

/// Known family names, in the CLI's canonical order.
const std::vector<std::string>& family_names();

/// Generates the family member with certificates attached (outer_cycle for
/// outerplanar families, faces for maximal planar ones, family tag always).
/// Same seed, same graph. Throws DomainError with the violated constraint.
Graph generate(const FamilySpec& spec);

/// Mixed corpus of stacked triangulations and bipyramids with total vertex
/// counts in [4, max_n], deterministic order, deduplicated by (family, params).
std::vector<Graph> conjecture_corpus(int max_n, std::uint64_t seed);

} // namespace resolvedim

#endif
