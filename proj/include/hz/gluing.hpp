#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "hz/limits.hpp"
#include "hz/permutation.hpp"

namespace hz {

/// Number of ways of gluing the sides of a 2d'-gon into a genus-g surface, per g.
struct GenusHistogram {
    int dprime = 0;
    std::map<int, std::uint64_t> counts;

    std::uint64_t at(int g) const {
        const auto it = counts.find(g);
        return it == counts.end() ? 0 : it->second;
    }
    std::uint64_t total() const;
    friend bool operator==(const GenusHistogram &, const GenusHistogram &) = default;
};

/// Which product of the boundary rotation and the pairing is used to count faces.
/// Both are conjugate, so the histogram cannot depend on the choice.
enum class FaceProduct { rotation_after_pairing, pairing_after_rotation };

void check_gluing_dprime(int dprime, const Limits &limits);

/// Streams the (2d'-1)!! fixed-point-free involutions of {1..2d'}: pair the
/// smallest unpaired side with each larger candidate in increasing order, recurse.
void enumerate_matchings(int dprime, const std::function<void(const Permutation &)> &visit,
                         const Limits &limits = {});

/// Materialized enumerate_matchings.
std::vector<Permutation> matchings(int dprime, const Limits &limits = {});

/// Genus of the surface glued from the 2d'-gon by `alpha`:
/// with gamma = (1 2 ... 2d') and c = #cycles(gamma∘alpha), g = (d' + 1 - c)/2.
int genus_of(const Permutation &alpha, int dprime, FaceProduct order = FaceProduct::rotation_after_pairing);

/// Histogram of genus_of over all matchings. `threads` > 1 partitions the
/// enumeration by the partner of side 1; the merged result is identical.
GenusHistogram epsilon_bruteforce(int dprime, const Limits &limits = {}, unsigned threads = 1,
                                  FaceProduct order = FaceProduct::rotation_after_pairing);

} // namespace hz
