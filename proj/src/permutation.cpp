#include "hz/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "hz/errors.hpp"

namespace hz {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (const int p : parts_) {
        if (p < 1) {
            throw DomainError("partition parts must be positive");
        }
        n_ += p;
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

std::string Partition::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        out += (i ? "," : "") + std::to_string(parts_[i]);
    }
    return out + ")";
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int> &current, std::vector<Partition> &out) {
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        current.push_back(p);
        partitions_rec(remaining - p, p, current, out);
        current.pop_back();
    }
}

void check_degree(int n) {
    if (n < 0 || n > kMaxDegree) {
        throw GuardrailError("permutation degree " + std::to_string(n) + " outside 0.." + std::to_string(kMaxDegree));
    }
}

} // namespace

std::vector<Partition> Partition::all(int n) {
    std::vector<Partition> out;
    std::vector<int> current;
    partitions_rec(n, n, current, out);
    return out;
}

Permutation Permutation::identity(int n) {
    check_degree(n);
    Permutation p;
    std::iota(p.lanes_.begin(), p.lanes_.end(), std::uint8_t{0});
    p.n_ = static_cast<std::uint8_t>(n);
    return p;
}

Permutation Permutation::from_one_line(std::span<const int> images) {
    const int n = static_cast<int>(images.size());
    Permutation p = identity(n);
    std::uint32_t seen = 0;
    for (int i = 0; i < n; ++i) {
        const int v = images[i];
        if (v < 1 || v > n || (seen & (1U << (v - 1)))) {
            throw DomainError("one-line notation is not a bijection of {1.." + std::to_string(n) + "}");
        }
        seen |= 1U << (v - 1);
        p.lanes_[i] = static_cast<std::uint8_t>(v - 1);
    }
    return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>> &cycles) {
    Permutation p = identity(n);
    std::uint32_t seen = 0;
    for (const auto &cycle : cycles) {
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            const int a = cycle[i];
            if (a < 1 || a > n || (seen & (1U << (a - 1)))) {
                throw DomainError("cycles are not disjoint cycles on {1.." + std::to_string(n) + "}");
            }
            seen |= 1U << (a - 1);
            p.lanes_[a - 1] = static_cast<std::uint8_t>(cycle[(i + 1) % cycle.size()] - 1);
        }
    }
    return p;
}

Permutation Permutation::transposition(int n, int a, int b) {
    if (a == b) {
        throw DomainError("transposition needs two distinct points");
    }
    return from_cycles(n, {{a, b}});
}

Permutation Permutation::long_cycle(int n) {
    Permutation p = identity(n);
    for (int i = 0; i < n; ++i) {
        p.lanes_[i] = static_cast<std::uint8_t>((i + 1) % n);
    }
    return p;
}

Permutation Permutation::from_lanes(int n, const Lanes &lanes) {
    Permutation p;
    p.lanes_ = lanes;
    p.n_ = static_cast<std::uint8_t>(n);
    return p;
}

std::vector<int> Permutation::one_line() const {
    std::vector<int> out(n_);
    for (int i = 0; i < n_; ++i) {
        out[i] = lanes_[i] + 1;
    }
    return out;
}

Permutation Permutation::inverse() const {
    Permutation p = identity(n_);
    for (int i = 0; i < n_; ++i) {
        p.lanes_[lanes_[i]] = static_cast<std::uint8_t>(i);
    }
    return p;
}

Partition Permutation::cycle_type() const {
    std::vector<int> parts;
    std::uint32_t seen = 0;
    for (int i = 0; i < n_; ++i) {
        if (seen & (1U << i)) {
            continue;
        }
        int len = 0;
        for (int j = i; !(seen & (1U << j)); j = lanes_[j]) {
            seen |= 1U << j;
            ++len;
        }
        parts.push_back(len);
    }
    return Partition(std::move(parts));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < n_; ++i) {
        if (lanes_[i] != i) {
            return false;
        }
    }
    return true;
}

std::string Permutation::to_string() const {
    std::string out;
    std::uint32_t seen = 0;
    for (int i = 0; i < n_; ++i) {
        if ((seen & (1U << i)) || lanes_[i] == i) {
            continue;
        }
        out += "(";
        for (int j = i; !(seen & (1U << j)); j = lanes_[j]) {
            seen |= 1U << j;
            out += (j == i ? "" : " ") + std::to_string(j + 1);
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

Permutation compose(const Permutation &p, const Permutation &q) {
    if (p.degree() != q.degree()) {
        throw DomainError("compose: degree mismatch");
    }
    Permutation::Lanes out;
    kernels::active().compose(p.data(), q.data(), out.data());
    return Permutation::from_lanes(p.degree(), out);
}

void for_each_permutation(int n, const std::function<void(const Permutation &)> &visit) {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    do {
        visit(Permutation::from_one_line(images));
    } while (std::next_permutation(images.begin(), images.end()));
}

} // namespace hz
