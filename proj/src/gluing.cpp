#include "hz/gluing.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "hz/errors.hpp"

namespace hz {

std::uint64_t GenusHistogram::total() const {
    std::uint64_t t = 0;
    for (const auto &[g, c] : counts) {
        t += c;
    }
    return t;
}

void check_gluing_dprime(int dprime, const Limits &limits) {
    if (dprime < 1) {
        throw DomainError("d' must be at least 1");
    }
    if (dprime > limits.max_gluing_dprime || 2 * dprime > kMaxDegree) {
        throw GuardrailError("gluing enumeration guardrail: d' <= " + std::to_string(limits.max_gluing_dprime));
    }
}

namespace {

// Recursive matcher over a fixed prefix: lanes[] holds the partial involution.
class Matcher {
  public:
    Matcher(int n, const std::function<void(const Permutation &)> &visit) : n_(n), visit_(visit) {
        lanes_ = Permutation::identity(n).lanes();
    }

    void pair(int a, int b) {
        lanes_[a] = static_cast<std::uint8_t>(b);
        lanes_[b] = static_cast<std::uint8_t>(a);
        used_ |= (1U << a) | (1U << b);
    }

    void run() {
        const int first = first_free();
        if (first == n_) {
            visit_(Permutation::from_lanes(n_, lanes_));
            return;
        }
        for (int b = first + 1; b < n_; ++b) {
            if (used_ & (1U << b)) {
                continue;
            }
            const std::uint32_t saved = used_;
            pair(first, b);
            run();
            used_ = saved;
        }
    }

  private:
    int first_free() const {
        int i = 0;
        while (i < n_ && (used_ & (1U << i))) {
            ++i;
        }
        return i;
    }

    int n_;
    const std::function<void(const Permutation &)> &visit_;
    Permutation::Lanes lanes_{};
    std::uint32_t used_ = 0;
};

// Accumulates genera in batches so the face product runs through the batch kernel.
class GenusCounter {
  public:
    GenusCounter(int dprime, FaceProduct order)
        : dprime_(dprime), order_(order), gamma_(Permutation::long_cycle(2 * dprime)) {
        batch_.reserve(kBatch);
        products_.resize(kBatch);
    }

    void push(const Permutation &alpha) {
        batch_.push_back(alpha.lanes());
        if (batch_.size() == kBatch) {
            flush();
        }
    }

    void flush() {
        if (batch_.empty()) {
            return;
        }
        const auto &k = kernels::active();
        if (order_ == FaceProduct::rotation_after_pairing) {
            k.compose_left_batch(gamma_.data(), batch_.front().data(), products_.front().data(), batch_.size());
        } else {
            k.compose_right_batch(batch_.front().data(), gamma_.data(), products_.front().data(), batch_.size());
        }
        for (std::size_t j = 0; j < batch_.size(); ++j) {
            const int c = kernels::cycle_count(products_[j].data(), 2 * dprime_);
            ++counts_[(dprime_ + 1 - c) / 2];
        }
        batch_.clear();
    }

    std::map<int, std::uint64_t> &counts() { return counts_; }

  private:
    static constexpr std::size_t kBatch = 1024;
    int dprime_;
    FaceProduct order_;
    Permutation gamma_;
    std::vector<Permutation::Lanes> batch_;
    std::vector<Permutation::Lanes> products_;
    std::map<int, std::uint64_t> counts_;
};

} // namespace

void enumerate_matchings(int dprime, const std::function<void(const Permutation &)> &visit, const Limits &limits) {
    check_gluing_dprime(dprime, limits);
    Matcher(2 * dprime, visit).run();
}

std::vector<Permutation> matchings(int dprime, const Limits &limits) {
    std::vector<Permutation> out;
    enumerate_matchings(dprime, [&](const Permutation &p) { out.push_back(p); }, limits);
    return out;
}

int genus_of(const Permutation &alpha, int dprime, FaceProduct order) {
    if (alpha.degree() != 2 * dprime) {
        throw DomainError("genus_of: matching is not on {1..2d'}");
    }
    const Permutation gamma = Permutation::long_cycle(2 * dprime);
    const Permutation faces =
        order == FaceProduct::rotation_after_pairing ? compose(gamma, alpha) : compose(alpha, gamma);
    const int excess = dprime + 1 - faces.cycle_count();
    if (excess < 0 || excess % 2 != 0) {
        throw InternalError("genus_of: Euler characteristic is not even (input is not a matching?)");
    }
    return excess / 2;
}

GenusHistogram epsilon_bruteforce(int dprime, const Limits &limits, unsigned threads, FaceProduct order) {
    check_gluing_dprime(dprime, limits);
    const int n = 2 * dprime;
    GenusHistogram hist;
    hist.dprime = dprime;

    // One task per partner of side 1.
    std::vector<std::map<int, std::uint64_t>> partial(static_cast<std::size_t>(n - 1));
    const auto run_task = [&](int partner) {
        GenusCounter counter(dprime, order);
        const std::function<void(const Permutation &)> visit = [&](const Permutation &p) { counter.push(p); };
        Matcher m(n, visit);
        m.pair(0, partner);
        m.run();
        counter.flush();
        partial[partner - 1] = std::move(counter.counts());
    };

    const unsigned workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(n - 1)));
    if (workers == 1) {
        for (int partner = 1; partner < n; ++partner) {
            run_task(partner);
        }
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (int partner = 1 + static_cast<int>(w); partner < n; partner += static_cast<int>(workers)) {
                    run_task(partner);
                }
            });
        }
    }
    for (const auto &p : partial) {
        for (const auto &[g, c] : p) {
            hist.counts[g] += c;
        }
    }
    return hist;
}

} // namespace hz
