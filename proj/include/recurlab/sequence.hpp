#pragma once

#include <array>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "recurlab/error.hpp"
#include "recurlab/numeric.hpp"

namespace recurlab {

/// Order-k linear recurrence s_{n+k} = sum_i c_i * s_{n+i} together with an
/// anchor block of k consecutive terms. Because |c_0| = 1 the inverted step
/// s_n = (s_{n+k} - sum_{i>=1} c_i s_{n+i}) / c_0 is integral, so one anchor
/// block determines a unique bi-infinite sequence.
struct RecurrenceSpec {
    int order = 0;
    std::vector<Int> forward_coeffs;  ///< c_0 .. c_{k-1}
    long long anchor_index = 0;       ///< index of anchor_terms[0]
    std::vector<Int> anchor_terms;

    void validate() const {
        if (order < 1) throw invalid_spec_error("recurrence order must be positive");
        if (static_cast<int>(forward_coeffs.size()) != order)
            throw invalid_spec_error("coefficient count must equal the order");
        if (static_cast<int>(anchor_terms.size()) != order)
            throw invalid_spec_error("anchor block must have exactly `order` terms");
        if (forward_coeffs[0] != 1 && forward_coeffs[0] != -1)
            throw invalid_spec_error("|c0| must be 1 so the backward step stays integral");
    }
};

/// Bi-infinite sequence defined by a RecurrenceSpec, extended lazily in both
/// directions. The cache is an optimization only: results never depend on it.
///
/// Concurrency: terms are stored in append-only segments behind an atomic
/// published-count watermark. Warm reads are a single acquire load (scan
/// kernels hammer this path from every thread), extension happens under a
/// mutex and publishes with a release store.
template <class Scalar>
class BasicSequence {
    static constexpr long long kSegBits = 10;
    static constexpr long long kSegSize = 1LL << kSegBits;
    static constexpr long long kMaxSegs = (kIndexLimit >> kSegBits) + 2;
    using Segment = std::array<Scalar, kSegSize>;

public:
    explicit BasicSequence(RecurrenceSpec spec, std::vector<Scalar> anchors)
        : spec_(std::move(spec)) {
        spec_.validate();
        if (anchors.size() != static_cast<size_t>(spec_.order))
            throw invalid_spec_error("anchor block must have exactly `order` terms");
        std::lock_guard lock(mu_);
        for (auto& a : anchors) append(fwd_, std::move(a));
        fwd_.count.store(spec_.order, std::memory_order_release);
    }

    ~BasicSequence() {
        for (auto& seg : fwd_.segs) delete seg.load(std::memory_order_relaxed);
        for (auto& seg : bwd_.segs) delete seg.load(std::memory_order_relaxed);
    }

    BasicSequence(const BasicSequence&) = delete;
    BasicSequence& operator=(const BasicSequence&) = delete;

    const RecurrenceSpec& spec() const { return spec_; }

    Scalar term(long long n) const {
        if (n > kIndexLimit || n < -kIndexLimit)
            throw index_limit_error("index magnitude exceeds the evaluation cap of 10^6");
        long long off = n - spec_.anchor_index;
        const Dir& dir = off >= 0 ? fwd_ : bwd_;
        long long slot = off >= 0 ? off : -off - 1;
        if (slot < dir.count.load(std::memory_order_acquire)) return dir.at(slot);
        extend(n);
        return dir.at(slot);
    }

    /// Terms at from..to inclusive. Throws empty_range_error when from > to.
    std::vector<Scalar> window(long long from, long long to) const {
        if (from > to) throw empty_range_error("empty range: from > to");
        term(from);
        term(to);
        std::vector<Scalar> out;
        out.reserve(static_cast<size_t>(to - from + 1));
        for (long long n = from; n <= to; ++n) out.push_back(term(n));
        return out;
    }

private:
    // One growth direction: fwd_ holds s(anchor + slot), bwd_ holds
    // s(anchor - 1 - slot). Entries below `count` are immutable.
    struct Dir {
        std::array<std::atomic<Segment*>, kMaxSegs> segs{};
        std::atomic<long long> count{0};  ///< published extent, readable lock-free
        long long pending = 0;            ///< writer-side extent, guarded by mu_

        const Scalar& at(long long slot) const {
            return (*segs[static_cast<size_t>(slot >> kSegBits)].load(
                std::memory_order_relaxed))[static_cast<size_t>(slot & (kSegSize - 1))];
        }
    };

    // Writer-side append; requires mu_. The watermark is published by the
    // caller once the batch is complete.
    void append(Dir& dir, Scalar value) const {
        long long slot = dir.pending;
        auto& cell = dir.segs[static_cast<size_t>(slot >> kSegBits)];
        Segment* seg = cell.load(std::memory_order_relaxed);
        if (seg == nullptr) {
            seg = new Segment();
            cell.store(seg, std::memory_order_release);
        }
        (*seg)[static_cast<size_t>(slot & (kSegSize - 1))] = std::move(value);
        ++dir.pending;
    }

    void extend(long long n) const {
        std::lock_guard lock(mu_);
        const int k = spec_.order;
        long long off = n - spec_.anchor_index;
        // term at offset `o`, readable by the writer before publication
        auto at_off = [&](long long o) -> const Scalar& {
            return o >= 0 ? fwd_.at(o) : bwd_.at(-o - 1);
        };
        while (off >= fwd_.pending) {
            // s_{m+k} = sum c_i s_{m+i} with m+k = next offset
            long long base = fwd_.pending - k;
            Scalar next = at_off(base) * spec_.forward_coeffs[0];
            for (int i = 1; i < k; ++i) next += at_off(base + i) * spec_.forward_coeffs[i];
            append(fwd_, std::move(next));
        }
        while (-off - 1 >= bwd_.pending) {
            // s_m = (s_{m+k} - sum_{i>=1} c_i s_{m+i}) / c0, with |c0| = 1
            long long m_off = -bwd_.pending - 1;
            Scalar v = at_off(m_off + k);
            for (int i = 1; i < k; ++i) v -= at_off(m_off + i) * spec_.forward_coeffs[i];
            if (spec_.forward_coeffs[0] == -1) v = -v;
            append(bwd_, std::move(v));
        }
        fwd_.count.store(fwd_.pending, std::memory_order_release);
        bwd_.count.store(bwd_.pending, std::memory_order_release);
    }

    RecurrenceSpec spec_;
    mutable Dir fwd_;
    mutable Dir bwd_;
    mutable std::mutex mu_;
};

using Sequence = BasicSequence<Int>;
using RatSequence = BasicSequence<Rat>;

/// The three built-in families.
///   fibonacci:  s_{n+2} = s_n + s_{n+1},  anchors F_0 = 0, F_1 = 1
///   narayana:   s_{n+3} = s_n + s_{n+2},  anchors E_0 = 0, E_1 = E_2 = 1
///   padovan:    s_{n+3} = s_n + s_{n+1},  anchors D_0 = 1, D_1 = D_2 = 0
enum class Family { fibonacci, narayana, padovan };

int family_order(Family f);
char family_letter(Family f);
Family family_from_letter(std::string_view s);
RecurrenceSpec family_spec(Family f);

/// Shared, lazily extended instance of a built-in family.
const Sequence& sequence(Family f);

/// Exact term at any integer index.
Int term(Family f, long long n);

/// Terms at from..to inclusive.
std::vector<Int> term_range(Family f, long long from, long long to);

/// Shifted-sequence term via the linear combination of base terms:
///   F'_n = a F_{n-2} + b F_{n-1}
///   E'_n = a' E_{n-3} + b' E_{n-4} + c' E_{n-2}
///   D'_n = a'' D_{n-1} + b'' D_{n+1} + c'' D_n
/// so the initial block sits at indices 1..k (F'_1 = a, E'_1 = a', D'_1 = a'').
Rat shifted_term(Family base, std::span<const Rat> coeffs, long long n);

/// Direct-iteration oracle: run the base recurrence from the initial block at
/// indices 1..k and return terms at from..to. Agrees with shifted_term
/// everywhere; kept as the independent route.
std::vector<Rat> iterate_custom(Family base, std::span<const Rat> initials, long long from,
                                long long to);

/// Tagged family value: a built-in sequence or a coefficient-shifted variant.
struct SeqFamily {
    Family base = Family::fibonacci;
    std::vector<Rat> shift;  ///< empty -> the plain base sequence

    bool is_shifted() const { return !shift.empty(); }
};

/// Term of a SeqFamily as an exact rational; validates shift arity.
Rat term(const SeqFamily& fam, long long n);

/// Contiguous copied snapshot of a built-in family, for index-arithmetic
/// access inside tight kernels.
class Window {
public:
    Window(Family f, long long lo, long long hi)
        : lo_(lo), terms_(sequence(f).window(lo, hi)) {}

    const Int& operator[](long long n) const {
        long long off = n - lo_;
        if (off < 0 || off >= static_cast<long long>(terms_.size())) std::abort();
        return terms_[static_cast<size_t>(off)];
    }

private:
    long long lo_;
    std::vector<Int> terms_;
};

}  // namespace recurlab
