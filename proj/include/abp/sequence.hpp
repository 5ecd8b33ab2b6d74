#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>

namespace abp {

// A strictly increasing sequence of positive integers s(1) < s(2) < ...
// with s(0) = 0. Implementations are immutable and safe to share between
// threads.
class SequenceSource {
public:
    using Visitor = std::function<void(std::int64_t n, std::int64_t value)>;

    virtual ~SequenceSource() = default;

    virtual std::int64_t term(std::int64_t n) const = 0;
    // Number of terms <= m; 0 for m <= 0.
    virtual std::int64_t count(std::int64_t m) const = 0;
    virtual bool contains(std::int64_t m) const { return m >= 1 && count(m) - count(m - 1) == 1; }

    // Calls visit(n, s(n)) for n = first..last.
    virtual void for_each_index(std::int64_t first, std::int64_t last, const Visitor& visit) const;
    // Calls visit(n, s(n)) for every term with lo <= s(n) <= hi.
    virtual void for_each_value(std::int64_t lo, std::int64_t hi, const Visitor& visit) const;

    virtual std::string describe() const = 0;
};

using SequencePtr = std::shared_ptr<const SequenceSource>;

// The complement of two disjoint sequences in the positive integers.
class ComplementSequence final : public SequenceSource {
public:
    ComplementSequence(SequencePtr first, SequencePtr second);

    std::int64_t term(std::int64_t n) const override;
    std::int64_t count(std::int64_t m) const override;
    bool contains(std::int64_t m) const override;
    void for_each_index(std::int64_t first, std::int64_t last, const Visitor& visit) const override;
    void for_each_value(std::int64_t lo, std::int64_t hi, const Visitor& visit) const override;
    std::string describe() const override;

private:
    SequencePtr first_, second_;
};

// A copy of `base` with its first term >= `from` removed. Used to check that
// the verifier notices a missing integer.
class DroppedTermSequence final : public SequenceSource {
public:
    DroppedTermSequence(SequencePtr base, std::int64_t from);

    std::int64_t dropped() const noexcept { return dropped_; }

    std::int64_t term(std::int64_t n) const override;
    std::int64_t count(std::int64_t m) const override;
    std::string describe() const override;

private:
    SequencePtr base_;
    std::int64_t dropped_;
};

} // namespace abp
