#include "abp/sequence.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace abp {

void SequenceSource::for_each_index(std::int64_t first, std::int64_t last, const Visitor& visit) const
{
    for (std::int64_t n = std::max<std::int64_t>(first, 1); n <= last; ++n)
        visit(n, term(n));
}

void SequenceSource::for_each_value(std::int64_t lo, std::int64_t hi, const Visitor& visit) const
{
    lo = std::max<std::int64_t>(lo, 1);
    if (lo > hi)
        return;
    for (std::int64_t n = count(lo - 1) + 1;; ++n) {
        std::int64_t v = term(n);
        if (v > hi)
            break;
        visit(n, v);
    }
}

ComplementSequence::ComplementSequence(SequencePtr first, SequencePtr second)
    : first_(std::move(first)), second_(std::move(second))
{
}

std::int64_t ComplementSequence::count(std::int64_t m) const
{
    if (m <= 0)
        return 0;
    return m - first_->count(m) - second_->count(m);
}

bool ComplementSequence::contains(std::int64_t m) const
{
    return m >= 1 && !first_->contains(m) && !second_->contains(m);
}

std::int64_t ComplementSequence::term(std::int64_t n) const
{
    if (n <= 0)
        return 0;
    // Smallest m with count(m) >= n.
    std::int64_t lo = n - 1, hi = 2 * n;
    while (count(hi) < n) {
        lo = hi;
        if (hi > (INT64_MAX >> 2))
            throw std::overflow_error("complement term out of range");
        hi *= 2;
    }
    while (hi - lo > 1) {
        std::int64_t mid = lo + (hi - lo) / 2;
        if (count(mid) >= n)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

void ComplementSequence::for_each_index(std::int64_t first, std::int64_t last, const Visitor& visit) const
{
    first = std::max<std::int64_t>(first, 1);
    if (first > last)
        return;
    std::int64_t n = first;
    for (std::int64_t m = term(first); n <= last; ++m) {
        if (contains(m))
            visit(n++, m);
    }
}

void ComplementSequence::for_each_value(std::int64_t lo, std::int64_t hi, const Visitor& visit) const
{
    lo = std::max<std::int64_t>(lo, 1);
    if (lo > hi)
        return;
    std::int64_t n = count(lo - 1);
    for (std::int64_t m = lo; m <= hi; ++m) {
        if (contains(m))
            visit(++n, m);
    }
}

std::string ComplementSequence::describe() const
{
    return "complement of (" + first_->describe() + ") and (" + second_->describe() + ")";
}

DroppedTermSequence::DroppedTermSequence(SequencePtr base, std::int64_t from) : base_(std::move(base))
{
    dropped_ = base_->term(base_->count(from - 1) + 1);
}

std::int64_t DroppedTermSequence::term(std::int64_t n) const
{
    if (n <= 0)
        return 0;
    std::int64_t v = base_->term(n);
    return v < dropped_ ? v : base_->term(n + 1);
}

std::int64_t DroppedTermSequence::count(std::int64_t m) const
{
    return base_->count(m) - (m >= dropped_ ? 1 : 0);
}

std::string DroppedTermSequence::describe() const
{
    return base_->describe() + " without " + std::to_string(dropped_);
}

} // namespace abp
