#include "tlmine/intersect.hpp"

#include <algorithm>

namespace tlmine {

namespace {

constexpr std::size_t kGallopRatio = 32;

void merge_intersect(std::span<const TidOrdinal> a, std::span<const TidOrdinal> b,
                     std::vector<TidOrdinal>& out)
{
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            ++i;
        } else if (b[j] < a[i]) {
            ++j;
        } else {
            out.push_back(a[i]);
            ++i;
            ++j;
        }
    }
}

// `small` is much shorter than `large`: for each element of `small`,
// gallop forward in `large` then binary search the bracketed range.
void gallop_intersect(std::span<const TidOrdinal> small, std::span<const TidOrdinal> large,
                      std::vector<TidOrdinal>& out)
{
    auto lo = large.begin();
    for (TidOrdinal x : small) {
        std::size_t step = 1;
        auto hi = lo;
        while (hi != large.end() && *hi < x) {
            lo = hi;
            auto remaining = static_cast<std::size_t>(large.end() - hi);
            hi += static_cast<std::ptrdiff_t>(std::min(step, remaining));
            step *= 2;
        }
        lo = std::lower_bound(lo, hi == large.end() ? hi : hi + 1, x);
        if (lo == large.end())
            return;
        if (*lo == x) {
            out.push_back(x);
            ++lo;
        }
    }
}

} // namespace

void intersect_into(std::span<const TidOrdinal> a, std::span<const TidOrdinal> b,
                    std::vector<TidOrdinal>& out)
{
    out.clear();
    if (a.size() > b.size())
        std::swap(a, b);
    if (a.empty())
        return;
    out.reserve(a.size());
    if (a.size() * kGallopRatio < b.size())
        gallop_intersect(a, b, out);
    else
        merge_intersect(a, b, out);
}

std::vector<TidOrdinal> intersect(std::span<const TidOrdinal> a, std::span<const TidOrdinal> b)
{
    std::vector<TidOrdinal> out;
    intersect_into(a, b, out);
    return out;
}

} // namespace tlmine
