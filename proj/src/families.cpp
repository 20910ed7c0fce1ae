#include "lrn/families.hpp"

#include "lrn/oracle.hpp"

#include <stdexcept>

namespace lrn::families {

namespace {

Int s_value(unsigned k, unsigned l, unsigned m)
{
    return pow(2UL, k) * pow(11UL, l) * pow(19UL, m);
}

void push_if_valid(std::vector<N2Entry>& out, const Int& big, const Int& small,
                   unsigned k, unsigned l, unsigned m, N2CaseSelector sel, bool halve)
{
    Int x = abs(big - small);
    Int y = big + small;
    if (halve) {
        x /= 2;
        y /= 2;
    }
    if (x == 0 || gcd(x, y) != 1)
        return;
    for (const auto& e : out)
        if (e.solution.x == x && e.solution.y == y)
            return;
    out.push_back({{x, y, k, l, m, 2}, sel});
}

}  // namespace

Solution family_n1(const Int& t, unsigned k, unsigned l, unsigned m)
{
    if (t < 1)
        throw std::invalid_argument("family_n1: t must be positive");
    return {t, t * t + s_value(k, l, m), k, l, m, 1};
}

std::vector<N2Entry> enumerate_n2_cases(unsigned k, unsigned l, unsigned m)
{
    std::vector<N2Entry> out;
    if (k == 0) {
        const N2Case kind = (l % 2 == m % 2) ? N2Case::XEven : N2Case::XOdd;
        for (unsigned l1 : {0u, l}) {
            for (unsigned m1 : {0u, m}) {
                if (l1 == l && m1 == m)
                    continue;
                push_if_valid(out, pow(11UL, l - l1) * pow(19UL, m - m1),
                              pow(11UL, l1) * pow(19UL, m1), k, l, m, {kind, 0, l1, m1}, true);
            }
        }
    } else if (k >= 3) {
        for (unsigned k1 : {0u, k - 2}) {
            for (unsigned l1 : {0u, l}) {
                for (unsigned m1 : {0u, m}) {
                    if (k1 == k - 2 && l1 == l && m1 == m)
                        continue;
                    push_if_valid(out, s_value(k - k1 - 2, l - l1, m - m1), s_value(k1, l1, m1),
                                  k, l, m, {N2Case::BothOdd, k1, l1, m1}, false);
                }
            }
        }
    }
    for (const auto& e : out)
        if (!oracle::verify_solution(e.solution))
            throw std::logic_error("n = 2 family produced " + e.solution.to_string());
    return out;
}

std::vector<Solution> enumerate_n2(unsigned k, unsigned l, unsigned m)
{
    std::vector<Solution> out;
    for (auto& e : enumerate_n2_cases(k, l, m))
        out.push_back(std::move(e.solution));
    sort_unique(out);
    return out;
}

std::vector<Solution> solve_n2(const SearchBounds& bounds)
{
    bounds.validate();
    std::vector<Solution> out;
    for (const auto& c : smooth_values_below(bounds.max_rhs + 1, bounds.caps())) {
        for (auto& s : enumerate_n2(c.exponents[0], c.exponents[1], c.exponents[2]))
            if (s.y * s.y <= bounds.max_rhs)
                out.push_back(std::move(s));
    }
    sort_unique(out);
    return out;
}

std::vector<Solution> list_n1(const SearchBounds& bounds, const Int& limit)
{
    std::vector<Solution> out;
    for (const auto& c : smooth_values_below(limit, bounds.caps())) {
        for (Int t = 1; t * t + c.value <= limit; ++t) {
            if (gcd(t, c.value) != 1)
                continue;
            out.push_back(family_n1(t, c.exponents[0], c.exponents[1], c.exponents[2]));
        }
    }
    sort_unique(out);
    return out;
}

}  // namespace lrn::families
