#include "ebcast/formulas.hpp"

#include "ebcast/errors.hpp"

#include <numeric>
#include <string>

namespace ebcast {
namespace {

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

FormulaResult exact(Quantity q, long long value, std::string source) {
    FormulaResult r;
    r.quantity = q;
    r.value = value;
    r.source = std::move(source);
    return r;
}

FormulaResult not_applicable(Quantity q, std::string source, std::string reason) {
    FormulaResult r;
    r.quantity = q;
    r.source = std::move(source);
    r.applicable = false;
    r.reason = std::move(reason);
    return r;
}

}  // namespace

Rational::Rational(long long num, long long den) {
    if (den == 0) throw InvalidParameter("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long g = std::gcd(num, den);
    num_ = num / (g == 0 ? 1 : g);
    den_ = den / (g == 0 ? 1 : g);
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
}

const char* to_string(Quantity quantity) noexcept {
    switch (quantity) {
        case Quantity::mcr: return "mcr";
        case Quantity::gamma_ebk: return "gamma_ebk";
        case Quantity::gamma_eb1: return "gamma_eb1";
        case Quantity::gamma_eb2: return "gamma_eb2";
        case Quantity::bound_interval: return "bound_interval";
    }
    return "?";
}

std::string FormulaResult::str() const {
    if (!applicable) return "n/a";
    if (std::holds_alternative<long long>(value)) {
        return (kind == BoundKind::lower_bound ? ">=" : "") + std::to_string(integer());
    }
    if (std::holds_alternative<Interval>(value)) {
        return "[" + interval().lower.str() + "," + interval().upper.str() + "]";
    }
    return "-";
}

FormulaResult path_gamma(int n, int k) {
    if (n < 2 || k < 1) throw InvalidParameter("path formula needs n >= 2 and k >= 1");
    return exact(k == 1 ? Quantity::gamma_eb1 : Quantity::gamma_ebk, ceil_div(n, 3),
                 "path-gamma");
}

FormulaResult cycle_mcr(int n) {
    if (n < 3) throw InvalidParameter("cycle formula needs n >= 3");
    if (n % 3 == 0) return exact(Quantity::mcr, 1, "cycle-mcr");
    if (n == 7) return exact(Quantity::mcr, 3, "cycle-mcr");
    return exact(Quantity::mcr, 2, "cycle-mcr");
}

FormulaResult cycle_gamma(int n) {
    if (n < 3) throw InvalidParameter("cycle formula needs n >= 3");
    return exact(Quantity::gamma_ebk, ceil_div(n, 3), "cycle-gamma-at-mcr");
}

FormulaResult subdivided_star_mcr(int subdivisions, int n) {
    if (subdivisions < 0 || n < 3) {
        throw InvalidParameter("subdivided star formula needs i >= 0 and n >= 3");
    }
    return exact(Quantity::mcr, 1, "subdivided-star-mcr");
}

FormulaResult subdivided_star_gamma(int subdivisions, int n) {
    if (subdivisions < 0 || n < 3) {
        throw InvalidParameter("subdivided star formula needs i >= 0 and n >= 3");
    }
    const long long base = ceil_div(subdivisions, 3) * (n - 1);
    return exact(Quantity::gamma_eb1, subdivisions % 3 == 1 ? base : base + 1,
                 "subdivided-star-gamma");
}

FormulaResult eb2_bounds(const Graph& g) {
    const long long n = g.vertex_count();
    const long long max_deg = g.max_degree();
    const long long min_deg = g.min_degree();
    FormulaResult r;
    r.quantity = Quantity::bound_interval;
    r.source = "eb2-degree-bounds";
    r.value = Interval{Rational(2 * n, 1 + max_deg * max_deg), Rational(n, 1 + min_deg)};
    return r;
}

Eb2Check check_eb2_bounds(const Graph& g, const SolveResult& gamma_eb2) {
    Eb2Check check;
    check.bounds = eb2_bounds(g);
    if (gamma_eb2.exhausted) {
        check.reason = "solver exhausted its node budget";
        return check;
    }
    if (!gamma_eb2.feasible || !gamma_eb2.value) {
        check.reason = "no 2-ELDB exists (mcr > 2)";
        return check;
    }
    check.applicable = true;
    check.gamma_eb2 = *gamma_eb2.value;
    const Rational value(check.gamma_eb2);
    check.lower_holds = check.bounds.interval().lower <= value;
    check.upper_holds = value <= check.bounds.interval().upper;
    return check;
}

LexPathFormula lex_path(int m, int rad_h) {
    if (m < 2 || rad_h < 1) throw InvalidParameter("lex path formula needs m >= 2, rad(H) >= 1");
    LexPathFormula out;
    out.mcr = exact(Quantity::mcr, rad_h == 1 ? 1 : 2, "lex-path-mcr");
    if (rad_h == 1) {
        out.gamma_eb2 = not_applicable(Quantity::gamma_eb2, "lex-path-gamma",
                                       "closed form stated only for rad(H) != 1");
    } else {
        out.gamma_eb2 = exact(Quantity::gamma_eb2, 2 * ceil_div(m, 5), "lex-path-gamma");
    }
    return out;
}

bool representable_as_sum(int total, const std::vector<int>& parts) {
    if (total < 0) return false;
    std::vector<bool> reachable(total + 1, false);
    reachable[0] = true;
    for (int s = 1; s <= total; ++s) {
        for (int p : parts) {
            if (p > 0 && p <= s && reachable[s - p]) {
                reachable[s] = true;
                break;
            }
        }
    }
    return reachable[total];
}

LexCycleFormula lex_cycle_mcr(int m, int rad_h) {
    if (m < 3 || rad_h < 1) throw InvalidParameter("lex cycle formula needs m >= 3, rad(H) >= 1");
    LexCycleFormula out;

    long long table = 3;
    if (m % 3 == 0 && rad_h == 1) {
        table = 1;
    } else if (m % 5 == 0 || m == 3 || m == 4) {
        table = 2;
    } else if (m == 9 || m == 16 || m == 18 || m == 23) {
        table = 4;
    } else if (m == 11) {
        table = 5;
    } else if (m == 13) {
        table = 6;
    }
    out.case_table = exact(Quantity::mcr, table, "lex-cycle-table");

    // A radius-r ball (r >= 2) covers 2r+1 consecutive H-layers; radius 1
    // covers 3 layers only when its center is universal in H.
    long long k = 1;
    for (;; ++k) {
        std::vector<int> parts;
        if (rad_h == 1) parts.push_back(3);
        for (int r = 2; r <= k; ++r) parts.push_back(2 * r + 1);
        const bool wraps = k >= 2 && 2 * k + 1 >= m;
        if (!parts.empty() && (wraps || representable_as_sum(m, parts))) break;
    }
    out.oracle = exact(Quantity::mcr, k, "lex-cycle-part-sums");
    return out;
}

StrongFormula strong_mcr(StrongSelector selector, const StrongParams& params) {
    StrongFormula out;
    switch (selector) {
        case StrongSelector::cycle_times_path:
            if (!params.m) throw InvalidParameter("cycle_times_path needs the cycle length m");
            out.mcr = cycle_mcr(*params.m);
            out.mcr.source = "strong-cycle-path";
            out.gamma = not_applicable(Quantity::gamma_ebk, "strong-cycle-path",
                                       "only mcr is tabulated for this selector");
            return out;
        case StrongSelector::rad1_factor:
            if (!params.h_mcr || !params.h_gamma) {
                throw InvalidParameter("rad1_factor needs mcr(H) and gamma_ebk(H)");
            }
            out.mcr = exact(Quantity::mcr, *params.h_mcr, "strong-radius-one-factor");
            out.gamma = exact(Quantity::gamma_ebk, *params.h_gamma, "strong-radius-one-factor");
            return out;
        case StrongSelector::lower_bound:
            if (!params.g_mcr || !params.h_mcr) {
                throw InvalidParameter("lower_bound needs mcr(G) and mcr(H)");
            }
            out.mcr = exact(Quantity::mcr, std::max(*params.g_mcr, *params.h_mcr),
                            "strong-lower-bound");
            out.mcr.kind = BoundKind::lower_bound;
            out.gamma = not_applicable(Quantity::gamma_ebk, "strong-lower-bound",
                                       "bound concerns mcr only");
            return out;
    }
    throw InvalidParameter("unknown strong selector");
}

FormulaResult lex_mcr_lower(long long g_mcr) {
    if (g_mcr < 1) throw InvalidParameter("mcr(G) is at least 1");
    auto r = exact(Quantity::mcr, g_mcr, "lex-lower-bound");
    r.kind = BoundKind::lower_bound;
    return r;
}

}  // namespace ebcast
