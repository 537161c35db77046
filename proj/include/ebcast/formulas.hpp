// formulas.hpp - closed-form mcr / gamma_ebk values for the graph families
// and products, plus the bound checker for gamma_eb2.
//
// Each function returns a FormulaResult carrying a short source tag. Values
// outside a formula's hypotheses come back with `applicable == false` and a
// reason instead of an extrapolated number.
#pragma once

#include "ebcast/graph.hpp"
#include "ebcast/solver.hpp"

#include <compare>
#include <optional>
#include <string>
#include <variant>

namespace ebcast {

/// Exact fraction with positive denominator in lowest terms.
class Rational {
public:
    Rational(long long num = 0, long long den = 1);

    long long num() const noexcept { return num_; }
    long long den() const noexcept { return den_; }
    std::string str() const;

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    long long num_;
    long long den_;
};

struct Interval {
    Rational lower;
    Rational upper;
};

enum class Quantity { mcr, gamma_ebk, gamma_eb1, gamma_eb2, bound_interval };
enum class BoundKind { exact, lower_bound };

const char* to_string(Quantity quantity) noexcept;

struct FormulaResult {
    Quantity quantity = Quantity::mcr;
    std::variant<std::monostate, long long, Interval> value;
    std::string source;
    bool applicable = true;
    std::string reason;
    /// `lower_bound` marks an inequality: the true value is >= the number.
    BoundKind kind = BoundKind::exact;

    bool has_value() const noexcept { return !std::holds_alternative<std::monostate>(value); }
    long long integer() const { return std::get<long long>(value); }
    const Interval& interval() const { return std::get<Interval>(value); }
    std::string str() const;
};

FormulaResult path_gamma(int n, int k);

FormulaResult cycle_mcr(int n);
/// gamma_ebk(C_n) at k = mcr(C_n).
FormulaResult cycle_gamma(int n);

FormulaResult subdivided_star_mcr(int subdivisions, int n);
FormulaResult subdivided_star_gamma(int subdivisions, int n);

/// [2n / (1 + maxdeg^2), n / (1 + mindeg)] as exact rationals.
FormulaResult eb2_bounds(const Graph& g);

struct Eb2Check {
    FormulaResult bounds;
    bool applicable = false;
    std::string reason;
    long long gamma_eb2 = 0;
    bool lower_holds = false;
    bool upper_holds = false;
};

/// Compares a solver gamma_eb2 result against the bounds. Not applicable when
/// the graph has no 2-ELDB or the solver gave up.
Eb2Check check_eb2_bounds(const Graph& g, const SolveResult& gamma_eb2);

struct LexPathFormula {
    FormulaResult mcr;
    FormulaResult gamma_eb2;
};

/// P_m . H for a factor H of radius `rad_h`.
LexPathFormula lex_path(int m, int rad_h);

struct LexCycleFormula {
    /// Case table: 1 iff 3 | m and rad(H) = 1; otherwise 2 when 5 | m or
    /// m in {3,4}, 4 for m in {9,16,18,23}, 5 for 11, 6 for 13, else 3.
    FormulaResult case_table;
    /// Least k whose ball sizes can tile C_m: parts are the odd numbers
    /// 5..2k+1 (plus 3 when H has a universal vertex), or one ball with
    /// 2k+1 >= m wrapping the whole cycle.
    FormulaResult oracle;
};

LexCycleFormula lex_cycle_mcr(int m, int rad_h);

/// True when `total` is a sum of (repeatable) values from `parts`.
bool representable_as_sum(int total, const std::vector<int>& parts);

enum class StrongSelector { cycle_times_path, rad1_factor, lower_bound };

struct StrongParams {
    std::optional<int> m;              // cycle length, cycle_times_path
    std::optional<long long> h_mcr;    // rad1_factor: mcr(H); lower_bound: mcr(H)
    std::optional<long long> h_gamma;  // rad1_factor: gamma_ebk(H) at k = mcr(H)
    std::optional<long long> g_mcr;    // lower_bound: mcr(G)
};

struct StrongFormula {
    FormulaResult mcr;
    FormulaResult gamma;  // only for rad1_factor
};

/// Strong product G x H. Throws InvalidParameter when `params` lacks what
/// the selector needs.
StrongFormula strong_mcr(StrongSelector selector, const StrongParams& params);

/// mcr(G . H) >= mcr(G).
FormulaResult lex_mcr_lower(long long g_mcr);

}  // namespace ebcast
