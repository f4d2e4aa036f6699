#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <boost/rational.hpp>

#include "alliance/graph.hpp"

namespace alliance {

using Rational = boost::rational<std::int64_t>;

inline std::int64_t rational_ceil(const Rational& r) {
    std::int64_t q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() > 0) ++q;
    return q;
}

inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

struct SpectralOptions {
    double tol = 1e-9;
    int max_iterations = 100000;
};

// Bound verdicts against integer invariants are decided exactly for rational
// formulas. Where the spectral radius enters, comparisons allow this absolute
// slack so float error cannot flip an exactly tight bound.
constexpr double spectral_compare_slack = 1e-6;

// Largest eigenvalue of L = D - A by power iteration on the component
// orthogonal to the all-ones vector. Deterministic start vector; stops when
// successive Rayleigh quotients differ by less than tol.
double laplacian_spectral_radius(const Graph& g, const SpectralOptions& opts = {});

// For a delta-regular base graph the line graph's Laplacian spectral radius
// is 2*delta (its adjacency spectrum reaches -2 whenever delta >= 3, or for
// even cycles at delta = 2).
double line_graph_spectral_radius_regular(int delta);

struct BoundsReport {
    std::string claim;
    bool applicable = true;
    std::string reason;  // set when not applicable

    double lower = 0.0;
    double upper = 0.0;
    std::optional<Rational> lower_exact;  // present for rational formulas
    std::optional<Rational> upper_exact;

    std::optional<int> exact;  // the invariant the bounds are about, when known
    bool lower_ok = true;      // exact absent or lower <= exact
    bool upper_ok = true;      // exact absent or exact <= upper

    // Spectral claims only: bounds re-evaluated at the certified end of the
    // tolerance band (mu + 10*tol) and a flag for verdicts that flip across
    // the band [mu - 10*tol, mu + 10*tol].
    bool spectral = false;
    double lower_safe = 0.0;
    double upper_safe = 0.0;
    bool band_flip = false;

    std::map<std::string, double> parameters;
};

// T1.1-range: cubic, n/2 <= gamma_so <= 3n/4.
BoundsReport bounds_th1(const Graph& g, std::optional<int> gamma_so_exact);

// Spectral range for gamma_o: (n/mu)*ceil((delta+1)/2) <= gamma_o <= n(2mu-delta)/(2mu).
BoundsReport bounds_thof(const Graph& g, std::optional<int> gamma_o_exact,
                         const SpectralOptions& opts = {});

// For a delta-regular base: (n/4)*ceil((2delta-1)/2) <= gamma_o(L) <= n(delta+1)/4.
BoundsReport bounds_coro(const Graph& base, std::optional<int> gamma_o_line_exact);

// Degree range: ceil(n(delta+1)/(2Delta+delta+1)) (delta odd) or
// ceil(n*delta/(2Delta+delta)) <= gamma_o <= 2n/3.
BoundsReport bounds_cotainf(const Graph& g, std::optional<int> gamma_o_exact);

// Regular odd degree: n(delta+1)/(3delta+1) <= gamma_o <= n/2.
BoundsReport bounds_cotasup(const Graph& g, std::optional<int> gamma_o_exact);

// Cubic base, n the base order: 3n/4 <= gamma_o(L) <= n.
BoundsReport bounds_eq5(const Graph& base, std::optional<int> gamma_o_line_exact);

// Cubic: 2n/5 <= gamma_o <= n/2.
BoundsReport bounds_eq6(const Graph& g, std::optional<int> gamma_o_exact);

// Cubic with a_i < gamma_i (gamma_i absent counts as +infinity):
// (n+2)/4 <= a_i <= (n-2)/2. Reports not-applicable otherwise.
BoundsReport bounds_otfen22(const Graph& g, std::optional<int> a_i_exact,
                            std::optional<int> gamma_i_exact);

}  // namespace alliance
