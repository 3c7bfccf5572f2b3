#pragma once

#include <optional>

#include "arcmot/counting.hpp"
#include "arcmot/motive.hpp"
#include "arcmot/reduction.hpp"

namespace arcmot {

enum class Normalization { Definition, Codim };

// How classes of reduced auto-arc spaces are assigned.
//  - Interpolate: finite-field counts of each residual factor, Lagrange lift.
//  - Supplied: caller provides [A_{n+1}^red] for n = 0..N directly (used when
//    factor counting is out of budget); reductions are still computed.
struct ClassStrategy {
    enum class Kind { Interpolate, Supplied };
    Kind kind = Kind::Interpolate;
    std::set<unsigned long> excluded_chars;
    std::vector<MotiveClass> supplied;
};

struct ZetaConfig {
    AffineScheme X;
    std::vector<mpq_class> point;
    unsigned N = 4;  // truncation order of the series
    Normalization normalization = Normalization::Definition;
    ClassStrategy strategy;
    ArcOptions arc;
    ReductionOptions reduction;
    CountOptions count;
    // Conservativity confirmation of uncertified reductions is attempted up
    // to this many occurring variables; beyond that the reduction is accepted
    // (the rules are pointwise sound) and flagged unconfirmed.
    unsigned confirm_max_vars = 12;
    unsigned long confirm_prime = 5;
};

struct ZetaCoefficientDetail {
    unsigned n = 0;               // t-exponent
    std::size_t jet_length = 0;   // l(J^{n+1})
    std::size_t affine_rank = 0;
    std::size_t factor_count = 0;
    MotiveClass cls;              // [A_{n+1}^red]
    long exponent = 0;            // e(n), coefficient is cls * L^{-e(n)}
    bool certified = false;       // radical-certified reduction
    bool confirmed = false;       // F_p conservativity checked
};

struct ZetaResult {
    MotiveSeries series;
    std::vector<ZetaCoefficientDetail> details;
    int dim_p = 0;
};

ZetaResult auto_zeta(const ZetaConfig& cfg);

// Motivic Igusa-zeta series along linear jets: coefficient of t^n is
// [nabla_{l_{n+1}} X] * L^{-dim(X) * (n+1)}.
struct ThetaConfig {
    AffineScheme X;
    unsigned N = 4;
    ClassStrategy strategy;
    ArcOptions arc;
    ReductionOptions reduction;
    CountOptions count;
};

ZetaResult igusa_theta(const ThetaConfig& cfg);

// Class of a reduced presentation: L^rank times the product of the factor
// classes, each interpolated from finite-field counts.
MotiveClass class_of_reduction(const ReducedPresentation& red, const std::set<unsigned long>& excluded,
                               const CountOptions& count);

struct DiffRow {
    unsigned n;
    MotiveClass computed;
    MotiveClass expanded;
    bool match;
};

struct TailShift {
    Normalization normalization;
    long a = 0;  // L-power
    long b = 0;  // t-shift: computed(t^n) * L^a == closed(t^{n+b})
};

struct SeriesReport {
    MotiveSeries computed;
    std::optional<MotiveRational> closed_form;
    std::vector<DiffRow> diff;
    std::size_t matches = 0;
    std::optional<TailShift> tail_shift;  // filled by find_tail_shift
};

SeriesReport compare(const MotiveSeries& series, const MotiveRational& closed);

// Searches a fixed monomial shift L^a t^b aligning the computed tail with the
// closed form for all n >= tail_start (within the window where both series
// are defined). Search ranges are small and fixed.
std::optional<TailShift> find_tail_shift(const MotiveSeries& computed, const MotiveRational& closed,
                                         unsigned tail_start, Normalization norm);

// dim(A_n^red) / l(J_p^n X) for n = 2..N.
std::vector<mpq_class> asymptotic_defect(const AffineScheme& X, const std::vector<mpq_class>& point,
                                         unsigned N, const ArcOptions& arc = {},
                                         const DimensionOptions& dim_opts = {});

}  // namespace arcmot
