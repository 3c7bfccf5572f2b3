#include "arcmot/zeta.hpp"

#include <algorithm>

namespace arcmot {

namespace {

// Point-count conservativity of a reduction: over F_p the original ideal and
// the residual-plus-free presentation must agree. Sound rules make this an
// identity; it is the guard against implementation defects.
bool confirm_reduction(const Ideal& original, const ReducedPresentation& red, unsigned long p,
                       const CountOptions& count) {
    mpz_class lhs = count_points(reduce_mod_p(original, p), count);
    mpz_class rhs(1);
    Decomposition dec = decompose(red);
    for (const auto& f : dec.factors) rhs *= count_points(reduce_mod_p(f, p), count);
    mpz_class pp(static_cast<unsigned long>(p));
    // Free variables, substituted variables and killed variables account for
    // p, 1 and 1 points each; everything else sits inside the factors.
    for (std::size_t i = 0; i < red.free_vars.size(); ++i) rhs *= pp;
    return lhs == rhs;
}

MotiveClass class_for_coefficient(const ReducedPresentation& red, const ClassStrategy& strategy,
                                  unsigned n, const CountOptions& count) {
    if (strategy.kind == ClassStrategy::Kind::Supplied) {
        if (n >= strategy.supplied.size())
            throw precondition_error("auto_zeta: supplied class list too short");
        return strategy.supplied[n];
    }
    return class_of_reduction(red, strategy.excluded_chars, count);
}

}  // namespace

MotiveClass class_of_reduction(const ReducedPresentation& red, const std::set<unsigned long>& excluded,
                               const CountOptions& count) {
    Decomposition dec = decompose(red);
    MotiveClass cls = MotiveClass::L_power(static_cast<long>(dec.affine_rank));
    for (const auto& f : dec.factors) {
        unsigned degree_bound = static_cast<unsigned>(f.ring()->nvars());
        InterpolateOptions iopts;
        iopts.count = count;
        iopts.excluded_chars = excluded;
        cls = cls * interpolate_class(f, degree_bound, iopts);
    }
    return cls;
}

ZetaResult auto_zeta(const ZetaConfig& cfg) {
    ZetaResult out;
    out.series = MotiveSeries(cfg.N);

    // Local dimension at the point: the translated scheme's Krull dimension.
    // Scope restriction: schemes here are equidimensional, so the global
    // dimension of the translated ideal is the local one.
    out.dim_p = dimension(cfg.X.ideal);

    for (unsigned n = 0; n <= cfg.N; ++n) {
        FatPoint J = jet(cfg.X, cfg.point, n + 1, cfg.arc.groebner);
        ArcPresentation arc = auto_arc(cfg.X, cfg.point, n + 1, cfg.arc);
        ReducedPresentation red = heuristic_reduce(arc, cfg.reduction);

        ZetaCoefficientDetail det;
        det.n = n;
        det.jet_length = J.length();
        det.affine_rank = red.affine_rank();
        det.certified = red.certified();
        Decomposition dec = decompose(red);
        det.factor_count = dec.factors.size();

        if (!det.certified) {
            std::size_t occ = arc.ideal().occurring_vars().size();
            if (occ <= cfg.confirm_max_vars) {
                if (!confirm_reduction(arc.ideal(), red, cfg.confirm_prime, cfg.count))
                    throw verification_error(
                        "auto_zeta: reduction failed the F_p conservativity check at n = " +
                        std::to_string(n + 1));
                det.confirmed = true;
            }
        } else {
            det.confirmed = true;
        }

        det.cls = class_for_coefficient(red, cfg.strategy, n, cfg.count);
        long e;
        if (cfg.normalization == Normalization::Definition) {
            e = static_cast<long>(out.dim_p) * static_cast<long>(det.jet_length);
        } else {
            // Codim: the dimension of the reduced auto-arc space, read off the
            // assigned class (equals affine_rank + sum of factor dimensions).
            auto d = det.cls.dim();
            e = d ? *d : 0;
        }
        det.exponent = e;
        out.series.set_coeff(n, det.cls * MotiveClass::L_power(-e));
        out.details.push_back(std::move(det));
    }
    return out;
}

ZetaResult igusa_theta(const ThetaConfig& cfg) {
    ZetaResult out;
    out.series = MotiveSeries(cfg.N);
    int dim_X = dimension(cfg.X.ideal);
    out.dim_p = dim_X;
    for (unsigned n = 0; n <= cfg.N; ++n) {
        FatPoint ln = linear_jet(cfg.X.ring->field(), n + 1);
        ArcPresentation arc = arc_space(cfg.X, ln, cfg.arc);
        ReducedPresentation red = heuristic_reduce(arc, cfg.reduction);

        ZetaCoefficientDetail det;
        det.n = n;
        det.jet_length = n + 1;
        det.affine_rank = red.affine_rank();
        det.certified = red.certified();
        det.confirmed = det.certified;
        det.cls = class_for_coefficient(red, cfg.strategy, n, cfg.count);
        long e = static_cast<long>(dim_X) * static_cast<long>(n + 1);
        det.exponent = e;
        out.series.set_coeff(n, det.cls * MotiveClass::L_power(-e));
        out.details.push_back(std::move(det));
    }
    return out;
}

SeriesReport compare(const MotiveSeries& series, const MotiveRational& closed) {
    SeriesReport rep;
    rep.computed = series;
    rep.closed_form = closed;
    MotiveSeries expanded = expand_rational(closed, series.truncation());
    for (unsigned n = 0; n <= series.truncation(); ++n) {
        DiffRow row{n, series.coeff(n), expanded.coeff(n), series.coeff(n) == expanded.coeff(n)};
        if (row.match) ++rep.matches;
        rep.diff.push_back(std::move(row));
    }
    return rep;
}

std::optional<TailShift> find_tail_shift(const MotiveSeries& computed, const MotiveRational& closed,
                                         unsigned tail_start, Normalization norm) {
    std::size_t T = computed.truncation();
    MotiveSeries expanded = expand_rational(closed, T + 4);
    for (long b = -3; b <= 3; ++b) {
        for (long a = -8; a <= 8; ++a) {
            bool all = true;
            bool any = false;
            MotiveClass shift = MotiveClass::L_power(a);
            for (unsigned n = tail_start; n <= T; ++n) {
                long m = static_cast<long>(n) + b;
                if (m < 0 || m > static_cast<long>(T) + 4) {
                    all = false;
                    break;
                }
                any = true;
                if (computed.coeff(n) * shift != expanded.coeff(static_cast<std::size_t>(m))) {
                    all = false;
                    break;
                }
            }
            if (all && any) return TailShift{norm, a, b};
        }
    }
    return std::nullopt;
}

std::vector<mpq_class> asymptotic_defect(const AffineScheme& X, const std::vector<mpq_class>& point,
                                         unsigned N, const ArcOptions& arc,
                                         const DimensionOptions& dim_opts) {
    std::vector<mpq_class> out;
    for (unsigned n = 2; n <= N; ++n) {
        FatPoint J = jet(X, point, n, arc.groebner);
        ArcPresentation pres = auto_arc(X, point, n, arc);
        ReducedPresentation red = heuristic_reduce(pres);
        Decomposition dec = decompose(red);
        long dim = static_cast<long>(dec.affine_rank);
        for (const auto& f : dec.factors) dim += dimension(f, dim_opts);
        out.emplace_back(dim, static_cast<long>(J.length()));
        out.back().canonicalize();
    }
    return out;
}

}  // namespace arcmot
