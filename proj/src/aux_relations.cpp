#include <array>
#include <cmath>
#include <string>

#include "hoc/errors.hpp"
#include "hoc/schemes.hpp"

namespace hoc {
namespace {

constexpr int kMaxOrder = 4;

// Coefficients of u-derivatives u_(p,q), p, q <= 4, in a differentiated PDE.
using Expansion = std::array<std::array<double, kMaxOrder + 1>, kMaxOrder + 1>;

constexpr int binomial(int n, int k) { return (k == 0 || k == n) ? 1 : n; }  // n <= 2

struct Term {
    const Jet2* coef;
    int p;
    int q;
};

// Left-hand side of d^(ap,aq)/dx^(ap,aq) applied to
// a1 u_x1x1 + a2 u_x2x2 + b12 u_x1x2 + c1 u_x1 + c2 u_x2 (= f).
Expansion expand_operator(const PdeCoefficients& c, int ap, int aq) {
    const std::array<Term, 5> terms{{
        {&c.a1, 2, 0}, {&c.a2, 0, 2}, {&c.b12, 1, 1}, {&c.c1, 1, 0}, {&c.c2, 0, 1},
    }};
    Expansion e{};
    for (const Term& t : terms) {
        for (int b1 = 0; b1 <= ap; ++b1) {
            for (int b2 = 0; b2 <= aq; ++b2) {
                const double weight = binomial(ap, b1) * binomial(aq, b2) * t.coef->partial(b1, b2);
                e[ap - b1 + t.p][aq - b2 + t.q] += weight;
            }
        }
    }
    return e;
}

// d^(ap,aq) f with f = -d w, as compact w-terms.
CompactForm expand_source(const PdeCoefficients& c, int ap, int aq) {
    CompactForm f;
    for (int b1 = 0; b1 <= ap; ++b1) {
        for (int b2 = 0; b2 <= aq; ++b2) {
            f.w_at(ap - b1, aq - b2) -= binomial(ap, b1) * binomial(aq, b2) * c.d.partial(b1, b2);
        }
    }
    return f;
}

void check_denominator(double a, double floor, const char* name, AuxTarget t) {
    if (!std::isfinite(a) || std::abs(a) <= floor) {
        throw NumericalError(std::string("auxiliary relation ") + std::string(to_string(t)) +
                             ": denominator " + name + " vanishes");
    }
}

// Isolates `target` in the differentiated PDE of order (ap, aq):
//   coef_target * u_target + coef_partner * u_partner + rest = f_(ap,aq)
//   => u_target + (coef_partner / coef_target) u_partner = (f - rest) / coef_target.
// Pure third derivatives in `rest` are replaced by the supplied A1/A2 forms.
CompactForm isolate(const PdeCoefficients& c, int ap, int aq, std::array<int, 2> target,
                    std::array<int, 2> partner, double denominator, const CompactForm* a1_form,
                    const CompactForm* a2_form) {
    const Expansion e = expand_operator(c, ap, aq);
    CompactForm rhs = expand_source(c, ap, aq);
    for (int p = 0; p <= kMaxOrder; ++p) {
        for (int q = 0; q <= kMaxOrder; ++q) {
            const double coef = e[p][q];
            if (coef == 0.0) continue;
            if (p == target[0] && q == target[1]) continue;
            if (p == partner[0] && q == partner[1]) continue;
            if (p <= 2 && q <= 2) {
                rhs.u_at(p, q) -= coef;
            } else if (p == 3 && q == 0 && a1_form != nullptr) {
                rhs += (-coef) * *a1_form;
            } else if (p == 0 && q == 3 && a2_form != nullptr) {
                rhs += (-coef) * *a2_form;
            } else {
                throw NumericalError("auxiliary relation: unexpected non-compact term u_(" +
                                     std::to_string(p) + "," + std::to_string(q) + ")");
            }
        }
    }
    rhs *= 1.0 / denominator;
    return rhs;
}

CompactForm third_form(const PdeCoefficients& c, int direction, double floor) {
    if (direction == 1) {
        check_denominator(c.a1.v, floor, "a1", AuxTarget::A1);
        return isolate(c, 1, 0, {3, 0}, {-1, -1}, c.a1.v, nullptr, nullptr);
    }
    check_denominator(c.a2.v, floor, "a2", AuxTarget::A2);
    return isolate(c, 0, 1, {0, 3}, {-1, -1}, c.a2.v, nullptr, nullptr);
}

CompactForm fourth_form(const PdeCoefficients& c, AuxTarget which, double floor) {
    if (which == AuxTarget::A1 || which == AuxTarget::A2) {
        throw InvalidArgument("derive_aux_fourth: target must be one of B1, B2, C1, C2");
    }
    check_denominator(c.a1.v, floor, "a1", which);
    check_denominator(c.a2.v, floor, "a2", which);
    const CompactForm a1 = third_form(c, 1, floor);
    const CompactForm a2 = third_form(c, 2, floor);
    switch (which) {
        case AuxTarget::B1: return isolate(c, 2, 0, {4, 0}, {3, 1}, c.a1.v, &a1, &a2);
        case AuxTarget::B2: return isolate(c, 0, 2, {0, 4}, {1, 3}, c.a2.v, &a1, &a2);
        case AuxTarget::C1: return isolate(c, 1, 1, {3, 1}, {1, 3}, c.a1.v, &a1, &a2);
        // The same differentiated equation solved for the partner.
        case AuxTarget::C2: return isolate(c, 1, 1, {1, 3}, {3, 1}, c.a2.v, &a1, &a2);
        default: break;
    }
    throw InvalidArgument("derive_aux_fourth: target must be one of B1, B2, C1, C2");
}

double floor_for(const CoefficientField& cf) { return 1e-12 * cf.max_diffusion(); }

}  // namespace

std::string_view to_string(AuxTarget t) noexcept {
    switch (t) {
        case AuxTarget::A1: return "A1";
        case AuxTarget::A2: return "A2";
        case AuxTarget::B1: return "B1";
        case AuxTarget::B2: return "B2";
        case AuxTarget::C1: return "C1";
        case AuxTarget::C2: return "C2";
    }
    return "?";
}

AuxRelation derive_aux_third(const PdeCoefficients& c, int direction, double h1, double h2,
                             double denominator_floor) {
    if (direction != 1 && direction != 2) {
        throw InvalidArgument("derive_aux_third: direction must be 1 or 2");
    }
    AuxRelation r{direction == 1 ? AuxTarget::A1 : AuxTarget::A2,
                  third_form(c, direction, denominator_floor), {}};
    r.dual = r.form.discretise(h1, h2);
    return r;
}

AuxRelation derive_aux_fourth(const PdeCoefficients& c, AuxTarget which, double h1, double h2,
                              double denominator_floor) {
    AuxRelation r{which, fourth_form(c, which, denominator_floor), {}};
    r.dual = r.form.discretise(h1, h2);
    return r;
}

AuxRelation derive_aux_third(const CoefficientField& cf, std::size_t i, std::size_t j,
                             int direction) {
    const double h = cf.grid().h();
    return derive_aux_third(cf.at(i, j), direction, h, h, floor_for(cf));
}

AuxRelation derive_aux_fourth(const CoefficientField& cf, std::size_t i, std::size_t j,
                              AuxTarget which) {
    const double h = cf.grid().h();
    return derive_aux_fourth(cf.at(i, j), which, h, h, floor_for(cf));
}

}  // namespace hoc
