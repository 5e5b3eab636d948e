#include <cmath>
#include <string>

#include "hoc/errors.hpp"
#include "hoc/schemes.hpp"

namespace hoc {
namespace {

// a1 D11 + a2 D22 + b12 D12 + c1 D1 + c2 D2, the second-order central operator.
CompactForm central_operator(const PdeCoefficients& c) {
    CompactForm a0;
    a0.u_at(2, 0) = c.a1.v;
    a0.u_at(0, 2) = c.a2.v;
    a0.u_at(1, 1) = c.b12.v;
    a0.u_at(1, 0) = c.c1.v;
    a0.u_at(0, 1) = c.c2.v;
    return a0;
}

void check(double a, double floor, const char* name, SchemeVersion v) {
    if (!std::isfinite(a) || std::abs(a) <= floor) {
        throw NumericalError(std::string("scheme ") + std::string(to_string(v)) + ": " + name +
                             " vanishes at node");
    }
}

}  // namespace

std::string_view to_string(SchemeVersion v) noexcept {
    switch (v) {
        case SchemeVersion::Standard: return "Standard";
        case SchemeVersion::V1: return "V1";
        case SchemeVersion::V2: return "V2";
        case SchemeVersion::V3: return "V3";
        case SchemeVersion::V4: return "V4";
    }
    return "?";
}

SchemeVersion parse_scheme(std::string_view name) {
    if (name == "Standard" || name == "standard" || name == "SD") return SchemeVersion::Standard;
    if (name == "V1" || name == "v1") return SchemeVersion::V1;
    if (name == "V2" || name == "v2") return SchemeVersion::V2;
    if (name == "V3" || name == "v3" || name == "HOC" || name == "hoc") return SchemeVersion::V3;
    if (name == "V4" || name == "v4") return SchemeVersion::V4;
    throw InvalidArgument("unknown scheme '" + std::string(name) +
                          "' (expected Standard, V1, V2, V3, V4)");
}

std::array<int, 2> remainder_orders(SchemeVersion v) noexcept {
    switch (v) {
        case SchemeVersion::V1: return {4, 0};
        case SchemeVersion::V2: return {0, 4};
        case SchemeVersion::V3: return {3, 1};
        case SchemeVersion::V4: return {1, 3};
        case SchemeVersion::Standard: break;
    }
    return {0, 0};
}

CompactForm version_form(SchemeVersion v, const PdeCoefficients& c, double h1, double h2,
                         double floor) {
    check(c.d.v, 0.0, "d", v);
    // Row = A0 + sum(gamma_R * R) - f with -f = d u_tau.
    CompactForm row = central_operator(c);
    row.w_at(0, 0) += c.d.v;
    if (v == SchemeVersion::Standard) {
        row *= 1.0 / c.d.v;
        return row;
    }
    check(c.a1.v, floor, "a1", v);
    check(c.a2.v, floor, "a2", v);

    const double a1 = c.a1.v, a2 = c.a2.v, b = c.b12.v;
    const double q1 = h1 * h1, q2 = h2 * h2;

    row += (-c.c1.v * q1 / 6.0) * derive_aux_third(c, 1, h1, h2, floor).form;
    row += (-c.c2.v * q2 / 6.0) * derive_aux_third(c, 2, h1, h2, floor).form;

    auto add = [&](double gamma, AuxTarget t) {
        if (gamma != 0.0) row += gamma * derive_aux_fourth(c, t, h1, h2, floor).form;
    };
    switch (v) {
        case SchemeVersion::V1:
            add(-a2 * q2 / 12.0, AuxTarget::B2);
            add(-b * q2 / 12.0, AuxTarget::C2);
            add(-a1 * (2.0 * a2 * q1 - a1 * q2) / (12.0 * a2), AuxTarget::B1);
            break;
        case SchemeVersion::V2:
            add(-a1 * q1 / 12.0, AuxTarget::B1);
            add(-b * q1 / 12.0, AuxTarget::C1);
            add(-a2 * (2.0 * a1 * q2 - a2 * q1) / (12.0 * a1), AuxTarget::B2);
            break;
        case SchemeVersion::V3:
            add(-a1 * q1 / 12.0, AuxTarget::B1);
            add(-a2 * q2 / 12.0, AuxTarget::B2);
            add(-b * q2 / 12.0, AuxTarget::C2);
            break;
        case SchemeVersion::V4:
            add(-a1 * q1 / 12.0, AuxTarget::B1);
            add(-a2 * q2 / 12.0, AuxTarget::B2);
            add(-b * q1 / 12.0, AuxTarget::C1);
            break;
        case SchemeVersion::Standard: break;
    }
    return row;
}

DualStencil assemble_version(SchemeVersion v, const PdeCoefficients& c, double h1, double h2,
                             double floor) {
    return version_form(v, c, h1, h2, floor).discretise(h1, h2);
}

DualStencil assemble_version(SchemeVersion v, const CoefficientField& cf, std::size_t i,
                             std::size_t j) {
    const double h = cf.grid().h();
    return assemble_version(v, cf.at(i, j), h, h, 1e-12 * cf.max_diffusion());
}

double remainder_coefficient(SchemeVersion v, const PdeCoefficients& c, double h1, double h2) {
    const double a1 = c.a1.v, a2 = c.a2.v, b = c.b12.v;
    const double q1 = h1 * h1, q2 = h2 * h2;
    switch (v) {
        case SchemeVersion::V1: return std::abs(a1 * (a2 * q1 - a1 * q2) / (12.0 * a2));
        case SchemeVersion::V2: return std::abs(a2 * (a1 * q2 - a2 * q1) / (12.0 * a1));
        case SchemeVersion::V3: return std::abs(b * (a1 * q2 - a2 * q1) / (12.0 * a2));
        case SchemeVersion::V4: return std::abs(b * (a2 * q1 - a1 * q2) / (12.0 * a1));
        case SchemeVersion::Standard: break;
    }
    throw InvalidArgument("remainder_coefficient: the Standard scheme has no single remainder term");
}

double max_remainder_coefficient(SchemeVersion v, const CoefficientField& cf) {
    const double h = cf.grid().h();
    double m = 0.0;
    for (std::size_t k = 0; k < cf.size(); ++k) {
        m = std::max(m, remainder_coefficient(v, cf[k], h, h));
    }
    return m;
}

}  // namespace hoc
