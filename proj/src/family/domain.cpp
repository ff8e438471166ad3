#include "minlam/family/domain.hpp"

#include <cmath>

#include "minlam/core/errors.hpp"

namespace minlam::family {

FamilyParameter::FamilyParameter(double a) : a_(a)
{
    if (!(a > 0.0 && a < 0.5)) {
        throw InvalidParameter("family parameter must lie in (0, 1/2), got " + std::to_string(a));
    }
}

std::string to_string(Side side) { return side == Side::plus ? "plus" : "minus"; }

DomainSpec DomainSpec::omega(FamilyParameter a) { return {DomainKind::omega_a, a.value()}; }

DomainSpec DomainSpec::omega_limit() { return {DomainKind::omega_0, 0.0}; }

DomainSpec DomainSpec::omega_limit(Side side)
{
    return {side == Side::plus ? DomainKind::omega_0_plus : DomainKind::omega_0_minus, 0.0};
}

double DomainSpec::half_width(double x) const
{
    if (kind_ == DomainKind::omega_a) {
        return std::pow(x * x + a_ * a_, 0.75) / 2.0;
    }
    return std::pow(std::abs(x), 1.5) / 2.0;
}

bool DomainSpec::contains(const Complexd& z) const
{
    const double x = z.real();
    const double y = z.imag();
    if (!is_finite(z) || std::abs(x) > 0.5 || std::abs(y) > half_width(x)) {
        return false;
    }
    switch (kind_) {
    case DomainKind::omega_a:
        return true;
    case DomainKind::omega_0:
        return x != 0.0;
    case DomainKind::omega_0_plus:
        return x > 0.0;
    case DomainKind::omega_0_minus:
        return x < 0.0;
    }
    return false;
}

Domain<double> DomainSpec::as_domain() const
{
    const DomainSpec self = *this;
    return {name(), [self](Complexd z) { return self.contains(z); }};
}

std::string DomainSpec::name() const
{
    switch (kind_) {
    case DomainKind::omega_a:
        return "Omega_a(a=" + std::to_string(a_) + ")";
    case DomainKind::omega_0:
        return "Omega_0";
    case DomainKind::omega_0_plus:
        return "Omega_0+";
    case DomainKind::omega_0_minus:
        return "Omega_0-";
    }
    return "?";
}

double half_width(FamilyParameter a, double x) { return DomainSpec::omega(a).half_width(x); }

bool omega_contains(const DomainSpec& domain, const Complexd& z) { return domain.contains(z); }

}  // namespace minlam::family
