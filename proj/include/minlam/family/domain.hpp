#pragma once

#include <string>

#include "minlam/core/types.hpp"
#include "minlam/core/weierstrass.hpp"

namespace minlam::family {

/// Family parameter a, strictly inside (0, 1/2).
class FamilyParameter {
public:
    explicit FamilyParameter(double a);

    double value() const { return a_; }

    friend bool operator==(const FamilyParameter&, const FamilyParameter&) = default;

private:
    double a_;
};

/// Which of the two limit components, {x > 0} or {x < 0}.
enum class Side { plus, minus };

inline double sign_of(Side side) { return side == Side::plus ? 1.0 : -1.0; }

std::string to_string(Side side);

enum class DomainKind { omega_a, omega_0, omega_0_plus, omega_0_minus };

/// The closed tear-drop region |x| <= 1/2, |y| <= half_width(x), and its
/// a -> 0 limit with the origin removed.
class DomainSpec {
public:
    static DomainSpec omega(FamilyParameter a);
    static DomainSpec omega_limit();
    static DomainSpec omega_limit(Side side);

    DomainKind kind() const { return kind_; }

    /// (x^2 + a^2)^{3/4} / 2, or |x|^{3/2} / 2 for the limit kinds.
    double half_width(double x) const;

    bool contains(const Complexd& z) const;

    Domain<double> as_domain() const;

    std::string name() const;

private:
    DomainSpec(DomainKind kind, double a) : kind_(kind), a_(a) {}

    DomainKind kind_;
    double a_;
};

double half_width(FamilyParameter a, double x);

bool omega_contains(const DomainSpec& domain, const Complexd& z);

}  // namespace minlam::family
