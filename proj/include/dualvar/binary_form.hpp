#pragma once

#include "dualvar/multipoly.hpp"

namespace dualvar {

// Homogeneous binary form of fixed degree in (x, y), stored densely:
// coeff(i) multiplies x^i y^{degree-i}. The zero form of each degree is allowed.
class BinaryForm {
public:
    BinaryForm(int degree, const Field& f);
    static BinaryForm from_coeffs(const SVector& c); // degree = c.size() - 1

    int degree() const { return degree_; }
    const Field& field() const { return field_; }
    const Scalar& coeff(int i) const;
    void set_coeff(int i, const Scalar& v);
    bool is_zero() const;

    // coefficient of x^degree: the value on the point y = 0 of the line
    const Scalar& leading_x() const { return coeff(degree_); }

    Scalar evaluate(const Scalar& x, const Scalar& y) const;
    BinaryForm operator+(const BinaryForm& o) const;
    BinaryForm operator*(const BinaryForm& o) const; // degrees add
    BinaryForm scaled(const Scalar& c) const;
    bool operator==(const BinaryForm& o) const;

    // the form (x, y) -> F(x, lambda * y)
    BinaryForm scale_y(const Scalar& lambda) const;

    MultiPoly to_multipoly() const; // in 2 variables x0, x1

private:
    int degree_;
    Field field_;
    SVector c_;
};

// Set all variables except x0, x1 of a homogeneous polynomial to zero, producing the
// binary form of the same degree on the distinguished plane.
BinaryForm binary_restriction(const MultiPoly& p);

// Division step for binary forms: Q = P * D + y^{e-d+1} * R with deg D = e - d and
// deg R = d - 1, unique once the x-leading coefficient of P is nonzero.
struct DivisionResult {
    BinaryForm d;
    BinaryForm r;
};
DivisionResult binary_euclid(const BinaryForm& q, const BinaryForm& p);

// Polynomialized top remainder coefficient:
//   rhat(Q, P) = p_d^{e-d+2} * [y^{e-d+1}] (Q(1,y) / P(1,y))
//              = p_d^{e-d+1} * R_{d-1},
// computed here through binary_euclid; it vanishes iff the top remainder coefficient
// does. Requires e >= d >= 1 and p_d != 0 (otherwise coordinate_error).
Scalar rhat(const BinaryForm& q, const BinaryForm& p);

} // namespace dualvar
