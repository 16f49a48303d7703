#include "dualvar/binary_form.hpp"

namespace dualvar {

BinaryForm::BinaryForm(int degree, const Field& f)
    : degree_(degree), field_(f), c_(degree + 1, Scalar::zero(f)) {
    if (degree < 0) throw invalid_input_error("binary form of negative degree");
}

BinaryForm BinaryForm::from_coeffs(const SVector& c) {
    if (c.empty()) throw invalid_input_error("binary form needs at least one coefficient");
    BinaryForm f(static_cast<int>(c.size()) - 1, c[0].field());
    for (std::size_t i = 0; i < c.size(); ++i) f.set_coeff(static_cast<int>(i), c[i]);
    return f;
}

const Scalar& BinaryForm::coeff(int i) const {
    if (i < 0 || i > degree_) throw invalid_input_error("binary form coefficient out of range");
    return c_[i];
}

void BinaryForm::set_coeff(int i, const Scalar& v) {
    if (i < 0 || i > degree_) throw invalid_input_error("binary form coefficient out of range");
    if (v.field() != field_) throw invalid_input_error("binary form coefficient field mismatch");
    c_[i] = v;
}

bool BinaryForm::is_zero() const {
    for (const Scalar& s : c_)
        if (!s.is_zero()) return false;
    return true;
}

Scalar BinaryForm::evaluate(const Scalar& x, const Scalar& y) const {
    SVector yp(degree_ + 1, Scalar::one(field_));
    for (int i = 1; i <= degree_; ++i) yp[i] = yp[i - 1] * y;
    Scalar acc = Scalar::zero(field_);
    Scalar xpow = Scalar::one(field_);
    for (int i = 0; i <= degree_; ++i) {
        acc += c_[i] * xpow * yp[degree_ - i];
        xpow *= x;
    }
    return acc;
}

BinaryForm BinaryForm::operator+(const BinaryForm& o) const {
    if (degree_ != o.degree_) throw invalid_input_error("binary form sum: degree mismatch");
    BinaryForm r(degree_, field_);
    for (int i = 0; i <= degree_; ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

BinaryForm BinaryForm::operator*(const BinaryForm& o) const {
    if (field_ != o.field_) throw invalid_input_error("binary form product: field mismatch");
    BinaryForm r(degree_ + o.degree_, field_);
    for (int i = 0; i <= degree_; ++i) {
        if (c_[i].is_zero()) continue;
        for (int j = 0; j <= o.degree_; ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
    return r;
}

BinaryForm BinaryForm::scaled(const Scalar& c) const {
    BinaryForm r(degree_, field_);
    for (int i = 0; i <= degree_; ++i) r.c_[i] = c_[i] * c;
    return r;
}

bool BinaryForm::operator==(const BinaryForm& o) const {
    if (degree_ != o.degree_ || field_ != o.field_) return false;
    for (int i = 0; i <= degree_; ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

BinaryForm BinaryForm::scale_y(const Scalar& lambda) const {
    BinaryForm r(degree_, field_);
    Scalar pw = Scalar::one(field_);
    for (int i = degree_; i >= 0; --i) {
        r.c_[i] = c_[i] * pw; // x^i y^{d-i} picks up lambda^{d-i}
        pw *= lambda;
    }
    return r;
}

MultiPoly BinaryForm::to_multipoly() const {
    MultiPoly p(2, field_);
    for (int i = 0; i <= degree_; ++i)
        p.add_term({i, degree_ - i}, c_[i]);
    return p;
}

BinaryForm binary_restriction(const MultiPoly& p) {
    if (p.nvars() < 2)
        throw invalid_input_error("binary restriction needs at least two variables");
    auto hd = p.homogeneous_degree();
    if (!p.is_zero() && !hd)
        throw invalid_input_error("binary restriction requires a homogeneous polynomial");
    int d = p.is_zero() ? 0 : *hd;
    BinaryForm f(d, p.field());
    for (const auto& [e, c] : p.terms()) {
        bool on_plane = true;
        for (int i = 2; i < p.nvars(); ++i)
            if (e[i] != 0) { on_plane = false; break; }
        if (on_plane) f.set_coeff(e[0], f.coeff(e[0]) + c);
    }
    return f;
}

DivisionResult binary_euclid(const BinaryForm& q, const BinaryForm& p) {
    int e = q.degree(), d = p.degree();
    if (d < 1 || e < d)
        throw invalid_input_error("binary_euclid requires deg Q >= deg P >= 1");
    if (p.leading_x().is_zero())
        throw coordinate_error("divisor has vanishing x-leading coefficient; "
                               "change coordinates on the line");
    const Field& f = q.field();
    if (f != p.field()) throw field_mismatch_error("binary_euclid: field mismatch");

    SVector r(e + 1, Scalar::zero(f));
    for (int i = 0; i <= e; ++i) r[i] = q.coeff(i);
    BinaryForm dd(e - d, f);
    Scalar lead_inv = p.leading_x().inverse();
    for (int i = e; i >= d; --i) {
        if (r[i].is_zero()) continue;
        Scalar factor = r[i] * lead_inv;
        dd.set_coeff(i - d, factor);
        for (int j = 0; j <= d; ++j) r[i - d + j] -= factor * p.coeff(j);
    }
    BinaryForm rem(d - 1, f);
    for (int i = 0; i < d; ++i) rem.set_coeff(i, r[i]);
    return {dd, rem};
}

Scalar rhat(const BinaryForm& q, const BinaryForm& p) {
    int e = q.degree(), d = p.degree();
    DivisionResult div = binary_euclid(q, p);
    return p.leading_x().pow(e - d + 1) * div.r.coeff(d - 1);
}

} // namespace dualvar
