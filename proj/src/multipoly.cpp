#include "dualvar/multipoly.hpp"

#include <algorithm>
#include <string>

namespace dualvar {

int total_degree_of(const Exponents& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
    int da = total_degree_of(a), db = total_degree_of(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly::MultiPoly(int nvars, const Field& f) : nvars_(nvars), field_(f) {
    if (nvars < 0) throw invalid_input_error("negative variable count");
}

MultiPoly MultiPoly::constant(const Scalar& c, int nvars) {
    MultiPoly p(nvars, c.field());
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int i, int nvars, const Field& f) {
    if (i < 0 || i >= nvars) throw invalid_input_error("variable index out of range");
    MultiPoly p(nvars, f);
    Exponents e(nvars, 0);
    e[i] = 1;
    p.add_term(e, Scalar::one(f));
    return p;
}

MultiPoly MultiPoly::monomial(const Exponents& e, const Scalar& c) {
    MultiPoly p(static_cast<int>(e.size()), c.field());
    p.add_term(e, c);
    return p;
}

void MultiPoly::check_exps(const Exponents& e) const {
    if (static_cast<int>(e.size()) != nvars_)
        throw invalid_input_error("exponent vector length does not match variable count");
    for (int x : e)
        if (x < 0) throw invalid_input_error("negative exponent");
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return total_degree_of(terms_.rbegin()->first); // grlex leader has maximal degree
}

std::optional<int> MultiPoly::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = total_degree_of(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (total_degree_of(e) != d) return std::nullopt;
    return d;
}

void MultiPoly::add_term(const Exponents& e, const Scalar& c) {
    check_exps(e);
    if (c.field() != field_)
        throw field_mismatch_error("coefficient field " + c.field().to_string() +
                                   " does not match polynomial field " + field_.to_string());
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Scalar MultiPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (nvars_ != o.nvars_)
        throw invalid_input_error("polynomial sum: variable count mismatch");
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    if (nvars_ != o.nvars_)
        throw invalid_input_error("polynomial difference: variable count mismatch");
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(nvars_, field_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (nvars_ != o.nvars_)
        throw invalid_input_error("polynomial product: variable count mismatch");
    if (field_ != o.field_)
        throw invalid_input_error("polynomial product: field mismatch");
    MultiPoly r(nvars_, field_);
    Exponents e(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::scaled(const Scalar& c) const {
    if (c.field() != field_) throw invalid_input_error("scale: field mismatch");
    MultiPoly r(nvars_, field_);
    if (c.is_zero()) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0) throw invalid_input_error("negative polynomial power");
    MultiPoly r = MultiPoly::constant(Scalar::one(field_), nvars_);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (nvars_ != o.nvars_ || field_ != o.field_ || terms_.size() != o.terms_.size())
        return false;
    auto it = terms_.begin(), jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (it->first != jt->first || it->second != jt->second) return false;
    return true;
}

MultiPoly MultiPoly::derivative(int var) const {
    if (var < 0 || var >= nvars_) throw invalid_input_error("derivative: variable out of range");
    MultiPoly r(nvars_, field_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        --d[var];
        r.add_term(d, c * Scalar::from_int(e[var], field_));
    }
    return r;
}

Scalar MultiPoly::evaluate(const SVector& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw invalid_input_error("evaluate: point length mismatch");
    for (const Scalar& s : point)
        if (s.field() != field_)
            throw field_mismatch_error("evaluate: point field does not match polynomial field");

    // Per-variable power tables up to the largest exponent that actually occurs.
    std::vector<int> maxe(nvars_, 0);
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < nvars_; ++i) maxe[i] = std::max(maxe[i], e[i]);
    std::vector<SVector> pw(nvars_);
    for (int i = 0; i < nvars_; ++i) {
        pw[i].reserve(maxe[i] + 1);
        pw[i].push_back(Scalar::one(field_));
        for (int k = 1; k <= maxe[i]; ++k) pw[i].push_back(pw[i].back() * point[i]);
    }

    Scalar acc = Scalar::zero(field_);
    for (const auto& [e, c] : terms_) {
        Scalar t = c;
        for (int i = 0; i < nvars_; ++i)
            if (e[i] > 0) t *= pw[i][e[i]];
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& images) const {
    if (static_cast<int>(images.size()) != nvars_)
        throw invalid_input_error("compose: need one image per variable");
    if (nvars_ == 0) return *this;
    int m = images[0].nvars();
    const Field& f = images[0].field();
    if (f != field_) throw invalid_input_error("compose: image field mismatch");
    for (const MultiPoly& im : images)
        if (im.nvars() != m || im.field() != f)
            throw invalid_input_error("compose: images disagree on variables/field");

    std::vector<std::vector<MultiPoly>> pw(nvars_);
    for (int i = 0; i < nvars_; ++i) pw[i].push_back(MultiPoly::constant(Scalar::one(f), m));

    MultiPoly acc(m, f);
    for (const auto& [e, c] : terms_) {
        MultiPoly t = MultiPoly::constant(c, m);
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            while (static_cast<int>(pw[i].size()) <= e[i])
                pw[i].push_back(pw[i].back() * images[i]);
            t = t * pw[i][e[i]];
        }
        acc = acc + t;
    }
    return acc;
}

MultiPoly MultiPoly::substitute(const ExactMatrix& b) const {
    if (static_cast<int>(b.rows()) != nvars_)
        throw invalid_input_error("substitute: matrix must have one row per variable");
    if (b.field() != field_) throw invalid_input_error("substitute: field mismatch");
    int m = static_cast<int>(b.cols());
    std::vector<MultiPoly> images;
    images.reserve(nvars_);
    for (int a = 0; a < nvars_; ++a) {
        MultiPoly la(m, field_);
        Exponents e(m, 0);
        for (int j = 0; j < m; ++j) {
            if (b.at(a, j).is_zero()) continue;
            e[j] = 1;
            la.add_term(e, b.at(a, j));
            e[j] = 0;
        }
        images.push_back(std::move(la));
    }
    return compose(images);
}

MultiPoly MultiPoly::to_modp(std::uint64_t p) const {
    if (field_.kind == FieldKind::mod_p) {
        if (field_.p != p)
            throw field_mismatch_error("polynomial already lives in F_" + std::to_string(field_.p));
        return *this;
    }
    MultiPoly r(nvars_, Field::modp(p));
    for (const auto& [e, c] : terms_) r.add_term(e, c.to_modp(p));
    if (!is_zero() && r.is_zero())
        throw unlucky_prime_error("polynomial vanishes identically mod " + std::to_string(p));
    return r;
}

MultiPoly MultiPoly::embedded(int nvars) const {
    if (nvars < nvars_) throw invalid_input_error("cannot shrink the variable set");
    MultiPoly out(nvars, field_);
    for (const auto& [e, c] : terms_) {
        Exponents ext = e;
        ext.resize(static_cast<std::size_t>(nvars), 0);
        out.add_term(ext, c);
    }
    return out;
}

} // namespace dualvar
