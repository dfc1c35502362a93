#include "qpsi/parameter_point.hpp"

namespace qpsi {

ParameterPoint::ParameterPoint(Mode mode, Scalar q) : mode_(mode), q_(q.to_mode(mode)) {
    if (q_.is_zero()) throw DegenerateInputError("base q must satisfy 0 < |q| < 1");
    mpf_class m = mag(q_);
    if (m >= 1) throw DegenerateInputError("base q must satisfy 0 < |q| < 1");
}

ParameterPoint& ParameterPoint::set(char sym, Scalar v) {
    vals_[sym] = v.to_mode(mode_);
    return *this;
}

ParameterPoint& ParameterPoint::set_int(char sym, long v) {
    ints_[sym] = v;
    return *this;
}

ParameterPoint& ParameterPoint::set_sqrt_a(Scalar s) {
    sqrt_a_ = s.to_mode(mode_);
    vals_['a'] = *sqrt_a_ * *sqrt_a_;
    return *this;
}

const Scalar& ParameterPoint::get(char sym) const {
    auto it = vals_.find(sym);
    if (it == vals_.end()) throw Error(std::string("missing parameter '") + sym + "'");
    return it->second;
}

long ParameterPoint::get_int(char sym) const {
    auto it = ints_.find(sym);
    if (it == ints_.end()) throw Error(std::string("missing integer parameter '") + sym + "'");
    return it->second;
}

ParameterPoint ParameterPoint::to_float() const {
    ParameterPoint p(Mode::floating, q_.to_float());
    for (const auto& [k, v] : vals_) p.vals_[k] = v.to_float();
    p.ints_ = ints_;
    if (sqrt_a_) p.sqrt_a_ = sqrt_a_->to_float();
    return p;
}

}  // namespace qpsi
