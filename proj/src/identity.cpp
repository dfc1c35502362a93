#include "qpsi/identity.hpp"

namespace qpsi {

Scalar term_value(const TermFactors& tf, const Scalar& q, double inf_tol) {
    if (tf.inf.empty()) return tf.finite;
    Scalar v = tf.finite.to_float();
    for (const auto& [arg, e] : tf.inf) {
        QPochResult p = qp_infinite(arg.to_float(), q.to_float(), inf_tol);
        if (e > 0) {
            for (int i = 0; i < e; ++i) v *= p.value;
        } else {
            if (p.value.is_zero()) throw PoleError("vanishing (a;q)_inf in a denominator");
            for (int i = 0; i < -e; ++i) v /= p.value;
        }
    }
    return v;
}

Scalar IdentityRecord::summand(const ParameterPoint& p, long k, double inf_tol) const {
    return term_value(term(p, k), p.q(), inf_tol);
}

TermSeries IdentityRecord::series(const ParameterPoint& p, double inf_tol) const {
    TermSeries s;
    s.kind = kind;
    if (kind == SeriesKind::terminating) s.n = p.n();
    const IdentityRecord* self = this;
    s.summand = [self, p, inf_tol](long k) { return self->summand(p, k, inf_tol); };
    return s;
}

const std::map<std::string, IdentityRecord>& registry() {
    static const std::map<std::string, IdentityRecord> reg = [] {
        std::map<std::string, IdentityRecord> m;
        detail::register_classical(m);
        detail::register_curious(m);
        return m;
    }();
    return reg;
}

const IdentityRecord& record(const std::string& id) {
    const auto& reg = registry();
    auto it = reg.find(id);
    if (it == reg.end()) throw Error("unknown identity id: " + id);
    return it->second;
}

}  // namespace qpsi
