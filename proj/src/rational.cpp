#include "ria/rational.hpp"

#include <stdexcept>

namespace ria {

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        size_t frac_len = s.size() - dot - 1;
        if (digits.empty() || frac_len == 0) throw std::invalid_argument("bad rational literal: " + s);
        mpz_class num(digits, 10);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
        return make_rational(num, den);
    }
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    q.canonicalize();
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    return q;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpz_class round_nearest(const Rational& q) {
    // floor(q + 1/2), with .5 away from zero for negative halves handled
    // by symmetry: round(q) = sign * floor(|q| + 1/2).
    Rational a = abs(q);
    mpz_class twice_num = a.get_num() * 2 + a.get_den();
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), twice_num.get_mpz_t(), mpz_class(a.get_den() * 2).get_mpz_t());
    return sgn(q) < 0 ? mpz_class(-r) : r;
}

mpz_class floor_q(const Rational& q) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

mpz_class ceil_q(const Rational& q) {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

}  // namespace ria
