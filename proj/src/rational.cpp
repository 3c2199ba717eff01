#include "symadj/rational.hpp"

namespace symadj {

Rat::Rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::invalid_argument("Rat: division by zero");
    v_ /= o.v_;
    return *this;
}

Rat Rat::inverse() const {
    if (is_zero()) throw std::invalid_argument("Rat: inverse of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
    return Rat(r);
}

std::optional<Rat> Rat::parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    // Accepted forms: "p" or "p/q" with p, q decimal integers, q > 0 after
    // canonicalization. mpq_class::set_str accepts both.
    mpq_class v;
    if (v.set_str(std::string(text), 10) != 0) return std::nullopt;
    if (sgn(mpq_class(v.get_den())) == 0) return std::nullopt;
    v.canonicalize();
    return Rat(v);
}

std::optional<Rat> Rat::sqrt_exact() const {
    if (sign() < 0) return std::nullopt;
    mpz_class n = num(), d = den();
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Rat(mpq_class(rn, rd));
}

std::string Rat::str() const {
    return v_.get_str();
}

}  // namespace symadj
