#include "rauzylab/rational.hpp"

#include <cctype>

namespace rauzylab {

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw config_error("empty rational literal");
    auto dot_pos = s.find('.');
    if (dot_pos != std::string::npos) {
        // decimal literal: sign, integer part, fractional part
        std::string digits = s.substr(0, dot_pos) + s.substr(dot_pos + 1);
        size_t frac_len = s.size() - dot_pos - 1;
        for (size_t i = 0; i < digits.size(); ++i) {
            if (i == 0 && (digits[i] == '+' || digits[i] == '-')) continue;
            if (!std::isdigit(static_cast<unsigned char>(digits[i])))
                throw config_error("bad rational literal: " + s);
        }
        Int num(digits, 10);
        Int den = 1;
        for (size_t i = 0; i < frac_len; ++i) den *= 10;
        Rat q(num, den);
        q.canonicalize();
        return q;
    }
    Rat q;
    if (q.set_str(s, 10) != 0) throw config_error("bad rational literal: " + s);
    if (q.get_den() == 0) throw config_error("zero denominator: " + s);
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& q) {
    Rat c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

namespace {
constexpr double kLn2 = 0.69314718055994530941723212145818;

double log_int(const Int& z) {
    signed long exp2 = 0;
    double d = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    return std::log(d) + static_cast<double>(exp2) * kLn2;
}
}  // namespace

double log_rat(const Rat& q) {
    if (sgn(q) <= 0) throw config_error("log of nonpositive rational");
    return log_int(q.get_num()) - log_int(q.get_den());
}

double log_rat_near_one(const Rat& q) {
    if (sgn(q) <= 0) throw config_error("log of nonpositive rational");
    Rat eps = q - 1;
    double e = to_double(eps);
    if (std::fabs(e) < 0.5) return std::log1p(e);
    return log_rat(q);
}

}  // namespace rauzylab
