#include "dtpt/rational.hpp"

namespace dtpt {

Rational rat_parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
    std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
    if (num.empty() || den.empty()) throw std::invalid_argument("malformed rational: " + s);
    auto check_digits = [&](const std::string& part, bool sign_ok) {
        for (size_t i = 0; i < part.size(); ++i) {
            char c = part[i];
            if (i == 0 && sign_ok && (c == '+' || c == '-') && part.size() > 1) continue;
            if (c < '0' || c > '9') throw std::invalid_argument("malformed rational: " + s);
        }
    };
    check_digits(num, true);
    check_digits(den, true);
    Integer n(num), d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + s);
    return rat(n, d);
}

std::string rat_str(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer rat_floor(const Rational& q) {
    Integer n;
    mpz_fdiv_q(n.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return n;
}

Integer rat_ceil(const Rational& q) {
    Integer n;
    mpz_cdiv_q(n.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return n;
}

std::string EpsRational::str() const {
    if (b == 0) return rat_str(a);
    std::string out = rat_str(a);
    if (b > 0) out += "+" + rat_str(b) + "*eps";
    else out += "-" + rat_str(-b) + "*eps";
    return out;
}

}  // namespace dtpt
