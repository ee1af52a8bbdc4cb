#include "sardquad/bigfloat.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace sardquad {

std::string BigFloat::str(int significant_digits) const {
    if (significant_digits < 2) significant_digits = 2;
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return sign() < 0 ? "-inf" : "inf";
    if (mpfr_zero_p(v_)) {
        std::string s = "0.";
        s.append(static_cast<size_t>(significant_digits - 1), '0');
        return s + "e+00";
    }

    mpfr_exp_t exp10 = 0;
    char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(significant_digits), v_, MPFR_RNDN);
    std::string digits(raw);
    mpfr_free_str(raw);

    std::string sign_part;
    if (!digits.empty() && digits[0] == '-') {
        sign_part = "-";
        digits.erase(digits.begin());
    }
    // mpfr's exponent counts digits before the implied decimal point, so the
    // scientific exponent of d.ddd is exp10 - 1.
    long e = static_cast<long>(exp10) - 1;

    std::string out = sign_part + digits.substr(0, 1) + "." + digits.substr(1);
    char buf[32];
    std::snprintf(buf, sizeof buf, "e%+03ld", e);
    return out + buf;
}

}  // namespace sardquad
