#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace obl {

// All geometry runs on MPFR floats whose working precision is a runtime
// setting (decimal digits). 50 digits is enough to track orbits far past
// anything the acceptance suite asks for while leaving the tolerance
// eps = 10^-(digits-10) meaningful.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

namespace precision {

inline constexpr unsigned kDefaultDigits = 50;

unsigned digits();
void set_digits(unsigned d);

// Comparison tolerance: 10^-(digits-10).
const Real& eps();
const Real& pi();

inline bool near(const Real& a, const Real& b) { return abs(a - b) < eps(); }
inline bool near(const Real& a, const Real& b, const Real& scale) {
    Real s = abs(scale);
    if (s < 1) s = 1;
    return abs(a - b) < eps() * s;
}

// Restores the previous precision on destruction. Used by the escalation
// checks and by callers that need extra digits for one computation.
class Scoped {
  public:
    explicit Scoped(unsigned d) : saved_(digits()) { set_digits(d); }
    ~Scoped() { set_digits(saved_); }
    Scoped(const Scoped&) = delete;
    Scoped& operator=(const Scoped&) = delete;

  private:
    unsigned saved_;
};

} // namespace precision

// Decimal string at full context precision (used for JSON payloads so no
// binary-float loss sneaks into exports).
std::string to_decimal_string(const Real& x);
std::string to_decimal_string(const Real& x, unsigned digits);

} // namespace obl
