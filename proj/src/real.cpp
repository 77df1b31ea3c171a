#include "obl/real.hpp"

#include <sstream>

namespace obl {
namespace precision {

namespace {

struct Ctx {
    unsigned digits = kDefaultDigits;
    Real eps;
    Real pi;
    bool fresh = false;

    void refresh() {
        Real::default_precision(digits);
        eps = pow(Real(10), -static_cast<int>(digits > 10 ? digits - 10 : 1));
        pi = 4 * atan(Real(1));
        fresh = true;
    }
};

Ctx& ctx() {
    static Ctx c;
    if (!c.fresh) c.refresh();
    return c;
}

// The backend's own startup default is far below kDefaultDigits; initialize
// before main so no Real is ever built at the wrong precision.
[[maybe_unused]] const bool eager_init = (ctx(), true);

} // namespace

unsigned digits() { return ctx().digits; }

void set_digits(unsigned d) {
    if (d < 16) d = 16;
    Ctx& c = ctx();
    if (c.digits == d && c.fresh) return;
    c.digits = d;
    c.refresh();
}

const Real& eps() { return ctx().eps; }
const Real& pi() { return ctx().pi; }

} // namespace precision

std::string to_decimal_string(const Real& x) {
    return to_decimal_string(x, precision::digits());
}

std::string to_decimal_string(const Real& x, unsigned digits) {
    std::ostringstream os;
    os.precision(digits);
    os << x;
    return os.str();
}

} // namespace obl
