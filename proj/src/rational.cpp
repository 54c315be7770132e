#include "vwref/rational.hpp"

#include "vwref/errors.hpp"

namespace vw {

Rat rat_pow(const Rat& r, long e) {
    if (e == 0) return Rat(1);
    bool invert = e < 0;
    unsigned long n = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (invert && r == 0) throw CalcError("rat_pow: zero to a negative power");
    Rat out;
    mpz_pow_ui(out.get_num_mpz_t(), r.get_num_mpz_t(), n);
    mpz_pow_ui(out.get_den_mpz_t(), r.get_den_mpz_t(), n);
    if (invert) {
        Rat inv;
        mpq_inv(inv.get_mpq_t(), out.get_mpq_t());
        return inv;
    }
    out.canonicalize();
    return out;
}

std::string rat_str(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_parse(const std::string& s) {
    try {
        Rat r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal: '" + s + "'");
    }
}

} // namespace vw
