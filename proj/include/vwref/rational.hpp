#pragma once

#include <gmpxx.h>

#include <string>

namespace vw {

/// Exact rational scalar. GMP keeps these canonical (reduced, positive
/// denominator) through all arithmetic.
using Rat = mpq_class;

inline Rat rat(long n, long d = 1) {
    Rat r(n, d);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

/// r^e for integer e; e < 0 inverts (r must be nonzero).
Rat rat_pow(const Rat& r, long e);

/// "3", "-1/2" style; denominator omitted when 1.
std::string rat_str(const Rat& r);

/// Parse "a" or "a/b". Throws ParseError on malformed input.
Rat rat_parse(const std::string& s);

} // namespace vw
