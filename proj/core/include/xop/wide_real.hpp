#pragma once

// Carrier type for moment recursions and the moment-matrix solves. Shifted
// Hankel matrices reach condition numbers near 1e13 at degree 6, so binary64
// storage of the moments is not enough; 113 bits keeps the solves exact to
// double.

namespace xop {

#if defined(__SIZEOF_FLOAT128__) && !defined(XOP_NO_FLOAT128)
__extension__ typedef __float128 wide_real;
#else
typedef long double wide_real;
#endif

inline wide_real wide_abs(wide_real v) { return v < 0 ? -v : v; }
inline double wide_abs(double v) { return v < 0 ? -v : v; }

}  // namespace xop
