#pragma once

// Certificate builders for the closed-form nonexistence arguments: diameter 3,
// diameter 4 / girth 9 (Pell + root windows), odd-degree girth 5,
// diameter 0 (mod 6), and girth 7.

#include "cdx/certificate.hpp"

namespace cdx {

TheoremCertificate diam3_certificate();
TheoremCertificate diam4_certificate();
TheoremCertificate girth5_obstruction(long d_max);
TheoremCertificate girth7_certificate();
TheoremCertificate diam6_obstruction();
TheoremCertificate angle_scan_certificate();

// The coefficient list printed in the diameter-3 theorem differs from
// f_9(G_{10,3}); it equals f_9 applied to a cubic with "-8x" in place of
// "-18x". Both polynomials are irreducible, so the argument is unaffected.
// These accessors pin both sides for tests and the certificate.
IntPoly diam3_composite();           // f_9(G_{10,3})
IntPoly diam3_printed_composite();   // the printed coefficients
IntPoly diam3_printed_inner();       // x^3 + x^2 - 8x - 9

}  // namespace cdx
