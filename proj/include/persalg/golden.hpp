#pragma once

#include <string>

namespace persalg::golden {

// Expected outputs for the generic-matrix fixtures, stored as Macaulay2
// session text. Comparisons go through normalize(), which erases whitespace,
// '*' separators, degree labels like {2}, and line-wrap dash rows, so the
// check is byte-for-byte up to those layout artifacts.

extern const char* const GENERIC_2X4;   // genericMatrix(R, x_1, 2, 4)
extern const char* const GENERIC_3X5;   // A = genericMatrix(R, x_1, 3, 5)
extern const char* const GENERIC_5X2;   // B = genericMatrix(R, y_1, 5, 2)
extern const char* const GENERIC_4X1;   // genericMatrix(S0, y_87, 4, 1)
extern const char* const MATMUL_AB;     // A*B (3x2)
extern const char* const WEDGE2_A_T;    // transpose(exteriorPower(2, A)) (10x3)
extern const char* const WEDGE3_A;      // exteriorPower(3, A) (1x10)
extern const char* const WEDGE2_B;      // exteriorPower(2, B) (10x1)
extern const char* const MINORS2_2X4;   // minors(2, genericMatrix(R, x_1, 2, 4)), comma separated
extern const char* const Y1Y2_BLOCK;    // D1*D2 entries for format (1,6,8,4,1), comma separated
extern const char* const Y3Y4_BLOCK;    // D3*D4 entries for format (1,6,8,4,1), comma separated

std::string normalize(const std::string& s);

}  // namespace persalg::golden
