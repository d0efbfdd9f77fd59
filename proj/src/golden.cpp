#include "persalg/golden.hpp"

#include <cctype>
#include <sstream>

namespace persalg::golden {

const char* const GENERIC_2X4 =
    "| x_1 x_3 x_5 x_7 |\n"
    "| x_2 x_4 x_6 x_8 |";

const char* const GENERIC_3X5 =
    "| x_1 x_4 x_7 x_10 x_13 |\n"
    "| x_2 x_5 x_8 x_11 x_14 |\n"
    "| x_3 x_6 x_9 x_12 x_15 |";

const char* const GENERIC_5X2 =
    "| y_1 y_6  |\n"
    "| y_2 y_7  |\n"
    "| y_3 y_8  |\n"
    "| y_4 y_9  |\n"
    "| y_5 y_10 |";

const char* const GENERIC_4X1 =
    "| y_87 |\n"
    "| y_88 |\n"
    "| y_89 |\n"
    "| y_90 |";

const char* const MATMUL_AB =
    "| x_1y_1+x_4y_2+x_7y_3+x_10y_4+x_13y_5 x_1y_6+x_4y_7+x_7y_8+x_10y_9+x_13y_10 |\n"
    "| x_2y_1+x_5y_2+x_8y_3+x_11y_4+x_14y_5 x_2y_6+x_5y_7+x_8y_8+x_11y_9+x_14y_10 |\n"
    "| x_3y_1+x_6y_2+x_9y_3+x_12y_4+x_15y_5 x_3y_6+x_6y_7+x_9y_8+x_12y_9+x_15y_10 |";

const char* const WEDGE2_A_T =
    "{-2} | -x_2x_4+x_1x_5     -x_3x_4+x_1x_6     -x_3x_5+x_2x_6     |\n"
    "{-2} | -x_2x_7+x_1x_8     -x_3x_7+x_1x_9     -x_3x_8+x_2x_9     |\n"
    "{-2} | -x_5x_7+x_4x_8     -x_6x_7+x_4x_9     -x_6x_8+x_5x_9     |\n"
    "{-2} | -x_2x_10+x_1x_11   -x_3x_10+x_1x_12   -x_3x_11+x_2x_12   |\n"
    "{-2} | -x_5x_10+x_4x_11   -x_6x_10+x_4x_12   -x_6x_11+x_5x_12   |\n"
    "{-2} | -x_8x_10+x_7x_11   -x_9x_10+x_7x_12   -x_9x_11+x_8x_12   |\n"
    "{-2} | -x_2x_13+x_1x_14   -x_3x_13+x_1x_15   -x_3x_14+x_2x_15   |\n"
    "{-2} | -x_5x_13+x_4x_14   -x_6x_13+x_4x_15   -x_6x_14+x_5x_15   |\n"
    "{-2} | -x_8x_13+x_7x_14   -x_9x_13+x_7x_15   -x_9x_14+x_8x_15   |\n"
    "{-2} | -x_11x_13+x_10x_14 -x_12x_13+x_10x_15 -x_12x_14+x_11x_15 |";

const char* const WEDGE3_A =
    "| -x_3x_5x_7+x_2x_6x_7+x_3x_4x_8-x_1x_6x_8-x_2x_4x_9+x_1x_5x_9 "
    "-x_3x_5x_10+x_2x_6x_10+x_3x_4x_11-x_1x_6x_11-x_2x_4x_12+x_1x_5x_12 "
    "-x_3x_8x_10+x_2x_9x_10+x_3x_7x_11-x_1x_9x_11-x_2x_7x_12+x_1x_8x_12 "
    "-x_6x_8x_10+x_5x_9x_10+x_6x_7x_11-x_4x_9x_11-x_5x_7x_12+x_4x_8x_12 "
    "-x_3x_5x_13+x_2x_6x_13+x_3x_4x_14-x_1x_6x_14-x_2x_4x_15+x_1x_5x_15 "
    "-x_3x_8x_13+x_2x_9x_13+x_3x_7x_14-x_1x_9x_14-x_2x_7x_15+x_1x_8x_15 "
    "-x_6x_8x_13+x_5x_9x_13+x_6x_7x_14-x_4x_9x_14-x_5x_7x_15+x_4x_8x_15 "
    "-x_3x_11x_13+x_2x_12x_13+x_3x_10x_14-x_1x_12x_14-x_2x_10x_15+x_1x_11x_15 "
    "-x_6x_11x_13+x_5x_12x_13+x_6x_10x_14-x_4x_12x_14-x_5x_10x_15+x_4x_11x_15 "
    "-x_9x_11x_13+x_8x_12x_13+x_9x_10x_14-x_7x_12x_14-x_8x_10x_15+x_7x_11x_15 |";

const char* const WEDGE2_B =
    "| -y_2y_6+y_1y_7  |\n"
    "| -y_3y_6+y_1y_8  |\n"
    "| -y_3y_7+y_2y_8  |\n"
    "| -y_4y_6+y_1y_9  |\n"
    "| -y_4y_7+y_2y_9  |\n"
    "| -y_4y_8+y_3y_9  |\n"
    "| -y_5y_6+y_1y_10 |\n"
    "| -y_5y_7+y_2y_10 |\n"
    "| -y_5y_8+y_3y_10 |\n"
    "| -y_5y_9+y_4y_10 |";

const char* const MINORS2_2X4 =
    "-x_2x_3+x_1x_4, -x_2x_5+x_1x_6, -x_4x_5+x_3x_6, "
    "-x_2x_7+x_1x_8, -x_4x_7+x_3x_8, -x_6x_7+x_5x_8";

const char* const Y1Y2_BLOCK =
    "y_1y_7+y_2y_8+y_3y_9+y_4y_10+y_5y_11+y_6y_12, "
    "y_1y_13+y_2y_14+y_3y_15+y_4y_16+y_5y_17+y_6y_18, "
    "y_1y_19+y_2y_20+y_3y_21+y_4y_22+y_5y_23+y_6y_24, "
    "y_1y_25+y_2y_26+y_3y_27+y_4y_28+y_5y_29+y_6y_30, "
    "y_1y_31+y_2y_32+y_3y_33+y_4y_34+y_5y_35+y_6y_36, "
    "y_1y_37+y_2y_38+y_3y_39+y_4y_40+y_5y_41+y_6y_42, "
    "y_1y_43+y_2y_44+y_3y_45+y_4y_46+y_5y_47+y_6y_48, "
    "y_1y_49+y_2y_50+y_3y_51+y_4y_52+y_5y_53+y_6y_54";

const char* const Y3Y4_BLOCK =
    "y_55y_87+y_63y_88+y_71y_89+y_79y_90, "
    "y_56y_87+y_64y_88+y_72y_89+y_80y_90, "
    "y_57y_87+y_65y_88+y_73y_89+y_81y_90, "
    "y_58y_87+y_66y_88+y_74y_89+y_82y_90, "
    "y_59y_87+y_67y_88+y_75y_89+y_83y_90, "
    "y_60y_87+y_68y_88+y_76y_89+y_84y_90, "
    "y_61y_87+y_69y_88+y_77y_89+y_85y_90, "
    "y_62y_87+y_70y_88+y_78y_89+y_86y_90";

std::string normalize(const std::string& s) {
    std::string out;
    std::istringstream lines(s);
    std::string line;
    while (std::getline(lines, line)) {
        // Drop Macaulay2 line-wrap separators (rows of dashes).
        bool dashes = !line.empty();
        for (char c : line)
            if (c != '-' && !std::isspace(static_cast<unsigned char>(c))) dashes = false;
        if (dashes) continue;
        bool in_label = false;
        for (char c : line) {
            if (c == '{') {
                in_label = true;
                continue;
            }
            if (c == '}') {
                in_label = false;
                continue;
            }
            if (in_label) continue;
            if (std::isspace(static_cast<unsigned char>(c)) || c == '*') continue;
            out.push_back(c);
        }
    }
    return out;
}

}  // namespace persalg::golden
