#include "eisring/golden.hpp"

namespace eisring::golden {

// Grid representative -> Voronoi representative, in grid order.

const std::vector<ResidueRow>& table_e6()
{
    static const std::vector<ResidueRow> rows{
    {{0, 0}, {0, 0}}, {{1, 0}, {1, 0}}, {{2, 0}, {2, 0}}, {{3, 0}, {3, 0}}, {{4, 0}, {-2, 0}},
    {{5, 0}, {-1, 0}}, {{0, 1}, {0, 1}}, {{1, 1}, {1, 1}}, {{2, 1}, {2, 1}}, {{3, 1}, {3, 1}},
    {{4, 1}, {-2, 1}}, {{5, 1}, {-1, 1}}, {{0, 2}, {0, 2}}, {{1, 2}, {1, 2}}, {{2, 2}, {2, 2}},
    {{3, 2}, {3, 2}}, {{4, 2}, {4, 2}}, {{5, 2}, {-1, 2}}, {{0, 3}, {0, -3}}, {{1, 3}, {1, 3}},
    {{2, 3}, {2, 3}}, {{3, 3}, {3, 3}}, {{4, 3}, {-2, -3}}, {{5, 3}, {-1, -3}}, {{0, 4}, {0, -2}},
    {{1, 4}, {1, -2}}, {{2, 4}, {2, -2}}, {{3, 4}, {-3, -2}}, {{4, 4}, {-2, -2}},
    {{5, 4}, {-1, -2}}, {{0, 5}, {0, -1}}, {{1, 5}, {1, -1}}, {{2, 5}, {2, -1}},
    {{3, 5}, {-3, -1}}, {{4, 5}, {-2, -1}}, {{5, 5}, {-1, -1}},
    };
    return rows;
}

const std::vector<ResidueRow>& table_e6_12rho()
{
    static const std::vector<ResidueRow> rows{
    {{0, 0}, {0, 0}}, {{1, 0}, {1, 0}}, {{2, 0}, {2, 0}}, {{3, 0}, {3, 0}}, {{4, 0}, {4, 0}},
    {{5, 0}, {5, 0}}, {{6, 0}, {0, 6}}, {{7, 0}, {1, 6}}, {{8, 0}, {2, 6}}, {{9, 0}, {3, 6}},
    {{10, 0}, {4, 6}}, {{11, 0}, {5, 6}}, {{12, 0}, {6, 6}}, {{13, 0}, {-5, 0}},
    {{14, 0}, {-4, 0}}, {{15, 0}, {-3, 0}}, {{16, 0}, {-2, 0}}, {{17, 0}, {-1, 0}},
    {{0, 1}, {0, 1}}, {{1, 1}, {1, 1}}, {{2, 1}, {2, 1}}, {{3, 1}, {3, 1}}, {{4, 1}, {4, 1}},
    {{5, 1}, {5, 1}}, {{6, 1}, {6, 1}}, {{7, 1}, {-5, -5}}, {{8, 1}, {-4, -5}}, {{9, 1}, {-3, -5}},
    {{10, 1}, {-2, -5}}, {{11, 1}, {-1, -5}}, {{12, 1}, {0, -5}}, {{13, 1}, {-5, 1}},
    {{14, 1}, {-4, 1}}, {{15, 1}, {-3, 1}}, {{16, 1}, {-2, 1}}, {{17, 1}, {-1, 1}},
    {{0, 2}, {0, 2}}, {{1, 2}, {1, 2}}, {{2, 2}, {2, 2}}, {{3, 2}, {3, 2}}, {{4, 2}, {4, 2}},
    {{5, 2}, {5, 2}}, {{6, 2}, {6, 2}}, {{7, 2}, {-5, -4}}, {{8, 2}, {-4, -4}}, {{9, 2}, {-3, -4}},
    {{10, 2}, {-2, -4}}, {{11, 2}, {-1, -4}}, {{12, 2}, {0, -4}}, {{13, 2}, {1, -4}},
    {{14, 2}, {-4, 2}}, {{15, 2}, {-3, 2}}, {{16, 2}, {-2, 2}}, {{17, 2}, {-1, 2}},
    {{0, 3}, {0, 3}}, {{1, 3}, {1, 3}}, {{2, 3}, {2, 3}}, {{3, 3}, {3, 3}}, {{4, 3}, {4, 3}},
    {{5, 3}, {5, 3}}, {{6, 3}, {6, 3}}, {{7, 3}, {-5, -3}}, {{8, 3}, {-4, -3}}, {{9, 3}, {-3, -3}},
    {{10, 3}, {-2, -3}}, {{11, 3}, {-1, -3}}, {{12, 3}, {0, -3}}, {{13, 3}, {1, -3}},
    {{14, 3}, {2, -3}}, {{15, 3}, {-3, 3}}, {{16, 3}, {-2, 3}}, {{17, 3}, {-1, 3}},
    {{0, 4}, {0, 4}}, {{1, 4}, {1, 4}}, {{2, 4}, {2, 4}}, {{3, 4}, {3, 4}}, {{4, 4}, {4, 4}},
    {{5, 4}, {5, 4}}, {{6, 4}, {6, 4}}, {{7, 4}, {-5, -2}}, {{8, 4}, {-4, -2}}, {{9, 4}, {-3, -2}},
    {{10, 4}, {-2, -2}}, {{11, 4}, {-1, -2}}, {{12, 4}, {0, -2}}, {{13, 4}, {1, -2}},
    {{14, 4}, {2, -2}}, {{15, 4}, {3, -2}}, {{16, 4}, {-2, 4}}, {{17, 4}, {-1, 4}},
    {{0, 5}, {0, 5}}, {{1, 5}, {1, 5}}, {{2, 5}, {2, 5}}, {{3, 5}, {3, 5}}, {{4, 5}, {4, 5}},
    {{5, 5}, {5, 5}}, {{6, 5}, {6, 5}}, {{7, 5}, {-5, -1}}, {{8, 5}, {-4, -1}}, {{9, 5}, {-3, -1}},
    {{10, 5}, {-2, -1}}, {{11, 5}, {-1, -1}}, {{12, 5}, {0, -1}}, {{13, 5}, {1, -1}},
    {{14, 5}, {2, -1}}, {{15, 5}, {3, -1}}, {{16, 5}, {4, -1}}, {{17, 5}, {-1, 5}},
    };
    return rows;
}

const std::vector<ResidueRow>& table_e91()
{
    static const std::vector<ResidueRow> rows{
    {{0, 0}, {0, 0}}, {{1, 0}, {1, 0}}, {{2, 0}, {2, 0}}, {{3, 0}, {3, 0}}, {{4, 0}, {4, 0}},
    {{5, 0}, {5, 0}}, {{6, 0}, {0, 5}}, {{7, 0}, {1, 5}}, {{8, 0}, {2, 5}}, {{9, 0}, {3, 5}},
    {{10, 0}, {4, 5}}, {{11, 0}, {5, 5}}, {{12, 0}, {-5, -1}}, {{13, 0}, {-4, -1}},
    {{14, 0}, {-3, -1}}, {{15, 0}, {-2, -1}}, {{16, 0}, {-1, -1}}, {{17, 0}, {0, -1}},
    {{18, 0}, {1, -1}}, {{19, 0}, {2, -1}}, {{20, 0}, {3, -1}}, {{21, 0}, {4, -1}},
    {{22, 0}, {-1, 4}}, {{23, 0}, {0, 4}}, {{24, 0}, {1, 4}}, {{25, 0}, {2, 4}}, {{26, 0}, {3, 4}},
    {{27, 0}, {4, 4}}, {{28, 0}, {5, 4}}, {{29, 0}, {-5, -2}}, {{30, 0}, {-4, -2}},
    {{31, 0}, {-3, -2}}, {{32, 0}, {-2, -2}}, {{33, 0}, {-1, -2}}, {{34, 0}, {0, -2}},
    {{35, 0}, {1, -2}}, {{36, 0}, {2, -2}}, {{37, 0}, {3, -2}}, {{38, 0}, {-2, 3}},
    {{39, 0}, {-1, 3}}, {{40, 0}, {0, 3}}, {{41, 0}, {1, 3}}, {{42, 0}, {2, 3}}, {{43, 0}, {3, 3}},
    {{44, 0}, {4, 3}}, {{45, 0}, {5, 3}}, {{46, 0}, {-5, -3}}, {{47, 0}, {-4, -3}},
    {{48, 0}, {-3, -3}}, {{49, 0}, {-2, -3}}, {{50, 0}, {-1, -3}}, {{51, 0}, {0, -3}},
    {{52, 0}, {1, -3}}, {{53, 0}, {2, -3}}, {{54, 0}, {-3, 2}}, {{55, 0}, {-2, 2}},
    {{56, 0}, {-1, 2}}, {{57, 0}, {0, 2}}, {{58, 0}, {1, 2}}, {{59, 0}, {2, 2}}, {{60, 0}, {3, 2}},
    {{61, 0}, {4, 2}}, {{62, 0}, {5, 2}}, {{63, 0}, {-5, -4}}, {{64, 0}, {-4, -4}},
    {{65, 0}, {-3, -4}}, {{66, 0}, {-2, -4}}, {{67, 0}, {-1, -4}}, {{68, 0}, {0, -4}},
    {{69, 0}, {1, -4}}, {{70, 0}, {-4, 1}}, {{71, 0}, {-3, 1}}, {{72, 0}, {-2, 1}},
    {{73, 0}, {-1, 1}}, {{74, 0}, {0, 1}}, {{75, 0}, {1, 1}}, {{76, 0}, {2, 1}}, {{77, 0}, {3, 1}},
    {{78, 0}, {4, 1}}, {{79, 0}, {5, 1}}, {{80, 0}, {-5, -5}}, {{81, 0}, {-4, -5}},
    {{82, 0}, {-3, -5}}, {{83, 0}, {-2, -5}}, {{84, 0}, {-1, -5}}, {{85, 0}, {0, -5}},
    {{86, 0}, {-5, 0}}, {{87, 0}, {-4, 0}}, {{88, 0}, {-3, 0}}, {{89, 0}, {-2, 0}},
    {{90, 0}, {-1, 0}},
    };
    return rows;
}

const std::vector<EnergyRow>& table_energy()
{
    // Gaussian modulus, Eisenstein modulus, size, then hundredths of
    // E(G), E(E), E2(G), E2(E), EM(G), EHex(E).
    static const std::vector<EnergyRow> rows{
        {{2, 0}, {2, 0}, 4, {85, 75, 100, 75, 100, 75}},
        {{3, 0}, {3, 0}, 9, {107, 105, 133, 133, 133, 111}},
        {{2, 3}, {3, 4}, 13, {136, 126, 215, 185, 154, 138}},
        {{4, 0}, {4, 0}, 16, {159, 140, 300, 225, 200, 150}},
        {{-3, 4}, {5, 5}, 25, {190, 177, 416, 360, 224, 192}},
        {{5, 0}, {5, 0}, 25, {187, 177, 400, 360, 240, 192}},
        {{6, 0}, {6, 0}, 36, {234, 211, 633, 508, 300, 231}},
        {{6, 1}, {7, 3}, 37, {232, 211, 616, 503, 292, 227}},
        {{7, 0}, {7, 0}, 49, {270, 246, 829, 686, 351, 269}},
        {{8, 0}, {8, 0}, 64, {309, 282, 1100, 900, 400, 309}},
        {{8, 3}, {8, 9}, 73, {327, 299, 1216, 1011, 416, 329}},
        {{9, 0}, {9, 0}, 81, {355, 317, 1431, 1133, 465, 348}},
        {{10, 0}, {10, 0}, 100, {385, 351, 1700, 1395, 500, 387}},
        {{11, 0}, {11, 0}, 121, {419, 387, 2000, 1691, 545, 426}},
        {{12, 0}, {12, 0}, 144, {461, 422, 2433, 2008, 600, 465}},
        {{13, 0}, {13, 0}, 169, {496, 457, 2800, 2354, 646, 504}},
        {{-5, 12}, {-7, 8}, 169, {497, 455, 2817, 2336, 630, 497}},
        {{14, 0}, {14, 0}, 196, {538, 492, 3300, 2732, 700, 543}},
        {{8, 12}, {12, 16}, 208, {552, 506, 3469, 2890, 687, 557}},
        {{15, 0}, {15, 0}, 225, {573, 527, 3733, 3133, 747, 582}},
        {{16, 0}, {16, 0}, 256, {614, 562, 4300, 3563, 800, 621}},
        {{16, 6}, {16, 18}, 292, {654, 600, 4867, 4057, 835, 663}},
        {{18, 3}, {21, 9}, 333, {698, 640, 5550, 4625, 906, 700}},
    };
    return rows;
}

} // namespace eisring::golden
