#pragma once

// Generator rows for the built-in code catalog, stored as plain 0/1 text and
// parsed at load time.  A checksum over every catalog matrix is pinned in the
// test suite, so any edit here must be deliberate.

namespace dtc::catalog_text {

// [[23,1,7]] Golay code: logical row followed by 11 stabilizer rows
inline constexpr char golay23_b[] =
    "11111111111111111111111\n"
    "11110010010100000000001\n"
    "00010110111100000000010\n"
    "00101101111000000000100\n"
    "01011011110000000001000\n"
    "10110111100000000010000\n"
    "10011101010100000100000\n"
    "11001000111100001000000\n"
    "01100011101100010000000\n"
    "11000111011000100000000\n"
    "01111100100101000000000\n"
    "11111001001010000000000\n";

// even-weight completion for the Golay basis (11 rows)
inline constexpr char golay23_e[] =
    "00010010010100000000000\n"
    "00000100111000000000000\n"
    "00001001110000000000000\n"
    "00010011100000000000000\n"
    "10010101000000000000000\n"
    "10001000010100000000000\n"
    "01000000101100000000000\n"
    "01000011001000000000000\n"
    "01000100000000000000000\n"
    "01111000000000000000000\n"
    "01010010010000000000000\n";

// [[17,1,5]] color code: logical row followed by 8 stabilizer rows
inline constexpr char color17_b[] =
    "11111111111111111\n"
    "11000110000000000\n"
    "00000110011000000\n"
    "00000000011001010\n"
    "00000000000001111\n"
    "01100011001101100\n"
    "00110001100000000\n"
    "00000001100110000\n"
    "00011000100010000\n";

// even-weight completion for the color-code basis (8 rows)
inline constexpr char color17_e[] =
    "00000110000000000\n"
    "01000010000000000\n"
    "00000010001000000\n"
    "00000000001001000\n"
    "00000000000001100\n"
    "00100001000000000\n"
    "00000001000100000\n"
    "00000001100000000\n";

// [[15,1,3]] punctured Reed-Muller code: logical row + 4 stabilizer rows
inline constexpr char rm15_b[] =
    "111111111111111\n"
    "101010101010101\n"
    "011001100110011\n"
    "000111100001111\n"
    "000000011111111\n";

// extra Z-stabilizer rows completing the Reed-Muller orthogonal complement
inline constexpr char rm15_c[] =
    "001000100010001\n"
    "000010100000101\n"
    "000000001010101\n"
    "000001100000011\n"
    "000000000110011\n"
    "000000000001111\n";

}  // namespace dtc::catalog_text
