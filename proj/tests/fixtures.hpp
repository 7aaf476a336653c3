#pragma once

#include <string>

#include "fillperm/fillperm.hpp"

namespace fixtures {

inline constexpr const char* zeta = "(1,10,15,20,17,22,3,12)(24,5,18,11)(23,16,9,6,7,4,21,14)(2,19,8,13)";
inline constexpr const char* sigma_z =
    "(1,6,25,18)(2,23,28,5,14,27,22,3,12,21,26,15)(31,24,11,16)(32,13,10,19,20,9,8,29,30,7,4,17)";
inline constexpr const char* sigma_f = "(1,2,13,20,7,6,19,14,5,10,11,16,9,8,15,12,3,4,17,18)";
inline constexpr const char* sigma_f6 =
    "(1,2,11,28,25,44,19,18,43,38,35,8,17,22,23,40,21,20,39,10,7,34,27,6,13,36,29,12,9,24,3,26,31,14,15,30,33,4,5,"
    "32,37,16,41,42)";
inline constexpr const char* f4 =
    "(1,16,27,10,7,18,15,2,3,20,21,12,11,22,17,4,9,26,19,8,13,28,23,6,5,24,25,14)";
inline constexpr const char* zeta_prime = "(1,20,17,12)(24,15,10,5,18,21,4,11)(23,6,7,14)(2,9,16,19,8,3,22,13)";
inline constexpr const char* z5 =
    "(1,32,41,40,13,24)(48,15,18,29,36,11,16,39,46,9,12,27,10,33,44,7,22,37,38,5,20,31,42,17,30,45,4,23)(47,6,19,"
    "26)(2,21,28,43,8,3,14,35,34,25)";
inline constexpr const char* sigma_prime =
    "(1,10,11,36,25,30,19,4,43,24,35,16,17,8,23,26,21,6,39,18,7,42,27,14,13,44,29,20,9,32,3,34,31,22,15,38,33,12,5,"
    "40,37,2,41,28)";
inline constexpr const char* f1 = "(1,2,3,4)";

inline fillperm::Permutation perm(const char* text, int size) { return fillperm::parse_cycles(text, size); }
inline fillperm::FillingPermutation filling(const char* text, int size) { return fillperm::validate(perm(text, size)); }

inline fillperm::FillingPermutation Zeta() { return filling(zeta, 24); }
inline fillperm::FillingPermutation SigmaZ() { return filling(sigma_z, 32); }
inline fillperm::FillingPermutation SigmaF() { return filling(sigma_f, 20); }
inline fillperm::FillingPermutation SigmaF6() { return filling(sigma_f6, 44); }
inline fillperm::FillingPermutation F4() { return filling(f4, 28); }
inline fillperm::FillingPermutation ZetaPrime() { return filling(zeta_prime, 24); }
inline fillperm::FillingPermutation Z5() { return filling(z5, 48); }
inline fillperm::FillingPermutation SigmaPrime() { return filling(sigma_prime, 44); }
inline fillperm::FillingPermutation F1() { return filling(f1, 4); }

inline std::string data_path(const std::string& name) { return std::string(FILLPERM_DATA_DIR) + "/" + name; }

}  // namespace fixtures
