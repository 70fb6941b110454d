#pragma once

#include <cstddef>
#include <string>

namespace mzv {

struct OracleReport {
    bool ok = true;
    std::size_t cases = 0;
    std::string counterexample;  // first failure in enumeration order
};

// fl_l(F sh_l G) = fl_l(F) sh_l fl_l(G) for size(F)+size(G) <= max_size, l in {-1,0,1,2};
// forest_sum factorizes through fl_1 / fl_-1 for size(F) <= max_size, N in {5,10}
OracleReport oracle_flattening(int max_size, long max_dec = 3);

// yew = yew_via_definition for weight(F)+weight(G) <= max_size;
// fl_0 o s^T = s o fl_yew for weight(F) <= max_size
OracleReport oracle_yew(int max_size, long max_dec = 3);

// s^T round trip, psi o phi = id and czv_reduce o phi = fl_yew on convergent forests of size <= max_size
OracleReport oracle_roundtrip(int max_size, long max_dec = 4);

}  // namespace mzv
