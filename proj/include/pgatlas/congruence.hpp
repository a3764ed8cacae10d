// Congruence classes A ~ X A X^t of 2x2 matrices over F_p.
#pragma once

#include <vector>

#include "pgatlas/fp.hpp"

namespace pga {

struct CongruenceWitness {
    Mat2 normal_form;
    Mat2 x;  // normal_form = X A X^t
};

// Representatives of the congruence classes of invertible (resp. singular) matrices.
std::vector<Mat2> transversal(int p, bool invertible);
bool congruent_to(const Mat2& a, const Mat2& b, int p);
CongruenceWitness congruence_normal_form(const Mat2& a, int p);

}  // namespace pga
