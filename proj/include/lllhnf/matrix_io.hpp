#pragma once

#include <iosfwd>
#include <string>

#include "lllhnf/matrix.hpp"

namespace lllhnf {

// Text format: first non-comment line "m n", then m lines with n integers
// each, whitespace separated. Lines starting with '#' and blank lines are
// ignored. Entries may have arbitrary magnitude. Throws input_error on any
// malformation (wrong counts, non-integer tokens, negative dimensions).
IntMat read_matrix(std::istream& in);
IntMat read_matrix_file(const std::string& path);

void write_matrix(std::ostream& out, const IntMat& M);
void write_matrix_file(const std::string& path, const IntMat& M);

std::string matrix_to_string(const IntMat& M);

}  // namespace lllhnf
