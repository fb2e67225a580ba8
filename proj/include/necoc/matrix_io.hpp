#ifndef NECOC_MATRIX_IO_HPP
#define NECOC_MATRIX_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "necoc/matrix.hpp"

namespace necoc {

// Matrix text format, bit-exact:
//   line 1: "N c n"  (base-10 integers, single spaces)
//   then c lines of n base-10 symbols separated by single spaces
//   trailing newline, no comments.
std::string to_text(const CodingMatrix& m);

// Parses the format above. Tokenization is whitespace-tolerant; counts and
// symbol ranges are enforced. `source` names the input in error messages.
CodingMatrix parse_matrix_text(std::string_view text, const std::string& source = "<text>");

CodingMatrix read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const CodingMatrix& m, const std::filesystem::path& path);

}  // namespace necoc

#endif
