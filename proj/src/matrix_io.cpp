#include "lllhnf/matrix_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace lllhnf {

namespace {

// Pulls the next line that is neither blank nor a '#' comment.
bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    size_t p = line.find_first_not_of(" \t\r");
    if (p == std::string::npos) continue;
    if (line[p] == '#') continue;
    return true;
  }
  return false;
}

BigInt parse_int(const std::string& tok) {
  BigInt v;
  if (mpz_set_str(v.get_mpz_t(), tok.c_str(), 10) != 0)
    throw input_error("matrix file: bad integer token '" + tok + "'");
  return v;
}

}  // namespace

IntMat read_matrix(std::istream& in) {
  std::string line;
  if (!next_content_line(in, line)) throw input_error("matrix file: missing header line");
  std::istringstream hdr(line);
  long m, n;
  std::string extra;
  if (!(hdr >> m >> n) || (hdr >> extra))
    throw input_error("matrix file: header must be exactly 'm n'");
  if (m < 0 || n < 0) throw input_error("matrix file: negative dimension");
  const int rows = int(m), cols = int(n);
  IntMat M(rows, cols);
  for (int i = 0; i < m; ++i) {
    if (!next_content_line(in, line))
      throw input_error("matrix file: expected " + std::to_string(m) + " rows, got " +
                        std::to_string(i));
    std::istringstream row(line);
    std::string tok;
    for (int j = 0; j < n; ++j) {
      if (!(row >> tok))
        throw input_error("matrix file: row " + std::to_string(i + 1) + " has fewer than " +
                          std::to_string(n) + " entries");
      M(i, j) = parse_int(tok);
    }
    if (row >> tok)
      throw input_error("matrix file: row " + std::to_string(i + 1) + " has more than " +
                        std::to_string(n) + " entries");
  }
  if (next_content_line(in, line)) throw input_error("matrix file: trailing content after matrix");
  return M;
}

IntMat read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open matrix file: " + path);
  return read_matrix(in);
}

void write_matrix(std::ostream& out, const IntMat& M) {
  out << M.rows() << " " << M.cols() << "\n";
  for (int i = 0; i < M.rows(); ++i) {
    for (int j = 0; j < M.cols(); ++j) {
      if (j) out << " ";
      out << M(i, j).get_str();
    }
    out << "\n";
  }
}

void write_matrix_file(const std::string& path, const IntMat& M) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot open file for writing: " + path);
  write_matrix(out, M);
}

std::string matrix_to_string(const IntMat& M) {
  std::ostringstream os;
  write_matrix(os, M);
  return os.str();
}

}  // namespace lllhnf
