#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lllhnf/matrix.hpp"

namespace lllhnf {

enum class GenKind { random, rank_deficient, gcd_vector, duplicate_rows, scaled };

// A reproducible test-matrix description. The generator is a pure function
// of this record (splitmix64 stream, version 1); regenerating from the same
// record always yields the same matrix, which is what makes the shipped
// manifest meaningful.
//   random:         entries uniform in [-bound, bound]
//   rank_deficient: product of m x rank and rank x n factors with entries in [-2, 2]
//   gcd_vector:     m x 1 column with entries in [-bound, bound]
//   duplicate_rows: `rank` random base rows, the rest copies of earlier rows
//   scaled:         `rank` random base rows, the rest small multiples of earlier rows
struct GenSpec {
  GenKind kind = GenKind::random;
  int m = 0;
  int n = 0;
  long bound = 0;
  int rank = 0;  // used by rank_deficient, duplicate_rows, scaled
  std::uint64_t seed = 0;
};

// Throws input_error on inconsistent specs (negative dims, bad rank range).
IntMat generate(const GenSpec& spec);

struct CorpusEntry {
  std::string name;
  GenSpec spec;
};

// The shipped corpus: 600+ entries covering every dimension pair up to 8x8,
// entry bounds up to 30, all rank deficiencies, gcd columns, duplicate and
// scaled rows, and zero matrices.
std::vector<CorpusEntry> canonical_corpus();

std::string kind_name(GenKind k);
GenKind kind_from_name(const std::string& s);

// Tab-separated manifest: name, kind, m, n, bound, rank, seed.
void write_manifest(std::ostream& out, const std::vector<CorpusEntry>& entries);
std::vector<CorpusEntry> read_manifest(std::istream& in);

}  // namespace lllhnf
