#include "lllhnf/corpus.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace lllhnf {

namespace {

struct Rng {
  std::uint64_t s;
  explicit Rng(std::uint64_t seed) : s(seed) {}
  std::uint64_t next() {
    s += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  long uniform(long lo, long hi) {
    return lo + long(next() % std::uint64_t(hi - lo + 1));
  }
};

void fill_random(IntMat& M, Rng& rng, long bound, int rows_from = 0, int rows_to = -1) {
  int hi = rows_to < 0 ? M.rows() : rows_to;
  for (int i = rows_from; i < hi; ++i)
    for (int j = 0; j < M.cols(); ++j) M(i, j) = rng.uniform(-bound, bound);
}

}  // namespace

IntMat generate(const GenSpec& spec) {
  if (spec.m < 0 || spec.n < 0) throw input_error("generate: negative dimension");
  if (spec.bound < 0) throw input_error("generate: negative entry bound");
  Rng rng(spec.seed);
  switch (spec.kind) {
    case GenKind::random: {
      IntMat G(spec.m, spec.n);
      fill_random(G, rng, spec.bound);
      return G;
    }
    case GenKind::rank_deficient: {
      int r = spec.rank;
      if (r < 0 || r > std::min(spec.m, spec.n))
        throw input_error("generate: rank outside [0, min(m, n)]");
      IntMat U(spec.m, r), V(r, spec.n);
      fill_random(U, rng, 2);
      fill_random(V, rng, 2);
      return U * V;
    }
    case GenKind::gcd_vector: {
      IntMat G(spec.m, 1);
      fill_random(G, rng, spec.bound);
      return G;
    }
    case GenKind::duplicate_rows: {
      int r = std::clamp(spec.rank, 1, std::max(1, spec.m));
      if (spec.m == 0) return IntMat(0, spec.n);
      IntMat G(spec.m, spec.n);
      fill_random(G, rng, spec.bound, 0, r);
      for (int i = r; i < spec.m; ++i) {
        int src = int(rng.uniform(0, r - 1));
        for (int j = 0; j < spec.n; ++j) G(i, j) = G(src, j);
      }
      return G;
    }
    case GenKind::scaled: {
      int r = std::clamp(spec.rank, 1, std::max(1, spec.m));
      if (spec.m == 0) return IntMat(0, spec.n);
      IntMat G(spec.m, spec.n);
      fill_random(G, rng, spec.bound, 0, r);
      for (int i = r; i < spec.m; ++i) {
        int src = int(rng.uniform(0, r - 1));
        long c = rng.uniform(-3, 3);
        for (int j = 0; j < spec.n; ++j) G(i, j) = c * G(src, j);
      }
      return G;
    }
  }
  throw input_error("generate: unknown kind");
}

std::string kind_name(GenKind k) {
  switch (k) {
    case GenKind::random: return "random";
    case GenKind::rank_deficient: return "rank_deficient";
    case GenKind::gcd_vector: return "gcd_vector";
    case GenKind::duplicate_rows: return "duplicate_rows";
    case GenKind::scaled: return "scaled";
  }
  return "?";
}

GenKind kind_from_name(const std::string& s) {
  if (s == "random") return GenKind::random;
  if (s == "rank_deficient") return GenKind::rank_deficient;
  if (s == "gcd_vector") return GenKind::gcd_vector;
  if (s == "duplicate_rows") return GenKind::duplicate_rows;
  if (s == "scaled") return GenKind::scaled;
  throw input_error("unknown generator kind: " + s);
}

std::vector<CorpusEntry> canonical_corpus() {
  std::vector<CorpusEntry> out;
  std::uint64_t seed = 1000;
  auto add = [&out, &seed](GenKind kind, int m, int n, long bound, int rank) {
    GenSpec s{kind, m, n, bound, rank, seed++};
    char buf[96];
    std::snprintf(buf, sizeof buf, "c%04d_%s_m%d_n%d_b%ld_r%d", int(out.size()),
                  kind_name(kind).c_str(), m, n, bound, rank);
    out.push_back({buf, s});
  };

  // Dense random coverage of every shape up to 8x8 at several entry bounds.
  for (long bound : {30L, 5L, 1L})
    for (int m = 1; m <= 8; ++m)
      for (int n = 1; n <= 8; ++n) add(GenKind::random, m, n, bound, 0);

  // Zero matrices (bound 0) in assorted shapes.
  for (auto [m, n] : {std::pair{1, 1}, {2, 2}, {3, 4}, {8, 8}, {1, 5}, {5, 1}})
    add(GenKind::random, m, n, 0, 0);

  // Every rank deficiency for each row count, two seeds per shape.
  for (int pass = 0; pass < 2; ++pass)
    for (int m = 2; m <= 8; ++m)
      for (int n : {2, 4, 6, 8})
        for (int r = 1; r < std::min(m, n); ++r) add(GenKind::rank_deficient, m, n, 0, r);

  // gcd columns.
  for (int m = 1; m <= 8; ++m)
    for (int s = 0; s < 7; ++s) add(GenKind::gcd_vector, m, 1, 30, 0);

  // Duplicate and scaled rows.
  for (int m = 2; m <= 8; ++m)
    for (int n : {2, 5, 8})
      for (int s = 0; s < 2; ++s) add(GenKind::duplicate_rows, m, n, 10, std::max(1, m / 2));
  for (int m = 2; m <= 8; ++m)
    for (int n : {2, 5, 8})
      for (int s = 0; s < 2; ++s) add(GenKind::scaled, m, n, 10, std::max(1, m / 2));

  // Two more random sweeps at different magnitudes.
  for (long bound : {2L, 12L})
    for (int m = 1; m <= 8; ++m)
      for (int n = 1; n <= 8; ++n) add(GenKind::random, m, n, bound, 0);

  return out;
}

void write_manifest(std::ostream& out, const std::vector<CorpusEntry>& entries) {
  out << "# name\tkind\tm\tn\tbound\trank\tseed\n";
  for (const CorpusEntry& e : entries)
    out << e.name << "\t" << kind_name(e.spec.kind) << "\t" << e.spec.m << "\t" << e.spec.n
        << "\t" << e.spec.bound << "\t" << e.spec.rank << "\t" << e.spec.seed << "\n";
}

std::vector<CorpusEntry> read_manifest(std::istream& in) {
  std::vector<CorpusEntry> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    CorpusEntry e;
    std::string kind;
    unsigned long long seed;
    if (!(ls >> e.name >> kind >> e.spec.m >> e.spec.n >> e.spec.bound >> e.spec.rank >> seed))
      throw input_error("manifest line " + std::to_string(lineno) + " malformed");
    e.spec.kind = kind_from_name(kind);
    e.spec.seed = seed;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace lllhnf
