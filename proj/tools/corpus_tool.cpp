// Materializes the canonical corpus into a directory: manifest.tsv plus one
// .mat file per entry. The generator is deterministic, so the output is
// reproducible bit for bit.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "lllhnf/corpus.hpp"
#include "lllhnf/matrix_io.hpp"

using namespace lllhnf;

int main(int argc, char** argv) {
  CLI::App app{"materialize the canonical test corpus"};
  std::string out_dir = "corpus";
  bool manifest_only = false;
  app.add_option("-o,--output", out_dir, "output directory (must exist)");
  app.add_flag("--manifest-only", manifest_only, "write only manifest.tsv");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    std::vector<CorpusEntry> entries = canonical_corpus();
    {
      std::ofstream man(out_dir + "/manifest.tsv");
      if (!man) throw input_error("cannot write " + out_dir + "/manifest.tsv");
      write_manifest(man, entries);
    }
    if (!manifest_only) {
      for (const auto& e : entries)
        write_matrix_file(out_dir + "/" + e.name + ".mat", generate(e.spec));
    }
    std::cout << entries.size() << " entries written to " << out_dir << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
