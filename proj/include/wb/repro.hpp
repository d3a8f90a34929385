#pragma once

#include <iosfwd>
#include <string>

namespace wb {

// Regenerates one of the bundled reference tables:
//   table1-alba, table3-alc, binary-correspondents, ternary-correspondents,
//   appendix-a
std::string generate_repro(const std::string& target);

// Diffs the regenerated table against the bundled golden file (or rewrites it
// with write=true). Returns 0 when they match.
int run_repro(const std::string& target, bool write, std::ostream& out);

std::string data_path(const std::string& relative);
std::string read_file(const std::string& path);
std::string derivation_script(const std::string& tag);  // i, tr, mp, w, rt, b, b', c, fr, w'

}  // namespace wb
