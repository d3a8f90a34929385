#include "wb/repro.hpp"

#include <fstream>
#include <sstream>

#include "wb/alba.hpp"
#include "wb/alc.hpp"
#include "wb/axioms.hpp"
#include "wb/canonical.hpp"
#include "wb/sweep.hpp"

namespace wb {

std::string data_path(const std::string& relative) { return std::string(WB_SOURCE_DIR) + "/data/" + relative; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string derivation_script(const std::string& tag) {
  std::string file = tag;
  // apostrophes are awkward in filenames
  if (file == "b'") file = "bp";
  if (file == "w'") file = "wp";
  return read_file(data_path("scripts/" + file + ".alc"));
}

namespace {

const std::vector<std::string> kScriptOrder = {"i", "tr", "mp", "w", "rt", "b", "b'", "c", "fr", "w'"};

std::string alba_table() {
  std::ostringstream out;
  for (const auto& info : axiom_table()) {
    AlbaResult res = run_alba(axiom(info.name));
    if (!res.success || res.runs.size() != 1) throw std::runtime_error("alba failed on " + info.name);
    out << info.name << ": " << canonical_print(res.runs[0].result) << "\n";
  }
  return out.str();
}

std::string alc_table() {
  std::ostringstream out;
  for (const auto& info : axiom_table()) {
    if (info.product.empty()) continue;
    auto d = run_alc(axiom(info.name));
    if (!d) throw std::runtime_error("alc found no correspondent for " + info.name);
    out << info.name << ": " << print(canonical_prop_vars(d->final_state().goal)) << "\n";
  }
  return out.str();
}

template <typename Frame>
std::string correspondent_table(const std::vector<Frame>& frames) {
  std::ostringstream out;
  for (const auto& info : axiom_table()) {
    AlbaResult res = run_alba(axiom(info.name));
    if (!res.success || res.runs.size() != 1) throw std::runtime_error("alba failed on " + info.name);
    AgreementReport rep = agreement_sweep(info.name, res.runs[0].result, frames);
    out << info.name << " frames=" << rep.frames << " holds=" << rep.holds
        << " disagreements=" << rep.disagreements << "\n";
  }
  return out.str();
}

std::string appendix_table() {
  std::ostringstream out;
  for (const auto& tag : kScriptOrder) {
    AlcDerivation d = replay_script(derivation_script(tag));
    std::string why;
    bool ok = check_derivation(d, &why);
    out << tag << ": " << print(d.input) << " ==> " << print(d.final_state().goal)
        << " steps=" << d.steps.size() << (ok ? " ok" : " ILLEGAL(" + why + ")") << "\n";
  }
  return out.str();
}

}  // namespace

std::string generate_repro(const std::string& target) {
  if (target == "table1-alba") return alba_table();
  if (target == "table3-alc") return alc_table();
  if (target == "binary-correspondents") {
    std::vector<BinaryFrame> frames;
    for (int n = 1; n <= 3; ++n)
      for (const auto& f : enumerate_binary(n)) frames.push_back(f);
    return correspondent_table(frames);
  }
  if (target == "ternary-correspondents") {
    std::vector<TernaryFrame> frames;
    for (int n = 1; n <= 2; ++n)
      for (const auto& f : enumerate_ternary(n)) frames.push_back(f);
    return correspondent_table(frames);
  }
  if (target == "appendix-a") return appendix_table();
  throw std::invalid_argument("unknown repro target: " + target);
}

int run_repro(const std::string& target, bool write, std::ostream& out) {
  std::string generated = generate_repro(target);
  std::string path = data_path("goldens/" + target + ".txt");
  if (write) {
    std::ofstream f(path);
    f << generated;
    out << "wrote " << path << "\n";
    return 0;
  }
  std::string golden = read_file(path);
  if (golden == generated) {
    out << target << ": ok (" << path << ")\n";
    return 0;
  }
  out << target << ": MISMATCH against " << path << "\n--- golden ---\n"
      << golden << "--- regenerated ---\n"
      << generated;
  return 1;
}

}  // namespace wb
