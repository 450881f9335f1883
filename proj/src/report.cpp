#include "lwb/report.hpp"

#include <sstream>

namespace lwb::report {

void ClaimReport::add(std::string input, std::string expected, std::string got) {
  bool ok = expected == got;
  pass = pass && ok;
  instances.push_back({std::move(input), std::move(expected), std::move(got), ok});
}

nlohmann::json ClaimReport::to_json() const {
  nlohmann::json inst = nlohmann::json::array();
  for (const ClaimInstance& i : instances) {
    inst.push_back({{"input", i.input},
                    {"expected", i.expected},
                    {"got", i.got},
                    {"pass", i.pass}});
  }
  return {{"claim", claim},
          {"instances", inst},
          {"pass", pass},
          {"seed", seed},
          {"corpus_size", corpus_size}};
}

bool RunReport::pass() const {
  for (const ClaimReport& c : claims)
    if (!c.pass) return false;
  return true;
}

nlohmann::json RunReport::to_json() const {
  nlohmann::json cs = nlohmann::json::array();
  for (const ClaimReport& c : claims) cs.push_back(c.to_json());
  return {{"version", version},
          {"seed", seed},
          {"corpus_size", corpus_size},
          {"claims", cs},
          {"pass", pass()}};
}

std::string RunReport::to_text() const {
  std::ostringstream out;
  for (const ClaimReport& c : claims) {
    std::size_t failed = 0;
    for (const ClaimInstance& i : c.instances)
      if (!i.pass) ++failed;
    out << (c.pass ? "[PASS] " : "[FAIL] ") << c.claim << " (" << c.instances.size()
        << " instances";
    if (failed) out << ", " << failed << " failed";
    out << ")\n";
    for (const ClaimInstance& i : c.instances) {
      if (i.pass) continue;
      out << "       " << i.input << ": expected " << i.expected << ", got " << i.got
          << "\n";
    }
  }
  out << (pass() ? "all claims hold" : "SOME CLAIMS FAILED") << " (seed " << seed
      << ", corpus size " << corpus_size << ")\n";
  return out.str();
}

}  // namespace lwb::report
