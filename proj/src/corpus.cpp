#include "pptlab/corpus.hpp"

#include <algorithm>

#include "pptlab/errors.hpp"

namespace pptlab {

namespace {

const char* kQuartic = "x^4+y^4+z^4+w^4";
const char* kQuintic = "x1^5+x2^5+x3^5+x4^5+x5^5";
const char* kCrossQuartic =
    "x1^4+x2^4+x3^4+x4^4+x1^2*x2^2+x1^2*x3^2+x2^2*x3^2+x1*x2*x3*(x1+x2+x3)";

std::vector<CorpusEntry> make_corpus() {
  using V = std::vector<unsigned>;
  std::vector<CorpusEntry> rows;
  auto add = [&](CorpusEntry e) { rows.push_back(std::move(e)); };

  add({"conic-p2", {"c3"}, 2, "x,y", "x^2+y^2", 7,
       V{0, 1, 1, 1, 1, 1, 1, 1}, "PerfectoidPure", "0", {3}, ""});
  add({"fermat-cubic-p2", {"fermat", "c1"}, 2, "x,y,z", "x^3+y^3+z^3", 7,
       V{0, 1, 0, 1, 0, 1, 0, 1}, "PerfectoidPure", "1/3", {1}, ""});
  add({"fermat-quintic-p2", {"fermat", "c2"}, 2, "x1..x5", kQuintic, 3,
       V{0, 1, 2, 2}, "NotPerfectoidPure", std::nullopt, {2},
       "r = 1 lies outside the r >= 2 hypothesis; reported as flagged"});
  add({"fermat-quintic-plus-p2", {"c3"}, 2, "x1..x5",
       std::string(kQuintic) + "+2*x1*x2*x3*x4*x5", 6, V{0, 1, 1, 1, 1, 1, 1},
       "PerfectoidPure", "0", {3}, ""});
  add({"cross-quartic-p2", {"c2"}, 2, "x1..x4", kCrossQuartic, 3,
       V{0, 1, 2, 2}, "NotPerfectoidPure", std::nullopt, {2},
       "r = 1 lies outside the r >= 2 hypothesis; reported as flagged"});
  add({"cross-quartic-plus-p2", {"c3"}, 2, "x1..x4",
       std::string(kCrossQuartic) + "+2*x1*x2*x3*x4", 6, V{0, 1, 1, 1, 1, 1, 1},
       "PerfectoidPure", "0", {3}, ""});
  add({"fermat-quartic-p2", {"fermat", "c2"}, 2, "x,y,z,w", kQuartic, 3,
       V{0, 1, 2, 2}, "NotPerfectoidPure", std::nullopt, {2},
       "r = 1 lies outside the r >= 2 hypothesis; reported as flagged"});
  add({"fermat-quartic-plus-p2", {"c3"}, 2, "x,y,z,w",
       std::string(kQuartic) + "+p*x*y*z*w", 6, V{0, 1, 1, 1, 1, 1, 1},
       "PerfectoidPure", "0", {3}, ""});
  add({"fermat-quartic-p3", {"fermat", "c1"}, 3, "x,y,z,w", kQuartic, 6,
       V{0, 2, 0, 2, 0, 2, 0}, "PerfectoidPure", "1/4", {1}, ""});
  add({"fermat-quartic-p5", {"fermat", "fermat-cy"}, 5, "x,y,z,w", kQuartic,
       4, V{0, 0, 0, 0, 0}, "PerfectoidPure", "1", {}, ""});
  add({"fermat-quartic-p7", {"fermat", "fermat-cy"}, 7, "x,y,z,w", kQuartic,
       4, V{0, 2, 0, 2, 0}, "PerfectoidPure", "17/24", {},
       "discrepancy: the published closed form 2/(p^2-1) = 1/24 disagrees with the "
       "series over the computed sequence; reporting (p^2-2p-1)/(p^2-1) = 17/24"});
  add({"fermat-cubic-p5", {"fermat", "fermat-cy"}, 5, "x,y,z", "x^3+y^3+z^3", 4,
       V{0, 1, 0, 1, 0}, "PerfectoidPure", "19/24", {}, ""});
  add({"fermat-cubic-p7", {"fermat", "fermat-cy"}, 7, "x,y,z", "x^3+y^3+z^3", 4,
       V{0, 0, 0, 0, 0}, "PerfectoidPure", "1", {}, ""});
  add({"regular-3-x2-p3", {"regular"}, 3, "x", "3-x^2", 4, V{0, 1, 1, 1, 1},
       "PerfectoidPure", "1/2", {}, ""});
  add({"regular-x-y3-p2", {"regular"}, 2, "x,y", "x+y^3", 5, V{0, 0, 0, 0, 0, 0},
       "PerfectoidPure", "1", {}, ""});
  add({"regular-x-y3-p3", {"regular"}, 3, "x,y", "x+y^3", 5, V{0, 0, 0, 0, 0, 0},
       "PerfectoidPure", "1", {}, ""});
  return rows;
}

std::string show(const std::vector<unsigned>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace

const std::vector<CorpusEntry>& builtin_corpus() {
  static const std::vector<CorpusEntry> rows = make_corpus();
  return rows;
}

bool corpus_matches(const CorpusEntry& e, const std::string& filter) {
  if (filter.empty()) return true;
  if (e.name.find(filter) != std::string::npos) return true;
  return std::any_of(e.tags.begin(), e.tags.end(), [&](const std::string& t) {
    return t.find(filter) != std::string::npos;
  });
}

json run_corpus(const std::string& filter, const Limits& limits,
                std::vector<std::string>& mismatches) {
  json rows = json::array();
  for (const auto& e : builtin_corpus()) {
    if (!corpus_matches(e, filter)) continue;
    Request req;
    req.command = Command::Classify;
    req.p = e.p;
    req.vars = e.vars;
    req.f = e.f;
    req.depth = e.depth;
    req.limits = limits;

    std::vector<std::string> diffs;
    json rec;
    try {
      rec = compute_record(req);
    } catch (const Error& err) {
      diffs.push_back(std::string("error: ") + err.what());
      rec = {{"error", {{"kind", to_string(err.kind())}, {"message", err.what()}}}};
    }
    if (diffs.empty()) {
      auto got = rec["sequence"]["values"].get<std::vector<unsigned>>();
      if (got != e.expected_sequence)
        diffs.push_back("sequence " + show(got) + ", expected " + show(e.expected_sequence));
      const std::string kind = rec["verdict"]["kind"].get<std::string>();
      if (kind != e.expected_verdict)
        diffs.push_back("verdict " + kind + ", expected " + e.expected_verdict);
      std::optional<std::string> ppt;
      if (rec["ppt"].is_object() && rec["ppt"]["exact"].is_object()) {
        const auto& ex = rec["ppt"]["exact"];
        ppt = ex["num"].get<std::string>();
        if (ex["den"] != "1") *ppt += "/" + ex["den"].get<std::string>();
      }
      if (ppt != e.expected_ppt)
        diffs.push_back("ppt " + ppt.value_or("none") + ", expected " +
                        e.expected_ppt.value_or("none"));
      std::set<int> crit;
      for (const auto& c : rec["criteria"]["satisfied"])
        crit.insert(std::stoi(c.get<std::string>().substr(1)));
      if (crit != e.expected_criteria) diffs.push_back("criteria differ");
    }
    if (!e.annotation.empty() && rec.contains("annotations"))
      rec["annotations"].push_back(e.annotation);
    if (!diffs.empty()) mismatches.push_back(e.name);
    rows.push_back({{"name", e.name},
                    {"tags", e.tags},
                    {"annotation", e.annotation},
                    {"ok", diffs.empty()},
                    {"diffs", diffs},
                    {"record", rec}});
  }
  return {{"schema_version", kSchemaVersion},
          {"tool", {{"name", kToolName}, {"version", version()}}},
          {"command", "corpus"},
          {"filter", filter},
          {"rows", rows},
          {"mismatches", mismatches}};
}

}  // namespace pptlab
