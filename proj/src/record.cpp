#include "pptlab/record.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cstdio>
#include <set>
#include <sstream>

#include "pptlab/cache.hpp"
#include "pptlab/corpus.hpp"
#include "pptlab/errors.hpp"
#include "pptlab/parse.hpp"
#include "pptlab/verdict.hpp"

namespace pptlab {

const char* version() { return PPTLAB_VERSION; }

namespace {

constexpr std::pair<Command, const char*> kCommandNames[] = {
    {Command::Sequence, "sequence"}, {Command::Ppt, "ppt"},
    {Command::Classify, "classify"}, {Command::QfsHeight, "qfs-height"},
    {Command::Fpt, "fpt"},           {Command::Criteria, "criteria"},
    {Command::Corpus, "corpus"},
};

const char* class_name(ErrorClass c) {
  switch (c) {
    case ErrorClass::InvalidInput: return "invalid-input";
    case ErrorClass::ResourceLimit: return "resource-limit";
    case ErrorClass::Internal: return "internal";
  }
  return "internal";
}

int exit_code_for(ErrorClass c) {
  switch (c) {
    case ErrorClass::InvalidInput: return kExitInvalidInput;
    case ErrorClass::ResourceLimit: return kExitResourceLimit;
    case ErrorClass::Internal: return kExitInternal;
  }
  return kExitInternal;
}

json tool_block() { return {{"name", kToolName}, {"version", version()}}; }

json rational_json(const Rational& r) {
  return {{"num", r.num().str()}, {"den", r.den().str()}};
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorKind::Internal, "SHA-256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 15]);
  }
  return out;
}

json verdict_json(const Verdict& v) {
  json j;
  if (auto* pp = std::get_if<PerfectoidPure>(&v)) {
    j["kind"] = "PerfectoidPure";
    j["basis"] = pp->basis == PurityBasis::QuickCriterion ? "QuickCriterion" : "AllBounded";
    j["criterion"] = pp->criterion ? json(pp->criterion) : json(nullptr);
    j["certified"] = pp->certified;
    j["certificate"] = to_string(pp->certificate);
    j["up_to_depth"] = pp->up_to_depth;
  } else if (auto* np = std::get_if<NotPerfectoidPure>(&v)) {
    j["kind"] = "NotPerfectoidPure";
    j["r"] = np->r;
    j["flagged_r1"] = np->flagged_r1;
  } else {
    j["kind"] = "Inconclusive";
    j["reason"] = to_string(std::get<Inconclusive>(v).reason);
  }
  j["description"] = describe(v);
  return j;
}

json criteria_json(const QuickCriteria& q, const Certification* cert) {
  json sat = json::array();
  for (int c : q.satisfied) sat.push_back("C" + std::to_string(c));
  json j = {{"applicable", q.applicable}, {"satisfied", sat}, {"note", q.note}};
  if (cert) {
    j["certificate"] = to_string(cert->certificate);
    j["consistent"] = cert->consistent;
    j["notes"] = cert->notes;
  } else {
    j["certificate"] = nullptr;
    j["consistent"] = nullptr;
    j["notes"] = json::array();
  }
  return j;
}

json ppt_json(const PptValue& v) {
  json j = {{"partial", rational_json(v.partial)},
            {"partial_float", v.partial.to_double()}};
  if (v.exact) {
    j["exact"] = {{"num", v.exact->value.num().str()},
                  {"den", v.exact->value.den().str()},
                  {"preperiod", v.exact->preperiod},
                  {"period", v.exact->period},
                  {"conjectural", v.exact->conjectural},
                  {"source", v.exact->source}};
  } else {
    j["exact"] = nullptr;
  }
  return j;
}

json qfs_json(const QfsHeight& q) {
  switch (q.kind) {
    case QfsHeight::Kind::Finite:
      return {{"kind", "Finite"}, {"height", q.height}};
    case QfsHeight::Kind::NotQuasiFSplit:
      return {{"kind", "NotQuasiFSplit"}, {"height", nullptr}};
    case QfsHeight::Kind::ExceedsDepth:
      break;
  }
  return {{"kind", "ExceedsDepth"}, {"height", nullptr}, {"depth", q.depth}};
}

struct Prepared {
  ContextPtr ctx;
  LiftPoly f;
  std::string canonical;
};

Prepared prepare(const Request& req) {
  if (req.command == Command::Corpus)
    throw Error(ErrorKind::InvalidArgument, "corpus has no single input");
  if (req.p == 0) throw Error(ErrorKind::InvalidArgument, "missing p");
  if (req.vars.empty()) throw Error(ErrorKind::InvalidArgument, "missing vars");
  if (req.f.empty()) throw Error(ErrorKind::InvalidArgument, "missing f");
  if (req.depth < 1 || req.depth > kMaxDepth)
    throw Error(ErrorKind::InvalidArgument,
                "depth must be between 1 and " + std::to_string(kMaxDepth));
  if (req.emax < 1 || req.emax > kMaxDepth)
    throw Error(ErrorKind::InvalidArgument,
                "emax must be between 1 and " + std::to_string(kMaxDepth));
  auto ctx = Context::create(req.p, parse_var_list(req.vars), req.limits);
  LiftPoly f = parse_poly(req.f, ctx);
  std::string canonical = f.render();
  return {ctx, std::move(f), std::move(canonical)};
}

json skeleton(const Request& req, const Prepared& in) {
  json rec;
  rec["schema_version"] = kSchemaVersion;
  rec["tool"] = tool_block();
  rec["command"] = to_string(req.command);
  rec["input_hash"] = content_hash(req, in.canonical);
  rec["context"] = {{"p", in.ctx->p()},
                    {"vars", in.ctx->var_names()},
                    {"f", in.canonical}};
  rec["depth"] = req.depth;
  for (const char* k : {"sequence", "trace", "verdict", "ppt", "qfs_height",
                        "nu_table", "fpt", "criteria"})
    rec[k] = nullptr;
  rec["annotations"] = json::array();
  return rec;
}

json build_record(const Request& req, const Prepared& in) {
  const auto t0 = std::chrono::steady_clock::now();
  json rec = skeleton(req, in);
  auto h = HypersurfaceInput::validate(in.f);
  std::vector<double> ms;

  auto sequence = [&]() {
    LadderOptions opts;
    opts.trace = req.trace;
    SplitSequence seq = splitting_sequence(h, req.depth, opts);
    rec["sequence"] = {{"values", seq.values},
                       {"terminated_at_p", seq.terminated_at_p
                                               ? json(*seq.terminated_at_p)
                                               : json(nullptr)}};
    if (req.trace) rec["trace"] = seq.per_step_ideals;
    ms = seq.ms_per_depth;
    return seq;
  };

  switch (req.command) {
    case Command::Sequence:
      sequence();
      break;
    case Command::Ppt:
    case Command::Classify: {
      SplitSequence seq = sequence();
      Certification cert = certify(seq);
      rec["criteria"] = criteria_json(cert.criteria, &cert);
      const bool bounded = !seq.terminated_at_p;
      if (req.command == Command::Classify)
        rec["verdict"] = verdict_json(classify(seq, cert, {req.strict_r1}));
      // ppt is undefined once some s_i = p; the ppt command reports that as
      // an error, classify just leaves the block empty.
      if (bounded || req.command == Command::Ppt)
        rec["ppt"] = ppt_json(compute_ppt(seq, cert));
      break;
    }
    case Command::QfsHeight: {
      SplitSequence seq = sequence();
      rec["qfs_height"] = qfs_json(qfs_height(seq.values));
      break;
    }
    case Command::Fpt: {
      NuTable t = nu_table(h.f_res(), req.emax);
      json rows = json::array();
      for (std::size_t e = 0; e < t.entries.size(); ++e)
        rows.push_back({{"e", e + 1}, {"nu", t.entries[e]}});
      rec["nu_table"] = rows;
      Rational approx(BigInt(t.entries.back()), big_pow(t.p, req.emax));
      rec["fpt"] = {{"e", req.emax},
                    {"approx", rational_json(approx)},
                    {"approx_float", approx.to_double()}};
      break;
    }
    case Command::Criteria:
      rec["criteria"] = criteria_json(check_quick_criteria(h), nullptr);
      break;
    case Command::Corpus:
      break;
  }
  const auto t1 = std::chrono::steady_clock::now();
  rec["timings"] = {{"ms_per_depth", ms},
                    {"total_ms", std::chrono::duration<double, std::milli>(t1 - t0).count()},
                    {"cache_hit", false}};
  return rec;
}

template <typename T>
T get_field(const json& j, const char* key, T fallback) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return fallback;
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw Error(ErrorKind::InvalidArgument, std::string("bad type for '") + key + "'");
  }
}

json error_record(const std::string& command, const Error& e) {
  json err = {{"kind", to_string(e.kind())},
              {"class", class_name(e.error_class())},
              {"message", e.what()}};
  if (auto* se = dynamic_cast<const SyntaxError*>(&e)) err["position"] = se->position();
  return {{"schema_version", kSchemaVersion},
          {"tool", tool_block()},
          {"command", command},
          {"error", err}};
}

std::string fmt_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", ms);
  return buf;
}

std::string join_values(const json& arr) {
  std::string s = "(";
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) s += ",";
    s += arr[i].dump();
  }
  return s + ")";
}

std::string ratio_text(const json& r) {
  const std::string num = r["num"].get<std::string>();
  const std::string den = r["den"].get<std::string>();
  return den == "1" ? num : num + "/" + den;
}

}  // namespace

std::optional<Command> parse_command(const std::string& name) {
  for (auto& [c, n] : kCommandNames)
    if (name == n) return c;
  return std::nullopt;
}

const char* to_string(Command c) {
  for (auto& [k, n] : kCommandNames)
    if (k == c) return n;
  return "?";
}

Request request_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidArgument, "request must be a JSON object");
  static const std::set<std::string> known = {
      "command", "p",     "vars",          "f",              "depth",
      "emax",    "json",  "trace",         "strict_r1",      "max_monomials",
      "max_generators",   "filter",        "cache_dir",      "no_cache"};
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!known.count(it.key()))
      throw Error(ErrorKind::InvalidArgument, "unknown request field '" + it.key() + "'");

  Request r;
  const std::string cmd = get_field<std::string>(j, "command", "");
  auto c = parse_command(cmd);
  if (!c) throw Error(ErrorKind::InvalidArgument, "unknown command '" + cmd + "'");
  r.command = *c;
  const auto p = get_field<std::int64_t>(j, "p", 0);
  const auto depth = get_field<std::int64_t>(j, "depth", kDefaultDepth);
  const auto emax = get_field<std::int64_t>(j, "emax", kDefaultEmax);
  if (p < 0 || p > 1000000) throw Error(ErrorKind::InvalidArgument, "p out of range");
  if (depth < 1 || depth > kMaxDepth)
    throw Error(ErrorKind::InvalidArgument,
                "depth must be between 1 and " + std::to_string(kMaxDepth));
  if (emax < 1 || emax > kMaxDepth)
    throw Error(ErrorKind::InvalidArgument,
                "emax must be between 1 and " + std::to_string(kMaxDepth));
  r.p = static_cast<unsigned>(p);
  r.depth = static_cast<unsigned>(depth);
  r.emax = static_cast<unsigned>(emax);
  r.vars = get_field<std::string>(j, "vars", "");
  r.f = get_field<std::string>(j, "f", "");
  r.json = get_field<bool>(j, "json", false);
  r.trace = get_field<bool>(j, "trace", false);
  r.strict_r1 = get_field<bool>(j, "strict_r1", false);
  const auto mm = get_field<std::int64_t>(j, "max_monomials",
                                          static_cast<std::int64_t>(r.limits.max_monomials));
  const auto mg = get_field<std::int64_t>(j, "max_generators",
                                          static_cast<std::int64_t>(r.limits.max_generators));
  if (mm < 1 || mg < 1) throw Error(ErrorKind::InvalidArgument, "limits must be positive");
  r.limits.max_monomials = static_cast<std::size_t>(mm);
  r.limits.max_generators = static_cast<std::size_t>(mg);
  r.filter = get_field<std::string>(j, "filter", "");
  if (j.contains("cache_dir") && !j["cache_dir"].is_null())
    r.cache_dir = get_field<std::string>(j, "cache_dir", "");
  r.no_cache = get_field<bool>(j, "no_cache", false);
  return r;
}

json request_to_json(const Request& r) {
  json j = {{"command", to_string(r.command)},
            {"p", r.p},
            {"vars", r.vars},
            {"f", r.f},
            {"depth", r.depth},
            {"emax", r.emax},
            {"json", r.json},
            {"trace", r.trace},
            {"strict_r1", r.strict_r1},
            {"max_monomials", r.limits.max_monomials},
            {"max_generators", r.limits.max_generators},
            {"filter", r.filter},
            {"no_cache", r.no_cache}};
  j["cache_dir"] = r.cache_dir ? json(*r.cache_dir) : json(nullptr);
  return j;
}

std::string content_hash(const Request& req, const std::string& canonical_f) {
  // Variables are hashed by name: renaming them changes the key.
  json key = {{"version", version()},
              {"command", to_string(req.command)},
              {"p", req.p},
              {"vars", parse_var_list(req.vars)},
              {"f", canonical_f},
              {"depth", req.depth},
              {"emax", req.emax},
              {"trace", req.trace},
              {"strict_r1", req.strict_r1}};
  return sha256_hex(key.dump());
}

json compute_record(const Request& req) { return build_record(req, prepare(req)); }

json without_timings(json record) {
  if (record.is_object()) {
    record.erase("timings");
    if (record.contains("rows"))
      for (auto& row : record["rows"])
        if (row.contains("record")) row["record"].erase("timings");
  }
  return record;
}

Response error_response(const std::string& command, const Error& e) {
  Response out;
  out.record = error_record(command, e);
  out.exit_code = exit_code_for(e.error_class());
  out.text = render_text(out.record);
  return out;
}

Response run(const Request& req) {
  Response out;
  try {
    if (req.command == Command::Corpus) {
      std::vector<std::string> mismatches;
      out.record = run_corpus(req.filter, req.limits, mismatches);
      out.exit_code = mismatches.empty() ? kExitOk : kExitCorpusMismatch;
    } else {
      Prepared in = prepare(req);
      std::optional<ResultCache> cache;
      if (!req.no_cache)
        if (auto dir = ResultCache::resolve_dir(req.cache_dir)) cache.emplace(*dir);
      const std::string key = content_hash(req, in.canonical);
      std::optional<json> hit;
      if (cache && cache->enabled()) hit = cache->get(key);
      if (hit) {
        out.record = std::move(*hit);
        if (out.record.contains("timings")) out.record["timings"]["cache_hit"] = true;
      } else {
        out.record = build_record(req, in);
        if (cache && cache->enabled()) cache->put(key, out.record);
      }
      if (cache) out.warnings = cache->warnings();
    }
  } catch (const Error& e) {
    out.record = error_record(to_string(req.command), e);
    out.exit_code = exit_code_for(e.error_class());
  } catch (const std::bad_alloc&) {
    out.record = error_record(to_string(req.command),
                              Error(ErrorKind::ResourceLimit, "out of memory"));
    out.exit_code = kExitResourceLimit;
  } catch (const std::exception& e) {
    out.record = error_record(to_string(req.command), Error(ErrorKind::Internal, e.what()));
    out.exit_code = kExitInternal;
  }
  out.text = render_text(out.record);
  return out;
}

std::string render_text(const json& rec) {
  std::ostringstream os;
  if (rec.contains("error")) {
    const auto& e = rec["error"];
    os << "error [" << e["kind"].get<std::string>() << "]: "
       << e["message"].get<std::string>() << "\n";
    return os.str();
  }
  if (rec.value("command", "") == "corpus") {
    const auto& rows = rec["rows"];
    os << "corpus: " << rows.size() << " row(s)";
    if (!rec["filter"].get<std::string>().empty())
      os << " matching '" << rec["filter"].get<std::string>() << "'";
    os << "\n";
    for (const auto& row : rows) {
      os << (row["ok"].get<bool>() ? "  ok       " : "  MISMATCH ")
         << row["name"].get<std::string>();
      const auto& r = row["record"];
      if (r.contains("sequence") && r["sequence"].is_object())
        os << "  s = " << join_values(r["sequence"]["values"]);
      if (r.contains("ppt") && r["ppt"].is_object() && r["ppt"]["exact"].is_object())
        os << "  ppt = " << ratio_text(r["ppt"]["exact"]);
      os << "\n";
      for (const auto& d : row["diffs"]) os << "      " << d.get<std::string>() << "\n";
      if (!row["annotation"].get<std::string>().empty())
        os << "      note: " << row["annotation"].get<std::string>() << "\n";
    }
    const auto& mm = rec["mismatches"];
    os << (mm.empty() ? "all rows match\n"
                      : std::to_string(mm.size()) + " mismatch(es)\n");
    return os.str();
  }

  const auto& ctx = rec["context"];
  os << "f = " << ctx["f"].get<std::string>() << "  over Z/" << ctx["p"].get<unsigned>()
     << "^2 in ";
  for (std::size_t i = 0; i < ctx["vars"].size(); ++i)
    os << (i ? "," : "") << ctx["vars"][i].get<std::string>();
  os << "\n";
  if (rec["sequence"].is_object()) {
    os << "sequence: " << join_values(rec["sequence"]["values"]);
    if (!rec["sequence"]["terminated_at_p"].is_null())
      os << "  (s = p from n = " << rec["sequence"]["terminated_at_p"] << ")";
    os << "\n";
  }
  if (rec["trace"].is_array()) {
    std::size_t n = 1;
    for (const auto& gens : rec["trace"]) {
      os << "  I_" << n++ << ":";
      if (gens.empty()) os << " (0)";
      for (const auto& g : gens) os << " [" << g.get<std::string>() << "]";
      os << "\n";
    }
  }
  if (rec["criteria"].is_object()) {
    const auto& c = rec["criteria"];
    os << "criteria: ";
    if (!c["applicable"].get<bool>()) {
      os << "not applicable";
    } else if (c["satisfied"].empty()) {
      os << "none satisfied";
    } else {
      for (std::size_t i = 0; i < c["satisfied"].size(); ++i)
        os << (i ? ", " : "") << c["satisfied"][i].get<std::string>();
    }
    if (c["certificate"].is_string()) os << "; certificate " << c["certificate"].get<std::string>();
    os << "\n";
    for (const auto& n : c["notes"]) os << "  warning: " << n.get<std::string>() << "\n";
  }
  if (rec["verdict"].is_object())
    os << "verdict: " << rec["verdict"]["description"].get<std::string>() << "\n";
  if (rec["ppt"].is_object()) {
    const auto& pp = rec["ppt"];
    os << "ppt partial: " << ratio_text(pp["partial"]) << "\n";
    if (pp["exact"].is_object()) {
      const auto& ex = pp["exact"];
      os << "ppt exact: " << ratio_text(ex) << "  (preperiod " << ex["preperiod"]
         << ", period " << ex["period"] << ", "
         << (ex["conjectural"].get<bool>() ? "conjectural" : "certified") << " via "
         << ex["source"].get<std::string>() << ")\n";
    }
  }
  if (rec["qfs_height"].is_object()) {
    const auto& q = rec["qfs_height"];
    const auto kind = q["kind"].get<std::string>();
    os << "quasi-F-split height: ";
    if (kind == "Finite") os << q["height"];
    else if (kind == "NotQuasiFSplit") os << "infinite (not quasi-F-split)";
    else os << "> " << q["depth"];
    os << "\n";
  }
  if (rec["nu_table"].is_array()) {
    for (const auto& row : rec["nu_table"])
      os << "nu(p^" << row["e"] << ") = " << row["nu"] << "\n";
    os << "fpt ~ " << ratio_text(rec["fpt"]["approx"]) << "\n";
  }
  for (const auto& a : rec["annotations"]) os << "note: " << a.get<std::string>() << "\n";
  if (rec.contains("timings")) {
    os << "time: " << fmt_ms(rec["timings"]["total_ms"].get<double>()) << " ms";
    if (rec["timings"]["cache_hit"].get<bool>()) os << " (cached)";
    os << "\n";
  }
  return os.str();
}

}  // namespace pptlab
