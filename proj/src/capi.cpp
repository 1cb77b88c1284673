#include "pptlab/pptlab.h"

#include <cstdlib>
#include <cstring>
#include <iostream>
#include <string>

#include "pptlab/errors.hpp"
#include "pptlab/parse.hpp"
#include "pptlab/record.hpp"
#include "pptlab/verdict.hpp"

struct pptlab_context {
  pptlab::ContextPtr ctx;
};
struct pptlab_poly {
  pptlab::LiftPoly f;
};
struct pptlab_input {
  pptlab::HypersurfaceInput h;
};
struct pptlab_sequence {
  pptlab::SplitSequence seq;
  pptlab::Certification cert;
};

namespace {

thread_local std::string g_last_error;

pptlab_status fail(pptlab_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

pptlab_status status_for(const pptlab::Error& e) {
  switch (e.error_class()) {
    case pptlab::ErrorClass::InvalidInput: return PPTLAB_E_INVALID_INPUT;
    case pptlab::ErrorClass::ResourceLimit: return PPTLAB_E_RESOURCE_LIMIT;
    case pptlab::ErrorClass::Internal: return PPTLAB_E_INTERNAL;
  }
  return PPTLAB_E_INTERNAL;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs body and maps exceptions onto status codes.
template <typename F>
pptlab_status guarded(F&& body) {
  g_last_error.clear();
  try {
    body();
    return PPTLAB_OK;
  } catch (const pptlab::Error& e) {
    return fail(status_for(e), e.what());
  } catch (const std::bad_alloc&) {
    return fail(PPTLAB_E_RESOURCE_LIMIT, "out of memory");
  } catch (const std::exception& e) {
    return fail(PPTLAB_E_INTERNAL, e.what());
  }
}

#define PPTLAB_REQUIRE(ptr)                                                   \
  do {                                                                        \
    if (!(ptr)) return fail(PPTLAB_E_NULL_ARGUMENT, #ptr " must not be NULL"); \
  } while (0)

}  // namespace

extern "C" {

const char* pptlab_version(void) { return pptlab::version(); }

const char* pptlab_last_error(void) { return g_last_error.c_str(); }

void pptlab_string_free(char* s) { std::free(s); }

pptlab_status pptlab_context_new(unsigned p, const char* vars, pptlab_context** out) {
  PPTLAB_REQUIRE(vars);
  PPTLAB_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    auto ctx = pptlab::Context::create(p, pptlab::parse_var_list(vars));
    *out = new pptlab_context{std::move(ctx)};
  });
}

void pptlab_context_free(pptlab_context* ctx) { delete ctx; }

pptlab_status pptlab_poly_parse(const pptlab_context* ctx, const char* src,
                                pptlab_poly** out) {
  PPTLAB_REQUIRE(ctx);
  PPTLAB_REQUIRE(src);
  PPTLAB_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new pptlab_poly{pptlab::parse_poly(src, ctx->ctx)}; });
}

pptlab_status pptlab_poly_render(const pptlab_poly* f, char** out) {
  PPTLAB_REQUIRE(f);
  PPTLAB_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = dup(f->f.render()); });
}

void pptlab_poly_free(pptlab_poly* f) { delete f; }

pptlab_status pptlab_input_new(const pptlab_poly* f, pptlab_input** out) {
  PPTLAB_REQUIRE(f);
  PPTLAB_REQUIRE(out);
  *out = nullptr;
  return guarded(
      [&] { *out = new pptlab_input{pptlab::HypersurfaceInput::validate(f->f)}; });
}

void pptlab_input_free(pptlab_input* h) { delete h; }

pptlab_status pptlab_sequence_compute(const pptlab_input* h, unsigned depth,
                                      pptlab_sequence** out) {
  PPTLAB_REQUIRE(h);
  PPTLAB_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    auto seq = pptlab::splitting_sequence(h->h, depth);
    auto cert = pptlab::certify(seq);
    *out = new pptlab_sequence{std::move(seq), std::move(cert)};
  });
}

pptlab_status pptlab_sequence_values(const pptlab_sequence* seq, unsigned* buf,
                                     size_t cap, size_t* len) {
  PPTLAB_REQUIRE(seq);
  PPTLAB_REQUIRE(len);
  if (cap > 0) PPTLAB_REQUIRE(buf);
  const auto& v = seq->seq.values;
  *len = v.size();
  for (size_t i = 0; i < v.size() && i < cap; ++i) buf[i] = v[i];
  return PPTLAB_OK;
}

pptlab_status pptlab_sequence_ppt_partial(const pptlab_sequence* seq, char** out) {
  PPTLAB_REQUIRE(seq);
  PPTLAB_REQUIRE(out);
  *out = nullptr;
  return guarded(
      [&] { *out = dup(pptlab::ppt_partial(seq->seq.values, seq->seq.p()).str()); });
}

pptlab_status pptlab_sequence_ppt_exact(const pptlab_sequence* seq, char** out) {
  PPTLAB_REQUIRE(seq);
  PPTLAB_REQUIRE(out);
  *out = nullptr;
  bool missing = false;
  pptlab_status st = guarded([&] {
    auto v = pptlab::compute_ppt(seq->seq, seq->cert);
    if (v.exact) *out = dup(v.exact->value.str());
    else missing = true;
  });
  if (st == PPTLAB_OK && missing)
    return fail(PPTLAB_E_NOT_AVAILABLE, "no exact value at this depth");
  return st;
}

pptlab_status pptlab_sequence_verdict(const pptlab_sequence* seq, int strict, char** out) {
  PPTLAB_REQUIRE(seq);
  PPTLAB_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    auto v = pptlab::classify(seq->seq, seq->cert, {strict != 0});
    const char* name = std::holds_alternative<pptlab::PerfectoidPure>(v) ? "PerfectoidPure"
                       : std::holds_alternative<pptlab::NotPerfectoidPure>(v)
                           ? "NotPerfectoidPure"
                           : "Inconclusive";
    *out = dup(name);
  });
}

void pptlab_sequence_free(pptlab_sequence* seq) { delete seq; }

pptlab_status pptlab_run(const char* request_json, char** out_json, char** out_text,
                         int* exit_code) {
  PPTLAB_REQUIRE(request_json);
  PPTLAB_REQUIRE(exit_code);
  if (out_json) *out_json = nullptr;
  if (out_text) *out_text = nullptr;
  return guarded([&] {
    pptlab::Response r;
    auto j = pptlab::json::parse(request_json, nullptr, false);
    std::string command = "?";
    if (j.is_object() && j.contains("command") && j["command"].is_string())
      command = j["command"].get<std::string>();
    try {
      if (j.is_discarded())
        throw pptlab::Error(pptlab::ErrorKind::InvalidArgument, "request is not valid JSON");
      r = pptlab::run(pptlab::request_from_json(j));
    } catch (const pptlab::Error& e) {
      r = pptlab::error_response(command, e);
    }
    for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
    *exit_code = r.exit_code;
    if (out_json) *out_json = dup(r.record.dump(2));
    if (out_text) *out_text = dup(r.text);
  });
}

}  // extern "C"
