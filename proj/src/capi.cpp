#include "oddsing/oddsing.h"

#include <exception>
#include <new>
#include <string>

#include "oddsing/commands.hpp"

struct oddsing_algebra {
  oddsing::AlgebraChoice choice;
};

struct oddsing_doc {
  std::string text;
};

namespace {

thread_local std::string last_error;

oddsing_status record(oddsing_status s, const std::string& what) {
  last_error = what;
  return s;
}

template <class F>
oddsing_status guarded(F&& f) {
  last_error.clear();
  try {
    return f();
  } catch (const oddsing::Error& e) {
    return record(static_cast<oddsing_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return record(ODDSING_CONSISTENCY, "out of memory");
  } catch (const std::exception& e) {
    return record(ODDSING_CONSISTENCY, e.what());
  }
}

oddsing::Format to_format(oddsing_format f) {
  switch (f) {
    case ODDSING_PLAIN: return oddsing::Format::Plain;
    case ODDSING_LATEX: return oddsing::Format::Latex;
    case ODDSING_JSON: return oddsing::Format::Json;
  }
  oddsing::fail(oddsing::ErrorCode::Usage, "unknown output format");
}

const char* arg(const char* s, const char* name) {
  if (!s) oddsing::fail(oddsing::ErrorCode::Usage, std::string("missing ") + name);
  return s;
}

oddsing_status emit(const oddsing::OutputDocument& doc, oddsing_doc** out) {
  *out = new oddsing_doc{doc.text()};
  if (doc.exit_code != 0) return record(static_cast<oddsing_status>(doc.exit_code), "a consistency check failed");
  return ODDSING_OK;
}

template <class F>
oddsing_status run(const oddsing_algebra* alg, oddsing_doc** out, F&& f) {
  return guarded([&] {
    if (!out) oddsing::fail(oddsing::ErrorCode::Usage, "null output pointer");
    *out = nullptr;
    if (!alg) oddsing::fail(oddsing::ErrorCode::Usage, "null algebra handle");
    return emit(f(alg->choice), out);
  });
}

}  // namespace

extern "C" {

const char* oddsing_version(void) { return "0.1.0"; }

const char* oddsing_last_error(void) { return last_error.c_str(); }

oddsing_status oddsing_gl_create(int m, int n, oddsing_algebra** out) {
  return guarded([&] {
    if (!out) oddsing::fail(oddsing::ErrorCode::Usage, "null output pointer");
    *out = new oddsing_algebra{oddsing::make_algebra("gl", "even", m, n)};
    return ODDSING_OK;
  });
}

oddsing_status oddsing_osp_create(oddsing_family family, int m, int n, oddsing_algebra** out) {
  return guarded([&] {
    if (!out) oddsing::fail(oddsing::ErrorCode::Usage, "null output pointer");
    if (family != ODDSING_EVEN && family != ODDSING_ODD) oddsing::fail(oddsing::ErrorCode::Usage, "unknown family");
    *out = new oddsing_algebra{oddsing::make_algebra("osp", family == ODDSING_EVEN ? "even" : "odd", m, n)};
    return ODDSING_OK;
  });
}

void oddsing_algebra_destroy(oddsing_algebra* alg) { delete alg; }

const char* oddsing_algebra_name(const oddsing_algebra* alg) {
  return alg ? alg->choice.algebra().name().c_str() : "";
}

int oddsing_algebra_dimension(const oddsing_algebra* alg) { return alg ? alg->choice.algebra().dimension() : 0; }

oddsing_status oddsing_singular(const oddsing_algebra* alg, const char* beta, const char* lambda,
                                oddsing_format format, oddsing_doc** out) {
  return run(alg, out, [&](const oddsing::AlgebraChoice& c) {
    return oddsing::cmd_singular(c, arg(beta, "beta"), arg(lambda, "lambda"), to_format(format));
  });
}

oddsing_status oddsing_shapovalov(const oddsing_algebra* alg, const char* beta, oddsing_format format,
                                  oddsing_doc** out) {
  return run(alg, out, [&](const oddsing::AlgebraChoice& c) {
    return oddsing::cmd_shapovalov(c, arg(beta, "beta"), to_format(format));
  });
}

oddsing_status oddsing_verify(const oddsing_algebra* alg, const char* beta, const char* lambda, int kac,
                              oddsing_format format, oddsing_doc** out) {
  return run(alg, out, [&](const oddsing::AlgebraChoice& c) {
    return oddsing::cmd_verify(c, arg(beta, "beta"), arg(lambda, "lambda"), kac != 0, to_format(format));
  });
}

oddsing_status oddsing_kac_check(const oddsing_algebra* alg, const char* beta, const char* lambda,
                                 oddsing_format format, oddsing_doc** out) {
  return run(alg, out, [&](const oddsing::AlgebraChoice& c) {
    return oddsing::cmd_kac_check(c, arg(beta, "beta"), arg(lambda, "lambda"), to_format(format));
  });
}

oddsing_status oddsing_sweep(const char* kind, oddsing_family family, int max_m, int max_n, int samples,
                             uint64_t seed, unsigned threads, oddsing_format format, oddsing_doc** out) {
  return guarded([&] {
    if (!out) oddsing::fail(oddsing::ErrorCode::Usage, "null output pointer");
    *out = nullptr;
    oddsing::SweepOptions opts;
    opts.kind = arg(kind, "algebra kind");
    opts.family = family == ODDSING_ODD ? oddsing::OspFamily::Odd : oddsing::OspFamily::Even;
    opts.max_m = max_m;
    opts.max_n = max_n;
    opts.samples = samples;
    opts.seed = seed;
    opts.threads = threads;
    return emit(oddsing::cmd_sweep(opts, to_format(format)), out);
  });
}

const char* oddsing_doc_text(const oddsing_doc* doc) { return doc ? doc->text.c_str() : ""; }

void oddsing_doc_destroy(oddsing_doc* doc) { delete doc; }

}  // extern "C"
