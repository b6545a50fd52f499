#include "fpt/fpt.h"

#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "dispatch.hpp"
#include "report.hpp"

using fpt::json;

struct fpt_complex {
  fpt::SimplicialComplex K;
};
struct fpt_poset {
  fpt::FinitePoset X;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(::operator new(s.size() + 1, std::nothrow));
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_error(char** error, const std::string& msg) {
  if (error) *error = dup_string(msg);
}

int cert_to_code(const fpt::Certificate& c) {
  switch (c.status) {
    case fpt::CertStatus::holds:
      return FPT_OK;
    case fpt::CertStatus::refuted:
      return FPT_REFUTED;
    default:
      return FPT_INCONCLUSIVE;
  }
}

}  // namespace

extern "C" {

const char* fpt_version(void) {
  static const std::string v = fpt::artifact_version();
  return v.c_str();
}

void fpt_string_free(char* s) { ::operator delete(s); }

int fpt_dispatch(int argc, const char* const* argv, char** report_json,
                 char** human_text) {
  try {
    std::vector<std::string> args(argv, argv + (argc > 0 ? argc : 0));
    fpt::DispatchResult r = fpt::dispatch(args);
    if (report_json) *report_json = dup_string(r.report_json);
    if (human_text) *human_text = dup_string(r.human);
    return r.code;
  } catch (const std::exception& e) {
    if (report_json)
      *report_json =
          dup_string(json{{"command", "error"}, {"error", e.what()}}.dump(2) +
                     "\n");
    if (human_text)
      *human_text = dup_string(std::string("internal error: ") + e.what());
    return FPT_INTERNAL_ERROR;
  } catch (...) {
    if (report_json) *report_json = nullptr;
    if (human_text) *human_text = nullptr;
    return FPT_INTERNAL_ERROR;
  }
}

fpt_complex* fpt_complex_parse(const char* json_text, char** error) {
  if (!json_text) {
    set_error(error, "null input");
    return nullptr;
  }
  try {
    json j = fpt::parse_json_text(json_text, "complex");
    if (!fpt::is_complex_json(j)) {
      set_error(error, "not a complex: missing \"facets\"");
      return nullptr;
    }
    return new fpt_complex{fpt::complex_from_json(j)};
  } catch (const std::exception& e) {
    set_error(error, e.what());
    return nullptr;
  }
}

void fpt_complex_free(fpt_complex* K) { delete K; }

int fpt_complex_dim(const fpt_complex* K) { return K ? K->K.dim() : -1; }

size_t fpt_complex_vertex_count(const fpt_complex* K) {
  return K ? K->K.vertex_count() : 0;
}

size_t fpt_complex_facet_count(const fpt_complex* K) {
  return K ? K->K.facets().size() : 0;
}

char* fpt_complex_to_json(const fpt_complex* K) {
  if (!K) return nullptr;
  return dup_string(fpt::complex_to_json(K->K).dump(2) + "\n");
}

fpt_complex* fpt_complex_subdivide(const fpt_complex* K, int rounds) {
  if (!K || rounds < 0) return nullptr;
  try {
    return new fpt_complex{fpt::iterated_barycentric(K->K, rounds)};
  } catch (...) {
    return nullptr;
  }
}

fpt_poset* fpt_complex_face_poset(const fpt_complex* K) {
  if (!K) return nullptr;
  try {
    return new fpt_poset{fpt::face_poset(K->K)};
  } catch (...) {
    return nullptr;
  }
}

fpt_poset* fpt_poset_parse(const char* json_text, int repair, char** error) {
  if (!json_text) {
    set_error(error, "null input");
    return nullptr;
  }
  try {
    json j = fpt::parse_json_text(json_text, "poset");
    if (!fpt::is_poset_json(j)) {
      set_error(error, "not a poset: missing \"points\"");
      return nullptr;
    }
    return new fpt_poset{fpt::poset_from_json(j, repair != 0)};
  } catch (const std::exception& e) {
    set_error(error, e.what());
    return nullptr;
  }
}

void fpt_poset_free(fpt_poset* X) { delete X; }

size_t fpt_poset_point_count(const fpt_poset* X) {
  return X ? X->X.size() : 0;
}

char* fpt_poset_to_json(const fpt_poset* X) {
  if (!X) return nullptr;
  return dup_string(fpt::poset_to_json(X->X).dump(2) + "\n");
}

fpt_complex* fpt_poset_order_complex(const fpt_poset* X) {
  if (!X) return nullptr;
  try {
    return new fpt_complex{fpt::order_complex(X->X)};
  } catch (...) {
    return nullptr;
  }
}

fpt_poset* fpt_poset_core(const fpt_poset* X) {
  if (!X) return nullptr;
  try {
    return new fpt_poset{fpt::core(X->X)};
  } catch (...) {
    return nullptr;
  }
}

int fpt_poset_fpp(const fpt_poset* X, long long max_nodes, char** report) {
  if (!X) return FPT_INPUT_ERROR;
  try {
    fpt::SearchBudget b;
    if (max_nodes > 0) b.max_nodes = max_nodes;
    fpt::Certificate c = fpt::fpp_check(X->X, b);
    if (report)
      *report =
          dup_string(fpt::certificate_to_json(c, true).dump(2) + "\n");
    return cert_to_code(c);
  } catch (const std::exception& e) {
    if (report) *report = dup_string(e.what());
    return FPT_INTERNAL_ERROR;
  }
}

int fpt_complex_fsp(const fpt_complex* K, long long max_nodes, char** report) {
  if (!K) return FPT_INPUT_ERROR;
  try {
    fpt::SearchBudget b;
    if (max_nodes > 0) b.max_nodes = max_nodes;
    fpt::Certificate c = fpt::fsp_check(K->K, b);
    if (report)
      *report =
          dup_string(fpt::certificate_to_json(c, true).dump(2) + "\n");
    return cert_to_code(c);
  } catch (const std::exception& e) {
    if (report) *report = dup_string(e.what());
    return FPT_INTERNAL_ERROR;
  }
}

}  // extern "C"
