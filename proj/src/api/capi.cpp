#include "gsp/gsp.h"

#include <stdexcept>
#include <string>

#include "api/ops.hpp"

struct gsp_ctx {
  std::string out;
  std::string err;
};

extern "C" {

gsp_ctx* gsp_ctx_create(void) {
  try {
    return new gsp_ctx();
  } catch (...) {
    return nullptr;
  }
}

void gsp_ctx_destroy(gsp_ctx* ctx) { delete ctx; }

int gsp_call(gsp_ctx* ctx, const char* op, const char* json_in, const char** json_out) {
  if (ctx == nullptr) return GSP_ERR_INPUT;
  ctx->err.clear();
  if (json_out) *json_out = nullptr;
  if (op == nullptr || json_out == nullptr) {
    ctx->err = "null argument";
    return GSP_ERR_INPUT;
  }
  try {
    gsp::io::json payload = gsp::io::json::object();
    if (json_in != nullptr && *json_in != '\0') payload = gsp::io::json::parse(json_in);
    ctx->out = gsp::ops::dispatch(op, payload).dump();
    *json_out = ctx->out.c_str();
    return GSP_OK;
  } catch (const gsp::InputError& e) {
    ctx->err = e.what();
    return GSP_ERR_INPUT;
  } catch (const gsp::io::json::exception& e) {
    // parse errors and type mismatches inside the payload
    ctx->err = std::string("malformed JSON: ") + e.what();
    return GSP_ERR_INPUT;
  } catch (const std::logic_error& e) {
    // std::stol and friends on payload text
    ctx->err = std::string("malformed input: ") + e.what();
    return GSP_ERR_INPUT;
  } catch (const gsp::DomainError& e) {
    ctx->err = e.what();
    return GSP_ERR_DOMAIN;
  } catch (const std::exception& e) {
    ctx->err = e.what();
    return GSP_ERR_INTERNAL;
  } catch (...) {
    ctx->err = "unknown failure";
    return GSP_ERR_INTERNAL;
  }
}

const char* gsp_last_error(const gsp_ctx* ctx) { return ctx ? ctx->err.c_str() : "null context"; }

const char* gsp_version(void) { return "0.1.0"; }

const char* gsp_list_ops(void) {
  static const std::string listing = [] {
    gsp::io::json a = gsp::io::json::array();
    for (const auto& [name, info] : gsp::ops::registry()) a.push_back({{"op", name}, {"summary", info.summary}});
    return a.dump();
  }();
  return listing.c_str();
}

}  // extern "C"
