// Batch front end over the C API: one subcommand, one JSON object out.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gsp/gsp.h"

using json = nlohmann::json;

namespace {

std::string slurp(std::istream& in) { return std::string(std::istreambuf_iterator<char>(in), {}); }

json load_payload(const std::string& spec) {
  if (spec.empty()) return json::object();
  std::string text;
  if (spec == "-") {
    text = slurp(std::cin);
  } else if (spec[0] == '@') {
    std::ifstream f(spec.substr(1));
    if (!f) throw std::runtime_error("cannot read " + spec.substr(1));
    text = slurp(f);
  } else {
    text = spec;
  }
  json j = json::parse(text);
  if (!j.is_object()) throw std::runtime_error("payload must be a JSON object");
  return j;
}

// "--some-key v" -> payload["some_key"] = v. Values that look like JSON arrays or objects are parsed.
void merge_extras(const std::vector<std::string>& extras, json& payload) {
  for (size_t i = 0; i < extras.size(); ++i) {
    const std::string& tok = extras[i];
    if (tok.rfind("--", 0) != 0 || tok.size() < 3) throw std::runtime_error("unexpected argument: " + tok);
    std::string key = tok.substr(2), value;
    auto eq = key.find('=');
    if (eq != std::string::npos) {
      value = key.substr(eq + 1);
      key = key.substr(0, eq);
    } else {
      if (i + 1 >= extras.size()) throw std::runtime_error("missing value for --" + key);
      value = extras[++i];
    }
    for (char& c : key) {
      if (c == '-') c = '_';
    }
    if (!value.empty() && (value[0] == '[' || value[0] == '{')) {
      payload[key] = json::parse(value);
    } else {
      payload[key] = value;
    }
  }
}

// Short group names and the two-word forms "ep a" / "ep b".
std::string resolve_op(std::string group, std::string cmd) {
  if (group == "weyl") group = "weights";
  if (group == "ep" && (cmd == "a" || cmd == "b")) return "lfac.ep-" + cmd;
  if (group == "interp" && (cmd == "a" || cmd == "b")) return "lfac.interp-" + cmd;
  return group + "." + cmd;
}

std::optional<long> env_long(const char* name) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return std::nullopt;
  char* end = nullptr;
  long x = std::strtol(v, &end, 10);
  if (*end != '\0') throw std::runtime_error(std::string("bad value in ") + name);
  return x;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GSp4 x GL2 toolkit: exact arithmetic, weights, branching, q-expansions, Euler factors"};
  app.allow_extras();
  std::string group, cmd, json_spec, out_path;
  long p = 0, N = 0, seed = 7;
  app.add_option("group", group, "operation group (exactnum, weights|weyl, rep, qexp, lfac|ep, zeta, dist, verify, list)")->required();
  app.add_option("cmd", cmd, "command within the group");
  auto* p_opt = app.add_option("--p,--prime", p, "prime (env GSP_PRIME)");
  auto* n_opt = app.add_option("--N,--trunc", N, "q-expansion truncation (env GSP_TRUNC)");
  app.add_option("--seed", seed, "seed for randomized checks")->capture_default_str();
  app.add_option("--json", json_spec, "payload: inline JSON, @file, or - for stdin");
  app.add_option("--out", out_path, "write the result here instead of stdout");
  CLI11_PARSE(app, argc, argv);

  if (group == "list") {
    std::cout << json::parse(gsp_list_ops()).dump(2) << "\n";
    return 0;
  }
  if (cmd.empty()) {
    std::cerr << "missing command; try `" << argv[0] << " list`\n";
    return 1;
  }

  json payload;
  try {
    payload = load_payload(json_spec);
    merge_extras(app.remaining(), payload);
    if (p_opt->count() > 0) {
      payload["p"] = p;
    } else if (!payload.contains("p")) {
      if (auto e = env_long("GSP_PRIME")) payload["p"] = *e;
    }
    if (n_opt->count() > 0) {
      payload["N"] = N;
    } else if (!payload.contains("N")) {
      if (auto e = env_long("GSP_TRUNC")) payload["N"] = *e;
    }
    if (!payload.contains("seed")) payload["seed"] = seed;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}, {"code", 1}}.dump() << "\n";
    return 1;
  }

  std::unique_ptr<gsp_ctx, decltype(&gsp_ctx_destroy)> ctx(gsp_ctx_create(), gsp_ctx_destroy);
  const char* out = nullptr;
  int rc = gsp_call(ctx.get(), resolve_op(group, cmd).c_str(), payload.dump().c_str(), &out);
  if (rc != GSP_OK) {
    std::cerr << json{{"error", gsp_last_error(ctx.get())}, {"code", rc}}.dump() << "\n";
    return rc;
  }
  std::string text = json::parse(out).dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) {
      std::cerr << json{{"error", "cannot write " + out_path}, {"code", 1}}.dump() << "\n";
      return 1;
    }
    f << text;
  }
  return 0;
}
