#include <doctest.h>
#include <json.hpp>

#include <string>

#include "gsp/gsp.h"

using json = nlohmann::json;

namespace {

struct Ctx {
  gsp_ctx* c = gsp_ctx_create();
  ~Ctx() { gsp_ctx_destroy(c); }

  int call(const char* op, const json& in, json* out = nullptr) {
    const char* text = nullptr;
    int rc = gsp_call(c, op, in.dump().c_str(), &text);
    if (rc == GSP_OK && out) *out = json::parse(text);
    return rc;
  }
};

}  // namespace

TEST_CASE("weyl action through the C interface") {
  Ctx ctx;
  json out;
  REQUIRE(ctx.call("weights.act", {{"elt", "w1"}, {"weight", "3,1,0"}}, &out) == GSP_OK);
  CHECK(out == json{{"weight", "(3,-1;1)"}});
  REQUIRE(ctx.call("weights.star", {{"elt", "w1"}, {"weight", json::array({0, 0, 0})}}, &out) == GSP_OK);
  CHECK(out["weight"] == "(0,-2;1)");
}

TEST_CASE("error codes") {
  Ctx ctx;
  CHECK(ctx.call("weights.act", {{"elt", "bogus"}, {"weight", "3,1,0"}}) == GSP_ERR_INPUT);
  CHECK(std::string(gsp_last_error(ctx.c)).find("bogus") != std::string::npos);
  CHECK(ctx.call("no.such", json::object()) == GSP_ERR_INPUT);
  CHECK(ctx.call("zeta.minbeta", json::object()) == GSP_ERR_INPUT);
  CHECK(ctx.call("lfac.crit", {{"r1", 1}, {"r2", 3}, {"t2", 0}}) == GSP_ERR_DOMAIN);
  CHECK(ctx.call("dist.eps", {{"p", 3}, {"eps", "1/1"}}) == GSP_ERR_DOMAIN);
  const char* text = nullptr;
  CHECK(gsp_call(ctx.c, "zeta.minbeta", "{not json", &text) == GSP_ERR_INPUT);
  CHECK(text == nullptr);
  CHECK(gsp_call(nullptr, "zeta.minbeta", "{}", &text) == GSP_ERR_INPUT);
  CHECK(ctx.call("zeta.minbeta", {{"r", 3}}) == GSP_OK);
  CHECK(std::string(gsp_last_error(ctx.c)).empty());
}

TEST_CASE("modified factor record") {
  Ctx ctx;
  json out;
  REQUIRE(ctx.call("lfac.ep-a", {{"p", 3}, {"chi", "quad:1"}, {"j", 1}, {"satake", "2,5,3,15/2;1,3"}}, &out) == GSP_OK);
  CHECK(out["branch"] == "gauss");
  CHECK(out["gauss_factor"] == "1/9");
  CHECK(out["value"] == "1/100");
}

TEST_CASE("rationals round-trip as num/den strings") {
  Ctx ctx;
  json out;
  for (const char* q : {"-7/2", "3/1", "0/1", "123456789012345678901234567890/7"}) {
    REQUIRE(ctx.call("exactnum.vp", {{"p", 7}, {"x", q}}, &out) == GSP_OK);
  }
  json F{{"p", 3}, {"coeffs", json::array({"0/1", "1/1", "-5/3", "2/1", "1/1"})}};
  REQUIRE(ctx.call("qexp.deplete", {{"F", F}}, &out) == GSP_OK);
  CHECK(out["coeffs"] == json::array({"0/1", "1/1", "-5/3", "0/1", "1/1"}));
  // reading the output back reproduces it
  json again;
  REQUIRE(ctx.call("qexp.deplete", {{"F", out}}, &again) == GSP_OK);
  CHECK(again == out);
}

TEST_CASE("cyclotomic values survive a round trip") {
  Ctx ctx;
  json g;
  REQUIRE(ctx.call("exactnum.gauss", {{"p", 5}, {"chi", "2:3"}}, &g) == GSP_OK);
  CHECK(g["norm_ok"] == true);
  json F{{"p", 5}, {"coeffs", json::array({"0/1", g["value"], g["value"]})}};
  json out;
  REQUIRE(ctx.call("qexp.theta", {{"F", F}}, &out) == GSP_OK);
  CHECK(out["coeffs"][1] == g["value"]);
}

TEST_CASE("determinism") {
  Ctx a, b;
  json x, y;
  REQUIRE(a.call("rep.verify", {{"seed", 7}, {"degree", 2}, {"samples", 10}}, &x) == GSP_OK);
  REQUIRE(b.call("rep.verify", {{"seed", 7}, {"degree", 2}, {"samples", 10}}, &y) == GSP_OK);
  CHECK(x.dump() == y.dump());
  CHECK(x["failed"] == 0);
}

TEST_CASE("every registered operation is listed") {
  json ops = json::parse(gsp_list_ops());
  CHECK(ops.size() >= 40);
  std::string v = gsp_version();
  CHECK_FALSE(v.empty());
}
