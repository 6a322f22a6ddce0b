#include <thread>

#include "doctest.h"
#include "fixtures.hpp"
#include "httplib.h"
#include "seedkit/http_server.hpp"
#include "seedkit/service.hpp"

using namespace seedkit;
using namespace fixtures;

namespace {

json request(const Seed& s, json seq, json action) {
  return {{"seed", seed_to_json(s)}, {"seq", std::move(seq)}, {"action", std::move(action)}};
}

}  // namespace

TEST_CASE("mutate action replays the sequence first") {
  auto r = evaluate(request(a2(), json::array({"x1"}), {{"mutate", "x2"}}));
  CHECK(r["replay"]["vars"][0]["id"] == "x1@1");
  CHECK(r["result"]["variable"] == "x2@1");
  CHECK(r["result"]["display"] == "x2'");
  CHECK(parse_laurent(r["result"]["value"].get<std::string>()) == parse_laurent("(x1+x2+1)*x1^-1*x2^-1"));
  CHECK(r["diagnostics"].empty());
}

TEST_CASE("identical requests give identical bytes") {
  auto req = request(a3(), json::array({"x2", "x1"}), {{"classify", {{"cap", 500}}}});
  CHECK(evaluate(req).dump() == evaluate(req).dump());
  auto body = req.dump();
  CHECK(handle_eval(body).body == handle_eval(body).body);
}

TEST_CASE("enumerate and classify") {
  auto c = evaluate(request(a2(), json::array(), {{"enumerate", {{"records", true}}}}))["result"];
  CHECK(c["pure"] == 4);
  CHECK(c["total"] == 7);
  CHECK(c["proper"] == 3);
  CHECK(c["records"].size() == 7);
  auto k = evaluate(request(a3(), json::array(), {{"classify", json::object()}}))["result"];
  CHECK(k["finite_type"] == "Finite");
  CHECK(k["cluster_vars"] == 9);
  CHECK(k["seeds"] == 14);
  CHECK(k["mutation_class"]["size"] == 4);
  CHECK(k["dynkin"] == "A3");
}

TEST_CASE("glue reports non-glueable frozen pairs") {
  auto r = evaluate(request(framed({{0, 1, -1}}, 1), json::array(), {{"glue", {{"pairs", json::array({json::array({"y1", "y2"})})}}}}));
  REQUIRE(r["diagnostics"].size() == 1);
  CHECK(r["diagnostics"][0]["kind"] == "not_glueable");
  CHECK(r["result"]["glued"]["y1"] == "y1~y2");
}

TEST_CASE("morphism actions") {
  MorphSpec m{a3(), a2(), {{"x1", VarId("x1")}, {"x2", VarId("x2")}, {"x3", std::int64_t{1}}}};
  auto mj = morphism_to_json(m);
  auto r = evaluate(request(a3(), json::array(), {{"check_morphism", {{"target", mj["target"]}, {"map", mj["map"]}, {"depth", 50}}}}));
  CHECK(r["result"]["ok"] == true);
  CHECK(r["result"]["cm3"]["depth"] == Limits::cm3_max);
  CHECK(r["diagnostics"][0]["kind"] == "clamped");
  auto h = evaluate(request(a2(), json::array(), {{"check_hom", {{"target", seed_to_json(a2())}, {"map", {{"x1", "x2"}, {"x2", "x1"}}}}}}));
  CHECK(h["result"]["sign"] == "Negative");
  auto d = evaluate(request(through_frozen(), json::array(), {{"decompose", json::object()}}));
  CHECK(d["result"]["components"].size() == 2);
  auto t = evaluate(request(b2(), json::array(), {{"check_total", json::object()}}));
  CHECK(t["result"]["kind"] == "Total");
  auto sp = evaluate(request(a3(), json::array(), {{"specialise", {{"delete", {"x3"}}}}}));
  CHECK(sp["result"]["surjectivity"] == "SurjectiveByTheorem");
}

TEST_CASE("errors map to status codes") {
  CHECK(handle_eval("{not json").status == 400);
  auto bad_seq = handle_eval(request(a2(), json::array({"x1", "x1"}), nullptr).dump());
  CHECK(bad_seq.status == 422);
  auto e = json::parse(bad_seq.body);
  CHECK(e["code"] == "NotExchangeable");
  CHECK(e["index"] == 1);
  auto unknown = json::parse(handle_eval(request(a2(), json::array(), {{"frobnicate", 1}}).dump()).body);
  CHECK(unknown["code"] == "BadRequest");
  CHECK(handle_eval(R"({"seq":[]})").status == 422);
}

TEST_CASE("HTTP endpoints") {
  HttpServer server;
  int port = server.bind("127.0.0.1", 0);
  REQUIRE(port > 0);
  std::thread worker([&] { server.listen(); });
  httplib::Client client("127.0.0.1", port);
  for (int i = 0; i < 100 && !server.running(); ++i) std::this_thread::sleep_for(std::chrono::milliseconds(10));

  auto health = client.Get("/api/v1/health");
  REQUIRE(health);
  CHECK(health->status == 200);
  CHECK(json::parse(health->body) == json{{"ok", true}});

  auto body = request(a2(), json::array(), {{"mutate", "x1"}}).dump();
  auto ok = client.Post("/api/v1/eval", body, "application/json");
  REQUIRE(ok);
  CHECK(ok->status == 200);
  CHECK(ok->body == handle_eval(body).body);

  auto bad = client.Post("/api/v1/eval", "[1,", "application/json");
  REQUIRE(bad);
  CHECK(bad->status == 400);
  auto domain = client.Post("/api/v1/eval", request(a2(), json::array({"y7"}), nullptr).dump(), "application/json");
  REQUIRE(domain);
  CHECK(domain->status == 422);
  CHECK(json::parse(domain->body)["index"] == 0);

  server.stop();
  worker.join();
}
