// Command-line front end over the same evaluate() path as the HTTP API.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "seedkit/http_server.hpp"
#include "seedkit/service.hpp"

using seedkit::json;

namespace {

constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string seed, hom, morphism, host = "127.0.0.1";
  std::vector<std::string> seq, at, freeze, del, pairs;
  int depth = -1;
  long long cap = -1;
  int port = 8080;
  bool pretty = false, compact = false, records = false;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

json split_ids(const std::vector<std::string>& items) {
  json out = json::array();
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) out.push_back(tok);
  }
  return out;
}

json base_request(const Options& o) {
  if (o.seed.empty()) throw UsageError("--seed is required");
  return {{"seed", read_json_file(o.seed)}, {"seq", split_ids(o.seq)}};
}

void with_depth(json& arg, const Options& o) {
  if (o.depth >= 0) arg["depth"] = o.depth;
}

// Request carrying a morphism or homomorphism file: the source becomes the seed.
json mapped_request(const std::string& path, const char* action, const Options& o) {
  json m = read_json_file(path);
  if (!m.is_object() || !m.contains("source")) throw UsageError(path + ": expected source, target and map");
  json arg{{"target", m.value("target", json())}, {"map", m.value("map", json::object())}};
  with_depth(arg, o);
  return {{"seed", m["source"]}, {"seq", split_ids(o.seq)}, {"action", {{action, arg}}}};
}

json build_request(const std::string& cmd, const Options& o) {
  if (cmd == "mutate") {
    json req = base_request(o);
    json at = split_ids(o.at);
    if (at.empty()) throw UsageError("--at is required");
    for (std::size_t i = 0; i + 1 < at.size(); ++i) req["seq"].push_back(at[i]);
    req["action"] = {{"mutate", at.back()}};
    return req;
  }
  if (cmd == "subseed") {
    json req = base_request(o);
    req["action"] = {{"subseed", {{"freeze", split_ids(o.freeze)}, {"delete", split_ids(o.del)}}}};
    return req;
  }
  if (cmd == "glue") {
    json req = base_request(o);
    json pairs = json::array();
    for (const auto& p : o.pairs) {
      json parts = json::array();
      std::stringstream ss(p);
      std::string tok;
      while (std::getline(ss, tok, ':')) parts.push_back(tok);
      if (parts.size() < 2 || parts.size() > 3) throw UsageError("--pair expects s:target[:name]");
      pairs.push_back(parts);
    }
    json arg{{"pairs", pairs}};
    with_depth(arg, o);
    req["action"] = {{"glue", arg}};
    return req;
  }
  if (cmd == "census") {
    json req = base_request(o);
    req["action"] = {{"enumerate", {{"records", o.records}}}};
    return req;
  }
  if (cmd == "classify") {
    json req = base_request(o);
    json arg = json::object();
    if (o.cap >= 0) arg["cap"] = o.cap;
    req["action"] = {{"classify", arg}};
    return req;
  }
  if (cmd == "check-hom") {
    if (o.hom.empty()) throw UsageError("--hom is required");
    return mapped_request(o.hom, "check_hom", o);
  }
  if (cmd == "check-morphism") {
    if (o.morphism.empty()) throw UsageError("--morphism is required");
    return mapped_request(o.morphism, "check_morphism", o);
  }
  if (cmd == "decompose") {
    if (!o.morphism.empty()) return mapped_request(o.morphism, "decompose", o);
    json req = base_request(o);
    req["action"] = {{"decompose", json::object()}};
    return req;
  }
  if (cmd == "specialise") {
    json req = base_request(o);
    json arg{{"delete", split_ids(o.del)}};
    with_depth(arg, o);
    req["action"] = {{"specialise", arg}};
    return req;
  }
  if (cmd == "check-total") {
    json req = base_request(o);
    json arg = json::object();
    with_depth(arg, o);
    req["action"] = {{"check_total", arg}};
    return req;
  }
  throw UsageError("unknown subcommand " + cmd);
}

int serve(const Options& o) {
  seedkit::HttpServer server;
  int port = server.bind(o.host, o.port);
  if (port < 0) {
    std::cerr << "cannot bind " << o.host << ":" << o.port << "\n";
    return kDomainError;
  }
  std::cerr << "listening on " << o.host << ":" << port << "\n";
  return server.listen() ? 0 : kDomainError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cluster seeds: mutation, sub-seeds, gluing, morphisms and finite-type census"};
  app.require_subcommand(1);
  Options o;

  auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "seed JSON file");
    sub->add_option("--seq", o.seq, "mutation sequence applied first (comma separated ids)");
  };
  auto add_output = [&](CLI::App* sub) {
    auto* p = sub->add_flag("--pretty", o.pretty, "indented JSON");
    sub->add_flag("--json", o.compact, "compact JSON (default)")->excludes(p);
  };
  auto add_depth = [&](CLI::App* sub) { sub->add_option("--depth", o.depth, "search depth")->check(CLI::NonNegativeNumber); };

  std::vector<CLI::App*> subs;
  auto* mutate = app.add_subcommand("mutate", "mutate at one or more variables");
  add_seed(mutate);
  mutate->add_option("--at", o.at, "variable(s) to mutate at, in order")->required();
  subs.push_back(mutate);

  auto* sub = app.add_subcommand("subseed", "freeze and delete variables");
  add_seed(sub);
  sub->add_option("--freeze", o.freeze, "exchangeable variables to freeze");
  sub->add_option("--delete", o.del, "variables to delete");
  subs.push_back(sub);

  auto* glue = app.add_subcommand("glue", "glue variable pairs s:target[:name]");
  add_seed(glue);
  glue->add_option("--pair", o.pairs, "pair to glue")->required();
  add_depth(glue);
  subs.push_back(glue);

  auto* census = app.add_subcommand("census", "count pure and proper rooted cluster subalgebras");
  add_seed(census);
  census->add_flag("--records", o.records, "list every freeze/delete record");
  subs.push_back(census);

  auto* classify = app.add_subcommand("classify", "finite type and finite mutation type");
  add_seed(classify);
  classify->add_option("--cap", o.cap, "closure cap")->check(CLI::NonNegativeNumber);
  subs.push_back(classify);

  auto* hom = app.add_subcommand("check-hom", "verify a seed homomorphism");
  hom->add_option("--hom", o.hom, "homomorphism JSON file")->required();
  subs.push_back(hom);

  auto* morph = app.add_subcommand("check-morphism", "verify a rooted cluster morphism to a depth");
  morph->add_option("--morphism", o.morphism, "morphism JSON file")->required();
  morph->add_option("--seq", o.seq, "mutation sequence applied to the source first");
  add_depth(morph);
  subs.push_back(morph);

  auto* dec = app.add_subcommand("decompose", "split a seed into blocks, or a surjective morphism into gluings");
  add_seed(dec);
  dec->add_option("--morphism", o.morphism, "morphism JSON file");
  subs.push_back(dec);

  auto* spec = app.add_subcommand("specialise", "specialise deleted variables to 1");
  add_seed(spec);
  spec->add_option("--delete", o.del, "variables sent to 1");
  add_depth(spec);
  subs.push_back(spec);

  auto* total = app.add_subcommand("check-total", "search for a non sign-skew-symmetric mutation");
  add_seed(total);
  add_depth(total);
  subs.push_back(total);

  auto* srv = app.add_subcommand("serve", "run the HTTP JSON API");
  srv->add_option("--port", o.port, "TCP port (0 picks a free one)")->check(CLI::Range(0, 65535));
  srv->add_option("--host", o.host, "bind address");

  for (auto* s : subs) add_output(s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  if (srv->parsed()) return serve(o);

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    json response = seedkit::evaluate(build_request(cmd, o));
    if (!response["diagnostics"].empty()) std::cerr << response["diagnostics"].dump() << "\n";
    std::cout << response["result"].dump(o.pretty ? 2 : -1) << "\n";
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const seedkit::Error& e) {
    std::cerr << seedkit::error_to_json(e).dump() << "\n";
    return kDomainError;
  }
}
