#include "seedkit/http_server.hpp"

#include "httplib.h"
#include "seedkit/service.hpp"

namespace seedkit {

struct HttpServer::Impl {
  httplib::Server server;
};

HttpServer::HttpServer() : impl_(std::make_unique<Impl>()) {
  impl_->server.Post("/api/v1/eval", [](const httplib::Request& req, httplib::Response& res) {
    HttpReply r = handle_eval(req.body);
    res.status = r.status;
    res.set_content(r.body, "application/json");
  });
  impl_->server.Get("/api/v1/health", [](const httplib::Request&, httplib::Response& res) {
    res.set_content(R"({"ok":true})", "application/json");
  });
}

HttpServer::~HttpServer() = default;

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::listen() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() { impl_->server.stop(); }

bool HttpServer::running() const { return impl_->server.is_running(); }

}  // namespace seedkit
