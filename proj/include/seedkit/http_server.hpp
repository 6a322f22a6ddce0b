#pragma once

#include <memory>
#include <string>

namespace seedkit {

// POST /api/v1/eval and GET /api/v1/health over the shared evaluate() path.
class HttpServer {
 public:
  HttpServer();
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Binds to host:port, or an ephemeral port when port is 0. Returns the bound port, -1 on failure.
  int bind(const std::string& host, int port);
  // Blocks until stop().
  bool listen();
  void stop();
  bool running() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace seedkit
