#include "symbcot/llm/gateway.hpp"

#include <algorithm>

namespace symbcot::llm {

Gateway::Gateway(Mode mode, std::shared_ptr<Backend> backend, std::shared_ptr<ResponseCache> cache,
                 std::size_t max_in_flight)
    : mode_(mode),
      backend_(std::move(backend)),
      cache_(std::move(cache)),
      in_flight_(static_cast<std::ptrdiff_t>(std::clamp<std::size_t>(max_in_flight, 1, 1024))) {
  if (mode_ == Mode::Replay && !cache_) throw std::invalid_argument("replay mode needs a cache directory");
  if (mode_ != Mode::Replay && !backend_) throw std::invalid_argument("gateway needs a backend");
}

CompletionResponse Gateway::complete(const CompletionRequest& req) {
  req.validate();
  if (mode_ != Mode::Scripted && cache_) {
    const std::string key = cache_key(req);
    if (auto hit = cache_->load(key)) {
      ++cache_hits_;
      hit->response.backend = mode_ == Mode::Replay ? BackendKind::Replay : BackendKind::Cache;
      return hit->response;
    }
    if (mode_ == Mode::Replay) throw ReplayMiss(key, req.tag);
  }
  CompletionResponse resp;
  {
    in_flight_.acquire();
    struct Release {
      std::counting_semaphore<1024>& s;
      ~Release() { s.release(); }
    } release{in_flight_};
    ++backend_calls_;
    resp = backend_->complete(req);
  }
  if (cache_) cache_->store(req, resp);
  return resp;
}

}  // namespace symbcot::llm
