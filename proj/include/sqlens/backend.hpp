#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <mutex>
#include <string>
#include <vector>

namespace sqlens {

/// Contract for text completion models. Implementations must be safe for
/// concurrent calls.
class CompletionBackend {
 public:
  virtual ~CompletionBackend() = default;

  /// Returns the raw completion text. Throws BackendError once the
  /// implementation has exhausted its own retries.
  virtual std::string complete(const std::string& prompt, double temperature,
                               int max_tokens) = 0;

  virtual std::string name() const = 0;
};

/// Deterministic scripted backend for tests and offline runs.
///
/// Resolution order per call: the first keyed rule whose needles all appear
/// in the prompt, then the ordered response queue, then the default response.
/// A rule's response list is consumed front to back and its last entry
/// repeats once exhausted. With nothing left to say it throws BackendError.
class MockBackend : public CompletionBackend {
 public:
  MockBackend() = default;

  /// Ordered mode: responses handed out first-in first-out.
  void push_response(std::string response);

  /// Keyed mode: responds when every needle occurs in the prompt.
  void add_rule(std::vector<std::string> needles, std::vector<std::string> responses);

  void set_default_response(std::string response);

  std::string complete(const std::string& prompt, double temperature,
                       int max_tokens) override;
  std::string name() const override { return "mock"; }

  struct Call {
    std::string prompt;
    double temperature;
  };
  std::vector<Call> calls() const;
  std::size_t call_count() const;

 private:
  struct Rule {
    std::vector<std::string> needles;
    std::deque<std::string> responses;
  };

  mutable std::mutex mu_;
  std::vector<Rule> rules_;
  std::deque<std::string> queue_;
  bool has_default_ = false;
  std::string default_response_;
  std::vector<Call> calls_;
};

/// Adapts a function into a backend; handy for fault-injection tests.
class CallbackBackend : public CompletionBackend {
 public:
  using Fn = std::function<std::string(const std::string& prompt, double temperature)>;
  explicit CallbackBackend(Fn fn) : fn_(std::move(fn)) {}

  std::string complete(const std::string& prompt, double temperature, int) override {
    return fn_(prompt, temperature);
  }
  std::string name() const override { return "callback"; }

 private:
  Fn fn_;
};

struct HttpBackendConfig {
  std::string endpoint;  // scheme://host[:port]
  std::string path = "/v1/chat/completions";
  std::string model;
  std::string api_key;       // resolved from the environment by the caller
  int max_retries = 3;       // transient failures retried with capped backoff
  int connect_timeout_s = 10;
  int read_timeout_s = 300;
};

/// OpenAI-style chat-completions client over HTTP(S).
class HttpBackend : public CompletionBackend {
 public:
  explicit HttpBackend(HttpBackendConfig config) : config_(std::move(config)) {}

  std::string complete(const std::string& prompt, double temperature,
                       int max_tokens) override;
  std::string name() const override { return "remote:" + config_.model; }

 private:
  HttpBackendConfig config_;
};

/// Contract for text embedding models used by value re-ranking.
class EmbeddingBackend {
 public:
  virtual ~EmbeddingBackend() = default;
  virtual std::vector<float> embed(const std::string& text) = 0;
  virtual std::string name() const = 0;
};

/// Offline default embedder: signed feature hashing of character trigrams.
/// Deterministic for a fixed seed, so retrieval tests are reproducible.
class HashingEmbedder : public EmbeddingBackend {
 public:
  explicit HashingEmbedder(int dim = 256, std::uint64_t seed = 0x5eed)
      : dim_(dim), seed_(seed) {}

  std::vector<float> embed(const std::string& text) override;
  std::string name() const override { return "hashing"; }

 private:
  int dim_;
  std::uint64_t seed_;
};

double cosine_similarity(const std::vector<float>& a, const std::vector<float>& b);

}  // namespace sqlens
