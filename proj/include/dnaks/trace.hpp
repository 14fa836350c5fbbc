#pragma once

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

namespace dnaks {

/// One record per machine operation.
struct TraceEvent {
  std::uint64_t step = 0;
  std::string op;
  std::vector<std::string> tubes;
  std::string param;
  std::uint64_t matched = 0;
  std::uint64_t residual = 0;
};

class TraceSink {
public:
  virtual ~TraceSink() = default;
  virtual void on_event(const TraceEvent& event) = 0;
};

/// Writes one JSON object per line with fields
/// (step, op, tubes, param, matched, residual) in that order.
class JsonlFileSink final : public TraceSink {
public:
  explicit JsonlFileSink(const std::string& path);
  void on_event(const TraceEvent& event) override;

private:
  std::ofstream out_;
};

/// In-memory sink for tests.
class CollectingSink final : public TraceSink {
public:
  void on_event(const TraceEvent& event) override { events_.push_back(event); }
  const std::vector<TraceEvent>& events() const { return events_; }

private:
  std::vector<TraceEvent> events_;
};

}  // namespace dnaks
