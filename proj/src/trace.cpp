#include "dnaks/trace.hpp"

#include <json.hpp>

#include "dnaks/error.hpp"

namespace dnaks {

JsonlFileSink::JsonlFileSink(const std::string& path) : out_(path, std::ios::trunc) {
  if (!out_) throw Error(ErrorCode::Io, "cannot open trace file '" + path + "'");
}

void JsonlFileSink::on_event(const TraceEvent& event) {
  nlohmann::ordered_json j;
  j["step"] = event.step;
  j["op"] = event.op;
  j["tubes"] = event.tubes;
  j["param"] = event.param;
  j["matched"] = event.matched;
  j["residual"] = event.residual;
  out_ << j.dump() << '\n';
}

}  // namespace dnaks
