#include "archimax/log.hpp"

#include <cstdlib>
#include <iostream>
#include <mutex>
#include <string>

namespace archimax::log {

namespace {

Level parse_level(const char* raw) {
  if (raw == nullptr) return Level::Warn;
  const std::string v(raw);
  if (v == "error" || v == "0") return Level::Error;
  if (v == "warn" || v == "1") return Level::Warn;
  if (v == "info" || v == "2") return Level::Info;
  if (v == "debug" || v == "3") return Level::Debug;
  return Level::Warn;
}

constexpr const char* tag(Level level) {
  switch (level) {
    case Level::Error: return "error";
    case Level::Warn: return "warn";
    case Level::Info: return "info";
    case Level::Debug: return "debug";
  }
  return "?";
}

}  // namespace

Level threshold() {
  static const Level level = parse_level(std::getenv("ARCHIMAX_LOG"));
  return level;
}

void write(Level level, std::string_view message) {
  if (static_cast<int>(level) > static_cast<int>(threshold())) return;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  std::cerr << "[archimax " << tag(level) << "] " << message << '\n';
}

}  // namespace archimax::log
