#include "lep/errors.hpp"

#include <sstream>

namespace lep {

std::string format_path(const NodePath& path) {
  if (path.empty()) return "root";
  std::ostringstream os;
  os << "root";
  for (auto i : path) os << '.' << i;
  return os.str();
}

namespace {

std::string join(const std::set<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += ", ";
    out += s;
  }
  return out;
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::set<std::string> expected, const std::string& detail)
    : Error("parse error at offset " + std::to_string(offset) + ": " + detail +
            (expected.empty() ? std::string() : " (expected one of: " + join(expected) + ")")),
      offset_(offset),
      expected_(std::move(expected)) {}

CheckError::CheckError(NodePath path, std::string schema, std::string found)
    : Error("check failed at " + format_path(path) + ": expected " + schema + ", found " + found),
      path_(std::move(path)),
      schema_(std::move(schema)),
      found_(std::move(found)) {}

}  // namespace lep
