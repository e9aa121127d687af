#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace lep {

// Child indices from the root of a derivation down to a node.
using NodePath = std::vector<std::size_t>;

std::string format_path(const NodePath& path);

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::set<std::string> expected, const std::string& detail);

  std::size_t offset() const { return offset_; }
  const std::set<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::set<std::string> expected_;
};

class CheckError : public Error {
 public:
  CheckError(NodePath path, std::string schema, std::string found);

  const NodePath& path() const { return path_; }
  const std::string& schema() const { return schema_; }
  const std::string& found() const { return found_; }

 private:
  NodePath path_;
  std::string schema_;
  std::string found_;
};

// A stp-c was given more than one stoup formula.
class StoupOverflow : public Error {
 public:
  using Error::Error;
};

class ComposeError : public Error {
 public:
  using Error::Error;
};

class SplitError : public Error {
 public:
  using Error::Error;
};

class NoRedex : public Error {
 public:
  using Error::Error;
};

// Normalization exceeded its step ceiling.
class LoopGuard : public Error {
 public:
  using Error::Error;
};

class SearchBound : public Error {
 public:
  using Error::Error;
};

}  // namespace lep
