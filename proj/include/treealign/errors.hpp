#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace treealign {

// Malformed corpus input. byte_offset points at the offending byte in the
// source file (source size for end-of-input errors).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source_id, std::size_t byte_offset, const std::string& message)
      : std::runtime_error(source_id + ": byte " + std::to_string(byte_offset) + ": " + message),
        source_id_(std::move(source_id)),
        byte_offset_(byte_offset) {}

  const std::string& source_id() const { return source_id_; }
  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::string source_id_;
  std::size_t byte_offset_;
};

class IoError : public std::runtime_error {
 public:
  IoError(std::string path, const std::string& message)
      : std::runtime_error(path + ": " + message), path_(std::move(path)) {}

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace treealign
