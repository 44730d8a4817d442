// Copyright (c) 2026 the dslab authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dslab {

// Walks a text buffer line by line, skipping blank lines and '#' comments.
class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  // Returns the next payload line, or throws naming the missing item.
  std::string next_line(const std::string& what) {
    while (pos_ < text_.size()) {
      std::size_t end = text_.find('\n', pos_);
      if (end == std::string_view::npos) end = text_.size();
      std::string_view line = text_.substr(pos_, end - pos_);
      pos_ = end + 1;
      std::size_t start = line.find_first_not_of(" \t\r");
      if (start == std::string_view::npos || line[start] == '#') continue;
      std::size_t stop = line.find_last_not_of(" \t\r");
      return std::string(line.substr(start, stop - start + 1));
    }
    throw std::invalid_argument("unexpected end of input while reading " + what);
  }

  bool at_end() {
    std::size_t save = pos_;
    try {
      next_line("");
    } catch (const std::invalid_argument&) {
      return true;
    }
    pos_ = save;
    return false;
  }

  void expect_end(const std::string& what) {
    if (!at_end()) throw std::invalid_argument("trailing content after " + what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// True when the stream has no tokens left.
inline bool at_line_end(std::istream& in) {
  std::string rest;
  return !(in >> rest);
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << content;
  if (!out) throw std::invalid_argument("write failed: " + path);
}

}  // namespace dslab
