#pragma once

// Minimal checker for the DOT subset we emit:
//   digraph { stmt* }   stmt := ID [ '[' ID '=' ID ']' ] ';'  |  ID '->' ID ';'
// ID is an identifier, a number or a double-quoted string. Returns the node and edge counts.

#include <cctype>
#include <optional>
#include <string>
#include <vector>

namespace dotcheck {

struct Counts {
  std::size_t nodes = 0;
  std::size_t edges = 0;
};

inline std::optional<std::vector<std::string>> lex(const std::string& s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '"') {
      std::size_t j = i + 1;
      while (j < s.size() && s[j] != '"') j += s[j] == '\\' ? 2 : 1;
      if (j >= s.size()) return std::nullopt;
      out.push_back(s.substr(i, j - i + 1));
      i = j + 1;
    } else if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
      out.push_back("->");
      i += 2;
    } else if (std::string("{}[]=;,").find(c) != std::string::npos) {
      out.push_back(std::string(1, c));
      ++i;
    } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back(s.substr(i, j - i));
      i = j;
    } else {
      return std::nullopt;
    }
  }
  return out;
}

inline bool is_id(const std::string& t) {
  if (t.empty()) return false;
  if (t.front() == '"') return true;
  if (std::isdigit(static_cast<unsigned char>(t.front())))
    return t.find_first_not_of("0123456789") == std::string::npos;
  return std::isalpha(static_cast<unsigned char>(t.front())) || t.front() == '_';
}

inline std::optional<Counts> check(const std::string& text) {
  auto toks = lex(text);
  if (!toks) return std::nullopt;
  const auto& t = *toks;
  std::size_t i = 0;
  auto at = [&](std::size_t k) -> std::string { return k < t.size() ? t[k] : std::string(); };
  if (at(i++) != "digraph") return std::nullopt;
  if (at(i++) != "{") return std::nullopt;
  Counts c;
  while (at(i) != "}") {
    if (!is_id(at(i))) return std::nullopt;
    if (at(i + 1) == "->") {
      if (!is_id(at(i + 2)) || at(i + 3) != ";") return std::nullopt;
      ++c.edges;
      i += 4;
      continue;
    }
    ++i;
    if (at(i) == "[") {
      ++i;
      while (at(i) != "]") {
        if (!is_id(at(i)) || at(i + 1) != "=" || !is_id(at(i + 2))) return std::nullopt;
        i += 3;
        if (at(i) == ",") ++i;
      }
      ++i;
    }
    if (at(i++) != ";") return std::nullopt;
    ++c.nodes;
  }
  if (i + 1 != t.size()) return std::nullopt;
  return c;
}

}  // namespace dotcheck
