#ifndef DISMANTLE_LABEL_HPP
#define DISMANTLE_LABEL_HPP

// Canonical labels for vertex / element / simplex types.
//
// Every object in the library is templated on the type of its elements.
// Labels give each element type a canonical JSON rendering; the string form
// of that rendering is what appears in text formats, certificates and
// digests.  Built-in support: integers, strings, Name, std::vector and
// std::pair of supported types.  Other types (morphisms, indexing
// functions) add a `label_json` overload found by ADL.

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace dismantle {

using json = nlohmann::json;

/// Vertex name read from a text file.  Names that spell an integer order
/// numerically ("2" < "10") and come before all other names.
class Name {
 public:
  Name() = default;
  Name(std::string s) : text_(std::move(s)) { parse_number(); }  // NOLINT
  Name(const char* s) : Name(std::string(s)) {}                  // NOLINT
  explicit Name(long long v) : Name(std::to_string(v)) {}

  const std::string& str() const noexcept { return text_; }

  friend bool operator==(const Name& a, const Name& b) {
    return a.text_ == b.text_;
  }

  friend std::strong_ordering operator<=>(const Name& a, const Name& b) {
    if (a.numeric_ != b.numeric_) {
      return a.numeric_ ? std::strong_ordering::less
                        : std::strong_ordering::greater;
    }
    if (a.numeric_ && a.value_ != b.value_) return a.value_ <=> b.value_;
    return a.text_ <=> b.text_;
  }

 private:
  void parse_number() {
    numeric_ = false;
    if (text_.empty()) return;
    const char* first = text_.data();
    const char* last = first + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value_);
    numeric_ = (ec == std::errc() && ptr == last);
  }

  std::string text_;
  long long value_ = 0;
  bool numeric_ = false;
};

inline json label_json(const Name& n) { return n.str(); }
inline json label_json(const std::string& s) { return s; }
inline json label_json(int v) { return std::to_string(v); }
inline json label_json(long v) { return std::to_string(v); }
inline json label_json(long long v) { return std::to_string(v); }
inline json label_json(unsigned v) { return std::to_string(v); }
inline json label_json(unsigned long v) { return std::to_string(v); }
inline json label_json(unsigned long long v) { return std::to_string(v); }

template <class T>
json label_json(const std::vector<T>& items);

template <class A, class B>
json label_json(const std::pair<A, B>& p) {
  return json::array({label_json(p.first), label_json(p.second)});
}

template <class T>
json label_json(const std::vector<T>& items) {
  json out = json::array();
  for (const auto& item : items) out.push_back(label_json(item));
  return out;
}

/// String form of a label: plain text for scalar labels, compact JSON
/// otherwise.  Never contains whitespace.
template <class T>
std::string label(const T& value) {
  json j = label_json(value);
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

inline std::uint64_t fnv1a(std::string_view bytes,
                           std::uint64_t h = 0xcbf29ce484222325ULL) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Order-independent digest of a set of canonical lines.
inline std::string digest_lines(std::vector<std::string> lines) {
  std::sort(lines.begin(), lines.end());
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& line : lines) {
    h = fnv1a(line, h);
    h = fnv1a("\n", h);
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace dismantle

#endif  // DISMANTLE_LABEL_HPP
