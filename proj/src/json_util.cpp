#include "risadapt/json_util.hpp"

#include <cstdint>
#include <cstdio>
#include <stdexcept>

namespace risadapt {
namespace {

void append_double(std::string& out, double v) {
  if (!std::isfinite(v))
    throw std::invalid_argument("dump_json: non-finite number is not representable in JSON");
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

void dump(const Json& j, std::string& out, int indent, int depth) {
  auto newline = [&](int d) {
    if (indent >= 0) {
      out += '\n';
      out.append(static_cast<std::size_t>(indent * d), ' ');
    }
  };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        break;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += Json(it.key()).dump();
        out += indent >= 0 ? ": " : ":";
        dump(it.value(), out, indent, depth + 1);
      }
      newline(depth);
      out += '}';
      break;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        break;
      }
      out += '[';
      bool first = true;
      for (const auto& item : j) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        dump(item, out, indent, depth + 1);
      }
      newline(depth);
      out += ']';
      break;
    }
    case Json::value_t::number_float:
      append_double(out, j.get<double>());
      break;
    default:
      out += j.dump();  // strings, ints, bools, null
      break;
  }
}

}  // namespace

std::string dump_json(const Json& j, int indent) {
  std::string out;
  dump(j, out, indent, 0);
  if (indent >= 0) out += '\n';
  return out;
}

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace risadapt
