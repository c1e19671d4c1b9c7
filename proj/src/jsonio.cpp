#include "grouppack/jsonio.hpp"

namespace gp {

Json parse_json_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Errc::parse, "malformed JSON");
  return j;
}

Json big_to_json(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<int64_t>::min();
  static const BigInt hi = std::numeric_limits<int64_t>::max();
  if (v >= lo && v <= hi) return Json(static_cast<int64_t>(v));
  return Json(v.str());
}

BigInt big_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<int64_t>());
  if (j.is_number_unsigned()) return BigInt(j.get<uint64_t>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    require(!s.empty(), Errc::parse, "empty integer literal");
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    require(i < s.size(), Errc::parse, "sign without digits: " + s);
    for (; i < s.size(); ++i)
      require(s[i] >= '0' && s[i] <= '9', Errc::parse, "bad integer literal: " + s);
    return BigInt(s);
  }
  fail(Errc::parse, "expected an integer (number or decimal string), got " + j.dump());
}

}  // namespace gp
